//! Reduction calculus: melons, dipoles, ladders, schemes, cuts, and flips.

pub mod build;
pub mod cuts;
pub mod dipole;
pub mod ladder;
pub mod melon;
pub mod scheme;
pub mod splice;

pub use cuts::{flip, is_2pi, two_edge_connection, two_edge_cuts};
pub use dipole::{contract_dipole, find_dipoles, ContractionReport, Dipole, DipoleKind, NonSeparatingClass};
pub use ladder::{contract_ladder, maximal_ladders, Ladder, LadderKind};
pub use melon::{core_of, core_of_with, find_melons, insert_melon, is_melon_free, remove_melon, Melon};
pub use scheme::{rebuild_ladder_with, scheme_of, LadderAnnotation, SchemeFile, SchemeGraph};
