//! Library for oriented 4-regular embedded maps: strand-face invariants,
//! melon/dipole/ladder reductions, scheme enumeration by genus and grade, an
//! exhaustive small-map oracle, and the planar-map/alternating-knot bridge.

pub mod canon;
pub mod catalog;
pub mod error;
pub mod generation;
pub mod io;
pub mod knot;
pub mod map;
pub mod oracle;
pub mod reduction;
pub mod verify;

pub use canon::{canonical_code, canonical_code_with, canonical_form, CanonicalCode, CodeFlags};
pub use error::{Error, Result};
pub use map::{FaceReport, InvariantSet, OrientedMap, StraightFace, ValidationReport};
