//! Dipoles: two-edge subgraphs on two distinct vertices bounding a face of
//! length two in one of the three strand systems, together with their
//! contraction and the bookkeeping of how contraction moves the invariants.

use super::splice::splice_out;
use crate::error::{Error, Result};
use crate::map::{is_out, local_of, vertex_of, InvariantSet, OrientedMap};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum DipoleKind {
    N,
    L,
    R,
}

impl std::fmt::Display for DipoleKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            DipoleKind::N => write!(f, "N"),
            DipoleKind::L => write!(f, "L"),
            DipoleKind::R => write!(f, "R"),
        }
    }
}

/// A dipole with its canonical side split. Each side holds two external
/// darts, one ingoing and one outgoing; contraction joins each side's
/// attachments into a single edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dipole {
    pub kind: DipoleKind,
    pub vertices: (usize, usize),
    /// The two internal edges by outgoing dart.
    pub edges: (usize, usize),
    pub side_a: (usize, usize),
    pub side_b: (usize, usize),
}

impl Dipole {
    pub fn external_darts(&self) -> [usize; 4] {
        [self.side_a.0, self.side_a.1, self.side_b.0, self.side_b.1]
    }
}

fn slot(vertex: usize, local: usize) -> usize {
    4 * vertex + (local & 3)
}

/// All dipoles of a connected map. Length-two faces sitting on a single
/// vertex (tadpole bigons, as in the infinity graph) are not dipoles.
pub fn find_dipoles(map: &OrientedMap) -> Vec<Dipole> {
    if map.is_cycle_graph() {
        return Vec::new();
    }
    let faces = map.trace_faces().expect("valid map");
    let mut out = Vec::new();

    for sf in &faces.straight_faces {
        if sf.len() != 2 {
            continue;
        }
        // Pick the outgoing dart of the strand cycle as the anchor.
        let d = if is_out(sf.cycle[0]) { sf.cycle[0] } else { sf.cycle[1] };
        let a = map.alpha(d);
        let (u, w) = (vertex_of(d), vertex_of(a));
        if u == w {
            continue;
        }
        let (lam, mu) = (local_of(d), local_of(a));
        out.push(Dipole {
            kind: DipoleKind::N,
            vertices: (u, w),
            edges: (map.edge_of(d), map.edge_of(opposite_edge_dart(map, d))),
            side_a: (slot(u, lam + 1), slot(w, mu + 3)),
            side_b: (slot(u, lam + 3), slot(w, mu + 1)),
        });
    }

    for (cycles, kind) in [(&faces.l_faces, DipoleKind::L), (&faces.r_faces, DipoleKind::R)] {
        for cycle in cycles.iter().filter(|c| c.len() == 2) {
            let d = cycle[0].min(cycle[1]);
            let a = map.alpha(d);
            let (u, w) = (vertex_of(d), vertex_of(a));
            if u == w {
                continue;
            }
            let (lam, mu) = (local_of(d), local_of(a));
            out.push(Dipole {
                kind,
                vertices: (u, w),
                edges: (map.edge_of(d), map.edge_of(map.face_next(d))),
                side_a: (slot(u, lam + 1), slot(w, mu + 3)),
                side_b: (slot(u, lam + 2), slot(w, mu + 2)),
            });
        }
    }

    for dip in &out {
        debug_assert!(dipole_is_consistent(map, dip));
    }
    out.sort_by_key(|d| (d.vertices, d.kind, d.edges));
    out
}

fn opposite_edge_dart(map: &OrientedMap, d: usize) -> usize {
    // Second edge of an N-dipole anchored at d: the straight strand leaves
    // through the opposite dart at the far vertex.
    crate::map::opposite(map.alpha(d))
}

fn dipole_is_consistent(map: &OrientedMap, dip: &Dipole) -> bool {
    let ext = dip.external_darts();
    let internal = [dip.edges.0, map.alpha(dip.edges.0), dip.edges.1, map.alpha(dip.edges.1)];
    ext.iter().all(|d| !internal.contains(d))
        && is_out(dip.side_a.0) != is_out(dip.side_a.1)
        && is_out(dip.side_b.0) != is_out(dip.side_b.1)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum NonSeparatingClass {
    /// sigma = -1.
    Connecting,
    /// sigma = 0, straight-strand systems only.
    Rearranging,
    /// sigma = +1.
    Splitting,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContractionReport {
    pub kind: DipoleKind,
    pub separating: bool,
    pub sigma: Option<i64>,
    pub class: Option<NonSeparatingClass>,
    pub d_genus: i64,
    pub d_grade: i64,
    pub d_degree_x2: i64,
    pub d_straight_faces: i64,
    pub d_faces: i64,
}

/// Contracts a dipole: removes its two vertices and joins each side's
/// attachments. Returns the connected components and the delta report; the
/// deltas are checked against the contraction case table and any mismatch is
/// a hard error.
pub fn contract_dipole(
    map: &OrientedMap,
    dipole: &Dipole,
) -> Result<(Vec<OrientedMap>, ContractionReport)> {
    if map.is_cycle_graph() {
        return Err(Error::NotADipole);
    }
    let before = map.invariants()?;
    let (u, w) = dipole.vertices;
    let comps = splice_out(map, &[u, w], &[dipole.side_a, dipole.side_b]);
    let report = classify_contraction(dipole.kind, &before, &comps)?;
    Ok((comps, report))
}

pub fn classify_contraction(
    kind: DipoleKind,
    before: &InvariantSet,
    comps: &[OrientedMap],
) -> Result<ContractionReport> {
    let inv: Vec<InvariantSet> = comps
        .iter()
        .map(|c| c.invariants())
        .collect::<Result<_>>()?;
    let sum = |f: fn(&InvariantSet) -> usize| inv.iter().map(f).sum::<usize>() as i64;
    let d_genus = sum(|i| i.genus) - before.genus as i64;
    let d_grade = sum(|i| i.grade) - before.grade as i64;
    let d_degree = sum(|i| i.degree_x2) - before.degree_x2 as i64;
    let d_phi = sum(|i| i.straight_faces) - before.straight_faces as i64;
    let d_faces = sum(|i| i.faces) - before.faces as i64;

    let separating = comps.len() == 2;
    assert!(comps.len() == 1 || comps.len() == 2, "contraction changed components by more than one");

    let (sigma, class) = if separating {
        assert_eq!(d_genus, 0, "separating contraction must split the genus");
        assert_eq!(d_grade, 0, "separating contraction must split the grade");
        assert_eq!(d_phi, 0, "separating contraction must split the straight faces");
        assert_eq!(d_faces, 0, "separating contraction must split the faces");
        (None, None)
    } else {
        match kind {
            DipoleKind::N => {
                let sigma = d_phi + 1;
                assert!((-1..=1).contains(&sigma), "straight-face delta out of range");
                assert_eq!(d_genus, -1);
                assert_eq!(d_grade, -2 * (sigma + 1));
                assert_eq!(d_degree, -2 * (sigma + 2));
                let class = match sigma {
                    -1 => NonSeparatingClass::Connecting,
                    0 => NonSeparatingClass::Rearranging,
                    _ => NonSeparatingClass::Splitting,
                };
                (Some(sigma), Some(class))
            }
            DipoleKind::L | DipoleKind::R => {
                let sigma = d_faces + 1;
                assert!(sigma == -1 || sigma == 1, "face delta out of range");
                assert_eq!(d_genus, -(sigma + 1) / 2);
                assert_eq!(d_grade, -(sigma + 3));
                assert_eq!(d_degree, -2 * (sigma + 2));
                let class = if sigma == -1 {
                    NonSeparatingClass::Connecting
                } else {
                    NonSeparatingClass::Splitting
                };
                (Some(sigma), Some(class))
            }
        }
    };
    Ok(ContractionReport {
        kind,
        separating,
        sigma,
        class,
        d_genus,
        d_grade,
        d_degree_x2: d_degree,
        d_straight_faces: d_phi,
        d_faces,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::map::samples;

    #[test]
    fn melon_carries_all_three_dipole_kinds() {
        let dipoles = find_dipoles(&samples::vacuum_melon());
        let kinds: Vec<DipoleKind> = dipoles.iter().map(|d| d.kind).collect();
        assert!(kinds.contains(&DipoleKind::N));
        assert!(kinds.contains(&DipoleKind::L));
        assert!(kinds.contains(&DipoleKind::R));
    }

    #[test]
    fn infinity_graph_has_no_dipoles() {
        assert!(find_dipoles(&samples::infinity()).is_empty());
    }

    #[test]
    fn necklace_bigons_are_dipoles_of_one_kind() {
        let dipoles = find_dipoles(&samples::necklace(3));
        assert_eq!(dipoles.len(), 3);
        let kind = dipoles[0].kind;
        assert!(kind == DipoleKind::L || kind == DipoleKind::R);
        assert!(dipoles.iter().all(|d| d.kind == kind));
    }

    #[test]
    fn contracting_vacuum_melon_n_dipole_separates_into_two_cycles() {
        let m = samples::vacuum_melon();
        let dip = find_dipoles(&m)
            .into_iter()
            .find(|d| d.kind == DipoleKind::N)
            .unwrap();
        let (comps, report) = contract_dipole(&m, &dip).unwrap();
        assert!(report.separating);
        assert_eq!(comps.len(), 2);
        assert!(comps.iter().all(|c| c.is_cycle_graph()));
    }

    #[test]
    fn rearranging_contraction_of_twisted_closure_yields_cycle() {
        let m = samples::vacuum_twisted();
        let dips = find_dipoles(&m);
        let n_dip = dips.iter().find(|d| d.kind == DipoleKind::N).unwrap();
        let (comps, report) = contract_dipole(&m, n_dip).unwrap();
        assert!(!report.separating);
        assert_eq!(report.sigma, Some(0));
        assert_eq!(report.class, Some(NonSeparatingClass::Rearranging));
        assert_eq!(comps.len(), 1);
        assert!(comps[0].is_cycle_graph());
    }

    #[test]
    fn connecting_contraction_of_double_tadpole_yields_cycle() {
        let m = samples::double_tadpole();
        let dips = find_dipoles(&m);
        assert_eq!(dips.len(), 1);
        let (comps, report) = contract_dipole(&m, &dips[0]).unwrap();
        assert!(!report.separating);
        assert_eq!(report.sigma, Some(-1));
        assert_eq!(report.d_grade, -2);
        assert_eq!(comps.len(), 1);
        assert!(comps[0].is_cycle_graph());
    }

    #[test]
    fn contracting_necklace_bigon_lands_in_grade_one() {
        let m = samples::necklace(3);
        let dips = find_dipoles(&m);
        let (comps, report) = contract_dipole(&m, &dips[0]).unwrap();
        assert!(!report.separating);
        assert_eq!(report.sigma, Some(-1));
        assert_eq!(comps.len(), 1);
        let inv = comps[0].invariants().unwrap();
        assert_eq!((inv.genus, inv.grade), (0, 1));
    }
}
