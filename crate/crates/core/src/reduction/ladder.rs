//! Ladders: chains of rail-connected dipoles, their maximal extensions, and
//! ladder contraction.

use super::dipole::{ContractionReport, Dipole, DipoleKind, NonSeparatingClass};
use super::melon::core_of;
use super::splice::splice_out;
use crate::error::{Error, Result};
use crate::map::OrientedMap;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum LadderKind {
    Ne,
    No,
    L,
    R,
    B,
}

impl LadderKind {
    /// Fewest rungs realizing the kind.
    pub fn minimal_rungs(&self) -> usize {
        match self {
            LadderKind::Ne | LadderKind::L | LadderKind::R | LadderKind::B => 2,
            LadderKind::No => 3,
        }
    }

    pub fn minimal_composition(&self) -> Vec<DipoleKind> {
        match self {
            LadderKind::Ne => vec![DipoleKind::N; 2],
            LadderKind::No => vec![DipoleKind::N; 3],
            LadderKind::L => vec![DipoleKind::L; 2],
            LadderKind::R => vec![DipoleKind::R; 2],
            LadderKind::B => vec![DipoleKind::N, DipoleKind::L],
        }
    }

    fn of_composition(kinds: &[DipoleKind]) -> LadderKind {
        let first = kinds[0];
        if kinds.iter().any(|&k| k != first) {
            return LadderKind::B;
        }
        match first {
            DipoleKind::N => {
                if kinds.len() % 2 == 0 {
                    LadderKind::Ne
                } else {
                    LadderKind::No
                }
            }
            DipoleKind::L => LadderKind::L,
            DipoleKind::R => LadderKind::R,
        }
    }
}

impl std::fmt::Display for LadderKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            LadderKind::Ne => "Ne",
            LadderKind::No => "No",
            LadderKind::L => "L",
            LadderKind::R => "R",
            LadderKind::B => "B",
        };
        write!(f, "{s}")
    }
}

#[derive(Debug, Clone)]
pub struct Ladder {
    pub rungs: Vec<Dipole>,
    pub kind: LadderKind,
    /// Closed chains rail back onto themselves and have no free sides.
    pub closed: bool,
    /// Free side of the first rung (meaningless when closed).
    pub side_a: (usize, usize),
    /// Free side of the last rung.
    pub side_b: (usize, usize),
}

impl Ladder {
    pub fn vertices(&self) -> Vec<usize> {
        let mut v: Vec<usize> =
            self.rungs.iter().flat_map(|r| [r.vertices.0, r.vertices.1]).collect();
        v.sort_unstable();
        v
    }

    pub fn composition(&self) -> Vec<DipoleKind> {
        self.rungs.iter().map(|r| r.kind).collect()
    }

    pub fn is_minimal(&self) -> bool {
        match self.kind {
            LadderKind::B => self.rungs.len() == 2,
            k => self.rungs.len() == k.minimal_rungs(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
enum Side {
    A,
    B,
}

fn side_darts(d: &Dipole, s: Side) -> (usize, usize) {
    match s {
        Side::A => d.side_a,
        Side::B => d.side_b,
    }
}

/// Maximal ladders of a connected map, greedy side-to-side extension of every
/// dipole. Distinct maximal ladders never share vertices.
pub fn maximal_ladders(map: &OrientedMap, dipoles: &[Dipole]) -> Vec<Ladder> {
    // Rail adjacency: both darts of one side pair exactly onto one side of
    // another (vertex-disjoint) dipole.
    let mut link: BTreeMap<(usize, Side), (usize, Side)> = BTreeMap::new();
    for (i, di) in dipoles.iter().enumerate() {
        for (j, dj) in dipoles.iter().enumerate() {
            if i == j || shares_vertex(di, dj) {
                continue;
            }
            for si in [Side::A, Side::B] {
                for sj in [Side::A, Side::B] {
                    let (x1, x2) = side_darts(di, si);
                    let (y1, y2) = side_darts(dj, sj);
                    let image = [map.alpha(x1), map.alpha(x2)];
                    if image.contains(&y1) && image.contains(&y2) {
                        let prev = link.insert((i, si), (j, sj));
                        assert!(
                            prev.is_none() || prev == Some((j, sj)),
                            "side railed to two different dipoles"
                        );
                    }
                }
            }
        }
    }

    let mut used = vec![false; dipoles.len()];
    let mut ladders = Vec::new();
    // Open chains first: start from a dipole with a free side.
    for start in 0..dipoles.len() {
        if used[start] {
            continue;
        }
        let free_side = [Side::A, Side::B]
            .into_iter()
            .find(|&s| !link.contains_key(&(start, s)));
        let Some(first_free) = free_side else { continue };
        // Walk from the free side through rails.
        let mut chain = vec![(start, first_free)];
        used[start] = true;
        let mut cur = start;
        let mut entry = first_free;
        while let Some(&(next, next_entry)) = link.get(&(cur, other(entry))) {
            assert!(!used[next], "rail chain revisited a dipole");
            used[next] = true;
            chain.push((next, next_entry));
            cur = next;
            entry = next_entry;
        }
        if chain.len() < 2 {
            continue;
        }
        let rungs: Vec<Dipole> = chain.iter().map(|&(i, _)| dipoles[i].clone()).collect();
        let kinds: Vec<DipoleKind> = rungs.iter().map(|r| r.kind).collect();
        let side_a = side_darts(&dipoles[chain[0].0], chain[0].1);
        let last = *chain.last().unwrap();
        let side_b = side_darts(&dipoles[last.0], other(last.1));
        ladders.push(Ladder {
            kind: LadderKind::of_composition(&kinds),
            rungs,
            closed: false,
            side_a,
            side_b,
        });
    }
    // Remaining linked dipoles sit on closed chains.
    for start in 0..dipoles.len() {
        if used[start] || !link.contains_key(&(start, Side::A)) {
            continue;
        }
        let mut chain = vec![(start, Side::A)];
        used[start] = true;
        let (mut cur, mut entry) = (start, Side::A);
        loop {
            let &(next, next_entry) = link.get(&(cur, other(entry))).expect("closed chain rail");
            if next == start {
                break;
            }
            assert!(!used[next], "closed chain revisited a dipole");
            used[next] = true;
            chain.push((next, next_entry));
            cur = next;
            entry = next_entry;
        }
        let rungs: Vec<Dipole> = chain.iter().map(|&(i, _)| dipoles[i].clone()).collect();
        let kinds: Vec<DipoleKind> = rungs.iter().map(|r| r.kind).collect();
        let side_a = side_darts(&dipoles[start], Side::A);
        let side_b = side_darts(&dipoles[start], Side::B);
        ladders.push(Ladder {
            kind: LadderKind::of_composition(&kinds),
            rungs,
            closed: true,
            side_a,
            side_b,
        });
    }

    // A two-rung closed chain of straight rungs reads two ways (the rail
    // bigons chain as well); the readings cover the same vertices and the
    // same kind, so keep the first per vertex set.
    let mut kept: Vec<Ladder> = Vec::new();
    for ladder in ladders {
        if let Some(prev) = kept.iter().find(|p| p.vertices() == ladder.vertices()) {
            assert_eq!(prev.kind, ladder.kind, "conflicting ladder readings");
            assert_eq!(prev.closed, ladder.closed, "conflicting ladder readings");
            continue;
        }
        kept.push(ladder);
    }
    // Distinct maximal ladders must not share vertices.
    let mut seen = BTreeMap::new();
    for (i, ladder) in kept.iter().enumerate() {
        for v in ladder.vertices() {
            if let Some(j) = seen.insert(v, i) {
                panic!("maximal ladders {j} and {i} share vertex {v}");
            }
        }
    }
    kept
}

fn other(s: Side) -> Side {
    match s {
        Side::A => Side::B,
        Side::B => Side::A,
    }
}

fn shares_vertex(a: &Dipole, b: &Dipole) -> bool {
    let (u, w) = a.vertices;
    b.vertices.0 == u || b.vertices.0 == w || b.vertices.1 == u || b.vertices.1 == w
}

/// Contracts a whole maximal ladder in one step: all rung vertices go, each
/// free side's attachments are joined. This equals one rung contraction plus
/// melonic removals, so genus, grade, and degree follow the dipole case
/// table while the face counts absorb the melon cleanup.
pub fn contract_ladder(
    map: &OrientedMap,
    ladder: &Ladder,
) -> Result<(Vec<OrientedMap>, ContractionReport)> {
    if ladder.closed {
        return Err(Error::NotALadderVertex);
    }
    let before = map.invariants()?;
    let comps = splice_out(map, &ladder.vertices(), &[ladder.side_a, ladder.side_b]);
    let report = classify_ladder(ladder.kind, &before, &comps)?;
    Ok((comps.into_iter().map(|c| core_of(&c)).collect(), report))
}

fn classify_ladder(
    kind: LadderKind,
    before: &crate::map::InvariantSet,
    comps: &[OrientedMap],
) -> Result<ContractionReport> {
    let inv: Vec<crate::map::InvariantSet> =
        comps.iter().map(|c| c.invariants()).collect::<Result<_>>()?;
    let sum = |f: fn(&crate::map::InvariantSet) -> usize| inv.iter().map(f).sum::<usize>() as i64;
    let d_genus = sum(|i| i.genus) - before.genus as i64;
    let d_grade = sum(|i| i.grade) - before.grade as i64;
    let d_degree = sum(|i| i.degree_x2) - before.degree_x2 as i64;
    let d_phi = sum(|i| i.straight_faces) - before.straight_faces as i64;
    let d_faces = sum(|i| i.faces) - before.faces as i64;
    let separating = comps.len() == 2;
    let (sigma, class) = if separating {
        assert_eq!(d_genus, 0, "separating ladder contraction must split the genus");
        assert_eq!(d_grade, 0, "separating ladder contraction must split the grade");
        assert_eq!(d_degree, 0);
        (None, None)
    } else {
        match kind {
            LadderKind::Ne | LadderKind::No => {
                assert_eq!(d_genus, -1);
                assert_eq!(d_grade % 2, 0);
                let sigma = -1 - d_grade / 2;
                assert!((-1..=1).contains(&sigma), "grade delta out of range for a straight ladder");
                assert_eq!(d_degree, -2 * (sigma + 2));
                let class = match sigma {
                    -1 => NonSeparatingClass::Connecting,
                    0 => NonSeparatingClass::Rearranging,
                    _ => NonSeparatingClass::Splitting,
                };
                (Some(sigma), Some(class))
            }
            LadderKind::L | LadderKind::R => {
                let sigma = -d_grade - 3;
                assert!(sigma == -1 || sigma == 1, "grade delta out of range for a side ladder");
                assert_eq!(d_genus, -(sigma + 1) / 2);
                assert_eq!(d_degree, -2 * (sigma + 2));
                let class = if sigma == -1 {
                    NonSeparatingClass::Connecting
                } else {
                    NonSeparatingClass::Splitting
                };
                (Some(sigma), Some(class))
            }
            LadderKind::B => {
                assert_eq!(d_genus, -1, "broken ladder contraction must drop the genus by one");
                assert_eq!(d_grade, -4, "broken ladder contraction must drop the grade by four");
                assert_eq!(d_degree, -6);
                (None, None)
            }
        }
    };
    Ok(ContractionReport {
        kind: match kind {
            LadderKind::L => DipoleKind::L,
            LadderKind::R => DipoleKind::R,
            _ => DipoleKind::N,
        },
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
    use crate::reduction::build::{capped_chain, closed_chain, insert_chain};
    use crate::reduction::dipole::find_dipoles;
    use crate::map::samples;

    fn ladders_of(map: &OrientedMap) -> Vec<Ladder> {
        maximal_ladders(map, &find_dipoles(map))
    }

    #[test]
    fn two_rail_connected_n_rungs_form_an_even_ladder() {
        // Two n-rungs chained inside an otherwise plain host.
        let host = samples::infinity();
        let edges: Vec<usize> = host.edges().collect();
        let m = insert_chain(&host, edges[0], edges[1], &[DipoleKind::N, DipoleKind::N]);
        let ladders = ladders_of(&m);
        assert_eq!(ladders.len(), 1);
        assert_eq!(ladders[0].kind, LadderKind::Ne);
        assert!(!ladders[0].closed);
    }

    #[test]
    fn three_n_rungs_form_one_odd_ladder() {
        let host = samples::infinity();
        let edges: Vec<usize> = host.edges().collect();
        let m = insert_chain(&host, edges[0], edges[1], &[DipoleKind::N; 3]);
        let ladders = ladders_of(&m);
        assert_eq!(ladders.len(), 1);
        assert_eq!(ladders[0].kind, LadderKind::No);
        assert_eq!(ladders[0].rungs.len(), 3);
    }

    #[test]
    fn mixed_rungs_form_a_broken_ladder() {
        let host = samples::infinity();
        let edges: Vec<usize> = host.edges().collect();
        let m = insert_chain(&host, edges[0], edges[1], &[DipoleKind::L, DipoleKind::N]);
        let ladders = ladders_of(&m);
        assert_eq!(ladders.len(), 1);
        assert_eq!(ladders[0].kind, LadderKind::B);
    }

    #[test]
    fn closed_chain_is_detected_as_closed() {
        let m = closed_chain(&[DipoleKind::N, DipoleKind::N]);
        let ladders = ladders_of(&m);
        assert_eq!(ladders.len(), 1);
        assert!(ladders[0].closed);
        assert_eq!(ladders[0].kind, LadderKind::Ne);
    }

    #[test]
    fn capped_single_rung_is_not_a_ladder() {
        let m = capped_chain(&[DipoleKind::L]);
        assert!(ladders_of(&m).is_empty());
    }

    #[test]
    fn ladder_contraction_matches_dipole_case_table() {
        let host = samples::infinity();
        let edges: Vec<usize> = host.edges().collect();
        let m = insert_chain(&host, edges[0], edges[1], &[DipoleKind::N; 2]);
        let ladders = ladders_of(&m);
        let before = m.invariants().unwrap();
        let (comps, report) = contract_ladder(&m, &ladders[0]).unwrap();
        assert_eq!(report.d_genus, -1);
        assert_eq!(comps.len(), 1);
        let after = comps[0].invariants().unwrap();
        assert_eq!(after.genus + 1, before.genus);
    }
}
