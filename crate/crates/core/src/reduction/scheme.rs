//! Schemes: melon-free cores with every maximal ladder shrunk to the fewest
//! rungs realizing its kind. A scheme is the unit of classification; two
//! maps reduce to the same scheme exactly when they differ by melon and
//! ladder insertions.

use super::build::append_chain;
use super::dipole::{find_dipoles, DipoleKind};
use super::ladder::{maximal_ladders, Ladder, LadderKind};
use super::melon::core_of;
use crate::canon::{canonical_form, CanonicalCode};
use crate::error::{Error, Result};
use crate::io::MapFile;
use crate::map::{is_out, vertex_of, OrientedMap};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LadderAnnotation {
    pub vertices: Vec<usize>,
    pub kind: LadderKind,
    pub closed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchemeGraph {
    /// Canonically labeled minimal representative.
    pub representative: OrientedMap,
    pub ladders: Vec<LadderAnnotation>,
    pub code: CanonicalCode,
}

/// Reduces a connected map to its scheme: take the melon-free core, shrink
/// every maximal ladder to its kind's minimum, and canonicalize. Broken
/// ladders admit two attachment orders of their canonical two-rung
/// realization; the code minimum decides.
pub fn scheme_of(map: &OrientedMap) -> Result<SchemeGraph> {
    if !map.is_connected() {
        return Err(Error::Disconnected(map.component_count()));
    }
    let before = map.invariants()?;
    let mut core = core_of(map);
    // Shrink pass: one ladder at a time, melon cleanup in between.
    loop {
        if core.is_cycle_graph() {
            break;
        }
        let ladders = maximal_ladders(&core, &find_dipoles(&core));
        let Some(target) = ladders.iter().find(|l| needs_shrink(l)) else { break };
        core = rebuild_ladder(&core, target, false)?;
        core = core_of(&core);
    }
    if core.is_cycle_graph() {
        return Ok(SchemeGraph {
            representative: core,
            ladders: Vec::new(),
            code: CanonicalCode(vec![u32::MAX]),
        });
    }

    // Broken ladders admit two attachment orders of the canonical two-rung
    // realization. Close the candidate pool under single flips and take the
    // code minimum, which is independent of the realization we started from.
    let mut pool: Vec<SchemeGraph> = vec![canonical_candidate(&core)?];
    let mut frontier: Vec<OrientedMap> = vec![core];
    while let Some(current) = frontier.pop() {
        let all = maximal_ladders(&current, &find_dipoles(&current));
        for ladder in all.iter().filter(|l| l.kind == LadderKind::B && !l.closed) {
            // Rebuild in both attachment orders: this also canonicalizes the
            // rung order of the two-rung realization itself.
            for flipped in [false, true] {
                let mut variant = rebuild_ladder(&current, ladder, flipped)?;
                variant = core_of(&variant);
                let cand = canonical_candidate(&variant)?;
                if pool.iter().all(|p| p.code != cand.code) {
                    pool.push(cand);
                    frontier.push(variant);
                }
            }
        }
    }
    let best = pool.into_iter().min_by(|a, b| a.code.cmp(&b.code)).unwrap();

    let after = best.representative.invariants()?;
    assert_eq!(before.genus, after.genus, "scheme reduction changed the genus");
    assert_eq!(before.grade, after.grade, "scheme reduction changed the grade");
    Ok(best)
}

fn needs_shrink(l: &Ladder) -> bool {
    match l.kind {
        LadderKind::B => {
            l.rungs.len() != 2
                || !matches!(
                    l.composition().as_slice(),
                    [DipoleKind::N, DipoleKind::L] | [DipoleKind::L, DipoleKind::N]
                )
        }
        k => l.rungs.len() != k.minimal_rungs(),
    }
}

fn canonical_candidate(core: &OrientedMap) -> Result<SchemeGraph> {
    let rep = canonical_form(core)?;
    let ladders: Vec<LadderAnnotation> = maximal_ladders(&rep, &find_dipoles(&rep))
        .into_iter()
        .map(|l| LadderAnnotation { vertices: l.vertices(), kind: l.kind, closed: l.closed })
        .collect();
    let mut tags: Vec<Vec<u32>> = ladders
        .iter()
        .map(|a| {
            let mut t = vec![
                u32::MAX - 1,
                kind_tag(a.kind),
                a.closed as u32,
                a.vertices.len() as u32,
            ];
            t.extend(a.vertices.iter().map(|&v| v as u32));
            t
        })
        .collect();
    tags.sort();
    let mut code = crate::canon::canonical_code(&rep)?.0;
    for t in tags {
        code.extend(t);
    }
    Ok(SchemeGraph { representative: rep, ladders, code: CanonicalCode(code) })
}

fn kind_tag(k: LadderKind) -> u32 {
    match k {
        LadderKind::Ne => 0,
        LadderKind::No => 1,
        LadderKind::L => 2,
        LadderKind::R => 3,
        LadderKind::B => 4,
    }
}

/// Replaces a maximal ladder by the minimal realization of its kind,
/// reattached to the same four boundary edges. `flipped` swaps which end of
/// the fresh chain faces the old side a.
fn rebuild_ladder(map: &OrientedMap, ladder: &Ladder, flipped: bool) -> Result<OrientedMap> {
    let composition = if ladder.kind == LadderKind::B {
        vec![DipoleKind::N, DipoleKind::L]
    } else {
        ladder.kind.minimal_composition()
    };
    rebuild_ladder_with(map, ladder, &composition, flipped)
}

/// Replaces a maximal ladder by a chain of the given composition in place.
/// The caller is responsible for keeping the composition in the ladder's
/// class; the invariants are checked regardless.
pub fn rebuild_ladder_with(
    map: &OrientedMap,
    ladder: &Ladder,
    composition: &[DipoleKind],
    flipped: bool,
) -> Result<OrientedMap> {
    let before = map.invariants()?;
    let removed = ladder.vertices();
    let composition = composition.to_vec();

    if ladder.closed {
        assert_eq!(removed.len(), map.vertex_count(), "closed chain must fill its component");
        let rebuilt = super::build::closed_chain(&composition);
        let after = rebuilt.invariants()?;
        assert_eq!((before.genus, before.grade), (after.genus, after.grade),
            "closed chain normalization changed the invariants");
        return Ok(rebuilt);
    }

    let mut is_removed = vec![false; map.vertex_count()];
    for &v in &removed {
        is_removed[v] = true;
    }
    let mut vertex_map = vec![usize::MAX; map.vertex_count()];
    let mut kept = 0usize;
    for v in 0..map.vertex_count() {
        if !is_removed[v] {
            vertex_map[v] = kept;
            kept += 1;
        }
    }
    let relabel = |d: usize| 4 * vertex_map[vertex_of(d)] + (d & 3);

    let mut alpha = vec![usize::MAX; 4 * kept];
    for d in 0..map.dart_count() {
        let a = map.alpha(d);
        if !is_removed[vertex_of(d)] && !is_removed[vertex_of(a)] {
            alpha[relabel(d)] = relabel(a);
        }
    }
    let slots = append_chain(&mut alpha, kept, &composition);

    let (old_a, old_b) = if flipped {
        (ladder.side_b, ladder.side_a)
    } else {
        (ladder.side_a, ladder.side_b)
    };
    let split = |side: (usize, usize)| {
        if is_out(side.0) {
            (side.1, side.0)
        } else {
            (side.0, side.1)
        }
    };
    let (a_in_old, a_out_old) = split(old_a);
    let (b_in_old, b_out_old) = split(old_b);

    // New slot corresponding to each old boundary dart.
    let new_slot = |old: usize| -> usize {
        if old == a_in_old {
            slots.a_in
        } else if old == a_out_old {
            slots.a_out
        } else if old == b_in_old {
            slots.b_in
        } else {
            slots.b_out
        }
    };
    let pair = |alpha: &mut Vec<usize>, x: usize, y: usize| {
        alpha[x] = y;
        alpha[y] = x;
    };
    for old in [a_in_old, a_out_old, b_in_old, b_out_old] {
        let partner = map.alpha(old);
        if is_removed[vertex_of(partner)] {
            // Boundary darts joined to each other become an arc between the
            // corresponding fresh slots; wire it once.
            if old < partner {
                pair(&mut alpha, new_slot(old), new_slot(partner));
            }
        } else {
            pair(&mut alpha, relabel(partner), new_slot(old));
        }
    }

    let rebuilt = OrientedMap::from_alpha(kept + 2 * composition.len(), alpha)?;
    let after = rebuilt.invariants()?;
    assert_eq!((before.genus, before.grade), (after.genus, after.grade),
        "ladder normalization changed the invariants");
    Ok(rebuilt)
}

pub const SCHEME_FORMAT: &str = "odscheme-v1";

#[derive(Debug, Serialize, Deserialize)]
pub struct SchemeFile {
    pub format: String,
    pub representative: MapFile,
    pub ladders: Vec<LadderAnnotation>,
}

impl SchemeFile {
    pub fn from_scheme(s: &SchemeGraph) -> SchemeFile {
        SchemeFile {
            format: SCHEME_FORMAT.to_string(),
            representative: MapFile::from_map(&s.representative),
            ladders: s.ladders.clone(),
        }
    }

    pub fn into_scheme(self) -> Result<SchemeGraph> {
        if self.format != SCHEME_FORMAT {
            return Err(Error::FormatVersionMismatch {
                expected: SCHEME_FORMAT.to_string(),
                found: self.format,
            });
        }
        let map = self.representative.into_map()?;
        let scheme = scheme_of(&map)?;
        if scheme.ladders != self.ladders {
            return Err(Error::CorruptEntry("stored ladder annotations disagree".into()));
        }
        Ok(scheme)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::map::samples;
    use crate::reduction::build::insert_chain;
    use crate::reduction::melon::insert_melon;

    fn scheme_code(m: &OrientedMap) -> CanonicalCode {
        scheme_of(m).unwrap().code
    }

    #[test]
    fn melon_decorations_do_not_change_the_scheme() {
        let base = samples::infinity();
        let mut decorated = base.clone();
        for _ in 0..3 {
            let e = decorated.edges().next().unwrap();
            decorated = insert_melon(&decorated, e);
        }
        assert_eq!(scheme_code(&base), scheme_code(&decorated));
    }

    #[test]
    fn rung_counts_normalize_by_parity() {
        let host = samples::infinity();
        let edges: Vec<usize> = host.edges().collect();
        let with = |n: usize| insert_chain(&host, edges[0], edges[1], &vec![DipoleKind::N; n]);
        assert_eq!(scheme_code(&with(2)), scheme_code(&with(4)));
        assert_eq!(scheme_code(&with(3)), scheme_code(&with(5)));
        assert_ne!(scheme_code(&with(2)), scheme_code(&with(3)));
        assert_ne!(scheme_code(&with(1)), scheme_code(&with(3)));
    }

    #[test]
    fn broken_ladders_share_one_scheme() {
        let host = samples::infinity();
        let edges: Vec<usize> = host.edges().collect();
        let nl = insert_chain(&host, edges[0], edges[1], &[DipoleKind::N, DipoleKind::L]);
        let ln = insert_chain(&host, edges[0], edges[1], &[DipoleKind::L, DipoleKind::N]);
        let nr = insert_chain(&host, edges[0], edges[1], &[DipoleKind::N, DipoleKind::R]);
        let rl = insert_chain(&host, edges[0], edges[1], &[DipoleKind::R, DipoleKind::L]);
        let lnl = insert_chain(&host, edges[0], edges[1], &[DipoleKind::L, DipoleKind::N, DipoleKind::L]);
        let codes: std::collections::BTreeSet<CanonicalCode> =
            [&nl, &ln, &nr, &rl, &lnl].iter().map(|m| scheme_code(m)).collect();
        assert_eq!(codes.len(), 1, "all broken ladders must normalize to one scheme");
    }

    #[test]
    fn scheme_reduction_is_idempotent() {
        let host = samples::infinity();
        let edges: Vec<usize> = host.edges().collect();
        let m = insert_chain(&host, edges[0], edges[1], &[DipoleKind::N; 4]);
        let s = scheme_of(&m).unwrap();
        let again = scheme_of(&s.representative).unwrap();
        assert_eq!(s.code, again.code);
        assert_eq!(s.representative, again.representative);
    }

    #[test]
    fn closed_chain_lengths_normalize() {
        use crate::reduction::build::closed_chain;
        let two = closed_chain(&[DipoleKind::N; 2]);
        let four = closed_chain(&[DipoleKind::N; 4]);
        assert_eq!(scheme_code(&two), scheme_code(&four));
        let l2 = closed_chain(&[DipoleKind::L; 2]);
        let l3 = closed_chain(&[DipoleKind::L; 3]);
        assert_eq!(scheme_code(&l2), scheme_code(&l3));
    }

    #[test]
    fn scheme_file_round_trip() {
        let s = scheme_of(&samples::double_tadpole()).unwrap();
        let text = serde_json::to_string(&SchemeFile::from_scheme(&s)).unwrap();
        let parsed: SchemeFile = serde_json::from_str(&text).unwrap();
        assert_eq!(parsed.into_scheme().unwrap().code, s.code);
    }
}
