//! Canonical forms for oriented maps.
//!
//! A code is the minimum, over all root darts, of a breadth-first relabeling
//! trace recording the rotation successor and edge partner of every dart plus
//! the root direction bit. Two maps get equal codes exactly when some
//! relabeling (vertex permutation plus even rotation shifts) carries one to
//! the other, which is the direction-preserving map isomorphism.

use crate::error::{Error, Result};
use crate::map::{is_out, rot_next, OrientedMap};
use serde::{Deserialize, Serialize};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CanonicalCode(pub Vec<u32>);

impl std::fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "code:{}", self.hex())
    }
}

impl CanonicalCode {
    pub fn hex(&self) -> String {
        use std::fmt::Write;
        let mut s = String::new();
        for w in &self.0 {
            let _ = write!(s, "{w:x}.");
        }
        s.pop();
        s
    }

    pub fn parse_hex(text: &str) -> Result<CanonicalCode> {
        let mut words = Vec::new();
        for part in text.split('.') {
            let w = u32::from_str_radix(part, 16)
                .map_err(|_| Error::CorruptEntry(format!("bad code word {part:?}")))?;
            words.push(w);
        }
        Ok(CanonicalCode(words))
    }
}

/// Relabeling trace from a fixed root dart. The trace alone identifies the
/// rooted map: equal traces mean an isomorphism sending root to root.
pub fn rooted_trace(map: &OrientedMap, root: usize) -> Vec<u32> {
    let n = map.dart_count();
    let mut label = vec![u32::MAX; n];
    let mut order = Vec::with_capacity(n);
    label[root] = 0;
    order.push(root);
    let mut next = 1u32;
    let mut i = 0;
    while i < order.len() {
        let d = order[i];
        for nb in [rot_next(d), map.alpha(d)] {
            if label[nb] == u32::MAX {
                label[nb] = next;
                next += 1;
                order.push(nb);
            }
        }
        i += 1;
    }
    debug_assert_eq!(order.len(), n, "trace requires a connected map");
    let mut trace = Vec::with_capacity(2 * n + 1);
    trace.push(is_out(root) as u32);
    for &d in &order {
        trace.push(label[rot_next(d)]);
        trace.push(label[map.alpha(d)]);
    }
    trace
}

fn min_trace(map: &OrientedMap) -> Vec<u32> {
    let mut best: Option<Vec<u32>> = None;
    for root in 0..map.dart_count() {
        let t = rooted_trace(map, root);
        if best.as_ref().map_or(true, |b| t < *b) {
            best = Some(t);
        }
    }
    best.expect("empty dart set")
}

/// Canonical code of a connected map under direction-preserving isomorphism.
pub fn canonical_code(map: &OrientedMap) -> Result<CanonicalCode> {
    if map.is_cycle_graph() {
        return Ok(CanonicalCode(vec![u32::MAX]));
    }
    if !map.is_connected() {
        return Err(Error::Disconnected(map.component_count()));
    }
    Ok(CanonicalCode(min_trace(map)))
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CodeFlags {
    /// Quotient by the global arrow flip.
    pub mod_orientation: bool,
    /// Quotient by the mirror image.
    pub mod_reflection: bool,
}

impl CodeFlags {
    pub const EXACT: CodeFlags = CodeFlags { mod_orientation: false, mod_reflection: false };
    pub const SHADOW: CodeFlags = CodeFlags { mod_orientation: true, mod_reflection: true };
}

pub fn canonical_code_with(map: &OrientedMap, flags: CodeFlags) -> Result<CanonicalCode> {
    if map.is_cycle_graph() {
        return Ok(CanonicalCode(vec![u32::MAX]));
    }
    if !map.is_connected() {
        return Err(Error::Disconnected(map.component_count()));
    }
    let mut variants = vec![map.clone()];
    if flags.mod_orientation {
        variants.push(map.reverse_all_arrows());
    }
    if flags.mod_reflection {
        for m in variants.clone() {
            variants.push(m.mirror());
        }
    }
    let code = variants.into_iter().map(|m| min_trace(&m)).min().unwrap();
    Ok(CanonicalCode(code))
}

/// The representative with canonical dart labels: relabeling any isomorphic
/// map yields the identical struct.
///
/// Vertices are renumbered by first visit of the minimal-trace traversal and
/// every vertex is shifted by the even amount that puts its first-visited
/// dart at slot 0 or 1 according to its direction.
pub fn canonical_form(map: &OrientedMap) -> Result<OrientedMap> {
    if map.is_cycle_graph() {
        return Ok(map.clone());
    }
    if !map.is_connected() {
        return Err(Error::Disconnected(map.component_count()));
    }
    let n = map.dart_count();
    let mut best: Option<(Vec<u32>, usize)> = None;
    for root in 0..n {
        let t = rooted_trace(map, root);
        if best.as_ref().map_or(true, |(b, _)| t < *b) {
            best = Some((t, root));
        }
    }
    let root = best.unwrap().1;

    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    seen[root] = true;
    order.push(root);
    let mut vertex_map = vec![usize::MAX; map.vertex_count()];
    let mut shifts = vec![0usize; map.vertex_count()];
    let mut next_vertex = 0usize;
    let mut i = 0;
    while i < order.len() {
        let d = order[i];
        let v = d / 4;
        if vertex_map[v] == usize::MAX {
            vertex_map[v] = next_vertex;
            next_vertex += 1;
            // Even shift landing the first-visited dart on slot 0 or 1.
            shifts[v] = (4 - (d % 4 & 2)) & 3;
        }
        for nb in [rot_next(d), map.alpha(d)] {
            if !seen[nb] {
                seen[nb] = true;
                order.push(nb);
            }
        }
        i += 1;
    }
    let out = map.relabel(&vertex_map, &shifts);
    debug_assert_eq!(min_trace(&out), rooted_trace(map, root));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::map::samples::*;

    #[test]
    fn infinity_variants_are_distinct_but_reflective() {
        let a = canonical_code(&infinity()).unwrap();
        let b = canonical_code(&infinity_crossed()).unwrap();
        assert_ne!(a, b);
        let fa = canonical_code_with(&infinity(), CodeFlags { mod_reflection: true, ..CodeFlags::EXACT }).unwrap();
        let fb = canonical_code_with(&infinity_crossed(), CodeFlags { mod_reflection: true, ..CodeFlags::EXACT }).unwrap();
        assert_eq!(fa, fb);
    }

    #[test]
    fn reverse_of_infinity_is_crossed_infinity() {
        let rev = infinity().reverse_all_arrows();
        assert_eq!(
            canonical_code(&rev).unwrap(),
            canonical_code(&infinity_crossed()).unwrap()
        );
    }

    #[test]
    fn relabeled_necklace_has_one_code() {
        let m = necklace(3);
        let base = canonical_code(&m).unwrap();
        for rot in 0..3usize {
            let vm: Vec<usize> = (0..3).map(|v| (v + rot) % 3).collect();
            let relabeled = m.relabel(&vm, &[0, 2, 0]);
            relabeled.validate().unwrap();
            assert_eq!(canonical_code(&relabeled).unwrap(), base);
        }
    }

    #[test]
    fn canonical_form_is_idempotent_and_code_stable() {
        for m in [infinity(), vacuum_melon(), double_tadpole(), necklace(4)] {
            let c = canonical_form(&m).unwrap();
            assert_eq!(canonical_code(&c).unwrap(), canonical_code(&m).unwrap());
            assert_eq!(canonical_form(&c).unwrap(), c);
        }
    }

    #[test]
    fn code_round_trips_through_hex() {
        let c = canonical_code(&necklace(3)).unwrap();
        assert_eq!(CanonicalCode::parse_hex(&c.hex()).unwrap(), c);
    }
}
