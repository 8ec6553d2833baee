//! Construction of rung chains and the splice operations that insert them
//! into maps. These are the building blocks for ladder normalization and for
//! the scheme generator.

use crate::map::OrientedMap;
use super::dipole::DipoleKind;

/// Boundary darts of a freshly built chain. `a_in`/`b_in` are the chain's
/// ingoing darts (they pair with outside outgoing darts), `a_out`/`b_out`
/// the outgoing ones.
#[derive(Debug, Clone, Copy)]
pub struct ChainSlots {
    pub a_in: usize,
    pub a_out: usize,
    pub b_in: usize,
    pub b_out: usize,
}

/// Appends `kinds.len()` rungs as fresh vertex pairs starting at
/// `first_vertex`, wiring rung edges and the rails between consecutive
/// rungs. Returns the free boundary slots.
pub fn append_chain(alpha: &mut Vec<usize>, first_vertex: usize, kinds: &[DipoleKind]) -> ChainSlots {
    assert!(!kinds.is_empty());
    let needed = 4 * (first_vertex + 2 * kinds.len());
    if alpha.len() < needed {
        alpha.resize(needed, usize::MAX);
    }
    let pair = |alpha: &mut Vec<usize>, a: usize, b: usize| {
        debug_assert_eq!(a % 2 == 0, b % 2 != 0, "edge must join out with in");
        alpha[a] = b;
        alpha[b] = a;
    };
    let mut sides: Vec<ChainSlots> = Vec::new();
    for (i, kind) in kinds.iter().enumerate() {
        let u = 4 * (first_vertex + 2 * i);
        let w = u + 4;
        let slots = match kind {
            DipoleKind::N => {
                pair(alpha, u, w + 1);
                pair(alpha, u + 2, w + 3);
                ChainSlots { a_in: u + 1, a_out: w, b_in: u + 3, b_out: w + 2 }
            }
            DipoleKind::L => {
                pair(alpha, u, w + 1);
                pair(alpha, w + 2, u + 3);
                ChainSlots { a_in: u + 1, a_out: w, b_in: w + 3, b_out: u + 2 }
            }
            DipoleKind::R => {
                pair(alpha, w, u + 1);
                pair(alpha, w + 1, u);
                ChainSlots { a_in: w + 3, a_out: u + 2, b_in: u + 3, b_out: w + 2 }
            }
        };
        sides.push(slots);
    }
    for i in 0..kinds.len() - 1 {
        let (b, a) = (sides[i], sides[i + 1]);
        pair(alpha, b.b_out, a.a_in);
        pair(alpha, a.a_out, b.b_in);
    }
    ChainSlots {
        a_in: sides[0].a_in,
        a_out: sides[0].a_out,
        b_in: sides[kinds.len() - 1].b_in,
        b_out: sides[kinds.len() - 1].b_out,
    }
}

/// Standalone closed chain: the last rung rails back onto the first.
pub fn closed_chain(kinds: &[DipoleKind]) -> OrientedMap {
    let mut alpha = Vec::new();
    let slots = append_chain(&mut alpha, 0, kinds);
    alpha[slots.b_out] = slots.a_in;
    alpha[slots.a_in] = slots.b_out;
    alpha[slots.a_out] = slots.b_in;
    alpha[slots.b_in] = slots.a_out;
    OrientedMap::from_alpha(2 * kinds.len(), alpha).expect("closed chain")
}

/// Standalone chain with both boundary sides capped by an arc.
pub fn capped_chain(kinds: &[DipoleKind]) -> OrientedMap {
    let mut alpha = Vec::new();
    let slots = append_chain(&mut alpha, 0, kinds);
    alpha[slots.a_out] = slots.a_in;
    alpha[slots.a_in] = slots.a_out;
    alpha[slots.b_out] = slots.b_in;
    alpha[slots.b_in] = slots.b_out;
    OrientedMap::from_alpha(2 * kinds.len(), alpha).expect("capped chain")
}

/// Cuts two distinct edges and reconnects them through a fresh chain, side a
/// across the first cut and side b across the second.
pub fn insert_chain(map: &OrientedMap, edge_a: usize, edge_b: usize, kinds: &[DipoleKind]) -> OrientedMap {
    assert_ne!(edge_a, edge_b);
    let v = map.vertex_count();
    let mut alpha = map.raw_alpha().to_vec();
    let slots = append_chain(&mut alpha, v, kinds);
    let (p, q) = (edge_a, map.alpha(edge_a));
    let (r, s) = (edge_b, map.alpha(edge_b));
    for (x, y) in [(p, slots.a_in), (slots.a_out, q), (r, slots.b_in), (slots.b_out, s)] {
        alpha[x] = y;
        alpha[y] = x;
    }
    OrientedMap::from_alpha(v + 2 * kinds.len(), alpha).expect("chain insertion")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PendantVariant {
    /// Edge absorbed by side a, side b capped by an arc.
    CapB,
    /// Edge absorbed by side b, side a capped.
    CapA,
    /// Edge split across the two sides, remaining slots joined a-to-b.
    CrossAB,
    CrossBA,
}

/// Cuts one edge twice: the chain hangs off a single edge of the map.
pub fn insert_chain_pendant(
    map: &OrientedMap,
    edge: usize,
    kinds: &[DipoleKind],
    variant: PendantVariant,
) -> OrientedMap {
    let v = map.vertex_count();
    let mut alpha = map.raw_alpha().to_vec();
    let slots = append_chain(&mut alpha, v, kinds);
    let (p, q) = (edge, map.alpha(edge));
    let joins: [(usize, usize); 3] = match variant {
        PendantVariant::CapB => [(p, slots.a_in), (slots.a_out, q), (slots.b_out, slots.b_in)],
        PendantVariant::CapA => [(p, slots.b_in), (slots.b_out, q), (slots.a_out, slots.a_in)],
        PendantVariant::CrossAB => [(p, slots.a_in), (slots.b_out, q), (slots.a_out, slots.b_in)],
        PendantVariant::CrossBA => [(p, slots.b_in), (slots.a_out, q), (slots.b_out, slots.a_in)],
    };
    for (x, y) in joins {
        alpha[x] = y;
        alpha[y] = x;
    }
    OrientedMap::from_alpha(v + 2 * kinds.len(), alpha).expect("pendant insertion")
}

/// Joins two maps through a fresh chain cutting one edge of each; the chain
/// separates the result by construction.
pub fn connect_with_chain(
    left: &OrientedMap,
    edge_left: usize,
    right: &OrientedMap,
    edge_right: usize,
    kinds: &[DipoleKind],
) -> OrientedMap {
    let (v1, v2) = (left.vertex_count(), right.vertex_count());
    let mut alpha = left.raw_alpha().to_vec();
    let offset = 4 * v1;
    alpha.extend(right.raw_alpha().iter().map(|&d| d + offset));
    let slots = append_chain(&mut alpha, v1 + v2, kinds);
    let (p, q) = (edge_left, left.alpha(edge_left));
    let (r, s) = (edge_right + offset, right.alpha(edge_right) + offset);
    for (x, y) in [(p, slots.a_in), (slots.a_out, q), (r, slots.b_in), (slots.b_out, s)] {
        alpha[x] = y;
        alpha[y] = x;
    }
    OrientedMap::from_alpha(v1 + v2 + 2 * kinds.len(), alpha).expect("separating insertion")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::map::samples;

    #[test]
    fn capped_single_n_rung_is_the_vacuum_melon() {
        let m = capped_chain(&[DipoleKind::N]);
        let inv = m.invariants().unwrap();
        assert_eq!((inv.genus, inv.grade), (0, 0));
    }

    #[test]
    fn closed_single_n_rung_is_the_twisted_closure() {
        let m = closed_chain(&[DipoleKind::N]);
        let inv = m.invariants().unwrap();
        assert_eq!((inv.genus, inv.grade), (1, 2));
    }

    #[test]
    fn closed_double_n_chain_has_genus_one_grade_zero() {
        let m = closed_chain(&[DipoleKind::N, DipoleKind::N]);
        let inv = m.invariants().unwrap();
        assert_eq!((inv.genus, inv.grade), (1, 0));
        assert_eq!(inv.loop_config, vec![2, 2, 2, 2]);
    }

    #[test]
    fn closed_single_l_rung_is_the_double_tadpole() {
        let m = closed_chain(&[DipoleKind::L]);
        let inv = m.invariants().unwrap();
        assert_eq!((inv.genus, inv.grade), (0, 2));
        assert_eq!(inv.loop_config, vec![4]);
        // Capping instead of closing folds the rung into a vacuum melon.
        let capped = capped_chain(&[DipoleKind::L]);
        assert_eq!(capped.invariants().unwrap().degree_x2, 0);
    }

    #[test]
    fn closed_double_l_chain_is_planar_grade_two() {
        let m = closed_chain(&[DipoleKind::L, DipoleKind::L]);
        let inv = m.invariants().unwrap();
        assert_eq!((inv.genus, inv.grade), (0, 2));
        assert_eq!(inv.vertices, 4);
    }

    #[test]
    fn chain_insertion_grows_the_map() {
        let m = samples::infinity();
        let edges: Vec<usize> = m.edges().collect();
        let bigger = insert_chain(&m, edges[0], edges[1], &[DipoleKind::N]);
        bigger.validate().unwrap();
        assert_eq!(bigger.vertex_count(), 3);
    }
}
