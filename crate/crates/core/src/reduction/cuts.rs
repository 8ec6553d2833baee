//! Two-edge cuts, two-particle irreducibility, and the flip operation.

use super::splice::split_components;
use crate::error::{Error, Result};
use crate::map::{vertex_of, OrientedMap, UnionFind};

/// All unordered pairs of edges whose removal disconnects the map.
pub fn two_edge_cuts(map: &OrientedMap) -> Vec<(usize, usize)> {
    if map.is_cycle_graph() || map.vertex_count() == 0 {
        return Vec::new();
    }
    let edges: Vec<usize> = map.edges().collect();
    let mut cuts = Vec::new();
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            if disconnects(map, edges[i], edges[j]) {
                cuts.push((edges[i], edges[j]));
            }
        }
    }
    cuts
}

fn disconnects(map: &OrientedMap, e1: usize, e2: usize) -> bool {
    let v = map.vertex_count();
    let mut uf = UnionFind::new(v);
    for d in map.edges() {
        if d == e1 || d == e2 {
            continue;
        }
        uf.union(vertex_of(d), vertex_of(map.alpha(d)));
    }
    uf.count() > 1
}

pub fn is_2pi(map: &OrientedMap) -> bool {
    if map.is_cycle_graph() {
        return true;
    }
    let edges: Vec<usize> = map.edges().collect();
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            if disconnects(map, edges[i], edges[j]) {
                return false;
            }
        }
    }
    true
}

/// Cuts both edges of a two-edge cut and rejoins the four half-edges the
/// other way. Genus, grade, and degree are additive over the two pieces.
pub fn flip(map: &OrientedMap, cut: (usize, usize)) -> Result<(OrientedMap, OrientedMap)> {
    let (e1, e2) = cut;
    if map.is_cycle_graph() || e1 == e2 {
        return Err(Error::NotACut);
    }
    let before = map.invariants()?;
    let (p, q) = (e1, map.alpha(e1));
    let (r, s) = (e2, map.alpha(e2));
    let mut alpha = map.raw_alpha().to_vec();
    alpha[p] = s;
    alpha[s] = p;
    alpha[r] = q;
    alpha[q] = r;
    let comps = split_components(map.vertex_count(), alpha);
    if comps.len() != 2 {
        return Err(Error::NotACut);
    }
    let a = comps[0].invariants()?;
    let b = comps[1].invariants()?;
    assert_eq!(a.genus + b.genus, before.genus, "flip must split the genus");
    assert_eq!(a.grade + b.grade, before.grade, "flip must split the grade");
    assert_eq!(a.degree_x2 + b.degree_x2, before.degree_x2);
    let mut it = comps.into_iter();
    Ok((it.next().unwrap(), it.next().unwrap()))
}

/// Inverse of the flip: cuts one edge in each map and joins the pieces
/// crosswise into one connected map.
pub fn two_edge_connection(
    left: &OrientedMap,
    edge_left: usize,
    right: &OrientedMap,
    edge_right: usize,
) -> Result<OrientedMap> {
    if left.is_cycle_graph() || right.is_cycle_graph() {
        return Err(Error::OrientationMismatch);
    }
    let (v1, v2) = (left.vertex_count(), right.vertex_count());
    let offset = 4 * v1;
    let mut alpha = left.raw_alpha().to_vec();
    alpha.extend(right.raw_alpha().iter().map(|&d| d + offset));
    let (p, q) = (edge_left, left.alpha(edge_left));
    let (r, s) = (edge_right + offset, right.alpha(edge_right) + offset);
    alpha[p] = s;
    alpha[s] = p;
    alpha[r] = q;
    alpha[q] = r;
    OrientedMap::from_alpha(v1 + v2, alpha)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonical_code;
    use crate::map::samples;

    #[test]
    fn infinity_graph_is_two_particle_irreducible() {
        assert!(is_2pi(&samples::infinity()));
        assert!(two_edge_cuts(&samples::infinity()).is_empty());
    }

    #[test]
    fn double_tadpole_is_reducible() {
        let cuts = two_edge_cuts(&samples::double_tadpole());
        assert_eq!(cuts.len(), 1);
    }

    #[test]
    fn connection_then_flip_round_trips() {
        let a = samples::infinity();
        let b = samples::infinity_crossed();
        let ea = a.edges().next().unwrap();
        let eb = b.edges().next().unwrap();
        let joined = two_edge_connection(&a, ea, &b, eb).unwrap();
        assert!(joined.is_connected());
        let cuts = two_edge_cuts(&joined);
        assert!(!cuts.is_empty());
        let (x, y) = flip(&joined, cuts[0]).unwrap();
        let mut got = vec![canonical_code(&x).unwrap(), canonical_code(&y).unwrap()];
        let mut want = vec![canonical_code(&a).unwrap(), canonical_code(&b).unwrap()];
        got.sort();
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn flip_rejects_non_cuts() {
        let m = samples::vacuum_melon();
        let edges: Vec<usize> = m.edges().collect();
        // The melon is two-particle irreducible apart from its side pairs;
        // try a pair that keeps it connected.
        let mut rejected = 0;
        for i in 0..edges.len() {
            for j in i + 1..edges.len() {
                if flip(&m, (edges[i], edges[j])).is_err() {
                    rejected += 1;
                }
            }
        }
        assert!(rejected > 0);
    }
}
