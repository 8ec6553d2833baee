//! Elementary melonic two-point subgraphs: recognition, insertion, removal,
//! and reduction to the melon-free core.

use super::splice::splice_out;
use crate::error::{Error, Result};
use crate::map::{is_out, vertex_of, OrientedMap};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Melon {
    pub vertices: (usize, usize),
    /// The three internal edges, by outgoing dart.
    pub edges: [usize; 3],
    /// Free darts at each vertex, opposite directions.
    pub free: (usize, usize),
}

/// All vertex pairs joined by exactly three edges whose free darts point in
/// opposite directions and whose removal leaves genus, grade, and degree
/// unchanged. The invariant check rejects twisted three-edge subgraphs.
pub fn find_melons(map: &OrientedMap) -> Vec<Melon> {
    if map.is_cycle_graph() || map.vertex_count() < 2 {
        return Vec::new();
    }
    let base = match map.invariants() {
        Ok(inv) => inv,
        Err(_) => return Vec::new(),
    };
    let mut out = Vec::new();
    for u in 0..map.vertex_count() {
        for w in u + 1..map.vertex_count() {
            let joining: Vec<usize> =
                (4 * u..4 * u + 4).filter(|&du| vertex_of(map.alpha(du)) == w).collect();
            // Three joining edges leave one free dart at each vertex; four
            // joining edges (a closed two-point graph) let any one edge play
            // the free pair.
            let candidates: Vec<(Vec<usize>, (usize, usize))> = match joining.len() {
                3 => {
                    let f_u = (4 * u..4 * u + 4).find(|d| !joining.contains(d)).unwrap();
                    let f_w = (4 * w..4 * w + 4)
                        .find(|&dw| vertex_of(map.alpha(dw)) != u)
                        .unwrap();
                    vec![(joining.clone(), (f_u, f_w))]
                }
                4 => joining
                    .iter()
                    .map(|&f_u| {
                        let internal: Vec<usize> =
                            joining.iter().copied().filter(|&d| d != f_u).collect();
                        (internal, (f_u, map.alpha(f_u)))
                    })
                    .collect(),
                _ => continue,
            };
            for (internal, (f_u, f_w)) in candidates {
                if is_out(f_u) == is_out(f_w) {
                    continue;
                }
                let comps = splice_out(map, &[u, w], &[(f_u, f_w)]);
                if comps.len() != 1 {
                    continue;
                }
                let inv = match comps[0].invariants() {
                    Ok(i) => i,
                    Err(_) => continue,
                };
                if inv.genus != base.genus || inv.grade != base.grade {
                    continue;
                }
                let mut edges = [0usize; 3];
                for (slot, &d) in internal.iter().enumerate() {
                    edges[slot] = map.edge_of(d);
                }
                out.push(Melon { vertices: (u, w), edges, free: (f_u, f_w) });
                // A four-edge pair is a whole vacuum component; its free-edge
                // choices all describe the same melon.
                break;
            }
        }
    }
    out
}

pub fn remove_melon(map: &OrientedMap, melon: &Melon) -> Result<OrientedMap> {
    let (u, w) = melon.vertices;
    let mut comps = splice_out(map, &[u, w], &[melon.free]);
    if comps.len() != 1 {
        return Err(Error::NotAMelon(u, w));
    }
    Ok(comps.pop().unwrap())
}

/// Replaces an edge by an elementary melonic two-point subgraph, respecting
/// the edge direction. On the cycle graph this produces the vacuum melon.
pub fn insert_melon(map: &OrientedMap, edge: usize) -> OrientedMap {
    let v = map.vertex_count();
    let (u, w) = (v, v + 1);
    let du = |l: usize| 4 * u + l;
    let dw = |l: usize| 4 * w + l;
    let mut alpha = map.raw_alpha().to_vec();
    alpha.resize(4 * (v + 2), usize::MAX);
    let mut pair = |a: usize, b: usize| {
        alpha[a] = b;
        alpha[b] = a;
    };
    pair(du(1), dw(0));
    pair(du(2), dw(3));
    pair(du(3), dw(2));
    if map.is_cycle_graph() {
        pair(du(0), dw(1));
    } else {
        let p = edge;
        let q = map.alpha(p);
        pair(p, dw(1));
        pair(q, du(0));
    }
    OrientedMap::from_alpha(v + 2, alpha).expect("melon insertion built an invalid map")
}

/// Iterates melon removal to a fixed point, always removing the first melon
/// in vertex order. The result is independent of the removal order.
pub fn core_of(map: &OrientedMap) -> OrientedMap {
    core_of_with(map, |_| 0)
}

/// Same as [`core_of`] but with an explicit melon selector, used to exercise
/// order independence.
pub fn core_of_with(map: &OrientedMap, mut pick: impl FnMut(&[Melon]) -> usize) -> OrientedMap {
    let mut current = map.clone();
    loop {
        let melons = find_melons(&current);
        if melons.is_empty() {
            return current;
        }
        let idx = pick(&melons).min(melons.len() - 1);
        current = remove_melon(&current, &melons[idx]).expect("found melon must remove");
    }
}

pub fn is_melon_free(map: &OrientedMap) -> bool {
    find_melons(map).is_empty()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonical_code;
    use crate::map::samples;

    #[test]
    fn vacuum_melon_round_trip() {
        let cycle = OrientedMap::cycle_graph();
        let vac = insert_melon(&cycle, 0);
        assert_eq!(
            canonical_code(&vac).unwrap(),
            canonical_code(&samples::vacuum_melon()).unwrap()
        );
        let melons = find_melons(&vac);
        assert_eq!(melons.len(), 1);
        let back = remove_melon(&vac, &melons[0]).unwrap();
        assert!(back.is_cycle_graph());
    }

    #[test]
    fn infinity_graph_is_melon_free() {
        assert!(find_melons(&samples::infinity()).is_empty());
    }

    #[test]
    fn twisted_closure_is_not_a_melon() {
        assert!(find_melons(&samples::vacuum_twisted()).is_empty());
    }

    #[test]
    fn insertion_preserves_invariants() {
        for m in [samples::infinity(), samples::necklace(3), samples::double_tadpole()] {
            let before = m.invariants().unwrap();
            for edge in m.edges() {
                let bigger = insert_melon(&m, edge);
                let after = bigger.invariants().unwrap();
                assert_eq!(after.genus, before.genus);
                assert_eq!(after.grade, before.grade);
                assert_eq!(after.degree_x2, before.degree_x2);
                assert_eq!(after.vertices, before.vertices + 2);
            }
        }
    }

    #[test]
    fn core_of_decorated_infinity_is_infinity() {
        let mut m = samples::infinity();
        for _ in 0..3 {
            let edge = m.edges().next().unwrap();
            m = insert_melon(&m, edge);
        }
        let core = core_of(&m);
        assert_eq!(
            canonical_code(&core).unwrap(),
            canonical_code(&samples::infinity()).unwrap()
        );
    }

    #[test]
    fn core_of_melonic_graph_is_cycle() {
        let mut m = OrientedMap::cycle_graph();
        for _ in 0..4 {
            let edge = m.edges().next().unwrap_or(0);
            m = insert_melon(&m, edge);
        }
        assert!(core_of(&m).is_cycle_graph());
    }
}
