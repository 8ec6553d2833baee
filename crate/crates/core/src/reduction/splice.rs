//! Vertex-set surgery. Removing a region leaves boundary strands dangling;
//! wires say which boundary darts are joined through the removed region.
//! Wire chains that close on themselves become cycle-graph components.

use crate::map::{is_out, vertex_of, OrientedMap, UnionFind};
use std::collections::BTreeMap;

/// Removes `vertices` from a map. Every removed dart must either be paired
/// inside the removed region (its edge vanishes) or appear on exactly one
/// wire. Returns the connected components of the result.
pub fn splice_out(
    map: &OrientedMap,
    vertices: &[usize],
    wires: &[(usize, usize)],
) -> Vec<OrientedMap> {
    let n = map.dart_count();
    let mut removed = vec![false; map.vertex_count()];
    for &v in vertices {
        removed[v] = true;
    }
    let is_removed = |d: usize| removed[vertex_of(d)];

    let mut wire_partner: BTreeMap<usize, usize> = BTreeMap::new();
    for &(a, b) in wires {
        assert!(is_removed(a) && is_removed(b), "wires must pair removed darts");
        assert_ne!(is_out(a), is_out(b), "wires must pair opposite directions");
        assert!(wire_partner.insert(a, b).is_none());
        assert!(wire_partner.insert(b, a).is_none());
    }

    // Resolve chains from each outside dart whose partner was removed.
    let mut new_pairs: Vec<(usize, usize)> = Vec::new();
    let mut visited_wire_dart: BTreeMap<usize, bool> = BTreeMap::new();
    for d in wire_partner.keys() {
        visited_wire_dart.insert(*d, false);
    }
    for x in 0..n {
        if is_removed(x) || !is_removed(map.alpha(x)) || !is_out(x) {
            continue;
        }
        let mut p = map.alpha(x);
        loop {
            assert!(
                wire_partner.contains_key(&p),
                "boundary dart {p} of the removed region is not wired"
            );
            visited_wire_dart.insert(p, true);
            let q = wire_partner[&p];
            visited_wire_dart.insert(q, true);
            let y = map.alpha(q);
            if !is_removed(y) {
                new_pairs.push((x, y));
                break;
            }
            p = y;
        }
    }
    // Also resolve chains whose outside endpoint is an ingoing dart only if
    // it was not already handled from the outgoing end.
    for x in 0..n {
        if is_removed(x) || !is_removed(map.alpha(x)) || is_out(x) {
            continue;
        }
        if new_pairs.iter().any(|&(_, b)| b == x) {
            continue;
        }
        let mut p = map.alpha(x);
        loop {
            visited_wire_dart.insert(p, true);
            let q = wire_partner[&p];
            visited_wire_dart.insert(q, true);
            let y = map.alpha(q);
            if !is_removed(y) {
                new_pairs.push((y, x));
                break;
            }
            p = y;
        }
    }

    // Unvisited wires close into free loops.
    let mut closed_loops = 0usize;
    let mut pending: Vec<usize> =
        visited_wire_dart.iter().filter(|(_, &v)| !v).map(|(&d, _)| d).collect();
    while let Some(start) = pending.pop() {
        if visited_wire_dart[&start] {
            continue;
        }
        let mut p = start;
        loop {
            visited_wire_dart.insert(p, true);
            let q = wire_partner[&p];
            visited_wire_dart.insert(q, true);
            let y = map.alpha(q);
            assert!(is_removed(y), "wire chain escaped the removed region");
            if y == start {
                break;
            }
            p = y;
        }
        closed_loops += 1;
    }

    // Rebuild the surviving map.
    let mut vertex_map = vec![usize::MAX; map.vertex_count()];
    let mut kept = 0usize;
    for v in 0..map.vertex_count() {
        if !removed[v] {
            vertex_map[v] = kept;
            kept += 1;
        }
    }
    let relabel = |d: usize| 4 * vertex_map[vertex_of(d)] + (d & 3);
    let mut alpha = vec![usize::MAX; 4 * kept];
    for d in 0..n {
        let a = map.alpha(d);
        if !is_removed(d) && !is_removed(a) {
            alpha[relabel(d)] = relabel(a);
        }
    }
    for &(x, y) in &new_pairs {
        alpha[relabel(x)] = relabel(y);
        alpha[relabel(y)] = relabel(x);
    }

    let mut components = split_components(kept, alpha);
    for _ in 0..closed_loops {
        components.push(OrientedMap::cycle_graph());
    }
    components
}

/// Splits a (possibly disconnected) pairing into connected component maps.
pub fn split_components(v: usize, alpha: Vec<usize>) -> Vec<OrientedMap> {
    if v == 0 {
        return Vec::new();
    }
    let mut uf = UnionFind::new(v);
    for d in 0..4 * v {
        uf.union(vertex_of(d), vertex_of(alpha[d]));
    }
    let mut group_index: BTreeMap<usize, usize> = BTreeMap::new();
    let mut group_vertex_count: Vec<usize> = Vec::new();
    let mut vertex_map = vec![usize::MAX; v];
    for vtx in 0..v {
        let root = uf.find(vtx);
        let g = *group_index.entry(root).or_insert_with(|| {
            group_vertex_count.push(0);
            group_vertex_count.len() - 1
        });
        vertex_map[vtx] = group_vertex_count[g];
        group_vertex_count[g] += 1;
    }
    let mut alphas: Vec<Vec<usize>> =
        group_vertex_count.iter().map(|&c| vec![usize::MAX; 4 * c]).collect();
    for d in 0..4 * v {
        let g = group_index[&uf.find(vertex_of(d))];
        let relabel = |x: usize| 4 * vertex_map[vertex_of(x)] + (x & 3);
        alphas[g][relabel(d)] = relabel(alpha[d]);
    }
    alphas
        .into_iter()
        .zip(group_vertex_count)
        .map(|(a, c)| OrientedMap::from_alpha(c, a).expect("splice produced an invalid component"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::map::samples;

    #[test]
    fn removing_everything_through_one_wire_leaves_a_cycle() {
        // The vacuum melon with its closing edge treated as the wire.
        let m = samples::vacuum_melon();
        let comps = splice_out(&m, &[0, 1], &[(0, 5)]);
        assert_eq!(comps.len(), 1);
        assert!(comps[0].is_cycle_graph());
    }

    #[test]
    fn split_keeps_connected_map_whole() {
        let m = samples::necklace(3);
        let comps = split_components(3, m.raw_alpha().to_vec());
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].invariants().unwrap().grade, 3);
    }
}
