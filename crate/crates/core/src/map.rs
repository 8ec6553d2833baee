//! Oriented 4-regular embedded maps.
//!
//! Darts are numbered `0..4v`; dart `d` sits at vertex `d / 4` in rotation
//! slot `d % 4`. The rotation at each vertex is the cyclic order of its four
//! slots, and a dart points out of its vertex exactly when its slot is even,
//! so the two outgoing half-edges sit opposite each other. The edge pairing
//! `alpha` is a fixed-point-free involution matching an outgoing dart with an
//! ingoing one.
//!
//! The vertex-free cycle graph is a tagged special value with conventional
//! counts (one edge, two faces, one straight face).

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OrientedMap {
    v: usize,
    alpha: Vec<usize>,
    cycle_graph: bool,
}

impl std::fmt::Debug for OrientedMap {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.cycle_graph {
            return write!(f, "OrientedMap(cycle)");
        }
        write!(f, "OrientedMap(v={}, alpha={:?})", self.v, self.edge_pairs())
    }
}

pub fn vertex_of(dart: usize) -> usize {
    dart / 4
}

pub fn local_of(dart: usize) -> usize {
    dart % 4
}

/// Outgoing darts sit at the even rotation slots.
pub fn is_out(dart: usize) -> bool {
    dart % 2 == 0
}

/// Next dart in the rotation at the same vertex.
pub fn rot_next(dart: usize) -> usize {
    (dart & !3) + ((dart + 1) & 3)
}

pub fn rot_prev(dart: usize) -> usize {
    (dart & !3) + ((dart + 3) & 3)
}

/// The dart across the vertex, two rotation slots away.
pub fn opposite(dart: usize) -> usize {
    (dart & !3) + ((dart + 2) & 3)
}

impl OrientedMap {
    /// Builds a map from an explicit edge pairing. Pairs may be given in
    /// either order; they must match outgoing with ingoing darts.
    pub fn from_pairs(v: usize, pairs: &[(usize, usize)]) -> Result<OrientedMap> {
        let n = 4 * v;
        let mut alpha = vec![usize::MAX; n];
        for &(a, b) in pairs {
            if a >= n || b >= n {
                return Err(Error::DanglingDart(a.max(b)));
            }
            if alpha[a] != usize::MAX || alpha[b] != usize::MAX || a == b {
                return Err(Error::InvalidInvolution(format!("pair ({a}, {b}) reuses a dart")));
            }
            alpha[a] = b;
            alpha[b] = a;
        }
        let map = OrientedMap { v, alpha, cycle_graph: false };
        map.validate()?;
        Ok(map)
    }

    pub fn from_alpha(v: usize, alpha: Vec<usize>) -> Result<OrientedMap> {
        let map = OrientedMap { v, alpha, cycle_graph: false };
        map.validate()?;
        Ok(map)
    }

    pub fn cycle_graph() -> OrientedMap {
        OrientedMap { v: 0, alpha: Vec::new(), cycle_graph: true }
    }

    pub fn is_cycle_graph(&self) -> bool {
        self.cycle_graph
    }

    pub fn vertex_count(&self) -> usize {
        self.v
    }

    pub fn dart_count(&self) -> usize {
        4 * self.v
    }

    /// Edge count, with the cycle-graph convention of a single edge.
    pub fn edge_count(&self) -> usize {
        if self.cycle_graph {
            1
        } else {
            2 * self.v
        }
    }

    pub fn alpha(&self, dart: usize) -> usize {
        self.alpha[dart]
    }

    pub fn raw_alpha(&self) -> &[usize] {
        &self.alpha
    }

    /// Edges identified by their outgoing dart.
    pub fn edges(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.dart_count()).step_by(2)
    }

    /// The outgoing dart of the edge containing `dart`.
    pub fn edge_of(&self, dart: usize) -> usize {
        if is_out(dart) {
            dart
        } else {
            self.alpha[dart]
        }
    }

    pub fn edge_pairs(&self) -> Vec<(usize, usize)> {
        self.edges().map(|d| (d, self.alpha[d])).collect()
    }

    pub fn validate(&self) -> Result<ValidationReport> {
        if self.cycle_graph {
            if self.v != 0 || !self.alpha.is_empty() {
                return Err(Error::InvalidInvolution(
                    "cycle graph must have no vertices and no pairing".into(),
                ));
            }
            return Ok(ValidationReport { components: 1, connected: true });
        }
        let n = 4 * self.v;
        if self.alpha.len() != n {
            return Err(Error::DanglingDart(self.alpha.len().min(n)));
        }
        for d in 0..n {
            let a = self.alpha[d];
            if a >= n {
                return Err(Error::DanglingDart(d));
            }
            if a == d {
                return Err(Error::InvalidInvolution(format!("dart {d} pairs with itself")));
            }
            if self.alpha[a] != d {
                return Err(Error::InvalidInvolution(format!("alpha({a}) != {d}")));
            }
            if is_out(d) == is_out(a) {
                return Err(Error::OrientationViolation(d, a));
            }
        }
        let components = self.component_count();
        Ok(ValidationReport { components, connected: components <= 1 })
    }

    pub fn component_count(&self) -> usize {
        if self.cycle_graph || self.v == 0 {
            return 1;
        }
        let mut uf = UnionFind::new(self.v);
        for d in 0..self.dart_count() {
            uf.union(vertex_of(d), vertex_of(self.alpha[d]));
        }
        uf.count()
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    /// Left/right face permutation: cross the edge, then advance one slot.
    pub fn face_next(&self, dart: usize) -> usize {
        rot_next(self.alpha[dart])
    }

    /// Straight-strand permutation: cross the edge, then go straight through.
    pub fn straight_next(&self, dart: usize) -> usize {
        opposite(self.alpha[dart])
    }

    pub fn trace_faces(&self) -> Result<FaceReport> {
        if self.cycle_graph {
            return Ok(FaceReport {
                l_faces: vec![Vec::new()],
                r_faces: vec![Vec::new()],
                straight_faces: Vec::new(),
            });
        }
        let n = self.dart_count();
        let mut seen = vec![false; n];
        let mut l_faces = Vec::new();
        let mut r_faces = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let out = is_out(start);
            let mut cycle = Vec::new();
            let mut d = start;
            loop {
                if is_out(d) != out {
                    return Err(Error::MixedDirectionFace(d));
                }
                seen[d] = true;
                cycle.push(d);
                d = self.face_next(d);
                if d == start {
                    break;
                }
            }
            if out {
                l_faces.push(cycle);
            } else {
                r_faces.push(cycle);
            }
        }

        let mut seen = vec![false; n];
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut cycle_id = vec![usize::MAX; n];
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut d = start;
            loop {
                seen[d] = true;
                cycle_id[d] = cycles.len();
                cycle.push(d);
                d = self.straight_next(d);
                if d == start {
                    break;
                }
            }
            cycles.push(cycle);
        }
        // Each strand cycle is mirrored by its alpha image; report each pair once.
        let mut straight_faces = Vec::new();
        let mut paired = vec![false; cycles.len()];
        for (i, cycle) in cycles.iter().enumerate() {
            if paired[i] {
                continue;
            }
            let mirror = cycle_id[self.alpha[cycle[0]]];
            if mirror == i || paired[mirror] || cycles[mirror].len() != cycle.len() {
                return Err(Error::MixedDirectionFace(cycle[0]));
            }
            paired[i] = true;
            paired[mirror] = true;
            let edges = cycle.iter().map(|&d| self.edge_of(d)).collect();
            straight_faces.push(StraightFace { cycle: cycle.clone(), edges });
        }
        Ok(FaceReport { l_faces, r_faces, straight_faces })
    }

    pub fn invariants(&self) -> Result<InvariantSet> {
        if self.cycle_graph {
            return Ok(InvariantSet::cycle_graph());
        }
        let report = self.validate()?;
        if !report.connected {
            return Err(Error::Disconnected(report.components));
        }
        let faces = self.trace_faces()?;
        InvariantSet::from_faces(self, &faces)
    }

    /// Flips every edge direction by shifting each vertex's rotation base one
    /// slot forward. Left and right faces swap; genus, grade, and straight
    /// faces are unchanged.
    pub fn reverse_all_arrows(&self) -> OrientedMap {
        self.relabel_locals(|l| (l + 1) & 3)
    }

    /// Mirror image: the rotation at every vertex is reversed.
    pub fn mirror(&self) -> OrientedMap {
        self.relabel_locals(|l| (4 - l) & 3)
    }

    /// Relabels slot `l` of every vertex to slot `f(l)`.
    fn relabel_locals(&self, f: impl Fn(usize) -> usize) -> OrientedMap {
        if self.cycle_graph {
            return self.clone();
        }
        let n = self.dart_count();
        let relabel = |d: usize| (d & !3) + f(d & 3);
        let mut alpha = vec![usize::MAX; n];
        for d in 0..n {
            alpha[relabel(d)] = relabel(self.alpha[d]);
        }
        OrientedMap { v: self.v, alpha, cycle_graph: false }
    }

    /// Applies a vertex permutation and per-vertex even rotation shifts.
    pub fn relabel(&self, vertex_map: &[usize], shifts: &[usize]) -> OrientedMap {
        if self.cycle_graph {
            return self.clone();
        }
        assert_eq!(vertex_map.len(), self.v);
        let relabel = |d: usize| {
            let v = vertex_of(d);
            4 * vertex_map[v] + ((local_of(d) + shifts[v]) & 3)
        };
        let mut alpha = vec![usize::MAX; self.dart_count()];
        for d in 0..self.dart_count() {
            alpha[relabel(d)] = relabel(self.alpha[d]);
        }
        OrientedMap { v: self.v, alpha, cycle_graph: false }
    }

    /// Self-loop (tadpole) presence; a tadpole is an edge joining two darts
    /// of the same vertex.
    pub fn has_tadpole(&self) -> bool {
        !self.cycle_graph
            && self
                .edges()
                .any(|d| vertex_of(d) == vertex_of(self.alpha[d]))
    }

    pub fn to_dot(&self) -> String {
        use std::fmt::Write;
        let mut out = String::from("digraph map {\n  node [shape=record];\n");
        if self.cycle_graph {
            out.push_str("  cycle [label=\"cycle graph\", shape=ellipse];\n  cycle -> cycle;\n");
            out.push_str("}\n");
            return out;
        }
        for v in 0..self.v {
            let _ = writeln!(out, "  v{v} [label=\"v{v}|{{<p0>0|<p1>1|<p2>2|<p3>3}}\"];");
        }
        for d in self.edges() {
            let a = self.alpha[d];
            let _ = writeln!(
                out,
                "  v{}:p{} -> v{}:p{};",
                vertex_of(d),
                local_of(d),
                vertex_of(a),
                local_of(a)
            );
        }
        out.push_str("}\n");
        out
    }
}

#[derive(Debug, Clone)]
pub struct ValidationReport {
    pub components: usize,
    pub connected: bool,
}

#[derive(Debug, Clone)]
pub struct StraightFace {
    /// One of the two mirror strand cycles, as darts.
    pub cycle: Vec<usize>,
    /// Edges crossed, one per step.
    pub edges: Vec<usize>,
}

impl StraightFace {
    pub fn len(&self) -> usize {
        self.cycle.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycle.is_empty()
    }
}

#[derive(Debug, Clone)]
pub struct FaceReport {
    pub l_faces: Vec<Vec<usize>>,
    pub r_faces: Vec<Vec<usize>>,
    pub straight_faces: Vec<StraightFace>,
}

impl FaceReport {
    pub fn loop_config(&self) -> Vec<usize> {
        let mut lens: Vec<usize> = self.straight_faces.iter().map(|s| s.len()).collect();
        lens.sort_unstable();
        lens
    }
}

/// All counting invariants of a connected map. Half-integer quantities are
/// stored doubled so everything stays in integer arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct InvariantSet {
    pub vertices: usize,
    pub edges: usize,
    pub l_faces: usize,
    pub r_faces: usize,
    pub faces: usize,
    pub straight_faces: usize,
    pub genus: usize,
    pub grade: usize,
    /// Doubled combined degree, `2w = 2g + l`.
    pub degree_x2: usize,
    /// Doubled genus of the ribbon graph left after deleting the right strands.
    pub l_genus_x2: usize,
    pub r_genus_x2: usize,
    pub loop_config: Vec<usize>,
}

impl InvariantSet {
    pub fn cycle_graph() -> InvariantSet {
        InvariantSet {
            vertices: 0,
            edges: 1,
            l_faces: 1,
            r_faces: 1,
            faces: 2,
            straight_faces: 1,
            genus: 0,
            grade: 0,
            degree_x2: 0,
            l_genus_x2: 0,
            r_genus_x2: 0,
            loop_config: Vec::new(),
        }
    }

    fn from_faces(map: &OrientedMap, report: &FaceReport) -> Result<InvariantSet> {
        let v = map.vertex_count();
        let e = 2 * v;
        let f_l = report.l_faces.len();
        let f_r = report.r_faces.len();
        let f = f_l + f_r;
        let phi = report.straight_faces.len();
        let loop_config = report.loop_config();

        let euler = |name: &str, value: i64| -> Result<usize> {
            if value < 0 || value % 2 != 0 {
                return Err(Error::InvalidInvolution(format!("{name} came out as {value}/2")));
            }
            Ok((value / 2) as usize)
        };
        // 2 - 2g = -v + f
        let genus = euler("genus", 2 + v as i64 - f as i64)?;
        // l/2 = 2 + v - f/2 - phi
        let grade_signed = 4 + 2 * v as i64 - f as i64 - 2 * phi as i64;
        if grade_signed < 0 {
            return Err(Error::InvalidInvolution(format!("negative grade {grade_signed}")));
        }
        let grade = grade_signed as usize;
        // Cross-check l/2 = 1 + g + v/2 - phi.
        assert_eq!(
            grade as i64,
            2 + 2 * genus as i64 + v as i64 - 2 * phi as i64,
            "grade identities disagree"
        );
        let degree_x2 = 2 * genus + grade;
        let l_genus_x2 = 2 + e as i64 - v as i64 - f_l as i64 - phi as i64;
        let r_genus_x2 = 2 + e as i64 - v as i64 - f_r as i64 - phi as i64;
        if l_genus_x2 < 0 || r_genus_x2 < 0 {
            return Err(Error::InvalidInvolution("negative strand-deleted genus".into()));
        }
        assert_eq!(l_genus_x2 + r_genus_x2, grade as i64, "grade != l-genus + r-genus");

        let total: usize = loop_config.iter().sum();
        assert_eq!(total, e, "straight-face lengths must cover every edge once");
        assert!(loop_config.iter().all(|l| l % 2 == 0), "odd straight-face length");

        Ok(InvariantSet {
            vertices: v,
            edges: e,
            l_faces: f_l,
            r_faces: f_r,
            faces: f,
            straight_faces: phi,
            genus,
            grade,
            degree_x2,
            l_genus_x2: l_genus_x2 as usize,
            r_genus_x2: r_genus_x2 as usize,
            loop_config,
        })
    }

    pub fn key(&self) -> (usize, usize) {
        (self.genus, self.grade)
    }
}

#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> UnionFind {
        UnionFind { parent: (0..n).collect() }
    }

    pub fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = x;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb);
        true
    }

    pub fn count(&mut self) -> usize {
        (0..self.parent.len()).filter(|&i| self.find(i) == i).count()
    }
}

/// Common small maps used throughout the tests and the base catalog.
pub mod samples {
    use super::OrientedMap;

    /// One vertex, tadpole plus loop; the clockwise infinity graph.
    pub fn infinity() -> OrientedMap {
        OrientedMap::from_pairs(1, &[(0, 1), (2, 3)]).unwrap()
    }

    /// The mirror-image infinity graph.
    pub fn infinity_crossed() -> OrientedMap {
        OrientedMap::from_pairs(1, &[(0, 3), (2, 1)]).unwrap()
    }

    /// Two vertices joined by three straight edges plus the closing edge;
    /// the unique vacuum graph of vanishing degree besides the cycle graph.
    pub fn vacuum_melon() -> OrientedMap {
        OrientedMap::from_pairs(2, &[(0, 5), (1, 4), (2, 7), (3, 6)]).unwrap()
    }

    /// The twisted closure of the same four edges; genus one, grade two.
    pub fn vacuum_twisted() -> OrientedMap {
        OrientedMap::from_pairs(2, &[(0, 5), (2, 7), (6, 1), (4, 3)]).unwrap()
    }

    /// Two vertices joined by an antiparallel edge pair, one tadpole each.
    pub fn double_tadpole() -> OrientedMap {
        OrientedMap::from_pairs(2, &[(0, 5), (6, 3), (2, 1), (4, 7)]).unwrap()
    }

    /// Six vertices carrying three straight four-loops, each loop sharing
    /// two non-adjacent vertices with the next; planar, grade two, and free
    /// of dipoles, so it is not reachable by chain insertions.
    pub fn interlaced_loops() -> OrientedMap {
        OrientedMap::from_pairs(
            6,
            &[
                (0, 17),
                (2, 9),
                (4, 1),
                (6, 21),
                (8, 13),
                (10, 7),
                (12, 3),
                (14, 23),
                (16, 5),
                (18, 15),
                (20, 11),
                (22, 19),
            ],
        )
        .unwrap()
    }

    /// Cyclic graph on `n >= 2` vertices with every edge doubled, embedded so
    /// that each doubled pair bounds a bigon.
    pub fn necklace(n: usize) -> OrientedMap {
        assert!(n >= 2);
        let mut pairs = Vec::new();
        for i in 0..n {
            let j = (i + 1) % n;
            pairs.push((4 * i, 4 * j + 3));
            pairs.push((4 * j + 2, 4 * i + 1));
        }
        OrientedMap::from_pairs(n, &pairs).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::samples::*;
    use super::*;

    #[test]
    fn infinity_graph_faces_and_invariants() {
        let m = infinity();
        let faces = m.trace_faces().unwrap();
        assert_eq!(faces.l_faces.len(), 1);
        assert_eq!(faces.r_faces.len(), 2);
        assert_eq!(faces.loop_config(), vec![2]);
        let inv = m.invariants().unwrap();
        assert_eq!((inv.genus, inv.grade, inv.degree_x2), (0, 1, 1));
        assert_eq!((inv.l_genus_x2, inv.r_genus_x2), (1, 0));
    }

    #[test]
    fn crossed_infinity_swaps_face_counts() {
        let m = infinity_crossed();
        let inv = m.invariants().unwrap();
        assert_eq!((inv.l_faces, inv.r_faces), (2, 1));
        assert_eq!((inv.genus, inv.grade), (0, 1));
    }

    #[test]
    fn out_paired_with_out_is_rejected() {
        let err = OrientedMap::from_pairs(1, &[(0, 2), (1, 3)]).unwrap_err();
        assert!(matches!(err, Error::OrientationViolation(..)));
    }

    #[test]
    fn cycle_graph_conventions() {
        let m = OrientedMap::cycle_graph();
        assert!(m.validate().unwrap().connected);
        let inv = m.invariants().unwrap();
        assert_eq!((inv.edges, inv.faces, inv.straight_faces), (1, 2, 1));
        assert_eq!((inv.genus, inv.grade, inv.degree_x2), (0, 0, 0));
    }

    #[test]
    fn vacuum_melon_is_planar_grade_zero() {
        let inv = vacuum_melon().invariants().unwrap();
        assert_eq!((inv.genus, inv.grade), (0, 0));
        assert_eq!(inv.loop_config, vec![2, 2]);
        assert_eq!((inv.l_faces, inv.r_faces), (2, 2));
    }

    #[test]
    fn twisted_closure_has_genus_one_grade_two() {
        let inv = vacuum_twisted().invariants().unwrap();
        assert_eq!((inv.genus, inv.grade), (1, 2));
        assert_eq!(inv.loop_config, vec![2, 2]);
    }

    #[test]
    fn double_tadpole_invariants() {
        let inv = double_tadpole().invariants().unwrap();
        assert_eq!((inv.genus, inv.grade), (0, 2));
        assert_eq!(inv.straight_faces, 1);
        assert_eq!(inv.loop_config, vec![4]);
    }

    #[test]
    fn necklace_three_invariants() {
        let inv = necklace(3).invariants().unwrap();
        assert_eq!((inv.genus, inv.grade), (0, 3));
        assert_eq!(inv.straight_faces, 1);
        assert_eq!(inv.loop_config, vec![6]);
    }

    #[test]
    fn reverse_swaps_l_and_r() {
        for m in [infinity(), vacuum_melon(), double_tadpole(), necklace(3)] {
            let rev = m.reverse_all_arrows();
            let a = m.invariants().unwrap();
            let b = rev.invariants().unwrap();
            assert_eq!((a.l_faces, a.r_faces), (b.r_faces, b.l_faces));
            assert_eq!(a.genus, b.genus);
            assert_eq!(a.grade, b.grade);
            assert_eq!(a.loop_config, b.loop_config);
            // Reversing twice relabels within each vertex; same map class.
            let rr = rev.reverse_all_arrows();
            assert_eq!(
                crate::canon::canonical_code(&rr).unwrap(),
                crate::canon::canonical_code(&m).unwrap()
            );
        }
    }

    #[test]
    fn mirror_is_involutive() {
        for m in [infinity(), vacuum_melon(), necklace(3)] {
            assert_eq!(m.mirror().mirror(), m);
            m.mirror().validate().unwrap();
        }
    }

    #[test]
    fn identities_hold_on_samples() {
        for m in [infinity(), infinity_crossed(), vacuum_melon(), vacuum_twisted(), double_tadpole(), necklace(3), necklace(5)] {
            let inv = m.invariants().unwrap();
            assert_eq!(2 * inv.vertices, inv.edges);
            assert_eq!(inv.degree_x2, 2 * inv.genus + inv.grade);
            assert_eq!(inv.l_genus_x2 + inv.r_genus_x2, inv.grade);
            assert_eq!(inv.loop_config.iter().sum::<usize>(), inv.edges);
        }
    }

    #[test]
    fn tadpole_detection() {
        assert!(infinity().has_tadpole());
        assert!(double_tadpole().has_tadpole());
        assert!(!vacuum_melon().has_tadpole());
        assert!(!necklace(3).has_tadpole());
    }
}
