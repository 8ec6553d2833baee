//! Alternating knot diagrams from planar single-loop maps.
//!
//! A planar map whose straight strands close into one loop is a knot shadow:
//! crossings are vertices, the traversal is the straight walk, and the
//! alternating over/under assignment along the walk is consistent exactly in
//! the planar case. Knots are told apart by the bracket state sum evaluated
//! on the diagram and its mirror, matched against reference diagrams built
//! from integer tangle vectors.

use crate::error::{Error, Result};
use crate::map::{local_of, opposite, vertex_of, OrientedMap};
use crate::reduction::is_2pi;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

pub const BRACKET_CROSSING_CAP: usize = 12;

/// Four-valent diagram with counterclockwise port order at each crossing;
/// strands pass straight through. `conn[c][p]` is the (crossing, port) at
/// the other end of the strand segment leaving port `p`.
#[derive(Debug, Clone)]
pub struct CurveDiagram {
    pub conn: Vec<[(usize, usize); 4]>,
}

impl CurveDiagram {
    pub fn crossing_count(&self) -> usize {
        self.conn.len()
    }

    /// Reads the shadow of a map: ports are the rotation slots.
    pub fn from_map(map: &OrientedMap) -> CurveDiagram {
        let v = map.vertex_count();
        let mut conn = vec![[(usize::MAX, usize::MAX); 4]; v];
        for d in 0..map.dart_count() {
            let a = map.alpha(d);
            conn[vertex_of(d)][local_of(d)] = (vertex_of(a), local_of(a));
        }
        CurveDiagram { conn }
    }
}

/// Planar diagram code: per crossing the four arc labels counterclockwise
/// starting from the incoming under-strand.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlanarDiagram {
    pub crossings: Vec<[usize; 4]>,
}

#[derive(Debug, Clone)]
pub struct KnotDiagram {
    pub crossing_count: usize,
    /// Crossing index and over-flag along the straight walk.
    pub gauss: Vec<(usize, bool)>,
    pub pd: PlanarDiagram,
}

impl KnotDiagram {
    /// Gauss code string, canonical over starting point, direction, and
    /// mirror: tokens `O<i>`/`U<i>`, comma separated, crossings renumbered
    /// by first appearance.
    pub fn gauss_canonical(&self) -> String {
        let n = self.gauss.len();
        let mut best: Option<String> = None;
        for mirror in [false, true] {
            for dir in [false, true] {
                let seq: Vec<(usize, bool)> = if dir {
                    self.gauss.iter().rev().map(|&(c, o)| (c, o ^ mirror)).collect()
                } else {
                    self.gauss.iter().map(|&(c, o)| (c, o ^ mirror)).collect()
                };
                for start in 0..n {
                    let mut names: BTreeMap<usize, usize> = BTreeMap::new();
                    let mut tokens = Vec::with_capacity(n);
                    for k in 0..n {
                        let (c, over) = seq[(start + k) % n];
                        let next = names.len() + 1;
                        let id = *names.entry(c).or_insert(next);
                        tokens.push(format!("{}{}", if over { "O" } else { "U" }, id));
                    }
                    let code = tokens.join(",");
                    if best.as_ref().map_or(true, |b| code < *b) {
                        best = Some(code);
                    }
                }
            }
        }
        best.unwrap_or_default()
    }
}

/// Builds the alternating diagram of a curve with a single closed strand.
/// The first transit passes over; the mirror is tracked separately at the
/// bracket level.
pub fn diagram_of_curve(curve: &CurveDiagram) -> Result<KnotDiagram> {
    let n = curve.crossing_count();
    if n == 0 {
        return Ok(KnotDiagram {
            crossing_count: 0,
            gauss: Vec::new(),
            pd: PlanarDiagram { crossings: Vec::new() },
        });
    }
    // Straight walk: leave (c, p), arrive (c', p'), pass through to p'+2.
    let mut transits: Vec<(usize, usize)> = Vec::new(); // (crossing, entry port)
    let (mut c, mut p) = (0usize, 0usize);
    loop {
        let (nc, np) = curve.conn[c][p];
        transits.push((nc, np));
        c = nc;
        p = (np + 2) % 4;
        if (c, p) == (0, 0) {
            break;
        }
        if transits.len() > 2 * n {
            return Err(Error::NotAKnot(2));
        }
    }
    if transits.len() != 2 * n {
        return Err(Error::NotAKnot(2));
    }

    // Alternating assignment: even steps pass over; both visits of one
    // crossing must disagree, which is the planarity parity condition.
    let mut over_at = vec![None::<(bool, usize)>; n]; // (first visit over?, step)
    let mut gauss = Vec::with_capacity(2 * n);
    for (step, &(cr, _)) in transits.iter().enumerate() {
        let over = step % 2 == 0;
        gauss.push((cr, over));
        match over_at[cr] {
            None => over_at[cr] = Some((over, step)),
            Some((prev, _)) => {
                if prev == over {
                    return Err(Error::MixedDirectionFace(cr));
                }
            }
        }
    }

    // Arc k joins transit k to transit k+1; assign arcs to ports.
    let mut arc_at = vec![[usize::MAX; 4]; n];
    for (step, &(cr, entry)) in transits.iter().enumerate() {
        let prev_arc = if step == 0 { 2 * n } else { step };
        arc_at[cr][entry] = prev_arc;
        arc_at[cr][(entry + 2) % 4] = step + 1;
    }
    let mut crossings = Vec::with_capacity(n);
    for cr in 0..n {
        // Under entry: the transit that passes under.
        let under_entry = transits
            .iter()
            .enumerate()
            .find(|(step, &(c2, _))| c2 == cr && step % 2 == 1)
            .map(|(_, &(_, entry))| entry)
            .expect("every crossing has an under transit");
        let tuple = [
            arc_at[cr][under_entry],
            arc_at[cr][(under_entry + 1) % 4],
            arc_at[cr][(under_entry + 2) % 4],
            arc_at[cr][(under_entry + 3) % 4],
        ];
        crossings.push(tuple);
    }
    Ok(KnotDiagram { crossing_count: n, gauss, pd: PlanarDiagram { crossings } })
}

/// Converts a planar single-strand map into its alternating diagram.
pub fn to_knot_diagram(map: &OrientedMap) -> Result<KnotDiagram> {
    if map.is_cycle_graph() || map.vertex_count() == 0 {
        return Err(Error::NotAKnot(1));
    }
    let inv = map.invariants()?;
    if inv.genus != 0 {
        return Err(Error::NotPlanar(inv.genus));
    }
    if inv.straight_faces != 1 {
        return Err(Error::NotAKnot(inv.straight_faces));
    }
    diagram_of_curve(&CurveDiagram::from_map(map))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReducedReport {
    /// No nugatory crossing, that is, no self-loop in the map.
    pub reduced: bool,
    /// Carries a two-edge cut, the shadow of a connected sum or worse.
    pub connected_sum: bool,
}

pub fn is_reduced_diagram(map: &OrientedMap) -> ReducedReport {
    ReducedReport { reduced: !map.has_tadpole(), connected_sum: !is_2pi(map) }
}

/// Sparse Laurent polynomial in the bracket variable.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
pub struct BracketPolynomial(pub BTreeMap<i32, i64>);

impl BracketPolynomial {
    pub fn one() -> BracketPolynomial {
        BracketPolynomial(BTreeMap::from([(0, 1)]))
    }

    fn add_term(&mut self, exp: i32, coeff: i64) {
        let e = self.0.entry(exp).or_insert(0);
        *e += coeff;
        if *e == 0 {
            self.0.remove(&exp);
        }
    }

    pub fn mul(&self, other: &BracketPolynomial) -> BracketPolynomial {
        let mut out = BracketPolynomial::default();
        for (&ea, &ca) in &self.0 {
            for (&eb, &cb) in &other.0 {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }

    /// Mirror image: substitute the inverse variable.
    pub fn mirror(&self) -> BracketPolynomial {
        BracketPolynomial(self.0.iter().map(|(&e, &c)| (-e, c)).collect())
    }

    pub fn span(&self) -> Option<i32> {
        let min = self.0.keys().next()?;
        let max = self.0.keys().last()?;
        Some(max - min)
    }

    pub fn is_palindromic(&self) -> bool {
        *self == self.mirror()
    }

    pub fn display(&self) -> String {
        if self.0.is_empty() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (&e, &c) in self.0.iter().rev() {
            let var = match e {
                0 => String::new(),
                1 => "A".into(),
                _ => format!("A^{e}"),
            };
            let part = match (c, var.is_empty()) {
                (1, false) => var,
                (-1, false) => format!("-{var}"),
                (_, false) => format!("{c}{var}"),
                (_, true) => format!("{c}"),
            };
            parts.push(part);
        }
        let mut s = parts.join(" + ");
        s = s.replace("+ -", "- ");
        s
    }
}

/// Full state-sum bracket of a planar diagram. Each crossing is smoothed two
/// ways; a state contributes the loop-count power of the curl value.
pub fn kauffman_bracket(pd: &PlanarDiagram) -> Result<BracketPolynomial> {
    let n = pd.crossings.len();
    if n > BRACKET_CROSSING_CAP {
        return Err(Error::TooManyCrossings(n, BRACKET_CROSSING_CAP));
    }
    if n == 0 {
        return Ok(BracketPolynomial::one());
    }
    let arc_count = 2 * n;
    let mut delta = BracketPolynomial::default();
    delta.add_term(2, -1);
    delta.add_term(-2, -1);

    let mut total = BracketPolynomial::default();
    for state in 0u32..(1 << n) {
        let mut uf: Vec<usize> = (0..=arc_count).collect();
        fn find(uf: &mut Vec<usize>, x: usize) -> usize {
            let mut r = x;
            while uf[r] != r {
                r = uf[r];
            }
            let mut c = x;
            while uf[c] != r {
                let nx = uf[c];
                uf[c] = r;
                c = nx;
            }
            r
        }
        let mut union = |uf: &mut Vec<usize>, a: usize, b: usize| {
            let (ra, rb) = (find(uf, a), find(uf, b));
            if ra != rb {
                uf[ra.max(rb)] = ra.min(rb);
            }
        };
        let mut exponent = 0i32;
        for (i, x) in pd.crossings.iter().enumerate() {
            if state & (1 << i) == 0 {
                // First smoothing: join the two port pairs adjacent to the
                // incoming under-strand on its left.
                union(&mut uf, x[0], x[1]);
                union(&mut uf, x[2], x[3]);
                exponent += 1;
            } else {
                union(&mut uf, x[0], x[3]);
                union(&mut uf, x[1], x[2]);
                exponent -= 1;
            }
        }
        let mut loops = 0usize;
        for arc in 1..=arc_count {
            if find(&mut uf, arc) == arc {
                loops += 1;
            }
        }
        let mut contribution = BracketPolynomial::default();
        contribution.add_term(exponent, 1);
        for _ in 1..loops {
            contribution = contribution.mul(&delta);
        }
        for (e, c) in contribution.0 {
            total.add_term(e, c);
        }
    }
    Ok(total)
}

/// Class key: the bracket of the diagram and of its mirror, order-free.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ClassKey(pub BracketPolynomial, pub BracketPolynomial);

impl ClassKey {
    pub fn of(pd: &PlanarDiagram) -> Result<ClassKey> {
        let b = kauffman_bracket(pd)?;
        let m = b.mirror();
        Ok(if b <= m { ClassKey(b, m) } else { ClassKey(m, b) })
    }

    fn of_bracket(b: BracketPolynomial) -> ClassKey {
        let m = b.mirror();
        if b <= m {
            ClassKey(b, m)
        } else {
            ClassKey(m, b)
        }
    }
}

/// Builds the alternating rational knot of a positive twist vector: the
/// first entry twists the two horizontal strands, the next the two vertical
/// ones, alternating; the two top and two bottom ends close up at the end.
pub fn rational_knot_curve(twists: &[usize]) -> CurveDiagram {
    assert!(!twists.is_empty() && twists.iter().all(|&t| t > 0));
    // Corners NW, NE, SW, SE as dangling (crossing, port) ends; ports run
    // counterclockwise SW=0, SE=1, NE=2, NW=3.
    let mut conn: Vec<[(usize, usize); 4]> = Vec::new();
    let mut join = |conn: &mut Vec<[(usize, usize); 4]>, a: (usize, usize), b: (usize, usize)| {
        conn[a.0][a.1] = b;
        conn[b.0][b.1] = a;
    };
    conn.push([(usize::MAX, 0); 4]);
    let mut nw = (0, 3);
    let mut ne = (0, 2);
    let mut sw = (0, 0);
    let mut se = (0, 1);
    let mut first = true;
    for (row, &count) in twists.iter().enumerate() {
        // Alternate so the final group always twists horizontally.
        let horizontal = (row + twists.len()) % 2 == 1;
        let mut remaining = count;
        if first {
            remaining -= 1;
            first = false;
        }
        for _ in 0..remaining {
            let c = conn.len();
            conn.push([(usize::MAX, 0); 4]);
            if horizontal {
                join(&mut conn, (c, 3), ne);
                join(&mut conn, (c, 0), se);
                ne = (c, 2);
                se = (c, 1);
            } else {
                join(&mut conn, (c, 3), sw);
                join(&mut conn, (c, 2), se);
                sw = (c, 0);
                se = (c, 1);
            }
        }
    }
    let mut final_join = |a: (usize, usize), b: (usize, usize)| {
        conn[a.0][a.1] = b;
        conn[b.0][b.1] = a;
    };
    final_join(nw, ne);
    final_join(sw, se);
    CurveDiagram { conn }
}

#[derive(Debug, Clone)]
pub struct ClassTable {
    entries: Vec<(String, ClassKey)>,
}

impl ClassTable {
    pub fn lookup(&self, key: &ClassKey) -> Option<&str> {
        self.entries.iter().find(|(_, k)| k == key).map(|(n, _)| n.as_str())
    }

    pub fn labels(&self) -> impl Iterator<Item = &str> {
        self.entries.iter().map(|(n, _)| n.as_str())
    }
}

/// Reference classes through six crossings: prime rational knots from twist
/// vectors, the two trefoil sums (bracket multiplicativity under connected
/// sum), and the unknot.
pub fn reference_table() -> Result<ClassTable> {
    let mut entries = Vec::new();
    let mut push_curve = |name: &str, twists: &[usize], entries: &mut Vec<(String, ClassKey)>| -> Result<BracketPolynomial> {
        let curve = rational_knot_curve(twists);
        let diagram = diagram_of_curve(&curve)?;
        let bracket = kauffman_bracket(&diagram.pd)?;
        entries.push((name.to_string(), ClassKey::of(&diagram.pd)?));
        Ok(bracket)
    };
    let b31 = push_curve("3_1", &[3], &mut entries)?;
    push_curve("4_1", &[2, 2], &mut entries)?;
    push_curve("5_1", &[5], &mut entries)?;
    push_curve("5_2", &[3, 2], &mut entries)?;
    push_curve("6_1", &[4, 2], &mut entries)?;
    push_curve("6_2", &[3, 1, 2], &mut entries)?;
    push_curve("6_3", &[2, 1, 1, 2], &mut entries)?;
    entries.push(("3_1#3_1".into(), ClassKey::of_bracket(b31.mul(&b31))));
    entries.push(("3_1#3_1".into(), ClassKey::of_bracket(b31.mul(&b31.mirror()))));
    entries.push(("unknot".into(), ClassKey::of_bracket(BracketPolynomial::one())));
    Ok(ClassTable { entries })
}

/// Identifies the knot class of a diagram against the bundled references.
pub fn knot_class_of(diagram: &KnotDiagram, table: &ClassTable) -> Result<Option<String>> {
    let key = ClassKey::of(&diagram.pd)?;
    Ok(table.lookup(&key).map(|s| s.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::map::samples;

    #[test]
    fn necklace_three_gives_the_expected_gauss_code() {
        let d = to_knot_diagram(&samples::necklace(3)).unwrap();
        assert_eq!(d.crossing_count, 3);
        assert_eq!(d.gauss_canonical(), "O1,U2,O3,U1,O2,U3");
    }

    #[test]
    fn infinity_graph_has_a_nugatory_crossing() {
        let d = to_knot_diagram(&samples::infinity()).unwrap();
        assert_eq!(d.crossing_count, 1);
        let report = is_reduced_diagram(&samples::infinity());
        assert!(!report.reduced);
    }

    #[test]
    fn non_single_loop_maps_are_rejected() {
        assert!(matches!(
            to_knot_diagram(&samples::vacuum_melon()),
            Err(Error::NotAKnot(2))
        ));
    }

    #[test]
    fn positive_genus_is_rejected() {
        assert!(matches!(
            to_knot_diagram(&samples::vacuum_twisted()),
            Err(Error::NotPlanar(1))
        ));
    }

    #[test]
    fn gauss_code_is_invariant_under_relabeling() {
        let m = samples::necklace(5);
        let base = to_knot_diagram(&m).unwrap().gauss_canonical();
        for rot in 1..5usize {
            let vm: Vec<usize> = (0..5).map(|v| (v + rot) % 5).collect();
            let shifted = m.relabel(&vm, &[0, 2, 0, 2, 0]);
            assert_eq!(to_knot_diagram(&shifted).unwrap().gauss_canonical(), base);
        }
    }

    #[test]
    fn kink_brackets_are_cubes() {
        // One-crossing unknots evaluate to a signed cube of the variable.
        let d = to_knot_diagram(&samples::infinity()).unwrap();
        let b = kauffman_bracket(&d.pd).unwrap();
        let cube = b.0.keys().map(|e| e.abs()).max().unwrap();
        assert_eq!(cube, 3);
        assert_eq!(b.0.len(), 1);
    }

    #[test]
    fn bracket_span_is_four_times_the_crossing_number() {
        // Reduced alternating diagrams realize the full span.
        for (twists, n) in [(vec![3usize], 3i32), (vec![2, 2], 4), (vec![5], 5), (vec![3, 2], 5)] {
            let d = diagram_of_curve(&rational_knot_curve(&twists)).unwrap();
            let b = kauffman_bracket(&d.pd).unwrap();
            assert_eq!(b.span(), Some(4 * n), "twists {twists:?}");
        }
    }

    #[test]
    fn reference_classes_are_pairwise_distinct() {
        let table = reference_table().unwrap();
        let mut keys: Vec<&ClassKey> = table.entries.iter().map(|(_, k)| k).collect();
        let before = keys.len();
        keys.sort();
        keys.dedup();
        assert_eq!(keys.len(), before, "reference keys must not collide");
    }

    #[test]
    fn amphichiral_references_have_palindromic_brackets() {
        for (twists, palindromic) in
            [(vec![2usize, 2], true), (vec![2, 1, 1, 2], true), (vec![3], false), (vec![5], false), (vec![3, 2], false), (vec![4, 2], false), (vec![3, 1, 2], false)]
        {
            let d = diagram_of_curve(&rational_knot_curve(&twists)).unwrap();
            let b = kauffman_bracket(&d.pd).unwrap();
            assert_eq!(b.is_palindromic(), palindromic, "twists {twists:?}");
        }
    }

    #[test]
    fn necklaces_classify_as_torus_knots() {
        let table = reference_table().unwrap();
        let d3 = to_knot_diagram(&samples::necklace(3)).unwrap();
        assert_eq!(knot_class_of(&d3, &table).unwrap().as_deref(), Some("3_1"));
        let d5 = to_knot_diagram(&samples::necklace(5)).unwrap();
        assert_eq!(knot_class_of(&d5, &table).unwrap().as_deref(), Some("5_1"));
    }

    #[test]
    fn class_is_stable_under_mirror_and_reversal() {
        let table = reference_table().unwrap();
        let m = samples::necklace(3);
        for variant in [m.mirror(), m.reverse_all_arrows()] {
            let d = to_knot_diagram(&variant).unwrap();
            assert_eq!(knot_class_of(&d, &table).unwrap().as_deref(), Some("3_1"));
        }
    }

    #[test]
    fn crossing_cap_is_enforced() {
        let pd = PlanarDiagram { crossings: vec![[1, 2, 3, 4]; 13] };
        assert!(matches!(kauffman_bracket(&pd), Err(Error::TooManyCrossings(13, _))));
    }
}
