//! Recursive enumeration of schemes at fixed genus and grade.
//!
//! Grade-raising moves insert side chains (planar) and straight chains
//! (genus-raising) across cuts of lower catalogs; reducible schemes come from
//! separating chains and two-edge connections between lower catalogs. All
//! candidates are normalized to schemes and deduplicated by canonical code,
//! so no symmetry argument is ever needed for correctness.

use crate::canon::{canonical_code, CanonicalCode};
use crate::error::{Error, Result};
use crate::map::{InvariantSet, OrientedMap};
use crate::reduction::build::{
    capped_chain, closed_chain, connect_with_chain, insert_chain, insert_chain_pendant,
    PendantVariant,
};
use crate::reduction::{
    insert_melon, is_2pi, scheme_of, two_edge_connection, DipoleKind, SchemeGraph,
};
use rayon::prelude::*;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::Arc;

pub const DEFAULT_RUNG_CAP: usize = 3;

/// How the straight-chain slots reconnect a cut loop. With the cuts fixed,
/// each choice is realized by exactly one rung parity, dictated by the cut
/// edge orientations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NPairing {
    Connecting,
    Rearranging,
}

#[derive(Debug, Clone, Copy)]
pub struct CutSpec {
    pub edges: (usize, usize),
    pub pairing: NPairing,
}

#[derive(Debug, Clone)]
pub struct SchemeEntry {
    pub scheme: SchemeGraph,
    pub invariants: InvariantSet,
    pub two_pi: bool,
    pub provenance: String,
}

#[derive(Debug, Clone)]
pub struct SchemeSet {
    pub genus: usize,
    pub grade: usize,
    pub rung_cap: usize,
    pub entries: BTreeMap<CanonicalCode, SchemeEntry>,
}

impl SchemeSet {
    fn new(genus: usize, grade: usize, rung_cap: usize) -> SchemeSet {
        SchemeSet { genus, grade, rung_cap, entries: BTreeMap::new() }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn count_2pi(&self) -> usize {
        self.entries.values().filter(|e| e.two_pi).count()
    }

    pub fn count_2pr(&self) -> usize {
        self.entries.values().filter(|e| !e.two_pi).count()
    }

    pub fn contains(&self, code: &CanonicalCode) -> bool {
        self.entries.contains_key(code)
    }

    pub fn iter(&self) -> impl Iterator<Item = &SchemeEntry> {
        self.entries.values()
    }
}

struct Candidate {
    map: OrientedMap,
    provenance: String,
}

/// Memoizing enumeration driver. Levels build bottom-up: a key's catalog
/// pulls in the lower catalogs it feeds on.
pub struct Enumerator {
    rung_cap: usize,
    cache: HashMap<(usize, usize), Arc<SchemeSet>>,
}

impl Enumerator {
    pub fn new(rung_cap: usize) -> Enumerator {
        Enumerator { rung_cap: rung_cap.max(3), cache: HashMap::new() }
    }

    pub fn schemes(&mut self, genus: usize, grade: usize) -> Result<Arc<SchemeSet>> {
        if let Some(hit) = self.cache.get(&(genus, grade)) {
            return Ok(hit.clone());
        }
        let built = Arc::new(self.build(genus, grade)?);
        self.cache.insert((genus, grade), built.clone());
        Ok(built)
    }

    fn build(&mut self, genus: usize, grade: usize) -> Result<SchemeSet> {
        let mut set = SchemeSet::new(genus, grade, self.rung_cap);
        match (genus, grade) {
            (0, 0) => {
                let cycle = OrientedMap::cycle_graph();
                set.entries.insert(
                    CanonicalCode(vec![u32::MAX]),
                    SchemeEntry {
                        scheme: scheme_of(&cycle)?,
                        invariants: cycle.invariants()?,
                        two_pi: true,
                        provenance: "base".into(),
                    },
                );
            }
            (0, 1) => {
                for (name, map) in [
                    ("base infinity", crate::map::samples::infinity()),
                    ("base infinity mirrored", crate::map::samples::infinity_crossed()),
                ] {
                    let scheme = scheme_of(&map)?;
                    let invariants = scheme.representative.invariants()?;
                    set.entries.insert(
                        scheme.code.clone(),
                        SchemeEntry { scheme, invariants, two_pi: true, provenance: name.into() },
                    );
                }
            }
            (g, 0) => {
                // Irreducible: straight-chain insertions one genus down.
                let lower = self.schemes(g - 1, 0)?;
                let mut cands = Vec::new();
                self.straight_insertions(&lower, &mut cands);
                // Reducible: separating structures between positive-genus
                // grade-zero catalogs.
                for g1 in 1..g {
                    let a = self.schemes(g1, 0)?;
                    let b = self.schemes(g - g1, 0)?;
                    self.separating_insertions(&a, &b, &mut cands);
                }
                absorb(&mut set, cands);
            }
            (0, 2) => {
                let lower = self.schemes(0, 0)?;
                let mut cands = Vec::new();
                self.side_insertions(&lower, &mut cands);
                // The interlaced-loops graph carries no dipole at all, so no
                // chain insertion can produce it; it enters as a base.
                cands.push(Candidate {
                    map: crate::map::samples::interlaced_loops(),
                    provenance: "base interlaced loops".into(),
                });
                let ones = self.schemes(0, 1)?;
                self.separating_insertions(&ones, &ones, &mut cands);
                absorb(&mut set, cands);
            }
            (0, 3) => {
                let ones = self.schemes(0, 1)?;
                let mut cands = Vec::new();
                self.side_insertions(&ones, &mut cands);
                let twos = self.schemes(0, 2)?;
                self.separating_insertions(&ones, &twos, &mut cands);
                self.separating_insertions(&twos, &ones, &mut cands);
                absorb(&mut set, cands);
            }
            (g, 1) => {
                let lower = self.schemes(g - 1, 1)?;
                let mut cands = Vec::new();
                self.straight_insertions(&lower, &mut cands);
                for g1 in 0..g {
                    let a = self.schemes(g1, 1)?;
                    let b = self.schemes(g - g1, 0)?;
                    self.separating_insertions(&a, &b, &mut cands);
                }
                absorb(&mut set, cands);
            }
            (g, 2) => {
                let mut cands = Vec::new();
                let lower = self.schemes(g - 1, 2)?;
                self.straight_insertions(&lower, &mut cands);
                // Rearranging route from two grades down at the lower genus.
                let zeros = self.schemes(g - 1, 0)?;
                self.straight_insertions(&zeros, &mut cands);
                for g1 in 0..g {
                    let a = self.schemes(g1, 2)?;
                    let b = self.schemes(g - g1, 0)?;
                    self.separating_insertions(&a, &b, &mut cands);
                }
                for g1 in 0..=g {
                    let a = self.schemes(g1, 1)?;
                    let b = self.schemes(g - g1, 1)?;
                    self.separating_insertions(&a, &b, &mut cands);
                }
                absorb(&mut set, cands);
            }
            (g, l) => return Err(Error::UnsupportedGrade(g, l)),
        }
        close_under_symmetry(&mut set)?;
        Ok(set)
    }

    /// Insertion bases: every representative, its one-melon decorations, and
    /// its in-class ladder extensions. Insertions land on arbitrary members
    /// of the lower classes, so minimal representatives alone would miss the
    /// schemes whose construction cuts inside a longer ladder or a melon.
    fn bases(&self, set: &SchemeSet) -> Vec<(OrientedMap, String)> {
        let mut out = Vec::new();
        let mut seen = BTreeSet::new();
        for entry in set.iter() {
            let rep = &entry.scheme.representative;
            let label = format!("({},{}):{}", set.genus, set.grade, short(&entry.scheme.code));
            out.push((rep.clone(), label.clone()));
            if rep.is_cycle_graph() {
                let vac = insert_melon(rep, 0);
                if seen.insert(canonical_code(&vac).unwrap()) {
                    out.push((vac, format!("{label}+melon")));
                }
                continue;
            }
            for edge in rep.edges() {
                let dec = insert_melon(rep, edge);
                if seen.insert(canonical_code(&dec).unwrap()) {
                    out.push((dec, format!("{label}+melon@e{edge}")));
                }
            }
            for (variant, tag) in extended_realizations(rep) {
                if seen.insert(canonical_code(&variant).unwrap()) {
                    out.push((variant, format!("{label}+{tag}")));
                }
            }
        }
        out
    }

    fn straight_insertions(&self, lower: &SchemeSet, out: &mut Vec<Candidate>) {
        self.chain_insertions(lower, DipoleKind::N, out);
    }

    fn side_insertions(&self, lower: &SchemeSet, out: &mut Vec<Candidate>) {
        self.chain_insertions(lower, DipoleKind::L, out);
        self.chain_insertions(lower, DipoleKind::R, out);
    }

    fn chain_insertions(&self, lower: &SchemeSet, kind: DipoleKind, out: &mut Vec<Candidate>) {
        for (base, label) in self.bases(lower) {
            for n in 1..=self.rung_cap {
                let kinds = vec![kind; n];
                if base.is_cycle_graph() {
                    out.push(Candidate {
                        map: closed_chain(&kinds),
                        provenance: format!("closed {kind}x{n} from {label}"),
                    });
                    out.push(Candidate {
                        map: capped_chain(&kinds),
                        provenance: format!("capped {kind}x{n} from {label}"),
                    });
                    continue;
                }
                for (e1, e2) in same_face_pairs(&base, kind) {
                    out.push(Candidate {
                        map: insert_chain(&base, e1, e2, &kinds),
                        provenance: format!("insert {kind}x{n} at (e{e1},e{e2}) into {label}"),
                    });
                }
                for edge in base.edges() {
                    for variant in [
                        PendantVariant::CapB,
                        PendantVariant::CapA,
                        PendantVariant::CrossAB,
                        PendantVariant::CrossBA,
                    ] {
                        out.push(Candidate {
                            map: insert_chain_pendant(&base, edge, &kinds, variant),
                            provenance: format!(
                                "pendant {kind}x{n} {variant:?} at e{edge} into {label}"
                            ),
                        });
                    }
                }
            }
        }
    }

    fn separating_insertions(&self, a: &SchemeSet, b: &SchemeSet, out: &mut Vec<Candidate>) {
        let mut compositions: Vec<Vec<DipoleKind>> = Vec::new();
        for kind in [DipoleKind::N, DipoleKind::L, DipoleKind::R] {
            for n in 1..=self.rung_cap {
                compositions.push(vec![kind; n]);
            }
        }
        for (x, y) in [
            (DipoleKind::N, DipoleKind::L),
            (DipoleKind::L, DipoleKind::N),
            (DipoleKind::N, DipoleKind::R),
            (DipoleKind::R, DipoleKind::N),
            (DipoleKind::L, DipoleKind::R),
            (DipoleKind::R, DipoleKind::L),
        ] {
            compositions.push(vec![x, y]);
        }
        // The reducible case splits into melon-free halves, so no melon
        // decorations here, but ladder growth inside either half matters.
        let lefts = self.members(a);
        let rights = self.members(b);
        for (left, llabel) in &lefts {
            if left.is_cycle_graph() {
                continue;
            }
            for (right, rlabel) in &rights {
                if right.is_cycle_graph() {
                    continue;
                }
                for e1 in left.edges() {
                    for e2 in right.edges() {
                        for kinds in &compositions {
                            out.push(Candidate {
                                map: connect_with_chain(left, e1, right, e2, kinds),
                                provenance: format!(
                                    "separating {kinds:?} between {llabel} e{e1} and {rlabel} e{e2}"
                                ),
                            });
                        }
                        if let Ok(map) = two_edge_connection(left, e1, right, e2) {
                            out.push(Candidate {
                                map,
                                provenance: format!(
                                    "two-edge connection {llabel} e{e1} to {rlabel} e{e2}"
                                ),
                            });
                        }
                    }
                }
            }
        }
    }

    /// Melon-free class members: representatives plus ladder growths.
    fn members(&self, set: &SchemeSet) -> Vec<(OrientedMap, String)> {
        let mut out = Vec::new();
        let mut seen = BTreeSet::new();
        for entry in set.iter() {
            let rep = &entry.scheme.representative;
            let label = format!("({},{}):{}", set.genus, set.grade, short(&entry.scheme.code));
            out.push((rep.clone(), label.clone()));
            if rep.is_cycle_graph() {
                continue;
            }
            for (variant, tag) in extended_realizations(rep) {
                if seen.insert(canonical_code(&variant).unwrap()) {
                    out.push((variant, format!("{label}+{tag}")));
                }
            }
        }
        out
    }
}

fn short(code: &CanonicalCode) -> String {
    let hex = code.hex();
    hex.chars().take(16).collect()
}

/// In-class realizations of a representative with one ladder grown: straight
/// ladders keep their rung parity, side ladders grow freely, and broken
/// ladders stay broken under any padding.
fn extended_realizations(rep: &OrientedMap) -> Vec<(OrientedMap, String)> {
    use crate::reduction::{find_dipoles, maximal_ladders, rebuild_ladder_with, LadderKind};
    let ladders = maximal_ladders(rep, &find_dipoles(rep));
    let mut out = Vec::new();
    for (i, ladder) in ladders.iter().enumerate() {
        let compositions: Vec<Vec<DipoleKind>> = match ladder.kind {
            LadderKind::Ne => vec![vec![DipoleKind::N; 4]],
            LadderKind::No => vec![vec![DipoleKind::N; 5]],
            LadderKind::L => vec![vec![DipoleKind::L; 3], vec![DipoleKind::L; 4]],
            LadderKind::R => vec![vec![DipoleKind::R; 3], vec![DipoleKind::R; 4]],
            LadderKind::B => vec![
                vec![DipoleKind::N, DipoleKind::N, DipoleKind::L],
                vec![DipoleKind::N, DipoleKind::L, DipoleKind::L],
                vec![DipoleKind::N, DipoleKind::N, DipoleKind::L, DipoleKind::L],
            ],
        };
        for comp in compositions {
            for flipped in [false, true] {
                if let Ok(variant) = rebuild_ladder_with(rep, ladder, &comp, flipped) {
                    out.push((variant, format!("grown-ladder{i}-{comp:?}-{flipped}")));
                }
                if ladder.closed {
                    break;
                }
            }
        }
    }
    out
}

/// Normalizes candidates, keeps those landing on the set's key, dedups by
/// scheme code.
fn absorb(set: &mut SchemeSet, candidates: Vec<Candidate>) {
    // Cheap pre-dedup on the raw map before the scheme reduction.
    let mut seen_raw = BTreeSet::new();
    let mut work = Vec::new();
    for c in candidates {
        let raw = canonical_code(&c.map).expect("candidates are connected");
        if seen_raw.insert(raw) {
            work.push(c);
        }
    }
    let reduced: Vec<Option<(CanonicalCode, SchemeEntry)>> = work
        .par_iter()
        .map(|c| {
            let scheme = scheme_of(&c.map).ok()?;
            if scheme.representative.is_cycle_graph() {
                return None;
            }
            let invariants = scheme.representative.invariants().ok()?;
            if invariants.genus != set.genus || invariants.grade != set.grade {
                return None;
            }
            let two_pi = is_2pi(&scheme.representative);
            Some((
                scheme.code.clone(),
                SchemeEntry { scheme, invariants, two_pi, provenance: c.provenance.clone() },
            ))
        })
        .collect();
    for item in reduced.into_iter().flatten() {
        set.entries.entry(item.0).or_insert(item.1);
    }
}

/// Scheme sets are closed under the global arrow flip and under mirroring:
/// both preserve genus, grade, melon-freeness, and irreducibility while
/// swapping the two side-strand systems. Candidate moves carry fixed-
/// handedness templates, so the closure is enforced explicitly.
fn close_under_symmetry(set: &mut SchemeSet) -> Result<()> {
    loop {
        let mut fresh: Vec<(CanonicalCode, SchemeEntry)> = Vec::new();
        for entry in set.entries.values() {
            let rep = &entry.scheme.representative;
            if rep.is_cycle_graph() {
                continue;
            }
            for (tag, variant) in
                [("reversal", rep.reverse_all_arrows()), ("mirror", rep.mirror())]
            {
                let scheme = scheme_of(&variant)?;
                if set.entries.contains_key(&scheme.code)
                    || fresh.iter().any(|(c, _)| *c == scheme.code)
                {
                    continue;
                }
                let invariants = scheme.representative.invariants()?;
                assert_eq!((invariants.genus, invariants.grade), (set.genus, set.grade));
                let two_pi = is_2pi(&scheme.representative);
                let provenance = format!("{tag} of {}", short(&entry.scheme.code));
                fresh.push((
                    scheme.code.clone(),
                    SchemeEntry { scheme, invariants, two_pi, provenance },
                ));
            }
        }
        if fresh.is_empty() {
            return Ok(());
        }
        for (code, entry) in fresh {
            set.entries.entry(code).or_insert(entry);
        }
    }
}

/// Unordered edge pairs lying on one face of the chosen strand system.
fn same_face_pairs(map: &OrientedMap, kind: DipoleKind) -> Vec<(usize, usize)> {
    let faces = map.trace_faces().expect("valid map");
    let groups: Vec<Vec<usize>> = match kind {
        DipoleKind::N => faces
            .straight_faces
            .iter()
            .map(|sf| {
                let mut edges = sf.edges.clone();
                edges.sort_unstable();
                edges.dedup();
                edges
            })
            .collect(),
        DipoleKind::L => faces
            .l_faces
            .iter()
            .map(|f| f.iter().map(|&d| map.edge_of(d)).collect())
            .collect(),
        DipoleKind::R => faces
            .r_faces
            .iter()
            .map(|f| f.iter().map(|&d| map.edge_of(d)).collect())
            .collect(),
    };
    let mut out = Vec::new();
    for group in groups {
        for i in 0..group.len() {
            for j in i + 1..group.len() {
                out.push((group[i].min(group[j]), group[i].max(group[j])));
            }
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// Enumerates all schemes at the given genus and grade.
pub fn enumerate_schemes(genus: usize, grade: usize, rung_cap: usize) -> Result<SchemeSet> {
    let mut driver = Enumerator::new(rung_cap);
    let arc = driver.schemes(genus, grade)?;
    Ok((*arc).clone())
}

/// Inserts a straight chain across two cuts of one straight face such that
/// the genus rises by one at fixed grade. The cut orientations force the
/// rung parity; the wrong parity is rejected.
pub fn insert_connecting_n(
    map: &OrientedMap,
    cut: (usize, usize),
    rungs: usize,
) -> Result<OrientedMap> {
    insert_n(map, CutSpec { edges: cut, pairing: NPairing::Connecting }, rungs)
}

/// Same cuts, other reconnection: genus up one, grade up two.
pub fn insert_rearranging_n(
    map: &OrientedMap,
    cut: (usize, usize),
    rungs: usize,
) -> Result<OrientedMap> {
    insert_n(map, CutSpec { edges: cut, pairing: NPairing::Rearranging }, rungs)
}

pub fn insert_n(map: &OrientedMap, spec: CutSpec, rungs: usize) -> Result<OrientedMap> {
    let kinds = vec![DipoleKind::N; rungs];
    let (e1, e2) = spec.edges;
    let result = if map.is_cycle_graph() {
        closed_chain(&kinds)
    } else {
        if !same_face_pairs(map, DipoleKind::N).contains(&(e1.min(e2), e1.max(e2))) {
            return Err(Error::EdgesNotOnSameLoop);
        }
        if e1 == e2 {
            return Err(Error::EdgesNotOnSameLoop);
        }
        insert_chain(map, e1, e2, &kinds)
    };
    let before = map.invariants()?;
    let after = result.invariants()?;
    let expected_grade = match spec.pairing {
        NPairing::Connecting => before.grade,
        NPairing::Rearranging => before.grade + 2,
    };
    if after.grade != expected_grade {
        return Err(Error::ParityForbidden);
    }
    assert_eq!(after.genus, before.genus + 1, "straight insertion must raise the genus");
    Ok(result)
}

/// Joins two maps through a separating chain of the given composition.
pub fn insert_separating(
    left: &OrientedMap,
    right: &OrientedMap,
    edge_left: usize,
    edge_right: usize,
    kinds: &[DipoleKind],
) -> Result<OrientedMap> {
    if left.is_cycle_graph() || right.is_cycle_graph() {
        return Err(Error::OrientationMismatch);
    }
    let result = connect_with_chain(left, edge_left, right, edge_right, kinds);
    let (a, b, c) = (left.invariants()?, right.invariants()?, result.invariants()?);
    assert_eq!(a.genus + b.genus, c.genus, "separating insertion must add the genus");
    assert_eq!(a.grade + b.grade, c.grade, "separating insertion must add the grade");
    Ok(result)
}

/// Hand-encoded minimal representatives with their expected invariants.
pub fn base_catalog() -> Vec<(&'static str, OrientedMap)> {
    use crate::map::samples;
    vec![
        ("cycle graph", OrientedMap::cycle_graph()),
        ("infinity", samples::infinity()),
        ("infinity mirrored", samples::infinity_crossed()),
        ("closed straight pair", closed_chain(&[DipoleKind::N, DipoleKind::N])),
        ("double tadpole", samples::double_tadpole()),
        ("necklace of three", samples::necklace(3)),
    ]
}

pub use crate::reduction::scheme_of as normalize_scheme;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::map::samples;

    #[test]
    fn planar_grade_one_has_two_schemes() {
        let set = enumerate_schemes(0, 1, 3).unwrap();
        assert_eq!(set.len(), 2);
        assert_eq!(set.count_2pi(), 2);
    }

    #[test]
    fn connecting_insertion_round_trips_through_contraction() {
        let m = samples::infinity();
        let edges: Vec<usize> = m.edges().collect();
        let inserted = insert_connecting_n(&m, (edges[0], edges[1]), 1);
        // The infinity graph's two edges sit antiparallel on its loop, so a
        // single rung connects.
        let inserted = inserted.unwrap();
        let inv = inserted.invariants().unwrap();
        assert_eq!((inv.genus, inv.grade), (1, 1));
        let dips = crate::reduction::find_dipoles(&inserted);
        let n_dip = dips.iter().find(|d| d.kind == DipoleKind::N).unwrap();
        let (comps, report) = crate::reduction::contract_dipole(&inserted, n_dip).unwrap();
        assert_eq!(report.sigma, Some(-1));
        assert_eq!(comps.len(), 1);
        assert_eq!(
            canonical_code(&comps[0]).unwrap(),
            canonical_code(&m).unwrap()
        );
    }

    #[test]
    fn wrong_parity_is_rejected() {
        let m = samples::infinity();
        let edges: Vec<usize> = m.edges().collect();
        assert!(matches!(
            insert_connecting_n(&m, (edges[0], edges[1]), 2),
            Err(Error::ParityForbidden)
        ));
        assert!(insert_rearranging_n(&m, (edges[0], edges[1]), 2).is_ok());
    }

    #[test]
    fn rearranging_into_cycle_gives_the_twisted_closure() {
        let cycle = OrientedMap::cycle_graph();
        let m = insert_rearranging_n(&cycle, (0, 0), 1).unwrap();
        let inv = m.invariants().unwrap();
        assert_eq!((inv.genus, inv.grade), (1, 2));
    }

    #[test]
    fn base_catalog_invariants() {
        let expected = [
            ("cycle graph", (0, 0)),
            ("infinity", (0, 1)),
            ("infinity mirrored", (0, 1)),
            ("closed straight pair", (1, 0)),
            ("double tadpole", (0, 2)),
            ("necklace of three", (0, 3)),
        ];
        for ((name, map), (ename, key)) in base_catalog().iter().zip(expected) {
            assert_eq!(*name, ename);
            let inv = map.invariants().unwrap();
            assert_eq!((inv.genus, inv.grade), key, "{name}");
        }
    }

    #[test]
    fn separating_insertion_is_additive() {
        let a = samples::infinity();
        let b = samples::necklace(3);
        let ea = a.edges().next().unwrap();
        let eb = b.edges().next().unwrap();
        let joined =
            insert_separating(&a, &b, ea, eb, &[DipoleKind::L, DipoleKind::N]).unwrap();
        let inv = joined.invariants().unwrap();
        assert_eq!((inv.genus, inv.grade), (0, 4));
        assert!(!is_2pi(&joined));
    }
}
