//! Exhaustive generation of all connected maps up to a vertex bound, used as
//! ground truth for counts, contraction relations, and structural lemmas.
//!
//! The search pairs outgoing darts in ascending order. Targets are unpaired
//! ingoing darts of vertices already touched, plus a single representative
//! slot of the lowest untouched vertex; fresh vertices are interchangeable
//! and the two ingoing slots of a fresh vertex differ by an even shift.
//! Touched vertices always form one component, so a branch dies exactly when
//! its touched part saturates early, and every completed leaf is connected.
//! Canonical codes remove the remaining symmetry at the end.

use crate::canon::{canonical_code, canonical_code_with, canonical_form, CanonicalCode, CodeFlags};
use crate::error::{Error, Result};
use crate::io::MapFile;
use crate::map::{opposite, InvariantSet, OrientedMap};
use crate::reduction::{is_2pi, is_melon_free};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

pub const MAX_ORACLE_V: usize = 6;
pub const CORPUS_FORMAT: &str = "odcorpus-v1";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleEntry {
    pub code: CanonicalCode,
    pub map: OrientedMap,
    pub invariants: InvariantSet,
    pub melon_free: bool,
    pub two_pi: bool,
    pub has_tadpole: bool,
}

#[derive(Debug, Clone)]
pub struct OracleCorpus {
    pub max_v: usize,
    pub entries: BTreeMap<CanonicalCode, OracleEntry>,
}

impl OracleCorpus {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &OracleEntry> {
        self.entries.values()
    }
}

#[derive(Clone)]
struct Search {
    v: usize,
    alpha: Vec<usize>,
    touched: Vec<bool>,
    touched_count: usize,
    unpaired_touched: usize,
    /// Prune branches where a straight-strand cycle closes short of 2v.
    single_loop_only: bool,
}

impl Search {
    fn new(v: usize, single_loop_only: bool) -> Search {
        let mut touched = vec![false; v];
        touched[0] = true;
        Search {
            v,
            alpha: vec![usize::MAX; 4 * v],
            touched,
            touched_count: 1,
            unpaired_touched: 4,
            single_loop_only,
        }
    }

    fn next_dart(&self) -> Option<usize> {
        (0..4 * self.v).step_by(2).find(|&d| self.alpha[d] == usize::MAX)
    }

    fn targets(&self) -> Vec<usize> {
        let mut targets: Vec<usize> = (1..4 * self.v)
            .step_by(2)
            .filter(|&q| self.touched[q / 4] && self.alpha[q] == usize::MAX)
            .collect();
        if let Some(w) = (0..self.v).find(|&w| !self.touched[w]) {
            targets.push(4 * w + 1);
        }
        targets
    }

    fn apply(&mut self, d: usize, q: usize) {
        if !self.touched[q / 4] {
            self.touched[q / 4] = true;
            self.touched_count += 1;
            self.unpaired_touched += 4;
        }
        self.alpha[d] = q;
        self.alpha[q] = d;
        self.unpaired_touched -= 2;
    }

    fn undo(&mut self, d: usize, q: usize, was_fresh: bool) {
        self.alpha[d] = usize::MAX;
        self.alpha[q] = usize::MAX;
        self.unpaired_touched += 2;
        if was_fresh {
            self.touched[q / 4] = false;
            self.touched_count -= 1;
            self.unpaired_touched -= 4;
        }
    }

    fn viable(&self) -> bool {
        (self.unpaired_touched > 0 || self.touched_count == self.v)
            && (!self.single_loop_only || !self.short_loop_closed())
    }

    fn run(&mut self, results: &mut Vec<Vec<usize>>) {
        let Some(d) = self.next_dart() else {
            results.push(self.alpha.clone());
            return;
        };
        for q in self.targets() {
            let was_fresh = !self.touched[q / 4];
            self.apply(d, q);
            if self.viable() {
                self.run(results);
            }
            self.undo(d, q, was_fresh);
        }
    }

    /// True when some straight-strand cycle has closed with fewer than 2v
    /// steps, which would cap the straight-face count above one.
    fn short_loop_closed(&self) -> bool {
        let n = 4 * self.v;
        let mut visited = vec![false; n];
        for start in 0..n {
            if visited[start] || self.alpha[start] == usize::MAX {
                continue;
            }
            let mut len = 0usize;
            let mut cur = start;
            loop {
                if self.alpha[cur] == usize::MAX {
                    break;
                }
                visited[cur] = true;
                len += 1;
                cur = opposite(self.alpha[cur]);
                if cur == start {
                    if len < 2 * self.v {
                        return true;
                    }
                    break;
                }
                if visited[cur] {
                    break;
                }
            }
        }
        false
    }
}

fn search_alphas(v: usize, single_loop_only: bool) -> Vec<Vec<usize>> {
    // Expand the first few levels breadth-first, then search subtrees in
    // parallel.
    let mut live = vec![Search::new(v, single_loop_only)];
    let mut results: Vec<Vec<usize>> = Vec::new();
    let depth = if v >= 4 { 4 } else { 1 };
    for _ in 0..depth {
        let mut next = Vec::new();
        for state in live {
            match state.next_dart() {
                None => results.push(state.alpha.clone()),
                Some(d) => {
                    for q in state.targets() {
                        let mut child = state.clone();
                        child.apply(d, q);
                        if child.viable() {
                            next.push(child);
                        }
                    }
                }
            }
        }
        live = next;
    }
    let deep: Vec<Vec<usize>> = live
        .into_par_iter()
        .flat_map(|mut state| {
            let mut local = Vec::new();
            state.run(&mut local);
            local
        })
        .collect();
    results.extend(deep);
    results
}

fn entry_for(map: &OrientedMap) -> OracleEntry {
    let rep = canonical_form(map).expect("search yields connected maps");
    OracleEntry {
        code: canonical_code(&rep).expect("connected"),
        invariants: rep.invariants().expect("connected"),
        melon_free: is_melon_free(&rep),
        two_pi: is_2pi(&rep),
        has_tadpole: rep.has_tadpole(),
        map: rep,
    }
}

fn dedup_entries(v: usize, raw: Vec<Vec<usize>>) -> Vec<OracleEntry> {
    let deduped: BTreeMap<CanonicalCode, OracleEntry> = raw
        .par_chunks(2048)
        .map(|alphas| {
            let mut local: BTreeMap<CanonicalCode, OracleEntry> = BTreeMap::new();
            for alpha in alphas {
                let map = OrientedMap::from_alpha(v, alpha.clone()).expect("valid pairing");
                let code = canonical_code(&map).expect("connected");
                local.entry(code).or_insert_with(|| entry_for(&map));
            }
            local
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (k, e) in b {
                a.entry(k).or_insert(e);
            }
            a
        });
    deduped.into_values().collect()
}

/// All isomorphism classes of connected maps with exactly `v` vertices.
pub fn enumerate_all_maps(v: usize) -> Result<Vec<OracleEntry>> {
    if v == 0 || v > MAX_ORACLE_V {
        return Err(Error::BoundExceeded(v, MAX_ORACLE_V));
    }
    Ok(dedup_entries(v, search_alphas(v, false)))
}

/// Connected maps with exactly `v` vertices and a single straight face. The
/// short-loop pruning keeps this fast even at the vertex bound.
pub fn enumerate_single_loop_maps(v: usize) -> Result<Vec<OracleEntry>> {
    if v == 0 || v > MAX_ORACLE_V {
        return Err(Error::BoundExceeded(v, MAX_ORACLE_V));
    }
    let entries = dedup_entries(v, search_alphas(v, true));
    Ok(entries.into_iter().filter(|e| e.invariants.straight_faces == 1).collect())
}

/// Builds (or loads from `cache_dir`) the corpus of all connected maps with
/// `1 <= v <= max_v`.
pub fn build_corpus(max_v: usize, cache_dir: Option<&Path>) -> Result<OracleCorpus> {
    if max_v == 0 || max_v > MAX_ORACLE_V {
        return Err(Error::BoundExceeded(max_v, MAX_ORACLE_V));
    }
    let mut entries = BTreeMap::new();
    for v in 1..=max_v {
        let level = match cache_dir {
            Some(dir) => load_or_build_level(v, dir)?,
            None => enumerate_all_maps(v)?,
        };
        for e in level {
            entries.insert(e.code.clone(), e);
        }
    }
    Ok(OracleCorpus { max_v, entries })
}

fn cache_path(dir: &Path, v: usize) -> PathBuf {
    dir.join(format!("{CORPUS_FORMAT}-v{v}.jsonl"))
}

fn load_or_build_level(v: usize, dir: &Path) -> Result<Vec<OracleEntry>> {
    let path = cache_path(dir, v);
    if path.exists() {
        if let Ok(entries) = read_corpus_level(&path, v) {
            return Ok(entries);
        }
    }
    let entries = enumerate_all_maps(v)?;
    std::fs::create_dir_all(dir)?;
    write_corpus_level(&entries, &path, v)?;
    Ok(entries)
}

#[derive(Serialize, Deserialize)]
struct CorpusHeader {
    format: String,
    v: usize,
    count: usize,
}

#[derive(Serialize, Deserialize)]
struct CorpusLine {
    code: String,
    map: MapFile,
    invariants: InvariantSet,
    melon_free: bool,
    two_pi: bool,
    has_tadpole: bool,
}

pub fn write_corpus_level(entries: &[OracleEntry], path: &Path, v: usize) -> Result<()> {
    use std::io::Write;
    let tmp = path.with_extension("tmp");
    {
        let mut out = std::io::BufWriter::new(std::fs::File::create(&tmp)?);
        let header = CorpusHeader { format: CORPUS_FORMAT.into(), v, count: entries.len() };
        writeln!(out, "{}", serde_json::to_string(&header)?)?;
        for e in entries {
            let line = CorpusLine {
                code: e.code.hex(),
                map: MapFile::from_map(&e.map),
                invariants: e.invariants.clone(),
                melon_free: e.melon_free,
                two_pi: e.two_pi,
                has_tadpole: e.has_tadpole,
            };
            writeln!(out, "{}", serde_json::to_string(&line)?)?;
        }
    }
    std::fs::rename(tmp, path)?;
    Ok(())
}

pub fn read_corpus_level(path: &Path, expect_v: usize) -> Result<Vec<OracleEntry>> {
    let text = std::fs::read_to_string(path)?;
    let mut lines = text.lines();
    let header: CorpusHeader = serde_json::from_str(
        lines.next().ok_or_else(|| Error::CorruptEntry("empty corpus".into()))?,
    )?;
    if header.format != CORPUS_FORMAT {
        return Err(Error::FormatVersionMismatch {
            expected: CORPUS_FORMAT.into(),
            found: header.format,
        });
    }
    if header.v != expect_v {
        return Err(Error::KeyMismatch(format!(
            "cache holds v={}, wanted v={expect_v}",
            header.v
        )));
    }
    let mut entries = Vec::with_capacity(header.count);
    for line in lines {
        if line.trim().is_empty() {
            continue;
        }
        let parsed: CorpusLine = serde_json::from_str(line)?;
        let map = parsed.map.into_map()?;
        let code = canonical_code(&map)?;
        if code.hex() != parsed.code {
            return Err(Error::CorruptEntry("stored code disagrees with the map".into()));
        }
        entries.push(OracleEntry {
            code,
            invariants: parsed.invariants,
            melon_free: parsed.melon_free,
            two_pi: parsed.two_pi,
            has_tadpole: parsed.has_tadpole,
            map,
        });
    }
    if entries.len() != header.count {
        return Err(Error::CorruptEntry("entry count disagrees with the header".into()));
    }
    Ok(entries)
}

/// Predicate for corpus queries; unset fields match everything. With the
/// quotient flags set, matching entries merge into classes and one
/// representative per class is returned.
#[derive(Debug, Clone, Default)]
pub struct CorpusFilter {
    pub genus: Option<usize>,
    pub grade: Option<usize>,
    pub straight_faces: Option<usize>,
    pub melon_free: Option<bool>,
    pub two_pi: Option<bool>,
    pub has_tadpole: Option<bool>,
    pub loop_config: Option<Vec<usize>>,
    pub max_v: Option<usize>,
    pub mod_orientation: bool,
    pub mod_reflection: bool,
}

pub fn filter_corpus<'a>(corpus: &'a OracleCorpus, filter: &CorpusFilter) -> Vec<&'a OracleEntry> {
    filter_entries(corpus.iter(), filter)
}

pub fn filter_entries<'a>(
    entries: impl Iterator<Item = &'a OracleEntry>,
    filter: &CorpusFilter,
) -> Vec<&'a OracleEntry> {
    let matches = |e: &OracleEntry| {
        filter.genus.map_or(true, |g| e.invariants.genus == g)
            && filter.grade.map_or(true, |l| e.invariants.grade == l)
            && filter.straight_faces.map_or(true, |p| e.invariants.straight_faces == p)
            && filter.melon_free.map_or(true, |m| e.melon_free == m)
            && filter.two_pi.map_or(true, |t| e.two_pi == t)
            && filter.has_tadpole.map_or(true, |t| e.has_tadpole == t)
            && filter.loop_config.as_ref().map_or(true, |c| &e.invariants.loop_config == c)
            && filter.max_v.map_or(true, |mv| e.invariants.vertices <= mv)
    };
    let hits: Vec<&OracleEntry> = entries.filter(|e| matches(e)).collect();
    if !filter.mod_orientation && !filter.mod_reflection {
        return hits;
    }
    let flags = CodeFlags {
        mod_orientation: filter.mod_orientation,
        mod_reflection: filter.mod_reflection,
    };
    let mut classes: BTreeMap<CanonicalCode, &OracleEntry> = BTreeMap::new();
    for e in hits {
        let key = canonical_code_with(&e.map, flags).expect("connected");
        classes.entry(key).or_insert(e);
    }
    classes.into_values().collect()
}

#[derive(Debug, Clone, Default)]
pub struct LemmaReport {
    pub checked: usize,
    pub violations: Vec<(String, CanonicalCode)>,
}

impl LemmaReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Structural constraints on straight-face configurations: planar grade one
/// and low-grade positive-genus maps carry a length-two loop; planar grade
/// two without one is all fours; planar grade three allows a single six; and
/// melon-free planar no-two-loop configurations must fit the padded form.
pub fn check_loop_config_lemmas(corpus: &OracleCorpus) -> LemmaReport {
    let mut report = LemmaReport::default();
    for e in corpus.iter() {
        let inv = &e.invariants;
        let config = &inv.loop_config;
        let has_two = config.contains(&2);
        report.checked += 1;
        let mut fail = |name: &str| report.violations.push((name.into(), e.code.clone()));

        if inv.genus == 0 && inv.grade == 1 && !has_two {
            fail("planar grade-one needs a length-two loop");
        }
        if inv.genus >= 1 && inv.grade <= 3 && !has_two {
            fail("positive genus at grade <= 3 needs a length-two loop");
        }
        if inv.genus == 0 && inv.grade == 2 && !has_two && !config.iter().all(|&l| l == 4) {
            fail("planar grade-two must be all fours without a two-loop");
        }
        if inv.genus == 0 && inv.grade == 3 && !has_two {
            let sixes = config.iter().filter(|&&l| l == 6).count();
            let fours = config.iter().filter(|&&l| l == 4).count();
            if !(sixes == 1 && fours == config.len() - 1) {
                fail("planar grade-three must be fours plus one six without a two-loop");
            }
        }
        if e.melon_free
            && inv.genus == 0
            && !has_two
            && !admissible_padding(inv.grade, inv.straight_faces, config)
        {
            fail("no admissible padded configuration");
        }
    }
    report
}

/// Without two-loops, a melon-free planar configuration is all fours padded
/// with `i` parts above two summing to `2(grade + 2(i-1))`; when the grade
/// exceeds the face count by more than two, only the total is constrained.
fn admissible_padding(grade: usize, phi: usize, config: &[usize]) -> bool {
    if !config.iter().all(|l| l % 2 == 0) {
        return false;
    }
    if grade > phi + 2 {
        let total: usize = config.iter().sum();
        return total + 4 == 2 * grade + 4 * phi;
    }
    if grade < 2 {
        return false;
    }
    (0..=grade - 2).any(|i| {
        let target = 2 * grade + 4 * i;
        target >= 4 && can_pick_q(config, i, target - 4)
    })
}

/// Can `need` parts above two be chosen from `config` summing to `target`,
/// with every remaining part equal to four?
fn can_pick_q(config: &[usize], need: usize, target: usize) -> bool {
    fn rec(parts: &[usize], left: usize, target: usize) -> bool {
        if left == 0 {
            return target == 0 && parts.iter().all(|&l| l == 4);
        }
        let Some((&first, rest)) = parts.split_first() else { return false };
        (first > 2 && first <= target && rec(rest, left - 1, target - first))
            || (first == 4 && rec(rest, left, target))
    }
    rec(config, need, target)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::map::samples;

    #[test]
    fn one_vertex_gives_the_two_infinity_graphs() {
        let entries = enumerate_all_maps(1).unwrap();
        assert_eq!(entries.len(), 2);
        for e in &entries {
            assert_eq!((e.invariants.genus, e.invariants.grade), (0, 1));
            assert!(e.melon_free);
            assert!(e.two_pi);
        }
        let codes: Vec<&CanonicalCode> = entries.iter().map(|e| &e.code).collect();
        assert!(codes.contains(&&canonical_code(&samples::infinity()).unwrap()));
        assert!(codes.contains(&&canonical_code(&samples::infinity_crossed()).unwrap()));
    }

    #[test]
    fn two_vertices_contain_the_named_graphs() {
        let entries = enumerate_all_maps(2).unwrap();
        let has = |m: &OrientedMap| {
            let c = canonical_code(m).unwrap();
            entries.iter().any(|e| e.code == c)
        };
        assert!(has(&samples::vacuum_melon()));
        assert!(has(&samples::vacuum_twisted()));
        assert!(has(&samples::double_tadpole()));
        let vacua: Vec<_> = entries.iter().filter(|e| e.invariants.degree_x2 == 0).collect();
        assert_eq!(vacua.len(), 1, "one degree-zero class at two vertices");
        assert!(!vacua[0].melon_free);
    }

    #[test]
    fn grade_zero_genus_one_first_appears_at_four_vertices() {
        for v in 1..=3 {
            let entries = enumerate_all_maps(v).unwrap();
            assert!(entries.iter().all(|e| !(e.invariants.genus == 1 && e.invariants.grade == 0)));
        }
        let entries = enumerate_all_maps(4).unwrap();
        let hits: Vec<_> = entries
            .iter()
            .filter(|e| e.invariants.genus == 1 && e.invariants.grade == 0 && e.melon_free)
            .collect();
        assert_eq!(hits.len(), 1, "one melon-free class at genus one, grade zero");
        assert_eq!(hits[0].invariants.loop_config, vec![2, 2, 2, 2]);
    }

    #[test]
    fn necklace_is_the_unique_planar_single_loop_class_at_three_vertices() {
        let corpus = build_corpus(3, None).unwrap();
        let classes = filter_corpus(
            &corpus,
            &CorpusFilter {
                genus: Some(0),
                straight_faces: Some(1),
                grade: Some(3),
                melon_free: Some(true),
                has_tadpole: Some(false),
                mod_orientation: true,
                mod_reflection: true,
                ..CorpusFilter::default()
            },
        );
        assert_eq!(classes.len(), 1);
        assert_eq!(
            canonical_code_with(&classes[0].map, CodeFlags::SHADOW).unwrap(),
            canonical_code_with(&samples::necklace(3), CodeFlags::SHADOW).unwrap()
        );
    }

    #[test]
    fn single_loop_search_agrees_with_the_filtered_enumeration() {
        for v in 1..=4 {
            let fast = enumerate_single_loop_maps(v).unwrap();
            let all = enumerate_all_maps(v).unwrap();
            let want: Vec<&OracleEntry> =
                all.iter().filter(|e| e.invariants.straight_faces == 1).collect();
            assert_eq!(fast.len(), want.len(), "v={v}");
        }
    }

    #[test]
    fn loop_config_lemmas_hold_up_to_four_vertices() {
        let corpus = build_corpus(4, None).unwrap();
        let report = check_loop_config_lemmas(&corpus);
        assert!(report.ok(), "violations: {:?}", report.violations);
    }

    #[test]
    fn corpus_cache_round_trips() {
        let dir = tempfile::tempdir().unwrap();
        let a = build_corpus(2, Some(dir.path())).unwrap();
        let b = build_corpus(2, Some(dir.path())).unwrap();
        assert_eq!(a.len(), b.len());
        let codes_a: Vec<_> = a.iter().map(|e| e.code.clone()).collect();
        let codes_b: Vec<_> = b.iter().map(|e| e.code.clone()).collect();
        assert_eq!(codes_a, codes_b);
    }

    #[test]
    fn bound_is_enforced() {
        assert!(matches!(enumerate_all_maps(7), Err(Error::BoundExceeded(7, _))));
        assert!(matches!(build_corpus(0, None), Err(Error::BoundExceeded(0, _))));
    }

    /// Independent route: enumerate every pairing of outgoing to ingoing
    /// darts with no symmetry reduction and compare the class sets.
    #[test]
    fn reduced_search_matches_plain_brute_force() {
        for v in 1..=3usize {
            let outs: Vec<usize> = (0..4 * v).filter(|d| d % 2 == 0).collect();
            let ins: Vec<usize> = (0..4 * v).filter(|d| d % 2 == 1).collect();
            let mut perm = ins.clone();
            let mut classes = std::collections::BTreeSet::new();
            permute(&mut perm, 0, &mut |p: &[usize]| {
                let mut alpha = vec![usize::MAX; 4 * v];
                for (i, &o) in outs.iter().enumerate() {
                    alpha[o] = p[i];
                    alpha[p[i]] = o;
                }
                let map = OrientedMap::from_alpha(v, alpha).unwrap();
                if map.is_connected() {
                    classes.insert(canonical_code(&map).unwrap());
                }
            });
            let fast: std::collections::BTreeSet<CanonicalCode> =
                enumerate_all_maps(v).unwrap().into_iter().map(|e| e.code).collect();
            assert_eq!(classes, fast, "v={v}");
        }
    }

    fn permute(items: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
        if k == items.len() {
            visit(items);
            return;
        }
        for i in k..items.len() {
            items.swap(k, i);
            permute(items, k + 1, visit);
            items.swap(k, i);
        }
    }
}
