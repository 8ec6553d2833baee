use odlab_core::generation::enumerate_schemes;
use odlab_core::oracle::build_corpus;
use odlab_core::reduction::scheme_of;
use std::collections::BTreeMap;

fn main() {
    let corpus = build_corpus(6, None).unwrap();
    let set = enumerate_schemes(0, 2, 3).unwrap();
    // Schemes reachable from the v<=6 corpus at (0,2).
    let mut classes: BTreeMap<_, (usize, bool, bool)> = BTreeMap::new();
    for e in corpus.iter() {
        if !e.melon_free || e.invariants.genus != 0 || e.invariants.grade != 2 {
            continue;
        }
        let s = scheme_of(&e.map).unwrap();
        classes
            .entry(s.code.clone())
            .or_insert((s.representative.vertex_count(), e.two_pi, set.contains(&s.code)));
    }
    println!("distinct (0,2) scheme classes from v<=6 corpus: {}", classes.len());
    for (code, (repv, twopi, in_set)) in &classes {
        if !in_set || *twopi {
            println!("  rep_v={repv} corpus_2pi={twopi} in_enumerated={in_set} code={}", &code.hex()[..24.min(code.hex().len())]);
        }
    }
    let missing = classes.values().filter(|(_, _, inset)| !inset).count();
    println!("missing from enumerated set: {missing}");
}
