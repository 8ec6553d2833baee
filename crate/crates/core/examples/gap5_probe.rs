use odlab_core::generation::enumerate_schemes;
use odlab_core::oracle::build_corpus;
use odlab_core::reduction::scheme_of;
use std::collections::BTreeSet;

fn main() {
    let corpus = build_corpus(6, None).unwrap();
    let set = enumerate_schemes(1, 2, 3).unwrap();
    println!("enumerated (1,2): 2PI {} / 2PR {}", set.count_2pi(), set.count_2pr());
    let mut shown = BTreeSet::new();
    for e in corpus.iter() {
        if !e.melon_free || e.invariants.genus != 1 || e.invariants.grade != 2 {
            continue;
        }
        let s = scheme_of(&e.map).unwrap();
        if !set.contains(&s.code) && shown.insert(s.code.clone()) {
            println!(
                "MISSING: corpus v={} 2pi={} rep_v={} ladders={:?}",
                e.invariants.vertices,
                e.two_pi,
                s.representative.vertex_count(),
                s.ladders.iter().map(|l| (l.kind, l.closed)).collect::<Vec<_>>()
            );
            println!("  rep={:?}", s.representative);
        }
    }
    println!("distinct missing: {}", shown.len());
}
