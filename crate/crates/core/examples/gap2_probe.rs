use odlab_core::generation::enumerate_schemes;
use odlab_core::oracle::build_corpus;
use odlab_core::reduction::scheme_of;

fn main() {
    let corpus = build_corpus(5, None).unwrap();
    let set = enumerate_schemes(0, 2, 3).unwrap();
    println!("corpus (0,2) melon-free entries:");
    for e in corpus.iter() {
        if !e.melon_free || e.invariants.genus != 0 || e.invariants.grade != 2 {
            continue;
        }
        let s = scheme_of(&e.map).unwrap();
        let flag = set.entries.get(&s.code).map(|x| x.two_pi);
        println!(
            "  v={} tadpole={} corpus_2pi={} -> scheme rep_v={} ladders={:?} set_2pi={:?}",
            e.invariants.vertices,
            e.has_tadpole,
            e.two_pi,
            s.representative.vertex_count(),
            s.ladders.iter().map(|l| (l.kind, l.closed)).collect::<Vec<_>>(),
            flag
        );
    }
}
