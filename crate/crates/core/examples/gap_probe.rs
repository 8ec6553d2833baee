use odlab_core::generation::enumerate_schemes;
use odlab_core::oracle::build_corpus;
use odlab_core::reduction::{is_2pi, scheme_of, two_edge_cuts};

fn main() {
    let corpus = build_corpus(5, None).unwrap();
    for (g, l) in [(0usize, 2usize), (1, 1)] {
        let set = enumerate_schemes(g, l, 3).unwrap();
        println!("== key ({g},{l}): enumerated {} (2PI {} / 2PR {})", set.len(), set.count_2pi(), set.count_2pr());
        let mut missing = 0;
        for e in corpus.iter() {
            if !e.melon_free || e.invariants.genus != g || e.invariants.grade != l {
                continue;
            }
            let s = scheme_of(&e.map).unwrap();
            if !set.contains(&s.code) {
                missing += 1;
                if missing <= 6 {
                    println!("  MISSING scheme of corpus map v={} 2pi={} rep_v={} rep={:?}",
                        e.invariants.vertices, e.two_pi, s.representative.vertex_count(), s.representative);
                }
            }
        }
        println!("  total missing from corpus side: {missing}");
        // small 2PR reps: show cut structure
        for entry in set.iter().filter(|e| !e.two_pi && e.scheme.representative.vertex_count() <= 4) {
            let rep = &entry.scheme.representative;
            println!("  2PR rep v={} tadpole={} cuts={:?} prov='{}'",
                rep.vertex_count(), rep.has_tadpole(), two_edge_cuts(rep).len(), entry.provenance);
        }
        for entry in set.iter().filter(|e| e.two_pi) {
            let rep = &entry.scheme.representative;
            println!("  2PI rep v={} tadpole={} 2pi={} prov='{}'",
                rep.vertex_count(), rep.has_tadpole(), is_2pi(rep), entry.provenance);
        }
    }
}
