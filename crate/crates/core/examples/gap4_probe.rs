use odlab_core::generation::enumerate_schemes;
use odlab_core::oracle::build_corpus;
use odlab_core::reduction::{find_dipoles, scheme_of};

fn main() {
    let corpus = build_corpus(6, None).unwrap();
    // Dump the missing 2PI rep.
    let set = enumerate_schemes(0, 2, 3).unwrap();
    for e in corpus.iter() {
        if !e.melon_free || e.invariants.genus != 0 || e.invariants.grade != 2 || !e.two_pi {
            continue;
        }
        let s = scheme_of(&e.map).unwrap();
        if !set.contains(&s.code) {
            println!("missing 2PI rep: {:?}", s.representative);
            println!("  invariants: {:?}", e.invariants.loop_config);
            println!("  dipoles: {}", find_dipoles(&s.representative).len());
        }
    }
    println!("\nall 28 enumerated 2PR at (0,2):");
    for entry in set.iter().filter(|e| !e.two_pi) {
        println!(
            "  rep_v={} prov='{}'",
            entry.scheme.representative.vertex_count(),
            entry.provenance
        );
    }
}
