use odlab_core::generation::enumerate_schemes;
use odlab_core::reduction::scheme_of;

fn main() {
    let set = enumerate_schemes(1, 2, 3).unwrap();
    println!("2PI {} / 2PR {}", set.count_2pi(), set.count_2pr());
    let mut bad = 0;
    for e in set.iter().filter(|e| e.two_pi) {
        let rep = &e.scheme.representative;
        for (tag, var) in [("rev", rep.reverse_all_arrows()), ("mir", rep.mirror())] {
            let s = scheme_of(&var).unwrap();
            if !set.contains(&s.code) {
                bad += 1;
                println!("{tag} of a 2PI scheme is MISSING: rep_v={}", rep.vertex_count());
            } else if !set.entries[&s.code].two_pi {
                println!("{tag} lands on a 2PR-flagged entry!: rep_v={}", rep.vertex_count());
            }
        }
    }
    println!("missing symmetry partners: {bad}");
}
