use odlab_core::generation::enumerate_schemes;
use odlab_core::reduction::{find_dipoles, maximal_ladders};
use std::collections::BTreeMap;

fn main() {
    let set = enumerate_schemes(1, 2, 3).unwrap();
    let mut profile: BTreeMap<String, usize> = BTreeMap::new();
    for e in set.iter().filter(|e| e.two_pi) {
        let rep = &e.scheme.representative;
        let dipoles = find_dipoles(rep);
        let ladders = maximal_ladders(rep, &dipoles);
        let in_ladder: std::collections::BTreeSet<usize> =
            ladders.iter().flat_map(|l| l.vertices()).collect();
        let mut lv: Vec<String> = ladders
            .iter()
            .map(|l| format!("{}{}", l.kind, if l.closed { "." } else { "" }))
            .collect();
        for d in &dipoles {
            if !in_ladder.contains(&d.vertices.0) && !in_ladder.contains(&d.vertices.1) {
                lv.push(format!("{}d", d.kind));
            }
        }
        lv.sort();
        let key = format!("v={} [{}]", rep.vertex_count(), lv.join(","));
        *profile.entry(key).or_insert(0) += 1;
    }
    for (k, n) in profile {
        println!("{n:2} x {k}");
    }
}
