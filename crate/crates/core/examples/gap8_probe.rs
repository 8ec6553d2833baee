use odlab_core::generation::enumerate_schemes;
use odlab_core::map::OrientedMap;
use odlab_core::reduction::ladder::Ladder;
use odlab_core::reduction::{find_dipoles, is_2pi, maximal_ladders, rebuild_ladder_with, scheme_of, DipoleKind, LadderKind};
use std::collections::BTreeSet;

fn main() {
    let set12 = enumerate_schemes(1, 2, 3).unwrap();
    let mut known: BTreeSet<_> = set12.iter().filter(|e| e.two_pi).map(|e| e.scheme.code.clone()).collect();
    println!("known 2PI: {}", known.len());
    let mut frontier: Vec<OrientedMap> = set12.iter().filter(|e| e.two_pi).map(|e| e.scheme.representative.clone()).collect();
    let mut new_found = 0;
    while let Some(rep) = frontier.pop() {
        let dipoles = find_dipoles(&rep);
        let ladders = maximal_ladders(&rep, &dipoles);
        let in_ladder: BTreeSet<usize> = ladders.iter().flat_map(|l| l.vertices()).collect();
        for d in &dipoles {
            if in_ladder.contains(&d.vertices.0) || in_ladder.contains(&d.vertices.1) {
                continue;
            }
            // Grow this lone dipole into the minimal ladder of its kind.
            let comp = match d.kind {
                DipoleKind::N => vec![DipoleKind::N; 3],
                DipoleKind::L => vec![DipoleKind::L; 2],
                DipoleKind::R => vec![DipoleKind::R; 2],
            };
            let synthetic = Ladder {
                rungs: vec![d.clone()],
                kind: match d.kind {
                    DipoleKind::N => LadderKind::No,
                    DipoleKind::L => LadderKind::L,
                    DipoleKind::R => LadderKind::R,
                },
                closed: false,
                side_a: d.side_a,
                side_b: d.side_b,
            };
            if let Ok(grown) = rebuild_ladder_with(&rep, &synthetic, &comp, false) {
                if let Ok(s) = scheme_of(&grown) {
                    let inv = s.representative.invariants().unwrap();
                    if inv.genus == 1 && inv.grade == 2 && is_2pi(&s.representative) && known.insert(s.code.clone()) {
                        new_found += 1;
                        println!("NEW: rep_v={} ladders={:?}", s.representative.vertex_count(),
                            s.ladders.iter().map(|l| (l.kind, l.closed)).collect::<Vec<_>>());
                        frontier.push(s.representative.clone());
                    }
                }
            }
        }
    }
    println!("total after growth closure: {} (+{new_found})", known.len());
}
