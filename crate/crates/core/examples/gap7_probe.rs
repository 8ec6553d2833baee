use odlab_core::generation::enumerate_schemes;
use odlab_core::map::OrientedMap;
use odlab_core::reduction::build::{insert_chain, insert_chain_pendant, PendantVariant};
use odlab_core::reduction::{find_dipoles, is_2pi, maximal_ladders, rebuild_ladder_with, scheme_of, DipoleKind, LadderKind};
use std::collections::BTreeSet;

fn main() {
    let set12 = enumerate_schemes(1, 2, 3).unwrap();
    let known: BTreeSet<_> = set12.iter().filter(|e| e.two_pi).map(|e| e.scheme.code.clone()).collect();
    println!("known 2PI: {}", known.len());

    let set10 = enumerate_schemes(1, 0, 3).unwrap();
    let mut bases: Vec<OrientedMap> = Vec::new();
    for e in set10.iter() {
        let rep = e.scheme.representative.clone();
        // grow the closed chain too
        let ladders = maximal_ladders(&rep, &find_dipoles(&rep));
        for l in &ladders {
            if l.kind == LadderKind::Ne {
                if let Ok(m) = rebuild_ladder_with(&rep, l, &vec![DipoleKind::N; 4], false) {
                    bases.push(m);
                }
            }
        }
        bases.push(rep);
    }
    let mut fresh = BTreeSet::new();
    for base in &bases {
        for kind in [DipoleKind::L, DipoleKind::R] {
            for n in 1..=3usize {
                let kinds = vec![kind; n];
                let faces = base.trace_faces().unwrap();
                let groups: Vec<Vec<usize>> = match kind {
                    DipoleKind::L => faces.l_faces.iter().map(|f| f.iter().map(|&d| base.edge_of(d)).collect()).collect(),
                    DipoleKind::R => faces.r_faces.iter().map(|f| f.iter().map(|&d| base.edge_of(d)).collect()).collect(),
                    _ => unreachable!(),
                };
                let mut try_map = |m: OrientedMap| {
                    if let Ok(s) = scheme_of(&m) {
                        if s.representative.is_cycle_graph() { return; }
                        let inv = s.representative.invariants().unwrap();
                        if inv.genus == 1 && inv.grade == 2 && is_2pi(&s.representative) && !known.contains(&s.code) {
                            if fresh.insert(s.code.clone()) {
                                println!("NEW 2PI: rep_v={} ladders={:?}", s.representative.vertex_count(),
                                    s.ladders.iter().map(|l| (l.kind, l.closed)).collect::<Vec<_>>());
                            }
                        }
                    }
                };
                for g in &groups {
                    let mut edges = g.clone();
                    edges.sort_unstable();
                    edges.dedup();
                    for i in 0..edges.len() { for j in i+1..edges.len() {
                        try_map(insert_chain(base, edges[i], edges[j], &kinds));
                    }}
                }
                for e in base.edges() {
                    for v in [PendantVariant::CapB, PendantVariant::CapA, PendantVariant::CrossAB, PendantVariant::CrossBA] {
                        try_map(insert_chain_pendant(base, e, &kinds, v));
                    }
                }
            }
        }
    }
    println!("new from side-chain route: {}", fresh.len());
}
