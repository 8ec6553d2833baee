use odlab_core::generation::enumerate_schemes;
use odlab_core::map::OrientedMap;
use odlab_core::reduction::build::{closed_chain, insert_chain, insert_chain_pendant, capped_chain, PendantVariant};
use odlab_core::reduction::{find_dipoles, insert_melon, is_2pi, maximal_ladders, rebuild_ladder_with, scheme_of, DipoleKind, LadderKind};
use std::collections::BTreeSet;

fn grow(rep: &OrientedMap, deep: bool) -> Vec<OrientedMap> {
    let ladders = maximal_ladders(rep, &find_dipoles(rep));
    let mut out = Vec::new();
    for ladder in &ladders {
        let comps: Vec<Vec<DipoleKind>> = match ladder.kind {
            LadderKind::Ne => vec![vec![DipoleKind::N; 4], vec![DipoleKind::N; 6]],
            LadderKind::No => vec![vec![DipoleKind::N; 5], vec![DipoleKind::N; 7]],
            LadderKind::L => vec![vec![DipoleKind::L; 3], vec![DipoleKind::L; 4], vec![DipoleKind::L; 5]],
            LadderKind::R => vec![vec![DipoleKind::R; 3], vec![DipoleKind::R; 4], vec![DipoleKind::R; 5]],
            LadderKind::B => vec![
                vec![DipoleKind::N, DipoleKind::N, DipoleKind::L],
                vec![DipoleKind::N, DipoleKind::L, DipoleKind::L],
                vec![DipoleKind::N, DipoleKind::N, DipoleKind::L, DipoleKind::L],
                vec![DipoleKind::N, DipoleKind::L, DipoleKind::N, DipoleKind::L],
            ],
        };
        for c in comps {
            for f in [false, true] {
                if let Ok(m) = rebuild_ladder_with(rep, ladder, &c, f) {
                    out.push(m);
                }
                if ladder.closed { break; }
            }
        }
    }
    if deep {
        // grow two ladders: grow each growth once more
        let once: Vec<OrientedMap> = out.clone();
        for m in once {
            let ls = maximal_ladders(&m, &find_dipoles(&m));
            for l in &ls {
                let c = match l.kind {
                    LadderKind::Ne => vec![DipoleKind::N; 4],
                    LadderKind::No => vec![DipoleKind::N; 5],
                    LadderKind::L => vec![DipoleKind::L; 3],
                    LadderKind::R => vec![DipoleKind::R; 3],
                    LadderKind::B => vec![DipoleKind::N, DipoleKind::N, DipoleKind::L],
                };
                if let Ok(g) = rebuild_ladder_with(&m, l, &c, false) {
                    out.push(g);
                }
            }
        }
    }
    out
}

fn main() {
    let set02 = enumerate_schemes(0, 2, 3).unwrap();
    let reps: Vec<OrientedMap> = set02.iter().map(|e| e.scheme.representative.clone()).collect();
    let run = |melons: bool, ext: usize, ncap: usize, melon_ext: bool| -> usize {
        let mut bases: Vec<OrientedMap> = Vec::new();
        for rep in &reps {
            bases.push(rep.clone());
            if melons && !rep.is_cycle_graph() {
                for e in rep.edges() { bases.push(insert_melon(rep, e)); }
            }
            if ext >= 1 && !rep.is_cycle_graph() {
                bases.extend(grow(rep, ext >= 2));
            }
            if melon_ext && !rep.is_cycle_graph() {
                for g in grow(rep, false) {
                    for e in g.edges() { bases.push(insert_melon(&g, e)); }
                }
            }
        }
        let mut codes = BTreeSet::new();
        for base in &bases {
            for n in 1..=ncap {
                let kinds = vec![DipoleKind::N; n];
                let faces = base.trace_faces().unwrap();
                for sf in &faces.straight_faces {
                    let mut edges: Vec<usize> = sf.edges.clone();
                    edges.sort_unstable(); edges.dedup();
                    for i in 0..edges.len() { for j in i+1..edges.len() {
                        let m = insert_chain(base, edges[i], edges[j], &kinds);
                        record(&m, &mut codes);
                    }}
                }
                for e in base.edges() {
                    for v in [PendantVariant::CapB, PendantVariant::CapA, PendantVariant::CrossAB, PendantVariant::CrossBA] {
                        let m = insert_chain_pendant(base, e, &kinds, v);
                        record(&m, &mut codes);
                    }
                }
            }
        }
        for n in 1..=(ncap + 2) {
            record(&closed_chain(&vec![DipoleKind::N; n]), &mut codes);
            record(&capped_chain(&vec![DipoleKind::N; n]), &mut codes);
        }
        codes.len()
    };
    println!("reps only, n<=3:          {}", run(false, 0, 3, false));
    println!("+melons, n<=3:            {}", run(true, 0, 3, false));
    println!("+melons+ext1, n<=3:       {}", run(true, 1, 3, false));
    println!("+melons+ext2, n<=3:       {}", run(true, 2, 3, false));
    println!("+melons+ext1, n<=4:       {}", run(true, 1, 4, false));
    println!("+melons+ext2+mext, n<=3:  {}", run(true, 2, 3, true));
}

fn record(m: &OrientedMap, codes: &mut BTreeSet<odlab_core::canon::CanonicalCode>) {
    if let Ok(s) = scheme_of(m) {
        if s.representative.is_cycle_graph() { return; }
        if let Ok(inv) = s.representative.invariants() {
            if inv.genus == 1 && inv.grade == 2 && is_2pi(&s.representative) {
                codes.insert(s.code);
            }
        }
    }
}
