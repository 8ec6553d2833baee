fn main() {
    for v in 1..=6 {
        let t = std::time::Instant::now();
        let entries = odlab_core::oracle::enumerate_all_maps(v).unwrap();
        let melon_free = entries.iter().filter(|e| e.melon_free).count();
        println!("v={v}: {} classes ({} melon-free) in {:?}", entries.len(), melon_free, t.elapsed());
    }
    let t = std::time::Instant::now();
    for v in 1..=6 {
        let singles = odlab_core::oracle::enumerate_single_loop_maps(v).unwrap();
        println!("single-loop v={v}: {}", singles.len());
    }
    println!("single-loop total {:?}", t.elapsed());
}
