use odlab_core::generation::enumerate_schemes;

fn main() {
    for (g, l) in [(0usize, 0usize), (0, 1), (1, 0), (0, 2), (1, 1), (0, 3), (1, 2)] {
        let t = std::time::Instant::now();
        match enumerate_schemes(g, l, 3) {
            Ok(set) => println!(
                "(g={g}, l={l}): total {} = 2PI {} + 2PR {}   [{:?}]",
                set.len(),
                set.count_2pi(),
                set.count_2pr(),
                t.elapsed()
            ),
            Err(e) => println!("(g={g}, l={l}): error {e}"),
        }
    }
}
