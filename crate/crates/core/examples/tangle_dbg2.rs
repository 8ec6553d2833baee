use odlab_core::knot::{diagram_of_curve, rational_knot_curve};

fn main() {
    for twists in [vec![2usize, 2], vec![5], vec![3, 2], vec![4, 2], vec![3, 1, 2], vec![2, 1, 1, 2]] {
        let c = rational_knot_curve(&twists);
        match diagram_of_curve(&c) {
            Ok(d) => println!("{twists:?}: ok, {} crossings, gauss {}", d.crossing_count, d.gauss_canonical()),
            Err(e) => println!("{twists:?}: error {e}"),
        }
    }
}
