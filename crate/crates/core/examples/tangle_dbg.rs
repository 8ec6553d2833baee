use odlab_core::knot::{diagram_of_curve, rational_knot_curve};

fn main() {
    let c = rational_knot_curve(&[3]);
    println!("conn: {:?}", c.conn);
    // trace walk manually
    let (mut cr, mut p) = (0usize, 0usize);
    for step in 0..10 {
        let (nc, np) = c.conn[cr][p];
        println!("step {step}: leave ({cr},{p}) -> arrive ({nc},{np})");
        cr = nc;
        p = (np + 2) % 4;
        if (cr, p) == (0, 0) { println!("closed"); break; }
    }
    match diagram_of_curve(&c) {
        Ok(d) => println!("diagram ok: {} crossings, gauss {}", d.crossing_count, d.gauss_canonical()),
        Err(e) => println!("error: {e}"),
    }
}
