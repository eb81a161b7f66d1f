use knot11::diagram::*;
use knot11::pipeline::*;
use std::time::Instant;
fn main() {
    // the two former d-squared failures and the family
    for (p, q, r, s) in [(101i64, 44, 53, 47), (191, 46, 91, 98), (171, 72, 128, 40)] {
        let t0 = Instant::now();
        match analyze_params(RasmussenParams::new(p, q, r, s), DEFAULT_WINDOW) {
            Ok(a) => println!("K({p},{q},{r},{s}): ok in {:?} (tau {}, rank {}, window {})",
                t0.elapsed(), a.tau, a.hfk.values().sum::<usize>(), a.window),
            Err(e) => println!("K({p},{q},{r},{s}): {e}"),
        }
    }
    for n in [0u32, 3] {
        let t0 = Instant::now();
        let a = analyze_family(n, DEFAULT_WINDOW).unwrap();
        println!("family {n}: ok in {:?} (tau {})", t0.elapsed(), a.tau);
    }
}
