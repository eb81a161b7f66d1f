// One-off deep validation sweep (not part of the test suite).
use knot11::diagram::*;
use knot11::pipeline::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use std::time::Instant;

fn main() {
    let t0 = Instant::now();
    let mut rng = StdRng::seed_from_u64(987654321);
    let mut done = 0;
    let mut budget_hits = 0;
    let mut other_failures = vec![];
    while done < 300 {
        let p = rng.gen_range(1..=200i64);
        let q = rng.gen_range(0..=(p - 1) / 2);
        let r = rng.gen_range(0..p);
        let u = rng.gen_range(0..(p - 2 * q));
        let s = 2 * q - r + u;
        if s < 0 { continue; }
        let params = RasmussenParams::new(p, q, r, s);
        let Ok(d) = decode(params) else { continue };
        if !validate(&d).ok { continue; }
        done += 1;
        match analyze_params(params, DEFAULT_WINDOW) {
            Ok(a) => {
                for (&(al, m), &dim) in &a.hfk {
                    assert_eq!(dim, a.hfk.get(&(-al, m - 2 * al)).copied().unwrap_or(0));
                }
                assert!(a.genus >= a.tau.abs());
            }
            Err(e) => {
                let msg = format!("{e}");
                if msg.contains("budget") { budget_hits += 1; }
                else { other_failures.push(format!("K({p},{q},{r},{s}): {msg}")); }
            }
        }
    }
    println!("300 random diagrams in {:?}: {} budget refusals, other failures: {:?}",
        t0.elapsed(), budget_hits, other_failures);
}
