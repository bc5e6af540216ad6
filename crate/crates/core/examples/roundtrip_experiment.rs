//! Random formulas through every construction: compare brute-force
//! satisfiability with the source-to-sink rainbow verdict.
//!
//! `cargo run --release --example roundtrip_experiment -- 200`

use std::time::Instant;

use rainbow_core::reductions::{build, Construction};
use rainbow_core::sat::{brute_force_sat, random_formula};
use rainbow_core::verifiers::rainbow_path_between;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn main() {
    let trials: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(50);
    let mut rng = StdRng::seed_from_u64(7);
    for c in [
        Construction::Base,
        Construction::IntervalOuterplanar,
        Construction::IntervalBlock,
        Construction::Cubic,
        Construction::KRegular(4),
    ] {
        let start = Instant::now();
        let (mut sat, mut mismatches) = (0, 0);
        for _ in 0..trials {
            let n = rng.gen_range(2..=6);
            let m = rng.gen_range(1..=6);
            let f = random_formula(&mut rng, n, m);
            let r = build(&f, c).unwrap();
            let expected = brute_force_sat(&r.formula).unwrap().is_sat();
            let got = rainbow_path_between(&r.graph, r.source, r.sink).unwrap().connected;
            sat += expected as usize;
            mismatches += (expected != got) as usize;
        }
        let name = c.to_string();
        println!("{name:<8} {trials} formulas, {sat} satisfiable, {mismatches} mismatches, {:?}", start.elapsed());
    }
}
