//! The projective qubit benchmark. Singleton blocks keep f ≡ 1 on every
//! label, so the measurement is the parity σ_z regardless of b, and the
//! equal-gap Leggett-Garg combination is K(θ) = 3cos θ − cos 3θ. Its
//! maximum 2√2 at θ = π/4 is the temporal analogue of the Tsirelson bound.
//!
//! Run with: cargo run --example qubit_parity_benchmark

use std::f64::consts::PI;

use lgsim::{
    k_lg, maximally_mixed, uniform_partition, DynamicsParams, HalfInt, MeasurabilityParam,
    MeasurabilityPovm, SpinSystem,
};

fn main() {
    let sys = SpinSystem::new(HalfInt::from_twice(1)).unwrap();
    let povm = MeasurabilityPovm::build(
        uniform_partition(sys, 1).unwrap(),
        MeasurabilityParam::from_b(1.0).unwrap(),
    );
    let params = DynamicsParams::new(sys.j(), 1.0, 0.0).unwrap();
    let rho0 = maximally_mixed(sys);

    println!("{:>6} {:>15} {:>9}", "θ/π", "K", "violated");
    let mut best_theta = 0.0;
    let mut best_k = f64::NEG_INFINITY;
    for k in 1..=1000 {
        let theta = PI * k as f64 / 1000.0;
        let result = k_lg(&povm, &rho0, &params, [theta; 3]).unwrap();
        if result.k > best_k {
            best_k = result.k;
            best_theta = theta;
        }
        if k % 125 == 0 {
            println!("{:>6.3} {:>15.9} {:>9}", theta / PI, result.k, result.violated);
        }
    }
    println!(
        "\nmax K = {:.12} at θ/π = {:.3}   (2√2 = {:.12})",
        best_k,
        best_theta / PI,
        8.0_f64.sqrt()
    );
}
