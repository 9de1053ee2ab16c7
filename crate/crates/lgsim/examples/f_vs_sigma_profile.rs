//! The measurability profile as the Gaussian pointer width σ varies:
//! a = f(0) = 1 identically, b = f(±1) = e^{−1/(2σ²)}, c = f(±2) = b⁴.
//! Narrow pointers resolve m sharply and suppress every off-label response;
//! wide pointers approach projective measurability b → 1.
//!
//! Run with: cargo run --example f_vs_sigma_profile

use lgsim::sweep_f_vs_sigma;

fn main() {
    let grid: Vec<f64> = (1..=30).map(|i| i as f64 / 10.0).collect();
    println!("{:>5} {:>4} {:>13} {:>13}", "σ", "a", "b", "c");
    for row in sweep_f_vs_sigma(&grid).unwrap() {
        println!(
            "{:>5.1} {:>4.1} {:>13.9} {:>13.9}",
            row.sigma, row.a, row.b, row.c
        );
    }
}
