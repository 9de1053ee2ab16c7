//! Minimal measurability for a Leggett-Garg violation: scan |K(b)| − 2 for
//! sign changes on a coarse b grid, then bisect each bracket. At θ = 0.06π
//! the spin-5/2 edge layout crosses near b* ≈ 0.930; at θ = 0.34π even the
//! projective limit stays below 2, so no threshold exists.
//!
//! Run with: cargo run --example violation_threshold

use std::f64::consts::PI;

use lgsim::{violation_threshold, HalfInt, PartitionChoice, ThresholdOutcome};

fn main() {
    let j = HalfInt::from_twice(5);
    for theta_over_pi in [0.06, 0.34, 0.95] {
        let outcome =
            violation_threshold(j, PartitionChoice::Edge52, theta_over_pi * PI).unwrap();
        match outcome {
            ThresholdOutcome::Found(b_star) => {
                println!("θ/π = {theta_over_pi}: b* = {b_star:.9}");
            }
            ThresholdOutcome::Absent => {
                println!("θ/π = {theta_over_pi}: no violation at any b ∈ [0, 1]");
            }
            ThresholdOutcome::Ambiguous(brackets) => {
                println!("θ/π = {theta_over_pi}: several crossings, brackets {brackets:?}");
            }
        }
    }
}
