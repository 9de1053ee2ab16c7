//! One Leggett-Garg evaluation in full detail: the spin-5/2 edge layout at
//! gap angle θ = 0.06π, once nearly projective (b = 0.98, violating) and
//! once at reduced measurability (b = 0.61, classical side). The first
//! correlation link is also unpacked into outcome and conditional
//! probabilities.
//!
//! Run with: cargo run --example klg_breakdown

use std::f64::consts::PI;

use lgsim::{
    edge_partition_5_2, k_lg, maximally_mixed, two_time_correlation, DynamicsParams,
    MeasurabilityParam, MeasurabilityPovm,
};

fn main() {
    let theta = 0.06 * PI;
    for b in [0.98, 0.61] {
        let povm = MeasurabilityPovm::build(
            edge_partition_5_2(),
            MeasurabilityParam::from_b(b).unwrap(),
        );
        let params = DynamicsParams::new(povm.system().j(), 1.0, 0.0).unwrap();
        let rho0 = maximally_mixed(povm.system());

        let r = k_lg(&povm, &rho0, &params, [theta; 3]).unwrap();
        println!("b = {b}");
        println!(
            "  C12 = {:+.9}  C23 = {:+.9}  C34 = {:+.9}  C14 = {:+.9}",
            r.c12, r.c23, r.c34, r.c14
        );
        println!(
            "  K = C12 + C23 + C34 − C14 = {:+.9}   violated = {}",
            r.k, r.violated
        );

        let link = two_time_correlation(&povm, &rho0, &params, theta).unwrap();
        println!("  first link, outcome statistics:");
        println!(
            "    p(+) = {:.6}  p(−) = {:.6}",
            link.p_plus, link.p_minus
        );
        println!(
            "    q(+|+) = {:.6}  q(−|+) = {:.6}  q(+|−) = {:.6}  q(−|−) = {:.6}",
            link.q_plus_given_plus,
            link.q_minus_given_plus,
            link.q_plus_given_minus,
            link.q_minus_given_minus
        );
        println!("    C = Σ s s' p(s) q(s'|s) = {:+.9}\n", link.c);
    }
}
