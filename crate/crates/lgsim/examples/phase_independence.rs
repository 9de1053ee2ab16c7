//! The J² term of H = ΩJ² + ωJx is constant on a fixed-j system, so it
//! contributes only the global phase e^{−iΩj(j+1)t} to the evolution and
//! cancels from every probability. The Leggett-Garg combination is therefore
//! independent of Ω, while the evolution operator stays exactly unitary.
//!
//! Run with: cargo run --example phase_independence

use std::f64::consts::PI;

use lgsim::spin::max_abs_diff;
use lgsim::{
    edge_partition_5_2, evolution_unitary, k_lg, maximally_mixed, DynamicsParams,
    MeasurabilityParam, MeasurabilityPovm, Operator,
};

fn main() {
    let povm = MeasurabilityPovm::build(
        edge_partition_5_2(),
        MeasurabilityParam::from_b(0.98).unwrap(),
    );
    let sys = povm.system();
    let rho0 = maximally_mixed(sys);
    let theta = 0.06 * PI;

    println!("{:>8} {:>18} {:>14}", "Ω", "K(θ = 0.06π)", "‖U†U − 1‖");
    for big_omega in [0.0, 1.0, 17.3, -250.0] {
        let params = DynamicsParams::new(sys.j(), 1.0, big_omega).unwrap();
        let k = k_lg(&povm, &rho0, &params, [theta; 3]).unwrap().k;
        let u = evolution_unitary(&params, theta).unwrap();
        let unitarity = max_abs_diff(
            &(u.adjoint() * &u),
            &Operator::identity(sys.dim(), sys.dim()),
        );
        println!("{:>8} {:>18.12} {:>14.2e}", big_omega, k, unitarity);
    }
}
