//! Dilates the two-outcome measurability POVM to a projective measurement
//! on system ⊗ pointer qubit. The isometry V = Σ_s |s⟩ ⊗ M_s satisfies
//! V†V = 1, and projecting the pointer after V reproduces the direct
//! statistics M_s ρ M_s† exactly.
//!
//! Run with: cargo run --example neumark_dilation

use num_complex::Complex64;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use lgsim::spin::max_abs_diff;
use lgsim::{
    dilation_isometry, edge_partition_5_2, neumark_verify, DensityMatrix, MeasurabilityParam,
    MeasurabilityPovm, Operator,
};

fn main() {
    let povm = MeasurabilityPovm::build(
        edge_partition_5_2(),
        MeasurabilityParam::from_b(0.7).unwrap(),
    );
    let d = povm.dim();

    let v = dilation_isometry(&povm);
    println!("V maps C^{d} into C^{} (pointer ⊗ system)", 2 * d);
    let isometry_dev = max_abs_diff(&(v.adjoint() * &v), &Operator::identity(d, d));
    println!("‖V†V − 1‖_max = {isometry_dev:.2e}");

    // A reproducible random state: normalized Gram matrix G G† / tr.
    let mut rng = StdRng::seed_from_u64(7);
    let g = Operator::from_fn(d, d, |_, _| {
        Complex64::new(rng.gen::<f64>() - 0.5, rng.gen::<f64>() - 0.5)
    });
    let gram = &g * g.adjoint();
    let trace = gram.trace().re;
    let rho = DensityMatrix::new(gram.map(|z| z / trace)).unwrap();

    let report = neumark_verify(&povm, &rho).unwrap();
    println!("direct POVM vs dilated projective statistics:");
    println!("  probability deviation = {:.2e}", report.probability_deviation);
    println!("  post-state deviation  = {:.2e}", report.state_deviation);
    println!("  overall               = {:.2e}", report.max_deviation());
}
