//! For the maximally mixed initial state the operational two-time
//! correlation, built from invasive sequential measurements, collapses to
//! the closed form C(t) = Tr[A U A U†]/(2j+1): the back-action drops out of
//! this particular expectation. The example confirms the identity across
//! spins, partitions, and gap angles.
//!
//! Run with: cargo run --example closed_form_identity

use std::f64::consts::PI;

use lgsim::{
    correlation_closed_form, maximally_mixed, two_time_correlation, uniform_partition,
    DynamicsParams, HalfInt, MeasurabilityParam, MeasurabilityPovm, SpinSystem,
};

fn main() {
    println!("{:>5} {:>12} {:>24}", "j", "block size", "max |C_op − C_closed|");
    for tj in [1, 2, 3, 5, 7] {
        let sys = SpinSystem::new(HalfInt::from_twice(tj)).unwrap();
        let params = DynamicsParams::new(sys.j(), 1.0, 0.0).unwrap();
        let rho0 = maximally_mixed(sys);
        for block_size in (1..=sys.dim()).step_by(2).filter(|s| sys.dim() % s == 0) {
            let povm = MeasurabilityPovm::build(
                uniform_partition(sys, block_size).unwrap(),
                MeasurabilityParam::from_b(0.73).unwrap(),
            );
            let mut worst = 0.0_f64;
            for k in 1..=40 {
                let theta = 2.0 * PI * k as f64 / 40.0;
                let operational = two_time_correlation(&povm, &rho0, &params, theta)
                    .unwrap()
                    .c;
                let closed = correlation_closed_form(povm.a(), sys, theta).unwrap();
                worst = worst.max((operational - closed).abs());
            }
            println!("{:>5} {:>12} {:>24.2e}", sys.j().to_string(), block_size, worst);
        }
    }
}
