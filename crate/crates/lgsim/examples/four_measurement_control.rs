//! The control experiment: measure at all four times in one run and build
//! every pair correlation from the joint outcome record. A joint
//! distribution for all four outcomes then exists by construction, so K
//! respects the macrorealist bound |K| ≤ 2 at every parameter, including
//! those where the two-measurement protocol violates it.
//!
//! Run with: cargo run --example four_measurement_control

use std::f64::consts::PI;

use lgsim::{
    edge_partition_5_2, four_measurement_k_lg, k_lg, maximally_mixed, DynamicsParams,
    MeasurabilityParam, MeasurabilityPovm,
};

fn main() {
    let povm = MeasurabilityPovm::build(
        edge_partition_5_2(),
        MeasurabilityParam::from_b(1.0).unwrap(),
    );
    let params = DynamicsParams::new(povm.system().j(), 1.0, 0.0).unwrap();
    let rho0 = maximally_mixed(povm.system());

    println!("{:>6} {:>16} {:>17}", "θ/π", "two-measure K", "four-measure K");
    for i in 1..=19 {
        let theta = PI * i as f64 / 20.0;
        let two = k_lg(&povm, &rho0, &params, [theta; 3]).unwrap().k;
        let four = four_measurement_k_lg(&povm, &rho0, &params, [theta; 3]).unwrap().k;
        println!("{:>6.2} {:>16.9} {:>17.9}", theta / PI, two, four);
    }
}
