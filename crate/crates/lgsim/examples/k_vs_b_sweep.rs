//! K as a function of the measurability base b for four gap angles of the
//! spin-5/2 edge layout. |K| grows monotonically with b: reducing
//! measurability only ever weakens the violation, and the quantum bound is
//! reached in the projective limit b = 1.
//!
//! Run with: cargo run --example k_vs_b_sweep

use lgsim::{sweep_k_vs_b, HalfInt, PartitionChoice, SweepSpec};

fn main() {
    let spec = SweepSpec {
        j: HalfInt::from_twice(5),
        partition: PartitionChoice::Edge52,
        theta_over_pi: vec![0.06, 0.34, 0.50, 0.95],
        b_grid: (0..=10).map(|i| i as f64 / 10.0).collect(),
    };
    println!("theta_over_pi,b,C_theta,C_3theta,K,violated");
    for row in sweep_k_vs_b(&spec).unwrap() {
        println!(
            "{:.2},{:.1},{:+.9},{:+.9},{:+.9},{}",
            row.theta_over_pi, row.b, row.c_theta, row.c_3theta, row.k, row.violated
        );
    }
}
