//! The spin-j building blocks: ladder and component operators in the m
//! basis (descending from +j), the parity Π_z, and the x rotation
//! U = e^{−iθJx}. Checks the su(2) commutator [Jx, Jy] = iJz and the
//! additivity U(α)U(β) = U(α + β) numerically.
//!
//! Run with: cargo run --example spin_operators

use num_complex::Complex64;

use lgsim::spin::{
    jx_matrix, jy_matrix, jz_matrix, ladder_plus_matrix, max_abs_diff, parity_matrix, rotation_x,
};
use lgsim::{HalfInt, SpinSystem};

fn main() {
    let sys = SpinSystem::new(HalfInt::new(1)).unwrap();
    println!("j = 1 basis order: m = {:?}\n", sys.m_values().map(|m| m.to_string()).collect::<Vec<_>>());

    println!("J₊ (⟨m+1|J₊|m⟩ = √(j(j+1) − m(m+1))):");
    print_real(&ladder_plus_matrix(sys));
    println!("Jz:");
    print_real(&jz_matrix(sys));
    println!("Π_z = diag((−1)^(j−m)):");
    print_real(&parity_matrix(sys));

    let jx = jx_matrix(sys);
    let jy = jy_matrix(sys);
    let jz = jz_matrix(sys);
    let commutator = &jx * &jy - &jy * &jx;
    let dev = max_abs_diff(&commutator, &jz.map(|z| z * Complex64::i()));
    println!("‖[Jx, Jy] − iJz‖_max = {dev:.2e}");

    let alpha = 0.83;
    let beta = -1.97;
    let composed = rotation_x(sys, alpha).unwrap() * rotation_x(sys, beta).unwrap();
    let direct = rotation_x(sys, alpha + beta).unwrap();
    println!(
        "‖U({alpha})U({beta}) − U({:.2})‖_max = {:.2e}",
        alpha + beta,
        max_abs_diff(&composed, &direct)
    );
}

fn print_real(m: &lgsim::Operator) {
    for r in 0..m.nrows() {
        let row: Vec<String> = (0..m.ncols())
            .map(|c| format!("{:+.4}", m[(r, c)].re))
            .collect();
        println!("  [{}]", row.join("  "));
    }
    println!();
}
