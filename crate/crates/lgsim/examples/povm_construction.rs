//! Builds the two-outcome measurability POVM for a spin-5/2 system with the
//! edge-referenced partition, starting from a Gaussian pointer of width σ.
//!
//! The coarse observable is A = Π_z · diag f with f(Δm) = b^{Δm²} and
//! b = e^{−1/(2σ²)}; the effects are E± = (1 ± A)/2 and the measurement
//! operators their positive square roots.
//!
//! Run with: cargo run --example povm_construction

use lgsim::{edge_partition_5_2, f_value, MeasurabilityParam, MeasurabilityPovm, Outcome};

fn main() {
    let param = MeasurabilityParam::from_sigma(0.6).unwrap();
    println!("σ = 0.6  ⇒  b = e^(−1/(2σ²)) = {:.12}", param.b());
    for offset in 0..=2 {
        println!("f({offset}) = b^{} = {:.12}", offset * offset, f_value(offset, &param));
    }

    let partition = edge_partition_5_2();
    println!("\npartition of the m basis (descending):");
    for block in partition.blocks() {
        let members: Vec<String> = block.members().iter().map(|m| m.to_string()).collect();
        println!("  μ = {:>4}: {{{}}}", block.mu().to_string(), members.join(", "));
    }

    let povm = MeasurabilityPovm::build(partition, param);
    println!("\ndiagonal of A (m = 5/2 … −5/2), alternating parity signs:");
    for i in 0..povm.dim() {
        println!("  {:+.12}", povm.a()[(i, i)].re);
    }

    println!("\ndiagonals of E₊ and E₋:");
    for i in 0..povm.dim() {
        println!(
            "  {:.12}   {:.12}",
            povm.effect(Outcome::Plus)[(i, i)].re,
            povm.effect(Outcome::Minus)[(i, i)].re
        );
    }

    // Completeness E₊ + E₋ = 1 holds by construction; show the residual.
    let sum = povm.effect(Outcome::Plus) + povm.effect(Outcome::Minus);
    let dev = (0..povm.dim())
        .map(|i| (sum[(i, i)].re - 1.0).abs())
        .fold(0.0, f64::max);
    println!("\nmax |⟨i|E₊+E₋−1|i⟩| = {dev:.2e}");
}
