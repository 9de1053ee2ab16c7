//! Leggett-Garg inequalities on a spin-j system under measurements of
//! limited measurability.
//!
//! A two-outcome POVM E± = (1 ± A)/2 coarse-grains the Jz basis into sign
//! blocks; the operator A = Π_z · diag f carries the parity Π_z of each
//! label and a profile f(Δm) = b^{Δm²} that damps the response away from
//! each block's reference label μ. The base b ∈ [0, 1] (equivalently a
//! Gaussian pointer width σ, b = e^{−1/(2σ²)}) is the measurability: b = 1
//! is projective, b = 0 resolves nothing beyond the reference labels.
//! Between rotations U = e^{−iθJx}, the equal-gap combination
//! K = 3C(θ) − C(3θ) of two-time correlations can break the macrorealist
//! bound |K| ≤ 2, and the violation shrinks monotonically as b falls.
//!
//! Start with the examples, one per capability:
//!
//! ```bash
//! cargo run --example spin_operators           # Jx, Jz, J±, Π_z, rotations
//! cargo run --example povm_construction        # partition, profile, E±
//! cargo run --example qubit_parity_benchmark   # K max 2√2 at θ = π/4
//! cargo run --example klg_breakdown            # one K with all correlators
//! cargo run --example closed_form_identity     # C = Tr[A U A U†]/(2j+1)
//! cargo run --example k_vs_b_sweep             # K(b) for four gap angles
//! cargo run --example f_vs_sigma_profile       # profile vs pointer width
//! cargo run --example violation_threshold      # minimal b for |K| > 2
//! cargo run --example neumark_dilation         # projective dilation
//! cargo run --example four_measurement_control # |K| ≤ 2 when all four
//!                                              # times are measured
//! cargo run --example phase_independence       # ΩJ² is a global phase
//! ```
//!
//! The same capabilities are scriptable through the `lgsim` binary
//! (subcommands `klg`, `sweep-kb`, `sweep-fsigma`, `threshold`, `check`),
//! and `lgsim check` replays the internal consistency suite.
//!
//! Basis convention throughout: index i ↔ m = j − i, so m descends from +j.

pub mod cli;
pub mod correlations;
pub mod error;
pub mod halfint;
pub mod measurability;
pub mod selfcheck;
pub mod spin;
pub mod sweep;

pub use correlations::{
    correlation_closed_form, evolution_unitary, evolve, four_measurement_k_lg, k_lg,
    maximally_mixed, post_state, two_time_correlation, CorrelationBreakdown, DensityMatrix,
    DynamicsParams, LgiResult, PROBABILITY_THRESHOLD,
};
pub use error::{Error, Result};
pub use halfint::HalfInt;
pub use measurability::{
    build_a, dilation_isometry, edge_partition_5_2, f_value, neumark_verify, povm_elements,
    uniform_partition, MeasurabilityParam, MeasurabilityPovm, NeumarkReport, Outcome, Partition,
    PartitionBlock, PovmElements,
};
pub use selfcheck::CheckOutcome;
pub use spin::{
    jx_matrix, jy_matrix, jz_matrix, ladder_minus_matrix, ladder_plus_matrix, parity_matrix,
    rotation_x, Operator, SpinSystem,
};
pub use sweep::{
    sweep_f_vs_sigma, sweep_k_vs_b, violation_threshold, FSigmaRow, PartitionChoice, SweepRow,
    SweepSpec, ThresholdOutcome,
};
