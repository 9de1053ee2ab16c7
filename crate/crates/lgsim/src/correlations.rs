//! Two-time correlations under sequential measurability POVMs, the
//! Leggett-Garg correlator K, and the four-measurement control protocol.
//!
//! Dynamics: H = Ω J² + ω J_x, so U(Δt) = e^{−iΩ j(j+1)Δt}·e^{−iωΔt J_x}.
//! The J² term contributes only a global phase, which cancels in every
//! sandwich UρU†; it is kept so the cancellation can be checked explicitly.
//!
//! A measurement with outcome s updates ρ → M_sρM_s†/p_s with
//! p_s = Tr[E_sρ], and the two-time correlation between measurements
//! separated by Δt is C = Σ_{s,s'} s·s'·p_s·q_{s'|s} with
//! q_{s'|s} = Tr[E_{s'} U ρ_s U†].

use nalgebra::DVector;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::halfint::HalfInt;
use crate::measurability::{MeasurabilityPovm, Outcome};
use crate::spin::{
    hermitian_eigenvalues, is_hermitian, is_unitary, rotation_x, Operator, SpinSystem,
};

/// Outcome probabilities below this threshold make conditioning ill-posed.
pub const PROBABILITY_THRESHOLD: f64 = 1e-14;

const DENSITY_TOL: f64 = 1e-12;
const EIGENVALUE_TOL: f64 = 1e-10;

/// Hamiltonian parameters: spin j, the J_x frequency ω, and the J²
/// frequency Ω.
#[derive(Clone, Copy, Debug)]
pub struct DynamicsParams {
    j: HalfInt,
    omega: f64,
    big_omega: f64,
}

impl DynamicsParams {
    pub fn new(j: HalfInt, omega: f64, big_omega: f64) -> Result<Self> {
        SpinSystem::new(j)?;
        if !omega.is_finite() {
            return Err(Error::NonFinite(format!("omega = {omega}")));
        }
        if !big_omega.is_finite() {
            return Err(Error::NonFinite(format!("big omega = {big_omega}")));
        }
        Ok(DynamicsParams { j, omega, big_omega })
    }

    pub fn j(&self) -> HalfInt {
        self.j
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    pub fn big_omega(&self) -> f64 {
        self.big_omega
    }

    pub fn system(&self) -> SpinSystem {
        SpinSystem::new(self.j).expect("validated at construction")
    }
}

/// A validated density matrix: Hermitian, unit trace, positive semidefinite
/// (within fixed numerical tolerances).
#[derive(Clone, Debug)]
pub struct DensityMatrix {
    mat: Operator,
}

impl DensityMatrix {
    pub fn new(mat: Operator) -> Result<Self> {
        if mat.nrows() != mat.ncols() || mat.nrows() == 0 {
            return Err(Error::InvalidDensityMatrix(format!(
                "expected a nonempty square matrix, got {}x{}",
                mat.nrows(),
                mat.ncols()
            )));
        }
        if mat.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::NonFinite("density matrix entry".into()));
        }
        if !is_hermitian(&mat, DENSITY_TOL) {
            return Err(Error::InvalidDensityMatrix("not Hermitian".into()));
        }
        let trace_gap = (mat.trace() - Complex64::new(1.0, 0.0)).norm();
        if trace_gap > DENSITY_TOL {
            return Err(Error::InvalidDensityMatrix(format!(
                "trace differs from 1 by {trace_gap:.3e}"
            )));
        }
        let min_ev = hermitian_eigenvalues(&mat)
            .first()
            .copied()
            .expect("nonempty matrix has eigenvalues");
        if min_ev < -EIGENVALUE_TOL {
            return Err(Error::InvalidDensityMatrix(format!(
                "negative eigenvalue {min_ev:.3e}"
            )));
        }
        Ok(DensityMatrix { mat })
    }

    /// For matrices valid by construction (products of validated pieces).
    pub(crate) fn new_unchecked(mat: Operator) -> Self {
        debug_assert!(is_hermitian(&mat, 1e-9));
        debug_assert!((mat.trace() - Complex64::new(1.0, 0.0)).norm() < 1e-9);
        DensityMatrix { mat }
    }

    /// |ψ⟩⟨ψ| from a nonzero state vector; the vector is normalized here.
    pub fn pure(state: &DVector<Complex64>) -> Result<Self> {
        let n2 = state.norm_squared();
        if !n2.is_finite() {
            return Err(Error::NonFinite("state vector entry".into()));
        }
        if n2 <= 0.0 {
            return Err(Error::InvalidDensityMatrix("zero state vector".into()));
        }
        let mat = (state * state.adjoint()).map(|z| z / n2);
        Ok(DensityMatrix { mat })
    }

    pub fn matrix(&self) -> &Operator {
        &self.mat
    }

    pub fn dim(&self) -> usize {
        self.mat.nrows()
    }
}

/// The maximally mixed state I/(2j+1), the default initial state of every
/// sweep.
pub fn maximally_mixed(sys: SpinSystem) -> DensityMatrix {
    let d = sys.dim();
    let mat = Operator::identity(d, d).map(|z| z / d as f64);
    DensityMatrix { mat }
}

/// U(Δt) = e^{−iΩ j(j+1)Δt}·e^{−iωΔt J_x}.
pub fn evolution_unitary(params: &DynamicsParams, dt: f64) -> Result<Operator> {
    if !dt.is_finite() {
        return Err(Error::NonFinite(format!("time gap {dt}")));
    }
    let sys = params.system();
    let u = rotation_x(sys, params.omega * dt)?;
    let phase = Complex64::from_polar(1.0, -params.big_omega * sys.casimir() * dt);
    Ok(u.map(|z| z * phase))
}

/// ρ → UρU†. U must be unitary and of matching dimension.
pub fn evolve(rho: &DensityMatrix, u: &Operator) -> Result<DensityMatrix> {
    if u.nrows() != rho.dim() || u.ncols() != rho.dim() {
        return Err(Error::DimensionMismatch(format!(
            "unitary is {}x{}, state dimension is {}",
            u.nrows(),
            u.ncols(),
            rho.dim()
        )));
    }
    if !is_unitary(u, 1e-10) {
        return Err(Error::InvalidOperator("evolution operator is not unitary".into()));
    }
    Ok(DensityMatrix::new_unchecked(u * rho.matrix() * u.adjoint()))
}

/// Outcome probability p_s = Tr[E_sρ] and conditional post-measurement state
/// M_sρM_s†/p_s. Fails with `OutcomeImpossible` when p_s is below
/// `PROBABILITY_THRESHOLD`.
pub fn post_state(
    rho: &DensityMatrix,
    povm: &MeasurabilityPovm,
    outcome: Outcome,
) -> Result<(f64, DensityMatrix)> {
    if rho.dim() != povm.dim() {
        return Err(Error::DimensionMismatch(format!(
            "state dimension {} vs POVM dimension {}",
            rho.dim(),
            povm.dim()
        )));
    }
    let p = (povm.effect(outcome) * rho.matrix()).trace().re;
    if p < PROBABILITY_THRESHOLD {
        return Err(Error::OutcomeImpossible { outcome: outcome.label(), probability: p });
    }
    let m = povm.measurement_op(outcome);
    let numerator = m * rho.matrix() * m.adjoint();
    Ok((p, DensityMatrix::new_unchecked(numerator.map(|z| z / p))))
}

/// Full bookkeeping of a two-time correlation: first-measurement
/// probabilities, conditional second-measurement probabilities, and C.
#[derive(Clone, Copy, Debug)]
pub struct CorrelationBreakdown {
    pub p_plus: f64,
    pub p_minus: f64,
    pub q_plus_given_plus: f64,
    pub q_minus_given_plus: f64,
    pub q_plus_given_minus: f64,
    pub q_minus_given_minus: f64,
    pub c: f64,
}

fn check_dims(povm: &MeasurabilityPovm, rho: &DensityMatrix, params: &DynamicsParams) -> Result<()> {
    let d = params.system().dim();
    if povm.dim() != d || rho.dim() != d {
        return Err(Error::DimensionMismatch(format!(
            "POVM dimension {}, state dimension {}, dynamics dimension {d}",
            povm.dim(),
            rho.dim()
        )));
    }
    Ok(())
}

/// C(Δt) for a pair of sequential measurements separated by Δt, starting
/// from `rho0` at the first measurement.
pub fn two_time_correlation(
    povm: &MeasurabilityPovm,
    rho0: &DensityMatrix,
    params: &DynamicsParams,
    dt: f64,
) -> Result<CorrelationBreakdown> {
    check_dims(povm, rho0, params)?;
    let u = evolution_unitary(params, dt)?;
    let mut p = [0.0_f64; 2];
    let mut q = [[0.0_f64; 2]; 2];
    let mut c = 0.0;
    for (i, first) in Outcome::BOTH.into_iter().enumerate() {
        let (p_first, conditional) = post_state(rho0, povm, first)?;
        let evolved = evolve(&conditional, &u)?;
        p[i] = p_first;
        for (k, second) in Outcome::BOTH.into_iter().enumerate() {
            let q_second = (povm.effect(second) * evolved.matrix()).trace().re;
            q[i][k] = q_second;
            c += first.sign() * second.sign() * p_first * q_second;
        }
    }
    Ok(CorrelationBreakdown {
        p_plus: p[0],
        p_minus: p[1],
        q_plus_given_plus: q[0][0],
        q_minus_given_plus: q[0][1],
        q_plus_given_minus: q[1][0],
        q_minus_given_minus: q[1][1],
        c,
    })
}

/// Closed form C(θ) = Tr[A·U(θ)·A·U(θ)†]/(2j+1), valid for the maximally
/// mixed initial state with Hermitian measurement operators, where
/// θ = ωΔt is the rotation angle of the gap.
pub fn correlation_closed_form(a: &Operator, sys: SpinSystem, theta: f64) -> Result<f64> {
    let d = sys.dim();
    if a.nrows() != d || a.ncols() != d {
        return Err(Error::DimensionMismatch(format!(
            "A is {}x{}, system dimension is {d}",
            a.nrows(),
            a.ncols()
        )));
    }
    let u = rotation_x(sys, theta)?;
    Ok((a * &u * a * u.adjoint()).trace().re / d as f64)
}

/// Outcome of a Leggett-Garg evaluation.
#[derive(Clone, Copy, Debug)]
pub struct LgiResult {
    /// Rotation angle ω·Δt₁₂ of the first gap.
    pub theta: f64,
    /// Measurability strength of the POVM used.
    pub b: f64,
    pub c12: f64,
    pub c23: f64,
    pub c34: f64,
    pub c14: f64,
    pub k: f64,
    /// |K| > 2, strictly.
    pub violated: bool,
}

fn check_gaps(gaps: [f64; 3]) -> Result<()> {
    for g in gaps {
        if !g.is_finite() {
            return Err(Error::NonFinite(format!("time gap {g}")));
        }
        if g <= 0.0 {
            return Err(Error::InvalidParameter(format!(
                "time gaps must be positive, got {g}"
            )));
        }
    }
    Ok(())
}

/// K = C₁₂ + C₂₃ + C₃₄ − C₁₄ for measurement times t₁ < t₂ < t₃ < t₄ with
/// the given gaps. Each pair correlation is evaluated on its own run: the
/// state entering the earlier measurement of the pair is ρ₀ freely evolved
/// to that time, with no intermediate measurement.
pub fn k_lg(
    povm: &MeasurabilityPovm,
    rho0: &DensityMatrix,
    params: &DynamicsParams,
    gaps: [f64; 3],
) -> Result<LgiResult> {
    check_dims(povm, rho0, params)?;
    check_gaps(gaps)?;
    let rho_t2 = evolve(rho0, &evolution_unitary(params, gaps[0])?)?;
    let rho_t3 = evolve(&rho_t2, &evolution_unitary(params, gaps[1])?)?;
    let c12 = two_time_correlation(povm, rho0, params, gaps[0])?.c;
    let c23 = two_time_correlation(povm, &rho_t2, params, gaps[1])?.c;
    let c34 = two_time_correlation(povm, &rho_t3, params, gaps[2])?.c;
    let c14 = two_time_correlation(povm, rho0, params, gaps[0] + gaps[1] + gaps[2])?.c;
    let k = c12 + c23 + c34 - c14;
    Ok(LgiResult {
        theta: params.omega * gaps[0],
        b: povm.b(),
        c12,
        c23,
        c34,
        c14,
        k,
        violated: k.abs() > 2.0,
    })
}

/// The control protocol: all four measurements applied in one run, pair
/// correlations extracted from the joint distribution over the 16 outcome
/// tuples. Admits a joint distribution by construction, so |K| ≤ 2 always.
pub fn four_measurement_k_lg(
    povm: &MeasurabilityPovm,
    rho0: &DensityMatrix,
    params: &DynamicsParams,
    gaps: [f64; 3],
) -> Result<LgiResult> {
    check_dims(povm, rho0, params)?;
    check_gaps(gaps)?;
    let unitaries = [
        evolution_unitary(params, gaps[0])?,
        evolution_unitary(params, gaps[1])?,
        evolution_unitary(params, gaps[2])?,
    ];
    // Unnormalized branch states: after measurement k (and the evolution to
    // the next time when one remains), the trace of each branch is the joint
    // probability of its outcome prefix.
    let mut branches: Vec<(Vec<f64>, Operator)> =
        vec![(Vec::new(), rho0.matrix().clone())];
    for step in 0..4 {
        let mut next = Vec::with_capacity(branches.len() * 2);
        for (signs, w) in &branches {
            for outcome in Outcome::BOTH {
                let m = povm.measurement_op(outcome);
                let mut updated = m * w * m.adjoint();
                if step < 3 {
                    let u = &unitaries[step];
                    updated = u * updated * u.adjoint();
                }
                let mut signs = signs.clone();
                signs.push(outcome.sign());
                next.push((signs, updated));
            }
        }
        branches = next;
    }
    let mut c12 = 0.0;
    let mut c23 = 0.0;
    let mut c34 = 0.0;
    let mut c14 = 0.0;
    for (signs, w) in &branches {
        let p = w.trace().re;
        c12 += signs[0] * signs[1] * p;
        c23 += signs[1] * signs[2] * p;
        c34 += signs[2] * signs[3] * p;
        c14 += signs[0] * signs[3] * p;
    }
    let k = c12 + c23 + c34 - c14;
    Ok(LgiResult {
        theta: params.omega * gaps[0],
        b: povm.b(),
        c12,
        c23,
        c34,
        c14,
        k,
        violated: k.abs() > 2.0,
    })
}
