//! The two-outcome measurability POVM.
//!
//! The basis is split into blocks; each block has a reference label μ whose
//! state is resolved exactly, and the resolving power decays with the integer
//! offset from μ through the profile f(Δm) = b^{Δm²}, b = e^{−1/(2σ²)}.
//! The dichotomic observable is A = Π_z·diag(f), giving the effects
//! E_± = (1 ± A)/2 and measurement operators M_± = √E_±. At b = 1 the POVM
//! collapses to the projective parity measurement; at b = 0 every block is
//! resolved only at its reference label.

use num_complex::Complex64;

use crate::correlations::DensityMatrix;
use crate::error::{Error, Result};
use crate::halfint::HalfInt;
use crate::spin::{max_abs_diff, Operator, SpinSystem};

/// Tolerance for the structural checks on a measurability operator A:
/// off-diagonal and imaginary parts must vanish and |entries| ≤ 1 within this.
pub const SPECTRUM_TOL: f64 = 1e-12;

/// Measurement outcome of the dichotomic observable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Outcome {
    Plus,
    Minus,
}

impl Outcome {
    pub const BOTH: [Outcome; 2] = [Outcome::Plus, Outcome::Minus];

    /// The outcome value s = ±1 entering correlation functions.
    pub fn sign(self) -> f64 {
        match self {
            Outcome::Plus => 1.0,
            Outcome::Minus => -1.0,
        }
    }

    pub fn label(self) -> char {
        match self {
            Outcome::Plus => '+',
            Outcome::Minus => '-',
        }
    }
}

/// Measurability strength, canonically the base b ∈ [0, 1] of the profile
/// f(Δm) = b^{Δm²}. When built from a Gaussian width σ via b = e^{−1/(2σ²)},
/// the width is kept for reporting.
#[derive(Clone, Copy, Debug)]
pub struct MeasurabilityParam {
    b: f64,
    sigma: Option<f64>,
}

impl MeasurabilityParam {
    /// Requires b ∈ [0, 1].
    pub fn from_b(b: f64) -> Result<Self> {
        if !b.is_finite() {
            return Err(Error::NonFinite(format!("measurability b = {b}")));
        }
        if !(0.0..=1.0).contains(&b) {
            return Err(Error::InvalidParameter(format!(
                "b must lie in [0, 1], got {b}"
            )));
        }
        Ok(MeasurabilityParam { b, sigma: None })
    }

    /// Requires σ > 0; maps to b = e^{−1/(2σ²)}.
    pub fn from_sigma(sigma: f64) -> Result<Self> {
        if !sigma.is_finite() {
            return Err(Error::NonFinite(format!("width sigma = {sigma}")));
        }
        if sigma <= 0.0 {
            return Err(Error::InvalidParameter(format!(
                "sigma must be positive, got {sigma}"
            )));
        }
        let b = (-1.0 / (2.0 * sigma * sigma)).exp();
        Ok(MeasurabilityParam { b, sigma: Some(sigma) })
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    /// The Gaussian width, when this parameter was built from one.
    pub fn sigma(&self) -> Option<f64> {
        self.sigma
    }
}

/// Profile value f(Δm) = b^{Δm²} at integer offset Δm from the block label.
/// The convention 0⁰ = 1 applies: the label itself stays exactly measurable
/// even at b = 0.
pub fn f_value(offset: i32, param: &MeasurabilityParam) -> f64 {
    if offset == 0 {
        return 1.0;
    }
    param.b.powi(offset * offset)
}

/// One block of a partition: a reference label μ and the m values it covers.
#[derive(Clone, Debug)]
pub struct PartitionBlock {
    mu: HalfInt,
    members: Vec<HalfInt>,
}

impl PartitionBlock {
    pub fn mu(&self) -> HalfInt {
        self.mu
    }

    pub fn members(&self) -> &[HalfInt] {
        &self.members
    }
}

/// A partition of the 2j+1 basis labels into blocks, each with its reference
/// label. Construction guarantees every m appears in exactly one block and
/// every μ belongs to its own block.
#[derive(Clone, Debug)]
pub struct Partition {
    sys: SpinSystem,
    blocks: Vec<PartitionBlock>,
}

impl Partition {
    pub fn new(sys: SpinSystem, blocks: Vec<(HalfInt, Vec<HalfInt>)>) -> Result<Self> {
        let mut seen = vec![false; sys.dim()];
        let mut covered = 0usize;
        for (mu, members) in &blocks {
            if !members.contains(mu) {
                return Err(Error::InvalidPartition(format!(
                    "reference label {mu} is not a member of its own block"
                )));
            }
            for m in members {
                let idx = sys.index_of(*m).ok_or_else(|| {
                    Error::InvalidPartition(format!(
                        "{m} is not a basis label for j = {}",
                        sys.j()
                    ))
                })?;
                if seen[idx] {
                    return Err(Error::InvalidPartition(format!(
                        "basis label {m} appears in more than one block"
                    )));
                }
                seen[idx] = true;
                covered += 1;
            }
        }
        if covered != sys.dim() {
            return Err(Error::InvalidPartition(format!(
                "blocks cover {covered} of {} basis labels",
                sys.dim()
            )));
        }
        let blocks = blocks
            .into_iter()
            .map(|(mu, members)| PartitionBlock { mu, members })
            .collect();
        Ok(Partition { sys, blocks })
    }

    pub fn system(&self) -> SpinSystem {
        self.sys
    }

    pub fn blocks(&self) -> &[PartitionBlock] {
        &self.blocks
    }

    /// Reference label of the block containing m, `None` if m is not a basis label.
    pub fn mu_of(&self, m: HalfInt) -> Option<HalfInt> {
        self.blocks
            .iter()
            .find(|blk| blk.members.contains(&m))
            .map(|blk| blk.mu)
    }
}

/// Splits the basis (m descending) into contiguous blocks of odd size
/// `block_size`, with each block's central member as its reference label.
/// Requires an odd block_size dividing 2j+1; even sizes have no central
/// member and are rejected.
pub fn uniform_partition(sys: SpinSystem, block_size: usize) -> Result<Partition> {
    if block_size == 0 || block_size % 2 == 0 {
        return Err(Error::InvalidPartition(format!(
            "block size must be odd and positive, got {block_size}"
        )));
    }
    if sys.dim() % block_size != 0 {
        return Err(Error::InvalidPartition(format!(
            "block size {block_size} does not divide dimension {}",
            sys.dim()
        )));
    }
    let ms: Vec<HalfInt> = sys.m_values().collect();
    let blocks = ms
        .chunks(block_size)
        .map(|chunk| (chunk[block_size / 2], chunk.to_vec()))
        .collect();
    Partition::new(sys, blocks)
}

/// The asymmetric two-block layout for j = 5/2: the upper half referenced at
/// the edge m = +5/2, the lower half at m = −5/2. Produces
/// A = diag(1, −b, b⁴, −b⁴, b, −1).
pub fn edge_partition_5_2() -> Partition {
    let sys = SpinSystem::new(HalfInt::from_twice(5)).expect("j = 5/2 is valid");
    let h = HalfInt::from_twice;
    Partition::new(
        sys,
        vec![
            (h(5), vec![h(5), h(3), h(1)]),
            (h(-5), vec![h(-1), h(-3), h(-5)]),
        ],
    )
    .expect("edge layout covers all six labels once")
}

/// The dichotomic measurability observable A = Π_z·diag(f): entry
/// (−1)^{j−m}·f(m−μ) at basis index of m, where μ labels the block of m.
pub fn build_a(partition: &Partition, param: &MeasurabilityParam) -> Operator {
    let sys = partition.system();
    let mut a = Operator::zeros(sys.dim(), sys.dim());
    for block in partition.blocks() {
        for &m in block.members() {
            let i = sys.index_of(m).expect("partition members are valid labels");
            let offset = m
                .integer_offset_from(block.mu())
                .expect("labels of one system differ by integers");
            a[(i, i)] = Complex64::new(sys.parity_sign_at(i) * f_value(offset, param), 0.0);
        }
    }
    a
}

/// Effects and measurement operators derived from a measurability operator A.
#[derive(Clone, Debug)]
pub struct PovmElements {
    pub e_plus: Operator,
    pub e_minus: Operator,
    pub m_plus: Operator,
    pub m_minus: Operator,
}

/// E_± = (I ± A)/2 and M_± = √E_± (the Hermitian positive root; elementwise
/// on the diagonal).
///
/// A must be diagonal with real entries in [−1, 1]; entries within
/// `SPECTRUM_TOL` of the boundary are clamped so the square roots stay real.
pub fn povm_elements(a: &Operator) -> Result<PovmElements> {
    let d = a.nrows();
    if d != a.ncols() {
        return Err(Error::InvalidOperator(format!(
            "A must be square, got {}x{}",
            a.nrows(),
            a.ncols()
        )));
    }
    let mut diag = Vec::with_capacity(d);
    for r in 0..d {
        for c in 0..d {
            let z = a[(r, c)];
            if r != c && z.norm() > SPECTRUM_TOL {
                return Err(Error::InvalidOperator(format!(
                    "A must be diagonal; entry ({r},{c}) = {z}"
                )));
            }
        }
        let z = a[(r, r)];
        if z.im.abs() > SPECTRUM_TOL {
            return Err(Error::InvalidOperator(format!(
                "diagonal entry {r} has imaginary part {}",
                z.im
            )));
        }
        if z.re.abs() > 1.0 + SPECTRUM_TOL {
            return Err(Error::InvalidOperator(format!(
                "eigenvalue {} at index {r} lies outside [-1, 1]",
                z.re
            )));
        }
        diag.push(z.re.clamp(-1.0, 1.0));
    }
    let make = |values: Vec<f64>| {
        let mut m = Operator::zeros(d, d);
        for (i, v) in values.into_iter().enumerate() {
            m[(i, i)] = Complex64::new(v, 0.0);
        }
        m
    };
    let e_plus_diag: Vec<f64> = diag.iter().map(|x| (1.0 + x) / 2.0).collect();
    let e_minus_diag: Vec<f64> = diag.iter().map(|x| (1.0 - x) / 2.0).collect();
    let m_plus_diag = e_plus_diag.iter().map(|e| e.sqrt()).collect();
    let m_minus_diag = e_minus_diag.iter().map(|e| e.sqrt()).collect();
    Ok(PovmElements {
        e_plus: make(e_plus_diag),
        e_minus: make(e_minus_diag),
        m_plus: make(m_plus_diag),
        m_minus: make(m_minus_diag),
    })
}

/// A fully assembled measurability POVM: partition, parameter, the observable
/// A, and the derived effects and measurement operators.
#[derive(Clone, Debug)]
pub struct MeasurabilityPovm {
    partition: Partition,
    param: MeasurabilityParam,
    a: Operator,
    elements: PovmElements,
}

impl MeasurabilityPovm {
    pub fn build(partition: Partition, param: MeasurabilityParam) -> Self {
        let a = build_a(&partition, &param);
        let elements =
            povm_elements(&a).expect("A built from a partition is diagonal in [-1, 1]");
        MeasurabilityPovm { partition, param, a, elements }
    }

    pub fn system(&self) -> SpinSystem {
        self.partition.system()
    }

    pub fn dim(&self) -> usize {
        self.system().dim()
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn param(&self) -> &MeasurabilityParam {
        &self.param
    }

    pub fn b(&self) -> f64 {
        self.param.b()
    }

    pub fn a(&self) -> &Operator {
        &self.a
    }

    pub fn effect(&self, outcome: Outcome) -> &Operator {
        match outcome {
            Outcome::Plus => &self.elements.e_plus,
            Outcome::Minus => &self.elements.e_minus,
        }
    }

    pub fn measurement_op(&self, outcome: Outcome) -> &Operator {
        match outcome {
            Outcome::Plus => &self.elements.m_plus,
            Outcome::Minus => &self.elements.m_minus,
        }
    }
}

/// The Neumark isometry V = Σ_s M_s ⊗ |s⟩: a 2d×d matrix with the M_+ block
/// on top (ancilla |+⟩) and M_− below, so V†V = Σ_s M_s†M_s = I.
pub fn dilation_isometry(povm: &MeasurabilityPovm) -> Operator {
    let d = povm.dim();
    let mut v = Operator::zeros(2 * d, d);
    for (s_idx, outcome) in Outcome::BOTH.into_iter().enumerate() {
        let m = povm.measurement_op(outcome);
        for r in 0..d {
            for c in 0..d {
                v[(s_idx * d + r, c)] = m[(r, c)];
            }
        }
    }
    v
}

/// Deviations between the POVM statistics and their projective realization
/// on the dilated space.
#[derive(Clone, Copy, Debug)]
pub struct NeumarkReport {
    /// ‖V†V − I‖_max.
    pub isometry_deviation: f64,
    /// Largest gap between outcome probabilities computed projectively on
    /// VρV† and directly as Tr[E_±ρ].
    pub probability_deviation: f64,
    /// Largest entrywise gap between the ancilla-conditioned system blocks of
    /// VρV† and M_±ρM_±†, including the normalized states when p is not tiny.
    pub state_deviation: f64,
}

impl NeumarkReport {
    pub fn max_deviation(&self) -> f64 {
        self.isometry_deviation
            .max(self.probability_deviation)
            .max(self.state_deviation)
    }
}

/// Verifies that projectively measuring the ancilla of VρV† reproduces the
/// POVM's probabilities and conditional post-measurement states.
///
/// Normalized conditional states are compared only when the outcome
/// probability exceeds 1e-4; below that, dividing by p amplifies rounding
/// noise without adding information (the unnormalized blocks are always
/// compared and are the exact statement of block equality).
pub fn neumark_verify(povm: &MeasurabilityPovm, rho: &DensityMatrix) -> Result<NeumarkReport> {
    let d = povm.dim();
    if rho.dim() != d {
        return Err(Error::DimensionMismatch(format!(
            "state dimension {} vs POVM dimension {d}",
            rho.dim()
        )));
    }
    let v = dilation_isometry(povm);
    let id = Operator::identity(d, d);
    let isometry_deviation = max_abs_diff(&(v.adjoint() * &v), &id);

    let dilated = &v * rho.matrix() * v.adjoint();
    let mut probability_deviation: f64 = 0.0;
    let mut state_deviation: f64 = 0.0;
    for (s_idx, outcome) in Outcome::BOTH.into_iter().enumerate() {
        let block = dilated.view((s_idx * d, s_idx * d), (d, d)).into_owned();
        let m = povm.measurement_op(outcome);
        let direct = m * rho.matrix() * m.adjoint();

        let p_projective = block.trace().re;
        let p_direct = (povm.effect(outcome) * rho.matrix()).trace().re;
        probability_deviation = probability_deviation.max((p_projective - p_direct).abs());
        state_deviation = state_deviation.max(max_abs_diff(&block, &direct));
        if p_direct > 1e-4 {
            let normalized_block = block.map(|z| z / p_projective);
            let normalized_direct = direct.map(|z| z / p_direct);
            state_deviation =
                state_deviation.max(max_abs_diff(&normalized_block, &normalized_direct));
        }
    }
    Ok(NeumarkReport {
        isometry_deviation,
        probability_deviation,
        state_deviation,
    })
}
