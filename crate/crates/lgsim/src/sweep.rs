//! Parameter sweeps and derived quantities: K versus measurability, the
//! profile-versus-width table, and the violation threshold b*.
//!
//! Sweeps use the equal-gap protocol at unit drive (ω = 1, Ω = 0) from the
//! maximally mixed state, where every pair correlation depends only on its
//! gap: K(θ, b) = 3C(θ, b) − C(3θ, b).

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use crate::correlations::{maximally_mixed, two_time_correlation, DensityMatrix, DynamicsParams};
use crate::error::{Error, Result};
use crate::halfint::HalfInt;
use crate::measurability::{
    edge_partition_5_2, f_value, uniform_partition, MeasurabilityParam, MeasurabilityPovm,
    Partition,
};
use crate::spin::SpinSystem;

/// Scan resolution in b used to bracket threshold crossings.
const THRESHOLD_SCAN_STEP: f64 = 0.01;
/// Bisection stops when the bracket is narrower than this.
const THRESHOLD_TOL: f64 = 1e-8;

/// A partition family selectable by name: the j = 5/2 edge layout, or the
/// uniform layout with a given odd block size.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PartitionChoice {
    Edge52,
    Uniform { block_size: usize },
}

impl PartitionChoice {
    pub fn build(self, sys: SpinSystem) -> Result<Partition> {
        match self {
            PartitionChoice::Edge52 => {
                if sys.j() != HalfInt::from_twice(5) {
                    return Err(Error::InvalidPartition(format!(
                        "the edge5_2 layout requires j = 5/2, got j = {}",
                        sys.j()
                    )));
                }
                Ok(edge_partition_5_2())
            }
            PartitionChoice::Uniform { block_size } => uniform_partition(sys, block_size),
        }
    }
}

impl fmt::Display for PartitionChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PartitionChoice::Edge52 => write!(f, "edge5_2"),
            PartitionChoice::Uniform { block_size } => write!(f, "uniform:{block_size}"),
        }
    }
}

impl FromStr for PartitionChoice {
    type Err = Error;

    /// Accepts "edge5_2" or "uniform:<block size>".
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "edge5_2" {
            return Ok(PartitionChoice::Edge52);
        }
        if let Some(size) = s.strip_prefix("uniform:") {
            let block_size = size.trim().parse().map_err(|_| {
                Error::Malformed(format!("block size {size:?} is not a positive integer"))
            })?;
            return Ok(PartitionChoice::Uniform { block_size });
        }
        Err(Error::Malformed(format!(
            "expected \"edge5_2\" or \"uniform:<size>\", got {s:?}"
        )))
    }
}

/// What to sweep: the system, partition family, the θ/π values (one table
/// section per value), and the b grid swept within each section.
#[derive(Clone, Debug)]
pub struct SweepSpec {
    pub j: HalfInt,
    pub partition: PartitionChoice,
    pub theta_over_pi: Vec<f64>,
    pub b_grid: Vec<f64>,
}

fn check_grid(name: &str, grid: &[f64]) -> Result<()> {
    if grid.is_empty() {
        return Err(Error::InvalidGrid(format!("{name} grid is empty")));
    }
    if grid.iter().any(|v| !v.is_finite()) {
        return Err(Error::InvalidGrid(format!("{name} grid contains a non-finite value")));
    }
    if grid.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidGrid(format!(
            "{name} grid must be strictly ascending"
        )));
    }
    Ok(())
}

impl SweepSpec {
    pub fn validate(&self) -> Result<()> {
        SpinSystem::new(self.j)?;
        check_grid("theta_over_pi", &self.theta_over_pi)?;
        check_grid("b", &self.b_grid)?;
        if self.b_grid.iter().any(|b| !(0.0..=1.0).contains(b)) {
            return Err(Error::InvalidGrid("b grid must lie in [0, 1]".into()));
        }
        Ok(())
    }
}

/// One sweep point: both correlations entering K, and the verdict.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SweepRow {
    pub theta_over_pi: f64,
    pub b: f64,
    pub c_theta: f64,
    pub c_3theta: f64,
    pub k: f64,
    pub violated: bool,
}

fn equal_gap_point(
    partition: &Partition,
    rho0: &DensityMatrix,
    params: &DynamicsParams,
    b: f64,
    theta: f64,
) -> Result<(f64, f64, f64)> {
    let povm =
        MeasurabilityPovm::build(partition.clone(), MeasurabilityParam::from_b(b)?);
    let c_theta = two_time_correlation(&povm, rho0, params, theta)?.c;
    let c_3theta = two_time_correlation(&povm, rho0, params, 3.0 * theta)?.c;
    Ok((c_theta, c_3theta, 3.0 * c_theta - c_3theta))
}

/// K over the b grid for each θ, in θ-major order (the CSV layout: all b
/// rows of the first θ, then the next θ).
pub fn sweep_k_vs_b(spec: &SweepSpec) -> Result<Vec<SweepRow>> {
    spec.validate()?;
    let sys = SpinSystem::new(spec.j)?;
    let partition = spec.partition.build(sys)?;
    let params = DynamicsParams::new(spec.j, 1.0, 0.0)?;
    let rho0 = maximally_mixed(sys);
    let mut rows = Vec::with_capacity(spec.theta_over_pi.len() * spec.b_grid.len());
    for &theta_over_pi in &spec.theta_over_pi {
        let theta = theta_over_pi * PI;
        for &b in &spec.b_grid {
            let (c_theta, c_3theta, k) = equal_gap_point(&partition, &rho0, &params, b, theta)?;
            rows.push(SweepRow {
                theta_over_pi,
                b,
                c_theta,
                c_3theta,
                k,
                violated: k.abs() > 2.0,
            });
        }
    }
    Ok(rows)
}

/// One row of the profile table: f(0), f(1), f(2) at width σ.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FSigmaRow {
    pub sigma: f64,
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

/// The three distinct profile values per width, for a strictly ascending
/// grid of positive σ.
pub fn sweep_f_vs_sigma(sigmas: &[f64]) -> Result<Vec<FSigmaRow>> {
    check_grid("sigma", sigmas)?;
    if sigmas.iter().any(|s| *s <= 0.0) {
        return Err(Error::InvalidGrid("sigma grid must be positive".into()));
    }
    sigmas
        .iter()
        .map(|&sigma| {
            let param = MeasurabilityParam::from_sigma(sigma)?;
            Ok(FSigmaRow {
                sigma,
                a: f_value(0, &param),
                b: f_value(1, &param),
                c: f_value(2, &param),
            })
        })
        .collect()
}

/// Result of a threshold search over b ∈ [0, 1] at fixed θ.
#[derive(Clone, Debug, PartialEq)]
pub enum ThresholdOutcome {
    /// |K(b)| − 2 never changes sign on the scan grid.
    Absent,
    /// The unique crossing, bisected to within 1e-8 in b.
    Found(f64),
    /// Multiple sign changes; each bracketing interval is reported.
    Ambiguous(Vec<(f64, f64)>),
}

/// Searches for the measurability threshold b* where |K(b)| = 2 under the
/// equal-gap protocol with gap angle `theta` (radians). The grid scan uses
/// 0.01 spacing; a unique bracket is refined by bisection.
pub fn violation_threshold(
    j: HalfInt,
    partition: PartitionChoice,
    theta: f64,
) -> Result<ThresholdOutcome> {
    if !theta.is_finite() {
        return Err(Error::NonFinite(format!("gap angle {theta}")));
    }
    let sys = SpinSystem::new(j)?;
    let partition = partition.build(sys)?;
    let params = DynamicsParams::new(j, 1.0, 0.0)?;
    let rho0 = maximally_mixed(sys);
    let excess = |b: f64| -> Result<f64> {
        let (_, _, k) = equal_gap_point(&partition, &rho0, &params, b, theta)?;
        Ok(k.abs() - 2.0)
    };

    let steps = (1.0 / THRESHOLD_SCAN_STEP).round() as usize;
    let grid: Vec<f64> = (0..=steps)
        .map(|i| (i as f64 * THRESHOLD_SCAN_STEP).min(1.0))
        .collect();
    let values: Vec<f64> = grid.iter().map(|&b| excess(b)).collect::<Result<_>>()?;
    let mut brackets = Vec::new();
    for i in 0..steps {
        if values[i] * values[i + 1] < 0.0 {
            brackets.push((grid[i], grid[i + 1]));
        }
    }
    match brackets.len() {
        0 => Ok(ThresholdOutcome::Absent),
        1 => {
            let (mut lo, mut hi) = brackets[0];
            let mut f_lo = excess(lo)?;
            while hi - lo > THRESHOLD_TOL {
                let mid = 0.5 * (lo + hi);
                let f_mid = excess(mid)?;
                if f_mid == 0.0 {
                    return Ok(ThresholdOutcome::Found(mid));
                }
                if (f_lo < 0.0) == (f_mid < 0.0) {
                    lo = mid;
                    f_lo = f_mid;
                } else {
                    hi = mid;
                }
            }
            Ok(ThresholdOutcome::Found(0.5 * (lo + hi)))
        }
        _ => Ok(ThresholdOutcome::Ambiguous(brackets)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn partition_choice_string_forms() {
        assert_eq!("edge5_2".parse::<PartitionChoice>().unwrap(), PartitionChoice::Edge52);
        assert_eq!(
            "uniform:3".parse::<PartitionChoice>().unwrap(),
            PartitionChoice::Uniform { block_size: 3 }
        );
        for choice in [PartitionChoice::Edge52, PartitionChoice::Uniform { block_size: 5 }] {
            assert_eq!(choice.to_string().parse::<PartitionChoice>().unwrap(), choice);
        }
        for bad in ["edge", "EDGE5_2", "uniform", "uniform:", "uniform:x", "uniform:-3"] {
            assert!(bad.parse::<PartitionChoice>().is_err(), "accepted {bad:?}");
        }
    }

    #[test]
    fn partition_choice_build_checks_system() {
        let j2 = SpinSystem::new(HalfInt::new(2)).unwrap();
        assert!(PartitionChoice::Edge52.build(j2).is_err());
        assert!(PartitionChoice::Uniform { block_size: 2 }.build(j2).is_err());
        assert!(PartitionChoice::Uniform { block_size: 5 }.build(j2).is_ok());
    }

    #[test]
    fn sweep_spec_validation() {
        let valid = SweepSpec {
            j: HalfInt::from_twice(5),
            partition: PartitionChoice::Edge52,
            theta_over_pi: vec![0.06, 0.34],
            b_grid: vec![0.0, 0.5, 1.0],
        };
        assert!(valid.validate().is_ok());
        let mut spec = valid.clone();
        spec.b_grid = vec![];
        assert!(spec.validate().is_err());
        let mut spec = valid.clone();
        spec.b_grid = vec![0.5, 0.5];
        assert!(spec.validate().is_err());
        let mut spec = valid.clone();
        spec.b_grid = vec![0.5, 0.2];
        assert!(spec.validate().is_err());
        let mut spec = valid.clone();
        spec.b_grid = vec![0.5, 1.2];
        assert!(spec.validate().is_err());
        let mut spec = valid.clone();
        spec.theta_over_pi = vec![0.06, f64::NAN];
        assert!(spec.validate().is_err());
    }

    #[test]
    fn sweep_rows_are_theta_major_with_frozen_values() {
        let spec = SweepSpec {
            j: HalfInt::from_twice(5),
            partition: PartitionChoice::Edge52,
            theta_over_pi: vec![0.06, 0.95],
            b_grid: (0..=100).map(|i| (i as f64) / 100.0).collect(),
        };
        let rows = sweep_k_vs_b(&spec).unwrap();
        assert_eq!(rows.len(), 202);
        assert_eq!(rows[0].theta_over_pi, 0.06);
        assert_eq!(rows[0].b, 0.0);
        assert_eq!(rows[101].theta_over_pi, 0.95);
        // Frozen endpoint values for the equal-gap protocol.
        assert_abs_diff_eq!(rows[0].k, 0.734206746523423, epsilon = 1e-10);
        assert_abs_diff_eq!(rows[100].k, 2.4917543699756578, epsilon = 1e-10);
        assert!(rows[100].violated);
        assert_abs_diff_eq!(rows[101].k, -0.717717501899408, epsilon = 1e-10);
        assert_abs_diff_eq!(rows[201].k, -2.472356909956036, epsilon = 1e-10);
        assert!(rows[201].violated);
        // The b = 0.98 row of the first section.
        assert_abs_diff_eq!(rows[98].k, 2.330261377960451, epsilon = 1e-10);
        // K consistency within each row.
        for row in &rows {
            assert_abs_diff_eq!(row.k, 3.0 * row.c_theta - row.c_3theta, epsilon = 0.0);
            assert_eq!(row.violated, row.k.abs() > 2.0);
        }
        // Determinism: a second run reproduces every bit.
        assert_eq!(rows, sweep_k_vs_b(&spec).unwrap());
    }

    #[test]
    fn profile_table_matches_frozen_values() {
        let rows = sweep_f_vs_sigma(&[0.2, 0.6, 1.0]).unwrap();
        assert_eq!(rows.len(), 3);
        for row in &rows {
            assert_eq!(row.a, 1.0);
            assert!(row.b > row.c);
        }
        assert_abs_diff_eq!(rows[1].b, 0.2493522087772962, epsilon = 1e-15);
        assert_abs_diff_eq!(rows[1].c, 0.003865920139472807, epsilon = 1e-15);
        assert_abs_diff_eq!(rows[2].b, (-0.5_f64).exp(), epsilon = 1e-15);

        assert!(sweep_f_vs_sigma(&[]).is_err());
        assert!(sweep_f_vs_sigma(&[0.6, 0.2]).is_err());
        assert!(sweep_f_vs_sigma(&[-0.5, 0.6]).is_err());
    }

    #[test]
    fn threshold_found_on_edge_layout() {
        let outcome = violation_threshold(
            HalfInt::from_twice(5),
            PartitionChoice::Edge52,
            0.06 * PI,
        )
        .unwrap();
        match outcome {
            ThresholdOutcome::Found(b_star) => {
                assert_abs_diff_eq!(b_star, 0.930138889177518, epsilon = 1e-7);
            }
            other => panic!("expected Found, got {other:?}"),
        }
    }

    #[test]
    fn threshold_absent_when_never_violating() {
        // At θ = 0.34π the maximum over b of |K| is ~1.05 < 2.
        let outcome = violation_threshold(
            HalfInt::from_twice(5),
            PartitionChoice::Edge52,
            0.34 * PI,
        )
        .unwrap();
        assert_eq!(outcome, ThresholdOutcome::Absent);
    }

    #[test]
    fn threshold_absent_for_singleton_blocks() {
        // With block size 1 every offset is 0 and f ≡ 1, so A is the parity
        // operator for every b: K(b) is constant. At θ = π/4 on the qubit
        // that constant is 2√2 > 2, so |K| − 2 never changes sign and no
        // threshold exists.
        let j = HalfInt::from_twice(1);
        let choice = PartitionChoice::Uniform { block_size: 1 };
        let outcome = violation_threshold(j, choice, PI / 4.0).unwrap();
        assert_eq!(outcome, ThresholdOutcome::Absent);

        let sys = SpinSystem::new(j).unwrap();
        let partition = choice.build(sys).unwrap();
        let params = DynamicsParams::new(j, 1.0, 0.0).unwrap();
        let rho0 = maximally_mixed(sys);
        for b in [0.0, 0.25, 0.5, 1.0] {
            let (_, _, k) = equal_gap_point(&partition, &rho0, &params, b, PI / 4.0).unwrap();
            assert_abs_diff_eq!(k, 8.0_f64.sqrt(), epsilon = 1e-12);
        }
    }

    #[test]
    fn threshold_rejects_bad_inputs() {
        assert!(violation_threshold(
            HalfInt::from_twice(5),
            PartitionChoice::Edge52,
            f64::NAN
        )
        .is_err());
        // Partition incompatible with j surfaces as an error, not Absent.
        assert!(violation_threshold(
            HalfInt::new(1),
            PartitionChoice::Edge52,
            0.06 * PI
        )
        .is_err());
    }
}
