//! Spin-j operator algebra on the (2j+1)-dimensional Hilbert space.
//!
//! Basis convention, fixed everywhere in this crate: basis index i holds the
//! eigenstate |j, m⟩ with m = j − i, so m runs descending from +j (index 0)
//! to −j (index 2j). All matrices returned here are dense complex matrices
//! in that basis.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::halfint::HalfInt;

/// Dense complex matrix in the |j, m⟩ basis (m descending).
pub type Operator = DMatrix<Complex64>;

/// A spin-j system: the quantum number plus the fixed basis ordering.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SpinSystem {
    j: HalfInt,
}

impl SpinSystem {
    /// Requires j ≥ 0 (integer or half-integer).
    pub fn new(j: HalfInt) -> Result<Self> {
        if j.twice() < 0 {
            return Err(Error::InvalidSpin(format!("j must be ≥ 0, got {j}")));
        }
        Ok(SpinSystem { j })
    }

    pub fn j(self) -> HalfInt {
        self.j
    }

    /// Hilbert-space dimension 2j + 1.
    pub fn dim(self) -> usize {
        (self.j.twice() + 1) as usize
    }

    /// j(j + 1), computed exactly from the doubled representation.
    pub fn casimir(self) -> f64 {
        let t = f64::from(self.j.twice());
        t * (t + 2.0) / 4.0
    }

    /// The m value at basis index i, i.e. m = j − i. Panics if i ≥ dim.
    pub fn m_at(self, index: usize) -> HalfInt {
        assert!(index < self.dim(), "basis index {index} out of range");
        HalfInt::from_twice(self.j.twice() - 2 * index as i32)
    }

    /// Basis index of m, or `None` when m is not an eigenvalue of J_z here.
    pub fn index_of(self, m: HalfInt) -> Option<usize> {
        let d = self.j.twice() - m.twice();
        if d < 0 || d % 2 != 0 || m.twice() < -self.j.twice() {
            return None;
        }
        Some((d / 2) as usize)
    }

    /// Iterator over m values in basis order (descending from +j).
    pub fn m_values(self) -> impl Iterator<Item = HalfInt> {
        let j = self.j;
        (0..self.dim()).map(move |i| HalfInt::from_twice(j.twice() - 2 * i as i32))
    }

    /// (−1)^{j−m} at basis index i, which is just (−1)^i. Panics if i ≥ dim.
    pub fn parity_sign_at(self, index: usize) -> f64 {
        assert!(index < self.dim(), "basis index {index} out of range");
        if index % 2 == 0 {
            1.0
        } else {
            -1.0
        }
    }
}

fn real_diag(values: impl Iterator<Item = f64>, dim: usize) -> Operator {
    let mut m = Operator::zeros(dim, dim);
    for (i, v) in values.enumerate() {
        m[(i, i)] = Complex64::new(v, 0.0);
    }
    m
}

/// J_z = diag(m), m descending.
pub fn jz_matrix(sys: SpinSystem) -> Operator {
    real_diag(sys.m_values().map(HalfInt::value), sys.dim())
}

/// Raising operator: ⟨m+1|J₊|m⟩ = √(j(j+1) − m(m+1)).
pub fn ladder_plus_matrix(sys: SpinSystem) -> Operator {
    let d = sys.dim();
    let mut m = Operator::zeros(d, d);
    // Column i is |m⟩ with m = j − i; J₊|m⟩ lands on index i − 1.
    for i in 1..d {
        let mv = sys.m_at(i).value();
        let amp = (sys.casimir() - mv * (mv + 1.0)).sqrt();
        m[(i - 1, i)] = Complex64::new(amp, 0.0);
    }
    m
}

/// Lowering operator, the adjoint of J₊ (real entries).
pub fn ladder_minus_matrix(sys: SpinSystem) -> Operator {
    ladder_plus_matrix(sys).transpose()
}

/// J_x = (J₊ + J₋)/2. Real symmetric in this basis.
pub fn jx_matrix(sys: SpinSystem) -> Operator {
    jx_real(sys).map(|v| Complex64::new(v, 0.0))
}

/// J_y = (J₊ − J₋)/(2i). Purely imaginary antisymmetric in this basis.
pub fn jy_matrix(sys: SpinSystem) -> Operator {
    let plus = ladder_plus_matrix(sys);
    let diff = &plus - plus.transpose();
    diff.map(|z| z * Complex64::new(0.0, -0.5))
}

/// Parity operator Π_z = diag((−1)^{j−m}), so +1 at m = +j, alternating down.
pub fn parity_matrix(sys: SpinSystem) -> Operator {
    real_diag((0..sys.dim()).map(|i| sys.parity_sign_at(i)), sys.dim())
}

/// J_x as a real matrix; it is symmetric tridiagonal in this basis.
fn jx_real(sys: SpinSystem) -> DMatrix<f64> {
    let d = sys.dim();
    let mut m = DMatrix::<f64>::zeros(d, d);
    for i in 1..d {
        let mv = sys.m_at(i).value();
        let amp = 0.5 * (sys.casimir() - mv * (mv + 1.0)).sqrt();
        m[(i - 1, i)] = amp;
        m[(i, i - 1)] = amp;
    }
    m
}

/// Rotation about x: U = e^{−iθ J_x}, built from the eigendecomposition of
/// the real symmetric J_x, so U = V·diag(e^{−iθλ})·Vᵀ with V real orthogonal.
pub fn rotation_x(sys: SpinSystem, theta: f64) -> Result<Operator> {
    if !theta.is_finite() {
        return Err(Error::NonFinite(format!("rotation angle {theta}")));
    }
    let d = sys.dim();
    let eig = jx_real(sys).symmetric_eigen();
    let mut u = Operator::zeros(d, d);
    for k in 0..d {
        let phase = Complex64::from_polar(1.0, -theta * eig.eigenvalues[k]);
        let v = eig.eigenvectors.column(k);
        for r in 0..d {
            let vr = phase * v[r];
            for c in 0..d {
                u[(r, c)] += vr * v[c];
            }
        }
    }
    Ok(u)
}

/// Largest entry magnitude.
pub fn max_abs(m: &Operator) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// Largest entrywise difference. Panics on shape mismatch.
pub fn max_abs_diff(a: &Operator, b: &Operator) -> f64 {
    assert_eq!(a.shape(), b.shape(), "operator shapes differ");
    max_abs(&(a - b))
}

/// True when ‖M − M†‖_max ≤ tol.
pub fn is_hermitian(m: &Operator, tol: f64) -> bool {
    m.nrows() == m.ncols() && max_abs_diff(m, &m.adjoint()) <= tol
}

/// True when ‖U†U − I‖_max ≤ tol.
pub fn is_unitary(m: &Operator, tol: f64) -> bool {
    if m.nrows() != m.ncols() {
        return false;
    }
    let id = Operator::identity(m.nrows(), m.ncols());
    max_abs_diff(&(m.adjoint() * m), &id) <= tol
}

/// Eigenvalues of a Hermitian matrix, ascending.
///
/// Uses the real embedding H = X + iY ↦ [[X, −Y], [Y, X]], which is symmetric
/// with each eigenvalue of H doubled; one value per pair is returned. This
/// stays on the well-tested real symmetric path for complex input.
pub fn hermitian_eigenvalues(m: &Operator) -> Vec<f64> {
    let d = m.nrows();
    assert_eq!(d, m.ncols(), "hermitian_eigenvalues needs a square matrix");
    let mut s = DMatrix::<f64>::zeros(2 * d, 2 * d);
    for r in 0..d {
        for c in 0..d {
            let z = m[(r, c)];
            s[(r, c)] = z.re;
            s[(r + d, c + d)] = z.re;
            s[(r, c + d)] = -z.im;
            s[(r + d, c)] = z.im;
        }
    }
    let mut ev: Vec<f64> = s.symmetric_eigen().eigenvalues.iter().copied().collect();
    ev.sort_by(f64::total_cmp);
    ev.into_iter().step_by(2).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn sys(twice_j: i32) -> SpinSystem {
        SpinSystem::new(HalfInt::from_twice(twice_j)).unwrap()
    }

    /// e^{−iθ J_x} summed as a scaled Taylor series, then squared back up.
    /// Independent of the eigendecomposition route used by `rotation_x`;
    /// scaling keeps every partial sum O(1) so no cancellation occurs.
    fn rotation_series(s: SpinSystem, theta: f64) -> Operator {
        let d = s.dim();
        let mut scaled = theta;
        let mut doublings = 0u32;
        while scaled.abs() * s.j().value().max(0.5) > 0.5 {
            scaled /= 2.0;
            doublings += 1;
        }
        let step = jx_matrix(s).map(|z| z * Complex64::new(0.0, -scaled));
        let mut u = Operator::identity(d, d);
        let mut term = Operator::identity(d, d);
        let mut n = 1.0;
        loop {
            term = (&term * &step).map(|z| z / n);
            u += &term;
            if max_abs(&term) < 1e-18 {
                break;
            }
            n += 1.0;
        }
        for _ in 0..doublings {
            u = &u * &u;
        }
        u
    }

    fn factorial(n: i32) -> f64 {
        assert!(n >= 0);
        (1..=n).map(f64::from).product()
    }

    /// Wigner small-d matrix element d^j_{m'm}(θ) from the factorial sum.
    /// Arguments are doubled values; all factorial arguments are integers.
    fn wigner_d(tj: i32, tmp: i32, tm: i32, theta: f64) -> f64 {
        let jpmp = (tj + tmp) / 2;
        let jmmp = (tj - tmp) / 2;
        let jpm = (tj + tm) / 2;
        let jmm = (tj - tm) / 2;
        let delta = (tmp - tm) / 2;
        let pref =
            (factorial(jpmp) * factorial(jmmp) * factorial(jpm) * factorial(jmm)).sqrt();
        let (c, s) = ((theta / 2.0).cos(), (theta / 2.0).sin());
        let mut sum = 0.0;
        for k in (0).max(-delta)..=jpm.min(jmmp) {
            let sign = if (delta + k) % 2 == 0 { 1.0 } else { -1.0 };
            let denom = factorial(jpm - k)
                * factorial(k)
                * factorial(delta + k)
                * factorial(jmmp - k);
            sum += sign / denom * c.powi(tj - delta - 2 * k) * s.powi(delta + 2 * k);
        }
        pref * sum
    }

    #[test]
    fn basis_is_m_descending() {
        let s = sys(5);
        assert_eq!(s.dim(), 6);
        assert_eq!(s.m_at(0), HalfInt::from_twice(5));
        assert_eq!(s.m_at(5), HalfInt::from_twice(-5));
        assert_eq!(s.index_of(HalfInt::from_twice(-1)), Some(3));
        assert_eq!(s.index_of(HalfInt::new(1)), None); // wrong lattice
        assert_eq!(s.index_of(HalfInt::from_twice(7)), None); // |m| > j
        let ms: Vec<i32> = s.m_values().map(HalfInt::twice).collect();
        assert_eq!(ms, vec![5, 3, 1, -1, -3, -5]);
    }

    #[test]
    fn rejects_negative_j() {
        assert!(SpinSystem::new(HalfInt::from_twice(-1)).is_err());
        assert_eq!(sys(0).dim(), 1);
    }

    #[test]
    fn spin_half_matches_pauli_over_two() {
        let s = sys(1);
        let jx = jx_matrix(s);
        assert_abs_diff_eq!(jx[(0, 1)].re, 0.5, epsilon = 1e-15);
        assert_abs_diff_eq!(jx[(1, 0)].re, 0.5, epsilon = 1e-15);
        let jy = jy_matrix(s);
        assert_abs_diff_eq!(jy[(0, 1)].im, -0.5, epsilon = 1e-15);
        assert_abs_diff_eq!(jy[(1, 0)].im, 0.5, epsilon = 1e-15);
        let jz = jz_matrix(s);
        assert_abs_diff_eq!(jz[(0, 0)].re, 0.5, epsilon = 1e-15);
        assert_abs_diff_eq!(jz[(1, 1)].re, -0.5, epsilon = 1e-15);
    }

    #[test]
    fn commutators_close_on_su2() {
        for tj in [1, 2, 3, 4, 5, 6, 7] {
            let s = sys(tj);
            let (jx, jy, jz) = (jx_matrix(s), jy_matrix(s), jz_matrix(s));
            let comm = &jx * &jy - &jy * &jx;
            let expected = jz.map(|z| z * Complex64::new(0.0, 1.0));
            assert!(
                max_abs_diff(&comm, &expected) <= 1e-12,
                "[Jx,Jy] ≠ iJz at 2j = {tj}"
            );
            let casimir = &jx * &jx + &jy * &jy + &jz * &jz;
            let expected = Operator::identity(s.dim(), s.dim())
                .map(|z| z * Complex64::new(s.casimir(), 0.0));
            assert!(max_abs_diff(&casimir, &expected) <= 1e-12);
        }
    }

    #[test]
    fn ladder_operators_are_adjoints_with_standard_amplitudes() {
        let s = sys(5);
        let plus = ladder_plus_matrix(s);
        let minus = ladder_minus_matrix(s);
        assert_eq!(max_abs_diff(&plus.adjoint(), &minus), 0.0);
        // ⟨3/2|J₊|1/2⟩ = √(35/4 − 3/4) = √8 for j = 5/2.
        let row = s.index_of(HalfInt::from_twice(3)).unwrap();
        let col = s.index_of(HalfInt::from_twice(1)).unwrap();
        assert_abs_diff_eq!(plus[(row, col)].re, 8.0_f64.sqrt(), epsilon = 1e-15);
        // J₊ annihilates the top state: column 0 is zero.
        let top = plus.column(0).iter().map(|z| z.norm()).fold(0.0, f64::max);
        assert_eq!(top, 0.0);
    }

    #[test]
    fn parity_alternates_and_anticommutes_with_jx() {
        for tj in [1, 2, 5] {
            let s = sys(tj);
            let p = parity_matrix(s);
            assert_abs_diff_eq!(p[(0, 0)].re, 1.0, epsilon = 0.0);
            let id = Operator::identity(s.dim(), s.dim());
            assert_eq!(max_abs_diff(&(&p * &p), &id), 0.0);
            let jx = jx_matrix(s);
            let anti = &p * &jx * &p;
            assert!(max_abs_diff(&anti, &jx.map(|z| -z)) <= 1e-15);
        }
    }

    #[test]
    fn rotation_is_unitary_and_composes() {
        for tj in [1, 2, 5, 7] {
            let s = sys(tj);
            let id = Operator::identity(s.dim(), s.dim());
            assert!(max_abs_diff(&rotation_x(s, 0.0).unwrap(), &id) <= 1e-14);
            for k in 0..20 {
                let theta = -4.0 * std::f64::consts::PI + 0.421 * k as f64;
                let u = rotation_x(s, theta).unwrap();
                assert!(is_unitary(&u, 1e-12), "2j = {tj}, θ = {theta}");
            }
            let (a, b) = (0.37, -1.91);
            let composed = rotation_x(s, a).unwrap() * rotation_x(s, b).unwrap();
            assert!(max_abs_diff(&composed, &rotation_x(s, a + b).unwrap()) <= 1e-12);
        }
    }

    #[test]
    fn rotation_matches_series_expansion() {
        for tj in [1, 2, 3, 4, 5, 6, 7] {
            let s = sys(tj);
            for k in 0..=16 {
                let theta = -4.0 * std::f64::consts::PI
                    + 8.0 * std::f64::consts::PI * (k as f64) / 16.0;
                let u = rotation_x(s, theta).unwrap();
                let reference = rotation_series(s, theta);
                let dev = max_abs_diff(&u, &reference);
                assert!(dev <= 1e-10, "2j = {tj}, θ = {theta}: dev = {dev:.3e}");
            }
        }
    }

    #[test]
    fn rotation_matches_wigner_d() {
        // U = e^{−iθJx} relates to the small-d matrix (a J_y rotation) by the
        // basis phase i^{m'−m}: U_{m'm}(θ) = i^{m'−m} d^j_{m'm}(θ).
        let i_unit = Complex64::new(0.0, 1.0);
        for tj in [1, 2, 3, 5] {
            let s = sys(tj);
            for k in 0..12 {
                let theta = -3.0 + 0.55 * k as f64;
                let u = rotation_x(s, theta).unwrap();
                for row in 0..s.dim() {
                    for col in 0..s.dim() {
                        let tmp = s.m_at(row).twice();
                        let tm = s.m_at(col).twice();
                        let expected =
                            i_unit.powi((tmp - tm) / 2) * wigner_d(tj, tmp, tm, theta);
                        assert!(
                            (u[(row, col)] - expected).norm() <= 1e-12,
                            "2j = {tj}, θ = {theta}, element ({row},{col})"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn rotation_rejects_non_finite_angle() {
        assert!(rotation_x(sys(1), f64::NAN).is_err());
        assert!(rotation_x(sys(1), f64::INFINITY).is_err());
    }

    #[test]
    fn hermitian_eigenvalues_recover_known_spectra() {
        // J_x has the same spectrum as J_z: {−j, ..., +j}.
        for tj in [1, 2, 5, 7] {
            let s = sys(tj);
            let ev = hermitian_eigenvalues(&jx_matrix(s));
            for (i, v) in ev.iter().enumerate() {
                let expected = -s.j().value() + i as f64;
                assert_abs_diff_eq!(*v, expected, epsilon = 1e-12);
            }
        }
        // A genuinely complex Hermitian matrix: V diag(w) V† with V unitary.
        let s = sys(5);
        let v = rotation_x(s, 0.7).unwrap();
        let w = [-2.0, -0.5, 0.0, 0.25, 1.0, 3.0];
        let diag = real_diag(w.iter().copied(), s.dim());
        let h = &v * diag * v.adjoint();
        let ev = hermitian_eigenvalues(&h);
        for (got, want) in ev.iter().zip(w.iter()) {
            assert_abs_diff_eq!(*got, *want, epsilon = 1e-12);
        }
    }
}
