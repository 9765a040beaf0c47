//! Pure and mixed qubit-qudit states.
//!
//! Coefficients are indexed `a_ij` with `i` the qubit level (1..=2) and `j` the
//! qudit level (1..=d), flattened as `a_11, ..., a_1d, a_21, ..., a_2d`. The
//! flat position of `a_ij` is therefore `(i-1)*d + (j-1)`, which is also the
//! row order of `U_A (x) U_B`.

pub mod random;

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;

use crate::linalg::{hermitian_eig, ComplexMatrix};
use crate::math::{binary_entropy, sqrt, xlog2x};
use crate::{Error, Result};

/// Slack on `sum |a_ij|^2 = 1`.
pub const NORM_TOL: f64 = 1e-10;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

fn norm_sqr(v: &[Complex64]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum()
}

fn check_dimension(d: usize) -> Result<()> {
    if d < 2 {
        Err(Error::BadDimension { d })
    } else {
        Ok(())
    }
}

/// Normalized qubit-qudit pure state.
#[derive(Debug, Clone, PartialEq)]
pub struct PureState {
    d: usize,
    coeffs: Vec<Complex64>,
}

impl PureState {
    pub fn new(d: usize, coeffs: Vec<Complex64>) -> Result<Self> {
        check_dimension(d)?;
        if coeffs.len() != 2 * d {
            return Err(Error::DimensionMismatch {
                expected: 2 * d,
                found: coeffs.len(),
            });
        }
        let n = norm_sqr(&coeffs);
        if (n - 1.0).abs() > NORM_TOL || !n.is_finite() {
            return Err(Error::NotNormalized { norm_sqr: n });
        }
        Ok(Self { d, coeffs })
    }

    /// Rescales `coeffs` to unit norm; fails only for the zero vector.
    pub fn normalized(d: usize, mut coeffs: Vec<Complex64>) -> Result<Self> {
        let n = sqrt(norm_sqr(&coeffs));
        if n == 0.0 || !n.is_finite() {
            return Err(Error::NotNormalized { norm_sqr: n * n });
        }
        for z in coeffs.iter_mut() {
            *z /= n;
        }
        Self::new(d, coeffs)
    }

    /// `a (x) b` for a qubit vector `a` and a qudit vector `b`.
    pub fn product(a: [Complex64; 2], b: &[Complex64]) -> Result<Self> {
        let coeffs = a
            .iter()
            .flat_map(|x| b.iter().map(move |y| x * y))
            .collect();
        Self::normalized(b.len(), coeffs)
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Amplitude `a_ij` with zero-based `i` in 0..2 and `j` in 0..d.
    pub fn amp(&self, i: usize, j: usize) -> Complex64 {
        self.coeffs[i * self.d + j]
    }

    pub fn density(&self) -> DensityMatrix {
        DensityMatrix {
            d: self.d,
            matrix: ComplexMatrix::outer(&self.coeffs, &self.coeffs),
        }
    }
}

/// Schmidt form `psi = c1 u1 (x) v1 + c2 u2 (x) v2`.
#[derive(Debug, Clone, PartialEq)]
pub struct SchmidtData {
    pub c1: f64,
    pub c2: f64,
    /// Orthonormal qubit vectors `u1, u2`.
    pub left: [Vec<Complex64>; 2],
    /// Orthonormal qudit vectors `v1, v2`.
    pub right: [Vec<Complex64>; 2],
}

impl SchmidtData {
    pub fn reconstruct(&self) -> Vec<Complex64> {
        let d = self.right[0].len();
        let mut out = vec![ZERO; 2 * d];
        for (k, c) in [self.c1, self.c2].into_iter().enumerate() {
            for i in 0..2 {
                for j in 0..d {
                    out[i * d + j] += self.left[k][i] * self.right[k][j] * c;
                }
            }
        }
        out
    }
}

/// Schmidt decomposition of a qubit-qudit pure state.
///
/// `c1^2, c2^2` are the eigenvalues of the 2x2 Gram matrix `b = A A^dagger` of the
/// coefficient rows. The product `c1 c2` is taken from a Gram-Schmidt
/// factorization of the rows, which keeps it accurate down to product states.
pub fn schmidt(psi: &PureState) -> Result<SchmidtData> {
    let d = psi.d;
    let rows = [&psi.coeffs[..d], &psi.coeffs[d..]];
    let n2 = norm_sqr(&psi.coeffs);
    if (n2 - 1.0).abs() > NORM_TOL {
        return Err(Error::NotNormalized { norm_sqr: n2 });
    }

    let (base, other) = if norm_sqr(rows[0]) >= norm_sqr(rows[1]) {
        (rows[0], rows[1])
    } else {
        (rows[1], rows[0])
    };
    let base_norm = sqrt(norm_sqr(base));
    let unit: Vec<Complex64> = base.iter().map(|z| z / base_norm).collect();
    let mut residual = other.to_vec();
    for _ in 0..2 {
        let dot: Complex64 = unit.iter().zip(&residual).map(|(u, r)| u.conj() * r).sum();
        for (r, u) in residual.iter_mut().zip(&unit) {
            *r -= dot * u;
        }
    }
    let product = base_norm * sqrt(norm_sqr(&residual));
    let disc = sqrt((n2 * n2 - 4.0 * product * product).max(0.0));
    let c1 = sqrt((n2 + disc) / 2.0);
    let c2 = if c1 > 0.0 { product / c1 } else { 0.0 };

    let b = gram(psi);
    let eig = hermitian_eig(&b, f64::INFINITY)?;
    let left = [0, 1].map(|k| fix_phase(eig.eigenvectors.column(k)));

    let project = |u: &[Complex64]| -> Vec<Complex64> {
        (0..d)
            .map(|j| rows[0][j] * u[0].conj() + rows[1][j] * u[1].conj())
            .collect()
    };
    let v1 = normalize(project(&left[0])).unwrap_or_else(|| basis_vector(d, 0));
    let mut v2 = project(&left[1]);
    let v2 = if c2 > 1e-14 {
        orthogonalize(&v1, &mut v2);
        normalize(v2)
    } else {
        None
    }
    .unwrap_or_else(|| complement(&v1));
    Ok(SchmidtData {
        c1,
        c2,
        left,
        right: [v1, v2],
    })
}

/// Largest-magnitude component made real and positive (first index wins ties).
fn fix_phase(mut v: Vec<Complex64>) -> Vec<Complex64> {
    let mut best = 0;
    for (k, z) in v.iter().enumerate() {
        if z.norm() > v[best].norm() + 1e-15 {
            best = k;
        }
    }
    let n = v[best].norm();
    if n > 0.0 {
        let phase = (v[best] / n).conj();
        for z in v.iter_mut() {
            *z *= phase;
        }
        v[best] = Complex64::new(v[best].re, 0.0);
    }
    v
}

fn basis_vector(d: usize, k: usize) -> Vec<Complex64> {
    let mut v = vec![ZERO; d];
    v[k] = Complex64::new(1.0, 0.0);
    v
}

fn orthogonalize(against: &[Complex64], v: &mut [Complex64]) {
    for _ in 0..2 {
        let dot: Complex64 = against
            .iter()
            .zip(v.iter())
            .map(|(a, x)| a.conj() * x)
            .sum();
        for (x, a) in v.iter_mut().zip(against) {
            *x -= dot * a;
        }
    }
}

fn normalize(mut v: Vec<Complex64>) -> Option<Vec<Complex64>> {
    let n = sqrt(norm_sqr(&v));
    if n <= 1e-300 {
        return None;
    }
    for z in v.iter_mut() {
        *z /= n;
    }
    Some(v)
}

fn complement(v1: &[Complex64]) -> Vec<Complex64> {
    (0..v1.len())
        .filter_map(|k| {
            let mut e = basis_vector(v1.len(), k);
            orthogonalize(v1, &mut e);
            let n = sqrt(norm_sqr(&e));
            (n > 0.5).then(|| e.into_iter().map(|z| z / n).collect())
        })
        .next()
        .expect("a unit vector in d >= 2 has an orthogonal basis direction")
}

/// The 2x2 Gram matrix `b_im = sum_j a_ij conj(a_mj)` (equal to `rho_A`).
fn gram(psi: &PureState) -> ComplexMatrix {
    let d = psi.d;
    ComplexMatrix::from_fn(2, 2, |i, m| {
        (0..d)
            .map(|j| psi.coeffs[i * d + j] * psi.coeffs[m * d + j].conj())
            .sum()
    })
}

/// Von Neumann entropy of either reduced state, in bits.
pub fn entropy_pure(psi: &PureState) -> Result<f64> {
    let s = schmidt(psi)?;
    Ok(xlog2x(s.c1 * s.c1) + xlog2x(s.c2 * s.c2))
}

/// `2 sqrt(sum_{i<j} |a_1i a_2j - a_1j a_2i|^2)`: the pure-state concurrence
/// written through the 2x2 minors of the coefficient matrix.
pub fn concurrence_minors(psi: &PureState) -> f64 {
    let d = psi.d;
    let mut sum = 0.0;
    for i in 0..d {
        for j in i + 1..d {
            sum += (psi.amp(0, i) * psi.amp(1, j) - psi.amp(0, j) * psi.amp(1, i)).norm_sqr();
        }
    }
    2.0 * sqrt(sum)
}

/// Pure-state concurrence `2 c1 c2`, cross-checked against the minor-sum form.
pub fn concurrence_pure(psi: &PureState) -> Result<f64> {
    let s = schmidt(psi)?;
    let from_schmidt = 2.0 * s.c1 * s.c2;
    let from_minors = concurrence_minors(psi);
    let difference = (from_schmidt - from_minors).abs();
    if difference > 1e-10 {
        return Err(Error::Inconsistent {
            what: "concurrence 2 c1 c2 vs minor sum",
            difference,
        });
    }
    Ok(from_schmidt)
}

/// Concurrence-to-entanglement map `eps(c) = h((1 + sqrt(1 - c^2))/2)` in bits.
pub fn epsilon(c: f64) -> Result<f64> {
    if !(-1e-12..=1.0 + 1e-12).contains(&c) {
        return Err(Error::OutOfRange { value: c });
    }
    Ok(epsilon_clamped(c))
}

/// `eps` with the argument clamped into `[0, 1]`.
pub fn epsilon_clamped(c: f64) -> f64 {
    let c = c.clamp(0.0, 1.0);
    binary_entropy((1.0 + sqrt(1.0 - c * c)) / 2.0)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Subsystem {
    /// The qubit.
    A,
    /// The qudit.
    B,
}

/// Partial trace of `psi psi^dagger` onto one subsystem.
pub fn reduced_density(psi: &PureState, subsystem: Subsystem) -> ComplexMatrix {
    match subsystem {
        Subsystem::A => gram(psi),
        Subsystem::B => {
            let d = psi.d;
            ComplexMatrix::from_fn(d, d, |j, n| {
                (0..2).map(|i| psi.amp(i, j) * psi.amp(i, n).conj()).sum()
            })
        }
    }
}

/// Pure state on an arbitrary `d_a x d_b` bipartite system, coefficients
/// `a_ij` row-major in `i`.
#[derive(Debug, Clone, PartialEq)]
pub struct BipartitePure {
    pub da: usize,
    pub db: usize,
    coeffs: Vec<Complex64>,
}

impl BipartitePure {
    pub fn new(da: usize, db: usize, coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.len() != da * db || da == 0 || db == 0 {
            return Err(Error::DimensionMismatch {
                expected: da * db,
                found: coeffs.len(),
            });
        }
        let n = norm_sqr(&coeffs);
        if (n - 1.0).abs() > NORM_TOL {
            return Err(Error::NotNormalized { norm_sqr: n });
        }
        Ok(Self { da, db, coeffs })
    }

    fn a(&self, i: usize, j: usize) -> Complex64 {
        self.coeffs[i * self.db + j]
    }

    pub fn reduced_a(&self) -> ComplexMatrix {
        ComplexMatrix::from_fn(self.da, self.da, |i, m| {
            (0..self.db)
                .map(|j| self.a(i, j) * self.a(m, j).conj())
                .sum()
        })
    }
}

/// Both sides of `1 - Tr(rho_A^2) = 2 sum_{m>i} sum_{n>j} |a_ij a_mn - a_in a_mj|^2`.
///
/// The left side is evaluated as `(Tr rho_A)^2 - Tr(rho_A^2)`, which equals
/// `1 - Tr(rho_A^2)` for a normalized state.
pub fn linear_entropy_identity_check(psi: &BipartitePure) -> (f64, f64) {
    let rho_a = psi.reduced_a();
    let tr = rho_a.trace().re;
    let tr_sq: f64 = rho_a.as_slice().iter().map(|z| z.norm_sqr()).sum();
    let lhs = tr * tr - tr_sq;
    let mut rhs = 0.0;
    for i in 0..psi.da {
        for m in i + 1..psi.da {
            for j in 0..psi.db {
                for n in j + 1..psi.db {
                    rhs += (psi.a(i, j) * psi.a(m, n) - psi.a(i, n) * psi.a(m, j)).norm_sqr();
                }
            }
        }
    }
    (lhs, 2.0 * rhs)
}

/// Strictly positive probabilities summing to one.
#[derive(Debug, Clone, PartialEq)]
pub struct Weights(Vec<f64>);

impl Weights {
    pub fn new(p: Vec<f64>) -> Result<Self> {
        if let Some((index, &value)) = p.iter().enumerate().find(|(_, &x)| x.is_nan() || x <= 0.0) {
            return Err(Error::NegativeInput { index, value });
        }
        let sum: f64 = p.iter().sum();
        if (sum - 1.0).abs() > 1e-12 {
            return Err(Error::TraceNotUnit { trace: sum });
        }
        Ok(Self(p))
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }
}

/// Validated qubit-qudit density matrix (Hermitian, PSD, unit trace).
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    d: usize,
    matrix: ComplexMatrix,
}

impl DensityMatrix {
    /// Validates `matrix` as a `2d x 2d` density matrix; Hermiticity, trace and
    /// positivity are all checked against `tol`. The stored matrix is the
    /// Hermitian part of the input.
    pub fn new(d: usize, matrix: ComplexMatrix, tol: f64) -> Result<Self> {
        check_dimension(d)?;
        if !matrix.is_square() {
            return Err(Error::NotSquare {
                rows: matrix.rows(),
                cols: matrix.cols(),
            });
        }
        if matrix.rows() != 2 * d {
            return Err(Error::DimensionMismatch {
                expected: 2 * d,
                found: matrix.rows(),
            });
        }
        let deviation = matrix.hermitian_deviation();
        if deviation > tol {
            return Err(Error::NotHermitian { deviation });
        }
        let n = 2 * d;
        let herm =
            ComplexMatrix::from_fn(n, n, |r, c| (matrix[(r, c)] + matrix[(c, r)].conj()) * 0.5);
        let trace = herm.trace().re;
        if (trace - 1.0).abs() > tol {
            return Err(Error::TraceNotUnit { trace });
        }
        let eig = hermitian_eig(&herm, f64::INFINITY)?;
        let min = eig.eigenvalues[n - 1];
        if min < -tol {
            return Err(Error::NotPsd {
                min_eigenvalue: min,
            });
        }
        Ok(Self { d, matrix: herm })
    }

    /// `sum_k p_k psi_k psi_k^dagger`.
    pub fn from_ensemble(weights: &Weights, states: &[PureState]) -> Result<Self> {
        let d = states
            .first()
            .map(|s| s.d)
            .ok_or(Error::BadRank { rank: 0, max: 0 })?;
        if weights.0.len() != states.len() {
            return Err(Error::DimensionMismatch {
                expected: states.len(),
                found: weights.0.len(),
            });
        }
        let mut m = ComplexMatrix::zeros(2 * d, 2 * d);
        for (p, s) in weights.0.iter().zip(states) {
            if s.d != d {
                return Err(Error::DimensionMismatch {
                    expected: d,
                    found: s.d,
                });
            }
            m = &m + &ComplexMatrix::outer(&s.coeffs, &s.coeffs).scale(Complex64::new(*p, 0.0));
        }
        Self::new(d, m, crate::DEFAULT_TOL)
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// Full dimension `2d`.
    pub fn dim(&self) -> usize {
        2 * self.d
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.matrix
    }

    /// Number of eigenvalues above `tol`.
    pub fn rank(&self, tol: f64) -> usize {
        hermitian_eig(&self.matrix, f64::INFINITY)
            .map(|e| e.eigenvalues.iter().filter(|&&x| x > tol).count())
            .unwrap_or(0)
    }

    /// Same state with the qudit space enlarged to `d_new` levels; the added
    /// levels are unpopulated.
    pub fn embed(&self, d_new: usize) -> Result<Self> {
        if d_new < self.d {
            return Err(Error::DimensionMismatch {
                expected: self.d,
                found: d_new,
            });
        }
        let (d, n) = (self.d, 2 * d_new);
        let map = |k: usize| (k / d) * d_new + k % d;
        let mut m = ComplexMatrix::zeros(n, n);
        for r in 0..2 * d {
            for c in 0..2 * d {
                m[(map(r), map(c))] = self.matrix[(r, c)];
            }
        }
        Ok(Self {
            d: d_new,
            matrix: m,
        })
    }

    /// `(U_A (x) U_B) rho (U_A (x) U_B)^dagger`.
    pub fn apply_local(&self, ua: &ComplexMatrix, ub: &ComplexMatrix) -> Result<Self> {
        if ua.rows() != 2 || !ua.is_square() {
            return Err(Error::DimensionMismatch {
                expected: 2,
                found: ua.rows(),
            });
        }
        if ub.rows() != self.d || !ub.is_square() {
            return Err(Error::DimensionMismatch {
                expected: self.d,
                found: ub.rows(),
            });
        }
        let u = ua.kron(ub);
        let m = &(&u * &self.matrix) * &u.adjoint();
        Self::new(self.d, m, 1e-8)
    }
}

/// Two-qubit Werner state `p |psi-><psi-| + (1 - p) I/4`.
pub fn werner(p: f64) -> Result<DensityMatrix> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::OutOfRange { value: p });
    }
    let h = core::f64::consts::FRAC_1_SQRT_2;
    let singlet = [0.0, h, -h, 0.0].map(|x| Complex64::new(x, 0.0));
    let mixed = ComplexMatrix::identity(4).scale(Complex64::new((1.0 - p) / 4.0, 0.0));
    let m = &ComplexMatrix::outer(&singlet, &singlet).scale(Complex64::new(p, 0.0)) + &mixed;
    DensityMatrix::new(2, m, crate::DEFAULT_TOL)
}
