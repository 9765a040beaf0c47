//! Pure-state decompositions `rho = Phi Phi^dagger` and the closed-form
//! construction of a decomposition attaining a single channel bound.
//!
//! A decomposition is stored as the `2d x N` matrix `Phi` whose columns are the
//! subnormalized states `sqrt(p_a) psi_a`. Every decomposition arises as
//! `Phi = W R` with `W` the eigen factor of `rho` and `R` a matrix with
//! orthonormal rows on the support of `rho`.

use alloc::vec::Vec;

use num_complex::Complex64;

use crate::linalg::{hermitian_eig, row_orthonormality_deviation, takagi, ComplexMatrix};
use crate::math::{acos, atan2, clamp_unit, sqrt};
use crate::smatrix::SMatrix;
use crate::states::{epsilon_clamped, DensityMatrix, PureState};
use crate::{Error, Result};

/// Relative cutoff below which an eigenvalue of `rho` is treated as zero.
pub const SUPPORT_CUTOFF: f64 = 1e-12;

/// Tolerance on the row orthonormality of a right matrix.
pub const RIGHT_TOL: f64 = 1e-9;

/// `rho = W W^dagger` with `W = U diag(sqrt(mu))`.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenFactor {
    /// Eigenvalues of `rho`, descending, with those under the cutoff set to zero.
    pub mu: Vec<f64>,
    /// Columns `sqrt(mu_k) u_k`; zero outside the support.
    pub w: ComplexMatrix,
    pub rank: usize,
}

pub fn eigen_factor(rho: &DensityMatrix) -> Result<EigenFactor> {
    let eig = hermitian_eig(rho.matrix(), f64::INFINITY)?;
    let n = rho.dim();
    let top = eig.eigenvalues[0].max(0.0);
    let mu: Vec<f64> = eig
        .eigenvalues
        .iter()
        .map(|&m| if m > SUPPORT_CUTOFF * top { m } else { 0.0 })
        .collect();
    let w = ComplexMatrix::from_fn(n, n, |r, c| eig.eigenvectors[(r, c)] * sqrt(mu[c]));
    let rank = mu.iter().filter(|&&m| m > 0.0).count();
    Ok(EigenFactor { mu, w, rank })
}

#[derive(Debug, Clone, PartialEq)]
pub struct Decomposition {
    d: usize,
    phi: ComplexMatrix,
}

impl Decomposition {
    pub fn from_phi(d: usize, phi: ComplexMatrix) -> Result<Self> {
        if phi.rows() != 2 * d {
            return Err(Error::DimensionMismatch {
                expected: 2 * d,
                found: phi.rows(),
            });
        }
        Ok(Self { d, phi })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn phi(&self) -> &ComplexMatrix {
        &self.phi
    }

    pub fn into_phi(self) -> ComplexMatrix {
        self.phi
    }

    pub fn n_columns(&self) -> usize {
        self.phi.cols()
    }

    /// `p_a = |phi_a|^2`.
    pub fn weights(&self) -> Vec<f64> {
        (0..self.phi.cols())
            .map(|c| {
                (0..self.phi.rows())
                    .map(|r| self.phi[(r, c)].norm_sqr())
                    .sum()
            })
            .collect()
    }

    /// `(p_a, psi_a)`; the state is `None` for a zero column.
    pub fn states(&self) -> Vec<(f64, Option<PureState>)> {
        self.weights()
            .into_iter()
            .enumerate()
            .map(|(c, p)| {
                let state = if p > 0.0 {
                    PureState::normalized(self.d, self.phi.column(c)).ok()
                } else {
                    None
                };
                (p, state)
            })
            .collect()
    }

    /// `Phi Phi^dagger`.
    pub fn density(&self) -> ComplexMatrix {
        &self.phi * &self.phi.adjoint()
    }

    /// `max |Phi Phi^dagger - rho|`.
    pub fn residual(&self, rho: &DensityMatrix) -> f64 {
        if rho.d() != self.d {
            return f64::INFINITY;
        }
        self.density().max_abs_diff(rho.matrix())
    }
}

/// The right factor `R` in `Phi = W R`.
#[derive(Debug, Clone, PartialEq)]
pub struct RightMatrix(ComplexMatrix);

impl RightMatrix {
    pub fn new(r: ComplexMatrix) -> Self {
        Self(r)
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.0
    }
}

/// The eigen decomposition itself: `Phi = W`.
pub fn eigen_decomposition(rho: &DensityMatrix) -> Result<Decomposition> {
    Decomposition::from_phi(rho.d(), eigen_factor(rho)?.w)
}

/// `Phi = W R`. Rows of `R` paired with nonzero columns of `W` must be
/// orthonormal; the remaining rows are ignored.
pub fn apply_right(w: &Decomposition, r: &RightMatrix) -> Result<Decomposition> {
    let r = r.matrix();
    if r.rows() != w.n_columns() {
        return Err(Error::BadShape {
            rows: r.rows(),
            cols: r.cols(),
        });
    }
    let support: Vec<usize> = w
        .weights()
        .iter()
        .enumerate()
        .filter(|(_, &p)| p > 0.0)
        .map(|(k, _)| k)
        .collect();
    let sub = ComplexMatrix::from_fn(support.len(), r.cols(), |k, c| r[(support[k], c)]);
    let deviation = row_orthonormality_deviation(&sub);
    if deviation > RIGHT_TOL {
        return Err(Error::BadRightMatrix { deviation });
    }
    Decomposition::from_phi(w.d(), w.phi() * r)
}

/// Per-column quantities entering the averages.
#[derive(Debug, Clone, PartialEq)]
pub struct ColumnStats {
    /// `phi^T S phi` for each channel.
    pub values: Vec<Complex64>,
    pub weight: f64,
    /// `sqrt(sum |values|^2) = p C(psi)`.
    pub concurrence: f64,
    /// `p eps(C(psi))`.
    pub entanglement: f64,
}

pub fn column_stats(col: &[Complex64], channels: &[SMatrix]) -> ColumnStats {
    let values: Vec<Complex64> = channels.iter().map(|s| s.bilinear(col)).collect();
    let weight: f64 = col.iter().map(|z| z.norm_sqr()).sum();
    let concurrence = sqrt(values.iter().map(|z| z.norm_sqr()).sum());
    let entanglement = if weight > 0.0 {
        weight * epsilon_clamped(concurrence / weight)
    } else {
        0.0
    };
    ColumnStats {
        values,
        weight,
        concurrence,
        entanglement,
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Averages {
    /// `sum_a |phi_a^T S^ij phi_a|`, one entry per channel.
    pub per_channel: Vec<f64>,
    /// `sum_a p_a C(psi_a)`.
    pub concurrence: f64,
    /// `sum_a p_a eps(C(psi_a))`.
    pub entanglement: f64,
}

pub fn average_concurrence(dec: &Decomposition, channels: &[SMatrix]) -> Result<Averages> {
    if let Some(s) = channels.iter().find(|s| s.d() != dec.d()) {
        return Err(Error::DimensionMismatch {
            expected: dec.d(),
            found: s.d(),
        });
    }
    let mut out = Averages {
        per_channel: alloc::vec![0.0; channels.len()],
        concurrence: 0.0,
        entanglement: 0.0,
    };
    for c in 0..dec.n_columns() {
        let st = column_stats(&dec.phi().column(c), channels);
        for (acc, v) in out.per_channel.iter_mut().zip(&st.values) {
            *acc += v.norm();
        }
        out.concurrence += st.concurrence;
        out.entanglement += st.entanglement;
    }
    Ok(out)
}

const SIGNS: [[f64; 4]; 4] = [
    [1.0, 1.0, 1.0, 1.0],
    [1.0, 1.0, -1.0, -1.0],
    [1.0, -1.0, 1.0, -1.0],
    [1.0, -1.0, -1.0, 1.0],
];

fn check_size(n: usize) -> Result<()> {
    if n < 4 || !n.is_multiple_of(2) {
        return Err(Error::BadSize { n });
    }
    Ok(())
}

/// Unitary whose first four rows hold `(1/2)[1; i; i; i]` times a sign pattern,
/// padded with the identity. Every column gives `sum_m l_m Q_ma^2 = (l1-l2-l3-l4)/4`.
pub fn q_greater(n: usize) -> Result<ComplexMatrix> {
    check_size(n)?;
    let row_phase = [
        Complex64::new(0.5, 0.0),
        Complex64::new(0.0, 0.5),
        Complex64::new(0.0, 0.5),
        Complex64::new(0.0, 0.5),
    ];
    Ok(pattern(n, row_phase))
}

/// Angles `(t2, t3, t4)` with `l1 + l2 e^{2i t2} + l3 e^{2i t3} + l4 e^{2i t4} = 0`.
///
/// Requires `l1 >= l2 >= l3 >= l4 >= 0` and `l1 <= l2 + l3 + l4`. The sum closes
/// as a quadrilateral whose diagonal `L = max(l3 - l4, l1 - l2)` is always
/// constructible from both pairs of sides.
pub fn solve_angles(l: [f64; 4]) -> Result<[f64; 3]> {
    let [l1, l2, l3, l4] = l;
    let excess = l1 - l2 - l3 - l4;
    if excess > 0.0 {
        return Err(Error::NotInRegime { excess });
    }
    if l2 <= 0.0 {
        return Ok([0.0; 3]);
    }
    let diag = (l3 - l4).max(l1 - l2);
    let beta = acos(clamp_unit(
        (diag * diag - l1 * l1 - l2 * l2) / (2.0 * l1 * l2),
    ));
    let c = -(Complex64::new(l1, 0.0) + Complex64::from_polar(l2, beta));
    let arg_c = atan2(c.im, c.re);
    let delta = if diag * l3 > 0.0 {
        acos(clamp_unit(
            (diag * diag + l3 * l3 - l4 * l4) / (2.0 * diag * l3),
        ))
    } else {
        0.0
    };
    let phi3 = arg_c + delta;
    let rest = c - Complex64::from_polar(l3, phi3);
    let phi4 = atan2(rest.im, rest.re);
    Ok([beta / 2.0, phi3 / 2.0, phi4 / 2.0])
}

/// Unitary whose first four rows hold `(1/2) e^{i t_m}` times a sign pattern,
/// padded with the identity; every column gives `sum_m l_m Q_ma^2 = 0`.
pub fn q_less(l: [f64; 4], n: usize) -> Result<ComplexMatrix> {
    check_size(n)?;
    let [t2, t3, t4] = solve_angles(l)?;
    let row_phase = [
        Complex64::new(0.5, 0.0),
        Complex64::from_polar(0.5, t2),
        Complex64::from_polar(0.5, t3),
        Complex64::from_polar(0.5, t4),
    ];
    Ok(pattern(n, row_phase))
}

fn pattern(n: usize, row_phase: [Complex64; 4]) -> ComplexMatrix {
    let mut q = ComplexMatrix::identity(n);
    for (m, phase) in row_phase.iter().enumerate() {
        for a in 0..4 {
            q[(m, a)] = phase * SIGNS[m][a];
        }
    }
    q
}

/// Spreads the columns of a square `q` over `n_cols` columns: column `a` of the
/// result is column `a mod k` of `q` divided by the square root of the number of
/// columns sharing it. Rows stay orthonormal and every per-column bilinear value
/// is split evenly.
pub fn split_columns(q: &ComplexMatrix, n_cols: usize) -> Result<ComplexMatrix> {
    let k = q.cols();
    if n_cols < k {
        return Err(Error::BadShape {
            rows: q.rows(),
            cols: n_cols,
        });
    }
    let group = |g: usize| (n_cols - g).div_ceil(k);
    Ok(ComplexMatrix::from_fn(q.rows(), n_cols, |r, a| {
        let g = a % k;
        q[(r, g)] / sqrt(group(g) as f64)
    }))
}

/// An `n`-member decomposition whose average `|phi^T S phi|` equals the channel
/// bound `max(0, l1 - l2 - l3 - l4)`.
pub fn optimal_channel_decomposition(
    rho: &DensityMatrix,
    s: &SMatrix,
    n: usize,
) -> Result<Decomposition> {
    if s.d() != rho.d() {
        return Err(Error::DimensionMismatch {
            expected: rho.d(),
            found: s.d(),
        });
    }
    let dim = rho.dim();
    if n < dim {
        return Err(Error::BadShape { rows: dim, cols: n });
    }
    let w = eigen_factor(rho)?.w;
    let m = &(&w.transpose() * s.matrix()) * &w;
    let tk = takagi(&m, crate::DEFAULT_TOL)?;
    let l = [
        tk.diagonal[0],
        tk.diagonal[1],
        tk.diagonal[2],
        tk.diagonal[3],
    ];
    let q = if l[0] - l[1] - l[2] - l[3] >= 0.0 {
        q_greater(dim)?
    } else {
        q_less(l, dim)?
    };
    let r = &tk.unitary.adjoint() * &split_columns(&q, n)?;
    apply_right(&Decomposition::from_phi(rho.d(), w)?, &RightMatrix::new(r))
}

/// `sum_a |phi_a^T S phi_a|` for one channel.
pub fn channel_sum(dec: &Decomposition, s: &SMatrix) -> f64 {
    (0..dec.n_columns())
        .map(|c| s.bilinear(&dec.phi().column(c)).norm())
        .sum()
}
