use alloc::vec::Vec;

use num_complex::Complex64;

use super::{hermitian_eig, ComplexMatrix};
use crate::math::sqrt;
use crate::{Error, Result};

/// Takagi (Autonne) factorization `m = U^T diag(diagonal) U` of a complex
/// symmetric matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct TakagiFactorization {
    /// Singular values of `m`, descending.
    pub diagonal: Vec<f64>,
    /// Unitary `U`; row `k` pairs with `diagonal[k]`.
    pub unitary: ComplexMatrix,
}

impl TakagiFactorization {
    pub fn reconstruct(&self) -> ComplexMatrix {
        let u = &self.unitary;
        let scaled =
            ComplexMatrix::from_fn(u.rows(), u.cols(), |r, c| u[(r, c)] * self.diagonal[r]);
        &u.transpose() * &scaled
    }
}

/// Takagi factorization of a complex symmetric (not Hermitian) matrix.
///
/// With `m = A + iB`, the real symmetric matrix `[[A, B], [B, -A]]` has
/// eigenvalues `+-sigma_k`, and every unit eigenvector `[x; y]` for `+sigma_k`
/// gives a Takagi vector `v = x + iy` with `m conj(v) = sigma_k v`. Eigenvectors of
/// the positive half are mutually orthogonal in the complex sense, so repeated
/// singular values need no special handling. The null space is completed by
/// Gram-Schmidt.
pub fn takagi(m: &ComplexMatrix, tol: f64) -> Result<TakagiFactorization> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let deviation = m.symmetric_deviation();
    if deviation > tol {
        return Err(Error::NotSymmetric { deviation });
    }
    let n = m.rows();
    let sym = ComplexMatrix::from_fn(n, n, |r, c| (m[(r, c)] + m[(c, r)]) * 0.5);
    let embedded = ComplexMatrix::from_fn(2 * n, 2 * n, |r, c| {
        let z = sym[(r % n, c % n)];
        let v = match (r < n, c < n) {
            (true, true) => z.re,
            (true, false) | (false, true) => z.im,
            (false, false) => -z.re,
        };
        Complex64::new(v, 0.0)
    });
    let eig = hermitian_eig(&embedded, f64::INFINITY)?;
    let sigma_max = eig.eigenvalues.first().copied().unwrap_or(0.0).max(0.0);
    let threshold = 8.0 * (n.max(1) as f64) * f64::EPSILON * sigma_max;

    let mut vectors: Vec<Vec<Complex64>> = Vec::with_capacity(n);
    let mut diagonal = Vec::with_capacity(n);
    for k in 0..n {
        let s = eig.eigenvalues[k];
        if s <= threshold {
            break;
        }
        let v: Vec<Complex64> = (0..n)
            .map(|r| Complex64::new(eig.eigenvectors[(r, k)].re, eig.eigenvectors[(r + n, k)].re))
            .collect();
        if let Some(v) = orthonormalize(&vectors, v) {
            vectors.push(v);
            diagonal.push(s);
        }
    }
    // Complete the null space with the unit vector furthest from the current
    // span. Its remainder has norm at least 1/sqrt(n) while the span is short,
    // so this cannot stall even when noise-level pairs +-sigma were mixed and
    // rejected above.
    while vectors.len() < n {
        let best = (0..n)
            .map(|e| {
                let mut unit = alloc::vec![Complex64::new(0.0, 0.0); n];
                unit[e] = Complex64::new(1.0, 0.0);
                project_out(&vectors, unit)
            })
            .max_by(|a, b| norm(a).total_cmp(&norm(b)));
        match best {
            Some(v) if norm(&v) > 0.25 / sqrt(n as f64) => {
                let len = norm(&v);
                vectors.push(v.into_iter().map(|z| z / len).collect());
                diagonal.push(0.0);
            }
            _ => break,
        }
    }
    if vectors.len() != n {
        return Err(Error::TakagiFailure {
            residual: f64::INFINITY,
        });
    }
    let unitary = ComplexMatrix::from_fn(n, n, |r, c| vectors[r][c]);
    let fact = TakagiFactorization { diagonal, unitary };
    let residual = fact.reconstruct().max_abs_diff(&sym);
    if residual > 1e-8 * sigma_max.max(f64::MIN_POSITIVE) && residual > 1e-14 {
        return Err(Error::TakagiFailure { residual });
    }
    Ok(fact)
}

/// Normalized remainder of `v` after projecting out `basis`; `None` if `v` is (numerically) in the
/// span of `basis`.
fn orthonormalize(basis: &[Vec<Complex64>], v: Vec<Complex64>) -> Option<Vec<Complex64>> {
    let start = norm(&v);
    let mut v = project_out(basis, v);
    let len = norm(&v);
    if len <= 0.5 * start || len == 0.0 {
        return None;
    }
    for z in v.iter_mut() {
        *z /= len;
    }
    Some(v)
}

/// `v` minus its projection onto the orthonormal `basis`, two MGS passes.
fn project_out(basis: &[Vec<Complex64>], mut v: Vec<Complex64>) -> Vec<Complex64> {
    for _ in 0..2 {
        for b in basis {
            let dot: Complex64 = b.iter().zip(&v).map(|(x, y)| x.conj() * y).sum();
            for (vi, bi) in v.iter_mut().zip(b) {
                *vi -= dot * bi;
            }
        }
    }
    v
}

fn norm(v: &[Complex64]) -> f64 {
    sqrt(v.iter().map(|z| z.norm_sqr()).sum())
}
