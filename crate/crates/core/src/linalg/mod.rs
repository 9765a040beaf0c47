//! Dense complex linear algebra for the small matrices in this crate
//! (dimension up to a few dozen).

mod eig;
mod matrix;
mod takagi;

use alloc::vec::Vec;

use num_complex::Complex64;

pub use eig::{eigenvalues_general, hermitian_eig, psd_sqrt, HermitianEig};
pub use matrix::ComplexMatrix;
pub use takagi::{takagi, TakagiFactorization};

use crate::Result;

/// `max |m m^dagger - I|`: zero exactly when the rows of `m` are orthonormal.
pub fn row_orthonormality_deviation(m: &ComplexMatrix) -> f64 {
    (m * &m.adjoint()).max_abs_diff(&ComplexMatrix::identity(m.rows()))
}

/// Unitarity check returning the verdict and `max |m m^dagger - I|`.
/// Non-square input is never unitary.
pub fn is_unitary(m: &ComplexMatrix, tol: f64) -> (bool, f64) {
    if !m.is_square() {
        return (false, f64::INFINITY);
    }
    let dev = row_orthonormality_deviation(m);
    (dev <= tol, dev)
}

/// Singular values (descending) from the Hermitian embedding
/// `[[0, m], [m^dagger, 0]]`, whose eigenvalues are `+-sigma` padded with zeros.
pub fn singular_values(m: &ComplexMatrix) -> Result<Vec<f64>> {
    let (r, c) = (m.rows(), m.cols());
    let zero = Complex64::new(0.0, 0.0);
    let h = ComplexMatrix::from_fn(r + c, r + c, |i, j| match (i < r, j < r) {
        (true, false) => m[(i, j - r)],
        (false, true) => m[(j, i - r)].conj(),
        _ => zero,
    });
    let eig = hermitian_eig(&h, f64::INFINITY)?;
    Ok(eig.eigenvalues[..r.min(c)]
        .iter()
        .map(|&s| s.max(0.0))
        .collect())
}
