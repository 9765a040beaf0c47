//! Indicator matrices `S^ij` for the qubit-qudit concurrence channels.
//!
//! `S^ij` (1 <= i < j <= d) is the symmetric `2d x 2d` matrix whose only nonzero
//! entries are `S[i, j+d] = S[j+d, i] = +1` and `S[j, i+d] = S[i+d, j] = -1`
//! (1-based), so that `psi^T S^ij psi = 2 (a_1i a_2j - a_1j a_2i)`.

use alloc::vec::Vec;

use num_complex::Complex64;

use crate::linalg::ComplexMatrix;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct SMatrix {
    d: usize,
    i: usize,
    j: usize,
    sign: f64,
    matrix: ComplexMatrix,
}

impl SMatrix {
    pub fn d(&self) -> usize {
        self.d
    }

    /// 1-based channel indices `(i, j)`.
    pub fn channel(&self) -> (usize, usize) {
        (self.i, self.j)
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    /// `psi^T S psi` for a length-`2d` coefficient vector, without forming the
    /// matrix product. The vector need not be normalized.
    pub fn bilinear(&self, psi: &[Complex64]) -> Complex64 {
        let (d, i, j) = (self.d, self.i - 1, self.j - 1);
        (psi[i] * psi[d + j] - psi[j] * psi[d + i]) * (2.0 * self.sign)
    }

    /// The symmetric form `a^T S b`; `cross(x, x) == bilinear(x)`.
    pub fn cross(&self, a: &[Complex64], b: &[Complex64]) -> Complex64 {
        let (d, i, j) = (self.d, self.i - 1, self.j - 1);
        (a[i] * b[d + j] + a[d + j] * b[i] - a[j] * b[d + i] - a[d + i] * b[j]) * self.sign
    }
}

fn build(d: usize, i: usize, j: usize, sign: f64) -> SMatrix {
    let mut m = ComplexMatrix::zeros(2 * d, 2 * d);
    let (a, b) = (i - 1, j - 1);
    m[(a, b + d)] = Complex64::new(sign, 0.0);
    m[(b + d, a)] = Complex64::new(sign, 0.0);
    m[(b, a + d)] = Complex64::new(-sign, 0.0);
    m[(a + d, b)] = Complex64::new(-sign, 0.0);
    SMatrix {
        d,
        i,
        j,
        sign,
        matrix: m,
    }
}

/// Wootters' two-qubit spin-flip matrix: `-1` at (1,4),(4,1) and `+1` at
/// (2,3),(3,2). It is `-s_ij(2, 1, 2)`; the sign drops out of every `|psi^T S psi|`.
pub fn s_two_qubit() -> SMatrix {
    build(2, 1, 2, -1.0)
}

/// The indicator matrix for channel `(i, j)`, 1-based.
pub fn s_ij(d: usize, i: usize, j: usize) -> Result<SMatrix> {
    if d < 2 || i < 1 || j <= i || j > d {
        return Err(Error::BadIndices { d, i, j });
    }
    Ok(build(d, i, j, 1.0))
}

/// All `d(d-1)/2` channels in lexicographic `(i, j)` order.
pub fn s_channels(d: usize) -> Vec<SMatrix> {
    (1..=d)
        .flat_map(|i| (i + 1..=d).map(move |j| build(d, i, j, 1.0)))
        .collect()
}
