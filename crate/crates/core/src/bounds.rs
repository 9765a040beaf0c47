//! Channel spectra, Wootters' two-qubit concurrence and the qubit-qudit lower
//! bound `C_db`.
//!
//! For a channel `S` the spectrum `l1 >= l2 >= ... >= 0` consists of the square roots of
//! the eigenvalues of `rho^1/2 S rho* S rho^1/2`. They are computed here as the
//! singular values of the complex symmetric matrix `W^T S W`, where
//! `rho = W W^dagger` is the eigen factorization of `rho`; that matrix has the
//! same spectrum without taking square roots of near-zero eigenvalues.

use alloc::vec::Vec;

use num_complex::Complex64;

use crate::decomposition::eigen_factor;
use crate::linalg::{eigenvalues_general, hermitian_eig, psd_sqrt, takagi, ComplexMatrix};
use crate::math::sqrt;
use crate::smatrix::{s_channels, s_ij, s_two_qubit, SMatrix};
use crate::states::{epsilon_clamped, DensityMatrix};
use crate::{Error, Result};

/// Spectrum of one channel.
#[derive(Debug, Clone, PartialEq)]
pub struct ChannelSpectrum {
    /// 1-based `(i, j)`.
    pub channel: (usize, usize),
    /// `2d` nonnegative values, descending.
    pub lambdas: Vec<f64>,
}

impl ChannelSpectrum {
    /// `max(0, l1 - l2 - l3 - l4)`.
    pub fn bound(&self) -> f64 {
        let l = |k: usize| self.lambdas.get(k).copied().unwrap_or(0.0);
        (l(0) - l(1) - l(2) - l(3)).max(0.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// `d = 2`: `c_db` is Wootters' exact concurrence.
    ExactTwoQubit,
    /// `d > 2`: `c_db` bounds the concurrence from below.
    LowerBound,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::ExactTwoQubit => "exact-two-qubit",
            Mode::LowerBound => "lower-bound",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport {
    pub d: usize,
    /// One spectrum per channel, lexicographic in `(i, j)`.
    pub spectra: Vec<ChannelSpectrum>,
    pub c_ij: Vec<f64>,
    /// `sqrt(sum c_ij^2)`.
    pub c_db: f64,
    /// `eps(c_db)` in bits.
    pub eof_lower: f64,
    pub mode: Mode,
    /// Wootters' concurrence from the two-qubit spin-flip matrix (`d = 2` only).
    pub concurrence: Option<f64>,
}

pub fn channel_lambdas(rho: &DensityMatrix, s: &SMatrix, tol: f64) -> Result<ChannelSpectrum> {
    if s.d() != rho.d() {
        return Err(Error::DimensionMismatch {
            expected: rho.d(),
            found: s.d(),
        });
    }
    let w = eigen_factor(rho)?.w;
    let m = &(&w.transpose() * s.matrix()) * &w;
    let lambdas = takagi(&m, tol)?.diagonal;
    Ok(ChannelSpectrum {
        channel: s.channel(),
        lambdas,
    })
}

/// `rho^1/2 S rho* S rho^1/2`.
pub fn hermitian_channel_matrix(
    rho: &DensityMatrix,
    s: &SMatrix,
    tol: f64,
) -> Result<ComplexMatrix> {
    let root = psd_sqrt(rho.matrix(), tol)?;
    let flipped = &(&(s.matrix() * &rho.matrix().conj()) * s.matrix()) * &root;
    Ok(&root * &flipped)
}

/// The same spectrum obtained three ways.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumCheck {
    /// Eigenvalues of `rho^1/2 S rho* S rho^1/2`, descending.
    pub hermitian: Vec<f64>,
    /// Eigenvalues of the non-Hermitian `rho S rho* S`, by descending real part.
    pub general: Vec<Complex64>,
    /// Squares of the channel lambdas.
    pub lambda_sq: Vec<f64>,
}

impl SpectrumCheck {
    /// Largest pairwise disagreement among the three routes.
    pub fn max_deviation(&self) -> f64 {
        self.hermitian
            .iter()
            .zip(&self.general)
            .zip(&self.lambda_sq)
            .map(|((h, g), l)| (h - g.re).abs().max(g.im.abs()).max((h - l).abs()))
            .fold(0.0, f64::max)
    }
}

pub fn spectrum_cross_check(rho: &DensityMatrix, s: &SMatrix, tol: f64) -> Result<SpectrumCheck> {
    let hermitian = hermitian_eig(&hermitian_channel_matrix(rho, s, tol)?, 1e-8)?.eigenvalues;
    let product = &(&(rho.matrix() * s.matrix()) * &rho.matrix().conj()) * s.matrix();
    let general = eigenvalues_general(&product)?;
    let lambda_sq = channel_lambdas(rho, s, tol)?
        .lambdas
        .iter()
        .map(|l| l * l)
        .collect();
    Ok(SpectrumCheck {
        hermitian,
        general,
        lambda_sq,
    })
}

/// Wootters' concurrence `max(0, l1 - l2 - l3 - l4)` of a two-qubit state.
pub fn wootters_concurrence(rho: &DensityMatrix) -> Result<f64> {
    if rho.d() != 2 {
        return Err(Error::WrongDimension { d: rho.d() });
    }
    Ok(channel_lambdas(rho, &s_two_qubit(), crate::DEFAULT_TOL)?.bound())
}

/// Entanglement of formation of a two-qubit state, in bits.
pub fn wootters_eof(rho: &DensityMatrix) -> Result<f64> {
    Ok(epsilon_clamped(wootters_concurrence(rho)?))
}

/// `C_ij(rho)` for the 1-based channel `(i, j)`.
pub fn channel_bound(rho: &DensityMatrix, i: usize, j: usize) -> Result<f64> {
    let s = s_ij(rho.d(), i, j)?;
    Ok(channel_lambdas(rho, &s, crate::DEFAULT_TOL)?.bound())
}

/// All channel bounds, their root-sum-square and `eps` of it.
pub fn cdb_bound(rho: &DensityMatrix, tol: f64) -> Result<BoundReport> {
    let spectra = s_channels(rho.d())
        .iter()
        .map(|s| channel_lambdas(rho, s, tol))
        .collect::<Result<Vec<_>>>()?;
    let c_ij: Vec<f64> = spectra.iter().map(ChannelSpectrum::bound).collect();
    let c_db = aggregate_lower(&c_ij)?;
    let (mode, concurrence) = if rho.d() == 2 {
        (Mode::ExactTwoQubit, Some(wootters_concurrence(rho)?))
    } else {
        (Mode::LowerBound, None)
    };
    Ok(BoundReport {
        d: rho.d(),
        spectra,
        c_ij,
        c_db,
        eof_lower: epsilon_clamped(c_db),
        mode,
        concurrence,
    })
}

/// Minimum of `sum_a |(x_a, y_a, z_a, ...)|` over nonnegative splits with fixed
/// totals `(X, Y, Z, ...)`: the Euclidean norm of the totals.
pub fn aggregate_lower(totals: &[f64]) -> Result<f64> {
    if let Some((index, &value)) = totals
        .iter()
        .enumerate()
        .find(|(_, &x)| x.is_nan() || x < 0.0)
    {
        return Err(Error::NegativeInput { index, value });
    }
    Ok(sqrt(totals.iter().map(|x| x * x).sum()))
}
