//! Seeded random states: Haar pure states, induced-measure density matrices
//! (`G G^dagger / Tr` with complex Ginibre `G`), and separable mixtures of random
//! product states with Dirichlet-uniform weights.
//!
//! Every generator owns a ChaCha8 stream seeded from an explicit `u64`, so
//! outputs are bit-identical across runs and platforms.

use alloc::vec::Vec;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Exp1, StandardNormal};

use super::{BipartitePure, DensityMatrix, PureState, Weights};
use crate::linalg::ComplexMatrix;
use crate::math::sqrt;
use crate::{Error, Result};

pub type SeededRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// SplitMix64 finalizer.
pub fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Seed for the `index`-th child stream of `seed`.
pub fn child_seed(seed: u64, index: u64) -> u64 {
    splitmix64(splitmix64(seed) ^ splitmix64(index.wrapping_add(0x6A09_E667_F3BC_C909)))
}

/// Standard complex Gaussian (`E|z|^2 = 1`).
pub fn complex_gaussian<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    Complex64::new(re, im) * core::f64::consts::FRAC_1_SQRT_2
}

pub fn gaussian_matrix_with<R: Rng + ?Sized>(
    rows: usize,
    cols: usize,
    rng: &mut R,
) -> ComplexMatrix {
    ComplexMatrix::from_fn(rows, cols, |_, _| complex_gaussian(rng))
}

pub fn gaussian_matrix(rows: usize, cols: usize, seed: u64) -> ComplexMatrix {
    gaussian_matrix_with(rows, cols, &mut rng(seed))
}

/// Haar-random unitary: Gram-Schmidt on a Ginibre matrix (positive `R` diagonal).
pub fn haar_unitary_with<R: Rng + ?Sized>(n: usize, rng: &mut R) -> ComplexMatrix {
    let g = gaussian_matrix_with(n, n, rng);
    let mut cols: Vec<Vec<Complex64>> = Vec::with_capacity(n);
    for c in 0..n {
        let mut v = g.column(c);
        for _ in 0..2 {
            for q in &cols {
                let dot: Complex64 = q.iter().zip(&v).map(|(a, b)| a.conj() * b).sum();
                for (x, y) in v.iter_mut().zip(q) {
                    *x -= dot * y;
                }
            }
        }
        let norm = sqrt(v.iter().map(|z| z.norm_sqr()).sum());
        cols.push(v.into_iter().map(|z| z / norm).collect());
    }
    ComplexMatrix::from_fn(n, n, |r, c| cols[c][r])
}

pub fn haar_unitary(n: usize, seed: u64) -> ComplexMatrix {
    haar_unitary_with(n, &mut rng(seed))
}

pub fn random_unit_vector_with<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Vec<Complex64> {
    let v: Vec<Complex64> = (0..n).map(|_| complex_gaussian(rng)).collect();
    let norm = sqrt(v.iter().map(|z| z.norm_sqr()).sum());
    v.into_iter().map(|z| z / norm).collect()
}

pub fn random_unit_vector(n: usize, seed: u64) -> Vec<Complex64> {
    random_unit_vector_with(n, &mut rng(seed))
}

/// Haar-uniform pure qubit-qudit state.
pub fn random_pure(d: usize, seed: u64) -> Result<PureState> {
    if d < 2 {
        return Err(Error::BadDimension { d });
    }
    PureState::new(d, random_unit_vector(2 * d, seed))
}

/// Haar-uniform pure state on a `da x db` system.
pub fn random_bipartite(da: usize, db: usize, seed: u64) -> Result<BipartitePure> {
    BipartitePure::new(da, db, random_unit_vector(da * db, seed))
}

/// `G G^dagger / Tr(G G^dagger)` with `G` a `2d x rank` complex Ginibre matrix.
pub fn random_density(d: usize, rank: usize, seed: u64) -> Result<DensityMatrix> {
    if d < 2 {
        return Err(Error::BadDimension { d });
    }
    if rank == 0 || rank > 2 * d {
        return Err(Error::BadRank { rank, max: 2 * d });
    }
    let g = gaussian_matrix(2 * d, rank, seed);
    let gg = &g * &g.adjoint();
    let tr = gg.trace().re;
    DensityMatrix::new(
        d,
        gg.scale(Complex64::new(1.0 / tr, 0.0)),
        crate::DEFAULT_TOL,
    )
}

/// Weights and product states of a random separable mixture.
pub fn random_separable_ensemble(
    d: usize,
    terms: usize,
    seed: u64,
) -> Result<(Weights, Vec<PureState>)> {
    if d < 2 {
        return Err(Error::BadDimension { d });
    }
    if terms == 0 {
        return Err(Error::BadRank {
            rank: 0,
            max: usize::MAX,
        });
    }
    let mut rng = rng(seed);
    let mut raw: Vec<f64> = (0..terms)
        .map(|_| rng.sample::<f64, _>(Exp1).max(f64::MIN_POSITIVE))
        .collect();
    let total: f64 = raw.iter().sum();
    for w in raw.iter_mut() {
        *w /= total;
    }
    let states = (0..terms)
        .map(|_| {
            let a = random_unit_vector_with(2, &mut rng);
            let b = random_unit_vector_with(d, &mut rng);
            PureState::product([a[0], a[1]], &b)
        })
        .collect::<Result<Vec<_>>>()?;
    // renormalize against rounding so the weights pass the 1e-12 sum check
    let sum: f64 = raw.iter().sum();
    let weights = Weights::new(raw.into_iter().map(|w| w / sum).collect())?;
    Ok((weights, states))
}

/// Convex mixture of `terms` random product states; separable by construction.
pub fn random_separable(d: usize, terms: usize, seed: u64) -> Result<DensityMatrix> {
    let (weights, states) = random_separable_ensemble(d, terms, seed)?;
    DensityMatrix::from_ensemble(&weights, &states)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::is_unitary;

    #[test]
    fn rank_one_density_is_pure() {
        let rho = random_density(3, 1, 4).unwrap();
        let sq = rho.matrix() * rho.matrix();
        assert!(sq.max_abs_diff(rho.matrix()) <= 1e-10);
    }

    #[test]
    fn pure_state_is_normalized() {
        let psi = random_pure(3, 8).unwrap();
        let n: f64 = psi.coeffs().iter().map(|z| z.norm_sqr()).sum();
        assert!((n - 1.0).abs() <= 1e-12);
    }

    #[test]
    fn deterministic_per_seed() {
        assert_eq!(
            random_density(3, 4, 77).unwrap(),
            random_density(3, 4, 77).unwrap()
        );
        assert_ne!(
            random_density(3, 4, 77).unwrap(),
            random_density(3, 4, 78).unwrap()
        );
        assert_eq!(
            random_separable(4, 5, 1).unwrap(),
            random_separable(4, 5, 1).unwrap()
        );
    }

    #[test]
    fn bad_rank_and_terms() {
        assert_eq!(
            random_density(3, 0, 1).unwrap_err(),
            Error::BadRank { rank: 0, max: 6 }
        );
        assert_eq!(
            random_density(3, 7, 1).unwrap_err(),
            Error::BadRank { rank: 7, max: 6 }
        );
        assert!(random_separable(3, 0, 1).is_err());
    }

    #[test]
    fn density_rank_matches_request() {
        for rank in 1..=6 {
            assert_eq!(
                random_density(3, rank, rank as u64).unwrap().rank(1e-10),
                rank
            );
        }
    }

    #[test]
    fn haar_is_unitary() {
        assert!(is_unitary(&haar_unitary(9, 3), 1e-12).0);
    }

    #[test]
    fn child_seeds_differ() {
        let s: Vec<u64> = (0..16).map(|i| child_seed(42, i)).collect();
        for i in 0..s.len() {
            for j in i + 1..s.len() {
                assert_ne!(s[i], s[j]);
            }
        }
    }
}
