//! Frozen reference values. The mixed-state spectra were computed independently
//! at 40 significant digits from the eigenvalues of `rho^1/2 S rho* S rho^1/2`.

// Oracle digits are kept as printed by the reference computation.
#![allow(clippy::excessive_precision)]

use eofb_core::bounds::{cdb_bound, channel_lambdas, wootters_concurrence, wootters_eof, Mode};
use eofb_core::linalg::ComplexMatrix;
use eofb_core::smatrix::s_channels;
use eofb_core::states::{epsilon, werner, DensityMatrix, PureState};
use eofb_core::Complex64;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn outer(v: &[Complex64]) -> ComplexMatrix {
    ComplexMatrix::outer(v, v)
}

fn scaled(m: &ComplexMatrix, s: f64) -> ComplexMatrix {
    m.scale(c(s, 0.0))
}

fn state(d: usize, m: ComplexMatrix) -> DensityMatrix {
    DensityMatrix::new(d, m, 1e-12).unwrap()
}

fn basis(n: usize, entries: &[(usize, Complex64)]) -> Vec<Complex64> {
    let mut v = vec![c(0.0, 0.0); n];
    let norm = entries
        .iter()
        .map(|(_, z)| z.norm_sqr())
        .sum::<f64>()
        .sqrt();
    for &(k, z) in entries {
        v[k] = z / norm;
    }
    v
}

fn integer_mix() -> ComplexMatrix {
    let g = ComplexMatrix::from_real_rows(&[
        &[2.0, 1.0, 0.0, 0.0, 1.0, 0.0],
        &[0.0, 1.0, 1.0, 0.0, 0.0, 2.0],
        &[1.0, 0.0, 3.0, 1.0, 0.0, 0.0],
        &[0.0, 0.0, 1.0, 2.0, 1.0, 1.0],
        &[1.0, 1.0, 0.0, 0.0, 2.0, 0.0],
        &[0.0, 2.0, 0.0, 1.0, 0.0, 1.0],
    ]);
    let gg = &g * &g.transpose();
    let tr = gg.trace().re;
    scaled(&gg, 1.0 / tr)
}

fn assert_spectra(rho: &DensityMatrix, expected: &[[f64; 4]], c_ij: &[f64], c_db: f64, eof: f64) {
    let rep = cdb_bound(rho, 1e-9).unwrap();
    for ((sp, want), &cw) in rep.spectra.iter().zip(expected).zip(c_ij) {
        for (got, w) in sp.lambdas.iter().zip(want) {
            assert!((got - w).abs() < 1e-12, "{:?}: {got} vs {w}", sp.channel);
        }
        assert!(sp.lambdas[4..].iter().all(|&l| l < 1e-12));
        assert!((sp.bound() - cw).abs() < 1e-12);
    }
    assert!((rep.c_db - c_db).abs() < 1e-12, "{} vs {c_db}", rep.c_db);
    assert!(
        (rep.eof_lower - eof).abs() < 1e-12,
        "{} vs {eof}",
        rep.eof_lower
    );
}

#[test]
fn epsilon_reference_values() {
    for (x, want) in [
        (0.3, 0.1581329365602070),
        (0.5, 0.3545789026652699),
        (0.6, 0.4689955935892812),
        (0.7, 0.5918574071706771),
    ] {
        assert!((epsilon(x).unwrap() - want).abs() < 1e-14, "eps({x})");
    }
    assert_eq!(epsilon(0.0).unwrap(), 0.0);
    assert!((epsilon(1.0).unwrap() - 1.0).abs() < 1e-15);
    assert!(epsilon(1.1).is_err());
}

#[test]
fn werner_family() {
    for k in 0..=5 {
        let p = 0.2 * k as f64;
        let want = ((3.0 * p - 1.0) / 2.0).max(0.0);
        let rho = werner(p).unwrap();
        assert!(
            (wootters_concurrence(&rho).unwrap() - want).abs() < 1e-10,
            "p = {p}"
        );
        let rep = cdb_bound(&rho, 1e-9).unwrap();
        assert_eq!(rep.mode, Mode::ExactTwoQubit);
        assert!((rep.c_db - want).abs() < 1e-10);
    }
    let rho = werner(0.8).unwrap();
    assert!((wootters_eof(&rho).unwrap() - 0.5918574071706771).abs() < 1e-10);
    assert_spectra(
        &rho,
        &[[0.85, 0.05, 0.05, 0.05]],
        &[0.7],
        0.7,
        0.5918574071706771,
    );
    assert!(werner(1.5).is_err());
}

#[test]
fn maximally_mixed_qutrit() {
    let rho = state(3, scaled(&ComplexMatrix::identity(6), 1.0 / 6.0));
    let sixth = 1.0 / 6.0;
    assert_spectra(&rho, &[[sixth; 4]; 3], &[0.0; 3], 0.0, 0.0);
    let sp = channel_lambdas(&rho, &s_channels(3)[0], 1e-9).unwrap();
    assert_eq!(sp.lambdas[4..], [0.0, 0.0]);
}

#[test]
fn noisy_maximally_entangled_qutrit() {
    let psi = basis(6, &[(0, c(1.0, 0.0)), (5, c(1.0, 0.0))]);
    let m = &scaled(&outer(&psi), 0.8) + &scaled(&ComplexMatrix::identity(6), 1.0 / 30.0);
    let side = [
        0.12018504251546631,
        0.12018504251546631,
        1.0 / 30.0,
        1.0 / 30.0,
    ];
    let third = 1.0 / 30.0;
    assert_spectra(
        &state(3, m),
        &[side, [0.8333333333333333, third, third, third], side],
        &[0.0, 0.7333333333333333, 0.0],
        0.7333333333333333,
        0.6344659073585354,
    );
}

#[test]
fn two_channel_mixture() {
    let p1 = basis(6, &[(0, c(1.0, 0.0)), (4, c(1.0, 0.0))]);
    let p2 = basis(6, &[(1, c(1.0, 0.0)), (5, c(0.0, 1.0))]);
    let m = &scaled(&outer(&p1), 0.6) + &scaled(&outer(&p2), 0.4);
    let r = 0.24494897427831781;
    assert_spectra(
        &state(3, m),
        &[[0.6, 0.0, 0.0, 0.0], [r, r, 0.0, 0.0], [0.4, 0.0, 0.0, 0.0]],
        &[0.6, 0.0, 0.4],
        0.7211102550927979,
        0.6187514403653381,
    );
}

#[test]
fn full_rank_integer_state() {
    assert_spectra(
        &state(3, integer_mix()),
        &[
            [
                0.25517444964755574,
                0.21913966716140172,
                0.081044324943739526,
                0.021841012191798304,
            ],
            [
                0.31477116190367986,
                0.18111372694911183,
                0.085838184759322724,
                0.076638476856747901,
            ],
            [
                0.22262717216537747,
                0.20205896374173878,
                0.16405132969550075,
                0.041762395261996585,
            ],
        ],
        &[0.0; 3],
        0.0,
        0.0,
    );
}

#[test]
fn generic_entangled_qutrit_mixture() {
    let pe = basis(
        6,
        &[
            (0, c(2.0, 0.0)),
            (2, c(1.0, 0.0)),
            (4, c(1.0, 0.0)),
            (5, c(0.0, 1.0)),
        ],
    );
    let m = &scaled(&outer(&pe), 0.7) + &scaled(&integer_mix(), 0.3);
    assert_spectra(
        &state(3, m),
        &[
            [
                0.48659333049547757,
                0.068460122719478171,
                0.024331436878935174,
                0.013893216083506006,
            ],
            [
                0.44410784024450444,
                0.094293928300827747,
                0.045285610938348398,
                0.024527636759016291,
            ],
            [
                0.27976233437890277,
                0.070693001132941993,
                0.051069768671866328,
                0.023579355590396172,
            ],
        ],
        &[
            0.37990855481355822,
            0.28000066424631201,
            0.13442020898369828,
        ],
        0.4907134342792374,
        0.34443546555880143,
    );
}

#[test]
fn pure_states_by_hand() {
    let h = std::f64::consts::FRAC_1_SQRT_2;
    // (|0>|0> + |1>|2>)/sqrt2 lives entirely in channel (1,3)
    let psi = PureState::new(3, basis(6, &[(0, c(1.0, 0.0)), (5, c(1.0, 0.0))])).unwrap();
    let rep = cdb_bound(&psi.density(), 1e-9).unwrap();
    assert_eq!(rep.mode, Mode::LowerBound);
    assert!((rep.c_ij[1] - 1.0).abs() < 1e-14 && rep.c_ij[0] < 1e-14 && rep.c_ij[2] < 1e-14);
    assert!((rep.eof_lower - 1.0).abs() < 1e-12);

    let product = PureState::product(
        [c(h, 0.0), c(0.0, h)],
        &basis(3, &[(0, c(1.0, 0.0)), (2, c(2.0, 1.0))]),
    )
    .unwrap();
    assert!(cdb_bound(&product.density(), 1e-9).unwrap().c_db < 1e-14);

    let bell = PureState::new(2, vec![c(h, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(h, 0.0)]).unwrap();
    let embedded = bell.density().embed(3).unwrap();
    let rep = cdb_bound(&embedded, 1e-9).unwrap();
    assert!((rep.c_db - 1.0).abs() < 1e-14);
    assert!((rep.c_ij[0] - 1.0).abs() < 1e-14);
}
