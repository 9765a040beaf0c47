//! End-to-end acceptance suite. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any criterion fails.

use std::process::{Command, ExitCode};
use std::time::Instant;

use eofb::format::{to_json, MatrixFile};
use eofb::parallel::par_minimize_average;
use eofb::verify::verify_state;
use eofb_core::bounds::{
    aggregate_lower, cdb_bound, channel_lambdas, spectrum_cross_check, wootters_concurrence,
};
use eofb_core::decomposition::{average_concurrence, channel_sum, optimal_channel_decomposition};
use eofb_core::search::{minimize_average, Objective, SearchConfig};
use eofb_core::smatrix::{s_channels, s_two_qubit};
use eofb_core::states::random::{
    child_seed, random_bipartite, random_density, random_pure, random_separable, rng,
};
use eofb_core::states::{
    concurrence_minors, concurrence_pure, entropy_pure, epsilon, linear_entropy_identity_check,
    schmidt, werner, DensityMatrix,
};
use eofb_core::DEFAULT_TOL;
use rand::Rng;

type Outcome = Result<String, String>;

/// Largest spectrum disagreement seen by any suite, for criterion 8.
#[derive(Default)]
struct SpectrumLog {
    worst: f64,
    states: usize,
}

impl SpectrumLog {
    fn check(&mut self, rho: &DensityMatrix) -> Result<(), String> {
        for s in s_channels(rho.d()) {
            let dev = spectrum_cross_check(rho, &s, DEFAULT_TOL)
                .map_err(|e| e.to_string())?
                .max_deviation();
            self.worst = self.worst.max(dev);
        }
        self.states += 1;
        Ok(())
    }
}

fn fail_if(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Err(msg())
    } else {
        Ok(())
    }
}

fn e(err: impl std::fmt::Display) -> String {
    err.to_string()
}

fn wootters_exactness(log: &mut SpectrumLog) -> Outcome {
    let s = s_two_qubit();
    let cfg = SearchConfig::default();
    let (mut worst_constructed, mut worst_search) = (0.0f64, 0.0f64);
    for seed in 0..200u64 {
        let rank = 1 + (seed % 4) as usize;
        let rho = random_density(2, rank, seed).map_err(e)?;
        log.check(&rho)?;
        let c = wootters_concurrence(&rho).map_err(e)?;
        let dec = optimal_channel_decomposition(&rho, &s, 4).map_err(e)?;
        let constructed = average_concurrence(&dec, std::slice::from_ref(&s))
            .map_err(e)?
            .concurrence;
        worst_constructed = worst_constructed.max((constructed - c).abs());
        let found =
            par_minimize_average(&rho, Objective::Concurrence, &cfg.clone().with_seed(seed))
                .map_err(e)?
                .best_value;
        worst_search = worst_search.max((found - c).abs());
        fail_if((constructed - c).abs() > 1e-8, || {
            format!("seed {seed}: constructed {constructed} vs {c}")
        })?;
        fail_if((found - c).abs() > 1e-3, || {
            format!("seed {seed}: search {found} vs {c}")
        })?;
    }
    let mut worst_werner = 0.0f64;
    for k in 0..=5 {
        let p = k as f64 / 5.0;
        let rho = werner(p).map_err(e)?;
        log.check(&rho)?;
        let expected = ((3.0 * p - 1.0) / 2.0).max(0.0);
        let c = wootters_concurrence(&rho).map_err(e)?;
        worst_werner = worst_werner.max((c - expected).abs());
        fail_if((c - expected).abs() > 1e-10, || {
            format!("werner p={p}: {c} vs {expected}")
        })?;
    }
    Ok(format!(
        "200 states: constructed {worst_constructed:.1e}, search {worst_search:.1e}; werner {worst_werner:.1e}"
    ))
}

fn pure_consistency(log: &mut SpectrumLog) -> Outcome {
    let (mut worst_entropy, mut worst_cdb) = (0.0f64, 0.0f64);
    for d in [2, 3, 5] {
        for k in 0..500u64 {
            let psi = random_pure(d, child_seed(d as u64, k)).map_err(e)?;
            let c = concurrence_pure(&psi).map_err(e)?;
            let de = (epsilon(c).map_err(e)? - entropy_pure(&psi).map_err(e)?).abs();
            let rho = psi.density();
            if k < 20 {
                log.check(&rho)?;
            }
            let dc = (cdb_bound(&rho, DEFAULT_TOL).map_err(e)?.c_db - c).abs();
            worst_entropy = worst_entropy.max(de);
            worst_cdb = worst_cdb.max(dc);
            fail_if(de > 1e-9, || {
                format!("d={d} state {k}: entropy off by {de:.1e}")
            })?;
            fail_if(dc > 1e-9, || {
                format!("d={d} state {k}: c_db off by {dc:.1e}")
            })?;
        }
    }
    Ok(format!(
        "1500 states: entropy {worst_entropy:.1e}, c_db {worst_cdb:.1e}"
    ))
}

fn identity_suites() -> Outcome {
    let mut worst_dual = 0.0f64;
    for d in 3..=6 {
        for k in 0..500u64 {
            let psi = random_pure(d, child_seed(100 + d as u64, k)).map_err(e)?;
            let sd = schmidt(&psi).map_err(e)?;
            let dev = (2.0 * sd.c1 * sd.c2 - concurrence_minors(&psi)).abs();
            worst_dual = worst_dual.max(dev);
            fail_if(dev > 1e-10, || {
                format!("d={d} state {k}: dual forms differ by {dev:.1e}")
            })?;
        }
    }
    let mut worst_linear = 0.0f64;
    let mut dims = rng(77);
    for k in 0..200u64 {
        let (da, db) = (dims.random_range(2..=6), dims.random_range(2..=6));
        let psi = random_bipartite(da, db, child_seed(200, k)).map_err(e)?;
        let (lhs, rhs) = linear_entropy_identity_check(&psi);
        worst_linear = worst_linear.max((lhs - rhs).abs());
        fail_if((lhs - rhs).abs() > 1e-12, || {
            format!("{da}x{db} state {k}: {lhs} vs {rhs}")
        })?;
    }
    Ok(format!(
        "dual forms {worst_dual:.1e} (2000 states), linear entropy {worst_linear:.1e} (200 states)"
    ))
}

fn lower_bound_soundness(log: &mut SpectrumLog) -> Outcome {
    let mut checked = 0u64;
    let mut tightest = f64::INFINITY;
    for seed in 0..200u64 {
        let rank = 1 + (seed % 6) as usize;
        let rho = random_density(3, rank, child_seed(400, seed)).map_err(e)?;
        log.check(&rho)?;
        let out = verify_state(&rho, &SearchConfig::quick().with_seed(seed), 0.0).map_err(e)?;
        fail_if(!out.is_sound(), || {
            format!("seed {seed}: {}", out.describe_violations())
        })?;
        let strict = out.soundness.violations(&out.report, 1e-8);
        fail_if(!strict.is_empty(), || format!("seed {seed}: {strict:?}"))?;
        checked += out.soundness.evaluated;
        let margins = out
            .soundness
            .min_channel_sums
            .iter()
            .zip(&out.report.c_ij)
            .map(|(f, b)| f - b)
            .chain([
                out.soundness.min_concurrence - out.report.c_db,
                out.soundness.min_entanglement - out.report.eof_lower,
            ]);
        tightest = margins.fold(tightest, f64::min);
    }
    Ok(format!(
        "200 states, {checked} decompositions, smallest margin {tightest:.1e}"
    ))
}

fn channel_attainability(log: &mut SpectrumLog) -> Outcome {
    let (mut worst_value, mut worst_residual) = (0.0f64, 0.0f64);
    for s in s_channels(3) {
        let (i, j) = s.channel();
        for k in 0..100u64 {
            let rank = 1 + (k % 6) as usize;
            let rho = random_density(3, rank, child_seed(500 + 10 * i as u64 + j as u64, k))
                .map_err(e)?;
            if k < 10 {
                log.check(&rho)?;
            }
            let bound = channel_lambdas(&rho, &s, DEFAULT_TOL).map_err(e)?.bound();
            let dec = optimal_channel_decomposition(&rho, &s, 6).map_err(e)?;
            let dv = (channel_sum(&dec, &s) - bound).abs();
            let dr = dec.residual(&rho);
            worst_value = worst_value.max(dv);
            worst_residual = worst_residual.max(dr);
            fail_if(dv > 1e-8, || {
                format!("channel ({i},{j}) rank {rank} state {k}: off by {dv:.1e}")
            })?;
            fail_if(dr > 1e-9, || {
                format!("channel ({i},{j}) rank {rank} state {k}: residual {dr:.1e}")
            })?;
        }
    }
    Ok(format!(
        "300 states: value {worst_value:.1e}, reconstruction {worst_residual:.1e}"
    ))
}

fn separability(log: &mut SpectrumLog) -> Outcome {
    let mut worst = 0.0f64;
    for k in 0..100u64 {
        let terms = 1 + (k % 8) as usize;
        let rho = random_separable(3, terms, child_seed(600, k)).map_err(e)?;
        if k < 20 {
            log.check(&rho)?;
        }
        let c = cdb_bound(&rho, DEFAULT_TOL).map_err(e)?.c_db;
        worst = worst.max(c);
        fail_if(c > 1e-8, || {
            format!("state {k} ({terms} terms): c_db {c:.3e}")
        })?;
    }
    Ok(format!("100 states, largest c_db {worst:.1e}"))
}

fn embedding(log: &mut SpectrumLog) -> Outcome {
    let mut worst = 0.0f64;
    for k in 0..100u64 {
        let rank = 1 + (k % 4) as usize;
        let rho2 = random_density(2, rank, child_seed(700, k)).map_err(e)?;
        let rho3 = rho2.embed(3).map_err(e)?;
        if k < 20 {
            log.check(&rho3)?;
        }
        let report = cdb_bound(&rho3, DEFAULT_TOL).map_err(e)?;
        let c = wootters_concurrence(&rho2).map_err(e)?;
        let dev = (report.c_db - c).abs();
        worst = worst.max(dev);
        fail_if(dev > 1e-9, || {
            format!("state {k}: c_db {} vs {c}", report.c_db)
        })?;
        let off = report.c_ij[1].max(report.c_ij[2]);
        fail_if(off != 0.0, || {
            format!("state {k}: off-support channel {off:.1e}")
        })?;
    }
    Ok(format!("100 states, worst {worst:.1e}"))
}

fn spectrum(log: &SpectrumLog) -> Outcome {
    let msg = format!("{} states, worst deviation {:.1e}", log.states, log.worst);
    if log.worst <= 1e-9 {
        Ok(msg)
    } else {
        Err(msg)
    }
}

fn aggregation() -> Outcome {
    let mut r = rng(900);
    let (mut worst_slack, mut worst_eq) = (f64::INFINITY, 0.0f64);
    for k in 0..1000 {
        let dims = r.random_range(2..=4);
        let parts = r.random_range(1..=8);
        let totals: Vec<f64> = (0..dims).map(|_| r.random_range(0.0..1.0)).collect();
        let lower = aggregate_lower(&totals).map_err(e)?;
        // Independent random share of each total for every part.
        let shares: Vec<Vec<f64>> = (0..dims)
            .map(|_| {
                let w: Vec<f64> = (0..parts).map(|_| r.random_range(0.0..1.0)).collect();
                let sum: f64 = w.iter().sum();
                w.iter().map(|x| x / sum).collect()
            })
            .collect();
        let split: f64 = (0..parts)
            .map(|a| {
                (0..dims)
                    .map(|c| (totals[c] * shares[c][a]).powi(2))
                    .sum::<f64>()
                    .sqrt()
            })
            .sum();
        worst_slack = worst_slack.min(split - lower);
        fail_if(split - lower < -1e-12, || {
            format!("split {k}: slack {:.1e}", split - lower)
        })?;
        let t = &shares[0];
        let proportional: f64 = (0..parts)
            .map(|a| {
                (0..dims)
                    .map(|c| (totals[c] * t[a]).powi(2))
                    .sum::<f64>()
                    .sqrt()
            })
            .sum();
        worst_eq = worst_eq.max((proportional - lower).abs());
        fail_if((proportional - lower).abs() > 1e-10, || {
            format!("split {k}: proportional {proportional} vs {lower}")
        })?;
    }
    Ok(format!(
        "1000 splits: min slack {worst_slack:.1e}, proportional {worst_eq:.1e}"
    ))
}

fn eofb(args: &[&str], threads: &str) -> Result<Vec<u8>, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_eofb"))
        .args(args)
        .env_remove("EOFB_SEED")
        .env("RAYON_NUM_THREADS", threads)
        .output()
        .map_err(e)?;
    fail_if(!out.status.success(), || {
        format!(
            "eofb {}: {}",
            args.join(" "),
            String::from_utf8_lossy(&out.stderr)
        )
    })?;
    Ok(out.stdout)
}

fn determinism() -> Outcome {
    let cfg = SearchConfig {
        restarts: 6,
        iterations: 300,
        ..SearchConfig::default()
    };
    for k in 0..5u64 {
        let rho = random_density(3, 2 + k as usize, child_seed(1000, k)).map_err(e)?;
        let cfg = cfg.clone().with_seed(k);
        let seq = minimize_average(&rho, Objective::Entanglement, &cfg).map_err(e)?;
        for threads in [1, 4] {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .map_err(e)?;
            let par = pool
                .install(|| par_minimize_average(&rho, Objective::Entanglement, &cfg))
                .map_err(e)?;
            fail_if(par != seq, || {
                format!("state {k}: search differs with {threads} threads")
            })?;
            let a = pool
                .install(|| verify_state(&rho, &SearchConfig::quick().with_seed(k), 0.0))
                .map_err(e)?;
            let b = verify_state(&rho, &SearchConfig::quick().with_seed(k), 0.0).map_err(e)?;
            fail_if(a != b, || {
                format!("state {k}: verify differs with {threads} threads")
            })?;
        }
    }

    let dir = tempfile::TempDir::new().map_err(e)?;
    let state = dir.path().join("state.json");
    let rho = random_density(3, 4, 31).map_err(e)?;
    std::fs::write(&state, to_json(&MatrixFile::from_density(&rho, None))).map_err(e)?;
    let state = state.to_str().unwrap();
    let commands: [&[&str]; 5] = [
        &["random", "--d", "4", "--rank", "3", "--seed", "12"],
        &["random", "--d", "3", "--separable", "--seed", "12"],
        &["analyze", "--input", state, "--format", "csv"],
        &[
            "verify", "--input", state, "--budget", "quick", "--seed", "5",
        ],
        &[
            "ensemble", "--d", "3", "--count", "8", "--seed", "5", "--verify",
        ],
    ];
    for args in commands {
        let first = eofb(args, "1")?;
        for threads in ["1", "4"] {
            fail_if(eofb(args, threads)? != first, || {
                format!("eofb {} differs with {threads} threads", args.join(" "))
            })?;
        }
    }
    Ok("searches, verify and 5 CLI commands identical across runs and 1/4 threads".into())
}

fn main() -> ExitCode {
    let mut log = SpectrumLog::default();
    let mut failed = 0;
    let mut report = |n: usize, name: &str, outcome: Outcome, started: Instant| {
        let secs = started.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {n:>2} PASS  {name}: {detail} [{secs:.1}s]"),
            Err(detail) => {
                failed += 1;
                println!("criterion {n:>2} FAIL  {name}: {detail} [{secs:.1}s]");
            }
        }
    };

    let t = Instant::now();
    report(1, "two-qubit exactness", wootters_exactness(&mut log), t);
    let t = Instant::now();
    report(2, "pure-state consistency", pure_consistency(&mut log), t);
    let t = Instant::now();
    report(3, "identity suites", identity_suites(), t);
    let t = Instant::now();
    report(
        4,
        "lower-bound soundness",
        lower_bound_soundness(&mut log),
        t,
    );
    let t = Instant::now();
    report(
        5,
        "channel attainability",
        channel_attainability(&mut log),
        t,
    );
    let t = Instant::now();
    report(6, "separable states", separability(&mut log), t);
    let t = Instant::now();
    report(7, "embedding tightness", embedding(&mut log), t);
    let t = Instant::now();
    report(8, "spectrum cross-check", spectrum(&log), t);
    let t = Instant::now();
    report(9, "aggregation lemma", aggregation(), t);
    let t = Instant::now();
    report(10, "determinism", determinism(), t);

    if failed == 0 {
        println!("acceptance: all 10 criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} of 10 criteria failed");
        ExitCode::FAILURE
    }
}
