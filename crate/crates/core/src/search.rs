//! Randomized local search over pure-state decompositions.
//!
//! Decompositions are parametrized as `Phi = W R0 G`, with `R0` the first `2d`
//! rows of a Haar unitary and `G` a product of accepted two-column rotations.
//! A move rotates one pair of columns; only those two columns change, so the
//! averages are updated incrementally. The search gives upper bounds on the
//! true minima and, as a side effect, records the smallest value of every
//! averaged quantity it ever evaluated, which must never fall below the
//! corresponding lower bound.

use alloc::vec::Vec;

use num_complex::Complex64;
use rand::Rng;

use crate::bounds::{cdb_bound, BoundReport};
use crate::decomposition::{
    average_concurrence, channel_sum, column_stats, eigen_factor, optimal_channel_decomposition,
    ColumnStats, Decomposition, RightMatrix,
};
use crate::linalg::ComplexMatrix;
use crate::math::{cos, exp, log2, sin, sqrt};
use crate::smatrix::{s_channels, s_ij, SMatrix};
use crate::states::random::{child_seed, haar_unitary_with, rng};
use crate::states::{epsilon_clamped, DensityMatrix};
use crate::{Error, Result};

const RESYNC_EVERY: usize = 256;
const TRACE_POINTS: usize = 50;

#[derive(Debug, Clone, PartialEq)]
pub struct SearchConfig {
    /// Decomposition size; raised to `2d` when smaller.
    pub n_columns: usize,
    pub restarts: usize,
    pub iterations: usize,
    pub seed: u64,
    /// Rotation scale at the first iteration.
    pub initial_step: f64,
    /// Rotation scale at the last iteration; the schedule is geometric.
    pub final_step: f64,
    /// Smoothing of `|z|` at the first iteration.
    pub initial_smoothing: f64,
    /// Smoothing at the last iteration; geometric in between.
    pub final_smoothing: f64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self {
            n_columns: 12,
            restarts: 16,
            iterations: 2000,
            seed: 0,
            initial_step: 1.5,
            final_step: 1e-2,
            initial_smoothing: 1e-1,
            final_smoothing: 1e-7,
        }
    }
}

impl SearchConfig {
    /// Small budget for smoke runs.
    pub fn quick() -> Self {
        Self {
            restarts: 4,
            iterations: 600,
            ..Self::default()
        }
    }

    pub fn with_seed(self, seed: u64) -> Self {
        Self { seed, ..self }
    }

    fn step(&self, it: usize) -> f64 {
        geometric(self.initial_step, self.final_step, it, self.iterations)
    }

    fn smoothing(&self, it: usize) -> f64 {
        geometric(
            self.initial_smoothing,
            self.final_smoothing,
            it,
            self.iterations,
        )
    }
}

fn geometric(from: f64, to: f64, it: usize, iterations: usize) -> f64 {
    if iterations <= 1 || from <= 0.0 || to <= 0.0 {
        return from;
    }
    let t = it as f64 / (iterations - 1) as f64;
    from * exp(t * log2(to / from) * core::f64::consts::LN_2)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Objective {
    /// `sum_a p_a C(psi_a)`.
    Concurrence,
    /// `sum_a p_a eps(C(psi_a))`.
    Entanglement,
    /// `sum_a |phi_a^T S^ij phi_a|`, 1-based channel.
    Channel { i: usize, j: usize },
}

/// Smallest averages seen over every evaluated decomposition.
#[derive(Debug, Clone, PartialEq)]
pub struct Soundness {
    pub min_channel_sums: Vec<f64>,
    pub min_concurrence: f64,
    pub min_entanglement: f64,
    pub evaluated: u64,
    /// Largest `max |Phi Phi^dagger - rho|` over the final decompositions.
    pub max_residual: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Quantity {
    Channel(usize, usize),
    Concurrence,
    Entanglement,
}

/// A searched value below its lower bound.
#[derive(Debug, Clone, PartialEq)]
pub struct Violation {
    pub quantity: Quantity,
    pub bound: f64,
    pub found: f64,
}

impl Soundness {
    fn new(channels: usize) -> Self {
        Self {
            min_channel_sums: alloc::vec![f64::INFINITY; channels],
            min_concurrence: f64::INFINITY,
            min_entanglement: f64::INFINITY,
            evaluated: 0,
            max_residual: 0.0,
        }
    }

    fn observe(&mut self, t: &Totals) {
        for (m, v) in self.min_channel_sums.iter_mut().zip(&t.per_channel) {
            *m = m.min(*v);
        }
        self.min_concurrence = self.min_concurrence.min(t.concurrence);
        self.min_entanglement = self.min_entanglement.min(t.entanglement);
        self.evaluated += 1;
    }

    pub fn merge(&mut self, other: &Soundness) {
        for (m, v) in self
            .min_channel_sums
            .iter_mut()
            .zip(&other.min_channel_sums)
        {
            *m = m.min(*v);
        }
        self.min_concurrence = self.min_concurrence.min(other.min_concurrence);
        self.min_entanglement = self.min_entanglement.min(other.min_entanglement);
        self.evaluated += other.evaluated;
        self.max_residual = self.max_residual.max(other.max_residual);
    }

    /// Every minimum lying more than `slack` below its bound.
    pub fn violations(&self, report: &BoundReport, slack: f64) -> Vec<Violation> {
        let mut out = Vec::new();
        for ((sp, &bound), &found) in report
            .spectra
            .iter()
            .zip(&report.c_ij)
            .zip(&self.min_channel_sums)
        {
            if found < bound - slack {
                out.push(Violation {
                    quantity: Quantity::Channel(sp.channel.0, sp.channel.1),
                    bound,
                    found,
                });
            }
        }
        if self.min_concurrence < report.c_db - slack {
            out.push(Violation {
                quantity: Quantity::Concurrence,
                bound: report.c_db,
                found: self.min_concurrence,
            });
        }
        if self.min_entanglement < report.eof_lower - slack {
            out.push(Violation {
                quantity: Quantity::Entanglement,
                bound: report.eof_lower,
                found: self.min_entanglement,
            });
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq)]
struct Totals {
    per_channel: Vec<f64>,
    concurrence: f64,
    entanglement: f64,
}

impl Totals {
    fn from_stats(stats: &[ColumnStats], channels: usize) -> Self {
        let mut t = Totals {
            per_channel: alloc::vec![0.0; channels],
            concurrence: 0.0,
            entanglement: 0.0,
        };
        for s in stats {
            t.add(s, 1.0);
        }
        t
    }

    fn add(&mut self, s: &ColumnStats, sign: f64) {
        for (acc, v) in self.per_channel.iter_mut().zip(&s.values) {
            *acc += sign * v.norm();
        }
        self.concurrence += sign * s.concurrence;
        self.entanglement += sign * s.entanglement;
    }
}

/// Everything a restart needs, precomputed once per state.
#[derive(Debug, Clone)]
pub struct SearchProblem {
    d: usize,
    rho: DensityMatrix,
    w: ComplexMatrix,
    channels: Vec<SMatrix>,
    objective: Objective,
    target: Option<usize>,
}

impl SearchProblem {
    pub fn new(rho: &DensityMatrix, objective: Objective) -> Result<Self> {
        let channels = s_channels(rho.d());
        let target = match objective {
            Objective::Channel { i, j } => {
                let s = s_ij(rho.d(), i, j)?;
                channels.iter().position(|c| c.channel() == s.channel())
            }
            _ => None,
        };
        Ok(Self {
            d: rho.d(),
            rho: rho.clone(),
            w: eigen_factor(rho)?.w,
            channels,
            objective,
            target,
        })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn objective(&self) -> Objective {
        self.objective
    }

    fn value(&self, t: &Totals) -> f64 {
        match (self.objective, self.target) {
            (Objective::Concurrence, _) => t.concurrence,
            (Objective::Entanglement, _) => t.entanglement,
            (Objective::Channel { .. }, Some(k)) => t.per_channel[k],
            (Objective::Channel { .. }, None) => f64::INFINITY,
        }
    }

    /// Objective of an arbitrary decomposition, recomputed from scratch.
    pub fn evaluate(&self, dec: &Decomposition) -> Result<f64> {
        let avg = average_concurrence(dec, &self.channels)?;
        Ok(self.value(&Totals {
            per_channel: avg.per_channel,
            concurrence: avg.concurrence,
            entanglement: avg.entanglement,
        }))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RestartOutcome {
    pub restart: usize,
    pub value: f64,
    pub decomposition: Decomposition,
    /// Objective sampled at evenly spaced iterations, ending with the final value.
    pub trace: Vec<f64>,
    pub soundness: Soundness,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SearchResult {
    pub best_value: f64,
    pub best_restart: usize,
    pub best_decomposition: Decomposition,
    /// Final value of each restart, in restart order.
    pub restart_values: Vec<f64>,
    pub best_trace: Vec<f64>,
    pub soundness: Soundness,
}

/// `2d` rows of an `n x n` Haar unitary.
pub fn random_right(dim: usize, n: usize, seed: u64) -> Result<RightMatrix> {
    if n < dim {
        return Err(Error::BadShape { rows: dim, cols: n });
    }
    let u = haar_unitary_with(n, &mut rng(seed));
    Ok(RightMatrix::new(ComplexMatrix::from_fn(dim, n, |r, c| {
        u[(r, c)]
    })))
}

fn rotate(
    a: &[Complex64],
    b: &[Complex64],
    c: f64,
    s: Complex64,
) -> (Vec<Complex64>, Vec<Complex64>) {
    let na = a.iter().zip(b).map(|(x, y)| x * c - y * s).collect();
    let nb = a.iter().zip(b).map(|(x, y)| x * s.conj() + y * c).collect();
    (na, nb)
}

/// Channel data of one column pair. Rotating the pair by `(cos t, e^{i phase} sin t)`
/// changes every bilinear value and both weights quadratically, so a candidate
/// costs one pass over the channels.
struct PairForm {
    za: Vec<Complex64>,
    zb: Vec<Complex64>,
    cross: Vec<Complex64>,
    pa: f64,
    pb: f64,
    overlap: Complex64,
}

impl PairForm {
    fn new(
        a: &[Complex64],
        b: &[Complex64],
        sa: &ColumnStats,
        sb: &ColumnStats,
        channels: &[SMatrix],
    ) -> Self {
        Self {
            za: sa.values.clone(),
            zb: sb.values.clone(),
            cross: channels.iter().map(|s| s.cross(a, b)).collect(),
            pa: sa.weight,
            pb: sb.weight,
            overlap: a.iter().zip(b).map(|(x, y)| x.conj() * y).sum(),
        }
    }
}

/// Scratch space for candidate evaluation.
struct Candidate {
    totals: Totals,
}

impl Candidate {
    fn new(k: usize) -> Self {
        Self {
            totals: Totals {
                per_channel: alloc::vec![0.0; k],
                concurrence: 0.0,
                entanglement: 0.0,
            },
        }
    }

    /// Fills `totals` for the pair rotated by `(t, phase)` and returns the
    /// smoothed objective of the two rotated columns.
    fn eval(
        &mut self,
        problem: &SearchProblem,
        pair: &PairForm,
        base: &Totals,
        t: f64,
        phase: f64,
        mu: f64,
    ) -> f64 {
        let c = cos(t);
        let s = Complex64::from_polar(sin(t), phase);
        let (c2, s2, cs) = (c * c, s * s, s * (2.0 * c));
        let (mut qa, mut qb) = (0.0, 0.0);
        let mut target = (0.0, 0.0);
        for k in 0..pair.za.len() {
            let va = pair.za[k] * c2 - pair.cross[k] * cs + pair.zb[k] * s2;
            let vb = pair.za[k] * s2.conj() + pair.cross[k] * cs.conj() + pair.zb[k] * c2;
            let (na, nb) = (va.norm_sqr(), vb.norm_sqr());
            self.totals.per_channel[k] = base.per_channel[k] + sqrt(na) + sqrt(nb);
            if problem.target == Some(k) {
                target = (na, nb);
            }
            qa += na;
            qb += nb;
        }
        let pa = (c2 * pair.pa + s.norm_sqr() * pair.pb - 2.0 * c * (s * pair.overlap).re).max(0.0);
        let pb = (pair.pa + pair.pb - pa).max(0.0);
        let (ca, cb) = (sqrt(qa), sqrt(qb));
        let (ea, eb) = (weighted_eps(pa, ca), weighted_eps(pb, cb));
        self.totals.concurrence = base.concurrence + ca + cb;
        self.totals.entanglement = base.entanglement + ea + eb;
        let m2 = mu * mu;
        match problem.objective {
            Objective::Concurrence => sqrt(qa + m2) + sqrt(qb + m2),
            Objective::Channel { .. } => sqrt(target.0 + m2) + sqrt(target.1 + m2),
            Objective::Entanglement => ea + eb,
        }
    }
}

fn weighted_eps(p: f64, conc: f64) -> f64 {
    if p > 0.0 {
        p * epsilon_clamped(conc / p)
    } else {
        0.0
    }
}

const GRID: usize = 8;
const GOLDEN_STEPS: usize = 10;

/// Minimizes `f` over `[-h, h]`: a coarse grid, then golden section around the
/// best grid point. Returns the best `(t, f(t))` seen, starting from `(0, f0)`.
fn line_search<F: FnMut(f64, &mut Soundness) -> f64>(
    f: &mut F,
    soundness: &mut Soundness,
    h: f64,
    f0: f64,
) -> (f64, f64) {
    let ratio = 0.5 * (sqrt(5.0) - 1.0);
    let (mut best_t, mut best_v) = (0.0, f0);
    let width = 2.0 * h / GRID as f64;
    for g in 0..=GRID {
        let t = -h + width * g as f64;
        let v = f(t, soundness);
        if v < best_v {
            best_t = t;
            best_v = v;
        }
    }
    let (mut lo, mut hi) = (best_t - width, best_t + width);
    let mut x1 = hi - ratio * (hi - lo);
    let mut x2 = lo + ratio * (hi - lo);
    let mut f1 = f(x1, soundness);
    let mut f2 = f(x2, soundness);
    for _ in 0..GOLDEN_STEPS {
        if f1 < f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - ratio * (hi - lo);
            f1 = f(x1, soundness);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + ratio * (hi - lo);
            f2 = f(x2, soundness);
        }
    }
    for (t, v) in [(x1, f1), (x2, f2)] {
        if v < best_v {
            best_t = t;
            best_v = v;
        }
    }
    (best_t, best_v)
}

/// One restart, seeded from the `index`-th child of `cfg.seed`.
///
/// Each iteration picks a column pair and a phase, then line-searches the
/// rotation angle over `[-step, step]` (grid, then golden section). The
/// absolute values in the objective are smoothed as `sqrt(|z|^2 + mu^2)` with
/// `mu` shrinking over the run: without smoothing a column whose value is
/// isolated cannot be reduced by any two-column rotation. The outcome is the
/// best decomposition under the exact objective.
pub fn run_restart(problem: &SearchProblem, cfg: &SearchConfig, index: usize) -> RestartOutcome {
    let dim = 2 * problem.d;
    let n = cfg.n_columns.max(dim);
    let mut rng = rng(child_seed(cfg.seed, index as u64));
    let u = haar_unitary_with(n, &mut rng);
    let r0 = ComplexMatrix::from_fn(dim, n, |r, c| u[(r, c)]);
    let phi = &problem.w * &r0;
    let k = problem.channels.len();

    let mut cols: Vec<Vec<Complex64>> = (0..n).map(|c| phi.column(c)).collect();
    let mut stats: Vec<ColumnStats> = cols
        .iter()
        .map(|c| column_stats(c, &problem.channels))
        .collect();
    let mut totals = Totals::from_stats(&stats, k);
    let mut best = problem.value(&totals);
    let mut best_cols = cols.clone();
    let mut soundness = Soundness::new(k);
    soundness.observe(&totals);

    let every = (cfg.iterations / TRACE_POINTS).max(1);
    let mut trace = Vec::with_capacity(TRACE_POINTS + 1);
    let mut cand = Candidate::new(k);
    for it in 0..cfg.iterations {
        if it % every == 0 {
            trace.push(best);
        }
        let a = rng.random_range(0..n);
        let mut b = rng.random_range(0..n - 1);
        if b >= a {
            b += 1;
        }
        let phase0: f64 = rng.random_range(0.0..core::f64::consts::TAU);
        let h = cfg.step(it);
        let mu = cfg.smoothing(it);

        for phase in [phase0, phase0 + core::f64::consts::FRAC_PI_2] {
            let pair = PairForm::new(&cols[a], &cols[b], &stats[a], &stats[b], &problem.channels);
            let mut base = totals.clone();
            base.add(&stats[a], -1.0);
            base.add(&stats[b], -1.0);
            let mut probe = |t: f64, soundness: &mut Soundness| {
                let v = cand.eval(problem, &pair, &base, t, phase, mu);
                soundness.observe(&cand.totals);
                v
            };
            let start = probe(0.0, &mut soundness);
            let (t, v) = line_search(&mut probe, &mut soundness, h, start);
            if v < start {
                let s = Complex64::from_polar(sin(t), phase);
                let (na, nb) = rotate(&cols[a], &cols[b], cos(t), s);
                stats[a] = column_stats(&na, &problem.channels);
                stats[b] = column_stats(&nb, &problem.channels);
                cols[a] = na;
                cols[b] = nb;
                base.add(&stats[a], 1.0);
                base.add(&stats[b], 1.0);
                totals = base;
                let value = problem.value(&totals);
                if value < best {
                    best = value;
                    best_cols.clone_from(&cols);
                }
            }
        }
        if (it + 1) % RESYNC_EVERY == 0 {
            totals = Totals::from_stats(&stats, k);
        }
    }

    let phi = ComplexMatrix::from_fn(dim, n, |r, c| best_cols[c][r]);
    let decomposition = Decomposition::from_phi(problem.d, phi).expect("phi has 2d rows");
    let final_stats: Vec<ColumnStats> = best_cols
        .iter()
        .map(|c| column_stats(c, &problem.channels))
        .collect();
    let exact = Totals::from_stats(&final_stats, k);
    soundness.observe(&exact);
    soundness.max_residual = decomposition.residual(&problem.rho);
    let value = problem.value(&exact);
    trace.push(value);
    RestartOutcome {
        restart: index,
        value,
        decomposition,
        trace,
        soundness,
    }
}

/// Best restart (ties go to the lower index) plus merged soundness minima.
/// The merge does not depend on the order of `outcomes`.
pub fn merge_restarts(
    problem: &SearchProblem,
    mut outcomes: Vec<RestartOutcome>,
) -> Result<SearchResult> {
    outcomes.sort_by_key(|o| o.restart);
    let best = outcomes
        .iter()
        .min_by(|x, y| x.value.total_cmp(&y.value).then(x.restart.cmp(&y.restart)))
        .ok_or(Error::NoConvergence {
            what: "search without restarts",
        })?;
    let mut soundness = Soundness::new(problem.channels.len());
    for o in &outcomes {
        soundness.merge(&o.soundness);
    }
    Ok(SearchResult {
        best_value: best.value,
        best_restart: best.restart,
        best_decomposition: best.decomposition.clone(),
        restart_values: outcomes.iter().map(|o| o.value).collect(),
        best_trace: best.trace.clone(),
        soundness,
    })
}

/// Sequential multi-restart minimization.
pub fn minimize_average(
    rho: &DensityMatrix,
    objective: Objective,
    cfg: &SearchConfig,
) -> Result<SearchResult> {
    let problem = SearchProblem::new(rho, objective)?;
    let outcomes = (0..cfg.restarts)
        .map(|r| run_restart(&problem, cfg, r))
        .collect();
    merge_restarts(&problem, outcomes)
}

#[derive(Debug, Clone, PartialEq)]
pub struct GapReport {
    pub report: BoundReport,
    /// Smallest average concurrence found.
    pub empirical: f64,
    /// `empirical - c_db`; nonnegative up to search noise.
    pub gap: f64,
    pub search: SearchResult,
}

/// Compares `C_db` with the smallest average concurrence the search finds.
pub fn bound_gap_experiment(rho: &DensityMatrix, cfg: &SearchConfig) -> Result<GapReport> {
    let report = cdb_bound(rho, crate::DEFAULT_TOL)?;
    let search = minimize_average(rho, Objective::Concurrence, cfg)?;
    Ok(GapReport {
        empirical: search.best_value,
        gap: search.best_value - report.c_db,
        report,
        search,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct ChannelAttainment {
    pub channel: (usize, usize),
    pub bound: f64,
    /// Channel sum of the closed-form decomposition.
    pub constructed: f64,
    /// Best channel sum found by search.
    pub searched: f64,
}

/// For each channel: the bound, the value reached by the closed-form
/// decomposition, and the value reached by searching that channel alone.
pub fn channel_attainment(
    rho: &DensityMatrix,
    cfg: &SearchConfig,
) -> Result<Vec<ChannelAttainment>> {
    let report = cdb_bound(rho, crate::DEFAULT_TOL)?;
    let n = cfg.n_columns.max(rho.dim());
    s_channels(rho.d())
        .iter()
        .zip(&report.c_ij)
        .map(|(s, &bound)| {
            let (i, j) = s.channel();
            let dec = optimal_channel_decomposition(rho, s, n)?;
            let search = minimize_average(rho, Objective::Channel { i, j }, cfg)?;
            Ok(ChannelAttainment {
                channel: (i, j),
                bound,
                constructed: channel_sum(&dec, s),
                searched: search.best_value,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::wootters_concurrence;
    use crate::linalg::row_orthonormality_deviation;
    use crate::states::random::{random_density, random_separable};

    #[test]
    fn step_schedule_is_geometric() {
        let cfg = SearchConfig::default();
        assert!((cfg.step(0) - 1.5).abs() < 1e-15);
        assert!((cfg.step(cfg.iterations - 1) - 1e-2).abs() < 1e-15);
        assert!(cfg.step(100) > cfg.step(101));
    }

    #[test]
    fn random_right_rows() {
        let r = random_right(6, 9, 3).unwrap();
        assert!(row_orthonormality_deviation(r.matrix()) < 1e-13);
        assert!(random_right(6, 5, 3).is_err());
    }

    #[test]
    fn search_upper_bounds_two_qubit_concurrence() {
        let rho = random_density(2, 3, 21).unwrap();
        let c = wootters_concurrence(&rho).unwrap();
        let res = minimize_average(&rho, Objective::Concurrence, &SearchConfig::quick()).unwrap();
        assert!(res.best_value >= c - 1e-9);
        assert!(res.best_value - c < 0.02, "{} vs {}", res.best_value, c);
        assert!(res.soundness.max_residual < 1e-12);
        let report = cdb_bound(&rho, 1e-9).unwrap();
        assert!(res.soundness.violations(&report, 1e-9).is_empty());
    }

    #[test]
    fn reported_value_matches_decomposition() {
        let rho = random_density(3, 4, 5).unwrap();
        let cfg = SearchConfig::quick();
        let problem = SearchProblem::new(&rho, Objective::Entanglement).unwrap();
        let out = run_restart(&problem, &cfg, 2);
        let direct = problem.evaluate(&out.decomposition).unwrap();
        assert!((direct - out.value).abs() < 1e-12);
        assert_eq!(out.trace.last(), Some(&out.value));
        assert!(out.trace.windows(2).all(|w| w[1] <= w[0] + 1e-12));
    }

    #[test]
    fn deterministic_and_order_free_merge() {
        let rho = random_density(3, 3, 8).unwrap();
        let cfg = SearchConfig {
            restarts: 3,
            iterations: 200,
            ..SearchConfig::default()
        }
        .with_seed(4);
        let a = minimize_average(&rho, Objective::Concurrence, &cfg).unwrap();
        let b = minimize_average(&rho, Objective::Concurrence, &cfg).unwrap();
        assert_eq!(a, b);
        let problem = SearchProblem::new(&rho, Objective::Concurrence).unwrap();
        let rev: Vec<_> = (0..3)
            .rev()
            .map(|r| run_restart(&problem, &cfg, r))
            .collect();
        assert_eq!(merge_restarts(&problem, rev).unwrap(), a);
    }

    #[test]
    fn separable_state_searches_toward_zero() {
        let rho = random_separable(2, 3, 1).unwrap();
        assert!(wootters_concurrence(&rho).unwrap() < 1e-9);
        let res = minimize_average(&rho, Objective::Concurrence, &SearchConfig::quick()).unwrap();
        assert!(res.best_value < 0.05);
    }

    #[test]
    fn bad_channel_objective() {
        let rho = random_density(3, 2, 1).unwrap();
        assert!(SearchProblem::new(&rho, Objective::Channel { i: 2, j: 1 }).is_err());
    }
}
