//! Cross-checks the closed-form bounds of one state against search.

use std::fmt::Write as _;

use eofb_core::bounds::{cdb_bound, BoundReport};
use eofb_core::search::{
    ChannelAttainment, Objective, Quantity, SearchConfig, Soundness, Violation,
};
use eofb_core::states::{epsilon_clamped, DensityMatrix};
use eofb_core::Result;

use crate::parallel::{par_channel_attainment, par_minimize_average};

/// A searched value may undercut a bound by at most this much.
pub const SOUNDNESS_SLACK: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyOutcome {
    pub report: BoundReport,
    /// Smallest average concurrence found.
    pub empirical_c: f64,
    /// `empirical_c - c_db`.
    pub gap: f64,
    /// Smallest average entanglement found.
    pub empirical_eof: f64,
    pub attainment: Vec<ChannelAttainment>,
    pub soundness: Soundness,
    pub violations: Vec<Violation>,
}

impl VerifyOutcome {
    pub fn is_sound(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn render(&self) -> String {
        let r = &self.report;
        let mut s = String::new();
        let _ = writeln!(s, "d: {}", r.d);
        let _ = writeln!(s, "mode: {}", r.mode.as_str());
        let _ = writeln!(s, "c_db: {:.16e}", r.c_db);
        let _ = writeln!(s, "eof_lower: {:.16e}", r.eof_lower);
        let _ = writeln!(s, "empirical_c: {:.16e}", self.empirical_c);
        let _ = writeln!(s, "gap: {:.16e}", self.gap);
        let _ = writeln!(s, "empirical_eof: {:.16e}", self.empirical_eof);
        for a in &self.attainment {
            let _ = writeln!(
                s,
                "channel ({},{}): bound {:.16e} constructed {:.16e} searched {:.16e} residual {:.3e}",
                a.channel.0,
                a.channel.1,
                a.bound,
                a.constructed,
                a.searched,
                a.searched - a.bound
            );
        }
        let _ = writeln!(
            s,
            "soundness: {} ({} decompositions checked)",
            if self.is_sound() { "ok" } else { "VIOLATED" },
            self.soundness.evaluated
        );
        s
    }

    pub fn describe_violations(&self) -> String {
        self.violations
            .iter()
            .map(|v| {
                let what = match v.quantity {
                    Quantity::Channel(i, j) => format!("channel ({i},{j}) sum"),
                    Quantity::Concurrence => "average concurrence".to_string(),
                    Quantity::Entanglement => "average entanglement".to_string(),
                };
                format!(
                    "{what} {:.16e} is below its bound {:.16e}",
                    v.found, v.bound
                )
            })
            .collect::<Vec<_>>()
            .join("; ")
    }
}

/// Runs concurrence, entanglement and per-channel searches and checks every
/// sampled decomposition against the bounds. `bound_offset` is added to every
/// bound before checking; it exists only to exercise the failure path.
pub fn verify_state(
    rho: &DensityMatrix,
    cfg: &SearchConfig,
    bound_offset: f64,
) -> Result<VerifyOutcome> {
    let mut report = cdb_bound(rho, eofb_core::DEFAULT_TOL)?;
    let conc = par_minimize_average(rho, Objective::Concurrence, cfg)?;
    let ent = par_minimize_average(rho, Objective::Entanglement, cfg)?;
    let channels = par_channel_attainment(rho, cfg)?;

    let mut soundness = conc.soundness.clone();
    soundness.merge(&ent.soundness);
    for (_, search) in &channels {
        soundness.merge(&search.soundness);
    }

    if bound_offset != 0.0 {
        for c in report.c_ij.iter_mut() {
            *c += bound_offset;
        }
        report.c_db += bound_offset;
        report.eof_lower = epsilon_clamped(report.c_db);
    }
    let violations = soundness.violations(&report, SOUNDNESS_SLACK);
    Ok(VerifyOutcome {
        empirical_c: conc.best_value,
        gap: conc.best_value - report.c_db,
        empirical_eof: ent.best_value,
        attainment: channels.into_iter().map(|(a, _)| a).collect(),
        report,
        soundness,
        violations,
    })
}
