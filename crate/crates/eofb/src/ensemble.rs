//! Batches of seeded random states written as CSV.
//!
//! Schema version 1. Columns, in order:
//! `index,rank,c_12,c_13,...,c_(d-1)d,c_db,eof_lower,empirical_c,gap`.
//! `empirical_c` and `gap` are empty unless the rows were verified by search.

use std::io::Write;

use eofb_core::bounds::cdb_bound;
use eofb_core::search::{Objective, SearchConfig};
use eofb_core::states::random::{child_seed, random_density};
use eofb_core::Result;

use crate::error::CliError;
use crate::format::{channel_columns, csv_float};
use crate::parallel::par_map_indexed;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq)]
pub struct EnsembleRow {
    pub index: usize,
    pub rank: usize,
    pub c_ij: Vec<f64>,
    pub c_db: f64,
    pub eof_lower: f64,
    pub empirical_c: Option<f64>,
}

impl EnsembleRow {
    pub fn gap(&self) -> Option<f64> {
        self.empirical_c.map(|e| e - self.c_db)
    }
}

/// Seed of the `index`-th state of an ensemble.
pub fn state_seed(seed: u64, index: usize) -> u64 {
    child_seed(seed, index as u64)
}

/// One row per state; rows are computed in parallel and returned in order.
/// With `verify`, each state also gets a concurrence search seeded from its
/// own state seed.
pub fn ensemble_rows(
    d: usize,
    count: usize,
    rank: usize,
    seed: u64,
    verify: Option<&SearchConfig>,
) -> Result<Vec<EnsembleRow>> {
    par_map_indexed(count, |index| {
        let s = state_seed(seed, index);
        let rho = random_density(d, rank, s)?;
        let rep = cdb_bound(&rho, eofb_core::DEFAULT_TOL)?;
        let empirical_c = match verify {
            Some(cfg) => {
                let cfg = cfg.clone().with_seed(s);
                Some(
                    eofb_core::search::minimize_average(&rho, Objective::Concurrence, &cfg)?
                        .best_value,
                )
            }
            None => None,
        };
        Ok(EnsembleRow {
            index,
            rank,
            c_ij: rep.c_ij,
            c_db: rep.c_db,
            eof_lower: rep.eof_lower,
            empirical_c,
        })
    })
    .into_iter()
    .collect()
}

pub fn header(d: usize) -> Vec<String> {
    let mut h = vec!["index".to_string(), "rank".to_string()];
    h.extend(channel_columns(d));
    h.extend(["c_db", "eof_lower", "empirical_c", "gap"].map(String::from));
    h
}

pub fn write_csv<W: Write>(
    d: usize,
    rows: &[EnsembleRow],
    out: W,
) -> std::result::Result<(), CliError> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(header(d)).map_err(CliError::from_csv)?;
    let opt = |x: Option<f64>| x.map(csv_float).unwrap_or_default();
    for r in rows {
        let mut rec = vec![r.index.to_string(), r.rank.to_string()];
        rec.extend(r.c_ij.iter().map(|&c| csv_float(c)));
        rec.extend([
            csv_float(r.c_db),
            csv_float(r.eof_lower),
            opt(r.empirical_c),
            opt(r.gap()),
        ]);
        w.write_record(&rec).map_err(CliError::from_csv)?;
    }
    w.flush().map_err(|e| CliError::Io(e.to_string()))
}
