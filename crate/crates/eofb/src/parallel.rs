//! Multi-threaded drivers for the search. Restarts and ensemble rows are
//! mapped in parallel and collected in index order, so results do not depend
//! on the thread count.

use eofb_core::bounds::cdb_bound;
use eofb_core::decomposition::{channel_sum, optimal_channel_decomposition};
use eofb_core::search::{
    merge_restarts, run_restart, ChannelAttainment, Objective, SearchConfig, SearchProblem,
    SearchResult,
};
use eofb_core::smatrix::s_channels;
use eofb_core::states::DensityMatrix;
use eofb_core::Result;
use rayon::prelude::*;

pub fn par_minimize_average(
    rho: &DensityMatrix,
    objective: Objective,
    cfg: &SearchConfig,
) -> Result<SearchResult> {
    let problem = SearchProblem::new(rho, objective)?;
    let outcomes = (0..cfg.restarts)
        .into_par_iter()
        .map(|r| run_restart(&problem, cfg, r))
        .collect();
    merge_restarts(&problem, outcomes)
}

/// Per channel: bound, closed-form value and searched value, plus the
/// searches themselves.
pub fn par_channel_attainment(
    rho: &DensityMatrix,
    cfg: &SearchConfig,
) -> Result<Vec<(ChannelAttainment, SearchResult)>> {
    let report = cdb_bound(rho, eofb_core::DEFAULT_TOL)?;
    let n = cfg.n_columns.max(rho.dim());
    s_channels(rho.d())
        .iter()
        .zip(&report.c_ij)
        .map(|(s, &bound)| {
            let (i, j) = s.channel();
            let dec = optimal_channel_decomposition(rho, s, n)?;
            let search = par_minimize_average(rho, Objective::Channel { i, j }, cfg)?;
            Ok((
                ChannelAttainment {
                    channel: (i, j),
                    bound,
                    constructed: channel_sum(&dec, s),
                    searched: search.best_value,
                },
                search,
            ))
        })
        .collect()
}

/// `f(0), ..., f(count - 1)` computed in parallel, in index order.
pub fn par_map_indexed<T: Send, F: Fn(usize) -> T + Sync + Send>(count: usize, f: F) -> Vec<T> {
    (0..count).into_par_iter().map(f).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use eofb_core::search::minimize_average;
    use eofb_core::states::random::random_density;

    #[test]
    fn matches_sequential_for_any_pool_size() {
        let rho = random_density(3, 4, 6).unwrap();
        let cfg = SearchConfig {
            restarts: 5,
            iterations: 150,
            ..SearchConfig::default()
        };
        let seq = minimize_average(&rho, Objective::Concurrence, &cfg).unwrap();
        for threads in [1, 3] {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .unwrap();
            let par = pool
                .install(|| par_minimize_average(&rho, Objective::Concurrence, &cfg))
                .unwrap();
            assert_eq!(par, seq);
        }
    }
}
