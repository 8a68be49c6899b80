//! Rayon-backed drivers for the closed-form enumeration and for sweeps.
//!
//! Callers choose the pool; these functions only use `par_iter`, and every
//! collection preserves input order.

use rayon::prelude::*;

use semitight_core::a5closed::{
    a5_lambda, conditions_tight, report_from_stats, A5Domain, A5Error, A5Report, ZeroStats, ZERO_SET_REPORT_CAP,
};
use semitight_core::rootdata::Weight;

/// Enumeration statistics with the `z41` range split across workers.
pub fn a5_stats(domain: &A5Domain) -> ZeroStats {
    domain.z41_values().into_par_iter().map(|v| domain.stats(Some(v))).reduce(ZeroStats::default, ZeroStats::merge)
}

pub fn count_xi_zero(lambda: [i64; 5]) -> u64 {
    a5_stats(&A5Domain::new(lambda)).zero_count
}

/// Parallel counterpart of `a5closed::classify_a5`.
pub fn classify_a5(lambda: &Weight) -> Result<A5Report, A5Error> {
    let a = a5_lambda(lambda)?;
    let domain = A5Domain::new(a);
    let stats = a5_stats(&domain);
    let zero_set = (stats.zero_count as usize <= ZERO_SET_REPORT_CAP).then(|| domain.zero_set());
    report_from_stats(a, stats, zero_set)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SweepRow {
    pub lambda: [i64; 5],
    pub zero_count: u64,
    pub min_xi: i64,
    pub conditions_tight: bool,
}

impl SweepRow {
    pub fn tight(&self) -> bool {
        self.zero_count == 1
    }

    /// Zero count positive, `ξ ≥ 0`, and tightness matching the conditions.
    pub fn agrees(&self) -> bool {
        self.zero_count >= 1 && self.min_xi >= 0 && self.tight() == self.conditions_tight
    }
}

/// Every `λ` with `0 ≤ a_i ≤ bounds[i]`, last coordinate varying fastest.
pub fn lambda_box(bounds: [i64; 5]) -> Vec<[i64; 5]> {
    let mut out = vec![[0i64; 5]];
    for (k, &b) in bounds.iter().enumerate() {
        out = out
            .into_iter()
            .flat_map(|lam| {
                (0..=b).map(move |x| {
                    let mut l = lam;
                    l[k] = x;
                    l
                })
            })
            .collect();
    }
    out
}

pub fn sweep_row(lambda: [i64; 5]) -> SweepRow {
    let stats = a5_stats(&A5Domain::new(lambda));
    SweepRow { lambda, zero_count: stats.zero_count, min_xi: stats.min_xi, conditions_tight: conditions_tight(lambda) }
}

pub fn sweep(lambdas: &[[i64; 5]]) -> Vec<SweepRow> {
    lambdas.par_iter().map(|&l| sweep_row(l)).collect()
}
