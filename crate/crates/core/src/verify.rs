//! Three-way agreement check: brute force vs closed form vs series.

use std::fmt::Write as _;

use num_bigint::BigInt;
use rayon::prelude::*;
use thiserror::Error;

use crate::counting::{count_roots, RootCount};
use crate::cycletype::{partitions_of, CycleType};
use crate::oracle::{oracle_count_roots, MAX_ORACLE_N};
use crate::series::{build_signed_difference_series, build_total_root_series, EgfSeries};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("max n = {0} exceeds the limit of {MAX_ORACLE_N}")]
    MaxNTooLarge(u32),
    #[error("no values of k given")]
    NoK,
    #[error("k must be positive")]
    ZeroK,
}

/// Outcome for one `(k, n)` pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyRow {
    pub k: u32,
    pub n: u32,
    pub checked: usize,
    pub passed: usize,
}

/// A cycle type on which the three methods disagree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub k: u32,
    pub cycle_type: CycleType,
    pub oracle: RootCount,
    pub counting: RootCount,
    pub series_total: BigInt,
    pub series_difference: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub rows: Vec<VerifyRow>,
    pub failures: Vec<Counterexample>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn total_checks(&self) -> usize {
        self.rows.iter().map(|r| r.checked).sum()
    }

    /// The earliest disagreement in `(k, n, type)` order.
    pub fn first_failure(&self) -> Option<&Counterexample> {
        self.failures.first()
    }

    /// Deterministic text report (no timing information).
    pub fn render(&self) -> String {
        let mut out = String::new();
        for r in &self.rows {
            let status = if r.passed == r.checked { "ok" } else { "FAIL" };
            let _ = writeln!(
                out,
                "k={:<3} n={:<3} {:>4}/{:<4} {status}",
                r.k, r.n, r.passed, r.checked
            );
        }
        let _ = writeln!(
            out,
            "{} checks, {} failed",
            self.total_checks(),
            self.failures.len()
        );
        if let Some(f) = self.first_failure() {
            let _ = writeln!(
                out,
                "first counterexample: k={} type={} oracle=({}, {}, {}) closed-form=({}, {}, {}) series total={} difference={}",
                f.k,
                f.cycle_type,
                f.oracle.total,
                f.oracle.even,
                f.oracle.odd,
                f.counting.total,
                f.counting.even,
                f.counting.odd,
                f.series_total,
                f.series_difference,
            );
        }
        out
    }
}

fn check_one(
    k: u32,
    c: &CycleType,
    total: &EgfSeries,
    signed: &EgfSeries,
) -> Option<Counterexample> {
    let oracle = oracle_count_roots(k, c).expect("size checked by caller");
    let counting = count_roots(k, c);
    let series_total = total.egf_count(c).expect("type within truncation");
    let series_difference = signed.egf_count(c).expect("type within truncation");
    let agree = oracle == counting
        && BigInt::from(counting.total.clone()) == series_total
        && counting.difference() == series_difference;
    (!agree).then(|| Counterexample {
        k,
        cycle_type: c.clone(),
        oracle,
        counting,
        series_total,
        series_difference,
    })
}

/// Checks every cycle type of every `n ≤ max_n` for every `k` in `ks`.
///
/// Work is spread over the current rayon pool; the report does not depend
/// on the pool size.
pub fn verify(max_n: u32, ks: &[u32]) -> Result<VerifyReport, VerifyError> {
    if max_n as u64 > MAX_ORACLE_N {
        return Err(VerifyError::MaxNTooLarge(max_n));
    }
    if ks.is_empty() {
        return Err(VerifyError::NoK);
    }
    if ks.contains(&0) {
        return Err(VerifyError::ZeroK);
    }
    let types: Vec<(u32, Vec<CycleType>)> = (0..=max_n).map(|n| (n, partitions_of(n))).collect();
    let mut rows = Vec::new();
    let mut failures = Vec::new();
    for &k in ks {
        let total = build_total_root_series(k, max_n);
        let signed = build_signed_difference_series(k, max_n);
        for (n, cs) in &types {
            let bad: Vec<Counterexample> = cs
                .par_iter()
                .filter_map(|c| check_one(k, c, &total, &signed))
                .collect();
            rows.push(VerifyRow {
                k,
                n: *n,
                checked: cs.len(),
                passed: cs.len() - bad.len(),
            });
            failures.extend(bad);
        }
    }
    Ok(VerifyReport { rows, failures })
}
