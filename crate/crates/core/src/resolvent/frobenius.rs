use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::galois::{odd_primes, reduce_good};
use super::modp;
use super::upoly;
use crate::error::Error;
use crate::exactnum::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FrobeniusRow {
    pub prime: u64,
    pub degree_multiset: Vec<usize>,
}

/// Factor-degree patterns of f modulo good primes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CycleTypeReport {
    pub rows: Vec<FrobeniusRow>,
    /// Pattern such as "1,1,2,4" mapped to how often it occurred.
    pub aggregate: BTreeMap<String, usize>,
    pub skipped_primes: Vec<u64>,
}

pub fn multiset_key(m: &[usize]) -> String {
    m.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(",")
}

impl CycleTypeReport {
    pub fn patterns(&self) -> BTreeSet<Vec<usize>> {
        self.rows.iter().map(|r| r.degree_multiset.clone()).collect()
    }

    /// Observed patterns that are not cycle types in `allowed`.
    pub fn outside(&self, allowed: &BTreeSet<Vec<usize>>) -> Vec<Vec<usize>> {
        self.patterns().into_iter().filter(|m| !allowed.contains(m)).collect()
    }
}

/// Degree patterns for the first `prime_count` odd primes of good
/// reduction. Primes are processed in parallel batches; output order is by
/// prime.
pub fn frobenius_report(f: &[Rational], prime_count: usize) -> Result<CycleTypeReport, Error> {
    let n = upoly::degree(f).ok_or_else(|| Error::Invalid("zero polynomial".into()))?;
    if n == 0 {
        return Err(Error::Invalid("constant polynomial".into()));
    }
    if upoly::squarefree_part(f).len() != n + 1 {
        return Err(Error::Domain("frobenius_report needs a squarefree polynomial".into()));
    }
    let workers = std::thread::available_parallelism().map_or(4, |n| n.get()).min(16);
    let mut rows = Vec::new();
    let mut skipped = Vec::new();
    let mut primes = odd_primes();
    let mut tried = 0usize;
    while rows.len() < prime_count {
        let batch: Vec<u64> = primes.by_ref().take(workers * 8).collect();
        tried += batch.len();
        let results: Vec<(u64, Option<Vec<usize>>)> = std::thread::scope(|s| {
            let handles: Vec<_> = batch
                .chunks(8)
                .map(|chunk| {
                    s.spawn(move || {
                        chunk
                            .iter()
                            .map(|&p| (p, reduce_good(f, p).map(|fp| modp::factor_degrees(&fp, p))))
                            .collect::<Vec<_>>()
                    })
                })
                .collect();
            handles.into_iter().flat_map(|h| h.join().expect("worker panicked")).collect()
        });
        for (p, m) in results {
            if rows.len() >= prime_count {
                break;
            }
            match m {
                Some(m) => rows.push(FrobeniusRow { prime: p, degree_multiset: m }),
                None => skipped.push(p),
            }
        }
        if rows.is_empty() && tried > 10_000 {
            return Err(Error::Domain("no prime of good reduction found".into()));
        }
    }
    let mut aggregate = BTreeMap::new();
    for r in &rows {
        *aggregate.entry(multiset_key(&r.degree_multiset)).or_insert(0) += 1;
    }
    Ok(CycleTypeReport { rows, aggregate, skipped_primes: skipped })
}
