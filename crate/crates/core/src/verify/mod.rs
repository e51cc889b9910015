//! Exhaustive sweeps that compare closed forms against independent
//! computations. Each check counts the instances it examined and keeps the
//! first counterexample in canonical input order, so reports do not depend
//! on the number of worker threads.

mod fibers;
mod order;
mod sym;

pub use fibers::fibers;
pub use order::{order_props, OrderConfig};
pub use sym::{factorization, pieri_sum, product_support, top_degree};

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::{Error, Result};

/// A failed instance of a named check.
#[derive(Debug, Clone, PartialEq)]
pub struct Counterexample {
    pub check: &'static str,
    pub witness: Value,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CheckReport {
    pub name: &'static str,
    pub instances: u64,
    /// Instances outside the range where the check is decidable.
    pub skipped: u64,
    pub counterexample: Option<Value>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepReport {
    pub sweep: &'static str,
    pub k: usize,
    pub bound: usize,
    pub checks: Vec<CheckReport>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.counterexample.is_none())
    }

    pub fn instances(&self) -> u64 {
        self.checks.iter().map(|c| c.instances).sum()
    }

    pub fn first_counterexample(&self) -> Option<Counterexample> {
        self.checks.iter().find_map(|c| {
            c.counterexample.clone().map(|witness| Counterexample {
                check: c.name,
                witness,
            })
        })
    }

    pub fn to_json(&self) -> Value {
        let checks: Vec<Value> = self
            .checks
            .iter()
            .map(|c| {
                json!({
                    "name": c.name,
                    "instances": c.instances,
                    "skipped": c.skipped,
                    "passed": c.counterexample.is_none(),
                    "counterexample": c.counterexample,
                })
            })
            .collect();
        json!({
            "sweep": self.sweep,
            "k": self.k,
            "bound": self.bound,
            "passed": self.passed(),
            "checks": checks,
        })
    }
}

/// Per-item accumulator handed to check bodies.
#[derive(Debug, Default)]
pub(crate) struct Tally {
    instances: u64,
    skipped: u64,
    witness: Option<Value>,
}

impl Tally {
    pub(crate) fn check(&mut self, ok: bool, witness: impl FnOnce() -> Value) {
        self.instances += 1;
        if !ok && self.witness.is_none() {
            self.witness = Some(witness());
        }
    }

    pub(crate) fn skip(&mut self) {
        self.skipped += 1;
    }
}

/// Runs `body` over `items` in parallel and merges the tallies in input
/// order.
pub(crate) fn run<T: Sync>(
    name: &'static str,
    items: &[T],
    body: impl Fn(&T, &mut Tally) -> Result<()> + Sync,
) -> Result<CheckReport> {
    let tallies: Vec<Tally> = items
        .par_iter()
        .map(|item| {
            let mut t = Tally::default();
            body(item, &mut t)?;
            Ok(t)
        })
        .collect::<Result<_>>()?;
    let mut report = CheckReport {
        name,
        instances: 0,
        skipped: 0,
        counterexample: None,
    };
    for t in tallies {
        report.instances += t.instances;
        report.skipped += t.skipped;
        if report.counterexample.is_none() {
            report.counterexample = t.witness;
        }
    }
    Ok(report)
}

/// Runs `f` on a dedicated pool with `jobs` worker threads (`0` lets the
/// pool decide).
pub fn with_jobs<R: Send>(jobs: usize, f: impl FnOnce() -> R + Send) -> Result<R> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::Precondition(format!("thread pool: {e}")))?;
    Ok(pool.install(f))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_counterexample_follows_input_order() {
        let items: Vec<u32> = (0..200).collect();
        let report = run("odd", &items, |&i, t| {
            if i % 7 == 0 {
                t.skip();
            }
            t.check(i < 50 || i % 2 == 0, || json!(i));
            Ok(())
        })
        .unwrap();
        assert_eq!(report.instances, 200);
        assert_eq!(report.skipped, 29);
        assert_eq!(report.counterexample, Some(json!(51)));
    }

    #[test]
    fn errors_propagate() {
        let items = [1, 2, 3];
        let out = run("err", &items, |&i, _| {
            if i == 2 {
                Err(Error::Precondition("boom".into()))
            } else {
                Ok(())
            }
        });
        assert!(out.is_err());
    }

    #[test]
    fn sweep_report_summary() {
        let report = SweepReport {
            sweep: "demo",
            k: 2,
            bound: 3,
            checks: vec![
                CheckReport {
                    name: "a",
                    instances: 3,
                    skipped: 0,
                    counterexample: None,
                },
                CheckReport {
                    name: "b",
                    instances: 4,
                    skipped: 1,
                    counterexample: Some(json!({"x": 1})),
                },
            ],
        };
        assert!(!report.passed());
        assert_eq!(report.instances(), 7);
        assert_eq!(report.first_counterexample().unwrap().check, "b");
        assert_eq!(report.to_json()["passed"], json!(false));
    }
}
