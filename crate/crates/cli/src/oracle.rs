//! Exhaustive comparison of the core-based divisibility criterion with the
//! hook-length valuation of the degree.

use blockwitness_core::blocks::macdonald_p_divisible;
use blockwitness_core::character::degree_valuation;
use blockwitness_core::{Error, Partition};
use serde::Serialize;

use crate::formats::SCHEMA;

pub const DEFAULT_N_MAX_BUDGET: usize = 24;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub partition: Vec<usize>,
    pub p: u64,
    pub by_cores: bool,
    pub by_valuation: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleReport {
    pub schema: &'static str,
    pub n_max: usize,
    pub primes: Vec<u64>,
    pub checked: usize,
    pub divisible: usize,
    pub mismatches: Vec<Mismatch>,
}

impl OracleReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Every `λ ⊢ n` for `n ≤ n_max`, every prime in `primes`.
pub fn run_oracle(n_max: usize, primes: &[u64]) -> Result<OracleReport, Error> {
    let mut report = OracleReport {
        schema: SCHEMA,
        n_max,
        primes: primes.to_vec(),
        checked: 0,
        divisible: 0,
        mismatches: Vec::new(),
    };
    for n in 1..=n_max {
        for lambda in Partition::all(n) {
            for &p in primes {
                let by_cores = macdonald_p_divisible(&lambda, p)?;
                let by_valuation = degree_valuation(&lambda, p)? >= 1;
                report.checked += 1;
                report.divisible += usize::from(by_valuation);
                if by_cores != by_valuation {
                    log::error!("{lambda} p={p}: cores say {by_cores}, valuation says {by_valuation}");
                    report.mismatches.push(Mismatch {
                        partition: lambda.parts().to_vec(),
                        p,
                        by_cores,
                        by_valuation,
                    });
                }
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_runs() {
        let r = run_oracle(0, &[3]).unwrap();
        assert!(r.passed());
        assert_eq!(r.checked, 0);
        let r = run_oracle(8, &[2, 3, 5]).unwrap();
        assert!(r.passed());
        // p(1) + … + p(8) = 1+2+3+5+7+11+15+22
        assert_eq!(r.checked, 66 * 3);
        assert!(matches!(run_oracle(3, &[4]), Err(Error::NotPrime(4))));
    }
}
