//! Exhaustive and seeded-random sweeps over label assignments.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest number of assignments an exhaustive sweep will enumerate.
pub const EXHAUSTIVE_LIMIT: u64 = 5_000_000;

/// Outcome of evaluating a residual over many assignments.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepReport {
    pub max_residual: f64,
    pub instances: usize,
    /// Assignment attaining `max_residual`, first in sweep order on ties.
    pub worst: Option<Vec<usize>>,
}

impl SweepReport {
    pub fn empty() -> Self {
        SweepReport { max_residual: 0.0, instances: 0, worst: None }
    }

    pub fn passes(&self, tol: f64) -> bool {
        self.max_residual <= tol
    }

    pub fn merge(mut self, other: SweepReport) -> SweepReport {
        if other.max_residual > self.max_residual || self.worst.is_none() {
            self.max_residual = self.max_residual.max(other.max_residual);
            if other.worst.is_some() {
                self.worst = other.worst;
            }
        }
        self.instances += other.instances;
        self
    }
}

/// All `labels^slots` assignments in lexicographic order.
pub fn exhaustive(slots: usize, labels: usize) -> Result<Vec<Vec<usize>>> {
    let total = (labels as u64)
        .checked_pow(slots as u32)
        .filter(|&t| t <= EXHAUSTIVE_LIMIT)
        .ok_or_else(|| Error::InvalidArgument(format!("{labels}^{slots} assignments is too many to enumerate")))?;
    Ok((0..total)
        .map(|mut code| {
            let mut a = vec![0; slots];
            for slot in a.iter_mut().rev() {
                *slot = (code % labels as u64) as usize;
                code /= labels as u64;
            }
            a
        })
        .collect())
}

/// `count` uniformly random assignments from a ChaCha stream seeded by `seed`.
pub fn sample(slots: usize, labels: usize, count: usize, seed: u64) -> Vec<Vec<usize>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| (0..slots).map(|_| rng.gen_range(0..labels)).collect()).collect()
}

/// Evaluates `residual` on every assignment in parallel. The reduction runs
/// in input order, so the report does not depend on scheduling.
pub fn run<F>(assignments: &[Vec<usize>], residual: F) -> Result<SweepReport>
where
    F: Fn(&[usize]) -> Result<f64> + Sync,
{
    let values: Vec<f64> = assignments.par_iter().map(|a| residual(a)).collect::<Result<_>>()?;
    let mut report = SweepReport::empty();
    for (a, &r) in assignments.iter().zip(&values) {
        // NaN counts as the worst possible residual
        let r = if r.is_nan() { f64::INFINITY } else { r };
        if report.worst.is_none() || r > report.max_residual {
            report.max_residual = r;
            report.worst = Some(a.clone());
        }
    }
    report.instances = values.len();
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exhaustive_is_lexicographic() {
        let all = exhaustive(2, 3).unwrap();
        assert_eq!(all.len(), 9);
        assert_eq!(all[0], vec![0, 0]);
        assert_eq!(all[1], vec![0, 1]);
        assert_eq!(all[8], vec![2, 2]);
        assert_eq!(exhaustive(0, 3).unwrap(), vec![Vec::<usize>::new()]);
        assert!(exhaustive(40, 3).is_err());
    }

    #[test]
    fn sampling_is_seeded() {
        assert_eq!(sample(5, 3, 10, 7), sample(5, 3, 10, 7));
        assert_ne!(sample(5, 3, 10, 7), sample(5, 3, 10, 8));
        assert!(sample(5, 3, 10, 7).iter().flatten().all(|&l| l < 3));
    }

    #[test]
    fn run_reports_first_worst() {
        let a = vec![vec![0], vec![3], vec![1], vec![3]];
        let r = run(&a, |x| Ok(x[0] as f64)).unwrap();
        assert_eq!(r.max_residual, 3.0);
        assert_eq!(r.instances, 4);
        assert_eq!(r.worst, Some(vec![3]));
        assert!(!run(&a, |x| Ok(if x[0] == 1 { f64::NAN } else { 0.0 })).unwrap().passes(1.0));
    }
}
