//! Summary statistics and the paired comparison used to rank strategies.

use serde::Serialize;
use statrs::distribution::{ContinuousCDF, StudentsT};

use crate::error::{Error, Result};

pub fn mean(xs: &[f64]) -> f64 {
    if xs.is_empty() {
        return 0.0;
    }
    xs.iter().sum::<f64>() / xs.len() as f64
}

/// Sample standard deviation (n - 1 denominator); 0 for fewer than two values.
pub fn sample_std(xs: &[f64]) -> f64 {
    if xs.len() < 2 {
        return 0.0;
    }
    let m = mean(xs);
    let ss = xs.iter().map(|x| (x - m).powi(2)).sum::<f64>();
    (ss / (xs.len() - 1) as f64).sqrt()
}

/// Standard error of the mean.
pub fn standard_error(xs: &[f64]) -> f64 {
    if xs.is_empty() {
        return 0.0;
    }
    sample_std(xs) / (xs.len() as f64).sqrt()
}

pub fn mean_and_standard_error(xs: &[f64]) -> (f64, f64) {
    (mean(xs), standard_error(xs))
}

/// One-sided paired t comparison of two samples taken under matched seeds.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct PairedComparison {
    pub mean_diff: f64,
    pub std_error: f64,
    pub t_stat: f64,
    pub df: f64,
    /// P(T >= t) under the null hypothesis of zero mean difference.
    pub p_greater: f64,
}

impl PairedComparison {
    /// True when the mean difference is positive at the given one-sided level,
    /// e.g. `significant_at(0.05)` for 95% confidence.
    pub fn significant_at(&self, alpha: f64) -> bool {
        self.mean_diff > 0.0 && self.p_greater < alpha
    }
}

/// Paired comparison of `xs` against `ys` (positive favours `xs`).
pub fn paired_comparison(xs: &[f64], ys: &[f64]) -> Result<PairedComparison> {
    if xs.len() != ys.len() {
        return Err(Error::InvalidParameter(format!(
            "paired samples differ in length: {} vs {}",
            xs.len(),
            ys.len()
        )));
    }
    if xs.len() < 2 {
        return Err(Error::InvalidParameter(
            "paired comparison needs at least two pairs".into(),
        ));
    }
    let diffs: Vec<f64> = xs.iter().zip(ys).map(|(x, y)| x - y).collect();
    let (mean_diff, std_error) = mean_and_standard_error(&diffs);
    let df = (diffs.len() - 1) as f64;
    let (t_stat, p_greater) = if std_error == 0.0 {
        // All pairs move together: the sign alone decides.
        match mean_diff.partial_cmp(&0.0) {
            Some(std::cmp::Ordering::Greater) => (f64::INFINITY, 0.0),
            Some(std::cmp::Ordering::Less) => (f64::NEG_INFINITY, 1.0),
            _ => (0.0, 0.5),
        }
    } else {
        let t = mean_diff / std_error;
        let dist = StudentsT::new(0.0, 1.0, df)
            .map_err(|e| Error::InvalidParameter(format!("t distribution: {e}")))?;
        (t, 1.0 - dist.cdf(t))
    };
    Ok(PairedComparison {
        mean_diff,
        std_error,
        t_stat,
        df,
        p_greater,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn mean_and_std_of_known_sample() {
        let xs = [2.0, 4.0, 4.0, 4.0, 5.0, 5.0, 7.0, 9.0];
        assert_relative_eq!(mean(&xs), 5.0);
        assert_relative_eq!(sample_std(&xs), (32.0f64 / 7.0).sqrt());
    }

    #[test]
    fn degenerate_sizes() {
        assert_eq!(mean(&[]), 0.0);
        assert_eq!(sample_std(&[3.0]), 0.0);
        assert_eq!(standard_error(&[]), 0.0);
    }

    #[test]
    fn paired_comparison_matches_hand_computation() {
        // diffs = [1, 2, 3]: mean 2, sd 1, se 1/sqrt(3), t = 2*sqrt(3) ~ 3.4641
        let c = paired_comparison(&[2.0, 4.0, 6.0], &[1.0, 2.0, 3.0]).unwrap();
        assert_relative_eq!(c.mean_diff, 2.0);
        assert_relative_eq!(c.t_stat, 2.0 * 3.0f64.sqrt(), max_relative = 1e-12);
        assert_eq!(c.df, 2.0);
        // 3.46 on t(2) sits between the 95% (2.92) and 99% (6.96) one-sided points.
        assert!(c.p_greater > 0.01 && c.p_greater < 0.05, "p = {}", c.p_greater);
    }

    #[test]
    fn identical_samples_are_a_wash() {
        let c = paired_comparison(&[1.0, 2.0], &[1.0, 2.0]).unwrap();
        assert_eq!(c.p_greater, 0.5);
        assert!(!c.significant_at(0.05));
    }

    #[test]
    fn constant_positive_shift_is_certain() {
        let c = paired_comparison(&[2.0, 3.0], &[1.0, 2.0]).unwrap();
        assert_eq!(c.p_greater, 0.0);
        assert!(c.significant_at(0.01));
    }

    #[test]
    fn mismatched_lengths_rejected() {
        assert!(paired_comparison(&[1.0], &[1.0, 2.0]).is_err());
    }
}
