use crate::{Error, Result};

/// Knobs for the general solver. Numerical tolerances live on the pair.
#[derive(Debug, Clone, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct SolveOptions {
    /// Grid size of the interior scan over the mu-box.
    pub grid_points: usize,
    /// Resolution in `mu` for golden-section refinement and deduplication.
    pub refine_tol: f64,
    /// Iteration cap for bisection and golden-section loops.
    pub max_bisect: usize,
    /// Replaces the computed mu-box.
    pub mu_box: Option<(f64, f64)>,
    /// Seed of the regularity probe.
    pub seed: u64,
}

impl Default for SolveOptions {
    fn default() -> Self {
        Self { grid_points: 2000, refine_tol: 1e-9, max_bisect: 200, mu_box: None, seed: 0x2DE5 }
    }
}

impl SolveOptions {
    pub fn validate(&self) -> Result<()> {
        if self.grid_points < 3 {
            return Err(Error::InvalidOption(format!("grid_points must be at least 3, got {}", self.grid_points)));
        }
        if !(self.refine_tol > 0.0 && self.refine_tol.is_finite()) {
            return Err(Error::InvalidOption(format!("refine_tol must be positive, got {}", self.refine_tol)));
        }
        if self.max_bisect == 0 {
            return Err(Error::InvalidOption("max_bisect must be positive".into()));
        }
        if let Some((lo, hi)) = self.mu_box {
            if !(lo.is_finite() && hi.is_finite() && lo < hi) {
                return Err(Error::InvalidOption(format!("mu_box must satisfy lo < hi, got [{lo}, {hi}]")));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_are_valid() {
        SolveOptions::default().validate().unwrap();
    }

    #[test]
    fn rejects_bad_values() {
        let bad = [
            SolveOptions { grid_points: 2, ..Default::default() },
            SolveOptions { refine_tol: 0.0, ..Default::default() },
            SolveOptions { refine_tol: f64::NAN, ..Default::default() },
            SolveOptions { max_bisect: 0, ..Default::default() },
            SolveOptions { mu_box: Some((1.0, 1.0)), ..Default::default() },
        ];
        for o in bad {
            assert!(matches!(o.validate(), Err(Error::InvalidOption(_))), "{o:?}");
        }
    }
}
