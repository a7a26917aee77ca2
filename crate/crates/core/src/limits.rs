use crate::error::{Error, Result};

/// Resource guards for the enumerative operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest `n` for which all `n!` lex orders may be enumerated.
    pub max_factorial_dim: usize,
    /// Largest grid size `k^n` whose subsets a census may enumerate.
    pub max_census_cells: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_factorial_dim: 8,
            max_census_cells: 16,
        }
    }
}

impl Limits {
    /// Parses an override such as `"9"`, `"census=20"` or `"factorial=9,census=20"`.
    /// A bare integer sets the factorial guard.
    pub fn with_override(mut self, spec: &str) -> Result<Self> {
        for part in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let bad = || Error::Domain(format!("bad guard override `{part}`"));
            match part.split_once('=') {
                None => self.max_factorial_dim = part.parse().map_err(|_| bad())?,
                Some(("factorial", v)) => {
                    self.max_factorial_dim = v.trim().parse().map_err(|_| bad())?
                }
                Some(("census", v)) => {
                    self.max_census_cells = v.trim().parse().map_err(|_| bad())?
                }
                Some(_) => return Err(bad()),
            }
        }
        Ok(self)
    }

    pub(crate) fn check_factorial(&self, n: usize) -> Result<()> {
        if n > self.max_factorial_dim {
            return Err(Error::GuardExceeded {
                what: "dimension n for n! lex orders",
                value: n,
                limit: self.max_factorial_dim,
            });
        }
        Ok(())
    }
}
