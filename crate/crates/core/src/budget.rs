use serde::{Deserialize, Serialize};

use crate::bicliques::DEFAULT_BICLIQUE_CAP;
use crate::error::{Error, Result};

/// Limits for iterating `KB_e`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budgets {
    pub max_steps: usize,
    /// Largest iterate (vertex count) that will be built.
    pub max_vertices: usize,
    /// Largest biclique family enumerated in one step.
    pub max_bicliques: usize,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets {
            max_steps: 20,
            max_vertices: 5_000,
            max_bicliques: DEFAULT_BICLIQUE_CAP,
        }
    }
}

impl Budgets {
    pub fn validate(&self) -> Result<()> {
        if self.max_steps == 0 || self.max_vertices == 0 || self.max_bicliques == 0 {
            return Err(Error::InvalidParameter {
                name: "budgets".into(),
                message: "all budgets must be positive".into(),
            });
        }
        Ok(())
    }

    /// Cap handed to the biclique enumerator: one past the largest iterate
    /// we are willing to build, so overflow is detected without finishing
    /// the enumeration.
    pub(crate) fn enumeration_cap(&self) -> usize {
        self.max_bicliques.min(self.max_vertices.saturating_add(1))
    }
}
