//! Certified optima and enumeration budgets shared by every duality.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::Subspace;
use crate::relation::{apply_space, MatrixSpace};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    /// Primal and dual certificates verify and have equal size.
    Proved,
    /// Only the primal side is certified; the value is a lower bound.
    LowerBoundOnly,
}

/// An optimum value with a primal witness and a dual witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertifiedValue<P, D> {
    pub value: usize,
    pub primal: P,
    pub dual: D,
    pub status: Status,
}

impl<P, D> CertifiedValue<P, D> {
    pub fn proved(value: usize, primal: P, dual: D) -> Self {
        CertifiedValue {
            value,
            primal,
            dual,
            status: Status::Proved,
        }
    }

    pub fn is_proved(&self) -> bool {
        self.status == Status::Proved
    }
}

/// Cap on the number of generators over which subsets are enumerated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    pub max_generators: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_generators: 20 }
    }
}

impl Budget {
    pub fn new(max_generators: usize) -> Self {
        Budget { max_generators }
    }

    pub fn check(&self, needed: usize) -> Result<()> {
        // 2^64 subsets cannot be indexed anyway
        if needed > self.max_generators || needed >= 64 {
            return Err(Error::Budget {
                needed,
                limit: self.max_generators.min(63),
            });
        }
        Ok(())
    }
}

/// A subspace `E` together with `dim V[E]`; its defect is `dim E - dim V[E]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DefectCertificate {
    pub e: Subspace,
    pub image_dim: usize,
}

impl DefectCertificate {
    pub fn new(space: &MatrixSpace, e: Subspace) -> Result<Self> {
        let image_dim = apply_space(space, &e)?.dim();
        Ok(DefectCertificate { e, image_dim })
    }

    /// `dim E - dim V[E]`, clamped at zero.
    pub fn defect(&self) -> usize {
        self.e.dim().saturating_sub(self.image_dim)
    }

    pub fn is_shrunk(&self) -> bool {
        self.image_dim < self.e.dim()
    }

    pub fn verify(&self, space: &MatrixSpace) -> bool {
        apply_space(space, &self.e)
            .map(|img| img.dim() == self.image_dim)
            .unwrap_or(false)
    }
}
