//! Exact linear and matrix versions of the classical min-max theorems of
//! Hall, Kőnig, Dilworth and Menger, and a linear Lindström–Gessel–Viennot
//! identity.
//!
//! Every optimum is returned as a [`CertifiedValue`]: a value together with a
//! primal witness and a dual witness whose sizes meet. All arithmetic is exact
//! over the rationals.

pub mod certificate;
pub mod classical;
pub mod demo;
pub mod dilworth;
pub mod error;
pub mod generate;
pub mod io;
pub mod lgv;
pub mod linalg;
pub mod matching;
pub mod menger;
pub mod ncrank;
pub mod relation;
pub mod sampler;
mod subsets;

pub use certificate::{Budget, CertifiedValue, DefectCertificate, Status};
pub use error::{Error, Result};
pub use sampler::GenericSampler;
