//! Exact Hopf-algebra computations over Q(a): matched pairs of actions,
//! Yang–Baxter operators built from them, transmutation, and coquasitriangular
//! forms.

pub mod braiding;
pub mod cli;
pub mod cqt;
pub mod error;
pub mod hopf;
pub mod json;
pub mod linalg;
pub mod matched_pair;
pub mod report;
pub mod scalar;
pub mod transmutation;

pub use error::{Error, Result};
pub use hopf::{verify_hopf, HopfAlgebra};
pub use linalg::{Matrix, SparseVec, Tensor3, Vector};
pub use report::{AxiomReport, Check, Witness};
pub use scalar::Scalar;
