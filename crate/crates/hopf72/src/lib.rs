//! Exact construction and verification of the 72-dimensional Hopf algebras
//! `𝒜_[a]` attached to `S_3`, their representations and Ext quivers.
//!
//! Everything runs over `ℚ` with exact rational arithmetic.
//!
//! ```text
//! cargo run --example build_algebra
//! cargo run --example action_crosscheck
//! cargo run --example hopf_structure
//! cargo run --example simple_modules
//! cargo run --release --example verma_lattices -- 2,-1,-1 "(12)"
//! cargo run --release --example ext_quiver
//! cargo run --release --example deformation
//! ```

pub mod cli;
pub mod extquiver;
pub mod hopf;
pub mod linalg;
pub mod presentation;
pub mod repcore;
pub mod scalar;
pub mod symgroup;

pub use scalar::Q;
pub use symgroup::{ParamVector, Perm, Regime, RegimeTag, SymGroup, Transposition};

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid parameter: {0}")]
    Param(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("completion failed: {0}")]
    Completion(String),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("linear algebra: {0}")]
    Linear(String),
}

pub type Result<T> = std::result::Result<T, Error>;
