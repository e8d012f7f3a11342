//! Exact tools for intersecting uniform set families.
//!
//! The crate computes shadows, checks Katona's intersecting shadow
//! inequality, runs the complementation argument for the Erdős–Ko–Rado bound
//! as a certificate-producing pipeline, certifies the linear-algebra
//! reformulations by exact integer rank, and supplies brute-force oracles
//! (maximum-clique search, exhaustive subfamily enumeration, seeded random
//! families) to cross-check all of it.

pub mod algebra;
pub mod cli;
pub mod ekr_pipeline;
pub mod error;
pub mod oracle;
pub mod set_core;
pub mod shadow;

pub use error::{Error, Result};
