//! Exact independence polynomials of generalized Petersen graphs GP(n,k).
//!
//! The polynomial is computed as the trace of the `n`-th power of a
//! `2^(k+1)`-dimensional transfer matrix over `Z[x]`, checked against
//! brute-force enumeration, and its roots are located numerically in
//! extended precision while real-rootedness is decided exactly with Sturm
//! sequences.

pub mod analysis;
pub mod cache;
pub mod cli;
pub mod error;
pub mod exact_poly;
pub mod gp_graph;
pub mod oracle;
pub mod plot;
pub mod roots;
pub mod transfer;

pub use error::Error;
pub use exact_poly::{IntPoly, PolyMatrix};
pub use gp_graph::{build_gp, validate_params, GpParams, Graph};
pub use roots::{RootConfig, RootReport};
pub use transfer::independence_polynomial;
