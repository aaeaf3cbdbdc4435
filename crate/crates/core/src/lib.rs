//! Two-dimensional eigenvalue problems of Hermitian matrix pairs.
//!
//! Given Hermitian `A` and indefinite Hermitian `C`, find real `(mu, lambda)`
//! and unit `x` with `(A - mu C) x = lambda x` and `x^H C x = 0`. The solutions
//! sit at critical points and crossings of the sorted eigencurves of
//! `A - mu C`, which links the problem to eigenvalue optimization over `mu`.
//!
//! Modules:
//!
//! - [`hermpair`]: validated instances, pencil evaluation, certification.
//! - [`eigencurve`]: sorted eigencurves, degenerate clusters, one-sided
//!   derivatives and asymptotes.
//! - [`solver2x2`]: closed-form solutions for `n = 2`.
//! - [`solver`]: extremal solves, interior scan, bounds and regularity.
//! - [`apps`]: minimax Rayleigh quotients and distance to instability.
//! - [`cli`]: file formats and the command implementations behind the
//!   `twodevp` binary.
//!
//! Runnable walkthroughs live in `examples/`.

pub mod apps;
pub mod cli;
pub mod eigencurve;
mod error;
pub mod hermpair;
mod search;
pub mod solver;
pub mod solver2x2;

pub use error::{Error, Result};
pub use hermpair::{certify, validate_pair, HermitianMatrix, HermitianPair, Tolerances, TwoDEigentriple, C64};
