//! Applications: minimax of two Rayleigh quotients and the distance to
//! instability of a stable matrix.

mod instability;
mod qcqp;

pub use instability::{augmented_pair, distance_to_instability, sigma_min, spectral_abscissa, StabilityOptions, StabilityResult};
pub use qcqp::{bottom_curve_slopes, qcqp_from_constraints, qcqp_minimax, MinimaxCase, MinimaxResult};
