//! Integer-order Bessel kernels in double precision.
//!
//! `K` is only available in exponentially scaled form, e^x K_n(x); deep wells
//! push ξR past 160 where the unscaled value is far below 1e-70.

mod asymptotic;
mod bessel_ik;
mod bessel_j;

pub use bessel_ik::{bessel_i, bessel_k_scaled, bessel_k_scaled_pair};
pub use bessel_j::{bessel_j, bessel_j_pair};

/// Euler–Mascheroni constant.
pub(crate) const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;
