//! Special functions and quadrature used by every analytic formula.
//!
//! All routines are pure functions of their arguments and safe to call
//! concurrently.

mod bessel;
mod erf;
mod gamma;
mod meijer;
mod parabolic;
mod quadrature;

pub use bessel::bessel_k;
pub use erf::{erf, erf_diff, erf_inv, erfc, erfcx, normal_cdf, normal_quantile, q_function};
pub use gamma::{gamma, ln_gamma};
pub use meijer::{meijer_g_1330, MellinBarnesContour, MIN_NODE_COUNT, MIN_POLE_DISTANCE};
pub use parabolic::{
    parabolic_cylinder_d, parabolic_cylinder_d_scaled, MAX_ABS_ARGUMENT as PCF_MAX_ABS_ARGUMENT,
    MIN_ORDER as PCF_MIN_ORDER,
};
pub use quadrature::{integrate_semi_infinite, Integral, Quadrature};
