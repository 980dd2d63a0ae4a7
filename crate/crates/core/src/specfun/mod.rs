//! Scalar special functions behind the Bessel kernel.

mod bessel;
mod gamma;
mod kernel;

pub use bessel::{bessel_k, scaled_bessel_k, MAX_ORDER, SERIES_SWITCH, UNDERFLOW_ARG};
pub use gamma::{gamma, ln_gamma};
pub use kernel::{
    bessel_kernel, far_field_bound, kernel_at_origin, kernel_lp_norm, near_field_class,
    radial_power_integral, sphere_area, FarFieldBound, NearFieldClass, RadialKernelSpec,
};
