//! Periodized-grid Fourier calculus.
//!
//! All transforms follow `f̂(ξ) = ∫ f(x) e^{-i⟨x,ξ⟩} dx` with `(2π)^{-d}` on
//! the inverse, so that `Ĝ_s(ξ) = (1 + |ξ|²)^{-s/2}` and `∫ G_s = 1`.

mod fft;
mod functions;
mod grid;
pub mod io;
mod ops;

pub use fft::{dft, idft, Spectrum};
pub use functions::TestFunction;
pub use grid::{Field, GridSpec, DEFAULT_POINT_BUDGET};
pub use ops::{
    bessel_norm, bessel_potential, fasshauer_norm, kernel_convolution, kernel_section, lp_norm,
    pairing, periodic_kernel_samples, MultiplierOrder, SectionMethod,
};
