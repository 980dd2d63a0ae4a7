//! The Bessel kernel `G_s`, the radial function on `R^d` whose Fourier
//! transform is `(1 + |ξ|²)^{-s/2}`:
//!
//! `G_s(x) = K_{(d-s)/2}(|x|) |x|^{(s-d)/2} / (2^{(s-2)/2} (2π)^{d/2} Γ(s/2))`.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::bessel::{scaled_bessel_k, MAX_ORDER, UNDERFLOW_ARG};
use super::gamma::{gamma, ln_gamma};
use crate::error::{domain, Result};
use crate::quadrature::{integrate, Tolerance};

/// Order `s` and dimension `d` of a Bessel kernel `G_s` on `R^d`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RadialKernelSpec {
    s: f64,
    d: u32,
}

impl RadialKernelSpec {
    pub fn new(s: f64, d: u32) -> Result<Self> {
        if !(s > 0.0) || !s.is_finite() {
            return domain(format!("kernel order must be finite and positive, got {s}"));
        }
        if d == 0 {
            return domain("dimension must be at least 1");
        }
        let spec = Self { s, d };
        if spec.bessel_order().abs() > MAX_ORDER {
            return domain(format!(
                "Bessel order (d - s)/2 = {} exceeds {MAX_ORDER}",
                spec.bessel_order()
            ));
        }
        Ok(spec)
    }

    pub fn s(&self) -> f64 {
        self.s
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    /// `α = (d - s)/2`, the order of the Bessel function in `G_s`.
    pub fn bessel_order(&self) -> f64 {
        (self.d as f64 - self.s) / 2.0
    }

    /// `1 / (2^{(s-2)/2} (2π)^{d/2} Γ(s/2))`.
    pub fn normalization(&self) -> f64 {
        let d = self.d as f64;
        let ln = -(self.s - 2.0) / 2.0 * 2f64.ln()
            - d / 2.0 * (2.0 * PI).ln()
            - ln_gamma(self.s / 2.0).expect("s > 0");
        ln.exp()
    }
}

/// Behaviour of `G_s` near the origin.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "class", rename_all = "snake_case")]
pub enum NearFieldClass {
    /// `G_s(x) ~ |x|^{s-d}` (`s < d`).
    PowerLaw { exponent: f64 },
    /// `G_s(x) ~ 1 + |log |x||` (`s = d`).
    Logarithmic,
    /// `G_s` is bounded (`s > d`).
    Bounded,
}

impl NearFieldClass {
    pub fn is_bounded(&self) -> bool {
        matches!(self, NearFieldClass::Bounded)
    }
}

pub fn near_field_class(spec: &RadialKernelSpec) -> NearFieldClass {
    let excess = spec.s - spec.d as f64;
    if excess < 0.0 {
        NearFieldClass::PowerLaw { exponent: excess }
    } else if excess == 0.0 {
        NearFieldClass::Logarithmic
    } else {
        NearFieldClass::Bounded
    }
}

/// `G_s(0) = Γ((s-d)/2) / ((4π)^{d/2} Γ(s/2))`, defined when `s > d`.
pub fn kernel_at_origin(spec: &RadialKernelSpec) -> Option<f64> {
    if !near_field_class(spec).is_bounded() {
        return None;
    }
    let d = spec.d as f64;
    let num = gamma((spec.s - d) / 2.0).ok()?;
    let den = (4.0 * PI).powf(d / 2.0) * gamma(spec.s / 2.0).ok()?;
    Some(num / den)
}

/// `G_s` at radius `r`.
///
/// At `r = 0` this is the finite limit when `s > d` and `+inf` otherwise,
/// so callers that need to distinguish the cases should consult
/// [`near_field_class`].
pub fn bessel_kernel(spec: &RadialKernelSpec, r: f64) -> Result<f64> {
    if !(r >= 0.0) {
        return domain(format!("radius must be nonnegative, got {r}"));
    }
    if r == 0.0 {
        return Ok(kernel_at_origin(spec).unwrap_or(f64::INFINITY));
    }
    if r.is_infinite() {
        return Ok(0.0);
    }
    // G = C K_{|ν|}(r) r^ν with ν = (s - d)/2
    let nu = -spec.bessel_order();
    let scaled = scaled_bessel_k(nu.abs(), r)?;
    let value = if nu >= 0.0 {
        scaled
    } else {
        scaled * r.powf(2.0 * nu)
    };
    if r > UNDERFLOW_ARG && value < f64::MIN_POSITIVE {
        return Ok(0.0);
    }
    Ok(spec.normalization() * value)
}

/// Calibrated envelope `C e^{-r/2}` dominating `G_s` on `r >= 2`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FarFieldBound {
    pub constant: f64,
}

impl FarFieldBound {
    /// Smallest radius where the envelope applies.
    pub const INNER_RADIUS: f64 = 2.0;

    /// `C = max_{r >= 2} G_s(r) e^{r/2}`, located by a dense scan of
    /// `[2, max(50, 2(s - d) + 10)]` followed by golden-section refinement.
    pub fn calibrate(spec: &RadialKernelSpec) -> Result<Self> {
        let weighted = |r: f64| -> Result<f64> { Ok(bessel_kernel(spec, r)? * (0.5 * r).exp()) };
        let upper = 50f64.max(2.0 * (spec.s - spec.d as f64) + 10.0);
        let samples = 2000;
        let step = (upper - Self::INNER_RADIUS) / samples as f64;
        let mut best_i = 0;
        let mut best = weighted(Self::INNER_RADIUS)?;
        for i in 1..=samples {
            let v = weighted(Self::INNER_RADIUS + i as f64 * step)?;
            if v > best {
                best = v;
                best_i = i;
            }
        }
        if best_i > 0 {
            let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
            let mut a = Self::INNER_RADIUS + (best_i as f64 - 1.0) * step;
            let mut b = (Self::INNER_RADIUS + (best_i as f64 + 1.0) * step).min(upper);
            for _ in 0..80 {
                let c = b - inv_phi * (b - a);
                let d = a + inv_phi * (b - a);
                if weighted(c)? > weighted(d)? {
                    b = d;
                } else {
                    a = c;
                }
            }
            best = best.max(weighted(0.5 * (a + b))?);
        }
        Ok(Self {
            constant: best * (1.0 + 1e-12),
        })
    }

    pub fn at(&self, r: f64) -> Result<f64> {
        if !(r >= Self::INNER_RADIUS) {
            return domain(format!("far-field bound applies for r >= 2, got {r}"));
        }
        Ok(self.constant * (-0.5 * r).exp())
    }
}

/// `C e^{-r/2}` with `C` calibrated for `spec`; see [`FarFieldBound`].
pub fn far_field_bound(spec: &RadialKernelSpec, r: f64) -> Result<f64> {
    if !(r >= FarFieldBound::INNER_RADIUS) {
        return domain(format!("far-field bound applies for r >= 2, got {r}"));
    }
    FarFieldBound::calibrate(spec)?.at(r)
}

/// Surface area `ω_{d-1} = 2 π^{d/2} / Γ(d/2)` of the unit sphere in `R^d`.
pub fn sphere_area(d: u32) -> f64 {
    let d = d as f64;
    2.0 * PI.powf(d / 2.0) / gamma(d / 2.0).expect("d >= 1")
}

/// `ω_{d-1} ∫_{r_lo}^{r_hi} G_s(r)^power r^{d-1} dr` for finite `power > 0`.
///
/// `r_lo = 0` is allowed; the integral is taken in `t = ln r` and the
/// lower cut is placed where the integrand has decayed below double
/// precision. If the integral diverges at the origin the result is merely
/// the (large) contribution down to that cut.
pub fn radial_power_integral(
    spec: &RadialKernelSpec,
    power: f64,
    r_lo: f64,
    r_hi: f64,
) -> Result<f64> {
    if !(power > 0.0) || !power.is_finite() {
        return domain(format!("power must be finite and positive, got {power}"));
    }
    if !(r_lo >= 0.0) || !(r_hi > r_lo) {
        return domain(format!("invalid radial range [{r_lo}, {r_hi}]"));
    }
    let d = spec.d as f64;
    let r_hi = r_hi
        .min(UNDERFLOW_ARG / power.min(1.0) + 50.0)
        .min(UNDERFLOW_ARG);
    // near the origin the integrand in t behaves like e^{t ((s-d)^- power + d)}
    let t_lo = if r_lo > 0.0 {
        r_lo.ln()
    } else {
        let rate = ((spec.s - d).min(0.0) * power + d).max(1e-3);
        (-40.0 / rate).max(-700.0)
    };
    let t_hi = r_hi.ln();
    let integrand = |t: f64| {
        let r = t.exp();
        match bessel_kernel(spec, r) {
            Ok(g) => g.powf(power) * (d * t).exp(),
            Err(_) => f64::NAN,
        }
    };
    let tol = Tolerance {
        abs: 1e-300,
        rel: 1e-13,
        max_intervals: 20_000,
    };
    let split = FarFieldBound::INNER_RADIUS.ln();
    let mut total = 0.0;
    if t_lo < split {
        total += integrate(integrand, t_lo, split.min(t_hi), tol)?.value;
    }
    if t_hi > split {
        total += integrate(integrand, split.max(t_lo), t_hi, tol)?.value;
    }
    Ok(sphere_area(spec.d) * total)
}

/// `‖G_s‖_{L^exponent(R^d)}`, `+inf` when the norm diverges.
/// `exponent = +inf` gives the supremum `G_s(0)`.
pub fn kernel_lp_norm(spec: &RadialKernelSpec, exponent: f64) -> Result<f64> {
    if !(exponent >= 1.0) {
        return domain(format!("Lebesgue exponent must be >= 1, got {exponent}"));
    }
    if exponent.is_infinite() {
        return Ok(kernel_at_origin(spec).unwrap_or(f64::INFINITY));
    }
    // G_s ∈ L^e iff s > d(1 - 1/e)
    let d = spec.d as f64;
    if spec.s <= d * (1.0 - 1.0 / exponent) {
        return Ok(f64::INFINITY);
    }
    Ok(radial_power_integral(spec, exponent, 0.0, f64::INFINITY)?.powf(1.0 / exponent))
}
