//! Gaussian test functions and their dilation families.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::grid::{Field, GridSpec};
use crate::error::{config, domain, Result};

/// A member of the centred Gaussian family built from `φ(x) = e^{-a|x|²}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum TestFunction {
    /// `φ(x) = e^{-a|x|²}`.
    Gaussian { a: f64 },
    /// `h_R(x) = φ(x/R)`.
    Dilated { a: f64, r: f64 },
    /// `h_ε(x) = ε^{-d} φ₁(x/ε)` with `φ₁ = (a/π)^{d/2} φ` of unit mass.
    Mollifier { a: f64, eps: f64 },
    /// `h_n(x) = n^{-d/p} φ(x/n)`, constant in `L^p`.
    Rescaled { a: f64, n: f64, p: f64 },
}

impl TestFunction {
    fn a(&self) -> f64 {
        match *self {
            TestFunction::Gaussian { a }
            | TestFunction::Dilated { a, .. }
            | TestFunction::Mollifier { a, .. }
            | TestFunction::Rescaled { a, .. } => a,
        }
    }

    /// Dilation factor applied to the base function.
    pub fn scale(&self) -> f64 {
        match *self {
            TestFunction::Gaussian { .. } => 1.0,
            TestFunction::Dilated { r, .. } => r,
            TestFunction::Mollifier { eps, .. } => eps,
            TestFunction::Rescaled { n, .. } => n,
        }
    }

    /// Characteristic width `scale / √a`.
    pub fn width(&self) -> f64 {
        self.scale() / self.a().sqrt()
    }

    fn amplitude(&self, d: u32) -> f64 {
        let d = d as f64;
        match *self {
            TestFunction::Gaussian { .. } | TestFunction::Dilated { .. } => 1.0,
            TestFunction::Mollifier { a, eps } => (a / PI).powf(d / 2.0) * eps.powf(-d),
            TestFunction::Rescaled { n, p, .. } => n.powf(-d / p),
        }
    }

    fn validate(&self) -> Result<()> {
        let positive = |v: f64| v > 0.0 && v.is_finite();
        let ok = positive(self.a())
            && positive(self.scale())
            && match *self {
                TestFunction::Rescaled { p, .. } => p >= 1.0 && p.is_finite(),
                _ => true,
            };
        if !ok {
            return domain(format!("invalid test function parameters {self:?}"));
        }
        Ok(())
    }

    /// Closed-form value at `x`.
    pub fn eval(&self, x: &[f64]) -> f64 {
        let r2: f64 = x.iter().map(|v| v * v).sum();
        let s = self.scale();
        self.amplitude(x.len() as u32) * (-self.a() * r2 / (s * s)).exp()
    }

    /// Closed-form `ĥ(0) = ∫ h`.
    pub fn integral(&self, d: u32) -> f64 {
        self.amplitude(d) * (PI / self.a()).powf(d as f64 / 2.0) * self.scale().powi(d as i32)
    }

    /// Closed-form `‖h‖_{L^p}` for finite `p >= 1`.
    pub fn lp_norm(&self, d: u32, p: f64) -> f64 {
        let base = (PI / (p * self.a())).powf(d as f64 / 2.0) * self.scale().powi(d as i32);
        self.amplitude(d) * base.powf(1.0 / p)
    }

    /// Samples on `grid` after checking `width <= L/8`; the error names the
    /// smallest admissible period.
    pub fn sample(&self, grid: &GridSpec) -> Result<Field> {
        self.validate()?;
        let min_length = 8.0 * self.width();
        if grid.length() < min_length {
            return config(format!(
                "test function of width {} needs period L >= {min_length}, grid has {}",
                self.width(),
                grid.length()
            ));
        }
        Field::from_fn(*grid, |x| self.eval(x))
    }
}
