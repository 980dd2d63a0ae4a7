use serde::{Deserialize, Serialize};

use super::{all_passed, fit_log_slope, Check};
use crate::admissibility::{holder_conjugate, Exponent, Rational};
use crate::error::{config, Error, Result};
use crate::specfun::{bessel_kernel, RadialKernelSpec};
use crate::spectral::{
    bessel_potential, kernel_convolution, lp_norm, GridSpec, MultiplierOrder, TestFunction,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ScaleParameter {
    R,
    #[serde(rename = "n")]
    N,
    #[serde(rename = "eps")]
    Eps,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Observation {
    pub scale: f64,
    pub norm: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GrowthReport {
    pub experiment: String,
    pub parameter: ScaleParameter,
    pub grid: GridSpec,
    pub observations: Vec<Observation>,
    pub fitted_slope: f64,
    pub predicted_slope: f64,
    /// RMS residual of the log-log fit.
    pub residual: f64,
    pub slope_tolerance: Option<f64>,
    pub checks: Vec<Check>,
    pub passed: bool,
}

impl GrowthReport {
    /// The observations as CSV with header `scale,norm`.
    pub fn observations_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        for o in &self.observations {
            w.serialize(o)?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Io(e.into_error()))?;
        Ok(String::from_utf8(bytes).expect("csv output is ascii"))
    }
}

fn check_scales(scales: &[f64], decreasing: bool) -> Result<()> {
    if scales.len() < 4 {
        return config(format!(
            "growth experiments need at least 4 scales, got {}",
            scales.len()
        ));
    }
    let monotone = scales
        .windows(2)
        .all(|w| if decreasing { w[1] < w[0] } else { w[1] > w[0] });
    if !monotone || scales.iter().any(|&x| !(x > 0.0)) {
        return config("scales must be positive and strictly monotone");
    }
    Ok(())
}

fn slope_check(report_checks: &mut Vec<Check>, fitted: f64, predicted: f64, tol: f64) {
    report_checks.push(Check::at_most(
        "|fitted - predicted slope|",
        (fitted - predicted).abs(),
        tol,
    ));
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DilationConfig {
    pub d: u32,
    pub v: f64,
    pub s: f64,
    /// Base `φ(x) = e^{-a|x|²}`.
    pub a: f64,
    pub radii: Vec<f64>,
    pub n: usize,
    pub length: f64,
    pub slope_tolerance: f64,
}

impl DilationConfig {
    /// Reference grids with `R ∈ {2,4,8,16}` on `L = 128`: `n = 2048` for
    /// `d = 1` and `n = 512` per axis otherwise.
    pub fn reference(d: u32) -> Self {
        let (n, tol) = if d == 1 { (2048, 0.1) } else { (512, 0.15) };
        let (radii, length) = (vec![2.0, 4.0, 8.0, 16.0], 128.0);
        Self {
            d,
            v: 1.0,
            s: 1.0,
            a: 1.0,
            radii,
            n,
            length,
            slope_tolerance: tol,
        }
    }
}

impl Default for DilationConfig {
    fn default() -> Self {
        Self::reference(1)
    }
}

/// `‖J_{v-2s} h_R‖_{L¹}` for `h_R(x) = φ(x/R)`; grows like `R^d`.
pub fn blowup_dilation(cfg: &DilationConfig) -> Result<GrowthReport> {
    check_scales(&cfg.radii, false)?;
    let grid = GridSpec::new(cfg.d, cfg.n, cfg.length)?;
    let order = MultiplierOrder::new(cfg.v - 2.0 * cfg.s)?;
    let mut observations = Vec::new();
    let mut sup_defect: f64 = 0.0;
    for &r in &cfg.radii {
        let h = TestFunction::Dilated { a: cfg.a, r }.sample(&grid)?;
        sup_defect = sup_defect.max((h.max_abs() - 1.0).abs());
        observations.push(Observation {
            scale: r,
            norm: lp_norm(&bessel_potential(&h, order), 1.0)?,
        });
    }
    let pts: Vec<_> = observations.iter().map(|o| (o.scale, o.norm)).collect();
    let (fitted_slope, residual) = fit_log_slope(&pts)?;
    let predicted_slope = cfg.d as f64;
    let mut checks = vec![Check::at_most("max |sup h_R - sup phi|", sup_defect, 1e-12)];
    slope_check(
        &mut checks,
        fitted_slope,
        predicted_slope,
        cfg.slope_tolerance,
    );
    Ok(GrowthReport {
        experiment: "blowup-dilation".into(),
        parameter: ScaleParameter::R,
        grid,
        observations,
        fitted_slope,
        predicted_slope,
        residual,
        slope_tolerance: Some(cfg.slope_tolerance),
        passed: all_passed(&checks),
        checks,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RescaledConfig {
    pub d: u32,
    pub u: f64,
    pub v: f64,
    pub s: f64,
    pub p: f64,
    pub a: f64,
    pub scales: Vec<f64>,
    pub n: usize,
    pub length: f64,
    pub slope_tolerance: f64,
    pub constancy_tolerance: f64,
}

impl Default for RescaledConfig {
    fn default() -> Self {
        Self {
            d: 1,
            u: 1.0,
            v: 1.0,
            s: 1.0,
            p: 2.0,
            a: 1.0,
            scales: vec![2.0, 4.0, 8.0, 16.0],
            n: 2048,
            length: 128.0,
            slope_tolerance: 0.1,
            constancy_tolerance: 1e-6,
        }
    }
}

/// `‖J_{u+v-2s} h_n‖_{L¹}` for `h_n(x) = n^{-d/p} φ(x/n)`, which is
/// constant in `L^p`; grows like `n^{d(1-1/p)}`.
pub fn blowup_rescaled(cfg: &RescaledConfig) -> Result<GrowthReport> {
    check_scales(&cfg.scales, false)?;
    if !(cfg.p > 1.0) || !cfg.p.is_finite() {
        return Err(Error::NotApplicable(format!(
            "rescaled family needs 1 < p < inf, got {}",
            cfg.p
        )));
    }
    let grid = GridSpec::new(cfg.d, cfg.n, cfg.length)?;
    let order = MultiplierOrder::new(cfg.u + cfg.v - 2.0 * cfg.s)?;
    let mut observations = Vec::new();
    let mut lp = Vec::new();
    for &n in &cfg.scales {
        let h = TestFunction::Rescaled {
            a: cfg.a,
            n,
            p: cfg.p,
        }
        .sample(&grid)?;
        lp.push(lp_norm(&h, cfg.p)?);
        observations.push(Observation {
            scale: n,
            norm: lp_norm(&bessel_potential(&h, order), 1.0)?,
        });
    }
    let spread = lp
        .iter()
        .map(|x| (x / lp[0] - 1.0).abs())
        .fold(0.0, f64::max);
    let pts: Vec<_> = observations.iter().map(|o| (o.scale, o.norm)).collect();
    let (fitted_slope, residual) = fit_log_slope(&pts)?;
    let predicted_slope = cfg.d as f64 * (1.0 - 1.0 / cfg.p);
    let mut checks = vec![Check::at_most(
        "max relative spread of ||h_n||_p",
        spread,
        cfg.constancy_tolerance,
    )];
    slope_check(
        &mut checks,
        fitted_slope,
        predicted_slope,
        cfg.slope_tolerance,
    );
    Ok(GrowthReport {
        experiment: "blowup-rescaled".into(),
        parameter: ScaleParameter::N,
        grid,
        observations,
        fitted_slope,
        predicted_slope,
        residual,
        slope_tolerance: Some(cfg.slope_tolerance),
        passed: all_passed(&checks),
        checks,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MollifierConfig {
    pub d: u32,
    pub u: Rational,
    pub v: Rational,
    pub s: Rational,
    pub q: Exponent,
    pub a: f64,
    pub eps: Vec<f64>,
    pub n: usize,
    pub length: f64,
    /// Point at distance `probe_radius` along the first axis used for the
    /// pointwise convergence check at the smallest `ε`.
    pub probe_radius: f64,
    pub pointwise_tolerance: f64,
    pub mass_tolerance: f64,
}

impl Default for MollifierConfig {
    fn default() -> Self {
        Self {
            d: 1,
            u: Rational::new(5, 4),
            v: Rational::new(5, 4),
            s: Rational::one(),
            q: Exponent::integer(2).expect("2 >= 1"),
            a: 8.0,
            eps: vec![0.5, 0.25, 0.125, 0.0625],
            n: 8192,
            length: 64.0,
            probe_radius: 1.0,
            pointwise_tolerance: 1e-4,
            mass_tolerance: 1e-6,
        }
    }
}

/// `‖G_σ ∗ h_ε‖_{L^{q'}}` for unit-mass mollifiers `h_ε`, `σ = u + v - 2s`.
/// Only defined for `σ ∈ (0, d/q']`, where `G_σ ∉ L^{q'}`.
pub fn blowup_mollifier(cfg: &MollifierConfig) -> Result<GrowthReport> {
    let sigma = &(&cfg.u + &cfg.v) - &(&Rational::integer(2) * &cfg.s);
    let q_conj = holder_conjugate(&cfg.q);
    let ceiling = &Rational::integer(cfg.d as i64) * &q_conj.reciprocal();
    if !sigma.is_positive() || sigma > ceiling {
        return Err(Error::NotApplicable(format!(
            "mollifier blow-up needs 0 < u + v - 2s <= d/q' = {ceiling}, got {sigma}"
        )));
    }
    check_scales(&cfg.eps, true)?;
    let grid = GridSpec::new(cfg.d, cfg.n, cfg.length)?;
    let smallest = *cfg.eps.last().expect("checked length");
    if smallest < 4.0 * grid.spacing() {
        return config(format!(
            "smallest eps {smallest} is below 4 grid spacings ({})",
            4.0 * grid.spacing()
        ));
    }
    let exponent = q_conj.to_f64();
    let sig = sigma.to_f64();
    let mut observations = Vec::new();
    let mut mass_defect: f64 = 0.0;
    let mut last = None;
    for &eps in &cfg.eps {
        let h = TestFunction::Mollifier { a: cfg.a, eps }.sample(&grid)?;
        mass_defect = mass_defect.max((lp_norm(&h, 1.0)? - 1.0).abs());
        let conv = kernel_convolution(&h, sig)?;
        observations.push(Observation {
            scale: eps,
            norm: lp_norm(&conv, exponent)?,
        });
        last = Some(conv);
    }
    let conv = last.expect("at least four scales");
    let probe_index = {
        let mut idx = vec![grid.n() / 2; cfg.d as usize];
        idx[0] = ((cfg.probe_radius / grid.spacing()).round() as usize + grid.n() / 2) % grid.n();
        grid.flatten(&idx)
    };
    let probe_r = grid.point(probe_index)[0];
    let exact = bessel_kernel(&RadialKernelSpec::new(sig, cfg.d)?, probe_r.abs())?;
    let pointwise = (conv.values()[probe_index] - exact).abs();

    let increasing = observations.windows(2).all(|w| w[1].norm > w[0].norm);
    let pts: Vec<_> = observations.iter().map(|o| (o.scale, o.norm)).collect();
    let (fitted_slope, residual) = fit_log_slope(&pts)?;
    let checks = vec![
        Check::holds("norms strictly increasing as eps decreases", increasing),
        Check::at_most("max | ||h_eps||_1 - 1 |", mass_defect, cfg.mass_tolerance),
        Check::at_most(
            "|(G * h_eps)(r) - G(r)| at smallest eps",
            pointwise,
            cfg.pointwise_tolerance,
        ),
    ];
    Ok(GrowthReport {
        experiment: "blowup-mollifier".into(),
        parameter: ScaleParameter::Eps,
        grid,
        observations,
        fitted_slope,
        predicted_slope: sig - ceiling.to_f64(),
        residual,
        slope_tolerance: None,
        passed: all_passed(&checks),
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dilation_line() {
        let r = blowup_dilation(&DilationConfig::default()).unwrap();
        assert!(r.passed, "{r:#?}");
        assert!((r.fitted_slope - 1.0).abs() < 0.1);
    }

    #[test]
    fn dilation_plane() {
        let r = blowup_dilation(&DilationConfig::reference(2)).unwrap();
        assert!((r.fitted_slope - 2.0).abs() < 0.15, "{}", r.fitted_slope);
        assert!(r.passed);
    }

    #[test]
    fn dilation_slope_stable_under_refinement() {
        let coarse = blowup_dilation(&DilationConfig::default()).unwrap();
        let fine = blowup_dilation(&DilationConfig {
            n: 4096,
            ..Default::default()
        })
        .unwrap();
        assert!((coarse.fitted_slope - fine.fitted_slope).abs() < 0.05);
    }

    #[test]
    fn dilation_support_violation() {
        let cfg = DilationConfig {
            length: 64.0,
            n: 1024,
            ..Default::default()
        };
        let err = blowup_dilation(&cfg).unwrap_err();
        assert!(
            matches!(err, Error::Config(ref m) if m.contains("L >= 128")),
            "{err}"
        );
    }

    #[test]
    fn rescaled_slopes() {
        for (p, slope) in [(2.0, 0.5), (4.0, 0.75)] {
            let r = blowup_rescaled(&RescaledConfig {
                p,
                ..Default::default()
            })
            .unwrap();
            assert!(r.passed, "{r:#?}");
            assert!((r.fitted_slope - slope).abs() < 0.1);
        }
        let off = RescaledConfig {
            u: 1.5,
            p: 2.0,
            ..Default::default()
        };
        assert!(blowup_rescaled(&off).unwrap().passed);
        assert!(matches!(
            blowup_rescaled(&RescaledConfig {
                p: 1.0,
                ..Default::default()
            }),
            Err(Error::NotApplicable(_))
        ));
    }

    #[test]
    fn mollifier_interior_and_boundary() {
        let interior = blowup_mollifier(&MollifierConfig::default()).unwrap();
        assert!(interior.passed, "{interior:#?}");
        let boundary = MollifierConfig {
            u: Rational::new(3, 2),
            v: Rational::one(),
            ..Default::default()
        };
        let r = blowup_mollifier(&boundary).unwrap();
        assert!(r.passed, "{r:#?}");
        let csv = r.observations_csv().unwrap();
        assert!(csv.starts_with("scale,norm\n0.5,"));
    }

    #[test]
    fn mollifier_regime() {
        let outside = MollifierConfig {
            u: Rational::new(2, 1),
            v: Rational::one(),
            ..Default::default()
        };
        assert!(matches!(
            blowup_mollifier(&outside),
            Err(Error::NotApplicable(_))
        ));
        let zero = MollifierConfig {
            u: Rational::one(),
            v: Rational::one(),
            ..Default::default()
        };
        assert!(matches!(
            blowup_mollifier(&zero),
            Err(Error::NotApplicable(_))
        ));
        let fine = MollifierConfig {
            n: 1024,
            ..Default::default()
        };
        assert!(matches!(blowup_mollifier(&fine), Err(Error::Config(_))));
    }
}
