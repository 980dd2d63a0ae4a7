use serde::{Deserialize, Serialize};

use super::{all_passed, Check};
use crate::admissibility::{holder_conjugate, integrability_check, Exponent, Rational};
use crate::error::{config, Result};
use crate::specfun::{
    bessel_kernel, near_field_class, radial_power_integral, NearFieldClass, RadialKernelSpec,
};

const SPLIT_RADIUS: f64 = 2.0;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IntegrabilityConfig {
    /// Inner cutoffs `r₀`, strictly decreasing below 2.
    pub cutoffs: Vec<f64>,
    /// Relative Cauchy tolerance between the last two estimates.
    pub cauchy_tolerance: f64,
    /// Minimum relative increase per refinement counted as divergence.
    pub growth_threshold: f64,
    /// When increments contract by at least this factor but are not yet
    /// Cauchy, further cutoffs are appended (each 100 times smaller).
    pub contraction: f64,
    pub smallest_cutoff: f64,
}

impl Default for IntegrabilityConfig {
    fn default() -> Self {
        Self {
            cutoffs: vec![1e-2, 1e-4, 1e-6, 1e-8],
            cauchy_tolerance: 1e-6,
            growth_threshold: 0.10,
            contraction: 0.1,
            smallest_cutoff: 1e-16,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EmpiricalVerdict {
    Convergent,
    Divergent,
    Inconclusive,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CutoffEstimate {
    pub r0: f64,
    pub estimate: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IntegrabilityReport {
    pub d: u32,
    pub s: Rational,
    pub p: Exponent,
    pub analytic_verdict: bool,
    pub near_field_class: NearFieldClass,
    /// `(s - d)p' + d - 1`; the integral converges iff it exceeds `-1`.
    /// Absent for `p = 1`, where `sup G_s` is measured instead.
    pub near_field_exponent: Option<f64>,
    /// `ω ∫_{r₀}^∞ G_s^{p'} r^{d-1} dr`, or `G_s(r₀)` when `p' = inf`.
    pub quadrature_estimates: Vec<CutoffEstimate>,
    pub empirical_verdict: EmpiricalVerdict,
    pub agrees: bool,
    pub checks: Vec<Check>,
    pub passed: bool,
}

fn estimates(
    spec: &RadialKernelSpec,
    conj: Option<f64>,
    cutoffs: &[f64],
) -> Result<Vec<CutoffEstimate>> {
    match conj {
        None => cutoffs
            .iter()
            .map(|&r0| {
                Ok(CutoffEstimate {
                    r0,
                    estimate: bessel_kernel(spec, r0)?,
                })
            })
            .collect(),
        Some(power) => {
            let mut total = radial_power_integral(spec, power, SPLIT_RADIUS, f64::INFINITY)?;
            let mut upper = SPLIT_RADIUS;
            cutoffs
                .iter()
                .map(|&r0| {
                    total += radial_power_integral(spec, power, r0, upper)?;
                    upper = r0;
                    Ok(CutoffEstimate {
                        r0,
                        estimate: total,
                    })
                })
                .collect()
        }
    }
}

fn increments(est: &[CutoffEstimate]) -> Vec<f64> {
    est.windows(2)
        .map(|w| w[1].estimate - w[0].estimate)
        .collect()
}

/// Radial quadrature evidence for `G_s ∈ L^{p'}(R^d)`, cross-checked
/// against the exact predicate `s > d/p`.
pub fn verify_integrability(
    d: u32,
    s: &Rational,
    p: &Exponent,
    cfg: &IntegrabilityConfig,
) -> Result<IntegrabilityReport> {
    if cfg.cutoffs.len() < 2
        || cfg.cutoffs.windows(2).any(|w| !(w[1] < w[0]))
        || !(cfg.cutoffs[0] < SPLIT_RADIUS)
        || !(*cfg.cutoffs.last().unwrap() > 0.0)
    {
        return config("cutoffs must be at least two positive, strictly decreasing radii below 2");
    }
    if !s.is_positive() {
        return config(format!("kernel order must be positive, got {s}"));
    }
    let spec = RadialKernelSpec::new(s.to_f64(), d)?;
    let conj = match holder_conjugate(p) {
        Exponent::Infinite => None,
        Exponent::Finite(c) => Some(c.to_f64()),
    };
    let mut cutoffs = cfg.cutoffs.clone();
    let mut est = estimates(&spec, conj, &cutoffs)?;
    let verdict = loop {
        let n = est.len();
        let (last, prev) = (est[n - 1].estimate, est[n - 2].estimate);
        if (last - prev).abs() <= cfg.cauchy_tolerance * last.abs() {
            break EmpiricalVerdict::Convergent;
        }
        if est
            .windows(2)
            .all(|w| w[1].estimate >= (1.0 + cfg.growth_threshold) * w[0].estimate)
        {
            break EmpiricalVerdict::Divergent;
        }
        let inc = increments(&est);
        let contracting = inc
            .windows(2)
            .all(|w| w[1] >= 0.0 && w[1] <= cfg.contraction * w[0]);
        let next = cutoffs[cutoffs.len() - 1] / 100.0;
        if contracting && next >= cfg.smallest_cutoff * (1.0 - 1e-9) {
            let prev = est[est.len() - 1];
            let estimate = match conj {
                None => bessel_kernel(&spec, next)?,
                Some(power) => prev.estimate + radial_power_integral(&spec, power, next, prev.r0)?,
            };
            cutoffs.push(next);
            est.push(CutoffEstimate { r0: next, estimate });
        } else {
            break EmpiricalVerdict::Inconclusive;
        }
    };
    let analytic = integrability_check(d, s, p);
    let agrees = match verdict {
        EmpiricalVerdict::Convergent => analytic,
        EmpiricalVerdict::Divergent => !analytic,
        EmpiricalVerdict::Inconclusive => false,
    };
    let monotone = est.windows(2).all(|w| w[1].estimate >= w[0].estimate);
    let checks = vec![
        Check::holds("estimates nondecreasing as r0 decreases", monotone),
        Check::holds("empirical verdict matches s > d/p", agrees),
    ];
    Ok(IntegrabilityReport {
        d,
        s: s.clone(),
        p: p.clone(),
        analytic_verdict: analytic,
        near_field_class: near_field_class(&spec),
        near_field_exponent: conj.map(|c| (s.to_f64() - d as f64) * c + d as f64 - 1.0),
        quadrature_estimates: est,
        empirical_verdict: verdict,
        agrees,
        passed: all_passed(&checks),
        checks,
    })
}

/// Fifty `(d, s, p)` triples covering `s < d/p`, `s = d/p` and `s > d/p`
/// in every near-field class for `d = 1, 2, 3`.
pub fn reference_triples() -> Vec<(u32, Rational, Exponent)> {
    let mut out = Vec::new();
    let exps = ["1", "3/2", "2", "3", "4", "inf"];
    for d in 1..=3u32 {
        let dr = Rational::integer(d as i64);
        for p in exps {
            let p: Exponent = p.parse().expect("literal exponent");
            match &p {
                Exponent::Infinite => out.push((d, Rational::integer(2), p)),
                Exponent::Finite(_) => {
                    let boundary = &dr * &p.reciprocal();
                    let above = if p.is_one() {
                        &dr + &Rational::integer(2)
                    } else {
                        &boundary + &(&Rational::integer(2) * &holder_conjugate(&p).reciprocal())
                    };
                    out.push((d, &boundary * &Rational::new(1, 2), p.clone()));
                    out.push((d, boundary, p.clone()));
                    out.push((d, above, p));
                }
            }
        }
    }
    out.push((1, Rational::one(), Exponent::integer(2).expect("2 >= 1")));
    out.push((1, Rational::one(), Exponent::Infinite));
    out
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IntegrabilitySweep {
    pub cases: Vec<IntegrabilityReport>,
    pub mismatches: usize,
    pub classes_covered: Vec<String>,
    pub checks: Vec<Check>,
    pub passed: bool,
}

/// Runs [`verify_integrability`] on every triple of [`reference_triples`].
pub fn integrability_sweep(cfg: &IntegrabilityConfig) -> Result<IntegrabilitySweep> {
    let cases = reference_triples()
        .iter()
        .map(|(d, s, p)| verify_integrability(*d, s, p, cfg))
        .collect::<Result<Vec<_>>>()?;
    let mismatches = cases.iter().filter(|c| !c.passed).count();
    let mut classes: Vec<String> = cases
        .iter()
        .map(|c| match c.near_field_class {
            NearFieldClass::PowerLaw { .. } => "power-law",
            NearFieldClass::Logarithmic => "logarithmic",
            NearFieldClass::Bounded => "bounded",
        })
        .map(String::from)
        .collect();
    classes.sort();
    classes.dedup();
    let checks = vec![
        Check::at_most("verdict mismatches", mismatches as f64, 0.0),
        Check::at_least("near-field classes covered", classes.len() as f64, 3.0),
    ];
    Ok(IntegrabilitySweep {
        passed: all_passed(&checks),
        cases,
        mismatches,
        classes_covered: classes,
        checks,
    })
}
