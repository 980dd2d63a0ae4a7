use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{all_passed, Check, MixtureSpec};
use crate::admissibility::{holder_conjugate, Exponent, Rational};
use crate::error::{Error, Result};
use crate::specfun::{kernel_lp_norm, RadialKernelSpec};
use crate::spectral::{bessel_potential, lp_norm, GridSpec, MultiplierOrder};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct YoungConfig {
    pub d: u32,
    pub sigma: Rational,
    pub q: Exponent,
    pub fields: usize,
    pub seed: u64,
    pub mixture: MixtureSpec,
    pub n: usize,
    pub length: f64,
    pub slack: f64,
}

impl Default for YoungConfig {
    fn default() -> Self {
        Self {
            d: 1,
            sigma: Rational::one(),
            q: Exponent::Infinite,
            fields: 100,
            seed: 7,
            mixture: MixtureSpec::default(),
            n: 1024,
            length: 64.0,
            slack: 1e-10,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct YoungReport {
    pub config: YoungConfig,
    /// `‖G_σ‖_{L^{q'}}` from radial quadrature.
    pub kernel_norm: f64,
    /// `‖G_σ ∗ f‖_{q'} / (‖G_σ‖_{q'} ‖f‖_1)` per field.
    pub ratios: Vec<f64>,
    pub max_ratio: f64,
    pub min_ratio: f64,
    pub violations: usize,
    pub checks: Vec<Check>,
    pub passed: bool,
}

/// Checks `‖G_σ ∗ f‖_{L^{q'}} <= ‖G_σ‖_{L^{q'}} ‖f‖_{L¹}` on seeded random
/// mixtures, with `G_σ ∗ f = J_σ f` evaluated spectrally.
pub fn verify_young_bound(cfg: &YoungConfig) -> Result<YoungReport> {
    let dim = Rational::integer(cfg.d as i64);
    if cfg.sigma <= &dim * &cfg.q.reciprocal() {
        return Err(Error::NotApplicable(format!(
            "Young bound needs sigma > d/q = {}, got {}",
            &dim * &cfg.q.reciprocal(),
            cfg.sigma
        )));
    }
    let grid = GridSpec::new(cfg.d, cfg.n, cfg.length)?;
    let sigma = cfg.sigma.to_f64();
    let q_conj = holder_conjugate(&cfg.q).to_f64();
    let kernel_norm = kernel_lp_norm(&RadialKernelSpec::new(sigma, cfg.d)?, q_conj)?;
    let order = MultiplierOrder::new(sigma)?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut ratios = Vec::with_capacity(cfg.fields);
    let mut violations = 0;
    for _ in 0..cfg.fields {
        let f = cfg.mixture.sample(&grid, &mut rng)?;
        let lhs = lp_norm(&bessel_potential(&f, order), q_conj)?;
        let bound = kernel_norm * lp_norm(&f, 1.0)?;
        if lhs > bound * (1.0 + cfg.slack) {
            violations += 1;
        }
        ratios.push(lhs / bound);
    }
    let max_ratio = ratios.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let min_ratio = ratios.iter().copied().fold(f64::INFINITY, f64::min);
    let mut checks = vec![Check::at_most(
        "violations beyond slack",
        violations as f64,
        0.0,
    )];
    if q_conj == 1.0 && !cfg.mixture.signed {
        checks.push(Check::at_most(
            "|ratio - 1| for nonnegative f",
            (1.0 - min_ratio).abs().max((max_ratio - 1.0).abs()),
            1e-9,
        ));
    }
    Ok(YoungReport {
        config: cfg.clone(),
        kernel_norm,
        ratios,
        max_ratio,
        min_ratio,
        violations,
        passed: all_passed(&checks),
        checks,
    })
}
