use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{all_passed, Check, MixtureSpec};
use crate::admissibility::{holder_conjugate, rkbs_pair_check, Exponent, PairQuery, Rational};
use crate::error::{Error, Result};
use crate::spectral::{
    bessel_norm, bessel_potential, dft, idft, lp_norm, Field, GridSpec, MultiplierOrder, Spectrum,
};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NormingConfig {
    pub d: u32,
    pub u: Rational,
    pub p: Exponent,
    pub s: Rational,
    pub fields: usize,
    /// Dual fields per primal field, the Hölder maximizer included.
    pub bank: usize,
    pub seed: u64,
    pub n: usize,
    pub length: f64,
    pub mixture: MixtureSpec,
    /// Offset `u + v - 2s` used for the gap demonstration.
    pub perturbation: Rational,
    pub tolerance: f64,
    pub dual_fraction: f64,
}

impl Default for NormingConfig {
    fn default() -> Self {
        Self {
            d: 1,
            u: Rational::integer(3),
            p: Exponent::integer(2).expect("2 >= 1"),
            s: Rational::integer(2),
            fields: 100,
            bank: 64,
            seed: 7,
            n: 1024,
            length: 64.0,
            mixture: MixtureSpec::default(),
            perturbation: Rational::new(1, 10),
            tolerance: 1e-12,
            dual_fraction: 0.9,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NormingReport {
    pub config: NormingConfig,
    pub v: Rational,
    pub q: Exponent,
    /// Largest `|‖f‖_{H^{u,p}} - ‖f‖_{H^{2s-v,q'}}| / ‖f‖_{H^{u,p}}`.
    pub max_path_difference: f64,
    /// Smallest certified `sup_g |⟨f, g⟩| / ‖g‖_{H^{v,q}}` over `‖f‖_{H^{u,p}}`.
    pub min_dual_fraction: f64,
    /// Same with the maximizer removed from the bank.
    pub min_random_dual_fraction: f64,
    /// Relative gap between the two norms on a rough field when
    /// `u + v = 2s + perturbation`.
    pub perturbed_gap: f64,
    pub checks: Vec<Check>,
    pub passed: bool,
}

/// The composed path `‖J_v (J_{-2s} f)‖_{L^{q'}}`.
fn composed_norm(f: &Field, v: f64, s: f64, exponent: f64) -> Result<f64> {
    let lifted = bessel_potential(f, MultiplierOrder::new(-2.0 * s)?);
    lp_norm(
        &bessel_potential(&lifted, MultiplierOrder::new(v)?),
        exponent,
    )
}

fn holder_maximizer(w: &Field, p: f64, v: f64) -> Result<Field> {
    let norm = lp_norm(w, p)?;
    let z: Vec<f64> = w
        .values()
        .iter()
        .map(|x| x.signum() * (x.abs() / norm).powf(p - 1.0))
        .collect();
    Ok(bessel_potential(
        &Field::new(*w.grid(), z)?,
        MultiplierOrder::new(v)?,
    ))
}

/// Tabulated symbols for the dual-bank loop, so each dual field costs
/// one forward and one inverse transform.
struct DualWeights {
    pairing: Vec<f64>,
    lift: Vec<f64>,
    scale: f64,
}

impl DualWeights {
    fn new(grid: &GridSpec, s: f64, v: f64) -> Self {
        let xi2 = grid.frequency_squares();
        Self {
            pairing: xi2.iter().map(|x| (1.0 + x).powf(s)).collect(),
            lift: xi2.iter().map(|x| (1.0 + x).powf(v / 2.0)).collect(),
            scale: grid.length().powi(-(grid.d() as i32)),
        }
    }

    /// `|⟨f, g⟩_s| / ‖g‖_{H^{v,q}}` from the spectrum of `f`.
    fn ratio(&self, fh: &Spectrum, g: &Field, q: f64) -> Result<f64> {
        let gh = dft(g);
        let pair: f64 = fh
            .coeffs()
            .iter()
            .zip(gh.coeffs())
            .zip(&self.pairing)
            .map(|((a, b), w)| (a * b.conj()).re * w)
            .sum::<f64>()
            * self.scale;
        let lifted: Vec<_> = gh
            .coeffs()
            .iter()
            .zip(&self.lift)
            .map(|(c, w)| c * w)
            .collect();
        let norm = lp_norm(&idft(&Spectrum::new(*g.grid(), lifted)?), q)?;
        Ok(pair.abs() / norm)
    }
}

/// Compares the two expressions for the norm of `H^{u,p}` when
/// `p = q'` and `u + v = 2s`, and certifies the dual characterisation
/// from below with a bank of dual fields.
pub fn verify_norming(cfg: &NormingConfig) -> Result<NormingReport> {
    if !cfg.p.is_interior() {
        return Err(Error::NotApplicable(format!(
            "norming pairs need 1 < p < inf, got {}",
            cfg.p
        )));
    }
    let v = &(&Rational::integer(2) * &cfg.s) - &cfg.u;
    let q = holder_conjugate(&cfg.p);
    if !v.is_positive() {
        return Err(Error::NotApplicable(format!(
            "v = 2s - u = {v} is not positive"
        )));
    }
    let query = PairQuery::new(
        cfg.d,
        cfg.u.clone(),
        cfg.p.clone(),
        v.clone(),
        q.clone(),
        cfg.s.clone(),
    )?;
    if !rkbs_pair_check(&query).admissible {
        return Err(Error::NotApplicable(format!(
            "({}, {}) x ({v}, {q}) is not admissible for s = {}",
            cfg.u, cfg.p, cfg.s
        )));
    }
    let grid = GridSpec::new(cfg.d, cfg.n, cfg.length)?;
    let (u, vf, s, p) = (cfg.u.to_f64(), v.to_f64(), cfg.s.to_f64(), cfg.p.to_f64());
    let q_f = q.to_f64();
    let q_conj = holder_conjugate(&q).to_f64();
    let weights = DualWeights::new(&grid, s, vf);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut max_diff: f64 = 0.0;
    let mut min_frac = f64::INFINITY;
    let mut min_random = f64::INFINITY;
    let mut max_frac: f64 = 0.0;
    for _ in 0..cfg.fields {
        let f = cfg.mixture.sample(&grid, &mut rng)?;
        let direct = bessel_norm(&f, u, p)?;
        let composed = composed_norm(&f, vf, s, q_conj)?;
        max_diff = max_diff.max((direct - composed).abs() / direct);

        let fh = dft(&f);
        let w = bessel_potential(&f, MultiplierOrder::new(-u)?);
        let mut best: f64 = 0.0;
        let mut best_random: f64 = 0.0;
        for k in 0..cfg.bank.max(1) {
            let g = if k == 0 {
                holder_maximizer(&w, p, vf)?
            } else {
                cfg.mixture.sample(&grid, &mut rng)?
            };
            let value = weights.ratio(&fh, &g, q_f)?;
            best = best.max(value);
            if k > 0 {
                best_random = best_random.max(value);
            }
        }
        min_frac = min_frac.min(best / direct);
        max_frac = max_frac.max(best / direct);
        min_random = min_random.min(best_random / direct);
    }

    let rough = MixtureSpec {
        components: 6,
        min_width: 0.05,
        max_width: 0.2,
        signed: true,
    };
    let f = rough.sample(&grid, &mut rng)?;
    let shifted_v = vf + cfg.perturbation.to_f64();
    let direct = bessel_norm(&f, u, p)?;
    let perturbed_gap = (direct - bessel_norm(&f, 2.0 * s - shifted_v, q_conj)?).abs() / direct;

    let checks = vec![
        Check::at_most("max relative path difference", max_diff, cfg.tolerance),
        Check::at_least("min dual lower bound / norm", min_frac, cfg.dual_fraction),
        Check::at_most("max dual lower bound / norm", max_frac, 1.0 + 1e-9),
        Check::at_least("perturbed relative gap", perturbed_gap, 1e-3),
    ];
    Ok(NormingReport {
        config: cfg.clone(),
        v,
        q,
        max_path_difference: max_diff,
        min_dual_fraction: min_frac,
        min_random_dual_fraction: min_random,
        perturbed_gap,
        passed: all_passed(&checks),
        checks,
    })
}
