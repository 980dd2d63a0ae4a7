use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{all_passed, Check};
use crate::error::{config, Result};
use crate::spectral::{
    bessel_potential, kernel_section, pairing, Field, GridSpec, MultiplierOrder, SectionMethod,
    TestFunction,
};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReproducingConfig {
    pub d: u32,
    pub s: f64,
    pub n: usize,
    pub length: f64,
    /// Exponent `a` of the Gaussian test field `e^{-a|x|²}`.
    pub gaussian_a: f64,
    /// Number of random Fourier modes in the band-limited test field.
    pub band_modes: usize,
    /// Evaluation points; `None` means `0, e₁, -3e₁`.
    pub points: Option<Vec<Vec<f64>>>,
    pub seed: u64,
    /// How the kernel section is sampled.
    pub section: SectionMethod,
    pub gaussian_tolerance: f64,
    pub band_tolerance: f64,
    pub route_tolerance: f64,
}

impl Default for ReproducingConfig {
    fn default() -> Self {
        Self {
            d: 1,
            s: 1.0,
            n: 4096,
            length: 84.0,
            gaussian_a: 1.0,
            band_modes: 6,
            points: None,
            seed: 7,
            section: SectionMethod::Spectral,
            gaussian_tolerance: 1e-8,
            band_tolerance: 1e-10,
            route_tolerance: 1e-10,
        }
    }
}

impl ReproducingConfig {
    fn points(&self) -> Vec<Vec<f64>> {
        self.points.clone().unwrap_or_else(|| {
            [0.0, 1.0, -3.0]
                .iter()
                .map(|&t| {
                    let mut x = vec![0.0; self.d as usize];
                    x[0] = t;
                    x
                })
                .collect()
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PointError {
    pub field: String,
    pub x: Vec<f64>,
    pub expected: f64,
    pub pairing: f64,
    /// `⟨K(x,·), ψ⟩` in the `H^{s,2}` inner product, evaluated in space.
    pub inner_product: f64,
    pub error: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReproducingReport {
    pub config: ReproducingConfig,
    pub points: Vec<PointError>,
    pub gaussian_max_error: f64,
    pub band_limited_max_error: f64,
    pub route_max_difference: f64,
    pub checks: Vec<Check>,
    pub passed: bool,
}

struct Mode {
    k: Vec<i64>,
    amplitude: f64,
    phase: f64,
}

fn band_limited(
    grid: &GridSpec,
    modes: usize,
    rng: &mut ChaCha8Rng,
) -> (Field, impl Fn(&[f64]) -> f64) {
    let d = grid.d() as usize;
    let kmax = (grid.n() as i64 / 4).clamp(1, 24);
    let modes: Vec<Mode> = (0..modes.max(1))
        .map(|_| Mode {
            k: (0..d).map(|_| rng.gen_range(-kmax..=kmax)).collect(),
            amplitude: rng.gen_range(-1.0..1.0),
            phase: rng.gen_range(0.0..std::f64::consts::TAU),
        })
        .collect();
    let base = std::f64::consts::TAU / grid.length();
    let eval = move |x: &[f64]| -> f64 {
        modes
            .iter()
            .map(|m| {
                let arg: f64 =
                    m.k.iter()
                        .zip(x)
                        .map(|(&k, &xi)| k as f64 * xi)
                        .sum::<f64>()
                        * base;
                m.amplitude * (arg + m.phase).cos()
            })
            .sum()
    };
    let field = Field::from_fn(*grid, &eval).expect("finite trigonometric polynomial");
    (field, eval)
}

fn inner_product(a: &Field, b: &Field, s: f64) -> Result<f64> {
    let lift = MultiplierOrder::new(-s)?;
    let (ja, jb) = (bessel_potential(a, lift), bessel_potential(b, lift));
    let w = a.grid().cell_volume();
    Ok(w * ja
        .values()
        .iter()
        .zip(jb.values())
        .map(|(x, y)| x * y)
        .sum::<f64>())
}

/// Compares `⟨ψ, K(x,·)⟩` with `ψ(x)` for a Gaussian and a band-limited
/// field, and against the `H^{s,2}` inner-product route.
pub fn verify_reproducing(cfg: &ReproducingConfig) -> Result<ReproducingReport> {
    let grid = GridSpec::new(cfg.d, cfg.n, cfg.length)?;
    let points = cfg.points();
    if points.iter().any(|x| x.len() != cfg.d as usize) {
        return config("evaluation points must have d coordinates");
    }
    let gaussian = TestFunction::Gaussian { a: cfg.gaussian_a };
    let psi = gaussian.sample(&grid)?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let (band, band_eval) = band_limited(&grid, cfg.band_modes, &mut rng);

    let mut rows = Vec::new();
    for x in &points {
        let section = kernel_section(cfg.s, x, &grid, cfg.section)?;
        for (name, field, expected) in [
            ("gaussian", &psi, gaussian.eval(x)),
            ("band-limited", &band, band_eval(x)),
        ] {
            let value = pairing(field, &section, cfg.s)?;
            let inner = inner_product(&section, field, cfg.s)?;
            rows.push(PointError {
                field: name.into(),
                x: x.clone(),
                expected,
                pairing: value,
                inner_product: inner,
                error: (value - expected).abs(),
            });
        }
    }
    let max_of = |name: &str| {
        rows.iter()
            .filter(|r| r.field == name)
            .map(|r| r.error)
            .fold(0.0, f64::max)
    };
    let gaussian_max_error = max_of("gaussian");
    let band_limited_max_error = max_of("band-limited");
    let route_max_difference = rows
        .iter()
        .map(|r| (r.pairing - r.inner_product).abs())
        .fold(0.0, f64::max);
    let checks = vec![
        Check::at_most(
            "gaussian pairing error",
            gaussian_max_error,
            cfg.gaussian_tolerance,
        ),
        Check::at_most(
            "band-limited pairing error",
            band_limited_max_error,
            cfg.band_tolerance,
        ),
        Check::at_most(
            "pairing vs inner-product route",
            route_max_difference,
            cfg.route_tolerance,
        ),
    ];
    Ok(ReproducingReport {
        config: cfg.clone(),
        points: rows,
        gaussian_max_error,
        band_limited_max_error,
        route_max_difference,
        passed: all_passed(&checks),
        checks,
    })
}
