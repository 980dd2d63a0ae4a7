//! Fourier-multiplier calculus on the periodized grid.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::fft::{cyclic_convolution, dft, idft, Spectrum};
use super::grid::{Field, GridSpec};
use crate::error::{config, domain, Result};
use crate::specfun::{bessel_kernel, radial_power_integral, sphere_area, RadialKernelSpec};

/// Order `σ` of the Bessel potential `J_σ`, the multiplier `(1 + |ξ|²)^{-σ/2}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MultiplierOrder(f64);

impl MultiplierOrder {
    pub fn new(sigma: f64) -> Result<Self> {
        if !sigma.is_finite() {
            return domain(format!("multiplier order must be finite, got {sigma}"));
        }
        Ok(Self(sigma))
    }

    pub fn sigma(&self) -> f64 {
        self.0
    }

    pub fn symbol(&self, xi2: f64) -> f64 {
        (1.0 + xi2).powf(-0.5 * self.0)
    }
}

impl TryFrom<f64> for MultiplierOrder {
    type Error = crate::Error;

    fn try_from(sigma: f64) -> Result<Self> {
        Self::new(sigma)
    }
}

/// `J_σ f`, the inverse transform of `(1 + |ξ|²)^{-σ/2} f̂`.
pub fn bessel_potential(field: &Field, order: MultiplierOrder) -> Field {
    idft(&dft(field).multiplied(|x| order.symbol(x)))
}

/// Riemann-sum `L^p` norm; `p = inf` is the sample maximum (a lower
/// bound for the true supremum).
pub fn lp_norm(field: &Field, p: f64) -> Result<f64> {
    if !(p >= 1.0) {
        return domain(format!("Lebesgue exponent must be >= 1, got {p}"));
    }
    if p.is_infinite() {
        return Ok(field.max_abs());
    }
    let w = field.grid().cell_volume();
    if p == 1.0 {
        return Ok(w * field.values().iter().map(|v| v.abs()).sum::<f64>());
    }
    // scale by the maximum to keep |f|^p in range
    let m = field.max_abs();
    if m == 0.0 {
        return Ok(0.0);
    }
    let sum: f64 = field.values().iter().map(|v| (v.abs() / m).powf(p)).sum();
    Ok(m * (w * sum).powf(1.0 / p))
}

/// `‖f‖_{H^{s,p}} = ‖J_{-s} f‖_{L^p}`.
pub fn bessel_norm(field: &Field, s: f64, p: f64) -> Result<f64> {
    lp_norm(&bessel_potential(field, MultiplierOrder::new(-s)?), p)
}

/// The reproducing pairing `∫ f · J_{-2s} g`, evaluated on the spectral
/// side as `(2π)^{-d} Σ f̂ conj(ĝ) (1 + |ξ|²)^s Δξ^d`.
pub fn pairing(f: &Field, g: &Field, s: f64) -> Result<f64> {
    f.ensure_same_grid(g)?;
    if !s.is_finite() {
        return domain("pairing order must be finite");
    }
    Ok(spectral_pairing(&dft(f), &dft(g), s))
}

fn spectral_pairing(fh: &Spectrum, gh: &Spectrum, s: f64) -> f64 {
    let grid = fh.grid();
    let xi2 = grid.frequency_squares();
    let sum: f64 = fh
        .coeffs()
        .iter()
        .zip(gh.coeffs())
        .zip(&xi2)
        .map(|((a, b), &x)| (a * b.conj()).re * (1.0 + x).powf(s))
        .sum();
    sum * grid.length().powi(-(grid.d() as i32))
}

/// How a kernel section is sampled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SectionMethod {
    /// Inverse transform of `e^{-i⟨x,ξ⟩} (1 + |ξ|²)^{-s}`: the periodized,
    /// band-limited kernel.
    Spectral,
    /// Pointwise `G_{2s}(|y - x|)`: the true kernel.
    Radial,
}

/// Samples of `K_s(x, ·) = G_{2s}(· - x)` on `grid`. The centre `x` may be
/// any point in `R^d`, not only a grid node.
pub fn kernel_section(s: f64, x: &[f64], grid: &GridSpec, method: SectionMethod) -> Result<Field> {
    let d = grid.d() as usize;
    if x.len() != d {
        return config(format!(
            "section centre has {} coordinates, grid has {d}",
            x.len()
        ));
    }
    if !(2.0 * s > d as f64) {
        return domain(format!("kernel section needs 2s > d, got s = {s}, d = {d}"));
    }
    match method {
        SectionMethod::Spectral => {
            let xi2 = grid.frequency_squares();
            let coeffs = (0..grid.len())
                .map(|flat| {
                    let idx = grid.unflatten(flat);
                    let phase: f64 = (0..d).map(|a| x[a] * grid.frequency(idx[a])).sum();
                    Complex64::from_polar((1.0 + xi2[flat]).powf(-s), -phase)
                })
                .collect();
            Ok(idft(&Spectrum::new(*grid, coeffs)?))
        }
        SectionMethod::Radial => {
            let spec = RadialKernelSpec::new(2.0 * s, grid.d())?;
            let values = (0..grid.len())
                .map(|flat| {
                    let y = grid.point(flat);
                    let r = (0..d).map(|a| (y[a] - x[a]).powi(2)).sum::<f64>().sqrt();
                    bessel_kernel(&spec, r)
                })
                .collect::<Result<Vec<_>>>()?;
            Field::new(*grid, values)
        }
    }
}

/// Fourier-weighted norm `(∫ |f̂|^{p'} (1 + |ξ|²)^s dξ / (2π)^d)^{1/p'}`,
/// which coincides with `‖f‖_{H^{s,2}}` at `p = 2`.
pub fn fasshauer_norm(field: &Field, s: f64, p: f64) -> Result<f64> {
    let grid = field.grid();
    if !(p > 1.0) || !p.is_finite() {
        return domain(format!("Fasshauer norm needs p in (1, inf), got {p}"));
    }
    if !(2.0 * s > grid.d() as f64) {
        return domain(format!("Fasshauer norm needs 2s > d, got s = {s}"));
    }
    let conj = p / (p - 1.0);
    let spectrum = dft(field);
    let xi2 = grid.frequency_squares();
    let sum: f64 = spectrum
        .coeffs()
        .iter()
        .zip(&xi2)
        .map(|(c, &x)| c.norm().powf(conj) * (1.0 + x).powf(s))
        .sum();
    Ok((sum * grid.length().powi(-(grid.d() as i32))).powf(1.0 / conj))
}

/// Samples of `G_σ` at the wrapped grid offsets, slot 0 being the origin.
///
/// A singular origin sample is replaced by the mean of `G_σ` over the ball
/// whose volume equals one grid cell.
pub fn periodic_kernel_samples(sigma: f64, grid: &GridSpec) -> Result<Vec<f64>> {
    let spec = RadialKernelSpec::new(sigma, grid.d())?;
    let mut samples = (0..grid.len())
        .map(|flat| bessel_kernel(&spec, grid.periodic_radius(flat)))
        .collect::<Result<Vec<_>>>()?;
    if !samples[0].is_finite() {
        let d = grid.d() as f64;
        let ball_volume = sphere_area(grid.d()) / d;
        let rho = (grid.cell_volume() / ball_volume).powf(1.0 / d);
        samples[0] = radial_power_integral(&spec, 1.0, 0.0, rho)? / grid.cell_volume();
    }
    Ok(samples)
}

/// Grid convolution `G_σ ∗ f` with the radially sampled, periodically
/// wrapped kernel.
pub fn kernel_convolution(field: &Field, sigma: f64) -> Result<Field> {
    let grid = *field.grid();
    let samples = periodic_kernel_samples(sigma, &grid)?;
    Ok(Field::from_raw(
        grid,
        cyclic_convolution(&grid, &samples, field.values()),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use std::f64::consts::PI;

    fn random_field(grid: GridSpec, seed: u64) -> Field {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        Field::new(
            grid,
            (0..grid.len()).map(|_| rng.gen_range(-1.0..1.0)).collect(),
        )
        .unwrap()
    }

    fn order(s: f64) -> MultiplierOrder {
        MultiplierOrder::new(s).unwrap()
    }

    fn max_diff(a: &Field, b: &Field) -> f64 {
        a.values()
            .iter()
            .zip(b.values())
            .fold(0.0, |m, (x, y)| m.max((x - y).abs()))
    }

    #[test]
    fn potential_identities() {
        let g = GridSpec::new(2, 32, 7.0).unwrap();
        let f = random_field(g, 1);
        assert!(max_diff(&bessel_potential(&f, order(0.0)), &f) < 1e-13);
        let c = Field::new(g, vec![2.5; g.len()]).unwrap();
        for s in [-3.0, 0.5, 4.0] {
            assert!(max_diff(&bessel_potential(&c, order(s)), &c) < 1e-12);
        }
        let two = bessel_potential(&bessel_potential(&f, order(1.3)), order(-0.4));
        let one = bessel_potential(&f, order(0.9));
        assert!(max_diff(&two, &one) < 1e-12);
    }

    #[test]
    fn potential_is_linear_and_translation_equivariant() {
        let g = GridSpec::new(1, 64, 9.0).unwrap();
        let f = random_field(g, 2);
        let h = random_field(g, 3);
        let sum = Field::new(
            g,
            f.values()
                .iter()
                .zip(h.values())
                .map(|(a, b)| 2.0 * a - b)
                .collect(),
        )
        .unwrap();
        let lhs = bessel_potential(&sum, order(0.7));
        let (jf, jh) = (
            bessel_potential(&f, order(0.7)),
            bessel_potential(&h, order(0.7)),
        );
        let rhs = Field::new(
            g,
            jf.values()
                .iter()
                .zip(jh.values())
                .map(|(a, b)| 2.0 * a - b)
                .collect(),
        )
        .unwrap();
        assert!(max_diff(&lhs, &rhs) < 1e-12);
        let g2 = GridSpec::new(2, 16, 3.0).unwrap();
        let f2 = random_field(g2, 4);
        for axis in 0..2 {
            let a = bessel_potential(&f2.shifted(axis, 1), order(-1.5));
            let b = bessel_potential(&f2, order(-1.5)).shifted(axis, 1);
            assert!(max_diff(&a, &b) < 1e-12);
        }
    }

    #[test]
    fn lp_norm_basics() {
        let g = GridSpec::new(1, 16, 4.0).unwrap();
        let mut v = vec![0.0; 16];
        for i in [1, 4, 9] {
            v[i] = 1.0;
        }
        v[2] = -3.0;
        let f = Field::new(g, v).unwrap();
        assert!((lp_norm(&f, 1.0).unwrap() - 6.0 * 0.25).abs() < 1e-15);
        assert_eq!(lp_norm(&f, f64::INFINITY).unwrap(), 3.0);
        assert!(lp_norm(&f, 0.5).is_err());
        let g = GridSpec::new(1, 2048, 40.0).unwrap();
        let gauss = Field::from_fn(g, |x| (-x[0] * x[0]).exp()).unwrap();
        assert!((lp_norm(&gauss, 2.0).unwrap() - (PI / 2.0).powf(0.25)).abs() < 1e-8);
    }

    #[test]
    fn bessel_norm_matches_plancherel_oracle() {
        let g = GridSpec::new(1, 1024, 40.0).unwrap();
        let f = Field::from_fn(g, |x| (-x[0] * x[0] / 2.0).exp()).unwrap();
        // (2π)^{-1} ∫ (1 + ξ²) 2π e^{-ξ²} dξ = √π (1 + 1/2), by closed form
        let want = (PI.sqrt() * 1.5).sqrt();
        assert!((bessel_norm(&f, 1.0, 2.0).unwrap() - want).abs() < 1e-10);
        assert!((bessel_norm(&f, 0.0, 3.0).unwrap() - lp_norm(&f, 3.0).unwrap()).abs() < 1e-13);
        let c = Field::new(g, vec![-0.5; g.len()]).unwrap();
        assert!((bessel_norm(&c, 2.0, 2.0).unwrap() - 0.5 * 40f64.sqrt()).abs() < 1e-11);
    }

    #[test]
    fn pairing_properties() {
        let g = GridSpec::new(2, 32, 6.0).unwrap();
        let f = random_field(g, 5);
        let h = random_field(g, 6);
        let plain: f64 = f
            .values()
            .iter()
            .zip(h.values())
            .map(|(a, b)| a * b)
            .sum::<f64>()
            * g.cell_volume();
        assert!((pairing(&f, &h, 0.0).unwrap() - plain).abs() < 1e-12 * plain.abs().max(1.0));
        let ab = pairing(&f, &h, 1.7).unwrap();
        let ba = pairing(&h, &f, 1.7).unwrap();
        assert!((ab - ba).abs() < 1e-12 * ab.abs());
        // self-adjointness of J_σ
        let lhs: f64 = bessel_potential(&f, order(0.8))
            .values()
            .iter()
            .zip(h.values())
            .map(|(a, b)| a * b)
            .sum();
        let rhs: f64 = f
            .values()
            .iter()
            .zip(bessel_potential(&h, order(0.8)).values())
            .map(|(a, b)| a * b)
            .sum();
        assert!((lhs - rhs).abs() < 1e-12 * lhs.abs().max(1.0));
        let other = GridSpec::new(2, 32, 7.0).unwrap();
        assert!(pairing(&f, &random_field(other, 1), 1.0).is_err());
    }

    #[test]
    fn kernel_sections() {
        let g = GridSpec::new(1, 2048, 32.0).unwrap();
        let radial = kernel_section(1.0, &[0.0], &g, SectionMethod::Radial).unwrap();
        let at_one = g.origin() + (1.0 / g.spacing()) as usize;
        assert!((g.point(at_one)[0] - 1.0).abs() < 1e-12);
        assert!((radial.values()[at_one] - (-1.0f64).exp() / 2.0).abs() < 1e-14);
        assert!(kernel_section(0.5, &[0.0], &g, SectionMethod::Radial).is_err());
        // symmetry K(x, y) = K(y, x) at grid nodes
        let (xi, yi) = (g.origin() + 37, g.origin() - 211);
        let (x, y) = (g.point(xi)[0], g.point(yi)[0]);
        for method in [SectionMethod::Spectral, SectionMethod::Radial] {
            let kx = kernel_section(1.3, &[x], &g, method).unwrap();
            let ky = kernel_section(1.3, &[y], &g, method).unwrap();
            assert!((kx.values()[yi] - ky.values()[xi]).abs() < 1e-14);
        }
    }

    #[test]
    fn fasshauer_norm_properties() {
        let g = GridSpec::new(1, 512, 30.0).unwrap();
        let f = Field::from_fn(g, |x| {
            (-(x[0] - 1.0).powi(2)).exp() - 0.3 * (-x[0] * x[0] * 4.0).exp()
        })
        .unwrap();
        let a = fasshauer_norm(&f, 1.0, 2.0).unwrap();
        assert!((a - bessel_norm(&f, 1.0, 2.0).unwrap()).abs() < 1e-10);
        assert_eq!(fasshauer_norm(&Field::zeros(g), 1.0, 3.0).unwrap(), 0.0);
        let b = fasshauer_norm(&f.scaled(-2.5), 1.0, 3.0).unwrap();
        assert!((b - 2.5 * fasshauer_norm(&f, 1.0, 3.0).unwrap()).abs() < 1e-12 * b);
        assert!(fasshauer_norm(&f, 1.0, 1.0).is_err());
        assert!(fasshauer_norm(&f, 0.5, 2.0).is_err());
    }

    #[test]
    fn kernel_convolution_reproduces_potential() {
        // G_4 in d = 1 is (1 + r) e^{-r} / 4: C² with a jump in the third
        // derivative, so the grid convolution converges at fourth order.
        let err = |n: usize, sigma: f64| {
            let g = GridSpec::new(1, n, 60.0).unwrap();
            let f = Field::from_fn(g, |x| (-(x[0] - 0.5).powi(2)).exp()).unwrap();
            max_diff(
                &kernel_convolution(&f, sigma).unwrap(),
                &bessel_potential(&f, order(sigma)),
            )
        };
        let (coarse, fine) = (err(1024, 4.0), err(2048, 4.0));
        assert!(coarse < 1e-7 && fine < coarse / 12.0, "{coarse} {fine}");
        // G_2 = e^{-r}/2 has a cusp: second order
        let (coarse, fine) = (err(1024, 2.0), err(2048, 2.0));
        assert!(coarse < 1e-3 && fine < coarse / 3.5, "{coarse} {fine}");
        // singular G_{3/4} with the cell-averaged origin sample
        let (coarse, fine) = (err(1024, 0.75), err(4096, 0.75));
        assert!(coarse < 1e-2 && fine < coarse / 2.0, "{coarse} {fine}");
    }
}
