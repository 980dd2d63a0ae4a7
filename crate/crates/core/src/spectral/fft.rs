//! Discrete approximation of `f̂(ξ) = ∫ f(x) e^{-i⟨x,ξ⟩} dx` and its inverse
//! `f(x) = (2π)^{-d} ∫ f̂(ξ) e^{i⟨x,ξ⟩} dξ` on a [`GridSpec`].
//!
//! The forward transform carries the weight `Δx^d`, the inverse carries
//! `(2π)^{-d} Δξ^d = L^{-d}`. Because samples start at `-L/2`, the phase
//! `e^{-i x_0 ξ_k}` reduces to `(-1)^k`.

use num_complex::Complex64;
use rustfft::{FftDirection, FftPlanner};

use super::grid::{Field, GridSpec};
use crate::error::Result;

/// Samples of `f̂` at the grid frequencies, row-major in FFT order.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    grid: GridSpec,
    coeffs: Vec<Complex64>,
}

impl Spectrum {
    pub fn new(grid: GridSpec, coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.len() != grid.len() {
            return crate::error::config(format!(
                "spectrum has {} coefficients, grid needs {}",
                coeffs.len(),
                grid.len()
            ));
        }
        Ok(Self { grid, coeffs })
    }

    pub fn grid(&self) -> &GridSpec {
        &self.grid
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Coefficient at frequency zero.
    pub fn at_zero(&self) -> Complex64 {
        self.coeffs[0]
    }

    /// Multiplies every coefficient by `symbol(|ξ|²)`.
    pub fn multiplied(&self, symbol: impl Fn(f64) -> f64) -> Spectrum {
        let xi2 = self.grid.frequency_squares();
        let coeffs = self
            .coeffs
            .iter()
            .zip(&xi2)
            .map(|(c, &x)| c * symbol(x))
            .collect();
        Spectrum {
            grid: self.grid,
            coeffs,
        }
    }
}

fn parity_sign(grid: &GridSpec, flat: usize) -> f64 {
    let idx = grid.unflatten(flat);
    let sum: usize = idx.iter().take(grid.d() as usize).sum();
    if sum % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

fn transform_axes(grid: &GridSpec, data: &mut [Complex64], direction: FftDirection) {
    let n = grid.n();
    let d = grid.d() as usize;
    let mut planner = FftPlanner::new();
    let fft = planner.plan_fft(n, direction);
    let mut line = vec![Complex64::new(0.0, 0.0); n];
    let mut scratch = vec![Complex64::new(0.0, 0.0); fft.get_inplace_scratch_len()];
    for axis in 0..d {
        let stride = n.pow((d - 1 - axis) as u32);
        if stride == 1 {
            for chunk in data.chunks_exact_mut(n) {
                fft.process_with_scratch(chunk, &mut scratch);
            }
            continue;
        }
        let block = stride * n;
        for start in (0..data.len()).step_by(block) {
            for offset in 0..stride {
                let base = start + offset;
                for (j, slot) in line.iter_mut().enumerate() {
                    *slot = data[base + j * stride];
                }
                fft.process_with_scratch(&mut line, &mut scratch);
                for (j, slot) in line.iter().enumerate() {
                    data[base + j * stride] = *slot;
                }
            }
        }
    }
}

/// Forward transform of a sampled field.
pub fn dft(field: &Field) -> Spectrum {
    let grid = *field.grid();
    let mut data: Vec<Complex64> = field
        .values()
        .iter()
        .map(|&v| Complex64::new(v, 0.0))
        .collect();
    transform_axes(&grid, &mut data, FftDirection::Forward);
    let w = grid.cell_volume();
    for (flat, c) in data.iter_mut().enumerate() {
        *c *= w * parity_sign(&grid, flat);
    }
    Spectrum { grid, coeffs: data }
}

/// Inverse transform, keeping the real part.
pub fn idft(spectrum: &Spectrum) -> Field {
    let grid = spectrum.grid;
    let mut data = spectrum.coeffs.clone();
    for (flat, c) in data.iter_mut().enumerate() {
        *c *= parity_sign(&grid, flat);
    }
    transform_axes(&grid, &mut data, FftDirection::Inverse);
    let w = grid.length().powi(-(grid.d() as i32));
    Field::from_raw(grid, data.iter().map(|c| c.re * w).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn delta_has_flat_spectrum() {
        for d in 1..=3 {
            let g = GridSpec::new(d, 16, 5.0).unwrap();
            let mut v = vec![0.0; g.len()];
            v[g.origin()] = 1.0;
            let s = dft(&Field::new(g, v).unwrap());
            let w = g.cell_volume();
            for c in s.coeffs() {
                assert!((c.re - w).abs() < 1e-15 && c.im.abs() < 1e-15);
            }
        }
    }

    #[test]
    fn round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for d in 1..=3 {
            let g = GridSpec::new(d, 16, 3.0).unwrap();
            let v: Vec<f64> = (0..g.len()).map(|_| rng.gen_range(-1.0..1.0)).collect();
            let f = Field::new(g, v.clone()).unwrap();
            let back = idft(&dft(&f));
            let scale = f.max_abs();
            for (a, b) in back.values().iter().zip(&v) {
                assert!((a - b).abs() <= 1e-12 * scale);
            }
        }
    }

    #[test]
    fn gaussian_transform_pair() {
        let g = GridSpec::new(1, 1024, 40.0).unwrap();
        let f = Field::from_fn(g, |x| (-x[0] * x[0] / 2.0).exp()).unwrap();
        let s = dft(&f);
        let root = (2.0 * std::f64::consts::PI).sqrt();
        for (m, c) in s.coeffs().iter().enumerate() {
            let xi = g.frequency(m);
            let want = root * (-xi * xi / 2.0).exp();
            assert!((c.re - want).abs() < 1e-8 && c.im.abs() < 1e-8, "xi = {xi}");
        }
    }

    #[test]
    fn two_dimensional_gaussian() {
        let g = GridSpec::new(2, 128, 20.0).unwrap();
        let f = Field::from_fn(g, |x| (-(x[0] * x[0] + 2.0 * x[1] * x[1])).exp()).unwrap();
        let s = dft(&f);
        let pi = std::f64::consts::PI;
        for (flat, c) in s.coeffs().iter().enumerate() {
            let idx = g.unflatten(flat);
            let (a, b) = (g.frequency(idx[0]), g.frequency(idx[1]));
            let want = pi / 2f64.sqrt() * (-a * a / 4.0 - b * b / 8.0).exp();
            assert!(
                (c - Complex64::new(want, 0.0)).norm() < 1e-10,
                "{c} vs {want} at {a},{b}"
            );
        }
    }
}

/// Periodic discrete convolution `Δx^d Σ_j a_{i-j} b_j`, where `offsets`
/// is indexed by wrapped offset (slot 0 is offset zero) and `field` by
/// position.
pub(crate) fn cyclic_convolution(grid: &GridSpec, offsets: &[f64], field: &[f64]) -> Vec<f64> {
    let to_complex =
        |v: &[f64]| -> Vec<Complex64> { v.iter().map(|&x| Complex64::new(x, 0.0)).collect() };
    let mut a = to_complex(offsets);
    let mut b = to_complex(field);
    transform_axes(grid, &mut a, FftDirection::Forward);
    transform_axes(grid, &mut b, FftDirection::Forward);
    for (x, y) in a.iter_mut().zip(&b) {
        *x *= y;
    }
    transform_axes(grid, &mut a, FftDirection::Inverse);
    let w = grid.cell_volume() / grid.len() as f64;
    a.iter().map(|c| c.re * w).collect()
}
