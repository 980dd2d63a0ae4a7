use serde::{Deserialize, Serialize};

use crate::error::{config, Result};

/// Default cap on the number of grid points `n^d`.
pub const DEFAULT_POINT_BUDGET: usize = 1 << 24;

/// Uniform periodic grid on `[-L/2, L/2)^d` with `n` points per axis.
///
/// Sample `j` on an axis sits at `x_j = -L/2 + j L/n`, so the origin is
/// sample `n/2`. Frequencies are `ξ_k = 2πk/L` for `k ∈ {-n/2, …, n/2 - 1}`,
/// stored in FFT order (`k = 0, 1, …, n/2 - 1, -n/2, …, -1`).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GridSpec {
    d: u32,
    n: usize,
    length: f64,
}

impl GridSpec {
    pub fn new(d: u32, n: usize, length: f64) -> Result<Self> {
        Self::with_budget(d, n, length, DEFAULT_POINT_BUDGET)
    }

    pub fn with_budget(d: u32, n: usize, length: f64, budget: usize) -> Result<Self> {
        if !(1..=3).contains(&d) {
            return config(format!("grid dimension must be 1, 2 or 3, got {d}"));
        }
        if n < 16 || !n.is_power_of_two() {
            return config(format!(
                "points per axis must be a power of two >= 16, got {n}"
            ));
        }
        if !(length > 0.0) || !length.is_finite() {
            return config(format!(
                "period length must be finite and positive, got {length}"
            ));
        }
        let total = n.checked_pow(d).filter(|&t| t <= budget);
        if total.is_none() {
            return config(format!("grid {n}^{d} exceeds the point budget {budget}"));
        }
        Ok(Self { d, n, length })
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn length(&self) -> f64 {
        self.length
    }

    pub fn len(&self) -> usize {
        self.n.pow(self.d)
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn spacing(&self) -> f64 {
        self.length / self.n as f64
    }

    /// `Δx^d`, the quadrature weight of one sample.
    pub fn cell_volume(&self) -> f64 {
        self.spacing().powi(self.d as i32)
    }

    /// `Δξ = 2π/L`.
    pub fn frequency_spacing(&self) -> f64 {
        2.0 * std::f64::consts::PI / self.length
    }

    /// Coordinate of sample `j` along one axis.
    pub fn coordinate(&self, j: usize) -> f64 {
        -0.5 * self.length + j as f64 * self.spacing()
    }

    /// Signed frequency index of FFT slot `m`.
    pub fn wavenumber(&self, m: usize) -> i64 {
        if m < self.n / 2 {
            m as i64
        } else {
            m as i64 - self.n as i64
        }
    }

    /// `ξ` of FFT slot `m` along one axis.
    pub fn frequency(&self, m: usize) -> f64 {
        self.wavenumber(m) as f64 * self.frequency_spacing()
    }

    /// Per-axis indices of a row-major flat index (unused axes are zero).
    pub fn unflatten(&self, mut flat: usize) -> [usize; 3] {
        let mut idx = [0; 3];
        for a in (0..self.d as usize).rev() {
            idx[a] = flat % self.n;
            flat /= self.n;
        }
        idx
    }

    pub fn flatten(&self, idx: &[usize]) -> usize {
        idx.iter()
            .take(self.d as usize)
            .fold(0, |acc, &i| acc * self.n + i)
    }

    /// Coordinates of the sample with the given flat index.
    pub fn point(&self, flat: usize) -> [f64; 3] {
        let idx = self.unflatten(flat);
        let mut x = [0.0; 3];
        for a in 0..self.d as usize {
            x[a] = self.coordinate(idx[a]);
        }
        x
    }

    /// Flat index of the sample at the origin.
    pub fn origin(&self) -> usize {
        self.flatten(&[self.n / 2; 3])
    }

    /// `|ξ|²` for every FFT slot, row-major.
    pub fn frequency_squares(&self) -> Vec<f64> {
        let axis: Vec<f64> = (0..self.n).map(|m| self.frequency(m).powi(2)).collect();
        (0..self.len())
            .map(|flat| {
                let idx = self.unflatten(flat);
                (0..self.d as usize).map(|a| axis[idx[a]]).sum()
            })
            .collect()
    }

    /// Minimal-image periodic distance from the origin to sample `flat`.
    pub fn periodic_radius(&self, flat: usize) -> f64 {
        let idx = self.unflatten(flat);
        let h = self.spacing();
        (0..self.d as usize)
            .map(|a| {
                let k = idx[a] as i64;
                let k = if k >= self.n as i64 / 2 {
                    k - self.n as i64
                } else {
                    k
                };
                (k as f64 * h).powi(2)
            })
            .sum::<f64>()
            .sqrt()
    }
}

/// Real samples of a function on a [`GridSpec`], row-major over axes.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Field {
    grid: GridSpec,
    values: Vec<f64>,
}

impl Field {
    pub fn new(grid: GridSpec, values: Vec<f64>) -> Result<Self> {
        if values.len() != grid.len() {
            return config(format!(
                "field has {} samples, grid needs {}",
                values.len(),
                grid.len()
            ));
        }
        if let Some(i) = values.iter().position(|v| !v.is_finite()) {
            return config(format!("field sample {i} is not finite"));
        }
        Ok(Self { grid, values })
    }

    pub fn zeros(grid: GridSpec) -> Self {
        Self {
            grid,
            values: vec![0.0; grid.len()],
        }
    }

    /// Samples `f` at every grid point; `f` receives the first `d`
    /// coordinates of the point.
    pub fn from_fn(grid: GridSpec, f: impl Fn(&[f64]) -> f64) -> Result<Self> {
        let d = grid.d() as usize;
        let values = (0..grid.len()).map(|i| f(&grid.point(i)[..d])).collect();
        Self::new(grid, values)
    }

    pub(crate) fn from_raw(grid: GridSpec, values: Vec<f64>) -> Self {
        debug_assert_eq!(values.len(), grid.len());
        Self { grid, values }
    }

    pub fn grid(&self) -> &GridSpec {
        &self.grid
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }

    pub fn scaled(&self, c: f64) -> Field {
        Field::from_raw(self.grid, self.values.iter().map(|v| c * v).collect())
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    /// Cyclic shift by `cells` samples along `axis`.
    pub fn shifted(&self, axis: usize, cells: usize) -> Field {
        let n = self.grid.n();
        let out = (0..self.grid.len())
            .map(|flat| {
                let mut idx = self.grid.unflatten(flat);
                idx[axis] = (idx[axis] + n - cells % n) % n;
                self.values[self.grid.flatten(&idx)]
            })
            .collect();
        Field::from_raw(self.grid, out)
    }

    pub(crate) fn ensure_same_grid(&self, other: &Field) -> Result<()> {
        if self.grid != other.grid {
            return config("fields live on different grids");
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validates_configuration() {
        assert!(GridSpec::new(1, 24, 1.0).is_err());
        assert!(GridSpec::new(1, 8, 1.0).is_err());
        assert!(GridSpec::new(4, 16, 1.0).is_err());
        assert!(GridSpec::new(2, 16, 0.0).is_err());
        assert!(GridSpec::new(3, 1 << 9, 1.0).is_err());
        assert!(GridSpec::with_budget(2, 64, 1.0, 1000).is_err());
        assert!(GridSpec::new(3, 256, 10.0).is_ok());
    }

    #[test]
    fn geometry() {
        let g = GridSpec::new(2, 16, 8.0).unwrap();
        assert_eq!(g.spacing(), 0.5);
        assert_eq!(g.point(g.origin())[..2], [0.0, 0.0]);
        assert_eq!(g.coordinate(0), -4.0);
        assert_eq!(g.wavenumber(8), -8);
        assert_eq!(g.wavenumber(7), 7);
        assert_eq!(g.unflatten(g.flatten(&[3, 11, 0])), [3, 11, 0]);
        assert_eq!(g.periodic_radius(g.flatten(&[15, 0])), 0.5);
    }

    #[test]
    fn rejects_bad_fields() {
        let g = GridSpec::new(1, 16, 1.0).unwrap();
        assert!(Field::new(g, vec![0.0; 15]).is_err());
        let mut v = vec![0.0; 16];
        v[3] = f64::NAN;
        assert!(Field::new(g, v).is_err());
    }
}
