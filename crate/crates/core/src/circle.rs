//! Uniform half-offset grids on the unit circle and the discrete Fourier
//! maps between boundary samples and Laurent modes.
//!
//! Nodes sit at θ_j = 2π(j + ½)/n. The half offset keeps every node away
//! from θ = 0, so boundary values of functions that are singular at z = 1
//! stay finite on the grid. Periodic trapezoidal quadrature on these nodes
//! integrates trigonometric polynomials of degree < n exactly, which is what
//! makes the sample/mode maps below inverses of each other on resolved
//! bandwidths.

use alloc::sync::Arc;
use alloc::vec::Vec;
use core::f64::consts::PI;
use num_complex::Complex64;

use crate::fft;
use crate::{Error, Result};

/// Uniform grid of n half-offset nodes θ_j = 2π(j + ½)/n.
#[derive(Debug, Clone, PartialEq)]
pub struct CircleGrid {
    n_points: usize,
    nodes: Vec<f64>,
}

impl CircleGrid {
    /// Needs n ≥ 2.
    pub fn new(n_points: usize) -> Result<Self> {
        if n_points < 2 {
            return Err(Error::GridTooSmall { n_points });
        }
        let nodes = (0..n_points)
            .map(|j| 2.0 * PI * (j as f64 + 0.5) / n_points as f64)
            .collect();
        Ok(CircleGrid { n_points, nodes })
    }

    /// Shared handle; boundary samples hold one of these.
    pub fn shared(n_points: usize) -> Result<Arc<Self>> {
        Self::new(n_points).map(Arc::new)
    }

    pub fn n_points(&self) -> usize {
        self.n_points
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn node(&self, j: usize) -> f64 {
        self.nodes[j]
    }

    /// Node spacing 2π/n, also the trapezoidal quadrature weight.
    pub fn spacing(&self) -> f64 {
        2.0 * PI / self.n_points as f64
    }

    /// Grids of equal size carry identical nodes.
    pub fn compatible(&self, other: &CircleGrid) -> bool {
        self.n_points == other.n_points
    }

    /// The node e^{iθ_j} as a point on the circle.
    pub fn point(&self, j: usize) -> Complex64 {
        Complex64::from_polar(1.0, self.nodes[j])
    }
}

/// Complex samples of a boundary function on a [`CircleGrid`].
#[derive(Debug, Clone)]
pub struct BoundarySamples {
    grid: Arc<CircleGrid>,
    values: Vec<Complex64>,
}

impl BoundarySamples {
    pub fn from_fn(grid: &Arc<CircleGrid>, mut f: impl FnMut(f64) -> Complex64) -> Self {
        let values = grid.nodes().iter().map(|&t| f(t)).collect();
        BoundarySamples {
            grid: Arc::clone(grid),
            values,
        }
    }

    /// Length of `values` must match the grid.
    pub fn from_values(grid: &Arc<CircleGrid>, values: Vec<Complex64>) -> Result<Self> {
        if values.len() != grid.n_points() {
            return Err(Error::GridMismatch);
        }
        Ok(BoundarySamples {
            grid: Arc::clone(grid),
            values,
        })
    }

    pub fn grid(&self) -> &Arc<CircleGrid> {
        &self.grid
    }

    pub fn n_points(&self) -> usize {
        self.grid.n_points()
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn map(&self, mut op: impl FnMut(f64, Complex64) -> Complex64) -> Self {
        let values = self
            .grid
            .nodes()
            .iter()
            .zip(&self.values)
            .map(|(&t, &v)| op(t, v))
            .collect();
        BoundarySamples {
            grid: Arc::clone(&self.grid),
            values,
        }
    }

    pub fn zip_with(
        &self,
        other: &BoundarySamples,
        mut op: impl FnMut(Complex64, Complex64) -> Complex64,
    ) -> Result<Self> {
        if !self.grid.compatible(&other.grid) {
            return Err(Error::GridMismatch);
        }
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(&a, &b)| op(a, b))
            .collect();
        Ok(BoundarySamples {
            grid: Arc::clone(&self.grid),
            values,
        })
    }
}

/// Contiguous block of Laurent coefficients c_k, k = min_mode .. max_mode.
#[derive(Debug, Clone, PartialEq)]
pub struct FourierCoeffs {
    min_mode: i64,
    coeffs: Vec<Complex64>,
}

impl FourierCoeffs {
    /// `coeffs[i]` is the coefficient of mode `min_mode + i`; must be
    /// nonempty.
    pub fn new(min_mode: i64, coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InvalidParameter {
                what: "coefficient block must be nonempty",
            });
        }
        Ok(FourierCoeffs { min_mode, coeffs })
    }

    pub fn min_mode(&self) -> i64 {
        self.min_mode
    }

    pub fn max_mode(&self) -> i64 {
        self.min_mode + self.coeffs.len() as i64 - 1
    }

    /// Zero outside the stored block.
    pub fn coeff(&self, mode: i64) -> Complex64 {
        if mode < self.min_mode || mode > self.max_mode() {
            Complex64::new(0.0, 0.0)
        } else {
            self.coeffs[(mode - self.min_mode) as usize]
        }
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Largest |mode| carried by the block.
    pub fn bandwidth(&self) -> i64 {
        self.min_mode.abs().max(self.max_mode().abs())
    }
}

/// Periodic trapezoid rule: (2π/n)·Σ_j f_j. Exact for trigonometric
/// polynomials of degree < n.
pub fn quad(f: &BoundarySamples) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for v in f.values() {
        acc += v;
    }
    acc * f.grid().spacing()
}

/// Fourier analysis: c_k = (1/2π)∫ f(θ) e^{−ikθ} dθ for |k| ≤ max_abs_mode,
/// computed by the exact discrete analogue on the grid. Needs
/// n_points > 2·max_abs_mode so each requested mode owns its own bin.
pub fn dft(f: &BoundarySamples, max_abs_mode: usize) -> Result<FourierCoeffs> {
    let n = f.n_points();
    if n <= 2 * max_abs_mode {
        return Err(Error::UnderResolved {
            needed: 2 * max_abs_mode + 1,
            available: n,
        });
    }
    let spec = fft::spectrum(f.values());
    let k_max = max_abs_mode as i64;
    let n_i = n as i64;
    let mut coeffs = Vec::with_capacity(2 * max_abs_mode + 1);
    for k in -k_max..=k_max {
        let bin = spec[k.rem_euclid(n_i) as usize];
        // Half-offset nodes contribute the phase e^{−iπk/n} with the signed
        // mode k, not the wrapped bin index.
        let phase = Complex64::from_polar(1.0, -PI * k as f64 / n as f64);
        coeffs.push(bin * phase / n as f64);
    }
    FourierCoeffs::new(-k_max, coeffs)
}

/// Fourier synthesis: samples of Σ_k c_k e^{ikθ} on the grid. Needs
/// n_points > 2·bandwidth, matching the analysis precondition.
pub fn idft(c: &FourierCoeffs, grid: &Arc<CircleGrid>) -> Result<BoundarySamples> {
    let n = grid.n_points();
    let bw = c.bandwidth();
    if (n as i64) <= 2 * bw {
        return Err(Error::UnderResolved {
            needed: (2 * bw + 1) as usize,
            available: n,
        });
    }
    let n_i = n as i64;
    let mut bins = alloc::vec![Complex64::new(0.0, 0.0); n];
    for (i, &ck) in c.coeffs().iter().enumerate() {
        let k = c.min_mode() + i as i64;
        let phase = Complex64::from_polar(1.0, PI * k as f64 / n as f64);
        bins[k.rem_euclid(n_i) as usize] += ck * phase;
    }
    let values = fft::inverse_spectrum(&bins);
    BoundarySamples::from_values(grid, values)
}

/// Value of the analytic function Σ_{k≥0} c_k z^k at a point of the open
/// disc. Rejects blocks holding negative modes and points with |z| ≥ 1.
pub fn eval_analytic_at(c: &FourierCoeffs, z: Complex64) -> Result<Complex64> {
    if c.min_mode() < 0 {
        return Err(Error::NegativeMode { mode: c.min_mode() });
    }
    let modulus = z.norm();
    if modulus >= 1.0 {
        return Err(Error::OutsideDisc { modulus });
    }
    let mut acc = Complex64::new(0.0, 0.0);
    for &ck in c.coeffs().iter().rev() {
        acc = acc * z + ck;
    }
    let mut lead = Complex64::new(1.0, 0.0);
    for _ in 0..c.min_mode() {
        lead *= z;
    }
    Ok(acc * lead)
}
