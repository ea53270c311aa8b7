//! Szegő projections and kernels, unweighted and weighted.
//!
//! Two independent computational routes are kept side by side on purpose:
//!
//! * the conjugation route: multiplying by g_α turns the weighted projection
//!   into the plain Riesz projection (keep nonnegative modes), so
//!   S_μf = S(f·g)/g and S_μ(z,w) = S(z,w)/(g(z)·conj(g(w)));
//! * the moment route: the reproducing kernel of the monomial span under
//!   the μ_α inner product, K_N(z,w) = v(z)ᵀ·G^{−1}·conj(v(w)) with the
//!   Toeplitz Gram matrix G of trigonometric moments.
//!
//! Neither route knows about the other's formulas; their agreement is the
//! working check on both.

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;
use num_complex::Complex64;

use crate::circle::{self, BoundarySamples, CircleGrid, FourierCoeffs};
use crate::weights::{self, PowerWeight};
use crate::{Error, Result};

/// Fourier truncation to nonnegative modes. Idempotent; the unweighted
/// Szegő projection in coefficient space.
pub fn riesz_project(c: &FourierCoeffs) -> FourierCoeffs {
    if c.max_mode() < 0 {
        return FourierCoeffs::new(0, vec![Complex64::new(0.0, 0.0)]).unwrap();
    }
    let start = c.min_mode().max(0);
    let coeffs = (start..=c.max_mode()).map(|k| c.coeff(k)).collect();
    FourierCoeffs::new(start, coeffs).unwrap()
}

/// Unweighted Szegő kernel S(z,w) = 1/(2π(1 − z·conj(w))), the sum of
/// e_n(z)·conj(e_n(w)) over the orthonormal basis e_n = z^n/√(2π).
pub fn szego_kernel(z: Complex64, w: Complex64) -> Result<Complex64> {
    let t = z * w.conj();
    let modulus = t.norm();
    if modulus >= 1.0 {
        return Err(Error::OutsideDisc { modulus });
    }
    Ok(Complex64::new(1.0, 0.0) / ((Complex64::new(1.0, 0.0) - t) * 2.0 * PI))
}

/// One evaluation of the weighted kernel S_μ(z,w).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WeightedKernelEval {
    pub alpha: f64,
    pub z: Complex64,
    pub w: Complex64,
    pub value: Complex64,
}

/// Weighted Szegő kernel through the conjugation identity
/// S_μ(z,w) = S(z,w)/(g_α(z)·conj(g_α(w))). Rejects z = 1 and w = 1.
pub fn weighted_kernel(z: Complex64, w: Complex64, alpha: f64) -> Result<WeightedKernelEval> {
    let s = szego_kernel(z, w)?;
    let gz = weights::g_alpha(z, alpha)?;
    let gw = weights::g_alpha(w, alpha)?;
    Ok(WeightedKernelEval {
        alpha,
        z,
        w,
        value: s / (gz * gw.conj()),
    })
}

/// Toeplitz Gram matrix G_{nm} = m_{n−m}(α) of the monomials under the μ_α
/// inner product, with its Cholesky factor and a condition estimate.
#[derive(Debug, Clone)]
pub struct GramSystem {
    alpha: f64,
    dim: usize,
    chol: Vec<f64>,
    condition: f64,
}

impl GramSystem {
    /// Moments by grid quadrature; the grid controls their accuracy.
    pub fn new(alpha: f64, dim: usize, grid: &CircleGrid) -> Result<Self> {
        let mut m = Vec::with_capacity(dim);
        for k in 0..dim {
            m.push(weights::moment(k as i64, alpha, grid)?);
        }
        Self::from_moments(alpha, dim, &m)
    }

    /// Moments from the closed-form Γ expression; exact to roundoff.
    pub fn from_closed_form(alpha: f64, dim: usize) -> Result<Self> {
        let mut m = Vec::with_capacity(dim);
        for k in 0..dim {
            m.push(weights::moment_closed_form(k as i64, alpha)?);
        }
        Self::from_moments(alpha, dim, &m)
    }

    fn from_moments(alpha: f64, dim: usize, m: &[f64]) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidParameter {
                what: "Gram dimension must be positive",
            });
        }
        let mut matrix = vec![0.0; dim * dim];
        for i in 0..dim {
            for j in 0..dim {
                matrix[i * dim + j] = m[i.abs_diff(j)];
            }
        }
        let chol = cholesky(&matrix, dim)?;
        let condition = condition_estimate(&matrix, &chol, dim);
        if condition > 1e12 {
            return Err(Error::IllConditioned { condition });
        }
        Ok(GramSystem {
            alpha,
            dim,
            chol,
            condition,
        })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// λ_max/λ_min estimate from power and inverse iteration.
    pub fn condition(&self) -> f64 {
        self.condition
    }

    fn solve(&self, rhs: &[Complex64]) -> Vec<Complex64> {
        let n = self.dim;
        let l = &self.chol;
        let mut y = rhs.to_vec();
        for i in 0..n {
            let mut acc = y[i];
            for k in 0..i {
                acc -= l[i * n + k] * y[k];
            }
            y[i] = acc / l[i * n + i];
        }
        for i in (0..n).rev() {
            let mut acc = y[i];
            for k in i + 1..n {
                acc -= l[k * n + i] * y[k];
            }
            y[i] = acc / l[i * n + i];
        }
        y
    }
}

/// Reproducing kernel of span{1, z, …, z^{N−1}} under ⟨·,·⟩_μ:
/// K_N(z,w) = v(z)ᵀ·G^{−1}·conj(v(w)). Converges to the weighted kernel as
/// N grows. Points are kept at |z|, |w| ≤ 0.9.
pub fn weighted_kernel_via_moments(
    sys: &GramSystem,
    z: Complex64,
    w: Complex64,
) -> Result<Complex64> {
    for point in [z, w] {
        let modulus = point.norm();
        if modulus > 0.9 {
            return Err(Error::OutsideDisc { modulus });
        }
    }
    let rhs: Vec<Complex64> = powers(w, sys.dim).iter().map(|v| v.conj()).collect();
    let x = sys.solve(&rhs);
    let vz = powers(z, sys.dim);
    let mut acc = Complex64::new(0.0, 0.0);
    for i in 0..sys.dim {
        acc += vz[i] * x[i];
    }
    Ok(acc)
}

fn powers(z: Complex64, n: usize) -> Vec<Complex64> {
    let mut v = Vec::with_capacity(n);
    let mut cur = Complex64::new(1.0, 0.0);
    for _ in 0..n {
        v.push(cur);
        cur *= z;
    }
    v
}

/// Weighted projection by conjugation: h = riesz_project(dft(f·g_α)).
/// The projected function is z ↦ eval_analytic_at(h, z)/g_α(z); holomorphic
/// inputs come back unchanged.
pub fn project_weighted(f: &BoundarySamples, alpha: f64) -> Result<FourierCoeffs> {
    let n = f.n_points();
    if n < 4 {
        return Err(Error::UnderResolved {
            needed: 4,
            available: n,
        });
    }
    let g = boundary_branch_power(f.grid(), alpha)?;
    let fg_values: Vec<Complex64> = f
        .values()
        .iter()
        .zip(&g)
        .map(|(&a, &b)| a * b)
        .collect();
    let fg = BoundarySamples::from_values(f.grid(), fg_values)?;
    let c = circle::dft(&fg, (n - 1) / 2)?;
    Ok(riesz_project(&c))
}

/// Value of a projection result (numerator coefficients against 1/g_α) at
/// an interior point.
pub fn eval_projected(h: &FourierCoeffs, alpha: f64, z: Complex64) -> Result<Complex64> {
    let num = circle::eval_analytic_at(h, z)?;
    Ok(num / weights::g_alpha(z, alpha)?)
}

/// Boundary trace of the projected function on the input grid.
pub fn project_to_samples(f: &BoundarySamples, alpha: f64) -> Result<BoundarySamples> {
    let h = project_weighted(f, alpha)?;
    let hs = circle::idft(&h, f.grid())?;
    let g = boundary_branch_power(f.grid(), alpha)?;
    let values = hs
        .values()
        .iter()
        .zip(&g)
        .map(|(&num, &gj)| num / gj)
        .collect();
    BoundarySamples::from_values(f.grid(), values)
}

/// Weighted projection by direct kernel quadrature:
/// (S_μf)(z) = ∫ S_μ(z,w)·f(w)·μ_α(w) dθ on the grid. Evaluation points
/// must stay at |z| ≤ 0.9 and the grid must resolve the kernel there
/// (n ≥ 50/(1 − max|z|)).
pub fn project_weighted_quadrature(
    f: &BoundarySamples,
    alpha: f64,
    eval_points: &[Complex64],
) -> Result<Vec<Complex64>> {
    let n = f.n_points();
    let mut max_r = 0.0f64;
    for z in eval_points {
        max_r = max_r.max(z.norm());
    }
    if max_r > 0.9 {
        return Err(Error::OutsideDisc { modulus: max_r });
    }
    let needed = libm::ceil(50.0 / (1.0 - max_r)) as usize;
    if n < needed {
        return Err(Error::UnderResolved {
            needed,
            available: n,
        });
    }
    let mu = PowerWeight::mu_alpha(alpha)?;
    let grid = f.grid();
    let spacing = grid.spacing();
    let mut out = Vec::with_capacity(eval_points.len());
    for &z in eval_points {
        let mut acc = Complex64::new(0.0, 0.0);
        for j in 0..n {
            let w = grid.point(j);
            let kernel = weighted_kernel(z, w, alpha)?.value;
            acc += kernel * f.values()[j] * weights::weight_value(&mu, grid.node(j))?;
        }
        out.push(acc * spacing);
    }
    Ok(out)
}

/// Which boundary factor turns f into f̃ before the plain projection.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RescaleVariant {
    /// f̃ = f·g_α. Makes (1/g)·S(f̃) reproduce the weighted projection and
    /// fix holomorphic inputs.
    AnalyticFactor,
    /// f̃ = f·|w−1|^{2α}/g_α = f·conj(g_α). Same modulus as the analytic
    /// variant, so norm identities still hold, but the projection no
    /// longer fixes its range: f ≡ 1 with α = 1 comes back as −1/(z−1).
    ConjugateFactor,
}

/// The rescaled boundary function f̃. Both variants satisfy
/// |f̃| = |f|·|w−1|^α exactly at each sample.
pub fn rescaled_samples(
    f: &BoundarySamples,
    alpha: f64,
    variant: RescaleVariant,
) -> Result<BoundarySamples> {
    let g = boundary_branch_power(f.grid(), alpha)?;
    let values = f
        .values()
        .iter()
        .zip(&g)
        .map(|(&a, &gj)| match variant {
            RescaleVariant::AnalyticFactor => a * gj,
            RescaleVariant::ConjugateFactor => a * gj.conj(),
        })
        .collect();
    BoundarySamples::from_values(f.grid(), values)
}

/// Projection through the rescaling route: z ↦ S(f̃)(z)/g_α(z) at the given
/// interior points. With `AnalyticFactor` this equals `project_weighted`;
/// the `ConjugateFactor` variant is kept for comparison.
pub fn rescaled_project(
    f: &BoundarySamples,
    alpha: f64,
    p: f64,
    eval_points: &[Complex64],
    variant: RescaleVariant,
) -> Result<Vec<Complex64>> {
    if !(p > 1.0) || !p.is_finite() {
        return Err(Error::InvalidParameter {
            what: "p must be finite and > 1",
        });
    }
    let n = f.n_points();
    let mut max_r = 0.0f64;
    for z in eval_points {
        max_r = max_r.max(z.norm());
    }
    if max_r > 0.9 {
        return Err(Error::OutsideDisc { modulus: max_r });
    }
    let needed = libm::ceil(50.0 / (1.0 - max_r)) as usize;
    if n < needed {
        return Err(Error::UnderResolved {
            needed,
            available: n,
        });
    }
    let ft = rescaled_samples(f, alpha, variant)?;
    let h = riesz_project(&circle::dft(&ft, (n - 1) / 2)?);
    let mut out = Vec::with_capacity(eval_points.len());
    for &z in eval_points {
        let num = circle::eval_analytic_at(&h, z)?;
        out.push(num / weights::g_alpha(z, alpha)?);
    }
    Ok(out)
}

/// g_α sampled at the grid nodes; nodes never hit z = 1.
pub(crate) fn boundary_branch_power(grid: &CircleGrid, alpha: f64) -> Result<Vec<Complex64>> {
    let mut out = Vec::with_capacity(grid.n_points());
    for j in 0..grid.n_points() {
        out.push(weights::g_alpha(grid.point(j), alpha)?);
    }
    Ok(out)
}

fn cholesky(a: &[f64], n: usize) -> Result<Vec<f64>> {
    let mut l = vec![0.0; n * n];
    for i in 0..n {
        for j in 0..=i {
            let mut sum = a[i * n + j];
            for k in 0..j {
                sum -= l[i * n + k] * l[j * n + k];
            }
            if i == j {
                if sum <= 0.0 {
                    return Err(Error::NotPositiveDefinite);
                }
                l[i * n + i] = libm::sqrt(sum);
            } else {
                l[i * n + j] = sum / l[j * n + j];
            }
        }
    }
    Ok(l)
}

/// Power iteration for λ_max, inverse iteration through the factor for
/// λ_min; 80 rounds each from a fixed starting vector.
fn condition_estimate(a: &[f64], l: &[f64], n: usize) -> f64 {
    let mut v: Vec<f64> = (0..n).map(|j| 1.0 / (1.0 + j as f64)).collect();
    normalize(&mut v);
    let mut lam_max = 0.0;
    for _ in 0..80 {
        let w = mat_vec(a, &v, n);
        lam_max = dot(&v, &w);
        v = w;
        normalize(&mut v);
    }
    let mut u: Vec<f64> = (0..n).map(|j| 1.0 / (1.0 + j as f64)).collect();
    normalize(&mut u);
    let mut lam_min = lam_max;
    for _ in 0..80 {
        let w = solve_real(l, &u, n);
        u = w;
        normalize(&mut u);
        let au = mat_vec(a, &u, n);
        lam_min = dot(&u, &au);
    }
    if lam_min <= 0.0 {
        return f64::INFINITY;
    }
    lam_max / lam_min
}

fn mat_vec(a: &[f64], v: &[f64], n: usize) -> Vec<f64> {
    let mut out = vec![0.0; n];
    for i in 0..n {
        let mut acc = 0.0;
        for j in 0..n {
            acc += a[i * n + j] * v[j];
        }
        out[i] = acc;
    }
    out
}

fn solve_real(l: &[f64], rhs: &[f64], n: usize) -> Vec<f64> {
    let mut y = rhs.to_vec();
    for i in 0..n {
        let mut acc = y[i];
        for k in 0..i {
            acc -= l[i * n + k] * y[k];
        }
        y[i] = acc / l[i * n + i];
    }
    for i in (0..n).rev() {
        let mut acc = y[i];
        for k in i + 1..n {
            acc -= l[k * n + i] * y[k];
        }
        y[i] = acc / l[i * n + i];
    }
    y
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn normalize(v: &mut [f64]) {
    let norm = libm::sqrt(dot(v, v));
    if norm > 0.0 {
        for x in v.iter_mut() {
            *x /= norm;
        }
    }
}
