//! The branch power g_α(z) = (z − 1)^α, the boundary weight family
//! μ_α(θ) = |e^{iθ} − 1|^{2α} = (2 sin(θ/2))^{2α}, and its trigonometric
//! moments.
//!
//! The logarithm underneath g_α takes its argument in (0, 2π), with the cut
//! along [0, ∞). For z in the closed unit disc, z − 1 lies in the disc of
//! radius 1 around −1, so arg(z − 1) ∈ [π/2, 3π/2] and the cut is never
//! approached: g_α is holomorphic on the open disc, continuous up to the
//! boundary, and vanishes only at z = 1. On the boundary it takes the
//! explicit form g_α(e^{iθ}) = (2 sin(θ/2))^α · e^{iα(θ+π)/2}, so
//! |g_α|² = μ_α there.

use core::f64::consts::PI;
use num_complex::Complex64;

use crate::circle::CircleGrid;
use crate::{Error, Result};

/// log z with arg z ∈ (0, 2π). Rejects the cut {im = 0, re ≥ 0}, including
/// the origin.
pub fn branch_log(z: Complex64) -> Result<Complex64> {
    if z.im == 0.0 && z.re >= 0.0 {
        return Err(Error::OnBranchCut);
    }
    let mut arg = libm::atan2(z.im, z.re);
    if arg <= 0.0 {
        arg += 2.0 * PI;
    }
    Ok(Complex64::new(libm::log(z.norm()), arg))
}

/// (z − 1)^α on the slit plane ℂ \ [1, ∞), for α ≥ 0. α = 0 and α = 1 are
/// returned exactly; z = 1 is rejected for α > 0 since the α < 1 powers are
/// not differentiable there.
pub fn g_alpha(z: Complex64, alpha: f64) -> Result<Complex64> {
    check_alpha(alpha)?;
    if alpha == 0.0 {
        return Ok(Complex64::new(1.0, 0.0));
    }
    let w = z - 1.0;
    if w.re == 0.0 && w.im == 0.0 {
        return Err(Error::AtWeightSingularity);
    }
    if alpha == 1.0 {
        return Ok(w);
    }
    Ok((branch_log(w)? * alpha).exp())
}

/// Typed handle for a fixed branch power, for callers that thread one α
/// through many evaluations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BranchPower {
    alpha: f64,
}

impl BranchPower {
    pub fn new(alpha: f64) -> Result<Self> {
        check_alpha(alpha)?;
        Ok(BranchPower { alpha })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn eval(&self, z: Complex64) -> Result<Complex64> {
        g_alpha(z, self.alpha)
    }
}

fn check_alpha(alpha: f64) -> Result<()> {
    if !alpha.is_finite() || alpha < 0.0 {
        return Err(Error::InvalidParameter {
            what: "alpha must be finite and nonnegative",
        });
    }
    Ok(())
}

/// Clamped power weight θ ↦ max(2|sin(θ/2)|, 2 sin(δ/2))^s.
///
/// `clamp` is the angular radius δ of the flat zone around θ = 0; δ = 0
/// means no clamping. The floor 2 sin(δ/2) equals the value the unclamped
/// base takes at angular distance δ, so the clamped profile is continuous
/// and the switch happens exactly at distance δ from the singularity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerWeight {
    exponent: f64,
    clamp: f64,
    floor: f64,
}

impl PowerWeight {
    /// Needs a finite exponent and δ ∈ [0, π].
    pub fn new(exponent: f64, clamp: f64) -> Result<Self> {
        if !exponent.is_finite() {
            return Err(Error::InvalidParameter {
                what: "weight exponent must be finite",
            });
        }
        if !(0.0..=PI).contains(&clamp) {
            return Err(Error::InvalidParameter {
                what: "clamp must lie in [0, pi]",
            });
        }
        let floor = if clamp > 0.0 {
            2.0 * libm::sin(0.5 * clamp)
        } else {
            0.0
        };
        Ok(PowerWeight {
            exponent,
            clamp,
            floor,
        })
    }

    /// The unclamped weight μ_α with exponent s = 2α.
    pub fn mu_alpha(alpha: f64) -> Result<Self> {
        check_alpha(alpha)?;
        PowerWeight::new(2.0 * alpha, 0.0)
    }

    pub fn exponent(&self) -> f64 {
        self.exponent
    }

    pub fn clamp(&self) -> f64 {
        self.clamp
    }

    /// 2 sin(δ/2), the value of the clamped base inside the flat zone.
    pub fn floor(&self) -> f64 {
        self.floor
    }

    /// Same profile with a different exponent; used for the A_p dual power.
    pub fn with_exponent(&self, exponent: f64) -> Result<Self> {
        PowerWeight::new(exponent, self.clamp)
    }
}

/// Pointwise value of the weight. 2π-periodic and even in θ. With no clamp
/// and a negative exponent, θ ≡ 0 (mod 2π) is rejected.
pub fn weight_value(w: &PowerWeight, theta: f64) -> Result<f64> {
    let base = clamped_base(w, theta);
    if w.exponent == 0.0 {
        return Ok(1.0);
    }
    if base == 0.0 {
        if w.exponent > 0.0 {
            return Ok(0.0);
        }
        return Err(Error::AtWeightSingularity);
    }
    Ok(libm::pow(base, w.exponent))
}

pub(crate) fn clamped_base(w: &PowerWeight, theta: f64) -> f64 {
    let base = 2.0 * libm::fabs(libm::sin(0.5 * theta));
    if base < w.floor {
        w.floor
    } else {
        base
    }
}

/// k-th trigonometric moment ∫_0^{2π} μ_α(θ) e^{−ikθ} dθ, computed by grid
/// quadrature. The integrand is even, so the quadrature is folded into a
/// cosine half-sum over node pairs θ_j, 2π − θ_j; the imaginary part is zero
/// by construction, not by cancellation.
///
/// The integrand has a |θ|^{2α} kink at 0, so the trapezoid error decays
/// like n^{−(1+2α)} only; pick n accordingly (n = 2^18 gives nine digits at
/// α = ¼).
pub fn moment(k: i64, alpha: f64, grid: &CircleGrid) -> Result<f64> {
    check_alpha(alpha)?;
    let w = PowerWeight::mu_alpha(alpha)?;
    let n = grid.n_points();
    let kf = k as f64;
    let mut acc = 0.0;
    for j in 0..n / 2 {
        let t = grid.node(j);
        // Node pairing: θ_{n-1-j} = 2π − θ_j, exactly in floats as well
        // (both are multiples of π/n times integers summing to 2n).
        let mu = weight_value(&w, t)?;
        acc += 2.0 * mu * libm::cos(kf * t);
    }
    if n % 2 == 1 {
        let t = grid.node(n / 2);
        acc += weight_value(&w, t)? * libm::cos(kf * t);
    }
    Ok(acc * grid.spacing())
}

/// Closed form for the same moment:
/// m_k(α) = 2π·(−1)^k·Γ(2α+1) / (Γ(α+k+1)·Γ(α−k+1)).
/// Reciprocal gamma factors at nonpositive integers are zero, which makes
/// the moments of integer-α weights vanish for |k| > α.
pub fn moment_closed_form(k: i64, alpha: f64) -> Result<f64> {
    check_alpha(alpha)?;
    let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
    let kf = k as f64;
    Ok(2.0 * PI
        * sign
        * libm::tgamma(2.0 * alpha + 1.0)
        * recip_gamma(alpha + kf + 1.0)
        * recip_gamma(alpha - kf + 1.0))
}

/// 1/Γ(x), extended by its zeros at x = 0, −1, −2, …
fn recip_gamma(x: f64) -> f64 {
    if x <= 0.0 && x == libm::floor(x) {
        return 0.0;
    }
    1.0 / libm::tgamma(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    #[test]
    fn branch_log_argument_range() {
        // Upper half plane keeps atan2's value, lower half shifts by 2π.
        let up = branch_log(Complex64::new(-1.0, 1.0)).unwrap();
        assert_abs_diff_eq!(up.im, 3.0 * PI / 4.0, epsilon = 1e-15);
        let down = branch_log(Complex64::new(-1.0, -1.0)).unwrap();
        assert_abs_diff_eq!(down.im, 5.0 * PI / 4.0, epsilon = 1e-15);
        let neg = branch_log(Complex64::new(-2.0, 0.0)).unwrap();
        assert_abs_diff_eq!(neg.im, PI, epsilon = 1e-15);
        assert_abs_diff_eq!(neg.re, libm::log(2.0), epsilon = 1e-15);
        for bad in [
            Complex64::new(1.0, 0.0),
            Complex64::new(0.0, 0.0),
            Complex64::new(3.0, -0.0),
        ] {
            assert!(matches!(branch_log(bad), Err(Error::OnBranchCut)));
        }
    }

    #[test]
    fn g_alpha_boundary_closed_form() {
        // g_α(e^{iθ}) = (2 sin(θ/2))^α e^{iα(θ+π)/2}
        for &alpha in &[0.25, 0.5, 1.0, 2.5] {
            for &theta in &[0.3, 1.0, PI, 5.0] {
                let z = Complex64::from_polar(1.0, theta);
                let got = g_alpha(z, alpha).unwrap();
                let expected = Complex64::from_polar(
                    libm::pow(2.0 * libm::sin(0.5 * theta), alpha),
                    alpha * (theta + PI) / 2.0,
                );
                assert!(
                    (got - expected).norm() < 1e-13,
                    "alpha={alpha} theta={theta}"
                );
            }
        }
    }

    #[test]
    fn g_alpha_special_cases() {
        let z = Complex64::new(0.3, -0.4);
        assert_eq!(g_alpha(z, 0.0).unwrap(), Complex64::new(1.0, 0.0));
        assert_eq!(g_alpha(z, 1.0).unwrap(), z - 1.0);
        assert!(matches!(
            g_alpha(Complex64::new(1.0, 0.0), 0.5),
            Err(Error::AtWeightSingularity)
        ));
        assert!(g_alpha(z, -0.5).is_err());
        // g_1 at z = 1 is also rejected; the family is uniform in α > 0.
        assert!(g_alpha(Complex64::new(1.0, 0.0), 1.0).is_err());
    }

    #[test]
    fn g_alpha_multiplicative_in_alpha() {
        let z = Complex64::new(-0.2, 0.7);
        let a = g_alpha(z, 0.7).unwrap();
        let b = g_alpha(z, 1.6).unwrap();
        let ab = g_alpha(z, 2.3).unwrap();
        assert!((a * b - ab).norm() < 1e-14);
    }

    #[test]
    fn weight_matches_squared_branch_power_on_boundary() {
        let w = PowerWeight::mu_alpha(0.75).unwrap();
        for &theta in &[0.1, 1.3, PI, 4.4] {
            let z = Complex64::from_polar(1.0, theta);
            let g = g_alpha(z, 0.75).unwrap();
            assert_abs_diff_eq!(
                weight_value(&w, theta).unwrap(),
                g.norm_sqr(),
                epsilon = 1e-13
            );
        }
    }

    #[test]
    fn clamp_switches_exactly_at_delta() {
        let delta = 0.2;
        let w = PowerWeight::new(-1.0, delta).unwrap();
        let floor = 2.0 * libm::sin(0.5 * delta);
        // Inside the flat zone the value is constant.
        assert_abs_diff_eq!(
            weight_value(&w, 0.05).unwrap(),
            1.0 / floor,
            epsilon = 1e-15
        );
        assert_abs_diff_eq!(weight_value(&w, 0.0).unwrap(), 1.0 / floor, epsilon = 1e-15);
        // At distance exactly δ both branches agree.
        assert_abs_diff_eq!(
            weight_value(&w, delta).unwrap(),
            1.0 / floor,
            epsilon = 1e-15
        );
        // Outside it follows the unclamped base.
        let t = 0.9;
        assert_abs_diff_eq!(
            weight_value(&w, t).unwrap(),
            1.0 / (2.0 * libm::sin(0.5 * t)),
            epsilon = 1e-14
        );
    }

    #[test]
    fn unclamped_negative_power_rejects_origin() {
        let w = PowerWeight::new(-0.5, 0.0).unwrap();
        assert!(matches!(
            weight_value(&w, 0.0),
            Err(Error::AtWeightSingularity)
        ));
        let pos = PowerWeight::new(0.5, 0.0).unwrap();
        assert_eq!(weight_value(&pos, 0.0).unwrap(), 0.0);
    }

    #[test]
    fn closed_form_moment_spot_values() {
        assert_abs_diff_eq!(moment_closed_form(0, 0.5).unwrap(), 8.0, epsilon = 1e-12);
        assert_abs_diff_eq!(
            moment_closed_form(1, 0.5).unwrap(),
            -8.0 / 3.0,
            epsilon = 1e-12
        );
        assert_abs_diff_eq!(
            moment_closed_form(0, 1.0).unwrap(),
            4.0 * PI,
            epsilon = 1e-12
        );
        assert_abs_diff_eq!(
            moment_closed_form(1, 1.0).unwrap(),
            -2.0 * PI,
            epsilon = 1e-12
        );
        // Integer α: moments vanish beyond |k| = α.
        assert_eq!(moment_closed_form(2, 1.0).unwrap(), 0.0);
        assert_eq!(moment_closed_form(-3, 2.0).unwrap(), 0.0);
        assert_abs_diff_eq!(
            moment_closed_form(0, 2.0).unwrap(),
            12.0 * PI,
            epsilon = 1e-10
        );
        // ∫ (2 sin(θ/2))^10 dθ = 2π·binom(10,5) = 504π
        assert_abs_diff_eq!(
            moment_closed_form(0, 5.0).unwrap() / PI,
            504.0,
            epsilon = 1e-9
        );
    }

    #[test]
    fn moment_symmetry_in_k() {
        let g = CircleGrid::new(1 << 12).unwrap();
        for k in 0..5 {
            let plus = moment(k, 0.8, &g).unwrap();
            let minus = moment(-k, 0.8, &g).unwrap();
            assert_abs_diff_eq!(plus, minus, epsilon = 1e-12);
        }
    }

    #[test]
    fn quadrature_moments_match_closed_form() {
        // n = 2^18 so the kink error n^{−(1+2α)} clears 1e-6 relative even
        // at α = ¼.
        let g = CircleGrid::new(1 << 18).unwrap();
        for &alpha in &[0.25, 0.5, 1.0, 2.0] {
            for k in -16i64..=16 {
                let q = moment(k, alpha, &g).unwrap();
                let c = moment_closed_form(k, alpha).unwrap();
                let scale = moment_closed_form(0, alpha).unwrap();
                assert!(
                    (q - c).abs() <= 1e-6 * scale.max(c.abs()),
                    "alpha={alpha} k={k}: quad {q:e} vs closed {c:e}"
                );
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn branch_power_modulus_is_plain_power(re in -0.95f64..0.95, im in -0.95f64..0.95, alpha in 0.0f64..3.0) {
            let z = Complex64::new(re, im);
            prop_assume!(z.norm() < 0.999);
            prop_assume!((z - 1.0).norm() > 1e-6);
            let g = g_alpha(z, alpha).unwrap();
            let expected = libm::pow((z - 1.0).norm(), alpha);
            prop_assert!((g.norm() - expected).abs() <= 1e-12 * expected.max(1.0));
        }

        #[test]
        fn clamped_weight_dominates_unclamped_for_negative_powers(
            theta in 0.01f64..6.27,
            delta in 0.0f64..1.0,
            s in -2.0f64..0.0,
        ) {
            let clamped = PowerWeight::new(s, delta).unwrap();
            let plain = PowerWeight::new(s, 0.0).unwrap();
            let c = weight_value(&clamped, theta).unwrap();
            let p = weight_value(&plain, theta).unwrap();
            prop_assert!(c <= p * (1.0 + 1e-12));
        }
    }
}
