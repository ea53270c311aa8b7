//! Muckenhoupt A_p diagnostics for clamped power weights on the circle.
//!
//! The arc quotient is the classical A_p expression
//! (avg_I w)·(avg_I w^{1/(1−p)})^{p−1}. For w(θ) = max(2|sin(θ/2)|, δ_eff)^s
//! both integrands are powers of the same clamped base, singular only where
//! θ ≡ 0 (mod 2π). Arcs are cut at those points and integrated by composite
//! midpoint rules on dyadic blocks that shrink toward each singular
//! endpoint; the innermost scale is finished in closed form (the clamp zone
//! is exactly flat, and the unclamped integrable case gets a two-term series
//! of (2 sin(θ/2))^c around 0).
//!
//! Shrinking the clamp δ drives the quotient along a power law whose
//! exponent min(0, a+1) + (p−1)·min(0, b+1), with a = α(2−p) and
//! b = a/(1−p), separates the bounded regime (slope 0) from divergence.
//! The slope vanishes exactly when p lies strictly inside
//! ((2α+1)/(α+1), (2α+1)/α).

use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::weights::{clamped_base, PowerWeight};
use crate::{Error, Result};

/// Arc I = (center − half_width, center + half_width) on the circle,
/// taken modulo 2π.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CircleArc {
    center: f64,
    half_width: f64,
}

impl CircleArc {
    /// Needs center ∈ [0, 2π) and half_width ∈ (0, π].
    pub fn new(center: f64, half_width: f64) -> Result<Self> {
        if !(0.0..2.0 * PI).contains(&center) {
            return Err(Error::InvalidParameter {
                what: "arc center must lie in [0, 2*pi)",
            });
        }
        if !(half_width > 0.0 && half_width <= PI) {
            return Err(Error::InvalidParameter {
                what: "arc half-width must lie in (0, pi]",
            });
        }
        Ok(CircleArc { center, half_width })
    }

    pub fn center(&self) -> f64 {
        self.center
    }

    pub fn half_width(&self) -> f64 {
        self.half_width
    }

    pub fn length(&self) -> f64 {
        2.0 * self.half_width
    }

    fn lo(&self) -> f64 {
        self.center - self.half_width
    }

    fn hi(&self) -> f64 {
        self.center + self.half_width
    }

    /// True when some multiple of 2π lies in the closed arc.
    pub fn touches_singularity(&self) -> bool {
        libm::ceil(self.lo() / (2.0 * PI)) <= libm::floor(self.hi() / (2.0 * PI))
    }
}

/// Position of p relative to the boundedness interval.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ApClass {
    Inside,
    Boundary,
    Outside,
}

/// Interval endpoints together with the classification of a given p.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ApVerdict {
    pub class: ApClass,
    pub q0: f64,
    pub p0: f64,
}

/// Result of a regularization ladder scan at fixed arc and varying clamp.
///
/// `a` duplicates the weight exponent `s` and `b = s/(1−p)` is the exponent
/// of the dual integrand; both are recorded so reports are self-contained.
#[derive(Debug, Clone, PartialEq)]
pub struct ApScanReport {
    pub alpha: f64,
    pub p: f64,
    pub s: f64,
    pub a: f64,
    pub b: f64,
    /// (δ, quotient) pairs, δ strictly decreasing.
    pub ladder: Vec<(f64, f64)>,
    /// Least-squares slope of log(quotient) against log(δ) on the last
    /// four rungs.
    pub fitted_slope: f64,
    /// None when p sits at an interval endpoint (log-divergence regime,
    /// no power law to predict).
    pub predicted_slope: Option<f64>,
    pub class: ApClass,
}

/// A_p quotient of `w` over `arc`: (avg w)·(avg w^{1/(1−p)})^{p−1}.
///
/// `resolution` is the number of midpoint panels per dyadic block (≥ 64).
/// Jensen's inequality forces the true quotient ≥ 1; the computed value is
/// asserted ≥ 1 − 1e−6.
pub fn arc_quotient(w: &PowerWeight, p: f64, arc: &CircleArc, resolution: usize) -> Result<f64> {
    if !(p > 1.0) || !p.is_finite() {
        return Err(Error::InvalidParameter {
            what: "p must be finite and > 1",
        });
    }
    if resolution < 64 {
        return Err(Error::InvalidParameter {
            what: "resolution must be at least 64",
        });
    }
    let dual = w.with_exponent(w.exponent() / (1.0 - p))?;
    let len = arc.length();
    let first = graded_integral(w, arc, resolution)? / len;
    let second = graded_integral(&dual, arc, resolution)? / len;
    let q = first * libm::pow(second, p - 1.0);
    assert!(
        q >= 1.0 - 1e-6,
        "quotient {q} violates the Jensen lower bound"
    );
    Ok(q)
}

/// Largest arc quotient over a family; a lower bound for the A_p constant.
pub fn ap_supremum_estimate(
    w: &PowerWeight,
    p: f64,
    arcs: &[CircleArc],
    resolution: usize,
) -> Result<f64> {
    if arcs.is_empty() {
        return Err(Error::InvalidParameter {
            what: "arc family must be nonempty",
        });
    }
    let mut best = 1.0f64;
    for arc in arcs {
        let q = arc_quotient(w, p, arc, resolution)?;
        if q > best {
            best = q;
        }
    }
    Ok(best)
}

/// Dyadic arc family: for each depth m = 1..=max_depth, centers 2πk/2^m
/// (k = 0..2^m) with half-width π/2^m. Hits both the arcs hugging the
/// singularity and the ones far from it.
pub fn dyadic_arc_family(max_depth: u32) -> Vec<CircleArc> {
    let mut arcs = Vec::new();
    for m in 1..=max_depth {
        let parts = 1u64 << m;
        let half = PI / parts as f64;
        for k in 0..parts {
            let center = 2.0 * PI * k as f64 / parts as f64;
            arcs.push(CircleArc { center, half_width: half });
        }
    }
    arcs
}

/// Clamp ladder δ = 2^{−4}, …, 2^{−14} used by the scans.
pub fn default_delta_ladder() -> Vec<f64> {
    (4..=14).map(|k| libm::pow(2.0, -(k as f64))).collect()
}

/// Regularization scan: fixes the arc (−π/4, π/4), builds the test weight
/// s = α(2−p), and walks the clamp down the ladder, fitting the log-log
/// slope on the last four rungs.
pub fn ap_scan(
    alpha: f64,
    p: f64,
    delta_ladder: &[f64],
    resolution: usize,
) -> Result<ApScanReport> {
    if delta_ladder.len() < 4 {
        return Err(Error::InvalidParameter {
            what: "clamp ladder needs at least 4 rungs",
        });
    }
    if delta_ladder.windows(2).any(|w| w[1] >= w[0]) || delta_ladder[0] <= 0.0 {
        return Err(Error::InvalidParameter {
            what: "clamp ladder must be positive and strictly decreasing",
        });
    }
    let s = alpha * (2.0 - p);
    let b = s / (1.0 - p);
    let arc = CircleArc::new(0.0, PI / 4.0)?;
    let mut ladder = Vec::with_capacity(delta_ladder.len());
    for &delta in delta_ladder {
        let w = PowerWeight::new(s, delta)?;
        let q = arc_quotient(&w, p, &arc, resolution)?;
        ladder.push((delta, q));
    }
    let tail = &ladder[ladder.len() - 4..];
    let fitted_slope = loglog_slope(tail);
    let predicted_slope = match predicted_slope(alpha, p) {
        Ok(v) => Some(v),
        Err(Error::EndpointExponent { .. }) => None,
        Err(e) => return Err(e),
    };
    let class = classify(alpha, p, 1e-9)?.class;
    Ok(ApScanReport {
        alpha,
        p,
        s,
        a: s,
        b,
        ladder,
        fitted_slope,
        predicted_slope,
        class,
    })
}

/// Power law predicted for the clamp ladder:
/// min(0, a+1) + (p−1)·min(0, b+1) with a = α(2−p), b = a/(1−p).
/// Zero exactly when p is strictly inside the boundedness interval.
/// Endpoints (a = −1 or b = −1) diverge logarithmically, not as a power,
/// and are rejected.
pub fn predicted_slope(alpha: f64, p: f64) -> Result<f64> {
    check_alpha(alpha)?;
    if !(p > 1.0) || !p.is_finite() {
        return Err(Error::InvalidParameter {
            what: "p must be finite and > 1",
        });
    }
    let a = alpha * (2.0 - p);
    let b = a / (1.0 - p);
    if (a + 1.0).abs() < 1e-12 || (b + 1.0).abs() < 1e-12 {
        return Err(Error::EndpointExponent { p });
    }
    Ok((a + 1.0).min(0.0) + (p - 1.0) * (b + 1.0).min(0.0))
}

/// Endpoints ((2α+1)/(α+1), (2α+1)/α) of the boundedness interval.
/// α = 0 gives (1, ∞). The endpoints are conjugate: 1/q0 + 1/p0 = 1.
pub fn boundedness_interval(alpha: f64) -> Result<(f64, f64)> {
    check_alpha(alpha)?;
    let q0 = (2.0 * alpha + 1.0) / (alpha + 1.0);
    let p0 = (2.0 * alpha + 1.0) / alpha;
    Ok((q0, p0))
}

/// Sorts p into Inside/Boundary/Outside, with |p − endpoint| ≤ tol counting
/// as Boundary.
pub fn classify(alpha: f64, p: f64, tol: f64) -> Result<ApVerdict> {
    if !(p > 1.0) || !p.is_finite() {
        return Err(Error::InvalidParameter {
            what: "p must be finite and > 1",
        });
    }
    if !(tol >= 0.0) {
        return Err(Error::InvalidParameter {
            what: "tolerance must be nonnegative",
        });
    }
    let (q0, p0) = boundedness_interval(alpha)?;
    let class = if (p - q0).abs() <= tol || (p0.is_finite() && (p - p0).abs() <= tol) {
        ApClass::Boundary
    } else if p > q0 && p < p0 {
        ApClass::Inside
    } else {
        ApClass::Outside
    };
    Ok(ApVerdict { class, q0, p0 })
}

fn check_alpha(alpha: f64) -> Result<()> {
    if !alpha.is_finite() || alpha < 0.0 {
        return Err(Error::InvalidParameter {
            what: "alpha must be finite and nonnegative",
        });
    }
    Ok(())
}

fn loglog_slope(points: &[(f64, f64)]) -> f64 {
    let n = points.len() as f64;
    let mut mx = 0.0;
    let mut my = 0.0;
    for &(d, q) in points {
        mx += libm::log(d);
        my += libm::log(q);
    }
    mx /= n;
    my /= n;
    let mut num = 0.0;
    let mut den = 0.0;
    for &(d, q) in points {
        let dx = libm::log(d) - mx;
        num += dx * (libm::log(q) - my);
        den += dx * dx;
    }
    num / den
}

/// ∫ over the arc of the clamped power, cut at singular points and graded
/// toward them.
fn graded_integral(w: &PowerWeight, arc: &CircleArc, panels: usize) -> Result<f64> {
    let two_pi = 2.0 * PI;
    let (lo, hi) = (arc.lo(), arc.hi());
    if w.clamp() == 0.0 && w.exponent() <= -1.0 && arc.touches_singularity() {
        return Err(Error::DivergentIntegrand {
            exponent: w.exponent(),
        });
    }
    let mut cuts: Vec<(f64, bool)> = Vec::new();
    cuts.push((lo, is_singular_point(lo)));
    let k0 = libm::ceil(lo / two_pi) as i64;
    let k1 = libm::floor(hi / two_pi) as i64;
    for k in k0..=k1 {
        let s = two_pi * k as f64;
        if s > lo && s < hi {
            cuts.push((s, true));
        }
    }
    cuts.push((hi, is_singular_point(hi)));
    let mut total = 0.0;
    for win in cuts.windows(2) {
        let (u, sing_u) = win[0];
        let (v, sing_v) = win[1];
        if v <= u {
            continue;
        }
        let mid = 0.5 * (u + v);
        total += half_piece(w, mid, u, sing_u, panels)?;
        total += half_piece(w, mid, v, sing_v, panels)?;
    }
    Ok(total)
}

fn is_singular_point(x: f64) -> bool {
    let two_pi = 2.0 * PI;
    let r = x - two_pi * libm::round(x / two_pi);
    libm::fabs(r) < 1e-13 * (1.0 + libm::fabs(x))
}

/// Integral of the weight between `a` and the (possibly singular) endpoint
/// `e`. Nonsingular halves get one composite midpoint pass; singular halves
/// descend in dyadic blocks [d/2, d] of distance to `e` until the remainder
/// is a flat clamp zone or small enough for the series tail.
fn half_piece(w: &PowerWeight, a: f64, e: f64, singular: bool, panels: usize) -> Result<f64> {
    let d0 = libm::fabs(e - a);
    if d0 == 0.0 {
        return Ok(0.0);
    }
    let c = w.exponent();
    if !singular {
        let (lo, hi) = if a < e { (a, e) } else { (e, a) };
        return Ok(midpoint_pass(w, lo, hi, 2 * panels));
    }
    // Blocks are parametrized by distance t from e; the weight only
    // depends on that distance (it is even and 2π-periodic around e).
    let side = if a < e { -1.0 } else { 1.0 };
    let tail_cut = if w.clamp() > 0.0 {
        w.clamp().min(d0)
    } else {
        if c <= -1.0 {
            return Err(Error::DivergentIntegrand { exponent: c });
        }
        (1e-3f64).min(d0 / 16.0)
    };
    let mut acc = 0.0;
    let mut dhi = d0;
    while dhi > tail_cut {
        let dlo = (0.5 * dhi).max(tail_cut);
        acc += midpoint_pass_offset(w, e, side, dlo, dhi, panels);
        dhi = dlo;
    }
    if w.clamp() > 0.0 {
        // Remaining [0, dhi] sits inside the flat zone.
        acc += dhi * libm::pow(w.floor(), c);
    } else {
        acc += series_tail(c, dhi);
    }
    Ok(acc)
}

fn midpoint_pass(w: &PowerWeight, lo: f64, hi: f64, panels: usize) -> f64 {
    let h = (hi - lo) / panels as f64;
    let mut acc = 0.0;
    for i in 0..panels {
        let t = lo + (i as f64 + 0.5) * h;
        acc += libm::pow(clamped_base(w, t), w.exponent());
    }
    acc * h
}

fn midpoint_pass_offset(w: &PowerWeight, e: f64, side: f64, dlo: f64, dhi: f64, panels: usize) -> f64 {
    let h = (dhi - dlo) / panels as f64;
    let mut acc = 0.0;
    for i in 0..panels {
        let t = dlo + (i as f64 + 0.5) * h;
        acc += libm::pow(clamped_base(w, e + side * t), w.exponent());
    }
    acc * h
}

/// ∫_0^t (2 sin(θ/2))^c dθ for small t and c > −1, from the expansion
/// 2 sin(θ/2) = θ(1 − θ²/24 + O(θ⁴)): the next term is O(t^{c+5}).
fn series_tail(c: f64, t: f64) -> f64 {
    libm::pow(t, c + 1.0) / (c + 1.0) - (c / 24.0) * libm::pow(t, c + 3.0) / (c + 3.0)
}
