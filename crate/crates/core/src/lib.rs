#![cfg_attr(not(test), no_std)]
// Validation sites use `!(x > y)` so NaN fails the check too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

//! Numerical laboratory for Hardy spaces on the unit circle weighted by
//! μ_α(θ) = |e^{iθ} − 1|^{2α}.
//!
//! The crate provides the pieces needed to experiment with the weighted
//! Szegő projection S_μ and its L^p mapping behaviour:
//!
//! * [`circle`]: half-offset uniform grids, trapezoidal quadrature, and the
//!   discrete Fourier maps between boundary samples and modes.
//! * [`weights`]: the branch power g_α(z) = (z − 1)^α on the slit plane,
//!   pointwise weight evaluation, and trigonometric moments of μ_α.
//! * [`muckenhoupt`]: A_p arc quotients for clamped power weights, the
//!   regularization ladder with fitted log-log slopes, and the boundedness
//!   interval ((2α+1)/(α+1), (2α+1)/α) with classification of (α, p) pairs.
//! * [`szego`]: the unweighted and weighted Szegő kernels, the conjugation
//!   route to the weighted projection (multiply by g_α, keep nonnegative
//!   modes, divide by g_α), the kernel quadrature route, and an independent
//!   moment-matrix kernel for cross-checking.
//! * [`norms`]: weighted L^p norms on the boundary and on interior circles,
//!   plus operator-norm lower bounds and blow-up scans across grid sizes.
//! * [`duality`]: the weighted pairing ⟨f, h⟩ = ∫ f·conj(h)·μ_α dθ, Hölder
//!   margins, self-adjointness residuals, and dual representatives.
//!
//! Everything is deterministic: randomized searches take explicit seeds, and
//! no operation reads ambient state. The crate is `no_std` (with `alloc`);
//! float math goes through `libm`.

extern crate alloc;

pub mod circle;
pub mod duality;
mod error;
mod fft;
pub mod muckenhoupt;
pub mod norms;
pub mod szego;
pub mod weights;

pub use error::Error;
pub use num_complex::Complex64;

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;
