use core::fmt;

/// Failure modes shared across the crate.
///
/// Numerical routines return these instead of panicking so callers can
/// distinguish bad parameters from genuinely divergent quantities.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Grid constructor called with fewer than two points.
    GridTooSmall { n_points: usize },
    /// A grid is too coarse to resolve the requested modes or evaluation
    /// points.
    UnderResolved { needed: usize, available: usize },
    /// Coefficients with negative modes were passed where an analytic
    /// (nonnegative-mode) expansion is required.
    NegativeMode { mode: i64 },
    /// An evaluation point left the region where the formula converges.
    OutsideDisc { modulus: f64 },
    /// Argument on the branch cut [0, ∞) of the slit-plane logarithm.
    OnBranchCut,
    /// Evaluation at the singular point of a negative-power weight.
    AtWeightSingularity,
    /// A parameter fails its documented precondition.
    InvalidParameter { what: &'static str },
    /// An unclamped weight power is not integrable over an arc containing
    /// its singularity.
    DivergentIntegrand { exponent: f64 },
    /// The Muckenhoupt exponent formula degenerates at this p (one of the
    /// averages sits exactly at a non-integrable endpoint).
    EndpointExponent { p: f64 },
    /// A Gram matrix failed its Cholesky factorization.
    NotPositiveDefinite,
    /// A Gram matrix is numerically singular.
    IllConditioned { condition: f64 },
    /// Two boundary functions live on different grids.
    GridMismatch,
    /// Radial norm means decreased where they must be nondecreasing; the
    /// coefficients do not describe an analytic function on the disc.
    DecreasingRadialMeans { radius: f64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::GridTooSmall { n_points } => {
                write!(f, "grid needs at least 2 points, got {n_points}")
            }
            Error::UnderResolved { needed, available } => {
                write!(f, "grid too coarse: need {needed} points, have {available}")
            }
            Error::NegativeMode { mode } => {
                write!(f, "analytic expansion required, found mode {mode}")
            }
            Error::OutsideDisc { modulus } => {
                write!(f, "point with modulus {modulus} is outside the region of convergence")
            }
            Error::OnBranchCut => write!(f, "argument lies on the branch cut [0, inf)"),
            Error::AtWeightSingularity => {
                write!(f, "evaluation at the singular point of the weight")
            }
            Error::InvalidParameter { what } => write!(f, "invalid parameter: {what}"),
            Error::DivergentIntegrand { exponent } => {
                write!(f, "power {exponent} is not integrable across the singularity")
            }
            Error::EndpointExponent { p } => {
                write!(f, "p = {p} sits at an endpoint exponent; averages diverge")
            }
            Error::NotPositiveDefinite => write!(f, "matrix is not positive definite"),
            Error::IllConditioned { condition } => {
                write!(f, "matrix condition number {condition:.3e} exceeds 1e12")
            }
            Error::GridMismatch => write!(f, "operands live on different grids"),
            Error::DecreasingRadialMeans { radius } => {
                write!(f, "radial means decreased near r = {radius}")
            }
        }
    }
}

impl core::error::Error for Error {}
