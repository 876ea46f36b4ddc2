use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Argument within the pole-proximity guard of a Gamma pole at a
    /// non-positive integer.
    #[error("argument ({re}, {im}) is within 1e-12 of a pole of Gamma")]
    PoleProximity { re: f64, im: f64 },

    /// Input outside an operation's domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// Mandelstam s below the two-body threshold (m1 + m2)^2.
    #[error("s = {s} below two-body threshold {threshold}")]
    SubThreshold { s: f64, threshold: f64 },

    /// Relative momentum k = 0 where a division by k is required.
    #[error("relative momentum k = 0")]
    ZeroMomentum,

    /// Truncation too small to carry the representation.
    #[error("l_max = {l_max} too small; need l_max >= 2")]
    TruncationTooSmall { l_max: u32 },

    /// Operands built at different truncations.
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    /// Scattering angle outside the supported window.
    #[error("theta = {theta} rad outside window ({min}, {max}) rad")]
    AngleOutsideWindow { theta: f64, min: f64, max: f64 },

    /// Abel extrapolation residual estimate above the configured tolerance.
    #[error("extrapolation residual {estimate:e} exceeds tolerance {tolerance:e}")]
    ExtrapolationDiverged { estimate: f64, tolerance: f64 },

    /// Flux factor (p1.p2)^2 - m^4 vanishes (or is negative) at threshold.
    #[error("flux factor vanishes: (p1.p2)^2 - m^4 = {flux_sq}")]
    FluxSingularity { flux_sq: f64 },

    /// Invalid regularization parameters.
    #[error("invalid regularization spec: {0}")]
    InvalidRegularization(String),
}

pub type Result<T> = std::result::Result<T, Error>;
