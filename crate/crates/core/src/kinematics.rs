//! Relativistic two-body kinematics: the (p1, p2) <-> (P, k) change of
//! variables, Mandelstam invariants, the Jacobian of the transformation and
//! the velocity / interaction-strength parameter maps.
//!
//! Natural units, hbar = c = 1.

use crate::error::{Error, Result};

/// Relative slack below threshold that is clamped to k = 0 instead of
/// erroring, so that exact-threshold inputs survive rounding.
const THRESHOLD_SLACK: f64 = 1e-12;

/// Energy plus 3-momentum of a single particle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FourMomentum {
    pub e: f64,
    pub p: [f64; 3],
}

impl FourMomentum {
    pub fn new(e: f64, p: [f64; 3]) -> Self {
        Self { e, p }
    }

    /// On-shell momentum of a particle of mass `m`: e = sqrt(m^2 + |p|^2).
    pub fn on_shell(m: f64, p: [f64; 3]) -> Self {
        let e = (m * m + dot3(p, p)).sqrt();
        Self { e, p }
    }

    /// Invariant mass squared e^2 - |p|^2.
    pub fn mass_squared(&self) -> f64 {
        self.e * self.e - dot3(self.p, self.p)
    }

    /// Minkowski scalar product p1.p2 = E1 E2 - p1 . p2.
    pub fn minkowski_dot(&self, other: &FourMomentum) -> f64 {
        self.e * other.e - dot3(self.p, other.p)
    }

    /// Positive energy and time-like (or light-like) within rounding.
    pub fn is_physical(&self) -> bool {
        self.e > 0.0 && self.mass_squared() >= -1e-10 * self.e * self.e
    }
}

/// Total and relative 3-momentum of a pair.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CMVariables {
    pub total: [f64; 3],
    pub k_vec: [f64; 3],
}

/// Derived kinematic quantities of a two-body channel.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoBodyKinematics {
    pub m1: f64,
    pub m2: f64,
    /// Relative-momentum magnitude.
    pub k: f64,
    /// Mandelstam invariant (p1 + p2)^2.
    pub s: f64,
    /// Total c.m. energy sqrt(s).
    pub w: f64,
    /// Single-particle c.m. energies w_a = sqrt(m_a^2 + k^2).
    pub w1: f64,
    pub w2: f64,
    /// eps_a = (E_a + w_a) / 2, with E_a taken from the input momenta.
    pub eps1: f64,
    pub eps2: f64,
    /// Relative speed of the equivalent one-body problem and its beta = v/c.
    pub beta: f64,
    pub v: f64,
}

impl TwoBodyKinematics {
    /// Build from a pair of on-shell momenta in an arbitrary frame.
    pub fn from_pair(p1: &FourMomentum, p2: &FourMomentum) -> Result<Self> {
        let m1 = p1.mass_squared().max(0.0).sqrt();
        let m2 = p2.mass_squared().max(0.0).sqrt();
        let s = mandelstam_s(p1, p2);
        let k = k_from_s(s, m1, m2)?;
        let w1 = (m1 * m1 + k * k).sqrt();
        let w2 = (m2 * m2 + k * k).sqrt();
        let (v, beta) = reduced_velocity(k, m1, m2);
        Ok(Self {
            m1,
            m2,
            k,
            s,
            w: s.sqrt(),
            w1,
            w2,
            eps1: 0.5 * (p1.e + w1),
            eps2: 0.5 * (p2.e + w2),
            beta,
            v,
        })
    }

    /// Build directly from a c.m. relative momentum magnitude.
    pub fn from_cm_momentum(k: f64, m1: f64, m2: f64) -> Self {
        let w1 = (m1 * m1 + k * k).sqrt();
        let w2 = (m2 * m2 + k * k).sqrt();
        let w = w1 + w2;
        let (v, beta) = reduced_velocity(k, m1, m2);
        Self {
            m1,
            m2,
            k,
            s: w * w,
            w,
            w1,
            w2,
            // In the c.m. frame E_a = w_a.
            eps1: w1,
            eps2: w2,
            beta,
            v,
        }
    }
}

fn dot3(a: [f64; 3], b: [f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

/// v solving k = mu v (1 - v^2)^(-1/2) with the reduced mass
/// mu = m1 m2 / (m1 + m2); for equal masses this reduces to
/// v = 2k / sqrt(m^2 + 4 k^2). Returns (v, beta) with beta = v.
fn reduced_velocity(k: f64, m1: f64, m2: f64) -> (f64, f64) {
    let mu = m1 * m2 / (m1 + m2);
    let v = k / (mu * mu + k * k).sqrt();
    (v, v)
}

/// Mandelstam s = (E1 + E2)^2 - |p1 + p2|^2.
pub fn mandelstam_s(p1: &FourMomentum, p2: &FourMomentum) -> f64 {
    let e = p1.e + p2.e;
    let p = [p1.p[0] + p2.p[0], p1.p[1] + p2.p[1], p1.p[2] + p2.p[2]];
    e * e - dot3(p, p)
}

/// The unique k >= 0 with w1(k) + w2(k) = sqrt(s), via the closed form
/// k^2 = [s - (m1+m2)^2][s - (m1-m2)^2] / (4s).
///
/// s within 1e-12 relative below threshold is clamped to k = 0; further
/// below is a [`Error::SubThreshold`] error.
pub fn k_from_s(s: f64, m1: f64, m2: f64) -> Result<f64> {
    let threshold = (m1 + m2) * (m1 + m2);
    if s < threshold * (1.0 - THRESHOLD_SLACK) {
        return Err(Error::SubThreshold { s, threshold });
    }
    if s <= threshold {
        return Ok(0.0);
    }
    let dm = m1 - m2;
    let k2 = (s - threshold) * (s - dm * dm) / (4.0 * s);
    Ok(k2.max(0.0).sqrt())
}

/// Change of variables (p1, p2) -> (P, k):
/// P = p1 + p2, k = (eps2 p1 - eps1 p2) / (eps1 + eps2),
/// with eps_a = (E_a + w_a)/2 and w_a evaluated at the invariant k.
pub fn to_cm_variables(p1: &FourMomentum, p2: &FourMomentum) -> Result<CMVariables> {
    let kin = TwoBodyKinematics::from_pair(p1, p2)?;
    let denom = kin.eps1 + kin.eps2;
    let k_vec = [
        (kin.eps2 * p1.p[0] - kin.eps1 * p2.p[0]) / denom,
        (kin.eps2 * p1.p[1] - kin.eps1 * p2.p[1]) / denom,
        (kin.eps2 * p1.p[2] - kin.eps1 * p2.p[2]) / denom,
    ];
    Ok(CMVariables {
        total: [p1.p[0] + p2.p[0], p1.p[1] + p2.p[1], p1.p[2] + p2.p[2]],
        k_vec,
    })
}

/// Inverse map restricted to P = 0: p1 = (w1(k), k), p2 = (w2(k), -k).
pub fn from_cm_at_rest(k_vec: [f64; 3], m1: f64, m2: f64) -> (FourMomentum, FourMomentum) {
    let k2 = dot3(k_vec, k_vec);
    let p1 = FourMomentum::new((m1 * m1 + k2).sqrt(), k_vec);
    let p2 = FourMomentum::new((m2 * m2 + k2).sqrt(), [-k_vec[0], -k_vec[1], -k_vec[2]]);
    (p1, p2)
}

/// Jacobian of the change of variables,
/// J(p1, p2) = (E1 E2 / (E1 + E2)) ((w1 + w2) / (w1 w2)).
pub fn jacobian(p1: &FourMomentum, p2: &FourMomentum) -> Result<f64> {
    let kin = TwoBodyKinematics::from_pair(p1, p2)?;
    Ok(p1.e * p2.e / (p1.e + p2.e) * (kin.w1 + kin.w2) / (kin.w1 * kin.w2))
}

/// Momentum transfer squared t = (p1' - p1)^2.
pub fn momentum_transfer_t(p1: &FourMomentum, p1p: &FourMomentum) -> f64 {
    let de = p1p.e - p1.e;
    let dp = [p1p.p[0] - p1.p[0], p1p.p[1] - p1.p[1], p1p.p[2] - p1.p[2]];
    de * de - dot3(dp, dp)
}

/// Interaction-strength parameter tau = alpha m / (2 k).
pub fn coulomb_tau(alpha: f64, m: f64, k: f64) -> Result<f64> {
    if k == 0.0 {
        return Err(Error::ZeroMomentum);
    }
    Ok(alpha * m / (2.0 * k))
}

/// (v, beta) solving k = (m v / 2)(1 - beta^2)^(-1/2) with beta = v,
/// i.e. v = 2k / sqrt(m^2 + 4 k^2). Equal-mass channel, masses m each.
pub fn relative_velocity(k: f64, m: f64) -> (f64, f64) {
    let v = 2.0 * k / (m * m + 4.0 * k * k).sqrt();
    (v, v)
}
