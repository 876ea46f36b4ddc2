//! Scattering amplitudes and cross sections: the Abel-regularized
//! partial-wave sum, the closed-form amplitude, the Coulomb identification
//! tau = alpha m / 2k, identical-particle symmetrization, the invariant
//! amplitude and both cross-section forms.
//!
//! The partial-wave expansion converges only as a distribution, so the sum is
//! evaluated with an Abel factor e^(-eps l) on a descending sequence of eps
//! and extrapolated to eps -> 0 polynomially.
//!
//! All amplitudes exclude a forward window (the Coulomb singularity at
//! theta = 0); symmetrized quantities exclude the backward window as well.

use num_complex::Complex64;
use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::kinematics::{coulomb_tau, relative_velocity, FourMomentum};
use crate::smatrix::PartialWaveSMatrix;
use crate::specfun::{coulomb_phase, gamma_ratio, legendre_p_sequence};

/// Forward exclusion window: amplitudes are defined for theta > 5 degrees.
pub const THETA_MIN: f64 = 5.0 * PI / 180.0;

/// Symmetrized quantities also exclude theta > 175 degrees.
pub const THETA_MAX_SYMMETRIZED: f64 = PI - THETA_MIN;

/// Arguments this close to tau = 0 short-circuit to the free limit instead
/// of probing the Gamma pole at -i tau.
const TAU_FREE_GUARD: f64 = 1e-12;

/// One angular sample of an amplitude with its differential cross section.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AmplitudePoint {
    /// Scattering angle in radians.
    pub theta: f64,
    /// Complex amplitude, dimension 1/momentum.
    pub f: Complex64,
    /// dsigma/dOmega = |f|^2, area per steradian.
    pub dsigma_domega: f64,
}

/// Abel-factor regularization of the divergent partial-wave sum.
#[derive(Debug, Clone, PartialEq)]
pub struct RegularizationSpec {
    /// Strictly decreasing positive Abel parameters.
    pub epsilons: Vec<f64>,
    /// Summation cutoff per epsilon.
    pub l_cuts: Vec<usize>,
    /// Order of the polynomial extrapolation to eps = 0.
    pub extrapolation_order: usize,
    /// Relative bound on the extrapolation residual estimate.
    pub residual_tolerance: f64,
}

impl Default for RegularizationSpec {
    fn default() -> Self {
        let epsilons: Vec<f64> = vec![0.1, 0.05, 0.025, 0.0125];
        let l_cuts = epsilons
            .iter()
            .map(|e| (12.0 / e).ceil() as usize)
            .collect();
        Self {
            epsilons,
            l_cuts,
            extrapolation_order: 3,
            residual_tolerance: 1e-2,
        }
    }
}

impl RegularizationSpec {
    pub fn validate(&self) -> Result<()> {
        if self.epsilons.is_empty() {
            return Err(Error::InvalidRegularization(
                "empty epsilon sequence".into(),
            ));
        }
        if self.epsilons.len() != self.l_cuts.len() {
            return Err(Error::InvalidRegularization(
                "epsilons and l_cuts lengths differ".into(),
            ));
        }
        for pair in self.epsilons.windows(2) {
            if pair[1] >= pair[0] {
                return Err(Error::InvalidRegularization(
                    "epsilons must be strictly decreasing".into(),
                ));
            }
        }
        if self.epsilons[self.epsilons.len() - 1] <= 0.0 {
            return Err(Error::InvalidRegularization(
                "epsilons must be positive".into(),
            ));
        }
        for (&cut, &eps) in self.l_cuts.iter().zip(&self.epsilons) {
            if (cut as f64) < 1.0 / eps {
                return Err(Error::InvalidRegularization(format!(
                    "l_cut = {cut} below 1/eps = {}",
                    1.0 / eps
                )));
            }
        }
        if self.extrapolation_order < 1 || self.extrapolation_order >= self.epsilons.len() {
            return Err(Error::InvalidRegularization(format!(
                "extrapolation order {} needs 2..={} epsilons",
                self.extrapolation_order,
                self.extrapolation_order + 1
            )));
        }
        if !(self.residual_tolerance > 0.0) {
            return Err(Error::InvalidRegularization(
                "residual tolerance must be positive".into(),
            ));
        }
        Ok(())
    }

    /// Largest summation cutoff over all epsilons.
    pub fn max_l_cut(&self) -> usize {
        self.l_cuts.iter().copied().max().unwrap_or(0)
    }
}

fn check_window(theta: f64, max: f64) -> Result<()> {
    // both edges inclusive; the slack absorbs rounding of mirror angles
    // like pi - (pi - THETA_MIN)
    const SLACK: f64 = 1e-12;
    if !(theta >= THETA_MIN - SLACK && theta <= max + SLACK) {
        return Err(Error::AngleOutsideWindow {
            theta,
            min: THETA_MIN,
            max,
        });
    }
    Ok(())
}

/// Closed-form amplitude
/// f(theta) = (1/2ik) [Gamma(1 + i tau)/Gamma(-i tau)] (1/sin^2(theta/2))
///            exp[-i tau ln sin^2(theta/2)].
///
/// The free limit tau -> 0 gives f -> 0 through the Gamma pole at -i tau.
pub fn closed_form_amplitude(tau: f64, k: f64, theta: f64) -> Result<Complex64> {
    if k <= 0.0 {
        return Err(Error::Domain(format!("k must be positive (k = {k})")));
    }
    check_window(theta, PI)?;
    if tau.abs() < TAU_FREE_GUARD {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let ratio = gamma_ratio(Complex64::new(1.0, tau), Complex64::new(0.0, -tau))?;
    let sin2 = (0.5 * theta).sin().powi(2);
    let log_phase = Complex64::new(0.0, -tau * sin2.ln()).exp();
    Ok(ratio * log_phase / (Complex64::new(0.0, 2.0 * k) * sin2))
}

/// Polynomial extrapolation of (xs, ys) to x = 0 (Neville scheme).
fn extrapolate_to_zero(xs: &[f64], ys: &[Complex64]) -> Complex64 {
    let n = xs.len();
    let mut t = ys.to_vec();
    for m in 1..n {
        for i in 0..n - m {
            let (x0, x1) = (xs[i], xs[i + m]);
            t[i] = (t[i + 1] * x0 - t[i] * x1) / (x0 - x1);
        }
    }
    t[0]
}

/// Abel-regularized partial-wave amplitude
/// f(theta) = (1/2ik) sum_l (2l + 1)(S_l - 1) P_l(cos theta) e^(-eps l),
/// extrapolated to eps -> 0.
///
/// Errors with [`Error::ExtrapolationDiverged`] when the difference between
/// the full- and reduced-order extrapolants exceeds the configured relative
/// tolerance.
pub fn partial_wave_amplitude(
    s: &PartialWaveSMatrix,
    k: f64,
    theta: f64,
    reg: &RegularizationSpec,
) -> Result<Complex64> {
    reg.validate()?;
    if k <= 0.0 {
        return Err(Error::Domain(format!("k must be positive (k = {k})")));
    }
    check_window(theta, THETA_MAX_SYMMETRIZED)?;
    let max_cut = reg.max_l_cut();
    if (s.l_max() as usize) < max_cut {
        return Err(Error::Domain(format!(
            "S-matrix runs to l = {} but the regularization needs l = {max_cut}",
            s.l_max()
        )));
    }

    let legendre = legendre_p_sequence(max_cut as u32, theta.cos())?;
    let one = Complex64::new(1.0, 0.0);
    let two_i_k = Complex64::new(0.0, 2.0 * k);

    let sums: Vec<Complex64> = reg
        .epsilons
        .iter()
        .zip(&reg.l_cuts)
        .map(|(&eps, &cut)| {
            let mut acc = Complex64::new(0.0, 0.0);
            for l in 0..=cut {
                let weight = (2 * l + 1) as f64 * legendre[l] * (-eps * l as f64).exp();
                acc += (s.element(l as u32) - one) * weight;
            }
            acc / two_i_k
        })
        .collect();

    // Extrapolate on the smallest (order + 1) epsilons; the drop in order by
    // one on the smallest `order` epsilons estimates the residual.
    let n = reg.epsilons.len();
    let take = reg.extrapolation_order + 1;
    let xs = &reg.epsilons[n - take..];
    let ys = &sums[n - take..];
    let full = extrapolate_to_zero(xs, ys);
    let reduced = extrapolate_to_zero(&xs[1..], &ys[1..]);
    let estimate = (full - reduced).norm();
    if estimate > reg.residual_tolerance * full.norm() && estimate > 1e-14 {
        return Err(Error::ExtrapolationDiverged {
            estimate,
            tolerance: reg.residual_tolerance * full.norm(),
        });
    }
    Ok(full)
}

/// Relativistic Coulomb amplitude for two equal masses m:
/// f_c(theta) = [alpha / (m v^2 sin^2(theta/2))] (1 - beta^2)
///              exp[-i tau ln sin^2(theta/2) + i pi + 2 i eta],
/// with tau = alpha m / 2k, beta = v and eta = arg Gamma(1 + i tau).
pub fn coulomb_amplitude(alpha: f64, m: f64, k: f64, theta: f64) -> Result<Complex64> {
    if m <= 0.0 {
        return Err(Error::Domain(format!("mass must be positive (m = {m})")));
    }
    if k <= 0.0 {
        return Err(Error::ZeroMomentum);
    }
    check_window(theta, PI)?;
    let tau = coulomb_tau(alpha, m, k)?;
    let (v, beta) = relative_velocity(k, m);
    let eta = coulomb_phase(tau);
    let sin2 = (0.5 * theta).sin().powi(2);
    let modulus = alpha * (1.0 - beta * beta) / (m * v * v * sin2);
    let phase = Complex64::new(0.0, -tau * sin2.ln() + PI + 2.0 * eta).exp();
    Ok(modulus * phase)
}

/// Identical-particle amplitude f_c(theta) + f_c(pi - theta).
pub fn symmetrized_amplitude(alpha: f64, m: f64, k: f64, theta: f64) -> Result<Complex64> {
    check_window(theta, THETA_MAX_SYMMETRIZED)?;
    Ok(coulomb_amplitude(alpha, m, k, theta)? + coulomb_amplitude(alpha, m, k, PI - theta)?)
}

/// Mott differential cross section for identical spinless particles:
/// dsigma/dOmega = (alpha/(m v^2))^2 {1/sin^4(theta/2) + 1/cos^4(theta/2)
/// + [2/(sin^2 cos^2)] cos[(alpha/v) sqrt(1 - beta^2) ln tan^2(theta/2)]}
/// (1 - beta^2)^2.
pub fn mott_cross_section(alpha: f64, m: f64, k: f64, theta: f64) -> Result<f64> {
    if m <= 0.0 {
        return Err(Error::Domain(format!("mass must be positive (m = {m})")));
    }
    if k <= 0.0 {
        return Err(Error::ZeroMomentum);
    }
    check_window(theta, THETA_MAX_SYMMETRIZED)?;
    let (v, beta) = relative_velocity(k, m);
    let one_minus_b2 = 1.0 - beta * beta;
    let sin2 = (0.5 * theta).sin().powi(2);
    let cos2 = (0.5 * theta).cos().powi(2);
    let tau_v = alpha / v * one_minus_b2.sqrt();
    let interference = 2.0 / (sin2 * cos2) * (tau_v * (sin2 / cos2).ln()).cos();
    let bracket = 1.0 / (sin2 * sin2) + 1.0 / (cos2 * cos2) + interference;
    let prefactor = (alpha / (m * v * v)).powi(2);
    Ok(prefactor * bracket * one_minus_b2 * one_minus_b2)
}

/// Invariant amplitude M = -sqrt(s) f(theta) / pi^2.
pub fn invariant_amplitude(s_mandelstam: f64, f: Complex64) -> Complex64 {
    debug_assert!(s_mandelstam >= 0.0);
    -s_mandelstam.sqrt() * f / (PI * PI)
}

/// Two-body cross section dsigma/dt = pi^5 |M|^2 / sqrt((p1.p2)^2 - m^4),
/// equal masses.
pub fn dsigma_dt(p1: &FourMomentum, p2: &FourMomentum, m_inv: Complex64) -> Result<f64> {
    let m1_sq = p1.mass_squared();
    let m2_sq = p2.mass_squared();
    if (m1_sq - m2_sq).abs() > 1e-9 * m1_sq.abs().max(m2_sq.abs()) {
        return Err(Error::Domain(format!(
            "dsigma_dt needs equal masses (m1^2 = {m1_sq}, m2^2 = {m2_sq})"
        )));
    }
    let pp = p1.minkowski_dot(p2);
    let flux_sq = pp * pp - m1_sq * m2_sq;
    if flux_sq <= 0.0 {
        return Err(Error::FluxSingularity { flux_sq });
    }
    Ok(PI.powi(5) * m_inv.norm_sqr() / flux_sq.sqrt())
}

/// dsigma/dOmega = |f|^2.
pub fn dsigma_domega(f: Complex64) -> f64 {
    f.norm_sqr()
}

/// Transition amplitude T(k', k) = -f(theta) / (2 pi^2 m).
pub fn transition_amplitude(f: Complex64, m: f64) -> Complex64 {
    debug_assert!(m > 0.0);
    -f / (2.0 * PI * PI * m)
}

/// Closed-form amplitude sampled into an [`AmplitudePoint`].
pub fn amplitude_point(tau: f64, k: f64, theta: f64) -> Result<AmplitudePoint> {
    let f = closed_form_amplitude(tau, k, theta)?;
    Ok(AmplitudePoint {
        theta,
        f,
        dsigma_domega: dsigma_domega(f),
    })
}
