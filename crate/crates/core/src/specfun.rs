//! Complex special functions: principal-branch log-Gamma, Gamma ratios,
//! Legendre polynomials and the Coulomb phase.
//!
//! Log-Gamma uses a Lanczos rational approximation (Pugh's coefficients,
//! g = 10.900511) with the reflection formula for Re z < 0.5. All Gamma
//! ratios are taken as exp of a log difference so that large arguments never
//! overflow.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Lanczos g parameter for the coefficient set below.
const LANCZOS_R: f64 = 10.900511;

/// Lanczos coefficients, "An Analysis of the Lanczos Gamma Approximation",
/// G. R. Pugh, 2004, p. 116.
const LANCZOS_DK: [f64; 11] = [
    2.48574089138753565546e-5,
    1.05142378581721974210,
    -3.45687097222016235469,
    4.51227709466894823700,
    -2.98285225323576655721,
    1.05639711577126713077,
    -1.95428773191645869583e-1,
    1.70970543404441224307e-2,
    -5.71926117404305781283e-4,
    4.63399473359905636708e-6,
    -2.71994908488607703910e-9,
];

/// ln(2 sqrt(e / pi))
const LN_2_SQRT_E_OVER_PI: f64 = 0.6207822376352452223455184457816472122518527279025978;

/// Half-width of the guard window around the poles of Gamma.
const POLE_GUARD: f64 = 1e-12;

fn near_pole(z: Complex64) -> bool {
    let n = z.re.round();
    n <= 0.0 && (z - n).norm() < POLE_GUARD
}

/// Principal branch of ln Gamma(z).
///
/// `exp(log_gamma(z))` agrees with Gamma(z); the imaginary part is the
/// analytic continuation of the real log-Gamma, not the principal argument
/// of Gamma(z).
///
/// Errors with [`Error::PoleProximity`] when z is within 1e-12 of a
/// non-positive integer.
pub fn log_gamma(z: Complex64) -> Result<Complex64> {
    if near_pole(z) {
        return Err(Error::PoleProximity { re: z.re, im: z.im });
    }
    Ok(log_gamma_unchecked(z))
}

fn log_gamma_unchecked(z: Complex64) -> Complex64 {
    if z.re < 0.5 {
        // Reflection: ln Gamma(z) = ln pi - ln sin(pi z) - ln Gamma(1 - z).
        let pi = std::f64::consts::PI;
        Complex64::new(pi.ln(), 0.0)
            - (z * pi).sin().ln()
            - log_gamma_unchecked(Complex64::new(1.0, 0.0) - z)
    } else {
        let mut s = Complex64::new(LANCZOS_DK[0], 0.0);
        for (k, &dk) in LANCZOS_DK.iter().enumerate().skip(1) {
            s += dk / (z + (k as f64 - 1.0));
        }
        let t = z - 0.5 + LANCZOS_R;
        s.ln() + LN_2_SQRT_E_OVER_PI + (z - 0.5) * (t.ln() - 1.0)
    }
}

/// Gamma(num) / Gamma(den), computed as exp(lnGamma(num) - lnGamma(den)).
pub fn gamma_ratio(num: Complex64, den: Complex64) -> Result<Complex64> {
    let ln = log_gamma(num)?;
    let ld = log_gamma(den)?;
    Ok((ln - ld).exp())
}

/// Legendre polynomial P_l(x) on [-1, 1] by the upward three-term recurrence.
pub fn legendre_p(l: u32, x: f64) -> Result<f64> {
    if !(-1.0..=1.0).contains(&x) {
        return Err(Error::Domain(format!("legendre_p: |x| > 1 (x = {x})")));
    }
    let mut prev = 1.0;
    if l == 0 {
        return Ok(prev);
    }
    let mut cur = x;
    for n in 1..l {
        let next = ((2 * n + 1) as f64 * x * cur - n as f64 * prev) / (n + 1) as f64;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// All of P_0(x) .. P_lmax(x) in one upward pass.
pub fn legendre_p_sequence(l_max: u32, x: f64) -> Result<Vec<f64>> {
    if !(-1.0..=1.0).contains(&x) {
        return Err(Error::Domain(format!(
            "legendre_p_sequence: |x| > 1 (x = {x})"
        )));
    }
    let mut out = Vec::with_capacity(l_max as usize + 1);
    out.push(1.0);
    if l_max == 0 {
        return Ok(out);
    }
    out.push(x);
    for n in 1..l_max {
        let next = ((2 * n + 1) as f64 * x * out[n as usize] - n as f64 * out[n as usize - 1])
            / (n + 1) as f64;
        out.push(next);
    }
    Ok(out)
}

/// Coulomb phase eta(tau) = Im ln Gamma(1 + i tau).
pub fn coulomb_phase(tau: f64) -> f64 {
    // 1 + i tau is never near a pole for finite tau.
    log_gamma_unchecked(Complex64::new(1.0, tau)).im
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::f64::consts::PI;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    /// Independent series for arg Gamma(1 + i tau):
    /// eta(tau) = -gamma*tau + sum_{n>=1} (tau/n - atan(tau/n)),
    /// with the Euler-Maclaurin tail correction tau^3/(6 K^2).
    fn coulomb_phase_series(tau: f64) -> f64 {
        const EULER_GAMMA: f64 = 0.5772156649015328606065;
        const K: usize = 200_000;
        let mut sum = 0.0;
        for n in (1..=K).rev() {
            let x = tau / n as f64;
            sum += x - x.atan();
        }
        -EULER_GAMMA * tau + sum + tau.powi(3) / (6.0 * (K as f64).powi(2))
    }

    #[test]
    fn log_gamma_at_one_and_five() {
        let g1 = log_gamma(c(1.0, 0.0)).unwrap();
        assert!(g1.norm() < 1e-14);
        let g5 = log_gamma(c(5.0, 0.0)).unwrap();
        assert!((g5.re - 24.0f64.ln()).abs() < 1e-13);
        assert!(g5.im.abs() < 1e-13);
    }

    #[test]
    fn gamma_modulus_on_the_line_one_plus_i_tau() {
        // |Gamma(1 + i tau)|^2 = pi tau / sinh(pi tau)
        for &tau in &[0.5, 1.0, 2.0, 10.0] {
            let modulus = log_gamma(c(1.0, tau)).unwrap().exp().norm();
            let exact = (PI * tau / (PI * tau).sinh()).sqrt();
            assert!(
                (modulus - exact).abs() < 1e-13 * exact,
                "tau = {tau}: {modulus} vs {exact}"
            );
        }
        // tau = 1: sqrt(pi / sinh pi) = 0.5215640468649398
        let g = log_gamma(c(1.0, 1.0)).unwrap().exp().norm();
        assert!((g - 0.5215640468649398).abs() < 1e-12);
    }

    #[test]
    fn half_integer_values_through_reflection() {
        // Gamma(0.5) = sqrt(pi) (direct branch), Gamma(-0.5) = -2 sqrt(pi)
        let g_half = log_gamma(c(0.5, 0.0)).unwrap().exp();
        assert!((g_half.re - PI.sqrt()).abs() < 1e-13);
        let g_mhalf = log_gamma(c(-0.5, 0.0)).unwrap().exp();
        assert!((g_mhalf.re + 2.0 * PI.sqrt()).abs() < 1e-12);
        assert!(g_mhalf.im.abs() < 1e-12);
    }

    #[test]
    fn pole_proximity_is_an_error() {
        assert!(matches!(
            log_gamma(c(0.0, 0.0)),
            Err(Error::PoleProximity { .. })
        ));
        assert!(matches!(
            log_gamma(c(-3.0, 0.0)),
            Err(Error::PoleProximity { .. })
        ));
        assert!(matches!(
            log_gamma(c(-2.0, 1e-13)),
            Err(Error::PoleProximity { .. })
        ));
        // 1e-3 away is fine
        assert!(log_gamma(c(-2.0 + 1e-3, 0.0)).is_ok());
    }

    #[test]
    fn gamma_ratio_basics() {
        let one = gamma_ratio(c(1.0, 0.0), c(1.0, 0.0)).unwrap();
        assert_eq!(one, c(1.0, 0.0)); // exact in log space

        // tau = 0 free limit of (1 + i tau) / (1 - i tau) arguments
        let r = gamma_ratio(c(1.0, 0.0), c(1.0, -0.0)).unwrap();
        assert!((r - 1.0).norm() < 1e-15);

        // |Gamma(1 + i tau) / Gamma(-i tau)| = tau, here tau = 1 and tau = 2
        for tau in [1.0, 2.0] {
            let r = gamma_ratio(c(1.0, tau), c(0.0, -tau)).unwrap();
            assert!((r.norm() - tau).abs() < 1e-12 * tau, "tau = {tau}");
        }
    }

    #[test]
    fn legendre_small_orders() {
        assert_eq!(legendre_p(0, 0.3).unwrap(), 1.0);
        assert_eq!(legendre_p(1, -0.7).unwrap(), -0.7);
        assert!((legendre_p(2, 0.5).unwrap() + 0.125).abs() < 1e-15);
        assert!(legendre_p(3, 1.5).is_err());
    }

    #[test]
    fn legendre_sequence_matches_pointwise() {
        let xs = [-1.0, -0.4, 0.0, 0.9, 1.0];
        for &x in &xs {
            let seq = legendre_p_sequence(40, x).unwrap();
            for l in 0..=40u32 {
                assert_eq!(seq[l as usize], legendre_p(l, x).unwrap());
            }
        }
    }

    #[test]
    fn coulomb_phase_basics() {
        assert_eq!(coulomb_phase(0.0), 0.0);
        let eta = coulomb_phase(0.7);
        assert!((coulomb_phase(-0.7) + eta).abs() < 1e-15);

        // tau = 1 against the independent series; arg Gamma(1+i) has
        // magnitude 0.30164... and is negative.
        let eta1 = coulomb_phase(1.0);
        assert!((eta1 - coulomb_phase_series(1.0)).abs() < 1e-12);
        assert!((eta1.abs() - 0.30164).abs() < 1e-5);
        assert!(eta1 < 0.0);
    }

    #[test]
    fn coulomb_phase_series_cross_checks() {
        for &tau in &[0.1, 0.5, 2.0] {
            let eta = coulomb_phase(tau);
            let series = coulomb_phase_series(tau);
            assert!(
                (eta - series).abs() < 1e-11,
                "tau = {tau}: {eta} vs {series}"
            );
        }
    }

    fn strip_z() -> impl Strategy<Value = Complex64> {
        (-5.0..5.0f64, -5.0..5.0f64)
            .prop_map(|(re, im)| c(re, im))
            .prop_filter("away from integers", |z| {
                (z.re - z.re.round()).hypot(z.im) >= 0.1
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]

        #[test]
        fn reflection_formula(z in strip_z()) {
            let lhs = (log_gamma(z).unwrap() + log_gamma(c(1.0, 0.0) - z).unwrap()).exp();
            let rhs = PI / (z * PI).sin();
            prop_assert!((lhs - rhs).norm() <= 1e-11 * rhs.norm(),
                "z = {z}: lhs = {lhs}, rhs = {rhs}");
        }

        #[test]
        fn recurrence_formula(z in strip_z()) {
            let lhs = log_gamma(z + 1.0).unwrap().exp();
            let rhs = z * log_gamma(z).unwrap().exp();
            prop_assert!((lhs - rhs).norm() <= 1e-12 * rhs.norm(),
                "z = {z}: lhs = {lhs}, rhs = {rhs}");
        }

        #[test]
        fn legendre_bounded_on_interval(l in 0u32..=500, x in -1.0..=1.0f64) {
            let p = legendre_p(l, x).unwrap();
            prop_assert!(p.abs() <= 1.0 + 1e-12);
        }

        #[test]
        fn coulomb_phase_is_odd(tau in -20.0..20.0f64) {
            prop_assert!((coulomb_phase(tau) + coulomb_phase(-tau)).abs() < 1e-12);
        }
    }

    #[test]
    fn gamma_of_one_plus_i_matches_literature_digits() {
        // ln Gamma(1+i) = -0.6509231993018563 - 0.3016403204675332 i
        let lg = log_gamma(c(1.0, 1.0)).unwrap();
        assert!((lg.re + 0.6509231993018563).abs() < 1e-13);
        assert!((lg.im + 0.3016403204675332).abs() < 1e-13);
    }
}
