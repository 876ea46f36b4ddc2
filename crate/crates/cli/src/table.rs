//! Row computation and rendering for the `amplitude` and `xsec` tables.
//! Theta is emitted in radians; everything is in natural units.

use serde::Serialize;

use scatter_core::amplitude::{
    closed_form_amplitude, coulomb_amplitude, dsigma_domega, dsigma_dt, invariant_amplitude,
    mott_cross_section, partial_wave_amplitude, symmetrized_amplitude, RegularizationSpec,
};
use scatter_core::kinematics::{from_cm_at_rest, mandelstam_s, momentum_transfer_t, FourMomentum};
use scatter_core::smatrix::sl_recurrence;

use crate::output::{csv_line, Format};
use crate::CliResult;

#[derive(Debug, Serialize)]
pub struct AmplitudeRow {
    pub theta: f64,
    pub re_f: f64,
    pub im_f: f64,
    pub abs_f: f64,
    pub dsigma_domega: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub re_f_pw: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub im_f_pw: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rel_dev: Option<f64>,
}

pub fn amplitude_rows(
    tau: f64,
    k: f64,
    thetas: &[f64],
    partial_wave: bool,
) -> CliResult<Vec<AmplitudeRow>> {
    let reg = RegularizationSpec::default();
    let s = if partial_wave {
        Some(sl_recurrence(tau, reg.max_l_cut() as u32))
    } else {
        None
    };

    let mut rows = Vec::with_capacity(thetas.len());
    for &theta in thetas {
        let f = closed_form_amplitude(tau, k, theta)?;
        let mut row = AmplitudeRow {
            theta,
            re_f: f.re,
            im_f: f.im,
            abs_f: f.norm(),
            dsigma_domega: dsigma_domega(f),
            re_f_pw: None,
            im_f_pw: None,
            rel_dev: None,
        };
        if let Some(s) = &s {
            let pw = partial_wave_amplitude(s, k, theta, &reg)?;
            let diff = (pw - f).norm();
            row.re_f_pw = Some(pw.re);
            row.im_f_pw = Some(pw.im);
            // both sums vanish identically in the free limit
            row.rel_dev = Some(if diff == 0.0 { 0.0 } else { diff / f.norm() });
        }
        rows.push(row);
    }
    Ok(rows)
}

pub fn render_amplitude(
    rows: &[AmplitudeRow],
    format: Format,
    partial_wave: bool,
    units: bool,
) -> String {
    match format {
        Format::Jsonl => {
            let mut out = String::new();
            for row in rows {
                out.push_str(&serde_json::to_string(row).expect("finite floats"));
                out.push('\n');
            }
            out
        }
        Format::Csv => {
            let mut out = String::new();
            if units {
                out.push_str(
                    "# units: theta=rad f=1/momentum dsigma_domega=area/sr (natural units, hbar=c=1)\n",
                );
            }
            out.push_str("theta,re_f,im_f,abs_f,dsigma_domega");
            if partial_wave {
                out.push_str(",re_f_pw,im_f_pw,rel_dev");
            }
            out.push('\n');
            for row in rows {
                let mut values = vec![row.theta, row.re_f, row.im_f, row.abs_f, row.dsigma_domega];
                if partial_wave {
                    values.push(row.re_f_pw.unwrap_or(0.0));
                    values.push(row.im_f_pw.unwrap_or(0.0));
                    values.push(row.rel_dev.unwrap_or(0.0));
                }
                out.push_str(&csv_line(&values));
            }
            out
        }
    }
}

#[derive(Debug, Serialize)]
pub struct XsecRow {
    pub theta: f64,
    pub t: f64,
    pub dsigma_domega: f64,
    pub dsigma_domega_sym: f64,
    pub dsigma_dt: f64,
    /// Diagnostic: [dsigma/dt] / [(pi/k^2) dsigma/dOmega]; constant in theta.
    pub dsdt_ratio: f64,
}

pub fn xsec_rows(alpha: f64, m: f64, k: f64, thetas: &[f64]) -> CliResult<Vec<XsecRow>> {
    let (p1, p2) = from_cm_at_rest([0.0, 0.0, k], m, m);
    let s = mandelstam_s(&p1, &p2);
    let pi = std::f64::consts::PI;

    let mut rows = Vec::with_capacity(thetas.len());
    for &theta in thetas {
        let f = coulomb_amplitude(alpha, m, k, theta)?;
        let f_sym = symmetrized_amplitude(alpha, m, k, theta)?;
        let p1_out = FourMomentum::on_shell(m, [k * theta.sin(), 0.0, k * theta.cos()]);
        let t = momentum_transfer_t(&p1, &p1_out);
        let dsdo = dsigma_domega(f);
        let dsdt = dsigma_dt(&p1, &p2, invariant_amplitude(s, f))?;
        // cross-check of the Mott display against |f + f(pi - theta)|^2
        debug_assert!({
            let mott = mott_cross_section(alpha, m, k, theta).unwrap();
            (mott - f_sym.norm_sqr()).abs() <= 1e-9 * mott.max(f64::MIN_POSITIVE)
        });
        rows.push(XsecRow {
            theta,
            t,
            dsigma_domega: dsdo,
            dsigma_domega_sym: f_sym.norm_sqr(),
            dsigma_dt: dsdt,
            dsdt_ratio: dsdt / (pi / (k * k) * dsdo),
        });
    }
    Ok(rows)
}

pub fn render_xsec(rows: &[XsecRow], format: Format, units: bool) -> String {
    match format {
        Format::Jsonl => {
            let mut out = String::new();
            for row in rows {
                out.push_str(&serde_json::to_string(row).expect("finite floats"));
                out.push('\n');
            }
            out
        }
        Format::Csv => {
            let mut out = String::new();
            if units {
                out.push_str(
                    "# units: theta=rad t=momentum^2 dsigma=area (natural units, hbar=c=1)\n",
                );
            }
            out.push_str("theta,t,dsigma_domega,dsigma_domega_sym,dsigma_dt,dsdt_ratio\n");
            for row in rows {
                out.push_str(&csv_line(&[
                    row.theta,
                    row.t,
                    row.dsigma_domega,
                    row.dsigma_domega_sym,
                    row.dsigma_dt,
                    row.dsdt_ratio,
                ]));
            }
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::output::fmt17;

    #[test]
    fn amplitude_rows_tau_zero_all_zero() {
        let thetas: Vec<f64> = (1..=5).map(|i| (i as f64 * 30.0).to_radians()).collect();
        let rows = amplitude_rows(0.0, 1.0, &thetas, true).unwrap();
        for row in rows {
            assert_eq!(row.re_f, 0.0);
            assert_eq!(row.im_f, 0.0);
            assert_eq!(row.dsigma_domega, 0.0);
            assert_eq!(row.rel_dev, Some(0.0));
        }
    }

    #[test]
    fn amplitude_row_modulus_identity_at_ninety_degrees() {
        let rows = amplitude_rows(1.0, 1.0, &[90f64.to_radians()], false).unwrap();
        assert!((rows[0].abs_f - 1.0).abs() < 1e-12);
        assert!((rows[0].dsigma_domega - 1.0).abs() < 1e-12);
    }

    #[test]
    fn amplitude_deviation_column_within_tolerance() {
        let thetas: Vec<f64> = (0..=12)
            .map(|i| (30.0 + 10.0 * i as f64).to_radians())
            .collect();
        let rows = amplitude_rows(1.0, 1.0, &thetas, true).unwrap();
        for row in rows {
            assert!(row.rel_dev.unwrap() <= 1e-3, "deviation {:?}", row.rel_dev);
        }
    }

    #[test]
    fn xsec_rows_match_displayed_values() {
        let (alpha, m, k) = (1.0, 1.0, 0.5);
        let thetas = [90f64.to_radians(), 150f64.to_radians()];
        let rows = xsec_rows(alpha, m, k, &thetas).unwrap();

        // identical-particle row at 90 degrees: 16 (alpha/(m v^2))^2 (1-beta^2)^2
        let (v, beta) = scatter_core::kinematics::relative_velocity(k, m);
        let expect = 16.0 * (alpha / (m * v * v)).powi(2) * (1.0 - beta * beta).powi(2);
        assert!((rows[0].dsigma_domega_sym - expect).abs() < 1e-12 * expect);

        // ratio diagnostic constant across theta and equal to k sqrt(s)
        let s = 4.0 * (m * m + k * k);
        assert!((rows[0].dsdt_ratio - k * s.sqrt()).abs() < 1e-10);
        assert!((rows[0].dsdt_ratio - rows[1].dsdt_ratio).abs() < 1e-10);

        // t at these angles: -2 k^2 (1 - cos theta)
        for (row, &theta) in rows.iter().zip(&thetas) {
            let expect_t = -2.0 * k * k * (1.0 - theta.cos());
            assert!((row.t - expect_t).abs() < 1e-12);
        }
    }

    #[test]
    fn csv_rendering_has_headers_and_17_digits() {
        let rows = amplitude_rows(1.0, 1.0, &[90f64.to_radians()], false).unwrap();
        let csv = render_amplitude(&rows, Format::Csv, false, false);
        let mut lines = csv.lines();
        assert_eq!(lines.next().unwrap(), "theta,re_f,im_f,abs_f,dsigma_domega");
        let first = lines.next().unwrap();
        assert!(first.starts_with(&fmt17(90f64.to_radians())));

        let with_units = render_amplitude(&rows, Format::Csv, false, true);
        assert!(with_units.starts_with("# units:"));
    }

    #[test]
    fn jsonl_rendering_one_object_per_line() {
        let rows = xsec_rows(1.0, 1.0, 0.5, &[90f64.to_radians()]).unwrap();
        let jsonl = render_xsec(&rows, Format::Jsonl, false);
        assert_eq!(jsonl.lines().count(), 1);
        let value: serde_json::Value = serde_json::from_str(jsonl.lines().next().unwrap()).unwrap();
        assert!(value.get("dsdt_ratio").is_some());
    }
}
