//! The `sweep` subcommand: evaluate the amplitude or cross-section table at
//! each point of a parameter axis and emit one json-lines record per point,
//! ordered by sweep index.

use serde::Serialize;

use scatter_core::kinematics::{coulomb_tau, relative_velocity};

use crate::config::ConfigMap;
use crate::grid::{parse_range, GridSpec};
use crate::output::write_output;
use crate::table::{amplitude_rows, xsec_rows, AmplitudeRow, XsecRow};
use crate::{CliError, CliResult, SweepArgs};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Axis {
    K,
    Alpha,
    Tau,
}

impl Axis {
    fn parse(s: &str) -> CliResult<Self> {
        match s {
            "k" => Ok(Axis::K),
            "alpha" => Ok(Axis::Alpha),
            "tau" => Ok(Axis::Tau),
            other => Err(CliError::Config(format!(
                "invalid sweep axis {other:?}; expected k, alpha or tau"
            ))),
        }
    }
}

#[derive(Serialize)]
struct SweepRecord<Row: Serialize> {
    index: usize,
    axis: &'static str,
    value: f64,
    tau: f64,
    k: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    alpha: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    mass: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    v: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    beta: Option<f64>,
    rows: Vec<Row>,
}

fn record_line<Row: Serialize>(record: &SweepRecord<Row>) -> String {
    let mut line = serde_json::to_string(record).expect("finite floats");
    line.push('\n');
    line
}

pub fn run(args: SweepArgs, config: &ConfigMap) -> CliResult<()> {
    let axis_name = args
        .axis
        .or(config.get_string("axis"))
        .ok_or_else(|| CliError::Config("sweep needs --axis".into()))?;
    let axis = Axis::parse(&axis_name)?;
    let range_spec = args
        .range
        .or(config.get_string("range"))
        .ok_or_else(|| CliError::Config("sweep needs --range MIN:MAX:COUNT".into()))?;
    let values = parse_range(&range_spec)?;

    let grid = GridSpec::resolve(args.theta.as_deref(), config)?;
    grid.check_window(scatter_core::amplitude::THETA_MAX_SYMMETRIZED)?;
    let thetas = grid.thetas_rad();

    let tau = args.tau.or(config.get_f64("tau")?);
    let alpha = args.alpha.or(config.get_f64("alpha")?);
    let mass = args.mass.or(config.get_f64("mass")?);
    let k = args.k.or(config.get_f64("k")?);

    // Coulomb mode iff alpha and mass are in play; tau mode otherwise.
    let coulomb_mode = match axis {
        Axis::Alpha => true,
        Axis::Tau => false,
        Axis::K => alpha.is_some() || mass.is_some(),
    };
    if coulomb_mode && tau.is_some() {
        return Err(CliError::Config(
            "give either --tau or --alpha with --mass, not both".into(),
        ));
    }

    let fixed_k = |k: Option<f64>| -> CliResult<f64> {
        let k = k.ok_or_else(|| CliError::Config("sweep needs --k for this axis".into()))?;
        if k <= 0.0 {
            return Err(CliError::Config("k must be positive".into()));
        }
        Ok(k)
    };

    let mut out = String::new();
    match axis {
        Axis::Tau => {
            let k = fixed_k(k)?;
            for (index, &value) in values.iter().enumerate() {
                let rows: Vec<AmplitudeRow> = amplitude_rows(value, k, &thetas, false)?;
                out.push_str(&record_line(&SweepRecord {
                    index,
                    axis: "tau",
                    value,
                    tau: value,
                    k,
                    alpha: None,
                    mass: None,
                    v: None,
                    beta: None,
                    rows,
                }));
            }
        }
        Axis::Alpha => {
            let mass = mass.ok_or_else(|| CliError::Config("alpha sweep needs --mass".into()))?;
            let k = fixed_k(k)?;
            for (index, &value) in values.iter().enumerate() {
                let tau = coulomb_tau(value, mass, k)?;
                let (v, beta) = relative_velocity(k, mass);
                let rows: Vec<XsecRow> = xsec_rows(value, mass, k, &thetas)?;
                out.push_str(&record_line(&SweepRecord {
                    index,
                    axis: "alpha",
                    value,
                    tau,
                    k,
                    alpha: Some(value),
                    mass: Some(mass),
                    v: Some(v),
                    beta: Some(beta),
                    rows,
                }));
            }
        }
        Axis::K => {
            for (index, &value) in values.iter().enumerate() {
                if value <= 0.0 {
                    return Err(CliError::Config("k sweep values must be positive".into()));
                }
                if coulomb_mode {
                    let alpha = alpha
                        .ok_or_else(|| CliError::Config("k sweep needs --alpha or --tau".into()))?;
                    let mass =
                        mass.ok_or_else(|| CliError::Config("k sweep needs --mass".into()))?;
                    let tau = coulomb_tau(alpha, mass, value)?;
                    let (v, beta) = relative_velocity(value, mass);
                    let rows: Vec<XsecRow> = xsec_rows(alpha, mass, value, &thetas)?;
                    out.push_str(&record_line(&SweepRecord {
                        index,
                        axis: "k",
                        value,
                        tau,
                        k: value,
                        alpha: Some(alpha),
                        mass: Some(mass),
                        v: Some(v),
                        beta: Some(beta),
                        rows,
                    }));
                } else {
                    let tau = tau
                        .ok_or_else(|| CliError::Config("k sweep needs --tau or --alpha".into()))?;
                    let rows: Vec<AmplitudeRow> = amplitude_rows(tau, value, &thetas, false)?;
                    out.push_str(&record_line(&SweepRecord {
                        index,
                        axis: "k",
                        value,
                        tau,
                        k: value,
                        alpha: None,
                        mass: None,
                        v: None,
                        beta: None,
                        rows,
                    }));
                }
            }
        }
    }

    let out_path = args.out.or(config.get_path("out")?);
    write_output(out_path.as_deref(), &out)
}
