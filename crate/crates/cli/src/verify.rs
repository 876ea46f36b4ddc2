//! The `verify` subcommand: commutator, Casimir, unitarity,
//! recurrence-vs-closed-form, and intertwining suites at a configured tau
//! and l_max, with per-check residual lines and named tolerances.

use scatter_core::Complex64;
use std::collections::BTreeMap;

use scatter_core::smatrix::{sl_closed_form, sl_recurrence, verify_intertwining};
use scatter_core::so31::{build_rep, casimirs, commutator_residuals, RelationGroup, RepLabel};
use scatter_core::Error;

use crate::config::ConfigMap;
use crate::{CliError, CliResult};

/// Named tolerances with their defaults.
const DEFAULTS: [(&str, f64); 6] = [
    ("commutator", 1e-10),
    ("casimir", 1e-10),
    ("casimir_weyl", 1e-12),
    ("unitarity", 1e-12),
    ("recurrence", 1e-12),
    ("intertwining", 1e-10),
];

#[derive(Debug, Clone)]
pub struct Tolerances {
    map: BTreeMap<&'static str, f64>,
}

impl Tolerances {
    /// Defaults, overridden by config `tol.NAME` keys, overridden by CLI
    /// `--tol NAME=VAL` flags.
    pub fn resolve(cli: &[String], config: &ConfigMap) -> CliResult<Self> {
        let mut map: BTreeMap<&'static str, f64> = DEFAULTS.iter().copied().collect();
        for (name, value) in config.tolerance_overrides()? {
            Self::set(&mut map, &name, value)?;
        }
        for entry in cli {
            let (name, value) = entry.split_once('=').ok_or_else(|| {
                CliError::Config(format!("--tol needs NAME=VALUE, got {entry:?}"))
            })?;
            let value: f64 = value
                .parse()
                .map_err(|_| CliError::Config(format!("--tol {name}: bad number {value:?}")))?;
            Self::set(&mut map, name.trim(), value)?;
        }
        Ok(Self { map })
    }

    fn set(map: &mut BTreeMap<&'static str, f64>, name: &str, value: f64) -> CliResult<()> {
        if !(value > 0.0) {
            return Err(CliError::Config(format!(
                "tolerance {name} must be positive, got {value}"
            )));
        }
        let key = DEFAULTS
            .iter()
            .map(|(n, _)| *n)
            .find(|n| *n == name)
            .ok_or_else(|| {
                CliError::Config(format!(
                    "unknown tolerance {name:?}; known: {}",
                    DEFAULTS.map(|(n, _)| n).join(", ")
                ))
            })?;
        map.insert(key, value);
        Ok(())
    }

    fn get(&self, name: &str) -> f64 {
        self.map[name]
    }
}

pub struct VerifyOutcome {
    pub rendered: String,
    pub gated: usize,
    pub failed: usize,
}

struct Report {
    lines: String,
    gated: usize,
    failed: usize,
}

impl Report {
    fn new() -> Self {
        Self {
            lines: String::new(),
            gated: 0,
            failed: 0,
        }
    }

    fn gate(&mut self, name: &str, residual: f64, tol: f64) {
        let pass = residual <= tol;
        self.gated += 1;
        if !pass {
            self.failed += 1;
        }
        self.lines.push_str(&format!(
            "check={name} residual={residual:e} tol={tol:e} status={}\n",
            if pass { "pass" } else { "fail" }
        ));
    }

    fn info(&mut self, name: &str, residual: f64) {
        self.lines
            .push_str(&format!("check={name} residual={residual:e} status=info\n"));
    }
}

pub fn run_verify(tau: f64, lmax: u32, tols: &Tolerances) -> CliResult<VerifyOutcome> {
    let label = RepLabel::spinless(tau);
    let rep = build_rep(label, lmax).map_err(|e| match e {
        Error::TruncationTooSmall { .. } => CliError::Config(e.to_string()),
        other => CliError::Config(other.to_string()),
    })?;
    let dual = build_rep(label.weyl_dual(), lmax)?;

    let mut report = Report::new();
    report
        .lines
        .push_str(&format!("verify: tau={tau} lmax={lmax}\n"));

    // Lie-algebra commutators on the interior block
    let comm = commutator_residuals(&rep);
    let tol = tols.get("commutator");
    report.gate(
        "commutator_rotation",
        comm.group_max(RelationGroup::Rotation),
        tol,
    );
    report.gate(
        "commutator_mixed",
        comm.group_max(RelationGroup::Mixed),
        tol,
    );
    report.gate(
        "commutator_boost",
        comm.group_max(RelationGroup::Boost),
        tol,
    );

    // Casimir eigenvalues, diagonality, and Weyl-pair invariance
    let (c1, c2) = casimirs(&rep);
    let (c1_dual, _) = casimirs(&dual);
    let interior = rep.interior_dim(2);
    let expected = -(tau * tau + 1.0);
    let mut c1_dev = 0.0f64;
    let mut weyl_dev = 0.0f64;
    for i in 0..interior {
        for j in 0..interior {
            let z = c1.get(i, j);
            let dev = if i == j {
                (z - Complex64::new(expected, 0.0)).norm()
            } else {
                z.norm()
            };
            c1_dev = c1_dev.max(dev);
            if i == j {
                weyl_dev = weyl_dev.max((z - c1_dual.get(i, j)).norm());
            }
        }
    }
    report.gate("casimir_c1", c1_dev, tols.get("casimir"));
    report.gate(
        "casimir_c2",
        c2.max_abs_leading_block(interior),
        tols.get("casimir"),
    );
    report.gate("casimir_weyl", weyl_dev, tols.get("casimir_weyl"));

    // S_l: unitarity and recurrence vs closed form up to at least l = 200
    let l_cap = lmax.max(200);
    let s = sl_recurrence(tau, l_cap);
    let mut unit_dev = 0.0f64;
    let mut rec_dev = 0.0f64;
    for l in 0..=l_cap {
        let z = s.element(l);
        unit_dev = unit_dev.max((z.norm() - 1.0).abs());
        rec_dev = rec_dev.max((z - sl_closed_form(tau, l)).norm());
    }
    report.gate("unitarity", unit_dev, tols.get("unitarity"));
    report.gate("recurrence_vs_closed_form", rec_dev, tols.get("recurrence"));

    // Intertwining S G(chi) = G(chi~) S; N+- reported, not gated
    let inter = verify_intertwining(&rep, &dual, &s)?;
    let tol = tols.get("intertwining");
    report.gate("intertwine_l3", inter.l3, tol);
    report.gate("intertwine_lp", inter.lp, tol);
    report.gate("intertwine_lm", inter.lm, tol);
    report.gate("intertwine_n3", inter.n3, tol);
    report.info("intertwine_np", inter.np);
    report.info("intertwine_nm", inter.nm);

    report.lines.push_str(&format!(
        "verify: {} gated checks, {} failed\n",
        report.gated, report.failed
    ));

    Ok(VerifyOutcome {
        rendered: report.lines,
        gated: report.gated,
        failed: report.failed,
    })
}
