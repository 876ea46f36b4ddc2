//! `MIN:MAX:COUNT` grid and range parsing. Theta grids are given in degrees
//! on the wire; the library works in radians.

use scatter_core::amplitude::THETA_MIN;

use crate::config::ConfigMap;
use crate::{CliError, CliResult};

/// Default theta grid: 64 points uniform in [10, 170] degrees, inside all
/// exclusion windows.
pub const DEFAULT_THETA: &str = "10:170:64";

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub min_deg: f64,
    pub max_deg: f64,
    pub count: usize,
}

impl GridSpec {
    pub fn parse(spec: &str) -> CliResult<Self> {
        let parts: Vec<&str> = spec.split(':').collect();
        if parts.len() != 3 {
            return Err(CliError::Config(format!(
                "theta grid must be MIN:MAX:COUNT, got {spec:?}"
            )));
        }
        let min_deg: f64 = parts[0]
            .parse()
            .map_err(|_| CliError::Config(format!("bad grid minimum {:?}", parts[0])))?;
        let max_deg: f64 = parts[1]
            .parse()
            .map_err(|_| CliError::Config(format!("bad grid maximum {:?}", parts[1])))?;
        let count: usize = parts[2]
            .parse()
            .map_err(|_| CliError::Config(format!("bad grid count {:?}", parts[2])))?;
        if count < 2 {
            return Err(CliError::Config(format!(
                "grid count must be at least 2, got {count}"
            )));
        }
        if !(max_deg > min_deg) {
            return Err(CliError::Config(format!(
                "grid needs max > min, got {min_deg}:{max_deg}"
            )));
        }
        Ok(Self {
            min_deg,
            max_deg,
            count,
        })
    }

    /// CLI value, else config `theta` key, else the default grid.
    pub fn resolve(cli: Option<&str>, config: &ConfigMap) -> CliResult<Self> {
        let spec = cli
            .map(str::to_string)
            .or(config.get_string("theta"))
            .unwrap_or_else(|| DEFAULT_THETA.to_string());
        Self::parse(&spec)
    }

    /// Uniform grid in radians, endpoints included.
    pub fn thetas_rad(&self) -> Vec<f64> {
        let step = (self.max_deg - self.min_deg) / (self.count - 1) as f64;
        (0..self.count)
            .map(|i| (self.min_deg + step * i as f64).to_radians())
            .collect()
    }

    /// The whole grid must sit inside [THETA_MIN, max_rad]. A tiny slack
    /// absorbs the degrees-to-radians rounding at the boundaries.
    pub fn check_window(&self, max_rad: f64) -> CliResult<()> {
        const SLACK: f64 = 1e-12;
        let min_rad = self.min_deg.to_radians();
        let grid_max_rad = self.max_deg.to_radians();
        if min_rad + SLACK < THETA_MIN || grid_max_rad > max_rad + SLACK {
            return Err(CliError::Config(format!(
                "theta grid [{}, {}] deg outside the allowed window [{:.3}, {:.3}] deg",
                self.min_deg,
                self.max_deg,
                THETA_MIN.to_degrees(),
                max_rad.to_degrees()
            )));
        }
        Ok(())
    }
}

/// Sweep range MIN:MAX:COUNT, endpoints included, ascending values.
pub fn parse_range(spec: &str) -> CliResult<Vec<f64>> {
    let parts: Vec<&str> = spec.split(':').collect();
    if parts.len() != 3 {
        return Err(CliError::Config(format!(
            "range must be MIN:MAX:COUNT, got {spec:?}"
        )));
    }
    let min: f64 = parts[0]
        .parse()
        .map_err(|_| CliError::Config(format!("bad range minimum {:?}", parts[0])))?;
    let max: f64 = parts[1]
        .parse()
        .map_err(|_| CliError::Config(format!("bad range maximum {:?}", parts[1])))?;
    let count: usize = parts[2]
        .parse()
        .map_err(|_| CliError::Config(format!("bad range count {:?}", parts[2])))?;
    if count == 0 {
        return Err(CliError::Config("range count must be positive".into()));
    }
    if count == 1 {
        return Ok(vec![min]);
    }
    if !(max > min) {
        return Err(CliError::Config(format!(
            "range needs max > min, got {min}:{max}"
        )));
    }
    let step = (max - min) / (count - 1) as f64;
    Ok((0..count).map(|i| min + step * i as f64).collect())
}
