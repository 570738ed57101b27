use rayon::prelude::*;

use super::{peak_entropy, simulate};
use crate::basis::StateSpace;
use crate::entropy::Bipartition;
use crate::error::{Error, Result};
use crate::evolve::RunConfig;
use crate::model::{ModelParams, Param};

/// One swept parameter and its grid values.
#[derive(Debug, Clone, PartialEq)]
pub struct ParamAxis {
    pub param: Param,
    pub values: Vec<f64>,
}

impl ParamAxis {
    pub fn new(param: Param, values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidArgument(format!(
                "axis {param} has no values"
            )));
        }
        if values.iter().any(|v| !v.is_finite()) || values.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidArgument(format!(
                "axis {param} values must be finite and strictly ascending"
            )));
        }
        Ok(Self { param, values })
    }

    /// `n` evenly spaced values from `start` to `stop` inclusive.
    pub fn linspace(param: Param, start: f64, stop: f64, n: usize) -> Result<Self> {
        let values = match n {
            0 => Vec::new(),
            1 => vec![start],
            _ => (0..n)
                .map(|i| start + (stop - start) * i as f64 / (n - 1) as f64)
                .collect(),
        };
        Self::new(param, values)
    }
}

/// Peak entropy over a 2-D parameter grid; `peak[iy][ix]`.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepGrid {
    pub x: ParamAxis,
    pub y: ParamAxis,
    pub peak: Vec<Vec<f64>>,
}

impl SweepGrid {
    pub fn at(&self, ix: usize, iy: usize) -> f64 {
        self.peak[iy][ix]
    }
}

/// Runs one simulation per grid point and records the peak of `partition`.
/// Points are evaluated in parallel and gathered in grid order.
pub fn sweep2d(
    x: &ParamAxis,
    y: &ParamAxis,
    fixed: &ModelParams,
    partition: &Bipartition,
    horizon: f64,
    dt: f64,
) -> Result<SweepGrid> {
    if x.values.is_empty() || y.values.is_empty() {
        return Err(Error::InvalidArgument("sweep grid is empty".into()));
    }
    let space = crate::basis::bond_space();
    let config = RunConfig::for_horizon(horizon, dt);
    let nx = x.values.len();
    let points: Vec<f64> = (0..nx * y.values.len())
        .into_par_iter()
        .map(|k| {
            let mut params = *fixed;
            x.param.set(&mut params, x.values[k % nx]);
            y.param.set(&mut params, y.values[k / nx]);
            peak_at(&params, &space, &config, partition)
        })
        .collect::<Result<_>>()?;
    let peak = points.chunks(nx).map(<[f64]>::to_vec).collect();
    Ok(SweepGrid {
        x: x.clone(),
        y: y.clone(),
        peak,
    })
}

fn peak_at(
    params: &ModelParams,
    space: &StateSpace,
    config: &RunConfig,
    partition: &Bipartition,
) -> Result<f64> {
    let trace = simulate(params, space, config, std::slice::from_ref(partition))?;
    peak_entropy(&trace, &partition.label())
}
