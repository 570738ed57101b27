use crate::basis::StateSpace;
use crate::entropy::{preset_partitions, reduced_density, Bipartition};
use crate::error::{Error, Result};
use crate::evolve::{observables, run_streaming, RunConfig};
use crate::model::ModelParams;

/// Default threshold (bits) below which an envelope point counts as quiet.
///
/// Envelope nodes rarely coincide with a carrier maximum, so the maxima on
/// either side of a node can sit well above zero.
pub const QUIET_ZONE_EPS: f64 = 0.3;

/// Sampled entropies of several subsystems, plus norm and energy.
#[derive(Debug, Clone, PartialEq)]
pub struct EntropyTrace {
    pub times: Vec<f64>,
    pub norm: Vec<f64>,
    pub energy: Vec<f64>,
    pub partitions: Vec<Bipartition>,
    /// One series per partition, aligned with `times`.
    pub values: Vec<Vec<f64>>,
}

impl EntropyTrace {
    /// Builds a trace from bare series, e.g. for synthetic signals.
    pub fn from_series(times: Vec<f64>, series: Vec<(Bipartition, Vec<f64>)>) -> Result<Self> {
        let n = times.len();
        let mut partitions = Vec::with_capacity(series.len());
        let mut values = Vec::with_capacity(series.len());
        for (p, v) in series {
            if v.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: v.len(),
                });
            }
            partitions.push(p);
            values.push(v);
        }
        Ok(Self {
            times,
            norm: vec![1.0; n],
            energy: vec![0.0; n],
            partitions,
            values,
        })
    }

    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    pub fn labels(&self) -> Vec<String> {
        self.partitions.iter().map(Bipartition::label).collect()
    }

    /// Series by column label (`S_Omega`, `S_q0_q3`, ...).
    pub fn series(&self, label: &str) -> Result<&[f64]> {
        self.partitions
            .iter()
            .position(|p| p.label() == label)
            .map(|i| self.values[i].as_slice())
            .ok_or_else(|| Error::UnknownSeries(label.to_string()))
    }

    /// Spacing of the sample grid, zero for fewer than two samples.
    pub fn sample_interval(&self) -> f64 {
        match self.times.as_slice() {
            [a, b, ..] => b - a,
            _ => 0.0,
        }
    }
}

/// Runs one evolution and records the entropy of every partition at each
/// sample.
pub fn simulate(
    params: &ModelParams,
    space: &StateSpace,
    config: &RunConfig,
    partitions: &[Bipartition],
) -> Result<EntropyTrace> {
    let n = config.sample_count();
    let mut trace = EntropyTrace {
        times: Vec::with_capacity(n),
        norm: Vec::with_capacity(n),
        energy: Vec::with_capacity(n),
        partitions: partitions.to_vec(),
        values: vec![Vec::with_capacity(n); partitions.len()],
    };
    run_streaming(params, space, config, |s| {
        let obs = observables(s.state, s.hamiltonian);
        trace.times.push(s.time);
        trace.norm.push(obs.norm);
        trace.energy.push(obs.energy);
        for (p, column) in partitions.iter().zip(trace.values.iter_mut()) {
            column.push(reduced_density(s.state, space, p)?.entropy()?);
        }
        Ok(())
    })?;
    Ok(trace)
}

/// [`simulate`] with the five preset subsystems.
pub fn simulate_presets(
    params: &ModelParams,
    space: &StateSpace,
    config: &RunConfig,
) -> Result<EntropyTrace> {
    simulate(params, space, config, &preset_partitions())
}

/// Largest sampled value of a series.
pub fn peak_entropy(trace: &EntropyTrace, label: &str) -> Result<f64> {
    let s = trace.series(label)?;
    if s.is_empty() {
        return Err(Error::InvalidArgument("peak of an empty trace".into()));
    }
    Ok(s.iter().copied().fold(f64::NEG_INFINITY, f64::max))
}

/// Strict local maxima `(time, value)`. A flat top counts once, at the
/// midpoint of the plateau.
pub fn envelope(trace: &EntropyTrace, label: &str) -> Result<Vec<(f64, f64)>> {
    let s = trace.series(label)?;
    let t = &trace.times;
    let mut out = Vec::new();
    if s.len() < 3 {
        return Ok(out);
    }
    let mut i = 1;
    while i + 1 < s.len() {
        let mut j = i;
        while j + 1 < s.len() && s[j + 1] == s[i] {
            j += 1;
        }
        if j + 1 < s.len() && s[i - 1] < s[i] && s[j + 1] < s[i] {
            out.push((0.5 * (t[i] + t[j]), s[i]));
        }
        i = j + 1;
    }
    Ok(out)
}

/// Mean spacing of quiet zones along the upper envelope.
///
/// The envelope is the first sample followed by the local maxima of the
/// series; a quiet zone is a maximal run of envelope points below `eps`,
/// located at the midpoint of its first and last point. Working on maxima
/// rather than raw samples keeps the fast carrier, which dips to zero every
/// cycle, from registering as a zone.
///
/// A zone containing the first sample is anchored there: evolution from a
/// real initial state under a real Hamiltonian is even in time, so the true
/// zone is centred on it. A zone reaching the last envelope point may be
/// truncated and is ignored.
pub fn envelope_period(trace: &EntropyTrace, label: &str, eps: f64) -> Result<f64> {
    let s = trace.series(label)?;
    if s.is_empty() {
        return Err(Error::HorizonTooShort { found: 0 });
    }
    let mut points = vec![(trace.times[0], s[0])];
    points.extend(envelope(trace, label)?);
    let mut mids = Vec::new();
    let mut i = 0;
    while i < points.len() {
        if points[i].1 >= eps {
            i += 1;
            continue;
        }
        let start = i;
        while i < points.len() && points[i].1 < eps {
            i += 1;
        }
        if start == 0 {
            mids.push(points[0].0);
        } else if i < points.len() {
            mids.push(0.5 * (points[start].0 + points[i - 1].0));
        }
    }
    if mids.len() < 2 {
        return Err(Error::HorizonTooShort { found: mids.len() });
    }
    Ok((mids[mids.len() - 1] - mids[0]) / (mids.len() - 1) as f64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn one(times: Vec<f64>, v: Vec<f64>) -> EntropyTrace {
        let p = Bipartition::named(vec![0], "x").unwrap();
        EntropyTrace::from_series(times, vec![(p, v)]).unwrap()
    }

    fn grid(n: usize, dt: f64) -> Vec<f64> {
        (0..n).map(|i| i as f64 * dt).collect()
    }

    #[test]
    fn peak_of_constant_zero() {
        let tr = one(grid(10, 1.0), vec![0.0; 10]);
        assert_eq!(peak_entropy(&tr, "x").unwrap(), 0.0);
        assert!(matches!(
            peak_entropy(&tr, "y"),
            Err(Error::UnknownSeries(_))
        ));
    }

    #[test]
    fn envelope_cases() {
        let mono = one(grid(5, 1.0), vec![0., 1., 2., 3., 4.]);
        assert!(envelope(&mono, "x").unwrap().is_empty());
        let tri = one(grid(5, 1.0), vec![0., 1., 2., 1., 0.]);
        assert_eq!(envelope(&tri, "x").unwrap(), vec![(2.0, 2.0)]);
        let flat = one(grid(6, 1.0), vec![0., 1., 3., 3., 1., 0.]);
        assert_eq!(envelope(&flat, "x").unwrap(), vec![(2.5, 3.0)]);
        let short = one(grid(2, 1.0), vec![0., 1.]);
        assert!(envelope(&short, "x").unwrap().is_empty());
    }

    #[test]
    fn synthetic_wave_packet_period() {
        let period = 3e-6;
        let dt = 1e-9;
        let n = 10_000;
        let times = grid(n, dt);
        let v: Vec<f64> = times
            .iter()
            .map(|&t| {
                let x = std::f64::consts::PI * t / period;
                (x.sin() * (20.0 * x).cos()).powi(2)
            })
            .collect();
        let tr = one(times, v);
        let p = envelope_period(&tr, "x", QUIET_ZONE_EPS).unwrap();
        assert!((p - period).abs() <= dt, "{p}");
    }

    #[test]
    fn node_between_carrier_maxima() {
        let period = 3e-6;
        let times = grid(20_000, 1e-9);
        let v: Vec<f64> = times
            .iter()
            .map(|&t| {
                let x = std::f64::consts::PI * t / period;
                (x.sin() * (13.3 * x).cos()).powi(2)
            })
            .collect();
        let tr = one(times, v);
        let p = envelope_period(&tr, "x", QUIET_ZONE_EPS).unwrap();
        assert!((p / period - 1.0).abs() < 0.02, "{p}");
    }

    #[test]
    fn carrier_dips_are_not_zones() {
        let dt = 1e-9;
        let times = grid(4000, dt);
        let v: Vec<f64> = times.iter().map(|&t| (t * 2e7).sin().powi(2)).collect();
        let tr = one(times, v);
        assert_eq!(
            envelope_period(&tr, "x", QUIET_ZONE_EPS),
            Err(Error::HorizonTooShort { found: 1 })
        );
    }

    #[test]
    fn too_short_horizon() {
        let tr = one(grid(100, 1.0), (0..100).map(|i| i as f64 * 0.01).collect());
        assert_eq!(
            envelope_period(&tr, "x", 0.02),
            Err(Error::HorizonTooShort { found: 1 })
        );
    }
}
