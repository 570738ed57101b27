//! Entropy traces, their wave-packet statistics, parameter sweeps and the flat
//! file formats used by the command-line tool.

mod csv;
mod inequalities;
mod invariants;
mod sweep;
mod trace;

pub use csv::{write_sweep_csv, write_trace_csv, SWEEP_HEADER, TRACE_PREFIX};
pub use inequalities::{check_inequalities, InequalityReport, INEQUALITY_SLACK};
pub use invariants::{check_invariants, InvariantCheck};
pub use sweep::{sweep2d, ParamAxis, SweepGrid};
pub use trace::{
    envelope, envelope_period, peak_entropy, simulate, simulate_presets, EntropyTrace,
    QUIET_ZONE_EPS,
};
