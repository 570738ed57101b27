use std::io::{self, Write};

use super::{EntropyTrace, SweepGrid};

/// Fixed leading columns of a trace file; entropy columns follow.
pub const TRACE_PREFIX: &str = "t,norm,energy";
pub const SWEEP_HEADER: &str = "x,y,peak";

// 15 significant digits
fn num(v: f64) -> String {
    format!("{v:.14e}")
}

pub fn write_trace_csv<W: Write>(trace: &EntropyTrace, mut out: W) -> io::Result<()> {
    write!(out, "{TRACE_PREFIX}")?;
    for label in trace.labels() {
        write!(out, ",{label}")?;
    }
    writeln!(out)?;
    for k in 0..trace.len() {
        write!(
            out,
            "{},{},{}",
            num(trace.times[k]),
            num(trace.norm[k]),
            num(trace.energy[k])
        )?;
        for column in &trace.values {
            write!(out, ",{}", num(column[k]))?;
        }
        writeln!(out)?;
    }
    out.flush()
}

/// Long form: one `x,y,peak` row per grid point, x varying fastest.
pub fn write_sweep_csv<W: Write>(grid: &SweepGrid, mut out: W) -> io::Result<()> {
    writeln!(out, "{SWEEP_HEADER}")?;
    for (iy, &y) in grid.y.values.iter().enumerate() {
        for (ix, &x) in grid.x.values.iter().enumerate() {
            writeln!(out, "{},{},{}", num(x), num(y), num(grid.peak[iy][ix]))?;
        }
    }
    out.flush()
}
