use super::EntropyTrace;
use crate::entropy::Preset;
use crate::error::Result;

/// Allowed slack on every comparison, in bits.
pub const INEQUALITY_SLACK: f64 = 1e-9;

/// Per-sample violation counts of the photon and photon/phonon entropy
/// orderings.
#[derive(Debug, Clone, PartialEq)]
pub struct InequalityReport {
    pub samples: usize,
    /// `(relation, number of violating samples, first violating time)`
    pub checks: Vec<(&'static str, usize, Option<f64>)>,
}

impl InequalityReport {
    pub fn total_violations(&self) -> usize {
        self.checks.iter().map(|c| c.1).sum()
    }

    pub fn is_clean(&self) -> bool {
        self.total_violations() == 0
    }

    pub fn violations(&self, relation: &str) -> Option<usize> {
        self.checks.iter().find(|c| c.0 == relation).map(|c| c.1)
    }
}

type Relation = (&'static str, fn(&[f64; 5]) -> bool);

const RELATIONS: [Relation; 6] = [
    ("S_Omega_up + S_Omega_down >= S_Omega", |s| {
        s[1] + s[2] >= s[0] - INEQUALITY_SLACK
    }),
    ("S_Omega >= S_Omega_up", |s| s[0] >= s[1] - INEQUALITY_SLACK),
    ("S_Omega_up == S_Omega_down", |s| {
        (s[1] - s[2]).abs() <= INEQUALITY_SLACK
    }),
    ("S_Omega + S_omega >= S_Omega_omega", |s| {
        s[0] + s[3] >= s[4] - INEQUALITY_SLACK
    }),
    ("S_Omega_omega >= S_omega", |s| {
        s[4] >= s[3] - INEQUALITY_SLACK
    }),
    ("S_omega >= S_Omega", |s| s[3] >= s[0] - INEQUALITY_SLACK),
];

/// Counts samples violating each relation; the trace must carry all five
/// preset columns.
pub fn check_inequalities(trace: &EntropyTrace) -> Result<InequalityReport> {
    let cols = Preset::ALL
        .iter()
        .map(|p| trace.series(p.column()))
        .collect::<Result<Vec<_>>>()?;
    let mut checks: Vec<(&'static str, usize, Option<f64>)> =
        RELATIONS.iter().map(|r| (r.0, 0, None)).collect();
    for (k, &t) in trace.times.iter().enumerate() {
        let s = [cols[0][k], cols[1][k], cols[2][k], cols[3][k], cols[4][k]];
        for (check, (_, holds)) in checks.iter_mut().zip(RELATIONS.iter()) {
            if !holds(&s) {
                check.1 += 1;
                check.2.get_or_insert(t);
            }
        }
    }
    Ok(InequalityReport {
        samples: trace.len(),
        checks,
    })
}
