//! Physical parameters, the four interaction channels and Hamiltonian assembly.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::basis::{BasisState, Mode, StateSpace};
use crate::error::{Error, Result};
use crate::numerics::ComplexMatrix;

/// Reference coupling `g` in rad/s; the other defaults are quoted relative to it.
pub const G_REF: f64 = 1.0e7;

/// RWA is accepted while every coupling-to-frequency ratio stays below this.
pub const RWA_THRESHOLD: f64 = 0.1;

/// Frequencies in rad/s, couplings in energy units (ħ·rad/s).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelParams {
    pub hbar: f64,
    pub omega_up: f64,
    pub omega_down: f64,
    pub omega_ph: f64,
    pub g_up: f64,
    pub g_down: f64,
    pub g_bond: f64,
    pub zeta: f64,
}

impl Default for ModelParams {
    fn default() -> Self {
        Self {
            hbar: 1.0,
            omega_up: 1.0e9,
            omega_down: 1.0e9,
            omega_ph: 1.0e8,
            g_up: G_REF,
            g_down: G_REF,
            g_bond: 0.1 * G_REF,
            zeta: G_REF,
        }
    }
}

impl ModelParams {
    /// Sets both photon couplings `g_up` and `g_down`.
    pub fn with_photon_coupling(mut self, g: f64) -> Self {
        self.g_up = g;
        self.g_down = g;
        self
    }

    pub fn with_bond_coupling(mut self, g: f64) -> Self {
        self.g_bond = g;
        self
    }

    pub fn with_tunneling(mut self, zeta: f64) -> Self {
        self.zeta = zeta;
        self
    }

    /// Frequencies and ħ strictly positive, couplings non-negative, all finite.
    pub fn validate(&self) -> Result<()> {
        for p in Param::STORED {
            let v = p.get(self);
            if !v.is_finite() {
                return Err(Error::InvalidParams(format!("{p} is not finite")));
            }
            if p.is_frequency() && v <= 0.0 {
                return Err(Error::InvalidParams(format!(
                    "{p} must be positive, got {v}"
                )));
            }
            if !p.is_frequency() && v < 0.0 {
                return Err(Error::InvalidParams(format!(
                    "{p} must be non-negative, got {v}"
                )));
            }
        }
        Ok(())
    }

    pub fn coupling(&self, c: Coupling) -> f64 {
        match c {
            Coupling::PhotonUp => self.g_up,
            Coupling::PhotonDown => self.g_down,
            Coupling::Bond => self.g_bond,
            Coupling::Tunneling => self.zeta,
        }
    }
}

/// Named scalar in [`ModelParams`], used by config files, overrides and sweeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Param {
    Hbar,
    OmegaUp,
    OmegaDown,
    OmegaPh,
    GUp,
    GDown,
    GBond,
    Zeta,
    /// Both photon couplings at once.
    GPhoton,
}

impl Param {
    /// Parameters that correspond to exactly one field.
    pub const STORED: [Param; 8] = [
        Param::Hbar,
        Param::OmegaUp,
        Param::OmegaDown,
        Param::OmegaPh,
        Param::GUp,
        Param::GDown,
        Param::GBond,
        Param::Zeta,
    ];

    pub fn key(self) -> &'static str {
        match self {
            Param::Hbar => "hbar",
            Param::OmegaUp => "omega_up",
            Param::OmegaDown => "omega_down",
            Param::OmegaPh => "omega_ph",
            Param::GUp => "g_up",
            Param::GDown => "g_down",
            Param::GBond => "g_bond",
            Param::Zeta => "zeta",
            Param::GPhoton => "g_photon",
        }
    }

    fn is_frequency(self) -> bool {
        matches!(
            self,
            Param::Hbar | Param::OmegaUp | Param::OmegaDown | Param::OmegaPh
        )
    }

    pub fn get(self, p: &ModelParams) -> f64 {
        match self {
            Param::Hbar => p.hbar,
            Param::OmegaUp => p.omega_up,
            Param::OmegaDown => p.omega_down,
            Param::OmegaPh => p.omega_ph,
            Param::GUp | Param::GPhoton => p.g_up,
            Param::GDown => p.g_down,
            Param::GBond => p.g_bond,
            Param::Zeta => p.zeta,
        }
    }

    pub fn set(self, p: &mut ModelParams, value: f64) {
        match self {
            Param::Hbar => p.hbar = value,
            Param::OmegaUp => p.omega_up = value,
            Param::OmegaDown => p.omega_down = value,
            Param::OmegaPh => p.omega_ph = value,
            Param::GUp => p.g_up = value,
            Param::GDown => p.g_down = value,
            Param::GBond => p.g_bond = value,
            Param::Zeta => p.zeta = value,
            Param::GPhoton => {
                p.g_up = value;
                p.g_down = value;
            }
        }
    }
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())
    }
}

impl FromStr for Param {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Param::STORED
            .iter()
            .chain(std::iter::once(&Param::GPhoton))
            .copied()
            .find(|p| p.key() == s)
            .ok_or_else(|| Error::Config(format!("unknown parameter key {s:?}")))
    }
}

/// Which coupling constant scales a rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Coupling {
    PhotonUp,
    PhotonDown,
    Bond,
    Tunneling,
}

/// One interaction channel `c·(raise† lower + h.c.)` restricted by a guard.
///
/// The forward leg drives `lowered` from 1 to 0 and, if present, adds one
/// quantum to the bosonic mode `raised`. The reverse leg undoes it. Guards
/// only test modes the transition leaves untouched, so both legs see the same
/// guard and every edge is an involution pair.
#[derive(Debug, Clone, PartialEq)]
pub struct Rule {
    name: &'static str,
    coupling: Coupling,
    guard: Vec<(Mode, u8)>,
    lowered: Mode,
    raised: Option<Mode>,
}

impl Rule {
    pub fn new(
        name: &'static str,
        coupling: Coupling,
        guard: Vec<(Mode, u8)>,
        lowered: Mode,
        raised: Option<Mode>,
    ) -> Result<Self> {
        if lowered.is_boson() {
            return Err(Error::InvalidArgument(format!(
                "rule {name}: lowered mode {} must be a two-level flag",
                lowered.symbol()
            )));
        }
        if let Some(r) = raised {
            if !r.is_boson() {
                return Err(Error::InvalidArgument(format!(
                    "rule {name}: raised mode {} must be bosonic",
                    r.symbol()
                )));
            }
        }
        if guard
            .iter()
            .any(|(m, _)| *m == lowered || Some(*m) == raised)
        {
            return Err(Error::InvalidArgument(format!(
                "rule {name}: guard may not test a mode the rule changes"
            )));
        }
        Ok(Self {
            name,
            coupling,
            guard,
            lowered,
            raised,
        })
    }

    pub fn name(&self) -> &'static str {
        self.name
    }

    pub fn coupling(&self) -> Coupling {
        self.coupling
    }

    fn guard_holds(&self, s: &BasisState) -> bool {
        self.guard.iter().all(|&(m, v)| s.get(m) == v)
    }

    /// Forward leg from `s` with its bosonic matrix element `√(n+1)`.
    pub fn forward(&self, s: &BasisState) -> Option<(BasisState, f64)> {
        if !self.guard_holds(s) || s.get(self.lowered) != 1 {
            return None;
        }
        let mut t = s.with(self.lowered, 0);
        let mut factor = 1.0;
        if let Some(r) = self.raised {
            let n = s.get(r);
            t = t.with(r, n.checked_add(1)?);
            factor = f64::from(n + 1).sqrt();
        }
        Some((t, factor))
    }

    /// Reverse leg from `s` with its bosonic matrix element `√n`.
    pub fn reverse(&self, s: &BasisState) -> Option<(BasisState, f64)> {
        if !self.guard_holds(s) || s.get(self.lowered) != 0 {
            return None;
        }
        let mut t = s.with(self.lowered, 1);
        let mut factor = 1.0;
        if let Some(r) = self.raised {
            let n = s.get(r);
            if n == 0 {
                return None;
            }
            t = t.with(r, n - 1);
            factor = f64::from(n).sqrt();
        }
        Some((t, factor))
    }

    /// All states one application away, in either direction.
    pub fn neighbors(&self, s: &BasisState) -> impl Iterator<Item = (BasisState, f64)> {
        self.forward(s).into_iter().chain(self.reverse(s))
    }

    /// Off-diagonal element between `s` and its forward partner.
    pub fn amplitude(&self, params: &ModelParams, s: &BasisState) -> Option<f64> {
        self.forward(s)
            .map(|(_, factor)| params.coupling(self.coupling) * factor)
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct RuleSet {
    rules: Vec<Rule>,
}

impl RuleSet {
    pub fn new(rules: Vec<Rule>) -> Self {
        Self { rules }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }
}

/// The four channels of the bond/phonon model:
///
/// * `R1`: with the bond formed, the spin-up electron relaxes and emits an `Ω↑` photon.
/// * `R2`: same for spin-down and `Ω↓`.
/// * `R3`: nuclei together and no photons present, the bond forms and emits a phonon.
/// * `R4`: with the bond broken, the nuclei tunnel between cavities.
pub fn bond_rules() -> RuleSet {
    use Mode::*;
    let rules = vec![
        Rule::new(
            "R1",
            Coupling::PhotonUp,
            vec![(Bond, 0)],
            OrbitalUp,
            Some(PhotonUp),
        ),
        Rule::new(
            "R2",
            Coupling::PhotonDown,
            vec![(Bond, 0)],
            OrbitalDown,
            Some(PhotonDown),
        ),
        Rule::new(
            "R3",
            Coupling::Bond,
            vec![(Nuclei, 0), (PhotonUp, 0), (PhotonDown, 0)],
            Bond,
            Some(Phonon),
        ),
        Rule::new("R4", Coupling::Tunneling, vec![(Bond, 1)], Nuclei, None),
    ];
    RuleSet::new(
        rules
            .into_iter()
            .collect::<Result<Vec<_>>>()
            .expect("built-in rules are well formed"),
    )
}

/// Number-operator energy `ħΩ↑(p1+l1) + ħΩ↓(p2+l2) + ħω(m+L)`.
pub fn diagonal_energy(params: &ModelParams, s: &BasisState) -> f64 {
    let n = |v: u8| f64::from(v);
    params.hbar
        * (params.omega_up * (n(s.p1()) + n(s.l1()))
            + params.omega_down * (n(s.p2()) + n(s.l2()))
            + params.omega_ph * (n(s.m()) + n(s.bond())))
}

/// Hamiltonian restricted to `space` under [`bond_rules`].
pub fn build_hamiltonian(params: &ModelParams, space: &StateSpace) -> Result<ComplexMatrix> {
    build_hamiltonian_with(params, space, &bond_rules())
}

/// Assembles `H` symmetrically: each forward edge `s → t` writes the same real
/// amplitude into `H[s][t]` and `H[t][s]`.
pub fn build_hamiltonian_with(
    params: &ModelParams,
    space: &StateSpace,
    rules: &RuleSet,
) -> Result<ComplexMatrix> {
    let n = space.len();
    let mut h = ComplexMatrix::zeros(n, n);
    for (i, s) in space.states().iter().enumerate() {
        h[(i, i)] = Complex64::new(diagonal_energy(params, s), 0.0);
        for rule in rules.rules() {
            if let Some((t, _)) = rule.reverse(s) {
                if !space.contains(&t) {
                    return Err(Error::StateOutsideSpace(t));
                }
            }
            let Some((t, factor)) = rule.forward(s) else {
                continue;
            };
            let j = space.index_of(&t).ok_or(Error::StateOutsideSpace(t))?;
            let amp = Complex64::new(params.coupling(rule.coupling()) * factor, 0.0);
            h[(i, j)] += amp;
            h[(j, i)] += amp;
        }
    }
    Ok(h)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RwaCheck {
    pub ratio_photon: f64,
    pub ratio_phonon: f64,
    pub ok: bool,
}

/// Coupling-to-frequency ratios that justify dropping counter-rotating terms.
pub fn validate_rwa(params: &ModelParams) -> Result<RwaCheck> {
    let min_photon = params.omega_up.min(params.omega_down);
    if params.hbar * min_photon == 0.0 || params.hbar * params.omega_ph == 0.0 {
        return Err(Error::InvalidParams(
            "RWA check needs non-zero ħ and frequencies".into(),
        ));
    }
    let ratio_photon = params.g_up.max(params.g_down) / (params.hbar * min_photon);
    let ratio_phonon = params.g_bond / (params.hbar * params.omega_ph);
    Ok(RwaCheck {
        ratio_photon,
        ratio_phonon,
        ok: ratio_photon < RWA_THRESHOLD && ratio_phonon < RWA_THRESHOLD,
    })
}
