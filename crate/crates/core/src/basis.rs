//! Occupation-number basis of the seven-mode register and closure of an
//! initial support under the interaction rules.
//!
//! The register is `|p1⟩|p2⟩|m⟩|l1⟩|l2⟩|L⟩|k⟩`: two photon modes, one phonon
//! mode, the two orbital flags, the covalent-bond flag and the nuclei flag.
//! Only a handful of the 2^7 configurations are reachable from the initial
//! state, and the rest of the crate works on that restricted basis.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::model::RuleSet;

/// Number of two-level factors in the register.
pub const REGISTER_QUBITS: usize = 7;
/// Dimension of the full register, `2^7`.
pub const REGISTER_DIM: usize = 1 << REGISTER_QUBITS;
/// Default ceiling on any occupation number during closure.
pub const DEFAULT_OCCUPATION_CAP: u8 = 4;

/// One tensor factor of the register, in ket order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Mode {
    PhotonUp,
    PhotonDown,
    Phonon,
    OrbitalUp,
    OrbitalDown,
    Bond,
    Nuclei,
}

impl Mode {
    pub const ALL: [Mode; REGISTER_QUBITS] = [
        Mode::PhotonUp,
        Mode::PhotonDown,
        Mode::Phonon,
        Mode::OrbitalUp,
        Mode::OrbitalDown,
        Mode::Bond,
        Mode::Nuclei,
    ];

    /// Position of the factor in the ket, 0 = leftmost (`p1`).
    pub fn position(self) -> usize {
        self as usize
    }

    /// Bosonic modes may in principle hold more than one quantum.
    pub fn is_boson(self) -> bool {
        matches!(self, Mode::PhotonUp | Mode::PhotonDown | Mode::Phonon)
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Mode::PhotonUp => "p1",
            Mode::PhotonDown => "p2",
            Mode::Phonon => "m",
            Mode::OrbitalUp => "l1",
            Mode::OrbitalDown => "l2",
            Mode::Bond => "L",
            Mode::Nuclei => "k",
        }
    }
}

/// Occupation tuple `(p1, p2, m, l1, l2, L, k)`.
///
/// `L = 0` means the covalent bond is formed, `k = 0` means both nuclei sit
/// in the same cavity. Ordering is lexicographic on the tuple.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasisState {
    occ: [u8; REGISTER_QUBITS],
}

impl BasisState {
    pub const fn new(p1: u8, p2: u8, m: u8, l1: u8, l2: u8, bond: u8, nuclei: u8) -> Self {
        Self {
            occ: [p1, p2, m, l1, l2, bond, nuclei],
        }
    }

    pub const fn from_array(occ: [u8; REGISTER_QUBITS]) -> Self {
        Self { occ }
    }

    pub fn occupations(&self) -> [u8; REGISTER_QUBITS] {
        self.occ
    }

    pub fn get(&self, mode: Mode) -> u8 {
        self.occ[mode.position()]
    }

    pub fn with(mut self, mode: Mode, value: u8) -> Self {
        self.occ[mode.position()] = value;
        self
    }

    pub fn p1(&self) -> u8 {
        self.get(Mode::PhotonUp)
    }
    pub fn p2(&self) -> u8 {
        self.get(Mode::PhotonDown)
    }
    pub fn m(&self) -> u8 {
        self.get(Mode::Phonon)
    }
    pub fn l1(&self) -> u8 {
        self.get(Mode::OrbitalUp)
    }
    pub fn l2(&self) -> u8 {
        self.get(Mode::OrbitalDown)
    }
    pub fn bond(&self) -> u8 {
        self.get(Mode::Bond)
    }
    pub fn nuclei(&self) -> u8 {
        self.get(Mode::Nuclei)
    }

    /// Flags must be 0 or 1; bosonic modes are unrestricted here.
    pub fn validate(&self) -> Result<()> {
        for mode in Mode::ALL {
            if !mode.is_boson() && self.get(mode) > 1 {
                return Err(Error::InvalidState {
                    state: *self,
                    reason: format!("flag {} must be 0 or 1", mode.symbol()),
                });
            }
        }
        Ok(())
    }

    pub fn max_occupation(&self) -> u8 {
        self.occ.iter().copied().max().unwrap_or(0)
    }

    /// Index in the 128-dimensional register, leftmost factor most significant.
    pub fn full_index(&self) -> Result<usize> {
        let mut index = 0usize;
        for (pos, &n) in self.occ.iter().enumerate() {
            if n > 1 {
                return Err(Error::InvalidState {
                    state: *self,
                    reason: format!(
                        "occupation {n} of {} does not fit a qubit",
                        Mode::ALL[pos].symbol()
                    ),
                });
            }
            index = (index << 1) | n as usize;
        }
        Ok(index)
    }

    /// Inverse of [`BasisState::full_index`].
    pub fn from_full_index(index: usize) -> Result<Self> {
        if index >= REGISTER_DIM {
            return Err(Error::InvalidArgument(format!(
                "register index {index} out of range 0..{REGISTER_DIM}"
            )));
        }
        let mut occ = [0u8; REGISTER_QUBITS];
        for (pos, slot) in occ.iter_mut().enumerate() {
            *slot = ((index >> (REGISTER_QUBITS - 1 - pos)) & 1) as u8;
        }
        Ok(Self { occ })
    }
}

impl fmt::Display for BasisState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "|")?;
        for n in self.occ {
            write!(f, "{n}")?;
        }
        write!(f, "⟩")
    }
}

/// Ordered restricted basis with lookups in both directions.
#[derive(Debug, Clone, PartialEq)]
pub struct StateSpace {
    states: Vec<BasisState>,
    index_of: HashMap<BasisState, usize>,
    full_index_of: Vec<Option<usize>>,
}

impl StateSpace {
    /// Builds a space from an explicit ordered list. Duplicates are rejected.
    pub fn from_states(states: Vec<BasisState>) -> Result<Self> {
        let mut index_of = HashMap::with_capacity(states.len());
        for (i, s) in states.iter().enumerate() {
            s.validate()?;
            if index_of.insert(*s, i).is_some() {
                return Err(Error::InvalidState {
                    state: *s,
                    reason: "duplicate state".into(),
                });
            }
        }
        let full_index_of = states.iter().map(|s| s.full_index().ok()).collect();
        Ok(Self {
            states,
            index_of,
            full_index_of,
        })
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn states(&self) -> &[BasisState] {
        &self.states
    }

    pub fn state(&self, index: usize) -> BasisState {
        self.states[index]
    }

    pub fn index_of(&self, state: &BasisState) -> Option<usize> {
        self.index_of.get(state).copied()
    }

    pub fn contains(&self, state: &BasisState) -> bool {
        self.index_of.contains_key(state)
    }

    /// Register index of restricted state `index`, `None` when some bosonic
    /// mode holds more than one quantum.
    pub fn full_index_of(&self, index: usize) -> Option<usize> {
        self.full_index_of[index]
    }

    /// Register indices of every state, failing if any is not embeddable.
    pub fn register_indices(&self) -> Result<Vec<usize>> {
        self.states.iter().map(BasisState::full_index).collect()
    }

    pub fn as_set(&self) -> BTreeSet<BasisState> {
        self.states.iter().copied().collect()
    }
}

/// Closure of `initial` under every rule, forward and reverse, using the
/// default occupation cap.
pub fn enumerate_states(initial: &[BasisState], rules: &RuleSet) -> Result<StateSpace> {
    enumerate_states_capped(initial, rules, DEFAULT_OCCUPATION_CAP)
}

/// Breadth-first closure. Each layer is sorted lexicographically before it is
/// appended, so the ordering is a pure function of the inputs.
pub fn enumerate_states_capped(
    initial: &[BasisState],
    rules: &RuleSet,
    cap: u8,
) -> Result<StateSpace> {
    if initial.is_empty() {
        return Err(Error::EmptyInitial);
    }
    let check = |s: &BasisState| -> Result<()> {
        s.validate()?;
        if s.max_occupation() > cap {
            return Err(Error::OccupationCap { state: *s, cap });
        }
        Ok(())
    };

    let mut seen: BTreeSet<BasisState> = BTreeSet::new();
    let mut layer: Vec<BasisState> = Vec::new();
    for s in initial {
        check(s)?;
        if seen.insert(*s) {
            layer.push(*s);
        }
    }
    layer.sort();

    let mut ordered = Vec::new();
    while !layer.is_empty() {
        let mut next = BTreeSet::new();
        for s in &layer {
            for rule in rules.rules() {
                for (t, _) in rule.neighbors(s) {
                    check(&t)?;
                    if !seen.contains(&t) {
                        next.insert(t);
                    }
                }
            }
        }
        ordered.append(&mut layer);
        seen.extend(next.iter().copied());
        layer = next.into_iter().collect();
    }
    StateSpace::from_states(ordered)
}

/// The seventeen reachable states in their conventional order.
pub const REFERENCE_BASIS: [BasisState; 17] = [
    BasisState::new(0, 0, 0, 0, 0, 1, 0),
    BasisState::new(0, 0, 0, 0, 0, 1, 1),
    BasisState::new(0, 0, 0, 0, 1, 1, 0),
    BasisState::new(0, 0, 0, 0, 1, 1, 1),
    BasisState::new(0, 0, 0, 1, 0, 1, 0),
    BasisState::new(0, 0, 0, 1, 0, 1, 1),
    BasisState::new(0, 0, 0, 1, 1, 1, 0),
    BasisState::new(0, 0, 0, 1, 1, 1, 1),
    BasisState::new(0, 0, 1, 0, 0, 0, 0),
    BasisState::new(0, 1, 1, 0, 0, 0, 0),
    BasisState::new(1, 0, 1, 0, 0, 0, 0),
    BasisState::new(1, 1, 1, 0, 0, 0, 0),
    BasisState::new(0, 0, 1, 0, 1, 0, 0),
    BasisState::new(1, 0, 1, 0, 1, 0, 0),
    BasisState::new(0, 0, 1, 1, 0, 0, 0),
    BasisState::new(0, 1, 1, 1, 0, 0, 0),
    BasisState::new(0, 0, 1, 1, 1, 0, 0),
];

/// The four components of the initial state: both electrons in the
/// ground/excited molecular orbitals, bond broken, nuclei apart.
/// Ordered as `Φ0↑Φ0↓, Φ0↑Φ1↓, Φ1↑Φ0↓, Φ1↑Φ1↓` (reference indices 1, 3, 5, 7).
pub const INITIAL_SUPPORT: [BasisState; 4] = [
    REFERENCE_BASIS[1],
    REFERENCE_BASIS[3],
    REFERENCE_BASIS[5],
    REFERENCE_BASIS[7],
];

/// For each restricted index of `space`, the matching row of [`REFERENCE_BASIS`].
/// Fails if the two sets differ.
pub fn reference_permutation(space: &StateSpace) -> Result<Vec<usize>> {
    if space.len() != REFERENCE_BASIS.len() {
        return Err(Error::DimensionMismatch {
            expected: REFERENCE_BASIS.len(),
            found: space.len(),
        });
    }
    space
        .states()
        .iter()
        .map(|s| {
            REFERENCE_BASIS
                .iter()
                .position(|t| t == s)
                .ok_or(Error::StateOutsideSpace(*s))
        })
        .collect()
}

/// The restricted basis generated from [`INITIAL_SUPPORT`] by the model's
/// own rules.
pub fn bond_space() -> StateSpace {
    enumerate_states(&INITIAL_SUPPORT, &crate::model::bond_rules())
        .expect("built-in rule set closes within the occupation cap")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{bond_rules, RuleSet};

    #[test]
    fn full_index_packing() {
        assert_eq!(
            BasisState::new(0, 0, 0, 0, 0, 1, 0).full_index().unwrap(),
            2
        );
        assert_eq!(
            BasisState::new(1, 1, 1, 0, 0, 0, 0).full_index().unwrap(),
            112
        );
        assert_eq!(
            BasisState::new(0, 0, 0, 0, 0, 0, 1).full_index().unwrap(),
            1
        );
        assert_eq!(
            BasisState::new(1, 0, 0, 0, 0, 0, 0).full_index().unwrap(),
            64
        );
    }

    #[test]
    fn full_index_round_trip_is_a_bijection() {
        for i in 0..REGISTER_DIM {
            let s = BasisState::from_full_index(i).unwrap();
            assert_eq!(s.full_index().unwrap(), i);
        }
        assert!(BasisState::from_full_index(REGISTER_DIM).is_err());
    }

    #[test]
    fn full_index_rejects_multi_quanta() {
        let s = BasisState::new(2, 0, 0, 0, 0, 1, 0);
        assert!(matches!(s.full_index(), Err(Error::InvalidState { .. })));
    }

    #[test]
    fn model_closure_matches_table() {
        let space = enumerate_states(&INITIAL_SUPPORT, &bond_rules()).unwrap();
        assert_eq!(space.len(), 17);
        let table: BTreeSet<_> = REFERENCE_BASIS.iter().copied().collect();
        assert_eq!(space.as_set(), table);
        let perm = reference_permutation(&space).unwrap();
        for (i, &t) in perm.iter().enumerate() {
            assert_eq!(space.state(i), REFERENCE_BASIS[t]);
        }
    }

    #[test]
    fn model_closure_has_no_bonded_split_nuclei() {
        let space = bond_space();
        assert!(space
            .states()
            .iter()
            .all(|s| !(s.bond() == 0 && s.nuclei() == 1)));
        assert!(space.states().iter().all(|s| s.max_occupation() <= 1));
    }

    #[test]
    fn ordering_is_breadth_first_with_lexicographic_ties() {
        let space = bond_space();
        // first layer is the sorted initial support
        let mut first: Vec<_> = INITIAL_SUPPORT.to_vec();
        first.sort();
        assert_eq!(&space.states()[..4], first.as_slice());
        // second layer: tunnelling partners with k = 0, sorted
        let second: Vec<_> = first.iter().map(|s| s.with(Mode::Nuclei, 0)).collect();
        assert_eq!(&space.states()[4..8], second.as_slice());
    }

    #[test]
    fn empty_rules_leave_the_support_alone() {
        let s = REFERENCE_BASIS[13];
        let space = enumerate_states(&[s], &RuleSet::empty()).unwrap();
        assert_eq!(space.states(), &[s]);
    }

    #[test]
    fn bonded_phonon_state_closes_to_three_states() {
        // hand closure from (0,0,1,0,0,0,0): bond breaking absorbs the
        // phonon, then the nuclei may separate; no orbital flag is set so
        // the photon channels stay closed
        let space = enumerate_states(&[REFERENCE_BASIS[8]], &bond_rules()).unwrap();
        let expected: BTreeSet<_> = [
            BasisState::new(0, 0, 1, 0, 0, 0, 0),
            BasisState::new(0, 0, 0, 0, 0, 1, 0),
            BasisState::new(0, 0, 0, 0, 0, 1, 1),
        ]
        .into_iter()
        .collect();
        assert_eq!(space.as_set(), expected);
    }

    #[test]
    fn rejects_empty_and_malformed_initial() {
        assert_eq!(
            enumerate_states(&[], &bond_rules()).unwrap_err(),
            Error::EmptyInitial
        );
        let bad = BasisState::new(0, 0, 0, 2, 0, 1, 1);
        assert!(enumerate_states(&[bad], &bond_rules()).is_err());
        let crowded = BasisState::new(5, 0, 0, 0, 0, 1, 1);
        assert!(matches!(
            enumerate_states(&[crowded], &bond_rules()),
            Err(Error::OccupationCap { .. })
        ));
    }

    #[test]
    fn closure_is_idempotent() {
        let rules = bond_rules();
        let once = enumerate_states(&INITIAL_SUPPORT, &rules).unwrap();
        let twice = enumerate_states(once.states(), &rules).unwrap();
        assert_eq!(once.as_set(), twice.as_set());
    }

    #[test]
    fn every_rule_edge_stays_inside_the_space() {
        let space = bond_space();
        for s in space.states() {
            for rule in bond_rules().rules() {
                for (t, _) in rule.neighbors(s) {
                    assert!(space.contains(&t), "{s} -> {t} leaves the space");
                }
            }
        }
    }
}
