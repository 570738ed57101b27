mod common;

use cavity_entropy::basis::REFERENCE_BASIS;
use cavity_entropy::model::diagonal_energy;
use cavity_entropy::numerics::ComplexMatrix;
use cavity_entropy::{bond_space, build_hamiltonian, ModelParams, G_REF};
use common::c;

fn lower() -> ComplexMatrix {
    ComplexMatrix::from_real_rows(&[&[0.0, 1.0], &[0.0, 0.0]]).unwrap()
}

fn raise() -> ComplexMatrix {
    lower().adjoint()
}

fn proj(v: usize) -> ComplexMatrix {
    let mut m = ComplexMatrix::zeros(2, 2);
    m[(v, v)] = c(1.0, 0.0);
    m
}

/// Kronecker product over the seven register qubits; `ops` lists
/// (qubit, operator) and every other qubit gets the identity.
fn on_register(ops: &[(usize, ComplexMatrix)]) -> ComplexMatrix {
    let mut out = ComplexMatrix::identity(1);
    for q in 0..7 {
        let factor = ops
            .iter()
            .find(|(k, _)| *k == q)
            .map(|(_, m)| m.clone())
            .unwrap_or_else(|| ComplexMatrix::identity(2));
        out = out.kron(&factor);
    }
    out
}

/// The model Hamiltonian on the full 2^7 register, built from ladder and
/// two-level operators truncated to one excitation per mode.
fn register_hamiltonian(p: &ModelParams) -> ComplexMatrix {
    let (p1, p2, m, l1, l2, bond, k) = (0, 1, 2, 3, 4, 5, 6);
    let n = |q| on_register(&[(q, raise().matmul(&lower()))]);
    let re = |x: f64| c(x, 0.0);
    let mut h = ComplexMatrix::zeros(128, 128);
    h = &h + &(&n(p1) + &n(l1)).scale(re(p.hbar * p.omega_up));
    h = &h + &(&n(p2) + &n(l2)).scale(re(p.hbar * p.omega_down));
    h = &h + &(&n(m) + &n(bond)).scale(re(p.hbar * p.omega_ph));

    let up = on_register(&[(p1, raise()), (l1, lower()), (bond, proj(0))]);
    h = &h + &(&up + &up.adjoint()).scale(re(p.g_up));
    let down = on_register(&[(p2, raise()), (l2, lower()), (bond, proj(0))]);
    h = &h + &(&down + &down.adjoint()).scale(re(p.g_down));
    let form = on_register(&[
        (m, raise()),
        (bond, lower()),
        (k, proj(0)),
        (p1, proj(0)),
        (p2, proj(0)),
    ]);
    h = &h + &(&form + &form.adjoint()).scale(re(p.g_bond));
    let hop = on_register(&[(k, lower()), (bond, proj(1))]);
    h = &h + &(&hop + &hop.adjoint()).scale(re(p.zeta));
    h
}

fn params_set() -> Vec<ModelParams> {
    vec![
        ModelParams::default(),
        ModelParams {
            hbar: 0.7,
            omega_up: 1.3e9,
            omega_down: 0.9e9,
            omega_ph: 2.1e8,
            g_up: 3.1e7,
            g_down: 1.7e7,
            g_bond: 0.23e7,
            zeta: 4.4e7,
        },
    ]
}

#[test]
fn restricted_matches_register_build() {
    let space = bond_space();
    for p in params_set() {
        let big = register_hamiltonian(&p);
        let small = build_hamiltonian(&p, &space).unwrap();
        let idx = space.register_indices().unwrap();
        let scale = big.max_abs();
        for (i, &fi) in idx.iter().enumerate() {
            for (j, &fj) in idx.iter().enumerate() {
                let d = (small[(i, j)] - big[(fi, fj)]).norm();
                assert!(d <= 1e-15 * scale, "({i},{j}) differs by {d:e}");
            }
        }
    }
}

#[test]
fn reachable_space_is_invariant_under_register_hamiltonian() {
    let space = bond_space();
    let idx = space.register_indices().unwrap();
    let big = register_hamiltonian(&ModelParams::default());
    for &col in &idx {
        for row in 0..128 {
            if !idx.contains(&row) {
                assert_eq!(big[(row, col)], c(0.0, 0.0), "leak {col} -> {row}");
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum Kind {
    Up,
    Down,
    Bond,
    Hop,
}

/// Couplings between reference basis states, read off the interaction diagram.
const EDGES: [(usize, usize, Kind); 14] = [
    (0, 1, Kind::Hop),
    (2, 3, Kind::Hop),
    (4, 5, Kind::Hop),
    (6, 7, Kind::Hop),
    (0, 8, Kind::Bond),
    (2, 12, Kind::Bond),
    (4, 14, Kind::Bond),
    (6, 16, Kind::Bond),
    (14, 10, Kind::Up),
    (15, 11, Kind::Up),
    (16, 13, Kind::Up),
    (12, 9, Kind::Down),
    (13, 11, Kind::Down),
    (16, 15, Kind::Down),
];

#[test]
fn edge_list_matches_interaction_diagram() {
    let p = ModelParams {
        g_up: 1.0 * G_REF,
        g_down: 2.0 * G_REF,
        g_bond: 3.0 * G_REF,
        zeta: 4.0 * G_REF,
        ..ModelParams::default()
    };
    let space = bond_space();
    let at: Vec<usize> = REFERENCE_BASIS
        .iter()
        .map(|s| space.index_of(s).unwrap())
        .collect();
    let h = build_hamiltonian(&p, &space).unwrap();
    let amp = |k: Kind| match k {
        Kind::Up => p.g_up,
        Kind::Down => p.g_down,
        Kind::Bond => p.g_bond,
        Kind::Hop => p.zeta,
    };
    for a in 0..17 {
        for b in 0..17 {
            let got = h[(at[a], at[b])];
            if a == b {
                assert_eq!(got.re, diagonal_energy(&p, &REFERENCE_BASIS[a]));
                continue;
            }
            let want = EDGES
                .iter()
                .find(|e| (e.0, e.1) == (a, b) || (e.1, e.0) == (a, b))
                .map_or(0.0, |e| amp(e.2));
            assert_eq!(got, c(want, 0.0), "entry ({a},{b})");
        }
    }
}
