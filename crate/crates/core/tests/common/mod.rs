#![allow(dead_code)]

use cavity_entropy::numerics::ComplexMatrix;
use num_complex::Complex64;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub fn random_unit_vector(rng: &mut impl Rng, n: usize) -> Vec<Complex64> {
    let v: Vec<Complex64> = (0..n)
        .map(|_| c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
        .collect();
    let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    v.into_iter().map(|z| z / norm).collect()
}

pub fn random_hermitian(rng: &mut impl Rng, n: usize) -> ComplexMatrix {
    let mut m = ComplexMatrix::zeros(n, n);
    for i in 0..n {
        m[(i, i)] = c(rng.gen_range(-1.0..1.0), 0.0);
        for j in i + 1..n {
            let z = c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
            m[(i, j)] = z;
            m[(j, i)] = z.conj();
        }
    }
    m
}

/// Random non-empty proper subset of `0..n`, in random order.
pub fn random_keep(rng: &mut impl Rng, n: usize) -> Vec<usize> {
    loop {
        let mut keep: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.5)).collect();
        if keep.is_empty() || keep.len() == n {
            continue;
        }
        for i in (1..keep.len()).rev() {
            keep.swap(i, rng.gen_range(0..=i));
        }
        return keep;
    }
}

/// Reduced density by the textbook double sum over every pair of register
/// basis states, comparing the traced bits one by one.
pub fn brute_force_reduce(psi: &[Complex64], n_qubits: usize, keep: &[usize]) -> ComplexMatrix {
    let dim = 1 << keep.len();
    let bits = |x: usize| -> Vec<usize> {
        (0..n_qubits)
            .map(|q| (x >> (n_qubits - 1 - q)) & 1)
            .collect()
    };
    let kept_index = |b: &[usize]| keep.iter().fold(0, |acc, &q| acc * 2 + b[q]);
    let mut out = ComplexMatrix::zeros(dim, dim);
    for a in 0..psi.len() {
        let ba = bits(a);
        for b in 0..psi.len() {
            let bb = bits(b);
            let same_env = (0..n_qubits)
                .filter(|q| !keep.contains(q))
                .all(|q| ba[q] == bb[q]);
            if same_env {
                out[(kept_index(&ba), kept_index(&bb))] += psi[a] * psi[b].conj();
            }
        }
    }
    out
}

pub fn max_entry_diff(a: &ComplexMatrix, b: &ComplexMatrix) -> f64 {
    a.as_slice()
        .iter()
        .zip(b.as_slice())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}
