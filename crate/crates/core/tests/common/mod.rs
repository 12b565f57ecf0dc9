//! Brute-force references written directly from the definitions.
#![allow(dead_code)]

use std::collections::{HashMap, HashSet};

use extremal_core::complexes::{Face, Generators};

/// `x_A` exponent of `ε^a` is `Σ_{i∈A} a_i`; entry `A - 1` for each nonempty `A`.
pub fn label(a: &[u32]) -> Vec<u32> {
    let q = a.len();
    (1u32..(1 << q))
        .map(|m| (0..q).filter(|i| m >> i & 1 == 1).map(|i| a[i]).sum())
        .collect()
}

pub fn join(x: &[u32], y: &[u32]) -> Vec<u32> {
    x.iter().zip(y).map(|(a, b)| *a.max(b)).collect()
}

pub fn le(x: &[u32], y: &[u32]) -> bool {
    x.iter().zip(y).all(|(a, b)| a <= b)
}

pub fn labels_of(gens: &Generators) -> Vec<Vec<u32>> {
    gens.compositions()
        .iter()
        .map(|c| label(c.parts()))
        .collect()
}

pub fn face_label(labels: &[Vec<u32>], face: Face) -> Vec<u32> {
    face.vertices()
        .map(|v| labels[v].clone())
        .reduce(|a, b| join(&a, &b))
        .expect("nonempty face")
}

pub fn scarf_edge(labels: &[Vec<u32>], i: usize, j: usize) -> bool {
    let m = join(&labels[i], &labels[j]);
    (0..labels.len()).all(|c| c == i || c == j || !le(&labels[c], &m))
}

/// Scarf faces as the faces whose label no other face of the Taylor complex has.
pub fn scarf_faces(labels: &[Vec<u32>]) -> HashSet<Face> {
    let n = labels.len();
    assert!(n <= 20);
    let total = 1usize << n;
    let mut all: Vec<Vec<u32>> = vec![Vec::new(); total];
    let mut count: HashMap<Vec<u32>, u32> = HashMap::new();
    for mask in 1..total {
        let low = mask.trailing_zeros() as usize;
        let rest = mask & (mask - 1);
        all[mask] = if rest == 0 {
            labels[low].clone()
        } else {
            join(&all[rest], &labels[low])
        };
        *count.entry(all[mask].clone()).or_insert(0) += 1;
    }
    (1..total)
        .filter(|&m| count[&all[m]] == 1)
        .map(|m| Face::from_bits(m as u128))
        .collect()
}

pub fn f_vector(faces: impl IntoIterator<Item = Face>) -> Vec<usize> {
    let mut f = Vec::new();
    for face in faces {
        let k = face.len();
        if f.len() < k {
            f.resize(k, 0);
        }
        f[k - 1] += 1;
    }
    f
}

/// Number of `N^r_q` elements, for picking cases by size.
pub fn count(q: usize, r: u32) -> u128 {
    extremal_core::combinatorics::binomial(q as u64 + u64::from(r) - 1, u64::from(r))
}
