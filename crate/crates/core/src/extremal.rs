//! Exponent arithmetic for the generators `ε^a` of powers of extremal ideals.
//!
//! The variables of the ambient ring are indexed by nonempty `A ⊆ [q]` and
//! `ε_i` is the product of all `x_A` with `i ∈ A`. Hence the exponent of `x_A`
//! in `ε^a` is `Σ_{i∈A} a_i`, and the lcm of a set of generators takes, for
//! every `A`, the maximum of those sums. Nothing here builds monomials
//! symbolically; everything is an integer array indexed by the canonical
//! subset order.

use std::fmt;

use crate::combinatorics::{Composition, SubsetMask, MAX_SUBSET_Q};
use crate::error::{invalid, Error, Result};

/// A monomial of the extremal ring: one exponent per nonempty `A ⊆ [q]`,
/// stored at position `bits(A) - 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExtExponent {
    q: u32,
    exps: Vec<u32>,
}

impl ExtExponent {
    pub fn from_exps(q: u32, exps: Vec<u32>) -> Result<Self> {
        check_q(q)?;
        if exps.len() != (1usize << q) - 1 {
            return Err(Error::Mismatch(format!(
                "expected {} exponents for q={q}, got {}",
                (1usize << q) - 1,
                exps.len()
            )));
        }
        Ok(Self { q, exps })
    }

    /// The monomial `1`.
    pub fn one(q: u32) -> Result<Self> {
        check_q(q)?;
        Ok(Self {
            q,
            exps: vec![0; (1usize << q) - 1],
        })
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn get(&self, subset: SubsetMask) -> u32 {
        self.exps[subset.index()]
    }

    /// Componentwise maximum, i.e. the lcm.
    pub fn join(&self, other: &ExtExponent) -> ExtExponent {
        debug_assert_eq!(self.q, other.q);
        ExtExponent {
            q: self.q,
            exps: join_slices(&self.exps, &other.exps),
        }
    }

    pub fn divides(&self, other: &ExtExponent) -> bool {
        self.q == other.q && divides_slice(&self.exps, &other.exps)
    }

    /// Canonical rendering, e.g. `x_1^2*x_12^3`; exponent one prints bare and
    /// the empty monomial prints as `1`.
    pub fn render(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for ExtExponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (idx, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            let subset = SubsetMask::new(idx as u32 + 1, self.q).expect("index in range");
            write!(f, "x_{subset}")?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

fn check_q(q: u32) -> Result<()> {
    if q == 0 || q > MAX_SUBSET_Q {
        return Err(invalid(format!(
            "extremal arithmetic needs 1 <= q <= {MAX_SUBSET_Q}, got {q}"
        )));
    }
    Ok(())
}

pub(crate) fn join_slices(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

pub(crate) fn join_into(acc: &mut [u32], b: &[u32]) {
    for (x, y) in acc.iter_mut().zip(b) {
        if *y > *x {
            *x = *y;
        }
    }
}

pub(crate) fn divides_slice(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// Whether `ε^b` divides `lcm(ε^a : a ∈ others)` for vectors of any length.
///
/// Only subsets of the union of the supports can tell the two sides apart,
/// so the cost is exponential in that union rather than in `q`.
pub fn divides_lcm_of(b: &[u32], others: &[&[u32]]) -> bool {
    let support: Vec<usize> = (0..b.len())
        .filter(|&i| b[i] > 0 || others.iter().any(|a| a[i] > 0))
        .collect();
    let k = support.len();
    assert!(
        k < usize::BITS as usize - 1,
        "support too large to enumerate"
    );
    let size = 1usize << k;
    let sums = |v: &[u32]| {
        let mut out = vec![0u32; size];
        for mask in 1..size {
            out[mask] = out[mask & (mask - 1)] + v[support[mask.trailing_zeros() as usize]];
        }
        out
    };
    let bs = sums(b);
    let tables: Vec<Vec<u32>> = others.iter().map(|a| sums(a)).collect();
    (1..size).all(|mask| tables.iter().any(|t| t[mask] >= bs[mask]))
}

/// Exponent of `x_A` in `ε^a`: the sum of `a_i` over `i ∈ A`.
pub fn epsilon_exponent(a: &Composition, subset: SubsetMask) -> u32 {
    a.parts()
        .iter()
        .enumerate()
        .filter(|(i, _)| subset.bits() & (1 << i) != 0)
        .map(|(_, &p)| p)
        .sum()
}

/// The full exponent array of `ε^a` for an arbitrary vector `a ∈ N^q`.
pub fn vector_exponent(a: &[u32]) -> Result<ExtExponent> {
    let q = a.len() as u32;
    check_q(q)?;
    let size = 1usize << q;
    // sums[bits] = sums[bits without its lowest member] + a[lowest member]
    let mut sums = vec![0u32; size];
    for bits in 1..size {
        let low = bits.trailing_zeros() as usize;
        sums[bits] = sums[bits & (bits - 1)] + a[low];
    }
    sums.remove(0);
    Ok(ExtExponent { q, exps: sums })
}

/// The exponent array of the generator `ε^a`.
pub fn generator_exponent(a: &Composition) -> Result<ExtExponent> {
    vector_exponent(a.parts())
}

fn check_shared(face: &[Composition]) -> Result<(usize, u32)> {
    let first = face
        .first()
        .ok_or(Error::EmptyFace("a face needs a vertex"))?;
    let (q, r) = (first.q(), first.r());
    for v in face {
        if v.q() != q || v.r() != r {
            return Err(Error::Mismatch(format!(
                "vertex {v} does not lie in N^{r}_{q}"
            )));
        }
    }
    Ok((q, r))
}

/// The lcm label `m_σ` of a set of generators.
pub fn face_label(face: &[Composition]) -> Result<ExtExponent> {
    check_shared(face)?;
    let mut label = generator_exponent(&face[0])?;
    for v in &face[1..] {
        let e = generator_exponent(v)?;
        join_into(&mut label.exps, &e.exps);
    }
    Ok(label)
}

/// Whether `ε^b` divides the monomial `label`.
pub fn divides_label(b: &Composition, label: &ExtExponent) -> bool {
    if b.q() as u32 != label.q() {
        return false;
    }
    // Loop over every subset in canonical order.
    let q = label.q();
    (1..(1u32 << q)).all(|bits| {
        let sum: u32 = b
            .parts()
            .iter()
            .enumerate()
            .filter(|(i, _)| bits & (1 << i) != 0)
            .map(|(_, &p)| p)
            .sum();
        sum <= label.exps[bits as usize - 1]
    })
}

/// Componentwise minimum of the vertices (the exponent of the e-gcd).
pub fn e_gcd(face: &[Composition]) -> Result<Vec<u32>> {
    let first = face
        .first()
        .ok_or(Error::EmptyFace("e-gcd of no generators"))?;
    let mut out = first.parts().to_vec();
    for v in &face[1..] {
        if v.q() != out.len() {
            return Err(Error::Mismatch(format!("vertex {v} has the wrong length")));
        }
        for (o, p) in out.iter_mut().zip(v.parts()) {
            *o = (*o).min(*p);
        }
    }
    Ok(out)
}

/// Multiplies every vertex of the face by `ε^d`.
pub fn scale_face(d: &[u32], face: &[Composition]) -> Result<Vec<Composition>> {
    face.iter()
        .map(|v| {
            if v.q() != d.len() {
                return Err(Error::Mismatch(format!(
                    "cannot translate {v} by a vector of length {}",
                    d.len()
                )));
            }
            Composition::new(v.parts().iter().zip(d).map(|(x, y)| x + y).collect())
        })
        .collect()
}
