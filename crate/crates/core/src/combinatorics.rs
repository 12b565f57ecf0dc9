//! Integer compositions and nonempty subsets of `[q]`.
//!
//! A [`Composition`] `a ∈ N^r_q` indexes the generator `ε^a` of the `r`-th
//! power of the `q`-extremal ideal; a [`SubsetMask`] indexes the variable
//! `x_A` of the ring the extremal ideal lives in.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{invalid, Error, Result};

/// Largest `q` for which subset-indexed arrays (length `2^q - 1`) are built.
pub const MAX_SUBSET_Q: u32 = 16;

/// A vector of `q` non-negative integers. Its sum is the power `r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<u32>,
}

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.is_empty() {
            return Err(invalid("a composition needs at least one part (q >= 1)"));
        }
        Ok(Self { parts })
    }

    pub fn q(&self) -> usize {
        self.parts.len()
    }

    pub fn r(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<u32> {
        self.parts
    }

    /// Zero-based indices of the positive entries.
    pub fn support(&self) -> Vec<usize> {
        self.parts
            .iter()
            .enumerate()
            .filter(|(_, &p)| p > 0)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn is_square_free(&self) -> bool {
        self.parts.iter().all(|&p| p <= 1)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

impl std::str::FromStr for Composition {
    type Err = Error;

    /// Parses `(2,0,1)`; the parentheses are optional.
    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim();
        let body = body.strip_prefix('(').unwrap_or(body);
        let body = body.strip_suffix(')').unwrap_or(body);
        let parts = body
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|e| invalid(format!("bad composition entry {t:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Composition::new(parts)
    }
}

/// All compositions of `r` into `q` parts, lex-greatest first.
///
/// `(q, r) = (2, 2)` gives `[(2,0), (1,1), (0,2)]`.
pub fn enumerate_compositions(q: usize, r: u32) -> Result<Vec<Composition>> {
    if q == 0 {
        return Err(invalid("q must be at least 1"));
    }
    let mut out = Vec::new();
    let mut buf = vec![0u32; q];
    fill(&mut buf, 0, r, &mut out);
    Ok(out)
}

fn fill(buf: &mut [u32], pos: usize, remaining: u32, out: &mut Vec<Composition>) {
    if pos + 1 == buf.len() {
        buf[pos] = remaining;
        out.push(Composition {
            parts: buf.to_vec(),
        });
        return;
    }
    for first in (0..=remaining).rev() {
        buf[pos] = first;
        fill(buf, pos + 1, remaining - first, out);
    }
}

/// Lexicographic comparison: `a > b` iff the first differing entry is larger in `a`.
pub fn lex_compare(a: &Composition, b: &Composition) -> Result<Ordering> {
    if a.q() != b.q() || a.r() != b.r() {
        return Err(Error::Mismatch(format!(
            "cannot compare {a} (q={}, r={}) with {b} (q={}, r={})",
            a.q(),
            a.r(),
            b.q(),
            b.r()
        )));
    }
    Ok(a.parts.cmp(&b.parts))
}

/// A nonempty subset `A ⊆ [q]`, stored as a bit set (bit `i` is element `i+1`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubsetMask {
    bits: u32,
    q: u32,
}

impl SubsetMask {
    pub fn new(bits: u32, q: u32) -> Result<Self> {
        if q == 0 || q > MAX_SUBSET_Q {
            return Err(invalid(format!(
                "q must lie in 1..={MAX_SUBSET_Q}, got {q}"
            )));
        }
        if bits == 0 {
            return Err(invalid("subset must be nonempty"));
        }
        if bits >> q != 0 {
            return Err(invalid(format!("subset {bits:#b} is not inside [{q}]")));
        }
        Ok(Self { bits, q })
    }

    /// Builds a subset from one-based members.
    pub fn from_members(members: &[u32], q: u32) -> Result<Self> {
        let mut bits = 0u32;
        for &m in members {
            if m == 0 || m > q {
                return Err(invalid(format!("member {m} outside [{q}]")));
            }
            bits |= 1 << (m - 1);
        }
        Self::new(bits, q)
    }

    pub fn bits(self) -> u32 {
        self.bits
    }

    pub fn q(self) -> u32 {
        self.q
    }

    pub fn len(self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        false
    }

    pub fn contains(self, member: u32) -> bool {
        member >= 1 && member <= self.q && self.bits & (1 << (member - 1)) != 0
    }

    /// One-based members in increasing order.
    pub fn members(self) -> Vec<u32> {
        (0..self.q)
            .filter(|i| self.bits & (1 << i) != 0)
            .map(|i| i + 1)
            .collect()
    }

    /// Position in the canonical subset order, i.e. `bits - 1`.
    pub fn index(self) -> usize {
        self.bits as usize - 1
    }
}

impl fmt::Display for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let members = self.members();
        if self.q <= 9 {
            for m in members {
                write!(f, "{m}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = members.iter().map(u32::to_string).collect();
            write!(f, "{{{}}}", parts.join(","))
        }
    }
}

/// All `2^q - 1` nonempty subsets of `[q]`, ascending as binary integers.
pub fn enumerate_subsets(q: u32) -> Result<Vec<SubsetMask>> {
    if q == 0 || q > MAX_SUBSET_Q {
        return Err(invalid(format!(
            "q must lie in 1..={MAX_SUBSET_Q}, got {q}"
        )));
    }
    Ok((1..(1u32 << q))
        .map(|bits| SubsetMask { bits, q })
        .collect())
}

/// Exact binomial coefficient, `0` when `k > n`.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) / (i + 1) is integral; split it to stay inside u128.
        let (num, den) = ((n - i) as u128, (i + 1) as u128);
        acc = acc / den * num + acc % den * num / den;
    }
    acc
}
