//! Closed-form betti numbers and bounds, evaluated in exact `u128` arithmetic.

use crate::combinatorics::{binomial, Composition};
use crate::error::{invalid, Result};
use crate::extremal::e_gcd;

/// Largest `q` and `r` accepted by the formulas.
pub const MAX_FORMULA_PARAM: u32 = 64;

fn check(name: &str, v: u32) -> Result<()> {
    if v > MAX_FORMULA_PARAM {
        return Err(invalid(format!("{name} = {v} exceeds {MAX_FORMULA_PARAM}")));
    }
    Ok(())
}

/// `γ_i = C(r − i + q − 1, q − 1)`, zero once `i > r`.
pub fn gamma(i: u32, q: u32, r: u32) -> u128 {
    if i > r || q == 0 {
        return 0;
    }
    binomial(u64::from(r - i + q - 1), u64::from(q - 1))
}

/// One bound with the name of the expression that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundEntry {
    pub i: usize,
    pub value: u128,
    pub formula: &'static str,
}

/// Effective bounds on `β_i` for powers of ideals with `q ≤ 4` generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundTable {
    pub q: u32,
    pub r: u32,
    pub gamma: Vec<u128>,
    pub bounds: Vec<BoundEntry>,
    /// For `q = 2`, the pair `(r, r − 1)` in the form it was stated in print.
    pub as_published: Option<Vec<BoundEntry>>,
}

impl BoundTable {
    pub fn values(&self) -> Vec<u128> {
        self.bounds.iter().map(|b| b.value).collect()
    }
}

/// The bound table for `q ∈ {2, 3, 4}`; trailing zero entries are dropped.
pub fn bounds_small_q(q: u32, r: u32) -> Result<BoundTable> {
    check("q", q)?;
    check("r", r)?;
    if r == 0 {
        return Err(invalid("r must be at least 1"));
    }
    let g = |i| gamma(i, q, r);
    let (gammas, rows): (Vec<u128>, Vec<(u128, &'static str)>) = match q {
        2 => (vec![g(0), g(1)], vec![(g(0), "gamma0"), (g(1), "gamma1")]),
        3 => (
            vec![g(0), g(1), g(2)],
            vec![
                (g(0), "gamma0"),
                (3 * g(1), "3*gamma1"),
                (g(1) + g(2), "gamma1+gamma2"),
            ],
        ),
        4 => (
            vec![g(0), g(1), g(2), g(3)],
            vec![
                (g(0), "gamma0"),
                (6 * g(1) + 3 * g(2), "6*gamma1+3*gamma2"),
                (4 * g(1) + 16 * g(2), "4*gamma1+16*gamma2"),
                (g(1) + 15 * g(2) + g(3), "gamma1+15*gamma2+gamma3"),
                (6 * g(2), "6*gamma2"),
                (g(2), "gamma2"),
            ],
        ),
        _ => {
            return Err(invalid(format!(
                "bound tables exist for q in 2..=4, got {q}"
            )))
        }
    };
    let mut bounds: Vec<BoundEntry> = rows
        .into_iter()
        .enumerate()
        .map(|(i, (value, formula))| BoundEntry { i, value, formula })
        .collect();
    while bounds.last().is_some_and(|b| b.value == 0) {
        bounds.pop();
    }
    let as_published = (q == 2).then(|| {
        vec![
            BoundEntry {
                i: 0,
                value: u128::from(r),
                formula: "r",
            },
            BoundEntry {
                i: 1,
                value: u128::from(r - 1),
                formula: "r-1",
            },
        ]
    });
    Ok(BoundTable {
        q,
        r,
        gamma: gammas,
        bounds,
        as_published,
    })
}

/// `β_1(E_q^3)`.
pub fn betti1_r3(q: u32) -> Result<u128> {
    check("q", q)?;
    Ok(scarf_edge_census_r3_unchecked(q).iter().sum())
}

/// `β_i(E_q^2) = C(q(q−1)/2, i+1) + q·C(q−1, i)`.
pub fn betti_r2(q: u32, i: u32) -> Result<u128> {
    check("q", q)?;
    let q64 = u64::from(q);
    let pairs = q64 * q64.saturating_sub(1) / 2;
    Ok(binomial(pairs, u64::from(i) + 1)
        + u128::from(q) * binomial(q64.saturating_sub(1), u64::from(i)))
}

fn scarf_edge_census_r3_unchecked(q: u32) -> [u128; 4] {
    let q64 = u64::from(q);
    [
        binomial(q64 + 1, 2) * binomial(q64, 2),
        3 * u128::from(q) * binomial(q64, 4),
        10 * binomial(q64, 6),
        20 * binomial(q64, 5),
    ]
}

/// Counts of Scarf edges of `E_q^3` of each of the four types.
pub fn scarf_edge_census_r3(q: u32) -> Result<[u128; 4]> {
    check("q", q)?;
    if q < 2 {
        return Err(invalid("the edge census needs q >= 2"));
    }
    Ok(scarf_edge_census_r3_unchecked(q))
}

/// The type (1–4) of an edge of the Taylor complex of `E_q^3`, if any.
///
/// 1. `ε_u ε_v {ε_i, ε_j}`;
/// 2. `ε_u {ε_i ε_j, ε_k ε_l}` with `i, j, k, l` distinct;
/// 3. two square-free cubes on disjoint supports;
/// 4. a square-free cube and `ε_u² ε_v`, five distinct indices.
pub fn classify_r3_edge(a: &Composition, b: &Composition) -> Result<Option<u8>> {
    if a.q() != b.q() || a.r() != 3 || b.r() != 3 {
        return Err(invalid("classification needs two elements of N^3_q"));
    }
    if a == b {
        return Ok(None);
    }
    let d = e_gcd(&[a.clone(), b.clone()])?;
    let rest =
        |v: &Composition| -> Vec<u32> { v.parts().iter().zip(&d).map(|(x, y)| x - y).collect() };
    let (ra, rb) = (rest(a), rest(b));
    let sf = |v: &[u32]| v.iter().all(|&x| x <= 1);
    let shape = |v: &[u32]| {
        let mut s: Vec<u32> = v.iter().copied().filter(|&x| x > 0).collect();
        s.sort_unstable();
        s
    };
    let kind = match d.iter().sum::<u32>() {
        2 => Some(1),
        1 if sf(&ra) && sf(&rb) => Some(2),
        0 => {
            let (sa, sb) = (shape(&ra), shape(&rb));
            if sa == [1, 1, 1] && sb == [1, 1, 1] {
                Some(3)
            } else if (sa == [1, 1, 1] && sb == [1, 2]) || (sa == [1, 2] && sb == [1, 1, 1]) {
                Some(4)
            } else {
                None
            }
        }
        _ => None,
    };
    Ok(kind)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gamma_examples() {
        assert_eq!(gamma(0, 3, 4), 15);
        assert_eq!(gamma(1, 3, 4), 10);
        assert_eq!(gamma(2, 3, 4), 6);
        assert_eq!(gamma(5, 3, 4), 0);
        assert_eq!(gamma(4, 3, 4), 1);
    }

    #[test]
    fn small_q_tables() {
        assert_eq!(bounds_small_q(3, 4).unwrap().values(), vec![15, 30, 16]);
        assert_eq!(bounds_small_q(3, 2).unwrap().values(), vec![6, 9, 4]);
        let t4 = bounds_small_q(4, 2).unwrap().values();
        let r2: Vec<u128> = (0..t4.len() as u32)
            .map(|i| betti_r2(4, i).unwrap())
            .collect();
        assert_eq!(t4, r2);
        assert_eq!(bounds_small_q(4, 1).unwrap().values(), vec![4, 6, 4, 1]);
        let t2 = bounds_small_q(2, 5).unwrap();
        assert_eq!(t2.values(), vec![6, 5]);
        assert_eq!(
            t2.as_published
                .unwrap()
                .iter()
                .map(|b| b.value)
                .collect::<Vec<_>>(),
            vec![5, 4]
        );
        assert!(bounds_small_q(5, 2).is_err());
        assert!(bounds_small_q(3, 65).is_err());
    }

    #[test]
    fn first_betti_values() {
        let got: Vec<u128> = (4..=8).map(|q| betti1_r3(q).unwrap()).collect();
        assert_eq!(got, vec![72, 245, 715, 1813, 4088]);
    }

    #[test]
    fn census_examples() {
        assert_eq!(scarf_edge_census_r3(4).unwrap(), [60, 12, 0, 0]);
        assert_eq!(scarf_edge_census_r3(5).unwrap(), [150, 75, 0, 20]);
        assert_eq!(scarf_edge_census_r3(6).unwrap()[2], 10);
        assert!(scarf_edge_census_r3(1).is_err());
    }

    #[test]
    fn betti_r2_examples() {
        let got: Vec<u128> = (0..3).map(|i| betti_r2(3, i).unwrap()).collect();
        assert_eq!(got, vec![6, 9, 4]);
        assert_eq!(betti_r2(2, 0).unwrap(), 3);
        assert_eq!(betti_r2(4, 6).unwrap(), 0);
        assert_eq!(betti_r2(64, 0).unwrap(), binomial(2016, 1) + 64);
    }

    #[test]
    fn classifier_examples() {
        let c = |p: &[u32]| Composition::new(p.to_vec()).unwrap();
        assert_eq!(
            classify_r3_edge(&c(&[3, 0, 0, 0]), &c(&[2, 1, 0, 0])).unwrap(),
            Some(1)
        );
        assert_eq!(
            classify_r3_edge(&c(&[2, 1, 0, 0]), &c(&[1, 0, 1, 1])).unwrap(),
            Some(2)
        );
        assert_eq!(
            classify_r3_edge(&c(&[2, 1, 0, 0, 0]), &c(&[0, 0, 1, 1, 1])).unwrap(),
            Some(4)
        );
        assert_eq!(
            classify_r3_edge(&c(&[1, 1, 1, 0, 0, 0]), &c(&[0, 0, 0, 1, 1, 1])).unwrap(),
            Some(3)
        );
        assert_eq!(
            classify_r3_edge(&c(&[3, 0, 0]), &c(&[0, 3, 0])).unwrap(),
            None
        );
    }
}
