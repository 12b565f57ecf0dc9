use std::cmp::Ordering;
use std::collections::HashSet;

use extremal_core::combinatorics::{binomial, enumerate_compositions, lex_compare, Composition};
use proptest::prelude::*;

#[test]
fn composition_counts() {
    for q in 1..=8usize {
        for r in 0..=8u32 {
            let all = enumerate_compositions(q, r).unwrap();
            let want = binomial(u64::from(r) + q as u64 - 1, q as u64 - 1);
            assert_eq!(all.len() as u128, want, "q={q} r={r}");
            let distinct: HashSet<&Composition> = all.iter().collect();
            assert_eq!(distinct.len(), all.len());
            assert!(all.iter().all(|c| c.q() == q && c.r() == r));
        }
    }
}

#[test]
fn enumeration_is_strictly_decreasing() {
    for q in 1..=5usize {
        for r in 0..=5u32 {
            let all = enumerate_compositions(q, r).unwrap();
            for w in all.windows(2) {
                assert_eq!(lex_compare(&w[0], &w[1]).unwrap(), Ordering::Greater);
            }
        }
    }
}

fn pick3() -> impl Strategy<Value = (Vec<Composition>, usize, usize, usize)> {
    (1usize..=5, 0u32..=5).prop_flat_map(|(q, r)| {
        let all = enumerate_compositions(q, r).unwrap();
        let n = all.len();
        (Just(all), 0..n, 0..n, 0..n)
    })
}

proptest! {
    #[test]
    fn lex_is_a_strict_total_order((all, i, j, k) in pick3()) {
        let (a, b, c) = (&all[i], &all[j], &all[k]);
        let ab = lex_compare(a, b).unwrap();
        prop_assert_eq!(ab, lex_compare(b, a).unwrap().reverse());
        prop_assert_eq!(ab == Ordering::Equal, i == j);
        if ab == Ordering::Greater && lex_compare(b, c).unwrap() == Ordering::Greater {
            prop_assert_eq!(lex_compare(a, c).unwrap(), Ordering::Greater);
        }
    }
}

#[test]
fn mismatched_shapes_are_rejected() {
    let a = Composition::new(vec![1, 0]).unwrap();
    let b = Composition::new(vec![1, 0, 0]).unwrap();
    let c = Composition::new(vec![2, 0]).unwrap();
    assert!(lex_compare(&a, &b).is_err());
    assert!(lex_compare(&a, &c).is_err());
}
