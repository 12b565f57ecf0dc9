mod common;

use std::collections::HashSet;

use extremal_core::combinatorics::{enumerate_compositions, Composition};
use extremal_core::extremal::{divides_label, face_label, generator_exponent, vector_exponent};
use proptest::prelude::*;

fn comps(q: usize, r: u32) -> Vec<Composition> {
    enumerate_compositions(q, r).unwrap()
}

#[test]
fn labels_match_the_subset_sum_formula() {
    for q in 1..=5usize {
        for r in 0..=4u32 {
            for a in comps(q, r) {
                assert_eq!(
                    generator_exponent(&a).unwrap().exps(),
                    common::label(a.parts()).as_slice()
                );
            }
        }
    }
}

#[test]
fn vertex_labels_are_injective() {
    for q in 1..=5usize {
        for r in 1..=4u32 {
            let all = comps(q, r);
            let labels: HashSet<Vec<u32>> = all
                .iter()
                .map(|a| generator_exponent(a).unwrap().exps().to_vec())
                .collect();
            assert_eq!(labels.len(), all.len(), "q={q} r={r}");
        }
    }
}

fn shift(a: &[u32], plus: &[usize], minus: &[usize]) -> Vec<u32> {
    let mut v = a.to_vec();
    for &i in plus {
        v[i] += 1;
    }
    for &i in minus {
        v[i] -= 1;
    }
    v
}

#[test]
fn single_support_swaps_divide_the_lcm() {
    for q in 1..=5usize {
        for r in 1..=4u32 {
            for a1 in comps(q, r) {
                for a2 in comps(q, r) {
                    let (s1, s2) = (a1.support(), a2.support());
                    if s1.len() != 1 && s2.len() != 1 {
                        continue;
                    }
                    let m = face_label(&[a1.clone(), a2.clone()]).unwrap();
                    for &u in &s1 {
                        for &k in &s2 {
                            let b = Composition::new(shift(a1.parts(), &[k], &[u])).unwrap();
                            assert!(divides_label(&b, &m), "{a1} {a2} u={u} k={k}");
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn two_support_swaps_divide_the_lcm() {
    for q in 2..=5usize {
        for r in 2..=5u32 {
            for a1 in comps(q, r) {
                for a2 in comps(q, r) {
                    let (s1, s2) = (a1.support(), a2.support());
                    if s1.len() != 2 || s2.len() != 2 {
                        continue;
                    }
                    let m = face_label(&[a1.clone(), a2.clone()]).unwrap();
                    let b = Composition::new(shift(a1.parts(), &s2, &s1)).unwrap();
                    assert!(divides_label(&b, &m), "{a1} {a2}");
                }
            }
        }
    }
}

fn face_strategy() -> impl Strategy<Value = (usize, u32, Vec<Vec<u32>>, Vec<u32>)> {
    (1usize..=6, 1u32..=6).prop_flat_map(|(q, r)| {
        let comp = move || {
            proptest::collection::vec(0..q, r as usize).prop_map(move |idx| {
                let mut v = vec![0u32; q];
                for i in idx {
                    v[i] += 1;
                }
                v
            })
        };
        (
            Just(q),
            Just(r),
            proptest::collection::vec(comp(), 1..=4),
            comp(),
        )
    })
}

proptest! {
    #[test]
    fn divisors_of_a_face_label_are_sandwiched((q, _r, face, b) in face_strategy()) {
        let face: Vec<Composition> = face.into_iter().map(|v| Composition::new(v).unwrap()).collect();
        let b = Composition::new(b).unwrap();
        let m = face_label(&face).unwrap();
        if divides_label(&b, &m) {
            for j in 0..q {
                let lo = face.iter().map(|a| a.parts()[j]).min().unwrap();
                let hi = face.iter().map(|a| a.parts()[j]).max().unwrap();
                prop_assert!(lo <= b.parts()[j] && b.parts()[j] <= hi);
            }
        }
        // Divisibility agrees with the subset-sum reference.
        let reference = face.iter().map(|a| common::label(a.parts())).reduce(|x, y| common::join(&x, &y)).unwrap();
        prop_assert_eq!(divides_label(&b, &m), common::le(&common::label(b.parts()), &reference));
    }

    #[test]
    fn face_label_is_monotone((_q, _r, face, _b) in face_strategy(), drop in 0usize..4) {
        let face: Vec<Composition> = face.into_iter().map(|v| Composition::new(v).unwrap()).collect();
        let full = face_label(&face).unwrap();
        if face.len() > 1 {
            let mut sub = face.clone();
            sub.remove(drop % face.len());
            let part = face_label(&sub).unwrap();
            prop_assert!(part.divides(&full));
        }
    }

    #[test]
    fn vector_exponent_agrees_with_generators(v in proptest::collection::vec(0u32..4, 1..=6)) {
        let a = Composition::new(v.clone()).unwrap();
        prop_assert_eq!(vector_exponent(&v).unwrap(), generator_exponent(&a).unwrap());
    }
}
