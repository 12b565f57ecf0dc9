mod common;

use std::collections::HashMap;
use std::sync::Arc;

use extremal_core::complexes::{Face, Generators};
use extremal_core::morse::{
    build_edge_matching, build_small_q_matching_with, find_iota, verify_matching, FaceSet,
    MorseMatching, SmallQContext,
};
use proptest::prelude::*;

fn small_q_cases(max_gens: u128) -> Vec<(usize, u32)> {
    (2..=4usize)
        .flat_map(|q| (1..=20u32).map(move |r| (q, r)))
        .filter(|&(q, r)| common::count(q, r) <= max_gens)
        .collect()
}

#[test]
fn iota_is_stable_under_its_own_toggle() {
    for (q, r) in small_q_cases(20) {
        let gens = Arc::new(Generators::new(q, r).unwrap());
        let labels = common::labels_of(&gens);
        let scarf = common::scarf_faces(&labels);
        let ctx = SmallQContext::new(gens.clone()).unwrap();
        let n = gens.len();
        for mask in 1u128..(1 << n) {
            let f = Face::from_bits(mask);
            if scarf.contains(&f) {
                assert_eq!(ctx.nu(f), None, "({q},{r})");
                continue;
            }
            let c = ctx.iota(f).expect("non-Scarf faces have an iota");
            if n <= 10 {
                let standalone = find_iota(&gens.face_vertices(f)).unwrap();
                assert_eq!(gens.index_of(&standalone), Some(c));
            }
            let m = common::face_label(&labels, f);
            for g in [f.with(c), f.without(c)] {
                assert!(!scarf.contains(&g));
                assert_eq!(ctx.nu(g), ctx.nu(f));
                assert_eq!(ctx.iota(g), Some(c));
                assert_eq!(common::face_label(&labels, g), m);
            }
        }
    }
}

#[test]
fn small_q_matching_is_perfect_off_the_scarf_complex() {
    for (q, r) in small_q_cases(20) {
        let gens = Arc::new(Generators::new(q, r).unwrap());
        let ctx = SmallQContext::new(gens.clone()).unwrap();
        let m = build_small_q_matching_with(&ctx, 20).unwrap();
        let scarf = common::scarf_faces(&common::labels_of(&gens));
        let mut hits: HashMap<Face, u32> = HashMap::new();
        for &(s, t) in m.pairs() {
            *hits.entry(s).or_insert(0) += 1;
            *hits.entry(t).or_insert(0) += 1;
        }
        let n = gens.len();
        for mask in 1u128..(1 << n) {
            let f = Face::from_bits(mask);
            let want = if scarf.contains(&f) { 0 } else { 1 };
            assert_eq!(
                hits.get(&f).copied().unwrap_or(0),
                want,
                "({q},{r}) {}",
                gens.format_face(f)
            );
        }
    }
}

#[test]
fn small_q_matching_verifies_below_twelve_generators() {
    for (q, r) in small_q_cases(12) {
        let gens = Arc::new(Generators::new(q, r).unwrap());
        let ctx = SmallQContext::new(gens.clone()).unwrap();
        let m = build_small_q_matching_with(&ctx, 20).unwrap();
        let y = FaceSet::full_taylor(gens.clone(), 20).unwrap();
        let rep = verify_matching(&m, &y).unwrap();
        assert!(rep.is_morse(), "({q},{r})");
        assert_eq!(
            common::f_vector(rep.critical_cells.iter().copied()),
            common::f_vector(common::scarf_faces(&common::labels_of(&gens))),
        );
    }
}

#[test]
fn edge_matching_verifies_on_small_cases() {
    for (q, r) in [(2, 5), (3, 3), (4, 2), (5, 2), (6, 2), (3, 5)] {
        let gens = Arc::new(Generators::new(q, r).unwrap());
        let m = build_edge_matching(&gens).unwrap();
        let y = FaceSet::up_to_dim(gens.clone(), 2).unwrap();
        let rep = verify_matching(&m, &y).unwrap();
        assert!(rep.is_morse());
        let labels = common::labels_of(&gens);
        let crit_edges = rep.critical_cells.iter().filter(|f| f.len() == 2).count();
        let n = gens.len();
        let scarf = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| common::scarf_edge(&labels, i, j))
            .count();
        assert_eq!(crit_edges, scarf, "({q},{r})");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]
    /// Random single-vertex cones `σ ∪ {v} → σ` over a set not containing `v`
    /// verify as acyclic matchings on the face set they live in.
    #[test]
    fn cone_matchings_are_acyclic(v in 0usize..6, base in 1u32..63) {
        let gens = Arc::new(Generators::new(3, 2).unwrap());
        let base = Face::from_bits(u128::from(base) & !(1u128 << v));
        let faces: Vec<Face> = base.nonempty_subfaces().flat_map(|f| [f, f.with(v)]).chain([Face::singleton(v)]).collect();
        let mut faces = faces;
        faces.sort();
        faces.dedup();
        let y = FaceSet::from_faces(gens.clone(), faces).unwrap();
        let pairs: Vec<(Face, Face)> = base.nonempty_subfaces().map(|f| (f.with(v), f)).collect();
        let rep = verify_matching(&MorseMatching::new(pairs, "cone"), &y).unwrap();
        prop_assert!(rep.is_matching && rep.is_acyclic);
        prop_assert_eq!(rep.critical_cells, vec![Face::singleton(v)]);
    }
}

#[cfg(feature = "parallel")]
#[test]
fn single_threaded_runs_agree() {
    let gens = Arc::new(Generators::new(3, 4).unwrap());
    let ctx = SmallQContext::new(gens.clone()).unwrap();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .unwrap();
    let one = pool.install(|| build_small_q_matching_with(&ctx, 20).unwrap());
    let many = build_small_q_matching_with(&ctx, 20).unwrap();
    assert_eq!(one.pairs(), many.pairs());
    let y = FaceSet::full_taylor(gens.clone(), 20).unwrap();
    let a = pool.install(|| verify_matching(&one, &y).unwrap());
    let b = verify_matching(&many, &y).unwrap();
    assert_eq!(a, b);
}
