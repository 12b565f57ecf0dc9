mod common;

use std::collections::HashSet;

use extremal_core::complexes::{Face, Generators};
use extremal_core::homology::{
    betti_multigraded_oracle, betti_total_oracle, reduced_homology_ranks, ChainComplex, Field,
    GeneralIdeal,
};
use proptest::prelude::*;

fn closure(facets: &[u32]) -> Vec<Face> {
    let mut all: HashSet<Face> = HashSet::new();
    for &f in facets {
        all.extend(Face::from_bits(u128::from(f)).nonempty_subfaces());
    }
    let mut v: Vec<Face> = all.into_iter().collect();
    v.sort();
    v
}

fn extremal(q: usize, r: u32) -> GeneralIdeal {
    GeneralIdeal::new(common::labels_of(&Generators::new(q, r).unwrap())).unwrap()
}

proptest! {
    #[test]
    fn boundary_squares_to_zero(facets in proptest::collection::vec(1u32..256, 1..6)) {
        let faces = closure(&facets);
        let cc = ChainComplex::from_faces(&faces, true);
        for size in 2..=cc.top_size() {
            let outer = cc.boundary_matrix(size);
            let inner = cc.boundary_matrix(size - 1);
            for col in &outer {
                let mut acc = vec![0i64; cc.basis(size - 2).len()];
                for &(row, s) in col {
                    for &(r2, t) in &inner[row] {
                        acc[r2] += i64::from(s) * i64::from(t);
                    }
                }
                prop_assert!(acc.iter().all(|&x| x == 0));
            }
        }
    }

    #[test]
    fn euler_characteristic_matches(facets in proptest::collection::vec(1u32..256, 1..6)) {
        let faces = closure(&facets);
        let chi: i64 = -1 + faces.iter().map(|f| if f.len() % 2 == 1 { 1 } else { -1 }).sum::<i64>();
        for field in [Field::Gf2, Field::Rational] {
            let h = reduced_homology_ranks(&faces, field).unwrap();
            let alt: i64 = (0..h.ranks().len()).map(|d| if d % 2 == 0 { h.rank(d as isize) as i64 } else { -(h.rank(d as isize) as i64) }).sum();
            prop_assert_eq!(alt, chi);
        }
    }
}

#[test]
fn fields_agree_on_extremal_powers() {
    for (q, r) in [(2, 2), (2, 5), (3, 2), (3, 3), (3, 4), (4, 2), (5, 2)] {
        let ideal = extremal(q, r);
        let a = betti_total_oracle(&ideal, None, Field::Gf2).unwrap();
        let b = betti_total_oracle(&ideal, None, Field::Rational).unwrap();
        assert_eq!(a, b, "({q},{r})");
    }
}

#[test]
fn multigraded_numbers_sum_to_totals() {
    let ideals = vec![
        extremal(3, 2),
        extremal(2, 4),
        GeneralIdeal::new(vec![
            vec![2, 1, 0],
            vec![0, 2, 1],
            vec![1, 0, 2],
            vec![1, 1, 1],
        ])
        .unwrap(),
        GeneralIdeal::new(vec![
            vec![1, 1, 0, 0],
            vec![0, 1, 1, 0],
            vec![0, 0, 1, 1],
            vec![1, 0, 0, 1],
        ])
        .unwrap(),
    ];
    for ideal in ideals {
        let table = betti_total_oracle(&ideal, None, Field::Gf2).unwrap();
        let mut sums = vec![0usize; table.total.len()];
        for ((i, m), &b) in &table.multigraded {
            assert_eq!(
                betti_multigraded_oracle(&ideal, *i, m, Field::Gf2).unwrap(),
                b
            );
            sums[*i] += b;
        }
        assert_eq!(sums, table.total);
    }
}

#[test]
fn first_betti_number_counts_scarf_edges() {
    for q in 1..=6usize {
        for r in 1..=6u32 {
            if common::count(q, r) > 20 {
                continue;
            }
            let gens = Generators::new(q, r).unwrap();
            let labels = common::labels_of(&gens);
            let n = labels.len();
            let edges = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .filter(|&(i, j)| common::scarf_edge(&labels, i, j))
                .count();
            let betti =
                betti_total_oracle(&GeneralIdeal::new(labels).unwrap(), Some(1), Field::Gf2)
                    .unwrap();
            assert_eq!(betti.get(1), edges, "({q},{r})");
        }
    }
}

#[test]
fn edge_labels_determine_the_far_vertex() {
    for q in 1..=4usize {
        for r in 1..=4u32 {
            let labels = common::labels_of(&Generators::new(q, r).unwrap());
            let n = labels.len();
            for a in 0..n {
                let mut seen = HashSet::new();
                for b in 0..n {
                    assert!(
                        seen.insert(common::join(&labels[a], &labels[b])),
                        "({q},{r})"
                    );
                }
            }
        }
    }
}
