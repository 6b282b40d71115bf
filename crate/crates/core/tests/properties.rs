use proptest::prelude::*;

use strange_core::lie::{centralizer_basis, jordan_nilpotent, AlgebraKind, Family};
use strange_core::partitions::{orbit_dim, partitions_of};
use strange_core::ratlin::{kernel_basis, rank, rat, solve, RatMatrix, Rational};
use strange_core::seaweed::{dk_index, meander, seaweed_basis, Composition, SeaweedSpec};

fn int_matrix(max: usize) -> impl Strategy<Value = RatMatrix> {
    (1..=max, 1..=max).prop_flat_map(|(r, c)| {
        prop::collection::vec(-4i64..=4, r * c)
            .prop_map(move |v| RatMatrix::from_entries(r, c, v.into_iter().map(rat).collect()).unwrap())
    })
}

fn composition(n: usize) -> impl Strategy<Value = Composition> {
    prop::collection::vec(any::<bool>(), n - 1).prop_map(move |cuts| {
        let set = cuts.iter().enumerate().filter(|(_, &c)| c).map(|(i, _)| i + 1).collect();
        Composition::from_cuts(n, &set).unwrap()
    })
}

fn seaweed(max_n: usize) -> impl Strategy<Value = SeaweedSpec> {
    (2..=max_n).prop_flat_map(|n| (composition(n), composition(n)))
        .prop_map(|(t, b)| SeaweedSpec::new(t, b).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_of_transpose(m in int_matrix(7)) {
        prop_assert_eq!(rank(&m), rank(&m.transpose()));
    }

    #[test]
    fn kernel_is_kernel(m in int_matrix(7)) {
        let k = kernel_basis(&m);
        prop_assert_eq!(k.dim() + rank(&m), m.cols());
        for v in k.basis() {
            let col = RatMatrix::column(v.clone());
            prop_assert!((&m * &col).is_zero());
        }
    }

    #[test]
    fn solve_recovers_column_space(m in int_matrix(6), seed in prop::collection::vec(-5i64..=5, 6)) {
        let v: Vec<Rational> = seed.into_iter().take(m.cols()).map(rat).chain(std::iter::repeat(rat(0))).take(m.cols()).collect();
        let b = &m * &RatMatrix::column(v);
        let x = solve(&m, b.entries()).unwrap().expect("b is in the column space");
        let bx = &m * &RatMatrix::column(x);
        prop_assert_eq!(bx, b);
    }

    #[test]
    fn seaweed_dimension_and_closure(spec in seaweed(6)) {
        let h = seaweed_basis(&spec, Family::Gl).unwrap();
        prop_assert_eq!(h.dim(), spec.dim_gl());
        prop_assert!(h.is_closed());
        let g = meander(&spec);
        prop_assert_eq!(g.components.len(), g.cycles + g.paths);
        prop_assert_eq!(dk_index(&spec, Family::Gl), dk_index(&spec, Family::Sl) + 1);
    }

    #[test]
    fn seaweed_index_is_symmetric(spec in seaweed(9)) {
        let swapped = SeaweedSpec::new(spec.bottom.clone(), spec.top.clone()).unwrap();
        let i = dk_index(&spec, Family::Sl);
        prop_assert_eq!(dk_index(&swapped, Family::Sl), i);
        prop_assert_eq!(dk_index(&spec.reversed(), Family::Sl), i);
    }

    #[test]
    fn centralizer_dimension(n in 2usize..=7, pick in any::<prop::sample::Index>()) {
        let all = partitions_of(n).unwrap();
        let p = &all[pick.index(all.len())];
        let c = centralizer_basis(&jordan_nilpotent(p), AlgebraKind::gl(n)).unwrap();
        prop_assert_eq!(c.dim() + orbit_dim(p), n * n);
        prop_assert!(c.is_closed());
    }
}
