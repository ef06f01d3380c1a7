use invsemi::algebra::Decomposition;
use invsemi::conjugacy::{s_conjugacy_bruteforce, ConjugacyAnalysis};
use invsemi::semigroup::normalize_labels;
use invsemi::{fixtures, GreenStructure, PartialPerm};
use proptest::prelude::*;

fn partial_perm(degree: usize) -> impl Strategy<Value = PartialPerm> {
    (
        Just(degree),
        Just((0..degree as u32).collect::<Vec<_>>()).prop_shuffle(),
        proptest::collection::vec(any::<bool>(), degree),
    )
        .prop_map(|(d, targets, keep)| {
            let images = (0..d).map(|i| keep[i].then_some(targets[i])).collect();
            PartialPerm::new(images).unwrap()
        })
}

fn pair(degree: usize) -> impl Strategy<Value = (PartialPerm, PartialPerm)> {
    (partial_perm(degree), partial_perm(degree))
}

fn rook_product(a: &[Vec<u8>], b: &[Vec<u8>]) -> Vec<Vec<u8>> {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum())
                .collect()
        })
        .collect()
}

proptest! {
    #[test]
    fn inverse_laws(a in partial_perm(6)) {
        let inv = a.inverse();
        prop_assert_eq!(a.compose(&inv).unwrap().compose(&a).unwrap(), a.clone());
        prop_assert_eq!(inv.compose(&a).unwrap().compose(&inv).unwrap(), inv.clone());
        prop_assert_eq!(inv.inverse(), a.clone());
        prop_assert!(a.domain_of().is_idempotent());
        prop_assert_eq!(a.compose(&a.domain_of()).unwrap(), a.clone());
        prop_assert_eq!(a.range_of().compose(&a).unwrap(), a);
    }

    #[test]
    fn composition_is_associative((a, b) in pair(5), c in partial_perm(5)) {
        let left = a.compose(&b).unwrap().compose(&c).unwrap();
        let right = a.compose(&b.compose(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn rook_matrices_are_multiplicative((a, b) in pair(5)) {
        let ab = a.compose(&b).unwrap();
        prop_assert_eq!(ab.to_rook_matrix(), rook_product(&a.to_rook_matrix(), &b.to_rook_matrix()));
    }

    #[test]
    fn idempotents_commute((a, b) in pair(5)) {
        let (e, f) = (a.domain_of(), b.range_of());
        prop_assert_eq!(e.compose(&f).unwrap(), f.compose(&e).unwrap());
    }

    #[test]
    fn natural_order_is_restriction((a, b) in pair(4)) {
        let restricts = a.images().iter().zip(b.images()).all(|(&x, &y)| x == u32::MAX || x == y);
        prop_assert_eq!(a.natural_leq(&b).unwrap(), restricts);
    }

    #[test]
    fn literal_round_trip(a in partial_perm(6)) {
        let json = serde_json::to_string(&a).unwrap();
        let back: PartialPerm = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back, a);
    }
}

#[test]
fn rook_down_sets_are_boolean() {
    let table = fixtures::rook(4).table().unwrap();
    for a in table.ids() {
        assert_eq!(table.down_set(a).len(), 1 << table.rank(a));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn random_fixture_structure(degree in 2usize..=4, gens in 1usize..=3, seed in any::<u64>()) {
        let table = fixtures::random(degree, gens, seed).table().unwrap();
        prop_assert!(table.check_inverse().is_inverse());
        let green = GreenStructure::new(&table).unwrap();
        prop_assert_eq!(
            normalize_labels(green.d_labels()),
            normalize_labels(&table.d_labels_by_ideals())
        );
        let decomposition = Decomposition::new(&table, &green).unwrap();
        prop_assert_eq!(decomposition.total_dimension(), table.len());
        prop_assert_eq!(decomposition.direct_sum_rank(), table.len());
        if table.len() <= 80 {
            prop_assert!(decomposition.homomorphism_failure().is_none());
        }
    }

    #[test]
    fn random_fixture_conjugacy(degree in 2usize..=4, gens in 1usize..=3, seed in any::<u64>()) {
        let table = fixtures::random(degree, gens, seed).table().unwrap();
        let green = GreenStructure::new(&table).unwrap();
        let analysis = ConjugacyAnalysis::new(&table, &green);
        prop_assert!(analysis.structural.same_partition(&s_conjugacy_bruteforce(&table)));
        for check in analysis.invariants() {
            prop_assert!(check.passed, "{}: {}", check.name, check.detail);
        }
    }
}
