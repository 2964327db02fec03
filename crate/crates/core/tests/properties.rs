//! Randomized invariants, exercised with proptest over small ranks.

use proptest::prelude::*;
use shivar::*;

/// A permutation of rank `n`, built from a word in the simple reflections.
fn perm(n: usize) -> impl Strategy<Value = Permutation> {
    prop::collection::vec(1..=n, 0..12)
        .prop_map(move |word| Permutation::from_word(n, &word).unwrap())
}

/// An affine element of rank `n`, built as a product of the n+1 standard
/// generators.
fn affine(n: usize) -> impl Strategy<Value = AffineElement> {
    prop::collection::vec(0..=n, 0..16).prop_map(move |word| {
        let generators = affine_generators(n);
        word.iter().fold(AffineElement::identity(n), |acc, &g| {
            acc.compose(&generators[g]).unwrap()
        })
    })
}

/// A component label of rank `n`, drawn uniformly from the full list.
fn component(n: usize) -> impl Strategy<Value = AdmittedVector> {
    let all = enumerate_admitted(n);
    (0..all.len()).prop_map(move |k| all[k].clone())
}

/// An arbitrary integer vector indexed by the positive roots of rank `n`.
fn root_vector(n: usize) -> impl Strategy<Value = RootVector> {
    prop::collection::vec(-6i64..=6, num_positive_roots(n))
        .prop_map(move |entries| RootVector::from_entries(n, entries).unwrap())
}

fn rank() -> impl Strategy<Value = usize> {
    1usize..=4
}

proptest! {
    /// Every element of the affine Weyl group sits on the variety: its
    /// coefficient vector classifies onto an admitted component.
    #[test]
    fn random_alcoves_classify((_n, w) in rank().prop_flat_map(|n| (Just(n), affine(n)))) {
        let lambda = component_of(&k_vector(&w)).unwrap();
        prop_assert!(is_admitted(lambda.vector()));
    }

    /// The coefficient transport map is a homomorphism and commutes with
    /// taking coefficient vectors.
    #[test]
    fn transport_is_homomorphic(
        (_n, w, u) in rank().prop_flat_map(|n| (Just(n), affine(n), affine(n)))
    ) {
        let product = w.compose(&u).unwrap();
        prop_assert_eq!(f_affine(&product), f_affine(&w).compose(&f_affine(&u)));
        prop_assert_eq!(f_affine(&w).apply(&k_vector(&u)), k_vector(&product));
    }

    /// Transport maps have signed-permutation linear part.
    #[test]
    fn transport_is_signed_permutation(
        (_, w) in rank().prop_flat_map(|n| (Just(n), affine(n)))
    ) {
        prop_assert!(f_affine(&w).is_signed_permutation());
    }

    /// The identification between root-indexed vectors and wedge elements is
    /// a bijection.
    #[test]
    fn theta_round_trip((_, x) in rank().prop_flat_map(|n| (Just(n), root_vector(n)))) {
        prop_assert_eq!(theta_inv(&theta(&x)), x);
    }

    /// Each generator acts on wedge elements as an involution, even away from
    /// the basis.
    #[test]
    fn wedge_involution(
        (n, x, i) in rank().prop_flat_map(|n| (Just(n), root_vector(n), 1..=n))
    ) {
        prop_assert!(i <= n);
        let y = theta(&x);
        prop_assert_eq!(odot_word(&[i, i], &y), y);
    }

    /// The component action is a genuine group action.
    #[test]
    fn diamond_action_axiom(
        (n, u, v, lambda) in rank().prop_flat_map(|n| (Just(n), perm(n), perm(n), component(n)))
    ) {
        prop_assert!(n >= 1);
        let two_steps = diamond_general(&u, &diamond_general(&v, &lambda).unwrap()).unwrap();
        prop_assert_eq!(diamond_general(&u.compose(&v), &lambda).unwrap(), two_steps);
    }

    /// Closed form and matrix transport agree on every transposition.
    #[test]
    fn diamond_closed_equals_matrix(
        (n, lambda, k, l) in rank().prop_flat_map(|n| {
            (Just(n), component(n), 1..=n, 1..=n + 1)
        })
    ) {
        prop_assume!(k < l);
        let t = Permutation::transposition(n, k, l).unwrap();
        prop_assert_eq!(
            diamond_closed_form(k, l, &lambda).unwrap(),
            diamond_matrix(&t, &lambda).unwrap()
        );
    }

    /// Oriented coefficient sums flip sign when the endpoints swap.
    #[test]
    fn gamma_sum_is_antisymmetric(
        (_n, t, x, a, b) in rank().prop_flat_map(|n| {
            (Just(n), perm(n), root_vector(n), 1..=n + 1, 1..=n + 1)
        })
    ) {
        prop_assume!(a != b);
        prop_assert_eq!(gamma_sum(&t, &x, a, b), -gamma_sum(&t, &x, b, a));
    }

    /// Text round trips for permutations: one-line form and reduced words.
    #[test]
    fn permutation_round_trips((_, p) in rank().prop_flat_map(|n| (Just(n), perm(n)))) {
        prop_assert_eq!(Permutation::parse(&p.one_line()).unwrap(), p.clone());
        prop_assert_eq!(Permutation::from_word(p.rank(), &p.reduced_word()).unwrap(), p.clone());
        prop_assert_eq!(&p * &p.inverse(), Permutation::identity(p.rank()));
        let rebuilt = p
            .transposition_factors()
            .iter()
            .map(|&(k, l)| Permutation::transposition(p.rank(), k, l).unwrap())
            .fold(Permutation::identity(p.rank()), |acc, t| &acc * &t);
        prop_assert_eq!(rebuilt, p);
    }

    /// Conjugating the long cycle and classifying lands back where it
    /// started: the bijection round-trips in both directions.
    #[test]
    fn bijection_round_trip(
        (n, sigma) in rank().prop_flat_map(|n| (Just(n), perm(n)))
    ) {
        let cycle = &(&sigma * &Permutation::long_cycle(n)) * &sigma.inverse();
        let lambda = to_component(&cycle).unwrap();
        prop_assert_eq!(from_component(&lambda).unwrap(), cycle);
        prop_assert_eq!(to_component(&from_component(&lambda).unwrap()).unwrap(), lambda);
    }

    /// Component coordinates obey the box bound forced by the defining
    /// inequalities.
    #[test]
    fn component_box_bound(
        (_, lambda) in rank().prop_flat_map(|n| (Just(n), component(n)))
    ) {
        for root in positive_roots(lambda.rank()) {
            let value = lambda.get(&root);
            prop_assert!(0 <= value && value < root.height() as i64);
        }
    }

    /// Affine inverses compose to the identity on both sides.
    #[test]
    fn affine_inverse((n, w) in rank().prop_flat_map(|n| (Just(n), affine(n)))) {
        let id = AffineElement::identity(n);
        prop_assert_eq!(w.compose(&w.inverse()).unwrap(), id.clone());
        prop_assert_eq!(w.inverse().compose(&w).unwrap(), id);
    }
}

#[test]
fn root_index_matches_enumeration_order() {
    for n in 1..=8 {
        for (position, root) in positive_roots(n).iter().enumerate() {
            assert_eq!(root_index(n, root), position, "rank {n}, root {root}");
        }
    }
}
