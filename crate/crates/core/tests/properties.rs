use proptest::prelude::*;
use raising_core::element::{Basis, RingElement};
use raising_core::hall_littlewood::{pieri_v_element, pieri_v_oracle};
use raising_core::hyperoctahedral::{
    count_reduced_words, grassmannian_element, is_k_grassmannian, partition_of, reduced_words, stanley_c,
    SignedPermutation,
};
use raising_core::partition::{grassmannian_index_set, IntegerVector, KStrict, Partition};
use raising_core::poly::{Poly, Vars};
use raising_core::theta::{theta, ThetaMode};
use raising_core::type_a::{giambelli_u, pieri_u, pieri_u_oracle, to_u_basis};
use raising_core::type_c::{multiply, normalize, pieri_w_element, pieri_w_oracle, w_of};

fn partition(max_len: usize, max_part: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=max_part, 0..=max_len).prop_map(Partition::from_unsorted)
}

fn k_strict(max_k: usize, max_len: usize, max_part: usize) -> impl Strategy<Value = KStrict> {
    (0..=max_k, prop::collection::vec(1..=max_part, 0..=max_len)).prop_map(|(k, mut parts)| {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        parts.dedup_by(|a, b| a == b && *a > k);
        KStrict::new(k, Partition::new(parts).unwrap()).unwrap()
    })
}

fn signed_permutation(max_n: usize) -> impl Strategy<Value = SignedPermutation> {
    (1..=max_n)
        .prop_flat_map(|n| (Just(n), Just((1..=n as i64).collect::<Vec<_>>()).prop_shuffle(), prop::collection::vec(any::<bool>(), n)))
        .prop_map(|(_, perm, signs)| {
            let w = perm.into_iter().zip(signs).map(|(x, s)| if s { -x } else { x }).collect();
            SignedPermutation::new(w).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn group_laws(a in signed_permutation(5), b in signed_permutation(5), c in signed_permutation(5)) {
        prop_assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
        prop_assert!(a.compose(&a.inverse()).is_identity());
        prop_assert_eq!(a.inverse().length(), a.length());
        let word = a.greedy_word();
        prop_assert_eq!(word.len(), a.length());
        prop_assert_eq!(SignedPermutation::from_word(&word, a.n()), a);
    }

    #[test]
    fn reduced_word_count_matches_list(w in signed_permutation(3)) {
        prop_assert_eq!(count_reduced_words(&w), reduced_words(&w).len().into());
    }

    #[test]
    fn grassmannian_round_trip(k in 0usize..=3, n in 1usize..=5, pick in any::<prop::sample::Index>()) {
        prop_assume!(k <= n);
        let set = grassmannian_index_set(k, n);
        let lam = KStrict::new(k, set[pick.index(set.len())].clone()).unwrap();
        let w = grassmannian_element(&lam, n).unwrap();
        prop_assert!(is_k_grassmannian(&w, k));
        prop_assert_eq!(w.length(), lam.partition().size());
        prop_assert_eq!(partition_of(&w, k).unwrap(), lam);
    }

    #[test]
    fn stanley_is_symmetric_and_stable(w in signed_permutation(3)) {
        let f2 = stanley_c(&w, 2);
        let f3 = stanley_c(&w, 3);
        prop_assert!(f3.is_symmetric_in_x());
        let mut restricted = Poly::zero(Vars::xs(2));
        for (e, c) in f3.terms() {
            if e[2] == 0 {
                restricted.add_term(e[..2].to_vec(), c.clone());
            }
        }
        prop_assert_eq!(restricted, f2);
    }

    #[test]
    fn schur_basis_round_trip(lam in partition(4, 4)) {
        let u = giambelli_u(&IntegerVector::from(&lam));
        prop_assert_eq!(to_u_basis(&u).unwrap(), RingElement::monomial(Basis::U, None, lam));
    }

    #[test]
    fn type_a_pieri(lam in partition(4, 4), p in 1usize..=4) {
        let mut rule = RingElement::zero(Basis::U, None);
        for mu in pieri_u(p, &lam) {
            rule.add_int_term(mu, 1);
        }
        prop_assert_eq!(rule, pieri_u_oracle(p, &lam).unwrap());
    }

    #[test]
    fn hall_littlewood_pieri(lam in partition(3, 3), p in 1usize..=3) {
        prop_assert_eq!(pieri_v_element(p, &lam), pieri_v_oracle(p, &lam).unwrap());
    }

    #[test]
    fn type_c_pieri(lam in k_strict(3, 3, 4), p in 1usize..=4) {
        prop_assert_eq!(pieri_w_element(p, &lam), pieri_w_oracle(p, &lam).unwrap());
    }

    #[test]
    fn straightening_is_a_normal_form(a in k_strict(2, 3, 4), b in k_strict(2, 3, 4)) {
        let k = a.k();
        let b = KStrict::new(k, b.partition().clone());
        prop_assume!(b.is_ok());
        let (wa, wb) = (w_of(&a), w_of(&b.unwrap()));
        prop_assert_eq!(normalize(&wa, k), wa.clone());
        prop_assert_eq!(multiply(&wa, &wb, k), multiply(&wb, &wa, k));
    }

    #[test]
    fn theta_modes_agree(lam in k_strict(2, 3, 3), m in 0usize..=2) {
        let r = theta(&lam, m, ThetaMode::Raising);
        prop_assert_eq!(theta(&lam, m, ThetaMode::Tableau), r.clone());
        prop_assert_eq!(theta(&lam, m, ThetaMode::Reduction), r);
    }
}
