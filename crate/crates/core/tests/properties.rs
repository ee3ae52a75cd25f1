use std::collections::BTreeSet;

use gparking::random;
use gparking::skeleton::{matrix_ideal, one_skeleton, skeleton_ideal};
use gparking::verify::check_equality;
use gparking::{GnMatrix, Monomial, MonomialIdeal, Multigraph};
use num_bigint::BigInt;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn graph() -> impl Strategy<Value = Multigraph> {
    (1usize..=5, proptest::collection::vec(0u64..3, 21)).prop_map(|(n, mults)| {
        let mut g = Multigraph::empty(n).unwrap();
        let mut k = 0;
        for u in 0..=n {
            for v in (u + 1)..=n {
                g.add_edges(u, v, mults[k]).unwrap();
                k += 1;
            }
        }
        g
    })
}

fn monomials(nvars: usize) -> impl Strategy<Value = Vec<Monomial>> {
    proptest::collection::vec(proptest::collection::vec(0u32..5, nvars), 1..8)
        .prop_map(|v| v.into_iter().map(Monomial::new).collect())
}

fn artinian() -> impl Strategy<Value = MonomialIdeal> {
    any::<u64>().prop_map(|seed| random::artinian_ideal(&mut ChaCha8Rng::seed_from_u64(seed), 4, 5))
}

proptest! {
    #[test]
    fn minimalize_is_idempotent_and_order_free(gens in monomials(3)) {
        let i = MonomialIdeal::minimalize(3, gens.clone()).unwrap();
        let again = MonomialIdeal::minimalize(3, i.generators().to_vec()).unwrap();
        prop_assert_eq!(&again, &i);
        let mut rev = gens.clone();
        rev.reverse();
        prop_assert_eq!(MonomialIdeal::minimalize(3, rev).unwrap(), i.clone());
        for g in &gens {
            prop_assert!(i.contains(g).unwrap());
        }
    }

    #[test]
    fn standard_monomials_are_exactly_the_non_members(i in artinian()) {
        let std: BTreeSet<Vec<u32>> =
            i.std_enumerate().unwrap().iter().map(|m| m.exponents().to_vec()).collect();
        let bounds: Vec<u32> = i.pure_power_bounds().into_iter().map(|b| b.unwrap_or(0)).collect();
        let mut e = vec![0u32; i.nvars()];
        loop {
            let m = Monomial::new(e.clone());
            prop_assert_eq!(i.contains(&m).unwrap(), !std.contains(&e));
            let Some(k) = (0..e.len()).find(|&k| e[k] + 1 < bounds[k]) else { break };
            e[k] += 1;
            e[..k].iter_mut().for_each(|x| *x = 0);
        }
        prop_assert_eq!(i.std_count_recursive().unwrap(), std.len().into());
    }

    #[test]
    fn short_exact_sequence(i in artinian(), var in 0usize..4, r in 1u32..6) {
        let var = var % i.nvars().max(1);
        prop_assume!(i.nvars() > 0);
        let whole = i.std_count_recursive().unwrap();
        let colon = i.colon_pure_power(var, r).unwrap().std_count_recursive().unwrap();
        let sum = i.add_pure_power(var, r).unwrap().std_count_recursive().unwrap();
        prop_assert_eq!(whole, colon + sum);
    }

    #[test]
    fn signless_laplacian_ideal_is_the_one_skeleton(g in graph()) {
        let q = GnMatrix::new(g.signless_laplacian_truncated()).unwrap();
        prop_assert_eq!(matrix_ideal(&q), one_skeleton(&g).unwrap());
        prop_assert!(q.matrix().is_positive_semidefinite().unwrap());
        prop_assert!(q.determinant() >= BigInt::from(0));
        prop_assert!(g.laplacian_truncated().determinant() >= BigInt::from(0));
    }

    #[test]
    fn skeleton_chain_is_increasing(g in graph()) {
        let n = g.n();
        let chain: Vec<MonomialIdeal> = (0..n).map(|k| skeleton_ideal(&g, k).unwrap()).collect();
        for w in chain.windows(2) {
            for gen in w[0].generators() {
                prop_assert!(w[1].contains(gen).unwrap());
            }
        }
        let counts: Vec<_> = chain.iter().map(|i| i.std_count_recursive().unwrap()).collect();
        prop_assert!(counts.windows(2).all(|w| w[0] >= w[1]));
    }

    #[test]
    fn one_skeleton_dominates_det(g in graph()) {
        let v = check_equality(&g).unwrap();
        prop_assert!(BigInt::from(v.std_count.clone()) >= v.det_q);
        prop_assert!(v.is_multiplicative());
    }

    #[test]
    fn essential_components_partition(g in graph()) {
        let mut seen: Vec<usize> = g.essential_components().into_iter().flat_map(|c| c.labels).collect();
        seen.sort_unstable();
        prop_assert_eq!(seen, (1..=g.n()).collect::<Vec<_>>());
    }

    #[test]
    fn product_edge_counts(g in graph(), h in graph(), d in 0u64..3) {
        let p = g.d_fold_product(&h, d);
        prop_assert_eq!(p.n(), g.n() + h.n());
        let cross = d * (g.n() * h.n()) as u64;
        prop_assert_eq!(p.edge_count(), g.edge_count() + h.edge_count() + cross);
    }

    #[test]
    fn d_s_shrinks_as_s_grows(g in graph(), mask in 0u32..32, extra in 1usize..6) {
        let n = g.n();
        let s: Vec<usize> = (1..=n).filter(|i| mask >> (i - 1) & 1 == 1).collect();
        prop_assume!(!s.is_empty());
        let extra = (extra - 1) % n + 1;
        let mut t = s.clone();
        if !t.contains(&extra) {
            t.push(extra);
            t.sort_unstable();
        }
        for &i in &s {
            prop_assert!(g.d_s(&t, i).unwrap() <= g.d_s(&s, i).unwrap());
        }
        prop_assert_eq!(g.d_s(&[s[0]], s[0]).unwrap(), g.degree(s[0]).unwrap());
    }
}
