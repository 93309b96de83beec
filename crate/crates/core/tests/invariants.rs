use proptest::prelude::*;

use quasimat::activities::{h_from_activities, internally_passive};
use quasimat::axioms::{check_qe, is_matroid};
use quasimat::generate::{random_gale_ideal, random_gf_matroid, random_shifted_complex, rng};
use quasimat::multicomplex::Assignment;
use quasimat::posets::{gale_poset, gale_truncate, is_order_ideal};
use quasimat::shifted::{
    monomial_bouncing_light, monomial_inductive, multicomplex_of_shifted, Partition,
};
use quasimat::tutte::{tutte_activities, tutte_deletion_contraction};
use quasimat::{OrderedComplex, Shuffle, VertexSet};

/// A pure complex on `1..=n`: a non-empty selection of the `d`-subsets.
fn pure_complex(max_n: usize) -> impl Strategy<Value = OrderedComplex> {
    pure_complex_of_rank_at_least(1, max_n)
}

fn pure_complex_of_rank_at_least(
    min_rank: usize,
    max_n: usize,
) -> impl Strategy<Value = OrderedComplex> {
    (min_rank..=max_n)
        .prop_flat_map(move |n| (Just(n), min_rank..=n))
        .prop_flat_map(|(n, d)| {
            let all: Vec<VertexSet> = VertexSet::full(n).subsets_of_size(d).collect();
            let k = all.len();
            (Just(n), proptest::sample::subsequence(all, 1..=k))
        })
        .prop_map(|(n, facets)| OrderedComplex::new(n, facets).unwrap())
}

fn seed() -> impl Strategy<Value = u64> {
    any::<u64>()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn relabel_round_trip(c in pure_complex(6), perm in Just((1..=6).collect::<Vec<usize>>()).prop_shuffle()) {
        let perm: Vec<usize> = perm.into_iter().filter(|&p| p <= c.n()).collect();
        let mut inverse = vec![0; perm.len()];
        for (i, &p) in perm.iter().enumerate() {
            inverse[p - 1] = i + 1;
        }
        let back = c.relabel(&perm).unwrap().relabel(&inverse).unwrap();
        prop_assert_eq!(back, c);
    }

    #[test]
    fn h_vector_sums_to_basis_count(c in pure_complex(6)) {
        prop_assert_eq!(c.h_polynomial().eval(1), c.num_bases() as i64);
    }

    #[test]
    fn restriction_keeps_circuits_inside(c in pure_complex(6), mask in any::<u64>()) {
        let a = VertexSet::full(c.n()).intersection(VertexSet::from_bits(mask));
        let r = c.restrict_labeled(a).unwrap();
        let inside = |cs: Vec<VertexSet>| -> Vec<VertexSet> { cs.into_iter().filter(|k| k.is_subset(a)).collect() };
        // Elements outside `a` stay behind as loops, so only circuits inside `a` are comparable.
        prop_assert_eq!(inside(r.circuits()), inside(c.circuits()));
        let outside: Vec<VertexSet> = VertexSet::full(c.n()).difference(a).iter().map(VertexSet::singleton).collect();
        prop_assert!(outside.iter().all(|l| r.circuits().contains(l)));
    }

    #[test]
    fn contraction_commutes(c in pure_complex_of_rank_at_least(2, 6), pick in any::<(prop::sample::Index, prop::sample::Index, prop::sample::Index)>()) {
        let facet = c.facets()[pick.0.index(c.num_bases())].to_vec();
        let (i, j) = (pick.1.index(facet.len()), pick.2.index(facet.len() - 1));
        let j = if j >= i { j + 1 } else { j };
        let (u, v) = (facet[i.min(j)], facet[i.max(j)]);
        let one = c.contract_set(VertexSet::from_slice(&[u, v])).unwrap();
        // After contracting u, element v moves down by one.
        let two = c.contract_vertex(u).unwrap().contract_vertex(v - 1).unwrap();
        prop_assert_eq!(one, two);
    }

    #[test]
    fn join_multiplies_bases(a in pure_complex(4), b in pure_complex(4), interleave in any::<bool>()) {
        let shuffle = if interleave {
            Shuffle::interleave(a.n(), b.n())
        } else {
            Shuffle::concatenate(a.n(), b.n())
        };
        let j = a.join(&b, &shuffle).unwrap();
        prop_assert_eq!(j.num_bases(), a.num_bases() * b.num_bases());
        prop_assert_eq!(j.rank(), a.rank() + b.rank());
        prop_assert_eq!(j.h_polynomial(), &a.h_polynomial() * &b.h_polynomial());
    }

    #[test]
    fn skeleton_truncates_f_vector(c in pure_complex(6), k in any::<prop::sample::Index>()) {
        let k = k.index(c.rank() + 1);
        let s = c.skeleton(k).unwrap();
        prop_assert_eq!(s.rank(), k);
        prop_assert_eq!(s.f_vector(), c.f_vector()[..=k].to_vec());
    }

    #[test]
    fn qe_activities_give_h(c in pure_complex(6)) {
        prop_assume!(check_qe(&c).holds);
        prop_assert_eq!(h_from_activities(&c), c.h_polynomial());
    }

    #[test]
    fn gale_truncation_keeps_the_ideal(s in seed()) {
        let mut r = rng(s);
        let c = random_shifted_complex(&mut r, 9).unwrap();
        let ideal = random_gale_ideal(&mut r, &c, 3);
        prop_assert!(is_order_ideal(&gale_poset(&c).unwrap(), &ideal));
        let t = gale_truncate(&c, &ideal).unwrap();
        prop_assert_eq!(t.bases(), &ideal[..]);
        prop_assert!(check_qe(&t).holds);
        for &b in &ideal {
            prop_assert_eq!(internally_passive(&t, b), internally_passive(&c, b));
        }
    }

    #[test]
    fn matroid_tutte_counts_bases(s in seed()) {
        let mut r = rng(s);
        let m = random_gf_matroid(&mut r, 2, 3, 7).unwrap();
        prop_assert!(is_matroid(&m).holds);
        let t = tutte_activities(&m);
        prop_assert_eq!(t.eval(&1i64, &1i64), m.num_bases() as i64);
        prop_assert_eq!(t, tutte_deletion_contraction(&m));
    }

    #[test]
    fn monomial_constructions_agree(parts in proptest::collection::vec(0usize..=10, 0..=10)) {
        let mut parts = parts;
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let p = Partition::new(parts, 10, 10).unwrap();
        let m = monomial_inductive(&p);
        prop_assert_eq!(m.degree(), p.length());
        prop_assert_eq!(m.support().len(), p.durfee());
        prop_assert_eq!(m, monomial_bouncing_light(&p));
    }

    #[test]
    fn compress_expand_round_trip(bits in any::<u64>(), within in any::<u64>()) {
        let within = VertexSet::from_bits(within);
        let s = VertexSet::from_bits(bits).intersection(within);
        prop_assert_eq!(s.compress(within).expand(within), s);
    }

    #[test]
    fn assignment_json_round_trip(s in seed()) {
        let c = random_shifted_complex(&mut rng(s), 10).unwrap();
        let a = multicomplex_of_shifted(&c).unwrap();
        let text = serde_json::to_string(&a).unwrap();
        let back: Assignment = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn complex_json_round_trip(c in pure_complex(7)) {
        prop_assert_eq!(OrderedComplex::from_json(&c.to_json()).unwrap(), c);
    }
}
