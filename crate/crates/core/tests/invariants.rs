use num_bigint::BigUint;
use proptest::prelude::*;
use sylvester_core::circulator::{prime_circulator, Circulator};
use sylvester_core::numeric::{ratio, series_mul};
use sylvester_core::oracle::{count_partitions_dp, partition_table};
use sylvester_core::partition::SylvesterExpansion;
use sylvester_core::waves::{weights_recursive, weights_well_formed};
use sylvester_core::{
    split_generators, weights_bruteforce, GeneratorSet, Rational, RationalPolynomial,
    TruncatedSeries,
};

fn rat() -> impl Strategy<Value = Rational> {
    (-40i64..40, 1i64..9).prop_map(|(n, d)| ratio(n, d))
}

fn poly() -> impl Strategy<Value = RationalPolynomial> {
    prop::collection::vec(rat(), 0..6).prop_map(RationalPolynomial::new)
}

fn series(order: usize) -> impl Strategy<Value = TruncatedSeries> {
    prop::collection::vec(rat(), order + 1).prop_map(move |c| TruncatedSeries::new(c, order))
}

fn generators(max_m: usize, max_d: u64) -> impl Strategy<Value = GeneratorSet> {
    prop::collection::vec(1..=max_d, 1..=max_m).prop_map(|p| GeneratorSet::new(p).unwrap())
}

proptest! {
    #[test]
    fn shift_then_eval(p in poly(), a in rat(), x in rat()) {
        prop_assert_eq!(p.shift(&a).eval(&x), p.eval(&(&x + &a)));
    }

    #[test]
    fn series_product_commutes_and_associates(a in series(5), b in series(5), c in series(5)) {
        prop_assert_eq!(series_mul(&a, &b, 5), series_mul(&b, &a, 5));
        let left = series_mul(&series_mul(&a, &b, 5), &c, 5);
        let right = series_mul(&a, &series_mul(&b, &c, 5), 5);
        prop_assert_eq!(left, right);
    }

    #[test]
    fn rationals_stay_canonical(p in poly(), x in rat()) {
        let v = p.eval(&x);
        let mut again = Rational::new_raw(v.numer().clone(), v.denom().clone());
        again = again.reduced();
        prop_assert_eq!(&again, &v);
        prop_assert!(v.denom() > &0.into());
    }

    #[test]
    fn circulator_is_periodic(j in 1i64..=30, s in -200i64..200) {
        prop_assert_eq!(prime_circulator(j, s), prime_circulator(j, s + j));
        let c = Circulator::new(j as u64).unwrap();
        prop_assert_eq!(c.at(s as i128), prime_circulator(j, s).unwrap());
    }

    #[test]
    fn dp_is_permutation_invariant(mut parts in prop::collection::vec(1u64..=10, 1..=5), s in 0i64..120) {
        let a = count_partitions_dp(&GeneratorSet::new(parts.clone()).unwrap(), s);
        parts.reverse();
        parts.rotate_left(1);
        prop_assert_eq!(a, count_partitions_dp(&GeneratorSet::new(parts).unwrap(), s));
    }

    #[test]
    fn dp_grows_with_generators(parts in prop::collection::vec(1u64..=10, 1..=4), extra in 1u64..=10) {
        let before = partition_table(&parts, 80);
        let mut more = parts.clone();
        more.push(extra);
        let after = partition_table(&more, 80);
        prop_assert!(before.iter().zip(&after).all(|(a, b)| a <= b));
    }

    #[test]
    fn weights_have_full_mass(d in generators(4, 9), j in 2u64..=9) {
        prop_assume!(d.has_multiple_of(j));
        let split = split_generators(j, &d).unwrap();
        let w = weights_recursive(j, &d).unwrap();
        prop_assert_eq!(w.total(), BigUint::from(j).pow(split.free_count() as u32));
        prop_assert!(weights_well_formed(&w));
        prop_assert_eq!(&w, &weights_bruteforce(j, &d).unwrap());
        // A_l = A_{l_max - l}
        let rev: Vec<_> = w.weights.iter().rev().cloned().collect();
        prop_assert_eq!(rev, w.weights);
    }

    #[test]
    fn modified_set_partitions_generators(d in generators(6, 12), j in 1u64..=12) {
        let split = split_generators(j, &d).unwrap();
        prop_assert_eq!(split.divisible.len() + split.nondivisible.len(), d.len());
        prop_assert_eq!(split.combined.len(), d.len());
        prop_assert!(split.divisible.iter().all(|x| x % j == 0));
        prop_assert!(split.nondivisible.iter().all(|x| x % j != 0));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn waves_sum_to_dp_count(d in generators(4, 10)) {
        let table = partition_table(d.parts(), 150);
        let expansion = SylvesterExpansion::new(&d);
        for (s, expected) in table.iter().enumerate() {
            let dec = expansion.decompose(s as u64).unwrap();
            prop_assert_eq!(&dec.total, expected);
            prop_assert_eq!(dec.terms[0].0, 1);
        }
        let q = expansion.quasipolynomial();
        prop_assert!(q.residue_polys.iter().all(|p| p.degree() < d.len() as isize));
    }
}
