mod common;

use bfi::combination::{
    combine_bold, combine_cautious, combine_conjunctive, combine_disjunctive, condition, Rule, WeightOp,
};
use bfi::discounting::discount;
use bfi::estimation::jousselme_distance;
use bfi::mass::from_weights;
use bfi::{Frame, MassFunction};
use common::*;
use proptest::prelude::*;
use rand::Rng;

fn frame_and_mass(shape: Shape) -> impl Strategy<Value = MassFunction> {
    (2usize..=4, any::<u64>()).prop_map(move |(n, seed)| random_mass(&mut rng(seed), &frame(n), shape))
}

fn triple(shape: Shape) -> impl Strategy<Value = (MassFunction, MassFunction, MassFunction)> {
    (2usize..=4, any::<u64>()).prop_map(move |(n, seed)| {
        let f = frame(n);
        let mut r = rng(seed);
        (random_mass(&mut r, &f, shape), random_mass(&mut r, &f, shape), random_mass(&mut r, &f, shape))
    })
}

fn all_sets(f: &Frame) -> Vec<bfi::FocalSet> {
    (0..1u64 << f.len()).map(|b| set(f, b)).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn mass_is_normalized_and_positive(m in frame_and_mass(ANY)) {
        prop_assert!((m.total() - 1.0).abs() <= 1e-9);
        prop_assert!(m.focals().all(|(_, v)| v > 0.0));
    }

    #[test]
    fn plausibility_belief_duality(m in frame_and_mass(ANY)) {
        for x in all_sets(m.frame()) {
            let lhs = m.pl(&x).unwrap();
            let rhs = 1.0 - m.conflict() - m.bel(&x.complement()).unwrap();
            prop_assert!((lhs - rhs).abs() <= 1e-12);
        }
    }

    #[test]
    fn belief_and_plausibility_are_monotone(m in frame_and_mass(ANY)) {
        let sets = all_sets(m.frame());
        for x in &sets {
            for y in sets.iter().filter(|y| x.is_subset(y).unwrap()) {
                prop_assert!(m.bel(x).unwrap() <= m.bel(y).unwrap() + 1e-15);
                prop_assert!(m.pl(x).unwrap() <= m.pl(y).unwrap() + 1e-15);
            }
        }
    }

    #[test]
    fn conjunctive_is_commutative_and_associative((a, b, c) in triple(ANY)) {
        let ab = combine_conjunctive(&a, &b).unwrap();
        prop_assert!(max_diff(&ab, &combine_conjunctive(&b, &a).unwrap()) <= 1e-12);
        let left = combine_conjunctive(&ab, &c).unwrap();
        let right = combine_conjunctive(&a, &combine_conjunctive(&b, &c).unwrap()).unwrap();
        prop_assert!(max_diff(&left, &right) <= 1e-12);
        prop_assert!((left.total() - 1.0).abs() <= 1e-9);
    }

    #[test]
    fn disjunctive_is_commutative_and_associative((a, b, c) in triple(ANY)) {
        let ab = combine_disjunctive(&a, &b).unwrap();
        prop_assert!(max_diff(&ab, &combine_disjunctive(&b, &a).unwrap()) <= 1e-12);
        let left = combine_disjunctive(&ab, &c).unwrap();
        let right = combine_disjunctive(&a, &combine_disjunctive(&b, &c).unwrap()).unwrap();
        prop_assert!(max_diff(&left, &right) <= 1e-12);
    }

    #[test]
    fn neutral_and_absorbing_elements(m in frame_and_mass(ANY)) {
        let f = m.frame();
        prop_assert!(max_diff(&combine_conjunctive(&m, &MassFunction::vacuous(f)).unwrap(), &m) <= 1e-15);
        prop_assert!(max_diff(&combine_disjunctive(&m, &MassFunction::empty(f)).unwrap(), &m) <= 1e-15);
        prop_assert!(max_diff(&combine_conjunctive(&m, &MassFunction::empty(f)).unwrap(), &MassFunction::empty(f)) <= 1e-15);
    }

    #[test]
    fn cautious_rule_laws((a, b, c) in triple(NON_DOGMATIC)) {
        prop_assert!(max_diff(&combine_cautious(&a, &a).unwrap(), &a) <= 1e-9);
        let ab = combine_cautious(&a, &b).unwrap();
        prop_assert!(max_diff(&ab, &combine_cautious(&b, &a).unwrap()) <= 1e-9);
        let left = combine_cautious(&ab, &c).unwrap();
        let right = combine_cautious(&a, &combine_cautious(&b, &c).unwrap()).unwrap();
        prop_assert!(max_diff(&left, &right) <= 1e-9);
        // m_Ω has every weight 1: it is neutral exactly for separable masses
        let with_vacuous = combine_cautious(&a, &MassFunction::vacuous(a.frame())).unwrap();
        let weights = oracle_weights(&a);
        let capped: Vec<f64> = weights.iter().map(|w| w.min(1.0)).collect();
        prop_assert!(max_diff(&with_vacuous, &oracle_from_weights(a.frame(), &capped)) <= 1e-9);
        if weights[..weights.len() - 1].iter().all(|&w| w <= 1.0) {
            prop_assert!(max_diff(&with_vacuous, &a) <= 1e-9);
        }
    }

    #[test]
    fn weights_match_the_product_formula(m in frame_and_mass(NON_DOGMATIC)) {
        let w = m.canonical_weights().unwrap();
        let oracle = oracle_weights(&m);
        for (b, expected) in oracle.iter().enumerate().take(oracle.len() - 1) {
            let got = w.weight(&set(m.frame(), b as u64)).unwrap();
            prop_assert!((got - expected).abs() <= 1e-9 * expected.abs().max(1.0), "{b}: {got} vs {expected}");
        }
        prop_assert!(max_diff(&oracle_from_weights(m.frame(), &oracle), &m) <= 1e-9);
        prop_assert!(max_diff(&from_weights(&w).unwrap(), &m) <= 1e-9);
    }

    #[test]
    fn bold_rule_laws((a, b, _c) in triple(SUBNORMAL)) {
        prop_assert!(max_diff(&combine_bold(&a, &a).unwrap(), &a) <= 1e-9);
        let ab = combine_bold(&a, &b).unwrap();
        prop_assert!(max_diff(&ab, &combine_bold(&b, &a).unwrap()) <= 1e-9);
    }

    #[test]
    fn conditioning_stays_inside_the_set(m in frame_and_mass(ANY), bits in 1u64..16) {
        let f = m.frame();
        let a = set(f, bits & ((1 << f.len()) - 1) | 1);
        let r = condition(&m, &a).unwrap();
        prop_assert!(r.focals().all(|(s, _)| s.is_subset(&a).unwrap()));
    }

    #[test]
    fn jousselme_matches_the_dense_matrix((a, b, c) in triple(ANY)) {
        let dab = jousselme_distance(&a, &b).unwrap();
        prop_assert!((dab - oracle_jousselme(&a, &b)).abs() <= 1e-12);
        prop_assert_eq!(dab, jousselme_distance(&b, &a).unwrap());
        let dac = jousselme_distance(&a, &c).unwrap();
        let dcb = jousselme_distance(&c, &b).unwrap();
        prop_assert!(dab <= dac + dcb + 1e-12);
        prop_assert!((0.0..=1.0).contains(&dab));
    }

    #[test]
    fn discounting_composes(m in frame_and_mass(ANY), a in 0.0f64..=1.0, b in 0.0f64..=1.0) {
        let twice = discount(&discount(&m, a).unwrap(), b).unwrap();
        prop_assert!(max_diff(&twice, &discount(&m, a * b).unwrap()) <= 1e-12);
        prop_assert!(discount(&m, a).unwrap().ignorance() >= m.ignorance() - 1e-15);
    }
}

#[test]
fn bold_rule_against_brute_force_on_two_atoms() {
    let f = frame(2);
    let mut r = rng(11);
    for _ in 0..500 {
        let a = random_mass(&mut r, &f, SUBNORMAL);
        let b = random_mass(&mut r, &f, SUBNORMAL);
        let (va, vb) = (oracle_disjunctive_weights(&a), oracle_disjunctive_weights(&b));
        let min: Vec<f64> = va.iter().zip(&vb).map(|(x, y)| x.min(*y)).collect();
        let expected = oracle_from_disjunctive_weights(&f, &min);
        let got = Rule::Bold(WeightOp::Min).combine(&a, &b).unwrap();
        assert!(max_diff(&got, &expected) <= 1e-9, "{a:?} {b:?}: {got:?} vs {expected:?}");
    }
}

#[test]
fn disjunctive_weights_match_the_product_formula() {
    let mut r = rng(12);
    for n in 2..=4 {
        let f = frame(n);
        for _ in 0..100 {
            let m = random_mass(&mut r, &f, SUBNORMAL);
            let v = m.disjunctive_weights().unwrap();
            let oracle = oracle_disjunctive_weights(&m);
            for (b, expected) in oracle.iter().enumerate().skip(1) {
                let got = v.weight(&set(&f, b as u64)).unwrap();
                assert!((got - expected).abs() <= 1e-9 * expected.abs().max(1.0));
            }
            assert!(max_diff(&oracle_from_disjunctive_weights(&f, &oracle), &m) <= 1e-9);
        }
    }
}

/// Checked as an observation on random separable pairs: the cautious rule
/// keeps the smaller weight, so it never adds conflict beyond the conjunctive rule.
#[test]
fn cautious_conflict_never_exceeds_conjunctive_on_separable_masses() {
    let mut r = rng(13);
    let f = frame(3);
    let separable = |r: &mut rand_chacha::ChaCha8Rng| {
        let mut m = MassFunction::vacuous(&f);
        for _ in 0..r.random_range(1..4) {
            let bits = r.random_range(0..7u64);
            let s = bfi::MassFunction::simple_support(&set(&f, bits), r.random_range(0.1..0.95)).unwrap();
            m = combine_conjunctive(&m, &s).unwrap();
        }
        m
    };
    for _ in 0..1000 {
        let (a, b) = (separable(&mut r), separable(&mut r));
        let cautious = combine_cautious(&a, &b).unwrap().conflict();
        let conj = combine_conjunctive(&a, &b).unwrap().conflict();
        assert!(cautious <= conj + 1e-12, "{a:?} {b:?}");
    }
}
