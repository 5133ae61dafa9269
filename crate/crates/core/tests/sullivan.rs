use koszul::corpus::{corpus_generate, instance_seed, GeneratorParams};
use koszul::graded::{parse_element, GradedAlgebra, WordlengthFilter};
use koszul::sullivan::{InterpolatingFiltration, KsComplex};
use koszul::Error;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn instance(seed: u64) -> koszul::corpus::AlgebraSpec {
    let params = GeneratorParams::sampled(&mut ChaCha8Rng::seed_from_u64(seed));
    corpus_generate(seed, params).unwrap()
}

#[test]
fn corpus_instances_are_relative_sullivan_algebras() {
    for i in 0..200 {
        let s = instance(instance_seed(5, i));
        let c = s.complex().unwrap();
        let d2 = c.check_d_squared(12);
        assert!(d2.pass && d2.basis_offender.is_none(), "{}", s.to_json());
        c.check_sullivan().unwrap();
        let ext = s.extension().unwrap().unwrap();
        let fiber = ext.fiber_complex().unwrap();
        assert!(fiber.check_d_squared(12).pass);
        // the base is a sub-KS complex
        assert!(ext.base_complex().unwrap().check_d_squared(12).pass);
    }
}

#[test]
fn interpolating_filtrations_are_closed() {
    for i in 0..60 {
        let s = instance(instance_seed(9, i));
        let ext = s.extension().unwrap().unwrap();
        let minimal = ext.complex().check_minimal().minimal;
        for m in 0..=2 {
            for n in 0..=2 {
                let (f, cert) = InterpolatingFiltration::build(&ext, m, n, false, 12).unwrap();
                assert_eq!(cert.lower_wordlength, (m + 1) * (n + 2) - 1);
                assert_eq!(f.thresholds[m + 1], 0);
                if minimal {
                    let (_, cert) = InterpolatingFiltration::build(&ext, m, n, true, 12).unwrap();
                    assert_eq!(cert.lower_wordlength, (m + 1) * (n + 1));
                }
            }
        }
    }
}

#[test]
fn thresholds_of_both_variants() {
    let ext = koszul::corpus::builtin("example3").unwrap().extension().unwrap().unwrap();
    let (f, cert) = InterpolatingFiltration::build(&ext, 1, 1, false, 12).unwrap();
    assert_eq!(f.thresholds, vec![5, 2, 0]);
    assert_eq!(cert.lower_wordlength, 5);
    let (f, cert) = InterpolatingFiltration::build(&ext, 1, 1, true, 12).unwrap();
    assert_eq!(f.thresholds, vec![4, 2, 0]);
    assert_eq!(cert.lower_wordlength, 4);
    assert_eq!(f.describe()[2], "I_0 = I_1 + P^{≥0,≥4}");
}

#[test]
fn non_sullivan_differential_is_rejected() {
    // Chevalley-Eilenberg complex of su(2): d² = 0 but no generator is closed
    let a = GradedAlgebra::new([("a", 1), ("b", 1), ("c", 1)]).unwrap();
    let d = |t: &str| parse_element(&a, t).unwrap();
    let c = KsComplex::from_named(&a, [("a", d("b*c")), ("b", d("c*a")), ("c", d("a*b"))]).unwrap();
    assert!(c.check_d_squared(6).pass);
    assert!(matches!(c.check_sullivan(), Err(Error::NotSullivan(_))));
}

#[test]
fn inhomogeneous_differential_is_rejected() {
    let a = GradedAlgebra::new([("z", 2), ("w", 3)]).unwrap();
    let bad = parse_element(&a, "z").unwrap();
    assert!(KsComplex::from_named(&a, [("w", bad)]).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn window_quotients_are_complexes(seed in 0u64..10_000, lo in 0usize..3, width in 0usize..3) {
        let s = instance(seed);
        let c = s.complex().unwrap();
        let all = c.algebra().all();
        let q = c.quotient(WordlengthFilter::window(all, lo, Some(lo + width)));
        let cc = q.cochains(10).unwrap();
        prop_assert!(cc.check_d_squared().is_ok());
    }

    #[test]
    fn base_window_quotients_are_complexes(seed in 0u64..10_000, lo in 0usize..3, width in 0usize..3) {
        let s = instance(seed);
        let ext = s.extension().unwrap().unwrap();
        let c = ext.complex();
        let q = c.quotient(WordlengthFilter::window(ext.base().clone(), lo, Some(lo + width)));
        prop_assert!(q.cochains(10).unwrap().check_d_squared().is_ok());
    }
}
