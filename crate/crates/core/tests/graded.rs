use std::sync::Arc;

use koszul::corpus::{corpus_generate, GeneratorParams};
use koszul::graded::{parse_element, AlgebraElement, GeneratorSet, GradedAlgebra, WordlengthFilter};
use koszul::Rational;
use proptest::prelude::*;

fn algebra(degrees: &[u32]) -> Arc<GradedAlgebra> {
    GradedAlgebra::new(degrees.iter().enumerate().map(|(i, &d)| (format!("g{i}"), d))).unwrap()
}

fn element(a: &Arc<GradedAlgebra>, degree: usize, coeffs: &[i64]) -> AlgebraElement {
    let basis = a.basis(degree, None);
    AlgebraElement::from_terms(
        a,
        basis
            .into_iter()
            .zip(coeffs.iter().cycle())
            .map(|(m, &c)| (m, Rational::from_integer(c.into()))),
    )
}

/// Coefficients of Π_even (1 - t^d)^{-1} · Π_odd (1 + t^d) up to `n`.
fn poincare_series(degrees: &[u32], n: usize) -> Vec<u64> {
    let mut s = vec![0u64; n + 1];
    s[0] = 1;
    for &d in degrees {
        let d = d as usize;
        if d.is_multiple_of(2) {
            for k in d..=n {
                s[k] += s[k - d];
            }
        } else {
            for k in (d..=n).rev() {
                s[k] += s[k - d];
            }
        }
    }
    s
}

fn degrees() -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(1u32..=5, 1..=4)
}

fn coefficients() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-3i64..=3, 1..=5)
}

proptest! {
    #[test]
    fn basis_sizes_match_generating_function(deg in degrees()) {
        let a = algebra(&deg);
        let series = poincare_series(&deg, 14);
        for (k, &count) in series.iter().enumerate() {
            prop_assert_eq!(a.basis(k, None).len() as u64, count, "degree {}", k);
        }
    }

    #[test]
    fn graded_commutative_and_associative(
        deg in degrees(), i in 0usize..8, j in 0usize..8, k in 0usize..8,
        ca in coefficients(), cb in coefficients(), cc in coefficients(),
    ) {
        let a = algebra(&deg);
        let x = element(&a, i, &ca);
        let y = element(&a, j, &cb);
        let z = element(&a, k, &cc);
        let sign = if i % 2 == 1 && j % 2 == 1 { -1 } else { 1 };
        prop_assert_eq!(&x * &y, (&y * &x).scale(&Rational::from_integer(sign.into())));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
    }

    #[test]
    fn odd_elements_square_to_zero(deg in degrees(), i in 0usize..6, c in coefficients()) {
        let a = algebra(&deg);
        let x = element(&a, 2 * i + 1, &c);
        prop_assert!((&x * &x).is_zero());
    }

    #[test]
    fn text_round_trip(deg in degrees(), i in 0usize..10, c in coefficients()) {
        let a = algebra(&deg);
        let x = element(&a, i, &c).scale(&Rational::new(1.into(), 3.into()));
        prop_assert_eq!(parse_element(&a, &x.to_text()).unwrap(), x);
    }

    #[test]
    fn truncation_is_an_ideal_quotient(
        deg in degrees(), i in 0usize..7, j in 0usize..7, m in 0usize..4,
        ca in coefficients(), cb in coefficients(),
    ) {
        let a = algebra(&deg);
        let f = WordlengthFilter::at_most(a.all(), m);
        let x = element(&a, i, &ca);
        let y = element(&a, j, &cb);
        prop_assert_eq!((&x * &y).truncate(&f), (&x.truncate(&f) * &y.truncate(&f)).truncate(&f));
    }

    #[test]
    fn relative_wordlength_counts_only_subset(deg in degrees(), i in 0usize..10) {
        let a = algebra(&deg);
        let s = GeneratorSet::new([0]);
        for mono in a.basis(i, None) {
            prop_assert_eq!(mono.wordlength_in(&s), mono.exponent(0) as usize);
            prop_assert_eq!(mono.wordlength_in(&a.all()), mono.wordlength());
        }
    }

    #[test]
    fn leibniz_rule(seed in 0u64..400, i in 1usize..7, j in 1usize..7, ca in coefficients(), cb in coefficients()) {
        let spec = corpus_generate(seed, GeneratorParams::default()).unwrap();
        let c = spec.complex().unwrap();
        let a = c.algebra();
        let x = element(a, i, &ca);
        let y = element(a, j, &cb);
        let sign = Rational::from_integer(if i % 2 == 1 { -1 } else { 1 }.into());
        let rhs = &(&c.d(&x) * &y) + &(&x * &c.d(&y)).scale(&sign);
        prop_assert_eq!(c.d(&(&x * &y)), rhs);
        prop_assert!(c.d(&c.d(&x)).is_zero());
    }
}

#[test]
fn degree_zero_generators_are_rejected() {
    assert!(GradedAlgebra::new([("a", 0)]).is_err());
    assert!(GradedAlgebra::new([("a", 2), ("a", 3)]).is_err());
}

#[test]
fn fiber_projection_of_example3() {
    let a = GradedAlgebra::new([("x", 4), ("y", 7), ("u", 2), ("v", 3)]).unwrap();
    let e = parse_element(&a, "u^2 - x").unwrap();
    let base = a.subset(["x", "y"]).unwrap();
    assert_eq!(e.truncate(&WordlengthFilter::at_most(base, 0)).to_text(), "1 * u^2");
}
