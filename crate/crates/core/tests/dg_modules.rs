use std::sync::Arc;

use koszul::dg_modules::random::{cylinder_fixture, fixture_algebras, lift_fixture, random_chain_map, random_semifree, run_lift_fixture};
use koszul::dg_modules::{check_homotopy, mapping_cylinder, strictify, surjective_resolution, DGModule, ModuleElement, ModuleMorphism};
use koszul::graded::{AlgebraElement, WordlengthFilter};
use koszul::Error;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn cylinder_contract(seed in any::<u64>()) {
        let fx = cylinder_fixture(seed).unwrap();
        let cyl = mapping_cylinder(&fx.f).unwrap();
        let check = cyl.verify(0, 6).unwrap();
        prop_assert!(check.passed(), "{:?}", check);
        prop_assert!(cyl.projection.after(&cyl.inclusion).unwrap().same_images(&fx.f));
        let g = strictify(&cyl, &fx.g, &fx.h, &fx.theta).unwrap();
        prop_assert!(g.is_chain_map());
        prop_assert!(g.after(&cyl.inclusion).unwrap().same_images(&fx.h));
    }

    #[test]
    fn lifts_are_exact_and_homotopic(seed in any::<u64>()) {
        let fx = lift_fixture(seed).unwrap();
        let (psi1, psi2, theta) = run_lift_fixture(&fx).unwrap();
        prop_assert!(fx.f.after(&psi1).unwrap().same_images(&fx.phi));
        prop_assert!(fx.f.after(&psi2).unwrap().same_images(&fx.phi));
        prop_assert!(psi1.is_chain_map() && psi2.is_chain_map());
        check_homotopy(&psi1, &psi2, &theta).unwrap();
    }

    #[test]
    fn resolutions_are_certified(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let algebras = fixture_algebras();
        let a = &algebras[(seed % algebras.len() as u64) as usize];
        let n = Arc::new(random_semifree(a, &mut rng, 1..=3, 3, "n").unwrap());
        let r = surjective_resolution(&n, 0, 6).unwrap();
        prop_assert!(r.certificate.surjective && r.certificate.quasi_isomorphism && r.certificate.stabilised);
        prop_assert!(r.module.is_semifree());
        prop_assert!(r.map.is_chain_map());
    }

    #[test]
    fn random_chain_maps_commute_with_d(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let algebras = fixture_algebras();
        let a = &algebras[(seed % algebras.len() as u64) as usize];
        let p = Arc::new(random_semifree(a, &mut rng, 1..=3, 3, "p").unwrap());
        let q = Arc::new(random_semifree(a, &mut rng, 1..=3, 3, "q").unwrap());
        let f = random_chain_map(&p, &q, &mut rng).unwrap();
        prop_assert!(f.is_chain_map());
        // a composite of chain maps is one
        let id = ModuleMorphism::identity(&q);
        prop_assert!(id.after(&f).unwrap().same_images(&f));
    }
}

#[test]
fn truncated_module_resolution_over_polynomials() {
    // ℚ[z]/(z²) over ℚ[z], z of degree 2
    let a = &fixture_algebras()[0];
    let alg = a.algebra().clone();
    let m = Arc::new(
        DGModule::with_truncation(a, [("b", 0)], vec![ModuleElement::zero()], vec![Some(WordlengthFilter::at_most(alg.all(), 1))]).unwrap(),
    );
    m.check_well_defined(10).unwrap();
    let r = surjective_resolution(&m, 0, 10).unwrap();
    assert!(r.certificate.surjective && r.certificate.quasi_isomorphism);
    assert_eq!(r.module.dimensions(0, 10), vec![1, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1]);
}

#[test]
fn non_chain_maps_and_bad_homotopies_are_rejected() {
    let a = &fixture_algebras()[0];
    let alg = a.algebra().clone();
    let p = Arc::new(
        DGModule::semifree(a, [("b", 1), ("a", 0)], vec![ModuleElement::zero(), ModuleElement::from_components([(0, AlgebraElement::one(&alg))])]).unwrap(),
    );
    // a ↦ a, b ↦ 0 breaks d∘f = f∘d
    let f = ModuleMorphism::new(&p, &p, 0, vec![ModuleElement::zero(), p.unit(1)]).unwrap();
    assert!(!f.is_chain_map());
    assert!(matches!(mapping_cylinder(&f), Err(Error::NotChainMap(_))));
    let id = ModuleMorphism::identity(&p);
    let zero = ModuleMorphism::zero(&p, &p, -1);
    assert!(matches!(check_homotopy(&id, &ModuleMorphism::zero(&p, &p, 0), &zero), Err(Error::NotHomotopy(_))));
}
