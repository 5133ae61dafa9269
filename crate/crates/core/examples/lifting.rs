// Lifting through a surjective quasi-isomorphism, twice, and the homotopy
// relating the two lifts.

use std::sync::Arc;

use koszul::dg_modules::{check_homotopy, homotopy_between_lifts, lift_through_surjection, mapping_cylinder, DGModule, ModuleElement, ModuleMorphism};
use koszul::graded::{parse_element, GradedAlgebra};
use koszul::linalg::PivotOrder;
use koszul::sullivan::KsComplex;

pub fn run_example() -> koszul::Result<()> {
    let a = GradedAlgebra::new([("z", 2), ("w", 3)])?;
    let c = KsComplex::from_named(&a, [("w", parse_element(&a, "z^2")?)])?;
    let p = Arc::new(DGModule::semifree(
        &c,
        [("e", 0), ("t", 1)],
        vec![ModuleElement::zero(), ModuleElement::from_components([(0, parse_element(&a, "z")?)])],
    )?);
    let phi = ModuleMorphism::identity(&p);
    let f = mapping_cylinder(&phi)?.projection;

    let psi1 = lift_through_surjection(&phi, &f, PivotOrder::Forward)?;
    let psi2 = lift_through_surjection(&phi, &f, PivotOrder::Reverse)?;
    println!("forward lift:\n{}", psi1.describe().join("\n"));
    println!("reverse lift:\n{}", psi2.describe().join("\n"));
    assert!(f.after(&psi1)?.same_images(&phi));

    let theta = homotopy_between_lifts(&psi1, &psi2, &f)?;
    check_homotopy(&psi1, &psi2, &theta)?;
    println!("homotopy:\n{}", theta.describe().join("\n"));
    Ok(())
}

#[allow(dead_code)]
fn main() -> koszul::Result<()> {
    run_example()
}
