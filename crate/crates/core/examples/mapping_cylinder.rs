// Mapping cylinder of a morphism of semifree modules and strictification of
// a homotopy-commutative triangle.

use std::sync::Arc;

use koszul::dg_modules::{mapping_cylinder, strictify, DGModule, ModuleElement, ModuleMorphism};
use koszul::graded::{AlgebraElement, GradedAlgebra};
use koszul::sullivan::KsComplex;
use koszul::Rational;

pub fn run_example() -> koszul::Result<()> {
    let a = GradedAlgebra::new([("z", 2)])?;
    let c = KsComplex::from_named(&a, [])?;
    // P = ℚ[z]{b, a} with da = b
    let p = Arc::new(DGModule::semifree(
        &c,
        [("b", 1), ("a", 0)],
        vec![ModuleElement::zero(), ModuleElement::from_components([(0, AlgebraElement::one(&a))])],
    )?);
    let f = ModuleMorphism::identity(&p);
    let cyl = mapping_cylinder(&f)?;
    println!("{}", cyl.total.describe().join("\n"));
    let check = cyl.verify(0, 6)?;
    println!("{check:?}");
    assert!(check.passed());

    // g∘f and h = -2·id differ by dθ + θd with θ(b) = 3a
    let theta = ModuleMorphism::new(&p, &p, -1, vec![p.unit(1).scale(&Rational::from_integer(3.into())), ModuleElement::zero()])?;
    let h = ModuleMorphism::identity(&p).scale(&Rational::from_integer((-2).into()));
    let g = strictify(&cyl, &ModuleMorphism::identity(&p), &h, &theta)?;
    println!("{}", g.describe().join("\n"));
    assert!(g.after(&cyl.inclusion)?.same_images(&h));
    Ok(())
}

#[allow(dead_code)]
fn main() -> koszul::Result<()> {
    run_example()
}
