// A semifree resolution of ℚ[z]/(z²) as a module over ℚ[z].

use std::sync::Arc;

use koszul::dg_modules::{surjective_resolution, DGModule, ModuleElement};
use koszul::graded::{GradedAlgebra, WordlengthFilter};
use koszul::sullivan::KsComplex;

pub fn run_example() -> koszul::Result<()> {
    let a = GradedAlgebra::new([("z", 2)])?;
    let c = KsComplex::from_named(&a, [])?;
    let m = Arc::new(DGModule::with_truncation(
        &c,
        [("b", 0)],
        vec![ModuleElement::zero()],
        vec![Some(WordlengthFilter::at_most(a.all(), 1))],
    )?);
    let r = surjective_resolution(&m, 0, 10)?;
    println!("{}", r.module.describe().join("\n"));
    println!("{}", r.map.describe().join("\n"));
    println!("{:?}", r.certificate);
    assert!(r.certificate.surjective && r.certificate.quasi_isomorphism);
    Ok(())
}

#[allow(dead_code)]
fn main() -> koszul::Result<()> {
    run_example()
}
