// Truncated Toomer invariants with witnesses. A failing row carries a class
// that dies in the truncated quotient.

use koszul::corpus::builtin;
use koszul::graded::GradedAlgebra;
use koszul::invariants::toomer;
use koszul::sullivan::KsComplex;

pub fn run_example() -> koszul::Result<()> {
    let c = builtin("example2")?.complex()?;
    let r = toomer(&c.full(), &c.algebra().all(), 10, 4)?;
    println!("example2: candidate {}, certified e ≥ {}", r.candidate_text(), r.certified_lower);
    for row in r.failures() {
        let w = row.witness.as_ref().expect("failing rows have witnesses");
        println!("  m = {}: [{}] dies in degree {}", row.m, w.class, row.degree);
    }

    // ℚ[z] has no finite invariant: z^{m+1} dies at every m
    let a = GradedAlgebra::new([("z", 2)])?;
    let poly = KsComplex::from_named(&a, [])?;
    let r = toomer(&poly.full(), &a.all(), 20, 8)?;
    println!("ℚ[z]: candidate {}, flags {:?}", r.candidate_text(), r.flags);
    for row in r.failures().filter(|row| row.degree == 2 * (row.m + 1)) {
        println!("  m = {}: {}", row.m, row.witness.as_ref().unwrap().class);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> koszul::Result<()> {
    run_example()
}
