// Cohomology of ΛV with representative cocycles; builtin:example3 gives ℚ[u]/(u⁴).

use koszul::corpus::builtin;
use koszul::linalg::cohomology;

pub fn run_example() -> koszul::Result<()> {
    let c = builtin("example3")?.complex()?;
    let full = c.full();
    let bases = full.bases(9);
    let h = cohomology(&full.cochains_from(&bases)?, 0, 8)?;
    println!("dims {:?}", h.dims());
    for d in h.iter().filter(|d| d.dim() > 0) {
        let k = d.degree as usize;
        for rep in &d.representatives {
            println!("H^{k}: [{}]", full.element(rep, &bases[k]));
        }
    }
    assert_eq!(h.dims(), vec![1, 0, 1, 0, 1, 0, 1, 0, 0]);
    Ok(())
}

#[allow(dead_code)]
fn main() -> koszul::Result<()> {
    run_example()
}
