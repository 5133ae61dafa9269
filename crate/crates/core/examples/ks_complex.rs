// Koszul-Sullivan complexes: d² = 0, the Sullivan filtration, minimality
// and the fiber of a Λ-extension.

use koszul::corpus::builtin;

pub fn run_example() -> koszul::Result<()> {
    for name in ["example1", "example2", "example3"] {
        let spec = builtin(name)?;
        let c = spec.complex()?;
        let stages = c.check_sullivan()?;
        let min = c.check_minimal();
        println!("{name}: d² = 0: {}, stages {:?}, minimal: {}", c.check_d_squared(12).pass, stages.stages, min.minimal);
        for (g, lin) in &min.witnesses {
            println!("  linear part of d({g}): {lin}");
        }
        if let Some(ext) = spec.extension()? {
            for (w, d) in ext.fiber_differential() {
                println!("  fiber d̄({w}) = {d}");
            }
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> koszul::Result<()> {
    run_example()
}
