// The product estimate for e on a Λ-extension, for the three example3 variants.

use koszul::corpus::builtin;
use koszul::invariants::{verify_estimate_e, Caps};

pub fn run_example() -> koszul::Result<()> {
    for name in ["example3", "example3-1-2", "example3-2-1"] {
        let ext = builtin(name)?.extension()?.expect("base generators present");
        let r = verify_estimate_e(&ext, Caps::new(14))?;
        println!(
            "{name}: m = {:?}, n = {:?}, bound {:?}, certified e ≥ {}: {:?} ({})",
            r.m_used, r.n_used, r.bound, r.total.certified_lower, r.verdict, r.reason
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> koszul::Result<()> {
    run_example()
}
