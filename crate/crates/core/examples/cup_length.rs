// Cup length as a lower bound, compared with the Toomer candidate.

use koszul::corpus::builtin;
use koszul::invariants::{cup_length, toomer};

pub fn run_example() -> koszul::Result<()> {
    for name in ["example3", "example3-1-2", "zero-differential"] {
        let c = builtin(name)?.complex()?;
        let all = c.algebra().all();
        let cup = cup_length(&c, &all, 12)?;
        let e = toomer(&c.full(), &all, 12, 12)?;
        println!(
            "{name}: cup length {} via {:?} = {}, e candidate {}",
            cup.length,
            cup.factors,
            cup.product.as_deref().unwrap_or("1"),
            e.candidate_text()
        );
        assert!(e.candidate.is_none_or(|m| cup.length <= m));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> koszul::Result<()> {
    run_example()
}
