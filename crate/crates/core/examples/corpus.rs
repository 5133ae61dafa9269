// Seeded random relative Sullivan algebras and a deterministic corpus run.

use koszul::corpus::{corpus_generate, corpus_run, GeneratorParams};
use koszul::invariants::Caps;

pub fn run_example() -> koszul::Result<()> {
    let spec = corpus_generate(7, GeneratorParams::default())?;
    println!("{}", spec.to_json());

    let a = corpus_run(3, 25, Caps::new(10))?;
    let b = corpus_run(3, 25, Caps::new(10))?;
    assert_eq!(a.to_json(), b.to_json());
    println!("outcome {:?}, verdicts {}", a.outcome, a.results["verdicts"]);
    Ok(())
}

#[allow(dead_code)]
fn main() -> koszul::Result<()> {
    run_example()
}
