// Reading an input document from disk and producing a report.

use koszul::corpus::{validate, Document};
use koszul::invariants::Caps;

pub fn run_example() -> koszul::Result<()> {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/data/example1.json");
    let doc = Document::load(path)?;
    let report = validate(&doc, Caps::new(12))?;
    print!("{}", report.to_text());
    Ok(())
}

#[allow(dead_code)]
fn main() -> koszul::Result<()> {
    run_example()
}
