// The interpolating filtrations I_k on ΛZ ⊗ ΛW and their closure certificate.

use koszul::corpus::builtin;
use koszul::sullivan::InterpolatingFiltration;

pub fn run_example() -> koszul::Result<()> {
    let ext = builtin("example3")?.extension()?.expect("example3 has a base");
    for (m, n, minimal) in [(1, 1, false), (2, 1, false), (1, 1, true)] {
        let (f, cert) = InterpolatingFiltration::build(&ext, m, n, minimal, 12)?;
        println!("m = {m}, n = {n}, minimal variant: {minimal}");
        for line in f.describe() {
            println!("  {line}");
        }
        println!(
            "  closed through degree {}; Λ^≥{}V ⊂ I_0 ({} monomials checked)",
            cert.degree_cap, cert.lower_wordlength, cert.lower_wordlength_monomials
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> koszul::Result<()> {
    run_example()
}
