// Exact sparse elimination over ℚ: rank, kernel, preimage with a
// certificate of inconsistency, and cohomology of a short complex.

use koszul::linalg::{cohomology, Cochains, Preimage, RationalMatrix, SparseVector};
use koszul::Rational;

fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn show(v: &SparseVector, n: usize) -> String {
    v.to_dense(n).iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ")
}

fn matrix(rows: &[&[i64]]) -> koszul::Result<RationalMatrix> {
    RationalMatrix::from_rows(&rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect::<Vec<_>>())
}

pub fn run_example() -> koszul::Result<()> {
    let m = matrix(&[&[2, 4, 1], &[1, 2, 0], &[3, 6, 1]])?;
    println!("rank = {}", m.rank());
    for v in m.kernel_basis() {
        println!("kernel vector ({})", show(&v, 3));
        assert!(m.apply(&v).is_zero());
    }

    let target = SparseVector::from_dense(&[q(3), q(1), q(4)]);
    if let Preimage::Solution(x) = m.preimage(&target) {
        println!("preimage ({})", show(&x, 3));
        assert_eq!(m.apply(&x), target);
    }
    match m.preimage(&SparseVector::from_dense(&[q(1), q(0), q(0)])) {
        Preimage::Inconsistent { certificate } => println!("no preimage; certificate ({})", show(&certificate, 3)),
        Preimage::Solution(_) => unreachable!("(1,0,0) is not in the column space"),
    }

    // 0 → ℚ² → ℚ² → 0 with d = [[1,1],[1,1]]: H⁰ = H¹ = ℚ
    let d = matrix(&[&[1, 1], &[1, 1]])?;
    let c = Cochains::new(0, vec![2, 2, 0], vec![d, RationalMatrix::zero(0, 2)])?;
    let h = cohomology(&c, 0, 1)?;
    println!("H dims {:?}, χ = {}", h.dims(), h.euler_characteristic());
    Ok(())
}

#[allow(dead_code)]
fn main() -> koszul::Result<()> {
    run_example()
}
