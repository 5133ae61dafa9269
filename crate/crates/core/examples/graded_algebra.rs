// Free graded-commutative algebras: signs, bases and the text format.

use koszul::graded::{parse_element, GradedAlgebra, GeneratorSet, WordlengthFilter};

pub fn run_example() -> koszul::Result<()> {
    // x, y odd; u even
    let a = GradedAlgebra::new([("x", 3), ("y", 5), ("u", 2)])?;
    let x = parse_element(&a, "x")?;
    let y = parse_element(&a, "y")?;
    let u = parse_element(&a, "u")?;

    let xy = &x * &y;
    let yx = &y * &x;
    println!("x*y = {xy}");
    println!("y*x = {yx}");
    assert_eq!(xy, -yx);
    assert!((&x * &x).is_zero());

    let e = parse_element(&a, "2 * u^2*x - 1/3 * y + 1 * u^4")?;
    println!("e = {e}, degrees {:?}", e.degrees());

    for k in 0..=10 {
        println!("dim ΛV^{k} = {}", a.basis(k, None).len());
    }

    // wordlength in the even generator only
    let only_u = GeneratorSet::new([2]);
    let f = WordlengthFilter::at_most(only_u, 1);
    println!("{e} truncated to u-wordlength ≤ 1: {}", e.truncate(&f));
    assert_eq!((&u * &x).algebra().len(), 3);
    Ok(())
}

#[allow(dead_code)]
fn main() -> koszul::Result<()> {
    run_example()
}
