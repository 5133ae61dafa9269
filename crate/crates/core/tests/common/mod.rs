#![allow(dead_code)]

use koszul::invariants::{ToomerReport, Witness};
use koszul::linalg::{Preimage, RationalMatrix, SparseVector};
use koszul::sullivan::QuotientComplex;
use koszul::Rational;
use num::Zero;
use rand::Rng;

/// Rank by dense forward elimination over ℚ, written independently of the
/// library's sparse elimination.
pub fn dense_rank(rows: &[Vec<Rational>]) -> usize {
    let mut a: Vec<Vec<Rational>> = rows.to_vec();
    let m = a.len();
    let n = a.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..m).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        let pivot = a[r][c].clone();
        for i in r + 1..m {
            if a[i][c].is_zero() {
                continue;
            }
            let f = a[i][c].clone() / pivot.clone();
            let (top, rest) = a.split_at_mut(i);
            for (x, p) in rest[0][c..].iter_mut().zip(&top[r][c..]) {
                if !p.is_zero() {
                    *x = x.clone() - p.clone() * f.clone();
                }
            }
        }
        r += 1;
        if r == m {
            break;
        }
    }
    r
}

pub fn dense_apply(rows: &[Vec<Rational>], x: &[Rational]) -> Vec<Rational> {
    rows.iter()
        .map(|r| r.iter().zip(x).fold(Rational::zero(), |acc, (a, b)| acc + a.clone() * b.clone()))
        .collect()
}

/// A sparse random matrix with small integer entries, at most 40×40.
pub fn random_matrix(rng: &mut impl Rng) -> Vec<Vec<Rational>> {
    let m = rng.gen_range(1..=40);
    let n = rng.gen_range(1..=40);
    let density = rng.gen_range(0.05..0.6);
    let mut rows: Vec<Vec<Rational>> = (0..m)
        .map(|_| {
            (0..n)
                .map(|_| {
                    if rng.gen_bool(density) {
                        Rational::from_integer(rng.gen_range(-5i64..=5).into())
                    } else {
                        Rational::zero()
                    }
                })
                .collect()
        })
        .collect();
    // force some rank deficiency now and then
    if m > 2 && rng.gen_bool(0.3) {
        let (i, j) = (rng.gen_range(0..m), rng.gen_range(0..m));
        let c = Rational::new(rng.gen_range(-3i64..=3).into(), rng.gen_range(1i64..=3).into());
        let src = rows[j].clone();
        rows[i] = src.iter().map(|x| x.clone() * c.clone()).collect();
    }
    rows
}

/// Compares sparse and dense elimination on one matrix; `Err` describes the
/// first disagreement.
pub fn compare_with_oracle(rows: &[Vec<Rational>], rng: &mut impl Rng) -> Result<(), String> {
    let n = rows[0].len();
    let sparse = RationalMatrix::from_rows(rows).map_err(|e| e.to_string())?;
    let rank = dense_rank(rows);
    if sparse.rank() != rank {
        return Err(format!("rank {} vs dense {}", sparse.rank(), rank));
    }
    let kernel = sparse.kernel_basis();
    if kernel.len() != n - rank {
        return Err(format!("kernel dim {} vs {}", kernel.len(), n - rank));
    }
    let kdense: Vec<Vec<Rational>> = kernel.iter().map(|v| v.to_dense(n)).collect();
    for k in &kdense {
        if dense_apply(rows, k).iter().any(|x| !x.is_zero()) {
            return Err("kernel vector not in kernel".into());
        }
    }
    if !kdense.is_empty() && dense_rank(&kdense) != kdense.len() {
        return Err("kernel basis dependent".into());
    }
    // preimage of a random image vector, and of a random vector
    let x: Vec<Rational> = (0..n).map(|_| Rational::from_integer(rng.gen_range(-2i64..=2).into())).collect();
    let b = dense_apply(rows, &x);
    match sparse.preimage(&SparseVector::from_dense(&b)) {
        Preimage::Solution(s) => {
            if dense_apply(rows, &s.to_dense(n)) != b {
                return Err("wrong preimage".into());
            }
        }
        Preimage::Inconsistent { .. } => return Err("image vector reported inconsistent".into()),
    }
    let t: Vec<Rational> = (0..rows.len()).map(|_| Rational::from_integer(rng.gen_range(-2i64..=2).into())).collect();
    let mut aug = rows.to_vec();
    for (r, v) in aug.iter_mut().zip(&t) {
        r.push(v.clone());
    }
    let solvable = dense_rank(&aug) == rank;
    match sparse.preimage(&SparseVector::from_dense(&t)) {
        Preimage::Solution(s) if solvable => {
            if dense_apply(rows, &s.to_dense(n)) != t {
                return Err("wrong preimage".into());
            }
        }
        Preimage::Inconsistent { certificate } if !solvable => {
            // yᵀA = 0 and yᵀt ≠ 0
            let y = certificate.to_dense(rows.len());
            let yt: Vec<Vec<Rational>> = vec![y.clone()];
            let cols: Vec<Vec<Rational>> = (0..n).map(|j| rows.iter().map(|r| r[j].clone()).collect()).collect();
            if cols.iter().any(|c| !dense_apply(&yt, c)[0].is_zero()) || dense_apply(&yt, &t)[0].is_zero() {
                return Err("bad inconsistency certificate".into());
            }
        }
        _ => return Err(format!("solvability disagrees (dense says {solvable})")),
    }
    Ok(())
}

/// Re-checks a witness from first principles: the class is a cocycle of the
/// subject that is not a coboundary there, and `d(primitive)` equals the
/// class modulo everything the quotient drops.
pub fn verify_witness(subject: &QuotientComplex, quotient: &QuotientComplex, degree: usize, w: &Witness) -> Result<(), String> {
    let c = subject.parent();
    let x = &w.class_element;
    if x.terms().keys().any(|m| !subject.contains(m)) {
        return Err("class leaves the subject".into());
    }
    if !c.d(x).retain(|m| subject.contains(m)).is_zero() {
        return Err("class is not a cocycle".into());
    }
    let bases = subject.bases(degree);
    let prev = if degree == 0 { None } else { Some(&bases[degree - 1]) };
    if let Some(prev) = prev {
        let target = &bases[degree];
        let cols = prev
            .monomials
            .iter()
            .map(|m| {
                let dm = c.d_monomial(m).retain(|t| subject.contains(t));
                subject.coordinates(&dm, target)
            })
            .collect();
        let d = RationalMatrix::from_columns(target.len(), cols).map_err(|e| e.to_string())?;
        if d.preimage(&subject.coordinates(x, target)).solution().is_some() {
            return Err("class is a coboundary in the subject".into());
        }
    } else if x.is_zero() {
        return Err("zero class".into());
    }
    let y = &w.primitive_element;
    let lhs = c.d(y).retain(|m| quotient.contains(m));
    let rhs = x.retain(|m| quotient.contains(m));
    if lhs != rhs {
        return Err(format!("d({}) ≠ image of {}", w.primitive, w.class));
    }
    Ok(())
}

/// Every failing row of `report` re-verified against the quotient at its `m`.
pub fn verify_report_witnesses(subject: &QuotientComplex, r: &ToomerReport) -> Result<usize, String> {
    let set: koszul::graded::GeneratorSet = r
        .subset
        .iter()
        .map(|name| subject.parent().algebra().index_of(name).unwrap())
        .collect();
    let mut n = 0;
    for row in r.failures() {
        let w = row.witness.as_ref().ok_or("failing row without witness")?;
        let quotient = subject
            .restrict(koszul::graded::WordlengthFilter::at_most(set.clone(), r.window_start + row.m))
            .map_err(|e| e.to_string())?;
        verify_witness(subject, &quotient, row.degree, w).map_err(|e| format!("m = {}: {e}", row.m))?;
        n += 1;
    }
    Ok(n)
}
