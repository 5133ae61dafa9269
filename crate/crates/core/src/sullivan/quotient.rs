use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use super::complex::KsComplex;
use crate::error::{Error, Result};
use crate::graded::{AlgebraElement, GeneratorSet, Monomial, WordlengthFilter};
use crate::linalg::{ChainMap, Cochains, RationalMatrix, SparseVector};

/// A monomial up-set in the `(base wordlength, fiber wordlength)` plane:
/// `m` belongs iff some step `(a, b)` has `wl_base(m) ≥ a` and
/// `wl_fiber(m) ≥ b`. Its span is an ideal of `ΛV`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Staircase {
    pub base: GeneratorSet,
    pub fiber: GeneratorSet,
    pub steps: Vec<(usize, usize)>,
}

impl Staircase {
    pub fn contains(&self, m: &Monomial) -> bool {
        let a = m.wordlength_in(&self.base);
        let b = m.wordlength_in(&self.fiber);
        self.steps.iter().any(|&(p, q)| a >= p && b >= q)
    }
}

/// Which monomials of `ΛV` span the quotient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Region {
    /// Monomials accepted by the filter. Upper bounds are quotients; lower
    /// bounds select a subcomplex and must be preserved by `d`.
    Filter(WordlengthFilter),
    /// `ΛV / I` for the ideal spanned by a staircase.
    OutsideStaircase(Staircase),
}

impl Region {
    pub fn contains(&self, m: &Monomial) -> bool {
        match self {
            Region::Filter(f) => f.accepts(m),
            Region::OutsideStaircase(s) => !s.contains(m),
        }
    }

    /// True when `m` fails a lower bound while passing every upper bound.
    /// Such a term in `d(x)` means the region is not a subquotient: terms past
    /// an upper bound lie in the ideal being divided out and may be dropped,
    /// but nothing else may leave through the bottom.
    fn below_lower_bound(&self, m: &Monomial) -> bool {
        match self {
            Region::Filter(f) => {
                let bounds = f.bounds();
                bounds.iter().any(|b| m.wordlength_in(&b.set) < b.min)
                    && bounds
                        .iter()
                        .all(|b| b.max.is_none_or(|x| m.wordlength_in(&b.set) <= x))
            }
            Region::OutsideStaircase(_) => false,
        }
    }
}

/// A subquotient `ΛV|region` of a KS complex with its induced differential.
///
/// Bases are computed degree by degree on request; the differential is `d`
/// followed by projection onto the region.
#[derive(Clone, Debug)]
pub struct QuotientComplex {
    parent: KsComplex,
    region: Region,
}

/// Basis of one degree with a reverse index.
#[derive(Clone, Debug)]
pub struct DegreeBasis {
    pub degree: usize,
    pub monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl DegreeBasis {
    fn new(degree: usize, monomials: Vec<Monomial>) -> Self {
        let index = monomials
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        Self {
            degree,
            monomials,
            index,
        }
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn position(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }
}

impl QuotientComplex {
    pub fn new(parent: KsComplex, region: Region) -> Self {
        Self { parent, region }
    }

    pub fn parent(&self) -> &KsComplex {
        &self.parent
    }

    pub fn region(&self) -> &Region {
        &self.region
    }

    /// The filter when the region is given by one.
    pub fn filter(&self) -> Option<&WordlengthFilter> {
        match &self.region {
            Region::Filter(f) => Some(f),
            Region::OutsideStaircase(_) => None,
        }
    }

    /// Intersects a filter region with `extra`.
    pub fn restrict(&self, extra: WordlengthFilter) -> Result<QuotientComplex> {
        match &self.region {
            Region::Filter(f) => Ok(QuotientComplex::new(
                self.parent.clone(),
                Region::Filter(f.clone().and(extra)),
            )),
            Region::OutsideStaircase(_) => Err(Error::IllFormedWindow(
                "cannot intersect a staircase quotient with a filter".into(),
            )),
        }
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.region.contains(m)
    }

    pub fn basis(&self, degree: usize) -> DegreeBasis {
        let algebra = self.parent.algebra();
        let monomials = match &self.region {
            Region::Filter(f) => algebra.basis(degree, Some(f)),
            Region::OutsideStaircase(s) => algebra
                .basis(degree, None)
                .into_iter()
                .filter(|m| !s.contains(m))
                .collect(),
        };
        DegreeBasis::new(degree, monomials)
    }

    pub fn bases(&self, cap: usize) -> Vec<DegreeBasis> {
        (0..=cap).map(|n| self.basis(n)).collect()
    }

    /// Induced differential on one basis monomial, in the coordinates of
    /// `next` (the basis one degree up).
    fn column(&self, m: &Monomial, next: &DegreeBasis) -> Result<SparseVector> {
        let dm = self.parent.d_monomial(m);
        let mut col = SparseVector::new();
        for (t, c) in dm.terms() {
            match next.position(t) {
                Some(i) => col.set(i, c.clone()),
                None if self.region.below_lower_bound(t) => {
                    let a = self.parent.algebra();
                    return Err(Error::IllFormedWindow(format!(
                        "d({}) has the term {} below the window",
                        a.format_monomial(m),
                        a.format_monomial(t)
                    )));
                }
                None => {}
            }
        }
        Ok(col)
    }

    /// Cochains in degrees `0..=cap`, with `d² = 0` verified.
    pub fn cochains(&self, cap: usize) -> Result<Cochains> {
        let bases = self.bases(cap);
        self.cochains_from(&bases)
    }

    pub fn cochains_from(&self, bases: &[DegreeBasis]) -> Result<Cochains> {
        let mut differentials = Vec::new();
        for w in bases.windows(2) {
            let cols = w[0]
                .monomials
                .iter()
                .map(|m| self.column(m, &w[1]))
                .collect::<Result<Vec<_>>>()?;
            differentials.push(RationalMatrix::from_columns(w[1].len(), cols)?);
        }
        let c = Cochains::new(0, bases.iter().map(|b| b.len()).collect(), differentials)?;
        if let Err(k) = c.check_d_squared() {
            return Err(Error::IllFormedWindow(format!(
                "induced differential does not square to zero from degree {k}"
            )));
        }
        Ok(c)
    }

    /// The monomial projection onto `target`, which must be a quotient of
    /// this region. Degrees `0..=cap`.
    pub fn projection_to(&self, target: &QuotientComplex, cap: usize) -> ChainMap {
        let mut matrices = BTreeMap::new();
        for n in 0..=cap {
            let src = self.basis(n);
            let tgt = target.basis(n);
            let cols = src
                .monomials
                .iter()
                .map(|m| tgt.position(m).map_or_else(SparseVector::new, SparseVector::unit))
                .collect();
            matrices.insert(
                n as i32,
                RationalMatrix::from_columns(tgt.len(), cols).expect("indices in range"),
            );
        }
        ChainMap::new(matrices)
    }

    /// Coordinates of the region part of `a` in the degree-`basis.degree` basis.
    pub fn coordinates(&self, a: &AlgebraElement, basis: &DegreeBasis) -> SparseVector {
        a.terms()
            .iter()
            .filter_map(|(m, c)| basis.position(m).map(|i| (i, c.clone())))
            .collect()
    }

    pub fn element(&self, v: &SparseVector, basis: &DegreeBasis) -> AlgebraElement {
        AlgebraElement::from_terms(
            self.parent.algebra(),
            v.iter().map(|(i, c)| (basis.monomials[i].clone(), c.clone())),
        )
    }

    /// True when the region accepts no monomial of degree `≤ cap`.
    pub fn is_zero_through(&self, cap: usize) -> bool {
        (0..=cap).all(|n| self.basis(n).is_empty())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::{parse_element, GradedAlgebra};
    use crate::linalg::cohomology;

    fn example3() -> KsComplex {
        let a = GradedAlgebra::new([("x", 4), ("y", 7), ("u", 2), ("v", 3)]).unwrap();
        let dy = parse_element(&a, "x^2").unwrap();
        let dv = parse_element(&a, "u^2 - x").unwrap();
        KsComplex::from_named(&a, [("y", dy), ("v", dv)]).unwrap()
    }

    #[test]
    fn truncated_polynomial_algebra() {
        let a = GradedAlgebra::new([("z", 2)]).unwrap();
        let c = KsComplex::from_named(&a, []).unwrap();
        let q = c.quotient(WordlengthFilter::at_most(a.all(), 1));
        let cc = q.cochains(6).unwrap();
        assert_eq!((0..=6).map(|k| cc.dim(k)).collect::<Vec<_>>(), vec![1, 0, 1, 0, 0, 0, 0]);
        assert!(cc.differential(0).unwrap().is_zero());
    }

    #[test]
    fn example3_cohomology() {
        let c = example3();
        let h = cohomology(&c.full().cochains(9).unwrap(), 0, 8).unwrap();
        assert_eq!(h.dims(), vec![1, 0, 1, 0, 1, 0, 1, 0, 0]);
    }

    #[test]
    fn bigraded_piece_sees_only_fiber_differential() {
        let c = example3();
        let a = c.algebra();
        let base = a.subset(["x", "y"]).unwrap();
        let fiber = a.subset(["u", "v"]).unwrap();
        let piece = c.quotient(WordlengthFilter::exactly(base.clone(), 1).and(WordlengthFilter::at_least(fiber.clone(), 2)));
        let cc = piece.cochains(14).unwrap();
        for n in 0..14 {
            let src = piece.basis(n);
            let tgt = piece.basis(n + 1);
            for (j, m) in src.monomials.iter().enumerate() {
                assert!(m.wordlength_in(&fiber) >= 2);
                assert_eq!(m.wordlength_in(&base), 1);
                // m = b·f with b a single base generator; expect (-1)^{|b|} b·d̄(f)
                let (g, _, f) = m.split_first().unwrap();
                let df = c.d_monomial(&f).retain(|t| t.wordlength_in(&base) == 0);
                let sign = if a.is_odd(g) { -1 } else { 1 };
                let expect = df.left_mul_monomial(&Monomial::generator(g), &crate::Rational::from_integer(sign.into()));
                let col = cc.differential(n as i32).unwrap().column(j).clone();
                assert_eq!(col, piece.coordinates(&expect, &tgt));
            }
        }
    }

    #[test]
    fn lower_bound_violation_is_reported() {
        // d(w) = z has fiber wordlength 0, so Λ^{≥1}_W is not a subcomplex
        let a = GradedAlgebra::new([("z", 3), ("w", 2)]).unwrap();
        let c = KsComplex::from_named(&a, [("w", parse_element(&a, "z").unwrap())]).unwrap();
        let w = a.subset(["w"]).unwrap();
        let q = c.quotient(WordlengthFilter::at_least(w, 1));
        assert!(matches!(q.cochains(4), Err(Error::IllFormedWindow(_))));
    }

    #[test]
    fn projection_is_chain_map() {
        let c = example3();
        let full = c.full();
        let quot = c.quotient(WordlengthFilter::at_most(c.algebra().all(), 2));
        let p = full.projection_to(&quot, 10);
        p.validate(&full.cochains(10).unwrap(), &quot.cochains(10).unwrap())
            .unwrap();
    }
}
