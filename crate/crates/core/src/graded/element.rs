use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num::{One, Signed, Zero};

use super::{GradedAlgebra, Monomial, WordlengthFilter};
use crate::error::{Error, Result};
use crate::Rational;

/// A sparse rational linear combination of canonical monomials of `ΛV`.
///
/// Elements keep a handle on their algebra; arithmetic between elements of
/// different algebras is an error (`try_*`) or a panic (operators).
#[derive(Clone)]
pub struct AlgebraElement {
    algebra: Arc<GradedAlgebra>,
    terms: BTreeMap<Monomial, Rational>,
}

impl PartialEq for AlgebraElement {
    fn eq(&self, other: &Self) -> bool {
        same_algebra(&self.algebra, &other.algebra) && self.terms == other.terms
    }
}

impl Eq for AlgebraElement {}

pub(crate) fn same_algebra(a: &Arc<GradedAlgebra>, b: &Arc<GradedAlgebra>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl AlgebraElement {
    pub fn zero(algebra: &Arc<GradedAlgebra>) -> Self {
        Self {
            algebra: Arc::clone(algebra),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(algebra: &Arc<GradedAlgebra>) -> Self {
        Self::from_monomial(algebra, Monomial::one(), Rational::one())
    }

    pub fn generator(algebra: &Arc<GradedAlgebra>, index: usize) -> Self {
        Self::from_monomial(algebra, Monomial::generator(index), Rational::one())
    }

    /// Looks a generator up by name.
    pub fn named(algebra: &Arc<GradedAlgebra>, name: &str) -> Result<Self> {
        let index = algebra
            .index_of(name)
            .ok_or_else(|| Error::InvalidGenerator(format!("unknown generator `{name}`")))?;
        Ok(Self::generator(algebra, index))
    }

    /// `c · m`; a monomial squaring an odd generator gives zero.
    pub fn from_monomial(algebra: &Arc<GradedAlgebra>, monomial: Monomial, coefficient: Rational) -> Self {
        let mut e = Self::zero(algebra);
        if algebra.is_valid_monomial(&monomial) {
            e.add_term(monomial, coefficient);
        }
        e
    }

    pub fn from_terms(
        algebra: &Arc<GradedAlgebra>,
        terms: impl IntoIterator<Item = (Monomial, Rational)>,
    ) -> Self {
        let mut e = Self::zero(algebra);
        for (m, c) in terms {
            if algebra.is_valid_monomial(&m) {
                e.add_term(m, c);
            }
        }
        e
    }

    pub(crate) fn add_term(&mut self, monomial: Monomial, coefficient: Rational) {
        if coefficient.is_zero() {
            return;
        }
        match self.terms.entry(monomial) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coefficient);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coefficient;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn algebra(&self) -> &Arc<GradedAlgebra> {
        &self.algebra
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Rational> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<Monomial, Rational> {
        self.terms
    }

    pub fn coefficient(&self, monomial: &Monomial) -> Rational {
        self.terms.get(monomial).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The set of degrees of the monomials present.
    pub fn degrees(&self) -> BTreeSet<usize> {
        self.terms.keys().map(|m| self.algebra.degree_of(m)).collect()
    }

    /// The degree when the element is homogeneous and nonzero.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let degrees = self.degrees();
        if degrees.len() == 1 {
            degrees.into_iter().next()
        } else {
            None
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.algebra);
        }
        Self {
            algebra: Arc::clone(&self.algebra),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if same_algebra(&self.algebra, &other.algebra) {
            Ok(())
        } else {
            Err(Error::MixedAlgebras)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    /// Graded-commutative product.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = Self::zero(&self.algebra);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                if let Some((m, negative)) = self.algebra.multiply_monomials(ma, mb) {
                    let c = ca * cb;
                    out.add_term(m, if negative { -c } else { c });
                }
            }
        }
        Ok(out)
    }

    /// Product with a single monomial on the left, `m · self`.
    pub fn left_mul_monomial(&self, monomial: &Monomial, coefficient: &Rational) -> Self {
        let mut out = Self::zero(&self.algebra);
        for (mb, cb) in &self.terms {
            if let Some((m, negative)) = self.algebra.multiply_monomials(monomial, mb) {
                let c = coefficient * cb;
                out.add_term(m, if negative { -c } else { c });
            }
        }
        out
    }

    pub fn pow(&self, exponent: u32) -> Self {
        let mut out = Self::one(&self.algebra);
        for _ in 0..exponent {
            out = &out * self;
        }
        out
    }

    /// Drops every term rejected by `filter`.
    pub fn truncate(&self, filter: &WordlengthFilter) -> Self {
        self.retain(|m| filter.accepts(m))
    }

    pub fn retain(&self, mut keep: impl FnMut(&Monomial) -> bool) -> Self {
        Self {
            algebra: Arc::clone(&self.algebra),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(m))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Re-expresses the element over `target`, sending generator `i` of this
    /// algebra to `map(i)`. Terms that touch an unmapped generator are dropped.
    pub fn transport(&self, target: &Arc<GradedAlgebra>, map: impl Fn(usize) -> Option<usize>) -> Self {
        let mut out = Self::zero(target);
        for (m, c) in &self.terms {
            if let Some(m2) = m.reindex(&map) {
                out.add_term(m2, c.clone());
            }
        }
        out
    }

    /// Canonical text form, e.g. `1 * u^2 - 1/2 * x`.
    pub fn to_text(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            match (k, negative) {
                (0, true) => s.push('-'),
                (0, false) => {}
                (_, true) => s.push_str(" - "),
                (_, false) => s.push_str(" + "),
            }
            s.push_str(&c.abs().to_string());
            if !m.is_one() {
                s.push_str(" * ");
                s.push_str(&self.algebra.format_monomial(m));
            }
        }
        s
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlgebraElement({})", self.to_text())
    }
}

impl Add for &AlgebraElement {
    type Output = AlgebraElement;
    fn add(self, rhs: Self) -> AlgebraElement {
        self.try_add(rhs).expect("elements of different algebras")
    }
}

impl Sub for &AlgebraElement {
    type Output = AlgebraElement;
    fn sub(self, rhs: Self) -> AlgebraElement {
        self.try_sub(rhs).expect("elements of different algebras")
    }
}

impl Mul for &AlgebraElement {
    type Output = AlgebraElement;
    fn mul(self, rhs: Self) -> AlgebraElement {
        self.try_mul(rhs).expect("elements of different algebras")
    }
}

impl Neg for &AlgebraElement {
    type Output = AlgebraElement;
    fn neg(self) -> AlgebraElement {
        self.scale(&-Rational::one())
    }
}

impl Add for AlgebraElement {
    type Output = AlgebraElement;
    fn add(self, rhs: Self) -> AlgebraElement {
        &self + &rhs
    }
}

impl Sub for AlgebraElement {
    type Output = AlgebraElement;
    fn sub(self, rhs: Self) -> AlgebraElement {
        &self - &rhs
    }
}

impl Mul for AlgebraElement {
    type Output = AlgebraElement;
    fn mul(self, rhs: Self) -> AlgebraElement {
        &self * &rhs
    }
}

impl Neg for AlgebraElement {
    type Output = AlgebraElement;
    fn neg(self) -> AlgebraElement {
        -&self
    }
}
