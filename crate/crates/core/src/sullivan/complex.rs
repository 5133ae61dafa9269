use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use num::One;
use serde::Serialize;

use super::quotient::{QuotientComplex, Region};
use crate::error::{Error, Result};
use crate::graded::{AlgebraElement, GradedAlgebra, Monomial, WordlengthFilter};
use crate::Rational;

/// A free graded-commutative algebra `ΛV` with a derivation `d` of degree +1,
/// given by its values on generators.
///
/// Construction checks homogeneity only. Whether `d² = 0` and whether a
/// Sullivan filtration exists are separate checks, so malformed inputs can be
/// loaded and reported on.
#[derive(Clone)]
pub struct KsComplex {
    algebra: Arc<GradedAlgebra>,
    differential: Vec<AlgebraElement>,
    cache: Arc<Mutex<HashMap<Monomial, AlgebraElement>>>,
}

impl std::fmt::Debug for KsComplex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut m = f.debug_map();
        for g in self.algebra.generators() {
            m.entry(&g.name, &self.differential[g.index].to_text());
        }
        m.finish()
    }
}

/// Outcome of [`KsComplex::check_d_squared`].
#[derive(Clone, Debug, Serialize)]
pub struct DSquaredReport {
    pub pass: bool,
    /// Generators `g` with `d(d(g)) ≠ 0`, with the residue.
    pub offenders: Vec<(String, String)>,
    pub degree_cap: usize,
    /// First basis monomial (degree, text) with `d(d(m)) ≠ 0`, from the
    /// full-basis cross-check.
    pub basis_offender: Option<(usize, String)>,
}

/// Stage of each generator in the greedily detected Sullivan filtration.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SullivanFiltration {
    pub stages: Vec<usize>,
}

impl SullivanFiltration {
    pub fn depth(&self) -> usize {
        self.stages.iter().copied().max().map_or(0, |s| s + 1)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinimalityReport {
    pub minimal: bool,
    /// `(generator, linear term)` pairs obstructing minimality.
    pub witnesses: Vec<(String, String)>,
}

impl KsComplex {
    /// `differential[i]` is `d` of generator `i`.
    pub fn new(algebra: &Arc<GradedAlgebra>, differential: Vec<AlgebraElement>) -> Result<Self> {
        if differential.len() != algebra.len() {
            return Err(Error::Shape(format!(
                "{} differentials for {} generators",
                differential.len(),
                algebra.len()
            )));
        }
        for (g, dg) in algebra.generators().iter().zip(&differential) {
            if !crate::graded::same_algebra(dg.algebra(), algebra) {
                return Err(Error::MixedAlgebras);
            }
            let expected = g.degree as usize + 1;
            if !dg.is_zero() && dg.homogeneous_degree() != Some(expected) {
                return Err(Error::InhomogeneousDifferential {
                    generator: g.name.clone(),
                    expected,
                });
            }
        }
        Ok(Self {
            algebra: Arc::clone(algebra),
            differential,
            cache: Arc::default(),
        })
    }

    /// Generators missing from `differential` get `d = 0`.
    pub fn from_named<'a>(
        algebra: &Arc<GradedAlgebra>,
        differential: impl IntoIterator<Item = (&'a str, AlgebraElement)>,
    ) -> Result<Self> {
        let mut d = vec![AlgebraElement::zero(algebra); algebra.len()];
        for (name, e) in differential {
            let i = algebra
                .index_of(name)
                .ok_or_else(|| Error::InvalidGenerator(format!("unknown generator `{name}`")))?;
            d[i] = e;
        }
        Self::new(algebra, d)
    }

    pub fn algebra(&self) -> &Arc<GradedAlgebra> {
        &self.algebra
    }

    pub fn generator_differential(&self, index: usize) -> &AlgebraElement {
        &self.differential[index]
    }

    pub fn max_generator_degree(&self) -> usize {
        self.algebra
            .generators()
            .iter()
            .map(|g| g.degree as usize)
            .max()
            .unwrap_or(0)
    }

    /// `d` of a single monomial, extended from generators by the Leibniz rule.
    pub fn d_monomial(&self, monomial: &Monomial) -> AlgebraElement {
        if let Some(hit) = self.cache.lock().unwrap().get(monomial) {
            return hit.clone();
        }
        let value = self.d_monomial_uncached(monomial);
        self.cache
            .lock()
            .unwrap()
            .insert(monomial.clone(), value.clone());
        value
    }

    fn d_monomial_uncached(&self, monomial: &Monomial) -> AlgebraElement {
        let a = &self.algebra;
        let Some((g, e, rest)) = monomial.split_first() else {
            return AlgebraElement::zero(a);
        };
        let dg = &self.differential[g];
        // d(g^e) = e g^{e-1} dg for even g; odd g only appear with e = 1
        let head = Monomial::from_exponents([(g, e)]);
        let d_head = if e == 1 {
            dg.clone()
        } else {
            dg.left_mul_monomial(
                &Monomial::from_exponents([(g, e - 1)]),
                &Rational::from_integer(e.into()),
            )
        };
        let rest_el = AlgebraElement::from_monomial(a, rest.clone(), Rational::one());
        let mut out = &d_head * &rest_el;
        if !rest.is_one() {
            let sign = if a.degree_of(&head) % 2 == 1 {
                -Rational::one()
            } else {
                Rational::one()
            };
            out = &out + &self.d_monomial(&rest).left_mul_monomial(&head, &sign);
        }
        out
    }

    /// `d(a)`.
    pub fn d(&self, a: &AlgebraElement) -> AlgebraElement {
        let mut out = AlgebraElement::zero(&self.algebra);
        for (m, c) in a.terms() {
            out = &out + &self.d_monomial(m).scale(c);
        }
        out
    }

    /// Checks `d(d(g)) = 0` on generators, then on every basis monomial of
    /// degree `≤ degree_cap` as a cross-check.
    pub fn check_d_squared(&self, degree_cap: usize) -> DSquaredReport {
        let mut offenders = Vec::new();
        for g in self.algebra.generators() {
            let dd = self.d(&self.differential[g.index]);
            if !dd.is_zero() {
                offenders.push((g.name.clone(), dd.to_text()));
            }
        }
        let mut basis_offender = None;
        'outer: for n in 0..=degree_cap {
            for m in self.algebra.basis(n, None) {
                let dd = self.d(&self.d_monomial(&m));
                if !dd.is_zero() {
                    basis_offender = Some((n, self.algebra.format_monomial(&m)));
                    break 'outer;
                }
            }
        }
        DSquaredReport {
            pass: offenders.is_empty() && basis_offender.is_none(),
            offenders,
            degree_cap,
            basis_offender,
        }
    }

    /// Greedy closure: stage 0 holds the generators with `d = 0`, stage `k`
    /// those whose differential lies in the subalgebra on stages `< k`.
    pub fn check_sullivan(&self) -> Result<SullivanFiltration> {
        let n = self.algebra.len();
        let mut stage: Vec<Option<usize>> = vec![None; n];
        let mut k = 0;
        loop {
            let absorbed: Vec<usize> = (0..n)
                .filter(|&i| stage[i].is_none())
                .filter(|&i| {
                    self.differential[i].terms().keys().all(|m| {
                        m.factors()
                            .iter()
                            .all(|&(j, _)| stage[j].is_some_and(|s| s < k))
                    })
                })
                .collect();
            if absorbed.is_empty() {
                break;
            }
            for i in absorbed {
                stage[i] = Some(k);
            }
            k += 1;
        }
        let missing: Vec<String> = (0..n)
            .filter(|&i| stage[i].is_none())
            .map(|i| self.algebra.generator(i).name.clone())
            .collect();
        if !missing.is_empty() {
            return Err(Error::NotSullivan(missing));
        }
        Ok(SullivanFiltration {
            stages: stage.into_iter().map(|s| s.unwrap()).collect(),
        })
    }

    /// Minimal iff every `d(g)` lies in `Λ^{≥2}V`.
    pub fn check_minimal(&self) -> MinimalityReport {
        let mut witnesses = Vec::new();
        for g in self.algebra.generators() {
            for (m, c) in self.differential[g.index].terms() {
                if m.wordlength() < 2 {
                    let t = AlgebraElement::from_monomial(&self.algebra, m.clone(), c.clone());
                    witnesses.push((g.name.clone(), t.to_text()));
                }
            }
        }
        MinimalityReport {
            minimal: witnesses.is_empty(),
            witnesses,
        }
    }

    /// The degree form of minimality for KS complexes, `dV^n ⊂ Λ(V^{≤n})`.
    /// With every generator in positive degree this agrees with
    /// [`check_minimal`](Self::check_minimal); it is reported, not used.
    pub fn check_degree_minimal(&self) -> MinimalityReport {
        let mut witnesses = Vec::new();
        for g in self.algebra.generators() {
            for (m, c) in self.differential[g.index].terms() {
                if m
                    .factors()
                    .iter()
                    .any(|&(j, _)| self.algebra.generator(j).degree > g.degree)
                {
                    let t = AlgebraElement::from_monomial(&self.algebra, m.clone(), c.clone());
                    witnesses.push((g.name.clone(), t.to_text()));
                }
            }
        }
        MinimalityReport {
            minimal: witnesses.is_empty(),
            witnesses,
        }
    }

    /// The whole complex as a (trivial) quotient.
    pub fn full(&self) -> QuotientComplex {
        QuotientComplex::new(self.clone(), Region::Filter(WordlengthFilter::none()))
    }

    /// `ΛV` modulo the monomials rejected by `filter`.
    pub fn quotient(&self, filter: WordlengthFilter) -> QuotientComplex {
        QuotientComplex::new(self.clone(), Region::Filter(filter))
    }

    /// Table of `d` on all basis monomials of degree `≤ cap`, as text lines
    /// `d(m) = ...`, skipping zeros.
    pub fn differential_table(&self, cap: usize) -> Vec<(usize, String, String)> {
        let mut out = Vec::new();
        for n in 0..=cap {
            for m in self.algebra.basis(n, None) {
                let dm = self.d_monomial(&m);
                if !dm.is_zero() {
                    out.push((n, self.algebra.format_monomial(&m), dm.to_text()));
                }
            }
        }
        out
    }

    /// Drops the memoised values of `d` on monomials.
    pub fn clear_cache(&self) {
        self.cache.lock().unwrap().clear();
    }
}

impl PartialEq for KsComplex {
    fn eq(&self, other: &Self) -> bool {
        *self.algebra == *other.algebra && self.differential == other.differential
    }
}
