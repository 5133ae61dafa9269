use std::collections::HashMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::{GeneratorSet, Monomial, WordlengthFilter};
use crate::error::{Error, Result};

/// A generator of `V`. Odd generators square to zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Generator {
    pub name: String,
    pub degree: u32,
    pub index: usize,
}

impl Generator {
    pub fn is_odd(&self) -> bool {
        self.degree % 2 == 1
    }
}

/// The free graded-commutative algebra `ΛV` on an ordered list of
/// positive-degree generators.
#[derive(Debug, Clone)]
pub struct GradedAlgebra {
    generators: Vec<Generator>,
    by_name: HashMap<String, usize>,
}

impl PartialEq for GradedAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.generators == other.generators
    }
}

impl Eq for GradedAlgebra {}

pub(crate) fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl GradedAlgebra {
    /// Builds the algebra from `(name, degree)` pairs in declaration order.
    ///
    /// Degree-0 generators are rejected, as are duplicate or malformed names.
    pub fn new<S: Into<String>>(generators: impl IntoIterator<Item = (S, u32)>) -> Result<Arc<Self>> {
        let mut gens = Vec::new();
        let mut by_name = HashMap::new();
        for (index, (name, degree)) in generators.into_iter().enumerate() {
            let name = name.into();
            if !is_identifier(&name) {
                return Err(Error::InvalidGenerator(format!("`{name}` is not an identifier")));
            }
            if degree == 0 {
                return Err(Error::InvalidGenerator(format!(
                    "`{name}` has degree 0; generators must have positive degree"
                )));
            }
            if by_name.insert(name.clone(), index).is_some() {
                return Err(Error::InvalidGenerator(format!("duplicate name `{name}`")));
            }
            gens.push(Generator { name, degree, index });
        }
        Ok(Arc::new(Self {
            generators: gens,
            by_name,
        }))
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn generator(&self, index: usize) -> &Generator {
        &self.generators[index]
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.by_name.get(name).copied()
    }

    pub fn all(&self) -> GeneratorSet {
        GeneratorSet::all(self.len())
    }

    /// Resolves a list of names into a generator set.
    pub fn subset<'a>(&self, names: impl IntoIterator<Item = &'a str>) -> Result<GeneratorSet> {
        names
            .into_iter()
            .map(|n| {
                self.index_of(n)
                    .ok_or_else(|| Error::InvalidGenerator(format!("unknown generator `{n}`")))
            })
            .collect()
    }

    pub fn is_odd(&self, index: usize) -> bool {
        self.generators[index].is_odd()
    }

    pub fn degree_of(&self, monomial: &Monomial) -> usize {
        monomial
            .factors()
            .iter()
            .map(|&(i, e)| self.generators[i].degree as usize * e as usize)
            .sum()
    }

    pub fn is_valid_monomial(&self, monomial: &Monomial) -> bool {
        monomial
            .factors()
            .iter()
            .all(|&(i, e)| i < self.len() && (e == 1 || !self.is_odd(i)))
    }

    /// Product of two canonical monomials. Returns `None` when the product
    /// vanishes (a repeated odd generator) and otherwise the canonical
    /// monomial with `true` when the Koszul sign is negative.
    ///
    /// The sign counts transpositions of odd factors: each odd factor of `b`
    /// moves left past every odd factor of `a` with a larger index.
    pub fn multiply_monomials(&self, a: &Monomial, b: &Monomial) -> Option<(Monomial, bool)> {
        let mut negative = false;
        for &(j, _) in b.factors() {
            if !self.is_odd(j) {
                continue;
            }
            for &(i, _) in a.factors() {
                if i == j {
                    return None;
                }
                if i > j && self.is_odd(i) {
                    negative = !negative;
                }
            }
        }
        let mut merged = Vec::with_capacity(a.factors().len() + b.factors().len());
        let (mut p, mut q) = (0, 0);
        let (fa, fb) = (a.factors(), b.factors());
        while p < fa.len() || q < fb.len() {
            match (fa.get(p), fb.get(q)) {
                (Some(&(i, e)), Some(&(j, f))) if i == j => {
                    merged.push((i, e + f));
                    p += 1;
                    q += 1;
                }
                (Some(&(i, e)), Some(&(j, _))) if i < j => {
                    merged.push((i, e));
                    p += 1;
                }
                (Some(_), Some(&(j, f))) => {
                    merged.push((j, f));
                    q += 1;
                }
                (Some(&(i, e)), None) => {
                    merged.push((i, e));
                    p += 1;
                }
                (None, Some(&(j, f))) => {
                    merged.push((j, f));
                    q += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        Some((Monomial::from_sorted(merged), negative))
    }

    /// All monomials of total degree `degree` accepted by `filter`, in
    /// canonical order.
    pub fn basis(&self, degree: usize, filter: Option<&WordlengthFilter>) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        self.enumerate(0, degree, &mut current, filter, &mut out);
        out.sort();
        out
    }

    fn enumerate(
        &self,
        index: usize,
        remaining: usize,
        current: &mut Vec<(usize, u32)>,
        filter: Option<&WordlengthFilter>,
        out: &mut Vec<Monomial>,
    ) {
        if let Some(f) = filter {
            // prune on upper bounds already exceeded
            let partial = Monomial::from_sorted(current.clone());
            let exceeded = f.bounds().iter().any(|b| {
                b.max
                    .is_some_and(|m| partial.wordlength_in(&b.set) > m)
            });
            if exceeded {
                return;
            }
        }
        if remaining == 0 {
            let m = Monomial::from_sorted(current.clone());
            if filter.is_none_or(|f| f.accepts(&m)) {
                out.push(m);
            }
            return;
        }
        if index == self.len() {
            return;
        }
        let g = &self.generators[index];
        let deg = g.degree as usize;
        let max_exp = if g.is_odd() { 1 } else { remaining / deg };
        for e in 0..=max_exp.min(remaining / deg) {
            if e > 0 {
                current.push((index, e as u32));
            }
            self.enumerate(index + 1, remaining - e * deg, current, filter, out);
            if e > 0 {
                current.pop();
            }
        }
    }

    /// Name of a monomial in this algebra, e.g. `u^2*v`.
    pub fn format_monomial(&self, monomial: &Monomial) -> String {
        if monomial.is_one() {
            return "1".to_string();
        }
        monomial
            .factors()
            .iter()
            .map(|&(i, e)| {
                let name = &self.generators[i].name;
                if e == 1 {
                    name.clone()
                } else {
                    format!("{name}^{e}")
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}
