use std::cmp::Ordering;
use std::fmt;

use super::filter::GeneratorSet;

/// A monomial in the free graded-commutative algebra, stored as a sparse list
/// of `(generator index, exponent)` pairs sorted by generator index.
///
/// The list order is the canonical factor order: the monomial `x_0^2 x_3` is
/// the product taken left to right in increasing index, and every Koszul sign
/// in the crate is measured against that order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    factors: Vec<(usize, u32)>,
}

impl Monomial {
    /// The unit monomial `1`.
    pub fn one() -> Self {
        Self::default()
    }

    pub fn generator(index: usize) -> Self {
        Self {
            factors: vec![(index, 1)],
        }
    }

    /// Builds a monomial from arbitrary `(index, exponent)` pairs. Repeated
    /// indices are merged and zero exponents dropped. No sign or parity check
    /// happens here; use [`GradedAlgebra::multiply_monomials`] for products.
    ///
    /// [`GradedAlgebra::multiply_monomials`]: super::GradedAlgebra::multiply_monomials
    pub fn from_exponents(pairs: impl IntoIterator<Item = (usize, u32)>) -> Self {
        let mut factors: Vec<(usize, u32)> = Vec::new();
        let mut pairs: Vec<_> = pairs.into_iter().filter(|&(_, e)| e > 0).collect();
        pairs.sort_unstable_by_key(|&(i, _)| i);
        for (i, e) in pairs {
            match factors.last_mut() {
                Some((j, f)) if *j == i => *f += e,
                _ => factors.push((i, e)),
            }
        }
        Self { factors }
    }

    pub(crate) fn from_sorted(factors: Vec<(usize, u32)>) -> Self {
        debug_assert!(factors.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(factors.iter().all(|&(_, e)| e > 0));
        Self { factors }
    }

    pub fn factors(&self) -> &[(usize, u32)] {
        &self.factors
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn exponent(&self, index: usize) -> u32 {
        self.factors
            .binary_search_by_key(&index, |&(i, _)| i)
            .map(|pos| self.factors[pos].1)
            .unwrap_or(0)
    }

    /// Total number of generator factors.
    pub fn wordlength(&self) -> usize {
        self.factors.iter().map(|&(_, e)| e as usize).sum()
    }

    /// Number of factors drawn from `set`.
    pub fn wordlength_in(&self, set: &GeneratorSet) -> usize {
        self.factors
            .iter()
            .filter(|(i, _)| set.contains(*i))
            .map(|&(_, e)| e as usize)
            .sum()
    }

    /// True when every factor lies in `set`.
    pub fn supported_in(&self, set: &GeneratorSet) -> bool {
        self.factors.iter().all(|(i, _)| set.contains(*i))
    }

    /// Splits off the lowest-index factor as `(index, exponent, rest)`.
    pub(crate) fn split_first(&self) -> Option<(usize, u32, Monomial)> {
        let (&(i, e), rest) = self.factors.split_first()?;
        Some((i, e, Monomial::from_sorted(rest.to_vec())))
    }

    /// Renames generator indices through `map`; factors mapped to `None`
    /// make the whole result `None`.
    pub(crate) fn reindex(&self, map: impl Fn(usize) -> Option<usize>) -> Option<Monomial> {
        let mut pairs = Vec::with_capacity(self.factors.len());
        for &(i, e) in &self.factors {
            pairs.push((map(i)?, e));
        }
        Some(Monomial::from_exponents(pairs))
    }
}

impl Ord for Monomial {
    /// Canonical monomial order: by wordlength, then lexicographically on the
    /// factor list.
    fn cmp(&self, other: &Self) -> Ordering {
        self.wordlength()
            .cmp(&other.wordlength())
            .then_with(|| self.factors.cmp(&other.factors))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Displays with placeholder names `x0, x1, …`; algebra-aware printing lives
/// on [`super::AlgebraElement`].
impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        for (k, &(i, e)) in self.factors.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            write!(f, "x{i}")?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}
