use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::Monomial;

/// A subset of generator indices of one algebra.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GeneratorSet(BTreeSet<usize>);

impl GeneratorSet {
    pub fn new(indices: impl IntoIterator<Item = usize>) -> Self {
        Self(indices.into_iter().collect())
    }

    /// All of `0..count`.
    pub fn all(count: usize) -> Self {
        Self((0..count).collect())
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn contains(&self, index: usize) -> bool {
        self.0.contains(&index)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn is_subset(&self, other: &GeneratorSet) -> bool {
        self.0.is_subset(&other.0)
    }

    /// Indices of `0..count` not in `self`.
    pub fn complement(&self, count: usize) -> Self {
        Self((0..count).filter(|i| !self.0.contains(i)).collect())
    }
}

impl FromIterator<usize> for GeneratorSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        Self::new(iter)
    }
}

/// A bound `min ≤ wordlength_S ≤ max` on the wordlength counted in `set`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WordlengthBound {
    pub set: GeneratorSet,
    pub min: usize,
    pub max: Option<usize>,
}

impl WordlengthBound {
    pub fn accepts(&self, monomial: &Monomial) -> bool {
        let w = monomial.wordlength_in(&self.set);
        w >= self.min && self.max.is_none_or(|m| w <= m)
    }
}

/// Conjunction of wordlength bounds. The empty filter accepts everything.
///
/// A single bound is the common case (`Λ^{≤m}V`, `Λ^{≥q}W`, windows
/// `[q, r]`); bigraded pieces such as `Λ^{p}Z ⊗ Λ^{≥q}W` use two bounds on
/// disjoint sets.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WordlengthFilter {
    bounds: Vec<WordlengthBound>,
}

impl WordlengthFilter {
    pub fn none() -> Self {
        Self::default()
    }

    pub fn at_most(set: GeneratorSet, max: usize) -> Self {
        Self::window(set, 0, Some(max))
    }

    pub fn at_least(set: GeneratorSet, min: usize) -> Self {
        Self::window(set, min, None)
    }

    pub fn exactly(set: GeneratorSet, wordlength: usize) -> Self {
        Self::window(set, wordlength, Some(wordlength))
    }

    pub fn window(set: GeneratorSet, min: usize, max: Option<usize>) -> Self {
        Self {
            bounds: vec![WordlengthBound { set, min, max }],
        }
    }

    /// Adds the bounds of `other` to `self`.
    pub fn and(mut self, other: WordlengthFilter) -> Self {
        self.bounds.extend(other.bounds);
        self
    }

    pub fn bounds(&self) -> &[WordlengthBound] {
        &self.bounds
    }

    pub fn is_trivial(&self) -> bool {
        self.bounds.iter().all(|b| b.min == 0 && b.max.is_none())
    }

    /// True when the filter only imposes upper bounds, i.e. it describes the
    /// complement of a monomial ideal.
    pub fn is_upper_only(&self) -> bool {
        self.bounds.iter().all(|b| b.min == 0)
    }

    pub fn accepts(&self, monomial: &Monomial) -> bool {
        self.bounds.iter().all(|b| b.accepts(monomial))
    }

    /// Lower bound imposed on the wordlength counted in exactly `set`, if any.
    pub fn lower_bound_on(&self, set: &GeneratorSet) -> usize {
        self.bounds
            .iter()
            .filter(|b| &b.set == set)
            .map(|b| b.min)
            .max()
            .unwrap_or(0)
    }
}
