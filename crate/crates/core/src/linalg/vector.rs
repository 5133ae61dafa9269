use std::collections::BTreeMap;
use std::ops::{Add, Sub};

use num::{One, Zero};

use crate::Rational;

/// A sparse rational vector indexed by `usize`. Zero entries are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SparseVector(BTreeMap<usize, Rational>);

impl SparseVector {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn unit(index: usize) -> Self {
        let mut v = Self::new();
        v.set(index, Rational::one());
        v
    }

    pub fn from_dense(entries: &[Rational]) -> Self {
        entries
            .iter()
            .enumerate()
            .map(|(i, c)| (i, c.clone()))
            .collect()
    }

    pub fn to_dense(&self, len: usize) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); len];
        for (&i, c) in &self.0 {
            if i < len {
                out[i] = c.clone();
            }
        }
        out
    }

    pub fn get(&self, index: usize) -> Rational {
        self.0.get(&index).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn set(&mut self, index: usize, value: Rational) {
        if value.is_zero() {
            self.0.remove(&index);
        } else {
            self.0.insert(index, value);
        }
    }

    pub fn add_to(&mut self, index: usize, value: &Rational) {
        if value.is_zero() {
            return;
        }
        let entry = self.0.entry(index).or_insert_with(Rational::zero);
        *entry += value;
        if entry.is_zero() {
            self.0.remove(&index);
        }
    }

    /// `self += c · other`.
    pub fn axpy(&mut self, c: &Rational, other: &SparseVector) {
        if c.is_zero() {
            return;
        }
        for (&i, x) in &other.0 {
            self.add_to(i, &(c * x));
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::new();
        }
        Self(self.0.iter().map(|(&i, x)| (i, x * c)).collect())
    }

    pub fn dot(&self, other: &SparseVector) -> Rational {
        let (small, large) = if self.0.len() <= other.0.len() {
            (self, other)
        } else {
            (other, self)
        };
        small
            .0
            .iter()
            .filter_map(|(i, x)| large.0.get(i).map(|y| x * y))
            .fold(Rational::zero(), |acc, t| acc + t)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.0.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Rational)> + '_ {
        self.0.iter().map(|(&i, c)| (i, c))
    }

    pub fn leading(&self) -> Option<(usize, &Rational)> {
        self.0.iter().next().map(|(&i, c)| (i, c))
    }

    pub fn max_index(&self) -> Option<usize> {
        self.0.keys().next_back().copied()
    }

    /// Rescales so the first nonzero entry equals 1.
    pub fn normalized(&self) -> Self {
        match self.leading() {
            Some((_, c)) => {
                let inv = c.recip();
                self.scale(&inv)
            }
            None => Self::new(),
        }
    }

    /// Reindexes entries through `map`; entries mapped to `None` are dropped.
    pub fn remap(&self, map: impl Fn(usize) -> Option<usize>) -> Self {
        let mut out = Self::new();
        for (&i, c) in &self.0 {
            if let Some(j) = map(i) {
                out.add_to(j, c);
            }
        }
        out
    }
}

impl FromIterator<(usize, Rational)> for SparseVector {
    fn from_iter<T: IntoIterator<Item = (usize, Rational)>>(iter: T) -> Self {
        let mut v = Self::new();
        for (i, c) in iter {
            v.add_to(i, &c);
        }
        v
    }
}

impl Add for &SparseVector {
    type Output = SparseVector;
    fn add(self, rhs: Self) -> SparseVector {
        let mut out = self.clone();
        out.axpy(&Rational::one(), rhs);
        out
    }
}

impl Sub for &SparseVector {
    type Output = SparseVector;
    fn sub(self, rhs: Self) -> SparseVector {
        let mut out = self.clone();
        out.axpy(&-Rational::one(), rhs);
        out
    }
}
