use std::collections::BTreeMap;

use num::{BigInt, Integer, Signed, Zero};

use super::vector::SparseVector;
use crate::Rational;

#[derive(Clone, Debug)]
struct Row {
    vec: BTreeMap<usize, BigInt>,
    comb: BTreeMap<usize, BigInt>,
}

impl Row {
    fn normalize(&mut self) {
        let g = self
            .vec
            .values()
            .chain(self.comb.values())
            .fold(BigInt::zero(), |g, x| g.gcd(x));
        if g.is_zero() || g == BigInt::from(1) {
            return;
        }
        for x in self.vec.values_mut().chain(self.comb.values_mut()) {
            *x = &*x / &g;
        }
    }

    /// `self := (β/g)·self − (α/g)·other` where α, β are the entries at `pivot`.
    fn eliminate(&mut self, pivot: usize, other: &Row) {
        let alpha = match self.vec.get(&pivot) {
            Some(a) => a.clone(),
            None => return,
        };
        let beta = &other.vec[&pivot];
        let g = alpha.gcd(beta);
        let (a, b) = (&alpha / &g, beta / &g);
        for map in [&mut self.vec, &mut self.comb] {
            for x in map.values_mut() {
                *x = &*x * &b;
            }
        }
        axpy_int(&mut self.vec, &-a.clone(), &other.vec);
        axpy_int(&mut self.comb, &-a, &other.comb);
        self.normalize();
    }
}

fn axpy_int(target: &mut BTreeMap<usize, BigInt>, c: &BigInt, source: &BTreeMap<usize, BigInt>) {
    for (&i, x) in source {
        let entry = target.entry(i).or_insert_with(BigInt::zero);
        *entry += c * x;
        if entry.is_zero() {
            target.remove(&i);
        }
    }
}

/// Outcome of [`EchelonBasis::insert`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Insertion {
    /// The vector was independent and now owns the given pivot position.
    Independent { pivot: usize },
    /// The vector is a combination of earlier inputs. The relation
    /// `Σ c_l · input_l = 0` is returned over input labels with the
    /// coefficient of the new label equal to 1.
    Dependent { relation: SparseVector },
}

/// Residual of a full reduction together with `v = residual + Σ c_l input_l`.
#[derive(Clone, Debug)]
pub struct Reduction {
    pub residual: SparseVector,
    pub combination: SparseVector,
}

/// Incremental fraction-free row echelon form.
///
/// Rows are kept as primitive integer vectors; each elimination step is a
/// cross-multiplication followed by division by the row content, so entries
/// stay integral without ever forming fractions. Every stored row also records
/// which combination of the labelled inputs produced it. Pivots are always the
/// leftmost nonzero position.
#[derive(Clone, Debug, Default)]
pub struct EchelonBasis {
    rows: BTreeMap<usize, Row>,
    inputs: usize,
}

impl EchelonBasis {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Number of vectors inserted so far.
    pub fn inputs(&self) -> usize {
        self.inputs
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    /// Inserts `v` under `label`.
    pub fn insert(&mut self, v: &SparseVector, label: usize) -> Insertion {
        self.inputs += 1;
        let lcm = v
            .iter()
            .fold(BigInt::from(1), |l, (_, c)| l.lcm(c.denom()));
        let mut row = Row {
            vec: v
                .iter()
                .map(|(i, c)| (i, c.numer() * (&lcm / c.denom())))
                .collect(),
            comb: BTreeMap::from([(label, lcm)]),
        };
        row.normalize();
        loop {
            let lead = match row.vec.keys().next() {
                Some(&p) => p,
                None => {
                    let c = Rational::from_integer(row.comb[&label].clone());
                    let relation = row
                        .comb
                        .iter()
                        .map(|(&l, x)| (l, Rational::from_integer(x.clone()) / &c))
                        .collect();
                    return Insertion::Dependent { relation };
                }
            };
            match self.rows.get(&lead) {
                Some(other) => row.eliminate(lead, other),
                None => {
                    content_sign_normalize_row(&mut row);
                    self.rows.insert(lead, row);
                    return Insertion::Independent { pivot: lead };
                }
            }
        }
    }

    /// Reduces `v` against every pivot, leftmost first.
    pub fn reduce(&self, v: &SparseVector) -> Reduction {
        let mut residual = v.clone();
        let mut combination = SparseVector::new();
        let mut cursor = 0usize;
        loop {
            let next = residual
                .iter()
                .map(|(i, _)| i)
                .find(|i| *i >= cursor && self.rows.contains_key(i));
            let Some(p) = next else { break };
            let row = &self.rows[&p];
            let factor = residual.get(p) / Rational::from_integer(row.vec[&p].clone());
            for (&i, x) in &row.vec {
                residual.add_to(i, &(-&factor * Rational::from_integer(x.clone())));
            }
            for (&l, x) in &row.comb {
                combination.add_to(l, &(&factor * Rational::from_integer(x.clone())));
            }
            cursor = p + 1;
        }
        Reduction {
            residual,
            combination,
        }
    }

    pub fn contains(&self, v: &SparseVector) -> bool {
        self.reduce(v).residual.is_zero()
    }
}

fn content_sign_normalize_row(row: &mut Row) {
    // keep the pivot entry positive: flip vec and comb together
    if row.vec.values().next().is_some_and(|x| x.is_negative()) {
        for x in row.vec.values_mut().chain(row.comb.values_mut()) {
            *x = -&*x;
        }
    }
}
