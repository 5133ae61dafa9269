use std::fmt;

use num::Zero;

use super::echelon::{EchelonBasis, Insertion};
use super::vector::SparseVector;
use crate::error::{Error, Result};
use crate::Rational;

/// Column order used when choosing pivot columns in a solve.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum PivotOrder {
    /// Leftmost columns first.
    #[default]
    Forward,
    /// Rightmost columns first.
    Reverse,
}

/// Result of [`RationalMatrix::preimage`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Preimage {
    Solution(SparseVector),
    /// No solution exists; `certificate` is a `y` with `yᵀM = 0` and `yᵀt ≠ 0`.
    Inconsistent { certificate: SparseVector },
}

impl Preimage {
    pub fn solution(self) -> Option<SparseVector> {
        match self {
            Preimage::Solution(x) => Some(x),
            Preimage::Inconsistent { .. } => None,
        }
    }
}

/// A sparse `rows × cols` matrix over ℚ stored by columns.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalMatrix {
    rows: usize,
    columns: Vec<SparseVector>,
}

impl RationalMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            columns: vec![SparseVector::new(); cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            rows: n,
            columns: (0..n).map(SparseVector::unit).collect(),
        }
    }

    /// Builds from columns; entries at row indices `≥ rows` are an error.
    pub fn from_columns(rows: usize, columns: Vec<SparseVector>) -> Result<Self> {
        if let Some(bad) = columns.iter().filter_map(|c| c.max_index()).find(|&i| i >= rows) {
            return Err(Error::Shape(format!("row index {bad} out of range for {rows} rows")));
        }
        Ok(Self { rows, columns })
    }

    /// Builds from a dense row-major table.
    pub fn from_rows(rows: &[Vec<Rational>]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Shape("ragged rows".into()));
        }
        let mut m = Self::zero(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            for (j, c) in r.iter().enumerate() {
                m.set(i, j, c.clone());
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    pub fn get(&self, row: usize, col: usize) -> Rational {
        self.columns[col].get(row)
    }

    pub fn set(&mut self, row: usize, col: usize, value: Rational) {
        assert!(row < self.rows, "row out of range");
        self.columns[col].set(row, value);
    }

    pub fn column(&self, col: usize) -> &SparseVector {
        &self.columns[col]
    }

    pub fn columns(&self) -> &[SparseVector] {
        &self.columns
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(|c| c.nnz()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(|c| c.is_zero())
    }

    pub fn to_dense(&self) -> Vec<Vec<Rational>> {
        let mut out = vec![vec![Rational::zero(); self.cols()]; self.rows];
        for (j, c) in self.columns.iter().enumerate() {
            for (i, x) in c.iter() {
                out[i][j] = x.clone();
            }
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let mut columns = vec![SparseVector::new(); self.rows];
        for (j, c) in self.columns.iter().enumerate() {
            for (i, x) in c.iter() {
                columns[i].set(j, x.clone());
            }
        }
        Self {
            rows: self.cols(),
            columns,
        }
    }

    pub fn apply(&self, x: &SparseVector) -> SparseVector {
        let mut out = SparseVector::new();
        for (j, c) in x.iter() {
            if j < self.columns.len() {
                out.axpy(c, &self.columns[j]);
            }
        }
        out
    }

    /// Product `self · other`.
    pub fn mul(&self, other: &RationalMatrix) -> Result<Self> {
        if self.cols() != other.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows,
                self.cols(),
                other.rows,
                other.cols()
            )));
        }
        Ok(Self {
            rows: self.rows,
            columns: other.columns.iter().map(|c| self.apply(c)).collect(),
        })
    }

    pub fn sub(&self, other: &RationalMatrix) -> Result<Self> {
        if self.rows != other.rows || self.cols() != other.cols() {
            return Err(Error::Shape("matrices of different shapes".into()));
        }
        Ok(Self {
            rows: self.rows,
            columns: self
                .columns
                .iter()
                .zip(&other.columns)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    /// Stacks `self` above `other`.
    pub fn vstack(&self, other: &RationalMatrix) -> Result<Self> {
        if self.cols() != other.cols() {
            return Err(Error::Shape("vstack of different widths".into()));
        }
        let shift = self.rows;
        Ok(Self {
            rows: self.rows + other.rows,
            columns: self
                .columns
                .iter()
                .zip(&other.columns)
                .map(|(a, b)| {
                    let mut c = a.clone();
                    for (i, x) in b.iter() {
                        c.set(i + shift, x.clone());
                    }
                    c
                })
                .collect(),
        })
    }

    /// Echelon form of the column space, columns labelled by index.
    pub fn column_echelon(&self) -> (EchelonBasis, Vec<Insertion>) {
        let mut e = EchelonBasis::new();
        let outcomes = self
            .columns
            .iter()
            .enumerate()
            .map(|(j, c)| e.insert(c, j))
            .collect();
        (e, outcomes)
    }

    pub fn rank(&self) -> usize {
        self.column_echelon().0.rank()
    }

    /// A basis of `{x : Mx = 0}`, one vector per non-pivot column with that
    /// column's coefficient equal to 1.
    pub fn kernel_basis(&self) -> Vec<SparseVector> {
        self.column_echelon()
            .1
            .into_iter()
            .filter_map(|o| match o {
                Insertion::Dependent { relation } => Some(relation),
                Insertion::Independent { .. } => None,
            })
            .collect()
    }

    /// The original columns that are independent of the columns to their left.
    pub fn image_basis(&self) -> Vec<SparseVector> {
        self.column_echelon()
            .1
            .iter()
            .enumerate()
            .filter(|(_, o)| matches!(o, Insertion::Independent { .. }))
            .map(|(j, _)| self.columns[j].clone())
            .collect()
    }

    /// Indices of the pivot columns under the leftmost-first rule.
    pub fn pivot_columns(&self) -> Vec<usize> {
        self.column_echelon()
            .1
            .iter()
            .enumerate()
            .filter(|(_, o)| matches!(o, Insertion::Independent { .. }))
            .map(|(j, _)| j)
            .collect()
    }

    /// Solves `Mx = target`. The solution is supported on the pivot columns.
    pub fn preimage(&self, target: &SparseVector) -> Preimage {
        self.preimage_ordered(target, PivotOrder::Forward)
    }

    pub fn preimage_ordered(&self, target: &SparseVector, order: PivotOrder) -> Preimage {
        let n = self.cols();
        let perm = |j: usize| match order {
            PivotOrder::Forward => j,
            PivotOrder::Reverse => n - 1 - j,
        };
        let mut e = EchelonBasis::new();
        for k in 0..n {
            e.insert(&self.columns[perm(k)], perm(k));
        }
        let red = e.reduce(target);
        if red.residual.is_zero() {
            return Preimage::Solution(red.combination);
        }
        let certificate = self
            .transpose()
            .kernel_basis()
            .into_iter()
            .find(|y| !y.dot(target).is_zero())
            .expect("an inconsistent system has a separating left-kernel vector");
        Preimage::Inconsistent { certificate }
    }
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RationalMatrix {}x{} [", self.rows, self.cols())?;
        for row in self.to_dense() {
            let cells: Vec<String> = row.iter().map(|c| c.to_string()).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        write!(f, "]")
    }
}
