use std::collections::BTreeMap;

use super::echelon::EchelonBasis;
use super::matrix::{Preimage, RationalMatrix};
use super::vector::SparseVector;
use crate::error::{Error, Result};

/// A finite stretch of a cochain complex: spaces `C^k` for `k` in
/// `lowest ..= top` and differentials `d_k : C^k → C^{k+1}` for `k < top`.
/// Every space below `lowest` is zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochains {
    lowest: i32,
    dims: Vec<usize>,
    differentials: Vec<RationalMatrix>,
}

impl Cochains {
    /// `differentials[i]` is `d` from degree `lowest + i`; there must be one
    /// fewer differential than spaces.
    pub fn new(lowest: i32, dims: Vec<usize>, differentials: Vec<RationalMatrix>) -> Result<Self> {
        if dims.is_empty() || differentials.len() + 1 != dims.len() {
            return Err(Error::Shape(format!(
                "{} spaces need {} differentials, got {}",
                dims.len(),
                dims.len().saturating_sub(1),
                differentials.len()
            )));
        }
        for (i, d) in differentials.iter().enumerate() {
            if d.cols() != dims[i] || d.rows() != dims[i + 1] {
                return Err(Error::Shape(format!(
                    "d in degree {} is {}x{}, expected {}x{}",
                    lowest + i as i32,
                    d.rows(),
                    d.cols(),
                    dims[i + 1],
                    dims[i]
                )));
            }
        }
        Ok(Self {
            lowest,
            dims,
            differentials,
        })
    }

    pub fn lowest(&self) -> i32 {
        self.lowest
    }

    /// Highest degree whose space is known.
    pub fn top(&self) -> i32 {
        self.lowest + self.dims.len() as i32 - 1
    }

    pub fn dim(&self, degree: i32) -> usize {
        if degree < self.lowest || degree > self.top() {
            0
        } else {
            self.dims[(degree - self.lowest) as usize]
        }
    }

    /// `d : C^degree → C^{degree+1}`, `None` when `degree + 1` is past the top.
    pub fn differential(&self, degree: i32) -> Option<RationalMatrix> {
        if degree >= self.top() {
            return None;
        }
        if degree < self.lowest {
            return Some(RationalMatrix::zero(self.dim(degree + 1), 0));
        }
        Some(self.differentials[(degree - self.lowest) as usize].clone())
    }

    fn differential_ref(&self, degree: i32) -> Option<&RationalMatrix> {
        if degree < self.lowest || degree >= self.top() {
            None
        } else {
            Some(&self.differentials[(degree - self.lowest) as usize])
        }
    }

    /// Checks `d ∘ d = 0` throughout; returns the first offending degree.
    pub fn check_d_squared(&self) -> std::result::Result<(), i32> {
        for k in self.lowest..self.top() - 1 {
            let a = self.differential_ref(k).unwrap();
            let b = self.differential_ref(k + 1).unwrap();
            if !b.mul(a).expect("shapes checked at construction").is_zero() {
                return Err(k);
            }
        }
        Ok(())
    }

    /// Euler characteristic of `C^a ..= C^b`.
    pub fn euler_characteristic(&self, a: i32, b: i32) -> i64 {
        (a..=b)
            .map(|k| {
                let sign = if k.rem_euclid(2) == 0 { 1 } else { -1 };
                sign * self.dim(k) as i64
            })
            .sum()
    }
}

/// Cohomology in a single degree.
#[derive(Clone, Debug)]
pub struct DegreeCohomology {
    pub degree: i32,
    pub cochain_dim: usize,
    /// Representative cocycles of a basis of `H^degree`.
    pub representatives: Vec<SparseVector>,
    /// An independent spanning set of the coboundaries.
    pub coboundaries: Vec<SparseVector>,
    incoming: RationalMatrix,
    echelon: EchelonBasis,
}

impl DegreeCohomology {
    pub fn dim(&self) -> usize {
        self.representatives.len()
    }

    /// Coordinates of the class of `v` in the representative basis, or `None`
    /// when `v` is not a cocycle.
    pub fn class_of(&self, v: &SparseVector) -> Option<SparseVector> {
        let red = self.echelon.reduce(v);
        if !red.residual.is_zero() {
            return None;
        }
        let nb = self.coboundaries.len();
        Some(red.combination.remap(|l| l.checked_sub(nb)))
    }

    /// Some `y` with `dy = v`, if `v` is a coboundary.
    pub fn primitive(&self, v: &SparseVector) -> Option<SparseVector> {
        match self.incoming.preimage(v) {
            Preimage::Solution(y) => Some(y),
            Preimage::Inconsistent { .. } => None,
        }
    }

    pub fn is_coboundary(&self, v: &SparseVector) -> bool {
        self.class_of(v).is_some_and(|c| c.is_zero())
    }
}

/// Cohomology of a [`Cochains`] in a window `[a, b]`.
#[derive(Clone, Debug)]
pub struct CohomologyWindow {
    pub low: i32,
    pub high: i32,
    degrees: Vec<DegreeCohomology>,
}

impl CohomologyWindow {
    pub fn degree(&self, k: i32) -> Option<&DegreeCohomology> {
        if k < self.low || k > self.high {
            None
        } else {
            self.degrees.get((k - self.low) as usize)
        }
    }

    pub fn dim(&self, k: i32) -> usize {
        self.degree(k).map_or(0, |d| d.dim())
    }

    pub fn dims(&self) -> Vec<usize> {
        self.degrees.iter().map(|d| d.dim()).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = &DegreeCohomology> + '_ {
        self.degrees.iter()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.degrees
            .iter()
            .map(|d| {
                let sign = if d.degree.rem_euclid(2) == 0 { 1 } else { -1 };
                sign * d.dim() as i64
            })
            .sum()
    }
}

/// Cohomology of `complex` in degrees `a..=b`.
///
/// Representatives are the cocycle kernel basis reduced against the
/// coboundaries (and against earlier representatives), scaled to leading
/// coefficient 1.
pub fn cohomology(complex: &Cochains, a: i32, b: i32) -> Result<CohomologyWindow> {
    if b >= complex.top() {
        return Err(Error::CapShortfall {
            needed: b as i64 + 1,
            cap: complex.top() as i64,
        });
    }
    let mut degrees = Vec::new();
    for k in a..=b {
        let n = complex.dim(k);
        let out = complex.differential(k).expect("k < top");
        let incoming = if k - 1 < complex.lowest() {
            RationalMatrix::zero(n, 0)
        } else {
            complex.differential(k - 1).expect("k - 1 < top")
        };
        let coboundaries = incoming.image_basis();
        let mut echelon = EchelonBasis::new();
        for (l, c) in coboundaries.iter().enumerate() {
            echelon.insert(c, l);
        }
        let mut representatives = Vec::new();
        for z in out.kernel_basis() {
            let r = echelon.reduce(&z).residual;
            if !r.is_zero() {
                let r = r.normalized();
                echelon.insert(&r, coboundaries.len() + representatives.len());
                representatives.push(r);
            }
        }
        degrees.push(DegreeCohomology {
            degree: k,
            cochain_dim: n,
            representatives,
            coboundaries,
            incoming,
            echelon,
        });
    }
    Ok(CohomologyWindow {
        low: a,
        high: b,
        degrees,
    })
}

/// A degree-preserving map of cochains, one matrix per degree.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ChainMap {
    pub matrices: BTreeMap<i32, RationalMatrix>,
}

impl ChainMap {
    pub fn new(matrices: BTreeMap<i32, RationalMatrix>) -> Self {
        Self { matrices }
    }

    pub fn identity(complex: &Cochains) -> Self {
        Self::new(
            (complex.lowest()..=complex.top())
                .map(|k| (k, RationalMatrix::identity(complex.dim(k))))
                .collect(),
        )
    }

    pub fn at(&self, degree: i32) -> Option<&RationalMatrix> {
        self.matrices.get(&degree)
    }

    /// Checks shapes and `d ∘ f = f ∘ d` wherever both sides are known.
    pub fn validate(&self, source: &Cochains, target: &Cochains) -> Result<()> {
        for (&k, f) in &self.matrices {
            if f.cols() != source.dim(k) || f.rows() != target.dim(k) {
                return Err(Error::Shape(format!(
                    "chain map in degree {k} is {}x{}, expected {}x{}",
                    f.rows(),
                    f.cols(),
                    target.dim(k),
                    source.dim(k)
                )));
            }
        }
        for (&k, f) in &self.matrices {
            let (Some(g), Some(ds), Some(dt)) = (
                self.matrices.get(&(k + 1)),
                source.differential(k),
                target.differential(k),
            ) else {
                continue;
            };
            let lhs = dt.mul(f)?;
            let rhs = g.mul(&ds)?;
            if lhs != rhs {
                return Err(Error::NotChainMap(format!("d∘f ≠ f∘d in degree {k}")));
            }
        }
        Ok(())
    }

    /// `self ∘ other`, on the degrees where both are defined.
    pub fn compose(&self, other: &ChainMap) -> Result<ChainMap> {
        let mut out = BTreeMap::new();
        for (&k, g) in &other.matrices {
            if let Some(f) = self.matrices.get(&k) {
                out.insert(k, f.mul(g)?);
            }
        }
        Ok(ChainMap::new(out))
    }
}

/// The map induced on cohomology in one degree.
#[derive(Clone, Debug)]
pub struct DegreeMap {
    pub degree: i32,
    /// Column `j` is the class of the image of source representative `j`.
    pub matrix: RationalMatrix,
    pub injective: bool,
    pub surjective: bool,
    /// Kernel as coordinate vectors in the source representative basis.
    pub kernel: Vec<SparseVector>,
}

/// Per-degree matrices of `H(f)` over the common window.
#[derive(Clone, Debug)]
pub struct InducedMap {
    pub degrees: BTreeMap<i32, DegreeMap>,
}

impl InducedMap {
    pub fn injective(&self) -> bool {
        self.degrees.values().all(|d| d.injective)
    }

    pub fn surjective(&self) -> bool {
        self.degrees.values().all(|d| d.surjective)
    }

    pub fn isomorphism(&self) -> bool {
        self.injective() && self.surjective()
    }
}

/// Computes `H(f)` between two windows. `f` must already be a chain map.
pub fn induced_map(source: &CohomologyWindow, target: &CohomologyWindow, f: &ChainMap) -> Result<InducedMap> {
    let mut degrees = BTreeMap::new();
    for hs in source.iter() {
        let k = hs.degree;
        let Some(ht) = target.degree(k) else { continue };
        let Some(fk) = f.at(k) else { continue };
        let mut columns = Vec::with_capacity(hs.dim());
        for r in &hs.representatives {
            let image = fk.apply(r);
            let class = ht.class_of(&image).ok_or_else(|| {
                Error::NotChainMap(format!("image of a cocycle in degree {k} is not a cocycle"))
            })?;
            columns.push(class);
        }
        let matrix = RationalMatrix::from_columns(ht.dim(), columns)?;
        let rank = matrix.rank();
        degrees.insert(
            k,
            DegreeMap {
                degree: k,
                injective: rank == hs.dim(),
                surjective: rank == ht.dim(),
                kernel: matrix.kernel_basis(),
                matrix,
            },
        );
    }
    Ok(InducedMap { degrees })
}

/// Combination `Σ c_j rep_j` in cochain coordinates.
pub fn cocycle_from_class(degree: &DegreeCohomology, coordinates: &SparseVector) -> SparseVector {
    let mut out = SparseVector::new();
    for (j, c) in coordinates.iter() {
        out.axpy(c, &degree.representatives[j]);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    /// 0 → ℚ --2--> ℚ → 0 in degrees 0, 1 and a free ℚ in degree 2.
    fn small() -> Cochains {
        let d0 = RationalMatrix::from_rows(&[vec![q(2)]]).unwrap();
        let d1 = RationalMatrix::zero(1, 1);
        let d2 = RationalMatrix::zero(0, 1);
        Cochains::new(0, vec![1, 1, 1, 0], vec![d0, d1, d2]).unwrap()
    }

    #[test]
    fn acyclic_pair_and_free_class() {
        let c = small();
        c.check_d_squared().unwrap();
        let h = cohomology(&c, 0, 2).unwrap();
        assert_eq!(h.dims(), vec![0, 0, 1]);
        assert_eq!(h.euler_characteristic(), c.euler_characteristic(0, 2));
        assert!(cohomology(&c, 0, 3).is_err());
    }

    #[test]
    fn identity_induces_identity() {
        let c = small();
        let h = cohomology(&c, 0, 2).unwrap();
        let id = ChainMap::identity(&c);
        id.validate(&c, &c).unwrap();
        let m = induced_map(&h, &h, &id).unwrap();
        assert!(m.isomorphism());
        assert_eq!(m.degrees[&2].matrix, RationalMatrix::identity(1));
    }

    #[test]
    fn zero_map_kills_class() {
        let c = small();
        let h = cohomology(&c, 0, 2).unwrap();
        let zero = ChainMap::new((0..=3).map(|k| (k, RationalMatrix::zero(c.dim(k), c.dim(k)))).collect());
        zero.validate(&c, &c).unwrap();
        let m = induced_map(&h, &h, &zero).unwrap();
        assert!(!m.degrees[&2].injective);
        assert_eq!(m.degrees[&2].kernel.len(), 1);
        let d2 = h.degree(2).unwrap();
        let w = cocycle_from_class(d2, &m.degrees[&2].kernel[0]);
        assert_eq!(d2.class_of(&w), Some(SparseVector::unit(0)));
    }
}
