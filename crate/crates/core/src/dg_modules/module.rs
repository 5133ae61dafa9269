use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use num::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graded::{AlgebraElement, GradedAlgebra, Monomial, WordlengthFilter};
use crate::linalg::{Cochains, RationalMatrix, SparseVector};
use crate::sullivan::KsComplex;
use crate::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModuleGenerator {
    pub name: String,
    pub degree: i32,
    /// Stage in the semifree filtration, when one exists.
    pub stage: Option<usize>,
}

/// `Σ a_j u_j` with `a_j` in the algebra; zero components are not stored.
#[derive(Clone, PartialEq, Eq)]
pub struct ModuleElement {
    components: BTreeMap<usize, AlgebraElement>,
}

impl ModuleElement {
    pub fn zero() -> Self {
        Self {
            components: BTreeMap::new(),
        }
    }

    pub fn from_components(components: impl IntoIterator<Item = (usize, AlgebraElement)>) -> Self {
        let mut out = Self::zero();
        for (j, a) in components {
            out.add_component(j, &a);
        }
        out
    }

    pub fn component(&self, j: usize) -> Option<&AlgebraElement> {
        self.components.get(&j)
    }

    pub fn components(&self) -> impl Iterator<Item = (usize, &AlgebraElement)> + '_ {
        self.components.iter().map(|(j, a)| (*j, a))
    }

    pub fn is_zero(&self) -> bool {
        self.components.is_empty()
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.components.keys().copied()
    }

    fn add_component(&mut self, j: usize, a: &AlgebraElement) {
        if a.is_zero() {
            return;
        }
        match self.components.get_mut(&j) {
            Some(x) => {
                *x = &*x + a;
                if x.is_zero() {
                    self.components.remove(&j);
                }
            }
            None => {
                self.components.insert(j, a.clone());
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (j, a) in &other.components {
            out.add_component(*j, a);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_components(self.components.iter().map(|(j, a)| (*j, a.scale(c))))
    }

    /// Relabels generator indices.
    pub fn shift(&self, offset: usize) -> Self {
        Self::from_components(self.components.iter().map(|(j, a)| (j + offset, a.clone())))
    }

    /// Components with generator index in `range`, relabelled from its start.
    pub fn restrict(&self, range: std::ops::Range<usize>) -> Self {
        Self::from_components(
            self.components
                .iter()
                .filter(|(j, _)| range.contains(j))
                .map(|(j, a)| (j - range.start, a.clone())),
        )
    }

    pub fn to_text(&self, module: &DGModule) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.components
            .iter()
            .map(|(j, a)| format!("({})·{}", a.to_text(), module.generators[*j].name))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl fmt::Debug for ModuleElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .components
            .iter()
            .map(|(j, a)| format!("({a})·u{j}"))
            .collect();
        write!(f, "{}", if parts.is_empty() { "0".into() } else { parts.join(" + ") })
    }
}

/// Basis of one degree: pairs `(generator, monomial)` with a reverse index.
#[derive(Clone, Debug)]
pub struct ModuleBasis {
    pub degree: i32,
    pub entries: Vec<(usize, Monomial)>,
    index: HashMap<(usize, Monomial), usize>,
}

impl ModuleBasis {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn position(&self, j: usize, m: &Monomial) -> Option<usize> {
        self.index.get(&(j, m.clone())).copied()
    }
}

/// A finite-rank DG module `A ⊗ U` over a KS complex `A`, optionally
/// truncated: generator `j` may carry an upper wordlength filter, in which case
/// the module is `⊕ (A/I_j)·u_j` with `I_j` the monomials the filter rejects.
#[derive(Clone, Debug)]
pub struct DGModule {
    algebra: KsComplex,
    generators: Vec<ModuleGenerator>,
    differential: Vec<ModuleElement>,
    truncation: Vec<Option<WordlengthFilter>>,
}

fn sign(odd: bool) -> Rational {
    if odd {
        -Rational::one()
    } else {
        Rational::one()
    }
}

impl DGModule {
    /// A semifree module; fails if the differential admits no filtration
    /// with `d(U(k)) ⊂ A ⊗ U(k-1)`.
    pub fn semifree<S: Into<String>>(
        algebra: &KsComplex,
        generators: impl IntoIterator<Item = (S, i32)>,
        differential: Vec<ModuleElement>,
    ) -> Result<Self> {
        let m = Self::with_truncation(algebra, generators, differential, Vec::new())?;
        if let Some(g) = m.generators.iter().find(|g| g.stage.is_none()) {
            return Err(Error::InvalidModule(format!(
                "generator {} is not reached by a semifree filtration",
                g.name
            )));
        }
        Ok(m)
    }

    /// A module with per-generator upper wordlength truncations. Entries of
    /// `truncation` past its length default to none.
    pub fn with_truncation<S: Into<String>>(
        algebra: &KsComplex,
        generators: impl IntoIterator<Item = (S, i32)>,
        differential: Vec<ModuleElement>,
        mut truncation: Vec<Option<WordlengthFilter>>,
    ) -> Result<Self> {
        let mut generators: Vec<ModuleGenerator> = generators
            .into_iter()
            .map(|(name, degree)| ModuleGenerator {
                name: name.into(),
                degree,
                stage: None,
            })
            .collect();
        let r = generators.len();
        if differential.len() != r {
            return Err(Error::Shape(format!("{} differentials for {r} generators", differential.len())));
        }
        truncation.resize(r, None);
        if let Some(f) = truncation.iter().flatten().find(|f| !f.is_upper_only()) {
            return Err(Error::InvalidModule(format!("truncation {f:?} has a lower bound")));
        }
        let mut out = Self {
            algebra: algebra.clone(),
            generators: generators.clone(),
            differential: Vec::new(),
            truncation,
        };
        let mut d = Vec::with_capacity(r);
        for (j, x) in differential.into_iter().enumerate() {
            if let Some(k) = x.support().find(|&k| k >= r) {
                return Err(Error::Shape(format!("d of generator {j} refers to generator {k}")));
            }
            let x = out.reduce(&x);
            if let Some(deg) = out
                .degrees(&x)
                .into_iter()
                .find(|&deg| deg != generators[j].degree + 1)
            {
                return Err(Error::InvalidModule(format!(
                    "d({}) has a term of degree {deg}, expected {}",
                    generators[j].name,
                    generators[j].degree + 1
                )));
            }
            d.push(x);
        }
        // greedy semifree filtration
        let mut k = 0;
        loop {
            let absorbed: Vec<usize> = (0..r)
                .filter(|&j| generators[j].stage.is_none())
                .filter(|&j| d[j].support().all(|i| generators[i].stage.is_some_and(|s| s < k)))
                .collect();
            if absorbed.is_empty() {
                break;
            }
            for j in absorbed {
                generators[j].stage = Some(k);
            }
            k += 1;
        }
        out.generators = generators;
        out.differential = d;
        Ok(out)
    }

    pub fn algebra(&self) -> &KsComplex {
        &self.algebra
    }

    fn graded(&self) -> &Arc<GradedAlgebra> {
        self.algebra.algebra()
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    pub fn generators(&self) -> &[ModuleGenerator] {
        &self.generators
    }

    pub fn generator(&self, j: usize) -> &ModuleGenerator {
        &self.generators[j]
    }

    pub fn truncation(&self, j: usize) -> Option<&WordlengthFilter> {
        self.truncation[j].as_ref()
    }

    pub fn is_truncated(&self) -> bool {
        self.truncation.iter().any(Option::is_some)
    }

    pub fn is_semifree(&self) -> bool {
        !self.is_truncated() && self.generators.iter().all(|g| g.stage.is_some())
    }

    pub fn generator_differential(&self, j: usize) -> &ModuleElement {
        &self.differential[j]
    }

    /// Generator indices sorted by stage, then degree, then index.
    pub fn stage_order(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.rank()).collect();
        order.sort_by_key(|&j| (self.generators[j].stage, self.generators[j].degree, j));
        order
    }

    pub fn bottom_degree(&self) -> i32 {
        self.generators.iter().map(|g| g.degree).min().unwrap_or(0)
    }

    pub fn unit(&self, j: usize) -> ModuleElement {
        ModuleElement::from_components([(j, AlgebraElement::one(self.graded()))])
    }

    pub fn element(&self, components: impl IntoIterator<Item = (usize, AlgebraElement)>) -> ModuleElement {
        self.reduce(&ModuleElement::from_components(components))
    }

    /// Drops the terms lying in the truncation ideals.
    pub fn reduce(&self, x: &ModuleElement) -> ModuleElement {
        ModuleElement::from_components(x.components().map(|(j, a)| match &self.truncation[j] {
            Some(f) => (j, a.truncate(f)),
            None => (j, a.clone()),
        }))
    }

    pub fn degrees(&self, x: &ModuleElement) -> Vec<i32> {
        let mut out: Vec<i32> = x
            .components()
            .flat_map(|(j, a)| {
                let g = self.generators[j].degree;
                a.degrees().into_iter().map(move |d| d as i32 + g)
            })
            .collect();
        out.sort();
        out.dedup();
        out
    }

    /// `a · x`.
    pub fn act(&self, a: &AlgebraElement, x: &ModuleElement) -> ModuleElement {
        self.element(x.components().map(|(j, b)| (j, a * b)))
    }

    /// `(c·m) · x` for a single monomial.
    pub(crate) fn act_monomial(&self, m: &Monomial, c: &Rational, x: &ModuleElement) -> ModuleElement {
        self.element(x.components().map(|(j, b)| (j, b.left_mul_monomial(m, c))))
    }

    /// `d(Σ a_j u_j) = Σ d(a_j) u_j + (-1)^{|a_j|} a_j d(u_j)`.
    pub fn d(&self, x: &ModuleElement) -> ModuleElement {
        let algebra = self.graded();
        let mut out = ModuleElement::zero();
        for (j, a) in x.components() {
            let da = self.algebra.d(a);
            out = out.add(&ModuleElement::from_components([(j, da)]));
            for (m, c) in a.terms() {
                let s = sign(algebra.degree_of(m) % 2 == 1) * c;
                out = out.add(&self.act_monomial(m, &s, &self.differential[j]));
            }
        }
        self.reduce(&out)
    }

    /// `d²` on every generator.
    pub fn check_d_squared(&self) -> Result<()> {
        for j in 0..self.rank() {
            let dd = self.d(&self.differential[j]);
            if !dd.is_zero() {
                return Err(Error::InvalidModule(format!(
                    "d²({}) = {}",
                    self.generators[j].name,
                    dd.to_text(self)
                )));
            }
        }
        Ok(())
    }

    /// Checks through degree `cap` that `d` maps each truncation ideal into
    /// the module's ideal, so that the quotient is well defined.
    pub fn check_well_defined(&self, cap: i32) -> Result<()> {
        let algebra = self.graded();
        for (j, f) in self.truncation.iter().enumerate() {
            let Some(f) = f else { continue };
            let g = self.generators[j].degree;
            for n in g.max(0)..=cap {
                for m in algebra.basis((n - g) as usize, None) {
                    if f.accepts(&m) {
                        continue;
                    }
                    let dm = self.algebra.d_monomial(&m);
                    let s = sign(algebra.degree_of(&m) % 2 == 1);
                    let full = ModuleElement::from_components([(j, dm)])
                        .add(&ModuleElement::from_components(
                            self.differential[j]
                                .components()
                                .map(|(k, b)| (k, b.left_mul_monomial(&m, &s))),
                        ));
                    let rest = self.reduce(&full);
                    if !rest.is_zero() {
                        return Err(Error::InvalidModule(format!(
                            "d({}·{}) = {} leaves the truncation ideal",
                            algebra.format_monomial(&m),
                            self.generators[j].name,
                            rest.to_text(self)
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn basis(&self, degree: i32) -> ModuleBasis {
        let algebra = self.graded();
        let mut entries = Vec::new();
        for (j, g) in self.generators.iter().enumerate() {
            let a = degree - g.degree;
            if a < 0 {
                continue;
            }
            for m in algebra.basis(a as usize, self.truncation[j].as_ref()) {
                entries.push((j, m));
            }
        }
        let index = entries.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
        ModuleBasis {
            degree,
            entries,
            index,
        }
    }

    pub fn coordinates(&self, x: &ModuleElement, basis: &ModuleBasis) -> SparseVector {
        let mut v = SparseVector::new();
        for (j, a) in x.components() {
            for (m, c) in a.terms() {
                if let Some(i) = basis.position(j, m) {
                    v.add_to(i, c);
                }
            }
        }
        v
    }

    pub fn from_coordinates(&self, v: &SparseVector, basis: &ModuleBasis) -> ModuleElement {
        let algebra = self.graded();
        let mut by_gen: BTreeMap<usize, Vec<(Monomial, Rational)>> = BTreeMap::new();
        for (i, c) in v.iter() {
            let (j, m) = &basis.entries[i];
            by_gen.entry(*j).or_default().push((m.clone(), c.clone()));
        }
        ModuleElement::from_components(
            by_gen
                .into_iter()
                .map(|(j, terms)| (j, AlgebraElement::from_terms(algebra, terms))),
        )
    }

    pub fn basis_element(&self, basis: &ModuleBasis, i: usize) -> ModuleElement {
        let (j, m) = &basis.entries[i];
        ModuleElement::from_components([(*j, AlgebraElement::from_monomial(self.graded(), m.clone(), Rational::one()))])
    }

    /// Matrix of `d` from degree `n` to `n + 1`.
    pub fn differential_matrix(&self, source: &ModuleBasis, target: &ModuleBasis) -> RationalMatrix {
        let cols = (0..source.len())
            .map(|i| self.coordinates(&self.d(&self.basis_element(source, i)), target))
            .collect();
        RationalMatrix::from_columns(target.len(), cols).expect("coordinates lie in the target basis")
    }

    /// Matrix of `x ↦ a·x` from `source` to `target`.
    pub fn action_matrix(&self, a: &AlgebraElement, source: &ModuleBasis, target: &ModuleBasis) -> RationalMatrix {
        let cols = (0..source.len())
            .map(|i| self.coordinates(&self.act(a, &self.basis_element(source, i)), target))
            .collect();
        RationalMatrix::from_columns(target.len(), cols).expect("coordinates lie in the target basis")
    }

    /// Cochains in degrees `lo..=hi` together with their bases.
    pub fn cochains(&self, lo: i32, hi: i32) -> Result<(Cochains, Vec<ModuleBasis>)> {
        if hi < lo {
            return Err(Error::Shape(format!("empty window [{lo}, {hi}]")));
        }
        let bases: Vec<ModuleBasis> = (lo..=hi).map(|n| self.basis(n)).collect();
        let diffs = bases
            .windows(2)
            .map(|w| self.differential_matrix(&w[0], &w[1]))
            .collect();
        let c = Cochains::new(lo, bases.iter().map(ModuleBasis::len).collect(), diffs)?;
        if let Err(k) = c.check_d_squared() {
            return Err(Error::InvalidModule(format!("d² ≠ 0 from degree {k}")));
        }
        Ok((c, bases))
    }

    /// Number of basis elements per degree in `lo..=hi`.
    pub fn dimensions(&self, lo: i32, hi: i32) -> Vec<usize> {
        (lo..=hi).map(|n| self.basis(n).len()).collect()
    }

    pub fn describe(&self) -> Vec<String> {
        self.generators
            .iter()
            .enumerate()
            .map(|(j, g)| {
                let trunc = match &self.truncation[j] {
                    Some(f) => format!(" mod {f:?}"),
                    None => String::new(),
                };
                format!(
                    "{} (deg {}, stage {}){trunc}: d = {}",
                    g.name,
                    g.degree,
                    g.stage.map_or("-".into(), |s| s.to_string()),
                    self.differential[j].to_text(self)
                )
            })
            .collect()
    }
}

impl Zero for ModuleElement {
    fn zero() -> Self {
        ModuleElement::zero()
    }

    fn is_zero(&self) -> bool {
        self.components.is_empty()
    }
}

impl std::ops::Add for ModuleElement {
    type Output = ModuleElement;

    fn add(self, rhs: Self) -> Self {
        ModuleElement::add(&self, &rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::parse_element;

    fn poly() -> KsComplex {
        let a = GradedAlgebra::new([("z", 2)]).unwrap();
        KsComplex::from_named(&a, []).unwrap()
    }

    #[test]
    fn truncated_rank_one() {
        let c = poly();
        let a = c.algebra().clone();
        let m = DGModule::with_truncation(
            &c,
            [("e", 0)],
            vec![ModuleElement::zero()],
            vec![Some(WordlengthFilter::at_most(a.all(), 1))],
        )
        .unwrap();
        assert_eq!(m.dimensions(0, 6), vec![1, 0, 1, 0, 0, 0, 0]);
        m.check_well_defined(8).unwrap();
        assert!(!m.is_semifree());
    }

    #[test]
    fn koszul_resolution_of_the_residue_field() {
        let c = poly();
        let a = c.algebra().clone();
        let z = parse_element(&a, "z").unwrap();
        let m = DGModule::semifree(
            &c,
            [("e", 0), ("t", 1)],
            vec![ModuleElement::zero(), ModuleElement::from_components([(0, z)])],
        )
        .unwrap();
        m.check_d_squared().unwrap();
        assert_eq!(m.generator(1).stage, Some(1));
        let (cc, _) = m.cochains(0, 6).unwrap();
        let h = crate::linalg::cohomology(&cc, 0, 5).unwrap();
        assert_eq!(h.dims(), vec![1, 0, 0, 0, 0, 0]);
    }

    #[test]
    fn odd_action_sign() {
        // A = Λ(x:1, y:1), dy = 0; module d(t) = x·e, check d(y t) = -y x e
        let a = GradedAlgebra::new([("x", 1), ("y", 1)]).unwrap();
        let c = KsComplex::from_named(&a, []).unwrap();
        let x = parse_element(&a, "x").unwrap();
        let y = parse_element(&a, "y").unwrap();
        let m = DGModule::semifree(
            &c,
            [("e", 0), ("t", 0)],
            vec![ModuleElement::zero(), ModuleElement::from_components([(0, x.clone())])],
        )
        .unwrap();
        let yt = m.element([(1, y.clone())]);
        let expect = m.element([(0, -(&y * &x))]);
        assert_eq!(m.d(&yt), expect);
    }

    #[test]
    fn bad_truncation_is_rejected() {
        // dw = z with z truncated away from w's component is not an ideal map
        let a = GradedAlgebra::new([("z", 3), ("w", 2)]).unwrap();
        let c = KsComplex::from_named(&a, [("w", parse_element(&a, "z").unwrap())]).unwrap();
        let w = a.subset(["w"]).unwrap();
        let m = DGModule::with_truncation(
            &c,
            [("e", 0)],
            vec![ModuleElement::zero()],
            vec![Some(WordlengthFilter::at_most(w, 0))],
        )
        .unwrap();
        assert!(m.check_well_defined(4).is_err());
    }
}
