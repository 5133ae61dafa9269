use std::collections::BTreeMap;
use std::sync::Arc;

use num::One;

use super::module::{DGModule, ModuleBasis, ModuleElement};
use crate::error::{Error, Result};
use crate::linalg::{ChainMap, RationalMatrix};
use crate::Rational;

/// An `A`-linear map of degree `k` given by the images of generators, with
/// `φ(a·x) = (-1)^{k|a|} a·φ(x)`.
#[derive(Clone, Debug)]
pub struct ModuleMorphism {
    source: Arc<DGModule>,
    target: Arc<DGModule>,
    degree: i32,
    images: Vec<ModuleElement>,
}

impl ModuleMorphism {
    pub fn new(source: &Arc<DGModule>, target: &Arc<DGModule>, degree: i32, images: Vec<ModuleElement>) -> Result<Self> {
        if images.len() != source.rank() {
            return Err(Error::Shape(format!(
                "{} images for a module of rank {}",
                images.len(),
                source.rank()
            )));
        }
        let mut reduced = Vec::with_capacity(images.len());
        for (j, y) in images.iter().enumerate() {
            if let Some(k) = y.support().find(|&k| k >= target.rank()) {
                return Err(Error::Shape(format!("image of generator {j} refers to generator {k}")));
            }
            let y = target.reduce(y);
            let want = source.generator(j).degree + degree;
            if let Some(d) = target.degrees(&y).into_iter().find(|&d| d != want) {
                return Err(Error::Shape(format!(
                    "image of {} has degree {d}, expected {want}",
                    source.generator(j).name
                )));
            }
            reduced.push(y);
        }
        Ok(Self {
            source: Arc::clone(source),
            target: Arc::clone(target),
            degree,
            images: reduced,
        })
    }

    pub fn zero(source: &Arc<DGModule>, target: &Arc<DGModule>, degree: i32) -> Self {
        Self {
            source: Arc::clone(source),
            target: Arc::clone(target),
            degree,
            images: vec![ModuleElement::zero(); source.rank()],
        }
    }

    pub fn identity(module: &Arc<DGModule>) -> Self {
        Self {
            source: Arc::clone(module),
            target: Arc::clone(module),
            degree: 0,
            images: (0..module.rank()).map(|j| module.unit(j)).collect(),
        }
    }

    pub fn source(&self) -> &Arc<DGModule> {
        &self.source
    }

    pub fn target(&self) -> &Arc<DGModule> {
        &self.target
    }

    pub fn degree(&self) -> i32 {
        self.degree
    }

    pub fn images(&self) -> &[ModuleElement] {
        &self.images
    }

    pub fn image(&self, j: usize) -> &ModuleElement {
        &self.images[j]
    }

    pub(crate) fn set_image(&mut self, j: usize, y: ModuleElement) {
        self.images[j] = self.target.reduce(&y);
    }

    pub fn apply(&self, x: &ModuleElement) -> ModuleElement {
        let algebra = self.source.algebra().algebra();
        let odd_shift = self.degree.rem_euclid(2) == 1;
        let mut out = ModuleElement::zero();
        for (j, a) in x.components() {
            for (m, c) in a.terms() {
                let flip = odd_shift && algebra.degree_of(m) % 2 == 1;
                let c = if flip { -c.clone() } else { c.clone() };
                out = out.add(&self.target.act_monomial(m, &c, &self.images[j]));
            }
        }
        self.target.reduce(&out)
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &ModuleMorphism) -> Result<ModuleMorphism> {
        if !Arc::ptr_eq(&first.target, &self.source) && !same_shape(&first.target, &self.source) {
            return Err(Error::Shape("composition through different modules".into()));
        }
        let images = first.images.iter().map(|y| self.apply(y)).collect();
        ModuleMorphism::new(&first.source, &self.target, first.degree + self.degree, images)
    }

    pub fn add(&self, other: &ModuleMorphism) -> Result<ModuleMorphism> {
        self.combine(other, Rational::one())
    }

    pub fn sub(&self, other: &ModuleMorphism) -> Result<ModuleMorphism> {
        self.combine(other, -Rational::one())
    }

    fn combine(&self, other: &ModuleMorphism, c: Rational) -> Result<ModuleMorphism> {
        if self.degree != other.degree || self.images.len() != other.images.len() {
            return Err(Error::Shape("morphisms of different shape".into()));
        }
        let images = self
            .images
            .iter()
            .zip(&other.images)
            .map(|(a, b)| a.add(&b.scale(&c)))
            .collect();
        ModuleMorphism::new(&self.source, &self.target, self.degree, images)
    }

    pub fn scale(&self, c: &Rational) -> ModuleMorphism {
        Self {
            images: self.images.iter().map(|y| y.scale(c)).collect(),
            ..self.clone()
        }
    }

    /// Matrix from the source basis in degree `n` to the target basis in
    /// degree `n + k`.
    pub fn matrix(&self, source: &ModuleBasis, target: &ModuleBasis) -> RationalMatrix {
        let cols = (0..source.len())
            .map(|i| {
                self.target
                    .coordinates(&self.apply(&self.source.basis_element(source, i)), target)
            })
            .collect();
        RationalMatrix::from_columns(target.len(), cols).expect("coordinates lie in the target basis")
    }

    /// Degree-`0` map as a chain map on the window `lo..=hi`.
    pub fn chain_map(&self, lo: i32, hi: i32) -> ChainMap {
        let mut m = BTreeMap::new();
        for n in lo..=hi {
            m.insert(n, self.matrix(&self.source.basis(n), &self.target.basis(n + self.degree)));
        }
        ChainMap::new(m)
    }

    /// `d∘φ = (-1)^k φ∘d` on every generator.
    pub fn check_morphism(&self) -> Result<()> {
        let odd = self.degree.rem_euclid(2) == 1;
        for j in 0..self.source.rank() {
            let lhs = self.target.d(&self.images[j]);
            let mut rhs = self.apply(self.source.generator_differential(j));
            if odd {
                rhs = rhs.scale(&-Rational::one());
            }
            if lhs != rhs {
                return Err(Error::NotChainMap(format!(
                    "at {}: d φ = {}, φ d = {}",
                    self.source.generator(j).name,
                    lhs.to_text(&self.target),
                    rhs.to_text(&self.target)
                )));
            }
        }
        Ok(())
    }

    pub fn is_chain_map(&self) -> bool {
        self.check_morphism().is_ok()
    }

    /// Checks through degree `cap` that truncation ideals of the source map
    /// into those of the target.
    pub fn check_well_defined(&self, cap: i32) -> Result<()> {
        let algebra = self.source.algebra().algebra();
        for j in 0..self.source.rank() {
            let Some(f) = self.source.truncation(j) else { continue };
            let g = self.source.generator(j).degree;
            for n in g.max(0)..=cap {
                for m in algebra.basis((n - g) as usize, None) {
                    if f.accepts(&m) {
                        continue;
                    }
                    let x = ModuleElement::from_components([(
                        j,
                        crate::graded::AlgebraElement::from_monomial(algebra, m.clone(), Rational::one()),
                    )]);
                    if !self.apply(&x).is_zero() {
                        return Err(Error::NotChainMap(format!(
                            "{}·{} is zero in the source but not its image",
                            algebra.format_monomial(&m),
                            self.source.generator(j).name
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn same_images(&self, other: &ModuleMorphism) -> bool {
        self.degree == other.degree && self.images == other.images
    }

    pub fn describe(&self) -> Vec<String> {
        (0..self.source.rank())
            .map(|j| {
                format!(
                    "{} ↦ {}",
                    self.source.generator(j).name,
                    self.images[j].to_text(&self.target)
                )
            })
            .collect()
    }
}

fn same_shape(a: &DGModule, b: &DGModule) -> bool {
    a.generators() == b.generators()
}

/// Verifies `f - g = dθ + θd` on every generator of the common source.
pub fn check_homotopy(f: &ModuleMorphism, g: &ModuleMorphism, theta: &ModuleMorphism) -> Result<()> {
    if f.degree != 0 || g.degree != 0 || theta.degree != -1 {
        return Err(Error::Shape("homotopy needs degree 0 maps and a degree -1 θ".into()));
    }
    if f.images.len() != g.images.len() || f.images.len() != theta.images.len() {
        return Err(Error::Shape("maps with different sources".into()));
    }
    let source = &f.source;
    let target = &f.target;
    for j in 0..source.rank() {
        let lhs = f.images[j].sub(&g.images[j]);
        let rhs = target
            .d(&theta.images[j])
            .add(&theta.apply(source.generator_differential(j)));
        let rhs = target.reduce(&rhs);
        if lhs != rhs {
            return Err(Error::NotHomotopy(format!(
                "at {}: f - g = {}, dθ + θd = {}",
                source.generator(j).name,
                lhs.to_text(target),
                rhs.to_text(target)
            )));
        }
    }
    Ok(())
}

/// `f ∼ g` through a verified `θ`.
#[derive(Clone, Debug)]
pub struct Homotopy {
    pub f: ModuleMorphism,
    pub g: ModuleMorphism,
    pub theta: ModuleMorphism,
}

impl Homotopy {
    pub fn new(f: ModuleMorphism, g: ModuleMorphism, theta: ModuleMorphism) -> Result<Self> {
        check_homotopy(&f, &g, &theta)?;
        Ok(Self { f, g, theta })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::{parse_element, GradedAlgebra};
    use crate::sullivan::KsComplex;

    fn free_rank_one() -> Arc<DGModule> {
        let a = GradedAlgebra::new([("z", 2)]).unwrap();
        let c = KsComplex::from_named(&a, []).unwrap();
        Arc::new(DGModule::semifree(&c, [("e", 0)], vec![ModuleElement::zero()]).unwrap())
    }

    #[test]
    fn equal_maps_are_homotopic() {
        let m = free_rank_one();
        let id = ModuleMorphism::identity(&m);
        check_homotopy(&id, &id, &ModuleMorphism::zero(&m, &m, -1)).unwrap();
    }

    #[test]
    fn identity_is_not_null_homotopic_with_zero_differential() {
        let m = free_rank_one();
        let id = ModuleMorphism::identity(&m);
        let zero = ModuleMorphism::zero(&m, &m, 0);
        assert!(check_homotopy(&id, &zero, &ModuleMorphism::zero(&m, &m, -1)).is_err());
    }

    #[test]
    fn odd_degree_map_sign() {
        let a = GradedAlgebra::new([("x", 1), ("y", 2)]).unwrap();
        let c = KsComplex::from_named(&a, []).unwrap();
        let m = Arc::new(DGModule::semifree(&c, [("e", 0), ("t", 1)], vec![ModuleElement::zero(); 2]).unwrap());
        let x = parse_element(&a, "x").unwrap();
        // θ(t) = e, degree -1; θ(x t) = -x e
        let theta = ModuleMorphism::new(&m, &m, -1, vec![ModuleElement::zero(), m.unit(0)]).unwrap();
        let xt = m.element([(1, x.clone())]);
        assert_eq!(theta.apply(&xt), m.element([(0, -x)]));
    }
}
