use std::sync::Arc;

use num::One;
use serde::Serialize;

use super::module::{DGModule, ModuleElement};
use super::morphism::{check_homotopy, ModuleMorphism};
use crate::error::{Error, Result};
use crate::linalg::{cohomology, induced_map};
use crate::Rational;

/// `Q̃ = P ⊕ Q ⊕ (A ⊗ sV)` for `f: P = A ⊗ V → Q`, with
/// `D(sv) = v + f(v) - S(dv)` and `S(a·v) = (-1)^{|a|} a·sv`.
///
/// Generators of `Q̃` are ordered: those of `P`, then `Q`, then `sV`.
#[derive(Clone, Debug)]
pub struct Cylinder {
    pub f: ModuleMorphism,
    pub total: Arc<DGModule>,
    /// `F: P → Q̃`, the inclusion.
    pub inclusion: ModuleMorphism,
    /// `p: Q̃ → Q`: `f` on `P`, `-id` on `Q`, zero on `sV`.
    pub projection: ModuleMorphism,
}

#[derive(Clone, Debug, Serialize)]
pub struct CylinderCheck {
    pub window: (i32, i32),
    pub d_squared: bool,
    pub projection_chain_map: bool,
    pub inclusion_chain_map: bool,
    pub factorisation: bool,
    pub inclusion_injective: bool,
    pub projection_surjective: bool,
    pub quasi_isomorphism: bool,
}

impl CylinderCheck {
    pub fn passed(&self) -> bool {
        self.d_squared
            && self.projection_chain_map
            && self.inclusion_chain_map
            && self.factorisation
            && self.inclusion_injective
            && self.projection_surjective
            && self.quasi_isomorphism
    }
}

impl Cylinder {
    pub fn source_rank(&self) -> usize {
        self.f.source().rank()
    }

    pub fn target_rank(&self) -> usize {
        self.f.target().rank()
    }

    /// `S` on an element of `P`, landing in the `sV` summand of `Q̃`.
    pub fn suspend(&self, x: &ModuleElement) -> ModuleElement {
        suspend(&self.f, x)
    }

    /// Verifies the cylinder contract on the window `[lo, hi]`: the
    /// cohomology check uses cochains from the bottom degree to `hi + 1`.
    pub fn verify(&self, lo: i32, hi: i32) -> Result<CylinderCheck> {
        let d_squared = self.total.check_d_squared().is_ok();
        let projection_chain_map = self.projection.is_chain_map();
        let inclusion_chain_map = self.inclusion.is_chain_map();
        let factorisation = self.projection.after(&self.inclusion)?.same_images(&self.f);
        let bottom = self.total.bottom_degree().min(lo);
        let (ct, bt) = self.total.cochains(bottom, hi + 1)?;
        let (cq, bq) = self.f.target().cochains(bottom, hi + 1)?;
        let (_, bp) = self.f.source().cochains(bottom, hi + 1)?;
        let mut inclusion_injective = true;
        let mut projection_surjective = true;
        for k in 0..=(hi + 1 - bottom) as usize {
            if self.inclusion.matrix(&bp[k], &bt[k]).rank() != bp[k].len() {
                inclusion_injective = false;
            }
            if self.projection.matrix(&bt[k], &bq[k]).rank() != bq[k].len() {
                projection_surjective = false;
            }
        }
        let ht = cohomology(&ct, lo, hi)?;
        let hq = cohomology(&cq, lo, hi)?;
        let p = self.projection.chain_map(bottom, hi + 1);
        p.validate(&ct, &cq)?;
        let quasi_isomorphism = induced_map(&ht, &hq, &p)?.isomorphism();
        Ok(CylinderCheck {
            window: (lo, hi),
            d_squared,
            projection_chain_map,
            inclusion_chain_map,
            factorisation,
            inclusion_injective,
            projection_surjective,
            quasi_isomorphism,
        })
    }
}

fn suspend(f: &ModuleMorphism, x: &ModuleElement) -> ModuleElement {
    let p = f.source();
    let algebra = p.algebra().algebra();
    let offset = p.rank() + f.target().rank();
    ModuleElement::from_components(x.components().map(|(j, a)| {
        let signed = crate::graded::AlgebraElement::from_terms(
            algebra,
            a.terms().iter().map(|(m, c)| {
                let c = if algebra.degree_of(m) % 2 == 1 { -c.clone() } else { c.clone() };
                (m.clone(), c)
            }),
        );
        (j + offset, signed)
    }))
}

pub fn mapping_cylinder(f: &ModuleMorphism) -> Result<Cylinder> {
    let p = f.source();
    let q = f.target();
    if !p.is_semifree() {
        return Err(Error::InvalidModule("the cylinder needs a semifree source".into()));
    }
    if f.degree() != 0 {
        return Err(Error::Shape("the cylinder needs a degree 0 map".into()));
    }
    f.check_morphism()?;
    let (r, s) = (p.rank(), q.rank());
    let clash = |name: &str| p.generators().iter().any(|g| g.name == name);
    let mut gens: Vec<(String, i32)> = p.generators().iter().map(|g| (g.name.clone(), g.degree)).collect();
    gens.extend(q.generators().iter().map(|g| {
        let name = if clash(&g.name) { format!("{}'", g.name) } else { g.name.clone() };
        (name, g.degree)
    }));
    gens.extend(p.generators().iter().map(|g| (format!("s{}", g.name), g.degree - 1)));

    let mut diff: Vec<ModuleElement> = (0..r).map(|j| p.generator_differential(j).clone()).collect();
    diff.extend((0..s).map(|j| q.generator_differential(j).shift(r)));
    for j in 0..r {
        let v = p.unit(j);
        let fv = f.image(j).shift(r);
        let sdv = suspend(f, p.generator_differential(j));
        diff.push(v.add(&fv).sub(&sdv));
    }
    let mut truncation = vec![None; r];
    truncation.extend((0..s).map(|j| q.truncation(j).cloned()));
    let total = Arc::new(DGModule::with_truncation(p.algebra(), gens, diff, truncation)?);

    let inclusion = ModuleMorphism::new(p, &total, 0, (0..r).map(|j| total.unit(j)).collect())?;
    let minus = -Rational::one();
    let mut proj = Vec::with_capacity(2 * r + s);
    proj.extend((0..r).map(|j| f.image(j).clone()));
    proj.extend((0..s).map(|j| q.unit(j).scale(&minus)));
    proj.extend((0..r).map(|_| ModuleElement::zero()));
    let projection = ModuleMorphism::new(&total, q, 0, proj)?;
    Ok(Cylinder {
        f: f.clone(),
        total,
        inclusion,
        projection,
    })
}

/// From `g: Q → M`, `h: P → M` and `θ` with `g∘f - h = dθ + θd`, builds
/// `G: Q̃ → M` with `G = h` on `P`, `-g` on `Q`, `G(sv) = -θ(v)`, so that
/// `G∘F = h` exactly.
pub fn strictify(cylinder: &Cylinder, g: &ModuleMorphism, h: &ModuleMorphism, theta: &ModuleMorphism) -> Result<ModuleMorphism> {
    let gf = g.after(&cylinder.f)?;
    check_homotopy(&gf, h, theta)?;
    let minus = -Rational::one();
    let (r, s) = (cylinder.source_rank(), cylinder.target_rank());
    let mut images = Vec::with_capacity(2 * r + s);
    images.extend((0..r).map(|j| h.image(j).clone()));
    images.extend((0..s).map(|j| g.image(j).scale(&minus)));
    images.extend((0..r).map(|j| theta.image(j).scale(&minus)));
    let big_g = ModuleMorphism::new(&cylinder.total, h.target(), 0, images)?;
    big_g.check_morphism()?;
    if !big_g.after(&cylinder.inclusion)?.same_images(h) {
        return Err(Error::NotChainMap("G∘F differs from h".into()));
    }
    Ok(big_g)
}
