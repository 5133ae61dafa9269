use std::sync::Arc;

use super::module::{DGModule, ModuleElement};
use super::morphism::{check_homotopy, ModuleMorphism};
use crate::error::{Error, Result};
use crate::linalg::{PivotOrder, Preimage, RationalMatrix, SparseVector};

/// Solves `[d_M; f] x = [top; bottom]` in `M^n`, the stacked system used by
/// both the lift and the homotopy between lifts.
fn stacked_solve(
    f: &ModuleMorphism,
    degree: i32,
    top: &ModuleElement,
    bottom: &ModuleElement,
    order: PivotOrder,
) -> std::result::Result<ModuleElement, String> {
    let m = f.source();
    let n = f.target();
    let src = m.basis(degree);
    let up = m.basis(degree + 1);
    let nb = n.basis(degree);
    let d = m.differential_matrix(&src, &up);
    let fm = f.matrix(&src, &nb);
    let a: RationalMatrix = d.vstack(&fm).map_err(|e| e.to_string())?;
    let mut rhs = m.coordinates(top, &up);
    for (i, c) in n.coordinates(bottom, &nb).iter() {
        rhs.set(up.len() + i, c.clone());
    }
    match a.preimage_ordered(&rhs, order) {
        Preimage::Solution(x) => Ok(m.from_coordinates(&x, &src)),
        Preimage::Inconsistent { certificate } => Err(describe_certificate(&certificate, up.len())),
    }
}

fn describe_certificate(y: &SparseVector, split: usize) -> String {
    let in_d = y.iter().any(|(i, _)| i < split);
    let in_f = y.iter().any(|(i, _)| i >= split);
    match (in_d, in_f) {
        (true, false) => "the boundary equation has no solution in M".into(),
        (false, true) => "f is not surjective in this degree".into(),
        _ => "no element of M has the required boundary and image".into(),
    }
}

/// A lift `ψ: P → M` of `φ: P → N` through `f: M → N`, with `f∘ψ = φ` exactly.
///
/// Generators of `P` are processed in stage order; for each `v` the solve
/// finds `m` with `dm = ψ(dv)` and `f(m) = φ(v)`. `order` chooses pivot
/// columns and so which of the many lifts is returned.
pub fn lift_through_surjection(phi: &ModuleMorphism, f: &ModuleMorphism, order: PivotOrder) -> Result<ModuleMorphism> {
    let p = phi.source();
    if !p.is_semifree() {
        return Err(Error::InvalidModule("lift source must be semifree".into()));
    }
    if phi.degree() != 0 || f.degree() != 0 {
        return Err(Error::Shape("lifting needs degree 0 maps".into()));
    }
    if phi.target().generators() != f.target().generators() {
        return Err(Error::Shape("φ and f have different targets".into()));
    }
    let mut psi = ModuleMorphism::zero(p, f.source(), 0);
    for v in p.stage_order() {
        let deg = p.generator(v).degree;
        let top = psi.apply(p.generator_differential(v));
        let m = stacked_solve(f, deg, &top, phi.image(v), order).map_err(|reason| Error::LiftFailed {
            generator: p.generator(v).name.clone(),
            reason,
        })?;
        psi.set_image(v, m);
    }
    psi.check_morphism()?;
    if !f.after(&psi)?.same_images(phi) {
        return Err(Error::LiftFailed {
            generator: "-".into(),
            reason: "f∘ψ differs from φ".into(),
        });
    }
    Ok(psi)
}

/// `θ: P → M` of degree `-1` with `ψ₁ - ψ₂ = dθ + θd` and `f∘θ = 0`, for two
/// lifts of the same map.
pub fn homotopy_between_lifts(psi1: &ModuleMorphism, psi2: &ModuleMorphism, f: &ModuleMorphism) -> Result<ModuleMorphism> {
    let p: &Arc<DGModule> = psi1.source();
    let mut theta = ModuleMorphism::zero(p, psi1.target(), -1);
    for v in p.stage_order() {
        let deg = p.generator(v).degree;
        let rhs = psi1
            .image(v)
            .sub(psi2.image(v))
            .sub(&theta.apply(p.generator_differential(v)));
        let t = stacked_solve(f, deg - 1, &rhs, &ModuleElement::zero(), PivotOrder::Forward).map_err(|reason| {
            Error::LiftFailed {
                generator: p.generator(v).name.clone(),
                reason: format!("homotopy: {reason}"),
            }
        })?;
        theta.set_image(v, t);
    }
    check_homotopy(psi1, psi2, &theta)?;
    Ok(theta)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dg_modules::mapping_cylinder;
    use crate::graded::{parse_element, GradedAlgebra};
    use crate::sullivan::KsComplex;

    fn setup() -> (Arc<DGModule>, KsComplex) {
        let a = GradedAlgebra::new([("z", 2), ("w", 3)]).unwrap();
        let c = KsComplex::from_named(&a, [("w", parse_element(&a, "z^2").unwrap())]).unwrap();
        let z = parse_element(&a, "z").unwrap();
        let p = DGModule::semifree(
            &c,
            [("e", 0), ("t", 1)],
            vec![ModuleElement::zero(), ModuleElement::from_components([(0, z)])],
        )
        .unwrap();
        (Arc::new(p), c)
    }

    #[test]
    fn lift_through_identity() {
        let (p, _) = setup();
        let id = ModuleMorphism::identity(&p);
        let psi = lift_through_surjection(&id, &id, PivotOrder::Forward).unwrap();
        assert!(psi.same_images(&id));
    }

    #[test]
    fn lift_through_cylinder_projection() {
        let (p, _) = setup();
        let id = ModuleMorphism::identity(&p);
        let cyl = mapping_cylinder(&id).unwrap();
        let psi1 = lift_through_surjection(&id, &cyl.projection, PivotOrder::Forward).unwrap();
        let psi2 = lift_through_surjection(&id, &cyl.projection, PivotOrder::Reverse).unwrap();
        assert!(!psi1.same_images(&psi2));
        let theta = homotopy_between_lifts(&psi1, &psi2, &cyl.projection).unwrap();
        check_homotopy(&psi1, &psi2, &theta).unwrap();
    }
}
