use std::sync::Arc;

use serde::Serialize;

use super::module::{DGModule, ModuleElement};
use super::morphism::ModuleMorphism;
use crate::error::{Error, Result};
use crate::linalg::{cocycle_from_class, cohomology, induced_map, EchelonBasis, Insertion, SparseVector};

/// `f: P → M` with `P` semifree, built degree by degree through `hi + 1`.
#[derive(Clone, Debug)]
pub struct Resolution {
    pub module: Arc<DGModule>,
    pub map: ModuleMorphism,
    pub window: (i32, i32),
    pub certificate: ResolutionCertificate,
}

#[derive(Clone, Debug, Serialize)]
pub struct ResolutionCertificate {
    pub window: (i32, i32),
    /// `f` is onto `M^k` for every `k` in the window.
    pub surjective: bool,
    /// `H(f)` is bijective on the window.
    pub quasi_isomorphism: bool,
    /// Every degree reached a fixed point within the iteration budget.
    pub stabilised: bool,
    pub generators_per_stage: Vec<usize>,
}

const ROUNDS_PER_DEGREE: usize = 32;

struct Builder {
    target: Arc<DGModule>,
    names: Vec<(String, i32)>,
    differential: Vec<ModuleElement>,
    images: Vec<ModuleElement>,
}

impl Builder {
    fn build(&self) -> Result<(Arc<DGModule>, ModuleMorphism)> {
        let p = Arc::new(DGModule::semifree(
            self.target.algebra(),
            self.names.clone(),
            self.differential.clone(),
        )?);
        let f = ModuleMorphism::new(&p, &self.target, 0, self.images.clone())?;
        Ok((p, f))
    }

    fn push(&mut self, prefix: &str, degree: i32, d: ModuleElement, image: ModuleElement) {
        let name = format!("{prefix}{}", self.names.len());
        self.names.push((name, degree));
        self.differential.push(d);
        self.images.push(image);
    }

    /// One round at degree `k`: add cocycle generators until `Z^k(P)` maps
    /// onto `Z^k(M)`, then kill the kernel of `H^k(P) → H^k(M)`. Returns the
    /// number of generators added.
    fn round(&mut self, bottom: i32, k: i32) -> Result<usize> {
        let before = self.names.len();
        let (p, f) = self.build()?;
        let (cp, bp) = p.cochains(bottom, k + 1)?;
        let (cm, bm) = self.target.cochains(bottom, k + 1)?;
        let i = (k - bottom) as usize;
        let fk = f.matrix(&bp[i], &bm[i]);

        let mut image = EchelonBasis::new();
        if let Some(dp) = cp.differential(k) {
            for (l, z) in dp.kernel_basis().iter().enumerate() {
                image.insert(&fk.apply(z), l);
            }
        } else {
            for l in 0..bp[i].len() {
                image.insert(&fk.apply(&SparseVector::unit(l)), l);
            }
        }
        let zm = match cm.differential(k) {
            Some(dm) => dm.kernel_basis(),
            None => (0..bm[i].len()).map(SparseVector::unit).collect(),
        };
        for z in zm {
            let label = image.inputs();
            if let Insertion::Independent { .. } = image.insert(&z, label) {
                let target = self.target.from_coordinates(&z, &bm[i]);
                self.push("e", k, ModuleElement::zero(), target);
            }
        }
        if self.names.len() > before {
            return Ok(self.names.len() - before);
        }

        let hp = cohomology(&cp, k, k)?;
        let hm = cohomology(&cm, k, k)?;
        let mut maps = std::collections::BTreeMap::new();
        maps.insert(k, fk);
        let induced = induced_map(&hp, &hm, &crate::linalg::ChainMap::new(maps))?;
        let dk = &induced.degrees[&k];
        let hpk = hp.degree(k).expect("degree in window");
        let hmk = hm.degree(k).expect("degree in window");
        for class in &dk.kernel {
            let c = cocycle_from_class(hpk, class);
            let image_c = f.matrix(&bp[i], &bm[i]).apply(&c);
            let m = hmk
                .primitive(&image_c)
                .ok_or_else(|| Error::InvalidModule("kernel class without a primitive".into()))?;
            let dt = p.from_coordinates(&c, &bp[i]);
            let ft = if i == 0 {
                ModuleElement::zero()
            } else {
                self.target.from_coordinates(&m, &bm[i - 1])
            };
            self.push("t", k - 1, dt, ft);
        }
        Ok(self.names.len() - before)
    }
}

/// A semifree `P` with `f: P → M` surjective and a quasi-isomorphism on the
/// window `[lo, hi]`.
///
/// Stage `0` adds cocycles of `M` not yet hit; each defect class `c` of
/// `H(P)` mapping to a boundary `dm` gets a generator `t` with `dt = c`,
/// `f(t) = m`. Rounds repeat in each degree until nothing is added.
pub fn surjective_resolution(target: &Arc<DGModule>, lo: i32, hi: i32) -> Result<Resolution> {
    if hi < lo {
        return Err(Error::Shape(format!("empty window [{lo}, {hi}]")));
    }
    let bottom = target.bottom_degree().min(lo);
    let mut b = Builder {
        target: Arc::clone(target),
        names: Vec::new(),
        differential: Vec::new(),
        images: Vec::new(),
    };
    let mut stabilised = true;
    for k in bottom..=hi + 1 {
        let mut rounds = 0;
        while b.round(bottom, k)? > 0 {
            rounds += 1;
            if rounds >= ROUNDS_PER_DEGREE {
                stabilised = false;
                break;
            }
        }
    }
    let (p, f) = b.build()?;
    f.check_morphism()?;

    let (cp, bp) = p.cochains(bottom, hi + 1)?;
    let (cm, bm) = target.cochains(bottom, hi + 1)?;
    let surjective = (lo..=hi).all(|k| {
        let i = (k - bottom) as usize;
        f.matrix(&bp[i], &bm[i]).rank() == bm[i].len()
    });
    let hp = cohomology(&cp, lo, hi)?;
    let hm = cohomology(&cm, lo, hi)?;
    let chain = f.chain_map(bottom, hi + 1);
    chain.validate(&cp, &cm)?;
    let quasi_isomorphism = induced_map(&hp, &hm, &chain)?.isomorphism();
    let stages = p.generators().iter().filter_map(|g| g.stage).max().map_or(0, |s| s + 1);
    let mut generators_per_stage = vec![0; stages];
    for g in p.generators() {
        generators_per_stage[g.stage.expect("semifree")] += 1;
    }
    Ok(Resolution {
        module: p,
        map: f,
        window: (lo, hi),
        certificate: ResolutionCertificate {
            window: (lo, hi),
            surjective,
            quasi_isomorphism,
            stabilised,
            generators_per_stage,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::{parse_element, GradedAlgebra, WordlengthFilter};
    use crate::sullivan::KsComplex;

    #[test]
    fn truncated_polynomial_module() {
        let a = GradedAlgebra::new([("z", 2)]).unwrap();
        let c = KsComplex::from_named(&a, []).unwrap();
        let m = Arc::new(
            DGModule::with_truncation(
                &c,
                [("b", 0)],
                vec![ModuleElement::zero()],
                vec![Some(WordlengthFilter::at_most(a.all(), 1))],
            )
            .unwrap(),
        );
        let r = surjective_resolution(&m, 0, 10).unwrap();
        assert!(r.certificate.surjective && r.certificate.quasi_isomorphism);
        // e0 ↦ b and one killer t with dt = z²·e0
        assert_eq!(r.module.rank(), 2);
        assert_eq!(r.module.generator(1).degree, 3);
        let z2 = parse_element(&a, "z^2").unwrap();
        assert_eq!(*r.module.generator_differential(1), r.module.element([(0, z2)]));
        assert_eq!(r.certificate.generators_per_stage, vec![1, 1]);
    }

    #[test]
    fn acyclic_target() {
        // M = A{x, y} with dx = y over ℚ[z]: cocycles at stage 0, no defects
        let a = GradedAlgebra::new([("z", 2)]).unwrap();
        let c = KsComplex::from_named(&a, []).unwrap();
        let m = Arc::new(
            DGModule::semifree(&c, [("y", 1), ("x", 0)], vec![ModuleElement::zero(), ModuleElement::from_components([(0, crate::graded::AlgebraElement::one(&a))])])
                .unwrap(),
        );
        let r = surjective_resolution(&m, 0, 8).unwrap();
        assert!(r.certificate.surjective && r.certificate.quasi_isomorphism);
        assert!(r.module.generators().iter().all(|g| g.stage.unwrap() <= 1));
    }

    #[test]
    fn zero_differential_over_rationals() {
        let a = GradedAlgebra::new([("z", 3)]).unwrap();
        let c = KsComplex::from_named(&a, []).unwrap();
        let m = Arc::new(
            DGModule::with_truncation(
                &c,
                [("b0", 0), ("b2", 2)],
                vec![ModuleElement::zero(); 2],
                vec![Some(WordlengthFilter::at_most(a.all(), 0)); 2],
            )
            .unwrap(),
        );
        let r = surjective_resolution(&m, 0, 5).unwrap();
        assert!(r.certificate.surjective && r.certificate.quasi_isomorphism);
    }
}
