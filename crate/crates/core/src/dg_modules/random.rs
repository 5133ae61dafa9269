//! Seeded random modules, chain maps and homotopy data for property suites.

use std::sync::Arc;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::lift::lift_through_surjection;
use super::module::{DGModule, ModuleElement};
use super::morphism::ModuleMorphism;
use super::cylinder::mapping_cylinder;
use super::resolution::surjective_resolution;
use crate::error::{Error, Result};
use crate::graded::{parse_element, GradedAlgebra};
use crate::linalg::{PivotOrder, RationalMatrix, SparseVector};
use crate::sullivan::KsComplex;
use crate::Rational;

fn small(rng: &mut impl Rng) -> Rational {
    Rational::from_integer(rng.gen_range(-2i64..=2).into())
}

fn combination(rng: &mut impl Rng, basis: &[SparseVector]) -> SparseVector {
    let mut v = SparseVector::new();
    for b in basis {
        v.axpy(&small(rng), b);
    }
    v
}

/// The small KS complexes fixtures are drawn over.
pub fn fixture_algebras() -> Vec<KsComplex> {
    let poly = GradedAlgebra::new([("z", 2)]).unwrap();
    let sphere = GradedAlgebra::new([("z", 2), ("w", 3)]).unwrap();
    let ext = GradedAlgebra::new([("x", 1), ("y", 2)]).unwrap();
    let odd = GradedAlgebra::new([("a", 3)]).unwrap();
    vec![
        KsComplex::from_named(&poly, []).unwrap(),
        KsComplex::from_named(&sphere, [("w", parse_element(&sphere, "z^2").unwrap())]).unwrap(),
        KsComplex::from_named(&ext, []).unwrap(),
        KsComplex::from_named(&odd, []).unwrap(),
    ]
}

/// A semifree module of random rank whose generator `j` has a random cocycle of the
/// submodule on generators `< j` as its differential; degrees in
/// `0..=max_degree`.
pub fn random_semifree(
    algebra: &KsComplex,
    rng: &mut impl Rng,
    rank: std::ops::RangeInclusive<usize>,
    max_degree: i32,
    prefix: &str,
) -> Result<DGModule> {
    let rank = rng.gen_range(rank);
    let mut degrees: Vec<i32> = (0..rank).map(|_| rng.gen_range(0..=max_degree)).collect();
    degrees.sort();
    let mut names: Vec<(String, i32)> = Vec::new();
    let mut diff = Vec::new();
    for (j, &deg) in degrees.iter().enumerate() {
        let current = DGModule::semifree(algebra, names.clone(), diff.clone())?;
        let dx = if j == 0 || rng.gen_bool(0.25) {
            ModuleElement::zero()
        } else {
            let lo = current.bottom_degree().min(deg + 1);
            let (cc, bases) = current.cochains(lo, deg + 2)?;
            let k = deg + 1;
            let z = match cc.differential(k) {
                Some(d) => d.kernel_basis(),
                None => Vec::new(),
            };
            current.from_coordinates(&combination(rng, &z), &bases[(k - lo) as usize])
        };
        names.push((format!("{prefix}{j}"), deg));
        diff.push(dx);
    }
    let m = DGModule::semifree(algebra, names, diff)?;
    m.check_d_squared()?;
    Ok(m)
}

/// Kernel of the linear conditions `d∘φ = φ∘d` on generator images, as
/// column blocks per source generator.
fn chain_map_space(source: &DGModule, target: &DGModule) -> (Vec<SparseVector>, Vec<(usize, crate::dg_modules::ModuleBasis)>) {
    let mut blocks = Vec::new();
    let mut offset = 0;
    for j in 0..source.rank() {
        let b = target.basis(source.generator(j).degree);
        let n = b.len();
        blocks.push((offset, b));
        offset += n;
    }
    let total = offset;
    let mut rows: Vec<RationalMatrix> = Vec::new();
    for i in 0..source.rank() {
        let deg = source.generator(i).degree;
        let up = target.basis(deg + 1);
        let mut cols = vec![SparseVector::new(); total];
        let (oi, bi) = &blocks[i];
        let d = target.differential_matrix(bi, &up);
        for c in 0..bi.len() {
            cols[oi + c] = d.column(c).clone();
        }
        for (k, a) in source.generator_differential(i).components() {
            let (ok, bk) = &blocks[k];
            let act = target.action_matrix(a, bk, &up);
            for c in 0..bk.len() {
                let mut col = cols[ok + c].clone();
                col.axpy(&-Rational::from_integer(1.into()), act.column(c));
                cols[ok + c] = col;
            }
        }
        rows.push(RationalMatrix::from_columns(up.len(), cols).expect("block shapes"));
    }
    let stacked = rows
        .into_iter()
        .reduce(|a, b| a.vstack(&b).expect("same column count"))
        .unwrap_or_else(|| RationalMatrix::zero(0, total));
    (stacked.kernel_basis(), blocks)
}

fn split(target: &DGModule, v: &SparseVector, blocks: &[(usize, crate::dg_modules::ModuleBasis)]) -> Vec<ModuleElement> {
    blocks
        .iter()
        .map(|(o, b)| {
            let part = v.remap(|i| (i >= *o && i < o + b.len()).then(|| i - o));
            target.from_coordinates(&part, b)
        })
        .collect()
}

/// A random degree-`0` chain map, zero only when that is the only one.
pub fn random_chain_map(source: &Arc<DGModule>, target: &Arc<DGModule>, rng: &mut impl Rng) -> Result<ModuleMorphism> {
    let (kernel, blocks) = chain_map_space(source, target);
    let mut v = combination(rng, &kernel);
    if v.is_zero() {
        if let Some(k) = kernel.first() {
            v = k.clone();
        }
    }
    let m = ModuleMorphism::new(source, target, 0, split(target, &v, &blocks))?;
    m.check_morphism()?;
    Ok(m)
}

/// Arbitrary images of the given degree shift.
pub fn random_map(source: &Arc<DGModule>, target: &Arc<DGModule>, degree: i32, rng: &mut impl Rng) -> Result<ModuleMorphism> {
    let images = (0..source.rank())
        .map(|j| {
            let b = target.basis(source.generator(j).degree + degree);
            let v: SparseVector = (0..b.len()).map(|i| (i, small(rng))).collect();
            target.from_coordinates(&v, &b)
        })
        .collect();
    ModuleMorphism::new(source, target, degree, images)
}

/// `(f, g, h, θ)` with `f: P → Q`, `g: Q → M`, `h = g∘f - dθ - θd`.
#[derive(Clone, Debug)]
pub struct CylinderFixture {
    pub seed: u64,
    pub f: ModuleMorphism,
    pub g: ModuleMorphism,
    pub h: ModuleMorphism,
    pub theta: ModuleMorphism,
}

pub fn cylinder_fixture(seed: u64) -> Result<CylinderFixture> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let algebras = fixture_algebras();
    let a = &algebras[rng.gen_range(0..algebras.len())];
    let p = Arc::new(random_semifree(a, &mut rng, 1..=3, 3, "v")?);
    let q = Arc::new(random_semifree(a, &mut rng, 1..=3, 3, "q")?);
    let m = Arc::new(random_semifree(a, &mut rng, 1..=2, 3, "m")?);
    let f = random_chain_map(&p, &q, &mut rng)?;
    let g = random_chain_map(&q, &m, &mut rng)?;
    let theta = random_map(&p, &m, -1, &mut rng)?;
    let boundary = {
        let images = (0..p.rank())
            .map(|j| m.d(theta.image(j)).add(&theta.apply(p.generator_differential(j))))
            .collect();
        ModuleMorphism::new(&p, &m, 0, images)?
    };
    let h = g.after(&f)?.sub(&boundary)?;
    Ok(CylinderFixture {
        seed,
        f,
        g,
        h,
        theta,
    })
}

/// `φ: P → N` and a surjective quasi-isomorphism `f: M → N`: either a
/// cylinder projection or a windowed resolution.
#[derive(Clone, Debug)]
pub struct LiftFixture {
    pub seed: u64,
    pub phi: ModuleMorphism,
    pub f: ModuleMorphism,
    pub via_resolution: bool,
}

pub fn lift_fixture(seed: u64) -> Result<LiftFixture> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let algebras = fixture_algebras();
    let a = &algebras[rng.gen_range(0..algebras.len())];
    let n = Arc::new(random_semifree(a, &mut rng, 1..=3, 3, "n")?);
    let via_resolution = rng.gen_bool(0.5);
    let f = if via_resolution {
        let r = surjective_resolution(&n, 0, 6)?;
        if !(r.certificate.surjective && r.certificate.quasi_isomorphism) {
            return Err(Error::GenerationBudget(format!("seed {seed}: resolution not certified")));
        }
        r.map
    } else {
        let r = Arc::new(random_semifree(a, &mut rng, 1..=2, 3, "r")?);
        let k = random_chain_map(&r, &n, &mut rng)?;
        mapping_cylinder(&k)?.projection
    };
    let p = Arc::new(random_semifree(a, &mut rng, 1..=3, 4, "v")?);
    let phi = random_chain_map(&p, &n, &mut rng)?;
    Ok(LiftFixture {
        seed,
        phi,
        f,
        via_resolution,
    })
}

/// Lifts with both pivot orders and the homotopy between them.
pub fn run_lift_fixture(fx: &LiftFixture) -> Result<(ModuleMorphism, ModuleMorphism, ModuleMorphism)> {
    let psi1 = lift_through_surjection(&fx.phi, &fx.f, PivotOrder::Forward)?;
    let psi2 = lift_through_surjection(&fx.phi, &fx.f, PivotOrder::Reverse)?;
    let theta = super::lift::homotopy_between_lifts(&psi1, &psi2, &fx.f)?;
    Ok((psi1, psi2, theta))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dg_modules::{check_homotopy, strictify};

    #[test]
    fn fixtures_satisfy_contracts() {
        for seed in 0..8 {
            let fx = cylinder_fixture(seed).unwrap();
            let cyl = mapping_cylinder(&fx.f).unwrap();
            assert!(cyl.verify(0, 6).unwrap().passed(), "seed {seed}");
            let g = strictify(&cyl, &fx.g, &fx.h, &fx.theta).unwrap();
            assert!(g.after(&cyl.inclusion).unwrap().same_images(&fx.h));
        }
        for seed in 0..8 {
            let fx = lift_fixture(seed).unwrap();
            let (psi1, psi2, theta) = run_lift_fixture(&fx).unwrap();
            check_homotopy(&psi1, &psi2, &theta).unwrap();
        }
    }
}
