use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::spec::{AlgebraSpec, GeneratorSpec, Metadata, Role};
use crate::error::{Error, Result};
use crate::graded::{AlgebraElement, GradedAlgebra};
use crate::linalg::SparseVector;
use crate::sullivan::KsComplex;
use crate::Rational;

/// Size bounds for [`corpus_generate`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorParams {
    pub base: usize,
    pub fiber: usize,
    pub max_degree: u32,
    /// Cocycle basis vectors combined into one differential.
    pub max_terms: usize,
    /// Degrees whose cocycle space is larger than this are redrawn.
    pub max_basis: usize,
}

impl Default for GeneratorParams {
    fn default() -> Self {
        Self {
            base: 2,
            fiber: 2,
            max_degree: 6,
            max_terms: 2,
            max_basis: 24,
        }
    }
}

impl GeneratorParams {
    /// Random generator counts with at most six generators in total.
    pub fn sampled(rng: &mut impl Rng) -> Self {
        let base = rng.gen_range(1..=3);
        let fiber = rng.gen_range(0..=(6 - base).min(3));
        Self {
            base,
            fiber,
            ..Self::default()
        }
    }
}

const DRAWS_PER_GENERATOR: usize = 16;

/// Cocycles of degree `k`.
fn cocycles(prefix: &KsComplex, k: usize) -> Result<(Vec<SparseVector>, Vec<crate::graded::Monomial>)> {
    let full = prefix.full();
    let bases = full.bases(k + 1);
    let cc = full.cochains_from(&bases)?;
    let z = cc
        .differential(k as i32)
        .map(|d| d.kernel_basis())
        .unwrap_or_default();
    Ok((z, bases[k].monomials.clone()))
}

/// A relative Sullivan algebra built generator by generator: each
/// differential is a random combination of cocycles of the algebra on the
/// earlier generators (base generators only see the base), so `d² = 0`, the
/// Sullivan condition and `d(Z) ⊂ ΛZ` hold by construction.
pub fn corpus_generate(seed: u64, params: GeneratorParams) -> Result<AlgebraSpec> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let total = params.base + params.fiber;
    let mut generators: Vec<GeneratorSpec> = Vec::new();
    let mut differential: Vec<AlgebraElement> = Vec::new();
    let mut texts = std::collections::BTreeMap::new();
    for j in 0..total {
        let role = if j < params.base { Role::Base } else { Role::Fiber };
        let name = match role {
            Role::Base => format!("z{j}"),
            _ => format!("w{}", j - params.base),
        };
        let mut placed = false;
        let earlier_alg = GradedAlgebra::new(generators.iter().map(|g| (g.name.clone(), g.degree)))?;
        let earlier = KsComplex::new(
            &earlier_alg,
            differential.iter().map(|d| d.transport(&earlier_alg, Some)).collect(),
        )?;
        for draw in 0..DRAWS_PER_GENERATOR {
            let degree = rng.gen_range(1..=params.max_degree);
            let (z, monomials) = cocycles(&earlier, degree as usize + 1)?;
            if z.len() > params.max_basis {
                continue;
            }
            // prefer degrees that admit a nonzero differential
            if z.is_empty() && draw + 1 < DRAWS_PER_GENERATOR && rng.gen_bool(0.75) {
                continue;
            }
            let mut chosen: Vec<&SparseVector> = z.iter().collect();
            chosen.shuffle(&mut rng);
            let most = params.max_terms.min(z.len());
            let keep = if most == 0 || rng.gen_bool(0.2) { 0 } else { rng.gen_range(1..=most) };
            chosen.truncate(keep);
            let mut v = SparseVector::new();
            for b in chosen {
                let c = Rational::from_integer((*[-2i64, -1, 1, 2].choose(&mut rng).unwrap()).into());
                v.axpy(&c, b);
            }
            let d = AlgebraElement::from_terms(
                &earlier_alg,
                v.iter().map(|(i, c)| (monomials[i].clone(), c.clone())),
            );
            if !d.is_zero() {
                texts.insert(name.clone(), d.to_text());
            }
            generators.push(GeneratorSpec {
                name: name.clone(),
                degree,
                role,
            });
            differential.push(d);
            placed = true;
            break;
        }
        if !placed {
            return Err(Error::GenerationBudget(format!("seed {seed}: no degree for generator {name}")));
        }
    }
    Ok(AlgebraSpec {
        generators,
        differential: texts,
        metadata: Metadata {
            label: Some(format!("random-{seed}")),
            expected: None,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generated_specs_validate() {
        for seed in 0..20 {
            let s = corpus_generate(seed, GeneratorParams::default()).unwrap();
            let c = s.complex().unwrap();
            c.check_sullivan().unwrap();
            assert!(c.check_d_squared(12).pass);
            s.extension().unwrap().unwrap();
            assert_eq!(corpus_generate(seed, GeneratorParams::default()).unwrap(), s);
        }
    }

    #[test]
    fn pure_base() {
        let p = GeneratorParams {
            fiber: 0,
            ..GeneratorParams::default()
        };
        let s = corpus_generate(3, p).unwrap();
        assert!(s.generators.iter().all(|g| g.role == Role::Base));
    }
}
