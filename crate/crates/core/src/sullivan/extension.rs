use std::sync::Arc;

use serde::Serialize;

use super::complex::KsComplex;
use crate::error::{Error, Result};
use crate::graded::{AlgebraElement, GeneratorSet, GradedAlgebra};

/// A KS complex `ΛV = ΛZ ⊗ ΛW` split into base generators `Z` and fiber
/// generators `W`, satisfying the Λ-extension condition.
#[derive(Clone, Debug)]
pub struct LambdaExtension {
    complex: KsComplex,
    base: GeneratorSet,
    fiber: GeneratorSet,
    fiber_stages: Vec<usize>,
}

/// Per-fiber-generator stage of the extension filtration `W(k)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtensionFiltration {
    pub stages: Vec<(String, usize)>,
}

impl LambdaExtension {
    /// Validates that `d(ΛZ) ⊂ ΛZ` and that the fiber generators admit a
    /// filtration with `d(W(k)) ⊂ ΛZ ⊗ ΛW(k-1)`, found by greedy closure.
    pub fn new(complex: KsComplex, base: GeneratorSet) -> Result<Self> {
        let algebra = Arc::clone(complex.algebra());
        let n = algebra.len();
        if base.iter().any(|i| i >= n) {
            return Err(Error::InvalidGenerator("base index out of range".into()));
        }
        let fiber = base.complement(n);
        for z in base.iter() {
            let dz = complex.generator_differential(z);
            if dz.terms().keys().any(|m| !m.supported_in(&base)) {
                return Err(Error::NotExtension(format!(
                    "d({}) = {} leaves the base",
                    algebra.generator(z).name,
                    dz
                )));
            }
        }
        let fiber_list: Vec<usize> = fiber.iter().collect();
        let mut stage: Vec<Option<usize>> = vec![None; n];
        let mut k = 0;
        loop {
            let absorbed: Vec<usize> = fiber_list
                .iter()
                .copied()
                .filter(|&w| stage[w].is_none())
                .filter(|&w| {
                    complex.generator_differential(w).terms().keys().all(|m| {
                        m.factors()
                            .iter()
                            .all(|&(j, _)| base.contains(j) || stage[j].is_some_and(|s| s < k))
                    })
                })
                .collect();
            if absorbed.is_empty() {
                break;
            }
            for w in absorbed {
                stage[w] = Some(k);
            }
            k += 1;
        }
        let missing: Vec<&str> = fiber_list
            .iter()
            .filter(|&&w| stage[w].is_none())
            .map(|&w| algebra.generator(w).name.as_str())
            .collect();
        if !missing.is_empty() {
            return Err(Error::NotExtension(format!(
                "fiber generators {missing:?} are not absorbed by the extension filtration"
            )));
        }
        let fiber_stages = fiber_list.iter().map(|&w| stage[w].unwrap()).collect();
        Ok(Self {
            complex,
            base,
            fiber,
            fiber_stages,
        })
    }

    /// Builds from base generator names.
    pub fn with_base_names<'a>(complex: KsComplex, names: impl IntoIterator<Item = &'a str>) -> Result<Self> {
        let base = complex.algebra().subset(names)?;
        Self::new(complex, base)
    }

    pub fn complex(&self) -> &KsComplex {
        &self.complex
    }

    pub fn base(&self) -> &GeneratorSet {
        &self.base
    }

    pub fn fiber(&self) -> &GeneratorSet {
        &self.fiber
    }

    pub fn filtration(&self) -> ExtensionFiltration {
        let a = self.complex.algebra();
        ExtensionFiltration {
            stages: self
                .fiber
                .iter()
                .zip(&self.fiber_stages)
                .map(|(w, &s)| (a.generator(w).name.clone(), s))
                .collect(),
        }
    }

    fn sub_algebra(&self, set: &GeneratorSet) -> Result<(Arc<GradedAlgebra>, Vec<Option<usize>>)> {
        let a = self.complex.algebra();
        let sub = GradedAlgebra::new(
            set.iter()
                .map(|i| (a.generator(i).name.clone(), a.generator(i).degree)),
        )?;
        let mut map = vec![None; a.len()];
        for (k, i) in set.iter().enumerate() {
            map[i] = Some(k);
        }
        Ok((sub, map))
    }

    /// `(ΛZ, d)`.
    pub fn base_complex(&self) -> Result<KsComplex> {
        let (sub, map) = self.sub_algebra(&self.base)?;
        let d = self
            .base
            .iter()
            .map(|z| self.complex.generator_differential(z).transport(&sub, |i| map[i]))
            .collect();
        KsComplex::new(&sub, d)
    }

    /// The fiber `(ΛW, d̄)`: `d̄(w)` keeps the terms of `d(w)` free of base
    /// generators.
    pub fn fiber_complex(&self) -> Result<KsComplex> {
        let (sub, map) = self.sub_algebra(&self.fiber)?;
        let d = self
            .fiber
            .iter()
            .map(|w| {
                self.complex
                    .generator_differential(w)
                    .retain(|m| m.wordlength_in(&self.base) == 0)
                    .transport(&sub, |i| map[i])
            })
            .collect();
        KsComplex::new(&sub, d)
    }

    /// `d̄(w)` for each fiber generator, as elements of `ΛV`.
    pub fn fiber_differential(&self) -> Vec<(String, AlgebraElement)> {
        let a = self.complex.algebra();
        self.fiber
            .iter()
            .map(|w| {
                (
                    a.generator(w).name.clone(),
                    self.complex
                        .generator_differential(w)
                        .retain(|m| m.wordlength_in(&self.base) == 0),
                )
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::parse_element;

    fn ks(gens: &[(&str, u32)], d: &[(&str, &str)]) -> KsComplex {
        let a = GradedAlgebra::new(gens.iter().copied()).unwrap();
        let d: Vec<_> = d.iter().map(|(g, e)| (*g, parse_element(&a, e).unwrap())).collect();
        KsComplex::from_named(&a, d).unwrap()
    }

    #[test]
    fn example3_fiber() {
        let c = ks(&[("x", 4), ("y", 7), ("u", 2), ("v", 3)], &[("y", "x^2"), ("v", "u^2 - x")]);
        let e = LambdaExtension::with_base_names(c, ["x", "y"]).unwrap();
        let f = e.fiber_complex().unwrap();
        assert_eq!(f.generator_differential(1).to_text(), "1 * u^2");
        assert!(f.check_d_squared(8).pass);
        assert_eq!(e.filtration().stages, vec![("u".into(), 0), ("v".into(), 1)]);
        let b = e.base_complex().unwrap();
        assert_eq!(b.generator_differential(1).to_text(), "1 * x^2");
    }

    #[test]
    fn example1_fiber_is_trivial() {
        let c = ks(&[("z", 3), ("w", 2)], &[("w", "z")]);
        let e = LambdaExtension::with_base_names(c, ["z"]).unwrap();
        assert!(e.fiber_complex().unwrap().generator_differential(0).is_zero());
    }

    #[test]
    fn base_must_be_closed() {
        let c = ks(&[("z", 2), ("w", 3)], &[("w", "z^2")]);
        assert!(matches!(
            LambdaExtension::with_base_names(c, ["w"]),
            Err(Error::NotExtension(_))
        ));
    }

    #[test]
    fn base_free_differential_is_kept() {
        let c = ks(&[("z", 2), ("u", 2), ("v", 3)], &[("v", "u^2")]);
        let e = LambdaExtension::with_base_names(c, ["z"]).unwrap();
        let f = e.fiber_complex().unwrap();
        assert_eq!(f.generator_differential(1).to_text(), "1 * u^2");
    }
}
