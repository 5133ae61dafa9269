use serde::Serialize;

use super::complex::KsComplex;
use super::extension::LambdaExtension;
use super::quotient::{QuotientComplex, Region, Staircase};
use crate::error::{Error, Result};
use crate::graded::GeneratorSet;

/// The filtration `I_{m+1} ⊂ I_m ⊂ … ⊂ I_0` of `ΛV = ΛZ ⊗ ΛW` with
/// `I_{m+1} = P^{≥m+1,≥0}` and `I_k = I_{k+1} + P^{≥k,≥t_k}`, where
/// `t_k = (m+1-k)(n+2) - 1`, or `(m+1-k)(n+1)` in the minimal variant.
///
/// Each `I_k` is spanned by the monomials with base wordlength `a` and fiber
/// wordlength `b` such that `a ≥ j` and `b ≥ t_j` for some `j ∈ [k, m+1]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InterpolatingFiltration {
    pub m: usize,
    pub n: usize,
    pub minimal: bool,
    /// `t_0, …, t_{m+1}` with `t_{m+1} = 0`.
    pub thresholds: Vec<usize>,
    base: GeneratorSet,
    fiber: GeneratorSet,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LevelCheck {
    pub level: usize,
    pub monomials_checked: usize,
}

/// Evidence that every `I_k` is `d`-closed through `degree_cap`, and that
/// `I_0` contains all monomials of wordlength `≥ lower_wordlength`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClosureCertificate {
    pub degree_cap: usize,
    pub levels: Vec<LevelCheck>,
    pub lower_wordlength: usize,
    pub lower_wordlength_monomials: usize,
}

impl InterpolatingFiltration {
    pub fn new(base: GeneratorSet, fiber: GeneratorSet, m: usize, n: usize, minimal: bool) -> Self {
        let thresholds = (0..=m + 1)
            .map(|k| {
                if k == m + 1 {
                    0
                } else if minimal {
                    (m + 1 - k) * (n + 1)
                } else {
                    (m + 1 - k) * (n + 2) - 1
                }
            })
            .collect();
        Self {
            m,
            n,
            minimal,
            thresholds,
            base,
            fiber,
        }
    }

    /// Builds the filtration for `extension` and certifies `d`-closure of
    /// every level and the wordlength containment for `I_0` through
    /// `degree_cap`.
    pub fn build(
        extension: &LambdaExtension,
        m: usize,
        n: usize,
        minimal: bool,
        degree_cap: usize,
    ) -> Result<(Self, ClosureCertificate)> {
        let f = Self::new(extension.base().clone(), extension.fiber().clone(), m, n, minimal);
        let cert = f.certify(extension.complex(), degree_cap)?;
        Ok((f, cert))
    }

    /// Total wordlength `L` with `Λ^{≥L}V ⊂ I_0`: `(m+1)(n+2)-1`, or
    /// `(m+1)(n+1)` when minimal.
    pub fn lower_wordlength(&self) -> usize {
        if self.minimal {
            (self.m + 1) * (self.n + 1)
        } else {
            (self.m + 1) * (self.n + 2) - 1
        }
    }

    pub fn level(&self, k: usize) -> Staircase {
        assert!(k <= self.m + 1, "level out of range");
        Staircase {
            base: self.base.clone(),
            fiber: self.fiber.clone(),
            steps: (k..=self.m + 1).map(|j| (j, self.thresholds[j])).collect(),
        }
    }

    /// `ΛV / I_k`.
    pub fn quotient(&self, complex: &KsComplex, k: usize) -> QuotientComplex {
        QuotientComplex::new(complex.clone(), Region::OutsideStaircase(self.level(k)))
    }

    /// Text form of the recursion, e.g. `I_1 = I_2 + P^{≥1,≥2}`.
    pub fn describe(&self) -> Vec<String> {
        let mut out = vec![format!("I_{} = P^{{≥{},≥0}}", self.m + 1, self.m + 1)];
        for k in (0..=self.m).rev() {
            out.push(format!(
                "I_{k} = I_{} + P^{{≥{k},≥{}}}",
                k + 1,
                self.thresholds[k]
            ));
        }
        out
    }

    pub fn certify(&self, complex: &KsComplex, degree_cap: usize) -> Result<ClosureCertificate> {
        let algebra = complex.algebra();
        let mut checked = vec![0usize; self.m + 2];
        let levels: Vec<Staircase> = (0..=self.m + 1).map(|k| self.level(k)).collect();
        let lower = self.lower_wordlength();
        let mut lower_count = 0;
        for deg in 0..=degree_cap {
            for mono in algebra.basis(deg, None) {
                let dm = complex.d_monomial(&mono);
                for (k, stair) in levels.iter().enumerate() {
                    if !stair.contains(&mono) {
                        continue;
                    }
                    checked[k] += 1;
                    if let Some(t) = dm.terms().keys().find(|t| !stair.contains(t)) {
                        return Err(Error::FiltrationNotClosed {
                            level: k,
                            detail: format!(
                                "d({}) contains {} outside I_{k}",
                                algebra.format_monomial(&mono),
                                algebra.format_monomial(t)
                            ),
                        });
                    }
                }
                if mono.wordlength() >= lower {
                    lower_count += 1;
                    if !levels[0].contains(&mono) {
                        return Err(Error::FiltrationNotClosed {
                            level: 0,
                            detail: format!(
                                "{} has wordlength ≥ {lower} but is not in I_0",
                                algebra.format_monomial(&mono)
                            ),
                        });
                    }
                }
            }
        }
        Ok(ClosureCertificate {
            degree_cap,
            levels: checked
                .into_iter()
                .enumerate()
                .map(|(level, monomials_checked)| LevelCheck {
                    level,
                    monomials_checked,
                })
                .collect(),
            lower_wordlength: lower,
            lower_wordlength_monomials: lower_count,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::{parse_element, GradedAlgebra};

    fn example3() -> LambdaExtension {
        let a = GradedAlgebra::new([("x", 4), ("y", 7), ("u", 2), ("v", 3)]).unwrap();
        let dy = parse_element(&a, "x^2").unwrap();
        let dv = parse_element(&a, "u^2 - x").unwrap();
        let c = KsComplex::from_named(&a, [("y", dy), ("v", dv)]).unwrap();
        LambdaExtension::with_base_names(c, ["x", "y"]).unwrap()
    }

    #[test]
    fn thresholds_match_recursion() {
        let e = example3();
        let f = InterpolatingFiltration::new(e.base().clone(), e.fiber().clone(), 1, 1, false);
        assert_eq!(f.thresholds, vec![5, 2, 0]);
        assert_eq!(
            f.describe(),
            vec!["I_2 = P^{≥2,≥0}", "I_1 = I_2 + P^{≥1,≥2}", "I_0 = I_1 + P^{≥0,≥5}"]
        );
        let g = InterpolatingFiltration::new(e.base().clone(), e.fiber().clone(), 1, 1, true);
        assert_eq!(g.thresholds, vec![4, 2, 0]);
        let h = InterpolatingFiltration::new(e.base().clone(), e.fiber().clone(), 0, 3, false);
        assert_eq!(h.thresholds, vec![4, 0]);
        assert_eq!(h.level(0).steps, vec![(0, 4), (1, 0)]);
    }

    #[test]
    fn example3_levels_are_closed() {
        let e = example3();
        for minimal in [false, true] {
            let (f, cert) = InterpolatingFiltration::build(&e, 1, 1, minimal, 12).unwrap();
            assert_eq!(cert.lower_wordlength, f.lower_wordlength());
            assert!(cert.levels.iter().all(|l| l.monomials_checked > 0));
        }
    }

    #[test]
    fn quotient_by_level_is_a_complex() {
        let e = example3();
        let f = InterpolatingFiltration::new(e.base().clone(), e.fiber().clone(), 1, 1, false);
        for k in 0..=2 {
            f.quotient(e.complex(), k).cochains(10).unwrap();
        }
    }
}
