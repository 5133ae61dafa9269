use serde::Serialize;

use crate::error::Result;
use crate::graded::{AlgebraElement, GeneratorSet, WordlengthFilter};
use crate::linalg::{cocycle_from_class, cohomology, EchelonBasis, Insertion, SparseVector};
use crate::sullivan::KsComplex;

/// Longest nonzero product of classes from the image of `H(Λ^{≥1}_S V)` in
/// `H(ΛV)`, restricted to degrees `≤ N`. This is a lower bound for the
/// corresponding Toomer invariant.
#[derive(Clone, Debug, Serialize)]
pub struct CupLengthReport {
    pub degree_cap: usize,
    pub length: usize,
    /// Factors of a longest nonzero product, as cocycles.
    pub factors: Vec<String>,
    pub product: Option<String>,
    /// Products of the next length were not explored past the cap.
    pub cap_limited: bool,
}

struct Class {
    degree: usize,
    element: AlgebraElement,
    factors: Vec<String>,
}

pub fn cup_length(complex: &KsComplex, set: &GeneratorSet, degree_cap: usize) -> Result<CupLengthReport> {
    let full = complex.full();
    let bases = full.bases(degree_cap + 1);
    let h = cohomology(&full.cochains_from(&bases)?, 0, degree_cap as i32)?;

    let positive = complex.quotient(WordlengthFilter::at_least(set.clone(), 1));
    let pbases = positive.bases(degree_cap + 1);
    let ph = cohomology(&positive.cochains_from(&pbases)?, 0, degree_cap as i32)?;

    let class_coords = |e: &AlgebraElement, k: usize| -> Option<SparseVector> {
        let v = full.coordinates(e, &bases[k]);
        h.degree(k as i32).and_then(|d| d.class_of(&v))
    };

    // independent image classes of positive S-wordlength
    let mut generators = Vec::new();
    for (k, pbasis) in pbases.iter().enumerate().take(degree_cap + 1).skip(1) {
        let mut span = EchelonBasis::new();
        let dk = ph.degree(k as i32).expect("degree in window");
        for rep in &dk.representatives {
            let e = positive.element(rep, pbasis);
            if let Some(c) = class_coords(&e, k) {
                if !c.is_zero() && matches!(span.insert(&c, generators.len()), Insertion::Independent { .. }) {
                    generators.push(Class {
                        degree: k,
                        factors: vec![e.to_text()],
                        element: e,
                    });
                }
            }
        }
    }
    let min_degree = generators.iter().map(|c| c.degree).min();

    let mut layer: Vec<Class> = generators
        .iter()
        .map(|c| Class {
            degree: c.degree,
            element: c.element.clone(),
            factors: c.factors.clone(),
        })
        .collect();
    let mut length = 0;
    let mut best: Option<Class> = None;
    while !layer.is_empty() {
        length += 1;
        let mut next = Vec::new();
        let mut spans: Vec<EchelonBasis> = (0..=degree_cap).map(|_| EchelonBasis::new()).collect();
        for a in &layer {
            for g in &generators {
                let k = a.degree + g.degree;
                if k > degree_cap {
                    continue;
                }
                let p = &a.element * &g.element;
                let Some(c) = class_coords(&p, k) else { continue };
                if c.is_zero() {
                    continue;
                }
                let label = next.len();
                if matches!(spans[k].insert(&c, label), Insertion::Independent { .. }) {
                    let mut factors = a.factors.clone();
                    factors.extend(g.factors.iter().cloned());
                    next.push(Class {
                        degree: k,
                        element: p,
                        factors,
                    });
                }
            }
        }
        best = layer.into_iter().next();
        layer = next;
    }
    let cap_limited = match (&best, min_degree) {
        (Some(b), Some(d)) => b.degree + d > degree_cap,
        _ => false,
    };
    Ok(CupLengthReport {
        degree_cap,
        length,
        product: best.as_ref().map(|b| b.element.to_text()),
        factors: best.map(|b| b.factors).unwrap_or_default(),
        cap_limited,
    })
}

/// Lifts a class-coordinate vector to a cocycle element of `ΛV`.
pub fn class_element(complex: &KsComplex, degree: usize, coordinates: &SparseVector) -> Result<AlgebraElement> {
    let full = complex.full();
    let bases = full.bases(degree + 1);
    let h = cohomology(&full.cochains_from(&bases)?, 0, degree as i32)?;
    let d = h.degree(degree as i32).expect("degree in window");
    Ok(full.element(&cocycle_from_class(d, coordinates), &bases[degree]))
}
