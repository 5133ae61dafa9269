use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::graded::{AlgebraElement, GeneratorSet, WordlengthFilter};
use crate::linalg::{cocycle_from_class, cohomology, induced_map, CohomologyWindow};
use crate::sullivan::{DegreeBasis, QuotientComplex};

/// A class of the subject that dies in the quotient, with a primitive of its
/// image there.
#[derive(Clone, Debug, Serialize)]
pub struct Witness {
    /// Cocycle of the subject representing a nonzero class.
    pub class: String,
    /// `y` in the quotient with `dy` equal to the image of `class`.
    pub primitive: String,
    #[serde(skip)]
    pub class_element: AlgebraElement,
    #[serde(skip)]
    pub primitive_element: AlgebraElement,
}

#[derive(Clone, Debug, Serialize)]
pub struct ToomerRow {
    pub m: usize,
    pub degree: usize,
    pub injective: bool,
    pub witness: Option<Witness>,
}

/// Options for [`toomer_with`].
#[derive(Clone, Copy, Debug, Default)]
pub struct ToomerOptions {
    /// The caller asserts that the subject's cohomology vanishes above the
    /// degree cap, which turns a finite candidate into a claimed exact value.
    pub assume_concentrated: bool,
}

/// Truncated Toomer invariant of a subject with respect to a generator subset.
///
/// For each `m ≤ M` the subject is projected to the quotient that keeps
/// `S`-wordlength in `[q, q + m]`, where `q` is the subject's own lower bound
/// on `S`, and injectivity on cohomology is decided in every degree `≤ N`.
#[derive(Clone, Debug, Serialize)]
pub struct ToomerReport {
    pub subject: String,
    pub subset: Vec<String>,
    pub degree_cap: usize,
    pub wordlength_cap: usize,
    pub window_start: usize,
    /// One row per `(m, degree)` with nonzero subject cohomology.
    pub rows: Vec<ToomerRow>,
    /// `1 + max{m : some class of degree ≤ N dies}`; `e` is at least this.
    pub certified_lower: usize,
    /// Least `m ≤ M` injective through degree `N`, relative to the caps.
    pub candidate: Option<usize>,
    pub monotone: bool,
    pub asserted_exact: Option<usize>,
    pub flags: Vec<String>,
    /// Dimensions of the subject's cohomology in degrees `0..=N`.
    pub cohomology_dims: Vec<usize>,
}

impl ToomerReport {
    pub fn failures(&self) -> impl Iterator<Item = &ToomerRow> + '_ {
        self.rows.iter().filter(|r| !r.injective)
    }

    pub fn is_cap_limited(&self) -> bool {
        self.candidate.is_none()
    }

    pub fn candidate_text(&self) -> String {
        match self.candidate {
            Some(c) => c.to_string(),
            None => format!("> {}", self.wordlength_cap),
        }
    }

    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|r| {
                let mut v = json!({
                    "m": r.m,
                    "degree": r.degree,
                    "verdict": if r.injective { "injective" } else { "fails" },
                });
                if let Some(w) = &r.witness {
                    v["witness"] = json!({"class": w.class, "primitive": w.primitive});
                }
                v
            })
            .collect();
        let candidate = match self.candidate {
            Some(c) => json!(c),
            None => json!(self.candidate_text()),
        };
        let mut v = json!({
            "subject": self.subject,
            "S": self.subset,
            "N": self.degree_cap,
            "M": self.wordlength_cap,
            "rows": rows,
            "certified_lower": self.certified_lower,
            "candidate": candidate,
            "flags": self.flags,
        });
        if let Some(e) = self.asserted_exact {
            v["asserted_exact"] = json!(e);
        }
        v
    }
}

pub fn toomer(subject: &QuotientComplex, set: &GeneratorSet, degree_cap: usize, wordlength_cap: usize) -> Result<ToomerReport> {
    toomer_with(subject, set, degree_cap, wordlength_cap, ToomerOptions::default())
}

fn describe(subject: &QuotientComplex) -> String {
    let a = subject.parent().algebra();
    let names = |set: &GeneratorSet| {
        set.iter()
            .map(|i| a.generator(i).name.clone())
            .collect::<Vec<_>>()
            .join(",")
    };
    let gens = names(&a.all());
    match subject.filter() {
        Some(f) if f.is_trivial() => format!("Λ({gens})"),
        Some(f) => {
            let parts: Vec<String> = f
                .bounds()
                .iter()
                .map(|b| match b.max {
                    Some(x) => format!("{}≤wl_{{{}}}≤{}", b.min, names(&b.set), x),
                    None => format!("wl_{{{}}}≥{}", names(&b.set), b.min),
                })
                .collect();
            format!("Λ({gens}) | {}", parts.join(", "))
        }
        None => format!("Λ({gens}) / staircase"),
    }
}

pub fn toomer_with(
    subject: &QuotientComplex,
    set: &GeneratorSet,
    degree_cap: usize,
    wordlength_cap: usize,
    options: ToomerOptions,
) -> Result<ToomerReport> {
    let filter = subject
        .filter()
        .ok_or_else(|| Error::IllFormedWindow("toomer needs a filter-defined subject".into()))?;
    let algebra = subject.parent().algebra();
    let q = filter.lower_bound_on(set);
    let top = degree_cap + 1;
    let bases = subject.bases(top);
    let cochains = subject.cochains_from(&bases)?;
    let source = cohomology(&cochains, 0, degree_cap as i32)?;
    let max_wl = bases
        .iter()
        .flat_map(|b| b.monomials.iter())
        .map(|m| m.wordlength_in(set))
        .max();

    let mut rows = Vec::new();
    let mut injective_at = Vec::new();
    for m in 0..=wordlength_cap {
        if max_wl.is_none_or(|w| w <= q + m) {
            // the quotient is the subject itself through degree N + 1
            for h in source.iter().filter(|h| h.dim() > 0) {
                rows.push(ToomerRow {
                    m,
                    degree: h.degree as usize,
                    injective: true,
                    witness: None,
                });
            }
            injective_at.push(true);
            continue;
        }
        let quotient = subject.restrict(WordlengthFilter::at_most(set.clone(), q + m))?;
        let qbases = quotient.bases(top);
        let qcochains = quotient.cochains_from(&qbases)?;
        let target = cohomology(&qcochains, 0, degree_cap as i32)?;
        let projection = subject.projection_to(&quotient, top);
        projection.validate(&cochains, &qcochains)?;
        let induced = induced_map(&source, &target, &projection)?;
        let mut all = true;
        for h in source.iter().filter(|h| h.dim() > 0) {
            let k = h.degree;
            let dm = &induced.degrees[&k];
            let witness = if dm.injective {
                None
            } else {
                all = false;
                Some(witness(subject, &quotient, &source, &target, &projection, &bases, &qbases, k, &dm.kernel[0])?)
            };
            rows.push(ToomerRow {
                m,
                degree: k as usize,
                injective: dm.injective,
                witness,
            });
        }
        injective_at.push(all);
    }

    let failing_max = injective_at.iter().rposition(|ok| !ok);
    let certified_lower = failing_max.map_or(0, |m| m + 1);
    let candidate = injective_at.iter().position(|&ok| ok);
    let monotone = candidate.is_none_or(|c| injective_at[c..].iter().all(|&ok| ok));

    let mut flags = Vec::new();
    if candidate.is_none() {
        flags.push("cap_limited".to_string());
    }
    if !monotone {
        flags.push("non_monotone".to_string());
    }
    if bases.iter().all(|b| b.is_empty()) {
        flags.push("vacuous".to_string());
    }
    if let Some(fm) = failing_max {
        let margin = subject
            .parent()
            .max_generator_degree()
            .max(1);
        if rows
            .iter()
            .any(|r| r.m == fm && !r.injective && r.degree + margin > degree_cap)
        {
            flags.push("top_failure_near_cap".to_string());
        }
    }
    let asserted_exact = if options.assume_concentrated && monotone {
        candidate
    } else {
        None
    };
    if asserted_exact.is_some() {
        flags.push("user_asserted_exact".to_string());
    }

    Ok(ToomerReport {
        subject: describe(subject),
        subset: set.iter().map(|i| algebra.generator(i).name.clone()).collect(),
        degree_cap,
        wordlength_cap,
        window_start: q,
        rows,
        certified_lower,
        candidate,
        monotone,
        asserted_exact,
        flags,
        cohomology_dims: source.dims(),
    })
}

#[allow(clippy::too_many_arguments)]
fn witness(
    subject: &QuotientComplex,
    quotient: &QuotientComplex,
    source: &CohomologyWindow,
    target: &CohomologyWindow,
    projection: &crate::linalg::ChainMap,
    bases: &[DegreeBasis],
    qbases: &[DegreeBasis],
    degree: i32,
    kernel_vector: &crate::linalg::SparseVector,
) -> Result<Witness> {
    let k = degree as usize;
    let h = source.degree(degree).expect("degree in window");
    let cocycle = cocycle_from_class(h, kernel_vector);
    let image = projection.at(degree).expect("degree in map").apply(&cocycle);
    let primitive = target
        .degree(degree)
        .and_then(|t| t.primitive(&image))
        .ok_or_else(|| Error::NotChainMap("kernel class has no primitive in the quotient".into()))?;
    let class_element = subject.element(&cocycle, &bases[k]);
    let primitive_element = if k == 0 {
        AlgebraElement::zero(subject.parent().algebra())
    } else {
        quotient.element(&primitive, &qbases[k - 1])
    };
    Ok(Witness {
        class: class_element.to_text(),
        primitive: primitive_element.to_text(),
        class_element,
        primitive_element,
    })
}
