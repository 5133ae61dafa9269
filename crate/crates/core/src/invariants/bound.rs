use serde::Serialize;
use serde_json::{json, Value};

use super::toomer::{toomer, ToomerReport};
use crate::error::Result;
use crate::graded::WordlengthFilter;
use crate::sullivan::LambdaExtension;

/// Degree, wordlength and fiber-filtration caps for the bound pipeline.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Caps {
    pub degree: usize,
    pub wordlength: usize,
    pub fiber_wordlength: usize,
}

impl Caps {
    /// `M = q_cap = N`.
    pub fn new(degree: usize) -> Self {
        Self {
            degree,
            wordlength: degree,
            fiber_wordlength: degree,
        }
    }
}

/// `(m+1)(n+2) - 2`, or `(m+1)(n+1) - 1` for a minimal model.
pub fn product_bound(m: usize, n: usize, minimal: bool) -> usize {
    if minimal {
        (m + 1) * (n + 1) - 1
    } else {
        (m + 1) * (n + 2) - 2
    }
}

/// The same arithmetic for module category: inputs are supplied by the
/// caller, since neither `mcat` nor `cat` is decided here.
#[derive(Clone, Debug, Serialize)]
pub struct CategoryBound {
    pub base_mcat: usize,
    pub fiber_cat: usize,
    pub minimal: bool,
    pub bound: usize,
}

pub fn category_bound(base_mcat: usize, fiber_cat: usize, minimal: bool) -> CategoryBound {
    CategoryBound {
        base_mcat,
        fiber_cat,
        minimal,
        bound: product_bound(base_mcat, fiber_cat, minimal),
    }
}

/// `e_{ΛW}(Λ^{≥q}W)` on the fiber for `q = 0..=q_cap`.
#[derive(Clone, Debug, Serialize)]
pub struct FiberFamily {
    pub reports: Vec<(usize, ToomerReport)>,
    /// Largest fiber wordlength occurring in degrees `≤ N + 1`.
    pub populated_wordlength: usize,
    /// `max_q` of the candidates; `None` if any of them is cap-limited.
    pub n_used: Option<usize>,
    pub certified_lower: usize,
    pub flags: Vec<String>,
}

pub fn toomer_base(extension: &LambdaExtension, caps: Caps) -> Result<ToomerReport> {
    toomer(&extension.complex().full(), extension.base(), caps.degree, caps.wordlength)
}

pub fn toomer_fiber_family(extension: &LambdaExtension, caps: Caps) -> Result<FiberFamily> {
    let fiber = extension.fiber_complex()?;
    let all = fiber.algebra().all();
    let populated = (0..=caps.degree + 1)
        .flat_map(|k| fiber.algebra().basis(k, None))
        .map(|m| m.wordlength())
        .max()
        .unwrap_or(0);
    let mut reports = Vec::new();
    for q in 0..=caps.fiber_wordlength.min(populated + 1) {
        let subject = fiber.quotient(WordlengthFilter::at_least(all.clone(), q));
        reports.push((q, toomer(&subject, &all, caps.degree, caps.wordlength)?));
    }
    let n_used = reports
        .iter()
        .map(|(_, r)| r.candidate)
        .try_fold(0, |acc, c| c.map(|c| acc.max(c)));
    let certified_lower = reports.iter().map(|(_, r)| r.certified_lower).max().unwrap_or(0);
    let mut flags = Vec::new();
    if caps.fiber_wordlength < populated {
        flags.push("q_cap_below_populated".to_string());
    }
    if n_used.is_none() {
        flags.push("cap_limited".to_string());
    }
    Ok(FiberFamily {
        reports,
        populated_wordlength: populated,
        n_used,
        certified_lower,
        flags,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Holds,
    Violated,
    Inconclusive,
}

#[derive(Clone, Debug, Serialize)]
pub struct BoundReport {
    pub caps: Caps,
    pub minimal: bool,
    pub m_used: Option<usize>,
    pub n_used: Option<usize>,
    pub bound: Option<usize>,
    pub verdict: Verdict,
    pub base: ToomerReport,
    pub fiber: FiberFamily,
    pub total: ToomerReport,
    pub reason: String,
}

impl BoundReport {
    pub fn to_json(&self) -> Value {
        json!({
            "caps": {"N": self.caps.degree, "M": self.caps.wordlength, "q_cap": self.caps.fiber_wordlength},
            "minimal": self.minimal,
            "m_used": self.m_used,
            "n_used": self.n_used,
            "bound": self.bound,
            "e_certified_lower": self.total.certified_lower,
            "e_candidate": self.total.candidate,
            "verdict": self.verdict,
            "reason": self.reason,
            "base": self.base.to_json(),
            "fiber": self.fiber.reports.iter().map(|(q, r)| json!({"q": q, "report": r.to_json()})).collect::<Vec<_>>(),
            "fiber_flags": self.fiber.flags,
            "total": self.total.to_json(),
        })
    }
}

/// Checks `e(ΛV) ≤ (m+1)(n+2) - 2` (or the minimal variant) with `m`, `n`
/// the truncated candidates for the base and the fiber family.
///
/// The comparison is against the certified lower bound of `e(ΛV)`, so a
/// `Holds` verdict is relative to the caps. `Inconclusive` means a candidate
/// was not found below `M`.
pub fn verify_estimate_e(extension: &LambdaExtension, caps: Caps) -> Result<BoundReport> {
    let complex = extension.complex();
    let minimal = complex.check_minimal().minimal;
    let base = toomer_base(extension, caps)?;
    let fiber = toomer_fiber_family(extension, caps)?;
    let total = toomer(&complex.full(), &complex.algebra().all(), caps.degree, caps.wordlength)?;
    let m_used = base.candidate;
    let n_used = fiber.n_used;
    let bound = m_used.zip(n_used).map(|(m, n)| product_bound(m, n, minimal));
    let (verdict, reason) = match bound {
        None => (
            Verdict::Inconclusive,
            match (m_used, n_used) {
                (None, _) => format!("base invariant exceeds M = {}", caps.wordlength),
                _ => format!("fiber invariant exceeds M = {}", caps.wordlength),
            },
        ),
        Some(b) if total.certified_lower <= b => (
            Verdict::Holds,
            format!("{} ≤ {b}", total.certified_lower),
        ),
        Some(b) => (
            Verdict::Violated,
            format!("certified e ≥ {} exceeds {b}", total.certified_lower),
        ),
    };
    Ok(BoundReport {
        caps,
        minimal,
        m_used,
        n_used,
        bound,
        verdict,
        base,
        fiber,
        total,
        reason,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::{parse_element, GradedAlgebra};
    use crate::sullivan::KsComplex;

    #[test]
    fn arithmetic() {
        assert_eq!(product_bound(1, 1, false), 4);
        assert_eq!(product_bound(1, 1, true), 3);
        assert_eq!(product_bound(0, 0, false), 0);
        assert_eq!(category_bound(2, 1, false).bound, 7);
    }

    #[test]
    fn example3_holds() {
        let a = GradedAlgebra::new([("x", 4), ("y", 7), ("u", 2), ("v", 3)]).unwrap();
        let c = KsComplex::from_named(
            &a,
            [("y", parse_element(&a, "x^2").unwrap()), ("v", parse_element(&a, "u^2 - x").unwrap())],
        )
        .unwrap();
        let e = LambdaExtension::with_base_names(c, ["x", "y"]).unwrap();
        let r = verify_estimate_e(&e, Caps::new(8)).unwrap();
        assert_eq!(r.m_used, Some(1));
        assert_eq!(r.n_used, Some(1));
        assert_eq!(r.bound, Some(4));
        assert_eq!(r.total.certified_lower, 3);
        assert_eq!(r.verdict, Verdict::Holds);
    }
}
