use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use super::builtin::builtin;
use super::generate::{corpus_generate, GeneratorParams};
use super::report::{sha256_hex, Outcome, RunReport};
use super::spec::{AlgebraSpec, Role};
use crate::dg_modules::random::{cylinder_fixture, lift_fixture, run_lift_fixture};
use crate::dg_modules::{check_homotopy, mapping_cylinder, strictify};
use crate::error::{Error, Result};
use crate::graded::GeneratorSet;
use crate::invariants::{toomer_fiber_family, toomer_with, verify_estimate_e, Caps, ToomerOptions, Verdict};
use crate::linalg::cohomology;
use crate::sullivan::InterpolatingFiltration;

/// An input document together with the bytes its digest is taken over.
#[derive(Clone, Debug)]
pub struct Document {
    pub spec: AlgebraSpec,
    pub bytes: Vec<u8>,
}

impl Document {
    /// `builtin:NAME` or a path to a JSON file.
    pub fn load(source: &str) -> Result<Self> {
        if let Some(name) = source.strip_prefix("builtin:") {
            return Ok(Self::from_spec(builtin(name)?));
        }
        let bytes = std::fs::read(source)?;
        let text = String::from_utf8(bytes.clone()).map_err(|e| Error::Input(format!("{source}: {e}")))?;
        Ok(Self {
            spec: AlgebraSpec::from_json(&text)?,
            bytes,
        })
    }

    pub fn from_spec(spec: AlgebraSpec) -> Self {
        let bytes = spec.canonical_bytes();
        Self { spec, bytes }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Subset {
    Base,
    Fiber,
    #[default]
    All,
}

impl std::str::FromStr for Subset {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "base" => Ok(Subset::Base),
            "fiber" => Ok(Subset::Fiber),
            "all" => Ok(Subset::All),
            other => Err(Error::Input(format!("unknown subset `{other}` (base, fiber, all)"))),
        }
    }
}

fn subset_of(spec: &AlgebraSpec, subset: Subset) -> Result<GeneratorSet> {
    let algebra = spec.algebra()?;
    let role = match subset {
        Subset::All => return Ok(algebra.all()),
        Subset::Base => Role::Base,
        Subset::Fiber => Role::Fiber,
    };
    let names = spec.names_with_role(role);
    if names.is_empty() {
        return Err(Error::Input(format!("no generators have role {role:?}").to_lowercase()));
    }
    algebra.subset(names)
}

fn extension_required(spec: &AlgebraSpec) -> Result<crate::sullivan::LambdaExtension> {
    spec.extension()?
        .ok_or_else(|| Error::Input("this command needs generators marked base and fiber".into()))
}

pub fn validate(doc: &Document, caps: Caps) -> Result<RunReport> {
    let spec = &doc.spec;
    let complex = spec.complex()?;
    let d2 = complex.check_d_squared(caps.degree);
    let sullivan = complex.check_sullivan();
    let minimal = complex.check_minimal();
    let extension = if spec.has_extension() {
        Some(match spec.extension() {
            Ok(Some(e)) => json!({"ok": true, "fiber_stages": e.filtration().stages}),
            Ok(None) => json!({"ok": false}),
            Err(e) => json!({"ok": false, "error": e.to_string()}),
        })
    } else {
        None
    };
    let extension_ok = extension.as_ref().is_none_or(|e| e["ok"] == true);
    let outcome = if d2.pass && sullivan.is_ok() && extension_ok {
        Outcome::Pass
    } else {
        Outcome::Fail
    };
    let results = json!({
        "label": spec.label(),
        "generators": spec.generators.iter().map(|g| json!({"name": g.name, "degree": g.degree, "role": g.role})).collect::<Vec<_>>(),
        "differential": spec.generators.iter().enumerate().map(|(i, g)| json!({"generator": g.name, "d": complex.generator_differential(i).to_text()})).collect::<Vec<_>>(),
        "d_squared": d2,
        "sullivan": match &sullivan {
            Ok(f) => json!({"ok": true, "stages": f.stages}),
            Err(e) => json!({"ok": false, "error": e.to_string()}),
        },
        "minimal": minimal,
        "extension": extension,
    });
    Ok(RunReport::new("validate", &doc.bytes, &caps, outcome, results))
}

pub fn cohomology_report(doc: &Document, caps: Caps) -> Result<RunReport> {
    let spec = &doc.spec;
    let complex = spec.complex()?;
    let full = complex.full();
    let bases = full.bases(caps.degree + 1);
    let h = cohomology(&full.cochains_from(&bases)?, 0, caps.degree as i32)?;
    let dims = h.dims();
    let representatives: Vec<Value> = h
        .iter()
        .filter(|d| d.dim() > 0)
        .map(|d| {
            let k = d.degree as usize;
            json!({
                "degree": k,
                "dim": d.dim(),
                "classes": d.representatives.iter().map(|r| full.element(r, &bases[k]).to_text()).collect::<Vec<_>>(),
            })
        })
        .collect();
    let expected = spec
        .metadata
        .expected
        .as_ref()
        .and_then(|e| e.cohomology.as_ref())
        .map(|e| e.iter().zip(&dims).all(|(a, b)| a == b));
    let outcome = if expected == Some(false) { Outcome::Fail } else { Outcome::Pass };
    let results = json!({
        "label": spec.label(),
        "dims": dims,
        "euler_characteristic": h.euler_characteristic(),
        "classes": representatives,
        "matches_expected": expected,
    });
    Ok(RunReport::new("cohomology", &doc.bytes, &caps, outcome, results))
}

pub fn toomer_report(doc: &Document, caps: Caps, subset: Subset, assume_concentrated: bool) -> Result<RunReport> {
    let complex = doc.spec.complex()?;
    let set = subset_of(&doc.spec, subset)?;
    let r = toomer_with(
        &complex.full(),
        &set,
        caps.degree,
        caps.wordlength,
        ToomerOptions { assume_concentrated },
    )?;
    let outcome = if r.candidate.is_some() { Outcome::Pass } else { Outcome::Inconclusive };
    Ok(RunReport::new("toomer", &doc.bytes, &caps, outcome, r.to_json()))
}

pub fn fiber_report(doc: &Document, caps: Caps) -> Result<RunReport> {
    let ext = extension_required(&doc.spec)?;
    let family = toomer_fiber_family(&ext, caps)?;
    let fiber = ext.fiber_complex()?;
    let h = cohomology(&fiber.full().cochains(caps.degree + 1)?, 0, caps.degree as i32)?;
    let outcome = if family.n_used.is_some() { Outcome::Pass } else { Outcome::Inconclusive };
    let results = json!({
        "label": doc.spec.label(),
        "fiber_differential": ext.fiber_differential().into_iter().map(|(g, d)| json!({"generator": g, "d": d.to_text()})).collect::<Vec<_>>(),
        "fiber_cohomology": h.dims(),
        "populated_wordlength": family.populated_wordlength,
        "n_used": family.n_used,
        "certified_lower": family.certified_lower,
        "flags": family.flags,
        "family": family.reports.iter().map(|(q, r)| json!({"q": q, "candidate": r.candidate, "certified_lower": r.certified_lower, "flags": r.flags})).collect::<Vec<_>>(),
    });
    Ok(RunReport::new("fiber", &doc.bytes, &caps, outcome, results))
}

fn filtration_json(ext: &crate::sullivan::LambdaExtension, m: usize, n: usize, minimal: bool, degree_cap: usize) -> (bool, Value) {
    match InterpolatingFiltration::build(ext, m, n, minimal, degree_cap) {
        Ok((f, cert)) => (
            true,
            json!({"m": m, "n": n, "minimal": minimal, "levels": f.describe(), "closed_through": degree_cap,
                   "lower_wordlength": cert.lower_wordlength, "monomials": cert.levels.iter().map(|l| l.monomials_checked).collect::<Vec<_>>()}),
        ),
        Err(e) => (false, json!({"m": m, "n": n, "minimal": minimal, "error": e.to_string()})),
    }
}

pub fn verify_bound_report(doc: &Document, caps: Caps) -> Result<RunReport> {
    let ext = extension_required(&doc.spec)?;
    let report = verify_estimate_e(&ext, caps)?;
    let mut outcome = match report.verdict {
        Verdict::Holds => Outcome::Pass,
        Verdict::Violated => Outcome::Fail,
        Verdict::Inconclusive => Outcome::Inconclusive,
    };
    let mut results = report.to_json();
    if let (Some(m), Some(n)) = (report.m_used, report.n_used) {
        let (closed, f) = filtration_json(&ext, m, n, report.minimal, caps.degree);
        if !closed {
            outcome = Outcome::Fail;
        }
        results["filtration"] = f;
    }
    results["label"] = json!(doc.spec.label());
    Ok(RunReport::new("verify-bound", &doc.bytes, &caps, outcome, results))
}

/// Cylinder contract, strictification and lifting on `count` seeded fixtures.
pub fn cylinder_demo(seed: u64, count: usize) -> Result<RunReport> {
    let window = (0, 6);
    let mut entries = Vec::new();
    let (mut cyl_pass, mut lift_pass, mut skipped) = (0, 0, 0);
    let mut outcome = Outcome::Pass;
    for i in 0..count as u64 {
        let s = seed.wrapping_add(i);
        let mut entry = json!({"seed": s});
        match cylinder_fixture(s) {
            Ok(fx) => {
                let cyl = mapping_cylinder(&fx.f)?;
                let check = cyl.verify(window.0, window.1)?;
                let strict = strictify(&cyl, &fx.g, &fx.h, &fx.theta)
                    .map(|g| g.after(&cyl.inclusion).is_ok_and(|gi| gi.same_images(&fx.h)))
                    .unwrap_or(false);
                let ok = check.passed() && strict;
                cyl_pass += ok as usize;
                if !ok {
                    outcome = Outcome::Fail;
                }
                entry["cylinder"] = json!({"ranks": [cyl.source_rank(), cyl.target_rank(), cyl.total.rank()], "check": check, "strictified": strict});
            }
            Err(Error::GenerationBudget(_)) => skipped += 1,
            Err(e) => return Err(e),
        }
        match lift_fixture(s) {
            Ok(fx) => {
                let ok = run_lift_fixture(&fx).and_then(|(a, b, t)| check_homotopy(&a, &b, &t));
                if ok.is_ok() {
                    lift_pass += 1;
                } else {
                    outcome = Outcome::Fail;
                }
                entry["lift"] = json!({"via_resolution": fx.via_resolution, "ok": ok.is_ok(), "error": ok.err().map(|e| e.to_string())});
            }
            Err(Error::GenerationBudget(_)) => skipped += 1,
            Err(e) => return Err(e),
        }
        entries.push(entry);
    }
    let results = json!({
        "seed": seed,
        "count": count,
        "window": window,
        "cylinders_passed": cyl_pass,
        "lifts_passed": lift_pass,
        "skipped": skipped,
        "fixtures": entries,
    });
    let caps = Caps::new(window.1 as usize);
    Ok(RunReport::new("cylinder-demo", format!("{seed}:{count}").as_bytes(), &caps, outcome, results))
}

/// Degree cap for the filtration closure checks in [`corpus_run`].
pub const CORPUS_FILTRATION_DEGREE: usize = 12;

/// Seed of instance `i` of a corpus run.
pub fn instance_seed(seed: u64, i: u64) -> u64 {
    seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(i)
}

/// Generates `count` random relative Sullivan algebras and runs the d², filtration
/// and bound checks on each. The report is a pure function of the arguments.
pub fn corpus_run(seed: u64, count: usize, caps: Caps) -> Result<RunReport> {
    let mut instances = Vec::new();
    let mut outcome = Outcome::Pass;
    let mut tally = std::collections::BTreeMap::<&str, usize>::new();
    for i in 0..count as u64 {
        let s = instance_seed(seed, i);
        let params = GeneratorParams::sampled(&mut ChaCha8Rng::seed_from_u64(s));
        let spec = corpus_generate(s, params)?;
        let complex = spec.complex()?;
        let d2 = complex.check_d_squared(caps.degree);
        let minimal = complex.check_minimal().minimal;
        let ext = spec
            .extension()?
            .ok_or_else(|| Error::Input(format!("instance {s} has no base")))?;
        let mut closure = Vec::new();
        let mut closed = true;
        for m in 0..=2 {
            for n in 0..=2 {
                let variants: &[bool] = if minimal { &[false, true] } else { &[false] };
                for &min in variants {
                    let (ok, _) = filtration_json(&ext, m, n, min, CORPUS_FILTRATION_DEGREE);
                    closed &= ok;
                    closure.push(json!([m, n, min, ok]));
                }
            }
        }
        let bound = verify_estimate_e(&ext, caps)?;
        let verdict = serde_json::to_value(bound.verdict)?;
        *tally.entry(match bound.verdict {
            Verdict::Holds => "holds",
            Verdict::Violated => "violated",
            Verdict::Inconclusive => "inconclusive",
        })
        .or_default() += 1;
        let status = if !d2.pass || !closed || bound.verdict == Verdict::Violated {
            Outcome::Fail
        } else {
            Outcome::Pass
        };
        outcome = outcome.and(status);
        instances.push(json!({
            "seed": s,
            "digest": sha256_hex(&spec.canonical_bytes()),
            "generators": spec.generators.iter().map(|g| format!("{}:{}", g.name, g.degree)).collect::<Vec<_>>(),
            "differential": spec.differential,
            "minimal": minimal,
            "d_squared": d2.pass,
            "filtration_closed": closed,
            "filtrations": closure,
            "m_used": bound.m_used,
            "n_used": bound.n_used,
            "bound": bound.bound,
            "e_certified_lower": bound.total.certified_lower,
            "verdict": verdict,
        }));
    }
    let results = json!({
        "seed": seed,
        "count": count,
        "filtration_degree": CORPUS_FILTRATION_DEGREE,
        "verdicts": tally,
        "instances": instances,
    });
    Ok(RunReport::new("corpus-run", format!("{seed}:{count}").as_bytes(), &caps, outcome, results))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_reports() {
        let doc = Document::load("builtin:example3").unwrap();
        let caps = Caps::new(8);
        assert_eq!(validate(&doc, caps).unwrap().outcome, Outcome::Pass);
        let c = cohomology_report(&doc, caps).unwrap();
        assert_eq!(c.results["matches_expected"], true);
        let t = toomer_report(&doc, caps, Subset::All, false).unwrap();
        assert_eq!(t.results["candidate"], 3);
        let v = verify_bound_report(&doc, caps).unwrap();
        assert_eq!(v.outcome, Outcome::Pass);
        assert_eq!(v.results["bound"], 4);
        assert!(Document::load("builtin:nope").is_err());
        let plain = Document::load("builtin:odd-sphere").unwrap();
        assert!(matches!(fiber_report(&plain, caps), Err(Error::Input(_))));
    }

    #[test]
    fn corpus_run_is_deterministic() {
        let caps = Caps::new(6);
        let a = corpus_run(7, 3, caps).unwrap();
        let b = corpus_run(7, 3, caps).unwrap();
        assert_eq!(a.to_json(), b.to_json());
        assert_ne!(a.outcome, Outcome::Fail, "{}", a.to_json());
    }
}
