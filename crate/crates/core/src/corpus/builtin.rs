use std::collections::BTreeMap;

use super::spec::{AlgebraSpec, Expected, GeneratorSpec, Metadata, Role};
use crate::error::{Error, Result};

fn gen(name: &str, degree: u32, role: Role) -> GeneratorSpec {
    GeneratorSpec {
        name: name.into(),
        degree,
        role,
    }
}

fn spec(label: &str, generators: Vec<GeneratorSpec>, d: &[(&str, String)], expected: Expected) -> AlgebraSpec {
    AlgebraSpec {
        generators,
        differential: d.iter().map(|(k, v)| (k.to_string(), v.clone())).collect::<BTreeMap<_, _>>(),
        metadata: Metadata {
            label: Some(label.into()),
            expected: Some(expected),
        },
    }
}

/// `ΛZ ⊗ ΛW` with `Z = ⟨x, y⟩`, `W = ⟨u, v⟩`, `|x| = 2(n+1)`,
/// `|y| = 2(m+1)(n+1) - 1`, `|u| = 2`, `|v| = 2(n+1) - 1`, `dy = x^{m+1}`,
/// `dv = u^{n+1} - x`. Its cohomology is `ℚ[u]/(u^{(m+1)(n+1)})`.
pub fn example3(m: u32, n: u32) -> AlgebraSpec {
    let top = (m + 1) * (n + 1);
    let mut cohomology = vec![0; 2 * top as usize + 1];
    for k in 0..top as usize {
        cohomology[2 * k] = 1;
    }
    spec(
        &format!("example3-{m}-{n}"),
        vec![
            gen("x", 2 * (n + 1), Role::Base),
            gen("y", 2 * (m + 1) * (n + 1) - 1, Role::Base),
            gen("u", 2, Role::Fiber),
            gen("v", 2 * (n + 1) - 1, Role::Fiber),
        ],
        &[("y", format!("x^{}", m + 1)), ("v", format!("u^{} - x", n + 1))],
        Expected {
            e: Some(top as usize - 1),
            minimal: Some(false),
            cohomology: Some(cohomology),
        },
    )
}

pub const BUILTIN_NAMES: &[&str] = &[
    "example1",
    "example2",
    "example3",
    "example3-1-2",
    "example3-2-1",
    "odd-sphere",
    "even-sphere",
    "zero-differential",
];

pub fn builtin_names() -> &'static [&'static str] {
    BUILTIN_NAMES
}

pub fn builtin(name: &str) -> Result<AlgebraSpec> {
    let s = match name {
        "example1" => spec(
            "example1",
            vec![gen("z", 3, Role::Base), gen("w", 2, Role::Fiber)],
            &[("w", "z".into())],
            Expected {
                e: Some(0),
                minimal: Some(false),
                cohomology: Some(vec![1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
            },
        ),
        "example2" => spec(
            "example2",
            vec![gen("z", 2, Role::Base), gen("w", 3, Role::Fiber)],
            &[("w", "z^2".into())],
            Expected {
                e: Some(1),
                minimal: Some(true),
                cohomology: Some(vec![1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0]),
            },
        ),
        "example3" | "example3-1-1" => example3(1, 1),
        "example3-1-2" => example3(1, 2),
        "example3-2-1" => example3(2, 1),
        "odd-sphere" => spec(
            "odd-sphere",
            vec![gen("z", 3, Role::Plain)],
            &[],
            Expected {
                e: Some(1),
                minimal: Some(true),
                cohomology: Some(vec![1, 0, 0, 1, 0, 0, 0]),
            },
        ),
        "even-sphere" => spec(
            "even-sphere",
            vec![gen("z", 4, Role::Base), gen("w", 7, Role::Fiber)],
            &[("w", "z^2".into())],
            Expected {
                e: Some(1),
                minimal: Some(true),
                cohomology: Some(vec![1, 0, 0, 0, 1, 0, 0, 0, 0, 0]),
            },
        ),
        "zero-differential" => spec(
            "zero-differential",
            vec![gen("a", 3, Role::Base), gen("b", 5, Role::Fiber)],
            &[],
            Expected {
                e: Some(2),
                minimal: Some(true),
                cohomology: Some(vec![1, 0, 0, 1, 0, 1, 0, 0, 1, 0]),
            },
        ),
        other => {
            return Err(Error::Input(format!(
                "unknown builtin `{other}`; available: {}",
                BUILTIN_NAMES.join(", ")
            )))
        }
    };
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_builtins_are_ks_complexes() {
        for name in BUILTIN_NAMES {
            let s = builtin(name).unwrap();
            let c = s.complex().unwrap();
            c.check_sullivan().unwrap();
            assert!(c.check_d_squared(16).pass, "{name}");
            if s.has_extension() {
                s.extension().unwrap().unwrap();
            }
            let exp = s.metadata.expected.as_ref().unwrap();
            assert_eq!(c.check_minimal().minimal, exp.minimal.unwrap(), "{name}");
        }
    }

    #[test]
    fn example3_degrees() {
        let s = example3(2, 1);
        let degrees: Vec<u32> = s.generators.iter().map(|g| g.degree).collect();
        assert_eq!(degrees, vec![4, 11, 2, 3]);
        assert_eq!(s.differential["y"], "x^3");
    }
}
