use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graded::{parse_element, GradedAlgebra};
use crate::sullivan::{KsComplex, LambdaExtension};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Role {
    Base,
    Fiber,
    #[default]
    Plain,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorSpec {
    pub name: String,
    pub degree: u32,
    #[serde(default)]
    pub role: Role,
}

/// Expected values carried as test data; the engine never reads them.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Expected {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub e: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub minimal: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cohomology: Option<Vec<usize>>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Metadata {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected: Option<Expected>,
}

/// Input document: generators, differential as element strings, metadata.
///
/// ```json
/// {"generators": [{"name": "z", "degree": 2, "role": "base"},
///                 {"name": "w", "degree": 3, "role": "fiber"}],
///  "differential": {"w": "z^2"}}
/// ```
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraSpec {
    pub generators: Vec<GeneratorSpec>,
    #[serde(default)]
    pub differential: BTreeMap<String, String>,
    #[serde(default)]
    pub metadata: Metadata,
}

impl AlgebraSpec {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse {
            column: e.column(),
            message: format!("line {}: {e}", e.line()),
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("specs serialise")
    }

    pub fn label(&self) -> &str {
        self.metadata.label.as_deref().unwrap_or("unnamed")
    }

    pub fn algebra(&self) -> Result<std::sync::Arc<GradedAlgebra>> {
        GradedAlgebra::new(self.generators.iter().map(|g| (g.name.clone(), g.degree)))
    }

    pub fn complex(&self) -> Result<KsComplex> {
        let a = self.algebra()?;
        for name in self.differential.keys() {
            if a.index_of(name).is_none() {
                return Err(Error::InvalidGenerator(format!("differential given for unknown generator {name}")));
            }
        }
        let mut d = Vec::new();
        for (name, text) in &self.differential {
            let e = parse_element(&a, text).map_err(|err| match err {
                Error::Parse { column, message } => Error::Parse {
                    column,
                    message: format!("in d({name}) = \"{text}\": {message}"),
                },
                other => other,
            })?;
            d.push((name.as_str(), e));
        }
        KsComplex::from_named(&a, d)
    }

    pub fn names_with_role(&self, role: Role) -> Vec<&str> {
        self.generators
            .iter()
            .filter(|g| g.role == role)
            .map(|g| g.name.as_str())
            .collect()
    }

    /// The Λ-extension with base the generators marked `base`, if any are.
    pub fn extension(&self) -> Result<Option<LambdaExtension>> {
        let base = self.names_with_role(Role::Base);
        if base.is_empty() {
            return Ok(None);
        }
        LambdaExtension::with_base_names(self.complex()?, base).map(Some)
    }

    pub fn has_extension(&self) -> bool {
        self.generators.iter().any(|g| g.role == Role::Base)
    }

    /// Canonical bytes used for digests: the pretty JSON form.
    pub fn canonical_bytes(&self) -> Vec<u8> {
        self.to_json().into_bytes()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let text = r#"{"generators": [{"name": "z", "degree": 2, "role": "base"},
            {"name": "w", "degree": 3, "role": "fiber"}], "differential": {"w": "z^2"}}"#;
        let s = AlgebraSpec::from_json(text).unwrap();
        assert_eq!(AlgebraSpec::from_json(&s.to_json()).unwrap(), s);
        let c = s.complex().unwrap();
        assert_eq!(c.generator_differential(1).to_text(), "1 * z^2");
        assert!(s.extension().unwrap().is_some());
    }

    #[test]
    fn errors_carry_positions() {
        let s = AlgebraSpec::from_json(r#"{"generators": [{"name": "z", "degree": 2}], "differential": {"z": "z^^2"}}"#)
            .unwrap();
        match s.complex() {
            Err(Error::Parse { column, message }) => {
                assert_eq!(column, 3);
                assert!(message.contains("d(z)"));
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(AlgebraSpec::from_json("{\n  \"generators\": [,]}"), Err(Error::Parse { .. })));
    }
}
