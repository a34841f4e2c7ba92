//! Prompt construction and the versioned refinement ledger.
//!
//! Prompt bodies are placeholder templates stored as config files (see
//! `prompts/` in the repository root) so their text can be refined
//! across iterations without code changes. Builders render a template
//! against its inputs and enforce the prompt contracts.

mod build;
mod ledger;

pub use build::{build_assessment_prompt, build_generation_prompt, AssessmentKind};
pub use ledger::PromptLedger;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum PromptError {
    #[error("unknown domain: {0}")]
    UnknownDomain(String),
    #[error("wrong prompt kind: expected {expected}, got {got}")]
    WrongPromptKind { expected: PromptKind, got: PromptKind },
    #[error("rationale must be non-empty")]
    EmptyRationale,
    #[error("invalid severity scale: {0}")]
    InvalidScale(String),
    #[error("prompt contract violation: {0}")]
    ContractViolation(String),
    #[error("template for kind {kind} uses undocumented placeholder {{{placeholder}}}")]
    UnknownPlaceholder { kind: PromptKind, placeholder: String },
    #[error("prompt version not found: {kind} v{id}")]
    VersionNotFound { kind: PromptKind, id: u32 },
    #[error("prompt ledger corrupt: {0}")]
    LedgerCorrupt(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

/// The three prompt families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PromptKind {
    Generation,
    Completeness,
    Dor,
}

impl PromptKind {
    pub const ALL: [PromptKind; 3] = [
        PromptKind::Generation,
        PromptKind::Completeness,
        PromptKind::Dor,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            PromptKind::Generation => "generation",
            PromptKind::Completeness => "completeness",
            PromptKind::Dor => "dor",
        }
    }

    /// Placeholders a body template of this kind may use.
    pub fn documented_placeholders(&self) -> &'static [&'static str] {
        match self {
            PromptKind::Generation => &["persona", "domain", "template", "variation"],
            PromptKind::Completeness => &["template", "document"],
            PromptKind::Dor => &["persona", "scale", "document"],
        }
    }
}

impl std::fmt::Display for PromptKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for PromptKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "generation" => Ok(PromptKind::Generation),
            "completeness" => Ok(PromptKind::Completeness),
            "dor" => Ok(PromptKind::Dor),
            other => Err(format!("unknown prompt kind: {other}")),
        }
    }
}

/// One version of a prompt body.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PromptVersion {
    pub id: u32,
    pub kind: PromptKind,
    pub body_template: String,
    pub rationale: String,
    pub iteration_introduced: u32,
}

impl PromptVersion {
    /// Rejects placeholders outside the documented set for the kind.
    pub fn validate(&self) -> Result<(), PromptError> {
        for ph in scan_placeholders(&self.body_template) {
            if !self.kind.documented_placeholders().contains(&ph.as_str()) {
                return Err(PromptError::UnknownPlaceholder {
                    kind: self.kind,
                    placeholder: ph,
                });
            }
        }
        Ok(())
    }
}

/// `{lowercase_word}` tokens in a body template.
fn scan_placeholders(body: &str) -> Vec<String> {
    let mut found = Vec::new();
    let bytes = body.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        if bytes[i] == b'{' {
            let start = i + 1;
            let mut j = start;
            while j < bytes.len() && (bytes[j].is_ascii_lowercase() || bytes[j] == b'_') {
                j += 1;
            }
            if j > start && j < bytes.len() && bytes[j] == b'}' {
                let name = body[start..j].to_string();
                if !found.contains(&name) {
                    found.push(name);
                }
                i = j;
            }
        }
        i += 1;
    }
    found
}

/// Role the generating and judging prompts are asked to assume.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PersonaConfig {
    pub role_description: String,
}

impl PersonaConfig {
    pub fn new(role_description: impl Into<String>) -> Result<Self, PromptError> {
        let role_description = role_description.into();
        if role_description.trim().is_empty() {
            return Err(PromptError::ContractViolation(
                "persona role description must be non-empty".into(),
            ));
        }
        Ok(Self { role_description })
    }
}

impl Default for PersonaConfig {
    fn default() -> Self {
        Self {
            role_description: "experienced requirements engineer and business analyst".into(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn placeholder_scan_finds_tokens_and_ignores_json() {
        let body = r#"Use {persona} and {template}. Reply {"complete": true}. Not {Upper} or {with space}."#;
        assert_eq!(scan_placeholders(body), vec!["persona", "template"]);
    }

    #[test]
    fn validate_rejects_undocumented_placeholder() {
        let v = PromptVersion {
            id: 1,
            kind: PromptKind::Completeness,
            body_template: "{template} {document} {scale}".into(),
            rationale: "test".into(),
            iteration_introduced: 1,
        };
        assert!(matches!(
            v.validate(),
            Err(PromptError::UnknownPlaceholder { .. })
        ));
    }

    #[test]
    fn kind_round_trips_through_strings() {
        for kind in PromptKind::ALL {
            assert_eq!(kind.as_str().parse::<PromptKind>().unwrap(), kind);
        }
    }
}
