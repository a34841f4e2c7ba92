//! Deterministic structural validation: the local counterpart to the
//! LLM completeness check.

use serde::{Deserialize, Serialize};

use super::{ModelError, SsyrsDocument, Template};

/// Outcome of checking a document against its template.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructuralReport {
    pub complete: bool,
    /// Template (main, sub) pairs with no non-empty section text, in
    /// template order.
    pub missing: Vec<(String, String)>,
    pub extra_headings: Vec<String>,
}

/// Check that `doc` covers every template sub-category. Deterministic:
/// the same input yields a byte-identical report.
pub fn validate_structure(
    doc: &SsyrsDocument,
    template: &Template,
) -> Result<StructuralReport, ModelError> {
    if doc.template_version != template.version {
        return Err(ModelError::TemplateMismatch {
            document: doc.template_version.clone(),
            template: template.version.clone(),
        });
    }
    let missing: Vec<(String, String)> = template
        .pairs()
        .filter(|(main, sub)| {
            doc.section(main, sub)
                .map(|t| t.trim().is_empty())
                .unwrap_or(true)
        })
        .map(|(main, sub)| (main.to_string(), sub.to_string()))
        .collect();
    Ok(StructuralReport {
        complete: missing.is_empty(),
        missing,
        extra_headings: doc.extra_headings.clone(),
    })
}
