//! Document model: the section template, the industry-domain registry,
//! the parsed document, and the deterministic structural validator.

mod document;
mod domain;
mod template;
mod validate;

pub use document::{parse_document, word_count, SectionKey, SsyrsDocument};
pub use domain::{default_registry, Domain, DomainRegistry};
pub use template::{default_template, MainCategory, Template};
pub use validate::{validate_structure, StructuralReport};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum ModelError {
    #[error("empty input document")]
    EmptyInput,
    #[error("no recognizable structure: none of the template headings matched")]
    NoRecognizableStructure,
    #[error("template mismatch: document was parsed against version {document}, validator got {template}")]
    TemplateMismatch { document: String, template: String },
    #[error("invalid domain registry: {0}")]
    InvalidRegistry(String),
    #[error("invalid template: {0}")]
    InvalidTemplate(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
