//! Rendering of generation and assessment prompts.

use crate::assess::SeverityScale;
use crate::model::{Domain, DomainRegistry, SsyrsDocument, Template};

use super::{PersonaConfig, PromptError, PromptKind, PromptVersion};

/// Which assessment prompt to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AssessmentKind {
    Completeness,
    Dor,
}

impl AssessmentKind {
    fn prompt_kind(self) -> PromptKind {
        match self {
            AssessmentKind::Completeness => PromptKind::Completeness,
            AssessmentKind::Dor => PromptKind::Dor,
        }
    }
}

/// Render the structure instructions: numbered main categories, each with
/// its ordered sub-categories.
fn render_template_instructions(template: &Template) -> String {
    let mut out = String::new();
    for (i, mc) in template.main_categories.iter().enumerate() {
        out.push_str(&format!(
            "   {}. {}: {}\n",
            i + 1,
            mc.name,
            mc.sub_categories.join("; ")
        ));
    }
    out.trim_end().to_string()
}

fn render_variation_clause(prior_titles: &[String]) -> String {
    if prior_titles.is_empty() {
        return String::new();
    }
    let quoted: Vec<String> = prior_titles.iter().map(|t| format!("\"{t}\"")).collect();
    format!(
        "Vary the scenario's content from the scenarios already generated in this \
         iteration. Systems already used: {}. Invent a clearly different system \
         concept, scope, and emphasis.\n\n",
        quoted.join(", ")
    )
}

fn render(body: &str, substitutions: &[(&str, &str)]) -> String {
    let mut out = body.to_string();
    for (name, value) in substitutions {
        out = out.replace(&format!("{{{name}}}"), value);
    }
    out
}

fn check_kind(version: &PromptVersion, expected: PromptKind) -> Result<(), PromptError> {
    if version.kind != expected {
        return Err(PromptError::WrongPromptKind {
            expected,
            got: version.kind,
        });
    }
    version.validate()
}

/// Build the generation prompt for one document.
///
/// The rendered prompt names the artifact "scenario" and never contains
/// the string "SSyRS"; when `prior_titles` is empty the variation clause
/// is omitted entirely.
pub fn build_generation_prompt(
    registry: &DomainRegistry,
    domain: &Domain,
    template: &Template,
    prior_titles: &[String],
    persona: &PersonaConfig,
    version: &PromptVersion,
) -> Result<String, PromptError> {
    check_kind(version, PromptKind::Generation)?;
    match registry.by_id(domain.id) {
        Some(known) if known == domain => {}
        _ => {
            return Err(PromptError::UnknownDomain(format!(
                "id {} ({})",
                domain.id, domain.name
            )))
        }
    }

    let rendered = render(
        &version.body_template,
        &[
            ("persona", persona.role_description.as_str()),
            ("domain", domain.name.as_str()),
            ("template", &render_template_instructions(template)),
            ("variation", &render_variation_clause(prior_titles)),
        ],
    );

    if rendered.contains("SSyRS") {
        return Err(PromptError::ContractViolation(
            "generation prompt must not contain the string \"SSyRS\"".into(),
        ));
    }
    if !rendered.contains("scenario") {
        return Err(PromptError::ContractViolation(
            "generation prompt must name the artifact \"scenario\"".into(),
        ));
    }
    Ok(rendered)
}

/// Build a completeness or realism assessment prompt for one document.
/// `scale` is required for [`AssessmentKind::Dor`] and validated at build
/// time; both prompts embed the document text verbatim.
pub fn build_assessment_prompt(
    kind: AssessmentKind,
    doc: &SsyrsDocument,
    template: &Template,
    scale: Option<&SeverityScale>,
    persona: &PersonaConfig,
    version: &PromptVersion,
) -> Result<String, PromptError> {
    check_kind(version, kind.prompt_kind())?;
    let rendered = match kind {
        AssessmentKind::Completeness => render(
            &version.body_template,
            &[
                ("template", &render_template_instructions(template)),
                ("document", doc.raw_text.as_str()),
            ],
        ),
        AssessmentKind::Dor => {
            let scale = scale.ok_or_else(|| {
                PromptError::InvalidScale("realism assessment requires a severity scale".into())
            })?;
            scale
                .validate()
                .map_err(|e| PromptError::InvalidScale(e.to_string()))?;
            render(
                &version.body_template,
                &[
                    ("persona", persona.role_description.as_str()),
                    ("scale", &scale.render_instructions()),
                    ("document", doc.raw_text.as_str()),
                ],
            )
        }
    };
    Ok(rendered)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::assess::SeverityScale;
    use crate::model::{default_registry, default_template, parse_document};

    fn version(kind: PromptKind, body: &str) -> PromptVersion {
        PromptVersion {
            id: 1,
            kind,
            body_template: body.into(),
            rationale: "test".into(),
            iteration_introduced: 1,
        }
    }

    fn repo_prompt(kind: PromptKind) -> PromptVersion {
        let path = std::path::Path::new(env!("CARGO_MANIFEST_DIR"))
            .join(format!("../../prompts/{}/v1.txt", kind.as_str()));
        version(kind, &std::fs::read_to_string(path).unwrap())
    }

    fn fixture_doc() -> SsyrsDocument {
        let path = std::path::Path::new(env!("CARGO_MANIFEST_DIR"))
            .join("../../fixtures/ssyrs/logistics_dfop.md");
        let raw = std::fs::read_to_string(path).unwrap();
        let domain = default_registry().by_abbreviation("logi").unwrap().clone();
        parse_document(&raw, &default_template(), &domain).unwrap()
    }

    #[test]
    fn generation_prompt_contains_persona_and_scenario() {
        let registry = default_registry();
        let domain = registry.by_abbreviation("logi").unwrap();
        let prompt = build_generation_prompt(
            &registry,
            domain,
            &default_template(),
            &[],
            &PersonaConfig::default(),
            &repo_prompt(PromptKind::Generation),
        )
        .unwrap();
        assert!(prompt.contains("experienced requirements engineer and business analyst"));
        assert!(prompt.contains("scenario"));
        assert!(prompt.contains("Logistics"));
        assert!(!prompt.contains("SSyRS"));
        assert!(!prompt.contains("Vary the scenario"));
    }

    #[test]
    fn variation_clause_lists_prior_titles() {
        let registry = default_registry();
        let domain = registry.by_abbreviation("logi").unwrap();
        let prompt = build_generation_prompt(
            &registry,
            domain,
            &default_template(),
            &["DFOP".into(), "FleetHub".into()],
            &PersonaConfig::default(),
            &repo_prompt(PromptKind::Generation),
        )
        .unwrap();
        assert!(prompt.contains("\"DFOP\""));
        assert!(prompt.contains("\"FleetHub\""));
    }

    #[test]
    fn unknown_domain_is_rejected() {
        let registry = default_registry();
        let bogus = Domain {
            id: 99,
            name: "Nope".into(),
            abbreviation: "nope".into(),
        };
        let err = build_generation_prompt(
            &registry,
            &bogus,
            &default_template(),
            &[],
            &PersonaConfig::default(),
            &repo_prompt(PromptKind::Generation),
        )
        .unwrap_err();
        assert!(matches!(err, PromptError::UnknownDomain(_)));
    }

    #[test]
    fn wrong_kind_is_rejected() {
        let registry = default_registry();
        let domain = registry.by_abbreviation("edu").unwrap();
        let err = build_generation_prompt(
            &registry,
            domain,
            &default_template(),
            &[],
            &PersonaConfig::default(),
            &repo_prompt(PromptKind::Dor),
        )
        .unwrap_err();
        assert!(matches!(err, PromptError::WrongPromptKind { .. }));
    }

    #[test]
    fn body_mentioning_forbidden_name_is_rejected() {
        let registry = default_registry();
        let domain = registry.by_abbreviation("fin").unwrap();
        let v = version(
            PromptKind::Generation,
            "Generate an SSyRS scenario for {domain}.",
        );
        let err = build_generation_prompt(
            &registry,
            domain,
            &default_template(),
            &[],
            &PersonaConfig::default(),
            &v,
        )
        .unwrap_err();
        assert!(matches!(err, PromptError::ContractViolation(_)));
    }

    #[test]
    fn completeness_prompt_lists_all_sub_categories_and_boolean_instruction() {
        let template = default_template();
        let doc = fixture_doc();
        let prompt = build_assessment_prompt(
            AssessmentKind::Completeness,
            &doc,
            &template,
            None,
            &PersonaConfig::default(),
            &repo_prompt(PromptKind::Completeness),
        )
        .unwrap();
        for (_, sub) in template.pairs() {
            assert!(prompt.contains(sub), "missing sub-category {sub}");
        }
        assert!(prompt.contains("boolean"));
        assert!(prompt.contains(&doc.raw_text));
    }

    #[test]
    fn dor_prompt_embeds_scale_and_scoring_rule() {
        let template = default_template();
        let doc = fixture_doc();
        let scale = SeverityScale::default();
        let prompt = build_assessment_prompt(
            AssessmentKind::Dor,
            &doc,
            &template,
            Some(&scale),
            &PersonaConfig::default(),
            &repo_prompt(PromptKind::Dor),
        )
        .unwrap();
        assert!(prompt.contains("subtract"));
        assert!(prompt.contains("experienced requirements engineer and business analyst"));
        for level in scale.levels() {
            assert!(prompt.contains(&level.name), "missing level {}", level.name);
        }
        assert!(prompt.contains(&doc.raw_text));
    }

    #[test]
    fn dor_prompt_requires_valid_scale() {
        let doc = fixture_doc();
        let err = build_assessment_prompt(
            AssessmentKind::Dor,
            &doc,
            &default_template(),
            None,
            &PersonaConfig::default(),
            &repo_prompt(PromptKind::Dor),
        )
        .unwrap_err();
        assert!(matches!(err, PromptError::InvalidScale(_)));
    }

    #[test]
    fn rendering_is_deterministic() {
        let registry = default_registry();
        let domain = registry.by_abbreviation("heal").unwrap();
        let build = || {
            build_generation_prompt(
                &registry,
                domain,
                &default_template(),
                &["MediTrack".into()],
                &PersonaConfig::default(),
                &repo_prompt(PromptKind::Generation),
            )
            .unwrap()
        };
        assert_eq!(build(), build());
    }
}
