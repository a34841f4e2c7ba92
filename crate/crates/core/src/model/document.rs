//! Parsing of generated documents against a section template.
//!
//! Generated text drifts in formatting, so heading matching tolerates
//! ATX markers, bold labels, numbering prefixes, case, trailing
//! punctuation, and the "&"/"and" variation. Section bodies are kept
//! verbatim (bullets included): assessments and embeddings must see the
//! text the generator produced.

use super::{Domain, ModelError, Template};

/// Identifies one template slot: (main category, sub-category).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SectionKey {
    pub main: String,
    pub sub: String,
}

/// A parsed document.
#[derive(Debug, Clone, PartialEq)]
pub struct SsyrsDocument {
    pub domain: Domain,
    pub title: String,
    /// Sections in document order, keyed by the template pair they matched.
    pub sections: Vec<(SectionKey, String)>,
    /// Headings that matched no template category, in document order.
    pub extra_headings: Vec<String>,
    pub raw_text: String,
    pub word_count: usize,
    /// Version of the template this document was parsed against.
    pub template_version: String,
}

impl SsyrsDocument {
    pub fn section(&self, main: &str, sub: &str) -> Option<&str> {
        self.sections
            .iter()
            .find(|(k, _)| k.main == main && k.sub == sub)
            .map(|(_, text)| text.as_str())
    }

    /// Canonical markdown form: title, numbered main categories, one
    /// heading per present sub-category, bodies verbatim.
    pub fn to_markdown(&self, template: &Template) -> String {
        let mut out = format!("# {}\n", self.title);
        for (i, mc) in template.main_categories.iter().enumerate() {
            let present: Vec<(&str, &str)> = mc
                .sub_categories
                .iter()
                .filter_map(|sc| self.section(&mc.name, sc).map(|t| (sc.as_str(), t)))
                .collect();
            if present.is_empty() {
                continue;
            }
            out.push_str(&format!("\n## {}. {}\n", i + 1, mc.name));
            for (sub, text) in present {
                out.push_str(&format!("\n### {sub}\n\n{text}\n"));
            }
        }
        out
    }
}

/// Count of maximal whitespace-separated tokens; punctuation stays
/// attached to tokens.
pub fn word_count(raw: &str) -> usize {
    raw.split_whitespace().count()
}

/// Canonical form used to match headings against template names.
fn normalize_heading(raw: &str) -> String {
    let mut s = raw.trim();
    s = s.trim_start_matches('#').trim();
    s = s.trim_matches('*').trim();
    // Numbering prefixes: "1.", "2)", "3.1", "4 -"
    loop {
        let digits = s.chars().take_while(|c| c.is_ascii_digit()).count();
        if digits == 0 {
            break;
        }
        let rest = &s[digits..];
        let rest_trimmed = rest.trim_start_matches(['.', ')', '-']).trim_start();
        if rest_trimmed.len() == rest.len() && !rest.starts_with(char::is_whitespace) {
            break; // a word starting with digits, not a numbering prefix
        }
        s = rest_trimmed.trim_start();
    }
    let s = s.trim_end_matches([':', '.', '-', ' ']);
    s.to_lowercase()
        .replace('&', "and")
        .split_whitespace()
        .collect::<Vec<_>>()
        .join(" ")
}

/// What a line contributes during the scan.
enum Line<'a> {
    MainHeading(usize),
    SubHeading(usize, usize, Option<&'a str>),
    UnmatchedHeading(String),
    Body(&'a str),
}

struct Matcher {
    mains: Vec<String>,
    subs: Vec<(String, usize, usize)>, // normalized sub, main idx, sub idx
}

impl Matcher {
    fn new(template: &Template) -> Self {
        let mains = template
            .main_categories
            .iter()
            .map(|mc| normalize_heading(&mc.name))
            .collect();
        let subs = template
            .main_categories
            .iter()
            .enumerate()
            .flat_map(|(mi, mc)| {
                mc.sub_categories
                    .iter()
                    .enumerate()
                    .map(move |(si, sc)| (normalize_heading(sc), mi, si))
            })
            .collect();
        Self { mains, subs }
    }

    fn classify<'a>(&self, line: &'a str) -> Line<'a> {
        let trimmed = line.trim();
        let is_atx = trimmed.starts_with('#');

        // Bold label, possibly with body text on the same line:
        // "**Stakeholders:**" or "**System Purpose.** The system ...".
        let (label, remainder) = if let Some(inner) = trimmed.strip_prefix("**") {
            match inner.split_once("**") {
                Some((label, rest)) => (label.to_string(), rest.trim_start_matches([':', '.']).trim()),
                None => (trimmed.to_string(), ""),
            }
        } else {
            (trimmed.to_string(), "")
        };

        let norm = normalize_heading(&label);
        if !norm.is_empty() {
            if let Some(mi) = self.mains.iter().position(|m| *m == norm) {
                return Line::MainHeading(mi);
            }
            if let Some((_, mi, si)) = self.subs.iter().find(|(s, _, _)| *s == norm) {
                let rem = (!remainder.is_empty()).then_some(remainder);
                return Line::SubHeading(*mi, *si, rem);
            }
        }
        if is_atx || (trimmed.starts_with("**") && remainder.is_empty()) {
            return Line::UnmatchedHeading(label.trim().to_string());
        }
        Line::Body(line)
    }
}

/// Parse `raw` against `template` for `domain`.
///
/// The title is taken from the first document line when that line matches
/// no template category; otherwise from a quoted system name in the
/// System Purpose section.
pub fn parse_document(
    raw: &str,
    template: &Template,
    domain: &Domain,
) -> Result<SsyrsDocument, ModelError> {
    if raw.trim().is_empty() {
        return Err(ModelError::EmptyInput);
    }
    template.validate()?;
    let matcher = Matcher::new(template);

    let mut sections: Vec<(SectionKey, String)> = Vec::new();
    let mut extra_headings = Vec::new();
    let mut current: Option<usize> = None; // index into sections
    let mut title: Option<String> = None;
    let mut matched_any = false;
    let mut seen_first_line = false;

    let mut push_body = |sections: &mut Vec<(SectionKey, String)>, idx: Option<usize>, text: &str| {
        if let Some(i) = idx {
            let body = &mut sections[i].1;
            if !body.is_empty() {
                body.push('\n');
            }
            body.push_str(text);
        }
    };

    for line in raw.lines() {
        let first = !seen_first_line && !line.trim().is_empty();
        if first {
            seen_first_line = true;
        }
        match matcher.classify(line) {
            Line::MainHeading(_) => {
                matched_any = true;
                current = None;
            }
            Line::SubHeading(mi, si, remainder) => {
                matched_any = true;
                let key = SectionKey {
                    main: template.main_categories[mi].name.clone(),
                    sub: template.main_categories[mi].sub_categories[si].clone(),
                };
                let idx = match sections.iter().position(|(k, _)| *k == key) {
                    Some(i) => i,
                    None => {
                        sections.push((key, String::new()));
                        sections.len() - 1
                    }
                };
                current = Some(idx);
                if let Some(rem) = remainder {
                    push_body(&mut sections, current, rem);
                }
            }
            Line::UnmatchedHeading(text) => {
                if first {
                    title = Some(text);
                } else {
                    extra_headings.push(text);
                }
                current = None;
            }
            Line::Body(text) => {
                if first && current.is_none() {
                    title = Some(text.trim().to_string());
                } else if !text.trim().is_empty() || current.is_some() {
                    push_body(&mut sections, current, text);
                }
            }
        }
    }

    if !matched_any {
        return Err(ModelError::NoRecognizableStructure);
    }

    for (_, body) in &mut sections {
        *body = body.trim().to_string();
    }
    sections.retain(|(_, body)| !body.is_empty());

    let title = title
        .or_else(|| {
            sections
                .iter()
                .find(|(k, _)| normalize_heading(&k.sub) == "system purpose")
                .and_then(|(_, text)| quoted_name(text))
        })
        .unwrap_or_else(|| "Untitled".to_string());

    Ok(SsyrsDocument {
        domain: domain.clone(),
        title,
        sections,
        extra_headings,
        raw_text: raw.to_string(),
        word_count: word_count(raw),
        template_version: template.version.clone(),
    })
}

/// First quoted span in `text`, straight or curly quotes, trimmed of
/// trailing separators.
fn quoted_name(text: &str) -> Option<String> {
    for (open, close) in [('"', '"'), ('\u{201C}', '\u{201D}')] {
        if let Some(start) = text.find(open) {
            let rest = &text[start + open.len_utf8()..];
            if let Some(end) = rest.find(close) {
                let inner = rest[..end].trim().trim_end_matches([',', '.', ';']).trim();
                if !inner.is_empty() {
                    return Some(inner.to_string());
                }
            }
        }
    }
    None
}
