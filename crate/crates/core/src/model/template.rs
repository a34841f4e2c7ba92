//! Section template: the ordered main categories and sub-categories a
//! generated document must cover. The template is data, loaded from a
//! config file, so refined or alternative templates can be supplied
//! without code changes.

use std::path::Path;

use serde::{Deserialize, Serialize};

use super::ModelError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MainCategory {
    pub name: String,
    pub sub_categories: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Template {
    pub version: String,
    pub main_categories: Vec<MainCategory>,
}

impl Template {
    /// Checks that sub-category names are unique across the template and
    /// that no category is empty.
    pub fn validate(&self) -> Result<(), ModelError> {
        if self.main_categories.is_empty() {
            return Err(ModelError::InvalidTemplate("no main categories".into()));
        }
        let mut seen = std::collections::HashSet::new();
        for mc in &self.main_categories {
            if mc.name.trim().is_empty() {
                return Err(ModelError::InvalidTemplate("empty main category name".into()));
            }
            for sc in &mc.sub_categories {
                if sc.trim().is_empty() {
                    return Err(ModelError::InvalidTemplate(format!(
                        "empty sub-category under {}",
                        mc.name
                    )));
                }
                if !seen.insert(sc.to_lowercase()) {
                    return Err(ModelError::InvalidTemplate(format!(
                        "duplicate sub-category: {sc}"
                    )));
                }
            }
        }
        Ok(())
    }

    /// All (main, sub) pairs in template order.
    pub fn pairs(&self) -> impl Iterator<Item = (&str, &str)> {
        self.main_categories.iter().flat_map(|mc| {
            mc.sub_categories
                .iter()
                .map(move |sc| (mc.name.as_str(), sc.as_str()))
        })
    }

    pub fn sub_category_count(&self) -> usize {
        self.main_categories.iter().map(|mc| mc.sub_categories.len()).sum()
    }

    pub fn from_json_file(path: &Path) -> Result<Self, ModelError> {
        let text = std::fs::read_to_string(path)?;
        let template: Template = serde_json::from_str(&text)?;
        template.validate()?;
        Ok(template)
    }

    pub fn to_json_file(&self, path: &Path) -> Result<(), ModelError> {
        let mut text = serde_json::to_string_pretty(self)?;
        text.push('\n');
        std::fs::write(path, text)?;
        Ok(())
    }
}

/// The default template: 4 main categories, 19 sub-categories.
pub fn default_template() -> Template {
    let cat = |name: &str, subs: &[&str]| MainCategory {
        name: name.to_string(),
        sub_categories: subs.iter().map(|s| s.to_string()).collect(),
    };
    let template = Template {
        version: "1".to_string(),
        main_categories: vec![
            cat(
                "System Overview",
                &[
                    "System Purpose",
                    "Domain/Context",
                    "Stakeholders",
                    "User Base Characteristics",
                    "Operational Environment",
                    "Usage Scenarios",
                ],
            ),
            cat(
                "Functional Requirements",
                &[
                    "Core Features",
                    "Authentication Conditions & Frequency",
                    "Sensitivity of Actions & Permission Levels",
                ],
            ),
            cat(
                "Non-Functional Requirements",
                &[
                    "Performance",
                    "Scalability",
                    "Reliability",
                    "Security",
                    "Usability",
                    "Audit & Monitoring",
                ],
            ),
            cat(
                "Constraints",
                &[
                    "Technical Constraints",
                    "Compliance Requirements",
                    "Resource Constraints",
                    "Integration Needs",
                ],
            ),
        ],
    };
    template.validate().expect("default template is valid");
    template
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_template_shape() {
        let t = default_template();
        assert_eq!(t.main_categories.len(), 4);
        assert_eq!(t.sub_category_count(), 19);
        let per_main: Vec<usize> = t.main_categories.iter().map(|m| m.sub_categories.len()).collect();
        assert_eq!(per_main, vec![6, 3, 6, 4]);
        assert_eq!(t.main_categories[3].name, "Constraints");
        assert_eq!(t.main_categories[3].sub_categories.len(), 4);
    }

    #[test]
    fn rejects_duplicate_sub_categories() {
        let t = Template {
            version: "x".into(),
            main_categories: vec![
                MainCategory { name: "A".into(), sub_categories: vec!["S".into()] },
                MainCategory { name: "B".into(), sub_categories: vec!["s".into()] },
            ],
        };
        assert!(t.validate().is_err());
    }

    #[test]
    fn json_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("template.json");
        let t = default_template();
        t.to_json_file(&path).unwrap();
        let loaded = Template::from_json_file(&path).unwrap();
        assert_eq!(t, loaded);
    }
}
