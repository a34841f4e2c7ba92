//! Industry-domain registry.

use serde::{Deserialize, Serialize};

use super::ModelError;

/// One industry domain documents are generated for.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Domain {
    pub id: u32,
    pub name: String,
    pub abbreviation: String,
}

/// Validated set of domains: ids contiguous from 1, abbreviations unique,
/// non-empty, and lowercase.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Domain>", into = "Vec<Domain>")]
pub struct DomainRegistry {
    domains: Vec<Domain>,
}

impl DomainRegistry {
    pub fn new(domains: Vec<Domain>) -> Result<Self, ModelError> {
        if domains.is_empty() {
            return Err(ModelError::InvalidRegistry("no domains".into()));
        }
        for (i, d) in domains.iter().enumerate() {
            if d.id != i as u32 + 1 {
                return Err(ModelError::InvalidRegistry(format!(
                    "ids must be contiguous from 1, found id {} at position {}",
                    d.id,
                    i + 1
                )));
            }
            if d.abbreviation.is_empty() {
                return Err(ModelError::InvalidRegistry(format!(
                    "empty abbreviation for domain {}",
                    d.name
                )));
            }
            if d.abbreviation.chars().any(|c| c.is_uppercase()) {
                return Err(ModelError::InvalidRegistry(format!(
                    "abbreviation must be lowercase: {}",
                    d.abbreviation
                )));
            }
            if domains[..i].iter().any(|o| o.abbreviation == d.abbreviation) {
                return Err(ModelError::InvalidRegistry(format!(
                    "duplicate abbreviation: {}",
                    d.abbreviation
                )));
            }
        }
        Ok(Self { domains })
    }

    pub fn domains(&self) -> &[Domain] {
        &self.domains
    }

    pub fn by_id(&self, id: u32) -> Option<&Domain> {
        self.domains.iter().find(|d| d.id == id)
    }

    pub fn by_abbreviation(&self, abbreviation: &str) -> Option<&Domain> {
        self.domains.iter().find(|d| d.abbreviation == abbreviation)
    }

    pub fn len(&self) -> usize {
        self.domains.len()
    }

    pub fn is_empty(&self) -> bool {
        self.domains.is_empty()
    }
}

impl TryFrom<Vec<Domain>> for DomainRegistry {
    type Error = ModelError;

    fn try_from(domains: Vec<Domain>) -> Result<Self, Self::Error> {
        Self::new(domains)
    }
}

impl From<DomainRegistry> for Vec<Domain> {
    fn from(r: DomainRegistry) -> Self {
        r.domains
    }
}

/// The ten default industry domains.
pub fn default_registry() -> DomainRegistry {
    let names: [(&str, &str); 10] = [
        ("E-Commerce", "e-com"),
        ("Education", "edu"),
        ("Finance", "fin"),
        ("Government and Public Services", "gov"),
        ("Healthcare", "heal"),
        ("Logistics", "logi"),
        ("Manufacturing", "manu"),
        ("Media-Entertainment", "media"),
        ("Retail and Supply Chain", "ret"),
        ("Telecommunications", "tele"),
    ];
    let domains = names
        .iter()
        .enumerate()
        .map(|(i, (name, abbr))| Domain {
            id: i as u32 + 1,
            name: name.to_string(),
            abbreviation: abbr.to_string(),
        })
        .collect();
    DomainRegistry::new(domains).expect("default registry is valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_registry_has_ten_domains() {
        let r = default_registry();
        assert_eq!(r.len(), 10);
        assert_eq!(r.by_id(6).unwrap().name, "Logistics");
        assert_eq!(r.by_abbreviation("logi").unwrap().id, 6);
        assert_eq!(r.by_abbreviation("e-com").unwrap().name, "E-Commerce");
    }

    #[test]
    fn rejects_gapped_ids() {
        let ds = vec![
            Domain { id: 1, name: "A".into(), abbreviation: "a".into() },
            Domain { id: 3, name: "B".into(), abbreviation: "b".into() },
        ];
        assert!(DomainRegistry::new(ds).is_err());
    }

    #[test]
    fn rejects_duplicate_or_uppercase_abbreviations() {
        let dup = vec![
            Domain { id: 1, name: "A".into(), abbreviation: "x".into() },
            Domain { id: 2, name: "B".into(), abbreviation: "x".into() },
        ];
        assert!(DomainRegistry::new(dup).is_err());
        let upper = vec![Domain { id: 1, name: "A".into(), abbreviation: "X".into() }];
        assert!(DomainRegistry::new(upper).is_err());
    }
}
