//! Append-only ledger of prompt versions.
//!
//! Layout: `<root>/<kind>/v<N>.txt` holds the body template; `<root>/ledger.json`
//! records id, kind, rationale, iteration, and a content hash per version.
//! Earlier versions stay retrievable forever; refinement only appends.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::{PromptError, PromptKind, PromptVersion};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
struct LedgerEntry {
    id: u32,
    kind: PromptKind,
    rationale: String,
    iteration: u32,
    content_hash: String,
}

#[derive(Debug, Default, Serialize, Deserialize)]
struct LedgerFile {
    entries: Vec<LedgerEntry>,
}

/// Directory-backed prompt version store.
#[derive(Debug)]
pub struct PromptLedger {
    root: PathBuf,
    entries: Vec<LedgerEntry>,
}

fn hash_body(body: &str) -> String {
    let mut hasher = Sha256::new();
    hasher.update(body.as_bytes());
    format!("{:x}", hasher.finalize())
}

impl PromptLedger {
    /// Open (or initialize) the ledger at `root`.
    pub fn open(root: impl Into<PathBuf>) -> Result<Self, PromptError> {
        let root = root.into();
        let ledger_path = root.join("ledger.json");
        let entries = if ledger_path.exists() {
            let text = std::fs::read_to_string(&ledger_path)?;
            let file: LedgerFile = serde_json::from_str(&text)?;
            file.entries
        } else {
            Vec::new()
        };
        let ledger = Self { root, entries };
        ledger.check_gapless()?;
        Ok(ledger)
    }

    fn check_gapless(&self) -> Result<(), PromptError> {
        for kind in PromptKind::ALL {
            let ids: Vec<u32> = self
                .entries
                .iter()
                .filter(|e| e.kind == kind)
                .map(|e| e.id)
                .collect();
            for (i, id) in ids.iter().enumerate() {
                if *id != i as u32 + 1 {
                    return Err(PromptError::LedgerCorrupt(format!(
                        "{kind} versions are not gapless from 1: found v{id} at position {}",
                        i + 1
                    )));
                }
            }
        }
        Ok(())
    }

    fn body_path(&self, kind: PromptKind, id: u32) -> PathBuf {
        self.root.join(kind.as_str()).join(format!("v{id}.txt"))
    }

    /// Register a refined prompt body. The new version gets the next id
    /// for its kind; the ledger is append-only.
    pub fn register_refinement(
        &mut self,
        kind: PromptKind,
        new_body: &str,
        rationale: &str,
        iteration: u32,
    ) -> Result<PromptVersion, PromptError> {
        if rationale.trim().is_empty() {
            return Err(PromptError::EmptyRationale);
        }
        let id = self.latest(kind).unwrap_or(0) + 1;
        let version = PromptVersion {
            id,
            kind,
            body_template: new_body.to_string(),
            rationale: rationale.to_string(),
            iteration_introduced: iteration,
        };
        version.validate()?;

        let path = self.body_path(kind, id);
        std::fs::create_dir_all(path.parent().expect("body path has a parent"))?;
        std::fs::write(&path, new_body)?;

        self.entries.push(LedgerEntry {
            id,
            kind,
            rationale: rationale.to_string(),
            iteration,
            content_hash: hash_body(new_body),
        });
        self.save()?;
        Ok(version)
    }

    fn save(&self) -> Result<(), PromptError> {
        std::fs::create_dir_all(&self.root)?;
        let file = LedgerFile {
            entries: self.entries.clone(),
        };
        let mut text = serde_json::to_string_pretty(&file)?;
        text.push('\n');
        std::fs::write(self.root.join("ledger.json"), text)?;
        Ok(())
    }

    /// Load one version; the stored body must match its ledger hash.
    pub fn get(&self, kind: PromptKind, id: u32) -> Result<PromptVersion, PromptError> {
        let entry = self
            .entries
            .iter()
            .find(|e| e.kind == kind && e.id == id)
            .ok_or(PromptError::VersionNotFound { kind, id })?;
        let body = std::fs::read_to_string(self.body_path(kind, id))
            .map_err(|_| PromptError::VersionNotFound { kind, id })?;
        if hash_body(&body) != entry.content_hash {
            return Err(PromptError::LedgerCorrupt(format!(
                "{kind} v{id} body does not match its ledger hash"
            )));
        }
        Ok(PromptVersion {
            id,
            kind,
            body_template: body,
            rationale: entry.rationale.clone(),
            iteration_introduced: entry.iteration,
        })
    }

    /// Highest registered id for `kind`, if any.
    pub fn latest(&self, kind: PromptKind) -> Option<u32> {
        self.entries
            .iter()
            .filter(|e| e.kind == kind)
            .map(|e| e.id)
            .max()
    }

    pub fn versions(&self, kind: PromptKind) -> Vec<u32> {
        self.entries
            .iter()
            .filter(|e| e.kind == kind)
            .map(|e| e.id)
            .collect()
    }

    pub fn root(&self) -> &Path {
        &self.root
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registrations_number_from_one() {
        let dir = tempfile::tempdir().unwrap();
        let mut ledger = PromptLedger::open(dir.path()).unwrap();
        let v1 = ledger
            .register_refinement(PromptKind::Generation, "body {domain}", "initial", 1)
            .unwrap();
        assert_eq!(v1.id, 1);
        let v2 = ledger
            .register_refinement(PromptKind::Generation, "body two {domain}", "tightened", 2)
            .unwrap();
        assert_eq!(v2.id, 2);
        assert_eq!(ledger.versions(PromptKind::Generation), vec![1, 2]);
    }

    #[test]
    fn empty_rationale_is_rejected() {
        let dir = tempfile::tempdir().unwrap();
        let mut ledger = PromptLedger::open(dir.path()).unwrap();
        assert!(matches!(
            ledger.register_refinement(PromptKind::Dor, "b", "", 1),
            Err(PromptError::EmptyRationale)
        ));
    }

    #[test]
    fn old_versions_stay_retrievable_and_unchanged() {
        let dir = tempfile::tempdir().unwrap();
        let mut ledger = PromptLedger::open(dir.path()).unwrap();
        ledger
            .register_refinement(PromptKind::Completeness, "first {document}", "initial", 1)
            .unwrap();
        ledger
            .register_refinement(PromptKind::Completeness, "second {document}", "clearer", 3)
            .unwrap();

        let reopened = PromptLedger::open(dir.path()).unwrap();
        let v1 = reopened.get(PromptKind::Completeness, 1).unwrap();
        assert_eq!(v1.body_template, "first {document}");
        let v2 = reopened.get(PromptKind::Completeness, 2).unwrap();
        assert_eq!(v2.body_template, "second {document}");
        assert_eq!(v2.iteration_introduced, 3);
        assert_eq!(reopened.latest(PromptKind::Completeness), Some(2));
    }

    #[test]
    fn tampered_body_is_detected() {
        let dir = tempfile::tempdir().unwrap();
        let mut ledger = PromptLedger::open(dir.path()).unwrap();
        ledger
            .register_refinement(PromptKind::Dor, "{document}", "initial", 1)
            .unwrap();
        std::fs::write(dir.path().join("dor/v1.txt"), "altered").unwrap();
        let reopened = PromptLedger::open(dir.path()).unwrap();
        assert!(matches!(
            reopened.get(PromptKind::Dor, 1),
            Err(PromptError::LedgerCorrupt(_))
        ));
    }

    #[test]
    fn repo_ledger_is_consistent() {
        let root = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../prompts");
        let ledger = PromptLedger::open(root).unwrap();
        for kind in PromptKind::ALL {
            assert_eq!(ledger.latest(kind), Some(1), "missing repo prompt for {kind}");
            let v = ledger.get(kind, 1).unwrap();
            v.validate().unwrap();
        }
    }
}
