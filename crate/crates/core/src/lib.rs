//! Core library for the specforge pipeline: generation of synthetic system
//! requirement documents through a chat-LLM gateway, quality gating
//! (structural completeness, realism scoring, semantic similarity), run
//! persistence, and report generation.
//!
//! The crate is organized along the pipeline stages:
//!
//! - [`model`] — document template, parsed document model, deterministic
//!   structural validator, and the industry-domain registry.
//! - [`prompt`] — prompt construction from versioned placeholder templates
//!   and the append-only refinement ledger.
//! - [`gateway`] — provider-agnostic chat gateway with shared-context
//!   sessions, a live HTTP provider, and a scripted deterministic mock.
//! - [`assess`] — completeness and realism assessments: judge-response
//!   parsing, score recomputation, and cross-checks against the validator.
//! - [`similarity`] — document embeddings and pairwise cosine similarity.
//! - [`stats`] — descriptive statistics and table aggregation.
//! - [`pipeline`] — iteration orchestration, manifests, resume, and the
//!   recorded human continue/terminate decision.
//! - [`report`] — report rendering and corpus export/import.

pub mod assess;
pub mod gateway;
pub mod model;
pub mod pipeline;
pub mod prompt;
pub mod report;
pub mod similarity;
pub mod stats;
