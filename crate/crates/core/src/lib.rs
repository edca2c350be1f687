//! Build weighted retweet networks from social-media post dumps, detect
//! communities by modularity clustering, characterize the language of a
//! selected community, and train author-level binary text classifiers.
//!
//! The crate is organized along the pipeline:
//!
//! - [`ingest`]: parse/filter post datasets, plus a synthetic generator
//! - [`graph`]: weighted directed retweet network, principal component
//! - [`community`]: modularity, Louvain clustering, community summaries
//! - [`corpus`]: per-author token documents (words, hashtags, emoji aliases)
//! - [`termscatter`]: per-class term-association scatter data
//! - [`features`]: vocabulary, bag-of-words and sequence encodings, sampling
//! - [`models`]: eight classifier families with a uniform score contract
//! - [`eval`]: accuracy, ROC/AUC, and report tables
//! - [`pipeline`]: one-config orchestration with content-hash stage caching

pub mod community;
pub mod corpus;
pub mod data;
pub mod eval;
pub mod features;
pub mod graph;
pub mod ingest;
pub mod models;
pub mod pipeline;
pub mod termscatter;
