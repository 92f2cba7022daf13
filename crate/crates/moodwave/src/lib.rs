//! Music mood classification toolkit.
//!
//! The pipeline runs in stages: decode or synthesize audio ([`audio`]),
//! compute a 204-row per-frame feature matrix ([`features`]), optionally
//! expand the dataset with label-preserving transforms ([`augment`]), train
//! recurrent classifiers ([`seqnet`]) or classical baselines ([`baselines`])
//! under the split/normalization protocol in [`trainkit`], and report
//! metrics and embeddings from [`eval`].

pub mod audio;
pub mod augment;
pub mod baselines;
pub mod config;
pub mod eval;
pub mod features;
pub mod parallel;
pub mod seqnet;
pub mod synthset;
pub mod trainkit;
