//! Test support for the `similex` workspace: independently written naive
//! oracles (chunking, fixed-sequence matching, candidate lookup) and seeded
//! random generators (tagged sentences, frequency reports, whole synthetic
//! novels).
//!
//! Nothing here is compiled into release artifacts; the crate exists so the
//! main implementations can be checked against brute-force re-implementations
//! that share no code with them.

pub mod gen;
pub mod naive;
pub mod novel;

pub use gen::{random_report, random_tagged_sentence, report_pair_with_shared_docs};
pub use naive::{
    naive_candidate_for_match, naive_chunks, naive_extract_sentence, naive_fixed_seq_matches,
    naive_marker_matches, naive_resolve_overlaps,
};
pub use novel::synthetic_novel;
