//! Core library for `similex`, a bilingual (English/French) toolkit that finds
//! *simile candidates* in literary prose: sentence regions where an explicit
//! comparison marker ("akin to", "pareil à", "seemed", a "-like" adjective …)
//! is immediately followed by a noun phrase headed by a common noun.
//!
//! The processing pipeline is
//!
//! ```text
//! raw text ─ segment ─ tokenize ─ tag ─ chunk ─ match markers ─ candidates
//!                (or: pre-tagged TSV input) ──────┘
//! ```
//!
//! and a small statistics layer turns candidate lists into per-document /
//! per-author / per-marker frequency tables with exact per-sentence rates.
//!
//! Everything here is deterministic: identical inputs produce byte-identical
//! outputs regardless of thread count, platform, or hash-map iteration order.

pub mod chunker;
pub mod corpus;
pub mod data;
pub mod error;
pub mod extract;
pub mod lexicon;
pub mod output;
pub mod pipeline;
pub mod stats;
pub mod types;

pub use chunker::{chunk_nps, np_head, Chunk};
pub use corpus::{load_corpus, load_document, manifest_dir, read_manifest, Document, ManifestEntry};
pub use data::{DataSource, DATA_DIR_ENV};
pub use error::{Error, Result};
pub use extract::{
    candidate_from_match, extract_document, extract_tagged, find_marker_matches, resolve_overlaps,
    DocExtraction, ExtractOptions, Extractor, MarkerMatch, SimileCandidate,
};
pub use lexicon::{
    builtin_lexicon, compile_lexicon, detect_colour_compound, detect_like_suffix, load_lexicon,
    validate_patterns, ColourLexicon, CompiledLexicon, ElementSpec, MarkerCategory, MarkerPattern,
    PatternKind,
};
pub use output::{
    load_candidates, read_candidates_csv, read_candidates_jsonl, read_sidecar, sidecar_path,
    write_candidates_csv, write_candidates_jsonl, write_report_csv, write_report_json,
    write_sidecar, Sidecar, SidecarDocument, CANDIDATE_CSV_HEADER, REPORT_CSV_HEADER,
};
pub use pipeline::{
    analyze_text, normalize_tag, read_tagged, read_tagged_path, segment_sentences, tokenize,
    write_tagged, FallbackTagger, PosTag, RawToken, Sentence, Tagset, Token,
};
pub use stats::{
    aggregate, aggregate_with_categories, build_report, builtin_marker_categories, merge,
    per_sentence_rate, rank_markers, AggregateRow, DocMeta, FrequencyReport, GroupBy, Rate,
};
pub use types::{Language, Span};
