//! Error type shared by every module in this crate.

use std::io;

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

/// All the ways loading, parsing, extraction, or reporting can fail.
///
/// Every variant carries enough context (a path, a document id, a marker id,
/// or a line/row number) to locate the offending input without a debugger.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// An underlying I/O failure, annotated with the path involved.
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: io::Error,
    },

    /// A manifest row that could not be parsed or fails validation.
    #[error("manifest row {row}: {message}")]
    ManifestRow { row: usize, message: String },

    /// Two manifest rows declared the same document id.
    #[error("duplicate document id `{id}` in manifest")]
    DuplicateDocId { id: String },

    /// A malformed line in a pre-tagged token file.
    #[error("tagged input line {line}: {message}")]
    TaggedLine { line: usize, message: String },

    /// A marker lexicon file that is not valid JSON.
    #[error("lexicon {path}: {message}")]
    LexiconParse { path: String, message: String },

    /// A marker lexicon entry that fails schema validation. `entry` is a
    /// JSON-pointer-like locator such as `entries[3].max_gap`.
    #[error("lexicon {entry}: {message}")]
    LexiconValidation { entry: String, message: String },

    /// Two lexicon entries declared the same marker id.
    #[error("duplicate marker id `{id}`")]
    DuplicateMarkerId { id: String },

    /// A marker pattern that cannot be compiled into a matcher.
    #[error("pattern `{id}`: {message}")]
    PatternCompile { id: String, message: String },

    /// A document routed to an extractor built for the other language.
    #[error("document `{doc_id}` is tagged `{doc_language}` but the extractor was built for `{expected}`")]
    LanguageMismatch {
        doc_id: String,
        doc_language: String,
        expected: String,
    },

    /// A per-document operation received candidates from several documents.
    #[error("candidates span multiple documents: `{first}` and `{second}`")]
    MixedDocuments { first: String, second: String },

    /// A per-sentence rate was requested for a document with zero sentences.
    #[error("document `{doc_id}` has no sentences; per-sentence rate is undefined")]
    ZeroSentences { doc_id: String },

    /// A document id referenced by a report that the report never saw.
    #[error("unknown document `{doc_id}`")]
    UnknownDocument { doc_id: String },

    /// Two reports being merged disagree about a document's metadata.
    #[error("cannot merge reports: conflicting entries for document `{doc_id}`")]
    MergeConflict { doc_id: String },

    /// A malformed candidate file, sidecar, or other structured input.
    #[error("{path}: {message}")]
    Format { path: String, message: String },
}

impl Error {
    /// Wraps an [`io::Error`] with the path that produced it.
    pub fn io(path: impl Into<String>, source: io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    /// Shorthand for a [`Error::Format`] with an owned message.
    pub fn format(path: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Format {
            path: path.into(),
            message: message.into(),
        }
    }
}
