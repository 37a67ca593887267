//! The text pipeline: raw document text (or pre-tagged TSV) in, tagged and
//! sentence-segmented token sequences out.
//!
//! Two input modes feed the same downstream representation:
//!
//! * **Pre-tagged TSV** (`surface<TAB>tag<TAB>lemma`, one token per line) as
//!   produced by external taggers — see [`read_tagged`]. Gold-standard tests
//!   use this path because it carries curated tags.
//! * **Raw text**, which is segmented ([`segment_sentences`]), tokenized
//!   ([`tokenize`]) and tagged by the bundled best-effort
//!   [`FallbackTagger`] — see [`analyze_text`]. This keeps the toolkit
//!   self-contained when no external tagger is available.
//!
//! All functions here are pure (the tagger is immutable after construction),
//! so documents can be processed in parallel without coordination.

mod segment;
mod tagged;
mod tagger;
mod tags;
mod tokenize;

pub use segment::segment_sentences;
pub use tagged::{read_tagged, read_tagged_path, write_tagged};
pub use tagger::FallbackTagger;
pub use tags::{normalize_tag, PosTag, Tagset};
pub use tokenize::{tokenize, RawToken};

use serde::{Deserialize, Serialize};

use crate::chunker::Chunk;
use crate::types::{Language, Span};

/// One token of a sentence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Token {
    /// Ordinal within the sentence, `0..n-1` contiguous.
    pub index: usize,
    /// The exact surface form; never empty.
    pub surface: String,
    /// Lowercased, NFC-normalized lemma; never empty (falls back to the
    /// lowercased surface when the tagger knows no better).
    pub lemma: String,
    pub pos: PosTag,
    /// Byte offsets into the document text. Present for tokens produced from
    /// raw text; absent for tokens read from pre-tagged TSV, which carries no
    /// offset information.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub span: Option<Span>,
    /// The tagger's original label (e.g. `VVZ`, `VER:pres`), kept so tagged
    /// streams can be re-serialized without loss.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub raw_tag: Option<String>,
}

/// A segmented, tagged sentence; `chunks` stays empty until the chunker runs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sentence {
    /// Ordinal within the document.
    pub index: usize,
    pub tokens: Vec<Token>,
    #[serde(default)]
    pub chunks: Vec<Chunk>,
}

impl Sentence {
    /// Panics (in debug builds) unless the sentence satisfies its structural
    /// invariants: non-empty, contiguous token indices, and sentence-final
    /// punctuation only in final position.
    pub fn debug_validate(&self) {
        debug_assert!(!self.tokens.is_empty(), "sentence {} has no tokens", self.index);
        for (i, token) in self.tokens.iter().enumerate() {
            debug_assert_eq!(token.index, i, "token indices must be contiguous");
            debug_assert!(!token.surface.is_empty(), "empty surface at token {i}");
            debug_assert!(!token.lemma.is_empty(), "empty lemma at token {i}");
            debug_assert!(
                token.pos != PosTag::SentEnd || i + 1 == self.tokens.len(),
                "SENT_END tag before final position in sentence {}",
                self.index
            );
        }
    }
}

/// Runs the full raw-text pipeline: segmentation, tokenization, and tagging.
/// Chunks are left empty; run the chunker separately when NP spans are
/// needed. Token spans are byte offsets into `text`.
pub fn analyze_text(text: &str, language: Language, tagger: &FallbackTagger) -> Vec<Sentence> {
    segment_sentences(text, language)
        .into_iter()
        .enumerate()
        .map(|(index, span)| {
            let mut raw = tokenize(&text[span.start..span.end], language);
            for token in &mut raw {
                token.span = Span::new(token.span.start + span.start, token.span.end + span.start);
            }
            let sentence = Sentence {
                index,
                tokens: tagger.tag(&raw),
                chunks: Vec::new(),
            };
            sentence.debug_validate();
            sentence
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn analyze_text_round_trips_surfaces_through_offsets() {
        let text = "The old house seemed a tomb. Mr. Smith wept.";
        let tagger = FallbackTagger::builtin(Language::En).unwrap();
        let sentences = analyze_text(text, Language::En, &tagger);
        assert_eq!(sentences.len(), 2);

        // Reconstruct the text from token offsets: every non-whitespace byte
        // must be covered by exactly one token, and each surface must equal
        // the slice it points at.
        let mut covered = vec![false; text.len()];
        for sentence in &sentences {
            for token in &sentence.tokens {
                let span = token.span.expect("raw-text pipeline sets offsets");
                assert_eq!(&text[span.start..span.end], token.surface);
                for flag in &mut covered[span.start..span.end] {
                    assert!(!*flag, "byte covered twice");
                    *flag = true;
                }
            }
        }
        for (i, byte) in text.bytes().enumerate() {
            let ws = (byte as char).is_whitespace();
            assert_eq!(covered[i], !ws, "byte {i} ({:?})", byte as char);
        }
    }

    #[test]
    fn analyze_text_keeps_sentence_indices_contiguous() {
        let text = "One. Two! Three? Four.";
        let tagger = FallbackTagger::builtin(Language::En).unwrap();
        let sentences = analyze_text(text, Language::En, &tagger);
        let indices: Vec<usize> = sentences.iter().map(|s| s.index).collect();
        assert_eq!(indices, vec![0, 1, 2, 3]);
    }
}
