//! Marker matching over tagged sentences and simile-candidate construction.
//!
//! A sentence yields a candidate when a marker match is immediately followed
//! by a noun phrase headed by a *common* noun (proper-noun heads are
//! rejected). The two single-token morphological markers ("-like", noun+colour)
//! are handled separately: attributively they sit inside the noun phrase they
//! modify; predicatively they follow a copula and carry no noun phrase at all.

use serde::{Deserialize, Serialize};

use crate::chunker::chunk_nps;
use crate::corpus::Document;
use crate::error::{Error, Result};
use crate::lexicon::{
    detect_colour_compound, detect_like_suffix, ColourLexicon, CompiledLexicon, MarkerPattern,
    PatternKind,
};
use crate::pipeline::{analyze_text, FallbackTagger, PosTag, Sentence};
use crate::types::{Language, Span};

/// One pattern occurrence in a sentence, over token indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkerMatch {
    pub marker_id: String,
    pub kind: PatternKind,
    /// Token-index span of the matched marker.
    pub span: Span,
}

/// A marker plus the noun phrase it introduces (or a predicative
/// morphological marker with no noun phrase).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimileCandidate {
    pub doc_id: String,
    pub sentence_index: usize,
    pub marker_id: String,
    /// Token-index span of the marker.
    pub marker_span: Span,
    /// Token-index span of the noun phrase; absent exactly when the match is
    /// predicative.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub np_span: Option<Span>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub head_lemma: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub head_surface: Option<String>,
    /// True for copula + "-like"/colour-compound uses ("her face was
    /// ghostlike"), which modify no following noun phrase.
    pub predicative: bool,
}

fn elem_matches(pattern_elem: &crate::lexicon::ElementSpec, sentence: &Sentence, i: usize) -> bool {
    let token = &sentence.tokens[i];
    pattern_elem.matches(&token.lemma, token.pos)
}

fn is_punct(sentence: &Sentence, i: usize) -> bool {
    sentence.tokens[i].pos.is_punct()
}

/// All matches of `pattern` in `sentence`, in start order.
fn match_pattern(
    pattern: &MarkerPattern,
    sentence: &Sentence,
    colours: &ColourLexicon,
) -> Vec<MarkerMatch> {
    let n = sentence.tokens.len();
    let mut out = Vec::new();
    let mut push = |start: usize, end: usize| {
        out.push(MarkerMatch {
            marker_id: pattern.id.clone(),
            kind: pattern.kind,
            span: Span::new(start, end),
        });
    };

    match pattern.kind {
        PatternKind::FixedSeq => {
            let len = pattern.elements.len();
            for start in 0..n.saturating_sub(len - 1) {
                if pattern
                    .elements
                    .iter()
                    .enumerate()
                    .all(|(k, e)| elem_matches(e, sentence, start + k))
                {
                    push(start, start + len);
                }
            }
        }
        PatternKind::GappedSeq => {
            let anchor = &pattern.elements[0];
            let tail = &pattern.elements[1..];
            let max_gap = pattern.max_gap.unwrap_or(0);
            for start in 0..n {
                if !elem_matches(anchor, sentence, start) {
                    continue;
                }
                // Find the nearest position where the whole tail matches
                // contiguously; every skipped token is a free gap token, and
                // punctuation in the gap aborts (no cross-clause matches).
                let mut gap_used = 0;
                let mut j = start + 1;
                while j + tail.len() <= n {
                    if tail
                        .iter()
                        .enumerate()
                        .all(|(k, e)| elem_matches(e, sentence, j + k))
                    {
                        push(start, j + tail.len());
                        break;
                    }
                    if is_punct(sentence, j) {
                        break;
                    }
                    gap_used += 1;
                    if gap_used > max_gap {
                        break;
                    }
                    j += 1;
                }
            }
        }
        PatternKind::VerbComparative => {
            let comparative = &pattern.elements[0];
            let complementizer = &pattern.elements[1];
            for v in 0..n {
                if sentence.tokens[v].pos != PosTag::Verb {
                    continue;
                }
                // The comparative may sit right after the verb or leave room
                // for one (non-punctuation) adverb; the complementizer must
                // follow it immediately.
                for c in [v + 1, v + 2] {
                    if c + 1 >= n || (c == v + 2 && is_punct(sentence, v + 1)) {
                        break;
                    }
                    if elem_matches(comparative, sentence, c)
                        && elem_matches(complementizer, sentence, c + 1)
                    {
                        push(v, c + 2);
                        break;
                    }
                }
            }
        }
        PatternKind::SuffixLike => {
            for i in 0..n {
                let token = &sentence.tokens[i];
                if matches!(token.pos, PosTag::Adj | PosTag::NounCommon)
                    && detect_like_suffix(&token.surface)
                {
                    push(i, i + 1);
                }
            }
        }
        PatternKind::ColourCompound => {
            for i in 0..n {
                let token = &sentence.tokens[i];
                if matches!(token.pos, PosTag::Adj | PosTag::NounCommon)
                    && detect_colour_compound(&token.surface, colours)
                {
                    push(i, i + 1);
                }
            }
        }
    }
    out
}

/// Runs every pattern in `lexicon` over the sentence; the result is sorted by
/// (start, longest-first, marker id).
pub fn find_marker_matches(sentence: &Sentence, lexicon: &CompiledLexicon) -> Vec<MarkerMatch> {
    let mut matches = Vec::new();
    for pattern in lexicon.patterns() {
        matches.extend(match_pattern(pattern, sentence, lexicon.colours()));
    }
    matches.sort_by(|a, b| {
        a.span
            .start
            .cmp(&b.span.start)
            .then(b.span.len().cmp(&a.span.len()))
            .then(a.marker_id.cmp(&b.marker_id))
    });
    matches
}

/// Resolves overlapping matches: longer spans win, equal lengths fall back to
/// the lexicographically first marker id. The result is overlap-free and
/// sorted by start. In particular "was a sort of" suppresses a bare "was"
/// match, and "compared to" suppresses "compare" on the same tokens.
pub fn resolve_overlaps(matches: Vec<MarkerMatch>) -> Vec<MarkerMatch> {
    let mut by_priority = matches;
    by_priority.sort_by(|a, b| {
        b.span
            .len()
            .cmp(&a.span.len())
            .then(a.marker_id.cmp(&b.marker_id))
            .then(a.span.start.cmp(&b.span.start))
    });
    let mut accepted: Vec<MarkerMatch> = Vec::new();
    for m in by_priority {
        if accepted.iter().all(|kept| !kept.span.overlaps(m.span)) {
            accepted.push(m);
        }
    }
    accepted.sort_by(|a, b| {
        a.span
            .start
            .cmp(&b.span.start)
            .then(a.marker_id.cmp(&b.marker_id))
    });
    accepted
}

/// Copula lemmas licensing predicative morphological markers.
fn copulas(language: Language) -> &'static [&'static str] {
    match language {
        Language::En => &["be", "seem", "look"],
        Language::Fr => &["être", "sembler", "paraître"],
    }
}

/// How far back (in tokens) a copula may sit from a predicative marker.
const COPULA_WINDOW: usize = 3;

/// Builds the candidate for one overlap-resolved match, if the sentence
/// licenses one. The sentence must already be chunked.
pub fn candidate_from_match(
    doc_id: &str,
    sentence: &Sentence,
    m: &MarkerMatch,
    language: Language,
) -> Option<SimileCandidate> {
    let candidate = |np: Option<&crate::chunker::Chunk>, predicative: bool| {
        let (np_span, head_lemma, head_surface) = match np {
            Some(chunk) => {
                let head = &sentence.tokens[chunk.head_index];
                (
                    Some(Span::new(chunk.start, chunk.end)),
                    Some(head.lemma.clone()),
                    Some(head.surface.clone()),
                )
            }
            None => (None, None, None),
        };
        SimileCandidate {
            doc_id: doc_id.to_string(),
            sentence_index: sentence.index,
            marker_id: m.marker_id.clone(),
            marker_span: m.span,
            np_span,
            head_lemma,
            head_surface,
            predicative,
        }
    };

    match m.kind {
        PatternKind::FixedSeq | PatternKind::GappedSeq | PatternKind::VerbComparative => {
            // "Immediately followed": the noun phrase starts at the very next
            // token, and its head must be a common noun.
            let chunk = sentence.chunks.iter().find(|c| c.start == m.span.end)?;
            let head = &sentence.tokens[chunk.head_index];
            (head.pos == PosTag::NounCommon).then(|| candidate(Some(chunk), false))
        }
        PatternKind::SuffixLike | PatternKind::ColourCompound => {
            let t = m.span.start;
            if let Some(chunk) = sentence.chunks.iter().find(|c| c.contains(t)) {
                // Attributive: the marker modifies a common-noun head later in
                // its own chunk ("a snow-white dove").
                let head = &sentence.tokens[chunk.head_index];
                (chunk.head_index > t && head.pos == PosTag::NounCommon)
                    .then(|| candidate(Some(chunk), false))
            } else {
                // Predicative: no surrounding chunk, but a copula shortly
                // before ("her face was ghostlike").
                let window_start = t.saturating_sub(COPULA_WINDOW);
                let copula_nearby = sentence.tokens[window_start..t]
                    .iter()
                    .any(|tok| copulas(language).contains(&tok.lemma.as_str()));
                copula_nearby.then(|| candidate(None, true))
            }
        }
    }
}

/// Extraction result for one document.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DocExtraction {
    pub doc_id: String,
    pub candidates: Vec<SimileCandidate>,
    pub sentence_count: usize,
}

/// Extract/report settings that change which candidates come out.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ExtractOptions {
    /// Also run the markers flagged `excluded_by_default`.
    pub include_excluded: bool,
}

/// The full per-document pipeline bundled with its immutable resources
/// (lexicon, colour list, tagger); cheap to share across threads.
#[derive(Debug, Clone)]
pub struct Extractor {
    lexicon: CompiledLexicon,
    tagger: FallbackTagger,
}

impl Extractor {
    /// Combines a compiled lexicon and tagger, applying `options`.
    pub fn new(lexicon: CompiledLexicon, tagger: FallbackTagger, options: ExtractOptions) -> Self {
        let lexicon = if options.include_excluded {
            lexicon
        } else {
            lexicon.without_excluded()
        };
        Extractor { lexicon, tagger }
    }

    /// Built-in lexicon, colour list, and tagger for `language`.
    pub fn builtin(language: Language, options: ExtractOptions) -> Result<Self> {
        Ok(Self::new(
            CompiledLexicon::builtin(language),
            FallbackTagger::builtin(language)?,
            options,
        ))
    }

    pub fn language(&self) -> Language {
        self.lexicon.language()
    }

    pub fn lexicon(&self) -> &CompiledLexicon {
        &self.lexicon
    }

    /// Segments, tokenizes, tags, and chunks raw text.
    pub fn analyze(&self, text: &str) -> Vec<Sentence> {
        let mut sentences = analyze_text(text, self.language(), &self.tagger);
        for sentence in &mut sentences {
            sentence.chunks = chunk_nps(sentence, self.language());
        }
        sentences
    }

    /// Runs match → overlap resolution → candidate construction over already
    /// chunked sentences.
    pub fn extract_sentences(&self, doc_id: &str, sentences: &[Sentence]) -> DocExtraction {
        let mut candidates = Vec::new();
        for sentence in sentences {
            let matches = resolve_overlaps(find_marker_matches(sentence, &self.lexicon));
            for m in &matches {
                if let Some(c) = candidate_from_match(doc_id, sentence, m, self.language()) {
                    candidates.push(c);
                }
            }
        }
        // Matches arrive per sentence in start order already; make the
        // canonical order explicit all the same.
        candidates.sort_by(|a, b| {
            a.sentence_index
                .cmp(&b.sentence_index)
                .then(a.marker_span.start.cmp(&b.marker_span.start))
                .then(a.marker_id.cmp(&b.marker_id))
        });
        DocExtraction {
            doc_id: doc_id.to_string(),
            candidates,
            sentence_count: sentences.len(),
        }
    }

    /// Full pipeline over raw text.
    pub fn extract_text(&self, doc_id: &str, text: &str) -> DocExtraction {
        let sentences = self.analyze(text);
        self.extract_sentences(doc_id, &sentences)
    }

    /// Full pipeline over a loaded document; the document language must match
    /// the extractor's.
    pub fn extract_document(&self, doc: &Document) -> Result<DocExtraction> {
        if doc.language != self.language() {
            return Err(Error::LanguageMismatch {
                doc_id: doc.id.clone(),
                doc_language: doc.language.code().to_string(),
                expected: self.language().code().to_string(),
            });
        }
        Ok(self.extract_text(&doc.id, &doc.text))
    }

    /// Pipeline over pre-tagged sentences (chunks them first).
    pub fn extract_tagged(&self, doc_id: &str, mut sentences: Vec<Sentence>) -> DocExtraction {
        for sentence in &mut sentences {
            sentence.chunks = chunk_nps(sentence, self.language());
        }
        self.extract_sentences(doc_id, &sentences)
    }
}

/// Free-function form of [`Extractor::extract_document`].
pub fn extract_document(extractor: &Extractor, doc: &Document) -> Result<DocExtraction> {
    extractor.extract_document(doc)
}

/// Free-function form of [`Extractor::extract_tagged`].
pub fn extract_tagged(
    extractor: &Extractor,
    doc_id: &str,
    sentences: Vec<Sentence>,
) -> DocExtraction {
    extractor.extract_tagged(doc_id, sentences)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn extractor(language: Language) -> Extractor {
        Extractor::builtin(language, ExtractOptions::default()).unwrap()
    }

    fn extract_one(language: Language, text: &str) -> Vec<SimileCandidate> {
        extractor(language).extract_text("doc", text).candidates
    }

    #[test]
    fn seem_followed_by_noun_phrase() {
        let candidates = extract_one(Language::En, "The old house seemed a tomb.");
        assert_eq!(candidates.len(), 1);
        let c = &candidates[0];
        assert_eq!(c.marker_id, "en.verb.seem");
        assert_eq!(c.head_lemma.as_deref(), Some("tomb"));
        assert!(!c.predicative);
        assert_eq!(c.np_span.unwrap().start, c.marker_span.end);
    }

    #[test]
    fn seem_without_following_np_yields_nothing() {
        assert!(extract_one(Language::En, "He seemed tired.").is_empty());
    }

    #[test]
    fn gapped_be_sort_of() {
        let candidates = extract_one(Language::En, "He was a sort of king.");
        assert_eq!(candidates.len(), 1);
        let c = &candidates[0];
        assert_eq!(c.marker_id, "en.verb.be_kind_of");
        assert_eq!(c.marker_span, Span::new(1, 5), "was a sort of");
        assert_eq!(c.head_lemma.as_deref(), Some("king"));
    }

    #[test]
    fn proper_noun_heads_are_rejected() {
        let candidates = extract_one(Language::Fr, "Il semblait un Hercule.");
        assert!(candidates.is_empty(), "{candidates:?}");
    }

    #[test]
    fn impersonal_construction_is_not_a_marker() {
        let candidates = extract_one(
            Language::Fr,
            "J'aime sa voix, on eût dit une pluie de grelots.",
        );
        assert!(candidates.is_empty(), "{candidates:?}");
    }

    #[test]
    fn pareil_a_with_head() {
        let candidates = extract_one(Language::Fr, "Sa maison était pareille à un tombeau.");
        assert_eq!(candidates.len(), 1);
        let c = &candidates[0];
        assert_eq!(c.marker_id, "fr.adj.pareil_a");
        assert_eq!(c.head_lemma.as_deref(), Some("tombeau"));
    }

    #[test]
    fn attributive_colour_compound() {
        let candidates = extract_one(Language::En, "A snow-white dove flew past the tower.");
        assert_eq!(candidates.len(), 1);
        let c = &candidates[0];
        assert_eq!(c.marker_id, "en.adj.colour_compound");
        assert_eq!(c.marker_span, Span::new(1, 2));
        assert_eq!(c.head_lemma.as_deref(), Some("dove"));
        assert!(!c.predicative);
    }

    #[test]
    fn predicative_like_suffix() {
        let candidates = extract_one(Language::En, "Her face was ghostlike.");
        assert_eq!(candidates.len(), 1);
        let c = &candidates[0];
        assert_eq!(c.marker_id, "en.adj.like_suffix");
        assert!(c.predicative);
        assert!(c.np_span.is_none());
        assert!(c.head_lemma.is_none());
    }

    #[test]
    fn longer_match_suppresses_shorter() {
        // "was a sort of" must beat the bare "was" anchor — and the bare
        // "be_kind_of" anchor is not a pattern by itself, so test with seem:
        let candidates = extract_one(Language::En, "It seemed more than a miracle.");
        assert_eq!(candidates.len(), 1);
        assert_eq!(candidates[0].marker_id, "en.verb.more_than");
        assert_eq!(candidates[0].head_lemma.as_deref(), Some("miracle"));
    }

    #[test]
    fn excluded_markers_only_with_opt_in() {
        let text = "She reminded him of a queen.";
        assert!(extract_one(Language::En, text).is_empty());
        let with = Extractor::builtin(
            Language::En,
            ExtractOptions {
                include_excluded: true,
            },
        )
        .unwrap()
        .extract_text("doc", text)
        .candidates;
        assert_eq!(with.len(), 1);
        assert_eq!(with[0].marker_id, "en.verb.remind");
        assert_eq!(with[0].head_lemma.as_deref(), Some("queen"));
    }

    #[test]
    fn exclusion_is_monotone() {
        let text = "He seemed a ghost and reminded me of a shadow.";
        let without = extract_one(Language::En, text);
        let with = Extractor::builtin(
            Language::En,
            ExtractOptions {
                include_excluded: true,
            },
        )
        .unwrap()
        .extract_text("doc", text)
        .candidates;
        for c in &without {
            assert!(with.contains(c));
        }
        assert!(with.len() > without.len());
    }

    #[test]
    fn language_mismatch_is_an_error() {
        let doc = Document::in_memory("d", Language::Fr, "A", "T", "Bonjour.");
        let err = extractor(Language::En).extract_document(&doc).unwrap_err();
        assert!(matches!(err, Error::LanguageMismatch { .. }));
    }

    #[test]
    fn empty_document_extracts_nothing() {
        let out = extractor(Language::En).extract_text("doc", "");
        assert!(out.candidates.is_empty());
        assert_eq!(out.sentence_count, 0);
    }

    #[test]
    fn candidates_are_ordered() {
        let text = "He seemed a ghost. Her eyes were akin to two stars and similar to lamps.";
        let candidates = extract_one(Language::En, text);
        assert!(candidates.len() >= 2);
        let keys: Vec<_> = candidates
            .iter()
            .map(|c| (c.sentence_index, c.marker_span.start))
            .collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
    }

    #[test]
    fn verb_comparative_allows_one_adverb() {
        let candidates = extract_one(Language::En, "He ran far more than a horse.");
        assert_eq!(candidates.len(), 1);
        let c = &candidates[0];
        assert_eq!(c.marker_id, "en.verb.more_than");
        // span runs from the verb to the complementizer
        assert_eq!(c.marker_span, Span::new(1, 5));
        assert_eq!(c.head_lemma.as_deref(), Some("horse"));
    }

    #[test]
    fn fused_article_preposition() {
        let candidates = extract_one(Language::Fr, "Elle ressemblait au printemps.");
        assert_eq!(candidates.len(), 1);
        assert_eq!(candidates[0].marker_id, "fr.verb.ressembler_a");
        assert_eq!(candidates[0].head_lemma.as_deref(), Some("printemps"));
    }

    #[test]
    fn gap_aborts_on_punctuation() {
        // Comma between the anchor and the tail kills the gapped match.
        let candidates = extract_one(Language::En, "He was, sort of, a king.");
        assert!(
            candidates.iter().all(|c| c.marker_id != "en.verb.be_kind_of"),
            "{candidates:?}"
        );
    }
}
