//! Brute-force oracles. Each function re-derives a result from first
//! principles — grammar membership checks and exhaustive window scans —
//! sharing nothing with the real implementations beyond the public data
//! types, so agreement between the two is meaningful evidence.

use similex::{
    Chunk, ColourLexicon, ElementSpec, Language, MarkerMatch, MarkerPattern, PatternKind, PosTag,
    Sentence, SimileCandidate, Span, Token,
};

/// Grammar membership: is `tokens[start..end]` a complete noun phrase?
/// Returns the head index when it is.
///
/// English: optional determiner, then a non-empty run of modifiers
/// (adjective, numeral, adverb, or noun) whose final token is a noun — that
/// final noun is the head. French: optional determiner, premodifiers
/// (adjective or numeral), exactly one noun (the head), then postnominal
/// adjectives.
fn np_membership(
    tokens: &[Token],
    start: usize,
    end: usize,
    language: Language,
) -> Option<usize> {
    if start >= end || end > tokens.len() {
        return None;
    }
    let mut i = start;
    if tokens[i].pos == PosTag::Det {
        i += 1;
    }
    if i >= end {
        return None;
    }
    match language {
        Language::En => {
            let all_modifiers = (i..end).all(|j| {
                matches!(
                    tokens[j].pos,
                    PosTag::Adj
                        | PosTag::Num
                        | PosTag::Adv
                        | PosTag::NounCommon
                        | PosTag::NounProper
                )
            });
            (all_modifiers && tokens[end - 1].pos.is_noun()).then_some(end - 1)
        }
        Language::Fr => {
            let head = (i..end).find(|&j| tokens[j].pos.is_noun())?;
            let premods_ok = (i..head).all(|j| matches!(tokens[j].pos, PosTag::Adj | PosTag::Num));
            let postmods_ok = (head + 1..end).all(|j| tokens[j].pos == PosTag::Adj);
            (premods_ok && postmods_ok).then_some(head)
        }
    }
}

/// Exhaustive longest-match chunker: at each position, try every end from
/// the sentence length downward and keep the first span that passes
/// [`np_membership`]; skip one token when none does.
pub fn naive_chunks(sentence: &Sentence, language: Language) -> Vec<Chunk> {
    let tokens = &sentence.tokens;
    let n = tokens.len();
    let mut chunks = Vec::new();
    let mut i = 0;
    while i < n {
        let longest = (i + 1..=n)
            .rev()
            .find_map(|end| np_membership(tokens, i, end, language).map(|head| (end, head)));
        match longest {
            Some((end, head_index)) => {
                chunks.push(Chunk {
                    start: i,
                    end,
                    head_index,
                });
                i = end;
            }
            None => i += 1,
        }
    }
    chunks
}

/// Exhaustive fixed-sequence matcher: tests the pattern's element list
/// against every window of the right length. Panics on any other kind —
/// calling it with one is a bug in the test, not an input condition.
pub fn naive_fixed_seq_matches(sentence: &Sentence, pattern: &MarkerPattern) -> Vec<MarkerMatch> {
    assert_eq!(
        pattern.kind,
        PatternKind::FixedSeq,
        "this oracle only covers fixed sequences"
    );
    let tokens = &sentence.tokens;
    let len = pattern.elements.len();
    let mut out = Vec::new();
    if len == 0 || tokens.len() < len {
        return out;
    }
    for start in 0..=tokens.len() - len {
        let window_fits = pattern.elements.iter().enumerate().all(|(offset, element)| {
            let token = &tokens[start + offset];
            element.lemmas.contains(&token.lemma)
                && element.pos.map_or(true, |required| required == token.pos)
        });
        if window_fits {
            out.push(MarkerMatch {
                marker_id: pattern.id.clone(),
                kind: pattern.kind,
                span: Span::new(start, start + len),
            });
        }
    }
    out
}

/// "-like" coinage test, restated from the documented definition: the
/// lowercased surface ends in "like" without being one of the plain English
/// words that end that way, and what precedes the suffix (minus an optional
/// hyphen) is at least two characters, all alphabetic.
fn naive_like_suffix(surface: &str) -> bool {
    const PLAIN_WORDS: [&str; 6] = ["like", "alike", "unlike", "dislike", "belike", "mislike"];
    let lower = surface.to_lowercase();
    if PLAIN_WORDS.contains(&lower.as_str()) || !lower.ends_with("like") {
        return false;
    }
    let stem = &lower[..lower.len() - "like".len()];
    let stem = stem.strip_suffix('-').unwrap_or(stem);
    stem.chars().count() >= 2 && stem.chars().all(char::is_alphabetic)
}

/// Colour-compound test, restated: exactly one hyphen, the part after it is
/// a colour term, the part before it is an alphabetic non-colour word of at
/// least two characters.
fn naive_colour_compound(surface: &str, colours: &ColourLexicon) -> bool {
    let Some((head, tail)) = surface.split_once('-') else {
        return false;
    };
    !tail.contains('-')
        && head.chars().count() >= 2
        && head.chars().all(char::is_alphabetic)
        && colours.contains(tail)
        && !colours.contains(head)
}

/// All matches of one pattern of any kind, each kind re-derived as "the set
/// of spans satisfying the documented conditions" rather than the production
/// single-pass scans. Where a rule yields at most one span per anchor (gapped
/// sequences, verb comparatives) the earliest qualifying span is taken.
pub fn naive_marker_matches(
    sentence: &Sentence,
    pattern: &MarkerPattern,
    colours: &ColourLexicon,
) -> Vec<MarkerMatch> {
    let tokens = &sentence.tokens;
    let n = tokens.len();
    let fits = |element: &ElementSpec, i: usize| {
        let token = &tokens[i];
        element.lemmas.contains(&token.lemma)
            && element.pos.map_or(true, |required| required == token.pos)
    };
    let hit = |start: usize, end: usize| MarkerMatch {
        marker_id: pattern.id.clone(),
        kind: pattern.kind,
        span: Span::new(start, end),
    };

    match pattern.kind {
        PatternKind::FixedSeq => naive_fixed_seq_matches(sentence, pattern),
        PatternKind::GappedSeq => {
            let anchor = &pattern.elements[0];
            let tail = &pattern.elements[1..];
            let max_gap = pattern.max_gap.unwrap_or(0);
            let tail_at =
                |j: usize| j + tail.len() <= n && tail.iter().enumerate().all(|(k, e)| fits(e, j + k));
            (0..n)
                .filter(|&start| fits(anchor, start))
                .filter_map(|start| {
                    // Earliest tail within the gap budget; any punctuation
                    // token inside the gap voids the match.
                    let j = (start + 1..=start + 1 + max_gap).find(|&j| tail_at(j))?;
                    let gap_clean = (start + 1..j).all(|k| !tokens[k].pos.is_punct());
                    gap_clean.then(|| hit(start, j + tail.len()))
                })
                .collect()
        }
        PatternKind::VerbComparative => {
            let comparative = &pattern.elements[0];
            let complementizer = &pattern.elements[1];
            (0..n)
                .filter(|&v| tokens[v].pos == PosTag::Verb)
                .filter_map(|v| {
                    // Right after the verb, or one non-punctuation token later.
                    let c = [v + 1, v + 2].into_iter().find(|&c| {
                        c + 1 < n
                            && (c == v + 1 || !tokens[v + 1].pos.is_punct())
                            && fits(comparative, c)
                            && fits(complementizer, c + 1)
                    })?;
                    Some(hit(v, c + 2))
                })
                .collect()
        }
        PatternKind::SuffixLike => (0..n)
            .filter(|&i| {
                matches!(tokens[i].pos, PosTag::Adj | PosTag::NounCommon)
                    && naive_like_suffix(&tokens[i].surface)
            })
            .map(|i| hit(i, i + 1))
            .collect(),
        PatternKind::ColourCompound => (0..n)
            .filter(|&i| {
                matches!(tokens[i].pos, PosTag::Adj | PosTag::NounCommon)
                    && naive_colour_compound(&tokens[i].surface, colours)
            })
            .map(|i| hit(i, i + 1))
            .collect(),
    }
}

/// Overlap resolution restated as repeated argmax: while matches remain,
/// accept the one with the longest span (ties: lexicographically smaller
/// marker id, then earlier start) and discard everything overlapping it.
pub fn naive_resolve_overlaps(mut pending: Vec<MarkerMatch>) -> Vec<MarkerMatch> {
    let mut accepted = Vec::new();
    while !pending.is_empty() {
        let best = pending
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                b.span
                    .len()
                    .cmp(&a.span.len())
                    .then(a.marker_id.cmp(&b.marker_id))
                    .then(a.span.start.cmp(&b.span.start))
            })
            .map(|(i, _)| i)
            .expect("pending is non-empty");
        let winner = pending.swap_remove(best);
        pending.retain(|m| !m.span.overlaps(winner.span));
        accepted.push(winner);
    }
    accepted.sort_by(|a, b| {
        a.span
            .start
            .cmp(&b.span.start)
            .then(a.marker_id.cmp(&b.marker_id))
    });
    accepted
}

/// Full per-sentence re-extraction sharing nothing with the pipeline: naive
/// matching for every pattern kind, naive overlap resolution, and naive
/// candidate construction over naive chunks. Callers filter out
/// excluded-by-default patterns themselves when comparing against a default
/// extractor.
pub fn naive_extract_sentence(
    doc_id: &str,
    sentence: &Sentence,
    patterns: &[MarkerPattern],
    colours: &ColourLexicon,
    language: Language,
) -> Vec<SimileCandidate> {
    let mut matches = Vec::new();
    for pattern in patterns {
        matches.extend(naive_marker_matches(sentence, pattern, colours));
    }
    naive_resolve_overlaps(matches)
        .iter()
        .filter_map(|m| naive_candidate_for_match(doc_id, sentence, m, language))
        .collect()
}

/// Copulas licensing a predicative reading, per language.
fn copula_lemmas(language: Language) -> &'static [&'static str] {
    match language {
        Language::En => &["be", "seem", "look"],
        Language::Fr => &["être", "sembler", "paraître"],
    }
}

/// Re-derives the candidate for one overlap-resolved match from scratch,
/// chunking with [`naive_chunks`] instead of trusting `sentence.chunks`.
pub fn naive_candidate_for_match(
    doc_id: &str,
    sentence: &Sentence,
    m: &MarkerMatch,
    language: Language,
) -> Option<SimileCandidate> {
    let chunks = naive_chunks(sentence, language);
    let build = |chunk: Option<&Chunk>, predicative: bool| SimileCandidate {
        doc_id: doc_id.to_string(),
        sentence_index: sentence.index,
        marker_id: m.marker_id.clone(),
        marker_span: m.span,
        np_span: chunk.map(|c| Span::new(c.start, c.end)),
        head_lemma: chunk.map(|c| sentence.tokens[c.head_index].lemma.clone()),
        head_surface: chunk.map(|c| sentence.tokens[c.head_index].surface.clone()),
        predicative,
    };
    match m.kind {
        PatternKind::FixedSeq | PatternKind::GappedSeq | PatternKind::VerbComparative => {
            let chunk = chunks.iter().find(|c| c.start == m.span.end)?;
            (sentence.tokens[chunk.head_index].pos == PosTag::NounCommon)
                .then(|| build(Some(chunk), false))
        }
        PatternKind::SuffixLike | PatternKind::ColourCompound => {
            let t = m.span.start;
            match chunks.iter().find(|c| c.contains(t)) {
                Some(chunk) => {
                    let head = &sentence.tokens[chunk.head_index];
                    (chunk.head_index > t && head.pos == PosTag::NounCommon)
                        .then(|| build(Some(chunk), false))
                }
                None => {
                    let from = t.saturating_sub(3);
                    sentence.tokens[from..t]
                        .iter()
                        .any(|tok| copula_lemmas(language).contains(&tok.lemma.as_str()))
                        .then(|| build(None, true))
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sent(tags: &[PosTag]) -> Sentence {
        let tokens = tags
            .iter()
            .enumerate()
            .map(|(index, &pos)| Token {
                index,
                surface: format!("w{index}"),
                lemma: format!("w{index}"),
                pos,
                span: None,
                raw_tag: None,
            })
            .collect();
        Sentence {
            index: 0,
            tokens,
            chunks: Vec::new(),
        }
    }

    #[test]
    fn english_membership_requires_final_noun() {
        let s = sent(&[PosTag::Det, PosTag::Adj, PosTag::NounCommon, PosTag::Adj]);
        assert_eq!(np_membership(&s.tokens, 0, 3, Language::En), Some(2));
        assert_eq!(np_membership(&s.tokens, 0, 4, Language::En), None);
        let chunks = naive_chunks(&s, Language::En);
        assert_eq!(chunks.len(), 1);
        assert_eq!((chunks[0].start, chunks[0].end, chunks[0].head_index), (0, 3, 2));
    }

    #[test]
    fn french_membership_allows_one_noun_only() {
        let s = sent(&[PosTag::Det, PosTag::NounCommon, PosTag::Adj, PosTag::NounCommon]);
        assert_eq!(np_membership(&s.tokens, 0, 3, Language::Fr), Some(1));
        assert_eq!(np_membership(&s.tokens, 0, 4, Language::Fr), None);
        let chunks = naive_chunks(&s, Language::Fr);
        assert_eq!(chunks.len(), 2);
        assert_eq!((chunks[0].start, chunks[0].end), (0, 3));
        assert_eq!((chunks[1].start, chunks[1].end), (3, 4));
    }

    #[test]
    fn lone_determiner_never_chunks() {
        let s = sent(&[PosTag::Det, PosTag::Verb]);
        assert!(naive_chunks(&s, Language::En).is_empty());
        assert!(naive_chunks(&s, Language::Fr).is_empty());
    }
}
