//! Sentence segmentation over raw text.
//!
//! A boundary is placed after `.` `!` `?` `…` when followed by whitespace and
//! a plausible sentence opener (capital letter, quote, or dash), with
//! exceptions for common abbreviations and single-letter initials. This is a
//! deliberately simple heuristic stand-in for boundaries derived from tagger
//! output; pathological text simply yields one long sentence span.

use crate::types::{Language, Span};

/// Abbreviations (lowercased, without their final period) that block a
/// sentence boundary. `e.g`/`i.e` keep their internal periods.
const EN_ABBREVIATIONS: &[&str] = &["mr", "mrs", "dr", "st", "etc", "vs", "e.g", "i.e"];
const FR_ABBREVIATIONS: &[&str] = &["m", "mm", "mme", "mlle", "st", "etc"];

/// True when `word` (no trailing period, any case) blocks a boundary after a
/// period in the given language.
pub(crate) fn is_abbreviation(word: &str, language: Language) -> bool {
    let list = match language {
        Language::En => EN_ABBREVIATIONS,
        Language::Fr => FR_ABBREVIATIONS,
    };
    let lower = word.to_lowercase();
    if list.contains(&lower.as_str()) {
        return true;
    }
    // A single capital letter is an initial ("J. Smith", "M. J. Dupont").
    let mut chars = word.chars();
    matches!((chars.next(), chars.next()), (Some(c), None) if c.is_uppercase())
}

fn is_terminal(c: char) -> bool {
    matches!(c, '.' | '!' | '?' | '…')
}

/// Closing quotes/brackets that belong to the sentence they follow.
fn is_closer(c: char) -> bool {
    matches!(c, '"' | '\'' | '”' | '’' | '»' | ')' | ']')
}

/// Closers that may be separated from the terminal by whitespace, as French
/// typography does with guillemets (« Venez ! »). Restricted to characters
/// that can never *open* a sentence, so "He ran. 'She fell.'" still splits.
fn is_spaced_closer(c: char) -> bool {
    matches!(c, '»' | '”' | ')' | ']')
}

/// Characters that can open a sentence besides a capital letter: opening
/// quotes, and the dashes that introduce dialogue lines in French typography.
fn is_opener(c: char) -> bool {
    matches!(c, '"' | '\'' | '“' | '‘' | '«' | '—' | '–')
}

fn starts_sentence(c: char) -> bool {
    c.is_uppercase() || is_opener(c)
}

/// Splits `text` into sentence spans (byte offsets, half-open).
///
/// Spans are ordered, non-overlapping, start and end on non-whitespace
/// characters, and jointly cover every non-whitespace character of `text`.
pub fn segment_sentences(text: &str, language: Language) -> Vec<Span> {
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let n = chars.len();
    let mut spans = Vec::new();
    let mut start: Option<usize> = None;
    let mut last_end = 0usize;

    let mut i = 0;
    while i < n {
        let (byte, c) = chars[i];
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if start.is_none() {
            start = Some(byte);
        }
        last_end = byte + c.len_utf8();

        if is_terminal(c) {
            // Extend over a run of terminal punctuation ("?!", "...").
            let mut j = i;
            while j + 1 < n && is_terminal(chars[j + 1].1) {
                j += 1;
            }
            // Abbreviation and initial exceptions apply only to a lone period.
            let lone_period = c == '.' && j == i;
            if !(lone_period && period_follows_abbreviation(text, &chars, i, language)) {
                // Closing quotes belong to this sentence, including closers
                // sitting after a space in the French guillemet style.
                let mut k = j + 1;
                loop {
                    if k < n && is_closer(chars[k].1) {
                        k += 1;
                        continue;
                    }
                    let mut a = k;
                    while a < n && chars[a].1.is_whitespace() {
                        a += 1;
                    }
                    if a > k && a < n && is_spaced_closer(chars[a].1) {
                        k = a + 1;
                        continue;
                    }
                    break;
                }
                let mut w = k;
                while w < n && chars[w].1.is_whitespace() {
                    w += 1;
                }
                let at_eof = w >= n;
                let after_gap = w > k;
                if at_eof || (after_gap && starts_sentence(chars[w].1)) {
                    let end = if k > 0 {
                        chars[k - 1].0 + chars[k - 1].1.len_utf8()
                    } else {
                        last_end
                    };
                    spans.push(Span::new(start.take().unwrap(), end));
                    last_end = end;
                    i = w;
                    continue;
                }
            }
        }
        i += 1;
    }
    if let Some(s) = start {
        if last_end > s {
            spans.push(Span::new(s, last_end));
        }
    }
    spans
}

/// True when the period at char position `i` sits right after an
/// abbreviation or a single-letter initial.
fn period_follows_abbreviation(
    text: &str,
    chars: &[(usize, char)],
    i: usize,
    language: Language,
) -> bool {
    // Collect the maximal run of letters and periods ending right before the
    // period, so "e.g" and "U.S.A" stay in one piece.
    let mut first = i;
    while first > 0 {
        let prev = chars[first - 1].1;
        if prev.is_alphabetic() || prev == '.' {
            first -= 1;
        } else {
            break;
        }
    }
    if first == i {
        return false;
    }
    let word = &text[chars[first].0..chars[i].0];
    if is_abbreviation(word, language) {
        return true;
    }
    // For dotted sequences like "U.S.A", judge the last segment ("A").
    match word.rsplit('.').next() {
        Some(segment) if !segment.is_empty() && segment != word => {
            is_abbreviation(segment, language)
        }
        _ => false,
    }
}
