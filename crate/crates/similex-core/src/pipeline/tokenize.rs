//! Tokenization of sentence text.
//!
//! Whitespace-delimited words are split further: punctuation peels off into
//! its own tokens, French elided articles detach ("l'homme" → "l'" +
//! "homme"), English clitics detach ("don't" → "do" + "n't"), while
//! hyphenated alphabetic compounds ("snow-white", "god-like") stay single
//! tokens — token-level morphology downstream depends on that.
//!
//! Every non-whitespace character of the input lands in exactly one token,
//! and every token's surface equals the slice its span points at, so the
//! original text can be reconstructed from tokens plus whitespace.

use crate::types::{Language, Span};

use super::segment::is_abbreviation;

/// A surface form with its byte span, before tagging.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawToken {
    pub surface: String,
    pub span: Span,
}

/// French elision prefixes (ending in an apostrophe) that split off.
/// "aujourd'hui" is deliberately not covered: "aujourd'" is not listed.
const FR_ELISIONS: &[&str] = &[
    "l'", "d'", "j'", "n'", "m'", "t'", "s'", "c'", "qu'", "jusqu'", "lorsqu'", "puisqu'",
    "quoiqu'",
];

/// English clitic suffixes that split off; "n't" keeps its `n`.
const EN_CLITICS: &[&str] = &["n't", "'ll", "'re", "'ve", "'s", "'d", "'m"];

/// Splits `text` into tokens. Spans are byte offsets into `text`.
pub fn tokenize(text: &str, language: Language) -> Vec<RawToken> {
    let mut out = Vec::new();
    let mut word_start: Option<usize> = None;
    for (i, c) in text.char_indices() {
        if c.is_whitespace() {
            if let Some(start) = word_start.take() {
                split_word(text, start, i, language, &mut out);
            }
        } else if word_start.is_none() {
            word_start = Some(i);
        }
    }
    if let Some(start) = word_start {
        split_word(text, start, text.len(), language, &mut out);
    }
    out
}

fn push(text: &str, start: usize, end: usize, out: &mut Vec<RawToken>) {
    debug_assert!(start < end, "empty token");
    out.push(RawToken {
        surface: text[start..end].to_string(),
        span: Span::new(start, end),
    });
}

/// True for words kept whole even though they end in a period:
/// abbreviations ("Mr.", "e.g.") and single initials ("J.").
fn keep_trailing_period(word: &str, language: Language) -> bool {
    word.strip_suffix('.')
        .is_some_and(|stem| !stem.is_empty() && is_abbreviation(stem, language))
}

fn is_apostrophe(c: char) -> bool {
    c == '\'' || c == '’'
}

/// Recursively splits one whitespace-free word at `text[start..end]`.
fn split_word(text: &str, start: usize, end: usize, language: Language, out: &mut Vec<RawToken>) {
    if start >= end {
        return;
    }
    let word = &text[start..end];
    if keep_trailing_period(word, language) {
        push(text, start, end, out);
        return;
    }

    let chars: Vec<(usize, char)> = word.char_indices().collect();

    // Leading punctuation peels off, one token per character, except that
    // runs of periods or hyphens coalesce ("...", "--").
    let first = chars[0].1;
    if !first.is_alphanumeric() {
        let mut split = first.len_utf8();
        if first == '.' || first == '-' {
            for &(pos, c) in &chars[1..] {
                if c != first {
                    break;
                }
                split = pos + c.len_utf8();
            }
        }
        push(text, start, start + split, out);
        split_word(text, start + split, end, language, out);
        return;
    }

    // Trailing punctuation peels off the same way, but a final period stays
    // attached when it completes an abbreviation.
    let last = chars[chars.len() - 1].1;
    if !last.is_alphanumeric() {
        let mut split = chars[chars.len() - 1].0;
        if last == '.' || last == '-' {
            for &(pos, c) in chars.iter().rev().skip(1) {
                if c != last {
                    break;
                }
                split = pos;
            }
        }
        if last == '.' && keep_trailing_period(&word[..split + 1], language) {
            // "etc.," peeled its comma and now ends in an abbreviation.
            push(text, start, start + split + 1, out);
            split_word(text, start + split + 1, end, language, out);
        } else {
            split_word(text, start, start + split, language, out);
            push(text, start + split, end, out);
        }
        return;
    }

    // Dashes inside a word split it: "night--dark" and em/en dashes. A single
    // ASCII hyphen does not (compounds stay whole).
    for (k, &(pos, c)) in chars.iter().enumerate() {
        if c == '—' || c == '–' {
            split_word(text, start, start + pos, language, out);
            push(text, start + pos, start + pos + c.len_utf8(), out);
            split_word(text, start + pos + c.len_utf8(), end, language, out);
            return;
        }
        if c == '-' && k + 1 < chars.len() && chars[k + 1].1 == '-' {
            let mut dash_end = k + 1;
            while dash_end + 1 < chars.len() && chars[dash_end + 1].1 == '-' {
                dash_end += 1;
            }
            let run_end = chars[dash_end].0 + 1;
            split_word(text, start, start + pos, language, out);
            push(text, start + pos, start + run_end, out);
            split_word(text, start + run_end, end, language, out);
            return;
        }
    }

    if language == Language::Fr {
        if let Some(split) = elision_split(&chars) {
            push(text, start, start + split, out);
            split_word(text, start + split, end, language, out);
            return;
        }
    }

    if language == Language::En {
        if let Some(split) = clitic_split(&chars) {
            split_word(text, start, start + split, language, out);
            push(text, start + split, end, out);
            return;
        }
    }

    push(text, start, end, out);
}

/// Byte length of the elision prefix (through its apostrophe), if the word
/// starts with a known elided form followed by more material.
fn elision_split(chars: &[(usize, char)]) -> Option<usize> {
    let apo = chars.iter().position(|&(_, c)| is_apostrophe(c))?;
    if apo + 1 >= chars.len() {
        return None; // nothing after the apostrophe
    }
    let prefix: String = chars[..apo]
        .iter()
        .map(|&(_, c)| c.to_lowercase().next().unwrap_or(c))
        .chain(std::iter::once('\''))
        .collect();
    FR_ELISIONS
        .contains(&prefix.as_str())
        .then(|| chars[apo].0 + chars[apo].1.len_utf8())
}

/// Byte offset where an English clitic suffix starts, if present.
fn clitic_split(chars: &[(usize, char)]) -> Option<usize> {
    for pattern in EN_CLITICS {
        let pat: Vec<char> = pattern.chars().collect();
        if chars.len() <= pat.len() {
            continue; // require a non-empty stem
        }
        let tail = &chars[chars.len() - pat.len()..];
        let matches = tail.iter().zip(&pat).all(|(&(_, c), &p)| {
            if p == '\'' {
                is_apostrophe(c)
            } else {
                c.to_lowercase().next() == Some(p)
            }
        });
        if matches {
            return Some(tail[0].0);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn surfaces(text: &str, language: Language) -> Vec<String> {
        tokenize(text, language)
            .into_iter()
            .map(|t| t.surface)
            .collect()
    }

    #[test]
    fn hyphenated_compounds_stay_whole() {
        assert_eq!(
            surfaces("a snow-white dove", Language::En),
            vec!["a", "snow-white", "dove"]
        );
        assert_eq!(surfaces("god-like grace", Language::En), vec!["god-like", "grace"]);
    }

    #[test]
    fn french_elision_splits() {
        assert_eq!(surfaces("l'homme", Language::Fr), vec!["l'", "homme"]);
        assert_eq!(
            surfaces("j'aime l'effet d'une pluie", Language::Fr),
            vec!["j'", "aime", "l'", "effet", "d'", "une", "pluie"]
        );
        assert_eq!(surfaces("qu'il", Language::Fr), vec!["qu'", "il"]);
        // Lexicalized: no split.
        assert_eq!(surfaces("aujourd'hui", Language::Fr), vec!["aujourd'hui"]);
        // Curly apostrophe behaves like the straight one.
        assert_eq!(surfaces("l’homme", Language::Fr), vec!["l’", "homme"]);
    }

    #[test]
    fn english_clitics_split() {
        assert_eq!(surfaces("don't", Language::En), vec!["do", "n't"]);
        assert_eq!(surfaces("She's here", Language::En), vec!["She", "'s", "here"]);
        assert_eq!(surfaces("I'll go", Language::En), vec!["I", "'ll", "go"]);
        assert_eq!(surfaces("o'clock", Language::En), vec!["o'clock"]);
    }

    #[test]
    fn punctuation_peels_off() {
        assert_eq!(
            surfaces("comparable to a dream.", Language::En),
            vec!["comparable", "to", "a", "dream", "."]
        );
        assert_eq!(
            surfaces("\"Wait,\" he said...", Language::En),
            vec!["\"", "Wait", ",", "\"", "he", "said", "..."]
        );
        assert_eq!(surfaces("(once)", Language::En), vec!["(", "once", ")"]);
    }

    #[test]
    fn dashes_split_but_single_hyphen_does_not() {
        assert_eq!(
            surfaces("night--dark and cold", Language::En),
            vec!["night", "--", "dark", "and", "cold"]
        );
        assert_eq!(surfaces("well-known—indeed", Language::En), vec![
            "well-known",
            "—",
            "indeed"
        ]);
    }

    #[test]
    fn abbreviations_keep_their_period() {
        assert_eq!(
            surfaces("Mr. Smith, etc., left.", Language::En),
            vec!["Mr.", "Smith", ",", "etc.", ",", "left", "."]
        );
        assert_eq!(surfaces("M. Dupont", Language::Fr), vec!["M.", "Dupont"]);
        assert_eq!(surfaces("J. K. Smith", Language::En), vec!["J.", "K.", "Smith"]);
    }

    #[test]
    fn numbers_keep_internal_separators() {
        assert_eq!(surfaces("1,000 francs", Language::En), vec!["1,000", "francs"]);
        assert_eq!(surfaces("3.14 exactly", Language::En), vec!["3.14", "exactly"]);
    }

    #[test]
    fn every_character_is_covered_exactly_once() {
        let text = "«Eh!» dit-il... l'âme--c'est tout.";
        let tokens = tokenize(text, Language::Fr);
        let mut covered = vec![false; text.len()];
        for token in &tokens {
            assert_eq!(&text[token.span.start..token.span.end], token.surface);
            for flag in &mut covered[token.span.start..token.span.end] {
                assert!(!*flag);
                *flag = true;
            }
        }
        let uncovered: Vec<char> = text
            .char_indices()
            .filter(|&(i, c)| !c.is_whitespace() && !covered[i])
            .map(|(_, c)| c)
            .collect();
        assert!(uncovered.is_empty(), "uncovered: {uncovered:?}");
    }
}
