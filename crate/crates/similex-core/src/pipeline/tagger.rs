//! The bundled fallback tagger: a full-form lexicon plus a few suffix
//! heuristics.
//!
//! This is a deliberately simple, deterministic stand-in for an external
//! statistical tagger, good enough to drive extraction on plain text. Its
//! accuracy is best-effort by design; curated evaluations should use the
//! pre-tagged TSV input path instead.
//!
//! Tagging order for each token:
//! 1. punctuation and numbers by character class;
//! 2. full-form lexicon lookup (lowercased surface);
//! 3. language-specific suffix heuristics;
//! 4. capitalized tokens that do not open the sentence become proper nouns;
//! 5. everything else is a common noun.

use std::collections::HashMap;

use unicode_normalization::UnicodeNormalization;

use crate::data::DataSource;
use crate::error::{Error, Result};
use crate::pipeline::{normalize_tag, PosTag, RawToken, Tagset, Token};
use crate::types::Language;

/// An immutable tagging function for one language.
#[derive(Debug, Clone)]
pub struct FallbackTagger {
    language: Language,
    /// lowercased surface → (POS, lemma); first entry per surface wins.
    entries: HashMap<String, (PosTag, String)>,
}

impl FallbackTagger {
    /// Builds the tagger from the bundled lexicon for `language`.
    pub fn builtin(language: Language) -> Result<Self> {
        Self::new(language, &DataSource::builtin())
    }

    /// Builds the tagger, resolving the lexicon file through `source` (which
    /// may point at a user-supplied data directory).
    pub fn new(language: Language, source: &DataSource) -> Result<Self> {
        let tsv = source.tagger_lexicon(language)?;
        Self::from_tsv(language, &tsv)
    }

    /// Parses a lexicon in tagged-TSV form (`surface<TAB>raw_tag<TAB>lemma`).
    /// Blank lines and `#` comments are skipped. When a surface occurs twice
    /// the first entry wins, so files can be ordered by priority.
    pub fn from_tsv(language: Language, tsv: &str) -> Result<Self> {
        let tagset = Tagset::from(language);
        let mut entries = HashMap::new();
        for (i, line) in tsv.lines().enumerate() {
            let line = line.trim_end_matches('\r');
            if line.trim().is_empty() || line.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line.split('\t').collect();
            if fields.len() != 3 || fields.iter().any(|f| f.is_empty()) {
                return Err(Error::TaggedLine {
                    line: i + 1,
                    message: "lexicon entries need surface<TAB>tag<TAB>lemma".into(),
                });
            }
            let surface: String = fields[0].to_lowercase().nfc().collect();
            let pos = normalize_tag(fields[1], tagset);
            let lemma: String = fields[2].to_lowercase().nfc().collect();
            entries.entry(surface).or_insert((pos, lemma));
        }
        Ok(FallbackTagger { language, entries })
    }

    pub fn language(&self) -> Language {
        self.language
    }

    /// Number of full-form entries loaded.
    pub fn lexicon_len(&self) -> usize {
        self.entries.len()
    }

    /// Tags one sentence worth of tokens.
    pub fn tag(&self, tokens: &[RawToken]) -> Vec<Token> {
        // The capitalization heuristic must not fire on the sentence opener,
        // which is capitalized for orthographic reasons only. Quotes or
        // dashes before the first word do not count as the opener.
        let first_word = tokens
            .iter()
            .position(|t| t.surface.chars().any(char::is_alphanumeric));

        let mut out = Vec::with_capacity(tokens.len());
        for (i, raw) in tokens.iter().enumerate() {
            // Curly apostrophes fold to straight ones so lexicon keys match
            // either typography.
            let lower: String = raw
                .surface
                .to_lowercase()
                .replace(['\u{2019}', '\u{02BC}'], "'")
                .nfc()
                .collect();
            let is_final = i + 1 == tokens.len();
            let (pos, lemma) = self.classify(raw, &lower, is_final, first_word == Some(i), &out);
            out.push(Token {
                index: i,
                surface: raw.surface.clone(),
                lemma,
                pos,
                span: Some(raw.span),
                raw_tag: None,
            });
        }
        out
    }

    fn classify(
        &self,
        raw: &RawToken,
        lower: &str,
        is_final: bool,
        sentence_initial: bool,
        tagged_so_far: &[Token],
    ) -> (PosTag, String) {
        let surface = raw.surface.as_str();

        if !surface.chars().any(char::is_alphanumeric) {
            let terminal = matches!(surface, "." | "!" | "?" | "…") || surface.chars().all(|c| c == '.');
            let pos = if is_final && terminal {
                PosTag::SentEnd
            } else {
                PosTag::Punct
            };
            return (pos, lower.to_string());
        }

        if surface.chars().any(|c| c.is_ascii_digit())
            && surface.chars().all(|c| c.is_ascii_digit() || c == ',' || c == '.')
        {
            return (PosTag::Num, lower.to_string());
        }

        if let Some((pos, lemma)) = self.entries.get(lower) {
            return (*pos, lemma.clone());
        }

        // Derivational adjectives the lexicon cannot enumerate: "-like"
        // coinages ("ghostlike") and hyphenated compounds ending in a word
        // the lexicon knows as an adjective ("snow-white"). Both keep their
        // full surface as lemma.
        if self.language == Language::En && crate::lexicon::detect_like_suffix(lower) {
            return (PosTag::Adj, lower.to_string());
        }
        if let Some((prefix, last)) = lower.rsplit_once('-') {
            if !prefix.is_empty()
                && self
                    .entries
                    .get(last)
                    .is_some_and(|(pos, _)| *pos == PosTag::Adj)
            {
                return (PosTag::Adj, lower.to_string());
            }
        }

        let heuristic = match self.language {
            Language::En => en_suffix(lower),
            Language::Fr => {
                let prev_pos = tagged_so_far.last().map(|t| t.pos);
                fr_suffix(lower, prev_pos)
            }
        };
        if let Some(hit) = heuristic {
            return hit;
        }

        if !sentence_initial && surface.chars().next().is_some_and(char::is_uppercase) {
            return (PosTag::NounProper, lower.to_string());
        }

        let lemma = match self.language {
            Language::En => en_noun_lemma(lower),
            Language::Fr => fr_noun_lemma(lower),
        };
        (PosTag::NounCommon, lemma)
    }
}

fn has_vowel(s: &str) -> bool {
    s.chars().any(|c| "aeiouyàâéèêëîïôùûüœ".contains(c))
}

/// English suffix heuristics for out-of-lexicon words.
fn en_suffix(lower: &str) -> Option<(PosTag, String)> {
    let n = lower.len();
    if let Some(stem) = lower.strip_suffix("ly") {
        if stem.len() >= 2 && stem.chars().all(char::is_alphabetic) {
            return Some((PosTag::Adv, lower.to_string()));
        }
    }
    if let Some(stem) = lower.strip_suffix("ing") {
        // The vowel requirement keeps monosyllables like "string" out.
        if stem.len() >= 3 && has_vowel(stem) && stem.chars().all(char::is_alphabetic) {
            return Some((PosTag::Verb, strip_doubled(stem)));
        }
    }
    if let Some(stem) = lower.strip_suffix("ied") {
        if stem.len() >= 2 && stem.chars().all(char::is_alphabetic) {
            return Some((PosTag::Verb, format!("{stem}y")));
        }
    }
    if let Some(stem) = lower.strip_suffix("ed") {
        if stem.len() >= 3 && has_vowel(stem) && stem.chars().all(char::is_alphabetic) {
            return Some((PosTag::Verb, strip_doubled(stem)));
        }
    }
    for adj_suffix in ["ous", "ful", "ive"] {
        if n > adj_suffix.len() + 2 && lower.ends_with(adj_suffix) {
            return Some((PosTag::Adj, lower.to_string()));
        }
    }
    None
}

/// "running" → "runn" → "run": drop one of a doubled final consonant.
fn strip_doubled(stem: &str) -> String {
    let chars: Vec<char> = stem.chars().collect();
    if chars.len() >= 2 {
        let last = chars[chars.len() - 1];
        if last == chars[chars.len() - 2] && !"aeiou".contains(last) {
            return chars[..chars.len() - 1].iter().collect();
        }
    }
    stem.to_string()
}

/// French suffix heuristics. Infinitive endings only count when the previous
/// token is not a determiner ("le dîner" is a noun, "va dîner" a verb).
fn fr_suffix(lower: &str, prev_pos: Option<PosTag>) -> Option<(PosTag, String)> {
    if let Some(stem) = lower.strip_suffix("ment") {
        if stem.len() >= 3 && stem.chars().all(char::is_alphabetic) {
            return Some((PosTag::Adv, lower.to_string()));
        }
    }
    let after_det = prev_pos == Some(PosTag::Det);
    if !after_det {
        for inf in ["er", "ir", "re"] {
            if let Some(stem) = lower.strip_suffix(inf) {
                if stem.len() >= 2 && stem.chars().all(char::is_alphabetic) && has_vowel(stem) {
                    // The infinitive is its own lemma.
                    return Some((PosTag::Verb, lower.to_string()));
                }
            }
        }
    }
    for adj_suffix in ["eux", "ique", "ible"] {
        if let Some(stem) = lower.strip_suffix(adj_suffix) {
            if stem.len() >= 2 && stem.chars().all(char::is_alphabetic) {
                return Some((PosTag::Adj, lower.to_string()));
            }
        }
    }
    None
}

/// Plural stripping for unknown English nouns.
fn en_noun_lemma(lower: &str) -> String {
    if let Some(stem) = lower.strip_suffix("ies") {
        if stem.len() >= 2 {
            return format!("{stem}y");
        }
    }
    for es in ["ses", "xes", "zes", "ches", "shes"] {
        if lower.ends_with(es) && lower.len() > es.len() + 1 {
            return lower[..lower.len() - 2].to_string();
        }
    }
    if lower.len() >= 4 && lower.ends_with('s') && !lower.ends_with("ss") && !lower.ends_with("us") {
        return lower[..lower.len() - 1].to_string();
    }
    lower.to_string()
}

/// Plural stripping for unknown French nouns.
fn fr_noun_lemma(lower: &str) -> String {
    if lower.len() >= 5 && lower.ends_with("eaux") {
        return lower[..lower.len() - 1].to_string(); // tombeaux → tombeau
    }
    if lower.len() >= 5 && lower.ends_with("aux") {
        return format!("{}al", &lower[..lower.len() - 3]); // chevaux → cheval
    }
    if lower.len() >= 4 && (lower.ends_with('s') || lower.ends_with('x')) && !lower.ends_with("ss") {
        return lower[..lower.len() - 1].to_string();
    }
    lower.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pipeline::tokenize;

    fn tag_en(text: &str) -> Vec<Token> {
        let tagger = FallbackTagger::builtin(Language::En).unwrap();
        tagger.tag(&tokenize(text, Language::En))
    }

    fn tag_fr(text: &str) -> Vec<Token> {
        let tagger = FallbackTagger::builtin(Language::Fr).unwrap();
        tagger.tag(&tokenize(text, Language::Fr))
    }

    #[test]
    fn lexicon_lookup_supplies_pos_and_lemma() {
        let tokens = tag_en("The doves seemed happy.");
        assert_eq!(tokens[0].pos, PosTag::Det);
        assert_eq!(tokens[1].pos, PosTag::NounCommon);
        assert_eq!(tokens[1].lemma, "dove");
        assert_eq!(tokens[2].pos, PosTag::Verb);
        assert_eq!(tokens[2].lemma, "seem");
        assert_eq!(tokens[4].pos, PosTag::SentEnd);
    }

    #[test]
    fn capitalized_mid_sentence_unknowns_are_proper_nouns() {
        let tokens = tag_en("Then Gwendolyn spoke.");
        assert_eq!(tokens[1].pos, PosTag::NounProper);
        assert_eq!(tokens[1].lemma, "gwendolyn");
        // Sentence-initial capitals do not trigger the rule.
        let tokens = tag_en("Zzzqx spoke.");
        assert_eq!(tokens[0].pos, PosTag::NounCommon);
    }

    #[test]
    fn unknown_words_default_to_common_nouns() {
        let tokens = tag_en("a zzzqx");
        assert_eq!(tokens[1].pos, PosTag::NounCommon);
        assert_eq!(tokens[1].lemma, "zzzqx");
    }

    #[test]
    fn english_suffix_heuristics() {
        let tokens = tag_en("he was gliddering smorphously");
        assert_eq!(tokens[2].pos, PosTag::Verb, "-ing heuristic");
        assert_eq!(tokens[2].lemma, "glidder");
        assert_eq!(tokens[3].pos, PosTag::Adv, "-ly heuristic");
    }

    #[test]
    fn french_infinitive_needs_no_preceding_determiner() {
        // Unknown "-er" word after a determiner stays nominal …
        let tokens = tag_fr("le brasier");
        assert_eq!(tokens[1].pos, PosTag::NounCommon);
        // … but verbal elsewhere.
        let tokens = tag_fr("il va brasier");
        assert_eq!(tokens[2].pos, PosTag::Verb);
    }

    #[test]
    fn numbers_and_punctuation() {
        let tokens = tag_en("He won 1,000 francs!");
        assert_eq!(tokens[2].pos, PosTag::Num);
        assert_eq!(tokens.last().unwrap().pos, PosTag::SentEnd);
        let tokens = tag_en("yes , no");
        assert_eq!(tokens[1].pos, PosTag::Punct);
    }

    #[test]
    fn plural_stripping_for_unknown_nouns() {
        assert_eq!(en_noun_lemma("zorbs"), "zorb");
        assert_eq!(en_noun_lemma("ladies"), "lady");
        assert_eq!(en_noun_lemma("glasses"), "glass");
        assert_eq!(en_noun_lemma("grass"), "grass");
        assert_eq!(fr_noun_lemma("tombeaux"), "tombeau");
        assert_eq!(fr_noun_lemma("chevaux"), "cheval");
        assert_eq!(fr_noun_lemma("pierres"), "pierre");
    }

    #[test]
    fn french_elision_tokens_resolve_to_full_lemmas() {
        let tokens = tag_fr("l'homme d'une femme");
        assert_eq!(tokens[0].lemma, "le");
        assert_eq!(tokens[0].pos, PosTag::Det);
        assert_eq!(tokens[2].lemma, "de");
        assert_eq!(tokens[2].pos, PosTag::Adp);
    }
}
