//! The simile-marker inventory: pattern types, the built-in English and
//! French marker sets, JSON loading/validation for user-supplied extensions,
//! and the two surface detectors for morphological adjective markers
//! ("-like" suffixation and noun+colour compounds).

use std::collections::{BTreeSet, HashSet};
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::data::DataSource;
use crate::error::{Error, Result};
use crate::pipeline::PosTag;
use crate::types::Language;

/// The two grammatical classes markers fall into.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MarkerCategory {
    Verb,
    Adj,
}

/// How a pattern's elements are interpreted by the matcher.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PatternKind {
    /// Elements must match consecutive tokens.
    FixedSeq,
    /// First element anchors; remaining elements match after a bounded run
    /// of free (non-punctuation) tokens.
    GappedSeq,
    /// Any verb, then a comparative word, then its complementizer
    /// (elements: [comparative, complementizer]).
    VerbComparative,
    /// Single token whose surface ends in the "-like" suffix.
    SuffixLike,
    /// Single hyphenated noun+colour token such as "snow-white".
    ColourCompound,
}

/// One slot of a sequence pattern: a set of acceptable lemmas, optionally
/// restricted to one part of speech.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementSpec {
    /// Acceptable lemmas, lowercase NFC; matching is case-insensitive because
    /// token lemmas are already lowercased.
    pub lemmas: BTreeSet<String>,
    /// If set, the token's tag must equal this as well.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pos: Option<PosTag>,
}

impl ElementSpec {
    pub fn new<I, S>(lemmas: I, pos: Option<PosTag>) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        ElementSpec {
            lemmas: lemmas.into_iter().map(Into::into).collect(),
            pos,
        }
    }

    /// Does `token` satisfy this slot?
    pub fn matches(&self, lemma: &str, pos: PosTag) -> bool {
        self.lemmas.contains(lemma) && self.pos.is_none_or(|required| required == pos)
    }
}

/// A single marker pattern, serializable to and from the JSON lexicon format.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MarkerPattern {
    /// Stable identifier such as `en.adj.akin_to` (ASCII, dot-separated).
    pub id: String,
    pub language: Language,
    pub category: MarkerCategory,
    pub kind: PatternKind,
    /// Slot sequence; empty for the two single-token surface-detector kinds.
    #[serde(default)]
    pub elements: Vec<ElementSpec>,
    /// Maximum number of free tokens inside a gapped match (gapped kind only).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_gap: Option<usize>,
    /// Markers shipped but skipped unless explicitly opted in.
    #[serde(default)]
    pub excluded_by_default: bool,
}

impl MarkerPattern {
    /// Checks the structural invariants for this pattern in isolation.
    pub fn validate(&self) -> Result<()> {
        let fail = |message: &str| {
            Err(Error::LexiconValidation {
                entry: self.id.clone(),
                message: message.to_string(),
            })
        };
        if self.id.is_empty() {
            return Err(Error::LexiconValidation {
                entry: "<unnamed>".to_string(),
                message: "pattern id must be non-empty".to_string(),
            });
        }
        for element in &self.elements {
            if element.lemmas.is_empty() {
                return fail("element with empty lemma set");
            }
            for lemma in &element.lemmas {
                if lemma.is_empty() {
                    return fail("empty lemma");
                }
                if lemma.chars().any(char::is_whitespace) {
                    return fail("lemma contains whitespace");
                }
                if *lemma != lemma.to_lowercase() {
                    return fail("lemma must be lowercase");
                }
            }
        }
        match self.kind {
            PatternKind::FixedSeq => {
                if self.elements.is_empty() {
                    return fail("fixed_seq needs at least one element");
                }
                if self.max_gap.is_some() {
                    return fail("max_gap is only valid for gapped_seq");
                }
            }
            PatternKind::GappedSeq => {
                if self.elements.len() < 2 {
                    return fail("gapped_seq needs an anchor element and a tail");
                }
                if self.max_gap.is_none() {
                    return fail("gapped_seq needs max_gap");
                }
            }
            PatternKind::VerbComparative => {
                if self.elements.len() != 2 {
                    return fail("verb_comparative needs exactly [comparative, complementizer]");
                }
                if self.max_gap.is_some() {
                    return fail("max_gap is only valid for gapped_seq");
                }
            }
            PatternKind::SuffixLike | PatternKind::ColourCompound => {
                if !self.elements.is_empty() {
                    return fail("surface-detector kinds take no elements");
                }
                if self.max_gap.is_some() {
                    return fail("max_gap is only valid for gapped_seq");
                }
            }
        }
        Ok(())
    }
}

/// Gap bound used by the built-in gapped patterns.
pub const DEFAULT_MAX_GAP: usize = 4;

fn el(lemmas: &[&str], pos: Option<PosTag>) -> ElementSpec {
    ElementSpec::new(lemmas.iter().copied(), pos)
}

fn pattern(
    id: &str,
    language: Language,
    category: MarkerCategory,
    kind: PatternKind,
    elements: Vec<ElementSpec>,
    max_gap: Option<usize>,
    excluded_by_default: bool,
) -> MarkerPattern {
    MarkerPattern {
        id: id.to_string(),
        language,
        category,
        kind,
        elements,
        max_gap,
        excluded_by_default,
    }
}

/// The built-in marker inventory for one language: 7 verb + 9 adjective
/// patterns for English, 11 verb + 8 adjective patterns for French.
///
/// `remind` / `rappeler` are present but `excluded_by_default` because of
/// their heavily polysemous non-comparative uses; callers opt back in
/// explicitly.
pub fn builtin_lexicon(language: Language) -> Vec<MarkerPattern> {
    use Language::{En, Fr};
    use MarkerCategory::{Adj, Verb};
    use PatternKind::{ColourCompound, FixedSeq, GappedSeq, SuffixLike, VerbComparative};

    let verb = Some(PosTag::Verb);
    match language {
        En => vec![
            // Verb markers.
            pattern(
                "en.verb.resemble",
                En,
                Verb,
                FixedSeq,
                vec![el(&["resemble"], verb)],
                None,
                false,
            ),
            pattern(
                "en.verb.remind",
                En,
                Verb,
                GappedSeq,
                // "reminded her of …": the object sits in the gap.
                vec![el(&["remind"], verb), el(&["of"], None)],
                Some(DEFAULT_MAX_GAP),
                true,
            ),
            pattern(
                "en.verb.compare",
                En,
                Verb,
                FixedSeq,
                vec![el(&["compare"], verb)],
                None,
                false,
            ),
            pattern(
                "en.verb.seem",
                En,
                Verb,
                FixedSeq,
                vec![el(&["seem"], verb)],
                None,
                false,
            ),
            pattern(
                "en.verb.less_than",
                En,
                Verb,
                VerbComparative,
                vec![el(&["less"], None), el(&["than"], None)],
                None,
                false,
            ),
            pattern(
                "en.verb.more_than",
                En,
                Verb,
                VerbComparative,
                vec![el(&["more"], None), el(&["than"], None)],
                None,
                false,
            ),
            pattern(
                "en.verb.be_kind_of",
                En,
                Verb,
                GappedSeq,
                vec![
                    el(&["be", "become"], verb),
                    el(&["kind", "sort", "type"], None),
                    el(&["of"], None),
                ],
                Some(DEFAULT_MAX_GAP),
                false,
            ),
            // Adjective markers.
            pattern(
                "en.adj.similar_to",
                En,
                Adj,
                FixedSeq,
                vec![el(&["similar"], None), el(&["to"], None)],
                None,
                false,
            ),
            pattern(
                "en.adj.akin_to",
                En,
                Adj,
                FixedSeq,
                vec![el(&["akin"], None), el(&["to"], None)],
                None,
                false,
            ),
            pattern(
                "en.adj.identical_to",
                En,
                Adj,
                FixedSeq,
                vec![el(&["identical"], None), el(&["to"], None)],
                None,
                false,
            ),
            pattern(
                "en.adj.analogous_to",
                En,
                Adj,
                FixedSeq,
                vec![el(&["analogous"], None), el(&["to"], None)],
                None,
                false,
            ),
            pattern(
                "en.adj.comparable_to",
                En,
                Adj,
                FixedSeq,
                vec![el(&["comparable"], None), el(&["to"], None)],
                None,
                false,
            ),
            pattern(
                "en.adj.compared_to",
                En,
                Adj,
                FixedSeq,
                // Lemmatizers disagree on whether "compared" stays inflected.
                vec![el(&["compare", "compared"], None), el(&["to"], None)],
                None,
                false,
            ),
            pattern(
                "en.adj.reminiscent_of",
                En,
                Adj,
                FixedSeq,
                vec![el(&["reminiscent"], None), el(&["of"], None)],
                None,
                false,
            ),
            pattern(
                "en.adj.like_suffix",
                En,
                Adj,
                SuffixLike,
                Vec::new(),
                None,
                false,
            ),
            pattern(
                "en.adj.colour_compound",
                En,
                Adj,
                ColourCompound,
                Vec::new(),
                None,
                false,
            ),
        ],
        Fr => {
            // "au"/"aux" and "du" are fused preposition+article forms; the
            // noun phrase then starts directly at the following noun.
            let a_prep = || el(&["à", "au", "aux"], None);
            let de_prep = || el(&["de", "du"], None);
            vec![
                // Verb markers.
                pattern(
                    "fr.verb.ressembler_a",
                    Fr,
                    Verb,
                    FixedSeq,
                    vec![el(&["ressembler"], verb), a_prep()],
                    None,
                    false,
                ),
                pattern(
                    "fr.verb.sembler",
                    Fr,
                    Verb,
                    FixedSeq,
                    vec![el(&["sembler"], verb)],
                    None,
                    false,
                ),
                pattern(
                    "fr.verb.rappeler",
                    Fr,
                    Verb,
                    FixedSeq,
                    vec![el(&["rappeler"], verb)],
                    None,
                    true,
                ),
                pattern(
                    "fr.verb.faire_effet_de",
                    Fr,
                    Verb,
                    FixedSeq,
                    vec![el(&["faire"], verb), el(&["le"], None), el(&["effet"], None), de_prep()],
                    None,
                    false,
                ),
                pattern(
                    "fr.verb.faire_penser_a",
                    Fr,
                    Verb,
                    FixedSeq,
                    vec![el(&["faire"], verb), el(&["penser"], None), a_prep()],
                    None,
                    false,
                ),
                pattern(
                    "fr.verb.faire_songer_a",
                    Fr,
                    Verb,
                    FixedSeq,
                    vec![el(&["faire"], verb), el(&["songer"], None), a_prep()],
                    None,
                    false,
                ),
                pattern(
                    "fr.verb.donner_impression_de",
                    Fr,
                    Verb,
                    FixedSeq,
                    vec![
                        el(&["donner"], verb),
                        el(&["le"], None),
                        el(&["impression"], None),
                        de_prep(),
                    ],
                    None,
                    false,
                ),
                pattern(
                    "fr.verb.avoir_air_de",
                    Fr,
                    Verb,
                    FixedSeq,
                    vec![el(&["avoir"], verb), el(&["le"], None), el(&["air"], None), de_prep()],
                    None,
                    false,
                ),
                pattern(
                    "fr.verb.plus_que",
                    Fr,
                    Verb,
                    VerbComparative,
                    vec![el(&["plus"], None), el(&["que"], None)],
                    None,
                    false,
                ),
                pattern(
                    "fr.verb.moins_que",
                    Fr,
                    Verb,
                    VerbComparative,
                    vec![el(&["moins"], None), el(&["que"], None)],
                    None,
                    false,
                ),
                pattern(
                    "fr.verb.etre_espece_de",
                    Fr,
                    Verb,
                    GappedSeq,
                    vec![
                        el(&["être", "devenir"], verb),
                        el(&["espèce", "type", "genre", "sorte"], None),
                        de_prep(),
                    ],
                    Some(DEFAULT_MAX_GAP),
                    false,
                ),
                // Adjective markers.
                pattern(
                    "fr.adj.identique_a",
                    Fr,
                    Adj,
                    FixedSeq,
                    vec![el(&["identique"], None), a_prep()],
                    None,
                    false,
                ),
                pattern(
                    "fr.adj.tel",
                    Fr,
                    Adj,
                    FixedSeq,
                    // "tel" directly precedes its noun phrase ("tel un fauve").
                    vec![el(&["tel"], None)],
                    None,
                    false,
                ),
                pattern(
                    "fr.adj.semblable_a",
                    Fr,
                    Adj,
                    FixedSeq,
                    vec![el(&["semblable"], None), a_prep()],
                    None,
                    false,
                ),
                pattern(
                    "fr.adj.pareil_a",
                    Fr,
                    Adj,
                    FixedSeq,
                    vec![el(&["pareil"], None), a_prep()],
                    None,
                    false,
                ),
                pattern(
                    "fr.adj.similaire_a",
                    Fr,
                    Adj,
                    FixedSeq,
                    vec![el(&["similaire"], None), a_prep()],
                    None,
                    false,
                ),
                pattern(
                    "fr.adj.analogue_a",
                    Fr,
                    Adj,
                    FixedSeq,
                    vec![el(&["analogue"], None), a_prep()],
                    None,
                    false,
                ),
                pattern(
                    "fr.adj.egal_a",
                    Fr,
                    Adj,
                    FixedSeq,
                    vec![el(&["égal"], None), a_prep()],
                    None,
                    false,
                ),
                pattern(
                    "fr.adj.comparable_a",
                    Fr,
                    Adj,
                    FixedSeq,
                    vec![el(&["comparable"], None), a_prep()],
                    None,
                    false,
                ),
            ]
        }
    }
}

/// Validates a pattern list as a whole: per-pattern invariants plus
/// id uniqueness.
pub fn validate_patterns(patterns: &[MarkerPattern]) -> Result<()> {
    let mut seen = HashSet::new();
    for p in patterns {
        p.validate()?;
        if !seen.insert(p.id.as_str()) {
            return Err(Error::DuplicateMarkerId { id: p.id.clone() });
        }
    }
    Ok(())
}

/// Loads and validates a JSON lexicon file (top-level array of patterns).
pub fn load_lexicon(path: &Path) -> Result<Vec<MarkerPattern>> {
    let text = fs::read_to_string(path).map_err(|e| Error::io(path.display().to_string(), e))?;
    let patterns: Vec<MarkerPattern> =
        serde_json::from_str(&text).map_err(|e| Error::LexiconParse {
            path: path.display().to_string(),
            message: e.to_string(),
        })?;
    validate_patterns(&patterns)?;
    Ok(patterns)
}

/// The colour vocabulary used by the noun+colour compound detector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColourLexicon {
    colours: BTreeSet<String>,
}

impl ColourLexicon {
    /// Parses a plain-text list, one colour per line; blank lines and `#`
    /// comments are skipped; terms are lowercased.
    pub fn from_text(text: &str) -> Self {
        let colours = text
            .lines()
            .map(str::trim)
            .filter(|line| !line.is_empty() && !line.starts_with('#'))
            .map(str::to_lowercase)
            .collect();
        ColourLexicon { colours }
    }

    pub fn from_source(source: &DataSource) -> Result<Self> {
        Ok(Self::from_text(&source.colour_list()?))
    }

    pub fn builtin() -> Self {
        Self::from_source(&DataSource::builtin()).expect("bundled colour list always resolves")
    }

    pub fn from_path(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path).map_err(|e| Error::io(path.display().to_string(), e))?;
        Ok(Self::from_text(&text))
    }

    pub fn contains(&self, term: &str) -> bool {
        self.colours.contains(&term.to_lowercase())
    }

    pub fn len(&self) -> usize {
        self.colours.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colours.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &str> {
        self.colours.iter().map(String::as_str)
    }
}

/// Surfaces that end in "like" without being suffixed coinages.
const LIKE_EXCLUSIONS: [&str; 6] = ["like", "alike", "unlike", "dislike", "belike", "mislike"];

/// True when the surface is an adjective coined with the "-like" suffix,
/// hyphenated or closed: "god-like", "ghostlike" — but not "unlike".
pub fn detect_like_suffix(surface: &str) -> bool {
    let lower = surface.to_lowercase();
    if LIKE_EXCLUSIONS.contains(&lower.as_str()) {
        return false;
    }
    let Some(stem) = lower.strip_suffix("like") else {
        return false;
    };
    let stem = stem.strip_suffix('-').unwrap_or(stem);
    stem.chars().count() >= 2 && stem.chars().all(char::is_alphabetic)
}

/// True when the surface is a single-hyphen `X-Y` compound whose second part
/// is a colour term and whose first part is an alphabetic non-colour word:
/// "snow-white" yes, "red-hot" no.
pub fn detect_colour_compound(surface: &str, colours: &ColourLexicon) -> bool {
    let mut parts = surface.split('-');
    let (Some(first), Some(second), None) = (parts.next(), parts.next(), parts.next()) else {
        return false;
    };
    first.chars().count() >= 2
        && first.chars().all(char::is_alphabetic)
        && colours.contains(second)
        && !colours.contains(first)
}

/// A validated, language-filtered pattern set plus the colour vocabulary —
/// everything the matcher needs, immutable and shareable across threads.
#[derive(Debug, Clone)]
pub struct CompiledLexicon {
    language: Language,
    patterns: Vec<MarkerPattern>,
    colours: ColourLexicon,
}

impl CompiledLexicon {
    /// Validates `patterns` and keeps those for `language`. Patterns for the
    /// other language are silently dropped so one file can serve both.
    pub fn new(
        language: Language,
        patterns: Vec<MarkerPattern>,
        colours: ColourLexicon,
    ) -> Result<Self> {
        validate_patterns(&patterns)?;
        let patterns: Vec<MarkerPattern> = patterns
            .into_iter()
            .filter(|p| p.language == language)
            .collect();
        Ok(CompiledLexicon {
            language,
            patterns,
            colours,
        })
    }

    pub fn builtin(language: Language) -> Self {
        Self::new(language, builtin_lexicon(language), ColourLexicon::builtin())
            .expect("built-in lexicon always validates")
    }

    pub fn language(&self) -> Language {
        self.language
    }

    pub fn patterns(&self) -> &[MarkerPattern] {
        &self.patterns
    }

    pub fn colours(&self) -> &ColourLexicon {
        &self.colours
    }

    pub fn pattern_by_id(&self, id: &str) -> Option<&MarkerPattern> {
        self.patterns.iter().find(|p| p.id == id)
    }

    /// Drops patterns flagged `excluded_by_default` (used unless the caller
    /// opts in to them).
    pub fn without_excluded(mut self) -> Self {
        self.patterns.retain(|p| !p.excluded_by_default);
        self
    }
}

/// Validates one pattern and returns it ready for matching; the error names
/// the offending pattern.
pub fn compile_lexicon(
    language: Language,
    patterns: Vec<MarkerPattern>,
    colours: ColourLexicon,
) -> Result<CompiledLexicon> {
    CompiledLexicon::new(language, patterns, colours)
}

#[cfg(test)]
mod tests {
    use super::*;
    use unicode_normalization::is_nfc;

    #[test]
    fn builtin_counts_per_language_and_category() {
        let en = builtin_lexicon(Language::En);
        let fr = builtin_lexicon(Language::Fr);
        assert_eq!(en.len(), 16);
        assert_eq!(fr.len(), 19);
        let count = |ps: &[MarkerPattern], c: MarkerCategory| {
            ps.iter().filter(|p| p.category == c).count()
        };
        assert_eq!(count(&en, MarkerCategory::Verb), 7);
        assert_eq!(count(&en, MarkerCategory::Adj), 9);
        assert_eq!(count(&fr, MarkerCategory::Verb), 11);
        assert_eq!(count(&fr, MarkerCategory::Adj), 8);
    }

    #[test]
    fn exactly_remind_and_rappeler_are_excluded_by_default() {
        let mut excluded: Vec<String> = builtin_lexicon(Language::En)
            .into_iter()
            .chain(builtin_lexicon(Language::Fr))
            .filter(|p| p.excluded_by_default)
            .map(|p| p.id)
            .collect();
        excluded.sort();
        assert_eq!(excluded, ["en.verb.remind", "fr.verb.rappeler"]);
    }

    #[test]
    fn builtin_validates_and_lemmas_are_lowercase_nfc() {
        for language in [Language::En, Language::Fr] {
            let patterns = builtin_lexicon(language);
            validate_patterns(&patterns).unwrap();
            for p in &patterns {
                for e in &p.elements {
                    for lemma in &e.lemmas {
                        assert!(is_nfc(lemma), "{lemma} not NFC in {}", p.id);
                        assert_eq!(*lemma, lemma.to_lowercase(), "{lemma} in {}", p.id);
                    }
                }
            }
        }
    }

    #[test]
    fn json_round_trip_preserves_patterns() {
        for language in [Language::En, Language::Fr] {
            let patterns = builtin_lexicon(language);
            let json = serde_json::to_string_pretty(&patterns).unwrap();
            let back: Vec<MarkerPattern> = serde_json::from_str(&json).unwrap();
            assert_eq!(patterns, back);
        }
    }

    #[test]
    fn json_field_spellings() {
        let patterns = builtin_lexicon(Language::En);
        let json = serde_json::to_value(&patterns).unwrap();
        let akin = json
            .as_array()
            .unwrap()
            .iter()
            .find(|p| p["id"] == "en.adj.akin_to")
            .unwrap();
        assert_eq!(akin["language"], "en");
        assert_eq!(akin["category"], "adj");
        assert_eq!(akin["kind"], "fixed_seq");
        assert_eq!(akin["elements"][0]["lemmas"][0], "akin");
        let be_kind = json
            .as_array()
            .unwrap()
            .iter()
            .find(|p| p["id"] == "en.verb.be_kind_of")
            .unwrap();
        assert_eq!(be_kind["kind"], "gapped_seq");
        assert_eq!(be_kind["max_gap"], 4);
        assert_eq!(be_kind["elements"][0]["pos"], "verb");
    }

    #[test]
    fn duplicate_ids_are_rejected() {
        let mut patterns = builtin_lexicon(Language::En);
        patterns.push(patterns[0].clone());
        let err = validate_patterns(&patterns).unwrap_err();
        assert!(matches!(err, Error::DuplicateMarkerId { .. }));
    }

    #[test]
    fn surface_detector_kinds_reject_elements() {
        let mut p = builtin_lexicon(Language::En)
            .into_iter()
            .find(|p| p.kind == PatternKind::SuffixLike)
            .unwrap();
        p.elements.push(ElementSpec::new(["like"], None));
        assert!(p.validate().is_err());
    }

    #[test]
    fn gapped_without_max_gap_is_rejected() {
        let mut p = builtin_lexicon(Language::En)
            .into_iter()
            .find(|p| p.id == "en.verb.be_kind_of")
            .unwrap();
        p.max_gap = None;
        assert!(p.validate().is_err());
    }

    #[test]
    fn like_suffix_detector() {
        assert!(detect_like_suffix("god-like"));
        assert!(detect_like_suffix("ghostlike"));
        assert!(detect_like_suffix("Deathlike"));
        assert!(!detect_like_suffix("unlike"));
        assert!(!detect_like_suffix("alike"));
        assert!(!detect_like_suffix("like"));
        assert!(!detect_like_suffix("belike"));
        // One-letter stems are noise.
        assert!(!detect_like_suffix("slike"));
    }

    #[test]
    fn colour_compound_detector() {
        let colours = ColourLexicon::builtin();
        assert_eq!(colours.len(), 18);
        assert!(detect_colour_compound("snow-white", &colours));
        assert!(detect_colour_compound("blood-red", &colours));
        assert!(detect_colour_compound("Steel-grey", &colours));
        assert!(!detect_colour_compound("red-hot", &colours));
        // Colour-colour pairs are shades, not comparisons.
        assert!(!detect_colour_compound("grey-green", &colours));
        assert!(!detect_colour_compound("white", &colours));
        assert!(!detect_colour_compound("snow-white-ish", &colours));
        assert!(!detect_colour_compound("x-red", &colours));
    }

    #[test]
    fn detectors_are_disjoint_on_sample_vocabulary() {
        let colours = ColourLexicon::builtin();
        let vocabulary = [
            "god-like", "ghostlike", "deathlike", "dreamlike", "childlike", "warlike",
            "snow-white", "blood-red", "pitch-black", "steel-grey", "silver-grey", "sea-green",
            "unlike", "alike", "like", "red-hot", "half-open", "well-known",
        ];
        for word in vocabulary {
            assert!(
                !(detect_like_suffix(word) && detect_colour_compound(word, &colours)),
                "{word} triggered both detectors"
            );
        }
    }

    #[test]
    fn compiled_lexicon_filters_by_language_and_excluded() {
        let mut all = builtin_lexicon(Language::En);
        all.extend(builtin_lexicon(Language::Fr));
        let compiled = CompiledLexicon::new(Language::Fr, all, ColourLexicon::builtin()).unwrap();
        assert_eq!(compiled.patterns().len(), 19);
        assert!(compiled.pattern_by_id("fr.adj.tel").is_some());
        assert!(compiled.pattern_by_id("en.adj.akin_to").is_none());
        let trimmed = compiled.without_excluded();
        assert_eq!(trimmed.patterns().len(), 18);
        assert!(trimmed.pattern_by_id("fr.verb.rappeler").is_none());
    }
}
