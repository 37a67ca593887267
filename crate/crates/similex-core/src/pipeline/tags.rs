//! Normalization of raw tagger output onto a small closed tag set.
//!
//! External taggers emit fine-grained, tagset-specific labels (Penn-style for
//! English, the common French tagset with `VER:pres`-style subtypes). The rest
//! of the toolkit only needs the coarse distinctions captured by
//! [`PosTag`]; [`normalize_tag`] is the single place where raw labels are
//! interpreted.

use serde::{Deserialize, Serialize};

use crate::types::Language;

/// Coarse part-of-speech categories used throughout the toolkit.
///
/// The enumeration is closed: every raw tag from either supported tagset maps
/// to exactly one variant, with [`PosTag::Other`] as the total-function
/// catch-all.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PosTag {
    NounCommon,
    NounProper,
    Verb,
    Adj,
    Adv,
    Det,
    /// Adpositions: prepositions and the English infinitival `to`.
    Adp,
    Pron,
    Num,
    Conj,
    Punct,
    /// Sentence-final punctuation as emitted by the tagger (`SENT`).
    SentEnd,
    Other,
}

impl PosTag {
    /// True for the two noun tags that may head an NP chunk.
    pub fn is_noun(self) -> bool {
        matches!(self, PosTag::NounCommon | PosTag::NounProper)
    }

    /// True for punctuation of either kind.
    pub fn is_punct(self) -> bool {
        matches!(self, PosTag::Punct | PosTag::SentEnd)
    }
}

/// Which raw tagset a stream of tags belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Tagset {
    /// Penn-Treebank-style English tags (`NN`, `VVZ`, `JJR`, `SENT`, ...).
    EnPenn,
    /// French tags with colon-separated subtypes (`NOM`, `VER:pres`, ...).
    Fr,
}

impl From<Language> for Tagset {
    fn from(language: Language) -> Self {
        match language {
            Language::En => Tagset::EnPenn,
            Language::Fr => Tagset::Fr,
        }
    }
}

/// Maps one raw tag onto the closed [`PosTag`] set. Total: unknown tags
/// become [`PosTag::Other`], and tags made of punctuation characters only
/// (Penn `,` `:` `` `` `` etc.) become [`PosTag::Punct`].
pub fn normalize_tag(raw: &str, tagset: Tagset) -> PosTag {
    let raw = raw.trim();
    match tagset {
        Tagset::EnPenn => normalize_en(raw),
        Tagset::Fr => normalize_fr(raw),
    }
}

fn normalize_en(raw: &str) -> PosTag {
    match raw {
        "NN" | "NNS" => PosTag::NounCommon,
        "NP" | "NPS" | "NNP" | "NNPS" => PosTag::NounProper,
        "MD" => PosTag::Verb,
        "JJ" | "JJR" | "JJS" => PosTag::Adj,
        "RB" | "RBR" | "RBS" | "WRB" => PosTag::Adv,
        "DT" | "PDT" | "WDT" => PosTag::Det,
        "IN" | "TO" => PosTag::Adp,
        "PP" | "PP$" | "PRP" | "PRP$" | "WP" | "WP$" => PosTag::Pron,
        "CD" => PosTag::Num,
        "CC" => PosTag::Conj,
        "SENT" => PosTag::SentEnd,
        // VB* (be), VD* (do), VH* (have), VV* (lexical verbs) and all their
        // inflection subtypes.
        _ if ["VB", "VD", "VH", "VV"].iter().any(|p| raw.starts_with(p)) => PosTag::Verb,
        _ if is_punct_label(raw) => PosTag::Punct,
        _ => PosTag::Other,
    }
}

fn normalize_fr(raw: &str) -> PosTag {
    match raw {
        "NOM" => PosTag::NounCommon,
        "NAM" => PosTag::NounProper,
        "ADJ" => PosTag::Adj,
        "ADV" => PosTag::Adv,
        "NUM" => PosTag::Num,
        "KON" => PosTag::Conj,
        "SENT" => PosTag::SentEnd,
        _ if raw.starts_with("VER") => PosTag::Verb,
        // PRP and PRP:det (du, au, ...) are both adpositional here.
        _ if raw.starts_with("PRP") => PosTag::Adp,
        _ if raw.starts_with("DET") => PosTag::Det,
        _ if raw.starts_with("PRO") => PosTag::Pron,
        _ if raw.starts_with("PUN") => PosTag::Punct,
        _ if is_punct_label(raw) => PosTag::Punct,
        _ => PosTag::Other,
    }
}

/// Tag labels that are literal punctuation, e.g. Penn's `,` and `()` tags.
fn is_punct_label(raw: &str) -> bool {
    !raw.is_empty() && raw.chars().all(|c| !c.is_alphanumeric())
}

#[cfg(test)]
mod tests {
    use super::*;

    // Hand-written mapping table drawn from the published tagset
    // documentation; kept independent from the implementation's match arms so
    // a typo there cannot hide in a copy-pasted test.
    const EN_CASES: &[(&str, PosTag)] = &[
        ("NN", PosTag::NounCommon),
        ("NNS", PosTag::NounCommon),
        ("NP", PosTag::NounProper),
        ("NPS", PosTag::NounProper),
        ("NNP", PosTag::NounProper),
        ("NNPS", PosTag::NounProper),
        ("VB", PosTag::Verb),
        ("VBZ", PosTag::Verb),
        ("VBD", PosTag::Verb),
        ("VBN", PosTag::Verb),
        ("VV", PosTag::Verb),
        ("VVZ", PosTag::Verb),
        ("VVD", PosTag::Verb),
        ("VVG", PosTag::Verb),
        ("VVN", PosTag::Verb),
        ("VH", PosTag::Verb),
        ("VHZ", PosTag::Verb),
        ("VD", PosTag::Verb),
        ("VDD", PosTag::Verb),
        ("MD", PosTag::Verb),
        ("JJ", PosTag::Adj),
        ("JJR", PosTag::Adj),
        ("JJS", PosTag::Adj),
        ("RB", PosTag::Adv),
        ("RBR", PosTag::Adv),
        ("WRB", PosTag::Adv),
        ("DT", PosTag::Det),
        ("PDT", PosTag::Det),
        ("WDT", PosTag::Det),
        ("IN", PosTag::Adp),
        ("TO", PosTag::Adp),
        ("PP", PosTag::Pron),
        ("PP$", PosTag::Pron),
        ("PRP", PosTag::Pron),
        ("PRP$", PosTag::Pron),
        ("WP", PosTag::Pron),
        ("CD", PosTag::Num),
        ("CC", PosTag::Conj),
        ("SENT", PosTag::SentEnd),
        (",", PosTag::Punct),
        (":", PosTag::Punct),
        ("``", PosTag::Punct),
        ("''", PosTag::Punct),
        ("(", PosTag::Punct),
        (")", PosTag::Punct),
        ("FW", PosTag::Other),
        ("UH", PosTag::Other),
        ("POS", PosTag::Other),
        ("XYZ", PosTag::Other),
    ];

    const FR_CASES: &[(&str, PosTag)] = &[
        ("NOM", PosTag::NounCommon),
        ("NAM", PosTag::NounProper),
        ("VER:pres", PosTag::Verb),
        ("VER:impf", PosTag::Verb),
        ("VER:simp", PosTag::Verb),
        ("VER:futu", PosTag::Verb),
        ("VER:cond", PosTag::Verb),
        ("VER:subi", PosTag::Verb),
        ("VER:subp", PosTag::Verb),
        ("VER:infi", PosTag::Verb),
        ("VER:pper", PosTag::Verb),
        ("VER:ppre", PosTag::Verb),
        ("ADJ", PosTag::Adj),
        ("ADV", PosTag::Adv),
        ("PRP", PosTag::Adp),
        ("PRP:det", PosTag::Adp),
        ("DET:ART", PosTag::Det),
        ("DET:POS", PosTag::Det),
        ("PRO", PosTag::Pron),
        ("PRO:PER", PosTag::Pron),
        ("PRO:DEM", PosTag::Pron),
        ("PRO:IND", PosTag::Pron),
        ("PRO:REL", PosTag::Pron),
        ("NUM", PosTag::Num),
        ("KON", PosTag::Conj),
        ("PUN", PosTag::Punct),
        ("PUN:cit", PosTag::Punct),
        ("SENT", PosTag::SentEnd),
        ("INT", PosTag::Other),
        ("ABR", PosTag::Other),
        ("XYZ", PosTag::Other),
    ];

    #[test]
    fn en_mapping_matches_reference_table() {
        for &(raw, want) in EN_CASES {
            assert_eq!(normalize_tag(raw, Tagset::EnPenn), want, "raw tag {raw:?}");
        }
    }

    #[test]
    fn fr_mapping_matches_reference_table() {
        for &(raw, want) in FR_CASES {
            assert_eq!(normalize_tag(raw, Tagset::Fr), want, "raw tag {raw:?}");
        }
    }

    #[test]
    fn tagset_follows_language() {
        assert_eq!(Tagset::from(Language::En), Tagset::EnPenn);
        assert_eq!(Tagset::from(Language::Fr), Tagset::Fr);
        // Same raw tag, different interpretation.
        assert_eq!(normalize_tag("NP", Tagset::EnPenn), PosTag::NounProper);
        assert_eq!(normalize_tag("NP", Tagset::Fr), PosTag::Other);
    }

    #[test]
    fn serde_names_are_snake_case() {
        assert_eq!(
            serde_json::to_string(&PosTag::NounCommon).unwrap(),
            "\"noun_common\""
        );
        assert_eq!(
            serde_json::from_str::<PosTag>("\"sent_end\"").unwrap(),
            PosTag::SentEnd
        );
    }
}
