//! Small shared value types: languages and half-open spans.

use std::fmt;
use std::str::FromStr;

use serde::de::{self, Deserializer, SeqAccess, Visitor};
use serde::ser::{SerializeTuple, Serializer};
use serde::{Deserialize, Serialize};

/// The two languages the toolkit understands.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Language {
    En,
    Fr,
}

impl Language {
    /// Lowercase two-letter code (`"en"` / `"fr"`).
    pub fn code(self) -> &'static str {
        match self {
            Language::En => "en",
            Language::Fr => "fr",
        }
    }
}

impl fmt::Display for Language {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

impl FromStr for Language {
    type Err = String;

    /// Parses `"en"` / `"fr"` case-insensitively.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "en" => Ok(Language::En),
            "fr" => Ok(Language::Fr),
            other => Err(format!("unknown language `{other}` (expected `en` or `fr`)")),
        }
    }
}

/// A half-open `[start, end)` range.
///
/// The unit depends on context: byte offsets when the span points into
/// document text, token indices when it points into a sentence. Spans are
/// serialized as a two-element JSON array `[start, end]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Span {
    pub start: usize,
    pub end: usize,
}

impl Span {
    /// Builds a span; panics if `start > end` (a programming error, not an
    /// input error — all spans in this crate are derived, never parsed from
    /// untrusted sources without validation).
    pub fn new(start: usize, end: usize) -> Self {
        assert!(start <= end, "span start {start} exceeds end {end}");
        Span { start, end }
    }

    /// Number of units covered.
    pub fn len(self) -> usize {
        self.end - self.start
    }

    /// True when the span covers nothing.
    pub fn is_empty(self) -> bool {
        self.start == self.end
    }

    /// True when `index` falls inside the half-open range.
    pub fn contains(self, index: usize) -> bool {
        self.start <= index && index < self.end
    }

    /// True when the two half-open ranges share at least one unit.
    pub fn overlaps(self, other: Span) -> bool {
        self.start < other.end && other.start < self.end
    }
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {})", self.start, self.end)
    }
}

impl Serialize for Span {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut tuple = serializer.serialize_tuple(2)?;
        tuple.serialize_element(&self.start)?;
        tuple.serialize_element(&self.end)?;
        tuple.end()
    }
}

impl<'de> Deserialize<'de> for Span {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct SpanVisitor;

        impl<'de> Visitor<'de> for SpanVisitor {
            type Value = Span;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a two-element array [start, end] with start <= end")
            }

            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<Span, A::Error> {
                let start: usize = seq
                    .next_element()?
                    .ok_or_else(|| de::Error::invalid_length(0, &self))?;
                let end: usize = seq
                    .next_element()?
                    .ok_or_else(|| de::Error::invalid_length(1, &self))?;
                if seq.next_element::<de::IgnoredAny>()?.is_some() {
                    return Err(de::Error::invalid_length(3, &self));
                }
                if start > end {
                    return Err(de::Error::custom(format!(
                        "span start {start} exceeds end {end}"
                    )));
                }
                Ok(Span { start, end })
            }
        }

        deserializer.deserialize_tuple(2, SpanVisitor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn language_round_trips_through_str() {
        for lang in [Language::En, Language::Fr] {
            assert_eq!(lang.code().parse::<Language>().unwrap(), lang);
        }
        assert_eq!("EN".parse::<Language>().unwrap(), Language::En);
        assert!("de".parse::<Language>().is_err());
    }

    #[test]
    fn span_overlap_is_symmetric_and_half_open() {
        let a = Span::new(0, 2);
        let b = Span::new(2, 4);
        let c = Span::new(1, 3);
        assert!(!a.overlaps(b), "touching spans do not overlap");
        assert!(!b.overlaps(a));
        assert!(a.overlaps(c));
        assert!(c.overlaps(b));
        assert!(!Span::new(1, 1).overlaps(c), "empty spans overlap nothing");
    }

    #[test]
    fn span_serializes_as_pair() {
        let span = Span::new(3, 7);
        let json = serde_json::to_string(&span).unwrap();
        assert_eq!(json, "[3,7]");
        let back: Span = serde_json::from_str(&json).unwrap();
        assert_eq!(back, span);
        assert!(serde_json::from_str::<Span>("[5,2]").is_err());
        assert!(serde_json::from_str::<Span>("[1,2,3]").is_err());
    }

    #[test]
    #[should_panic(expected = "span start")]
    fn span_constructor_rejects_inverted_bounds() {
        let _ = Span::new(4, 1);
    }
}
