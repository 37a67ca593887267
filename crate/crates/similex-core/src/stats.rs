//! Frequency accounting over extracted candidates: per-document marker
//! counts, exact per-sentence rates, report merging for parallel runs, and
//! grouped aggregation (per marker, author, language, or grammatical
//! category).
//!
//! Raw counts and rates are always reported side by side; all arithmetic is
//! exact (integers and rationals), with a fixed 6-decimal rendering so output
//! bytes never depend on the platform.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::extract::SimileCandidate;
use crate::lexicon::{builtin_lexicon, MarkerCategory};
use crate::types::Language;

/// Document metadata needed for grouping.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DocMeta {
    pub author: String,
    pub language: Language,
}

/// An exact count-per-sentences ratio. Comparison and equality are value
/// based (1/2 equals 2/4); rendering is fixed-point with 6 fractional
/// digits, rounding half up.
#[derive(Debug, Clone, Copy)]
pub struct Rate {
    count: u64,
    sentences: u64,
}

impl Rate {
    /// Builds `count / sentences`; `sentences` must be positive.
    pub fn new(count: u64, sentences: u64) -> Self {
        assert!(sentences > 0, "rate denominator must be positive");
        Rate { count, sentences }
    }

    pub fn count(&self) -> u64 {
        self.count
    }

    pub fn sentences(&self) -> u64 {
        self.sentences
    }

    /// Decimal rendering with exactly 6 fractional digits, e.g. "0.050000".
    pub fn render(&self) -> String {
        let scaled = self.count as u128 * 1_000_000;
        let denom = self.sentences as u128;
        let mut q = scaled / denom;
        if (scaled % denom) * 2 >= denom {
            q += 1;
        }
        format!("{}.{:06}", q / 1_000_000, q % 1_000_000)
    }
}

impl PartialEq for Rate {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Rate {}

impl PartialOrd for Rate {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rate {
    fn cmp(&self, other: &Self) -> Ordering {
        let left = self.count as u128 * other.sentences as u128;
        let right = other.count as u128 * self.sentences as u128;
        left.cmp(&right)
    }
}

impl Serialize for Rate {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.render())
    }
}

impl std::fmt::Display for Rate {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.render())
    }
}

/// Marker counts per document, plus the document registry (sentence counts
/// and metadata) needed to turn counts into rates and groups.
///
/// All maps are ordered, so iteration — and therefore every derived output —
/// is deterministic.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FrequencyReport {
    /// (doc_id, marker_id) → occurrence count.
    cells: BTreeMap<(String, String), u64>,
    doc_sentences: BTreeMap<String, u64>,
    doc_meta: BTreeMap<String, DocMeta>,
}

impl FrequencyReport {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds a document to the registry. Re-registering an id is an error.
    pub fn register_document(&mut self, doc_id: &str, meta: DocMeta, sentences: u64) -> Result<()> {
        if self.doc_sentences.contains_key(doc_id) {
            return Err(Error::DuplicateDocId {
                id: doc_id.to_string(),
            });
        }
        self.doc_sentences.insert(doc_id.to_string(), sentences);
        self.doc_meta.insert(doc_id.to_string(), meta);
        Ok(())
    }

    /// Adds `n` occurrences of `marker_id` in `doc_id`, which must be
    /// registered first.
    pub fn add_count(&mut self, doc_id: &str, marker_id: &str, n: u64) {
        assert!(
            self.doc_sentences.contains_key(doc_id),
            "count added for unregistered document {doc_id}"
        );
        *self
            .cells
            .entry((doc_id.to_string(), marker_id.to_string()))
            .or_insert(0) += n;
    }

    pub fn count(&self, doc_id: &str, marker_id: &str) -> u64 {
        self.cells
            .get(&(doc_id.to_string(), marker_id.to_string()))
            .copied()
            .unwrap_or(0)
    }

    pub fn cells(&self) -> impl Iterator<Item = (&str, &str, u64)> {
        self.cells
            .iter()
            .map(|((doc, marker), count)| (doc.as_str(), marker.as_str(), *count))
    }

    pub fn documents(&self) -> impl Iterator<Item = (&str, &DocMeta, u64)> {
        self.doc_meta
            .iter()
            .map(|(id, meta)| (id.as_str(), meta, self.doc_sentences[id]))
    }

    pub fn num_documents(&self) -> u64 {
        self.doc_meta.len() as u64
    }

    pub fn total_sentences(&self) -> u64 {
        self.doc_sentences.values().sum()
    }

    /// Grand total over all cells.
    pub fn total_count(&self) -> u64 {
        self.cells.values().sum()
    }

    pub fn sentences_of(&self, doc_id: &str) -> Option<u64> {
        self.doc_sentences.get(doc_id).copied()
    }

    pub fn meta_of(&self, doc_id: &str) -> Option<&DocMeta> {
        self.doc_meta.get(doc_id)
    }

    /// Marker ids present in any cell, deduplicated, sorted.
    pub fn marker_ids(&self) -> Vec<&str> {
        let mut ids: Vec<&str> = self.cells.keys().map(|(_, m)| m.as_str()).collect();
        ids.sort_unstable();
        ids.dedup();
        ids
    }
}

/// Counts one document's candidates into a fresh report. All candidates must
/// carry `doc_id`; an empty list is fine.
pub fn build_report(
    doc_id: &str,
    meta: DocMeta,
    sentence_count: u64,
    candidates: &[SimileCandidate],
) -> Result<FrequencyReport> {
    if let Some(stray) = candidates.iter().find(|c| c.doc_id != doc_id) {
        return Err(Error::MixedDocuments {
            first: doc_id.to_string(),
            second: stray.doc_id.clone(),
        });
    }
    let mut report = FrequencyReport::new();
    report.register_document(doc_id, meta, sentence_count)?;
    for candidate in candidates {
        report.add_count(doc_id, &candidate.marker_id, 1);
    }
    Ok(report)
}

/// Cell-wise sum of two reports. Documents may appear in both only with
/// identical sentence counts and metadata.
pub fn merge(a: &FrequencyReport, b: &FrequencyReport) -> Result<FrequencyReport> {
    let mut out = a.clone();
    for (doc_id, meta, sentences) in b.documents() {
        match (out.doc_sentences.get(doc_id), out.doc_meta.get(doc_id)) {
            (None, _) => {
                out.doc_sentences.insert(doc_id.to_string(), sentences);
                out.doc_meta.insert(doc_id.to_string(), meta.clone());
            }
            (Some(&existing_sentences), Some(existing_meta)) => {
                if existing_sentences != sentences || existing_meta != meta {
                    return Err(Error::MergeConflict {
                        doc_id: doc_id.to_string(),
                    });
                }
            }
            (Some(_), None) => unreachable!("registry maps share keys"),
        }
    }
    for (cell, count) in &b.cells {
        *out.cells.entry(cell.clone()).or_insert(0) += count;
    }
    Ok(out)
}

/// Exact rate `count / sentences` for one cell. Unknown documents and
/// zero-sentence documents are errors (the rate is undefined).
pub fn per_sentence_rate(report: &FrequencyReport, doc_id: &str, marker_id: &str) -> Result<Rate> {
    let sentences = report.sentences_of(doc_id).ok_or_else(|| Error::UnknownDocument {
        doc_id: doc_id.to_string(),
    })?;
    if sentences == 0 {
        return Err(Error::ZeroSentences {
            doc_id: doc_id.to_string(),
        });
    }
    Ok(Rate::new(report.count(doc_id, marker_id), sentences))
}

/// Grouping axes for [`aggregate`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupBy {
    Marker,
    Author,
    Language,
    Category,
}

impl std::str::FromStr for GroupBy {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.to_lowercase().as_str() {
            "marker" => Ok(GroupBy::Marker),
            "author" => Ok(GroupBy::Author),
            "language" => Ok(GroupBy::Language),
            "category" => Ok(GroupBy::Category),
            other => Err(format!(
                "unknown group key {other:?} (expected marker|author|language|category)"
            )),
        }
    }
}

/// One output row of [`aggregate`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AggregateRow {
    pub group_key: String,
    pub total_count: u64,
    pub docs_with_nonzero: u64,
    pub total_docs: u64,
    pub total_sentences: u64,
    /// `total_count / total_sentences`; absent when the denominator is zero.
    #[serde(serialize_with = "serialize_rate")]
    pub rate: Option<Rate>,
}

fn serialize_rate<S: Serializer>(
    rate: &Option<Rate>,
    serializer: S,
) -> std::result::Result<S::Ok, S::Error> {
    match rate {
        Some(r) => serializer.serialize_str(&r.render()),
        None => serializer.serialize_none(),
    }
}

fn make_row(
    group_key: String,
    total_count: u64,
    docs_with_nonzero: u64,
    total_docs: u64,
    total_sentences: u64,
) -> AggregateRow {
    let rate = (total_sentences > 0).then(|| Rate::new(total_count, total_sentences));
    AggregateRow {
        group_key,
        total_count,
        docs_with_nonzero,
        total_docs,
        total_sentences,
        rate,
    }
}

/// Category lookup for the built-in marker inventory (both languages).
pub fn builtin_marker_categories() -> BTreeMap<String, MarkerCategory> {
    builtin_lexicon(Language::En)
        .into_iter()
        .chain(builtin_lexicon(Language::Fr))
        .map(|p| (p.id, p.category))
        .collect()
}

fn category_key(marker_id: &str, categories: &BTreeMap<String, MarkerCategory>) -> String {
    match categories.get(marker_id) {
        Some(MarkerCategory::Verb) => "verb".to_string(),
        Some(MarkerCategory::Adj) => "adj".to_string(),
        None => "unknown".to_string(),
    }
}

/// Aggregates with an explicit marker → grammatical-category mapping
/// (markers missing from the map land in the "unknown" category).
///
/// Row semantics by axis:
/// * `Marker` / `Category` rows cover the whole corpus: `total_docs` and
///   `total_sentences` are corpus-wide, `docs_with_nonzero` counts documents
///   where the row's markers occur.
/// * `Author` / `Language` rows cover their document group, including groups
///   with zero occurrences.
///
/// Rows come out sorted by `group_key`.
pub fn aggregate_with_categories(
    report: &FrequencyReport,
    group_by: GroupBy,
    categories: &BTreeMap<String, MarkerCategory>,
) -> Vec<AggregateRow> {
    match group_by {
        GroupBy::Marker | GroupBy::Category => {
            let key_of = |marker_id: &str| match group_by {
                GroupBy::Marker => marker_id.to_string(),
                _ => category_key(marker_id, categories),
            };
            // group key → (total, per-doc totals for the nonzero count)
            let mut totals: BTreeMap<String, u64> = BTreeMap::new();
            let mut doc_totals: BTreeMap<(String, String), u64> = BTreeMap::new();
            for (doc_id, marker_id, count) in report.cells() {
                let key = key_of(marker_id);
                *totals.entry(key.clone()).or_insert(0) += count;
                *doc_totals.entry((key, doc_id.to_string())).or_insert(0) += count;
            }
            let total_docs = report.num_documents();
            let total_sentences = report.total_sentences();
            totals
                .into_iter()
                .map(|(key, total_count)| {
                    let docs_with_nonzero = doc_totals
                        .iter()
                        .filter(|((k, _), &count)| *k == key && count > 0)
                        .count() as u64;
                    make_row(key, total_count, docs_with_nonzero, total_docs, total_sentences)
                })
                .collect()
        }
        GroupBy::Author | GroupBy::Language => {
            let key_of = |meta: &DocMeta| match group_by {
                GroupBy::Author => meta.author.clone(),
                _ => meta.language.code().to_string(),
            };
            // Per-document totals over all markers.
            let mut doc_counts: BTreeMap<&str, u64> = BTreeMap::new();
            for (doc_id, _, count) in report.cells() {
                *doc_counts.entry(doc_id).or_insert(0) += count;
            }
            struct Group {
                total_count: u64,
                docs_with_nonzero: u64,
                total_docs: u64,
                total_sentences: u64,
            }
            let mut groups: BTreeMap<String, Group> = BTreeMap::new();
            for (doc_id, meta, sentences) in report.documents() {
                let group = groups.entry(key_of(meta)).or_insert(Group {
                    total_count: 0,
                    docs_with_nonzero: 0,
                    total_docs: 0,
                    total_sentences: 0,
                });
                let doc_total = doc_counts.get(doc_id).copied().unwrap_or(0);
                group.total_count += doc_total;
                group.docs_with_nonzero += u64::from(doc_total > 0);
                group.total_docs += 1;
                group.total_sentences += sentences;
            }
            groups
                .into_iter()
                .map(|(key, g)| {
                    make_row(key, g.total_count, g.docs_with_nonzero, g.total_docs, g.total_sentences)
                })
                .collect()
        }
    }
}

/// Aggregation using the built-in marker categories; see
/// [`aggregate_with_categories`].
pub fn aggregate(report: &FrequencyReport, group_by: GroupBy) -> Vec<AggregateRow> {
    aggregate_with_categories(report, group_by, &builtin_marker_categories())
}

/// Orders marker rows by descending total count, ties broken by ascending
/// marker id.
pub fn rank_markers(rows: &[AggregateRow]) -> Vec<AggregateRow> {
    let mut ranked = rows.to_vec();
    ranked.sort_by(|a, b| {
        b.total_count
            .cmp(&a.total_count)
            .then_with(|| a.group_key.cmp(&b.group_key))
    });
    ranked
}
