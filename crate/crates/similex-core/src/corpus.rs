//! Corpus ingestion: manifests, document loading, and text cleanup.
//!
//! A corpus is described by a CSV manifest with the header
//! `id,path,language,author,title`. Paths are resolved relative to the
//! manifest's own directory, so a corpus folder can be moved wholesale.
//! Document files may be UTF-8 (with or without BOM) or Latin-1; text is
//! normalized to NFC with `\n` line endings, and Project-Gutenberg-style
//! boilerplate fences are stripped.

use std::fs;
use std::path::{Path, PathBuf};
use std::sync::LazyLock;

use regex::Regex;
use unicode_normalization::UnicodeNormalization;

use crate::error::{Error, Result};
use crate::types::Language;

/// One row of a corpus manifest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ManifestEntry {
    /// Unique document id, used to key all downstream outputs.
    pub id: String,
    /// Document path as written in the manifest (possibly relative).
    pub path: PathBuf,
    pub language: Language,
    pub author: String,
    pub title: String,
}

impl ManifestEntry {
    /// The document path resolved against the manifest's directory.
    /// Absolute paths are returned unchanged.
    pub fn resolved_path(&self, manifest_dir: &Path) -> PathBuf {
        if self.path.is_absolute() {
            self.path.clone()
        } else {
            manifest_dir.join(&self.path)
        }
    }
}

/// A fully loaded document with normalized, boilerplate-free text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Document {
    pub id: String,
    pub language: Language,
    pub author: String,
    pub title: String,
    /// NFC-normalized text with `\n` newlines and no boilerplate fences.
    pub text: String,
    /// The file the text was read from (resolved), for error reporting.
    pub source_path: String,
}

impl Document {
    /// Builds an in-memory document (no backing file); `text` is normalized
    /// the same way file-loaded text is.
    pub fn in_memory(
        id: impl Into<String>,
        language: Language,
        author: impl Into<String>,
        title: impl Into<String>,
        text: &str,
    ) -> Self {
        Document {
            id: id.into(),
            language,
            author: author.into(),
            title: title.into(),
            text: strip_boilerplate(text),
            source_path: String::new(),
        }
    }
}

/// Reads and validates a manifest file.
///
/// Requires the exact header `id,path,language,author,title`, non-empty ids
/// and paths, a parseable language code in every row, and distinct ids.
/// Errors name the offending row (1-based, counting the header as row 1).
pub fn read_manifest(path: &Path) -> Result<Vec<ManifestEntry>> {
    let file = fs::File::open(path).map_err(|e| Error::io(path.display().to_string(), e))?;
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .flexible(true)
        .from_reader(file);

    let headers = reader
        .headers()
        .map_err(|e| Error::ManifestRow {
            row: 1,
            message: e.to_string(),
        })?
        .clone();
    let expected = ["id", "path", "language", "author", "title"];
    if headers.iter().collect::<Vec<_>>() != expected {
        return Err(Error::ManifestRow {
            row: 1,
            message: format!(
                "header must be `{}`, found `{}`",
                expected.join(","),
                headers.iter().collect::<Vec<_>>().join(",")
            ),
        });
    }

    let mut entries: Vec<ManifestEntry> = Vec::new();
    for (i, record) in reader.records().enumerate() {
        let row = i + 2; // 1-based, after the header
        let record = record.map_err(|e| Error::ManifestRow {
            row,
            message: e.to_string(),
        })?;
        if record.len() != expected.len() {
            return Err(Error::ManifestRow {
                row,
                message: format!("expected {} fields, found {}", expected.len(), record.len()),
            });
        }
        let field = |idx: usize| record.get(idx).unwrap_or("").trim().to_string();
        let id = field(0);
        if id.is_empty() {
            return Err(Error::ManifestRow {
                row,
                message: "empty document id".into(),
            });
        }
        let path_str = field(1);
        if path_str.is_empty() {
            return Err(Error::ManifestRow {
                row,
                message: format!("document `{id}` has an empty path"),
            });
        }
        let language: Language = field(2).parse().map_err(|e| Error::ManifestRow {
            row,
            message: format!("document `{id}`: {e}"),
        })?;
        if entries.iter().any(|existing| existing.id == id) {
            return Err(Error::DuplicateDocId { id });
        }
        entries.push(ManifestEntry {
            id,
            path: PathBuf::from(path_str),
            language,
            author: field(3),
            title: field(4),
        });
    }
    Ok(entries)
}

/// Loads one document file and normalizes its text.
///
/// `manifest_dir` anchors relative paths; pass the directory containing the
/// manifest the entry came from.
pub fn load_document(entry: &ManifestEntry, manifest_dir: &Path) -> Result<Document> {
    let path = entry.resolved_path(manifest_dir);
    let bytes = fs::read(&path).map_err(|e| Error::io(path.display().to_string(), e))?;
    let decoded = decode_bytes(&bytes);
    Ok(Document {
        id: entry.id.clone(),
        language: entry.language,
        author: entry.author.clone(),
        title: entry.title.clone(),
        text: strip_boilerplate(&decoded),
        source_path: path.display().to_string(),
    })
}

/// Reads a manifest and loads every document it lists.
pub fn load_corpus(manifest_path: &Path) -> Result<Vec<Document>> {
    let manifest_dir = manifest_dir(manifest_path);
    read_manifest(manifest_path)?
        .iter()
        .map(|entry| load_document(entry, &manifest_dir))
        .collect()
}

/// The directory a manifest's relative document paths are resolved against.
pub fn manifest_dir(manifest_path: &Path) -> PathBuf {
    match manifest_path.parent() {
        Some(parent) if parent.as_os_str().is_empty() => PathBuf::from("."),
        Some(parent) => parent.to_path_buf(),
        None => PathBuf::from("."),
    }
}

/// Decodes raw file bytes: UTF-8 (an optional BOM is dropped) with a
/// total Latin-1 fallback, so every input yields *some* string.
pub fn decode_bytes(bytes: &[u8]) -> String {
    let bytes = bytes.strip_prefix(b"\xef\xbb\xbf").unwrap_or(bytes);
    match std::str::from_utf8(bytes) {
        Ok(text) => text.to_string(),
        // Latin-1 maps every byte to the code point of the same value, so
        // this branch cannot fail.
        Err(_) => bytes.iter().map(|&b| char::from(b)).collect(),
    }
}

static START_FENCE: LazyLock<Regex> =
    LazyLock::new(|| Regex::new(r"(?i)^\s*\*\*\*\s*START OF.*\*\*\*\s*$").unwrap());
static END_FENCE: LazyLock<Regex> =
    LazyLock::new(|| Regex::new(r"(?i)^\s*\*\*\*\s*END OF.*\*\*\*\s*$").unwrap());

/// Normalizes text (NFC, `\n` newlines) and removes e-text boilerplate.
///
/// A line matching `*** START OF ... ***` (case-insensitive) and everything
/// before it are dropped; a line matching `*** END OF ... ***` and everything
/// after it are dropped. When several fence lines occur the *last* start
/// fence and the *first* end fence after it are used, which makes the
/// function idempotent: the retained body contains no fence lines.
pub fn strip_boilerplate(text: &str) -> String {
    let normalized: String = text.nfc().collect::<String>().replace("\r\n", "\n").replace('\r', "\n");

    let mut body_start = 0usize;
    let mut line_start = 0usize;
    // Locate the byte just after the last start-fence line.
    for line in normalized.split_inclusive('\n') {
        let line_end = line_start + line.len();
        if START_FENCE.is_match(line.trim_end_matches('\n')) {
            body_start = line_end;
        }
        line_start = line_end;
    }

    let mut body_end = normalized.len();
    let mut line_start = body_start;
    for line in normalized[body_start..].split_inclusive('\n') {
        let line_end = line_start + line.len();
        if END_FENCE.is_match(line.trim_end_matches('\n')) {
            body_end = line_start;
            break;
        }
        line_start = line_end;
    }

    normalized[body_start..body_end].to_string()
}
