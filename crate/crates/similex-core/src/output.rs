//! File formats: candidate lists as JSON Lines or CSV (both directions), the
//! per-run sidecar with document metadata and sentence counts, and aggregate
//! report tables as CSV or JSON.
//!
//! Writers take any `io::Write` and emit bytes deterministically; readers
//! take an `origin` string (usually the path) used verbatim in error
//! messages.

use std::fs;
use std::io::{self, BufRead, Write};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::extract::SimileCandidate;
use crate::stats::AggregateRow;
use crate::types::{Language, Span};

pub const CANDIDATE_CSV_HEADER: [&str; 10] = [
    "doc_id",
    "sentence_index",
    "marker_id",
    "marker_start",
    "marker_end",
    "np_start",
    "np_end",
    "head_lemma",
    "head_surface",
    "predicative",
];

pub const REPORT_CSV_HEADER: [&str; 6] = [
    "group_key",
    "total_count",
    "docs_with_nonzero",
    "total_docs",
    "total_sentences",
    "rate",
];

/// One candidate per line, compact JSON.
pub fn write_candidates_jsonl<W: Write>(
    mut writer: W,
    candidates: &[SimileCandidate],
) -> io::Result<()> {
    for candidate in candidates {
        serde_json::to_writer(&mut writer, candidate).map_err(io::Error::other)?;
        writer.write_all(b"\n")?;
    }
    Ok(())
}

pub fn read_candidates_jsonl<R: BufRead>(reader: R, origin: &str) -> Result<Vec<SimileCandidate>> {
    let mut candidates = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line.map_err(|e| Error::io(origin, e))?;
        if line.trim().is_empty() {
            continue;
        }
        let candidate: SimileCandidate = serde_json::from_str(&line).map_err(|e| {
            Error::format(origin, format!("line {}: {e}", i + 1))
        })?;
        candidates.push(candidate);
    }
    Ok(candidates)
}

/// CSV with the fixed ten-column header; absent noun-phrase fields become
/// empty cells.
pub fn write_candidates_csv<W: Write>(writer: W, candidates: &[SimileCandidate]) -> io::Result<()> {
    let mut csv_writer = csv::Writer::from_writer(writer);
    csv_writer.write_record(CANDIDATE_CSV_HEADER)?;
    for c in candidates {
        let opt_num = |v: Option<usize>| v.map(|n| n.to_string()).unwrap_or_default();
        csv_writer.write_record([
            c.doc_id.as_str(),
            &c.sentence_index.to_string(),
            c.marker_id.as_str(),
            &c.marker_span.start.to_string(),
            &c.marker_span.end.to_string(),
            &opt_num(c.np_span.map(|s| s.start)),
            &opt_num(c.np_span.map(|s| s.end)),
            c.head_lemma.as_deref().unwrap_or(""),
            c.head_surface.as_deref().unwrap_or(""),
            if c.predicative { "true" } else { "false" },
        ])?;
    }
    csv_writer.flush()
}

fn parse_field<T: std::str::FromStr>(value: &str, row: usize, name: &str, origin: &str) -> Result<T> {
    value.parse().map_err(|_| {
        Error::format(
            origin,
            format!("row {row}: bad {name} value {value:?}"),
        )
    })
}

fn parse_opt_span(
    start: &str,
    end: &str,
    row: usize,
    name: &str,
    origin: &str,
) -> Result<Option<Span>> {
    match (start.is_empty(), end.is_empty()) {
        (true, true) => Ok(None),
        (false, false) => {
            let start: usize = parse_field(start, row, name, origin)?;
            let end: usize = parse_field(end, row, name, origin)?;
            if start > end {
                return Err(Error::format(
                    origin,
                    format!("row {row}: {name} span {start}..{end} is reversed"),
                ));
            }
            Ok(Some(Span::new(start, end)))
        }
        _ => Err(Error::format(
            origin,
            format!("row {row}: {name} start/end must both be present or both empty"),
        )),
    }
}

pub fn read_candidates_csv<R: io::Read>(reader: R, origin: &str) -> Result<Vec<SimileCandidate>> {
    let mut csv_reader = csv::Reader::from_reader(reader);
    let headers = csv_reader
        .headers()
        .map_err(|e| Error::format(origin, e.to_string()))?;
    let header_ok = headers.len() == CANDIDATE_CSV_HEADER.len()
        && headers.iter().zip(CANDIDATE_CSV_HEADER).all(|(a, b)| a == b);
    if !header_ok {
        return Err(Error::format(
            origin,
            format!("unexpected header {headers:?}"),
        ));
    }
    let mut candidates = Vec::new();
    for (i, record) in csv_reader.records().enumerate() {
        let row = i + 2; // header is row 1
        let record = record.map_err(|e| Error::format(origin, e.to_string()))?;
        if record.len() != CANDIDATE_CSV_HEADER.len() {
            return Err(Error::format(
                origin,
                format!("row {row}: expected {} fields", CANDIDATE_CSV_HEADER.len()),
            ));
        }
        let marker_span = parse_opt_span(&record[3], &record[4], row, "marker", origin)?
            .ok_or_else(|| {
                Error::format(origin, format!("row {row}: marker span missing"))
            })?;
        let np_span = parse_opt_span(&record[5], &record[6], row, "np", origin)?;
        let opt_str = |v: &str| (!v.is_empty()).then(|| v.to_string());
        candidates.push(SimileCandidate {
            doc_id: record[0].to_string(),
            sentence_index: parse_field(&record[1], row, "sentence_index", origin)?,
            marker_id: record[2].to_string(),
            marker_span,
            np_span,
            head_lemma: opt_str(&record[7]),
            head_surface: opt_str(&record[8]),
            predicative: match &record[9] {
                "true" => true,
                "false" => false,
                other => {
                    return Err(Error::format(
                        origin,
                        format!("row {row}: bad predicative value {other:?}"),
                    ))
                }
            },
        });
    }
    Ok(candidates)
}

/// Reads a candidate file, choosing the parser by extension (`.csv` is CSV,
/// anything else JSON Lines).
pub fn load_candidates(path: &Path) -> Result<Vec<SimileCandidate>> {
    let bytes = fs::read(path).map_err(|e| Error::io(path.display().to_string(), e))?;
    let origin = path.display().to_string();
    if path.extension().is_some_and(|ext| ext.eq_ignore_ascii_case("csv")) {
        read_candidates_csv(bytes.as_slice(), &origin)
    } else {
        read_candidates_jsonl(bytes.as_slice(), &origin)
    }
}

/// Per-document entry of the extraction sidecar.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SidecarDocument {
    pub id: String,
    pub language: Language,
    pub author: String,
    pub title: String,
    pub sentences: u64,
}

/// Companion file written next to every candidate file: the document
/// registry (metadata plus sentence counts) that rate computation needs.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sidecar {
    pub documents: Vec<SidecarDocument>,
}

/// `<out>.sidecar.json` for a given candidate output path.
pub fn sidecar_path(out: &Path) -> PathBuf {
    let mut name = out.file_name().unwrap_or_default().to_os_string();
    name.push(".sidecar.json");
    out.with_file_name(name)
}

pub fn write_sidecar<W: Write>(mut writer: W, sidecar: &Sidecar) -> io::Result<()> {
    serde_json::to_writer_pretty(&mut writer, sidecar).map_err(io::Error::other)?;
    writer.write_all(b"\n")
}

pub fn read_sidecar(path: &Path) -> Result<Sidecar> {
    let text = fs::read_to_string(path).map_err(|e| Error::io(path.display().to_string(), e))?;
    serde_json::from_str(&text).map_err(|e| Error::format(path.display().to_string(), e.to_string()))
}

/// Aggregate table as CSV; an undefined rate (zero sentences) is an empty
/// cell.
pub fn write_report_csv<W: Write>(writer: W, rows: &[AggregateRow]) -> io::Result<()> {
    let mut csv_writer = csv::Writer::from_writer(writer);
    csv_writer.write_record(REPORT_CSV_HEADER)?;
    for row in rows {
        csv_writer.write_record([
            row.group_key.as_str(),
            &row.total_count.to_string(),
            &row.docs_with_nonzero.to_string(),
            &row.total_docs.to_string(),
            &row.total_sentences.to_string(),
            &row.rate.map(|r| r.render()).unwrap_or_default(),
        ])?;
    }
    csv_writer.flush()
}

/// Aggregate table as pretty-printed JSON (same field names as the CSV).
pub fn write_report_json<W: Write>(mut writer: W, rows: &[AggregateRow]) -> io::Result<()> {
    serde_json::to_writer_pretty(&mut writer, rows).map_err(io::Error::other)?;
    writer.write_all(b"\n")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stats::{aggregate, build_report, DocMeta, GroupBy};

    fn sample_candidates() -> Vec<SimileCandidate> {
        vec![
            SimileCandidate {
                doc_id: "novel".into(),
                sentence_index: 3,
                marker_id: "en.verb.seem".into(),
                marker_span: Span::new(2, 3),
                np_span: Some(Span::new(3, 5)),
                head_lemma: Some("tomb".into()),
                head_surface: Some("tomb".into()),
                predicative: false,
            },
            SimileCandidate {
                doc_id: "novel".into(),
                sentence_index: 9,
                marker_id: "en.adj.like_suffix".into(),
                marker_span: Span::new(4, 5),
                np_span: None,
                head_lemma: None,
                head_surface: None,
                predicative: true,
            },
        ]
    }

    #[test]
    fn jsonl_round_trip() {
        let candidates = sample_candidates();
        let mut buf = Vec::new();
        write_candidates_jsonl(&mut buf, &candidates).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert_eq!(text.lines().count(), 2);
        assert!(text.lines().nth(1).unwrap().contains("\"predicative\":true"));
        let back = read_candidates_jsonl(buf.as_slice(), "test").unwrap();
        assert_eq!(back, candidates);
    }

    #[test]
    fn jsonl_spans_are_two_element_arrays() {
        let mut buf = Vec::new();
        write_candidates_jsonl(&mut buf, &sample_candidates()).unwrap();
        let first: serde_json::Value =
            serde_json::from_str(String::from_utf8(buf).unwrap().lines().next().unwrap()).unwrap();
        assert_eq!(first["marker_span"], serde_json::json!([2, 3]));
        assert_eq!(first["np_span"], serde_json::json!([3, 5]));
        // Predicative candidates omit the absent fields entirely.
    }

    #[test]
    fn csv_round_trip_with_empty_cells() {
        let candidates = sample_candidates();
        let mut buf = Vec::new();
        write_candidates_csv(&mut buf, &candidates).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        let mut lines = text.lines();
        assert_eq!(
            lines.next().unwrap(),
            "doc_id,sentence_index,marker_id,marker_start,marker_end,np_start,np_end,head_lemma,head_surface,predicative"
        );
        assert_eq!(lines.next().unwrap(), "novel,3,en.verb.seem,2,3,3,5,tomb,tomb,false");
        assert_eq!(lines.next().unwrap(), "novel,9,en.adj.like_suffix,4,5,,,,,true");
        let back = read_candidates_csv(buf.as_slice(), "test").unwrap();
        assert_eq!(back, candidates);
    }

    #[test]
    fn csv_reader_rejects_bad_input() {
        let bad_header = "a,b,c\n1,2,3\n";
        assert!(read_candidates_csv(bad_header.as_bytes(), "t").is_err());
        let bad_row =
            "doc_id,sentence_index,marker_id,marker_start,marker_end,np_start,np_end,head_lemma,head_surface,predicative\nd,x,m,0,1,,,,,false\n";
        let err = read_candidates_csv(bad_row.as_bytes(), "t").unwrap_err();
        assert!(err.to_string().contains("sentence_index"), "{err}");
        let half_span =
            "doc_id,sentence_index,marker_id,marker_start,marker_end,np_start,np_end,head_lemma,head_surface,predicative\nd,0,m,0,1,2,,,,false\n";
        assert!(read_candidates_csv(half_span.as_bytes(), "t").is_err());
    }

    #[test]
    fn sidecar_round_trip_and_path() {
        assert_eq!(
            sidecar_path(Path::new("out/c.csv")),
            Path::new("out/c.csv.sidecar.json")
        );
        let sidecar = Sidecar {
            documents: vec![SidecarDocument {
                id: "novel".into(),
                language: Language::En,
                author: "Someone".into(),
                title: "A Novel".into(),
                sentences: 120,
            }],
        };
        let mut buf = Vec::new();
        write_sidecar(&mut buf, &sidecar).unwrap();
        let tmp = tempfile::NamedTempFile::new().unwrap();
        fs::write(tmp.path(), &buf).unwrap();
        assert_eq!(read_sidecar(tmp.path()).unwrap(), sidecar);
    }

    #[test]
    fn report_csv_and_json_layout() {
        let report = build_report(
            "novel",
            DocMeta {
                author: "Someone".into(),
                language: Language::En,
            },
            6,
            &sample_candidates()
                .into_iter()
                .map(|mut c| {
                    c.sentence_index = 0;
                    c
                })
                .collect::<Vec<_>>(),
        )
        .unwrap();
        let rows = aggregate(&report, GroupBy::Marker);
        let mut buf = Vec::new();
        write_report_csv(&mut buf, &rows).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(
            lines.next().unwrap(),
            "group_key,total_count,docs_with_nonzero,total_docs,total_sentences,rate"
        );
        assert_eq!(lines.next().unwrap(), "en.adj.like_suffix,1,1,1,6,0.166667");
        assert_eq!(lines.next().unwrap(), "en.verb.seem,1,1,1,6,0.166667");

        let mut json_buf = Vec::new();
        write_report_json(&mut json_buf, &rows).unwrap();
        let value: serde_json::Value = serde_json::from_slice(&json_buf).unwrap();
        assert_eq!(value[0]["group_key"], "en.adj.like_suffix");
        assert_eq!(value[0]["rate"], "0.166667");
    }

    #[test]
    fn empty_report_is_header_only() {
        let mut buf = Vec::new();
        write_report_csv(&mut buf, &[]).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(
            text,
            "group_key,total_count,docs_with_nonzero,total_docs,total_sentences,rate\n"
        );
    }
}
