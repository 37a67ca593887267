//! The `report` subcommand: candidate files in, aggregate table out.

use std::path::Path;

use similex::{
    aggregate, load_candidates, merge, rank_markers, read_sidecar, sidecar_path, write_report_csv,
    write_report_json, DocMeta, FrequencyReport, GroupBy,
};

use crate::{write_atomically, Failure, ReportArgs, ReportFormat};

pub fn run(args: ReportArgs) -> Result<(), Failure> {
    let mut combined: Option<FrequencyReport> = None;
    for path in &args.candidates {
        let report = read_report(path)?;
        combined = Some(match combined {
            None => report,
            Some(so_far) => merge(&so_far, &report).map_err(|e| {
                Failure::Input(format!("combining {}: {e}", path.display()))
            })?,
        });
    }
    let combined =
        combined.ok_or_else(|| Failure::Internal("argument parser allowed zero inputs".into()))?;

    let mut rows = aggregate(&combined, args.group_by);
    if args.group_by == GroupBy::Marker {
        rows = rank_markers(&rows);
    }

    write_atomically(&args.out, |writer| match args.format {
        ReportFormat::Csv => write_report_csv(writer, &rows),
        ReportFormat::Json => write_report_json(writer, &rows),
    })
}

/// Reads one candidate file plus its sidecar into a frequency report. The
/// sidecar supplies the document registry (metadata and sentence counts);
/// every candidate must belong to a registered document.
fn read_report(path: &Path) -> Result<FrequencyReport, Failure> {
    let candidates = load_candidates(path)?;
    let sidecar_file = sidecar_path(path);
    let sidecar = read_sidecar(&sidecar_file).map_err(|e| {
        Failure::Input(format!(
            "{e} (the sidecar written by `extract` must sit next to {})",
            path.display()
        ))
    })?;

    let mut report = FrequencyReport::new();
    for doc in &sidecar.documents {
        report
            .register_document(
                &doc.id,
                DocMeta {
                    author: doc.author.clone(),
                    language: doc.language,
                },
                doc.sentences,
            )
            .map_err(|e| Failure::Input(format!("{}: {e}", sidecar_file.display())))?;
    }
    for candidate in &candidates {
        if report.sentences_of(&candidate.doc_id).is_none() {
            return Err(Failure::Input(format!(
                "{}: candidate references document `{}` absent from {}",
                path.display(),
                candidate.doc_id,
                sidecar_file.display()
            )));
        }
        report.add_count(&candidate.doc_id, &candidate.marker_id, 1);
    }
    Ok(report)
}
