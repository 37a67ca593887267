//! The `extract` subcommand: documents in, candidate file + sidecar out.

use std::path::Path;

use rayon::prelude::*;

use similex::{
    builtin_lexicon, load_document, load_lexicon, manifest_dir, read_manifest, read_tagged_path,
    sidecar_path, write_candidates_csv, write_candidates_jsonl, write_sidecar, ColourLexicon,
    CompiledLexicon, DataSource, DocExtraction, ExtractOptions, Extractor, FallbackTagger,
    ManifestEntry, Sidecar, SidecarDocument, SimileCandidate, Tagset,
};

use crate::{write_atomically, CandidateFormat, ExtractArgs, Failure};

pub fn run(args: ExtractArgs) -> Result<(), Failure> {
    let extractor = build_extractor(&args)?;

    let (candidates, sidecar) = if let Some(manifest) = &args.manifest {
        extract_manifest(&extractor, manifest, args.parallelism.get())?
    } else {
        // The arg group guarantees exactly one input flag is present.
        let tagged = args
            .tagged_input
            .as_deref()
            .ok_or_else(|| Failure::Internal("no input path survived argument parsing".into()))?;
        extract_tagged_file(&extractor, tagged)?
    };

    write_atomically(&args.out, |writer| match args.format {
        CandidateFormat::Jsonl => write_candidates_jsonl(writer, &candidates),
        CandidateFormat::Csv => write_candidates_csv(writer, &candidates),
    })?;
    write_atomically(&sidecar_path(&args.out), |writer| {
        write_sidecar(writer, &sidecar)
    })?;
    Ok(())
}

/// Assembles the extractor from built-in resources and any overrides:
/// `--data-dir` (or `SIMILE_DATA_DIR`) for tagger and colour data,
/// `--lexicon` / `--colour-lexicon` for individual files.
fn build_extractor(args: &ExtractArgs) -> Result<Extractor, Failure> {
    let source = match &args.data_dir {
        Some(dir) => DataSource::with_dir(dir),
        None => DataSource::from_env(),
    };
    let colours = match &args.colour_lexicon {
        Some(path) => ColourLexicon::from_path(path)?,
        None => ColourLexicon::from_source(&source)?,
    };
    let patterns = match &args.lexicon {
        Some(path) => load_lexicon(path)?,
        None => builtin_lexicon(args.lang),
    };
    let lexicon = CompiledLexicon::new(args.lang, patterns, colours)?;
    let tagger = FallbackTagger::new(args.lang, &source)?;
    let options = ExtractOptions {
        include_excluded: args.include_excluded,
    };
    Ok(Extractor::new(lexicon, tagger, options))
}

/// Loads and extracts every manifest document, fanning out across
/// `parallelism` workers. Results keep manifest order, so output bytes do
/// not depend on the worker count.
fn extract_manifest(
    extractor: &Extractor,
    manifest: &Path,
    parallelism: usize,
) -> Result<(Vec<SimileCandidate>, Sidecar), Failure> {
    let entries = read_manifest(manifest)?;
    let base_dir = manifest_dir(manifest);

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(parallelism)
        .build()
        .map_err(|e| Failure::Internal(format!("building worker pool: {e}")))?;

    let per_doc: Vec<(ManifestEntry, DocExtraction)> = pool.install(|| {
        entries
            .into_par_iter()
            .map(|entry| -> Result<(ManifestEntry, DocExtraction), similex::Error> {
                let doc = load_document(&entry, &base_dir)?;
                let extraction = extractor.extract_document(&doc)?;
                Ok((entry, extraction))
            })
            .collect::<Result<Vec<_>, _>>()
    })?;

    let mut candidates = Vec::new();
    let mut sidecar = Sidecar::default();
    for (entry, extraction) in per_doc {
        sidecar.documents.push(SidecarDocument {
            id: entry.id,
            language: entry.language,
            author: entry.author,
            title: entry.title,
            sentences: extraction.sentence_count as u64,
        });
        candidates.extend(extraction.candidates);
    }
    Ok((candidates, sidecar))
}

/// Extracts one pre-tagged TSV document. It carries no manifest metadata,
/// so the document id falls back to the file stem and author/title stay
/// empty in the sidecar.
fn extract_tagged_file(
    extractor: &Extractor,
    path: &Path,
) -> Result<(Vec<SimileCandidate>, Sidecar), Failure> {
    let sentences = read_tagged_path(path, Tagset::from(extractor.language()))?;
    let doc_id = path
        .file_stem()
        .and_then(|stem| stem.to_str())
        .filter(|stem| !stem.is_empty())
        .unwrap_or("doc")
        .to_string();
    let extraction = extractor.extract_tagged(&doc_id, sentences);
    let sidecar = Sidecar {
        documents: vec![SidecarDocument {
            id: doc_id,
            language: extractor.language(),
            author: String::new(),
            title: String::new(),
            sentences: extraction.sentence_count as u64,
        }],
    };
    Ok((extraction.candidates, sidecar))
}
