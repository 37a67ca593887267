//! End-to-end pipeline benchmarks over synthetic novels, plus the two hot
//! inner stages (chunking and marker matching) in isolation.

use criterion::{criterion_group, criterion_main, Criterion, Throughput};

use similex::{
    aggregate, build_report, chunk_nps, find_marker_matches, DocMeta, ExtractOptions, Extractor,
    GroupBy, Language,
};
use similex_testkit::synthetic_novel;

const SENTENCES: usize = 2_000;

fn bench_full_pipeline(c: &mut Criterion) {
    let mut group = c.benchmark_group("extract_text");
    group.throughput(Throughput::Elements(SENTENCES as u64));
    for language in [Language::En, Language::Fr] {
        let text = synthetic_novel(1, SENTENCES, language);
        let extractor = Extractor::builtin(language, ExtractOptions::default()).unwrap();
        group.bench_function(language.code(), |b| {
            b.iter(|| extractor.extract_text("bench", &text))
        });
    }
    group.finish();
}

fn bench_stages(c: &mut Criterion) {
    let text = synthetic_novel(2, SENTENCES, Language::En);
    let extractor = Extractor::builtin(Language::En, ExtractOptions::default()).unwrap();
    let sentences = extractor.analyze(&text);

    let mut group = c.benchmark_group("stages");
    group.throughput(Throughput::Elements(SENTENCES as u64));
    group.bench_function("chunk", |b| {
        b.iter(|| {
            sentences
                .iter()
                .map(|s| chunk_nps(s, Language::En).len())
                .sum::<usize>()
        })
    });
    group.bench_function("match", |b| {
        b.iter(|| {
            sentences
                .iter()
                .map(|s| find_marker_matches(s, extractor.lexicon()).len())
                .sum::<usize>()
        })
    });
    group.finish();
}

fn bench_report(c: &mut Criterion) {
    let text = synthetic_novel(3, SENTENCES, Language::En);
    let extractor = Extractor::builtin(Language::En, ExtractOptions::default()).unwrap();
    let extraction = extractor.extract_text("bench", &text);
    let meta = DocMeta {
        author: "anonymous".to_string(),
        language: Language::En,
    };
    let report = build_report(
        "bench",
        meta,
        extraction.sentence_count as u64,
        &extraction.candidates,
    )
    .unwrap();

    c.bench_function("aggregate_by_marker", |b| {
        b.iter(|| aggregate(&report, GroupBy::Marker))
    });
}

criterion_group!(benches, bench_full_pipeline, bench_stages, bench_report);
criterion_main!(benches);
