//! Seeded random generators: tagged sentences whose vocabulary is biased
//! toward marker lemmas (so matches actually occur), and frequency reports
//! for checking the aggregation laws.
//!
//! All generators take a caller-owned RNG; tests derive one per case with
//! `ChaCha8Rng::seed_from_u64(seed)` so every failure replays exactly.

use rand::{Rng, RngExt};

use similex::{
    builtin_lexicon, DocMeta, FrequencyReport, Language, PosTag, Sentence, Token,
};

/// `(surface, lemma, tag)` as a pre-tagged token template.
type PoolEntry = (&'static str, &'static str, PosTag);

const EN_DETS: &[PoolEntry] = &[
    ("the", "the", PosTag::Det),
    ("a", "a", PosTag::Det),
    ("an", "an", PosTag::Det),
    ("this", "this", PosTag::Det),
    ("her", "her", PosTag::Det),
];

const EN_NOUNS: &[PoolEntry] = &[
    ("house", "house", PosTag::NounCommon),
    ("tomb", "tomb", PosTag::NounCommon),
    ("storm", "storm", PosTag::NounCommon),
    ("king", "king", PosTag::NounCommon),
    ("dove", "dove", PosTag::NounCommon),
    ("voice", "voice", PosTag::NounCommon),
    ("thunder", "thunder", PosTag::NounCommon),
    ("stars", "star", PosTag::NounCommon),
    ("stone", "stone", PosTag::NounCommon),
    ("garden", "garden", PosTag::NounCommon),
    ("face", "face", PosTag::NounCommon),
    ("kind", "kind", PosTag::NounCommon),
    ("sort", "sort", PosTag::NounCommon),
    ("type", "type", PosTag::NounCommon),
];

const EN_PROPER: &[PoolEntry] = &[
    ("Smith", "smith", PosTag::NounProper),
    ("London", "london", PosTag::NounProper),
];

const EN_ADJS: &[PoolEntry] = &[
    ("old", "old", PosTag::Adj),
    ("silent", "silent", PosTag::Adj),
    ("white", "white", PosTag::Adj),
    ("similar", "similar", PosTag::Adj),
    ("akin", "akin", PosTag::Adj),
    ("identical", "identical", PosTag::Adj),
    ("analogous", "analogous", PosTag::Adj),
    ("comparable", "comparable", PosTag::Adj),
    ("reminiscent", "reminiscent", PosTag::Adj),
    ("ghostlike", "ghostlike", PosTag::Adj),
    ("snow-white", "snow-white", PosTag::Adj),
];

const EN_ADVS: &[PoolEntry] = &[
    ("very", "very", PosTag::Adv),
    ("far", "far", PosTag::Adv),
    ("quite", "quite", PosTag::Adv),
    ("more", "more", PosTag::Adv),
    ("less", "less", PosTag::Adv),
];

const EN_VERBS: &[PoolEntry] = &[
    ("was", "be", PosTag::Verb),
    ("is", "be", PosTag::Verb),
    ("seemed", "seem", PosTag::Verb),
    ("looked", "look", PosTag::Verb),
    ("resembled", "resemble", PosTag::Verb),
    ("reminded", "remind", PosTag::Verb),
    ("compared", "compare", PosTag::Verb),
    ("ran", "run", PosTag::Verb),
    ("flew", "fly", PosTag::Verb),
];

const EN_FUNC: &[PoolEntry] = &[
    ("to", "to", PosTag::Adp),
    ("of", "of", PosTag::Adp),
    ("in", "in", PosTag::Adp),
    ("with", "with", PosTag::Adp),
    ("than", "than", PosTag::Adp),
    ("and", "and", PosTag::Conj),
    ("that", "that", PosTag::Conj),
    ("two", "two", PosTag::Num),
    ("three", "three", PosTag::Num),
    (",", ",", PosTag::Punct),
    ("oh", "oh", PosTag::Other),
];

const EN_PRONS: &[PoolEntry] = &[
    ("he", "he", PosTag::Pron),
    ("she", "she", PosTag::Pron),
    ("it", "it", PosTag::Pron),
];

const FR_DETS: &[PoolEntry] = &[
    ("le", "le", PosTag::Det),
    ("la", "le", PosTag::Det),
    ("les", "le", PosTag::Det),
    ("un", "un", PosTag::Det),
    ("une", "un", PosTag::Det),
    ("des", "du", PosTag::Det),
    ("sa", "son", PosTag::Det),
];

const FR_NOUNS: &[PoolEntry] = &[
    ("maison", "maison", PosTag::NounCommon),
    ("tombeau", "tombeau", PosTag::NounCommon),
    ("pluie", "pluie", PosTag::NounCommon),
    ("grelots", "grelot", PosTag::NounCommon),
    ("voix", "voix", PosTag::NounCommon),
    ("roi", "roi", PosTag::NounCommon),
    ("étoile", "étoile", PosTag::NounCommon),
    ("effet", "effet", PosTag::NounCommon),
    ("impression", "impression", PosTag::NounCommon),
    ("air", "air", PosTag::NounCommon),
    ("espèce", "espèce", PosTag::NounCommon),
    ("sorte", "sorte", PosTag::NounCommon),
    ("genre", "genre", PosTag::NounCommon),
    ("cœur", "cœur", PosTag::NounCommon),
];

const FR_PROPER: &[PoolEntry] = &[
    ("Hercule", "hercule", PosTag::NounProper),
    ("Paris", "paris", PosTag::NounProper),
];

const FR_ADJS: &[PoolEntry] = &[
    ("tel", "tel", PosTag::Adj),
    ("telle", "tel", PosTag::Adj),
    ("pareil", "pareil", PosTag::Adj),
    ("pareille", "pareil", PosTag::Adj),
    ("semblable", "semblable", PosTag::Adj),
    ("identique", "identique", PosTag::Adj),
    ("similaire", "similaire", PosTag::Adj),
    ("analogue", "analogue", PosTag::Adj),
    ("égal", "égal", PosTag::Adj),
    ("comparable", "comparable", PosTag::Adj),
    ("blanche", "blanc", PosTag::Adj),
    ("fine", "fin", PosTag::Adj),
    ("grande", "grand", PosTag::Adj),
];

const FR_ADVS: &[PoolEntry] = &[
    ("très", "très", PosTag::Adv),
    ("plus", "plus", PosTag::Adv),
    ("moins", "moins", PosTag::Adv),
    ("ne", "ne", PosTag::Adv),
    ("pas", "pas", PosTag::Adv),
];

const FR_VERBS: &[PoolEntry] = &[
    ("était", "être", PosTag::Verb),
    ("est", "être", PosTag::Verb),
    ("semblait", "sembler", PosTag::Verb),
    ("paraissait", "paraître", PosTag::Verb),
    ("ressemblait", "ressembler", PosTag::Verb),
    ("rappelait", "rappeler", PosTag::Verb),
    ("faisait", "faire", PosTag::Verb),
    ("donnait", "donner", PosTag::Verb),
    ("avait", "avoir", PosTag::Verb),
    ("devenait", "devenir", PosTag::Verb),
    ("courait", "courir", PosTag::Verb),
];

const FR_FUNC: &[PoolEntry] = &[
    ("à", "à", PosTag::Adp),
    ("au", "au", PosTag::Adp),
    ("aux", "aux", PosTag::Adp),
    ("de", "de", PosTag::Adp),
    ("du", "du", PosTag::Adp),
    ("que", "que", PosTag::Conj),
    ("comme", "comme", PosTag::Conj),
    ("et", "et", PosTag::Conj),
    ("deux", "deux", PosTag::Num),
    ("trois", "trois", PosTag::Num),
    (",", ",", PosTag::Punct),
    ("hélas", "hélas", PosTag::Other),
];

const FR_PRONS: &[PoolEntry] = &[
    ("il", "il", PosTag::Pron),
    ("elle", "elle", PosTag::Pron),
    ("on", "on", PosTag::Pron),
];

/// Weighted pools; weights sum to 100 per language.
const EN_POOLS: &[(u32, &[PoolEntry])] = &[
    (12, EN_DETS),
    (26, EN_NOUNS),
    (4, EN_PROPER),
    (14, EN_ADJS),
    (8, EN_ADVS),
    (16, EN_VERBS),
    (14, EN_FUNC),
    (6, EN_PRONS),
];

const FR_POOLS: &[(u32, &[PoolEntry])] = &[
    (12, FR_DETS),
    (26, FR_NOUNS),
    (4, FR_PROPER),
    (14, FR_ADJS),
    (8, FR_ADVS),
    (16, FR_VERBS),
    (14, FR_FUNC),
    (6, FR_PRONS),
];

fn draw<R: Rng>(rng: &mut R, pools: &[(u32, &[PoolEntry])]) -> PoolEntry {
    let total: u32 = pools.iter().map(|(weight, _)| weight).sum();
    let mut roll = rng.random_range(0..total);
    for (weight, pool) in pools {
        if roll < *weight {
            return pool[rng.random_range(0..pool.len())];
        }
        roll -= weight;
    }
    unreachable!("weights are exhaustive")
}

/// A random pre-tagged sentence of 2..=20 tokens (the last one is always
/// sentence-final punctuation). Token spans and raw tags stay empty, like a
/// sentence read from tagged TSV input.
pub fn random_tagged_sentence<R: Rng>(rng: &mut R, language: Language, index: usize) -> Sentence {
    let pools = match language {
        Language::En => EN_POOLS,
        Language::Fr => FR_POOLS,
    };
    let content_len = rng.random_range(1..=19);
    let mut tokens: Vec<Token> = (0..content_len)
        .map(|i| {
            let (surface, lemma, pos) = draw(rng, pools);
            Token {
                index: i,
                surface: surface.to_string(),
                lemma: lemma.to_string(),
                pos,
                span: None,
                raw_tag: None,
            }
        })
        .collect();
    tokens.push(Token {
        index: content_len,
        surface: ".".to_string(),
        lemma: ".".to_string(),
        pos: PosTag::SentEnd,
        span: None,
        raw_tag: None,
    });
    let sentence = Sentence {
        index,
        tokens,
        chunks: Vec::new(),
    };
    sentence.debug_validate();
    sentence
}

const AUTHORS: &[&str] = &["woolf", "flaubert", "dickens", "zola", "anonymous"];

/// A random document registry: ids, metadata, and sentence counts (which may
/// legitimately be zero — empty documents exist).
pub fn random_doc_pool<R: Rng>(rng: &mut R) -> Vec<(String, DocMeta, u64)> {
    let n = rng.random_range(1..=6);
    (0..n)
        .map(|i| {
            let author = AUTHORS[rng.random_range(0..AUTHORS.len())].to_string();
            let language = if rng.random_range(0..2) == 0 {
                Language::En
            } else {
                Language::Fr
            };
            let sentences = if rng.random_range(0..10) == 0 {
                0
            } else {
                rng.random_range(1..=5_000)
            };
            (format!("doc-{i}"), DocMeta { author, language }, sentences)
        })
        .collect()
}

/// All built-in marker ids plus one deliberately unknown id, so grouping by
/// category also exercises its fallback bucket.
fn marker_id_pool() -> Vec<String> {
    let mut ids: Vec<String> = builtin_lexicon(Language::En)
        .into_iter()
        .chain(builtin_lexicon(Language::Fr))
        .map(|p| p.id)
        .collect();
    ids.push("custom.mystery_marker".to_string());
    ids
}

/// A report over exactly the documents in `pool`, with random marker counts.
pub fn random_report_over<R: Rng>(rng: &mut R, pool: &[(String, DocMeta, u64)]) -> FrequencyReport {
    let mut report = FrequencyReport::new();
    for (id, meta, sentences) in pool {
        report
            .register_document(id, meta.clone(), *sentences)
            .expect("pool ids are unique");
    }
    let ids = marker_id_pool();
    let entries = rng.random_range(0..40);
    for _ in 0..entries {
        let (doc_id, _, _) = &pool[rng.random_range(0..pool.len())];
        let marker = &ids[rng.random_range(0..ids.len())];
        report.add_count(doc_id, marker, rng.random_range(1..=20));
    }
    report
}

/// A standalone random report (fresh document pool each call).
pub fn random_report<R: Rng>(rng: &mut R) -> FrequencyReport {
    let pool = random_doc_pool(rng);
    random_report_over(rng, &pool)
}

/// Two reports sharing one document registry — always mergeable, with cell
/// counts that genuinely overlap.
pub fn report_pair_with_shared_docs<R: Rng>(rng: &mut R) -> (FrequencyReport, FrequencyReport) {
    let pool = random_doc_pool(rng);
    let a = random_report_over(rng, &pool);
    let b = random_report_over(rng, &pool);
    (a, b)
}
