//! Deterministic synthetic novels: plain narrative prose with simile
//! constructions sprinkled in, built from vocabulary the bundled taggers
//! know. Useful for throughput measurements and determinism checks on
//! realistically sized inputs without shipping megabytes of fixture text.

use rand::{Rng, RngExt};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use similex::Language;

const EN_NOUNS: &[&str] = &[
    "house", "tower", "garden", "king", "queen", "star", "moon", "storm", "thunder", "voice",
    "face", "heart", "sea", "stone", "night", "river", "shadow", "castle", "forest", "wind",
    "flame", "mountain", "tomb", "dove", "bell",
];

const EN_ADJS: &[&str] = &[
    "old", "white", "dark", "pale", "silent", "grey", "golden", "soft", "cold", "strange",
    "quiet", "ancient",
];

const EN_NAMES: &[&str] = &["Martin", "Eleanor", "Blanche", "Victor"];

const FR_NOUNS_M: &[&str] = &[
    "tombeau", "jardin", "roi", "fleuve", "rocher", "soir", "chemin", "feu", "oiseau", "palais",
    "orage", "clocher",
];

const FR_NOUNS_F: &[&str] = &[
    "maison", "tour", "reine", "mer", "étoile", "pluie", "forêt", "ombre", "voix", "flamme",
    "montagne", "nuit",
];

const FR_ADJS_M: &[&str] = &["blanc", "noir", "sombre", "ancien", "silencieux", "profond"];
const FR_ADJS_F: &[&str] = &["blanche", "noire", "sombre", "ancienne", "silencieuse", "profonde"];

fn pick<'a, R: Rng>(rng: &mut R, pool: &[&'a str]) -> &'a str {
    pool[rng.random_range(0..pool.len())]
}

fn en_sentence<R: Rng>(rng: &mut R) -> String {
    let n1 = pick(rng, EN_NOUNS);
    let n2 = pick(rng, EN_NOUNS);
    let adj = pick(rng, EN_ADJS);
    let name = pick(rng, EN_NAMES);
    match rng.random_range(0..20) {
        0 => format!("The {adj} {n1} seemed a {n2}."),
        1 => format!("Her {n1} was akin to a {n2}."),
        2 => format!("The {n1} resembled a {adj} {n2}."),
        3 => format!("His {n1} was a kind of {n2}."),
        4 => format!("{name} looked more than a {n1}."),
        5 => format!("A snow-white {n1} stood near the {n2}."),
        6 => format!("Her {n1} was ghostlike."),
        7 => format!("The {n1} was similar to a {n2}."),
        8 => format!("It was less than a {n1}."),
        9 => format!("She reminded him of a {n1}."),
        10 => format!("The {adj} {n1} stood in the {n2}."),
        11 => format!("Night fell over the {n1}."),
        12 => format!("The {n1} burned in the {n2}."),
        13 => format!("He walked through the {adj} {n1}."),
        14 => format!("The {n1} and the {n2} were silent."),
        15 => format!("A {adj} {n1} rose beyond the {n2}."),
        16 => format!("The {n1} passed under the {n2}."),
        17 => format!("She watched the {adj} {n1}."),
        18 => format!("The {n1} shone above the {n2}."),
        _ => format!("The {n1} turned towards the {n2}."),
    }
}

fn fr_sentence<R: Rng>(rng: &mut R) -> String {
    let nm = pick(rng, FR_NOUNS_M);
    let nm2 = pick(rng, FR_NOUNS_M);
    let nf = pick(rng, FR_NOUNS_F);
    let nf2 = pick(rng, FR_NOUNS_F);
    let am = pick(rng, FR_ADJS_M);
    let af = pick(rng, FR_ADJS_F);
    match rng.random_range(0..20) {
        0 => format!("La {nf} ressemblait à un {nm}."),
        1 => format!("Sa {nf} était pareille à un {nm}."),
        2 => format!("Le {nm} semblait une {nf}."),
        3 => format!("Elle avait l'air d'une {nf}."),
        4 => format!("Le {nm} faisait l'effet d'un {nm2}."),
        5 => format!("Il donnait l'impression d'un {nm}."),
        6 => format!("La {nf} était une espèce de {nf2}."),
        7 => format!("Le {nm} était tel un {nm2}."),
        8 => format!("La {nf} courait plus que le {nm}."),
        9 => format!("Elle ressemblait au {nm}."),
        10 => format!("La {nf} {af} brillait dans la {nf2}."),
        11 => format!("Le {nm} passait sous le {nm2}."),
        12 => format!("Il regardait la {nf} {af}."),
        13 => format!("La {nf} restait près du {nm}."),
        14 => format!("Le {nm} {am} montait vers la {nf}."),
        15 => format!("Elle entendait la {nf} dans la {nf2}."),
        16 => format!("Le {nm} et la {nf} étaient sombres."),
        17 => format!("Une {nf} {af} venait du {nm}."),
        18 => format!("Il marchait le long du {nm}."),
        _ => format!("La {nf} portait une {nf2}."),
    }
}

/// Builds a novel of exactly `sentences` sentences (one terminal period
/// each, no abbreviations), grouped into paragraphs of eight separated by
/// blank lines. The same `(seed, sentences, language)` triple always yields
/// byte-identical text.
pub fn synthetic_novel(seed: u64, sentences: usize, language: Language) -> String {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = String::new();
    for i in 0..sentences {
        let sentence = match language {
            Language::En => en_sentence(&mut rng),
            Language::Fr => fr_sentence(&mut rng),
        };
        out.push_str(&sentence);
        if i + 1 == sentences {
            out.push('\n');
        } else if (i + 1) % 8 == 0 {
            out.push_str("\n\n");
        } else {
            out.push(' ');
        }
    }
    out
}
