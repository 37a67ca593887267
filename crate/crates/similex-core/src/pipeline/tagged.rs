//! Reading and writing tagger output in TSV form.
//!
//! One token per line as `surface<TAB>tag<TAB>lemma`; a sentence ends at a
//! token whose raw tag is `SENT` or at a blank line. The lemma placeholder
//! `<unknown>` (emitted by common taggers for out-of-vocabulary words) is
//! replaced by the lowercased surface.

use std::fs;
use std::io::{self, BufRead, Write};
use std::path::Path;

use unicode_normalization::UnicodeNormalization;

use crate::error::{Error, Result};
use crate::pipeline::{PosTag, Sentence, Tagset, Token};

/// Parses a tagged TSV stream into sentences. Line numbers in errors are
/// 1-based. An empty stream yields an empty list.
pub fn read_tagged<R: BufRead>(reader: R, tagset: Tagset) -> Result<Vec<Sentence>> {
    let mut sentences: Vec<Sentence> = Vec::new();
    let mut tokens: Vec<Token> = Vec::new();

    let flush = |tokens: &mut Vec<Token>, sentences: &mut Vec<Sentence>| {
        if tokens.is_empty() {
            return;
        }
        let sentence = Sentence {
            index: sentences.len(),
            tokens: std::mem::take(tokens),
            chunks: Vec::new(),
        };
        sentence.debug_validate();
        sentences.push(sentence);
    };

    for (i, line) in reader.lines().enumerate() {
        let line_no = i + 1;
        let line = line.map_err(|e| Error::TaggedLine {
            line: line_no,
            message: e.to_string(),
        })?;
        let line = line.strip_suffix('\r').unwrap_or(&line);
        if line.trim().is_empty() {
            flush(&mut tokens, &mut sentences);
            continue;
        }
        let fields: Vec<&str> = line.split('\t').collect();
        if fields.len() != 3 {
            return Err(Error::TaggedLine {
                line: line_no,
                message: format!("expected 3 tab-separated fields, found {}", fields.len()),
            });
        }
        let (surface, raw_tag, lemma) = (fields[0], fields[1], fields[2]);
        if surface.is_empty() || raw_tag.is_empty() || lemma.is_empty() {
            return Err(Error::TaggedLine {
                line: line_no,
                message: "empty field (surface, tag, and lemma are all required)".into(),
            });
        }
        let pos = super::normalize_tag(raw_tag, tagset);
        let lemma = if lemma == "<unknown>" {
            surface.to_lowercase()
        } else {
            lemma.to_lowercase()
        };
        tokens.push(Token {
            index: tokens.len(),
            surface: surface.to_string(),
            lemma: lemma.nfc().collect(),
            pos,
            span: None,
            raw_tag: Some(raw_tag.to_string()),
        });
        if pos == PosTag::SentEnd {
            flush(&mut tokens, &mut sentences);
        }
    }
    flush(&mut tokens, &mut sentences);
    Ok(sentences)
}

/// [`read_tagged`] over a file, with the path attached to I/O errors.
pub fn read_tagged_path(path: &Path, tagset: Tagset) -> Result<Vec<Sentence>> {
    let file = fs::File::open(path).map_err(|e| Error::io(path.display().to_string(), e))?;
    read_tagged(io::BufReader::new(file), tagset)
}

/// Serializes sentences back to tagged TSV. Tokens carrying their original
/// `raw_tag` round-trip exactly; tokens from the fallback tagger are written
/// with a canonical raw tag for their POS. A blank separator line is emitted
/// only after sentences that do not end in a `SENT`-tagged token.
pub fn write_tagged<W: Write>(mut writer: W, sentences: &[Sentence], tagset: Tagset) -> io::Result<()> {
    for sentence in sentences {
        let mut ends_with_sent = false;
        for token in &sentence.tokens {
            let raw = token
                .raw_tag
                .clone()
                .unwrap_or_else(|| canonical_raw_tag(token, tagset));
            writeln!(writer, "{}\t{}\t{}", token.surface, raw, token.lemma)?;
            ends_with_sent = token.pos == PosTag::SentEnd;
        }
        if !ends_with_sent {
            writeln!(writer)?;
        }
    }
    Ok(())
}

/// A representative raw tag for each normalized POS, used when serializing
/// tokens that never had one. Chosen so `normalize_tag` maps it back to the
/// same [`PosTag`].
fn canonical_raw_tag(token: &Token, tagset: Tagset) -> String {
    let tag = match (tagset, token.pos) {
        (Tagset::EnPenn, PosTag::NounCommon) => "NN",
        (Tagset::EnPenn, PosTag::NounProper) => "NP",
        (Tagset::EnPenn, PosTag::Verb) => "VV",
        (Tagset::EnPenn, PosTag::Adj) => "JJ",
        (Tagset::EnPenn, PosTag::Adv) => "RB",
        (Tagset::EnPenn, PosTag::Det) => "DT",
        (Tagset::EnPenn, PosTag::Adp) => "IN",
        (Tagset::EnPenn, PosTag::Pron) => "PP",
        (Tagset::EnPenn, PosTag::Num) => "CD",
        (Tagset::EnPenn, PosTag::Conj) => "CC",
        (Tagset::Fr, PosTag::NounCommon) => "NOM",
        (Tagset::Fr, PosTag::NounProper) => "NAM",
        (Tagset::Fr, PosTag::Verb) => "VER:pres",
        (Tagset::Fr, PosTag::Adj) => "ADJ",
        (Tagset::Fr, PosTag::Adv) => "ADV",
        (Tagset::Fr, PosTag::Det) => "DET:ART",
        (Tagset::Fr, PosTag::Adp) => "PRP",
        (Tagset::Fr, PosTag::Pron) => "PRO",
        (Tagset::Fr, PosTag::Num) => "NUM",
        (Tagset::Fr, PosTag::Conj) => "KON",
        (Tagset::Fr, PosTag::Punct) => "PUN",
        (_, PosTag::SentEnd) => "SENT",
        // Penn punctuation tags are the punctuation itself.
        (Tagset::EnPenn, PosTag::Punct) => return token.surface.clone(),
        (_, PosTag::Other) => "XX",
    };
    tag.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Cursor;

    fn parse(input: &str, tagset: Tagset) -> Result<Vec<Sentence>> {
        read_tagged(Cursor::new(input.as_bytes()), tagset)
    }

    #[test]
    fn sent_tag_splits_sentences() {
        let input = "dog\tNN\tdog\nruns\tVVZ\trun\n.\tSENT\t.\ncats\tNNS\tcat\n.\tSENT\t.\n";
        let sentences = parse(input, Tagset::EnPenn).unwrap();
        assert_eq!(sentences.len(), 2);
        let first = &sentences[0];
        assert_eq!(first.tokens.len(), 3);
        assert_eq!(first.tokens[0].pos, PosTag::NounCommon);
        assert_eq!(first.tokens[1].lemma, "run");
        assert_eq!(first.tokens[2].pos, PosTag::SentEnd);
        assert_eq!(sentences[1].index, 1);
        assert_eq!(sentences[1].tokens[0].lemma, "cat");
    }

    #[test]
    fn blank_lines_split_sentences_too() {
        let input = "Il\tPRO:PER\til\ncourt\tVER:pres\tcourir\n\nElle\tPRO:PER\telle\ndort\tVER:pres\tdormir\n";
        let sentences = parse(input, Tagset::Fr).unwrap();
        assert_eq!(sentences.len(), 2);
        assert_eq!(sentences[0].tokens.len(), 2);
        assert_eq!(sentences[1].tokens[1].lemma, "dormir");
    }

    #[test]
    fn empty_input_yields_no_sentences() {
        assert!(parse("", Tagset::EnPenn).unwrap().is_empty());
        assert!(parse("\n\n\n", Tagset::EnPenn).unwrap().is_empty());
    }

    #[test]
    fn malformed_line_reports_its_number() {
        let input = "dog\tNN\tdog\nbroken line\n";
        let err = parse(input, Tagset::EnPenn).unwrap_err();
        assert!(matches!(err, Error::TaggedLine { line: 2, .. }), "{err}");
    }

    #[test]
    fn unknown_lemma_falls_back_to_lowercased_surface() {
        let input = "Gwendolyn\tNP\t<unknown>\n.\tSENT\t.\n";
        let sentences = parse(input, Tagset::EnPenn).unwrap();
        assert_eq!(sentences[0].tokens[0].lemma, "gwendolyn");
    }

    #[test]
    fn lemmas_are_lowercased_and_composed() {
        // Decomposed "é" (e + combining acute) in the lemma must compose.
        let input = "Aimé\tNAM\tAime\u{0301}\n.\tSENT\t.\n";
        let sentences = parse(input, Tagset::Fr).unwrap();
        assert_eq!(sentences[0].tokens[0].lemma, "aimé");
        assert_eq!(sentences[0].tokens[0].surface, "Aimé");
    }

    #[test]
    fn crlf_input_is_tolerated() {
        let input = "dog\tNN\tdog\r\n.\tSENT\t.\r\n";
        let sentences = parse(input, Tagset::EnPenn).unwrap();
        assert_eq!(sentences[0].tokens[0].surface, "dog");
    }

    #[test]
    fn round_trip_is_identity_on_well_formed_input() {
        let input = "The\tDT\tthe\ndog\tNN\tdog\nran\tVVD\trun\n.\tSENT\t.\n\
                     It\tPP\tit\nfell\tVVD\tfall\n.\tSENT\t.\n";
        let sentences = parse(input, Tagset::EnPenn).unwrap();
        let mut out = Vec::new();
        write_tagged(&mut out, &sentences, Tagset::EnPenn).unwrap();
        assert_eq!(String::from_utf8(out).unwrap(), input);
    }

    #[test]
    fn canonical_tags_survive_a_round_trip() {
        // A sentence assembled in memory (no raw tags) serializes to tags
        // that normalize back to the same POS values.
        let sentence = Sentence {
            index: 0,
            tokens: vec![
                Token {
                    index: 0,
                    surface: "maison".into(),
                    lemma: "maison".into(),
                    pos: PosTag::NounCommon,
                    span: None,
                    raw_tag: None,
                },
                Token {
                    index: 1,
                    surface: ".".into(),
                    lemma: ".".into(),
                    pos: PosTag::SentEnd,
                    span: None,
                    raw_tag: None,
                },
            ],
            chunks: Vec::new(),
        };
        let mut out = Vec::new();
        write_tagged(&mut out, &[sentence.clone()], Tagset::Fr).unwrap();
        let back = read_tagged(Cursor::new(&out), Tagset::Fr).unwrap();
        assert_eq!(back.len(), 1);
        let pos: Vec<PosTag> = back[0].tokens.iter().map(|t| t.pos).collect();
        assert_eq!(pos, vec![PosTag::NounCommon, PosTag::SentEnd]);
    }
}
