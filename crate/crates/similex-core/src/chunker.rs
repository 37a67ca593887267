//! Shallow noun-phrase chunking with head identification.
//!
//! One fixed grammar per language, applied longest-match left-to-right:
//!
//! * English: `DET? (ADJ|NUM|ADV|NC|NP)* (NC|NP)`, head = the last noun.
//! * French:  `DET? (ADJ|NUM)* (NC|NP) ADJ*`, head = the noun (postnominal
//!   adjectives are absorbed but never head the phrase).
//!
//! (`NC`/`NP` abbreviate common/proper noun.) Pronouns never form chunks.

use serde::{Deserialize, Serialize};

use crate::pipeline::{PosTag, Sentence, Token};
use crate::types::Language;

/// A noun-phrase span over sentence token indices, with its head noun.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Chunk {
    /// First token index (inclusive).
    pub start: usize,
    /// Past-the-end token index.
    pub end: usize,
    /// Index of the head noun, with `start <= head_index < end`.
    pub head_index: usize,
}

impl Chunk {
    pub fn len(&self) -> usize {
        self.end - self.start
    }

    pub fn is_empty(&self) -> bool {
        self.start == self.end
    }

    pub fn contains(&self, token_index: usize) -> bool {
        self.start <= token_index && token_index < self.end
    }
}

/// Returns the head token of `chunk`. Panics if the chunk does not lie inside
/// the sentence; that is an internal invariant violation, not an input error.
pub fn np_head<'a>(chunk: &Chunk, sentence: &'a Sentence) -> &'a Token {
    assert!(
        chunk.start <= chunk.head_index
            && chunk.head_index < chunk.end
            && chunk.end <= sentence.tokens.len(),
        "chunk {chunk:?} out of bounds for sentence of {} tokens",
        sentence.tokens.len()
    );
    &sentence.tokens[chunk.head_index]
}

/// True for tags allowed in the pre-head modifier run.
fn en_modifier(pos: PosTag) -> bool {
    matches!(
        pos,
        PosTag::Adj | PosTag::Num | PosTag::Adv | PosTag::NounCommon | PosTag::NounProper
    )
}

fn fr_modifier(pos: PosTag) -> bool {
    matches!(pos, PosTag::Adj | PosTag::Num)
}

/// Longest grammar match starting exactly at `start`, as `(end, head_index)`.
fn match_at(tokens: &[Token], start: usize, language: Language) -> Option<(usize, usize)> {
    let mut i = start;
    if i < tokens.len() && tokens[i].pos == PosTag::Det {
        i += 1;
    }
    match language {
        Language::En => {
            // Consume the longest modifier run that still leaves a final noun.
            let mut run_end = i;
            while run_end < tokens.len() && en_modifier(tokens[run_end].pos) {
                run_end += 1;
            }
            // The head is the last noun in [i, run_end).
            let head = (i..run_end).rev().find(|&j| tokens[j].pos.is_noun())?;
            Some((head + 1, head))
        }
        Language::Fr => {
            while i < tokens.len() && fr_modifier(tokens[i].pos) {
                i += 1;
            }
            if i < tokens.len() && tokens[i].pos.is_noun() {
                let head = i;
                let mut end = head + 1;
                while end < tokens.len() && tokens[end].pos == PosTag::Adj {
                    end += 1;
                }
                Some((end, head))
            } else {
                None
            }
        }
    }
}

/// Chunks a tagged sentence into non-overlapping noun phrases, left to right,
/// preferring the longest match at each position. Sentences without nouns
/// yield an empty list.
pub fn chunk_nps(sentence: &Sentence, language: Language) -> Vec<Chunk> {
    let tokens = &sentence.tokens;
    let mut chunks = Vec::new();
    let mut i = 0;
    while i < tokens.len() {
        match match_at(tokens, i, language) {
            Some((end, head_index)) => {
                debug_assert!(i < end && i <= head_index && head_index < end);
                debug_assert!(tokens[head_index].pos.is_noun());
                chunks.push(Chunk {
                    start: i,
                    end,
                    head_index,
                });
                i = end;
            }
            None => i += 1,
        }
    }
    chunks
}
