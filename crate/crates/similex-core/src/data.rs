//! Resolution of bundled data files (colour list, tagger lexicons).
//!
//! Every data file ships compiled into the binary, so the toolkit works with
//! zero setup. Users can override individual files by pointing the
//! `SIMILE_DATA_DIR` environment variable (or a CLI flag) at a directory
//! containing replacements laid out as:
//!
//! ```text
//! <dir>/colours.txt
//! <dir>/tagger/en.tsv
//! <dir>/tagger/fr.tsv
//! ```
//!
//! Files missing from the override directory fall back to the compiled-in
//! copy, so a directory holding only `colours.txt` overrides just the colour
//! list.

use std::borrow::Cow;
use std::env;
use std::fs;
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::types::Language;

/// Environment variable naming a directory of replacement data files.
pub const DATA_DIR_ENV: &str = "SIMILE_DATA_DIR";

const BUILTIN_COLOURS: &str = include_str!("../data/colours.txt");
const BUILTIN_TAGGER_EN: &str = include_str!("../data/tagger/en.tsv");
const BUILTIN_TAGGER_FR: &str = include_str!("../data/tagger/fr.tsv");

/// Where to look for data files before falling back to the compiled-in copies.
#[derive(Debug, Clone, Default)]
pub struct DataSource {
    override_dir: Option<PathBuf>,
}

impl DataSource {
    /// Honours `SIMILE_DATA_DIR` when set and non-empty, otherwise uses only
    /// the compiled-in files.
    pub fn from_env() -> Self {
        match env::var(DATA_DIR_ENV) {
            Ok(dir) if !dir.trim().is_empty() => DataSource {
                override_dir: Some(PathBuf::from(dir)),
            },
            _ => DataSource::builtin(),
        }
    }

    /// Uses only the compiled-in files, ignoring the environment. This is the
    /// right choice for tests that must not be affected by the caller's shell.
    pub fn builtin() -> Self {
        DataSource { override_dir: None }
    }

    /// Reads replacements from `dir`, typically supplied via a CLI flag. The
    /// flag wins over the environment variable.
    pub fn with_dir(dir: impl Into<PathBuf>) -> Self {
        DataSource {
            override_dir: Some(dir.into()),
        }
    }

    /// Contents of the colour list: one lowercase colour term per line.
    pub fn colour_list(&self) -> Result<Cow<'static, str>> {
        self.resolve(Path::new("colours.txt"), BUILTIN_COLOURS)
    }

    /// Contents of the full-form tagger lexicon for `language`
    /// (TSV: `surface<TAB>tag<TAB>lemma`).
    pub fn tagger_lexicon(&self, language: Language) -> Result<Cow<'static, str>> {
        let (relative, builtin) = match language {
            Language::En => ("tagger/en.tsv", BUILTIN_TAGGER_EN),
            Language::Fr => ("tagger/fr.tsv", BUILTIN_TAGGER_FR),
        };
        self.resolve(Path::new(relative), builtin)
    }

    fn resolve(&self, relative: &Path, builtin: &'static str) -> Result<Cow<'static, str>> {
        let Some(dir) = &self.override_dir else {
            return Ok(Cow::Borrowed(builtin));
        };
        if !dir.is_dir() {
            return Err(Error::format(
                dir.display().to_string(),
                "data directory does not exist",
            ));
        }
        let path = dir.join(relative);
        if !path.is_file() {
            return Ok(Cow::Borrowed(builtin));
        }
        let text = fs::read_to_string(&path)
            .map_err(|source| Error::io(path.display().to_string(), source))?;
        Ok(Cow::Owned(text))
    }
}
