//! `similex` — command-line front end for the simile-candidate extraction
//! library.
//!
//! Three subcommands:
//!
//! * `extract` — run the pipeline over a corpus manifest or one pre-tagged
//!   document, writing a candidate file (JSONL or CSV) plus a sidecar with
//!   per-document metadata and sentence counts.
//! * `report`  — fold one or more candidate files into a frequency table,
//!   grouped by marker, author, language, or category.
//! * `lexicon` — print the built-in marker patterns or validate a custom
//!   lexicon file.
//!
//! Exit codes: 0 success, 1 usage error, 2 input error, 3 internal error.
//! All file outputs are written atomically (temp file + rename), and fixed
//! inputs produce byte-identical outputs at any `--parallelism`.

mod extract_cmd;
mod report_cmd;

use std::io::{self, Write};
use std::num::NonZeroUsize;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

use similex::{builtin_lexicon, load_lexicon, GroupBy, Language};

#[derive(Parser)]
#[command(
    name = "similex",
    version,
    about = "Find simile candidates (marker + noun phrase) in English and French prose"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Extract simile candidates from a corpus manifest or a tagged stream
    Extract(ExtractArgs),
    /// Aggregate extracted candidates into a frequency table
    Report(ReportArgs),
    /// Show or validate marker lexicons
    Lexicon {
        #[command(subcommand)]
        command: LexiconCommand,
    },
}

#[derive(Args)]
#[command(group(ArgGroup::new("input").required(true).args(["manifest", "tagged_input"])))]
struct ExtractArgs {
    /// Corpus manifest CSV with header id,path,language,author,title
    #[arg(long, value_name = "FILE")]
    manifest: Option<PathBuf>,

    /// One pre-tagged TSV document (token<TAB>tag<TAB>lemma per line)
    #[arg(long, value_name = "FILE")]
    tagged_input: Option<PathBuf>,

    /// Language to extract: en or fr
    #[arg(long, value_name = "LANG")]
    lang: Language,

    /// Marker lexicon JSON replacing the built-in inventory
    #[arg(long, value_name = "FILE")]
    lexicon: Option<PathBuf>,

    /// Colour term list replacing the built-in one (one term per line)
    #[arg(long, value_name = "FILE")]
    colour_lexicon: Option<PathBuf>,

    /// Also run the markers disabled by default (remind / rappeler)
    #[arg(long)]
    include_excluded: bool,

    /// Candidate output format
    #[arg(long, value_enum, default_value_t = CandidateFormat::Jsonl)]
    format: CandidateFormat,

    /// Output path; `<out>.sidecar.json` is written next to it
    #[arg(long, value_name = "FILE")]
    out: PathBuf,

    /// Worker threads for the per-document fan-out
    #[arg(long, value_name = "N", default_value_t = default_parallelism())]
    parallelism: NonZeroUsize,

    /// Directory of replacement data files (wins over SIMILE_DATA_DIR)
    #[arg(long, value_name = "DIR")]
    data_dir: Option<PathBuf>,
}

#[derive(Args)]
struct ReportArgs {
    /// Candidate files from `extract`, each with its sidecar next to it
    #[arg(value_name = "CANDIDATES", required = true)]
    candidates: Vec<PathBuf>,

    /// Grouping axis: marker, author, language, or category
    #[arg(long, value_name = "KEY", default_value = "marker")]
    group_by: GroupBy,

    /// Table output format
    #[arg(long, value_enum, default_value_t = ReportFormat::Csv)]
    format: ReportFormat,

    /// Output path
    #[arg(long, value_name = "FILE")]
    out: PathBuf,
}

#[derive(Subcommand)]
enum LexiconCommand {
    /// Print the built-in marker patterns for a language as JSON
    Show {
        /// Language: en or fr
        #[arg(long, value_name = "LANG")]
        lang: Language,
    },
    /// Check that a lexicon file loads and validates
    Validate {
        /// Lexicon JSON file (top-level array of patterns)
        file: PathBuf,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CandidateFormat {
    Jsonl,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Csv,
    Json,
}

fn default_parallelism() -> NonZeroUsize {
    std::thread::available_parallelism().unwrap_or(NonZeroUsize::MIN)
}

/// A command failure carrying its exit code class. Usage errors (exit 1)
/// never reach this type — the argument parser rejects them directly.
enum Failure {
    /// Unreadable, unparsable, or inconsistent input data: exit 2.
    Input(String),
    /// A broken internal invariant — a bug, not a user problem: exit 3.
    Internal(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => 2,
            Failure::Internal(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Input(m) | Failure::Internal(m) => m,
        }
    }
}

impl From<similex::Error> for Failure {
    fn from(e: similex::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version travel through the error path too; they are
            // not failures.
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let result = match cli.command {
        Command::Extract(args) => extract_cmd::run(args),
        Command::Report(args) => report_cmd::run(args),
        Command::Lexicon { command } => run_lexicon(command),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("similex: {}", failure.message());
            ExitCode::from(failure.code())
        }
    }
}

fn run_lexicon(command: LexiconCommand) -> Result<(), Failure> {
    match command {
        LexiconCommand::Show { lang } => {
            let patterns = builtin_lexicon(lang);
            let json = serde_json::to_string_pretty(&patterns)
                .map_err(|e| Failure::Internal(format!("serializing built-in lexicon: {e}")))?;
            print_line(&json)
        }
        LexiconCommand::Validate { file } => {
            let patterns = load_lexicon(&file)?;
            let en = patterns
                .iter()
                .filter(|p| p.language == Language::En)
                .count();
            let fr = patterns.len() - en;
            print_line(&format!(
                "ok: {} patterns ({en} en, {fr} fr) in {}",
                patterns.len(),
                file.display()
            ))
        }
    }
}

/// Prints one line to stdout. A closed pipe (`similex ... | head`) is not an
/// error; anything else is.
fn print_line(text: &str) -> Result<(), Failure> {
    match writeln!(io::stdout().lock(), "{text}") {
        Ok(()) => Ok(()),
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => Ok(()),
        Err(e) => Err(Failure::Input(format!("writing to stdout: {e}"))),
    }
}

/// Writes `path` through a temp file in the same directory plus an atomic
/// rename, so a crashed or interrupted run never leaves a partial file
/// under the final name.
fn write_atomically<F>(path: &Path, write_fn: F) -> Result<(), Failure>
where
    F: FnOnce(&mut dyn Write) -> io::Result<()>,
{
    let dir = match path.parent() {
        Some(parent) if !parent.as_os_str().is_empty() => parent,
        _ => Path::new("."),
    };
    let attempt = move || -> io::Result<()> {
        let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
        {
            let mut writer = io::BufWriter::new(tmp.as_file_mut());
            write_fn(&mut writer)?;
            writer.flush()?;
        }
        tmp.persist(path).map_err(|e| e.error)?;
        Ok(())
    };
    attempt().map_err(|e| Failure::Input(format!("writing {}: {e}", path.display())))
}
