use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use starpoly::classify::{enumerate_special, SearchBounds, SearchHit, SignFilter};
use starpoly::diffset::enumerate_perfect_difference_sets;
use starpoly::par::Execution;
use starpoly::report::analyze;
use starpoly::star::{cyclic_star_graph, to_dot};
use starpoly::{parse_word, presentation_flags, Error};

#[derive(Parser)]
#[command(name = "starpoly", version, about = "Star graphs and speciality of cyclic presentations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze the cyclic presentation P_n(w).
    Analyze {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[command(flatten)]
        out: Out,
    },
    /// List special presentations with a relator of length k over rank n.
    Search {
        #[arg(short = 'n', long = "n")]
        n: u32,
        #[arg(long)]
        k: usize,
        /// Keep only hits with this m.
        #[arg(long)]
        m: Option<u32>,
        #[arg(long, value_enum, default_value = "any")]
        sign: Sign,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[command(flatten)]
        out: Out,
    },
    /// Print the perfect difference sets of order k, one per line.
    Diffset {
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[command(flatten)]
        out: Out,
    },
    /// Write the star graph of P_n(w) in DOT format.
    Export {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_enum, default_value = "dot")]
        format: Format,
        #[command(flatten)]
        out: Out,
    },
}

#[derive(Args)]
struct Target {
    /// Rank of the presentation.
    #[arg(short = 'n', long = "n")]
    n: u32,
    /// Relator, e.g. "x0 x1^-1 x3".
    #[arg(short = 'w', long = "word", allow_hyphen_values = true)]
    word: String,
}

#[derive(Args)]
struct Out {
    /// Write to this file instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum Sign {
    Positive,
    Negative,
    Alternating,
    Mixed,
    Any,
}

impl From<Sign> for SignFilter {
    fn from(s: Sign) -> SignFilter {
        match s {
            Sign::Positive => SignFilter::Positive,
            Sign::Negative => SignFilter::Negative,
            Sign::Alternating => SignFilter::Alternating,
            Sign::Mixed => SignFilter::Mixed,
            Sign::Any => SignFilter::Any,
        }
    }
}

enum Failure {
    Usage(String),
    Analysis(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Analysis(e.to_string())
    }
}

fn bounds_from_env() -> Result<SearchBounds, Failure> {
    let mut bounds = SearchBounds::default();
    let read = |name: &str| -> Result<Option<u64>, Failure> {
        match std::env::var(name) {
            Ok(v) => v
                .trim()
                .parse()
                .map(Some)
                .map_err(|_| Failure::Usage(format!("{name} must be a non-negative integer, got `{v}`"))),
            Err(_) => Ok(None),
        }
    };
    if let Some(v) = read("STARPOLY_MAX_N")? {
        bounds.max_n = u32::try_from(v).map_err(|_| Failure::Usage("STARPOLY_MAX_N is too large".into()))?;
    }
    if let Some(v) = read("STARPOLY_MAX_K")? {
        bounds.max_k = v as usize;
    }
    Ok(bounds)
}

fn search_output(
    n: u32,
    k: usize,
    m: Option<u32>,
    sign: Sign,
    hits: &[SearchHit],
    format: Format,
) -> Result<String, Failure> {
    let mut q_sets: Vec<Vec<u32>> = Vec::new();
    for hit in hits {
        let mut q: Vec<u32> = presentation_flags(n, &hit.word)?.multisets().q.to_vec();
        q.sort_unstable();
        q.dedup();
        if !q_sets.contains(&q) {
            q_sets.push(q);
        }
    }
    q_sets.sort();
    match format {
        Format::Json => {
            let value = json!({
                "n": n,
                "k": k,
                "m": m,
                "sign": SignFilter::from(sign),
                "hits": hits,
                "q_sets": q_sets,
            });
            Ok(serde_json::to_string_pretty(&value).expect("search result serializes") + "\n")
        }
        Format::Text => {
            let mut out = String::new();
            for hit in hits {
                let _ = writeln!(out, "{}  {}  [{}]", hit.word, hit.report.verdict, hit.report.method);
            }
            let _ = writeln!(out, "{} hits", hits.len());
            for q in &q_sets {
                let items: Vec<String> = q.iter().map(u32::to_string).collect();
                let _ = writeln!(out, "Q = {{{}}}", items.join(", "));
            }
            Ok(out)
        }
        Format::Dot => Err(Failure::Usage("search has no dot output".into())),
    }
}

fn run(cli: Cli) -> Result<(String, Option<PathBuf>), Failure> {
    match cli.command {
        Command::Analyze { target, format, out } => {
            let report = analyze(target.n, &target.word)?;
            let text = match format {
                Format::Json => report.to_json() + "\n",
                Format::Text => report.to_text(),
                Format::Dot => to_dot(&report.star),
            };
            Ok((text, out.out))
        }
        Command::Search { n, k, m, sign, format, out } => {
            let bounds = bounds_from_env()?;
            let mut hits = enumerate_special(n, k, sign.into(), bounds, Execution::default())?;
            if let Some(m) = m {
                hits.retain(|h| h.report.verdict.parameters().is_some_and(|(hm, _, _)| hm == m));
            }
            Ok((search_output(n, k, m, sign, &hits, format)?, out.out))
        }
        Command::Diffset { k, format, out } => {
            let sets = enumerate_perfect_difference_sets(k)?;
            let text = match format {
                Format::Json => serde_json::to_string_pretty(&sets).expect("sets serialize") + "\n",
                Format::Text => sets
                    .iter()
                    .map(|s| s.iter().map(u32::to_string).collect::<Vec<_>>().join(",") + "\n")
                    .collect(),
                Format::Dot => return Err(Failure::Usage("diffset has no dot output".into())),
            };
            Ok((text, out.out))
        }
        Command::Export { target, format, out } => {
            if format != Format::Dot {
                return Err(Failure::Usage("export only writes dot".into()));
            }
            let w = parse_word(&target.word, target.n)?;
            let p = presentation_flags(target.n, &w)?;
            Ok((to_dot(&cyclic_star_graph(&p)), out.out))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(cli).and_then(|(text, path)| match path {
        Some(path) => std::fs::write(&path, text)
            .map_err(|e| Failure::Analysis(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Analysis(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
    }
}
