mod enumerate;
mod export;
mod generate;
mod verify;

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use orthoseq::{Alphabet, Error};

pub const EXIT_OK: u8 = 0;
pub const EXIT_PROPERTY_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_INTERNAL: u8 = 3;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error(transparent)]
    Lib(#[from] Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Io { .. } => EXIT_USAGE,
            CliError::Lib(e) => match e {
                Error::CertificationFailed(_)
                | Error::InvalidCircuit(_)
                | Error::MultipleCycles(_)
                | Error::NotConnected
                | Error::DegreeMismatch { .. }
                | Error::IncompleteWiring { .. }
                | Error::InsufficientDegree { .. }
                | Error::TooManyForbidden { .. }
                | Error::NoSuchArc(_)
                | Error::SearchExhausted(_)
                | Error::Disconnected
                | Error::NotCoprime(..)
                | Error::EmptyGraph
                | Error::NoWordLabels => EXIT_INTERNAL,
                _ => EXIT_USAGE,
            },
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

/// Orthogonal de Bruijn and Kautz sequences: generate, verify, enumerate
/// and export.
#[derive(Debug, Parser)]
#[command(name = "orthoseq", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a certified collection of sequences.
    Generate(generate::GenerateArgs),
    /// Check sequences read from a file against properties.
    Verify(verify::VerifyArgs),
    /// Exhaustive values and bound tables for small instances.
    Enumerate(enumerate::EnumerateArgs),
    /// Write a graph as DOT or JSON.
    Export(export::ExportArgs),
}

pub fn run(cli: Cli) -> CliResult<u8> {
    match cli.command {
        Command::Generate(a) => generate::run(a),
        Command::Verify(a) => verify::run(a),
        Command::Enumerate(a) => enumerate::run(a),
        Command::Export(a) => export::run(a),
    }
}

/// Alphabet selection shared by the subcommands.
#[derive(Debug, Clone, Args)]
pub struct AlphabetArgs {
    /// Symbol tokens: a string of single characters (ATCG) or a comma list.
    #[arg(long)]
    pub alphabet: Option<String>,
    /// Weighted symbols, in the same notation as --alphabet.
    #[arg(short = 'W', long = "weighted")]
    pub weighted: Option<String>,
    /// Use A,T,C,G (weighted C,G) for four-symbol alphabets.
    #[arg(long, conflicts_with = "digits")]
    pub dna: bool,
    /// Use digit symbols even where DNA letters are the default.
    #[arg(long)]
    pub digits: bool,
}

pub fn split_tokens(spec: &str) -> Vec<String> {
    if spec.contains(',') {
        spec.split(',')
            .map(|t| t.trim().to_string())
            .filter(|t| !t.is_empty())
            .collect()
    } else {
        spec.chars().filter(|c| !c.is_whitespace()).map(String::from).collect()
    }
}

impl AlphabetArgs {
    /// Resolve to an alphabet of `sigma` symbols (when known). `dna_default`
    /// selects DNA letters for four symbols unless `--digits` is given.
    pub fn resolve(&self, sigma: Option<usize>, dna_default: bool) -> CliResult<Alphabet> {
        let base = if let Some(spec) = &self.alphabet {
            Alphabet::from_tokens(split_tokens(spec))?
        } else if self.dna || (dna_default && !self.digits && sigma.is_none_or(|s| s == 4)) {
            Alphabet::dna()
        } else {
            let sigma = sigma.ok_or_else(|| CliError::Usage("--sigma or --alphabet is required".into()))?;
            Alphabet::numeric(sigma)?
        };
        if let Some(s) = sigma {
            if s != base.sigma() {
                return Err(CliError::Usage(format!(
                    "alphabet has {} symbols but --sigma is {s}",
                    base.sigma()
                )));
            }
        }
        match &self.weighted {
            Some(w) => Ok(base.with_weighted(split_tokens(w))?),
            None => Ok(base),
        }
    }

    /// Whether the user asked for a specific rendering.
    pub fn overrides(&self) -> bool {
        self.alphabet.is_some() || self.dna || self.digits
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Csv,
    Markdown,
}

pub fn write_output(out: Option<&Path>, text: &str) -> CliResult<()> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

pub fn read_input(path: &Path) -> CliResult<String> {
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::Read::read_to_string(&mut std::io::stdin(), &mut s).map_err(|source| CliError::Io {
            path: "-".into(),
            source,
        })?;
        return Ok(s);
    }
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

pub fn cert_path(out: Option<&Path>, cert: Option<&Path>) -> Option<PathBuf> {
    cert.map(Path::to_path_buf).or_else(|| {
        out.map(|p| {
            let mut s = p.as_os_str().to_owned();
            s.push(".cert.json");
            PathBuf::from(s)
        })
    })
}

pub fn require<T>(value: Option<T>, flag: &str) -> CliResult<T> {
    value.ok_or_else(|| CliError::Usage(format!("{flag} is required")))
}
