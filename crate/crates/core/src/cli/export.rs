use std::path::PathBuf;

use clap::{Args, ValueEnum};
use orthoseq::graph::{
    build_de_bruijn_graph, build_kautz_graph, build_restricted_graph, expand_language, to_dot, to_json, LanguageSpec,
};

use super::{require, write_output, AlphabetArgs, CliError, CliResult, EXIT_OK};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GraphFamily {
    /// de Bruijn graph; arcs are all k-words.
    Db,
    /// Kautz graph; arcs are the Kautz k-words.
    Kautz,
    /// Restricted to k-words of weight --wmin..=--wmax.
    FwDb,
    /// Kautz words of weight --wmin..=--wmax.
    FwKautz,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GraphFormat {
    Dot,
    Json,
}

#[derive(Debug, Args)]
pub struct ExportArgs {
    #[arg(long, value_enum)]
    pub family: GraphFamily,
    #[arg(long)]
    pub sigma: Option<usize>,
    /// Length of the arc words.
    #[arg(short = 'k', long = "k")]
    pub k: usize,
    #[arg(long)]
    pub wmin: Option<usize>,
    #[arg(long)]
    pub wmax: Option<usize>,
    #[command(flatten)]
    pub alphabet: AlphabetArgs,
    #[arg(long, value_enum, default_value = "dot")]
    pub format: GraphFormat,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

pub fn run(args: ExportArgs) -> CliResult<u8> {
    let (graph, alphabet) = match args.family {
        GraphFamily::Db | GraphFamily::Kautz => {
            let sigma = match (args.sigma, &args.alphabet.alphabet) {
                (Some(s), _) => s,
                (None, Some(_)) => args.alphabet.resolve(None, false)?.sigma(),
                (None, None) if args.alphabet.dna => 4,
                (None, None) => return Err(CliError::Usage("--sigma is required".into())),
            };
            let alphabet = args.alphabet.resolve(Some(sigma), false)?;
            let g = if args.family == GraphFamily::Db {
                build_de_bruijn_graph(sigma, args.k)?
            } else {
                build_kautz_graph(sigma, args.k)?
            };
            (g, alphabet)
        }
        GraphFamily::FwDb | GraphFamily::FwKautz => {
            let alphabet = args.alphabet.resolve(args.sigma, true)?;
            if !alphabet.has_weighted_subset() {
                return Err(CliError::Usage("fixed-weight graphs need -W/--weighted".into()));
            }
            let (lo, hi) = (require(args.wmin, "--wmin")?, require(args.wmax, "--wmax")?);
            let spec = if args.family == GraphFamily::FwDb {
                LanguageSpec::weight_band(args.k, lo, hi)
            } else {
                LanguageSpec::kautz_weight_band(args.k, lo, hi)
            };
            let words = expand_language(&spec, &alphabet)?;
            (build_restricted_graph(alphabet.sigma(), &words)?, alphabet)
        }
    };
    let text = match args.format {
        GraphFormat::Dot => to_dot(&graph, &alphabet),
        GraphFormat::Json => {
            serde_json::to_string_pretty(&to_json(&graph, &alphabet)).expect("graph serializes") + "\n"
        }
    };
    write_output(args.out.as_deref(), &text)?;
    Ok(EXIT_OK)
}
