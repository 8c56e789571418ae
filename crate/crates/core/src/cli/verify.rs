use std::path::PathBuf;

use clap::{Args, ValueEnum};
use orthoseq::graph::{expand_language, LanguageSpec};
use orthoseq::verify::{
    are_distinct, is_b_balanced, is_b_balanced_kautz, is_de_bruijn, is_fixed_weight_db, is_kautz_word, is_l_orthogonal,
    is_self_orthogonal, VerificationReport,
};
use orthoseq::{Alphabet, Symbol};
use serde::Serialize;

use super::{read_input, require, AlphabetArgs, CliError, CliResult, EXIT_OK, EXIT_PROPERTY_FAILED};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Property {
    /// Every k-window exactly once (--sigma, -k).
    DeBruijn,
    /// Every k-window exactly b times (--sigma, -k, -b).
    Balanced,
    /// Kautz sequence (--sigma, -k).
    Kautz,
    /// Every Kautz k-window exactly b times (--sigma, -k, -b).
    BalancedKautz,
    /// No (k+1)-window repeats (-k).
    SelfOrthogonal,
    /// Each (k+1)-window at most ell times across all inputs (-k, --ell).
    LOrthogonal,
    /// No two inputs are rotations of each other.
    Distinct,
    /// Fixed-weight de Bruijn for weights --wmin..=--wmax (-k, -W).
    FixedWeight,
    /// Fixed-weight Kautz for weights --wmin..=--wmax (-k, -W).
    FixedWeightKautz,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Text,
    Json,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// One circular word per line, or FASTA; `-` reads standard input.
    #[arg(long, short = 'i')]
    pub input: PathBuf,
    /// Properties to check (repeatable or comma-separated).
    #[arg(long, short = 'p', value_enum, value_delimiter = ',', required = true)]
    pub property: Vec<Property>,
    #[arg(long)]
    pub sigma: Option<usize>,
    #[arg(short = 'k', long = "k")]
    pub k: Option<usize>,
    #[arg(short = 'b', long = "b")]
    pub b: Option<usize>,
    #[arg(long, default_value_t = 1)]
    pub ell: usize,
    #[arg(long)]
    pub wmin: Option<usize>,
    #[arg(long)]
    pub wmax: Option<usize>,
    #[command(flatten)]
    pub alphabet: AlphabetArgs,
    #[arg(long, value_enum, default_value = "text")]
    pub format: ReportFormat,
}

/// Words from plain lines or FASTA records (header lines start with `>`;
/// `#` lines are comments).
pub fn parse_words(text: &str) -> Vec<String> {
    let mut words = Vec::new();
    let mut current: Option<String> = None;
    let fasta = text.lines().any(|l| l.trim_start().starts_with('>'));
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if fasta {
            if line.starts_with('>') {
                if let Some(w) = current.take() {
                    words.push(w);
                }
                current = Some(String::new());
            } else if let Some(w) = current.as_mut() {
                w.push_str(line);
            }
        } else {
            words.push(line.to_string());
        }
    }
    if let Some(w) = current {
        words.push(w);
    }
    words.retain(|w| !w.is_empty());
    words
}

fn infer_alphabet(args: &VerifyArgs, raw: &[String]) -> CliResult<Alphabet> {
    if args.alphabet.overrides() || args.sigma.is_some() {
        return args.alphabet.resolve(args.sigma, false);
    }
    let dna = raw
        .iter()
        .all(|w| w.chars().all(|c| matches!(c, 'A' | 'C' | 'G' | 'T')));
    if dna {
        return args.alphabet.resolve(Some(4), true);
    }
    Err(CliError::Usage("--sigma or --alphabet is required".into()))
}

#[derive(Serialize)]
struct Entry<'a> {
    input: Option<usize>,
    report: &'a VerificationReport,
}

pub fn run(args: VerifyArgs) -> CliResult<u8> {
    let text = read_input(&args.input)?;
    let raw = parse_words(&text);
    if raw.is_empty() {
        return Err(CliError::Usage(format!("{}: no sequences found", args.input.display())));
    }
    let alphabet = infer_alphabet(&args, &raw)?;
    let words: Vec<Vec<Symbol>> = raw.iter().map(|w| alphabet.parse(w)).collect::<orthoseq::Result<_>>()?;
    let sigma = alphabet.sigma();
    let mut reports: Vec<(Option<usize>, VerificationReport)> = Vec::new();
    for &prop in &args.property {
        match prop {
            Property::DeBruijn | Property::Kautz | Property::SelfOrthogonal => {
                let k = require(args.k, "-k")?;
                for (i, w) in words.iter().enumerate() {
                    let r = match prop {
                        Property::DeBruijn => is_de_bruijn(w, sigma, k),
                        Property::Kautz => is_kautz_word(w, sigma, k),
                        _ => is_self_orthogonal(w, k),
                    };
                    reports.push((Some(i), r));
                }
            }
            Property::Balanced | Property::BalancedKautz => {
                let (k, b) = (require(args.k, "-k")?, require(args.b, "-b")?);
                for (i, w) in words.iter().enumerate() {
                    let r = if prop == Property::Balanced {
                        is_b_balanced(w, sigma, k, b)
                    } else {
                        is_b_balanced_kautz(w, sigma, k, b)
                    };
                    reports.push((Some(i), r));
                }
            }
            Property::LOrthogonal => reports.push((None, is_l_orthogonal(&words, require(args.k, "-k")?, args.ell))),
            Property::Distinct => reports.push((None, are_distinct(&words))),
            Property::FixedWeight | Property::FixedWeightKautz => {
                let k = require(args.k, "-k")?;
                let (lo, hi) = (require(args.wmin, "--wmin")?, require(args.wmax, "--wmax")?);
                let spec = if prop == Property::FixedWeight {
                    LanguageSpec::weight_band(k, lo, hi)
                } else {
                    LanguageSpec::kautz_weight_band(k, lo, hi)
                };
                let language = expand_language(&spec, &alphabet)?;
                for (i, w) in words.iter().enumerate() {
                    reports.push((Some(i), is_fixed_weight_db(w, &language)));
                }
            }
        }
    }
    let all_hold = reports.iter().all(|(_, r)| r.holds);
    match args.format {
        ReportFormat::Text => {
            for (i, r) in &reports {
                match i {
                    Some(i) => println!("[{}] {}", i + 1, r.summary(&alphabet)),
                    None => println!("[all] {}", r.summary(&alphabet)),
                }
            }
            println!(
                "{}",
                if all_hold {
                    "all properties hold"
                } else {
                    "some properties fail"
                }
            );
        }
        ReportFormat::Json => {
            let entries: Vec<Entry<'_>> = reports.iter().map(|(i, r)| Entry { input: *i, report: r }).collect();
            println!("{}", serde_json::to_string_pretty(&entries).expect("reports serialize"));
        }
    }
    Ok(if all_hold { EXIT_OK } else { EXIT_PROPERTY_FAILED })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plain_and_fasta() {
        assert_eq!(parse_words("012\n\n# note\n120\n"), vec!["012", "120"]);
        assert_eq!(parse_words(">a x\nAC\nGT\n>b\nTT\n"), vec!["ACGT", "TT"]);
        assert!(parse_words("\n\n").is_empty());
    }
}
