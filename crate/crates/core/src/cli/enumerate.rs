use std::path::PathBuf;

use clap::{Args, ValueEnum};
use orthoseq::constructions::{construct_orthogonal_balanced_de_bruijn, construct_orthogonal_balanced_kautz};
use orthoseq::verify::{
    balanced_bounds, enumerate_de_bruijn_words, exact_max_orthogonal, kautz_balanced_bounds, max_orthogonal_bounds,
    render_csv, render_markdown, BoundRow, DEFAULT_ENUMERATION_GUARD, DEFAULT_SEARCH_GUARD,
};
use orthoseq::Alphabet;

use super::{write_output, CliResult, TableFormat, EXIT_OK};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Quantity {
    /// Largest ell-orthogonal collection of de Bruijn sequences (exhaustive).
    MaxOrthogonal,
    /// Number of de Bruijn sequences up to rotation (exhaustive).
    Words,
    /// Alphabet used for c orthogonal b-balanced de Bruijn sequences.
    MinAlphabet,
    /// Alphabet used for c orthogonal b-balanced Kautz sequences.
    MinAlphabetKautz,
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    #[arg(value_enum)]
    pub quantity: Quantity,
    #[arg(long, value_delimiter = ',', default_value = "3")]
    pub sigma: Vec<usize>,
    #[arg(short = 'k', long = "k", value_delimiter = ',', default_value = "2")]
    pub k: Vec<usize>,
    #[arg(long, value_delimiter = ',', default_value = "1")]
    pub ell: Vec<usize>,
    #[arg(short = 'c', long = "c", value_delimiter = ',', default_value = "2")]
    pub c: Vec<usize>,
    #[arg(short = 'b', long = "b", value_delimiter = ',', default_value = "2")]
    pub b: Vec<usize>,
    /// Node or result guard for the exhaustive searches.
    #[arg(long)]
    pub guard: Option<u64>,
    /// Print the enumerated words instead of the table (words only).
    #[arg(long)]
    pub list: bool,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: TableFormat,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

pub fn run(args: EnumerateArgs) -> CliResult<u8> {
    let mut rows = Vec::new();
    let mut listing = String::new();
    match args.quantity {
        Quantity::MaxOrthogonal => {
            let guard = args.guard.unwrap_or(DEFAULT_SEARCH_GUARD);
            for &sigma in &args.sigma {
                for &k in &args.k {
                    for &ell in &args.ell {
                        let found = exact_max_orthogonal(sigma, k, ell, guard)?;
                        let (lower, upper) = max_orthogonal_bounds(sigma, k, ell);
                        rows.push(BoundRow::new(
                            "max-orthogonal",
                            format!("sigma={sigma} k={k} ell={ell}"),
                            found.value,
                            lower,
                            Some(upper),
                        ));
                    }
                }
            }
        }
        Quantity::Words => {
            let guard = args.guard.unwrap_or(DEFAULT_ENUMERATION_GUARD);
            for &sigma in &args.sigma {
                for &k in &args.k {
                    let words = enumerate_de_bruijn_words(sigma, k, guard)?;
                    let alphabet = Alphabet::numeric(sigma)?;
                    for w in &words {
                        listing.push_str(&alphabet.render(w));
                        listing.push('\n');
                    }
                    rows.push(BoundRow::new(
                        "words",
                        format!("sigma={sigma} k={k}"),
                        words.len(),
                        None,
                        None,
                    ));
                }
            }
        }
        Quantity::MinAlphabet | Quantity::MinAlphabetKautz => {
            for &c in &args.c {
                for &b in &args.b {
                    for &k in &args.k {
                        let (result, (lower, upper), name) = if args.quantity == Quantity::MinAlphabet {
                            (
                                construct_orthogonal_balanced_de_bruijn(c, b, k)?,
                                balanced_bounds(c, b),
                                "min-alphabet",
                            )
                        } else {
                            (
                                construct_orthogonal_balanced_kautz(c, b, k)?,
                                kautz_balanced_bounds(c, b),
                                "min-alphabet-kautz",
                            )
                        };
                        rows.push(BoundRow::new(
                            name,
                            format!("c={c} b={b} k={k}"),
                            result.params.sigma,
                            Some(lower),
                            Some(upper),
                        ));
                    }
                }
            }
        }
    }
    let text = if args.list && args.quantity == Quantity::Words {
        listing
    } else {
        match args.format {
            TableFormat::Csv => render_csv(&rows)?,
            TableFormat::Markdown => render_markdown(&rows),
        }
    };
    write_output(args.out.as_deref(), &text)?;
    Ok(EXIT_OK)
}
