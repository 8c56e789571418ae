use std::path::PathBuf;

use clap::{Args, ValueEnum};
use orthoseq::alphabet::canonical_rotation;
use orthoseq::constructions::{
    construct_fixed_weight_kautz_orthogonal, construct_fixed_weight_orthogonal_db, construct_l_orthogonal_de_bruijn,
    construct_l_orthogonal_kautz, construct_orthogonal_balanced_de_bruijn, construct_orthogonal_balanced_kautz,
    ConstructionResult,
};
use orthoseq::Alphabet;

use super::{cert_path, require, write_output, AlphabetArgs, CliError, CliResult, EXIT_OK};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    /// ell-orthogonal de Bruijn sequences (--sigma, -k, --ell).
    OrthoDb,
    /// ell-orthogonal Kautz sequences (--sigma, -k, --ell).
    OrthoKautz,
    /// Orthogonal b-balanced de Bruijn sequences (-c, -b, -k).
    BalancedDb,
    /// Orthogonal b-balanced Kautz sequences (-c, -b, -k).
    BalancedKautz,
    /// Compatible fixed-weight de Bruijn sequences (-k, --wmax, -W).
    FwDb,
    /// Compatible fixed-weight Kautz sequences (-k, --wmin, --wmax, -W).
    FwKautz,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    Fasta,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[arg(value_enum)]
    pub family: FamilyArg,
    #[arg(long)]
    pub sigma: Option<usize>,
    #[arg(short = 'k', long = "k")]
    pub k: usize,
    #[arg(long, default_value_t = 1)]
    pub ell: usize,
    #[arg(short = 'c', long = "c")]
    pub c: Option<usize>,
    #[arg(short = 'b', long = "b")]
    pub b: Option<usize>,
    #[arg(long)]
    pub wmin: Option<usize>,
    #[arg(long)]
    pub wmax: Option<usize>,
    #[command(flatten)]
    pub alphabet: AlphabetArgs,
    #[arg(long, value_enum, default_value = "text")]
    pub format: OutputFormat,
    /// Write sequences here; the certificate goes to <out>.cert.json.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Explicit certificate path.
    #[arg(long)]
    pub cert: Option<PathBuf>,
}

fn weighted_alphabet(args: &GenerateArgs) -> CliResult<Alphabet> {
    let a = args.alphabet.resolve(args.sigma, true)?;
    if !a.has_weighted_subset() {
        return Err(CliError::Usage("fixed-weight families need -W/--weighted".into()));
    }
    Ok(a)
}

fn build(args: &GenerateArgs) -> CliResult<ConstructionResult> {
    let result = match args.family {
        FamilyArg::OrthoDb => construct_l_orthogonal_de_bruijn(require(args.sigma, "--sigma")?, args.k, args.ell)?,
        FamilyArg::OrthoKautz => construct_l_orthogonal_kautz(require(args.sigma, "--sigma")?, args.k, args.ell)?,
        FamilyArg::BalancedDb => {
            construct_orthogonal_balanced_de_bruijn(require(args.c, "-c")?, require(args.b, "-b")?, args.k)?
        }
        FamilyArg::BalancedKautz => {
            construct_orthogonal_balanced_kautz(require(args.c, "-c")?, require(args.b, "-b")?, args.k)?
        }
        FamilyArg::FwDb => {
            let w = require(args.wmax, "--wmax")?;
            if let Some(lo) = args.wmin {
                if lo + 1 != w {
                    return Err(CliError::Usage(format!(
                        "fw-db covers weights w-1..=w; got --wmin {lo} --wmax {w}"
                    )));
                }
            }
            construct_fixed_weight_orthogonal_db(&weighted_alphabet(args)?, args.k, w)?
        }
        FamilyArg::FwKautz => construct_fixed_weight_kautz_orthogonal(
            &weighted_alphabet(args)?,
            args.k,
            require(args.wmin, "--wmin")?,
            require(args.wmax, "--wmax")?,
        )?,
    };
    let fixed_weight = matches!(args.family, FamilyArg::FwDb | FamilyArg::FwKautz);
    if !fixed_weight && args.alphabet.overrides() {
        let sigma = result.alphabet.sigma();
        let alphabet = args.alphabet.resolve(Some(sigma), false)?;
        return Ok(result.with_alphabet(alphabet)?);
    }
    Ok(result)
}

fn fasta(result: &ConstructionResult) -> String {
    let p = &result.params;
    let mut extra = String::new();
    for (name, v) in [
        ("ell", p.ell),
        ("c", p.c),
        ("b", p.b),
        ("wmin", p.w_min),
        ("wmax", p.w_max),
    ] {
        if let Some(v) = v {
            extra.push_str(&format!(" {name}={v}"));
        }
    }
    let family = serde_json::to_value(result.family).expect("family serializes");
    let family = family.as_str().unwrap_or_default();
    let mut out = String::new();
    for (w, prov) in result.words.iter().zip(&result.provenance) {
        out.push_str(&format!(
            ">{} family={family} sigma={} k={}{extra} length={} circular=true linearized-at=canonical-rotation\n",
            prov.name,
            p.sigma,
            p.k,
            w.len()
        ));
        let text = result.alphabet.render(&canonical_rotation(w));
        let chars: Vec<char> = text.chars().collect();
        for line in chars.chunks(80) {
            out.extend(line);
            out.push('\n');
        }
    }
    out
}

pub fn run(args: GenerateArgs) -> CliResult<u8> {
    let result = build(&args)?;
    let json = || serde_json::to_string_pretty(&result.to_json()).expect("result serializes") + "\n";
    let body = match args.format {
        OutputFormat::Text => result.rendered_words().iter().map(|w| format!("{w}\n")).collect(),
        OutputFormat::Json => json(),
        OutputFormat::Fasta => fasta(&result),
    };
    write_output(args.out.as_deref(), &body)?;
    if let Some(path) = cert_path(args.out.as_deref(), args.cert.as_deref()) {
        let cert = serde_json::to_string_pretty(&result.certificate).expect("certificate serializes") + "\n";
        write_output(Some(&path), &cert)?;
    }
    if args.out.is_some() || args.format != OutputFormat::Json {
        eprintln!(
            "{} sequences on {} (sigma = {}), certificate {}",
            result.len(),
            result.graph_name,
            result.params.sigma,
            if result.certificate.holds { "holds" } else { "fails" }
        );
    }
    Ok(EXIT_OK)
}
