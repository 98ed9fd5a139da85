//! `pacert`: certify pseudo-Anosov mapping-class cosets from integer
//! polynomials.

/// `println!` that tolerates a closed stdout (e.g. piping into `head`).
macro_rules! out {
    ($($t:tt)*) => {{
        use std::io::Write as _;
        let _ = writeln!(std::io::stdout().lock(), $($t)*);
    }};
}

mod batch;

use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use pacert::certify::{
    certify, genus2_criterion, genus2_word, CertInput, Options, SignVariant, Verdict,
};
use pacert::homology::recipe_word;
use pacert::polynomial::{parse_int_list, SeedPoly, SymplecticPoly, DEFAULT_BUDGET};
use pacert::symplectic::{charpoly, companion, factored_bq_ordered, is_symplectic};
use pacert::Genus2Params;
use serde_json::json;

/// Exit status for usage and input errors.
const EXIT_USAGE: u8 = 1;

#[derive(Parser, Debug)]
#[command(
    name = "pacert",
    version,
    about = "Certify pseudo-Anosov mapping classes from integer polynomials"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run the full pipeline and print a certificate.
    ///
    /// Exit status: 0 certified, 2 refuted, 3 inconclusive, 1 usage or
    /// input error.
    Certify(PolyArgs),
    /// Print the companion matrix, the factored conjugate and its product.
    Matrix(PolyArgs),
    /// Print the twist word for a polynomial.
    Word(PolyArgs),
    /// Genus-2 word and certificate for x^4 + a x^3 + b x^2 + a x + 1.
    Genus2(Genus2Args),
    /// Certify every seed in a CSV file with columns genus, prime,
    /// coefficients.
    Batch(BatchArgs),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum VariantArg {
    Canonical,
    Flipped,
}

impl From<VariantArg> for SignVariant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Canonical => SignVariant::Canonical,
            VariantArg::Flipped => SignVariant::Flipped,
        }
    }
}

#[derive(Args, Debug)]
#[command(group(clap::ArgGroup::new("source").required(true).args(["coeffs", "poly"])))]
struct PolyArgs {
    /// Genus of the seed (defaults to the number of seed coefficients).
    #[arg(long)]
    genus: Option<usize>,
    /// Prime p multiplying the seed's lower coefficients.
    #[arg(long, requires = "coeffs")]
    prime: Option<BigInt>,
    /// Seed coefficients a_{g-1},...,a_0 of x^g + p(a_{g-1} x^{g-1} + ... + a_0).
    #[arg(long, allow_hyphen_values = true)]
    coeffs: Option<String>,
    /// Symplectic polynomial coefficients, leading first, e.g. 1,6,5,6,1.
    #[arg(long, allow_hyphen_values = true)]
    poly: Option<String>,
    /// Block order, a permutation of 1..g, e.g. 2,1,3.
    #[arg(long)]
    order: Option<String>,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
    /// Kronecker divisor-combination budget.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
}

#[derive(Args, Debug)]
#[command(group(clap::ArgGroup::new("mode").required(true).args(["coeffs", "sweep"])))]
struct Genus2Args {
    /// The pair a,b.
    #[arg(long, allow_hyphen_values = true)]
    coeffs: Option<String>,
    /// Check every |a|, |b| <= N and print a summary table.
    #[arg(long)]
    sweep: Option<i64>,
    /// Spelling of the handle switches.
    #[arg(long, value_enum, default_value_t = VariantArg::Flipped)]
    sign_variant: VariantArg,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
}

#[derive(Args, Debug)]
struct BatchArgs {
    /// CSV file with a header row naming genus, prime and coefficients.
    #[arg(long)]
    input: std::path::PathBuf,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Process rows on all available cores; output order is unchanged.
    #[arg(long)]
    parallel: bool,
}

fn exit_code(v: Verdict) -> u8 {
    match v {
        Verdict::CertifiedPaCoset => 0,
        Verdict::Refuted => 2,
        Verdict::Inconclusive => 3,
    }
}

fn parse_order(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .with_context(|| format!("invalid block index {t:?}"))
        })
        .collect()
}

impl PolyArgs {
    fn input(&self) -> Result<CertInput<BigInt>> {
        if let Some(poly) = &self.poly {
            let r = SymplecticPoly::parse_desc(poly)?;
            if let Some(g) = self.genus {
                if g != r.genus() {
                    bail!(
                        "--genus {g} does not match polynomial of genus {}",
                        r.genus()
                    );
                }
            }
            return Ok(CertInput::Symplectic(r));
        }
        let coeffs = self.coeffs.as_deref().expect("clap enforces a source");
        let a: Vec<BigInt> = parse_int_list(coeffs)?;
        let genus = self.genus.unwrap_or(a.len());
        Ok(CertInput::Seed(SeedPoly::from_desc(
            genus,
            &a,
            self.prime.clone(),
        )?))
    }

    fn options(&self) -> Result<Options> {
        Ok(Options {
            budget: self.budget,
            order: self.order.as_deref().map(parse_order).transpose()?,
        })
    }

    /// The symplectic polynomial behind the input, without running the
    /// criterion.
    fn symplectic(&self) -> Result<SymplecticPoly<BigInt>> {
        Ok(match self.input()? {
            CertInput::Symplectic(r) => r,
            CertInput::Seed(s) => pacert::polynomial::sym(&s.poly())?,
            CertInput::Genus2(p, _) => p.poly(),
        })
    }
}

fn cmd_certify(args: &PolyArgs) -> Result<u8> {
    let cert = certify(args.input()?, &args.options()?)?;
    match args.format {
        Format::Json => out!("{}", serde_json::to_string_pretty(&cert.to_json())?),
        Format::Text => out!("{cert}"),
    }
    Ok(exit_code(cert.verdict))
}

fn cmd_matrix(args: &PolyArgs) -> Result<u8> {
    let r = args.symplectic()?;
    let order = args
        .options()?
        .order
        .unwrap_or_else(|| (1..=r.genus()).collect());
    let a = companion(&r);
    let (spec, bq) = factored_bq_ordered(&r, &order)?;
    let (cp_a, cp_b) = (charpoly(&a), charpoly(&bq));
    let symplectic = is_symplectic(&bq)?;
    match args.format {
        Format::Json => {
            let v = json!({
                "polynomial": r.poly().to_json(),
                "companion": a.to_json(),
                "factor_spec": spec.to_json(),
                "bq": bq.to_json(),
                "charpoly_companion": cp_a.to_json(),
                "charpoly_bq": cp_b.to_json(),
                "symplectic": symplectic,
            });
            out!("{}", serde_json::to_string_pretty(&v)?);
        }
        Format::Text => {
            out!("polynomial:     {}", r.poly().to_desc_string());
            out!("companion A_q:");
            for line in a.to_string().lines() {
                out!("  {line}");
            }
            out!("factor spec:    {spec}");
            out!("B_q:");
            for line in bq.to_string().lines() {
                out!("  {line}");
            }
            out!("charpoly(A_q):  {}", cp_a.to_desc_string());
            out!("charpoly(B_q):  {}", cp_b.to_desc_string());
            out!("symplectic:     {symplectic}");
        }
    }
    if cp_a != *r.poly() || cp_b != *r.poly() || !symplectic {
        bail!("internal consistency check failed");
    }
    Ok(0)
}

fn cmd_word(args: &PolyArgs) -> Result<u8> {
    let r = args.symplectic()?;
    let order = args.options()?.order;
    let word = recipe_word(&r, order.as_deref())?;
    let psi = word.psi();
    match args.format {
        Format::Json => {
            let v = json!({ "word": word.to_json(), "psi": psi.to_json() });
            out!("{}", serde_json::to_string_pretty(&v)?);
        }
        Format::Text => out!("{word}"),
    }
    Ok(0)
}

fn parse_pair(s: &str) -> Result<Genus2Params> {
    let v: Vec<BigInt> = parse_int_list(s)?;
    match <[BigInt; 2]>::try_from(v) {
        Ok([a, b]) => Ok(Genus2Params::new(a, b)),
        Err(v) => bail!("expected two coefficients a,b, got {}", v.len()),
    }
}

fn cmd_genus2(args: &Genus2Args) -> Result<u8> {
    let variant: SignVariant = args.sign_variant.into();
    if let Some(n) = args.sweep {
        return genus2_sweep(n, variant, args);
    }
    let p = parse_pair(args.coeffs.as_deref().expect("clap enforces a mode"))?;
    let (_, cert) = genus2_word(&p, variant, args.budget)?;
    match args.format {
        Format::Json => out!("{}", serde_json::to_string_pretty(&cert.to_json())?),
        Format::Text => out!("{cert}"),
    }
    Ok(exit_code(cert.verdict))
}

fn genus2_sweep(n: i64, variant: SignVariant, args: &Genus2Args) -> Result<u8> {
    if n < 0 {
        bail!("--sweep needs a nonnegative bound");
    }
    let (mut certified, mut refuted, mut inconsistent) = (0usize, 0usize, 0usize);
    let mut rows = Vec::new();
    for a in -n..=n {
        for b in -n..=n {
            let p = Genus2Params::new(a.into(), b.into());
            let (ok, reason) = genus2_criterion(&p);
            let (_, cert) = genus2_word(&p, variant, args.budget)?;
            let agrees = (cert.verdict == Verdict::CertifiedPaCoset) == ok && cert.checks.all();
            if !agrees {
                inconsistent += 1;
            }
            if ok {
                certified += 1;
            } else {
                refuted += 1;
            }
            rows.push((a, b, ok, reason, cert.verdict, agrees));
        }
    }
    match args.format {
        Format::Json => {
            let v = json!({
                "bound": n,
                "sign_variant": variant.as_str(),
                "rows": rows.iter().map(|(a, b, ok, reason, verdict, agrees)| json!({
                    "a": a, "b": b, "criterion": ok, "reason": reason.as_str(),
                    "verdict": verdict.as_str(), "consistent": agrees,
                })).collect::<Vec<_>>(),
                "summary": { "certified": certified, "refuted": refuted, "inconsistent": inconsistent },
            });
            out!("{}", serde_json::to_string_pretty(&v)?);
        }
        Format::Text => {
            out!(
                "{:>6} {:>6}  {:<20} {:<20} consistent",
                "a",
                "b",
                "reason",
                "verdict"
            );
            for (a, b, _, reason, verdict, agrees) in &rows {
                out!(
                    "{a:>6} {b:>6}  {:<20} {:<20} {agrees}",
                    reason.as_str(),
                    verdict.as_str()
                );
            }
            out!("certified: {certified}  refuted: {refuted}  inconsistent: {inconsistent}");
        }
    }
    Ok(if inconsistent == 0 { 0 } else { 3 })
}

fn run(cli: Cli) -> Result<u8> {
    match &cli.command {
        Command::Certify(a) => cmd_certify(a),
        Command::Matrix(a) => cmd_matrix(a),
        Command::Word(a) => cmd_word(a),
        Command::Genus2(a) => cmd_genus2(a),
        Command::Batch(a) => batch::run(a).map_err(|e| anyhow!(e)),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let usage = e.use_stderr();
            let _ = e.print();
            return ExitCode::from(if usage { EXIT_USAGE } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
