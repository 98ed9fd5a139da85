//! CSV batch certification.

use std::fs::File;
use std::thread;

use anyhow::{bail, Context, Result};
use num_bigint::BigInt;
use pacert::certify::{certify, CertInput, Options, Verdict};
use pacert::polynomial::{parse_int_list, SeedPoly};
use pacert::Certificate;
use serde_json::json;

use crate::{BatchArgs, Format};

struct Row {
    genus: String,
    prime: String,
    coefficients: String,
}

/// Row outcome: a certificate or the reason it could not be built.
type Outcome = std::result::Result<Certificate, String>;

fn read_rows(args: &BatchArgs) -> Result<Vec<Row>> {
    let file =
        File::open(&args.input).with_context(|| format!("cannot open {}", args.input.display()))?;
    let mut reader = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .flexible(true)
        .from_reader(file);
    let headers = reader.headers()?.clone();
    if headers.is_empty() {
        return Ok(Vec::new());
    }
    let col = |name: &str| headers.iter().position(|h| h.eq_ignore_ascii_case(name));
    let (Some(g), Some(c)) = (col("genus"), col("coefficients")) else {
        bail!("CSV header must name the columns genus, prime and coefficients");
    };
    let p = col("prime");
    let mut rows = Vec::new();
    for record in reader.records() {
        let record = record?;
        let field = |i: usize| record.get(i).unwrap_or("").to_string();
        rows.push(Row {
            genus: field(g),
            prime: p.map(field).unwrap_or_default(),
            coefficients: field(c),
        });
    }
    Ok(rows)
}

fn process(row: &Row, budget: u64) -> Outcome {
    let genus: usize = row
        .genus
        .parse()
        .map_err(|_| format!("invalid genus {:?}", row.genus))?;
    let prime = if row.prime.is_empty() {
        None
    } else {
        Some(
            row.prime
                .parse::<BigInt>()
                .map_err(|_| format!("invalid prime {:?}", row.prime))?,
        )
    };
    // coefficients may be separated by commas (quoted), semicolons or spaces
    let normalized: String = row
        .coefficients
        .split(|c: char| c == ',' || c == ';' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .collect::<Vec<_>>()
        .join(",");
    let a: Vec<BigInt> = parse_int_list(&normalized).map_err(|e| e.to_string())?;
    let seed = SeedPoly::from_desc(genus, &a, prime).map_err(|e| e.to_string())?;
    let opts = Options {
        budget,
        order: None,
    };
    certify(CertInput::Seed(seed), &opts).map_err(|e| e.to_string())
}

fn process_all(rows: &[Row], budget: u64, parallel: bool) -> Vec<Outcome> {
    let workers = if parallel {
        thread::available_parallelism().map_or(1, |n| n.get())
    } else {
        1
    };
    if workers <= 1 || rows.len() < 2 {
        return rows.iter().map(|r| process(r, budget)).collect();
    }
    let chunk = rows.len().div_ceil(workers);
    thread::scope(|s| {
        let handles: Vec<_> = rows
            .chunks(chunk)
            .map(|part| {
                s.spawn(move || part.iter().map(|r| process(r, budget)).collect::<Vec<_>>())
            })
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("batch worker panicked"))
            .collect()
    })
}

/// Processes every row; malformed rows are reported and skipped. Exits 0
/// once the file has been read, whatever the row verdicts.
pub fn run(args: &BatchArgs) -> Result<u8> {
    let rows = read_rows(args)?;
    let outcomes = process_all(&rows, args.budget, args.parallel);
    let (mut certified, mut refuted, mut inconclusive, mut errors) = (0, 0, 0, 0);
    for (k, outcome) in outcomes.iter().enumerate() {
        let n = k + 1;
        match outcome {
            Ok(cert) => {
                match cert.verdict {
                    Verdict::CertifiedPaCoset => certified += 1,
                    Verdict::Refuted => refuted += 1,
                    Verdict::Inconclusive => inconclusive += 1,
                }
                match args.format {
                    Format::Json => out!("{}", json!({ "row": n, "certificate": cert.to_json() })),
                    Format::Text => out!(
                        "row {n}: {} ({}) r={} spec={}",
                        cert.verdict,
                        cert.criterion.reason(),
                        cert.polynomial.poly().to_desc_string(),
                        cert.factor_spec
                    ),
                }
            }
            Err(msg) => {
                errors += 1;
                match args.format {
                    Format::Json => out!("{}", json!({ "row": n, "error": msg })),
                    Format::Text => out!("row {n}: error: {msg}"),
                }
            }
        }
    }
    match args.format {
        Format::Json => out!(
            "{}",
            json!({ "summary": {
                "rows": rows.len(), "certified": certified, "refuted": refuted,
                "inconclusive": inconclusive, "errors": errors,
            }})
        ),
        Format::Text => out!(
            "summary: rows={} certified={certified} refuted={refuted} inconclusive={inconclusive} errors={errors}",
            rows.len()
        ),
    }
    Ok(0)
}
