use std::collections::BTreeMap;
use std::fmt::Display;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use mapcount::arrays::{check_full, check_full_where_occupied, SubstructureGamma, SubstructureOmega};
use mapcount::combinatorics::{BinomialPoly, CycleCountVector, MonomialPoly};
use mapcount::transforms::{irreducible_closure, Closure};
use mapcount::{brute, formulas, verify, Error};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "mapcount", version, about = "Genus-indexed counts of one- and two-vertex maps")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Basis {
    Monomial,
    Binomial,
}

#[derive(Clone, Copy, ValueEnum)]
enum SeriesMethod {
    Formula,
    Simplified,
    Brute,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Formula,
    Brute,
}

#[derive(clap::Args)]
struct SeriesOpts {
    /// Tabulate by genus instead of by number of faces.
    #[arg(long)]
    by_genus: bool,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Basis for the face-count series; ignored with --by-genus.
    #[arg(long, value_enum, default_value = "monomial")]
    basis: Basis,
}

#[derive(Subcommand)]
enum Command {
    /// One-vertex maps with q edges.
    Hz {
        #[arg(long)]
        q: usize,
        #[arg(long, value_enum, default_value = "formula")]
        method: Method,
        #[command(flatten)]
        opts: SeriesOpts,
    },
    /// Two-vertex maps with vertex degrees 2q1+s and 2q2+s and s edges between the vertices.
    Gs {
        #[arg(long)]
        q1: usize,
        #[arg(long)]
        q2: usize,
        #[arg(long)]
        s: usize,
        #[arg(long, value_enum, default_value = "formula")]
        method: SeriesMethod,
        #[command(flatten)]
        opts: SeriesOpts,
    },
    /// Proper vertical arrays v(K, R1, R2, s).
    Vertical {
        #[arg(long = "K")]
        k: usize,
        #[arg(long = "R1")]
        r1: usize,
        #[arg(long = "R2")]
        r2: usize,
        #[arg(long)]
        s: usize,
        #[arg(long, value_enum, default_value = "formula")]
        method: Method,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// T(Gamma) for a substructure given as JSON.
    CountGamma {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long, value_enum, default_value = "formula")]
        method: Method,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// T(Omega) for a substructure given as JSON.
    CountOmega {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long, value_enum, default_value = "formula")]
        method: Method,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Compare closed forms and transforms with the exhaustive oracles.
    Verify {
        #[arg(long, default_value = "all", value_parser = clap::builder::PossibleValuesParser::new(verify::SUITES))]
        suite: String,
        #[arg(long, default_value_t = 4)]
        max_d: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

enum Failure {
    Usage(String),
    Mismatch(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            // an inexact division or a parity break means a formula disagrees with itself
            Error::NonIntegral(_) | Error::Parity(_) => Failure::Mismatch(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

fn csv<K: Display, V: Display>(header: &str, rows: impl IntoIterator<Item = (K, V)>) -> String {
    let mut out = format!("{header}\n");
    for (k, v) in rows {
        out.push_str(&format!("{k},{v}\n"));
    }
    out
}

fn json_line(v: &Value) -> String {
    format!("{v}\n")
}

/// Either the face-count series in the requested basis or the genus table.
fn render_series(
    counts: &CycleCountVector,
    vertices: usize,
    opts: &SeriesOpts,
) -> Result<String, Failure> {
    if opts.by_genus {
        let table = formulas::genus_counts(counts, vertices, counts.d())?;
        return Ok(match opts.format {
            Format::Csv => csv("genus,count", &table),
            Format::Json => {
                let m: BTreeMap<String, String> =
                    table.iter().map(|(g, c)| (g.to_string(), c.to_string())).collect();
                json_line(&json!({ "genus": m }))
            }
        });
    }
    let mono: MonomialPoly = counts.to_monomial();
    Ok(match (opts.basis, opts.format) {
        (Basis::Monomial, Format::Json) => json_line(&mono.to_json()?),
        (Basis::Monomial, Format::Csv) => csv("power,coefficient", mono.integer_coeffs()?),
        (Basis::Binomial, f) => {
            let bin: BinomialPoly = mono.to_binomial()?;
            match f {
                Format::Json => json_line(&bin.to_json()),
                Format::Csv => csv("k,coefficient", bin.terms()),
            }
        }
    })
}

fn render_count(count: impl Display, format: Format) -> String {
    match format {
        Format::Csv => format!("count\n{count}\n"),
        Format::Json => json_line(&json!({ "count": count.to_string() })),
    }
}

fn read_spec<T: serde::de::DeserializeOwned>(path: &PathBuf) -> Result<T, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

/// Closed form for any substructure the formulas reach: simplify the arrows
/// first, then use the full-condition formula or the arrow-free one.
fn gamma_by_formula(g: &SubstructureGamma) -> Result<String, Failure> {
    let h = match irreducible_closure(g)? {
        Closure::CycleDetected => return Ok("0".into()),
        Closure::Irreducible(h) => h,
    };
    if check_full(&h) {
        Ok(formulas::gamma_count_formula(&h)?.to_string())
    } else if h.phi().is_empty() && check_full_where_occupied(&h) {
        Ok(formulas::gamma_count_formula_noarrows(&h)?.to_string())
    } else {
        Err(Failure::Usage(
            "no closed form applies: the substructure fails the full condition after simplifying its arrows"
                .into(),
        ))
    }
}

fn run(cli: Cli) -> Result<String, Failure> {
    match cli.command {
        Command::Hz { q, method, opts } => {
            let counts = match method {
                Method::Formula => formulas::hz_counts(q)?,
                Method::Brute => brute::hz_counts_brute(q)?,
            };
            render_series(&counts, 1, &opts)
        }
        Command::Gs { q1, q2, s, method, opts } => {
            let d = q1 + q2 + s;
            let counts = match method {
                SeriesMethod::Formula => formulas::gs_counts(q1, q2, s)?,
                SeriesMethod::Simplified => {
                    formulas::counts_from_series(d, &formulas::gs_series_simplified(q1, q2, s)?)?
                }
                SeriesMethod::Brute => brute::gs_counts_brute(q1, q2, s)?,
            };
            render_series(&counts, 2, &opts)
        }
        Command::Vertical { k, r1, r2, s, method, format } => {
            let v = match method {
                Method::Formula => formulas::vertical_count_formula(k, r1, r2, s)?,
                Method::Brute => brute::vertical_array_count_brute(k, r1, r2, s)?,
            };
            Ok(render_count(v, format))
        }
        Command::CountGamma { spec, method, format } => {
            let g: SubstructureGamma = read_spec(&spec)?;
            let t = match method {
                Method::Formula => gamma_by_formula(&g)?,
                Method::Brute => brute::gamma_count_brute(&g)?.to_string(),
            };
            Ok(render_count(t, format))
        }
        Command::CountOmega { spec, method, format } => {
            let o: SubstructureOmega = read_spec(&spec)?;
            let t = match method {
                Method::Formula => formulas::omega_count_formula(&o)?,
                Method::Brute => brute::omega_count_brute(&o)?,
            };
            Ok(render_count(t, format))
        }
        Command::Verify { suite, max_d, seed } => {
            let reports = verify::run_suite(&suite, max_d, seed)?;
            let mut out = String::new();
            for r in &reports {
                out.push_str(&format!("{r}\n"));
            }
            let failed = reports.iter().filter(|r| !r.passed()).count();
            if failed > 0 {
                print!("{out}");
                return Err(Failure::Mismatch(format!("{failed} of {} sweeps failed", reports.len())));
            }
            out.push_str(&format!("all {} sweeps passed\n", reports.len()));
            Ok(out)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Mismatch(msg)) => {
            eprintln!("mismatch: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
