//! Command-line front end. [`run`] parses arguments, writes the report and
//! returns the process exit code: `0` on success, `1` on domain errors or a
//! failed verification, `2` on usage errors.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::classify::{classify_table, cross_check};
use crate::error::Error;
use crate::isotope::canonical_decomposition;
use crate::linear::{census, enumerate_linear, small_order_census, CensusReport};
use crate::oracle::{classify_by_oracle, parastrophe, symmetry_group};
use crate::symmetry::Sigma;
use crate::table::CayleyTable;
use crate::verify::{run_verification, DEFAULT_SEED};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Table,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(
    name = "parasym",
    version,
    about = "Classify finite quasigroups by their parastrophic symmetry groups"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Validate a Cayley table file (`-` reads standard input).
    Check { file: PathBuf },
    /// Print a parastrophe of a table.
    ///
    /// s=(1 2), l=(1 3), r=(2 3), sl=(1 3 2), sr=(1 2 3); the entry of
    /// position i of each triple x1·x2=x3 moves to position σ(i).
    Parastrophe {
        file: PathBuf,
        #[arg(long, value_parser = parse_sigma)]
        sigma: Sigma,
    },
    /// Symmetry group computed from the parastrophes.
    Sym { file: PathBuf },
    /// Classify a group isotope from its canonical decomposition.
    Classify { file: PathBuf },
    /// Canonical decomposition x·y = α(x) + a + β(y) with the given zero.
    Decompose {
        file: PathBuf,
        /// Label of the element used as the neutral element.
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        zero: i64,
    },
    /// Canonical linear isotopes of Z_M with their classes.
    Enumerate {
        #[arg(long)]
        modulus: usize,
    },
    /// Census of linear isotopes of prime order P > 3.
    Census {
        #[arg(long)]
        prime: usize,
    },
    /// Census of all quasigroups of order 2 or 3.
    SmallCensus {
        #[arg(long, value_parser = clap::value_parser!(u8).range(2..=3))]
        order: u8,
    },
    /// Cross-check the classifier against the oracle on a seeded corpus.
    Verify {
        #[arg(long)]
        max_order: usize,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

fn parse_sigma(s: &str) -> Result<Sigma, String> {
    s.parse::<Sigma>().map_err(|e| e.to_string())
}

enum Failure {
    Domain(String),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

fn read_table(path: &Path) -> Result<(CayleyTable, Vec<i64>), Failure> {
    let mut text = String::new();
    if path.as_os_str() == "-" {
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Failure::Domain(format!("reading standard input: {e}")))?;
    } else {
        text = std::fs::read_to_string(path)
            .map_err(|e| Failure::Domain(format!("reading {}: {e}", path.display())))?;
    }
    Ok(CayleyTable::parse_text(&text)?)
}

fn pretty(value: &serde_json::Value) -> String {
    serde_json::to_string_pretty(value).expect("json values serialize") + "\n"
}

fn no_csv(command: &str) -> Failure {
    Failure::Usage(format!(
        "--format csv is not available for `{command}`; use table or json"
    ))
}

fn census_output(report: &CensusReport, format: Format) -> String {
    match format {
        Format::Table => report.to_text(),
        Format::Json => report.to_json() + "\n",
        Format::Csv => report.to_csv(),
    }
}

fn execute(cli: Cli) -> Result<(String, bool), Failure> {
    let format = cli.format;
    let out = match cli.command {
        Command::Check { file } => {
            let (t, _) = read_table(&file)?;
            let group_isotope = crate::isotope::is_group_isotope(&t);
            match format {
                Format::Table => format!(
                    "ok: Latin square of order {}{}\n",
                    t.order(),
                    if group_isotope { ", group isotope" } else { "" }
                ),
                Format::Json => pretty(&json!({
                    "order": t.order(),
                    "latin": true,
                    "group_isotope": group_isotope,
                })),
                Format::Csv => return Err(no_csv("check")),
            }
        }
        Command::Parastrophe { file, sigma } => {
            let (t, _) = read_table(&file)?;
            let p = parastrophe(&t, sigma);
            match format {
                Format::Table => p.to_text(),
                Format::Json => pretty(&json!({
                    "sigma": sigma.label(),
                    "cycle": sigma.cycle(),
                    "table": p.rows(),
                })),
                Format::Csv => return Err(no_csv("parastrophe")),
            }
        }
        Command::Sym { file } => {
            let (t, _) = read_table(&file)?;
            let g = symmetry_group(&t);
            let class = classify_by_oracle(&t);
            match format {
                Format::Table => format!("symmetry group: {g}\nclass: {class}\n"),
                Format::Json => pretty(&json!({
                    "members": g.members().iter().map(|s| s.label()).collect::<Vec<_>>(),
                    "class": class,
                })),
                Format::Csv => return Err(no_csv("sym")),
            }
        }
        Command::Classify { file } => {
            let (t, _) = read_table(&file)?;
            let report = match classify_table(&t) {
                Ok(r) => r,
                Err(Error::NotGroupIsotope) => {
                    return Err(Failure::Domain(format!(
                        "{} (oracle class: {})",
                        Error::NotGroupIsotope,
                        classify_by_oracle(&t)
                    )))
                }
                Err(e) => return Err(e.into()),
            };
            let check = cross_check(&t);
            match format {
                Format::Table => {
                    let mut s = format!("class: {}\n", report.class);
                    s.push_str(&format!("oracle: {}\n", check.oracle));
                    for (name, value) in &report.checks {
                        s.push_str(&format!("  {name}: {value}\n"));
                    }
                    s.push_str(&format!(
                        "zero independent: {}\n",
                        report.zero_independent.unwrap_or(false)
                    ));
                    if report.literal_asymmetry != (report.class == crate::SymmetryClass::Asymmetric) {
                        s.push_str(&format!(
                            "note: literal asymmetry condition reads {}\n",
                            report.literal_asymmetry
                        ));
                    }
                    s
                }
                Format::Json => serde_json::to_string_pretty(&report).expect("report serializes") + "\n",
                Format::Csv => return Err(no_csv("classify")),
            }
        }
        Command::Decompose { file, zero } => {
            let (t, labels) = read_table(&file)?;
            let z = labels
                .binary_search(&zero)
                .map_err(|_| Failure::Domain(format!("element {zero} does not occur in the table")))?;
            let d = canonical_decomposition(&t, z)?;
            match format {
                Format::Json => {
                    serde_json::to_string_pretty(&d.to_record()).expect("record serializes") + "\n"
                }
                Format::Table => {
                    let mut s = format!(
                        "zero: {}\nfree member a: {}\nalpha: {}\nbeta: {}\ngroup ({}):\n",
                        d.zero,
                        d.a,
                        d.alpha,
                        d.beta,
                        if d.group.is_abelian() { "abelian" } else { "nonabelian" }
                    );
                    s.push_str(&d.group.table().to_text());
                    s
                }
                Format::Csv => return Err(no_csv("decompose")),
            }
        }
        Command::Enumerate { modulus } => {
            let r = enumerate_linear(modulus)?;
            let failed = r.verified == Some(false);
            let text = match format {
                Format::Table => r.to_text(),
                Format::Json => serde_json::to_string_pretty(&r).expect("report serializes") + "\n",
                Format::Csv => r.to_csv(),
            };
            return Ok((text, !failed));
        }
        Command::Census { prime } => census_output(&census(prime)?, format),
        Command::SmallCensus { order } => census_output(&small_order_census(order.into())?, format),
        Command::Verify { max_order, samples, seed } => {
            let r = run_verification(max_order, samples, seed);
            let text = match format {
                Format::Table => {
                    let mut s = format!(
                        "checked {} linear and {} random tables (seed {})\n",
                        r.linear_tables, r.random_tables, r.seed
                    );
                    for f in &r.failures {
                        s.push_str(&format!("FAIL {f}\n"));
                    }
                    s.push_str(if r.passed() { "all agree\n" } else { "disagreements found\n" });
                    s
                }
                Format::Json => serde_json::to_string_pretty(&r).expect("report serializes") + "\n",
                Format::Csv => return Err(no_csv("verify")),
            };
            return Ok((text, r.passed()));
        }
    };
    Ok((out, true))
}

/// Runs the tool with `args` (including the program name).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(rendered.as_bytes())
            } else {
                err.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    match execute(cli) {
        Ok((text, ok)) => {
            let _ = out.write_all(text.as_bytes());
            if ok {
                0
            } else {
                1
            }
        }
        Err(Failure::Domain(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "usage error: {msg}");
            2
        }
    }
}
