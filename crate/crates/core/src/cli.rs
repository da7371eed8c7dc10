//! Command-line front end. [`run`] parses arguments, computes, and renders;
//! the binary only forwards its output streams and exit code.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use serde_json::{json, Value};

use crate::cubical::{adin_h_from_f, CVector, FVector};
use crate::error::{Error, Result};
use crate::ncpart::{
    enumerate_families, enumerate_nc_with_guard, weight_exponent, weight_k_exponent,
    IntervalFamily, NcPartition, DEFAULT_FAMILY_GUARD, DEFAULT_NC_GUARD,
};
use crate::poly::Poly;
use crate::toric::{
    c_poly_nc_with_guard, csv_row, g_cube_gessel, g_cube_nc, g_cube_table, toric_f_cubical,
    toric_f_from_shelling, FaceComplex, QTable, DEFAULT_Q_GUARD,
};
use crate::verify::{run_suite, Suite, VerifyConfig};

/// Environment variable holding the default `--format`.
pub const FORMAT_ENV: &str = "CUBICAL_TORIC_FORMAT";

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "cubical-toric",
    version,
    about = "Toric f/g polynomials and Adin h-vectors of cubical complexes"
)]
pub struct Cli {
    #[arg(long, value_enum, global = true, env = FORMAT_ENV, default_value = "text")]
    pub format: Format,

    /// Largest d for noncrossing-partition enumeration [default: 14, or 12
    /// when computing Q/C by enumeration].
    #[arg(long, global = true)]
    pub guard_nc: Option<usize>,

    /// Largest d for sweeps over all interval families.
    #[arg(long, global = true, default_value_t = DEFAULT_FAMILY_GUARD)]
    pub guard_family: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// g-polynomials of the cube face lattices, d = -1 .. max-d.
    G {
        #[arg(long, default_value_t = 4)]
        max_d: usize,
        #[arg(long, value_enum, default_value = "recursion")]
        method: MethodArg,
    },
    /// One row Q_(d,0) .. Q_(d,d+1).
    Q {
        #[arg(long)]
        d: usize,
        /// Compute by weighted enumeration of NC(d) instead of the closed formula.
        #[arg(long)]
        nc: bool,
    },
    /// Shelling contribution C_(d,i,j), optionally recomputed from an interval family.
    C {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        j: usize,
        /// Interval family such as "{[2,3],[4],[6,1]}".
        #[arg(long)]
        family: Option<String>,
    },
    /// Noncrossing partitions and interval families.
    #[command(subcommand)]
    Nc(NcCommand),
    /// Short, long and normalized Adin h-vectors of an f-vector.
    Adin {
        /// Face counts f_0,..,f_d, e.g. "8,12,6".
        #[arg(long)]
        f: String,
    },
    /// Toric f-polynomial of a cubical complex.
    ToricF {
        #[command(flatten)]
        source: ToricSource,
        /// Dimension for --cvector.
        #[arg(long)]
        d: Option<usize>,
    },
    /// Run an invariant suite; exits 1 on any failure.
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long)]
        max_d: Option<usize>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Recursion,
    Gessel,
    Nc,
    All,
}

#[derive(Subcommand, Debug)]
pub enum NcCommand {
    /// All of NC(d).
    List {
        #[arg(long)]
        d: usize,
    },
    /// The involution alpha.
    Alpha {
        #[arg(long)]
        d: Option<usize>,
        #[arg(long)]
        partition: String,
    },
    /// Weight exponents of a partition: wt_k for every k, or one family or k.
    Weights {
        #[arg(long)]
        d: Option<usize>,
        #[arg(long)]
        partition: String,
        #[arg(long, conflicts_with = "k")]
        family: Option<String>,
        #[arg(long)]
        k: Option<usize>,
    },
    /// All interval families on [1,d].
    Families {
        #[arg(long)]
        d: usize,
    },
    /// The dual family S' of an interval family.
    Beta {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        family: String,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct ToricSource {
    /// Face counts f_0,..,f_d.
    #[arg(long)]
    f: Option<String>,
    /// c-vector file with lines "i j count" (and "d N" unless --d is given).
    #[arg(long)]
    cvector: Option<PathBuf>,
    /// Face complex JSON file.
    #[arg(long)]
    complex: Option<PathBuf>,
    /// The solid N-cube.
    #[arg(long)]
    cube: Option<usize>,
    /// The boundary of the N-cube.
    #[arg(long)]
    cube_boundary: Option<usize>,
}

/// Rendered output of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(&cli),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                Outcome {
                    stdout: String::new(),
                    stderr: text,
                    code,
                }
            } else {
                Outcome {
                    stdout: text,
                    stderr: String::new(),
                    code,
                }
            }
        }
    }
}

/// Runs an already parsed command.
pub fn execute(cli: &Cli) -> Outcome {
    match dispatch(cli) {
        Ok(out) => out,
        Err(e) => Outcome {
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
            code: EXIT_USAGE,
        },
    }
}

fn ok(stdout: String) -> Outcome {
    Outcome {
        stdout,
        stderr: String::new(),
        code: EXIT_OK,
    }
}

fn dispatch(cli: &Cli) -> Result<Outcome> {
    let fmt = cli.format;
    let nc_guard = cli.guard_nc.unwrap_or(DEFAULT_NC_GUARD);
    let q_guard = cli.guard_nc.unwrap_or(DEFAULT_Q_GUARD);
    match &cli.command {
        Command::G { max_d, method } => g_table(*max_d, *method, nc_guard, fmt).map(ok),
        Command::Q { d, nc } => {
            let table = if *nc {
                QTable::compute_nc(*d, q_guard)?
            } else {
                QTable::compute(*d)
            };
            Ok(ok(match fmt {
                Format::Text => table.to_string(),
                Format::Json => json_line(&table.to_json()),
                Format::Csv => table.to_csv(),
            }))
        }
        Command::C { d, i, j, family } => c_command(*d, *i, *j, family.as_deref(), q_guard, fmt),
        Command::Nc(sub) => nc_command(sub, nc_guard, cli.guard_family, fmt).map(ok),
        Command::Adin { f } => adin_command(f, fmt).map(ok),
        Command::ToricF { source, d } => toric_command(source, *d, fmt).map(ok),
        Command::Verify { suite, max_d } => {
            let suite: Suite = suite.parse()?;
            let config = VerifyConfig {
                max_d: *max_d,
                nc_guard,
                family_guard: cli.guard_family,
            };
            let report = run_suite(suite, &config)?;
            let stdout = match fmt {
                Format::Text => report.to_string(),
                Format::Json => json_line(&report.to_json()),
                Format::Csv => report.to_csv(),
            };
            Ok(Outcome {
                stdout,
                stderr: format!("wall time: {:.3}s\n", report.wall_time.as_secs_f64()),
                code: if report.passed() {
                    EXIT_OK
                } else {
                    EXIT_VERIFY
                },
            })
        }
    }
}

fn json_line(v: &Value) -> String {
    format!("{v}\n")
}

fn g_table(max_d: usize, method: MethodArg, nc_guard: usize, fmt: Format) -> Result<String> {
    let methods: Vec<&str> = match method {
        MethodArg::Recursion => vec!["recursion"],
        MethodArg::Gessel => vec!["gessel"],
        MethodArg::Nc => vec!["nc"],
        MethodArg::All => vec!["recursion", "gessel", "nc"],
    };
    let recursion = g_cube_table(max_d);
    // Row d = -1 is the empty complex, g = 1 by convention.
    let mut rows: Vec<(i64, Vec<Poly>)> = vec![(-1, vec![Poly::one(); methods.len()])];
    for (d, g_rec) in recursion.iter().enumerate() {
        let row = methods
            .iter()
            .map(|&m| match m {
                "recursion" => Ok(g_rec.clone()),
                "gessel" => Ok(g_cube_gessel(d)),
                _ => g_cube_nc(d, nc_guard),
            })
            .collect::<Result<Vec<_>>>()?;
        rows.push((d as i64, row));
    }
    Ok(match fmt {
        Format::Text => {
            let mut out = format!(
                "d | {}\n",
                methods
                    .iter()
                    .map(|m| format!("g(L_d) [{m}]"))
                    .collect::<Vec<_>>()
                    .join(" | ")
            );
            if methods.len() == 1 {
                out = "d | g(L_d)\n".to_string();
            }
            for (d, row) in &rows {
                let cells: Vec<String> = row.iter().map(Poly::to_string).collect();
                let _ = writeln!(out, "{d} | {}", cells.join(" | "));
            }
            out
        }
        Format::Json => {
            let rows: Vec<Value> = rows
                .iter()
                .map(|(d, row)| {
                    let mut obj = serde_json::Map::new();
                    obj.insert("d".into(), json!(d));
                    for (m, p) in methods.iter().zip(row) {
                        obj.insert((*m).into(), p.to_json());
                    }
                    Value::Object(obj)
                })
                .collect();
            json_line(&json!({ "g": rows }))
        }
        Format::Csv => rows
            .iter()
            .flat_map(|(d, row)| {
                methods
                    .iter()
                    .zip(row)
                    .map(move |(m, p)| format!("{d},{m},{}\n", csv_row(p)))
            })
            .collect(),
    })
}

fn c_command(
    d: usize,
    i: usize,
    j: usize,
    family: Option<&str>,
    guard: usize,
    fmt: Format,
) -> Result<Outcome> {
    let formula = QTable::compute(d).c_poly(i, j)?;
    let enumerated = match family {
        Some(text) => {
            let s = IntervalFamily::parse(d, text)?;
            if s.is_empty() || s.is_star() || (s.interval_count(), s.uncovered_count()) != (i, j) {
                return Err(Error::InvalidFamily(format!(
                    "{s} does not have type (i,j) = ({i},{j})"
                )));
            }
            Some((s.clone(), c_poly_nc_with_guard(&s, guard)?))
        }
        None => None,
    };
    let agree = enumerated.as_ref().is_none_or(|(_, p)| *p == formula);
    let stdout = match fmt {
        Format::Text => {
            let mut out = format!("C({d},{i},{j}) = {formula}\n");
            if let Some((s, p)) = &enumerated {
                let _ = writeln!(out, "sum over NC({d}) with S = {s}: {p}");
                let _ = writeln!(out, "agree: {}", if agree { "yes" } else { "no" });
            }
            out
        }
        Format::Json => {
            let mut v = json!({ "d": d, "i": i, "j": j, "c": formula.to_json() });
            if let Some((s, p)) = &enumerated {
                v["family"] = json!(s.to_string());
                v["enumerated"] = p.to_json();
                v["agree"] = json!(agree);
            }
            json_line(&v)
        }
        Format::Csv => {
            let mut out = csv_row(&formula) + "\n";
            if let Some((_, p)) = &enumerated {
                out += &(csv_row(p) + "\n");
            }
            out
        }
    };
    Ok(Outcome {
        stdout,
        stderr: String::new(),
        code: if agree { EXIT_OK } else { EXIT_VERIFY },
    })
}

fn parse_partition(text: &str, d: Option<usize>) -> Result<NcPartition> {
    let pi = NcPartition::parse(text)?;
    if let Some(d) = d {
        if pi.d() != d {
            return Err(Error::DimensionMismatch {
                left: pi.d(),
                right: d,
            });
        }
    }
    Ok(pi)
}

fn quote_csv(cell: &str) -> String {
    if cell.contains(',') {
        format!("\"{cell}\"")
    } else {
        cell.to_string()
    }
}

fn string_list(items: Vec<String>, fmt: Format) -> String {
    match fmt {
        Format::Text => items.iter().map(|s| format!("{s}\n")).collect(),
        Format::Csv => items
            .iter()
            .map(|s| format!("{}\n", quote_csv(s)))
            .collect(),
        Format::Json => json_line(&json!(items)),
    }
}

fn nc_command(
    cmd: &NcCommand,
    nc_guard: usize,
    family_guard: usize,
    fmt: Format,
) -> Result<String> {
    match cmd {
        NcCommand::List { d } => {
            let parts = enumerate_nc_with_guard(*d, nc_guard)?;
            Ok(string_list(
                parts.iter().map(NcPartition::to_string).collect(),
                fmt,
            ))
        }
        NcCommand::Alpha { d, partition } => {
            let pi = parse_partition(partition, *d)?;
            Ok(string_list(vec![pi.alpha().to_string()], fmt))
        }
        NcCommand::Families { d } => {
            let families = enumerate_families(*d, family_guard)?;
            Ok(string_list(
                families.iter().map(IntervalFamily::to_string).collect(),
                fmt,
            ))
        }
        NcCommand::Beta { d, family } => {
            let s = IntervalFamily::parse(*d, family)?;
            Ok(string_list(vec![s.beta().to_string()], fmt))
        }
        NcCommand::Weights {
            d,
            partition,
            family,
            k,
        } => {
            let pi = parse_partition(partition, *d)?;
            let d = pi.d();
            let rows: Vec<(String, usize)> = match (family, k) {
                (Some(text), _) => {
                    let s = IntervalFamily::parse(d, text)?;
                    vec![(s.to_string(), weight_exponent(&pi, &s)?)]
                }
                (None, Some(k)) => vec![(format!("k={k}"), weight_k_exponent(&pi, *k)?)],
                (None, None) => (0..=d + 1)
                    .map(|k| Ok((format!("k={k}"), weight_k_exponent(&pi, k)?)))
                    .collect::<Result<_>>()?,
            };
            Ok(match fmt {
                Format::Text => rows
                    .iter()
                    .map(|(label, e)| {
                        format!(
                            "{label}: {}\n",
                            Poly::monomial(BigRational::from_integer(1.into()), *e)
                        )
                    })
                    .collect(),
                Format::Csv => rows
                    .iter()
                    .map(|(label, e)| format!("{},{e}\n", quote_csv(label)))
                    .collect(),
                Format::Json => {
                    let weights: Vec<Value> = rows
                        .iter()
                        .map(|(label, e)| json!({ "weight": label, "exponent": e }))
                        .collect();
                    json_line(&json!({ "partition": pi.to_string(), "weights": weights }))
                }
            })
        }
    }
}

fn rationals(v: &[BigRational]) -> Vec<String> {
    v.iter()
        .map(|r| {
            if r.is_integer() {
                r.to_integer().to_string()
            } else {
                r.to_string()
            }
        })
        .collect()
}

fn adin_command(f: &str, fmt: Format) -> Result<String> {
    let fv = FVector::parse(f)?;
    let h = adin_h_from_f(&fv)?;
    let short: Vec<String> = h.short_h.iter().map(ToString::to_string).collect();
    let long: Vec<String> = h.long_h.iter().map(ToString::to_string).collect();
    let normalized = rationals(&h.normalized);
    Ok(match fmt {
        Format::Text => format!(
            "short h: {}\nlong h: {}\nnormalized h: {}\n",
            short.join(", "),
            long.join(", "),
            normalized.join(", ")
        ),
        Format::Csv => format!(
            "{}\n{}\n{}\n",
            short.join(","),
            long.join(","),
            normalized.join(",")
        ),
        Format::Json => {
            let norm: Vec<Value> = h
                .normalized
                .iter()
                .map(crate::poly::rational_to_json)
                .collect();
            json_line(&json!({
                "d": h.d,
                "f": fv.to_json(),
                "short_h": h.short_h.iter().map(|x| crate::poly::rational_to_json(&BigRational::from_integer(x.clone()))).collect::<Vec<_>>(),
                "long_h": h.long_h.iter().map(|x| crate::poly::rational_to_json(&BigRational::from_integer(x.clone()))).collect::<Vec<_>>(),
                "normalized": norm,
            }))
        }
    })
}

fn toric_command(src: &ToricSource, d: Option<usize>, fmt: Format) -> Result<String> {
    if d.is_some() && src.cvector.is_none() {
        return Err(Error::Parse("--d only applies to --cvector".into()));
    }
    let f = if let Some(text) = &src.f {
        toric_f_cubical(&FVector::parse(text)?)
    } else if let Some(path) = &src.cvector {
        toric_f_from_shelling(&CVector::parse(&std::fs::read_to_string(path)?, d)?)?
    } else if let Some(path) = &src.complex {
        let value: Value = serde_json::from_str(&std::fs::read_to_string(path)?)?;
        FaceComplex::from_json(&value)?.toric_f()?
    } else if let Some(n) = src.cube {
        FaceComplex::cube(n)?.toric_f()?
    } else if let Some(n) = src.cube_boundary {
        FaceComplex::cube_boundary(n)?.toric_f()?
    } else {
        return Err(Error::Parse("no input given".into()));
    };
    Ok(match fmt {
        Format::Text => format!("{f}\n"),
        Format::Csv => csv_row(&f) + "\n",
        Format::Json => json_line(&json!({ "f": f.to_json() })),
    })
}
