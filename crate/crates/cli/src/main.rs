//! `kronecker`: command-line front end for kron-core.

mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use kron_core::character::{kron_oracle_char, kron_oracle_schur, DEFAULT_CHAR_WEIGHT_CAP, DEFAULT_SCHUR_WEIGHT_CAP};
use kron_core::fnm::{atomic_nm, atomic_shift, build_fnm_matrix, degree_bound, face_restrict};
use kron_core::holes::holes_grid;
use kron_core::invariants::run_suite;
use kron_core::kron224::{atomic224, bravyi_check, kron224, kron224_report, reduced_kron_2row, reduced_representative, stable_triple};
use kron_core::lr::{build_lr_matrix, is_totally_unimodular};
use kron_core::quasi::{dilate_sequence, fit_quasipolynomial, required_length, Method};
use kron_core::vecpart::{vp_count, VPMatrix};
use kron_core::{canonical_sort, parse_partition, validate_triple, BigInt, Bounds, KroneckerTriple, Partition, BOUNDS_224};
use serde_json::{json, Value};

use output::{big, triple_json, Failure, Table};

#[derive(Parser)]
#[command(name = "kronecker", version, about = "Exact Kronecker, atomic and reduced Kronecker coefficients")]
struct Cli {
    /// Output format; csv is available for `holes` and `dilate`.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write output to FILE instead of standard output.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
    /// Worker threads for parallel sweeps.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Args)]
struct TripleArgs {
    /// Comma-separated parts of mu.
    #[arg(long, allow_hyphen_values = true)]
    mu: String,
    /// Comma-separated parts of nu.
    #[arg(long, allow_hyphen_values = true)]
    nu: String,
    /// Comma-separated parts of lambda.
    #[arg(long, allow_hyphen_values = true)]
    lam: String,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DilateMethod {
    Kron224,
    Atomic224,
    AtomicNm,
    Oracle,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OracleMethod {
    Char,
    Schur,
}

#[derive(Subcommand)]
enum Command {
    /// Kronecker coefficient of a (2,2,4)-bounded triple, with the seven-term breakdown.
    Kron(TripleArgs),
    /// Atomic Kronecker coefficient; (n, m) in {(2,2), (2,3), (3,3)}.
    Atomic {
        #[command(flatten)]
        triple: TripleArgs,
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        m: usize,
    },
    /// Kronecker coefficient from the character or Schur-expansion oracle.
    Oracle {
        #[command(flatten)]
        triple: TripleArgs,
        #[arg(long, value_enum, default_value_t = OracleMethod::Char)]
        method: OracleMethod,
        #[arg(long)]
        weight_cap: Option<u64>,
    },
    /// The three Bravyi inequalities.
    Bravyi(TripleArgs),
    /// Reduced Kronecker coefficient of three one-row partitions.
    Reduced {
        #[arg(long)]
        lam: u64,
        #[arg(long)]
        mu: u64,
        #[arg(long)]
        nu: u64,
    },
    /// Kronecker and atomic coefficients of a dilated stable triple.
    Stable {
        #[arg(long)]
        u: u64,
        #[arg(long)]
        t: u64,
        #[arg(long)]
        s: u64,
        #[arg(long, default_value_t = 1)]
        k: u64,
    },
    /// Coefficients of the dilations k = 1..kmax, optionally fitted by a quasipolynomial.
    Dilate {
        #[command(flatten)]
        triple: TripleArgs,
        #[arg(long)]
        kmax: u64,
        #[arg(long)]
        fit: bool,
        #[arg(long, value_enum, default_value_t = DilateMethod::Kron224)]
        method: DilateMethod,
        /// Alphabet sizes for `atomic-nm`.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long, default_value_t = 12)]
        max_period: usize,
        /// Defaults to the degree bound of the (n, m) pattern.
        #[arg(long)]
        max_degree: Option<usize>,
        #[arg(long)]
        weight_cap: Option<u64>,
    },
    /// The matrix A_{n,m} of F_{n,m} and its statistics.
    Matrix {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        /// Comma-separated row indices restricted to zero.
        #[arg(long)]
        face: Option<String>,
    },
    /// Vector partition function value of A_{n,m} or a matrix file.
    Vpcount {
        #[arg(long, required_unless_present = "matrix")]
        n: Option<usize>,
        #[arg(long, required_unless_present = "matrix")]
        m: Option<usize>,
        /// JSON file {"rows": [...], "columns": [[...], ...]}.
        #[arg(long, conflicts_with_all = ["n", "m"])]
        matrix: Option<PathBuf>,
        /// Comma-separated right-hand side.
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        #[arg(long)]
        face: Option<String>,
    },
    /// Littlewood-Richardson resultant matrix, rank and total unimodularity.
    Lr {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
    },
    /// Coefficients of all two-row triples of a weight.
    Holes {
        #[arg(long)]
        weight: u64,
    },
    /// Runs the invariant suite of every module.
    Verify {
        /// Largest weight of exhaustive triple sweeps.
        #[arg(long, default_value_t = 12)]
        weight: u64,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            return output::report(Failure::Usage(format!("--threads: {e}")));
        }
    }
    let result = run(&cli.command, cli.format).and_then(|(doc, passed)| {
        output::emit(&doc, cli.format, cli.out.as_deref())?;
        Ok(passed)
    });
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(f) => output::report(f),
    }
}

enum Doc {
    Json(Value),
    Table(Table),
}

type Outcome = Result<(Doc, bool), Failure>;

fn ok_json(v: Value) -> Outcome {
    Ok((Doc::Json(v), true))
}

fn partition(flag: &str, text: &str) -> Result<Partition, Failure> {
    parse_partition(text).map_err(|e| Failure::domain(e, Some(flag)))
}

/// Parses a triple; `None` takes the bounds from the given lengths.
fn triple(args: &TripleArgs, bounds: Option<Bounds>) -> Result<KroneckerTriple, Failure> {
    let (mu, nu, lam) = (partition("--mu", &args.mu)?, partition("--nu", &args.nu)?, partition("--lam", &args.lam)?);
    let bounds = bounds.unwrap_or_else(|| Bounds::new(mu.len().max(1), nu.len().max(1), lam.len().max(1)));
    Ok(validate_triple(&mu, &nu, &lam, bounds)?)
}

fn int_list(flag: &str, text: &str) -> Result<Vec<i64>, Failure> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<i64>().map_err(|_| Failure::Usage(format!("{flag}: invalid integer {s:?}"))))
        .collect()
}

fn rows_list(face: &Option<String>) -> Result<Vec<usize>, Failure> {
    let Some(text) = face else { return Ok(Vec::new()) };
    int_list("--face", text)?
        .into_iter()
        .map(|v| usize::try_from(v).map_err(|_| Failure::Usage(format!("--face: negative row {v}"))))
        .collect()
}

fn json_only(format: Format, command: &str) -> Result<(), Failure> {
    if format == Format::Csv {
        return Err(Failure::Usage(format!("--format csv is not available for `{command}`")));
    }
    Ok(())
}

fn matrix_json(a: &VPMatrix) -> Value {
    json!({ "rows": a.rows(), "columns": a.columns() })
}

fn run(command: &Command, format: Format) -> Outcome {
    match command {
        Command::Kron(args) => {
            json_only(format, "kron")?;
            let r = kron224_report::<BigInt>(&triple(args, Some(BOUNDS_224))?)?;
            let terms: Vec<Value> = r
                .terms
                .iter()
                .map(|c| {
                    json!({
                        "term": { "sign": c.term.sign, "b": big(&c.term.b), "a": big(&c.term.a) },
                        "gated": c.gated,
                        "ps22_args": [big(&c.ps22_args.0), big(&c.ps22_args.1)],
                        "value": big(&c.value),
                    })
                })
                .collect();
            ok_json(json!({ "triple": triple_json(&r.triple), "normalized": r.normalized, "g": big(&r.g), "terms": terms }))
        }
        Command::Atomic { triple: args, n, m } => {
            json_only(format, "atomic")?;
            let (t, value): (KroneckerTriple, BigInt) = if (*n, *m) == (2, 2) {
                let t = canonical_sort(&triple(args, Some(BOUNDS_224))?)?.triple;
                let v = atomic224(&t)?;
                (t, v)
            } else {
                let t = triple(args, Some(Bounds::nm(*n, *m)))?;
                let v = atomic_nm(*n, *m, &t)?;
                (t, v)
            };
            let shift = atomic_shift(*n, *m, &t)?;
            ok_json(json!({
                "triple": triple_json(&t),
                "n": n,
                "m": m,
                "shift": { "rows": shift.rows, "b": shift.b },
                "atomic": big(&value),
            }))
        }
        Command::Oracle { triple: args, method, weight_cap } => {
            json_only(format, "oracle")?;
            let t = triple(args, None)?;
            let (name, g) = match method {
                OracleMethod::Char => ("char", kron_oracle_char(&t, weight_cap.unwrap_or(DEFAULT_CHAR_WEIGHT_CAP))?),
                OracleMethod::Schur => {
                    let (n, m) = (t.mu().len().max(1), t.nu().len().max(1));
                    let e = kron_oracle_schur(t.lam(), n, m, weight_cap.unwrap_or(DEFAULT_SCHUR_WEIGHT_CAP))?;
                    ("schur", e.get(t.mu(), t.nu()))
                }
            };
            ok_json(json!({ "triple": triple_json(&t), "method": name, "g": big(&g) }))
        }
        Command::Bravyi(args) => {
            json_only(format, "bravyi")?;
            let t = canonical_sort(&triple(args, Some(BOUNDS_224))?)?.triple;
            let r = bravyi_check(&t)?;
            ok_json(json!({
                "triple": triple_json(&t),
                "first": r.first,
                "second": r.second,
                "third": r.third,
                "all": r.all(),
            }))
        }
        Command::Reduced { lam, mu, nu } => {
            json_only(format, "reduced")?;
            let value: BigInt = reduced_kron_2row(*lam, *mu, *nu);
            let rep = reduced_representative(*lam, *mu, *nu);
            let stable: BigInt = kron224(&rep)?;
            ok_json(json!({
                "lam2": lam,
                "mu2": mu,
                "nu2": nu,
                "value": big(&value),
                "representative": triple_json(&rep),
                "kron": big(&stable),
            }))
        }
        Command::Stable { u, t, s, k } => {
            json_only(format, "stable")?;
            let tr = stable_triple(*u, *t, *s, *k)?;
            let g: BigInt = kron224(&tr)?;
            let a: BigInt = atomic224(&tr)?;
            ok_json(json!({ "u": u, "t": t, "s": s, "k": k, "triple": triple_json(&tr), "kron": big(&g), "atomic": big(&a) }))
        }
        Command::Dilate { triple: args, kmax, fit, method, n, m, max_period, max_degree, weight_cap } => {
            let (t, method, pattern) = match method {
                DilateMethod::Kron224 => (canonical_sort(&triple(args, Some(BOUNDS_224))?)?.triple, Method::Kron224, (2, 2)),
                DilateMethod::Atomic224 => (canonical_sort(&triple(args, Some(BOUNDS_224))?)?.triple, Method::Atomic224, (2, 2)),
                DilateMethod::AtomicNm => {
                    let (Some(n), Some(m)) = (n, m) else {
                        return Err(Failure::Usage("--method atomic-nm needs --n and --m".into()));
                    };
                    (triple(args, Some(Bounds::nm(*n, *m)))?, Method::AtomicNm, (*n, *m))
                }
                DilateMethod::Oracle => {
                    let t = triple(args, None)?;
                    let pattern = (t.mu().len().max(2), t.nu().len().max(2));
                    let cap = weight_cap.unwrap_or(DEFAULT_CHAR_WEIGHT_CAP);
                    (t, Method::Oracle { weight_cap: cap }, pattern)
                }
            };
            let seq = dilate_sequence(&t, *kmax, method)?;
            if format == Format::Csv {
                let rows = seq.iter().enumerate().map(|(i, v)| vec![(i + 1).to_string(), v.to_string()]).collect();
                return Ok((Doc::Table(Table { header: vec!["k".into(), "value".into()], rows }), true));
            }
            let mut doc = json!({
                "triple": triple_json(&t),
                "method": method_name(method),
                "sequence": seq.iter().map(big).collect::<Vec<_>>(),
            });
            if *fit {
                let degree = match max_degree {
                    Some(d) => *d,
                    None => degree_bound(pattern.0, pattern.1)?,
                };
                // longest period the sequence can validate
                let period = (1..=*max_period).rev().find(|&p| required_length(p, degree) <= seq.len()).unwrap_or(*max_period);
                let q = fit_quasipolynomial(&seq, period, degree)?;
                doc["fit"] = serde_json::to_value(&q).expect("serializable");
            }
            ok_json(doc)
        }
        Command::Matrix { n, m, face } => {
            json_only(format, "matrix")?;
            let full = build_fnm_matrix(*n, *m)?;
            let rows = rows_list(face)?;
            let a = if rows.is_empty() { full } else { face_restrict(&full, &rows)? };
            let degree = if rows.is_empty() { degree_bound(*n, *m)? } else { a.col_count() - a.rank() };
            let mut doc = matrix_json(&a);
            doc["n"] = json!(n);
            doc["m"] = json!(m);
            doc["face"] = json!(rows);
            doc["stats"] = json!({
                "rows": a.row_count(),
                "cols": a.col_count(),
                "max_entry": a.max_entry(),
                "rank": a.rank(),
                "degree_bound": degree,
            });
            ok_json(doc)
        }
        Command::Vpcount { n, m, matrix, b, face } => {
            json_only(format, "vpcount")?;
            let a = match (matrix, n, m) {
                (Some(path), _, _) => {
                    let text = std::fs::read_to_string(path)
                        .map_err(|e| Failure::Usage(format!("--matrix: cannot read {}: {e}", path.display())))?;
                    serde_json::from_str::<VPMatrix>(&text)
                        .map_err(|e| Failure::Domain { name: "InvalidMatrix", message: e.to_string() })?
                }
                (None, Some(n), Some(m)) => build_fnm_matrix(*n, *m)?,
                _ => return Err(Failure::Usage("give --matrix or both --n and --m".into())),
            };
            let rows = rows_list(face)?;
            let a = if rows.is_empty() { a } else { face_restrict(&a, &rows)? };
            let rhs = int_list("--b", b)?;
            let count: BigInt = vp_count(&a, &rhs)?;
            ok_json(json!({ "rows": a.rows(), "b": rhs, "count": big(&count) }))
        }
        Command::Lr { n, m } => {
            json_only(format, "lr")?;
            let a = build_lr_matrix(*n, *m)?;
            let rank = a.rank();
            let tu = match is_totally_unimodular(&a) {
                Ok(v) => json!(v),
                Err(kron_core::Error::TooLargeForExhaustiveCheck(_)) => Value::Null,
                Err(e) => return Err(e.into()),
            };
            ok_json(json!({
                "n": n,
                "m": m,
                "rows": a.rows(),
                "columns": a.columns(),
                "rank": rank,
                "corank": n * m - rank,
                "totally_unimodular": tu,
            }))
        }
        Command::Holes { weight } => {
            let grid = holes_grid(*weight);
            if format == Format::Csv {
                let rows = grid
                    .points
                    .iter()
                    .map(|p| vec![p.i.to_string(), p.j.to_string(), p.k.to_string(), p.g.to_string()])
                    .collect();
                let header = ["i", "j", "k", "g"].map(String::from).to_vec();
                return Ok((Doc::Table(Table { header, rows }), true));
            }
            let points: Vec<Value> =
                grid.points.iter().map(|p| json!({ "i": p.i, "j": p.j, "k": p.k, "g": big(&p.g) })).collect();
            ok_json(json!({ "weight": weight, "points": points }))
        }
        Command::Verify { weight } => {
            json_only(format, "verify")?;
            let checks = run_suite(*weight);
            let passed = checks.iter().all(|c| c.passed);
            let list: Vec<Value> =
                checks.iter().map(|c| json!({ "name": c.name, "passed": c.passed, "detail": c.detail })).collect();
            Ok((Doc::Json(json!({ "weight": weight, "passed": passed, "checks": list })), passed))
        }
    }
}

fn method_name(m: Method) -> &'static str {
    match m {
        Method::Kron224 => "kron224",
        Method::Atomic224 => "atomic224",
        Method::AtomicNm => "atomic-nm",
        Method::Oracle { .. } => "oracle",
    }
}
