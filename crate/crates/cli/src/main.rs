use std::fmt;
use std::path::Path;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use valuta_core::decomposition::{rank_table, RankFamily, RankTable};
use valuta_core::families::classify;
use valuta_core::matroid::mtx::{parse_mtx, to_mtx};
use valuta_core::matroid::{
    enumerate_matroids_with_cap, random_matroid, RandomKind, EXHAUSTIVE_CAP,
};
use valuta_core::verify::{report_json, run_suite, ReferenceValues, Suite};
use valuta_core::{
    decompose, g_invariant, tutte, AlgebraError, DecompositionError, FamilyError, FamilyKind,
    Invariant, InvariantError, Matroid, MatroidDescriptor, MatroidError,
};

#[derive(Parser)]
#[command(
    name = "valuta",
    version,
    about = "Exact valuative invariants of small matroids"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for parallel sections.
    #[arg(long, global = true, value_name = "T")]
    threads: Option<usize>,
}

#[derive(Args)]
struct Input {
    /// A `.mtx` file or a descriptor such as `cuspidal:1,2,2,4`.
    input: String,
}

#[derive(Subcommand)]
enum Command {
    /// Print the matroid in canonical `.mtx` form.
    Show(Input),
    /// Tutte polynomial.
    Tutte(Input),
    /// G-invariant as coefficients of the symbols U[s].
    Ginv(Input),
    /// Excluded-minor class membership with witnesses.
    Classify(Input),
    /// Tutte polynomial as an integer combination over a family basis.
    Decompose {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "cuspidal")]
        basis: Basis,
    },
    /// T-rank and G-rank of a family on one or more strata.
    RankTable {
        #[arg(long, default_value = "all")]
        family: String,
        #[arg(long)]
        n: usize,
        /// All ranks 0..=n when omitted.
        #[arg(long)]
        k: Option<usize>,
        /// Both invariants when omitted.
        #[arg(long, value_enum)]
        invariant: Option<InvariantArg>,
    },
    /// All matroids of a stratum up to isomorphism.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Allow n = 7 (still refused above 7).
        #[arg(long)]
        force_cap_override: bool,
    },
    /// A seeded random matroid.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value = "sparse-paving")]
        kind: String,
    },
    /// Run a self-check suite; exits with status 2 if any item fails.
    Verify {
        /// paper-examples, enumeration, formulas, decomposition or all.
        suite: String,
        /// JSON file replacing the built-in expected values.
        #[arg(long)]
        expected: Option<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Basis {
    Cuspidal,
    ClassU,
    ClassT,
}

impl From<Basis> for FamilyKind {
    fn from(b: Basis) -> Self {
        match b {
            Basis::Cuspidal => FamilyKind::Cuspidal,
            Basis::ClassU => FamilyKind::ClassU,
            Basis::ClassT => FamilyKind::ClassT,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum InvariantArg {
    Tutte,
    Ginv,
}

/// A failure with its exit status.
struct Failure {
    code: u8,
    msg: String,
}

impl Failure {
    fn usage(msg: impl fmt::Display) -> Self {
        Failure {
            code: 1,
            msg: msg.to_string(),
        }
    }
}

macro_rules! module_error {
    ($($ty:ty => $module:literal),* $(,)?) => {
        $(impl From<$ty> for Failure {
            fn from(e: $ty) -> Self {
                Failure::usage(format!("{}: {e}", $module))
            }
        })*
    };
}

module_error! {
    MatroidError => "matroid",
    AlgebraError => "algebra",
    InvariantError => "invariants",
    FamilyError => "families",
    DecompositionError => "decomposition",
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    }
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            if f.code == 2 {
                print!("{}", f.msg);
            } else {
                eprintln!("error: {}", f.msg);
            }
            ExitCode::from(f.code)
        }
    }
}

fn load(input: &str) -> Result<Matroid, Failure> {
    let path = Path::new(input);
    if path.is_file() {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Failure::usage(format!("cannot read {input}: {e}")))?;
        return Ok(parse_mtx(&text)?);
    }
    Ok(input.parse::<MatroidDescriptor>()?.realize()?)
}

fn lines(v: &Value) -> String {
    format!(
        "{}\n",
        serde_json::to_string_pretty(v).expect("JSON values serialize")
    )
}

fn bases_json(m: &Matroid) -> Value {
    let bases: Vec<Vec<usize>> = m.bases().iter().map(|b| b.labels().collect()).collect();
    json!({ "n": m.n(), "k": m.k(), "bases": bases })
}

fn run(cli: &Cli) -> Result<String, Failure> {
    let json = cli.json;
    match &cli.command {
        Command::Show(i) => {
            let m = load(&i.input)?;
            Ok(if json {
                lines(&bases_json(&m))
            } else {
                to_mtx(&m)
            })
        }
        Command::Tutte(i) => {
            let t = tutte(&load(&i.input)?)?;
            Ok(if json {
                lines(&t.to_json())
            } else {
                format!("{t}\n")
            })
        }
        Command::Ginv(i) => {
            let g = g_invariant(&load(&i.input)?)?;
            Ok(if json {
                lines(&g.to_json())
            } else {
                format!("{g}\n")
            })
        }
        Command::Classify(i) => {
            let m = load(&i.input)?;
            let report = classify(&m)?;
            Ok(if json {
                lines(&report.to_json(&m))
            } else {
                report.to_text()
            })
        }
        Command::Decompose { input, basis } => {
            let d = decompose(&load(&input.input)?, (*basis).into())?;
            Ok(if json {
                lines(&d.to_json())
            } else {
                d.to_string()
            })
        }
        Command::RankTable {
            family,
            n,
            k,
            invariant,
        } => {
            let fam: RankFamily = family.parse().map_err(Failure::usage)?;
            let strata: Vec<(usize, usize)> = match k {
                Some(k) if *k > *n => {
                    return Err(Failure::usage(format!("rank {k} exceeds size {n}")))
                }
                Some(k) => vec![(*n, *k)],
                None => (0..=*n).map(|k| (*n, k)).collect(),
            };
            let which = match invariant {
                Some(InvariantArg::Tutte) => vec![Invariant::Tutte],
                Some(InvariantArg::Ginv) => vec![Invariant::GInv],
                None => vec![Invariant::Tutte, Invariant::GInv],
            };
            let table = rank_table(fam, &strata, &which)?;
            Ok(render_table(
                &table,
                json,
                strata.len() == 1 && which.len() == 1,
            ))
        }
        Command::Enumerate {
            n,
            k,
            force_cap_override,
        } => {
            let cap = if *force_cap_override {
                *n
            } else {
                EXHAUSTIVE_CAP
            };
            let all = enumerate_matroids_with_cap(*n, *k, true, cap)?;
            if json {
                let list: Vec<Value> = all.iter().map(bases_json).collect();
                return Ok(lines(
                    &json!({ "n": n, "k": k, "count": all.len(), "matroids": list }),
                ));
            }
            let mut out = format!(
                "# {} matroids with n={n} k={k} up to isomorphism\n",
                all.len()
            );
            for (i, m) in all.iter().enumerate() {
                out.push_str(&format!("# matroid {}\n{}", i + 1, to_mtx(m)));
            }
            Ok(out)
        }
        Command::Random { n, k, seed, kind } => {
            let kind: RandomKind = kind.parse().map_err(Failure::usage)?;
            let m = random_matroid(*n, *k, kind, *seed)?;
            Ok(if json {
                lines(&bases_json(&m))
            } else {
                to_mtx(&m)
            })
        }
        Command::Verify { suite, expected } => verify(suite, expected.as_deref(), json),
    }
}

fn render_table(table: &RankTable, json: bool, single: bool) -> String {
    if json {
        let rows: Vec<Value> = table
            .entries
            .iter()
            .map(|e| json!({ "n": e.n, "k": e.k, "members": e.members, "t_rank": e.t_rank, "g_rank": e.g_rank }))
            .collect();
        return lines(&json!({ "family": table.family, "entries": rows }));
    }
    if single {
        let e = &table.entries[0];
        let rank = e.t_rank.or(e.g_rank).expect("one invariant requested");
        return format!("{rank}\n");
    }
    table.to_text()
}

fn verify(suite: &str, expected: Option<&str>, json: bool) -> Result<String, Failure> {
    let suites: Vec<Suite> = if suite == "all" {
        Suite::ALL.to_vec()
    } else {
        vec![suite.parse().map_err(Failure::usage)?]
    };
    let expected = match expected {
        None => ReferenceValues::builtin(),
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::usage(format!("cannot read {path}: {e}")))?;
            let v: Value =
                serde_json::from_str(&text).map_err(|e| Failure::usage(format!("{path}: {e}")))?;
            ReferenceValues::from_json(&v).map_err(|e| Failure::usage(format!("{path}: {e}")))?
        }
    };
    let mut out = String::new();
    let mut reports = Vec::new();
    let mut failed = 0;
    for s in suites {
        let checks = run_suite(s, &expected).map_err(|e| Failure::usage(format!("verify: {e}")))?;
        failed += checks.iter().filter(|c| !c.passed).count();
        if json {
            reports.push(report_json(s, &checks));
        } else {
            out.push_str(&format!("## {s}\n"));
            for c in &checks {
                out.push_str(&format!("{c}\n"));
            }
        }
    }
    if json {
        out = lines(&Value::Array(reports));
    } else {
        out.push_str(&format!("{failed} failed\n"));
    }
    if failed > 0 {
        Err(Failure { code: 2, msg: out })
    } else {
        Ok(out)
    }
}
