use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand};
use serde_json::{json, Value};

use hecke_skew::classify::{is_isomorphic, reconstruct};
use hecke_skew::cyclo::{int, parse_rational};
use hecke_skew::modules::{build_module, Automorphism};
use hecke_skew::shapes::{
    enumerate_shapes, enumerate_syt, hook_dimension, ShapeJson, TableauJson, WeightJson,
};
use hecke_skew::suite::{jm_symbolic, run_all};
use hecke_skew::{Error, ErrorClass, SkewShape};

/// Exact constructions for calibrated modules of degenerate affine Hecke algebras.
#[derive(Parser)]
#[command(name = "hecke", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List canonical shapes with n boxes whose reading-first box sits at content 0
    Shapes {
        #[arg(long)]
        ell: u32,
        #[arg(long)]
        n: usize,
        /// Content window; defaults to n
        #[arg(long)]
        window: Option<i64>,
    },
    /// Standard tableaux of a shape
    Syt {
        #[arg(long)]
        shape: PathBuf,
    },
    /// Construct the module of a shape
    Build {
        #[arg(long)]
        shape: PathBuf,
        #[arg(long)]
        dump_matrices: bool,
        /// Dump dense matrices instead of sparse triplets
        #[arg(long)]
        dense: bool,
    },
    /// Check defining relations exactly; exit 0 iff every check passes
    Verify {
        #[arg(long)]
        shape: PathBuf,
        #[arg(long)]
        intertwiners: bool,
        #[arg(long)]
        jm: bool,
        #[arg(long)]
        commutant: bool,
    },
    /// Reconstruct shape and tableau from a weight file
    Classify {
        #[arg(long)]
        weight: PathBuf,
        /// Required unless the weight file carries "ell"
        #[arg(long)]
        ell: Option<u32>,
    },
    /// Twist a module and classify the result
    #[command(group(ArgGroup::new("auto").required(true).args(["t", "rho"])))]
    Twist {
        #[arg(long)]
        shape: PathBuf,
        /// Shift u_i by this rational
        #[arg(long, allow_hyphen_values = true)]
        t: Option<String>,
        #[arg(long)]
        rho: bool,
    },
    /// Check the Jucys-Murphy relations symbolically in the group algebra
    JmCheck {
        #[arg(long)]
        ell: u32,
        #[arg(long)]
        n: usize,
    },
    /// Run every acceptance criterion on the shape corpus
    Suite {
        #[arg(long)]
        ell: u32,
        #[arg(long)]
        max_n: usize,
        /// Emit JSON instead of a table
        #[arg(long)]
        json: bool,
    },
}

/// A finished run: what to print and how to exit.
struct Outcome {
    output: Output,
    code: u8,
}

enum Output {
    Json(Value),
    Text(String),
}

impl Outcome {
    fn ok(v: Value) -> Self {
        Outcome { output: Output::Json(v), code: 0 }
    }

    fn checked(v: Value, pass: bool) -> Self {
        Outcome { output: Output::Json(v), code: if pass { 0 } else { 3 } }
    }
}

fn exit_code(class: ErrorClass) -> u8 {
    match class {
        ErrorClass::Malformed => 1,
        ErrorClass::Rejected => 2,
        ErrorClass::Internal => 3,
    }
}

fn error_outcome(e: &Error) -> Outcome {
    let code = exit_code(e.class());
    let mut v = json!({ "error": e.to_string() });
    if let Error::ConditionFailed(viol) = e {
        v["violation"] = serde_json::to_value(viol).expect("serializable");
    }
    Outcome { output: Output::Json(v), code }
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, Error> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Malformed(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Error::Malformed(format!("{}: {e}", path.display())))
}

fn read_shape(path: &Path) -> Result<SkewShape, Error> {
    read_json::<ShapeJson>(path)?.to_shape()
}

fn run(cmd: Command) -> Result<Outcome, Error> {
    match cmd {
        Command::Shapes { ell, n, window } => {
            if ell == 0 || n == 0 {
                return Err(Error::Malformed("ell and n must be positive".into()));
            }
            let window = window.unwrap_or(n as i64);
            if window < 0 {
                return Err(Error::Malformed("window must be nonnegative".into()));
            }
            let shapes: Vec<ShapeJson> =
                enumerate_shapes(ell, n, window).iter().map(ShapeJson::from).collect();
            Ok(Outcome::ok(json!({ "count": shapes.len(), "shapes": shapes })))
        }
        Command::Syt { shape } => {
            let d = read_shape(&shape)?;
            let syt = enumerate_syt(&d);
            let mut v = json!({
                "count": syt.len(),
                "tableaux": syt.iter().map(TableauJson::from).collect::<Vec<_>>(),
            });
            if let Some(lambda) = d.as_multipartition() {
                v["hook_dimension"] = json!(hook_dimension(&lambda)?.to_string());
            }
            Ok(Outcome::ok(v))
        }
        Command::Build { shape, dump_matrices, dense } => {
            let m = build_module(&read_shape(&shape)?)?;
            let weights = (0..m.dim())
                .map(|k| m.basis_weight(k).map(|w| WeightJson::from(&w)))
                .collect::<Result<Vec<_>, _>>()?;
            let mut v = json!({ "ell": m.ell(), "n": m.n(), "dim": m.dim(), "weights": weights });
            if dump_matrices {
                v["module"] = m.to_json(dense);
            }
            Ok(Outcome::ok(v))
        }
        Command::Verify { shape, intertwiners, jm, commutant } => {
            let m = build_module(&read_shape(&shape)?)?;
            let mut report = m.verify_relations()?;
            if intertwiners {
                report.extend(m.verify_intertwiners()?);
            }
            if jm {
                report.extend(m.jm_consistency()?);
            }
            if commutant {
                let c = m.commutant_dimension();
                report.flag("commutant=1", c == 1, Some(format!("dimension {c}")));
            }
            let pass = report.passed();
            let v = json!({ "pass": pass, "report": report });
            Ok(Outcome::checked(v, pass))
        }
        Command::Classify { weight, ell } => {
            let (ell, w) = read_json::<WeightJson>(&weight)?.to_weight(ell)?;
            let (d, t) = reconstruct(&w, ell)?;
            Ok(Outcome::ok(json!({
                "shape": ShapeJson::from(&d),
                "tableau": TableauJson::from(&t),
            })))
        }
        Command::Twist { shape, t, rho } => {
            let d = read_shape(&shape)?;
            let m = build_module(&d)?;
            let (auto, expected) = match (t, rho) {
                (Some(k), false) => {
                    let kappa = parse_rational(&k)?;
                    let delta = &kappa / &int(d.ell() as i64);
                    (Automorphism::Shift(kappa), d.shift_contents(&delta))
                }
                (None, true) => (Automorphism::Rho, d.rotate()),
                _ => return Err(Error::Malformed("give exactly one of --t, --rho".into())),
            };
            let (got, basis) = m.twist(&auto).classify()?;
            let pass = is_isomorphic(&got, &expected);
            let v = json!({
                "pass": pass,
                "shape": ShapeJson::from(&got),
                "expected": ShapeJson::from(&expected),
                "basis": basis.iter().map(TableauJson::from).collect::<Vec<_>>(),
            });
            Ok(Outcome::checked(v, pass))
        }
        Command::JmCheck { ell, n } => {
            if ell == 0 || n == 0 {
                return Err(Error::Malformed("ell and n must be positive".into()));
            }
            let failures = jm_symbolic(ell, n);
            let pass = failures.is_empty();
            Ok(Outcome::checked(json!({ "ell": ell, "n": n, "pass": pass, "failures": failures }), pass))
        }
        Command::Suite { ell, max_n, json } => {
            if ell == 0 || max_n == 0 {
                return Err(Error::Malformed("ell and max-n must be positive".into()));
            }
            let results = run_all(ell, max_n);
            let pass = results.iter().all(|r| r.pass);
            let output = if json {
                Output::Json(json!({ "ell": ell, "max_n": max_n, "pass": pass, "criteria": results }))
            } else {
                let mut s = format!("ell = {ell}, n <= {max_n}\n");
                for r in &results {
                    s.push_str(&format!("{r}\n"));
                }
                s.push_str(if pass { "all criteria pass\n" } else { "some criteria FAIL\n" });
                Output::Text(s)
            };
            Ok(Outcome { output, code: if pass { 0 } else { 3 } })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::try_parse().unwrap_or_else(|e| {
        let _ = e.print();
        // help and version are not errors
        std::process::exit(if e.use_stderr() { 1 } else { 0 })
    });
    let outcome = run(cli.command).unwrap_or_else(|e| {
        eprintln!("error: {e}");
        error_outcome(&e)
    });
    let text = match outcome.output {
        Output::Json(v) => serde_json::to_string_pretty(&v).expect("serializable") + "\n",
        Output::Text(s) => s,
    };
    // a closed pipe (e.g. `| head`) is not worth a panic
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
    ExitCode::from(outcome.code)
}
