//! `tyk`: verify solutions of the reflection equation, classify highest
//! weights and Drinfeld tuples, and apply the tuple transformations.
//!
//! Exit status: 0 success or `FiniteDim`, 1 `NotFiniteDim` or a failed
//! identity, 3 `NecessaryOnly`, 2 malformed input or an engine error.

mod expr;
mod input;
mod output;

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use tyk::drinfeld::{
    associate, classify_tuple, classify_weight, nu_twist, psi_twist, psi_twist_weight, restrict_tuple,
    restrict_weight, synthesize, tensor_compose, Verdict,
};
use tyk::exactalg::{MultiPoly, MultiRatFunc, Rational, Var};
use tyk::lowrank::{onedim_catalog, so4_tuple};
use tyk::reflection::{kmatrix, trivial_solution, verify_all};
use tyk::tensorrep::{RFMatrix, SymmetricPair};
use tyk::Error;

use input::{parse_document, parse_documents, parse_pair_str, Input};

#[derive(Parser)]
#[command(name = "tyk", version, about = "Highest weights and Drinfeld tuples of twisted Yangians")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Render pairs as identifiers and polynomials as factored strings.
    #[arg(long, global = true)]
    pretty: bool,
    /// Worker threads for batch files; output order is preserved.
    #[arg(long, global = true)]
    jobs: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Solution {
    Trivial,
    Kmatrix,
}

#[derive(Args, Clone)]
struct InputArgs {
    /// JSON document or array of documents; `-` reads stdin.
    file: Option<PathBuf>,
    /// Pair as JSON, `BI,5,1` or an identifier such as `so5/so4`.
    #[arg(long)]
    pair: Option<String>,
    /// Inline tuple, e.g. `(7/4, 1, (u-5/4)(u-3/4))`.
    #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["weight", "tilde", "file"])]
    tuple: Option<String>,
    /// Inline weight components separated by `;`.
    #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["tilde", "file"])]
    weight: Option<String>,
    /// Inline tilde components separated by `;`.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "file")]
    tilde: Option<String>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check RE, SYM, TRACE and UNITARITY for a solution.
    Verify {
        #[arg(long)]
        pair: String,
        #[arg(long, value_enum, default_value = "trivial")]
        solution: Solution,
        /// Parameter of `K(u; a)`: a rational or an expression in `a`, `b`.
        #[arg(long, allow_hyphen_values = true)]
        param: Option<String>,
        /// JSON matrix `{"entries": [[i, j, "expr"], ..]}` checked instead.
        #[arg(long)]
        matrix: Option<PathBuf>,
    },
    /// Verdict for a weight or a tuple.
    Classify(InputArgs),
    /// Drinfeld tuple of a weight.
    Associate(InputArgs),
    /// Weight of a tuple.
    Synthesize(InputArgs),
    /// ψσ twist of a tuple or weight, or `ν_g` of a weight with `--nu`.
    Twist {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, allow_hyphen_values = true)]
        nu: Option<String>,
    },
    /// Restriction along the `m`-th shift.
    Restrict {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        m: usize,
    },
    /// Tensor a tuple with `Q_1; …; Q_n`.
    Tensor {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long = "with", allow_hyphen_values = true)]
        with: String,
    },
    /// Weight of a one-dimensional module of the pair.
    Evaluate {
        #[arg(long)]
        pair: String,
        /// Parameters separated by `,`.
        #[arg(long, alias = "param", allow_hyphen_values = true, default_value = "")]
        mu: String,
    },
}

/// Result of one item: JSON payload and the exit status it implies.
type Outcome = Result<(Value, u8), Error>;

fn verdict_code(v: Verdict) -> u8 {
    match v {
        Verdict::FiniteDim => 0,
        Verdict::NotFiniteDim => 1,
        Verdict::NecessaryOnly => 3,
    }
}

fn ok(v: Value) -> Outcome {
    Ok((v, 0))
}

fn read_text(path: &PathBuf) -> Result<String, Error> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Error::Parse(format!("stdin: {e}")))?;
        return Ok(s);
    }
    std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

/// Documents named by the arguments, and whether they came as a batch.
fn documents(a: &InputArgs) -> Result<(bool, Vec<Value>, Option<SymmetricPair>), Error> {
    let pair = a.pair.as_deref().map(parse_pair_str).transpose()?;
    if let Some(f) = &a.file {
        let (batch, docs) = parse_documents(&read_text(f)?)?;
        return Ok((batch, docs, pair));
    }
    let doc = match (&a.tuple, &a.weight, &a.tilde) {
        (Some(t), None, None) => json!({ "tuple": t }),
        (None, Some(w), None) => json!({ "mu": w }),
        (None, None, Some(t)) => json!({ "tilde": t }),
        _ => return Err(Error::Parse("give an input file, --tuple, --weight or --tilde".into())),
    };
    Ok((false, vec![doc], pair))
}

fn pool(jobs: Option<usize>) -> rayon::ThreadPool {
    let mut b = rayon::ThreadPoolBuilder::new();
    if let Some(j) = jobs {
        b = b.num_threads(j.max(1));
    }
    b.build().expect("thread pool")
}

fn severity(code: u8) -> u8 {
    match code {
        2 => 3,
        1 => 2,
        3 => 1,
        _ => 0,
    }
}

fn emit(v: &Value, pretty: bool) {
    let s = if pretty { serde_json::to_string_pretty(v) } else { serde_json::to_string(v) };
    println!("{}", s.expect("JSON renders"));
}

fn run_documents(cli: &Cli, a: &InputArgs, op: &(dyn Fn(Input) -> Outcome + Sync)) -> u8 {
    let (batch, docs, pair) = match documents(a) {
        Ok(x) => x,
        Err(e) => return fail(&e, None),
    };
    let run = |d: &Value| parse_document(d, pair.as_ref()).and_then(op);
    let results: Vec<Outcome> = if batch && docs.len() > 1 {
        pool(cli.jobs).install(|| docs.par_iter().map(run).collect())
    } else {
        docs.iter().map(run).collect()
    };
    let mut code = 0u8;
    let mut values = Vec::with_capacity(results.len());
    for (i, r) in results.into_iter().enumerate() {
        let (v, c) = match r {
            Ok(x) => x,
            Err(e) => {
                eprintln!("tyk: {}{}: {e}", if batch { format!("item {i}: ") } else { String::new() }, e.name());
                (output::error(&e), 2)
            }
        };
        if severity(c) > severity(code) {
            code = c;
        }
        values.push(v);
    }
    if batch {
        emit(&Value::Array(values), cli.pretty);
    } else {
        emit(&values[0], cli.pretty);
    }
    code
}

fn fail(e: &Error, pretty: Option<bool>) -> u8 {
    eprintln!("tyk: {}: {e}", e.name());
    emit(&output::error(e), pretty.unwrap_or(false));
    2
}

fn need_tuple(i: Input, cmd: &str) -> Result<(SymmetricPair, tyk::drinfeld::DrinfeldTuple), Error> {
    match i {
        Input::Tuple(p, t) => Ok((p, t)),
        Input::Weight(_) => Err(Error::Parse(format!("{cmd} takes a tuple"))),
    }
}

fn need_weight(i: Input, cmd: &str) -> Result<tyk::drinfeld::HighestWeight, Error> {
    match i {
        Input::Weight(w) => Ok(w),
        Input::Tuple(..) => Err(Error::Parse(format!("{cmd} takes a weight"))),
    }
}

fn param_poly(src: &str) -> Result<MultiPoly, Error> {
    let f = expr::parse_multi(src)?;
    if f.has_var(Var::U) || f.has_var(Var::V) {
        return Err(Error::Parse(format!("parameter `{src}` may not involve u or v")));
    }
    let c = f
        .den()
        .constant_value()
        .ok_or_else(|| Error::Parse(format!("parameter `{src}` is not a polynomial")))?;
    Ok(f.num().scale(&c.recip()))
}

fn read_matrix(pair: &SymmetricPair, path: &PathBuf) -> Result<RFMatrix, Error> {
    let bad = |m: String| Error::Parse(format!("{}: {m}", path.display()));
    let v: Value = serde_json::from_str(&read_text(path)?).map_err(|e| bad(format!("invalid JSON: {e}")))?;
    let entries = v
        .get("entries")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("needs an `entries` array".into()))?;
    let labels = pair.indices();
    let mut m = RFMatrix::zero();
    for e in entries {
        let (i, j, x) = match e.as_array().map(Vec::as_slice) {
            Some([i, j, Value::String(x)]) => (i.as_i64(), j.as_i64(), x),
            _ => return Err(bad(format!("entry {e} is not [i, j, \"expr\"]"))),
        };
        let (i, j) = match (i, j) {
            (Some(i), Some(j)) if labels.contains(&(i as i32)) && labels.contains(&(j as i32)) => {
                (i as i32, j as i32)
            }
            _ => return Err(bad(format!("entry {e} has an index outside {labels:?}"))),
        };
        let f: MultiRatFunc = expr::parse_multi(x)?;
        m.set(i, j, f);
    }
    if m.is_zero() {
        return Err(bad("matrix is zero".into()));
    }
    Ok(m)
}

fn verify(
    cli: &Cli,
    pair: &str,
    solution: Solution,
    param: Option<&str>,
    matrix: Option<&PathBuf>,
) -> Result<(Value, u8), Error> {
    let p = parse_pair_str(pair)?;
    let (name, s) = match (matrix, solution, param) {
        (Some(f), _, _) => ("matrix", read_matrix(&p, f)?),
        (None, Solution::Trivial, None) => ("trivial", trivial_solution(&p)),
        (None, Solution::Trivial, Some(_)) => {
            return Err(Error::Parse("the trivial solution takes no parameter".into()))
        }
        (None, Solution::Kmatrix, x) => ("kmatrix", kmatrix(&p, &param_poly(x.unwrap_or("a"))?)?),
    };
    let reports = verify_all(&p, &s);
    let holds = reports.iter().all(|r| r.holds);
    let mut out = json!({
        "pair": output::pair(&p, cli.pretty),
        "solution": name,
        "holds": holds,
        "reports": reports,
    });
    if let (Solution::Kmatrix, None) = (solution, matrix) {
        out["param"] = Value::String(param.unwrap_or("a").to_string());
    }
    Ok((out, if holds { 0 } else { 1 }))
}

fn evaluate(cli: &Cli, pair: &str, mu: &str) -> Outcome {
    let p = parse_pair_str(pair)?;
    let params = mu
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(expr::parse_rational)
        .collect::<Result<Vec<Rational>, _>>()?;
    let cat = onedim_catalog(&p);
    let w = cat.weight(&params)?;
    let mut out = output::weight(&w, cli.pretty);
    out["kind"] = serde_json::to_value(cat.kind).expect("kind serializes");
    ok(out)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let pretty = cli.pretty;
    let code = match &cli.cmd {
        Cmd::Verify { pair, solution, param, matrix } => {
            match verify(&cli, pair, *solution, param.as_deref(), matrix.as_ref()) {
                Ok((v, c)) => {
                    emit(&v, pretty);
                    c
                }
                Err(e) => fail(&e, Some(pretty)),
            }
        }
        Cmd::Evaluate { pair, mu } => match evaluate(&cli, pair, mu) {
            Ok((v, c)) => {
                emit(&v, pretty);
                c
            }
            Err(e) => fail(&e, Some(pretty)),
        },
        Cmd::Classify(a) => run_documents(&cli, a, &|i| {
            let c = match &i {
                Input::Tuple(p, t) => classify_tuple(p, t)?,
                Input::Weight(w) => classify_weight(w)?,
            };
            Ok((output::classification(i.pair(), &c, pretty), verdict_code(c.verdict)))
        }),
        Cmd::Associate(a) => run_documents(&cli, a, &|i| {
            let w = need_weight(i, "associate")?;
            if w.pair.is_so4() {
                let t = so4_tuple(&w)?;
                return ok(json!({
                    "pair": output::pair(&w.pair, pretty),
                    "tuple": output::tuple_data(&tyk::drinfeld::TupleData::So4(t), pretty),
                }));
            }
            ok(output::with_tuple(&w.pair, &associate(&w)?, pretty))
        }),
        Cmd::Synthesize(a) => run_documents(&cli, a, &|i| {
            let (p, t) = need_tuple(i, "synthesize")?;
            ok(output::weight(&synthesize(&p, &t)?, pretty))
        }),
        Cmd::Twist { input, nu } => {
            let g = match nu.as_deref().map(expr::parse_ratfunc).transpose() {
                Ok(g) => g,
                Err(e) => return ExitCode::from(fail(&e, Some(pretty))),
            };
            run_documents(&cli, input, &|i| match (i, &g) {
                (Input::Tuple(p, t), None) => ok(output::with_tuple(&p, &psi_twist(&p, &t)?, pretty)),
                (Input::Weight(w), None) => ok(output::weight(&psi_twist_weight(&w)?, pretty)),
                (Input::Weight(w), Some(g)) => ok(output::weight(&nu_twist(&w, g)?, pretty)),
                (Input::Tuple(..), Some(_)) => Err(Error::Parse("--nu applies to weights".into())),
            })
        }
        Cmd::Restrict { input, m } => run_documents(&cli, input, &|i| match i {
            Input::Tuple(p, t) => {
                let (red, t) = restrict_tuple(&p, &t, *m)?;
                ok(output::with_tuple(&red, &t, pretty))
            }
            Input::Weight(w) => ok(output::weight(&restrict_weight(&w, *m)?, pretty)),
        }),
        Cmd::Tensor { input, with } => {
            let qs = match with.split(';').map(expr::parse_poly).collect::<Result<Vec<_>, _>>() {
                Ok(qs) => qs,
                Err(e) => return ExitCode::from(fail(&e, Some(pretty))),
            };
            run_documents(&cli, input, &|i| {
                let (p, t) = need_tuple(i, "tensor")?;
                ok(output::with_tuple(&p, &tensor_compose(&p, &qs, &t)?, pretty))
            })
        }
    };
    ExitCode::from(code)
}
