//! Command-line front end. Every command prints one JSON document on stdout.
//! Exit codes: 0 success, 1 a verdict failed, 2 usage or library error.

mod args;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use monodimer::enumerate::{matching_poly_formal, matching_poly_scalar, signed_census, signed_count};
use monodimer::exactmath::format_rational;
use monodimer::reciprocity::{
    check_adjunction, check_census_symmetry, check_eq1, check_mod2, check_reciprocity_i, check_reciprocity_ii,
    check_stanley_sign, check_stanley_sign_transfer, Verdict,
};
use monodimer::recurrence::{
    extend_backward, extend_forward, is_integral, minimal_recurrence, parse_sequence, Recurrence, SeqWindow,
};
use monodimer::signed_graph::build_rectangle;
use monodimer::transfer::{count_fast, genfunc};
use monodimer::{BaseGraph, Error, Rational};

use args::{BaseSpec, IntList, Span};

#[derive(Parser)]
#[command(name = "monodimer", version, about = "Signed monomer-dimer counts of G x P_n for every integer n")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Signed matching count M(G x P_n).
    Count {
        #[arg(long)]
        base: BaseSpec,
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
        /// Defaults to transfer for n >= 0 and recurrence otherwise.
        #[arg(long, value_enum)]
        method: Option<Method>,
    },
    /// Numbers of matchings of weight +1 and -1.
    Census {
        #[arg(long)]
        base: BaseSpec,
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
    },
    /// Matching polynomial of the grid of height m.
    Poly {
        #[arg(long)]
        m: usize,
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
        /// Keep the indexed variables x_{i,j}, y_{i,j}, z_{i,j}.
        #[arg(long)]
        formal: bool,
    },
    /// Generating function sum f_n t^n.
    Genfunc {
        #[arg(long)]
        base: BaseSpec,
    },
    /// Minimal recurrence of M(G x P_n), n = 1..terms.
    Recurrence {
        #[arg(long)]
        base: BaseSpec,
        /// Defaults to 2 * 2^m + 2.
        #[arg(long)]
        terms: Option<usize>,
    },
    /// Extends a sequence in both directions with its minimal recurrence.
    Extend {
        /// JSON array of integers or "p/q" strings.
        #[arg(long)]
        seq: std::path::PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        lo: i64,
        #[arg(long, allow_hyphen_values = true)]
        hi: i64,
        /// Index of the first value in the file.
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        start: i64,
    },
    /// Checks an identity over a parameter sweep.
    Verify {
        #[command(subcommand)]
        claim: Claim,
    },
    /// The signed graph G x P_n.
    Graph {
        #[arg(long)]
        base: BaseSpec,
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
        /// Graphviz output instead of JSON.
        #[arg(long)]
        dot: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Oracle,
    Transfer,
    Recurrence,
}

#[derive(Clone, Copy, ValueEnum)]
enum Route {
    Oracle,
    Transfer,
}

#[derive(Subcommand)]
enum Claim {
    /// M(G x P_{-n-2}) = M(G* x P_n).
    Reciprocity1 {
        #[arg(long)]
        base: BaseSpec,
        #[arg(long, allow_hyphen_values = true)]
        n: Span,
    },
    /// M of an iterated adjunction equals M of the summed rectangle.
    Adjunction {
        #[arg(long)]
        base: BaseSpec,
        /// Comma-separated lengths, e.g. 2,-3,1.
        #[arg(long, allow_hyphen_values = true)]
        ns: IntList,
    },
    /// f_n(x,-y,-z) = x^{m(n+1)} f_{-n-2}(x,y,z).
    Eq1 {
        #[arg(long)]
        m: Span,
        #[arg(long)]
        n: Span,
    },
    /// x^m t^2 F(t,x,y,z) = -F(1/(t x^m), x, -y, -z).
    Reciprocity2 {
        #[arg(long)]
        base: BaseSpec,
    },
    /// N(m,-2-n) = epsilon N(m,n) for perfect matchings.
    Stanley {
        #[arg(long)]
        m: Span,
        #[arg(long)]
        n: Span,
        #[arg(long, value_enum, default_value = "oracle")]
        route: Route,
    },
    /// M(m,n) and M(m,-2-n) agree mod 2 for 0 <= n <= nmax.
    Mod2 {
        #[arg(long)]
        m: Span,
        #[arg(long)]
        nmax: i64,
    },
    /// M(G x P_n) = p + q and M(G x P_{-2-n}) = p - q for the census (p, q) of G* x P_n.
    Census {
        #[arg(long)]
        base: BaseSpec,
        #[arg(long)]
        n: Span,
    },
}

enum Output {
    Json(Value),
    Text(String),
    Verdicts(Vec<Verdict>),
}

fn default_terms(g: &BaseGraph) -> usize {
    2 * (1usize << g.m()) + 2
}

fn count_sequence(g: &BaseGraph, terms: usize) -> Result<Vec<Rational>, Error> {
    (1..=terms as i64).map(|n| count_fast(g, n).map(Rational::from_integer)).collect()
}

fn count_by_recurrence(g: &BaseGraph, n: i64) -> Result<Rational, Error> {
    let vals = count_sequence(g, default_terms(g))?;
    let rec = minimal_recurrence(&vals)?;
    let w = SeqWindow::new(1, vals)?;
    let w = if n < w.lo() {
        extend_backward(&rec, &w, n)?
    } else {
        extend_forward(&rec, &w, n.max(w.hi()))?
    };
    Ok(w.get(n).cloned().expect("window covers n"))
}

fn run_count(g: &BaseGraph, n: i64, method: Option<Method>) -> Result<Value, Error> {
    let method = method.unwrap_or(if n >= 0 { Method::Transfer } else { Method::Recurrence });
    let (name, value) = match method {
        Method::Oracle => ("oracle", signed_count(&build_rectangle(g, n))?.to_string()),
        Method::Transfer => ("transfer", count_fast(g, n)?.to_string()),
        Method::Recurrence => ("recurrence", format_rational(&count_by_recurrence(g, n)?)),
    };
    Ok(json!({ "n": n, "value": value, "method": name }))
}

fn run_extend(path: &std::path::Path, start: i64, lo: i64, hi: i64) -> Result<Value, Error> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    let vals = parse_sequence(&text)?;
    let rec = minimal_recurrence(&vals)?;
    let w = SeqWindow::new(start, vals)?;
    let w = extend_backward(&rec, &w, lo.min(w.lo()))?;
    let w = extend_forward(&rec, &w, hi.max(w.hi()))?;
    let w = w.slice(lo, hi)?;
    let integrality = is_integral(&w);
    let offending = integrality
        .offending
        .map(|i| json!({ "index": i, "value": format_rational(w.get(i).expect("index in window")) }));
    Ok(json!({
        "recurrence": rec.to_json(),
        "window": w.to_json(),
        "integral": integrality.integral,
        "non_integral": offending,
    }))
}

fn run_recurrence(g: &BaseGraph, terms: Option<usize>) -> Result<Value, Error> {
    let terms = terms.unwrap_or_else(|| default_terms(g));
    let vals = count_sequence(g, terms)?;
    let rec: Recurrence = minimal_recurrence(&vals)?;
    Ok(json!({
        "terms": terms,
        "order": rec.order(),
        "coefficients": rec.to_json(),
    }))
}

fn sweep<T>(a: &Span, b: &Span, mut f: impl FnMut(i64, i64) -> Result<T, Error>) -> Result<Vec<T>, Error> {
    let mut out = Vec::new();
    for x in a.0.clone() {
        for y in b.0.clone() {
            out.push(f(x, y)?);
        }
    }
    Ok(out)
}

fn run_verify(claim: Claim) -> Result<Vec<Verdict>, Error> {
    let single = |n: i64| Span(n..=n);
    match claim {
        Claim::Reciprocity1 { base, n } => n.0.map(|n| check_reciprocity_i(&base.0, n)).collect(),
        Claim::Adjunction { base, ns } => Ok(vec![check_adjunction(&base.0, &ns.0)?]),
        Claim::Eq1 { m, n } => sweep(&m, &n, check_eq1),
        Claim::Reciprocity2 { base } => Ok(vec![check_reciprocity_ii(&base.0)?]),
        Claim::Stanley { m, n, route } => match route {
            Route::Oracle => sweep(&m, &n, check_stanley_sign),
            Route::Transfer => sweep(&m, &n, check_stanley_sign_transfer),
        },
        Claim::Mod2 { m, nmax } => sweep(&m, &single(nmax), check_mod2),
        Claim::Census { base, n } => n.0.map(|n| check_census_symmetry(&base.0, n)).collect(),
    }
}

fn run(command: Command) -> Result<Output, Error> {
    Ok(match command {
        Command::Count { base, n, method } => Output::Json(run_count(&base.0, n, method)?),
        Command::Census { base, n } => {
            let c = signed_census(&build_rectangle(&base.0, n))?;
            Output::Json(json!({
                "n": n,
                "positive": c.positive.to_string(),
                "negative": c.negative.to_string(),
            }))
        }
        Command::Poly { m, n, formal } => {
            let f = if formal {
                matching_poly_formal(m, n)?
            } else {
                matching_poly_scalar(&BaseGraph::path(m)?, n)?
            };
            Output::Json(json!({ "m": m, "n": n, "formal": formal, "poly": f.to_string() }))
        }
        Command::Genfunc { base } => {
            let f = genfunc(&base.0)?;
            Output::Json(json!({
                "numerator": f.numer().to_string(),
                "denominator": f.denom().to_string(),
            }))
        }
        Command::Recurrence { base, terms } => Output::Json(run_recurrence(&base.0, terms)?),
        Command::Extend { seq, lo, hi, start } => Output::Json(run_extend(&seq, start, lo, hi)?),
        Command::Verify { claim } => Output::Verdicts(run_verify(claim)?),
        Command::Graph { base, n, dot } => {
            let h = build_rectangle(&base.0, n);
            if dot {
                Output::Text(h.to_dot())
            } else {
                Output::Json(h.to_json())
            }
        }
    })
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("json values serialize"));
}

fn error_json(code: &str, message: String, guard: Option<&str>) -> Value {
    json!({ "error": { "code": code, "message": message, "guard": guard } })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => e.exit(),
        Err(e) => {
            print_json(&error_json("usage", e.to_string().trim_end().to_string(), None));
            return ExitCode::from(2);
        }
    };
    match run(cli.command) {
        Ok(Output::Json(v)) => {
            print_json(&v);
            ExitCode::SUCCESS
        }
        Ok(Output::Text(s)) => {
            print!("{s}");
            ExitCode::SUCCESS
        }
        Ok(Output::Verdicts(vs)) => {
            let pass = vs.iter().all(|v| v.pass);
            print_json(&json!({ "pass": pass, "verdicts": vs }));
            if pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            print_json(&error_json(e.code(), e.to_string(), e.guard()));
            ExitCode::from(2)
        }
    }
}
