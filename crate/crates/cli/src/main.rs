//! `qbound`: exact verification of the degree bounds for codimension-two
//! subvarieties of the six-dimensional quadric.

use std::collections::BTreeMap;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use qbound_core::algebra::Rational;
use qbound_core::bundle::{degree_bound_p7, general_n};
use qbound_core::dsl::{eval_expr, DslContext};
use qbound_core::gate::{case1_bound, k_gate, minimal_passing_k, GATE_K};
use qbound_core::hypersurface::{crossover_estimate, leading_certificate};
use qbound_core::q6::{canonical_intersections, hilbert_polynomial, InvariantRecord};
use qbound_core::suite::{run_suite, SuiteName, SuiteOptions};

#[derive(Parser)]
#[command(name = "qbound", version, about = "Exact verifier for degree bounds of codimension-two subvarieties of Q6")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a check suite and print the report
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Stop after the first failing check
        #[arg(long)]
        fail_fast: bool,
    },
    /// Reduce a cycle-class expression and integrate it in top grade
    Eval {
        #[arg(long, value_enum)]
        context: Context,
        #[arg(long)]
        expr: String,
        /// Comma-separated `name=value` pairs with rational values
        #[arg(long, value_delimiter = ',')]
        bind: Vec<String>,
    },
    /// Hilbert polynomial chi(O_X(t)) of a numerical character
    Hilbert(HilbertArgs),
    /// Degree and genus bounds
    Bound {
        #[command(subcommand)]
        which: BoundCommand,
    },
}

#[derive(Args)]
#[command(allow_negative_numbers = true)]
struct HilbertArgs {
    #[arg(long)]
    d: i64,
    #[arg(long)]
    g: i64,
    #[arg(long = "chi-s")]
    chi_s: i64,
    #[arg(long = "chi-x3")]
    chi_x3: i64,
    #[arg(long = "chi-x")]
    chi_x: i64,
    /// Evaluate at this t
    #[arg(long)]
    at: Option<i64>,
}

#[derive(Subcommand)]
enum BoundCommand {
    /// Fourfolds in P^7 fibred in quadrics over a surface
    QuadricBundle {
        #[arg(long, default_value_t = 3)]
        n: u32,
    },
    /// Fourfolds in Q6 not of general type
    GeneralType {
        #[arg(long, default_value_t = GATE_K)]
        k: i64,
    },
    /// Fourfolds in a hypersurface section of degree 2 sigma
    Hypersurface {
        #[arg(long)]
        sigma: i64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    All,
    Q6,
    Sec3,
    Sec4,
    Bundle,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum Context {
    Q6,
    Bundle,
}

/// Failure of a command that is not a failing check.
struct UsageError(String);

fn usage(msg: impl Into<String>) -> UsageError {
    UsageError(msg.into())
}

fn verify(suite: Suite, format: Format, fail_fast: bool) -> u8 {
    let name = match suite {
        Suite::All => SuiteName::All,
        Suite::Q6 => SuiteName::Q6,
        Suite::Sec3 => SuiteName::Sec3,
        Suite::Sec4 => SuiteName::Sec4,
        Suite::Bundle => SuiteName::Bundle,
    };
    let report = run_suite(name, &SuiteOptions { fail_fast });
    match format {
        Format::Json => print!("{}", report.to_json()),
        Format::Text => print!("{}", report.to_text()),
    }
    report.exit_code() as u8
}

fn parse_bindings(raw: &[String]) -> Result<BTreeMap<String, Rational>, UsageError> {
    let mut out = BTreeMap::new();
    for pair in raw.iter().filter(|p| !p.is_empty()) {
        let (name, value) = pair.split_once('=').ok_or_else(|| usage(format!("binding {pair} is not name=value")))?;
        let value: Rational = value.trim().parse().map_err(|_| usage(format!("binding {pair}: not a rational number")))?;
        out.insert(name.trim().to_string(), value);
    }
    Ok(out)
}

fn eval(context: Context, expr: &str, bind: &[String]) -> Result<(), UsageError> {
    let ctx = match context {
        Context::Q6 => DslContext::q6(),
        Context::Bundle => DslContext::bundle(),
    };
    let bindings = parse_bindings(bind)?;
    let ev = eval_expr(expr, &ctx, &bindings).map_err(|e| usage(e.to_string()))?;
    println!("expr: {}", ev.expr);
    println!("grade: {}", ev.class.grade());
    println!("class: {}", ev.class);
    if let Some(deg) = ev.degree {
        println!("degree: {deg}");
    }
    Ok(())
}

fn hilbert(a: &HilbertArgs) -> Result<(), UsageError> {
    if a.d < 1 {
        return Err(usage("--d must be positive"));
    }
    let rec = InvariantRecord::numeric(a.d, a.g, a.chi_s, a.chi_x3, a.chi_x);
    let p = hilbert_polynomial(&rec);
    println!("chi(O_X(t)) = {p}");
    let (kh3, k2h2, k3h, k4) = canonical_intersections(&rec);
    println!("K.H^3 = {kh3}, K^2.H^2 = {k2h2}, K^3.H = {k3h}, K^4 = {k4}");
    if let Some(t) = a.at {
        let val = p.substitute("t", &Rational::from_integer(t.into()).into());
        println!("chi(O_X({t})) = {val}");
    }
    Ok(())
}

fn bound(which: &BoundCommand) -> Result<(), UsageError> {
    match *which {
        BoundCommand::QuadricBundle { n } => {
            if n < 2 {
                return Err(usage("--n must be at least 2"));
            }
            let g = general_n(n);
            println!("n = {n}: A = {}, B = {}, fold_degree = {}", g.a, g.b, g.fold_degree);
            if n == 3 {
                let b = degree_bound_p7().map_err(|e| usage(e.to_string()))?;
                println!("cubic: {} <= 0", b.cubic.scale(&b.factor));
                println!("d <= {}; alternative: contained in degree-{} fivefold", b.bound, g.fold_degree);
            } else {
                println!("genus gate A > 1/(2(fold_degree + 1)): {}", if g.gate { "holds" } else { "fails" });
            }
        }
        BoundCommand::GeneralType { k } => {
            if k < 1 {
                return Err(usage("--k must be positive"));
            }
            let g = k_gate(k);
            let ci = g.coeff_i.map(|c| c.to_string()).unwrap_or_else(|| "undefined".into());
            println!("k = {k}: coeff_i = {ci}, coeff_ii = {}, {}", g.coeff_ii, if g.passes { "passes" } else { "fails" });
            println!("minimal k = {}; case-1 d <= {}", minimal_passing_k(), case1_bound());
        }
        BoundCommand::Hypersurface { sigma } => {
            if sigma < 1 {
                return Err(usage("--sigma must be positive"));
            }
            let cert = leading_certificate(sigma).map_err(|e| usage(e.to_string()))?;
            let cross = crossover_estimate(sigma);
            println!("sigma = {sigma}: leading coefficient {} (d^5)", cert.coefficient);
            println!("crossover d = {} (estimate: {})", cross.degree, cross.leading_terms_only);
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Verify { suite, format, fail_fast } => return ExitCode::from(verify(*suite, *format, *fail_fast)),
        Command::Eval { context, expr, bind } => eval(*context, expr, bind),
        Command::Hilbert(a) => hilbert(a),
        Command::Bound { which } => bound(which),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
