use std::fmt::Write as _;
use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use tnnkit::exact::{is_totally_nonnegative, is_totally_positive, minor, neville_factorize, MinorTest, MinorWitness};
use tnnkit::ineq::{compare, poset_with, Coloring, Method, DEFAULT_POSET_BOUND};
use tnnkit::network::network_from_tnn;
use tnnkit::roots::{
    certify_real_distinct, real_root_count_with_multiplicity, sturm_real_root_count, toeplitz_refute, Certification,
    ToeplitzVerdict,
};
use tnnkit::symfunc::{SymAlgebra, DEFAULT_DEGREE_BOUND};
use tnnkit::{Basis, Error, IndexSet, Matrix, Partition, PlanarNetwork, Poly, Rat, SkewShape, SymFn};

#[derive(Parser)]
#[command(
    name = "tnnkit",
    version,
    about = "Exact computations with totally nonnegative matrices"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value = "text", global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Planar networks.
    #[command(subcommand)]
    Net(NetCommand),
    /// Totally nonnegative matrices.
    #[command(subcommand)]
    Tnn(TnnCommand),
    /// Symmetric functions.
    #[command(subcommand)]
    Sym(SymCommand),
    /// Products of complementary principal minors.
    #[command(subcommand)]
    Ineq(IneqCommand),
    /// Real roots of polynomials.
    #[command(subcommand)]
    Roots(RootsCommand),
}

#[derive(Subcommand)]
enum NetCommand {
    /// Weight matrix of a network given as JSON.
    Matrix { path: String },
    /// A minor of the weight matrix and the weight of the matching
    /// vertex-disjoint path families.
    Minor {
        path: String,
        #[arg(short = 'I', value_name = "ROWS")]
        rows: String,
        #[arg(short = 'J', value_name = "COLS")]
        cols: String,
    },
    /// Network realizing an invertible totally nonnegative matrix.
    FromTnn { path: String },
}

#[derive(Subcommand)]
enum TnnCommand {
    /// Checks every minor for nonnegativity (positivity with --strict).
    Check {
        path: String,
        #[arg(long)]
        strict: bool,
    },
    /// Bidiagonal factorization by Neville elimination.
    Factor { path: String },
}

#[derive(Args)]
struct DegreeBound {
    /// Largest degree handled.
    #[arg(long, default_value_t = DEFAULT_DEGREE_BOUND)]
    degree_bound: usize,
}

#[derive(Subcommand)]
enum SymCommand {
    /// Evaluates an expression such as "s[3,1]*s[2,1] - h[4]".
    Eval {
        expr: String,
        #[arg(long, default_value = "s")]
        basis: String,
        #[command(flatten)]
        bound: DegreeBound,
    },
    /// Schur expansion of s_λ s_μ by the Littlewood–Richardson rule.
    Lr {
        lambda: String,
        mu: String,
        #[command(flatten)]
        bound: DegreeBound,
    },
    /// Schur expansion of a skew Schur function, e.g. 3,2,1/2,1.
    Skew {
        shape: String,
        #[command(flatten)]
        bound: DegreeBound,
    },
    /// Whether an expression is Schur-positive.
    Positive {
        expr: String,
        #[command(flatten)]
        bound: DegreeBound,
    },
}

#[derive(Subcommand)]
enum IneqCommand {
    /// The poset of products Δ_{I,I}Δ_{Ī,Ī} for n × n matrices.
    Poset {
        n: usize,
        /// Same as --format dot.
        #[arg(long)]
        dot: bool,
        #[arg(long, default_value = "tl")]
        method: String,
        /// Largest n accepted.
        #[arg(long, default_value_t = DEFAULT_POSET_BOUND)]
        bound: usize,
    },
    /// Compares Δ_{I,I}Δ_{Ī,Ī} with Δ_{J,J}Δ_{J̄,J̄}.
    Compare {
        n: usize,
        i: String,
        j: String,
        #[arg(long, default_value = "tl")]
        method: String,
    },
}

#[derive(Subcommand)]
enum RootsCommand {
    /// Hankel total positivity certificate for real, distinct roots.
    Certify { poly: String },
    /// Real root counts from Sturm sequences.
    Sturm { poly: String },
    /// Searches a Toeplitz truncation for a negative minor.
    Refute {
        poly: String,
        /// Truncation size (default: degree + 1).
        #[arg(short)]
        m: Option<usize>,
    },
}

/// Failure of a run: `Usage` exits with 2, `Domain` with 1.
enum Failure {
    Usage(String),
    Domain(String),
}

impl<E: Into<Error>> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Domain(e.into().to_string())
    }
}

type Output = Result<String, Failure>;

fn read_input(path: &str) -> Result<String, Failure> {
    let mut text = String::new();
    let result = if path == "-" {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    result.map_err(|e| Failure::Domain(format!("cannot read {path}: {e}")))?;
    Ok(text)
}

fn no_dot(format: Format) -> Result<(), Failure> {
    if format == Format::Dot {
        return Err(Failure::Usage(
            "dot output is only available for networks and posets".into(),
        ));
    }
    Ok(())
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json value serializes");
    s.push('\n');
    s
}

fn rat_json(r: &Rat) -> Value {
    Value::String(r.to_string())
}

fn matrix_json(m: &Matrix) -> Value {
    let rows: Vec<Vec<Value>> = m.to_rows().iter().map(|r| r.iter().map(rat_json).collect()).collect();
    json!({ "rows": m.rows(), "cols": m.cols(), "entries": rows })
}

fn witness_json(w: &MinorWitness) -> Value {
    json!({ "rows": w.rows.as_slice(), "cols": w.cols.as_slice(), "value": rat_json(&w.value) })
}

fn witness_text(w: &MinorWitness) -> String {
    format!("rows {} cols {} minor {}", w.rows, w.cols, w.value)
}

fn symfn_json(f: &SymFn) -> Value {
    let terms: Vec<Value> = f
        .sorted_terms()
        .into_iter()
        .map(|(p, c)| json!({ "partition": p.parts(), "coefficient": rat_json(c) }))
        .collect();
    json!({ "basis": f.basis().to_string(), "terms": terms })
}

fn symfn_output(f: &SymFn, format: Format) -> Output {
    no_dot(format)?;
    Ok(match format {
        Format::Json => pretty(&symfn_json(f)),
        _ => f.to_string(),
    })
}

fn parse_set(text: &str) -> Result<IndexSet, Failure> {
    let trimmed = text.trim().trim_start_matches('{').trim_end_matches('}');
    Ok(IndexSet::parse(trimmed)?)
}

fn parse_method(text: &str) -> Result<Method, Failure> {
    text.parse::<Method>().map_err(|e| Failure::Usage(e.to_string()))
}

fn net(cmd: NetCommand, format: Format) -> Output {
    match cmd {
        NetCommand::Matrix { path } => {
            no_dot(format)?;
            let g = PlanarNetwork::from_json(&read_input(&path)?)?;
            let w = g.weight_matrix()?;
            Ok(match format {
                Format::Json => pretty(&matrix_json(&w)),
                _ => w.to_string(),
            })
        }
        NetCommand::Minor { path, rows, cols } => {
            no_dot(format)?;
            let g = PlanarNetwork::from_json(&read_input(&path)?)?;
            let (rows, cols) = (parse_set(&rows)?, parse_set(&cols)?);
            let value = minor(&g.weight_matrix()?, &rows, &cols)?;
            let families = g.disjoint_family_weight(&rows, &cols)?;
            Ok(match format {
                Format::Json => pretty(&json!({
                    "rows": rows.as_slice(),
                    "cols": cols.as_slice(),
                    "minor": rat_json(&value),
                    "family_weight": rat_json(&families),
                })),
                _ => format!("minor {rows} {cols} = {value}\nfamily weight = {families}\n"),
            })
        }
        NetCommand::FromTnn { path } => {
            let m = Matrix::parse(&read_input(&path)?)?;
            let g = network_from_tnn(&m)?;
            Ok(match format {
                Format::Dot => g.to_dot(),
                _ => g.to_json() + "\n",
            })
        }
    }
}

fn tnn(cmd: TnnCommand, format: Format) -> Output {
    no_dot(format)?;
    match cmd {
        TnnCommand::Check { path, strict } => {
            let m = Matrix::parse(&read_input(&path)?)?;
            let test = if strict {
                is_totally_positive(&m)?
            } else {
                is_totally_nonnegative(&m)?
            };
            let label = if strict { "TP" } else { "TNN" };
            Ok(match (format, &test) {
                (Format::Json, MinorTest::Holds { minors_checked }) => pretty(&json!({
                    "property": label,
                    "holds": true,
                    "minors_checked": minors_checked,
                })),
                (Format::Json, MinorTest::Fails(w)) => pretty(&json!({
                    "property": label,
                    "holds": false,
                    "witness": witness_json(w),
                })),
                (_, MinorTest::Holds { minors_checked }) => {
                    format!("{label}: yes\nminors checked: {minors_checked}\n")
                }
                (_, MinorTest::Fails(w)) => format!("{label}: no\nwitness: {}\n", witness_text(w)),
            })
        }
        TnnCommand::Factor { path } => {
            let m = Matrix::parse(&read_input(&path)?)?;
            let f = neville_factorize(&m)?;
            if format == Format::Json {
                return Ok(pretty(&serde_json::to_value(&f).expect("factorization serializes")));
            }
            let mut out = String::new();
            for e in &f.lower {
                let _ = writeln!(out, "L ({},{}) {}", e.row, e.col, e.value);
            }
            let diag: Vec<String> = f.diagonal.iter().map(ToString::to_string).collect();
            let _ = writeln!(out, "D {}", diag.join(" "));
            for e in &f.upper {
                let _ = writeln!(out, "U ({},{}) {}", e.row, e.col, e.value);
            }
            Ok(out)
        }
    }
}

fn sym(cmd: SymCommand, format: Format) -> Output {
    match cmd {
        SymCommand::Eval { expr, basis, bound } => {
            let target = basis.parse::<Basis>().map_err(|e| Failure::Usage(e.to_string()))?;
            let f = SymAlgebra::new(bound.degree_bound).eval(&expr, target)?;
            symfn_output(&f, format)
        }
        SymCommand::Lr { lambda, mu, bound } => {
            let (lambda, mu) = (Partition::parse(&lambda)?, Partition::parse(&mu)?);
            let a = SymAlgebra::new(bound.degree_bound);
            let c = a.lr(&lambda, &mu)?;
            let f = SymFn::from_terms(
                Basis::S,
                c.iter().map(|(nu, k)| (nu.clone(), Rat::from_integer((*k).into()))),
            );
            symfn_output(&f, format)
        }
        SymCommand::Skew { shape, bound } => {
            let shape = SkewShape::parse(&shape)?;
            let f = SymAlgebra::new(bound.degree_bound).skew_schur(&shape)?;
            symfn_output(&f, format)
        }
        SymCommand::Positive { expr, bound } => {
            no_dot(format)?;
            let a = SymAlgebra::new(bound.degree_bound);
            let verdict = a.is_schur_positive(&a.eval(&expr, Basis::S)?)?;
            Ok(match format {
                Format::Json => pretty(&json!({
                    "schur_positive": verdict.positive,
                    "witness": verdict.witness.as_ref().map(|(p, c)| json!({
                        "partition": p.parts(),
                        "coefficient": rat_json(c),
                    })),
                    "schur": symfn_json(&verdict.schur),
                })),
                _ => {
                    let mut out = match &verdict.witness {
                        None => "Schur-positive: yes\n".to_string(),
                        Some((p, c)) => format!("Schur-positive: no\nwitness: {c} * s[{p}]\n"),
                    };
                    out.push_str(&verdict.schur.to_string());
                    out
                }
            })
        }
    }
}

fn ineq(cmd: IneqCommand, format: Format) -> Output {
    match cmd {
        IneqCommand::Poset { n, dot, method, bound } => {
            let p = poset_with(n, parse_method(&method)?, bound)?;
            if dot || format == Format::Dot {
                return Ok(p.to_dot());
            }
            if format == Format::Json {
                return Ok(p.to_json() + "\n");
            }
            let mut out = String::new();
            for (i, node) in p.nodes.iter().enumerate() {
                let _ = writeln!(out, "{i}: {}", node.label());
            }
            for (a, b) in &p.covers {
                let _ = writeln!(out, "{a} < {b}");
            }
            Ok(out)
        }
        IneqCommand::Compare { n, i, j, method } => {
            no_dot(format)?;
            let (ci, cj) = (Coloring::new(n, parse_set(&i)?)?, Coloring::new(n, parse_set(&j)?)?);
            let rel = compare(&ci, &cj, parse_method(&method)?)?;
            Ok(match format {
                Format::Json => pretty(&json!({
                    "lhs": ci.set().as_slice(),
                    "rhs": cj.set().as_slice(),
                    "n": n,
                    "relation": format!("{rel:?}").to_lowercase(),
                })),
                _ => format!("{ci} {rel} {cj}\n"),
            })
        }
    }
}

fn roots(cmd: RootsCommand, format: Format) -> Output {
    no_dot(format)?;
    match cmd {
        RootsCommand::Certify { poly } => {
            let a = Poly::parse(&poly)?;
            let c = certify_real_distinct(&a)?;
            Ok(match (format, &c) {
                (Format::Json, Certification::Certified { hankel, minors_checked }) => pretty(&json!({
                    "certified": true,
                    "hankel": matrix_json(hankel),
                    "minors_checked": minors_checked,
                })),
                (Format::Json, Certification::NotCertified { hankel, witness }) => pretty(&json!({
                    "certified": false,
                    "hankel": matrix_json(hankel),
                    "witness": witness_json(witness),
                })),
                (_, Certification::Certified { .. }) => "real-rooted: certified (Hankel TP)\n".to_string(),
                (_, Certification::NotCertified { witness, .. }) => {
                    format!("real-rooted: not certified (Hankel {})\n", witness_text(witness))
                }
            })
        }
        RootsCommand::Sturm { poly } => {
            let a = Poly::parse(&poly)?;
            let distinct = sturm_real_root_count(&a)?;
            let total = real_root_count_with_multiplicity(&a)?;
            let degree = a.degree().unwrap_or(0);
            Ok(match format {
                Format::Json => pretty(&json!({
                    "degree": degree,
                    "distinct_real_roots": distinct,
                    "real_roots_with_multiplicity": total,
                })),
                _ => format!(
                    "degree: {degree}\ndistinct real roots: {distinct}\nreal roots with multiplicity: {total}\n"
                ),
            })
        }
        RootsCommand::Refute { poly, m } => {
            let a = Poly::parse(&poly)?;
            let m = m.unwrap_or(a.degree().unwrap_or(0) + 1);
            let verdict = toeplitz_refute(&a, m)?;
            Ok(match (format, &verdict) {
                (Format::Json, ToeplitzVerdict::Refuted(w)) => {
                    pretty(&json!({ "m": m, "refuted": true, "witness": witness_json(w) }))
                }
                (Format::Json, ToeplitzVerdict::Inconclusive { minors_checked }) => {
                    pretty(&json!({ "m": m, "refuted": false, "minors_checked": minors_checked }))
                }
                (_, ToeplitzVerdict::Refuted(w)) => format!("not real-rooted: Toeplitz {}\n", witness_text(w)),
                (_, ToeplitzVerdict::Inconclusive { minors_checked }) => {
                    format!("inconclusive: {minors_checked} Toeplitz minors of size <= {m} are nonnegative\n")
                }
            })
        }
    }
}

fn run(cli: Cli) -> Output {
    let format = cli.format;
    match cli.command {
        Command::Net(c) => net(c, format),
        Command::Tnn(c) => tnn(c, format),
        Command::Sym(c) => sym(c, format),
        Command::Ineq(c) => ineq(c, format),
        Command::Roots(c) => roots(c, format),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
    }
}
