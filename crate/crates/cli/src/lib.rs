//! Command-line front end: argument parsing, dispatch, and the text and JSON
//! renderings of every result.
//!
//! [`run`] does all the work with injected streams so it can be driven from
//! tests; the binary only wires it to the process.

pub mod input;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use extremal_core::extremality::CensusSummary;
use extremal_core::{
    census, downshift_seq, is_extremal_bruteforce, is_extremal_downshift, is_extremal_fast,
    set_system_basis, shattered_family, sm_all_lex, sm_lex, sm_oracle, universal_basis,
    universal_basis_forced, CensusPredicate, Error, ExtremalityVerdict, GroebnerBasis, LexOrder,
    Limits, MonomialSet, PointSet, Polynomial, Reducer, SetSystem,
};
use serde::Serialize;

pub use input::{parse_order, parse_pointset, parse_sets, serialize_pointset, InputError, Parsed};

/// Process exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exit {
    Ok = 0,
    Usage = 1,
    Input = 2,
    Precondition = 3,
    Guard = 4,
    /// Two independent computations disagreed.
    Internal = 5,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub exit: Exit,
    pub message: String,
}

impl CliError {
    fn new(exit: Exit, message: impl Into<String>) -> Self {
        CliError {
            exit,
            message: message.into(),
        }
    }

    fn usage(message: impl Into<String>) -> Self {
        Self::new(Exit::Usage, message)
    }
}

/// Maps library errors raised while processing user data.
impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let exit = match &e {
            Error::DimensionMismatch { .. } | Error::Domain(_) => Exit::Input,
            Error::GuardExceeded { .. } => Exit::Guard,
            Error::NotExtremal { .. } | Error::NotShatteringExtremal { .. } => Exit::Precondition,
            Error::Inconsistent(_) | Error::Singular => Exit::Internal,
        };
        CliError::new(exit, e.to_string())
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "extremal",
    version,
    about = "Standard monomials, downshifts, shattering and extremality of finite point sets"
)]
pub struct Cli {
    /// Print a single JSON document instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Guard override, e.g. `9`, `census=20` or `factorial=9,census=20`.
    /// Takes precedence over EXTREMAL_GUARD.
    #[arg(long, global = true, value_name = "SPEC")]
    pub guard: Option<String>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Input file; standard input when omitted or `-`.
    pub file: Option<PathBuf>,

    /// Read a set system (`n` header, one 1-based set per line, `-` for the
    /// empty set) instead of a point set.
    #[arg(long)]
    pub sets: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Fast,
    Brute,
    Downshift,
    /// Run all three and fail if they disagree.
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Predicate {
    Extremal,
    All,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Lex standard monomials.
    Sm {
        #[command(flatten)]
        input: InputArgs,
        /// Variables from most to least significant, e.g. `2,1,3`.
        #[arg(long)]
        order: Option<String>,
        /// Every lex order.
        #[arg(long, conflicts_with = "order")]
        all_orders: bool,
        /// Cross-check against the linear-algebra oracle.
        #[arg(long)]
        oracle: bool,
    },
    /// Composite downshift D_{i1,...,il}; the last listed index acts first.
    Downshift {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_name = "I1,...,IL")]
        seq: String,
    },
    /// Shattered coordinate sets, VC dimension and Sauer-Shelah gap.
    Shatter {
        #[command(flatten)]
        input: InputArgs,
    },
    /// VC dimension and Sauer-Shelah gap only.
    Vcdim {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Whether the standard monomials are the same for every lex order.
    Extremal {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = Method::Fast)]
        method: Method,
        /// Include the standard monomials of every examined order.
        #[arg(long)]
        verbose: bool,
    },
    /// Universal Groebner basis of the vanishing ideal.
    Groebner {
        #[command(flatten)]
        input: InputArgs,
        /// Build a basis for a single order even if the set is not extremal.
        #[arg(long)]
        force: bool,
        /// The order used with --force (default 1,2,...,n).
        #[arg(long, requires = "force")]
        order: Option<String>,
    },
    /// Classify every subset of {0..k-1}^n.
    Census {
        #[arg(short, long)]
        n: usize,
        #[arg(short, long)]
        k: u32,
        #[arg(long, value_enum, default_value_t = Predicate::Extremal)]
        predicate: Predicate,
    },
    /// Normal form of a polynomial modulo the vanishing ideal.
    Reduce {
        #[command(flatten)]
        input: InputArgs,
        /// Polynomial such as `x1^2*x2 - 3/2*x2 + 1`.
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        /// Term order for the division (default 1,2,...,n).
        #[arg(long)]
        order: Option<String>,
        /// Allow non-extremal input, using the basis for --order.
        #[arg(long)]
        force: bool,
    },
}

/// Runs one invocation. `env_guard` is the value of `EXTREMAL_GUARD`, if set.
/// Returns the exit code.
pub fn run<I, T>(
    args: I,
    env_guard: Option<&str>,
    stdin: &mut dyn Read,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(text.as_bytes());
                    Exit::Ok as u8
                }
                _ => {
                    let _ = err.write_all(text.as_bytes());
                    Exit::Usage as u8
                }
            };
        }
    };
    let mut warnings = Vec::new();
    match execute(&cli, env_guard, stdin, &mut warnings) {
        Ok(text) => {
            for w in warnings {
                let _ = writeln!(err, "warning: {w}");
            }
            if out.write_all(text.as_bytes()).is_err() {
                return Exit::Internal as u8;
            }
            Exit::Ok as u8
        }
        Err(e) => {
            for w in warnings {
                let _ = writeln!(err, "warning: {w}");
            }
            let _ = writeln!(err, "error: {}", e.message);
            e.exit as u8
        }
    }
}

fn limits(cli: &Cli, env_guard: Option<&str>) -> Result<Limits, CliError> {
    let mut l = Limits::default();
    if let Some(spec) = env_guard {
        l = l
            .with_override(spec)
            .map_err(|e| CliError::usage(format!("EXTREMAL_GUARD: {e}")))?;
    }
    if let Some(spec) = &cli.guard {
        l = l
            .with_override(spec)
            .map_err(|e| CliError::usage(format!("--guard: {e}")))?;
    }
    Ok(l)
}

fn read_input(
    args: &InputArgs,
    stdin: &mut dyn Read,
    warnings: &mut Vec<String>,
) -> Result<PointSet, CliError> {
    let (text, name) = match &args.file {
        Some(p) if p.as_os_str() != "-" => (
            std::fs::read_to_string(p)
                .map_err(|e| CliError::new(Exit::Input, format!("{}: {e}", p.display())))?,
            p.display().to_string(),
        ),
        _ => {
            let mut s = String::new();
            stdin
                .read_to_string(&mut s)
                .map_err(|e| CliError::new(Exit::Input, format!("<stdin>: {e}")))?;
            (s, "<stdin>".to_string())
        }
    };
    let parsed = if args.sets {
        parse_sets(&text)
    } else {
        parse_pointset(&text)
    }
    .map_err(|e| CliError::new(Exit::Input, format!("{name}: {e}")))?;
    match parsed.duplicates {
        0 => {}
        1 => warnings.push(format!("{name}: 1 duplicate ignored")),
        d => warnings.push(format!("{name}: {d} duplicates ignored")),
    }
    Ok(parsed.points)
}

fn order_or_standard(spec: Option<&str>, n: usize) -> Result<LexOrder, CliError> {
    match spec {
        Some(s) => parse_order(s, n).map_err(CliError::usage),
        None => Ok(LexOrder::standard(n)),
    }
}

fn monomial_strings(s: &MonomialSet) -> Vec<String> {
    s.sorted_for_display()
        .into_iter()
        .map(ToString::to_string)
        .collect()
}

fn render<T: Serialize>(json: bool, value: &T, text: impl FnOnce() -> String) -> String {
    if json {
        let mut s = serde_json::to_string(value).expect("report types serialize");
        s.push('\n');
        s
    } else {
        text()
    }
}

fn set_string(s: &[usize]) -> String {
    let items: Vec<String> = s.iter().map(ToString::to_string).collect();
    format!("{{{}}}", items.join(","))
}

#[derive(Serialize)]
struct SmJson {
    order: Vec<usize>,
    monomials: Vec<String>,
}

#[derive(Serialize)]
struct SmAllJson {
    results: Vec<SmJson>,
}

#[derive(Serialize)]
struct PointSetJson {
    n: usize,
    k: u32,
    points: Vec<Vec<u32>>,
}

#[derive(Serialize)]
struct ShatterJson {
    /// 1-based.
    shattered: Vec<Vec<usize>>,
    vc_dim: i64,
    extremal_gap: i64,
    s_extremal: Option<bool>,
}

#[derive(Serialize)]
struct VcdimJson {
    vc_dim: i64,
    extremal_gap: i64,
    s_extremal: Option<bool>,
}

#[derive(Serialize)]
struct OrderSmJson {
    order: Vec<usize>,
    sm: Vec<String>,
}

#[derive(Serialize)]
struct ExtremalJson {
    extremal: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness_orders: Option<[Vec<usize>; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    sm: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    per_order_sm: Option<Vec<OrderSmJson>>,
}

#[derive(Serialize)]
struct TermJson {
    exponents: Vec<u32>,
    /// Decimal integer or `p/q`.
    coefficient: String,
}

#[derive(Serialize)]
struct GeneratorJson {
    lead: String,
    polynomial: String,
    /// Terms in descending standard lex order.
    terms: Vec<TermJson>,
}

#[derive(Serialize)]
struct GroebnerJson {
    order_free: bool,
    order: Option<Vec<usize>>,
    generators: Vec<GeneratorJson>,
}

#[derive(Serialize)]
struct CensusRowJson {
    size: usize,
    subsets: u64,
    extremal: u64,
    matched: u64,
}

#[derive(Serialize)]
struct CensusJson {
    n: usize,
    k: u32,
    predicate: &'static str,
    subsets: u64,
    extremal: u64,
    rows: Vec<CensusRowJson>,
    non_extremal: Vec<Vec<Vec<u32>>>,
}

#[derive(Serialize)]
struct ReduceJson {
    order: Vec<usize>,
    order_free: bool,
    input: String,
    normal_form: String,
    vanishes_on_input: bool,
}

fn execute(
    cli: &Cli,
    env_guard: Option<&str>,
    stdin: &mut dyn Read,
    warnings: &mut Vec<String>,
) -> Result<String, CliError> {
    let limits = limits(cli, env_guard)?;
    let json = cli.json;
    match &cli.command {
        Command::Sm {
            input,
            order,
            all_orders,
            oracle,
        } => {
            let v = read_input(input, stdin, warnings)?;
            let results = if *all_orders {
                sm_all_lex(&v, &limits)?
            } else {
                vec![sm_lex(&v, &order_or_standard(order.as_deref(), v.dim())?)?]
            };
            if *oracle {
                for r in &results {
                    let check = sm_oracle(&v, &r.order)?;
                    if check.monomials != r.monomials {
                        return Err(CliError::new(
                            Exit::Internal,
                            format!(
                                "oracle disagrees for order {}: {} vs {}",
                                r.order, r.monomials, check.monomials
                            ),
                        ));
                    }
                }
            }
            let rows: Vec<SmJson> = results
                .iter()
                .map(|r| SmJson {
                    order: r.order.one_based(),
                    monomials: monomial_strings(&r.monomials),
                })
                .collect();
            if *all_orders {
                let doc = SmAllJson { results: rows };
                Ok(render(json, &doc, || {
                    let mut s = String::new();
                    for r in &doc.results {
                        let order: Vec<String> = r.order.iter().map(ToString::to_string).collect();
                        let _ = writeln!(s, "{}: {}", order.join(","), r.monomials.join(", "));
                    }
                    s
                }))
            } else {
                let doc = rows.into_iter().next().expect("one order");
                Ok(render(json, &doc, || {
                    doc.monomials.iter().map(|m| format!("{m}\n")).collect()
                }))
            }
        }

        Command::Downshift { input, seq } => {
            let v = read_input(input, stdin, warnings)?;
            let idx = input::parse_index_list(seq).map_err(CliError::usage)?;
            if let Some(&bad) = idx.iter().find(|&&i| i > v.dim()) {
                return Err(CliError::usage(format!(
                    "--seq index {bad} is outside 1..={}",
                    v.dim()
                )));
            }
            let zero_based: Vec<usize> = idx.iter().map(|i| i - 1).collect();
            let w = downshift_seq(&v, &zero_based)?;
            let doc = PointSetJson {
                n: w.dim(),
                k: w.alphabet(),
                points: w.points().to_vec(),
            };
            Ok(render(json, &doc, || serialize_pointset(&w)))
        }

        Command::Shatter { input } => {
            let v = read_input(input, stdin, warnings)?;
            let r = shattered_family(&v)?;
            let doc = ShatterJson {
                shattered: r
                    .shattered
                    .iter()
                    .map(|s| s.iter().map(|i| i + 1).collect())
                    .collect(),
                vc_dim: r.vc_dim,
                extremal_gap: r.extremal_gap,
                s_extremal: r.s_extremal,
            };
            Ok(render(json, &doc, || {
                let sets: Vec<String> = doc.shattered.iter().map(|s| set_string(s)).collect();
                format!(
                    "shattered: {}\nvc_dim: {}\nextremal_gap: {}\ns_extremal: {}\n",
                    sets.join(" "),
                    doc.vc_dim,
                    doc.extremal_gap,
                    optional_bool(doc.s_extremal)
                )
            }))
        }

        Command::Vcdim { input } => {
            let v = read_input(input, stdin, warnings)?;
            let r = shattered_family(&v)?;
            let doc = VcdimJson {
                vc_dim: r.vc_dim,
                extremal_gap: r.extremal_gap,
                s_extremal: r.s_extremal,
            };
            Ok(render(json, &doc, || {
                format!(
                    "vc_dim: {}\nextremal_gap: {}\ns_extremal: {}\n",
                    doc.vc_dim,
                    doc.extremal_gap,
                    optional_bool(doc.s_extremal)
                )
            }))
        }

        Command::Extremal {
            input,
            method,
            verbose,
        } => {
            let v = read_input(input, stdin, warnings)?;
            let verdict = decide(&v, *method, &limits)?;
            let doc = ExtremalJson {
                extremal: verdict.extremal,
                witness_orders: verdict
                    .witness
                    .as_ref()
                    .map(|(a, b)| [a.one_based(), b.one_based()]),
                sm: verdict.sm.as_ref().map(monomial_strings),
                per_order_sm: verbose.then(|| {
                    verdict
                        .per_order
                        .iter()
                        .map(|(o, s)| OrderSmJson {
                            order: o.one_based(),
                            sm: monomial_strings(s),
                        })
                        .collect()
                }),
            };
            Ok(render(json, &doc, || {
                let mut s = format!("extremal: {}\n", doc.extremal);
                if let Some([a, b]) = &doc.witness_orders {
                    let _ = writeln!(s, "witness_orders: {} {}", list(a), list(b));
                }
                if let Some(sm) = &doc.sm {
                    let _ = writeln!(s, "sm: {}", sm.join(", "));
                }
                for row in doc.per_order_sm.iter().flatten() {
                    let _ = writeln!(s, "order {}: {}", list(&row.order), row.sm.join(", "));
                }
                s
            }))
        }

        Command::Groebner {
            input,
            force,
            order,
        } => {
            let v = read_input(input, stdin, warnings)?;
            let basis = build_basis(&v, input.sets, *force, order.as_deref())?;
            let doc = GroebnerJson {
                order_free: basis.order_free(),
                order: basis.order().map(LexOrder::one_based),
                generators: basis
                    .generators()
                    .iter()
                    .zip(basis.render_lines())
                    .map(|(g, p)| GeneratorJson {
                        lead: g.lead.to_string(),
                        polynomial: p,
                        terms: terms_json(&g.poly),
                    })
                    .collect(),
            };
            Ok(render(json, &doc, || {
                let mut s = match &doc.order {
                    None => "# universal basis\n".to_string(),
                    Some(o) => format!("# basis for order {} only\n", list(o)),
                };
                for g in &doc.generators {
                    let _ = writeln!(s, "{}", g.polynomial);
                }
                s
            }))
        }

        Command::Census { n, k, predicate } => {
            let p = match predicate {
                Predicate::Extremal => CensusPredicate::Extremal,
                Predicate::All => CensusPredicate::All,
            };
            let c = census(*n, *k, p, &limits)?;
            let doc = census_json(&c);
            Ok(render(json, &doc, || {
                let mut s = format!(
                    "n={} k={} predicate={}: {}/{} extremal\n",
                    doc.n, doc.k, doc.predicate, doc.extremal, doc.subsets
                );
                let _ = writeln!(s, "size subsets extremal matched");
                for r in &doc.rows {
                    let _ = writeln!(s, "{} {} {} {}", r.size, r.subsets, r.extremal, r.matched);
                }
                for v in &c.non_extremal {
                    let _ = writeln!(s, "non-extremal: {v}");
                }
                s
            }))
        }

        Command::Reduce {
            input,
            poly,
            order,
            force,
        } => {
            let v = read_input(input, stdin, warnings)?;
            let ord = order_or_standard(order.as_deref(), v.dim())?;
            let p = Polynomial::parse(v.dim(), poly)
                .map_err(|e| CliError::new(Exit::Input, format!("--poly: {e}")))?;
            let basis = build_basis(&v, input.sets, *force, order.as_deref())?;
            let nf = Reducer::new(&basis, &ord)?.reduce(&p)?;
            let doc = ReduceJson {
                order: ord.one_based(),
                order_free: basis.order_free(),
                input: p.render(&ord),
                normal_form: nf.render(&ord),
                vanishes_on_input: nf.is_zero(),
            };
            Ok(render(json, &doc, || format!("{}\n", doc.normal_form)))
        }
    }
}

fn terms_json(p: &Polynomial) -> Vec<TermJson> {
    let std = LexOrder::standard(p.dim());
    let mut terms: Vec<_> = p.terms().collect();
    terms.sort_by(|a, b| std.compare(b.0, a.0).expect("same dimension"));
    terms
        .into_iter()
        .map(|(m, c)| TermJson {
            exponents: m.exponents().to_vec(),
            coefficient: c.to_string(),
        })
        .collect()
}

fn optional_bool(b: Option<bool>) -> &'static str {
    match b {
        Some(true) => "true",
        Some(false) => "false",
        None => "n/a",
    }
}

fn list(order: &[usize]) -> String {
    let items: Vec<String> = order.iter().map(ToString::to_string).collect();
    items.join(",")
}

fn decide(v: &PointSet, method: Method, limits: &Limits) -> Result<ExtremalityVerdict, CliError> {
    Ok(match method {
        Method::Fast => is_extremal_fast(v),
        Method::Brute => is_extremal_bruteforce(v, limits)?,
        Method::Downshift => is_extremal_downshift(v, limits)?,
        Method::All => {
            let fast = is_extremal_fast(v);
            let brute = is_extremal_bruteforce(v, limits)?;
            let down = is_extremal_downshift(v, limits)?;
            if fast.extremal != brute.extremal || brute.extremal != down.extremal {
                return Err(CliError::new(
                    Exit::Internal,
                    format!(
                        "methods disagree: fast {}, brute {}, downshift {}",
                        fast.extremal, brute.extremal, down.extremal
                    ),
                ));
            }
            brute
        }
    })
}

fn build_basis(
    v: &PointSet,
    sets: bool,
    force: bool,
    order: Option<&str>,
) -> Result<GroebnerBasis, CliError> {
    let attempt = if sets {
        set_system_basis(&SetSystem::from_point_set(v)?)
    } else {
        universal_basis(v)
    };
    match attempt {
        Ok(b) => Ok(b),
        Err(Error::NotExtremal { .. } | Error::NotShatteringExtremal { .. }) if force => {
            let ord = order_or_standard(order, v.dim())?;
            Ok(universal_basis_forced(v, &ord)?)
        }
        Err(e @ Error::NotExtremal { .. }) => Err(CliError::new(
            Exit::Precondition,
            format!("{e}; pass --force for a single-order basis"),
        )),
        Err(e) => Err(e.into()),
    }
}

fn census_json(c: &CensusSummary) -> CensusJson {
    CensusJson {
        n: c.n,
        k: c.k,
        predicate: match c.predicate {
            CensusPredicate::Extremal => "extremal",
            CensusPredicate::All => "all",
        },
        subsets: c.subsets,
        extremal: c.extremal,
        rows: c
            .rows
            .iter()
            .map(|r| CensusRowJson {
                size: r.size,
                subsets: r.subsets,
                extremal: r.extremal,
                matched: r.matched,
            })
            .collect(),
        non_extremal: c.non_extremal.iter().map(|v| v.points().to_vec()).collect(),
    }
}
