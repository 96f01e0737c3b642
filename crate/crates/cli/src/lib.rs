//! Command dispatch and report formatting for the `homsuper` binary.
//!
//! Every command reads a chart file, parses its expression arguments over
//! that chart and prints a plain-text report. Exit codes: 0 on success,
//! 1 when a verification fails, 2 on malformed input.

use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use homsuper::lifts::LiftedChart;
use homsuper::{
    canonical_symplectic, cotangent_lift, darboux_verify, distribution_is_homogeneous, field_weight, format_scalar,
    form_weight, normal_form, parse_chart, parse_expression_with_warnings, parse_scalar, poincare_primitive,
    pushforward, rank_at_body_points, skew_form_at_base, supergroup_axiom_suite, tangent_lift, tensor_weight,
    verify_witnesses, weight_monoid, weight_of, Chart, CoordinateMap, Degree, DistVerdict, Error, Expr,
    MatrixGroup, Parity, Scalar, SuperForm, SuperFunction, VectorField,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "homsuper", version, about = "Exact computations on homogeneity supermanifolds")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Group {
    #[value(name = "GL11", alias = "gl11")]
    Gl11,
    #[value(name = "SL21", alias = "sl21")]
    Sl21,
}

/// Degree shift `(parity, weight)` of a lifted bundle.
#[derive(Debug, Clone, clap::Args)]
pub struct Shift {
    /// Weight of the shift, an integer or `p/q`.
    #[arg(long = "shift", default_value = "0", allow_hyphen_values = true)]
    pub weight: String,
    /// Make the shift odd.
    #[arg(long = "odd")]
    pub odd: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Degree of a function, form or vector field.
    Weight {
        #[arg(long)]
        chart: PathBuf,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Exterior derivative of a form.
    D {
        #[arg(long)]
        chart: PathBuf,
        #[arg(allow_hyphen_values = true)]
        form: String,
    },
    /// Wedge product of two forms.
    Wedge {
        #[arg(long)]
        chart: PathBuf,
        #[arg(allow_hyphen_values = true)]
        left: String,
        #[arg(allow_hyphen_values = true)]
        right: String,
    },
    /// Contraction `i_X omega`.
    Interior {
        #[arg(long)]
        chart: PathBuf,
        #[arg(allow_hyphen_values = true)]
        field: String,
        #[arg(allow_hyphen_values = true)]
        form: String,
    },
    /// Lie derivative of a form or a vector field.
    Lie {
        #[arg(long)]
        chart: PathBuf,
        #[arg(allow_hyphen_values = true)]
        field: String,
        #[arg(allow_hyphen_values = true)]
        tensor: String,
    },
    /// Graded commutator of two vector fields.
    Bracket {
        #[arg(long)]
        chart: PathBuf,
        #[arg(allow_hyphen_values = true)]
        left: String,
        #[arg(allow_hyphen_values = true)]
        right: String,
    },
    /// Tangent lift to the shifted tangent bundle.
    #[command(name = "lift-t")]
    LiftT {
        #[arg(long)]
        chart: PathBuf,
        #[command(flatten)]
        shift: Shift,
        #[arg(allow_hyphen_values = true)]
        field: String,
    },
    /// Cotangent lift to the shifted cotangent bundle.
    #[command(name = "lift-ct")]
    LiftCt {
        #[arg(long)]
        chart: PathBuf,
        #[command(flatten)]
        shift: Shift,
        #[arg(allow_hyphen_values = true)]
        field: String,
    },
    /// Homogeneous primitive of a closed homogeneous form.
    Poincare {
        #[arg(long)]
        chart: PathBuf,
        #[arg(allow_hyphen_values = true)]
        form: String,
    },
    /// Graded normal form of a 2-form evaluated at the base point.
    #[command(name = "normal-form")]
    NormalForm {
        #[arg(long)]
        chart: PathBuf,
        #[arg(allow_hyphen_values = true)]
        form: String,
    },
    /// Darboux checks at the base point, with optional body rank samples.
    #[command(name = "darboux-point")]
    DarbouxPoint {
        #[arg(long)]
        chart: PathBuf,
        /// Comma separated coordinate values; may be repeated.
        #[arg(long = "at", allow_hyphen_values = true)]
        samples: Vec<String>,
        #[arg(allow_hyphen_values = true)]
        form: String,
    },
    /// Canonical 1-form and symplectic form on a shifted cotangent bundle.
    Canonical {
        #[arg(long)]
        chart: PathBuf,
        #[command(flatten)]
        shift: Shift,
    },
    /// Axiom suite for a named matrix supergroup.
    Supergroup {
        #[arg(value_enum)]
        group: Group,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        a: String,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        b: String,
    },
    /// Pushforward of a vector field along a coordinate change.
    Pushforward {
        #[arg(long)]
        chart: PathBuf,
        #[arg(long)]
        target: PathBuf,
        /// Image of each target coordinate, in target order.
        #[arg(long = "map", allow_hyphen_values = true)]
        map: Vec<String>,
        /// Image of each source coordinate, in source order.
        #[arg(long = "inverse", allow_hyphen_values = true)]
        inverse: Vec<String>,
        #[arg(allow_hyphen_values = true)]
        field: String,
    },
    /// Bounded search for witnesses that a distribution is homogeneous.
    #[command(name = "dist-check")]
    DistCheck {
        #[arg(long)]
        chart: PathBuf,
        #[arg(long, default_value_t = 2)]
        ansatz: usize,
        #[arg(required = true, allow_hyphen_values = true)]
        fields: Vec<String>,
    },
    /// Weights reached by monomials of bounded total degree.
    #[command(name = "weight-monoid")]
    WeightMonoid {
        #[arg(long)]
        chart: PathBuf,
        #[arg(long, default_value_t = 4)]
        bound: usize,
    },
}

/// A finished report: text and exit code.
struct Report {
    text: String,
    code: i32,
}

impl Report {
    fn ok(text: String) -> Self {
        Report { text, code: EXIT_OK }
    }

    fn verdict(text: String, pass: bool) -> Self {
        Report {
            text,
            code: if pass { EXIT_OK } else { EXIT_FAILED },
        }
    }
}

/// Runs `cli`, writing the report to `out` and diagnostics to `err`.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let mut warnings = Vec::new();
    match dispatch(&cli.command, &mut warnings) {
        Ok(rep) => {
            for w in &warnings {
                let _ = writeln!(err, "warning: {w}");
            }
            let _ = out.write_all(rep.text.as_bytes());
            rep.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INPUT
        }
    }
}

/// Parses `args` (program name first) and runs the command; clap errors
/// map to exit code 2, help and version to 0.
pub fn run_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli, out, err),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = err.write_all(text.as_bytes());
            } else {
                let _ = out.write_all(text.as_bytes());
            }
            code
        }
    }
}

#[derive(Debug)]
enum CliError {
    Io(PathBuf, std::io::Error),
    Core(Option<PathBuf>, Error),
    Usage(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Io(p, e) => write!(f, "{}: {e}", p.display()),
            CliError::Core(Some(p), e) => write!(f, "{}:{e}", p.display()),
            CliError::Core(None, e) => write!(f, "{e}"),
            CliError::Usage(m) => f.write_str(m),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(None, e)
    }
}

type Res<T> = std::result::Result<T, CliError>;

fn load_chart(path: &Path) -> Res<Chart> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Io(path.to_path_buf(), e))?;
    parse_chart(&text).map_err(|e| CliError::Core(Some(path.to_path_buf()), e))
}

fn parse(text: &str, chart: &Chart, warnings: &mut Vec<String>) -> Res<Expr> {
    let p = parse_expression_with_warnings(text, chart)?;
    warnings.extend(p.warnings);
    Ok(p.expr)
}

fn form(text: &str, chart: &Chart, warnings: &mut Vec<String>) -> Res<SuperForm> {
    Ok(parse(text, chart, warnings)?.into_form()?)
}

fn field(text: &str, chart: &Chart, warnings: &mut Vec<String>) -> Res<VectorField> {
    Ok(parse(text, chart, warnings)?.into_field()?)
}

fn shift_degree(s: &Shift) -> Res<Degree> {
    let parity = if s.odd { Parity::Odd } else { Parity::Even };
    Ok(Degree::new(parity, parse_scalar(&s.weight)?))
}

fn chart_line(c: &Chart) -> String {
    c.to_string().lines().collect::<Vec<_>>().join("; ")
}

fn dispatch(cmd: &Command, warnings: &mut Vec<String>) -> Res<Report> {
    match cmd {
        Command::Weight { chart, expr } => {
            let c = load_chart(chart)?;
            let answer = match parse(expr, &c, warnings)? {
                Expr::Function(f) => weight_of(&f),
                Expr::Form(w) => form_weight(&w),
                Expr::Field(x) => field_weight(&x),
            };
            Ok(Report::ok(format!("degree: {answer}\n")))
        }
        Command::D { chart, form: w } => {
            let c = load_chart(chart)?;
            let w = form(w, &c, warnings)?;
            Ok(Report::ok(format!("result: {}\n", w.d())))
        }
        Command::Wedge { chart, left, right } => {
            let c = load_chart(chart)?;
            let a = form(left, &c, warnings)?;
            let b = form(right, &c, warnings)?;
            Ok(Report::ok(format!("result: {}\n", a.wedge(&b)?)))
        }
        Command::Interior { chart, field: x, form: w } => {
            let c = load_chart(chart)?;
            let x = field(x, &c, warnings)?;
            let w = form(w, &c, warnings)?;
            Ok(Report::ok(format!("result: {}\n", w.interior(&x)?)))
        }
        Command::Lie { chart, field: x, tensor } => {
            let c = load_chart(chart)?;
            let x = field(x, &c, warnings)?;
            let text = match parse(tensor, &c, warnings)? {
                Expr::Field(y) => x.bracket(&y)?.to_string(),
                other => other.into_form()?.lie(&x)?.to_string(),
            };
            Ok(Report::ok(format!("result: {text}\n")))
        }
        Command::Bracket { chart, left, right } => {
            let c = load_chart(chart)?;
            let x = field(left, &c, warnings)?;
            let y = field(right, &c, warnings)?;
            Ok(Report::ok(format!("result: {}\n", x.bracket(&y)?)))
        }
        Command::LiftT { chart, shift, field: y } => {
            let c = load_chart(chart)?;
            let lc = LiftedChart::tangent(&c, &shift_degree(shift)?)?;
            let y = field(y, &c, warnings)?;
            lift_report(&lc, &y, tangent_lift(&lc, &y)?)
        }
        Command::LiftCt { chart, shift, field: y } => {
            let c = load_chart(chart)?;
            let lc = LiftedChart::cotangent(&c, &shift_degree(shift)?)?;
            let y = field(y, &c, warnings)?;
            lift_report(&lc, &y, cotangent_lift(&lc, &y)?)
        }
        Command::Poincare { chart, form: w } => {
            let c = load_chart(chart)?;
            let w = form(w, &c, warnings)?;
            let p = poincare_primitive(&w)?;
            let diff = &p.alpha.d() - &w;
            let mut s = String::new();
            let _ = writeln!(s, "branch: {}", p.branch);
            let _ = writeln!(s, "degree: {}", p.degree);
            let _ = writeln!(s, "alpha: {}", p.alpha);
            let _ = writeln!(s, "check: d(alpha) - omega = {diff}");
            Ok(Report::verdict(s, diff.is_zero()))
        }
        Command::NormalForm { chart, form: w } => {
            let c = load_chart(chart)?;
            let w = form(w, &c, warnings)?;
            let g = skew_form_at_base(&w)?;
            let basis = normal_form(&g);
            let mut s = String::new();
            let _ = writeln!(s, "degree: {}", basis.degree);
            let _ = writeln!(s, "rank: {}", basis.rank());
            let _ = writeln!(s, "pairs: {}", basis.pairs);
            let ys: Vec<String> = basis
                .signs
                .iter()
                .zip(&basis.scales)
                .map(|(e, c)| format!("{}{}", if *e < 0 { "-" } else { "+" }, format_scalar(c)))
                .collect();
            let _ = writeln!(s, "y: {}", if ys.is_empty() { "none".to_string() } else { ys.join(", ") });
            let _ = writeln!(s, "kernel: {}", basis.kernel);
            let degs: Vec<String> = basis.degrees.iter().map(|d| format!("({d})")).collect();
            let _ = writeln!(s, "basis degrees: {}", degs.join(" "));
            let _ = write!(s, "change:\n{}", basis.change);
            let model_ok = &(&basis.change.transpose() * g.matrix()) * &basis.change == basis.model();
            let constraints = basis.degree_constraints_hold();
            let _ = writeln!(s, "check: P^T G P = normal form: {}", pass(model_ok));
            let _ = writeln!(s, "check: degree constraints: {}", pass(constraints));
            Ok(Report::verdict(s, model_ok && constraints))
        }
        Command::DarbouxPoint { chart, samples, form: w } => {
            let c = load_chart(chart)?;
            let w = form(w, &c, warnings)?;
            let rep = darboux_verify(&w)?;
            let mut s = String::new();
            let _ = writeln!(s, "degree: {}", rep.degree);
            let _ = writeln!(s, "pairs: {}", rep.basis.pairs);
            let _ = writeln!(s, "y blocks: {}", rep.basis.signs.len());
            let _ = writeln!(s, "kernel: {}", rep.basis.kernel);
            let _ = writeln!(s, "model: {}", rep.model);
            let _ = writeln!(s, "pointwise normal form: {}", pass(rep.pointwise));
            let _ = writeln!(s, "model closed: {}", pass(rep.model_closed));
            let _ = writeln!(s, "model homogeneous: {}", pass(rep.model_homogeneous));
            let _ = writeln!(s, "model full rank: {}", pass(rep.model_full_rank));
            let _ = writeln!(s, "degree constraints: {}", pass(rep.degree_constraints));
            let mut ok = rep.all_pass();
            if !samples.is_empty() {
                let points = samples
                    .iter()
                    .map(|p| p.split(',').map(parse_scalar).collect::<homsuper::Result<Vec<Scalar>>>())
                    .collect::<homsuper::Result<Vec<_>>>()?;
                let ranks = rank_at_body_points(&w, &points)?;
                for (p, r) in samples.iter().zip(&ranks.ranks) {
                    let _ = writeln!(s, "body rank at ({p}): {r}");
                }
                let _ = writeln!(s, "generic body rank: {}", ranks.generic_rank);
                let _ = writeln!(s, "nondegenerate at samples: {}", pass(ranks.symplectic()));
                ok &= ranks.symplectic();
            }
            let _ = writeln!(s, "result: {}", if ok { "all pass" } else { "violations" });
            Ok(Report::verdict(s, ok))
        }
        Command::Canonical { chart, shift } => {
            let c = load_chart(chart)?;
            let lambda = shift_degree(shift)?;
            let forms = canonical_symplectic(&c, &lambda)?;
            let minus_dtheta = -forms.theta.d();
            let mut s = String::new();
            let _ = writeln!(s, "coordinates: {}", chart_line(&forms.lifted.chart));
            let _ = writeln!(s, "theta: {}", forms.theta);
            let _ = writeln!(s, "omega: {}", forms.omega);
            let _ = writeln!(s, "degree: {}", tensor_weight(homsuper::Tensor::Form(&forms.omega)));
            let closed = forms.omega.is_closed();
            let exact = forms.omega == minus_dtheta;
            let _ = writeln!(s, "check: omega = -d(theta): {}", pass(exact));
            let _ = writeln!(s, "check: d(omega) = 0: {}", pass(closed));
            Ok(Report::verdict(s, closed && exact))
        }
        Command::Supergroup { group, a, b } => {
            let a = parse_scalar(a)?;
            let g = match group {
                Group::Gl11 => MatrixGroup::gl11(&a)?,
                Group::Sl21 => MatrixGroup::sl21(&a, &parse_scalar(b)?)?,
            };
            let rep = supergroup_axiom_suite(&g)?;
            Ok(Report::verdict(format!("{rep}\n"), rep.all_pass()))
        }
        Command::Pushforward { chart, target, map, inverse, field: x } => {
            let src = load_chart(chart)?;
            let tgt = load_chart(target)?;
            let fwd = functions(map, &src, warnings)?;
            let inv = functions(inverse, &tgt, warnings)?;
            let m = CoordinateMap::new(&src, &tgt, fwd, inv)?;
            if !m.check_inverse()? {
                return Err(CliError::Usage("--map and --inverse are not mutually inverse".into()));
            }
            let x = field(x, &src, warnings)?;
            let image = pushforward(&m, &x)?;
            let nabla = pushforward(&m, &src.weight_vector_field())?;
            let mut s = String::new();
            let _ = writeln!(s, "result: {image}");
            let _ = writeln!(s, "nabla: {nabla}");
            let _ = writeln!(s, "weights preserved: {}", yes(nabla == tgt.weight_vector_field()));
            Ok(Report::ok(s))
        }
        Command::DistCheck { chart, ansatz, fields } => {
            let c = load_chart(chart)?;
            let gens = fields
                .iter()
                .map(|t| field(t, &c, warnings))
                .collect::<Res<Vec<_>>>()?;
            let mut s = String::new();
            match distribution_is_homogeneous(&gens, *ansatz)? {
                DistVerdict::Proven(f) => {
                    let _ = writeln!(s, "verdict: proven");
                    for (i, row) in f.iter().enumerate() {
                        for (j, g) in row.iter().enumerate() {
                            let _ = writeln!(s, "f[{}][{}] = {g}", i + 1, j + 1);
                        }
                    }
                    let ok = verify_witnesses(&gens, &f)?;
                    let _ = writeln!(s, "check: [nabla, X_i] - sum_j f[i][j] X_j = 0: {}", pass(ok));
                    Ok(Report::verdict(s, ok))
                }
                DistVerdict::Inconclusive => {
                    let _ = writeln!(s, "verdict: inconclusive (no witnesses of degree <= {ansatz})");
                    Ok(Report::verdict(s, false))
                }
            }
        }
        Command::WeightMonoid { chart, bound } => {
            let c = load_chart(chart)?;
            let ws: Vec<String> = weight_monoid(&c, *bound).iter().map(format_scalar).collect();
            let mut s = String::new();
            let _ = writeln!(s, "nabla vanishes at base: {}", yes(c.weight_field_vanishes_at_base()));
            let _ = writeln!(s, "bound: {bound}");
            let _ = writeln!(s, "weights: {}", ws.join(", "));
            Ok(Report::ok(s))
        }
    }
}

fn functions(texts: &[String], chart: &Chart, warnings: &mut Vec<String>) -> Res<Vec<SuperFunction>> {
    texts
        .iter()
        .map(|t| Ok(parse(t, chart, warnings)?.into_function()?))
        .collect()
}

fn lift_report(lc: &LiftedChart, y: &VectorField, lift: VectorField) -> Res<Report> {
    let mut s = String::new();
    let _ = writeln!(s, "coordinates: {}", chart_line(&lc.chart));
    let _ = writeln!(s, "lift: {lift}");
    let _ = writeln!(s, "nabla: {}", lc.lifted_weight_field()?);
    let _ = writeln!(s, "degree: {}", field_weight(y));
    let _ = writeln!(s, "lift degree: {}", field_weight(&lift));
    Ok(Report::ok(s))
}

fn pass(b: bool) -> &'static str {
    if b {
        "pass"
    } else {
        "FAIL"
    }
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}
