//! Command-line front end. `run` parses arguments, dispatches, and returns
//! the process exit code: 0 on success, 1 when a verification finds a
//! counterexample, 2 on usage errors and unreadable input.

use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::chords::{ank, telephone, touchard, touchard_formula_rhs, touchard_riordan_rhs, AnkMethod, CatalanMatrix};
use crate::counting::{
    at_q, closed_form_alpha, count_anti_invariant_brute, invariant_counts, matrix_construct, pair_class_count,
    pair_class_recurrence_rhs, pair_class_table, sigma_closed, sigma_profile_brute, AlphaFormula, MatrixKind, Profile,
    SigmaFormula,
};
use crate::exactalg::QPoly;
use crate::gflinalg::{MatGF, MatrixFile, DEFAULT_GUARD};
use crate::gfq::{Fe, FieldCtx, FieldSpec};
use crate::universal::{
    closed_form_p, derive_universal_recurrence, detx_degree_check, heine_prefactors_match, recurrence_p, s_sum,
    solve_system, zero_sum_value, SumMethod, UniversalFormula, YPart,
};

#[derive(Debug, Parser)]
#[command(
    name = "antiinv",
    version,
    about = "Count anti-invariant and invariant subspaces over finite fields"
)]
struct Cli {
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Refuse enumerations that would visit more subspaces than this.
    #[arg(long, global = true, default_value_t = DEFAULT_GUARD)]
    guard: u64,
    /// Output format; `table` defaults to csv, everything else to json.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Pretty,
    Csv,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Counts for an operator read from a matrix file.
    #[command(subcommand)]
    Compute(Compute),
    /// Write a standard operator as a matrix file.
    Construct(ConstructArgs),
    /// Universal coefficients p_0..p_l.
    #[command(subcommand)]
    Derive(Derive),
    /// Check identities over a parameter range.
    #[command(subcommand)]
    Verify(Verify),
    /// Emit tables.
    #[command(subcommand)]
    Table(Table),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CountMethod {
    Brute,
    Formula,
}

#[derive(Debug, Subcommand)]
enum Compute {
    /// Number of l-dimensional anti-invariant subspaces.
    Alpha {
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long)]
        l: usize,
        #[arg(long, value_enum, default_value_t = CountMethod::Brute)]
        method: CountMethod,
    },
    /// Invariant-subspace counts X_0..X_n.
    Xj {
        #[arg(long)]
        matrix: PathBuf,
    },
    /// Number of subspaces with a given profile.
    Sigma {
        #[arg(long)]
        matrix: PathBuf,
        /// Comma-separated parts, e.g. 2,2.
        #[arg(long)]
        profile: String,
        #[arg(long, value_enum, default_value_t = CountMethod::Brute)]
        method: CountMethod,
    },
    /// Number of a-dimensional W with dim(W ∩ T^-1 W) = b.
    Pairclass {
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
        #[arg(long, value_enum, default_value_t = CountMethod::Brute)]
        method: CountMethod,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    NilpotentJordan,
    Companion,
    DiagDistinct,
    BlockTi,
    Irreducible,
    /// Uniformly random n x n matrix drawn from `--seed`.
    Random,
}

#[derive(Debug, Args)]
struct ConstructArgs {
    #[arg(long, value_enum)]
    kind: Kind,
    /// Field as `p=2,k=1`, or a JSON field spec.
    #[arg(long, default_value = "p=2,k=1")]
    field: String,
    /// Modulus coefficients (ascending) for extension fields.
    #[arg(long)]
    modulus: Option<String>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    l: Option<usize>,
    #[arg(long)]
    i: Option<usize>,
    /// Monic companion polynomial, ascending: comma-separated element indices
    /// or a JSON array whose entries are indices or coefficient arrays.
    #[arg(long)]
    poly: Option<String>,
    /// Accept a reducible companion polynomial.
    #[arg(long)]
    allow_reducible: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DeriveMethod {
    Recurrence,
    System,
    Closed,
}

#[derive(Debug, Subcommand)]
enum Derive {
    Universal {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        l: usize,
        #[arg(long, value_enum, default_value_t = DeriveMethod::Closed)]
        method: DeriveMethod,
    },
}

#[derive(Debug, Args)]
struct SampleArgs {
    #[arg(long, default_value_t = 3)]
    n: usize,
    /// Field order.
    #[arg(long, default_value_t = 2)]
    q: u32,
    /// Random operators to test in addition to the constructed ones.
    #[arg(long, default_value_t = 100)]
    samples: usize,
    /// Test every operator instead of a random sample.
    #[arg(long)]
    exhaustive: bool,
}

#[derive(Debug, Subcommand)]
enum Verify {
    /// Brute-force anti-invariant counts against the general formula.
    Main(SampleArgs),
    /// The closed form for the q-Hermite entries, one identity per n in 1..=max.
    Touchard {
        #[arg(long = "max-n", visible_alias = "max-m", default_value_t = 10)]
        max: usize,
    },
    /// (q-1)^m T_m(q) against its alternating-sum form, m in 1..=max.
    TouchardRiordan {
        #[arg(long = "max-m", default_value_t = 8)]
        max: usize,
    },
    /// Crossing polynomials by enumeration against the Catalan recurrence.
    Ank {
        #[arg(long = "max-n", default_value_t = 10)]
        max: usize,
    },
    /// The alternating identity that makes the block operators consistent.
    ZeroSum {
        #[arg(long = "max-n", default_value_t = 12)]
        max: usize,
    },
    /// Binomial and hypergeometric forms of the four partial sums.
    SSums {
        #[arg(long = "max-n", default_value_t = 10)]
        max: usize,
    },
    /// Degree of the determinant of the invariant-count table.
    DetDegree {
        #[arg(long = "max-n", default_value_t = 8)]
        max: usize,
    },
    /// The pair-class recurrence, numerically and symbolically.
    Recurrence(SampleArgs),
    /// Anti-invariant counts of T and its transpose against profile (n-l, l).
    Duality(SampleArgs),
}

#[derive(Debug, Subcommand)]
enum Table {
    /// Entries of the q-Hermite Catalan matrix.
    HermiteCatalan {
        #[arg(long, default_value_t = 10)]
        rows: usize,
        /// Write coefficient JSON instead of the sparse polynomial string.
        #[arg(long)]
        coeffs: bool,
    },
}

enum CliError {
    Usage(String),
}

impl<E: std::fmt::Display> From<E> for CliError {
    fn from(e: E) -> Self {
        CliError::Usage(e.to_string())
    }
}

struct Output {
    json: Value,
    text: String,
    csv: Option<String>,
    ok: bool,
}

impl Output {
    fn ok(json: Value, text: String) -> Self {
        Output {
            json,
            text,
            csv: None,
            ok: true,
        }
    }
}

/// Parse `args` (including the program name), execute, and write results.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if code == 0 { out } else { err };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };
    let format = cli.format.unwrap_or(match cli.command {
        Command::Table(_) => Format::Csv,
        _ => Format::Json,
    });
    match dispatch(&cli) {
        Ok(o) => {
            let body = match format {
                Format::Pretty => o.text,
                Format::Csv if o.csv.is_some() => o.csv.unwrap_or_default(),
                _ => serde_json::to_string(&o.json).expect("json"),
            };
            let _ = writeln!(out, "{}", body.trim_end());
            if o.ok {
                0
            } else {
                1
            }
        }
        Err(CliError::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn dispatch(cli: &Cli) -> Result<Output, CliError> {
    let guard = cli.guard;
    match &cli.command {
        Command::Compute(c) => compute(c, guard),
        Command::Construct(a) => construct(a, cli.seed),
        Command::Derive(Derive::Universal { n, l, method }) => derive(*n, *l, *method),
        Command::Verify(v) => verify(v, cli.seed, guard),
        Command::Table(Table::HermiteCatalan { rows, coeffs }) => Ok(hermite_table(*rows, *coeffs)),
    }
}

fn read_matrix(path: &Path) -> Result<MatGF, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    MatrixFile::parse(&text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

fn value_record(value: &BigInt, polynomial: Option<&QPoly>, method: &str) -> Output {
    Output::ok(
        json!({ "value": value.to_string(), "polynomial": polynomial, "method": method }),
        match polynomial {
            Some(p) => format!("{value}  ({p} at q)  [{method}]"),
            None => format!("{value}  [{method}]"),
        },
    )
}

fn compute(c: &Compute, guard: u64) -> Result<Output, CliError> {
    match c {
        Compute::Alpha { matrix, l, method } => {
            let t = read_matrix(matrix)?;
            match method {
                CountMethod::Brute => Ok(value_record(&count_anti_invariant_brute(&t, *l, guard)?, None, "brute")),
                CountMethod::Formula => {
                    let x = invariant_counts(&t, guard)?;
                    let poly = closed_form_alpha(t.rows(), *l, AlphaFormula::Main(&x))?;
                    Ok(value_record(&at_q(&poly, t.ctx()), Some(&poly), "formula"))
                }
            }
        }
        Compute::Xj { matrix } => {
            let t = read_matrix(matrix)?;
            let x = invariant_counts(&t, guard)?;
            let values: Vec<String> = x.0.iter().map(BigInt::to_string).collect();
            Ok(Output::ok(
                json!({ "value": values, "polynomial": null, "method": "brute" }),
                format!("X = [{}]  [brute]", values.join(", ")),
            ))
        }
        Compute::Sigma {
            matrix,
            profile,
            method,
        } => {
            let t = read_matrix(matrix)?;
            let mu: Profile = profile.parse()?;
            match method {
                CountMethod::Brute => Ok(value_record(&sigma_profile_brute(&t, &mu, guard)?, None, "brute")),
                CountMethod::Formula => {
                    let (formula, label) = sigma_formula_for(&t, mu, guard)?;
                    let poly = sigma_closed(&formula)?;
                    Ok(value_record(&at_q(&poly, t.ctx()), Some(&poly), label))
                }
            }
        }
        Compute::Pairclass { matrix, a, b, method } => {
            let t = read_matrix(matrix)?;
            match method {
                CountMethod::Brute => Ok(value_record(&pair_class_count(&t, *a, *b, guard)?, None, "brute")),
                CountMethod::Formula => {
                    if b > a || *a > t.rows() {
                        return Err(CliError::Usage(format!("need b <= a <= n, got a={a}, b={b}")));
                    }
                    let x = invariant_counts(&t, guard)?;
                    let s = derive_universal_recurrence(t.rows(), *a, *b);
                    let v = s.evaluate(t.ctx().order(), &x.0);
                    Ok(value_record(&v, None, "formula"))
                }
            }
        }
    }
}

/// Profile closed forms exist for operators with irreducible characteristic
/// polynomial and for scalar shifts of a regular nilpotent operator.
fn sigma_formula_for(t: &MatGF, mu: Profile, guard: u64) -> Result<(SigmaFormula, &'static str), CliError> {
    let n = t.rows();
    let x = invariant_counts(t, guard)?;
    if n > 0 && (1..n).all(|j| x.0[j] == BigInt::from(0)) {
        return Ok((SigmaFormula::Irreducible(mu), "formula:irreducible"));
    }
    let ctx = t.ctx();
    for lambda in ctx.elements() {
        let mut shifted = t.clone();
        for i in 0..n {
            shifted.set(i, i, ctx.sub(t.get(i, i), lambda));
        }
        let mut power = MatGF::identity(ctx.clone(), n);
        for _ in 0..n {
            power = power.mul(&shifted)?;
        }
        if power.is_zero() && shifted.rank() + 1 == n.max(1) {
            return Ok((SigmaFormula::Nilpotent(mu), "formula:nilpotent"));
        }
    }
    Err(CliError::Usage(
        "no closed form: operator is neither irreducible nor a shifted regular nilpotent".into(),
    ))
}

fn parse_field(field: &str, modulus: Option<&str>) -> Result<Arc<FieldCtx>, CliError> {
    let mut spec: FieldSpec = if field.trim_start().starts_with('{') {
        serde_json::from_str(field)?
    } else {
        let mut p = None;
        let mut k = 1;
        for part in field.split(',') {
            match part.split_once('=') {
                Some(("p", v)) => p = Some(v.trim().parse::<u32>()?),
                Some(("k", v)) => k = v.trim().parse::<usize>()?,
                _ => return Err(CliError::Usage(format!("bad field spec {field:?}; expected p=..,k=.."))),
            }
        }
        let p = p.ok_or_else(|| CliError::Usage(format!("field spec {field:?} lacks p")))?;
        FieldSpec { p, k, modulus: None }
    };
    if let Some(m) = modulus {
        spec.modulus = Some(parse_list::<u32>(m)?);
    }
    Ok(Arc::new(spec.build()?))
}

fn parse_list<T: std::str::FromStr>(s: &str) -> Result<Vec<T>, CliError>
where
    T::Err: std::fmt::Display,
{
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<T>()
                .map_err(|e| CliError::Usage(format!("{t:?}: {e}")))
        })
        .collect()
}

fn parse_poly(ctx: &FieldCtx, s: &str) -> Result<Vec<Fe>, CliError> {
    if s.trim_start().starts_with('[') {
        let entries: Vec<Value> = serde_json::from_str(s)?;
        entries
            .iter()
            .map(|e| match e {
                Value::Number(n) => {
                    let idx = n.as_u64().and_then(|v| u32::try_from(v).ok());
                    let idx = idx.ok_or_else(|| CliError::Usage(format!("bad coefficient {n}")))?;
                    Ok(ctx.element(idx)?)
                }
                Value::Array(_) => {
                    let c: Vec<u32> = serde_json::from_value(e.clone())?;
                    Ok(ctx.from_coeffs(&c)?)
                }
                other => Err(CliError::Usage(format!("bad coefficient {other}"))),
            })
            .collect()
    } else {
        parse_list::<u32>(s)?
            .into_iter()
            .map(|i| ctx.element(i).map_err(CliError::from))
            .collect()
    }
}

fn construct(a: &ConstructArgs, seed: u64) -> Result<Output, CliError> {
    let ctx = parse_field(&a.field, a.modulus.as_deref())?;
    let need = |v: Option<usize>, name: &str| v.ok_or_else(|| CliError::Usage(format!("--kind needs --{name}")));
    let kind = match a.kind {
        Kind::Random => None,
        Kind::NilpotentJordan => Some(MatrixKind::NilpotentJordan { n: need(a.n, "n")? }),
        Kind::DiagDistinct => Some(MatrixKind::DiagDistinct { n: need(a.n, "n")? }),
        Kind::Irreducible => Some(MatrixKind::Irreducible { n: need(a.n, "n")? }),
        Kind::BlockTi => Some(MatrixKind::BlockTi {
            n: need(a.n, "n")?,
            l: need(a.l, "l")?,
            i: need(a.i, "i")?,
        }),
        Kind::Companion => {
            let poly = a
                .poly
                .as_deref()
                .ok_or_else(|| CliError::Usage("--kind companion needs --poly".into()))?;
            Some(MatrixKind::Companion {
                poly: parse_poly(&ctx, poly)?,
                require_irreducible: !a.allow_reducible,
            })
        }
    };
    let m = match kind {
        Some(kind) => matrix_construct(&ctx, &kind)?,
        None => {
            let n = need(a.n, "n")?;
            MatGF::random(ctx.clone(), n, n, &mut ChaCha8Rng::seed_from_u64(seed))
        }
    };
    let text = MatrixFile::render(&m);
    if let Some(path) = &a.out {
        std::fs::write(path, format!("{text}\n")).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    }
    Ok(Output::ok(
        serde_json::from_str(&text).expect("rendered json"),
        format!("{m:?}"),
    ))
}

fn derive(n: usize, l: usize, method: DeriveMethod) -> Result<Output, CliError> {
    let (f, label): (UniversalFormula, &str) = match method {
        DeriveMethod::Recurrence => (recurrence_p(n, l)?, "recurrence"),
        DeriveMethod::System => (solve_system(n, l)?, "system"),
        DeriveMethod::Closed => (closed_form_p(n, l)?, "closed"),
    };
    let mut text = format!("alpha_{{{n},{l}}} = sum_j p_j X_j  [{label}]\n");
    for (j, p) in f.p.iter().enumerate() {
        let _ = writeln!(text, "p_{j} = {p}");
    }
    Ok(Output::ok(json!({ "n": n, "l": l, "method": label, "p": f.p }), text))
}

/// Tally of one verification run.
struct Tally {
    check: &'static str,
    passed: usize,
    total: usize,
    failures: Vec<Value>,
}

impl Tally {
    fn new(check: &'static str) -> Self {
        Tally {
            check,
            passed: 0,
            total: 0,
            failures: Vec::new(),
        }
    }

    fn record(&mut self, ok: bool, witness: impl FnOnce() -> Value) {
        self.total += 1;
        if ok {
            self.passed += 1;
        } else {
            self.failures.push(witness());
        }
    }

    fn finish(self) -> Output {
        let ok = self.failures.is_empty();
        let mut text = format!("{}: {}/{} identities hold", self.check, self.passed, self.total);
        for f in &self.failures {
            let _ = write!(text, "\nFAIL {f}");
        }
        Output {
            json: json!({
                "check": self.check,
                "passed": self.passed,
                "total": self.total,
                "ok": ok,
                "failures": self.failures,
            }),
            text,
            csv: None,
            ok,
        }
    }
}

fn matrix_json(t: &MatGF) -> Value {
    serde_json::from_str(&MatrixFile::render(t)).expect("rendered json")
}

/// Constructed operators followed by random or exhaustive ones.
fn operator_sample(a: &SampleArgs, seed: u64) -> Result<(Arc<FieldCtx>, Vec<MatGF>), CliError> {
    let ctx = Arc::new(FieldCtx::with_order(a.q)?);
    let n = a.n;
    let mut ops = Vec::new();
    let mut kinds = vec![MatrixKind::NilpotentJordan { n }];
    if n > 0 {
        kinds.push(MatrixKind::Irreducible { n });
    }
    if n as u32 <= a.q {
        kinds.push(MatrixKind::DiagDistinct { n });
    }
    for l in 1..=n / 2 {
        kinds.extend((1..=l).map(|i| MatrixKind::BlockTi { n, l, i }));
    }
    for k in &kinds {
        ops.push(matrix_construct(&ctx, k)?);
    }
    if a.exhaustive {
        let q = u64::from(a.q);
        let total = q
            .checked_pow((n * n) as u32)
            .filter(|&t| t <= 1 << 24)
            .ok_or_else(|| CliError::Usage(format!("too many operators for --exhaustive at n={n}, q={q}")))?;
        for code in 0..total {
            let entries: Vec<Fe> = (0..n * n)
                .map(|i| ctx.element((code / q.pow(i as u32) % q) as u32).expect("in range"))
                .collect();
            ops.push(MatGF::new(ctx.clone(), n, n, entries)?);
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        ops.extend((0..a.samples).map(|_| MatGF::random(ctx.clone(), n, n, &mut rng)));
    }
    Ok((ctx, ops))
}

fn verify(v: &Verify, seed: u64, guard: u64) -> Result<Output, CliError> {
    match v {
        Verify::Main(a) => {
            let (ctx, ops) = operator_sample(a, seed)?;
            let mut tally = Tally::new("main");
            for t in &ops {
                let x = invariant_counts(t, guard)?;
                for l in 0..=a.n / 2 {
                    let brute = count_anti_invariant_brute(t, l, guard)?;
                    let formula = at_q(&closed_form_alpha(a.n, l, AlphaFormula::Main(&x))?, &ctx);
                    tally.record(brute == formula, || {
                        json!({ "matrix": matrix_json(t), "l": l,
                                "brute": brute.to_string(), "formula": formula.to_string() })
                    });
                }
            }
            Ok(tally.finish())
        }
        Verify::Duality(a) => {
            let (_, ops) = operator_sample(a, seed)?;
            let mut tally = Tally::new("duality");
            for t in &ops {
                for l in 1..=a.n / 2 {
                    let alpha = count_anti_invariant_brute(t, l, guard)?;
                    let alpha_t = count_anti_invariant_brute(&t.transpose(), l, guard)?;
                    let mu = Profile::new(vec![a.n - l, l])?;
                    let sigma = sigma_profile_brute(t, &mu, guard)?;
                    tally.record(alpha == alpha_t && alpha == sigma, || {
                        json!({ "matrix": matrix_json(t), "l": l, "alpha": alpha.to_string(),
                                "alpha_transpose": alpha_t.to_string(), "sigma": sigma.to_string() })
                    });
                }
            }
            Ok(tally.finish())
        }
        Verify::Recurrence(a) => {
            let (ctx, ops) = operator_sample(a, seed)?;
            let q = ctx.order();
            let mut tally = Tally::new("recurrence");
            let symbolic: Vec<Vec<_>> = (0..=a.n)
                .map(|i| (0..=i).map(|j| derive_universal_recurrence(a.n, i, j)).collect())
                .collect();
            for t in &ops {
                let x = invariant_counts(t, guard)?;
                let pc = pair_class_table(t, guard)?;
                for i in 0..=a.n {
                    for j in 0..=i {
                        let numeric = if j < i {
                            pair_class_recurrence_rhs(q, a.n, i, j, &x, |a2, b2| pc[a2][b2].clone())
                        } else {
                            x.0[i].clone()
                        };
                        let sym = symbolic[i][j].evaluate(q, &x.0);
                        tally.record(numeric == pc[i][j] && sym == pc[i][j], || {
                            json!({ "matrix": matrix_json(t), "a": i, "b": j, "brute": pc[i][j].to_string(),
                                    "recurrence": numeric.to_string(), "symbolic": sym.to_string() })
                        });
                    }
                }
            }
            Ok(tally.finish())
        }
        Verify::Touchard { max } => {
            let mut tally = Tally::new("touchard");
            for n in 1..=*max {
                let bad: Vec<usize> = (0..=n / 2)
                    .filter(|&l| {
                        let lhs = (QPoly::from_i64s(&[-1, 1])).pow(l as u32) * ank(n, n - 2 * l, AnkMethod::Recurrence);
                        lhs != touchard_formula_rhs(n, l)
                    })
                    .collect();
                tally.record(bad.is_empty(), || json!({ "n": n, "l": bad }));
            }
            Ok(tally.finish())
        }
        Verify::TouchardRiordan { max } => {
            let mut tally = Tally::new("touchard-riordan");
            for m in 1..=*max {
                let lhs = QPoly::from_i64s(&[-1, 1]).pow(m as u32) * touchard(m);
                let rhs = touchard_riordan_rhs(m);
                tally.record(lhs == rhs, || json!({ "m": m, "lhs": lhs, "rhs": rhs }));
            }
            Ok(tally.finish())
        }
        Verify::Ank { max } => {
            let mut tally = Tally::new("ank");
            for n in 0..=*max {
                let mut total = BigInt::from(0);
                let mut bad = Vec::new();
                for k in 0..=n {
                    let e = ank(n, k, AnkMethod::Enumerate);
                    if e != ank(n, k, AnkMethod::Recurrence) {
                        bad.push(k);
                    }
                    total += e.eval_i64(1);
                }
                let tel = BigInt::from(telephone(n));
                tally.record(
                    bad.is_empty() && total == tel,
                    || json!({ "n": n, "k": bad, "involutions": total.to_string(), "telephone": tel.to_string() }),
                );
            }
            Ok(tally.finish())
        }
        Verify::ZeroSum { max } => {
            let mut tally = Tally::new("zero-sum");
            for (n, l, i) in nli_range(*max) {
                let v = zero_sum_value(n, l, i)?;
                tally.record(v.is_zero(), || json!({ "n": n, "l": l, "i": i, "value": v }));
            }
            Ok(tally.finish())
        }
        Verify::SSums { max } => {
            let mut tally = Tally::new("s-sums");
            for (n, l, i) in nli_range(*max) {
                let mut s = Vec::new();
                let mut forms_agree = true;
                for part in YPart::ALL {
                    let b = s_sum(n, l, i, part, SumMethod::Binomial)?;
                    forms_agree &= b == s_sum(n, l, i, part, SumMethod::Hypergeometric)?;
                    s.push(b);
                }
                let total = &(&(&s[0] + &s[1]) - &s[2]) - &s[3];
                let ok =
                    forms_agree && s[0] == s[3] && s[1] == s[2] && total.is_zero() && heine_prefactors_match(n, l, i)?;
                tally.record(ok, || json!({ "n": n, "l": l, "i": i, "forms_agree": forms_agree }));
            }
            Ok(tally.finish())
        }
        Verify::DetDegree { max } => {
            let mut tally = Tally::new("det-degree");
            for n in 2..=*max {
                for l in 1..=n / 2 {
                    let r = detx_degree_check(n, l)?;
                    tally.record(r.pass, || serde_json::to_value(&r).expect("json"));
                }
            }
            Ok(tally.finish())
        }
    }
}

fn nli_range(max_n: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (2..=max_n).flat_map(|n| (1..=n / 2).flat_map(move |l| (1..=l).map(move |i| (n, l, i))))
}

fn hermite_table(rows: usize, coeffs: bool) -> Output {
    let c = CatalanMatrix::q_hermite(rows);
    let mut csv = csv::Writer::from_writer(Vec::new());
    csv.write_record(["n", "k", "c_nk"]).expect("in-memory write");
    let mut records = Vec::new();
    for (n, k, p) in c.iter().filter(|(_, _, p)| !p.is_zero()) {
        let cell = if coeffs {
            serde_json::to_string(p).expect("json")
        } else {
            p.to_string()
        };
        csv.write_record([n.to_string(), k.to_string(), cell])
            .expect("in-memory write");
        records.push(json!({ "n": n, "k": k, "c": if coeffs { serde_json::to_value(p).expect("json") } else { json!(p.to_string()) } }));
    }
    let mut text = String::new();
    for r in &records {
        let _ = writeln!(text, "c[{}][{}] = {}", r["n"], r["k"], r["c"]);
    }
    let csv = String::from_utf8(csv.into_inner().expect("flush")).expect("utf8");
    Output {
        csv: Some(csv),
        ..Output::ok(Value::Array(records), text)
    }
}
