use clap::{error::ErrorKind, Parser, Subcommand, ValueEnum};
use gaussmanin::arrangement::{normalize_z_matrix, MasterFunction};
use gaussmanin::cohomology::{gauss_basis, gauss_manin, shift_exponents, PairTag, ShiftRecord};
use gaussmanin::exactalg::{fmt_rat, parse_rat, to_f64, Matrix, Rat, RatFunc};
use gaussmanin::fuchsian::{catalog_matrix, det_connection, FuchsianSystem};
use gaussmanin::numerics::{
    beta, euler_cycle_integral_on, hyp2f1, hyp2f1_series, kummer_local, relation_check_with, CycleId, KummerVariant,
    Relation, Side,
};
use gaussmanin::verify::{fmt_c, run, Check, RunConfig, Status, Suite, Tolerances};
use gaussmanin::Error;
use num_complex::Complex64;
use serde::Serialize;
use serde_json::{json, Map, Value};
use std::process::ExitCode;
use std::str::FromStr;
use std::time::Instant;

#[derive(Parser)]
#[command(name = "gaussmanin", version, about = "Gauss-Manin connections of hypergeometric integrals, exact and numeric")]
struct Cli {
    #[arg(long, value_enum, default_value = "json", global = true)]
    format: Format,
    /// File of `key=value` tolerance overrides, one per line.
    #[arg(long, global = true)]
    config: Option<String>,
    /// Report elapsed_ms as 0, so identical runs give identical bytes.
    #[arg(long, global = true)]
    deterministic: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Shift {
    Auto,
    Off,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Series,
    Euler,
    Ode,
    Kummer,
}

#[derive(Clone, Copy, ValueEnum)]
enum Variant {
    Corrected,
    Printed,
}

#[derive(Subcommand)]
enum Command {
    /// Derive the connection matrix for a Gauss-case basis pair and compare
    /// it with the closed form.
    Derive {
        #[arg(long)]
        pair: String,
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        #[arg(long, allow_hyphen_values = true)]
        c: String,
        #[arg(long, value_enum, default_value = "auto")]
        shift: Shift,
    },
    /// Evaluate F(a, b; c; z) or a related quantity by one method.
    Eval {
        #[arg(long, value_enum)]
        method: Method,
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        #[arg(long, allow_hyphen_values = true)]
        c: String,
        #[arg(long, allow_hyphen_values = true)]
        z: String,
        /// Integration cycle for `euler`.
        #[arg(long, default_value = "01")]
        cycle: String,
        /// Side of the cut, for cycles and arguments on it.
        #[arg(long)]
        side: Option<String>,
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=6))]
        kummer_index: Option<u8>,
        #[arg(long, value_enum, default_value = "corrected")]
        variant: Variant,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 20)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Bring a 2 x (n+1) matrix of rationals, given as JSON, to canonical form.
    Normalize {
        #[arg(long)]
        matrix: String,
    },
}

#[derive(Serialize)]
struct Report {
    command: String,
    inputs: Map<String, Value>,
    results: Vec<Check>,
    elapsed_ms: u64,
}

/// Outcome classes mapped onto the exit-code contract.
enum Failure {
    Domain(Error),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_usage() {
            Failure::Usage(e.to_string())
        } else {
            Failure::Domain(e)
        }
    }
}

type Out = std::result::Result<(Map<String, Value>, Vec<Check>), Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(3),
            };
        }
    };
    let tol = match load_config(cli.config.as_deref()) {
        Ok(t) => t,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(3);
        }
    };
    let start = Instant::now();
    let (name, out) = match &cli.command {
        Command::Derive { pair, a, b, c, shift } => ("derive", derive(pair, a, b, c, *shift)),
        Command::Eval { method, a, b, c, z, cycle, side, kummer_index, variant } => {
            ("eval", eval(*method, [a, b, c, z], cycle, side.as_deref(), *kummer_index, *variant, &tol))
        }
        Command::Verify { suite, samples, seed } => ("verify", verify(suite, *samples, *seed, tol)),
        Command::Normalize { matrix } => ("normalize", normalize(matrix)),
    };
    let (inputs, results) = match out {
        Ok(x) => x,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(3);
        }
        Err(Failure::Domain(e)) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let elapsed_ms = if cli.deterministic { 0 } else { start.elapsed().as_millis() as u64 };
    let report = Report { command: name.into(), inputs, results, elapsed_ms };
    match cli.format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&report).expect("report serializes")),
        Format::Text => print_text(&report),
    }
    if report.results.iter().all(Check::passed) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn print_text(r: &Report) {
    println!("{}", r.command);
    for (k, v) in &r.inputs {
        println!("  {k} = {}", v.as_str().map_or_else(|| v.to_string(), str::to_owned));
    }
    for c in &r.results {
        println!("{c}");
        if c.passed() && c.expected.is_empty() {
            println!("    value: {}", c.actual);
        }
    }
    let failed = r.results.iter().filter(|c| c.status == Status::Fail).count();
    println!("{} checks, {failed} failed, {} ms", r.results.len(), r.elapsed_ms);
}

fn load_config(path: Option<&str>) -> std::result::Result<Tolerances, String> {
    let mut tol = Tolerances::default();
    let Some(path) = path else { return Ok(tol) };
    let text = std::fs::read_to_string(path).map_err(|e| format!("cannot read {path}: {e}"))?;
    for (i, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (k, v) = line.split_once('=').ok_or_else(|| format!("{path}:{}: expected key=value", i + 1))?;
        tol.set(k.trim(), v.trim()).map_err(|e| format!("{path}:{}: {e}", i + 1))?;
    }
    Ok(tol)
}

fn inputs(pairs: &[(&str, String)]) -> Map<String, Value> {
    pairs.iter().map(|(k, v)| (k.to_string(), Value::String(v.clone()))).collect()
}

fn fmt_matrix(m: &Matrix<impl ToString>) -> String {
    let rows: Vec<String> = m.iter().map(|r| r.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(", ")).collect();
    format!("[[{}]]", rows.join("], ["))
}

fn fmt_rat_matrix(m: &Matrix<Rat>) -> String {
    fmt_matrix(&m.iter().map(|r| r.iter().map(fmt_rat).collect()).collect::<Vec<Vec<String>>>())
}

fn info(name: &str, method: &str, actual: String) -> Check {
    Check::exact(name.into(), method, String::new(), actual, true)
}

fn derive(pair: &str, a: &str, b: &str, c: &str, shift: Shift) -> Out {
    let tag = PairTag::from_str(pair)?;
    let (a, b, c) = (parse_rat(a)?, parse_rat(b)?, parse_rat(c)?);
    let m = MasterFunction::gauss(&a, &b, &c)?;
    let basis = gauss_basis(tag, &m)?;
    let (m2, basis2, record) = match shift {
        Shift::Off => (m.clone(), basis.clone(), ShiftRecord::identity()),
        // Bases sharing t^-1, or whose stripped forms would lose every pole,
        // cannot be shifted; those run unshifted.
        Shift::Auto => match shift_exponents(&m, &basis) {
            Ok(x) => x,
            Err(Error::UnabsorbableFactor(_)) => (m.clone(), basis.clone(), ShiftRecord::identity()),
            Err(e) => return Err(e.into()),
        },
    };
    let conn = gauss_manin(&basis2, &m2)?;
    let sys = FuchsianSystem::from_connection(&conn)?;
    let cat = catalog_matrix(tag, &a, &b, &c);
    let mut results = vec![info("shift", "exponent shift", record.to_string())];
    for (s, (got, want)) in sys.singular_points.iter().zip(sys.residues.iter().zip(&cat.residues)) {
        let name = format!("A{}", fmt_rat(s));
        results.push(Check::exact(name, "reduction vs catalog", fmt_rat_matrix(want), fmt_rat_matrix(got), got == want));
    }
    let ok = sys.singular_points == cat.singular_points && conn.matrix == cat.matrix();
    results.push(Check::exact("A(z)".into(), "reduction vs catalog", fmt_matrix(&cat.matrix()), fmt_matrix(&conn.matrix), ok));
    let z = RatFunc::z();
    let want = &RatFunc::constant(&a * &b) / &(&z * &(&z - &RatFunc::one()));
    let det = det_connection(&sys);
    results.push(Check::exact("det A(z)".into(), "exact determinant", want.to_string(), det.to_string(), det == want));
    let ins = inputs(&[
        ("pair", tag.as_str().into()),
        ("a", fmt_rat(&a)),
        ("b", fmt_rat(&b)),
        ("c", fmt_rat(&c)),
        ("shift", if shift == Shift::Auto { "auto" } else { "off" }.into()),
    ]);
    Ok((ins, results))
}

/// Numeric flag: `p/q`, an integer, or a decimal.
fn parse_real(s: &str) -> std::result::Result<f64, Failure> {
    parse_rat(s)
        .map(|r| to_f64(&r))
        .or_else(|_| s.parse::<f64>().ok().filter(|x| x.is_finite()).ok_or(()))
        .map_err(|_| Failure::Usage(format!("'{s}' is not a number")))
}

fn value_check(method: &str, v: Complex64, err_est: Option<f64>, tol: Option<f64>) -> Check {
    let mut c = Check::exact("value".into(), method, String::new(), fmt_c(v), true);
    c.exact = false;
    c.abs_err = err_est;
    c.tolerance = tol;
    c
}

#[allow(clippy::too_many_arguments)]
fn eval(
    method: Method,
    args: [&String; 4],
    cycle: &str,
    side: Option<&str>,
    kummer_index: Option<u8>,
    variant: Variant,
    tol: &Tolerances,
) -> Out {
    let [a, b, c, z] = args.map(|s| parse_real(s));
    let (a, b, c, z) = (a?, b?, c?, z?);
    let side = side.map(Side::from_str).transpose()?;
    let cx = |x: f64| Complex64::new(x, 0.0);
    let mut ins = inputs(&[("a", args[0].clone()), ("b", args[1].clone()), ("c", args[2].clone()), ("z", args[3].clone())]);
    let mut results = Vec::new();
    match method {
        Method::Series => {
            ins.insert("method".into(), json!("series"));
            let s = hyp2f1_series(cx(a), cx(b), cx(c), cx(z))?;
            let mut chk = value_check("series", s.value, Some(s.err_est), Some(1e-17));
            chk.name = format!("value ({} terms)", s.terms);
            results.push(chk);
        }
        Method::Euler => {
            let cyc = CycleId::from_str(cycle)?;
            let side = side.unwrap_or(cyc.default_side());
            ins.insert("method".into(), json!("euler"));
            ins.insert("cycle".into(), json!(cyc.as_str()));
            if cyc.has_side() {
                ins.insert("side".into(), json!(side.to_string()));
            }
            let r = euler_cycle_integral_on(a, b, c, z, cyc, side, &tol.quad)?;
            results.push(value_check("tanh-sinh", r.value, Some(r.err_est), Some(tol.quad.rel_tol)));
            if cyc == CycleId::ZeroOne && z == 0.0 {
                let bb = beta(cx(a), cx(c - a))?;
                results.push(Check::numeric("B(a, c-a)".into(), "beta function", bb, r.value, 1e-12));
            }
        }
        Method::Ode => {
            let side = side.unwrap_or(Side::Upper);
            ins.insert("method".into(), json!("ode"));
            ins.insert("side".into(), json!(side.to_string()));
            let v = hyp2f1(cx(a), cx(b), cx(c), cx(z), side)?;
            results.push(value_check("series start + RK45 continuation", v, None, Some(tol.ode.rel_tol)));
        }
        Method::Kummer => {
            let k = kummer_index.ok_or_else(|| Failure::Usage("--kummer-index is required for --method kummer".into()))? as usize;
            let side = side.unwrap_or(Side::Upper);
            let variant = match variant {
                Variant::Corrected => KummerVariant::Corrected,
                Variant::Printed => KummerVariant::AsPrinted,
            };
            ins.insert("method".into(), json!("kummer"));
            ins.insert("kummer_index".into(), json!(k));
            ins.insert("variant".into(), json!(format!("{variant:?}").to_lowercase()));
            let v = kummer_local(k, cx(a), cx(b), cx(c), cx(z), variant, side)?;
            results.push(value_check(&format!("f{k}"), v, None, None));
            // inside (0, 1) the matching cycle integral is available as a check
            if z > 0.0 && z < 1.0 {
                let rel = Relation::new(k)?;
                let tol_rel = if k == 1 { 1e-8 } else { 1e-6 };
                match relation_check_with(k, rel.cycle, rel.cycle.default_side(), variant, a, b, c, z, &tol.quad) {
                    Ok(r) => results.push(Check::numeric(
                        format!("relation {} over {}", rel.letter(), r.cycle),
                        "cycle integral vs phase*B*f",
                        r.rhs,
                        r.lhs,
                        tol_rel,
                    )),
                    Err(e) => results.push(Check::failed(format!("relation {}", rel.letter()), "cycle integral", "finite".into(), &e)),
                }
            }
        }
    }
    Ok((ins, results))
}

fn verify(suite: &str, samples: usize, seed: u64, tol: Tolerances) -> Out {
    let s = Suite::from_str(suite)?;
    let cfg = RunConfig { samples, seed, tol };
    let mut ins = inputs(&[("suite", s.as_str().into())]);
    ins.insert("samples".into(), json!(samples));
    ins.insert("seed".into(), json!(seed));
    ins.insert("tolerances".into(), serde_json::to_value(&cfg.tol).expect("tolerances serialize"));
    Ok((ins, run(s, &cfg)))
}

fn normalize(matrix: &str) -> Out {
    let raw: Vec<Vec<String>> =
        serde_json::from_str(matrix).map_err(|e| Failure::Usage(format!("--matrix must be a JSON array of two rows of strings: {e}")))?;
    if raw.len() != 2 {
        return Err(Failure::Usage(format!("--matrix has {} rows, expected 2", raw.len())));
    }
    let row = |r: &Vec<String>| r.iter().map(|s| parse_rat(s).map(RatFunc::constant)).collect::<gaussmanin::Result<Vec<_>>>();
    let m = [row(&raw[0])?, row(&raw[1])?];
    let cfg = normalize_z_matrix(&m)?;
    let results = cfg
        .params()
        .iter()
        .enumerate()
        .map(|(i, p)| info(&format!("z{}", i + 3), "cross-ratio", p.to_string()))
        .collect();
    Ok((inputs(&[("matrix", matrix.into())]), results))
}
