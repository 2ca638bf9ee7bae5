//! Verification suites: exact comparisons of derived systems against the
//! closed-form catalog, and numeric agreement between independent evaluation
//! routes. Samples are drawn from a seeded generator, so a given seed always
//! yields the same report.

use crate::arrangement::{build_master, ConfigZ, MasterFunction, Mode};
use crate::cohomology::{
    cohomology_rank, default_basis, gauss_basis, gauss_manin, nabla0, BasisForm, Connection, OneForm, PairTag,
    PreparedBasis, TRational,
};
use crate::error::{Error, Result};
use crate::exactalg::{fmt_rat, int, is_integer, rat, to_f64, Matrix, Rat, RatFunc};
use crate::fuchsian::{catalog_matrix, det_connection, to_scalar, weyl_reduce, FuchsianSystem, ScalarODE2, WeylElement};
use crate::numerics::{
    beta, covariance_check, euler_cycle_integral, form_integral_01, hyp2f1_series, ode_solve_path, rel_err,
    relation_check, relation_check_with, CycleId, KummerVariant, OdeTol, PathPlan, QuadSpec, Side,
};
use crate::par;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// One line of a report. Exact checks set `exact`; numeric ones carry the
/// discrepancy and the tolerance it was held to.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub method: String,
    pub expected: String,
    pub actual: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub abs_err: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rel_err: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tolerance: Option<f64>,
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub exact: bool,
}

impl Check {
    pub fn exact(name: String, method: &str, expected: String, actual: String, ok: bool) -> Self {
        Check {
            name,
            status: if ok { Status::Pass } else { Status::Fail },
            method: method.into(),
            expected,
            actual,
            abs_err: None,
            rel_err: None,
            tolerance: None,
            exact: true,
        }
    }

    pub fn numeric(name: String, method: &str, expected: Complex64, actual: Complex64, tol: f64) -> Self {
        let re = rel_err(actual, expected);
        Check {
            name,
            status: if re < tol { Status::Pass } else { Status::Fail },
            method: method.into(),
            expected: fmt_c(expected),
            actual: fmt_c(actual),
            abs_err: Some((actual - expected).norm()),
            rel_err: Some(re),
            tolerance: Some(tol),
            exact: false,
        }
    }

    pub fn failed(name: String, method: &str, expected: String, err: &Error) -> Self {
        Check {
            name,
            status: Status::Fail,
            method: method.into(),
            expected,
            actual: format!("error: {err}"),
            abs_err: None,
            rel_err: None,
            tolerance: None,
            exact: false,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{tag} {} [{}]", self.name, self.method)?;
        if let (Some(r), Some(t)) = (self.rel_err, self.tolerance) {
            write!(f, " rel_err={r:.2e} tol={t:.0e}")?;
        }
        if !self.passed() {
            write!(f, "\n    expected: {}\n    actual:   {}", self.expected, self.actual)?;
        }
        Ok(())
    }
}

pub fn fmt_c(z: Complex64) -> String {
    format!("{:.15e}{:+.15e}i", z.re, z.im)
}

fn fmt_matrix(m: &Matrix<RatFunc>) -> String {
    let rows: Vec<String> = m.iter().map(|r| r.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(", ")).collect();
    format!("[[{}]]", rows.join("], ["))
}

/// Numeric tolerances of the suites, settable from `key=value` pairs.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Tolerances {
    pub series_rel: f64,
    pub relation_a_rel: f64,
    pub relation_rel: f64,
    pub match_rel: f64,
    pub ode_rel: f64,
    pub covariance_rel: f64,
    #[serde(skip)]
    pub quad: QuadSpec,
    #[serde(skip)]
    pub ode: OdeTol,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            series_rel: 1e-10,
            relation_a_rel: 1e-8,
            relation_rel: 1e-6,
            match_rel: 1e-6,
            ode_rel: 1e-6,
            covariance_rel: 1e-8,
            quad: QuadSpec::default(),
            ode: OdeTol::default(),
        }
    }
}

impl Tolerances {
    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        let bad = || Error::Parse(format!("bad value {value:?} for {key}"));
        let f = || value.parse::<f64>().ok().filter(|x| x.is_finite() && *x > 0.0).ok_or_else(bad);
        match key {
            "series_rel" => self.series_rel = f()?,
            "relation_a_rel" => self.relation_a_rel = f()?,
            "relation_rel" => self.relation_rel = f()?,
            "match_rel" => self.match_rel = f()?,
            "ode_rel" => self.ode_rel = f()?,
            "covariance_rel" => self.covariance_rel = f()?,
            "quad_levels" => self.quad.levels = value.parse().map_err(|_| bad())?,
            "quad_abs" => self.quad.abs_tol = f()?,
            "quad_rel" => self.quad.rel_tol = f()?,
            "ode_abs" => self.ode.abs_tol = f()?,
            "ode_step_rel" => self.ode.rel_tol = f()?,
            "ode_max_steps" => self.ode.max_steps = value.parse().map_err(|_| bad())?,
            _ => return Err(Error::Parse(format!("unknown tolerance key {key:?}"))),
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Matrices,
    Det,
    Scalar,
    Weyl,
    Relations,
    Covariance,
    ReduceProps,
    Series,
    Ode,
    Dimension,
    All,
}

impl Suite {
    pub const EACH: [Suite; 10] = [
        Suite::Matrices,
        Suite::Det,
        Suite::Scalar,
        Suite::Weyl,
        Suite::ReduceProps,
        Suite::Series,
        Suite::Relations,
        Suite::Ode,
        Suite::Covariance,
        Suite::Dimension,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Suite::Matrices => "matrices",
            Suite::Det => "det",
            Suite::Scalar => "scalar",
            Suite::Weyl => "weyl",
            Suite::Relations => "relations",
            Suite::Covariance => "covariance",
            Suite::ReduceProps => "reduce-props",
            Suite::Series => "series",
            Suite::Ode => "ode",
            Suite::Dimension => "dimension",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.as_str() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub samples: usize,
    pub seed: u64,
    pub tol: Tolerances,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig { samples: 20, seed: 0, tol: Tolerances::default() }
    }
}

pub fn run(suite: Suite, cfg: &RunConfig) -> Vec<Check> {
    match suite {
        Suite::Matrices => matrices(cfg),
        Suite::Det => det_suite(cfg),
        Suite::Scalar => scalar_suite(cfg),
        Suite::Weyl => weyl_suite(cfg),
        Suite::Relations => relations_suite(cfg),
        Suite::Covariance => covariance_suite(cfg),
        Suite::ReduceProps => reduce_props(cfg),
        Suite::Series => series_suite(cfg),
        Suite::Ode => ode_suite(cfg),
        Suite::Dimension => dimension_suite(cfg),
        Suite::All => Suite::EACH.iter().flat_map(|&s| run(s, cfg)).collect(),
    }
}

// ---- sampling ----

fn small_rat(rng: &mut ChaCha8Rng, bound: i64) -> Rat {
    let d = rng.gen_range(2..=9i64);
    rat(rng.gen_range(-bound * d..=bound * d), d)
}

/// No integer among `a, b, c, c-a, c-b, a-b, c-a-b`: all exponents of `Phi`
/// and every divisor met by the reduction stay nonzero.
pub fn non_resonant(a: &Rat, b: &Rat, c: &Rat) -> bool {
    [a.clone(), b.clone(), c.clone(), c - a, c - b, a - b, c - a - b].iter().all(|x| !is_integer(x))
}

pub fn gauss_samples(seed: u64, count: usize) -> Vec<(Rat, Rat, Rat)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| loop {
            let (a, b, c) = (small_rat(&mut rng, 3), small_rat(&mut rng, 3), small_rat(&mut rng, 3));
            if non_resonant(&a, &b, &c) {
                break (a, b, c);
            }
        })
        .collect()
}

fn sample_label(i: usize, (a, b, c): &(Rat, Rat, Rat)) -> String {
    format!("#{i:02} a={} b={} c={}", fmt_rat(a), fmt_rat(b), fmt_rat(c))
}

fn random_coeff(rng: &mut ChaCha8Rng) -> RatFunc {
    // c0 + c1 z, so that the coefficients really depend on the parameter
    let c0 = RatFunc::constant(small_rat(rng, 2));
    let c1 = RatFunc::constant(small_rat(rng, 1));
    &c0 + &(&c1 * &RatFunc::z())
}

/// A random function of `t` with poles of order up to `max_order` at each
/// finite zero `1..=n` and a polynomial part of degree up to 2.
pub fn random_trational(rng: &mut ChaCha8Rng, n: usize, max_order: usize) -> TRational {
    let mut g = TRational::zero();
    for j in 1..=n {
        for k in 1..=rng.gen_range(0..=max_order) {
            g = g.add(&TRational::pole(j, k, random_coeff(rng)));
        }
    }
    for k in 0..=rng.gen_range(0..=2usize) {
        g = g.add(&TRational::monomial(k, random_coeff(rng)));
    }
    g
}

// ---- exact suites ----

/// Gauss master function, basis and connection for one pair, unshifted.
pub fn derive_pair(tag: PairTag, a: &Rat, b: &Rat, c: &Rat) -> Result<(MasterFunction, Vec<BasisForm>, Connection)> {
    let m = MasterFunction::gauss(a, b, c)?;
    let basis = gauss_basis(tag, &m)?;
    let conn = gauss_manin(&basis, &m)?;
    Ok((m, basis, conn))
}

fn matrices(cfg: &RunConfig) -> Vec<Check> {
    let samples = gauss_samples(cfg.seed, cfg.samples);
    let jobs: Vec<(PairTag, usize)> = PairTag::ALL.iter().flat_map(|&t| (0..samples.len()).map(move |i| (t, i))).collect();
    par::map(&jobs, |&(tag, i)| {
        let (a, b, c) = &samples[i];
        let name = format!("matrices/{tag}/{}", sample_label(i, &samples[i]));
        let expected = catalog_matrix(tag, a, b, c).matrix();
        match derive_pair(tag, a, b, c) {
            Ok((_, _, conn)) => {
                Check::exact(name, "reduction vs catalog", fmt_matrix(&expected), fmt_matrix(&conn.matrix), conn.matrix == expected)
            }
            Err(e) => Check::failed(name, "reduction vs catalog", fmt_matrix(&expected), &e),
        }
    })
}

/// Run `f` on every sample for every pair and report one line per pair.
fn per_pair<F>(cfg: &RunConfig, suite: &str, method: &str, expected: &str, f: F) -> Vec<Check>
where
    F: Fn(&FuchsianSystem, &Rat, &Rat, &Rat) -> std::result::Result<(), String> + Sync + Send,
{
    let samples = gauss_samples(cfg.seed, cfg.samples);
    par::map(&PairTag::ALL, |&tag| {
        let mut failure = None;
        for (i, s) in samples.iter().enumerate() {
            let (a, b, c) = s;
            let r = derive_pair(tag, a, b, c)
                .and_then(|(_, _, conn)| FuchsianSystem::from_connection(&conn))
                .map_err(|e| format!("error: {e}"))
                .and_then(|sys| f(&sys, a, b, c));
            if let Err(msg) = r {
                failure = Some(format!("{}: {msg}", sample_label(i, s)));
                break;
            }
        }
        let name = format!("{suite}/{tag}");
        match failure {
            None => Check::exact(name, method, expected.into(), format!("equal on {} of {} samples", samples.len(), samples.len()), true),
            Some(msg) => Check::exact(name, method, expected.into(), msg, false),
        }
    })
}

fn det_suite(cfg: &RunConfig) -> Vec<Check> {
    per_pair(cfg, "det", "det of derived system", "a*b/(z*(z-1))", |sys, a, b, _| {
        let z = RatFunc::z();
        let want = &RatFunc::constant(a * b) / &(&z * &(&z - &RatFunc::one()));
        let got = det_connection(sys);
        if got == want {
            Ok(())
        } else {
            Err(format!("det = {got}, want {want}"))
        }
    })
}

fn scalar_suite(cfg: &RunConfig) -> Vec<Check> {
    per_pair(cfg, "scalar", "elimination of the second component", "p = c/z + (a+b+1-c)/(z-1), q = ab/(z(z-1))", |sys, a, b, c| {
        let got = to_scalar(sys, 0).map_err(|e| format!("error: {e}"))?;
        let want = ScalarODE2::gauss(a, b, c);
        if got.component == 0 && got.same_operator(&want) {
            Ok(())
        } else {
            Err(format!("component {}: p = {}, q = {}", got.component, got.p, got.q))
        }
    })
}

/// `z(z-1) d^2 + ((a+b+1) z - c) d + ab`, written out term by term.
fn gauss_operator(a: &Rat, b: &Rat, c: &Rat) -> WeylElement {
    WeylElement::term(2, 2, int(1))
        .add(&WeylElement::term(1, 2, int(-1)))
        .add(&WeylElement::term(1, 1, a + b + int(1)))
        .add(&WeylElement::term(0, 1, -c))
        .add(&WeylElement::constant(a * b))
}

fn weyl_suite(cfg: &RunConfig) -> Vec<Check> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x5745_594c);
    let alphas: Vec<[Rat; 4]> = (0..cfg.samples)
        .map(|_| {
            let (a1, a2, a3) = (small_rat(&mut rng, 3), small_rat(&mut rng, 3), small_rat(&mut rng, 3));
            [int(-2) - &a1 - &a2 - &a3, a1, a2, a3]
        })
        .collect();
    par::map(&(0..alphas.len()).collect::<Vec<_>>(), |&i| {
        let al = &alphas[i];
        let name = format!(
            "weyl/#{i:02} alpha=({}, {}, {}, {})",
            fmt_rat(&al[0]),
            fmt_rat(&al[1]),
            fmt_rat(&al[2]),
            fmt_rat(&al[3])
        );
        let (a, b, c) = (&al[1] + int(1), -&al[3], &al[1] + &al[2] + int(2));
        let want = gauss_operator(&a, &b, &c);
        let method = "normal-ordered expansion";
        match weyl_reduce(al) {
            Ok((ode, op, params)) => {
                let ok = op == want && params == (a.clone(), b.clone(), c.clone()) && ode.same_operator(&ScalarODE2::gauss(&a, &b, &c));
                Check::exact(name, method, format!("{want}"), format!("{op}"), ok)
            }
            Err(e) => Check::failed(name, method, format!("{want}"), &e),
        }
    })
}

fn reduce_props(cfg: &RunConfig) -> Vec<Check> {
    let samples = gauss_samples(cfg.seed, cfg.samples);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x5245_4455);
    let gs: Vec<(TRational, TRational)> = (0..samples.len()).map(|_| (random_trational(&mut rng, 3, 3), random_trational(&mut rng, 3, 3))).collect();
    let per: Vec<Vec<Check>> = par::map(&(0..samples.len()).collect::<Vec<_>>(), |&i| {
        let (a, b, c) = &samples[i];
        let label = sample_label(i, &samples[i]);
        let run = || -> Result<(Check, Check)> {
            let m = MasterFunction::gauss(a, b, c)?;
            let basis = default_basis(&m);
            let pb = PreparedBasis::new(&basis, &m)?;
            let (g, eta) = &gs[i];
            let class = pb.reduce(&nabla0(g, &m), &m)?;
            let zero = class.coords.iter().all(|x| x.is_zero());
            let shown: Vec<String> = class.coords.iter().map(|x| x.to_string()).collect();
            let exact = Check::exact(format!("reduce-props/exact/{label}"), "reduce(nabla g)", "[0, 0]".into(), format!("[{}]", shown.join(", ")), zero);
            // eta - sum x_i phi_i must be nabla of the returned witness
            let class = pb.reduce(eta, &m)?;
            let mut rest: OneForm = eta.clone();
            for (x, bf) in class.coords.iter().zip(&basis) {
                rest = rest.sub(&bf.form.scale(x));
            }
            let ok = rest == nabla0(&class.witness, &m);
            let witness = Check::exact(format!("reduce-props/witness/{label}"), "eta - sum x_i phi_i = nabla g", "equal".into(), if ok { "equal" } else { "differ" }.into(), ok);
            Ok((exact, witness))
        };
        match run() {
            Ok((x, w)) => vec![x, w],
            Err(e) => vec![Check::failed(format!("reduce-props/{label}"), "reduction", "success".into(), &e)],
        }
    });
    per.into_iter().flatten().collect()
}

fn dimension_suite(cfg: &RunConfig) -> Vec<Check> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x44_494d);
    let mut jobs = Vec::new();
    for n in 3..=5usize {
        for i in 0..cfg.samples.clamp(1, 5) {
            let exps = loop {
                let mut e: Vec<Rat> = (1..=n).map(|_| small_rat(&mut rng, 2)).collect();
                let s: Rat = e.iter().sum();
                e.insert(0, int(-2) - s);
                if e.iter().all(|x| !is_integer(x)) {
                    break e;
                }
            };
            let forms: Vec<TRational> = (0..2 * n).map(|_| random_trational(&mut rng, n, 3)).collect();
            jobs.push((n, i, exps, forms));
        }
    }
    par::map(&jobs, |(n, i, exps, forms)| {
        let name = format!("dimension/n={n}/#{i:02}");
        let run = || -> Result<(usize, usize)> {
            // z_3 = z symbolic, further points at fixed rationals
            let mut params = vec![RatFunc::z()];
            params.extend([rat(1, 3), rat(2, 7)].into_iter().take(n - 3).map(RatFunc::constant));
            let m = build_master(&ConfigZ::new(params)?, exps, Mode::Projective)?;
            let basis: Vec<OneForm> = default_basis(&m).into_iter().map(|b| b.form).collect();
            Ok((cohomology_rank(&basis, &m)?, cohomology_rank(forms, &m)?))
        };
        let want = n - 1;
        match run() {
            Ok((rb, rf)) => Check::exact(
                name,
                "exact rank of reduced residue vectors",
                format!("basis {want}, random span {want}"),
                format!("basis {rb}, random span {rf}"),
                rb == want && rf == want,
            ),
            Err(e) => Check::failed(name, "exact rank", format!("{want}"), &e),
        }
    })
}

// ---- numeric suites ----

fn c64(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

fn series_suite(cfg: &RunConfig) -> Vec<Check> {
    let mut jobs = Vec::new();
    for a in [0.25, 0.5, 0.75] {
        for cma in [0.25, 0.5, 0.75] {
            for b in [0.2, 0.5] {
                for z in [0.1, 0.3, 0.5, 0.7] {
                    jobs.push((a, b, a + cma, z));
                }
            }
        }
    }
    par::map(&jobs, |&(a, b, c, z)| {
        let name = format!("series/a={a} b={b} c={c} z={z}");
        let method = "euler(01)/B(a,c-a) vs series";
        let run = || -> Result<(Complex64, Complex64)> {
            let s = hyp2f1_series(c64(a), c64(b), c64(c), c64(z))?.value;
            let e = euler_cycle_integral(a, b, c, z, CycleId::ZeroOne, &cfg.tol.quad)?.value / beta(c64(a), c64(c - a))?;
            Ok((s, e))
        };
        match run() {
            Ok((s, e)) => Check::numeric(name, method, s, e, cfg.tol.series_rel),
            Err(e) => Check::failed(name, method, "finite".into(), &e),
        }
    })
}

/// Parameter points where every cycle integral converges: `a, c-a, 1-b,
/// b-c+1` positive.
pub const RELATION_POINTS: [(f64, f64, f64, f64); 3] = [(0.3, 0.2, 0.7, 0.4), (0.45, 0.35, 0.8, 0.25), (0.6, 0.3, 0.9, 0.7)];

fn relations_suite(cfg: &RunConfig) -> Vec<Check> {
    let mut jobs = Vec::new();
    for (p, _) in RELATION_POINTS.iter().enumerate() {
        for index in 1..=6usize {
            jobs.push((p, index));
        }
    }
    par::map(&jobs, |&(p, index)| {
        let (a, b, c, z) = RELATION_POINTS[p];
        let letter = (b'a' + (index - 1) as u8) as char;
        let name = format!("relations/{letter}/a={a} b={b} c={c} z={z}");
        let q = &cfg.tol.quad;
        match index {
            4 | 5 => unique_match(name, index, a, b, c, z, cfg),
            _ => {
                let tol = if index == 1 { cfg.tol.relation_a_rel } else { cfg.tol.relation_rel };
                match relation_check(index, a, b, c, z, q) {
                    Ok(r) => Check::numeric(name, &format!("cycle {} ({}) vs phase*B*f{}", r.cycle, r.side, r.relation.kummer), r.rhs, r.lhs, tol),
                    Err(e) => Check::failed(name, "cycle vs Kummer", "finite".into(), &e),
                }
            }
        }
    })
}

/// Search cycles, sides and (for `f_4`) the two Kummer readings; pass when
/// exactly one combination satisfies the relation.
fn unique_match(name: String, index: usize, a: f64, b: f64, c: f64, z: f64, cfg: &RunConfig) -> Check {
    let variants: &[KummerVariant] =
        if index == 4 { &[KummerVariant::Corrected, KummerVariant::AsPrinted] } else { &[KummerVariant::Corrected] };
    let mut hits = Vec::new();
    let mut best = f64::INFINITY;
    for &v in variants {
        for cycle in CycleId::ALL {
            let sides: &[Side] = if cycle.has_side() { &[Side::Upper, Side::Lower] } else { &[Side::Upper] };
            for &side in sides {
                if let Ok(r) = relation_check_with(index, cycle, side, v, a, b, c, z, &cfg.tol.quad) {
                    best = best.min(r.rel_err);
                    if r.rel_err < cfg.tol.match_rel {
                        hits.push(format!("{v:?} {cycle} {side} (rel_err {:.1e})", r.rel_err));
                    }
                }
            }
        }
    }
    let ok = hits.len() == 1;
    let actual = if hits.is_empty() { format!("no match, best rel_err {best:.2e}") } else { hits.join("; ") };
    Check {
        name,
        status: if ok { Status::Pass } else { Status::Fail },
        method: "search over cycles, sides and Kummer readings".into(),
        expected: "exactly one match".into(),
        actual,
        abs_err: None,
        rel_err: Some(best),
        tolerance: Some(cfg.tol.match_rel),
        exact: false,
    }
}

fn covariance_suite(cfg: &RunConfig) -> Vec<Check> {
    let (a, b, c, z) = (0.3, 0.2, 0.7, 0.4);
    let alpha = [b - c, a - 1.0, c - a - 1.0, -b];
    let zc = [vec![1.0, 0.0, 1.0, 1.0], vec![0.0, 1.0, -1.0, -z]];
    let cases: Vec<(&str, [[f64; 2]; 2], [f64; 4])> = vec![
        ("g=1+E01/10", [[1.0, 0.1], [0.0, 1.0]], [1.0, 1.0, 1.0, 1.5]),
        ("g=1+E10/10", [[1.0, 0.0], [0.1, 1.0]], [1.0, 1.0, 1.0, 1.5]),
        ("g=generic", [[1.2, 0.3], [-0.1, 0.9]], [2.0, 0.5, 1.25, 1.0]),
    ];
    let per = par::map(&cases, |(label, g, h)| match covariance_check(&zc, g, h, &alpha, (1, 2), &cfg.tol.quad) {
        Ok(r) => vec![
            Check::numeric(format!("covariance/linear/{label}"), "F(gZ) vs F(Z)/det g", c64(r.linear.rhs), c64(r.linear.lhs), cfg.tol.covariance_rel),
            Check::numeric(
                format!("covariance/scale/{label} h=({}, {}, {}, {})", h[0], h[1], h[2], h[3]),
                "F(Zh) vs F(Z) prod h^alpha",
                c64(r.scale.rhs),
                c64(r.scale.lhs),
                cfg.tol.covariance_rel,
            ),
        ],
        Err(e) => vec![Check::failed(format!("covariance/{label}"), "projective quadrature", "finite".into(), &e)],
    });
    per.into_iter().flatten().collect()
}

/// Transport quadrature-seeded data for each pair's system from 0.1 to 0.5.
fn ode_suite(cfg: &RunConfig) -> Vec<Check> {
    let (a, b, c) = (rat(2, 5), rat(1, 3), rat(4, 5));
    let (af, bf, cf) = (to_f64(&a), to_f64(&b), to_f64(&c));
    let (z0, z1) = (0.1, 0.5);
    let per = par::map(&PairTag::ALL, |&tag| {
        let run = || -> Result<Vec<Check>> {
            let (m, basis, conn) = derive_pair(tag, &a, &b, &c)?;
            let sys = FuchsianSystem::from_connection(&conn)?;
            let y0 = basis.iter().map(|bf| Ok(form_integral_01(&m, &bf.form, z0, &cfg.tol.quad)?.value)).collect::<Result<Vec<_>>>()?;
            let y = ode_solve_path(&sys, &PathPlan::line(c64(z0), c64(z1), 0.05), &y0, &cfg.tol.ode)?;
            let f01 = beta(c64(af), c64(cf - af))? * hyp2f1_series(c64(af), c64(bf), c64(cf), c64(z1))?.value;
            let second = form_integral_01(&m, &basis[1].form, z1, &cfg.tol.quad)?.value;
            Ok(vec![
                Check::numeric(format!("ode/{tag}/phi01"), "RK45 transport vs B(a,c-a) F series", f01, y[0], cfg.tol.ode_rel),
                Check::numeric(format!("ode/{tag}/{}", basis[1].label), "RK45 transport vs quadrature", second, y[1], cfg.tol.ode_rel),
            ])
        };
        run().unwrap_or_else(|e| vec![Check::failed(format!("ode/{tag}"), "RK45 transport", "finite".into(), &e)])
    });
    per.into_iter().flatten().collect()
}
