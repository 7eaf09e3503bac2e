//! Argument parsing and command dispatch.

use std::ffi::OsString;

use aqstar_core::aq;
use aqstar_core::kxl;
use aqstar_core::quad::TwoRootVerdict;
use aqstar_core::zx;
use aqstar_core::{Error, FracIdeal, OrderElement, QuadraticOrder};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::parse::{self, ParseError};
use crate::report::{self, Report};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "aqstar", version, about = "Exact ideal and André-Quillen invariant computations")]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct DiscArg {
    /// Discriminant of the order, ≡ 0 or 1 mod 4 and not a square.
    #[arg(long, allow_hyphen_values = true)]
    pub disc: String,
}

#[derive(Debug, Args)]
pub struct PairArgs {
    #[command(flatten)]
    pub disc: DiscArg,
    /// First element, `p+q*s` or `u,v`.
    #[arg(long, allow_hyphen_values = true)]
    pub a: String,
    /// Second element.
    #[arg(long, allow_hyphen_values = true)]
    pub b: String,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    #[command(flatten)]
    pub disc: DiscArg,
    #[arg(long, default_value_t = 30, value_parser = clap::value_parser!(u64).range(1..))]
    pub norm_bound: u64,
    /// Maximum number of pairs to examine.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub budget: Option<u64>,
}

#[derive(Debug, Args)]
pub struct IdealArgs {
    #[command(flatten)]
    pub disc: DiscArg,
    /// Ideal generator; repeat for each one.
    #[arg(long = "gen", required = true, allow_hyphen_values = true)]
    pub gens: Vec<String>,
}

#[derive(Debug, Args)]
pub struct SyzArgs {
    #[command(flatten)]
    pub disc: DiscArg,
    /// Generator of J; repeat for each one.
    #[arg(long = "gen", allow_hyphen_values = true, conflicts_with_all = ["a", "b"])]
    pub gens: Vec<String>,
    /// With --b: take J = aO ∩ bO.
    #[arg(long, allow_hyphen_values = true, requires = "b")]
    pub a: Option<String>,
    #[arg(long, allow_hyphen_values = true, requires = "a")]
    pub b: Option<String>,
}

#[derive(Debug, Args)]
pub struct FourArgs {
    #[command(flatten)]
    pub disc: DiscArg,
    #[arg(long, allow_hyphen_values = true)]
    pub a: String,
    #[arg(long, allow_hyphen_values = true)]
    pub b: String,
    #[arg(long, allow_hyphen_values = true)]
    pub c: String,
    #[arg(long, allow_hyphen_values = true)]
    pub d: String,
}

#[derive(Debug, Args)]
pub struct TwoRootArgs {
    #[command(flatten)]
    pub disc: DiscArg,
    #[arg(long, default_value_t = 20, value_parser = clap::value_parser!(u64).range(1..))]
    pub norm_bound: u64,
    /// Classify this field element instead of scanning.
    #[arg(long, allow_hyphen_values = true)]
    pub element: Option<String>,
}

#[derive(Debug, Args)]
pub struct ContentIdentityArgs {
    /// Polynomial with rational coefficients; random ones are drawn when absent.
    #[arg(long, allow_hyphen_values = true)]
    pub poly: Option<String>,
    /// Samples per polynomial.
    #[arg(long, default_value_t = 60, value_parser = clap::value_parser!(u64).range(1..))]
    pub samples: u64,
    /// Number of random polynomials.
    #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(1..))]
    pub polys: u64,
}

#[derive(Debug, Args)]
pub struct CoprimeHomologyArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub a: String,
    #[arg(long, allow_hyphen_values = true)]
    pub b: String,
}

#[derive(Debug, Args)]
pub struct KxlIntersectionArgs {
    /// Samples per stratum.
    #[arg(long, default_value_t = 1000, value_parser = clap::value_parser!(u64).range(1..))]
    pub samples: u64,
    /// Largest power of x in samples and in the basis sweep.
    #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u64).range(2..))]
    pub degree: u64,
    /// Report memberships of this element instead of sampling.
    #[arg(long, allow_hyphen_values = true)]
    pub element: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Discriminant data of an order.
    OrderInfo(DiscArg),
    /// Decide a²A ∩ b²A = (aA ∩ bA)² for one pair.
    StarCheck(PairArgs),
    /// Search pairs of bounded norm violating the star condition.
    StarScan(ScanArgs),
    /// Coefficient groups, star verdict and syzygetic kernel of a pair.
    AqReport(PairArgs),
    /// Kernel of S₂(J) → J².
    Syzygetic(SyzArgs),
    /// Decide I² = aI for some a ∈ I.
    StableCheck(IdealArgs),
    /// Divisorial closure and invertibility of an ideal.
    DivisorialCheck(IdealArgs),
    /// (aA∩bA)(cA∩dA) = acA ∩ adA ∩ bcA ∩ bdA.
    FourTerm(FourArgs),
    /// Elements outside the order whose square lies in it.
    TwoRootScan(TwoRootArgs),
    /// A = Z[X], B = A[X/2].
    ZxDemo,
    /// fQ[X] ∩ Z[X] = f·F·Z[X] on sampled products.
    #[command(name = "lemma1-check")]
    ContentIdentityCheck(ContentIdentityArgs),
    /// Homology statements for coprime a, b in Z[X].
    #[command(name = "cor16-report")]
    CoprimeHomologyReport(CoprimeHomologyArgs),
    /// Intersections of principal ideals in Q + xQ(y)[x].
    #[command(name = "example14")]
    KxlIntersections(KxlIntersectionArgs),
}

/// Exit status and rendered streams of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Inconsistent(_) | Error::ContainmentViolation => Failure::Check(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Res<T> = Result<T, Failure>;

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    match dispatch(&cli) {
        Ok(report) => {
            let stdout = match cli.format {
                Format::Json => report.to_json(),
                Format::Text => report.to_text(),
            };
            let code = if report.passed() { 0 } else { 1 };
            let stderr = if code == 0 { String::new() } else { "error: a check failed\n".to_string() };
            Outcome { code, stdout, stderr }
        }
        Err(Failure::Usage(msg)) => Outcome { code: 2, stdout: String::new(), stderr: format!("error: {msg}\n") },
        Err(Failure::Check(msg)) => {
            Outcome { code: 1, stdout: String::new(), stderr: format!("error: check failed: {msg}\n") }
        }
    }
}

fn dispatch(cli: &Cli) -> Res<Report> {
    match &cli.command {
        Command::OrderInfo(a) => order_info(a),
        Command::StarCheck(a) => star_check(a),
        Command::StarScan(a) => star_scan(a),
        Command::AqReport(a) => aq_report(a),
        Command::Syzygetic(a) => syzygetic(a),
        Command::StableCheck(a) => stable_check(a),
        Command::DivisorialCheck(a) => divisorial_check(a),
        Command::FourTerm(a) => four_term(a),
        Command::TwoRootScan(a) => two_root_scan(a),
        Command::ZxDemo => zx_demo(),
        Command::ContentIdentityCheck(a) => content_identity_check(a, cli.seed),
        Command::CoprimeHomologyReport(a) => coprime_homology_report(a),
        Command::KxlIntersections(a) => kxl_intersections(a, cli.seed),
    }
}

fn order(arg: &DiscArg) -> Res<QuadraticOrder> {
    let d: BigInt =
        arg.disc.trim().parse().map_err(|_| Failure::Usage(format!("invalid discriminant {:?}", arg.disc)))?;
    Ok(QuadraticOrder::new(d)?)
}

fn elements(o: &QuadraticOrder, texts: &[&String]) -> Res<Vec<OrderElement>> {
    texts.iter().map(|t| Ok(parse::parse_element(o, t)?)).collect()
}

fn ideal_from(o: &QuadraticOrder, gens: &[String]) -> Res<FracIdeal> {
    let xs = gens.iter().map(|g| parse::parse_frac_element(o, g)).collect::<Result<Vec<_>, _>>()?;
    Ok(FracIdeal::from_generators(o, &xs)?)
}

fn disc_input(r: &mut Report, o: &QuadraticOrder) {
    r.input("disc", report::int(o.disc()));
}

fn not_closed_note(r: &mut Report, o: &QuadraticOrder) {
    if !o.is_maximal() {
        r.annotate(format!(
            "the order of discriminant {} is not integrally closed; groups are formula values only",
            o.disc()
        ));
    }
}

fn order_info(a: &DiscArg) -> Res<Report> {
    let o = order(a)?;
    let mut r = Report::new("order-info");
    disc_input(&mut r, &o);
    let units: Vec<Value> = o.roots_of_unity().iter().map(|u| report::element(&o, u)).collect();
    let s2 = parse::surd_radicand(&o);
    r.result("fundamental_disc", report::int(o.fundamental_disc()))
        .result("conductor", report::int(o.conductor()))
        .result("maximal", o.is_maximal())
        .result("imaginary", o.is_imaginary())
        .result("omega", report::element(&o, &o.omega()))
        .result("omega_norm", report::int(o.omega_norm()))
        .result("s_squared", report::int(&s2))
        .result("roots_of_unity", units.clone());
    r.line(format!("Δ₀ = {}, f = {}, maximal = {}", o.fundamental_disc(), o.conductor(), o.is_maximal()))
        .line(format!("ω = {}, s² = {}", o.format_element(&o.omega()), s2))
        .line(format!("roots of unity: {}", o.roots_of_unity().len()));
    let f = o.conductor();
    r.check("disc = f²·Δ₀", &(f * f) * o.fundamental_disc() == *o.disc());
    r.check("roots of unity have norm 1", o.roots_of_unity().iter().all(|u| o.norm(u) == BigInt::from(1)));
    Ok(r)
}

fn pair(args: &PairArgs) -> Res<(QuadraticOrder, OrderElement, OrderElement)> {
    let o = order(&args.disc)?;
    let v = elements(&o, &[&args.a, &args.b])?;
    Ok((o, v[0].clone(), v[1].clone()))
}

fn pair_inputs(r: &mut Report, o: &QuadraticOrder, a: &OrderElement, b: &OrderElement) {
    disc_input(r, o);
    r.input("a", o.format_element(a)).input("b", o.format_element(b));
}

fn star_check(args: &PairArgs) -> Res<Report> {
    let (o, a, b) = pair(args)?;
    let v = aq::star_pair(&o, &a, &b)?;
    let h1 = aq::h1_coeff_group(&o, &a, &b)?;
    let mut r = Report::new("star-check");
    pair_inputs(&mut r, &o, &a, &b);
    r.result("holds", v.holds)
        .result("squares_meet", report::ideal(&v.lhs))
        .result("meet_squared", report::ideal(&v.rhs))
        .result("colon_of_squares", report::ideal(&v.colon_form.0))
        .result("colon_squared", report::ideal(&v.colon_form.1));
    r.line(format!("star holds: {}", v.holds))
        .line(format!("  a²A ∩ b²A   = {}", report::ideal_text(&v.lhs)))
        .line(format!("  (aA ∩ bA)²  = {}", report::ideal_text(&v.rhs)))
        .line(format!("  (b²A :_A a²) = {}", report::ideal_text(&v.colon_form.0)))
        .line(format!("  (bA :_A a)²  = {}", report::ideal_text(&v.colon_form.1)));
    r.check("(aA∩bA)² ⊆ a²A∩b²A", v.lhs.contains_ideal(&v.rhs))
        .check("colon form agrees with intersection form", (v.colon_form.0 == v.colon_form.1) == v.holds)
        .check("H1 coefficient trivial iff star holds", h1.is_trivial() == v.holds);
    not_closed_note(&mut r, &o);
    Ok(r)
}

fn star_scan(args: &ScanArgs) -> Res<Report> {
    let o = order(&args.disc)?;
    let bound = BigInt::from(args.norm_bound);
    let budget = args.budget.map(|b| b as usize);
    let scan = aq::star_scan(&o, &bound, budget)?;
    let mut r = Report::new("star-scan");
    disc_input(&mut r, &o);
    r.input("norm_bound", args.norm_bound);
    if let Some(b) = args.budget {
        r.input("budget", b);
    }
    let wit: Vec<Value> =
        scan.witnesses.iter().map(|(a, b)| json!([o.format_element(a), o.format_element(b)])).collect();
    r.result("witnesses", wit).result("pairs_examined", scan.pairs_examined).result("complete", scan.complete);
    r.line(format!("pairs examined: {} (complete: {})", scan.pairs_examined, scan.complete))
        .line(format!("witnesses: {}", scan.witnesses.len()));
    for (a, b) in &scan.witnesses {
        r.line(format!("  ({}, {})", o.format_element(a), o.format_element(b)));
    }
    let mut recheck = true;
    for (a, b) in &scan.witnesses {
        recheck &= !aq::star_pair(&o, a, b)?.holds;
    }
    r.check("every witness violates the star condition", recheck);
    if o.is_maximal() && scan.complete {
        r.check("no witnesses in an integrally closed order", scan.witnesses.is_empty());
    }
    Ok(r)
}

fn aq_report(args: &PairArgs) -> Res<Report> {
    let (o, a, b) = pair(args)?;
    let rep = aq::aq_report(&o, &a, &b)?;
    let (ann1, ann2) = aq::annihilation_checks(&o, &a, &b)?;
    let mut r = Report::new("aq-report");
    pair_inputs(&mut r, &o, &a, &b);
    r.result("integrally_closed", rep.integrally_closed)
        .result("interpretation_valid", rep.interpretation_valid)
        .result("conductor_ideal", report::ideal(&rep.conductor_ideal))
        .result("omega_coeff", report::group(&rep.omega_coeff))
        .result("h1_coeff", report::group(&rep.h1_coeff))
        .result("star_holds", rep.star.holds)
        .result("syzygetic_kernel", report::group(&rep.syzygetic_kernel))
        .result("annihilation", json!([ann1, ann2]));
    r.line(format!("(bA :_A a) = {}", report::ideal_text(&rep.conductor_ideal)))
        .line(format!("abA/((aA+bA)(aA∩bA)) = {}", rep.omega_coeff))
        .line(format!("(a²A∩b²A)/(aA∩bA)² = {}", rep.h1_coeff))
        .line(format!("ker(S₂(aA∩bA) → (aA∩bA)²) = {}", rep.syzygetic_kernel))
        .line(format!("star holds: {}", rep.star.holds));
    r.check("(aA∩bA)² ⊆ a²A∩b²A", rep.star.lhs.contains_ideal(&rep.star.rhs))
        .check("H1 coefficient trivial iff star holds", rep.h1_coeff.is_trivial() == rep.star.holds)
        .check("(bA:_Aa)·ab ⊆ (aA+bA)(aA∩bA)", ann1);
    if o.is_maximal() {
        r.check("(a²A∩b²A)(bA:_Aa) ⊆ (aA∩bA)²", ann2);
        r.check("Ω coefficient trivial iff aA+bA invertible", aq::omega_invertibility_check(&o, &a, &b)?);
        r.annotate("Ω_{B/A} ≅ (abA/((aA+bA)(aA∩bA))) ⊗_A R")
            .annotate("H₁(A,B,B) ≅ ((a²A∩b²A)/(aA∩bA)²) ⊗_A R")
            .annotate("H₂(A,B,B) ≅ W ⊗_A R, W = ker(S₂(aA∩bA) → (aA∩bA)²)")
            .annotate("R = B/(bA:_Aa)B");
    }
    not_closed_note(&mut r, &o);
    Ok(r)
}

fn syzygetic(args: &SyzArgs) -> Res<Report> {
    let o = order(&args.disc)?;
    let mut r = Report::new("syzygetic");
    disc_input(&mut r, &o);
    let j = match (&args.a, &args.b) {
        (Some(a), Some(b)) => {
            let v = elements(&o, &[a, b])?;
            r.input("a", o.format_element(&v[0])).input("b", o.format_element(&v[1]));
            FracIdeal::principal(&o, &v[0])?.intersection(&FracIdeal::principal(&o, &v[1])?)?
        }
        _ => {
            if args.gens.is_empty() {
                return Err(Failure::Usage("give --gen at least once, or --a and --b".into()));
            }
            r.input("generators", args.gens.clone());
            ideal_from(&o, &args.gens)?
        }
    };
    let syz = aq::syzygetic_kernel(&o, &j)?;
    let p = &syz.presentation;
    r.result("ideal", report::ideal(&j))
        .result("generators", json!([o.format_element(&p.generators[0]), o.format_element(&p.generators[1])]))
        .result("syzygy_rank", p.syzygies.cols())
        .result("relation_rank", p.relations.cols())
        .result("kernel", report::group(&syz.kernel))
        .result("syzygetic", syz.is_syzygetic());
    r.line(format!("J = {}", report::ideal_text(&j)))
        .line(format!("W = {}", syz.kernel))
        .line(format!("syzygetic: {}", syz.is_syzygetic()));
    r.check("evaluation vanishes on relations", p.evaluation.mul(&p.relations).is_zero());
    Ok(r)
}

fn stable_check(args: &IdealArgs) -> Res<Report> {
    let o = order(&args.disc)?;
    let i = ideal_from(&o, &args.gens)?;
    let witness = i.is_stable()?;
    let mut r = Report::new("stable-check");
    disc_input(&mut r, &o);
    r.input("generators", args.gens.clone());
    r.result("ideal", report::ideal(&i)).result("stable", witness.is_some());
    r.line(format!("I = {}", report::ideal_text(&i)));
    match &witness {
        Some(a) => {
            r.result("witness", report::element(&o, a));
            r.line(format!("I² = aI with a = {}", o.format_element(a)));
            let sq = i.product(&i)?;
            r.check("I² = aI", sq == i.scale(&a.clone().into())?).check("witness lies in I", i.contains_element(a));
        }
        None => {
            r.result("witness", Value::Null);
            r.line("not stable");
        }
    }
    Ok(r)
}

fn divisorial_check(args: &IdealArgs) -> Res<Report> {
    let o = order(&args.disc)?;
    let i = ideal_from(&o, &args.gens)?;
    let closure = i.divisorial_closure();
    let divisorial = closure == i;
    let mut r = Report::new("divisorial-check");
    disc_input(&mut r, &o);
    r.input("generators", args.gens.clone());
    r.result("ideal", report::ideal(&i))
        .result("closure", report::ideal(&closure))
        .result("divisorial", divisorial)
        .result("invertible", i.is_invertible());
    r.line(format!("I   = {}", report::ideal_text(&i)))
        .line(format!("I_v = {}", report::ideal_text(&closure)))
        .line(format!("divisorial: {divisorial}, invertible: {}", i.is_invertible()));
    if divisorial {
        let sq = i.divisorial_square_check()?;
        r.result("square_divisorial", sq);
        r.line(format!("I² divisorial: {sq}"));
        if o.is_maximal() {
            r.check("square of a divisorial ideal is divisorial", sq);
        }
    } else {
        r.result("square_divisorial", Value::Null);
    }
    r.check("I ⊆ I_v", closure.contains_ideal(&i));
    if o.is_maximal() {
        r.check("every ideal of a maximal order is divisorial", divisorial);
    }
    not_closed_note(&mut r, &o);
    Ok(r)
}

fn four_term(args: &FourArgs) -> Res<Report> {
    let o = order(&args.disc)?;
    let v = elements(&o, &[&args.a, &args.b, &args.c, &args.d])?;
    let holds = aq::four_term_identity(&o, &v[0], &v[1], &v[2], &v[3])?;
    let mut r = Report::new("four-term");
    disc_input(&mut r, &o);
    for (k, x) in ["a", "b", "c", "d"].iter().zip(&v) {
        r.input(k, o.format_element(x));
    }
    r.result("identity_holds", holds);
    r.line(format!("(aA∩bA)(cA∩dA) = acA∩adA∩bcA∩bdA: {holds}"));
    if o.is_maximal() {
        r.check("identity holds in an integrally closed order", holds);
    }
    not_closed_note(&mut r, &o);
    Ok(r)
}

fn two_root_scan(args: &TwoRootArgs) -> Res<Report> {
    let o = order(&args.disc)?;
    let mut r = Report::new("two-root-scan");
    disc_input(&mut r, &o);
    if let Some(text) = &args.element {
        let x = parse::parse_frac_element(&o, text)?;
        if x.is_zero() {
            return Err(Failure::Usage("element must be nonzero".into()));
        }
        let verdict = match o.two_root_closed_element(&x) {
            TwoRootVerdict::InOrder => "in_order",
            TwoRootVerdict::Violation => "violation",
            TwoRootVerdict::NotApplicable => "not_applicable",
        };
        r.input("element", o.format(&x));
        r.result("verdict", verdict);
        r.line(format!("{}: {verdict}", o.format(&x)));
        return Ok(r);
    }
    r.input("norm_bound", args.norm_bound);
    let v = o.two_root_scan(&BigInt::from(args.norm_bound))?;
    r.result("violations", v.iter().map(|x| report::frac(&o, x)).collect::<Vec<_>>());
    r.line(format!("violations: {}", v.len()));
    for x in &v {
        r.line(format!("  {}", o.format(x)));
    }
    if o.is_maximal() {
        r.check("a maximal order is 2-root closed", v.is_empty());
    }
    Ok(r)
}

fn zx_demo() -> Res<Report> {
    let z = zx::zx_example()?;
    let mut r = Report::new("zx-demo");
    r.input("A", "Z[X]").input("B", "Z[X/2]");
    r.result("colon", z.colon.to_string())
        .result("omega", z.omega_statement.clone())
        .result("h1", z.h1_statement.clone())
        .result("star_holds", z.star_holds)
        .result("statements", z.report.statements.clone());
    r.line(format!("(2A :_A X) = ({})", z.colon)).line(z.omega_statement.clone()).line(z.h1_statement.clone());
    r.check("(2A :_A X) = 2A", z.colon == aqstar_core::poly::IntPoly::from_i64(&[2]))
        .check("aA ∩ bA = abA", z.report.hypothesis_holds)
        .check("a²A∩b²A = (aA∩bA)²", z.star_holds);
    r.annotate(z.omega_statement).annotate(z.h1_statement);
    Ok(r)
}

fn content_identity_check(args: &ContentIdentityArgs, seed: u64) -> Res<Report> {
    let mut r = Report::new("lemma1-check");
    r.input("seed", seed).input("samples", args.samples);
    let samples = args.samples as usize;
    match &args.poly {
        Some(text) => {
            let f = parse::parse_rat_poly(text)?;
            let rep = zx::content_identity_check(&f, samples, seed)?;
            r.input("poly", f.to_string());
            r.result("content", report::rational(&rep.content))
                .result("F", format!("({})Z", report::rational(&rep.content.recip()).as_str().unwrap_or("")))
                .result("generator", rep.generator.to_string())
                .result("in_integral", rep.in_lhs)
                .result("in_fFZ", rep.in_rhs)
                .result("mismatches", rep.mismatches);
            r.line(format!("c(f) = {}, fQ[X] ∩ Z[X] = ({})Z[X]", rep.content, rep.generator))
                .line(format!("samples in Z[X]: {}, in fFZ[X]: {}", rep.in_lhs, rep.in_rhs));
            r.check("fQ[X] ∩ Z[X] = fFZ[X] on samples", rep.passed());
        }
        None => {
            let reps = zx::content_identity_sweep(args.polys as usize, samples, seed)?;
            let failed: Vec<String> = reps.iter().filter(|x| !x.passed()).map(|x| x.f.to_string()).collect();
            let mismatches: usize = reps.iter().map(|x| x.mismatches).sum();
            r.input("polys", args.polys);
            r.result("polynomials", reps.len())
                .result("total_samples", reps.len() * samples)
                .result("mismatches", mismatches)
                .result("failed", failed.clone());
            r.line(format!("{} polynomials, {} samples each, {} mismatches", reps.len(), samples, mismatches));
            r.check("fQ[X] ∩ Z[X] = fFZ[X] on samples", failed.is_empty());
        }
    }
    Ok(r)
}

fn coprime_homology_report(args: &CoprimeHomologyArgs) -> Res<Report> {
    let a = parse::parse_int_poly(&args.a)?;
    let b = parse::parse_int_poly(&args.b)?;
    let rep = zx::coprime_homology_report(&a, &b)?;
    let mut r = Report::new("cor16-report");
    r.input("a", a.to_string()).input("b", b.to_string());
    r.result("gcd", rep.gcd.to_string())
        .result("hypothesis_holds", rep.hypothesis_holds)
        .result("reduced_b", rep.reduced_b.to_string())
        .result("statements", rep.statements.clone());
    for s in &rep.statements {
        r.line(s.clone());
    }
    r.check("aA∩bA = abA iff gcd(a,b) is a unit", rep.hypothesis_holds == rep.gcd.is_unit());
    if !rep.gcd.is_unit() {
        r.annotate(format!("b replaced by b/gcd(a,b) = {}", rep.reduced_b));
    }
    Ok(r)
}

fn kxl_intersections(args: &KxlIntersectionArgs, seed: u64) -> Res<Report> {
    let mut r = Report::new("example14");
    if let Some(text) = &args.element {
        let f = parse::parse_kxl(text)?;
        let (first, second) = kxl::intersection_memberships(&f)?;
        let ord = f.ord_x();
        r.input("element", f.to_string());
        r.result("in_A", f.in_a())
            .result("in_B", f.in_b())
            .result("ord_x", ord.map_or(Value::Null, Value::from))
            .result("in_yxA_and_xA", first)
            .result("in_yx2A_and_x2A", second);
        r.line(format!("f = {f}"))
            .line(format!("in A: {}, in B: {}", f.in_a(), f.in_b()))
            .line(format!("in yxA ∩ xA: {first}, in (yx)²A ∩ x²A: {second}"));
        let ord = ord.unwrap_or(usize::MAX);
        r.check("yxA ∩ xA membership iff ord_x ≥ 2", first == (ord >= 2))
            .check("(yx)²A ∩ x²A membership iff ord_x ≥ 3", second == (ord >= 3));
        return Ok(r);
    }
    r.input("seed", seed).input("samples", args.samples).input("degree", args.degree);
    let rep = kxl::sampled_intersection_check(args.samples as usize, seed, args.degree as usize)?;
    let strata: Vec<Value> = rep
        .strata
        .iter()
        .map(|s| {
            json!({
                "stratum": s.label,
                "samples": s.samples,
                "in_yxA_and_xA": s.first_members,
                "in_yx2A_and_x2A": s.second_members,
                "counterexamples_first": s.first_counterexamples,
                "counterexamples_second": s.second_counterexamples,
            })
        })
        .collect();
    r.result("strata", strata).result("sweep_checked", rep.sweep_checked).result("sweep_failures", rep.sweep_failures);
    for s in &rep.strata {
        r.line(format!(
            "{:<22} {} samples, {} in yxA∩xA, {} in (yx)²A∩x²A, counterexamples {}/{}",
            s.label, s.samples, s.first_members, s.second_members, s.first_counterexamples, s.second_counterexamples
        ));
    }
    r.line(format!("basis sweep: {} monomials, {} failures", rep.sweep_checked, rep.sweep_failures));
    r.check("yxA ∩ xA = x²L[x]", rep.first_identity_holds())
        .check("(yx)²A ∩ x²A = x³L[x]", rep.second_identity_holds())
        .check("x^i y^j sweep", rep.sweep_failures == 0);
    for a in &rep.annotations {
        r.annotate(*a);
    }
    Ok(r)
}
