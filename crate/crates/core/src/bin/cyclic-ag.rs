use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use cyclic_ag::fixedfield::{fiber_decomposition, invariant_generator, splitting_report, FiberPlace};
use cyclic_ag::lincode::{format_matrix, Budget, CodeSummary, Equivalence, LinearCode, MonomialMap};
use cyclic_ag::sigma::{
    canonicalize, construct_sigma_code, example_artin_schreier, example_degree_two_place, example_frobenius,
    example_roots_of_unity, verify_sigma_cyclic, ExampleOutcome, Relation, SigmaCodeSpec, VerificationReport,
};
use cyclic_ag::{monomial_equivalence, Divisor, Elem, Error, Field, MobiusMap, Place, ProjPoint};

const OK: u8 = 0;
const FAILED: u8 = 1;
const USAGE: u8 = 2;
const UNDECIDED: u8 = 3;

#[derive(Parser)]
#[command(name = "cyclic-ag", version, about = "Cyclic AG codes from orbits of Möbius maps over finite fields")]
struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Largest number of codewords enumerated for distances.
    #[arg(long, global = true, default_value_t = Budget::default().codewords)]
    budget_codewords: u64,
    /// Largest number of permutations tried in equivalence searches.
    #[arg(long, global = true, default_value_t = Budget::default().permutations)]
    budget_perms: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct FieldArgs {
    /// Field order, as `q` or `p^m`.
    #[arg(long)]
    q: String,
    /// Ascending modulus coefficients `c0,c1,...,cm`.
    #[arg(long)]
    modulus: Option<String>,
}

#[derive(Args, Clone)]
struct SpecArgs {
    #[command(flatten)]
    field: FieldArgs,
    /// Matrix `a,b;c,d` of sigma(x) = (ax+b)/(cx+d).
    #[arg(long)]
    matrix: String,
    #[arg(long)]
    alpha: String,
    #[arg(long, default_value = "inf")]
    beta: String,
    #[arg(long, allow_hyphen_values = true)]
    r: i64,
    /// Use the basis 1/(x - beta)^j for finite beta.
    #[arg(long)]
    paper_basis: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Field parameters and the element table.
    Field {
        #[command(flatten)]
        field: FieldArgs,
    },
    /// Orbit of a point under sigma.
    Orbit {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        matrix: String,
        #[arg(long)]
        alpha: String,
    },
    /// Build C(A, alpha, beta, r) and check its cyclicity.
    Construct(SpecArgs),
    /// Check the cyclicity hypotheses for a map, places and a divisor.
    Verify {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        matrix: String,
        /// Evaluation places separated by `;` (`a=<elem>`, `inf`, `poly:c0,c1,...`).
        #[arg(long, conflicts_with = "alpha", required_unless_present = "alpha")]
        places: Option<String>,
        /// Use the orbit of this point as the places.
        #[arg(long)]
        alpha: Option<String>,
        /// Divisor such as `2*a=0 + 1*inf`.
        #[arg(long, allow_hyphen_values = true)]
        divisor: String,
    },
    /// Reduce C(A, alpha, beta, r) to its canonical representative.
    Canonical(SpecArgs),
    /// Monomial equivalence of two codes given by generator rows.
    Equiv {
        #[command(flatten)]
        field: FieldArgs,
        /// Rows separated by `;`, entries by `,`.
        #[arg(long)]
        first: String,
        #[arg(long)]
        second: String,
    },
    /// Generator of the fixed field of <sigma> and its fibers.
    Fixedfield {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        matrix: String,
        #[arg(long)]
        alpha: Option<String>,
    },
    /// Worked constructions.
    #[command(subcommand)]
    Example(ExampleCommand),
    /// Run the acceptance checks.
    Selftest,
}

#[derive(Subcommand)]
enum ExampleCommand {
    /// Frobenius conjugates of a primitive element of GF(p^m).
    Frobenius {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        m: u32,
        #[arg(long, allow_hyphen_values = true)]
        r: i64,
        #[arg(long, allow_hyphen_values = true)]
        s: i64,
    },
    /// n-th roots of unity in GF(q).
    RootsOfUnity {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        n: u64,
        #[arg(long, allow_hyphen_values = true)]
        r: i64,
        #[arg(long, allow_hyphen_values = true)]
        s: i64,
    },
    /// Roots of x^p - x - alpha.
    ArtinSchreier {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        s: i64,
    },
    /// Length-5 code over GF(4) with G supported on a degree-2 place.
    DegreeTwoPlace {
        #[arg(long)]
        r: i64,
    },
}

/// An error with the exit code it maps to.
struct Failure(u8, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure(USAGE, e.to_string())
    }
}

type Outcome = Result<u8, Failure>;

struct Ctx {
    json: bool,
    budget: Budget,
}

impl Ctx {
    fn emit(&self, value: serde_json::Value, text: impl FnOnce() -> String) {
        if self.json {
            println!("{}", serde_json::to_string_pretty(&value).expect("serializable"));
        } else {
            println!("{}", text());
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let ctx = Ctx { json: cli.json, budget: Budget { codewords: cli.budget_codewords, permutations: cli.budget_perms } };
    match run(&ctx, cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(Failure(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}

fn run(ctx: &Ctx, command: Command) -> Outcome {
    match command {
        Command::Field { field } => cmd_field(ctx, &field),
        Command::Orbit { field, matrix, alpha } => cmd_orbit(ctx, &field, &matrix, &alpha),
        Command::Construct(spec) => cmd_construct(ctx, &spec),
        Command::Verify { field, matrix, places, alpha, divisor } => {
            cmd_verify(ctx, &field, &matrix, places.as_deref(), alpha.as_deref(), &divisor)
        }
        Command::Canonical(spec) => cmd_canonical(ctx, &spec),
        Command::Equiv { field, first, second } => cmd_equiv(ctx, &field, &first, &second),
        Command::Fixedfield { field, matrix, alpha } => cmd_fixedfield(ctx, &field, &matrix, alpha.as_deref()),
        Command::Example(ex) => cmd_example(ctx, ex),
        Command::Selftest => cmd_selftest(ctx),
    }
}

fn parse_field(args: &FieldArgs) -> Result<Field, Failure> {
    Ok(Field::parse(&args.q, args.modulus.as_deref())?)
}

fn parse_spec(args: &SpecArgs) -> Result<SigmaCodeSpec, Failure> {
    let f = parse_field(&args.field)?;
    let map = MobiusMap::parse(&f, &args.matrix)?;
    let alpha = ProjPoint::parse(&f, &args.alpha)?;
    let beta = ProjPoint::parse(&f, &args.beta)?;
    Ok(SigmaCodeSpec::new(map, alpha, beta, args.r)?.with_paper_basis(args.paper_basis))
}

fn points_text(f: &Field, pts: &[ProjPoint]) -> Vec<String> {
    pts.iter().map(|p| p.format(f)).collect()
}

fn places_text(f: &Field, places: &[Place]) -> Vec<String> {
    places.iter().map(|p| p.format(f)).collect()
}

fn report_text(report: &VerificationReport) -> String {
    let mut out: Vec<String> = report.flags().iter().map(|(name, ok)| format!("{name}: {ok}")).collect();
    out.push(format!("n = {}, m = {}, isotropy = {}", report.n, report.m, report.k));
    out.join("\n")
}

fn summary_text(f: &Field, code: &LinearCode, summary: &CodeSummary) -> String {
    let d = summary.d.map_or("undecided (budget)".to_string(), |d| d.to_string());
    format!("[n, k, d] = [{}, {}, {d}]\ngenerator:\n{}", summary.n, summary.k, format_matrix(f, code.generator()))
}

/// FAILED when `ok` is false, UNDECIDED when the distance ran out of budget.
fn verdict(ok: bool, summary: &CodeSummary) -> u8 {
    if !ok {
        FAILED
    } else if summary.d.is_none() && summary.k > 0 {
        UNDECIDED
    } else {
        OK
    }
}

fn cmd_field(ctx: &Ctx, args: &FieldArgs) -> Outcome {
    let f = parse_field(args)?;
    #[derive(Serialize)]
    struct Row {
        element: String,
        index: u32,
        order: Option<u32>,
        log: Option<u32>,
    }
    let rows: Vec<Row> = f
        .elements()
        .map(|a| Row { element: f.format(a), index: a.index(), order: f.element_order(a).ok(), log: f.log(a) })
        .collect();
    let value = json!({
        "p": f.p(), "m": f.m(), "q": f.q(), "modulus": f.modulus(),
        "primitive_element": f.format(f.primitive_element()), "elements": rows,
    });
    ctx.emit(value, || {
        let mut out = format!("GF({}) = GF({}^{}), modulus {:?}\n", f.q(), f.p(), f.m(), f.modulus());
        out += &format!("primitive element: {}\nelement  order  log", f.format(f.primitive_element()));
        for r in &rows {
            let show = |v: Option<u32>| v.map_or("-".to_string(), |v| v.to_string());
            out += &format!("\n{:<8} {:<6} {}", r.element, show(r.order), show(r.log));
        }
        out
    });
    Ok(OK)
}

fn cmd_orbit(ctx: &Ctx, args: &FieldArgs, matrix: &str, alpha: &str) -> Outcome {
    let f = parse_field(args)?;
    let map = MobiusMap::parse(&f, matrix)?;
    let orbit = map.orbit(ProjPoint::parse(&f, alpha)?)?;
    let pts = points_text(&f, &orbit);
    let value = json!({ "matrix": map.to_string(), "order": map.order(), "orbit": pts });
    ctx.emit(value, || pts.join(", "));
    Ok(OK)
}

fn cmd_construct(ctx: &Ctx, args: &SpecArgs) -> Outcome {
    let spec = parse_spec(args)?;
    let f = spec.field().clone();
    let code = construct_sigma_code(&spec)?;
    let places = spec.places()?;
    let report = verify_sigma_cyclic(&spec.map, &places, &spec.divisor());
    let summary = code.summary(&ctx.budget);
    let ok = report.hypotheses_hold() && code.is_cyclic();
    let value = json!({
        "spec": spec.describe(), "places": places_text(&f, &places), "code": summary,
        "cyclic": code.is_cyclic(), "report": report,
    });
    ctx.emit(value, || {
        format!(
            "{}\nplaces: {}\n{}\ncyclic: {}\n{}",
            spec.describe(),
            places_text(&f, &places).join(", "),
            summary_text(&f, &code, &summary),
            code.is_cyclic(),
            report_text(&report)
        )
    });
    Ok(verdict(ok, &summary))
}

fn cmd_verify(
    ctx: &Ctx,
    args: &FieldArgs,
    matrix: &str,
    places: Option<&str>,
    alpha: Option<&str>,
    divisor: &str,
) -> Outcome {
    let f = parse_field(args)?;
    let map = MobiusMap::parse(&f, matrix)?;
    let places: Vec<Place> = match (places, alpha) {
        (Some(list), _) => list.split(';').map(|p| Place::parse(&f, p)).collect::<Result<_, _>>()?,
        (None, Some(a)) => map.orbit(ProjPoint::parse(&f, a)?)?.into_iter().map(Place::Rational).collect(),
        (None, None) => return Err(Failure(USAGE, "either --places or --alpha is required".into())),
    };
    let g = Divisor::parse(&f, divisor)?;
    let report = verify_sigma_cyclic(&map, &places, &g);
    let value = json!({
        "places": places_text(&f, &places), "divisor": g.format(&f), "report": report,
    });
    ctx.emit(value, || {
        format!("places: {}\nG = {}\n{}", places_text(&f, &places).join(", "), g.format(&f), report_text(&report))
    });
    Ok(if report.all_hold() { OK } else { FAILED })
}

fn monomial_json(f: &Field, w: &MonomialMap) -> serde_json::Value {
    json!({ "perm": w.perm, "scale": w.scale.iter().map(|&s| f.format(s)).collect::<Vec<_>>() })
}

fn relation_text(r: Relation) -> &'static str {
    match r {
        Relation::Equal => "EQUAL",
        Relation::Equivalent => "EQUIVALENT",
    }
}

fn cmd_canonical(ctx: &Ctx, args: &SpecArgs) -> Outcome {
    let spec = parse_spec(args)?;
    let f = spec.field().clone();
    let canon = canonicalize(&spec)?;
    let steps: Vec<serde_json::Value> = canon
        .steps
        .iter()
        .map(|s| json!({ "step": s.name, "relation": s.relation, "spec": s.spec.describe() }))
        .collect();
    let value = json!({
        "input": spec.describe(), "canonical": canon.spec.describe(), "relation": canon.relation,
        "witness": monomial_json(&f, &canon.witness), "steps": steps,
    });
    ctx.emit(value, || {
        let mut out = spec.describe();
        for s in &canon.steps {
            out += &format!("\n  -> {} [{}: {}]", s.spec.describe(), s.name, relation_text(s.relation));
        }
        let scale: Vec<String> = canon.witness.scale.iter().map(|&s| f.format(s)).collect();
        out += &format!(
            "\ncanonical: {}\nrelation: {}\nwitness perm {:?} scale [{}]",
            canon.spec.describe(),
            relation_text(canon.relation),
            canon.witness.perm,
            scale.join(", ")
        );
        out
    });
    Ok(OK)
}

fn parse_rows(f: &Field, s: &str) -> Result<Vec<Vec<Elem>>, Failure> {
    s.split(';')
        .map(|row| row.split(',').map(|e| f.parse_elem(e).map_err(Failure::from)).collect())
        .collect()
}

fn parse_code(f: &Field, s: &str) -> Result<LinearCode, Failure> {
    let rows = parse_rows(f, s)?;
    let n = rows.first().map_or(0, Vec::len);
    Ok(LinearCode::new(f, n, rows)?)
}

fn cmd_equiv(ctx: &Ctx, args: &FieldArgs, first: &str, second: &str) -> Outcome {
    let f = parse_field(args)?;
    let c1 = parse_code(&f, first)?;
    let c2 = parse_code(&f, second)?;
    let (value, text, code) = match monomial_equivalence(&c1, &c2, &ctx.budget) {
        Equivalence::Equivalent(w) => {
            let text = format!("EQUIVALENT\nperm {:?}\nscale {:?}", w.perm, w.scale.iter().map(|&s| f.format(s)).collect::<Vec<_>>());
            (json!({ "verdict": "EQUIVALENT", "witness": monomial_json(&f, &w) }), text, OK)
        }
        Equivalence::Inequivalent(why) => {
            let reason = format!("{why:?}");
            (json!({ "verdict": "INEQUIVALENT", "invariant": reason }), format!("INEQUIVALENT ({reason})"), FAILED)
        }
        Equivalence::Undecided => (json!({ "verdict": "UNDECIDED" }), "UNDECIDED (budget)".into(), UNDECIDED),
    };
    ctx.emit(value, || text);
    Ok(code)
}

fn fiber_json(f: &Field, fiber: &[FiberPlace]) -> serde_json::Value {
    fiber.iter().map(|fp| json!({ "place": fp.place.format(f), "e": fp.e, "f": fp.f() })).collect()
}

fn fiber_text(f: &Field, fiber: &[FiberPlace]) -> String {
    fiber.iter().map(|fp| format!("{} (e={}, f={})", fp.place.format(f), fp.e, fp.f())).collect::<Vec<_>>().join(", ")
}

fn cmd_fixedfield(ctx: &Ctx, args: &FieldArgs, matrix: &str, alpha: Option<&str>) -> Outcome {
    let f = parse_field(args)?;
    let map = MobiusMap::parse(&f, matrix)?;
    let gen = invariant_generator(&map)?;
    let fibers: Vec<(ProjPoint, Vec<FiberPlace>)> =
        ProjPoint::all(&f).into_iter().map(|t| (t, fiber_decomposition(&gen, t))).collect();
    let report = alpha.map(|a| ProjPoint::parse(&f, a).and_then(|a| splitting_report(&map, a))).transpose()?;
    let ok = report.as_ref().is_none_or(|r| r.holds());
    let value = json!({
        "z": gen.z.to_string(), "m": gen.m, "method": gen.method.to_string(),
        "fibers": fibers.iter().map(|(t, fib)| json!({ "t": t.format(&f), "places": fiber_json(&f, fib) })).collect::<Vec<_>>(),
        "splitting": report.as_ref().map(|r| json!({
            "orbit": points_text(&f, &r.orbit), "t": r.t.format(&f), "constant_on_orbit": r.constant_on_orbit,
            "fiber": fiber_json(&f, &r.fiber), "fiber_is_orbit": r.fiber_is_orbit, "ef_uniform": r.ef_uniform,
            "total": r.total, "holds": r.holds(),
        })),
    });
    ctx.emit(value, || {
        let mut out = format!("z = {}\nm = {} ({})", gen.z, gen.m, gen.method);
        for (t, fib) in &fibers {
            out += &format!("\nz = {}: {}", t.format(&f), fiber_text(&f, fib));
        }
        if let Some(r) = &report {
            out += &format!(
                "\norbit {} lies over z = {}\nconstant on orbit: {}, fiber is orbit: {}, e f = m/n: {}, sum e f = {}",
                points_text(&f, &r.orbit).join(", "),
                r.t.format(&f),
                r.constant_on_orbit,
                r.fiber_is_orbit,
                r.ef_uniform,
                r.total
            );
        }
        out
    });
    Ok(if ok { OK } else { FAILED })
}

fn cmd_example(ctx: &Ctx, ex: ExampleCommand) -> Outcome {
    let outcome: ExampleOutcome = match ex {
        ExampleCommand::Frobenius { p, m, r, s } => example_frobenius(p, m, r, s)?,
        ExampleCommand::RootsOfUnity { q, n, r, s } => example_roots_of_unity(q, n, r, s)?,
        ExampleCommand::ArtinSchreier { q, s } => example_artin_schreier(q, s)?,
        ExampleCommand::DegreeTwoPlace { r } => example_degree_two_place(r)?,
    };
    let f = outcome.code.field().clone();
    let summary = outcome.code.summary(&ctx.budget);
    let ok = outcome.cyclic && outcome.report.as_ref().is_none_or(VerificationReport::hypotheses_hold);
    let value = json!({
        "n": summary.n, "k": summary.k, "d": summary.d, "cyclic": outcome.cyclic,
        "places": places_text(&f, &outcome.places), "divisor": outcome.divisor.format(&f),
        "map": outcome.map.as_ref().map(ToString::to_string),
        "generator": summary.generator, "weight_enumerator": summary.weight_enumerator,
        "report": outcome.report,
    });
    ctx.emit(value, || {
        let mut out = format!(
            "places: {}\nG = {}\n{}\ncyclic: {}",
            places_text(&f, &outcome.places).join(", "),
            outcome.divisor.format(&f),
            summary_text(&f, &outcome.code, &summary),
            outcome.cyclic
        );
        if let Some(r) = &outcome.report {
            out += "\n";
            out += &report_text(r);
        }
        out
    });
    Ok(verdict(ok, &summary))
}

fn cmd_selftest(ctx: &Ctx) -> Outcome {
    let mut results = Vec::new();
    for (_, run) in cyclic_ag::selftest::CRITERIA {
        let result = run();
        if !ctx.json {
            println!("{result}");
        }
        results.push(result);
    }
    let passed = results.iter().all(|r| r.passed);
    if ctx.json {
        println!("{}", serde_json::to_string_pretty(&json!({ "passed": passed, "criteria": results })).expect("serializable"));
    } else {
        println!("{}", if passed { "all criteria passed" } else { "some criteria failed" });
    }
    Ok(if passed { OK } else { FAILED })
}
