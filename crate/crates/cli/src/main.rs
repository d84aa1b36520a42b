use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use qv_core::actions::{
    bnsr_witness_fixing, chi, kernel_transitivity_witness, witness, Flavor, VertexTuple,
};
use qv_core::presentations::{
    builtin_presentation, check_relators, check_sym_presentation, evaluate, generator_words,
    orbit_enumerate, reference_fixtures, SymFlavor,
};
use qv_core::quasi::{abelianization_image, in_commutator, membership, GroupName, QElement};
use qv_core::{Error, GroupWord, VElement, Vertex, Word};

#[derive(Parser)]
#[command(name = "qv", version, about = "Exact arithmetic in Thompson's groups and their quasi-automorphism groups")]
struct Cli {
    /// Emit one JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Grouped {
    /// Group name; if omitted, the first argument is taken as the group.
    #[arg(long)]
    group: Option<String>,
    args: Vec<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Print the canonical form of a word: `eval QF "aB"`.
    Eval(Grouped),
    /// Apply a word to a vertex: `apply tQV a e`.
    Apply(Grouped),
    /// Characters, parity and memberships of a word.
    Invariants(Grouped),
    /// Run a verification suite: F, T, V, QF, tQT, tQV, symStar, symZ, figures or all.
    Verify { suite: String },
    /// List the tuples reachable from a start tuple within a depth bound.
    Orbit {
        #[command(flatten)]
        grouped: Grouped,
        /// Depth explored while searching; defaults to the bound plus the tuple length.
        #[arg(long)]
        search: Option<usize>,
    },
    /// Build a witness: sigma|lambda|delta <tuple>, bnsr <a>, kernel <x1> <x2>.
    Witness {
        kind: String,
        #[arg(allow_hyphen_values = true)]
        args: Vec<String>,
    },
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Core(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

type Outcome = std::result::Result<Report, Failure>;

/// Text lines, the same data as JSON, and whether every check passed.
struct Report {
    lines: Vec<String>,
    json: Value,
    ok: bool,
}

impl Report {
    fn ok(lines: Vec<String>, json: Value) -> Self {
        Report { lines, json, ok: true }
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn split_group(g: &Grouped, arity: usize) -> Result<(GroupName, Vec<String>), Failure> {
    let mut args = g.args.clone();
    let name = match &g.group {
        Some(name) => name.clone(),
        None if !args.is_empty() => args.remove(0),
        None => return Err(usage("missing group")),
    };
    if args.len() != arity {
        return Err(usage(format!("expected {arity} argument(s) after the group, got {}", args.len())));
    }
    Ok((name.parse()?, args))
}

fn parse_word(s: &str) -> Result<GroupWord, Failure> {
    Ok(s.parse()?)
}

fn element_json(q: &QElement) -> Value {
    json!({
        "element": q.to_string(),
        "sigma": q.sigma.to_string(),
        "v": q.v.to_string(),
        "identity": q.is_identity(),
    })
}

fn cmd_eval(g: &Grouped) -> Outcome {
    let (group, args) = split_group(g, 1)?;
    let q = evaluate(&parse_word(&args[0])?, group)?;
    let mut j = element_json(&q);
    j["group"] = json!(group.name());
    j["word"] = json!(args[0]);
    Ok(Report::ok(vec![q.to_string()], j))
}

fn cmd_apply(g: &Grouped) -> Outcome {
    let (group, args) = split_group(g, 2)?;
    let q = evaluate(&parse_word(&args[0])?, group)?;
    let x: Vertex = args[1].parse()?;
    let y = q.apply(&x);
    Ok(Report::ok(
        vec![y.to_string()],
        json!({ "group": group.name(), "word": args[0], "vertex": x.to_string(), "image": y.to_string() }),
    ))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn cmd_invariants(g: &Grouped) -> Outcome {
    let (group, args) = split_group(g, 1)?;
    let q = evaluate(&parse_word(&args[0])?, group)?;
    let mut lines = Vec::new();
    let mut j = json!({ "group": group.name(), "word": args[0], "element": q.to_string() });
    let characters = chi(&q.v).ok();
    if let Some((c0, c1)) = characters {
        lines.push(format!("chi: ({c0}, {c1})"));
    }
    j["chi"] = json!(characters.map(|(a, b)| [a, b]));
    let parity = q.parity();
    lines.push(format!("parity: {parity}"));
    j["parity"] = json!(parity.to_string());
    if GroupName::QUASI.contains(&group) {
        let ab = abelianization_image(&q, group)?;
        let inside = in_commutator(&q, group)?;
        lines.push(format!("abelianization: {ab}"));
        lines.push(format!("in [{group},{group}]: {}", yes_no(inside)));
        j["abelianization"] = json!(ab.to_string());
        j["in_commutator"] = json!(inside);
    }
    let mut members = serde_json::Map::new();
    for h in GroupName::ALL.into_iter().filter(|h| !matches!(h, GroupName::F | GroupName::T | GroupName::V)) {
        let m = membership(&q, h);
        lines.push(format!("member of {h}: {}", yes_no(m)));
        members.insert(h.name().into(), json!(m));
    }
    j["membership"] = Value::Object(members);
    Ok(Report::ok(lines, j))
}

const SUITES: [&str; 9] = ["F", "T", "V", "QF", "tQT", "tQV", "symStar", "symZ", "figures"];

fn sym_vertices(with_zeta: bool) -> Vec<Vertex> {
    let mut vs: Vec<Vertex> = Word::ball(3).into_iter().map(Vertex::Word).collect();
    if with_zeta {
        vs.push(Vertex::Zeta);
    }
    vs
}

fn subsets(vs: &[Vertex], max: usize) -> Vec<Vec<Vertex>> {
    let mut out = vec![vec![]];
    for v in vs {
        let grown: Vec<Vec<Vertex>> = out
            .iter()
            .filter(|s| s.len() < max)
            .map(|s| {
                let mut s = s.clone();
                s.push(v.clone());
                s
            })
            .collect();
        out.extend(grown);
    }
    out.retain(|s| !s.is_empty());
    out
}

fn suite(name: &str) -> Outcome {
    match name {
        "symStar" | "symZ" => {
            let flavor = if name == "symZ" { SymFlavor::Z } else { SymFlavor::Star };
            let vs = sym_vertices(flavor == SymFlavor::Z);
            let (mut checked, mut failures, mut sets) = (0, Vec::new(), 0);
            for s in subsets(&vs, 5) {
                let r = check_sym_presentation(&s, flavor)?;
                checked += r.checked;
                failures.extend(r.failures);
                sets += 1;
            }
            let mut lines: Vec<String> = failures.iter().map(|f| format!("FAIL {f}")).collect();
            lines.push(format!(
                "{} {sets} vertex sets, {checked} relator instances",
                if failures.is_empty() { "PASS" } else { "FAIL" }
            ));
            Ok(Report {
                lines,
                json: json!({ "suite": name, "vertex_sets": sets, "checked": checked, "failures": failures }),
                ok: failures.is_empty(),
            })
        }
        "figures" => {
            let fixtures = reference_fixtures();
            let lines = fixtures
                .iter()
                .map(|f| format!("{} {}: {}", if f.passed { "PASS" } else { "FAIL" }, f.name, f.detail))
                .collect();
            let ok = fixtures.iter().all(|f| f.passed);
            let json = fixtures
                .iter()
                .map(|f| json!({ "name": f.name, "passed": f.passed, "detail": f.detail }))
                .collect::<Vec<_>>();
            Ok(Report { lines, json: json!({ "suite": name, "fixtures": json }), ok })
        }
        _ => {
            let g: GroupName = name.parse()?;
            let report = check_relators(&builtin_presentation(g)?);
            let relators = report
                .relators
                .iter()
                .map(|r| {
                    json!({
                        "name": r.relator.name,
                        "word": r.relator.word.to_string(),
                        "passed": r.failure.is_none(),
                        "canonical_form": r.failure.as_ref().map(QElement::to_string),
                    })
                })
                .collect::<Vec<_>>();
            Ok(Report {
                lines: report.lines(),
                json: json!({ "suite": name, "relators": relators, "notes": report.lines().into_iter().filter(|l| l.starts_with("NOTE")).collect::<Vec<_>>() }),
                ok: report.passed(),
            })
        }
    }
}

fn cmd_verify(name: &str) -> Outcome {
    if name != "all" {
        if !SUITES.contains(&name) {
            return Err(usage(format!("unknown suite {name:?}; expected one of {} or all", SUITES.join(", "))));
        }
        return suite(name);
    }
    let results: Vec<Outcome> = std::thread::scope(|s| {
        let handles: Vec<_> = SUITES.iter().map(|n| s.spawn(move || suite(n))).collect();
        handles.into_iter().map(|h| h.join().expect("suite thread")).collect()
    });
    let mut lines = Vec::new();
    let mut sections = serde_json::Map::new();
    let mut ok = true;
    for (n, r) in SUITES.iter().zip(results) {
        let r = r?;
        lines.push(format!("== {n} =="));
        lines.extend(r.lines);
        ok &= r.ok;
        sections.insert(n.to_string(), json!({ "passed": r.ok, "report": r.json }));
    }
    lines.push(if ok { "ALL PASS".into() } else { "SOME CHECKS FAILED".into() });
    Ok(Report { lines, json: json!({ "suite": "all", "passed": ok, "sections": sections }), ok })
}

fn cmd_orbit(g: &Grouped, search: Option<usize>) -> Outcome {
    let (group, args) = split_group(g, 2)?;
    let start: VertexTuple = args[0].parse()?;
    let bound: usize = args[1]
        .parse()
        .map_err(|_| usage(format!("bound must be a nonnegative integer, got {:?}", args[1])))?;
    let search = search.unwrap_or(bound + start.len());
    let orbit = orbit_enumerate(&generator_words(group)?, &start, bound, search);
    let lines: Vec<String> = orbit.iter().map(VertexTuple::to_string).collect();
    Ok(Report::ok(
        lines.clone(),
        json!({ "group": group.name(), "start": start.to_string(), "bound": bound, "search_bound": search, "tuples": lines }),
    ))
}

fn parse_tuple(flavor: Flavor, s: &str) -> Result<VertexTuple, Failure> {
    let prefix = match flavor {
        Flavor::Sigma => "S:",
        Flavor::Lambda => "L:",
        Flavor::Delta => "D:",
    };
    let text = if s.contains(':') { s.to_string() } else { format!("{prefix}{s}") };
    let t: VertexTuple = text.parse()?;
    if t.flavor() != flavor {
        return Err(Failure::Core(Error::MalformedTuple(format!("expected a {prefix} tuple, got {t}"))));
    }
    Ok(t)
}

fn images(w: &VElement, from: &[Vertex]) -> Vec<String> {
    from.iter().map(|x| format!("{x}->{}", w.iota_image(x))).collect()
}

fn cmd_witness(kind: &str, args: &[String]) -> Outcome {
    let arity = |n: usize| {
        if args.len() == n {
            Ok(())
        } else {
            Err(usage(format!("witness {kind} takes {n} argument(s)")))
        }
    };
    let (w, check, ok) = match kind {
        "sigma" | "lambda" | "delta" => {
            arity(1)?;
            let flavor = match kind {
                "sigma" => Flavor::Sigma,
                "lambda" => Flavor::Lambda,
                _ => Flavor::Delta,
            };
            let t = parse_tuple(flavor, &args[0])?;
            let w = witness(&t)?;
            let base = VertexTuple::base(flavor, t.len())?;
            let ok = base.entries().iter().zip(t.entries()).all(|(y, x)| &w.iota_image(y) == x);
            (w.clone(), format!("images: {}", images(&w, base.entries()).join(" ")), ok)
        }
        "bnsr" => {
            arity(1)?;
            let a: i64 = args[0]
                .parse()
                .map_err(|_| usage(format!("expected an integer, got {:?}", args[0])))?;
            let w = bnsr_witness_fixing(a);
            let (c0, c1) = chi(&w)?;
            let fixed: Vec<Vertex> = ["e", "0", "1"].iter().map(|s| Vertex::word(s)).collect();
            let ok = (c0, c1) == (0, a) && fixed.iter().all(|x| &w.iota_image(x) == x);
            (w.clone(), format!("chi: ({c0}, {c1}); images: {}", images(&w, &fixed).join(" ")), ok)
        }
        "kernel" => {
            arity(2)?;
            let x1: Word = args[0].parse()?;
            let x2: Word = args[1].parse()?;
            let w = kernel_transitivity_witness(&x1, &x2)?;
            let (c0, c1) = chi(&w)?;
            let base = [Vertex::word("0"), Vertex::root()];
            let ok = (c0, c1) == (0, 0)
                && w.iota_image(&base[0]) == Vertex::Word(x1)
                && w.iota_image(&base[1]) == Vertex::Word(x2);
            (w.clone(), format!("chi: ({c0}, {c1}); images: {}", images(&w, &base).join(" ")), ok)
        }
        other => return Err(usage(format!("unknown witness kind {other:?}"))),
    };
    Ok(Report {
        lines: vec![w.to_string(), check.clone()],
        json: json!({ "kind": kind, "element": w.to_string(), "check": check, "verified": ok }),
        ok,
    })
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Eval(g) => cmd_eval(g),
        Command::Apply(g) => cmd_apply(g),
        Command::Invariants(g) => cmd_invariants(g),
        Command::Verify { suite } => cmd_verify(suite),
        Command::Orbit { grouped, search } => cmd_orbit(grouped, *search),
        Command::Witness { kind, args } => cmd_witness(kind, args),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            let mut out = std::io::stdout().lock();
            let _ = if cli.json {
                writeln!(out, "{}", serde_json::to_string_pretty(&report.json).expect("json value"))
            } else {
                report.lines.iter().try_for_each(|l| writeln!(out, "{l}"))
            };
            if report.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Core(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
