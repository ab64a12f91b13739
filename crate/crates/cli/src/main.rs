//! `ocn`: query objection-based causal networks and states of belief.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use ocn::belief::OrderingVerdict;
use ocn::format::{self, Document, NetworkFile};
use ocn::logic::{parse_sentence, simplify, Vocabulary, World};
use ocn::network::{self, MarkovStatus};
use ocn::pcn::{self, JointDistribution};
use ocn::{Error, ObjectionState, Sentence};

#[derive(Parser)]
#[command(name = "ocn", version, about = "Objection-based causal networks")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = OutputFormat::Text, global = true)]
    format: OutputFormat,

    /// Also print a shorter equivalent of each objection, labeled `simplified:`.
    #[arg(long, global = true)]
    pretty: bool,

    /// Rewrite objection entries that break the product rule as `b & !Φ(A)`
    /// before running the command.
    #[arg(long, global = true)]
    normalize: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

#[derive(Args)]
struct Evidence {
    /// Observed sentence to conditionalize on.
    #[arg(long, value_name = "FORMULA")]
    given: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Check a network's tables or a state file.
    Validate { file: PathBuf },
    /// Objection to a sentence.
    Query {
        file: PathBuf,
        formula: String,
        #[command(flatten)]
        evidence: Evidence,
    },
    /// Probability of a sentence.
    Prob {
        file: PathBuf,
        formula: String,
        #[command(flatten)]
        evidence: Evidence,
    },
    /// Objection and probability of every world.
    Worlds {
        file: PathBuf,
        #[command(flatten)]
        evidence: Evidence,
    },
    /// Check that non-descendants are irrelevant to a node given its parents.
    Markov { file: PathBuf },
    /// Ignorance about a sentence.
    Ignorance {
        file: PathBuf,
        formula: String,
        #[command(flatten)]
        evidence: Evidence,
    },
    /// Compare two sentences by objection, belief and ignorance.
    Order {
        file: PathBuf,
        a: String,
        b: String,
        #[command(flatten)]
        evidence: Evidence,
    },
    /// Objection and probability of the same sentence side by side.
    Compare {
        file: PathBuf,
        formula: String,
        #[command(flatten)]
        evidence: Evidence,
    },
    /// Per-node factors of one world.
    Explain {
        file: PathBuf,
        /// A conjunction naming every node once.
        world: String,
    },
}

enum Failure {
    /// Bad input: unreadable file, syntax, missing tables.
    Usage(String),
    Domain(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_parse_error() {
            Failure::Usage(e.to_string())
        } else {
            Failure::Domain(e.to_string())
        }
    }
}

type Outcome = Result<Report, Failure>;

/// Printed output and whether the command's check passed.
struct Report {
    text: String,
    json: Value,
    ok: bool,
}

impl Report {
    fn ok(text: String, json: Value) -> Self {
        Report {
            text,
            json,
            ok: true,
        }
    }
}

struct Ctx {
    pretty: bool,
    normalize: bool,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let ctx = Ctx {
        pretty: cli.pretty,
        normalize: cli.normalize,
    };
    match run(&ctx, cli.command) {
        Ok(report) => {
            match cli.format {
                OutputFormat::Text => print!("{}", report.text),
                OutputFormat::Json => {
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&report.json).expect("json")
                    )
                }
            }
            ExitCode::from(if report.ok { 0 } else { 1 })
        }
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
    }
}

fn run(ctx: &Ctx, command: Command) -> Outcome {
    match command {
        Command::Validate { file } => validate(ctx, &file),
        Command::Query {
            file,
            formula,
            evidence,
        } => query(ctx, &file, &formula, evidence.given.as_deref()),
        Command::Prob {
            file,
            formula,
            evidence,
        } => prob(&file, &formula, evidence.given.as_deref()),
        Command::Worlds { file, evidence } => worlds(ctx, &file, evidence.given.as_deref()),
        Command::Markov { file } => markov(ctx, &file),
        Command::Ignorance {
            file,
            formula,
            evidence,
        } => ignorance(ctx, &file, &formula, evidence.given.as_deref()),
        Command::Order {
            file,
            a,
            b,
            evidence,
        } => order(ctx, &file, &a, &b, evidence.given.as_deref()),
        Command::Compare {
            file,
            formula,
            evidence,
        } => compare(ctx, &file, &formula, evidence.given.as_deref()),
        Command::Explain { file, world } => explain(ctx, &file, &world),
    }
}

fn load(path: &Path) -> Result<Document, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    format::parse_document(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn load_network(path: &Path) -> Result<NetworkFile, Failure> {
    match load(path)? {
        Document::Network(f) => Ok(f),
        Document::State(_) => Err(Failure::Usage(format!(
            "{} is a state file; this command needs a network",
            path.display()
        ))),
    }
}

fn with_ocn<'a>(
    ctx: &Ctx,
    f: &'a NetworkFile,
    path: &Path,
) -> Result<std::borrow::Cow<'a, network::OcnQuantification>, Failure> {
    let q = f
        .ocn
        .as_ref()
        .ok_or_else(|| Failure::Usage(format!("{} has no objection tables", path.display())))?;
    if ctx.normalize {
        Ok(std::borrow::Cow::Owned(network::normalize_quantification(
            &f.network, q,
        )?))
    } else {
        Ok(std::borrow::Cow::Borrowed(q))
    }
}

fn pcn_of<'a>(f: &'a NetworkFile, path: &Path) -> Result<&'a pcn::PcnQuantification, Failure> {
    f.pcn
        .as_ref()
        .ok_or_else(|| Failure::Usage(format!("{} has no probability tables", path.display())))
}

/// The state of belief a file describes, before any evidence.
fn state_of(ctx: &Ctx, path: &Path) -> Result<ObjectionState, Failure> {
    match load(path)? {
        Document::State(s) => Ok(s.state),
        Document::Network(f) => {
            let q = with_ocn(ctx, &f, path)?;
            Ok(network::assemble_state(&f.network, &q)?)
        }
    }
}

fn formula(text: &str, vocab: &Vocabulary) -> Result<Sentence, Failure> {
    parse_sentence(text, vocab).map_err(|e| Failure::Usage(format!("`{text}`: {e}")))
}

fn evidence(text: Option<&str>, vocab: &Vocabulary) -> Result<Option<Sentence>, Failure> {
    text.map(|t| formula(t, vocab)).transpose()
}

fn conditioned(state: ObjectionState, e: Option<&Sentence>) -> Result<ObjectionState, Failure> {
    match e {
        Some(e) => Ok(state.conditionalize(e)?),
        None => Ok(state),
    }
}

/// Shortest-form rendering, for `--pretty`.
fn simplified(s: &Sentence, vocab: &Vocabulary) -> Sentence {
    simplify(
        &vocab.compile(s).expect("rendered over this vocabulary"),
        vocab,
    )
}

/// Appends `objection` and, with `--pretty`, its simplified form.
fn push_objection(
    ctx: &Ctx,
    text: &mut String,
    json: &mut Value,
    key: &str,
    s: &Sentence,
    vocab: &Vocabulary,
) {
    let _ = writeln!(text, "{s}");
    json[key] = json!(s.to_string());
    if ctx.pretty {
        let p = simplified(s, vocab);
        let _ = writeln!(text, "simplified: {p}");
        json[format!("{key}_simplified")] = json!(p.to_string());
    }
}

/// Fixed-point rendering with at most twelve decimals.
fn probability(p: f64) -> String {
    let s = format!("{p:.12}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".to_string()
    } else {
        s.to_string()
    }
}

fn probability_json(p: f64) -> Value {
    json!(probability(p).parse::<f64>().expect("formatted number"))
}

fn validate(ctx: &Ctx, path: &Path) -> Outcome {
    let f = match load(path)? {
        Document::State(s) => {
            let text = format!(
                "state {}: valid ({} worlds)\n",
                s.name,
                s.state.domain_vocabulary().world_count()
            );
            let json = json!({"kind": "state", "name": s.name, "valid": true});
            return Ok(Report::ok(text, json));
        }
        Document::Network(f) => f,
    };
    let mut text = String::new();
    let mut json = json!({"kind": "network", "name": f.network.name()});
    let mut ok = true;
    if f.ocn.is_some() {
        let q = with_ocn(ctx, &f, path)?;
        let report = network::validate_ocn(&f.network, &q);
        ok &= report.is_valid();
        let _ = writeln!(
            text,
            "objections: {} ({} rows checked, {} errors, {} warnings)",
            if report.is_valid() {
                "valid"
            } else {
                "invalid"
            },
            report.checked_rows,
            report.errors().count(),
            report.warnings().count()
        );
        for issue in &report.issues {
            let _ = writeln!(text, "  {issue}");
        }
        json["objections"] = json!({"valid": report.is_valid(), "report": report});
    }
    if let Some(q) = &f.pcn {
        let report = pcn::validate_pcn(&f.network, q);
        ok &= report.is_valid();
        let _ = writeln!(
            text,
            "probabilities: {} ({} rows checked)",
            if report.is_valid() {
                "valid"
            } else {
                "invalid"
            },
            report.checked_rows
        );
        for issue in &report.issues {
            let _ = writeln!(text, "  {issue}");
        }
        json["probabilities"] = json!({"valid": report.is_valid(), "report": report});
    }
    if f.ocn.is_none() && f.pcn.is_none() {
        let _ = writeln!(text, "network {}: no tables", f.network.name());
    }
    json["valid"] = json!(ok);
    Ok(Report { text, json, ok })
}

fn query(ctx: &Ctx, path: &Path, text: &str, given: Option<&str>) -> Outcome {
    let state = state_of(ctx, path)?;
    let l = state.domain_vocabulary().clone();
    let q = formula(text, &l)?;
    let e = evidence(given, &l)?;
    let state = conditioned(state, e.as_ref())?;
    let objection = state.objection_of(&q)?;
    let mut out = String::new();
    let mut json = json!({
        "query": q.to_string(),
        "evidence": e.as_ref().map(Sentence::to_string),
        "rejected": state.rejects(&q)?,
        "accepted": state.accepts(&q)?,
    });
    push_objection(
        ctx,
        &mut out,
        &mut json,
        "objection",
        &objection,
        state.objection_vocabulary(),
    );
    Ok(Report::ok(out, json))
}

fn prob(path: &Path, text: &str, given: Option<&str>) -> Outcome {
    let f = load_network(path)?;
    let q = pcn_of(&f, path)?;
    let l = f.network.vocabulary();
    let s = formula(text, l)?;
    let e = evidence(given, l)?;
    let p = pcn::prob_query(&f.network, q, &s, e.as_ref())?;
    let json = json!({
        "query": s.to_string(),
        "evidence": e.as_ref().map(Sentence::to_string),
        "probability": probability_json(p),
    });
    Ok(Report::ok(format!("{}\n", probability(p)), json))
}

fn worlds(ctx: &Ctx, path: &Path, given: Option<&str>) -> Outcome {
    let (name, state, joint): (String, Option<ObjectionState>, Option<JointDistribution>) =
        match load(path)? {
            Document::State(s) => (s.name, Some(s.state), None),
            Document::Network(f) => {
                let state = match f.ocn {
                    Some(_) => {
                        let q = with_ocn(ctx, &f, path)?;
                        Some(network::assemble_state(&f.network, &q)?)
                    }
                    None => None,
                };
                let joint = match &f.pcn {
                    Some(q) => Some(pcn::assemble_joint(&f.network, q)?),
                    None => None,
                };
                (f.network.name().to_string(), state, joint)
            }
        };
    let l = match (&state, &joint) {
        (Some(s), _) => s.domain_vocabulary().clone(),
        (None, Some(j)) => j.vocabulary().clone(),
        (None, None) => return Err(Failure::Usage(format!("{} has no tables", path.display()))),
    };
    let e = evidence(given, &l)?;
    let state = state.map(|s| conditioned(s, e.as_ref())).transpose()?;
    let (e_models, pe) = match (&e, &joint) {
        (Some(e), Some(j)) => {
            let pe = j.probability_of(e)?;
            if pe <= pcn::TOLERANCE {
                return Err(Error::ZeroProbabilityEvidence(e.to_string()).into());
            }
            (Some(l.compile(e)?), pe)
        }
        (Some(e), None) => (Some(l.compile(e)?), 1.0),
        _ => (None, 1.0),
    };
    let p_of = |w: &World| -> Option<f64> {
        let j = joint.as_ref()?;
        let inside = e_models.as_ref().is_none_or(|m| m.get(w.index()));
        Some(if inside { j.probability(w) / pe } else { 0.0 })
    };

    let mut text = String::new();
    if let Some(s) = &state {
        let _ = writeln!(text, "state {name}");
        let _ = writeln!(text, "lprops {}", l.names().join(" "));
        let _ = writeln!(
            text,
            "oprops {}",
            s.objection_vocabulary().names().join(" ")
        );
    }
    let mut rows = Vec::new();
    for w in l.worlds() {
        let objection = state.as_ref().map(|s| s.world_objection(&w));
        let p = p_of(&w);
        let mut line = format!("world {w}");
        if let Some(o) = &objection {
            let _ = write!(line, " : {o}");
        }
        if let Some(p) = p {
            let _ = write!(line, " # P = {}", probability(p));
        }
        let _ = writeln!(text, "{line}");
        let mut row = json!({"world": w.to_sentence().to_string()});
        if let Some(o) = &objection {
            row["objection"] = json!(o.to_string());
            if ctx.pretty {
                let v = state
                    .as_ref()
                    .expect("objection present")
                    .objection_vocabulary();
                let simple = simplified(o, v);
                let _ = writeln!(text, "# simplified: {simple}");
                row["objection_simplified"] = json!(simple.to_string());
            }
        }
        if let Some(p) = p {
            row["probability"] = probability_json(p);
        }
        rows.push(row);
    }
    let json = json!({
        "name": name,
        "evidence": e.as_ref().map(Sentence::to_string),
        "worlds": rows,
    });
    Ok(Report::ok(text, json))
}

fn markov(ctx: &Ctx, path: &Path) -> Outcome {
    let f = load_network(path)?;
    let q = with_ocn(ctx, &f, path)?;
    let report = network::markov_check(&f.network, &q)?;
    let o = q.objection_vocabulary();
    let mut text = format!(
        "verified {}, violated {}, vacuous {}\n",
        report.count(MarkovStatus::Verified),
        report.count(MarkovStatus::Violated),
        report.count(MarkovStatus::Vacuous)
    );
    for e in report.violations() {
        let _ = writeln!(
            text,
            "violated: {} given {} and {}",
            e.literal, e.parents, e.others
        );
        for (label, s) in [
            ("given parents", &e.given_parents),
            ("given all", &e.given_all),
        ] {
            let s = s.as_ref().expect("violations carry both objections");
            let _ = writeln!(text, "  {label}: {s}");
            if ctx.pretty {
                let _ = writeln!(text, "  simplified: {}", simplified(s, o));
            }
        }
    }
    let json = json!({
        "clean": report.is_clean(),
        "verified": report.count(MarkovStatus::Verified),
        "violated": report.count(MarkovStatus::Violated),
        "vacuous": report.count(MarkovStatus::Vacuous),
        "entries": report.entries,
    });
    Ok(Report {
        text,
        json,
        ok: report.is_clean(),
    })
}

fn ignorance(ctx: &Ctx, path: &Path, text: &str, given: Option<&str>) -> Outcome {
    let state = state_of(ctx, path)?;
    let l = state.domain_vocabulary().clone();
    let s = formula(text, &l)?;
    let e = evidence(given, &l)?;
    let state = conditioned(state, e.as_ref())?;
    let u = state.ignorance(&s)?;
    let mut out = String::new();
    let mut json = json!({
        "formula": s.to_string(),
        "evidence": e.as_ref().map(Sentence::to_string),
    });
    push_objection(
        ctx,
        &mut out,
        &mut json,
        "ignorance",
        &u,
        state.objection_vocabulary(),
    );
    Ok(Report::ok(out, json))
}

fn order(ctx: &Ctx, path: &Path, a: &str, b: &str, given: Option<&str>) -> Outcome {
    let state = state_of(ctx, path)?;
    let l = state.domain_vocabulary().clone();
    let (a, b) = (formula(a, &l)?, formula(b, &l)?);
    let e = evidence(given, &l)?;
    let state = conditioned(state, e.as_ref())?;
    let verdicts: [(&str, OrderingVerdict); 3] = [
        (
            "no_more_objectionable",
            state.no_more_objectionable(&a, &b)?,
        ),
        ("no_more_believed", state.no_more_believed(&a, &b)?),
        ("no_more_ignorant", state.no_more_ignorant(&a, &b)?),
    ];
    let mut text = String::new();
    let mut json = json!({
        "a": a.to_string(),
        "b": b.to_string(),
        "evidence": e.as_ref().map(Sentence::to_string),
    });
    for (name, v) in &verdicts {
        let word = if v.holds() { "holds" } else { "fails" };
        let _ = writeln!(text, "{name}({a}, {b}): {word}");
        for c in &v.checks {
            let mark = if c.holds { "|=" } else { "|/=" };
            let _ = writeln!(text, "  {} {mark} {}", c.premise, c.conclusion);
            if ctx.pretty {
                let o = state.objection_vocabulary();
                let _ = writeln!(
                    text,
                    "  simplified: {} {mark} {}",
                    simplified(&c.premise, o),
                    simplified(&c.conclusion, o)
                );
            }
        }
        json[*name] = json!(v);
    }
    Ok(Report::ok(text, json))
}

fn compare(ctx: &Ctx, path: &Path, text: &str, given: Option<&str>) -> Outcome {
    let f = load_network(path)?;
    let q = with_ocn(ctx, &f, path)?;
    let p = pcn_of(&f, path)?;
    let l = f.network.vocabulary();
    let s = formula(text, l)?;
    let e = evidence(given, l)?;
    let c = pcn::compare(&f.network, &q, p, &s, e.as_ref())?;
    let o = q.objection_vocabulary();
    let mut out = String::new();
    let _ = writeln!(out, "objection: {}", c.objection);
    if ctx.pretty {
        let _ = writeln!(out, "simplified: {}", simplified(&c.objection, o));
    }
    let _ = writeln!(out, "probability: {}", probability(c.probability));
    let _ = writeln!(out, "rejected: {}", c.rejected);
    let _ = writeln!(out, "accepted: {}", c.accepted);
    let _ = writeln!(out, "extremes agree: {}", c.extremes_agree);
    let mut json = json!(c);
    json["probability"] = probability_json(c.probability);
    if ctx.pretty {
        json["objection_simplified"] = json!(simplified(&c.objection, o).to_string());
    }
    Ok(Report::ok(out, json))
}

fn explain(ctx: &Ctx, path: &Path, text: &str) -> Outcome {
    let f = load_network(path)?;
    let l = f.network.vocabulary();
    let s = formula(text, l)?;
    let models = l.compile(&s)?;
    let w = match (models.first_model(), models.count_models()) {
        (Some(k), 1) => l.world(k),
        _ => {
            return Err(Failure::Usage(format!(
                "`{text}` must describe exactly one world"
            )))
        }
    };
    let mut out = format!("world {w}\n");
    let mut json = json!({"world": w.to_sentence().to_string()});
    if f.ocn.is_some() {
        let q = with_ocn(ctx, &f, path)?;
        let steps = network::explain(&f.network, &q, &w)?;
        let state = network::assemble_state(&f.network, &q)?;
        let _ = writeln!(out, "objection factors:");
        for st in &steps {
            let _ = writeln!(
                out,
                "  {} | {} : {}",
                st.literal, st.condition, st.objection
            );
        }
        let _ = write!(out, "objection: ");
        push_objection(
            ctx,
            &mut out,
            &mut json,
            "objection",
            &state.world_objection(&w),
            q.objection_vocabulary(),
        );
        json["objection_factors"] = json!(steps);
    }
    if let Some(q) = &f.pcn {
        let factors = pcn::factor_trace(&f.network, q, &w)?;
        let _ = writeln!(out, "probability factors:");
        for fac in &factors {
            let _ = writeln!(
                out,
                "  {} | {} : {}",
                fac.literal,
                fac.condition,
                probability(fac.probability)
            );
        }
        let p: f64 = factors.iter().map(|fac| fac.probability).product();
        let _ = writeln!(out, "probability: {}", probability(p));
        json["probability_factors"] = json!(factors);
        json["probability"] = probability_json(p);
    }
    Ok(Report::ok(out, json))
}
