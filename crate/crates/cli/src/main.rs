use std::fmt::Write as _;
use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use graduality::acceptability::{extensions, AcceptabilityReport, Model, Semantics, DEFAULT_BOUND};
use graduality::local::{evaluate_local, FixpointConfig, Label, LocalInstance, LocalValue};
use graduality::tuples::{compare, evaluate_cyclic, PropagationDepth, TupledValue};
use graduality::{AttackGraph, Error};
use num_rational::BigRational;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "graduality", version, about = "Gradual valuation and acceptability of argumentation frameworks")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Value every argument of a framework
    Value {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = ModelArg::Categoriser)]
        model: ModelArg,
        #[command(flatten)]
        depth: Depth,
    },
    /// Compare two values of one model
    Compare {
        first: String,
        second: String,
        #[arg(long, value_enum, default_value_t = ModelArg::Tuples)]
        model: ModelArg,
    },
    /// List the extensions of a framework
    Solve {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = SemanticsArg::Preferred)]
        semantics: SemanticsArg,
        #[arg(long, default_value_t = DEFAULT_BOUND)]
        bound: usize,
    },
    /// Acceptability level of every argument, with well-defendedness for each `--model`
    Classify {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = SemanticsArg::Preferred)]
        semantics: SemanticsArg,
        #[arg(long, value_enum)]
        model: Vec<ModelArg>,
        #[command(flatten)]
        depth: Depth,
    },
    /// Arguments no direct attacker strictly beats
    WellDefended {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = ModelArg::Categoriser)]
        model: ModelArg,
        #[command(flatten)]
        depth: Depth,
    },
    /// Print the framework in DOT
    ExportDot {
        #[command(flatten)]
        input: Input,
    },
}

#[derive(clap::Args)]
struct Input {
    /// Framework file; standard input when absent or `-`
    path: Option<PathBuf>,
}

#[derive(clap::Args)]
struct Depth {
    /// Propagation depth through cycles (tuples model)
    #[arg(long, default_value_t = 10)]
    depth: u32,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum ModelArg {
    Categoriser,
    Labelling,
    Tuples,
}

#[derive(Clone, Copy, ValueEnum)]
enum SemanticsArg {
    Preferred,
    Stable,
}

impl From<SemanticsArg> for Semantics {
    fn from(s: SemanticsArg) -> Self {
        match s {
            SemanticsArg::Preferred => Semantics::Preferred,
            SemanticsArg::Stable => Semantics::Stable,
        }
    }
}

enum Failure {
    Usage(String),
    Input(String),
    Computation(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Syntax { .. }
            | Error::UndeclaredArgument { .. }
            | Error::InvalidIdentifier(_)
            | Error::DuplicateArgument(_)
            | Error::InvalidTupledValue(_) => Failure::Input(e.to_string()),
            Error::InvalidDepth => Failure::Usage(e.to_string()),
            _ => Failure::Computation(e.to_string()),
        }
    }
}

struct Output {
    text: String,
    json: Value,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(&cli) {
        Ok(out) => {
            let rendered = match cli.format {
                Format::Text => out.text,
                Format::Json => format!("{}\n", serde_json::to_string_pretty(&out.json).unwrap()),
            };
            // a closed pipe downstream is not an error
            let _ = std::io::stdout().lock().write_all(rendered.as_bytes());
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(m)) => fail(1, &m),
        Err(Failure::Input(m)) => fail(2, &m),
        Err(Failure::Computation(m)) => fail(3, &m),
    }
}

fn fail(code: u8, message: &str) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(code)
}

fn read_graph(input: &Input) -> Result<AttackGraph, Failure> {
    let mut text = String::new();
    match &input.path {
        Some(p) if p.as_os_str() != "-" => {
            text = std::fs::read_to_string(p)
                .map_err(|e| Failure::Input(format!("{}: {e}", p.display())))?;
        }
        _ => {
            std::io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| Failure::Input(format!("standard input: {e}")))?;
        }
    }
    Ok(AttackGraph::parse(&text)?)
}

fn depth(d: &Depth) -> Result<PropagationDepth, Failure> {
    Ok(PropagationDepth::new(d.depth)?)
}

fn model(m: ModelArg, d: &Depth) -> Result<Model, Failure> {
    Ok(match m {
        ModelArg::Categoriser => Model::Local(LocalInstance::categoriser()),
        ModelArg::Labelling => Model::Local(LocalInstance::rooted_labelling()),
        ModelArg::Tuples => Model::Tuples(depth(d)?),
    })
}

fn model_name(m: ModelArg) -> &'static str {
    match m {
        ModelArg::Categoriser => "categoriser",
        ModelArg::Labelling => "labelling",
        ModelArg::Tuples => "tuples",
    }
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    match &cli.command {
        Command::Value { input, model: m, depth: d } => value(&read_graph(input)?, *m, d),
        Command::Compare { first, second, model: m } => compare_values(first, second, *m),
        Command::Solve { input, semantics, bound } => solve(&read_graph(input)?, (*semantics).into(), *bound),
        Command::Classify { input, semantics, model: ms, depth: d } => {
            let g = read_graph(input)?;
            let models = ms.iter().map(|&m| model(m, d)).collect::<Result<Vec<_>, _>>()?;
            classify(&g, (*semantics).into(), &models)
        }
        Command::WellDefended { input, model: m, depth: d } => {
            let g = read_graph(input)?;
            let set = model(*m, d)?.well_defended(&g, &FixpointConfig::default())?;
            let names: Vec<&str> = set.iter().map(|&a| g.name(a).as_str()).collect();
            let text = names.iter().map(|n| format!("{n}\n")).collect();
            let json = json!({ "command": "well-defended", "model": model_name(*m), "well_defended": names });
            Ok(Output { text, json })
        }
        Command::ExportDot { input } => {
            let dot = read_graph(input)?.to_dot();
            let json = json!({ "command": "export-dot", "dot": dot });
            Ok(Output { text: dot, json })
        }
    }
}

fn value(g: &AttackGraph, m: ModelArg, d: &Depth) -> Result<Output, Failure> {
    let mut text = String::new();
    let mut rows = Vec::new();
    let mut horizon = None;
    match m {
        ModelArg::Tuples => {
            let v = evaluate_cyclic(g, depth(d)?);
            horizon = v.horizon();
            for a in g.arguments() {
                let x = v.get(a);
                writeln!(text, "{} {x}", g.name(a)).unwrap();
                rows.push(json!({ "argument": g.name(a).as_str(), "value": x.to_string(), "exact": !x.is_truncated() }));
            }
        }
        _ => {
            let inst = match m {
                ModelArg::Labelling => LocalInstance::rooted_labelling(),
                _ => LocalInstance::categoriser(),
            };
            let v = evaluate_local(g, &inst, &FixpointConfig::default())?;
            for a in g.arguments() {
                let x = v.get(a);
                writeln!(text, "{} {x}", g.name(a)).unwrap();
                let exact = !matches!(x, LocalValue::Float(_));
                rows.push(json!({ "argument": g.name(a).as_str(), "value": x.to_string(), "numeric": x.to_f64(), "exact": exact }));
            }
        }
    }
    let json = json!({ "command": "value", "model": model_name(m), "horizon": horizon, "values": rows });
    Ok(Output { text, json })
}

fn parse_local(s: &str, m: ModelArg) -> Result<LocalValue, Failure> {
    let bad = || Failure::Input(format!("`{s}` is not a {} value", model_name(m)));
    let s = s.trim();
    if m == ModelArg::Labelling {
        return match s {
            "+" => Ok(LocalValue::Label(Label::Plus)),
            "-" => Ok(LocalValue::Label(Label::Minus)),
            "?" => Ok(LocalValue::Label(Label::Unknown)),
            _ => Err(bad()),
        };
    }
    if let Ok(r) = s.parse::<BigRational>() {
        return Ok(LocalValue::Rational(r));
    }
    s.parse::<f64>()
        .ok()
        .filter(|x| x.is_finite())
        .map(LocalValue::Float)
        .ok_or_else(bad)
}

fn compare_values(first: &str, second: &str, m: ModelArg) -> Result<Output, Failure> {
    let (verdict, exact) = match m {
        ModelArg::Tuples => {
            let v: TupledValue = first.parse()?;
            let w: TupledValue = second.parse()?;
            let o = compare(&v, &w);
            (o.verdict.as_str(), o.exact)
        }
        _ => {
            let (v, w) = (parse_local(first, m)?, parse_local(second, m)?);
            let verdict = match v.compare(&w)? {
                std::cmp::Ordering::Greater => "first-better",
                std::cmp::Ordering::Less => "second-better",
                std::cmp::Ordering::Equal => "equivalent",
            };
            (verdict, true)
        }
    };
    let tag = if exact { "exact" } else { "at horizon" };
    let json = json!({ "command": "compare", "model": model_name(m), "verdict": verdict, "exact": exact });
    Ok(Output { text: format!("{verdict} ({tag})\n"), json })
}

fn solve(g: &AttackGraph, semantics: Semantics, bound: usize) -> Result<Output, Failure> {
    let exts = extensions(g, semantics, bound)?;
    let text = exts.iter().map(|e| format!("{}\n", e.render(g))).collect();
    let sets: Vec<Vec<&str>> = exts
        .iter()
        .map(|e| e.members().iter().map(|&a| g.name(a).as_str()).collect())
        .collect();
    let json = json!({ "command": "solve", "semantics": semantics.as_str(), "extensions": sets });
    Ok(Output { text, json })
}

fn classify(g: &AttackGraph, semantics: Semantics, models: &[Model]) -> Result<Output, Failure> {
    let report = AcceptabilityReport::build(g, semantics, models, &FixpointConfig::default())?;
    let rows: Vec<Value> = g
        .arguments()
        .map(|a| {
            let wd: Vec<&str> = report
                .well_defended
                .iter()
                .filter(|(_, set)| set.contains(&a))
                .map(|(n, _)| n.as_str())
                .collect();
            json!({
                "argument": g.name(a).as_str(),
                "level": report.levels[a.index()].as_str(),
                "well_defended": wd,
            })
        })
        .collect();
    let json = json!({ "command": "classify", "semantics": semantics.as_str(), "levels": rows });
    Ok(Output { text: report.render(g), json })
}
