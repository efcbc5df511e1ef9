//! Command-line front end. [`run`] is the whole CLI; the `ucycle` binary
//! only forwards `std::env::args` and exits with its return code.
//!
//! Exit codes: 0 on success or a passing check, 1 when a check fails or no
//! U-cycle exists (the report is still printed), 2 on usage or contract
//! errors.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::class::{enumerate_class, parse_classes, validate_spec, ClassSpec, DEFAULT_BUDGET};
use crate::counting::count_report;
use crate::digraph::build_digraph;
use crate::error::Error;
use crate::euler::{diagnose, eulerian_circuit, read_ucycle, ExistenceReport};
use crate::format::{parse_cycle, render_cycle};
use crate::verify::{verify_ucycle, VerificationReport};
use crate::witness::{
    bfs_path, lag_cycle, position_swap_path, ranking_collapse_path, reverse_path,
    status_swap_path, validate_path, WitnessPath,
};
use crate::word::{Letter, Word};

/// Environment fallback for `--budget`.
pub const BUDGET_ENV: &str = "UCYCLE_BUDGET";

#[derive(Debug, Parser)]
#[command(name = "ucycle", version, about = "Universal cycles of restricted word classes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Construct a U-cycle and print it in cycle file format.
    Generate(CommonArgs),
    /// Check a cycle file against a class.
    Verify {
        #[command(flatten)]
        common: CommonArgs,
        #[arg(long)]
        cycle: PathBuf,
    },
    /// Closed-form and brute-force class sizes.
    Count(CommonArgs),
    /// List every class member.
    Enumerate(CommonArgs),
    /// Balance and connectivity report for the class digraph.
    Diagnose(CommonArgs),
    /// Build a connectivity witness path.
    Witness {
        #[command(flatten)]
        common: CommonArgs,
        #[command(flatten)]
        witness: WitnessArgs,
    },
    /// Write the class digraph in Graphviz DOT.
    ExportDot(CommonArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum, PartialEq, Eq)]
enum OutputFormat {
    Text,
    Json,
}

#[derive(Debug, Args)]
struct CommonArgs {
    /// plain, injection, surjection, almost-onto, non-bijection, equitable,
    /// s-inequitable, ranking, password
    #[arg(long = "class")]
    class: String,
    #[arg(long)]
    m: Option<u32>,
    #[arg(long)]
    n: Option<u32>,
    #[arg(long)]
    k: Option<u32>,
    #[arg(long)]
    s: Option<u32>,
    /// Password classes, e.g. "1,2;3"
    #[arg(long)]
    classes: Option<String>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "text")]
    format: OutputFormat,
    /// Maximum number of candidate words n^m to scan
    #[arg(long)]
    budget: Option<u64>,
}

#[derive(Debug, Clone, Copy, ValueEnum, PartialEq, Eq)]
enum WitnessKind {
    Lag,
    StatusSwap,
    PositionSwap,
    Collapse,
    Expand,
    Bfs,
}

#[derive(Debug, Args)]
struct WitnessArgs {
    #[arg(long, value_enum)]
    kind: WitnessKind,
    /// Start vertex (target vertex for `expand`)
    #[arg(long)]
    from: String,
    #[arg(long)]
    to: Option<String>,
    #[arg(long)]
    placeholder: Option<Letter>,
    #[arg(long = "super")]
    super_letter: Option<Letter>,
    #[arg(long = "normal")]
    normal_letter: Option<Letter>,
    /// 0-based position
    #[arg(long)]
    i: Option<usize>,
    /// 0-based position
    #[arg(long)]
    j: Option<usize>,
}

/// A CLI failure that maps to exit code 2.
struct Usage(String);

impl From<Error> for Usage {
    fn from(e: Error) -> Self {
        Usage(e.to_string())
    }
}

impl From<std::io::Error> for Usage {
    fn from(e: std::io::Error) -> Self {
        Usage(format!("i/o error: {e}"))
    }
}

fn need(v: Option<u32>, flag: &str, class: &str) -> std::result::Result<u32, Usage> {
    v.ok_or_else(|| Usage(format!("class {class} requires --{flag}")))
}

impl CommonArgs {
    fn spec(&self) -> std::result::Result<ClassSpec, Usage> {
        let name = self.class.as_str();
        let spec = match name {
            "plain" => ClassSpec::Plain { m: need(self.m, "m", name)?, n: need(self.n, "n", name)? },
            "injection" => ClassSpec::Injection {
                k: need(self.k.or(self.m), "k", name)?,
                n: need(self.n, "n", name)?,
            },
            "surjection" => ClassSpec::Surjection {
                k: need(self.k.or(self.m), "k", name)?,
                n: need(self.n, "n", name)?,
            },
            "almost-onto" => ClassSpec::AlmostOnto { n: need(self.n.or(self.m), "n", name)? },
            "non-bijection" => ClassSpec::NonBijection { n: need(self.n.or(self.m), "n", name)? },
            "equitable" => {
                ClassSpec::Equitable { m: need(self.m, "m", name)?, n: need(self.n, "n", name)? }
            }
            "s-inequitable" => ClassSpec::SInequitable {
                m: need(self.m, "m", name)?,
                n: need(self.n, "n", name)?,
                s: need(self.s, "s", name)?,
            },
            "ranking" => ClassSpec::Ranking { m: need(self.m.or(self.n), "m", name)? },
            "password" => ClassSpec::Password {
                m: need(self.m, "m", name)?,
                n: need(self.n, "n", name)?,
                classes: parse_classes(
                    self.classes
                        .as_deref()
                        .ok_or_else(|| Usage("class password requires --classes".into()))?,
                )?,
            },
            other => return Err(Usage(format!("unknown class {other:?}"))),
        };
        Ok(validate_spec(&spec)?.spec)
    }

    fn budget(&self) -> std::result::Result<u64, Usage> {
        if let Some(b) = self.budget {
            return Ok(b);
        }
        match std::env::var(BUDGET_ENV) {
            Ok(v) => v
                .trim()
                .parse()
                .map_err(|_| Usage(format!("{BUDGET_ENV}={v:?} is not an integer"))),
            Err(_) => Ok(DEFAULT_BUDGET),
        }
    }

    fn json(&self) -> bool {
        self.format == OutputFormat::Json
    }
}

struct Outcome {
    code: i32,
    text: String,
    json: Value,
}

/// Runs the CLI on `args` (including the program name), writing results to
/// `out` and diagnostics to `err`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 { out.write_all(rendered.as_bytes()) } else { err.write_all(rendered.as_bytes()) };
            return code;
        }
    };
    match dispatch(&cli.command) {
        Ok((outcome, json)) => {
            let body = if json {
                let mut s = serde_json::to_string_pretty(&outcome.json).expect("json values serialize");
                s.push('\n');
                s
            } else {
                outcome.text
            };
            if out.write_all(body.as_bytes()).is_err() {
                return 2;
            }
            outcome.code
        }
        Err(Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn dispatch(command: &Command) -> std::result::Result<(Outcome, bool), Usage> {
    let (common, outcome) = match command {
        Command::Generate(c) => (c, generate(c)?),
        Command::Verify { common, cycle } => (common, verify(common, cycle)?),
        Command::Count(c) => (c, count(c)?),
        Command::Enumerate(c) => (c, enumerate(c)?),
        Command::Diagnose(c) => (c, diagnose_cmd(c)?),
        Command::Witness { common, witness } => (common, witness_cmd(common, witness)?),
        Command::ExportDot(c) => (c, export_dot(c)?),
    };
    Ok((outcome, common.json()))
}

fn envelope(command: &str, spec: &ClassSpec, payload: Value) -> Value {
    let mut obj = json!({ "command": command, "spec": spec });
    if let (Value::Object(map), Value::Object(extra)) = (&mut obj, payload) {
        map.extend(extra);
    }
    obj
}

fn report_text(spec: &ClassSpec, r: &ExistenceReport) -> String {
    let mut s = format!(
        "class: {spec}\nvertices: {}\nedges: {}\nbalanced: {}\n",
        r.vertex_count, r.edge_count, r.balanced
    );
    for u in r.unbalanced.iter().take(10) {
        s.push_str(&format!(
            "  unbalanced {} in={} out={}\n",
            u.vertex.render(spec.alphabet()),
            u.in_degree,
            u.out_degree
        ));
    }
    s.push_str(&format!(
        "scc_count: {}\nlargest_scc_fraction: {}/{}\n",
        r.scc_count, r.largest_scc_fraction.numerator, r.largest_scc_fraction.denominator
    ));
    if let Some(c) = r.forced_cycle_count {
        s.push_str(&format!("forced_cycle_count: {c}\n"));
    }
    s.push_str(&format!("exists: {}\nreason: {}\n", r.exists, r.reason));
    s
}

fn write_out(path: &Option<PathBuf>, contents: &str) -> std::result::Result<(), Usage> {
    if let Some(p) = path {
        fs::write(p, contents)?;
    }
    Ok(())
}

fn generate(c: &CommonArgs) -> std::result::Result<Outcome, Usage> {
    let spec = c.spec()?;
    let g = build_digraph(&spec, c.budget()?)?;
    let report = diagnose(&g);
    if !report.exists {
        return Ok(Outcome {
            code: 1,
            text: report_text(&spec, &report),
            json: envelope("generate", &spec, json!({ "exists": false, "report": report })),
        });
    }
    let circuit = eulerian_circuit(&g)?;
    let cycle = read_ucycle(&g, &circuit);
    let n = spec.alphabet();
    let file = render_cycle(&cycle.canonical(), n);
    write_out(&c.out, &file)?;
    let text = match &c.out {
        Some(p) => format!("wrote {}-letter cycle to {}\n", cycle.len(), p.display()),
        None => file,
    };
    Ok(Outcome {
        code: 0,
        text,
        json: envelope(
            "generate",
            &spec,
            json!({
                "exists": true,
                "length": cycle.len(),
                "cycle": cycle.render_canonical(),
                "circuit_order": cycle.render(),
            }),
        ),
    })
}

fn verification_text(spec: &ClassSpec, r: &VerificationReport) -> String {
    let verdict = if r.passed() { "pass" } else { "fail" };
    let mut s = format!(
        "{verdict}\nclass: {spec}\ncycle_length: {}\nclass_size: {}\nlength_ok: {}\nwindows_all_members: {}\nwindows_distinct: {}\ncount_matches_class: {}\n",
        r.cycle_length, r.class_size, r.length_ok, r.windows_all_members, r.windows_distinct, r.count_matches_class
    );
    if let Some(f) = &r.first_failure {
        s.push_str(&format!("first_failure: {}\n", serde_json::to_string(f).expect("serializable")));
    }
    s
}

fn verify(c: &CommonArgs, cycle: &PathBuf) -> std::result::Result<Outcome, Usage> {
    let spec = c.spec()?;
    let text = fs::read_to_string(cycle)
        .map_err(|e| Usage(format!("cannot read {}: {e}", cycle.display())))?;
    let letters = parse_cycle(&text, spec.alphabet())?;
    let report = verify_ucycle(&spec, &letters, c.budget()?)?;
    Ok(Outcome {
        code: if report.passed() { 0 } else { 1 },
        text: verification_text(&spec, &report),
        json: envelope("verify", &spec, json!({ "pass": report.passed(), "report": report })),
    })
}

fn count(c: &CommonArgs) -> std::result::Result<Outcome, Usage> {
    let spec = c.spec()?;
    let report = count_report(&spec, c.budget()?)?;
    let closed = report.closed_form.as_ref().map(|v| v.to_string());
    let text = format!(
        "class: {spec}\nclosed_form: {}\nbrute_force: {}\nconsistent: {}\n",
        closed.as_deref().unwrap_or("unavailable"),
        report.brute_force.map(|v| v.to_string()).unwrap_or_else(|| "skipped (budget)".into()),
        report.consistent()
    );
    Ok(Outcome {
        code: if report.consistent() { 0 } else { 1 },
        text,
        json: envelope(
            "count",
            &spec,
            json!({
                "closed_form": closed,
                "brute_force": report.brute_force,
                "consistent": report.consistent(),
            }),
        ),
    })
}

fn enumerate(c: &CommonArgs) -> std::result::Result<Outcome, Usage> {
    let spec = c.spec()?;
    let words = enumerate_class(&spec, c.budget()?)?;
    let n = spec.alphabet();
    let rendered: Vec<String> = words.iter().map(|w| w.render(n)).collect();
    let mut listing = rendered.join("\n");
    if !listing.is_empty() {
        listing.push('\n');
    }
    write_out(&c.out, &listing)?;
    let text = match &c.out {
        Some(p) => format!("wrote {} words to {}\n", words.len(), p.display()),
        None => listing,
    };
    Ok(Outcome {
        code: 0,
        text,
        json: envelope("enumerate", &spec, json!({ "count": words.len(), "words": rendered })),
    })
}

fn diagnose_cmd(c: &CommonArgs) -> std::result::Result<Outcome, Usage> {
    let norm = validate_spec(&c.spec()?)?;
    let g = build_digraph(&norm.spec, c.budget()?)?;
    let report = diagnose(&g);
    let mut text = report_text(&norm.spec, &report);
    let expectation = serde_json::to_value(norm.expectation).expect("serializable");
    text.push_str(&format!(
        "expectation: {} ({})\n",
        expectation.as_str().unwrap_or_default(),
        norm.note
    ));
    Ok(Outcome {
        code: if report.exists { 0 } else { 1 },
        text,
        json: envelope(
            "diagnose",
            &norm.spec,
            json!({ "report": report, "expectation": expectation, "note": norm.note }),
        ),
    })
}

fn parse_word(s: &str) -> std::result::Result<Word, Usage> {
    Ok(Word::parse(s)?)
}

fn letter_arg(v: Option<Letter>, flag: &str) -> std::result::Result<Letter, Usage> {
    v.ok_or_else(|| Usage(format!("this witness kind requires --{flag}")))
}

fn witness_cmd(c: &CommonArgs, w: &WitnessArgs) -> std::result::Result<Outcome, Usage> {
    let spec = c.spec()?;
    let from = parse_word(&w.from)?;
    let path: Option<WitnessPath> = match w.kind {
        WitnessKind::Lag => Some(lag_cycle(&spec, &from, letter_arg(w.placeholder, "placeholder")?)?),
        WitnessKind::StatusSwap => Some(status_swap_path(
            &spec,
            &from,
            letter_arg(w.super_letter, "super")?,
            letter_arg(w.normal_letter, "normal")?,
        )?),
        WitnessKind::PositionSwap => {
            let i = w.i.ok_or_else(|| Usage("position-swap requires --i".into()))?;
            let j = w.j.ok_or_else(|| Usage("position-swap requires --j".into()))?;
            Some(position_swap_path(&spec, &from, i, j)?)
        }
        WitnessKind::Collapse => Some(ranking_collapse_path(&spec, &from)?),
        WitnessKind::Expand => {
            // path from the all-ones vertex to `from`
            Some(reverse_path(&ranking_collapse_path(&spec, &from.reversed())?))
        }
        WitnessKind::Bfs => {
            let to = parse_word(
                w.to.as_deref().ok_or_else(|| Usage("bfs requires --to".into()))?,
            )?;
            let g = build_digraph(&spec, c.budget()?)?;
            bfs_path(&g, &from, &to)?
        }
    };

    let Some(path) = path else {
        return Ok(Outcome {
            code: 1,
            text: "unreachable\n".into(),
            json: envelope("witness", &spec, json!({ "reachable": false })),
        });
    };
    let check = validate_path(&spec, &path);
    let listing = path.to_text();
    write_out(&c.out, &listing)?;
    let mut text = match &c.out {
        Some(p) => format!("wrote {}-step path to {}\n", path.transitions(), p.display()),
        None => listing,
    };
    if !check.valid {
        text.push_str(&format!(
            "invalid: {}\n",
            serde_json::to_string(&check.first_bad).expect("serializable")
        ));
    }
    let n = spec.alphabet();
    Ok(Outcome {
        code: if check.valid { 0 } else { 1 },
        text,
        json: envelope(
            "witness",
            &spec,
            json!({
                "reachable": true,
                "valid": check.valid,
                "first_bad": check.first_bad,
                "transitions": path.transitions(),
                "path": path.vertices.iter().map(|v| v.render(n)).collect::<Vec<_>>(),
            }),
        ),
    })
}

fn export_dot(c: &CommonArgs) -> std::result::Result<Outcome, Usage> {
    let spec = c.spec()?;
    let g = build_digraph(&spec, c.budget()?)?;
    let dot = g.to_dot();
    write_out(&c.out, &dot)?;
    let text = match &c.out {
        Some(p) => format!("wrote DOT for {} vertices to {}\n", g.vertex_count(), p.display()),
        None => dot.clone(),
    };
    Ok(Outcome {
        code: 0,
        text,
        json: envelope(
            "export-dot",
            &spec,
            json!({ "vertices": g.vertex_count(), "edges": g.edge_count(), "dot": dot }),
        ),
    })
}
