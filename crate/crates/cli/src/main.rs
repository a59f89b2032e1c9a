//! `nichols`: graded dimensions, verdicts and table checks from the command line.
//!
//! Exit codes: 0 success, 1 verification failed, 2 usage, 3 parse, 4 budget
//! exceeded (a partial report is still written), 5 i/o.

mod cache;
mod fail;
mod input;
mod rack;
mod verify;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use nichols_core::json::{braiding_to_json, report_to_json, solution_to_json};
use nichols_core::nichols::{finiteness_scan, Budget, ScanReport};
use nichols_core::suzuki::{classify, Family};
use serde_json::{json, Value};

use crate::fail::{CliResult, Failure};
use crate::input::{family_braiding, family_solution, Input, Source};

#[derive(Parser, Debug)]
#[command(name = "nichols", version, about = "Exact Nichols algebra dimensions and family checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone, Copy, Default)]
struct Output {
    /// JSON output (default).
    #[arg(long, global = true, conflicts_with = "table")]
    json: bool,
    /// Aligned text table.
    #[arg(long, global = true)]
    table: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Graded dimensions of the Nichols algebra up to `--cap`.
    Dims {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value_t = 8)]
        cap: usize,
        #[arg(long, default_value_t = 600)]
        budget_secs: u64,
        /// Report cache directory; no caching without it.
        #[arg(long, env = "NICHOLS_CACHE")]
        cache_dir: Option<PathBuf>,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        output: Output,
    },
    /// Dimension verdict of a family, read off its parameters.
    Classify {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        output: Output,
    },
    /// Re-check case tables, dihedral relabellings, or braid/cocycle identities.
    Verify {
        #[arg(value_enum)]
        target: verify::Target,
        #[arg(long, value_enum, default_value_t = verify::Sweep::All)]
        sweep: verify::Sweep,
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        output: Output,
    },
    /// Rack and set-solution utilities.
    Rack {
        #[command(subcommand)]
        cmd: rack::RackCmd,
        #[command(flatten)]
        output: Output,
    },
}

/// Prints a line; a closed pipe (`| head`) is not an error.
fn say(text: &str) -> CliResult<()> {
    let mut out = std::io::stdout().lock();
    match writeln!(out, "{}", text.trim_end()) {
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
        r => Ok(r?),
    }
}

fn emit(text: &str, out: Option<&PathBuf>) -> CliResult<()> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| Failure::Io(format!("{}: {e}", path.display()))),
        None => say(text),
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("json values serialise")
}

fn dims_table(r: &ScanReport) -> String {
    let mut rows = vec![["degree", "dim", "space", "candidates", "blocks", "largest", "ms"].map(String::from).to_vec()];
    for (n, d) in r.dims.iter().enumerate() {
        let st = r.degrees.iter().find(|s| s.degree == n);
        let mut row = vec![n.to_string(), d.to_string()];
        match st {
            Some(s) => row.extend([
                s.space_dim.to_string(),
                s.candidates.to_string(),
                s.blocks.to_string(),
                s.largest_block.to_string(),
                s.millis.to_string(),
            ]),
            None => row.extend(std::iter::repeat_n(String::new(), 5)),
        }
        rows.push(row);
    }
    let mut out = align(&rows);
    match (r.total, r.top_degree) {
        (Some(t), Some(top)) => {
            let next = r.next_rank.map_or("not computed".to_string(), |x| x.to_string());
            out.push_str(&format!("finite: total {t}, top degree {top}, next rank {next}\n"))
        }
        _ => out.push_str(&format!(
            "undetermined at degree {}{}\n",
            r.dims.len() - 1,
            if r.budget_exceeded { " (budget exceeded)" } else { "" }
        )),
    }
    out.push_str(&format!("hilbert: {}\n", r.hilbert));
    out
}

fn align(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(|r| r.len()).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| rows.iter().filter_map(|r| r.get(c)).map(|s| s.len()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for r in rows {
        let line: Vec<String> = r.iter().enumerate().map(|(c, s)| format!("{s:>w$}", w = widths[c])).collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    }
    out
}

fn key_value_table(v: &Value) -> String {
    let rows: Vec<Vec<String>> = v
        .as_object()
        .map(|m| {
            m.iter()
                .filter(|(k, _)| k.as_str() != "braiding" && k.as_str() != "solution")
                .map(|(k, x)| vec![k.clone(), x.to_string()])
                .collect()
        })
        .unwrap_or_default();
    align(&rows)
}

fn run_dims(
    source: &Source,
    cap: usize,
    budget_secs: u64,
    cache_dir: Option<&PathBuf>,
    out: Option<&PathBuf>,
    output: Output,
) -> CliResult<i32> {
    if cap < 2 {
        return Err(Failure::Usage("--cap must be at least 2".into()));
    }
    let input = source.resolve()?;
    let canonical = input.canonical();
    let cache = cache_dir.map(|d| cache::Cache::open(d)).transpose()?;
    let key = cache::key(&canonical, cap);

    if let Some(hit) = cache.as_ref().and_then(|c| c.get(&key)) {
        if output.table {
            let v: Value = serde_json::from_str(&hit).map_err(|e| Failure::Parse(format!("cache entry {key}: {e}")))?;
            emit(&key_value_table(&v), out)?;
        } else {
            emit(&hit, out)?;
        }
        return Ok(fail::OK);
    }

    let c = input.braiding()?;
    let report = finiteness_scan(&c, cap, Budget::seconds(budget_secs))?;
    let mut v = report_to_json(&report);
    let obj = v.as_object_mut().expect("report is an object");
    obj.insert("cap".into(), json!(cap));
    obj.insert("input".into(), canonical);
    obj.insert("braiding".into(), braiding_to_json(&c));
    if let Input::Family(f) = &input {
        let fv = serde_json::to_value(classify(f)?).expect("verdict serialises");
        obj.insert("classification".into(), fv);
    }
    let body = pretty(&v);
    if let (Some(cache), false) = (&cache, report.budget_exceeded) {
        cache.put(&key, &body)?;
    }
    emit(&if output.table { dims_table(&report) } else { body }, out)?;
    Ok(if report.budget_exceeded { fail::BUDGET } else { fail::OK })
}

fn run_classify(source: &Source, output: Output) -> CliResult<i32> {
    let Input::Family(f) = source.resolve()? else {
        return Err(Failure::Usage("classify needs a family descriptor".into()));
    };
    let mut v = serde_json::to_value(classify(&f)?).expect("verdict serialises");
    let obj = v.as_object_mut().expect("verdict is an object");
    match &f {
        Family::L { .. } | Family::I { .. } => {
            obj.insert("solution".into(), solution_to_json(&family_solution(&f)?));
        }
        _ => {
            obj.insert("braiding".into(), braiding_to_json(&family_braiding(&f)?));
        }
    }
    say(&if output.table { key_value_table(&v) } else { pretty(&v) })?;
    Ok(fail::OK)
}

fn run(cli: Cli) -> CliResult<i32> {
    match &cli.command {
        Command::Dims { source, cap, budget_secs, cache_dir, out, output } => {
            run_dims(source, *cap, *budget_secs, cache_dir.as_ref(), out.as_ref(), *output)
        }
        Command::Classify { source, output } => run_classify(source, *output),
        Command::Verify { target, sweep, source, output } => {
            let report = verify::run(*target, source, *sweep)?;
            say(&if output.table { report.to_table() } else { pretty(&report.to_json()) })?;
            Ok(if report.passed() { fail::OK } else { fail::VERIFY_FAILED })
        }
        Command::Rack { cmd, output } => {
            let v = rack::run(cmd)?;
            let text = match (output.table, v.get("table").and_then(Value::as_array)) {
                (true, Some(rows)) => {
                    let rows: Vec<Vec<String>> = rows
                        .iter()
                        .map(|r| r.as_array().into_iter().flatten().map(|x| x.to_string()).collect())
                        .collect();
                    align(&rows)
                }
                (true, None) => key_value_table(&v),
                (false, _) => pretty(&v),
            };
            say(&text)?;
            Ok(fail::OK)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("nichols: {e}");
            ExitCode::from(e.code() as u8)
        }
    }
}
