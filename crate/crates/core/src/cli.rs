//! Command-line front end. Everything except process exit lives here so the
//! commands can be driven from tests.

use clap::{Args, Parser, Subcommand};

use crate::alt_tamari::{build_alt_tamari, refines, step_stats, DeltaSpec, IncrementFunction};
use crate::bijection::{compose, decompose, transport, Decomposition, MarkedPath};
use crate::census::{census, classify, CountsTable};
use crate::dyck::{enumerate_paths, DyckPath};
use crate::error::Error;
use crate::series::SeriesOracle;
use crate::tree::enumerate_trees;
use crate::verify;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_FAILURE: i32 = 2;

pub const DEFAULT_HASSE_CAP: usize = 7;

#[derive(Debug, Parser)]
#[command(name = "alt-tamari", version, about = "Exact computations on alt-Tamari posets of Dyck paths")]
pub struct Cli {
    /// Emit JSON.
    #[arg(long, global = true)]
    pub json: bool,
    /// Emit CSV.
    #[arg(long, global = true)]
    pub csv: bool,
    /// Emit Graphviz DOT (hasse only).
    #[arg(long, global = true)]
    pub dot: bool,
    /// Seed for sampled increment functions (decimal or 0x-prefixed hex).
    #[arg(long, global = true, default_value = "0xA117", value_parser = parse_seed)]
    pub seed: u64,
    /// Worker threads; defaults to the number of cores.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Count linear intervals by height and compare with the closed form.
    Count {
        #[arg(long)]
        n: usize,
        /// Bitstring, `tamari` or `dyck`; repeat for several.
        #[arg(long = "delta", default_value = "tamari")]
        deltas: Vec<DeltaSpec>,
    },
    /// Run the property sweep for every size up to `--n-max`.
    Verify {
        #[arg(long)]
        n_max: usize,
        /// Restrict to these properties (comma separated or repeated).
        #[arg(long, value_delimiter = ',')]
        only: Vec<String>,
    },
    /// Hasse diagram of one poset.
    Hasse {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "tamari")]
        delta: DeltaSpec,
    },
    /// Coefficients of a generating series, one per line.
    Series {
        /// Linear intervals of height k.
        #[arg(long, conflicts_with_all = ["tree", "marked", "phi"])]
        k: Option<usize>,
        /// Binary trees, `A = 1 + tA²`.
        #[arg(long, conflicts_with_all = ["marked", "phi"])]
        tree: bool,
        /// Trees with a marked node, `tA'`.
        #[arg(long, conflicts_with = "phi")]
        marked: bool,
        /// `φ_k(B)` for the given k.
        #[arg(long)]
        phi: Option<usize>,
        #[arg(long, default_value_t = crate::series::DEFAULT_ORDER)]
        order: usize,
    },
    /// Decompose, compose or transport linear intervals.
    Biject {
        #[command(subcommand)]
        action: BijectCommand,
    },
    /// Carry a linear interval from one alt-Tamari poset to another.
    Transport(TransportArgs),
    /// Check that every relation for `--upper` also holds for `--lower`.
    Refine {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        lower: DeltaSpec,
        #[arg(long)]
        upper: DeltaSpec,
    },
    /// List Dyck paths, with their step statistics when a δ is given.
    Paths {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        delta: Option<DeltaSpec>,
    },
    /// List binary trees with their paths.
    Trees {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum BijectCommand {
    Decompose {
        #[arg(long)]
        delta: DeltaSpec,
        #[arg(long)]
        bottom: DyckPath,
        #[arg(long)]
        top: DyckPath,
    },
    Compose {
        #[arg(long)]
        delta: DeltaSpec,
        /// Marked path such as "u d*".
        #[arg(long)]
        marked: MarkedPath,
        /// One per part, in order; `-` is the empty path.
        #[arg(long = "part", required = true, value_parser = parse_part, allow_hyphen_values = true)]
        parts: Vec<DyckPath>,
    },
    Transport(TransportArgs),
}

#[derive(Debug, Args)]
pub struct TransportArgs {
    #[arg(long)]
    pub from: DeltaSpec,
    #[arg(long)]
    pub to: DeltaSpec,
    #[arg(long)]
    pub bottom: DyckPath,
    #[arg(long)]
    pub top: DyckPath,
}

fn parse_seed(s: &str) -> Result<u64, String> {
    let parsed = match s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
        Some(hex) => u64::from_str_radix(hex, 16),
        None => s.parse(),
    };
    parsed.map_err(|e| format!("bad seed {s:?}: {e}"))
}

fn parse_part(s: &str) -> Result<DyckPath, Error> {
    if s == "-" {
        Ok(DyckPath::empty())
    } else {
        s.parse()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Table,
    Json,
    Csv,
    Dot,
}

/// What a run printed and how it should exit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: EXIT_OK, stdout, stderr: String::new() }
    }

    fn usage(msg: impl Into<String>) -> Self {
        Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: msg.into() }
    }
}

/// Library errors caused by bad input exit 1; internal inconsistencies exit 2.
pub fn exit_code(error: &Error) -> i32 {
    match error {
        Error::ClassificationMismatch { .. }
        | Error::RotationGraphNotReduced { .. }
        | Error::BadDecomposition { .. }
        | Error::CycleDetected => EXIT_FAILURE,
        _ => EXIT_USAGE,
    }
}

/// Parse `args` (program name first) and run.
pub fn run_from<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                Outcome::usage(text)
            } else {
                Outcome::ok(text)
            }
        }
    }
}

pub fn run(cli: &Cli) -> Outcome {
    let format = match (cli.json, cli.csv, cli.dot) {
        (false, false, false) => Format::Table,
        (true, false, false) => Format::Json,
        (false, true, false) => Format::Csv,
        (false, false, true) => Format::Dot,
        _ => return Outcome::usage("at most one of --json, --csv, --dot\n"),
    };
    if format == Format::Dot && !matches!(cli.command, Command::Hasse { .. }) {
        return Outcome::usage("--dot only applies to hasse\n");
    }
    let threads = match cli.jobs {
        Some(0) => return Outcome::usage("--jobs must be positive\n"),
        Some(j) => j,
        None => 0,
    };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
        Ok(pool) => pool,
        Err(e) => return Outcome { code: EXIT_FAILURE, stdout: String::new(), stderr: format!("{e}\n") },
    };
    pool.install(|| match dispatch(cli, format) {
        Ok(outcome) => outcome,
        Err(e) => Outcome { code: exit_code(&e), stdout: String::new(), stderr: format!("error: {e}\n") },
    })
}

fn dispatch(cli: &Cli, format: Format) -> Result<Outcome, Error> {
    match &cli.command {
        Command::Count { n, deltas } => cmd_count(*n, deltas, format),
        Command::Verify { n_max, only } => cmd_verify(*n_max, only, cli.seed, format),
        Command::Hasse { n, delta } => cmd_hasse(*n, delta, format),
        Command::Series { k, tree, marked, phi, order } => cmd_series(*k, *tree, *marked, *phi, *order, format),
        Command::Biject { action } => match action {
            BijectCommand::Decompose { delta, bottom, top } => cmd_decompose(delta, bottom, top, format),
            BijectCommand::Compose { delta, marked, parts } => cmd_compose(delta, marked, parts, format),
            BijectCommand::Transport(args) => cmd_transport(args, format),
        },
        Command::Transport(args) => cmd_transport(args, format),
        Command::Refine { n, lower, upper } => cmd_refine(*n, lower, upper, format),
        Command::Paths { n, delta } => cmd_paths(*n, delta.as_ref(), format),
        Command::Trees { n } => cmd_trees(*n, format),
    }
}

/// Left-aligned columns separated by two spaces.
fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    let mut line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, &w)| format!("{c:<w$}")).collect();
        out.push_str(padded.join("  ").trim_end());
        out.push('\n');
    };
    line(header.to_vec());
    for row in rows {
        line(row.iter().map(String::as_str).collect());
    }
    out
}

fn csv(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = header.join(",");
    out.push('\n');
    for row in rows {
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

fn json(value: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("json values serialize");
    s.push('\n');
    s
}

pub fn cmd_count(n: usize, deltas: &[DeltaSpec], format: Format) -> Result<Outcome, Error> {
    let tables: Vec<CountsTable> = deltas
        .iter()
        .map(|d| d.resolve(n).and_then(|delta| census(&delta)))
        .collect::<Result<_, _>>()?;
    let all_match = tables.iter().all(CountsTable::matches_closed_form);
    let stdout = match format {
        Format::Json => json(&serde_json::Value::Array(tables.iter().flat_map(|t| t.to_json().as_array().cloned().unwrap_or_default()).collect())),
        Format::Csv => {
            let mut out = String::new();
            for (i, t) in tables.iter().enumerate() {
                let text = t.to_csv();
                out.push_str(if i == 0 { &text } else { text.split_once('\n').map_or("", |x| x.1) });
            }
            out
        }
        _ => {
            let rows: Vec<Vec<String>> = tables
                .iter()
                .flat_map(CountsTable::rows)
                .map(|r| {
                    let flag = if r.matches { "yes" } else { "NO" };
                    vec![r.n.to_string(), r.delta, r.height.to_string(), r.count.to_string(), r.closed_form.to_string(), flag.into()]
                })
                .collect();
            table(&["n", "delta", "height", "count", "closed_form", "match"], &rows)
        }
    };
    let code = if all_match { EXIT_OK } else { EXIT_FAILURE };
    let stderr = if all_match { String::new() } else { "census differs from the closed form\n".into() };
    Ok(Outcome { code, stdout, stderr })
}

pub fn cmd_verify(n_max: usize, only: &[String], seed: u64, format: Format) -> Result<Outcome, Error> {
    let checks = verify::run(n_max, only, seed)?;
    let passed = checks.iter().all(|c| c.passed);
    let stdout = match format {
        Format::Json => json(&serde_json::to_value(&checks).expect("checks serialize")),
        Format::Csv => {
            let rows: Vec<Vec<String>> = checks
                .iter()
                .map(|c| {
                    let n = c.n.map(|n| n.to_string()).unwrap_or_default();
                    vec![c.property.into(), n, c.passed.to_string(), format!("\"{}\"", c.detail.replace('"', "\"\""))]
                })
                .collect();
            csv(&["property", "n", "passed", "detail"], &rows)
        }
        _ => checks.iter().map(|c| c.line() + "\n").collect(),
    };
    let code = if passed { EXIT_OK } else { EXIT_FAILURE };
    Ok(Outcome { code, stdout, stderr: String::new() })
}

/// Largest `n` drawn by `hasse`; `ALT_TAMARI_MAX_N` overrides it.
pub fn hasse_cap() -> usize {
    crate::env_cap().unwrap_or(DEFAULT_HASSE_CAP)
}

pub fn cmd_hasse(n: usize, delta: &DeltaSpec, format: Format) -> Result<Outcome, Error> {
    let cap = hasse_cap();
    if n > cap {
        return Err(Error::SizeTooLarge { size: n, cap });
    }
    let delta = delta.resolve(n)?;
    let poset = build_alt_tamari(&delta)?;
    let stdout = match format {
        Format::Json => json(&poset.to_json()),
        Format::Csv => {
            let rows: Vec<Vec<String>> = poset
                .covers()
                .iter()
                .map(|&(a, b)| vec![poset.element(a).to_string(), poset.element(b).to_string()])
                .collect();
            csv(&["bottom", "top"], &rows)
        }
        _ => poset.to_dot(&format!("tam_{delta}")),
    };
    Ok(Outcome::ok(stdout))
}

pub fn cmd_series(
    k: Option<usize>,
    tree: bool,
    marked: bool,
    phi: Option<usize>,
    order: usize,
    format: Format,
) -> Result<Outcome, Error> {
    let oracle = SeriesOracle::new(order);
    let (name, series) = if tree {
        ("tree".to_string(), oracle.tree_series().clone())
    } else if marked {
        ("marked".to_string(), crate::series::marked_series(order))
    } else if let Some(j) = phi {
        (format!("phi_{j}"), oracle.phi(j).compose(oracle.b())?)
    } else {
        let k = k.unwrap_or(0);
        (format!("S_{k}"), oracle.s_series(k))
    };
    let stdout = match format {
        Format::Json => {
            let coeffs: Vec<String> = series.coeffs().iter().map(ToString::to_string).collect();
            json(&serde_json::json!({ "series": name, "order": series.order(), "coefficients": coeffs }))
        }
        Format::Csv => {
            let rows: Vec<Vec<String>> =
                series.coeffs().iter().enumerate().map(|(i, c)| vec![i.to_string(), c.to_string()]).collect();
            csv(&["degree", "coefficient"], &rows)
        }
        _ => series.to_string(),
    };
    Ok(Outcome::ok(stdout))
}

fn interval_delta(spec: &DeltaSpec, bottom: &DyckPath) -> Result<IncrementFunction, Error> {
    spec.resolve(bottom.size())
}

pub fn cmd_decompose(delta: &DeltaSpec, bottom: &DyckPath, top: &DyckPath, format: Format) -> Result<Outcome, Error> {
    let delta = interval_delta(delta, bottom)?;
    let (_, dec) = decompose(&delta, bottom, top)?;
    Ok(Outcome::ok(render_decomposition(&dec, format)))
}

fn render_decomposition(dec: &Decomposition, format: Format) -> String {
    match format {
        Format::Table | Format::Json => json(&dec.to_json()),
        _ => {
            let parts: Vec<String> = dec.parts.iter().map(ToString::to_string).collect();
            csv(&["kind", "marked", "parts"], &[vec![dec.kind().to_string(), dec.marked.to_string(), parts.join(" ")]])
        }
    }
}

pub fn cmd_compose(delta: &DeltaSpec, marked: &MarkedPath, parts: &[DyckPath], format: Format) -> Result<Outcome, Error> {
    let dec = Decomposition { marked: *marked, parts: parts.to_vec() };
    let delta = delta.resolve(dec.interval_size())?;
    let (bottom, top) = compose(&delta, &dec)?;
    Ok(Outcome::ok(render_pair(&dec.kind().to_string(), &bottom, &top, format)))
}

fn render_pair(kind: &str, bottom: &DyckPath, top: &DyckPath, format: Format) -> String {
    match format {
        Format::Csv => csv(&["kind", "bottom", "top"], &[vec![kind.into(), bottom.to_string(), top.to_string()]]),
        Format::Json => json(&serde_json::json!({ "kind": kind, "bottom": bottom.to_string(), "top": top.to_string() })),
        _ => table(&["kind", "bottom", "top"], &[vec![kind.into(), bottom.to_string(), top.to_string()]]),
    }
}

pub fn cmd_transport(args: &TransportArgs, format: Format) -> Result<Outcome, Error> {
    let from = interval_delta(&args.from, &args.bottom)?;
    let to = interval_delta(&args.to, &args.bottom)?;
    let (bottom, top) = transport(&from, &to, &args.bottom, &args.top)?;
    let kind = classify(&to, &bottom, &top)?;
    Ok(Outcome::ok(render_pair(&kind.to_string(), &bottom, &top, format)))
}

pub fn cmd_refine(n: usize, lower: &DeltaSpec, upper: &DeltaSpec, format: Format) -> Result<Outcome, Error> {
    let (lo, hi) = (lower.resolve(n)?, upper.resolve(n)?);
    let holds = refines(&lo, &hi)?;
    let pointwise = lo.le(&hi);
    let stdout = match format {
        Format::Json => json(&serde_json::json!({
            "n": n, "lower": lo.to_string(), "upper": hi.to_string(), "pointwise_le": pointwise, "refines": holds,
        })),
        Format::Csv => csv(
            &["n", "lower", "upper", "pointwise_le", "refines"],
            &[vec![n.to_string(), lo.to_string(), hi.to_string(), pointwise.to_string(), holds.to_string()]],
        ),
        _ => table(
            &["n", "lower", "upper", "pointwise_le", "refines"],
            &[vec![n.to_string(), lo.to_string(), hi.to_string(), pointwise.to_string(), holds.to_string()]],
        ),
    };
    // for pointwise-comparable inputs a negative answer contradicts the order
    let code = if pointwise && !holds { EXIT_FAILURE } else { EXIT_OK };
    Ok(Outcome { code, stdout, stderr: String::new() })
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

pub fn cmd_paths(n: usize, delta: Option<&DeltaSpec>, format: Format) -> Result<Outcome, Error> {
    let delta = delta.map(|d| d.resolve(n)).transpose()?;
    let paths = enumerate_paths(n)?;
    let mut rows = Vec::with_capacity(paths.len());
    let mut values = Vec::with_capacity(paths.len());
    for (i, p) in paths.iter().enumerate() {
        let mut row = vec![i.to_string(), p.to_string()];
        let mut value = serde_json::json!({ "index": i, "path": p.to_string() });
        if let Some(d) = &delta {
            let stats = step_stats(d, p)?;
            row.push(join(&stats.h));
            row.push(join(&stats.ell));
            value["h"] = serde_json::json!(stats.h);
            value["ell"] = serde_json::json!(stats.ell);
        }
        rows.push(row);
        values.push(value);
    }
    let header: &[&str] = if delta.is_some() { &["index", "path", "h", "ell"] } else { &["index", "path"] };
    let stdout = match format {
        Format::Json => json(&serde_json::Value::Array(values)),
        Format::Csv => csv(header, &rows),
        _ => table(header, &rows),
    };
    Ok(Outcome::ok(stdout))
}

pub fn cmd_trees(n: usize, format: Format) -> Result<Outcome, Error> {
    let trees = enumerate_trees(n)?;
    let rows: Vec<Vec<String>> =
        trees.iter().enumerate().map(|(i, t)| vec![i.to_string(), t.to_string(), t.to_path().to_string()]).collect();
    let stdout = match format {
        Format::Json => {
            let values: Vec<serde_json::Value> =
                rows.iter().map(|r| serde_json::json!({ "index": r[0].parse::<usize>().unwrap_or(0), "tree": r[1], "path": r[2] })).collect();
            json(&serde_json::Value::Array(values))
        }
        Format::Csv => csv(&["index", "tree", "path"], &rows),
        _ => table(&["index", "tree", "path"], &rows),
    };
    Ok(Outcome::ok(stdout))
}
