//! Library half of the `renner` command; [`run`] maps an argument vector to
//! an exit status and the text that would be printed.

mod dot;
mod verify;

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use renner::folding::{fold_rook, unfold_preimages, Direction, PartialMatrix};
use renner::order::{bcr_le, build_poset, Comparator, HasseDiagram};
use renner::partitions::{parse_partition, partition_to_rook, rook_to_partition};
use renner::rook::parse_one_line;
use renner::symplectic::{enum_family, Family, FamilySpec};
use renner::{Error, Rook};
use serde_json::{json, Value};

pub use dot::dot_export;
pub use verify::Check;

/// Exit statuses.
pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// What one invocation produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn fail(code: i32, stderr: String) -> Self {
        Self {
            code,
            stdout: String::new(),
            stderr,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "renner",
    version,
    about = "Rook monoids, symplectic Renner monoids and their orders"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List the members of a family.
    Enum(FamilyArgs),
    /// Count the members of a family.
    Count(FamilyArgs),
    /// Decide x <= y in the Bruhat-Chevalley-Renner order.
    Order(OrderArgs),
    /// Hasse diagram of a family.
    Hasse(FamilyArgs),
    /// Fold a symplectic rook of even size in half both ways.
    Fold(RookArgs),
    /// All symplectic Borel rooks folding onto a rook of size l.
    Unfold(RookArgs),
    /// Convert between nilpotent rooks and set partitions.
    Partition(RookArgs),
    /// Run a property check and print its audit table.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Count,
    Oneline,
    Json,
    Dot,
    Report,
}

#[derive(Debug, Args)]
struct Common {
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Write the output to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct FamilyArgs {
    #[arg(long)]
    n: Option<usize>,
    /// Symplectic rank; implies n = 2l.
    #[arg(long)]
    l: Option<usize>,
    #[arg(long, default_value = "rook")]
    family: Family,
    #[arg(long)]
    rank: Option<usize>,
    #[command(flatten)]
    common: Common,
}

#[derive(Debug, Args)]
struct OrderArgs {
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    x: String,
    #[arg(long)]
    y: String,
    #[command(flatten)]
    common: Common,
}

#[derive(Debug, Args)]
struct RookArgs {
    #[arg(long)]
    n: Option<usize>,
    /// A rook "(x1,...,xn)", or for `partition` also a partition "13|2".
    #[arg(long)]
    x: String,
    #[command(flatten)]
    common: Common,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long, value_enum, default_value = "all")]
    check: Check,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    l: Option<usize>,
    #[command(flatten)]
    common: Common,
}

/// Failure while running a subcommand.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Mismatch(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Internal(msg) => {
                Failure::Mismatch(format!("internal invariant violated: {msg}"))
            }
            other => Failure::Usage(other.to_string()),
        }
    }
}

/// Runs one command line; `argv[0]` is the program name.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    Outcome::ok(text)
                }
                _ => Outcome::fail(EXIT_USAGE, text),
            };
        }
    };
    let out_path = match &cli.command {
        Command::Enum(a) | Command::Count(a) | Command::Hasse(a) => a.common.out.clone(),
        Command::Order(a) => a.common.out.clone(),
        Command::Fold(a) | Command::Unfold(a) | Command::Partition(a) => a.common.out.clone(),
        Command::Verify(a) => a.common.out.clone(),
    };
    let (code, text) = match dispatch(cli.command) {
        Ok(text) => (EXIT_OK, text),
        Err(Failure::Usage(msg)) => return Outcome::fail(EXIT_USAGE, format!("error: {msg}\n")),
        Err(Failure::Mismatch(text)) => (EXIT_MISMATCH, text),
    };
    match out_path {
        Some(path) => match std::fs::write(&path, &text) {
            Ok(()) => Outcome {
                code,
                stdout: String::new(),
                stderr: String::new(),
            },
            Err(e) => Outcome::fail(
                EXIT_USAGE,
                format!("error: cannot write {}: {e}\n", path.display()),
            ),
        },
        None => Outcome {
            code,
            stdout: text,
            stderr: String::new(),
        },
    }
}

/// [`run`] inside a dedicated pool of `workers` threads.
#[cfg(feature = "parallel")]
pub fn run_with_workers<I, T>(argv: I, workers: usize) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let argv: Vec<std::ffi::OsString> = argv.into_iter().map(Into::into).collect();
    match rayon::ThreadPoolBuilder::new().num_threads(workers).build() {
        Ok(pool) => pool.install(|| run(argv)),
        Err(e) => Outcome::fail(
            EXIT_USAGE,
            format!("error: cannot start {workers} workers: {e}\n"),
        ),
    }
}

/// Without the `parallel` feature there is only one worker.
#[cfg(not(feature = "parallel"))]
pub fn run_with_workers<I, T>(argv: I, _workers: usize) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    run(argv)
}

fn dispatch(command: Command) -> Result<String, Failure> {
    match command {
        Command::Enum(a) => cmd_enum(&a),
        Command::Count(a) => cmd_count(&a),
        Command::Order(a) => cmd_order(&a),
        Command::Hasse(a) => cmd_hasse(&a),
        Command::Fold(a) => cmd_fold(&a),
        Command::Unfold(a) => cmd_unfold(&a),
        Command::Partition(a) => cmd_partition(&a),
        Command::Verify(a) => verify::run_checks(
            a.check,
            a.n,
            a.l,
            format_or(&a.common, Format::Report, &[Format::Report, Format::Json])?,
        ),
    }
}

fn format_or(common: &Common, default: Format, allowed: &[Format]) -> Result<Format, Failure> {
    let f = common.format.unwrap_or(default);
    if allowed.contains(&f) {
        Ok(f)
    } else {
        let names: Vec<&str> = allowed.iter().map(|f| format_name(*f)).collect();
        Err(Failure::Usage(format!(
            "--format {} is not available here; use one of {}",
            format_name(f),
            names.join(", ")
        )))
    }
}

fn format_name(f: Format) -> &'static str {
    match f {
        Format::Count => "count",
        Format::Oneline => "oneline",
        Format::Json => "json",
        Format::Dot => "dot",
        Format::Report => "report",
    }
}

fn family_spec(a: &FamilyArgs) -> Result<FamilySpec, Failure> {
    let n = size_from(a.n, a.l)?;
    Ok(FamilySpec::new(n, a.family, a.rank)?)
}

fn size_from(n: Option<usize>, l: Option<usize>) -> Result<usize, Failure> {
    match (n, l) {
        (Some(n), None) => Ok(n),
        (None, Some(l)) => Ok(2 * l),
        (Some(n), Some(l)) if n == 2 * l => Ok(n),
        (Some(n), Some(l)) => Err(Failure::Usage(format!("--n {n} contradicts --l {l}"))),
        (None, None) => Err(Failure::Usage("one of --n or --l is required".into())),
    }
}

fn parse_rook(text: &str, n: Option<usize>) -> Result<Rook, Failure> {
    let x: Rook = text.parse()?;
    match n {
        Some(n) => Ok(parse_one_line(text, n)?),
        None => Ok(x),
    }
}

fn lines<T: ToString>(items: &[T]) -> String {
    items.iter().fold(String::new(), |mut s, x| {
        let _ = writeln!(s, "{}", x.to_string());
        s
    })
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

fn cmd_enum(a: &FamilyArgs) -> Result<String, Failure> {
    let format = format_or(
        &a.common,
        Format::Oneline,
        &[Format::Oneline, Format::Count, Format::Json],
    )?;
    let spec = family_spec(a)?;
    let xs = enum_family(&spec)?;
    Ok(match format {
        Format::Count => format!("{}\n", xs.len()),
        Format::Json => pretty(&json!({
            "family": spec.family.name(),
            "parameters": spec_parameters(&spec),
            "count": xs.len(),
            "elements": xs.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
        })),
        _ => lines(&xs),
    })
}

fn spec_parameters(spec: &FamilySpec) -> Value {
    match spec.rank {
        Some(k) => json!({ "n": spec.n, "rank": k }),
        None => json!({ "n": spec.n }),
    }
}

fn cmd_count(a: &FamilyArgs) -> Result<String, Failure> {
    let format = format_or(&a.common, Format::Count, &[Format::Count, Format::Json])?;
    let spec = family_spec(a)?;
    let count = enum_family(&spec)?.len();
    Ok(match format {
        Format::Json => pretty(&json!({
            "family": spec.family.name(),
            "parameters": spec_parameters(&spec),
            "count": count,
        })),
        _ => format!("{count}\n"),
    })
}

fn cmd_order(a: &OrderArgs) -> Result<String, Failure> {
    let format = format_or(&a.common, Format::Oneline, &[Format::Oneline, Format::Json])?;
    let x = parse_rook(&a.x, a.n)?;
    let y = parse_rook(&a.y, a.n.or(Some(x.n())))?;
    let le = bcr_le(&x, &y)?;
    Ok(match format {
        Format::Json => pretty(&json!({
            "x": x.to_string(),
            "y": y.to_string(),
            "le": le,
        })),
        _ => format!("{le}\n"),
    })
}

fn cmd_hasse(a: &FamilyArgs) -> Result<String, Failure> {
    let format = format_or(
        &a.common,
        Format::Dot,
        &[Format::Dot, Format::Json, Format::Count, Format::Report],
    )?;
    let spec = family_spec(a)?;
    let xs = enum_family(&spec)?;
    let h = build_poset(&xs, Comparator::OneLine)?;
    let name = match spec.rank {
        Some(k) => format!("{}-{}-rank{}", spec.family.name(), spec.n, k),
        None => format!("{}-{}", spec.family.name(), spec.n),
    };
    Ok(match format {
        Format::Json => pretty(&hasse_json(&spec, &h)),
        Format::Count => format!("{} {}\n", h.len(), h.covers.len()),
        Format::Report => hasse_report(&name, &h),
        _ => dot_export(&h, &name),
    })
}

fn hasse_json(spec: &FamilySpec, h: &HasseDiagram) -> Value {
    let label = |i: &usize| h.elements[*i].to_string();
    json!({
        "family": spec.family.name(),
        "parameters": spec_parameters(spec),
        "nodes": h.elements.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
        "covers": h.covers.iter().map(|(a, b)| [label(a), label(b)]).collect::<Vec<_>>(),
        "rank_of": h.rank_of,
        "minimals": h.minimals.iter().map(label).collect::<Vec<_>>(),
        "maximals": h.maximals.iter().map(label).collect::<Vec<_>>(),
        "graded": h.graded,
    })
}

fn hasse_report(name: &str, h: &HasseDiagram) -> String {
    let show = |ids: &[usize]| {
        ids.iter()
            .map(|&i| h.elements[i].to_string())
            .collect::<Vec<_>>()
            .join(" ")
    };
    let height = h.rank_of.iter().copied().max().unwrap_or(0);
    format!(
        "poset {name}\nnodes {}\ncovers {}\ngraded {}\nheight {height}\nminimals {}\nmaximals {}\n",
        h.len(),
        h.covers.len(),
        h.graded,
        show(&h.minimals),
        show(&h.maximals),
    )
}

fn cmd_fold(a: &RookArgs) -> Result<String, Failure> {
    let format = format_or(
        &a.common,
        Format::Oneline,
        &[Format::Oneline, Format::Report, Format::Json],
    )?;
    let x = parse_rook(&a.x, a.n)?;
    let m = PartialMatrix::from_rook(&x);
    Ok(match format {
        Format::Oneline => format!("{}\n", fold_rook(&x)?),
        _ => {
            let tb = m.fold(Direction::TopBottom)?;
            let lr = m.fold(Direction::LeftRight)?;
            let both = m.fold(Direction::Both)?;
            if format == Format::Json {
                pretty(&json!({
                    "x": x.to_string(),
                    "top_bottom": tb.to_string(),
                    "left_right": lr.to_string(),
                    "both": both.to_rook()?.to_string(),
                }))
            } else {
                format!(
                    "x          {x}\ntop-bottom {tb}\nleft-right {lr}\nboth       {}\n",
                    both.to_rook()?
                )
            }
        }
    })
}

fn cmd_unfold(a: &RookArgs) -> Result<String, Failure> {
    let format = format_or(
        &a.common,
        Format::Oneline,
        &[Format::Oneline, Format::Count, Format::Json],
    )?;
    let x = parse_rook(&a.x, a.n)?;
    if 2 * x.n() > renner::symplectic::DESK_BOUND {
        return Err(Error::Resource {
            what: "unfolded size 2l",
            size: 2 * x.n(),
            bound: renner::symplectic::DESK_BOUND,
        }
        .into());
    }
    let pre = unfold_preimages(&x)?;
    Ok(match format {
        Format::Count => format!("{}\n", pre.len()),
        Format::Json => pretty(&json!({
            "x": x.to_string(),
            "count": pre.len(),
            "preimages": pre.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
        })),
        _ => lines(&pre),
    })
}

fn cmd_partition(a: &RookArgs) -> Result<String, Failure> {
    let format = format_or(&a.common, Format::Oneline, &[Format::Oneline, Format::Json])?;
    let text = a.x.trim();
    let (rook, partition) = if text.starts_with('(') {
        let x = parse_rook(text, a.n)?;
        let p = rook_to_partition(&x)?;
        (x, p)
    } else {
        let p = parse_partition(text)?;
        if let Some(n) = a.n {
            if n != p.n() {
                return Err(Failure::Usage(format!(
                    "partition is of {{1..{}}}, not of {{1..{n}}}",
                    p.n()
                )));
            }
        }
        (partition_to_rook(&p)?, p)
    };
    let forward = text.starts_with('(');
    Ok(match format {
        Format::Json => pretty(&json!({
            "rook": rook.to_string(),
            "partition": partition.to_string(),
            "blocks": partition.block_count(),
            "rank": rook.rank(),
        })),
        _ if forward => format!("{partition}\n"),
        _ => format!("{rook}\n"),
    })
}
