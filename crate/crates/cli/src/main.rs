mod error;
mod oeis;
mod spec;

use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use rectlab::bijections::{elementary, strong, weak};
use rectlab::gentree::{Realization, Rectangulations, Sequences, Trace, Tree};
use rectlab::invseq::InvSeq;
use rectlab::paths::{phi, phi_inv, DyckPath};
use rectlab::rect::fixtures;
use rectlab::render::{render, Format, Labels, RenderOptions};
use rectlab::series;
use rectlab::universe::{Universe, UniverseConfig, DEFAULT_CAP};
use rectlab::verify::{run_suites, Suite, VerifyConfig, UNIVERSE_CAP};
use rectlab::{Execution, Rect, RectDrawing};
use serde::Deserialize;
use serde_json::json;

use crate::error::{CliError, CliResult};
use crate::spec::{parse_range, ClassSpec};

/// `println!` that reports a closed stdout as an error instead of panicking.
macro_rules! out {
    ($($arg:tt)*) => {
        writeln!(std::io::stdout(), $($arg)*)?
    };
}

#[derive(Parser)]
#[command(name = "rectlab", version, about = "Pattern-avoiding rectangulations: counts, bijections and checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count a class for each n in a range.
    Count {
        /// `weak` or `strong`, optionally `:avoid=td,tu,tr,tl,wm+,wm-`.
        #[arg(long)]
        class: ClassSpec,
        /// `N` or `A..B`.
        #[arg(long, default_value = "1..6")]
        n: String,
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
        /// Largest n enumerated exhaustively.
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
        #[arg(long)]
        json: bool,
    },
    /// List every member of a class.
    List {
        #[arg(long)]
        class: ClassSpec,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = ListFormat::Json)]
        format: ListFormat,
        #[arg(long, default_value_t = UNIVERSE_CAP)]
        cap: usize,
    },
    /// Apply a bijection (or its inverse) to one object.
    Map {
        #[arg(value_enum)]
        bijection: Bijection,
        #[arg(long)]
        inverse: bool,
        /// JSON, a Dyck word, an N/W word or a fixture name; `-` reads stdin.
        #[arg(long, default_value = "-")]
        input: String,
    },
    /// Generating-tree trace of a drawing or sequence, or replay of a trace.
    Trace {
        #[arg(long, value_enum)]
        tree: TreeArg,
        /// Drawing or inversion sequence; `-` reads stdin.
        #[arg(long, conflicts_with = "replay")]
        input: Option<String>,
        /// Trace as JSON, e.g. `[["***"],["*",1]]`.
        #[arg(long)]
        replay: Option<String>,
    },
    /// Draw a rectangulation as SVG or box-drawing text.
    Render {
        #[arg(long, default_value = "-")]
        input: String,
        #[arg(long, default_value = "ascii")]
        format: Format,
        /// none, nwse, swne, senw, nesw or l.
        #[arg(long, default_value = "none")]
        labels: Labels,
        #[arg(long)]
        joints: bool,
        #[arg(long)]
        diagonal: bool,
        #[arg(long, default_value_t = 40)]
        scale: u32,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Power series and growth rates.
    Series {
        #[arg(value_enum)]
        kind: SeriesKind,
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[arg(long, default_value_t = 20)]
        order: usize,
    },
    /// Run acceptance suites; exit 1 if any check fails.
    Verify {
        /// `all`, or comma-separated suite names or numbers.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long)]
        sequential: bool,
        #[arg(long)]
        json: bool,
    },
    /// Compare computed values with an OEIS b-file.
    Oeis {
        id: String,
        /// Compare universe counts of this class instead of the built-in computation.
        #[arg(long)]
        class: Option<ClassSpec>,
        #[arg(long, default_value_t = 100)]
        max_n: usize,
        /// Use the cache only.
        #[arg(long)]
        offline: bool,
        /// Download even when a cached copy exists.
        #[arg(long)]
        refresh: bool,
        /// Defaults to $RECTLAB_CACHE_DIR, then the platform cache directory.
        #[arg(long)]
        cache_dir: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Auto,
    Universe,
    Formula,
}

#[derive(Clone, Copy, ValueEnum)]
enum ListFormat {
    Json,
    Ascii,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum TreeArg {
    T1,
    T2,
}

impl From<TreeArg> for Tree {
    fn from(t: TreeArg) -> Tree {
        match t {
            TreeArg::T1 => Tree::T1,
            TreeArg::T2 => Tree::T2,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SeriesKind {
    Catalan,
    Gk,
    Denominator,
    Growth,
}

#[derive(Clone, Copy, ValueEnum)]
enum Bijection {
    /// Weak td-avoider to nondecreasing sequence.
    Tau,
    /// Weak td-avoider to Dyck path.
    Delta,
    /// Nondecreasing sequence to Dyck path.
    Epsilon,
    /// Any weak drawing to a permutation (forward only).
    Beta,
    /// Weak td-avoider to binary tree.
    Tree,
    /// Strong td-avoider to I(010,101,120,201).
    Tau7,
    /// Strong td-avoider to I(010,110,120,210).
    Tau8,
    /// Strong td-avoider to I(010,100,120,210).
    Tau6,
    /// Strong tu-avoider to I(011,201).
    Sigma,
    /// I(010,101,120,201) to I(011,201) (forward only).
    YanLin,
    /// Rushed Dyck path to strong (tr,tl)-avoider.
    Phi,
    /// Weak (td,tu)-avoider to composition.
    Composition,
    /// (td,tr)-avoider to N/W word.
    NwWord,
}

fn read_arg(s: &str) -> CliResult<String> {
    if s == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf)?;
        Ok(buf.trim().to_string())
    } else {
        Ok(s.trim().to_string())
    }
}

#[derive(Deserialize)]
struct DrawingInput {
    width: u32,
    height: u32,
    rects: Vec<[u32; 4]>,
}

/// A fixture name or `{"width":W,"height":H,"rects":[[x0,y0,x1,y1],...]}` in
/// any rectangle order.
fn parse_drawing(s: &str) -> CliResult<RectDrawing> {
    match s {
        "v2" => return Ok(fixtures::v2()),
        "h2" => return Ok(fixtures::h2()),
        "d3" => return Ok(fixtures::d3()),
        "d3'" | "d3-prime" => return Ok(fixtures::d3_prime()),
        "pinwheel" => return Ok(fixtures::pinwheel()),
        _ => {}
    }
    let raw: DrawingInput = serde_json::from_str(s)?;
    let rects = raw.rects.iter().map(|r| Rect::new(r[0], r[1], r[2], r[3])).collect();
    Ok(RectDrawing::from_tiling(raw.width, raw.height, rects)?)
}

fn parse_seq(s: &str) -> CliResult<InvSeq> {
    Ok(InvSeq::new(serde_json::from_str(s)?)?)
}

fn unquote(s: &str) -> &str {
    s.trim().trim_matches('"')
}

fn parse_path(s: &str) -> CliResult<DyckPath> {
    Ok(unquote(s).parse()?)
}

fn print_json<T: serde::Serialize>(v: &T) -> CliResult<()> {
    out!("{}", serde_json::to_string(v)?);
    Ok(())
}

fn universe_for(cap: usize, exec: Execution) -> Universe {
    Universe::new(UniverseConfig { cap, exec, ..Default::default() })
}

fn count(class: &ClassSpec, range: &str, method: Method, cap: usize, as_json: bool) -> CliResult<()> {
    let (lo, hi) = parse_range(range)?;
    let universe = universe_for(cap, Execution::Parallel);
    let mut rows = Vec::new();
    for n in lo..=hi {
        let (value, how) = match method {
            Method::Universe => (BigUint::from(universe.class(n, class.mode, &class.avoid)?.len()), "universe"),
            Method::Formula => {
                class.formula(n).ok_or_else(|| CliError::Usage(format!("no formula known for {class}")))?
            }
            Method::Auto if n <= cap => (BigUint::from(universe.class(n, class.mode, &class.avoid)?.len()), "universe"),
            Method::Auto => class.formula(n).ok_or(CliError::Core(rectlab::Error::SizeLimit { n, limit: cap }))?,
        };
        rows.push((n, value, how));
    }
    if as_json {
        let v: Vec<_> = rows.iter().map(|(n, c, how)| json!({"n": n, "count": c.to_string(), "method": how})).collect();
        print_json(&json!({"class": class.to_string(), "counts": v}))?;
    } else {
        out!("# {class}");
        for (n, c, how) in rows {
            out!("{n}\t{c}\t{how}");
        }
    }
    Ok(())
}

fn list(class: &ClassSpec, n: usize, format: ListFormat, cap: usize) -> CliResult<()> {
    let members = universe_for(cap, Execution::Parallel).class(n, class.mode, &class.avoid)?;
    for d in &members {
        match format {
            ListFormat::Json => print_json(d)?,
            ListFormat::Text => out!("{d}"),
            ListFormat::Ascii => out!("{}", render(d, &RenderOptions::default())),
        }
    }
    eprintln!("{} members of {class} at n={n}", members.len());
    Ok(())
}

fn forward_only(name: &str) -> CliError {
    CliError::Usage(format!("{name} has no inverse here"))
}

fn map(bijection: Bijection, inverse: bool, input: &str) -> CliResult<()> {
    use Bijection as B;
    let s = read_arg(input)?;
    match (bijection, inverse) {
        (B::Tau, false) => print_json(&weak::tau(&parse_drawing(&s)?)?),
        (B::Tau, true) => print_json(&weak::tau_inv(&parse_seq(&s)?)?),
        (B::Delta, false) => print_json(&weak::delta(&parse_drawing(&s)?)?),
        (B::Delta, true) => print_json(&weak::delta_inv(&parse_path(&s)?)?),
        (B::Epsilon, false) => print_json(&weak::epsilon(&parse_seq(&s)?)?),
        (B::Epsilon, true) => print_json(&weak::epsilon_inv(&parse_path(&s)?)),
        (B::Beta, false) => print_json(&weak::beta(&parse_drawing(&s)?)),
        (B::Tree, false) => print_json(&weak::tree_of(&parse_drawing(&s)?)?),
        (B::Tree, true) => print_json(&weak::rect_of_tree(&serde_json::from_str(&s)?)?),
        (B::Tau7, false) => print_json(&strong::tau7(&parse_drawing(&s)?)?),
        (B::Tau7, true) => print_json(&strong::tau7_inv(&parse_seq(&s)?)?),
        (B::Tau8, false) => print_json(&strong::tau8(&parse_drawing(&s)?)?),
        (B::Tau8, true) => print_json(&strong::tau8_inv(&parse_seq(&s)?)?),
        (B::Tau6, false) => print_json(&strong::tau6(&parse_drawing(&s)?)?),
        (B::Tau6, true) => print_json(&strong::tau6_inv(&parse_seq(&s)?)?),
        (B::Sigma, false) => print_json(&strong::sigma(&parse_drawing(&s)?)?),
        (B::Sigma, true) => print_json(&strong::sigma_inv(&parse_seq(&s)?)?),
        (B::YanLin, false) => print_json(&strong::yan_lin(&parse_seq(&s)?)?),
        (B::Phi, false) => print_json(&phi(&parse_path(&s)?)?),
        (B::Phi, true) => print_json(&phi_inv(&parse_drawing(&s)?)?),
        (B::Composition, false) => print_json(&elementary::composition_of(&parse_drawing(&s)?)?),
        (B::Composition, true) => {
            print_json(&elementary::rect_of_composition(&serde_json::from_str::<Vec<usize>>(&s)?)?)
        }
        (B::NwWord, false) => print_json(&elementary::nw_word(&parse_drawing(&s)?)?),
        (B::NwWord, true) => print_json(&elementary::rect_of_nw_word(unquote(&s))?),
        (B::Beta, true) => Err(forward_only("beta")),
        (B::YanLin, true) => Err(forward_only("yan-lin")),
    }
}

fn trace(tree: Tree, input: Option<&str>, replay: Option<&str>) -> CliResult<()> {
    if let Some(t) = replay {
        let steps: Trace = serde_json::from_str(&read_arg(t)?)?;
        let e = Sequences::replay(tree, &steps)?;
        let d = Rectangulations::replay(tree, &steps)?;
        return print_json(&json!({"sequence": e, "drawing": d}));
    }
    let s = read_arg(input.unwrap_or("-"))?;
    let steps = if s.starts_with('[') {
        Sequences::trace_of(tree, &parse_seq(&s)?)?
    } else {
        Rectangulations::trace_of(tree, &parse_drawing(&s)?)?
    };
    print_json(&steps)
}

fn series_cmd(kind: SeriesKind, k: usize, order: usize) -> CliResult<()> {
    let line = |v: Vec<String>| -> CliResult<()> {
        out!("{}", v.join(", "));
        Ok(())
    };
    match kind {
        SeriesKind::Catalan => line(series::catalan_series(order).iter().map(ToString::to_string).collect())?,
        SeriesKind::Gk => line(series::gk_series(k, order)?.iter().map(ToString::to_string).collect())?,
        SeriesKind::Denominator => line(series::q_poly(k + 1).iter().map(ToString::to_string).collect())?,
        SeriesKind::Growth => {
            out!("{:.12}\t{:.12}", series::growth_rate(k), series::expected_growth_rate(k));
        }
    }
    Ok(())
}

fn verify(suite: &str, max_n: Option<usize>, sequential: bool, as_json: bool) -> CliResult<()> {
    let suites: Vec<Suite> = if suite == "all" {
        Suite::ALL.to_vec()
    } else {
        suite.split(',').map(|s| s.trim().parse()).collect::<Result<_, _>>()?
    };
    let exec = if sequential { Execution::Sequential } else { Execution::Parallel };
    let reports = run_suites(&suites, &VerifyConfig { max_n, exec });
    if as_json {
        let v: Vec<_> = reports
            .iter()
            .map(|r| {
                json!({
                    "id": r.suite.id(), "suite": r.suite.name(), "passed": r.passed(),
                    "checks": r.checks, "failed": r.failure_count, "failures": r.failures,
                    "notes": r.notes, "seconds": r.elapsed.as_secs_f64(),
                })
            })
            .collect();
        print_json(&v)?;
    } else {
        for r in &reports {
            out!("{}", r.line());
            for note in &r.notes {
                out!("        {note}");
            }
            for f in &r.failures {
                out!("        {f}");
            }
        }
    }
    let failed: Vec<&str> = reports.iter().filter(|r| !r.passed()).map(|r| r.suite.name()).collect();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(CliError::CheckFailed(failed.join(", ")))
    }
}

fn oeis_cmd(
    id: &str,
    class: Option<&ClassSpec>,
    max_n: usize,
    offline: bool,
    refresh: bool,
    cache_dir: Option<PathBuf>,
) -> CliResult<()> {
    let id = oeis::normalize_id(id)?;
    let (ours, method) = match class {
        Some(c) => {
            let top = max_n.min(UNIVERSE_CAP);
            let u = universe_for(UNIVERSE_CAP, Execution::Parallel);
            let mut m = std::collections::BTreeMap::new();
            for n in 1..=top {
                m.insert(n as i64, num_bigint::BigInt::from(u.class(n, c.mode, &c.avoid)?.len()));
            }
            (m, "exhaustive universe")
        }
        None => oeis::computed(&id, max_n)?,
    };
    let dir = oeis::cache_dir(cache_dir.as_deref());
    let (reference, source) = oeis::load(&id, &dir, offline, refresh)?;
    match &source {
        oeis::Source::Cache(p) => out!("reference: {id} b-file from cache {}", p.display()),
        oeis::Source::Network(p) => out!("reference: {id} b-file downloaded, cached at {}", p.display()),
        oeis::Source::CacheAfterNetworkError(p, e) => {
            out!("reference: {id} b-file from cache {} (download failed: {e})", p.display())
        }
    }
    let label = class.map_or_else(|| "built-in".to_string(), ToString::to_string);
    out!("computed:  {label} via {method}, {} terms", ours.len());
    let cmp = oeis::compare(&ours, &reference);
    out!("alignment: computed index n matches {id} index n{:+}", cmp.shift);
    out!("overlap:   {} terms", cmp.overlap);
    for (i, v, r) in cmp.mismatches.iter().take(10) {
        let r = r.as_ref().map_or_else(|| "-".to_string(), ToString::to_string);
        out!("mismatch at n={i}: computed {v}, {id} {r}");
    }
    if cmp.agrees() {
        out!("agree");
        Ok(())
    } else {
        Err(CliError::CheckFailed(format!("{id}: {} mismatches over {} terms", cmp.mismatches.len(), cmp.overlap)))
    }
}

fn run(cli: Cli) -> CliResult<()> {
    match cli.command {
        Command::Count { class, n, method, cap, json } => count(&class, &n, method, cap, json),
        Command::List { class, n, format, cap } => list(&class, n, format, cap),
        Command::Map { bijection, inverse, input } => map(bijection, inverse, &input),
        Command::Trace { tree, input, replay } => trace(tree.into(), input.as_deref(), replay.as_deref()),
        Command::Render { input, format, labels, joints, diagonal, scale, output } => {
            let d = parse_drawing(&read_arg(&input)?)?;
            let text = render(&d, &RenderOptions { format, labels, joints, diagonal, scale });
            match output {
                Some(p) => std::fs::write(p, text)?,
                None => write!(std::io::stdout(), "{text}")?,
            }
            Ok(())
        }
        Command::Series { kind, k, order } => series_cmd(kind, k, order),
        Command::Verify { suite, max_n, sequential, json } => verify(&suite, max_n, sequential, json),
        Command::Oeis { id, class, max_n, offline, refresh, cache_dir } => {
            oeis_cmd(&id, class.as_ref(), max_n, offline, refresh, cache_dir)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
