//! Command-line front end.
//!
//! Exit status: 0 on success (conjecture divergences included), 1 when a
//! proved result disagrees with the oracle, 2 on usage errors.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use meshdist::bijection::{map_g, map_g_inverse, LexBijection};
use meshdist::catalog::{self, strong_fixed_point};
use meshdist::equidist::{self, EquidistReport};
use meshdist::formulas::{TheoremId, MAX_ORDER};
use meshdist::oracle::{
    avoiders_lex_cached, brute_distribution_with, CACHE_DIR_ENV, DEFAULT_CEILING, HARD_CEILING,
};
use meshdist::series::DEFAULT_ORDER;
use meshdist::verify::{self, LineStatus, VerifyReport};
use meshdist::{DistributionTable, Error, MeshPattern, OracleConfig, Permutation};

#[derive(Parser)]
#[command(
    name = "meshdist",
    version,
    about = "Occurrence distributions of mesh patterns in permutations"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Distribution table of a pattern, from the oracle or a formula.
    Dist(DistArgs),
    /// OEIS b-file of a table column or of the whole triangle.
    Bfile(BfileArgs),
    /// Formula rows against oracle rows, as JSON lines.
    Verify(VerifyArgs),
    /// The lexicographic avoider map `f` or the occurrence-preserving map `g`.
    Bijection(BijectionArgs),
    /// Equidistribution of pattern groups.
    Equidist(EquidistArgs),
    /// Truncated generating function of a result.
    Series(SeriesArgs),
    /// Avoiders of a pattern in lexicographic order.
    Avoiders(AvoidersArgs),
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Selector {
    /// Catalog number.
    #[arg(long)]
    nr: Option<u32>,
    /// Pattern literal such as `tau=12;R=(0,1)(1,0)`, or `sfp`.
    #[arg(long)]
    pattern: Option<String>,
}

#[derive(Args)]
struct Enumeration {
    /// Worker threads for the oracle.
    #[arg(long, default_value_t = 1)]
    shards: usize,
    /// Raise the oracle ceiling from 9 to 10.
    #[arg(long)]
    unsafe_n_max: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Source {
    Oracle,
    Formula,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Bfile,
}

#[derive(Args)]
#[group(id = "rows", required = true, multiple = false)]
struct Rows {
    /// A single row.
    #[arg(long)]
    n: Option<usize>,
    /// Rows `0..=n_max`.
    #[arg(long)]
    n_max: Option<usize>,
}

#[derive(Args)]
struct BfileLayout {
    /// Column `k` of the table (default 0).
    #[arg(long, conflicts_with = "triangle")]
    column: Option<usize>,
    /// The triangle read by rows.
    #[arg(long)]
    triangle: bool,
    /// First `n` written.
    #[arg(long, default_value_t = 1)]
    offset: usize,
}

#[derive(Args)]
struct DistArgs {
    #[command(flatten)]
    selector: Selector,
    #[command(flatten)]
    rows: Rows,
    #[arg(long, value_enum, default_value_t = Source::Oracle)]
    source: Source,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(flatten)]
    layout: BfileLayout,
    #[command(flatten)]
    enumeration: Enumeration,
}

#[derive(Args)]
struct BfileArgs {
    #[command(flatten)]
    selector: Selector,
    #[arg(long)]
    n_max: usize,
    #[arg(long, value_enum, default_value_t = Source::Oracle)]
    source: Source,
    #[command(flatten)]
    layout: BfileLayout,
    #[command(flatten)]
    enumeration: Enumeration,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(Args)]
struct VerifyArgs {
    /// Every result, conjecture included (the default).
    #[arg(long)]
    all: bool,
    /// A proved result such as `T3.10`; repeatable.
    #[arg(long)]
    theorem: Vec<TheoremId>,
    /// A conjectured result such as `C6.1`; repeatable.
    #[arg(long)]
    conjecture: Vec<TheoremId>,
    #[arg(long, default_value_t = 8)]
    n_max: usize,
    #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
    format: ReportFormat,
    #[command(flatten)]
    enumeration: Enumeration,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MapKind {
    F,
    G,
}

#[derive(Args)]
struct BijectionArgs {
    #[arg(long, value_enum, default_value_t = MapKind::G)]
    map: MapKind,
    /// Source and target catalog numbers.
    #[arg(long, default_value = "48,49", value_parser = parse_pair)]
    nr_pair: (u32, u32),
    /// Input permutation: `132`, `1 3 2` or `(15)(17)(16)9`.
    #[arg(long)]
    perm: String,
    /// Expected length of the input.
    #[arg(long)]
    n: Option<usize>,
    /// Apply the inverse map.
    #[arg(long)]
    inverse: bool,
    /// Directory for cached avoider lists.
    #[arg(long, env = CACHE_DIR_ENV)]
    cache_dir: Option<PathBuf>,
}

#[derive(Args)]
struct EquidistArgs {
    /// Every listed group (the default).
    #[arg(long)]
    all: bool,
    /// Comma-separated catalog numbers; repeatable.
    #[arg(long, value_parser = parse_group)]
    group: Vec<Vec<u32>>,
    #[arg(long, default_value_t = 8)]
    n_max: usize,
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    format: ReportFormat,
    #[command(flatten)]
    enumeration: Enumeration,
}

#[derive(Args)]
struct SeriesArgs {
    #[arg(long)]
    theorem: TheoremId,
    #[arg(long, default_value_t = DEFAULT_ORDER)]
    order: usize,
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    format: ReportFormat,
}

#[derive(Args)]
struct AvoidersArgs {
    #[command(flatten)]
    selector: Selector,
    #[arg(long)]
    n: usize,
    /// Directory for cached avoider lists.
    #[arg(long, env = CACHE_DIR_ENV)]
    cache_dir: Option<PathBuf>,
}

enum Failure {
    Usage(String),
    Proved(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = std::result::Result<String, Failure>;

fn parse_group(s: &str) -> std::result::Result<Vec<u32>, String> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<u32>()
                .map_err(|_| format!("bad catalog number `{t}`"))
        })
        .collect()
}

fn parse_pair(s: &str) -> std::result::Result<(u32, u32), String> {
    match parse_group(s)?.as_slice() {
        [a, b] => Ok((*a, *b)),
        _ => Err(format!("expected two catalog numbers, got `{s}`")),
    }
}

/// A resolved pattern with its catalog identity, if it has one.
struct Resolved {
    pattern: MeshPattern,
    label: String,
    theorem: Option<TheoremId>,
}

fn resolve(sel: &Selector) -> std::result::Result<Resolved, Failure> {
    if let Some(nr) = sel.nr {
        return Ok(Resolved {
            pattern: catalog::pattern(nr)?,
            label: format!("nr={nr}"),
            theorem: TheoremId::for_nr(nr),
        });
    }
    let text = sel.pattern.as_deref().expect("clap requires a selector");
    let pattern = catalog::resolve(text)?;
    if pattern == strong_fixed_point() {
        return Ok(Resolved {
            pattern,
            label: "sfp".into(),
            theorem: Some(TheoremId::T1_1),
        });
    }
    match catalog::catalog()
        .into_iter()
        .find(|e| e.pattern == pattern)
    {
        Some(e) => Ok(Resolved {
            pattern,
            label: format!("nr={}", e.nr),
            theorem: TheoremId::for_nr(e.nr),
        }),
        None => Ok(Resolved {
            label: pattern.to_string(),
            pattern,
            theorem: None,
        }),
    }
}

fn oracle_config(e: &Enumeration) -> OracleConfig {
    let cfg = OracleConfig::default().with_shards(e.shards);
    if e.unsafe_n_max {
        cfg.unsafe_n_max()
    } else {
        cfg
    }
}

fn check_n(n: usize, e: &Enumeration) -> std::result::Result<(), Failure> {
    let cap = if e.unsafe_n_max {
        HARD_CEILING
    } else {
        DEFAULT_CEILING
    };
    if n > cap {
        let hint = if e.unsafe_n_max {
            ""
        } else {
            "; pass --unsafe-n-max to allow 10"
        };
        return Err(Failure::Usage(format!(
            "n = {n} is above the limit {cap}{hint}"
        )));
    }
    Ok(())
}

fn table(
    sel: &Selector,
    n_max: usize,
    source: Source,
    e: &Enumeration,
) -> std::result::Result<DistributionTable, Failure> {
    let r = resolve(sel)?;
    let mut t = match source {
        Source::Oracle => {
            check_n(n_max, e)?;
            brute_distribution_with(&r.pattern, n_max, &oracle_config(e))?
        }
        Source::Formula => {
            let th = r.theorem.ok_or_else(|| {
                Failure::Usage(format!("no formula is implemented for {}", r.label))
            })?;
            if n_max > MAX_ORDER {
                return Err(Failure::Usage(format!(
                    "n = {n_max} is above the formula limit {MAX_ORDER}"
                )));
            }
            if th.is_conjecture() {
                eprintln!("note: {th} is a conjecture");
            }
            th.table(n_max)?
        }
    };
    t.pattern = r.label;
    Ok(t)
}

fn bfile(t: &DistributionTable, layout: &BfileLayout) -> String {
    if layout.triangle {
        t.bfile_triangle(layout.offset, 1)
    } else {
        t.bfile_column(layout.column.unwrap_or(0), layout.offset)
    }
}

fn cmd_dist(a: &DistArgs) -> Outcome {
    let n_max = a.rows.n.or(a.rows.n_max).expect("clap requires rows");
    let mut t = table(&a.selector, n_max, a.source, &a.enumeration)?;
    if let Some(n) = a.rows.n {
        if a.format == Format::Text {
            let mut only = t.clone();
            only.rows = vec![t.rows[n].clone()];
            return Ok(only.to_text());
        }
        t = t.truncated(n);
    }
    Ok(match a.format {
        Format::Text => t.to_text(),
        Format::Json => t.to_json() + "\n",
        Format::Bfile => bfile(&t, &a.layout),
    })
}

fn cmd_bfile(a: &BfileArgs) -> Outcome {
    let t = table(&a.selector, a.n_max, a.source, &a.enumeration)?;
    Ok(bfile(&t, &a.layout))
}

fn cmd_verify(a: &VerifyArgs) -> Outcome {
    check_n(a.n_max, &a.enumeration)?;
    if let Some(t) = a.conjecture.iter().find(|t| !t.is_conjecture()) {
        return Err(Failure::Usage(format!(
            "{t} is not a conjecture; use --theorem"
        )));
    }
    if let Some(t) = a.theorem.iter().find(|t| t.is_conjecture()) {
        return Err(Failure::Usage(format!(
            "{t} is a conjecture; use --conjecture"
        )));
    }
    let mut selected: Vec<TheoremId> = a.theorem.iter().chain(&a.conjecture).copied().collect();
    if a.all || selected.is_empty() {
        selected = TheoremId::all();
    }
    let report = verify::verify(&selected, a.n_max, &oracle_config(&a.enumeration))?;
    let body = match a.format {
        ReportFormat::Json => report.to_json_lines(),
        ReportFormat::Text => verify_text(&report),
    };
    let mismatches = report.mismatches().count();
    eprintln!(
        "{} checks, {mismatches} proved mismatches, {} conjecture divergences",
        report.lines.len(),
        report.divergences().count()
    );
    if mismatches > 0 {
        print!("{body}");
        return Err(Failure::Proved(format!(
            "{mismatches} proved rows disagree with the oracle"
        )));
    }
    Ok(body)
}

fn verify_text(report: &VerifyReport) -> String {
    let mut out = String::new();
    for l in &report.lines {
        let status = match l.status {
            LineStatus::Ok => "OK",
            LineStatus::Mismatch => "MISMATCH",
            LineStatus::ConjectureDivergence => "CONJECTURE-DIVERGENCE",
        };
        out.push_str(&format!("{} {} n={} {status}", l.theorem, l.target, l.n));
        if let (Some(k), Some(f), Some(o)) = (l.k, &l.formula, &l.oracle) {
            let d = l.d.map(|d| format!(" d={d}")).unwrap_or_default();
            out.push_str(&format!(" k={k}{d} formula={f} oracle={o}"));
        }
        out.push('\n');
    }
    out
}

fn render(p: &Permutation, like: &str) -> String {
    if like.contains(|c: char| c.is_whitespace() || c == ',') {
        p.to_string()
    } else {
        p.to_compact_string()
    }
}

fn cmd_bijection(a: &BijectionArgs) -> Outcome {
    let pi: Permutation = a.perm.parse()?;
    if let Some(n) = a.n {
        if n != pi.len() {
            return Err(Failure::Usage(format!(
                "--perm has length {}, not {n}",
                pi.len()
            )));
        }
    }
    let (from, to) = if a.inverse {
        (a.nr_pair.1, a.nr_pair.0)
    } else {
        a.nr_pair
    };
    match a.map {
        MapKind::F => {
            if pi.len() > HARD_CEILING {
                return Err(Error::ResourceLimit {
                    requested: pi.len(),
                    ceiling: HARD_CEILING,
                }
                .into());
            }
            let dir = a.cache_dir.as_deref();
            let lists = (
                avoiders_lex_cached(&catalog::pattern(a.nr_pair.0)?, pi.len(), dir)?,
                avoiders_lex_cached(&catalog::pattern(a.nr_pair.1)?, pi.len(), dir)?,
            );
            let f = LexBijection::from_lists(pi.len(), lists.0, lists.1)?;
            let image = if a.inverse {
                f.invert(&pi)
            } else {
                f.apply(&pi)
            };
            let image = image.ok_or_else(|| {
                Failure::Usage(format!(
                    "{} contains Nr. {from}; --map f takes avoiders only",
                    a.perm
                ))
            })?;
            Ok(render(image, &a.perm) + "\n")
        }
        MapKind::G => {
            if (a.nr_pair.0, a.nr_pair.1) != (48, 49) {
                return Err(Failure::Usage(
                    "--map g is defined for --nr-pair 48,49 only".into(),
                ));
            }
            let p_from = catalog::pattern(from)?;
            if p_from.avoids(&pi) {
                return Err(Failure::Usage(format!(
                    "{} avoids Nr. {from}; avoiders are mapped by --map f",
                    a.perm
                )));
            }
            let sigma = if a.inverse {
                map_g_inverse(&pi)?
            } else {
                map_g(&pi)?
            };
            let k_to = catalog::pattern(to)?.count_occurrences(&sigma);
            Ok(format!(
                "{}\nnr={from} occurrences: {}\nnr={to} occurrences: {k_to}\n",
                render(&sigma, &a.perm),
                p_from.count_occurrences(&pi)
            ))
        }
    }
}

fn cmd_equidist(a: &EquidistArgs) -> Outcome {
    check_n(a.n_max, &a.enumeration)?;
    let cfg = oracle_config(&a.enumeration);
    let reports: Vec<EquidistReport> = if a.all || a.group.is_empty() {
        equidist::check_all(a.n_max, &cfg)?
    } else {
        a.group
            .iter()
            .map(|g| equidist::check_group_with(g, a.n_max, &cfg))
            .collect::<meshdist::Result<_>>()?
    };
    let body = match a.format {
        ReportFormat::Text => equidist::summary_table(&reports),
        ReportFormat::Json => reports.iter().map(|r| r.to_json() + "\n").collect(),
    };
    if let Some(r) = reports.iter().find(|r| r.violates_proof()) {
        print!("{body}");
        return Err(Failure::Proved(format!(
            "proved group {} is not equidistributed",
            r.label()
        )));
    }
    Ok(body)
}

fn cmd_series(a: &SeriesArgs) -> Outcome {
    let s = a.theorem.series(a.order)?.ok_or_else(|| {
        Failure::Usage(format!(
            "{} is not stated as a generating function",
            a.theorem
        ))
    })?;
    Ok(match a.format {
        ReportFormat::Text => format!("{s}\n"),
        ReportFormat::Json => serde_json::to_string(&s).expect("serializable") + "\n",
    })
}

fn cmd_avoiders(a: &AvoidersArgs) -> Outcome {
    let r = resolve(&a.selector)?;
    if a.n > HARD_CEILING {
        return Err(Error::ResourceLimit {
            requested: a.n,
            ceiling: HARD_CEILING,
        }
        .into());
    }
    let list = avoiders_lex_cached(&r.pattern, a.n, a.cache_dir.as_deref())?;
    Ok(list.iter().map(|p| format!("{p}\n")).collect())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.cmd {
        Cmd::Dist(a) => cmd_dist(a),
        Cmd::Bfile(a) => cmd_bfile(a),
        Cmd::Verify(a) => cmd_verify(a),
        Cmd::Bijection(a) => cmd_bijection(a),
        Cmd::Equidist(a) => cmd_equidist(a),
        Cmd::Series(a) => cmd_series(a),
        Cmd::Avoiders(a) => cmd_avoiders(a),
    };
    match outcome {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Proved(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
