mod report;

use std::fs;
use std::io::{Read, Write};
use std::process::ExitCode;
use std::time::Duration;

use anyhow::Context;
use bhr::construct::{self, catalog, strategies, strategy, Construction, Outcome, Params, Request};
use bhr::oracle::{self, Mode, SearchOptions, Universe};
use bhr::realization::parse_path;
use bhr::{pathexpr, transforms, verify, Error, Kind, LengthList, Realization};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::report::{flags_of, Certificate, Infeasible};

/// Exit statuses. Stable; scripts rely on them.
mod code {
    pub const OK: u8 = 0;
    pub const USAGE: u8 = 1;
    pub const INFEASIBLE: u8 = 2;
    pub const UNSUPPORTED: u8 = 3;
    pub const VERIFICATION: u8 = 4;
    pub const BUDGET: u8 = 5;
}

#[derive(Parser, Debug)]
#[command(
    name = "bhr",
    version,
    about = "Hamiltonian paths of K_v with edge lengths {1^a, 2^b, t^c}",
    after_help = "Exit status: 0 ok, 1 usage, 2 infeasible, 3 unsupported, 4 verification failed, 5 budget exceeded."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a realization of {1^a, 2^b, t^c}.
    Realize(RealizeArgs),
    /// Check a path against a list.
    Verify(VerifyArgs),
    /// Exhaustive search for one list.
    Oracle(OracleArgs),
    /// Compare condition (B) with exhaustive search over every list of one order.
    Scan(ScanArgs),
    /// Expand an arrow expression into vertices.
    Expand(ExpandArgs),
    /// Compress a vertex sequence into an arrow expression.
    Format(FormatArgs),
    /// List the construction families, or instantiate one.
    Catalog(CatalogArgs),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Auto,
    Linear,
    Cyclic,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum KindOnly {
    Linear,
    Cyclic,
}

impl From<KindOnly> for Kind {
    fn from(k: KindOnly) -> Self {
        match k {
            KindOnly::Linear => Kind::Linear,
            KindOnly::Cyclic => Kind::Cyclic,
        }
    }
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum ModeArg {
    First,
    Count,
    All,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum UniverseArg {
    All,
    Triples,
}

#[derive(Args, Debug)]
struct Budget {
    /// Stop a search after this many nodes.
    #[arg(long)]
    max_nodes: Option<u64>,
    /// Stop a search after this many milliseconds.
    #[arg(long)]
    max_time_ms: Option<u64>,
}

impl Budget {
    fn time(&self) -> Option<Duration> {
        self.max_time_ms.map(Duration::from_millis)
    }
}

#[derive(Args, Debug)]
struct RealizeArgs {
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    a: u32,
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    b: u32,
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    c: u32,
    #[arg(long)]
    t: u32,
    #[arg(long, value_enum, default_value_t = KindArg::Auto)]
    kind: KindArg,
    /// Construction route; see `bhr realize --strategy help`.
    #[arg(long, default_value = "auto")]
    strategy: String,
    #[command(flatten)]
    budget: Budget,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long, value_enum, required_unless_present = "input")]
    kind: Option<KindOnly>,
    /// Comma-separated vertices, optionally in brackets.
    #[arg(long, required_unless_present = "input")]
    path: Option<String>,
    /// List literal such as `1^3,2^4,8^3`.
    #[arg(long, required_unless_present = "input")]
    list: Option<String>,
    /// JSON certificate as printed by `realize --json`; `-` reads stdin.
    #[arg(long, conflicts_with_all = ["kind", "path", "list"])]
    input: Option<String>,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct OracleArgs {
    #[arg(long)]
    list: String,
    #[arg(long, value_enum, default_value = "cyclic")]
    kind: KindOnly,
    #[arg(long, value_enum, default_value = "first")]
    mode: ModeArg,
    /// First vertex of a linear path.
    #[arg(long)]
    start: Option<u32>,
    /// Orbits to collect in `all` mode.
    #[arg(long)]
    limit: Option<usize>,
    #[arg(long, default_value_t = 1)]
    threads: usize,
    /// Prune when the unvisited vertices cannot stay connected.
    #[arg(long)]
    connectivity: bool,
    #[command(flatten)]
    budget: Budget,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct ScanArgs {
    #[arg(long)]
    v: u32,
    #[arg(long, value_enum, default_value = "all")]
    universe: UniverseArg,
    /// Third length for `--universe triples`.
    #[arg(long, required_if_eq("universe", "triples"))]
    t: Option<u32>,
    #[arg(long, default_value_t = 1)]
    threads: usize,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct ExpandArgs {
    #[arg(long)]
    expr: String,
    /// Value of `t` for bare arrows.
    #[arg(long)]
    t: Option<u32>,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct FormatArgs {
    #[arg(long)]
    path: String,
    #[arg(long)]
    t: Option<u32>,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct CatalogArgs {
    /// Family id to instantiate, e.g. `c{1,2,4^(4k+6)}`.
    #[arg(long, requires = "params")]
    id: Option<String>,
    /// Parameter values, e.g. `t=4,k=0`.
    #[arg(long)]
    params: Option<String>,
    #[arg(long)]
    json: bool,
}

/// A command result: what to print and the status to exit with.
struct Done {
    status: u8,
    json: serde_json::Value,
    human: String,
}

impl Done {
    fn ok(json: impl Serialize, human: String) -> anyhow::Result<Self> {
        Self::with(code::OK, json, human)
    }

    fn with(status: u8, json: impl Serialize, human: String) -> anyhow::Result<Self> {
        Ok(Self {
            status,
            json: serde_json::to_value(json)?,
            human,
        })
    }
}

fn status_of(e: &anyhow::Error) -> u8 {
    match e.downcast_ref::<Error>() {
        Some(Error::Unsupported(_)) => code::UNSUPPORTED,
        Some(Error::Verification(_)) => code::VERIFICATION,
        Some(Error::BudgetExceeded(_)) => code::BUDGET,
        _ => code::USAGE,
    }
}

fn realize(args: &RealizeArgs) -> anyhow::Result<Done> {
    if args.strategy == "help" {
        let lines: Vec<String> = strategies()
            .iter()
            .map(|s| format!("{:<8} {}", s.name(), s.description()))
            .collect();
        let names: Vec<_> = strategies().iter().map(|s| s.name()).collect();
        return Done::ok(names, lines.join("\n"));
    }
    let mut req = Request::new(args.a, args.b, args.c, args.t);
    req.max_nodes = args.budget.max_nodes;
    req.max_time = args.budget.time();
    let built = match strategy(&args.strategy)?.construct(&req)? {
        Outcome::Realized(c) => c,
        Outcome::Infeasible(w) => {
            let r = Infeasible::new(req.list(), w);
            let human = r.human();
            return Done::with(code::INFEASIBLE, r, human);
        }
    };
    let built = match args.kind {
        KindArg::Auto => built,
        KindArg::Linear => built.as_kind(Kind::Linear)?,
        KindArg::Cyclic => to_cyclic(built)?,
    };
    let report = verify(&built.realization);
    if !report.ok {
        return Err(Error::Verification(report.summary()).into());
    }
    let cert = Certificate::new(&built);
    let human = cert.human();
    Done::ok(cert, human)
}

fn to_cyclic(c: Construction) -> anyhow::Result<Construction> {
    if c.realization.kind() == Kind::Cyclic {
        return Ok(c);
    }
    let r = transforms::promote_to_cyclic(&c.realization).map_err(|e| match e {
        Error::Precondition(m) => Error::Unsupported(m),
        other => other,
    })?;
    let mut provenance = c.provenance;
    provenance.push("promote_to_cyclic".into());
    Ok(Construction {
        realization: r,
        provenance,
    })
}

fn read_input(src: &str) -> anyhow::Result<String> {
    if src == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        fs::read_to_string(src).with_context(|| format!("cannot read {src}"))
    }
}

fn verify_cmd(args: &VerifyArgs) -> anyhow::Result<Done> {
    let (r, claimed_flags) = match &args.input {
        Some(src) => {
            let cert: Certificate = serde_json::from_str(&read_input(src)?)
                .map_err(|e| Error::InvalidArgument(format!("bad certificate: {e}")))?;
            if cert.v != cert.list.order() {
                return Err(Error::InvalidArgument(format!(
                    "certificate says v={} but its list has order {}",
                    cert.v,
                    cert.list.order()
                ))
                .into());
            }
            (cert.realization(), cert.flags)
        }
        None => {
            let kind = args.kind.expect("required by clap").into();
            let path = parse_path(args.path.as_deref().expect("required by clap"))?;
            let list: LengthList = args.list.as_deref().expect("required by clap").parse()?;
            (Realization::claim(kind, path, list), None)
        }
    };
    let report = verify(&r);
    let mut problems = Vec::new();
    if !report.ok {
        problems.push(report.summary());
    }
    let measured_flags = if report.ok { flags_of(&r) } else { None };
    if let Some(claimed) = claimed_flags {
        if report.ok && Some(claimed) != measured_flags {
            problems.push(format!("claimed flags {claimed:?} but measured {measured_flags:?}"));
        }
    }
    let ok = problems.is_empty();
    let human = if ok { "ok".to_string() } else { problems.join("\n") };
    let json = json!({ "ok": ok, "report": report, "flags": measured_flags, "problems": problems });
    Done::with(if ok { code::OK } else { code::VERIFICATION }, json, human)
}

fn oracle_cmd(args: &OracleArgs) -> anyhow::Result<Done> {
    let list: LengthList = args.list.parse()?;
    let mode = match args.mode {
        ModeArg::First => Mode::First,
        ModeArg::Count => Mode::Count,
        ModeArg::All => Mode::All,
    };
    let mut opts = SearchOptions::new(args.kind.into(), mode);
    opts.start = args.start;
    opts.limit = args.limit;
    opts.threads = args.threads;
    opts.connectivity = args.connectivity;
    opts.max_nodes = args.budget.max_nodes;
    opts.max_time = args.budget.time();
    let report = oracle::search(&list, &opts)?;
    let t = list.max_length();
    let human = match &report.outcome {
        oracle::Outcome::Found { path } => {
            format!("path: [{}]\nvertices: {path:?}", pathexpr::format(path, t))
        }
        oracle::Outcome::NotFound => format!("no {} realization of {{{list}}}", opts.kind),
        oracle::Outcome::Count { orbits, raw } => format!("{orbits} up to symmetry ({raw} paths)"),
        oracle::Outcome::All { paths, orbits, truncated } => {
            let mut lines: Vec<String> = paths.iter().map(|p| format!("{p:?}")).collect();
            lines.push(format!(
                "{} paths in {orbits} orbits{}",
                paths.len(),
                if *truncated { " (truncated)" } else { "" }
            ));
            lines.join("\n")
        }
    };
    let status = if report.exists() { code::OK } else { code::INFEASIBLE };
    let json = json!({ "list": list, "kind": opts.kind, "search": report });
    Done::with(status, json, format!("{human}\n{} nodes", report.nodes))
}

fn scan_cmd(args: &ScanArgs) -> anyhow::Result<Done> {
    let universe = match args.universe {
        UniverseArg::All => Universe::AllLists,
        UniverseArg::Triples => Universe::Triples {
            t: args.t.expect("required by clap"),
        },
    };
    let mut opts = SearchOptions::new(Kind::Cyclic, Mode::First);
    opts.threads = args.threads;
    let report = oracle::scan_conjecture(args.v, universe, &opts)?;
    let mut lines = vec![report.summary()];
    for e in report.discrepancies() {
        lines.push(format!(
            "  {{{}}}: condition (B) {}, search {}",
            e.list,
            if e.condition_b { "holds" } else { "fails" },
            if e.realizable { "finds a path" } else { "finds none" }
        ));
    }
    let status = if report.discrepancies().next().is_none() {
        code::OK
    } else {
        code::VERIFICATION
    };
    Done::with(status, &report, lines.join("\n"))
}

fn expand_cmd(args: &ExpandArgs) -> anyhow::Result<Done> {
    let path = pathexpr::expand(&pathexpr::parse(&args.expr, args.t)?);
    let human = path.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
    Done::ok(json!({ "path": path }), human)
}

fn format_cmd(args: &FormatArgs) -> anyhow::Result<Done> {
    let path = parse_path(&args.path)?;
    let expr = pathexpr::format(&path, args.t);
    Done::ok(json!({ "expr": expr }), expr)
}

fn catalog_cmd(args: &CatalogArgs) -> anyhow::Result<Done> {
    let Some(id) = &args.id else {
        let index = construct::index();
        let human: Vec<String> = index
            .iter()
            .map(|e| format!("{:<40} {:<8} {:?}  {}", e.id, e.kind, e.role, e.description))
            .collect();
        return Done::ok(index, human.join("\n"));
    };
    let family = catalog().get(id)?;
    let params: Params = args.params.as_deref().expect("required by clap").parse()?;
    let built = Construction {
        realization: family.instantiate(&params)?,
        provenance: vec![format!("family {id} at {params}")],
    };
    let cert = Certificate::new(&built);
    let human = cert.human();
    Done::ok(cert, human)
}

fn run(cli: &Cli) -> (anyhow::Result<Done>, bool) {
    match &cli.command {
        Command::Realize(a) => (realize(a), a.json),
        Command::Verify(a) => (verify_cmd(a), a.json),
        Command::Oracle(a) => (oracle_cmd(a), a.json),
        Command::Scan(a) => (scan_cmd(a), a.json),
        Command::Expand(a) => (expand_cmd(a), a.json),
        Command::Format(a) => (format_cmd(a), a.json),
        Command::Catalog(a) => (catalog_cmd(a), a.json),
    }
}

/// Print to stdout; a closed pipe (`bhr catalog | head`) is not an error.
fn emit(text: &str) {
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { code::USAGE } else { code::OK });
        }
    };
    let (result, json) = run(&cli);
    match result {
        Ok(done) => {
            if json {
                emit(&serde_json::to_string_pretty(&done.json).expect("serializable"));
            } else {
                emit(&done.human);
            }
            ExitCode::from(done.status)
        }
        Err(e) => {
            let status = status_of(&e);
            if json {
                let err = json!({ "error": { "status": status, "message": format!("{e:#}") } });
                emit(&serde_json::to_string_pretty(&err).expect("serializable"));
            } else {
                eprintln!("error: {e:#}");
            }
            ExitCode::from(status)
        }
    }
}
