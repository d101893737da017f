//! matchcover: generation, exact m3 solving, verification, structural
//! analysis, and batch ingestion for cubic graphs and their ring families.
//!
//! Exit codes: 0 success (and all checks passed), 1 verification failure,
//! 2 usage or input error.

mod report;

use clap::{Args, Parser, Subcommand, ValueEnum};
use matchcover::generators::{
    build_family_assembly, params_for_fraction, FamilyKind, FamilySpec, FractionTarget,
};
use matchcover::graph6::{decode_graph6, decode_graph6_lines, encode_graph6};
use matchcover::m3::{
    m3, m3_bruteforce, M3Input, M3Options, M3Result, MethodChoice, DEFAULT_MATCHING_CAP,
};
use matchcover::matching::count_perfect_matchings;
use matchcover::multipole::{Edge, Graph};
use matchcover::structure::{
    cyclic_connectivity_oracle, cyclic_edge_connectivity, girth, is_bridgeless,
    ConnectivityResult, ORACLE_VERTEX_LIMIT,
};
use matchcover::text::{emit_multipole_text, parse_multipole_text};
use matchcover::verify::{check, default_suite, CheckId, CheckParams, CheckReport};
use report::{fraction_fields, Report};
use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

#[derive(Parser)]
#[command(
    name = "matchcover",
    version,
    about = "Exact perfect-matching cover analysis for cubic graphs"
)]
struct Cli {
    /// Write report records to FILE instead of stdout
    #[arg(long, global = true, value_name = "FILE")]
    report: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a ring family graph
    Gen(GenArgs),
    /// Compute m3 of a graph or family exactly
    M3(M3Args),
    /// Run verification checks
    Verify(VerifyArgs),
    /// Report structural metrics of a graph
    Analyze(AnalyzeArgs),
    /// Compute m3 for every graph in a graph6 list
    Ingest(IngestArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    Cc2,
    Cc4,
}

impl From<FamilyArg> for FamilyKind {
    fn from(arg: FamilyArg) -> FamilyKind {
        match arg {
            FamilyArg::Cc2 => FamilyKind::Cc2,
            FamilyArg::Cc4 => FamilyKind::Cc4,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Graph6,
    Multipole,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Auto,
    Brute,
    Dp,
}

#[derive(Args)]
struct FamilyFlags {
    /// Family flavour: cc2 (rings of Petersen/K4 poles) or cc4 (rings of
    /// Blanuša-based (2,2)-poles)
    #[arg(long, value_enum)]
    family: Option<FamilyArg>,
    /// Target fraction numerator (with --q, picks a and b)
    #[arg(long)]
    p: Option<u64>,
    /// Target fraction denominator
    #[arg(long)]
    q: Option<u64>,
    /// Number of uncolorable blocks
    #[arg(long)]
    a: Option<u64>,
    /// Number of colorable diluting blocks
    #[arg(long)]
    b: Option<u64>,
    /// Block arrangement, a string over {A,B}
    #[arg(long)]
    order: Option<String>,
    /// Repeat the arrangement this many times
    #[arg(long, default_value_t = 1)]
    scale: u64,
}

impl FamilyFlags {
    fn to_spec(&self) -> Result<Option<FamilySpec>, String> {
        let Some(family) = self.family else {
            return Ok(None);
        };
        let kind: FamilyKind = family.into();
        let (a, b) = match (self.p, self.q, self.a, self.b) {
            (Some(p), Some(q), None, None) => {
                params_for_fraction(kind, FractionTarget { p, q }).map_err(|e| e.to_string())?
            }
            (None, None, Some(a), b) => (a, b.unwrap_or(0)),
            (None, None, None, None) => {
                return Err("give either --p/--q or --a/--b".to_string())
            }
            _ => return Err("use --p/--q or --a/--b, not both".to_string()),
        };
        let order = self
            .order
            .clone()
            .unwrap_or_else(|| "A".repeat(a as usize) + &"B".repeat(b as usize));
        FamilySpec::with_order(kind, a, b, order, self.scale)
            .map(Some)
            .map_err(|e| e.to_string())
    }
}

#[derive(Args)]
struct GenArgs {
    #[command(flatten)]
    family: FamilyFlags,
    /// Write the graph to FILE instead of embedding it in the report
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = FormatArg::Graph6)]
    format: FormatArg,
}

#[derive(Args)]
struct M3Args {
    /// Input graph file (graph6 or multipole text, sniffed)
    #[arg(long, value_name = "FILE", conflicts_with = "family")]
    input: Option<PathBuf>,
    #[command(flatten)]
    family: FamilyFlags,
    #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
    method: MethodArg,
    /// Run both solvers and require identical values
    #[arg(long)]
    cross_check: bool,
    /// Matching-count ceiling for brute force
    #[arg(long, default_value_t = DEFAULT_MATCHING_CAP)]
    cap: usize,
    /// Omit the witness matchings from the report
    #[arg(long)]
    no_witness: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Run one check by id
    #[arg(long, value_name = "ID", conflicts_with = "all")]
    check: Option<String>,
    /// Check parameters as key=value (a, b, p, q)
    #[arg(long, value_name = "KEY=VALUE", num_args = 1..)]
    params: Vec<String>,
    /// Run the full default suite
    #[arg(long)]
    all: bool,
}

#[derive(Args)]
struct AnalyzeArgs {
    #[arg(long, value_name = "FILE")]
    input: PathBuf,
    /// Report the girth
    #[arg(long)]
    girth: bool,
    /// Report cyclic edge connectivity
    #[arg(long)]
    cyclic_connectivity: bool,
    /// Report 3-edge-colorability
    #[arg(long)]
    colorable: bool,
    /// Report bridgelessness
    #[arg(long)]
    bridgeless: bool,
}

#[derive(Args)]
struct IngestArgs {
    /// graph6 file, one graph per line
    #[arg(long, value_name = "FILE")]
    input: PathBuf,
    /// Flag graphs whose every matching triple leaves at least K edges uncovered
    #[arg(long, value_name = "K")]
    min_uncovered: Option<usize>,
    #[arg(long, default_value_t = DEFAULT_MATCHING_CAP)]
    cap: usize,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let report = match &cli.report {
        Some(path) => match Report::file(path) {
            Ok(report) => report,
            Err(e) => {
                eprintln!("error: cannot open report file: {e}");
                return ExitCode::from(2);
            }
        },
        None => Report::stdout(),
    };
    match run(cli.command, report) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command, mut report: Report) -> Result<ExitCode, String> {
    let started = Instant::now();
    let code = match command {
        Command::Gen(args) => cmd_gen(args, &mut report)?,
        Command::M3(args) => cmd_m3(args, &mut report)?,
        Command::Verify(args) => cmd_verify(args, &mut report)?,
        Command::Analyze(args) => cmd_analyze(args, &mut report)?,
        Command::Ingest(args) => cmd_ingest(args, &mut report)?,
    };
    report.record(
        "done",
        &[
            ("status", if code == 0 { "ok".into() } else { "failed".into() }),
            ("runtime_ms", started.elapsed().as_millis().to_string()),
        ],
    );
    report.finish();
    Ok(ExitCode::from(code))
}

fn spec_fields(spec: &FamilySpec) -> Vec<(&'static str, String)> {
    vec![
        ("family", match spec.kind {
            FamilyKind::Cc2 => "cc2".to_string(),
            FamilyKind::Cc4 => "cc4".to_string(),
        }),
        ("a", spec.a.to_string()),
        ("b", spec.b.to_string()),
        ("order", spec.order.clone()),
        ("scale", spec.scale.to_string()),
    ]
}

fn cmd_gen(args: GenArgs, report: &mut Report) -> Result<u8, String> {
    let spec = args
        .family
        .to_spec()?
        .ok_or_else(|| "gen needs --family".to_string())?;
    let mut fields = vec![("command", "gen".to_string())];
    fields.extend(spec_fields(&spec));
    report.record("run", &fields);

    let assembly = build_family_assembly(&spec).map_err(|e| e.to_string())?;
    let graph = &assembly.graph;
    let (covered, total) = spec.expected_m3();
    let reduced = num_rational::Ratio::new(covered as i64, total as i64);
    report.record(
        "graph",
        &[
            ("vertices", graph.vertex_count().to_string()),
            ("edges", graph.edge_count().to_string()),
            ("predicted_m3", format!("{covered}/{total}")),
            ("reduced", format!("{}/{}", reduced.numer(), reduced.denom())),
        ],
    );

    let name = format!(
        "{}_a{}_b{}_x{}",
        match spec.kind {
            FamilyKind::Cc2 => "cc2",
            FamilyKind::Cc4 => "cc4",
        },
        spec.a,
        spec.b,
        spec.scale
    );
    let payload = match args.format {
        FormatArg::Graph6 => {
            let mut line = encode_graph6(graph).map_err(|e| e.to_string())?;
            line.push('\n');
            line
        }
        FormatArg::Multipole => emit_multipole_text(&name, graph.as_multipole()),
    };
    match &args.out {
        Some(path) => {
            std::fs::write(path, payload).map_err(|e| format!("writing {}: {e}", path.display()))?;
            report.record("output", &[("path", path.display().to_string())]);
        }
        None => {
            if args.format == FormatArg::Graph6 {
                report.record("output", &[("graph6", payload.trim_end().to_string())]);
            } else {
                print!("{payload}");
            }
        }
    }
    Ok(0)
}

fn load_graph(path: &PathBuf) -> Result<Graph, String> {
    let content =
        std::fs::read_to_string(path).map_err(|e| format!("reading {}: {e}", path.display()))?;
    let first = content
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'));
    match first {
        Some(line) if line.starts_with("multipole ") => {
            let (_, m) = parse_multipole_text(&content).map_err(|e| e.to_string())?;
            Graph::from_multipole(m).map_err(|e| format!("not a cubic graph: {e}"))
        }
        Some(line) => decode_graph6(line).map_err(|e| e.to_string()),
        None => Err("input file is empty".to_string()),
    }
}

fn witness_records(report: &mut Report, graph: &Graph, result: &M3Result) {
    for (i, pm) in result.witness.iter().enumerate() {
        let mut edges = String::new();
        for e in pm.edge_set().iter() {
            if let Some(Edge::Link(u, v)) = graph.edge(e) {
                if !edges.is_empty() {
                    edges.push(',');
                }
                let _ = write!(edges, "{u}-{v}");
            }
        }
        report.record(
            "witness",
            &[("matching", (i + 1).to_string()), ("edges", edges)],
        );
    }
}

fn result_fields(result: &M3Result) -> Vec<(&'static str, String)> {
    let mut fields = vec![(
        "method",
        match result.method {
            matchcover::m3::M3Method::BruteForce => "brute".to_string(),
            matchcover::m3::M3Method::RingDp => "dp".to_string(),
        },
    )];
    fields.push(("covered", result.covered.to_string()));
    fields.push(("total", result.total.to_string()));
    fields.extend(fraction_fields(result.covered, result.total));
    fields.push(("uncovered", (result.total - result.covered).to_string()));
    fields
}

fn cmd_m3(args: M3Args, report: &mut Report) -> Result<u8, String> {
    let options = M3Options {
        method: match args.method {
            MethodArg::Auto => MethodChoice::Auto,
            MethodArg::Brute => MethodChoice::Brute,
            MethodArg::Dp => MethodChoice::Dp,
        },
        cap: Some(args.cap),
        cross_check: args.cross_check,
    };
    let spec = args.family.to_spec()?;
    let (graph, outcome, source) = match (&args.input, &spec) {
        (Some(path), None) => {
            let graph = load_graph(path)?;
            let outcome = m3(M3Input::Graph(&graph), &options).map_err(|e| e.to_string())?;
            (graph, outcome, path.display().to_string())
        }
        (None, Some(spec)) => {
            let graph = build_family_assembly(spec)
                .map_err(|e| e.to_string())?
                .graph;
            let outcome = m3(M3Input::Family(spec), &options).map_err(|e| e.to_string())?;
            (graph, outcome, "family".to_string())
        }
        _ => return Err("m3 needs exactly one of --input or --family".to_string()),
    };
    let mut fields = vec![
        ("command", "m3".to_string()),
        ("source", source),
        ("vertices", graph.vertex_count().to_string()),
        ("edges", graph.edge_count().to_string()),
    ];
    if let Some(spec) = &spec {
        fields.extend(spec_fields(spec));
    }
    report.record("run", &fields);
    report.record("result", &result_fields(&outcome.result));
    if let Some(cross) = &outcome.cross {
        let mut fields = result_fields(cross);
        fields.push(("agreement", "exact".to_string()));
        report.record("crosscheck", &fields);
    }
    if !args.no_witness {
        witness_records(report, &graph, &outcome.result);
    }
    Ok(0)
}

fn check_record(report: &mut Report, check_report: &CheckReport) {
    let mut fields = vec![("id".to_string(), check_report.id.to_string())];
    for (key, value) in &check_report.params {
        fields.push((key.clone(), value.to_string()));
    }
    fields.push((
        "verdict".to_string(),
        if check_report.passed() { "pass".to_string() } else { "fail".to_string() },
    ));
    for (key, value) in &check_report.evidence {
        fields.push((key.clone(), value.clone()));
    }
    fields.push(("runtime_ms".to_string(), check_report.runtime.as_millis().to_string()));
    report.record_owned("check", &fields);
}

fn cmd_verify(args: VerifyArgs, report: &mut Report) -> Result<u8, String> {
    let jobs: Vec<(CheckId, CheckParams)> = if args.all {
        report.record("run", &[("command", "verify".into()), ("mode", "all".into())]);
        default_suite()
    } else {
        let id_text = args.check.ok_or_else(|| "verify needs --check ID or --all".to_string())?;
        let id = CheckId::parse(&id_text).map_err(|e| e.to_string())?;
        let params = CheckParams::from_args(&args.params).map_err(|e| e.to_string())?;
        report.record(
            "run",
            &[("command", "verify".into()), ("mode", "single".into()), ("check", id.to_string())],
        );
        vec![(id, params)]
    };
    let mut failed = 0usize;
    let total = jobs.len();
    for (id, params) in jobs {
        let check_report = check(id, &params).map_err(|e| e.to_string())?;
        if !check_report.passed() {
            failed += 1;
        }
        check_record(report, &check_report);
    }
    report.record(
        "summary",
        &[("checks", total.to_string()), ("failed", failed.to_string())],
    );
    Ok(if failed == 0 { 0 } else { 1 })
}

fn cmd_analyze(args: AnalyzeArgs, report: &mut Report) -> Result<u8, String> {
    let graph = load_graph(&args.input)?;
    report.record(
        "run",
        &[
            ("command", "analyze".to_string()),
            ("input", args.input.display().to_string()),
            ("vertices", graph.vertex_count().to_string()),
            ("edges", graph.edge_count().to_string()),
        ],
    );
    let all = !(args.girth || args.cyclic_connectivity || args.colorable || args.bridgeless);
    if args.girth || all {
        let value = girth(graph.as_multipole());
        report.record(
            "metric",
            &[(
                "girth",
                value.map_or("none".to_string(), |g| g.to_string()),
            )],
        );
    }
    if args.cyclic_connectivity || all {
        let (result, method) = if graph.vertex_count() <= ORACLE_VERTEX_LIMIT {
            (cyclic_connectivity_oracle(&graph), "oracle")
        } else {
            (cyclic_edge_connectivity(&graph), "cycle-pair-max-flow")
        };
        match result {
            Ok(ConnectivityResult::Cut { value, cut, .. }) => {
                let edges: Vec<String> = cut
                    .iter()
                    .filter_map(|&e| match graph.edge(e) {
                        Some(Edge::Link(u, v)) => Some(format!("{u}-{v}")),
                        _ => None,
                    })
                    .collect();
                report.record(
                    "metric",
                    &[
                        ("cyclic_connectivity", value.to_string()),
                        ("cut", edges.join(",")),
                        ("method", method.to_string()),
                    ],
                );
            }
            Ok(ConnectivityResult::NoTwoDisjointCycles) => {
                report.record(
                    "metric",
                    &[
                        ("cyclic_connectivity", "no-two-disjoint-cycles".to_string()),
                        ("method", method.to_string()),
                    ],
                );
            }
            Err(e) => return Err(e.to_string()),
        }
    }
    if args.colorable || all {
        let colorable = matchcover::matching::is_3_edge_colorable(graph.as_multipole());
        report.record("metric", &[("colorable", colorable.to_string())]);
    }
    if args.bridgeless || all {
        report.record(
            "metric",
            &[("bridgeless", is_bridgeless(graph.as_multipole()).to_string())],
        );
    }
    Ok(0)
}

fn cmd_ingest(args: IngestArgs, report: &mut Report) -> Result<u8, String> {
    let content = std::fs::read_to_string(&args.input)
        .map_err(|e| format!("reading {}: {e}", args.input.display()))?;
    let mut fields = vec![
        ("command", "ingest".to_string()),
        ("input", args.input.display().to_string()),
        ("cap", args.cap.to_string()),
    ];
    if let Some(k) = args.min_uncovered {
        fields.push(("min_uncovered", k.to_string()));
    }
    report.record("run", &fields);

    let mut graphs = 0usize;
    let mut errors = 0usize;
    let mut flagged = 0usize;
    for (line, decoded) in decode_graph6_lines(&content) {
        match decoded {
            Err(e) => {
                errors += 1;
                report.record(
                    "graph",
                    &[
                        ("line", line.to_string()),
                        ("status", "error".to_string()),
                        ("error", e.to_string()),
                    ],
                );
            }
            Ok(graph) => {
                graphs += 1;
                let matchings = count_perfect_matchings(graph.as_multipole());
                let mut fields = vec![
                    ("line", line.to_string()),
                    ("status", String::new()),
                    ("vertices", graph.vertex_count().to_string()),
                    ("edges", graph.edge_count().to_string()),
                    ("matchings", matchings.to_string()),
                ];
                if matchings > args.cap || matchings == 0 || graph.edge_count() == 0 {
                    fields[1].1 = "skipped".to_string();
                    let reason = if matchings > args.cap {
                        "cap-exceeded"
                    } else if graph.edge_count() == 0 {
                        "empty-graph"
                    } else {
                        "no-perfect-matching"
                    };
                    fields.push(("reason", reason.into()));
                    report.record("graph", &fields);
                    continue;
                }
                let result = match m3_bruteforce(&graph, Some(args.cap)) {
                    Ok(result) => result,
                    Err(e) => {
                        errors += 1;
                        fields[1].1 = "error".to_string();
                        fields.push(("error", e.to_string()));
                        report.record("graph", &fields);
                        continue;
                    }
                };
                fields[1].1 = "ok".to_string();
                for (key, value) in fraction_fields(result.covered, result.total) {
                    fields.push((key, value));
                }
                let uncovered = result.total - result.covered;
                fields.push(("uncovered", uncovered.to_string()));
                let colorable = result.covered == result.total;
                fields.push(("colorable", colorable.to_string()));
                let mut flags = Vec::new();
                if colorable {
                    flags.push("not-a-snark");
                }
                if let Some(k) = args.min_uncovered {
                    if uncovered >= k {
                        flags.push("low-cover");
                    }
                }
                if !flags.is_empty() {
                    flagged += 1;
                    fields.push(("flags", flags.join(",")));
                }
                report.record("graph", &fields);
            }
        }
    }
    report.record(
        "summary",
        &[
            ("graphs", graphs.to_string()),
            ("errors", errors.to_string()),
            ("flagged", flagged.to_string()),
        ],
    );
    Ok(0)
}
