//! `homx`: exact H-coloring counts, target classification, edge-min-critical
//! generation and decomposition, and exhaustive extremal verification.
//!
//! Exit status: 0 on success (a refuted conjecture is still a verdict),
//! 2 on parameter or format errors, 3 when an invariant the library
//! guarantees for all valid inputs fails (a bound or characterisation
//! falsified at desk scale — the most important signal this tool can emit).

mod args;

use std::cmp::Ordering;
use std::io::{Read, Write};
use std::sync::atomic::{AtomicBool, Ordering as AtomicOrdering};

use clap::{Parser, Subcommand, ValueEnum};

use homx_core::classify::{classify, Delta2Regime};
use homx_core::count::{
    hom_brute, hom_complete, hom_complete_bipartite, hom_cycle, hom_path, hom_star, z_weighted,
};
use homx_core::critical::decompose_delta2;
use homx_core::error::{Error, Result};
use homx_core::graph::{format_rational, write_graph6, TargetGraph};
use homx_core::search::{
    enumerate_family, verify_2regular, verify_conjecture, FamilyFilters, FamilySource, FamilySpec,
};
use homx_core::ExactCount;

use args::{
    apply_weights, parse_graph_file, parse_graph_spec, parse_target, parse_target_file, GraphSpec,
};

static INTERRUPTED: AtomicBool = AtomicBool::new(false);

extern "C" fn on_interrupt(_: libc::c_int) {
    INTERRUPTED.store(true, AtomicOrdering::SeqCst);
}

#[derive(Parser)]
#[command(
    name = "homx",
    version,
    about = "Exact H-coloring counting, classification, and extremal search"
)]
struct Cli {
    /// Worker threads for family searches (default: HOMX_JOBS or all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,

    /// Report format. `generate` always writes graph6 lines; `csv` applies
    /// to `search`.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Json)]
    output: OutputFormat,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Json,
    Csv,
    Plain,
}

#[derive(clap::Args)]
struct TargetArgs {
    /// Target graph: alias (ind, wr, hc:k, kq:q, kqloop:q), inline rows like
    /// "01/11", or a JSON document.
    #[arg(long)]
    target: Option<String>,

    /// File containing the target (JSON document or inline rows).
    #[arg(long)]
    target_file: Option<String>,

    /// Comma-separated positive rational vertex weights, e.g. "1,3/2".
    #[arg(long)]
    weights: Option<String>,
}

impl TargetArgs {
    fn resolve(&self) -> Result<TargetGraph> {
        let base = match (&self.target, &self.target_file) {
            (Some(spec), None) => parse_target(spec),
            (None, Some(path)) => parse_target_file(path),
            (Some(_), Some(_)) => Err(Error::Parameter(
                "choose one of --target and --target-file".into(),
            )),
            (None, None) => Err(Error::Parameter(
                "a target is required: --target or --target-file".into(),
            )),
        }?;
        match &self.weights {
            Some(w) => apply_weights(base, w),
            None => Ok(base),
        }
    }
}

#[derive(clap::Args)]
struct GraphArgs {
    /// Counted graph: cycle:n, path:n, star:n, complete:n, cbip:a,b, or
    /// g6:<line>.
    #[arg(long)]
    graph: Option<String>,

    /// File whose first line is a graph6 graph.
    #[arg(long)]
    graph_file: Option<String>,
}

impl GraphArgs {
    fn resolve(&self) -> Result<GraphSpec> {
        match (&self.graph, &self.graph_file) {
            (Some(spec), None) => parse_graph_spec(spec),
            (None, Some(path)) => Ok(GraphSpec::Explicit(parse_graph_file(path)?)),
            (Some(_), Some(_)) => Err(Error::Parameter(
                "choose one of --graph and --graph-file".into(),
            )),
            (None, None) => Err(Error::Parameter(
                "a graph is required: --graph or --graph-file".into(),
            )),
        }
    }
}

#[derive(clap::Args)]
struct FamilyArgs {
    /// Number of vertices.
    #[arg(long)]
    n: usize,

    /// Minimum degree of the family.
    #[arg(long)]
    delta: usize,

    /// Family source: emc (structural generator), all (every graph up to
    /// isomorphism, n <= 8), g6-stdin, or g6-file:<path>.
    #[arg(long, default_value = "emc")]
    source: String,

    /// Keep only graphs with maximum degree at most this.
    #[arg(long)]
    max_degree: Option<usize>,

    /// Keep only d-regular graphs.
    #[arg(long)]
    regular: Option<usize>,

    /// Keep only bipartite graphs.
    #[arg(long, default_value_t = false)]
    bipartite: bool,
}

impl FamilyArgs {
    fn resolve(&self) -> Result<FamilySpec> {
        let source = match self.source.as_str() {
            "emc" => FamilySource::GeneratedEmc,
            "all" => FamilySource::AllGraphsBruteforce,
            "g6-stdin" => {
                let mut text = String::new();
                std::io::stdin()
                    .read_to_string(&mut text)
                    .map_err(|e| Error::Parameter(format!("cannot read stdin: {e}")))?;
                FamilySource::Graph6Stream(text.lines().map(str::to_owned).collect())
            }
            other => match other.strip_prefix("g6-file:") {
                Some(path) => {
                    let text = std::fs::read_to_string(path).map_err(|e| {
                        Error::Parameter(format!("cannot read graph6 file {path}: {e}"))
                    })?;
                    FamilySource::Graph6Stream(text.lines().map(str::to_owned).collect())
                }
                None => {
                    return Err(Error::Parameter(format!(
                        "unknown source {other:?}; expected emc, all, g6-stdin, or g6-file:<path>"
                    )))
                }
            },
        };
        Ok(FamilySpec {
            n: self.n,
            delta: self.delta,
            source,
            filters: FamilyFilters {
                max_degree: self.max_degree,
                regular: self.regular,
                bipartite: self.bipartite,
            },
        })
    }
}

#[derive(Subcommand)]
enum Command {
    /// Count H-colorings (or the weighted partition function) of one graph.
    Count {
        #[command(flatten)]
        target: TargetArgs,
        #[command(flatten)]
        graph: GraphArgs,
    },
    /// Classify a target into its extremal regimes, with exact comparisons.
    Classify {
        #[command(flatten)]
        target: TargetArgs,
        /// Intended minimum degree of the counted graphs.
        #[arg(long, default_value_t = 2)]
        delta: usize,
        /// Upper end of the star-sequence profile.
        #[arg(long, default_value_t = 8)]
        x_max: u64,
        /// Tolerance for the (approximate) spectral threshold.
        #[arg(long, default_value_t = 1e-9)]
        tolerance: f64,
    },
    /// Generate all edge-min-critical graphs for a given n and minimum
    /// degree in {1,2}; writes graph6 lines.
    Generate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        delta: usize,
    },
    /// Decompose an edge-min-critical minimum-degree-2 graph into base
    /// cycles, path additions, and pendant additions.
    Decompose {
        #[command(flatten)]
        graph: GraphArgs,
    },
    /// Exhaustively maximise hom(G,H) over a family.
    Search {
        #[command(flatten)]
        target: TargetArgs,
        #[command(flatten)]
        family: FamilyArgs,
        /// Instead of one search, scan sizes 4..=n and report the least n
        /// from which K_{2,n-2} is the unique maximiser (an empirical onset,
        /// not the proved constant).
        #[arg(long, default_value_t = false)]
        star_onset: bool,
    },
    /// Verify the extremal bound over a family (or over all 2-regular
    /// graphs with --two-regular). A failed bound is a verdict, not an
    /// error; a falsified invariant exits 3.
    Verify {
        #[command(flatten)]
        target: TargetArgs,
        /// Check the 2-regular cycle-partition bound instead of a family
        /// search.
        #[arg(long, default_value_t = false)]
        two_regular: bool,
        /// Number of vertices.
        #[arg(long)]
        n: usize,
        /// Minimum degree of the family (ignored with --two-regular).
        #[arg(long, default_value_t = 2)]
        delta: usize,
        /// Family source: emc, all, g6-stdin, or g6-file:<path>.
        #[arg(long, default_value = "emc")]
        source: String,
        /// Max-degree cap: switches the star bound term to the capped form.
        #[arg(long)]
        max_degree: Option<usize>,
    },
}

fn main() -> std::process::ExitCode {
    let cli = Cli::parse();
    let jobs = cli.jobs.or_else(|| {
        std::env::var("HOMX_JOBS")
            .ok()
            .and_then(|v| v.parse().ok())
    });
    if let Some(j) = jobs {
        if j > 0 {
            let _ = rayon::ThreadPoolBuilder::new().num_threads(j).build_global();
        }
    }
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            std::process::ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn run(cli: Cli) -> Result<std::process::ExitCode> {
    let output = cli.output;
    match cli.command {
        Command::Count { target, graph } => {
            let h = target.resolve()?;
            let spec = graph.resolve()?;
            cmd_count(&h, &spec, output)
        }
        Command::Classify {
            target,
            delta,
            x_max,
            tolerance,
        } => {
            let h = target.resolve()?;
            let report = classify(&h, delta, x_max, tolerance)?;
            match output {
                OutputFormat::Plain => {
                    println!("degree_sum = {}", report.sum_degrees);
                    println!("max_degree = {}", report.max_degree);
                    println!(
                        "degree_condition: degree_sum {} max_degree^2",
                        match report.degree_condition {
                            Ordering::Less => "<",
                            Ordering::Equal => "=",
                            Ordering::Greater => ">",
                        }
                    );
                    if let Some((n0, boundary)) = report.n0 {
                        println!("n0 = {n0} (boundary tie: {boundary})");
                    }
                    match report.delta2 {
                        Delta2Regime::Bipartite => println!("min_degree_2_regime: bipartite_star"),
                        Delta2Regime::Cycles { c3_vs_c4 } => println!(
                            "min_degree_2_regime: cycles (C3 root {} C4 root)",
                            match c3_vs_c4 {
                                Ordering::Less => "<",
                                Ordering::Equal => "=",
                                Ordering::Greater => ">",
                            }
                        ),
                    }
                    println!("s_delta = {}", report.s_delta);
                    println!(
                        "looped_dominating_vertex = {}",
                        report.flags.looped_dominating_vertex
                    );
                    println!(
                        "star_dominant_sufficient = {}",
                        report.star_dominant_sufficient
                    );
                    if let Some(pt) = &report.path_threshold {
                        println!("path_threshold l = {} (approximate)", pt.l_h);
                    }
                }
                _ => print_json(&report.to_json()),
            }
            Ok(std::process::ExitCode::SUCCESS)
        }
        Command::Generate { n, delta } => {
            let graphs = homx_core::critical::generate_emc(n, delta)?;
            if output == OutputFormat::Json {
                let lines: Vec<String> = graphs.iter().map(write_graph6).collect();
                print_json(&serde_json::json!({
                    "n": n.to_string(),
                    "delta": delta.to_string(),
                    "count": graphs.len().to_string(),
                    "graphs": lines,
                }));
            } else {
                let stdout = std::io::stdout();
                let mut out = stdout.lock();
                for g in &graphs {
                    writeln!(out, "{}", write_graph6(g))
                        .map_err(|e| Error::Parameter(format!("write failed: {e}")))?;
                }
            }
            Ok(std::process::ExitCode::SUCCESS)
        }
        Command::Decompose { graph } => {
            let spec = graph.resolve()?;
            let g = spec.build()?;
            let d = decompose_delta2(&g)?;
            match output {
                OutputFormat::Plain => {
                    for c in &d.base_cycles {
                        println!(
                            "cycle: {}",
                            c.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
                        );
                    }
                    for p in &d.path_additions {
                        println!(
                            "path: {} attach ({}, {})",
                            p.vertices
                                .iter()
                                .map(|v| v.to_string())
                                .collect::<Vec<_>>()
                                .join(" "),
                            p.attach.0,
                            p.attach.1
                        );
                    }
                    for p in &d.pendant_additions {
                        println!("pendant: {} attach ({}, {})", p.vertex, p.attach.0, p.attach.1);
                    }
                }
                _ => print_json(&d.to_json()),
            }
            Ok(std::process::ExitCode::SUCCESS)
        }
        Command::Search {
            target,
            family,
            star_onset,
        } => {
            let h = target.resolve()?;
            if star_onset {
                let onset = homx_core::search::empirical_star_onset(&h, family.n)?;
                match output {
                    OutputFormat::Plain => match onset {
                        Some(n) => println!("empirical star onset: n = {n} (empirical, not c_H)"),
                        None => println!("no onset observed up to n = {}", family.n),
                    },
                    _ => print_json(&serde_json::json!({
                        "command": "search",
                        "mode": "star_onset",
                        "checked_up_to": family.n.to_string(),
                        "onset": onset.map(|n| n.to_string()),
                        "empirical_not_c_h": true,
                    })),
                }
                return Ok(std::process::ExitCode::SUCCESS);
            }
            let spec = family.resolve()?;
            cmd_search(&h, &spec, output)
        }
        Command::Verify {
            target,
            two_regular,
            n,
            delta,
            source,
            max_degree,
        } => {
            let h = target.resolve()?;
            if two_regular {
                let verdict = verify_2regular(n, &h)?;
                match output {
                    OutputFormat::Plain => {
                        for (parts, value, attains) in &verdict.partitions {
                            println!(
                                "cycles {:?}: {}{}",
                                parts,
                                value,
                                if *attains { " (attains bound)" } else { "" }
                            );
                        }
                    }
                    _ => print_json(&verdict.to_json()),
                }
                return Ok(std::process::ExitCode::SUCCESS);
            }
            let family = FamilyArgs {
                n,
                delta,
                source,
                max_degree,
                regular: None,
                bipartite: false,
            };
            let spec = family.resolve()?;
            let verdict = verify_conjecture(&spec, &h)?;
            match output {
                OutputFormat::Plain => {
                    println!("max_value = {}", verdict.max_value);
                    println!("conjecture_holds = {}", verdict.conjecture_holds);
                    for w in &verdict.equality_graphs {
                        println!("equality: {}", write_graph6(w));
                    }
                }
                _ => print_json(&verdict.to_json()),
            }
            Ok(std::process::ExitCode::SUCCESS)
        }
    }
}

/// Count one graph against one target, preferring closed forms for the
/// symbolic families; falls back to explicit backtracking when the
/// complete-bipartite tuple sum is over its cap.
fn cmd_count(
    h: &TargetGraph,
    spec: &GraphSpec,
    output: OutputFormat,
) -> Result<std::process::ExitCode> {
    let weighted = !h.has_unit_weights();
    let (value, weighted_value): (Option<ExactCount>, Option<homx_core::ExactRational>) =
        if weighted {
            let g = spec.build()?;
            (None, Some(z_weighted(&g, h)))
        } else {
            let count = match *spec {
                GraphSpec::Cycle(n) => hom_cycle(n as u64, h)?,
                GraphSpec::Path(n) => hom_path(n as u64, h)?,
                GraphSpec::Star(n) => hom_star(n as u64, h)?,
                GraphSpec::Complete(n) => hom_complete(n, h)?,
                GraphSpec::CompleteBipartite(a, b) => {
                    match hom_complete_bipartite(a, b as u64, h) {
                        Ok(v) => v,
                        Err(Error::Resource(msg)) => {
                            eprintln!("warning: {msg}; falling back to explicit backtracking");
                            hom_brute(&spec.build()?, h)
                        }
                        Err(e) => return Err(e),
                    }
                }
                GraphSpec::Explicit(ref g) => hom_brute(g, h),
            };
            (Some(count), None)
        };
    let rendered = match (&value, &weighted_value) {
        (Some(v), _) => v.to_string(),
        (_, Some(z)) => format_rational(z),
        _ => unreachable!(),
    };
    match output {
        OutputFormat::Plain => println!("{rendered}"),
        _ => print_json(&serde_json::json!({
            "command": "count",
            "graph": spec.describe(),
            "target": h.to_document(),
            "weighted": weighted,
            "value": rendered,
        })),
    }
    Ok(std::process::ExitCode::SUCCESS)
}

fn cmd_search(
    h: &TargetGraph,
    spec: &FamilySpec,
    output: OutputFormat,
) -> Result<std::process::ExitCode> {
    let members = enumerate_family(spec)?;
    if members.is_empty() {
        return Err(Error::Parameter("family is empty".into()));
    }
    if output == OutputFormat::Csv {
        unsafe {
            libc::signal(
                libc::SIGINT,
                on_interrupt as extern "C" fn(libc::c_int) as usize as libc::sighandler_t,
            );
        }
        let mut values: Vec<ExactCount> = Vec::with_capacity(members.len());
        let mut truncated = false;
        for g in &members {
            if INTERRUPTED.load(AtomicOrdering::SeqCst) {
                truncated = true;
                break;
            }
            values.push(hom_brute(g, h));
        }
        let max = values.iter().max().cloned().unwrap_or_default();
        let stdout = std::io::stdout();
        let mut out = stdout.lock();
        let _ = writeln!(out, "canonical_form,hom,is_maximizer");
        for (g, v) in members.iter().zip(&values) {
            let _ = writeln!(
                out,
                "{},{},{}",
                csv_quote(&write_graph6(g)),
                v,
                (*v == max)
            );
        }
        if truncated {
            let _ = writeln!(out, "truncated,,");
            return Ok(std::process::ExitCode::from(130));
        }
        return Ok(std::process::ExitCode::SUCCESS);
    }
    let (max, witnesses) = homx_core::search::argmax_over(&members, h)?;
    match output {
        OutputFormat::Plain => {
            println!("family_size = {}", members.len());
            println!("max = {max}");
            for w in &witnesses {
                println!("maximizer: {}", write_graph6(w));
            }
        }
        _ => print_json(&serde_json::json!({
            "command": "search",
            "n": spec.n.to_string(),
            "delta": spec.delta.to_string(),
            "family_size": members.len().to_string(),
            "max_value": max.to_string(),
            "witnesses": witnesses.iter().map(write_graph6).collect::<Vec<_>>(),
        })),
    }
    Ok(std::process::ExitCode::SUCCESS)
}

fn print_json(value: &serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(value).expect("serializable"));
}

/// RFC-style CSV quoting: wrap when the field contains a comma, quote, or
/// newline, doubling inner quotes.
fn csv_quote(field: &str) -> String {
    if field.contains([',', '"', '\n', '\r']) {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}
