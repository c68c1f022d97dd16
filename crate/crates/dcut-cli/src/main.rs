//! `dcut`: generate instances, enumerate d-cuts through the enumeration
//! kernels, verify the partition contract against the brute-force oracle,
//! and benchmark per-solution delay.
//!
//! Exit codes: 0 success, 2 input parse error, 3 verification mismatch,
//! 4 brute-force size refusal, 1 other errors.

use std::fs;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use dcut_core::gen;
use dcut_core::graph::{load_graph, Graph};
use dcut_core::kernel::KernelError;
use dcut_core::oracle::OracleError;
use dcut_core::params::parse_partition;
use dcut_core::pipeline::{
    check_partition, collect_classes, connected_graphs_up_to, enumerate_stream, random_corpus,
    verify_instance, Options, Param, PipelineError, RunReport, Variant, Verdict,
};

#[derive(Parser)]
#[command(name = "dcut", version, about = "d-cut enumeration kernels and oracles")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum ParamArg {
    Vc,
    Nd,
    Pc,
    None,
}

impl From<ParamArg> for Param {
    fn from(p: ParamArg) -> Param {
        match p {
            ParamArg::Vc => Param::Vc,
            ParamArg::Nd => Param::Nd,
            ParamArg::Pc => Param::Pc,
            ParamArg::None => Param::None,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    All,
    Min,
    Max,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Variant {
        match v {
            VariantArg::All => Variant::All,
            VariantArg::Min => Variant::Min,
            VariantArg::Max => Variant::Max,
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Emit a generated instance as an edge-list document.
    Gen {
        #[command(subcommand)]
        family: Family,
        /// Write the graph here instead of standard output.
        #[arg(long, global = true)]
        out: Option<PathBuf>,
        /// Also write the instance's natural clique partition.
        #[arg(long, global = true)]
        partition_out: Option<PathBuf>,
    },
    /// Kernelize, lift, and print one JSON object per solution.
    Enumerate {
        #[arg(long)]
        input: PathBuf,
        /// Clique partition file (required by --param pc beyond oracle scale).
        #[arg(long)]
        partition: Option<PathBuf>,
        /// With --param pc and no partition file, accept a greedy
        /// non-minimum partition instead of refusing.
        #[arg(long)]
        greedy_partition: bool,
        #[arg(short)]
        d: usize,
        #[arg(long, value_enum)]
        param: ParamArg,
        #[arg(long, value_enum)]
        variant: VariantArg,
        #[arg(long)]
        oracle_limit: Option<usize>,
        #[arg(long)]
        kernel_limit: Option<usize>,
    },
    /// Check the partition-of-solutions contract against the oracle.
    Verify {
        /// Instance files; may be repeated.
        #[arg(long)]
        input: Vec<PathBuf>,
        /// Additionally sweep all labeled connected graphs up to this size.
        #[arg(long)]
        gen_connected: Option<usize>,
        /// Additionally sweep this many seeded random graphs on 7-8 vertices.
        #[arg(long)]
        gen_random: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Comma-separated list of d values.
        #[arg(short, default_value = "1,2")]
        d: String,
        /// Restrict to one parameterization (default: vc, nd, and pc).
        #[arg(long, value_enum)]
        param: Option<ParamArg>,
        /// Restrict to one variant (default: all three).
        #[arg(long, value_enum)]
        variant: Option<VariantArg>,
        /// Keep running after a mismatch instead of stopping.
        #[arg(long)]
        keep_going: bool,
        /// Test fixture: corrupt the lifted classes before checking, to
        /// exercise the mismatch path.
        #[arg(long, hide = true)]
        inject_fault: bool,
        #[arg(long)]
        json_report: Option<PathBuf>,
        #[arg(long)]
        oracle_limit: Option<usize>,
        #[arg(long)]
        kernel_limit: Option<usize>,
    },
    /// Stream solutions without verification, timing per-item delay.
    Bench {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        partition: Option<PathBuf>,
        #[arg(short)]
        d: usize,
        #[arg(long, value_enum)]
        param: ParamArg,
        #[arg(long, value_enum)]
        variant: VariantArg,
        #[arg(long)]
        json_report: Option<PathBuf>,
        #[arg(long)]
        oracle_limit: Option<usize>,
        #[arg(long)]
        kernel_limit: Option<usize>,
    },
}

#[derive(Subcommand)]
enum Family {
    /// k-clique with m pendant leaves per clique vertex.
    StarForest {
        #[arg(short)]
        k: usize,
        #[arg(short)]
        m: usize,
    },
    /// Disjoint union of inputs plus a 2d-clique joined to each part.
    Compose {
        #[arg(long, required = true)]
        input: Vec<PathBuf>,
        #[arg(short)]
        d: usize,
    },
    /// Erdős–Rényi G(n, p).
    Random {
        #[arg(short)]
        n: usize,
        #[arg(short)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    Path {
        #[arg(short)]
        n: usize,
    },
    Clique {
        #[arg(short)]
        n: usize,
    },
    /// Star with n leaves.
    Star {
        #[arg(short)]
        n: usize,
    },
}

struct AppError {
    code: u8,
    message: String,
}

impl AppError {
    fn new(code: u8, message: impl Into<String>) -> Self {
        AppError {
            code,
            message: message.into(),
        }
    }
}

impl From<io::Error> for AppError {
    fn from(e: io::Error) -> Self {
        AppError::new(1, format!("io error: {e}"))
    }
}

impl From<PipelineError> for AppError {
    fn from(e: PipelineError) -> Self {
        let code = match &e {
            PipelineError::Oracle(OracleError::TooLarge { .. })
            | PipelineError::Kernel(KernelError::Oracle(OracleError::TooLarge { .. })) => 4,
            _ => 1,
        };
        AppError::new(code, e.to_string())
    }
}

fn read_graph(path: &Path) -> Result<Graph, AppError> {
    let text = fs::read_to_string(path)
        .map_err(|e| AppError::new(2, format!("{}: {e}", path.display())))?;
    load_graph(&text).map_err(|e| AppError::new(2, format!("{}: {e}", path.display())))
}

fn read_partition(path: &Path, n: usize) -> Result<Vec<Vec<usize>>, AppError> {
    let text = fs::read_to_string(path)
        .map_err(|e| AppError::new(2, format!("{}: {e}", path.display())))?;
    parse_partition(&text, n).map_err(|e| AppError::new(2, format!("{}: {e}", path.display())))
}

fn options(
    oracle_limit: Option<usize>,
    kernel_limit: Option<usize>,
    partition: Option<Vec<Vec<usize>>>,
    greedy_partition: bool,
) -> Options {
    let mut opts = Options::default();
    if let Some(l) = oracle_limit {
        opts.oracle_limit = l;
    }
    if let Some(l) = kernel_limit {
        opts.kernel_limit = l;
    }
    opts.partition = partition;
    opts.greedy_partition = greedy_partition;
    opts
}

fn write_or_stdout(path: &Option<PathBuf>, content: &str) -> Result<(), AppError> {
    match path {
        Some(p) => fs::write(p, content)?,
        None => io::stdout().write_all(content.as_bytes())?,
    }
    Ok(())
}

fn cmd_gen(
    family: Family,
    out: Option<PathBuf>,
    partition_out: Option<PathBuf>,
) -> Result<(), AppError> {
    let (g, partition): (Graph, Option<Vec<Vec<usize>>>) = match family {
        Family::StarForest { k, m } => {
            if k == 0 || m == 0 {
                return Err(AppError::new(1, "star-forest requires k >= 1 and m >= 1"));
            }
            (gen::star_forest(k, m), Some(gen::star_forest_partition(k, m)))
        }
        Family::Compose { input, d } => {
            if d == 0 {
                return Err(AppError::new(1, "compose requires d >= 1"));
            }
            let parts: Result<Vec<Graph>, AppError> =
                input.iter().map(|p| read_graph(p)).collect();
            (gen::compose(&parts?, d).0, None)
        }
        Family::Random { n, p, seed } => {
            if !(0.0..=1.0).contains(&p) {
                return Err(AppError::new(1, "random requires 0 <= p <= 1"));
            }
            (gen::random_gnp(n, p, seed), None)
        }
        Family::Path { n } => (gen::path(n), None),
        Family::Clique { n } => (gen::clique(n), None),
        Family::Star { n } => (gen::star(n), None),
    };
    write_or_stdout(&out, &g.to_edge_list())?;
    if let Some(ppath) = partition_out {
        let blocks = partition.ok_or_else(|| {
            AppError::new(1, "this family has no natural clique partition to emit")
        })?;
        let mut text = String::new();
        for block in blocks {
            let words: Vec<String> = block.iter().map(|v| v.to_string()).collect();
            text.push_str(&words.join(" "));
            text.push('\n');
        }
        fs::write(ppath, text)?;
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn cmd_enumerate(
    input: PathBuf,
    partition: Option<PathBuf>,
    greedy_partition: bool,
    d: usize,
    param: Param,
    variant: Variant,
    oracle_limit: Option<usize>,
    kernel_limit: Option<usize>,
) -> Result<(), AppError> {
    let g = read_graph(&input)?;
    let partition = partition.map(|p| read_partition(&p, g.n())).transpose()?;
    let opts = options(oracle_limit, kernel_limit, partition, greedy_partition);
    let stream = enumerate_stream(&g, d, param, variant, &opts)?;
    for w in &stream.info.warnings {
        eprintln!("warning: {w}");
    }
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    for cut in stream {
        out.write_all(cut.to_json_line().as_bytes())?;
        out.write_all(b"\n")?;
    }
    out.flush()?;
    Ok(())
}

fn parse_d_list(list: &str) -> Result<Vec<usize>, AppError> {
    let mut out = Vec::new();
    for tok in list.split(',') {
        let v: usize = tok
            .trim()
            .parse()
            .map_err(|_| AppError::new(1, format!("bad d value {tok:?}")))?;
        if v == 0 {
            return Err(AppError::new(1, "d must be at least 1"));
        }
        out.push(v);
    }
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify(
    input: Vec<PathBuf>,
    gen_connected: Option<usize>,
    gen_random: Option<usize>,
    seed: u64,
    d_spec: String,
    param: Option<Param>,
    variant: Option<Variant>,
    keep_going: bool,
    inject_fault: bool,
    json_report: Option<PathBuf>,
    oracle_limit: Option<usize>,
    kernel_limit: Option<usize>,
) -> Result<(), AppError> {
    let ds = parse_d_list(&d_spec)?;
    let params = match param {
        Some(p) => vec![p],
        None => vec![Param::Vc, Param::Nd, Param::Pc],
    };
    let variants = match variant {
        Some(v) => vec![v],
        None => vec![Variant::All, Variant::Min, Variant::Max],
    };
    let mut instances: Vec<(String, Graph)> = Vec::new();
    for path in &input {
        instances.push((path.display().to_string(), read_graph(path)?));
    }
    if let Some(nmax) = gen_connected {
        for (i, g) in connected_graphs_up_to(nmax).into_iter().enumerate() {
            instances.push((format!("connected-{i}"), g));
        }
    }
    if let Some(count) = gen_random {
        for (i, g) in random_corpus(count, seed).into_iter().enumerate() {
            instances.push((format!("random-{i}"), g));
        }
    }
    if instances.is_empty() {
        return Err(AppError::new(
            1,
            "nothing to verify: pass --input, --gen-connected, or --gen-random",
        ));
    }

    let opts = options(oracle_limit, kernel_limit, None, false);
    let mut reports: Vec<RunReport> = Vec::new();
    let mut failed = false;
    'outer: for (name, g) in &instances {
        for &d in &ds {
            for &param in &params {
                for &variant in &variants {
                    let report = if inject_fault {
                        let (info, mut classes) =
                            collect_classes(g, d, param, variant, &opts)?;
                        classes.pop(); // drop one class: its solutions go missing

                        let truth = dcut_core::oracle::enumerate_all_bruteforce(
                            g,
                            d,
                            opts.oracle_limit,
                        )
                        .map(|all| match variant {
                            Variant::All => all,
                            Variant::Min => dcut_core::oracle::filter_minimal(&all),
                            Variant::Max => dcut_core::oracle::filter_maximal(&all),
                        })
                        .map_err(PipelineError::from)?;
                        let (solutions, verdict) = check_partition(&truth, &classes);
                        RunReport {
                            instance: name.clone(),
                            info,
                            solutions,
                            verdict,
                        }
                    } else {
                        verify_instance(name, g, d, param, variant, &opts, None)?
                    };
                    let ok = report.passed();
                    match &report.verdict {
                        Verdict::Pass => eprintln!(
                            "{} d={} param={} variant={} solutions={} pass",
                            name,
                            d,
                            param.label(),
                            variant.label(),
                            report.solutions,
                        ),
                        Verdict::Mismatch { detail } => eprintln!(
                            "{} d={} param={} variant={} solutions={} MISMATCH: {detail}",
                            name,
                            d,
                            param.label(),
                            variant.label(),
                            report.solutions,
                        ),
                    }
                    if !ok {
                        failed = true;
                    }
                    reports.push(report);
                    if failed && !keep_going {
                        break 'outer;
                    }
                }
            }
        }
    }
    if let Some(path) = json_report {
        fs::write(&path, serde_json::to_string_pretty(&reports).unwrap())?;
    }
    if failed {
        return Err(AppError::new(3, "verification mismatch"));
    }
    eprintln!("verified {} report lines, all pass", reports.len());
    Ok(())
}

#[derive(Serialize)]
struct BenchReport {
    instance: String,
    d: usize,
    param: String,
    variant: String,
    solutions: u64,
    max_delay_ms: f64,
    mean_delay_ms: f64,
    max_nodes_between: u64,
    kernel_vertices: Option<usize>,
    vm_hwm_delta_kb: Option<i64>,
    total_ms: f64,
}

fn vm_hwm_kb() -> Option<i64> {
    let status = fs::read_to_string("/proc/self/status").ok()?;
    for line in status.lines() {
        if let Some(rest) = line.strip_prefix("VmHWM:") {
            return rest.trim().trim_end_matches(" kB").trim().parse().ok();
        }
    }
    None
}

#[allow(clippy::too_many_arguments)]
fn cmd_bench(
    input: PathBuf,
    partition: Option<PathBuf>,
    d: usize,
    param: Param,
    variant: Variant,
    json_report: Option<PathBuf>,
    oracle_limit: Option<usize>,
    kernel_limit: Option<usize>,
) -> Result<(), AppError> {
    let g = read_graph(&input)?;
    let partition = partition.map(|p| read_partition(&p, g.n())).transpose()?;
    let opts = options(oracle_limit, kernel_limit, partition, false);
    let hwm_before = vm_hwm_kb();
    let started = Instant::now();
    let mut stream = enumerate_stream(&g, d, param, variant, &opts)?;
    let mut count = 0u64;
    let mut max_delay = Duration::ZERO;
    let mut last = Instant::now();
    for _cut in stream.by_ref() {
        let now = Instant::now();
        max_delay = max_delay.max(now - last);
        last = now;
        count += 1;
    }
    let total = started.elapsed();
    let meter = stream.meter();
    let report = BenchReport {
        instance: input.display().to_string(),
        d,
        param: param.label().into(),
        variant: variant.label().into(),
        solutions: count,
        max_delay_ms: max_delay.as_secs_f64() * 1e3,
        mean_delay_ms: if count > 0 {
            total.as_secs_f64() * 1e3 / count as f64
        } else {
            0.0
        },
        max_nodes_between: meter.max_nodes_between(),
        kernel_vertices: stream.info.kernel_vertices,
        vm_hwm_delta_kb: match (hwm_before, vm_hwm_kb()) {
            (Some(a), Some(b)) => Some(b - a),
            _ => None,
        },
        total_ms: total.as_secs_f64() * 1e3,
    };
    let line = serde_json::to_string_pretty(&report).unwrap();
    match json_report {
        Some(path) => fs::write(path, &line)?,
        None => eprintln!("{line}"),
    }
    println!("{count}");
    Ok(())
}

fn run() -> Result<(), AppError> {
    let cli = Cli::parse();
    match cli.cmd {
        Cmd::Gen {
            family,
            out,
            partition_out,
        } => cmd_gen(family, out, partition_out),
        Cmd::Enumerate {
            input,
            partition,
            greedy_partition,
            d,
            param,
            variant,
            oracle_limit,
            kernel_limit,
        } => cmd_enumerate(
            input,
            partition,
            greedy_partition,
            d,
            param.into(),
            variant.into(),
            oracle_limit,
            kernel_limit,
        ),
        Cmd::Verify {
            input,
            gen_connected,
            gen_random,
            seed,
            d,
            param,
            variant,
            keep_going,
            inject_fault,
            json_report,
            oracle_limit,
            kernel_limit,
        } => cmd_verify(
            input,
            gen_connected,
            gen_random,
            seed,
            d,
            param.map(Into::into),
            variant.map(Into::into),
            keep_going,
            inject_fault,
            json_report,
            oracle_limit,
            kernel_limit,
        ),
        Cmd::Bench {
            input,
            partition,
            d,
            param,
            variant,
            json_report,
            oracle_limit,
            kernel_limit,
        } => cmd_bench(
            input,
            partition,
            d,
            param.into(),
            variant.into(),
            json_report,
            oracle_limit,
            kernel_limit,
        ),
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
