mod render;

use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use distext::extend::{
    is_k_extendable_deletion, is_k_extendable_direct, is_k_extendable_hall, is_k_extendable_tutte,
    is_k_factor_critical, is_k_factor_critical_tutte, ExtendabilityVerdict,
};
use distext::graph::{parse_graph6, write_graph6, Graph, GraphFamily};
use distext::spectrum::{distance_matrix, spectral_radius, DEFAULT_TOL};
use distext::verify::{
    enumerate_connected, enumerate_connected_balanced_bipartite, rows_to_csv, scan_s_range_bipartite,
    scan_s_range_general, verify_lemma_bh, verify_lemma_bh_sweep, verify_lemma_pf, verify_theorem1,
    verify_theorem2, verify_theorem3, GraphSource, TheoremOutcome, VerificationReport,
};

use render::{fmt_sig, render_report, render_verdict};

#[derive(Parser, Debug)]
#[command(name = "distext", version, about = "Distance spectral radius, matching extendability and extremal-graph verification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    out: OutputOpts,
}

#[derive(Args, Debug, Clone)]
struct OutputOpts {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Write results here instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Significant digits for radii in text output.
    #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u8).range(1..=17), global = true)]
    precision: u8,
    /// Worker threads for enumeration suites. Any value gives identical reports.
    #[arg(long, env = "DISTEXT_JOBS", default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..), global = true)]
    jobs: u16,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Distance spectral radius and Perron vector of a connected graph.
    Radius {
        #[command(flatten)]
        input: GraphInput,
        /// Residual tolerance of the power iteration.
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
    },
    /// Decide k-extendability (Tutte-type condition of Lemma 1, Hall-type and
    /// deletion conditions of Lemma 2, or directly from the definition).
    CheckExtendable {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = ExtendMethod::Direct)]
        method: ExtendMethod,
    },
    /// Decide k-factor-criticality, directly or by the odd-component
    /// condition used for Theorem 3.
    CheckFactorCritical {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = CriticalMethod::Direct)]
        method: CriticalMethod,
    },
    /// Build a named graph and print it as graph6. The extremal families are
    /// those of Theorems 1, 2 and 3.
    Construct {
        #[arg(value_enum)]
        family: FamilyName,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        s: Option<usize>,
        /// Comma-separated part sizes (configuration) or a,b,c,d (diamond).
        #[arg(long, value_delimiter = ',')]
        parts: Vec<usize>,
    },
    /// Theorem 1: among connected graphs of order 2n that are not
    /// k-extendable, K_{2k} ∨ (K_{2n-2k-1} ∪ K_1) uniquely minimizes the
    /// distance spectral radius.
    VerifyTheorem1 {
        #[command(flatten)]
        params: NK,
        #[command(flatten)]
        source: SourceOpts,
        /// Also write per-graph rows (graph6, radius, holds) as CSV.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Theorem 2: among connected balanced bipartite graphs of order 2n that
    /// are not k-extendable, K_{n-k,n-1} ⋄ K_{k,1} uniquely minimizes the
    /// distance spectral radius.
    VerifyTheorem2 {
        #[command(flatten)]
        params: NK,
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Theorem 3: among connected graphs of order n that are not
    /// k-factor-critical, K_k ∨ (K_{n-k-1} ∪ K_1) uniquely minimizes the
    /// distance spectral radius.
    VerifyTheorem3 {
        #[command(flatten)]
        params: NK,
        #[command(flatten)]
        source: SourceOpts,
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Lemma 3 (adding an edge strictly lowers the radius) on random graphs,
    /// and Lemma 4 (K_s ∨ (K_{n-s-p+1} ∪ (p-1)K_1) minimizes the radius among
    /// K_s ∨ (K_{n_1} ∪ ... ∪ K_{n_p})) on one configuration or a sweep.
    VerifyLemmas {
        #[arg(long, default_value_t = 500)]
        trials: usize,
        /// Largest order for random graphs and for the configuration sweep.
        #[arg(long, default_value_t = 10)]
        max_order: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// With --parts, check this single configuration instead of sweeping.
        #[arg(long)]
        s: Option<usize>,
        #[arg(long, value_delimiter = ',')]
        parts: Vec<usize>,
    },
    /// Families G^(s) (Theorem 1) and B^(s) (Theorem 2) against the extremal
    /// radius, with the Perron-vector quantities and Rayleigh bounds.
    ScanS {
        #[command(flatten)]
        params: NK,
        #[arg(long, value_enum, default_value_t = ScanFamily::Both)]
        family: ScanFamily,
    },
    /// Isomorph-free connected graphs (or connected balanced bipartite
    /// graphs) of a given order, one graph6 per line.
    Enumerate {
        #[arg(long)]
        order: usize,
        #[arg(long)]
        bipartite: bool,
    },
}

#[derive(Args, Debug)]
struct GraphInput {
    /// Graph in graph6; `-` reads the first line of standard input.
    #[arg(long)]
    graph6: String,
}

#[derive(Args, Debug)]
struct NK {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
}

#[derive(Args, Debug)]
struct SourceOpts {
    /// Read graphs from a graph6 file instead of the built-in generator.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Drop isomorphic duplicates from --input.
    #[arg(long, requires = "input")]
    dedup: bool,
}

impl SourceOpts {
    fn source(&self) -> GraphSource {
        match &self.input {
            None => GraphSource::BuiltIn,
            Some(path) => GraphSource::File {
                path: path.clone(),
                dedup: self.dedup,
            },
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum ExtendMethod {
    Direct,
    Tutte,
    Hall,
    Deletion,
    All,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum CriticalMethod {
    Direct,
    Tutte,
    All,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum ScanFamily {
    General,
    Bipartite,
    Both,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum FamilyName {
    ExtremalGeneral,
    ExtremalBipartite,
    ExtremalFactorCritical,
    Configuration,
    GeneralS,
    BipartiteS,
    Complete,
    Diamond,
}

/// Outcome of a command: text to emit and whether a verification failed.
struct Output {
    body: String,
    failed: bool,
}

impl Output {
    fn ok(body: String) -> Self {
        Output { body, failed: false }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let opts = cli.out.clone();
    let pool = rayon::ThreadPoolBuilder::new().num_threads(opts.jobs as usize).build();
    let result = match pool {
        Ok(pool) => pool.install(|| run(cli.command, &opts)),
        Err(e) => Err(e.into()),
    };
    match result.and_then(|out| emit(&opts, &out.body).map(|_| out.failed)) {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {}", format!("{e:#}").replace('\n', " "));
            ExitCode::from(2)
        }
    }
}

fn emit(opts: &OutputOpts, body: &str) -> Result<()> {
    match &opts.output {
        Some(path) => std::fs::write(path, body).with_context(|| format!("writing {}", path.display())),
        None => {
            let mut out = io::stdout().lock();
            out.write_all(body.as_bytes())?;
            Ok(out.flush()?)
        }
    }
}

fn read_graph(input: &GraphInput) -> Result<Graph> {
    let text = if input.graph6 == "-" {
        let mut buf = String::new();
        io::stdin().read_to_string(&mut buf).context("reading standard input")?;
        buf.lines().find(|l| !l.trim().is_empty()).unwrap_or("").trim().to_string()
    } else {
        input.graph6.clone()
    };
    Ok(parse_graph6(&text)?)
}

fn run(command: Command, opts: &OutputOpts) -> Result<Output> {
    match command {
        Command::Radius { input, tol } => radius(&read_graph(&input)?, tol, opts),
        Command::CheckExtendable { input, k, method } => check_extendable(read_graph(&input)?, k, method, opts),
        Command::CheckFactorCritical { input, k, method } => check_critical(&read_graph(&input)?, k, method, opts),
        Command::Construct { family, n, k, s, parts } => construct(family, n, k, s, parts, opts),
        Command::VerifyTheorem1 { params, source, csv } => {
            progress(&format!("theorem 1: scanning order {}", 2 * params.n));
            theorem(verify_theorem1(params.n, params.k, &source.source())?, csv, opts)
        }
        Command::VerifyTheorem2 { params, csv } => {
            progress(&format!("theorem 2: scanning balanced bipartite order {}", 2 * params.n));
            theorem(verify_theorem2(params.n, params.k)?, csv, opts)
        }
        Command::VerifyTheorem3 { params, source, csv } => {
            progress(&format!("theorem 3: scanning order {}", params.n));
            theorem(verify_theorem3(params.n, params.k, &source.source())?, csv, opts)
        }
        Command::VerifyLemmas { trials, max_order, seed, s, parts } => {
            let mut reports = vec![verify_lemma_pf(trials, max_order, seed)?];
            reports.push(match s {
                Some(s) => verify_lemma_bh(s, &parts)?,
                None if parts.is_empty() => verify_lemma_bh_sweep(max_order)?,
                None => bail!("--parts requires --s"),
            });
            reports_output(reports, opts)
        }
        Command::ScanS { params, family } => {
            let mut reports = Vec::new();
            if family != ScanFamily::Bipartite {
                reports.push(scan_s_range_general(params.n, params.k)?);
            }
            if family != ScanFamily::General {
                reports.push(scan_s_range_bipartite(params.n, params.k)?);
            }
            reports_output(reports, opts)
        }
        Command::Enumerate { order, bipartite } => {
            let graphs = if bipartite {
                enumerate_connected_balanced_bipartite(order)?
            } else {
                enumerate_connected(order)?
            };
            progress(&format!("{} graphs", graphs.len()));
            let lines: Vec<String> = graphs.iter().map(write_graph6).collect();
            Ok(Output::ok(match opts.format {
                Format::Json => format!("{}\n", serde_json::to_string_pretty(&lines)?),
                Format::Csv => format!("graph6\n{}", lines.iter().map(|l| format!("{l}\n")).collect::<String>()),
                Format::Text => lines.iter().map(|l| format!("{l}\n")).collect(),
            }))
        }
    }
}

fn progress(msg: &str) {
    eprintln!("{msg}");
}

fn radius(g: &Graph, tol: f64, opts: &OutputOpts) -> Result<Output> {
    let sp = spectral_radius(&distance_matrix(g)?, tol)?;
    let g6 = write_graph6(g);
    Ok(Output::ok(match opts.format {
        Format::Text => format!("{}\n", fmt_sig(sp.radius, opts.precision as usize)),
        Format::Csv => format!("graph6,radius\n{g6},{}\n", sp.radius),
        Format::Json => format!("{}\n", serde_json::to_string_pretty(&json!({ "graph6": g6, "result": sp }))?),
    }))
}

fn attach_bipartition(g: Graph) -> Result<Graph> {
    if g.bipartition().is_some() {
        return Ok(g);
    }
    let sides = g.two_coloring().context("graph is not bipartite; hall and deletion need a bipartition")?;
    Ok(g.with_bipartition(sides.left)?)
}

fn check_extendable(g: Graph, k: usize, method: ExtendMethod, opts: &OutputOpts) -> Result<Output> {
    let mut verdicts: Vec<(&str, ExtendabilityVerdict)> = Vec::new();
    let want = |m: ExtendMethod| method == m || method == ExtendMethod::All;
    if want(ExtendMethod::Direct) {
        verdicts.push(("direct", is_k_extendable_direct(&g, k)));
    }
    if want(ExtendMethod::Tutte) {
        verdicts.push(("tutte", is_k_extendable_tutte(&g, k)?));
    }
    if want(ExtendMethod::Hall) || want(ExtendMethod::Deletion) {
        let b = match (method, attach_bipartition(g.clone())) {
            (ExtendMethod::All, Err(_)) => None,
            (_, b) => Some(b?),
        };
        if let Some(b) = b {
            if want(ExtendMethod::Hall) {
                verdicts.push(("hall", is_k_extendable_hall(&b, k)?));
            }
            if want(ExtendMethod::Deletion) {
                verdicts.push(("deletion", is_k_extendable_deletion(&b, k)?));
            }
        }
    }
    verdicts_output(&g, verdicts, opts)
}

fn check_critical(g: &Graph, k: usize, method: CriticalMethod, opts: &OutputOpts) -> Result<Output> {
    let mut verdicts = Vec::new();
    if method != CriticalMethod::Tutte {
        verdicts.push(("direct", is_k_factor_critical(g, k)));
    }
    if method != CriticalMethod::Direct {
        verdicts.push(("tutte", is_k_factor_critical_tutte(g, k)?));
    }
    verdicts_output(g, verdicts, opts)
}

fn verdicts_output(g: &Graph, verdicts: Vec<(&str, ExtendabilityVerdict)>, opts: &OutputOpts) -> Result<Output> {
    let g6 = write_graph6(g);
    let body = match opts.format {
        Format::Text => verdicts.iter().map(|(m, v)| render_verdict(m, v)).collect(),
        Format::Json => {
            let items: Vec<_> = verdicts
                .iter()
                .map(|(m, v)| json!({ "graph6": g6, "method": m, "verdict": v }))
                .collect();
            format!("{}\n", serde_json::to_string_pretty(&items)?)
        }
        Format::Csv => {
            let mut s = String::from("graph6,method,k,holds\n");
            for (m, v) in &verdicts {
                s.push_str(&format!("{g6},{m},{},{}\n", v.k, v.holds));
            }
            s
        }
    };
    Ok(Output::ok(body))
}

fn construct(
    family: FamilyName,
    n: Option<usize>,
    k: Option<usize>,
    s: Option<usize>,
    parts: Vec<usize>,
    opts: &OutputOpts,
) -> Result<Output> {
    let need = |v: Option<usize>, flag: &str| v.with_context(|| format!("{family:?} needs --{flag}"));
    let chosen = match family {
        FamilyName::ExtremalGeneral => GraphFamily::ExtremalGeneral { n: need(n, "n")?, k: need(k, "k")? },
        FamilyName::ExtremalBipartite => GraphFamily::ExtremalBipartite { n: need(n, "n")?, k: need(k, "k")? },
        FamilyName::ExtremalFactorCritical => {
            GraphFamily::ExtremalFactorCritical { n: need(n, "n")?, k: need(k, "k")? }
        }
        FamilyName::Configuration => GraphFamily::Configuration { s: need(s, "s")?, parts },
        FamilyName::GeneralS => GraphFamily::GeneralS { n: need(n, "n")?, k: need(k, "k")?, s: need(s, "s")? },
        FamilyName::BipartiteS => GraphFamily::BipartiteS { n: need(n, "n")?, k: need(k, "k")?, s: need(s, "s")? },
        FamilyName::Complete => GraphFamily::Complete { n: need(n, "n")? },
        FamilyName::Diamond => match parts[..] {
            [a, b, c, d] => GraphFamily::Diamond { a, b, c, d },
            _ => bail!("diamond needs --parts a,b,c,d"),
        },
    };
    let built = chosen.build()?;
    for w in &built.warnings {
        eprintln!("warning: {w}");
    }
    let g6 = write_graph6(&built.graph);
    Ok(Output::ok(match opts.format {
        Format::Text => format!("{g6}\n"),
        Format::Csv => format!("graph6\n{g6}\n"),
        Format::Json => format!(
            "{}\n",
            serde_json::to_string_pretty(&json!({
                "family": chosen,
                "graph6": g6,
                "order": built.graph.order(),
                "edges": built.graph.edge_count(),
                "bipartition": built.graph.bipartition(),
                "warnings": built.warnings,
            }))?
        ),
    }))
}

fn theorem(out: TheoremOutcome, csv: Option<PathBuf>, opts: &OutputOpts) -> Result<Output> {
    if let Some(path) = csv {
        std::fs::write(&path, rows_to_csv(&out.rows)).with_context(|| format!("writing {}", path.display()))?;
    }
    let failed = !out.report.passed;
    let body = match opts.format {
        Format::Csv => rows_to_csv(&out.rows),
        _ => return reports_output(vec![out.report], opts),
    };
    Ok(Output { body, failed })
}

fn reports_output(reports: Vec<VerificationReport>, opts: &OutputOpts) -> Result<Output> {
    let failed = reports.iter().any(|r| !r.passed);
    let body = match opts.format {
        Format::Text => reports.iter().map(|r| render_report(r, opts.precision as usize)).collect::<Vec<_>>().join("\n"),
        Format::Json if reports.len() == 1 => format!("{}\n", reports[0].to_json()),
        Format::Json => format!("{}\n", serde_json::to_string_pretty(&reports)?),
        Format::Csv => bail!("csv output is only available for radius, checks, construct, enumerate and theorem suites"),
    };
    Ok(Output { body, failed })
}
