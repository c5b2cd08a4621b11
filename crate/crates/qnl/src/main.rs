//! Batch command-line interface: construct graphs and codes, compute
//! distances and spectra, run the verification suites, and emit the
//! independence-number comparison reports.
//!
//! Exit codes: 0 ok, 1 check failure, 2 usage or input error, 3 a search
//! ended budget-limited (bound only).

use clap::{Args, Parser, Subcommand, ValueEnum};
use qnl::boolean::{quadratic_apc_distance, quadratic_epc_distance, Mask, TruthTable};
use qnl::exact::GaussianInt;
use qnl::graph::{
    circulant, clique, nested_clique, random_regular, two_circulant, Graph, NestedCliqueSpec,
    Permutation, SigmaRule,
};
use qnl::io;
use qnl::stabilizer::{bform_reduce, GeneratorMatrix, SearchBudget, WeightKind};
use qnl::verify::Suite;
use std::fmt;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "qnl",
    version,
    about = "Exact toolkit for self-dual stabilizer codes, graph states and boolean spectra"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Construct a graph and write it to a file.
    Graph(GraphCmd),
    /// Convert codes between formats or reduce to standard form.
    Code(CodeCmd),
    /// Distance of a code, graph or truth table.
    Distance(DistanceCmd),
    /// Dump spectra as CSV.
    Spectra(SpectraCmd),
    /// Run verification suites.
    Verify(VerifyCmd),
    /// Compare a graph's independence number against random regular graphs.
    AlphaCompare(AlphaCompareCmd),
}

#[derive(Args)]
struct GraphCmd {
    #[command(subcommand)]
    kind: GraphKind,
}

#[derive(Subcommand)]
enum GraphKind {
    /// Complete graph on t vertices.
    Clique {
        #[arg(long)]
        t: usize,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum, default_value_t = FileFormat::Text)]
        format: FileFormat,
    },
    /// Nested clique [K_t[K_t]].
    NestedClique {
        #[arg(long)]
        t: usize,
        /// "paper-affine", "cyclic", or explicit one-based images like
        /// "2,3,1;1,3,2" in canonical pair order.
        #[arg(long, default_value = "paper-affine")]
        sigma: String,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum, default_value_t = FileFormat::Text)]
        format: FileFormat,
    },
    /// Circulant graph from its first row, e.g. --row 01001.
    Circulant {
        #[arg(long)]
        row: String,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum, default_value_t = FileFormat::Text)]
        format: FileFormat,
    },
    /// Two-block circulant graph [[A, B], [B^T, A]].
    TwoCirculant {
        #[arg(long)]
        a_row: String,
        #[arg(long)]
        b_row: String,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum, default_value_t = FileFormat::Text)]
        format: FileFormat,
    },
    /// Seeded random regular graph.
    RandomRegular {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        degree: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum, default_value_t = FileFormat::Text)]
        format: FileFormat,
    },
}

#[derive(Args)]
struct CodeCmd {
    #[command(subcommand)]
    action: CodeAction,
}

#[derive(Subcommand)]
enum CodeAction {
    /// Reduce a self-dual real code to standard form; writes the graph.
    Bform {
        #[arg(long, value_name = "FILE")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum, default_value_t = FileFormat::Text)]
        format: FileFormat,
    },
    /// Rewrite a code file in another format.
    Convert {
        #[arg(long, value_name = "FILE")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum)]
        to: CodeFormat,
    },
}

#[derive(Args)]
struct DistanceCmd {
    #[arg(long, value_name = "FILE")]
    input: PathBuf,
    #[arg(long, value_enum)]
    kind: DistanceKind,
    /// Highest wt(u) class for the bounded search.
    #[arg(long, default_value_t = 12)]
    max_weight: usize,
    #[arg(long, default_value_t = 10_000_000_000)]
    max_candidates: u64,
    /// Progress note to stderr every this many candidates.
    #[arg(long, default_value_t = 100_000_000)]
    progress_every: u64,
    /// Force full enumeration even when the budget would pick it anyway.
    #[arg(long)]
    exact: bool,
}

#[derive(Args)]
struct SpectraCmd {
    #[arg(long, value_name = "FILE")]
    input: PathBuf,
    #[arg(long, value_enum)]
    transform: TransformKind,
    /// Fixed-axis mask for the mixed transform, as a bit string.
    #[arg(long)]
    mu: Option<String>,
    /// Nega-axis mask for the mixed transform, as a bit string.
    #[arg(long)]
    nega: Option<String>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyCmd {
    /// wk, eq322, eq44, apc-d, epc-db, par-bound, par-alpha, graph-state,
    /// lattice-gap, or all.
    #[arg(long)]
    suite: String,
    /// Largest instance size (capped per suite).
    #[arg(long, default_value_t = 6)]
    n: usize,
    #[arg(long, default_value_t = 20)]
    samples: u32,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Emit JSON reports instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct AlphaCompareCmd {
    #[arg(long, value_name = "FILE")]
    graph: PathBuf,
    #[arg(long, default_value_t = 100)]
    samples: u32,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Label for the CSV rows.
    #[arg(long, default_value = "target")]
    name: String,
    /// Node budget per exact independence-number search.
    #[arg(long, default_value_t = 50_000_000)]
    mis_budget: u64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FileFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum CodeFormat {
    Binary,
    Gf4,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DistanceKind {
    Hamming,
    Binary,
    Apc,
    Epc,
}

#[derive(Clone, Copy, ValueEnum)]
enum TransformKind {
    Wht,
    Ihn,
}

/// Errors that should surface as exit code 2.
#[derive(Debug)]
struct UsageError(String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl std::error::Error for UsageError {}

fn usage(message: impl Into<String>) -> Box<dyn std::error::Error> {
    Box::new(UsageError(message.into()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Box<dyn std::error::Error>> {
    match cli.command {
        Command::Graph(cmd) => run_graph(cmd),
        Command::Code(cmd) => run_code(cmd),
        Command::Distance(cmd) => run_distance(cmd),
        Command::Spectra(cmd) => run_spectra(cmd),
        Command::Verify(cmd) => run_verify(cmd),
        Command::AlphaCompare(cmd) => run_alpha_compare(cmd),
    }
}

fn write_graph(
    g: &Graph,
    out: &Path,
    format: FileFormat,
) -> Result<(), Box<dyn std::error::Error>> {
    let content = match format {
        FileFormat::Text => io::format_graph_text(g),
        FileFormat::Json => io::format_graph_json(g),
    };
    std::fs::write(out, content)?;
    let profile: Vec<String> = g
        .degree_profile()
        .iter()
        .map(|(d, m)| format!("{d}x{m}"))
        .collect();
    println!(
        "n={} edges={} degrees={}",
        g.n(),
        g.edge_count(),
        profile.join(",")
    );
    Ok(())
}

fn parse_sigma(spec: &str, t: usize) -> Result<SigmaRule, Box<dyn std::error::Error>> {
    match spec {
        "paper-affine" => Ok(SigmaRule::PaperAffine),
        "cyclic" => Ok(SigmaRule::Cyclic),
        explicit => {
            let mut perms = Vec::new();
            for part in explicit.split(';') {
                let images: Result<Vec<usize>, _> =
                    part.split(',').map(|s| s.trim().parse::<usize>()).collect();
                let images = images.map_err(|_| usage(format!("invalid permutation {part:?}")))?;
                if images.iter().any(|&i| i == 0 || i > t) {
                    return Err(usage(format!("permutation {part:?} must use 1..={t}")));
                }
                perms.push(Permutation::new(images.iter().map(|&i| i - 1).collect())?);
            }
            Ok(SigmaRule::Explicit(perms))
        }
    }
}

fn parse_row(bits: &str) -> Result<Vec<bool>, Box<dyn std::error::Error>> {
    bits.chars()
        .map(|c| match c {
            '0' => Ok(false),
            '1' => Ok(true),
            other => Err(usage(format!(
                "row must be 0/1 characters, found {other:?}"
            ))),
        })
        .collect()
}

fn run_graph(cmd: GraphCmd) -> Result<ExitCode, Box<dyn std::error::Error>> {
    match cmd.kind {
        GraphKind::Clique { t, out, format } => {
            if t == 0 || t > qnl::graph::MAX_VERTICES {
                return Err(usage(format!(
                    "t must be in 1..={}",
                    qnl::graph::MAX_VERTICES
                )));
            }
            write_graph(&clique(t), &out, format)?;
        }
        GraphKind::NestedClique {
            t,
            sigma,
            out,
            format,
        } => {
            let rule = parse_sigma(&sigma, t)?;
            let spec = NestedCliqueSpec::new(t, rule)?;
            write_graph(&nested_clique(&spec), &out, format)?;
        }
        GraphKind::Circulant { row, out, format } => {
            let g = circulant(&parse_row(&row)?)?;
            write_graph(&g, &out, format)?;
        }
        GraphKind::TwoCirculant {
            a_row,
            b_row,
            out,
            format,
        } => {
            let g = two_circulant(&parse_row(&a_row)?, &parse_row(&b_row)?)?;
            write_graph(&g, &out, format)?;
        }
        GraphKind::RandomRegular {
            n,
            degree,
            seed,
            out,
            format,
        } => {
            let g = random_regular(n, degree, seed)?;
            write_graph(&g, &out, format)?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn load_input(path: &Path) -> Result<io::Input, Box<dyn std::error::Error>> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    Ok(io::parse_input(&text)?)
}

fn run_code(cmd: CodeCmd) -> Result<ExitCode, Box<dyn std::error::Error>> {
    match cmd.action {
        CodeAction::Bform { input, out, format } => {
            let code = match load_input(&input)? {
                io::Input::Code(code) => code,
                io::Input::Graph(g) => GeneratorMatrix::from_graph(&g),
                io::Input::Table(_) => {
                    return Err(usage("standard-form reduction expects a code file"))
                }
            };
            let reduced = bform_reduce(&code)?;
            println!(
                "reduced to standard form in {} moves; n={}",
                reduced.moves().len(),
                reduced.n()
            );
            write_graph(reduced.graph(), &out, format)?;
        }
        CodeAction::Convert { input, out, to } => {
            let code = match load_input(&input)? {
                io::Input::Code(code) => code,
                io::Input::Graph(g) => GeneratorMatrix::from_graph(&g),
                io::Input::Table(_) => return Err(usage("convert expects a code file")),
            };
            let content = match to {
                CodeFormat::Binary => io::format_code_text(&code),
                CodeFormat::Gf4 => io::format_code_gf4(&code),
                CodeFormat::Json => io::format_code_json(&code),
            };
            std::fs::write(&out, content)?;
            println!("wrote n={} k={} to {}", code.n(), code.k(), out.display());
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn run_distance(cmd: DistanceCmd) -> Result<ExitCode, Box<dyn std::error::Error>> {
    let budget = SearchBudget {
        max_weight: cmd.max_weight,
        max_candidates: cmd.max_candidates,
        progress_every: cmd.progress_every,
        ..SearchBudget::default()
    };
    let input = load_input(&cmd.input)?;
    match cmd.kind {
        DistanceKind::Hamming | DistanceKind::Binary => {
            let code = match input {
                io::Input::Code(code) => code,
                io::Input::Graph(g) => GeneratorMatrix::from_graph(&g),
                io::Input::Table(_) => {
                    return Err(usage("code distances need a code or graph input"))
                }
            };
            let kind = if cmd.kind == DistanceKind::Hamming {
                WeightKind::Hamming
            } else {
                WeightKind::Binary
            };
            let result = if cmd.exact {
                code.min_distance_exact(kind)?
            } else {
                code.min_distance(kind, &budget)?
            };
            let label = if cmd.kind == DistanceKind::Hamming {
                "hamming"
            } else {
                "binary"
            };
            println!(
                "{label} distance: {} ({})",
                result.value,
                if result.exact { "exact" } else { "bound only" }
            );
            if let Some(witness) = &result.witness {
                println!("witness: {witness}");
            }
            println!("searched weight classes up to {}", result.searched_weight);
            if !result.exact {
                return Ok(ExitCode::from(3));
            }
        }
        DistanceKind::Apc | DistanceKind::Epc => {
            let label = if cmd.kind == DistanceKind::Apc {
                "apc"
            } else {
                "epc"
            };
            // Prefer the generic pair loop; quadratic inputs beyond its
            // range use the closed form.
            let (value, route) = match &input {
                io::Input::Table(t) => (distance_of_table(t, cmd.kind)?, "pair loop"),
                io::Input::Graph(g) => distance_of_graph(g, cmd.kind)?,
                io::Input::Code(code) => {
                    let reduced = bform_reduce(code)?;
                    distance_of_graph(reduced.graph(), cmd.kind)?
                }
            };
            println!("{label} distance: {value} (exact, {route})");
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn distance_of_table(
    t: &TruthTable,
    kind: DistanceKind,
) -> Result<u32, Box<dyn std::error::Error>> {
    Ok(match kind {
        DistanceKind::Apc => t.apc_distance()?,
        DistanceKind::Epc => t.epc_distance()?,
        _ => unreachable!(),
    })
}

fn distance_of_graph(
    g: &Graph,
    kind: DistanceKind,
) -> Result<(u32, &'static str), Box<dyn std::error::Error>> {
    if g.n() <= qnl::boolean::MAX_PROPAGATION_N {
        let t = TruthTable::from_graph(g)?;
        Ok((distance_of_table(&t, kind)?, "pair loop"))
    } else {
        let value = match kind {
            DistanceKind::Apc => quadratic_apc_distance(g)?,
            DistanceKind::Epc => quadratic_epc_distance(g)?,
            _ => unreachable!(),
        };
        Ok((value, "quadratic closed form"))
    }
}

fn parse_mask(bits: &str, n: usize, name: &str) -> Result<Mask, Box<dyn std::error::Error>> {
    if bits.len() != n {
        return Err(usage(format!("{name} must have exactly {n} bits")));
    }
    let mut word = 0u32;
    for (i, ch) in bits.chars().enumerate() {
        match ch {
            '0' => {}
            '1' => word |= 1 << i,
            other => return Err(usage(format!("{name} must be 0/1, found {other:?}"))),
        }
    }
    Ok(Mask::new(n, word)?)
}

fn run_spectra(cmd: SpectraCmd) -> Result<ExitCode, Box<dyn std::error::Error>> {
    let table = match load_input(&cmd.input)? {
        io::Input::Table(t) => t,
        io::Input::Graph(g) => TruthTable::from_graph(&g)?,
        io::Input::Code(code) => TruthTable::from_graph(bform_reduce(&code)?.graph())?,
    };
    let n = table.n();
    let csv = match cmd.transform {
        TransformKind::Wht => io::spectrum_csv(n, table.wht().into_iter().map(GaussianInt::from)),
        TransformKind::Ihn => {
            let mu = match &cmd.mu {
                Some(bits) => parse_mask(bits, n, "--mu")?,
                None => Mask::zero(n),
            };
            let nega = match &cmd.nega {
                Some(bits) => parse_mask(bits, n, "--nega")?,
                None => Mask::zero(n),
            };
            io::spectrum_csv(n, table.ihn_partial_transform(mu, nega)?)
        }
    };
    match &cmd.out {
        Some(path) => std::fs::write(path, csv)?,
        None => print!("{csv}"),
    }
    Ok(ExitCode::SUCCESS)
}

fn run_verify(cmd: VerifyCmd) -> Result<ExitCode, Box<dyn std::error::Error>> {
    let suites: Vec<Suite> = if cmd.suite == "all" {
        Suite::ALL.to_vec()
    } else {
        vec![Suite::parse(&cmd.suite)
            .ok_or_else(|| usage(format!("unknown suite {:?}", cmd.suite)))?]
    };
    if cmd.suite != "all" && cmd.n > suites[0].max_n() {
        return Err(usage(format!(
            "suite {} supports n <= {}",
            suites[0].name(),
            suites[0].max_n()
        )));
    }
    let mut all_passed = true;
    for suite in suites {
        let report = suite.run(cmd.n, cmd.samples, cmd.seed);
        all_passed &= report.passed();
        if cmd.json {
            println!("{}", serde_json::to_string(&io::report_json(&report))?);
        } else {
            println!("{report}");
        }
    }
    Ok(if all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn run_alpha_compare(cmd: AlphaCompareCmd) -> Result<ExitCode, Box<dyn std::error::Error>> {
    let target = match load_input(&cmd.graph)? {
        io::Input::Graph(g) => g,
        _ => return Err(usage("alpha-compare expects a graph file")),
    };
    let degree = target
        .is_regular()
        .ok_or_else(|| usage("alpha-compare expects a regular graph"))?;
    let n = target.n();
    let (alpha_target, _) = target.independence_number();

    let mut rng = qnl::rng::SplitMix64::new(cmd.seed);
    let mut histogram: std::collections::BTreeMap<usize, u32> = Default::default();
    let mut timeouts = 0u32;
    for _ in 0..cmd.samples {
        let sample_seed = rng.next_u64();
        let g = random_regular(n, degree, sample_seed)?;
        match g.independence_number_budgeted(cmd.mis_budget) {
            Ok((alpha, _)) => *histogram.entry(alpha).or_default() += 1,
            Err(_) => timeouts += 1,
        }
    }

    let mut csv = String::from("name,n,degree,alpha_target,alpha_value,count\n");
    for (alpha, count) in &histogram {
        csv.push_str(&format!(
            "{},{},{},{},{},{}\n",
            cmd.name, n, degree, alpha_target, alpha, count
        ));
    }
    if timeouts > 0 {
        csv.push_str(&format!(
            "{},{},{},{},timeout,{}\n",
            cmd.name, n, degree, alpha_target, timeouts
        ));
    }
    let reference = 2.0 * (degree as f64).ln() / degree as f64 * n as f64;
    csv.push_str(&format!(
        "# reference asymptotic (2 ln d / d) n ~ {reference:.2}\n"
    ));
    match &cmd.out {
        Some(path) => std::fs::write(path, &csv)?,
        None => print!("{csv}"),
    }
    println!(
        "target alpha {} vs {} sampled regular graphs (min sampled {})",
        alpha_target,
        cmd.samples,
        histogram
            .keys()
            .next()
            .map_or("none".to_string(), |a| a.to_string())
    );
    Ok(ExitCode::SUCCESS)
}
