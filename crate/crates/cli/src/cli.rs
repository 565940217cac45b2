use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;

use aldous_core::lr::{self, enumerate_lr_tableaux, minimal_lr_tableau, SkewShape};
use aldous_core::oracle::{
    cayley_laplacian, compare_spectra, rep_block_matrix, symmetric_eigenvalues,
    DEFAULT_COMPARE_TOLERANCE,
};
use aldous_core::partitions::enumerate_partitions;
use aldous_core::spectra::{
    block_spectrum_cached, cayley_spectrum, lambda_max, spectral_gap_cayley_capped,
    spectral_gap_graph, verify_aldous_capped, ProofRoute, DEFAULT_MAX_N,
};
use aldous_core::{AldousReport, Error, LrCache, MultipartiteShape, Partition};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::dump::write_matrix;
use crate::report::{render, spectrum_pairs, AldousJson, SpectrumJson, TableauJson};

#[derive(Debug, Parser)]
#[command(name = "aldous", version, about = "Exact spectra of interchange processes on complete multipartite graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Eigenvalue multiset of the block T^alpha[W(K_eta)]
    Spectrum {
        #[arg(long, value_parser = parse_partition)]
        alpha: Partition,
        #[arg(long, value_parser = parse_partition)]
        eta: Partition,
    },
    /// Largest eigenvalue of the block T^alpha[W(K_eta)]
    Lmax {
        #[arg(long, value_parser = parse_partition)]
        alpha: Partition,
        #[arg(long, value_parser = parse_partition)]
        eta: Partition,
    },
    /// Spectral gaps of K_eta and of its Cayley graph on S_n
    Gap {
        #[arg(long, value_parser = parse_partition)]
        eta: Partition,
        #[command(flatten)]
        cap: SweepCap,
    },
    /// Check that both spectral gaps agree, for one shape or a batch file
    Aldous {
        #[arg(long, value_parser = parse_partition, required_unless_present = "batch", conflicts_with = "batch")]
        eta: Option<Partition>,
        /// File with one shape per line; blank lines and `#` comments are skipped
        #[arg(long, value_name = "FILE")]
        batch: Option<PathBuf>,
        #[command(flatten)]
        cap: SweepCap,
    },
    /// Littlewood-Richardson coefficient c^alpha_{beta,gamma}
    LrCoeff {
        #[arg(long, value_parser = parse_partition)]
        alpha: Partition,
        #[arg(long, value_parser = parse_partition)]
        beta: Partition,
        #[arg(long, value_parser = parse_partition)]
        gamma: Partition,
    },
    /// All LR tableaux of shape alpha/beta, optionally of one content
    LrTableaux {
        #[arg(long, value_parser = parse_partition)]
        alpha: Partition,
        #[arg(long, value_parser = parse_partition)]
        beta: Partition,
        #[arg(long, value_parser = parse_partition)]
        gamma: Option<Partition>,
    },
    /// Dominance-minimal content of LR tableaux of shape alpha/beta
    MinimalContent {
        #[arg(long, value_parser = parse_partition)]
        alpha: Partition,
        #[arg(long, value_parser = parse_partition)]
        beta: Partition,
    },
    /// Compare exact spectra against explicitly built matrices
    OracleCheck {
        #[arg(long, value_parser = parse_partition)]
        eta: Partition,
        /// Check only this block instead of every alpha
        #[arg(long, value_parser = parse_partition)]
        alpha: Option<Partition>,
        /// Accept n = 7 for the 5040 x 5040 Cayley Laplacian
        #[arg(long)]
        allow_n7: bool,
        /// Check the blocks only and skip the Cayley Laplacian
        #[arg(long)]
        skip_cayley: bool,
        #[arg(long, default_value_t = DEFAULT_COMPARE_TOLERANCE, value_parser = parse_tolerance)]
        tolerance: f64,
        /// Write the Cayley Laplacian (or the --alpha block) as a binary dump
        #[arg(long, value_name = "FILE")]
        dump: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, Args)]
pub struct SweepCap {
    /// Largest n swept over every alpha
    #[arg(long, default_value_t = DEFAULT_MAX_N)]
    pub max_n: usize,
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse::<Partition>().map_err(|e| e.to_string())
}

fn parse_tolerance(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(t) if t >= 0.0 => Ok(t),
        _ => Err(format!("'{s}' is not a nonnegative number")),
    }
}

/// Result of one invocation, mapped to exit statuses 0, 1 and 2.
#[derive(Debug, PartialEq, Eq)]
pub enum Outcome {
    Success,
    CheckFailed(String),
    Usage(String),
}

impl Outcome {
    pub fn exit_code(&self) -> u8 {
        match self {
            Outcome::Success => 0,
            Outcome::CheckFailed(_) => 1,
            Outcome::Usage(_) => 2,
        }
    }
}

enum Failure {
    Check(String),
    Usage(String),
    /// The reader went away; nothing left to report.
    Closed,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NoConvergence { .. } => Failure::Check(e.to_string()),
            Error::CapExceeded { what, value, cap } => {
                Failure::Usage(format!("{what} = {value} exceeds the cap of {cap}"))
            }
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        if e.kind() == io::ErrorKind::BrokenPipe {
            return Failure::Closed;
        }
        Failure::Usage(e.to_string())
    }
}

type Run = Result<(), Failure>;

pub fn run(cli: &Cli, out: &mut dyn Write) -> Outcome {
    match dispatch(cli, out) {
        Ok(()) | Err(Failure::Closed) => Outcome::Success,
        Err(Failure::Check(m)) => Outcome::CheckFailed(m),
        Err(Failure::Usage(m)) => Outcome::Usage(m),
    }
}

fn shape_of(eta: &Partition) -> Result<MultipartiteShape, Failure> {
    MultipartiteShape::new(eta.clone()).map_err(|e| Failure::Usage(format!("--eta: {e}")))
}

fn same_size(alpha: &Partition, eta: &Partition) -> Run {
    if alpha.size() != eta.size() {
        return Err(Failure::Usage(format!(
            "--alpha {alpha} has size {} but --eta {eta} has size {}",
            alpha.size(),
            eta.size()
        )));
    }
    Ok(())
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Run {
    let json = cli.format == Format::Json;
    match &cli.command {
        Command::Spectrum { alpha, eta } => {
            same_size(alpha, eta)?;
            let s = block_spectrum_cached(&mut LrCache::new(), alpha, &shape_of(eta)?)?;
            if json {
                out.write_all(render(&SpectrumJson::new(alpha, eta, &s)).as_bytes())?;
            } else {
                for (l, m) in s.iter() {
                    writeln!(out, "{l} {m}")?;
                }
            }
        }
        Command::Lmax { alpha, eta } => {
            same_size(alpha, eta)?;
            let l = lambda_max(alpha, &shape_of(eta)?)?;
            if json {
                let v = json!({ "alpha": alpha.to_vec(), "eta": eta.to_vec(), "lambda_max": l.to_string() });
                out.write_all(render(&v).as_bytes())?;
            } else {
                writeln!(out, "{l}")?;
            }
        }
        Command::Gap { eta, cap } => {
            let shape = shape_of(eta)?;
            let graph = spectral_gap_graph(&shape)?;
            let cayley = spectral_gap_cayley_capped(&shape, cap.max_n)?;
            if json {
                let v = json!({
                    "eta": eta.to_vec(),
                    "gap_graph": graph.to_string(),
                    "gap_cayley": cayley.to_string(),
                });
                out.write_all(render(&v).as_bytes())?;
            } else {
                writeln!(out, "graph {graph}\ncayley {cayley}")?;
            }
        }
        Command::Aldous { eta, batch, cap } => {
            let shapes = match (eta, batch) {
                (Some(eta), _) => vec![eta.clone()],
                (None, Some(path)) => read_batch(path)?,
                (None, None) => return Err(Failure::Usage("either --eta or --batch is required".into())),
            };
            let mut reports = Vec::with_capacity(shapes.len());
            for eta in &shapes {
                reports.push(verify_aldous_capped(&shape_of(eta)?, cap.max_n)?);
            }
            if json {
                let docs: Vec<AldousJson> = reports.iter().map(AldousJson::from).collect();
                if batch.is_some() {
                    out.write_all(render(&docs).as_bytes())?;
                } else {
                    out.write_all(render(&docs[0]).as_bytes())?;
                }
            } else {
                for (i, r) in reports.iter().enumerate() {
                    if i > 0 {
                        writeln!(out)?;
                    }
                    out.write_all(aldous_text(r).as_bytes())?;
                }
            }
            let failing: Vec<String> =
                reports.iter().filter(|r| !r.verdict).map(|r| r.shape.eta().to_string()).collect();
            if !failing.is_empty() {
                return Err(Failure::Check(format!("gaps differ for eta = {}", failing.join("; "))));
            }
        }
        Command::LrCoeff { alpha, beta, gamma } => {
            if beta.size() + gamma.size() != alpha.size() {
                return Err(Failure::Usage(format!(
                    "--beta and --gamma sizes ({} + {}) must add up to the size of --alpha ({})",
                    beta.size(),
                    gamma.size(),
                    alpha.size()
                )));
            }
            let c = lr::lr_coefficient(alpha, beta, gamma)?;
            if json {
                let v = json!({
                    "alpha": alpha.to_vec(), "beta": beta.to_vec(), "gamma": gamma.to_vec(),
                    "coefficient": c.to_string(),
                });
                out.write_all(render(&v).as_bytes())?;
            } else {
                writeln!(out, "{c}")?;
            }
        }
        Command::LrTableaux { alpha, beta, gamma } => {
            let shape = SkewShape::new(alpha.clone(), beta.clone())
                .map_err(|e| Failure::Usage(format!("--alpha/--beta: {e}")))?;
            let all = enumerate_lr_tableaux(&shape, gamma.as_ref());
            if json {
                let docs: Vec<TableauJson> = all.iter().map(TableauJson::from).collect();
                out.write_all(render(&docs).as_bytes())?;
            } else {
                for (i, t) in all.iter().enumerate() {
                    if i > 0 {
                        writeln!(out)?;
                    }
                    writeln!(out, "{t}\ncontent {}", t.content())?;
                }
            }
        }
        Command::MinimalContent { alpha, beta } => {
            let gamma = lr::minimal_content(alpha, beta)?;
            let t = minimal_lr_tableau(alpha, beta)?;
            if json {
                let v = json!({
                    "alpha": alpha.to_vec(), "beta": beta.to_vec(), "content": gamma.to_vec(),
                    "tableau": TableauJson::from(&t),
                });
                out.write_all(render(&v).as_bytes())?;
            } else {
                writeln!(out, "{gamma}\n{t}")?;
            }
        }
        Command::OracleCheck { eta, alpha, allow_n7, skip_cayley, tolerance, dump } => {
            oracle_check(out, json, eta, alpha.as_ref(), *allow_n7, *skip_cayley, *tolerance, dump.as_ref())?;
        }
    }
    Ok(())
}

fn read_batch(path: &PathBuf) -> Result<Vec<Partition>, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("--batch {}: {e}", path.display())))?;
    let mut shapes = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let eta = line
            .parse::<Partition>()
            .map_err(|e| Failure::Usage(format!("--batch {} line {}: {e}", path.display(), i + 1)))?;
        shapes.push(eta);
    }
    if shapes.is_empty() {
        return Err(Failure::Usage(format!("--batch {}: no shapes", path.display())));
    }
    Ok(shapes)
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn aldous_text(r: &AldousReport) -> String {
    let mut s = String::new();
    let argmax: Vec<String> = r.argmax.iter().map(|a| a.to_string()).collect();
    let _ = writeln!(s, "eta {}", r.shape.eta());
    let _ = writeln!(s, "n {}", r.n());
    let _ = writeln!(s, "edges {}", r.edge_count());
    let _ = writeln!(s, "gap_graph {}", r.gap_graph);
    let _ = writeln!(s, "gap_cayley {}", r.gap_cayley);
    let _ = writeln!(s, "argmax {}", argmax.join(" "));
    let _ = match r.route {
        ProofRoute::CompleteGraph { holds } => writeln!(s, "route complete-graph q-monotone {}", yes(holds)),
        ProofRoute::Relaxation { b_le_bbar, bbar_le_hook, hook_equal } => writeln!(
            s,
            "route relaxation b<=bbar {} bbar<=bbar(n-1,1) {} bbar(n-1,1)=b(n-1,1) {}",
            yes(b_le_bbar),
            yes(bbar_le_hook),
            yes(hook_equal)
        ),
    };
    let _ = writeln!(s, "verdict {}", r.verdict);
    for a in &r.per_alpha {
        let spectrum: Vec<String> = a.spectrum.iter().map(|(l, m)| format!("{l}:{m}")).collect();
        let _ = writeln!(s, "block {} lambda_max {} spectrum {}", a.alpha, a.lambda_max, spectrum.join(" "));
    }
    s
}

#[allow(clippy::too_many_arguments)]
fn oracle_check(
    out: &mut dyn Write,
    json: bool,
    eta: &Partition,
    only: Option<&Partition>,
    allow_n7: bool,
    skip_cayley: bool,
    tolerance: f64,
    dump: Option<&PathBuf>,
) -> Run {
    let shape = shape_of(eta)?;
    let n = shape.n();
    if let Some(alpha) = only {
        same_size(alpha, eta)?;
    }
    let alphas = match only {
        Some(a) => vec![a.clone()],
        None => enumerate_partitions(n),
    };
    let mut cache = LrCache::new();
    let mut rows = Vec::new();
    let mut all_passed = true;
    for alpha in &alphas {
        let m = rep_block_matrix(alpha, &shape)?;
        let exact = block_spectrum_cached(&mut cache, alpha, &shape)?;
        let cmp = compare_spectra(&exact, &symmetric_eigenvalues(&m)?, tolerance)?;
        all_passed &= cmp.passed;
        rows.push((format!("block {alpha}"), alpha.to_vec(), cmp.passed, cmp.worst_deviation, spectrum_pairs(&exact)));
        if let (Some(path), Some(_)) = (dump, only) {
            write_matrix(io::BufWriter::new(fs::File::create(path)?), &m)?;
        }
    }
    if !skip_cayley {
        let m = cayley_laplacian(&shape, allow_n7).map_err(|e| match e {
            Error::CapExceeded { value, cap, .. } => Failure::Usage(format!(
                "n = {value} exceeds the Cayley Laplacian cap of {cap} (pass --allow-n7 for n = 7, or --skip-cayley)"
            )),
            other => other.into(),
        })?;
        let exact = cayley_spectrum(&shape)?;
        let cmp = compare_spectra(&exact, &symmetric_eigenvalues(&m)?, tolerance)?;
        all_passed &= cmp.passed;
        rows.push(("cayley".to_string(), Vec::new(), cmp.passed, cmp.worst_deviation, spectrum_pairs(&exact)));
        if let (Some(path), None) = (dump, only) {
            write_matrix(io::BufWriter::new(fs::File::create(path)?), &m)?;
        }
    }
    if json {
        let checks: Vec<_> = rows
            .iter()
            .map(|(label, alpha, passed, dev, spectrum)| {
                json!({
                    "check": if alpha.is_empty() { "cayley" } else { "block" },
                    "alpha": alpha,
                    "passed": passed,
                    "worst_deviation": format!("{dev:.3e}"),
                    "spectrum": spectrum,
                    "label": label,
                })
            })
            .collect();
        let v = json!({
            "eta": eta.to_vec(),
            "tolerance": format!("{tolerance:e}"),
            "passed": all_passed,
            "checks": checks,
        });
        out.write_all(render(&v).as_bytes())?;
    } else {
        for (label, _, passed, dev, _) in &rows {
            writeln!(out, "{label} {} deviation {dev:.3e}", if *passed { "PASS" } else { "FAIL" })?;
        }
        writeln!(out, "{}", if all_passed { "all checks passed" } else { "some checks failed" })?;
    }
    if all_passed {
        Ok(())
    } else {
        Err(Failure::Check(format!("numerical spectra differ beyond {tolerance:e}")))
    }
}
