//! Command-line front end: exact invariants, graph constructors, products,
//! bound reports, family recognition, the hardness-reduction demo, corpus
//! enumeration, and theorem-checking campaigns.
//!
//! Exit codes: 0 all checks passed, 1 a verification failed, 2 usage or
//! input error.

use clap::{Parser, Subcommand};
use serde::Serialize;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use superdom_core::error::Error;
use superdom_core::formulas;
use superdom_core::graph::Graph;
use superdom_core::harness::{
    self, CorpusFilter, ReportFormat, TheoremId, VerifyParams, ALL_THEOREMS,
};
use superdom_core::products;
use superdom_core::solvers::{self, Witness};

#[derive(Parser)]
#[command(
    name = "superdom",
    version,
    about = "Exact super domination numbers of small graphs, with product formulas and exhaustive theorem checks"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compute one invariant of a graph (graph6 or edge-list file; `-` for stdin).
    Compute {
        /// gamma | gamma_sp | gamma_sp_oracle | alpha | alpha_2 | alpha_k | tau | rho
        invariant: String,
        /// Path to the graph file.
        graph: PathBuf,
        /// Degree bound parameter for alpha_k.
        #[arg(long)]
        k: Option<usize>,
    },
    /// Emit a standard graph as graph6.
    Construct {
        /// path | cycle | complete | empty | complete_bipartite |
        /// complete_multipartite | corona_k1 | disjoint_union
        kind: String,
        /// Size parameters (disjoint_union takes complete-component orders).
        sizes: Vec<usize>,
        /// Write to a file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build a lexicographic product or join; prints graph6 plus the
    /// coordinate map as JSON.
    Product {
        #[command(subcommand)]
        op: ProductCmd,
    },
    /// Every applicable bound and formula for a product or join instance.
    Bounds {
        g: PathBuf,
        h: PathBuf,
        /// lex | join
        #[arg(long, default_value = "lex")]
        op: String,
        /// Solve for the exact value when the instance has at most this many vertices.
        #[arg(long, default_value_t = 24)]
        exact_cap: usize,
    },
    /// Recognize or construct members of the gamma_sp = n-1 family.
    #[command(name = "family-f")]
    FamilyF {
        #[command(subcommand)]
        op: FamilyCmd,
    },
    /// Recover the independence number from one product super domination value.
    ReduceAlpha { g: PathBuf },
    /// Print every labeled graph on n vertices, one graph6 line each.
    Enumerate {
        n: usize,
        /// all | connected | isolate-free
        #[arg(long, default_value = "all")]
        filter: String,
    },
    /// Run one theorem check over its default corpus, or over a graph6 file.
    Verify {
        /// Theorem id (see list-theorems).
        theorem: String,
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        /// Check a graph6 file (one graph per line) instead of the default
        /// enumeration; single-graph checks only.
        #[arg(long)]
        corpus: Option<PathBuf>,
        /// Filter for --corpus: all | connected | isolate-free
        #[arg(long, default_value = "all")]
        filter: String,
    },
    /// Run every theorem check and emit a report.
    Campaign {
        /// Run the full suite (default when --only is absent).
        #[arg(long)]
        all: bool,
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        /// Comma-separated theorem ids to run instead of the full suite.
        #[arg(long, conflicts_with = "all")]
        only: Option<String>,
        /// json | csv | markdown
        #[arg(long, default_value = "json")]
        format: String,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Zero out elapsed-time fields so runs compare byte-for-byte.
        #[arg(long)]
        no_timing: bool,
    },
    /// List every theorem id with the statement its check asserts.
    ListTheorems,
}

#[derive(Subcommand)]
enum ProductCmd {
    /// G o H (uniform when one H is given, per-copy when g.n are given).
    Lex { g: PathBuf, hs: Vec<PathBuf> },
    /// G + H.
    Join { g: PathBuf, h: PathBuf },
}

#[derive(Subcommand)]
enum FamilyCmd {
    /// Test membership; prints the layer decomposition when accepted.
    Recognize { graph: PathBuf },
    /// Build a member from layer sizes.
    Construct {
        /// Clique layer sizes, comma separated (e.g. 2,2).
        #[arg(long, value_delimiter = ',')]
        cliques: Vec<usize>,
        /// Empty layer sizes, comma separated; may be one shorter.
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        empties: Vec<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn read_graph(path: &Path) -> Result<Graph, Error> {
    let text = if path.as_os_str() == "-" {
        std::io::read_to_string(std::io::stdin())?
    } else {
        std::fs::read_to_string(path)?
    };
    Graph::parse_auto(&text)
}

#[derive(Serialize)]
struct ComputeOut<'a> {
    name: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    k: Option<usize>,
    value: usize,
    witness: &'a Witness,
    elapsed_ms: u64,
}

#[derive(Serialize)]
struct ProductOut<'a> {
    graph6: String,
    g_order: usize,
    h_orders: &'a [usize],
    offsets: &'a [usize],
}

#[derive(Serialize)]
struct RecognizeOut {
    member: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    k_prime: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    cliques: Option<Vec<Vec<usize>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    empties: Option<Vec<Vec<usize>>>,
}

fn emit(out: &Option<PathBuf>, content: &str) -> Result<(), Error> {
    match out {
        Some(path) => std::fs::write(path, content)?,
        None => print!("{content}"),
    }
    Ok(())
}

fn run() -> Result<ExitCode, Error> {
    match Cli::parse().cmd {
        Cmd::Compute {
            invariant,
            graph,
            k,
        } => {
            let g = read_graph(&graph)?;
            let started = Instant::now();
            let solved = match invariant.as_str() {
                "gamma" => solvers::gamma(&g),
                "gamma_sp" => solvers::gamma_sp(&g),
                "gamma_sp_oracle" => solvers::gamma_sp_oracle(&g)?,
                "alpha" => solvers::alpha(&g),
                "alpha_2" => solvers::alpha_2(&g),
                "alpha_k" => {
                    let k =
                        k.ok_or_else(|| Error::InvalidArgument("alpha_k needs --k <K>".into()))?;
                    solvers::alpha_k(&g, k)?
                }
                "tau" => solvers::tau(&g),
                "rho" => solvers::rho(&g),
                other => {
                    return Err(Error::InvalidArgument(format!(
                        "unknown invariant `{other}`"
                    )))
                }
            };
            let out = ComputeOut {
                name: solved.name.as_str(),
                k: solved.k,
                value: solved.value,
                witness: &solved.witness,
                elapsed_ms: started.elapsed().as_millis() as u64,
            };
            println!(
                "{}",
                serde_json::to_string_pretty(&out).expect("serializes")
            );
            Ok(ExitCode::SUCCESS)
        }

        Cmd::Construct { kind, sizes, out } => {
            let g = construct_graph(&kind, &sizes)?;
            emit(&out, &format!("{}\n", g.to_graph6()))?;
            Ok(ExitCode::SUCCESS)
        }

        Cmd::Product { op } => {
            let product = match op {
                ProductCmd::Lex { g, hs } => {
                    if hs.is_empty() {
                        return Err(Error::InvalidArgument(
                            "product lex needs at least one H".into(),
                        ));
                    }
                    let g = read_graph(&g)?;
                    let hs = hs
                        .iter()
                        .map(|p| read_graph(p))
                        .collect::<Result<Vec<_>, _>>()?;
                    products::lex_product(&g, &hs)?
                }
                ProductCmd::Join { g, h } => products::join(&read_graph(&g)?, &read_graph(&h)?)?,
            };
            let out = ProductOut {
                graph6: product.base().to_graph6(),
                g_order: product.g_order(),
                h_orders: product.h_orders(),
                offsets: product.offsets(),
            };
            println!(
                "{}",
                serde_json::to_string_pretty(&out).expect("serializes")
            );
            Ok(ExitCode::SUCCESS)
        }

        Cmd::Bounds {
            g,
            h,
            op,
            exact_cap,
        } => {
            let g = read_graph(&g)?;
            let h = read_graph(&h)?;
            let report = match op.as_str() {
                "lex" => formulas::bound_report_lex(&g, &h, exact_cap)?,
                "join" => formulas::bound_report_join(&g, &h, exact_cap)?,
                other => {
                    return Err(Error::InvalidArgument(format!(
                        "unknown product op `{other}` (lex | join)"
                    )))
                }
            };
            println!(
                "{}",
                serde_json::to_string_pretty(&report).expect("serializes")
            );
            Ok(ExitCode::SUCCESS)
        }

        Cmd::FamilyF { op } => match op {
            FamilyCmd::Recognize { graph } => {
                let g = read_graph(&graph)?;
                let out = match superdom_core::family::recognize(&g)? {
                    Some(dec) => RecognizeOut {
                        member: true,
                        k: Some(dec.k()),
                        k_prime: Some(dec.k_prime()),
                        cliques: Some(dec.cliques.iter().map(|s| s.to_vec()).collect()),
                        empties: Some(dec.empties.iter().map(|s| s.to_vec()).collect()),
                    },
                    None => RecognizeOut {
                        member: false,
                        k: None,
                        k_prime: None,
                        cliques: None,
                        empties: None,
                    },
                };
                println!(
                    "{}",
                    serde_json::to_string_pretty(&out).expect("serializes")
                );
                Ok(ExitCode::SUCCESS)
            }
            FamilyCmd::Construct {
                cliques,
                empties,
                out,
            } => {
                let g = superdom_core::family::construct_f(&cliques, &empties)?;
                emit(&out, &format!("{}\n", g.to_graph6()))?;
                Ok(ExitCode::SUCCESS)
            }
        },

        Cmd::ReduceAlpha { g } => {
            let g = read_graph(&g)?;
            let trace = formulas::alpha_via_reduction(&g)?;
            println!(
                "{}",
                serde_json::to_string_pretty(&trace).expect("serializes")
            );
            Ok(ExitCode::SUCCESS)
        }

        Cmd::Enumerate { n, filter } => {
            let filter = CorpusFilter::parse(&filter)?;
            if n > harness::ENUMERATION_CAP {
                return Err(Error::InvalidArgument(format!(
                    "enumeration capped at n = {}",
                    harness::ENUMERATION_CAP
                )));
            }
            let stdout = std::io::stdout();
            let mut w = std::io::BufWriter::new(stdout.lock());
            let pairs = n * n.saturating_sub(1) / 2;
            for mask in 0..(1u64 << pairs) {
                let g = harness::graph_from_edge_mask(n, mask);
                if filter.keep(&g) {
                    writeln!(w, "{}", g.to_graph6())?;
                }
            }
            w.flush()?;
            Ok(ExitCode::SUCCESS)
        }

        Cmd::Verify {
            theorem,
            max_n,
            corpus,
            filter,
        } => {
            let id = TheoremId::parse(&theorem)?;
            let check = match corpus {
                Some(path) => {
                    if !id.takes_single_graph_corpus() {
                        return Err(Error::InvalidArgument(format!(
                            "`{}` runs over pair sweeps; --corpus applies to single-graph checks",
                            id.as_str()
                        )));
                    }
                    let text = std::fs::read_to_string(&path)?;
                    let corpus = harness::Corpus::from_graph6_text(
                        path.display().to_string(),
                        &text,
                        CorpusFilter::parse(&filter)?,
                    )?;
                    harness::verify_single(id, &corpus)
                }
                None => harness::verify(id, &VerifyParams::for_max_n(max_n))?,
            };
            println!(
                "{}",
                serde_json::to_string_pretty(&check).expect("serializes")
            );
            Ok(if check.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }

        Cmd::Campaign {
            all: _,
            max_n,
            only,
            format,
            out,
            no_timing,
        } => {
            let format = ReportFormat::parse(&format)?;
            let params = VerifyParams::for_max_n(max_n);
            let include_timing = !no_timing;
            let (content, passed) = match only {
                None => {
                    let campaign = harness::run_campaign(&params)?;
                    let content = match format {
                        ReportFormat::Json => harness::campaign_json(&campaign, include_timing),
                        other => harness::report(&campaign.checks, other, include_timing),
                    };
                    (content, campaign.passed())
                }
                Some(list) => {
                    let mut checks = Vec::new();
                    for name in list.split(',') {
                        let id = TheoremId::parse(name.trim())?;
                        checks.push(harness::verify(id, &params)?);
                    }
                    let passed = checks.iter().all(|c| c.passed());
                    (harness::report(&checks, format, include_timing), passed)
                }
            };
            emit(&out, &content)?;
            Ok(if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }

        Cmd::ListTheorems => {
            let stdout = std::io::stdout();
            let mut w = std::io::BufWriter::new(stdout.lock());
            for id in ALL_THEOREMS {
                writeln!(w, "{:<22} {}", id.as_str(), id.statement())?;
            }
            w.flush()?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn construct_graph(kind: &str, sizes: &[usize]) -> Result<Graph, Error> {
    let one = |what: &str| -> Result<usize, Error> {
        match sizes {
            [s] => Ok(*s),
            _ => Err(Error::InvalidArgument(format!(
                "{what} takes exactly one size, got {}",
                sizes.len()
            ))),
        }
    };
    match kind {
        "path" => Graph::path(one("path")?),
        "cycle" => Graph::cycle(one("cycle")?),
        "complete" => Graph::complete(one("complete")?),
        "empty" => Graph::edgeless(one("empty")?),
        "complete_bipartite" => match sizes {
            [r, t] => Graph::complete_bipartite(*r, *t),
            _ => Err(Error::InvalidArgument(
                "complete_bipartite takes two sizes".into(),
            )),
        },
        "complete_multipartite" => Graph::complete_multipartite(sizes),
        "corona_k1" => Graph::corona_k1(one("corona_k1")?),
        "disjoint_union" => {
            if sizes.is_empty() {
                return Err(Error::InvalidArgument(
                    "disjoint_union takes at least one complete-component order".into(),
                ));
            }
            let pieces = sizes
                .iter()
                .map(|&s| Graph::complete(s))
                .collect::<Result<Vec<_>, _>>()?;
            Graph::disjoint_union(&pieces)
        }
        other => Err(Error::InvalidArgument(format!(
            "unknown construct kind `{other}`"
        ))),
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        // a closed pipe downstream (e.g. `| head`) is not our error
        Err(Error::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
