use std::fs;
use std::io::{self, Read, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use apexforest::canon::canonical_form;
use apexforest::catalog::{build_catalog, lookup, ExportFormat};
use apexforest::codec::{
    decode_graph6_str, encode_graph6, parse_edge_list, parse_graphs, write_dot, write_edge_list,
};
use apexforest::decomposition::{
    block_vertex_sets, cut_vertices, triconnected_components, wheel_certificate,
};
use apexforest::graph::Graph;
use apexforest::minors::{
    contains_any_minor, contains_minor, contains_topological_minor, MinorEmbedding,
};
use apexforest::recognition::{apex_vertex, is_pseudoforest, ClassPredicate};
use apexforest::verify::{
    obstructions_among, search_obstructions, verify_catalog, CatalogVerifyOptions, SearchMode,
};

/// Largest size searched without `--allow-ten`.
const DEFAULT_MAX_SEARCH: usize = 9;

#[derive(Parser)]
#[command(
    name = "apexforest",
    version,
    about = "Pseudoforest and apex-pseudoforest minor toolkit"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Class membership for each input graph.
    Check {
        #[arg(long, value_enum)]
        class: Class,
        /// File of graph6 lines or one edge-list block; `-` reads stdin.
        #[arg(long, default_value = "-")]
        input: String,
        /// For non-members, print an obstruction minor with its branch sets.
        #[arg(long)]
        witness: bool,
    },
    /// Minor or topological-minor containment.
    Minor {
        /// graph6 string, or `-` for one graph on stdin.
        #[arg(long)]
        host: String,
        /// graph6 string or catalog name such as `O3_2`.
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        topological: bool,
        #[arg(long)]
        witness: bool,
    },
    /// Decomposition of each input graph as one JSON object per line.
    Decompose {
        #[arg(long, value_enum)]
        mode: DecomposeMode,
        #[arg(long, default_value = "-")]
        input: String,
    },
    /// The 33-graph obstruction catalog.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Check the catalog invariants; exit 0 only if all pass.
    VerifyCatalog {
        #[arg(long)]
        equivalence_n: Option<usize>,
        #[arg(long)]
        search_n: Option<usize>,
        /// Skip obvious non-obstructions in the connected search.
        #[arg(long)]
        pruned: bool,
        /// Print `CHECK <name> PASS|FAIL` lines only.
        #[arg(long)]
        machine: bool,
        #[command(flatten)]
        jobs: Jobs,
    },
    /// Minor-minimal non-members, one graph6 line each.
    SearchObstructions {
        #[arg(long, value_enum)]
        class: Class,
        #[arg(long, required_unless_present = "input")]
        max_n: Option<usize>,
        #[arg(long)]
        connected: bool,
        #[arg(long)]
        pruned: bool,
        /// Permit `--max-n 10`, which takes far longer.
        #[arg(long)]
        allow_ten: bool,
        /// Test only the graphs in this stream instead of enumerating.
        #[arg(long, conflicts_with = "max_n")]
        input: Option<String>,
        #[command(flatten)]
        jobs: Jobs,
    },
    /// Re-encode graphs between formats.
    Convert {
        #[arg(long, value_enum, default_value = "auto")]
        from: InFormat,
        #[arg(long, value_enum)]
        to: OutFormat,
        #[arg(long, default_value = "-")]
        input: String,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    Export {
        #[arg(long, default_value = "g6")]
        format: ExportFormat,
    },
}

#[derive(Args)]
struct Jobs {
    /// Worker threads; defaults to the number of cores.
    #[arg(long)]
    jobs: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Class {
    Pseudoforest,
    ApexPseudoforest,
}

impl Class {
    fn predicate(self) -> ClassPredicate {
        match self {
            Class::Pseudoforest => ClassPredicate::pseudoforest(),
            Class::ApexPseudoforest => ClassPredicate::apex_pseudoforest(),
        }
    }

    fn obstructions(self) -> Vec<(String, Graph)> {
        match self {
            Class::Pseudoforest => vec![
                ("diamond".to_string(), Graph::diamond()),
                ("butterfly".to_string(), Graph::butterfly()),
            ],
            Class::ApexPseudoforest => build_catalog()
                .entries
                .into_iter()
                .map(|e| (e.name, e.graph))
                .collect(),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum DecomposeMode {
    Blocks,
    Triconnected,
    WheelCertificate,
}

#[derive(Clone, Copy, ValueEnum)]
enum InFormat {
    Auto,
    G6,
    Edges,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    G6,
    Edges,
    Dot,
}

type Outcome = Result<ExitCode, String>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("apexforest: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cmd: Command) -> Outcome {
    match cmd {
        Command::Check {
            class,
            input,
            witness,
        } => check(class, &input, witness),
        Command::Minor {
            host,
            pattern,
            topological,
            witness,
        } => minor(&host, &pattern, topological, witness),
        Command::Decompose { mode, input } => decompose(mode, &input),
        Command::Catalog {
            action: CatalogAction::Export { format },
        } => {
            print!("{}", build_catalog().export(format));
            Ok(ExitCode::SUCCESS)
        }
        Command::VerifyCatalog {
            equivalence_n,
            search_n,
            pruned,
            machine,
            jobs,
        } => with_jobs(jobs, || {
            let opts = CatalogVerifyOptions {
                equivalence_n,
                search_n,
                search_mode: mode(pruned),
            };
            let report = verify_catalog(&build_catalog(), &opts).map_err(|e| e.to_string())?;
            if machine {
                print!("{}", report.machine_lines());
            } else {
                println!("{report}");
            }
            Ok(verdict(report.all_passed()))
        }),
        Command::SearchObstructions {
            class,
            max_n,
            connected,
            pruned,
            allow_ten,
            input,
            jobs,
        } => with_jobs(jobs, || {
            let cls = class.predicate();
            let found = match (input, max_n) {
                (Some(path), _) => obstructions_among(&read_graphs(&path)?, &cls),
                (None, Some(n)) => {
                    if n > DEFAULT_MAX_SEARCH && !allow_ten {
                        return Err(format!("--max-n {n} needs --allow-ten"));
                    }
                    search_obstructions(&cls, n, connected, mode(pruned))
                }
                (None, None) => unreachable!("clap requires one of them"),
            }
            .map_err(|e| e.to_string())?;
            let mut out = io::stdout().lock();
            for f in found {
                writeln!(out, "{}", encode_graph6(&f.to_graph())).map_err(|e| e.to_string())?;
            }
            Ok(ExitCode::SUCCESS)
        }),
        Command::Convert { from, to, input } => {
            let text = read_input(&input)?;
            let graphs = match from {
                InFormat::Auto => parse_graphs(&text).map_err(|e| e.to_string())?,
                InFormat::G6 => text
                    .lines()
                    .map(str::trim)
                    .filter(|l| !l.is_empty())
                    .enumerate()
                    .map(|(i, l)| decode_graph6_str(l).map_err(|e| format!("graph {}: {e}", i + 1)))
                    .collect::<Result<_, _>>()?,
                InFormat::Edges => vec![parse_edge_list(&text).map_err(|e| e.to_string())?],
            };
            let mut out = io::stdout().lock();
            for (i, g) in graphs.iter().enumerate() {
                let s = match to {
                    OutFormat::G6 => encode_graph6(g) + "\n",
                    OutFormat::Edges => write_edge_list(g),
                    OutFormat::Dot => write_dot(g, &format!("G{i}")),
                };
                out.write_all(s.as_bytes()).map_err(|e| e.to_string())?;
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn mode(pruned: bool) -> SearchMode {
    if pruned {
        SearchMode::Pruned
    } else {
        SearchMode::Exhaustive
    }
}

fn verdict(yes: bool) -> ExitCode {
    if yes {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn with_jobs(jobs: Jobs, f: impl FnOnce() -> Outcome + Send) -> Outcome {
    match jobs.jobs {
        None => f(),
        Some(0) => Err("--jobs must be at least 1".to_string()),
        Some(k) => rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build()
            .map_err(|e| e.to_string())?
            .install(f),
    }
}

fn read_input(path: &str) -> Result<String, String> {
    if path == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| format!("stdin: {e}"))?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))
    }
}

fn read_graphs(path: &str) -> Result<Vec<Graph>, String> {
    parse_graphs(&read_input(path)?).map_err(|e| e.to_string())
}

fn print_branches(out: &mut impl Write, emb: &MinorEmbedding) -> io::Result<()> {
    for (a, set) in emb.branch_sets().iter().enumerate() {
        writeln!(out, "branch {a}: {}", join(set))?;
    }
    Ok(())
}

fn join(vs: &[usize]) -> String {
    vs.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn check(class: Class, input: &str, witness: bool) -> Outcome {
    let graphs = read_graphs(input)?;
    let obstructions = if witness {
        class.obstructions()
    } else {
        Vec::new()
    };
    let patterns: Vec<Graph> = obstructions.iter().map(|o| o.1.clone()).collect();
    let mut all = true;
    let mut out = io::stdout().lock();
    for g in &graphs {
        let g6 = encode_graph6(g);
        let member = match class {
            Class::Pseudoforest => is_pseudoforest(g).then_some(None),
            Class::ApexPseudoforest if g.vertex_count() == 0 => Some(None),
            Class::ApexPseudoforest => apex_vertex(g).map(Some),
        };
        let res = match member {
            Some(None) => writeln!(out, "{g6} MEMBER"),
            Some(Some(v)) => writeln!(out, "{g6} MEMBER apex={v}"),
            None => {
                all = false;
                writeln!(out, "{g6} NONMEMBER").and_then(|()| match witness {
                    true => {
                        let (i, emb) = contains_any_minor(g, &patterns)
                            .expect("non-members contain an obstruction");
                        writeln!(out, "obstruction {}", obstructions[i].0)?;
                        print_branches(&mut out, &emb)
                    }
                    false => Ok(()),
                })
            }
        };
        res.map_err(|e| e.to_string())?;
    }
    Ok(verdict(all))
}

fn single_graph(arg: &str) -> Result<Graph, String> {
    if arg == "-" {
        let mut gs = read_graphs("-")?;
        return match gs.len() {
            1 => Ok(gs.pop().expect("one graph")),
            k => Err(format!("expected one graph on stdin, found {k}")),
        };
    }
    decode_graph6_str(arg.trim()).map_err(|e| format!("`{arg}`: {e}"))
}

fn minor(host: &str, pattern: &str, topological: bool, witness: bool) -> Outcome {
    let host = single_graph(host)?;
    let pattern = match lookup(pattern) {
        Ok(g) => g,
        Err(_) => decode_graph6_str(pattern.trim()).map_err(|e| {
            format!("pattern `{pattern}` is neither a catalog name nor graph6: {e}")
        })?,
    };
    let mut out = io::stdout().lock();
    let found = if topological {
        contains_topological_minor(&host, &pattern).map(|t| {
            let mut lines = vec!["FOUND".to_string()];
            if witness {
                for (a, v) in t.branch_vertices.iter().enumerate() {
                    lines.push(format!("branch {a}: {v}"));
                }
                for ((a, b), path) in &t.paths {
                    lines.push(format!("path {a}-{b}: {}", join(path)));
                }
            }
            lines
        })
    } else {
        contains_minor(&host, &pattern).map(|emb| {
            let mut lines = vec!["FOUND".to_string()];
            if witness {
                for (a, set) in emb.branch_sets().iter().enumerate() {
                    lines.push(format!("branch {a}: {}", join(set)));
                }
            }
            lines
        })
    };
    let text = found
        .as_ref()
        .map_or_else(|| "NOT-FOUND".to_string(), |l| l.join("\n"));
    writeln!(out, "{text}").map_err(|e| e.to_string())?;
    Ok(verdict(found.is_some()))
}

fn decompose(mode: DecomposeMode, input: &str) -> Outcome {
    let graphs = read_graphs(input)?;
    let mut all = true;
    let mut out = io::stdout().lock();
    for g in &graphs {
        let g6 = encode_graph6(g);
        let value = match mode {
            DecomposeMode::Blocks => {
                let sets = block_vertex_sets(g);
                let blocks: Vec<_> = sets
                    .iter()
                    .map(|s| json!({"vertices": s, "graph6": encode_graph6(&g.induced(s).expect("block in range"))}))
                    .collect();
                json!({"graph6": g6, "cut_vertices": cut_vertices(g), "blocks": blocks})
            }
            DecomposeMode::Triconnected => {
                let q = triconnected_components(g);
                let members: Vec<String> = q.members.iter().map(encode_graph6).collect();
                json!({"graph6": g6, "members": members, "trace": q.trace})
            }
            DecomposeMode::WheelCertificate => match wheel_certificate(g) {
                Some(c) => {
                    let canon = canonical_form(&c.replay().map_err(|e| e.to_string())?)
                        .map_err(|e| e.to_string())?;
                    json!({"graph6": g6, "certificate": c, "replay_canonical": canon.as_str()})
                }
                None => {
                    all = false;
                    json!({"graph6": g6, "certificate": null})
                }
            },
        };
        writeln!(out, "{value}").map_err(|e| e.to_string())?;
    }
    Ok(verdict(all))
}
