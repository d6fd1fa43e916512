mod input;

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use hcontract::canon::canonical_graph;
use hcontract::corpus::{figure_corpus, figure_corpus_text, parse_corpus};
use hcontract::enumerate::enumerate_graphs;
use hcontract::families::{family_from_list, Figure};
use hcontract::hfree::{
    find_induced, fs, is_critically_h_exist, is_h_free, is_h_split, splitting_family,
    splitting_vertex, Family,
};
use hcontract::verify::{claims, verify, VerifyOptions};
use hcontract::{canonical_form, write_graph6, Edge, Graph};

#[derive(Parser)]
#[command(
    name = "hcontract",
    version,
    about = "Edge contraction and H-free graphs"
)]
struct Cli {
    /// Output style: human-readable text or one JSON object per line.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Records,
}

#[derive(Subcommand)]
enum Command {
    /// Freeness, H-split, strongly free and critically exist tests.
    Check {
        /// graph6 strings; read from standard input when absent.
        graphs: Vec<String>,
        /// Comma-separated family tokens, e.g. claw,2k2 or split.
        #[arg(long)]
        family: String,
    },
    /// Contract the edge u-v.
    Contract { graph: String, u: usize, v: usize },
    /// All splittings of the given graphs, one per isomorphism class.
    Splitting {
        graphs: Vec<String>,
        /// Split only this vertex (single input graph).
        #[arg(long)]
        vertex: Option<usize>,
    },
    /// Free-split graphs of a family given as graph6 members or tokens.
    Fs {
        graphs: Vec<String>,
        #[arg(long)]
        family: Option<String>,
    },
    /// Every critically exist graph without isolated vertices up to --nmax vertices.
    Critical {
        #[arg(long)]
        family: String,
        #[arg(long, default_value_t = 8)]
        nmax: usize,
        #[arg(long)]
        workers: Option<usize>,
    },
    /// Graphs up to isomorphism.
    Enumerate {
        #[arg(long, default_value_t = 5)]
        nmax: usize,
        #[arg(long)]
        exclude_isolated: bool,
        /// Print per-order counts instead of graphs.
        #[arg(long)]
        counts: bool,
    },
    /// Run registered claims over the small-graph space.
    Verify {
        /// Claim id, or `all`.
        #[arg(long, default_value = "all")]
        claim: String,
        #[arg(long, default_value_t = 8)]
        nmax: usize,
        #[arg(long)]
        workers: Option<usize>,
        /// Include elapsed time (output is then no longer byte-stable).
        #[arg(long)]
        timing: bool,
        /// List claim ids and exit.
        #[arg(long)]
        list: bool,
    },
    /// Generated graph lists stored as graph6 files.
    Corpus {
        #[command(subcommand)]
        action: CorpusAction,
    },
}

#[derive(Subcommand)]
enum CorpusAction {
    /// Print one list.
    Show {
        id: String,
        #[arg(long, default_value_t = 9)]
        max_vertices: usize,
    },
    /// Write every list into the corpus directory.
    Write {
        #[arg(long, env = "HCONTRACT_CORPUS")]
        dir: PathBuf,
        #[arg(long, default_value_t = 9)]
        max_vertices: usize,
    },
    /// Compare the corpus directory with freshly generated lists.
    Check {
        #[arg(long, env = "HCONTRACT_CORPUS")]
        dir: PathBuf,
        #[arg(long, default_value_t = 9)]
        max_vertices: usize,
    },
}

enum Failure {
    /// Exit 1: a check found something wrong.
    Found(String),
    /// Exit 2: bad input or options.
    Usage(String),
}

fn usage<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Usage(e.to_string())
}

fn g6(g: &Graph) -> String {
    write_graph6(g).expect("graphs here have at most 12 vertices")
}

fn sorted_canonical(fam: &Family) -> Vec<Graph> {
    let mut v: Vec<Graph> = fam.members().map(canonical_graph).collect();
    v.sort_by_key(canonical_form);
    v
}

fn graph_lines(graphs: &[Graph], format: Format) -> String {
    let mut out = String::new();
    for g in graphs {
        match format {
            Format::Text => writeln!(out, "{}", g6(g)),
            Format::Records => writeln!(out, "{}", json!({ "graph": g6(g) })),
        }
        .expect("write to string");
    }
    out
}

fn with_pool<T>(workers: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T, Failure>
where
    T: Send,
{
    match workers {
        Some(w) => Ok(rayon::ThreadPoolBuilder::new()
            .num_threads(w)
            .build()
            .map_err(usage)?
            .install(f)),
        None => Ok(f()),
    }
}

fn check(graphs: &[Graph], fam: &Family, format: Format) -> Result<String, Failure> {
    let fs_fam = fs(fam).map_err(usage)?;
    let mut out = String::new();
    for g in graphs {
        let witness = find_induced(g, fam);
        let free = witness.is_none();
        let breaking = if free {
            g.contractions()
                .find(|(_, c)| !is_h_free(c, fam))
                .map(|(e, _)| e)
        } else {
            None
        };
        let critical = is_critically_h_exist(g, fam).ok();
        let split = is_h_split(g, fam);
        let fs_free = is_h_free(g, &fs_fam);
        match format {
            Format::Text => {
                let _ = writeln!(out, "{}", g6(g));
                match witness {
                    Some(w) => {
                        let verts: Vec<String> = w.vertices.iter().map(|v| v.to_string()).collect();
                        let member = g6(fam.patterns()[w.member].graph());
                        let _ = writeln!(
                            out,
                            "  free: false witness={{{}}} member={member}",
                            verts.join(",")
                        );
                    }
                    None => {
                        let _ = writeln!(out, "  free: true");
                    }
                }
                let _ = writeln!(out, "  h_split: {split}");
                match (free, breaking) {
                    (false, _) => writeln!(out, "  strongly_free: false"),
                    (true, Some(e)) => writeln!(out, "  strongly_free: false edge={e}"),
                    (true, None) => writeln!(out, "  strongly_free: true"),
                }
                .expect("write to string");
                let _ = writeln!(out, "  fs_free: {fs_free}");
                match critical {
                    Some(c) => writeln!(out, "  critically_exist: {c}"),
                    None => writeln!(out, "  critically_exist: undefined (isolated vertex)"),
                }
                .expect("write to string");
            }
            Format::Records => {
                let rec = json!({
                    "graph": g6(g),
                    "free": free,
                    "witness": witness.map(|w| w.vertices.iter().collect::<Vec<_>>()),
                    "member": witness.map(|w| g6(fam.patterns()[w.member].graph())),
                    "h_split": split,
                    "strongly_free": free && breaking.is_none(),
                    "breaking_edge": breaking.map(|e| [e.u(), e.v()]),
                    "fs_free": fs_free,
                    "critically_exist": critical,
                });
                let _ = writeln!(out, "{rec}");
            }
        }
    }
    Ok(out)
}

fn run(cli: Cli) -> Result<String, Failure> {
    let format = cli.format;
    match cli.command {
        Command::Check { graphs, family } => {
            let fam = family_from_list(&family).map_err(usage)?;
            let graphs = input::graphs(&graphs).map_err(usage)?;
            check(&graphs, &fam, format)
        }
        Command::Contract { graph, u, v } => {
            let g = input::one(&graph).map_err(usage)?;
            let e = Edge::new(u, v).map_err(usage)?;
            let r = g.contract(e).map_err(usage)?;
            Ok(match format {
                Format::Text => format!("{}\n", g6(&r.graph)),
                Format::Records => {
                    let relabel: Vec<Option<usize>> = (0..g.n()).map(|x| r.relabel(x)).collect();
                    format!(
                        "{}\n",
                        json!({ "graph": g6(&r.graph), "merged": r.merged, "relabel": relabel })
                    )
                }
            })
        }
        Command::Splitting { graphs, vertex } => {
            let graphs = input::graphs(&graphs).map_err(usage)?;
            let fam = match vertex {
                Some(v) => {
                    let [h] = graphs.as_slice() else {
                        return Err(Failure::Usage("--vertex needs exactly one graph".into()));
                    };
                    if v >= h.n() {
                        return Err(Failure::Usage(format!("vertex {v} out of range")));
                    }
                    splitting_vertex(h, v).map_err(usage)?
                }
                None => splitting_family(&Family::new(graphs)).map_err(usage)?,
            };
            Ok(graph_lines(&sorted_canonical(&fam), format))
        }
        Command::Fs { graphs, family } => {
            let mut fam = match &family {
                Some(list) => family_from_list(list).map_err(usage)?,
                None => Family::default(),
            };
            if family.is_none() || !graphs.is_empty() {
                fam = fam.union(&Family::new(input::graphs(&graphs).map_err(usage)?));
            }
            let free_split = fs(&fam).map_err(usage)?;
            Ok(graph_lines(&sorted_canonical(&free_split), format))
        }
        Command::Critical {
            family,
            nmax,
            workers,
        } => {
            let fam = family_from_list(&family).map_err(usage)?;
            let space = enumerate_graphs(nmax, true).map_err(usage)?;
            let found = with_pool(workers, || {
                use rayon::prelude::*;
                space
                    .graphs
                    .par_iter()
                    .filter(|g| is_critically_h_exist(g, &fam).unwrap_or(false))
                    .copied()
                    .collect::<Vec<_>>()
            })?;
            Ok(graph_lines(&found, format))
        }
        Command::Enumerate {
            nmax,
            exclude_isolated,
            counts,
        } => {
            let space = enumerate_graphs(nmax, exclude_isolated).map_err(usage)?;
            if !counts {
                return Ok(graph_lines(&space.graphs, format));
            }
            let mut out = String::new();
            for (n, c) in space.counts_by_order().into_iter().enumerate() {
                let _ = match format {
                    Format::Text => writeln!(out, "{n} {c}"),
                    Format::Records => writeln!(out, "{}", json!({ "n": n, "count": c })),
                };
            }
            Ok(out)
        }
        Command::Verify {
            claim,
            nmax,
            workers,
            timing,
            list,
        } => {
            if list {
                let mut out = String::new();
                for c in claims() {
                    let _ = writeln!(out, "{}\t{}", c.id, c.anchor);
                }
                return Ok(out);
            }
            let reports = verify(
                &claim,
                VerifyOptions {
                    n_max: nmax,
                    workers,
                },
            )
            .map_err(usage)?;
            let mut out = String::new();
            for r in &reports {
                match format {
                    Format::Text => out.push_str(&r.to_text(timing)),
                    Format::Records => {
                        let _ = writeln!(out, "{}", r.to_record(timing));
                    }
                }
            }
            let failed: Vec<&str> = reports
                .iter()
                .filter(|r| !r.success())
                .map(|r| r.claim.as_str())
                .collect();
            if failed.is_empty() {
                Ok(out)
            } else {
                print!("{out}");
                Err(Failure::Found(format!(
                    "counterexamples found for: {}",
                    failed.join(", ")
                )))
            }
        }
        Command::Corpus { action } => corpus(action, format),
    }
}

fn corpus(action: CorpusAction, format: Format) -> Result<String, Failure> {
    match action {
        CorpusAction::Show { id, max_vertices } => {
            let fig = Figure::from_id(&id).map_err(usage)?;
            Ok(match format {
                Format::Text => figure_corpus_text(fig, max_vertices).map_err(usage)?,
                Format::Records => figure_corpus(fig, max_vertices)
                    .map_err(usage)?
                    .entries
                    .iter()
                    .map(|e| format!("{}\n", json!({ "graph": g6(&e.graph), "label": e.label })))
                    .collect(),
            })
        }
        CorpusAction::Write { dir, max_vertices } => {
            std::fs::create_dir_all(&dir).map_err(usage)?;
            let mut out = String::new();
            for fig in Figure::ALL {
                let text =
                    hcontract::corpus::figure_corpus_text(fig, max_vertices).map_err(usage)?;
                let path = dir.join(format!("{}.g6", fig.id()));
                std::fs::write(&path, text).map_err(usage)?;
                let _ = writeln!(out, "{}", path.display());
            }
            Ok(out)
        }
        CorpusAction::Check { dir, max_vertices } => {
            let mut out = String::new();
            let mut stale = Vec::new();
            for fig in Figure::ALL {
                let path = dir.join(format!("{}.g6", fig.id()));
                let text = std::fs::read_to_string(&path)
                    .map_err(|e| usage(format!("{}: {e}", path.display())))?;
                let stored =
                    parse_corpus(&text).map_err(|e| usage(format!("{}: {e}", path.display())))?;
                let fresh = figure_corpus(fig, max_vertices).map_err(usage)?;
                let same = stored.family() == fresh.family();
                let _ = writeln!(out, "{} {}", fig.id(), if same { "ok" } else { "differs" });
                if !same {
                    stale.push(fig.id());
                }
            }
            if stale.is_empty() {
                Ok(out)
            } else {
                print!("{out}");
                Err(Failure::Found(format!(
                    "corpus out of date: {}",
                    stale.join(", ")
                )))
            }
        }
    }
}

fn main() -> ExitCode {
    env_logger::init();
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Found(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
