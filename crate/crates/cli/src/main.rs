//! `turanlab`: command-line access to the workbench. Every subcommand prints
//! one JSON line `{"status":"ok","payload":...,"elapsed_ms":...}` on stdout;
//! domain errors go to stderr as JSON with exit code 1.

use std::fs::File;
use std::io::{self, BufReader, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use turanlab::canon::canonical_graph6;
use turanlab::coloring::chromatic_number;
use turanlab::counting::count_cliques;
use turanlab::enumerate::enumerate_free_graphs;
use turanlab::extremal::generalized_turan_from_stream;
use turanlab::lab::{
    check_degree_lemma, check_ratio_monotone, density_bracket, greedy_min_copy_deletion, heavy_subset_census,
    supersaturation_check, symmetrize, turan_edit_distance,
};
use turanlab::{
    blow_up, count_copies, exists_homomorphism, generalized_turan, graph_from_graph6, graph_to_graph6,
    is_degenerate_pair, parse_rational, turan_graph, Catalog, Computing, Error, Graph, Rational, Result,
};

/// Bracket size used by `supersat` when the catalog has nothing for the pair.
const DEFAULT_BRACKET_N: usize = 8;

#[derive(Parser)]
#[command(name = "turanlab", version, about = "Exact generalized Turán computations")]
struct Cli {
    /// Worker threads for shardable operations.
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,

    #[command(subcommand)]
    command: Command,
}

fn rational(s: &str) -> std::result::Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

/// Graph arguments are graph6 text, `-` for standard input, or `@path`.
#[derive(Subcommand)]
enum Command {
    /// Copies of a pattern in a host graph.
    Count {
        #[arg(long)]
        pattern: String,
        #[arg(long, default_value = "-")]
        host: String,
    },
    /// Copies of K_r.
    Cliques {
        #[arg(long)]
        r: usize,
        #[arg(long, default_value = "-")]
        host: String,
    },
    /// Exact chromatic number.
    Chromatic {
        #[arg(long, default_value = "-")]
        graph: String,
    },
    /// Whether a homomorphism exists.
    Hom {
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
    },
    /// Balanced complete multipartite graph.
    TuranGraph {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        parts: usize,
    },
    /// Replace every vertex by an independent set of size t.
    Blowup {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        t: usize,
    },
    /// One graph per isomorphism class of F-free graphs on n vertices.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        forbid: String,
        /// Stream bare graph6 lines instead of one JSON record.
        #[arg(long)]
        lines: bool,
    },
    /// ex(n, H, F) with witnesses.
    Extremal {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        forbid: String,
        /// graph6 stream of candidate graphs instead of enumeration.
        #[arg(long)]
        stream: Option<PathBuf>,
        /// The stream covers every isomorphism class.
        #[arg(long, requires = "stream")]
        trust_complete: bool,
        #[arg(long, env = "TURANLAB_CATALOG")]
        catalog: Option<PathBuf>,
    },
    /// Whether ex(n, H, F) = o(n^|V(H)|).
    Degenerate {
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        forbid: String,
    },
    /// Bracket on lim ex(n, H, F) / C(n, |V(H)|).
    Density {
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        forbid: String,
        #[arg(long)]
        max_n: usize,
        #[arg(long, env = "TURANLAB_CATALOG")]
        catalog: Option<PathBuf>,
    },
    /// Ratio monotonicity over the cataloged values of a pair.
    Monotone {
        #[arg(long, env = "TURANLAB_CATALOG")]
        catalog: PathBuf,
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        forbid: String,
    },
    /// Copy counts over all m-subsets.
    Census {
        #[arg(long, default_value = "-")]
        host: String,
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        m: usize,
        #[arg(long, value_parser = rational)]
        threshold: Rational,
    },
    /// The averaging argument on a host graph.
    Supersat {
        #[arg(long, default_value = "-")]
        host: String,
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        forbid: String,
        #[arg(long, value_parser = rational)]
        c: Rational,
        #[arg(long, env = "TURANLAB_CATALOG")]
        catalog: Option<PathBuf>,
        /// Size for the density bracket; defaults to the largest cataloged size.
        #[arg(long)]
        max_n: Option<usize>,
    },
    /// Symmetrize towards a complete multipartite graph.
    Symmetrize {
        #[arg(long, default_value = "-")]
        graph: String,
        #[arg(long)]
        r: usize,
    },
    /// Repeatedly delete a vertex in the fewest copies of K_r.
    DeleteGreedy {
        #[arg(long, default_value = "-")]
        graph: String,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, value_parser = rational)]
        alpha: Rational,
        #[arg(long, value_parser = rational)]
        q: Option<Rational>,
        #[arg(long, value_parser = rational)]
        beta: Option<Rational>,
    },
    /// Degree consequence at one vertex of a K_k-free graph.
    DegreeCheck {
        #[arg(long, default_value = "-")]
        graph: String,
        #[arg(long)]
        x: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        r: usize,
        #[arg(long, value_parser = rational)]
        alpha: Rational,
    },
    /// Edit distance to the balanced complete multipartite graph.
    Distance {
        #[arg(long, default_value = "-")]
        graph: String,
        #[arg(long)]
        parts: usize,
    },
}

fn io_err(path: &Path, e: io::Error) -> Error {
    Error::IoFailure(format!("{}: {e}", path.display()))
}

fn read_graph(arg: &str) -> Result<Graph> {
    let text = if arg == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        s
    } else if let Some(path) = arg.strip_prefix('@') {
        std::fs::read_to_string(path).map_err(|e| io_err(Path::new(path), e))?
    } else {
        return graph_from_graph6(arg);
    };
    let line = text.lines().map(str::trim).find(|l| !l.is_empty()).unwrap_or("");
    graph_from_graph6(line)
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("reports serialize")
}

fn open_catalog(path: &Option<PathBuf>) -> Result<Option<Catalog>> {
    path.as_ref().map(Catalog::open).transpose()
}

fn run(cmd: Command) -> Result<Value> {
    Ok(match cmd {
        Command::Count { pattern, host } => {
            let (h, g) = (read_graph(&pattern)?, read_graph(&host)?);
            json!({ "count": count_copies(&h, &g)?, "pattern_vertices": h.n(), "host_vertices": g.n() })
        }
        Command::Cliques { r, host } => {
            let g = read_graph(&host)?;
            json!({ "r": r, "count": count_cliques(r, &g)? })
        }
        Command::Chromatic { graph } => {
            let g = read_graph(&graph)?;
            json!({ "chromatic_number": chromatic_number(&g) })
        }
        Command::Hom { from, to } => {
            let (f, h) = (read_graph(&from)?, read_graph(&to)?);
            json!({ "exists": exists_homomorphism(&f, &h) })
        }
        Command::TuranGraph { n, parts } => {
            let g = turan_graph(n, parts)?;
            json!({ "graph6": graph_to_graph6(&g), "n": n, "parts": parts, "edges": g.edge_count() })
        }
        Command::Blowup { graph, t } => {
            let g = blow_up(&read_graph(&graph)?, t)?;
            json!({ "graph6": graph_to_graph6(&g), "n": g.n(), "edges": g.edge_count() })
        }
        Command::Enumerate { .. } => unreachable!("handled by enumerate"),
        Command::Extremal {
            n,
            pattern,
            forbid,
            stream,
            trust_complete,
            catalog,
        } => {
            let (h, f) = (read_graph(&pattern)?, read_graph(&forbid)?);
            let mut catalog = open_catalog(&catalog)?;
            let rec = match (&stream, &catalog) {
                (None, Some(cat)) if cat.get(n, &h, &f).is_some_and(|r| r.exhaustive) => {
                    cat.get(n, &h, &f).cloned().expect("checked above")
                }
                (None, _) => generalized_turan(n, &h, &f)?,
                (Some(path), _) => {
                    let file = File::open(path).map_err(|e| io_err(path, e))?;
                    generalized_turan_from_stream(n, &h, &f, BufReader::new(file), trust_complete)?
                }
            };
            if let Some(cat) = catalog.as_mut() {
                if cat.get_key(&rec.key()) != Some(&rec) {
                    cat.put(rec.clone())?;
                }
            }
            to_value(&rec)
        }
        Command::Degenerate { pattern, forbid } => {
            let (h, f) = (read_graph(&pattern)?, read_graph(&forbid)?);
            json!({
                "degenerate": is_degenerate_pair(&h, &f)?,
                "chi_pattern": chromatic_number(&h),
                "chi_forbid": chromatic_number(&f),
            })
        }
        Command::Density {
            pattern,
            forbid,
            max_n,
            catalog,
        } => {
            let (h, f) = (read_graph(&pattern)?, read_graph(&forbid)?);
            let mut catalog = open_catalog(&catalog)?;
            let mut source = Computing {
                catalog: catalog.as_mut(),
            };
            to_value(&density_bracket(&h, &f, max_n, &mut source)?)
        }
        Command::Monotone {
            catalog,
            pattern,
            forbid,
        } => {
            let (h, f) = (read_graph(&pattern)?, read_graph(&forbid)?);
            let cat = Catalog::open(&catalog)?;
            let table: Vec<(usize, u64)> = cat
                .records_for(&h, &f)
                .into_iter()
                .filter(|r| r.exhaustive)
                .map(|r| (r.n, r.value))
                .collect();
            let violations = check_ratio_monotone(&table, h.n())?;
            json!({ "table": table, "violations": violations })
        }
        Command::Census {
            host,
            pattern,
            m,
            threshold,
        } => {
            let (g, h) = (read_graph(&host)?, read_graph(&pattern)?);
            to_value(&heavy_subset_census(&g, &h, m, threshold)?)
        }
        Command::Supersat {
            host,
            pattern,
            forbid,
            c,
            catalog,
            max_n,
        } => {
            let (g, h, f) = (read_graph(&host)?, read_graph(&pattern)?, read_graph(&forbid)?);
            let mut catalog = open_catalog(&catalog)?;
            let max_n = max_n.unwrap_or_else(|| {
                catalog
                    .as_ref()
                    .and_then(|cat| {
                        cat.records_for(&h, &f)
                            .into_iter()
                            .filter(|r| r.exhaustive)
                            .map(|r| r.n)
                            .max()
                    })
                    .filter(|&n| n >= h.n())
                    .unwrap_or(DEFAULT_BRACKET_N)
            });
            let mut source = Computing {
                catalog: catalog.as_mut(),
            };
            let bracket = density_bracket(&h, &f, max_n, &mut source)?;
            let report = supersaturation_check(&g, &h, &f, c, &bracket, &mut source)?;
            json!({ "bracket": bracket, "report": report })
        }
        Command::Symmetrize { graph, r } => to_value(&symmetrize(&read_graph(&graph)?, r)?),
        Command::DeleteGreedy {
            graph,
            r,
            k,
            alpha,
            q,
            beta,
        } => to_value(&greedy_min_copy_deletion(&read_graph(&graph)?, r, k, alpha, q, beta)?),
        Command::DegreeCheck { graph, x, k, r, alpha } => {
            to_value(&check_degree_lemma(&read_graph(&graph)?, x, k, r, alpha)?)
        }
        Command::Distance { graph, parts } => to_value(&turan_edit_distance(&read_graph(&graph)?, parts)?),
    })
}

/// Enumeration streams; with `--lines` each graph is printed as it is found.
fn enumerate(n: usize, forbid: &str, lines: bool, out: &mut impl Write) -> Result<Option<Value>> {
    let f = read_graph(forbid)?;
    let graphs = enumerate_free_graphs(n, &f)?;
    if lines {
        for g in graphs {
            writeln!(out, "{}", graph_to_graph6(&g))?;
        }
        return Ok(None);
    }
    let all: Vec<String> = graphs.map(|g| graph_to_graph6(&g)).collect();
    Ok(Some(
        json!({ "n": n, "forbid": canonical_graph6(&f), "count": all.len(), "graphs": all }),
    ))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.threads.max(1))
        .build_global()
    {
        eprintln!(
            "{}",
            json!({ "status": "error", "error": "IoFailure", "message": e.to_string() })
        );
        return ExitCode::from(1);
    }
    let start = Instant::now();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let result = match cli.command {
        Command::Enumerate { n, forbid, lines } => enumerate(n, &forbid, lines, &mut out),
        cmd => run(cmd).map(Some),
    };
    match result {
        Ok(payload) => {
            if let Some(payload) = payload {
                let line = json!({
                    "status": "ok",
                    "payload": payload,
                    "elapsed_ms": start.elapsed().as_millis() as u64,
                });
                let _ = writeln!(out, "{line}");
            }
            let _ = out.flush();
            ExitCode::SUCCESS
        }
        Err(e) => {
            let _ = out.flush();
            eprintln!(
                "{}",
                json!({ "status": "error", "error": e.name(), "message": e.to_string() })
            );
            ExitCode::from(1)
        }
    }
}
