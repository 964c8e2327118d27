//! `hypsym` command-line driver.

mod error;
mod report;

use std::fmt::Write as _;
use std::fs;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hypsym::census::{run_census, CensusReport};
use hypsym::graphs::{
    automorphisms, boundary_graph, cubic_graphs, is_asymmetric, k6_glueing_graph, klein_graph, AutomorphismMode,
};
use hypsym::groups::{cayley_graph, GroupFile, DEFAULT_ORDER_CAP};
use hypsym::lattice::{
    condition_filter, q_matrix, rigidity_case, search_radius, short_vectors, Rational, RigidityCase,
};
use hypsym::triangulation::{
    automorphism_group, double_of_simplex, edge_complex, edge_complex_chain, one_cusped_triangulation, realize_group,
    realize_group_with_graphs,
};
use hypsym::volumes::block_volume;
use hypsym::{FiniteGroup, LabeledDigraph, Triangulation};
use serde::Serialize;

use error::CliError;
use report::{analyze, BuildReport, GroupSummary};

#[derive(Parser)]
#[command(name = "hypsym", version, about = "Build and analyse facet-pairing triangulations with prescribed symmetry")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    /// Chains of edge complexes as wires.
    Edge,
    /// Complexes of asymmetric cubic graphs as wires.
    Graph,
}

#[derive(Subcommand)]
enum Command {
    /// Summarise a group file.
    Group { file: String },
    /// Build a closed triangulation whose symmetry group is the given group.
    Build {
        file: String,
        #[arg(long, value_enum, default_value_t = Mode::Edge)]
        mode: Mode,
        /// Half the vertex count of the cubic graphs used in graph mode.
        #[arg(long, default_value_t = 6)]
        k: usize,
        /// Where to write the triangulation.
        #[arg(long, short)]
        output: Option<String>,
    },
    /// Report the invariants of a triangulation file.
    Analyze { file: String },
    /// Enumerate short vectors of the cusp lattices.
    Latcheck {
        /// Shape parameter 0, 1 or 2; all three when omitted.
        #[arg(long)]
        n: Option<u32>,
        /// Cycle length and return-map parity, e.g. `1,even`.
        #[arg(long)]
        case: Option<String>,
    },
    /// Count cubic graphs and build triangulations from asymmetric ones.
    Census {
        #[arg(long)]
        k: usize,
        /// Group file; the group of order 2 when omitted.
        #[arg(long)]
        group: Option<String>,
        #[arg(long, default_value_t = 2)]
        count: usize,
    },
    /// Print one of the fixed example objects.
    Examples {
        #[arg(value_enum)]
        name: Example,
        /// Chain length for `edge-chain`.
        #[arg(long, default_value_t = 2)]
        n: usize,
        /// Emit graphs as DOT instead of an edge list.
        #[arg(long)]
        dot: bool,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Example {
    EdgeComplex,
    EdgeChain,
    OneCusped,
    Double,
    K6,
    Octahedron,
    Prism,
}

fn read(path: &str) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{path}: {e}")))
}

fn load_group(path: &str) -> Result<FiniteGroup, CliError> {
    let file = GroupFile::parse(&read(path)?).map_err(|e| CliError::parse(path, e))?;
    file.into_group(DEFAULT_ORDER_CAP).map_err(|e| match e {
        hypsym::groups::GroupError::TooLarge { .. } => e.into(),
        _ => CliError::parse(path, e),
    })
}

fn load_triangulation(path: &str) -> Result<Triangulation, CliError> {
    Triangulation::from_text(&read(path)?).map_err(|e| CliError::parse(path, e))
}

fn emit<T: Serialize>(format: Format, value: &T, text: impl FnOnce(&T) -> String) -> Result<String, CliError> {
    match format {
        Format::Text => Ok(text(value)),
        Format::Json => {
            serde_json::to_string_pretty(value).map(|s| s + "\n").map_err(|e| CliError::Failed(e.to_string()))
        }
    }
}

fn cmd_group(format: Format, path: &str) -> Result<String, CliError> {
    let g = load_group(path)?;
    let cayley = automorphisms(&cayley_graph(&g), AutomorphismMode::PreserveLabels)?;
    emit(format, &GroupSummary::new(&g, cayley.order())?, GroupSummary::to_text)
}

fn cmd_build(format: Format, path: &str, mode: Mode, k: usize, output: Option<String>) -> Result<String, CliError> {
    let g = load_group(path)?;
    let (t, mode_name) = match mode {
        Mode::Edge => (realize_group(&g)?, "edge"),
        Mode::Graph => {
            let needed = 5 * g.rank();
            let pool: Vec<LabeledDigraph> = cubic_graphs(2 * k)?.into_iter().filter(is_asymmetric).collect();
            if pool.len() < needed {
                return Err(CliError::Usage(format!(
                    "not enough asymmetric graphs at this k: {} available, {needed} needed",
                    pool.len()
                )));
            }
            (realize_group_with_graphs(&g, &pool[..needed])?, "graph")
        }
    };
    if let Some(out) = &output {
        fs::write(out, t.to_text()).map_err(|e| CliError::Usage(format!("{out}: {e}")))?;
    }
    let matches = automorphism_group(&t)?.to_finite_group().map(|a| a.is_isomorphic(&g)).unwrap_or(false);
    let report = BuildReport {
        mode: mode_name.into(),
        group_order: g.order(),
        group_rank: g.rank(),
        automorphisms_match_group: matches,
        output,
        analysis: analyze(&t)?,
    };
    let mut text = emit(format, &report, BuildReport::to_text)?;
    if report.output.is_none() && format == Format::Text {
        text.push_str(&t.to_text());
    }
    Ok(text)
}

fn cmd_analyze(format: Format, path: &str) -> Result<String, CliError> {
    let t = load_triangulation(path)?;
    emit(format, &analyze(&t)?, report::Analysis::to_text)
}

#[derive(Serialize)]
struct FormReport {
    n: u32,
    gram: Vec<Vec<String>>,
    eigenvalues: [f64; 3],
    radius: i64,
    short_vectors: usize,
    filtered: Vec<[i64; 3]>,
}

#[derive(Serialize)]
struct CaseReport {
    h: u32,
    return_map_even: bool,
    n: u32,
    radius: i64,
    short_vectors: usize,
    shortest_pairs: Vec<([i64; 3], [i64; 3])>,
    standard: bool,
    note: Option<String>,
}

fn parse_case(spec: &str) -> Result<(u32, bool), CliError> {
    let bad = || CliError::Usage(format!("--case expects h,even or h,odd, got {spec:?}"));
    let (h, parity) = spec.split_once(',').ok_or_else(bad)?;
    let h = h.trim().parse::<u32>().map_err(|_| bad())?;
    let even = match parity.trim() {
        "even" => true,
        "odd" => false,
        _ => return Err(bad()),
    };
    Ok((h, even))
}

fn cmd_latcheck(format: Format, n: Option<u32>, case: Option<String>) -> Result<String, CliError> {
    let ns: Vec<u32> = match n {
        Some(n) => vec![n],
        None => vec![0, 1, 2],
    };
    let bound = Rational::from_integer(9);
    let Some(case) = case else {
        let mut reports = Vec::new();
        for &n in &ns {
            let form = q_matrix(n)?;
            let short = short_vectors(&form, bound)?;
            reports.push(FormReport {
                n,
                gram: form.gram().iter().map(|row| row.iter().map(|x| x.to_string()).collect()).collect(),
                eigenvalues: form.eigenvalues(),
                radius: search_radius(&form, bound),
                short_vectors: short.len(),
                filtered: condition_filter(&form, &short).iter().map(|v| v.coords).collect(),
            });
        }
        return emit(format, &reports, |rs| {
            let mut out = String::new();
            for r in rs {
                let rows: Vec<String> = r.gram.iter().map(|row| format!("[{}]", row.join(", "))).collect();
                let kept: Vec<String> = r.filtered.iter().map(|v| format!("({}, {}, {})", v[0], v[1], v[2])).collect();
                writeln!(out, "n={} Q=[{}]", r.n, rows.join(", ")).unwrap();
                writeln!(
                    out,
                    "  eigenvalues {:.12} {:.12} {:.12}  R={}  short={}  filtered {}",
                    r.eigenvalues[0],
                    r.eigenvalues[1],
                    r.eigenvalues[2],
                    r.radius,
                    r.short_vectors,
                    kept.join(" ")
                )
                .unwrap();
            }
            out
        });
    };
    let (h, even) = parse_case(&case)?;
    let mut reports = Vec::new();
    for &n in &ns {
        let v = rigidity_case(RigidityCase { h, return_map_even: even, n })?;
        reports.push(CaseReport {
            h,
            return_map_even: even,
            n,
            radius: v.radius,
            short_vectors: v.short.len(),
            shortest_pairs: v.shortest_pairs.iter().map(|(a, b)| (a.coords, b.coords)).collect(),
            standard: v.standard,
            note: v.note,
        });
    }
    emit(format, &reports, |rs| {
        let mut out = String::new();
        for r in rs {
            let parity = if r.return_map_even { "even" } else { "odd" };
            writeln!(
                out,
                "h={} r_c {parity} n={}: R={} short={} pairs={} {}",
                r.h,
                r.n,
                r.radius,
                r.short_vectors,
                r.shortest_pairs.len(),
                if r.standard { "standard" } else { "NOT standard" }
            )
            .unwrap();
            if let Some(note) = &r.note {
                writeln!(out, "  note: {note}").unwrap();
            }
        }
        out
    })
}

fn census_text(r: &CensusReport) -> String {
    let mut out = String::new();
    writeln!(out, "k={} ({} vertices)", r.k, 2 * r.k).unwrap();
    writeln!(out, "cubic graphs g={} asymmetric f={}", r.g, r.f).unwrap();
    writeln!(out, "graphs per collection {}, possible collections {}", r.per_collection, r.possible_collections)
        .unwrap();
    let vol = block_volume() * r.expected_simplices as i64;
    writeln!(out, "expected simplices {} volume {vol}", r.expected_simplices).unwrap();
    for c in &r.collections {
        let ids: Vec<String> = c.graphs.iter().map(|i| i.to_string()).collect();
        writeln!(
            out,
            "collection [{}]: simplices {} cusps {} volume {} |Aut| {} Aut≅G {}",
            ids.join(" "),
            c.simplices,
            c.cusps,
            c.volume,
            c.automorphisms,
            if c.group_isomorphic { "yes" } else { "no" }
        )
        .unwrap();
    }
    if r.collections.len() > 1 {
        writeln!(out, "pairwise non-isomorphic {}", if r.pairwise_distinct { "yes" } else { "no" }).unwrap();
    }
    out
}

fn cmd_census(format: Format, k: usize, group: Option<String>, count: usize) -> Result<String, CliError> {
    let g = match group {
        Some(path) => load_group(&path)?,
        None => FiniteGroup::cyclic(2)?,
    };
    let report = run_census(k, &g, count)?;
    emit(format, &report, census_text)
}

fn cmd_examples(name: Example, n: usize, dot: bool) -> Result<String, CliError> {
    let graph = |g: LabeledDigraph| if dot { g.to_dot() } else { g.to_edge_list() };
    Ok(match name {
        Example::EdgeComplex => edge_complex().to_text(),
        Example::EdgeChain => {
            if n == 0 {
                return Err(CliError::Usage("--n must be at least 1".into()));
            }
            edge_complex_chain(n)?.complex.to_text()
        }
        Example::OneCusped => one_cusped_triangulation().to_text(),
        Example::Double => double_of_simplex().to_text(),
        Example::K6 => graph(k6_glueing_graph()),
        Example::Octahedron => graph(boundary_graph(&k6_glueing_graph(), "1")?),
        Example::Prism => graph(klein_graph(&boundary_graph(&k6_glueing_graph(), "1")?, "2")?),
    })
}

fn run(cli: Cli) -> Result<String, CliError> {
    let format = cli.format;
    match cli.command {
        Command::Group { file } => cmd_group(format, &file),
        Command::Build { file, mode, k, output } => cmd_build(format, &file, mode, k, output),
        Command::Analyze { file } => cmd_analyze(format, &file),
        Command::Latcheck { n, case } => cmd_latcheck(format, n, case),
        Command::Census { k, group, count } => cmd_census(format, k, group, count),
        Command::Examples { name, n, dot } => cmd_examples(name, n, dot),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
