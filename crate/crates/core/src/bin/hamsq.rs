//! `hamsq`: command-line front end for the searches, checkers and sweeps.
//!
//! Exit codes: 0 success, 1 a `none` answer or a violation, 2 a search ran
//! out of budget, 64 usage or input error.

use std::io::{self, BufReader, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use hamsq::corpus::enumerate::{all_graphs_range, dt_blocks, trees};
use hamsq::corpus::generators::full_subdivision;
use hamsq::corpus::{
    edgelist, graph6, graph_name, hunt_fk_failures, read_file, read_stream, CorpusFilter, Format,
    Predicate,
};
use hamsq::decomposition::{
    block_chain_kind, block_forest, is_dt_graph, is_two_connected, suspended_paths, v2,
};
use hamsq::eps::{best_w_cycle, find_cycle_through, find_eps, find_jeps, DegreeConstraint, PCap};
use hamsq::hamilton::{check_fk, ham_cycle_in_square, FkQuery, HamCycleConstraint};
use hamsq::harness::{sweep, CheckKind, SweepOptions, SCHEMA_VERSION};
use hamsq::powers::{power, square};
use hamsq::{Error, Graph, Outcome, VertexSet, DEFAULT_BUDGET};

const EXIT_USAGE: u8 = 64;

#[derive(Parser)]
#[command(
    name = "hamsq",
    version,
    about = "Hamiltonian paths and cycles in squares of graphs"
)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Output format.
    #[arg(long, value_enum, default_value_t = OutFormat::Text, global = true)]
    format: OutFormat,
    /// Search-node cap per search; accepts forms like 5e7.
    #[arg(long, env = "HAMSQ_BUDGET", value_parser = parse_budget, global = true)]
    budget: Option<u64>,
    /// Worker threads for corpus commands (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Seed for sampled queries.
    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,
    /// Write output here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutFormat {
    Text,
    Json,
}

#[derive(Args)]
struct Input {
    /// Graph file (graph6 or edge list, chosen by extension or content);
    /// `-` reads standard input.
    #[arg(long = "in", visible_alias = "stream", value_name = "FILE")]
    input: PathBuf,
    /// Override format detection.
    #[arg(long, value_enum)]
    input_format: Option<InFormat>,
}

#[derive(Clone, Copy, ValueEnum)]
enum InFormat {
    Graph6,
    Edgelist,
}

#[derive(Subcommand)]
enum Command {
    /// Square of each input graph, as graph6.
    Square(Input),
    /// k-th power of each input graph, as graph6.
    Power {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        k: usize,
    },
    /// Blocks, cutvertices and block-chain type.
    Blocks(Input),
    /// DT-graph test, V2 and suspended paths.
    Dt(Input),
    /// Search for an EPS-graph under degree caps.
    EpsFind {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        caps: Caps,
        /// Require some cycle through these vertices to lie in E.
        #[arg(long, value_delimiter = ',')]
        cycle_through: Vec<usize>,
        /// Reject decompositions with empty E.
        #[arg(long)]
        nonempty_e: bool,
    },
    /// Search for a JEPS-graph whose trail has odd vertices v, w.
    JepsFind {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        v: usize,
        #[arg(long)]
        w: usize,
        #[command(flatten)]
        caps: Caps,
    },
    /// A cycle maximizing its intersection with W.
    Wcycle {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_delimiter = ',', required = true)]
        w: Vec<usize>,
    },
    /// F_k certificate search for the tuple a = (x1, ..., xk).
    Fk {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        k: usize,
        #[arg(long, value_delimiter = ',', required = true)]
        a: Vec<usize>,
    },
    /// Hamiltonian cycle of the square with G-edges at v (both) and at each w.
    Hamcycle {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        v: Option<usize>,
        #[arg(long, value_delimiter = ',')]
        w: Vec<usize>,
    },
    /// Sweep a statement over every graph of a stream.
    Verify {
        /// theorem1, theoremA-D, theoremF, theoremG, theorem2, lemma1, cor1,
        /// cor2, caterpillar, sekanina or observation.
        #[arg(value_parser = parse_check)]
        check: CheckKind,
        #[command(flatten)]
        input: Input,
        /// Theorems A-D: graphs up to this order get every query.
        #[arg(long, default_value_t = 6)]
        exhaustive_max_n: usize,
        /// Theorems A-D: random queries drawn over larger graphs.
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        /// Include successful queries in the report.
        #[arg(long)]
        all_records: bool,
    },
    /// Report every F_k query without a certificate.
    HuntFk {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        k: usize,
    },
    /// Full subdivision of each input graph.
    Subdivide(Input),
    /// Write one graph per isomorphism class, as graph6.
    Enumerate {
        /// Largest order.
        #[arg(long)]
        n: usize,
        /// Smallest order.
        #[arg(long, default_value_t = 1)]
        min_n: usize,
        /// Keep only graphs satisfying all of these.
        #[arg(long, value_enum, value_delimiter = ',')]
        filter: Vec<FilterArg>,
        /// Which family to enumerate.
        #[arg(long, value_enum, default_value_t = Family::All)]
        family: Family,
    },
}

#[derive(Args)]
struct Caps {
    /// Vertices with d_P = 0.
    #[arg(long, value_delimiter = ',')]
    zero: Vec<usize>,
    /// Vertices with d_P <= 1.
    #[arg(long, value_delimiter = ',')]
    one: Vec<usize>,
}

impl Caps {
    fn constraint(&self) -> DegreeConstraint {
        let c = self
            .zero
            .iter()
            .fold(DegreeConstraint::new(), |c, &v| c.cap(v, PCap::Zero));
        self.one.iter().fold(c, |c, &v| c.cap(v, PCap::AtMostOne))
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FilterArg {
    Connected,
    TwoConnected,
    Dt,
    BlockChain,
    Tree,
}

impl From<FilterArg> for Predicate {
    fn from(f: FilterArg) -> Self {
        match f {
            FilterArg::Connected => Predicate::Connected,
            FilterArg::TwoConnected => Predicate::TwoConnected,
            FilterArg::Dt => Predicate::Dt,
            FilterArg::BlockChain => Predicate::BlockChain,
            FilterArg::Tree => Predicate::Tree,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    /// All simple graphs.
    All,
    /// Trees, generated directly.
    Trees,
    /// 2-connected DT-graphs, generated as subdivisions.
    DtBlocks,
}

fn parse_budget(s: &str) -> Result<u64, String> {
    let t = s.replace('_', "");
    if let Ok(v) = t.parse::<u64>() {
        return Ok(v);
    }
    match t.parse::<f64>() {
        Ok(f) if f.is_finite() && f >= 0.0 && f.fract() == 0.0 && f <= u64::MAX as f64 => {
            Ok(f as u64)
        }
        _ => Err(format!("not a non-negative integer: {s}")),
    }
}

fn parse_check(s: &str) -> Result<CheckKind, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Failure that ends the process with a given code.
struct Fail(u8, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(EXIT_USAGE, e.to_string())
    }
}

impl From<io::Error> for Fail {
    fn from(e: io::Error) -> Self {
        Fail(EXIT_USAGE, e.to_string())
    }
}

fn load(input: &Input) -> Result<Vec<Graph>, Fail> {
    let forced = input.input_format.map(|f| match f {
        InFormat::Graph6 => Format::Graph6,
        InFormat::Edgelist => Format::EdgeList,
    });
    if input.input.as_os_str() == "-" {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text)?;
        let format = forced.unwrap_or_else(|| {
            Format::sniff(text.lines().find(|l| !l.trim().is_empty()).unwrap_or(""))
        });
        return Ok(read_stream(BufReader::new(text.as_bytes()), format)?);
    }
    Ok(match forced {
        Some(f) => read_stream(BufReader::new(std::fs::File::open(&input.input)?), f)?,
        None => read_file(&input.input)?,
    })
}

/// Exit code for a set of search outcomes: any none beats any unknown.
fn worst(tags: impl IntoIterator<Item = &'static str>) -> u8 {
    tags.into_iter().fold(0, |acc, t| match t {
        "none" => 1,
        "unknown" if acc == 0 => 2,
        _ => acc,
    })
}

fn digest(v: &Value) -> String {
    let h = Sha256::digest(v.to_string().as_bytes());
    h.iter().take(4).map(|b| format!("{b:02x}")).collect()
}

struct Output {
    global_format: OutFormat,
    lines: Vec<String>,
    json: Vec<Value>,
}

impl Output {
    fn new(format: OutFormat) -> Self {
        Output {
            global_format: format,
            lines: Vec::new(),
            json: Vec::new(),
        }
    }

    /// One search answer: text line `graph query result digest`, or a JSON
    /// object.
    fn answer<T: serde::Serialize>(&mut self, g: &Graph, query: Value, o: &Outcome<T>) {
        let witness = match o {
            Outcome::Found(t) => serde_json::to_value(t).expect("witness serializes"),
            _ => Value::Null,
        };
        self.lines.push(format!(
            "{} {} {} {}",
            graph_name(g),
            query,
            o.tag(),
            if witness.is_null() {
                "-".into()
            } else {
                digest(&witness)
            }
        ));
        self.json.push(json!({
            "graph": graph_name(g),
            "query": query,
            "result": o.tag(),
            "witness": witness,
        }));
    }

    fn render(&self, command: &str) -> String {
        match self.global_format {
            OutFormat::Text => self.lines.iter().map(|l| format!("{l}\n")).collect(),
            OutFormat::Json => {
                let doc = json!({
                    "schema_version": SCHEMA_VERSION,
                    "command": command,
                    "results": self.json,
                });
                serde_json::to_string_pretty(&doc).expect("output serializes") + "\n"
            }
        }
    }
}

fn emit(global: &Global, text: &str) -> Result<(), Fail> {
    match &global.out {
        Some(p) => std::fs::write(p, text)?,
        None => io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn pool(jobs: Option<usize>) -> Result<rayon::ThreadPool, Fail> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.unwrap_or(0))
        .build()
        .map_err(|e| Fail(EXIT_USAGE, e.to_string()))
}

fn graph_lines(gs: impl IntoIterator<Item = Graph>, format: OutFormat) -> Result<String, Fail> {
    let mut s = String::new();
    for g in gs {
        match format {
            OutFormat::Json => {
                s.push_str(&json!({ "n": g.order(), "edges": g.edges() }).to_string());
                s.push('\n');
            }
            OutFormat::Text => match graph6::encode(&g) {
                Ok(code) => {
                    s.push_str(&code);
                    s.push('\n');
                }
                Err(_) => s.push_str(&edgelist::encode(&g)),
            },
        }
    }
    Ok(s)
}

fn run(cli: Cli) -> Result<u8, Fail> {
    let g = &cli.global;
    let budget = g.budget.unwrap_or(DEFAULT_BUDGET);
    match &cli.command {
        Command::Square(input) => {
            let out = graph_lines(load(input)?.iter().map(square), g.format)?;
            emit(g, &out)?;
            Ok(0)
        }
        Command::Power { input, k } => {
            let gs: Result<Vec<Graph>, Error> = load(input)?.iter().map(|x| power(x, *k)).collect();
            emit(g, &graph_lines(gs?, g.format)?)?;
            Ok(0)
        }
        Command::Subdivide(input) => {
            emit(
                g,
                &graph_lines(load(input)?.iter().map(full_subdivision), g.format)?,
            )?;
            Ok(0)
        }
        Command::Blocks(input) => {
            let mut out = Output::new(g.format);
            for x in load(input)? {
                let bf = block_forest(&x);
                let chain = block_chain_kind(&x)
                    .map(|k| json!(k))
                    .unwrap_or(json!("disconnected"));
                let v = json!({
                    "blocks": bf.blocks,
                    "cutvertices": bf.cutvertices,
                    "chain": chain,
                });
                out.lines.push(format!(
                    "{} blocks={} cutvertices={:?} chain={}",
                    graph_name(&x),
                    bf.blocks.len(),
                    bf.cutvertices.as_slice(),
                    chain
                ));
                out.json
                    .push(json!({ "graph": graph_name(&x), "result": v }));
            }
            emit(g, &out.render("blocks"))?;
            Ok(0)
        }
        Command::Dt(input) => {
            let mut out = Output::new(g.format);
            for x in load(input)? {
                let paths = suspended_paths(&x);
                out.lines.push(format!(
                    "{} dt={} two_connected={} v2={:?} suspended_paths={}",
                    graph_name(&x),
                    is_dt_graph(&x),
                    is_two_connected(&x),
                    v2(&x).as_slice(),
                    paths.len()
                ));
                out.json.push(json!({
                    "graph": graph_name(&x),
                    "dt": is_dt_graph(&x),
                    "two_connected": is_two_connected(&x),
                    "v2": v2(&x),
                    "suspended_paths": paths,
                }));
            }
            emit(g, &out.render("dt"))?;
            Ok(0)
        }
        Command::EpsFind {
            input,
            caps,
            cycle_through,
            nonempty_e,
        } => {
            let mut out = Output::new(g.format);
            let mut tags = Vec::new();
            for x in load(input)? {
                let mut c = caps.constraint();
                if *nonempty_e {
                    c = c.with_nonempty_e();
                }
                let query =
                    json!({ "zero": caps.zero, "one": caps.one, "cycle_through": cycle_through });
                if !cycle_through.is_empty() {
                    let req = VertexSet::new(cycle_through.iter().copied(), x.order())?;
                    match find_cycle_through(&x, &req, budget) {
                        Outcome::Found(k) => c = c.with_cycle(k),
                        other => {
                            tags.push(other.tag());
                            out.answer(&x, query, &other);
                            continue;
                        }
                    }
                }
                let r = find_eps(&x, &c, budget)?.map(|d| d.to_json(&x));
                tags.push(r.tag());
                out.answer(&x, query, &r);
            }
            emit(g, &out.render("eps-find"))?;
            Ok(worst(tags))
        }
        Command::JepsFind { input, v, w, caps } => {
            let mut out = Output::new(g.format);
            let mut tags = Vec::new();
            for x in load(input)? {
                let r = find_jeps(&x, *v, *w, &caps.constraint(), budget)?.map(|d| d.to_json(&x));
                tags.push(r.tag());
                out.answer(
                    &x,
                    json!({ "v": v, "w": w, "zero": caps.zero, "one": caps.one }),
                    &r,
                );
            }
            emit(g, &out.render("jeps-find"))?;
            Ok(worst(tags))
        }
        Command::Wcycle { input, w } => {
            let mut out = Output::new(g.format);
            for x in load(input)? {
                let set = VertexSet::new(w.iter().copied(), x.order())?;
                let best = best_w_cycle(&x, &set)?;
                out.lines.push(format!(
                    "{} w={:?} count={} sound={} cycle={:?}",
                    graph_name(&x),
                    w,
                    best.count,
                    best.sound,
                    best.cycle.vertices
                ));
                out.json
                    .push(json!({ "graph": graph_name(&x), "query": { "w": w }, "result": best }));
            }
            emit(g, &out.render("wcycle"))?;
            Ok(0)
        }
        Command::Fk { input, k, a } => {
            if a.len() != *k {
                return Err(Fail(
                    EXIT_USAGE,
                    format!("--a lists {} vertices but --k is {k}", a.len()),
                ));
            }
            let mut out = Output::new(g.format);
            let mut tags = Vec::new();
            for x in load(input)? {
                let q = FkQuery::new(&x, a.clone())?;
                let r = check_fk(&q, budget)?.map(|c| c.to_json(&q));
                tags.push(r.tag());
                out.answer(&x, json!({ "k": k, "a": a }), &r);
            }
            emit(g, &out.render("fk"))?;
            Ok(worst(tags))
        }
        Command::Hamcycle { input, v, w } => {
            let mut out = Output::new(g.format);
            let mut tags = Vec::new();
            let c = HamCycleConstraint {
                v: *v,
                w: w.clone(),
            };
            for x in load(input)? {
                let r = ham_cycle_in_square(&x, &c, budget)?;
                tags.push(r.tag());
                out.answer(&x, json!({ "v": v, "w": w }), &r);
            }
            emit(g, &out.render("hamcycle"))?;
            Ok(worst(tags))
        }
        Command::Verify {
            check,
            input,
            exhaustive_max_n,
            samples,
            all_records,
        } => {
            let graphs = load(input)?;
            let opts = SweepOptions {
                budget,
                seed: g.seed,
                exhaustive_max_n: *exhaustive_max_n,
                samples: *samples,
                all_records: *all_records,
            };
            let report = pool(g.jobs)?.install(|| sweep(*check, &graphs, &opts))?;
            let text = match g.format {
                OutFormat::Json => report.to_json_pretty() + "\n",
                OutFormat::Text => {
                    let s = &report.summary;
                    let mut t = format!(
                        "{}: graphs={} skipped={} queries={} found={} none={} unknown={} vacuous={} invalid={}\n",
                        report.check,
                        s.graphs,
                        s.skipped_graphs,
                        s.queries,
                        s.found,
                        s.none,
                        s.unknown,
                        s.vacuous,
                        s.invalid_certificate
                    );
                    for r in &report.records {
                        let d = r
                            .certificate
                            .as_ref()
                            .map(digest)
                            .unwrap_or_else(|| "-".into());
                        t.push_str(&format!(
                            "{} {} {} {}\n",
                            r.graph,
                            r.query,
                            r.result.name(),
                            d
                        ));
                    }
                    t
                }
            };
            emit(g, &text)?;
            Ok(report.summary.exit_code() as u8)
        }
        Command::HuntFk { input, k } => {
            let graphs = load(input)?;
            let report = pool(g.jobs)?.install(|| hunt_fk_failures(&graphs, *k, budget))?;
            let text = match g.format {
                OutFormat::Json => {
                    let doc = json!({ "schema_version": SCHEMA_VERSION, "check": "hunt-fk", "report": report });
                    serde_json::to_string_pretty(&doc).expect("report serializes") + "\n"
                }
                OutFormat::Text => {
                    let mut t = format!(
                        "hunt-fk k={}: graphs={} skipped={} queries={} orderings={} none={} unknown={}\n",
                        report.k,
                        report.graphs_scanned,
                        report.graphs_skipped,
                        report.queries,
                        report.orderings,
                        report.none.len(),
                        report.unknown.len()
                    );
                    for e in report.none.iter().chain(&report.unknown) {
                        t.push_str(&format!("{} {:?}\n", e.graph, e.a));
                    }
                    t
                }
            };
            emit(g, &text)?;
            // Failures are findings here; only an unfinished hunt is flagged.
            Ok(if report.unknown.is_empty() { 0 } else { 2 })
        }
        Command::Enumerate {
            n,
            min_n,
            filter,
            family,
        } => {
            let preds: Vec<Predicate> = filter.iter().map(|&f| f.into()).collect();
            let f = CorpusFilter::new(preds, *min_n..=*n)?;
            let graphs = match family {
                Family::All => all_graphs_range(*min_n, *n)?,
                Family::Trees => (*min_n.max(&1)..=*n)
                    .map(trees)
                    .collect::<Result<Vec<_>, _>>()?
                    .concat(),
                Family::DtBlocks => (*min_n..=*n)
                    .map(dt_blocks)
                    .collect::<Result<Vec<_>, _>>()?
                    .concat(),
            };
            let kept = hamsq::corpus::filter(graphs, &f);
            let mut s = String::new();
            for x in kept {
                s.push_str(&graph6::encode(&x)?);
                s.push('\n');
            }
            emit(g, &s)?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(Fail(code, msg)) => {
            eprintln!("hamsq: {msg}");
            ExitCode::from(code)
        }
    }
}
