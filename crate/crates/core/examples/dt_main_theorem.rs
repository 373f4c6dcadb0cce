//! Sweeps the statement about 4-tuples in squares of 2-connected DT-graphs
//! over every such graph on at most 8 vertices.

use hamsq::corpus::enumerate::dt_blocks;
use hamsq::harness::{sweep, CheckKind, SweepOptions};

fn main() -> hamsq::Result<()> {
    let mut graphs = Vec::new();
    for n in 4..=8 {
        let gs = dt_blocks(n)?;
        println!("n={n}: {} DT blocks", gs.len());
        graphs.extend(gs);
    }
    let report = sweep(CheckKind::Theorem2, &graphs, &SweepOptions::default())?;
    let s = &report.summary;
    println!(
        "queries={} found={} none={} unknown={}",
        s.queries, s.found, s.none, s.unknown
    );
    std::process::exit(s.exit_code());
}
