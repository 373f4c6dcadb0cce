//! Looks for F_k queries without a certificate over all 2-connected graphs
//! up to a given order. Usage: `hunt [k] [max_n]` (defaults 5 and 6).

use hamsq::corpus::enumerate::all_graphs_range;
use hamsq::corpus::hunt_fk_failures;
use hamsq::decomposition::is_two_connected;
use hamsq::DEFAULT_BUDGET;

fn main() -> hamsq::Result<()> {
    let mut args = std::env::args()
        .skip(1)
        .map(|a| a.parse::<usize>().expect("numeric argument"));
    let k = args.next().unwrap_or(5);
    let max_n = args.next().unwrap_or(6);
    let graphs: Vec<_> = all_graphs_range(k, max_n)?
        .into_iter()
        .filter(is_two_connected)
        .collect();
    let report = hunt_fk_failures(&graphs, k, DEFAULT_BUDGET)?;
    println!(
        "k={k}: {} graphs, {} queries, {} without certificate, {} unknown",
        report.graphs_scanned,
        report.queries,
        report.none.len(),
        report.unknown.len()
    );
    for e in report.none.iter().take(10) {
        println!("  {} a={:?}", e.graph, e.a);
    }
    Ok(())
}
