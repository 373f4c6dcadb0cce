//! The EPS/JEPS dichotomy for every pair of vertices of a few 2-connected
//! graphs.

use hamsq::corpus::generators::{complete, complete_bipartite, cycle, full_subdivision};
use hamsq::eps::checks::{check_theorem1, Dichotomy};
use hamsq::{Outcome, DEFAULT_BUDGET};

fn main() -> hamsq::Result<()> {
    let graphs = [
        ("C5", cycle(5)),
        ("K2,3", complete_bipartite(2, 3)),
        ("S(K4)", full_subdivision(&complete(4))),
    ];
    for (name, g) in graphs {
        let (mut eps, mut jeps) = (0, 0);
        for v in g.vertices() {
            for w in g.vertices().filter(|&w| w != v) {
                match check_theorem1(&g, v, w, DEFAULT_BUDGET)? {
                    Outcome::Found(Dichotomy::BranchI(_)) => eps += 1,
                    Outcome::Found(Dichotomy::BranchII(_)) => jeps += 1,
                    other => println!("{name} ({v}, {w}): {}", other.tag()),
                }
            }
        }
        println!("{name}: {eps} pairs by EPS, {jeps} by JEPS");
    }
    Ok(())
}
