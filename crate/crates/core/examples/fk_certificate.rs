//! F_k certificates: search, verify, serialize, and a query that has none.

use hamsq::corpus::generators::{complete_bipartite, cycle};
use hamsq::hamilton::{check_fk, verify_certificate, FkQuery};
use hamsq::{Outcome, DEFAULT_BUDGET};

fn main() -> hamsq::Result<()> {
    let c5 = cycle(5);
    let q = FkQuery::new(&c5, vec![0, 2, 1, 3])?;
    if let Outcome::Found(cert) = check_fk(&q, DEFAULT_BUDGET)? {
        verify_certificate(&q, &cert).expect("search answers verify");
        println!(
            "{}",
            serde_json::to_string_pretty(&cert.to_json(&q)).unwrap()
        );
        println!("witness at x1 or x2: {}", cert.witness_touches_terminal(&q));
    }

    // K2,3 with x1, x2 the two 3-valent vertices: every edge of G meets one
    // of them, yet only the first and last path steps do, so three witnesses
    // cannot fit.
    let k23 = complete_bipartite(2, 3);
    let q = FkQuery::new(&k23, vec![0, 1, 2, 3, 4])?;
    println!(
        "K2,3 F_5 query {:?}: {}",
        q.a(),
        check_fk(&q, DEFAULT_BUDGET)?.tag()
    );
    Ok(())
}
