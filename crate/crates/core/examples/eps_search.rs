//! EPS- and JEPS-graph search under degree caps, with independent
//! verification of each answer.

use hamsq::corpus::generators::{complete, cycle, theta};
use hamsq::eps::{find_eps, find_jeps, verify_eps, verify_jeps, DegreeConstraint, PCap};
use hamsq::{Outcome, DEFAULT_BUDGET};

fn main() -> hamsq::Result<()> {
    let g = theta(2, 2, 3);
    let c = DegreeConstraint::bracket(0, &[1]);
    match find_eps(&g, &c, DEFAULT_BUDGET)? {
        Outcome::Found(d) => {
            println!("theta(2,2,3) [0; 1]-EPS: E={:?} P={:?}", d.e, d.p);
            assert!(verify_eps(&g, &d).is_ok() && c.admits(&g, &d.e, &d.p));
        }
        other => println!("theta(2,2,3): {}", other.tag()),
    }

    // On a cycle the only EPS-graph with d_P = 0 everywhere is the cycle itself.
    let c6 = cycle(6);
    let zero = (0..6).fold(DegreeConstraint::new(), |c, v| c.cap(v, PCap::Zero));
    println!(
        "C6 all caps zero: {:?}",
        find_eps(&c6, &zero, DEFAULT_BUDGET)?.map(|d| d.e)
    );

    let k4 = complete(4);
    let j = find_jeps(
        &k4,
        0,
        1,
        &DegreeConstraint::new()
            .cap(0, PCap::Zero)
            .cap(1, PCap::Zero),
        DEFAULT_BUDGET,
    )?;
    if let Outcome::Found(d) = &j {
        println!(
            "K4 JEPS with odd ends 0, 1: E={:?} P={:?} J={:?}",
            d.e, d.p, d.j
        );
        assert!(verify_jeps(&k4, d).is_ok());
    }
    Ok(())
}
