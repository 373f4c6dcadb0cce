//! Trees with hamiltonian squares are exactly the caterpillars.

use hamsq::corpus::enumerate::trees;
use hamsq::corpus::{graph_name, is_caterpillar};
use hamsq::hamilton::{ham_cycle_in_square, HamCycleConstraint};
use hamsq::DEFAULT_BUDGET;

fn main() -> hamsq::Result<()> {
    for n in 3..=8 {
        let (mut cat, mut other) = (0, 0);
        for t in trees(n)? {
            let ham = ham_cycle_in_square(&t, &HamCycleConstraint::default(), DEFAULT_BUDGET)?;
            let c = is_caterpillar(&t)?;
            assert_eq!(ham.is_found(), c, "{}", graph_name(&t));
            if c {
                cat += 1
            } else {
                other += 1
            }
        }
        println!("n={n}: {cat} caterpillars, {other} other trees");
    }
    Ok(())
}
