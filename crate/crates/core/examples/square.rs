//! Squares and higher powers of a few small graphs.

use hamsq::corpus::generators::{cycle, path, star};
use hamsq::powers::{diameter, power, square};

fn main() -> hamsq::Result<()> {
    for (name, g) in [("P5", path(5)), ("C7", cycle(7)), ("K1,4", star(4))] {
        let sq = square(&g);
        println!(
            "{name}: n={} m={} diameter={:?} -> square m={} diameter={:?}",
            g.order(),
            g.size(),
            diameter(&g),
            sq.size(),
            diameter(&sq)
        );
    }
    let p8 = path(8);
    for k in 1..=4 {
        println!("P8^{k} has {} edges", power(&p8, k)?.size());
    }
    Ok(())
}
