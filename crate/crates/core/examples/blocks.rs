//! Block decomposition, block chains and DT-graphs.

use hamsq::corpus::generators::{bowtie, complete, full_subdivision, theta};
use hamsq::decomposition::{block_chain_kind, block_forest, is_dt_graph, suspended_paths, v2};
use hamsq::Graph;

fn main() -> hamsq::Result<()> {
    // A triangle, a bridge, then another triangle.
    let chain = Graph::new(6, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)])?;
    let tree_like = Graph::new(5, [(0, 1), (0, 2), (0, 3), (3, 4)])?;
    for (name, g) in [
        ("bowtie", bowtie()),
        ("chain", chain),
        ("spiderish", tree_like),
    ] {
        let bf = block_forest(&g);
        println!(
            "{name}: {} blocks, cutvertices {:?}",
            bf.blocks.len(),
            bf.cutvertices.as_slice()
        );
        for b in &bf.blocks {
            println!(
                "  {:?} on {:?}{}",
                b.kind,
                b.vertices,
                if b.endblock { " (end)" } else { "" }
            );
        }
        match block_chain_kind(&g) {
            Ok(kind) => println!("  block chain: {kind:?}"),
            Err(e) => println!("  not a block chain: {e}"),
        }
    }

    for (name, g) in [
        ("K4", complete(4)),
        ("S(K4)", full_subdivision(&complete(4))),
        ("theta(1,2,3)", theta(1, 2, 3)),
    ] {
        println!(
            "{name}: DT={} |V2|={} suspended paths={}",
            is_dt_graph(&g),
            v2(&g).len(),
            suspended_paths(&g).len()
        );
    }
    Ok(())
}
