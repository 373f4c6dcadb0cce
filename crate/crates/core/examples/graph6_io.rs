//! graph6 and edge-list round trips, and format sniffing.

use std::io::Cursor;

use hamsq::corpus::generators::{bowtie, complete};
use hamsq::corpus::{edgelist, graph6, read_stream, Format};
use hamsq::Graph;

fn main() -> hamsq::Result<()> {
    let g = bowtie();
    let code = graph6::encode(&g)?;
    println!("bowtie as graph6: {code}");
    let back = graph6::decode(&code)?;
    println!("decoded edges: {:?}", back.edges());

    let text = edgelist::encode(&complete(3));
    print!("K3 as an edge list:\n{text}");
    println!(
        "sniffed as {:?}",
        Format::sniff(text.lines().next().unwrap())
    );
    let parsed = read_stream(Cursor::new(text), Format::EdgeList)?;
    println!("read back {} graph(s)", parsed.len());

    // Multigraphs have no graph6 form; the inline edge list is used instead.
    let multi = Graph::new(2, [(0, 1), (0, 1)])?;
    println!("{}", edgelist::encode_inline(&multi));
    assert!(graph6::encode(&multi).is_err());
    Ok(())
}
