//! Exact toughness with a minimizing cut, compared against the spectral
//! bound. Pass a graph6 string to analyse your own graph.
//!
//!     cargo run --example exact_toughness -- 'IheA@GUAo'

use toughlab::spectral::toughness_bound;
use toughlab::{exact_toughness, graph6, Graph, Toughness};

fn main() -> toughlab::Result<()> {
    let g = match std::env::args().nth(1) {
        Some(text) => graph6::decode(&text)?,
        None => Graph::petersen(),
    };
    let cert = exact_toughness(&g)?;
    let Toughness::Finite(t) = cert.value else {
        println!("complete graph: t = inf");
        return Ok(());
    };
    let w = cert.witness.expect("finite toughness has a witness");
    println!("t = {t}");
    println!(
        "  witness U = {w}: |U| = {}, c(G - U) = {}",
        w.len(),
        cert.components_at_witness
    );
    for (i, h) in g.components(w).iter().enumerate() {
        println!("  H{} = {h}", i + 1);
    }
    let bound = toughness_bound(&g)?;
    println!(
        "bound = {bound:.12}, gap = {:.12}",
        cert.value.to_f64() - bound
    );
    Ok(())
}
