//! Certifies every inequality for one vertex cut and prints the verdict
//! table. P4 with U = {1} leaves a deficient component, so the determinant
//! branch is exercised too.
//!
//!     cargo run --example certify_cut

use toughlab::certify::certify_cut;
use toughlab::{Graph, VertexSet};

fn main() -> toughlab::Result<()> {
    let g = Graph::path(4);
    let u: VertexSet = "{1}".parse()?;
    let r = certify_cut(&g, u)?;
    println!(
        "P4, U = {u}: components {:?}, boundary edges {:?}",
        r.component_sizes, r.partition.boundary_counts
    );
    for v in &r.verdicts {
        println!(
            "  {} {:<36} slack {:+.3e}",
            if v.holds { "ok  " } else { "FAIL" },
            v.name,
            v.slack
        );
    }
    if let Some(i) = r.trace.deficient_index {
        println!(
            "deficient component H{}: alpha = {:.6}, sigma = {:.6}",
            i + 1,
            r.trace.alpha,
            r.trace.sigma
        );
    }
    for v in &r.informational {
        println!("  info {:<36} {}", v.name, v.holds);
    }
    assert!(r.all_hold());
    Ok(())
}
