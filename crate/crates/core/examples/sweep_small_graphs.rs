//! Sweeps every connected graph on up to 6 vertices (one per isomorphism
//! class), writes the records to CSV and lists the graphs where the bound is
//! tight.
//!
//!     cargo run --example sweep_small_graphs -- atlas.csv

use std::path::PathBuf;

use toughlab::atlas::{
    find_tight, summarize, sweep, write_records, RecordFormat, SweepConfig, TIGHT_TOL,
};

fn main() -> toughlab::Result<()> {
    let mut cfg = SweepConfig::exhaustive(2);
    cfg.n_max = 6;
    cfg.dedup = true;
    let records = sweep(&cfg)?;
    let summary = summarize(&records);
    println!(
        "{} isomorphism classes, {} complete, min gap {:?}",
        summary.records, summary.complete, summary.min_gap
    );

    let tight = find_tight(&records, TIGHT_TOL);
    println!("{} tight graphs:", tight.len());
    for r in &tight {
        println!(
            "  n={} m={:>2} {:<8} t = {:<4} witness {}",
            r.n,
            r.m,
            r.graph_id,
            r.toughness.to_string(),
            r.witness_cut
        );
    }

    if let Some(path) = std::env::args().nth(1).map(PathBuf::from) {
        write_records(&records, &path, RecordFormat::from_path(&path))?;
        println!("wrote {}", path.display());
    }
    Ok(())
}
