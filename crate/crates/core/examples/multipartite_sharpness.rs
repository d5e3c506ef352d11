//! Complete multipartite graphs attain the bound: t = (n - n1)/n1 exactly,
//! and mu2 = n - n1 has multiplicity r(n1 - 1).
//!
//!     cargo run --example multipartite_sharpness

use toughlab::spectral::{spectrum, toughness_bound, DEFAULT_TOL};
use toughlab::toughness::multipartite_toughness;
use toughlab::{complete_multipartite, exact_toughness, PartitionSpec};

fn main() -> toughlab::Result<()> {
    println!(
        "{:<14} {:>6} {:>8} {:>10} {:>5}",
        "graph", "t", "formula", "bound", "mult"
    );
    for parts in [
        vec![2, 2],
        vec![3, 3],
        vec![3, 3, 3],
        vec![4, 2, 1],
        vec![5, 5, 2],
        vec![4, 4, 4],
    ] {
        let spec = PartitionSpec::new(parts)?;
        let g = complete_multipartite(&spec);
        let t = exact_toughness(&g)?.value;
        let s = spectrum(&g, DEFAULT_TOL)?;
        let mult = s.multiplicity(s.mu2());
        println!(
            "{:<14} {:>6} {:>8} {:>10.6} {:>5}",
            spec.to_string(),
            t.to_string(),
            multipartite_toughness(&spec).to_string(),
            toughness_bound(&g)?,
            mult
        );
        assert_eq!(t, multipartite_toughness(&spec));
        assert_eq!(mult, spec.largest_count() * (spec.largest() - 1));
    }
    Ok(())
}
