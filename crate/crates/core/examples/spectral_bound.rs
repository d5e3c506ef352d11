//! Laplacian spectrum and the bound mu2 / (mu_n - delta) for a few classic
//! graphs.
//!
//!     cargo run --example spectral_bound

use toughlab::spectral::{fiedler_check, spectrum, toughness_bound, DEFAULT_TOL};
use toughlab::{complete_multipartite, Graph, PartitionSpec};

fn main() -> toughlab::Result<()> {
    let graphs = [
        ("P4", Graph::path(4)),
        ("C6", Graph::cycle(6)),
        ("Petersen", Graph::petersen()),
        (
            "K_{3,3}",
            complete_multipartite(&PartitionSpec::new(vec![3, 3])?),
        ),
        (
            "K_{4,2,2}",
            complete_multipartite(&PartitionSpec::new(vec![4, 2, 2])?),
        ),
    ];
    println!(
        "{:<10} {:>3} {:>10} {:>10} {:>10}",
        "graph", "δ", "μ2", "μn", "bound"
    );
    for (name, g) in &graphs {
        let s = spectrum(g, DEFAULT_TOL)?;
        let f = fiedler_check(g)?;
        assert!(f.holds, "0 < mu2 <= delta < mu_n - 1 fails for {name}");
        println!(
            "{name:<10} {:>3} {:>10.6} {:>10.6} {:>10.6}",
            g.min_degree(),
            s.mu2(),
            s.mu_n(),
            toughness_bound(g)?
        );
    }
    // The bound is undefined for complete graphs.
    assert!(toughness_bound(&Graph::complete(5)).is_err());
    Ok(())
}
