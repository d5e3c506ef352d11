//! Builds graphs that attain t = mu2 / (mu_n - delta) without being complete
//! multipartite, by adding edges inside parts of K_{3,3,3}, and verifies
//! each step.
//!
//!     cargo run --example equality_construction

use toughlab::atlas::{verify_construction, Addition};
use toughlab::PartitionSpec;

fn main() -> toughlab::Result<()> {
    let spec = PartitionSpec::new(vec![3, 3, 3])?;
    let adds = [
        Addition {
            part: 2,
            pair: None,
        },
        Addition {
            part: 3,
            pair: None,
        },
        Addition {
            part: 2,
            pair: Some((4, 5)),
        },
    ];
    let report = verify_construction(&spec, &adds)?;
    println!("start {spec} = {}", report.base_graph6);
    for s in &report.steps {
        println!(
            "step {}: +{:?} in V{} -> {} | δ = {}, μ2 = {:.9} (mult {}), μn = {:.9}, t = {}",
            s.step,
            s.pair,
            s.part,
            s.graph6,
            s.delta,
            s.mu2,
            s.mu2_multiplicity,
            s.mu_n,
            s.toughness
        );
        for c in s.checks.iter().filter(|c| !c.holds) {
            println!("  failed: {}", c.name);
        }
    }
    assert!(report.all_pass());

    // V2 has three vertex pairs, so a fourth addition there has nothing left
    // to add and is rejected with the step number.
    match verify_construction(
        &spec,
        &[Addition {
            part: 2,
            pair: None,
        }; 4],
    ) {
        Ok(r) => println!("four additions in V2: all pass = {}", r.all_pass()),
        Err(e) => println!("four additions in V2: {e}"),
    }
    Ok(())
}
