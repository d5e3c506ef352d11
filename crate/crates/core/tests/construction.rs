//! The intra-part edge construction over every admissible partition with at
//! most 10 vertices.

use toughlab::atlas::{verify_construction, Addition};
use toughlab::{Error, PartitionSpec};

fn partitions(n: usize, max: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    (1..=max.min(n))
        .rev()
        .flat_map(|first| {
            partitions(n - first, first)
                .into_iter()
                .map(move |mut rest| {
                    rest.insert(0, first);
                    rest
                })
        })
        .collect()
}

fn admissible() -> Vec<(PartitionSpec, Vec<usize>)> {
    (2..=10)
        .flat_map(|n| partitions(n, n))
        .filter(|p| p.len() >= 2)
        .filter_map(|p| {
            let spec = PartitionSpec::new(p).unwrap();
            let parts: Vec<usize> = (2..=spec.part_count())
                .filter(|&i| spec.check_augmentable(i).is_ok())
                .collect();
            (!parts.is_empty()).then_some((spec, parts))
        })
        .collect()
}

#[test]
fn single_additions_pass_every_check() {
    let specs = admissible();
    assert!(specs.len() >= 10);
    for (spec, parts) in specs {
        for part in parts {
            let r = verify_construction(&spec, &[Addition { part, pair: None }]).unwrap();
            assert!(r.all_pass(), "{spec} part {part}: {r:?}");
        }
    }
}

#[test]
fn iteration_passes_until_the_eigenspace_is_spent() {
    for (spec, parts) in admissible() {
        // Round-robin over admissible parts until a hypothesis fails.
        let mut adds = Vec::new();
        let mut last_ok = 0;
        for k in 0.. {
            adds.push(Addition {
                part: parts[k % parts.len()],
                pair: None,
            });
            match verify_construction(&spec, &adds) {
                Ok(r) => {
                    assert!(r.all_pass(), "{spec}: {r:?}");
                    last_ok = r.steps.len();
                }
                Err(Error::Precondition { step, .. }) => {
                    assert_eq!(step, Some(adds.len()));
                    break;
                }
                Err(e) => panic!("{spec}: {e}"),
            }
        }
        assert!(last_ok >= 1, "{spec}");
    }
}

#[test]
fn inadmissible_specs_are_rejected() {
    for (parts, part) in [
        (vec![2, 2], 2),
        (vec![3, 2], 2),
        (vec![4, 2, 2], 2),
        (vec![3, 3], 1),
    ] {
        let spec = PartitionSpec::new(parts).unwrap();
        let err = verify_construction(&spec, &[Addition { part, pair: None }]).unwrap_err();
        assert!(
            matches!(err, Error::Precondition { step: Some(1), .. }),
            "{spec}: {err}"
        );
    }
}
