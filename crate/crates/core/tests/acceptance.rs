//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::collections::BTreeMap;
use std::process::Command;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use toughlab::atlas::{self, Addition};
use toughlab::certify::{self, CutReport};
use toughlab::graph6;
use toughlab::spectral::{self, eigenvalues_sym, laplacian, DEFAULT_TOL};
use toughlab::toughness::{self, exact_toughness_with, multipartite_toughness, SearchOptions};
use toughlab::{complete_multipartite, Error, Graph, PartitionSpec, Toughness, VertexSet};

const GAP_TOL: f64 = 1e-9;
const PSD_TOL: f64 = 1e-8;
const QUOTIENT_TOL: f64 = 1e-12;
const SPECTRUM_TOL: f64 = 1e-10;
const EQ_TOL: f64 = 1e-9;
const SEED: u64 = 0x7007_1ab5;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

/// Connected labelled graphs for n = 1..=7.
const CONNECTED_LABELLED: [usize; 7] = [1, 1, 4, 38, 728, 26704, 1866256];

fn criterion_exhaustive_bound() -> Outcome {
    let mut total = 0;
    let mut min_gap = f64::INFINITY;
    for n in 2..=7 {
        match atlas::verify_exhaustive(n, 0) {
            Ok(s) => {
                if s.records != CONNECTED_LABELLED[n - 1] {
                    return outcome(false, format!("n={n}: {} graphs enumerated", s.records));
                }
                total += s.records - s.complete;
                if let Some(g) = s.min_gap {
                    min_gap = min_gap.min(g);
                }
            }
            Err(Error::Counterexample(b)) => {
                return outcome(
                    false,
                    format!("counterexample {} at cut {}", b.graph6, b.cut),
                )
            }
            Err(e) => return outcome(false, format!("n={n}: {e}")),
        }
    }
    outcome(
        min_gap >= -GAP_TOL,
        format!("{total} connected non-complete labelled graphs on 2..=7 vertices, min gap {min_gap:.3e}"),
    )
}

/// Non-increasing partitions of `n` with parts at most `max`.
fn partitions(n: usize, max: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in (1..=max.min(n)).rev() {
        for mut rest in partitions(n - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn criterion_sharpness() -> Outcome {
    let mut checked = 0;
    let mut complete = 0;
    for n in 2..=10 {
        for parts in partitions(n, n).into_iter().filter(|p| p.len() >= 2) {
            let spec = PartitionSpec::new(parts.clone()).unwrap();
            let g = complete_multipartite(&spec);
            let cert = toughness::exact_toughness(&g).unwrap();
            let n1 = spec.largest();
            if n1 == 1 {
                if cert.value != Toughness::Infinite
                    || multipartite_toughness(&spec) != Toughness::Infinite
                {
                    return outcome(false, format!("{spec}: complete graph not infinite"));
                }
                complete += 1;
                continue;
            }
            let want = Toughness::ratio((n - n1) as u64, n1 as u64);
            let bound = spectral::toughness_bound(&g).unwrap();
            if cert.value != want
                || multipartite_toughness(&spec) != want
                || (want.to_f64() - bound).abs() > EQ_TOL
            {
                return outcome(
                    false,
                    format!("{spec}: t = {}, expected {want}, bound {bound}", cert.value),
                );
            }
            checked += 1;
        }
    }
    let k33 = toughness::exact_toughness(&complete_multipartite(&"3,3".parse().unwrap()))
        .unwrap()
        .value;
    let k333 = toughness::exact_toughness(&complete_multipartite(&"3,3,3".parse().unwrap()))
        .unwrap()
        .value;
    outcome(
        k33 == Toughness::ratio(1, 1) && k333 == Toughness::ratio(2, 1),
        format!(
            "{checked} non-complete specs with n <= 10 attain t = bound exactly ({complete} complete specs give t = inf); t(K33) = {k33}, t(K333) = {k333}"
        ),
    )
}

fn criterion_construction() -> Outcome {
    let mut details = Vec::new();
    for parts in ["3,3", "3,3,3"] {
        let spec: PartitionSpec = parts.parse().unwrap();
        let base = complete_multipartite(&spec);
        let s0 = spectral::spectrum(&base, DEFAULT_TOL).unwrap();
        let r = match atlas::verify_construction(
            &spec,
            &[Addition {
                part: 2,
                pair: None,
            }],
        ) {
            Ok(r) => r,
            Err(e) => return outcome(false, format!("{spec}: {e}")),
        };
        let step = &r.steps[0];
        let unchanged = step.delta == base.min_degree()
            && (step.mu2 - s0.mu2()).abs() <= EQ_TOL
            && (step.mu_n - s0.mu_n()).abs() <= EQ_TOL
            && (step.toughness.to_f64() - step.bound).abs() <= EQ_TOL;
        if !r.all_pass() || !unchanged || step.checks.len() < 5 {
            return outcome(false, format!("{spec}: {step:?}"));
        }
        details.push(format!(
            "{spec} + edge {:?}: t = {} = bound",
            step.pair, step.toughness
        ));
    }
    outcome(true, details.join("; "))
}

fn criterion_multiplicity() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut tried = Vec::new();
    while tried.len() < 20 {
        let s = rng.gen_range(2..=5);
        let mut parts: Vec<usize> = (0..s).map(|_| rng.gen_range(1..=6)).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        if parts.iter().sum::<usize>() > 12 || parts[0] < 2 {
            continue;
        }
        let spec = PartitionSpec::new(parts).unwrap();
        let g = complete_multipartite(&spec);
        let sp = spectral::spectrum(&g, DEFAULT_TOL).unwrap();
        let want = spec.largest_count() * (spec.largest() - 1);
        let got = sp.multiplicity(sp.mu2());
        if got != want || (sp.mu2() - (spec.order() - spec.largest()) as f64).abs() > EQ_TOL {
            return outcome(
                false,
                format!("{spec}: multiplicity {got}, expected {want}"),
            );
        }
        tried.push(spec.to_string());
    }
    outcome(
        true,
        format!("20 random specs, n <= 12: {}", tried.join(" ")),
    )
}

#[derive(Default)]
struct CutStats {
    cuts: usize,
    failures: BTreeMap<String, usize>,
    worst: BTreeMap<String, f64>,
    max_quotient_diff: f64,
    deficient_cuts: usize,
}

impl CutStats {
    fn add(&mut self, r: &CutReport) {
        self.cuts += 1;
        if r.trace.deficient_index.is_some() {
            self.deficient_cuts += 1;
        }
        for v in &r.verdicts {
            if !v.holds {
                *self.failures.entry(v.name.clone()).or_default() += 1;
            }
            let family = family(&v.name);
            let w = self
                .worst
                .entry(family.to_string())
                .or_insert(f64::INFINITY);
            *w = w.min(v.slack);
            if v.name.starts_with("quotient_consistency") {
                self.max_quotient_diff = self.max_quotient_diff.max(-v.slack);
            }
        }
    }

    fn merge(mut self, other: CutStats) -> CutStats {
        self.cuts += other.cuts;
        self.deficient_cuts += other.deficient_cuts;
        for (k, v) in other.failures {
            *self.failures.entry(k).or_default() += v;
        }
        for (k, v) in other.worst {
            let w = self.worst.entry(k).or_insert(f64::INFINITY);
            *w = w.min(v);
        }
        self.max_quotient_diff = self.max_quotient_diff.max(other.max_quotient_diff);
        self
    }
}

fn family(name: &str) -> &str {
    match name {
        n if n.starts_with("psd_") => "psd",
        n if n.starts_with("degree_bound") => "degree",
        n if n.starts_with("fiedler_") => "fiedler",
        n if n.starts_with("quotient_") => "quotient",
        n => n,
    }
}

fn certify_all_cuts(g: &Graph) -> CutStats {
    let s = spectral::spectrum(g, DEFAULT_TOL).unwrap();
    let mut stats = CutStats::default();
    for u in certify::vertex_cuts(g) {
        stats.add(&certify::certify_with(g, u, &s).unwrap());
    }
    stats
}

fn random_pair(i: u64) -> (Graph, VertexSet) {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    rng.set_stream(i);
    let n = rng.gen_range(3..=12);
    let p = rng.gen_range(0.25..0.85);
    let g = loop {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::new(n, &edges).unwrap();
        if g.is_connected() && !g.is_complete() {
            break g;
        }
    };
    let full = g.vertices().bits();
    for _ in 0..1000 {
        let u = VertexSet::from_bits(rng.gen::<u64>() & full);
        if !u.is_empty() && g.component_count(u) >= 2 {
            return (g, u);
        }
    }
    let v = (0..n).find(|&v| g.degree(v) < n - 1).unwrap();
    let u = g.neighbors(v);
    (g, u)
}

fn cut_corpus() -> (CutStats, CutStats) {
    let graphs: Vec<Graph> = (3..=6)
        .flat_map(|n| atlas::enumerate_connected(n, false).unwrap())
        .filter(|g| !g.is_complete())
        .collect();
    let exhaustive = graphs
        .par_iter()
        .map(certify_all_cuts)
        .reduce(CutStats::default, CutStats::merge);
    let random = (0..10_000u64)
        .into_par_iter()
        .map(|i| {
            let (g, u) = random_pair(i);
            let mut st = CutStats::default();
            st.add(&certify::certify_cut(&g, u).unwrap());
            st
        })
        .reduce(CutStats::default, CutStats::merge);
    (exhaustive, random)
}

fn criterion_cut_suites(exhaustive: &CutStats, random: &CutStats) -> Outcome {
    let psd_ok = [exhaustive, random]
        .iter()
        .all(|s| s.worst.get("psd").is_some_and(|&w| w >= -PSD_TOL));
    let failures: Vec<String> = exhaustive
        .failures
        .iter()
        .chain(&random.failures)
        .map(|(k, v)| format!("{k} x{v}"))
        .collect();
    let worst: Vec<String> = [
        "psd",
        "schur_complement",
        "schur_sum",
        "pairwise",
        "matdet",
        "main",
    ]
    .iter()
    .map(|f| {
        let get = |s: &CutStats| s.worst.get(*f).copied().unwrap_or(f64::INFINITY);
        let w = get(exhaustive).min(get(random));
        format!("{f} {w:.2e}")
    })
    .collect();
    outcome(
        psd_ok && failures.is_empty(),
        format!(
            "{} cuts of all connected non-complete labelled graphs n <= 6 and {} random pairs n <= 12 ({} deficient); failures: {}; worst slacks: {}",
            exhaustive.cuts,
            random.cuts,
            exhaustive.deficient_cuts + random.deficient_cuts,
            if failures.is_empty() { "none".into() } else { failures.join(", ") },
            worst.join(", ")
        ),
    )
}

fn closed_form_mismatch(g: &Graph, mut want: Vec<f64>) -> f64 {
    want.sort_by(f64::total_cmp);
    let got = eigenvalues_sym(&laplacian(g), DEFAULT_TOL);
    got.iter()
        .zip(&want)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max)
}

fn criterion_oracles(exhaustive: &CutStats, random: &CutStats) -> Outcome {
    let quotient = exhaustive.max_quotient_diff.max(random.max_quotient_diff);

    let mut spectrum_err: f64 = 0.0;
    for n in 2..=12 {
        let mut want = vec![n as f64; n];
        want[0] = 0.0;
        spectrum_err = spectrum_err.max(closed_form_mismatch(&Graph::complete(n), want));
    }
    for a in 1..=11 {
        for b in 1..=a.min(12 - a) {
            let spec = PartitionSpec::new(vec![a, b]).unwrap();
            let mut want = vec![0.0, (a + b) as f64];
            want.extend(std::iter::repeat_n(a as f64, b - 1));
            want.extend(std::iter::repeat_n(b as f64, a - 1));
            spectrum_err =
                spectrum_err.max(closed_form_mismatch(&complete_multipartite(&spec), want));
        }
    }
    for n in 3..=12 {
        let want = (0..n)
            .map(|k| 2.0 - 2.0 * (2.0 * std::f64::consts::PI * k as f64 / n as f64).cos())
            .collect();
        spectrum_err = spectrum_err.max(closed_form_mismatch(&Graph::cycle(n), want));
    }

    let graphs: Vec<Graph> = (1..=6)
        .flat_map(|n| atlas::enumerate_connected(n, false).unwrap())
        .collect();
    let disagreements = graphs
        .par_iter()
        .filter(|g| {
            let a = exact_toughness_with(g, SearchOptions { prune: true }).unwrap();
            let b = exact_toughness_with(g, SearchOptions { prune: false }).unwrap();
            a != b
        })
        .count();

    outcome(
        quotient <= QUOTIENT_TOL && spectrum_err <= SPECTRUM_TOL && disagreements == 0,
        format!(
            "quotient constructions differ by at most {quotient:.2e}; closed-form spectra of K_n, K_ab, C_n (n <= 12) within {spectrum_err:.2e}; pruned and exhaustive search disagree on {disagreements} of {} graphs",
            graphs.len()
        ),
    )
}

fn criterion_petersen() -> Outcome {
    let g = Graph::petersen();
    let r = atlas::record_for(&g, graph6::encode(&g)).unwrap();
    let bound = r.bound.unwrap();
    let gap = r.gap.unwrap();
    outcome(
        r.toughness == Toughness::ratio(4, 3)
            && (bound - 1.0).abs() <= EQ_TOL
            && (gap - 1.0 / 3.0).abs() <= EQ_TOL,
        format!(
            "t = {}, bound = {bound:.12}, gap = {gap:.12}, witness {}",
            r.toughness, r.witness_cut
        ),
    )
}

fn criterion_determinism() -> Outcome {
    let dir = tempfile::tempdir().unwrap();
    let run = |name: &str, threads: Option<&str>| -> Vec<u8> {
        let path = dir.path().join(name);
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_toughlab"));
        cmd.args([
            "sweep", "--random", "-n", "10", "-p", "0.5", "--seed", "42", "--count", "100", "-o",
        ])
        .arg(&path)
        .env_remove("TOUGHLAB_THREADS");
        if let Some(t) = threads {
            cmd.env("TOUGHLAB_THREADS", t);
        }
        let status = cmd.output().unwrap().status;
        assert!(status.success(), "sweep exited with {status}");
        std::fs::read(path).unwrap()
    };
    let a = run("a.csv", None);
    let b = run("b.csv", None);
    let c = run("c.csv", Some("1"));
    let d = run("d.csv", Some("3"));
    let rows = a.iter().filter(|&&b| b == b'\n').count();
    outcome(
        !a.is_empty() && a == b && a == c && a == d,
        format!("4 runs (default, default, 1 and 3 threads) of a 100-sample sweep: {} bytes, {rows} lines, identical", a.len()),
    )
}

fn main() {
    let started = Instant::now();
    let mut results: Vec<(usize, &str, Outcome)> = Vec::new();
    let mut record = |id: usize, name: &'static str, f: &dyn Fn() -> Outcome| {
        let t = Instant::now();
        let o = f();
        let status = if o.pass { "PASS" } else { "FAIL" };
        println!(
            "criterion {id} [{status}] {name} ({:.1}s): {}",
            t.elapsed().as_secs_f64(),
            o.detail
        );
        results.push((id, name, o));
    };

    record(
        1,
        "bound holds on every small graph",
        &criterion_exhaustive_bound,
    );
    record(
        2,
        "complete multipartite graphs attain the bound",
        &criterion_sharpness,
    );
    record(
        3,
        "intra-part edge construction keeps equality",
        &criterion_construction,
    );
    record(
        4,
        "multiplicity of mu2 in complete multipartite graphs",
        &criterion_multiplicity,
    );
    let t = Instant::now();
    let (exhaustive, random) = cut_corpus();
    let corpus_secs = t.elapsed().as_secs_f64();
    record(5, "per-cut inequality suites", &|| {
        let mut o = criterion_cut_suites(&exhaustive, &random);
        o.detail = format!("corpus certified in {corpus_secs:.1}s; {}", o.detail);
        o
    });
    record(6, "oracle cross-checks", &|| {
        criterion_oracles(&exhaustive, &random)
    });
    record(7, "Petersen graph is strict", &criterion_petersen);
    record(
        8,
        "sweep output is byte-identical across runs",
        &criterion_determinism,
    );

    let passed = results.iter().filter(|(_, _, o)| o.pass).count();
    println!(
        "acceptance: {passed}/{} criteria pass in {:.1}s",
        results.len(),
        started.elapsed().as_secs_f64()
    );
    if passed != results.len() {
        std::process::exit(1);
    }
}
