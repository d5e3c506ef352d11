//! Corpus generation and mass verification of the spectral toughness bound.
//!
//! A sweep turns a corpus of connected graphs (every labelled graph of a
//! given order, or Erdős–Rényi samples conditioned on connectivity) into
//! [`AtlasRecord`]s comparing exact toughness with `mu2 / (mu_n - delta)`.
//! Any record with a negative gap aborts the sweep with a
//! [`CounterexampleBundle`].

use std::collections::HashSet;
use std::fs;
use std::path::Path;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::certify::{self, CutReport, Verdict, PSD_TOL};
use crate::error::{Error, Result};
use crate::graph::{self, complete_multipartite, Graph, PartitionSpec, VertexSet};
use crate::graph6;
use crate::spectral::{self, laplacian, LaplacianSpectrum, DEFAULT_TOL};
use crate::toughness::{self, cut_ratio, Toughness};

pub const EXHAUSTIVE_MAX_N: usize = 7;
pub const RANDOM_MAX_N: usize = 12;
/// Records with `gap < -GAP_TOL` violate the bound.
pub const GAP_TOL: f64 = 1e-9;
/// Records with `gap <= TIGHT_TOL` are tight.
pub const TIGHT_TOL: f64 = 1e-6;
pub const RESAMPLE_CAP: usize = 10_000;
pub const THREADS_ENV: &str = "TOUGHLAB_THREADS";

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AtlasRecord {
    pub graph_id: String,
    pub n: usize,
    pub m: usize,
    pub delta: usize,
    pub mu2: f64,
    pub mu_n: f64,
    /// `mu2 / (mu_n - delta)`; absent for complete graphs.
    pub bound: Option<f64>,
    pub toughness: Toughness,
    /// `t - bound`; absent for complete graphs.
    pub gap: Option<f64>,
    pub tight: bool,
    /// Minimizing cut as `{0,3}`; empty for complete graphs.
    pub witness_cut: String,
}

/// Everything needed to reproduce a violation of the bound.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CounterexampleBundle {
    pub graph6: String,
    pub cut: VertexSet,
    pub toughness: Toughness,
    pub bound: f64,
    pub report: CutReport,
}

/// Builds the record for one connected graph, or the counterexample bundle
/// if the bound fails.
pub fn record_for(g: &Graph, graph_id: String) -> Result<AtlasRecord> {
    let s = spectral::spectrum(g, DEFAULT_TOL)?;
    let cert = toughness::exact_toughness(g)?;
    let delta = g.min_degree();
    let (bound, gap) = match cert.value {
        Toughness::Infinite => (None, None),
        t => {
            let b = spectral::bound_from(&s, delta);
            (Some(b), Some(t.to_f64() - b))
        }
    };
    if let (Some(b), Some(gap)) = (bound, gap) {
        if gap < -GAP_TOL {
            let cut = cert.witness.expect("finite toughness has a witness");
            let report = certify::certify_with(g, cut, &s)?;
            return Err(Error::Counterexample(Box::new(CounterexampleBundle {
                graph6: graph6::encode(g),
                cut,
                toughness: cert.value,
                bound: b,
                report,
            })));
        }
    }
    Ok(AtlasRecord {
        graph_id,
        n: g.order(),
        m: g.edge_count(),
        delta,
        mu2: s.mu2(),
        mu_n: s.mu_n(),
        bound,
        toughness: cert.value,
        gap,
        tight: gap.is_some_and(|x| x <= TIGHT_TOL),
        witness_cut: cert.witness.map(|w| w.to_string()).unwrap_or_default(),
    })
}

fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// The graph whose edges are the set bits of `mask`, pairs ordered as in
/// graph6 (`(0,1), (0,2), (1,2), (0,3), ..`).
fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut adj = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if mask >> k & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
            k += 1;
        }
    }
    Graph::from_adjacency(adj).expect("mask graphs are simple")
}

fn check_exhaustive_cap(n: usize) -> Result<()> {
    if n > EXHAUSTIVE_MAX_N {
        return Err(Error::Capacity {
            what: "order for exhaustive enumeration",
            got: n,
            limit: EXHAUSTIVE_MAX_N,
        });
    }
    Ok(())
}

/// Every connected labelled graph on `n` vertices, in edge-mask order. With
/// `dedup`, only the first member of each isomorphism class is kept, in its
/// canonical labelling.
pub fn enumerate_connected(n: usize, dedup: bool) -> Result<impl Iterator<Item = Graph>> {
    check_exhaustive_cap(n)?;
    if n == 0 {
        return Err(Error::input("graphs need at least one vertex"));
    }
    let mut seen = HashSet::new();
    Ok((0u64..1 << pair_count(n)).filter_map(move |mask| {
        let g = graph_from_mask(n, mask);
        if !g.is_connected() {
            return None;
        }
        if !dedup {
            return Some(g);
        }
        let canon = graph6::canonical_form(&g);
        seen.insert(graph6::encode(&canon)).then_some(canon)
    }))
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub enum SweepMode {
    Exhaustive,
    Random { edge_probability: f64 },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepConfig {
    pub mode: SweepMode,
    pub n_min: usize,
    pub n_max: usize,
    /// Samples in random mode; ignored for exhaustive sweeps.
    pub sample_count: usize,
    pub seed: u64,
    pub dedup: bool,
    /// Worker threads; 0 lets the pool decide. `TOUGHLAB_THREADS` overrides.
    pub parallelism: usize,
}

impl SweepConfig {
    pub fn exhaustive(n: usize) -> Self {
        SweepConfig {
            mode: SweepMode::Exhaustive,
            n_min: n,
            n_max: n,
            sample_count: 0,
            seed: 0,
            dedup: false,
            parallelism: 0,
        }
    }

    pub fn random(n: usize, edge_probability: f64, sample_count: usize, seed: u64) -> Self {
        SweepConfig {
            mode: SweepMode::Random { edge_probability },
            n_min: n,
            n_max: n,
            sample_count,
            seed,
            dedup: false,
            parallelism: 0,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n_min < 2 || self.n_min > self.n_max {
            return Err(Error::input(format!(
                "order range {}..={} must satisfy 2 <= n_min <= n_max",
                self.n_min, self.n_max
            )));
        }
        match self.mode {
            SweepMode::Exhaustive => check_exhaustive_cap(self.n_max),
            SweepMode::Random { edge_probability } => {
                if self.n_max > RANDOM_MAX_N {
                    return Err(Error::Capacity {
                        what: "order for random sweeps",
                        got: self.n_max,
                        limit: RANDOM_MAX_N,
                    });
                }
                if !(0.0..=1.0).contains(&edge_probability) || edge_probability == 0.0 {
                    return Err(Error::input(format!(
                        "edge probability {edge_probability} must lie in (0, 1]"
                    )));
                }
                Ok(())
            }
        }
    }

    pub fn effective_parallelism(&self) -> usize {
        std::env::var(THREADS_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .unwrap_or(self.parallelism)
    }
}

fn with_pool<T: Send>(threads: usize, f: impl FnOnce() -> T + Send) -> Result<T> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::input(format!("cannot start worker pool: {e}")))?;
    Ok(pool.install(f))
}

/// One G(n, p) sample conditioned on connectivity. Sample `index` always
/// draws from the same ChaCha stream.
pub fn sample_connected(n: usize, p: f64, seed: u64, index: u64) -> Result<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    for _ in 0..RESAMPLE_CAP {
        let mut mask = 0u64;
        for k in 0..pair_count(n) {
            if rng.gen_bool(p) {
                mask |= 1 << k;
            }
        }
        let g = graph_from_mask(n, mask);
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(Error::domain(format!(
        "no connected G({n}, {p}) sample within {RESAMPLE_CAP} draws"
    )))
}

fn graph_id_for(g: &Graph, dedup: bool) -> (Graph, String) {
    if dedup {
        let canon = graph6::canonical_form(g);
        let id = graph6::encode(&canon);
        (canon, id)
    } else {
        (g.clone(), graph6::encode(g))
    }
}

/// Corpus graphs with their ids, in deterministic order, deduplicated by id
/// when requested.
fn corpus(cfg: &SweepConfig) -> Result<Vec<(Graph, String)>> {
    let mut out = Vec::new();
    match cfg.mode {
        SweepMode::Exhaustive => {
            for n in cfg.n_min..=cfg.n_max {
                let mut graphs: Vec<(Graph, String)> = (0u64..1 << pair_count(n))
                    .into_par_iter()
                    .filter_map(|mask| {
                        let g = graph_from_mask(n, mask);
                        g.is_connected().then(|| graph_id_for(&g, cfg.dedup))
                    })
                    .collect();
                out.append(&mut graphs);
            }
        }
        SweepMode::Random { edge_probability } => {
            let span = (cfg.n_max - cfg.n_min + 1) as u64;
            let mut graphs = (0..cfg.sample_count as u64)
                .into_par_iter()
                .map(|i| {
                    let n = cfg.n_min + (i % span) as usize;
                    sample_connected(n, edge_probability, cfg.seed, i)
                        .map(|g| graph_id_for(&g, cfg.dedup))
                })
                .collect::<Result<Vec<_>>>()?;
            out.append(&mut graphs);
        }
    }
    if cfg.dedup {
        let mut seen = HashSet::new();
        out.retain(|(_, id)| seen.insert(id.clone()));
    }
    Ok(out)
}

/// Runs a sweep. Records are sorted by `graph_id` (stable, so repeated ids
/// in non-dedup random sweeps keep their sample order).
pub fn sweep(cfg: &SweepConfig) -> Result<Vec<AtlasRecord>> {
    cfg.validate()?;
    with_pool(cfg.effective_parallelism(), || {
        let graphs = corpus(cfg)?;
        let mut records = graphs
            .into_par_iter()
            .map(|(g, id)| record_for(&g, id))
            .collect::<Result<Vec<_>>>()?;
        records.sort_by(|a, b| a.graph_id.cmp(&b.graph_id));
        Ok(records)
    })?
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SweepSummary {
    pub records: usize,
    /// Smallest gap among non-complete graphs.
    pub min_gap: Option<f64>,
    pub tight: usize,
    pub complete: usize,
}

pub fn summarize(records: &[AtlasRecord]) -> SweepSummary {
    SweepSummary {
        records: records.len(),
        min_gap: records.iter().filter_map(|r| r.gap).min_by(f64::total_cmp),
        tight: records.iter().filter(|r| r.tight).count(),
        complete: records.iter().filter(|r| r.gap.is_none()).count(),
    }
}

#[derive(Clone, Copy, Debug, Default)]
struct Fold {
    graphs: usize,
    complete: usize,
    tight: usize,
    min_gap: Option<f64>,
}

impl Fold {
    fn merge(self, other: Fold) -> Fold {
        Fold {
            graphs: self.graphs + other.graphs,
            complete: self.complete + other.complete,
            tight: self.tight + other.tight,
            min_gap: match (self.min_gap, other.min_gap) {
                (Some(a), Some(b)) => Some(a.min(b)),
                (a, b) => a.or(b),
            },
        }
    }
}

/// Streams every connected labelled graph on `n` vertices through the bound
/// check without materialising records.
pub fn verify_exhaustive(n: usize, parallelism: usize) -> Result<SweepSummary> {
    check_exhaustive_cap(n)?;
    with_pool(parallelism, || {
        let fold = (0u64..1 << pair_count(n))
            .into_par_iter()
            .try_fold(Fold::default, |acc, mask| {
                let g = graph_from_mask(n, mask);
                if !g.is_connected() {
                    return Ok(acc);
                }
                let r = record_for(&g, String::new())?;
                let one = Fold {
                    graphs: 1,
                    complete: r.gap.is_none() as usize,
                    tight: r.tight as usize,
                    min_gap: r.gap,
                };
                Ok::<_, Error>(acc.merge(one))
            })
            .try_reduce(Fold::default, |a, b| Ok(a.merge(b)))?;
        Ok(SweepSummary {
            records: fold.graphs,
            min_gap: fold.min_gap,
            tight: fold.tight,
            complete: fold.complete,
        })
    })?
}

/// Records with `|gap| <= tol`, sorted by order then id.
pub fn find_tight(records: &[AtlasRecord], tol: f64) -> Vec<AtlasRecord> {
    let mut out: Vec<AtlasRecord> = records
        .iter()
        .filter(|r| r.gap.is_some_and(|g| g.abs() <= tol))
        .cloned()
        .collect();
    out.sort_by(|a, b| (a.n, &a.graph_id).cmp(&(b.n, &b.graph_id)));
    out
}

/// One intra-part edge addition. Without an explicit pair the first free
/// pair of the part is used.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Addition {
    /// 1-based part index.
    pub part: usize,
    pub pair: Option<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StepReport {
    pub step: usize,
    pub part: usize,
    pub pair: (usize, usize),
    pub graph6: String,
    pub m: usize,
    pub delta: usize,
    pub mu2: f64,
    pub mu_n: f64,
    pub mu2_multiplicity: usize,
    pub bound: f64,
    pub toughness: Toughness,
    pub checks: Vec<Verdict>,
}

impl StepReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConstructionReport {
    pub spec: PartitionSpec,
    pub base_graph6: String,
    pub steps: Vec<StepReport>,
}

impl ConstructionReport {
    pub fn all_pass(&self) -> bool {
        self.steps.iter().all(StepReport::all_pass)
    }

    /// The graph after the last step.
    pub fn final_graph6(&self) -> &str {
        self.steps
            .last()
            .map(|s| s.graph6.as_str())
            .unwrap_or(&self.base_graph6)
    }
}

const EQ_TOL: f64 = 1e-9;

fn close(name: &str, got: f64, want: f64) -> Verdict {
    let diff = (got - want).abs();
    Verdict {
        name: name.into(),
        holds: diff <= EQ_TOL,
        slack: -diff,
    }
}

fn flag(name: &str, holds: bool) -> Verdict {
    Verdict {
        name: name.into(),
        holds,
        slack: if holds { 0.0 } else { -1.0 },
    }
}

/// Applies `additions` to `K_spec` one at a time, re-checking the
/// construction hypotheses before each step and verifying afterwards that
/// minimum degree, `mu2 = n - n1`, `mu_n = n` and toughness `(n - n1)/n1`
/// all survive.
pub fn verify_construction(
    spec: &PartitionSpec,
    additions: &[Addition],
) -> Result<ConstructionReport> {
    let n = spec.order();
    let n1 = spec.largest();
    let target_mu2 = (n - n1) as f64;
    let target = Toughness::ratio((n - n1) as u64, n1 as u64);
    let others: VertexSet = (2..=spec.part_count())
        .map(|i| spec.block(i))
        .fold(VertexSet::EMPTY, VertexSet::union);
    let base = complete_multipartite(spec);
    let mut current = base.clone();
    let mut current_spec: LaplacianSpectrum = spectral::spectrum(&current, DEFAULT_TOL)?;
    let mut steps = Vec::with_capacity(additions.len());

    for (k, add) in additions.iter().enumerate() {
        let step = k + 1;
        spec.check_augmentable(add.part)
            .map_err(|clause| Error::precondition(Some(step), clause))?;
        let eigenspace = current_spec.multiplicity(target_mu2);
        if eigenspace < 2 {
            return Err(Error::precondition(
                Some(step),
                format!("the {target_mu2}-eigenspace has dimension >= 2 (found {eigenspace})"),
            ));
        }
        let pair = match add.pair {
            Some(p) => p,
            None => graph::first_free_pair(&current, spec, add.part).ok_or_else(|| {
                Error::precondition(Some(step), format!("V{} has a non-adjacent pair", add.part))
            })?,
        };
        let next = graph::add_intra_part_edge(&current, spec, add.part, pair)
            .map_err(|clause| Error::precondition(Some(step), clause))?;
        let s = spectral::spectrum(&next, DEFAULT_TOL)?;

        let perturbation = laplacian(&next).sub(&laplacian(&current))?;
        let x_eig = spectral::eigenvalues_sym(&perturbation, DEFAULT_TOL);
        let x_rank = x_eig.iter().filter(|x| x.abs() > EQ_TOL).count();
        let ratio = cut_ratio(&next, others)?;
        let cert = toughness::exact_toughness(&next)?;
        let delta = next.min_degree();
        let bound = spectral::bound_from(&s, delta);

        let checks = vec![
            flag("min_degree_unchanged", delta == n - n1),
            flag("complement_disconnected", !next.complement().is_connected()),
            close("spectral_radius_is_n", s.mu_n(), n as f64),
            Verdict {
                name: "perturbation_psd".into(),
                holds: x_eig[0] >= -PSD_TOL,
                slack: x_eig[0],
            },
            flag("perturbation_rank_one", x_rank == 1),
            flag("eigenspace_dimension_at_least_two", eigenspace >= 2),
            close("algebraic_connectivity_preserved", s.mu2(), target_mu2),
            flag("cut_ratio_preserved", Toughness::Finite(ratio) == target),
            flag("toughness_is_multipartite_value", cert.value == target),
            close("toughness_equals_bound", cert.value.to_f64(), bound),
        ];

        steps.push(StepReport {
            step,
            part: add.part,
            pair: (pair.0.min(pair.1), pair.0.max(pair.1)),
            graph6: graph6::encode(&next),
            m: next.edge_count(),
            delta,
            mu2: s.mu2(),
            mu_n: s.mu_n(),
            mu2_multiplicity: s.multiplicity(target_mu2),
            bound,
            toughness: cert.value,
            checks,
        });
        current = next;
        current_spec = s;
    }

    Ok(ConstructionReport {
        spec: spec.clone(),
        base_graph6: graph6::encode(&base),
        steps,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RecordFormat {
    Csv,
    Json,
}

impl FromStr for RecordFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(RecordFormat::Csv),
            "json" => Ok(RecordFormat::Json),
            other => Err(Error::input(format!("unknown record format `{other}`"))),
        }
    }
}

impl RecordFormat {
    /// Guesses from the file extension, defaulting to CSV.
    pub fn from_path(path: &Path) -> Self {
        match path.extension().and_then(|e| e.to_str()) {
            Some(e) if e.eq_ignore_ascii_case("json") => RecordFormat::Json,
            _ => RecordFormat::Csv,
        }
    }
}

pub fn records_to_string(records: &[AtlasRecord], format: RecordFormat) -> Result<String> {
    match format {
        RecordFormat::Json => Ok(serde_json::to_string_pretty(records)? + "\n"),
        RecordFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            for r in records {
                w.serialize(r).map_err(csv_error)?;
            }
            // Header row even when there are no records.
            if records.is_empty() {
                w.write_record([
                    "graph_id",
                    "n",
                    "m",
                    "delta",
                    "mu2",
                    "mu_n",
                    "bound",
                    "toughness",
                    "gap",
                    "tight",
                    "witness_cut",
                ])
                .map_err(csv_error)?;
            }
            let bytes = w.into_inner().map_err(|e| Error::Io(e.into_error()))?;
            Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
        }
    }
}

/// Parses CSV or JSON records, detected from the first non-blank byte.
pub fn records_from_str(text: &str) -> Result<Vec<AtlasRecord>> {
    if text.trim_start().starts_with('[') {
        return serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line() as u64,
            message: e.to_string(),
        });
    }
    let mut r = csv::Reader::from_reader(text.as_bytes());
    r.deserialize().map(|row| row.map_err(csv_error)).collect()
}

fn csv_error(e: csv::Error) -> Error {
    let line = e.position().map(|p| p.line()).unwrap_or(0);
    Error::Parse {
        line,
        message: e.to_string(),
    }
}

pub fn write_records(records: &[AtlasRecord], path: &Path, format: RecordFormat) -> Result<()> {
    fs::write(path, records_to_string(records, format)?)?;
    Ok(())
}

pub fn read_records(path: &Path) -> Result<Vec<AtlasRecord>> {
    records_from_str(&fs::read_to_string(path)?)
}
