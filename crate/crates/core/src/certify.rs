//! Per-cut certification of the spectral toughness bound.
//!
//! For a vertex cut `U` with components `H_1 .. H_c` of `G - U`, every
//! inequality in the chain leading to `|U| (mu_n - delta) >= c mu2` is
//! evaluated numerically and reported as a named [`Verdict`] with its slack.
//! Inequalities that only follow from the (false) assumption
//! `|U| (mu_n - delta) < c mu2` are recorded in [`ConditionalData`] and are
//! never treated as pass/fail checks.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::spectral::{self, laplacian, min_eigenvalue, LaplacianSpectrum, SymMatrix};

/// Absolute tolerance on minimum eigenvalues in PSD checks.
pub const PSD_TOL: f64 = 1e-8;
/// Per-vertex tolerance on inequality slacks; multiplied by `n`.
pub const SLACK_TOL: f64 = 1e-8;
/// A component is deficient iff `e_i / |H_i| < mu2 - DEFICIENCY_GAP`.
pub const DEFICIENCY_GAP: f64 = 1e-9;
/// Entrywise agreement required between the two quotient constructions.
pub const QUOTIENT_AGREEMENT: f64 = 1e-12;

/// The partition `{H_1, .., H_c, U}` of a vertex cut.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CutPartition {
    pub cut: VertexSet,
    pub components: Vec<VertexSet>,
    /// `e_i`, the number of edges between `H_i` and `U`.
    pub boundary_counts: Vec<usize>,
    pub e_total: usize,
}

impl CutPartition {
    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    pub fn cut_size(&self) -> usize {
        self.cut.len()
    }

    pub fn component_sizes(&self) -> Vec<usize> {
        self.components.iter().map(|h| h.len()).collect()
    }

    /// `e_i / |H_i|` for each component.
    pub fn boundary_ratios(&self) -> Vec<f64> {
        self.components
            .iter()
            .zip(&self.boundary_counts)
            .map(|(h, &e)| e as f64 / h.len() as f64)
            .collect()
    }

    /// Classes in quotient order: components first, the cut last.
    pub fn classes(&self) -> Vec<VertexSet> {
        let mut classes = self.components.clone();
        classes.push(self.cut);
        classes
    }
}

pub fn vertex_cut_partition(g: &Graph, u: VertexSet) -> Result<CutPartition> {
    if !g.is_connected() {
        return Err(Error::domain(
            "vertex-cut partitions need a connected graph",
        ));
    }
    if !u.is_subset(g.vertices()) {
        return Err(Error::input(format!(
            "cut {u} is not a subset of the vertex set"
        )));
    }
    let components = g.components(u);
    if components.len() < 2 {
        return Err(Error::NotACut(format!(
            "removing {u} leaves {} component(s)",
            components.len()
        )));
    }
    let boundary_counts: Vec<usize> = components
        .iter()
        .map(|h| h.iter().map(|v| g.neighbors(v).intersection(u).len()).sum())
        .collect();
    debug_assert!(boundary_counts.iter().all(|&e| e > 0));
    let e_total = boundary_counts.iter().sum();
    Ok(CutPartition {
        cut: u,
        components,
        boundary_counts,
        e_total,
    })
}

/// Every vertex cut of `g`, in increasing bitset order.
pub fn vertex_cuts(g: &Graph) -> impl Iterator<Item = VertexSet> + '_ {
    let n = g.order();
    assert!(n < 64);
    (1u64..(1u64 << n))
        .map(VertexSet::from_bits)
        .filter(move |&u| g.component_count(u) >= 2)
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum QuotientKind {
    /// `Q(L)`.
    Laplacian,
    /// `Q(L + (mu2 / n) J)`.
    Shifted { mu2: f64 },
}

/// Symmetrised quotient matrix with entries
/// `chi(P_i)^T M chi(P_j) / sqrt(|P_i| |P_j|)`, evaluated by summing the
/// blocks of the dense `n x n` matrix `M`.
pub fn quotient_matrix(g: &Graph, p: &CutPartition, kind: QuotientKind) -> SymMatrix {
    let n = g.order();
    let mut m = laplacian(g);
    if let QuotientKind::Shifted { mu2 } = kind {
        let shift = mu2 / n as f64;
        for a in 0..n {
            for b in a..n {
                m.set(a, b, m.get(a, b) + shift);
            }
        }
    }
    let classes = p.classes();
    let mut q = SymMatrix::zeros(classes.len());
    for (i, pi) in classes.iter().enumerate() {
        for (j, pj) in classes.iter().enumerate().skip(i) {
            let mut s = 0.0;
            for a in pi.iter() {
                for b in pj.iter() {
                    s += m.get(a, b);
                }
            }
            q.set(i, j, s / ((pi.len() * pj.len()) as f64).sqrt());
        }
    }
    q
}

/// The same matrix from its arrowhead closed form: diagonal `e_i / |H_i|`,
/// last row `-e_i / sqrt(|H_i| |U|)`, corner `e / |U|`, plus
/// `(mu2 / n) sqrt(|P_i| |P_j|)` when shifted.
pub fn quotient_matrix_closed_form(n: usize, p: &CutPartition, kind: QuotientKind) -> SymMatrix {
    let c = p.component_count();
    let u = p.cut_size() as f64;
    let mut q = SymMatrix::zeros(c + 1);
    for (i, (h, &e)) in p.components.iter().zip(&p.boundary_counts).enumerate() {
        let h = h.len() as f64;
        q.set(i, i, e as f64 / h);
        q.set(i, c, -(e as f64) / (h * u).sqrt());
    }
    q.set(c, c, p.e_total as f64 / u);
    if let QuotientKind::Shifted { mu2 } = kind {
        let sizes: Vec<f64> = p.classes().iter().map(|s| s.len() as f64).collect();
        for i in 0..=c {
            for j in i..=c {
                q.set(
                    i,
                    j,
                    q.get(i, j) + mu2 / n as f64 * (sizes[i] * sizes[j]).sqrt(),
                );
            }
        }
    }
    q
}

/// Largest entrywise gap between the two quotient constructions.
pub fn quotient_discrepancy(g: &Graph, p: &CutPartition, kind: QuotientKind) -> f64 {
    quotient_matrix(g, p, kind).max_abs_diff(&quotient_matrix_closed_form(g.order(), p, kind))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Verdict {
    pub name: String,
    pub holds: bool,
    pub slack: f64,
}

impl Verdict {
    fn new(name: impl Into<String>, holds: bool, slack: f64) -> Self {
        Verdict {
            name: name.into(),
            holds,
            slack,
        }
    }

    /// `slack >= -tol`.
    fn at_least(name: impl Into<String>, slack: f64, tol: f64) -> Self {
        Verdict::new(name, slack >= -tol, slack)
    }

    /// `lhs >= rhs` up to `SLACK_TOL * n` relative to the magnitudes involved.
    fn geq(name: impl Into<String>, lhs: f64, rhs: f64, n: usize) -> Self {
        let scale = 1f64.max(lhs.abs()).max(rhs.abs());
        Verdict::at_least(name, lhs - rhs, SLACK_TOL * n as f64 * scale)
    }

    /// `slack > margin`, for strict inequalities with a guaranteed gap.
    fn strictly_positive(name: impl Into<String>, slack: f64) -> Self {
        Verdict::new(name, slack > spectral::STRICT_MARGIN, slack)
    }
}

fn require_non_complete(g: &Graph) -> Result<()> {
    if g.is_complete() {
        Err(Error::domain("complete graphs have no vertex cuts"))
    } else {
        Ok(())
    }
}

/// `mu_n I - Q(L)` and `Q(L + (mu2/n) J) - mu2 I` are both PSD.
pub fn check_psd_pair(g: &Graph, p: &CutPartition, s: &LaplacianSpectrum) -> [Verdict; 2] {
    let q = quotient_matrix(g, p, QuotientKind::Laplacian);
    let upper = min_eigenvalue(&q.affine(s.mu_n(), -1.0));
    let shifted = quotient_matrix(g, p, QuotientKind::Shifted { mu2: s.mu2() });
    let lower = min_eigenvalue(&shifted.affine(-s.mu2(), 1.0));
    [
        Verdict::at_least("psd_spectral_radius", upper, PSD_TOL),
        Verdict::at_least("psd_shifted_connectivity", lower, PSD_TOL),
    ]
}

/// `e_i / |H_i| >= delta - |H_i| + 1`, in exact integer arithmetic.
pub fn check_degree_bound(g: &Graph, p: &CutPartition) -> Vec<Verdict> {
    let delta = g.min_degree() as i64;
    p.components
        .iter()
        .zip(&p.boundary_counts)
        .enumerate()
        .map(|(i, (h, &e))| {
            let h = h.len() as i64;
            let holds = e as i64 >= h * (delta - h + 1);
            let slack = e as f64 / h as f64 - (delta - h + 1) as f64;
            Verdict::new(format!("degree_bound_H{}", i + 1), holds, slack)
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SchurCheck {
    /// `mu_n > e_i / |H_i|` for every component (worst slack).
    pub spectral_radius: Verdict,
    /// The Schur complement of the component block of `mu_n I - Q(L)`,
    /// evaluated from the matrix entries, is non-negative.
    pub schur_complement: Verdict,
    /// `sum e_i / (mu_n - e_i/|H_i|) <= |U|`.
    pub schur_sum: Verdict,
    /// `sum e_i / |H_i| <= (mu_n - delta) |U|`.
    pub ratio_sum: Verdict,
}

impl SchurCheck {
    pub fn verdicts(&self) -> [&Verdict; 4] {
        [
            &self.spectral_radius,
            &self.schur_complement,
            &self.schur_sum,
            &self.ratio_sum,
        ]
    }
}

pub fn check_schur_bound(g: &Graph, p: &CutPartition, s: &LaplacianSpectrum) -> SchurCheck {
    let n = g.order();
    let tol = SLACK_TOL * n as f64;
    let mu_n = s.mu_n();
    let u = p.cut_size() as f64;
    let ratios = p.boundary_ratios();
    let gap = ratios
        .iter()
        .map(|r| mu_n - r)
        .fold(f64::INFINITY, f64::min);

    let mut correction = 0.0;
    let mut sum = 0.0;
    for ((h, &e), r) in p.components.iter().zip(&p.boundary_counts).zip(&ratios) {
        let e = e as f64;
        correction += e * e / h.len() as f64 / (mu_n - r);
        sum += e / (mu_n - r);
    }
    let schur = mu_n - p.e_total as f64 / u - correction / u;
    let delta = g.min_degree() as f64;
    SchurCheck {
        spectral_radius: Verdict::strictly_positive("spectral_radius_exceeds_ratios", gap),
        schur_complement: Verdict::at_least("schur_complement", schur, PSD_TOL),
        schur_sum: Verdict::at_least("schur_sum", u - sum, tol),
        ratio_sum: Verdict::at_least(
            "ratio_sum",
            (mu_n - delta) * u - ratios.iter().sum::<f64>(),
            tol,
        ),
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PairSlack {
    pub i: usize,
    pub j: usize,
    pub slack: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PairwiseCheck {
    /// Worst pair of `(r_i - mu2) |H_j| + (r_j - mu2) |H_i| >= 0`.
    pub pairwise: Verdict,
    pub pairs: Vec<PairSlack>,
    /// At most one deficient component.
    pub unique_deficient: Verdict,
    /// Indices (0-based, partition order) of deficient components.
    pub deficient: Vec<usize>,
}

impl PairwiseCheck {
    /// The deficient component, when there is exactly one.
    pub fn deficient_index(&self) -> Option<usize> {
        match self.deficient.as_slice() {
            [i] => Some(*i),
            _ => None,
        }
    }
}

pub fn check_pairwise(p: &CutPartition, s: &LaplacianSpectrum) -> PairwiseCheck {
    let mu2 = s.mu2();
    let ratios = p.boundary_ratios();
    let sizes = p.component_sizes();
    let c = ratios.len();
    let mut pairs = Vec::with_capacity(c * (c - 1) / 2);
    for i in 0..c {
        for j in i + 1..c {
            let slack = (ratios[i] - mu2) * sizes[j] as f64 + (ratios[j] - mu2) * sizes[i] as f64;
            pairs.push(PairSlack { i, j, slack });
        }
    }
    let worst = pairs.iter().map(|q| q.slack).fold(f64::INFINITY, f64::min);
    let deficient: Vec<usize> = (0..c)
        .filter(|&i| ratios[i] < mu2 - DEFICIENCY_GAP)
        .collect();
    PairwiseCheck {
        pairwise: Verdict::at_least("pairwise", worst, PSD_TOL),
        pairs,
        unique_deficient: Verdict::new(
            "deficient_unique",
            deficient.len() <= 1,
            1.0 - deficient.len() as f64,
        ),
        deficient,
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MatDetCheck {
    /// 0-based index of the deficient component.
    pub deficient_index: usize,
    /// `n + mu2 sum_j |H_j| / (r_j - mu2)`.
    pub lhs: f64,
    /// `mu2 |H_1| / (mu2 - r_1)`.
    pub rhs: f64,
    pub inequality: Verdict,
    /// `det X` from the spectrum of `X` against the determinant-lemma
    /// factorisation `det D (1 + (mu2/n) h^T D^-1 h)`.
    pub determinant_identity: Verdict,
}

/// Applicable only when exactly one component is deficient.
pub fn check_matdet(g: &Graph, p: &CutPartition, s: &LaplacianSpectrum) -> Option<MatDetCheck> {
    let pw = check_pairwise(p, s);
    let d1 = pw.deficient_index()?;
    let n = g.order();
    let mu2 = s.mu2();
    let ratios = p.boundary_ratios();
    let sizes = p.component_sizes();
    let diag: Vec<f64> = ratios.iter().map(|r| r - mu2).collect();
    if diag.iter().any(|d| d.abs() < 1e-12) {
        return None;
    }

    let lhs = n as f64
        + mu2
            * (0..sizes.len())
                .filter(|&j| j != d1)
                .map(|j| sizes[j] as f64 / diag[j])
                .sum::<f64>();
    let rhs = mu2 * sizes[d1] as f64 / (mu2 - ratios[d1]);

    let c = sizes.len();
    let mut x = SymMatrix::zeros(c);
    for i in 0..c {
        for j in i..c {
            let rank_one = mu2 / n as f64 * ((sizes[i] * sizes[j]) as f64).sqrt();
            x.set(i, j, rank_one + if i == j { diag[i] } else { 0.0 });
        }
    }
    let det_spectral: f64 = spectral::eigenvalues_sym(&x, spectral::DEFAULT_TOL)
        .iter()
        .product();
    let det_d: f64 = diag.iter().product();
    let quad: f64 = sizes.iter().zip(&diag).map(|(&h, d)| h as f64 / d).sum();
    let det_lemma = det_d * (1.0 + mu2 / n as f64 * quad);
    let scale = 1f64.max(det_d.abs() * (1.0 + mu2 / n as f64 * quad.abs()));

    Some(MatDetCheck {
        deficient_index: d1,
        lhs,
        rhs,
        inequality: Verdict::geq("matdet", rhs, lhs, n),
        determinant_identity: Verdict::at_least(
            "matdet_identity",
            -(det_spectral - det_lemma).abs(),
            1e-8 * scale,
        ),
    })
}

/// `|U| (mu_n - delta) >= c mu2`.
pub fn check_main(p: &CutPartition, s: &LaplacianSpectrum, delta: usize, n: usize) -> Verdict {
    Verdict::at_least("main", main_slack(p, s, delta), SLACK_TOL * n as f64)
}

fn main_slack(p: &CutPartition, s: &LaplacianSpectrum, delta: usize) -> f64 {
    p.cut_size() as f64 * (s.mu_n() - delta as f64) - p.component_count() as f64 * s.mu2()
}

/// Quantities of the deficient-component analysis. Components other than
/// the anchor (the deficient one, or the first component if none is
/// deficient) are the surplus components `j`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ProofTrace {
    /// `mu2 - e_1/|H_1|` for the deficient component, 0 if none.
    pub alpha: f64,
    /// `e_j/|H_j| - mu2` over surplus components, in partition order.
    pub betas: Vec<f64>,
    /// Sum of `betas`.
    pub sigma: f64,
    /// `sum_j sqrt(|H_j|)`.
    pub phi: f64,
    /// `sum_j |H_j|`, recorded next to `phi^2` so both can be audited.
    pub surplus_size: usize,
    pub deficient_index: Option<usize>,
    pub anchor_index: usize,
}

/// Inequalities that follow only from `|U| (mu_n - delta) < c mu2`. Their
/// truth values are data.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConditionalData {
    /// `|U| (mu_n - delta) < c mu2`.
    pub hypothesis_holds: bool,
    /// `alpha > sigma`.
    pub alpha_exceeds_sigma: bool,
    /// `phi^2 (alpha/sigma + (m + alpha)/((c-1) m - sigma))` with `m = mu_n - mu2`.
    pub cauchy_schwarz_bound: f64,
    /// `phi^2 c m / ((c-1) m - sigma)`.
    pub conditional_bound: f64,
    /// `cauchy_schwarz_bound > conditional_bound`.
    pub conditional_step_holds: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TraceOutcome {
    pub trace: ProofTrace,
    pub verdicts: Vec<Verdict>,
    /// Bounds evaluated outside the branch that needs them.
    pub informational: Vec<Verdict>,
    pub conditional: Option<ConditionalData>,
}

pub fn proof_trace(
    g: &Graph,
    p: &CutPartition,
    s: &LaplacianSpectrum,
    delta: usize,
) -> TraceOutcome {
    let n = g.order();
    let mu2 = s.mu2();
    let mu_n = s.mu_n();
    let d = delta as f64;
    let c = p.component_count();
    let u = p.cut_size() as f64;
    let ratios = p.boundary_ratios();
    let sizes = p.component_sizes();

    let deficient_index = check_pairwise(p, s).deficient_index();
    let anchor = deficient_index.unwrap_or(0);
    let surplus: Vec<usize> = (0..c).filter(|&j| j != anchor).collect();
    let alpha = match deficient_index {
        Some(i) => mu2 - ratios[i],
        None => 0.0,
    };
    let betas: Vec<f64> = surplus.iter().map(|&j| ratios[j] - mu2).collect();
    let hs: Vec<f64> = surplus.iter().map(|&j| sizes[j] as f64).collect();
    let sigma: f64 = betas.iter().sum();
    let phi: f64 = hs.iter().map(|h| h.sqrt()).sum();
    let surplus_size: usize = surplus.iter().map(|&j| sizes[j]).sum();
    let phi2 = phi * phi;
    let sum_h: f64 = hs.iter().sum();
    let k = (c - 1) as f64;
    let gap = mu_n - mu2;

    // Bounds that hold for every cut, checked here for all of them.
    let mass = Verdict::geq("component_mass", phi2, sum_h, n);
    let size_sum = Verdict::geq("component_size_sum", sum_h, k * (d - mu2 + 1.0) - sigma, n);
    let phi_bound = Verdict::geq(
        "phi_squared_lower_bound",
        phi2,
        (k * gap - sigma) / (mu_n - d),
        n,
    );

    let trace = ProofTrace {
        alpha,
        betas: betas.clone(),
        sigma,
        phi,
        surplus_size,
        deficient_index,
        anchor_index: anchor,
    };

    let Some(i1) = deficient_index else {
        return TraceOutcome {
            trace,
            verdicts: Vec::new(),
            informational: vec![mass, size_sum, phi_bound],
            conditional: None,
        };
    };

    let h1 = sizes[i1] as f64;
    let weighted: f64 = hs.iter().zip(&betas).map(|(h, b)| h / b).sum();
    let bracket = u + sum_h + mu2 * weighted;
    // S = sum_j |H_j| (alpha/beta_j + (m + alpha)/(m - beta_j)).
    let spread: f64 = hs
        .iter()
        .zip(&betas)
        .map(|(h, b)| h * (alpha / b + (gap + alpha) / (gap - b)))
        .sum();
    let collected: f64 = hs
        .iter()
        .zip(&betas)
        .map(|(h, b)| h * (mu2 + b) * (alpha / b + (gap + alpha) / (gap - b)))
        .sum();
    let tail: f64 = hs
        .iter()
        .zip(&betas)
        .map(|(h, b)| (mu2 + b) * h / (gap - b))
        .sum();
    let beta_floor = hs
        .iter()
        .zip(&betas)
        .map(|(h, b)| b - alpha * h / h1)
        .fold(f64::INFINITY, f64::min);
    let headroom = betas.iter().map(|b| gap - b).fold(f64::INFINITY, f64::min);
    let cs_bound = phi2 * (alpha / sigma + (gap + alpha) / (k * gap - sigma));
    let conditional_bound = phi2 * (c as f64 * gap / (k * gap - sigma));
    let main = main_slack(p, s, delta);

    let verdicts = vec![
        Verdict::strictly_positive("alpha_below_mu2", mu2 - alpha),
        Verdict::at_least("beta_lower_bound", beta_floor, PSD_TOL),
        Verdict::strictly_positive("surplus_below_spectral_gap", headroom),
        Verdict::geq("h1_lower_bound", h1, alpha * bracket / (mu2 - alpha), n),
        Verdict::geq(
            "u_lower_bound",
            u,
            alpha / (gap + alpha) * bracket + tail,
            n,
        ),
        Verdict::geq("u_bound_collected", u * gap, collected, n),
        Verdict::geq("u_bound_relaxed", u * gap, mu2 * spread, n),
        Verdict::geq(
            "u_bound_scaled",
            u * (mu_n - d),
            (mu_n - d) * mu2 / gap * spread,
            n,
        ),
        Verdict::geq("gap_chain", gap, mu_n - d, n),
        Verdict::strictly_positive("gap_exceeds_one", mu_n - d - 1.0),
        Verdict::geq("hi_sum_cauchy_schwarz", spread, cs_bound, n),
        mass,
        size_sum,
        phi_bound,
        Verdict::at_least("contradiction_refuted", main, SLACK_TOL * n as f64),
    ];
    let hypothesis_holds = main < 0.0;
    TraceOutcome {
        trace,
        verdicts,
        informational: Vec::new(),
        conditional: Some(ConditionalData {
            hypothesis_holds,
            alpha_exceeds_sigma: alpha > sigma,
            cauchy_schwarz_bound: cs_bound,
            conditional_bound,
            conditional_step_holds: cs_bound > conditional_bound,
        }),
    }
}

/// Everything known about one cut.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CutReport {
    pub n: usize,
    pub delta: usize,
    pub mu2: f64,
    pub mu_n: f64,
    pub cut_size: usize,
    pub component_sizes: Vec<usize>,
    pub partition: CutPartition,
    pub verdicts: Vec<Verdict>,
    pub informational: Vec<Verdict>,
    pub trace: ProofTrace,
    pub conditional: Option<ConditionalData>,
    pub matdet: Option<MatDetCheck>,
    /// `|U| (mu_n - delta) - c mu2`.
    pub main_slack: f64,
}

impl CutReport {
    pub fn all_hold(&self) -> bool {
        self.verdicts.iter().all(|v| v.holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Verdict> {
        self.verdicts.iter().filter(|v| !v.holds)
    }

    pub fn verdict(&self, name: &str) -> Option<&Verdict> {
        self.verdicts.iter().find(|v| v.name == name)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

/// Certifies the cut `u` of `g`.
pub fn certify_cut(g: &Graph, u: VertexSet) -> Result<CutReport> {
    require_non_complete(g)?;
    let s = spectral::spectrum(g, spectral::DEFAULT_TOL)?;
    certify_with(g, u, &s)
}

/// Like [`certify_cut`] with a precomputed spectrum of `g`.
pub fn certify_with(g: &Graph, u: VertexSet, s: &LaplacianSpectrum) -> Result<CutReport> {
    require_non_complete(g)?;
    let p = vertex_cut_partition(g, u)?;
    let n = g.order();
    let delta = g.min_degree();
    let mut verdicts = Vec::new();

    for (name, kind) in [
        ("quotient_consistency", QuotientKind::Laplacian),
        (
            "quotient_consistency_shifted",
            QuotientKind::Shifted { mu2: s.mu2() },
        ),
    ] {
        let diff = quotient_discrepancy(g, &p, kind);
        verdicts.push(Verdict::new(name, diff <= QUOTIENT_AGREEMENT, -diff));
    }
    verdicts.push(Verdict::new(
        "boundary_positive",
        p.boundary_counts.iter().all(|&e| e > 0),
        *p.boundary_counts.iter().min().expect("c >= 2") as f64,
    ));

    let f = spectral::fiedler_from(s, delta);
    verdicts.push(Verdict::strictly_positive("fiedler_mu2_positive", f.mu2));
    verdicts.push(Verdict::at_least(
        "fiedler_mu2_le_delta",
        f.delta_minus_mu2,
        SLACK_TOL,
    ));
    verdicts.push(Verdict::strictly_positive(
        "fiedler_delta_below_mu_n_minus_one",
        f.mu_n_minus_one_minus_delta,
    ));

    verdicts.extend(check_psd_pair(g, &p, s));
    verdicts.extend(check_degree_bound(g, &p));
    verdicts.extend(check_schur_bound(g, &p, s).verdicts().into_iter().cloned());
    let pw = check_pairwise(&p, s);
    verdicts.push(pw.pairwise.clone());
    verdicts.push(pw.unique_deficient.clone());

    let matdet = check_matdet(g, &p, s);
    if let Some(m) = &matdet {
        verdicts.push(m.inequality.clone());
        verdicts.push(m.determinant_identity.clone());
    }
    verdicts.push(check_main(&p, s, delta, n));

    let outcome = proof_trace(g, &p, s, delta);
    verdicts.extend(outcome.verdicts);

    Ok(CutReport {
        n,
        delta,
        mu2: s.mu2(),
        mu_n: s.mu_n(),
        cut_size: p.cut_size(),
        component_sizes: p.component_sizes(),
        main_slack: main_slack(&p, s, delta),
        partition: p,
        verdicts,
        informational: outcome.informational,
        trace: outcome.trace,
        conditional: outcome.conditional,
        matdet,
    })
}
