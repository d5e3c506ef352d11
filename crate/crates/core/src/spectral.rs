//! Laplacian matrices and their spectra.
//!
//! Eigenvalues come from a cyclic Jacobi solver. At the orders used here
//! (at most a few dozen) it is accurate to roughly machine precision and
//! fully deterministic, which matters because equality cases of the bound
//! sit exactly on the tolerance boundary.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DEFAULT_TOL: f64 = 1e-10;

/// Dense real symmetric matrix, stored in full with mirrored writes.
#[derive(Clone, Debug, PartialEq)]
pub struct SymMatrix {
    order: usize,
    data: Vec<f64>,
}

impl SymMatrix {
    pub fn zeros(order: usize) -> Self {
        SymMatrix {
            order,
            data: vec![0.0; order * order],
        }
    }

    pub fn identity(order: usize) -> Self {
        let mut m = SymMatrix::zeros(order);
        for i in 0..order {
            m.set(i, i, 1.0);
        }
        m
    }

    /// Builds a matrix from rows. Rejects non-square or non-symmetric input.
    #[allow(clippy::needless_range_loop)]
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let order = rows.len();
        if rows.iter().any(|r| r.len() != order) {
            return Err(Error::input("matrix is not square"));
        }
        for i in 0..order {
            for j in i + 1..order {
                if rows[i][j] != rows[j][i] {
                    return Err(Error::input(format!(
                        "matrix is not symmetric at ({i},{j}): {} vs {}",
                        rows[i][j], rows[j][i]
                    )));
                }
            }
        }
        Ok(SymMatrix {
            order,
            data: rows.iter().flatten().copied().collect(),
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.order + j]
    }

    /// Writes `(i, j)` and `(j, i)`.
    pub fn set(&mut self, i: usize, j: usize, value: f64) {
        self.data[i * self.order + j] = value;
        self.data[j * self.order + i] = value;
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        self.data
            .chunks(self.order.max(1))
            .map(<[f64]>::to_vec)
            .collect()
    }

    pub fn trace(&self) -> f64 {
        (0..self.order).map(|i| self.get(i, i)).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    /// `alpha * I + beta * self`.
    pub fn affine(&self, alpha: f64, beta: f64) -> SymMatrix {
        let mut out = self.clone();
        for x in &mut out.data {
            *x *= beta;
        }
        for i in 0..self.order {
            out.data[i * self.order + i] += alpha;
        }
        out
    }

    pub fn sub(&self, other: &SymMatrix) -> Result<SymMatrix> {
        if self.order != other.order {
            return Err(Error::input("matrix orders differ"));
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a - b)
            .collect();
        Ok(SymMatrix {
            order: self.order,
            data,
        })
    }

    pub fn max_abs_diff(&self, other: &SymMatrix) -> f64 {
        assert_eq!(self.order, other.order);
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    fn off_diagonal_norm(&self) -> f64 {
        let mut s = 0.0;
        for i in 0..self.order {
            for j in 0..self.order {
                if i != j {
                    s += self.get(i, j).powi(2);
                }
            }
        }
        s.sqrt()
    }
}

const MAX_SWEEPS: usize = 100;

/// All eigenvalues of `m` in ascending order, by cyclic Jacobi rotations.
///
/// Sweeps stop once the off-diagonal Frobenius norm drops below
/// `min(tol, 1e-13) * ||m||_F`; the solver converges quadratically so the
/// tighter floor costs at most one extra sweep.
pub fn eigenvalues_sym(m: &SymMatrix, tol: f64) -> Vec<f64> {
    let n = m.order();
    let mut a = m.clone();
    let norm = m.frobenius_norm();
    let stop = tol.min(1e-13) * norm;

    for _ in 0..MAX_SWEEPS {
        if a.off_diagonal_norm() <= stop {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a.get(p, q);
                if apq == 0.0 {
                    continue;
                }
                let app = a.get(p, p);
                let aqq = a.get(q, q);
                // Rotation angle that annihilates a[p][q].
                let theta = (aqq - app) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    if k == p || k == q {
                        continue;
                    }
                    let akp = a.get(k, p);
                    let akq = a.get(k, q);
                    a.set(k, p, c * akp - s * akq);
                    a.set(k, q, s * akp + c * akq);
                }
                a.set(p, p, app - t * apq);
                a.set(q, q, aqq + t * apq);
                a.set(p, q, 0.0);
            }
        }
    }

    let mut eig: Vec<f64> = (0..n).map(|i| a.get(i, i)).collect();
    eig.sort_by(f64::total_cmp);
    eig
}

/// Smallest eigenvalue, or `+inf` for the empty matrix.
pub fn min_eigenvalue(m: &SymMatrix) -> f64 {
    eigenvalues_sym(m, DEFAULT_TOL)
        .first()
        .copied()
        .unwrap_or(f64::INFINITY)
}

/// `L = D - A`.
pub fn laplacian(g: &Graph) -> SymMatrix {
    let n = g.order();
    let mut l = SymMatrix::zeros(n);
    for v in 0..n {
        l.set(v, v, g.degree(v) as f64);
    }
    for (u, v) in g.edges() {
        l.set(u, v, -1.0);
    }
    l
}

/// Sorted Laplacian eigenvalues of a connected graph.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LaplacianSpectrum {
    eigenvalues: Vec<f64>,
    tol: f64,
}

impl LaplacianSpectrum {
    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    /// Algebraic connectivity, the second smallest eigenvalue.
    pub fn mu2(&self) -> f64 {
        self.eigenvalues[1]
    }

    /// Spectral radius.
    pub fn mu_n(&self) -> f64 {
        *self.eigenvalues.last().expect("spectrum is non-empty")
    }

    pub fn cluster_radius(&self) -> f64 {
        1e-6 * self.mu_n().max(1.0)
    }

    /// Number of eigenvalues within the clustering radius of `value`.
    pub fn multiplicity(&self, value: f64) -> usize {
        let r = self.cluster_radius();
        self.eigenvalues
            .iter()
            .filter(|&&x| (x - value).abs() <= r)
            .count()
    }
}

/// Laplacian spectrum of a connected graph on at least two vertices.
pub fn spectrum(g: &Graph, tol: f64) -> Result<LaplacianSpectrum> {
    if g.order() < 2 {
        return Err(Error::domain(
            "algebraic connectivity needs at least two vertices",
        ));
    }
    if !g.is_connected() {
        return Err(Error::domain("graph is disconnected"));
    }
    let eigenvalues = eigenvalues_sym(&laplacian(g), tol);
    // Connectivity was settled structurally; a vanishing mu2 here means the
    // solver is broken, not the input.
    assert!(
        eigenvalues[1] > tol,
        "connected graph produced mu2 = {} <= tol",
        eigenvalues[1]
    );
    Ok(LaplacianSpectrum { eigenvalues, tol })
}

fn require_non_complete(g: &Graph) -> Result<()> {
    if g.is_complete() {
        Err(Error::domain(
            "the spectral bound is undefined for complete graphs (t = inf)",
        ))
    } else {
        Ok(())
    }
}

/// The spectral lower bound `mu2 / (mu_n - delta)` on toughness.
pub fn toughness_bound(g: &Graph) -> Result<f64> {
    require_non_complete(g)?;
    let s = spectrum(g, DEFAULT_TOL)?;
    Ok(bound_from(&s, g.min_degree()))
}

pub(crate) fn bound_from(s: &LaplacianSpectrum, delta: usize) -> f64 {
    s.mu2() / (s.mu_n() - delta as f64)
}

/// Outcome of checking `0 < mu2 <= delta < mu_n - 1`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FiedlerCheck {
    pub holds: bool,
    pub mu2: f64,
    pub mu_n: f64,
    pub delta: usize,
    /// `delta - mu2`, must be `>= -tol`.
    pub delta_minus_mu2: f64,
    /// `mu_n - 1 - delta`, must be strictly positive.
    pub mu_n_minus_one_minus_delta: f64,
}

/// Margin required for the strict inequalities of the Fiedler chain.
pub const STRICT_MARGIN: f64 = 1e-9;

pub fn fiedler_check(g: &Graph) -> Result<FiedlerCheck> {
    require_non_complete(g)?;
    let s = spectrum(g, DEFAULT_TOL)?;
    Ok(fiedler_from(&s, g.min_degree()))
}

pub(crate) fn fiedler_from(s: &LaplacianSpectrum, delta: usize) -> FiedlerCheck {
    let d = delta as f64;
    let delta_minus_mu2 = d - s.mu2();
    let upper = s.mu_n() - 1.0 - d;
    FiedlerCheck {
        holds: s.mu2() > s.tol() && delta_minus_mu2 >= -1e-8 && upper > STRICT_MARGIN,
        mu2: s.mu2(),
        mu_n: s.mu_n(),
        delta,
        delta_minus_mu2,
        mu_n_minus_one_minus_delta: upper,
    }
}
