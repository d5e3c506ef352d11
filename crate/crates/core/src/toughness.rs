//! Exact toughness by exhaustive vertex-cut search.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, PartitionSpec, VertexSet};

/// Largest order accepted by [`exact_toughness`].
pub const MAX_EXACT_ORDER: usize = 24;

pub type Rational = Ratio<u64>;

/// Toughness value: a normalized rational, or infinite for complete graphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Toughness {
    Finite(Rational),
    Infinite,
}

impl Toughness {
    pub fn ratio(numer: u64, denom: u64) -> Self {
        Toughness::Finite(Rational::new(numer, denom))
    }

    pub fn to_f64(self) -> f64 {
        match self {
            Toughness::Finite(r) => *r.numer() as f64 / *r.denom() as f64,
            Toughness::Infinite => f64::INFINITY,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Toughness::Finite(_))
    }
}

impl PartialOrd for Toughness {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Toughness {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Toughness::Finite(a), Toughness::Finite(b)) => a.cmp(b),
            (Toughness::Finite(_), Toughness::Infinite) => Ordering::Less,
            (Toughness::Infinite, Toughness::Finite(_)) => Ordering::Greater,
            (Toughness::Infinite, Toughness::Infinite) => Ordering::Equal,
        }
    }
}

/// `p/q` for finite values (`p` alone when `q = 1`), `inf` otherwise.
impl fmt::Display for Toughness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Toughness::Finite(r) if *r.denom() == 1 => write!(f, "{}", r.numer()),
            Toughness::Finite(r) => write!(f, "{}/{}", r.numer(), r.denom()),
            Toughness::Infinite => f.write_str("inf"),
        }
    }
}

impl FromStr for Toughness {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "inf" {
            return Ok(Toughness::Infinite);
        }
        let bad = || Error::input(format!("bad toughness value `{s}`"));
        let (p, q) = match s.split_once('/') {
            Some((p, q)) => (p.parse().map_err(|_| bad())?, q.parse().map_err(|_| bad())?),
            None => (s.parse().map_err(|_| bad())?, 1),
        };
        if q == 0 {
            return Err(bad());
        }
        Ok(Toughness::ratio(p, q))
    }
}

impl Serialize for Toughness {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Toughness {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ToughnessCertificate {
    pub value: Toughness,
    /// A minimizing cut; absent for complete graphs.
    pub witness: Option<VertexSet>,
    /// `c(G - witness)`, 0 when there is no witness.
    pub components_at_witness: usize,
}

/// `|U| / c(G - U)` for a vertex cut `U`.
pub fn cut_ratio(g: &Graph, u: VertexSet) -> Result<Rational> {
    if !u.is_subset(g.vertices()) {
        return Err(Error::input(format!(
            "cut {u} is not a subset of the vertex set"
        )));
    }
    let c = g.component_count(u);
    if c < 2 {
        return Err(Error::NotACut(format!(
            "removing {u} leaves {c} component{}",
            if c == 1 { "" } else { "s" }
        )));
    }
    Ok(Rational::new(u.len() as u64, c as u64))
}

#[derive(Clone, Copy, Debug)]
pub struct SearchOptions {
    /// Skip a whole cardinality class once `k / (n - k)` reaches the best
    /// ratio found so far.
    pub prune: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { prune: true }
    }
}

pub fn exact_toughness(g: &Graph) -> Result<ToughnessCertificate> {
    exact_toughness_with(g, SearchOptions::default())
}

/// Minimum of `|U| / c(G - U)` over all vertex cuts. Ties go to the smaller
/// cut, then to the numerically smallest bitset.
pub fn exact_toughness_with(g: &Graph, opts: SearchOptions) -> Result<ToughnessCertificate> {
    let n = g.order();
    if n > MAX_EXACT_ORDER {
        return Err(Error::Capacity {
            what: "vertex count for exact toughness",
            got: n,
            limit: MAX_EXACT_ORDER,
        });
    }
    if !g.is_connected() {
        return Err(Error::domain(
            "toughness is only defined for connected graphs",
        ));
    }
    if g.is_complete() {
        return Ok(ToughnessCertificate {
            value: Toughness::Infinite,
            witness: None,
            components_at_witness: 0,
        });
    }

    let mut best: Option<(Rational, VertexSet, usize)> = None;
    // A cut leaves at least two vertices, so |U| <= n - 2.
    for k in 1..=n - 2 {
        if opts.prune {
            if let Some((r, _, _)) = best {
                // c(G - U) <= n - |U| bounds every ratio in this class from below.
                if Rational::new(k as u64, (n - k) as u64) >= r {
                    break;
                }
            }
        }
        for bits in SubsetsOfSize::new(n, k) {
            let u = VertexSet::from_bits(bits);
            let c = g.component_count(u);
            if c < 2 {
                continue;
            }
            let ratio = Rational::new(k as u64, c as u64);
            if best.is_none_or(|(r, _, _)| ratio < r) {
                best = Some((ratio, u, c));
            }
        }
    }

    let (ratio, witness, c) = best.expect("a connected non-complete graph has a vertex cut");
    Ok(ToughnessCertificate {
        value: Toughness::Finite(ratio),
        witness: Some(witness),
        components_at_witness: c,
    })
}

/// `(n - n1) / n1`, the toughness of `K_{n1, .., ns}`; infinite when every
/// part is a singleton (the graph is complete).
pub fn multipartite_toughness(spec: &PartitionSpec) -> Toughness {
    let n1 = spec.largest();
    if n1 == 1 {
        Toughness::Infinite
    } else {
        Toughness::ratio((spec.order() - n1) as u64, n1 as u64)
    }
}

/// `k`-subsets of `{0, .., n-1}` as bitsets in increasing numeric order
/// (Gosper's hack).
pub(crate) struct SubsetsOfSize {
    next: Option<u64>,
    limit: u64,
}

impl SubsetsOfSize {
    pub(crate) fn new(n: usize, k: usize) -> Self {
        assert!(n < 64 && k <= n);
        let first = if k == 0 { 0 } else { (1u64 << k) - 1 };
        SubsetsOfSize {
            next: Some(first),
            limit: 1u64 << n,
        }
    }
}

impl Iterator for SubsetsOfSize {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        let cur = self.next?;
        self.next = if cur == 0 {
            None
        } else {
            let low = cur & cur.wrapping_neg();
            let ripple = cur + low;
            let succ = (((ripple ^ cur) >> 2) / low) | ripple;
            (succ < self.limit).then_some(succ)
        };
        Some(cur)
    }
}
