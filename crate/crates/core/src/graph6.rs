//! graph6 encoding and canonical labelling for small graphs.
//!
//! The encoder never writes the optional `>>graph6<<` header; the decoder
//! accepts it.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

const HEADER: &str = ">>graph6<<";

pub fn encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(4 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            nbits += 1;
            if nbits == 6 {
                out.push(acc + 63);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push((acc << (6 - nbits)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

pub fn decode(text: &str) -> Result<Graph> {
    let s = text.trim();
    let s = s.strip_prefix(HEADER).unwrap_or(s).as_bytes();
    let bad = |msg: String| Error::input(format!("graph6: {msg}"));
    if let Some(&b) = s.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(bad(format!(
            "byte {b:#04x} outside the printable range 63..=126"
        )));
    }
    let (n, body) = match s {
        [] => return Err(bad("empty string".into())),
        [126, 126, ..] => return Err(bad("orders above 258047 are not supported".into())),
        [126, a, b, c, rest @ ..] => {
            let n = (((a - 63) as usize) << 12) | (((b - 63) as usize) << 6) | (c - 63) as usize;
            (n, rest)
        }
        [126, ..] => return Err(bad("truncated order prefix".into())),
        [first, rest @ ..] => ((first - 63) as usize, rest),
    };
    if n > MAX_VERTICES {
        return Err(Error::Capacity {
            what: "vertex count",
            got: n,
            limit: MAX_VERTICES,
        });
    }
    let bits = n * n.saturating_sub(1) / 2;
    if body.len() != bits.div_ceil(6) {
        return Err(bad(format!(
            "expected {} data bytes for {n} vertices, found {}",
            bits.div_ceil(6),
            body.len()
        )));
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if (bits..body.len() * 6).any(bit) {
        return Err(bad("non-zero padding bits".into()));
    }
    Graph::new(n, &edges)
}

/// Upper triangle packed column by column, the same bit order as graph6.
/// Comparing these words compares graph6 strings of equal order.
fn triangle_word(g: &Graph, perm: &[usize]) -> u128 {
    let n = g.order();
    let mut inv = vec![0; n];
    for (v, &p) in perm.iter().enumerate() {
        inv[p] = v;
    }
    let mut w = 0u128;
    for j in 1..n {
        for i in 0..j {
            w = w << 1 | g.has_edge(inv[i], inv[j]) as u128;
        }
    }
    w
}

/// Stable colour refinement. Colours are ranks of sorted signatures, so the
/// result does not depend on the input labelling.
fn refine(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut colour = vec![0usize; n];
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).iter().map(|u| colour[u]).collect();
                nb.sort_unstable();
                (colour[v], nb)
            })
            .collect();
        let mut distinct = sigs.clone();
        distinct.sort();
        distinct.dedup();
        let next: Vec<usize> = sigs
            .iter()
            .map(|s| distinct.binary_search(s).expect("signature present"))
            .collect();
        let classes_before = colour
            .iter()
            .collect::<std::collections::BTreeSet<_>>()
            .len();
        let stable = distinct.len() == classes_before;
        colour = next;
        if stable {
            return colour;
        }
    }
}

/// Canonical relabelling: among all labellings that order vertices by
/// refined colour, the one with the lexicographically smallest graph6 body.
/// Exponential in the size of the colour classes; meant for n <= 12.
pub fn canonical_form(g: &Graph) -> Graph {
    let n = g.order();
    if n <= 1 {
        return g.clone();
    }
    assert!(n <= 12, "canonical_form is only intended for small graphs");
    let colour = refine(g);
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let max_colour = colour.iter().copied().max().unwrap_or(0);
    for c in 0..=max_colour {
        let cls: Vec<usize> = (0..n).filter(|&v| colour[v] == c).collect();
        if !cls.is_empty() {
            classes.push(cls);
        }
    }

    // Vertices of class k receive the labels offsets[k]..offsets[k+1], in
    // every order; keep the permutation with the smallest triangle word.
    let mut perm = vec![0usize; n];
    let mut best: Option<(u128, Vec<usize>)> = None;
    let mut offsets = Vec::with_capacity(classes.len());
    let mut acc = 0;
    for cls in &classes {
        offsets.push(acc);
        acc += cls.len();
    }
    let mut orders: Vec<Vec<usize>> = classes.clone();
    search(g, &mut orders, &offsets, 0, &mut perm, &mut best);
    g.permuted(&best.expect("at least one labelling").1)
}

fn search(
    g: &Graph,
    orders: &mut [Vec<usize>],
    offsets: &[usize],
    class: usize,
    perm: &mut [usize],
    best: &mut Option<(u128, Vec<usize>)>,
) {
    if class == orders.len() {
        let w = triangle_word(g, perm);
        if best.as_ref().is_none_or(|(b, _)| w < *b) {
            *best = Some((w, perm.to_vec()));
        }
        return;
    }
    let k = orders[class].len();
    permute(&mut orders[class].clone(), k, &mut |order| {
        for (i, &v) in order.iter().enumerate() {
            perm[v] = offsets[class] + i;
        }
        search(g, orders, offsets, class + 1, perm, best);
    });
}

/// Heap's algorithm over `items[..k]`.
fn permute(items: &mut [usize], k: usize, f: &mut dyn FnMut(&[usize])) {
    if k <= 1 {
        f(items);
        return;
    }
    for i in 0..k - 1 {
        permute(items, k - 1, f);
        if k.is_multiple_of(2) {
            items.swap(i, k - 1);
        } else {
            items.swap(0, k - 1);
        }
    }
    permute(items, k - 1, f);
}

/// graph6 string of the canonical form.
pub fn canonical_id(g: &Graph) -> String {
    encode(&canonical_form(g))
}
