//! Exact integer counting of subgraph statistics: books, joints, cliques,
//! 4-cycles, kites, triangular edges, K4-saturating edges, chordal bounds
//! and degree powers.
//!
//! All counts are subgraph copies, not induced copies. In particular every
//! edge of a K4 carries a kite, so `kite_count(K4) = 6`. Four independent
//! 4-cycle counters (codegree accumulation, exact walk traces, spectral
//! moments, brute force) cross-check each other; witnesses tie-break to the
//! lexicographically smallest edge or clique so outputs are reproducible.

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;
use crate::spectral::{self, SpectralError};

#[derive(Debug, Error)]
pub enum CountError {
    #[error("method {method} supports n <= {cap}, got {n}")]
    Capacity {
        method: &'static str,
        n: usize,
        cap: usize,
    },
    #[error("parameter {name} must be at least {min}, got {got}")]
    BadParameter {
        name: &'static str,
        min: usize,
        got: usize,
    },
    #[error(transparent)]
    Spectral(#[from] SpectralError),
}

/// How to count 4-cycles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum C4Method {
    /// Wedge accumulation: `(1/2) sum_{u<v} C(codeg(u,v), 2)`, exact.
    Codegree,
    /// `(Tr A^4 + 2m - 2 sum d^2) / 8` from exact walk traces.
    Walks,
    /// Spectral moment formula from the dense eigensolver, rounded.
    Trace,
    /// Enumeration of 4-vertex subsets; `n <= 14`.
    Brute,
}

/// Exact number of 4-cycles by the requested method.
pub fn c4_count(g: &Graph, method: C4Method) -> Result<u64, CountError> {
    match method {
        C4Method::Codegree => Ok(c4_codegree(g)),
        C4Method::Walks => Ok(c4_walks(g)),
        C4Method::Trace => Ok(c4_trace_estimate(g)?.round().max(0.0) as u64),
        C4Method::Brute => c4_brute(g),
    }
}

fn c4_codegree(g: &Graph) -> u64 {
    // counts[v] accumulates codeg(u, v) over wedges u-j-v; summing
    // C(codeg, 2) over ordered pairs counts every C4 four times.
    let n = g.n();
    let mut counts = vec![0u32; n];
    let mut touched: Vec<usize> = Vec::new();
    let mut total: u64 = 0;
    for u in 0..n {
        for j in g.neighbors(u) {
            for v in g.neighbors(j) {
                if v != u {
                    if counts[v] == 0 {
                        touched.push(v);
                    }
                    counts[v] += 1;
                }
            }
        }
        for &v in &touched {
            let c = counts[v] as u64;
            total += c * (c - 1) / 2;
            counts[v] = 0;
        }
        touched.clear();
    }
    total / 4
}

fn c4_walks(g: &Graph) -> u64 {
    let (t2, _, t4) = spectral::walk_traces(g);
    let m2 = g.degree_power();
    debug_assert!(t4 + t2 >= 2 * m2);
    let num = t4 + t2 - 2 * m2;
    debug_assert_eq!(num % 8, 0);
    num / 8
}

/// Floating 4-cycle estimate `(1/8) sum (l_i^4 + l_i^2) - M/4` from the
/// dense spectrum. Exact counters should sit within 0.4 of this value.
pub fn c4_trace_estimate(g: &Graph) -> Result<f64, CountError> {
    let eig = spectral::full_spectrum(g)?;
    let moments: f64 = eig.iter().map(|l| l.powi(4) + l.powi(2)).sum();
    Ok(moments / 8.0 - g.degree_power() as f64 / 4.0)
}

fn c4_brute(g: &Graph) -> Result<u64, CountError> {
    let n = g.n();
    if n > 14 {
        return Err(CountError::Capacity {
            method: "c4 brute force",
            n,
            cap: 14,
        });
    }
    let mut count = 0u64;
    for a in 0..n {
        for b in (a + 1)..n {
            for c in (b + 1)..n {
                for d in (c + 1)..n {
                    // three pairings of {a,b,c,d} into diagonals
                    let cyc = |p: usize, q: usize, r: usize, s: usize| {
                        g.has_edge(p, q) && g.has_edge(q, r) && g.has_edge(r, s) && g.has_edge(s, p)
                    };
                    count += u64::from(cyc(a, b, c, d));
                    count += u64::from(cyc(a, c, b, d));
                    count += u64::from(cyc(a, b, d, c));
                }
            }
        }
    }
    Ok(count)
}

/// Largest book: `(k, witness edge)` where k is the maximum codegree over
/// edges. Returns `(0, None)` on edgeless graphs.
pub fn book_size(g: &Graph) -> (u64, Option<(usize, usize)>) {
    let mut best: u64 = 0;
    let mut witness = None;
    for u in 0..g.n() {
        for v in g.neighbors(u) {
            if v <= u {
                continue;
            }
            let c = g.codegree_unchecked(u, v) as u64;
            if witness.is_none() || c > best {
                best = c;
                witness = Some((u, v));
            }
        }
    }
    (best, witness)
}

/// Largest `K_{2,t}`: maximum codegree over all vertex pairs (adjacent or
/// not), with the smallest witnessing pair.
pub fn max_k2t(g: &Graph) -> (u64, Option<(usize, usize)>) {
    let n = g.n();
    let mut counts = vec![0u32; n];
    let mut touched: Vec<usize> = Vec::new();
    let mut best = 0u64;
    let mut witness = None;
    for u in 0..n {
        for j in g.neighbors(u) {
            for v in g.neighbors(j) {
                if v > u {
                    if counts[v] == 0 {
                        touched.push(v);
                    }
                    counts[v] += 1;
                }
            }
        }
        touched.sort_unstable();
        for &v in &touched {
            let c = counts[v] as u64;
            if c > best {
                best = c;
                witness = Some((u, v));
            }
            counts[v] = 0;
        }
        touched.clear();
    }
    (best, witness)
}

/// Largest generalized book at clique size `r`: the maximum number of common
/// neighbors over all r-cliques, with the lexicographically smallest
/// maximizing clique.
pub fn generalized_book(g: &Graph, r: usize) -> Result<(u64, Option<Vec<usize>>), CountError> {
    if r < 2 {
        return Err(CountError::BadParameter {
            name: "r",
            min: 2,
            got: r,
        });
    }
    // depth-first over cliques in lexicographic vertex order; `mask` is the
    // common neighborhood of the current partial clique
    struct Search<'a> {
        g: &'a Graph,
        r: usize,
        clique: Vec<usize>,
        best: u64,
        witness: Option<Vec<usize>>,
    }
    impl Search<'_> {
        fn rec(&mut self, mask: &[u64], start: usize, depth: usize) {
            if depth == self.r {
                let c = mask.iter().map(|w| w.count_ones() as u64).sum::<u64>();
                if self.witness.is_none() || c > self.best {
                    self.best = c;
                    self.witness = Some(self.clique.clone());
                }
                return;
            }
            for v in bits_from(mask, start) {
                let mut next = mask.to_vec();
                for (w, r_) in next.iter_mut().zip(self.g.row(v)) {
                    *w &= r_;
                }
                self.clique.push(v);
                self.rec(&next, v + 1, depth + 1);
                self.clique.pop();
            }
        }
    }
    let full: Vec<u64> = row_universe(g.n());
    let mut search = Search {
        g,
        r,
        clique: Vec::with_capacity(r),
        best: 0,
        witness: None,
    };
    search.rec(&full, 0, 0);
    Ok((search.best, search.witness))
}

fn row_universe(n: usize) -> Vec<u64> {
    let words = n.div_ceil(64);
    let mut full = vec![u64::MAX; words];
    if !n.is_multiple_of(64) && words > 0 {
        full[words - 1] = (1u64 << (n % 64)) - 1;
    }
    full
}

fn bits_from(mask: &[u64], start: usize) -> impl Iterator<Item = usize> + '_ {
    let first_word = start / 64;
    let offset = start % 64;
    mask.iter()
        .enumerate()
        .skip(first_word)
        .flat_map(move |(wi, &w)| {
            let mut w = w;
            if wi == first_word && offset > 0 {
                w &= !0u64 << offset;
            }
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * 64 + b)
                }
            })
        })
}

/// Joint size: maximum number of `K_{r+1}` copies sharing an edge, counted
/// as `(r-1)`-cliques inside the shared edge's common neighborhood.
pub fn joint_size(g: &Graph, r: usize) -> Result<(u64, Option<(usize, usize)>), CountError> {
    if r < 2 {
        return Err(CountError::BadParameter {
            name: "r",
            min: 2,
            got: r,
        });
    }
    let mut best: u64 = 0;
    let mut witness = None;
    let mut mask = Vec::new();
    for u in 0..g.n() {
        for v in g.neighbors(u) {
            if v <= u {
                continue;
            }
            g.intersect_rows(u, v, &mut mask);
            let c = count_cliques_in_mask(g, &mask, r - 1);
            if witness.is_none() || c > best {
                best = c;
                witness = Some((u, v));
            }
        }
    }
    Ok((best, witness))
}

/// Number of k-cliques whose vertices all lie in `mask`.
fn count_cliques_in_mask(g: &Graph, mask: &[u64], k: usize) -> u64 {
    if k == 0 {
        return 1;
    }
    let popcount = |m: &[u64]| m.iter().map(|w| w.count_ones() as u64).sum::<u64>();
    if k == 1 {
        return popcount(mask);
    }
    let mut total = 0u64;
    let mut next = vec![0u64; mask.len()];
    for v in bits_from(mask, 0) {
        for ((nw, mw), rw) in next.iter_mut().zip(mask).zip(g.row(v)) {
            *nw = mw & rw;
        }
        // restrict to vertices above v to avoid double counting
        clear_below(&mut next, v + 1);
        if popcount(&next) as usize >= k - 1 {
            total += count_cliques_in_mask(g, &next, k - 1);
        }
    }
    total
}

fn clear_below(mask: &mut [u64], upto: usize) {
    let word = upto / 64;
    for w in mask.iter_mut().take(word) {
        *w = 0;
    }
    if word < mask.len() && !upto.is_multiple_of(64) {
        mask[word] &= !0u64 << (upto % 64);
    }
}

/// Exact number of `K_t` subgraphs via recursive bitset intersection over a
/// degeneracy ordering.
pub fn clique_count(g: &Graph, t: usize) -> Result<u64, CountError> {
    if t < 1 {
        return Err(CountError::BadParameter {
            name: "t",
            min: 1,
            got: t,
        });
    }
    if t == 1 {
        return Ok(g.n() as u64);
    }
    if t == 2 {
        return Ok(g.m() as u64);
    }
    let order = degeneracy_order(g);
    let mut rank = vec![0usize; g.n()];
    for (i, &v) in order.iter().enumerate() {
        rank[v] = i;
    }
    // relabel so enumeration ascends the degeneracy order
    let mut h = Graph::empty(g.n());
    for u in 0..g.n() {
        for v in g.neighbors(u) {
            if v > u {
                h.add_edge(rank[u], rank[v]);
            }
        }
    }
    let mut total = 0u64;
    let mut mask = vec![0u64; g.n().div_ceil(64).max(1)];
    for v in 0..h.n() {
        mask.copy_from_slice(h.row(v));
        clear_below(&mut mask, v + 1);
        total += count_cliques_in_mask(&h, &mask, t - 1);
    }
    Ok(total)
}

/// Exact triangle count (`clique_count` at t = 3).
pub fn triangle_count(g: &Graph) -> u64 {
    clique_count(g, 3).expect("t=3 is valid")
}

fn degeneracy_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        // minimum current degree, ties to the smallest index
        let v = (0..n)
            .filter(|&v| !removed[v])
            .min_by_key(|&v| (deg[v], v))
            .expect("vertices remain");
        removed[v] = true;
        order.push(v);
        for w in g.neighbors(v) {
            if !removed[w] {
                deg[w] -= 1;
            }
        }
    }
    order
}

/// Kite (`C4` plus a chord) subgraph copies: each copy is determined by its
/// chord edge and apex pair, so the count is `sum_edges C(codeg, 2)`.
pub fn kite_count(g: &Graph) -> u64 {
    let mut total = 0u64;
    for u in 0..g.n() {
        for v in g.neighbors(u) {
            if v > u {
                let c = g.codegree_unchecked(u, v) as u64;
                total += c * c.saturating_sub(1) / 2;
            }
        }
    }
    total
}

/// Number of edges lying in at least one triangle.
pub fn triangular_edges(g: &Graph) -> u64 {
    let mut total = 0u64;
    for u in 0..g.n() {
        let ru = g.row(u);
        for v in g.neighbors(u) {
            if v > u {
                let rv = g.row(v);
                if ru.iter().zip(rv).any(|(a, b)| a & b != 0) {
                    total += 1;
                }
            }
        }
    }
    total
}

/// Non-adjacent pairs whose insertion would complete a K4: the pair's common
/// neighborhood must contain an edge.
pub fn k4_saturating_edges(g: &Graph) -> u64 {
    let n = g.n();
    let mut total = 0u64;
    let mut mask = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if g.has_edge(u, v) {
                continue;
            }
            g.intersect_rows(u, v, &mut mask);
            let found = bits_from(&mask, 0)
                .any(|w| mask.iter().zip(g.row(w)).any(|(m, r)| m & r != 0));
            total += u64::from(found);
        }
    }
    total
}

/// Witness data for the book-based chordal lower bound.
#[derive(Debug, Clone, Serialize)]
pub struct BookWitness {
    pub edge: (usize, usize),
    pub apexes: Vec<usize>,
}

/// Chordal-subgraph lower bound `2 bk + 1` realized by the largest book
/// (a book is chordal). Returns `(0, None)` on edgeless graphs.
pub fn chordal_lower_bound(g: &Graph) -> (u64, Option<BookWitness>) {
    let (k, edge) = book_size(g);
    match edge {
        None => (0, None),
        Some((u, v)) => {
            let mut mask = Vec::new();
            g.intersect_rows(u, v, &mut mask);
            let apexes: Vec<usize> = bits_from(&mask, 0).collect();
            debug_assert_eq!(apexes.len() as u64, k);
            (2 * k + 1, Some(BookWitness { edge: (u, v), apexes }))
        }
    }
}

/// Exact maximum edge count over chordal subgraphs, by branch and bound over
/// vertex build orders with clique attachments. Capacity-limited to n <= 10.
pub fn chordal_exact(g: &Graph) -> Result<u64, CountError> {
    let n = g.n();
    if n > 10 {
        return Err(CountError::Capacity {
            method: "exact chordal subgraph",
            n,
            cap: 10,
        });
    }
    if n == 0 {
        return Ok(0);
    }
    let adj: Vec<u16> = (0..n)
        .map(|v| {
            let mut m = 0u16;
            for w in g.neighbors(v) {
                m |= 1 << w;
            }
            m
        })
        .collect();
    let degs: Vec<u64> = (0..n).map(|v| g.degree(v) as u64).collect();
    let mut best = 0u64;
    let mut h = vec![0u16; n];
    bb_chordal(&adj, &degs, n, 0, &mut h, 0, &mut best);
    Ok(best)
}

fn bb_chordal(
    adj: &[u16],
    degs: &[u64],
    n: usize,
    added: u16,
    h: &mut [u16],
    edges: u64,
    best: &mut u64,
) {
    if edges > *best {
        *best = edges;
    }
    let placed = added.count_ones() as u64;
    // optimistic bound: remaining vertices contribute at most
    // min(degree, slot index) edges each when ordered by degree
    let mut rem: Vec<u64> = (0..n)
        .filter(|&v| added >> v & 1 == 0)
        .map(|v| degs[v])
        .collect();
    if rem.is_empty() {
        return;
    }
    rem.sort_unstable();
    let ub: u64 = edges
        + rem
            .iter()
            .enumerate()
            .map(|(i, &d)| d.min(placed + i as u64))
            .sum::<u64>();
    if ub <= *best {
        return;
    }
    for v in 0..n {
        if added >> v & 1 == 1 {
            continue;
        }
        let sel = adj[v] & added;
        let cliques = maximal_cliques_u16(h, sel);
        for q in cliques {
            let newly = q.count_ones() as u64;
            h[v] |= q;
            let mut undo = q;
            while undo != 0 {
                let w = undo.trailing_zeros() as usize;
                undo &= undo - 1;
                h[w] |= 1 << v;
            }
            bb_chordal(adj, degs, n, added | (1 << v), h, edges + newly, best);
            let mut undo = q;
            while undo != 0 {
                let w = undo.trailing_zeros() as usize;
                undo &= undo - 1;
                h[w] &= !(1 << v);
            }
            h[v] &= !q;
        }
    }
}

/// Maximal cliques of `h` restricted to `sel`, as bitmasks; the empty mask
/// when `sel` is empty.
fn maximal_cliques_u16(h: &[u16], sel: u16) -> Vec<u16> {
    if sel == 0 {
        return vec![0];
    }
    let mut out = Vec::new();
    bron_kerbosch_u16(h, 0, sel, 0, &mut out);
    out
}

fn bron_kerbosch_u16(h: &[u16], r: u16, mut p: u16, mut x: u16, out: &mut Vec<u16>) {
    if p == 0 && x == 0 {
        out.push(r);
        return;
    }
    // pivot on the candidate/exclusion vertex with most candidate neighbors
    let pivot = {
        let mut best_v = None;
        let mut best_deg = -1i32;
        let mut scan = p | x;
        while scan != 0 {
            let v = scan.trailing_zeros() as usize;
            scan &= scan - 1;
            let d = (h[v] & p).count_ones() as i32;
            if d > best_deg {
                best_deg = d;
                best_v = Some(v);
            }
        }
        best_v.unwrap()
    };
    let mut candidates = p & !h[pivot];
    while candidates != 0 {
        let v = candidates.trailing_zeros() as usize;
        candidates &= candidates - 1;
        let bit = 1u16 << v;
        bron_kerbosch_u16(h, r | bit, p & h[v], x & h[v], out);
        p &= !bit;
        x |= bit;
    }
}

/// Exact sum of squared degrees.
pub fn degree_power(g: &Graph) -> u64 {
    g.degree_power()
}

/// Everything the analysis pipeline reports for one graph.
#[derive(Debug, Clone, Serialize)]
pub struct CountReport {
    pub n: usize,
    pub m: usize,
    pub triangles: u64,
    pub c4: u64,
    pub kites: u64,
    pub book_size: u64,
    pub book_witness: Option<(usize, usize)>,
    pub generalized_book: BTreeMap<usize, (u64, Option<Vec<usize>>)>,
    pub joint_size: BTreeMap<usize, (u64, Option<(usize, usize)>)>,
    pub clique_counts: BTreeMap<usize, u64>,
    pub triangular_edges: u64,
    pub k4_saturating: Option<u64>,
    pub chordal_lb: u64,
    pub chordal_witness: Option<BookWitness>,
    pub max_k2t: u64,
    pub degree_power: u64,
}

/// Knobs for [`CountReport::compute`]; the defaults suit graphs up to a few
/// thousand vertices.
#[derive(Debug, Clone)]
pub struct ReportOptions {
    /// Clique sizes r for generalized books and joints.
    pub rs: Vec<usize>,
    /// Clique sizes t for exact clique counts.
    pub ts: Vec<usize>,
    /// K4-saturating edges cost a quadratic pair scan; skip above this n.
    pub k4_sat_vertex_cap: usize,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions {
            rs: vec![2, 3],
            ts: vec![3, 4],
            k4_sat_vertex_cap: 2000,
        }
    }
}

impl CountReport {
    pub fn compute(g: &Graph, opts: &ReportOptions) -> Result<CountReport, CountError> {
        let (bk, book_witness) = book_size(g);
        let mut generalized = BTreeMap::new();
        let mut joints = BTreeMap::new();
        for &r in &opts.rs {
            generalized.insert(r, generalized_book(g, r)?);
            joints.insert(r, joint_size(g, r)?);
        }
        let mut cliques = BTreeMap::new();
        for &t in &opts.ts {
            cliques.insert(t, clique_count(g, t)?);
        }
        let (chordal_lb, chordal_witness) = chordal_lower_bound(g);
        let (k2t, _) = max_k2t(g);
        Ok(CountReport {
            n: g.n(),
            m: g.m(),
            triangles: triangle_count(g),
            c4: c4_count(g, C4Method::Codegree)?,
            kites: kite_count(g),
            book_size: bk,
            book_witness,
            generalized_book: generalized,
            joint_size: joints,
            clique_counts: cliques,
            triangular_edges: triangular_edges(g),
            k4_saturating: if g.n() <= opts.k4_sat_vertex_cap {
                Some(k4_saturating_edges(g))
            } else {
                None
            },
            chordal_lb,
            chordal_witness,
            max_k2t: k2t,
            degree_power: degree_power(g),
        })
    }

    /// Header line for [`Self::to_csv_row`].
    pub fn csv_header(&self) -> String {
        let mut cols = vec![
            "n", "m", "triangles", "c4", "kites", "book_size", "triangular_edges",
            "k4_saturating", "chordal_lb", "max_k2t", "degree_power",
        ]
        .into_iter()
        .map(String::from)
        .collect::<Vec<_>>();
        for r in self.generalized_book.keys() {
            cols.push(format!("gb_r{r}"));
        }
        for r in self.joint_size.keys() {
            cols.push(format!("js_r{r}"));
        }
        for t in self.clique_counts.keys() {
            cols.push(format!("k{t}"));
        }
        cols.join(",")
    }

    pub fn to_csv_row(&self) -> String {
        let mut cols = vec![
            self.n.to_string(),
            self.m.to_string(),
            self.triangles.to_string(),
            self.c4.to_string(),
            self.kites.to_string(),
            self.book_size.to_string(),
            self.triangular_edges.to_string(),
            self.k4_saturating
                .map(|v| v.to_string())
                .unwrap_or_default(),
            self.chordal_lb.to_string(),
            self.max_k2t.to_string(),
            self.degree_power.to_string(),
        ];
        for (k, _) in self.generalized_book.values() {
            cols.push(k.to_string());
        }
        for (c, _) in self.joint_size.values() {
            cols.push(c.to_string());
        }
        for c in self.clique_counts.values() {
            cols.push(c.to_string());
        }
        cols.join(",")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn turan_932() -> Graph {
        crate::constructions::turan(9, 3).unwrap()
    }

    #[test]
    fn book_sizes() {
        let (k, e) = book_size(&Graph::complete(4));
        assert_eq!((k, e), (2, Some((0, 1))));
        let (k, e) = book_size(&Graph::cycle(5));
        assert_eq!((k, e), (0, Some((0, 1))));
        assert_eq!(book_size(&Graph::empty(4)), (0, None));
    }

    #[test]
    fn generalized_book_values() {
        let (k, w) = generalized_book(&Graph::complete(5), 3).unwrap();
        assert_eq!(k, 2);
        assert_eq!(w, Some(vec![0, 1, 2]));
        // r = 2 agrees with book_size by definition
        let g = Graph::from_edges(6, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (3, 4), (4, 5)]);
        let (k2, _) = generalized_book(&g, 2).unwrap();
        assert_eq!(k2, book_size(&g).0);
        // B_{3,4} = K3 joined to I4 contains itself
        let mut b34 = Graph::empty(7);
        for u in 0..3 {
            for v in (u + 1)..3 {
                b34.add_edge(u, v);
            }
            for v in 3..7 {
                b34.add_edge(u, v);
            }
        }
        let (k, _) = generalized_book(&b34, 3).unwrap();
        assert_eq!(k, 4);
        assert!(generalized_book(&b34, 1).is_err());
    }

    #[test]
    fn joint_sizes() {
        // each edge of K5 lies in C(3,2) = 3 copies of K4
        let (c, _) = joint_size(&Graph::complete(5), 3).unwrap();
        assert_eq!(c, 3);
        let (c6, _) = joint_size(&Graph::cycle(6), 3).unwrap();
        assert_eq!(c6, 0);
        let g = Graph::from_edges(6, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (3, 4)]);
        assert_eq!(joint_size(&g, 2).unwrap().0, book_size(&g).0);
    }

    #[test]
    fn clique_counts() {
        assert_eq!(clique_count(&Graph::complete(6), 4).unwrap(), 15);
        assert_eq!(clique_count(&turan_932(), 4).unwrap(), 0);
        assert_eq!(clique_count(&turan_932(), 3).unwrap(), 27);
        assert_eq!(clique_count(&Graph::complete(5), 1).unwrap(), 5);
        assert_eq!(clique_count(&Graph::complete(5), 2).unwrap(), 10);
        assert_eq!(clique_count(&Graph::complete(5), 6).unwrap(), 0);
    }

    #[test]
    fn c4_methods_agree_on_known_graphs() {
        for (g, expect) in [
            (Graph::cycle(4), 1u64),
            (Graph::complete(4), 3),
            (Graph::complete(6), 3 * 15), // 3 C(6,4)
            (Graph::star(7), 0),
        ] {
            assert_eq!(c4_count(&g, C4Method::Codegree).unwrap(), expect);
            assert_eq!(c4_count(&g, C4Method::Walks).unwrap(), expect);
            assert_eq!(c4_count(&g, C4Method::Brute).unwrap(), expect);
            let t = c4_trace_estimate(&g).unwrap();
            assert!((t - expect as f64).abs() < 0.4, "trace {t} vs {expect}");
        }
    }

    #[test]
    fn c4_trace_identity_on_c4() {
        // (32 + 8)/8 - 16/4 = 1
        let est = c4_trace_estimate(&Graph::cycle(4)).unwrap();
        assert!((est - 1.0).abs() < 1e-6);
    }

    #[test]
    fn brute_capacity_guard() {
        assert!(matches!(
            c4_count(&Graph::empty(15), C4Method::Brute),
            Err(CountError::Capacity { .. })
        ));
    }

    #[test]
    fn kite_counts() {
        // K4 minus an edge is exactly one kite
        let mut g = Graph::complete(4);
        g.remove_edge(2, 3);
        assert_eq!(kite_count(&g), 1);
        assert_eq!(kite_count(&Graph::complete(4)), 6);
        // K_{s,t} plus an edge in the s-side has C(t,2) kites
        let g = crate::constructions::k_st_plus(5, 4).unwrap().graph;
        assert_eq!(kite_count(&g), 6);
    }

    #[test]
    fn kites_match_brute_force() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x17e);
        for _ in 0..40 {
            let n = rng.random_range(4..=9);
            let mut g = Graph::empty(n);
            for u in 0..n {
                for v in (u + 1)..n {
                    if rng.random_bool(0.45) {
                        g.add_edge(u, v);
                    }
                }
            }
            // brute: for each ordered chord edge {a,b} and apex pair {c,d}
            let mut brute = 0u64;
            for a in 0..n {
                for b in (a + 1)..n {
                    if !g.has_edge(a, b) {
                        continue;
                    }
                    for c in 0..n {
                        for d in (c + 1)..n {
                            if c == a || c == b || d == a || d == b {
                                continue;
                            }
                            if g.has_edge(a, c)
                                && g.has_edge(b, c)
                                && g.has_edge(a, d)
                                && g.has_edge(b, d)
                            {
                                brute += 1;
                            }
                        }
                    }
                }
            }
            assert_eq!(kite_count(&g), brute);
        }
    }

    #[test]
    fn triangular_edge_counts() {
        assert_eq!(triangular_edges(&Graph::cycle(4)), 0);
        assert_eq!(triangular_edges(&Graph::complete(4)), 6);
        let g = crate::constructions::k_st_plus(6, 3).unwrap().graph;
        assert_eq!(triangular_edges(&g), 7); // 2t + 1
    }

    #[test]
    fn k4_saturating_counts() {
        let mut g = Graph::complete(4);
        g.remove_edge(2, 3);
        assert_eq!(k4_saturating_edges(&g), 1);
        assert_eq!(k4_saturating_edges(&Graph::cycle(5)), 0);
        // K_{2,2,2}: the three missing within-part pairs
        let g = crate::constructions::complete_multipartite(&[2, 2, 2]).unwrap();
        assert_eq!(k4_saturating_edges(&g), 3);
    }

    #[test]
    fn k4_saturating_matches_insertion_oracle() {
        use rand::{Rng, SeedableRng};
        // oracle: a non-edge saturates iff inserting it raises the K4 count
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x4a7);
        for _ in 0..30 {
            let n = rng.random_range(4..=8);
            let mut g = Graph::empty(n);
            for u in 0..n {
                for v in (u + 1)..n {
                    if rng.random_bool(0.5) {
                        g.add_edge(u, v);
                    }
                }
            }
            let base_k4 = clique_count(&g, 4).unwrap();
            let mut oracle = 0u64;
            for u in 0..n {
                for v in (u + 1)..n {
                    if g.has_edge(u, v) {
                        continue;
                    }
                    let mut h = g.clone();
                    h.add_edge(u, v);
                    if clique_count(&h, 4).unwrap() > base_k4 {
                        oracle += 1;
                    }
                }
            }
            assert_eq!(k4_saturating_edges(&g), oracle);
        }
    }

    #[test]
    fn chordal_bounds() {
        let (lb, w) = chordal_lower_bound(&Graph::complete(4));
        assert_eq!(lb, 2 * 2 + 1);
        assert_eq!(w.unwrap().apexes.len(), 2);
        assert_eq!(chordal_exact(&Graph::cycle(4)).unwrap(), 3);
        assert_eq!(chordal_exact(&Graph::complete(4)).unwrap(), 6);
        assert!(chordal_exact(&Graph::empty(11)).is_err());
    }

    #[test]
    fn chordal_exact_matches_subset_oracle() {
        use rand::{Rng, SeedableRng};
        // oracle: maximize edges over all chordal edge subsets, chordality
        // checked by simplicial elimination
        fn is_chordal(n: usize, edges: &[(usize, usize)], mask: u32) -> bool {
            let mut adj = vec![0u16; n];
            for (i, &(u, v)) in edges.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    adj[u] |= 1 << v;
                    adj[v] |= 1 << u;
                }
            }
            let mut alive = (1u16 << n) - 1;
            'outer: for _ in 0..n {
                let mut scan = alive;
                while scan != 0 {
                    let v = scan.trailing_zeros() as usize;
                    scan &= scan - 1;
                    let nb = adj[v] & alive;
                    let mut ok = true;
                    let mut pairs = nb;
                    while pairs != 0 {
                        let a = pairs.trailing_zeros() as usize;
                        pairs &= pairs - 1;
                        if nb & !adj[a] & !(1u16 << a) != 0 {
                            ok = false;
                            break;
                        }
                    }
                    if ok {
                        alive &= !(1u16 << v);
                        continue 'outer;
                    }
                }
                return false;
            }
            true
        }
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0xc0de);
        for _ in 0..25 {
            let n = rng.random_range(3..=6);
            let mut g = Graph::empty(n);
            for u in 0..n {
                for v in (u + 1)..n {
                    if rng.random_bool(0.55) {
                        g.add_edge(u, v);
                    }
                }
            }
            let edges = g.edges();
            let mut oracle = 0u32;
            for mask in 0u32..(1 << edges.len()) {
                let cnt = mask.count_ones();
                if cnt > oracle && is_chordal(n, &edges, mask) {
                    oracle = cnt;
                }
            }
            assert_eq!(
                chordal_exact(&g).unwrap(),
                oracle as u64,
                "n={n} edges={edges:?}"
            );
        }
    }

    #[test]
    fn dense_small_graphs_have_books() {
        // every labeled graph on n <= 6 vertices with more than n^2/4 edges
        // has a book larger than n/6
        for n in 3..=6usize {
            let pairs = n * (n - 1) / 2;
            for mask in 0u32..(1 << pairs) {
                if 4 * mask.count_ones() as usize <= n * n {
                    continue;
                }
                let mut g = Graph::empty(n);
                let mut bit = 0;
                for u in 0..n {
                    for v in (u + 1)..n {
                        if mask >> bit & 1 == 1 {
                            g.add_edge(u, v);
                        }
                        bit += 1;
                    }
                }
                let (bk, _) = book_size(&g);
                assert!(
                    6 * bk as usize > n,
                    "n={n}, e={}, bk={bk}",
                    g.m()
                );
            }
        }
    }

    #[test]
    fn degree_powers() {
        assert_eq!(degree_power(&Graph::star(6)), 36 + 6);
        assert_eq!(degree_power(&Graph::cycle(4)), 16);
        let t = crate::constructions::turan(8, 2).unwrap();
        assert_eq!(degree_power(&t), 8 * 16);
    }

    #[test]
    fn max_k2t_on_bipartite() {
        let mut g = Graph::empty(5);
        for u in 0..2 {
            for v in 2..5 {
                g.add_edge(u, v);
            }
        }
        let (t, w) = max_k2t(&g);
        assert_eq!(t, 3);
        assert_eq!(w, Some((0, 1)));
    }

    #[test]
    fn joint_count_matches_brute_on_randoms() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..30 {
            let n = rng.random_range(4..=8);
            let mut g = Graph::empty(n);
            for u in 0..n {
                for v in (u + 1)..n {
                    if rng.random_bool(0.5) {
                        g.add_edge(u, v);
                    }
                }
            }
            for r in 2..=3usize {
                let (fast, _) = joint_size(&g, r).unwrap();
                // brute force: max over edges of the number of (r-1)-subsets
                // of the common neighborhood forming cliques
                let mut brute = 0u64;
                for (u, v) in g.edges() {
                    let common: Vec<usize> =
                        (0..n).filter(|&w| g.has_edge(u, w) && g.has_edge(v, w)).collect();
                    let mut cnt = 0u64;
                    let k = r - 1;
                    fn subsets(
                        common: &[usize],
                        g: &Graph,
                        k: usize,
                        start: usize,
                        chosen: &mut Vec<usize>,
                        cnt: &mut u64,
                    ) {
                        if chosen.len() == k {
                            for i in 0..chosen.len() {
                                for j in (i + 1)..chosen.len() {
                                    if !g.has_edge(chosen[i], chosen[j]) {
                                        return;
                                    }
                                }
                            }
                            *cnt += 1;
                            return;
                        }
                        for p in start..common.len() {
                            chosen.push(common[p]);
                            subsets(common, g, k, p + 1, chosen, cnt);
                            chosen.pop();
                        }
                    }
                    let mut chosen = Vec::new();
                    subsets(&common, &g, k, 0, &mut chosen, &mut cnt);
                    brute = brute.max(cnt);
                }
                assert_eq!(fast, brute, "r={r}");
            }
        }
    }

    #[test]
    fn report_serializes() {
        let g = Graph::complete(5);
        let rep = CountReport::compute(&g, &ReportOptions::default()).unwrap();
        assert_eq!(rep.triangles, 10);
        assert_eq!(rep.c4, 15);
        let json = serde_json::to_string(&rep).unwrap();
        assert!(json.contains("\"triangles\":10"));
        assert_eq!(rep.csv_header().split(',').count(), rep.to_csv_row().split(',').count());
    }
}
