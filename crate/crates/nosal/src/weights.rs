//! Perron-derived vertex and edge weightings, weighted witness edges, and
//! the seeded random blowup sampler.
//!
//! The weighting puts `w_i = x_i^2` on vertices and
//! `p_ij = max(c1 x_i x_j - c2, 0) / (x_i^2 x_j^2)` on edges, with
//! `(c1, c2) = (m^{-1/2}, (4m)^{-1})` for books and the r-parameterized pair
//! for joints. Completing the square shows `p_ij <= 1` always; any excess is
//! floating rounding and is clamped within a 1e-12 band. Whenever the graph
//! is certified Nosal, the weighted edge density lands strictly above 1/4
//! (books) resp. `(r-1)/(2r)` (joints), which is what makes a heavy witness
//! edge exist.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;
use crate::spectral::SpectralCertificate;

#[derive(Debug, Error)]
pub enum WeightError {
    #[error("Perron entry at vertex {0} vanishes on its own component")]
    DegeneratePerron(usize),
    #[error("all edge weights are zero; no witness edge exists")]
    NoWitness,
    #[error("vertex weights must sum to 1 within 1e-12, got {0}")]
    BadVertexWeights(f64),
    #[error("edge weight p[{u}-{v}] = {p} outside [0,1]")]
    BadEdgeWeight { u: usize, v: usize, p: f64 },
    #[error("edge {u}-{v} is invalid for the base graph")]
    BadEdge { u: usize, v: usize },
    #[error("graph has no edges")]
    NoEdges,
}

/// A graph with unit-sum vertex weights and per-edge weights in [0,1].
#[derive(Debug, Clone)]
pub struct WeightedGraph {
    base: Graph,
    w: Vec<f64>,
    /// canonical lexicographic edge list of `base`
    edges: Vec<(u32, u32)>,
    /// edge weights parallel to `edges`
    p: Vec<f64>,
    index: HashMap<(u32, u32), usize>,
}

impl WeightedGraph {
    /// Validates and assembles a weighted graph. `p` entries are keyed by
    /// canonical `(min, max)` edges of `base`; missing edges default to 0.
    pub fn new(
        base: Graph,
        w: Vec<f64>,
        p_entries: &[((usize, usize), f64)],
    ) -> Result<WeightedGraph, WeightError> {
        let total: f64 = w.iter().sum();
        if (total - 1.0).abs() > 1e-12 {
            return Err(WeightError::BadVertexWeights(total));
        }
        let edges: Vec<(u32, u32)> = base
            .edges()
            .into_iter()
            .map(|(u, v)| (u as u32, v as u32))
            .collect();
        let index: HashMap<(u32, u32), usize> =
            edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let mut p = vec![0.0; edges.len()];
        for &((u, v), val) in p_entries {
            let key = (u.min(v) as u32, u.max(v) as u32);
            let idx = *index.get(&key).ok_or(WeightError::BadEdge { u, v })?;
            if !(0.0..=1.0).contains(&val) {
                return Err(WeightError::BadEdgeWeight { u, v, p: val });
            }
            p[idx] = val;
        }
        Ok(WeightedGraph {
            base,
            w,
            edges,
            p,
            index,
        })
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn vertex_weight(&self, v: usize) -> f64 {
        self.w[v]
    }

    pub fn vertex_weights(&self) -> &[f64] {
        &self.w
    }

    pub fn edge_weight(&self, u: usize, v: usize) -> f64 {
        let key = (u.min(v) as u32, u.max(v) as u32);
        self.index.get(&key).map_or(0.0, |&i| self.p[i])
    }

    pub fn edges(&self) -> impl Iterator<Item = ((usize, usize), f64)> + '_ {
        self.edges
            .iter()
            .zip(&self.p)
            .map(|(&(u, v), &p)| ((u as usize, v as usize), p))
    }

    /// `sum over edges of p_ij w_i w_j`.
    pub fn weighted_edge_density(&self) -> f64 {
        self.edges
            .iter()
            .zip(&self.p)
            .map(|(&(u, v), &p)| p * self.w[u as usize] * self.w[v as usize])
            .sum()
    }
}

/// Book-threshold proof weights from a Perron certificate:
/// `w_i = x_i^2`, `p_ij = max(m^{-1/2} x_i x_j - (4m)^{-1}, 0)/(x_i x_j)^2`.
pub fn proof_weights_book(
    g: &Graph,
    cert: &SpectralCertificate,
) -> Result<WeightedGraph, WeightError> {
    proof_weights_joint(g, cert, 2)
}

/// Joint-threshold proof weights; `r = 2` reproduces the book weights
/// exactly.
pub fn proof_weights_joint(
    g: &Graph,
    cert: &SpectralCertificate,
    r: usize,
) -> Result<WeightedGraph, WeightError> {
    assert!(r >= 2, "joint parameter must be at least 2");
    if g.m() == 0 {
        return Err(WeightError::NoEdges);
    }
    let m = g.m() as f64;
    let rr = r as f64;
    let c1 = (2.0 * (rr - 1.0) / (rr * m)).sqrt();
    let c2 = (rr - 1.0) / (2.0 * rr * m);
    let x = &cert.perron;
    for &v in &cert.component {
        if x[v] <= 0.0 {
            return Err(WeightError::DegeneratePerron(v));
        }
    }
    let w: Vec<f64> = x.iter().map(|xi| xi * xi).collect();
    let mut entries = Vec::with_capacity(g.m());
    for (u, v) in g.edges() {
        let prod = x[u] * x[v];
        let numerator = c1 * prod - c2;
        let p = if numerator <= 0.0 {
            0.0
        } else {
            let raw = numerator / (prod * prod);
            // completing the square guarantees raw <= 1; only float rounding
            // can push past, and only within a 1e-12 band
            debug_assert!(raw <= 1.0 + 1e-12, "p = {raw}");
            raw.min(1.0)
        };
        entries.push(((u, v), p));
    }
    WeightedGraph::new(g.clone(), w, &entries)
}

/// Weighted common-neighbor mass of an edge: the book objective
/// `sum_{k in B(i,j)} p_ik p_jk w_k`.
pub fn book_objective(wg: &WeightedGraph, i: usize, j: usize) -> f64 {
    let g = wg.base();
    let mut mask = Vec::new();
    g.intersect_rows(i, j, &mut mask);
    let mut acc = 0.0;
    for (word_idx, &word) in mask.iter().enumerate() {
        let mut w = word;
        while w != 0 {
            let b = w.trailing_zeros() as usize;
            w &= w - 1;
            let k = word_idx * 64 + b;
            acc += wg.edge_weight(i, k) * wg.edge_weight(j, k) * wg.vertex_weight(k);
        }
    }
    acc
}

/// Joint objective of an edge: sum over (r+1)-cliques through it of the
/// product of interior vertex weights and all pair weights except the edge
/// itself.
pub fn joint_objective(wg: &WeightedGraph, i: usize, j: usize, r: usize) -> f64 {
    assert!(r >= 2);
    let g = wg.base();
    let mut mask = Vec::new();
    g.intersect_rows(i, j, &mut mask);
    let common: Vec<usize> = {
        let mut out = Vec::new();
        for (wi, &word) in mask.iter().enumerate() {
            let mut w = word;
            while w != 0 {
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                out.push(wi * 64 + b);
            }
        }
        out
    };
    // choose r-1 pairwise-adjacent interior vertices from the common
    // neighborhood, accumulating the weight product as we descend
    struct Walk<'a> {
        wg: &'a WeightedGraph,
        common: &'a [usize],
        chosen: Vec<usize>,
        edge: (usize, usize),
        acc: f64,
    }
    impl Walk<'_> {
        fn rec(&mut self, start: usize, left: usize, partial: f64) {
            if left == 0 {
                self.acc += partial;
                return;
            }
            for idx in start..self.common.len() {
                let k = self.common[idx];
                if !self.chosen.iter().all(|&c| self.wg.base().has_edge(c, k)) {
                    continue;
                }
                let mut term = partial
                    * self.wg.vertex_weight(k)
                    * self.wg.edge_weight(self.edge.0, k)
                    * self.wg.edge_weight(self.edge.1, k);
                for &c in &self.chosen {
                    term *= self.wg.edge_weight(c, k);
                }
                if term > 0.0 {
                    self.chosen.push(k);
                    self.rec(idx + 1, left - 1, term);
                    self.chosen.pop();
                }
            }
        }
    }
    let mut walk = Walk {
        wg,
        common: &common,
        chosen: Vec::new(),
        edge: (i, j),
        acc: 0.0,
    };
    walk.rec(0, r - 1, 1.0);
    walk.acc
}

/// Argmax of the book objective over edges with positive weight, ties to the
/// lexicographically smallest edge.
pub fn best_weighted_book_edge(wg: &WeightedGraph) -> Result<((usize, usize), f64), WeightError> {
    best_weighted_edge(wg, book_objective)
}

/// Argmax of the joint objective over edges with positive weight.
pub fn best_weighted_joint_edge(
    wg: &WeightedGraph,
    r: usize,
) -> Result<((usize, usize), f64), WeightError> {
    best_weighted_edge(wg, move |wg, u, v| joint_objective(wg, u, v, r))
}

fn best_weighted_edge(
    wg: &WeightedGraph,
    objective: impl Fn(&WeightedGraph, usize, usize) -> f64,
) -> Result<((usize, usize), f64), WeightError> {
    let mut best: Option<((usize, usize), f64)> = None;
    for ((u, v), p) in wg.edges() {
        if p <= 0.0 {
            continue;
        }
        let val = objective(wg, u, v);
        match best {
            Some((_, b)) if val <= b => {}
            _ => best = Some(((u, v), val)),
        }
    }
    best.ok_or(WeightError::NoWitness)
}

/// End-to-end book witness extracted from the proof pipeline.
#[derive(Debug, Clone, Serialize)]
pub struct BookPipelineWitness {
    /// The heavy edge, oriented so the first endpoint has the larger Perron
    /// entry.
    pub edge: (usize, usize),
    /// Lemma objective value at the edge.
    pub objective: f64,
    /// Common neighbors k of the edge with `p_ik > 0` for the heavy
    /// endpoint i.
    pub b_prime: Vec<usize>,
    /// Full common neighborhood size of the edge: the realized book size.
    pub book_size: u64,
    /// `sqrt(m)/144` for the floor comparison (reported, not asserted).
    pub floor: f64,
}

/// Runs weights -> witness edge -> positive-weight common-neighbor
/// extraction. The caller should have certified the graph Nosal; the
/// density precondition is validated here.
pub fn book_witness_from_proof(
    g: &Graph,
    cert: &SpectralCertificate,
) -> Result<BookPipelineWitness, WeightError> {
    let wg = proof_weights_book(g, cert)?;
    let ((a, b), objective) = best_weighted_book_edge(&wg)?;
    // orient the edge so `i` carries the larger Perron entry
    let (i, j) = if cert.perron[a] >= cert.perron[b] {
        (a, b)
    } else {
        (b, a)
    };
    let mut mask = Vec::new();
    g.intersect_rows(i, j, &mut mask);
    let mut b_prime = Vec::new();
    let mut book = 0u64;
    for (wi, &word) in mask.iter().enumerate() {
        let mut w = word;
        while w != 0 {
            let bit = w.trailing_zeros() as usize;
            w &= w - 1;
            let k = wi * 64 + bit;
            book += 1;
            if wg.edge_weight(i, k) > 0.0 {
                b_prime.push(k);
            }
        }
    }
    Ok(BookPipelineWitness {
        edge: (i, j),
        objective,
        b_prime,
        book_size: book,
        floor: (g.m() as f64).sqrt() / 144.0,
    })
}

/// Random blowup: vertex i becomes an independent set of `floor(w_i N)`
/// fresh vertices; each cross pair across a base edge appears independently
/// with the edge's weight. Deterministic for a fixed `(wg, n_scale, seed)`.
pub fn random_blowup(wg: &WeightedGraph, n_scale: usize, seed: u64) -> Graph {
    let base_n = wg.base().n();
    let sizes: Vec<usize> = (0..base_n)
        .map(|v| (wg.vertex_weight(v) * n_scale as f64).floor() as usize)
        .collect();
    let mut offset = Vec::with_capacity(base_n + 1);
    let mut acc = 0usize;
    for &size in &sizes {
        offset.push(acc);
        acc += size;
    }
    offset.push(acc);
    let mut g = Graph::empty(acc);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for ((u, v), p) in wg.edges() {
        if p <= 0.0 || sizes[u] == 0 || sizes[v] == 0 {
            continue;
        }
        for a in offset[u]..offset[u] + sizes[u] {
            for b in offset[v]..offset[v] + sizes[v] {
                if p >= 1.0 || rng.random::<f64>() < p {
                    g.add_edge(a, b);
                }
            }
        }
    }
    g
}

/// Expected blowup edge count at the realized (floored) blob sizes:
/// `sum p_ij |V_i| |V_j|`.
pub fn blowup_expected_edges(wg: &WeightedGraph, n_scale: usize) -> f64 {
    let sizes: Vec<f64> = (0..wg.base().n())
        .map(|v| (wg.vertex_weight(v) * n_scale as f64).floor())
        .collect();
    wg.edges()
        .map(|((u, v), p)| p * sizes[u] * sizes[v])
        .sum()
}

/// JSON schema for weighted graphs on the CLI surface: vertex weights plus
/// edge weights keyed `"u-v"`.
#[derive(Debug, Serialize, Deserialize)]
pub struct WeightedGraphFile {
    pub w: Vec<f64>,
    pub p: std::collections::BTreeMap<String, f64>,
}

impl WeightedGraphFile {
    pub fn into_weighted_graph(self) -> Result<WeightedGraph, WeightError> {
        let n = self.w.len();
        let mut base = Graph::empty(n);
        let mut entries = Vec::with_capacity(self.p.len());
        for (key, &val) in self.p.iter() {
            let parts: Vec<&str> = key.split('-').collect();
            let parse = |s: &str| -> Result<usize, WeightError> {
                s.parse::<usize>().map_err(|_| WeightError::BadEdge {
                    u: usize::MAX,
                    v: usize::MAX,
                })
            };
            if parts.len() != 2 {
                return Err(WeightError::BadEdge {
                    u: usize::MAX,
                    v: usize::MAX,
                });
            }
            let u = parse(parts[0])?;
            let v = parse(parts[1])?;
            if u >= n || v >= n || u == v {
                return Err(WeightError::BadEdge { u, v });
            }
            base.add_edge(u, v);
            entries.push(((u, v), val));
        }
        WeightedGraph::new(base, self.w, &entries)
    }

    pub fn from_weighted_graph(wg: &WeightedGraph) -> WeightedGraphFile {
        let p = wg
            .edges()
            .map(|((u, v), p)| (format!("{u}-{v}"), p))
            .collect();
        WeightedGraphFile {
            w: wg.vertex_weights().to_vec(),
            p,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions;
    use crate::spectral::spectral_radius_default;

    fn uniform_complete(n: usize) -> WeightedGraph {
        let g = Graph::complete(n);
        let w = vec![1.0 / n as f64; n];
        let entries: Vec<((usize, usize), f64)> =
            g.edges().into_iter().map(|e| (e, 1.0)).collect();
        WeightedGraph::new(g, w, &entries).unwrap()
    }

    #[test]
    fn density_of_uniform_clique() {
        let wg = uniform_complete(6);
        let expect = (1.0 - 1.0 / 6.0) / 2.0;
        assert!((wg.weighted_edge_density() - expect).abs() < 1e-12);
    }

    #[test]
    fn density_zero_when_p_zero() {
        let g = Graph::complete(4);
        let w = vec![0.25; 4];
        let wg = WeightedGraph::new(g, w, &[]).unwrap();
        assert_eq!(wg.weighted_edge_density(), 0.0);
        assert!(matches!(
            best_weighted_book_edge(&wg),
            Err(WeightError::NoWitness)
        ));
    }

    #[test]
    fn vertex_weight_sum_enforced() {
        let g = Graph::complete(3);
        let err = WeightedGraph::new(g, vec![0.5, 0.5, 0.5], &[]).unwrap_err();
        assert!(matches!(err, WeightError::BadVertexWeights(_)));
    }

    #[test]
    fn book_objective_on_uniform_clique() {
        // all weights 1/n, p = 1: objective of every edge is (n-2)/n
        let n = 7;
        let wg = uniform_complete(n);
        let ((u, v), val) = best_weighted_book_edge(&wg).unwrap();
        assert_eq!((u, v), (0, 1));
        assert!((val - (n as f64 - 2.0) / n as f64).abs() < 1e-12);
    }

    #[test]
    fn joint_objective_specializes_to_book_at_r2() {
        let out = constructions::clique_plus_star(60).unwrap();
        let cert = spectral_radius_default(&out.graph).unwrap();
        let wg = proof_weights_book(&out.graph, &cert).unwrap();
        for (e, p) in wg.edges().take(20) {
            if p > 0.0 {
                let b = book_objective(&wg, e.0, e.1);
                let j = joint_objective(&wg, e.0, e.1, 2);
                assert!((b - j).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn proof_weights_in_range_and_symmetric_on_clique() {
        let g = Graph::complete(17);
        let cert = spectral_radius_default(&g).unwrap();
        let wg = proof_weights_book(&g, &cert).unwrap();
        let ps: Vec<f64> = wg.edges().map(|(_, p)| p).collect();
        // symmetry of K_n forces uniform p
        for &p in &ps {
            assert!((0.0..=1.0).contains(&p));
            assert!((p - ps[0]).abs() < 1e-9);
        }
    }

    #[test]
    fn proof_weights_match_r2_formula() {
        let out = constructions::book_core(101).unwrap();
        let cert = spectral_radius_default(&out.graph).unwrap();
        let book = proof_weights_book(&out.graph, &cert).unwrap();
        let joint = proof_weights_joint(&out.graph, &cert, 2).unwrap();
        for ((e1, p1), (e2, p2)) in book.edges().zip(joint.edges()) {
            assert_eq!(e1, e2);
            assert_eq!(p1, p2);
        }
        // threshold: p = 0 exactly when x_i x_j <= (1/4) m^{-1/2}
        let m = out.graph.m() as f64;
        for ((u, v), p) in book.edges() {
            let prod = cert.perron[u] * cert.perron[v];
            if prod <= 0.25 / m.sqrt() {
                assert_eq!(p, 0.0);
            } else {
                assert!(p > 0.0);
            }
        }
    }

    #[test]
    fn certified_density_exceeds_quarter() {
        for m in [101u64, 1001] {
            let out = constructions::book_core(m).unwrap();
            let cert = spectral_radius_default(&out.graph).unwrap();
            let wg = proof_weights_book(&out.graph, &cert).unwrap();
            assert!(
                wg.weighted_edge_density() > 0.25,
                "density {} at m={m}",
                wg.weighted_edge_density()
            );
        }
    }

    #[test]
    fn pipeline_extracts_nonempty_witness() {
        let out = constructions::clique_plus_star(300).unwrap();
        let cert = spectral_radius_default(&out.graph).unwrap();
        let w = book_witness_from_proof(&out.graph, &cert).unwrap();
        assert!(!w.b_prime.is_empty());
        assert!(w.book_size as f64 > w.floor);
        // on a clique every common neighbor survives: |B'| = s - 2
        let s = out.params["s"];
        assert_eq!(w.b_prime.len() as u64, s - 2);
    }

    #[test]
    fn blowup_determinism_and_extremes() {
        let wg = uniform_complete(5);
        let g1 = random_blowup(&wg, 50, 7);
        let g2 = random_blowup(&wg, 50, 7);
        assert_eq!(g1, g2);
        let g3 = random_blowup(&wg, 50, 8);
        assert!(g1 != g3 || g1.m() == g3.m());
        // p = 1 everywhere: deterministic complete multipartite blowup
        let expect: f64 = blowup_expected_edges(&wg, 50);
        assert_eq!(g1.m() as f64, expect);
        // p = 0: edgeless
        let g = Graph::complete(4);
        let none = WeightedGraph::new(g, vec![0.25; 4], &[]).unwrap();
        assert_eq!(random_blowup(&none, 100, 3).m(), 0);
    }

    #[test]
    fn joint_threshold_formula() {
        // p = 0 exactly when x_i x_j <= sqrt((r-1) / (8 r m))
        let out = constructions::clique_joint_tight(1000, 3).unwrap();
        let cert = spectral_radius_default(&out.graph).unwrap();
        let r = 3.0f64;
        let m = out.graph.m() as f64;
        let threshold = ((r - 1.0) / (8.0 * r * m)).sqrt();
        let wg = proof_weights_joint(&out.graph, &cert, 3).unwrap();
        for ((u, v), p) in wg.edges() {
            let prod = cert.perron[u] * cert.perron[v];
            if prod <= threshold {
                assert_eq!(p, 0.0, "edge ({u},{v})");
            } else {
                assert!(p > 0.0, "edge ({u},{v})");
            }
        }
    }

    #[test]
    fn joint_density_exceeds_target_on_tight_construction() {
        for r in [2usize, 3] {
            let out = constructions::clique_joint_tight(2000, r).unwrap();
            let cert = spectral_radius_default(&out.graph).unwrap();
            let wg = proof_weights_joint(&out.graph, &cert, r).unwrap();
            let target = (r as f64 - 1.0) / (2.0 * r as f64);
            assert!(
                wg.weighted_edge_density() > target,
                "r={r}: density {} <= {target}",
                wg.weighted_edge_density()
            );
        }
    }

    #[test]
    fn blowup_mean_tracks_floored_expectation() {
        // mean edge count over 100 seeds within 2 N^1.5 of the floored
        // expectation at N = 1000
        let out = constructions::book_core(501).unwrap();
        let cert = spectral_radius_default(&out.graph).unwrap();
        let wg = proof_weights_book(&out.graph, &cert).unwrap();
        let n_scale = 1000usize;
        let expect = blowup_expected_edges(&wg, n_scale);
        let mut total = 0u64;
        for seed in 0..100 {
            total += random_blowup(&wg, n_scale, seed).m() as u64;
        }
        let mean = total as f64 / 100.0;
        assert!(
            (mean - expect).abs() <= 2.0 * (n_scale as f64).powf(1.5),
            "mean {mean} vs expectation {expect}"
        );
    }

    #[test]
    fn witness_edge_invariant_under_relabeling() {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0xbeef);
        let out = constructions::clique_plus_star(120).unwrap();
        let g = out.graph;
        let cert = spectral_radius_default(&g).unwrap();
        let wg = proof_weights_book(&g, &cert).unwrap();
        let (_, base_val) = best_weighted_book_edge(&wg).unwrap();
        for _ in 0..5 {
            let mut perm: Vec<usize> = (0..g.n()).collect();
            perm.shuffle(&mut rng);
            let mut h = Graph::empty(g.n());
            for (u, v) in g.edges() {
                h.add_edge(perm[u], perm[v]);
            }
            let hcert = spectral_radius_default(&h).unwrap();
            let hwg = proof_weights_book(&h, &hcert).unwrap();
            let (_, val) = best_weighted_book_edge(&hwg).unwrap();
            assert!((val - base_val).abs() < 1e-9, "{val} vs {base_val}");
        }
    }

    #[test]
    fn weighted_graph_file_roundtrip() {
        let wg = uniform_complete(4);
        let file = WeightedGraphFile::from_weighted_graph(&wg);
        let json = serde_json::to_string(&file).unwrap();
        let back: WeightedGraphFile = serde_json::from_str(&json).unwrap();
        let wg2 = back.into_weighted_graph().unwrap();
        assert_eq!(wg2.base().m(), 6);
        assert!((wg2.weighted_edge_density() - wg.weighted_edge_density()).abs() < 1e-12);
    }
}
