//! Deterministic generators for the extremal families, each returning the
//! graph together with its predicted statistics so tests and the harness can
//! self-check generator and counters against each other.
//!
//! Vertex numbering is fixed: host cliques and hubs occupy the lowest
//! indices and pendant edges always attach to vertex 0, so witnesses are
//! reproducible across runs.

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::counting::{self, C4Method};
use crate::graph::Graph;
use crate::spectral;

#[derive(Debug, Error)]
pub enum ConstructError {
    #[error("infeasible parameters for {family}: {reason}")]
    Infeasible { family: &'static str, reason: String },
    #[error("parameter {name} must be at least {min}, got {got}")]
    TooSmall {
        name: &'static str,
        min: usize,
        got: usize,
    },
}

/// One checkable claim about a generated graph.
#[derive(Debug, Clone, Serialize)]
pub enum Prediction {
    VertexCount(u64),
    EdgeCount(u64),
    /// `lambda` equals `value` within `tol`.
    LambdaEquals { value: f64, tol: f64 },
    /// `lambda >= value` (up to a 1e-9 guard).
    LambdaAtLeast(f64),
    /// `lambda^2 > value` (up to a 1e-9 guard).
    LambdaSquaredAbove(f64),
    /// `is_nosal` must return a certified yes.
    Nosal,
    BookSize(u64),
    C4Count(u64),
    KiteCount(u64),
    TriangularEdges(u64),
    CliqueCount { t: usize, count: u64 },
    CliqueCountAtMost { t: usize, bound: u64 },
    JointCount { r: usize, count: u64 },
}

#[derive(Debug, Error)]
#[error("{family}: prediction {prediction:?} failed, observed {observed}")]
pub struct SelfCheckFailure {
    pub family: String,
    pub prediction: Prediction,
    pub observed: String,
}

/// A generated graph plus the statistics its family formula predicts.
#[derive(Debug, Clone)]
pub struct ConstructionOutput {
    pub name: &'static str,
    pub graph: Graph,
    pub params: BTreeMap<&'static str, u64>,
    pub predictions: Vec<Prediction>,
}

impl ConstructionOutput {
    /// Human-readable instance label, e.g. `book_construction(m=10001)`.
    pub fn label(&self) -> String {
        let params: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        format!("{}({})", self.name, params.join(","))
    }

    /// Evaluates every prediction against freshly computed statistics.
    pub fn self_check(&self) -> Result<(), SelfCheckFailure> {
        let g = &self.graph;
        let fail = |p: &Prediction, obs: String| SelfCheckFailure {
            family: self.label(),
            prediction: p.clone(),
            observed: obs,
        };
        for p in &self.predictions {
            match *p {
                Prediction::VertexCount(n) => {
                    if g.n() as u64 != n {
                        return Err(fail(p, g.n().to_string()));
                    }
                }
                Prediction::EdgeCount(m) => {
                    if g.m() as u64 != m {
                        return Err(fail(p, g.m().to_string()));
                    }
                }
                Prediction::LambdaEquals { value, tol } => {
                    let l = spectral::spectral_radius_default(g)
                        .map_err(|e| fail(p, e.to_string()))?
                        .lambda;
                    if (l - value).abs() > tol {
                        return Err(fail(p, l.to_string()));
                    }
                }
                Prediction::LambdaAtLeast(v) => {
                    let l = spectral::spectral_radius_default(g)
                        .map_err(|e| fail(p, e.to_string()))?
                        .lambda;
                    if l < v - 1e-9 {
                        return Err(fail(p, l.to_string()));
                    }
                }
                Prediction::LambdaSquaredAbove(v) => {
                    let l = spectral::spectral_radius_default(g)
                        .map_err(|e| fail(p, e.to_string()))?
                        .lambda;
                    if l * l <= v - 1e-9 {
                        return Err(fail(p, (l * l).to_string()));
                    }
                }
                Prediction::Nosal => {
                    let verdict = spectral::is_nosal(g).map_err(|e| fail(p, e.to_string()))?;
                    if !verdict.is_certified() {
                        return Err(fail(p, format!("{verdict:?}")));
                    }
                }
                Prediction::BookSize(k) => {
                    let (got, _) = counting::book_size(g);
                    if got != k {
                        return Err(fail(p, got.to_string()));
                    }
                }
                Prediction::C4Count(c) => {
                    let got = counting::c4_count(g, C4Method::Codegree)
                        .map_err(|e| fail(p, e.to_string()))?;
                    if got != c {
                        return Err(fail(p, got.to_string()));
                    }
                }
                Prediction::KiteCount(c) => {
                    let got = counting::kite_count(g);
                    if got != c {
                        return Err(fail(p, got.to_string()));
                    }
                }
                Prediction::TriangularEdges(c) => {
                    let got = counting::triangular_edges(g);
                    if got != c {
                        return Err(fail(p, got.to_string()));
                    }
                }
                Prediction::CliqueCount { t, count } => {
                    let got =
                        counting::clique_count(g, t).map_err(|e| fail(p, e.to_string()))?;
                    if got != count {
                        return Err(fail(p, got.to_string()));
                    }
                }
                Prediction::CliqueCountAtMost { t, bound } => {
                    let got =
                        counting::clique_count(g, t).map_err(|e| fail(p, e.to_string()))?;
                    if got > bound {
                        return Err(fail(p, got.to_string()));
                    }
                }
                Prediction::JointCount { r, count } => {
                    let (got, _) =
                        counting::joint_size(g, r).map_err(|e| fail(p, e.to_string()))?;
                    if got != count {
                        return Err(fail(p, got.to_string()));
                    }
                }
            }
        }
        Ok(())
    }
}

fn choose2(x: u64) -> u64 {
    x * x.saturating_sub(1) / 2
}

fn choose(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}

fn ceil_sqrt(m: u64) -> u64 {
    let r = m.isqrt();
    if r * r == m {
        r
    } else {
        r + 1
    }
}

/// Clique with a pendant star: `K_s` with `t = m - C(s,2)` pendant edges on
/// vertex 0, where `s = ceil(sqrt(m)) + 1`. The pendant star absorbs the
/// leftover edge budget without creating any 4-cycle.
pub fn clique_plus_star(m: u64) -> Result<ConstructionOutput, ConstructError> {
    let s = ceil_sqrt(m) + 1;
    let clique_edges = choose2(s);
    if clique_edges > m {
        return Err(ConstructError::Infeasible {
            family: "clique_plus_star",
            reason: format!("K_{s} already has {clique_edges} > {m} edges"),
        });
    }
    let t = m - clique_edges;
    let n = (s + t) as usize;
    let mut g = Graph::empty(n);
    for u in 0..s as usize {
        for v in (u + 1)..s as usize {
            g.add_edge(u, v);
        }
    }
    for p in 0..t as usize {
        g.add_edge(0, s as usize + p);
    }
    let mut predictions = vec![
        Prediction::VertexCount(n as u64),
        Prediction::EdgeCount(m),
        Prediction::C4Count(3 * choose(s, 4)),
        Prediction::BookSize(s - 2),
        Prediction::LambdaAtLeast(s as f64 - 1.0),
    ];
    if s >= 3 {
        predictions.push(Prediction::Nosal);
    }
    Ok(ConstructionOutput {
        name: "clique_plus_star",
        graph: g,
        params: BTreeMap::from([("m", m), ("s", s), ("t", t)]),
        predictions,
    })
}

/// `K_{s,t}` plus one edge inside the s-side. Nosal whenever `s < 4(t+1)`.
pub fn k_st_plus(s: u64, t: u64) -> Result<ConstructionOutput, ConstructError> {
    if s < 2 {
        return Err(ConstructError::TooSmall {
            name: "s",
            min: 2,
            got: s as usize,
        });
    }
    if t < 1 {
        return Err(ConstructError::TooSmall {
            name: "t",
            min: 1,
            got: t as usize,
        });
    }
    let n = (s + t) as usize;
    let mut g = Graph::empty(n);
    for u in 0..s as usize {
        for v in s as usize..n {
            g.add_edge(u, v);
        }
    }
    g.add_edge(0, 1);
    let m = s * t + 1;
    let mut predictions = vec![
        Prediction::VertexCount(n as u64),
        Prediction::EdgeCount(m),
        Prediction::BookSize(t),
        Prediction::TriangularEdges(2 * t + 1),
        Prediction::KiteCount(choose2(t)),
        Prediction::C4Count(choose2(s) * choose2(t)),
    ];
    if s < 4 * (t + 1) {
        predictions.push(Prediction::Nosal);
    }
    Ok(ConstructionOutput {
        name: "k_st_plus",
        graph: g,
        params: BTreeMap::from([("s", s), ("t", t), ("m", m)]),
        predictions,
    })
}

/// Largest `(s, t)` pair with `s*t + 1 = m`, `s` as close to `2 sqrt(m)` as
/// divisors of `m - 1` allow, subject to the Nosal window `s < 4(t+1)`.
pub fn k_st_plus_near(m: u64) -> Result<ConstructionOutput, ConstructError> {
    if m < 3 {
        return Err(ConstructError::TooSmall {
            name: "m",
            min: 3,
            got: m as usize,
        });
    }
    let target = 2 * ceil_sqrt(m);
    let mut best: Option<(u64, u64)> = None;
    let prod = m - 1;
    let mut d = 1;
    while d * d <= prod {
        if prod.is_multiple_of(d) {
            for s in [d, prod / d] {
                let t = prod / s;
                if s >= 2 && t >= 1 && s < 4 * (t + 1) {
                    let dist = s.abs_diff(target);
                    if best.is_none_or(|(bs, _)| dist < bs.abs_diff(target)) {
                        best = Some((s, t));
                    }
                }
            }
        }
        d += 1;
    }
    let (s, t) = best.ok_or_else(|| ConstructError::Infeasible {
        family: "k_st_plus",
        reason: format!("no divisor pair of {prod} fits the Nosal window"),
    })?;
    k_st_plus(s, t)
}

/// Blowup of the triangular prism: the three upper vertices become
/// independent sets of size `k+1`, the three lower ones size `k-1`, and each
/// prism edge becomes a complete bipartite graph. `k = 1` degenerates to
/// `K_{2,2,2}`.
pub fn prism_blowup(k: u64) -> Result<ConstructionOutput, ConstructError> {
    if k < 1 {
        return Err(ConstructError::TooSmall {
            name: "k",
            min: 1,
            got: k as usize,
        });
    }
    let up = (k + 1) as usize;
    let lo = (k - 1) as usize;
    let n = 3 * up + 3 * lo;
    // blob i: upper 0..3 at offsets i*up, lower 3..6 after the uppers
    let blob = |i: usize| -> std::ops::Range<usize> {
        if i < 3 {
            i * up..(i + 1) * up
        } else {
            3 * up + (i - 3) * lo..3 * up + (i - 2) * lo
        }
    };
    let mut g = Graph::empty(n);
    let join = |a: usize, b: usize, g: &mut Graph| {
        for u in blob(a) {
            for v in blob(b) {
                g.add_edge(u, v);
            }
        }
    };
    for i in 0..3 {
        for j in (i + 1)..3 {
            join(i, j, &mut g); // upper triangle
            join(i + 3, j + 3, &mut g); // lower triangle
        }
        join(i, i + 3, &mut g); // matching
    }
    let m = 9 * k * k + 3;
    Ok(ConstructionOutput {
        name: "prism_blowup",
        graph: g,
        params: BTreeMap::from([("k", k), ("m", m)]),
        predictions: vec![
            Prediction::VertexCount(6 * k),
            Prediction::EdgeCount(m),
            Prediction::BookSize(k + 1),
            Prediction::Nosal,
        ],
    })
}

/// Two dominating vertices joined to an independent set: `K_2` joined to
/// `(m-1)/2` singletons, for odd `m`. Its spectral radius is exactly
/// `(1 + sqrt(4m - 3)) / 2`.
pub fn book_core(m: u64) -> Result<ConstructionOutput, ConstructError> {
    if m < 3 || m.is_multiple_of(2) {
        return Err(ConstructError::Infeasible {
            family: "book_core",
            reason: format!("needs odd m >= 3, got {m}"),
        });
    }
    let q = (m - 1) / 2;
    let n = 2 + q as usize;
    let mut g = Graph::empty(n);
    g.add_edge(0, 1);
    for v in 2..n {
        g.add_edge(0, v);
        g.add_edge(1, v);
    }
    Ok(ConstructionOutput {
        name: "book_core",
        graph: g,
        params: BTreeMap::from([("m", m), ("q", q)]),
        predictions: vec![
            Prediction::VertexCount(n as u64),
            Prediction::EdgeCount(m),
            Prediction::LambdaEquals {
                value: (1.0 + (4.0 * m as f64 - 3.0).sqrt()) / 2.0,
                tol: 1e-9,
            },
            Prediction::C4Count(choose2(q)),
            Prediction::BookSize(q),
            Prediction::Nosal,
        ],
    })
}

/// The book-shaped near-extremal family: `K_2` joined to `(m-t-1)/2`
/// singletons plus `t` pendant edges on one hub, with `t` the largest
/// integer below `isqrt(m) - 1` keeping `m - t - 1` even.
pub fn book_construction(m: u64) -> Result<ConstructionOutput, ConstructError> {
    if m < 7 {
        return Err(ConstructError::TooSmall {
            name: "m",
            min: 7,
            got: m as usize,
        });
    }
    let fl = m.isqrt() - 1;
    let t = if (m - fl).is_multiple_of(2) {
        fl - 1
    } else if fl >= 2 {
        fl - 2
    } else {
        return Err(ConstructError::Infeasible {
            family: "book_construction",
            reason: format!("no t below {fl} keeps m - t - 1 even at m = {m}"),
        });
    };
    debug_assert_eq!((m - t - 1) % 2, 0);
    debug_assert!(m > (t + 1) * (t + 1));
    let q = (m - t - 1) / 2;
    let n = 2 + q as usize + t as usize;
    let mut g = Graph::empty(n);
    g.add_edge(0, 1);
    for v in 2..2 + q as usize {
        g.add_edge(0, v);
        g.add_edge(1, v);
    }
    for p in 0..t as usize {
        g.add_edge(0, 2 + q as usize + p);
    }
    let core_lambda = (1.0 + (4.0 * (m - t) as f64 - 3.0).sqrt()) / 2.0;
    let mut predictions = vec![
        Prediction::VertexCount(n as u64),
        Prediction::EdgeCount(m),
        Prediction::C4Count(choose2(q)),
        Prediction::BookSize(q),
        Prediction::Nosal,
    ];
    if t == 0 {
        predictions.push(Prediction::LambdaEquals {
            value: core_lambda,
            tol: 1e-9,
        });
    } else {
        predictions.push(Prediction::LambdaAtLeast(core_lambda));
    }
    Ok(ConstructionOutput {
        name: "book_construction",
        graph: g,
        params: BTreeMap::from([("m", m), ("t", t), ("q", q)]),
        predictions,
    })
}

/// Complete multipartite graph with the given part sizes.
pub fn complete_multipartite(parts: &[usize]) -> Result<Graph, ConstructError> {
    if parts.contains(&0) {
        return Err(ConstructError::TooSmall {
            name: "part size",
            min: 1,
            got: 0,
        });
    }
    let n: usize = parts.iter().sum();
    let mut g = Graph::empty(n);
    let mut starts = Vec::with_capacity(parts.len() + 1);
    let mut acc = 0;
    for &p in parts {
        starts.push(acc);
        acc += p;
    }
    starts.push(acc);
    for i in 0..parts.len() {
        for j in (i + 1)..parts.len() {
            for u in starts[i]..starts[i + 1] {
                for v in starts[j]..starts[j + 1] {
                    g.add_edge(u, v);
                }
            }
        }
    }
    Ok(g)
}

/// Balanced complete r-partite graph on n vertices.
pub fn turan(n: usize, r: usize) -> Result<Graph, ConstructError> {
    if r < 1 {
        return Err(ConstructError::TooSmall {
            name: "r",
            min: 1,
            got: r,
        });
    }
    if n < r {
        return Err(ConstructError::Infeasible {
            family: "turan",
            reason: format!("need n >= r, got n={n}, r={r}"),
        });
    }
    let q = n / r;
    let rem = n % r;
    let parts: Vec<usize> = (0..r).map(|i| if i < rem { q + 1 } else { q }).collect();
    complete_multipartite(&parts)
}

/// Balanced complete r-partite graph `K_{t,...,t}` with one extra edge
/// embedded in the first part. It has `C(r,2) t^2 + 1` edges and exactly
/// `t^{r-1}` copies of `K_{r+1}`, all through the added edge.
pub fn kpartite_plus_edge(t: usize, r: usize) -> Result<ConstructionOutput, ConstructError> {
    if r < 2 {
        return Err(ConstructError::TooSmall {
            name: "r",
            min: 2,
            got: r,
        });
    }
    if t < 2 {
        return Err(ConstructError::TooSmall {
            name: "t",
            min: 2,
            got: t,
        });
    }
    let mut g = complete_multipartite(&vec![t; r])?;
    g.add_edge(0, 1);
    let m = choose2(r as u64) * (t as u64) * (t as u64) + 1;
    let kr1 = (t as u64).pow(r as u32 - 1);
    Ok(ConstructionOutput {
        name: "kpartite_plus_edge",
        graph: g,
        params: BTreeMap::from([("t", t as u64), ("r", r as u64), ("m", m)]),
        predictions: vec![
            Prediction::EdgeCount(m),
            Prediction::CliqueCount {
                t: r + 1,
                count: kr1,
            },
            Prediction::LambdaSquaredAbove((1.0 - 1.0 / r as f64) * 2.0 * m as f64),
            Prediction::Nosal,
        ],
    })
}

/// Clique sized for the r-joint threshold with a pendant star absorbing the
/// leftover budget: `K_s` with `s = ceil(sqrt((1-1/r) 2m)) + 1` plus
/// `m - C(s,2)` pendant edges on vertex 0.
pub fn clique_joint_tight(m: u64, r: usize) -> Result<ConstructionOutput, ConstructError> {
    if r < 2 {
        return Err(ConstructError::TooSmall {
            name: "r",
            min: 2,
            got: r,
        });
    }
    let target = (1.0 - 1.0 / r as f64) * 2.0 * m as f64;
    let s = target.sqrt().ceil() as u64 + 1;
    let clique_edges = choose2(s);
    if clique_edges > m {
        return Err(ConstructError::Infeasible {
            family: "clique_joint_tight",
            reason: format!("K_{s} already has {clique_edges} > {m} edges"),
        });
    }
    let t = m - clique_edges;
    let n = (s + t) as usize;
    let mut g = Graph::empty(n);
    for u in 0..s as usize {
        for v in (u + 1)..s as usize {
            g.add_edge(u, v);
        }
    }
    for p in 0..t as usize {
        g.add_edge(0, s as usize + p);
    }
    let mut predictions = vec![
        Prediction::EdgeCount(m),
        Prediction::LambdaAtLeast(s as f64 - 1.0),
        Prediction::JointCount {
            r,
            count: if s >= 2 { choose(s - 2, r as u64 - 1) } else { 0 },
        },
    ];
    let strict = t >= 1 || ((s - 1) * (s - 1)) as f64 > target;
    if strict {
        predictions.push(Prediction::LambdaSquaredAbove(target));
        predictions.push(Prediction::Nosal);
    }
    Ok(ConstructionOutput {
        name: "clique_joint_tight",
        graph: g,
        params: BTreeMap::from([("m", m), ("r", r as u64), ("s", s), ("t", t)]),
        predictions,
    })
}

/// Clique with an arbitrary triangle-free graph attached by identifying its
/// vertex 0 with clique vertex 0. The default pendant-star instantiation is
/// [`clique_plus_star`]; this hook accepts any triangle-free `h`.
pub fn clique_circ(s: usize, h: &Graph) -> Result<ConstructionOutput, ConstructError> {
    if s < 2 {
        return Err(ConstructError::TooSmall {
            name: "s",
            min: 2,
            got: s,
        });
    }
    if counting::triangle_count(h) != 0 {
        return Err(ConstructError::Infeasible {
            family: "clique_circ",
            reason: "attached graph must be triangle-free".to_string(),
        });
    }
    if h.n() == 0 {
        return Err(ConstructError::TooSmall {
            name: "h.n",
            min: 1,
            got: 0,
        });
    }
    let n = s + h.n() - 1;
    let mut g = Graph::empty(n);
    for u in 0..s {
        for v in (u + 1)..s {
            g.add_edge(u, v);
        }
    }
    // h vertex 0 maps to clique vertex 0; h vertex i >= 1 maps to s + i - 1
    let map = |v: usize| if v == 0 { 0 } else { s + v - 1 };
    for (u, v) in h.edges() {
        g.add_edge(map(u), map(v));
    }
    let m = g.m() as u64;
    Ok(ConstructionOutput {
        name: "clique_circ",
        graph: g,
        params: BTreeMap::from([("s", s as u64), ("m", m)]),
        predictions: vec![
            Prediction::EdgeCount(m),
            Prediction::LambdaAtLeast(s as f64 - 1.0),
        ],
    })
}
