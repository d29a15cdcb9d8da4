//! Simple undirected graphs stored as per-vertex adjacency bitset rows.
//!
//! One row holds `ceil(n / 64)` machine words, so neighborhood intersections
//! (codegrees, clique kernels) are word-parallel popcounts. Graphs are
//! immutable for all analysis entry points; mutation happens through the
//! explicit `add_edge` / `remove_edge` builders used by generators and the
//! search module, which take `&mut self`.

use std::fmt;

use thiserror::Error;

/// Errors raised by graph construction and elementary queries.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0} is not allowed")]
    SelfLoop(usize),
    #[error("vertex sets must be disjoint, but both contain {0}")]
    OverlappingSets(usize),
    #[error("duplicate vertex {0} in selection")]
    DuplicateVertex(usize),
}

/// Errors raised while parsing edge-list text.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: expected two vertex indices, got {found:?}")]
    Malformed { line: usize, found: String },
    #[error("line {line}: self-loop {v} {v} rejected (graphs are simple)")]
    SelfLoop { line: usize, v: u64 },
    #[error("line {line}: vertex {v} exceeds declared vertex count {n}")]
    IndexBeyondHeader { line: usize, v: u64, n: usize },
    #[error("header on line {line} is malformed: {found:?}")]
    BadHeader { line: usize, found: String },
    #[error("input contains no graph data")]
    Empty,
}

const WORD_BITS: usize = 64;

#[inline]
fn words_for(n: usize) -> usize {
    n.div_ceil(WORD_BITS)
}

/// Simple undirected graph on vertices `0..n` with adjacency bitset rows.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    words: usize,
    bits: Vec<u64>,
    deg: Vec<u32>,
    m: usize,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={})", self.n, self.m)
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        let words = words_for(n);
        Graph {
            n,
            words,
            bits: vec![0u64; n * words],
            deg: vec![0; n],
            m: 0,
        }
    }

    /// Complete graph `K_n`.
    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in (u + 1)..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// Cycle `C_n` (`n >= 3`).
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let mut g = Graph::empty(n);
        for u in 0..n {
            g.add_edge(u, (u + 1) % n);
        }
        g
    }

    /// Star `K_{1,leaves}` with the hub at vertex 0.
    pub fn star(leaves: usize) -> Self {
        let mut g = Graph::empty(leaves + 1);
        for v in 1..=leaves {
            g.add_edge(0, v);
        }
        g
    }

    /// Builds a graph from an explicit edge list over vertices `0..n`.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.deg[v] as usize
    }

    pub fn max_degree(&self) -> usize {
        self.deg.iter().copied().max().unwrap_or(0) as usize
    }

    /// Sum of squared degrees, exact.
    pub fn degree_power(&self) -> u64 {
        self.deg.iter().map(|&d| (d as u64) * (d as u64)).sum()
    }

    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.words..(v + 1) * self.words]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.bits[u * self.words + v / WORD_BITS] >> (v % WORD_BITS) & 1 == 1
    }

    /// Adds edge `{u, v}`; returns false if it was already present.
    ///
    /// # Panics
    /// Panics on out-of-range vertices or `u == v`.
    pub fn add_edge(&mut self, u: usize, v: usize) -> bool {
        assert!(u < self.n && v < self.n, "vertex out of range");
        assert_ne!(u, v, "self-loops are not allowed");
        if self.has_edge(u, v) {
            return false;
        }
        self.bits[u * self.words + v / WORD_BITS] |= 1u64 << (v % WORD_BITS);
        self.bits[v * self.words + u / WORD_BITS] |= 1u64 << (u % WORD_BITS);
        self.deg[u] += 1;
        self.deg[v] += 1;
        self.m += 1;
        true
    }

    /// Removes edge `{u, v}`; returns false if it was absent.
    pub fn remove_edge(&mut self, u: usize, v: usize) -> bool {
        assert!(u < self.n && v < self.n, "vertex out of range");
        assert_ne!(u, v);
        if !self.has_edge(u, v) {
            return false;
        }
        self.bits[u * self.words + v / WORD_BITS] &= !(1u64 << (v % WORD_BITS));
        self.bits[v * self.words + u / WORD_BITS] &= !(1u64 << (u % WORD_BITS));
        self.deg[u] -= 1;
        self.deg[v] -= 1;
        self.m -= 1;
        true
    }

    /// Iterates the neighbors of `v` in increasing order.
    pub fn neighbors(&self, v: usize) -> NeighborIter<'_> {
        NeighborIter {
            row: self.row(v),
            word_idx: 0,
            current: self.row(v).first().copied().unwrap_or(0),
        }
    }

    /// Adjacency lists for all vertices; built once for matvec-heavy callers.
    pub fn adjacency_lists(&self) -> Vec<Vec<u32>> {
        (0..self.n)
            .map(|v| self.neighbors(v).map(|u| u as u32).collect())
            .collect()
    }

    /// Edges `{u, v}` with `u < v` in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            for v in self.neighbors(u) {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Number of common neighbors of `u` and `v` (adjacency of the pair is
    /// not required).
    pub fn codegree(&self, u: usize, v: usize) -> Result<usize, GraphError> {
        if u >= self.n {
            return Err(GraphError::VertexOutOfRange { vertex: u, n: self.n });
        }
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange { vertex: v, n: self.n });
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        Ok(self.codegree_unchecked(u, v))
    }

    #[inline]
    pub(crate) fn codegree_unchecked(&self, u: usize, v: usize) -> usize {
        let (ru, rv) = (self.row(u), self.row(v));
        ru.iter()
            .zip(rv)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// Intersection row `N(u) & N(v)` written into `out`.
    pub(crate) fn intersect_rows(&self, u: usize, v: usize, out: &mut Vec<u64>) {
        out.clear();
        out.extend(self.row(u).iter().zip(self.row(v)).map(|(a, b)| a & b));
    }

    /// Induced subgraph on `sel` (distinct, in-range vertices). Returns the
    /// subgraph and the map from new indices to the original ones.
    pub fn induced(&self, sel: &[usize]) -> Result<(Graph, Vec<usize>), GraphError> {
        let mut seen = vec![false; self.n];
        for &v in sel {
            if v >= self.n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n: self.n });
            }
            if seen[v] {
                return Err(GraphError::DuplicateVertex(v));
            }
            seen[v] = true;
        }
        let mut order: Vec<usize> = sel.to_vec();
        order.sort_unstable();
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let mut g = Graph::empty(order.len());
        for (i, &v) in order.iter().enumerate() {
            for w in self.neighbors(v) {
                if pos[w] != usize::MAX && pos[w] > i {
                    g.add_edge(i, pos[w]);
                }
            }
        }
        Ok((g, order))
    }

    /// Bipartite induced subgraph keeping exactly the edges with one endpoint
    /// in `a` and the other in `b`. Vertices are reindexed `a` first, then
    /// `b`; the index map is returned alongside.
    pub fn bipartite_induced(
        &self,
        a: &[usize],
        b: &[usize],
    ) -> Result<(Graph, Vec<usize>), GraphError> {
        let mut side = vec![0u8; self.n];
        for &v in a {
            if v >= self.n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n: self.n });
            }
            if side[v] != 0 {
                return Err(GraphError::DuplicateVertex(v));
            }
            side[v] = 1;
        }
        for &v in b {
            if v >= self.n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n: self.n });
            }
            if side[v] == 1 {
                return Err(GraphError::OverlappingSets(v));
            }
            if side[v] == 2 {
                return Err(GraphError::DuplicateVertex(v));
            }
            side[v] = 2;
        }
        let mut order: Vec<usize> = a.to_vec();
        order.sort_unstable();
        let mut b_sorted: Vec<usize> = b.to_vec();
        b_sorted.sort_unstable();
        order.extend_from_slice(&b_sorted);
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let mut g = Graph::empty(order.len());
        for (i, &v) in order.iter().enumerate() {
            if side[v] != 1 {
                continue;
            }
            for w in self.neighbors(v) {
                if side[w] == 2 {
                    g.add_edge(i, pos[w]);
                }
            }
        }
        Ok((g, order))
    }

    /// Connected components as sorted vertex lists, ordered by smallest
    /// member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut comp = vec![usize::MAX; self.n];
        let mut out: Vec<Vec<usize>> = Vec::new();
        let mut queue = Vec::new();
        for root in 0..self.n {
            if comp[root] != usize::MAX {
                continue;
            }
            let id = out.len();
            comp[root] = id;
            queue.clear();
            queue.push(root);
            let mut members = vec![root];
            while let Some(v) = queue.pop() {
                for w in self.neighbors(v) {
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        queue.push(w);
                        members.push(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    /// BFS 2-coloring. Returns the coloring on success, or an odd closed walk
    /// witness (a cycle of odd length) on failure.
    pub fn is_bipartite(&self) -> Bipartiteness {
        let mut color = vec![u8::MAX; self.n];
        let mut parent = vec![usize::MAX; self.n];
        let mut queue = std::collections::VecDeque::new();
        for root in 0..self.n {
            if color[root] != u8::MAX {
                continue;
            }
            color[root] = 0;
            queue.push_back(root);
            while let Some(v) = queue.pop_front() {
                for w in self.neighbors(v) {
                    if color[w] == u8::MAX {
                        color[w] = 1 - color[v];
                        parent[w] = v;
                        queue.push_back(w);
                    } else if color[w] == color[v] {
                        return Bipartiteness::OddCycle(odd_cycle_witness(&parent, v, w));
                    }
                }
            }
        }
        Bipartiteness::TwoColoring(color)
    }

    /// Drops isolated vertices; returns the compacted graph and the map from
    /// new indices to original ones.
    pub fn compact(&self) -> (Graph, Vec<usize>) {
        let keep: Vec<usize> = (0..self.n).filter(|&v| self.deg[v] > 0).collect();
        let (g, map) = self.induced(&keep).expect("kept vertices are valid");
        (g, map)
    }

    /// Plain-text edge list with a `n m` header, one `u v` pair per line.
    pub fn to_edge_list(&self) -> String {
        let mut s = format!("{} {}\n", self.n, self.m);
        for (u, v) in self.edges() {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }

    /// Internal consistency check used by tests: symmetry, zero diagonal,
    /// cached degrees and edge count.
    pub fn check_invariants(&self) -> bool {
        let mut total = 0usize;
        for v in 0..self.n {
            if self.has_edge(v, v) {
                return false;
            }
            let pop: usize = self.row(v).iter().map(|w| w.count_ones() as usize).sum();
            if pop != self.deg[v] as usize {
                return false;
            }
            total += pop;
            for w in self.neighbors(v) {
                if !self.has_edge(w, v) {
                    return false;
                }
            }
        }
        total == 2 * self.m
    }
}

fn odd_cycle_witness(parent: &[usize], v: usize, w: usize) -> Vec<usize> {
    // v and w got the same color; walking both to the root and trimming the
    // shared prefix yields an odd cycle.
    let path_to_root = |mut x: usize| {
        let mut p = vec![x];
        while parent[x] != usize::MAX {
            x = parent[x];
            p.push(x);
        }
        p
    };
    let pv = path_to_root(v);
    let pw = path_to_root(w);
    let mut i = pv.len();
    let mut j = pw.len();
    while i > 1 && j > 1 && pv[i - 2] == pw[j - 2] {
        i -= 1;
        j -= 1;
    }
    let mut cycle: Vec<usize> = pv[..i].to_vec();
    let mut tail: Vec<usize> = pw[..j - 1].to_vec();
    tail.reverse();
    cycle.extend(tail);
    cycle
}

/// Outcome of the 2-coloring check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bipartiteness {
    TwoColoring(Vec<u8>),
    OddCycle(Vec<usize>),
}

impl Bipartiteness {
    pub fn is_bipartite(&self) -> bool {
        matches!(self, Bipartiteness::TwoColoring(_))
    }
}

/// Iterator over the set bits of one adjacency row.
pub struct NeighborIter<'a> {
    row: &'a [u64],
    word_idx: usize,
    current: u64,
}

impl Iterator for NeighborIter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        while self.current == 0 {
            self.word_idx += 1;
            if self.word_idx >= self.row.len() {
                return None;
            }
            self.current = self.row[self.word_idx];
        }
        let bit = self.current.trailing_zeros() as usize;
        self.current &= self.current - 1;
        Some(self.word_idx * WORD_BITS + bit)
    }
}

/// Result of parsing edge-list text: the graph plus the original vertex
/// label of each compacted index.
#[derive(Debug, Clone)]
pub struct EdgeListGraph {
    pub graph: Graph,
    /// `labels[i]` is the label the input used for vertex `i`.
    pub labels: Vec<u64>,
}

/// Parses line-oriented edge-list text.
///
/// An optional first data line `n m` declares the vertex count; it is
/// recognized as a header when `m` equals the number of remaining data lines
/// and every index stays below `n`. With a header, indices are kept as
/// written (isolated vertices are representable). Without one, vertices are
/// the labels that appear: dense labels `0..=max` are kept as-is, labels with
/// gaps are compacted and the map back is returned in
/// [`EdgeListGraph::labels`]. Duplicate edges are deduplicated; self-loops
/// are errors. `#` starts a comment.
pub fn from_edge_list(text: &str) -> Result<EdgeListGraph, ParseError> {
    struct DataLine {
        line_no: usize,
        a: u64,
        b: u64,
    }
    let mut data: Vec<DataLine> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        let mut it = line.split_whitespace();
        let (a, b, rest) = (it.next(), it.next(), it.next());
        let (a, b) = match (a, b, rest) {
            (Some(a), Some(b), None) => (a, b),
            _ => {
                return Err(ParseError::Malformed {
                    line: line_no,
                    found: line.to_string(),
                })
            }
        };
        let parse = |s: &str| -> Result<u64, ParseError> {
            s.parse::<u64>().map_err(|_| ParseError::Malformed {
                line: line_no,
                found: line.to_string(),
            })
        };
        data.push(DataLine {
            line_no,
            a: parse(a)?,
            b: parse(b)?,
        });
    }
    if data.is_empty() {
        return Err(ParseError::Empty);
    }

    // Header detection: the first line is `n m` iff m matches the remaining
    // data line count and n >= 2, or it is a lone `n 0` declaring an
    // edgeless graph. A `0 1` or `0 0` first line is an edge (and the
    // latter a self-loop error).
    let header = {
        let first = &data[0];
        let remaining = data.len() - 1;
        if first.b as usize == remaining && (first.a >= 2 || (first.a == 1 && remaining == 0)) {
            Some(first.a as usize)
        } else {
            None
        }
    };

    let edge_lines = if header.is_some() { &data[1..] } else { &data[..] };
    for d in edge_lines {
        if d.a == d.b {
            return Err(ParseError::SelfLoop {
                line: d.line_no,
                v: d.a,
            });
        }
        if let Some(n) = header {
            let bad = if d.a as usize >= n {
                Some(d.a)
            } else if d.b as usize >= n {
                Some(d.b)
            } else {
                None
            };
            if let Some(v) = bad {
                return Err(ParseError::IndexBeyondHeader {
                    line: d.line_no,
                    v,
                    n,
                });
            }
        }
    }

    let (labels, index_of): (Vec<u64>, std::collections::HashMap<u64, usize>) = match header {
        Some(n) => {
            let labels: Vec<u64> = (0..n as u64).collect();
            let map = labels.iter().map(|&l| (l, l as usize)).collect();
            (labels, map)
        }
        None => {
            let mut labels: Vec<u64> = edge_lines
                .iter()
                .flat_map(|d| [d.a, d.b])
                .collect();
            labels.sort_unstable();
            labels.dedup();
            // Dense labels keep their own indices, including any unused ones
            // below the max; gaps trigger compaction.
            let max = *labels.last().unwrap();
            if max as usize == labels.len() - 1 {
                labels = (0..=max).collect();
            }
            let map = labels.iter().enumerate().map(|(i, &l)| (l, i)).collect();
            (labels, map)
        }
    };

    let mut graph = Graph::empty(labels.len());
    for d in edge_lines {
        let u = index_of[&d.a];
        let v = index_of[&d.b];
        graph.add_edge(u, v);
    }
    Ok(EdgeListGraph { graph, labels })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degrees_and_edges() {
        let g = Graph::complete(5);
        assert_eq!(g.m(), 10);
        assert!((0..5).all(|v| g.degree(v) == 4));
        assert!(g.check_invariants());
    }

    #[test]
    fn parse_triangle() {
        let parsed = from_edge_list("0 1\n1 2\n0 2").unwrap();
        assert_eq!(parsed.graph.n(), 3);
        assert_eq!(parsed.graph.m(), 3);
        assert_eq!(parsed.labels, vec![0, 1, 2]);
    }

    #[test]
    fn parse_dedups_duplicate_edges() {
        let parsed = from_edge_list("0 1\n0 1").unwrap();
        assert_eq!(parsed.graph.m(), 1);
        assert_eq!(parsed.graph.n(), 2);
    }

    #[test]
    fn parse_rejects_self_loop() {
        let err = from_edge_list("0 0").unwrap_err();
        assert_eq!(err, ParseError::SelfLoop { line: 1, v: 0 });
    }

    #[test]
    fn parse_rejects_malformed() {
        let err = from_edge_list("0 1\n2 x").unwrap_err();
        assert!(matches!(err, ParseError::Malformed { line: 2, .. }));
        let err = from_edge_list("0 1 2 3").unwrap_err();
        assert!(matches!(err, ParseError::Malformed { line: 1, .. }));
    }

    #[test]
    fn parse_header_allows_isolated_vertices() {
        let parsed = from_edge_list("5 2\n0 1\n2 3").unwrap();
        assert_eq!(parsed.graph.n(), 5);
        assert_eq!(parsed.graph.m(), 2);
        assert_eq!(parsed.labels.len(), 5);
    }

    #[test]
    fn parse_header_rejects_big_index() {
        let err = from_edge_list("3 2\n0 1\n2 5").unwrap_err();
        assert_eq!(err, ParseError::IndexBeyondHeader { line: 3, v: 5, n: 3 });
    }

    #[test]
    fn parse_edgeless_header() {
        let parsed = from_edge_list("5 0").unwrap();
        assert_eq!(parsed.graph.n(), 5);
        assert_eq!(parsed.graph.m(), 0);
        // writer output for degenerate graphs parses back
        let one = Graph::empty(1);
        assert_eq!(from_edge_list(&one.to_edge_list()).unwrap().graph, one);
    }

    #[test]
    fn parse_compacts_gapped_labels() {
        let parsed = from_edge_list("0 7\n7 9").unwrap();
        assert_eq!(parsed.graph.n(), 3);
        assert_eq!(parsed.labels, vec![0, 7, 9]);
        assert!(parsed.graph.has_edge(0, 1));
        assert!(parsed.graph.has_edge(1, 2));
    }

    #[test]
    fn parse_comments_and_blanks() {
        let parsed = from_edge_list("# triangle\n0 1\n\n1 2 # last\n0 2\n").unwrap();
        assert_eq!(parsed.graph.m(), 3);
    }

    #[test]
    fn codegree_cases() {
        let k4 = Graph::complete(4);
        assert_eq!(k4.codegree(0, 1).unwrap(), 2);
        let c5 = Graph::cycle(5);
        assert_eq!(c5.codegree(0, 1).unwrap(), 0);
        let mut k23 = Graph::empty(5);
        for u in 0..2 {
            for v in 2..5 {
                k23.add_edge(u, v);
            }
        }
        assert_eq!(k23.codegree(0, 1).unwrap(), 3);
        assert_eq!(
            k23.codegree(0, 9),
            Err(GraphError::VertexOutOfRange { vertex: 9, n: 5 })
        );
        assert_eq!(k23.codegree(2, 2), Err(GraphError::SelfLoop(2)));
    }

    #[test]
    fn induced_k5_triple_is_triangle() {
        let k5 = Graph::complete(5);
        let (g, map) = k5.induced(&[4, 1, 3]).unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.m(), 3);
        assert_eq!(map, vec![1, 3, 4]);
    }

    #[test]
    fn bipartite_induced_k4_is_c4() {
        let k4 = Graph::complete(4);
        let (g, _) = k4.bipartite_induced(&[0, 1], &[2, 3]).unwrap();
        assert_eq!(g.m(), 4);
        assert!(g.is_bipartite().is_bipartite());
        assert_eq!(
            k4.bipartite_induced(&[0, 1], &[1, 2]),
            Err(GraphError::OverlappingSets(1))
        );
    }

    #[test]
    fn c5_odd_cycle_witness() {
        let c5 = Graph::cycle(5);
        match c5.is_bipartite() {
            Bipartiteness::OddCycle(cyc) => {
                assert_eq!(cyc.len() % 2, 1);
                assert!(cyc.len() >= 3);
                // consecutive witness vertices (cyclically) must be adjacent
                for i in 0..cyc.len() {
                    let a = cyc[i];
                    let b = cyc[(i + 1) % cyc.len()];
                    assert!(c5.has_edge(a, b), "witness step {a}-{b} not an edge");
                }
            }
            Bipartiteness::TwoColoring(_) => panic!("C5 reported bipartite"),
        }
    }

    #[test]
    fn components_partition() {
        let mut g = Graph::empty(7);
        g.add_edge(0, 1);
        g.add_edge(2, 3);
        g.add_edge(3, 4);
        let comps = g.components();
        assert_eq!(comps, vec![vec![0, 1], vec![2, 3, 4], vec![5], vec![6]]);
    }

    #[test]
    fn neighbors_cross_word_boundary() {
        let mut g = Graph::empty(130);
        g.add_edge(0, 63);
        g.add_edge(0, 64);
        g.add_edge(0, 129);
        let nb: Vec<usize> = g.neighbors(0).collect();
        assert_eq!(nb, vec![63, 64, 129]);
        assert_eq!(g.codegree(63, 64).unwrap(), 1);
    }
}
