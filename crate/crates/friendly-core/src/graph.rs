//! Graph substrate shared by every other module: compact undirected simple
//! graphs, vertex sets over a fixed universe, and bipartitions.
//!
//! Vertices are the integers `0..n`. Everything here is immutable after
//! construction, so values can be shared freely across threads; all
//! operations are pure functions of their inputs.

use crate::error::Error;

// ============================================================================
// Graph
// ============================================================================

/// Undirected simple graph with sorted adjacency lists.
///
/// Invariants: no loops, no multi-edges, `u ∈ adj(v) ⇔ v ∈ adj(u)`,
/// neighbor lists strictly ascending, and `Σ deg = 2m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    m: usize,
    adj: Vec<Vec<u32>>,
}

impl Graph {
    /// Builds a graph from an explicit edge list. Edges may arrive in any
    /// order; loops, duplicates and out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: &[(u32, u32)]) -> Result<Self, Error> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u == v {
                return Err(Error::invalid(format!("loop at vertex {u}")));
            }
            if u as usize >= n || v as usize >= n {
                return Err(Error::invalid(format!(
                    "edge ({u}, {v}) out of range for n={n}"
                )));
            }
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        for (v, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if list.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::invalid(format!("duplicate edge at vertex {v}")));
            }
        }
        Ok(Graph {
            n,
            m: edges.len(),
            adj,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn degree(&self, v: u32) -> usize {
        self.adj[v as usize].len()
    }

    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.adj[v as usize]
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        self.adj[u as usize].binary_search(&v).is_ok()
    }

    /// All edges as `(u, v)` with `u < v`, lexicographically sorted.
    pub fn edges(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n as u32 {
            for &v in self.neighbors(u) {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Returns `Some(d)` when every vertex has degree `d`.
    pub fn regularity(&self) -> Option<usize> {
        if self.n == 0 {
            return Some(0);
        }
        let d = self.degree(0);
        if (1..self.n as u32).all(|v| self.degree(v) == d) {
            Some(d)
        } else {
            None
        }
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n as u32).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n as u32).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Parses the edge-list document format: first line `n m`, then `m`
    /// lines `u v` with `0 ≤ u < v < n`, strictly lexicographically
    /// increasing. Line numbers in errors are 1-indexed.
    pub fn parse(text: &str) -> Result<Self, Error> {
        let mut lines: Vec<&str> = text.lines().collect();
        while lines.last().is_some_and(|l| l.trim().is_empty()) {
            lines.pop();
        }
        let header = lines.first().ok_or(Error::Parse {
            line: 1,
            msg: "missing header line \"n m\"".into(),
        })?;
        let (n, m) = parse_pair(header, 1, "header")?;
        let n = n as usize;
        let m = m as usize;
        if lines.len() != m + 1 {
            return Err(Error::Parse {
                line: lines.len().min(m + 1),
                msg: format!("expected {} edge lines, found {}", m, lines.len() - 1),
            });
        }
        let mut edges = Vec::with_capacity(m);
        let mut prev: Option<(u32, u32)> = None;
        for (i, line) in lines[1..].iter().enumerate() {
            let lineno = i + 2;
            let (u, v) = parse_pair(line, lineno, "edge")?;
            if u >= v {
                return Err(Error::Parse {
                    line: lineno,
                    msg: if u == v {
                        format!("loop at vertex {u}")
                    } else {
                        format!("endpoints not ascending: {u} {v}")
                    },
                });
            }
            if v as usize >= n {
                return Err(Error::Parse {
                    line: lineno,
                    msg: format!("vertex {v} out of range for n={n}"),
                });
            }
            if let Some(p) = prev {
                if p == (u, v) {
                    return Err(Error::Parse {
                        line: lineno,
                        msg: format!("duplicate edge {u} {v}"),
                    });
                }
                if p > (u, v) {
                    return Err(Error::Parse {
                        line: lineno,
                        msg: format!("edges not lexicographically increasing at {u} {v}"),
                    });
                }
            }
            prev = Some((u, v));
            edges.push((u, v));
        }
        Graph::from_edges(n, &edges)
    }

    /// Canonical edge-list document; `parse` round-trips it bit-exactly.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.m);
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    /// Edge-complement on the same vertex set.
    pub fn complement(&self) -> Graph {
        let mut edges = Vec::new();
        for u in 0..self.n as u32 {
            for v in u + 1..self.n as u32 {
                if !self.has_edge(u, v) {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edges(self.n, &edges).expect("complement of a simple graph is simple")
    }

    /// The unique maximal k-cohesive set (possibly empty), by iterated
    /// deletion of vertices of degree < k in O(n + m).
    pub fn k_core(&self, k: usize) -> VertexSet {
        let mut deg: Vec<usize> = (0..self.n as u32).map(|v| self.degree(v)).collect();
        let mut removed = vec![false; self.n];
        let mut queue: Vec<u32> = (0..self.n as u32).filter(|&v| deg[v as usize] < k).collect();
        for &v in &queue {
            removed[v as usize] = true;
        }
        while let Some(v) = queue.pop() {
            for &w in self.neighbors(v) {
                let w = w as usize;
                if !removed[w] {
                    deg[w] -= 1;
                    if deg[w] < k {
                        removed[w] = true;
                        queue.push(w as u32);
                    }
                }
            }
        }
        let mut core = VertexSet::empty(self.n);
        for v in 0..self.n as u32 {
            if !removed[v as usize] {
                core.insert(v);
            }
        }
        core
    }

    /// Number of edges with endpoints in different classes of `p`.
    pub fn cut_size(&self, p: &Bipartition) -> usize {
        debug_assert_eq!(p.universe(), self.n);
        self.edges()
            .iter()
            .filter(|&&(u, v)| p.in_a(u) != p.in_a(v))
            .count()
    }

    /// Cycle lengths of a 2-regular graph, ascending. Errors name the first
    /// vertex violating 2-regularity.
    pub fn cycle_lengths(&self) -> Result<Vec<usize>, Error> {
        for v in 0..self.n as u32 {
            if self.degree(v) != 2 {
                return Err(Error::contract(format!(
                    "vertex {v} has degree {}, expected 2-regular input",
                    self.degree(v)
                )));
            }
        }
        let mut seen = vec![false; self.n];
        let mut lengths = Vec::new();
        for start in 0..self.n as u32 {
            if seen[start as usize] {
                continue;
            }
            let mut len = 0usize;
            let mut prev = u32::MAX;
            let mut cur = start;
            loop {
                seen[cur as usize] = true;
                len += 1;
                let nb = self.neighbors(cur);
                let next = if nb[0] == prev { nb[1] } else { nb[0] };
                prev = cur;
                cur = next;
                if cur == start {
                    break;
                }
            }
            lengths.push(len);
        }
        lengths.sort_unstable();
        Ok(lengths)
    }

    /// Induced subgraph on `s`, reindexed to `0..|s|`; the second return
    /// value maps new indices back to original labels.
    pub fn induced(&self, s: &VertexSet) -> (Graph, Vec<u32>) {
        debug_assert_eq!(s.universe(), self.n);
        let labels = s.members();
        let mut index = vec![u32::MAX; self.n];
        for (i, &v) in labels.iter().enumerate() {
            index[v as usize] = i as u32;
        }
        let mut edges = Vec::new();
        for &v in &labels {
            for &w in self.neighbors(v) {
                if v < w && s.contains(w) {
                    edges.push((index[v as usize], index[w as usize]));
                }
            }
        }
        let g = Graph::from_edges(labels.len(), &edges).expect("induced subgraph is simple");
        (g, labels)
    }

    /// Copy of the graph with the listed edges removed. Edges may be given
    /// in either orientation; absent edges are ignored.
    pub fn without_edges(&self, drop: &[(u32, u32)]) -> Graph {
        let mut dropped: Vec<(u32, u32)> = drop
            .iter()
            .map(|&(u, v)| if u < v { (u, v) } else { (v, u) })
            .collect();
        dropped.sort_unstable();
        dropped.dedup();
        let edges: Vec<(u32, u32)> = self
            .edges()
            .into_iter()
            .filter(|e| dropped.binary_search(e).is_err())
            .collect();
        Graph::from_edges(self.n, &edges).expect("edge removal preserves simplicity")
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0u32];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in self.neighbors(v) {
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }
}

fn parse_pair(line: &str, lineno: usize, what: &str) -> Result<(u32, u32), Error> {
    let mut it = line.split_whitespace();
    let a = it.next().ok_or_else(|| Error::Parse {
        line: lineno,
        msg: format!("empty {what} line"),
    })?;
    let b = it.next().ok_or_else(|| Error::Parse {
        line: lineno,
        msg: format!("{what} line needs two integers"),
    })?;
    if it.next().is_some() {
        return Err(Error::Parse {
            line: lineno,
            msg: format!("{what} line has trailing tokens"),
        });
    }
    let a = a.parse().map_err(|_| Error::Parse {
        line: lineno,
        msg: format!("not an integer: {a}"),
    })?;
    let b = b.parse().map_err(|_| Error::Parse {
        line: lineno,
        msg: format!("not an integer: {b}"),
    })?;
    Ok((a, b))
}

// ============================================================================
// VertexSet
// ============================================================================

/// Subset of the vertices `0..universe`, stored as a bitset. Membership and
/// intersection-size queries are cheap; iteration is ascending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexSet {
    universe: usize,
    blocks: Vec<u64>,
}

impl VertexSet {
    pub fn empty(universe: usize) -> Self {
        VertexSet {
            universe,
            blocks: vec![0; universe.div_ceil(64)],
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = Self::empty(universe);
        for v in 0..universe as u32 {
            s.insert(v);
        }
        s
    }

    pub fn from_members(
        universe: usize,
        members: impl IntoIterator<Item = u32>,
    ) -> Result<Self, Error> {
        let mut s = Self::empty(universe);
        for v in members {
            if v as usize >= universe {
                return Err(Error::contract(format!(
                    "vertex {v} out of range for universe {universe}"
                )));
            }
            s.insert(v);
        }
        Ok(s)
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn len(&self) -> usize {
        self.blocks.iter().map(|b| b.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.iter().all(|&b| b == 0)
    }

    pub fn contains(&self, v: u32) -> bool {
        let v = v as usize;
        debug_assert!(v < self.universe);
        self.blocks[v / 64] >> (v % 64) & 1 == 1
    }

    pub fn insert(&mut self, v: u32) {
        let v = v as usize;
        debug_assert!(v < self.universe);
        self.blocks[v / 64] |= 1 << (v % 64);
    }

    pub fn remove(&mut self, v: u32) {
        let v = v as usize;
        debug_assert!(v < self.universe);
        self.blocks[v / 64] &= !(1 << (v % 64));
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        (0..self.universe as u32).filter(move |&v| self.contains(v))
    }

    /// Ascending member list.
    pub fn members(&self) -> Vec<u32> {
        self.iter().collect()
    }

    pub fn intersection_size(&self, other: &VertexSet) -> usize {
        debug_assert_eq!(self.universe, other.universe);
        self.blocks
            .iter()
            .zip(&other.blocks)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.intersection_size(other) == 0
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        debug_assert_eq!(self.universe, other.universe);
        VertexSet {
            universe: self.universe,
            blocks: self
                .blocks
                .iter()
                .zip(&other.blocks)
                .map(|(a, b)| a | b)
                .collect(),
        }
    }

    pub fn complement(&self) -> VertexSet {
        let mut s = VertexSet {
            universe: self.universe,
            blocks: self.blocks.iter().map(|b| !b).collect(),
        };
        // clear padding bits past the universe
        for v in self.universe..s.blocks.len() * 64 {
            s.blocks[v / 64] &= !(1 << (v % 64));
        }
        s
    }
}

// ============================================================================
// Bipartition
// ============================================================================

/// Ordered pair of disjoint vertex sets covering the whole universe.
/// Classes may be empty (the trivial partition that local switching can
/// end in); verification of internality rejects empty classes separately.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bipartition {
    a: VertexSet,
    b: VertexSet,
}

impl Bipartition {
    pub fn new(a: VertexSet, b: VertexSet) -> Result<Self, Error> {
        if a.universe() != b.universe() {
            return Err(Error::contract("bipartition classes over different universes"));
        }
        if !a.is_disjoint(&b) {
            return Err(Error::contract("bipartition classes overlap"));
        }
        if a.len() + b.len() != a.universe() {
            return Err(Error::contract("bipartition classes do not cover all vertices"));
        }
        Ok(Bipartition { a, b })
    }

    /// Builds the partition `(a, V \ a)`.
    pub fn from_class_a(a: VertexSet) -> Self {
        let b = a.complement();
        Bipartition { a, b }
    }

    pub fn a(&self) -> &VertexSet {
        &self.a
    }

    pub fn b(&self) -> &VertexSet {
        &self.b
    }

    pub fn universe(&self) -> usize {
        self.a.universe()
    }

    pub fn in_a(&self, v: u32) -> bool {
        self.a.contains(v)
    }

    /// Both classes nonempty.
    pub fn is_nontrivial(&self) -> bool {
        !self.a.is_empty() && !self.b.is_empty()
    }

    /// Swapped-class copy.
    pub fn flipped(&self) -> Bipartition {
        Bipartition {
            a: self.b.clone(),
            b: self.a.clone(),
        }
    }

    /// Parses the partition file format: two lines of space-separated
    /// ascending vertex ids; line 2 may be `*` meaning "complement of
    /// line 1".
    pub fn parse(text: &str, n: usize) -> Result<Self, Error> {
        let mut lines = text.lines();
        let l1 = lines.next().ok_or(Error::Parse {
            line: 1,
            msg: "missing first class line".into(),
        })?;
        let l2 = lines.next().ok_or(Error::Parse {
            line: 2,
            msg: "missing second class line".into(),
        })?;
        let a = parse_set_line(l1, 1, n)?;
        if l2.trim() == "*" {
            return Ok(Bipartition::from_class_a(a));
        }
        let b = parse_set_line(l2, 2, n)?;
        Bipartition::new(a, b)
    }

    pub fn to_text(&self) -> String {
        format!(
            "{}\n{}\n",
            format_set_line(&self.a),
            format_set_line(&self.b)
        )
    }
}

pub(crate) fn parse_set_line(line: &str, lineno: usize, n: usize) -> Result<VertexSet, Error> {
    let mut prev: Option<u32> = None;
    let mut s = VertexSet::empty(n);
    for tok in line.split_whitespace() {
        let v: u32 = tok.parse().map_err(|_| Error::Parse {
            line: lineno,
            msg: format!("not a vertex id: {tok}"),
        })?;
        if v as usize >= n {
            return Err(Error::Parse {
                line: lineno,
                msg: format!("vertex {v} out of range for n={n}"),
            });
        }
        if prev.is_some_and(|p| p >= v) {
            return Err(Error::Parse {
                line: lineno,
                msg: format!("vertex ids not strictly ascending at {v}"),
            });
        }
        prev = Some(v);
        s.insert(v);
    }
    Ok(s)
}

pub(crate) fn format_set_line(s: &VertexSet) -> String {
    s.members()
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

// ============================================================================
// Tests
// ============================================================================

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    pub(crate) fn k4() -> Graph {
        Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    fn random_graph(rng: &mut StdRng, n: usize, p: f64) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n as u32 {
            for v in u + 1..n as u32 {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn parse_k4() {
        let g = Graph::parse("4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3").unwrap();
        assert_eq!(g, k4());
        assert_eq!(g.regularity(), Some(3));
    }

    #[test]
    fn parse_isolated_vertices() {
        let g = Graph::parse("3 0").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.m(), 0);
    }

    #[test]
    fn parse_rejects_descending_endpoints() {
        let err = Graph::parse("2 1\n1 0").unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("line 2"), "{msg}");
        assert!(msg.contains("ascending"), "{msg}");
    }

    #[test]
    fn parse_rejects_malformations() {
        assert!(Graph::parse("2 1\n0 0").is_err()); // loop
        assert!(Graph::parse("3 2\n0 1\n0 1").is_err()); // duplicate
        assert!(Graph::parse("2 1\n0 5").is_err()); // out of range
        assert!(Graph::parse("3 2\n0 2\n0 1").is_err()); // out of order
        assert!(Graph::parse("3 2\n0 1").is_err()); // wrong count
        assert!(Graph::parse("3 x\n").is_err());
    }

    #[test]
    fn save_golden_k4() {
        assert_eq!(k4().to_text(), "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
    }

    #[test]
    fn save_empty_graph() {
        let g = Graph::from_edges(0, &[]).unwrap();
        assert_eq!(g.to_text(), "0 0\n");
        assert_eq!(Graph::parse(&g.to_text()).unwrap(), g);
    }

    #[test]
    fn roundtrip_random_graphs() {
        let mut rng = StdRng::seed_from_u64(11);
        for _ in 0..100 {
            let n = rng.gen_range(0..30);
            let g = random_graph(&mut rng, n, 0.3);
            assert_eq!(Graph::parse(&g.to_text()).unwrap(), g);
        }
    }

    #[test]
    fn k_core_examples() {
        assert_eq!(k4().k_core(3).len(), 4);
        let path4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(path4.k_core(2).is_empty());
    }

    #[test]
    fn k_core_nonempty_on_dense_graphs() {
        // Graphs on >= 2n - 2 edges have 3-cohesive sets.
        let mut rng = StdRng::seed_from_u64(5);
        for _ in 0..50 {
            let n = rng.gen_range(5..25);
            let g = random_graph(&mut rng, n, 0.9);
            if g.m() >= 2 * n - 2 {
                assert!(!g.k_core(3).is_empty(), "n={n} m={}", g.m());
            }
        }
    }

    #[test]
    fn k_core_fixed_point_and_order_independence() {
        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..200 {
            let n = rng.gen_range(1..25);
            let g = random_graph(&mut rng, n, 0.35);
            let k = rng.gen_range(1..5);
            let core = g.k_core(k);
            for v in core.iter() {
                let inside = g.neighbors(v).iter().filter(|&&w| core.contains(w)).count();
                assert!(inside >= k);
            }
            // recomputing on the induced subgraph is a fixed point
            let (h, labels) = g.induced(&core);
            let again = h.k_core(k);
            assert_eq!(again.len(), core.len());
            // independent peeling order: remove highest-index deficient vertex first
            let mut alive: Vec<bool> = vec![true; n];
            loop {
                let mut removed_any = false;
                for v in (0..n as u32).rev() {
                    if alive[v as usize] {
                        let d = g
                            .neighbors(v)
                            .iter()
                            .filter(|&&w| alive[w as usize])
                            .count();
                        if d < k {
                            alive[v as usize] = false;
                            removed_any = true;
                        }
                    }
                }
                if !removed_any {
                    break;
                }
            }
            let slow: Vec<u32> = (0..n as u32).filter(|&v| alive[v as usize]).collect();
            assert_eq!(slow, core.members());
            let _ = labels;
        }
    }

    #[test]
    fn complement_examples() {
        let empty4 = k4().complement();
        assert_eq!(empty4.m(), 0);
        let two_triangles =
            Graph::from_edges(6, &[(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)]).unwrap();
        let c = two_triangles.complement();
        // direct enumeration: across-edges only, i.e. K_{3,3}
        assert_eq!(c.m(), 9);
        for u in 0..3u32 {
            for v in 3..6u32 {
                assert!(c.has_edge(u, v));
            }
        }
    }

    #[test]
    fn complement_is_involution() {
        let mut rng = StdRng::seed_from_u64(3);
        for _ in 0..30 {
            let n = rng.gen_range(0..15);
            let g = random_graph(&mut rng, n, 0.5);
            assert_eq!(g.complement().complement(), g);
        }
    }

    #[test]
    fn cut_size_counts_crossing_edges() {
        // K_{5,5} with the sides as classes: all 25 edges cross.
        let mut edges = Vec::new();
        for u in 0..5u32 {
            for v in 5..10u32 {
                edges.push((u, v));
            }
        }
        let g = Graph::from_edges(10, &edges).unwrap();
        let a = VertexSet::from_members(10, 0..5).unwrap();
        let p = Bipartition::from_class_a(a);
        assert_eq!(g.cut_size(&p), 25);
        // trivial partition: cut 0
        let trivial = Bipartition::from_class_a(VertexSet::full(10));
        assert_eq!(g.cut_size(&trivial), 0);
    }

    #[test]
    fn cut_plus_inside_edges_is_m() {
        let mut rng = StdRng::seed_from_u64(9);
        for _ in 0..50 {
            let n = rng.gen_range(2..20);
            let g = random_graph(&mut rng, n, 0.4);
            let mut a = VertexSet::empty(n);
            for v in 0..n as u32 {
                if rng.gen_bool(0.5) {
                    a.insert(v);
                }
            }
            let p = Bipartition::from_class_a(a);
            let inside = |s: &VertexSet| {
                g.edges()
                    .iter()
                    .filter(|&&(u, v)| s.contains(u) && s.contains(v))
                    .count()
            };
            assert_eq!(g.cut_size(&p) + inside(p.a()) + inside(p.b()), g.m());
        }
    }

    #[test]
    fn cycle_lengths_examples() {
        let c6 = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5)]).unwrap();
        assert_eq!(c6.cycle_lengths().unwrap(), vec![6]);
        let c3c5 = Graph::from_edges(
            8,
            &[
                (0, 1),
                (0, 2),
                (1, 2),
                (3, 4),
                (4, 5),
                (5, 6),
                (6, 7),
                (3, 7),
            ],
        )
        .unwrap();
        assert_eq!(c3c5.cycle_lengths().unwrap(), vec![3, 5]);
        let path = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let err = path.cycle_lengths().unwrap_err().to_string();
        assert!(err.contains("vertex 0"), "{err}");
    }

    #[test]
    fn bipartition_contract_checks() {
        let a = VertexSet::from_members(4, [0, 1]).unwrap();
        let overlapping = VertexSet::from_members(4, [1, 2, 3]).unwrap();
        assert!(Bipartition::new(a.clone(), overlapping).is_err());
        let short = VertexSet::from_members(4, [2]).unwrap();
        assert!(Bipartition::new(a.clone(), short).is_err());
        let ok = VertexSet::from_members(4, [2, 3]).unwrap();
        assert!(Bipartition::new(a, ok).is_ok());
    }

    #[test]
    fn partition_file_roundtrip_and_star() {
        let a = VertexSet::from_members(6, [0, 2, 4]).unwrap();
        let p = Bipartition::from_class_a(a);
        let text = p.to_text();
        assert_eq!(text, "0 2 4\n1 3 5\n");
        assert_eq!(Bipartition::parse(&text, 6).unwrap(), p);
        assert_eq!(Bipartition::parse("0 2 4\n*\n", 6).unwrap(), p);
        assert!(Bipartition::parse("0 2 2\n*\n", 6).is_err());
    }

    #[test]
    fn vertex_set_queries() {
        let s = VertexSet::from_members(130, [0, 63, 64, 129]).unwrap();
        assert_eq!(s.len(), 4);
        assert!(s.contains(63) && s.contains(64));
        let t = VertexSet::from_members(130, [63, 100]).unwrap();
        assert_eq!(s.intersection_size(&t), 1);
        assert_eq!(s.complement().len(), 126);
        assert!(!s.complement().contains(129));
        assert_eq!(s.members(), vec![0, 63, 64, 129]);
    }
}
