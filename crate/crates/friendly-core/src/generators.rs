//! Constructors for every graph family the rest of the crate studies:
//! circulants, Abelian Cayley graphs, Paley graphs, complete and complete
//! bipartite graphs, the switching-hard sharpness families, Gale-Ryser
//! bipartite realizations, and seeded random regular graphs.

use crate::error::Error;
use crate::graph::{Bipartition, Graph, VertexSet};
use crate::group::{AbelianGroup, Elem};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

// ============================================================================
// Cayley specs
// ============================================================================

/// A finite Abelian group together with a symmetric, identity-free
/// connection set. The Cayley graph it defines is `|S|`-regular.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CayleySpec {
    pub group: AbelianGroup,
    pub connection: Vec<Elem>,
}

impl CayleySpec {
    pub fn new(group: AbelianGroup, connection: Vec<Elem>) -> Result<Self, Error> {
        for s in &connection {
            if s.len() != group.rank() {
                return Err(Error::invalid(format!(
                    "connection element {:?} has wrong rank for group {}",
                    s,
                    group.name()
                )));
            }
            if s.iter().zip(group.factors()).any(|(a, d)| a >= d) {
                return Err(Error::invalid(format!(
                    "connection element {:?} out of range for group {}",
                    s,
                    group.name()
                )));
            }
            if group.is_zero(s) {
                return Err(Error::invalid("connection set contains the identity"));
            }
        }
        let mut sorted: Vec<Elem> = connection.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::invalid("connection set has duplicate elements"));
        }
        for s in &connection {
            let neg = group.neg(s);
            if sorted.binary_search(&neg).is_err() {
                return Err(Error::invalid(format!(
                    "connection set not symmetric: missing inverse of {}",
                    group.format_elem(s)
                )));
            }
        }
        Ok(CayleySpec { group, connection })
    }

    pub fn valency(&self) -> usize {
        self.connection.len()
    }

    /// True when the connection set generates the whole group, i.e. the
    /// Cayley graph is connected.
    pub fn generates(&self) -> bool {
        self.group.span(&self.connection).len() == self.group.order()
    }

    /// Connection set rendered as colon-tuples, e.g. "1:0 0:1 0:5".
    pub fn connection_text(&self) -> String {
        let mut parts: Vec<Elem> = self.connection.clone();
        parts.sort_unstable();
        parts
            .iter()
            .map(|e| self.group.format_elem(e))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Cayley graph on the spec's group: vertices are group elements in
/// mixed-radix order, `x` adjacent to `x + s` for each `s` in the
/// connection set.
pub fn gen_abelian_cayley(spec: &CayleySpec) -> Result<Graph, Error> {
    let g = &spec.group;
    let n = g.order();
    let mut edges = Vec::new();
    for i in 0..n {
        let x = g.elem_of(i);
        for s in &spec.connection {
            let j = g.index_of(&g.add(&x, s));
            if i < j {
                edges.push((i as u32, j as u32));
            }
        }
    }
    edges.sort_unstable();
    edges.dedup();
    Graph::from_edges(n, &edges)
}

/// Circulant graph: vertex `i` adjacent to `i ± o (mod n)` for each offset.
pub fn gen_circulant(n: usize, offsets: &[usize]) -> Result<Graph, Error> {
    if n < 3 {
        return Err(Error::invalid(format!("circulant needs n >= 3, got {n}")));
    }
    let mut seen = vec![false; n / 2 + 1];
    for &o in offsets {
        if o == 0 || o > n / 2 {
            return Err(Error::invalid(format!(
                "offset {o} out of range 1..={} for n={n}",
                n / 2
            )));
        }
        if seen[o] {
            return Err(Error::invalid(format!("duplicate offset {o}")));
        }
        seen[o] = true;
    }
    let mut edges = Vec::new();
    for i in 0..n {
        for &o in offsets {
            let j = (i + o) % n;
            let (u, v) = if i < j { (i, j) } else { (j, i) };
            edges.push((u as u32, v as u32));
        }
    }
    edges.sort_unstable();
    edges.dedup();
    Graph::from_edges(n, &edges)
}

/// Standard families used as references and counterexamples.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StandardKind {
    Complete,
    CompleteBipartite,
}

/// `K_size` or `K_{size,size}`.
pub fn gen_standard(kind: StandardKind, size: usize) -> Result<Graph, Error> {
    if size < 1 {
        return Err(Error::invalid("size must be >= 1"));
    }
    let mut edges = Vec::new();
    match kind {
        StandardKind::Complete => {
            for u in 0..size as u32 {
                for v in u + 1..size as u32 {
                    edges.push((u, v));
                }
            }
            Graph::from_edges(size, &edges)
        }
        StandardKind::CompleteBipartite => {
            for u in 0..size as u32 {
                for v in 0..size as u32 {
                    edges.push((u, size as u32 + v));
                }
            }
            Graph::from_edges(2 * size, &edges)
        }
    }
}

// ============================================================================
// Paley graphs over GF(q)
// ============================================================================

/// Paley graph on GF(q), q a prime power with q ≡ 1 (mod 4): field
/// elements are vertices, `x ~ y` iff `x - y` is a nonzero square.
pub fn gen_paley(q: usize) -> Result<Graph, Error> {
    let (p, e) = prime_power(q)
        .ok_or_else(|| Error::invalid(format!("{q} is not a prime power")))?;
    if q % 4 != 1 {
        return Err(Error::invalid(format!(
            "{q} ≢ 1 (mod 4): the quadratic-difference relation is not symmetric"
        )));
    }
    let field = FiniteField::new(p, e);
    let mut is_square = vec![false; q];
    for x in 1..q {
        is_square[field.mul(x, x)] = true;
    }
    let mut edges = Vec::new();
    for x in 0..q {
        for y in x + 1..q {
            if is_square[field.sub(y, x)] {
                edges.push((x as u32, y as u32));
            }
        }
    }
    Graph::from_edges(q, &edges)
}

/// Returns `(p, e)` with `q = p^e`, `p` prime, or None.
pub fn prime_power(q: usize) -> Option<(usize, usize)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= q {
        if q % p == 0 {
            let mut rest = q;
            let mut e = 0;
            while rest % p == 0 {
                rest /= p;
                e += 1;
            }
            return if rest == 1 { Some((p, e)) } else { None };
        }
        p += 1;
    }
    Some((q, 1))
}

/// GF(p^e) built on the lexicographically smallest monic irreducible
/// polynomial of degree e over GF(p). Elements are indexed by their
/// coefficient vectors read as base-p digits (constant term least
/// significant).
pub struct FiniteField {
    p: usize,
    e: usize,
    /// Coefficients c_0..c_{e-1} of the modulus x^e + Σ c_i x^i.
    modulus: Vec<usize>,
}

impl FiniteField {
    pub fn new(p: usize, e: usize) -> Self {
        let modulus = if e == 1 {
            vec![0]
        } else {
            smallest_irreducible(p, e)
        };
        FiniteField { p, e, modulus }
    }

    pub fn order(&self) -> usize {
        self.p.pow(self.e as u32)
    }

    fn digits(&self, x: usize) -> Vec<usize> {
        let mut d = vec![0; self.e];
        let mut x = x;
        for item in d.iter_mut() {
            *item = x % self.p;
            x /= self.p;
        }
        d
    }

    fn index(&self, digits: &[usize]) -> usize {
        digits.iter().rev().fold(0, |acc, &c| acc * self.p + c)
    }

    pub fn add(&self, x: usize, y: usize) -> usize {
        let (a, b) = (self.digits(x), self.digits(y));
        let sum: Vec<usize> = a.iter().zip(&b).map(|(u, v)| (u + v) % self.p).collect();
        self.index(&sum)
    }

    pub fn sub(&self, x: usize, y: usize) -> usize {
        let (a, b) = (self.digits(x), self.digits(y));
        let diff: Vec<usize> = a
            .iter()
            .zip(&b)
            .map(|(u, v)| (u + self.p - v) % self.p)
            .collect();
        self.index(&diff)
    }

    pub fn mul(&self, x: usize, y: usize) -> usize {
        let (a, b) = (self.digits(x), self.digits(y));
        // schoolbook product, then reduction by the monic modulus
        let mut prod = vec![0usize; 2 * self.e];
        for (i, &ai) in a.iter().enumerate() {
            for (j, &bj) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + ai * bj) % self.p;
            }
        }
        for i in (self.e..2 * self.e).rev() {
            let c = prod[i];
            if c != 0 {
                prod[i] = 0;
                for (k, &mk) in self.modulus.iter().enumerate() {
                    let idx = i - self.e + k;
                    prod[idx] = (prod[idx] + self.p * self.p - c * mk % (self.p * self.p)) % self.p;
                }
            }
        }
        self.index(&prod[..self.e])
    }
}

/// Exhaustive search for the smallest monic irreducible polynomial of
/// degree e over GF(p), ordered by coefficient vectors read
/// most-significant-first. Returns the non-leading coefficients.
fn smallest_irreducible(p: usize, e: usize) -> Vec<usize> {
    let total = p.pow(e as u32);
    'candidate: for code in 0..total {
        let mut coeffs = vec![0usize; e + 1];
        let mut c = code;
        for item in coeffs.iter_mut().take(e) {
            *item = c % p;
            c /= p;
        }
        coeffs[e] = 1;
        // trial division by every monic polynomial of degree 1..=e/2
        for d in 1..=e / 2 {
            let divisors = p.pow(d as u32);
            for dcode in 0..divisors {
                let mut div = vec![0usize; d + 1];
                let mut c = dcode;
                for item in div.iter_mut().take(d) {
                    *item = c % p;
                    c /= p;
                }
                div[d] = 1;
                if poly_divides(&div, &coeffs, p) {
                    continue 'candidate;
                }
            }
        }
        return coeffs[..e].to_vec();
    }
    unreachable!("irreducible polynomials of every degree exist over GF(p)")
}

fn poly_divides(div: &[usize], poly: &[usize], p: usize) -> bool {
    let mut rem: Vec<usize> = poly.to_vec();
    let d = div.len() - 1;
    while rem.len() > d {
        let lead = *rem.last().unwrap();
        if lead != 0 {
            let shift = rem.len() - 1 - d;
            for (k, &dk) in div.iter().enumerate() {
                rem[shift + k] = (rem[shift + k] + p * p - lead * dk % (p * p)) % p;
            }
        }
        rem.pop();
    }
    rem.iter().all(|&c| c == 0)
}

// ============================================================================
// Gale-Ryser completion
// ============================================================================

/// Required extra degrees on the two sides of a bipartite completion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeficiencySequence {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

impl DeficiencySequence {
    pub fn new(left: Vec<usize>, right: Vec<usize>) -> Result<Self, Error> {
        let (ls, rs) = (left.iter().sum::<usize>(), right.iter().sum::<usize>());
        if ls != rs {
            return Err(Error::Realization(format!(
                "deficiency sums differ: left {ls}, right {rs}"
            )));
        }
        if left.iter().any(|&d| d > right.len()) || right.iter().any(|&d| d > left.len()) {
            return Err(Error::Realization(
                "a deficiency exceeds the opposite side's length".into(),
            ));
        }
        Ok(DeficiencySequence { left, right })
    }
}

/// Classical greedy bipartite realization: repeatedly satisfy the largest
/// remaining left deficiency from the largest remaining right deficiencies,
/// re-sorting each round. Returns edges `(left_index, right_index)`.
pub fn gale_ryser_complete(seq: &DeficiencySequence) -> Result<Vec<(usize, usize)>, Error> {
    gale_ryser_avoiding(seq, &[])
}

/// Same realization, but never using a forbidden pair (needed when
/// completing a graph that already carries a few cross edges). The greedy
/// can corner itself around forbidden pairs, so this runs a small feasible
/// flow instead; failure reports the deficiency sequence.
pub fn gale_ryser_avoiding(
    seq: &DeficiencySequence,
    forbidden: &[(usize, usize)],
) -> Result<Vec<(usize, usize)>, Error> {
    if forbidden.is_empty() {
        return greedy_realize(seq);
    }
    flow_realize(seq, forbidden).ok_or_else(|| {
        Error::Realization(format!(
            "no completion avoiding {forbidden:?}: deficiency sequence {:?} / {:?}",
            seq.left, seq.right
        ))
    })
}

fn greedy_realize(seq: &DeficiencySequence) -> Result<Vec<(usize, usize)>, Error> {
    let mut left = seq.left.clone();
    let mut right = seq.right.clone();
    let mut edges = Vec::new();
    loop {
        let Some(l) = (0..left.len()).filter(|&i| left[i] > 0).max_by_key(|&i| left[i]) else {
            break;
        };
        let need = left[l];
        // right partners by remaining deficiency, largest first, index tie-break
        let mut order: Vec<usize> = (0..right.len()).filter(|&j| right[j] > 0).collect();
        order.sort_by_key(|&j| (std::cmp::Reverse(right[j]), j));
        if order.len() < need {
            return Err(Error::Realization(format!(
                "cannot satisfy left vertex {l} needing {need}: deficiency sequence {:?} / {:?}",
                seq.left, seq.right
            )));
        }
        for &j in order.iter().take(need) {
            edges.push((l, j));
            right[j] -= 1;
        }
        left[l] = 0;
    }
    Ok(edges)
}

/// Feasible flow for the bipartite realization with forbidden pairs:
/// source -> left (deficiency), left -> right (unit, allowed pairs only),
/// right -> sink (deficiency). Saturating the source means realizable.
fn flow_realize(
    seq: &DeficiencySequence,
    forbidden: &[(usize, usize)],
) -> Option<Vec<(usize, usize)>> {
    let (nl, nr) = (seq.left.len(), seq.right.len());
    let nodes = nl + nr + 2;
    let (source, sink) = (nl + nr, nl + nr + 1);
    let mut cap = vec![vec![0i64; nodes]; nodes];
    for (i, &d) in seq.left.iter().enumerate() {
        cap[source][i] = d as i64;
    }
    for (j, &d) in seq.right.iter().enumerate() {
        cap[nl + j][sink] = d as i64;
    }
    for i in 0..nl {
        for j in 0..nr {
            if !forbidden.contains(&(i, j)) {
                cap[i][nl + j] = 1;
            }
        }
    }
    let target: i64 = seq.left.iter().sum::<usize>() as i64;
    let mut flow = 0i64;
    loop {
        // BFS augmenting path
        let mut parent = vec![usize::MAX; nodes];
        parent[source] = source;
        let mut queue = std::collections::VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            for v in 0..nodes {
                if parent[v] == usize::MAX && cap[u][v] > 0 {
                    parent[v] = u;
                    queue.push_back(v);
                }
            }
        }
        if parent[sink] == usize::MAX {
            break;
        }
        let mut bottleneck = i64::MAX;
        let mut v = sink;
        while v != source {
            let u = parent[v];
            bottleneck = bottleneck.min(cap[u][v]);
            v = u;
        }
        let mut v = sink;
        while v != source {
            let u = parent[v];
            cap[u][v] -= bottleneck;
            cap[v][u] += bottleneck;
            v = u;
        }
        flow += bottleneck;
    }
    if flow != target {
        return None;
    }
    let mut edges = Vec::new();
    for i in 0..nl {
        for j in 0..nr {
            // a saturated unit arc shows up as residual capacity backwards
            if !forbidden.contains(&(i, j)) && cap[i][nl + j] == 0 {
                edges.push((i, j));
            }
        }
    }
    Some(edges)
}

// ============================================================================
// Switching-hard sharpness families
// ============================================================================

/// A regular graph plus a bisection from which lowest-index bad-vertex
/// switching runs all the way down to a trivial partition.
///
/// Valency 5 uses the explicit two-track construction with six extra cross
/// edges (requires `half >= 8`, even). Other valencies use the general
/// template: within-class distance-≤k edges (k-1 for even valency), the two
/// corner cross edges, and a Gale-Ryser completion placed only between the
/// classes.
pub fn gen_switching_hard(valency: usize, half: usize) -> Result<(Graph, Bipartition), Error> {
    if valency < 3 {
        return Err(Error::invalid("valency must be >= 3"));
    }
    let h = half;
    let graph = if valency == 5 {
        if h < 8 || h % 2 != 0 {
            return Err(Error::invalid(format!(
                "valency-5 construction needs even half >= 8, got {h}"
            )));
        }
        let u = |i: usize| (i - 1) as u32; // 1-indexed track labels
        let w = |i: usize| (h + i - 1) as u32;
        let mut edges = Vec::new();
        for i in 1..h {
            edges.push((u(i), u(i + 1)));
            edges.push((w(i), w(i + 1)));
        }
        for i in 1..h - 1 {
            edges.push((u(i), u(i + 2)));
            edges.push((w(i), w(i + 2)));
        }
        for i in 1..=h {
            edges.push((u(i), w(i)));
        }
        edges.push((u(1), w(2)));
        edges.push((u(1), w(h)));
        edges.push((u(2), w(1)));
        edges.push((u(h - 1), w(h)));
        edges.push((u(h), w(1)));
        edges.push((u(h), w(h - 1)));
        normalize_edges(&mut edges);
        Graph::from_edges(2 * h, &edges)?
    } else {
        let k = valency / 2;
        let reach = if valency % 2 == 1 { k } else { k - 1 };
        if h < 2 * k {
            return Err(Error::invalid(format!(
                "valency-{valency} template needs half >= {}, got {h}",
                2 * k
            )));
        }
        let mut edges = Vec::new();
        for i in 0..h {
            for j in i + 1..h.min(i + reach + 1) {
                edges.push((i as u32, j as u32));
                edges.push(((h + i) as u32, (h + j) as u32));
            }
        }
        // corner cross edges u_1 w_n and u_n w_1
        let corners = [(0u32, (2 * h - 1) as u32), ((h - 1) as u32, h as u32)];
        edges.extend_from_slice(&corners);
        // complete to regularity between the classes
        let partial = Graph::from_edges(2 * h, &{
            let mut e = edges.clone();
            normalize_edges(&mut e);
            e
        })?;
        let deficiency = |v: u32| valency - partial.degree(v);
        let left: Vec<usize> = (0..h as u32).map(deficiency).collect();
        let right: Vec<usize> = (h as u32..2 * h as u32).map(deficiency).collect();
        let seq = DeficiencySequence::new(left, right)?;
        let forbidden = [(0usize, h - 1), (h - 1, 0usize)];
        let completion = gale_ryser_avoiding(&seq, &forbidden)?;
        for (l, r) in completion {
            edges.push((l as u32, (h + r) as u32));
        }
        normalize_edges(&mut edges);
        Graph::from_edges(2 * h, &edges)?
    };
    debug_assert_eq!(graph.regularity(), Some(valency));
    let a = VertexSet::from_members(2 * h, 0..h as u32)?;
    Ok((graph, Bipartition::from_class_a(a)))
}

fn normalize_edges(edges: &mut Vec<(u32, u32)>) {
    for e in edges.iter_mut() {
        if e.0 > e.1 {
            *e = (e.1, e.0);
        }
    }
    edges.sort_unstable();
    edges.dedup();
}

// ============================================================================
// Random regular graphs
// ============================================================================

/// Seeded random d-regular simple graph via the pairing model: stubs are
/// matched uniformly at random, loops and multi-edges are rejected at draw
/// time, and a stuck pairing restarts. Deterministic per seed.
pub fn gen_random_regular(n: usize, d: usize, seed: u64) -> Result<Graph, Error> {
    if n * d % 2 != 0 {
        return Err(Error::invalid(format!(
            "n*d must be even, got n={n}, d={d}"
        )));
    }
    if d >= n && !(n == 0 && d == 0) {
        return Err(Error::invalid(format!("need d < n, got n={n}, d={d}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    const MAX_ATTEMPTS: usize = 1000;
    'attempt: for _ in 0..MAX_ATTEMPTS {
        let mut stubs: Vec<u32> = (0..n as u32).flat_map(|v| std::iter::repeat_n(v, d)).collect();
        let mut adj: Vec<Vec<u32>> = vec![Vec::new(); n];
        let mut edges: Vec<(u32, u32)> = Vec::with_capacity(n * d / 2);
        let mut rejects = 0usize;
        while stubs.len() >= 2 {
            let i = rng.gen_range(0..stubs.len());
            let mut j = rng.gen_range(0..stubs.len() - 1);
            if j >= i {
                j += 1;
            }
            let (u, v) = (stubs[i], stubs[j]);
            if u != v && !adj[u as usize].contains(&v) {
                adj[u as usize].push(v);
                adj[v as usize].push(u);
                edges.push((u.min(v), u.max(v)));
                let (hi, lo) = (i.max(j), i.min(j));
                stubs.swap_remove(hi);
                stubs.swap_remove(lo);
                rejects = 0;
            } else {
                rejects += 1;
                if rejects > 64 {
                    // check whether any legal pair remains before giving up
                    let legal = stubs.iter().enumerate().any(|(a, &x)| {
                        stubs[a + 1..]
                            .iter()
                            .any(|&y| x != y && !adj[x as usize].contains(&y))
                    });
                    if !legal {
                        continue 'attempt;
                    }
                    rejects = 0;
                }
            }
        }
        edges.sort_unstable();
        return Graph::from_edges(n, &edges);
    }
    Err(Error::Budget(format!(
        "pairing model produced no simple graph in {MAX_ATTEMPTS} attempts (n={n}, d={d})"
    )))
}

// ============================================================================
// Tests
// ============================================================================
