//! Complete search for internal partitions on small graphs. Vertex 0 is
//! fixed in class A (halving the space) and partial assignments are pruned
//! as soon as some vertex can no longer reach its quota even if every one
//! of its unassigned neighbors joins its class. A nonexistence answer is
//! therefore a finished enumeration, never a heuristic claim.

use crate::graph::{Bipartition, Graph, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExhaustiveOutcome {
    /// A verified internal partition.
    Found(Bipartition),
    /// Complete enumeration finished without a witness.
    Nonexistent { nodes: u64 },
    /// The node cap ran out; the question is undecided.
    CapExceeded { nodes: u64 },
}

struct SearchState<'g> {
    g: &'g Graph,
    /// None = unassigned, Some(true) = class A.
    class: Vec<Option<bool>>,
    /// per vertex: assigned neighbors in A / assigned neighbors total
    nbrs_a: Vec<usize>,
    nbrs_assigned: Vec<usize>,
    nodes: u64,
    cap: u64,
}

impl SearchState<'_> {
    /// A vertex is hopeless when even taking every unassigned neighbor into
    /// its own class leaves it short: 2*(own + unassigned) < deg.
    fn hopeless(&self, v: u32) -> bool {
        let Some(in_a) = self.class[v as usize] else {
            return false;
        };
        let deg = self.g.degree(v);
        let own = if in_a {
            self.nbrs_a[v as usize]
        } else {
            self.nbrs_assigned[v as usize] - self.nbrs_a[v as usize]
        };
        let unassigned = deg - self.nbrs_assigned[v as usize];
        2 * (own + unassigned) < deg
    }

    fn assign(&mut self, v: u32, to_a: bool) {
        self.class[v as usize] = Some(to_a);
        for &w in self.g.neighbors(v) {
            self.nbrs_assigned[w as usize] += 1;
            if to_a {
                self.nbrs_a[w as usize] += 1;
            }
        }
    }

    fn unassign(&mut self, v: u32, was_a: bool) {
        self.class[v as usize] = None;
        for &w in self.g.neighbors(v) {
            self.nbrs_assigned[w as usize] -= 1;
            if was_a {
                self.nbrs_a[w as usize] -= 1;
            }
        }
    }

    /// Returns Some(found) when the subtree finished, None when the cap ran
    /// out.
    fn search(&mut self, v: usize) -> Option<bool> {
        let n = self.g.n();
        if v == n {
            // vertex 0 is in A; the partition is internal by construction of
            // the pruning rule, so only B-nonemptiness remains.
            return Some(self.class.iter().any(|c| *c == Some(false)));
        }
        for to_a in [true, false] {
            self.nodes += 1;
            if self.nodes > self.cap {
                return None;
            }
            self.assign(v as u32, to_a);
            let viable = !self.hopeless(v as u32)
                && !self.g.neighbors(v as u32).iter().any(|&w| self.hopeless(w));
            if viable {
                match self.search(v + 1) {
                    Some(true) => return Some(true),
                    Some(false) => {}
                    None => {
                        self.unassign(v as u32, to_a);
                        return None;
                    }
                }
            }
            self.unassign(v as u32, to_a);
        }
        Some(false)
    }
}

/// Either finds an internal partition, proves none exists (complete
/// enumeration with vertex 0 fixed in class A), or reports the node cap was
/// exceeded.
pub fn exhaustive_internal(g: &Graph, node_cap: u64) -> ExhaustiveOutcome {
    let n = g.n();
    if n < 2 {
        return ExhaustiveOutcome::Nonexistent { nodes: 0 };
    }
    let mut st = SearchState {
        g,
        class: vec![None; n],
        nbrs_a: vec![0; n],
        nbrs_assigned: vec![0; n],
        nodes: 0,
        cap: node_cap,
    };
    st.assign(0, true);
    match st.search(1) {
        None => ExhaustiveOutcome::CapExceeded { nodes: st.nodes },
        Some(false) => ExhaustiveOutcome::Nonexistent { nodes: st.nodes },
        Some(true) => {
            let mut a = VertexSet::empty(n);
            for (v, c) in st.class.iter().enumerate() {
                if *c == Some(true) {
                    a.insert(v as u32);
                }
            }
            let p = Bipartition::from_class_a(a);
            debug_assert!(crate::engine::verify_internal(g, &p).is_ok_and(|v| v.is_empty()));
            ExhaustiveOutcome::Found(p)
        }
    }
}

/// Independent unpruned enumerator for cross-checking nonexistence claims
/// on small graphs (2^(n-1) candidate splits, no feasibility pruning).
pub fn unpruned_internal_exists(g: &Graph) -> bool {
    let n = g.n();
    assert!(n >= 1 && n <= 24, "unpruned enumeration is for small graphs");
    // vertex 0 always in A, so iterate over the other n-1 membership bits
    for mask in 0u64..1 << (n - 1) {
        let in_a = |v: u32| v == 0 || mask >> (v - 1) & 1 == 1;
        let b_size = (1..n as u32).filter(|&v| !in_a(v)).count();
        if b_size == 0 {
            continue;
        }
        let ok = (0..n as u32).all(|v| {
            let own = g
                .neighbors(v)
                .iter()
                .filter(|&&w| in_a(w) == in_a(v))
                .count();
            2 * own >= g.degree(v)
        });
        if ok {
            return true;
        }
    }
    false
}
