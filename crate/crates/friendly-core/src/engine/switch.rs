//! Local switching: repeatedly move a *bad* vertex (strictly fewer
//! neighbors in its own class than in the other) to the other class. The
//! cut shrinks with every move, so the process terminates — either at an
//! internal partition or at a trivial one.

use crate::graph::{Bipartition, Graph};

/// Which bad vertex to move when several qualify.
#[derive(Clone, Debug)]
pub enum SwitchPolicy {
    /// Lowest vertex index first. Reproduces the hard-family chain exactly
    /// and makes traces golden-testable.
    LowestIndex,
    /// First bad vertex in the given preference order.
    GivenOrder(Vec<u32>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SwitchMove {
    pub vertex: u32,
    /// Class the vertex left.
    pub from_a: bool,
    /// Cut size after the move.
    pub cut_after: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SwitchOutcome {
    /// Fixed point with both classes nonempty: an internal partition.
    Internal(Bipartition),
    /// One class emptied out along the way.
    TrivialEnd,
}

/// Full record of a switching run. `cut_sizes` (initial, then after each
/// move) is strictly decreasing; odd-valency regular inputs drop by at
/// least 1 per move and even-valency ones by at least 2.
#[derive(Clone, Debug)]
pub struct SwitchTrace {
    pub initial_cut: usize,
    pub moves: Vec<SwitchMove>,
}

impl SwitchTrace {
    pub fn final_cut(&self) -> usize {
        self.moves.last().map_or(self.initial_cut, |m| m.cut_after)
    }
}

/// Runs the switching algorithm from `start` under `policy`. Non-regular
/// inputs are permitted; badness always compares a vertex's own-class
/// neighbor count against its other-class count.
pub fn local_switch(
    g: &Graph,
    start: &Bipartition,
    policy: &SwitchPolicy,
) -> (SwitchOutcome, SwitchTrace) {
    let n = g.n();
    debug_assert_eq!(start.universe(), n);
    let mut in_a: Vec<bool> = (0..n as u32).map(|v| start.in_a(v)).collect();
    // count of each vertex's neighbors currently in class A
    let mut nbrs_a: Vec<usize> = (0..n as u32)
        .map(|v| g.neighbors(v).iter().filter(|&&w| in_a[w as usize]).count())
        .collect();
    let mut cut = g.cut_size(start);
    let mut trace = SwitchTrace {
        initial_cut: cut,
        moves: Vec::new(),
    };

    let is_bad = |v: u32, in_a: &[bool], nbrs_a: &[usize]| {
        let own = if in_a[v as usize] {
            nbrs_a[v as usize]
        } else {
            g.degree(v) - nbrs_a[v as usize]
        };
        2 * own < g.degree(v)
    };

    loop {
        let bad = match policy {
            SwitchPolicy::LowestIndex => {
                (0..n as u32).find(|&v| is_bad(v, &in_a, &nbrs_a))
            }
            SwitchPolicy::GivenOrder(order) => order
                .iter()
                .copied()
                .find(|&v| is_bad(v, &in_a, &nbrs_a)),
        };
        let Some(v) = bad else { break };
        let own = if in_a[v as usize] {
            nbrs_a[v as usize]
        } else {
            g.degree(v) - nbrs_a[v as usize]
        };
        let other = g.degree(v) - own;
        debug_assert!(own < other);
        let from_a = in_a[v as usize];
        in_a[v as usize] = !from_a;
        for &w in g.neighbors(v) {
            if from_a {
                nbrs_a[w as usize] -= 1;
            } else {
                nbrs_a[w as usize] += 1;
            }
        }
        cut -= other - own;
        trace.moves.push(SwitchMove {
            vertex: v,
            from_a,
            cut_after: cut,
        });
    }

    let mut a = crate::graph::VertexSet::empty(n);
    for v in 0..n as u32 {
        if in_a[v as usize] {
            a.insert(v);
        }
    }
    let partition = Bipartition::from_class_a(a);
    let outcome = if partition.is_nontrivial() {
        SwitchOutcome::Internal(partition)
    } else {
        SwitchOutcome::TrivialEnd
    };
    (outcome, trace)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::{switching_guarantee_threshold, verify_internal};
    use crate::generators::{gen_standard, gen_switching_hard, StandardKind};
    use crate::graph::VertexSet;

    #[test]
    fn hard_family_trace_is_the_u_chain() {
        let (g, p) = gen_switching_hard(5, 8).unwrap();
        let (outcome, trace) = local_switch(&g, &p, &SwitchPolicy::LowestIndex);
        assert_eq!(outcome, SwitchOutcome::TrivialEnd);
        let moved: Vec<u32> = trace.moves.iter().map(|m| m.vertex).collect();
        assert_eq!(&moved[..8], &[0, 1, 2, 3, 4, 5, 6, 7]);
        // strictly decreasing cut
        let mut prev = trace.initial_cut;
        for m in &trace.moves {
            assert!(m.cut_after < prev);
            prev = m.cut_after;
        }
    }

    #[test]
    fn k33_from_sides_ends_trivial() {
        let g = gen_standard(StandardKind::CompleteBipartite, 3).unwrap();
        let a = VertexSet::from_members(6, 0..3).unwrap();
        let p = Bipartition::from_class_a(a);
        assert!(g.cut_size(&p) > switching_guarantee_threshold(3, 6));
        let (outcome, trace) = local_switch(&g, &p, &SwitchPolicy::LowestIndex);
        assert_eq!(outcome, SwitchOutcome::TrivialEnd);
        assert_eq!(trace.initial_cut, 9);
    }

    #[test]
    fn below_threshold_cut_ends_internal() {
        // C6 split into two arcs: cut 2 <= 6/2 + 1, guaranteed internal (it
        // already is; no moves needed).
        let g = crate::generators::gen_circulant(6, &[1]).unwrap();
        let a = VertexSet::from_members(6, [0, 1, 2]).unwrap();
        let p = Bipartition::from_class_a(a);
        let (outcome, trace) = local_switch(&g, &p, &SwitchPolicy::LowestIndex);
        match outcome {
            SwitchOutcome::Internal(q) => {
                assert!(verify_internal(&g, &q).unwrap().is_empty());
                assert!(trace.moves.is_empty());
            }
            SwitchOutcome::TrivialEnd => panic!("expected internal outcome"),
        }
    }

    #[test]
    fn given_order_policy_moves_in_order() {
        let g = gen_standard(StandardKind::CompleteBipartite, 3).unwrap();
        let a = VertexSet::from_members(6, 0..3).unwrap();
        let p = Bipartition::from_class_a(a);
        let order = vec![2u32, 1, 0, 5, 4, 3];
        let (_, trace) = local_switch(&g, &p, &SwitchPolicy::GivenOrder(order));
        assert_eq!(trace.moves[0].vertex, 2);
    }
}
