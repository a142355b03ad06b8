//! Internal-partition search strategies behind a common trait, registered
//! by name and selected at runtime (`--method` on the CLI). Each strategy
//! answers the same question — does this graph have an internal partition,
//! and if so produce one — with different completeness/cost trade-offs.

use crate::engine::{
    exhaustive_internal, local_switch, verify_internal, ExhaustiveOutcome, SwitchOutcome,
    SwitchPolicy,
};
use crate::graph::{Bipartition, Graph, VertexSet};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Budgets every strategy draws from; a run is fully determined by
/// (graph, budget).
#[derive(Clone, Copy, Debug)]
pub struct SearchBudget {
    pub seed: u64,
    pub node_cap: u64,
    pub restarts: u32,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            seed: 0,
            node_cap: 50_000_000,
            restarts: 64,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchResult {
    /// Verified internal partition.
    Found(Bipartition),
    /// Complete enumeration proved there is none.
    ProvedNone { nodes: u64 },
    /// Budget ran out without an answer either way.
    Exhausted { detail: String },
}

/// An interchangeable internal-partition search algorithm.
pub trait PartitionStrategy: Sync {
    fn name(&self) -> &'static str;
    fn summary(&self) -> &'static str;
    fn run(&self, g: &Graph, budget: &SearchBudget) -> SearchResult;
}

/// All registered strategies, lookup order = documentation order.
pub fn strategies() -> Vec<Box<dyn PartitionStrategy>> {
    vec![
        Box::new(SwitchSearch),
        Box::new(ExhaustiveSearch),
        Box::new(HybridSearch),
    ]
}

pub fn strategy_by_name(name: &str) -> Option<Box<dyn PartitionStrategy>> {
    strategies().into_iter().find(|s| s.name() == name)
}

// ---------------------------------------------------------------- switch

/// Seeded restarts of bad-vertex switching from clustered, arc and random
/// balanced bipartitions. Fast and incomplete: exhaustion proves nothing.
pub struct SwitchSearch;

/// Deterministic family of starting bipartitions for a restart index.
fn starting_partition(g: &Graph, seed: u64, restart: u32) -> Bipartition {
    let n = g.n();
    match restart {
        0 => crate::engine::km_bisection(g, seed).0,
        1 => {
            let a = VertexSet::from_members(n, 0..(n / 2) as u32).unwrap();
            Bipartition::from_class_a(a)
        }
        r => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (r as u64) << 20 ^ 0x51a7c4);
            let mut verts: Vec<u32> = (0..n as u32).collect();
            verts.shuffle(&mut rng);
            let a = VertexSet::from_members(n, verts.into_iter().take(n / 2)).unwrap();
            Bipartition::from_class_a(a)
        }
    }
}

impl PartitionStrategy for SwitchSearch {
    fn name(&self) -> &'static str {
        "switch"
    }

    fn summary(&self) -> &'static str {
        "local switching from seeded balanced bipartitions (incomplete)"
    }

    fn run(&self, g: &Graph, budget: &SearchBudget) -> SearchResult {
        if g.n() < 2 {
            return SearchResult::Exhausted {
                detail: "graph too small to bipartition".into(),
            };
        }
        for r in 0..budget.restarts {
            let start = starting_partition(g, budget.seed, r);
            if !start.is_nontrivial() {
                continue;
            }
            let (outcome, _) = local_switch(g, &start, &SwitchPolicy::LowestIndex);
            if let SwitchOutcome::Internal(p) = outcome {
                debug_assert!(verify_internal(g, &p).is_ok_and(|v| v.is_empty()));
                return SearchResult::Found(p);
            }
        }
        SearchResult::Exhausted {
            detail: format!("{} switching restarts ended trivial", budget.restarts),
        }
    }
}

// ------------------------------------------------------------ exhaustive

/// Complete branch-and-prune enumeration; the only strategy that can prove
/// nonexistence.
pub struct ExhaustiveSearch;

impl PartitionStrategy for ExhaustiveSearch {
    fn name(&self) -> &'static str {
        "exhaustive"
    }

    fn summary(&self) -> &'static str {
        "complete enumeration with symmetry fixing and feasibility pruning"
    }

    fn run(&self, g: &Graph, budget: &SearchBudget) -> SearchResult {
        match exhaustive_internal(g, budget.node_cap) {
            ExhaustiveOutcome::Found(p) => SearchResult::Found(p),
            ExhaustiveOutcome::Nonexistent { nodes } => SearchResult::ProvedNone { nodes },
            ExhaustiveOutcome::CapExceeded { nodes } => SearchResult::Exhausted {
                detail: format!("node cap hit after {nodes} nodes"),
            },
        }
    }
}

// ---------------------------------------------------------------- hybrid

/// Switching first for a cheap witness, then the complete search if
/// switching came up empty.
pub struct HybridSearch;

impl PartitionStrategy for HybridSearch {
    fn name(&self) -> &'static str {
        "hybrid"
    }

    fn summary(&self) -> &'static str {
        "switching restarts, then exhaustive enumeration on failure"
    }

    fn run(&self, g: &Graph, budget: &SearchBudget) -> SearchResult {
        match SwitchSearch.run(g, budget) {
            SearchResult::Found(p) => SearchResult::Found(p),
            _ => ExhaustiveSearch.run(g, budget),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{gen_circulant, gen_random_regular};

    #[test]
    fn registry_lookup() {
        assert_eq!(strategies().len(), 3);
        for name in ["switch", "exhaustive", "hybrid"] {
            assert_eq!(strategy_by_name(name).unwrap().name(), name);
        }
        assert!(strategy_by_name("annealing").is_none());
    }

    #[test]
    fn exhaustive_proves_the_exceptional_circulant() {
        let g = gen_circulant(10, &[1, 2, 5]).unwrap();
        let budget = SearchBudget::default();
        match strategy_by_name("exhaustive").unwrap().run(&g, &budget) {
            SearchResult::ProvedNone { .. } => {}
            other => panic!("expected proof of nonexistence, got {other:?}"),
        }
        // hybrid falls through to the same proof
        match strategy_by_name("hybrid").unwrap().run(&g, &budget) {
            SearchResult::ProvedNone { .. } => {}
            other => panic!("expected proof of nonexistence, got {other:?}"),
        }
    }

    #[test]
    fn switch_finds_partitions_in_random_regular_graphs() {
        let budget = SearchBudget::default();
        for seed in 0..5 {
            let g = gen_random_regular(40, 4, seed).unwrap();
            match SwitchSearch.run(&g, &budget) {
                SearchResult::Found(p) => {
                    assert!(verify_internal(&g, &p).unwrap().is_empty());
                }
                other => panic!("switch failed on a 4-regular graph: {other:?}"),
            }
        }
    }
}
