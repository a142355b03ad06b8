//! Constructive internal partitions and the complete classification of
//! 5-regular Abelian Cayley graphs, plus the near-complete circulant
//! classifier and the Paley scan.

mod abelian;
mod cyclic;
mod enumerate;
mod near_complete;
mod paley;

pub use abelian::{abelian_internal_partition, z2t_partition, z2_x_z2p_partition};
pub use cyclic::{cyclic5_internal, gcd_partition, reduce_rel_prime};
pub use enumerate::enumerate_abelian_cayley;
pub use near_complete::{classify_near_complete, power_of_two_scan, NearCompleteOutcome, PowerOfTwoScan};
pub use paley::{paley_scan, PaleyRow};

use crate::error::Error;
use crate::graph::{Bipartition, Graph};

/// 5-regular cyclic Cayley spec on 2k vertices: offsets r and t (each
/// contributing two neighbors) plus the forced half-offset k (one
/// neighbor, since odd valency requires it).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CyclicSpec5 {
    /// Half the order: the graph lives on n = 2k vertices.
    pub half: usize,
    pub r: usize,
    pub t: usize,
}

impl CyclicSpec5 {
    pub fn new(half: usize, r: usize, t: usize) -> Result<Self, Error> {
        if half < 3 {
            return Err(Error::invalid("need half >= 3 for a 5-regular circulant"));
        }
        if r == 0 || t == 0 || r >= half || t >= half {
            return Err(Error::invalid(format!(
                "offsets must satisfy 0 < r, t < {half}: got r={r}, t={t}"
            )));
        }
        if r == t {
            return Err(Error::invalid("offsets r and t must differ"));
        }
        Ok(CyclicSpec5 { half, r, t })
    }

    pub fn order(&self) -> usize {
        2 * self.half
    }

    pub fn graph(&self) -> Graph {
        crate::generators::gen_circulant(self.order(), &[self.r, self.t, self.half])
            .expect("validated spec")
    }

    /// Notation tag like "<1,2,5>_10".
    pub fn label(&self) -> String {
        format!("<{},{},{}>_{}", self.r, self.t, self.half, self.order())
    }
}

/// The three 5-regular Abelian Cayley graphs without an internal partition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ExceptionalGraph {
    K6,
    K55,
    /// The circulant <1,2,5>_10.
    C125,
}

impl ExceptionalGraph {
    pub fn name(&self) -> &'static str {
        match self {
            ExceptionalGraph::K6 => "K6",
            ExceptionalGraph::K55 => "K5,5",
            ExceptionalGraph::C125 => "<1,2,5>_10",
        }
    }
}

/// Classification result for one Cayley graph: either a verified internal
/// partition or a confirmed exceptional verdict.
#[derive(Clone, Debug)]
pub struct ClassificationOutcome {
    pub verdict: Verdict,
    /// Which constructive route produced the answer.
    pub method: String,
    /// Partitions re-checked by the verifier; exceptional verdicts
    /// re-confirmed by exhaustive nonexistence.
    pub verified: bool,
}

#[derive(Clone, Debug)]
pub enum Verdict {
    Partition(Bipartition),
    Exceptional(ExceptionalGraph),
}

impl ClassificationOutcome {
    pub fn partition(&self) -> Option<&Bipartition> {
        match &self.verdict {
            Verdict::Partition(p) => Some(p),
            Verdict::Exceptional(_) => None,
        }
    }

    pub fn is_exceptional(&self) -> bool {
        matches!(self.verdict, Verdict::Exceptional(_))
    }
}

/// One row of the small-circulant witness table: 1-indexed vertex labels
/// exactly as printed, re-verified by the test suite rather than trusted.
pub struct WitnessTableRow {
    pub half: usize,
    pub t_star: usize,
    pub first: &'static [u32],
    pub second: &'static [u32],
}

/// The embedded registry of cohesive pairs for the 5-regular circulants
/// <1, t*, k>_2k with k <= 7 that do have internal partitions.
pub const WITNESS_TABLE: &[WitnessTableRow] = &[
    WitnessTableRow { half: 4, t_star: 2, first: &[1, 3, 5, 7], second: &[2, 4, 6, 8] },
    WitnessTableRow { half: 4, t_star: 3, first: &[1, 2, 5, 6], second: &[3, 4, 7, 8] },
    WitnessTableRow { half: 5, t_star: 4, first: &[1, 2, 6, 7], second: &[3, 4, 8, 9] },
    WitnessTableRow { half: 6, t_star: 2, first: &[1, 2, 3, 7, 8, 9], second: &[4, 5, 6, 10, 11, 12] },
    WitnessTableRow { half: 6, t_star: 3, first: &[1, 4, 7, 10], second: &[2, 5, 8, 11] },
    WitnessTableRow { half: 6, t_star: 4, first: &[1, 3, 5, 7, 9, 11], second: &[2, 4, 6, 8, 10, 12] },
    WitnessTableRow { half: 6, t_star: 5, first: &[1, 2, 7, 8], second: &[3, 4, 9, 10] },
    WitnessTableRow { half: 7, t_star: 2, first: &[1, 2, 3, 8, 9, 10], second: &[4, 5, 6, 11, 12, 13] },
    WitnessTableRow { half: 7, t_star: 3, first: &[1, 4, 5, 8, 11, 12], second: &[3, 6, 7, 10, 13, 14] },
    WitnessTableRow { half: 7, t_star: 4, first: &[1, 4, 5, 8, 11, 12], second: &[3, 6, 7, 10, 13, 14] },
    WitnessTableRow { half: 7, t_star: 5, first: &[1, 2, 3, 8, 9, 10], second: &[4, 5, 6, 11, 12, 13] },
    WitnessTableRow { half: 7, t_star: 6, first: &[1, 2, 3, 8, 9, 10], second: &[4, 5, 6, 11, 12, 13] },
];

/// Translates 1-indexed printed labels into a vertex set over n vertices.
pub(crate) fn one_indexed_set(labels: &[u32], n: usize) -> crate::graph::VertexSet {
    crate::graph::VertexSet::from_members(n, labels.iter().map(|&l| (l - 1) % n as u32))
        .expect("table labels in range")
}

/// Search used when a printed family fails verification or a proof case
/// falls outside its constructive route: hybrid switching + exhaustive.
/// A nonexistence proof here would contradict the classification theorem,
/// so it surfaces as an error rather than a verdict.
pub(crate) fn engine_partition(g: &Graph, seed: u64) -> Result<Bipartition, Error> {
    use crate::engine::{strategy_by_name, SearchBudget, SearchResult};
    let budget = SearchBudget {
        seed,
        node_cap: 200_000_000,
        restarts: 96,
    };
    match strategy_by_name("hybrid").unwrap().run(g, &budget) {
        SearchResult::Found(p) => Ok(p),
        SearchResult::ProvedNone { .. } => Err(Error::SearchFailed(
            "engine proved nonexistence where the classification promises a partition".into(),
        )),
        SearchResult::Exhausted { detail } => Err(Error::Budget(format!(
            "engine fallback exhausted on {} vertices: {detail}",
            g.n()
        ))),
    }
}
