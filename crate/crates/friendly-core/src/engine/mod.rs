//! Verification and search machinery for internal partitions and cohesive
//! sets: witness checking, local switching with its guarantee thresholds,
//! complete exhaustive search, greedy extension of cohesive pairs, the
//! cohesive-set local search, clustering-based bisection heuristics, and
//! text certificates tying witnesses to graphs.

mod ban_linial;
mod certificate;
mod exhaustive;
mod km;
mod search;
mod switch;

pub use ban_linial::ban_linial_cohesive;
pub use certificate::{graph_digest, Certificate};
pub use exhaustive::{exhaustive_internal, unpruned_internal_exists, ExhaustiveOutcome};
pub use km::{km_bisection, km_dense_subgraph};
pub use search::{strategies, strategy_by_name, PartitionStrategy, SearchBudget, SearchResult};
pub use switch::{local_switch, SwitchMove, SwitchOutcome, SwitchPolicy, SwitchTrace};

use crate::error::Error;
use crate::graph::{Bipartition, Graph, VertexSet};

/// One vertex falling short of its degree requirement, with its actual
/// inside/outside neighbor counts.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DegreeViolation {
    pub vertex: u32,
    pub inside: usize,
    pub outside: usize,
}

/// Checks whether `p` is an internal partition of `g`: both classes
/// nonempty and every vertex has at least as many neighbors in its own
/// class as in the other. Returns the violating vertices (empty = valid).
pub fn verify_internal(g: &Graph, p: &Bipartition) -> Result<Vec<DegreeViolation>, Error> {
    if p.universe() != g.n() {
        return Err(Error::contract(format!(
            "partition over {} vertices, graph has {}",
            p.universe(),
            g.n()
        )));
    }
    if !p.is_nontrivial() {
        return Err(Error::contract(
            "internal partitions need two nonempty classes",
        ));
    }
    let mut violations = Vec::new();
    for v in 0..g.n() as u32 {
        let own = g
            .neighbors(v)
            .iter()
            .filter(|&&w| p.in_a(w) == p.in_a(v))
            .count();
        let other = g.degree(v) - own;
        if own < other {
            violations.push(DegreeViolation {
                vertex: v,
                inside: own,
                outside: other,
            });
        }
    }
    Ok(violations)
}

/// Checks whether `s` is k-cohesive in `g`: every member has at least `k`
/// neighbors inside `s`. Returns the violating vertices (empty = valid).
pub fn verify_cohesive(g: &Graph, s: &VertexSet, k: usize) -> Result<Vec<DegreeViolation>, Error> {
    if s.universe() != g.n() {
        return Err(Error::contract(format!(
            "set over {} vertices, graph has {}",
            s.universe(),
            g.n()
        )));
    }
    if s.is_empty() {
        return Err(Error::contract("cohesive sets are nonempty"));
    }
    let mut violations = Vec::new();
    for v in s.iter() {
        let inside = g.neighbors(v).iter().filter(|&&w| s.contains(w)).count();
        if inside < k {
            violations.push(DegreeViolation {
                vertex: v,
                inside,
                outside: g.degree(v) - inside,
            });
        }
    }
    Ok(violations)
}

/// Largest bisection size that still guarantees local switching reaches an
/// internal partition: `n/2 + k(k+1) - 1` for valency `2k+1`,
/// `n + k(k-1) - 1` for valency `2k`.
pub fn switching_guarantee_threshold(valency: usize, n: usize) -> usize {
    let k = valency / 2;
    if valency % 2 == 1 {
        n / 2 + k * (k + 1) - 1
    } else {
        n + k * (k - 1) - 1
    }
}

/// Extends a disjoint pair of cohesive sets to an internal partition of the
/// whole vertex set: unassigned vertices join `a`'s class one by one while
/// they have at least `ceil(d/2)` neighbors there; the rest go to `b`'s
/// class.
///
/// Preconditions (verified): `a` and `b` disjoint and nonempty, and every
/// member of each set has at least `ceil(d/2)` neighbors inside its own set.
pub fn extend_to_partition(g: &Graph, a: &VertexSet, b: &VertexSet) -> Result<Bipartition, Error> {
    if !a.is_disjoint(b) {
        return Err(Error::contract("seed sets overlap"));
    }
    if a.is_empty() || b.is_empty() {
        return Err(Error::contract("seed sets must be nonempty"));
    }
    for (set, name) in [(a, "first"), (b, "second")] {
        for v in set.iter() {
            let inside = g.neighbors(v).iter().filter(|&&w| set.contains(w)).count();
            let need = g.degree(v).div_ceil(2);
            if inside < need {
                return Err(Error::contract(format!(
                    "vertex {v} has only {inside} of the required {need} neighbors inside the {name} seed set"
                )));
            }
        }
    }
    let mut class_a = a.clone();
    let in_b = b;
    // grow A to a fixed point, scanning in ascending order each pass
    loop {
        let mut grew = false;
        for v in 0..g.n() as u32 {
            if class_a.contains(v) || in_b.contains(v) {
                continue;
            }
            let in_a = g.neighbors(v).iter().filter(|&&w| class_a.contains(w)).count();
            if in_a >= g.degree(v).div_ceil(2) {
                class_a.insert(v);
                grew = true;
            }
        }
        if !grew {
            break;
        }
    }
    let partition = Bipartition::from_class_a(class_a);
    debug_assert!(verify_internal(g, &partition).is_ok_and(|v| v.is_empty()));
    Ok(partition)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{gen_circulant, gen_standard, StandardKind};

    #[test]
    fn verify_internal_on_circulant_parity_classes() {
        // <1,2,4>_8 with the odd/even classes (paper's {1,3,5,7},{2,4,6,8})
        let g = gen_circulant(8, &[1, 2, 4]).unwrap();
        let a = VertexSet::from_members(8, [0, 2, 4, 6]).unwrap();
        let p = Bipartition::from_class_a(a);
        assert!(verify_internal(&g, &p).unwrap().is_empty());
    }

    #[test]
    fn k6_has_no_internal_bipartition() {
        let g = gen_standard(StandardKind::Complete, 6).unwrap();
        for mask in 1u32..(1 << 6) - 1 {
            let a = VertexSet::from_members(6, (0..6u32).filter(|&v| mask >> v & 1 == 1)).unwrap();
            let p = Bipartition::from_class_a(a);
            assert!(
                !verify_internal(&g, &p).unwrap().is_empty(),
                "mask {mask:#b} should not be internal"
            );
        }
    }

    #[test]
    fn c6_arc_partition_is_internal() {
        let g = gen_circulant(6, &[1]).unwrap();
        let a = VertexSet::from_members(6, [0, 1, 2]).unwrap();
        let p = Bipartition::from_class_a(a);
        assert!(verify_internal(&g, &p).unwrap().is_empty());
    }

    #[test]
    fn verify_internal_rejects_trivial() {
        let g = gen_circulant(6, &[1]).unwrap();
        let p = Bipartition::from_class_a(VertexSet::full(6));
        assert!(verify_internal(&g, &p).is_err());
    }

    #[test]
    fn verify_cohesive_examples() {
        let g = gen_circulant(10, &[1, 2, 5]).unwrap();
        let s = VertexSet::from_members(10, 0..6).unwrap();
        assert!(verify_cohesive(&g, &s, 3).unwrap().is_empty());

        let k4 = gen_standard(StandardKind::Complete, 4).unwrap();
        assert!(verify_cohesive(&k4, &VertexSet::full(4), 3).unwrap().is_empty());

        let single = VertexSet::from_members(4, [0]).unwrap();
        let violations = verify_cohesive(&k4, &single, 1).unwrap();
        assert_eq!(violations.len(), 1);
        assert_eq!(violations[0].inside, 0);
    }

    #[test]
    fn threshold_formulas() {
        for n in [10usize, 20, 100] {
            assert_eq!(switching_guarantee_threshold(5, n), n / 2 + 5);
            assert_eq!(switching_guarantee_threshold(7, n), n / 2 + 11);
            assert_eq!(switching_guarantee_threshold(4, n), n + 1);
            assert_eq!(switching_guarantee_threshold(3, n), n / 2 + 1);
            assert_eq!(switching_guarantee_threshold(6, n), n + 5);
        }
    }

    #[test]
    fn extend_table1_pair() {
        // <1,3,6>_12, paper sets {1,4,7,10} and {2,5,8,11}, shifted to 0-indexed
        let g = gen_circulant(12, &[1, 3, 6]).unwrap();
        let a = VertexSet::from_members(12, [0, 3, 6, 9]).unwrap();
        let b = VertexSet::from_members(12, [1, 4, 7, 10]).unwrap();
        let p = extend_to_partition(&g, &a, &b).unwrap();
        assert!(verify_internal(&g, &p).unwrap().is_empty());
        for v in a.iter() {
            assert!(p.in_a(v));
        }
        for v in b.iter() {
            assert!(!p.in_a(v));
        }
    }

    #[test]
    fn extend_full_cover_is_identity() {
        let g = gen_circulant(6, &[1]).unwrap();
        let a = VertexSet::from_members(6, [0, 1, 2]).unwrap();
        let b = a.complement();
        let p = extend_to_partition(&g, &a, &b).unwrap();
        assert_eq!(p.a(), &a);
    }

    #[test]
    fn extend_rejects_non_cohesive_seed() {
        let g = gen_circulant(10, &[1, 2, 5]).unwrap();
        let a = VertexSet::from_members(10, [0, 1]).unwrap();
        let b = VertexSet::from_members(10, [5, 6]).unwrap();
        let err = extend_to_partition(&g, &a, &b).unwrap_err().to_string();
        assert!(err.contains("vertex"), "{err}");
    }
}
