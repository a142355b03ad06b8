//! (n-3)-regular graphs: an internal partition exists iff the 2-regular
//! complement has at most one odd cycle, and the partition is then a
//! near-bisection built by alternating along the complement cycles.

use crate::error::Error;
use crate::graph::{Bipartition, Graph, VertexSet};

#[derive(Clone, Debug)]
pub struct NearCompleteOutcome {
    pub has_partition: bool,
    pub odd_cycle_count: usize,
    pub partition: Option<Bipartition>,
}

/// Decides internal-partition existence for an (n-3)-regular graph by
/// counting odd cycles in its complement; when at most one exists the
/// near-bisection witness is constructed and verified.
pub fn classify_near_complete(g: &Graph) -> Result<NearCompleteOutcome, Error> {
    let n = g.n();
    if g.regularity() != Some(n.saturating_sub(3)) {
        return Err(Error::contract(format!(
            "expected an (n-3)-regular graph on {n} vertices"
        )));
    }
    let comp = g.complement();
    let cycles = complement_cycles(&comp)?;
    let odd_cycle_count = cycles.iter().filter(|c| c.len() % 2 == 1).count();
    if odd_cycle_count > 1 {
        return Ok(NearCompleteOutcome {
            has_partition: false,
            odd_cycle_count,
            partition: None,
        });
    }
    // alternate along every cycle; the odd cycle's surplus lands in A and
    // its single same-class adjacency is legal exactly there
    let mut a = VertexSet::empty(n);
    for cycle in &cycles {
        for (i, &v) in cycle.iter().enumerate() {
            if i % 2 == 0 {
                a.insert(v);
            }
        }
    }
    let partition = Bipartition::from_class_a(a);
    let violations = crate::engine::verify_internal(g, &partition)?;
    if !violations.is_empty() {
        return Err(Error::contract(
            "near-bisection construction failed verification",
        ));
    }
    Ok(NearCompleteOutcome {
        has_partition: true,
        odd_cycle_count,
        partition: Some(partition),
    })
}

/// The explicit cycles of a 2-regular graph, each as a closed walk.
fn complement_cycles(comp: &Graph) -> Result<Vec<Vec<u32>>, Error> {
    for v in 0..comp.n() as u32 {
        if comp.degree(v) != 2 {
            return Err(Error::contract(format!(
                "complement vertex {v} has degree {}, expected 2",
                comp.degree(v)
            )));
        }
    }
    let mut seen = vec![false; comp.n()];
    let mut cycles = Vec::new();
    for start in 0..comp.n() as u32 {
        if seen[start as usize] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut prev = u32::MAX;
        let mut cur = start;
        loop {
            seen[cur as usize] = true;
            cycle.push(cur);
            let nb = comp.neighbors(cur);
            let next = if nb[0] == prev { nb[1] } else { nb[0] };
            prev = cur;
            cur = next;
            if cur == start {
                break;
            }
        }
        cycles.push(cycle);
    }
    Ok(cycles)
}

#[derive(Clone, Debug)]
pub struct PowerOfTwoScan {
    pub n: usize,
    pub exists_counterexample: bool,
    /// Offset m with the complement of <m>_n partition-free, when one exists.
    pub witness_offset: Option<usize>,
    /// Circulant complements checked in the verification direction.
    pub checked: usize,
}

/// For even n > 2: an (n-3)-regular circulant without an internal partition
/// exists iff n is not a power of two. Non-powers return the witness offset
/// n/l for the smallest odd prime factor l; powers of two verify every
/// 2-regular circulant <s>_n has no odd cycle at all.
pub fn power_of_two_scan(n: usize) -> Result<PowerOfTwoScan, Error> {
    if n <= 2 || n % 2 != 0 {
        return Err(Error::contract("scan needs even n > 2"));
    }
    let mut l = 3;
    while l <= n {
        if n % l == 0 && l % 2 == 1 {
            let m = n / l;
            // m cycles of odd length l >= 3, hence at least two odd cycles
            debug_assert!(m >= 2);
            return Ok(PowerOfTwoScan {
                n,
                exists_counterexample: true,
                witness_offset: Some(m),
                checked: 0,
            });
        }
        l += 2;
    }
    // n is a power of two: check every 2-regular circulant complement
    let mut checked = 0;
    for s in 1..n / 2 {
        let c = crate::generators::gen_circulant(n, &[s])?;
        let odd = c
            .cycle_lengths()?
            .iter()
            .filter(|&&len| len % 2 == 1)
            .count();
        debug_assert_eq!(odd, 0, "odd cycle in <{s}>_{n} with n a power of two");
        if odd > 1 {
            return Ok(PowerOfTwoScan {
                n,
                exists_counterexample: true,
                witness_offset: Some(s),
                checked,
            });
        }
        checked += 1;
    }
    Ok(PowerOfTwoScan {
        n,
        exists_counterexample: false,
        witness_offset: None,
        checked,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{gen_circulant, gen_standard, StandardKind};

    #[test]
    fn two_triangles_complement_is_k33() {
        // g = K_{3,3} is (6-3)-regular; complement = two triangles
        let g = gen_standard(StandardKind::CompleteBipartite, 3).unwrap();
        let out = classify_near_complete(&g).unwrap();
        assert!(!out.has_partition);
        assert_eq!(out.odd_cycle_count, 2);
    }

    #[test]
    fn c6_complement_partitions() {
        let c6 = gen_circulant(6, &[1]).unwrap();
        let g = c6.complement();
        let out = classify_near_complete(&g).unwrap();
        assert!(out.has_partition);
        assert_eq!(out.odd_cycle_count, 0);
        let p = out.partition.unwrap();
        assert_eq!(p.a().len(), 3);
    }

    #[test]
    fn four_triangles_have_no_partition() {
        // complement of <4>_12 is 9-regular on 12 vertices
        let c = gen_circulant(12, &[4]).unwrap();
        let out = classify_near_complete(&c.complement()).unwrap();
        assert!(!out.has_partition);
        assert_eq!(out.odd_cycle_count, 4);
    }

    #[test]
    fn single_odd_cycle_is_fine() {
        // complement = C7: one odd cycle, partition exists (n odd)
        let c7 = gen_circulant(7, &[1]).unwrap();
        let out = classify_near_complete(&c7.complement()).unwrap();
        assert!(out.has_partition);
        assert_eq!(out.odd_cycle_count, 1);
        let p = out.partition.unwrap();
        assert_eq!(p.a().len(), 4);
    }

    #[test]
    fn scan_witnesses_match_parity_of_two() {
        let s12 = power_of_two_scan(12).unwrap();
        assert!(s12.exists_counterexample);
        assert_eq!(s12.witness_offset, Some(4)); // <4>_12: four triangles

        let s8 = power_of_two_scan(8).unwrap();
        assert!(!s8.exists_counterexample);
        assert_eq!(s8.checked, 3);

        let s16 = power_of_two_scan(16).unwrap();
        assert!(!s16.exists_counterexample);
        assert_eq!(s16.checked, 7);

        assert!(power_of_two_scan(7).is_err());
        assert!(power_of_two_scan(2).is_err());
    }

    #[test]
    fn witness_complement_really_lacks_partitions() {
        for n in [6usize, 10, 12, 14, 18] {
            let scan = power_of_two_scan(n).unwrap();
            let m = scan.witness_offset.expect("non-powers of two have witnesses");
            let g = gen_circulant(n, &[m]).unwrap().complement();
            let out = classify_near_complete(&g).unwrap();
            assert!(!out.has_partition, "witness failed at n={n}");
        }
    }
}
