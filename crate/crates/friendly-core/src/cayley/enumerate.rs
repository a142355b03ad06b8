//! Deterministic enumeration of every connected 5-regular Abelian Cayley
//! spec up to an order cap: all invariant-factor groups per even order,
//! all symmetric generating 5-element connection sets (an odd number of
//! involutions plus inverse pairs), without isomorphism deduplication.

use crate::error::Error;
use crate::generators::CayleySpec;
use crate::group::{groups_of_order, Elem};

/// Streams specs in (order, group, connection-set) order. Only generating
/// (connected) connection sets are emitted.
pub fn enumerate_abelian_cayley(max_order: usize) -> Result<Vec<CayleySpec>, Error> {
    let mut out = Vec::new();
    for order in (6..=max_order).step_by(2) {
        for group in groups_of_order(order) {
            let mut involutions: Vec<Elem> = Vec::new();
            let mut pairs: Vec<(Elem, Elem)> = Vec::new();
            for i in 1..order {
                let e = group.elem_of(i);
                let neg = group.neg(&e);
                if neg == e {
                    involutions.push(e);
                } else if e < neg {
                    pairs.push((e, neg));
                }
            }
            for inv_count in [1usize, 3, 5] {
                let pair_count = (5 - inv_count) / 2;
                if inv_count > involutions.len() || pair_count > pairs.len() {
                    continue;
                }
                for inv_pick in combinations(involutions.len(), inv_count) {
                    for pair_pick in combinations(pairs.len(), pair_count) {
                        let mut connection: Vec<Elem> =
                            inv_pick.iter().map(|&i| involutions[i].clone()).collect();
                        for &j in &pair_pick {
                            connection.push(pairs[j].0.clone());
                            connection.push(pairs[j].1.clone());
                        }
                        let spec = CayleySpec::new(group.clone(), connection)?;
                        if spec.generates() {
                            out.push(spec);
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

/// All k-subsets of 0..n in lexicographic order.
fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    if k == 0 {
        out.push(Vec::new());
        return out;
    }
    let mut pick: Vec<usize> = (0..k).collect();
    loop {
        out.push(pick.clone());
        // rightmost index that can still be advanced
        let Some(i) = (0..k).rev().find(|&i| pick[i] != i + n - k) else {
            return out;
        };
        pick[i] += 1;
        for j in i + 1..k {
            pick[j] = pick[j - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn combinations_are_lexicographic_and_complete() {
        let c = combinations(5, 3);
        assert_eq!(c.len(), 10);
        assert_eq!(c[0], vec![0, 1, 2]);
        assert_eq!(c[9], vec![2, 3, 4]);
        assert_eq!(combinations(3, 0), vec![Vec::<usize>::new()]);
        assert!(combinations(2, 3).is_empty());
    }

    #[test]
    fn order_six_is_only_k6() {
        let specs = enumerate_abelian_cayley(6).unwrap();
        assert_eq!(specs.len(), 1);
        let g = crate::generators::gen_abelian_cayley(&specs[0]).unwrap();
        assert_eq!(g.m(), 15); // K6: the five nonzero elements are forced
    }

    #[test]
    fn order_eight_covers_all_three_groups() {
        let specs = enumerate_abelian_cayley(8).unwrap();
        let mut names: Vec<String> = specs
            .iter()
            .filter(|s| s.group.order() == 8)
            .map(|s| s.group.name())
            .collect();
        names.dedup();
        assert_eq!(names, vec!["2x2x2", "2x4", "8"]);
    }

    #[test]
    fn order_ten_includes_both_exceptional_connection_sets() {
        let specs = enumerate_abelian_cayley(10).unwrap();
        let texts: Vec<String> = specs
            .iter()
            .filter(|s| s.group.order() == 10)
            .map(|s| s.connection_text())
            .collect();
        assert_eq!(texts.len(), 6); // pairs {1,2},{1,3},{1,4},{2,3},{2,4},{3,4}
        assert!(texts.contains(&"1 2 5 8 9".to_string())); // {±1, ±2, 5}
        assert!(texts.contains(&"1 3 5 7 9".to_string())); // {±1, ±3, 5}
    }

    #[test]
    fn all_emitted_specs_are_connected_and_five_regular() {
        for spec in enumerate_abelian_cayley(12).unwrap() {
            assert_eq!(spec.valency(), 5);
            assert!(spec.generates());
            let g = crate::generators::gen_abelian_cayley(&spec).unwrap();
            assert_eq!(g.regularity(), Some(5));
            assert!(g.is_connected());
        }
    }
}
