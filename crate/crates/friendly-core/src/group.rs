//! Finite Abelian groups presented by invariant factors, with the element
//! arithmetic the Cayley-graph constructions need.
//!
//! A group `Z_{d1} x ... x Z_{dr}` (with `d1 | d2 | ... | dr`, each >= 2)
//! has its elements listed in mixed-radix order: the element
//! `(a1, ..., ar)` gets index `((a1 * d2 + a2) * d3 + a3) ...`, so the
//! first coordinate is the most significant digit.

use crate::error::Error;

/// Group element as a residue tuple, one coordinate per invariant factor.
pub type Elem = Vec<u32>;

/// `Z_{d1} x ... x Z_{dr}` given by its invariant factor chain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianGroup {
    factors: Vec<u32>,
}

impl AbelianGroup {
    pub fn new(factors: Vec<u32>) -> Result<Self, Error> {
        if factors.is_empty() {
            return Err(Error::invalid("group needs at least one invariant factor"));
        }
        for w in factors.windows(2) {
            if w[1] % w[0] != 0 {
                return Err(Error::invalid(format!(
                    "invariant factors must form a divisor chain: {} does not divide {}",
                    w[0], w[1]
                )));
            }
        }
        if factors.iter().any(|&d| d < 2) {
            return Err(Error::invalid("invariant factors must be >= 2"));
        }
        Ok(AbelianGroup { factors })
    }

    pub fn factors(&self) -> &[u32] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    pub fn order(&self) -> usize {
        self.factors.iter().map(|&d| d as usize).product()
    }

    pub fn is_cyclic(&self) -> bool {
        self.factors.len() == 1
    }

    /// `Z_2^t` for some t.
    pub fn is_elementary_2(&self) -> bool {
        self.factors.iter().all(|&d| d == 2)
    }

    pub fn index_of(&self, e: &[u32]) -> usize {
        debug_assert_eq!(e.len(), self.factors.len());
        let mut idx = 0usize;
        for (a, d) in e.iter().zip(&self.factors) {
            debug_assert!(a < d);
            idx = idx * *d as usize + *a as usize;
        }
        idx
    }

    pub fn elem_of(&self, mut idx: usize) -> Elem {
        let mut e = vec![0u32; self.factors.len()];
        for i in (0..self.factors.len()).rev() {
            let d = self.factors[i] as usize;
            e[i] = (idx % d) as u32;
            idx /= d;
        }
        e
    }

    pub fn add(&self, x: &[u32], y: &[u32]) -> Elem {
        x.iter()
            .zip(y)
            .zip(&self.factors)
            .map(|((a, b), d)| (a + b) % d)
            .collect()
    }

    pub fn neg(&self, x: &[u32]) -> Elem {
        x.iter()
            .zip(&self.factors)
            .map(|(a, d)| (d - a) % d)
            .collect()
    }

    pub fn zero(&self) -> Elem {
        vec![0; self.factors.len()]
    }

    pub fn is_zero(&self, x: &[u32]) -> bool {
        x.iter().all(|&a| a == 0)
    }

    /// Order at most 2, i.e. `x = -x`.
    pub fn is_involution(&self, x: &[u32]) -> bool {
        !self.is_zero(x) && x == self.neg(x).as_slice()
    }

    pub fn element_order(&self, x: &[u32]) -> usize {
        let mut cur = x.to_vec();
        let mut ord = 1;
        while !self.is_zero(&cur) {
            cur = self.add(&cur, x);
            ord += 1;
        }
        ord
    }

    /// Indices of the subgroup generated by the given elements, ascending.
    pub fn span(&self, gens: &[Elem]) -> Vec<usize> {
        let order = self.order();
        let mut in_span = vec![false; order];
        in_span[self.index_of(&self.zero())] = true;
        let mut frontier = vec![self.zero()];
        while let Some(x) = frontier.pop() {
            for g in gens {
                let y = self.add(&x, g);
                let yi = self.index_of(&y);
                if !in_span[yi] {
                    in_span[yi] = true;
                    frontier.push(y);
                }
            }
        }
        (0..order).filter(|&i| in_span[i]).collect()
    }

    /// Partitions all group elements into cosets of the subgroup generated
    /// by `gens`; each coset is an ascending index list, cosets ordered by
    /// their smallest member.
    pub fn cosets(&self, gens: &[Elem]) -> Vec<Vec<usize>> {
        let sub = self.span(gens);
        let order = self.order();
        let mut assigned = vec![false; order];
        let mut out = Vec::new();
        for rep in 0..order {
            if assigned[rep] {
                continue;
            }
            let rep_elem = self.elem_of(rep);
            let mut coset: Vec<usize> = sub
                .iter()
                .map(|&s| self.index_of(&self.add(&rep_elem, &self.elem_of(s))))
                .collect();
            coset.sort_unstable();
            for &i in &coset {
                assigned[i] = true;
            }
            out.push(coset);
        }
        out
    }

    /// Parses "a:b:c" into an element.
    pub fn parse_elem(&self, text: &str) -> Result<Elem, Error> {
        let parts: Vec<&str> = text.split(':').collect();
        if parts.len() != self.factors.len() {
            return Err(Error::invalid(format!(
                "element {text} has {} coordinates, group has rank {}",
                parts.len(),
                self.factors.len()
            )));
        }
        let mut e = Vec::with_capacity(parts.len());
        for (p, &d) in parts.iter().zip(&self.factors) {
            let a: u32 = p
                .parse()
                .map_err(|_| Error::invalid(format!("bad residue {p} in element {text}")))?;
            if a >= d {
                return Err(Error::invalid(format!(
                    "residue {a} out of range for factor {d} in element {text}"
                )));
            }
            e.push(a);
        }
        Ok(e)
    }

    /// Renders an element as "a:b:c".
    pub fn format_elem(&self, e: &[u32]) -> String {
        e.iter()
            .map(|a| a.to_string())
            .collect::<Vec<_>>()
            .join(":")
    }

    /// Renders the group as "d1xd2x...".
    pub fn name(&self) -> String {
        self.factors
            .iter()
            .map(|d| d.to_string())
            .collect::<Vec<_>>()
            .join("x")
    }
}

/// Enumerates all Abelian groups of the given order as invariant factor
/// chains, deterministically ordered.
pub fn groups_of_order(order: usize) -> Vec<AbelianGroup> {
    let mut out = Vec::new();
    let mut chain = Vec::new();
    enumerate_chains(order, 1, &mut chain, &mut out);
    out.sort_by(|a, b| a.factors.cmp(&b.factors));
    out
}

fn enumerate_chains(
    remaining: usize,
    prev: usize,
    chain: &mut Vec<u32>,
    out: &mut Vec<AbelianGroup>,
) {
    if remaining == 1 {
        if !chain.is_empty() {
            out.push(AbelianGroup::new(chain.clone()).expect("chain built divisible"));
        }
        return;
    }
    // next factor: a divisor of what remains, a multiple of its predecessor
    let mut d = prev.max(2);
    while d <= remaining {
        if remaining % d == 0 && d % prev == 0 {
            chain.push(d as u32);
            enumerate_chains(remaining / d, d, chain, out);
            chain.pop();
        }
        d += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mixed_radix_indexing_roundtrips() {
        let g = AbelianGroup::new(vec![2, 6]).unwrap();
        assert_eq!(g.order(), 12);
        for i in 0..12 {
            assert_eq!(g.index_of(&g.elem_of(i)), i);
        }
        assert_eq!(g.index_of(&[1, 3]), 9);
    }

    #[test]
    fn arithmetic_and_involutions() {
        let g = AbelianGroup::new(vec![2, 6]).unwrap();
        assert_eq!(g.add(&[1, 5], &[1, 3]), vec![0, 2]);
        assert_eq!(g.neg(&[1, 2]), vec![1, 4]);
        assert!(g.is_involution(&[1, 0]));
        assert!(g.is_involution(&[0, 3]));
        assert!(g.is_involution(&[1, 3]));
        assert!(!g.is_involution(&[0, 2]));
        assert_eq!(g.element_order(&[0, 1]), 6);
    }

    #[test]
    fn span_and_cosets() {
        let g = AbelianGroup::new(vec![2, 2, 2]).unwrap();
        let sub = g.span(&[vec![1, 0, 0], vec![0, 1, 0]]);
        assert_eq!(sub.len(), 4);
        let cosets = g.cosets(&[vec![1, 0, 0], vec![0, 1, 0]]);
        assert_eq!(cosets.len(), 2);
        assert_eq!(cosets[0].len(), 4);
    }

    #[test]
    fn invariant_factor_enumeration() {
        let names: Vec<String> = groups_of_order(16).iter().map(|g| g.name()).collect();
        assert_eq!(names, vec!["2x2x2x2", "2x2x4", "2x8", "4x4", "16"]);
        assert_eq!(groups_of_order(6).len(), 1); // only Z6
        assert!(AbelianGroup::new(vec![2, 3]).is_err()); // not a divisor chain
    }

    #[test]
    fn element_text_roundtrip() {
        let g = AbelianGroup::new(vec![2, 6]).unwrap();
        let e = g.parse_elem("1:3").unwrap();
        assert_eq!(e, vec![1, 3]);
        assert_eq!(g.format_elem(&e), "1:3");
        assert!(g.parse_elem("2:0").is_err());
        assert!(g.parse_elem("1").is_err());
    }
}
