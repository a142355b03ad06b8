//! Search for small ceil(d/2)-cohesive sets in d-regular graphs. Every
//! n-vertex d-regular graph has one of size at most ceil(n/2) (d even) or
//! n/2 + 1 (d odd); this module looks for a witness by hill-climbing the
//! induced edge count of fixed-size windows and peeling the best window to
//! its core, with an exhaustive fallback on tiny graphs.

use crate::error::Error;
use crate::graph::{Graph, VertexSet};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Finds a ceil(d/2)-cohesive set within the size bound of the d-regular
/// lemma. Reports the smallest witness found across restarts; the window
/// size starts at the bound and shrinks while successes persist. Failure
/// after all restarts is an explicit error, never a silent degradation.
pub fn ban_linial_cohesive(g: &Graph, seed: u64, restarts: u32) -> Result<VertexSet, Error> {
    let n = g.n();
    let Some(d) = g.regularity() else {
        return Err(Error::contract("cohesive-set lemma needs a regular graph"));
    };
    if n == 0 || d == 0 {
        return Err(Error::contract("graph must have positive degree"));
    }
    let k = d.div_ceil(2);
    let bound = if d % 2 == 0 { n.div_ceil(2) } else { n / 2 + 1 };

    let mut best: Option<VertexSet> = None;
    let mut window = bound;
    while window > k {
        let mut improved = false;
        for r in 0..restarts {
            let mut rng = ChaCha8Rng::seed_from_u64(
                seed ^ (window as u64) << 40 ^ (r as u64) << 8 ^ 0x5eed,
            );
            let start = if r == 0 {
                km_window(g, window, seed)
            } else {
                random_window(g, window, &mut rng)
            };
            let climbed = hill_climb(g, start);
            let (induced, labels) = g.induced(&climbed);
            let core = induced.k_core(k);
            if core.is_empty() {
                continue;
            }
            let mut witness = VertexSet::empty(n);
            for i in core.iter() {
                witness.insert(labels[i as usize]);
            }
            debug_assert!(
                crate::engine::verify_cohesive(g, &witness, k).is_ok_and(|v| v.is_empty())
            );
            if better(&witness, &best) {
                best = Some(witness);
                improved = true;
            }
        }
        match (&best, improved) {
            (Some(b), true) => window = window.min(b.len()).saturating_sub(1),
            _ => break,
        }
    }
    if best.is_none() && n <= 20 {
        best = exhaustive_smallest(g, k, bound);
    }
    best.ok_or_else(|| {
        Error::SearchFailed(format!(
            "no {k}-cohesive set of size <= {bound} found in {restarts} restarts (the lemma guarantees one exists)"
        ))
    })
}

fn better(candidate: &VertexSet, best: &Option<VertexSet>) -> bool {
    match best {
        None => true,
        Some(b) => {
            (candidate.len(), candidate.members()) < (b.len(), b.members())
        }
    }
}

/// Window from the clustering bisection: its larger class, padded or
/// trimmed to the requested size. A good approximation of a small cut.
fn km_window(g: &Graph, size: usize, seed: u64) -> VertexSet {
    let (p, _) = crate::engine::km_bisection(g, seed);
    let mut w = if p.a().len() >= p.b().len() {
        p.a().clone()
    } else {
        p.b().clone()
    };
    resize_window(g, &mut w, size);
    w
}

fn random_window(g: &Graph, size: usize, rng: &mut ChaCha8Rng) -> VertexSet {
    let mut verts: Vec<u32> = (0..g.n() as u32).collect();
    verts.shuffle(rng);
    VertexSet::from_members(g.n(), verts.into_iter().take(size)).unwrap()
}

fn resize_window(g: &Graph, w: &mut VertexSet, size: usize) {
    while w.len() > size {
        // drop the member with fewest neighbors inside
        let victim = w
            .iter()
            .min_by_key(|&v| {
                (
                    g.neighbors(v).iter().filter(|&&x| w.contains(x)).count(),
                    v,
                )
            })
            .unwrap();
        w.remove(victim);
    }
    while w.len() < size {
        let joiner = (0..g.n() as u32)
            .filter(|&v| !w.contains(v))
            .max_by_key(|&v| {
                (
                    g.neighbors(v).iter().filter(|&&x| w.contains(x)).count(),
                    std::cmp::Reverse(v),
                )
            })
            .unwrap();
        w.insert(joiner);
    }
}

/// Greedy swap ascent on induced edge count: trade the weakest member for
/// the strongest outsider while that strictly gains edges.
fn hill_climb(g: &Graph, mut w: VertexSet) -> VertexSet {
    let n = g.n();
    if w.len() == n {
        return w;
    }
    loop {
        let inside = |v: u32, w: &VertexSet| {
            g.neighbors(v).iter().filter(|&&x| w.contains(x)).count()
        };
        let Some(weakest) = w.iter().min_by_key(|&v| (inside(v, &w), v)) else {
            return w;
        };
        let Some(joiner) = (0..n as u32)
            .filter(|&v| !w.contains(v))
            .max_by_key(|&v| (inside(v, &w), std::cmp::Reverse(v)))
        else {
            return w;
        };
        // edge delta for swapping weakest -> joiner
        let adjacency_fix = usize::from(g.has_edge(weakest, joiner));
        let gain = inside(joiner, &w) - adjacency_fix;
        let loss = inside(weakest, &w);
        if gain > loss {
            w.remove(weakest);
            w.insert(joiner);
        } else {
            return w;
        }
    }
}

/// Complete subset scan for tiny graphs: smallest k-cohesive set within the
/// size bound, ties broken by the lexicographically smallest member list.
fn exhaustive_smallest(g: &Graph, k: usize, bound: usize) -> Option<VertexSet> {
    let n = g.n();
    debug_assert!(n <= 20);
    let mut best: Option<(usize, u32)> = None; // (size, mask)
    for mask in 1u32..1 << n {
        let size = mask.count_ones() as usize;
        if size > bound || best.is_some_and(|(s, _)| size >= s) {
            continue;
        }
        let cohesive = (0..n as u32).filter(|&v| mask >> v & 1 == 1).all(|v| {
            let inside = g
                .neighbors(v)
                .iter()
                .filter(|&&w| mask >> w & 1 == 1)
                .count();
            inside >= k
        });
        if cohesive {
            best = Some((size, mask));
        }
    }
    best.map(|(_, mask)| {
        VertexSet::from_members(n, (0..n as u32).filter(|&v| mask >> v & 1 == 1)).unwrap()
    })
}
