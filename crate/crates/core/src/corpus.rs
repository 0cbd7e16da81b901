//! Seeded instance generation.
//!
//! The generator is the 64-bit linear congruential recurrence
//! `s ← s · 6364136223846793005 + 1442695040888963407 (mod 2^64)` with the
//! seed as initial state; each draw outputs the high 32 bits of the new
//! state. `below(n)` maps a draw `x` to `⌊x · n / 2^32⌋`. Every instance is
//! produced by a fixed sequence of draws, so it can be replayed from the
//! description alone in any language with 64-bit wrapping arithmetic.

use crate::actions::{validate_action, FreeAction};
use crate::complexes::{GPoset, SComplex};
use crate::graphs::Graph;
use crate::hypergraphs::{Hypergraph, PosetAction};

const MULTIPLIER: u64 = 6364136223846793005;
const INCREMENT: u64 = 1442695040888963407;

#[derive(Debug, Clone)]
pub struct Lcg {
    state: u64,
}

impl Lcg {
    pub fn new(seed: u64) -> Self {
        Lcg { state: seed }
    }

    pub fn next_u32(&mut self) -> u32 {
        self.state = self.state.wrapping_mul(MULTIPLIER).wrapping_add(INCREMENT);
        (self.state >> 32) as u32
    }

    /// Uniform-ish in `0..n`; `n` must be positive.
    pub fn below(&mut self, n: u32) -> u32 {
        ((self.next_u32() as u64 * n as u64) >> 32) as u32
    }

    /// True with probability about `num / den`.
    pub fn chance(&mut self, num: u32, den: u32) -> bool {
        self.below(den) < num
    }

    /// Fisher–Yates, last index first.
    pub fn shuffle<T>(&mut self, xs: &mut [T]) {
        for i in (1..xs.len()).rev() {
            let j = self.below(i as u32 + 1) as usize;
            xs.swap(i, j);
        }
    }
}

/// `n` drawn from `n_min..=n_max`, then each pair `(i, j)`, `i < j`, in
/// lexicographic order becomes an edge when `chance(num, den)`.
pub fn random_graph(rng: &mut Lcg, n_min: usize, n_max: usize, num: u32, den: u32) -> Graph {
    let n = n_min + rng.below((n_max - n_min + 1) as u32) as usize;
    let mut edges = Vec::new();
    for i in 0..n as u32 {
        for j in i + 1..n as u32 {
            if rng.chance(num, den) {
                edges.push([i, j]);
            }
        }
    }
    Graph::new(n, &edges).expect("generated edges are valid")
}

/// A graph corpus: instance `i` uses the stream seeded with `seed + i`,
/// between 2 and 9 vertices, edge density 1/2. An instance that comes out
/// without edges gets the edge `{0, 1}`.
pub fn graph_corpus(seed: u64, count: usize) -> Vec<Graph> {
    (0..count as u64)
        .map(|i| {
            let g = random_graph(&mut Lcg::new(seed.wrapping_add(i)), 2, 9, 1, 2);
            if g.edge_count() > 0 {
                g
            } else {
                Graph::new(g.n(), &[[0, 1]]).expect("n >= 2")
            }
        })
        .collect()
}

/// `k` distinct elements of `0..n`: the first `k` of a shuffled `0..n`.
pub fn random_subset(rng: &mut Lcg, n: usize, k: usize) -> Vec<u32> {
    let mut all: Vec<u32> = (0..n as u32).collect();
    rng.shuffle(&mut all);
    all.truncate(k);
    all.sort_unstable();
    all
}

/// `n` from `1..=n_max`, then `1..=5` generating faces, each of size drawn
/// from `1..=min(n, max_face)`.
pub fn random_complex(rng: &mut Lcg, n_max: usize, max_face: usize) -> SComplex {
    let n = 1 + rng.below(n_max as u32) as usize;
    let count = 1 + rng.below(5);
    let faces: Vec<Vec<u32>> = (0..count)
        .map(|_| {
            let k = 1 + rng.below(n.min(max_face) as u32) as usize;
            random_subset(rng, n, k)
        })
        .collect();
    let labels = (0..n).map(|v| format!("v{v}")).collect();
    SComplex::from_maximal_faces(labels, &faces).expect("valid faces")
}

/// Vertices `o · p + j` for orbits `o < m`, `m` from `1..=max_orbits`, with
/// generator `(o, j) ↦ (o, j + 1)`. Each of `1..=5` generating faces picks a
/// set of orbits and one element of each, and is added with all translates.
pub fn random_free_action(rng: &mut Lcg, p: u32, max_orbits: usize) -> FreeAction {
    let m = 1 + rng.below(max_orbits as u32) as usize;
    let count = 1 + rng.below(5);
    let mut faces = Vec::new();
    for _ in 0..count {
        let k = 1 + rng.below(m.min(4) as u32) as usize;
        let orbits = random_subset(rng, m, k);
        let shifts: Vec<u32> = orbits.iter().map(|_| rng.below(p)).collect();
        for t in 0..p {
            faces.push(
                orbits
                    .iter()
                    .zip(&shifts)
                    .map(|(&o, &j)| o * p + (j + t) % p)
                    .collect::<Vec<u32>>(),
            );
        }
    }
    let n = m * p as usize;
    let labels = (0..n).map(|v| format!("o{}g{}", v / p as usize, v % p as usize)).collect();
    let k = SComplex::from_maximal_faces(labels, &faces).expect("valid faces");
    let generator = (0..n as u32).map(|v| v - v % p + (v % p + 1) % p).collect();
    validate_action(k, generator, p).expect("one vertex per orbit in every face")
}

/// Elements `o · p + j` as above; for every pair of orbits `o1 < o2`, with
/// chance 1/2, a relation `(o1, j1) < (o2, j2)` is added with its translates.
pub fn random_free_poset(rng: &mut Lcg, p: u32, orbits: usize) -> PosetAction {
    let mut rel = Vec::new();
    for o1 in 0..orbits as u32 {
        for o2 in o1 + 1..orbits as u32 {
            if rng.chance(1, 2) {
                let (j1, j2) = (rng.below(p), rng.below(p));
                for t in 0..p {
                    rel.push((o1 * p + (j1 + t) % p, o2 * p + (j2 + t) % p));
                }
            }
        }
    }
    let n = orbits * p as usize;
    let labels = (0..n).map(|v| format!("o{}g{}", v / p as usize, v % p as usize)).collect();
    let poset = GPoset::from_covers(labels, &rel).expect("orbit index increases along relations");
    let generator = (0..n as u32).map(|v| v - v % p + (v % p + 1) % p).collect();
    PosetAction::new(poset, p, generator).expect("translates were added")
}

/// `n` from `n_min..=n_max`, then each `r`-subset in lexicographic order is
/// kept when `chance(num, den)`.
pub fn random_uniform_hypergraph(rng: &mut Lcg, n_min: usize, n_max: usize, r: usize, num: u32, den: u32) -> Hypergraph {
    let n = n_min + rng.below((n_max - n_min + 1) as u32) as usize;
    let mut edges = Vec::new();
    for s in combinations(n, r) {
        if rng.chance(num, den) {
            edges.push(s);
        }
    }
    Hypergraph::new(n, &edges).expect("generated edges are valid")
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<u32>> {
    fn go(n: u32, k: usize, start: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if (n - i) as usize + cur.len() < k {
                break;
            }
            cur.push(i);
            go(n, k, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n as u32, k, 0, &mut Vec::with_capacity(k), &mut out);
    out
}
