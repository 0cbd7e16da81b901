//! Hypergraphs, Zhu's categorical product, the complex `B_edge`, free
//! `Z/p`-posets with their compatibility hypergraphs, and the chromatic
//! lower bounds built from them.

use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::actions::{e_k_g, validate_action, ActionError, FreeAction};
use crate::complexes::{order_complex_up_to, ComplexError, GPoset, SComplex, SimplicialMap, DEFAULT_DIM_CAP};
use crate::corpus::combinations;
use crate::fpalg::is_prime;
use crate::graphs::{Graph, DEFAULT_VERTEX_CAP};
use crate::index::{coindex_certificate_check, find_coindex_certificate, hind_bound, HindBound, IndexError};

/// Largest edge the Zhu product enumerates.
pub const ZHU_EDGE_CAP: usize = 6;
/// Largest edge count any constructor here will materialize.
pub const EDGE_COUNT_CAP: usize = 2_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HyperError {
    #[error("empty edge")]
    EmptyEdge,
    #[error("edge vertex {vertex} out of range (n = {n})")]
    VertexOutOfRange { vertex: u32, n: usize },
    #[error("hypergraph is not {0}-uniform")]
    NotUniform(usize),
    #[error("{what} {size} exceeds the cap {cap}")]
    CapExceeded { what: &'static str, size: usize, cap: usize },
    #[error("r = {r} must satisfy 2 <= r <= p = {p}")]
    BadR { r: usize, p: u32 },
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("invalid parameters: {0}")]
    BadParams(String),
    #[error("generator is not an order-preserving free permutation of order p: {0}")]
    BadPosetAction(String),
    #[error("coloring is not proper: edge {0:?} is monochromatic")]
    NotProperColoring(Vec<u32>),
    #[error("posets carry different primes {0} and {1}")]
    PMismatch(u32, u32),
    #[error("invalid co-index certificate: {0}")]
    BadCertificate(String),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Action(#[from] ActionError),
    #[error(transparent)]
    Index(#[from] IndexError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypergraphJson {
    pub n: usize,
    pub edges: Vec<Vec<u32>>,
}

/// Hypergraph on `0..n`; edges are stored sorted and deduplicated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<Vec<u32>>,
}

impl Hypergraph {
    pub fn new(n: usize, edges: &[Vec<u32>]) -> Result<Self, HyperError> {
        let mut set = BTreeSet::new();
        for e in edges {
            if e.is_empty() {
                return Err(HyperError::EmptyEdge);
            }
            if let Some(&v) = e.iter().find(|&&v| v as usize >= n) {
                return Err(HyperError::VertexOutOfRange { vertex: v, n });
            }
            let mut s = e.clone();
            s.sort_unstable();
            s.dedup();
            set.insert(s);
        }
        Ok(Hypergraph {
            n,
            edges: set.into_iter().collect(),
        })
    }

    pub fn from_graph(g: &Graph) -> Self {
        let edges: Vec<Vec<u32>> = g.edges().map(|(a, b)| vec![a, b]).collect();
        Hypergraph::new(g.n(), &edges).expect("graph edges are valid")
    }

    pub fn from_json(json: &HypergraphJson) -> Result<Self, HyperError> {
        Hypergraph::new(json.n, &json.edges)
    }

    pub fn to_json(&self) -> HypergraphJson {
        HypergraphJson {
            n: self.n,
            edges: self.edges.clone(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Vec<u32>] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Membership of an arbitrary vertex list, taken as a set.
    pub fn has_edge(&self, e: &[u32]) -> bool {
        let mut s = e.to_vec();
        s.sort_unstable();
        s.dedup();
        self.edges.binary_search(&s).is_ok()
    }

    pub fn uniformity(&self) -> Option<usize> {
        let r = self.edges.first()?.len();
        self.edges.iter().all(|e| e.len() == r).then_some(r)
    }

    fn require_uniform(&self, r: usize) -> Result<(), HyperError> {
        if self.edges.iter().all(|e| e.len() == r) {
            Ok(())
        } else {
            Err(HyperError::NotUniform(r))
        }
    }

    /// No edge is monochromatic.
    pub fn is_proper_coloring(&self, colors: &[u32]) -> bool {
        self.first_monochromatic(colors).is_none()
    }

    fn first_monochromatic(&self, colors: &[u32]) -> Option<&Vec<u32>> {
        self.edges.iter().find(|e| e.iter().all(|&v| colors[v as usize] == colors[e[0] as usize]))
    }

    /// `f` maps every edge onto an edge of `other`.
    pub fn is_homomorphism_to(&self, other: &Hypergraph, f: &[u32]) -> bool {
        f.len() == self.n
            && self.edges.iter().all(|e| {
                let img: Vec<u32> = e.iter().map(|&v| f[v as usize]).collect();
                other.has_edge(&img)
            })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum HyperChromatic {
    Finite(usize),
    /// Some edge is a single vertex.
    Infinite,
}

impl HyperChromatic {
    pub fn finite(self) -> Option<usize> {
        match self {
            HyperChromatic::Finite(k) => Some(k),
            HyperChromatic::Infinite => None,
        }
    }
}

impl std::fmt::Display for HyperChromatic {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            HyperChromatic::Finite(k) => write!(f, "{k}"),
            HyperChromatic::Infinite => write!(f, "inf"),
        }
    }
}

pub fn hyper_chromatic_number(h: &Hypergraph) -> Result<HyperChromatic, HyperError> {
    hyper_chromatic_number_with_cap(h, DEFAULT_VERTEX_CAP)
}

pub fn hyper_chromatic_number_with_cap(h: &Hypergraph, cap: usize) -> Result<HyperChromatic, HyperError> {
    Ok(optimal_hyper_coloring(h, cap)?.map_or(HyperChromatic::Infinite, |(k, _)| HyperChromatic::Finite(k)))
}

/// Minimum proper coloring by backtracking over `k = 1, 2, …`; `None` when
/// a singleton edge makes every coloring improper.
pub fn optimal_hyper_coloring(h: &Hypergraph, cap: usize) -> Result<Option<(usize, Vec<u32>)>, HyperError> {
    if h.n > cap {
        return Err(HyperError::CapExceeded {
            what: "vertex count",
            size: h.n,
            cap,
        });
    }
    if h.edges.iter().any(|e| e.len() == 1) {
        return Ok(None);
    }
    if h.n == 0 {
        return Ok(Some((0, Vec::new())));
    }
    let mut deg = vec![0usize; h.n];
    for e in &h.edges {
        for &v in e {
            deg[v as usize] += 1;
        }
    }
    let mut order: Vec<u32> = (0..h.n as u32).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(deg[v as usize]), v));
    let mut pos = vec![0usize; h.n];
    for (i, &v) in order.iter().enumerate() {
        pos[v as usize] = i;
    }
    // closing[i]: edges whose last vertex in the order is order[i]
    let mut closing: Vec<Vec<usize>> = vec![Vec::new(); h.n];
    for (j, e) in h.edges.iter().enumerate() {
        let last = e.iter().map(|&v| pos[v as usize]).max().expect("nonempty");
        closing[last].push(j);
    }
    for k in 1..=h.n as u32 {
        let mut colors = vec![u32::MAX; h.n];
        if hyper_rec(h, &order, &closing, 0, k, 0, &mut colors) {
            return Ok(Some((k as usize, colors)));
        }
    }
    unreachable!("distinct colors are proper once singleton edges are excluded")
}

fn hyper_rec(h: &Hypergraph, order: &[u32], closing: &[Vec<usize>], i: usize, k: u32, used: u32, colors: &mut [u32]) -> bool {
    if i == order.len() {
        return true;
    }
    let v = order[i] as usize;
    for c in 0..(used + 1).min(k) {
        colors[v] = c;
        let ok = closing[i]
            .iter()
            .all(|&j| h.edges[j].iter().any(|&w| colors[w as usize] != c));
        if ok && hyper_rec(h, order, closing, i + 1, k, used.max(c + 1), colors) {
            return true;
        }
    }
    colors[v] = u32::MAX;
    false
}

/// Greedy proper coloring, only defined without singleton edges.
pub fn greedy_hyper_coloring(h: &Hypergraph) -> Option<Vec<u32>> {
    if h.edges.iter().any(|e| e.len() == 1) {
        return None;
    }
    let mut by_last: Vec<Vec<usize>> = vec![Vec::new(); h.n];
    for (j, e) in h.edges.iter().enumerate() {
        by_last[*e.last().expect("nonempty") as usize].push(j);
    }
    let mut colors = vec![0u32; h.n];
    for v in 0..h.n {
        let c = (0u32..)
            .find(|&c| {
                by_last[v]
                    .iter()
                    .all(|&j| h.edges[j][..h.edges[j].len() - 1].iter().any(|&w| colors[w as usize] != c))
            })
            .expect("unbounded");
        colors[v] = c;
    }
    Some(colors)
}

/// The Zhu product; vertex `(u, v)` is `u · n2 + v`. Edges of size above
/// [`ZHU_EDGE_CAP`] are not enumerated: each contains a smaller edge, so the
/// chromatic number is unaffected.
pub fn zhu_product(h1: &Hypergraph, h2: &Hypergraph) -> Result<Hypergraph, HyperError> {
    let n2 = h2.n as u32;
    let mut out = Vec::new();
    for e1 in &h1.edges {
        for e2 in &h2.edges {
            let lo = e1.len().max(e2.len());
            if lo > ZHU_EDGE_CAP {
                return Err(HyperError::CapExceeded {
                    what: "zhu edge size",
                    size: lo,
                    cap: ZHU_EDGE_CAP,
                });
            }
            let cells: Vec<(u32, u32)> = e1.iter().flat_map(|&u| e2.iter().map(move |&v| (u, v))).collect();
            let hi = cells.len().min(ZHU_EDGE_CAP);
            for s in lo..=hi {
                for pick in combinations(cells.len(), s) {
                    let (mut m1, mut m2) = (0u64, 0u64);
                    for &i in &pick {
                        let (u, v) = cells[i as usize];
                        m1 |= 1 << e1.iter().position(|&x| x == u).expect("member");
                        m2 |= 1 << e2.iter().position(|&x| x == v).expect("member");
                    }
                    if m1.count_ones() as usize == e1.len() && m2.count_ones() as usize == e2.len() {
                        out.push(pick.iter().map(|&i| cells[i as usize].0 * n2 + cells[i as usize].1).collect());
                        if out.len() > EDGE_COUNT_CAP {
                            return Err(HyperError::CapExceeded {
                                what: "zhu edge count",
                                size: out.len(),
                                cap: EDGE_COUNT_CAP,
                            });
                        }
                    }
                }
            }
        }
    }
    Hypergraph::new(h1.n * h2.n, &out)
}

/// Vertices are the `k`-subsets of `0..n` in lexicographic order; edges are
/// `r`-sets of pairwise disjoint subsets.
pub fn kneser_hypergraph(n: usize, k: usize, r: usize) -> Result<Hypergraph, HyperError> {
    if k == 0 || r < 2 || n < r * k {
        return Err(HyperError::BadParams(format!("need k >= 1, r >= 2 and n >= rk, got n={n} k={k} r={r}")));
    }
    let subsets = combinations(n, k);
    let masks: Vec<u64> = subsets.iter().map(|s| s.iter().fold(0, |m, &v| m | 1 << v)).collect();
    let mut edges = Vec::new();
    fn go(masks: &[u64], r: usize, start: usize, used: u64, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for i in start..masks.len() {
            if masks[i] & used == 0 {
                cur.push(i as u32);
                go(masks, r, i + 1, used | masks[i], cur, out);
                cur.pop();
            }
        }
    }
    go(&masks, r, 0, 0, &mut Vec::new(), &mut edges);
    Hypergraph::new(subsets.len(), &edges)
}

/// The complete `r`-uniform hypergraph on `n` vertices.
pub fn complete_uniform(n: usize, r: usize) -> Hypergraph {
    Hypergraph::new(n, &combinations(n, r)).expect("valid")
}

/// `B_edge` restricted to simplices of dimension `≤ max_dim`.
#[derive(Debug, Clone)]
pub struct BEdge {
    pub action: FreeAction,
    /// The ordered tuple of each vertex, lexicographically sorted.
    pub tuples: Vec<Vec<u32>>,
    pub complete: bool,
}

/// Pairwise disjoint projections and every cross-selection an edge.
pub fn is_b_edge_simplex(h: &Hypergraph, r: usize, tuples: &[Vec<u32>]) -> bool {
    let parts: Vec<BTreeSet<u32>> = (0..r).map(|l| tuples.iter().map(|t| t[l]).collect()).collect();
    for l in 0..r {
        for s in l + 1..r {
            if !parts[l].is_disjoint(&parts[s]) {
                return false;
            }
        }
    }
    let parts: Vec<Vec<u32>> = parts.into_iter().map(|p| p.into_iter().collect()).collect();
    let mut pick = vec![0usize; r];
    loop {
        let sel: Vec<u32> = (0..r).map(|l| parts[l][pick[l]]).collect();
        if !h.has_edge(&sel) {
            return false;
        }
        let mut l = 0;
        while l < r {
            pick[l] += 1;
            if pick[l] < parts[l].len() {
                break;
            }
            pick[l] = 0;
            l += 1;
        }
        if l == r {
            return true;
        }
    }
}

/// Maximal boxes `A_1 × … × A_r` of pairwise disjoint vertex sets all of
/// whose selections are edges.
fn maximal_boxes(h: &Hypergraph, r: usize) -> Vec<Vec<Vec<u32>>> {
    let mut all: Vec<Vec<u64>> = Vec::new();
    // assign each vertex to one of the parts or to none
    fn go(h: &Hypergraph, r: usize, v: usize, parts: &mut Vec<Vec<u32>>, all: &mut Vec<Vec<u64>>) {
        if v == h.n {
            if parts.iter().all(|p| !p.is_empty()) {
                all.push(parts.iter().map(|p| p.iter().fold(0u64, |m, &x| m | 1 << x)).collect());
            }
            return;
        }
        go(h, r, v + 1, parts, all);
        for l in 0..r {
            parts[l].push(v as u32);
            if selections_ok(h, parts, l) {
                go(h, r, v + 1, parts, all);
            }
            parts[l].pop();
        }
    }
    // new selections all use the last vertex of part `l`
    fn selections_ok(h: &Hypergraph, parts: &[Vec<u32>], l: usize) -> bool {
        if parts.iter().any(Vec::is_empty) {
            return true;
        }
        let r = parts.len();
        let mut pick = vec![0usize; r];
        pick[l] = parts[l].len() - 1;
        loop {
            let sel: Vec<u32> = (0..r).map(|s| parts[s][pick[s]]).collect();
            if !h.has_edge(&sel) {
                return false;
            }
            let mut s = 0;
            while s < r {
                if s == l {
                    s += 1;
                    continue;
                }
                pick[s] += 1;
                if pick[s] < parts[s].len() {
                    break;
                }
                pick[s] = 0;
                s += 1;
            }
            if s >= r {
                return true;
            }
        }
    }
    let mut parts = vec![Vec::new(); r];
    go(h, r, 0, &mut parts, &mut all);
    let valid: Vec<Vec<u64>> = all
        .into_iter()
        .filter(|b| {
            let parts: Vec<Vec<u32>> = b.iter().map(|&m| (0..64).filter(|&x| m >> x & 1 == 1).collect()).collect();
            box_ok(h, &parts)
        })
        .collect();
    let maximal: Vec<&Vec<u64>> = valid
        .iter()
        .filter(|b| {
            !valid
                .iter()
                .any(|c| c != *b && c.iter().zip(b.iter()).all(|(&x, &y)| x & y == y))
        })
        .collect();
    maximal
        .into_iter()
        .map(|b| b.iter().map(|&m| (0..64).filter(|&x| m >> x & 1 == 1).collect()).collect())
        .collect()
}

fn box_ok(h: &Hypergraph, parts: &[Vec<u32>]) -> bool {
    let r = parts.len();
    let mut pick = vec![0usize; r];
    loop {
        let sel: Vec<u32> = (0..r).map(|l| parts[l][pick[l]]).collect();
        if !h.has_edge(&sel) {
            return false;
        }
        let mut l = 0;
        while l < r {
            pick[l] += 1;
            if pick[l] < parts[l].len() {
                break;
            }
            pick[l] = 0;
            l += 1;
        }
        if l == r {
            return true;
        }
    }
}

fn check_r_prime(r: usize) -> Result<(), HyperError> {
    if r < 2 || !is_prime(r as u64) {
        return Err(HyperError::NotPrime(r as u32));
    }
    Ok(())
}

pub fn b_edge_complex(h: &Hypergraph, r: usize) -> Result<FreeAction, HyperError> {
    let b = b_edge_complex_up_to(h, r, DEFAULT_DIM_CAP)?;
    if !b.complete {
        return Err(ComplexError::DimCapExceeded {
            dim: DEFAULT_DIM_CAP + 1,
            cap: DEFAULT_DIM_CAP,
        }
        .into());
    }
    Ok(b.action)
}

/// The generator shifts coordinates: `(x_1, …, x_r) ↦ (x_r, x_1, …, x_{r-1})`.
pub fn b_edge_complex_up_to(h: &Hypergraph, r: usize, max_dim: usize) -> Result<BEdge, HyperError> {
    check_r_prime(r)?;
    h.require_uniform(r)?;
    if h.edges.is_empty() {
        return Err(ComplexError::Empty.into());
    }
    if h.n > 64 {
        return Err(HyperError::CapExceeded {
            what: "vertex count",
            size: h.n,
            cap: 64,
        });
    }
    let mut tuples: Vec<Vec<u32>> = Vec::new();
    for e in &h.edges {
        permutations(e, &mut tuples);
    }
    tuples.sort_unstable();
    let index: HashMap<&[u32], u32> = tuples.iter().enumerate().map(|(i, t)| (t.as_slice(), i as u32)).collect();
    let mut complete = true;
    let mut maximal = Vec::new();
    for parts in maximal_boxes(h, r) {
        let mut face = Vec::new();
        let mut pick = vec![0usize; r];
        loop {
            let t: Vec<u32> = (0..r).map(|l| parts[l][pick[l]]).collect();
            face.push(index[t.as_slice()]);
            let mut l = 0;
            while l < r {
                pick[l] += 1;
                if pick[l] < parts[l].len() {
                    break;
                }
                pick[l] = 0;
                l += 1;
            }
            if l == r {
                break;
            }
        }
        let members: Vec<Vec<u32>> = face.iter().map(|&i| tuples[i as usize].clone()).collect();
        assert!(is_b_edge_simplex(h, r, &members), "box {parts:?} violates the simplex condition");
        if face.len() > max_dim + 1 {
            complete = false;
        }
        maximal.push(face);
    }
    let labels: Vec<String> = tuples
        .iter()
        .map(|t| t.iter().map(u32::to_string).collect::<Vec<_>>().join(","))
        .collect();
    let k = SComplex::from_maximal_faces_up_to(labels, &maximal, max_dim)?;
    let generator: Vec<u32> = tuples
        .iter()
        .map(|t| {
            let mut s = Vec::with_capacity(r);
            s.push(t[r - 1]);
            s.extend_from_slice(&t[..r - 1]);
            index[s.as_slice()]
        })
        .collect();
    let action = validate_action(k, generator, r as u32)?;
    Ok(BEdge {
        action,
        tuples,
        complete,
    })
}

fn permutations(e: &[u32], out: &mut Vec<Vec<u32>>) {
    fn go(rest: &mut Vec<u32>, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest.is_empty() {
            out.push(cur.clone());
            return;
        }
        for i in 0..rest.len() {
            let v = rest.remove(i);
            cur.push(v);
            go(rest, cur, out);
            cur.pop();
            rest.insert(i, v);
        }
    }
    go(&mut e.to_vec(), &mut Vec::new(), out);
}

fn ceil_div(a: usize, b: usize) -> usize {
    a.div_ceil(b)
}

/// `hind B_edge(H)`, truncated where the bound from a proper coloring with
/// `c` colors forces vanishing: degree `(c - 1)(r - 1)`, or the dimension
/// cap, whichever is smaller. Below the forced degree the answer may only be
/// a lower bound.
pub fn b_edge_hind(h: &Hypergraph, r: usize) -> Result<HindBound, HyperError> {
    let colors = greedy_hyper_coloring(h).ok_or(HyperError::BadParams("singleton edge".into()))?;
    let c = colors.iter().max().map_or(1, |&m| m as usize + 1);
    let c = match optimal_hyper_coloring(h, DEFAULT_VERTEX_CAP) {
        Ok(Some((k, _))) => k.min(c),
        _ => c,
    };
    let through = ((c.max(2) - 1) * (r - 1)).min(DEFAULT_DIM_CAP).max(1);
    let b = b_edge_complex_up_to(h, r, through)?;
    Ok(hind_bound(&b.action, through)?)
}

/// A poset with an order-preserving free `Z/p` action.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PosetAction {
    poset: GPoset,
    p: u32,
    generator: Vec<u32>,
}

impl PosetAction {
    pub fn new(poset: GPoset, p: u32, generator: Vec<u32>) -> Result<Self, HyperError> {
        if !is_prime(p as u64) {
            return Err(HyperError::NotPrime(p));
        }
        let n = poset.len();
        if generator.len() != n {
            return Err(HyperError::BadPosetAction(format!("{} images for {n} elements", generator.len())));
        }
        let mut seen = vec![false; n];
        for &g in &generator {
            if g as usize >= n || std::mem::replace(&mut seen[g as usize], true) {
                return Err(HyperError::BadPosetAction("not a permutation".into()));
            }
        }
        for x in 0..n as u32 {
            let mut y = x;
            for k in 1..=p {
                y = generator[y as usize];
                if (y == x) != (k == p) {
                    return Err(HyperError::BadPosetAction(format!("element {x} has orbit length {k}")));
                }
            }
            for &b in poset.above(x) {
                if !poset.less(generator[x as usize], generator[b as usize]) {
                    return Err(HyperError::BadPosetAction(format!("relation {x} < {b} not preserved")));
                }
            }
        }
        Ok(PosetAction { poset, p, generator })
    }

    /// Face poset of a free complex with the induced action.
    pub fn face_poset_of(a: &FreeAction) -> Self {
        let k = a.complex();
        let off = k.face_offsets();
        let mut generator = Vec::with_capacity(k.total_faces());
        for d in 0..=k.dim() {
            for i in 0..k.face_count(d) {
                generator.push((off[d] + a.face_image(d, i).0) as u32);
            }
        }
        PosetAction::new(k.face_poset(), a.p(), generator).expect("free complexes give free face posets")
    }

    pub fn poset(&self) -> &GPoset {
        &self.poset
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn generator(&self) -> &[u32] {
        &self.generator
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poset.is_empty()
    }

    fn power(&self, k: u32) -> Vec<u32> {
        let mut out: Vec<u32> = (0..self.len() as u32).collect();
        for _ in 0..k {
            out = out.iter().map(|&x| self.generator[x as usize]).collect();
        }
        out
    }

    /// `(P × Q, diagonal action)`; element `(a, b)` is `a · |Q| + b`.
    pub fn product(&self, other: &PosetAction) -> Result<PosetAction, HyperError> {
        if self.p != other.p {
            return Err(HyperError::PMismatch(self.p, other.p));
        }
        let m = other.len() as u32;
        let generator = (0..self.len() as u32)
            .flat_map(|a| (0..m).map(move |b| (a, b)))
            .map(|(a, b)| self.generator[a as usize] * m + other.generator[b as usize])
            .collect();
        PosetAction::new(self.poset.product(&other.poset), self.p, generator)
    }

    /// The order complex with the induced action, through dimension `max_dim`.
    pub fn order_complex_action(&self, max_dim: usize) -> Result<FreeAction, HyperError> {
        let k = order_complex_up_to(&self.poset, max_dim);
        Ok(validate_action(k, self.generator.clone(), self.p)?)
    }

    /// `(orbit representative with least color, exponent)` of each element:
    /// `x = g^exponent · rep`.
    fn representatives(&self, colors: &[u32]) -> Vec<(u32, u32)> {
        let mut out = vec![(u32::MAX, 0); self.len()];
        for x in 0..self.len() as u32 {
            if out[x as usize].0 != u32::MAX {
                continue;
            }
            let mut orbit = vec![x];
            for _ in 1..self.p {
                orbit.push(self.generator[*orbit.last().expect("nonempty") as usize]);
            }
            let rep_pos = (0..orbit.len())
                .min_by_key(|&i| (colors[orbit[i] as usize], orbit[i]))
                .expect("nonempty");
            for (i, &y) in orbit.iter().enumerate() {
                let e = (i + orbit.len() - rep_pos) % orbit.len();
                out[y as usize] = (orbit[rep_pos], e as u32);
            }
        }
        out
    }
}

fn check_r(r: usize, p: u32) -> Result<(), HyperError> {
    if r < 2 || r > p as usize {
        return Err(HyperError::BadR { r, p });
    }
    Ok(())
}

/// `r`-sets in which every pair `x ≠ y` has `x` comparable to `g^k · y` for
/// some `1 ≤ k < p`.
pub fn compatibility_hypergraph(pa: &PosetAction, r: usize) -> Result<Hypergraph, HyperError> {
    check_r(r, pa.p)?;
    let n = pa.len();
    let pows: Vec<Vec<u32>> = (1..pa.p).map(|k| pa.power(k)).collect();
    let mut compat = vec![Vec::new(); n];
    for x in 0..n as u32 {
        for y in x + 1..n as u32 {
            if pows.iter().any(|pw| pa.poset.comparable(x, pw[y as usize])) {
                compat[x as usize].push(y);
            }
        }
    }
    let mut edges = Vec::new();
    fn cliques(compat: &[Vec<u32>], r: usize, cand: &[u32], cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) -> bool {
        if cur.len() == r {
            out.push(cur.clone());
            return out.len() <= EDGE_COUNT_CAP;
        }
        for (i, &v) in cand.iter().enumerate() {
            let next: Vec<u32> = cand[i + 1..]
                .iter()
                .copied()
                .filter(|w| compat[v as usize].binary_search(w).is_ok())
                .collect();
            if next.len() + cur.len() + 1 < r {
                continue;
            }
            cur.push(v);
            if !cliques(compat, r, &next, cur, out) {
                return false;
            }
            cur.pop();
        }
        true
    }
    let all: Vec<u32> = (0..n as u32).collect();
    if !cliques(&compat, r, &all, &mut Vec::new(), &mut edges) {
        return Err(HyperError::CapExceeded {
            what: "compatibility edge count",
            size: edges.len(),
            cap: EDGE_COUNT_CAP,
        });
    }
    Hypergraph::new(n, &edges)
}

/// Color count `n`, the block count `m = n - ⌈p/(r-1)⌉ + 1`, and the checks
/// on the induced map `λ(g^k · x') = (k, c(x'))`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LambdaReport {
    pub colors: usize,
    pub m: usize,
    /// Image `(group exponent, color block)` of each poset element.
    pub map: Vec<(u32, u32)>,
    pub min_orbit_colors: usize,
    pub simplicial: bool,
    pub equivariant: bool,
    /// `hind Δ(P)` against `m(r-1) - 1`, the dimension of the target.
    pub hind: HindBound,
    pub target_dim: usize,
    pub holds: bool,
}

/// Builds `λ : Δ(P) → (σ^{(r-2)})^{*m}` from a proper coloring `c` of the
/// compatibility hypergraph with `n_colors` colors.
pub fn coloring_to_equivariant_map(
    pa: &PosetAction,
    colors: &[u32],
    n_colors: usize,
    r: usize,
) -> Result<LambdaReport, HyperError> {
    check_r(r, pa.p)?;
    let c = compatibility_hypergraph(pa, r)?;
    if colors.len() != pa.len() || colors.iter().any(|&x| x as usize >= n_colors) {
        return Err(HyperError::BadParams("coloring has wrong length or too many colors".into()));
    }
    if let Some(e) = c.first_monochromatic(colors) {
        return Err(HyperError::NotProperColoring(e.clone()));
    }
    let p = pa.p as usize;
    let q = ceil_div(p, r - 1);
    let reps = pa.representatives(colors);
    let mut min_orbit_colors = usize::MAX;
    for x in 0..pa.len() {
        if reps[x].0 == x as u32 {
            let mut orbit_colors = BTreeSet::new();
            let mut y = x as u32;
            for _ in 0..p {
                orbit_colors.insert(colors[y as usize]);
                y = pa.generator[y as usize];
            }
            min_orbit_colors = min_orbit_colors.min(orbit_colors.len());
        }
    }
    if pa.is_empty() {
        min_orbit_colors = q;
    }
    let m = (n_colors + 1).saturating_sub(q);
    let map: Vec<(u32, u32)> = reps.iter().map(|&(rep, e)| (e, colors[rep as usize])).collect();
    let in_range = map.iter().all(|&(_, b)| (b as usize) < m);
    let equivariant = (0..pa.len()).all(|x| {
        let (e, b) = map[x];
        map[pa.generator[x] as usize] == ((e + 1) % pa.p, b)
    });
    // chains are simplices; a block may use at most r - 1 group elements.
    // A violating chain has a violating subchain of r ≤ p elements, so the
    // truncation loses nothing.
    let delta = pa.order_complex_action(DEFAULT_DIM_CAP)?;
    let simplicial = in_range
        && delta.complex().maximal_faces().iter().all(|chain| {
            let mut per_block: HashMap<u32, BTreeSet<u32>> = HashMap::new();
            for &x in chain {
                let (e, b) = map[x as usize];
                per_block.entry(b).or_default().insert(e);
            }
            per_block.values().all(|s| s.len() < r)
        });
    let target_dim = (m * (r - 1)).saturating_sub(1);
    let hind = hind_bound(&delta, DEFAULT_DIM_CAP)?;
    let holds = simplicial && equivariant && min_orbit_colors >= q && hind.lower() <= target_dim;
    Ok(LambdaReport {
        colors: n_colors,
        m,
        map,
        min_orbit_colors,
        simplicial,
        equivariant,
        hind,
        target_dim,
        holds,
    })
}

/// `⌈(hind Δ(P) + 1)/(r-1)⌉ + ⌈p/(r-1)⌉ - 1`, using a lower bound for the
/// index when `Δ(P)` exceeds the dimension cap.
pub fn thm2_bound(pa: &PosetAction, r: usize) -> Result<usize, HyperError> {
    check_r(r, pa.p)?;
    let delta = pa.order_complex_action(DEFAULT_DIM_CAP)?;
    let h = hind_bound(&delta, DEFAULT_DIM_CAP)?.lower();
    Ok(ceil_div(h + 1, r - 1) + ceil_div(pa.p as usize, r - 1) - 1)
}

/// `1 + ⌈(hind B_edge(H) + 1)/(p-1)⌉`.
pub fn afl_bound(h: &Hypergraph, p: u32) -> Result<usize, HyperError> {
    check_r_prime(p as usize)?;
    h.require_uniform(p as usize)?;
    let x = b_edge_hind(h, p as usize)?.lower();
    Ok(afl_formula(x, p))
}

fn afl_formula(hind: usize, p: u32) -> usize {
    1 + ceil_div(hind + 1, p as usize - 1)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Lem9Report {
    /// Image of each simplex of `B_edge(H)`, in face-poset order.
    pub psi: Vec<u32>,
    pub compat_edges: usize,
    pub homomorphism: bool,
    /// An optimal coloring of `H` pulled back along `ψ` is proper.
    pub pullback_proper: bool,
}

/// `ψ(T) = min π_1(T)` from the compatibility hypergraph of the face poset
/// of `B_edge(H)` to `H`.
pub fn lem9_homomorphism(h: &Hypergraph, r: usize) -> Result<Lem9Report, HyperError> {
    let b = b_edge_complex_up_to(h, r, DEFAULT_DIM_CAP)?;
    if !b.complete {
        return Err(HyperError::CapExceeded {
            what: "B_edge dimension",
            size: DEFAULT_DIM_CAP + 1,
            cap: DEFAULT_DIM_CAP,
        });
    }
    let k = b.action.complex();
    let pa = PosetAction::face_poset_of(&b.action);
    let mut psi = Vec::with_capacity(pa.len());
    for d in 0..=k.dim() {
        for f in k.faces(d) {
            psi.push(f.iter().map(|&v| b.tuples[v as usize][0]).min().expect("nonempty"));
        }
    }
    let c = compatibility_hypergraph(&pa, r)?;
    let homomorphism = c.is_homomorphism_to(h, &psi);
    let pullback_proper = match optimal_hyper_coloring(h, DEFAULT_VERTEX_CAP)? {
        Some((_, col)) => c.is_proper_coloring(&psi.iter().map(|&v| col[v as usize]).collect::<Vec<_>>()),
        None => false,
    };
    Ok(Lem9Report {
        psi,
        compat_edges: c.edge_count(),
        homomorphism,
        pullback_proper,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Lem7Report {
    pub vertices: usize,
    pub product_edges: usize,
    pub missing: usize,
    pub holds: bool,
}

/// Every edge of `C_{P×Q}` has projections that are edges of `C_P` and `C_Q`.
pub fn lem7_inclusion_check(pa: &PosetAction, qa: &PosetAction, r: usize) -> Result<Lem7Report, HyperError> {
    if pa.p != qa.p {
        return Err(HyperError::PMismatch(pa.p, qa.p));
    }
    let prod = pa.product(qa)?;
    let cpq = compatibility_hypergraph(&prod, r)?;
    let cp = compatibility_hypergraph(pa, r)?;
    let cq = compatibility_hypergraph(qa, r)?;
    let m = qa.len() as u32;
    let missing = cpq
        .edges()
        .iter()
        .filter(|e| {
            let first: Vec<u32> = e.iter().map(|&x| x / m).collect();
            let second: Vec<u32> = e.iter().map(|&x| x % m).collect();
            !(cp.has_edge(&first) && cq.has_edge(&second))
        })
        .count();
    Ok(Lem7Report {
        vertices: prod.len(),
        product_edges: cpq.edge_count(),
        missing,
        holds: missing == 0 && prod.len() == pa.len() * qa.len(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Cor11 {
    Bound(usize),
    /// Neither `m` odd nor `(p-1) ∤ m`; the bound from `m - 1` still holds.
    ConditionFailed { fallback: usize },
}

impl Cor11 {
    pub fn value(self) -> usize {
        match self {
            Cor11::Bound(b) | Cor11::ConditionFailed { fallback: b } => b,
        }
    }
}

/// Lower bound for `χ` of the Zhu product from `m = min hind B_edge(H_i)`.
pub fn cor11_bound(h1: &Hypergraph, h2: &Hypergraph, p: u32) -> Result<Cor11, HyperError> {
    check_r_prime(p as usize)?;
    h1.require_uniform(p as usize)?;
    h2.require_uniform(p as usize)?;
    let exact = |h: &Hypergraph| -> Result<usize, HyperError> {
        match b_edge_hind(h, p as usize)? {
            HindBound::Exact(x) => Ok(x),
            HindBound::AtLeast(x) => Err(HyperError::CapExceeded {
                what: "B_edge truncation at degree",
                size: x,
                cap: DEFAULT_DIM_CAP,
            }),
        }
    };
    let m = exact(h1)?.min(exact(h2)?);
    Ok(cor11_formula(m, p))
}

pub fn cor11_formula(m: usize, p: u32) -> Cor11 {
    let q = p as usize - 1;
    if m % 2 == 1 || m % q != 0 {
        Cor11::Bound(afl_formula(m, p))
    } else {
        Cor11::ConditionFailed {
            fallback: afl_formula(m.saturating_sub(1), p),
        }
    }
}

/// An equivariant simplicial map `E_kG → B_edge(H)`, as a vertex map.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoindexCertificate {
    pub k: usize,
    pub map: Vec<u32>,
}

fn check_certificate(h: &Hypergraph, p: u32, cert: &CoindexCertificate) -> Result<(), HyperError> {
    let b = b_edge_complex_up_to(h, p as usize, cert.k.max(1))?;
    let e = e_k_g(p, cert.k);
    let f = SimplicialMap::new(e.complex(), b.action.complex(), cert.map.clone())
        .map_err(|err| HyperError::BadCertificate(err.to_string()))?;
    if !coindex_certificate_check(&b.action, cert.k, &f)? {
        return Err(HyperError::BadCertificate("map is not equivariant".into()));
    }
    Ok(())
}

/// `1 + ⌈(min k_i + 1)/(p-1)⌉` after checking both certificates.
pub fn cor10_bound(
    h1: &Hypergraph,
    h2: &Hypergraph,
    p: u32,
    certificates: (&CoindexCertificate, &CoindexCertificate),
) -> Result<usize, HyperError> {
    check_r_prime(p as usize)?;
    h1.require_uniform(p as usize)?;
    h2.require_uniform(p as usize)?;
    check_certificate(h1, p, certificates.0)?;
    check_certificate(h2, p, certificates.1)?;
    Ok(afl_formula(certificates.0.k.min(certificates.1.k), p))
}

/// Largest `k ≤ limit` whose certificate the search finds.
pub fn find_b_edge_certificate(h: &Hypergraph, p: u32, limit: usize) -> Result<Option<CoindexCertificate>, HyperError> {
    let b = b_edge_complex_up_to(h, p as usize, limit.max(1))?;
    let mut best = None;
    for k in 0..=limit {
        match find_coindex_certificate(&b.action, k) {
            Some(map) => best = Some(CoindexCertificate { k, map }),
            None => break,
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::actions::e_k_g;
    use crate::graphs::{categorical_product, chromatic_number_with_cap, complete, cycle, petersen};
    use crate::index::hind;

    fn factorial(n: usize) -> usize {
        (1..=n).product()
    }

    #[test]
    fn construction_and_validation() {
        assert!(matches!(Hypergraph::new(3, &[vec![]]), Err(HyperError::EmptyEdge)));
        assert!(Hypergraph::new(3, &[vec![0, 3]]).is_err());
        let h = Hypergraph::new(4, &[vec![2, 0, 1], vec![0, 1, 2]]).unwrap();
        assert_eq!(h.edges(), &[vec![0, 1, 2]]);
        assert!(h.has_edge(&[1, 2, 0]));
        assert_eq!(h.uniformity(), Some(3));
    }

    #[test]
    fn chromatic_examples() {
        let h = Hypergraph::new(3, &[vec![0, 1, 2]]).unwrap();
        assert_eq!(hyper_chromatic_number(&h).unwrap(), HyperChromatic::Finite(2));
        let s = Hypergraph::new(3, &[vec![0, 1], vec![2]]).unwrap();
        assert_eq!(hyper_chromatic_number(&s).unwrap(), HyperChromatic::Infinite);
        let k = kneser_hypergraph(5, 1, 3).unwrap();
        assert_eq!(hyper_chromatic_number(&k).unwrap(), HyperChromatic::Finite(3));
        // ⌈(n - r(k-1))/(r-1)⌉
        for (n, kk, r) in [(5usize, 1usize, 3usize), (7, 1, 3), (6, 2, 2), (7, 2, 3)] {
            let expect: usize = (n - r * (kk - 1)).div_ceil(r - 1);
            let got = hyper_chromatic_number(&kneser_hypergraph(n, kk, r).unwrap()).unwrap();
            assert_eq!(got, HyperChromatic::Finite(expect), "n={n} k={kk} r={r}");
        }
        let g = Hypergraph::from_graph(&petersen());
        assert_eq!(hyper_chromatic_number(&g).unwrap(), HyperChromatic::Finite(3));
    }

    #[test]
    fn kneser_counts() {
        assert_eq!(Hypergraph::from_graph(&petersen()), kneser_hypergraph(5, 2, 2).unwrap());
        for (n, k, r) in [(6, 1, 3), (6, 2, 3), (7, 2, 3), (8, 2, 4)] {
            let h = kneser_hypergraph(n, k, r).unwrap();
            let count = factorial(n) / (factorial(k).pow(r as u32) * factorial(n - r * k) * factorial(r));
            assert_eq!(h.edge_count(), count);
        }
        assert!(matches!(kneser_hypergraph(5, 2, 3), Err(HyperError::BadParams(_))));
    }

    #[test]
    fn zhu_product_examples() {
        let k2 = Hypergraph::from_graph(&complete(2));
        let z = zhu_product(&k2, &k2).unwrap();
        let sizes: BTreeSet<usize> = z.edges().iter().map(Vec::len).collect();
        assert_eq!(sizes, [2, 3, 4].into_iter().collect());
        let unit = Hypergraph::new(1, &[vec![0]]).unwrap();
        let h = kneser_hypergraph(5, 1, 3).unwrap();
        let zu = zhu_product(&h, &unit).unwrap();
        assert_eq!(zu, h);
        for e in z.edges() {
            let a: Vec<u32> = e.iter().map(|&x| x / 2).collect();
            let b: Vec<u32> = e.iter().map(|&x| x % 2).collect();
            assert!(k2.has_edge(&a) && k2.has_edge(&b));
        }
    }

    #[test]
    fn zhu_matches_categorical_chromatic() {
        let gs = [complete(2), complete(3), cycle(5).unwrap(), cycle(4).unwrap()];
        for a in &gs {
            for b in &gs {
                let z = zhu_product(&Hypergraph::from_graph(a), &Hypergraph::from_graph(b)).unwrap();
                let zc = hyper_chromatic_number_with_cap(&z, 25).unwrap();
                let gc = chromatic_number_with_cap(&categorical_product(a, b), 25).unwrap();
                assert_eq!(zc, HyperChromatic::Finite(gc));
            }
        }
    }

    #[test]
    fn b_edge_examples() {
        let one = Hypergraph::new(2, &[vec![0, 1]]).unwrap();
        let b = b_edge_complex(&one, 2).unwrap();
        assert_eq!(b.complex().f_vector(), vec![2]);
        assert_eq!(hind(&b).unwrap().hind, 0);
        let k3 = Hypergraph::from_graph(&complete(3));
        let b = b_edge_complex(&k3, 2).unwrap();
        assert_eq!(b.complex().vertex_count(), 6);
        assert_eq!(hind(&b).unwrap().hind, 1);
        let k43 = complete_uniform(4, 3);
        let b = b_edge_complex_up_to(&k43, 3, 6).unwrap();
        assert_eq!(b.tuples.len(), 4 * 6);
        assert!(matches!(b_edge_complex(&k43, 2), Err(HyperError::NotUniform(2))));
        assert!(matches!(b_edge_complex(&complete_uniform(4, 4), 4), Err(HyperError::NotPrime(4))));
    }

    #[test]
    fn afl_examples() {
        let k3 = Hypergraph::from_graph(&complete(3));
        assert_eq!(afl_bound(&k3, 2).unwrap(), 3);
        for h in [complete_uniform(4, 3), kneser_hypergraph(5, 1, 3).unwrap()] {
            let chi = hyper_chromatic_number(&h).unwrap().finite().unwrap();
            assert!(afl_bound(&h, 3).unwrap() <= chi);
        }
        assert_eq!(afl_bound(&kneser_hypergraph(5, 1, 3).unwrap(), 3).unwrap(), 3);
    }

    #[test]
    fn poset_action_checks() {
        let anti = GPoset::antichain(4);
        assert!(PosetAction::new(anti.clone(), 2, vec![1, 0, 3, 2]).is_ok());
        assert!(PosetAction::new(anti.clone(), 2, vec![0, 1, 3, 2]).is_err());
        assert!(PosetAction::new(GPoset::chain(2), 2, vec![1, 0]).is_err());
        let pa = PosetAction::new(anti, 2, vec![1, 0, 3, 2]).unwrap();
        assert!(matches!(compatibility_hypergraph(&pa, 3), Err(HyperError::BadR { r: 3, p: 2 })));
    }

    #[test]
    fn compatibility_examples() {
        // four Z/3 orbits' worth of incomparable elements: only orbit-mates
        // are compatible
        let anti = PosetAction::new(GPoset::antichain(6), 3, vec![1, 2, 0, 4, 5, 3]).unwrap();
        let c = compatibility_hypergraph(&anti, 2).unwrap();
        assert_eq!(c.edge_count(), 6);
        let pa = PosetAction::face_poset_of(&e_k_g(2, 1));
        let c = compatibility_hypergraph(&pa, 2).unwrap();
        assert!(c.edge_count() > 0);
        // r = 2: compatible pairs
        for e in c.edges() {
            let (x, y) = (e[0], e[1]);
            assert!(pa.poset().comparable(x, pa.generator()[y as usize]));
        }
        let chi = hyper_chromatic_number(&c).unwrap().finite().unwrap();
        assert!(thm2_bound(&pa, 2).unwrap() <= chi);
    }

    #[test]
    fn thm2_arithmetic() {
        let pa = PosetAction::face_poset_of(&e_k_g(2, 3));
        assert_eq!(thm2_bound(&pa, 2).unwrap(), 3 + 2);
        let pa3 = PosetAction::face_poset_of(&e_k_g(3, 1));
        // ⌈(1+1)/2⌉ + ⌈3/2⌉ - 1
        assert_eq!(thm2_bound(&pa3, 3).unwrap(), 2);
    }

    #[test]
    fn lambda_from_oracle_coloring() {
        for (a, r) in [(e_k_g(2, 1), 2), (e_k_g(3, 1), 2), (e_k_g(3, 1), 3)] {
            let pa = PosetAction::face_poset_of(&a);
            let c = compatibility_hypergraph(&pa, r).unwrap();
            let (n, col) = optimal_hyper_coloring(&c, 64).unwrap().unwrap();
            let rep = coloring_to_equivariant_map(&pa, &col, n, r).unwrap();
            assert!(rep.simplicial && rep.equivariant && rep.holds, "{rep:?}");
            assert!(rep.min_orbit_colors >= (a.p() as usize).div_ceil(r - 1));
        }
        let pa = PosetAction::face_poset_of(&e_k_g(2, 1));
        let zeros = vec![0; pa.len()];
        assert!(matches!(
            coloring_to_equivariant_map(&pa, &zeros, 1, 2),
            Err(HyperError::NotProperColoring(_))
        ));
    }

    #[test]
    fn lem9_examples() {
        let r = lem9_homomorphism(&Hypergraph::from_graph(&complete(3)), 2).unwrap();
        assert!(r.homomorphism && r.pullback_proper);
        let r = lem9_homomorphism(&complete_uniform(4, 3), 3).unwrap();
        assert!(r.homomorphism && r.pullback_proper);
    }

    #[test]
    fn lem7_examples() {
        let pa = PosetAction::face_poset_of(&e_k_g(2, 1));
        let r = lem7_inclusion_check(&pa, &pa, 2).unwrap();
        assert!(r.holds);
        assert_eq!(r.vertices, pa.len() * pa.len());
        let qa = PosetAction::face_poset_of(&e_k_g(3, 0));
        assert!(matches!(lem7_inclusion_check(&pa, &qa, 2), Err(HyperError::PMismatch(2, 3))));
    }

    #[test]
    fn cor11_arithmetic() {
        assert_eq!(cor11_formula(1, 2), Cor11::Bound(3));
        assert_eq!(cor11_formula(2, 2), Cor11::ConditionFailed { fallback: 3 });
        assert_eq!(cor11_formula(2, 3), Cor11::ConditionFailed { fallback: 2 });
        assert_eq!(cor11_formula(3, 3), Cor11::Bound(3));
        assert_eq!(cor11_formula(2, 5), Cor11::Bound(2));
    }

    #[test]
    fn cor10_with_certificates() {
        // the hexagon B_edge(K3) receives no simplicial map from the 4-cycle
        let k3 = Hypergraph::from_graph(&complete(3));
        let c3 = find_b_edge_certificate(&k3, 2, 3).unwrap().unwrap();
        assert_eq!(c3.k, 0);
        let k4 = Hypergraph::from_graph(&complete(4));
        let c4 = find_b_edge_certificate(&k4, 2, 3).unwrap().unwrap();
        assert!(c4.k >= 1);
        assert_eq!(cor10_bound(&k4, &k4, 2, (&c4, &c4)).unwrap(), 1 + c4.k + 1);
        assert!(cor10_bound(&k4, &k4, 2, (&c4, &c4)).unwrap() <= 4);
        assert_eq!(cor10_bound(&k3, &k4, 2, (&c3, &c4)).unwrap(), 2);
        let mut bad = c4.clone();
        bad.map[1] = bad.map[0];
        assert!(matches!(cor10_bound(&k4, &k4, 2, (&bad, &c4)), Err(HyperError::BadCertificate(_))));
    }
}
