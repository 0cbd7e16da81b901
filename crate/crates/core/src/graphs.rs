//! Graphs, exact coloring, box complexes and the homological chromatic
//! number.

use std::collections::{BTreeSet, HashSet, VecDeque};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::actions::{product_action_up_to, validate_action, ActionError, FreeAction};
use crate::complexes::{ComplexError, SComplex, DEFAULT_DIM_CAP};
use crate::corpus::combinations;
use crate::index::{hind_bound, HindBound, IndexError};

pub const DEFAULT_VERTEX_CAP: usize = 24;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("edge endpoint {vertex} out of range (n = {n})")]
    EndpointOutOfRange { vertex: u32, n: usize },
    #[error("loop at vertex {0}")]
    Loop(u32),
    #[error("{n} vertices exceeds the cap {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("graph has no edges, so its box complex is empty")]
    EmptyComplex,
    #[error("invalid parameters: {0}")]
    BadParams(String),
    #[error("vertex map is not a graph homomorphism")]
    NotHomomorphism,
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Action(#[from] ActionError),
    #[error(transparent)]
    Index(#[from] IndexError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[u32; 2]>,
}

/// Simple undirected graph on `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(u32, u32)>,
    adj: Vec<Vec<u32>>,
    // bit masks, only for n ≤ 128
    masks: Vec<u128>,
}

impl Graph {
    /// Duplicate edges and both orientations are merged.
    pub fn new(n: usize, edges: &[[u32; 2]]) -> Result<Self, GraphError> {
        let mut set = BTreeSet::new();
        for &[a, b] in edges {
            for v in [a, b] {
                if v as usize >= n {
                    return Err(GraphError::EndpointOutOfRange { vertex: v, n });
                }
            }
            if a == b {
                return Err(GraphError::Loop(a));
            }
            set.insert((a.min(b), a.max(b)));
        }
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in &set {
            adj[a as usize].push(b);
            adj[b as usize].push(a);
        }
        for l in &mut adj {
            l.sort_unstable();
        }
        let masks = if n <= 128 {
            adj.iter().map(|l| l.iter().fold(0u128, |m, &v| m | 1 << v)).collect()
        } else {
            Vec::new()
        };
        Ok(Graph { n, edges: set, adj, masks })
    }

    pub fn from_json(json: &GraphJson) -> Result<Self, GraphError> {
        Graph::new(json.n, &json.edges)
    }

    pub fn to_json(&self) -> GraphJson {
        GraphJson {
            n: self.n,
            edges: self.edges.iter().map(|&(a, b)| [a, b]).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.edges.iter().copied()
    }

    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.adj[v as usize]
    }

    pub fn degree(&self, v: u32) -> usize {
        self.adj[v as usize].len()
    }

    pub fn adjacent(&self, a: u32, b: u32) -> bool {
        self.edges.contains(&(a.min(b), a.max(b)))
    }

    pub fn is_proper_coloring(&self, colors: &[u32]) -> bool {
        colors.len() == self.n && self.edges.iter().all(|&(a, b)| colors[a as usize] != colors[b as usize])
    }

    /// `f` maps edges to edges.
    pub fn is_homomorphism_to(&self, other: &Graph, f: &[u32]) -> bool {
        f.len() == self.n
            && f.iter().all(|&v| (v as usize) < other.n)
            && self.edges.iter().all(|&(a, b)| other.adjacent(f[a as usize], f[b as usize]))
    }
}

pub fn complete(n: usize) -> Graph {
    let edges: Vec<[u32; 2]> = combinations(n, 2).into_iter().map(|e| [e[0], e[1]]).collect();
    Graph::new(n, &edges).expect("valid")
}

/// The `n`-cycle for `n ≥ 3`.
pub fn cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::BadParams(format!("cycle needs n >= 3, got {n}")));
    }
    let edges: Vec<[u32; 2]> = (0..n as u32).map(|i| [i, (i + 1) % n as u32]).collect();
    Graph::new(n, &edges)
}

/// Vertices are the `k`-subsets of `0..n` in lexicographic order; disjoint
/// subsets are adjacent.
pub fn kneser_graph(n: usize, k: usize) -> Result<Graph, GraphError> {
    if k == 0 || n < 2 * k {
        return Err(GraphError::BadParams(format!("kneser graph needs k >= 1 and n >= 2k, got n={n} k={k}")));
    }
    let subsets = combinations(n, k);
    let masks: Vec<u64> = subsets.iter().map(|s| s.iter().fold(0, |m, &v| m | 1 << v)).collect();
    let mut edges = Vec::new();
    for i in 0..masks.len() {
        for j in i + 1..masks.len() {
            if masks[i] & masks[j] == 0 {
                edges.push([i as u32, j as u32]);
            }
        }
    }
    Graph::new(subsets.len(), &edges)
}

pub fn petersen() -> Graph {
    kneser_graph(5, 2).expect("valid")
}

/// `(a, b) ~ (c, d)` iff `a ~ c` and `b ~ d`; vertex `(a, b)` is `a · n2 + b`.
pub fn categorical_product(h1: &Graph, h2: &Graph) -> Graph {
    let n2 = h2.n as u32;
    let mut edges = Vec::new();
    for (a, c) in h1.edges() {
        for (b, d) in h2.edges() {
            edges.push([a * n2 + b, c * n2 + d]);
            edges.push([a * n2 + d, c * n2 + b]);
        }
    }
    Graph::new(h1.n * h2.n, &edges).expect("valid")
}

/// Exact chromatic number with the default vertex cap.
pub fn chromatic_number(h: &Graph) -> Result<usize, GraphError> {
    chromatic_number_with_cap(h, DEFAULT_VERTEX_CAP)
}

pub fn chromatic_number_with_cap(h: &Graph, cap: usize) -> Result<usize, GraphError> {
    Ok(optimal_coloring_with_cap(h, cap)?.0)
}

/// A coloring with the minimum number of colors, found by trying
/// `k = 1, 2, …` with backtracking. Vertices are visited by decreasing
/// degree; a vertex may open at most one new color, so vertex 0 of the order
/// always gets color 0.
pub fn optimal_coloring_with_cap(h: &Graph, cap: usize) -> Result<(usize, Vec<u32>), GraphError> {
    if h.n > cap {
        return Err(GraphError::CapExceeded { n: h.n, cap });
    }
    if h.n == 0 {
        return Ok((0, Vec::new()));
    }
    let mut order: Vec<u32> = (0..h.n as u32).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(h.degree(v)), v));
    for k in 1..=h.n {
        let mut colors = vec![u32::MAX; h.n];
        if color_rec(h, &order, 0, k as u32, 0, &mut colors) {
            return Ok((k, colors));
        }
    }
    unreachable!("n colors always suffice")
}

fn color_rec(h: &Graph, order: &[u32], i: usize, k: u32, used: u32, colors: &mut [u32]) -> bool {
    if i == order.len() {
        return true;
    }
    let v = order[i];
    let limit = (used + 1).min(k);
    for c in 0..limit {
        if h.neighbors(v).iter().all(|&w| colors[w as usize] != c) {
            colors[v as usize] = c;
            if color_rec(h, order, i + 1, k, used.max(c + 1), colors) {
                return true;
            }
        }
    }
    colors[v as usize] = u32::MAX;
    false
}

/// Saturation-degree greedy coloring; gives an upper bound on `χ`.
pub fn dsatur_coloring(h: &Graph) -> Vec<u32> {
    let mut colors = vec![u32::MAX; h.n];
    let mut seen: Vec<BTreeSet<u32>> = vec![BTreeSet::new(); h.n];
    for _ in 0..h.n {
        let v = (0..h.n)
            .filter(|&v| colors[v] == u32::MAX)
            .max_by_key(|&v| (seen[v].len(), h.adj[v].len(), std::cmp::Reverse(v)))
            .expect("uncolored vertex remains");
        let c = (0..).find(|c| !seen[v].contains(c)).expect("unbounded");
        colors[v] = c;
        for &w in &h.adj[v] {
            seen[w as usize].insert(c);
        }
    }
    colors
}

/// The swap complex of a graph, restricted to simplices of dimension
/// `≤ max_dim`. Vertex `(v, 1)` is `2i` and `(v, 2)` is `2i + 1`, where `v`
/// is the `i`-th non-isolated vertex.
#[derive(Debug, Clone)]
pub struct BoxComplex {
    pub action: FreeAction,
    /// Graph vertex of each box-complex vertex pair.
    pub vertex_of: Vec<u32>,
    /// Whether every simplex of the full box complex was built.
    pub complete: bool,
}

/// Common neighbors of a vertex set, as a bit mask.
fn common_neighbors(h: &Graph, set: u128) -> u128 {
    let mut m = if h.n == 128 { u128::MAX } else { (1u128 << h.n) - 1 };
    let mut s = set;
    while s != 0 {
        let v = s.trailing_zeros() as usize;
        m &= h.masks[v];
        s &= s - 1;
    }
    m
}

/// Maximal simplices `A × {1} ∪ CN(A) × {2}` with `A = CN(CN(A))`, as pairs
/// of bit masks, in a deterministic order.
fn maximal_box_pairs(h: &Graph) -> Vec<(u128, u128)> {
    let mut seen = HashSet::new();
    let mut queue = VecDeque::new();
    let mut out = Vec::new();
    let close = |s: u128| -> Option<(u128, u128)> {
        let b = common_neighbors(h, s);
        if b == 0 {
            return None;
        }
        Some((common_neighbors(h, b), b))
    };
    for v in 0..h.n {
        if let Some(c) = close(1 << v) {
            if seen.insert(c.0) {
                queue.push_back(c);
            }
        }
    }
    while let Some((a, b)) = queue.pop_front() {
        out.push((a, b));
        for v in 0..h.n {
            if a >> v & 1 == 1 {
                continue;
            }
            if let Some(c) = close(a | 1 << v) {
                if seen.insert(c.0) {
                    queue.push_back(c);
                }
            }
        }
    }
    out.sort_unstable();
    out
}

pub fn box_complex(h: &Graph) -> Result<FreeAction, GraphError> {
    let b = box_complex_up_to(h, DEFAULT_DIM_CAP)?;
    if !b.complete {
        return Err(ComplexError::DimCapExceeded {
            dim: DEFAULT_DIM_CAP + 1,
            cap: DEFAULT_DIM_CAP,
        }
        .into());
    }
    Ok(b.action)
}

pub fn box_complex_up_to(h: &Graph, max_dim: usize) -> Result<BoxComplex, GraphError> {
    if h.edge_count() == 0 {
        return Err(GraphError::EmptyComplex);
    }
    if h.n > 128 {
        return Err(GraphError::CapExceeded { n: h.n, cap: 128 });
    }
    let active: Vec<u32> = (0..h.n as u32).filter(|&v| h.degree(v) > 0).collect();
    let mut slot = vec![u32::MAX; h.n];
    for (i, &v) in active.iter().enumerate() {
        slot[v as usize] = i as u32;
    }
    let pairs = maximal_box_pairs(h);
    let mut complete = true;
    let maximal: Vec<Vec<u32>> = pairs
        .iter()
        .map(|&(a, b)| {
            let mut f = Vec::new();
            for v in 0..h.n {
                if a >> v & 1 == 1 {
                    f.push(2 * slot[v]);
                }
                if b >> v & 1 == 1 {
                    f.push(2 * slot[v] + 1);
                }
            }
            if f.len() > max_dim + 1 {
                complete = false;
            }
            f
        })
        .collect();
    let labels: Vec<String> = active.iter().flat_map(|v| [format!("{v}+"), format!("{v}-")]).collect();
    let k = SComplex::from_maximal_faces_up_to(labels, &maximal, max_dim)?;
    let generator: Vec<u32> = (0..2 * active.len() as u32).map(|x| x ^ 1).collect();
    let action = validate_action(k, generator, 2)?;
    let vertex_of = active.iter().flat_map(|&v| [v, v]).collect();
    Ok(BoxComplex {
        action,
        vertex_of,
        complete,
    })
}

/// `hind B(H)`, from a skeleton just large enough: any proper coloring with
/// `c` colors bounds the index by `c - 2`, so the class in degree `c - 1`
/// must vanish.
pub fn box_hind(h: &Graph) -> Result<usize, GraphError> {
    let colors = dsatur_coloring(h);
    let c = colors.iter().max().map_or(0, |&m| m as usize + 1);
    let through = c.saturating_sub(1).max(1);
    let b = box_complex_up_to(h, through)?;
    match hind_bound(&b.action, through)? {
        HindBound::Exact(x) => Ok(x),
        HindBound::AtLeast(_) => unreachable!("a proper coloring bounds the index"),
    }
}

/// `hind B(H) + 2`.
pub fn homological_chromatic_number(h: &Graph) -> Result<usize, GraphError> {
    Ok(box_hind(h)? + 2)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HedetniemiReport {
    pub h_chi_1: usize,
    pub h_chi_2: usize,
    pub h_chi_product: usize,
    /// `hind(B(H1) × B(H2))`, which should match `h_chi_product - 2`.
    pub box_product_hind: HindBound,
    pub holds: bool,
}

/// Checks `h-χ(H1 × H2) = min(h-χ(H1), h-χ(H2))` and that the product of box
/// complexes has the same index as the box complex of the product.
pub fn verify_hom_hedetniemi(h1: &Graph, h2: &Graph) -> Result<HedetniemiReport, GraphError> {
    verify_hom_hedetniemi_with_cap(h1, h2, DEFAULT_VERTEX_CAP + 1)
}

pub fn verify_hom_hedetniemi_with_cap(h1: &Graph, h2: &Graph, vertex_cap: usize) -> Result<HedetniemiReport, GraphError> {
    let n = h1.n * h2.n;
    if n > vertex_cap {
        return Err(GraphError::CapExceeded { n, cap: vertex_cap });
    }
    let prod = categorical_product(h1, h2);
    let (x1, x2) = (box_hind(h1)?, box_hind(h2)?);
    let xp = box_hind(&prod)?;
    let m = x1.min(x2);
    let b1 = box_complex_up_to(h1, m + 1)?;
    let b2 = box_complex_up_to(h2, m + 1)?;
    let bp = product_action_up_to(&b1.action, &b2.action, m + 1)?;
    let box_product_hind = hind_bound(&bp, m + 1)?;
    let holds = xp == m && box_product_hind == HindBound::Exact(m);
    Ok(HedetniemiReport {
        h_chi_1: x1 + 2,
        h_chi_2: x2 + 2,
        h_chi_product: xp + 2,
        box_product_hind,
        holds,
    })
}

/// Induced equivariant map `B(H) → B(H')` of a homomorphism, `(v, i) ↦ (f(v), i)`.
pub fn box_map(h: &Graph, target: &Graph, f: &[u32]) -> Result<Vec<u32>, GraphError> {
    if !h.is_homomorphism_to(target, f) {
        return Err(GraphError::NotHomomorphism);
    }
    let slot = |g: &Graph| {
        let mut s = vec![u32::MAX; g.n];
        let mut i = 0;
        for v in 0..g.n {
            if g.degree(v as u32) > 0 {
                s[v] = i;
                i += 1;
            }
        }
        s
    };
    let (s, t) = (slot(h), slot(target));
    let mut map = Vec::new();
    for v in 0..h.n {
        if s[v] != u32::MAX {
            let w = t[f[v] as usize];
            map.push(2 * w);
            map.push(2 * w + 1);
        }
    }
    Ok(map)
}
