//! Finite abstract simplicial complexes and posets.
//!
//! Faces are stored as sorted vertex lists, grouped by dimension, in
//! lexicographic order. The vertex index order is the global orientation
//! convention for every chain-level formula in the crate.

use indexmap::IndexSet;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// A face, as a strictly increasing list of vertex indices.
pub type Simplex = Vec<u32>;

pub const DEFAULT_DIM_CAP: usize = 12;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ComplexError {
    #[error("no faces given")]
    Empty,
    #[error("empty face in input")]
    EmptyFace,
    #[error("vertex {vertex} out of range (vertex count {count})")]
    VertexOutOfRange { vertex: u32, count: usize },
    #[error("dimension {dim} exceeds the cap {cap}")]
    DimCapExceeded { dim: usize, cap: usize },
    #[error("face {face:?} is missing its subface {missing:?}")]
    NotClosed { face: Simplex, missing: Simplex },
    #[error("relation is not a strict partial order (cycle through element {0})")]
    NotAntisymmetric(usize),
    #[error("vertices {0} and {1} share a face but have the same order key")]
    OrderNotTotalOnFace(u32, u32),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SComplex {
    labels: Vec<String>,
    faces: Vec<IndexSet<Simplex>>,
}

fn subsets_of(face: &[u32], out: &mut Vec<Simplex>) {
    subsets_up_to(face, face.len(), out);
}

/// Nonempty subsets with at most `k` elements, each sorted like `face`.
fn subsets_up_to(face: &[u32], k: usize, out: &mut Vec<Simplex>) {
    fn go(face: &[u32], start: usize, k: usize, cur: &mut Vec<u32>, out: &mut Vec<Simplex>) {
        for i in start..face.len() {
            cur.push(face[i]);
            out.push(cur.clone());
            if cur.len() < k {
                go(face, i + 1, k, cur, out);
            }
            cur.pop();
        }
    }
    if k > 0 {
        go(face, 0, k, &mut Vec::with_capacity(k), out);
    }
}

impl SComplex {
    /// Assemble from a downward-closed family already split by dimension.
    /// Vertices absent from `faces[0]` are added as isolated points.
    pub(crate) fn from_closed_faces(labels: Vec<String>, faces: Vec<Vec<Simplex>>) -> Self {
        let n = labels.len();
        let mut by_dim: Vec<Vec<Simplex>> = faces;
        if by_dim.is_empty() {
            by_dim.push(Vec::new());
        }
        by_dim[0] = (0..n as u32).map(|v| vec![v]).collect();
        while by_dim.len() > 1 && by_dim.last().is_some_and(|l| l.is_empty()) {
            by_dim.pop();
        }
        let faces = by_dim
            .into_iter()
            .map(|mut level| {
                level.sort_unstable();
                level.dedup();
                level.into_iter().collect::<IndexSet<_>>()
            })
            .collect();
        SComplex { labels, faces }
    }

    /// Downward closure of the given faces, with the default dimension cap.
    pub fn from_maximal_faces(labels: Vec<String>, maximal: &[Vec<u32>]) -> Result<Self, ComplexError> {
        Self::from_maximal_faces_with_cap(labels, maximal, DEFAULT_DIM_CAP)
    }

    pub fn from_maximal_faces_with_cap(
        labels: Vec<String>,
        maximal: &[Vec<u32>],
        cap: usize,
    ) -> Result<Self, ComplexError> {
        if maximal.is_empty() || labels.is_empty() {
            return Err(ComplexError::Empty);
        }
        let n = labels.len();
        let mut by_dim: Vec<Vec<Simplex>> = Vec::new();
        let mut scratch = Vec::new();
        for face in maximal {
            if face.is_empty() {
                return Err(ComplexError::EmptyFace);
            }
            if let Some(&v) = face.iter().find(|&&v| v as usize >= n) {
                return Err(ComplexError::VertexOutOfRange { vertex: v, count: n });
            }
            let mut f = face.clone();
            f.sort_unstable();
            f.dedup();
            if f.len() - 1 > cap {
                return Err(ComplexError::DimCapExceeded { dim: f.len() - 1, cap });
            }
            scratch.clear();
            subsets_of(&f, &mut scratch);
            for s in scratch.drain(..) {
                let d = s.len() - 1;
                if by_dim.len() <= d {
                    by_dim.resize(d + 1, Vec::new());
                }
                by_dim[d].push(s);
            }
        }
        Ok(Self::from_closed_faces(labels, by_dim))
    }

    /// The `max_dim`-skeleton of the complex generated by `maximal`, without
    /// enumerating higher faces.
    pub fn from_maximal_faces_up_to(labels: Vec<String>, maximal: &[Vec<u32>], max_dim: usize) -> Result<Self, ComplexError> {
        if maximal.is_empty() || labels.is_empty() {
            return Err(ComplexError::Empty);
        }
        let n = labels.len();
        let mut by_dim: Vec<Vec<Simplex>> = vec![Vec::new(); max_dim + 1];
        let mut scratch = Vec::new();
        for face in maximal {
            if face.is_empty() {
                return Err(ComplexError::EmptyFace);
            }
            if let Some(&v) = face.iter().find(|&&v| v as usize >= n) {
                return Err(ComplexError::VertexOutOfRange { vertex: v, count: n });
            }
            let mut f = face.clone();
            f.sort_unstable();
            f.dedup();
            subsets_up_to(&f, max_dim + 1, &mut scratch);
            for s in scratch.drain(..) {
                by_dim[s.len() - 1].push(s);
            }
        }
        Ok(Self::from_closed_faces(labels, by_dim))
    }

    pub fn from_json(json: &ComplexJson) -> Result<Self, ComplexError> {
        Self::from_maximal_faces(json.labels.clone(), &json.maximal_faces)
    }

    pub fn to_json(&self) -> ComplexJson {
        ComplexJson {
            labels: self.labels.clone(),
            maximal_faces: self.maximal_faces(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn relabeled(&self, labels: Vec<String>) -> SComplex {
        assert_eq!(labels.len(), self.vertex_count());
        SComplex {
            labels,
            faces: self.faces.clone(),
        }
    }

    pub fn label(&self, v: u32) -> &str {
        &self.labels[v as usize]
    }

    pub fn dim(&self) -> usize {
        self.faces.len() - 1
    }

    pub fn face_count(&self, d: usize) -> usize {
        self.faces.get(d).map_or(0, IndexSet::len)
    }

    pub fn total_faces(&self) -> usize {
        self.faces.iter().map(IndexSet::len).sum()
    }

    pub fn f_vector(&self) -> Vec<usize> {
        self.faces.iter().map(IndexSet::len).collect()
    }

    /// The `d`-faces in lexicographic order.
    pub fn faces(&self, d: usize) -> impl ExactSizeIterator<Item = &Simplex> + '_ {
        static EMPTY: std::sync::OnceLock<IndexSet<Simplex>> = std::sync::OnceLock::new();
        self.faces
            .get(d)
            .unwrap_or_else(|| EMPTY.get_or_init(IndexSet::new))
            .iter()
    }

    pub fn face(&self, d: usize, i: usize) -> &Simplex {
        &self.faces[d][i]
    }

    pub fn index_of(&self, face: &[u32]) -> Option<usize> {
        if face.is_empty() {
            return None;
        }
        self.faces.get(face.len() - 1)?.get_index_of(face)
    }

    /// Membership for an arbitrary (not necessarily sorted) vertex list.
    pub fn contains(&self, face: &[u32]) -> bool {
        let mut f = face.to_vec();
        f.sort_unstable();
        f.dedup();
        self.index_of(&f).is_some()
    }

    pub fn maximal_faces(&self) -> Vec<Simplex> {
        let mut covered: Vec<Vec<bool>> = self.faces.iter().map(|l| vec![false; l.len()]).collect();
        for d in 1..self.faces.len() {
            for f in &self.faces[d] {
                for skip in 0..f.len() {
                    let sub: Simplex = f.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &v)| v).collect();
                    if let Some(k) = self.faces[d - 1].get_index_of(&sub) {
                        covered[d - 1][k] = true;
                    }
                }
            }
        }
        let mut out = Vec::new();
        for (d, level) in self.faces.iter().enumerate() {
            for (k, f) in level.iter().enumerate() {
                if !covered[d][k] {
                    out.push(f.clone());
                }
            }
        }
        out
    }

    /// Full scan that every codimension-one subface of every face is present.
    pub fn check_closed(&self) -> Result<(), ComplexError> {
        for d in 0..self.faces.len() {
            for f in &self.faces[d] {
                if let Some(&v) = f.iter().find(|&&v| v as usize >= self.vertex_count()) {
                    return Err(ComplexError::VertexOutOfRange {
                        vertex: v,
                        count: self.vertex_count(),
                    });
                }
                if d == 0 {
                    continue;
                }
                for skip in 0..f.len() {
                    let sub: Simplex = f.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &v)| v).collect();
                    if self.faces[d - 1].get_index_of(&sub).is_none() {
                        return Err(ComplexError::NotClosed {
                            face: f.clone(),
                            missing: sub,
                        });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.faces
            .iter()
            .enumerate()
            .map(|(d, l)| if d % 2 == 0 { l.len() as i64 } else { -(l.len() as i64) })
            .sum()
    }

    /// All faces of dimension at most `d`.
    pub fn skeleton(&self, d: usize) -> SComplex {
        SComplex {
            labels: self.labels.clone(),
            faces: self.faces.iter().take(d + 1).cloned().collect(),
        }
    }

    /// Join: the vertices of `self` come first, then those of `other`.
    pub fn join(&self, other: &SComplex) -> SComplex {
        let shift = self.vertex_count() as u32;
        let mut labels = self.labels.clone();
        labels.extend(other.labels.iter().cloned());
        let top = self.dim() + other.dim() + 1;
        let mut by_dim: Vec<Vec<Simplex>> = vec![Vec::new(); top + 1];
        let empty: Simplex = Vec::new();
        let left = std::iter::once(&empty).chain(self.faces.iter().flatten());
        for a in left {
            let right = std::iter::once(&empty).chain(other.faces.iter().flatten());
            for b in right {
                if a.is_empty() && b.is_empty() {
                    continue;
                }
                let mut f = a.clone();
                f.extend(b.iter().map(|&v| v + shift));
                by_dim[f.len() - 1].push(f);
            }
        }
        SComplex::from_closed_faces(labels, by_dim)
    }

    /// Disjoint union with `other`'s vertices shifted after `self`'s.
    pub fn disjoint_union(&self, other: &SComplex) -> SComplex {
        let shift = self.vertex_count() as u32;
        let mut labels = self.labels.clone();
        labels.extend(other.labels.iter().cloned());
        let top = self.dim().max(other.dim());
        let mut by_dim: Vec<Vec<Simplex>> = vec![Vec::new(); top + 1];
        for (d, level) in self.faces.iter().enumerate() {
            by_dim[d].extend(level.iter().cloned());
        }
        for (d, level) in other.faces.iter().enumerate() {
            by_dim[d].extend(level.iter().map(|f| f.iter().map(|&v| v + shift).collect()));
        }
        SComplex::from_closed_faces(labels, by_dim)
    }

    fn face_label(&self, f: &[u32]) -> String {
        let parts: Vec<&str> = f.iter().map(|&v| self.label(v)).collect();
        format!("{{{}}}", parts.join(","))
    }

    /// Position of every face in the face-poset numbering (dimension-major).
    pub(crate) fn face_offsets(&self) -> Vec<usize> {
        let mut off = Vec::with_capacity(self.faces.len());
        let mut acc = 0;
        for l in &self.faces {
            off.push(acc);
            acc += l.len();
        }
        off
    }

    /// Faces ordered by inclusion. Elements are numbered dimension-major, in
    /// the same order as [`SComplex::faces`].
    pub fn face_poset(&self) -> GPoset {
        let off = self.face_offsets();
        let total = self.total_faces();
        let mut labels = Vec::with_capacity(total);
        let mut above: Vec<Vec<u32>> = vec![Vec::new(); total];
        let mut scratch = Vec::new();
        for (d, level) in self.faces.iter().enumerate() {
            for (k, f) in level.iter().enumerate() {
                labels.push(self.face_label(f));
                let me = (off[d] + k) as u32;
                scratch.clear();
                subsets_of(f, &mut scratch);
                for s in &scratch {
                    if s.len() == f.len() {
                        continue;
                    }
                    let sd = s.len() - 1;
                    let idx = off[sd] + self.faces[sd].get_index_of(s).expect("closed");
                    above[idx].push(me);
                }
            }
        }
        GPoset::from_closed_above(labels, above)
    }

    pub fn barycentric_subdivision(&self) -> SComplex {
        order_complex(&self.face_poset())
    }

    /// Image of a face under a vertex map, sorted and deduplicated.
    pub fn image_of(face: &[u32], vertex_map: &[u32]) -> Simplex {
        let mut img: Simplex = face.iter().map(|&v| vertex_map[v as usize]).collect();
        img.sort_unstable();
        img.dedup();
        img
    }
}

/// Serialised form of a complex: labels plus maximal faces.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexJson {
    pub labels: Vec<String>,
    pub maximal_faces: Vec<Vec<u32>>,
}

fn numbered(prefix: &str, n: usize) -> Vec<String> {
    (0..n).map(|i| format!("{prefix}{i}")).collect()
}

pub fn point() -> SComplex {
    SComplex::from_closed_faces(vec!["v0".into()], vec![vec![]])
}

/// `n` isolated points.
pub fn discrete(n: usize) -> SComplex {
    SComplex::from_closed_faces(numbered("v", n), vec![vec![]])
}

/// The solid `n`-simplex.
pub fn simplex(n: usize) -> SComplex {
    SComplex::from_maximal_faces_with_cap(numbered("v", n + 1), &[(0..=n as u32).collect()], n)
        .expect("valid simplex")
}

/// Boundary of the `n`-simplex, a triangulated `(n-1)`-sphere.
pub fn simplex_boundary(n: usize) -> SComplex {
    assert!(n >= 1);
    let maximal: Vec<Vec<u32>> = (0..=n as u32)
        .map(|skip| (0..=n as u32).filter(|&v| v != skip).collect())
        .collect();
    SComplex::from_maximal_faces_with_cap(numbered("v", n + 1), &maximal, n).expect("valid boundary")
}

/// Boundary of the `n`-dimensional cross-polytope: vertices `±e_i` with
/// `+e_i = 2i` and `-e_i = 2i + 1`; faces are the subsets without an
/// antipodal pair. Topologically `S^{n-1}`.
pub fn cross_polytope_boundary(n: usize) -> SComplex {
    assert!(n >= 1);
    let mut labels = Vec::with_capacity(2 * n);
    for i in 0..n {
        labels.push(format!("+e{i}"));
        labels.push(format!("-e{i}"));
    }
    let facet_count = 1usize << n;
    let maximal: Vec<Vec<u32>> = (0..facet_count)
        .map(|signs| (0..n).map(|i| (2 * i + (signs >> i & 1)) as u32).collect())
        .collect();
    SComplex::from_maximal_faces_with_cap(labels, &maximal, n).expect("valid cross-polytope")
}

/// The cycle graph on `n ≥ 3` vertices as a 1-complex.
pub fn cycle(n: usize) -> SComplex {
    assert!(n >= 3);
    let maximal: Vec<Vec<u32>> = (0..n as u32).map(|i| vec![i, (i + 1) % n as u32]).collect();
    SComplex::from_maximal_faces(numbered("v", n), &maximal).expect("valid cycle")
}

/// The path with `n ≥ 2` vertices.
pub fn path(n: usize) -> SComplex {
    assert!(n >= 2);
    let maximal: Vec<Vec<u32>> = (0..n as u32 - 1).map(|i| vec![i, i + 1]).collect();
    SComplex::from_maximal_faces(numbered("v", n), &maximal).expect("valid path")
}

/// The minimal 6-vertex triangulation of the real projective plane.
pub fn rp2_minimal() -> SComplex {
    let tris = [
        [0, 1, 2],
        [0, 2, 3],
        [0, 3, 4],
        [0, 4, 5],
        [0, 1, 5],
        [1, 2, 4],
        [2, 3, 5],
        [1, 3, 4],
        [1, 3, 5],
        [2, 4, 5],
    ];
    let maximal: Vec<Vec<u32>> = tris.iter().map(|t| t.to_vec()).collect();
    SComplex::from_maximal_faces(numbered("v", 6), &maximal).expect("valid RP2")
}

/// A finite poset stored as transitively closed strict up-sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GPoset {
    labels: Vec<String>,
    above: Vec<Vec<u32>>,
    below: Vec<Vec<u32>>,
}

impl GPoset {
    /// `above[a]` must already be the full strict up-set of `a`.
    pub(crate) fn from_closed_above(labels: Vec<String>, mut above: Vec<Vec<u32>>) -> Self {
        let n = labels.len();
        let mut below: Vec<Vec<u32>> = vec![Vec::new(); n];
        for (a, ups) in above.iter_mut().enumerate() {
            ups.sort_unstable();
            ups.dedup();
            for &b in ups.iter() {
                below[b as usize].push(a as u32);
            }
        }
        GPoset { labels, above, below }
    }

    /// Reflexive-transitive closure of the given cover (or any generating)
    /// relation; fails if the closure is not antisymmetric.
    pub fn from_covers(labels: Vec<String>, covers: &[(u32, u32)]) -> Result<Self, ComplexError> {
        let n = labels.len();
        let mut succ: Vec<Vec<u32>> = vec![Vec::new(); n];
        for &(a, b) in covers {
            for v in [a, b] {
                if v as usize >= n {
                    return Err(ComplexError::VertexOutOfRange { vertex: v, count: n });
                }
            }
            if a == b {
                return Err(ComplexError::NotAntisymmetric(a as usize));
            }
            succ[a as usize].push(b);
        }
        let mut above: Vec<Vec<u32>> = Vec::with_capacity(n);
        for start in 0..n {
            let mut seen = vec![false; n];
            let mut stack: Vec<u32> = succ[start].clone();
            let mut ups = Vec::new();
            while let Some(x) = stack.pop() {
                if seen[x as usize] {
                    continue;
                }
                if x as usize == start {
                    return Err(ComplexError::NotAntisymmetric(start));
                }
                seen[x as usize] = true;
                ups.push(x);
                stack.extend(succ[x as usize].iter().copied());
            }
            above.push(ups);
        }
        Ok(Self::from_closed_above(labels, above))
    }

    pub fn from_json(json: &PosetJson) -> Result<Self, ComplexError> {
        let covers: Vec<(u32, u32)> = json.covers.iter().map(|c| (c[0], c[1])).collect();
        Self::from_covers(json.labels.clone(), &covers)
    }

    pub fn to_json(&self) -> PosetJson {
        PosetJson {
            labels: self.labels.clone(),
            covers: self.covers().into_iter().map(|(a, b)| [a, b]).collect(),
        }
    }

    pub fn antichain(n: usize) -> GPoset {
        GPoset::from_closed_above(numbered("x", n), vec![Vec::new(); n])
    }

    /// Total order `0 < 1 < … < n-1`.
    pub fn chain(n: usize) -> GPoset {
        let above = (0..n as u32).map(|i| (i + 1..n as u32).collect()).collect();
        GPoset::from_closed_above(numbered("x", n), above)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn less(&self, a: u32, b: u32) -> bool {
        self.above[a as usize].binary_search(&b).is_ok()
    }

    pub fn leq(&self, a: u32, b: u32) -> bool {
        a == b || self.less(a, b)
    }

    pub fn comparable(&self, a: u32, b: u32) -> bool {
        self.leq(a, b) || self.less(b, a)
    }

    pub fn above(&self, a: u32) -> &[u32] {
        &self.above[a as usize]
    }

    pub fn below(&self, a: u32) -> &[u32] {
        &self.below[a as usize]
    }

    /// Number of strict relations `a < b`.
    pub fn relation_count(&self) -> usize {
        self.above.iter().map(Vec::len).sum()
    }

    /// Cover pairs `a ⋖ b`.
    pub fn covers(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::new();
        for a in 0..self.len() as u32 {
            for &b in self.above(a) {
                let between = self.above(a).iter().any(|&c| c != b && self.less(c, b));
                if !between {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// The strict order is irreflexive, transitive and antisymmetric.
    pub fn check_order(&self) -> bool {
        (0..self.len() as u32).all(|a| {
            !self.less(a, a)
                && self.above(a).iter().all(|&b| !self.less(b, a) && self.above(b).iter().all(|&c| self.less(a, c)))
        })
    }

    /// Product poset: `(a, b) ≤ (c, d)` iff `a ≤ c` and `b ≤ d`. The element
    /// `(a, b)` has index `a * |Q| + b`.
    pub fn product(&self, other: &GPoset) -> GPoset {
        let nq = other.len();
        let mut labels = Vec::with_capacity(self.len() * nq);
        let mut above = Vec::with_capacity(self.len() * nq);
        for a in 0..self.len() as u32 {
            for b in 0..nq as u32 {
                labels.push(format!("({},{})", self.labels[a as usize], other.labels[b as usize]));
                let mut ups = Vec::new();
                for c in std::iter::once(a).chain(self.above(a).iter().copied()) {
                    for d in std::iter::once(b).chain(other.above(b).iter().copied()) {
                        if (c, d) != (a, b) {
                            ups.push(c * nq as u32 + d);
                        }
                    }
                }
                above.push(ups);
            }
        }
        GPoset::from_closed_above(labels, above)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetJson {
    pub labels: Vec<String>,
    pub covers: Vec<[u32; 2]>,
}

pub fn poset_product(p: &GPoset, q: &GPoset) -> GPoset {
    p.product(q)
}

/// Chains of `P` as a simplicial complex.
pub fn order_complex(p: &GPoset) -> SComplex {
    order_complex_up_to(p, usize::MAX)
}

/// Chains of `P` with at most `max_dim + 1` elements.
pub fn order_complex_up_to(p: &GPoset, max_dim: usize) -> SComplex {
    let mut by_dim: Vec<Vec<Simplex>> = vec![Vec::new()];
    let mut chain: Vec<u32> = Vec::new();
    fn extend(p: &GPoset, chain: &mut Vec<u32>, by_dim: &mut Vec<Vec<Simplex>>, max_len: usize) {
        let d = chain.len() - 1;
        if by_dim.len() <= d {
            by_dim.push(Vec::new());
        }
        if d > 0 {
            let mut f = chain.clone();
            f.sort_unstable();
            by_dim[d].push(f);
        }
        if chain.len() >= max_len {
            return;
        }
        let last = *chain.last().expect("nonempty chain");
        for &next in p.above(last) {
            chain.push(next);
            extend(p, chain, by_dim, max_len);
            chain.pop();
        }
    }
    let max_len = max_dim.saturating_add(1);
    for x in 0..p.len() as u32 {
        chain.push(x);
        extend(p, &mut chain, &mut by_dim, max_len);
        chain.pop();
    }
    SComplex::from_closed_faces(p.labels.clone(), by_dim)
}

/// Order complex of the product of face posets: a triangulation of
/// `|K| × |L|` whose vertices are pairs (face of `K`, face of `L`).
pub fn walker_product(k: &SComplex, l: &SComplex) -> SComplex {
    walker_product_up_to(k, l, usize::MAX)
}

pub fn walker_product_up_to(k: &SComplex, l: &SComplex, max_dim: usize) -> SComplex {
    order_complex_up_to(&k.face_poset().product(&l.face_poset()), max_dim)
}

/// Staircase triangulation of `|K| × |L|` driven by vertex keys.
///
/// The keys define a total preorder on each vertex set that must be a total
/// order on every face (two vertices of a common face never share a key).
/// Vertices of the product are all pairs `(v, w)`, indexed `v * |V(L)| + w`;
/// simplices are the sets of pairs that are strictly increasing in the
/// product of the key orders and whose two projections are faces.
pub fn ordered_product(
    k: &SComplex,
    l: &SComplex,
    key_k: &[u32],
    key_l: &[u32],
    max_dim: usize,
) -> Result<SComplex, ComplexError> {
    fn up_neighbours(c: &SComplex, key: &[u32]) -> Result<Vec<Vec<u32>>, ComplexError> {
        let mut up = vec![Vec::new(); c.vertex_count()];
        for e in c.faces(1) {
            let (a, b) = (e[0], e[1]);
            match key[a as usize].cmp(&key[b as usize]) {
                std::cmp::Ordering::Less => up[a as usize].push(b),
                std::cmp::Ordering::Greater => up[b as usize].push(a),
                std::cmp::Ordering::Equal => return Err(ComplexError::OrderNotTotalOnFace(a, b)),
            }
        }
        Ok(up)
    }
    let up_k = up_neighbours(k, key_k)?;
    let up_l = up_neighbours(l, key_l)?;
    let nl = l.vertex_count();
    let mut labels = Vec::with_capacity(k.vertex_count() * nl);
    for v in 0..k.vertex_count() as u32 {
        for w in 0..nl as u32 {
            labels.push(format!("({},{})", k.label(v), l.label(w)));
        }
    }

    struct Walk<'a> {
        k: &'a SComplex,
        l: &'a SComplex,
        up_k: &'a [Vec<u32>],
        up_l: &'a [Vec<u32>],
        nl: u32,
        max_len: usize,
        by_dim: Vec<Vec<Simplex>>,
    }
    impl Walk<'_> {
        fn go(&mut self, chain: &mut Vec<(u32, u32)>, sk: &mut Vec<u32>, sl: &mut Vec<u32>) {
            let d = chain.len() - 1;
            if self.by_dim.len() <= d {
                self.by_dim.push(Vec::new());
            }
            if d > 0 {
                let mut f: Simplex = chain.iter().map(|&(v, w)| v * self.nl + w).collect();
                f.sort_unstable();
                self.by_dim[d].push(f);
            }
            if chain.len() >= self.max_len {
                return;
            }
            let (lv, lw) = *chain.last().expect("nonempty");
            let cand_v: Vec<u32> = std::iter::once(lv).chain(self.up_k[lv as usize].iter().copied()).collect();
            let cand_w: Vec<u32> = std::iter::once(lw).chain(self.up_l[lw as usize].iter().copied()).collect();
            for &v in &cand_v {
                let new_v = v != lv;
                if new_v {
                    sk.push(v);
                    let mut s = sk.clone();
                    s.sort_unstable();
                    if self.k.index_of(&s).is_none() {
                        sk.pop();
                        continue;
                    }
                }
                for &w in &cand_w {
                    if !new_v && w == lw {
                        continue;
                    }
                    let new_w = w != lw;
                    if new_w {
                        sl.push(w);
                        let mut s = sl.clone();
                        s.sort_unstable();
                        if self.l.index_of(&s).is_none() {
                            sl.pop();
                            continue;
                        }
                    }
                    chain.push((v, w));
                    self.go(chain, sk, sl);
                    chain.pop();
                    if new_w {
                        sl.pop();
                    }
                }
                if new_v {
                    sk.pop();
                }
            }
        }
    }

    let mut walk = Walk {
        k,
        l,
        up_k: &up_k,
        up_l: &up_l,
        nl: nl as u32,
        max_len: max_dim.saturating_add(1),
        by_dim: vec![Vec::new()],
    };
    for v in 0..k.vertex_count() as u32 {
        for w in 0..nl as u32 {
            let mut chain = vec![(v, w)];
            let mut sk = vec![v];
            let mut sl = vec![w];
            walk.go(&mut chain, &mut sk, &mut sl);
        }
    }
    Ok(SComplex::from_closed_faces(labels, walk.by_dim))
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MapError {
    #[error("vertex map has length {got}, source has {expected} vertices")]
    WrongLength { expected: usize, got: usize },
    #[error("vertex {vertex} mapped outside the target ({count} vertices)")]
    OutOfRange { vertex: u32, count: usize },
    #[error("image of face {face:?} is not a face of the target")]
    NotSimplicial { face: Simplex },
}

/// A vertex map that sends every face of `source` onto a face of `target`.
#[derive(Debug, Clone)]
pub struct SimplicialMap<'a> {
    source: &'a SComplex,
    target: &'a SComplex,
    vertex_map: Vec<u32>,
}

impl<'a> SimplicialMap<'a> {
    pub fn new(source: &'a SComplex, target: &'a SComplex, vertex_map: Vec<u32>) -> Result<Self, MapError> {
        if vertex_map.len() != source.vertex_count() {
            return Err(MapError::WrongLength {
                expected: source.vertex_count(),
                got: vertex_map.len(),
            });
        }
        if let Some(&v) = vertex_map.iter().find(|&&v| v as usize >= target.vertex_count()) {
            return Err(MapError::OutOfRange {
                vertex: v,
                count: target.vertex_count(),
            });
        }
        for d in 1..=source.dim() {
            for f in source.faces(d) {
                if target.index_of(&SComplex::image_of(f, &vertex_map)).is_none() {
                    return Err(MapError::NotSimplicial { face: f.clone() });
                }
            }
        }
        Ok(SimplicialMap {
            source,
            target,
            vertex_map,
        })
    }

    pub fn source(&self) -> &'a SComplex {
        self.source
    }

    pub fn target(&self) -> &'a SComplex {
        self.target
    }

    pub fn vertex_map(&self) -> &[u32] {
        &self.vertex_map
    }

    pub fn image(&self, face: &[u32]) -> Simplex {
        SComplex::image_of(face, &self.vertex_map)
    }
}
