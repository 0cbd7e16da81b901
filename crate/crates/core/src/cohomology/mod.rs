//! Chains and cochains over `F_p`.
//!
//! Everything here runs on [`OrderedComplex`], a semi-simplicial complex
//! whose simplices carry an ordered vertex tuple and explicit face maps. A
//! simplicial complex converts with its vertex index order; the quotient of a
//! free action is built directly in this form (see `actions`).

mod chain;
mod smith;

pub use chain::{ChainComplex, ChainMap, HomologyBasis};
pub use smith::{
    chain_action_matrix, smith_decomposition, smith_long_exactness_check, transfer_matrix, LongExactReport,
    NodeReport, SmithDecomposition, SmithSequence,
};

use rayon::prelude::*;
use thiserror::Error;

use crate::complexes::SComplex;
use crate::fpalg::{add_mod, mul_mod, neg_mod, reduce_signed, sub_mod, AlgError, Eliminator, FpMatrix, FpVector, SparseRow};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CohomologyError {
    #[error("degree {degree} out of range for a complex of dimension {dim}")]
    DegreeOutOfRange { degree: usize, dim: usize },
    #[error("cochain of degree {0} is not a cocycle")]
    NotACocycle(usize),
    #[error("boundary composite is nonzero at degree {0}")]
    NotAChainComplex(usize),
    #[error("map does not commute with the boundary at degree {0}")]
    NotAChainMap(usize),
    #[error("cochains live on different complexes")]
    ComplexMismatch,
    #[error("coefficient fields differ: {0} vs {1}")]
    PMismatch(u32, u32),
    #[error(transparent)]
    Alg(#[from] AlgError),
}

/// Semi-simplicial complex: simplex `i` of dimension `d` has an ordered
/// vertex tuple and `d + 1` faces, face `j` omitting vertex `j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderedComplex {
    vertex_count: usize,
    verts: Vec<Vec<u32>>,
    faces: Vec<Vec<u32>>,
}

/// Merge a list of `(column, signed coefficient)` into a sparse row.
pub(crate) fn merged_row(mut entries: Vec<(u32, i64)>, m: u32) -> SparseRow {
    entries.sort_unstable_by_key(|e| e.0);
    let mut out: SparseRow = Vec::with_capacity(entries.len());
    for (c, v) in entries {
        let v = reduce_signed(v, m);
        match out.last_mut() {
            Some(last) if last.0 == c => last.1 = add_mod(last.1, v, m),
            _ => out.push((c, v)),
        }
    }
    out.retain(|e| e.1 != 0);
    out
}

impl OrderedComplex {
    pub(crate) fn from_parts(vertex_count: usize, verts: Vec<Vec<u32>>, faces: Vec<Vec<u32>>) -> Self {
        debug_assert_eq!(verts.len(), faces.len());
        for (d, (v, f)) in verts.iter().zip(&faces).enumerate() {
            debug_assert_eq!(v.len() % (d + 1), 0);
            debug_assert_eq!(f.len(), if d == 0 { 0 } else { v.len() });
        }
        OrderedComplex {
            vertex_count,
            verts,
            faces,
        }
    }

    pub fn from_scomplex(k: &SComplex) -> Self {
        let mut verts = Vec::with_capacity(k.dim() + 1);
        let mut faces = Vec::with_capacity(k.dim() + 1);
        for d in 0..=k.dim() {
            let mut vs = Vec::with_capacity(k.face_count(d) * (d + 1));
            let mut fs = Vec::new();
            let mut sub = Vec::with_capacity(d);
            for f in k.faces(d) {
                vs.extend_from_slice(f);
                if d > 0 {
                    for j in 0..=d {
                        sub.clear();
                        sub.extend(f.iter().enumerate().filter(|&(i, _)| i != j).map(|(_, &v)| v));
                        fs.push(k.index_of(&sub).expect("closed complex") as u32);
                    }
                }
            }
            verts.push(vs);
            faces.push(fs);
        }
        Self::from_parts(k.vertex_count(), verts, faces)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn dim(&self) -> usize {
        self.verts.len() - 1
    }

    pub fn count(&self, d: usize) -> usize {
        self.verts.get(d).map_or(0, |v| v.len() / (d + 1))
    }

    pub fn f_vector(&self) -> Vec<usize> {
        (0..=self.dim()).map(|d| self.count(d)).collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        (0..=self.dim())
            .map(|d| if d % 2 == 0 { self.count(d) as i64 } else { -(self.count(d) as i64) })
            .sum()
    }

    pub fn vertices(&self, d: usize, i: usize) -> &[u32] {
        &self.verts[d][i * (d + 1)..(i + 1) * (d + 1)]
    }

    /// Index of face `j` (vertex `j` omitted) of simplex `i` of dimension `d`.
    pub fn face(&self, d: usize, i: usize, j: usize) -> usize {
        self.faces[d][i * (d + 1) + j] as usize
    }

    /// Simplices of dimension at most `d`.
    pub fn truncated(&self, d: usize) -> OrderedComplex {
        let keep = d.min(self.dim()) + 1;
        OrderedComplex {
            vertex_count: self.vertex_count,
            verts: self.verts[..keep].to_vec(),
            faces: self.faces[..keep].to_vec(),
        }
    }

    /// No two simplices share a vertex set.
    pub fn is_regular(&self) -> bool {
        (0..=self.dim()).all(|d| {
            let mut seen = std::collections::HashSet::with_capacity(self.count(d));
            (0..self.count(d)).all(|i| {
                let mut v = self.vertices(d, i).to_vec();
                v.sort_unstable();
                v.windows(2).all(|w| w[0] != w[1]) && seen.insert(v)
            })
        })
    }

    /// Index of the front `k`-face `(v_0 … v_k)` of simplex `i` in dimension `d`.
    pub fn front_face(&self, d: usize, i: usize, k: usize) -> usize {
        let mut idx = i;
        for e in (k + 1..=d).rev() {
            idx = self.face(e, idx, e);
        }
        idx
    }

    /// Index of the back `l`-face `(v_{d-l} … v_d)`.
    pub fn back_face(&self, d: usize, i: usize, l: usize) -> usize {
        let mut idx = i;
        for e in (l + 1..=d).rev() {
            idx = self.face(e, idx, 0);
        }
        idx
    }

    /// Row `i` of the coboundary `δ_{d-1}`: the signed faces of simplex `i`.
    pub(crate) fn face_row(&self, d: usize, i: usize, m: u32) -> SparseRow {
        merged_row(
            (0..=d)
                .map(|j| (self.face(d, i, j) as u32, if j % 2 == 0 { 1 } else { -1 }))
                .collect(),
            m,
        )
    }

    /// Matrix of `∂_d : C_d → C_{d-1}`, rows indexed by `(d-1)`-simplices.
    pub fn boundary_matrix(&self, d: usize, p: u32) -> Result<FpMatrix, CohomologyError> {
        if d == 0 || d > self.dim() {
            return Err(CohomologyError::DegreeOutOfRange { degree: d, dim: self.dim() });
        }
        let trip = (0..self.count(d)).flat_map(|i| {
            (0..=d).map(move |j| (self.face(d, i, j), i, if j % 2 == 0 { 1i64 } else { -1 }))
        });
        Ok(FpMatrix::from_triplets(p, self.count(d - 1), self.count(d), trip)?)
    }

    /// Matrix of `δ_d : C^d → C^{d+1}` over `Z/m` (any modulus).
    pub fn coboundary_matrix_mod(&self, d: usize, m: u32) -> FpMatrix {
        let rows: Vec<SparseRow> = (0..self.count(d + 1)).map(|i| self.face_row(d + 1, i, m)).collect();
        FpMatrix::from_sorted_rows(m, self.count(d), rows)
    }

    fn coboundary_rank(&self, d: usize, p: u32) -> usize {
        let mut elim = Eliminator::new(p, self.count(d));
        for i in 0..self.count(d + 1) {
            elim.insert(self.face_row(d + 1, i, p));
        }
        elim.rank()
    }

    /// Betti numbers over `F_p`, via ranks of the boundary matrices.
    pub fn homology_dims(&self, p: u32) -> Vec<usize> {
        let top = self.dim();
        let ranks: Vec<usize> = (0..=top + 1)
            .into_par_iter()
            .map(|d| {
                if d == 0 || d > top {
                    0
                } else {
                    self.boundary_matrix(d, p).expect("degree in range").rank()
                }
            })
            .collect();
        (0..=top).map(|d| self.count(d) - ranks[d] - ranks[d + 1]).collect()
    }

    /// Cohomology dims over `F_p`, via ranks of the coboundary (transposed)
    /// matrices.
    pub fn cohomology_dims(&self, p: u32) -> Vec<usize> {
        let top = self.dim();
        let ranks: Vec<usize> = (0..=top).into_par_iter().map(|d| self.coboundary_rank(d, p)).collect();
        (0..=top)
            .map(|d| self.count(d) - ranks[d] - if d == 0 { 0 } else { ranks[d - 1] })
            .collect()
    }

    /// `∂` applied to a `d`-chain.
    pub fn boundary(&self, d: usize, chain: &FpVector) -> FpVector {
        let p = chain.modulus();
        if d == 0 {
            return FpVector::zeros(p, 0);
        }
        let mut acc: Vec<(u32, i64)> = Vec::new();
        for (i, v) in chain.entries() {
            for j in 0..=d {
                let s = if j % 2 == 0 { v as i64 } else { -(v as i64) };
                acc.push((self.face(d, i, j) as u32, s));
            }
        }
        let row = merged_row(acc, p);
        FpVector::from_entries(p, self.count(d - 1), row.into_iter().map(|(c, v)| (c as usize, v)))
    }
}

pub fn homology_dims(k: &SComplex, p: u32) -> Vec<usize> {
    OrderedComplex::from_scomplex(k).homology_dims(p)
}

pub fn cohomology_dims(k: &SComplex, p: u32) -> Vec<usize> {
    OrderedComplex::from_scomplex(k).cohomology_dims(p)
}

/// A `degree`-cochain with values in `F_p`, stored densely.
#[derive(Debug, Clone)]
pub struct Cochain<'a> {
    complex: &'a OrderedComplex,
    degree: usize,
    p: u32,
    values: Vec<u32>,
}

impl PartialEq for Cochain<'_> {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.complex, other.complex)
            && self.degree == other.degree
            && self.p == other.p
            && self.values == other.values
    }
}

impl<'a> Cochain<'a> {
    /// Degrees up to `dim + 1` are allowed; the top one is always zero.
    pub fn zero(complex: &'a OrderedComplex, degree: usize, p: u32) -> Self {
        Cochain {
            complex,
            degree,
            p,
            values: vec![0; complex.count(degree)],
        }
    }

    /// The unit class: 1 on every vertex.
    pub fn one(complex: &'a OrderedComplex, p: u32) -> Self {
        Cochain {
            complex,
            degree: 0,
            p,
            values: vec![1 % p; complex.count(0)],
        }
    }

    pub fn from_values(complex: &'a OrderedComplex, degree: usize, p: u32, values: &[i64]) -> Result<Self, CohomologyError> {
        if values.len() != complex.count(degree) {
            return Err(CohomologyError::Alg(AlgError::DimensionMismatch {
                expected: complex.count(degree),
                got: values.len(),
            }));
        }
        Ok(Cochain {
            complex,
            degree,
            p,
            values: values.iter().map(|&v| reduce_signed(v, p)).collect(),
        })
    }

    pub fn complex(&self) -> &'a OrderedComplex {
        self.complex
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn value(&self, i: usize) -> u32 {
        self.values[i]
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }

    fn check_compatible(&self, other: &Cochain<'_>) -> Result<(), CohomologyError> {
        if !std::ptr::eq(self.complex, other.complex) {
            return Err(CohomologyError::ComplexMismatch);
        }
        if self.p != other.p {
            return Err(CohomologyError::PMismatch(self.p, other.p));
        }
        Ok(())
    }

    /// `self + factor · other`.
    pub fn add_scaled(&self, factor: u32, other: &Cochain<'_>) -> Result<Cochain<'a>, CohomologyError> {
        self.check_compatible(other)?;
        assert_eq!(self.degree, other.degree, "degree mismatch");
        let p = self.p;
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(&a, &b)| add_mod(a, mul_mod(factor, b, p), p))
            .collect();
        Ok(Cochain { values, ..self.clone() })
    }

    pub fn sub(&self, other: &Cochain<'_>) -> Result<Cochain<'a>, CohomologyError> {
        self.add_scaled(neg_mod(1, self.p), other)
    }

    pub fn scaled(&self, factor: u32) -> Cochain<'a> {
        let p = self.p;
        Cochain {
            values: self.values.iter().map(|&v| mul_mod(v, factor, p)).collect(),
            ..self.clone()
        }
    }

    /// `(δc)(σ) = Σ_j (-1)^j c(∂_j σ)`.
    pub fn coboundary(&self) -> Cochain<'a> {
        let d = self.degree + 1;
        let k = self.complex;
        let p = self.p;
        let values = (0..k.count(d))
            .map(|i| {
                (0..=d).fold(0u32, |acc, j| {
                    let v = self.values[k.face(d, i, j)];
                    if j % 2 == 0 {
                        add_mod(acc, v, p)
                    } else {
                        sub_mod(acc, v, p)
                    }
                })
            })
            .collect();
        Cochain {
            complex: k,
            degree: d,
            p,
            values,
        }
    }

    pub fn is_cocycle(&self) -> bool {
        self.coboundary().is_zero()
    }

    /// Alexander–Whitney product: `(a ∪ b)(v_0…v_{k+l}) = a(v_0…v_k) · b(v_k…v_{k+l})`.
    pub fn cup(&self, other: &Cochain<'_>) -> Result<Cochain<'a>, CohomologyError> {
        self.check_compatible(other)?;
        let (k, l) = (self.degree, other.degree);
        let d = k + l;
        let cx = self.complex;
        let p = self.p;
        let values = (0..cx.count(d))
            .map(|i| {
                let a = self.values[cx.front_face(d, i, k)];
                if a == 0 {
                    return 0;
                }
                mul_mod(a, other.values[cx.back_face(d, i, l)], p)
            })
            .collect();
        Ok(Cochain {
            complex: cx,
            degree: d,
            p,
            values,
        })
    }

    /// Bockstein of a cocycle: lift to `[0, p)`, cobound over `Z/p²`, divide
    /// by `p`.
    pub fn bockstein(&self) -> Result<Cochain<'a>, CohomologyError> {
        if !self.is_cocycle() {
            return Err(CohomologyError::NotACocycle(self.degree));
        }
        let p = self.p;
        let p2 = p * p;
        let delta = self.complex.coboundary_matrix_mod(self.degree, p2);
        let lifted = delta.mul_dense(&self.values);
        let values = lifted
            .into_iter()
            .map(|v| {
                debug_assert_eq!(v % p, 0, "lift of a cocycle cobounds into p·Z/p²");
                v / p
            })
            .collect();
        Ok(Cochain {
            complex: self.complex,
            degree: self.degree + 1,
            p,
            values,
        })
    }

    /// Some `x` with `δx = self`, or `None` when the class is nonzero.
    pub fn is_coboundary(&self) -> Result<Option<Cochain<'a>>, CohomologyError> {
        let cx = self.complex;
        if self.degree == 0 || self.degree > cx.dim() + 1 {
            return Err(CohomologyError::DegreeOutOfRange {
                degree: self.degree,
                dim: cx.dim(),
            });
        }
        if !self.is_cocycle() {
            return Err(CohomologyError::NotACocycle(self.degree));
        }
        let d = self.degree;
        let p = self.p;
        let width = cx.count(d - 1);
        let aug = width as u32;
        let mut elim = Eliminator::new(p, width + 1);
        for i in 0..cx.count(d) {
            let mut row = cx.face_row(d, i, p);
            if self.values[i] != 0 {
                row.push((aug, self.values[i]));
            }
            if elim.insert(row) == Some(width) {
                return Ok(None);
            }
        }
        let x = elim.back_substitute(width, None);
        Ok(Some(Cochain {
            complex: cx,
            degree: d - 1,
            p,
            values: x,
        }))
    }
}

/// Join of a `n`-chain of `K` and an `m`-chain of `L` as an `(n+m+1)`-chain
/// of `join(K, L)`. With `K`'s vertices first, `σ ∪ τ` is already sorted.
pub fn join_chain(
    k: &SComplex,
    l: &SComplex,
    join: &SComplex,
    (n, c): (usize, &FpVector),
    (m, e): (usize, &FpVector),
) -> FpVector {
    let p = c.modulus();
    let shift = k.vertex_count() as u32;
    let d = n + m + 1;
    let mut out = Vec::new();
    for (i, a) in c.entries() {
        for (j, b) in e.entries() {
            let mut f = k.face(n, i).clone();
            f.extend(l.face(m, j).iter().map(|&v| v + shift));
            let idx = join.index_of(&f).expect("face of the join");
            out.push((idx, mul_mod(a, b, p)));
        }
    }
    out.sort_unstable();
    FpVector::from_entries(p, join.face_count(d), out)
}

/// Sum of coefficients of a 0-chain.
pub fn augmentation(c: &FpVector) -> u32 {
    let p = c.modulus();
    c.entries().fold(0, |acc, (_, v)| add_mod(acc, v, p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::{cross_polytope_boundary, cycle, path, point, rp2_minimal, simplex, simplex_boundary};

    fn all_cochains(n: usize, p: u32) -> impl Iterator<Item = Vec<i64>> {
        let total = (p as usize).pow(n as u32);
        (0..total).map(move |mut code| {
            (0..n)
                .map(|_| {
                    let v = code % p as usize;
                    code /= p as usize;
                    v as i64
                })
                .collect()
        })
    }

    #[test]
    fn boundary_examples() {
        let e = OrderedComplex::from_scomplex(&simplex(1));
        let d1 = e.boundary_matrix(1, 2).unwrap();
        assert_eq!(d1.to_dense(), vec![vec![1], vec![1]]);
        assert!(e.boundary_matrix(0, 2).is_err());
        let tree = OrderedComplex::from_scomplex(&path(6));
        assert_eq!(tree.boundary_matrix(1, 3).unwrap().rank(), 5);
        for k in [simplex(3), cross_polytope_boundary(3), rp2_minimal(), cycle(5)] {
            let o = OrderedComplex::from_scomplex(&k);
            for d in 2..=o.dim() {
                for p in [2, 3] {
                    let prod = o.boundary_matrix(d - 1, p).unwrap().mul(&o.boundary_matrix(d, p).unwrap()).unwrap();
                    assert!(prod.is_zero());
                }
            }
        }
    }

    #[test]
    fn homology_examples() {
        assert_eq!(homology_dims(&point(), 2), vec![1]);
        for n in 1..=4 {
            let mut expect = vec![0; n];
            expect[0] += 1;
            expect[n - 1] += 1;
            let k = cross_polytope_boundary(n);
            let h = homology_dims(&k, 3);
            assert_eq!(h, expect);
            let alt: i64 = h.iter().enumerate().map(|(d, &b)| if d % 2 == 0 { b as i64 } else { -(b as i64) }).sum();
            assert_eq!(alt, k.euler_characteristic());
        }
        assert_eq!(homology_dims(&rp2_minimal(), 2), vec![1, 1, 1]);
        assert_eq!(homology_dims(&rp2_minimal(), 3), vec![1, 0, 0]);
        for k in [rp2_minimal(), simplex_boundary(3), cycle(4)] {
            for p in [2, 3, 5] {
                assert_eq!(homology_dims(&k, p), cohomology_dims(&k, p));
            }
        }
    }

    #[test]
    fn coboundary_examples() {
        let c3 = OrderedComplex::from_scomplex(&cycle(3));
        let zero = Cochain::zero(&c3, 1, 2);
        assert_eq!(zero.is_coboundary().unwrap().unwrap(), Cochain::zero(&c3, 0, 2));
        let one_edge = Cochain::from_values(&c3, 1, 2, &[1, 0, 0]).unwrap();
        assert!(one_edge.is_coboundary().unwrap().is_none());
        // no 0-cochain cobounds to it
        for x in all_cochains(3, 2) {
            let x = Cochain::from_values(&c3, 0, 2, &x).unwrap();
            assert_ne!(x.coboundary(), one_edge);
        }
        let tri = OrderedComplex::from_scomplex(&simplex(2));
        let c = Cochain::from_values(&tri, 1, 2, &[1, 0, 0]).unwrap();
        assert!(!c.is_cocycle());
        assert_eq!(c.is_coboundary(), Err(CohomologyError::NotACocycle(1)));
        let cocycle = Cochain::from_values(&tri, 1, 2, &[1, 1, 0]).unwrap();
        let w = cocycle.is_coboundary().unwrap().expect("contractible");
        assert_eq!(w.coboundary(), cocycle);
        let brute = all_cochains(3, 2).any(|x| Cochain::from_values(&tri, 0, 2, &x).unwrap().coboundary() == cocycle);
        assert!(brute);
    }

    #[test]
    fn rp2_square_of_generator() {
        let k = OrderedComplex::from_scomplex(&rp2_minimal());
        // a generator of H^1: the cocycle dual to a nontrivial loop
        let mut w = None;
        for x in all_cochains(k.count(1), 2) {
            let c = Cochain::from_values(&k, 1, 2, &x).unwrap();
            if c.is_cocycle() && c.is_coboundary().unwrap().is_none() {
                w = Some(c);
                break;
            }
        }
        let w = w.expect("H^1 is nonzero");
        let sq = w.cup(&w).unwrap();
        assert!(sq.is_cocycle());
        assert!(sq.is_coboundary().unwrap().is_none());
        // brute force: no 1-cochain cobounds to w∪w
        let n1 = k.count(1);
        let ok = (0u32..1 << n1).all(|mask| {
            let x: Vec<i64> = (0..n1).map(|i| (mask >> i & 1) as i64).collect();
            Cochain::from_values(&k, 1, 2, &x).unwrap().coboundary() != sq
        });
        assert!(ok);
    }

    #[test]
    fn cup_unit() {
        let k = OrderedComplex::from_scomplex(&cycle(4));
        let a = Cochain::from_values(&k, 1, 3, &[1, 2, 0, 1]).unwrap();
        let one = Cochain::one(&k, 3);
        assert_eq!(one.cup(&a).unwrap(), a);
        assert_eq!(a.cup(&one).unwrap(), a);
    }

    #[test]
    fn cup_rejects_foreign_complex() {
        let k = OrderedComplex::from_scomplex(&cycle(4));
        let l = k.clone();
        let a = Cochain::one(&k, 2);
        let b = Cochain::one(&l, 2);
        assert_eq!(a.cup(&b), Err(CohomologyError::ComplexMismatch));
        assert_eq!(a.cup(&Cochain::one(&k, 3)), Err(CohomologyError::PMismatch(2, 3)));
    }

    #[test]
    fn bockstein_basics() {
        let k = OrderedComplex::from_scomplex(&cycle(5));
        assert!(Cochain::zero(&k, 1, 3).bockstein().unwrap().is_zero());
        let tri = OrderedComplex::from_scomplex(&simplex(2));
        let nc = Cochain::from_values(&tri, 1, 3, &[1, 0, 0]).unwrap();
        assert_eq!(nc.bockstein(), Err(CohomologyError::NotACocycle(1)));
        let c = Cochain::from_values(&tri, 1, 3, &[2, 1, 2]).unwrap();
        assert!(c.is_cocycle());
        let b = c.bockstein().unwrap();
        // integer coboundary 2 - 1 + 2 = 3, divided by 3
        assert_eq!(b.values(), &[1]);
    }

    #[test]
    fn join_boundary_formula_on_spheres() {
        let k = cycle(3);
        let l = cycle(4);
        let j = k.join(&l);
        let (ok, ol, oj) = (
            OrderedComplex::from_scomplex(&k),
            OrderedComplex::from_scomplex(&l),
            OrderedComplex::from_scomplex(&j),
        );
        let p = 3;
        let z = FpVector::from_signed(p, &[1, -1, 1]);
        assert!(ok.boundary(1, &z).is_zero());
        let w = FpVector::from_signed(p, &[1, -1, 1, 1]);
        assert!(ol.boundary(1, &w).is_zero());
        let zw = join_chain(&k, &l, &j, (1, &z), (1, &w));
        assert!(!zw.is_zero());
        assert!(oj.boundary(3, &zw).is_zero());
    }
}
