//! The `N`- and `ρ`-subcomplexes of a free `Z/p` chain complex, the two
//! short exact sequences relating them to all chains, and their long exact
//! homology sequences. `N = 1 + T + … + T^{p-1}` and `ρ = 1 - T`.

use serde::Serialize;

use super::chain::{ChainComplex, ChainMap, HomologyBasis};
use super::{CohomologyError, OrderedComplex};
use crate::actions::FreeAction;
use crate::fpalg::{neg_mod, ColumnSpace, FpMatrix, FpVector};

/// Matrix of the chain-level generator `T e_σ = ± e_{gσ}` on `C_d`.
pub fn chain_action_matrix(a: &FreeAction, d: usize) -> FpMatrix {
    let p = a.p();
    let n = a.complex().face_count(d);
    let trip = (0..n).map(|i| {
        let (j, odd) = a.face_image(d, i);
        (j, i, if odd { -1i64 } else { 1 })
    });
    FpMatrix::from_triplets(p, n, n, trip).expect("prime")
}

/// `T^k e_σ` as `(index, coefficient)`.
fn translate(a: &FreeAction, d: usize, i: usize, k: u32) -> (usize, u32) {
    let p = a.p();
    let (mut idx, mut sign) = (i, 1u32);
    for _ in 0..k {
        let (j, odd) = a.face_image(d, idx);
        idx = j;
        if odd {
            sign = neg_mod(sign, p);
        }
    }
    (idx, sign)
}

fn restrict(full: &ChainComplex, bases: &[Vec<FpVector>]) -> ChainComplex {
    let p = full.p();
    let dims: Vec<usize> = bases.iter().map(Vec::len).collect();
    let mut bd = Vec::new();
    for k in 1..bases.len() {
        let below = ColumnSpace::from_columns(p, full.dim(k - 1), &bases[k - 1]);
        let cols: Vec<FpVector> = bases[k]
            .iter()
            .map(|b| below.express(&full.apply_boundary(k, b)).expect("subcomplex is closed under ∂"))
            .collect();
        bd.push(FpMatrix::from_columns(p, dims[k - 1], &cols).expect("prime"));
    }
    ChainComplex::new(p, dims, bd).expect("restricted boundary is a differential")
}

fn basis_matrix(p: u32, rows: usize, basis: &[FpVector]) -> FpMatrix {
    FpMatrix::from_columns(p, rows, basis).expect("prime")
}

/// Which short exact sequence of chain complexes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SmithSequence {
    /// `0 → NC → C → ρC → 0`, the second map being `ρ`.
    NFirst,
    /// `0 → ρC → C → NC → 0`, the second map being `N`.
    RhoFirst,
}

#[derive(Debug, Clone)]
pub struct SmithDecomposition<'a> {
    action: &'a FreeAction,
    full: ChainComplex,
    n_complex: ChainComplex,
    rho_complex: ChainComplex,
    n_basis: Vec<FpMatrix>,
    rho_basis: Vec<FpMatrix>,
    n_dims: Vec<usize>,
    rho_dims: Vec<usize>,
}

pub fn smith_decomposition(a: &FreeAction) -> SmithDecomposition<'_> {
    let p = a.p();
    let q = a.quotient();
    let full = ChainComplex::from_ordered(&OrderedComplex::from_scomplex(a.complex()), p);
    let mut nb = Vec::new();
    let mut rb = Vec::new();
    for d in 0..=a.dim() {
        let n = a.complex().face_count(d);
        let mut n_cols = Vec::new();
        let mut r_cols = Vec::new();
        for o in 0..q.quotient().count(d) {
            let sigma = q.lift_index(d, o);
            let orbit: Vec<(usize, u32)> = (0..p).map(|k| translate(a, d, sigma, k)).collect();
            let mut entries = orbit.clone();
            entries.sort_unstable();
            n_cols.push(FpVector::from_entries(p, n, entries));
            for j in 0..p as usize - 1 {
                let (x, sx) = orbit[j];
                let (y, sy) = orbit[j + 1];
                let mut e = vec![(x, sx), (y, neg_mod(sy, p))];
                e.sort_unstable();
                r_cols.push(FpVector::from_entries(p, n, e));
            }
        }
        nb.push(n_cols);
        rb.push(r_cols);
    }
    let n_complex = restrict(&full, &nb);
    let rho_complex = restrict(&full, &rb);
    let n_dims = n_complex.homology_dims();
    let rho_dims = rho_complex.homology_dims();
    SmithDecomposition {
        action: a,
        n_basis: nb.iter().enumerate().map(|(d, b)| basis_matrix(p, full.dim(d), b)).collect(),
        rho_basis: rb.iter().enumerate().map(|(d, b)| basis_matrix(p, full.dim(d), b)).collect(),
        full,
        n_complex,
        rho_complex,
        n_dims,
        rho_dims,
    }
}

/// Exactness data at one node `U → X → V` of a long exact sequence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NodeReport {
    pub node: String,
    pub dim: usize,
    pub rank_in: usize,
    pub rank_out: usize,
    pub defect: i64,
    pub composite_zero: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LongExactReport {
    pub sequence: SmithSequence,
    /// Chain-level checks: injective, surjective, composite zero, dims add up.
    pub short_exact: bool,
    pub nodes: Vec<NodeReport>,
    /// Alternating sum of the node dimensions.
    pub euler_sum: i64,
}

impl LongExactReport {
    pub fn exact(&self) -> bool {
        self.short_exact && self.euler_sum == 0 && self.nodes.iter().all(|n| n.defect == 0 && n.composite_zero)
    }
}

impl<'a> SmithDecomposition<'a> {
    pub fn action(&self) -> &'a FreeAction {
        self.action
    }

    pub fn full_complex(&self) -> &ChainComplex {
        &self.full
    }

    pub fn n_complex(&self) -> &ChainComplex {
        &self.n_complex
    }

    pub fn rho_complex(&self) -> &ChainComplex {
        &self.rho_complex
    }

    pub fn n_homology_dims(&self) -> &[usize] {
        &self.n_dims
    }

    pub fn rho_homology_dims(&self) -> &[usize] {
        &self.rho_dims
    }

    /// Chain dims `dim NC_d + dim ρC_d`, per degree.
    pub fn chain_dims(&self) -> Vec<(usize, usize, usize)> {
        (0..=self.full.top())
            .map(|d| (self.n_complex.dim(d), self.rho_complex.dim(d), self.full.dim(d)))
            .collect()
    }

    /// The operator `1 - T` or `N` on `C_d`.
    fn operator(&self, d: usize, seq: SmithSequence) -> FpMatrix {
        let p = self.action.p();
        let t = chain_action_matrix(self.action, d);
        let n = self.full.dim(d);
        let id = FpMatrix::identity(p, n).expect("prime");
        match seq {
            SmithSequence::NFirst => {
                let trip = (0..n).flat_map(|c| {
                    let tc = t.column(c);
                    let idc = id.column(c);
                    idc.add_scaled(neg_mod(1, p), &tc)
                        .entries()
                        .map(|(r, v)| (r, c, v as i64))
                        .collect::<Vec<_>>()
                });
                FpMatrix::from_triplets(p, n, n, trip).expect("prime")
            }
            SmithSequence::RhoFirst => {
                let mut acc = id.clone();
                let mut pow = id;
                for _ in 1..p {
                    pow = t.mul(&pow).expect("square");
                    acc = add_matrices(&acc, &pow);
                }
                acc
            }
        }
    }

    /// Pieces `(A, i, j, C)` of the short exact sequence `0 → A → C_* → C → 0`.
    fn sequence_maps(&self, seq: SmithSequence) -> (&ChainComplex, Vec<FpMatrix>, Vec<FpMatrix>, &ChainComplex) {
        let p = self.action.p();
        let (a, a_basis, c, c_basis) = match seq {
            SmithSequence::NFirst => (&self.n_complex, &self.n_basis, &self.rho_complex, &self.rho_basis),
            SmithSequence::RhoFirst => (&self.rho_complex, &self.rho_basis, &self.n_complex, &self.n_basis),
        };
        let mut js = Vec::new();
        for d in 0..=self.full.top() {
            let op = self.operator(d, seq);
            let space = ColumnSpace::from_columns(p, self.full.dim(d), &c_basis[d].columns());
            let cols: Vec<FpVector> = op
                .columns()
                .iter()
                .map(|col| space.express(col).expect("image lies in the target subcomplex"))
                .collect();
            js.push(FpMatrix::from_columns(p, c.dim(d), &cols).expect("prime"));
        }
        (a, a_basis.clone(), js, c)
    }

    pub fn long_exactness(&self, seq: SmithSequence) -> LongExactReport {
        let p = self.action.p();
        let (a, i_maps, j_maps, c) = self.sequence_maps(seq);
        let b = &self.full;
        let top = b.top();

        let mut short_exact = true;
        for d in 0..=top {
            let (i, j) = (&i_maps[d], &j_maps[d]);
            short_exact &= i.rank() == a.dim(d);
            short_exact &= j.rank() == c.dim(d);
            short_exact &= j.mul(i).map(|m| m.is_zero()).unwrap_or(false);
            short_exact &= a.dim(d) + c.dim(d) == b.dim(d);
        }
        let i_map = ChainMap::new(a, b, i_maps.clone());
        let j_map = ChainMap::new(b, c, j_maps.clone());
        let (Ok(i_map), Ok(j_map)) = (i_map, j_map) else {
            return LongExactReport {
                sequence: seq,
                short_exact: false,
                nodes: Vec::new(),
                euler_sum: 0,
            };
        };

        let ha = a.homology_all();
        let hb = b.homology_all();
        let hc = c.homology_all();
        let i_star: Vec<FpMatrix> = (0..=top).map(|d| i_map.induced(d, &ha[d], &hb[d])).collect();
        let j_star: Vec<FpMatrix> = (0..=top).map(|d| j_map.induced(d, &hb[d], &hc[d])).collect();
        // connecting maps H_d(C) → H_{d-1}(A), for d ≥ 1
        let mut conn: Vec<FpMatrix> = vec![FpMatrix::zeros(p, 0, hc[0].dim()).expect("prime")];
        for d in 1..=top {
            conn.push(connecting(&i_maps[d - 1], &j_maps[d], b, d, &ha[d - 1], &hc[d], p));
        }

        // nodes from the top: H_d(A), H_d(B), H_d(C), then H_{d-1}(A), …
        let zero = |rows: usize, cols: usize| FpMatrix::zeros(p, rows, cols).expect("prime");
        let mut nodes = Vec::new();
        let mut euler_sum = 0i64;
        let mut sign = 1i64;
        let names = match seq {
            SmithSequence::NFirst => ("NC", "C", "ρC"),
            SmithSequence::RhoFirst => ("ρC", "C", "NC"),
        };
        for d in (0..=top).rev() {
            let into_a = if d == top { zero(ha[d].dim(), 0) } else { conn[d + 1].clone() };
            let out_c = if d == 0 { zero(0, hc[0].dim()) } else { conn[d].clone() };
            let triple = [
                (format!("H{d}({})", names.0), ha[d].dim(), into_a, i_star[d].clone()),
                (format!("H{d}({})", names.1), hb[d].dim(), i_star[d].clone(), j_star[d].clone()),
                (format!("H{d}({})", names.2), hc[d].dim(), j_star[d].clone(), out_c),
            ];
            for (node, dim, fin, fout) in triple {
                let rank_in = fin.rank();
                let rank_out = fout.rank();
                let composite_zero = fout.mul(&fin).map(|m| m.is_zero()).unwrap_or(false);
                nodes.push(NodeReport {
                    node,
                    dim,
                    rank_in,
                    rank_out,
                    defect: dim as i64 - rank_in as i64 - rank_out as i64,
                    composite_zero,
                });
                euler_sum += sign * dim as i64;
                sign = -sign;
            }
        }
        LongExactReport {
            sequence: seq,
            short_exact,
            nodes,
            euler_sum,
        }
    }
}

fn add_matrices(x: &FpMatrix, y: &FpMatrix) -> FpMatrix {
    let p = x.modulus();
    let trip = (0..x.cols()).flat_map(|c| {
        x.column(c)
            .add_scaled(1, &y.column(c))
            .entries()
            .map(|(r, v)| (r, c, v as i64))
            .collect::<Vec<_>>()
    });
    FpMatrix::from_triplets(p, x.rows(), x.cols(), trip).expect("prime")
}

/// Snake construction: lift a cycle of `C` through `j`, take its boundary in
/// `B`, pull back through `i`, and read off the class in `A`.
fn connecting(
    i_below: &FpMatrix,
    j_here: &FpMatrix,
    b: &ChainComplex,
    d: usize,
    ha_below: &HomologyBasis,
    hc_here: &HomologyBasis,
    p: u32,
) -> FpMatrix {
    let lift_space = ColumnSpace::from_columns(p, j_here.rows(), &j_here.columns());
    let pull_space = ColumnSpace::from_columns(p, i_below.rows(), &i_below.columns());
    let cols: Vec<FpVector> = hc_here
        .reps()
        .iter()
        .map(|z| {
            let lifted = lift_space.express(z).expect("j is surjective");
            let bd = b.apply_boundary(d, &lifted);
            let pulled = pull_space.express(&bd).expect("boundary of a lift lies in the kernel of j");
            ha_below.class_of(&pulled).expect("pulled-back chain is a cycle")
        })
        .collect();
    FpMatrix::from_columns(p, ha_below.dim(), &cols).expect("prime")
}

/// Both long sequences (they coincide for `p = 2`).
pub fn smith_long_exactness_check(s: &SmithDecomposition<'_>) -> Vec<LongExactReport> {
    vec![s.long_exactness(SmithSequence::NFirst), s.long_exactness(SmithSequence::RhoFirst)]
}

/// Matrix of the transfer `H_n(X/G) → H_n(X)`: invariant chains `NC_n`
/// (isomorphic to the chains of the orbit space) included into all chains.
pub fn transfer_matrix(a: &FreeAction, n: usize) -> Result<FpMatrix, CohomologyError> {
    if n > a.dim() {
        return Err(CohomologyError::DegreeOutOfRange { degree: n, dim: a.dim() });
    }
    let s = smith_decomposition(a);
    let maps = s.n_basis.clone();
    let inc = ChainMap::new(&s.n_complex, &s.full, maps)?;
    Ok(inc.induced(n, &s.n_complex.homology(n), &s.full.homology(n)))
}
