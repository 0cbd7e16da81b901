//! Finite chain complexes over `F_p` given by explicit matrices, with chosen
//! homology bases and induced maps.

use rayon::prelude::*;

use super::{CohomologyError, OrderedComplex};
use crate::fpalg::{AlgError, ColumnSpace, FpMatrix, FpVector};

#[derive(Debug, Clone)]
pub struct ChainComplex {
    p: u32,
    dims: Vec<usize>,
    // bd[k - 1] = ∂_k : C_k → C_{k-1}
    bd: Vec<FpMatrix>,
}

fn shape_error(expected: usize, got: usize) -> CohomologyError {
    CohomologyError::Alg(AlgError::DimensionMismatch { expected, got })
}

impl ChainComplex {
    /// `boundaries[k - 1]` is `∂_k`; checks shapes and `∂∂ = 0`.
    pub fn new(p: u32, dims: Vec<usize>, boundaries: Vec<FpMatrix>) -> Result<Self, CohomologyError> {
        if boundaries.len() + 1 != dims.len() {
            return Err(shape_error(dims.len().saturating_sub(1), boundaries.len()));
        }
        for (k, m) in boundaries.iter().enumerate() {
            if m.modulus() != p {
                return Err(CohomologyError::PMismatch(p, m.modulus()));
            }
            if m.rows() != dims[k] || m.cols() != dims[k + 1] {
                return Err(shape_error(dims[k] * dims[k + 1], m.rows() * m.cols()));
            }
        }
        for (k, w) in boundaries.windows(2).enumerate() {
            if !w[0].mul(&w[1])?.is_zero() {
                return Err(CohomologyError::NotAChainComplex(k + 2));
            }
        }
        Ok(ChainComplex { p, dims, bd: boundaries })
    }

    pub fn from_ordered(k: &OrderedComplex, p: u32) -> Self {
        let dims = k.f_vector();
        let bd = (1..=k.dim()).map(|d| k.boundary_matrix(d, p).expect("degree in range")).collect();
        ChainComplex { p, dims, bd }
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn top(&self) -> usize {
        self.dims.len() - 1
    }

    pub fn dim(&self, k: usize) -> usize {
        self.dims.get(k).copied().unwrap_or(0)
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// `∂_k`, for `1 ≤ k ≤ top`.
    pub fn boundary(&self, k: usize) -> &FpMatrix {
        &self.bd[k - 1]
    }

    pub fn apply_boundary(&self, k: usize, c: &FpVector) -> FpVector {
        if k == 0 || k > self.top() {
            return FpVector::zeros(self.p, if k == 0 { 0 } else { self.dim(k - 1) });
        }
        self.boundary(k).mul_vec(c).expect("shape")
    }

    pub fn homology_dims(&self) -> Vec<usize> {
        let ranks: Vec<usize> = (0..=self.top() + 1)
            .into_par_iter()
            .map(|k| if k == 0 || k > self.top() { 0 } else { self.boundary(k).rank() })
            .collect();
        (0..=self.top()).map(|k| self.dims[k] - ranks[k] - ranks[k + 1]).collect()
    }

    /// Cycle representatives extending a boundary basis, chosen greedily from
    /// the echelon kernel basis, so the choice is deterministic.
    pub fn homology(&self, k: usize) -> HomologyBasis {
        let n = self.dim(k);
        let mut space = ColumnSpace::new(self.p, n);
        let mut boundary_gens = 0;
        if k < self.top() {
            for col in self.boundary(k + 1).columns() {
                if !col.is_zero() {
                    space.push(&col);
                    boundary_gens += 1;
                }
            }
        }
        let cycles: Vec<FpVector> = if k == 0 {
            (0..n).map(|i| FpVector::from_entries(self.p, n, [(i, 1)])).collect()
        } else {
            self.boundary(k).kernel_basis()
        };
        let mut reps = Vec::new();
        let mut rep_of_gen = vec![None; boundary_gens];
        for z in cycles {
            if space.push(&z) {
                rep_of_gen.push(Some(reps.len()));
                reps.push(z);
            } else {
                rep_of_gen.push(None);
            }
        }
        HomologyBasis {
            degree: k,
            p: self.p,
            space,
            rep_of_gen,
            reps,
        }
    }

    pub fn homology_all(&self) -> Vec<HomologyBasis> {
        (0..=self.top()).into_par_iter().map(|k| self.homology(k)).collect()
    }
}

/// A basis of `H_k` given by cycle representatives.
#[derive(Debug, Clone)]
pub struct HomologyBasis {
    degree: usize,
    p: u32,
    space: ColumnSpace,
    rep_of_gen: Vec<Option<usize>>,
    reps: Vec<FpVector>,
}

impl HomologyBasis {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.reps.len()
    }

    pub fn reps(&self) -> &[FpVector] {
        &self.reps
    }

    /// Coordinates of the class of a cycle `z`; `None` if `z` is not a cycle.
    pub fn class_of(&self, z: &FpVector) -> Option<FpVector> {
        let coeffs = self.space.express(z)?;
        let entries: Vec<(usize, u32)> = coeffs
            .entries()
            .filter_map(|(g, v)| self.rep_of_gen[g].map(|r| (r, v)))
            .collect();
        Some(FpVector::from_entries(self.p, self.reps.len(), entries))
    }
}

/// Levelwise matrices `f_k : A_k → B_k`.
#[derive(Debug, Clone)]
pub struct ChainMap {
    maps: Vec<FpMatrix>,
}

impl ChainMap {
    /// Checks shapes and `∂f = f∂`.
    pub fn new(src: &ChainComplex, tgt: &ChainComplex, maps: Vec<FpMatrix>) -> Result<Self, CohomologyError> {
        if maps.len() != src.top() + 1 {
            return Err(shape_error(src.top() + 1, maps.len()));
        }
        for (k, f) in maps.iter().enumerate() {
            if f.rows() != tgt.dim(k) || f.cols() != src.dim(k) {
                return Err(shape_error(tgt.dim(k) * src.dim(k), f.rows() * f.cols()));
            }
            if k >= 1 && k <= tgt.top() {
                let lhs = tgt.boundary(k).mul(f)?;
                let rhs = maps[k - 1].mul(src.boundary(k))?;
                if lhs != rhs {
                    return Err(CohomologyError::NotAChainMap(k));
                }
            }
        }
        Ok(ChainMap { maps })
    }

    pub fn level(&self, k: usize) -> &FpMatrix {
        &self.maps[k]
    }

    pub fn apply(&self, k: usize, c: &FpVector) -> FpVector {
        self.maps[k].mul_vec(c).expect("shape")
    }

    /// Matrix of `H_k(f)` in the given bases.
    pub fn induced(&self, k: usize, src: &HomologyBasis, tgt: &HomologyBasis) -> FpMatrix {
        let p = self.maps[k].modulus();
        let cols: Vec<FpVector> = src
            .reps()
            .iter()
            .map(|z| tgt.class_of(&self.apply(k, z)).expect("chain maps send cycles to cycles"))
            .collect();
        FpMatrix::from_columns(p, tgt.dim(), &cols).expect("prime modulus")
    }
}
