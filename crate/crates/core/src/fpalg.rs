//! Exact sparse linear algebra over the prime field `F_p`.
//!
//! Matrices are stored row-major as sorted `(column, value)` lists with every
//! stored value a nonzero residue. Rank, solving and kernels all run through a
//! single incremental row-echelon eliminator: a row is reduced against the
//! stored pivot rows by its leading entry until it either vanishes or opens a
//! new pivot column.
//!
//! The same storage also carries a non-prime modulus (used for `Z/p²` when
//! lifting cocycles for the Bockstein); only multiplication is defined there.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgError {
    #[error("modulus {0} is not prime")]
    NotPrime(u64),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(u32, u32),
    #[error("entry ({row}, {col}) outside a {rows}x{cols} matrix")]
    OutOfRange {
        row: usize,
        col: usize,
        rows: usize,
        cols: usize,
    },
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

#[inline]
pub(crate) fn mul_mod(a: u32, b: u32, m: u32) -> u32 {
    ((a as u64 * b as u64) % m as u64) as u32
}

#[inline]
pub(crate) fn add_mod(a: u32, b: u32, m: u32) -> u32 {
    let s = a as u64 + b as u64;
    (s % m as u64) as u32
}

#[inline]
pub(crate) fn neg_mod(a: u32, m: u32) -> u32 {
    if a == 0 {
        0
    } else {
        m - a
    }
}

#[inline]
pub(crate) fn sub_mod(a: u32, b: u32, m: u32) -> u32 {
    add_mod(a, neg_mod(b % m, m), m)
}

/// Reduce a signed integer into `[0, m)`.
#[inline]
pub(crate) fn reduce_signed(x: i64, m: u32) -> u32 {
    x.rem_euclid(m as i64) as u32
}

/// Multiplicative inverse modulo a prime.
pub(crate) fn inv_mod(a: u32, p: u32) -> u32 {
    debug_assert!(a % p != 0);
    // extended Euclid on i64
    let (mut r0, mut r1) = (p as i64, (a % p) as i64);
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    reduce_signed(t0, p)
}

pub(crate) type SparseRow = Vec<(u32, u32)>;

/// `row += factor * other`, both sorted by column; zeros are dropped.
fn axpy(row: &SparseRow, factor: u32, other: &SparseRow, m: u32, out: &mut SparseRow) {
    out.clear();
    out.reserve(row.len() + other.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() && j < other.len() {
        let (ca, va) = row[i];
        let (cb, vb) = other[j];
        if ca < cb {
            out.push((ca, va));
            i += 1;
        } else if cb < ca {
            out.push((cb, mul_mod(factor, vb, m)));
            j += 1;
        } else {
            let v = add_mod(va, mul_mod(factor, vb, m), m);
            if v != 0 {
                out.push((ca, v));
            }
            i += 1;
            j += 1;
        }
    }
    out.extend_from_slice(&row[i..]);
    out.extend(other[j..].iter().map(|&(c, v)| (c, mul_mod(factor, v, m))));
}

/// Sparse vector over `F_p` (or `Z/m` for a general modulus).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FpVector {
    modulus: u32,
    len: usize,
    entries: SparseRow,
}

impl FpVector {
    pub fn zeros(modulus: u32, len: usize) -> Self {
        FpVector {
            modulus,
            len,
            entries: Vec::new(),
        }
    }

    pub fn from_dense(modulus: u32, values: &[u32]) -> Self {
        let entries = values
            .iter()
            .enumerate()
            .filter_map(|(i, &v)| {
                let v = v % modulus;
                (v != 0).then_some((i as u32, v))
            })
            .collect();
        FpVector {
            modulus,
            len: values.len(),
            entries,
        }
    }

    pub fn from_signed(modulus: u32, values: &[i64]) -> Self {
        let dense: Vec<u32> = values.iter().map(|&v| reduce_signed(v, modulus)).collect();
        Self::from_dense(modulus, &dense)
    }

    /// Build from `(index, value)` pairs; repeated indices are summed.
    pub fn from_entries(modulus: u32, len: usize, pairs: impl IntoIterator<Item = (usize, u32)>) -> Self {
        let mut dense = vec![0u32; len];
        for (i, v) in pairs {
            dense[i] = add_mod(dense[i], v % modulus, modulus);
        }
        Self::from_dense(modulus, &dense)
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize) -> u32 {
        match self.entries.binary_search_by_key(&(i as u32), |e| e.0) {
            Ok(k) => self.entries[k].1,
            Err(_) => 0,
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.entries.iter().map(|&(c, v)| (c as usize, v))
    }

    pub fn to_dense(&self) -> Vec<u32> {
        let mut out = vec![0; self.len];
        for &(c, v) in &self.entries {
            out[c as usize] = v;
        }
        out
    }

    pub fn scaled(&self, factor: u32) -> Self {
        let m = self.modulus;
        let f = factor % m;
        let entries = if f == 0 {
            Vec::new()
        } else {
            self.entries.iter().map(|&(c, v)| (c, mul_mod(v, f, m))).collect()
        };
        FpVector { entries, ..self.clone() }
    }

    /// `self + factor * other`.
    pub fn add_scaled(&self, factor: u32, other: &FpVector) -> Self {
        assert_eq!(self.len, other.len, "vector length mismatch");
        let mut out = Vec::new();
        axpy(&self.entries, factor % self.modulus, &other.entries, self.modulus, &mut out);
        FpVector {
            modulus: self.modulus,
            len: self.len,
            entries: out,
        }
    }

    pub fn dot(&self, other: &FpVector) -> u32 {
        let m = self.modulus;
        let (mut i, mut j) = (0, 0);
        let mut acc = 0u32;
        while i < self.entries.len() && j < other.entries.len() {
            let (ca, va) = self.entries[i];
            let (cb, vb) = other.entries[j];
            match ca.cmp(&cb) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    acc = add_mod(acc, mul_mod(va, vb, m), m);
                    i += 1;
                    j += 1;
                }
            }
        }
        acc
    }
}

/// Sparse matrix over `F_p`, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FpMatrix {
    modulus: u32,
    prime: bool,
    rows: usize,
    cols: usize,
    data: Vec<SparseRow>,
}

impl FpMatrix {
    /// Zero matrix over the prime field `F_p`.
    pub fn zeros(p: u32, rows: usize, cols: usize) -> Result<Self, AlgError> {
        if !is_prime(p as u64) {
            return Err(AlgError::NotPrime(p as u64));
        }
        Ok(FpMatrix {
            modulus: p,
            prime: true,
            rows,
            cols,
            data: vec![Vec::new(); rows],
        })
    }

    /// Zero matrix over `Z/m` for an arbitrary modulus `m ≥ 2`. Elimination is
    /// only available when `m` is prime.
    pub fn zeros_mod(m: u32, rows: usize, cols: usize) -> Self {
        assert!(m >= 2, "modulus must be at least 2");
        FpMatrix {
            modulus: m,
            prime: is_prime(m as u64),
            rows,
            cols,
            data: vec![Vec::new(); rows],
        }
    }

    pub fn identity(p: u32, n: usize) -> Result<Self, AlgError> {
        let mut m = Self::zeros(p, n, n)?;
        for i in 0..n {
            m.data[i].push((i as u32, 1));
        }
        Ok(m)
    }

    /// Build from `(row, col, value)` triplets; duplicates are summed mod `p`.
    pub fn from_triplets(
        p: u32,
        rows: usize,
        cols: usize,
        triplets: impl IntoIterator<Item = (usize, usize, i64)>,
    ) -> Result<Self, AlgError> {
        let mut m = Self::zeros(p, rows, cols)?;
        m.fill_triplets(triplets)?;
        Ok(m)
    }

    #[cfg(test)]
    pub(crate) fn from_triplets_mod(
        modulus: u32,
        rows: usize,
        cols: usize,
        triplets: impl IntoIterator<Item = (usize, usize, i64)>,
    ) -> Self {
        let mut m = Self::zeros_mod(modulus, rows, cols);
        m.fill_triplets(triplets).expect("triplet in range");
        m
    }

    fn fill_triplets(&mut self, triplets: impl IntoIterator<Item = (usize, usize, i64)>) -> Result<(), AlgError> {
        let md = self.modulus;
        for (r, c, v) in triplets {
            if r >= self.rows || c >= self.cols {
                return Err(AlgError::OutOfRange {
                    row: r,
                    col: c,
                    rows: self.rows,
                    cols: self.cols,
                });
            }
            let v = reduce_signed(v, md);
            if v != 0 {
                self.data[r].push((c as u32, v));
            }
        }
        for row in &mut self.data {
            row.sort_unstable_by_key(|e| e.0);
            let mut merged: SparseRow = Vec::with_capacity(row.len());
            for &(c, v) in row.iter() {
                match merged.last_mut() {
                    Some(last) if last.0 == c => last.1 = add_mod(last.1, v, md),
                    _ => merged.push((c, v)),
                }
            }
            merged.retain(|e| e.1 != 0);
            *row = merged;
        }
        Ok(())
    }

    /// Matrix with the given dense rows.
    pub fn from_dense(p: u32, rows: &[Vec<i64>]) -> Result<Self, AlgError> {
        let cols = rows.first().map_or(0, |r| r.len());
        let trip = rows
            .iter()
            .enumerate()
            .flat_map(|(i, r)| r.iter().enumerate().map(move |(j, &v)| (i, j, v)));
        Self::from_triplets(p, rows.len(), cols, trip)
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(p: u32, rows: usize, columns: &[FpVector]) -> Result<Self, AlgError> {
        let trip = columns
            .iter()
            .enumerate()
            .flat_map(|(j, col)| col.entries().map(move |(i, v)| (i, j, v as i64)));
        Self::from_triplets(p, rows, columns.len(), trip)
    }

    /// Rows already sorted by column with nonzero reduced values.
    pub(crate) fn from_sorted_rows(modulus: u32, cols: usize, data: Vec<SparseRow>) -> Self {
        debug_assert!(data.iter().all(|r| r.windows(2).all(|w| w[0].0 < w[1].0)));
        FpMatrix {
            modulus,
            prime: is_prime(modulus as u64),
            rows: data.len(),
            cols,
            data,
        }
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn is_field(&self) -> bool {
        self.prime
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    pub fn get(&self, r: usize, c: usize) -> u32 {
        match self.data[r].binary_search_by_key(&(c as u32), |e| e.0) {
            Ok(k) => self.data[r][k].1,
            Err(_) => 0,
        }
    }

    pub fn row(&self, r: usize) -> FpVector {
        FpVector {
            modulus: self.modulus,
            len: self.cols,
            entries: self.data[r].clone(),
        }
    }

    pub fn column(&self, c: usize) -> FpVector {
        let entries = self
            .data
            .iter()
            .enumerate()
            .filter_map(|(r, row)| {
                row.binary_search_by_key(&(c as u32), |e| e.0)
                    .ok()
                    .map(|k| (r as u32, row[k].1))
            })
            .collect();
        FpVector {
            modulus: self.modulus,
            len: self.rows,
            entries,
        }
    }

    pub fn columns(&self) -> Vec<FpVector> {
        let t = self.transpose();
        (0..t.rows).map(|r| t.row(r)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Vec::is_empty)
    }

    pub fn to_dense(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|r| self.row(r).to_dense()).collect()
    }

    pub fn transpose(&self) -> FpMatrix {
        let mut data = vec![Vec::new(); self.cols];
        for (r, row) in self.data.iter().enumerate() {
            for &(c, v) in row {
                data[c as usize].push((r as u32, v));
            }
        }
        FpMatrix {
            modulus: self.modulus,
            prime: self.prime,
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    pub fn mul_vec(&self, x: &FpVector) -> Result<FpVector, AlgError> {
        if x.len != self.cols {
            return Err(AlgError::DimensionMismatch {
                expected: self.cols,
                got: x.len,
            });
        }
        let dense = x.to_dense();
        Ok(FpVector::from_dense(self.modulus, &self.mul_dense(&dense)))
    }

    /// Multiply by a dense vector of residues.
    pub fn mul_dense(&self, x: &[u32]) -> Vec<u32> {
        let m = self.modulus;
        self.data
            .iter()
            .map(|row| {
                row.iter()
                    .fold(0u32, |acc, &(c, v)| add_mod(acc, mul_mod(v, x[c as usize], m), m))
            })
            .collect()
    }

    pub fn mul(&self, other: &FpMatrix) -> Result<FpMatrix, AlgError> {
        if self.cols != other.rows {
            return Err(AlgError::DimensionMismatch {
                expected: self.cols,
                got: other.rows,
            });
        }
        if self.modulus != other.modulus {
            return Err(AlgError::ModulusMismatch(self.modulus, other.modulus));
        }
        let m = self.modulus;
        let mut out = FpMatrix {
            modulus: m,
            prime: self.prime,
            rows: self.rows,
            cols: other.cols,
            data: Vec::with_capacity(self.rows),
        };
        let mut acc: SparseRow = Vec::new();
        let mut tmp: SparseRow = Vec::new();
        for row in &self.data {
            acc.clear();
            for &(k, v) in row {
                axpy(&acc, v, &other.data[k as usize], m, &mut tmp);
                std::mem::swap(&mut acc, &mut tmp);
            }
            out.data.push(acc.clone());
        }
        Ok(out)
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &FpMatrix) -> Result<FpMatrix, AlgError> {
        if self.rows != other.rows {
            return Err(AlgError::DimensionMismatch {
                expected: self.rows,
                got: other.rows,
            });
        }
        let shift = self.cols as u32;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| {
                let mut r = a.clone();
                r.extend(b.iter().map(|&(c, v)| (c + shift, v)));
                r
            })
            .collect();
        Ok(FpMatrix {
            modulus: self.modulus,
            prime: self.prime,
            rows: self.rows,
            cols: self.cols + other.cols,
            data,
        })
    }

    fn assert_field(&self) {
        assert!(self.prime, "elimination requires a prime modulus, got {}", self.modulus);
    }

    /// Dimension of the row space over `F_p`.
    pub fn rank(&self) -> usize {
        self.assert_field();
        let mut elim = Eliminator::new(self.modulus, self.cols);
        for row in &self.data {
            elim.insert(row.clone());
        }
        elim.rank()
    }

    /// Some `x` with `M x = b`, or `None` when `b` is not in the column space.
    pub fn solve(&self, b: &FpVector) -> Result<Option<FpVector>, AlgError> {
        self.assert_field();
        if b.len != self.rows {
            return Err(AlgError::DimensionMismatch {
                expected: self.rows,
                got: b.len,
            });
        }
        let dense_b = b.to_dense();
        Ok(self
            .solve_dense(&dense_b)
            .map(|x| FpVector::from_dense(self.modulus, &x)))
    }

    /// Dense variant of [`FpMatrix::solve`] working on residue slices.
    pub fn solve_dense(&self, b: &[u32]) -> Option<Vec<u32>> {
        self.assert_field();
        assert_eq!(b.len(), self.rows);
        let aug = self.cols as u32;
        let mut elim = Eliminator::new(self.modulus, self.cols + 1);
        for (row, &bv) in self.data.iter().zip(b) {
            let mut r = row.clone();
            let bv = bv % self.modulus;
            if bv != 0 {
                r.push((aug, bv));
            }
            if let Some(lead) = elim.insert(r) {
                if lead == aug as usize {
                    return None;
                }
            }
        }
        Some(elim.back_substitute(self.cols, None))
    }

    /// A basis of `{x : M x = 0}`.
    pub fn kernel_basis(&self) -> Vec<FpVector> {
        self.assert_field();
        let mut elim = Eliminator::new(self.modulus, self.cols);
        for row in &self.data {
            elim.insert(row.clone());
        }
        let free: Vec<usize> = (0..self.cols).filter(|&c| !elim.has_pivot(c)).collect();
        free.iter()
            .map(|&f| FpVector::from_dense(self.modulus, &elim.back_substitute(self.cols, Some(f))))
            .collect()
    }

    /// Indices of columns that are pivots when the columns are scanned left to
    /// right, i.e. a maximal independent subset chosen greedily.
    pub fn pivot_columns(&self) -> Vec<usize> {
        let t = self.transpose();
        let mut elim = Eliminator::new(self.modulus, self.rows);
        let mut out = Vec::new();
        for (j, row) in t.data.iter().enumerate() {
            if elim.insert(row.clone()).is_some() {
                out.push(j);
            }
        }
        out
    }
}

/// Incremental row-echelon form. Pivot rows are normalised to a leading 1 and
/// only ever contain columns to the right of their leading column.
pub(crate) struct Eliminator {
    modulus: u32,
    pivot_of_col: Vec<u32>,
    rows: Vec<SparseRow>,
    scratch: SparseRow,
}

const NO_PIVOT: u32 = u32::MAX;

impl Eliminator {
    pub(crate) fn new(modulus: u32, width: usize) -> Self {
        Eliminator {
            modulus,
            pivot_of_col: vec![NO_PIVOT; width],
            rows: Vec::new(),
            scratch: Vec::new(),
        }
    }

    pub(crate) fn rank(&self) -> usize {
        self.rows.len()
    }

    pub(crate) fn has_pivot(&self, col: usize) -> bool {
        self.pivot_of_col[col] != NO_PIVOT
    }

    /// Reduce `row` until its leading column carries no pivot.
    pub(crate) fn reduce(&mut self, row: &mut SparseRow) {
        let m = self.modulus;
        while let Some(&(lead, val)) = row.first() {
            let pr = self.pivot_of_col[lead as usize];
            if pr == NO_PIVOT {
                break;
            }
            let factor = neg_mod(val, m);
            axpy(row, factor, &self.rows[pr as usize], m, &mut self.scratch);
            std::mem::swap(row, &mut self.scratch);
        }
    }

    /// Insert a row; returns its leading column when it opens a new pivot.
    pub(crate) fn insert(&mut self, mut row: SparseRow) -> Option<usize> {
        self.reduce(&mut row);
        let &(lead, val) = row.first()?;
        if val != 1 {
            let inv = inv_mod(val, self.modulus);
            for e in row.iter_mut() {
                e.1 = mul_mod(e.1, inv, self.modulus);
            }
        }
        self.pivot_of_col[lead as usize] = self.rows.len() as u32;
        self.rows.push(row);
        Some(lead as usize)
    }

    /// Solve by back substitution over the first `n` columns; column `n`, when
    /// present, holds the right-hand side. With `free = Some(f)` the free
    /// variable `f` is set to 1 and the right-hand side is ignored.
    pub(crate) fn back_substitute(&self, n: usize, free: Option<usize>) -> Vec<u32> {
        let m = self.modulus;
        let mut x = vec![0u32; n];
        if let Some(f) = free {
            x[f] = 1;
        }
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_unstable_by_key(|&r| std::cmp::Reverse(self.rows[r][0].0));
        for r in order {
            let row = &self.rows[r];
            let lead = row[0].0 as usize;
            if lead >= n {
                continue;
            }
            let mut acc = 0u32;
            for &(c, v) in &row[1..] {
                let c = c as usize;
                if c < n {
                    acc = add_mod(acc, mul_mod(v, x[c], m), m);
                } else if free.is_none() {
                    // right-hand side sits on the other side of the equation
                    acc = sub_mod(acc, v, m);
                }
            }
            x[lead] = neg_mod(acc, m);
        }
        x
    }
}

/// Span of a fixed list of vectors, able to write any member of the span as
/// an explicit combination of the generators.
#[derive(Debug, Clone)]
pub struct ColumnSpace {
    modulus: u32,
    len: usize,
    generators: usize,
    pivot_of_col: Vec<u32>,
    // echelon row and the generator combination producing it
    rows: Vec<(SparseRow, SparseRow)>,
}

impl ColumnSpace {
    pub fn new(modulus: u32, len: usize) -> Self {
        assert!(is_prime(modulus as u64), "span requires a prime modulus");
        ColumnSpace {
            modulus,
            len,
            generators: 0,
            pivot_of_col: vec![NO_PIVOT; len],
            rows: Vec::new(),
        }
    }

    pub fn from_columns(modulus: u32, len: usize, columns: &[FpVector]) -> Self {
        let mut s = Self::new(modulus, len);
        for c in columns {
            s.push(c);
        }
        s
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn generator_count(&self) -> usize {
        self.generators
    }

    fn reduce(&self, v: &FpVector, combo: &mut SparseRow) -> SparseRow {
        let m = self.modulus;
        let mut row = v.entries.clone();
        let mut scratch = Vec::new();
        while let Some(&(lead, val)) = row.first() {
            let pr = self.pivot_of_col[lead as usize];
            if pr == NO_PIVOT {
                break;
            }
            let factor = neg_mod(val, m);
            let (prow, pcombo) = &self.rows[pr as usize];
            axpy(&row, factor, prow, m, &mut scratch);
            std::mem::swap(&mut row, &mut scratch);
            axpy(combo, factor, pcombo, m, &mut scratch);
            std::mem::swap(combo, &mut scratch);
        }
        row
    }

    /// Append a generator; returns true when it enlarges the span.
    pub fn push(&mut self, v: &FpVector) -> bool {
        assert_eq!(v.len, self.len);
        let m = self.modulus;
        let id = self.generators as u32;
        self.generators += 1;
        let mut combo: SparseRow = Vec::new();
        let mut row = self.reduce(v, &mut combo);
        // combo holds -(coefficients); the new echelon row is v + combo·gens
        let mut with_self = Vec::new();
        axpy(&combo, 1, &vec![(id, 1)], m, &mut with_self);
        combo = with_self;
        let Some(&(lead, val)) = row.first() else {
            return false;
        };
        if val != 1 {
            let inv = inv_mod(val, m);
            for e in row.iter_mut().chain(combo.iter_mut()) {
                e.1 = mul_mod(e.1, inv, m);
            }
        }
        self.pivot_of_col[lead as usize] = self.rows.len() as u32;
        self.rows.push((row, combo));
        true
    }

    /// Coefficients `x` with `v = Σ x_j g_j`, or `None` when `v` is outside
    /// the span.
    pub fn express(&self, v: &FpVector) -> Option<FpVector> {
        let mut combo = Vec::new();
        let rest = self.reduce(v, &mut combo);
        if !rest.is_empty() {
            return None;
        }
        // v - (-combo)·gens = 0
        let m = self.modulus;
        let entries = combo.into_iter().map(|(c, x)| (c, neg_mod(x, m))).collect();
        Some(FpVector {
            modulus: m,
            len: self.generators,
            entries,
        })
    }

    pub fn contains(&self, v: &FpVector) -> bool {
        let mut combo = Vec::new();
        self.reduce(v, &mut combo).is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_solutions(m: &FpMatrix, b: &[u32]) -> Vec<Vec<u32>> {
        let p = m.modulus();
        let n = m.cols();
        let mut out = Vec::new();
        let total = (p as usize).pow(n as u32);
        for code in 0..total {
            let mut x = vec![0u32; n];
            let mut c = code;
            for xi in x.iter_mut() {
                *xi = (c % p as usize) as u32;
                c /= p as usize;
            }
            if m.mul_dense(&x) == b {
                out.push(x);
            }
        }
        out
    }

    #[test]
    fn rank_examples() {
        assert_eq!(FpMatrix::zeros(2, 3, 3).unwrap().rank(), 0);
        assert_eq!(FpMatrix::identity(3, 4).unwrap().rank(), 4);
        let m = FpMatrix::from_dense(2, &[vec![1, 1], vec![1, 1]]).unwrap();
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn non_prime_rejected() {
        assert_eq!(FpMatrix::zeros(4, 1, 1), Err(AlgError::NotPrime(4)));
        assert!(FpMatrix::zeros(1, 1, 1).is_err());
    }

    #[test]
    fn entries_are_reduced_and_nonzero() {
        let m = FpMatrix::from_triplets(3, 2, 2, [(0, 0, 3), (0, 1, -1), (1, 1, 2), (1, 1, 1)]).unwrap();
        assert_eq!(m.to_dense(), vec![vec![0, 2], vec![0, 0]]);
        assert_eq!(m.nnz(), 1);
    }

    #[test]
    fn solve_identity_and_zero() {
        let id = FpMatrix::identity(5, 3).unwrap();
        let b = FpVector::from_dense(5, &[4, 0, 2]);
        assert_eq!(id.solve(&b).unwrap(), Some(b.clone()));
        let z = FpMatrix::zeros(5, 3, 3).unwrap();
        assert_eq!(z.solve(&b).unwrap(), None);
        assert!(z.solve(&FpVector::zeros(5, 2)).is_err());
    }

    #[test]
    fn solve_single_row_matches_enumeration() {
        let m = FpMatrix::from_dense(2, &[vec![1, 1]]).unwrap();
        let b = FpVector::from_dense(2, &[1]);
        let all = brute_solutions(&m, &[1]);
        assert_eq!(all, vec![vec![1, 0], vec![0, 1]]);
        let x = m.solve(&b).unwrap().unwrap().to_dense();
        assert!(all.contains(&x));
    }

    #[test]
    fn kernel_examples() {
        assert!(FpMatrix::identity(7, 4).unwrap().kernel_basis().is_empty());
        assert_eq!(FpMatrix::zeros(5, 1, 3).unwrap().kernel_basis().len(), 3);
        let m = FpMatrix::from_dense(3, &[vec![1, 2]]).unwrap();
        let k = m.kernel_basis();
        assert_eq!(k.len(), 1);
        // F_3^2 enumeration: the kernel is {(0,0),(1,1),(2,2)}
        let kernel = brute_solutions(&m, &[0]);
        assert_eq!(kernel, vec![vec![0, 0], vec![1, 1], vec![2, 2]]);
        assert!(kernel.contains(&k[0].to_dense()));
        assert!(!k[0].is_zero());
    }

    #[test]
    fn inverse_mod() {
        for p in [2u32, 3, 5, 7, 11, 13] {
            for a in 1..p {
                assert_eq!(mul_mod(a, inv_mod(a, p), p), 1);
            }
        }
    }

    #[test]
    fn product_and_transpose() {
        let a = FpMatrix::from_dense(5, &[vec![1, 2, 0], vec![0, 3, 4]]).unwrap();
        let b = FpMatrix::from_dense(5, &[vec![1, 0], vec![2, 1], vec![0, 1]]).unwrap();
        let c = a.mul(&b).unwrap();
        assert_eq!(c.to_dense(), vec![vec![0, 2], vec![1, 2]]);
        assert_eq!(a.transpose().transpose(), a);
    }

    #[test]
    fn composite_modulus_multiplication() {
        let m = FpMatrix::from_triplets_mod(9, 1, 2, [(0, 0, 1), (0, 1, -1)]);
        assert!(!m.is_field());
        assert_eq!(m.mul_dense(&[2, 5]), vec![6]);
    }

    #[test]
    fn pivot_columns_greedy() {
        let m = FpMatrix::from_dense(2, &[vec![1, 1, 0], vec![0, 0, 1]]).unwrap();
        assert_eq!(m.pivot_columns(), vec![0, 2]);
    }
    #[test]
    fn column_space_expresses_members() {
        let p = 5;
        let cols = [
            FpVector::from_dense(p, &[1, 2, 0]),
            FpVector::from_dense(p, &[2, 4, 0]),
            FpVector::from_dense(p, &[0, 1, 3]),
        ];
        let span = ColumnSpace::from_columns(p, 3, &cols);
        assert_eq!((span.rank(), span.generator_count()), (2, 3));
        let target = FpVector::from_dense(p, &[3, 3, 1]);
        let x = span.express(&target).expect("in span");
        let mut acc = FpVector::zeros(p, 3);
        for (j, c) in cols.iter().enumerate() {
            acc = acc.add_scaled(x.get(j), c);
        }
        assert_eq!(acc, target);
        assert!(span.express(&FpVector::from_dense(p, &[0, 0, 1])).is_none());
    }
}
