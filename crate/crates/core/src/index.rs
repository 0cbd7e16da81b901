//! The homological index.
//!
//! For `p = 2` the class in degree `k` is `w^k`, with `w` the covering
//! cocycle of the orbit space. For odd `p` it is `u^a` in degree `2a` and
//! `u^a ∪ v` in degree `2a + 1`, with `v` the covering cocycle and `u = β(v)`.
//! This assumes the usual description of `H^*(BZ/p; F_p)` as an exterior
//! algebra on `v` tensored with a polynomial algebra on `u`.
//!
//! Whether the class in degree `k` vanishes depends only on simplices of
//! dimension `k - 1` and `k`, so truncated complexes give exact answers as
//! long as vanishing is observed inside the truncation.

use serde::Serialize;
use thiserror::Error;

use crate::actions::{
    disjoint_union_action, e_k_g, join_action, product_action_up_to, walker_product_action_up_to, ActionError,
    FreeAction, QuotientData,
};
use crate::cohomology::{Cochain, OrderedComplex};
use crate::complexes::{SComplex, SimplicialMap};
use crate::fpalg::{reduce_signed, sub_mod};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IndexError {
    #[error(transparent)]
    Action(#[from] ActionError),
    #[error("class vanished in degree {0} but not in the next degree")]
    MonotonicityViolated(usize),
    #[error("certificate map does not start at E_kG or does not end at the action's complex")]
    TargetMismatch,
    #[error("maps must be equivariant simplicial maps")]
    NotEquivariant,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "value")]
pub enum HindBound {
    Exact(usize),
    AtLeast(usize),
}

impl HindBound {
    pub fn exact(self) -> Option<usize> {
        match self {
            HindBound::Exact(h) => Some(h),
            HindBound::AtLeast(_) => None,
        }
    }

    pub fn lower(self) -> usize {
        match self {
            HindBound::Exact(h) | HindBound::AtLeast(h) => h,
        }
    }
}

impl std::fmt::Display for HindBound {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            HindBound::Exact(h) => write!(f, "{h}"),
            HindBound::AtLeast(h) => write!(f, ">={h}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IndexReport {
    pub hind: usize,
    pub dim: usize,
    /// `vanishing[k]`: the characteristic class in degree `k` is zero.
    pub vanishing: Vec<bool>,
    #[serde(skip)]
    pub p: u32,
    /// `hind ≤ ind ≤ dim`.
    #[serde(skip)]
    pub ind_bracket: (usize, usize),
    #[serde(skip)]
    pub covering: Vec<u32>,
    #[serde(skip)]
    pub bockstein: Option<Vec<u32>>,
}

/// The covering 1-cocycle: on a quotient edge with representative `(x, y)`
/// (orbit order) the value is `k` with `y = g^k · section(orbit of y)`.
pub fn covering_class<'q>(q: &'q QuotientData<'_>) -> Cochain<'q> {
    covering_class_with_section(q, q.section()).expect("the default section is a section")
}

/// The covering cocycle relative to any choice of one vertex per orbit.
pub fn covering_class_with_section<'q>(q: &'q QuotientData<'_>, section: &[u32]) -> Option<Cochain<'q>> {
    let p = q.p();
    let qc = q.quotient();
    if section.len() != qc.vertex_count() {
        return None;
    }
    // t[o]: section(o) = g^{t[o]} · default section(o)
    let mut t = Vec::with_capacity(section.len());
    for (o, &s) in section.iter().enumerate() {
        if q.projection().get(s as usize) != Some(&(o as u32)) {
            return None;
        }
        t.push(q.exponent(s));
    }
    let mut values = Vec::with_capacity(qc.count(1));
    for i in 0..qc.count(1) {
        let lift = q.lift(1, i);
        let (a, b) = {
            let (x, y) = (lift[0], lift[1]);
            if q.projection()[x as usize] < q.projection()[y as usize] {
                (x, y)
            } else {
                (y, x)
            }
        };
        let (oa, ob) = (q.projection()[a as usize] as usize, q.projection()[b as usize] as usize);
        let base = sub_mod(q.exponent(b), q.exponent(a), p);
        values.push(reduce_signed(base as i64 + t[oa] as i64 - t[ob] as i64, p) as i64);
    }
    Some(Cochain::from_values(qc, 1, p, &values).expect("edge count"))
}

struct ClassRun {
    /// first vanishing degree among those computed
    vanishing_at: Option<usize>,
    top: usize,
    covering: Vec<u32>,
    bockstein: Option<Vec<u32>>,
}

/// Compute classes in degrees `1..=top` of the quotient complex, stopping at
/// the first vanishing one and checking the next degree vanishes too.
fn run_classes<'c>(q: &QuotientData<'_>, qc: &'c OrderedComplex) -> Result<ClassRun, IndexError> {
    let p = q.p();
    let top = qc.dim();
    let w = covering_on(q, qc);
    assert!(w.is_cocycle(), "covering cochain is a cocycle");
    let covering = w.values().to_vec();
    let mut classes: Vec<Cochain<'c>> = vec![Cochain::one(qc, p)];
    let u = if p == 2 { None } else { Some(w.bockstein().expect("cocycle")) };
    let bockstein = u.as_ref().map(|u| u.values().to_vec());
    let next = |classes: &[Cochain<'c>], k: usize| next_class(classes, k, &w, u.as_ref());
    for k in 1..=top {
        let c = next(&classes, k);
        let witness = c.is_coboundary().expect("classes are cocycles");
        classes.push(c);
        let Some(x) = witness else {
            continue;
        };
        if k < top {
            let odd_step_by_cup = u.is_none() || k % 2 == 0;
            let follows = if odd_step_by_cup {
                // c_k = δx gives c_k ∪ w = δ(x ∪ w)
                let lhs = x.cup(&w).expect("same complex").coboundary();
                lhs == classes[k].cup(&w).expect("same complex") && next(&classes, k + 1) == lhs
            } else {
                next(&classes, k + 1).is_coboundary().expect("cocycle").is_some()
            };
            if !follows {
                return Err(IndexError::MonotonicityViolated(k));
            }
        }
        return Ok(ClassRun {
            vanishing_at: Some(k),
            top,
            covering,
            bockstein,
        });
    }
    Ok(ClassRun {
        vanishing_at: None,
        top,
        covering,
        bockstein,
    })
}

fn next_class<'c>(classes: &[Cochain<'c>], k: usize, w: &Cochain<'c>, u: Option<&Cochain<'c>>) -> Cochain<'c> {
    let c = match u {
        Some(u) if k % 2 == 0 => classes[k - 2].cup(u),
        _ => classes[k - 1].cup(w),
    };
    c.expect("same complex")
}

fn covering_on<'c>(q: &QuotientData<'_>, qc: &'c OrderedComplex) -> Cochain<'c> {
    let w = covering_class(q);
    let n1 = qc.count(1);
    let vals: Vec<i64> = w.values()[..n1].iter().map(|&v| v as i64).collect();
    Cochain::from_values(qc, 1, q.p(), &vals).expect("edge count")
}

/// The homological index with its vanishing table.
pub fn hind(a: &FreeAction) -> Result<IndexReport, IndexError> {
    let q = a.quotient();
    let run = run_classes(&q, q.quotient())?;
    let dim = a.dim();
    let hind = run.vanishing_at.map_or(dim, |k| k - 1);
    let vanishing = (0..=dim).map(|k| k > hind).collect();
    Ok(IndexReport {
        hind,
        dim,
        vanishing,
        p: a.p(),
        ind_bracket: (hind, dim),
        covering: run.covering,
        bockstein: run.bockstein,
    })
}

/// Vanishing of every class through the top dimension, without stopping at
/// the first zero.
pub fn full_vanishing_table(a: &FreeAction) -> Vec<bool> {
    let q = a.quotient();
    let qc = q.quotient();
    let p = a.p();
    let w = covering_on(&q, qc);
    let u = if p == 2 { None } else { Some(w.bockstein().expect("cocycle")) };
    let mut classes = vec![Cochain::one(qc, p)];
    let mut table = vec![false];
    for k in 1..=qc.dim() {
        let c = next_class(&classes, k, &w, u.as_ref());
        table.push(c.is_coboundary().expect("classes are cocycles").is_some());
        classes.push(c);
    }
    table
}

/// Index of an action whose complex is known to agree with the intended one
/// in all dimensions `≤ complete_through`.
pub fn hind_bound(a: &FreeAction, complete_through: usize) -> Result<HindBound, IndexError> {
    let q = a.quotient();
    let qc = q.quotient().truncated(complete_through);
    let run = run_classes(&q, &qc)?;
    Ok(match run.vanishing_at {
        Some(k) => HindBound::Exact(k - 1),
        None if run.top < complete_through => HindBound::Exact(run.top),
        None => HindBound::AtLeast(run.top),
    })
}

/// `hind` from the `(d+1)`-skeleton: exact below `d`, otherwise `AtLeast(d)`.
pub fn hind_up_to(a: &FreeAction, d: usize) -> Result<HindBound, IndexError> {
    let sk = a.skeleton(d + 1);
    let b = hind_bound(&sk, d + 1)?;
    Ok(match b {
        HindBound::Exact(h) if h < d || d >= a.dim() => HindBound::Exact(h),
        _ => HindBound::AtLeast(d),
    })
}

/// Outcome of checking one formula instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FormulaReport {
    pub p: u32,
    pub hind_a: usize,
    pub hind_b: usize,
    pub observed: HindBound,
    /// Predicted bracket; equal ends mean the formula predicts equality.
    pub lower: usize,
    pub upper: usize,
    pub holds: bool,
}

impl FormulaReport {
    fn judge(p: u32, hind_a: usize, hind_b: usize, observed: HindBound, lower: usize, upper: usize) -> Self {
        let holds = match observed {
            HindBound::Exact(h) => lower <= h && h <= upper,
            HindBound::AtLeast(_) => false,
        };
        FormulaReport {
            p,
            hind_a,
            hind_b,
            observed,
            lower,
            upper,
            holds,
        }
    }

    pub fn predicts_equality(&self) -> bool {
        self.lower == self.upper
    }
}

/// Join bracket: equality `ha + hb + 1` for `p = 2` or both indexes odd;
/// otherwise at least the larger index and at most `ha + hb + 1` (one odd)
/// or `ha + hb + 2`.
pub fn join_bracket(p: u32, ha: usize, hb: usize) -> (usize, usize) {
    let sum = ha + hb;
    if p == 2 || (ha % 2 == 1 && hb % 2 == 1) {
        (sum + 1, sum + 1)
    } else if ha % 2 == 1 || hb % 2 == 1 {
        (ha.max(hb), sum + 1)
    } else {
        (ha.max(hb), sum + 2)
    }
}

/// Product bracket: `min` for `p = 2` or odd `min`, else `[min - 1, min]`.
pub fn product_bracket(p: u32, ha: usize, hb: usize) -> (usize, usize) {
    let m = ha.min(hb);
    if p == 2 || m % 2 == 1 {
        (m, m)
    } else {
        (m.saturating_sub(1), m)
    }
}

pub fn verify_join_formula(a: &FreeAction, b: &FreeAction) -> Result<FormulaReport, IndexError> {
    let j = join_action(a, b)?;
    let (ha, hb) = (hind(a)?.hind, hind(b)?.hind);
    let hj = hind(&j)?.hind;
    let (lo, hi) = join_bracket(a.p(), ha, hb);
    Ok(FormulaReport::judge(a.p(), ha, hb, HindBound::Exact(hj), lo, hi))
}

/// How to triangulate a product.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ProductModel {
    /// Orbit-ordered staircase triangulation.
    Staircase,
    /// Order complex of the product of face posets.
    Walker,
}

/// Index of `a × b`, triangulating only through dimension `min + 1` where
/// `min` is the smaller factor index.
pub fn product_hind(a: &FreeAction, b: &FreeAction, model: ProductModel) -> Result<(usize, usize, HindBound), IndexError> {
    let (ha, hb) = (hind(a)?.hind, hind(b)?.hind);
    let cap = ha.min(hb) + 1;
    let prod = match model {
        ProductModel::Staircase => product_action_up_to(a, b, cap)?,
        ProductModel::Walker => walker_product_action_up_to(a, b, cap)?,
    };
    Ok((ha, hb, hind_bound(&prod, cap)?))
}

pub fn verify_product_formula(a: &FreeAction, b: &FreeAction) -> Result<FormulaReport, IndexError> {
    verify_product_formula_with(a, b, ProductModel::Staircase)
}

pub fn verify_product_formula_with(a: &FreeAction, b: &FreeAction, model: ProductModel) -> Result<FormulaReport, IndexError> {
    let (ha, hb, observed) = product_hind(a, b, model)?;
    let (lo, hi) = product_bracket(a.p(), ha, hb);
    Ok(FormulaReport::judge(a.p(), ha, hb, observed, lo, hi))
}

/// `hind(X × E_n G)` against `min(hind X, n)`.
pub fn verify_model_product(a: &FreeAction, n: usize, model: ProductModel) -> Result<FormulaReport, IndexError> {
    let e = e_k_g(a.p(), n);
    let (ha, hn, observed) = product_hind(a, &e, model)?;
    let m = ha.min(n);
    debug_assert_eq!(hn, n);
    Ok(FormulaReport::judge(a.p(), ha, hn, observed, m, m))
}

/// `hind(X ⊔ Y) = max`.
pub fn verify_disjoint_union(a: &FreeAction, b: &FreeAction) -> Result<FormulaReport, IndexError> {
    let u = disjoint_union_action(a, b)?;
    let (ha, hb) = (hind(a)?.hind, hind(b)?.hind);
    let hu = hind(&u)?.hind;
    let m = ha.max(hb);
    Ok(FormulaReport::judge(a.p(), ha, hb, HindBound::Exact(hu), m, m))
}

/// Vertex map check `f ∘ g = g' ∘ f`.
pub fn is_equivariant(source: &FreeAction, target: &FreeAction, vertex_map: &[u32]) -> bool {
    source.p() == target.p()
        && vertex_map.len() == source.complex().vertex_count()
        && (0..vertex_map.len()).all(|v| {
            let fv = vertex_map[v];
            (fv as usize) < target.complex().vertex_count()
                && vertex_map[source.generator()[v] as usize] == target.generator()[fv as usize]
        })
}

/// True iff `f : E_kG → a` is simplicial and equivariant, certifying
/// `coind(a) ≥ k`.
pub fn coindex_certificate_check(a: &FreeAction, k: usize, f: &SimplicialMap<'_>) -> Result<bool, IndexError> {
    let e = e_k_g(a.p(), k);
    if f.source() != e.complex() || f.target() != a.complex() {
        return Err(IndexError::TargetMismatch);
    }
    Ok(is_equivariant(&e, a, f.vertex_map()))
}

/// Search for an equivariant simplicial map `E_kG → a`: the image of element
/// `0` of each join factor determines the whole factor.
pub fn find_coindex_certificate(a: &FreeAction, k: usize) -> Option<Vec<u32>> {
    let p = a.p();
    let pows: Vec<Vec<u32>> = (0..p).map(|j| a.power(j)).collect();
    let cx = a.complex();
    fn go(
        i: usize,
        k: usize,
        cx: &SComplex,
        pows: &[Vec<u32>],
        faces: &mut Vec<Vec<u32>>,
        chosen: &mut Vec<u32>,
    ) -> bool {
        if i > k {
            return true;
        }
        for x in 0..cx.vertex_count() as u32 {
            let mut added = Vec::new();
            let mut ok = true;
            'outer: for f in faces.iter().chain(std::iter::once(&Vec::new())) {
                for pw in pows {
                    let mut g = f.clone();
                    g.push(pw[x as usize]);
                    g.sort_unstable();
                    g.dedup();
                    if !cx.contains(&g) {
                        ok = false;
                        break 'outer;
                    }
                    added.push(g);
                }
            }
            if !ok {
                continue;
            }
            let before = faces.len();
            faces.extend(added);
            chosen.push(x);
            if go(i + 1, k, cx, pows, faces, chosen) {
                return true;
            }
            chosen.pop();
            faces.truncate(before);
        }
        false
    }
    let mut faces = Vec::new();
    let mut chosen = Vec::new();
    if !go(0, k, cx, &pows, &mut faces, &mut chosen) {
        return None;
    }
    let mut map = Vec::with_capacity((k + 1) * p as usize);
    for &x in &chosen {
        for pw in &pows {
            map.push(pw[x as usize]);
        }
    }
    Some(map)
}

/// Largest `k ≤ limit` with a certificate `E_kG → a`.
pub fn certified_coindex(a: &FreeAction, limit: usize) -> Option<(usize, Vec<u32>)> {
    let mut best = None;
    for k in 0..=limit {
        match find_coindex_certificate(a, k) {
            Some(m) => best = Some((k, m)),
            None => break,
        }
    }
    best
}

/// Given a verified equivariant simplicial map `a → b`, returns
/// `(hind a, hind b)`; monotonicity predicts the first is at most the second.
pub fn monotonicity_instance(a: &FreeAction, b: &FreeAction, vertex_map: Vec<u32>) -> Result<(usize, usize), IndexError> {
    SimplicialMap::new(a.complex(), b.complex(), vertex_map.clone()).map_err(|_| IndexError::NotEquivariant)?;
    if !is_equivariant(a, b, &vertex_map) {
        return Err(IndexError::NotEquivariant);
    }
    Ok((hind(a)?.hind, hind(b)?.hind))
}
