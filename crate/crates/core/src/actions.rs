//! Free simplicial `Z/p` actions.
//!
//! An action is a vertex permutation `g` of order `p`. Freeness is the strong
//! clause: `g^k σ` and `σ` share no vertex for `0 < k < p`. Under it every face
//! meets each orbit at most once, so the orbit space is a semi-simplicial
//! complex whose simplices are face orbits with vertices ordered by orbit id.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cohomology::OrderedComplex;
use crate::complexes::{
    self, cross_polytope_boundary, discrete, ordered_product, walker_product_up_to, ComplexError, ComplexJson,
    SComplex, Simplex,
};
use crate::fpalg::is_prime;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ActionError {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("generator has length {got}, complex has {expected} vertices")]
    WrongLength { expected: usize, got: usize },
    #[error("generator is not a permutation of the vertices")]
    NotPermutation,
    #[error("generator does not map face {face:?} to a face")]
    NotSimplicial { face: Simplex },
    #[error("generator^p is not the identity or the generator is trivial (p = {p})")]
    WrongOrder { p: u32 },
    #[error("face {face:?} meets its image under generator^{power}")]
    NotFree { face: Simplex, power: u32 },
    #[error("action still irregular after {rounds} subdivisions (offending face {face:?})")]
    StillIrregular { rounds: usize, face: Simplex },
    #[error("actions over different primes: {0} vs {1}")]
    PMismatch(u32, u32),
    #[error(transparent)]
    Complex(#[from] ComplexError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeAction {
    complex: SComplex,
    p: u32,
    generator: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ActionJson {
    pub complex: ComplexJson,
    pub p: u32,
    pub generator: Vec<u32>,
}

fn power_table(generator: &[u32], p: u32) -> Vec<Vec<u32>> {
    let n = generator.len();
    let mut pows = vec![(0..n as u32).collect::<Vec<u32>>()];
    for k in 1..p as usize {
        let prev = &pows[k - 1];
        pows.push((0..n).map(|v| generator[prev[v] as usize]).collect());
    }
    pows
}

/// Everything except the vertex-disjointness clause.
fn check_basic(k: &SComplex, perm: &[u32], p: u32) -> Result<(), ActionError> {
    if !is_prime(p as u64) {
        return Err(ActionError::NotPrime(p));
    }
    let n = k.vertex_count();
    if perm.len() != n {
        return Err(ActionError::WrongLength { expected: n, got: perm.len() });
    }
    let mut seen = vec![false; n];
    for &v in perm {
        if v as usize >= n || seen[v as usize] {
            return Err(ActionError::NotPermutation);
        }
        seen[v as usize] = true;
    }
    for d in 1..=k.dim() {
        for f in k.faces(d) {
            if k.index_of(&SComplex::image_of(f, perm)).is_none() {
                return Err(ActionError::NotSimplicial { face: f.clone() });
            }
        }
    }
    let pows = power_table(perm, p);
    let identity = |q: &[u32]| q.iter().enumerate().all(|(i, &v)| i as u32 == v);
    let gp: Vec<u32> = pows[p as usize - 1].iter().map(|&v| perm[v as usize]).collect();
    if !identity(&gp) || identity(perm) {
        return Err(ActionError::WrongOrder { p });
    }
    Ok(())
}

/// First face meeting one of its translates, as `(face, power)`. Checking
/// vertices and edges is enough: an intersection point of `σ` and `g^k σ`
/// gives either a fixed vertex or an edge `{v, g^k v}` inside `σ`.
fn strong_freeness_witness(k: &SComplex, perm: &[u32], p: u32) -> Option<(Simplex, u32)> {
    let pows = power_table(perm, p);
    for (kk, pw) in pows.iter().enumerate().skip(1) {
        if let Some(v) = (0..k.vertex_count() as u32).find(|&v| pw[v as usize] == v) {
            return Some((vec![v], kk as u32));
        }
    }
    for e in k.faces(1) {
        for (kk, pw) in pows.iter().enumerate().skip(1) {
            if pw[e[0] as usize] == e[1] {
                return Some((e.clone(), kk as u32));
            }
        }
    }
    None
}

/// Checks that `perm` is a simplicial automorphism of order `p` acting
/// freely in the strong sense.
pub fn validate_action(k: SComplex, perm: Vec<u32>, p: u32) -> Result<FreeAction, ActionError> {
    check_basic(&k, &perm, p)?;
    if let Some((face, power)) = strong_freeness_witness(&k, &perm, p) {
        return Err(ActionError::NotFree { face, power });
    }
    Ok(FreeAction {
        complex: k,
        p,
        generator: perm,
    })
}

/// Barycentric subdivision with the induced permutation of faces.
fn subdivide_raw(k: &SComplex, perm: &[u32]) -> (SComplex, Vec<u32>) {
    let sd = k.barycentric_subdivision();
    let off = k.face_offsets();
    let mut induced = Vec::with_capacity(sd.vertex_count());
    for d in 0..=k.dim() {
        for f in k.faces(d) {
            let img = SComplex::image_of(f, perm);
            induced.push((off[d] + k.index_of(&img).expect("simplicial")) as u32);
        }
    }
    (sd, induced)
}

/// Subdivide an action that passes every check except possibly vertex
/// disjointness, until it is free and its orbit space is a simplicial
/// complex. At most two subdivisions are tried.
pub fn regularize_candidate(k: SComplex, perm: Vec<u32>, p: u32) -> Result<FreeAction, ActionError> {
    check_basic(&k, &perm, p)?;
    let (mut k, mut perm) = (k, perm);
    let mut rounds = 0;
    loop {
        let witness = match strong_freeness_witness(&k, &perm, p) {
            Some((face, _)) => Some(face),
            None => {
                let a = FreeAction {
                    complex: k.clone(),
                    p,
                    generator: perm.clone(),
                };
                match a.quotient().irregular_witness() {
                    None => return Ok(a),
                    Some(face) => Some(face),
                }
            }
        };
        if rounds == 2 {
            return Err(ActionError::StillIrregular {
                rounds,
                face: witness.unwrap_or_default(),
            });
        }
        (k, perm) = subdivide_raw(&k, &perm);
        rounds += 1;
    }
}

/// Subdivide until the orbit space is a simplicial complex; unchanged if it
/// already is.
pub fn regularize(a: FreeAction) -> Result<FreeAction, ActionError> {
    if a.quotient().irregular_witness().is_none() {
        return Ok(a);
    }
    regularize_candidate(a.complex, a.generator, a.p)
}

impl FreeAction {
    pub fn from_json(json: &ActionJson) -> Result<Self, ActionError> {
        let k = SComplex::from_json(&json.complex)?;
        validate_action(k, json.generator.clone(), json.p)
    }

    pub fn to_json(&self) -> ActionJson {
        ActionJson {
            complex: self.complex.to_json(),
            p: self.p,
            generator: self.generator.clone(),
        }
    }

    pub fn complex(&self) -> &SComplex {
        &self.complex
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn generator(&self) -> &[u32] {
        &self.generator
    }

    pub fn dim(&self) -> usize {
        self.complex.dim()
    }

    /// `g^k` as a vertex permutation.
    pub fn power(&self, k: u32) -> Vec<u32> {
        power_table(&self.generator, self.p).swap_remove((k % self.p) as usize)
    }

    /// Vertex orbits sorted by their smallest vertex.
    pub fn orbits(&self) -> Vec<Vec<u32>> {
        let n = self.complex.vertex_count();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for v in 0..n as u32 {
            if seen[v as usize] {
                continue;
            }
            let mut orbit = Vec::with_capacity(self.p as usize);
            let mut w = v;
            loop {
                seen[w as usize] = true;
                orbit.push(w);
                w = self.generator[w as usize];
                if w == v {
                    break;
                }
            }
            out.push(orbit);
        }
        out
    }

    pub fn skeleton(&self, d: usize) -> FreeAction {
        FreeAction {
            complex: self.complex.skeleton(d),
            p: self.p,
            generator: self.generator.clone(),
        }
    }

    pub fn subdivide(&self) -> FreeAction {
        let (complex, generator) = subdivide_raw(&self.complex, &self.generator);
        FreeAction {
            complex,
            p: self.p,
            generator,
        }
    }

    pub fn quotient(&self) -> QuotientData<'_> {
        QuotientData::new(self)
    }

    /// Sign and image index of `g·σ` for the `d`-face `i`, with `e_σ` the
    /// sorted orientation.
    pub fn face_image(&self, d: usize, i: usize) -> (usize, bool) {
        let f = self.complex.face(d, i);
        let img: Vec<u32> = f.iter().map(|&v| self.generator[v as usize]).collect();
        let mut sorted = img.clone();
        sorted.sort_unstable();
        let j = self.complex.index_of(&sorted).expect("simplicial");
        // parity of the sorting permutation via inversion count
        let mut inv = 0;
        for a in 0..img.len() {
            for b in a + 1..img.len() {
                if img[a] > img[b] {
                    inv += 1;
                }
            }
        }
        (j, inv % 2 == 1)
    }
}

/// Orbit space of a free action, built as a semi-simplicial complex.
///
/// Orbit `o` has id given by the rank of its minimal vertex, which is also
/// its section vertex; every vertex is `g^{e(v)}` applied to its section
/// vertex. A quotient simplex is represented by the unique face in its orbit
/// whose first vertex in orbit order is a section vertex.
#[derive(Debug, Clone)]
pub struct QuotientData<'a> {
    action: &'a FreeAction,
    projection: Vec<u32>,
    section: Vec<u32>,
    exponent: Vec<u32>,
    quotient: OrderedComplex,
    // per dimension: X-face index of the representative of each quotient simplex
    lift: Vec<Vec<u32>>,
    // per dimension: quotient simplex and power for every X face
    face_orbit: Vec<Vec<(u32, u32)>>,
}

impl<'a> QuotientData<'a> {
    fn new(action: &'a FreeAction) -> Self {
        let k = &action.complex;
        let p = action.p;
        let n = k.vertex_count();
        let orbits = action.orbits();
        let mut projection = vec![0u32; n];
        let mut exponent = vec![0u32; n];
        let mut section = Vec::with_capacity(orbits.len());
        for (o, orbit) in orbits.iter().enumerate() {
            section.push(orbit[0]);
            for (e, &v) in orbit.iter().enumerate() {
                projection[v as usize] = o as u32;
                exponent[v as usize] = e as u32;
            }
        }
        let pows = power_table(&action.generator, p);
        let mut verts = Vec::new();
        let mut faces = Vec::new();
        let mut lift = Vec::new();
        let mut face_orbit = Vec::new();
        for d in 0..=k.dim() {
            let count = k.face_count(d);
            let mut rep = vec![(0u32, 0u32); count];
            for (i, f) in k.faces(d).enumerate() {
                let first = *f.iter().min_by_key(|&&v| projection[v as usize]).expect("nonempty face");
                let e = exponent[first as usize];
                let back = &pows[((p - e) % p) as usize];
                let canon = SComplex::image_of(f, back);
                rep[i] = (k.index_of(&canon).expect("simplicial") as u32, e);
            }
            let mut qidx = vec![u32::MAX; count];
            let mut lifts = Vec::new();
            for i in 0..count {
                if rep[i].0 as usize == i {
                    qidx[i] = lifts.len() as u32;
                    lifts.push(i as u32);
                }
            }
            let orbit_of: Vec<(u32, u32)> = rep.iter().map(|&(r, e)| (qidx[r as usize], e)).collect();
            let mut vs = Vec::with_capacity(lifts.len() * (d + 1));
            let mut fs = Vec::new();
            let mut sub = Vec::with_capacity(d);
            for &r in &lifts {
                let f = k.face(d, r as usize);
                let mut by_orbit = f.clone();
                by_orbit.sort_unstable_by_key(|&v| projection[v as usize]);
                vs.extend(by_orbit.iter().map(|&v| projection[v as usize]));
                if d > 0 {
                    for j in 0..=d {
                        sub.clear();
                        sub.extend(by_orbit.iter().enumerate().filter(|&(t, _)| t != j).map(|(_, &v)| v));
                        sub.sort_unstable();
                        let x = k.index_of(&sub).expect("closed");
                        fs.push(face_orbit_prev(&face_orbit, d - 1, x));
                    }
                }
            }
            verts.push(vs);
            faces.push(fs);
            lift.push(lifts);
            face_orbit.push(orbit_of);
        }
        fn face_orbit_prev(fo: &[Vec<(u32, u32)>], d: usize, x: usize) -> u32 {
            fo[d][x].0
        }
        QuotientData {
            action,
            projection,
            section,
            exponent,
            quotient: OrderedComplex::from_parts(orbits.len(), verts, faces),
            lift,
            face_orbit,
        }
    }

    pub fn action(&self) -> &'a FreeAction {
        self.action
    }

    pub fn p(&self) -> u32 {
        self.action.p
    }

    pub fn quotient(&self) -> &OrderedComplex {
        &self.quotient
    }

    /// Vertex map `X → X/G`.
    pub fn projection(&self) -> &[u32] {
        &self.projection
    }

    /// Section vertex (smallest index) of every orbit.
    pub fn section(&self) -> &[u32] {
        &self.section
    }

    /// `e(v)` with `v = g^{e(v)} · section(orbit of v)`.
    pub fn exponent(&self, v: u32) -> u32 {
        self.exponent[v as usize]
    }

    /// The representative face of quotient simplex `q` of dimension `d`.
    pub fn lift(&self, d: usize, q: usize) -> &Simplex {
        self.action.complex.face(d, self.lift[d][q] as usize)
    }

    pub fn lift_index(&self, d: usize, q: usize) -> usize {
        self.lift[d][q] as usize
    }

    /// Quotient simplex of face `i` of dimension `d`, and the `k` with
    /// `face = g^k · lift`.
    pub fn orbit_of_face(&self, d: usize, i: usize) -> (usize, u32) {
        let (q, e) = self.face_orbit[d][i];
        (q as usize, e)
    }

    /// Two quotient simplices with the same vertex set, if any.
    pub fn irregular_witness(&self) -> Option<Simplex> {
        let q = &self.quotient;
        for d in 1..=q.dim() {
            let mut seen: HashMap<&[u32], usize> = HashMap::new();
            for i in 0..q.count(d) {
                if let Some(_other) = seen.insert(q.vertices(d, i), i) {
                    return Some(self.lift(d, i).clone());
                }
            }
        }
        None
    }

    pub fn is_regular(&self) -> bool {
        self.irregular_witness().is_none()
    }

    /// The orbit space as a simplicial complex, when it is one.
    pub fn simplicial(&self) -> Option<SComplex> {
        if !self.is_regular() {
            return None;
        }
        let q = &self.quotient;
        let labels = self
            .section
            .iter()
            .map(|&v| format!("[{}]", self.action.complex.label(v)))
            .collect();
        let mut maximal = Vec::new();
        for d in 0..=q.dim() {
            for i in 0..q.count(d) {
                maximal.push(q.vertices(d, i).to_vec());
            }
        }
        Some(SComplex::from_maximal_faces_with_cap(labels, &maximal, usize::MAX).expect("projected faces"))
    }
}

/// `E_k G` for `G = Z/p`: the join of `k + 1` copies of the `p` group
/// elements. Vertex `i·p + j` is element `j` in factor `i`; the generator
/// adds one in every factor.
pub fn e_k_g(p: u32, k: usize) -> FreeAction {
    assert!(is_prime(p as u64), "p must be prime");
    let mut labels = Vec::new();
    for i in 0..=k {
        for j in 0..p {
            labels.push(format!("g{j}.{i}"));
        }
    }
    let mut complex = discrete(p as usize);
    for _ in 0..k {
        complex = complex.join(&discrete(p as usize));
    }
    let complex = complex.relabeled(labels);
    let generator = (0..=k as u32)
        .flat_map(|i| (0..p).map(move |j| i * p + (j + 1) % p))
        .collect();
    validate_action(complex, generator, p).expect("E_kG is free")
}

/// Antipodal action on the boundary of the `(n+1)`-cross-polytope, an
/// `n`-sphere with `2n + 2` vertices.
pub fn sphere_action(n: usize) -> FreeAction {
    let complex = cross_polytope_boundary(n + 1);
    let generator = (0..2 * (n as u32 + 1)).map(|v| v ^ 1).collect();
    validate_action(complex, generator, 2).expect("antipodal action is free")
}

fn same_p(a: &FreeAction, b: &FreeAction) -> Result<u32, ActionError> {
    if a.p != b.p {
        return Err(ActionError::PMismatch(a.p, b.p));
    }
    Ok(a.p)
}

/// Factorwise action on the join; `a`'s vertices come first.
pub fn join_action(a: &FreeAction, b: &FreeAction) -> Result<FreeAction, ActionError> {
    let p = same_p(a, b)?;
    let shift = a.complex.vertex_count() as u32;
    let mut generator = a.generator.clone();
    generator.extend(b.generator.iter().map(|&v| v + shift));
    validate_action(a.complex.join(&b.complex), generator, p)
}

pub fn disjoint_union_action(a: &FreeAction, b: &FreeAction) -> Result<FreeAction, ActionError> {
    let p = same_p(a, b)?;
    let shift = a.complex.vertex_count() as u32;
    let mut generator = a.generator.clone();
    generator.extend(b.generator.iter().map(|&v| v + shift));
    validate_action(a.complex.disjoint_union(&b.complex), generator, p)
}

/// Diagonal action on the staircase triangulation of the product, ordered by
/// orbit ids (which the action preserves). Vertex `(v, w)` is `v·|V_b| + w`.
pub fn product_action(a: &FreeAction, b: &FreeAction) -> Result<FreeAction, ActionError> {
    product_action_up_to(a, b, usize::MAX)
}

/// As [`product_action`], keeping simplices of dimension at most `max_dim`.
pub fn product_action_up_to(a: &FreeAction, b: &FreeAction, max_dim: usize) -> Result<FreeAction, ActionError> {
    let p = same_p(a, b)?;
    let qa = a.quotient();
    let qb = b.quotient();
    let complex = ordered_product(&a.complex, &b.complex, qa.projection(), qb.projection(), max_dim)?;
    let nb = b.complex.vertex_count() as u32;
    let generator = (0..a.complex.vertex_count() as u32)
        .flat_map(|v| (0..nb).map(move |w| (v, w)))
        .map(|(v, w)| a.generator[v as usize] * nb + b.generator[w as usize])
        .collect();
    validate_action(complex, generator, p)
}

/// Diagonal action on the order complex of the product of face posets.
pub fn walker_product_action(a: &FreeAction, b: &FreeAction) -> Result<FreeAction, ActionError> {
    walker_product_action_up_to(a, b, usize::MAX)
}

pub fn walker_product_action_up_to(a: &FreeAction, b: &FreeAction, max_dim: usize) -> Result<FreeAction, ActionError> {
    let p = same_p(a, b)?;
    let complex = walker_product_up_to(&a.complex, &b.complex, max_dim);
    let face_perm = |x: &FreeAction| -> Vec<u32> {
        let k = &x.complex;
        let off = k.face_offsets();
        let mut out = Vec::with_capacity(k.total_faces());
        for d in 0..=k.dim() {
            for f in k.faces(d) {
                out.push((off[d] + k.index_of(&SComplex::image_of(f, &x.generator)).expect("simplicial")) as u32);
            }
        }
        out
    };
    let (ga, gb) = (face_perm(a), face_perm(b));
    let nb = b.complex.total_faces() as u32;
    let generator = (0..a.complex.total_faces() as u32)
        .flat_map(|s| (0..nb).map(move |t| (s, t)))
        .map(|(s, t)| ga[s as usize] * nb + gb[t as usize])
        .collect();
    let action = validate_action(complex, generator, p)?;
    Ok(action)
}

/// An equivariant simplicial isomorphism `a → b`, as a vertex map, if one
/// exists. Backtracks over images of orbit section vertices.
pub fn find_equivariant_isomorphism(a: &FreeAction, b: &FreeAction) -> Option<Vec<u32>> {
    if a.p != b.p || a.complex.f_vector() != b.complex.f_vector() {
        return None;
    }
    let p = a.p;
    let n = a.complex.vertex_count();
    let orbits_a = a.orbits();
    let pows_b = power_table(&b.generator, p);
    let mut map = vec![u32::MAX; n];
    let mut used = vec![false; n];

    fn consistent(a: &FreeAction, b: &FreeAction, map: &[u32], touched: &[u32]) -> bool {
        // every edge with both ends mapped must land on an edge
        for &v in touched {
            for e in a.complex.faces(1) {
                if e[0] != v && e[1] != v {
                    continue;
                }
                let (x, y) = (map[e[0] as usize], map[e[1] as usize]);
                if x != u32::MAX && y != u32::MAX && !b.complex.contains(&[x, y]) {
                    return false;
                }
            }
        }
        true
    }

    #[allow(clippy::too_many_arguments)]
    fn go(
        i: usize,
        a: &FreeAction,
        b: &FreeAction,
        orbits_a: &[Vec<u32>],
        pows_b: &[Vec<u32>],
        map: &mut Vec<u32>,
        used: &mut Vec<bool>,
    ) -> bool {
        if i == orbits_a.len() {
            return (1..=a.complex.dim())
                .all(|d| a.complex.faces(d).all(|f| b.complex.index_of(&SComplex::image_of(f, map)).is_some()));
        }
        let orbit = &orbits_a[i];
        for target in 0..b.complex.vertex_count() as u32 {
            if used[target as usize] {
                continue;
            }
            // orbit[j] = g^j orbit[0] must go to g^j target
            let images: Vec<u32> = (0..orbit.len()).map(|j| pows_b[j][target as usize]).collect();
            if images.iter().any(|&t| used[t as usize]) {
                continue;
            }
            for (j, &v) in orbit.iter().enumerate() {
                map[v as usize] = images[j];
                used[images[j] as usize] = true;
            }
            if consistent(a, b, map, orbit) && go(i + 1, a, b, orbits_a, pows_b, map, used) {
                return true;
            }
            for (j, &v) in orbit.iter().enumerate() {
                map[v as usize] = u32::MAX;
                used[images[j] as usize] = false;
            }
        }
        false
    }

    if go(0, a, b, &orbits_a, &pows_b, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

/// The simplex `σ_G^{(m)}` on the group elements: all subsets of `G` with at
/// most `m + 1` elements, with `G` acting by translation.
pub fn group_simplex_skeleton(p: u32, m: usize) -> SComplex {
    let full = complexes::simplex(p as usize - 1);
    full.skeleton(m).relabeled((0..p).map(|j| format!("g{j}")).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::{cycle, simplex};

    #[test]
    fn validate_examples() {
        for n in 0..=5 {
            let a = sphere_action(n);
            assert_eq!(a.dim(), n);
        }
        let tri = simplex(2);
        let r = validate_action(tri, vec![1, 2, 0], 3);
        assert!(matches!(r, Err(ActionError::NotFree { .. })));
        // rotation of the 3-cycle: edges meet their images in a vertex
        let r = validate_action(cycle(3), vec![1, 2, 0], 3);
        assert!(matches!(r, Err(ActionError::NotFree { ref face, .. }) if face.len() == 2));
        assert!(matches!(
            validate_action(cycle(4), vec![1, 2, 3, 0], 2),
            Err(ActionError::WrongOrder { p: 2 })
        ));
        assert!(matches!(validate_action(cycle(4), vec![1, 0, 3, 2], 4), Err(ActionError::NotPrime(4))));
        let square = cycle(4);
        assert!(matches!(
            validate_action(square, vec![1, 0, 2, 3], 2),
            Err(ActionError::NotSimplicial { .. })
        ));
    }

    #[test]
    fn regularize_examples() {
        let s1 = sphere_action(1);
        assert!(!s1.quotient().is_regular());
        let r = regularize(s1.clone()).unwrap();
        let q = r.quotient();
        let qc = q.simplicial().expect("regular");
        assert_eq!(qc.f_vector(), vec![4, 4]);
        let s2 = sphere_action(2).subdivide();
        assert_eq!(regularize(s2.clone()).unwrap(), s2);
        let e = regularize_candidate(simplex(1), vec![1, 0], 2);
        assert!(matches!(e, Err(ActionError::StillIrregular { .. })));
        let c3 = regularize_candidate(cycle(3), vec![1, 2, 0], 3).unwrap();
        assert_eq!(c3.complex().vertex_count(), 12);
        assert_eq!(c3.quotient().simplicial().unwrap().f_vector(), vec![4, 4]);
    }

    #[test]
    fn quotient_counts() {
        let lib = [sphere_action(0), sphere_action(3), e_k_g(3, 1), e_k_g(5, 2), sphere_action(2).subdivide()];
        for a in &lib {
            let q = a.quotient();
            assert_eq!(q.quotient().vertex_count() * a.p() as usize, a.complex().vertex_count());
            for d in 0..=a.dim() {
                assert_eq!(q.quotient().count(d) * a.p() as usize, a.complex().face_count(d));
            }
            for (o, &s) in q.section().iter().enumerate() {
                assert_eq!(q.projection()[s as usize], o as u32);
            }
        }
        assert_eq!(e_k_g(3, 1).quotient().quotient().vertex_count(), 2);
    }

    #[test]
    fn lifts_are_faces_for_any_section() {
        let a = e_k_g(3, 2);
        let q = a.quotient();
        let qc = q.quotient();
        for d in 0..=qc.dim() {
            for i in 0..qc.count(d) {
                let lift = q.lift(d, i);
                for k in 0..3 {
                    let moved = SComplex::image_of(lift, &a.power(k));
                    assert!(a.complex().index_of(&moved).is_some());
                    let proj: Vec<u32> = moved.iter().map(|&v| q.projection()[v as usize]).collect();
                    let mut sorted = proj.clone();
                    sorted.sort_unstable();
                    assert_eq!(sorted, qc.vertices(d, i));
                }
            }
        }
    }

    #[test]
    fn e_k_g_examples() {
        let e = e_k_g(2, 1);
        assert!(find_equivariant_isomorphism(&e, &sphere_action(1)).is_some());
        let e30 = e_k_g(3, 0);
        assert_eq!((e30.complex().vertex_count(), e30.dim()), (3, 0));
        for p in [2, 3, 5] {
            for k in 0..=3 {
                assert_eq!(e_k_g(p, k).dim(), k);
            }
        }
    }

    #[test]
    fn join_action_examples() {
        let s0 = sphere_action(0);
        let j = join_action(&s0, &s0).unwrap();
        assert!(find_equivariant_isomorphism(&j, &sphere_action(1)).is_some());
        for (i, k) in [(0, 0), (0, 1), (1, 1)] {
            let j = join_action(&e_k_g(3, i), &e_k_g(3, k)).unwrap();
            assert_eq!(j.dim(), i + k + 1);
            assert!(find_equivariant_isomorphism(&j, &e_k_g(3, i + k + 1)).is_some());
        }
        assert!(matches!(
            join_action(&e_k_g(3, 0), &e_k_g(2, 0)),
            Err(ActionError::PMismatch(3, 2))
        ));
    }

    #[test]
    fn isomorphism_search_rejects() {
        assert!(find_equivariant_isomorphism(&sphere_action(1), &e_k_g(2, 1).subdivide()).is_none());
        let a = sphere_action(1);
        let b = disjoint_union_action(&sphere_action(0), &sphere_action(0)).unwrap();
        assert!(find_equivariant_isomorphism(&a, &b).is_none());
    }

    #[test]
    fn products_are_free() {
        let pairs = [(sphere_action(1), sphere_action(0)), (sphere_action(1), sphere_action(1)), (e_k_g(3, 1), e_k_g(3, 0))];
        for (a, b) in &pairs {
            let prod = product_action(a, b).unwrap();
            assert_eq!(prod.complex().vertex_count(), a.complex().vertex_count() * b.complex().vertex_count());
            assert_eq!(prod.dim(), a.dim() + b.dim());
            let w = walker_product_action(a, b).unwrap();
            assert_eq!(w.dim(), a.dim() + b.dim());
        }
    }

    #[test]
    fn face_image_signs() {
        let a = sphere_action(1);
        // edge {+e0,+e1} = {0,2} maps to {1,3} keeping order
        let i = a.complex().index_of(&[0, 2]).unwrap();
        let (j, odd) = a.face_image(1, i);
        assert_eq!(a.complex().face(1, j), &vec![1, 3]);
        assert!(!odd);
        let r = e_k_g(3, 1);
        // edge {2, 3}: g sends 2 -> 0 and 3 -> 4, so the image {0,4} keeps order
        let i = r.complex().index_of(&[2, 3]).unwrap();
        let (j, odd) = r.face_image(1, i);
        assert_eq!(r.complex().face(1, j), &vec![0, 4]);
        assert!(!odd);
    }

    #[test]
    fn json_round_trip() {
        let a = e_k_g(3, 1);
        assert_eq!(FreeAction::from_json(&a.to_json()).unwrap(), a);
    }
}
