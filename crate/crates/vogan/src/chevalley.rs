//! Simply-laced simple Lie algebras in a Chevalley basis.
//!
//! Basis: root vectors `E_α` (positive roots by height, then their
//! negatives) followed by the simple coroots `h_1..h_r`. Structure constants
//! come from the bimultiplicative asymmetry function
//! `ε(α_i, α_j) = -1` if `i = j`, `(-1)^{a_ij}` if `i < j`, `1` otherwise:
//!
//! * `[E_α, E_β] = ε(α, β) E_{α+β}` when `α + β` is a root,
//! * `[E_α, E_{-α}] = -α` (as a coroot),
//! * `[h, E_α] = α(h) E_α`.
//!
//! The invariant form has `(E_α, E_{-α}) = -1` and `(h_i, h_j) = a_ij`, so
//! every root has square length 2.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::cartan::{FiniteType, Perm};
use crate::cyclo::CycloNum;
use crate::error::Error;

/// Sparse vector over the field, keyed by basis index.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GVec(BTreeMap<usize, CycloNum>);

impl GVec {
    pub fn zero() -> GVec {
        GVec(BTreeMap::new())
    }

    pub fn basis(b: usize) -> GVec {
        GVec::term(b, CycloNum::one())
    }

    pub fn term(b: usize, c: CycloNum) -> GVec {
        let mut v = GVec::zero();
        v.add_term(b, &c);
        v
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, b: usize) -> CycloNum {
        self.0.get(&b).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &CycloNum)> {
        self.0.iter().map(|(b, c)| (*b, c))
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.keys().copied()
    }

    pub fn add_term(&mut self, b: usize, c: &CycloNum) {
        if c.is_zero() {
            return;
        }
        let e = self.0.entry(b).or_default();
        *e += c;
        if e.is_zero() {
            self.0.remove(&b);
        }
    }

    pub fn add_scaled(&mut self, other: &GVec, s: &CycloNum) {
        if s.is_zero() {
            return;
        }
        for (b, c) in other.terms() {
            self.add_term(b, &(c * s));
        }
    }

    pub fn scale(&self, s: &CycloNum) -> GVec {
        let mut out = GVec::zero();
        out.add_scaled(self, s);
        out
    }

    pub fn add(&self, other: &GVec) -> GVec {
        let mut out = self.clone();
        out.add_scaled(other, &CycloNum::one());
        out
    }

    pub fn sub(&self, other: &GVec) -> GVec {
        let mut out = self.clone();
        out.add_scaled(other, &CycloNum::from_int(-1));
        out
    }

    pub fn neg(&self) -> GVec {
        self.scale(&CycloNum::from_int(-1))
    }

    /// Coefficient-wise complex conjugation (the basis is real).
    pub fn conj(&self) -> GVec {
        GVec(self.0.iter().map(|(b, c)| (*b, c.conj())).collect())
    }

    /// `c` with `self = c·other`, if the two are proportional.
    pub fn ratio_to(&self, other: &GVec) -> Option<CycloNum> {
        let (b, c) = other.terms().next()?;
        let s = &self.get(b) * &c.inv()?;
        (other.scale(&s) == *self).then_some(s)
    }
}

/// Linear map sending `E_b` to `sign[b]·E_{img[b]}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedPerm {
    pub img: Vec<usize>,
    pub sign: Vec<i64>,
}

impl SignedPerm {
    pub fn identity(n: usize) -> SignedPerm {
        SignedPerm { img: (0..n).collect(), sign: vec![1; n] }
    }

    pub fn len(&self) -> usize {
        self.img.len()
    }

    pub fn is_empty(&self) -> bool {
        self.img.is_empty()
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &SignedPerm) -> SignedPerm {
        let img = other.img.iter().map(|&b| self.img[b]).collect();
        let sign = (0..other.len()).map(|b| other.sign[b] * self.sign[other.img[b]]).collect();
        SignedPerm { img, sign }
    }

    pub fn pow(&self, m: usize) -> SignedPerm {
        let mut out = SignedPerm::identity(self.len());
        for _ in 0..m {
            out = self.compose(&out);
        }
        out
    }

    pub fn inverse(&self) -> SignedPerm {
        let n = self.len();
        let mut img = vec![0; n];
        let mut sign = vec![1; n];
        for b in 0..n {
            img[self.img[b]] = b;
            sign[self.img[b]] = self.sign[b];
        }
        SignedPerm { img, sign }
    }

    pub fn is_identity(&self) -> bool {
        self.img.iter().enumerate().all(|(b, &i)| b == i) && self.sign.iter().all(|&s| s == 1)
    }

    pub fn apply(&self, v: &GVec) -> GVec {
        let mut out = GVec::zero();
        for (b, c) in v.terms() {
            out.add_term(self.img[b], &c.scale_int(self.sign[b]));
        }
        out
    }

    /// Cycles as `(members in orbit order, product of signs)`.
    pub fn cycles(&self) -> Vec<(Vec<usize>, i64)> {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut members = Vec::new();
            let mut prod = 1;
            let mut b = s;
            while !seen[b] {
                seen[b] = true;
                members.push(b);
                prod *= self.sign[b];
                b = self.img[b];
            }
            out.push((members, prod));
        }
        out
    }

    /// Dimension of the fixed space.
    pub fn fixed_dim(&self) -> usize {
        self.cycles().iter().filter(|(_, s)| *s == 1).count()
    }
}

/// Cartan matrix of a simply-laced type, Bourbaki numbering from 0.
pub fn simply_laced_cartan(ft: FiniteType) -> Result<Vec<Vec<i64>>, Error> {
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let r = match ft {
        FiniteType::A(n) if n >= 1 => {
            edges.extend((1..n).map(|i| (i - 1, i)));
            n
        }
        FiniteType::D(n) if n >= 3 => {
            edges.extend((1..n - 1).map(|i| (i - 1, i)));
            edges.push((n - 3, n - 1));
            n
        }
        FiniteType::E6 => {
            edges.extend([(0, 2), (2, 3), (3, 4), (4, 5), (1, 3)]);
            6
        }
        other => return Err(Error::UnsupportedType { reason: format!("{} is not simply laced", other) }),
    };
    let mut a = vec![vec![0i64; r]; r];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    for (i, j) in edges {
        a[i][j] = -1;
        a[j][i] = -1;
    }
    Ok(a)
}

type Sparse = Vec<(usize, i64)>;

#[derive(Clone, Debug)]
pub struct ChevalleyAlgebra {
    ft: FiniteType,
    cartan: Vec<Vec<i64>>,
    roots: Vec<Vec<i64>>,
    index: BTreeMap<Vec<i64>, usize>,
    table: Vec<Vec<Sparse>>,
}

/// Sample size used for the Jacobi check above dimension 50.
const JACOBI_SAMPLE: usize = 20_000;

impl ChevalleyAlgebra {
    /// Builds the algebra and verifies the Jacobi identity.
    pub fn new(ft: FiniteType) -> Result<ChevalleyAlgebra, Error> {
        let alg = ChevalleyAlgebra::build(ft)?;
        if let Some(w) = alg.jacobi_failures(0x5eed).first() {
            return Err(Error::UnsupportedType { reason: format!("Jacobi fails on basis triple {:?}", w) });
        }
        Ok(alg)
    }

    fn build(ft: FiniteType) -> Result<ChevalleyAlgebra, Error> {
        let cartan = simply_laced_cartan(ft)?;
        let r = cartan.len();
        let mut pos: Vec<Vec<i64>> = (0..r).map(|i| unit(r, i)).collect();
        let mut k = 0;
        while k < pos.len() {
            let beta = pos[k].clone();
            for i in 0..r {
                if inner(&cartan, &beta, &unit(r, i)) == -1 {
                    let mut g = beta.clone();
                    g[i] += 1;
                    if !pos.contains(&g) {
                        pos.push(g);
                    }
                }
            }
            k += 1;
        }
        pos.sort_by_key(|v| (v.iter().sum::<i64>(), v.clone()));
        let mut roots = pos.clone();
        roots.extend(pos.iter().map(|v| v.iter().map(|x| -x).collect::<Vec<_>>()));
        let index = roots.iter().enumerate().map(|(b, v)| (v.clone(), b)).collect();
        let mut alg = ChevalleyAlgebra { ft, cartan, roots, index, table: Vec::new() };
        let dim = alg.dim();
        alg.table = (0..dim).map(|a| (0..dim).map(|b| alg.compute_bracket(a, b)).collect()).collect();
        Ok(alg)
    }

    pub fn finite_type(&self) -> FiniteType {
        self.ft
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn root_count(&self) -> usize {
        self.roots.len()
    }

    pub fn dim(&self) -> usize {
        self.root_count() + self.rank()
    }

    /// Root of a root-vector basis element, `None` on the Cartan part.
    pub fn root(&self, b: usize) -> Option<&[i64]> {
        self.roots.get(b).map(|v| v.as_slice())
    }

    pub fn root_index(&self, alpha: &[i64]) -> Option<usize> {
        self.index.get(alpha).copied()
    }

    pub fn cartan_index(&self, i: usize) -> usize {
        self.root_count() + i
    }

    pub fn is_cartan(&self, b: usize) -> bool {
        b >= self.root_count()
    }

    /// Chevalley generator `ė_i = E_{α_i}`.
    pub fn e(&self, i: usize) -> GVec {
        GVec::basis(self.root_index(&unit(self.rank(), i)).unwrap())
    }

    /// Chevalley generator `ḟ_i = -E_{-α_i}`.
    pub fn f(&self, i: usize) -> GVec {
        let mut v = unit(self.rank(), i);
        v[i] = -1;
        GVec::term(self.root_index(&v).unwrap(), CycloNum::from_int(-1))
    }

    pub fn h(&self, i: usize) -> GVec {
        GVec::basis(self.cartan_index(i))
    }

    /// `ε(α, β)` for lattice vectors in simple-root coordinates.
    pub fn epsilon(&self, a: &[i64], b: &[i64]) -> i64 {
        let r = self.rank();
        let mut e = 0i64;
        for i in 0..r {
            for j in 0..r {
                let f = if i == j {
                    1
                } else if i < j {
                    self.cartan[i][j].rem_euclid(2)
                } else {
                    0
                };
                e += a[i] * b[j] * f;
            }
        }
        if e.rem_euclid(2) == 0 {
            1
        } else {
            -1
        }
    }

    /// `(α, α_i)`.
    pub fn pair_simple(&self, alpha: &[i64], i: usize) -> i64 {
        (0..self.rank()).map(|j| alpha[j] * self.cartan[j][i]).sum()
    }

    fn compute_bracket(&self, a: usize, b: usize) -> Sparse {
        let r = self.rank();
        match (self.root(a), self.root(b)) {
            (Some(x), Some(y)) => {
                let s: Vec<i64> = x.iter().zip(y).map(|(p, q)| p + q).collect();
                if s.iter().all(|&c| c == 0) {
                    (0..r).filter(|&i| x[i] != 0).map(|i| (self.cartan_index(i), -x[i])).collect()
                } else if let Some(c) = self.root_index(&s) {
                    vec![(c, self.epsilon(x, y))]
                } else {
                    Vec::new()
                }
            }
            (None, Some(y)) => {
                let w = self.pair_simple(y, a - self.root_count());
                if w == 0 {
                    Vec::new()
                } else {
                    vec![(b, w)]
                }
            }
            (Some(x), None) => {
                let w = self.pair_simple(x, b - self.root_count());
                if w == 0 {
                    Vec::new()
                } else {
                    vec![(a, -w)]
                }
            }
            (None, None) => Vec::new(),
        }
    }

    /// Integer structure constants of `[E_a, E_b]`.
    pub fn bracket_basis(&self, a: usize, b: usize) -> &[(usize, i64)] {
        &self.table[a][b]
    }

    pub fn bracket(&self, x: &GVec, y: &GVec) -> GVec {
        let mut out = GVec::zero();
        for (a, ca) in x.terms() {
            for (b, cb) in y.terms() {
                let t = &self.table[a][b];
                if t.is_empty() {
                    continue;
                }
                let p = ca * cb;
                for &(c, s) in t {
                    out.add_term(c, &p.scale_int(s));
                }
            }
        }
        out
    }

    pub fn form_basis(&self, a: usize, b: usize) -> i64 {
        match (self.root(a), self.root(b)) {
            (Some(x), Some(y)) => {
                if x.iter().zip(y).all(|(p, q)| p + q == 0) {
                    -1
                } else {
                    0
                }
            }
            (None, None) => self.cartan[a - self.root_count()][b - self.root_count()],
            _ => 0,
        }
    }

    pub fn form(&self, x: &GVec, y: &GVec) -> CycloNum {
        let mut out = CycloNum::zero();
        for (a, ca) in x.terms() {
            for (b, cb) in y.terms() {
                let f = self.form_basis(a, b);
                if f != 0 {
                    out += (ca * cb).scale_int(f);
                }
            }
        }
        out
    }

    /// Chevalley involution `ω̇`: `E_α ↦ E_{-α}`, `h ↦ -h`.
    pub fn omega_dot(&self) -> SignedPerm {
        let n = self.root_count() / 2;
        let dim = self.dim();
        let mut img: Vec<usize> = (0..dim).collect();
        let mut sign = vec![1; dim];
        for b in 0..n {
            img[b] = b + n;
            img[b + n] = b;
        }
        for s in sign.iter_mut().skip(self.root_count()) {
            *s = -1;
        }
        SignedPerm { img, sign }
    }

    /// Integer bracket of sparse integer vectors.
    fn bracket_int(&self, x: &[(usize, i64)], y: &[(usize, i64)]) -> Sparse {
        let mut acc: BTreeMap<usize, i64> = BTreeMap::new();
        for &(a, ca) in x {
            for &(b, cb) in y {
                for &(c, s) in &self.table[a][b] {
                    *acc.entry(c).or_default() += ca * cb * s;
                }
            }
        }
        acc.into_iter().filter(|(_, v)| *v != 0).collect()
    }

    fn jacobi_defect(&self, a: usize, b: usize, c: usize) -> bool {
        let ab = self.bracket_int(&[(a, 1)], &[(b, 1)]);
        let bc = self.bracket_int(&[(b, 1)], &[(c, 1)]);
        let ca = self.bracket_int(&[(c, 1)], &[(a, 1)]);
        let mut acc: BTreeMap<usize, i64> = BTreeMap::new();
        for (v, z) in [(ab, c), (bc, a), (ca, b)] {
            for (i, s) in self.bracket_int(&v, &[(z, 1)]) {
                *acc.entry(i).or_default() += s;
            }
        }
        acc.values().any(|&v| v != 0)
    }

    /// Basis triples violating Jacobi: exhaustive up to dimension 50,
    /// otherwise a seeded sample.
    pub fn jacobi_failures(&self, seed: u64) -> Vec<(usize, usize, usize)> {
        let dim = self.dim();
        let mut out = Vec::new();
        if dim <= 50 {
            for a in 0..dim {
                for b in a + 1..dim {
                    for c in b + 1..dim {
                        if self.jacobi_defect(a, b, c) {
                            out.push((a, b, c));
                        }
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..JACOBI_SAMPLE {
                let a = rng.next_u64() as usize % dim;
                let b = rng.next_u64() as usize % dim;
                let c = rng.next_u64() as usize % dim;
                if self.jacobi_defect(a, b, c) {
                    out.push((a, b, c));
                }
            }
        }
        out
    }

    /// Basis pairs where the bracket fails to be antisymmetric.
    pub fn antisymmetry_failures(&self) -> Vec<(usize, usize)> {
        let dim = self.dim();
        let mut out = Vec::new();
        for a in 0..dim {
            for b in 0..dim {
                let x = &self.table[a][b];
                let y: Sparse = self.table[b][a].iter().map(|&(c, s)| (c, -s)).collect();
                if *x != y {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Lifts a diagram automorphism `nu` with signs `sigma` on the simple
    /// root vectors. `None` if the result is not an algebra automorphism.
    pub fn lift(&self, nu: &Perm, sigma: &[i64]) -> Option<SignedPerm> {
        let r = self.rank();
        let dim = self.dim();
        let npos = self.root_count() / 2;
        let apply_nu = |v: &[i64]| -> Vec<i64> {
            let mut w = vec![0; r];
            for i in 0..r {
                w[nu.apply(i)] += v[i];
            }
            w
        };
        let mut sign: Vec<Option<i64>> = vec![None; dim];
        for i in 0..r {
            sign[self.root_index(&unit(r, i)).unwrap()] = Some(sigma[i]);
        }
        // roots are sorted by height, so predecessors are already signed
        for b in 0..npos {
            if sign[b].is_some() {
                continue;
            }
            let beta = &self.roots[b];
            let (i, prev) = (0..r)
                .find_map(|i| {
                    let mut p = beta.clone();
                    p[i] -= 1;
                    self.root_index(&p).filter(|&pi| pi < npos).map(|pi| (i, pi))
                })
                .expect("non-simple positive root has a predecessor");
            let p = &self.roots[prev];
            let ai = unit(r, i);
            let s = self.epsilon(p, &ai) * self.epsilon(&apply_nu(p), &apply_nu(&ai)) * sign[prev].unwrap() * sigma[i];
            sign[b] = Some(s);
        }
        let mut img = vec![0; dim];
        let mut signs = vec![1; dim];
        for b in 0..npos {
            let nb = self.root_index(&apply_nu(&self.roots[b]))?;
            img[b] = nb;
            img[b + npos] = nb + npos;
            signs[b] = sign[b].unwrap();
            signs[b + npos] = sign[b].unwrap();
        }
        for i in 0..r {
            img[self.cartan_index(i)] = self.cartan_index(nu.apply(i));
        }
        let mu = SignedPerm { img, sign: signs };
        self.is_automorphism(&mu).then_some(mu)
    }

    /// Checks `μ[a,b] = [μa, μb]` on every basis pair.
    pub fn is_automorphism(&self, mu: &SignedPerm) -> bool {
        let dim = self.dim();
        for a in 0..dim {
            for b in 0..dim {
                let lhs: Sparse = {
                    let mut v: Sparse = self.table[a][b].iter().map(|&(c, s)| (mu.img[c], s * mu.sign[c])).collect();
                    v.sort();
                    v
                };
                let mut rhs: Sparse =
                    self.table[mu.img[a]][mu.img[b]].iter().map(|&(c, s)| (c, s * mu.sign[a] * mu.sign[b])).collect();
                rhs.sort();
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }
}

fn unit(r: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; r];
    v[i] = 1;
    v
}

fn inner(cartan: &[Vec<i64>], a: &[i64], b: &[i64]) -> i64 {
    let r = cartan.len();
    let mut s = 0;
    for i in 0..r {
        for j in 0..r {
            s += a[i] * b[j] * cartan[i][j];
        }
    }
    s
}

/// Describes the sign vector of a lift attempt.
pub fn sign_string(sigma: &[i64]) -> String {
    sigma.iter().map(|&s| if s > 0 { '+' } else { '-' }).collect()
}

/// Lifts `nu` to an automorphism of order `k` whose fixed space has
/// dimension `fixed_dim`, trying the trivial signs first.
pub fn lift_automorphism(alg: &ChevalleyAlgebra, nu: &Perm, k: usize, fixed_dim: usize) -> Result<SignedPerm, Error> {
    let r = alg.rank();
    let mut tried = Vec::new();
    for mask in 0u32..(1 << r) {
        let sigma: Vec<i64> = (0..r).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect();
        let Some(mu) = alg.lift(nu, &sigma) else {
            tried.push(format!("{}: not an automorphism", sign_string(&sigma)));
            continue;
        };
        if !mu.pow(k).is_identity() {
            tried.push(format!("{}: order is not {}", sign_string(&sigma), k));
            continue;
        }
        let d = mu.fixed_dim();
        if d != fixed_dim {
            tried.push(format!("{}: fixed dimension {}", sign_string(&sigma), d));
            continue;
        }
        return Ok(mu);
    }
    Err(Error::LiftFailed { tried })
}

/// Bases of the eigenspaces `ġ_j = {X : μX = ε_k^j X}`, `j = 0..k`, one
/// vector `Σ_m ε^{-jm} μ^m(E_b)` per cycle of `μ` and admissible `j`.
pub fn eigenspaces(_alg: &ChevalleyAlgebra, mu: &SignedPerm, k: usize) -> Vec<Vec<GVec>> {
    let eps = CycloNum::root_of_unity(k);
    let mut out = vec![Vec::new(); k];
    for (members, prod) in mu.cycles() {
        let len = members.len();
        let mut orbit = Vec::with_capacity(len);
        let mut v = GVec::basis(members[0]);
        for _ in 0..len {
            orbit.push(v.clone());
            v = mu.apply(&v);
        }
        for (j, space) in out.iter_mut().enumerate() {
            let lam = pow(&eps, j as i64);
            if pow(&lam, len as i64) != CycloNum::from_int(prod) {
                continue;
            }
            let inv = lam.inv().unwrap();
            let mut acc = GVec::zero();
            let mut c = CycloNum::one();
            for w in &orbit {
                acc.add_scaled(w, &c);
                c = &c * &inv;
            }
            space.push(acc);
        }
    }
    out
}

pub(crate) fn pow(x: &CycloNum, m: i64) -> CycloNum {
    let base = if m < 0 { x.inv().expect("nonzero") } else { x.clone() };
    let mut out = CycloNum::one();
    for _ in 0..m.unsigned_abs() {
        out = &out * &base;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimensions() {
        for (ft, d) in [(FiniteType::A(2), 8), (FiniteType::D(4), 28), (FiniteType::A(5), 35)] {
            assert_eq!(ChevalleyAlgebra::new(ft).unwrap().dim(), d);
        }
        assert!(ChevalleyAlgebra::new(FiniteType::B(2)).is_err());
    }

    #[test]
    fn chevalley_relations() {
        let g = ChevalleyAlgebra::new(FiniteType::A(3)).unwrap();
        assert!(g.antisymmetry_failures().is_empty());
        for i in 0..3 {
            for j in 0..3 {
                let b = g.bracket(&g.e(i), &g.f(j));
                let want = if i == j { g.h(i) } else { GVec::zero() };
                assert_eq!(b, want);
            }
        }
    }

    #[test]
    fn form_is_invariant() {
        let g = ChevalleyAlgebra::new(FiniteType::A(2)).unwrap();
        let n = g.dim();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let (x, y, z) = (GVec::basis(a), GVec::basis(b), GVec::basis(c));
                    assert_eq!(g.form(&g.bracket(&x, &y), &z), g.form(&x, &g.bracket(&y, &z)));
                }
            }
        }
    }

    #[test]
    fn a2_flip() {
        let g = ChevalleyAlgebra::new(FiniteType::A(2)).unwrap();
        let nu = Perm::transposition(2, 0, 1);
        let mu = lift_automorphism(&g, &nu, 2, 3).unwrap();
        let sp = eigenspaces(&g, &mu, 2);
        assert_eq!((sp[0].len(), sp[1].len()), (3, 5));
        assert!(g.is_automorphism(&g.omega_dot()));
    }

    #[test]
    fn identity_single_block() {
        let g = ChevalleyAlgebra::new(FiniteType::A(2)).unwrap();
        let mu = SignedPerm::identity(g.dim());
        assert_eq!(eigenspaces(&g, &mu, 1)[0].len(), 8);
    }
}
