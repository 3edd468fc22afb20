//! Explicit realization of each twisted type as a truncated twisted loop
//! algebra, together with the identities checked on it.
//!
//! Vertices `1..=l` are realized as `μ`-orbit sums of Chevalley generators of
//! the simply-laced parent, rescaled so that `[α_i^∨, e_i] = 2e_i`. Vertex 0
//! is `E₀ ⊗ t` with `E₀` the lowest weight vector of `ġ₁`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::cartan::{automorphisms_of, AffineType, Family, FiniteType, Gcm, Perm};
use crate::chevalley::{lift_automorphism, ChevalleyAlgebra, GVec, SignedPerm};
use crate::cyclo::CycloNum;
use crate::diagram::{diagram_of_involution, InvolutionLabel};
use crate::error::Error;
use crate::loop_algebra::{LoopAlgebra, LoopElement};
use crate::rational::{self, Rational};
use crate::roots::{self, pairing, PairingVector, RootVector};

/// How an affine type sits inside its simply-laced parent: the diagram
/// automorphism `ν` and, for each vertex `1..=l`, one node of its `ν`-orbit.
#[derive(Clone, Debug)]
pub struct TwistData {
    pub parent: FiniteType,
    pub nu: Perm,
    pub reps: Vec<usize>,
}

pub fn twist_data(t: &AffineType) -> TwistData {
    let l = t.l();
    let reversal = |r: usize| Perm::from_images((0..r).rev().collect()).unwrap();
    let (parent, nu, reps) = match t.family() {
        Family::A2_2 => (FiniteType::A(2), reversal(2), vec![0]),
        Family::A2l_2 => (FiniteType::A(2 * l), reversal(2 * l), (0..l).collect()),
        Family::A2lm1_2 => (FiniteType::A(2 * l - 1), reversal(2 * l - 1), (0..l).collect()),
        Family::Dlp1_2 => (FiniteType::D(l + 1), Perm::transposition(l + 1, l - 1, l), (0..l).collect()),
        Family::E6_2 => (FiniteType::E6, Perm::from_images(vec![5, 1, 4, 3, 2, 0]).unwrap(), vec![0, 2, 3, 1]),
        Family::D4_3 => (FiniteType::D(4), Perm::from_images(vec![2, 1, 3, 0]).unwrap(), vec![0, 1]),
    };
    TwistData { parent, nu, reps }
}

/// Generators `e_i, f_i, α_i^∨` of a twisted type inside `ℓ(ġ, μ, ε_k)`.
#[derive(Clone, Debug)]
pub struct Realization {
    t: AffineType,
    lie: LoopAlgebra,
    e: Vec<LoopElement>,
    f: Vec<LoopElement>,
    h: Vec<LoopElement>,
    tau: SignedPerm,
    weights: Vec<Vec<i64>>,
    ring_inv: Vec<Vec<Rational>>,
    a: Gcm,
}

fn zero_q() -> Rational {
    Rational::from_integer(0)
}

/// `κ` with `[[κx, κy], κx] = 2κx`.
fn normalizer(g: &ChevalleyAlgebra, x: &GVec, y: &GVec) -> Result<CycloNum, Error> {
    let hh = g.bracket(x, y);
    let lam = g
        .bracket(&hh, x)
        .ratio_to(x)
        .and_then(|s| s.as_rational())
        .filter(|q| *q > zero_q())
        .ok_or_else(|| Error::UnsupportedType { reason: String::from("generator is not an sl2 weight vector") })?;
    CycloNum::sqrt_rational(Rational::from_integer(2) / lam)
        .ok_or_else(|| Error::UnsupportedType { reason: format!("sqrt(2/{}) is outside the coefficient field", lam) })
}

/// `Σ_m λ^{-m} μ^m(E_b)` over the `μ`-cycle of `b`.
fn cycle_vector(mu: &SignedPerm, b: usize, lam: &CycloNum) -> GVec {
    let inv = lam.inv().unwrap();
    let mut acc = GVec::zero();
    let mut c = CycloNum::one();
    let mut w = GVec::basis(b);
    loop {
        acc.add_scaled(&w, &c);
        c = &c * &inv;
        w = mu.apply(&w);
        if w.support().next() == Some(b) {
            break;
        }
    }
    acc
}

/// Builds `μ`, the generators and the coroots.
pub fn affine_generators(t: &AffineType, window: i64) -> Result<Realization, Error> {
    if window < 1 {
        return Err(Error::WindowOverflow { degree: 1, window });
    }
    let td = twist_data(t);
    let k = t.k();
    let l = t.l();
    let alg = ChevalleyAlgebra::new(td.parent)?;
    let mu = lift_automorphism(&alg, &td.nu, k, t.finite_type().dim())?;
    let lie = LoopAlgebra::new(alg, mu, k, window);
    let g = lie.alg();
    let mu = lie.mu();

    let mut e = vec![LoopElement::zero(); l + 1];
    let mut f = vec![LoopElement::zero(); l + 1];
    let mut fhat = vec![GVec::zero(); l + 1];
    for i in 1..=l {
        let n = td.reps[i - 1];
        let (mut x, mut y) = (GVec::zero(), GVec::zero());
        let (mut a, mut b) = (g.e(n), g.f(n));
        let mut node = n;
        loop {
            x = x.add(&a);
            y = y.add(&b);
            a = mu.apply(&a);
            b = mu.apply(&b);
            node = td.nu.apply(node);
            if node == n {
                break;
            }
        }
        let kappa = normalizer(g, &x, &y)?;
        e[i] = LoopElement::graded(x.scale(&kappa), 0);
        f[i] = LoopElement::graded(y.scale(&kappa), 0);
        fhat[i] = y;
    }

    // involutive diagram symmetry inverting ν, fixing the representative nodes
    let pi = if k == 3 {
        let auts = automorphisms_of(&Gcm::from_rows(g.cartan().to_vec()));
        let nu_inv = td.nu.inverse();
        auts.into_iter().find(|p| {
            !p.is_identity()
                && p.is_involution()
                && p.compose(&td.nu).compose(p) == nu_inv
                && td.reps.iter().all(|&r| p.is_fixed(r))
        })
    } else {
        None
    };

    let eps = CycloNum::root_of_unity(k);
    let lowest: Vec<&GVec> = lie
        .eigenbasis(1)
        .iter()
        .filter(|v| v.support().all(|b| !g.is_cartan(b)))
        .filter(|v| (1..=l).all(|i| g.bracket(&fhat[i], v).is_zero()))
        .collect();
    if lowest.len() != 1 {
        return Err(Error::UnsupportedType { reason: format!("{} lowest weight vectors in g_1", lowest.len()) });
    }
    let mut e0 = lowest[0].clone();
    if let Some(p) = &pi {
        let r = g.rank();
        let fixed = e0.support().find(|&b| {
            let root = g.root(b).unwrap();
            (0..r).all(|i| root[p.apply(i)] == root[i])
        });
        let b = fixed.ok_or_else(|| Error::UnsupportedType { reason: String::from("no symmetric base for E0") })?;
        e0 = cycle_vector(mu, b, &eps);
    }
    let f0 = g.omega_dot().apply(&e0).conj().neg();
    let kappa0 = normalizer(g, &e0, &f0)?;
    e[0] = LoopElement::graded(e0.scale(&kappa0), 1);
    f[0] = LoopElement::graded(f0.scale(&kappa0), -1);

    let mut h = Vec::with_capacity(l + 1);
    for i in 0..=l {
        h.push(lie.bracket(&e[i], &f[i])?);
    }

    let tau = match &pi {
        None => SignedPerm::identity(g.dim()),
        Some(p) => find_tau(g, mu, p, &e, &f, &e0)?,
    };

    let a = t.gcm();
    let ring: Vec<Vec<Rational>> =
        (1..=l).map(|i| (1..=l).map(|m| Rational::from_integer(a.get(i, m) as i128)).collect()).collect();
    let mut cols = Vec::with_capacity(l);
    for m in 0..l {
        let mut unit = vec![zero_q(); l];
        unit[m] = Rational::from_integer(1);
        cols.push(rational::solve(&ring, &unit).expect("finite Cartan matrix is invertible"));
    }
    let ring_inv = rational::transpose(&cols);

    let mut weights = Vec::with_capacity(g.dim());
    for b in 0..g.dim() {
        let mut w = vec![0i64; l + 1];
        if let Some(root) = g.root(b) {
            for (i, wi) in w.iter_mut().enumerate().skip(1) {
                let hi = h[i].component(0);
                let mut acc = CycloNum::zero();
                for n in 0..g.rank() {
                    acc += hi.get(g.cartan_index(n)).scale_int(g.pair_simple(root, n));
                }
                *wi = acc.as_int().ok_or(Error::NotRootHomogeneous { degree: 0 })?;
            }
        }
        weights.push(w);
    }

    Ok(Realization { t: *t, lie, e, f, h, tau, weights, ring_inv, a })
}

fn find_tau(
    g: &ChevalleyAlgebra,
    mu: &SignedPerm,
    pi: &Perm,
    e: &[LoopElement],
    f: &[LoopElement],
    e0: &GVec,
) -> Result<SignedPerm, Error> {
    let r = g.rank();
    let mu_inv = mu.inverse();
    let mut tried = Vec::new();
    for mask in 0u32..(1 << r) {
        let sigma: Vec<i64> = (0..r).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect();
        let label = crate::chevalley::sign_string(&sigma);
        let Some(tau) = g.lift(pi, &sigma) else {
            tried.push(format!("{}: not an automorphism", label));
            continue;
        };
        let ok = tau.compose(&tau).is_identity()
            && tau.compose(mu).compose(&tau) == mu_inv
            && (1..e.len()).all(|i| {
                tau.apply(&e[i].component(0)) == e[i].component(0) && tau.apply(&f[i].component(0)) == f[i].component(0)
            })
            && tau.apply(e0) == e0.conj();
        if ok {
            return Ok(tau);
        }
        tried.push(format!("{}: conditions fail", label));
    }
    Err(Error::LiftFailed { tried })
}

impl Realization {
    pub fn affine_type(&self) -> &AffineType {
        &self.t
    }

    pub fn loop_algebra(&self) -> &LoopAlgebra {
        &self.lie
    }

    pub fn alg(&self) -> &ChevalleyAlgebra {
        self.lie.alg()
    }

    pub fn window(&self) -> i64 {
        self.lie.window()
    }

    pub fn e(&self, i: usize) -> &LoopElement {
        &self.e[i]
    }

    pub fn f(&self, i: usize) -> &LoopElement {
        &self.f[i]
    }

    /// `α_i^∨ = [e_i, f_i]`.
    pub fn coroot(&self, i: usize) -> &LoopElement {
        &self.h[i]
    }

    /// Signed diagram symmetry with `τμτ = μ⁻¹` (the identity unless `k = 3`).
    pub fn tau(&self) -> &SignedPerm {
        &self.tau
    }

    pub fn bracket(&self, x: &LoopElement, y: &LoopElement) -> Result<LoopElement, Error> {
        self.lie.bracket(x, y)
    }

    /// Affine root of the basis vector `E_b ⊗ t^j`.
    pub fn root_of(&self, b: usize, j: i64) -> Result<RootVector, Error> {
        let l = self.t.l();
        let w = &self.weights[b];
        let rhs: Vec<Rational> =
            (1..=l).map(|i| Rational::from_integer((w[i] - self.a.get(i, 0) * j) as i128)).collect();
        let mut out = vec![j];
        for row in &self.ring_inv {
            let c: Rational = row.iter().zip(&rhs).map(|(x, y)| x * y).sum();
            if !c.is_integer() {
                return Err(Error::NotRootHomogeneous { degree: j });
            }
            out.push(c.to_integer() as i64);
        }
        Ok(RootVector(out))
    }
}

/// `[α_i^∨, e_j] = a_ij e_j`, read off entrywise.
pub fn gcm_recovery(r: &Realization) -> Result<Gcm, Error> {
    let n = r.t.n();
    let mut rows = vec![vec![0i64; n]; n];
    for (i, row) in rows.iter_mut().enumerate() {
        for (j, x) in row.iter_mut().enumerate() {
            let v = r.bracket(&r.h[i], &r.e[j])?;
            let s = if v.is_zero() { Some(CycloNum::zero()) } else { v.ratio_to(&r.e[j]) };
            *x = s.and_then(|s| s.as_int()).ok_or(Error::EigenvalueMismatch { i, j })?;
        }
    }
    Ok(Gcm::from_rows(rows))
}

/// Triple `(E, H, F)` spanning the `sl₂` of a real root, with `E` in the
/// root space and `F = -conj(ω̇E) ⊗ t^{-j}`, normalized to
/// `[H, E] = 2E`, `[H, F] = -2F`, `[E, F] = H`.
pub fn sl2_triple(r: &Realization, gamma: &RootVector) -> Result<(LoopElement, LoopElement, LoopElement), Error> {
    let t = &r.t;
    let not_real = || Error::NotARealRoot { root: gamma.0.clone() };
    if gamma.len() != t.n() {
        return Err(not_real());
    }
    let j = gamma.degree();
    if !roots::real_roots(t, j.unsigned_abs() as usize).contains(gamma) {
        return Err(not_real());
    }
    if j.abs() > r.window() {
        return Err(Error::WindowOverflow { degree: j, window: r.window() });
    }
    let g = r.alg();
    let mut found = Vec::new();
    for v in r.lie.eigenbasis(j) {
        let b = v.support().next().unwrap();
        if g.is_cartan(b) {
            continue;
        }
        if r.root_of(b, j)? == *gamma {
            found.push(v.clone());
        }
    }
    if found.len() != 1 {
        return Err(not_real());
    }
    let x = found.pop().unwrap();
    let y = g.omega_dot().apply(&x).conj().neg();
    let kappa = normalizer(g, &x, &y)?;
    let e = LoopElement::graded(x.scale(&kappa), j);
    let f = LoopElement::graded(y.scale(&kappa), -j);
    let h = r.bracket(&e, &f)?;
    Ok((e, h, f))
}

/// `exp iπ ad(h)`: scales each root component of root `γ` by
/// `(-1)^{γ(h)}`; `c` and `d` are fixed.
pub fn torus_sign_action(r: &Realization, h: &PairingVector, x: &LoopElement) -> Result<LoopElement, Error> {
    let mut out = LoopElement::zero().with_cd(x.c_coeff().clone(), x.d_coeff().clone());
    for (j, comp) in x.components() {
        for (b, c) in comp.terms() {
            let gamma = r.root_of(b, j)?;
            let s = if pairing(&gamma, h).rem_euclid(2) == 0 { 1 } else { -1 };
            out.add_component(j, &GVec::basis(b), &c.scale_int(s));
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Linearity {
    Linear,
    ConjugateLinear,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InvolutionKind {
    /// `ω(x ⊗ t^j) = ω̇(τx) ⊗ t^{-j}`, `ω(c) = -c`, `ω(d) = -d`.
    Omega,
    /// `ω′(x ⊗ t^j) = ω̇(x̄) ⊗ t^{-j}`.
    OmegaPrime,
    /// `σ′_n(x ⊗ t^j) = τ(x̄) ⊗ t^j`.
    SigmaN,
}

/// A (semi-)linear map of the loop algebra.
#[derive(Clone, Copy, Debug)]
pub struct SemiLinearMap<'a> {
    kind: InvolutionKind,
    r: &'a Realization,
}

impl SemiLinearMap<'_> {
    pub fn kind(&self) -> InvolutionKind {
        self.kind
    }

    pub fn linearity(&self) -> Linearity {
        match self.kind {
            InvolutionKind::Omega => Linearity::Linear,
            _ => Linearity::ConjugateLinear,
        }
    }

    pub fn apply(&self, x: &LoopElement) -> LoopElement {
        let od = self.r.alg().omega_dot();
        let tau = &self.r.tau;
        let (c, d) = (x.c_coeff(), x.d_coeff());
        match self.kind {
            InvolutionKind::Omega => x.map_components(|j, v| (-j, od.apply(&tau.apply(v)))).with_cd(-c, -d),
            InvolutionKind::OmegaPrime => {
                x.map_components(|j, v| (-j, od.apply(&v.conj()))).with_cd(-&c.conj(), -&d.conj())
            }
            InvolutionKind::SigmaN => x.map_components(|j, v| (j, tau.apply(&v.conj()))).with_cd(c.conj(), d.conj()),
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct StandardInvolutions<'a> {
    pub omega: SemiLinearMap<'a>,
    pub omega_prime: SemiLinearMap<'a>,
    pub sigma_n: SemiLinearMap<'a>,
}

pub fn standard_involutions(r: &Realization) -> StandardInvolutions<'_> {
    StandardInvolutions {
        omega: SemiLinearMap { kind: InvolutionKind::Omega, r },
        omega_prime: SemiLinearMap { kind: InvolutionKind::OmegaPrime, r },
        sigma_n: SemiLinearMap { kind: InvolutionKind::SigmaN, r },
    }
}

/// Outcome of one verification: `failures` lists witnesses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub check: String,
    pub type_name: String,
    pub window: i64,
    pub samples: usize,
    pub seed: u64,
    pub failures: Vec<String>,
}

impl Report {
    fn new(check: &str, r: &Realization, seed: u64) -> Report {
        Report {
            check: String::from(check),
            type_name: format!("{}", r.t),
            window: r.window(),
            samples: 0,
            seed,
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn record(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.samples += 1;
        if !ok {
            self.failures.push(witness());
        }
    }
}

/// Basis elements of the truncated algebra with their degree (`c`, `d`
/// count as degree 0).
fn graded_basis(r: &Realization) -> Vec<(LoopElement, i64)> {
    r.lie
        .basis()
        .into_iter()
        .map(|x| {
            let j = x.homogeneous_degree().unwrap_or(0);
            (x, j)
        })
        .collect()
}

fn pick<'a, T>(rng: &mut ChaCha8Rng, v: &'a [T]) -> &'a T {
    &v[(rng.next_u64() % v.len() as u64) as usize]
}

fn random_scalar(rng: &mut ChaCha8Rng) -> CycloNum {
    let m = (rng.next_u64() % 24) as i64;
    let s = (rng.next_u64() % 3) as i64 + 1;
    CycloNum::zeta(m).scale_int(s)
}

/// Random combination of basis elements of degree at most `max_deg`.
fn random_element(basis: &[(LoopElement, i64)], rng: &mut ChaCha8Rng, max_deg: i64) -> LoopElement {
    let small: Vec<&LoopElement> = basis.iter().filter(|(_, j)| j.abs() <= max_deg).map(|(x, _)| x).collect();
    let mut out = LoopElement::zero();
    for _ in 0..3 {
        out.add_scaled(*pick(rng, &small), &random_scalar(rng));
    }
    out
}

/// Antisymmetry and Jacobi on seeded basis triples whose partial degree
/// sums stay inside the window.
pub fn check_jacobi(r: &Realization, samples: usize, seed: u64) -> Result<[Report; 2], Error> {
    let basis = graded_basis(r);
    let n = r.window();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut anti = Report::new("antisymmetry", r, seed);
    let mut jac = Report::new("jacobi", r, seed);
    let mut attempts = 0;
    while jac.samples < samples && attempts < samples * 1000 {
        attempts += 1;
        let (x, a) = pick(&mut rng, &basis);
        let (y, b) = pick(&mut rng, &basis);
        let (z, c) = pick(&mut rng, &basis);
        if [a + b, b + c, a + c, a + b + c].iter().any(|s| s.abs() > n) {
            continue;
        }
        let xy = r.bracket(x, y)?;
        let yx = r.bracket(y, x)?;
        anti.record(xy.add(&yx).is_zero(), || format!("[{}, {}]", x, y));
        let j = r.lie.jacobiator(x, y, z)?;
        jac.record(j.is_zero(), || format!("({}, {}, {})", x, y, z));
    }
    Ok([anti, jac])
}

/// `[c, x] = 0` and `[d, x_j] = j x_j` on every basis element, and every
/// component lies in its eigenspace.
pub fn check_structure(r: &Realization) -> Result<[Report; 3], Error> {
    let mut central = Report::new("centrality", r, 0);
    let mut grad = Report::new("gradation", r, 0);
    let mut compat = Report::new("eigenspace", r, 0);
    let c = LoopElement::central();
    let d = LoopElement::derivation();
    for (x, j) in graded_basis(r) {
        let ok = r.bracket(&c, &x)?.is_zero() && r.bracket(&x, &c)?.is_zero();
        central.record(ok, || format!("{}", x));
        if x.homogeneous_degree().is_some() {
            let ok = r.bracket(&d, &x)? == x.scale(&CycloNum::from_int(j));
            grad.record(ok, || format!("{}", x));
        }
        compat.record(r.lie.is_compatible(&x), || format!("{}", x));
    }
    for x in r.e.iter().chain(&r.f).chain(&r.h) {
        compat.record(r.lie.is_compatible(x), || format!("{}", x));
    }
    Ok([central, grad, compat])
}

/// `gcm_recovery` equals the Cartan matrix, and `[e_i, f_j] = δ_ij α_i^∨`.
pub fn check_gcm(r: &Realization) -> Result<[Report; 2], Error> {
    let mut gcm = Report::new("gcm", r, 0);
    let want = r.t.gcm();
    match gcm_recovery(r) {
        Ok(got) => {
            for i in 0..r.t.n() {
                for j in 0..r.t.n() {
                    gcm.record(got.get(i, j) == want.get(i, j), || {
                        format!("a[{}][{}] = {}, expected {}", i, j, got.get(i, j), want.get(i, j))
                    });
                }
            }
        }
        Err(e) => gcm.record(false, || format!("{}", e)),
    }
    let mut gens = Report::new("chevalley-relations", r, 0);
    for i in 0..r.t.n() {
        for j in 0..r.t.n() {
            let v = r.bracket(&r.e[i], &r.f[j])?;
            let ok = if i == j { v.degrees().iter().all(|&d| d == 0) && !v.is_zero() } else { v.is_zero() };
            gens.record(ok, || format!("[e_{}, f_{}] = {}", i, j, v));
        }
    }
    Ok([gcm, gens])
}

/// `sl₂` relations for every real root of degree at most `max_degree`.
pub fn check_sl2(r: &Realization, max_degree: usize) -> Result<Report, Error> {
    let mut rep = Report::new("sl2", r, 0);
    for gamma in roots::real_roots(&r.t, max_degree) {
        if gamma.degree().unsigned_abs() as usize > max_degree {
            continue;
        }
        match sl2_triple(r, &gamma) {
            Ok((e, h, f)) => {
                let two = CycloNum::from_int(2);
                let ok = r.bracket(&h, &e)? == e.scale(&two)
                    && r.bracket(&h, &f)? == f.scale(&-&two)
                    && r.bracket(&e, &f)? == h;
                rep.record(ok, || format!("{}", gamma));
            }
            Err(err) => rep.record(false, || format!("{}: {}", gamma, err)),
        }
    }
    Ok(rep)
}

/// `ω′(e_i) = -f_i`, `σ′_n(λ e_i) = λ̄ e_i`, `ω′ = σ′_n ω = ω σ′_n`,
/// involutivity and the homomorphism property, on generators and seeded
/// random elements.
pub fn check_involutions(r: &Realization, samples: usize, seed: u64) -> Result<Report, Error> {
    let inv = standard_involutions(r);
    let (om, omp, sig) = (inv.omega, inv.omega_prime, inv.sigma_n);
    let mut rep = Report::new("involutions", r, seed);
    let d = LoopElement::derivation();
    let lam = &CycloNum::zeta(5) + &CycloNum::from_int(2);
    for i in 0..r.t.n() {
        let (e, f) = (&r.e[i], &r.f[i]);
        rep.record(omp.apply(e) == f.neg(), || format!("omega'(e_{}) != -f_{}", i, i));
        rep.record(omp.apply(f) == e.neg(), || format!("omega'(f_{}) != -e_{}", i, i));
        rep.record(om.apply(e) == f.neg(), || format!("omega(e_{}) != -f_{}", i, i));
        rep.record(sig.apply(&e.scale(&lam)) == e.scale(&lam.conj()), || format!("sigma(lambda e_{})", i));
        rep.record(sig.apply(f) == *f, || format!("sigma(f_{}) != f_{}", i, i));
    }
    rep.record(omp.apply(&d) == d.neg(), || String::from("omega'(d) != -d"));
    rep.record(sig.apply(&d) == d, || String::from("sigma(d) != d"));
    let basis = graded_basis(r);
    let half = r.window() / 2;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut elems: Vec<LoopElement> = r.e.iter().chain(&r.f).cloned().collect();
    for _ in 0..samples {
        elems.push(random_element(&basis, &mut rng, half));
    }
    for x in &elems {
        let w = omp.apply(x);
        rep.record(sig.apply(&om.apply(x)) == w, || format!("omega' != sigma omega at {}", x));
        rep.record(om.apply(&sig.apply(x)) == w, || format!("omega' != omega sigma at {}", x));
        rep.record(omp.apply(&w) == *x, || format!("omega'^2 != id at {}", x));
        rep.record(om.apply(&om.apply(x)) == *x, || format!("omega^2 != id at {}", x));
        rep.record(sig.apply(&sig.apply(x)) == *x, || format!("sigma^2 != id at {}", x));
        rep.record(r.lie.is_compatible(&w), || format!("omega'({}) leaves the algebra", x));
    }
    for pair in elems.chunks(2).filter(|p| p.len() == 2) {
        let (x, y) = (&pair[0], &pair[1]);
        let xy = r.bracket(x, y)?;
        for m in [om, omp, sig] {
            let ok = m.apply(&xy) == r.bracket(&m.apply(x), &m.apply(y))?;
            rep.record(ok, || format!("{:?} is not a homomorphism on ({}, {})", m.kind(), x, y));
        }
    }
    Ok(rep)
}

/// Sign of `exp iπ ad(p_j)` and `exp iπ ad(p̊_j)` on each `e_i` against the
/// painting of the corresponding diagram, and involutivity on the basis.
pub fn check_torus(r: &Realization) -> Result<Report, Error> {
    let t = r.t;
    let n = t.n();
    let mut rep = Report::new("torus", r, 0);
    let labels = (0..n).map(InvolutionLabel::ExpP).chain((1..n).map(InvolutionLabel::ExpP0));
    let basis = graded_basis(r);
    for label in labels {
        let h = match label {
            InvolutionLabel::ExpP(j) => roots::p(&t, j),
            InvolutionLabel::ExpP0(j) => roots::p_ring(&t, j),
            _ => unreachable!(),
        };
        let d = diagram_of_involution(&t, &label)?;
        for i in 0..n {
            let v = torus_sign_action(r, &h, &r.e[i])?;
            let want = if d.is_painted(i) { -1 } else { 1 };
            let got = v.ratio_to(&r.e[i]).and_then(|s| s.as_int());
            rep.record(got == Some(want), || format!("{}: sign on e_{} is {:?}, diagram says {}", label, i, got, want));
        }
        for (x, _) in &basis {
            let twice = torus_sign_action(r, &h, &torus_sign_action(r, &h, x)?)?;
            rep.record(twice == *x, || format!("{}: not an involution at {}", label, x));
        }
    }
    Ok(rep)
}

/// The homomorphism `ψ` from `A2lm1_2` into the untwisted loop algebra of
/// the same parent: `ψ(x ⊗ t^j) = x ⊗ t^{2j+N_β} + δ_{j,0}(p̊₁, x)C` for `x`
/// of weight `β`, `N_β = β(p̊₁)`, `ψ(c) = 2C`, `ψ(d) = (D - p̊₁)/2`.
#[derive(Clone, Debug)]
pub struct Psi {
    source: Realization,
    target: LoopAlgebra,
    p1: GVec,
    shift: Vec<i64>,
}

impl Psi {
    pub fn new(l: usize, window: i64) -> Result<Psi, Error> {
        let t = crate::cartan::make_type(Family::A2lm1_2, l)?;
        let source = affine_generators(&t, window)?;
        let g = source.alg();
        let a = t.gcm();
        // α_i(p̊₁) = δ_{i1}: solve Σ_m x_m a[m][i] = δ_{i1}
        let m: Vec<Vec<Rational>> =
            (1..=l).map(|i| (1..=l).map(|mm| Rational::from_integer(a.get(mm, i) as i128)).collect()).collect();
        let mut rhs = vec![zero_q(); l];
        rhs[0] = Rational::from_integer(1);
        let x = rational::solve(&m, &rhs).expect("finite Cartan matrix is invertible");
        let mut p1 = GVec::zero();
        for (mm, xm) in x.iter().enumerate() {
            p1.add_scaled(&source.h[mm + 1].component(0), &CycloNum::from_rational(*xm));
        }
        let mut shift = Vec::with_capacity(g.dim());
        for b in 0..g.dim() {
            let nb = match g.root(b) {
                None => 0,
                Some(root) => {
                    let mut acc = CycloNum::zero();
                    for n in 0..g.rank() {
                        acc += p1.get(g.cartan_index(n)).scale_int(g.pair_simple(root, n));
                    }
                    acc.as_int().ok_or(Error::NotRootHomogeneous { degree: 0 })?
                }
            };
            shift.push(nb);
        }
        let max_shift = shift.iter().map(|s| s.abs()).max().unwrap_or(0);
        let target = LoopAlgebra::untwisted(g.clone(), 2 * window + 2 * max_shift + 2);
        Ok(Psi { source, target, p1, shift })
    }

    pub fn source(&self) -> &Realization {
        &self.source
    }

    pub fn target(&self) -> &LoopAlgebra {
        &self.target
    }

    pub fn p1(&self) -> &GVec {
        &self.p1
    }

    pub fn apply(&self, x: &LoopElement) -> LoopElement {
        let g = self.source.alg();
        let mut out = LoopElement::zero();
        let mut central = CycloNum::zero();
        for (j, comp) in x.components() {
            for (b, c) in comp.terms() {
                out.add_component(2 * j + self.shift[b], &GVec::basis(b), c);
                if j == 0 {
                    central += c * &g.form(&self.p1, &GVec::basis(b));
                }
            }
        }
        let half = CycloNum::from_rational(Rational::new(1, 2));
        let dd = x.d_coeff() * &half;
        out.add_component(0, &self.p1, &-&dd);
        central += x.c_coeff().scale_int(2);
        out.with_cd(central, dd)
    }
}

/// Homomorphism check for `ψ` on a seeded sample covering every pair of
/// degrees `(i, j)` with `|i|, |j|, |i + j| ≤ N`.
pub fn check_psi_example(l: usize, window: i64, seed: u64) -> Result<Report, Error> {
    let psi = Psi::new(l, window)?;
    let r = &psi.source;
    let mut rep = Report::new("psi", r, seed);
    let c = LoopElement::central();
    let d = LoopElement::derivation();
    let two_c = LoopElement::central().scale(&CycloNum::from_int(2));
    rep.record(psi.apply(&c) == two_c, || format!("psi(c) = {}", psi.apply(&c)));
    for i in [0, 1] {
        let deg = psi.apply(&r.e[i]).homogeneous_degree();
        rep.record(deg == Some(1), || format!("psi(e_{}) has degree {:?}", i, deg));
    }
    let mut by_degree: BTreeMap<i64, Vec<LoopElement>> = BTreeMap::new();
    for (x, j) in graded_basis(r) {
        if x.homogeneous_degree().is_some() {
            by_degree.entry(j).or_default().push(x);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs: Vec<(LoopElement, LoopElement)> = Vec::new();
    for i in -window..=window {
        for j in -window..=window {
            if (i + j).abs() > window {
                continue;
            }
            let x = pick(&mut rng, &by_degree[&i]).clone();
            let y = pick(&mut rng, &by_degree[&j]).clone();
            pairs.push((x, y));
        }
    }
    for i in -window..=window {
        let x = pick(&mut rng, &by_degree[&i]).clone();
        pairs.push((d.clone(), x.clone()));
        pairs.push((x.clone(), c.clone()));
        let y = pick(&mut rng, &by_degree[&-i]).clone();
        pairs.push((x, y));
    }
    for i in 0..r.t.n() {
        for j in 0..r.t.n() {
            pairs.push((r.e[i].clone(), r.f[j].clone()));
        }
    }
    for (x, y) in &pairs {
        let lhs = psi.apply(&r.bracket(x, y)?);
        let rhs = psi.target.bracket(&psi.apply(x), &psi.apply(y))?;
        rep.record(lhs == rhs, || format!("psi([{}, {}])", x, y));
    }
    Ok(rep)
}

/// Which verification to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Check {
    All,
    Jacobi,
    Gcm,
    Sl2,
    Psi,
    Involutions,
    Torus,
}

impl Check {
    pub fn from_name(s: &str) -> Option<Check> {
        Some(match s {
            "all" => Check::All,
            "jacobi" => Check::Jacobi,
            "gcm" => Check::Gcm,
            "sl2" => Check::Sl2,
            "psi" => Check::Psi,
            "involutions" => Check::Involutions,
            "torus" => Check::Torus,
            _ => return None,
        })
    }
}

/// Number of Jacobi triples and random involution samples per run.
pub const DEFAULT_SAMPLES: usize = 200;

/// Runs the requested checks; `psi` only applies to `A2lm1_2` and is
/// skipped by `all` elsewhere.
pub fn run_checks(t: &AffineType, window: i64, check: Check, seed: u64) -> Result<Vec<Report>, Error> {
    let r = affine_generators(t, window)?;
    let mut out = Vec::new();
    let all = check == Check::All;
    if all || check == Check::Jacobi {
        out.extend(check_jacobi(&r, DEFAULT_SAMPLES, seed)?);
        out.extend(check_structure(&r)?);
    }
    if all || check == Check::Gcm {
        out.extend(check_gcm(&r)?);
    }
    if all || check == Check::Sl2 {
        out.push(check_sl2(&r, window.min(3) as usize)?);
    }
    if all || check == Check::Involutions {
        out.push(check_involutions(&r, DEFAULT_SAMPLES / 4, seed)?);
    }
    if all || check == Check::Torus {
        out.push(check_torus(&r)?);
    }
    if check == Check::Psi || (all && t.family() == Family::A2lm1_2) {
        if t.family() != Family::A2lm1_2 {
            return Err(Error::UnsupportedType { reason: String::from("psi is defined for A2lm1_2 only") });
        }
        out.push(check_psi_example(t.l(), window, seed)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::make_type;

    #[test]
    fn a2_2_generators() {
        let t = make_type(Family::A2_2, 1).unwrap();
        let r = affine_generators(&t, 2).unwrap();
        assert_eq!(gcm_recovery(&r).unwrap(), t.gcm());
        // e_1 = √2(ė_1 + μ ė_1)
        let e1 = r.e(1).component(0);
        let coeffs: Vec<CycloNum> = e1.terms().map(|(_, c)| c.clone()).collect();
        assert_eq!(coeffs.len(), 2);
        assert!(coeffs.iter().all(|c| &(c * c) == &CycloNum::from_int(2)));
    }

    #[test]
    fn d4_3_gcm() {
        let t = make_type(Family::D4_3, 2).unwrap();
        let r = affine_generators(&t, 3).unwrap();
        assert_eq!(gcm_recovery(&r).unwrap(), t.gcm());
        assert!(!r.tau().is_identity());
    }
}
