//! Truncated twisted loop algebras `⊕_j ġ_{j mod k} ⊗ t^j ⊕ ℂc ⊕ ℂd`.
//!
//! Elements carry a finite set of graded components; brackets whose degree
//! would leave the window `[-N, N]` raise [`Error::WindowOverflow`].

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::chevalley::{eigenspaces, pow, ChevalleyAlgebra, GVec, SignedPerm};
use crate::cyclo::CycloNum;
use crate::error::Error;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LoopElement {
    comps: BTreeMap<i64, GVec>,
    c: CycloNum,
    d: CycloNum,
}

impl LoopElement {
    pub fn zero() -> LoopElement {
        LoopElement::default()
    }

    /// `x ⊗ t^j`.
    pub fn graded(x: GVec, j: i64) -> LoopElement {
        let mut out = LoopElement::zero();
        out.add_component(j, &x, &CycloNum::one());
        out
    }

    pub fn central() -> LoopElement {
        LoopElement { c: CycloNum::one(), ..LoopElement::zero() }
    }

    pub fn derivation() -> LoopElement {
        LoopElement { d: CycloNum::one(), ..LoopElement::zero() }
    }

    pub fn components(&self) -> impl Iterator<Item = (i64, &GVec)> {
        self.comps.iter().map(|(j, x)| (*j, x))
    }

    pub fn component(&self, j: i64) -> GVec {
        self.comps.get(&j).cloned().unwrap_or_default()
    }

    pub fn degrees(&self) -> Vec<i64> {
        self.comps.keys().copied().collect()
    }

    pub fn c_coeff(&self) -> &CycloNum {
        &self.c
    }

    pub fn d_coeff(&self) -> &CycloNum {
        &self.d
    }

    pub fn is_zero(&self) -> bool {
        self.comps.is_empty() && self.c.is_zero() && self.d.is_zero()
    }

    /// Degree of a nonzero element with a single graded component and no
    /// `c` or `d` part.
    pub fn homogeneous_degree(&self) -> Option<i64> {
        if self.comps.len() == 1 && self.c.is_zero() && self.d.is_zero() {
            self.comps.keys().next().copied()
        } else {
            None
        }
    }

    pub fn add_component(&mut self, j: i64, x: &GVec, s: &CycloNum) {
        let e = self.comps.entry(j).or_default();
        e.add_scaled(x, s);
        if e.is_zero() {
            self.comps.remove(&j);
        }
    }

    pub fn add_scaled(&mut self, other: &LoopElement, s: &CycloNum) {
        for (j, x) in other.components() {
            self.add_component(j, x, s);
        }
        self.c += &other.c * s;
        self.d += &other.d * s;
    }

    pub fn add(&self, other: &LoopElement) -> LoopElement {
        let mut out = self.clone();
        out.add_scaled(other, &CycloNum::one());
        out
    }

    pub fn sub(&self, other: &LoopElement) -> LoopElement {
        let mut out = self.clone();
        out.add_scaled(other, &CycloNum::from_int(-1));
        out
    }

    pub fn scale(&self, s: &CycloNum) -> LoopElement {
        let mut out = LoopElement::zero();
        out.add_scaled(self, s);
        out
    }

    pub fn neg(&self) -> LoopElement {
        self.scale(&CycloNum::from_int(-1))
    }

    pub fn conj(&self) -> LoopElement {
        LoopElement {
            comps: self.comps.iter().map(|(j, x)| (*j, x.conj())).collect(),
            c: self.c.conj(),
            d: self.d.conj(),
        }
    }

    /// Applies `f` to every graded component, keeping `c` and `d`.
    pub fn map_components(&self, mut f: impl FnMut(i64, &GVec) -> (i64, GVec)) -> LoopElement {
        let mut out = LoopElement { c: self.c.clone(), d: self.d.clone(), ..LoopElement::zero() };
        for (j, x) in self.components() {
            let (j2, y) = f(j, x);
            out.add_component(j2, &y, &CycloNum::one());
        }
        out
    }

    pub fn with_cd(mut self, c: CycloNum, d: CycloNum) -> LoopElement {
        self.c = c;
        self.d = d;
        self
    }

    /// `s` with `self = s·other`, if the two are proportional.
    pub fn ratio_to(&self, other: &LoopElement) -> Option<CycloNum> {
        let s = if let Some((j, x)) = other.components().next() {
            self.component(j).ratio_to(x)?
        } else if !other.c.is_zero() {
            &self.c * &other.c.inv()?
        } else {
            &self.d * &other.d.inv()?
        };
        (other.scale(&s) == *self).then_some(s)
    }
}

impl fmt::Display for LoopElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, x) in self.components() {
            for (b, c) in x.terms() {
                if !first {
                    f.write_str(" + ")?;
                }
                first = false;
                write!(f, "({})E{}t^{}", c, b, j)?;
            }
        }
        for (name, v) in [("c", &self.c), ("d", &self.d)] {
            if !v.is_zero() {
                if !first {
                    f.write_str(" + ")?;
                }
                first = false;
                write!(f, "({}){}", v, name)?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// `ℓ(ġ, μ, ε_k)` truncated to degrees `[-N, N]`.
#[derive(Clone, Debug)]
pub struct LoopAlgebra {
    alg: ChevalleyAlgebra,
    mu: SignedPerm,
    k: usize,
    window: i64,
    eig: Vec<Vec<GVec>>,
}

impl LoopAlgebra {
    pub fn new(alg: ChevalleyAlgebra, mu: SignedPerm, k: usize, window: i64) -> LoopAlgebra {
        let eig = eigenspaces(&alg, &mu, k);
        LoopAlgebra { alg, mu, k, window, eig }
    }

    /// The untwisted loop algebra (`μ = id`, `k = 1`).
    pub fn untwisted(alg: ChevalleyAlgebra, window: i64) -> LoopAlgebra {
        let mu = SignedPerm::identity(alg.dim());
        LoopAlgebra::new(alg, mu, 1, window)
    }

    pub fn alg(&self) -> &ChevalleyAlgebra {
        &self.alg
    }

    pub fn mu(&self) -> &SignedPerm {
        &self.mu
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn window(&self) -> i64 {
        self.window
    }

    pub fn set_window(&mut self, n: i64) {
        self.window = n;
    }

    pub fn residue(&self, j: i64) -> usize {
        j.rem_euclid(self.k as i64) as usize
    }

    /// Basis of `ġ_{j mod k}`.
    pub fn eigenbasis(&self, j: i64) -> &[GVec] {
        &self.eig[self.residue(j)]
    }

    pub fn eigenvalue(&self, j: i64) -> CycloNum {
        pow(&CycloNum::root_of_unity(self.k), j)
    }

    /// `μ(x) = ε_k^j x`.
    pub fn in_eigenspace(&self, x: &GVec, j: i64) -> bool {
        self.mu.apply(x) == x.scale(&self.eigenvalue(j))
    }

    /// Every graded component lies in the matching eigenspace.
    pub fn is_compatible(&self, x: &LoopElement) -> bool {
        x.components().all(|(j, v)| self.in_eigenspace(v, j))
    }

    /// Basis of the truncated algebra: `ġ_j ⊗ t^j` for `|j| ≤ N`, then `c`, `d`.
    pub fn basis(&self) -> Vec<LoopElement> {
        let mut out = Vec::new();
        for j in -self.window..=self.window {
            for v in self.eigenbasis(j) {
                out.push(LoopElement::graded(v.clone(), j));
            }
        }
        out.push(LoopElement::central());
        out.push(LoopElement::derivation());
        out
    }

    /// `[x, y]` including the central term `m δ_{m,-n} (x, y) c` and the
    /// action of `d`.
    pub fn bracket(&self, x: &LoopElement, y: &LoopElement) -> Result<LoopElement, Error> {
        let mut out = LoopElement::zero();
        for (m, a) in x.components() {
            for (n, b) in y.components() {
                let v = self.alg.bracket(a, b);
                let deg = m + n;
                if !v.is_zero() {
                    if deg.abs() > self.window {
                        return Err(Error::WindowOverflow { degree: deg, window: self.window });
                    }
                    out.add_component(deg, &v, &CycloNum::one());
                }
                if deg == 0 && m != 0 {
                    out.c += self.alg.form(a, b).scale_int(m);
                }
            }
        }
        if !x.d.is_zero() {
            for (n, b) in y.components() {
                out.add_component(n, b, &x.d.scale_int(n));
            }
        }
        if !y.d.is_zero() {
            for (m, a) in x.components() {
                out.add_component(m, a, &y.d.scale_int(-m));
            }
        }
        Ok(out)
    }

    /// `[[x,y],z] + [[y,z],x] + [[z,x],y]`.
    pub fn jacobiator(&self, x: &LoopElement, y: &LoopElement, z: &LoopElement) -> Result<LoopElement, Error> {
        let a = self.bracket(&self.bracket(x, y)?, z)?;
        let b = self.bracket(&self.bracket(y, z)?, x)?;
        let c = self.bracket(&self.bracket(z, x)?, y)?;
        Ok(a.add(&b).add(&c))
    }

    /// Invariant form on graded parts: `(x t^m, y t^n) = δ_{m,-n}(x, y)`,
    /// `(c, d) = 1`.
    pub fn form(&self, x: &LoopElement, y: &LoopElement) -> CycloNum {
        let mut out = CycloNum::zero();
        for (m, a) in x.components() {
            if let Some(b) = y.comps.get(&-m) {
                out += self.alg.form(a, b);
            }
        }
        out += &x.c * &y.d;
        out += &x.d * &y.c;
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::{FiniteType, Perm};
    use crate::chevalley::lift_automorphism;

    fn a2() -> LoopAlgebra {
        let g = ChevalleyAlgebra::new(FiniteType::A(2)).unwrap();
        let mu = lift_automorphism(&g, &Perm::transposition(2, 0, 1), 2, 3).unwrap();
        LoopAlgebra::new(g, mu, 2, 3)
    }

    #[test]
    fn central_and_derivation() {
        let l = a2();
        let x = LoopElement::graded(l.eigenbasis(1)[0].clone(), 1);
        assert!(l.bracket(&LoopElement::central(), &x).unwrap().is_zero());
        assert_eq!(l.bracket(&LoopElement::derivation(), &x).unwrap(), x);
        assert!(l.is_compatible(&x));
    }

    #[test]
    fn central_term() {
        let l = LoopAlgebra::untwisted(ChevalleyAlgebra::new(FiniteType::A(2)).unwrap(), 3);
        // (E_{a1}, -E_{-a1}) = 1 and [E_{a1}, E_{-a1}] = -h_1; use h_1 with (h_1, h_1/2) = 1
        let h = l.alg().h(0);
        let half = h.scale(&CycloNum::from_rational(num_rational::Ratio::new(1, 2)));
        let r = l.bracket(&LoopElement::graded(h, 1), &LoopElement::graded(half, -1)).unwrap();
        assert_eq!(r, LoopElement::central());
    }

    #[test]
    fn overflow_is_reported() {
        let l = a2();
        let x = LoopElement::graded(l.alg().e(0).add(&l.mu().apply(&l.alg().e(0))), 2);
        let all: Vec<_> = l.eigenbasis(1).iter().map(|v| LoopElement::graded(v.clone(), 3)).collect();
        let hit = all.iter().any(|z| matches!(l.bracket(&x, z), Err(Error::WindowOverflow { degree: 5, .. })));
        assert!(hit);
    }
}
