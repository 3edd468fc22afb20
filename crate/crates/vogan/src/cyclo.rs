//! Exact arithmetic in the cyclotomic field generated by a primitive 24th
//! root of unity `ζ`, stored in the power basis `1, ζ, …, ζ⁷` modulo
//! `ζ⁸ = ζ⁴ − 1`.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_rational::Ratio;

use crate::rational::{self, Rational};

const DEG: usize = 8;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycloNum {
    c: [Rational; DEG],
}

fn zero_coeffs() -> [Rational; DEG] {
    core::array::from_fn(|_| Rational::from_integer(0))
}

/// Reduces a polynomial of degree < 2·DEG into the power basis.
fn reduce(mut p: [Rational; 2 * DEG]) -> [Rational; DEG] {
    for k in (DEG..2 * DEG).rev() {
        let top = p[k];
        if top != Rational::from_integer(0) {
            p[k] = Rational::from_integer(0);
            p[k - 4] += top;
            p[k - 8] -= top;
        }
    }
    core::array::from_fn(|i| p[i])
}

impl CycloNum {
    pub fn zero() -> CycloNum {
        CycloNum { c: zero_coeffs() }
    }

    pub fn one() -> CycloNum {
        CycloNum::from_int(1)
    }

    pub fn from_int(n: i64) -> CycloNum {
        CycloNum::from_rational(Rational::from_integer(n as i128))
    }

    pub fn from_rational(q: Rational) -> CycloNum {
        let mut c = zero_coeffs();
        c[0] = q;
        CycloNum { c }
    }

    pub fn from_coeffs(c: [Rational; DEG]) -> CycloNum {
        CycloNum { c }
    }

    pub fn coeffs(&self) -> &[Rational; DEG] {
        &self.c
    }

    /// `ζ^m` for any integer `m`.
    pub fn zeta(m: i64) -> CycloNum {
        let m = m.rem_euclid(24) as usize;
        let mut p = zero_coeffs();
        p[0] = Rational::from_integer(1);
        let mut out = CycloNum { c: p };
        let mut z = zero_coeffs();
        z[1] = Rational::from_integer(1);
        let z = CycloNum { c: z };
        for _ in 0..m {
            out = &out * &z;
        }
        out
    }

    /// The primitive `k`-th root of unity `e^{2πi/k}` for `k` dividing 24.
    pub fn root_of_unity(k: usize) -> CycloNum {
        assert!(k > 0 && 24 % k == 0, "order must divide 24");
        CycloNum::zeta((24 / k) as i64)
    }

    pub fn i() -> CycloNum {
        CycloNum::zeta(6)
    }

    pub fn sqrt2() -> CycloNum {
        &CycloNum::zeta(3) + &CycloNum::zeta(21)
    }

    pub fn sqrt3() -> CycloNum {
        &CycloNum::zeta(2) + &CycloNum::zeta(22)
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|x| *x == Rational::from_integer(0))
    }

    pub fn is_one(&self) -> bool {
        *self == CycloNum::one()
    }

    /// The rational value if the number lies in `ℚ`.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.c[1..].iter().all(|x| *x == Rational::from_integer(0)) {
            Some(self.c[0])
        } else {
            None
        }
    }

    pub fn as_int(&self) -> Option<i64> {
        self.as_rational().filter(|q| q.is_integer()).map(|q| q.to_integer() as i64)
    }

    pub fn scale(&self, q: Rational) -> CycloNum {
        CycloNum { c: core::array::from_fn(|i| self.c[i] * q) }
    }

    pub fn scale_int(&self, n: i64) -> CycloNum {
        self.scale(Rational::from_integer(n as i128))
    }

    /// Complex conjugation `ζ ↦ ζ⁻¹`.
    pub fn conj(&self) -> CycloNum {
        let mut out = CycloNum::zero();
        for (m, q) in self.c.iter().enumerate() {
            if *q != Rational::from_integer(0) {
                out += CycloNum::zeta(-(m as i64)).scale(*q);
            }
        }
        out
    }

    /// Multiplicative inverse, by solving the multiplication-matrix system.
    pub fn inv(&self) -> Option<CycloNum> {
        if self.is_zero() {
            return None;
        }
        if let Some(q) = self.as_rational() {
            return Some(CycloNum::from_rational(q.recip()));
        }
        // column j of M is self * ζ^j
        let cols: Vec<CycloNum> = (0..DEG).map(|j| self * &CycloNum::zeta(j as i64)).collect();
        let m: Vec<Vec<Rational>> = (0..DEG).map(|i| (0..DEG).map(|j| cols[j].c[i]).collect()).collect();
        let mut b = alloc::vec![Rational::from_integer(0); DEG];
        b[0] = Rational::from_integer(1);
        let x = rational::solve(&m, &b)?;
        Some(CycloNum { c: core::array::from_fn(|i| x[i]) })
    }

    /// A square root of a rational number, when it lies in the field.
    pub fn sqrt_rational(q: Rational) -> Option<CycloNum> {
        if q == Rational::from_integer(0) {
            return Some(CycloNum::zero());
        }
        let neg = q < Rational::from_integer(0);
        let q = if neg { -q } else { q };
        let (n, d) = (*q.numer(), *q.denom());
        // sqrt(n/d) = sqrt(n*d)/d
        let (s, r) = split_square(n * d);
        let base = match r {
            1 => CycloNum::one(),
            2 => CycloNum::sqrt2(),
            3 => CycloNum::sqrt3(),
            6 => &CycloNum::sqrt2() * &CycloNum::sqrt3(),
            _ => return None,
        };
        let v = base.scale(Ratio::new(s, d));
        Some(if neg { &v * &CycloNum::i() } else { v })
    }
}

/// Writes `n = s²·r` with `r` squarefree.
fn split_square(mut n: i128) -> (i128, i128) {
    let mut s = 1;
    let mut r = 1;
    let mut p = 2;
    while p * p <= n {
        while n % (p * p) == 0 {
            n /= p * p;
            s *= p;
        }
        if n % p == 0 {
            n /= p;
            r *= p;
        }
        p += 1;
    }
    (s, r * n)
}

impl Default for CycloNum {
    fn default() -> Self {
        CycloNum::zero()
    }
}

impl From<i64> for CycloNum {
    fn from(n: i64) -> Self {
        CycloNum::from_int(n)
    }
}

impl Add for &CycloNum {
    type Output = CycloNum;
    fn add(self, o: &CycloNum) -> CycloNum {
        CycloNum { c: core::array::from_fn(|i| self.c[i] + o.c[i]) }
    }
}

impl Sub for &CycloNum {
    type Output = CycloNum;
    fn sub(self, o: &CycloNum) -> CycloNum {
        CycloNum { c: core::array::from_fn(|i| self.c[i] - o.c[i]) }
    }
}

impl Neg for &CycloNum {
    type Output = CycloNum;
    fn neg(self) -> CycloNum {
        CycloNum { c: core::array::from_fn(|i| -self.c[i]) }
    }
}

impl Mul for &CycloNum {
    type Output = CycloNum;
    fn mul(self, o: &CycloNum) -> CycloNum {
        let zero = Rational::from_integer(0);
        let mut p: [Rational; 2 * DEG] = core::array::from_fn(|_| zero);
        for i in 0..DEG {
            if self.c[i] == zero {
                continue;
            }
            for j in 0..DEG {
                if o.c[j] != zero {
                    p[i + j] += self.c[i] * o.c[j];
                }
            }
        }
        CycloNum { c: reduce(p) }
    }
}

impl AddAssign for CycloNum {
    fn add_assign(&mut self, o: CycloNum) {
        for i in 0..DEG {
            self.c[i] += o.c[i];
        }
    }
}

impl AddAssign<&CycloNum> for CycloNum {
    fn add_assign(&mut self, o: &CycloNum) {
        for i in 0..DEG {
            self.c[i] += o.c[i];
        }
    }
}

fn fmt_rational(q: Rational) -> String {
    if q.is_integer() {
        alloc::format!("{}", q.numer())
    } else {
        alloc::format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (m, q) in self.c.iter().enumerate() {
            if *q == Rational::from_integer(0) {
                continue;
            }
            let coeff = fmt_rational(*q);
            terms.push(match m {
                0 => coeff,
                1 => alloc::format!("{}z", coeff),
                _ => alloc::format!("{}z^{}", coeff, m),
            });
        }
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join(" + "))
        }
    }
}

impl fmt::Debug for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
