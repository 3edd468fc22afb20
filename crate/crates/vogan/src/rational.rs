//! Small exact linear algebra over the rationals.

use alloc::vec::Vec;
use num_rational::Ratio;

pub type Rational = Ratio<i128>;

fn zero() -> Rational {
    Rational::from_integer(0)
}

/// Leading principal minors `det(M[..k][..k])` for `k = 1..=n`.
pub fn leading_minors(m: &[Vec<Rational>]) -> Vec<Rational> {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m.to_vec();
    let mut out = Vec::with_capacity(n);
    let mut det = Rational::from_integer(1);
    // Elimination without pivoting; a zero pivot means a zero minor, after
    // which the remaining minors are computed directly.
    for k in 0..n {
        if a[k][k] == zero() {
            for j in k..n {
                let sub: Vec<Vec<Rational>> = m[..=j].iter().map(|r| r[..=j].to_vec()).collect();
                out.push(determinant(&sub));
            }
            return out;
        }
        det *= a[k][k];
        out.push(det);
        for i in k + 1..n {
            let f = a[i][k] / a[k][k];
            for j in k..n {
                let v = a[k][j];
                a[i][j] -= f * v;
            }
        }
    }
    out
}

/// Determinant by Gaussian elimination with pivoting.
pub fn determinant(m: &[Vec<Rational>]) -> Rational {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m.to_vec();
    let mut det = Rational::from_integer(1);
    for k in 0..n {
        let p = match (k..n).find(|&i| a[i][k] != zero()) {
            Some(p) => p,
            None => return zero(),
        };
        if p != k {
            a.swap(p, k);
            det = -det;
        }
        det *= a[k][k];
        for i in k + 1..n {
            let f = a[i][k] / a[k][k];
            for j in k..n {
                let v = a[k][j];
                a[i][j] -= f * v;
            }
        }
    }
    det
}

/// Solves `M x = b` for square nonsingular `M`.
pub fn solve(m: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m
        .iter()
        .zip(b)
        .map(|(r, &bi)| {
            let mut r = r.clone();
            r.push(bi);
            r
        })
        .collect();
    for k in 0..n {
        let p = (k..n).find(|&i| a[i][k] != zero())?;
        a.swap(p, k);
        let piv = a[k][k];
        for j in k..=n {
            a[k][j] /= piv;
        }
        for i in 0..n {
            if i != k && a[i][k] != zero() {
                let f = a[i][k];
                for j in k..=n {
                    let v = a[k][j];
                    a[i][j] -= f * v;
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n]).collect())
}

/// Integer matrix to rationals.
pub fn from_int(m: &[Vec<i64>]) -> Vec<Vec<Rational>> {
    m.iter().map(|r| r.iter().map(|&x| Rational::from_integer(x as i128)).collect()).collect()
}

/// Transpose.
pub fn transpose<T: Copy>(m: &[Vec<T>]) -> Vec<Vec<T>> {
    if m.is_empty() {
        return Vec::new();
    }
    (0..m[0].len()).map(|j| m.iter().map(|r| r[j]).collect()).collect()
}
