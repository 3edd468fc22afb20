//! The six twisted affine types: generalized Cartan matrices, marks and
//! diagram automorphisms.

use alloc::collections::VecDeque;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::rational::{self, Rational};
use crate::Error;

/// Twisted affine family, named after the diagram row it comes from.
#[allow(non_camel_case_types)]
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A2_2,
    A2l_2,
    A2lm1_2,
    Dlp1_2,
    E6_2,
    D4_3,
}

impl Family {
    pub const ALL: [Family; 6] =
        [Family::A2_2, Family::A2l_2, Family::A2lm1_2, Family::Dlp1_2, Family::E6_2, Family::D4_3];

    pub fn name(self) -> &'static str {
        match self {
            Family::A2_2 => "A2_2",
            Family::A2l_2 => "A2l_2",
            Family::A2lm1_2 => "A2lm1_2",
            Family::Dlp1_2 => "Dlp1_2",
            Family::E6_2 => "E6_2",
            Family::D4_3 => "D4_3",
        }
    }

    pub fn from_name(s: &str) -> Option<Family> {
        Family::ALL.iter().copied().find(|f| f.name() == s)
    }

    /// Order `k` of the twisting automorphism.
    pub fn twist_order(self) -> usize {
        match self {
            Family::D4_3 => 3,
            _ => 2,
        }
    }

    /// The rank for families with a single member.
    pub fn fixed_rank(self) -> Option<usize> {
        match self {
            Family::A2_2 => Some(1),
            Family::E6_2 => Some(4),
            Family::D4_3 => Some(2),
            _ => None,
        }
    }

    pub fn min_rank(self) -> usize {
        match self {
            Family::A2l_2 | Family::Dlp1_2 => 2,
            Family::A2lm1_2 => 3,
            f => f.fixed_rank().unwrap_or(1),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Finite types appearing as the fixed algebra of the twist.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FiniteType {
    A(usize),
    B(usize),
    C(usize),
    D(usize),
    E6,
    F4,
    G2,
}

impl FiniteType {
    /// Number of roots, from the standard closed formulas.
    pub fn root_count(self) -> usize {
        match self {
            FiniteType::A(n) => n * (n + 1),
            FiniteType::B(n) | FiniteType::C(n) => 2 * n * n,
            FiniteType::D(n) => 2 * n * (n - 1),
            FiniteType::E6 => 72,
            FiniteType::F4 => 48,
            FiniteType::G2 => 12,
        }
    }

    pub fn rank(self) -> usize {
        match self {
            FiniteType::A(n) | FiniteType::B(n) | FiniteType::C(n) | FiniteType::D(n) => n,
            FiniteType::E6 => 6,
            FiniteType::F4 => 4,
            FiniteType::G2 => 2,
        }
    }

    pub fn dim(self) -> usize {
        self.root_count() + self.rank()
    }
}

impl fmt::Display for FiniteType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FiniteType::A(n) => write!(f, "A{}", n),
            FiniteType::B(n) => write!(f, "B{}", n),
            FiniteType::C(n) => write!(f, "C{}", n),
            FiniteType::D(n) => write!(f, "D{}", n),
            FiniteType::E6 => f.write_str("E6"),
            FiniteType::F4 => f.write_str("F4"),
            FiniteType::G2 => f.write_str("G2"),
        }
    }
}

/// A validated twisted affine type; vertices are `0..=l`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AffineType {
    family: Family,
    l: usize,
}

/// Builds the descriptor, enforcing the rank constraint of each family.
pub fn make_type(family: Family, l: usize) -> Result<AffineType, Error> {
    let ok = match family.fixed_rank() {
        Some(r) => l == r,
        None => l >= family.min_rank(),
    };
    if ok {
        Ok(AffineType { family, l })
    } else {
        Err(Error::RankOutOfRange { family, l })
    }
}

impl AffineType {
    pub fn family(&self) -> Family {
        self.family
    }

    pub fn l(&self) -> usize {
        self.l
    }

    /// Number of vertices, `l + 1`.
    pub fn n(&self) -> usize {
        self.l + 1
    }

    pub fn k(&self) -> usize {
        self.family.twist_order()
    }

    /// Type of the fixed subalgebra (vertex 0 removed).
    pub fn finite_type(&self) -> FiniteType {
        let l = self.l;
        match self.family {
            Family::A2_2 => FiniteType::A(1),
            Family::A2l_2 | Family::Dlp1_2 => FiniteType::B(l),
            Family::A2lm1_2 => FiniteType::C(l),
            Family::E6_2 => FiniteType::F4,
            Family::D4_3 => FiniteType::G2,
        }
    }

    /// Type of the simply-laced algebra being twisted.
    pub fn parent_type(&self) -> FiniteType {
        let l = self.l;
        match self.family {
            Family::A2_2 => FiniteType::A(2),
            Family::A2l_2 => FiniteType::A(2 * l),
            Family::A2lm1_2 => FiniteType::A(2 * l - 1),
            Family::Dlp1_2 => FiniteType::D(l + 1),
            Family::E6_2 => FiniteType::E6,
            Family::D4_3 => FiniteType::D(4),
        }
    }

    pub fn marks(&self) -> Vec<i64> {
        marks(self)
    }

    pub fn gcm(&self) -> Gcm {
        gcm(self)
    }
}

/// Parses `FAMILY[:l=N]`; `l` may be omitted for single-member families.
pub fn parse_type(s: &str) -> Result<AffineType, Error> {
    let s = s.trim();
    let (name, rest) = match s.split_once(':') {
        Some((a, b)) => (a, Some(b)),
        None => (s, None),
    };
    let family =
        Family::from_name(name).ok_or_else(|| Error::Parse { reason: format!("unknown family '{}'", name) })?;
    let l = match rest {
        Some(r) => {
            let v = r
                .trim()
                .strip_prefix("l=")
                .ok_or_else(|| Error::Parse { reason: format!("expected 'l=N', got '{}'", r) })?;
            v.trim().parse::<usize>().map_err(|_| Error::Parse { reason: format!("bad rank '{}'", v) })?
        }
        None => family.fixed_rank().ok_or_else(|| Error::Parse { reason: format!("{} needs ':l=N'", family) })?,
    };
    make_type(family, l)
}

impl core::str::FromStr for AffineType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        parse_type(s)
    }
}

impl fmt::Display for AffineType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family.fixed_rank() {
            Some(_) => write!(f, "{}", self.family),
            None => write!(f, "{}:l={}", self.family, self.l),
        }
    }
}

/// Numerical labels `a_0..a_l`.
pub fn marks(t: &AffineType) -> Vec<i64> {
    let l = t.l;
    match t.family {
        Family::A2_2 => vec![1, 2],
        Family::A2l_2 => {
            let mut m = vec![2; l + 1];
            m[0] = 1;
            m
        }
        Family::A2lm1_2 => {
            let mut m = vec![2; l + 1];
            m[0] = 1;
            m[1] = 1;
            m[l] = 1;
            m
        }
        Family::Dlp1_2 => vec![1; l + 1],
        Family::E6_2 => vec![1, 2, 3, 2, 1],
        Family::D4_3 => vec![1, 2, 1],
    }
}

/// Generalized Cartan matrix with `a[i][j] = alpha_j(alpha_i^vee)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gcm {
    rows: Vec<Vec<i64>>,
}

impl Gcm {
    pub fn from_rows(rows: Vec<Vec<i64>>) -> Gcm {
        Gcm { rows }
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.rows[i][j]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    /// `A * v`.
    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        self.rows.iter().map(|r| r.iter().zip(v).map(|(a, b)| a * b).sum()).collect()
    }

    /// Neighbours of `i` in the Dynkin graph.
    pub fn neighbours(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.size()).filter(move |&j| j != i && self.rows[i][j] != 0)
    }

    /// Principal submatrix on the given vertices.
    pub fn restrict(&self, vertices: &[usize]) -> Gcm {
        Gcm { rows: vertices.iter().map(|&i| vertices.iter().map(|&j| self.rows[i][j]).collect()).collect() }
    }

    /// Checks the GCM sign/zero-pattern axioms.
    pub fn is_gcm(&self) -> bool {
        let n = self.size();
        (0..n).all(|i| {
            self.rows[i][i] == 2
                && (0..n)
                    .all(|j| i == j || (self.rows[i][j] <= 0 && ((self.rows[i][j] == 0) == (self.rows[j][i] == 0))))
        })
    }

    /// Positive diagonal `d` with `d_i a_ij = d_j a_ji`, normalised so the
    /// smallest entry is 1. `None` if the matrix is not symmetrizable or the
    /// graph is disconnected.
    pub fn symmetrizer(&self) -> Option<Vec<Rational>> {
        let n = self.size();
        if n == 0 {
            return Some(Vec::new());
        }
        let mut d: Vec<Option<Rational>> = vec![None; n];
        d[0] = Some(Rational::from_integer(1));
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            let di = d[i].unwrap();
            for j in self.neighbours(i).collect::<Vec<_>>() {
                let dj = di * Rational::new(self.rows[i][j] as i128, self.rows[j][i] as i128);
                match d[j] {
                    None => {
                        d[j] = Some(dj);
                        queue.push_back(j);
                    }
                    Some(x) if x != dj => return None,
                    _ => {}
                }
            }
        }
        let d: Option<Vec<Rational>> = d.into_iter().collect();
        let d = d?;
        let min = d.iter().copied().min().unwrap();
        Some(d.into_iter().map(|x| x / min).collect())
    }

    /// Symmetrized matrix `D A`.
    pub fn symmetrized(&self) -> Option<Vec<Vec<Rational>>> {
        let d = self.symmetrizer()?;
        Some(
            self.rows
                .iter()
                .enumerate()
                .map(|(i, r)| r.iter().map(|&a| d[i] * Rational::from_integer(a as i128)).collect())
                .collect(),
        )
    }

    /// Finite type test: symmetrizable with positive-definite symmetrization.
    pub fn is_finite_type(&self) -> bool {
        match self.symmetrized() {
            Some(s) => rational::leading_minors(&s).iter().all(|m| *m > Rational::from_integer(0)),
            None => false,
        }
    }

    /// `(a_ij a_ji)`, the number of lines joining `i` and `j`.
    pub fn bond(&self, i: usize, j: usize) -> i64 {
        self.rows[i][j] * self.rows[j][i]
    }
}

impl fmt::Display for Gcm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str("[")?;
            for (j, a) in r.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{}", a)?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

/// Cartan matrix of the type. Bond multiplicities follow the diagram rows;
/// the orientation of every multiple bond is the one annihilating the marks.
pub fn gcm(t: &AffineType) -> Gcm {
    let n = t.n();
    let l = t.l;
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut edge = |i: usize, j: usize, aij: i64, aji: i64| {
        a[i][j] = aij;
        a[j][i] = aji;
    };
    match t.family {
        Family::A2_2 => edge(0, 1, -1, -4),
        Family::A2l_2 => {
            edge(0, 1, -1, -2);
            for i in 1..l - 1 {
                edge(i, i + 1, -1, -1);
            }
            edge(l - 1, l, -1, -2);
        }
        Family::A2lm1_2 => {
            edge(0, 2, -1, -1);
            edge(1, 2, -1, -1);
            for i in 2..l - 1 {
                edge(i, i + 1, -1, -1);
            }
            edge(l - 1, l, -2, -1);
        }
        Family::Dlp1_2 => {
            edge(0, 1, -2, -1);
            for i in 1..l - 1 {
                edge(i, i + 1, -1, -1);
            }
            edge(l - 1, l, -1, -2);
        }
        Family::E6_2 => {
            edge(0, 1, -1, -1);
            edge(1, 2, -1, -1);
            edge(2, 3, -2, -1);
            edge(3, 4, -1, -1);
        }
        Family::D4_3 => {
            edge(0, 1, -1, -1);
            edge(1, 2, -3, -1);
        }
    }
    Gcm { rows: a }
}

/// Permutation of the vertex set `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm(Vec<usize>);

impl Perm {
    pub fn identity(n: usize) -> Perm {
        Perm((0..n).collect())
    }

    /// Checks bijectivity.
    pub fn from_images(images: Vec<usize>) -> Option<Perm> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return None;
            }
            seen[x] = true;
        }
        Some(Perm(images))
    }

    /// Product of disjoint or overlapping cycles, applied right to left.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Option<Perm> {
        let mut p = Perm::identity(n);
        for c in cycles.iter().rev() {
            if c.iter().any(|&x| x >= n) {
                return None;
            }
            let mut img: Vec<usize> = (0..n).collect();
            for (i, &x) in c.iter().enumerate() {
                img[x] = c[(i + 1) % c.len()];
            }
            let cyc = Perm::from_images(img)?;
            p = cyc.compose(&p);
        }
        Some(p)
    }

    pub fn transposition(n: usize, i: usize, j: usize) -> Perm {
        let mut v: Vec<usize> = (0..n).collect();
        v.swap(i, j);
        Perm(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm(other.0.iter().map(|&i| self.0[i]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut v = vec![0; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            v[x] = i;
        }
        Perm(v)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn is_involution(&self) -> bool {
        self.compose(self).is_identity()
    }

    pub fn is_fixed(&self, i: usize) -> bool {
        self.0[i] == i
    }

    pub fn fixed_points(&self) -> Vec<usize> {
        (0..self.0.len()).filter(|&i| self.0[i] == i).collect()
    }

    pub fn commutes_with(&self, other: &Perm) -> bool {
        self.compose(other) == other.compose(self)
    }

    /// Order of the permutation.
    pub fn order(&self) -> usize {
        let mut p = self.clone();
        let mut k = 1;
        while !p.is_identity() {
            p = p.compose(self);
            k += 1;
        }
        k
    }

    /// Non-trivial cycles, each starting from its least element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.0.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] || self.0[s] == s {
                seen[s] = true;
                continue;
            }
            let mut c = vec![s];
            seen[s] = true;
            let mut x = self.0[s];
            while x != s {
                seen[x] = true;
                c.push(x);
                x = self.0[x];
            }
            out.push(c);
        }
        out
    }

    /// Preserves the matrix entrywise.
    pub fn preserves(&self, a: &Gcm) -> bool {
        let n = a.size();
        self.0.len() == n && (0..n).all(|i| (0..n).all(|j| a.get(self.0[i], self.0[j]) == a.get(i, j)))
    }

    /// Cycle notation, `()` for the identity.
    pub fn cycle_string(&self) -> String {
        use core::fmt::Write;
        let cs = self.cycles();
        let mut s = String::new();
        if cs.is_empty() {
            s.push_str("()");
        }
        for c in cs {
            s.push('(');
            for (i, x) in c.iter().enumerate() {
                if i > 0 {
                    s.push(' ');
                }
                let _ = write!(s, "{}", x);
            }
            s.push(')');
        }
        s
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.cycle_string())
    }
}

/// All permutations preserving the GCM, by backtracking with degree and
/// partial-row pruning. Sorted, identity first.
pub fn diagram_automorphisms(t: &AffineType) -> Vec<Perm> {
    automorphisms_of(&gcm(t))
}

/// Automorphism group of an arbitrary square integer matrix.
pub fn automorphisms_of(a: &Gcm) -> Vec<Perm> {
    let n = a.size();
    let signature = |i: usize| {
        let mut r: Vec<(i64, i64)> = (0..n).filter(|&j| j != i).map(|j| (a.get(i, j), a.get(j, i))).collect();
        r.sort();
        r
    };
    let sigs: Vec<_> = (0..n).map(signature).collect();
    let mut out = Vec::new();
    let mut img = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn go(
        i: usize,
        a: &Gcm,
        sigs: &[Vec<(i64, i64)>],
        img: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Vec<Perm>,
    ) {
        let n = a.size();
        if i == n {
            out.push(Perm(img.clone()));
            return;
        }
        for c in 0..n {
            if used[c] || sigs[c] != sigs[i] {
                continue;
            }
            let ok = (0..i).all(|j| a.get(c, img[j]) == a.get(i, j) && a.get(img[j], c) == a.get(j, i));
            if !ok {
                continue;
            }
            img[i] = c;
            used[c] = true;
            go(i + 1, a, sigs, img, used, out);
            used[c] = false;
        }
        img[i] = usize::MAX;
    }
    go(0, a, &sigs, &mut img, &mut used, &mut out);
    out.sort();
    out
}
