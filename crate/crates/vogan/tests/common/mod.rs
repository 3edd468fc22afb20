//! Shared helpers for the integration tests.

#![allow(dead_code)]

use std::collections::BTreeMap;

use vogan::{make_type, AffineType, Family, Gcm, Perm};

/// The desk-scale type list.
pub fn desk_types() -> Vec<AffineType> {
    [
        (Family::A2_2, 1),
        (Family::A2l_2, 2),
        (Family::A2l_2, 3),
        (Family::A2lm1_2, 3),
        (Family::A2lm1_2, 4),
        (Family::Dlp1_2, 2),
        (Family::Dlp1_2, 3),
        (Family::Dlp1_2, 4),
        (Family::E6_2, 4),
        (Family::D4_3, 2),
    ]
    .into_iter()
    .map(|(f, l)| make_type(f, l).unwrap())
    .collect()
}

pub fn ty(f: Family, l: usize) -> AffineType {
    make_type(f, l).unwrap()
}

/// All permutations of `0..n`, by brute force.
pub fn all_perms(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in all_perms(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Automorphisms of a matrix, by trying every permutation.
pub fn brute_automorphisms(a: &Gcm) -> Vec<Perm> {
    let n = a.size();
    let mut out: Vec<Perm> = all_perms(n)
        .into_iter()
        .filter(|p| (0..n).all(|i| (0..n).all(|j| a.get(p[i], p[j]) == a.get(i, j))))
        .map(|p| Perm::from_images(p).unwrap())
        .collect();
    out.sort();
    out
}

/// Positive roots of a finite-type Cartan matrix by reflection closure of
/// the simple roots, keeping only positive images.
pub fn finite_positive_roots(a: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    let mut seen: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
    let mut frontier = seen.clone();
    while let Some(b) = frontier.pop() {
        for i in 0..n {
            let c: i64 = (0..n).map(|j| b[j] * a[i][j]).sum();
            let mut r = b.clone();
            r[i] -= c;
            if r.iter().all(|&x| x >= 0) && r.iter().any(|&x| x > 0) && !seen.contains(&r) {
                seen.push(r.clone());
                frontier.push(r);
            }
        }
    }
    seen
}

/// Cartan matrices of the finite types by name: `A`, `B`, `C`, `D` chains plus
/// `F4` and `G2`.
pub fn finite_cartan(name: &str, n: usize) -> Vec<Vec<i64>> {
    let mut a = vec![vec![0i64; n]; n];
    for i in 0..n {
        a[i][i] = 2;
        if i + 1 < n {
            a[i][i + 1] = -1;
            a[i + 1][i] = -1;
        }
    }
    match name {
        "A" => {}
        "B" => a[n - 2][n - 1] = -2,
        "C" => a[n - 1][n - 2] = -2,
        "D" => {
            a[n - 2][n - 1] = 0;
            a[n - 1][n - 2] = 0;
            a[n - 3][n - 1] = -1;
            a[n - 1][n - 3] = -1;
        }
        "F" => a[1][2] = -2,
        "G" => a[0][1] = -3,
        _ => panic!("unknown type {}", name),
    }
    a
}

/// Number of equivalence classes by union-find over every painting of every
/// involutive automorphism, written against the matrix alone.
pub fn oracle_class_count(t: &AffineType, allow_r0: bool) -> usize {
    let a = t.gcm();
    let n = t.n();
    let auts = brute_automorphisms(&a);
    let mut nodes: Vec<(Vec<usize>, u64)> = Vec::new();
    for rho in auts.iter().filter(|p| p.compose(p).is_identity()) {
        let fixed: Vec<usize> = (0..n).filter(|&v| rho.apply(v) == v).collect();
        for bits in 0u64..(1 << fixed.len()) {
            let mask = (0..fixed.len()).filter(|b| bits >> b & 1 == 1).fold(0u64, |m, b| m | 1 << fixed[b]);
            nodes.push((rho.images().to_vec(), mask));
        }
    }
    let index: BTreeMap<(Vec<usize>, u64), usize> = nodes.iter().cloned().enumerate().map(|(i, x)| (x, i)).collect();
    let mut parent: Vec<usize> = (0..nodes.len()).collect();
    fn find(p: &mut Vec<usize>, x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    for (i, (rho, mask)) in nodes.iter().enumerate() {
        let mut next = Vec::new();
        for j in 0..n {
            if mask >> j & 1 == 0 || (j == 0 && !allow_r0) {
                continue;
            }
            let mut m = *mask;
            for k in 0..n {
                if k != j && rho[k] == k && a.get(j, k) % 2 != 0 {
                    m ^= 1 << k;
                }
            }
            next.push((rho.clone(), m));
        }
        for tau in &auts {
            let tr: Vec<usize> = (0..n).map(|v| tau.apply(rho[v])).collect();
            let rt: Vec<usize> = (0..n).map(|v| rho[tau.apply(v)]).collect();
            if tr != rt {
                continue;
            }
            let m = (0..n).filter(|v| mask >> v & 1 == 1).fold(0u64, |m, v| m | 1 << tau.apply(v));
            next.push((rho.clone(), m));
        }
        for y in next {
            let (x, y) = (find(&mut parent, i), find(&mut parent, index[&y]));
            parent[x] = y;
        }
    }
    (0..nodes.len()).filter(|&i| find(&mut parent, i) == i).count()
}
