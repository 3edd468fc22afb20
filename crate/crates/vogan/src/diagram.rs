//! Vogan diagrams, equivalence moves, orbits, labels and classification.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::cartan::{diagram_automorphisms, parse_type, AffineType, Gcm, Perm};
use crate::roots::{self, pairing, PairingVector, RootVector};
use crate::tables::{self, TableRow};
use crate::Error;

/// Parses `FAMILY[:l=N][;rho=(i j)...][;painted=a,b,...]`.
pub fn parse_diagram(s: &str) -> Result<VoganDiagram, Error> {
    let mut parts = s.trim().split(';');
    let t = parse_type(parts.next().unwrap_or(""))?;
    let bad = |reason: String| Error::Parse { reason };
    let mut rho = None;
    let mut painted = None;
    for part in parts {
        let (key, val) = part.split_once('=').ok_or_else(|| bad(format!("expected key=value, got '{}'", part)))?;
        match key.trim() {
            "rho" if rho.is_none() => rho = Some(parse_cycles(t.n(), val)?),
            "painted" if painted.is_none() => {
                let vs: Result<Vec<usize>, _> =
                    val.split(',').map(str::trim).filter(|v| !v.is_empty()).map(str::parse::<usize>).collect();
                painted = Some(vs.map_err(|_| bad(format!("bad vertex list '{}'", val)))?);
            }
            k => return Err(bad(format!("unexpected or repeated field '{}'", k))),
        }
    }
    make_diagram(t, rho.unwrap_or_else(|| Perm::identity(t.n())), &painted.unwrap_or_default())
}

fn parse_cycles(n: usize, s: &str) -> Result<Perm, Error> {
    let bad = || Error::Parse { reason: format!("bad cycle list '{}'", s) };
    let mut cycles = Vec::new();
    let mut rest = s.trim();
    while !rest.is_empty() {
        let body = rest.strip_prefix('(').ok_or_else(bad)?;
        let end = body.find(')').ok_or_else(bad)?;
        let c: Result<Vec<usize>, _> = body[..end].split_whitespace().map(str::parse::<usize>).collect();
        let c = c.map_err(|_| bad())?;
        if !c.is_empty() {
            cycles.push(c);
        }
        rest = body[end + 1..].trim_start();
    }
    Perm::from_cycles(n, &cycles).ok_or_else(bad)
}

impl core::str::FromStr for VoganDiagram {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        parse_diagram(s)
    }
}

/// Which `R[j]` moves are admissible.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MoveSet {
    pub allow_r0: bool,
}

impl MoveSet {
    /// `R[j]` for `j` in `1..=l` only.
    pub const STRICT: MoveSet = MoveSet { allow_r0: false };
    /// `R[0]` admitted as well.
    pub const EXTENDED: MoveSet = MoveSet { allow_r0: true };

    pub fn name(self) -> &'static str {
        if self.allow_r0 {
            "extended"
        } else {
            "strict"
        }
    }

    pub fn from_name(s: &str) -> Option<MoveSet> {
        match s {
            "strict" => Some(MoveSet::STRICT),
            "extended" => Some(MoveSet::EXTENDED),
            _ => None,
        }
    }
}

/// A Dynkin diagram with an involutive automorphism `rho` and a painting of
/// `rho`-fixed vertices, stored as a bitmask.
///
/// The derived order compares `rho` as a permutation word, then the painted
/// bitmask as an integer.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VoganDiagram {
    t: AffineType,
    rho: Perm,
    painted: u64,
}

pub(crate) fn mask_of(vs: &[usize]) -> u64 {
    vs.iter().fold(0, |m, &v| m | (1u64 << v))
}

pub(crate) fn vertices_of(mask: u64) -> Vec<usize> {
    (0..64).filter(|&i| mask >> i & 1 == 1).collect()
}

/// Validates `rho` and the painting.
pub fn make_diagram(t: AffineType, rho: Perm, painted: &[usize]) -> Result<VoganDiagram, Error> {
    let a = t.gcm();
    if rho.len() != t.n() || !rho.preserves(&a) || !rho.is_involution() {
        return Err(Error::NotAnAutomorphism);
    }
    for &v in painted {
        if v >= t.n() {
            return Err(Error::Parse { reason: format!("vertex {} out of range", v) });
        }
        if !rho.is_fixed(v) {
            return Err(Error::PaintedMovedVertex { vertex: v });
        }
    }
    Ok(VoganDiagram { t, rho, painted: mask_of(painted) })
}

impl VoganDiagram {
    pub fn affine_type(&self) -> &AffineType {
        &self.t
    }

    pub fn rho(&self) -> &Perm {
        &self.rho
    }

    pub fn painted(&self) -> Vec<usize> {
        vertices_of(self.painted)
    }

    pub fn painted_mask(&self) -> u64 {
        self.painted
    }

    pub fn painted_count(&self) -> u32 {
        self.painted.count_ones()
    }

    pub fn is_painted(&self, v: usize) -> bool {
        self.painted >> v & 1 == 1
    }

    /// Text form `FAMILY[:l=N][;rho=(i j)...][;painted=a,b,c]`.
    pub fn to_text(&self) -> String {
        let mut s = format!("{}", self.t);
        if !self.rho.is_identity() {
            s.push_str(";rho=");
            s.push_str(&self.rho.cycle_string());
        }
        if self.painted != 0 {
            s.push_str(";painted=");
            let vs: Vec<String> = self.painted().iter().map(|v| format!("{}", v)).collect();
            s.push_str(&vs.join(","));
        }
        s
    }
}

impl fmt::Display for VoganDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Per-type data reused across many moves.
struct Ctx {
    a: Gcm,
    auts: Vec<Perm>,
}

impl Ctx {
    fn new(t: &AffineType) -> Ctx {
        Ctx { a: t.gcm(), auts: diagram_automorphisms(t) }
    }

    /// Vertices whose colour `R[j]` reverses.
    fn flip_mask(&self, rho: &Perm, j: usize) -> u64 {
        rho.fixed_points().into_iter().filter(|&k| k != j && self.a.get(j, k) % 2 != 0).fold(0, |m, k| m | (1 << k))
    }

    fn neighbours(&self, d: &VoganDiagram, m: MoveSet) -> Vec<VoganDiagram> {
        let mut out = Vec::new();
        for j in d.painted() {
            if j == 0 && !m.allow_r0 {
                continue;
            }
            out.push(VoganDiagram { t: d.t, rho: d.rho.clone(), painted: d.painted ^ self.flip_mask(&d.rho, j) });
        }
        for tau in &self.auts {
            if tau.commutes_with(&d.rho) {
                out.push(permute(d, tau));
            }
        }
        out
    }

    fn orbit(&self, d: &VoganDiagram, m: MoveSet) -> BTreeSet<VoganDiagram> {
        let mut seen = BTreeSet::new();
        seen.insert(d.clone());
        let mut queue = VecDeque::from([d.clone()]);
        while let Some(x) = queue.pop_front() {
            for y in self.neighbours(&x, m) {
                if !seen.contains(&y) {
                    seen.insert(y.clone());
                    queue.push_back(y);
                }
            }
        }
        seen
    }
}

fn permute(d: &VoganDiagram, tau: &Perm) -> VoganDiagram {
    let painted = d.painted().iter().fold(0u64, |m, &v| m | (1 << tau.apply(v)));
    let rho = tau.compose(&d.rho).compose(&tau.inverse());
    VoganDiagram { t: d.t, rho, painted }
}

/// Reflection in the painted simple root `alpha_j`: the colour of a fixed
/// vertex `k != j` is reversed exactly when `a[j][k]` is odd.
pub fn apply_r(d: &VoganDiagram, j: usize, m: MoveSet) -> Result<VoganDiagram, Error> {
    if j == 0 && !m.allow_r0 {
        return Err(Error::R0Disallowed);
    }
    if j >= d.t.n() || !d.is_painted(j) {
        return Err(Error::VertexNotPainted { vertex: j });
    }
    let ctx = Ctx { a: d.t.gcm(), auts: Vec::new() };
    Ok(VoganDiagram { t: d.t, rho: d.rho.clone(), painted: d.painted ^ ctx.flip_mask(&d.rho, j) })
}

/// Applies `R[j]` for each `j` in order, first element first.
pub fn apply_moves(d: &VoganDiagram, moves: &[usize], m: MoveSet) -> Result<VoganDiagram, Error> {
    moves.iter().try_fold(d.clone(), |x, &j| apply_r(&x, j, m))
}

/// Relabels the diagram by a diagram automorphism commuting with `rho`.
pub fn apply_automorphism(d: &VoganDiagram, tau: &Perm) -> Result<VoganDiagram, Error> {
    if tau.len() != d.t.n() || !tau.preserves(&d.t.gcm()) {
        return Err(Error::NotAnAutomorphism);
    }
    if !tau.commutes_with(&d.rho) {
        return Err(Error::NonCommuting);
    }
    Ok(permute(d, tau))
}

/// Closure under all admissible `R[j]` and automorphism moves.
pub fn orbit(d: &VoganDiagram, m: MoveSet) -> BTreeSet<VoganDiagram> {
    Ctx::new(&d.t).orbit(d, m)
}

/// Least orbit member.
pub fn canonical(d: &VoganDiagram, m: MoveSet) -> VoganDiagram {
    orbit(d, m).into_iter().next().unwrap()
}

/// Result of [`reduce`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Reduction {
    Reduced(VoganDiagram),
    Report(ReductionReport),
}

/// No orbit member has at most two painted vertices; `witness` has the fewest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionReport {
    pub witness: VoganDiagram,
    pub orbit_size: usize,
}

/// Finds an orbit member with at most two painted vertices, preferring the
/// labelled patterns of [`involution_label`].
pub fn reduce(d: &VoganDiagram, m: MoveSet) -> Reduction {
    let orb = orbit(d, m);
    if let Some((_, x)) = first_pattern(&orb) {
        return Reduction::Reduced(x.clone());
    }
    let best = orb.iter().min_by_key(|x| (x.painted_count(), (*x).clone())).unwrap();
    if best.painted_count() <= 2 {
        Reduction::Reduced(best.clone())
    } else {
        Reduction::Report(ReductionReport { witness: best.clone(), orbit_size: orb.len() })
    }
}

/// Involution of the first kind attached to a diagram.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum InvolutionLabel {
    Identity,
    /// `exp iπ ad(p_j)`, `j` in `0..=l`.
    ExpP(usize),
    /// `exp iπ ad(p̊_j)`, `j` in `1..=l`.
    ExpP0(usize),
    Rho(Perm),
    /// `rho exp iπ ad(p_j)` with `j` fixed by `rho`.
    RhoExpP(Perm, usize),
    /// `(rho) exp iπ ad(sum_{j in S} p_j)`.
    GenericTorus {
        painted: Vec<usize>,
        rho: Option<Perm>,
    },
}

impl fmt::Display for InvolutionLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let set = |v: &[usize]| -> String {
            let s: Vec<String> = v.iter().map(|x| format!("{}", x)).collect();
            format!("{{{}}}", s.join(","))
        };
        match self {
            InvolutionLabel::Identity => f.write_str("Identity"),
            InvolutionLabel::ExpP(j) => write!(f, "ExpP({})", j),
            InvolutionLabel::ExpP0(j) => write!(f, "ExpP0({})", j),
            InvolutionLabel::Rho(r) => write!(f, "Rho{}", r),
            InvolutionLabel::RhoExpP(r, j) => write!(f, "Rho{}ExpP({})", r, j),
            InvolutionLabel::GenericTorus { painted, rho: None } => write!(f, "GenericTorus{}", set(painted)),
            InvolutionLabel::GenericTorus { painted, rho: Some(r) } => {
                write!(f, "Rho{}GenericTorus{}", r, set(painted))
            }
        }
    }
}

impl InvolutionLabel {
    /// True for the pattern labels (everything except `GenericTorus`).
    pub fn is_pattern(&self) -> bool {
        !matches!(self, InvolutionLabel::GenericTorus { .. })
    }
}

/// Pattern label matched by this exact diagram, if any.
pub fn pattern_of(d: &VoganDiagram) -> Option<InvolutionLabel> {
    let ps = d.painted();
    let marks = d.t.marks();
    if d.rho.is_identity() {
        match ps.as_slice() {
            [] => Some(InvolutionLabel::Identity),
            [j] => Some(InvolutionLabel::ExpP(*j)),
            [0, j] if marks[*j] % 2 != 0 => Some(InvolutionLabel::ExpP0(*j)),
            _ => None,
        }
    } else {
        match ps.as_slice() {
            [] => Some(InvolutionLabel::Rho(d.rho.clone())),
            [j] => Some(InvolutionLabel::RhoExpP(d.rho.clone(), *j)),
            _ => None,
        }
    }
}

fn priority(l: &InvolutionLabel) -> (u8, usize) {
    match l {
        InvolutionLabel::Identity => (0, 0),
        InvolutionLabel::ExpP(j) => (1, *j),
        InvolutionLabel::ExpP0(j) => (2, *j),
        InvolutionLabel::Rho(_) => (3, 0),
        InvolutionLabel::RhoExpP(_, j) => (4, *j),
        InvolutionLabel::GenericTorus { .. } => (5, 0),
    }
}

fn first_pattern(orb: &BTreeSet<VoganDiagram>) -> Option<(InvolutionLabel, &VoganDiagram)> {
    orb.iter().filter_map(|d| pattern_of(d).map(|l| (l, d))).min_by_key(|(l, _)| priority(l))
}

/// Label of the orbit: the highest-priority pattern found among its members,
/// or a generic torus label read off the canonical member.
pub fn involution_label(d: &VoganDiagram, m: MoveSet) -> InvolutionLabel {
    label_of_orbit(&orbit(d, m))
}

fn label_of_orbit(orb: &BTreeSet<VoganDiagram>) -> InvolutionLabel {
    if let Some((l, _)) = first_pattern(orb) {
        return l;
    }
    let c = orb.iter().next().unwrap();
    InvolutionLabel::GenericTorus {
        painted: c.painted(),
        rho: if c.rho.is_identity() { None } else { Some(c.rho.clone()) },
    }
}

/// Diagram of a labelled involution: vertex `k` is painted when the torus
/// part pairs oddly with `alpha_k`.
pub fn diagram_of_involution(t: &AffineType, label: &InvolutionLabel) -> Result<VoganDiagram, Error> {
    let n = t.n();
    let id = Perm::identity(n);
    let invalid = |reason: String| Error::InvalidLabel { reason };
    let paint = |h: &PairingVector, rho: &Perm| -> Vec<usize> {
        (0..n).filter(|&k| rho.is_fixed(k) && pairing(&RootVector::simple(n, k), h).rem_euclid(2) == 1).collect()
    };
    match label {
        InvolutionLabel::Identity => make_diagram(*t, id, &[]),
        InvolutionLabel::ExpP(j) => {
            if *j >= n {
                return Err(invalid(format!("ExpP({}) out of range", j)));
            }
            let ps = paint(&roots::p(t, *j), &id);
            make_diagram(*t, id, &ps)
        }
        InvolutionLabel::ExpP0(j) => {
            if *j == 0 || *j >= n {
                return Err(invalid(format!("ExpP0({}) needs 1 <= j <= l", j)));
            }
            let ps = paint(&roots::p_ring(t, *j), &id);
            make_diagram(*t, id, &ps)
        }
        InvolutionLabel::Rho(rho) => {
            if rho.is_identity() {
                return Err(invalid(String::from("Rho needs a non-trivial rho")));
            }
            make_diagram(*t, rho.clone(), &[])
        }
        InvolutionLabel::RhoExpP(rho, j) => {
            if rho.is_identity() || *j >= n || !rho.is_fixed(*j) {
                return Err(invalid(format!("RhoExpP({}) needs a non-trivial rho fixing {}", j, j)));
            }
            let ps = paint(&roots::p(t, *j), rho);
            make_diagram(*t, rho.clone(), &ps)
        }
        InvolutionLabel::GenericTorus { painted, rho } => {
            let rho = rho.clone().unwrap_or(id);
            if painted.iter().any(|&j| j >= n || !rho.is_fixed(j)) {
                return Err(invalid(String::from("GenericTorus support must be rho-fixed")));
            }
            let mut h = alloc::vec![0i64; n];
            for &j in painted {
                for (x, y) in h.iter_mut().zip(&roots::p(t, j).0) {
                    *x += y;
                }
            }
            let ps = paint(&PairingVector(h), &rho);
            make_diagram(*t, rho, &ps)
        }
    }
}

/// One equivalence class of diagrams.
#[derive(Clone, Debug)]
pub struct OrbitClass {
    pub canonical: VoganDiagram,
    pub members: BTreeSet<VoganDiagram>,
    pub label: InvolutionLabel,
    pub table_match: Option<TableRow>,
}

/// Upper bound on the number of diagrams [`classify`] enumerates.
pub const CLASSIFY_LIMIT: u64 = 1 << 22;

/// All diagrams of the type, partitioned into orbits, labelled and matched
/// against the reference table. Sorted by canonical form.
pub fn classify(t: &AffineType, m: MoveSet) -> Result<Vec<OrbitClass>, Error> {
    let ctx = Ctx::new(t);
    let rhos: Vec<Perm> = ctx.auts.iter().filter(|p| p.is_involution()).cloned().collect();
    let total: u64 = rhos.iter().map(|r| 1u64 << r.fixed_points().len().min(63)).sum();
    if total > CLASSIFY_LIMIT {
        return Err(Error::TooLarge { diagrams: total, limit: CLASSIFY_LIMIT });
    }
    let rows = tables::table_rows(t);
    let mut seen: BTreeSet<VoganDiagram> = BTreeSet::new();
    let mut classes = Vec::new();
    for rho in &rhos {
        let fix = rho.fixed_points();
        for bits in 0u64..(1 << fix.len()) {
            let ps: Vec<usize> = (0..fix.len()).filter(|b| bits >> b & 1 == 1).map(|b| fix[b]).collect();
            let d = VoganDiagram { t: *t, rho: rho.clone(), painted: mask_of(&ps) };
            if seen.contains(&d) {
                continue;
            }
            let members = ctx.orbit(&d, m);
            seen.extend(members.iter().cloned());
            let canonical = members.iter().next().unwrap().clone();
            let label = label_of_orbit(&members);
            let table_match = rows.iter().find(|r| members.contains(&r.diagram)).cloned();
            classes.push(OrbitClass { canonical, members, label, table_match });
        }
    }
    classes.sort_by(|a, b| a.canonical.cmp(&b.canonical));
    Ok(classes)
}

/// Comparison of the orbit structure with the reference table, for one move
/// set.
#[derive(Clone, Debug)]
pub struct TableCheck {
    pub moveset: MoveSet,
    pub rows: usize,
    /// Pairs of row indices whose diagrams are equivalent.
    pub equivalent_rows: Vec<(usize, usize)>,
    /// Canonical forms of orbits containing neither a row nor the compact
    /// diagram.
    pub uncovered: Vec<VoganDiagram>,
    pub orbit_count: usize,
    /// Rows plus the compact class.
    pub expected_count: usize,
}

impl TableCheck {
    pub fn rows_distinct(&self) -> bool {
        self.equivalent_rows.is_empty()
    }

    pub fn all_covered(&self) -> bool {
        self.uncovered.is_empty()
    }

    pub fn count_matches(&self) -> bool {
        self.orbit_count == self.expected_count
    }
}

/// [`TableCheck`] under both move sets, strict first.
pub fn verify_tables(t: &AffineType) -> Result<[TableCheck; 2], Error> {
    let rows = tables::table_rows(t);
    let compact = make_diagram(*t, Perm::identity(t.n()), &[])?;
    let check = |m: MoveSet| -> Result<TableCheck, Error> {
        let classes = classify(t, m)?;
        let class_of = |d: &VoganDiagram| classes.iter().position(|c| c.members.contains(d)).unwrap();
        let ids: Vec<usize> = rows.iter().map(|r| class_of(&r.diagram)).collect();
        let mut equivalent_rows = Vec::new();
        for i in 0..ids.len() {
            for j in i + 1..ids.len() {
                if ids[i] == ids[j] {
                    equivalent_rows.push((i, j));
                }
            }
        }
        let compact_id = class_of(&compact);
        let uncovered = classes
            .iter()
            .enumerate()
            .filter(|(c, _)| *c != compact_id && !ids.contains(c))
            .map(|(_, cl)| cl.canonical.clone())
            .collect();
        Ok(TableCheck {
            moveset: m,
            rows: rows.len(),
            equivalent_rows,
            uncovered,
            orbit_count: classes.len(),
            expected_count: rows.len() + 1,
        })
    };
    Ok([check(MoveSet::STRICT)?, check(MoveSet::EXTENDED)?])
}

/// Every pattern label that is structurally valid for the type. `ExpP0(j)`
/// with `a_j` even paints the same diagram as `ExpP(j)` and is left out.
pub fn pattern_labels(t: &AffineType) -> Vec<InvolutionLabel> {
    let n = t.n();
    let marks = t.marks();
    let mut out = alloc::vec![InvolutionLabel::Identity];
    out.extend((0..n).map(InvolutionLabel::ExpP));
    out.extend((1..n).filter(|&j| marks[j] % 2 != 0).map(InvolutionLabel::ExpP0));
    for rho in diagram_automorphisms(t) {
        if rho.is_identity() || !rho.is_involution() {
            continue;
        }
        out.push(InvolutionLabel::Rho(rho.clone()));
        for j in rho.fixed_points() {
            out.push(InvolutionLabel::RhoExpP(rho.clone(), j));
        }
    }
    out
}
