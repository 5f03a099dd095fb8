//! Realizations of length lists as Hamiltonian paths of `K_v`, and the
//! checks that certify them.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::list::LengthList;

pub type Vertex = u32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    /// Edge lengths are `|x - y|`.
    Linear,
    /// Edge lengths are `min(|x - y|, v - |x - y|)`.
    Cyclic,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Linear => "linear",
            Kind::Cyclic => "cyclic",
        })
    }
}

impl FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "linear" | "l" => Ok(Kind::Linear),
            "cyclic" | "c" => Ok(Kind::Cyclic),
            other => Err(Error::invalid(format!("unknown kind {other:?}"))),
        }
    }
}

/// `min(|x - y|, v - |x - y|)` for two distinct vertices of `K_v`.
pub fn cyclic_length(x: Vertex, y: Vertex, v: u32) -> Result<u32> {
    if x >= v || y >= v {
        return Err(Error::invalid(format!("vertices {x},{y} out of range for v={v}")));
    }
    if x == y {
        return Err(Error::invalid(format!("edge [{x},{x}] is a loop")));
    }
    let d = x.abs_diff(y);
    Ok(d.min(v - d))
}

/// Length of the edge `[x, y]` under `kind`. Callers guarantee `x != y < v`.
pub(crate) fn edge_length(x: Vertex, y: Vertex, v: u32, kind: Kind) -> u32 {
    let d = x.abs_diff(y);
    match kind {
        Kind::Linear => d,
        Kind::Cyclic => d.min(v - d),
    }
}

/// Checks that `path` is a permutation of `0..path.len()`.
pub fn check_permutation(path: &[Vertex]) -> Result<()> {
    let v = path.len();
    let mut seen = vec![false; v];
    for &x in path {
        let i = x as usize;
        if i >= v {
            return Err(Error::invalid(format!(
                "not a permutation: vertex {x} out of range for v={v}"
            )));
        }
        if seen[i] {
            return Err(Error::invalid(format!("not a permutation: vertex {x} repeated")));
        }
        seen[i] = true;
    }
    Ok(())
}

/// The multiset of the `v - 1` consecutive edge lengths of a Hamiltonian
/// path of `K_v`.
pub fn measure(path: &[Vertex], kind: Kind) -> Result<LengthList> {
    if path.len() < 2 {
        return Err(Error::invalid("a path needs at least two vertices"));
    }
    check_permutation(path)?;
    Ok(measure_unchecked(path, kind))
}

fn measure_unchecked(path: &[Vertex], kind: Kind) -> LengthList {
    let v = path.len() as u32;
    let mut list = LengthList::new();
    for w in path.windows(2) {
        list.add(edge_length(w[0], w[1], v, kind), 1);
    }
    list
}

/// A Hamiltonian path of `K_v` together with the list it claims to realize.
///
/// [`Realization::new`] enforces every invariant (permutation, first vertex
/// `0`, measured list equal to the claimed one). [`Realization::claim`] skips
/// the checks so that arbitrary input can be handed to [`verify`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Realization {
    kind: Kind,
    vertices: Vec<Vertex>,
    list: LengthList,
}

impl Realization {
    pub fn new(kind: Kind, vertices: Vec<Vertex>, list: LengthList) -> Result<Self> {
        let r = Self::claim(kind, vertices, list);
        let report = verify(&r);
        if report.ok {
            Ok(r)
        } else {
            Err(Error::Verification(report.summary()))
        }
    }

    /// Measures `vertices` and wraps them, checking the permutation and
    /// first-vertex invariants.
    pub fn from_path(kind: Kind, vertices: Vec<Vertex>) -> Result<Self> {
        let list = measure(&vertices, kind)?;
        if vertices[0] != 0 {
            return Err(Error::invalid(format!(
                "realizations start at vertex 0, found {}",
                vertices[0]
            )));
        }
        Ok(Self {
            kind,
            vertices,
            list,
        })
    }

    /// An unchecked claim, for verification of untrusted input.
    pub fn claim(kind: Kind, vertices: Vec<Vertex>, list: LengthList) -> Self {
        Self {
            kind,
            vertices,
            list,
        }
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn into_vertices(self) -> Vec<Vertex> {
        self.vertices
    }

    pub fn list(&self) -> &LengthList {
        &self.list
    }

    pub fn order(&self) -> u32 {
        self.vertices.len() as u32
    }

    /// The same path read as the other kind, re-measured.
    pub(crate) fn with_kind(&self, kind: Kind) -> Result<Self> {
        Self::from_path(kind, self.vertices.clone())
    }
}

/// A length whose measured multiplicity differs from the claimed one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatch {
    pub length: u32,
    pub expected: u32,
    pub found: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub ok: bool,
    pub measured: LengthList,
    pub mismatches: Vec<Mismatch>,
    pub violation: Option<String>,
}

impl VerificationReport {
    pub fn summary(&self) -> String {
        if self.ok {
            return "ok".to_string();
        }
        let mut parts = Vec::new();
        if let Some(v) = &self.violation {
            parts.push(v.clone());
        }
        for m in &self.mismatches {
            parts.push(format!(
                "length {}: expected {} found {}",
                m.length, m.expected, m.found
            ));
        }
        parts.join("; ")
    }
}

/// Checks a claimed realization. Failures are reported, never raised.
pub fn verify(r: &Realization) -> VerificationReport {
    let path = &r.vertices;
    let mut violation = None;
    if path.len() as u32 != r.list.order() {
        violation = Some(format!(
            "wrong size: path has {} vertices but the list needs v={}",
            path.len(),
            r.list.order()
        ));
    }
    let perm = check_permutation(path);
    if violation.is_none() {
        if let Err(Error::InvalidArgument(msg)) = &perm {
            violation = Some(msg.clone());
        }
    }
    if violation.is_none() && path.first() != Some(&0) {
        violation = Some(format!(
            "wrong start: first vertex is {:?}, expected 0",
            path.first()
        ));
    }
    if violation.is_none() && r.kind == Kind::Cyclic {
        let half = r.list.order() / 2;
        if let Some(m) = r.list.max_length().filter(|&m| m > half) {
            violation = Some(format!(
                "length {m} exceeds floor(v/2)={half}, not a cyclic list"
            ));
        }
    }

    let measured = if perm.is_ok() && path.len() >= 2 {
        measure_unchecked(path, r.kind)
    } else {
        LengthList::new()
    };

    let mut mismatches = Vec::new();
    let mut lengths: Vec<u32> = r.list.iter().map(|(l, _)| l).collect();
    lengths.extend(measured.iter().map(|(l, _)| l));
    lengths.sort_unstable();
    lengths.dedup();
    if perm.is_ok() {
        for length in lengths {
            let expected = r.list.count(length);
            let found = measured.count(length);
            if expected != found {
                mismatches.push(Mismatch {
                    length,
                    expected,
                    found,
                });
            }
        }
    }

    VerificationReport {
        ok: violation.is_none() && mismatches.is_empty(),
        measured,
        mismatches,
        violation,
    }
}

/// Which of the two edge families witnesses extendability.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Branch {
    /// `e1 = [v-t, v-t+2]` paired with `e1 + 1`.
    E1,
    /// `e2 = [v-t, v-t+1]` paired with `e2 + 2`.
    E2,
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Branch::E1 => "e1",
            Branch::E2 => "e2",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Extendability {
    pub w: u32,
    pub branch: Branch,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SpecialFlags {
    /// `|L|` and `|L|-1` are adjacent.
    pub type1: bool,
    /// The endpoints are `0` and `1`.
    pub type2: bool,
    /// Largest `w` for which the path is `t^{4w}`-extendable, if any.
    pub extendable: Option<Extendability>,
}

impl SpecialFlags {
    pub fn extendable_w(&self) -> Option<u32> {
        self.extendable.map(|e| e.w)
    }
}

/// Positions of each vertex in a path; edge membership is a position test.
pub(crate) struct EdgeIndex {
    pos: Vec<usize>,
}

impl EdgeIndex {
    pub(crate) fn new(path: &[Vertex]) -> Self {
        let size = path.iter().max().map_or(0, |&m| m as usize + 1);
        let mut pos = vec![usize::MAX; size];
        for (i, &x) in path.iter().enumerate() {
            pos[x as usize] = i;
        }
        Self { pos }
    }

    pub(crate) fn position(&self, x: Vertex) -> Option<usize> {
        self.pos.get(x as usize).copied().filter(|&p| p != usize::MAX)
    }

    pub(crate) fn has_edge(&self, x: i64, y: i64) -> bool {
        if x < 0 || y < 0 {
            return false;
        }
        match (self.position(x as Vertex), self.position(y as Vertex)) {
            (Some(p), Some(q)) => p.abs_diff(q) == 1,
            _ => false,
        }
    }
}

/// Extendability degree per branch: entry `i` is the largest `w` for which
/// branch `i` holds, or `None` if it fails already at `x = 0`.
pub(crate) fn extendability_by_branch(path: &[Vertex], t: u32) -> [Option<u32>; 2] {
    let v = path.len() as i64;
    let base = v - t as i64;
    if base < 0 {
        return [None, None];
    }
    let idx = EdgeIndex::new(path);
    let degree = |pairs: &dyn Fn(i64) -> [(i64, i64); 2]| -> Option<u32> {
        let mut w: Option<u32> = None;
        let mut x = 0i64;
        loop {
            let ok = pairs(base + 4 * x)
                .iter()
                .all(|&(p, q)| q < v && idx.has_edge(p, q));
            if !ok {
                return w;
            }
            w = Some(x as u32);
            x += 1;
        }
    };
    let e1 = degree(&|s| [(s, s + 2), (s + 1, s + 3)]);
    let e2 = degree(&|s| [(s, s + 1), (s + 2, s + 3)]);
    [e1, e2]
}

/// Branch usable at each block `x = 0, 1, ...` until neither is, `e1`
/// first. Each by-4 step only touches its own block, so the branch may
/// change from one block to the next.
pub(crate) fn block_branches(path: &[Vertex], t: u32) -> Vec<Branch> {
    let v = path.len() as i64;
    let base = v - t as i64;
    let mut out = Vec::new();
    if base < 0 {
        return out;
    }
    let idx = EdgeIndex::new(path);
    let has = |p: i64, q: i64| q < v && idx.has_edge(p, q);
    loop {
        let s = base + 4 * out.len() as i64;
        if has(s, s + 2) && has(s + 1, s + 3) {
            out.push(Branch::E1);
        } else if has(s, s + 1) && has(s + 2, s + 3) {
            out.push(Branch::E2);
        } else {
            return out;
        }
    }
}

/// Largest `w` such that every block `x <= w` has some usable branch.
pub(crate) fn mixed_extendable_w(path: &[Vertex], t: u32) -> Option<u32> {
    (block_branches(path, t).len() as u32).checked_sub(1)
}

/// Type-1/type-2 specialness and `t^{4w}`-extendability of a linear
/// realization. When both branches hold, the larger `w` wins and `e1` wins
/// ties.
pub fn special_flags(r: &Realization, t: u32) -> Result<SpecialFlags> {
    if r.kind != Kind::Linear {
        return Err(Error::invalid("special flags are defined for linear realizations only"));
    }
    if t < 4 || t % 2 != 0 {
        return Err(Error::invalid(format!("t must be even and at least 4, got {t}")));
    }
    Ok(path_flags(&r.vertices, t))
}

pub(crate) fn path_flags(path: &[Vertex], t: u32) -> SpecialFlags {
    let n = path.len();
    let size = n as i64 - 1;
    let idx = EdgeIndex::new(path);
    let type1 = size >= 1 && idx.has_edge(size, size - 1);
    let type2 = n >= 2 && {
        let (a, b) = (path[0], path[n - 1]);
        (a == 0 && b == 1) || (a == 1 && b == 0)
    };
    let [e1, e2] = extendability_by_branch(path, t);
    let extendable = match (e1, e2) {
        (Some(a), Some(b)) if b > a => Some(Extendability { w: b, branch: Branch::E2 }),
        (Some(a), _) => Some(Extendability { w: a, branch: Branch::E1 }),
        (None, Some(b)) => Some(Extendability { w: b, branch: Branch::E2 }),
        (None, None) => None,
    };
    SpecialFlags {
        type1,
        type2,
        extendable,
    }
}

/// Parses a path literal: `[0, 6, 5]` or bare `0,6,5`.
pub fn parse_path(text: &str) -> Result<Vec<Vertex>> {
    let body = text.trim();
    let body = body
        .strip_prefix('[')
        .and_then(|b| b.strip_suffix(']'))
        .unwrap_or(body);
    let mut out = Vec::new();
    let mut offset = 0;
    for item in body.split(',') {
        let trimmed = item.trim();
        if trimmed.is_empty() {
            return Err(Error::parse(offset, "empty path entry"));
        }
        let x = trimmed
            .parse::<Vertex>()
            .map_err(|_| Error::parse(offset, format!("expected a vertex, found {trimmed:?}")))?;
        out.push(x);
        offset += item.len() + 1;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn list(s: &str) -> LengthList {
        s.parse().unwrap()
    }

    #[test]
    fn cyclic_length_examples() {
        assert_eq!(cyclic_length(0, 6, 10).unwrap(), 4);
        assert_eq!(cyclic_length(1, 9, 10).unwrap(), 2);
        assert_eq!(cyclic_length(3, 8, 16).unwrap(), 5);
        assert!(cyclic_length(2, 2, 10).is_err());
        assert!(cyclic_length(0, 10, 10).is_err());
    }

    #[test]
    fn measure_examples() {
        assert_eq!(
            measure(&[0, 8, 7, 6, 4, 2, 10, 9, 1, 3, 5], Kind::Linear).unwrap(),
            list("1^3,2^4,8^3")
        );
        assert_eq!(
            measure(&[0, 6, 5, 1, 9, 7, 3, 2, 8, 4], Kind::Cyclic).unwrap(),
            list("1^2,2^2,4^5")
        );
        assert_eq!(measure(&[0, 1, 2, 3], Kind::Linear).unwrap(), list("1^3"));
    }

    #[test]
    fn measure_names_the_offending_vertex() {
        let err = measure(&[0, 1, 1, 2], Kind::Linear).unwrap_err();
        assert!(err.to_string().contains("vertex 1 repeated"), "{err}");
        let err = measure(&[0, 4, 1], Kind::Linear).unwrap_err();
        assert!(err.to_string().contains("vertex 4"), "{err}");
    }

    #[test]
    fn verify_reports_instead_of_failing() {
        let ok = Realization::claim(
            Kind::Cyclic,
            vec![0, 6, 5, 1, 9, 7, 3, 2, 8, 4],
            list("1^2,2^2,4^5"),
        );
        assert!(verify(&ok).ok);

        let bad = Realization::claim(Kind::Linear, vec![0, 2, 1], list("1^2"));
        let report = verify(&bad);
        assert!(!report.ok);
        assert_eq!(
            report.mismatches,
            vec![
                Mismatch { length: 1, expected: 2, found: 1 },
                Mismatch { length: 2, expected: 0, found: 1 },
            ]
        );

        let dup = Realization::claim(Kind::Linear, vec![0, 1, 1, 2], list("1^3"));
        let report = verify(&dup);
        assert!(!report.ok);
        assert!(report.violation.unwrap().contains("not a permutation"));
    }

    #[test]
    fn verify_flags_wrong_start_and_size() {
        let r = Realization::claim(Kind::Linear, vec![1, 0, 2], list("1,2"));
        assert!(verify(&r).violation.unwrap().contains("wrong start"));
        let r = Realization::claim(Kind::Linear, vec![0, 1, 2], list("1^3"));
        assert!(verify(&r).violation.unwrap().contains("wrong size"));
    }

    #[test]
    fn special_flag_examples() {
        let r = Realization::from_path(
            Kind::Linear,
            vec![0, 2, 4, 6, 8, 10, 12, 14, 16, 17, 1, 3, 5, 7, 9, 11, 13, 15],
        )
        .unwrap();
        assert_eq!(r.list(), &list("1,2^15,16"));
        let f = special_flags(&r, 16).unwrap();
        assert!(f.type1);
        assert!(!f.type2);
        assert!(f.extendable_w().unwrap() >= 2);

        let r = Realization::from_path(Kind::Linear, vec![0, 8, 6, 4, 2, 3, 5, 7, 9, 1]).unwrap();
        assert_eq!(r.list(), &list("1,2^6,8^2"));
        assert!(special_flags(&r, 8).unwrap().type2);

        let r = Realization::from_path(Kind::Linear, vec![0, 1, 2, 3]).unwrap();
        let f = special_flags(&r, 4).unwrap();
        assert!(f.type1 && !f.type2);
    }

    #[test]
    fn extendability_counts_consecutive_blocks() {
        // [0 +2> 14, 15, 1 +2> 13] for t = 14: blocks at 2, 6, 10.
        let mut p: Vec<u32> = (0..=14).step_by(2).collect();
        p.push(15);
        p.extend((1..=13).step_by(2));
        let r = Realization::from_path(Kind::Linear, p).unwrap();
        let f = special_flags(&r, 14).unwrap();
        assert_eq!(f.extendable, Some(Extendability { w: 2, branch: Branch::E1 }));
    }

    #[test]
    fn special_flags_rejects_cyclic() {
        let r = Realization::from_path(Kind::Cyclic, vec![0, 1, 2, 3]).unwrap();
        assert!(special_flags(&r, 4).is_err());
    }

    #[test]
    fn path_literals() {
        assert_eq!(parse_path("[0, 6,5]").unwrap(), vec![0, 6, 5]);
        assert_eq!(parse_path("0,2,1").unwrap(), vec![0, 2, 1]);
        assert!(parse_path("0,,1").is_err());
        assert!(parse_path("0,a").is_err());
    }
}
