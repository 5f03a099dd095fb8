//! Growth operations on special linear realizations.
//!
//! Each transform rebuilds the vertex sequence, then re-verifies it against
//! the expected list before returning, so a wrong surgery surfaces as
//! [`Error::Verification`] rather than as a bad path.

use crate::error::{Error, Result};
use crate::list::LengthList;
use crate::realization::{
    block_branches, path_flags, Branch, EdgeIndex, Kind, Realization, Vertex,
};

fn require_linear(r: &Realization, op: &str) -> Result<()> {
    if r.kind() != Kind::Linear {
        return Err(Error::precondition(format!("{op} needs a linear realization")));
    }
    Ok(())
}

fn require_even_t(t: u32) -> Result<()> {
    if t < 4 || t % 2 != 0 {
        return Err(Error::invalid(format!("t must be even and at least 4, got {t}")));
    }
    Ok(())
}

fn finish(kind: Kind, path: Vec<Vertex>, list: LengthList) -> Result<Realization> {
    Realization::new(kind, path, list)
}

/// Position `i` such that `{path[i], path[i+1]} = {x, y}`, and whether the
/// pair occurs in the order `x, y`.
fn find_edge(path: &[Vertex], x: Vertex, y: Vertex) -> Option<(usize, bool)> {
    let idx = EdgeIndex::new(path);
    let (px, py) = (idx.position(x)?, idx.position(y)?);
    if px + 1 == py {
        Some((px, true))
    } else if py + 1 == px {
        Some((py, false))
    } else {
        None
    }
}

/// Replaces the edge `{x, y}` with the subpath `x, inner..., y`, respecting
/// the orientation in which the edge occurs.
fn splice(path: &mut Vec<Vertex>, x: Vertex, y: Vertex, inner: &[Vertex]) -> Result<()> {
    let (i, forward) = find_edge(path, x, y)
        .ok_or_else(|| Error::precondition(format!("edge [{x},{y}] is not in the path")))?;
    if forward {
        path.splice(i + 1..i + 1, inner.iter().copied());
    } else {
        path.splice(i + 1..i + 1, inner.iter().rev().copied());
    }
    Ok(())
}

fn require_type1(path: &[Vertex], op: &str) -> Result<()> {
    let n = path.len() as Vertex;
    if n < 2 || find_edge(path, n - 1, n - 2).is_none() {
        return Err(Error::precondition(format!(
            "{op} needs a special realization of type 1: {} and {} are not adjacent",
            n.saturating_sub(1),
            n.saturating_sub(2)
        )));
    }
    Ok(())
}

fn require_type2(path: &[Vertex], op: &str) -> Result<()> {
    if path.len() < 2 || path[0] != 0 || path[path.len() - 1] != 1 {
        return Err(Error::precondition(format!(
            "{op} needs a special realization of type 2 (endpoints 0 and 1)"
        )));
    }
    Ok(())
}

/// Adds `2^b` by inserting `v` between the adjacent pair `v-1, v-2`, `b`
/// times. The result is again special of type 1.
pub fn extend_type1_twos(r: &Realization, b: u32) -> Result<Realization> {
    require_linear(r, "extend_type1_twos")?;
    if b == 0 {
        return Err(Error::invalid("b must be positive"));
    }
    let mut path = r.vertices().to_vec();
    require_type1(&path, "extend_type1_twos")?;
    for _ in 0..b {
        let v = path.len() as Vertex;
        splice(&mut path, v - 1, v - 2, &[v])?;
    }
    let mut list = r.list().clone();
    list.add(2, b);
    finish(Kind::Linear, path, list)
}

/// Adds `2^b` (`b >= 2`) to a type-2 realization, keeping type 2.
pub fn extend_type2_twos(r: &Realization, b: u32) -> Result<Realization> {
    require_linear(r, "extend_type2_twos")?;
    if b < 2 {
        return Err(Error::precondition(format!("extend_type2_twos needs b >= 2, got {b}")));
    }
    let mut path = r.vertices().to_vec();
    require_type2(&path, "extend_type2_twos")?;
    let (evens, odd) = if b % 2 == 0 { (b / 2, false) } else { ((b - 3) / 2, true) };
    for _ in 0..evens {
        let mut next = Vec::with_capacity(path.len() + 2);
        next.push(0);
        next.extend(path.iter().map(|&x| x + 2));
        next.push(1);
        path = next;
    }
    if odd {
        let mut next = Vec::with_capacity(path.len() + 3);
        next.push(1);
        next.extend(path.iter().map(|&x| x + 3));
        next.extend([2, 0]);
        next.reverse();
        path = next;
    }
    let mut list = r.list().clone();
    list.add(2, b);
    finish(Kind::Linear, path, list)
}

/// Replaces the edge `[v1-2, v1-1]` of `r1` with the translate of `r2` by
/// `v1-2`. That edge has length 1 and is consumed, so the result realizes
/// `(L1 - {1}) ∪ L2`.
pub fn join_type1_type2(r1: &Realization, r2: &Realization) -> Result<Realization> {
    require_linear(r1, "join_type1_type2")?;
    require_linear(r2, "join_type1_type2")?;
    let p1 = r1.vertices();
    let p2 = r2.vertices();
    require_type1(p1, "join_type1_type2 (first operand)")?;
    require_type2(p2, "join_type1_type2 (second operand)")?;
    let v1 = p1.len() as Vertex;
    let shift = v1 - 2;
    let mut path = p1.to_vec();
    let inner: Vec<Vertex> = p2[1..p2.len() - 1].iter().map(|&x| x + shift).collect();
    splice(&mut path, v1 - 2, v1 - 1, &inner)?;
    let mut list = r1.list().clone();
    list.remove(1, 1)?;
    let list = list.union(r2.list());
    finish(Kind::Linear, path, list)
}

/// `[0, 1, ..., A, x_1 + A, ...]`: adds `1^A` in front.
pub fn prepend_ones(r: &Realization, a: u32) -> Result<Realization> {
    require_linear(r, "prepend_ones")?;
    if a == 0 {
        return Ok(r.clone());
    }
    let mut path: Vec<Vertex> = (0..a).collect();
    path.extend(r.vertices().iter().map(|&x| x + a));
    let mut list = r.list().clone();
    list.add(1, a);
    finish(Kind::Linear, path, list)
}

fn missing_block(path: &[Vertex], t: u32, reps: u32) -> Error {
    let x = block_branches(path, t).len() as i64;
    let s = path.len() as i64 - t as i64 + 4 * x;
    Error::precondition(format!(
        "not t^{}-extendable for t={t}: block at {s} has neither [{s},{}],[{},{}] nor [{s},{}],[{},{}]",
        4 * reps,
        s + 2,
        s + 1,
        s + 3,
        s + 1,
        s + 2,
        s + 3
    ))
}

fn by4_step(path: &mut Vec<Vertex>, t: u32, branch: Branch) -> Result<()> {
    let v = path.len() as Vertex;
    let s = v - t;
    match branch {
        Branch::E1 => {
            splice(path, s, s + 2, &[v, v + 2])?;
            splice(path, s + 1, s + 3, &[v + 1, v + 3])?;
        }
        Branch::E2 => {
            splice(path, s, s + 1, &[v, v + 1])?;
            splice(path, s + 2, s + 3, &[v + 2, v + 3])?;
        }
    }
    Ok(())
}

fn by4_path(path: &mut Vec<Vertex>, t: u32, reps: u32) -> Result<()> {
    let branches = block_branches(path, t);
    if branches.len() < reps as usize {
        return Err(missing_block(path, t, reps));
    }
    for &branch in &branches[..reps as usize] {
        by4_step(path, t, branch)?;
    }
    Ok(())
}

/// Adds `t^{4 reps}` by the four-vertex surgery on consecutive extendable
/// blocks. Needs `t^{4w}`-extendability with `w >= reps - 1`.
pub fn grow_t_by4(r: &Realization, t: u32, reps: u32) -> Result<Realization> {
    require_linear(r, "grow_t_by4")?;
    require_even_t(t)?;
    if reps == 0 {
        return Err(Error::invalid("reps must be positive"));
    }
    let mut path = r.vertices().to_vec();
    by4_path(&mut path, t, reps)?;
    let mut list = r.list().clone();
    list.add(t, 4 * reps);
    finish(Kind::Linear, path, list)
}

fn block_path(path: &mut Vec<Vertex>, t: u32) -> Result<()> {
    let u = t / 4;
    if t % 4 == 2 {
        require_type1(path, "grow_t_block with t = 2 (mod 4)")?;
    }
    let v = path.len() as Vertex;
    by4_path(path, t, u)?;
    if t % 4 == 2 {
        let top = path.len() as Vertex;
        splice(path, v - 2, v - 1, &[top, top + 1])?;
    }
    Ok(())
}

/// Adds `t^{tk}`, keeping `t^{4w}`-extendability for `w = floor(t/4) - 1`
/// and, when `t = 2 (mod 4)`, type 1 (which is then required of the input).
pub fn grow_t_block(r: &Realization, t: u32, k: u32) -> Result<Realization> {
    require_linear(r, "grow_t_block")?;
    require_even_t(t)?;
    if k == 0 {
        return Err(Error::invalid("k must be positive"));
    }
    let mut path = r.vertices().to_vec();
    for _ in 0..k {
        block_path(&mut path, t)?;
    }
    let mut list = r.list().clone();
    list.add(t, t * k);
    finish(Kind::Linear, path, list)
}

/// Adds `2^{4y}` by replacing `[v-2, v-1]` with `[v-2, v, v+2, v+3, v+1, v-1]`,
/// `y` times. Needs type 1 and `t^{4w}`-extendability for
/// `w = floor(t/4) - 1`; both are kept.
pub fn grow_twos_by4(r: &Realization, t: u32, y: u32) -> Result<Realization> {
    require_linear(r, "grow_twos_by4")?;
    require_even_t(t)?;
    if y == 0 {
        return Err(Error::invalid("y must be positive"));
    }
    let mut path = r.vertices().to_vec();
    require_type1(&path, "grow_twos_by4")?;
    let u = t / 4;
    let branches = block_branches(&path, t);
    if branches.len() < u as usize {
        return Err(missing_block(&path, t, u));
    }
    // For t = 4u the top block ends at v-1; in the e2 pattern it owns the
    // edge [v-2, v-1] that the insertion below consumes.
    if t % 4 == 0 && branches[u as usize - 1] == Branch::E2 {
        let s = path.len() as Vertex - 4;
        return Err(Error::precondition(format!(
            "grow_twos_by4 needs [{s},{}],[{},{}] in the top block; [{},{}] is consumed",
            s + 2,
            s + 1,
            s + 3,
            s + 2,
            s + 3
        )));
    }
    for _ in 0..y {
        let v = path.len() as Vertex;
        splice(&mut path, v - 2, v - 1, &[v, v + 2, v + 3, v + 1])?;
    }
    let mut list = r.list().clone();
    list.add(2, 4 * y);
    finish(Kind::Linear, path, list)
}

/// Reads a linear realization as a cyclic one. Valid when no length
/// exceeds `floor(v/2)`, since then every length is its own cyclic
/// reduction.
pub fn promote_to_cyclic(r: &Realization) -> Result<Realization> {
    require_linear(r, "promote_to_cyclic")?;
    let half = r.order() / 2;
    if let Some(m) = r.list().max_length().filter(|&m| m > half) {
        return Err(Error::precondition(format!(
            "length {m} exceeds floor(v/2)={half}; promotion would change the list"
        )));
    }
    let c = r.with_kind(Kind::Cyclic)?;
    finish(Kind::Cyclic, c.vertices().to_vec(), r.list().clone())
}

/// Recomputed special flags of a linear path, for callers that track them
/// between transforms.
pub fn flags(r: &Realization, t: u32) -> crate::realization::SpecialFlags {
    path_flags(r.vertices(), t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::realization::special_flags;

    fn lin(p: Vec<Vertex>) -> Realization {
        Realization::from_path(Kind::Linear, p).unwrap()
    }

    fn list(s: &str) -> LengthList {
        s.parse().unwrap()
    }

    fn s12(t: u32) -> Realization {
        let mut p: Vec<Vertex> = (0..=t - 2).step_by(2).collect();
        p.extend((1..=t - 1).rev().step_by(2));
        lin(p)
    }

    #[test]
    fn type1_insertion_example() {
        let r = lin(vec![0, 2, 4, 6, 8, 10, 12, 14, 16, 17, 1, 3, 5, 7, 9, 11, 13, 15]);
        let out = extend_type1_twos(&r, 3).unwrap();
        assert_eq!(
            out.vertices(),
            &[0, 2, 4, 6, 8, 10, 12, 14, 16, 18, 20, 19, 17, 1, 3, 5, 7, 9, 11, 13, 15]
        );
        assert_eq!(out.list(), &list("1,2^18,16"));

        let out = extend_type1_twos(&lin(vec![0, 1]), 1).unwrap();
        assert_eq!(out.vertices(), &[0, 2, 1]);
    }

    #[test]
    fn type1_insertion_many_times() {
        let out = extend_type1_twos(&s12(8), 5).unwrap();
        assert_eq!(out.list(), &list("1,2^11"));
        assert!(special_flags(&out, 8).unwrap().type1);
    }

    #[test]
    fn type2_wrap_examples() {
        let r = lin(vec![0, 8, 6, 4, 2, 3, 5, 7, 9, 1]);
        assert_eq!(
            extend_type2_twos(&r, 2).unwrap().vertices(),
            &[0, 2, 10, 8, 6, 4, 5, 7, 9, 11, 3, 1]
        );
        assert_eq!(
            extend_type2_twos(&r, 3).unwrap().vertices(),
            &[0, 2, 4, 12, 10, 8, 6, 5, 7, 9, 11, 3, 1]
        );
        assert!(matches!(extend_type2_twos(&r, 1), Err(Error::Precondition(_))));
        let out = extend_type2_twos(&r, 7).unwrap();
        assert_eq!(out.list(), &list("1,2^13,8^2"));
        assert!(special_flags(&out, 8).unwrap().type2);
    }

    #[test]
    fn type2_wrap_requires_type2() {
        let r = lin(vec![0, 1, 2, 3]);
        assert!(matches!(extend_type2_twos(&r, 2), Err(Error::Precondition(_))));
    }

    #[test]
    fn join_consumes_the_linking_one() {
        let out = join_type1_type2(&s12(8), &s12(8)).unwrap();
        assert_eq!(out.list(), &list("1,2^12"));
        assert_eq!(out.order(), 14);

        let r1 = lin(vec![0, 2, 4, 6, 8, 10, 12, 14, 16, 17, 1, 3, 5, 7, 9, 11, 13, 15]);
        let r2 = lin(vec![0, 8, 6, 4, 2, 3, 5, 7, 9, 1]);
        let out = join_type1_type2(&r1, &r2).unwrap();
        assert_eq!(out.list(), &list("1,2^21,8^2,16"));
    }

    #[test]
    fn join_checks_flags() {
        let not_t2 = lin(vec![0, 1, 2]);
        assert!(join_type1_type2(&s12(8), &not_t2).is_err());
        let not_t1 = lin(vec![0, 2, 1, 3]);
        assert!(join_type1_type2(&not_t1, &s12(8)).is_err());
    }

    #[test]
    fn prepend_ones_examples() {
        let r = lin(vec![0, 8, 7, 6, 4, 2, 10, 9, 1, 3, 5]);
        let out = prepend_ones(&r, 2).unwrap();
        assert_eq!(out.vertices(), &[0, 1, 2, 10, 9, 8, 6, 4, 12, 11, 3, 5, 7]);
        assert_eq!(out.list(), &list("1^5,2^4,8^3"));
        assert_eq!(prepend_ones(&r, 0).unwrap(), r);
        assert_eq!(prepend_ones(&lin(vec![0, 1]), 3).unwrap().vertices(), &[0, 1, 2, 3, 4]);
    }

    fn r14() -> Realization {
        let mut p: Vec<Vertex> = (0..=14).step_by(2).collect();
        p.push(15);
        p.extend((1..=13).step_by(2));
        lin(p)
    }

    #[test]
    fn by4_chain_example() {
        let r1 = grow_t_by4(&r14(), 14, 1).unwrap();
        assert_eq!(
            r1.vertices(),
            &[0, 2, 16, 18, 4, 6, 8, 10, 12, 14, 15, 1, 3, 17, 19, 5, 7, 9, 11, 13]
        );
        assert_eq!(r1.list(), &list("1,2^13,14^5"));
        let r2 = grow_t_by4(&r14(), 14, 2).unwrap();
        assert_eq!(
            r2.vertices(),
            &[0, 2, 16, 18, 4, 6, 20, 22, 8, 10, 12, 14, 15, 1, 3, 17, 19, 5, 7, 21, 23, 9, 11, 13]
        );
        let r3 = grow_t_by4(&r14(), 14, 3).unwrap();
        assert_eq!(
            r3.vertices(),
            &[
                0, 2, 16, 18, 4, 6, 20, 22, 8, 10, 24, 26, 12, 14, 15, 1, 3, 17, 19, 5, 7, 21, 23,
                9, 11, 25, 27, 13
            ]
        );
        assert_eq!(r3.list(), &list("1,2^13,14^13"));
        assert!(matches!(grow_t_by4(&r14(), 14, 4), Err(Error::Precondition(_))));
    }

    #[test]
    fn twos_by4_rejects_a_top_block_owning_the_type1_edge() {
        // t = 12: the block at 12 is [12,13],[14,15], and [14,15] is the
        // type-1 edge the insertion would remove.
        let r = lin(vec![0, 1, 2, 3, 15, 14, 12, 13, 11, 9, 7, 5, 4, 6, 8, 10]);
        assert!(matches!(grow_twos_by4(&r, 12, 1), Err(Error::Precondition(_))));
    }

    #[test]
    fn block_growth() {
        let out = grow_t_block(&s12(8), 8, 1).unwrap();
        assert_eq!(out.list(), &list("1,2^6,8^8"));
        assert!(special_flags(&out, 8).unwrap().extendable_w().unwrap() >= 1);

        let out = grow_t_block(&s12(6), 6, 2).unwrap();
        assert_eq!(out.list(), &list("1,2^4,6^12"));
        let f = special_flags(&out, 6).unwrap();
        assert!(f.type1 && f.extendable_w().is_some());

        let no_t1 = lin(vec![0, 6, 4, 2, 3, 1, 5]);
        assert!(!special_flags(&no_t1, 6).unwrap().type1);
        assert!(matches!(grow_t_block(&no_t1, 6, 1), Err(Error::Precondition(_))));
    }

    #[test]
    fn twos_by4() {
        let r = s12(8);
        let once = grow_twos_by4(&r, 8, 1).unwrap();
        assert_eq!(once.list(), &list("1,2^10"));
        let f = special_flags(&once, 8).unwrap();
        assert!(f.type1 && f.extendable_w().is_some());
        let twice = grow_twos_by4(&once, 8, 1).unwrap();
        assert_eq!(twice.list(), grow_twos_by4(&r, 8, 2).unwrap().list());
    }

    #[test]
    fn promotion() {
        let r = lin(vec![0, 8, 7, 6, 4, 2, 10, 9, 1, 3, 5]);
        assert!(matches!(promote_to_cyclic(&r), Err(Error::Precondition(_))));
        let r = lin(vec![0, 1, 3, 2, 4, 6, 5, 7]);
        let c = promote_to_cyclic(&r).unwrap();
        assert_eq!(c.kind(), Kind::Cyclic);
        assert_eq!(c.list(), r.list());
    }
}
