//! Dispatcher: choose a family instance, then grow it to the requested
//! multiplicities with the transforms.

use serde::Serialize;

use super::boundary::{seed_id, seed_y};
use super::{catalog, Family, Params, Role};
use crate::conditions::{condition_b, Witness};
use crate::error::{Error, Result};
use crate::list::LengthList;
use crate::oracle::{self, Mode, SearchOptions};
use crate::realization::{Kind, Realization};
use crate::transforms;

/// A verified realization with the steps that produced it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Construction {
    pub realization: Realization,
    pub provenance: Vec<String>,
}

impl Construction {
    fn from_family(f: &dyn Family, p: &Params) -> Result<Self> {
        Ok(Self {
            realization: f.instantiate(p)?,
            provenance: vec![format!("family {} at {p}", f.id())],
        })
    }

    fn then(mut self, step: String, r: Realization) -> Self {
        self.provenance.push(step);
        self.realization = r;
        self
    }

    /// The same vertices read as the other kind, when that is valid.
    pub fn as_kind(&self, kind: Kind) -> Result<Construction> {
        let r = &self.realization;
        if r.kind() == kind {
            return Ok(self.clone());
        }
        let converted = Realization::new(kind, r.vertices().to_vec(), r.list().clone())
            .map_err(|_| Error::Unsupported(format!("no {kind} reading of this {} realization", r.kind())))?;
        let mut out = self.clone();
        out.provenance.push(format!("read as {kind}"));
        out.realization = converted;
        Ok(out)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum SmallT {
    Realized(Construction),
    Infeasible(Witness),
}

fn check_t(t: u32) -> Result<()> {
    if t < 4 || t % 2 != 0 {
        return Err(Error::invalid(format!("t must be even and at least 4, got {t}")));
    }
    Ok(())
}

#[derive(Debug, Clone, Copy)]
enum Twos {
    By4(u32),
    Type1(u32),
    Type2(u32),
}

fn twos_plans(db: u32) -> Vec<Vec<Twos>> {
    if db == 0 {
        return vec![vec![]];
    }
    let mut plans = Vec::new();
    if db % 4 == 0 {
        plans.push(vec![Twos::By4(db / 4)]);
    }
    plans.push(vec![Twos::Type1(db)]);
    if db >= 2 {
        plans.push(vec![Twos::Type2(db)]);
    }
    if db >= 4 && db % 4 != 0 {
        plans.push(vec![Twos::By4(db / 4), Twos::Type1(db % 4)]);
        if db % 4 >= 2 {
            plans.push(vec![Twos::By4(db / 4), Twos::Type2(db % 4)]);
        }
    }
    plans
}

fn apply_twos(mut c: Construction, t: u32, ops: &[Twos]) -> Result<Construction> {
    for &op in ops {
        let r = &c.realization;
        c = match op {
            Twos::By4(y) => {
                let r = transforms::grow_twos_by4(r, t, y)?;
                c.then(format!("grow_twos_by4 y={y}"), r)
            }
            Twos::Type1(n) => {
                let r = transforms::extend_type1_twos(r, n)?;
                c.then(format!("extend_type1_twos b={n}"), r)
            }
            Twos::Type2(n) => {
                let r = transforms::extend_type2_twos(r, n)?;
                c.then(format!("extend_type2_twos b={n}"), r)
            }
        };
    }
    Ok(c)
}

fn apply_t(mut c: Construction, t: u32, blocks: u32, reps: u32) -> Result<Construction> {
    if blocks > 0 {
        let r = transforms::grow_t_block(&c.realization, t, blocks)?;
        c = c.then(format!("grow_t_block k={blocks}"), r);
    }
    if reps > 0 {
        let r = transforms::grow_t_by4(&c.realization, t, reps)?;
        c = c.then(format!("grow_t_by4 reps={reps}"), r);
    }
    Ok(c)
}

/// Adds `2^db` and `t^dc` to a linear construction, trying each way of
/// adding the twos both before and after the `t` growth.
fn grow(base: Construction, t: u32, db: u32, dc: u32) -> Result<Construction> {
    let (blocks, rest) = (dc / t, dc % t);
    if rest % 4 != 0 {
        return Err(Error::precondition(format!(
            "t^{dc} is not t^(tk) plus a multiple of t^4 for t={t}"
        )));
    }
    let reps = rest / 4;
    let mut last = None;
    for plan in twos_plans(db) {
        let first = apply_twos(base.clone(), t, &plan).and_then(|c| apply_t(c, t, blocks, reps));
        match first {
            Ok(c) => return Ok(c),
            Err(e) => last = Some(e),
        }
        if plan.is_empty() {
            continue;
        }
        let second = apply_t(base.clone(), t, blocks, reps).and_then(|c| apply_twos(c, t, &plan));
        match second {
            Ok(c) => return Ok(c),
            Err(e) => last = Some(e),
        }
    }
    Err(last.unwrap_or_else(|| Error::precondition("no growth plan")))
}

/// Tries every instance of the families with `role` that fits under
/// `(a, b, c)`. Cyclic families must match exactly.
fn from_role(role: Role, a: u32, b: u32, c: u32, t: u32) -> Result<Construction> {
    let v = a + b + c + 1;
    let mut last: Option<Error> = None;
    for f in catalog().with_role(role) {
        for p in f.instances(t, v) {
            let Ok((a0, b0, c0)) = f.counts(&p) else { continue };
            if a0 != a || b0 > b || c0 > c {
                continue;
            }
            if f.kind() == Kind::Cyclic && (b0, c0) != (b, c) {
                continue;
            }
            let attempt = Construction::from_family(f, &p).and_then(|base| {
                if (b0, c0) == (b, c) {
                    Ok(base)
                } else {
                    grow(base, t, b - b0, c - c0)
                }
            });
            match attempt {
                Ok(c) => return Ok(c),
                Err(e @ Error::Verification(_)) => return Err(e),
                Err(e) => last = Some(e),
            }
        }
    }
    Err(Error::Unsupported(format!(
        "no construction for {{1^{a},2^{b},{t}^{c}}}{}",
        last.map(|e| format!(" (last attempt: {e})")).unwrap_or_default()
    )))
}

/// `{1, 2^b, t^c}` for `b >= t - 2`: linear where a base family grows to it,
/// otherwise one of the cyclic families for `b = t - 2`.
pub fn realize_a1(b: u32, c: u32, t: u32) -> Result<Construction> {
    check_t(t)?;
    if c == 0 {
        return Err(Error::invalid("c must be positive"));
    }
    if b + 2 < t {
        return Err(Error::Unsupported(format!("b={b} < t-2 for t={t}")));
    }
    from_role(Role::Base, 1, b, c, t).or_else(|_| from_role(Role::Leftover, 1, b, c, t))
}

/// `{1^a, 2^b, t^c}` with `a >= 2` and `a + b = t - 1`.
pub fn realize_boundary(a: u32, b: u32, c: u32, t: u32) -> Result<Construction> {
    check_t(t)?;
    if a < 2 || b == 0 || a + b + 1 != t || c == 0 {
        return Err(Error::precondition(format!(
            "needs a >= 2, b >= 1, a + b = t - 1 and c >= 1; got a={a}, b={b}, c={c}, t={t}"
        )));
    }
    let p = Params::new().with('t', t as i64).with('y', seed_y(a));
    let mut last = None;
    for c0 in 0..=c.min(3) {
        if ((c - c0) % t) % 4 != 0 {
            continue;
        }
        let f = catalog().get(&seed_id(a, c0))?;
        let attempt = Construction::from_family(f, &p).and_then(|base| grow(base, t, 0, c - c0));
        match attempt {
            Ok(c) => return Ok(c),
            Err(e) => last = Some(e),
        }
    }
    Err(last.unwrap_or_else(|| Error::Unsupported("no seed residue fits".into())))
}

fn prepend(c: Construction, ones: u32) -> Result<Construction> {
    if ones == 0 {
        return Ok(c);
    }
    let r = transforms::prepend_ones(&c.realization, ones)?;
    Ok(c.then(format!("prepend_ones a={ones}"), r))
}

fn linear_search(list: &LengthList) -> Result<Construction> {
    let mut opts = SearchOptions::new(Kind::Linear, Mode::First);
    opts.start = Some(0);
    opts.max_nodes = Some(200_000_000);
    let report = oracle::search(list, &opts)?;
    match report.found() {
        Some(path) => Ok(Construction {
            realization: Realization::new(Kind::Linear, path.to_vec(), list.clone())?,
            provenance: vec![format!("oracle search (linear, start 0, {} nodes)", report.nodes)],
        }),
        None => Err(Error::Unsupported(format!("no linear realization of {list} starts at 0"))),
    }
}

/// Any `{1^a, 2^b, t^c}` with `a, b, c >= 1` and `a + b >= t - 1`. The
/// result is cyclic whenever every length is at most `floor(v/2)`.
pub fn realize(a: u32, b: u32, c: u32, t: u32) -> Result<Construction> {
    check_t(t)?;
    if a == 0 || b == 0 || c == 0 {
        return Err(Error::invalid("a, b and c must be positive"));
    }
    if a + b + 1 < t {
        return Err(Error::Unsupported(format!(
            "a + b = {} < t - 1 = {}",
            a + b,
            t - 1
        )));
    }
    let linear = if b + 2 < t {
        let a0 = t - 1 - b;
        realize_boundary(a0, b, c, t).and_then(|r| prepend(r, a - a0))
    } else {
        from_role(Role::Base, 1, b, c, t)
            .and_then(|r| prepend(r, a - 1))
            .or_else(|e| {
                if a >= 2 && b + 2 == t {
                    from_role(Role::Patch, 2, b, c, t).and_then(|r| prepend(r, a - 2))
                } else {
                    Err(e)
                }
            })
    };
    let built = match linear {
        Ok(c) => c,
        Err(Error::Verification(m)) => return Err(Error::Verification(m)),
        Err(_) if a == 1 => from_role(Role::Leftover, 1, b, c, t)
            .or_else(|_| linear_search(&LengthList::triple(a, b, c, t)))?,
        Err(e) => return Err(e),
    };
    if built.realization.kind() == Kind::Cyclic {
        return Ok(built);
    }
    match transforms::promote_to_cyclic(&built.realization) {
        Ok(r) => Ok(built.then("promote_to_cyclic".into(), r)),
        Err(_) => Ok(built),
    }
}

/// Complete answer for `t` in `{4, 6, 8}` on cyclic lists: either a cyclic
/// realization or the divisor that rules one out.
pub fn realize_small_t(a: u32, b: u32, c: u32, t: u32) -> Result<SmallT> {
    if ![4, 6, 8].contains(&t) {
        return Err(Error::invalid(format!("t must be 4, 6 or 8, got {t}")));
    }
    if a == 0 || b == 0 || c == 0 {
        return Err(Error::invalid("a, b and c must be positive"));
    }
    let list = LengthList::triple(a, b, c, t);
    let cb = condition_b(&list)?;
    if let Some(w) = cb.witness {
        return Ok(SmallT::Infeasible(w));
    }
    let built = if a + b + 1 >= t {
        realize(a, b, c, t)?
    } else {
        from_role(Role::Table, a, b, c, t)?
    };
    if built.realization.kind() != Kind::Cyclic {
        return Err(Error::Verification(format!(
            "expected a cyclic realization of {list}, built a linear one"
        )));
    }
    Ok(SmallT::Realized(built))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::realization::verify;

    #[test]
    fn twos_plan_shapes() {
        assert_eq!(twos_plans(0).len(), 1);
        assert_eq!(twos_plans(4).len(), 3);
        assert_eq!(twos_plans(7).len(), 4);
    }

    #[test]
    fn small_dispatches() {
        for (a, b, c, t) in [(1, 6, 2, 8), (1, 13, 5, 14), (1, 4, 7, 6), (3, 13, 5, 14), (2, 8, 13, 10)] {
            let built = realize(a, b, c, t).unwrap();
            assert!(verify(&built.realization).ok, "{a} {b} {c} {t}");
            assert_eq!(built.realization.list(), &LengthList::triple(a, b, c, t));
        }
    }

    #[test]
    fn below_the_boundary_is_unsupported() {
        assert!(matches!(realize(1, 1, 5, 8), Err(Error::Unsupported(_))));
    }
}
