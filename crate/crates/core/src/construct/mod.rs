//! Explicit realization families and the dispatcher built on them.
//!
//! Every family implements [`Family`] and is registered by id in the
//! [`Catalog`]. The dispatcher in [`planner`] picks a family instance and
//! grows it with [`crate::transforms`]; [`strategy`] exposes the available
//! construction routes behind a name so callers can choose at runtime.

mod boundary;
mod general;
pub mod planner;
pub mod strategy;
mod tables;
pub mod template;

use std::collections::HashMap;
use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::list::LengthList;
use crate::realization::{mixed_extendable_w, path_flags, Kind, Realization, Vertex};

pub use planner::{realize, realize_a1, realize_boundary, realize_small_t, Construction, SmallT};
pub use strategy::{strategies, strategy, Outcome, Request, Strategy};
pub use template::{Params, Poly, Template};

/// What a family is used for by the dispatcher.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Role {
    /// Linear `{1, 2^b, t^c}` bases grown by transforms.
    Base,
    /// Linear `{1^a, 2^b}` plus `t^c`, `c < 4`, with `a + b = t - 1`.
    Boundary,
    /// Linear `{1^2, 2^{t-2}, t^c}` bases for the case not covered with one 1.
    Patch,
    /// Cyclic `{1, 2^{t-2}, t^c}` for the same case, used as is.
    Leftover,
    /// Cyclic rows for `t` in `{4, 6, 8}` below `a + b = t - 1`.
    Table,
}

/// Flags a family promises in addition to realizing its list.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Declared {
    pub type1: bool,
    pub type2: bool,
    /// `Some(d)`: `t^{4w}`-extendable with `w = floor(t/4) - d`.
    pub ext_deficit: Option<u32>,
}

impl Declared {
    pub fn required_w(&self, t: u32) -> Option<u32> {
        self.ext_deficit.map(|d| (t / 4).saturating_sub(d))
    }
}

/// Inclusive range of one parameter as a function of `t`; `hi = None` is
/// unbounded.
#[derive(Clone, Copy)]
pub struct Range {
    pub lo: fn(i64) -> i64,
    pub hi: Option<fn(i64) -> i64>,
}

pub trait Family: Send + Sync {
    fn id(&self) -> &str;
    fn description(&self) -> &str;
    fn kind(&self) -> Kind;
    fn role(&self) -> Role;
    fn declared(&self) -> Declared;
    fn accepts_t(&self, t: u32) -> bool;
    /// Parameters other than `t`, with their ranges.
    fn ranges(&self) -> &[(char, Range)];
    /// `(a, b, c)` of the realized list `{1^a, 2^b, t^c}`.
    fn counts(&self, p: &Params) -> Result<(u32, u32, u32)>;
    /// Vertex sequence, unchecked.
    fn path(&self, p: &Params) -> Result<Vec<Vertex>>;
    /// Human-readable form of the construction.
    fn formula(&self) -> String;

    fn params(&self) -> Vec<char> {
        std::iter::once('t').chain(self.ranges().iter().map(|&(c, _)| c)).collect()
    }

    fn check(&self, p: &Params) -> Result<()> {
        let t = p.t()?;
        if !self.accepts_t(t) {
            return Err(Error::invalid(format!("{}: t={t} is outside the family", self.id())));
        }
        for &(name, r) in self.ranges() {
            let x = p.get(name)?;
            let (lo, hi) = ((r.lo)(t as i64), r.hi.map(|h| h(t as i64)));
            if x < lo || hi.is_some_and(|h| x > h) {
                let hi = hi.map_or("inf".to_string(), |h| h.to_string());
                return Err(Error::invalid(format!(
                    "{}: {name}={x} outside [{lo}, {hi}] for t={t}",
                    self.id()
                )));
            }
        }
        Ok(())
    }

    fn list(&self, p: &Params) -> Result<LengthList> {
        let (a, b, c) = self.counts(p)?;
        Ok(LengthList::triple(a, b, c, p.t()?))
    }

    fn instantiate(&self, p: &Params) -> Result<Realization> {
        self.check(p)?;
        let path = self.path(p)?;
        let r = Realization::new(self.kind(), path, self.list(p)?)
            .map_err(|e| Error::Verification(format!("{} at {p}: {e}", self.id())))?;
        check_declared(self, &r, p.t()?).map_err(|e| match e {
            Error::Verification(m) => Error::Verification(format!("{} at {p}: {m}", self.id())),
            other => other,
        })?;
        Ok(r)
    }

    /// In-range instances for one `t` with `v <= max_v`. Unbounded
    /// parameters stop once `v` exceeds `max_v`.
    fn instances(&self, t: u32, max_v: u32) -> Vec<Params> {
        let mut out = Vec::new();
        if self.accepts_t(t) {
            enumerate(self, self.ranges(), Params::new().with('t', t as i64), max_v, &mut out);
        }
        out
    }

    /// Instances for every accepted `t` in `4..=max_t`.
    fn grid(&self, max_t: u32, max_v: u32) -> Vec<Params> {
        (4..=max_t)
            .step_by(2)
            .flat_map(|t| self.instances(t, max_v))
            .collect()
    }
}

fn order_of<F: Family + ?Sized>(f: &F, p: &Params) -> Option<u32> {
    f.counts(p).ok().map(|(a, b, c)| a + b + c + 1)
}

fn enumerate<F: Family + ?Sized>(
    f: &F,
    rest: &[(char, Range)],
    p: Params,
    max_v: u32,
    out: &mut Vec<Params>,
) {
    let Some((&(name, r), tail)) = rest.split_first() else {
        if order_of(f, &p).is_some_and(|v| v <= max_v) {
            out.push(p);
        }
        return;
    };
    let t = p.get('t').unwrap_or(0);
    let lo = (r.lo)(t);
    let mut x = lo;
    loop {
        if r.hi.is_some_and(|h| x > h(t)) {
            break;
        }
        let q = p.clone().with(name, x);
        if r.hi.is_none() {
            // Probe with the remaining parameters at their minimum.
            let mut probe = q.clone();
            for &(n, rr) in tail {
                probe.set(n, (rr.lo)(t));
            }
            if order_of(f, &probe).map_or(true, |v| v > max_v) {
                break;
            }
        }
        enumerate(f, tail, q, max_v, out);
        x += 1;
    }
}

fn check_declared<F: Family + ?Sized>(f: &F, r: &Realization, t: u32) -> Result<()> {
    let d = f.declared();
    if r.kind() != Kind::Linear {
        return Ok(());
    }
    let flags = path_flags(r.vertices(), t);
    if d.type1 && !flags.type1 {
        return Err(Error::Verification("declared type 1 does not hold".into()));
    }
    if d.type2 && !flags.type2 {
        return Err(Error::Verification("declared type 2 does not hold".into()));
    }
    if let Some(w) = d.required_w(t) {
        match mixed_extendable_w(r.vertices(), t) {
            Some(have) if have >= w => {}
            have => {
                return Err(Error::Verification(format!(
                    "declared t^(4*{w})-extendability does not hold (have {have:?})"
                )))
            }
        }
    }
    Ok(())
}

/// Immutable registry of every family, indexed by id.
pub struct Catalog {
    families: Vec<Box<dyn Family>>,
    index: HashMap<String, usize>,
}

impl Catalog {
    fn build() -> Self {
        let mut families: Vec<Box<dyn Family>> = Vec::new();
        families.extend(general::families());
        families.extend(boundary::families());
        families.extend(tables::families());
        let mut index = HashMap::new();
        for (i, f) in families.iter().enumerate() {
            let prev = index.insert(f.id().to_string(), i);
            assert!(prev.is_none(), "duplicate family id {}", f.id());
        }
        Self { families, index }
    }

    pub fn global() -> &'static Catalog {
        static CATALOG: OnceLock<Catalog> = OnceLock::new();
        CATALOG.get_or_init(Catalog::build)
    }

    pub fn get(&self, id: &str) -> Result<&dyn Family> {
        self.index
            .get(id)
            .map(|&i| self.families[i].as_ref())
            .ok_or_else(|| Error::invalid(format!("unknown family {id:?}")))
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn Family> {
        self.families.iter().map(|f| f.as_ref())
    }

    pub fn with_role(&self, role: Role) -> impl Iterator<Item = &dyn Family> {
        self.iter().filter(move |f| f.role() == role)
    }

    pub fn len(&self) -> usize {
        self.families.len()
    }

    pub fn is_empty(&self) -> bool {
        self.families.is_empty()
    }
}

pub fn catalog() -> &'static Catalog {
    Catalog::global()
}

/// A printed row that fails verification as printed, with the single-token
/// correction the catalog uses instead.
#[derive(Debug, Clone, Serialize)]
pub struct Erratum {
    pub id: String,
    pub printed: &'static str,
    pub from: &'static str,
    pub to: &'static str,
}

pub fn errata() -> Vec<Erratum> {
    tables::errata()
}

/// One catalog entry as emitted by the index document.
#[derive(Debug, Clone, Serialize)]
pub struct IndexEntry {
    pub id: String,
    pub kind: Kind,
    pub role: Role,
    pub params: String,
    pub description: String,
    pub formula: String,
    pub declared: Declared,
}

pub fn index() -> Vec<IndexEntry> {
    catalog()
        .iter()
        .map(|f| IndexEntry {
            id: f.id().to_string(),
            kind: f.kind(),
            role: f.role(),
            params: f.params().iter().collect(),
            description: f.description().to_string(),
            formula: f.formula(),
            declared: f.declared(),
        })
        .collect()
}
