//! Named construction routes, selectable at runtime.

use std::sync::OnceLock;
use std::time::Duration;

use serde::Serialize;

use super::planner::{realize, realize_small_t, Construction, SmallT};
use crate::conditions::{condition_b, Witness};
use crate::error::{Error, Result};
use crate::list::LengthList;
use crate::oracle::{self, Mode, SearchOptions};
use crate::realization::{Kind, Realization};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Request {
    pub a: u32,
    pub b: u32,
    pub c: u32,
    pub t: u32,
    /// Node budget for strategies that search.
    pub max_nodes: Option<u64>,
    pub max_time: Option<Duration>,
}

impl Request {
    pub fn new(a: u32, b: u32, c: u32, t: u32) -> Self {
        Self {
            a,
            b,
            c,
            t,
            max_nodes: None,
            max_time: None,
        }
    }

    pub fn list(&self) -> LengthList {
        LengthList::triple(self.a, self.b, self.c, self.t)
    }

    fn is_cyclic_list(&self) -> bool {
        self.t <= self.list().order() / 2
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum Outcome {
    Realized(Construction),
    Infeasible(Witness),
}

impl From<SmallT> for Outcome {
    fn from(s: SmallT) -> Self {
        match s {
            SmallT::Realized(c) => Outcome::Realized(c),
            SmallT::Infeasible(w) => Outcome::Infeasible(w),
        }
    }
}

pub trait Strategy: Send + Sync {
    fn name(&self) -> &'static str;
    fn description(&self) -> &'static str;
    fn construct(&self, req: &Request) -> Result<Outcome>;
}

struct Theorem;

impl Strategy for Theorem {
    fn name(&self) -> &'static str {
        "theorem"
    }

    fn description(&self) -> &'static str {
        "families plus transforms, for a + b >= t - 1"
    }

    fn construct(&self, req: &Request) -> Result<Outcome> {
        realize(req.a, req.b, req.c, req.t).map(Outcome::Realized)
    }
}

struct SmallTables;

impl Strategy for SmallTables {
    fn name(&self) -> &'static str {
        "small-t"
    }

    fn description(&self) -> &'static str {
        "complete answer for t in {4, 6, 8} on cyclic lists"
    }

    fn construct(&self, req: &Request) -> Result<Outcome> {
        if !req.is_cyclic_list() {
            return Err(Error::invalid(format!(
                "t={} exceeds floor(v/2) for v={}",
                req.t,
                req.list().order()
            )));
        }
        realize_small_t(req.a, req.b, req.c, req.t).map(Outcome::from)
    }
}

struct Search;

impl Strategy for Search {
    fn name(&self) -> &'static str {
        "oracle"
    }

    fn description(&self) -> &'static str {
        "exhaustive search; cyclic when the list allows it, otherwise linear from 0"
    }

    fn construct(&self, req: &Request) -> Result<Outcome> {
        if req.t < 4 || req.t % 2 != 0 {
            return Err(Error::invalid(format!("t must be even and at least 4, got {}", req.t)));
        }
        let list = req.list();
        let kind = if req.is_cyclic_list() { Kind::Cyclic } else { Kind::Linear };
        let mut opts = SearchOptions::new(kind, Mode::First);
        opts.start = Some(0);
        opts.max_nodes = req.max_nodes;
        opts.max_time = req.max_time;
        let report = oracle::search(&list, &opts)?;
        match report.found() {
            Some(path) => Ok(Outcome::Realized(Construction {
                realization: Realization::new(kind, path.to_vec(), list)?,
                provenance: vec![format!("oracle search ({kind}, {} nodes)", report.nodes)],
            })),
            None if kind == Kind::Cyclic => match condition_b(&list)?.witness {
                Some(w) => Ok(Outcome::Infeasible(w)),
                None => Err(Error::Unsupported(format!(
                    "no cyclic realization of {list} although condition (B) holds"
                ))),
            },
            None => Err(Error::Unsupported(format!("no linear realization of {list} starts at 0"))),
        }
    }
}

struct Auto;

impl Strategy for Auto {
    fn name(&self) -> &'static str {
        "auto"
    }

    fn description(&self) -> &'static str {
        "small-t for t in {4, 6, 8} on cyclic lists, else theorem, else oracle"
    }

    fn construct(&self, req: &Request) -> Result<Outcome> {
        if [4, 6, 8].contains(&req.t) && req.is_cyclic_list() {
            return SmallTables.construct(req);
        }
        if req.a + req.b + 1 >= req.t {
            return Theorem.construct(req);
        }
        if req.is_cyclic_list() {
            if let Some(w) = condition_b(&req.list())?.witness {
                return Ok(Outcome::Infeasible(w));
            }
        }
        Search.construct(req)
    }
}

pub fn strategies() -> &'static [Box<dyn Strategy>] {
    static ALL: OnceLock<Vec<Box<dyn Strategy>>> = OnceLock::new();
    ALL.get_or_init(|| vec![Box::new(Auto), Box::new(Theorem), Box::new(SmallTables), Box::new(Search)])
}

pub fn strategy(name: &str) -> Result<&'static dyn Strategy> {
    strategies()
        .iter()
        .find(|s| s.name() == name)
        .map(|s| s.as_ref())
        .ok_or_else(|| {
            let known: Vec<_> = strategies().iter().map(|s| s.name()).collect();
            Error::invalid(format!("unknown strategy {name:?}; known: {}", known.join(", ")))
        })
}
