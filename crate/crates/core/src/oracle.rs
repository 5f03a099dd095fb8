//! Exhaustive backtracking search for realizations.
//!
//! Paths are extended one vertex at a time in ascending vertex order, so
//! sequential output is deterministic. Symmetries are quotiented by keeping
//! only the lexicographically smallest member of each orbit:
//!
//! * cyclic: paths start at `0`; the orbit is generated by the reflection
//!   `x -> -x` and by reversal followed by the translation that moves the new
//!   first vertex back to `0`;
//! * linear: the orbit is generated by reversal and by `x -> v-1-x`; with a
//!   fixed start vertex only the images that keep it are counted.
//!
//! A `NotFound` outcome is a proof of nonexistence.

use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::conditions::{condition_b, Witness};
use crate::error::{Error, Result};
use crate::list::LengthList;
use crate::realization::{Kind, Vertex};

type Set = u128;
const MAX_ORDER: u32 = 128;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    First,
    Count,
    All,
}

impl std::str::FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "first" => Ok(Mode::First),
            "count" => Ok(Mode::Count),
            "all" => Ok(Mode::All),
            other => Err(Error::invalid(format!("unknown search mode {other:?}"))),
        }
    }
}

#[derive(Debug, Clone)]
pub struct SearchOptions {
    pub kind: Kind,
    pub mode: Mode,
    /// In `All` mode, the number of orbits after which enumeration stops.
    pub limit: Option<usize>,
    pub max_nodes: Option<u64>,
    pub max_time: Option<Duration>,
    /// Worker threads; `0` or `1` runs sequentially.
    pub threads: usize,
    /// Fix the first vertex of a linear search. Cyclic searches always start
    /// at `0`.
    pub start: Option<Vertex>,
    /// Also require the unvisited vertices to stay connected through the
    /// lengths still available.
    pub connectivity: bool,
}

impl SearchOptions {
    pub fn new(kind: Kind, mode: Mode) -> Self {
        Self {
            kind,
            mode,
            limit: None,
            max_nodes: None,
            max_time: None,
            threads: 0,
            start: None,
            connectivity: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum Outcome {
    Found { path: Vec<Vertex> },
    NotFound,
    /// `orbits` canonical representatives; `raw` paths in the search domain.
    Count { orbits: u64, raw: u64 },
    /// Every member of the first `orbits` orbits, each orbit sorted.
    All {
        paths: Vec<Vec<Vertex>>,
        orbits: usize,
        truncated: bool,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchReport {
    pub outcome: Outcome,
    pub nodes: u64,
}

impl SearchReport {
    pub fn found(&self) -> Option<&[Vertex]> {
        match &self.outcome {
            Outcome::Found { path } => Some(path),
            Outcome::All { paths, .. } => paths.first().map(|p| p.as_slice()),
            _ => None,
        }
    }

    /// Whether at least one realization exists.
    pub fn exists(&self) -> bool {
        match &self.outcome {
            Outcome::Found { .. } => true,
            Outcome::NotFound => false,
            Outcome::Count { orbits, .. } => *orbits > 0,
            Outcome::All { orbits, .. } => *orbits > 0,
        }
    }
}

struct Problem {
    v: u32,
    kind: Kind,
    lengths: Vec<u32>,
    /// Indexed by length.
    counts: Vec<u32>,
    start: Option<Vertex>,
    connectivity: bool,
    /// `chains[i]` lists, for `lengths[i]`, the vertex sequences
    /// `r, r+l, r+2l, ...` (cyclic chains wrap once around).
    chains: Vec<Vec<Vec<Vertex>>>,
    cyclic_chain: Vec<bool>,
}

impl Problem {
    fn new(list: &LengthList, opts: &SearchOptions) -> Result<Self> {
        if list.is_empty() {
            return Err(Error::invalid("the list is empty"));
        }
        let v = list.order();
        if v > MAX_ORDER {
            return Err(Error::BudgetExceeded(format!(
                "v={v} exceeds the search limit of {MAX_ORDER}"
            )));
        }
        let max = list.max_length().unwrap();
        match opts.kind {
            Kind::Cyclic if max > v / 2 => {
                return Err(Error::invalid(format!(
                    "length {max} exceeds floor(v/2)={} for a cyclic search",
                    v / 2
                )))
            }
            Kind::Linear if max >= v => {
                return Err(Error::invalid(format!("length {max} does not fit in v={v}")))
            }
            _ => {}
        }
        if let Some(s) = opts.start {
            if s >= v {
                return Err(Error::invalid(format!("start {s} out of range for v={v}")));
            }
        }
        let lengths: Vec<u32> = list.iter().map(|(l, _)| l).collect();
        let mut counts = vec![0; max as usize + 1];
        for (l, c) in list.iter() {
            counts[l as usize] = c;
        }
        let mut chains = Vec::new();
        let mut cyclic_chain = Vec::new();
        for &l in &lengths {
            let mut cs = Vec::new();
            match opts.kind {
                Kind::Linear => {
                    for r in 0..l.min(v) {
                        cs.push((r..v).step_by(l as usize).collect());
                    }
                    cyclic_chain.push(false);
                }
                Kind::Cyclic => {
                    let g = gcd(l, v);
                    for r in 0..g {
                        let mut c = Vec::new();
                        let mut x = r;
                        loop {
                            c.push(x);
                            x = (x + l) % v;
                            if x == r {
                                break;
                            }
                        }
                        cs.push(c);
                    }
                    // l = v/2 gives 2-cycles, which are single edges.
                    cyclic_chain.push(2 * l != v);
                }
            }
            chains.push(cs);
        }
        Ok(Self {
            v,
            kind: opts.kind,
            lengths,
            counts,
            start: if opts.kind == Kind::Cyclic { Some(0) } else { opts.start },
            connectivity: opts.connectivity,
            chains,
            cyclic_chain,
        })
    }

    fn neighbours(&self, x: Vertex, remaining: &[u32], free: Set, out: &mut Vec<Vertex>) {
        out.clear();
        let v = self.v;
        for &l in &self.lengths {
            if remaining[l as usize] == 0 {
                continue;
            }
            let cands = match self.kind {
                Kind::Linear => [x.checked_add(l).filter(|&y| y < v), x.checked_sub(l)],
                Kind::Cyclic => [Some((x + l) % v), Some((x + v - l) % v)],
            };
            for y in cands.into_iter().flatten() {
                if free >> y & 1 == 1 {
                    out.push(y);
                }
            }
        }
        out.sort_unstable();
        out.dedup();
    }

    /// Upper bound on the `l`-edges a Hamiltonian path of `avail` can still
    /// use: each maximal run along an `l`-chain contributes its size minus 1.
    fn feasible(&self, remaining: &[u32], avail: Set, cur: Vertex) -> bool {
        for (i, &l) in self.lengths.iter().enumerate() {
            let need = remaining[l as usize];
            if need == 0 {
                continue;
            }
            let mut bound = 0u32;
            for chain in &self.chains[i] {
                let n = chain.len();
                let inside = |k: usize| avail >> chain[k] & 1 == 1;
                if self.cyclic_chain[i] && n > 2 {
                    let present = (0..n).filter(|&k| inside(k)).count() as u32;
                    if present == n as u32 {
                        bound += present - 1;
                        continue;
                    }
                    // Count edges between cyclically consecutive members.
                    for k in 0..n {
                        if inside(k) && inside((k + 1) % n) {
                            bound += 1;
                        }
                    }
                } else {
                    for k in 0..n.saturating_sub(1) {
                        if inside(k) && inside(k + 1) {
                            bound += 1;
                        }
                    }
                }
                if bound >= need {
                    break;
                }
            }
            if bound < need {
                return false;
            }
        }
        if self.connectivity {
            return self.connected(remaining, avail, cur);
        }
        true
    }

    fn connected(&self, remaining: &[u32], avail: Set, cur: Vertex) -> bool {
        let mut seen: Set = 1 << cur;
        let mut stack = vec![cur];
        let mut buf = Vec::new();
        while let Some(x) = stack.pop() {
            self.neighbours(x, remaining, avail & !seen, &mut buf);
            for &y in &buf {
                seen |= 1 << y;
                stack.push(y);
            }
        }
        seen == avail
    }

    fn images(&self, p: &[Vertex]) -> [Vec<Vertex>; 4] {
        let v = self.v;
        let n = p.len();
        match self.kind {
            Kind::Cyclic => {
                let refl: Vec<Vertex> = p.iter().map(|&x| (v - x) % v).collect();
                let last = p[n - 1];
                let rev: Vec<Vertex> = p.iter().rev().map(|&x| (x + v - last) % v).collect();
                let rev_refl: Vec<Vertex> = rev.iter().map(|&x| (v - x) % v).collect();
                [p.to_vec(), refl, rev, rev_refl]
            }
            Kind::Linear => {
                let refl: Vec<Vertex> = p.iter().map(|&x| v - 1 - x).collect();
                let rev: Vec<Vertex> = p.iter().rev().copied().collect();
                let rev_refl: Vec<Vertex> = refl.iter().rev().copied().collect();
                [p.to_vec(), refl, rev, rev_refl]
            }
        }
    }

    /// The orbit of `p` inside the search domain, sorted, if `p` is its
    /// smallest member.
    fn canonical_orbit(&self, p: &[Vertex]) -> Option<Vec<Vec<Vertex>>> {
        let mut orbit: Vec<Vec<Vertex>> = self
            .images(p)
            .into_iter()
            .filter(|q| self.start.map_or(true, |s| q[0] == s))
            .collect();
        orbit.sort();
        orbit.dedup();
        (orbit[0].as_slice() == p).then_some(orbit)
    }

    /// Second-level prefixes of the search tree, in lexicographic order.
    fn prefixes(&self) -> Vec<Vec<Vertex>> {
        let v = self.v;
        let firsts: Vec<Vertex> = match self.start {
            Some(s) => vec![s],
            // Reflection maps a start x to v-1-x.
            None => (0..=(v - 1) / 2).collect(),
        };
        let mut out = Vec::new();
        let mut buf = Vec::new();
        for x0 in firsts {
            let free: Set = full(v) & !(1 << x0);
            self.neighbours(x0, &self.counts, free, &mut buf);
            for &x1 in &buf {
                // Cyclic reflection fixes 0 and maps x1 to v-x1.
                if self.kind == Kind::Cyclic && x1 > v - x1 {
                    continue;
                }
                out.push(vec![x0, x1]);
            }
        }
        out
    }
}

fn full(v: u32) -> Set {
    if v as usize == Set::BITS as usize {
        Set::MAX
    } else {
        (1 << v) - 1
    }
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

struct Budget {
    nodes: AtomicU64,
    max_nodes: Option<u64>,
    deadline: Option<Instant>,
    stop: AtomicBool,
}

impl Budget {
    fn tick(&self) -> Result<()> {
        let n = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        if let Some(m) = self.max_nodes {
            if n > m {
                return Err(Error::BudgetExceeded(format!("more than {m} search nodes")));
            }
        }
        if n % 4096 == 0 {
            if let Some(d) = self.deadline {
                if Instant::now() > d {
                    return Err(Error::BudgetExceeded("time limit reached".into()));
                }
            }
        }
        Ok(())
    }
}

#[derive(Default)]
struct Branch {
    first: Option<Vec<Vertex>>,
    orbits: u64,
    raw: u64,
    all: Vec<Vec<Vertex>>,
    all_orbits: usize,
    truncated: bool,
}

struct Walker<'a> {
    pb: &'a Problem,
    mode: Mode,
    limit: Option<usize>,
    budget: &'a Budget,
    /// Abandon this branch once a lower-numbered branch has found a path.
    cancel: Option<(&'a AtomicUsize, usize)>,
    path: Vec<Vertex>,
    remaining: Vec<u32>,
    buf_pool: Vec<Vec<Vertex>>,
    out: Branch,
}

impl Walker<'_> {
    fn done(&self) -> bool {
        match self.mode {
            Mode::First => self.out.first.is_some(),
            Mode::All => self.out.truncated,
            Mode::Count => false,
        }
    }

    fn leaf(&mut self) {
        match self.mode {
            Mode::First => self.out.first = Some(self.path.clone()),
            Mode::Count => {
                if let Some(orbit) = self.pb.canonical_orbit(&self.path) {
                    self.out.orbits += 1;
                    self.out.raw += orbit.len() as u64;
                }
            }
            Mode::All => {
                if self.limit.is_some_and(|l| self.out.all_orbits >= l) {
                    self.out.truncated = true;
                    return;
                }
                if let Some(orbit) = self.pb.canonical_orbit(&self.path) {
                    self.out.all_orbits += 1;
                    self.out.all.extend(orbit);
                }
            }
        }
    }

    fn dfs(&mut self, free: Set) -> Result<()> {
        self.budget.tick()?;
        if free == 0 {
            self.leaf();
            return Ok(());
        }
        if let Some((best, me)) = self.cancel {
            if best.load(Ordering::Relaxed) < me || self.budget.stop.load(Ordering::Relaxed) {
                return Ok(());
            }
        }
        let cur = *self.path.last().unwrap();
        if !self.pb.feasible(&self.remaining, free | 1 << cur, cur) {
            return Ok(());
        }
        let mut buf = self.buf_pool.pop().unwrap_or_default();
        self.pb.neighbours(cur, &self.remaining, free, &mut buf);
        for &y in &buf {
            let l = match self.pb.kind {
                Kind::Linear => cur.abs_diff(y),
                Kind::Cyclic => {
                    let d = cur.abs_diff(y);
                    d.min(self.pb.v - d)
                }
            } as usize;
            self.remaining[l] -= 1;
            self.path.push(y);
            let r = self.dfs(free & !(1 << y));
            self.path.pop();
            self.remaining[l] += 1;
            r?;
            if self.done() {
                break;
            }
        }
        self.buf_pool.push(buf);
        Ok(())
    }
}

fn run_branch(
    pb: &Problem,
    opts: &SearchOptions,
    budget: &Budget,
    prefix: &[Vertex],
    cancel: Option<(&AtomicUsize, usize)>,
) -> Result<Branch> {
    let mut remaining = pb.counts.clone();
    let mut free = full(pb.v);
    for &x in prefix {
        free &= !(1 << x);
    }
    for w in prefix.windows(2) {
        let d = w[0].abs_diff(w[1]);
        let l = match pb.kind {
            Kind::Linear => d,
            Kind::Cyclic => d.min(pb.v - d),
        };
        remaining[l as usize] -= 1;
    }
    let mut walker = Walker {
        pb,
        mode: opts.mode,
        limit: opts.limit,
        budget,
        cancel,
        path: prefix.to_vec(),
        remaining,
        buf_pool: Vec::new(),
        out: Branch::default(),
    };
    walker.dfs(free)?;
    Ok(walker.out)
}

/// Searches for realizations of `list`.
pub fn search(list: &LengthList, opts: &SearchOptions) -> Result<SearchReport> {
    let pb = Problem::new(list, opts)?;
    let budget = Budget {
        nodes: AtomicU64::new(0),
        max_nodes: opts.max_nodes,
        deadline: opts.max_time.map(|d| Instant::now() + d),
        stop: AtomicBool::new(false),
    };
    if pb.v == 1 {
        unreachable!("non-empty lists have v >= 2");
    }
    let prefixes = pb.prefixes();

    let branches: Vec<Branch> = if opts.threads > 1 {
        let best = AtomicUsize::new(usize::MAX);
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.threads)
            .build()
            .map_err(|e| Error::invalid(format!("cannot start worker threads: {e}")))?;
        let results: Vec<Result<Branch>> = pool.install(|| {
            prefixes
                .par_iter()
                .enumerate()
                .map(|(i, p)| {
                    let cancel = (opts.mode == Mode::First).then_some((&best, i));
                    let r = run_branch(&pb, opts, &budget, p, cancel);
                    match &r {
                        Ok(b) if b.first.is_some() => {
                            best.fetch_min(i, Ordering::Relaxed);
                        }
                        Err(_) => budget.stop.store(true, Ordering::Relaxed),
                        _ => {}
                    }
                    r
                })
                .collect()
        });
        let mut out = Vec::with_capacity(results.len());
        for r in results {
            match r {
                Ok(b) => out.push(b),
                // A branch past the winner may have hit the budget; the
                // winner is still exact.
                Err(e) => {
                    if opts.mode == Mode::First && out.iter().any(|b: &Branch| b.first.is_some()) {
                        break;
                    }
                    return Err(e);
                }
            }
        }
        out
    } else {
        let mut out = Vec::new();
        let mut all_orbits = 0usize;
        for p in &prefixes {
            let mut local = opts.clone();
            if let Some(l) = opts.limit {
                local.limit = Some(l.saturating_sub(all_orbits));
            }
            let b = run_branch(&pb, &local, &budget, p, None)?;
            all_orbits += b.all_orbits;
            let stop = (opts.mode == Mode::First && b.first.is_some()) || b.truncated;
            out.push(b);
            if stop {
                break;
            }
        }
        out
    };

    let nodes = budget.nodes.load(Ordering::Relaxed);
    let outcome = match opts.mode {
        Mode::First => match branches.into_iter().find_map(|b| b.first) {
            Some(path) => Outcome::Found { path },
            None => Outcome::NotFound,
        },
        Mode::Count => Outcome::Count {
            orbits: branches.iter().map(|b| b.orbits).sum(),
            raw: branches.iter().map(|b| b.raw).sum(),
        },
        Mode::All => {
            let limit = opts.limit.unwrap_or(usize::MAX);
            let mut paths = Vec::new();
            let mut orbits = 0;
            let mut truncated = false;
            for b in branches {
                truncated |= b.truncated;
                if orbits + b.all_orbits > limit {
                    // Parallel branches each collected up to `limit`; cut
                    // at orbit granularity in branch order.
                    let mut seen = 0;
                    let mut i = 0;
                    while i < b.all.len() && orbits + seen < limit {
                        let size = orbit_size_at(&pb, &b.all, i);
                        paths.extend_from_slice(&b.all[i..i + size]);
                        i += size;
                        seen += 1;
                    }
                    orbits += seen;
                    truncated = true;
                    break;
                }
                orbits += b.all_orbits;
                paths.extend(b.all);
            }
            Outcome::All {
                paths,
                orbits,
                truncated,
            }
        }
    };
    Ok(SearchReport { outcome, nodes })
}

/// Size of the orbit starting at index `i` of a branch's flattened output.
fn orbit_size_at(pb: &Problem, all: &[Vec<Vertex>], i: usize) -> usize {
    pb.canonical_orbit(&all[i]).map_or(1, |o| o.len())
}

/// Every Hamiltonian path of `K_v` realizing `list` (first vertex fixed to
/// `0` for cyclic), with no symmetry reduction and no pruning. Intended for
/// cross-checking at very small `v`.
pub fn reference_count(list: &LengthList, kind: Kind, start: Option<Vertex>) -> Result<u64> {
    let v = list.order();
    if v > 12 {
        return Err(Error::BudgetExceeded(format!("reference count is limited to v <= 12, got {v}")));
    }
    let mut counts = vec![0u32; v as usize];
    for (l, c) in list.iter() {
        if l >= v {
            return Err(Error::invalid(format!("length {l} does not fit in v={v}")));
        }
        counts[l as usize] = c;
    }
    let starts: Vec<Vertex> = match (kind, start) {
        (Kind::Cyclic, _) => vec![0],
        (Kind::Linear, Some(s)) => vec![s],
        (Kind::Linear, None) => (0..v).collect(),
    };
    fn rec(v: u32, kind: Kind, cur: Vertex, free: u32, counts: &mut [u32]) -> u64 {
        if free == 0 {
            return 1;
        }
        let mut total = 0;
        for y in 0..v {
            if free >> y & 1 == 0 {
                continue;
            }
            let d = cur.abs_diff(y);
            let l = match kind {
                Kind::Linear => d,
                Kind::Cyclic => d.min(v - d),
            } as usize;
            if counts[l] == 0 {
                continue;
            }
            counts[l] -= 1;
            total += rec(v, kind, y, free & !(1 << y), counts);
            counts[l] += 1;
        }
        total
    }
    let all = (1u32 << v) - 1;
    Ok(starts
        .into_iter()
        .map(|s| rec(v, kind, s, all & !(1 << s), &mut counts))
        .sum())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "universe", rename_all = "snake_case")]
pub enum Universe {
    /// Every multiset of `v - 1` lengths from `1..=floor(v/2)`.
    AllLists,
    /// Every `{1^a, 2^b, t^c}` with `a, b, c >= 1` and `a + b + c = v - 1`.
    Triples { t: u32 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanEntry {
    pub list: LengthList,
    pub condition_b: bool,
    pub witness: Option<Witness>,
    pub realizable: bool,
    pub path: Option<Vec<Vertex>>,
}

impl ScanEntry {
    /// A list on which condition (B) and the search disagree.
    pub fn is_discrepancy(&self) -> bool {
        self.condition_b != self.realizable
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanReport {
    pub v: u32,
    pub universe: Universe,
    pub entries: Vec<ScanEntry>,
}

impl ScanReport {
    pub fn discrepancies(&self) -> impl Iterator<Item = &ScanEntry> {
        self.entries.iter().filter(|e| e.is_discrepancy())
    }

    pub fn summary(&self) -> String {
        format!(
            "{} lists, {} discrepancies",
            self.entries.len(),
            self.discrepancies().count()
        )
    }
}

/// All multisets of `size` elements from `1..=max`, in lexicographic order of
/// their sorted element sequences.
pub fn multisets(size: u32, max: u32) -> Vec<LengthList> {
    fn rec(size: u32, lo: u32, max: u32, cur: &mut Vec<(u32, u32)>, out: &mut Vec<LengthList>) {
        if size == 0 {
            out.push(LengthList::from_pairs(cur.iter().copied()).expect("positive lengths"));
            return;
        }
        if lo > max {
            return;
        }
        for c in (0..=size).rev() {
            if c > 0 {
                cur.push((lo, c));
            }
            rec(size - c, lo + 1, max, cur, out);
            if c > 0 {
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(size, 1, max, &mut Vec::new(), &mut out);
    out
}

fn universe_lists(v: u32, universe: Universe) -> Result<Vec<LengthList>> {
    match universe {
        Universe::AllLists => {
            if v > 13 {
                return Err(Error::BudgetExceeded(format!(
                    "all-lists scans are limited to v <= 13, got {v}"
                )));
            }
            Ok(multisets(v - 1, v / 2))
        }
        Universe::Triples { t } => {
            if v > 24 {
                return Err(Error::BudgetExceeded(format!(
                    "triple scans are limited to v <= 24, got {v}"
                )));
            }
            if t < 4 || t % 2 != 0 {
                return Err(Error::invalid(format!("t must be even and at least 4, got {t}")));
            }
            if t > v / 2 {
                return Err(Error::invalid(format!("t={t} exceeds floor(v/2) for v={v}")));
            }
            let n = v - 1;
            let mut out = Vec::new();
            for a in 1..n {
                for b in 1..n - a {
                    out.push(LengthList::triple(a, b, n - a - b, t));
                }
            }
            Ok(out)
        }
    }
}

/// Checks both directions of the conjecture "realizable iff condition (B)"
/// on every cyclic list of the universe.
pub fn scan_conjecture(v: u32, universe: Universe, opts: &SearchOptions) -> Result<ScanReport> {
    if v < 3 {
        return Err(Error::invalid(format!("v must be at least 3, got {v}")));
    }
    let lists = universe_lists(v, universe)?;
    let mut per = opts.clone();
    per.kind = Kind::Cyclic;
    per.mode = Mode::First;
    per.threads = 0;
    let check = |list: &LengthList| -> Result<ScanEntry> {
        let cb = condition_b(list)?;
        let report = search(list, &per)?;
        let path = report.found().map(|p| p.to_vec());
        Ok(ScanEntry {
            list: list.clone(),
            condition_b: cb.holds,
            witness: cb.witness,
            realizable: path.is_some(),
            path,
        })
    };
    let entries: Result<Vec<ScanEntry>> = if opts.threads > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.threads)
            .build()
            .map_err(|e| Error::invalid(format!("cannot start worker threads: {e}")))?;
        pool.install(|| lists.par_iter().map(check).collect())
    } else {
        lists.iter().map(check).collect()
    };
    Ok(ScanReport {
        v,
        universe,
        entries: entries?,
    })
}
