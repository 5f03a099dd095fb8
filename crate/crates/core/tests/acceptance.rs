//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any criterion fails.
//!
//! Ground truth here is computed by small independent helpers (measuring,
//! condition (B), flag and extendability checks) rather than by the library
//! code under test.

use std::collections::BTreeMap;
use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use bhr::construct::{catalog, errata, realize, realize_small_t, Family, Params, SmallT, Template};
use bhr::oracle::{self, Mode, SearchOptions, Universe};
use bhr::{pathexpr, transforms, verify, Error, Kind, LengthList, Realization, Vertex};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;

type Counts = BTreeMap<u32, u32>;

fn measured(path: &[Vertex], kind: Kind) -> Option<Counts> {
    let v = path.len() as u32;
    let mut seen = vec![false; path.len()];
    for &x in path {
        if x >= v || std::mem::replace(&mut seen[x as usize], true) {
            return None;
        }
    }
    let mut out = Counts::new();
    for w in path.windows(2) {
        let d = w[0].abs_diff(w[1]);
        let d = if kind == Kind::Cyclic { d.min(v - d) } else { d };
        *out.entry(d).or_default() += 1;
    }
    Some(out)
}

fn counts(list: &LengthList) -> Counts {
    list.iter().filter(|&(_, n)| n > 0).collect()
}

fn holds_b(l: &Counts) -> bool {
    let v: u32 = l.values().sum::<u32>() + 1;
    (1..=v)
        .filter(|d| v % d == 0)
        .all(|d| l.iter().filter(|(len, _)| *len % d == 0).map(|(_, n)| n).sum::<u32>() <= v - d)
}

fn realizes(r: &Realization, expected: &Counts) -> bool {
    measured(r.vertices(), r.kind()).as_ref() == Some(expected)
        && &counts(r.list()) == expected
        && verify(r).ok
}

fn adjacent(path: &[Vertex], x: Vertex, y: Vertex) -> bool {
    path.windows(2).any(|w| (w[0] == x && w[1] == y) || (w[0] == y && w[1] == x))
}

fn type1(path: &[Vertex]) -> bool {
    let n = path.len() as Vertex;
    n >= 2 && adjacent(path, n - 1, n - 2)
}

fn type2(path: &[Vertex]) -> bool {
    path.first() == Some(&0) && path.last() == Some(&1)
}

/// Number of consecutive blocks `x = 0, 1, ...` at `s = v - t + 4x` holding
/// either pair of edges `{s, s+2}, {s+1, s+3}` or `{s, s+1}, {s+2, s+3}`.
fn extendable_blocks(path: &[Vertex], t: u32) -> u32 {
    let v = path.len() as u32;
    let mut pos = vec![0usize; path.len()];
    for (i, &x) in path.iter().enumerate() {
        pos[x as usize] = i;
    }
    let adj = |x: u32, y: u32| pos[x as usize].abs_diff(pos[y as usize]) == 1;
    let mut x = 0;
    while v >= t && 4 * x + 3 < t {
        let s = v - t + 4 * x;
        let e1 = adj(s, s + 2) && adj(s + 1, s + 3);
        let e2 = adj(s, s + 1) && adj(s + 2, s + 3);
        if !(e1 || e2) {
            break;
        }
        x += 1;
    }
    x
}

fn triple(a: u32, b: u32, c: u32, t: u32) -> Counts {
    let mut m = Counts::new();
    for (len, n) in [(1, a), (2, b), (t, c)] {
        if n > 0 {
            *m.entry(len).or_default() += n;
        }
    }
    m
}

fn list(s: &str) -> LengthList {
    s.parse().unwrap()
}

type Outcome = std::result::Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn expect_path(expr: &str, t: u32, r: &Realization) -> Outcome {
    let want = pathexpr::expand(&pathexpr::parse(expr, Some(t)).map_err(|e| e.to_string())?);
    ensure!(r.vertices() == want.as_slice(), "got {:?}, expected {want:?}", r.vertices());
    Ok(String::new())
}

fn paper_examples() -> Outcome {
    let cyc = Realization::new(Kind::Cyclic, vec![0, 6, 5, 1, 9, 7, 3, 2, 8, 4], list("1^2,2^2,4^5"))
        .map_err(|e| e.to_string())?;
    ensure!(realizes(&cyc, &triple(2, 2, 5, 4)), "cyclic example");
    let lin = Realization::new(Kind::Linear, vec![0, 8, 7, 6, 4, 2, 10, 9, 1, 3, 5], list("1^3,2^4,8^3"))
        .map_err(|e| e.to_string())?;
    ensure!(realizes(&lin, &triple(3, 4, 3, 8)), "linear example");

    let s2 = Realization::new(Kind::Linear, vec![0, 8, 6, 4, 2, 3, 5, 7, 9, 1], list("1,2^6,8^2"))
        .map_err(|e| e.to_string())?;
    let s28 = transforms::extend_type2_twos(&s2, 2).map_err(|e| e.to_string())?;
    ensure!(s28.vertices() == [0, 2, 10, 8, 6, 4, 5, 7, 9, 11, 3, 1], "S2{{1,2^8,8^2}}: {:?}", s28.vertices());
    ensure!(realizes(&s28, &triple(1, 8, 2, 8)) && type2(s28.vertices()), "S2{{1,2^8,8^2}} list or type");
    let s29 = transforms::extend_type2_twos(&s2, 3).map_err(|e| e.to_string())?;
    ensure!(s29.vertices() == [0, 2, 4, 12, 10, 8, 6, 5, 7, 9, 11, 3, 1], "S2{{1,2^9,8^2}}: {:?}", s29.vertices());
    ensure!(realizes(&s29, &triple(1, 9, 2, 8)) && type2(s29.vertices()), "S2{{1,2^9,8^2}} list or type");

    let base = Realization::new(
        Kind::Linear,
        pathexpr::expand(&pathexpr::parse("0 +2> 14, 15, 1 +2> 13", Some(14)).unwrap()),
        list("1,2^13,14"),
    )
    .map_err(|e| e.to_string())?;
    ensure!(extendable_blocks(base.vertices(), 14) >= 3, "base is not t^8-extendable");
    let chain = [
        (5, "0, 2, 16, 18, 4 +2> 14, 15, 1, 3, 17, 19, 5 +2> 13"),
        (9, "0, 2, 16, 18, 4, 6, 20, 22, 8 +2> 14, 15, 1, 3, 17, 19, 5, 7, 21, 23, 9 +2> 13"),
        (
            13,
            "0, 2, 16, 18, 4, 6, 20, 22, 8, 10, 24, 26, 12, 14, 15, 1, 3, 17, 19, 5, 7, 21, 23, 9, 11, 25, 27, 13",
        ),
    ];
    let mut step = base.clone();
    for (reps, &(c, expr)) in (1..).zip(&chain) {
        step = transforms::grow_t_by4(&step, 14, 1).map_err(|e| e.to_string())?;
        expect_path(expr, 14, &step)?;
        ensure!(realizes(&step, &triple(0, 13, c, 14).into_iter().chain([(1, 1)]).collect()), "14^{c}");
        let direct = transforms::grow_t_by4(&base, 14, reps).map_err(|e| e.to_string())?;
        ensure!(direct == step, "reps={reps} differs from repeated single steps");
    }
    Ok("7 examples".into())
}

fn catalog_soundness() -> Outcome {
    let jobs: Vec<(&dyn Family, Params)> = catalog()
        .iter()
        .flat_map(|f| f.grid(400, 400).into_iter().map(move |p| (f, p)))
        .collect();
    let instances = jobs.len();
    let bad: Vec<String> = jobs
        .into_par_iter()
        .filter_map(|(f, p)| {
            let r = match f.instantiate(&p) {
                Ok(r) => r,
                Err(e) => return Some(e.to_string()),
            };
            let (a, b, c) = f.counts(&p).unwrap();
            let t = p.t().unwrap();
            let ok = measured(r.vertices(), f.kind()) == Some(triple(a, b, c, t))
                && verify(&r).ok
                && declared_holds(f, r.vertices(), t);
            (!ok).then(|| format!("{} at {p}", f.id()))
        })
        .collect();
    ensure!(bad.is_empty(), "{} failures, first: {}", bad.len(), bad[0]);

    let errata = errata();
    for e in &errata {
        let f = catalog().get(&e.id).map_err(|e| e.to_string())?;
        let printed = Template::parse(e.printed).map_err(|e| e.to_string())?;
        let first = f.grid(8, 400).into_iter().next().ok_or("erratum family has no instance")?;
        let differs = |p: &Params| printed.expand(p).ok() != f.path(p).ok();
        let smallest = (0..64)
            .map(|k| first.clone().with('k', k))
            .find(differs)
            .ok_or("printed and corrected rows never differ")?;
        let (a, b, c) = f.counts(&smallest).unwrap();
        let want = triple(a, b, c, smallest.t().unwrap());
        let as_printed = printed.expand(&smallest).ok().and_then(|p| measured(&p, f.kind()));
        ensure!(as_printed.as_ref() != Some(&want), "{} verifies as printed", e.id);
        let corrected = f.path(&smallest).map_err(|e| e.to_string())?;
        ensure!(measured(&corrected, f.kind()) == Some(want.clone()), "{} fails corrected", e.id);
        let mut opts = SearchOptions::new(f.kind(), Mode::First);
        opts.start = Some(0);
        let found = oracle::search(&f.list(&smallest).unwrap(), &opts).map_err(|e| e.to_string())?;
        let oracle_ok = found.found().is_some_and(|p| measured(p, f.kind()) == Some(want.clone()));
        ensure!(oracle_ok, "oracle disagrees on {} at {smallest}", e.id);
    }
    Ok(format!("{} families, {instances} instances, {} erratum resolved", catalog().len(), errata.len()))
}

fn declared_holds(f: &dyn Family, path: &[Vertex], t: u32) -> bool {
    if f.kind() != Kind::Linear {
        return true;
    }
    let d = f.declared();
    (!d.type1 || type1(path))
        && (!d.type2 || type2(path))
        && d.required_w(t).map_or(true, |w| extendable_blocks(path, t) > w)
}

fn closed_form_infeasible(a: u32, b: u32, t: u32, v: u32) -> bool {
    match t {
        4 => v % 4 == 0 && a + b == 2,
        6 => v % 6 == 0 && a + b <= 4,
        8 => (v % 4 == 0 && a == 1 && b == 1) || (v % 8 == 0 && a + b <= 6),
        _ => unreachable!(),
    }
}

fn small_t_exactness() -> Outcome {
    let (mut realized, mut infeasible) = (0, 0);
    for t in [4u32, 6, 8] {
        for v in 2 * t..=40 {
            for a in 1..v - 2 {
                for b in 1..v - 1 - a {
                    let c = v - 1 - a - b;
                    let want = triple(a, b, c, t);
                    let feasible = holds_b(&want);
                    ensure!(
                        feasible != closed_form_infeasible(a, b, t, v),
                        "closed form disagrees with condition (B) at ({a},{b},{c},{t})"
                    );
                    match realize_small_t(a, b, c, t).map_err(|e| format!("({a},{b},{c},{t}): {e}"))? {
                        SmallT::Realized(r) => {
                            ensure!(feasible, "realized infeasible ({a},{b},{c},{t})");
                            ensure!(r.realization.kind() == Kind::Cyclic, "linear at ({a},{b},{c},{t})");
                            ensure!(realizes(&r.realization, &want), "bad path at ({a},{b},{c},{t})");
                            realized += 1;
                        }
                        SmallT::Infeasible(_) => {
                            ensure!(!feasible, "infeasible verdict on feasible ({a},{b},{c},{t})");
                            infeasible += 1;
                        }
                    }
                }
            }
        }
    }
    Ok(format!("{realized} realized, {infeasible} infeasible"))
}

fn theorem_sweep() -> Outcome {
    let mut n = 0;
    for t in (4u32..=16).step_by(2) {
        for a in 1..60 {
            for b in 1..60 {
                if a + b + 1 < t {
                    continue;
                }
                for c in 1.. {
                    if a + b + c + 1 > 60 {
                        break;
                    }
                    let r = realize(a, b, c, t).map_err(|e| format!("({a},{b},{c},{t}): {e}"))?;
                    ensure!(realizes(&r.realization, &triple(a, b, c, t)), "bad path at ({a},{b},{c},{t})");
                    n += 1;
                }
            }
        }
    }
    Ok(format!("{n} lists"))
}

fn oracle_cross_validation() -> Outcome {
    let mut n = 0;
    for t in [4u32, 6] {
        for v in 2 * t..=13 {
            for a in 1..v - 2 {
                for b in 1..v - 1 - a {
                    let c = v - 1 - a - b;
                    let want = triple(a, b, c, t);
                    let opts = SearchOptions::new(Kind::Cyclic, Mode::First);
                    let report = oracle::search(&LengthList::triple(a, b, c, t), &opts).map_err(|e| e.to_string())?;
                    let found = report.found().map(|p| measured(p, Kind::Cyclic) == Some(want.clone()));
                    ensure!(found != Some(false), "oracle path is wrong at ({a},{b},{c},{t})");
                    let exists = found.is_some();
                    ensure!(exists == holds_b(&want), "oracle vs condition (B) at ({a},{b},{c},{t})");
                    let lib_b = bhr::condition_b(&LengthList::triple(a, b, c, t)).map_err(|e| e.to_string())?;
                    ensure!(exists == lib_b.holds, "oracle vs condition_b at ({a},{b},{c},{t})");
                    let small = realize_small_t(a, b, c, t).map_err(|e| e.to_string())?;
                    ensure!(
                        exists == matches!(small, SmallT::Realized(_)),
                        "oracle vs realize_small_t at ({a},{b},{c},{t})"
                    );
                    n += 1;
                }
            }
        }
    }
    Ok(format!("{n} lists"))
}

fn binomial(n: u64, k: u64) -> u64 {
    (1..=k).fold(1, |acc, i| acc * (n - k + i) / i)
}

fn conjecture_scan() -> Outcome {
    let mut parts = Vec::new();
    for p in [5u32, 7, 11] {
        let opts = SearchOptions::new(Kind::Cyclic, Mode::First);
        let report = oracle::scan_conjecture(p, Universe::AllLists, &opts).map_err(|e| e.to_string())?;
        let half = (p - 1) / 2;
        let expected = binomial((p - 1 + half - 1) as u64, (p - 1) as u64);
        ensure!(report.entries.len() as u64 == expected, "p={p}: {} lists, expected {expected}", report.entries.len());
        for e in &report.entries {
            let l = counts(&e.list);
            ensure!(l.values().sum::<u32>() == p - 1 && l.keys().all(|&x| (1..=half).contains(&x)), "bad list {}", e.list);
            ensure!(e.condition_b == holds_b(&l), "condition (B) mismatch on {}", e.list);
            match &e.path {
                Some(path) => ensure!(measured(path, Kind::Cyclic) == Some(l.clone()), "bad path for {}", e.list),
                None => ensure!(!e.realizable, "realizable without a path: {}", e.list),
            }
            ensure!(e.realizable == e.condition_b, "discrepancy on {}", e.list);
        }
        parts.push(format!("p={p}: {}", report.summary()));
    }
    Ok(parts.join("; "))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Op {
    Type1Twos,
    Type2Twos,
    Join,
    PrependOnes,
    ByFour,
    Block,
    TwosByFour,
}

const OPS: [Op; 7] = [
    Op::Type1Twos,
    Op::Type2Twos,
    Op::Join,
    Op::PrependOnes,
    Op::ByFour,
    Op::Block,
    Op::TwosByFour,
];

struct Base {
    r: Realization,
    t: u32,
}

fn linear_bases() -> Vec<Base> {
    let mut out = Vec::new();
    for f in catalog().iter().filter(|f| f.kind() == Kind::Linear) {
        for p in f.grid(16, 80) {
            let r = f.instantiate(&p).expect("catalog instance");
            out.push(Base { r, t: p.t().unwrap() });
        }
    }
    out
}

/// Applies `op` to `r`. `Ok(None)` when a precondition does not hold.
fn apply(
    op: Op,
    r: &Realization,
    t: u32,
    partner: &Realization,
    rng: &mut StdRng,
) -> std::result::Result<Option<(Realization, Counts)>, String> {
    let n: u32 = rng.gen_range(1..=4);
    let mut delta = Counts::new();
    let out = match op {
        Op::Type1Twos => {
            delta.insert(2, n);
            transforms::extend_type1_twos(r, n)
        }
        Op::Type2Twos => {
            let b = n + 1;
            delta.insert(2, b);
            transforms::extend_type2_twos(r, b)
        }
        Op::Join => {
            for (len, k) in counts(partner.list()) {
                *delta.entry(len).or_default() += k;
            }
            transforms::join_type1_type2(r, partner)
        }
        Op::PrependOnes => {
            delta.insert(1, n);
            transforms::prepend_ones(r, n)
        }
        Op::ByFour => {
            delta.insert(t, 4 * n);
            transforms::grow_t_by4(r, t, n)
        }
        Op::Block => {
            let k = n.min(2);
            delta.insert(t, t * k);
            transforms::grow_t_block(r, t, k)
        }
        Op::TwosByFour => {
            delta.insert(2, 4 * n);
            transforms::grow_twos_by4(r, t, n)
        }
    };
    match out {
        Ok(out) => {
            let mut want = counts(r.list());
            for (len, k) in delta {
                *want.entry(len).or_default() += k;
            }
            if op == Op::Join {
                // The length-1 edge the partner is spliced into is consumed.
                let ones = want.get_mut(&1).unwrap();
                *ones -= 1;
                if *ones == 0 {
                    want.remove(&1);
                }
            }
            Ok(Some((out, want)))
        }
        Err(Error::Precondition(_)) => Ok(None),
        Err(e) => Err(format!("{op:?}: {e}")),
    }
}

/// Flags the lemma behind `op` promises for its output.
fn declared_after(op: Op, input: &[Vertex], out: &[Vertex], t: u32) -> std::result::Result<(), String> {
    let u = t / 4;
    let ok = match op {
        Op::Type1Twos => type1(out),
        Op::Type2Twos => type2(out),
        Op::Join | Op::PrependOnes => true,
        Op::ByFour => !type2(input) || type2(out),
        Op::Block => extendable_blocks(out, t) >= u && (t % 4 == 0 || type1(out)),
        Op::TwosByFour => type1(out) && extendable_blocks(out, t) >= u,
    };
    if ok {
        Ok(())
    } else {
        Err(format!(
            "{op:?} output lacks its declared flags at t={t}: {input:?} -> {out:?} (blocks {} -> {})",
            extendable_blocks(input, t),
            extendable_blocks(out, t)
        ))
    }
}

fn transform_suite() -> Outcome {
    let bases = linear_bases();
    let partners: Vec<&Base> = bases.iter().filter(|b| type2(b.r.vertices()) && b.r.order() <= 40).collect();
    if partners.is_empty() {
        return Err("no type-2 partner in the catalog".into());
    }
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let mut used: BTreeMap<Op, u32> = BTreeMap::new();
    let mut compositions = 0;
    while compositions < 500 {
        let base = bases.choose(&mut rng).unwrap();
        let (mut r, t) = (base.r.clone(), base.t);
        let steps = rng.gen_range(1..=4);
        let mut applied = 0;
        for _ in 0..steps * 8 {
            if applied == steps || r.order() > 400 {
                break;
            }
            let op = *OPS.choose(&mut rng).unwrap();
            let partner = &partners.choose(&mut rng).unwrap().r;
            let Some((out, want)) = apply(op, &r, t, partner, &mut rng)? else {
                continue;
            };
            ensure!(realizes(&out, &want), "{op:?} on {} gives a wrong list", r.list());
            declared_after(op, r.vertices(), out.vertices(), t)?;
            *used.entry(op).or_default() += 1;
            applied += 1;
            r = out;
        }
        if applied > 0 {
            compositions += 1;
        }
    }
    let unused: Vec<_> = OPS.iter().filter(|op| used.get(op).copied().unwrap_or(0) < 20).collect();
    ensure!(unused.is_empty(), "rarely exercised: {unused:?} ({used:?})");
    let total: u32 = used.values().sum();
    Ok(format!("{compositions} compositions, {total} transforms"))
}

fn pathexpr_round_trip() -> Outcome {
    let mut rng = StdRng::seed_from_u64(50);
    for i in 0..10_000 {
        let v: u32 = rng.gen_range(2..=50);
        let mut p: Vec<Vertex> = (0..v).collect();
        p.shuffle(&mut rng);
        if i % 4 == 0 {
            // Runs exercise the arrow notation.
            let a = rng.gen_range(0..v);
            let b = rng.gen_range(a..v);
            p[a as usize..=b as usize].sort_unstable();
        }
        let t = if i % 5 == 0 { None } else { Some(2 * rng.gen_range(2..=25)) };
        let text = pathexpr::format(&p, t);
        let back = pathexpr::parse(&text, t).map_err(|e| format!("{text:?}: {e}"))?;
        ensure!(pathexpr::expand(&back) == p, "round trip of {p:?} via {text:?}");
    }
    Ok("10000 permutations".into())
}

struct Criterion {
    name: &'static str,
    limit: Duration,
    run: fn() -> Outcome,
}

fn main() -> ExitCode {
    let criteria = [
        Criterion { name: "worked examples", limit: Duration::from_secs(1), run: paper_examples },
        Criterion { name: "catalog soundness, v <= 400", limit: Duration::from_secs(60), run: catalog_soundness },
        Criterion { name: "small-t exactness, v <= 40", limit: Duration::from_secs(30), run: small_t_exactness },
        Criterion { name: "theorem sweep, t <= 16, v <= 60", limit: Duration::from_secs(300), run: theorem_sweep },
        Criterion { name: "oracle cross-validation, v <= 13", limit: Duration::from_secs(600), run: oracle_cross_validation },
        Criterion { name: "conjecture scan, p in {5, 7, 11}", limit: Duration::from_secs(900), run: conjecture_scan },
        Criterion { name: "transform compositions", limit: Duration::from_secs(60), run: transform_suite },
        Criterion { name: "pathexpr round trip", limit: Duration::from_secs(10), run: pathexpr_round_trip },
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, c) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = panic::catch_unwind(AssertUnwindSafe(c.run)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let elapsed = start.elapsed();
        let result = match result {
            Ok(detail) if elapsed > c.limit => Err(format!("{detail}; over the {:?} limit", c.limit)),
            other => other,
        };
        let (verdict, detail) = match &result {
            Ok(d) => ("PASS", d),
            Err(d) => ("FAIL", d),
        };
        println!("criterion {} {verdict}: {} ({detail}; {:.2}s)", i + 1, c.name, elapsed.as_secs_f64());
        if result.is_err() {
            failed += 1;
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
