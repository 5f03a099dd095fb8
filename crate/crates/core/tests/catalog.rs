use std::collections::HashMap;

use bhr::construct::{catalog, errata, Family, Params, Role, Template};
use bhr::oracle::{self, Mode, SearchOptions};
use bhr::{condition_b, verify, Kind, LengthList, Realization};

fn failures(f: &dyn Family, max_t: u32, max_v: u32) -> Vec<String> {
    f.grid(max_t, max_v)
        .into_iter()
        .filter_map(|p| match f.instantiate(&p) {
            Ok(r) if verify(&r).ok => None,
            Ok(_) => Some(format!("{} at {p}: verify failed", f.id())),
            Err(e) => Some(e.to_string()),
        })
        .collect()
}

#[test]
fn every_family_verifies_on_its_grid() {
    let mut bad = Vec::new();
    let mut empty = Vec::new();
    let mut total = 0;
    for f in catalog().iter() {
        let grid = f.grid(40, 400);
        if grid.is_empty() {
            empty.push(f.id().to_string());
        }
        total += grid.len();
        bad.extend(failures(f, 40, 400));
    }
    eprintln!("{} families, {total} instances", catalog().len());
    assert!(empty.is_empty(), "families without instances: {empty:?}");
    assert!(bad.is_empty(), "{} failures:\n{}", bad.len(), bad.join("\n"));
}

#[test]
fn out_of_range_parameters_are_rejected() {
    let f = catalog().get("r{1,2^(t+4z+3),t^5}").unwrap();
    let p: Params = "t=12,z=1".parse().unwrap();
    assert!(f.instantiate(&p).is_err());
    let p: Params = "t=12,z=0".parse().unwrap();
    assert!(f.instantiate(&p).is_ok());
}

#[test]
fn corrected_rows_fail_as_printed_and_pass_corrected() {
    let errata = errata();
    assert_eq!(errata.len(), 1);
    for e in errata {
        let f = catalog().get(&e.id).unwrap();
        let printed = Template::parse(e.printed).unwrap();
        let first = f.grid(8, 400).into_iter().next().unwrap();
        let t = first.t().unwrap();
        // At k = 0 the two readings can coincide.
        let smallest = (0..)
            .map(|k| first.clone().with('k', k))
            .find(|p| printed.expand(p).ok() != f.path(p).ok())
            .unwrap();
        for k in smallest.get('k').unwrap()..smallest.get('k').unwrap() + 3 {
            let p = smallest.clone().with('k', k);
            let list = f.list(&p).unwrap();
            let bad = printed
                .expand(&p)
                .and_then(|path| Realization::new(Kind::Cyclic, path, list.clone()));
            assert!(bad.is_err(), "{} verifies as printed at {p}", e.id);
            assert!(f.instantiate(&p).is_ok());
        }
        let list = f.list(&smallest).unwrap();
        let mut opts = SearchOptions::new(Kind::Cyclic, Mode::First);
        opts.start = Some(0);
        let report = oracle::search(&list, &opts).unwrap();
        assert!(report.exists(), "oracle finds no cyclic realization of {list} (t={t})");
    }
}

/// Every `(a, b, c)` with `a + b <= t - 2` that passes condition (B) has a
/// table row, for `t` in `{4, 6, 8}` and `v <= 400`.
#[test]
fn tables_cover_every_feasible_list() {
    let mut rows: HashMap<(u32, u32, u32), Vec<(Params, u32)>> = HashMap::new();
    for f in catalog().with_role(Role::Table) {
        for p in f.grid(8, 400) {
            let (a, b, c) = f.counts(&p).unwrap();
            rows.entry((a, b, p.t().unwrap())).or_default().push((p, c));
        }
    }
    let mut missing = Vec::new();
    for t in [4u32, 6, 8] {
        for a in 1..t {
            for b in 1..t - a - 1 {
                for c in 1..400 - a - b {
                    let v = a + b + c + 1;
                    if v < 2 * t {
                        continue;
                    }
                    let feasible = condition_b(&LengthList::triple(a, b, c, t)).unwrap().holds;
                    let covered = rows
                        .get(&(a, b, t))
                        .is_some_and(|rs| rs.iter().any(|(_, cc)| *cc == c));
                    if feasible && !covered {
                        missing.push((a, b, c, t));
                    }
                    if !feasible && covered {
                        panic!("row for infeasible ({a},{b},{c},{t})");
                    }
                }
            }
        }
    }
    assert!(missing.is_empty(), "no row for {missing:?}");
}
