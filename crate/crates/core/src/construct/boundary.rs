//! Seeds for `{1^a, 2^b, t^c}` with `a >= 2`, `a + b = t - 1` and
//! `c < 4`. Four cases by `a mod 4`; odd `c` comes from the even seed by
//! negating every step between residue classes.

use super::general::{Body, Defined};
use super::template::{Params, Poly, Template};
use super::{Declared, Family, Range, Role};
use crate::error::{Error, Result};
use crate::realization::{Kind, Vertex};

const P1: &str = "0 +1> 4y+3 +2> 4u-1, 4u-2 -2> 4y+4";
const P2: &str = "0, t, t+1, 1 +1> 4y+1, 4y+3, 4y+2, 4y+4, 4y+5 +2> 4u-1, 4u-2 -2> 4y+6";
const P3: &str = "0, t -1> t-4y-3 -2> 1, t+1, t+2, 2 +2> t-4y-4";
const P4: &str = "0, t, t+1, 1 +1> 4y+1 +2> 4u-1, 4u-2 -2> 4y+2";
const P5: &str = "0 +1> 4y+1, 4y+3, 4y+2 +2> 4u-2, 4u-1 -2> 4y+5";
const P6: &str = "0, t, t+1, 1 +1> 4y+2 +2> 4u-2, 4u-1 -2> 4y+3";
const P7: &str = "0, t, t-1, t-3, t-2, t-4 -1> t-4y-4 -2> 2, t+2, t+1, 1 +2> t-4y-5";
const P8: &str = "0, t, t+1, 1 +1> 4y+2, 4y+4, 4y+3, 4y+5, 4y+6 +2> 4u-2, 4u-1 -2> 4y+7";

fn expand(src: &str, p: &Params) -> Result<Vec<Vertex>> {
    Template::parse(src)?.expand(p)
}

/// Replaces the first occurrence of `from` (read forwards) with `to`.
fn replace(path: &mut Vec<Vertex>, from: &[i64], to: &[i64]) -> Result<()> {
    let from: Vec<Vertex> = from.iter().map(|&x| x as Vertex).collect();
    let i = path
        .windows(from.len())
        .position(|w| w == from.as_slice())
        .ok_or_else(|| Error::Verification(format!("subpath {from:?} not found")))?;
    path.splice(i..i + from.len(), to.iter().map(|&x| x as Vertex));
    Ok(())
}

/// Negates every step that changes residue class mod `t` and rebuilds the
/// path on one more vertex, walking each class it enters from end to end.
pub(super) fn sign_flip(path: &[Vertex], t: u32) -> Result<Vec<Vertex>> {
    let t = t as i64;
    let v = path.len() as i64 + 1;
    let steps: Vec<i64> = path
        .windows(2)
        .map(|w| w[1] as i64 - w[0] as i64)
        .filter(|d| d.abs() != t)
        .collect();
    let mut seen = vec![false; v as usize];
    let mut out = Vec::with_capacity(v as usize);
    let mut enter = |x: i64, out: &mut Vec<Vertex>| -> Result<()> {
        if !(0..v).contains(&x) || seen[x as usize] {
            return Err(Error::Verification(format!("sign flip revisits or leaves at {x}")));
        }
        let members: Vec<i64> = (0..v).filter(|y| (y - x).rem_euclid(t) == 0).collect();
        let ordered: Vec<i64> = if x == members[0] {
            members
        } else if x == *members.last().unwrap() {
            members.into_iter().rev().collect()
        } else {
            return Err(Error::Verification(format!("sign flip enters class mid-way at {x}")));
        };
        for y in ordered {
            if seen[y as usize] {
                return Err(Error::Verification(format!("sign flip revisits {y}")));
            }
            seen[y as usize] = true;
            out.push(y as Vertex);
        }
        Ok(())
    };
    enter(0, &mut out)?;
    for d in steps {
        let last = *out.last().unwrap() as i64;
        enter(last - d, &mut out)?;
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Case {
    /// `a = 4y + 4`
    Four,
    /// `a = 4y + 2`
    Two,
    /// `a = 4y + 3`
    Three,
    /// `a = 4y + 5`
    Five,
}

impl Case {
    fn offset(self) -> i64 {
        match self {
            Case::Four => 4,
            Case::Two => 2,
            Case::Three => 3,
            Case::Five => 5,
        }
    }
}

/// Even seed (`c0` in `{0, 2}`) for `t = 0 (mod 4)`, with `u = t/4`.
fn even_seed_t0(case: Case, c0: u32, p: &Params) -> Result<Vec<Vertex>> {
    let (y, u) = (p.get('y')?, p.get('u')?);
    match (case, c0) {
        (Case::Four, 0) => expand(P1, p),
        (Case::Four, _) => expand(P2, p),
        (Case::Two, 0) if y == u - 1 => expand("0 +1> t-3, t-1, t-2", p),
        (Case::Two, 0) => {
            let mut path = expand(P1, p)?;
            let b = 4 * y;
            replace(&mut path, &[b, b + 1, b + 2, b + 3], &[b, b + 2, b + 1, b + 3])?;
            Ok(path)
        }
        (Case::Two, _) => expand(P4, p),
        (Case::Three, 0) => expand(P5, p),
        (Case::Three, _) => expand(P6, p),
        (Case::Five, 0) => {
            let mut path = expand(P5, p)?;
            let b = 4 * y;
            replace(
                &mut path,
                &[b + 1, b + 3, b + 2, b + 4],
                &[b + 1, b + 2, b + 3, b + 4],
            )?;
            Ok(path)
        }
        (Case::Five, _) => expand(P8, p),
    }
}

/// `c = 1` seed for `t = 2 (mod 4)`: `0, t`, a run of `1`s down to `m`, then
/// `m - 2 -2> 1 or 2`, one `1`, and back up by `2` to `m - 1`. When `a` is
/// `0` or `1 (mod 4)` the top block of the run becomes
/// `t-2, t-4, t-3, t-5`, so that `m` always starts a block.
fn odd_seed_t2(case: Case, y: i64, t: i64) -> Vec<Vertex> {
    let a = 4 * y + case.offset();
    let zigzag = matches!(case, Case::Four | Case::Five) && a != t - 2;
    let m = t + 1 - if zigzag { a + 2 } else { a };
    let mut path = vec![0, t];
    let mut x = t - 1;
    while x >= m {
        if zigzag && x == t - 2 {
            path.extend([t - 2, t - 4, t - 3, t - 5]);
            x = t - 6;
            continue;
        }
        path.push(x);
        x -= 1;
    }
    let low = if m % 2 == 0 { 2 } else { 1 };
    path.extend((low..=m - 2).rev().step_by(2));
    path.extend((3 - low..m).step_by(2));
    path.into_iter().map(|x| x as Vertex).collect()
}

/// Seed for `t = 2 (mod 4)`, with `u = (t + 2)/4`: the formula for `4u`
/// evaluated at this `t`, then a four-vertex corner shortened to two.
fn seed_t2(case: Case, c0: u32, p: &Params) -> Result<Vec<Vertex>> {
    let (y, u) = (p.get('y')?, p.get('u')?);
    match c0 {
        1 => Ok(odd_seed_t2(case, y, p.get('t')?)),
        3 => {
            let mut path = expand(if matches!(case, Case::Four | Case::Two) { P3 } else { P7 }, p)?;
            let t = p.get('t')?;
            match case {
                Case::Two => replace(&mut path, &[t, t - 1, t - 2, t - 3], &[t, t - 2, t - 1, t - 3])?,
                Case::Five => {
                    replace(&mut path, &[t - 1, t - 3, t - 2, t - 4], &[t - 1, t - 2, t - 3, t - 4])?
                }
                _ => {}
            }
            Ok(path)
        }
        _ => {
            if case == Case::Four && c0 == 2 && y == u - 2 {
                return expand("0, t, t+1, 1 +1> t-3, t-1, t-2", p);
            }
            let mut path = even_seed_t0(case, c0, p)?;
            let m = 4 * u;
            match case {
                Case::Four | Case::Two => {
                    replace(&mut path, &[m - 3, m - 1, m - 2, m - 4], &[m - 3, m - 4])?
                }
                Case::Three | Case::Five => {
                    replace(&mut path, &[m - 4, m - 2, m - 1, m - 3], &[m - 4, m - 3])?
                }
            }
            Ok(path)
        }
    }
}

fn seed(case: Case, c0: u32, p: &Params) -> Result<Vec<Vertex>> {
    let t = p.t()?;
    let mut q = p.clone();
    if t % 4 == 0 {
        q.set('u', t as i64 / 4);
        match c0 {
            0 | 2 => even_seed_t0(case, c0, &q),
            _ => sign_flip(&even_seed_t0(case, c0 - 1, &q)?, t),
        }
    } else {
        q.set('u', (t as i64 + 2) / 4);
        seed_t2(case, c0, &q)
    }
}

macro_rules! seed_fn {
    ($name:ident, $case:expr, $c0:expr) => {
        fn $name(p: &Params) -> Result<Vec<Vertex>> {
            seed($case, $c0, p)
        }
    };
}

seed_fn!(s4_0, Case::Four, 0);
seed_fn!(s4_1, Case::Four, 1);
seed_fn!(s4_2, Case::Four, 2);
seed_fn!(s4_3, Case::Four, 3);
seed_fn!(s2_0, Case::Two, 0);
seed_fn!(s2_1, Case::Two, 1);
seed_fn!(s2_2, Case::Two, 2);
seed_fn!(s2_3, Case::Two, 3);
seed_fn!(s3_0, Case::Three, 0);
seed_fn!(s3_1, Case::Three, 1);
seed_fn!(s3_2, Case::Three, 2);
seed_fn!(s3_3, Case::Three, 3);
seed_fn!(s5_0, Case::Five, 0);
seed_fn!(s5_1, Case::Five, 1);
seed_fn!(s5_2, Case::Five, 2);
seed_fn!(s5_3, Case::Five, 3);

type Build = fn(&Params) -> Result<Vec<Vertex>>;

/// Formula text for the index document.
fn formula(case: Case, c0: u32) -> &'static str {
    match (case, c0) {
        (Case::Four, 0) => "[0 +1> 4y+3 +2> 4u-1, 4u-2 -2> 4y+4]; t = 2 (mod 4): u = (t+2)/4, [4u-3, 4u-1, 4u-2, 4u-4] -> [4u-3, 4u-4]",
        (Case::Four, 2) => "[0, t, t+1, 1 +1> 4y+1, 4y+3, 4y+2, 4y+4, 4y+5 +2> 4u-1, 4u-2 -2> 4y+6]; same corner patch for t = 2 (mod 4); y = u-2 there: [0, t, t+1, 1 +1> t-3, t-1, t-2]",
        (Case::Four, 3) => "t = 0 (mod 4): sign flip of c = 2; t = 2 (mod 4): [0, t -1> t-4y-3 -2> 1, t+1, t+2, 2 +2> t-4y-4]",
        (Case::Two, 0) => "c = 0 seed of a = 4y+4 with [4y, 4y+1, 4y+2, 4y+3] -> [4y, 4y+2, 4y+1, 4y+3]; y = u-1: [0 +1> t-3, t-1, t-2]; corner patch for t = 2 (mod 4)",
        (Case::Two, 2) => "[0, t, t+1, 1 +1> 4y+1 +2> 4u-1, 4u-2 -2> 4y+2]; corner patch for t = 2 (mod 4)",
        (Case::Two, 3) => "t = 0 (mod 4): sign flip of c = 2; t = 2 (mod 4): the a = 4y+4 formula with [t, t-1, t-2, t-3] -> [t, t-2, t-1, t-3]",
        (Case::Three, 0) => "[0 +1> 4y+1, 4y+3, 4y+2 +2> 4u-2, 4u-1 -2> 4y+5]; t = 2 (mod 4): [4u-4, 4u-2, 4u-1, 4u-3] -> [4u-4, 4u-3]",
        (Case::Three, 2) => "[0, t, t+1, 1 +1> 4y+2 +2> 4u-2, 4u-1 -2> 4y+3]; same corner patch",
        (Case::Three, 3) => "t = 0 (mod 4): sign flip of c = 2; t = 2 (mod 4): [0, t, t-1, t-3, t-2, t-4 -1> t-4y-4 -2> 2, t+2, t+1, 1 +2> t-4y-5]",
        (Case::Five, 0) => "c = 0 seed of a = 4y+3 with [4y+1, 4y+3, 4y+2, 4y+4] -> [4y+1 +1> 4y+4]; corner patch for t = 2 (mod 4)",
        (Case::Five, 2) => "[0, t, t+1, 1 +1> 4y+2, 4y+4, 4y+3, 4y+5, 4y+6 +2> 4u-2, 4u-1 -2> 4y+7]; same corner patch",
        (Case::Five, 3) => "t = 0 (mod 4): sign flip of c = 2; t = 2 (mod 4): the a = 4y+3 formula with [t-1, t-3, t-2, t-4] -> [t-1 -1> t-4]",
        (_, 1) => "t = 0 (mod 4): sign flip of c = 0; t = 2 (mod 4): [0, t -1> m, m-2 -2> 1 or 2, 2 or 1 +2> m-1] with m = t+1-a, or m = t-1-a and [t-2, t-4, t-3, t-5] in the run for a = 0, 1 (mod 4), a < t-2",
        (_, _) => "sign flip of the c - 1 seed: steps between residue classes negated, on one more vertex",
    }
}

pub(super) fn families() -> Vec<Box<dyn Family>> {
    let table: [(Case, [Build; 4]); 4] = [
        (Case::Four, [s4_0, s4_1, s4_2, s4_3]),
        (Case::Two, [s2_0, s2_1, s2_2, s2_3]),
        (Case::Three, [s3_0, s3_1, s3_2, s3_3]),
        (Case::Five, [s5_0, s5_1, s5_2, s5_3]),
    ];
    let mut out: Vec<Box<dyn Family>> = Vec::new();
    for (case, builds) in table {
        let off = case.offset();
        // 4y + off <= t - 2
        let hi: fn(i64) -> i64 = match case {
            Case::Four => |t| (t - 6).div_euclid(4),
            Case::Two => |t| (t - 4).div_euclid(4),
            Case::Three => |t| (t - 5).div_euclid(4),
            Case::Five => |t| (t - 7).div_euclid(4),
        };
        let t_ok: fn(u32) -> bool = match case {
            Case::Two => |_| true,
            Case::Four | Case::Three => |t| t >= 6,
            Case::Five => |t| t >= 8,
        };
        for (c0, build) in builds.into_iter().enumerate() {
            let a = format!("4y+{off}");
            let b = format!("t-4y-{}", off + 1);
            out.push(Box::new(Defined {
                id: format!("seed{{1^({a}),2^({b}),t^{c0}}}"),
                description: format!("a + b = t - 1 with a = {off} (mod 4), c = {c0}"),
                kind: Kind::Linear,
                role: Role::Boundary,
                declared: Declared {
                    type1: false,
                    type2: false,
                    ext_deficit: Some(1),
                },
                t_ok,
                ranges: vec![('y', Range { lo: |_| 0, hi: Some(hi) })],
                counts: [
                    Poly::parse(&a).unwrap(),
                    Poly::parse(&b).unwrap(),
                    Poly::parse(&c0.to_string()).unwrap(),
                ],
                body: Body::Generator {
                    build,
                    formula: formula(case, c0 as u32),
                },
            }));
        }
    }
    out
}

/// Catalog id of the seed for `a` ones and `c0` copies of `t`.
pub(crate) fn seed_id(a: u32, c0: u32) -> String {
    let off = match a % 4 {
        0 => 4,
        1 => 5,
        r => r,
    };
    format!("seed{{1^(4y+{off}),2^(t-4y-{}),t^{c0}}}", off + 1)
}

pub(crate) fn seed_y(a: u32) -> i64 {
    let off = match a % 4 {
        0 => 4,
        1 => 5,
        r => r,
    } as i64;
    (a as i64 - off) / 4
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_seed_example() {
        let p = Params::new().with('t', 8).with('y', 0);
        assert_eq!(s4_0(&p).unwrap(), vec![0, 1, 2, 3, 5, 7, 6, 4]);
    }

    #[test]
    fn sign_flip_example() {
        // c = 2 seed at t = 8, y = 0, flipped to c = 3.
        let p2 = [0, 8, 9, 1, 3, 2, 4, 5, 7, 6];
        assert_eq!(
            sign_flip(&p2, 8).unwrap(),
            vec![0, 8, 7, 5, 6, 4, 3, 1, 9, 10, 2]
        );
    }

    #[test]
    fn seed_ids_round_trip() {
        assert_eq!(seed_id(4, 0), "seed{1^(4y+4),2^(t-4y-5),t^0}");
        assert_eq!(seed_id(5, 1), "seed{1^(4y+5),2^(t-4y-6),t^1}");
        assert_eq!(seed_y(9), 1);
        assert_eq!(seed_y(2), 0);
    }
}
