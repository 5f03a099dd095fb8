//! Families valid for every `t` in a congruence class, plus the fixed
//! small-`t` bases indexed by `k`.

use super::template::{Params, Poly, Template};
use super::{Declared, Family, Range, Role};
use crate::error::{Error, Result};
use crate::realization::{Kind, Vertex};

pub(super) enum Body {
    Template(Template),
    Generator {
        build: fn(&Params) -> Result<Vec<Vertex>>,
        formula: &'static str,
    },
}

/// A family given by a template or a generator function.
pub(super) struct Defined {
    pub id: String,
    pub description: String,
    pub kind: Kind,
    pub role: Role,
    pub declared: Declared,
    pub t_ok: fn(u32) -> bool,
    pub ranges: Vec<(char, Range)>,
    pub counts: [Poly; 3],
    pub body: Body,
}

impl Family for Defined {
    fn id(&self) -> &str {
        &self.id
    }

    fn description(&self) -> &str {
        &self.description
    }

    fn kind(&self) -> Kind {
        self.kind
    }

    fn role(&self) -> Role {
        self.role
    }

    fn declared(&self) -> Declared {
        self.declared
    }

    fn accepts_t(&self, t: u32) -> bool {
        t >= 4 && t % 2 == 0 && (self.t_ok)(t)
    }

    fn ranges(&self) -> &[(char, Range)] {
        &self.ranges
    }

    fn counts(&self, p: &Params) -> Result<(u32, u32, u32)> {
        let mut out = [0u32; 3];
        for (o, poly) in out.iter_mut().zip(&self.counts) {
            let x = poly.eval(p)?;
            *o = u32::try_from(x)
                .map_err(|_| Error::invalid(format!("{}: negative count at {p}", self.id)))?;
        }
        Ok((out[0], out[1], out[2]))
    }

    fn path(&self, p: &Params) -> Result<Vec<Vertex>> {
        match &self.body {
            Body::Template(t) => t.expand(p),
            Body::Generator { build, .. } => build(p),
        }
    }

    fn formula(&self) -> String {
        match &self.body {
            Body::Template(t) => format!("[{}]", t.source()),
            Body::Generator { formula, .. } => formula.to_string(),
        }
    }
}

/// Builder shorthand: `prefix` is `r`, `c`, `S1`, `S2` or `S12`.
pub(super) struct Def(Defined);

impl Def {
    pub fn new(prefix: &str, list: &str, counts: [&str; 3], t_ok: fn(u32) -> bool) -> Self {
        let kind = if prefix == "c" { Kind::Cyclic } else { Kind::Linear };
        let declared = Declared {
            type1: prefix.starts_with("S1"),
            type2: prefix == "S2" || prefix == "S12",
            ext_deficit: None,
        };
        let counts = counts.map(|c| Poly::parse(c).expect("count polynomial"));
        Self(Defined {
            id: format!("{prefix}{{{list}}}"),
            description: String::new(),
            kind,
            role: Role::Base,
            declared,
            t_ok,
            ranges: Vec::new(),
            counts,
            body: Body::Template(Template::parse("0").unwrap()),
        })
    }

    pub fn suffix(mut self, s: &str) -> Self {
        self.0.id.push_str(s);
        self
    }

    pub fn about(mut self, text: &str) -> Self {
        self.0.description = text.to_string();
        self
    }

    pub fn role(mut self, role: Role) -> Self {
        self.0.role = role;
        self
    }

    pub fn ext(mut self, deficit: u32) -> Self {
        self.0.declared.ext_deficit = Some(deficit);
        self
    }

    pub fn range(mut self, name: char, lo: fn(i64) -> i64, hi: Option<fn(i64) -> i64>) -> Self {
        self.0.ranges.push((name, Range { lo, hi }));
        self
    }

    pub fn k(self) -> Self {
        self.range('k', |_| 0, None)
    }

    pub fn tpl(mut self, src: &str) -> Self {
        self.0.body = Body::Template(Template::parse(src).expect("family template"));
        self
    }

    pub fn generator(mut self, build: fn(&Params) -> Result<Vec<Vertex>>, formula: &'static str) -> Self {
        self.0.body = Body::Generator { build, formula };
        self
    }

    pub fn done(self) -> Box<dyn Family> {
        Box::new(self.0)
    }
}

/// Appends `from, from ± t, ..., to`.
pub(super) struct Walk {
    t: i64,
    pub out: Vec<Vertex>,
}

impl Walk {
    pub fn new(t: i64) -> Self {
        Self { t, out: Vec::new() }
    }

    pub fn push(&mut self, x: i64) -> Result<()> {
        let x = Vertex::try_from(x)
            .map_err(|_| Error::Verification(format!("walk vertex {x} out of range")))?;
        self.out.push(x);
        Ok(())
    }

    pub fn arrow(&mut self, from: i64, to: i64) -> Result<()> {
        if (to - from) % self.t != 0 {
            return Err(Error::Verification(format!(
                "{from} and {to} differ by a non-multiple of {}",
                self.t
            )));
        }
        let step = if to >= from { self.t } else { -self.t };
        let mut x = from;
        self.push(x)?;
        while x != to {
            x += step;
            self.push(x)?;
        }
        Ok(())
    }
}

fn even(t: u32) -> bool {
    t >= 4
}
fn t0(t: u32) -> bool {
    t % 4 == 0
}
fn t0_8(t: u32) -> bool {
    t % 4 == 0 && t >= 8
}
fn t2(t: u32) -> bool {
    t % 4 == 2
}
fn t2_10(t: u32) -> bool {
    t % 4 == 2 && t >= 10
}
fn is4(t: u32) -> bool {
    t == 4
}
fn is6(t: u32) -> bool {
    t == 6
}

fn tk(p: &Params) -> Result<(i64, i64)> {
    let t = p.get('t')?;
    Ok((t, t * p.get('k')?))
}

/// `r{1,2^{t-2},t^{tk+1}}`, `t = 2 (mod 4)`.
fn leftover_d1(p: &Params) -> Result<Vec<Vertex>> {
    let (t, tk) = tk(p)?;
    let mut w = Walk::new(t);
    w.arrow(0, tk + t)?;
    for r in (2..=t - 2).rev().step_by(2) {
        if r % 4 == 0 {
            w.arrow(tk + r, r)?;
        } else {
            w.arrow(r, tk + r)?;
        }
    }
    for r in (1..t).step_by(2) {
        if r % 4 == 1 {
            w.arrow(tk + r, r)?;
        } else {
            w.arrow(r, tk + r)?;
        }
    }
    Ok(w.out)
}

/// `S2{1,2^{t-2},t^{tk+2}}`, `t = 2 (mod 4)`.
fn leftover_d2(p: &Params) -> Result<Vec<Vertex>> {
    let (t, tk) = tk(p)?;
    let mut w = Walk::new(t);
    w.arrow(0, tk + t)?;
    for r in (2..=t - 2).rev().step_by(2) {
        if r % 4 == 0 {
            w.arrow(tk + r, r)?;
        } else {
            w.arrow(r, tk + r)?;
        }
    }
    for r in (3..t).step_by(2) {
        if r % 4 == 3 {
            w.arrow(tk + r, r)?;
        } else {
            w.arrow(r, tk + r)?;
        }
    }
    w.arrow(tk + t + 1, 1)?;
    Ok(w.out)
}

/// Cyclic `{1,2^{t-2},t^{tk+t+4x+5}}`. Each residue class is walked
/// whole; classes up to `4x+4` reach one step higher.
fn leftover_cyclic_odd(p: &Params) -> Result<Vec<Vertex>> {
    let (t, tk) = tk(p)?;
    let x = p.get('x')?;
    let top = |r: i64| if r <= 4 * x + 4 { tk + 2 * t + r } else { tk + t + r };
    let mut w = Walk::new(t);
    w.arrow(0, top(0))?;
    for r in (2..=4 * x + 4).step_by(2) {
        if r % 4 == 2 {
            w.arrow(top(r), r)?;
        } else {
            w.arrow(r, top(r))?;
        }
    }
    for r in (1..t).step_by(2) {
        if r % 4 == 1 {
            w.arrow(r, top(r))?;
        } else {
            w.arrow(top(r), r)?;
        }
    }
    for r in (4 * x + 6..=t - 2).rev().step_by(2) {
        if r % 4 == 0 {
            w.arrow(top(r), r)?;
        } else {
            w.arrow(r, top(r))?;
        }
    }
    Ok(w.out)
}

/// Cyclic `{1,2^{t-2},t^{tk+2t-1}}`: even classes upwards from `0`, one
/// `1` from the top of `t-2` to the top of `t-3`, odd classes downwards to
/// `1`, then the class of `t-1`, whose top is the lowest.
fn leftover_cyclic_last(p: &Params) -> Result<Vec<Vertex>> {
    let (t, tk) = tk(p)?;
    let top = |r: i64| if r == t - 1 { tk + 2 * t - 1 } else { tk + 2 * t + r };
    let mut w = Walk::new(t);
    w.arrow(0, top(0))?;
    for r in (2..=t - 2).step_by(2) {
        if r % 4 == 2 {
            w.arrow(top(r), r)?;
        } else {
            w.arrow(r, top(r))?;
        }
    }
    for r in (1..=t - 3).rev().step_by(2) {
        if r % 4 == 3 {
            w.arrow(top(r), r)?;
        } else {
            w.arrow(r, top(r))?;
        }
    }
    w.arrow(top(t - 1), t - 1)?;
    Ok(w.out)
}

/// Cyclic `{1,2^{t-2},t^{tk+t+4x+6}}`. The classes of `0` and `t-3` are
/// split: `0` and `t-3` are visited alone and the rest of each class later.
fn leftover_cyclic_even(p: &Params) -> Result<Vec<Vertex>> {
    let (t, tk) = tk(p)?;
    let x = p.get('x')?;
    let top = |r: i64| if r <= 4 * x + 5 { tk + 2 * t + r } else { tk + t + r };
    let mut w = Walk::new(t);
    w.push(0)?;
    for r in (2..=t).step_by(2) {
        if r % 4 == 2 {
            w.arrow(r, top(r))?;
        } else {
            w.arrow(top(r), r)?;
        }
    }
    for r in (1..=4 * x + 3).step_by(2) {
        if r % 4 == 1 {
            w.arrow(top(r), r)?;
        } else {
            w.arrow(r, top(r))?;
        }
    }
    w.push(t - 3)?;
    for r in (4 * x + 5..=t - 5).rev().step_by(2) {
        if r % 4 == 1 {
            w.arrow(r, top(r))?;
        } else {
            w.arrow(top(r), r)?;
        }
    }
    w.arrow(t - 1, top(t - 1))?;
    w.arrow(top(t - 3), 2 * t - 3)?;
    Ok(w.out)
}

/// Shared tail of the two `t^{t+1}` families.
fn odd_tail(w: &mut Walk, t: i64) -> Result<()> {
    w.arrow(2 * t + 3, 3)?;
    w.arrow(1, 2 * t + 1)?;
    for r in (9..=t - 1).rev().step_by(2) {
        if r % 4 == 1 {
            w.arrow(r + t, r)?;
        } else {
            w.arrow(r, r + t)?;
        }
    }
    w.push(7)?;
    w.arrow(5, t + 5)?;
    w.push(t + 7)
}

/// `S1{1,2^{t+1},t^{t+1}}`, `t = 2 (mod 4)`, `t >= 10`.
fn s1_b1_full(p: &Params) -> Result<Vec<Vertex>> {
    let t = p.get('t')?;
    let mut w = Walk::new(t);
    w.push(0)?;
    w.push(2)?;
    for r in (4..=t - 2).step_by(2) {
        if r % 4 == 0 {
            w.arrow(r, r + t)?;
        } else {
            w.arrow(r + t, r)?;
        }
    }
    w.arrow(2 * t, t)?;
    w.arrow(t + 2, 2 * t + 2)?;
    odd_tail(&mut w, t)?;
    Ok(w.out)
}

/// `S1{1,2^{t+2},t^{t+1}}`, `t = 2 (mod 4)`, `t >= 10`.
fn s1_b2_full(p: &Params) -> Result<Vec<Vertex>> {
    let t = p.get('t')?;
    let mut w = Walk::new(t);
    for x in [0, 2, 4] {
        w.push(x)?;
    }
    for r in (6..=t).step_by(2) {
        if r % 4 == 2 {
            w.arrow(r, r + t)?;
        } else {
            w.arrow(r + t, r)?;
        }
    }
    w.arrow(2 * t + 2, t + 2)?;
    w.arrow(t + 4, 2 * t + 4)?;
    odd_tail(&mut w, t)?;
    Ok(w.out)
}

/// Odd classes `t-1, t-3, ..., 5`, then `3`, class `1` and the rest of `3`.
fn k_tail(w: &mut Walk, t: i64, tk: i64, top: impl Fn(i64) -> i64) -> Result<()> {
    for r in (5..=t - 1).rev().step_by(2) {
        if r % 4 == 1 {
            w.arrow(top(r), r)?;
        } else {
            w.arrow(r, top(r))?;
        }
    }
    w.push(3)?;
    w.arrow(1, tk + t + 1)?;
    w.arrow(tk + t + 3, t + 3)
}

/// `r{1,2^{t-1},t^{tk+3}}`, `t = 2 (mod 4)`, `t >= 10`.
fn r_b1_d3(p: &Params) -> Result<Vec<Vertex>> {
    let (t, tk) = tk(p)?;
    let top = |r: i64| if r <= 3 { tk + t + r } else { tk + r };
    let mut w = Walk::new(t);
    w.arrow(0, tk + t)?;
    for r in (2..=t - 2).step_by(2) {
        if r % 4 == 2 {
            w.arrow(top(r), r)?;
        } else {
            w.arrow(r, top(r))?;
        }
    }
    k_tail(&mut w, t, tk, top)?;
    Ok(w.out)
}

/// `r{1,2^t,t^{tk+3}}`, `t = 2 (mod 4)`, `t >= 10`.
fn r_b0_d3(p: &Params) -> Result<Vec<Vertex>> {
    let (t, tk) = tk(p)?;
    let top = |r: i64| if r <= 4 { tk + t + r } else { tk + r };
    let mut w = Walk::new(t);
    w.push(0)?;
    for r in (2..=t).step_by(2) {
        if r % 4 == 2 {
            w.arrow(r, top(r))?;
        } else {
            w.arrow(top(r), r)?;
        }
    }
    k_tail(&mut w, t, tk, top)?;
    Ok(w.out)
}

pub(super) fn families() -> Vec<Box<dyn Family>> {
    const EVEN_C: &str = "base for even c";
    const D1: &str = "base for c = 1 (mod 4) residues";
    const D3: &str = "base for c = 3 (mod 4) residues";
    vec![
        // Even c, both classes of t.
        Def::new("S12", "1,2^(t-2)", ["1", "t-2", "0"], even)
            .about(EVEN_C)
            .ext(1)
            .tpl("0 +2> t-2, t-1 -2> 1")
            .done(),
        Def::new("S12", "1,2^(t-1)", ["1", "t-1", "0"], even)
            .about(EVEN_C)
            .ext(1)
            .tpl("0 +2> t, t-1 -2> 1")
            .done(),
        Def::new("S2", "1,2^(t-2),t^2", ["1", "t-2", "2"], t0)
            .about(EVEN_C)
            .ext(1)
            .tpl("0, t -2> 2, 3 +2> t+1, 1")
            .done(),
        Def::new("S2", "1,2^(t-1),t^2", ["1", "t-1", "2"], t0)
            .about(EVEN_C)
            .ext(1)
            .tpl("0, 2, t+2 -2> 4, 3 +2> t+1, 1")
            .done(),
        Def::new("S12", "1,2^(t-1),t^2", ["1", "t-1", "2"], t2)
            .about(EVEN_C)
            .ext(1)
            .tpl("0, t -2> 2, t+2, t+1 -2> 1")
            .done(),
        Def::new("S12", "1,2^t,t^2", ["1", "t", "2"], t2)
            .about(EVEN_C)
            .ext(1)
            .tpl("0, t -2> 2, t+2, t+3 -2> 1")
            .done(),
        // t = 4, odd c.
        Def::new("S2", "1,2^2,4^(4k+1)", ["1", "2", "4k+1"], is4)
            .about("odd c for t = 4")
            .k()
            .tpl("0 > 4k+4, 4k+2 > 2, 3 > 4k+3, 4k+1 > 1")
            .done(),
        Def::new("S2", "1,2^3,4^(4k+1)", ["1", "3", "4k+1"], is4)
            .about("odd c for t = 4")
            .k()
            .tpl("0, 2 > 4k+2, 4k+4 > 4, 3 > 4k+3, 4k+5 > 1")
            .done(),
        Def::new("S2", "1,2^2,4^(4k+3)", ["1", "2", "4k+3"], is4)
            .about("odd c for t = 4")
            .k()
            .tpl("0 > 4k+4, 4k+6 > 2, 3 > 4k+3, 4k+5 > 1")
            .done(),
        Def::new("S2", "1,2^3,4^(4k+3)", ["1", "3", "4k+3"], is4)
            .about("odd c for t = 4")
            .k()
            .tpl("0, 2 > 4k+6, 4k+4 > 4, 3 > 4k+7, 4k+5 > 1")
            .done(),
        // t = 0 (mod 4), t >= 8, c = 1 (mod 4) residues.
        Def::new("S1", "1,2^(t+1),t", ["1", "t+1", "1"], t0_8)
            .about(D1)
            .ext(1)
            .tpl("0 +2> t+2, t+3, t+1, 1 +2> t-1")
            .done(),
        Def::new("S1", "1,2^(t+2),t", ["1", "t+2", "1"], t0_8)
            .about(D1)
            .ext(1)
            .tpl("0 +2> t+4, t+3, t+1, 1 +2> t-1")
            .done(),
        Def::new("S1", "1,2^(2t-1),t", ["1", "2t-1", "1"], t0_8)
            .about(D1)
            .ext(1)
            .tpl("0 +2> 2t, 2t+1 -2> t+1, 1 +2> t-1")
            .done(),
        Def::new("S1", "1,2^(2t),t", ["1", "2t", "1"], t0_8)
            .about(D1)
            .ext(1)
            .tpl("0 +2> 2t+2, 2t+1 -2> t+1, 1 +2> t-1")
            .done(),
        Def::new("r", "1,2^(t-2),t", ["1", "t-2", "1"], t0_8)
            .about(D1)
            .ext(1)
            .tpl("0, t -2> 2, 1 +2> t-1")
            .done(),
        Def::new("r", "1,2^(t-1),t", ["1", "t-1", "1"], t0_8)
            .about(D1)
            .ext(1)
            .tpl("0 +2> t, t-1, t+1, 1 +2> t-3")
            .done(),
        Def::new("S1", "1,2^t,t", ["1", "t", "1"], t0_8)
            .suffix("/t0")
            .about("c = 1 only; grows by twos, not extendable")
            .tpl("0 +2> t+2, t+1, 1 +2> t-1")
            .done(),
        Def::new("r", "1,2^t,t^5", ["1", "t", "5"], t0_8)
            .about(D1)
            .ext(1)
            .tpl("0, 2, t+2 -2> 6, t+6, t+4, 4, 3, 1, t+1 -2> 5, t+5, t+3")
            .done(),
        Def::new("r", "1,2^(t+4z+3),t^5", ["1", "t+4z+3", "5"], t0_8)
            .about(D1)
            .ext(1)
            .range('z', |_| 0, Some(|t| (t - 12).div_euclid(4)))
            .tpl(
                "0 +2> 4z+4, t+4z+4 -2> 4z+8, t+4z+8, t+4z+6, 4z+6, 4z+7 -2> 1, \
                 t+1 -2> 4z+9, t+4z+9 -2> t+3",
            )
            .done(),
        Def::new("r", "1,2^(t+4z+4),t^5", ["1", "t+4z+4", "5"], t0_8)
            .about(D1)
            .ext(1)
            .range('z', |_| 0, Some(|t| (t - 12).div_euclid(4)))
            .tpl(
                "0 +2> 4z+6, t+4z+6 -2> 4z+10, t+4z+10, t+4z+8, 4z+8, 4z+7 -2> 1, \
                 t+1 -2> 4z+9, t+4z+9 -2> t+3",
            )
            .done(),
        Def::new("r", "1,2^(2t-5),t^5", ["1", "2t-5", "5"], t0_8)
            .about(D1)
            .ext(1)
            .tpl("0 +2> t-4, 2t-4 -2> t, 2t, 2t-2, t-2, t-1 -2> 1 > 2t+1 -2> t+3")
            .done(),
        Def::new("r", "1,2^(2t-4),t^5", ["1", "2t-4", "5"], t0_8)
            .about(D1)
            .ext(1)
            .tpl("0 +2> t-2, 2t-2 -2> t+2, 2t+2, 2t, t, t-1 -2> 1 > 2t+1 -2> t+3")
            .done(),
        // t = 0 (mod 4), t >= 8, c = 3 (mod 4) residues.
        Def::new("S1", "1,2^(t+3),t^3", ["1", "t+3", "3"], t0_8)
            .suffix("/t0")
            .about(D3)
            .ext(1)
            .tpl("0, 2, t+2 -2> 4, t+4, t+6, t+7 -2> t+1, 1 +2> t-1")
            .done(),
        Def::new("S1", "1,2^(t+4),t^3", ["1", "t+4", "3"], t0_8)
            .suffix("/t0")
            .about(D3)
            .ext(1)
            .tpl("0, 2, 4, t+4 -2> 6, t+6, t+8, t+7 -2> t+1, 1 +2> t-1")
            .done(),
        Def::new("S1", "1,2^(2t+1),t^3", ["1", "2t+1", "3"], t0_8)
            .about(D3)
            .ext(1)
            .tpl("0 +2> 2t+4, 2t+5 -2> t+7, 7 +2> t+1, 1, 3, 5, t+5, t+3")
            .done(),
        Def::new("S1", "1,2^(2t+2),t^3", ["1", "2t+2", "3"], t0_8)
            .about(D3)
            .ext(1)
            .tpl("0 +2> 2t+6, 2t+5 -2> t+7, 7 +2> t+1, 1, 3, 5, t+5, t+3")
            .done(),
        Def::new("r", "1,2^(t-2),t^3", ["1", "t-2", "3"], t0_8)
            .about(D3)
            .ext(1)
            .tpl("0, t, t+2, 2 +2> t-2, t-1, t+1, 1 +2> t-3")
            .done(),
        Def::new("r", "1,2^(t-1),t^3", ["1", "t-1", "3"], t0_8)
            .about(D3)
            .ext(1)
            .tpl("0, t, t+2, 2 +2> t-2, t-1 -2> 1, t+1, t+3")
            .done(),
        Def::new("r", "1,2^t,t^3", ["1", "t", "3"], t0_8)
            .about(D3)
            .ext(1)
            .tpl("0, 2, t+2, t+4, 4 +2> t, t-1 -2> 1, t+1, t+3")
            .done(),
        Def::new("r", "1,2^(2t-3),t^3", ["1", "2t-3", "3"], t0_8)
            .about(D3)
            .ext(1)
            .tpl("0 +2> t, 2t -2> t+2, t+3 +2> 2t+1 > 1 +2> t-1")
            .done(),
        Def::new("r", "1,2^(2t-2),t^3", ["1", "2t-2", "3"], t0_8)
            .about(D3)
            .ext(1)
            .tpl("0 +2> t+2, 2t+2 -2> t+4, t+3 +2> 2t+1 > 1 +2> t-1")
            .done(),
        Def::new("r", "1,2^(t+4y+1),t^3", ["1", "t+4y+1", "3"], t0_8)
            .about(D3)
            .ext(1)
            .range('y', |_| 0, Some(|t| (t - 8).div_euclid(4)))
            .tpl("0 +2> 4y+4, t+4y+4 -2> 4y+6, 4y+7 +2> t+1, 1 +2> 4y+5, t+4y+5 -2> t+3")
            .done(),
        Def::new("r", "1,2^(t+4y+2),t^3", ["1", "t+4y+2", "3"], t0_8)
            .about(D3)
            .ext(1)
            .range('y', |_| 0, Some(|t| (t - 8).div_euclid(4)))
            .tpl("0 +2> 4y+6, t+4y+6 -2> 4y+8, 4y+7 +2> t+1, 1 +2> 4y+5, t+4y+5 -2> t+3")
            .done(),
        // t = 6, indexed by k.
        Def::new("r", "1,2^4,6^(6k+1)", ["1", "4", "6k+1"], is6)
            .about("t = 6, b = 4, c = 1 (mod 6)")
            .k()
            .tpl("0 > 6k+6, 6k+4 > 4, 2 > 6k+2, 6k+1 > 1, 3 > 6k+3, 6k+5 > 5")
            .done(),
        Def::new("S1", "1,2^4,6^(6k+3)", ["1", "4", "6k+3"], is6)
            .about("t = 6, c = 3 (mod 6)")
            .k()
            .tpl("0 > 6k+6, 6k+4 > 4, 2 > 6k+8, 6k+7 > 1, 3 > 6k+3, 6k+5 > 5")
            .done(),
        Def::new("S1", "1,2^4,6^(6k+5)", ["1", "4", "6k+5"], is6)
            .about("t = 6, c = 5 (mod 6)")
            .k()
            .tpl("0 > 6k+6, 6k+8 > 2, 4 > 6k+10, 6k+9 > 3, 1 > 6k+7, 6k+5 > 5")
            .done(),
        Def::new("S1", "1,2^5,6^(6k+1)", ["1", "5", "6k+1"], is6)
            .about("t = 6, c = 1 (mod 6)")
            .k()
            .tpl("0, 2 > 6k+2, 6k+4 > 4, 6 > 6k+6, 6k+7 > 1, 3 > 6k+3, 6k+5 > 5")
            .done(),
        // t = 2 (mod 4), t >= 10, c = 1 (mod 4) residues.
        Def::new("S1", "1,2^(t-1),t", ["1", "t-1", "1"], t2_10)
            .about(D1)
            .ext(1)
            .tpl("0 +2> t, t+1, 1 +2> t-1")
            .done(),
        Def::new("S1", "1,2^t,t", ["1", "t", "1"], t2_10)
            .suffix("/t2")
            .about(D1)
            .ext(1)
            .tpl("0 +2> t+2, t+1, 1 +2> t-1")
            .done(),
        Def::new("S1", "1,2^(t+5),t^5", ["1", "t+5", "5"], t2_10)
            .about(D1)
            .ext(1)
            .tpl("0 +2> 8, t+8 -2> 10, t+10, t+11, t+9, t+7, 7 +2> t+1, 1, 3, 5, t+5, t+3")
            .done(),
        Def::new("S1", "1,2^(t+6),t^5", ["1", "t+6", "5"], t2_10)
            .about(D1)
            .ext(1)
            .tpl("0 +2> 10, t+10 -2> 12, t+12, t+11, t+9, t+7, 7 +2> t+1, 1, 3, 5, t+5, t+3")
            .done(),
        Def::new("r", "1,2^(t+1),t^5", ["1", "t+1", "5"], t2_10)
            .about(D1)
            .ext(2)
            .tpl("0, 2, 4, t+4, t+6, 6 +2> t+2, t+3, 3, 1, t+1 -2> 5, t+5, t+7")
            .done(),
        Def::new("r", "1,2^(t+2),t^5", ["1", "t+2", "5"], t2_10)
            .about(D1)
            .ext(2)
            .tpl("0, 2, 4, 6, t+6, t+8, 8 +2> t+4, t+3, 3, 1, t+1 -2> 5, t+5, t+7")
            .done(),
        Def::new("S1", "1,2^(t+1),t^(t+1)", ["1", "t+1", "t+1"], t2_10)
            .about(D1)
            .ext(1)
            .generator(
                s1_b1_full,
                "[0, 2, 4 > t+4, t+6 > 6, 8 > t+8, ..., t-2 > 2t-2, 2t > t, t+2 > 2t+2, \
                 2t+3 > 3, 1 > 2t+1, 2t-1 > t-1, t-3 > 2t-3, ..., t+9 > 9, 7, 5 > t+5, t+7]",
            )
            .done(),
        Def::new("S1", "1,2^(t+2),t^(t+1)", ["1", "t+2", "t+1"], t2_10)
            .about(D1)
            .ext(1)
            .generator(
                s1_b2_full,
                "[0, 2, 4, 6 > t+6, t+8 > 8, ..., t > 2t, 2t+2 > t+2, t+4 > 2t+4, \
                 2t+3 > 3, 1 > 2t+1, 2t-1 > t-1, ..., t+9 > 9, 7, 5 > t+5, t+7]",
            )
            .done(),
        // t = 2 (mod 4), t >= 10, c = 3 (mod 4) residues.
        Def::new("S1", "1,2^(t-2),t^3", ["1", "t-2", "3"], t2_10)
            .about(D3)
            .ext(1)
            .tpl("0, t -2> 2, t+2, t+1, 1 +2> t-1")
            .done(),
        Def::new("S1", "1,2^(t+1),t^3", ["1", "t+1", "3"], t2_10)
            .about(D3)
            .ext(1)
            .tpl("0, 2, t+2 -2> 4, t+4, t+5, t+3, t+1, 1 +2> t-1")
            .done(),
        Def::new("S1", "1,2^(t+3),t^3", ["1", "t+3", "3"], t2_10)
            .suffix("/t2")
            .about(D3)
            .ext(1)
            .tpl("0 +2> t+6, t+7, 7 +2> t+1, 1, 3, 5, t+5, t+3")
            .done(),
        Def::new("S1", "1,2^(t+4),t^3", ["1", "t+4", "3"], t2_10)
            .suffix("/t2")
            .about(D3)
            .ext(1)
            .tpl("0 +2> t+8, t+7, 7 +2> t+1, 1, 3, 5, t+5, t+3")
            .done(),
        Def::new("r", "1,2^(t-1),t^(tk+3)", ["1", "t-1", "tk+3"], t2_10)
            .about(D3)
            .ext(2)
            .k()
            .generator(
                r_b1_d3,
                "[0 > tk+t, tk+t+2 > 2, 4 > tk+4, tk+6 > 6, ..., t-2 > tk+t-2, \
                 tk+t-1 > t-1, t-3 > tk+t-3, ..., tk+5 > 5, 3, 1 > tk+t+1, tk+t+3 > t+3]",
            )
            .done(),
        Def::new("r", "1,2^t,t^(tk+3)", ["1", "t", "tk+3"], t2_10)
            .about(D3)
            .ext(2)
            .k()
            .generator(
                r_b0_d3,
                "[0, 2 > tk+t+2, tk+t+4 > 4, 6 > tk+6, ..., t > tk+t, \
                 tk+t-1 > t-1, t-3 > tk+t-3, ..., tk+5 > 5, 3, 1 > tk+t+1, tk+t+3 > t+3]",
            )
            .done(),
        // b = t - 2 with c = 1, 2 (mod 4), t = 2 (mod 4).
        Def::new("r", "1,2^(t-2),t^(tk+1)", ["1", "t-2", "tk+1"], t2)
            .about("b = t-2, c = 1 (mod t)")
            .role(Role::Leftover)
            .k()
            .generator(
                leftover_d1,
                "[0 > tk+t, tk+t-2 > t-2, ..., tk+4 > 4, 2 > tk+2, tk+1 > 1, 3 > tk+3, ..., \
                 tk+t-1 > t-1]",
            )
            .done(),
        Def::new("S2", "1,2^(t-2),t^(tk+2)", ["1", "t-2", "tk+2"], t2)
            .about("b = t-2, c = 2 (mod t)")
            .role(Role::Leftover)
            .k()
            .generator(
                leftover_d2,
                "[0 > tk+t, tk+t-2 > t-2, ..., tk+4 > 4, 2 > tk+2, tk+3 > 3, 5 > tk+5, ..., \
                 t-1 > tk+t-1, tk+t+1 > 1]",
            )
            .done(),
        Def::new("c", "1,2^(t-2),t^(tk+t+4x+5)", ["1", "t-2", "tk+t+4x+5"], t2_10)
            .about("b = t-2, c = 1 (mod 4) and 5 <= c mod t <= t-5")
            .role(Role::Leftover)
            .k()
            .range('x', |_| 0, Some(|t| (t - 10).div_euclid(4)))
            .generator(
                leftover_cyclic_odd,
                "[0 > tk+2t, tk+2t+2 > 2, ..., 4x+4 > tk+2t+4x+4, 1 > tk+2t+1, \
                 tk+2t+3 > 3, ..., 4x+5 > tk+t+4x+5, ..., t-1 > tk+2t-1, tk+2t-2 > t-2, ..., \
                 4x+6 > tk+t+4x+6]",
            )
            .done(),
        Def::new("c", "1,2^(t-2),t^(tk+2t-1)", ["1", "t-2", "tk+2t-1"], t2)
            .about("b = t-2, c = -1 (mod t)")
            .role(Role::Leftover)
            .k()
            .generator(
                leftover_cyclic_last,
                "[0 > tk+2t, tk+2t+2 > 2, 4 > tk+2t+4, ..., t-2 > tk+3t-2, tk+3t-3 > t-3, \
                 t-5 > tk+3t-5, ..., 1 > tk+2t+1, tk+2t-1 > t-1]",
            )
            .done(),
        Def::new("c", "1,2^(t-2),t^(tk+t+4x+6)", ["1", "t-2", "tk+t+4x+6"], t2_10)
            .about("b = t-2, c = 2 (mod 4) and c mod t >= 6")
            .role(Role::Leftover)
            .k()
            .range('x', |_| 0, Some(|t| (t - 10).div_euclid(4)))
            .generator(
                leftover_cyclic_even,
                "[0, 2 > tk+2t+2, tk+2t+4 > 4, ..., 4x+6 > tk+t+4x+6, ..., t > tk+2t, \
                 tk+2t+1 > 1, 3 > tk+2t+3, ..., 4x+3 > tk+2t+4x+3, t-3, t-5 > tk+2t-5, ..., \
                 4x+5 > tk+2t+4x+5, t-1 > tk+2t-1, tk+2t-3 > 2t-3]",
            )
            .done(),
        // Two 1s, b = t - 2.
        Def::new("S1", "1^2,2^(t-2),t", ["2", "t-2", "1"], t2)
            .about("a = 2, b = t-2, c = 1 (mod 4)")
            .role(Role::Patch)
            .ext(1)
            .tpl("0, t, t+1 -2> 1, 2 +2> t-2")
            .done(),
        Def::new("S1", "1^2,2^(t-2),t^2", ["2", "t-2", "2"], t2)
            .about("a = 2, b = t-2, c = 2 (mod 4)")
            .role(Role::Patch)
            .ext(1)
            .tpl("0, 2, t+2, t+1, 1 +2> t-1, t -2> 4")
            .done(),
    ]
}
