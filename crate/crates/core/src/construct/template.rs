//! Parametric path templates.
//!
//! Same shape as the concrete arrow notation, but every vertex is a
//! polynomial in single-letter parameters:
//!
//! ```text
//! template := seg ("," seg)*
//! seg      := poly (STEP poly)*
//! STEP     := ("+" | "-") INT ">" | ">"
//! poly     := ["-"] mono (("+" | "-") mono)*
//! mono     := INT IDENT* | IDENT+
//! ```
//!
//! A sign followed by an integer and `>` is a step, never a term. A bare
//! `>` steps by `t` in the direction of its endpoint. When the endpoints of
//! a step coincide for some parameter values the step contributes the single
//! vertex, so `6 > 6k+6` is just `6` at `k = 0`.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::realization::Vertex;

/// Parameter assignment, keyed by single-letter names.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Params(BTreeMap<char, i64>);

impl Params {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, name: char, value: i64) -> Self {
        self.0.insert(name, value);
        self
    }

    pub fn set(&mut self, name: char, value: i64) {
        self.0.insert(name, value);
    }

    pub fn get(&self, name: char) -> Result<i64> {
        self.0
            .get(&name)
            .copied()
            .ok_or_else(|| Error::invalid(format!("missing parameter {name}")))
    }

    pub fn t(&self) -> Result<u32> {
        let t = self.get('t')?;
        u32::try_from(t).map_err(|_| Error::invalid(format!("t must be positive, got {t}")))
    }

    pub fn iter(&self) -> impl Iterator<Item = (char, i64)> + '_ {
        self.0.iter().map(|(&k, &v)| (k, v))
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, v) in self.iter() {
            if !first {
                f.write_str(",")?;
            }
            first = false;
            write!(f, "{k}={v}")?;
        }
        Ok(())
    }
}

impl std::str::FromStr for Params {
    type Err = Error;

    /// `t=8,k=1`
    fn from_str(s: &str) -> Result<Self> {
        let mut p = Params::new();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (k, v) = part
                .split_once('=')
                .ok_or_else(|| Error::invalid(format!("expected name=value, got {part:?}")))?;
            let mut chars = k.trim().chars();
            let name = match (chars.next(), chars.next()) {
                (Some(c), None) if c.is_ascii_lowercase() => c,
                _ => return Err(Error::invalid(format!("bad parameter name {k:?}"))),
            };
            let value = v
                .trim()
                .parse()
                .map_err(|_| Error::invalid(format!("bad value for {name}: {v:?}")))?;
            p.set(name, value);
        }
        Ok(p)
    }
}

/// `coeff * vars[0] * vars[1] * ...`
#[derive(Debug, Clone, PartialEq, Eq)]
struct Mono {
    coeff: i64,
    vars: Vec<char>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly(Vec<Mono>);

impl Poly {
    pub fn parse(text: &str) -> Result<Self> {
        let toks = tokenize(text)?;
        let mut p = Parser {
            toks,
            pos: 0,
            end: text.len(),
        };
        let poly = p.poly()?;
        if p.pos != p.toks.len() {
            return Err(Error::parse(p.offset(), "unexpected trailing input"));
        }
        Ok(poly)
    }

    pub fn eval(&self, p: &Params) -> Result<i64> {
        let mut sum = 0i64;
        for m in &self.0 {
            let mut term = m.coeff;
            for &v in &m.vars {
                term *= p.get(v)?;
            }
            sum += term;
        }
        Ok(sum)
    }

    fn vars(&self, out: &mut Vec<char>) {
        for m in &self.0 {
            out.extend(&m.vars);
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Step {
    Explicit(i64),
    ByT,
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Seg {
    head: Poly,
    links: Vec<(Step, Poly)>,
}

/// A parsed template, instantiated with [`Template::expand`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Template {
    source: String,
    segs: Vec<Seg>,
}

impl Template {
    pub fn parse(text: &str) -> Result<Self> {
        let toks = tokenize(text)?;
        let mut p = Parser {
            toks,
            pos: 0,
            end: text.len(),
        };
        let mut segs = Vec::new();
        loop {
            segs.push(p.seg()?);
            match p.peek() {
                Some(Tok::Comma) => p.pos += 1,
                None => break,
                Some(_) => return Err(Error::parse(p.offset(), "expected ',' or end of input")),
            }
        }
        Ok(Self {
            source: text.to_string(),
            segs,
        })
    }

    pub fn source(&self) -> &str {
        &self.source
    }

    /// Parameter names referenced anywhere in the template.
    pub fn vars(&self) -> Vec<char> {
        let mut out = Vec::new();
        for s in &self.segs {
            s.head.vars(&mut out);
            for (step, p) in &s.links {
                if *step == Step::ByT {
                    out.push('t');
                }
                p.vars(&mut out);
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn expand(&self, p: &Params) -> Result<Vec<Vertex>> {
        let mut out = Vec::new();
        for seg in &self.segs {
            let mut current = vertex(seg.head.eval(p)?)?;
            out.push(current);
            for (step, target) in &seg.links {
                let target = vertex(target.eval(p)?)?;
                let span = target as i64 - current as i64;
                if span == 0 {
                    continue;
                }
                let step = match *step {
                    Step::Explicit(s) => s,
                    Step::ByT => p.get('t')? * span.signum(),
                };
                if span.signum() != step.signum() || span % step != 0 {
                    return Err(Error::Verification(format!(
                        "template step {step:+} cannot go from {current} to {target} ({p})"
                    )));
                }
                let mut x = current as i64;
                while x != target as i64 {
                    x += step;
                    out.push(x as Vertex);
                }
                current = target;
            }
        }
        Ok(out)
    }
}

impl fmt::Display for Template {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.source)
    }
}

fn vertex(x: i64) -> Result<Vertex> {
    Vertex::try_from(x).map_err(|_| Error::Verification(format!("template vertex {x} out of range")))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Tok {
    Int(i64),
    Ident(char),
    Plus,
    Minus,
    Arrow,
    /// `+N>` or `-N>` written without spaces.
    Step(i64),
    Comma,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = text.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n = text[start..i]
                    .parse()
                    .map_err(|_| Error::parse(start, "integer too large"))?;
                toks.push((start, Tok::Int(n)));
                continue;
            }
            b'+' | b'-' if step_len(&bytes[i + 1..]).is_some() => {
                let n = step_len(&bytes[i + 1..]).unwrap();
                let size: i64 = text[i + 1..i + 1 + n]
                    .parse()
                    .map_err(|_| Error::parse(i, "step too large"))?;
                if size == 0 {
                    return Err(Error::parse(i, "step must be non-zero"));
                }
                toks.push((i, Tok::Step(if c == b'-' { -size } else { size })));
                i += n + 2;
                continue;
            }
            b'a'..=b'z' => Tok::Ident(c as char),
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'>' => Tok::Arrow,
            b',' => Tok::Comma,
            _ => return Err(Error::parse(i, format!("unexpected character {:?}", c as char))),
        };
        toks.push((i, tok));
        i += 1;
    }
    Ok(toks)
}

/// Digit count of `N` when `rest` starts with `N>`.
fn step_len(rest: &[u8]) -> Option<usize> {
    let n = rest.iter().take_while(|b| b.is_ascii_digit()).count();
    (n > 0 && rest.get(n) == Some(&b'>')).then_some(n)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<Tok> {
        self.toks.get(self.pos).map(|&(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |&(o, _)| o)
    }

    fn at_step(&self) -> bool {
        matches!(self.peek(), Some(Tok::Arrow | Tok::Step(_)))
    }

    fn mono(&mut self, sign: i64) -> Result<Mono> {
        let start = self.pos;
        let mut coeff = sign;
        let mut vars = Vec::new();
        if let Some(Tok::Int(n)) = self.peek() {
            coeff *= n;
            self.pos += 1;
        }
        while let Some(Tok::Ident(c)) = self.peek() {
            vars.push(c);
            self.pos += 1;
        }
        if self.pos == start {
            return Err(Error::parse(self.offset(), "expected a term"));
        }
        Ok(Mono { coeff, vars })
    }

    fn poly(&mut self) -> Result<Poly> {
        let mut sign = 1;
        if self.peek() == Some(Tok::Minus) {
            self.pos += 1;
            sign = -1;
        }
        let mut monos = vec![self.mono(sign)?];
        while !self.at_step() {
            let sign = match self.peek() {
                Some(Tok::Plus) => 1,
                Some(Tok::Minus) => -1,
                _ => break,
            };
            self.pos += 1;
            monos.push(self.mono(sign)?);
        }
        Ok(Poly(monos))
    }

    fn seg(&mut self) -> Result<Seg> {
        let head = self.poly()?;
        let mut links = Vec::new();
        while self.at_step() {
            let step = match self.peek() {
                Some(Tok::Step(n)) => Step::Explicit(n),
                _ => Step::ByT,
            };
            self.pos += 1;
            links.push((step, self.poly()?));
        }
        Ok(Seg { head, links })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Params {
        s.parse().unwrap()
    }

    #[test]
    fn polynomials() {
        let e = Poly::parse("tk+t+4x+5").unwrap();
        assert_eq!(e.eval(&p("t=10,k=2,x=1")).unwrap(), 20 + 10 + 4 + 5);
        assert_eq!(Poly::parse("-3+2t").unwrap().eval(&p("t=4")).unwrap(), 5);
        assert!(Poly::parse("t+").is_err());
    }

    #[test]
    fn explicit_steps_and_chains() {
        let tpl = Template::parse("0 +1> 4y+3 +2> 4u-1, 4u-2 -2> 4y+4").unwrap();
        assert_eq!(
            tpl.expand(&p("u=2,y=0")).unwrap(),
            vec![0, 1, 2, 3, 5, 7, 6, 4]
        );
        assert_eq!(tpl.vars(), vec!['u', 'y']);
    }

    #[test]
    fn bare_arrows_infer_direction() {
        let tpl = Template::parse("0 > 4k+8, 3 > 4k+7, 4k+5 > 1, 2 > 4k+6").unwrap();
        assert_eq!(
            tpl.expand(&p("t=4,k=0")).unwrap(),
            vec![0, 4, 8, 3, 7, 5, 1, 2, 6]
        );
    }

    #[test]
    fn coinciding_endpoints_give_one_vertex() {
        let tpl = Template::parse("0, 6 > 6k+6, 6k+5 > 5").unwrap();
        assert_eq!(tpl.expand(&p("t=6,k=0")).unwrap(), vec![0, 6, 5]);
        assert_eq!(tpl.expand(&p("t=6,k=1")).unwrap(), vec![0, 6, 12, 11, 5]);
    }

    #[test]
    fn wrong_direction_is_reported() {
        let tpl = Template::parse("0 +2> t-4").unwrap();
        assert!(matches!(tpl.expand(&p("t=2")), Err(Error::Verification(_))));
        let tpl = Template::parse("0 +2> 3").unwrap();
        assert!(tpl.expand(&p("t=4")).is_err());
    }

    #[test]
    fn spaced_sign_is_a_term() {
        let tpl = Template::parse("0 > 6k+12, 6k+11 > 5").unwrap();
        assert_eq!(tpl.expand(&p("t=6,k=0")).unwrap(), vec![0, 6, 12, 11, 5]);
    }

    #[test]
    fn minus_before_a_step_size_is_a_step() {
        let tpl = Template::parse("t-1 -2> 1").unwrap();
        assert_eq!(tpl.expand(&p("t=8")).unwrap(), vec![7, 5, 3, 1]);
    }
}
