//! Compact arrow notation for paths.
//!
//! ```text
//! expr := seg ("," seg)*
//! seg  := INT (STEP INT)*
//! STEP := ("+" | "-") INT ">" | ">"
//! ```
//!
//! `x +i> y` is the progression `x, x+i, ..., y` and `x -i> y` its
//! descending counterpart. A bare `x > y` steps by `t` towards `y`, so `t`
//! must be supplied. A chain `x +1> y +2> z` continues from `y` without
//! repeating it. Whitespace is insignificant and surrounding brackets are
//! accepted.

use std::fmt;

use crate::error::{Error, Result};
use crate::realization::Vertex;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Segment {
    Single(Vertex),
    /// `start, start + step, ..., end`; `end - start` is a positive multiple
    /// of `step` in the direction of its sign.
    Progression { start: Vertex, step: i64, end: Vertex },
}

impl Segment {
    pub fn progression(start: Vertex, step: i64, end: Vertex) -> Result<Self> {
        if step == 0 {
            return Err(Error::invalid("progression step must be non-zero"));
        }
        let span = end as i64 - start as i64;
        if span == 0 || span.signum() != step.signum() {
            return Err(Error::invalid(format!(
                "endpoint {end} is not reachable from {start} with step {step:+}"
            )));
        }
        if span % step != 0 {
            return Err(Error::invalid(format!(
                "{end} is not congruent to {start} modulo {}",
                step.abs()
            )));
        }
        Ok(Segment::Progression { start, step, end })
    }

    pub fn len(&self) -> usize {
        match *self {
            Segment::Single(_) => 1,
            Segment::Progression { start, step, end } => {
                ((end as i64 - start as i64) / step) as usize + 1
            }
        }
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    fn expand_into(&self, out: &mut Vec<Vertex>) {
        match *self {
            Segment::Single(x) => out.push(x),
            Segment::Progression { start, step, end } => {
                let mut x = start as i64;
                loop {
                    out.push(x as Vertex);
                    if x == end as i64 {
                        break;
                    }
                    x += step;
                }
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PathExpr {
    pub segments: Vec<Segment>,
}

impl PathExpr {
    pub fn expand(&self) -> Vec<Vertex> {
        expand(self)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Tok {
    Int(u64),
    Plus,
    Minus,
    Arrow,
    Comma,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>> {
    let mut toks = Vec::new();
    let bytes = text.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        match c {
            b' ' | b'\t' | b'\n' | b'\r' => i += 1,
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n = text[start..i]
                    .parse::<u64>()
                    .map_err(|_| Error::parse(start, "integer too large"))?;
                toks.push((start, Tok::Int(n)));
            }
            b'+' => {
                toks.push((i, Tok::Plus));
                i += 1;
            }
            b'-' => {
                toks.push((i, Tok::Minus));
                i += 1;
            }
            b'>' => {
                toks.push((i, Tok::Arrow));
                i += 1;
            }
            b',' => {
                toks.push((i, Tok::Comma));
                i += 1;
            }
            _ => {
                return Err(Error::parse(
                    i,
                    format!("unexpected character {:?}", text[i..].chars().next().unwrap()),
                ))
            }
        }
    }
    Ok(toks)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    t: Option<u32>,
}

impl Parser {
    fn peek(&self) -> Option<Tok> {
        self.toks.get(self.pos).map(|&(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map(|&(o, _)| o).unwrap_or(self.end)
    }

    fn vertex(&mut self) -> Result<Vertex> {
        let off = self.offset();
        match self.peek() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                Vertex::try_from(n).map_err(|_| Error::parse(off, "vertex too large"))
            }
            _ => Err(Error::parse(off, "expected a vertex")),
        }
    }

    /// Parses an optional step; `None` when the segment ends here.
    fn step(&mut self) -> Result<Option<(usize, Option<i64>)>> {
        let off = self.offset();
        let sign = match self.peek() {
            Some(Tok::Plus) => 1,
            Some(Tok::Minus) => -1,
            Some(Tok::Arrow) => {
                self.pos += 1;
                return Ok(Some((off, None)));
            }
            _ => return Ok(None),
        };
        self.pos += 1;
        let magnitude = match self.peek() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                n as i64
            }
            _ => return Err(Error::parse(self.offset(), "expected a step size")),
        };
        if self.peek() != Some(Tok::Arrow) {
            return Err(Error::parse(self.offset(), "expected '>' after the step"));
        }
        self.pos += 1;
        if magnitude == 0 {
            return Err(Error::parse(off, "step must be non-zero"));
        }
        Ok(Some((off, Some(sign * magnitude))))
    }

    fn segment(&mut self, out: &mut Vec<Segment>) -> Result<()> {
        let mut current = self.vertex()?;
        let mut emitted_head = false;
        while let Some((off, step)) = self.step()? {
            let target_off = self.offset();
            let target = self.vertex()?;
            let step = match step {
                Some(s) => s,
                None => {
                    let t = self
                        .t
                        .ok_or_else(|| Error::parse(off, "bare '>' needs the parameter t"))?;
                    match target.cmp(&current) {
                        std::cmp::Ordering::Greater => t as i64,
                        std::cmp::Ordering::Less => -(t as i64),
                        std::cmp::Ordering::Equal => {
                            return Err(Error::parse(target_off, "progression endpoints coincide"))
                        }
                    }
                }
            };
            let span = target as i64 - current as i64;
            if span == 0 || span.signum() != step.signum() {
                let dir = if step > 0 { "below" } else { "above" };
                return Err(Error::parse(
                    target_off,
                    format!("endpoint {target} is {dir} the start {current} for step {step:+}"),
                ));
            }
            if span % step != 0 {
                return Err(Error::parse(
                    target_off,
                    format!(
                        "endpoint {target} is not congruent to {current} modulo {}",
                        step.abs()
                    ),
                ));
            }
            let start = if emitted_head {
                (current as i64 + step) as Vertex
            } else {
                current
            };
            out.push(if start == target {
                Segment::Single(target)
            } else {
                Segment::Progression {
                    start,
                    step,
                    end: target,
                }
            });
            emitted_head = true;
            current = target;
        }
        if !emitted_head {
            out.push(Segment::Single(current));
        }
        Ok(())
    }
}

pub fn parse(text: &str, t: Option<u32>) -> Result<PathExpr> {
    let trimmed = text.trim();
    let lead = text.len() - text.trim_start().len();
    let (body, base) = match trimmed.strip_prefix('[').and_then(|b| b.strip_suffix(']')) {
        Some(inner) => (inner, lead + 1),
        None => (trimmed, lead),
    };
    let toks = tokenize(body)?
        .into_iter()
        .map(|(o, t)| (o + base, t))
        .collect();
    let mut p = Parser {
        toks,
        pos: 0,
        end: base + body.len(),
        t,
    };
    let mut segments = Vec::new();
    loop {
        p.segment(&mut segments)?;
        match p.peek() {
            Some(Tok::Comma) => p.pos += 1,
            None => break,
            Some(_) => return Err(Error::parse(p.offset(), "expected ',' or end of input")),
        }
    }
    Ok(PathExpr { segments })
}

pub fn expand(e: &PathExpr) -> Vec<Vertex> {
    let mut out = Vec::with_capacity(e.segments.iter().map(Segment::len).sum());
    for s in &e.segments {
        s.expand_into(&mut out);
    }
    out
}

/// Compresses a vertex sequence greedily: at each position the longest run
/// with step `±1`, `±2` or `±t` (ties to the smaller step) becomes a
/// progression if it has at least three terms.
pub fn compress(path: &[Vertex], t: Option<u32>) -> PathExpr {
    let mut steps: Vec<i64> = vec![1, -1, 2, -2];
    if let Some(t) = t.filter(|&t| t > 2) {
        steps.push(t as i64);
        steps.push(-(t as i64));
    }
    let mut segments = Vec::new();
    let mut i = 0;
    while i < path.len() {
        let mut best: Option<(usize, i64)> = None;
        for &s in &steps {
            let mut j = i;
            while j + 1 < path.len() && path[j + 1] as i64 - path[j] as i64 == s {
                j += 1;
            }
            let len = j - i + 1;
            if best.map_or(true, |(bl, _)| len > bl) {
                best = Some((len, s));
            }
        }
        let (len, step) = best.unwrap();
        if len >= 3 {
            segments.push(Segment::Progression {
                start: path[i],
                step,
                end: path[i + len - 1],
            });
            i += len;
        } else {
            segments.push(Segment::Single(path[i]));
            i += 1;
        }
    }
    PathExpr { segments }
}

/// Pretty-prints a path in arrow notation; `parse(format(p, t), t)` expands
/// back to `p`.
pub fn format(path: &[Vertex], t: Option<u32>) -> String {
    render(&compress(path, t), t)
}

fn render(e: &PathExpr, t: Option<u32>) -> String {
    let mut out = String::new();
    for (i, s) in e.segments.iter().enumerate() {
        if i > 0 {
            out.push_str(", ");
        }
        match *s {
            Segment::Single(x) => out.push_str(&x.to_string()),
            Segment::Progression { start, step, end } => {
                if t.is_some_and(|t| t > 2 && step.unsigned_abs() == t as u64) {
                    out.push_str(&format!("{start} > {end}"));
                } else {
                    out.push_str(&format!("{start} {step:+}> {end}"));
                }
            }
        }
    }
    out
}

impl fmt::Display for PathExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(self, None))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Segment::*;

    #[test]
    fn parse_examples() {
        let e = parse("0 +2> 14, 15, 1 +2> 13", None).unwrap();
        assert_eq!(
            e.segments,
            vec![
                Progression { start: 0, step: 2, end: 14 },
                Single(15),
                Progression { start: 1, step: 2, end: 13 },
            ]
        );
        let e = parse("0 > 12, 3 > 9", Some(6)).unwrap();
        assert_eq!(
            e.segments,
            vec![
                Progression { start: 0, step: 6, end: 12 },
                Progression { start: 3, step: 6, end: 9 },
            ]
        );
    }

    #[test]
    fn parse_errors() {
        let err = parse("5 +2> 4", None).unwrap_err();
        assert!(err.to_string().contains("below"), "{err}");
        assert!(matches!(err, Error::Parse { offset: 6, .. }));
        assert!(parse("0 +2> 5", None).unwrap_err().to_string().contains("congruent"));
        assert!(parse("0 > 12", None).unwrap_err().to_string().contains("needs the parameter t"));
        assert!(parse("0 +0> 3", None).is_err());
        assert!(parse("0 +2 4", None).is_err());
        assert!(parse("0,", None).is_err());
        assert!(parse("0 ; 1", None).is_err());
        assert!(parse("9 -2> 11", None).is_err());
    }

    #[test]
    fn expand_examples() {
        let e = PathExpr {
            segments: vec![
                Progression { start: 0, step: 2, end: 14 },
                Single(15),
                Progression { start: 1, step: 2, end: 13 },
            ],
        };
        assert_eq!(
            expand(&e),
            vec![0, 2, 4, 6, 8, 10, 12, 14, 15, 1, 3, 5, 7, 9, 11, 13]
        );
        assert_eq!(expand(&PathExpr { segments: vec![Single(0)] }), vec![0]);
        let e = PathExpr {
            segments: vec![Progression { start: 9, step: -2, end: 1 }],
        };
        assert_eq!(expand(&e), vec![9, 7, 5, 3, 1]);
    }

    #[test]
    fn chains_continue_without_repeating() {
        let e = parse("0 +1> 3 +2> 7, 6 -2> 4", None).unwrap();
        assert_eq!(expand(&e), vec![0, 1, 2, 3, 5, 7, 6, 4]);
        let e = parse("[4 -1> 2 -2> 0]", None).unwrap();
        assert_eq!(expand(&e), vec![4, 3, 2, 0]);
    }

    #[test]
    fn format_examples() {
        let p = [0, 2, 4, 6, 8, 10, 12, 14, 15, 1, 3, 5, 7, 9, 11, 13];
        assert_eq!(format(&p, None), "0 +2> 14, 15, 1 +2> 13");
        assert_eq!(format(&[0], None), "0");
        let s = format(&[0, 6, 12, 3, 9], Some(6));
        assert!(s == "0 > 12, 3, 9" || s == "0 > 12, 3 > 9", "{s}");
        assert_eq!(expand(&parse(&s, Some(6)).unwrap()), vec![0, 6, 12, 3, 9]);
    }

    #[test]
    fn progression_length() {
        let s = Segment::progression(3, 4, 19).unwrap();
        assert_eq!(s.len(), 5);
        assert!(Segment::progression(3, 4, 18).is_err());
        assert!(Segment::progression(3, -4, 7).is_err());
    }
}
