//! Multisets of edge lengths.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A multiset of positive edge lengths, kept as a sorted `length -> count`
/// map with no zero counts. Equality is structural.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LengthList {
    counts: BTreeMap<u32, u32>,
}

impl LengthList {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a list from `(length, count)` pairs. Repeated lengths are summed
    /// and zero counts are dropped.
    pub fn from_pairs<I>(pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (u32, u32)>,
    {
        let mut list = Self::new();
        for (length, count) in pairs {
            if length == 0 {
                return Err(Error::invalid("edge lengths must be positive"));
            }
            list.add(length, count);
        }
        Ok(list)
    }

    /// The list `{1^a, 2^b, t^c}`.
    pub fn triple(a: u32, b: u32, c: u32, t: u32) -> Self {
        let mut list = Self::new();
        list.add(1, a);
        list.add(2, b);
        list.add(t, c);
        list
    }

    pub fn add(&mut self, length: u32, count: u32) {
        assert!(length > 0, "edge lengths must be positive");
        if count > 0 {
            *self.counts.entry(length).or_insert(0) += count;
        }
    }

    /// Removes `count` copies of `length`, failing if fewer are present.
    pub fn remove(&mut self, length: u32, count: u32) -> Result<()> {
        let have = self.count(length);
        if have < count {
            return Err(Error::invalid(format!(
                "cannot remove {count} copies of {length}: only {have} present"
            )));
        }
        if have == count {
            self.counts.remove(&length);
        } else {
            self.counts.insert(length, have - count);
        }
        Ok(())
    }

    pub fn count(&self, length: u32) -> u32 {
        self.counts.get(&length).copied().unwrap_or(0)
    }

    /// `|L|`, the number of elements counted with multiplicity.
    pub fn size(&self) -> u32 {
        self.counts.values().sum()
    }

    /// The order `v = |L| + 1` of the complete graph a realization lives in.
    pub fn order(&self) -> u32 {
        self.size() + 1
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn max_length(&self) -> Option<u32> {
        self.counts.keys().next_back().copied()
    }

    pub fn distinct(&self) -> usize {
        self.counts.len()
    }

    /// `(length, count)` pairs in increasing order of length.
    pub fn iter(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.counts.iter().map(|(&l, &c)| (l, c))
    }

    /// Multiset union.
    pub fn union(&self, other: &LengthList) -> LengthList {
        let mut out = self.clone();
        for (l, c) in other.iter() {
            out.add(l, c);
        }
        out
    }
}

impl fmt::Display for LengthList {
    /// Renders as `1^3,2^4,8^3`, omitting `^1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (l, c) in self.iter() {
            if !first {
                f.write_str(",")?;
            }
            first = false;
            if c == 1 {
                write!(f, "{l}")?;
            } else {
                write!(f, "{l}^{c}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LengthList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{self}}}")
    }
}

impl FromStr for LengthList {
    type Err = Error;

    /// Parses `term ("," term)*` where `term := INT "^" INT | INT`.
    /// Surrounding braces are tolerated.
    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim();
        let body = body
            .strip_prefix('{')
            .and_then(|b| b.strip_suffix('}'))
            .unwrap_or(body);
        let mut list = LengthList::new();
        if body.trim().is_empty() {
            return Ok(list);
        }
        let mut offset = s.len() - s.trim_start().len();
        if s.trim().starts_with('{') {
            offset += 1;
        }
        for term in body.split(',') {
            let lead = term.len() - term.trim_start().len();
            let trimmed = term.trim();
            let (length, count) = match trimmed.split_once('^') {
                Some((l, c)) => (parse_uint(l, offset + lead)?, parse_uint(c, offset + lead)?),
                None => (parse_uint(trimmed, offset + lead)?, 1),
            };
            if length == 0 {
                return Err(Error::parse(offset + lead, "edge lengths must be positive"));
            }
            if count == 0 {
                return Err(Error::parse(offset + lead, "multiplicity must be positive"));
            }
            list.add(length, count);
            offset += term.len() + 1;
        }
        Ok(list)
    }
}

fn parse_uint(text: &str, offset: usize) -> Result<u32> {
    let t = text.trim();
    t.parse::<u32>()
        .map_err(|_| Error::parse(offset, format!("expected a non-negative integer, found {t:?}")))
}

/// Entry of the JSON form of a list.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LengthCount {
    pub length: u32,
    pub count: u32,
}

impl Serialize for LengthList {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = serializer.serialize_seq(Some(self.counts.len()))?;
        for (length, count) in self.iter() {
            seq.serialize_element(&LengthCount { length, count })?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for LengthList {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let entries = Vec::<LengthCount>::deserialize(deserializer)?;
        LengthList::from_pairs(entries.into_iter().map(|e| (e.length, e.count)))
            .map_err(serde::de::Error::custom)
    }
}
