//! Cyclic rows for `t` in `{4, 6, 8}` and `a + b <= t - 2`. Each row
//! realizes `{1^a, 2^b, t^(tk+d)}` for every `k >= 0`.

use super::template::{Params, Template};
use super::{Declared, Family, Range, Role};
use crate::error::Result;
use crate::realization::{Kind, Vertex};

pub(crate) struct Row {
    pub t: u32,
    pub a: u32,
    pub b: u32,
    /// `c = tk + d`; `d` may exceed `t`.
    pub d: u32,
    /// Row as printed.
    pub printed: &'static str,
    /// Single-token correction `(printed, corrected)` for rows whose printed
    /// form does not verify.
    pub fix: Option<(&'static str, &'static str)>,
}

const fn row(t: u32, a: u32, b: u32, d: u32, printed: &'static str) -> Row {
    Row { t, a, b, d, printed, fix: None }
}

const fn fixed(r: Row, from: &'static str, to: &'static str) -> Row {
    Row { fix: Some((from, to)), ..r }
}

impl Row {
    pub fn source(&self) -> String {
        match self.fix {
            Some((from, to)) => self.printed.replacen(from, to, 1),
            None => self.printed.to_string(),
        }
    }
}

pub(crate) const ROWS: &[Row] = &[
    row(4, 1, 1, 6, "0 > 4k+8, 3 > 4k+7, 4k+5 > 1, 2 > 4k+6"),
    row(4, 1, 1, 7, "0 > 4k+8, 2 > 4k+6, 4k+7 > 3, 1 > 4k+9"),
    row(4, 1, 1, 8, "0 > 4k+8, 1 > 4k+9, 4k+7 > 3, 2 > 4k+10"),
    row(6, 1, 1, 10, "0 > 6k+12, 5 > 6k+11, 4 > 6k+10, 3 > 6k+9, 6k+7 > 1, 2 > 6k+8"),
    row(6, 1, 1, 11, "0 > 6k+12, 4 > 6k+10, 2 > 6k+8, 6k+9 > 3, 1 > 6k+13, 5 > 6k+11"),
    row(6, 1, 1, 12, "0 > 6k+12, 3 > 6k+9, 6k+10 > 4, 6k+13 > 1, 6k+14 > 2, 6k+11 > 5"),
    row(6, 1, 1, 13, "0 > 6k+12, 2 > 6k+14, 4 > 6k+10, 6k+11 > 5, 6k+15 > 3, 1 > 6k+13"),
    row(6, 1, 1, 14, "0 > 6k+12, 1 > 6k+13, 6k+11 > 5, 6k+16 > 4, 6k+15 > 3, 2 > 6k+14"),
    row(6, 1, 2, 9, "0 > 6k+12, 5 > 6k+11, 4 > 6k+10, 6k+8 > 2, 1 > 6k+7, 6k+9 > 3"),
    row(6, 1, 2, 10, "0 > 6k+12, 4 > 6k+10, 2 > 6k+8, 6k+9 > 3, 1 > 6k+13, 6k+11 > 5"),
    row(6, 1, 2, 11, "0 > 6k+12, 3 > 6k+9, 6k+10 > 4, 2 > 6k+14, 5 > 6k+11, 6k+13 > 1"),
    row(6, 1, 2, 12, "0 > 6k+12, 2 > 6k+14, 4 > 6k+10, 6k+11 > 5, 3 > 6k+15, 1 > 6k+13"),
    row(6, 1, 2, 13, "0 > 6k+12, 1 > 6k+13, 6k+11 > 5, 6k+16 > 4, 2 > 6k+14, 6k+15 > 3"),
    row(6, 1, 3, 8, "0 > 6k+12, 5 > 6k+11, 6k+9 > 3, 1 > 6k+7, 6k+8 > 2, 4 > 6k+10"),
    row(6, 1, 3, 9, "0 > 6k+12, 4 > 6k+10, 6k+8 > 2, 1 > 6k+13, 6k+11 > 5, 3 > 6k+9"),
    row(6, 1, 3, 10, "0 > 6k+12, 3 > 6k+9, 6k+10 > 4, 2 > 6k+14, 1 > 6k+13, 6k+11 > 5"),
    row(6, 1, 3, 11, "0 > 6k+12, 2 > 6k+14, 4 > 6k+10, 6k+11 > 5, 7 > 6k+13, 6k+15 > 3, 1"),
    row(6, 1, 3, 12, "0 > 6k+12, 1 > 6k+13, 6k+11 > 5, 3 > 6k+15, 6k+14 > 2, 4 > 6k+16"),
    row(6, 2, 1, 9, "0 > 6k+12, 5 > 6k+11, 4 > 6k+10, 6k+9 > 3, 1 > 6k+7, 6k+8 > 2"),
    row(6, 2, 1, 10, "0 > 6k+12, 4 > 6k+10, 6k+11 > 5, 6k+13 > 1, 3 > 6k+9, 6k+8 > 2"),
    fixed(
        row(6, 2, 1, 11, "0 > 6k+12, 3 > 6k+9, 6k+11 > 5, 4 > 6k+10, 1 > 6k+13, 16k+14 > 2"),
        "16k+14",
        "6k+14",
    ),
    row(6, 2, 1, 12, "0 > 6k+12, 2 > 6k+14, 6k+13 > 1, 3 > 6k+15, 5 > 6k+11, 6k+10 > 4"),
    row(6, 2, 1, 13, "0 > 6k+12, 1 > 6k+13, 6k+11 > 5, 4 > 6k+16, 6k+15 > 3, 6k+14 > 2"),
    row(6, 2, 2, 8, "0 > 6k+12, 5 > 6k+11, 6k+9 > 3, 4 > 6k+10, 6k+8 > 2, 1 > 6k+7"),
    row(6, 2, 2, 9, "0 > 6k+12, 4 > 6k+10, 6k+9 > 3, 5 > 6k+11, 6k+13 > 1, 2 > 6k+8"),
    row(6, 2, 2, 10, "0 > 6k+12, 3 > 6k+9, 6k+10 > 4, 5 > 6k+11, 6k+13 > 1, 6k+14 > 2"),
    row(6, 2, 2, 11, "0 > 6k+12, 2 > 6k+14, 6k+15 > 3, 1 > 6k+13, 6k+11 > 5, 4 > 6k+10"),
    row(6, 2, 2, 12, "0 > 6k+12, 1 > 6k+13, 6k+14 > 2, 4 > 6k+16, 6k+15 > 3, 5 > 6k+11"),
    row(6, 3, 1, 8, "0 > 6k+12, 5 > 6k+11, 6k+10 > 4, 3 > 6k+9, 6k+7 > 1, 2 > 6k+8"),
    row(6, 3, 1, 9, "0 > 6k+12, 4 > 6k+10, 6k+11 > 5, 3 > 6k+9, 6k+8 > 2, 1 > 6k+13"),
    row(6, 3, 1, 10, "0 > 6k+12, 3 > 6k+9, 6k+10 > 4, 5 > 6k+11, 6k+13 > 1, 2 > 6k+14"),
    row(6, 3, 1, 11, "0 > 6k+12, 2 > 6k+14, 6k+13 > 1, 6k+15 > 3, 4 > 6k+10, 6k+11 > 5"),
    row(6, 3, 1, 12, "0 > 6k+12, 1 > 6k+13, 6k+11 > 5, 4 > 6k+16, 6k+15 > 3, 2 > 6k+14"),
    row(8, 1, 1, 14, "0 > 8k+16, 7 > 8k+15, 6 > 8k+14, 5 > 8k+13, 4 > 8k+12, 3 > 8k+11, 8k+9 > 1, 2 > 8k+10"),
    row(8, 1, 1, 15, "0 > 8k+16, 6 > 8k+14, 4 > 8k+12, 2 > 8k+10, 8k+11 > 3, 1 > 8k+17, 7 > 8k+15, 5 > 8k+13"),
    row(8, 1, 1, 16, "0 > 8k+16, 5 > 8k+13, 2 > 8k+18, 1 > 8k+17, 6 > 8k+14, 3 > 8k+11, 8k+12 > 4, 8k+15 > 7"),
    row(8, 1, 1, 18, "0 > 8k+16, 3 > 8k+19, 6 > 8k+14, 1 > 8k+17, 4 > 8k+12, 8k+13 > 5, 8k+18, 8k+20, 7 > 8k+15, 2 > 8k+10"),
    row(8, 1, 1, 19, "0 > 8k+16, 2 > 8k+18, 4 > 8k+20, 6 > 8k+14, 8k+15 > 7, 8k+21 > 5, 8k+19 > 3, 1 > 8k+17"),
    row(8, 1, 1, 20, "0 > 8k+16, 1 > 8k+17, 2 > 8k+18, 3 > 8k+19, 4 > 8k+20, 5 > 8k+5, 8k+6 > 6, 8k+21, 8k+13, 8k+15 > 7, 8k+22, 8k+14"),
    row(8, 1, 2, 13, "0 > 8k+16, 7 > 8k+15, 6 > 8k+14, 5 > 8k+13, 4 > 8k+12, 8k+10 > 2, 3 > 8k+11, 8k+9 > 1"),
    row(8, 1, 2, 14, "0 > 8k+16, 6 > 8k+14, 4 > 8k+12, 8k+10 > 2, 1 > 8k+17, 7 > 8k+15, 5 > 8k+13, 8k+11 > 3"),
    row(8, 1, 2, 15, "0 > 8k+16, 5 > 8k+13, 8k+15 > 7, 8k+18 > 2, 4 > 8k+12, 8k+11 > 3, 8k+14 > 6, 8k+17 > 1"),
    row(8, 1, 2, 16, "0 > 8k+16, 4 > 8k+12, 8k+14 > 6, 8k+18 > 2, 3 > 8k+19, 7 > 8k+15, 8k+13 > 5, 8k+17 > 1"),
    row(8, 1, 2, 17, "0 > 8k+16, 3 > 8k+19, 6 > 8k+14, 8k+13 > 5, 7 > 8k+15, 2 > 8k+18, 8k+20 > 4, 8k+17 > 1"),
    row(8, 1, 2, 18, "0 > 8k+16, 2 > 8k+18, 4 > 8k+20, 6 > 8k+14, 8k+13 > 5, 7 > 8k+15, 1 > 8k+17, 3 > 8k+19, 8k+21"),
    row(8, 1, 2, 19, "0 > 8k+16, 1 > 8k+17, 2 > 8k+18, 3 > 8k+19, 4 > 8k+20, 8k+21, 6 > 8k+22, 7, 5 > 8k+13, 8k+15 > 15"),
    row(8, 1, 3, 12, "0 > 8k+16, 7 > 8k+15, 6 > 8k+14, 5 > 8k+13, 8k+11 > 3, 1 > 8k+9, 8k+10 > 2, 4 > 8k+12"),
    row(8, 1, 3, 13, "0 > 8k+16, 6 > 8k+14, 4 > 8k+12, 2 > 8k+10, 8k+11 > 3, 1 > 8k+17, 8k+15 > 7, 5 > 8k+13"),
    row(8, 1, 3, 14, "0 > 8k+16, 5 > 8k+13, 2 > 8k+18, 7 > 8k+15, 8k+17 > 1, 3 > 8k+11, 8k+12 > 4, 6 > 8k+14"),
    row(8, 1, 3, 15, "0 > 8k+16, 4 > 8k+12, 8k+14 > 6, 8k+18 > 2, 1 > 8k+17, 8k+19 > 3, 8k+15 > 7, 5 > 8k+13"),
    row(8, 1, 3, 16, "0 > 8k+16, 3 > 8k+19, 6 > 8k+14, 1 > 8k+17, 8k+18 > 2, 4 > 8k+20, 7, 5 > 8k+13, 8k+15 > 15"),
    row(8, 1, 3, 17, "0 > 8k+16, 2 > 8k+18, 4 > 8k+20, 6 > 8k+14, 8k+13 > 5, 8k+19, 8k+21, 7 > 8k+15, 8k+17 > 1, 3 > 8k+11"),
    row(8, 1, 3, 18, "0 > 8k+16, 1 > 8k+17, 2 > 8k+18, 3 > 8k+19, 4 > 8k+20, 8k+22, 7, 5, 13, 15 > 8k+15, 8k+14 > 6, 8k+21 > 21"),
    row(8, 1, 4, 11, "0 > 8k+16, 7 > 8k+15, 6 > 8k+14, 8k+12 > 4, 2 > 8k+10, 8k+9 > 1, 3 > 8k+11, 8k+13 > 5"),
    row(8, 1, 4, 12, "0 > 8k+16, 6 > 8k+14, 4 > 8k+12, 8k+10 > 2, 1 > 8k+17, 8k+15 > 7, 5 > 8k+13, 8k+11 > 3"),
    row(8, 1, 4, 13, "0 > 8k+16, 5 > 8k+13, 2 > 8k+18, 7 > 8k+15, 8k+17 > 1, 3 > 8k+11, 8k+12, 8k+14 > 6, 4 > 8k+4"),
    row(8, 1, 4, 14, "0 > 8k+16, 4 > 8k+12, 8k+14 > 6, 8k+18 > 2, 1 > 8k+17, 8k+19, 7 > 8k+15, 8k+13 > 5, 3 > 8k+11"),
    row(8, 1, 4, 15, "0 > 8k+16, 3 > 8k+19, 6 > 8k+14, 1 > 8k+17, 8k+15 > 7, 5 > 8k+13, 8k+12 > 4, 2 > 8k+18, 8k+20"),
    row(8, 1, 4, 16, "0 > 8k+16, 2 > 8k+18, 4 > 8k+20, 6 > 8k+14, 8k+13 > 5, 7 > 8k+15, 1 > 8k+9, 8k+11 > 3, 8k+17, 8k+19, 8k+21"),
    row(8, 1, 4, 17, "0 > 8k+16, 1 > 8k+17, 2 > 8k+18, 8k+20 > 4, 3 > 8k+19, 8k+21, 6 > 8k+22, 7, 5 > 8k+13, 8k+15 > 15"),
    row(8, 1, 5, 10, "0 > 8k+16, 7 > 8k+15, 6 > 8k+14, 8k+12 > 4, 2 > 8k+10, 8k+9 > 1, 3, 5 > 8k+13, 8k+11 > 11"),
    row(8, 1, 5, 11, "0 > 8k+16, 6 > 8k+14, 4 > 8k+12, 2 > 8k+10, 8k+9 > 1, 3 > 8k+11, 8k+13, 8k+15, 8k+17, 7 > 8k+7, 8k+5 > 5"),
    row(8, 1, 5, 12, "0 > 8k+16, 5 > 8k+13, 2 > 8k+10, 8k+12 > 4, 6 > 8k+14, 3 > 8k+11, 8k+9 > 1, 8k+18, 8k+17, 8k+15 > 7"),
    row(8, 1, 5, 13, "0 > 8k+16, 4 > 8k+12, 8k+14 > 6, 8k+18 > 2, 3 > 8k+11, 8k+9 > 1, 8k+13 > 5, 7 > 8k+15, 8k+17, 8k+19"),
    row(8, 1, 5, 14, "0 > 8k+16, 3 > 8k+19, 6 > 8k+14, 1 > 8k+17, 4, 2 > 8k+10, 8k+12 > 12, 13 > 8k+13, 8k+15 > 7, 5, 8k+18, 8k+20"),
    row(8, 1, 5, 15, "0 > 8k+16, 2 > 8k+18, 4 > 8k+20, 6 > 8k+14, 8k+15 > 7, 9 > 8k+17, 8k+19, 5 > 8k+13, 8k+11 > 3, 1, 8k+21"),
    row(8, 1, 5, 16, "0 > 8k+16, 1 > 8k+17, 2 > 8k+18, 8k+20 > 4, 6 > 8k+6, 8k+5 > 5, 3 > 8k+19, 8k+21, 8k+13, 8k+15 > 7, 8k+22, 8k+14"),
    row(8, 2, 1, 13, "0 > 8k+16, 7 > 8k+15, 6 > 8k+14, 5 > 8k+13, 4 > 8k+12, 3 > 8k+11, 8k+9, 8k+10 > 2, 1 > 8k+1"),
    row(8, 2, 1, 14, "0 > 8k+16, 6 > 8k+14, 4 > 8k+12, 8k+13 > 5, 8k+15 > 7, 8k+17 > 1, 3 > 8k+11, 8k+10 > 2"),
    row(8, 2, 1, 15, "0 > 8k+16, 5 > 8k+13, 8k+15 > 7, 8k+18 > 2, 1 > 8k+17, 6 > 8k+14, 3 > 8k+11, 8k+12 > 4"),
    row(8, 2, 1, 16, "0 > 8k+16, 4 > 8k+12, 8k+13 > 5, 8k+17 > 1, 3 > 8k+19, 7 > 8k+15, 8k+14 > 6, 8k+18 > 2"),
    row(8, 2, 1, 17, "0 > 8k+16, 3 > 8k+19, 6 > 8k+14, 1 > 8k+17, 8k+18 > 2, 8k+15, 8k+13 > 5, 4 > 8k+20, 7 > 8k+7"),
    row(8, 2, 1, 18, "0 > 8k+16, 2 > 8k+18, 8k+19 > 3, 8k+17 > 1, 8k+15 > 7, 8k+21 > 5, 4 > 8k+12, 8k+14 > 6, 8k+20"),
    row(8, 2, 1, 19, "0 > 8k+16, 1 > 8k+17, 2 > 8k+18, 3 > 8k+19, 4 > 8k+20, 8k+22, 7 > 8k+15, 8k+14 > 6, 5 > 8k+21"),
    row(8, 2, 2, 12, "0 > 8k+16, 7 > 8k+15, 6 > 8k+14, 5 > 8k+13, 8k+12 > 4, 2 > 8k+10, 8k+11 > 3, 1 > 8k+9"),
    row(8, 2, 2, 13, "0 > 8k+16, 6 > 8k+14, 4 > 8k+12, 8k+13 > 5, 8k+15 > 7, 8k+17, 1 > 8k+9, 8k+11 > 3, 2 > 8k+10"),
    row(8, 2, 2, 14, "0 > 8k+16, 5 > 8k+13, 8k+15 > 7, 8k+18 > 2, 1 > 8k+17, 6 > 8k+14, 8k+12 > 4, 3 > 8k+11"),
    row(8, 2, 2, 15, "0 > 8k+16, 4 > 8k+12, 8k+14 > 6, 5 > 8k+13, 1 > 8k+17, 8k+15 > 7, 8k+19 > 3, 2 > 8k+18"),
    row(8, 2, 2, 16, "0 > 8k+16, 3 > 8k+19, 6 > 8k+14, 1 > 8k+17, 8k+18 > 10, 12 > 8k+20, 7 > 8k+15, 2, 4, 5 > 8k+13"),
    row(8, 2, 2, 17, "0 > 8k+16, 2 > 8k+18, 4 > 8k+20, 8k+19 > 3, 8k+17 > 1, 8k+21, 7 > 8k+15, 8k+13 > 5, 6 > 8k+14"),
    row(8, 2, 2, 18, "0 > 8k+16, 1 > 8k+17, 2 > 8k+18, 8k+20 > 4, 8k+19 > 3, 5, 6, 8k+21 > 13, 14 > 8k+22, 7 > 8k+15"),
    row(8, 2, 3, 11, "0 > 8k+16, 7 > 8k+15, 6 > 8k+14, 5 > 8k+13, 8k+12 > 4, 2 > 8k+10, 8k+11, 8k+9 > 1, 3 > 8k+3"),
    row(8, 2, 3, 12, "0 > 8k+16, 6 > 8k+14, 4 > 8k+12, 8k+13 > 5, 8k+15 > 7, 9 > 8k+17, 1, 3 > 8k+11, 8k+10 > 2"),
    row(8, 2, 3, 13, "0 > 8k+16, 5 > 8k+13, 8k+15 > 7, 8k+18 > 2, 1 > 8k+9, 8k+11 > 3, 4 > 8k+12, 8k+14 > 6, 8k+17"),
    row(8, 2, 3, 14, "0 > 8k+16, 4 > 8k+12, 8k+14 > 6, 5 > 8k+13, 8k+15 > 7, 8k+19 > 3, 1 > 8k+17, 8k+18 > 2"),
    row(8, 2, 3, 15, "0 > 8k+16, 3 > 8k+19, 8k+17 > 1, 2 > 8k+18, 5 > 8k+13, 8k+15, 8k+14 > 6, 4 > 8k+20, 7 > 8k+7"),
    row(8, 2, 3, 16, "0 > 8k+16, 2 > 8k+18, 4 > 8k+20, 8k+19 > 3, 5 > 8k+21, 1 > 8k+17, 8k+15 > 7, 6 > 8k+14"),
    row(8, 2, 3, 17, "0 > 8k+16, 1 > 8k+17, 8k+15 > 7, 5 > 8k+21, 8k+22 > 6, 4 > 8k+20, 8k+19 > 3, 8k+18 > 2"),
    row(8, 2, 4, 10, "0 > 8k+16, 7 > 8k+15, 6 > 8k+14, 5 > 8k+13, 8k+11 > 3, 1, 2, 4 > 8k+12, 8k+10 > 10, 9 > 8k+9"),
    row(8, 2, 4, 11, "0 > 8k+16, 6 > 8k+14, 4 > 8k+12, 8k+13 > 5, 7 > 8k+15, 8k+17, 1 > 8k+9, 8k+11 > 3, 2 > 8k+10"),
    row(8, 2, 4, 12, "0 > 8k+16, 5 > 8k+13, 8k+15 > 7, 8k+18 > 2, 1, 3, 8k+14 > 6, 4 > 8k+12, 8k+11 > 11, 9 > 8k+17"),
    row(8, 2, 4, 13, "0 > 8k+16, 4 > 8k+12, 8k+13 > 5, 7 > 8k+15, 3 > 8k+11, 8k+9 > 1, 8k+19, 8k+17, 8k+18, 6 > 8k+14, 2 > 8k+10"),
    row(8, 2, 4, 14, "0 > 8k+16, 3 > 8k+19, 8k+17 > 1, 2 > 8k+18, 8k+20 > 4, 6 > 8k+14, 8k+15 > 7, 5 > 8k+13"),
    row(8, 2, 4, 15, "0 > 8k+16, 2 > 8k+18, 8k+20 > 4, 5 > 8k+21, 8k+19 > 11, 9 > 8k+17, 3, 1, 8k+15 > 7, 6 > 8k+14"),
    row(8, 2, 4, 16, "0 > 8k+16, 1 > 8k+17, 8k+15 > 7, 5 > 8k+21, 8k+22 > 6, 4 > 8k+20, 8k+18 > 2, 3 > 8k+19"),
    row(8, 3, 1, 12, "0 > 8k+16, 7 > 8k+15, 6 > 8k+14, 5 > 8k+13, 8k+12 > 4, 3 > 8k+11, 8k+9 > 1, 2 > 8k+10"),
    row(8, 3, 1, 13, "0 > 8k+16, 6 > 8k+14, 4 > 8k+12, 8k+13 > 5, 8k+15 > 7, 8k+17, 1 > 8k+9, 8k+10 > 2, 3 > 8k+11"),
    row(8, 3, 1, 14, "0 > 8k+16, 5 > 8k+13, 8k+15 > 7, 8k+18 > 2, 1 > 8k+17, 6 > 8k+14, 3, 4 > 8k+12, 8k+11 > 11"),
    row(8, 3, 1, 15, "0 > 8k+16, 4 > 8k+12, 8k+14 > 6, 5 > 8k+13, 1 > 8k+17, 8k+18 > 2, 3 > 8k+19, 7 > 8k+15"),
    row(8, 3, 1, 16, "0 > 8k+16, 3 > 8k+19, 8k+18 > 2, 1 > 8k+17, 4 > 8k+20, 7 > 8k+15, 8k+13 > 5, 6 > 8k+14"),
    row(8, 3, 1, 17, "0 > 8k+16, 2 > 8k+18, 4 > 8k+20, 8k+19 > 3, 8k+17 > 1, 8k+21 > 5, 6 > 8k+14, 8k+15 > 7"),
    row(8, 3, 1, 18, "0 > 8k+16, 1 > 8k+17, 2 > 8k+18, 3 > 8k+19, 4 > 8k+20, 8k+21, 8k+22 > 6, 7 > 8k+15, 8k+13 > 5"),
    row(8, 3, 2, 11, "0 > 8k+16, 7 > 8k+15, 6 > 8k+14, 8k+13 > 5, 4 > 8k+12, 8k+10 > 2, 3 > 8k+11, 8k+9 > 1"),
    row(8, 3, 2, 12, "0 > 8k+16, 6 > 8k+14, 4 > 8k+12, 8k+13 > 5, 3 > 8k+11, 8k+10 > 2, 1 > 8k+17, 8k+15 > 7"),
    row(8, 3, 2, 13, "0 > 8k+16, 5 > 8k+13, 8k+15 > 7, 8k+18 > 2, 1 > 8k+17, 6 > 8k+14, 8k+12, 8k+11 > 3, 4 > 8k+4"),
    row(8, 3, 2, 14, "0 > 8k+16, 4 > 8k+12, 8k+14 > 6, 5 > 8k+13, 1 > 8k+17, 8k+15 > 7, 8k+19, 8k+18 > 2, 3 > 8k+11"),
    row(8, 3, 2, 15, "0 > 8k+16, 3 > 8k+19, 8k+17 > 1, 2 > 8k+18, 5 > 8k+13, 8k+12 > 4, 6 > 8k+14, 8k+15 > 7, 8k+20"),
    row(8, 3, 2, 16, "0 > 8k+16, 2 > 8k+18, 4 > 8k+20, 8k+19 > 3, 8k+17 > 1, 8k+21 > 5, 7, 6 > 8k+14, 8k+15 > 15"),
    row(8, 3, 2, 17, "0 > 8k+16, 1 > 8k+17, 2 > 8k+18, 8k+20 > 4, 8k+19 > 3, 5 > 8k+13, 8k+14, 8k+15 > 7, 8k+22, 8k+21, 6 > 8k+6"),
    row(8, 3, 3, 10, "0 > 8k+16, 7 > 8k+15, 6 > 8k+14, 8k+13 > 5, 4 > 8k+12, 8k+10 > 2, 3, 1 > 8k+9, 8k+11 > 11"),
    row(8, 3, 3, 11, "0 > 8k+16, 6 > 8k+14, 4 > 8k+12, 8k+13 > 5, 3 > 8k+11, 1, 2 > 8k+10, 8k+9 > 9, 7 > 8k+15, 8k+17"),
    row(8, 3, 3, 12, "0 > 8k+16, 5 > 8k+13, 8k+15 > 7, 8k+18 > 2, 1 > 8k+17, 6 > 8k+6, 8k+4 > 4, 3 > 8k+11, 8k+12, 8k+14"),
    row(8, 3, 3, 13, "0 > 8k+16, 4 > 8k+12, 8k+14 > 6, 5 > 8k+13, 8k+15 > 7, 8k+19, 1 > 8k+17, 8k+18 > 2, 3 > 8k+11"),
    row(8, 3, 3, 14, "0 > 8k+16, 3 > 8k+19, 8k+17 > 1, 2 > 8k+18, 8k+20 > 4, 5 > 8k+13, 8k+15 > 7, 6 > 8k+14"),
    row(8, 3, 3, 15, "0 > 8k+16, 2 > 8k+18, 4 > 8k+20, 8k+19 > 3, 5 > 8k+13, 8k+14 > 6, 7 > 8k+15, 8k+17 > 1, 8k+21"),
    row(8, 3, 3, 16, "0 > 8k+16, 1 > 8k+17, 2 > 8k+18, 8k+20 > 4, 3 > 8k+19, 8k+21, 8k+22, 7 > 8k+15, 8k+13 > 5, 6 > 8k+14"),
    row(8, 4, 1, 11, "0 > 8k+16, 7 > 8k+15, 6 > 8k+14, 5 > 8k+13, 8k+12 > 4, 3 > 8k+11, 8k+9, 8k+10 > 2, 1 > 8k+1"),
    row(8, 4, 1, 12, "0 > 8k+16, 6 > 8k+14, 4 > 8k+12, 8k+13 > 5, 8k+15 > 7, 8k+17 > 9, 10 > 8k+10, 8k+11 > 3, 1, 2"),
    row(8, 4, 1, 13, "0 > 8k+16, 5 > 8k+13, 8k+14 > 6, 7 > 8k+15, 4 > 8k+12, 1 > 8k+9, 8k+11 > 3, 2 > 8k+18, 8k+17"),
    row(8, 4, 1, 14, "0 > 8k+16, 4 > 8k+12, 8k+14 > 6, 5 > 8k+13, 1 > 8k+17, 8k+18, 8k+19, 7 > 8k+15, 3 > 8k+11, 8k+10 > 2"),
    row(8, 4, 1, 15, "0 > 8k+16, 3 > 8k+19, 8k+18 > 2, 1 > 8k+17, 8k+15 > 7, 8k+20 > 4, 5 > 8k+13, 8k+14 > 6"),
    row(8, 4, 1, 16, "0 > 8k+16, 2 > 8k+18, 4 > 8k+20, 8k+19 > 3, 8k+17 > 1, 8k+21 > 5, 6, 7 > 8k+15, 8k+14 > 14"),
    row(8, 4, 1, 17, "0 > 8k+16, 1 > 8k+17, 2 > 8k+18, 3 > 8k+19, 4 > 8k+12, 8k+13 > 5, 6 > 8k+14, 8k+15 > 7, 8k+22, 8k+20, 8k+21"),
    row(8, 4, 2, 10, "0 > 8k+16, 7 > 8k+15, 6 > 8k+14, 5 > 8k+5, 8k+4 > 4, 2 > 8k+10, 8k+9 > 1, 3 > 8k+11, 8k+12, 8k+13"),
    row(8, 4, 2, 11, "0 > 8k+16, 6 > 8k+14, 4 > 8k+12, 8k+13 > 5, 8k+15 > 7, 8k+17, 1 > 8k+1, 8k+2 > 2, 3 > 8k+11, 8k+9, 8k+10"),
    row(8, 4, 2, 12, "0 > 8k+16, 5 > 8k+13, 8k+14 > 6, 7 > 8k+15, 4 > 8k+12, 1, 3, 2 > 8k+18, 8k+17 > 9, 11 > 8k+11"),
    row(8, 4, 2, 13, "0 > 8k+16, 4 > 8k+12, 8k+14 > 6, 5 > 8k+13, 1 > 8k+17, 8k+15 > 7, 8k+19, 8k+18, 8k+10, 8k+11 > 3, 2 > 8k+2"),
    row(8, 4, 2, 14, "0 > 8k+16, 3 > 8k+19, 8k+17 > 1, 2 > 8k+18, 8k+20 > 4, 5 > 8k+13, 8k+14 > 6, 7 > 8k+15"),
    row(8, 4, 2, 15, "0 > 8k+16, 2 > 8k+18, 4 > 8k+20, 8k+19 > 3, 8k+17 > 1, 8k+21 > 13, 14 > 8k+14, 8k+15 > 7, 5, 6"),
    row(8, 4, 2, 16, "0 > 8k+16, 1 > 8k+17, 2 > 8k+18, 8k+20 > 4, 8k+19 > 3, 5 > 8k+5, 8k+6 > 6, 7 > 8k+15, 8k+14, 8k+22, 8k+21, 8k+13"),
    row(8, 5, 1, 10, "0 > 8k+16, 7 > 8k+15, 6 > 8k+14, 8k+13 > 5, 4 > 8k+12, 8k+11, 2 > 8k+2, 8k+3 > 3, 1 > 8k+9, 8k+10"),
    row(8, 5, 1, 11, "0 > 8k+16, 6 > 8k+14, 4 > 8k+12, 8k+13 > 5, 8k+15 > 7, 8k+17, 1 > 8k+1, 8k+2 > 2, 3 > 8k+11, 8k+10, 8k+9"),
    row(8, 5, 1, 12, "0 > 8k+16, 5 > 8k+13, 8k+14 > 6, 7 > 8k+15, 4 > 8k+12, 8k+11 > 3, 1, 2 > 8k+18, 8k+17 > 9"),
    row(8, 5, 1, 13, "0 > 8k+16, 4 > 8k+12, 8k+14 > 6, 5 > 8k+13, 1 > 8k+17, 8k+18, 8k+19, 7 > 8k+15, 3, 2 > 8k+10, 8k+11 > 11"),
    row(8, 5, 1, 14, "0 > 8k+16, 3 > 8k+19, 8k+18 > 2, 1 > 8k+17, 8k+15 > 7, 6 > 8k+14, 8k+13 > 5, 4 > 8k+20"),
    row(8, 5, 1, 15, "0 > 8k+16, 2 > 8k+18, 4 > 8k+20, 8k+19 > 3, 8k+17 > 1, 8k+21 > 13, 14 > 8k+14, 8k+15 > 7, 6, 5"),
    row(8, 5, 1, 16, "0 > 8k+16, 1 > 8k+17, 2 > 8k+18, 3 > 8k+19, 4 > 8k+20, 8k+22, 8k+21, 8k+13, 8k+14, 8k+15 > 7, 6 > 8k+6, 8k+5 > 5"),
];

struct TableFamily {
    id: String,
    description: String,
    row: &'static Row,
    template: Template,
    ranges: [(char, Range); 1],
}

impl Family for TableFamily {
    fn id(&self) -> &str {
        &self.id
    }

    fn description(&self) -> &str {
        &self.description
    }

    fn kind(&self) -> Kind {
        Kind::Cyclic
    }

    fn role(&self) -> Role {
        Role::Table
    }

    fn declared(&self) -> Declared {
        Declared::default()
    }

    fn accepts_t(&self, t: u32) -> bool {
        t == self.row.t
    }

    fn ranges(&self) -> &[(char, Range)] {
        &self.ranges
    }

    fn counts(&self, p: &Params) -> Result<(u32, u32, u32)> {
        let k = p.get('k')? as u32;
        Ok((self.row.a, self.row.b, self.row.t * k + self.row.d))
    }

    fn path(&self, p: &Params) -> Result<Vec<Vertex>> {
        self.template.expand(p)
    }

    fn formula(&self) -> String {
        format!("[{}]", self.template.source())
    }
}

pub(crate) fn row_id(r: &Row) -> String {
    let ones = if r.a == 1 { "1".to_string() } else { format!("1^{}", r.a) };
    let twos = if r.b == 1 { "2".to_string() } else { format!("2^{}", r.b) };
    format!("c{{{ones},{twos},{}^({}k+{})}}", r.t, r.t, r.d)
}

pub(super) fn errata() -> Vec<super::Erratum> {
    ROWS.iter()
        .filter_map(|r| {
            r.fix.map(|(from, to)| super::Erratum {
                id: row_id(r),
                printed: r.printed,
                from,
                to,
            })
        })
        .collect()
}

pub(super) fn families() -> Vec<Box<dyn Family>> {
    ROWS.iter()
        .map(|r| {
            let description = match r.fix {
                Some((from, to)) => format!("t = {} table row; printed {from} read as {to}", r.t),
                None => format!("t = {} table row", r.t),
            };
            Box::new(TableFamily {
                id: row_id(r),
                description,
                row: r,
                template: Template::parse(&r.source()).expect("table row"),
                ranges: [('k', Range { lo: |_| 0, hi: None })],
            }) as Box<dyn Family>
        })
        .collect()
}
