//! Necessary conditions on length lists.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::list::LengthList;

/// A divisor `d` of `v` for which more than `v - d` elements of the list are
/// multiples of `d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub divisor: u32,
    pub multiples: u32,
    pub bound: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionB {
    pub holds: bool,
    pub witness: Option<Witness>,
}

/// For every divisor `d` of `v = |L| + 1` (including `1` and `v`), the
/// number of multiples of `d` in `L` must not exceed `v - d`. Returns the
/// smallest violating divisor as witness.
pub fn condition_b(list: &LengthList) -> Result<ConditionB> {
    let v = list.order();
    let half = v / 2;
    if let Some(m) = list.max_length().filter(|&m| m > half) {
        return Err(Error::invalid(format!(
            "length {m} exceeds floor(v/2)={half} for v={v}"
        )));
    }
    for d in (1..=v).filter(|d| v % d == 0) {
        let multiples: u32 = list.iter().filter(|(l, _)| l % d == 0).map(|(_, c)| c).sum();
        if multiples > v - d {
            return Ok(ConditionB {
                holds: false,
                witness: Some(Witness {
                    divisor: d,
                    multiples,
                    bound: v - d,
                }),
            });
        }
    }
    Ok(ConditionB {
        holds: true,
        witness: None,
    })
}

/// `a_i + i - 1 <= |L|` for every length `i` present; necessary for a
/// linear realization to exist.
pub fn linear_feasibility(list: &LengthList) -> bool {
    let size = list.size() as u64;
    list.iter().all(|(l, c)| c as u64 + l as u64 - 1 <= size)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn list(s: &str) -> LengthList {
        s.parse().unwrap()
    }

    #[test]
    fn condition_b_examples() {
        assert!(condition_b(&list("1^2,2^2,4^5")).unwrap().holds);

        let r = condition_b(&list("1,2,4^5")).unwrap();
        assert_eq!(
            r.witness,
            Some(Witness { divisor: 4, multiples: 5, bound: 4 })
        );

        // a + b = 5 = t - 1: the bound is met with equality.
        assert!(condition_b(&list("1,2^4,6^6")).unwrap().holds);
        let r = condition_b(&list("1,2^3,6^7")).unwrap();
        assert_eq!(
            r.witness,
            Some(Witness { divisor: 6, multiples: 7, bound: 6 })
        );
    }

    #[test]
    fn condition_b_reports_smallest_divisor() {
        // v = 12: all lengths even, d = 2 allows 10.
        let r = condition_b(&list("2^5,4^6")).unwrap();
        assert_eq!(r.witness.unwrap().divisor, 2);
    }

    #[test]
    fn condition_b_rejects_long_lengths() {
        assert!(matches!(
            condition_b(&list("1,2,8")),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn linear_feasibility_examples() {
        assert!(!linear_feasibility(&list("4^5")));
        assert!(linear_feasibility(&list("1^3,2^4,8^3")));
        for t in (4..=16).step_by(2) {
            for a in 1..t {
                let b = t - 1 - a;
                if b == 0 {
                    continue;
                }
                assert!(linear_feasibility(&LengthList::triple(a, b, 7, t)));
            }
            assert!(!linear_feasibility(&LengthList::triple(1, t - 3, 7, t)));
        }
    }
}
