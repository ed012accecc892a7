//! Monomial orders.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::monomial::{grevlex, Monomial};

/// A term order. `Elimination(k)` compares the first `k` variables by
/// grevlex and breaks ties with grevlex on the remaining ones.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum MonomialOrder {
    Grevlex,
    Lex,
    Elimination(usize),
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match *self {
            MonomialOrder::Grevlex => grevlex(a.exps(), b.exps()),
            MonomialOrder::Lex => a.exps().cmp(b.exps()),
            MonomialOrder::Elimination(k) => {
                let k = k.min(a.nvars());
                grevlex(&a.exps()[..k], &b.exps()[..k])
                    .then_with(|| grevlex(&a.exps()[k..], &b.exps()[k..]))
            }
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonomialOrder::Grevlex => write!(f, "grevlex"),
            MonomialOrder::Lex => write!(f, "lex"),
            MonomialOrder::Elimination(k) => write!(f, "elim:{k}"),
        }
    }
}

impl FromStr for MonomialOrder {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "grevlex" | "grlex" => Ok(MonomialOrder::Grevlex),
            "lex" => Ok(MonomialOrder::Lex),
            _ => s
                .strip_prefix("elim:")
                .and_then(|k| k.parse().ok())
                .map(MonomialOrder::Elimination)
                .ok_or_else(|| format!("unknown monomial order `{s}`")),
        }
    }
}

impl From<MonomialOrder> for String {
    fn from(o: MonomialOrder) -> String {
        o.to_string()
    }
}

impl TryFrom<String> for MonomialOrder {
    type Error = String;

    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exps(e.to_vec())
    }

    #[test]
    fn lex_prefers_first_variable() {
        let o = MonomialOrder::Lex;
        assert_eq!(o.cmp(&m(&[1, 0, 0]), &m(&[0, 5, 5])), Ordering::Greater);
        assert_eq!(
            MonomialOrder::Grevlex.cmp(&m(&[1, 0, 0]), &m(&[0, 5, 5])),
            Ordering::Less
        );
    }

    #[test]
    fn elimination_block_dominates() {
        let o = MonomialOrder::Elimination(1);
        assert_eq!(o.cmp(&m(&[1, 0, 0]), &m(&[0, 4, 4])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[0, 2, 0]), &m(&[0, 1, 0])), Ordering::Greater);
    }

    #[test]
    fn names_round_trip() {
        for o in [
            MonomialOrder::Grevlex,
            MonomialOrder::Lex,
            MonomialOrder::Elimination(3),
        ] {
            assert_eq!(o.to_string().parse::<MonomialOrder>().unwrap(), o);
        }
    }
}
