//! Certification of lower-bound witnesses.
//!
//! A graph `G` on `N` vertices with no 4-cycle whose complement has no book
//! `B_n` shows `r(C4, B_n) >= N + 1`. Everything is recomputed from adjacency.

use alloc::format;
use core::fmt;

use crate::field::prime_power;
use crate::graph::{BookNumber, Graph};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Failure {
    ContainsC4([usize; 4]),
    ComplementBook { u: usize, v: usize, pages: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Valid,
    Invalid(Failure),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessReport {
    pub order: usize,
    pub claimed_n: usize,
    pub c4: Option<[usize; 4]>,
    pub min_degree: Option<usize>,
    pub book: BookNumber,
    pub verdict: Verdict,
}

impl WitnessReport {
    pub fn is_valid(&self) -> bool {
        self.verdict == Verdict::Valid
    }

    pub fn c4_free(&self) -> bool {
        self.c4.is_none()
    }

    /// The lower bound `N + 1` a valid report certifies.
    pub fn certified_lower(&self) -> Option<usize> {
        self.is_valid().then_some(self.order + 1)
    }
}

/// Stable text form, one `key<TAB>value` line per field.
impl fmt::Display for WitnessReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "order\t{}", self.order)?;
        writeln!(f, "claimed_n\t{}", self.claimed_n)?;
        writeln!(f, "c4_free\t{}", self.c4_free())?;
        match self.min_degree {
            Some(d) => writeln!(f, "min_degree\t{d}")?,
            None => writeln!(f, "min_degree\tnone")?,
        }
        match self.book {
            BookNumber::NoNonEdge => writeln!(f, "book_max\tnone")?,
            BookNumber::Pages { value, .. } => writeln!(f, "book_max\t{value}")?,
        }
        match self.verdict {
            Verdict::Valid => {
                writeln!(f, "verdict\tvalid")?;
                write!(
                    f,
                    "statement\tcertifies r(C4,B{}) >= {}",
                    self.claimed_n,
                    self.order + 1
                )
            }
            Verdict::Invalid(failure) => {
                writeln!(f, "verdict\tinvalid")?;
                write!(f, "failure\t{failure}")
            }
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::ContainsC4([a, b, c, d]) => write!(f, "contains C4 {a}-{b}-{c}-{d}"),
            Failure::ComplementBook { u, v, pages } => write!(
                f,
                "complement contains a book on non-edge {u}-{v} with {pages} pages"
            ),
        }
    }
}

pub fn verify_witness(g: &Graph, n: usize) -> WitnessReport {
    assert!(n >= 1, "book size must be positive");
    let c4 = g.find_c4();
    let book = g.max_book_in_complement();
    let verdict = if let Some(cycle) = c4 {
        Verdict::Invalid(Failure::ContainsC4(cycle))
    } else {
        match book {
            BookNumber::Pages { value, u, v } if value >= n => {
                Verdict::Invalid(Failure::ComplementBook { u, v, pages: value })
            }
            _ => Verdict::Valid,
        }
    };
    WitnessReport {
        order: g.order(),
        claimed_n: n,
        c4,
        min_degree: g.min_degree(),
        book,
        verdict,
    }
}

/// Membership in the family of graphs on `q^2 + q + 3` vertices with no 4-cycle
/// and no `B_{q^2 - q + 1}` in the complement. A wrong order is an error.
pub fn check_gq_membership(g: &Graph, q: u64) -> Result<bool> {
    if q < 3 || prime_power(q).is_none() {
        return Err(Error::OutOfRange(format!("{q} is not a prime power >= 3")));
    }
    let q = q as usize;
    let expected = q * q + q + 3;
    if g.order() != expected {
        return Err(Error::OrderMismatch {
            expected,
            actual: g.order(),
        });
    }
    Ok(verify_witness(g, q * q - q + 1).is_valid())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn simple_verdicts() {
        let r = verify_witness(&Graph::cycle(4), 1);
        assert!(matches!(r.verdict, Verdict::Invalid(Failure::ContainsC4(_))));
        let r = verify_witness(&Graph::new(5), 3);
        assert_eq!(
            r.verdict,
            Verdict::Invalid(Failure::ComplementBook { u: 0, v: 1, pages: 3 })
        );
        // two disjoint triangles: complement is K_{3,3}, triangle-free
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]);
        let r = verify_witness(&g, 1);
        assert!(r.is_valid());
        assert_eq!(r.certified_lower(), Some(7));
        assert!(r.to_string().ends_with("certifies r(C4,B1) >= 7"));
    }

    #[test]
    fn validity_is_monotone_in_n() {
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]);
        let first = (1..10).find(|&n| verify_witness(&g, n).is_valid()).unwrap();
        assert!((first..20).all(|n| verify_witness(&g, n).is_valid()));
    }

    #[test]
    fn gq_membership() {
        assert_eq!(
            check_gq_membership(&Graph::new(5), 3),
            Err(Error::OrderMismatch { expected: 15, actual: 5 })
        );
        assert_eq!(check_gq_membership(&Graph::new(15), 3), Ok(false));
        let mut g = Graph::new(15);
        for (u, v) in [(0, 1), (1, 2), (2, 3), (3, 0)] {
            g.add_edge(u, v);
        }
        assert_eq!(check_gq_membership(&g, 3), Ok(false));
        assert!(check_gq_membership(&g, 6).is_err());
        assert!(check_gq_membership(&g, 2).is_err());
    }
}
