//! Distributions of consecutive patterns of length 3 over `S_n(3-1-2)`.
//!
//! The triangle `a(n, k)` (avoiders of length `n` with exactly `k` windows
//! matching the pattern) is computed four ways: closed-form coefficient
//! sums, a dynamic program over Dyck paths driven by a marked automaton,
//! series expansion of the bivariate generating function, and direct
//! enumeration.

mod automaton;
mod bfile;
mod brute;
mod closed;
mod dp;
mod numbers;
mod series;
mod table;

use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::path::Statistic;
use crate::perm::Permutation;

pub use automaton::{build_automaton, MarkedAutomaton};
pub use bfile::{compare_triangle, parse_bfile, BFileEntry, BFileReport};
pub use brute::{
    consecutive_distribution, distribution_brute, joint_distribution,
    monotone_equidistribution_check, JointDistribution, TripleHistogram, DEFAULT_BRUTE_BOUND,
};
pub use closed::{avoider_count, closed_form, closed_row, dudd_free_count};
pub use dp::{distribution_dp, distribution_dp_truncated};
pub use numbers::{binomial, catalan, motzkin};
pub use series::{gf_series, BivariateSeries, ZPoly};
pub use table::{trim_row, DistributionTable};

/// A consecutive pattern of length 3 other than 312.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Pattern {
    P123,
    P132,
    P213,
    P231,
    P321,
}

impl Pattern {
    pub const ALL: [Pattern; 5] = [
        Pattern::P123,
        Pattern::P132,
        Pattern::P213,
        Pattern::P231,
        Pattern::P321,
    ];

    pub fn permutation(self) -> Permutation {
        let values = match self {
            Pattern::P123 => vec![1, 2, 3],
            Pattern::P132 => vec![1, 3, 2],
            Pattern::P213 => vec![2, 1, 3],
            Pattern::P231 => vec![2, 3, 1],
            Pattern::P321 => vec![3, 2, 1],
        };
        Permutation::from_vec_unchecked(values)
    }

    /// The Dyck-path statistic that counts this pattern through K.
    pub fn statistic(self) -> Statistic {
        match self {
            Pattern::P213 => Statistic::Ddu,
            Pattern::P321 => Statistic::Ddd,
            Pattern::P231 => Statistic::Dudd,
            Pattern::P123 => Statistic::DuPlusDu,
            Pattern::P132 => Statistic::Du2PlusDd,
        }
    }

    /// Class representative sharing the same distribution.
    pub fn representative(self) -> Pattern {
        match self {
            Pattern::P123 | Pattern::P321 => Pattern::P321,
            Pattern::P132 | Pattern::P231 => Pattern::P231,
            Pattern::P213 => Pattern::P213,
        }
    }

    /// Image under the induced Deutsch involution on `S_3(3-1-2)`.
    pub fn delta_partner(self) -> Pattern {
        match self {
            Pattern::P123 => Pattern::P321,
            Pattern::P321 => Pattern::P123,
            Pattern::P132 => Pattern::P231,
            Pattern::P231 => Pattern::P132,
            Pattern::P213 => Pattern::P213,
        }
    }

    /// OEIS triangle of the matching Dyck-path statistic.
    pub fn oeis_triangle(self) -> &'static str {
        match self.representative() {
            Pattern::P213 => "A091894",
            Pattern::P321 => "A092107",
            _ => "A116424",
        }
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Pattern::P123 => "123",
            Pattern::P132 => "132",
            Pattern::P213 => "213",
            Pattern::P231 => "231",
            Pattern::P321 => "321",
        })
    }
}

impl FromStr for Pattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.trim() {
            "123" => Ok(Pattern::P123),
            "132" => Ok(Pattern::P132),
            "213" => Ok(Pattern::P213),
            "231" => Ok(Pattern::P231),
            "321" => Ok(Pattern::P321),
            other => Err(Error::UnknownPattern(other.to_string())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pattern_parsing() {
        for p in Pattern::ALL {
            assert_eq!(p.to_string().parse::<Pattern>().unwrap(), p);
            assert_eq!(p.permutation().to_string().replace(' ', ""), p.to_string());
            assert_eq!(p.delta_partner().delta_partner(), p);
        }
        assert!(matches!("312".parse::<Pattern>(), Err(Error::UnknownPattern(_))));
    }
}
