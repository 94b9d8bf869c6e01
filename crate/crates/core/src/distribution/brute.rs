use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::Zero;

use super::table::trim_row;
use super::Pattern;
use crate::error::{Error, Result};
use crate::perm::{count_consecutive, enumerate_avoiders, Permutation};

/// Largest `n` enumerated by default (`C_12 = 208012` avoiders).
pub const DEFAULT_BRUTE_BOUND: usize = 12;

fn check_bound(n: usize, bound: usize) -> Result<()> {
    if n > bound {
        return Err(Error::BoundExceeded { n, bound });
    }
    Ok(())
}

/// Histogram of consecutive occurrences of `pattern` over `S_n(3-1-2)`.
pub fn consecutive_distribution(pattern: &Permutation, n: usize, bound: usize) -> Result<Vec<BigUint>> {
    check_bound(n, bound)?;
    let mut hist = vec![BigUint::zero(); n + 1];
    for sigma in enumerate_avoiders(n) {
        hist[count_consecutive(sigma.values(), pattern)] += 1u32;
    }
    Ok(trim_row(hist))
}

pub fn distribution_brute(pattern: Pattern, n: usize, bound: usize) -> Result<Vec<BigUint>> {
    consecutive_distribution(&pattern.permutation(), n, bound)
}

pub type TripleHistogram = BTreeMap<[usize; 3], BigUint>;

/// Joint histograms of triples of consecutive-pattern counts over `S_n(3-1-2)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JointDistribution {
    pub n: usize,
    /// `(occ321, occ132, occ213)`
    pub occ_321_132_213: TripleHistogram,
    /// `(occ123, occ231, occ213)`
    pub occ_123_231_213: TripleHistogram,
    /// `(occ321, occ231, occ213)`
    pub occ_321_231_213: TripleHistogram,
    /// `(occ123, occ132, occ213)`
    pub occ_123_132_213: TripleHistogram,
}

impl JointDistribution {
    /// Both pairs of triple statistics are equidistributed.
    pub fn equidistributed(&self) -> bool {
        self.occ_321_132_213 == self.occ_123_231_213 && self.occ_321_231_213 == self.occ_123_132_213
    }
}

pub fn joint_distribution(n: usize, bound: usize) -> Result<JointDistribution> {
    check_bound(n, bound)?;
    let [p123, p132, p213, p231, p321] = Pattern::ALL.map(Pattern::permutation);
    let mut out = JointDistribution {
        n,
        occ_321_132_213: BTreeMap::new(),
        occ_123_231_213: BTreeMap::new(),
        occ_321_231_213: BTreeMap::new(),
        occ_123_132_213: BTreeMap::new(),
    };
    for sigma in enumerate_avoiders(n) {
        let occ = |p: &Permutation| count_consecutive(sigma.values(), p);
        let (o123, o132, o213, o231, o321) = (occ(&p123), occ(&p132), occ(&p213), occ(&p231), occ(&p321));
        *out.occ_321_132_213.entry([o321, o132, o213]).or_default() += 1u32;
        *out.occ_123_231_213.entry([o123, o231, o213]).or_default() += 1u32;
        *out.occ_321_231_213.entry([o321, o231, o213]).or_default() += 1u32;
        *out.occ_123_132_213.entry([o123, o132, o213]).or_default() += 1u32;
    }
    Ok(out)
}

/// Whether consecutive `12...k` and `k...21` are equidistributed on `S_n(3-1-2)`.
pub fn monotone_equidistribution_check(k: usize, n: usize, bound: usize) -> Result<bool> {
    if k < 2 {
        return Err(Error::OutOfDomain(format!("monotone pattern length must be at least 2, got {k}")));
    }
    check_bound(n, bound)?;
    let up = consecutive_distribution(&Permutation::increasing(k), n, bound)?;
    let down = consecutive_distribution(&Permutation::decreasing(k), n, bound)?;
    Ok(up == down)
}
