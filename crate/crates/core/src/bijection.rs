//! Bijections between 3-1-2-avoiders, Dyck paths and Motzkin paths.
//!
//! * `krattenthaler` (K): block `m_i w_i` becomes `U^(m_i - m_(i-1)) D^(|w_i| + 1)`.
//! * `delta_hat`: the Deutsch involution transported through K.
//! * `nu`: K followed by `UDD -> D`, `UD -> H`, on avoiders without a 321 window.
//! * `mu`: the recursive map on avoiders without a 123 window,
//!   `σ₁ 1 ↦ μ(σ₁) H` and `σ₁ 1 t σ₂ ↦ μ(σ₁) U μ(σ₂) D`.

use crate::error::{Error, Result};
use crate::path::{count_statistic, deutsch, DyckPath, MotzkinPath, MotzkinStep, Statistic, Step};
use crate::perm::{avoids_312, count_consecutive, ltr_decompose, standardize, Permutation, Word};

pub fn krattenthaler(sigma: &Permutation) -> Result<DyckPath> {
    if !avoids_312(sigma) {
        return Err(Error::NotAvoider);
    }
    let mut steps = Vec::with_capacity(2 * sigma.len());
    let mut previous = 0;
    for block in ltr_decompose(sigma).blocks {
        steps.extend(std::iter::repeat_n(Step::U, (block.max - previous) as usize));
        steps.extend(std::iter::repeat_n(Step::D, block.tail.len() + 1));
        previous = block.max;
    }
    Ok(DyckPath::from_steps_unchecked(steps))
}

/// Inverse of K. Each tail is filled with the largest unused values below
/// its block maximum, in decreasing order.
pub fn krattenthaler_inverse(path: &DyckPath) -> Permutation {
    let steps = path.steps();
    let mut values = Vec::with_capacity(path.semilength());
    // unused values below the current maximum, increasing from bottom to top
    let mut available: Vec<u32> = Vec::new();
    let mut max = 0u32;
    let mut i = 0;
    while i < steps.len() {
        let ups = steps[i..].iter().take_while(|&&s| s == Step::U).count() as u32;
        i += ups as usize;
        let downs = steps[i..].iter().take_while(|&&s| s == Step::D).count();
        i += downs;
        available.extend(max + 1..max + ups);
        max += ups;
        values.push(max);
        for _ in 1..downs {
            values.push(available.pop().expect("valid Dyck path has enough room"));
        }
    }
    Permutation::from_vec_unchecked(values)
}

pub fn delta_hat(sigma: &Permutation) -> Result<Permutation> {
    Ok(krattenthaler_inverse(&deutsch(&krattenthaler(sigma)?)))
}

pub fn nu(sigma: &Permutation) -> Result<MotzkinPath> {
    let path = krattenthaler(sigma)?;
    if count_statistic(&path, &Statistic::Ddd) > 0 {
        return Err(Error::NotInDomain(format!(
            "{sigma} has a consecutive 321 (its Dyck path contains DDD)"
        )));
    }
    let steps = path.steps();
    let mut out = Vec::with_capacity(sigma.len());
    let mut i = 0;
    while i < steps.len() {
        let ups = steps[i..].iter().take_while(|&&s| s == Step::U).count();
        i += ups;
        let downs = steps[i..].iter().take_while(|&&s| s == Step::D).count();
        i += downs;
        out.extend(std::iter::repeat_n(MotzkinStep::U, ups - 1));
        out.push(if downs == 1 { MotzkinStep::H } else { MotzkinStep::D });
    }
    Ok(MotzkinPath::from_steps_unchecked(out))
}

pub fn nu_inverse(motzkin: &MotzkinPath) -> Permutation {
    let mut steps = Vec::with_capacity(2 * motzkin.len());
    for s in motzkin.steps() {
        match s {
            MotzkinStep::U => steps.push(Step::U),
            MotzkinStep::H => steps.extend([Step::U, Step::D]),
            MotzkinStep::D => steps.extend([Step::U, Step::D, Step::D]),
        }
    }
    krattenthaler_inverse(&DyckPath::from_steps_unchecked(steps))
}

/// μ on words: the minimum entry plays the role of 1 and "s + 1" is the
/// next larger value present in the word.
pub fn mu(w: &Word) -> Result<MotzkinPath> {
    let pattern = standardize(w);
    if !avoids_312(&pattern) {
        return Err(Error::NotInDomain(format!("{w} contains 3-1-2")));
    }
    if count_consecutive(w.values(), &Permutation::increasing(3)) > 0 {
        return Err(Error::NotInDomain(format!("{w} has a consecutive 123")));
    }
    let mut out = Vec::with_capacity(w.len());
    mu_steps(w.values(), &mut out)?;
    Ok(MotzkinPath::from_steps_unchecked(out))
}

fn mu_steps(values: &[u32], out: &mut Vec<MotzkinStep>) -> Result<()> {
    let Some((pos, _)) = values.iter().enumerate().min_by_key(|&(_, v)| *v) else {
        return Ok(());
    };
    let (head, rest) = (&values[..pos], &values[pos + 1..]);
    let Some((&t, tail)) = rest.split_first() else {
        mu_steps(head, out)?;
        out.push(MotzkinStep::H);
        return Ok(());
    };
    if let Some(&s) = tail.first() {
        let successor = values.iter().copied().filter(|&v| v > s).min();
        if successor != Some(t) {
            return Err(Error::NotInDomain(format!(
                "entry {t} after the minimum is not the successor of {s}"
            )));
        }
    }
    mu_steps(head, out)?;
    out.push(MotzkinStep::U);
    mu_steps(tail, out)?;
    out.push(MotzkinStep::D);
    Ok(())
}

pub fn mu_inverse(motzkin: &MotzkinPath) -> Permutation {
    Permutation::from_vec_unchecked(mu_inverse_values(motzkin.steps()))
}

fn mu_inverse_values(steps: &[MotzkinStep]) -> Vec<u32> {
    let Some((&last, body)) = steps.split_last() else {
        return Vec::new();
    };
    match last {
        MotzkinStep::H => {
            let mut out: Vec<u32> = mu_inverse_values(body).into_iter().map(|v| v + 1).collect();
            out.push(1);
            out
        }
        MotzkinStep::D => {
            let mut depth = 0i64;
            let open = (0..body.len())
                .rev()
                .find(|&i| {
                    depth += match body[i] {
                        MotzkinStep::D => 1,
                        MotzkinStep::H => 0,
                        MotzkinStep::U => -1,
                    };
                    depth < 0
                })
                .expect("valid Motzkin path closes every D");
            let first = mu_inverse_values(&body[..open]);
            let second = mu_inverse_values(&body[open + 1..]);
            let base = first.len() as u32 + 1;
            let pivot = second.first().copied().unwrap_or(0);
            let mut out: Vec<u32> = first.into_iter().map(|v| v + 1).collect();
            out.push(1);
            out.push(base + pivot + 1);
            out.extend(
                second
                    .into_iter()
                    .map(|v| if v <= pivot { base + v } else { base + v + 1 }),
            );
            out
        }
        MotzkinStep::U => unreachable!("a valid Motzkin path never ends with U"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn motzkin(s: &str) -> MotzkinPath {
        s.parse().unwrap()
    }

    #[test]
    fn krattenthaler_examples() {
        assert_eq!(
            krattenthaler(&perm("4 3 6 5 2 7 8 1")).unwrap().to_string(),
            "UUUUDDUUDDDUDUDD"
        );
        assert_eq!(krattenthaler(&perm("1")).unwrap().to_string(), "UD");
        assert_eq!(krattenthaler(&perm("3 2 1")).unwrap().to_string(), "UUUDDD");
        assert_eq!(krattenthaler(&Permutation::empty()).unwrap(), DyckPath::empty());
        assert_eq!(krattenthaler(&perm("3 1 2")), Err(Error::NotAvoider));
    }

    #[test]
    fn krattenthaler_inverse_examples() {
        let inv = |s: &str| krattenthaler_inverse(&s.parse().unwrap()).to_string();
        assert_eq!(inv("UDUDUD"), "1 2 3");
        assert_eq!(inv("UUUDDD"), "3 2 1");
        assert_eq!(inv("UUUUDDUUDDDUDUDD"), "4 3 6 5 2 7 8 1");
        assert_eq!(inv("ε"), "ε");
    }

    #[test]
    fn delta_hat_on_s3() {
        let dh = |s: &str| delta_hat(&perm(s)).unwrap().to_string();
        assert_eq!(dh("3 2 1"), "1 2 3");
        assert_eq!(dh("1 2 3"), "3 2 1");
        assert_eq!(dh("2 3 1"), "1 3 2");
        assert_eq!(dh("1 3 2"), "2 3 1");
        assert_eq!(dh("2 1 3"), "2 1 3");
        assert_eq!(delta_hat(&perm("3 1 2")), Err(Error::NotAvoider));
    }

    #[test]
    fn nu_examples() {
        let n = |s: &str| nu(&perm(s)).unwrap().to_string();
        assert_eq!(n("4 3 5 2 6 7 1 8"), "UUUDDHDH");
        assert_eq!(n("1 2 3"), "HHH");
        assert_eq!(n("2 1"), "UD");
        assert!(matches!(nu(&perm("3 2 1")), Err(Error::NotInDomain(_))));
    }

    #[test]
    fn nu_inverse_examples() {
        let n = |s: &str| nu_inverse(&motzkin(s)).to_string();
        assert_eq!(n("HHH"), "1 2 3");
        assert_eq!(n("UD"), "2 1");
        assert_eq!(n("UUUDDHDH"), "4 3 5 2 6 7 1 8");
    }

    #[test]
    fn mu_examples() {
        let m = |s: &str| mu(&s.parse().unwrap()).unwrap().to_string();
        assert_eq!(m("2 4 3 1 6 5 8 7"), "UHDUUHDD");
        assert_eq!(m("1"), "H");
        assert_eq!(m("2 1 3"), "HUD");
        assert_eq!(m("2 1"), "HH");
        assert_eq!(m("1 2"), "UD");
        // subwords reached by the recursion
        assert_eq!(m("5 8 7"), "UHD");
        assert_eq!(m("2 4 3"), "UHD");
        assert!(matches!(mu(&"1 2 3".parse().unwrap()), Err(Error::NotInDomain(_))));
        assert!(matches!(mu(&"3 1 2".parse().unwrap()), Err(Error::NotInDomain(_))));
    }

    #[test]
    fn mu_inverse_examples() {
        let m = |s: &str| mu_inverse(&motzkin(s)).to_string();
        assert_eq!(m("UHDUUHDD"), "2 4 3 1 6 5 8 7");
        assert_eq!(m("H"), "1");
        assert_eq!(m("HH"), "2 1");
        assert_eq!(m("UD"), "1 2");
        assert_eq!(m("ε"), "ε");
    }
}
