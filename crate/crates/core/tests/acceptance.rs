//! Acceptance criteria. Each test prints one `PASS`/`FAIL` line to stderr
//! and then asserts the outcome.

use std::collections::BTreeSet;
use std::io::Write;
use std::time::{Duration, Instant};

use consec312::bijection::{krattenthaler, krattenthaler_inverse, mu, mu_inverse, nu, nu_inverse};
use consec312::distribution::{
    avoider_count, closed_form, closed_row, distribution_brute, distribution_dp_truncated, gf_series,
    joint_distribution, monotone_equidistribution_check, Pattern,
};
use consec312::path::{deutsch, enumerate_dyck, enumerate_motzkin, DyckPath, MotzkinPath, Step};
use consec312::perm::{count_consecutive, enumerate_avoiders, Permutation, Word};
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

const BRUTE: usize = 12;

fn report(id: u32, title: &str, limit: Option<Duration>, check: impl FnOnce() -> Result<(), String>) {
    let start = Instant::now();
    let mut outcome = check();
    let elapsed = start.elapsed();
    if let (Ok(()), Some(limit)) = (&outcome, limit) {
        if elapsed > limit {
            outcome = Err(format!("took {elapsed:.2?}, limit {limit:?}"));
        }
    }
    let line = match &outcome {
        Ok(()) => format!("PASS criterion {id:>2}: {title} ({elapsed:.2?})"),
        Err(why) => format!("FAIL criterion {id:>2}: {title} ({elapsed:.2?}): {why}"),
    };
    std::io::stderr().write_all(format!("{line}\n").as_bytes()).unwrap();
    if let Err(why) = outcome {
        panic!("criterion {id}: {why}");
    }
}

fn ensure(ok: bool, why: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(why())
    }
}

fn big(x: u64) -> BigUint {
    BigUint::from(x)
}

fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    (0..k).fold(BigUint::one(), |acc, i| acc * (n - i) / (i + 1))
}

fn catalan(n: u64) -> BigUint {
    binomial(2 * n, n) / (n + 1)
}

/// Motzkin numbers as `Σ_k C(n, 2k) C_k`.
fn motzkin(n: u64) -> BigUint {
    (0..=n / 2).map(|k| binomial(n, 2 * k) * catalan(k)).sum()
}

/// Scan oracles for the Dyck-path statistics, one per pattern.
fn scan_statistic(tau: Pattern, steps: &[Step]) -> usize {
    use Step::{D, U};
    let factor = |w: &[Step]| steps.windows(w.len()).filter(|x| *x == w).count();
    let run = |min_run: usize, last: Step| {
        (0..steps.len())
            .filter(|&i| {
                if steps[i] != D {
                    return false;
                }
                let t = steps[i + 1..].iter().take_while(|&&s| s == U).count();
                let j = i + 1 + t;
                t >= min_run && steps.get(j) == Some(&D) && steps.get(j + 1) == Some(&last)
            })
            .count()
    };
    match tau {
        Pattern::P213 => factor(&[D, D, U]),
        Pattern::P321 => factor(&[D, D, D]),
        Pattern::P231 => factor(&[D, U, D, D]),
        Pattern::P123 => run(1, U),
        Pattern::P132 => run(2, D),
    }
}

/// `Σ_j (-1)^j C(n-j, j) C(2n-3j, n-j+1) / (n-j)` summed over the rationals.
fn alternating_sum(n: u64) -> BigUint {
    let mut total = BigRational::zero();
    for j in 0..=(n - 1) / 2 {
        let term = BigRational::new(
            BigInt::from(binomial(n - j, j) * binomial(2 * n - 3 * j, n - j + 1)),
            BigInt::from(n - j),
        );
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    assert!(total.is_integer());
    total.to_integer().to_biguint().expect("non-negative")
}

fn brute_matches_closed(patterns: &[Pattern]) -> Result<(), String> {
    for &tau in patterns {
        for n in 0..=BRUTE {
            let brute = distribution_brute(tau, n, BRUTE).map_err(|e| e.to_string())?;
            let closed = closed_row(tau, n).map_err(|e| e.to_string())?;
            ensure(brute == closed, || format!("{tau}, n={n}: closed {closed:?}, brute {brute:?}"))?;
            if n > 0 {
                for (k, cell) in brute.iter().enumerate() {
                    let single = closed_form(tau, n, k).map_err(|e| e.to_string())?;
                    ensure(&single == cell, || format!("{tau}, n={n}, k={k}"))?;
                }
            }
        }
    }
    Ok(())
}

#[test]
fn criterion_01_213_closed_form() {
    report(1, "213 closed form equals brute force, n <= 12", Some(Duration::from_secs(60)), || {
        // the formula itself, evaluated independently
        for n in 1..=BRUTE as u64 {
            for k in 0..=(n - 1) / 2 {
                let expected = (big(1) << (n - 2 * k - 1)) * catalan(k) * binomial(n - 1, 2 * k);
                let got = closed_form(Pattern::P213, n as usize, k as usize).map_err(|e| e.to_string())?;
                ensure(got == expected, || format!("n={n}, k={k}: {got} vs {expected}"))?;
            }
        }
        brute_matches_closed(&[Pattern::P213])
    });
}

#[test]
fn criterion_02_321_231_closed_forms() {
    report(2, "321 and 231 closed forms equal brute force, n <= 12", Some(Duration::from_secs(120)), || {
        brute_matches_closed(&[Pattern::P321, Pattern::P231])
    });
}

#[test]
fn criterion_03_equidistribution() {
    report(3, "brute rows 123 = 321 and 132 = 231, n <= 12", None, || {
        for (a, b) in [(Pattern::P123, Pattern::P321), (Pattern::P132, Pattern::P231)] {
            for n in 0..=BRUTE {
                let ra = distribution_brute(a, n, BRUTE).map_err(|e| e.to_string())?;
                let rb = distribution_brute(b, n, BRUTE).map_err(|e| e.to_string())?;
                ensure(ra == rb, || format!("n={n}: {a} {ra:?} vs {b} {rb:?}"))?;
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_04_avoider_counts() {
    report(4, "avoider counts and k = 0 cells, n <= 12", None, || {
        for n in 1..=BRUTE as u64 {
            let sum = alternating_sum(n);
            let expected = [
                (Pattern::P213, big(1) << (n - 1)),
                (Pattern::P321, motzkin(n)),
                (Pattern::P231, sum.clone()),
                (Pattern::P123, motzkin(n)),
                (Pattern::P132, sum),
            ];
            for (tau, want) in expected {
                let count = avoider_count(tau, n as usize).map_err(|e| e.to_string())?;
                let cell = distribution_brute(tau, n as usize, BRUTE).map_err(|e| e.to_string())?[0].clone();
                let direct = enumerate_avoiders(n as usize)
                    .filter(|s| count_consecutive(s.values(), &tau.permutation()) == 0)
                    .count();
                ensure(count == cell && cell == big(direct as u64), || {
                    format!("{tau}, n={n}: count {count}, cell {cell}, direct {direct}")
                })?;
                ensure(count == want, || format!("{tau}, n={n}: {count}, expected {want}"))?;
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_05_generating_functions() {
    report(5, "gf expansion equals closed form through t^30", Some(Duration::from_secs(30)), || {
        for tau in [Pattern::P213, Pattern::P321, Pattern::P231] {
            let rows = gf_series(tau, 30)
                .and_then(|s| s.integer_rows())
                .map_err(|e| e.to_string())?;
            for (n, row) in rows.iter().enumerate() {
                let closed = closed_row(tau, n).map_err(|e| e.to_string())?;
                ensure(row == &closed, || format!("{tau}, n={n}: gf {row:?}, closed {closed:?}"))?;
                let total: BigUint = row.iter().sum();
                ensure(total == catalan(n as u64), || format!("{tau}, n={n}: row sum {total}"))?;
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_06_deutsch_involution() {
    report(6, "deutsch involution, semilength <= 10", Some(Duration::from_secs(10)), || {
        let mut seen = 0u64;
        for n in 0..=10u64 {
            let mut count = 0u64;
            for p in enumerate_dyck(n as usize) {
                let image = deutsch(&p);
                ensure(image.semilength() == p.semilength() && deutsch(&image) == p, || format!("{p}"))?;
                count += 1;
            }
            ensure(big(count) == catalan(n), || format!("n={n}: enumerated {count} paths"))?;
            seen += count;
        }
        ensure(seen == 23714, || format!("{seen} paths in total"))
    });
}

fn has_run_prefix(steps: &[Step], min_run: usize, after: [Step; 2]) -> bool {
    let t = steps.iter().take_while(|&&s| s == Step::U).count();
    t >= min_run && steps[t..].starts_with(&after)
}

#[test]
fn criterion_07_statistic_transport() {
    use Step::{D, U};
    report(7, "statistic transport under deutsch and structural lemmas, semilength <= 9", None, || {
        let transfers = [
            (Pattern::P123, Pattern::P321),
            (Pattern::P132, Pattern::P231),
            (Pattern::P213, Pattern::P213),
        ];
        let (mut lemma_dd, mut lemma_ud) = (0, 0);
        for n in 0..=9 {
            for p in enumerate_dyck(n) {
                let image = deutsch(&p);
                for (from, to) in transfers {
                    let a = scan_statistic(from, p.steps());
                    let b = scan_statistic(to, image.steps());
                    ensure(a == b, || format!("{p}: {from} statistic {a}, image {to} statistic {b}"))?;
                }
                if has_run_prefix(p.steps(), 1, [D, U]) {
                    lemma_dd += 1;
                    ensure(image.ends_with(&[D, D]), || format!("{p} -> {image} should end DD"))?;
                }
                if has_run_prefix(p.steps(), 2, [D, D]) {
                    lemma_ud += 1;
                    ensure(image.ends_with(&[U, D]), || format!("{p} -> {image} should end UD"))?;
                }
            }
        }
        ensure(lemma_dd > 0 && lemma_ud > 0, || "lemmas never exercised".into())
    });
}

#[test]
fn criterion_08_krattenthaler_correspondences() {
    report(8, "K round trip and pattern-statistic correspondences, n <= 9", None, || {
        for n in 0..=9 {
            let mut images = BTreeSet::new();
            for sigma in enumerate_avoiders(n) {
                let path = krattenthaler(&sigma).map_err(|e| format!("{sigma}: {e}"))?;
                ensure(krattenthaler_inverse(&path) == sigma, || format!("{sigma} -> {path}"))?;
                for tau in Pattern::ALL {
                    let occ = count_consecutive(sigma.values(), &tau.permutation());
                    let stat = scan_statistic(tau, path.steps());
                    ensure(occ == stat, || format!("{tau} on {sigma}: {occ} windows, {stat} on {path}"))?;
                }
                images.insert(path);
            }
            let all: BTreeSet<DyckPath> = enumerate_dyck(n).collect();
            ensure(images == all, || format!("n={n}: K is not onto the Dyck paths"))?;
        }
        Ok(())
    });
}

#[test]
fn criterion_09_motzkin_bijections() {
    report(9, "nu and mu are bijections onto Motzkin paths, n <= 10", None, || {
        let p123 = Permutation::increasing(3);
        let p321 = Permutation::decreasing(3);
        for n in 0..=10 {
            let motzkin_paths: BTreeSet<MotzkinPath> = enumerate_motzkin(n).collect();
            ensure(big(motzkin_paths.len() as u64) == motzkin(n as u64), || format!("n={n}: M_n"))?;
            let (mut nu_image, mut mu_image) = (BTreeSet::new(), BTreeSet::new());
            let (mut nu_domain, mut mu_domain) = (0usize, 0usize);
            for sigma in enumerate_avoiders(n) {
                if count_consecutive(sigma.values(), &p321) == 0 {
                    nu_domain += 1;
                    let m = nu(&sigma).map_err(|e| format!("{sigma}: {e}"))?;
                    ensure(nu_inverse(&m) == sigma, || format!("nu round trip on {sigma}"))?;
                    nu_image.insert(m);
                }
                if count_consecutive(sigma.values(), &p123) == 0 {
                    mu_domain += 1;
                    let m = mu(&Word::from(sigma.clone())).map_err(|e| format!("{sigma}: {e}"))?;
                    ensure(mu_inverse(&m) == sigma, || format!("mu round trip on {sigma}"))?;
                    mu_image.insert(m);
                }
            }
            ensure(nu_domain == nu_image.len() && nu_image == motzkin_paths, || format!("n={n}: nu image"))?;
            ensure(mu_domain == mu_image.len() && mu_image == motzkin_paths, || format!("n={n}: mu image"))?;
            for m in &motzkin_paths {
                ensure(nu(&nu_inverse(m)).as_ref() == Ok(m), || format!("nu after inverse on {m}"))?;
                ensure(mu(&Word::from(mu_inverse(m))).as_ref() == Ok(m), || format!("mu after inverse on {m}"))?;
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_10_joint_equidistribution() {
    report(10, "triple-statistic joint equidistribution, n <= 9", None, || {
        for n in 0..=9 {
            let joint = joint_distribution(n, BRUTE).map_err(|e| e.to_string())?;
            ensure(joint.occ_321_132_213 == joint.occ_123_231_213, || format!("n={n}: (321,132,213) vs (123,231,213)"))?;
            ensure(joint.occ_321_231_213 == joint.occ_123_132_213, || format!("n={n}: (321,231,213) vs (123,132,213)"))?;
            let total: BigUint = joint.occ_321_132_213.values().sum();
            ensure(total == catalan(n as u64), || format!("n={n}: histogram total {total}"))?;
        }
        Ok(())
    });
}

#[test]
fn criterion_11_monotone_patterns() {
    report(11, "monotone check for k = 4, 5 and n <= 10", None, || {
        for k in [4, 5] {
            for n in 0..=10 {
                let ok = monotone_equidistribution_check(k, n, BRUTE).map_err(|e| e.to_string())?;
                ensure(ok, || format!("k={k}, n={n}"))?;
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_12_dp_scalability() {
    report(12, "transfer-matrix DP equals closed form at n = 100", Some(Duration::from_secs(60)), || {
        let n = 100;
        for tau in Pattern::ALL {
            let row = distribution_dp_truncated(&tau.statistic(), n, 5);
            for k in [0, 1, 5] {
                let closed = closed_form(tau, n, k).map_err(|e| e.to_string())?;
                let dp = row.get(k).cloned().unwrap_or_default();
                ensure(dp == closed, || format!("{tau}, k={k}: dp {dp}, closed {closed}"))?;
                ensure(!dp.is_zero(), || format!("{tau}, k={k}: zero cell"))?;
            }
        }
        Ok(())
    });
}
