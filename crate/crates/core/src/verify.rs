//! Exhaustive verification suites over all objects up to a size bound.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::bijection::{delta_hat, krattenthaler, krattenthaler_inverse, mu, mu_inverse, nu, nu_inverse};
use crate::distribution::{
    closed_row, distribution_brute, distribution_dp, gf_series, joint_distribution, motzkin,
    monotone_equidistribution_check, Pattern,
};
use crate::error::{Error, Result};
use crate::path::{count_statistic, deutsch, enumerate_dyck, enumerate_motzkin, first_return_decompose, DyckPath, Statistic, Step};
use crate::perm::{avoids_312, count_consecutive, enumerate_avoiders, Permutation, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Involution,
    Bijections,
    Transport,
    Triangulate,
    Joint,
    Monotone,
    All,
}

impl Suite {
    pub const EACH: [Suite; 6] = [
        Suite::Involution,
        Suite::Bijections,
        Suite::Transport,
        Suite::Triangulate,
        Suite::Joint,
        Suite::Monotone,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Involution => "involution",
            Suite::Bijections => "bijections",
            Suite::Transport => "transport",
            Suite::Triangulate => "triangulate",
            Suite::Joint => "joint",
            Suite::Monotone => "monotone",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::OutOfDomain(format!("unknown suite '{s}'")))
    }
}

const MAX_EXAMPLES: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub suite: Suite,
    pub check: String,
    pub bound: usize,
    pub cases: u64,
    pub failures: u64,
    /// First few failing cases.
    pub examples: Vec<String>,
}

impl CheckResult {
    fn new(suite: Suite, check: impl Into<String>, bound: usize) -> Self {
        CheckResult {
            suite,
            check: check.into(),
            bound,
            cases: 0,
            failures: 0,
            examples: Vec::new(),
        }
    }

    fn case(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.examples.len() < MAX_EXAMPLES {
                self.examples.push(detail());
            }
        }
    }

    fn error(&mut self, err: Error) {
        self.case(false, || err.to_string());
    }

    pub fn passed(&self) -> bool {
        self.failures == 0 && self.cases > 0
    }
}

/// Run `suite` for every size `0..=bound`. Suites that enumerate
/// permutations refuse bounds above `limit`.
pub fn run_suite(suite: Suite, bound: usize, limit: usize) -> Result<Vec<CheckResult>> {
    if bound > limit {
        return Err(Error::BoundExceeded { n: bound, bound: limit });
    }
    Ok(match suite {
        Suite::Involution => involution(bound),
        Suite::Bijections => bijections(bound),
        Suite::Transport => transport(bound),
        Suite::Triangulate => triangulate(bound, limit),
        Suite::Joint => joint(bound, limit),
        Suite::Monotone => monotone(bound, limit),
        Suite::All => {
            let mut out = Vec::new();
            for s in Suite::EACH {
                out.extend(run_suite(s, bound, limit)?);
            }
            out
        }
    })
}

fn involution(bound: usize) -> Vec<CheckResult> {
    let mut twice = CheckResult::new(Suite::Involution, "deutsch-involution", bound);
    let mut length = CheckResult::new(Suite::Involution, "deutsch-preserves-length", bound);
    for n in 0..=bound {
        for p in enumerate_dyck(n) {
            let image = deutsch(&p);
            length.case(image.len() == p.len(), || format!("{p}"));
            twice.case(deutsch(&image) == p, || format!("{p}"));
        }
    }
    vec![twice, length]
}

fn bijections(bound: usize) -> Vec<CheckResult> {
    let suite = Suite::Bijections;
    let mut k_perm = CheckResult::new(suite, "krattenthaler-inverse-after-forward", bound);
    let mut k_path = CheckResult::new(suite, "krattenthaler-forward-after-inverse", bound);
    let mut dh = CheckResult::new(suite, "delta-hat-involution", bound);
    let mut nu_check = CheckResult::new(suite, "nu-bijection", bound);
    let mut mu_check = CheckResult::new(suite, "mu-bijection", bound);
    let p123 = Permutation::increasing(3);
    let p321 = Permutation::decreasing(3);

    for n in 0..=bound {
        let mut nu_images = BTreeSet::new();
        let mut mu_images = BTreeSet::new();
        for sigma in enumerate_avoiders(n) {
            match krattenthaler(&sigma) {
                Ok(path) => k_perm.case(krattenthaler_inverse(&path) == sigma, || format!("{sigma}")),
                Err(e) => k_perm.error(e),
            }
            match delta_hat(&sigma).and_then(|image| Ok((delta_hat(&image)?, image))) {
                Ok((back, image)) => {
                    dh.case(back == sigma && avoids_312(&image), || format!("{sigma} -> {image} -> {back}"))
                }
                Err(e) => dh.error(e),
            }
            if count_consecutive(sigma.values(), &p321) == 0 {
                match nu(&sigma) {
                    Ok(m) => {
                        nu_check.case(m.len() == n && nu_inverse(&m) == sigma, || format!("{sigma} -> {m}"));
                        nu_images.insert(m);
                    }
                    Err(e) => nu_check.error(e),
                }
            }
            if count_consecutive(sigma.values(), &p123) == 0 {
                match mu(&Word::from(sigma.clone())) {
                    Ok(m) => {
                        mu_check.case(m.len() == n && mu_inverse(&m) == sigma, || format!("{sigma} -> {m}"));
                        mu_images.insert(m);
                    }
                    Err(e) => mu_check.error(e),
                }
            }
        }
        for p in enumerate_dyck(n) {
            let sigma = krattenthaler_inverse(&p);
            k_path.case(krattenthaler(&sigma).as_ref() == Ok(&p), || format!("{p}"));
        }
        let motzkin_paths: BTreeSet<_> = enumerate_motzkin(n).collect();
        let expected = motzkin(n);
        nu_check.case(
            nu_images == motzkin_paths && num_bigint::BigUint::from(nu_images.len()) == expected,
            || format!("n={n}: nu image has {} paths, M_n = {expected}", nu_images.len()),
        );
        mu_check.case(
            mu_images == motzkin_paths && num_bigint::BigUint::from(mu_images.len()) == expected,
            || format!("n={n}: mu image has {} paths, M_n = {expected}", mu_images.len()),
        );
        for m in &motzkin_paths {
            nu_check.case(nu(&nu_inverse(m)).as_ref() == Ok(m), || format!("{m}"));
            mu_check.case(mu(&Word::from(mu_inverse(m))).as_ref() == Ok(m), || format!("{m}"));
        }
    }
    vec![k_perm, k_path, dh, nu_check, mu_check]
}

/// `U^t D x` prefix with `t >= min_run`.
fn starts_with_run_then(steps: &[Step], min_run: usize, after: [Step; 2]) -> bool {
    let run = steps.iter().take_while(|&&s| s == Step::U).count();
    run >= min_run && steps[run..].starts_with(&after)
}

/// The first-return recursion for each named statistic:
/// `stat(U A D B) = stat(A) + stat(B) + [boundary condition]`.
pub fn first_return_indicator(stat: &Statistic, a: &DyckPath, b: &DyckPath) -> usize {
    use Step::{D, U};
    let hit = match stat {
        Statistic::Ddd => a.ends_with(&[D, D]),
        Statistic::DuPlusDu => starts_with_run_then(b.steps(), 1, [D, U]),
        Statistic::Dudd => a.ends_with(&[D, U, D]),
        Statistic::Du2PlusDd => starts_with_run_then(b.steps(), 2, [D, D]),
        Statistic::Ddu => !a.is_empty() && !b.is_empty(),
        Statistic::FixedFactor(_) => false,
    };
    hit as usize
}

fn transport(bound: usize) -> Vec<CheckResult> {
    use Step::{D, U};
    let suite = Suite::Transport;
    let transfers = [
        ("deutsch-transfer DU^tDU -> DDD", Statistic::DuPlusDu, Statistic::Ddd),
        ("deutsch-transfer DU^tDD -> DUDD", Statistic::Du2PlusDd, Statistic::Dudd),
        ("deutsch-transfer DDU -> DDU", Statistic::Ddu, Statistic::Ddu),
    ];
    let mut transfer_checks: Vec<CheckResult> =
        transfers.iter().map(|(name, _, _)| CheckResult::new(suite, *name, bound)).collect();
    let mut lemma_dd = CheckResult::new(suite, "prefix U^tDU implies deutsch suffix DD", bound);
    let mut lemma_ud = CheckResult::new(suite, "prefix U^tDD (t>=2) implies deutsch suffix UD", bound);
    let mut recursions = CheckResult::new(suite, "first-return recursions", bound);
    let mut correspondence = CheckResult::new(suite, "pattern-statistic correspondence through K", bound);
    let mut exchange = CheckResult::new(suite, "delta-hat pattern exchange", bound);

    for n in 0..=bound {
        for p in enumerate_dyck(n) {
            let image = deutsch(&p);
            for ((_, from, to), check) in transfers.iter().zip(transfer_checks.iter_mut()) {
                check.case(count_statistic(&p, from) == count_statistic(&image, to), || format!("{p}"));
            }
            if starts_with_run_then(p.steps(), 1, [D, U]) {
                lemma_dd.case(image.ends_with(&[D, D]), || format!("{p} -> {image}"));
            }
            if starts_with_run_then(p.steps(), 2, [D, D]) {
                lemma_ud.case(image.ends_with(&[U, D]), || format!("{p} -> {image}"));
            }
            if let Ok((a, b)) = first_return_decompose(&p) {
                for stat in Statistic::NAMED {
                    let expected = count_statistic(&a, &stat)
                        + count_statistic(&b, &stat)
                        + first_return_indicator(&stat, &a, &b);
                    recursions.case(count_statistic(&p, &stat) == expected, || format!("{stat} on {p}"));
                }
            }
        }
        for sigma in enumerate_avoiders(n) {
            let (path, image) = match (krattenthaler(&sigma), delta_hat(&sigma)) {
                (Ok(path), Ok(image)) => (path, image),
                (Err(e), _) | (_, Err(e)) => {
                    correspondence.error(e);
                    continue;
                }
            };
            for tau in Pattern::ALL {
                let occ = count_consecutive(sigma.values(), &tau.permutation());
                correspondence.case(occ == count_statistic(&path, &tau.statistic()), || format!("{tau} on {sigma}"));
                let partner = count_consecutive(image.values(), &tau.delta_partner().permutation());
                exchange.case(occ == partner, || format!("{tau} on {sigma} vs {image}"));
            }
        }
    }
    let mut out = transfer_checks;
    out.extend([lemma_dd, lemma_ud, recursions, correspondence, exchange]);
    out
}

fn triangulate(bound: usize, limit: usize) -> Vec<CheckResult> {
    Pattern::ALL
        .into_iter()
        .map(|tau| {
            let mut check = CheckResult::new(Suite::Triangulate, format!("closed=dp=gf=brute [{tau}]"), bound);
            let series = gf_series(tau, bound).and_then(|s| s.integer_rows());
            for n in 0..=bound {
                let rows = closed_row(tau, n).and_then(|c| Ok((c, distribution_brute(tau, n, limit)?)));
                match (rows, &series) {
                    (Ok((closed, brute)), Ok(series)) => {
                        let dp = distribution_dp(&tau.statistic(), n);
                        let gf = &series[n];
                        check.case(closed == dp && dp == brute && &brute == gf, || {
                            format!("n={n}: closed {closed:?} dp {dp:?} gf {gf:?} brute {brute:?}")
                        });
                    }
                    (Err(e), _) => check.error(e),
                    (_, Err(e)) => check.error(e.clone()),
                }
            }
            check
        })
        .collect()
}

fn joint(bound: usize, limit: usize) -> Vec<CheckResult> {
    let mut check = CheckResult::new(Suite::Joint, "triple-statistic equidistribution", bound);
    for n in 0..=bound {
        match joint_distribution(n, limit) {
            Ok(j) => check.case(j.equidistributed(), || format!("n={n}")),
            Err(e) => check.error(e),
        }
    }
    vec![check]
}

fn monotone(bound: usize, limit: usize) -> Vec<CheckResult> {
    (2..=5)
        .map(|k| {
            let mut check = CheckResult::new(Suite::Monotone, format!("12..k vs k..21 [k={k}]"), bound);
            for n in 0..=bound {
                match monotone_equidistribution_check(k, n, limit) {
                    Ok(ok) => check.case(ok, || format!("n={n}")),
                    Err(e) => check.error(e),
                }
            }
            check
        })
        .collect()
}
