use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::automaton::build_automaton;
use super::table::trim_row;
use crate::path::{Statistic, Step};

/// Dense polynomial in `z`; index is the exponent.
type Poly = Vec<BigUint>;

fn add_shifted(target: &mut Poly, source: &Poly, shift: usize, max_degree: usize) {
    let needed = (source.len() + shift).min(max_degree.saturating_add(1));
    if target.len() < needed {
        target.resize(needed, BigUint::zero());
    }
    for (i, c) in source.iter().enumerate() {
        let d = i + shift;
        if d > max_degree {
            break;
        }
        target[d] += c;
    }
}

/// Row `a(n, ·)` of the statistic's distribution over Dyck paths of
/// semilength `n`.
pub fn distribution_dp(stat: &Statistic, n: usize) -> Vec<BigUint> {
    distribution_dp_truncated(stat, n, usize::MAX)
}

/// As [`distribution_dp`], dropping every power of `z` above `max_k`.
///
/// Walks the `2n` steps keeping one layer indexed by (height, automaton
/// state); each cell is a polynomial in `z` and marked transitions
/// multiply by `z`.
pub fn distribution_dp_truncated(stat: &Statistic, n: usize, max_k: usize) -> Vec<BigUint> {
    let aut = build_automaton(stat);
    let states = aut.num_states();
    let len = 2 * n;
    let cell = |h: usize, q: usize| h * states + q;

    let mut layer: Vec<Poly> = vec![Vec::new(); (n + 1) * states];
    layer[cell(0, aut.start())] = vec![BigUint::one()];
    for pos in 0..len {
        let remaining = len - pos - 1;
        let mut next: Vec<Poly> = vec![Vec::new(); (n + 1) * states];
        for h in 0..=n.min(pos) {
            for q in 0..states {
                let poly = &layer[cell(h, q)];
                if poly.is_empty() {
                    continue;
                }
                for step in [Step::U, Step::D] {
                    let h2 = match step {
                        Step::U => h + 1,
                        Step::D if h > 0 => h - 1,
                        Step::D => continue,
                    };
                    if h2 > remaining {
                        continue;
                    }
                    let (q2, marked) = aut.step(q, step);
                    add_shifted(&mut next[cell(h2, q2)], poly, marked as usize, max_k);
                }
            }
        }
        layer = next;
    }

    let mut row: Poly = Vec::new();
    for q in 0..states {
        add_shifted(&mut row, &layer[cell(0, q)], 0, max_k);
    }
    trim_row(row)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distribution::closed::dudd_free_count;
    use crate::path::{count_statistic, enumerate_dyck};

    fn row(v: &[u32]) -> Vec<BigUint> {
        v.iter().map(|&x| BigUint::from(x)).collect()
    }

    #[test]
    fn examples() {
        assert_eq!(distribution_dp(&Statistic::Ddu, 3), row(&[4, 1]));
        assert_eq!(distribution_dp(&Statistic::Ddd, 2), row(&[2]));
        assert_eq!(distribution_dp(&Statistic::Ddd, 0), row(&[1]));
        assert_eq!(distribution_dp(&Statistic::Dudd, 30)[0], dudd_free_count(30).unwrap());
    }

    #[test]
    fn matches_path_enumeration() {
        for stat in Statistic::NAMED {
            for n in 0..=9 {
                let mut hist: Vec<BigUint> = vec![BigUint::zero(); n + 1];
                for p in enumerate_dyck(n) {
                    hist[count_statistic(&p, &stat)] += 1u32;
                }
                assert_eq!(distribution_dp(&stat, n), trim_row(hist), "{stat} n={n}");
            }
        }
    }

    #[test]
    fn truncation_keeps_low_coefficients() {
        let full = distribution_dp(&Statistic::Ddu, 20);
        let low = distribution_dp_truncated(&Statistic::Ddu, 20, 2);
        assert_eq!(low, full[..3].to_vec());
    }
}
