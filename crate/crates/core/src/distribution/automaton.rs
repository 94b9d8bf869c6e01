use crate::path::{Statistic, Step};

/// A deterministic automaton over `{U, D}` whose marked transitions fire
/// once per occurrence of a statistic. State 0 is the start state.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkedAutomaton {
    transitions: Vec<[(usize, bool); 2]>,
}

fn column(step: Step) -> usize {
    match step {
        Step::U => 0,
        Step::D => 1,
    }
}

impl MarkedAutomaton {
    pub fn start(&self) -> usize {
        0
    }

    pub fn num_states(&self) -> usize {
        self.transitions.len()
    }

    /// Next state, and whether the transition is marked.
    pub fn step(&self, state: usize, step: Step) -> (usize, bool) {
        self.transitions[state][column(step)]
    }

    pub fn count_marks(&self, steps: &[Step]) -> usize {
        let mut state = self.start();
        let mut marks = 0;
        for &s in steps {
            let (next, marked) = self.step(state, s);
            marks += marked as usize;
            state = next;
        }
        marks
    }

    /// Factor matcher: state `q` is the length of the longest prefix of
    /// `word` that is a suffix of the input read so far.
    fn factor(word: &[Step]) -> Self {
        let m = word.len();
        let mut border = vec![0usize; m];
        for i in 1..m {
            let mut j = border[i - 1];
            while j > 0 && word[i] != word[j] {
                j = border[j - 1];
            }
            if word[i] == word[j] {
                j += 1;
            }
            border[i] = j;
        }
        let transitions = (0..m)
            .map(|q| {
                [Step::U, Step::D].map(|c| {
                    let mut j = q;
                    while j > 0 && word[j] != c {
                        j = border[j - 1];
                    }
                    if word[j] == c {
                        j += 1;
                    }
                    if j == m {
                        (border[m - 1], true)
                    } else {
                        (j, false)
                    }
                })
            })
            .collect();
        MarkedAutomaton { transitions }
    }
}

pub fn build_automaton(stat: &Statistic) -> MarkedAutomaton {
    // columns are [on U, on D]
    let transitions = match stat {
        // 0: idle, 1: after D, 2: after D U+, 3: after D U+ D
        Statistic::DuPlusDu => vec![
            [(0, false), (1, false)],
            [(2, false), (1, false)],
            [(2, false), (3, false)],
            [(2, true), (1, false)],
        ],
        // 0: idle, 1: after D, 2: after D U, 3: after D U U+, 4: after D U U+ D
        Statistic::Du2PlusDd => vec![
            [(0, false), (1, false)],
            [(2, false), (1, false)],
            [(3, false), (1, false)],
            [(3, false), (4, false)],
            [(2, false), (1, true)],
        ],
        other => return MarkedAutomaton::factor(&other.factor().expect("fixed factor")),
    };
    MarkedAutomaton { transitions }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::path::{count_statistic, enumerate_dyck, DyckPath};

    fn dyck(s: &str) -> DyckPath {
        s.parse().unwrap()
    }

    #[test]
    fn examples() {
        let ddd = build_automaton(&Statistic::Ddd);
        assert_eq!(ddd.count_marks(dyck("UUUUDDDD").steps()), 2);
        let dudu = build_automaton(&Statistic::DuPlusDu);
        let p = dyck("UUDUDUDD");
        assert_eq!(dudu.count_marks(p.steps()), count_statistic(&p, &Statistic::DuPlusDu));
        let ddu = build_automaton(&Statistic::Ddu);
        assert_eq!(ddu.count_marks(dyck("UUUUDDUUDDDUDUDD").steps()), 2);
    }

    #[test]
    fn small_state_counts() {
        assert!(build_automaton(&Statistic::DuPlusDu).num_states() <= 6);
        assert!(build_automaton(&Statistic::Du2PlusDd).num_states() <= 6);
        assert_eq!(build_automaton(&Statistic::Dudd).num_states(), 4);
    }

    #[test]
    fn sound_on_all_short_paths() {
        use Step::{D, U};
        let mut stats = Statistic::NAMED.to_vec();
        stats.push(Statistic::FixedFactor(vec![U, D, U]));
        stats.push(Statistic::FixedFactor(vec![D]));
        stats.push(Statistic::FixedFactor(vec![U, U, D, U, U]));
        for stat in &stats {
            let aut = build_automaton(stat);
            for n in 0..=8 {
                for p in enumerate_dyck(n) {
                    assert_eq!(aut.count_marks(p.steps()), count_statistic(&p, stat), "{stat} {p}");
                }
            }
        }
    }
}
