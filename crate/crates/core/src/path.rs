//! Dyck and Motzkin paths, factor statistics and the Deutsch involution.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::perm::EMPTY;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    U,
    D,
}

impl Step {
    pub fn as_char(self) -> char {
        match self {
            Step::U => 'U',
            Step::D => 'D',
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MotzkinStep {
    U,
    H,
    D,
}

impl MotzkinStep {
    pub fn as_char(self) -> char {
        match self {
            MotzkinStep::U => 'U',
            MotzkinStep::H => 'H',
            MotzkinStep::D => 'D',
        }
    }
}

/// Step alphabet of a lattice path that starts and ends on the axis.
trait Alphabet: Copy + Ord + 'static {
    /// All steps in increasing lexicographic order.
    const STEPS: &'static [Self];
    fn rise(self) -> i64;
    /// Whether a path at `height` with `remaining` steps left can still end on the axis.
    fn completable(height: i64, remaining: usize) -> bool;
    fn from_char(c: char) -> Option<Self>;
}

impl Alphabet for Step {
    const STEPS: &'static [Step] = &[Step::U, Step::D];

    fn rise(self) -> i64 {
        match self {
            Step::U => 1,
            Step::D => -1,
        }
    }

    fn completable(height: i64, remaining: usize) -> bool {
        height >= 0 && remaining as i64 >= height && (remaining as i64 - height) % 2 == 0
    }

    fn from_char(c: char) -> Option<Self> {
        match c {
            'U' => Some(Step::U),
            'D' => Some(Step::D),
            _ => None,
        }
    }
}

impl Alphabet for MotzkinStep {
    const STEPS: &'static [MotzkinStep] = &[MotzkinStep::U, MotzkinStep::H, MotzkinStep::D];

    fn rise(self) -> i64 {
        match self {
            MotzkinStep::U => 1,
            MotzkinStep::H => 0,
            MotzkinStep::D => -1,
        }
    }

    fn completable(height: i64, remaining: usize) -> bool {
        height >= 0 && remaining as i64 >= height
    }

    fn from_char(c: char) -> Option<Self> {
        match c {
            'U' => Some(MotzkinStep::U),
            'H' => Some(MotzkinStep::H),
            'D' => Some(MotzkinStep::D),
            _ => None,
        }
    }
}

fn validate<S: Alphabet>(steps: &[S]) -> Result<()> {
    let mut height = 0i64;
    for (i, s) in steps.iter().enumerate() {
        height += s.rise();
        if height < 0 {
            return Err(Error::NegativeHeight(i));
        }
    }
    if height != 0 {
        return Err(Error::Unbalanced);
    }
    Ok(())
}

fn parse_steps<S: Alphabet>(text: &str) -> Result<Vec<S>> {
    let text = text.trim();
    if text == EMPTY {
        return Ok(Vec::new());
    }
    text.chars()
        .enumerate()
        .map(|(index, ch)| S::from_char(ch).ok_or(Error::InvalidStep { ch, index }))
        .collect()
}

/// A balanced U/D word that never dips below the axis.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct DyckPath {
    steps: Vec<Step>,
}

impl DyckPath {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        validate(&steps)?;
        Ok(DyckPath { steps })
    }

    pub(crate) fn from_steps_unchecked(steps: Vec<Step>) -> Self {
        debug_assert!(validate(&steps).is_ok());
        DyckPath { steps }
    }

    pub fn empty() -> Self {
        DyckPath::default()
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn semilength(&self) -> usize {
        self.steps.len() / 2
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn starts_with(&self, prefix: &[Step]) -> bool {
        self.steps.starts_with(prefix)
    }

    pub fn ends_with(&self, suffix: &[Step]) -> bool {
        self.steps.ends_with(suffix)
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.steps.is_empty() {
            return f.write_str(EMPTY);
        }
        self.steps.iter().try_for_each(|s| write!(f, "{}", s.as_char()))
    }
}

impl FromStr for DyckPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_dyck(s)
    }
}

pub fn parse_dyck(text: &str) -> Result<DyckPath> {
    DyckPath::new(parse_steps(text)?)
}

/// A U/H/D word with balanced U and D that never dips below the axis.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct MotzkinPath {
    steps: Vec<MotzkinStep>,
}

impl MotzkinPath {
    pub fn new(steps: Vec<MotzkinStep>) -> Result<Self> {
        validate(&steps)?;
        Ok(MotzkinPath { steps })
    }

    pub(crate) fn from_steps_unchecked(steps: Vec<MotzkinStep>) -> Self {
        debug_assert!(validate(&steps).is_ok());
        MotzkinPath { steps }
    }

    pub fn steps(&self) -> &[MotzkinStep] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }
}

impl fmt::Display for MotzkinPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.steps.is_empty() {
            return f.write_str(EMPTY);
        }
        self.steps.iter().try_for_each(|s| write!(f, "{}", s.as_char()))
    }
}

impl FromStr for MotzkinPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        MotzkinPath::new(parse_steps(s)?)
    }
}

/// For every up step, the index of the down step that closes it.
fn matching_downs(steps: &[Step]) -> Vec<usize> {
    let mut partner = vec![usize::MAX; steps.len()];
    let mut open = Vec::new();
    for (i, &s) in steps.iter().enumerate() {
        match s {
            Step::U => open.push(i),
            Step::D => {
                if let Some(u) = open.pop() {
                    partner[u] = i;
                }
            }
        }
    }
    partner
}

/// `P = U A D B` where the marked `D` is the first return to the axis.
pub fn first_return_decompose(path: &DyckPath) -> Result<(DyckPath, DyckPath)> {
    if path.is_empty() {
        return Err(Error::EmptyPath);
    }
    let steps = path.steps();
    let mut height = 0i64;
    let ret = steps
        .iter()
        .position(|s| {
            height += s.rise();
            height == 0
        })
        .expect("a valid nonempty Dyck path returns to the axis");
    Ok((
        DyckPath::from_steps_unchecked(steps[1..ret].to_vec()),
        DyckPath::from_steps_unchecked(steps[ret + 1..].to_vec()),
    ))
}

pub fn irreducible_components(path: &DyckPath) -> Vec<DyckPath> {
    let mut out = Vec::new();
    let mut height = 0i64;
    let mut start = 0;
    for (i, s) in path.steps().iter().enumerate() {
        height += s.rise();
        if height == 0 {
            out.push(DyckPath::from_steps_unchecked(path.steps()[start..=i].to_vec()));
            start = i + 1;
        }
    }
    out
}

/// The factor statistics that consecutive patterns of length 3 map to.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Statistic {
    Ddu,
    Ddd,
    Dudd,
    /// `D U^t D U` with `t >= 1`, anchored at the leading `D`.
    DuPlusDu,
    /// `D U^t D D` with `t >= 2`, anchored at the leading `D`.
    Du2PlusDd,
    /// Overlapping occurrences of an arbitrary nonempty factor.
    FixedFactor(Vec<Step>),
}

impl Statistic {
    pub fn fixed_factor(word: Vec<Step>) -> Result<Self> {
        if word.is_empty() {
            return Err(Error::OutOfDomain("factor statistic needs a nonempty word".into()));
        }
        Ok(Statistic::FixedFactor(word))
    }

    /// The factor word, for statistics that are a single fixed factor.
    pub fn factor(&self) -> Option<Vec<Step>> {
        use Step::{D, U};
        match self {
            Statistic::Ddu => Some(vec![D, D, U]),
            Statistic::Ddd => Some(vec![D, D, D]),
            Statistic::Dudd => Some(vec![D, U, D, D]),
            Statistic::FixedFactor(w) => Some(w.clone()),
            Statistic::DuPlusDu | Statistic::Du2PlusDd => None,
        }
    }

    pub const NAMED: [Statistic; 5] = [
        Statistic::Ddu,
        Statistic::Ddd,
        Statistic::Dudd,
        Statistic::DuPlusDu,
        Statistic::Du2PlusDd,
    ];
}

impl fmt::Display for Statistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Statistic::Ddu => f.write_str("DDU"),
            Statistic::Ddd => f.write_str("DDD"),
            Statistic::Dudd => f.write_str("DUDD"),
            Statistic::DuPlusDu => f.write_str("DU^tDU(t>=1)"),
            Statistic::Du2PlusDd => f.write_str("DU^tDD(t>=2)"),
            Statistic::FixedFactor(w) => w.iter().try_for_each(|s| write!(f, "{}", s.as_char())),
        }
    }
}

fn count_factor(steps: &[Step], word: &[Step]) -> usize {
    if word.is_empty() || word.len() > steps.len() {
        return 0;
    }
    steps.windows(word.len()).filter(|w| *w == word).count()
}

/// Occurrences of `D U^t D x` anchored at each `D`, with `t >= min_run`.
fn count_run_family(steps: &[Step], min_run: usize, last: Step) -> usize {
    let n = steps.len();
    (0..n)
        .filter(|&i| {
            if steps[i] != Step::D {
                return false;
            }
            let run = steps[i + 1..].iter().take_while(|&&s| s == Step::U).count();
            let j = i + 1 + run;
            run >= min_run && j + 1 < n && steps[j] == Step::D && steps[j + 1] == last
        })
        .count()
}

pub fn count_statistic(path: &DyckPath, stat: &Statistic) -> usize {
    let steps = path.steps();
    match stat {
        Statistic::DuPlusDu => count_run_family(steps, 1, Step::U),
        Statistic::Du2PlusDd => count_run_family(steps, 2, Step::D),
        other => count_factor(steps, &other.factor().expect("fixed factor")),
    }
}

/// The Deutsch involution `Δ(U A D B) = U Δ(B) D Δ(A)`, `Δ(ε) = ε`.
pub fn deutsch(path: &DyckPath) -> DyckPath {
    enum Task {
        Emit(Step),
        Map { start: usize, end: usize },
    }

    let steps = path.steps();
    let partner = matching_downs(steps);
    let mut out = Vec::with_capacity(steps.len());
    let mut stack = vec![Task::Map {
        start: 0,
        end: steps.len(),
    }];
    while let Some(task) = stack.pop() {
        match task {
            Task::Emit(s) => out.push(s),
            Task::Map { start, end } if start == end => {}
            Task::Map { start, end } => {
                let ret = partner[start];
                stack.push(Task::Map {
                    start: start + 1,
                    end: ret,
                });
                stack.push(Task::Emit(Step::D));
                stack.push(Task::Map {
                    start: ret + 1,
                    end,
                });
                stack.push(Task::Emit(Step::U));
            }
        }
    }
    DyckPath::from_steps_unchecked(out)
}

/// Lexicographic successor iterator over axis-to-axis paths of a fixed length.
#[derive(Debug, Clone)]
struct LexPaths<S> {
    len: usize,
    current: Vec<S>,
    started: bool,
    done: bool,
}

impl<S: Alphabet> LexPaths<S> {
    fn new(len: usize) -> Self {
        LexPaths {
            len,
            current: Vec::with_capacity(len),
            started: false,
            done: !S::completable(0, len),
        }
    }

    fn complete(&mut self, mut height: i64) {
        while self.current.len() < self.len {
            let remaining = self.len - self.current.len() - 1;
            let step = *S::STEPS
                .iter()
                .find(|s| S::completable(height + s.rise(), remaining))
                .expect("completion exists");
            height += step.rise();
            self.current.push(step);
        }
    }

    fn advance(&mut self) -> bool {
        if !self.started {
            self.started = true;
            self.complete(0);
            return true;
        }
        let mut heights = Vec::with_capacity(self.len + 1);
        heights.push(0i64);
        for s in &self.current {
            heights.push(heights.last().unwrap() + s.rise());
        }
        for i in (0..self.len).rev() {
            let remaining = self.len - i - 1;
            let h = heights[i];
            let bigger = S::STEPS
                .iter()
                .filter(|&&s| s > self.current[i])
                .find(|s| S::completable(h + s.rise(), remaining));
            if let Some(&s) = bigger {
                self.current.truncate(i);
                self.current.push(s);
                self.complete(h + s.rise());
                return true;
            }
        }
        false
    }
}

impl<S: Alphabet> Iterator for LexPaths<S> {
    type Item = Vec<S>;

    fn next(&mut self) -> Option<Vec<S>> {
        if self.done {
            return None;
        }
        if self.advance() {
            Some(self.current.clone())
        } else {
            self.done = true;
            None
        }
    }
}

/// All Dyck paths of semilength `n`, lexicographic with `U < D`.
pub fn enumerate_dyck(n: usize) -> impl Iterator<Item = DyckPath> {
    LexPaths::<Step>::new(2 * n).map(DyckPath::from_steps_unchecked)
}

/// All Motzkin paths of length `n`, lexicographic with `U < H < D`.
pub fn enumerate_motzkin(n: usize) -> impl Iterator<Item = MotzkinPath> {
    LexPaths::<MotzkinStep>::new(n).map(MotzkinPath::from_steps_unchecked)
}
