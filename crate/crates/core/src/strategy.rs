//! Normalization strategies and the traces they produce.
//!
//! Both strategies end at the same right chain. The shortest strategy takes
//! exactly `size - depth_rightmost` steps in linear total time; the longest
//! takes exactly `sigma` steps.

use std::fmt;
use std::str::FromStr;

use crate::position::Position;
use crate::rewrite::{apply_at_mut, contract_in_place, deepest_leftmost_redex, RewriteError};
use crate::term::Term;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Strategy {
    /// Rewrite as close to the root as possible.
    #[default]
    Shortest,
    /// Rewrite the deepest, then leftmost, redex.
    Longest,
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Strategy::Shortest => "shortest",
            Strategy::Longest => "longest",
        })
    }
}

impl FromStr for Strategy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "shortest" => Ok(Strategy::Shortest),
            "longest" => Ok(Strategy::Longest),
            other => Err(format!("unknown strategy {other:?} (expected shortest or longest)")),
        }
    }
}

/// One rewrite: where it happened and the whole term afterwards.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Step {
    pub position: Position,
    pub term_after: Term,
}

/// A rewrite sequence from `start` to the normal form `final_term`.
///
/// Only positions are stored; intermediate terms are rebuilt on demand by
/// [`Trace::steps`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Trace {
    start: Term,
    positions: Vec<Position>,
    final_term: Term,
}

impl Trace {
    pub fn start(&self) -> &Term {
        &self.start
    }

    pub fn final_term(&self) -> &Term {
        &self.final_term
    }

    pub fn positions(&self) -> &[Position] {
        &self.positions
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    /// Replays the trace, yielding each step with the term after it.
    pub fn steps(&self) -> Steps<'_> {
        Steps { current: self.start.clone(), positions: self.positions.iter() }
    }

    /// Folds every recorded step over `start`.
    pub fn replay(&self) -> Result<Term, RewriteError> {
        let mut t = self.start.clone();
        for p in &self.positions {
            apply_at_mut(&mut t, p)?;
        }
        Ok(t)
    }
}

pub struct Steps<'a> {
    current: Term,
    positions: std::slice::Iter<'a, Position>,
}

impl Iterator for Steps<'_> {
    type Item = Step;

    fn next(&mut self) -> Option<Step> {
        let position = self.positions.next()?;
        apply_at_mut(&mut self.current, position).expect("trace positions are redexes");
        Some(Step { position: position.clone(), term_after: self.current.clone() })
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        self.positions.size_hint()
    }
}

impl ExactSizeIterator for Steps<'_> {}

/// Closest-to-root normalization in a single pass.
///
/// A cursor walks the rightmost spine. While its left child is a leaf it
/// moves right; otherwise the rule fires in place at the cursor and the
/// cursor stays on the contractum. Descents and rotations are each bounded
/// by the size, so total work is linear and the confirmed prefix is never
/// rescanned.
pub fn normalize_ctr(t: &Term) -> Trace {
    let mut term = t.clone();
    let mut positions = Vec::new();
    let mut depth = 0;
    let mut cursor = &mut term;
    loop {
        let descend = match &*cursor {
            Term::Leaf(_) => break,
            Term::Node(l, _) => l.is_leaf(),
        };
        if descend {
            cursor = match cursor {
                Term::Node(_, r) => &mut **r,
                Term::Leaf(_) => unreachable!(),
            };
            depth += 1;
        } else {
            contract_in_place(cursor);
            positions.push(Position::right_spine(depth));
        }
    }
    Trace { start: t.clone(), positions, final_term: term }
}

/// Deepest-leftmost normalization. Every step lowers σ by exactly one, so
/// the trace has `sigma(t)` steps, the maximum possible.
///
/// The redex is re-located from scratch each step: `O(size)` per step.
pub fn normalize_longest(t: &Term) -> Trace {
    let mut term = t.clone();
    let mut positions = Vec::new();
    while let Some(p) = deepest_leftmost_redex(&term) {
        apply_at_mut(&mut term, &p).expect("located redex");
        positions.push(p);
    }
    Trace { start: t.clone(), positions, final_term: term }
}

pub fn normalize(t: &Term, strategy: Strategy) -> Trace {
    match strategy {
        Strategy::Shortest => normalize_ctr(t),
        Strategy::Longest => normalize_longest(t),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::measure::{depth_rightmost, is_normal_form, sigma, size};
    use crate::rewrite::step_ctr1;
    use crate::text::parse;

    fn p(s: &str) -> Term {
        parse(s).unwrap()
    }

    fn terms_after(trace: &Trace) -> Vec<String> {
        trace.steps().map(|s| s.term_after.to_string()).collect()
    }

    #[test]
    fn ctr_on_running_example() {
        let trace = normalize_ctr(&p("(((a*b)*c)*d)"));
        assert_eq!(trace.len(), 2);
        assert_eq!(terms_after(&trace), ["((a*b)*(c*d))", "(a*(b*(c*d)))"]);
        assert_eq!(trace.final_term(), &p("(a*(b*(c*d)))"));
    }

    #[test]
    fn ctr_on_leaf_and_left_chain() {
        let trace = normalize_ctr(&Term::leaf());
        assert!(trace.is_empty());
        assert_eq!(trace.final_term(), &Term::leaf());

        let trace = normalize_ctr(&Term::left_chain(5));
        assert_eq!(trace.len(), 4);
        assert_eq!(trace.final_term(), &Term::right_chain(5));
        assert_eq!(trace.replay().unwrap(), Term::right_chain(5));
    }

    #[test]
    fn longest_on_running_example() {
        let trace = normalize_longest(&p("(((a*b)*c)*d)"));
        assert_eq!(terms_after(&trace), ["((a*(b*c))*d)", "(a*((b*c)*d))", "(a*(b*(c*d)))"]);
        let shown: Vec<String> = trace.positions().iter().map(|p| p.to_string()).collect();
        assert_eq!(shown, ["L", "ε", "R"]);
    }

    #[test]
    fn longest_on_chains() {
        assert!(normalize_longest(&Term::right_chain(4)).is_empty());
        let trace = normalize_longest(&Term::left_chain(4));
        assert_eq!(trace.len(), 6);
        assert_eq!(trace.final_term(), &Term::right_chain(4));
    }

    #[test]
    fn strategies_agree_on_final() {
        let t = p("(((a*b)*c)*d)");
        let short = normalize(&t, Strategy::Shortest);
        let long = normalize(&t, Strategy::Longest);
        assert_eq!(short.final_term(), long.final_term());
        assert_eq!(short.final_term(), &p("(a*(b*(c*d)))"));
        assert!(normalize(&Term::leaf(), Strategy::Longest).is_empty());
    }

    #[test]
    fn ctr_matches_iterated_ctr1() {
        let t = p("((((a*b)*(c*d))*e)*((f*(g*h))*i))");
        let trace = normalize_ctr(&t);
        let mut cur = t.clone();
        let mut expected = Vec::new();
        while let Some((next, at)) = step_ctr1(&cur) {
            expected.push(Step { position: at, term_after: next.clone() });
            cur = next;
        }
        assert_eq!(trace.steps().collect::<Vec<_>>(), expected);
        assert_eq!(trace.len(), size(&t) - depth_rightmost(&t));
    }

    #[test]
    fn longest_steps_each_drop_sigma_by_one() {
        let t = p("((((a*b)*(c*d))*e)*((f*(g*h))*i))");
        let trace = normalize_longest(&t);
        assert_eq!(trace.len() as u64, sigma(&t));
        let mut prev = sigma(&t);
        for step in trace.steps() {
            let s = sigma(&step.term_after);
            assert_eq!(s + 1, prev);
            prev = s;
        }
        assert!(is_normal_form(trace.final_term()));
    }

    #[test]
    fn strategy_parse() {
        assert_eq!("longest".parse::<Strategy>(), Ok(Strategy::Longest));
        assert_eq!(Strategy::default(), Strategy::Shortest);
        assert!("fast".parse::<Strategy>().is_err());
    }
}
