//! Paths from the root of a term.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::term::Term;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Dir {
    L,
    R,
}

/// A path of `L`/`R` moves; the empty path is the root and prints as `ε`.
///
/// Stored run-length encoded: normalization by the shortest strategy only
/// ever rewrites at `R^k`, so a trace of a deep term stays linear in size.
///
/// `Ord` is the redex-selection order: deeper positions first, then
/// lexicographic with `L < R`.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Position {
    runs: Vec<(Dir, usize)>,
    depth: usize,
}

impl Position {
    pub fn root() -> Self {
        Position::default()
    }

    /// `R` repeated `k` times.
    pub fn right_spine(k: usize) -> Self {
        let mut p = Position::root();
        p.push_n(Dir::R, k);
        p
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn is_root(&self) -> bool {
        self.depth == 0
    }

    pub fn push(&mut self, dir: Dir) {
        self.push_n(dir, 1);
    }

    fn push_n(&mut self, dir: Dir, n: usize) {
        if n == 0 {
            return;
        }
        match self.runs.last_mut() {
            Some((d, len)) if *d == dir => *len += n,
            _ => self.runs.push((dir, n)),
        }
        self.depth += n;
    }

    pub fn child(&self, dir: Dir) -> Self {
        let mut p = self.clone();
        p.push(dir);
        p
    }

    pub fn dirs(&self) -> impl Iterator<Item = Dir> + '_ {
        self.runs.iter().flat_map(|&(d, n)| std::iter::repeat_n(d, n))
    }

    /// Subterm at this position, or `None` if the path leaves the term.
    pub fn lookup<'t>(&self, t: &'t Term) -> Option<&'t Term> {
        let mut cur = t;
        for dir in self.dirs() {
            let (l, r) = cur.children()?;
            cur = match dir {
                Dir::L => l,
                Dir::R => r,
            };
        }
        Some(cur)
    }

    pub fn lookup_mut<'t>(&self, t: &'t mut Term) -> Option<&'t mut Term> {
        let mut cur = t;
        for dir in self.dirs() {
            cur = match (cur, dir) {
                (Term::Node(l, _), Dir::L) => &mut **l,
                (Term::Node(_, r), Dir::R) => &mut **r,
                (Term::Leaf(_), _) => return None,
            };
        }
        Some(cur)
    }
}

impl Ord for Position {
    fn cmp(&self, other: &Self) -> Ordering {
        other.depth.cmp(&self.depth).then_with(|| self.dirs().cmp(other.dirs()))
    }
}

impl PartialOrd for Position {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_root() {
            return f.write_str("ε");
        }
        for dir in self.dirs() {
            f.write_str(match dir {
                Dir::L => "L",
                Dir::R => "R",
            })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Position({self})")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid position character {0:?} (expected L, R, or ε for the root)")]
pub struct PositionParseError(pub char);

impl FromStr for Position {
    type Err = PositionParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut p = Position::root();
        if s == "ε" {
            return Ok(p);
        }
        for c in s.chars() {
            match c {
                'L' => p.push(Dir::L),
                'R' => p.push(Dir::R),
                other => return Err(PositionParseError(other)),
            }
        }
        Ok(p)
    }
}
