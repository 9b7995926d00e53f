//! Binary terms over a single connective `*`.
//!
//! Every tree walk in this crate uses an explicit work-list. Left chains with
//! a million nodes are ordinary inputs, so `Clone`, `PartialEq`, `Hash` and
//! `Drop` are all written by hand instead of derived.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::mem;

use thiserror::Error;

/// A leaf label: a nonempty string over `[a-z0-9_]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Label(Box<str>);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LabelError {
    #[error("leaf label must be nonempty")]
    Empty,
    #[error("invalid character {0:?} in leaf label (allowed: a-z, 0-9, _)")]
    InvalidChar(char),
}

impl Label {
    pub fn new(text: &str) -> Result<Self, LabelError> {
        if text.is_empty() {
            return Err(LabelError::Empty);
        }
        if let Some(c) = text.chars().find(|&c| !is_label_char(c)) {
            return Err(LabelError::InvalidChar(c));
        }
        Ok(Label(text.into()))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

pub(crate) fn is_label_char(c: char) -> bool {
    c.is_ascii_lowercase() || c.is_ascii_digit() || c == '_'
}

impl fmt::Debug for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.as_str())
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A term: a leaf, optionally labeled, or `left * right`.
///
/// Structural equality (`==`) compares labels too; [`Term::same_shape`]
/// ignores them.
pub enum Term {
    Leaf(Option<Label>),
    Node(Box<Term>, Box<Term>),
}

impl Default for Term {
    fn default() -> Self {
        Term::Leaf(None)
    }
}

impl Term {
    /// The unlabeled leaf, written `.`.
    pub fn leaf() -> Self {
        Term::Leaf(None)
    }

    pub fn labeled(label: Label) -> Self {
        Term::Leaf(Some(label))
    }

    pub fn node(left: Term, right: Term) -> Self {
        Term::Node(Box::new(left), Box::new(right))
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, Term::Leaf(_))
    }

    pub fn label(&self) -> Option<&Label> {
        match self {
            Term::Leaf(label) => label.as_ref(),
            Term::Node(..) => None,
        }
    }

    pub fn children(&self) -> Option<(&Term, &Term)> {
        match self {
            Term::Leaf(_) => None,
            Term::Node(l, r) => Some((l, r)),
        }
    }

    pub fn left(&self) -> Option<&Term> {
        self.children().map(|(l, _)| l)
    }

    pub fn right(&self) -> Option<&Term> {
        self.children().map(|(_, r)| r)
    }

    /// `n`-left-chain: `left_chain(0)` is a leaf, `left_chain(n)` is
    /// `left_chain(n - 1) * .`.
    pub fn left_chain(n: usize) -> Self {
        let mut t = Term::leaf();
        for _ in 0..n {
            t = Term::node(t, Term::leaf());
        }
        t
    }

    /// `n`-right-chain, the mirror image of [`Term::left_chain`]. These are
    /// exactly the normal forms.
    pub fn right_chain(n: usize) -> Self {
        Self::right_comb(std::iter::repeat_with(Term::leaf).take(n + 1).collect())
    }

    /// Right-nested term over the given leaves, in order. Panics on an empty
    /// list.
    pub fn right_comb(leaves: Vec<Term>) -> Self {
        let mut leaves = leaves.into_iter().rev();
        let mut t = leaves.next().expect("right_comb needs at least one leaf");
        for leaf in leaves {
            t = Term::node(leaf, t);
        }
        t
    }

    /// Leaves from left to right.
    pub fn leaves(&self) -> Vec<&Term> {
        let mut out = Vec::new();
        let mut work = vec![self];
        while let Some(t) = work.pop() {
            match t {
                Term::Leaf(_) => out.push(t),
                Term::Node(l, r) => {
                    work.push(r);
                    work.push(l);
                }
            }
        }
        out
    }

    /// The same tree with every label removed.
    pub fn shape(&self) -> Term {
        self.fold(|_| Term::leaf(), Term::node)
    }

    pub fn same_shape(&self, other: &Term) -> bool {
        let mut work = vec![(self, other)];
        while let Some(pair) = work.pop() {
            match pair {
                (Term::Leaf(_), Term::Leaf(_)) => {}
                (Term::Node(a, b), Term::Node(c, d)) => {
                    work.push((b, d));
                    work.push((a, c));
                }
                _ => return false,
            }
        }
        true
    }

    /// Bottom-up fold with an explicit stack.
    pub fn fold<T>(&self, mut leaf: impl FnMut(&Term) -> T, mut node: impl FnMut(T, T) -> T) -> T {
        enum Frame<'a> {
            Visit(&'a Term),
            Combine,
        }
        let mut work = vec![Frame::Visit(self)];
        let mut values: Vec<T> = Vec::new();
        while let Some(frame) = work.pop() {
            match frame {
                Frame::Visit(t) => match t {
                    Term::Leaf(_) => values.push(leaf(t)),
                    Term::Node(l, r) => {
                        work.push(Frame::Combine);
                        work.push(Frame::Visit(r));
                        work.push(Frame::Visit(l));
                    }
                },
                Frame::Combine => {
                    let r = values.pop().expect("right value");
                    let l = values.pop().expect("left value");
                    values.push(node(l, r));
                }
            }
        }
        values.pop().expect("fold result")
    }
}

impl Clone for Term {
    fn clone(&self) -> Self {
        self.fold(
            |leaf| match leaf {
                Term::Leaf(label) => Term::Leaf(label.clone()),
                Term::Node(..) => unreachable!(),
            },
            Term::node,
        )
    }
}

impl PartialEq for Term {
    fn eq(&self, other: &Self) -> bool {
        let mut work = vec![(self, other)];
        while let Some(pair) = work.pop() {
            match pair {
                (Term::Leaf(a), Term::Leaf(b)) => {
                    if a != b {
                        return false;
                    }
                }
                (Term::Node(a, b), Term::Node(c, d)) => {
                    work.push((b, d));
                    work.push((a, c));
                }
                _ => return false,
            }
        }
        true
    }
}

impl Eq for Term {}

impl Hash for Term {
    fn hash<H: Hasher>(&self, state: &mut H) {
        let mut work = vec![self];
        while let Some(t) = work.pop() {
            match t {
                Term::Leaf(label) => {
                    0u8.hash(state);
                    label.hash(state);
                }
                Term::Node(l, r) => {
                    1u8.hash(state);
                    work.push(r);
                    work.push(l);
                }
            }
        }
    }
}

impl Drop for Term {
    fn drop(&mut self) {
        let Term::Node(l, r) = self else { return };
        if l.is_leaf() && r.is_leaf() {
            return;
        }
        let mut work = vec![mem::take(&mut **l), mem::take(&mut **r)];
        while let Some(mut t) = work.pop() {
            if let Term::Node(l, r) = &mut t {
                if !l.is_leaf() {
                    work.push(mem::take(&mut **l));
                }
                if !r.is_leaf() {
                    work.push(mem::take(&mut **r));
                }
            }
        }
    }
}

impl fmt::Debug for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::text::render(self))
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::text::render(self))
    }
}
