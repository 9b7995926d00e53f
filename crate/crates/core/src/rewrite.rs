//! The rule `(x*y)*z ⊳ x*(y*z)`: redex location and single steps.

use thiserror::Error;

use crate::position::{Dir, Position};
use crate::term::Term;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RewriteError {
    #[error("no redex at position {0}")]
    NotARedex(Position),
    #[error("position {0} leaves the term")]
    InvalidPosition(Position),
}

/// A redex is an internal node whose left child is also internal.
pub fn is_redex(t: &Term) -> bool {
    matches!(t, Term::Node(l, _) if !l.is_leaf())
}

/// Every redex position, deeper first, then `L < R`.
pub fn find_redexes(t: &Term) -> Vec<Position> {
    let mut found = Vec::new();
    let mut work = vec![(t, Position::root())];
    while let Some((t, p)) = work.pop() {
        if let Term::Node(l, r) = t {
            if !l.is_leaf() {
                found.push(p.clone());
            }
            work.push((r, p.child(Dir::R)));
            work.push((l, p.child(Dir::L)));
        }
    }
    found.sort();
    found
}

/// The deepest redex, leftmost among those of maximal depth. `None` on a
/// normal form.
pub fn deepest_leftmost_redex(t: &Term) -> Option<Position> {
    let mut best: Option<Position> = None;
    // Pre-order with L before R visits equal-depth positions in lexicographic
    // order, so only a strictly deeper hit replaces the current best.
    let mut work = vec![(t, Position::root())];
    while let Some((t, p)) = work.pop() {
        if let Term::Node(l, r) = t {
            if !l.is_leaf() && best.as_ref().is_none_or(|b| p.depth() > b.depth()) {
                best = Some(p.clone());
            }
            work.push((r, p.child(Dir::R)));
            work.push((l, p.child(Dir::L)));
        }
    }
    best
}

/// Rotates the redex at the root of `t` in place. Returns `false` (and leaves
/// `t` untouched) if the root is not a redex.
pub(crate) fn contract_in_place(t: &mut Term) -> bool {
    let Term::Node(left, right) = t else { return false };
    if left.is_leaf() {
        return false;
    }
    // (a*b)*c: three pointer swaps turn it into a*(b*c), reusing the inner
    // node's allocation.
    std::mem::swap(left, right);
    let Term::Node(a, b) = &mut **right else { unreachable!() };
    std::mem::swap(a, b);
    std::mem::swap(left, b);
    true
}

/// Applies the rule at `p`, in place.
pub fn apply_at_mut(t: &mut Term, p: &Position) -> Result<(), RewriteError> {
    let sub = p.lookup_mut(t).ok_or_else(|| RewriteError::InvalidPosition(p.clone()))?;
    if contract_in_place(sub) {
        Ok(())
    } else {
        Err(RewriteError::NotARedex(p.clone()))
    }
}

/// Returns `t` with the redex at `p` replaced by its contractum.
pub fn apply_at(t: &Term, p: &Position) -> Result<Term, RewriteError> {
    match p.lookup(t) {
        None => return Err(RewriteError::InvalidPosition(p.clone())),
        Some(sub) if !is_redex(sub) => return Err(RewriteError::NotARedex(p.clone())),
        Some(_) => {}
    }
    let mut out = t.clone();
    apply_at_mut(&mut out, p)?;
    Ok(out)
}

/// Position of the first node on the rightmost spine whose left child is
/// internal.
pub fn ctr1_position(t: &Term) -> Option<Position> {
    let mut depth = 0;
    let mut cur = t;
    loop {
        match cur {
            Term::Leaf(_) => return None,
            Term::Node(l, _) if !l.is_leaf() => return Some(Position::right_spine(depth)),
            Term::Node(_, r) => {
                cur = r;
                depth += 1;
            }
        }
    }
}

/// One step of the closest-to-root strategy: walk down the rightmost spine
/// past nodes with a leaf on the left, and rewrite at the first node that is
/// a redex. `None` iff `t` is in normal form.
///
/// Each firing pushes the rightmost leaf one level deeper.
pub fn step_ctr1(t: &Term) -> Option<(Term, Position)> {
    let p = ctr1_position(t)?;
    let next = apply_at(t, &p).expect("ctr1 position is a redex");
    Some((next, p))
}
