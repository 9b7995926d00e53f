//! Size, the σ measure, and the depth of the rightmost leaf.

use serde::Serialize;

use crate::term::Term;

/// Number of internal nodes.
pub fn size(t: &Term) -> usize {
    let mut count = 0;
    let mut work = vec![t];
    while let Some(t) = work.pop() {
        if let Term::Node(l, r) = t {
            count += 1;
            work.push(r);
            work.push(l);
        }
    }
    count
}

/// σ: zero at a leaf, otherwise σ(left) + σ(right) + size(left).
///
/// Equivalently, the sum over internal nodes of the size of their left
/// subtree. It is the exact length of the longest rewrite sequence to normal
/// form and drops by at least one on every rewrite step.
pub fn sigma(t: &Term) -> u64 {
    let (_, s) = t.fold(
        |_| (0u64, 0u64),
        |(size_l, sigma_l), (size_r, sigma_r)| (1 + size_l + size_r, sigma_l + sigma_r + size_l),
    );
    s
}

/// Edges from the root to the rightmost leaf.
pub fn depth_rightmost(t: &Term) -> usize {
    let mut depth = 0;
    let mut cur = t;
    while let Term::Node(_, r) = cur {
        depth += 1;
        cur = r;
    }
    depth
}

/// A term is in normal form iff its rightmost leaf sits at depth `size`,
/// i.e. it is a right chain.
pub fn is_normal_form(t: &Term) -> bool {
    depth_rightmost(t) == size(t)
}

/// Direct scan: does any subterm have an internal node as its left child?
pub fn contains_redex(t: &Term) -> bool {
    let mut work = vec![t];
    while let Some(t) = work.pop() {
        if let Term::Node(l, r) = t {
            if !l.is_leaf() {
                return true;
            }
            work.push(r);
        }
    }
    false
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Metrics {
    pub size: usize,
    pub sigma: u64,
    pub d_rm: usize,
    pub is_nf: bool,
}

impl Metrics {
    pub fn of(t: &Term) -> Self {
        let size = size(t);
        let d_rm = depth_rightmost(t);
        Metrics { size, sigma: sigma(t), d_rm, is_nf: d_rm == size }
    }
}

/// `n (n - 1) / 2`, the longest possible rewrite sequence on a term of size
/// `n`. The formula also gives 0 for `n = 0`.
pub fn max_sigma(n: usize) -> u64 {
    let n = n as u64;
    n * n.saturating_sub(1) / 2
}
