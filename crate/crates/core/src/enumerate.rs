use thiserror::Error;

use crate::term::Term;
use crate::text::render;

/// Largest size [`enumerate_shapes`] accepts without an explicit cap.
pub const ENUMERATION_CAP: usize = 14;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("size {n} exceeds the cap of {cap} (raise it explicitly to go further)")]
    CapExceeded { n: usize, cap: usize },
    #[error("term {0} is not a node of this graph")]
    NotInGraph(String),
    #[error("edge endpoint {0} is not a node of this graph")]
    UnknownNode(String),
    #[error("the graph has a cycle")]
    Cyclic,
    #[error("more than {0} reachable terms")]
    TooManyTerms(usize),
}

/// Every unlabeled shape with `n` internal nodes, once each, sorted by
/// canonical string.
pub fn enumerate_shapes(n: usize) -> Result<Vec<Term>, OracleError> {
    enumerate_shapes_capped(n, ENUMERATION_CAP)
}

pub fn enumerate_shapes_capped(n: usize, cap: usize) -> Result<Vec<Term>, OracleError> {
    if n > cap {
        return Err(OracleError::CapExceeded { n, cap });
    }
    let mut by_size: Vec<Vec<Term>> = vec![vec![Term::leaf()]];
    for k in 1..=n {
        let mut shapes = Vec::new();
        for i in 0..k {
            for l in &by_size[i] {
                for r in &by_size[k - 1 - i] {
                    shapes.push(Term::node(l.clone(), r.clone()));
                }
            }
        }
        by_size.push(shapes);
    }
    let mut shapes = by_size.pop().expect("size n present");
    shapes.sort_by_cached_key(render);
    Ok(shapes)
}
