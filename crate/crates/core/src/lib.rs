//! Rewriting with the single associativity rule `(x*y)*z ⊳ x*(y*z)`.
//!
//! * [`term`] and [`text`]: binary terms and their canonical text form.
//! * [`measure`]: size, σ, depth of the rightmost leaf.
//! * [`rewrite`] and [`strategy`]: redexes, single steps, and the shortest
//!   (closest-to-root) and longest (deepest-leftmost) normalizers.
//! * [`enumerate`], [`graph`] and [`report`]: exhaustive oracles over every
//!   shape of a given size.
//!
//! All tree walks are iterative; terms nested a million levels deep are fine.

pub mod enumerate;
pub mod graph;
pub mod measure;
pub mod position;
pub mod report;
pub mod rewrite;
pub mod strategy;
pub mod term;
pub mod text;

pub use enumerate::{enumerate_shapes, enumerate_shapes_capped, OracleError, ENUMERATION_CAP};
pub use graph::{
    build_graph, build_graph_with, export_dot, longest_path_from, longest_paths, reachable_graph, shortest_path_from,
    shortest_paths, verify_sn, verify_unique_nf, verify_wcr, Edge, RewriteGraph, GRAPH_CAP,
};
pub use measure::{contains_redex, depth_rightmost, is_normal_form, max_sigma, sigma, size, Metrics};
pub use position::{Dir, Position};
pub use report::{verify_all, verify_all_with, verify_size, TermRecord, VerificationReport, VerifyOptions};
pub use rewrite::{apply_at, apply_at_mut, find_redexes, is_redex, step_ctr1, RewriteError};
pub use strategy::{normalize, normalize_ctr, normalize_longest, Step, Strategy, Trace};
pub use term::{Label, LabelError, Term};
pub use text::{parse, render, ParseError};
