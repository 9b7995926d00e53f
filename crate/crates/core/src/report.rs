//! Per-size verification runs tying the measures and strategies to the
//! graph oracles.

use std::fmt::Write;

use rayon::prelude::*;
use serde::Serialize;

use crate::enumerate::OracleError;
use crate::graph::{
    build_graph_with, longest_paths, shortest_paths, verify_sn, verify_unique_nf, verify_wcr, GRAPH_CAP,
};
use crate::measure::{depth_rightmost, max_sigma, sigma, size};
use crate::strategy::{normalize_ctr, normalize_longest};
use crate::term::Term;
use crate::text::{parse, render};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TermRecord {
    pub term: String,
    pub n: usize,
    pub sigma: u64,
    pub d_rm: usize,
    pub longest: usize,
    pub shortest: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub n: usize,
    pub node_count: usize,
    pub edge_count: usize,
    pub records: Vec<TermRecord>,
    pub sn_ok: bool,
    pub wcr_ok: bool,
    pub unique_nf_ok: bool,
    /// The single normal form is the right chain.
    pub sink_is_right_chain: bool,
    /// Oracle longest path equals σ for every term.
    pub longest_matches_sigma: bool,
    /// Oracle shortest path equals `n - d_rm` for every term.
    pub shortest_matches_formula: bool,
    /// The shortest strategy's trace length equals the oracle shortest path.
    pub ctr_matches_shortest: bool,
    /// The longest strategy's trace length equals the oracle longest path.
    pub longest_strategy_matches: bool,
    /// σ strictly decreases along every edge.
    pub sigma_decreases: bool,
    pub max_longest: usize,
    pub max_attained_by: Vec<String>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.sn_ok
            && self.wcr_ok
            && self.unique_nf_ok
            && self.sink_is_right_chain
            && self.longest_matches_sigma
            && self.shortest_matches_formula
            && self.ctr_matches_shortest
            && self.longest_strategy_matches
            && self.sigma_decreases
            && self.max_longest as u64 == max_sigma(self.n)
            && self.max_attained_by.contains(&render(&Term::left_chain(self.n)))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    pub cap: usize,
    pub parallel: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { cap: GRAPH_CAP, parallel: true }
    }
}

/// One report per size `0..=n_max`.
pub fn verify_all(n_max: usize) -> Result<Vec<VerificationReport>, OracleError> {
    verify_all_with(n_max, VerifyOptions::default())
}

pub fn verify_all_with(n_max: usize, opts: VerifyOptions) -> Result<Vec<VerificationReport>, OracleError> {
    if n_max > opts.cap {
        return Err(OracleError::CapExceeded { n: n_max, cap: opts.cap });
    }
    (0..=n_max).map(|n| verify_size(n, opts)).collect()
}

struct Checked {
    record: TermRecord,
    ctr_len: usize,
    longest_len: usize,
}

pub fn verify_size(n: usize, opts: VerifyOptions) -> Result<VerificationReport, OracleError> {
    let g = build_graph_with(n, opts.cap, opts.parallel)?;
    let sn_ok = verify_sn(&g);
    let wcr_ok = verify_wcr(&g);
    let unique_nf_ok = verify_unique_nf(&g);
    let right_chain = render(&Term::right_chain(n));
    let sink_is_right_chain = g.sinks().iter().map(|&s| g.node(s)).eq([right_chain.as_str()]);

    let longest = if sn_ok { longest_paths(&g)? } else { vec![0; g.node_count()] };
    let shortest = shortest_paths(&g);

    let sigmas: Vec<u64> = g.nodes().iter().map(|s| sigma(&parse(s).expect("canonical"))).collect();
    let sigma_decreases = g.edges().all(|(u, v)| sigmas[v] < sigmas[u]);

    let check = |u: usize| {
        let t = parse(g.node(u)).expect("canonical");
        Checked {
            record: TermRecord {
                term: g.node(u).to_owned(),
                n: size(&t),
                sigma: sigmas[u],
                d_rm: depth_rightmost(&t),
                longest: longest[u],
                shortest: shortest[u].unwrap_or(usize::MAX),
            },
            ctr_len: normalize_ctr(&t).len(),
            longest_len: normalize_longest(&t).len(),
        }
    };
    let checked: Vec<Checked> = if opts.parallel {
        (0..g.node_count()).into_par_iter().map(check).collect()
    } else {
        (0..g.node_count()).map(check).collect()
    };

    let longest_matches_sigma = checked.iter().all(|c| c.record.longest as u64 == c.record.sigma);
    let shortest_matches_formula = checked.iter().all(|c| c.record.shortest == c.record.n - c.record.d_rm);
    let ctr_matches_shortest = checked.iter().all(|c| c.ctr_len == c.record.shortest);
    let longest_strategy_matches = checked.iter().all(|c| c.longest_len == c.record.longest);
    let max_longest = longest.iter().copied().max().unwrap_or(0);
    let max_attained_by =
        checked.iter().filter(|c| c.record.longest == max_longest).map(|c| c.record.term.clone()).collect();

    Ok(VerificationReport {
        n,
        node_count: g.node_count(),
        edge_count: g.edge_count(),
        records: checked.into_iter().map(|c| c.record).collect(),
        sn_ok,
        wcr_ok,
        unique_nf_ok,
        sink_is_right_chain,
        longest_matches_sigma,
        shortest_matches_formula,
        ctr_matches_shortest,
        longest_strategy_matches,
        sigma_decreases,
        max_longest,
        max_attained_by,
    })
}

/// Fixed-width summary, one row per size.
pub fn render_table(reports: &[VerificationReport]) -> String {
    let flag = |b: bool| if b { "ok" } else { "FAIL" };
    let mut out = String::new();
    writeln!(
        out,
        "{:>3} {:>7} {:>8} {:>4} {:>4} {:>9} {:>10} {:>11} {:>5} {:>8} {:>11} {:>6} {:>6}",
        "n",
        "shapes",
        "edges",
        "sn",
        "wcr",
        "unique_nf",
        "long=sigma",
        "short=n-drm",
        "ctr",
        "longest",
        "max_longest",
        "bound",
        "status"
    )
    .unwrap();
    for r in reports {
        writeln!(
            out,
            "{:>3} {:>7} {:>8} {:>4} {:>4} {:>9} {:>10} {:>11} {:>5} {:>8} {:>11} {:>6} {:>6}",
            r.n,
            r.node_count,
            r.edge_count,
            flag(r.sn_ok),
            flag(r.wcr_ok),
            flag(r.unique_nf_ok && r.sink_is_right_chain),
            flag(r.longest_matches_sigma),
            flag(r.shortest_matches_formula),
            flag(r.ctr_matches_shortest),
            flag(r.longest_strategy_matches && r.sigma_decreases),
            r.max_longest,
            max_sigma(r.n),
            if r.passed() { "PASS" } else { "FAIL" },
        )
        .unwrap();
    }
    out
}

/// One JSON object per term record, newline separated.
pub fn render_jsonl(reports: &[VerificationReport]) -> String {
    let mut out = String::new();
    for record in reports.iter().flat_map(|r| &r.records) {
        out.push_str(&serde_json::to_string(record).expect("plain record"));
        out.push('\n');
    }
    out
}
