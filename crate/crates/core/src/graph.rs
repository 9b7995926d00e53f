//! The one-step rewrite graph on a finite set of terms, and the graph-side
//! oracles: termination, local confluence, unique normal forms, and exact
//! longest/shortest distances to normal form.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt::Write;

use rayon::prelude::*;

use crate::enumerate::{enumerate_shapes_capped, OracleError};
use crate::rewrite::{apply_at, find_redexes};
use crate::term::Term;
use crate::text::render;

/// Largest size [`build_graph`] accepts without an explicit cap.
pub const GRAPH_CAP: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Edge {
    pub target: usize,
    /// Number of distinct redex positions producing this same successor.
    pub multiplicity: u32,
}

/// Nodes are canonical term strings in sorted order; node ids are indices
/// into that order. Parallel edges are collapsed, with their count kept in
/// [`Edge::multiplicity`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RewriteGraph {
    n: usize,
    nodes: Vec<String>,
    succ: Vec<Vec<Edge>>,
}

impl RewriteGraph {
    /// Builds a graph from explicit node names and edges. Nodes are
    /// deduplicated and sorted.
    pub fn from_edges<N, E>(n: usize, nodes: N, edges: E) -> Result<Self, OracleError>
    where
        N: IntoIterator<Item = String>,
        E: IntoIterator<Item = (String, String)>,
    {
        let mut nodes: Vec<String> = nodes.into_iter().collect();
        nodes.sort();
        nodes.dedup();
        let index =
            |s: &str| nodes.binary_search_by(|k| k.as_str().cmp(s)).map_err(|_| OracleError::UnknownNode(s.to_owned()));
        let mut pairs = Vec::new();
        for (u, v) in edges {
            pairs.push((index(&u)?, index(&v)?));
        }
        Ok(Self::assemble(n, nodes, pairs))
    }

    /// `nodes` must already be sorted and unique.
    fn assemble(n: usize, nodes: Vec<String>, pairs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut counts: Vec<BTreeMap<usize, u32>> = vec![BTreeMap::new(); nodes.len()];
        for (u, v) in pairs {
            *counts[u].entry(v).or_insert(0) += 1;
        }
        let succ = counts
            .into_iter()
            .map(|m| m.into_iter().map(|(target, multiplicity)| Edge { target, multiplicity }).collect())
            .collect();
        RewriteGraph { n, nodes, succ }
    }

    /// Term size shared by every node.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    /// Distinct `(u, v)` pairs.
    pub fn edge_count(&self) -> usize {
        self.succ.iter().map(Vec::len).sum()
    }

    /// One-step rewrites counted with multiplicity.
    pub fn step_count(&self) -> usize {
        self.succ.iter().flatten().map(|e| e.multiplicity as usize).sum()
    }

    pub fn nodes(&self) -> &[String] {
        &self.nodes
    }

    pub fn node(&self, id: usize) -> &str {
        &self.nodes[id]
    }

    pub fn index_of(&self, canonical: &str) -> Option<usize> {
        self.nodes.binary_search_by(|k| k.as_str().cmp(canonical)).ok()
    }

    pub fn successors(&self, id: usize) -> &[Edge] {
        &self.succ[id]
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.succ.iter().enumerate().flat_map(|(u, es)| es.iter().map(move |e| (u, e.target)))
    }

    /// Nodes without successors, i.e. normal forms.
    pub fn sinks(&self) -> Vec<usize> {
        (0..self.node_count()).filter(|&u| self.succ[u].is_empty()).collect()
    }

    fn predecessors(&self) -> Vec<Vec<usize>> {
        let mut pred = vec![Vec::new(); self.node_count()];
        for (u, v) in self.edges() {
            pred[v].push(u);
        }
        pred
    }

    /// Kahn's algorithm; `None` if there is a cycle.
    pub fn topological_order(&self) -> Option<Vec<usize>> {
        let mut indegree = vec![0usize; self.node_count()];
        for (_, v) in self.edges() {
            indegree[v] += 1;
        }
        let mut ready: VecDeque<usize> = (0..self.node_count()).filter(|&u| indegree[u] == 0).collect();
        let mut order = Vec::with_capacity(self.node_count());
        while let Some(u) = ready.pop_front() {
            order.push(u);
            for e in &self.succ[u] {
                indegree[e.target] -= 1;
                if indegree[e.target] == 0 {
                    ready.push_back(e.target);
                }
            }
        }
        (order.len() == self.node_count()).then_some(order)
    }

    fn reachable_from(&self, start: usize) -> Vec<bool> {
        let mut seen = vec![false; self.node_count()];
        seen[start] = true;
        let mut work = vec![start];
        while let Some(u) = work.pop() {
            for e in &self.succ[u] {
                if !seen[e.target] {
                    seen[e.target] = true;
                    work.push(e.target);
                }
            }
        }
        seen
    }

    fn lookup(&self, t: &Term) -> Result<usize, OracleError> {
        let key = render(t);
        self.index_of(&key).ok_or(OracleError::NotInGraph(key))
    }
}

/// The rewrite graph over every shape of size `n`.
pub fn build_graph(n: usize) -> Result<RewriteGraph, OracleError> {
    build_graph_with(n, GRAPH_CAP, true)
}

/// [`build_graph`] with an explicit cap; `parallel` spreads successor
/// computation over threads without changing the result.
pub fn build_graph_with(n: usize, cap: usize, parallel: bool) -> Result<RewriteGraph, OracleError> {
    if n > cap {
        return Err(OracleError::CapExceeded { n, cap });
    }
    let shapes = enumerate_shapes_capped(n, cap)?;
    let nodes: Vec<String> = shapes.iter().map(render).collect();
    let successors = |t: &Term| -> Vec<usize> {
        find_redexes(t)
            .iter()
            .map(|p| {
                let next = render(&apply_at(t, p).expect("found redex"));
                nodes.binary_search(&next).expect("rewriting preserves size")
            })
            .collect()
    };
    let targets: Vec<Vec<usize>> =
        if parallel { shapes.par_iter().map(successors).collect() } else { shapes.iter().map(successors).collect() };
    let pairs: Vec<(usize, usize)> =
        targets.iter().enumerate().flat_map(|(u, vs)| vs.iter().map(move |&v| (u, v))).collect();
    Ok(RewriteGraph::assemble(n, nodes, pairs))
}

/// Every term reachable from `t` (labels kept), explored breadth-first.
/// Fails once more than `max_nodes` terms have been discovered.
pub fn reachable_graph(t: &Term, max_nodes: usize) -> Result<RewriteGraph, OracleError> {
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut names: Vec<String> = Vec::new();
    let mut pairs = Vec::new();
    let mut queue = VecDeque::new();

    let start = render(t);
    index.insert(start.clone(), 0);
    names.push(start);
    queue.push_back((0, t.clone()));
    while let Some((u, term)) = queue.pop_front() {
        for p in find_redexes(&term) {
            let next = apply_at(&term, &p).expect("found redex");
            let key = render(&next);
            let v = match index.get(&key) {
                Some(&v) => v,
                None => {
                    if names.len() == max_nodes {
                        return Err(OracleError::TooManyTerms(max_nodes));
                    }
                    let v = names.len();
                    index.insert(key.clone(), v);
                    names.push(key);
                    queue.push_back((v, next));
                    v
                }
            };
            pairs.push((u, v));
        }
    }

    // Renumber into sorted order.
    let mut order: Vec<usize> = (0..names.len()).collect();
    order.sort_by(|&a, &b| names[a].cmp(&names[b]));
    let mut rank = vec![0; names.len()];
    for (new, &old) in order.iter().enumerate() {
        rank[old] = new;
    }
    let mut sorted = vec![String::new(); names.len()];
    for (old, name) in names.into_iter().enumerate() {
        sorted[rank[old]] = name;
    }
    let pairs = pairs.into_iter().map(|(u, v)| (rank[u], rank[v]));
    Ok(RewriteGraph::assemble(crate::measure::size(t), sorted, pairs))
}

/// Termination on a finite graph: no cycles.
pub fn verify_sn(g: &RewriteGraph) -> bool {
    g.topological_order().is_some()
}

/// Exactly one normal form, reachable from every node.
pub fn verify_unique_nf(g: &RewriteGraph) -> bool {
    let sinks = g.sinks();
    let [sink] = sinks[..] else { return false };
    let pred = g.predecessors();
    let mut seen = vec![false; g.node_count()];
    seen[sink] = true;
    let mut work = vec![sink];
    let mut reached = 1;
    while let Some(v) = work.pop() {
        for &u in &pred[v] {
            if !seen[u] {
                seen[u] = true;
                reached += 1;
                work.push(u);
            }
        }
    }
    reached == g.node_count()
}

/// Local confluence: every pair of distinct one-step successors of a node
/// has a common reduct.
///
/// On an acyclic graph every reduct leads on to some normal form, so two
/// terms are joinable iff the sets of normal forms they reach intersect;
/// with a unique normal form this is plain normal-form equality. With a
/// cycle present the check falls back to comparing full reachable sets.
pub fn verify_wcr(g: &RewriteGraph) -> bool {
    let divergences = || {
        (0..g.node_count()).flat_map(move |w| {
            let succ = g.successors(w);
            (0..succ.len()).flat_map(move |i| (i + 1..succ.len()).map(move |j| (succ[i].target, succ[j].target)))
        })
    };
    match g.topological_order() {
        Some(order) => {
            let mut nfs: Vec<Vec<usize>> = vec![Vec::new(); g.node_count()];
            for &u in order.iter().rev() {
                let mut set: Vec<usize> = if g.successors(u).is_empty() {
                    vec![u]
                } else {
                    g.successors(u).iter().flat_map(|e| nfs[e.target].iter().copied()).collect()
                };
                set.sort_unstable();
                set.dedup();
                nfs[u] = set;
            }
            divergences().all(|(x, y)| sorted_intersect(&nfs[x], &nfs[y]))
        }
        None => divergences().all(|(x, y)| {
            let from_x = g.reachable_from(x);
            let from_y = g.reachable_from(y);
            from_x.iter().zip(&from_y).any(|(&a, &b)| a && b)
        }),
    }
}

fn sorted_intersect(a: &[usize], b: &[usize]) -> bool {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => return true,
        }
    }
    false
}

/// Longest path from each node to a normal form, by dynamic programming in
/// reverse topological order.
pub fn longest_paths(g: &RewriteGraph) -> Result<Vec<usize>, OracleError> {
    let order = g.topological_order().ok_or(OracleError::Cyclic)?;
    let mut longest = vec![0usize; g.node_count()];
    for &u in order.iter().rev() {
        longest[u] = g.successors(u).iter().map(|e| longest[e.target] + 1).max().unwrap_or(0);
    }
    Ok(longest)
}

/// Shortest path from each node to a normal form: breadth-first search
/// backwards from every sink. `None` for nodes that reach no sink.
pub fn shortest_paths(g: &RewriteGraph) -> Vec<Option<usize>> {
    let pred = g.predecessors();
    let mut dist = vec![None; g.node_count()];
    let mut queue = VecDeque::new();
    for s in g.sinks() {
        dist[s] = Some(0);
        queue.push_back(s);
    }
    while let Some(v) = queue.pop_front() {
        let d = dist[v].expect("queued nodes have a distance");
        for &u in &pred[v] {
            if dist[u].is_none() {
                dist[u] = Some(d + 1);
                queue.push_back(u);
            }
        }
    }
    dist
}

/// Longest rewrite sequence from `t` to normal form. `t` is looked up by its
/// canonical string, so it must match the graph's node labelling.
pub fn longest_path_from(g: &RewriteGraph, t: &Term) -> Result<usize, OracleError> {
    let u = g.lookup(t)?;
    Ok(longest_paths(g)?[u])
}

pub fn shortest_path_from(g: &RewriteGraph, t: &Term) -> Result<usize, OracleError> {
    let u = g.lookup(t)?;
    shortest_paths(g)[u].ok_or(OracleError::Cyclic)
}

/// Graphviz rendering. Normal forms get a double border; collapsed parallel
/// edges carry their multiplicity as a label.
pub fn export_dot(g: &RewriteGraph) -> String {
    let mut out = String::new();
    writeln!(out, "digraph rewrite_n{} {{", g.n()).unwrap();
    writeln!(out, "    node [shape=box fontname=monospace];").unwrap();
    for (u, name) in g.nodes().iter().enumerate() {
        if g.successors(u).is_empty() {
            writeln!(out, "    \"{}\" [peripheries=2];", escape(name)).unwrap();
        } else {
            writeln!(out, "    \"{}\";", escape(name)).unwrap();
        }
    }
    for (u, edges) in g.succ.iter().enumerate() {
        for e in edges {
            write!(out, "    \"{}\" -> \"{}\"", escape(g.node(u)), escape(g.node(e.target))).unwrap();
            if e.multiplicity > 1 {
                write!(out, " [label=\"{}\"]", e.multiplicity).unwrap();
            }
            out.push_str(";\n");
        }
    }
    out.push_str("}\n");
    out
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}
