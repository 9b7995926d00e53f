//! Exit criteria. Runs every check, prints one PASS/FAIL line each, and
//! exits non-zero if any failed.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use assoc_nf::{
    apply_at, build_graph, depth_rightmost, enumerate_shapes, find_redexes, longest_paths, max_sigma, normalize_ctr,
    normalize_longest, parse, reachable_graph, render, shortest_paths, sigma, size, step_ctr1, verify_sn,
    verify_unique_nf, verify_wcr, RewriteGraph, Term,
};
use common::{catalan_by_recurrence, expected_normal_form, random_term, seeded};

const GRAPH_N_MAX: usize = 9;
const STEP_LAW_N_MAX: usize = 8;
const RANDOM_TERMS: usize = 1_000;
const RANDOM_TERM_SIZE: usize = 12;
const CTR_N: usize = 100_000;
const CTR_TIME_LIMIT: Duration = Duration::from_secs(2);
const CTR_DOUBLING_RATIO: f64 = 2.5;
const CATALAN_N_MAX: usize = 12;

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn graphs() -> Vec<RewriteGraph> {
    (0..=GRAPH_N_MAX).map(|n| build_graph(n).expect("within cap")).collect()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn exact_lengths(graphs: &[RewriteGraph]) -> Outcome {
    let mut checked = 0;
    for g in graphs {
        let longest = longest_paths(g).map_err(|e| e.to_string())?;
        let shortest = shortest_paths(g);
        for (u, name) in g.nodes().iter().enumerate() {
            let t = parse(name).unwrap();
            ensure(longest[u] as u64 == sigma(&t), || {
                format!("{name}: longest path {} but sigma {}", longest[u], sigma(&t))
            })?;
            let formula = size(&t) - depth_rightmost(&t);
            ensure(shortest[u] == Some(formula), || {
                format!("{name}: shortest path {:?} but n - d_rm = {formula}", shortest[u])
            })?;
            checked += 1;
        }
    }
    Ok(format!("{checked} shapes, n <= {GRAPH_N_MAX}"))
}

fn bound_and_tightness(graphs: &[RewriteGraph]) -> Outcome {
    for g in graphs {
        let n = g.n();
        let longest = longest_paths(g).map_err(|e| e.to_string())?;
        let max = longest.iter().copied().max().unwrap_or(0) as u64;
        ensure(max == max_sigma(n), || format!("n={n}: max longest {max}, bound {}", max_sigma(n)))?;
        let chain = g.index_of(&render(&Term::left_chain(n))).ok_or("left chain missing")?;
        ensure(longest[chain] as u64 == max_sigma(n), || format!("n={n}: left chain takes {}", longest[chain]))?;
    }
    Ok(format!("max longest = n(n-1)/2 attained by the left chain, n <= {GRAPH_N_MAX}"))
}

fn confluence(graphs: &[RewriteGraph]) -> Outcome {
    for g in graphs {
        let n = g.n();
        ensure(verify_sn(g), || format!("n={n}: cycle"))?;
        ensure(verify_wcr(g), || format!("n={n}: unjoinable divergence"))?;
        ensure(verify_unique_nf(g), || format!("n={n}: normal form not unique"))?;
        let sinks: Vec<&str> = g.sinks().iter().map(|&s| g.node(s)).collect();
        let expected = render(&Term::right_chain(n));
        ensure(sinks == [expected.as_str()], || format!("n={n}: sinks {sinks:?}"))?;
    }
    Ok(format!("SN, WCR, unique NF = right chain, n <= {GRAPH_N_MAX}"))
}

fn strategies_match_oracle(graphs: &[RewriteGraph]) -> Outcome {
    for g in graphs {
        let longest = longest_paths(g).map_err(|e| e.to_string())?;
        let shortest = shortest_paths(g);
        for (u, name) in g.nodes().iter().enumerate() {
            let t = parse(name).unwrap();
            check_strategies(&t, longest[u], shortest[u].ok_or("no normal form reachable")?)?;
        }
    }
    let mut rng = seeded(12);
    let mut nodes_explored = 0;
    for _ in 0..RANDOM_TERMS {
        let t = random_term(&mut rng, RANDOM_TERM_SIZE, true);
        let g = reachable_graph(&t, usize::MAX).map_err(|e| e.to_string())?;
        nodes_explored += g.node_count();
        let u = g.index_of(&render(&t)).ok_or("start term missing")?;
        let longest = longest_paths(&g).map_err(|e| e.to_string())?[u];
        let shortest = shortest_paths(&g)[u].ok_or("no normal form reachable")?;
        check_strategies(&t, longest, shortest)?;
    }
    Ok(format!(
        "all shapes n <= {GRAPH_N_MAX} and {RANDOM_TERMS} labeled terms of size {RANDOM_TERM_SIZE} ({nodes_explored} reachable terms searched)"
    ))
}

fn check_strategies(t: &Term, longest: usize, shortest: usize) -> Result<(), String> {
    let short = normalize_ctr(t);
    let long = normalize_longest(t);
    let nf = expected_normal_form(t);
    ensure(short.len() == shortest, || format!("{t}: ctr took {}, oracle {shortest}", short.len()))?;
    ensure(long.len() == longest, || format!("{t}: longest took {}, oracle {longest}", long.len()))?;
    ensure(short.final_term() == &nf, || format!("{t}: ctr ended at {}", short.final_term()))?;
    ensure(long.final_term() == &nf, || format!("{t}: longest ended at {}", long.final_term()))
}

fn sigma_step_law() -> Outcome {
    let mut steps = 0;
    for n in 0..=STEP_LAW_N_MAX {
        for t in enumerate_shapes(n).unwrap() {
            for p in find_redexes(&t) {
                let redex = p.lookup(&t).unwrap();
                let left_left = size(redex.left().unwrap().left().unwrap()) as u64;
                let after = apply_at(&t, &p).unwrap();
                ensure(sigma(&after) == sigma(&t) - left_left - 1, || {
                    format!("{t} at {p}: sigma {} -> {}, left-left size {left_left}", sigma(&t), sigma(&after))
                })?;
                steps += 1;
            }
        }
    }
    Ok(format!("{steps} redex steps, n <= {STEP_LAW_N_MAX}"))
}

fn ctr1_raises_depth() -> Outcome {
    let mut firings = 0;
    for n in 0..=STEP_LAW_N_MAX {
        for t in enumerate_shapes(n).unwrap() {
            if let Some((after, p)) = step_ctr1(&t) {
                ensure(depth_rightmost(&after) == depth_rightmost(&t) + 1, || {
                    format!("{t} at {p}: d_rm {} -> {}", depth_rightmost(&t), depth_rightmost(&after))
                })?;
                firings += 1;
            }
        }
    }
    Ok(format!("{firings} firings, n <= {STEP_LAW_N_MAX}"))
}

fn best_of(runs: usize, n: usize) -> Result<Duration, String> {
    let input = Term::left_chain(n);
    let mut best = Duration::MAX;
    for _ in 0..runs {
        let started = Instant::now();
        let trace = normalize_ctr(&input);
        let elapsed = started.elapsed();
        ensure(trace.len() == n - 1, || format!("n={n}: {} steps", trace.len()))?;
        best = best.min(elapsed);
    }
    Ok(best)
}

fn ctr_linear() -> Outcome {
    let trace = normalize_ctr(&Term::left_chain(CTR_N));
    ensure(trace.len() == CTR_N - 1, || format!("{} steps", trace.len()))?;
    ensure(trace.final_term() == &Term::right_chain(CTR_N), || "final is not the right chain".into())?;
    drop(trace);

    let single = best_of(5, CTR_N)?;
    let double = best_of(5, 2 * CTR_N)?;
    let ratio = double.as_secs_f64() / single.as_secs_f64();
    ensure(single < CTR_TIME_LIMIT, || format!("n={CTR_N} took {single:?}"))?;
    ensure(ratio <= CTR_DOUBLING_RATIO, || {
        format!("doubling ratio {ratio:.2} > {CTR_DOUBLING_RATIO} ({single:?} vs {double:?})")
    })?;
    Ok(format!("{} steps; {single:?} at n={CTR_N}, {double:?} at 2n (ratio {ratio:.2})", CTR_N - 1))
}

fn catalan_counts() -> Outcome {
    let catalan = catalan_by_recurrence(CATALAN_N_MAX);
    for (n, &expected) in catalan.iter().enumerate() {
        let got = enumerate_shapes(n).unwrap().len() as u64;
        ensure(got == expected, || format!("n={n}: {got} shapes, recurrence gives {expected}"))?;
    }
    Ok(format!("C(0..={CATALAN_N_MAX}) ending at {}", catalan[CATALAN_N_MAX]))
}

fn main() -> ExitCode {
    let graphs = graphs();
    let criteria: Vec<Criterion> = vec![
        ("AC1 longest = sigma, shortest = n - d_rm", Box::new(|| exact_lengths(&graphs))),
        ("AC2 bound n(n-1)/2 and tightness", Box::new(|| bound_and_tightness(&graphs))),
        ("AC3 confluence suite", Box::new(|| confluence(&graphs))),
        ("AC4 strategy/oracle agreement", Box::new(|| strategies_match_oracle(&graphs))),
        ("AC5 sigma step law", Box::new(sigma_step_law)),
        ("AC6 ctr1 raises d_rm by one", Box::new(ctr1_raises_depth)),
        ("AC7 ctr linear time and stack safety", Box::new(ctr_linear)),
        ("AC8 Catalan shape counts", Box::new(catalan_counts)),
    ];

    let mut failed = 0;
    for (name, check) in &criteria {
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("[PASS] {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("[FAIL] {name}: {why}");
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
