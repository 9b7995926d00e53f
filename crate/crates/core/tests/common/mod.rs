#![allow(dead_code)]

use assoc_nf::{Label, Term};
use proptest::prelude::*;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const LABELS: [&str; 8] = ["a", "b", "c", "d", "e", "x1", "y_2", "z"];

/// Random term with exactly `n` internal nodes: the root splits the
/// remaining `n - 1` nodes uniformly between its children.
pub fn random_term(rng: &mut impl Rng, n: usize, labeled: bool) -> Term {
    if n == 0 {
        return if labeled {
            Term::labeled(Label::new(LABELS[rng.gen_range(0..LABELS.len())]).unwrap())
        } else {
            Term::leaf()
        };
    }
    let left = rng.gen_range(0..n);
    let l = random_term(rng, left, labeled);
    let r = random_term(rng, n - 1 - left, labeled);
    Term::node(l, r)
}

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Labeled or unlabeled terms with up to `max_n` internal nodes.
pub fn arb_term(max_n: usize) -> impl Strategy<Value = Term> {
    (0..=max_n, any::<u64>(), any::<bool>()).prop_map(|(n, seed, labeled)| random_term(&mut seeded(seed), n, labeled))
}

/// Catalan numbers from the recurrence C(0) = 1, C(n) = sum C(i) C(n-1-i).
pub fn catalan_by_recurrence(max_n: usize) -> Vec<u64> {
    let mut c = vec![1u64];
    for n in 1..=max_n {
        c.push((0..n).map(|i| c[i] * c[n - 1 - i]).sum());
    }
    c
}

/// The right chain over `t`'s leaves, in order: the only possible normal
/// form of `t`.
pub fn expected_normal_form(t: &Term) -> Term {
    Term::right_comb(t.leaves().into_iter().cloned().collect())
}
