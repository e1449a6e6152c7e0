//! Term corpora: exhaustive enumeration and seeded random sampling.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::term::{GenKind, Generator, Term};

/// All generators with index in `1..=max_index`.
pub fn generators(max_index: u32) -> Vec<Generator> {
    [GenKind::Cup, GenKind::Cap, GenKind::Cross]
        .into_iter()
        .flat_map(|kind| (1..=max_index).map(move |k| Generator::new(kind, k)))
        .collect()
}

/// Every term of length at most `max_len` over generators with index at
/// most `max_index`, shortest first.
pub fn exhaustive(max_index: u32, max_len: usize) -> Vec<Term> {
    let gens = generators(max_index);
    let mut out = vec![Term::one()];
    let mut layer = vec![Term::one()];
    for _ in 0..max_len {
        let next: Vec<Term> = layer
            .iter()
            .flat_map(|t| {
                gens.iter().map(move |&g| {
                    let mut t = t.clone();
                    t.push(g);
                    t
                })
            })
            .collect();
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// A uniformly random term with length in `0..=max_len`.
pub fn random_term<R: Rng>(rng: &mut R, max_index: u32, max_len: usize) -> Term {
    let len = rng.gen_range(0..=max_len);
    (0..len)
        .map(|_| {
            let kind = match rng.gen_range(0..3) {
                0 => GenKind::Cup,
                1 => GenKind::Cap,
                _ => GenKind::Cross,
            };
            Generator::new(kind, rng.gen_range(1..=max_index))
        })
        .collect()
}

/// `count` random terms drawn from a generator seeded with `seed`.
pub fn random_terms(seed: u64, count: usize, max_index: u32, max_len: usize) -> Vec<Term> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_term(&mut rng, max_index, max_len)).collect()
}
