//! Minimum-weight erasure: the cheapest set of letters to delete from a word
//! so that the kept subsequence is trivial in the free group.
//!
//! A word is trivial exactly when its letters admit a non-crossing perfect
//! matching of mutually inverse pairs, which gives the interval recurrence
//! solved here: either the first letter of an interval is deleted, or it is
//! matched against a later inverse letter and the two enclosed intervals are
//! solved independently. Ties are broken towards the lexicographically
//! smallest deletion-count vector, then towards deleting earlier positions.
//!
//! `exhaustive_oracle` re-solves the same problem by enumerating all deletion
//! subsets and free-reducing the kept subsequence; it shares no code with the
//! dynamic program and exists to cross-check it.

use num_traits::Zero;
use thiserror::Error;

use crate::coord::Coord;
use crate::word::{Letter, Word};

/// Hard cap for the exponential searches.
pub const ORACLE_MAX_LEN: usize = 20;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SolverError {
    #[error("weight vector has {got} entries but the word uses generator {needed}")]
    MissingWeight { needed: usize, got: usize },
    #[error("weight for generator {0} is not positive")]
    NonPositiveWeight(usize),
    #[error("word of length {0} exceeds the exhaustive search bound of {ORACLE_MAX_LEN}")]
    WordTooLong(usize),
}

/// Positive face areas indexed by generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Weights {
    w: Vec<Coord>,
}

impl Weights {
    pub fn new(w: Vec<Coord>) -> Result<Weights, SolverError> {
        for (i, x) in w.iter().enumerate() {
            if *x <= Coord::zero() {
                return Err(SolverError::NonPositiveWeight(i));
            }
        }
        Ok(Weights { w })
    }

    pub fn len(&self) -> usize {
        self.w.len()
    }

    pub fn is_empty(&self) -> bool {
        self.w.is_empty()
    }

    pub fn get(&self, gen: usize) -> &Coord {
        &self.w[gen]
    }

    pub fn as_slice(&self) -> &[Coord] {
        &self.w
    }

    fn check_covers(&self, word: &Word) -> Result<(), SolverError> {
        let needed = word.generator_count();
        if needed > self.w.len() {
            return Err(SolverError::MissingWeight {
                needed,
                got: self.w.len(),
            });
        }
        Ok(())
    }
}

/// A verifiable witness for an erasure optimum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ErasureCertificate {
    /// Deletions per generator; `k[i]` letters of generator `i` were deleted.
    pub k: Vec<usize>,
    /// Deleted positions in the input word, ascending.
    pub deleted_positions: Vec<usize>,
    /// Non-crossing pairing of all kept positions into inverse pairs.
    pub matching: Vec<(usize, usize)>,
}

impl ErasureCertificate {
    /// Replay the certificate against the word it was issued for: delete the
    /// listed positions, then check that the kept subsequence freely reduces
    /// to the empty word and that `k` counts the deletions per generator.
    /// Also checks the matching itself: complete over kept positions,
    /// mutually inverse, non-crossing.
    pub fn replay(&self, word: &Word) -> bool {
        let n = word.len();
        if self.deleted_positions.iter().any(|&p| p >= n) {
            return false;
        }
        let mut deleted = vec![false; n];
        for &p in &self.deleted_positions {
            if deleted[p] {
                return false; // duplicate
            }
            deleted[p] = true;
        }
        // k counts deletions per generator.
        let gens = word.generator_count().max(self.k.len());
        let mut counts = vec![0usize; gens];
        for &p in &self.deleted_positions {
            counts[word.letters[p].gen] += 1;
        }
        if counts.len() != self.k.len() || counts != self.k {
            return false;
        }
        // Kept subsequence freely reduces to the null word.
        let kept = Word::new(
            word.letters
                .iter()
                .enumerate()
                .filter(|(i, _)| !deleted[*i])
                .map(|(_, &l)| l)
                .collect(),
        );
        if !kept.is_trivial() {
            return false;
        }
        // Matching covers exactly the kept positions, pairs are inverse and
        // non-crossing.
        let mut matched = vec![false; n];
        for &(i, j) in &self.matching {
            if i >= j || j >= n || deleted[i] || deleted[j] || matched[i] || matched[j] {
                return false;
            }
            if !word.letters[i].is_inverse_of(word.letters[j]) {
                return false;
            }
            matched[i] = true;
            matched[j] = true;
        }
        for p in 0..n {
            if !deleted[p] && !matched[p] {
                return false;
            }
        }
        for (a, &(i, j)) in self.matching.iter().enumerate() {
            for &(k, l) in &self.matching[a + 1..] {
                let crossing = (i < k && k < j && j < l) || (k < i && i < l && l < j);
                if crossing {
                    return false;
                }
            }
        }
        true
    }

    /// Total weight of the deleted letters.
    pub fn cost(&self, weights: &Weights) -> Coord {
        self.k
            .iter()
            .enumerate()
            .map(|(g, &c)| weights.get(g) * Coord::from_integer(c.into()))
            .sum()
    }
}

/// Deletion-count vectors ordered first by cost, then lexicographically.
/// Both components add componentwise, so the order is compatible with
/// combining independent subproblems.
#[derive(Debug, Clone, PartialEq, Eq)]
struct DpValue {
    cost: Coord,
    k: Vec<usize>,
}

impl DpValue {
    fn zero(gens: usize) -> DpValue {
        DpValue {
            cost: Coord::zero(),
            k: vec![0; gens],
        }
    }

    fn plus(&self, other: &DpValue) -> DpValue {
        DpValue {
            cost: &self.cost + &other.cost,
            k: self
                .k
                .iter()
                .zip(&other.k)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    fn plus_letter(&self, letter: Letter, weights: &Weights) -> DpValue {
        let mut k = self.k.clone();
        k[letter.gen] += 1;
        DpValue {
            cost: &self.cost + weights.get(letter.gen),
            k,
        }
    }

    fn better_than(&self, other: &DpValue) -> bool {
        match self.cost.cmp(&other.cost) {
            std::cmp::Ordering::Less => true,
            std::cmp::Ordering::Greater => false,
            std::cmp::Ordering::Equal => self.k < other.k,
        }
    }
}

#[derive(Debug, Clone, Copy)]
enum Choice {
    Delete,
    Match(usize),
}

/// Minimum total weight of letters to delete from `word` so that the kept
/// subsequence is trivial, with a replayable certificate. Deleting every
/// letter is always feasible, so a solution exists for any word.
pub fn min_weight_erasure(
    word: &Word,
    weights: &Weights,
) -> Result<(Coord, ErasureCertificate), SolverError> {
    weights.check_covers(word)?;
    let n = word.len();
    let gens = weights.len();
    if n == 0 {
        return Ok((
            Coord::zero(),
            ErasureCertificate {
                k: vec![0; gens],
                deleted_positions: vec![],
                matching: vec![],
            },
        ));
    }

    // table[i][j] covers the half-open interval i..j.
    let mut table: Vec<Vec<Option<DpValue>>> = vec![vec![None; n + 1]; n + 1];
    let mut choice: Vec<Vec<Choice>> = vec![vec![Choice::Delete; n + 1]; n + 1];
    for (i, row) in table.iter_mut().enumerate() {
        row[i] = Some(DpValue::zero(gens));
    }
    for len in 1..=n {
        for i in 0..=(n - len) {
            let j = i + len;
            let first = word.letters[i];
            let mut best = table[i + 1][j]
                .as_ref()
                .unwrap()
                .plus_letter(first, weights);
            let mut best_choice = Choice::Delete;
            for m in (i + 1)..j {
                if word.letters[m].is_inverse_of(first) {
                    let inner = table[i + 1][m].as_ref().unwrap();
                    let outer = table[m + 1][j].as_ref().unwrap();
                    let cand = inner.plus(outer);
                    if cand.better_than(&best) {
                        best = cand;
                        best_choice = Choice::Match(m);
                    }
                }
            }
            table[i][j] = Some(best);
            choice[i][j] = best_choice;
        }
    }

    let mut deleted_positions = Vec::new();
    let mut matching = Vec::new();
    let mut stack = vec![(0usize, n)];
    while let Some((i, j)) = stack.pop() {
        if i >= j {
            continue;
        }
        match choice[i][j] {
            Choice::Delete => {
                deleted_positions.push(i);
                stack.push((i + 1, j));
            }
            Choice::Match(m) => {
                matching.push((i, m));
                stack.push((i + 1, m));
                stack.push((m + 1, j));
            }
        }
    }
    deleted_positions.sort_unstable();
    matching.sort_unstable();

    let value = table[0][n].take().unwrap();
    let cert = ErasureCertificate {
        k: value.k,
        deleted_positions,
        matching,
    };
    debug_assert!(cert.replay(word));
    Ok((value.cost, cert))
}

/// Brute-force reference: enumerate all 2^len deletion subsets, keep those
/// whose kept subsequence freely reduces to the null word, return the
/// cheapest (with the lexicographically smallest deletion-count vector among
/// ties). Independent of the dynamic program above.
pub fn exhaustive_oracle(
    word: &Word,
    weights: &Weights,
) -> Result<(Coord, Vec<usize>), SolverError> {
    weights.check_covers(word)?;
    let n = word.len();
    if n > ORACLE_MAX_LEN {
        return Err(SolverError::WordTooLong(n));
    }
    let gens = weights.len();
    let mut best: Option<(Coord, Vec<usize>)> = None;
    for mask in 0u32..(1u32 << n) {
        let mut stack: Vec<Letter> = Vec::with_capacity(n);
        let mut k = vec![0usize; gens];
        let mut cost = Coord::zero();
        for (pos, &l) in word.letters.iter().enumerate() {
            if mask & (1 << pos) != 0 {
                k[l.gen] += 1;
                cost += weights.get(l.gen);
            } else if stack.last().is_some_and(|&top| top.is_inverse_of(l)) {
                stack.pop();
            } else {
                stack.push(l);
            }
        }
        if !stack.is_empty() {
            continue;
        }
        let better = match &best {
            None => true,
            Some((bc, bk)) => cost < *bc || (cost == *bc && k < *bk),
        };
        if better {
            best = Some((cost, k));
        }
    }
    Ok(best.expect("full deletion always reduces to the null word"))
}

/// Whether some deletion multiset with exactly `k[i]` deletions of generator
/// `i` leaves a word freely equal to the null word. Bounded search; counts
/// that cannot fit the letter multiplicities or the per-generator exponent
/// parity are rejected immediately.
pub fn check_admissible(word: &Word, k: &[usize]) -> Result<bool, SolverError> {
    let n = word.len();
    if n > ORACLE_MAX_LEN {
        return Err(SolverError::WordTooLong(n));
    }
    let gens = word.generator_count();
    if gens > k.len() {
        return Ok(false);
    }
    // Necessary conditions: enough letters, and matching parity/magnitude
    // with the exponent sums (the kept letters must sum to zero).
    for (g, &kg) in k.iter().enumerate() {
        let count = word.letters.iter().filter(|l| l.gen == g).count();
        if kg > count {
            return Ok(false);
        }
        let e = word.exponent_sum(g);
        if (kg as i64) < e.abs() || (kg as i64 - e).rem_euclid(2) != 0 {
            return Ok(false);
        }
    }
    for mask in 0u32..(1u32 << n) {
        let mut counts = vec![0usize; k.len()];
        for (pos, l) in word.letters.iter().enumerate() {
            if mask & (1 << pos) != 0 {
                counts[l.gen] += 1;
            }
        }
        if counts != k {
            continue;
        }
        let kept = Word::new(
            word.letters
                .iter()
                .enumerate()
                .filter(|(pos, _)| mask & (1 << pos) == 0)
                .map(|(_, &l)| l)
                .collect(),
        );
        if kept.is_trivial() {
            return Ok(true);
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    fn weights(xs: &[(i64, i64)]) -> Weights {
        Weights::new(
            xs.iter()
                .map(|&(n, d)| BigRational::new(n.into(), d.into()))
                .collect(),
        )
        .unwrap()
    }

    fn rational(n: i64, d: i64) -> Coord {
        BigRational::new(n.into(), d.into())
    }

    fn random_word(rng: &mut ChaCha8Rng, gens: usize, max_len: usize) -> Word {
        let len = rng.gen_range(0..=max_len);
        Word::new(
            (0..len)
                .map(|_| {
                    let gen = rng.gen_range(0..gens);
                    if rng.gen_bool(0.5) {
                        Letter::pos(gen)
                    } else {
                        Letter::neg(gen)
                    }
                })
                .collect(),
        )
    }

    fn random_weights(rng: &mut ChaCha8Rng, gens: usize) -> Weights {
        Weights::new(
            (0..gens)
                .map(|_| rational(rng.gen_range(1..=30), rng.gen_range(1..=6)))
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn distinct_generators_all_deleted() {
        let (cost, cert) = min_weight_erasure(&w("a1 A2 a3"), &weights(&[(8, 1), (6, 1), (5, 1)]))
            .unwrap();
        assert_eq!(cost, rational(19, 1));
        assert_eq!(cert.k, vec![1, 1, 1]);
    }

    #[test]
    fn inner_pair_cancels() {
        // a1 a2 a3 A2: delete a3 so the a2 pair cancels, then delete a1.
        let (cost, cert) =
            min_weight_erasure(&w("a1 a2 a3 A2"), &weights(&[(3, 1), (7, 1), (2, 1)])).unwrap();
        assert_eq!(cost, rational(5, 1));
        assert_eq!(cert.k, vec![1, 0, 1]);
        assert!(cert.replay(&w("a1 a2 a3 A2")));
    }

    #[test]
    fn commutator_deletes_the_cheaper_generator_twice() {
        let word = w("a1 a2 A1 A2");
        let (cost, cert) = min_weight_erasure(&word, &weights(&[(5, 1), (3, 1)])).unwrap();
        assert_eq!(cost, rational(6, 1));
        assert_eq!(cert.k, vec![0, 2]);
        assert!(cert.replay(&word));
    }

    #[test]
    fn empty_word_costs_nothing() {
        let (cost, cert) = min_weight_erasure(&Word::empty(), &weights(&[(5, 1)])).unwrap();
        assert!(cost.is_zero());
        assert_eq!(cert.k, vec![0]);
    }

    #[test]
    fn missing_weights_rejected() {
        assert_eq!(
            min_weight_erasure(&w("a2"), &weights(&[(1, 1)])),
            Err(SolverError::MissingWeight { needed: 2, got: 1 })
        );
    }

    #[test]
    fn oracle_examples() {
        // Same-sign pair: parity forbids a single deletion.
        let (cost, k) = exhaustive_oracle(&w("a1 a1"), &weights(&[(7, 2)])).unwrap();
        assert_eq!(cost, rational(7, 1));
        assert_eq!(k, vec![2]);

        let (cost, k) =
            exhaustive_oracle(&w("a1 a2 A1 A2"), &weights(&[(1, 1), (1, 1)])).unwrap();
        assert_eq!(cost, rational(2, 1));
        assert_eq!(k, vec![0, 2]);

        let (cost, k) = exhaustive_oracle(&w("a1 A1"), &weights(&[(9, 1)])).unwrap();
        assert!(cost.is_zero());
        assert_eq!(k, vec![0]);
    }

    #[test]
    fn oracle_rejects_long_words() {
        let long = Word::new(vec![Letter::pos(0); ORACLE_MAX_LEN + 1]);
        assert_eq!(
            exhaustive_oracle(&long, &weights(&[(1, 1)])),
            Err(SolverError::WordTooLong(ORACLE_MAX_LEN + 1))
        );
    }

    #[test]
    fn admissibility_examples() {
        let commutator = w("a1 a2 A1 A2");
        assert!(check_admissible(&commutator, &[2, 0]).unwrap());
        assert!(check_admissible(&commutator, &[0, 2]).unwrap());
        assert!(!check_admissible(&commutator, &[1, 0]).unwrap());
        assert!(check_admissible(&w("a1"), &[1]).unwrap());
        assert!(!check_admissible(&w("a1"), &[3]).unwrap()); // only one letter to delete
    }

    #[test]
    fn dp_matches_oracle_on_random_words() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        for _ in 0..300 {
            let gens = rng.gen_range(1..=4);
            let word = random_word(&mut rng, gens, 10);
            let ws = random_weights(&mut rng, gens.max(word.generator_count()));
            let (dp_cost, cert) = min_weight_erasure(&word, &ws).unwrap();
            let (oracle_cost, oracle_k) = exhaustive_oracle(&word, &ws).unwrap();
            assert_eq!(dp_cost, oracle_cost, "word {word}");
            assert_eq!(cert.k, oracle_k, "word {word}");
            assert!(cert.replay(&word), "word {word}");
        }
    }

    #[test]
    fn certificate_respects_parity_and_magnitude_bounds() {
        let mut rng = ChaCha8Rng::seed_from_u64(0xabcd);
        for _ in 0..200 {
            let gens = rng.gen_range(1..=4);
            let word = random_word(&mut rng, gens, 12);
            let ws = random_weights(&mut rng, gens.max(word.generator_count()));
            let (_, cert) = min_weight_erasure(&word, &ws).unwrap();
            for g in 0..ws.len() {
                let e = word.exponent_sum(g);
                assert!(cert.k[g] as i64 >= e.abs());
                assert_eq!((cert.k[g] as i64 - e).rem_euclid(2), 0);
            }
        }
    }

    #[test]
    fn cost_is_invariant_under_rotation_and_conjugation() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x1234);
        for _ in 0..120 {
            let gens = rng.gen_range(1..=3);
            let word = random_word(&mut rng, gens, 8);
            let ws = random_weights(&mut rng, gens.max(word.generator_count()).max(3));
            let (cost, _) = min_weight_erasure(&word, &ws).unwrap();
            let reduced = word.cyclic_reduce();
            for k in 0..reduced.len() {
                let (rot_cost, _) = min_weight_erasure(&reduced.rotate(k), &ws).unwrap();
                assert_eq!(cost, rot_cost, "rotation {k} of {reduced}");
            }
            let beta = random_word(&mut rng, 3, 3);
            let (conj_cost, _) = min_weight_erasure(&word.conjugate_by(&beta), &ws).unwrap();
            assert_eq!(cost, conj_cost, "conjugation of {word} by {beta}");
        }
    }

    #[test]
    fn cost_is_subadditive_under_concatenation() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x77);
        for _ in 0..150 {
            let gens = rng.gen_range(1..=3);
            let w1 = random_word(&mut rng, gens, 7);
            let w2 = random_word(&mut rng, gens, 7);
            let ws = random_weights(&mut rng, gens);
            let (c1, _) = min_weight_erasure(&w1, &ws).unwrap();
            let (c2, _) = min_weight_erasure(&w2, &ws).unwrap();
            let (c12, _) = min_weight_erasure(&w1.concat(&w2), &ws).unwrap();
            assert!(c12 <= c1 + c2);
        }
    }

    #[test]
    fn cost_is_monotone_in_weights() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x99);
        for _ in 0..100 {
            let gens = rng.gen_range(1..=4);
            let word = random_word(&mut rng, gens, 9);
            let ws = random_weights(&mut rng, gens.max(word.generator_count()));
            let (cost, cert) = min_weight_erasure(&word, &ws).unwrap();
            let bump = rng.gen_range(0..ws.len());
            let mut bigger = ws.as_slice().to_vec();
            bigger[bump] += rational(rng.gen_range(1..=5), 1);
            let bigger = Weights::new(bigger).unwrap();
            let (cost2, cert2) = min_weight_erasure(&word, &bigger).unwrap();
            assert!(cost2 >= cost);
            if cert.k[bump] == 0 {
                assert_eq!(cert2.k, cert.k);
            }
        }
    }
}
