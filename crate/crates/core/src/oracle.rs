//! Brute-force ground truth over the symmetric group.
//!
//! Nothing here is clever: [`oracle_count_roots`] fixes one permutation of
//! the requested type and tries every permutation of the same size.

use rayon::prelude::*;
use thiserror::Error;

use crate::arith::gcd;
use crate::counting::RootCount;
use crate::cycletype::{CycleType, Sign};

/// Largest `n` the oracle will enumerate (`10! = 3 628 800`).
pub const MAX_ORACLE_N: u64 = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("n = {0} exceeds the oracle limit of {MAX_ORACLE_N}")]
    TooLarge(u64),
    #[error("not a permutation of 1..={n}: {reason}")]
    NotABijection { n: usize, reason: String },
}

/// A permutation of `{1, ..., n}` in one-line notation. Stored zero-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(n: usize) -> Permutation {
        assert!(n <= u8::MAX as usize + 1);
        Permutation {
            images: (0..n).map(|i| i as u8).collect(),
        }
    }

    /// From one-line notation on `1..=n`: `word[i]` is the image of `i + 1`.
    pub fn from_one_line(word: &[usize]) -> Result<Permutation, OracleError> {
        let n = word.len();
        if n > u8::MAX as usize + 1 {
            return Err(OracleError::NotABijection {
                n,
                reason: "too many points".into(),
            });
        }
        let mut seen = vec![false; n];
        for &w in word {
            if w == 0 || w > n {
                return Err(OracleError::NotABijection {
                    n,
                    reason: format!("{w} out of range"),
                });
            }
            if std::mem::replace(&mut seen[w - 1], true) {
                return Err(OracleError::NotABijection {
                    n,
                    reason: format!("{w} repeated"),
                });
            }
        }
        Ok(Permutation {
            images: word.iter().map(|&w| (w - 1) as u8).collect(),
        })
    }

    /// Builds a permutation from disjoint cycles written on `1..=n`.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Permutation, OracleError> {
        let mut word: Vec<usize> = (1..=n).collect();
        for cycle in cycles {
            for (i, &a) in cycle.iter().enumerate() {
                if a == 0 || a > n {
                    return Err(OracleError::NotABijection {
                        n,
                        reason: format!("{a} out of range"),
                    });
                }
                word[a - 1] = cycle[(i + 1) % cycle.len()];
            }
        }
        Permutation::from_one_line(&word)
    }

    /// The canonical permutation of type `c`: cycles on consecutive
    /// blocks of points, shortest lengths first.
    pub fn canonical(c: &CycleType) -> Permutation {
        let mut images = Vec::with_capacity(c.size() as usize);
        let mut start = 0usize;
        for (length, mult) in c.parts() {
            let length = length as usize;
            for _ in 0..mult {
                for i in 0..length {
                    images.push((start + (i + 1) % length) as u8);
                }
                start += length;
            }
        }
        Permutation { images }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    /// One-line notation on `1..=n`.
    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|&i| i as usize + 1).collect()
    }

    /// Image of the zero-based point `i`.
    pub fn image(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.len(), other.len());
        Permutation {
            images: other
                .images
                .iter()
                .map(|&i| self.images[i as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u8; self.len()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j as usize] = i as u8;
        }
        Permutation { images }
    }

    /// Disjoint cycles (fixed points included), as zero-based points, each
    /// starting at its smallest element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i);
                i = self.images[i] as usize;
            }
            out.push(cycle);
        }
        out
    }

    /// `self^k`, computed cycle by cycle: inside an `ℓ`-cycle every point
    /// moves `k mod ℓ` steps along the cycle.
    pub fn power(&self, k: u32) -> Permutation {
        let mut images = vec![0u8; self.len()];
        for cycle in self.cycles() {
            let l = cycle.len();
            let shift = k as usize % l;
            for (i, &a) in cycle.iter().enumerate() {
                images[a] = cycle[(i + shift) % l] as u8;
            }
        }
        Permutation { images }
    }

    /// `self^k` by repeated composition.
    pub fn power_naive(&self, k: u32) -> Permutation {
        let mut out = Permutation::identity(self.len());
        for _ in 0..k {
            out = self.compose(&out);
        }
        out
    }

    pub fn cycle_type(&self) -> CycleType {
        CycleType::from_parts(self.cycles().iter().map(|c| (c.len() as u32, 1)))
    }

    /// `(-1)^(n − #cycles)`.
    pub fn parity(&self) -> Sign {
        Sign::from_exponent((self.len() - self.cycles().len()) as u64)
    }

    /// Whether `self^k == target`, without building the power.
    fn power_equals(
        &self,
        k: u32,
        target: &Permutation,
        seen: &mut [bool],
        cycle: &mut Vec<usize>,
    ) -> bool {
        seen.iter_mut().for_each(|s| *s = false);
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            cycle.clear();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i);
                i = self.images[i] as usize;
            }
            let l = cycle.len();
            let shift = k as usize % l;
            for (j, &a) in cycle.iter().enumerate() {
                if target.images[a] as usize != cycle[(j + shift) % l] {
                    return false;
                }
            }
        }
        true
    }

    /// Advances to the lexicographic successor; returns false (leaving
    /// `self` unchanged) at the last permutation.
    pub fn next_lex(&mut self) -> bool {
        let v = &mut self.images;
        let n = v.len();
        if n < 2 {
            return false;
        }
        let mut i = n - 1;
        while i > 0 && v[i - 1] >= v[i] {
            i -= 1;
        }
        if i == 0 {
            return false;
        }
        let mut j = n - 1;
        while v[j] <= v[i - 1] {
            j -= 1;
        }
        v.swap(i - 1, j);
        v[i..].reverse();
        true
    }

    /// The permutation of lexicographic rank `rank` in `S_n`.
    pub fn unrank(n: usize, mut rank: u64) -> Permutation {
        let mut pool: Vec<u8> = (0..n as u8).collect();
        let mut images = Vec::with_capacity(n);
        for i in (0..n).rev() {
            let f = (1..=i as u64).product::<u64>();
            let idx = (rank / f) as usize;
            rank %= f;
            images.push(pool.remove(idx));
        }
        Permutation { images }
    }
}

/// Iterator over `S_n` in lexicographic order.
pub struct LexPermutations {
    next: Option<Permutation>,
    remaining: u64,
}

impl Iterator for LexPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.remaining == 0 {
            return None;
        }
        self.remaining -= 1;
        let current = self.next.take()?;
        let mut succ = current.clone();
        if succ.next_lex() {
            self.next = Some(succ);
        }
        Some(current)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        (self.remaining as usize, Some(self.remaining as usize))
    }
}

fn check_size(n: u64) -> Result<(), OracleError> {
    if n > MAX_ORACLE_N {
        Err(OracleError::TooLarge(n))
    } else {
        Ok(())
    }
}

fn factorial_u64(n: u64) -> u64 {
    (1..=n).product()
}

/// All `n!` permutations of `S_n` in lexicographic order.
pub fn all_permutations(n: usize) -> Result<LexPermutations, OracleError> {
    check_size(n as u64)?;
    Ok(LexPermutations {
        next: Some(Permutation::identity(n)),
        remaining: factorial_u64(n as u64),
    })
}

/// Permutations of ranks `start..end` in lexicographic order.
fn permutation_range(n: usize, start: u64, end: u64) -> LexPermutations {
    LexPermutations {
        next: Some(Permutation::unrank(n, start)),
        remaining: end - start,
    }
}

#[derive(Default, Clone, Copy)]
struct Tally {
    even: u64,
    odd: u64,
}

fn scan(n: usize, start: u64, end: u64, k: u32, target: &Permutation) -> Tally {
    let mut tally = Tally::default();
    let mut seen = vec![false; n];
    let mut cycle = Vec::with_capacity(n);
    for tau in permutation_range(n, start, end) {
        if tau.power_equals(k, target, &mut seen, &mut cycle) {
            if tau.parity().is_even() {
                tally.even += 1;
            } else {
                tally.odd += 1;
            }
        }
    }
    tally
}

/// Counts the k-th roots of the canonical permutation of type `c` by
/// testing every `τ ∈ S_n`.
pub fn oracle_count_roots(k: u32, c: &CycleType) -> Result<RootCount, OracleError> {
    oracle_count_roots_chunked(k, c, 1)
}

/// As [`oracle_count_roots`], splitting `S_n` into `chunks` contiguous rank
/// ranges scanned in parallel on the current rayon pool.
pub fn oracle_count_roots_chunked(
    k: u32,
    c: &CycleType,
    chunks: usize,
) -> Result<RootCount, OracleError> {
    check_size(c.size())?;
    oracle_count_roots_of(k, &Permutation::canonical(c), chunks)
}

/// Counts the k-th roots of an arbitrary permutation.
pub fn oracle_count_roots_of(
    k: u32,
    sigma: &Permutation,
    chunks: usize,
) -> Result<RootCount, OracleError> {
    assert!(k >= 1, "k must be positive");
    let n = sigma.len();
    check_size(n as u64)?;
    let total = factorial_u64(n as u64);
    let chunks = (chunks.max(1) as u64).min(total);
    let bounds: Vec<(u64, u64)> = (0..chunks)
        .map(|i| (total * i / chunks, total * (i + 1) / chunks))
        .collect();
    let tally = bounds
        .par_iter()
        .map(|&(s, e)| scan(n, s, e, k, sigma))
        .reduce(Tally::default, |a, b| Tally {
            even: a.even + b.even,
            odd: a.odd + b.odd,
        });
    Ok(RootCount {
        total: (tally.even + tally.odd).into(),
        even: tally.even.into(),
        odd: tally.odd.into(),
    })
}

/// Cycle lengths of `α^m` for an `ℓ`-cycle `α`: `gcd(m, ℓ)` cycles of
/// length `ℓ / gcd(m, ℓ)`.
pub fn cycle_power_type(length: u32, m: u32) -> CycleType {
    let d = gcd(length as u64, m as u64) as u32;
    CycleType::from_parts([(length / d, d)])
}
