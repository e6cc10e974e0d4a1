//! The divisor sets `G_k(ℓ) = { g : gcd(gℓ, k) = g }`.
//!
//! A `(gℓ)`-cycle raised to the k-th power splits into `g` cycles of
//! length `ℓ` exactly when `g ∈ G_k(ℓ)`, so these sets decide which cycle
//! lengths a k-th root of a permutation with `ℓ`-cycles can use.

use crate::arith::gcd;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootDivisorSet {
    k: u32,
    length: u32,
    members: Vec<u32>,
}

impl RootDivisorSet {
    /// Scans `g = 1..=k` and keeps those with `gcd(gℓ, k) = g`.
    pub fn by_definition(k: u32, length: u32) -> RootDivisorSet {
        assert!(k >= 1 && length >= 1, "k and ℓ must be positive");
        let members = (1..=k)
            .filter(|&g| gcd(g as u64 * length as u64, k as u64) == g as u64)
            .collect();
        RootDivisorSet { k, length, members }
    }

    /// Builds the set from the prime factorisation `k = ∏ p_i^(a_i)`: the
    /// exponent of `p_i` is forced to `a_i` when `p_i | ℓ` and free in
    /// `0..=a_i` otherwise.
    pub fn by_factorization(k: u32, length: u32) -> RootDivisorSet {
        assert!(k >= 1 && length >= 1, "k and ℓ must be positive");
        let mut members = vec![1u32];
        for (p, a) in prime_factors(k) {
            let full = p.pow(a);
            members = if length.is_multiple_of(p) {
                members.into_iter().map(|m| m * full).collect()
            } else {
                members
                    .into_iter()
                    .flat_map(|m| (0..=a).map(move |b| m * p.pow(b)))
                    .collect()
            };
        }
        members.sort_unstable();
        RootDivisorSet { k, length, members }
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn length(&self) -> u32 {
        self.length
    }

    /// Members in ascending order.
    pub fn members(&self) -> &[u32] {
        &self.members
    }

    pub fn contains(&self, g: u32) -> bool {
        self.members.binary_search(&g).is_ok()
    }

    /// `GO_k(ℓ)`.
    pub fn odd_members(&self) -> Vec<u32> {
        self.members
            .iter()
            .copied()
            .filter(|g| g % 2 == 1)
            .collect()
    }

    /// `GE_k(ℓ)`.
    pub fn even_members(&self) -> Vec<u32> {
        self.members
            .iter()
            .copied()
            .filter(|g| g % 2 == 0)
            .collect()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// `G_k(ℓ)` by direct scan.
pub fn g_set_by_definition(k: u32, length: u32) -> RootDivisorSet {
    RootDivisorSet::by_definition(k, length)
}

/// `G_k(ℓ)` from the prime factorisation of `k`.
pub fn g_set_by_factorization(k: u32, length: u32) -> RootDivisorSet {
    RootDivisorSet::by_factorization(k, length)
}

/// Trial division; returns `(prime, exponent)` pairs in ascending order.
pub fn prime_factors(mut k: u32) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    let mut p = 2u32;
    while (p as u64) * (p as u64) <= k as u64 {
        if k.is_multiple_of(p) {
            let mut a = 0;
            while k.is_multiple_of(p) {
                k /= p;
                a += 1;
            }
            out.push((p, a));
        }
        p += 1;
    }
    if k > 1 {
        out.push((k, 1));
    }
    out
}
