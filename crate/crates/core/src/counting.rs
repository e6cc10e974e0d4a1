//! Closed-form root counts per cycle type.
//!
//! For a permutation whose cycles all have length `ℓ` (type `ℓ^c`), every
//! k-th root uses cycles of lengths `gℓ` with `g ∈ G_k(ℓ)`, and the root
//! types are the non-negative solutions of `Σ g·p_g = c`. Summing the
//! number of roots of each root type gives the total; weighting each by
//! the sign of the root gives (even − odd). For a general type both
//! quantities multiply across distinct lengths, and the even and odd
//! counts are recovered as `(total ± difference) / 2`.

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint, Sign as BigSign};
use num_traits::{One, Pow, Zero};

use crate::arith::{exact_div, factorial};
use crate::cycletype::{CycleType, Sign};
use crate::gset::RootDivisorSet;

/// Numbers of total, even and odd k-th roots.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct RootCount {
    pub total: BigUint,
    pub even: BigUint,
    pub odd: BigUint,
}

impl RootCount {
    pub fn zero() -> RootCount {
        RootCount::default()
    }

    /// Splits `total` by the signed sum `difference = even − odd`.
    ///
    /// Panics if `total ± difference` is odd or negative; either would mean
    /// the two inputs do not describe the same set of roots.
    pub fn from_total_and_difference(total: BigUint, difference: &BigInt) -> RootCount {
        let t = BigInt::from(total.clone());
        let twice_even = &t + difference;
        let twice_odd = &t - difference;
        assert!(
            twice_even.sign() != BigSign::Minus && twice_odd.sign() != BigSign::Minus,
            "|even − odd| = |{difference}| exceeds total {total}"
        );
        let two = BigUint::from(2u32);
        let even = exact_div(
            &twice_even.to_biguint().unwrap(),
            &two,
            "total + difference",
        );
        let odd = exact_div(&twice_odd.to_biguint().unwrap(), &two, "total − difference");
        RootCount { total, even, odd }
    }

    /// `even − odd`.
    pub fn difference(&self) -> BigInt {
        BigInt::from(self.even.clone()) - BigInt::from(self.odd.clone())
    }

    pub fn has_root(&self) -> bool {
        !self.total.is_zero()
    }
}

/// Multiplicities `p_g` for `g ∈ G_k(ℓ)` with `Σ g·p_g = c`; it describes
/// the root type `∏ (gℓ)^(p_g)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SolutionVector {
    assignment: Vec<(u32, u32)>,
}

impl SolutionVector {
    /// `(g, p_g)` pairs in ascending `g`, including zero multiplicities.
    pub fn assignment(&self) -> &[(u32, u32)] {
        &self.assignment
    }

    pub fn multiplicity(&self, g: u32) -> u32 {
        self.assignment
            .iter()
            .find(|&&(h, _)| h == g)
            .map_or(0, |&(_, p)| p)
    }

    /// `Σ g·p_g`.
    pub fn weighted_sum(&self) -> u64 {
        self.assignment
            .iter()
            .map(|&(g, p)| g as u64 * p as u64)
            .sum()
    }
}

/// Number of permutations of type `(gℓ)^p` whose k-th power has type
/// `ℓ^(gp)`: `(gp)! ℓ^(p(g-1)) / (g^p p!)` when `g ∈ G_k(ℓ)`, else 0.
pub fn root_multiplicity(k: u32, length: u32, g: u32, p: u32) -> BigUint {
    if !RootDivisorSet::by_definition(k, length).contains(g) {
        return BigUint::zero();
    }
    block_multiplicity(length, g, p)
}

fn block_multiplicity(length: u32, g: u32, p: u32) -> BigUint {
    let numer =
        factorial(g as u64 * p as u64) * Pow::pow(BigUint::from(length), p as u64 * (g as u64 - 1));
    let denom = Pow::pow(BigUint::from(g), p) * factorial(p as u64);
    exact_div(&numer, &denom, "root multiplicity")
}

/// Sign of a product of `p` disjoint cycles of length `ℓg`:
/// `(-1)^(p(ℓg+1))`.
pub fn sign_of_block(length: u32, g: u32, p: u32) -> Sign {
    Sign::from_exponent(p as u64 * (length as u64 * g as u64 + 1))
}

/// All solutions of `Σ_{g ∈ gset} g·p_g = c` in `p_g ≥ 0`.
///
/// Ordered lexicographically with the coordinates read from the largest
/// `g` down, each ascending.
pub fn enumerate_solutions(gset: &RootDivisorSet, c: u32) -> Vec<SolutionVector> {
    let desc: Vec<u32> = gset.members().iter().rev().copied().collect();
    let mut out = Vec::new();
    let mut ps = vec![0u32; desc.len()];
    search(&desc, 0, c, &mut ps, &mut |ps| {
        let assignment = desc.iter().zip(ps).rev().map(|(&g, &p)| (g, p)).collect();
        out.push(SolutionVector { assignment });
        true
    });
    out
}

/// Depth-first over `desc` (members, largest first). `visit` returns
/// whether to keep going; the return value reports whether the search ran
/// to completion.
fn search(
    desc: &[u32],
    depth: usize,
    remaining: u32,
    ps: &mut [u32],
    visit: &mut dyn FnMut(&[u32]) -> bool,
) -> bool {
    if depth == desc.len() {
        return if remaining == 0 { visit(ps) } else { true };
    }
    let g = desc[depth];
    if depth + 1 == desc.len() {
        if !remaining.is_multiple_of(g) {
            return true;
        }
        ps[depth] = remaining / g;
        let cont = visit(ps);
        ps[depth] = 0;
        return cont;
    }
    for p in 0..=remaining / g {
        ps[depth] = p;
        if !search(desc, depth + 1, remaining - p * g, ps, visit) {
            ps[depth] = 0;
            return false;
        }
    }
    ps[depth] = 0;
    true
}

fn has_solution(gset: &RootDivisorSet, c: u32) -> bool {
    let desc: Vec<u32> = gset.members().iter().rev().copied().collect();
    let mut ps = vec![0u32; desc.len()];
    let mut found = false;
    search(&desc, 0, c, &mut ps, &mut |_| {
        found = true;
        false
    });
    found
}

/// `(total, even − odd)` for type `ℓ^c`.
fn single_length_sums(k: u32, length: u32, c: u32) -> (BigUint, BigInt) {
    let gset = RootDivisorSet::by_definition(k, length);
    let mut factorials = vec![BigUint::one()];
    for i in 1..=c as u64 {
        let next = factorials.last().unwrap() * i;
        factorials.push(next);
    }
    // block_multiplicity(ℓ, g, p) for every member g and p ≤ c/g
    let blocks: HashMap<u32, Vec<BigUint>> = gset
        .members()
        .iter()
        .map(|&g| {
            (
                g,
                (0..=c / g)
                    .map(|p| block_multiplicity(length, g, p))
                    .collect(),
            )
        })
        .collect();
    let mut total = BigUint::zero();
    let mut difference = BigInt::zero();
    for sol in enumerate_solutions(&gset, c) {
        // ordered set partitions of the c cycles into blocks of sizes g·p_g
        let block_sizes: BigUint = sol
            .assignment()
            .iter()
            .map(|&(g, p)| &factorials[(g * p) as usize])
            .product();
        let mut roots = exact_div(&factorials[c as usize], &block_sizes, "multinomial");
        let mut sign = Sign::Plus;
        for &(g, p) in sol.assignment() {
            roots *= &blocks[&g][p as usize];
            sign = sign * sign_of_block(length, g, p);
        }
        let signed = BigInt::from(roots.clone());
        difference += if sign.is_even() { signed } else { -signed };
        total += roots;
    }
    (total, difference)
}

/// Total, even and odd k-th roots of a permutation of type `ℓ^c`.
pub fn single_length_counts(k: u32, length: u32, c: u32) -> RootCount {
    let (total, difference) = single_length_sums(k, length, c);
    RootCount::from_total_and_difference(total, &difference)
}

/// Total, even and odd k-th roots of a permutation of type `c`.
///
/// The empty type has one root, the empty permutation, which is even.
pub fn count_roots(k: u32, c: &CycleType) -> RootCount {
    assert!(k >= 1, "k must be positive");
    let mut total = BigUint::one();
    let mut difference = BigInt::one();
    for (length, mult) in c.parts() {
        let (t, d) = single_length_sums(k, length, mult);
        if t.is_zero() {
            return RootCount::zero();
        }
        total *= t;
        difference *= d;
    }
    RootCount::from_total_and_difference(total, &difference)
}

/// Whether a permutation of type `c` has any k-th root.
pub fn has_kth_root(k: u32, c: &CycleType) -> bool {
    assert!(k >= 1, "k must be positive");
    c.parts()
        .all(|(length, mult)| has_solution(&RootDivisorSet::by_definition(k, length), mult))
}
