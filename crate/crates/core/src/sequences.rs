//! Single-length specialisations and integer sequences.
//!
//! Restricting the multivariate generating functions to permutations whose
//! cycles all have one length `ℓ` leaves a series in a single variable `t`
//! (represented here as `t_1`, so degree and weight coincide). For even
//! `ℓ` every root cycle has even length and the even/odd series become
//! `cosh`/`sinh` of one exponent; for odd `ℓ` they factor as an `exp` over
//! the odd members of `G_k(ℓ)` times `cosh`/`sinh` over the even members.
//!
//! `ℓ = 1` gives the k-th roots of the identity, which are tabulated in the
//! OEIS for a handful of `k`. Term `c` of a generated sequence is the
//! count for `S_c`, starting from `c = 0`; compare against published
//! b-files by hand, since their offsets may differ.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed};
use thiserror::Error;

use crate::arith::factorial;
use crate::gset::RootDivisorSet;
use crate::series::{root_term_coefficient, EgfSeries, ExactRational, Monomial};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

impl FromStr for Parity {
    type Err = SequenceError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "even" => Ok(Parity::Even),
            "odd" => Ok(Parity::Odd),
            _ => Err(SequenceError::BadParity(s.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SequenceError {
    #[error("unsupported sequence {0}; supported: {}", supported_ids().join(", "))]
    Unsupported(String),
    #[error("parity must be 'even' or 'odd', got '{0}'")]
    BadParity(String),
    #[error("at least one term is required")]
    NoTerms,
}

/// An OEIS sequence counting even or odd k-th roots of the identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SequenceSpec {
    pub id: &'static str,
    pub k: u32,
    pub length: u32,
    pub parity: Parity,
    pub offset: u32,
}

const fn identity_roots(id: &'static str, k: u32, parity: Parity) -> SequenceSpec {
    SequenceSpec {
        id,
        k,
        length: 1,
        parity,
        offset: 0,
    }
}

pub const SUPPORTED: [SequenceSpec; 8] = [
    identity_roots("A000704", 2, Parity::Even),
    identity_roots("A001465", 2, Parity::Odd),
    identity_roots("A061129", 4, Parity::Even),
    identity_roots("A061136", 4, Parity::Odd),
    identity_roots("A061130", 6, Parity::Even),
    identity_roots("A061137", 6, Parity::Odd),
    identity_roots("A061131", 8, Parity::Even),
    identity_roots("A061132", 10, Parity::Even),
];

pub fn supported_ids() -> Vec<&'static str> {
    SUPPORTED.iter().map(|s| s.id).collect()
}

impl SequenceSpec {
    pub fn lookup(id: &str) -> Result<SequenceSpec, SequenceError> {
        SUPPORTED
            .iter()
            .find(|s| s.id.eq_ignore_ascii_case(id))
            .copied()
            .ok_or_else(|| SequenceError::Unsupported(id.to_string()))
    }
}

fn half() -> ExactRational {
    ExactRational::new(BigInt::one(), BigInt::from(2))
}

/// `Σ_{g ∈ gs, g ≤ N} ±ℓ^(g-1)/g · t^g`, the sign being `(-1)^(ℓg+1)`
/// when `signed`.
fn exponent(length: u32, gs: &[u32], truncation: u32, signed: bool) -> EgfSeries {
    EgfSeries::from_terms(
        gs.iter().filter(|&&g| g <= truncation).map(|&g| {
            let c = root_term_coefficient(length, g);
            let c = if signed && (length as u64 * g as u64).is_multiple_of(2) {
                -c
            } else {
                c
            };
            (Monomial::power(1, g), c)
        }),
        truncation,
    )
}

fn exp(s: &EgfSeries) -> EgfSeries {
    s.exp().expect("exponent has no constant term")
}

/// `½ exp(Σ_g ℓ^(g-1)/g t^g) ± ½ exp(Σ_g (-1)^(ℓg+1) ℓ^(g-1)/g t^g)` over
/// `g ∈ G_k(ℓ)`, truncated at degree `N`.
pub fn single_length_egf(k: u32, length: u32, parity: Parity, truncation: u32) -> EgfSeries {
    let gs = RootDivisorSet::by_definition(k, length);
    let total = exp(&exponent(length, gs.members(), truncation, false));
    let signed = exp(&exponent(length, gs.members(), truncation, true));
    let combined = match parity {
        Parity::Even => &total + &signed,
        Parity::Odd => &total - &signed,
    };
    combined.scale(&half())
}

fn cosh_or_sinh(s: &EgfSeries, parity: Parity) -> EgfSeries {
    match parity {
        Parity::Even => s.cosh(),
        Parity::Odd => s.sinh(),
    }
    .expect("exponent has no constant term")
}

/// The same series in product form.
///
/// Even `ℓ`: `cosh` (even) or `sinh` (odd) of `Σ_{g ∈ G_k(ℓ)} ℓ^(g-1)/g t^g`.
/// Odd `ℓ`: `exp(Σ_{g ∈ GO_k(ℓ)} ...)` times `cosh`/`sinh` of the sum over
/// `GE_k(ℓ)`. For odd `k` and odd `ℓ` the even part is empty, so the even
/// series is the plain root-count series and the odd series vanishes.
pub fn single_length_egf_simplified(
    k: u32,
    length: u32,
    parity: Parity,
    truncation: u32,
) -> EgfSeries {
    let gs = RootDivisorSet::by_definition(k, length);
    if length.is_multiple_of(2) {
        return cosh_or_sinh(&exponent(length, gs.members(), truncation, false), parity);
    }
    let odd = exp(&exponent(length, &gs.odd_members(), truncation, false));
    let even = cosh_or_sinh(
        &exponent(length, &gs.even_members(), truncation, false),
        parity,
    );
    &odd * &even
}

/// Roots of the identity written over the divisors of `k` directly:
/// `exp(Σ_{g|k, g odd} t^g/g) · cosh|sinh(Σ_{g|k, g even} t^g/g)`.
pub fn identity_root_egf(k: u32, parity: Parity, truncation: u32) -> EgfSeries {
    let divisors = |odd: bool| -> EgfSeries {
        EgfSeries::from_terms(
            (1..=k.min(truncation))
                .filter(|g| k.is_multiple_of(*g) && (g % 2 == 1) == odd)
                .map(|g| {
                    (
                        Monomial::power(1, g),
                        ExactRational::new(BigInt::one(), BigInt::from(g)),
                    )
                }),
            truncation,
        )
    };
    &exp(&divisors(true)) * &cosh_or_sinh(&divisors(false), parity)
}

/// `k = 2^m` roots of the identity: `exp(x) · cosh|sinh(x²/2 + ... + x^(2^m)/2^m)`.
pub fn power_of_two_identity_egf(m: u32, parity: Parity, truncation: u32) -> EgfSeries {
    let x = EgfSeries::term(ExactRational::one(), Monomial::power(1, 1), truncation);
    let inner = EgfSeries::from_terms(
        (1..=m).map(|i| {
            let g = 1u64 << i;
            (
                Monomial::power(1, g.min(u32::MAX as u64) as u32),
                ExactRational::new(BigInt::one(), BigInt::from(g)),
            )
        }),
        truncation,
    );
    &exp(&x) * &cosh_or_sinh(&inner, parity)
}

/// `∏_j exp(t_(2j-1)) · cosh|sinh(Σ_j ((2j-1)/2 · t_(2j-1)² + j · t_(2j)²))`,
/// the even or odd square-root series.
pub fn square_root_egf(parity: Parity, truncation: u32) -> EgfSeries {
    let one = ExactRational::one;
    let mut linear = EgfSeries::one(truncation);
    let mut quadratic = Vec::new();
    for j in 1..=truncation.div_ceil(2) {
        let odd = 2 * j - 1;
        linear = &linear * &exp(&EgfSeries::term(one(), Monomial::power(odd, 1), truncation));
        quadratic.push((
            Monomial::power(odd, 2),
            ExactRational::new(BigInt::from(odd), BigInt::from(2)),
        ));
        quadratic.push((
            Monomial::power(2 * j, 2),
            ExactRational::from_integer(BigInt::from(j)),
        ));
    }
    let quadratic = EgfSeries::from_terms(quadratic, truncation);
    &linear * &cosh_or_sinh(&quadratic, parity)
}

/// Terms `0..terms` of the even or odd k-th roots of the identity:
/// `c! · [t^c] single_length_egf(k, 1, parity, terms − 1)`.
pub fn identity_root_counts(
    k: u32,
    parity: Parity,
    terms: u32,
) -> Result<Vec<BigUint>, SequenceError> {
    if terms == 0 {
        return Err(SequenceError::NoTerms);
    }
    let s = single_length_egf(k, 1, parity, terms - 1);
    Ok((0..terms)
        .map(|c| {
            let q = s.coefficient(&Monomial::power(1, c))
                * ExactRational::from_integer(factorial(c as u64).into());
            assert!(
                q.is_integer() && !q.is_negative(),
                "term {c} is not a count: {q}"
            );
            q.to_integer().to_biguint().unwrap()
        })
        .collect())
}

pub fn generate_sequence(spec: &SequenceSpec, terms: u32) -> Result<Vec<BigUint>, SequenceError> {
    identity_root_counts(spec.k, spec.parity, terms)
}

/// OEIS b-file text: one `<index> <value>` line per term.
pub fn format_bfile(offset: u32, values: &[BigUint]) -> String {
    values
        .iter()
        .enumerate()
        .map(|(i, v)| format!("{} {}\n", offset as usize + i, v))
        .collect()
}
