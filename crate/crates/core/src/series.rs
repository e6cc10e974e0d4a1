//! Truncated multivariate power series with exact rational coefficients.
//!
//! Variable `t_ℓ` has weight `ℓ`, and a series with truncation `N` keeps
//! only monomials of total weight at most `N`. Weight is the size of the
//! permutations a monomial indexes, so the coefficient of
//! `∏ t_ℓ^(c_ℓ) / c_ℓ!` in an exponential generating function is a count
//! over permutations of cycle type `c`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::arith::factorial;
use crate::cycletype::CycleType;
use crate::gset::RootDivisorSet;

pub type ExactRational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("exp needs a series with zero constant term")]
    NonzeroConstantTerm,
    #[error("monomial of weight {weight} lies beyond the truncation {truncation}")]
    WeightExceedsTruncation { weight: u64, truncation: u32 },
}

/// A monomial `∏ t_ℓ^(e_ℓ)`, stored as `(ℓ, e_ℓ)` pairs with ascending `ℓ`
/// and no zero exponents.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exponents: Vec<(u32, u32)>,
    weight: u64,
}

impl Monomial {
    pub fn one() -> Monomial {
        Monomial::default()
    }

    /// `t_ℓ^e`.
    pub fn power(var: u32, exponent: u32) -> Monomial {
        Monomial::from_pairs([(var, exponent)])
    }

    pub fn from_pairs<I: IntoIterator<Item = (u32, u32)>>(pairs: I) -> Monomial {
        let mut map = BTreeMap::new();
        for (var, e) in pairs {
            if e > 0 {
                assert!(var >= 1, "variables are indexed from 1");
                *map.entry(var).or_insert(0u32) += e;
            }
        }
        let exponents: Vec<_> = map.into_iter().collect();
        let weight = exponents.iter().map(|&(v, e)| v as u64 * e as u64).sum();
        Monomial { exponents, weight }
    }

    /// `∏ t_ℓ^(c_ℓ)` for a cycle type `c`.
    pub fn from_cycle_type(c: &CycleType) -> Monomial {
        Monomial::from_pairs(c.parts())
    }

    pub fn weight(&self) -> u64 {
        self.weight
    }

    pub fn exponents(&self) -> &[(u32, u32)] {
        &self.exponents
    }

    pub fn exponent(&self, var: u32) -> u32 {
        self.exponents
            .binary_search_by_key(&var, |&(v, _)| v)
            .map(|i| self.exponents[i].1)
            .unwrap_or(0)
    }

    pub fn is_one(&self) -> bool {
        self.exponents.is_empty()
    }

    pub fn to_cycle_type(&self) -> CycleType {
        CycleType::from_parts(self.exponents.iter().copied())
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.exponents, &other.exponents);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial {
            exponents: out,
            weight: self.weight + other.weight,
        }
    }
}

/// Graded lexicographic: lighter monomials first; within one weight, the
/// dense exponent vectors `(e_1, e_2, ...)` in descending lexicographic
/// order, so `t_1^2` precedes `t_2`.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight.cmp(&other.weight).then_with(|| {
            let (a, b) = (&self.exponents, &other.exponents);
            for (x, y) in a.iter().zip(b) {
                if x.0 != y.0 {
                    // the monomial with the lower variable present is larger
                    return x.0.cmp(&y.0);
                }
                if x.1 != y.1 {
                    return y.1.cmp(&x.1);
                }
            }
            b.len().cmp(&a.len())
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (v, e)) in self.exponents.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}^{e}")?;
        }
        Ok(())
    }
}

/// A power series truncated at weight `N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EgfSeries {
    truncation: u32,
    terms: BTreeMap<Monomial, ExactRational>,
}

impl EgfSeries {
    pub fn zero(truncation: u32) -> EgfSeries {
        EgfSeries {
            truncation,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(truncation: u32) -> EgfSeries {
        EgfSeries::constant(ExactRational::one(), truncation)
    }

    pub fn constant(value: ExactRational, truncation: u32) -> EgfSeries {
        EgfSeries::term(value, Monomial::one(), truncation)
    }

    /// `coeff · m`, or zero if `m` is heavier than the truncation.
    pub fn term(coeff: ExactRational, m: Monomial, truncation: u32) -> EgfSeries {
        let mut s = EgfSeries::zero(truncation);
        s.add_term(m, coeff);
        s
    }

    /// Collects `(monomial, coefficient)` pairs, summing repeats.
    pub fn from_terms<I>(terms: I, truncation: u32) -> EgfSeries
    where
        I: IntoIterator<Item = (Monomial, ExactRational)>,
    {
        let mut s = EgfSeries::zero(truncation);
        for (m, c) in terms {
            s.add_term(m, c);
        }
        s
    }

    /// Single-variable series `Σ coeffs[i] · t_1^i`.
    pub fn univariate(coeffs: &[ExactRational], truncation: u32) -> EgfSeries {
        EgfSeries::from_terms(
            coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (Monomial::power(1, i as u32), c.clone())),
            truncation,
        )
    }

    fn add_term(&mut self, m: Monomial, coeff: ExactRational) {
        if coeff.is_zero() || m.weight() > self.truncation as u64 {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn truncation(&self) -> u32 {
        self.truncation
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero terms in graded lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &ExactRational)> {
        self.terms.iter()
    }

    /// Raw coefficient of `m` (zero when absent).
    pub fn coefficient(&self, m: &Monomial) -> ExactRational {
        self.terms
            .get(m)
            .cloned()
            .unwrap_or_else(ExactRational::zero)
    }

    pub fn constant_term(&self) -> ExactRational {
        self.coefficient(&Monomial::one())
    }

    /// Lowers the truncation to `truncation`, dropping heavier terms.
    pub fn truncate(&self, truncation: u32) -> EgfSeries {
        let truncation = truncation.min(self.truncation);
        EgfSeries {
            truncation,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.weight() <= truncation as u64)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, factor: &ExactRational) -> EgfSeries {
        if factor.is_zero() {
            return EgfSeries::zero(self.truncation);
        }
        EgfSeries {
            truncation: self.truncation,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c * factor))
                .collect(),
        }
    }

    fn add_impl(&self, other: &EgfSeries, negate: bool) -> EgfSeries {
        let truncation = self.truncation.min(other.truncation);
        let mut out = self.truncate(truncation);
        for (m, c) in &other.terms {
            out.add_term(m.clone(), if negate { -c } else { c.clone() });
        }
        out
    }

    fn mul_impl(&self, other: &EgfSeries) -> EgfSeries {
        let truncation = self.truncation.min(other.truncation);
        let mut out = EgfSeries::zero(truncation);
        let limit = truncation as u64;
        for (ma, ca) in &self.terms {
            if ma.weight() > limit {
                continue;
            }
            for (mb, cb) in &other.terms {
                if ma.weight() + mb.weight() > limit {
                    // terms of other are sorted by weight
                    break;
                }
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    /// `Σ_{i≥0} a^i / i!`.
    pub fn exp(&self) -> Result<EgfSeries, SeriesError> {
        let mut out = EgfSeries::zero(self.truncation);
        for power in self.scaled_powers()? {
            out = &out + &power;
        }
        Ok(out)
    }

    /// `Σ_{i≥0} a^(2i) / (2i)!`.
    pub fn cosh(&self) -> Result<EgfSeries, SeriesError> {
        let mut out = EgfSeries::zero(self.truncation);
        for power in self.scaled_powers()?.into_iter().step_by(2) {
            out = &out + &power;
        }
        Ok(out)
    }

    /// `Σ_{i≥0} a^(2i+1) / (2i+1)!`.
    pub fn sinh(&self) -> Result<EgfSeries, SeriesError> {
        let mut out = EgfSeries::zero(self.truncation);
        for power in self.scaled_powers()?.into_iter().skip(1).step_by(2) {
            out = &out + &power;
        }
        Ok(out)
    }

    /// `[1, a, a^2/2!, a^3/3!, ...]` up to the last nonvanishing power.
    fn scaled_powers(&self) -> Result<Vec<EgfSeries>, SeriesError> {
        if !self.constant_term().is_zero() {
            return Err(SeriesError::NonzeroConstantTerm);
        }
        let mut powers = vec![EgfSeries::one(self.truncation)];
        let mut i = 1u64;
        loop {
            let next = (powers.last().unwrap() * self)
                .scale(&ExactRational::new(BigInt::one(), BigInt::from(i)));
            if next.is_zero() {
                break;
            }
            powers.push(next);
            i += 1;
        }
        Ok(powers)
    }

    /// Labelled coefficient at `c`: the raw coefficient of `∏ t_ℓ^(c_ℓ)`
    /// times `∏ c_ℓ!`.
    pub fn egf_coefficient(&self, c: &CycleType) -> Result<ExactRational, SeriesError> {
        if c.size() > self.truncation as u64 {
            return Err(SeriesError::WeightExceedsTruncation {
                weight: c.size(),
                truncation: self.truncation,
            });
        }
        let raw = self.coefficient(&Monomial::from_cycle_type(c));
        let scale: BigUint = c.parts().map(|(_, m)| factorial(m as u64)).product();
        Ok(raw * ExactRational::from_integer(BigInt::from(scale)))
    }

    /// Like [`EgfSeries::egf_coefficient`], for series whose coefficients
    /// count something: panics unless the value is an integer.
    pub fn egf_count(&self, c: &CycleType) -> Result<BigInt, SeriesError> {
        let q = self.egf_coefficient(c)?;
        assert!(
            q.is_integer(),
            "EGF coefficient at {c} is not an integer: {q}"
        );
        Ok(q.to_integer())
    }

    /// One line per term, `<num>/<den> <ℓ>^<e> ...`, graded-lex order.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (m, c) in &self.terms {
            out.push_str(&format!("{}/{}", c.numer(), c.denom()));
            if !m.is_one() {
                out.push(' ');
                out.push_str(&m.to_string());
            }
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for EgfSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl Add for &EgfSeries {
    type Output = EgfSeries;
    fn add(self, rhs: &EgfSeries) -> EgfSeries {
        self.add_impl(rhs, false)
    }
}

impl Sub for &EgfSeries {
    type Output = EgfSeries;
    fn sub(self, rhs: &EgfSeries) -> EgfSeries {
        self.add_impl(rhs, true)
    }
}

impl Mul for &EgfSeries {
    type Output = EgfSeries;
    fn mul(self, rhs: &EgfSeries) -> EgfSeries {
        self.mul_impl(rhs)
    }
}

impl Neg for &EgfSeries {
    type Output = EgfSeries;
    fn neg(self) -> EgfSeries {
        EgfSeries {
            truncation: self.truncation,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr for EgfSeries {
            type Output = EgfSeries;
            fn $method(self, rhs: EgfSeries) -> EgfSeries {
                (&self).$method(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for EgfSeries {
    type Output = EgfSeries;
    fn neg(self) -> EgfSeries {
        -&self
    }
}

/// `ℓ^(g-1) / g`, the weight of the term `t_ℓ^g`.
pub(crate) fn root_term_coefficient(length: u32, g: u32) -> ExactRational {
    let numer = BigInt::from(length).pow(g - 1);
    ExactRational::new(numer, BigInt::from(g))
}

/// `Σ_ℓ Σ_{g ∈ G_k(ℓ)} sign(ℓ, g) · ℓ^(g-1)/g · t_ℓ^g`, keeping only
/// terms of weight `gℓ ≤ N`.
fn root_exponent(k: u32, truncation: u32, signed: bool) -> EgfSeries {
    let mut terms = Vec::new();
    for length in 1..=truncation {
        let gset = RootDivisorSet::by_definition(k, length);
        for &g in gset.members() {
            if g as u64 * length as u64 > truncation as u64 {
                break;
            }
            let mut coeff = root_term_coefficient(length, g);
            // (-1)^(ℓg+1)
            if signed && (length as u64 * g as u64).is_multiple_of(2) {
                coeff = -coeff;
            }
            terms.push((Monomial::power(length, g), coeff));
        }
    }
    EgfSeries::from_terms(terms, truncation)
}

/// `exp(Σ_ℓ Σ_{g ∈ G_k(ℓ)} ℓ^(g-1)/g · t_ℓ^g)`: its labelled coefficient at
/// `c` is the number of k-th roots of a permutation of type `c`.
pub fn build_total_root_series(k: u32, truncation: u32) -> EgfSeries {
    root_exponent(k, truncation, false)
        .exp()
        .expect("root exponent has no constant term")
}

/// `exp(Σ_ℓ Σ_{g ∈ G_k(ℓ)} (-1)^(ℓg+1) ℓ^(g-1)/g · t_ℓ^g)`: its labelled
/// coefficient at `c` is (even roots) − (odd roots).
pub fn build_signed_difference_series(k: u32, truncation: u32) -> EgfSeries {
    root_exponent(k, truncation, true)
        .exp()
        .expect("root exponent has no constant term")
}

/// Half the sum (`even`) or half the difference (`odd`) of the total and
/// signed series: the even or odd root-count generating function.
pub fn build_parity_root_series(k: u32, truncation: u32, even: bool) -> EgfSeries {
    let total = build_total_root_series(k, truncation);
    let signed = build_signed_difference_series(k, truncation);
    let half = ExactRational::new(BigInt::one(), BigInt::from(2));
    let combined = if even {
        &total + &signed
    } else {
        &total - &signed
    };
    combined.scale(&half)
}

/// Whether every labelled coefficient is an integer (used by tests and the
/// verification driver).
pub fn all_labelled_coefficients_integral(s: &EgfSeries) -> bool {
    s.terms().all(|(m, _)| {
        s.egf_coefficient(&m.to_cycle_type())
            .map(|q| q.is_integer())
            .unwrap_or(false)
    })
}

/// Whether every labelled coefficient is a non-negative integer.
pub fn all_labelled_coefficients_counts(s: &EgfSeries) -> bool {
    s.terms().all(|(m, _)| {
        s.egf_coefficient(&m.to_cycle_type())
            .map(|q| q.is_integer() && !q.is_negative())
            .unwrap_or(false)
    })
}
