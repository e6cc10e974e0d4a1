//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each,
//! and exits nonzero if any fails. All comparisons are exact.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

use permroot::counting::count_roots;
use permroot::cycletype::{parity_of_type, partitions_of, CycleType};
use permroot::gset::{g_set_by_definition, g_set_by_factorization};
use permroot::oracle::oracle_count_roots;
use permroot::sequences::{
    generate_sequence, single_length_egf, single_length_egf_simplified, square_root_egf, Parity,
    SUPPORTED,
};
use permroot::series::{
    build_parity_root_series, build_signed_difference_series, build_total_root_series, EgfSeries,
    Monomial,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * i)
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// 1. oracle = closed form = series for k ≤ 6 and every type with n ≤ 7.
fn three_way_agreement() -> Outcome {
    let mut checks = 0;
    for k in 1..=6u32 {
        let total = build_total_root_series(k, 7);
        let signed = build_signed_difference_series(k, 7);
        for n in 0..=7 {
            for c in partitions_of(n) {
                let oracle = oracle_count_roots(k, &c).map_err(|e| e.to_string())?;
                let closed = count_roots(k, &c);
                let s_total = total.egf_count(&c).map_err(|e| e.to_string())?;
                let s_diff = signed.egf_count(&c).map_err(|e| e.to_string())?;
                ensure(oracle == closed, || {
                    format!("k={k} {c}: oracle {oracle:?} vs closed form {closed:?}")
                })?;
                ensure(BigInt::from(oracle.total.clone()) == s_total, || {
                    format!("k={k} {c}: series total {s_total}")
                })?;
                ensure(oracle.difference() == s_diff, || {
                    format!("k={k} {c}: series difference {s_diff}")
                })?;
                checks += 1;
            }
        }
    }
    Ok(format!("{checks} (k, type) pairs agree"))
}

/// 2. G_8(1) and the even 8th roots of the identity in exp·cosh form.
fn eighth_root_example() -> Outcome {
    let g = g_set_by_definition(8, 1);
    ensure(g.members() == [1, 2, 4, 8], || {
        format!("G_8(1) = {:?}", g.members())
    })?;
    let n = 12;
    let t = |e: u32, c: BigRational| EgfSeries::term(c, Monomial::power(1, e), n);
    let inner = &(&t(2, q(1, 2)) + &t(4, q(1, 4))) + &t(8, q(1, 8));
    let expected = &t(1, q(1, 1)).exp().unwrap() * &inner.cosh().unwrap();
    let got = single_length_egf(8, 1, Parity::Even, n);
    ensure(got == expected, || "series differ".into())?;
    let simplified = single_length_egf_simplified(8, 1, Parity::Even, n);
    ensure(simplified == expected, || "simplified form differs".into())?;
    Ok("G_8(1) = {1, 2, 4, 8}; exp(t)cosh(t²/2+t⁴/4+t⁸/8) matches to degree 12".into())
}

/// 3. The square-root product form equals the k = 2 parity series.
fn square_root_corollary() -> Outcome {
    for (parity, even) in [(Parity::Even, true), (Parity::Odd, false)] {
        let product = square_root_egf(parity, 10);
        let general = build_parity_root_series(2, 10, even);
        ensure(product == general, || {
            format!("{parity} square-root series differ")
        })?;
    }
    Ok("even and odd forms equal to weight 10".into())
}

/// 4. cosh/sinh and GO/GE product forms equal the half-sum forms.
fn simplification_suite() -> Outcome {
    let mut cases = 0;
    for k in (2..=12).step_by(2) {
        for l in 1..=8 {
            for parity in [Parity::Even, Parity::Odd] {
                let plain = single_length_egf(k, l, parity, 16);
                let simple = single_length_egf_simplified(k, l, parity, 16);
                ensure(plain == simple, || format!("k={k} ℓ={l} {parity}"))?;
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} (k, ℓ, parity) cases equal at N = 16"))
}

/// 5. For odd k every root has the parity of σ.
fn odd_k_parity_law() -> Outcome {
    let mut checks = 0;
    for k in [3u32, 5, 7] {
        for n in 0..=8 {
            for c in partitions_of(n) {
                let r = count_roots(k, &c);
                let ok = if parity_of_type(&c).is_even() {
                    r.even == r.total && r.odd.is_zero()
                } else {
                    r.odd == r.total && r.even.is_zero()
                };
                ensure(ok, || format!("k={k} {c}: {r:?}"))?;
                checks += 1;
            }
        }
    }
    Ok(format!("{checks} (k, type) pairs collapse by parity"))
}

fn class_size(c: &CycleType) -> BigUint {
    let denom: BigUint = c
        .parts()
        .map(|(l, m)| num_traits::pow(BigUint::from(l), m as usize) * factorial(m as u64))
        .product();
    factorial(c.size()) / denom
}

/// 6. Σ_c |class(c)| · r_k(c) = n!.
fn conservation() -> Outcome {
    for k in 1..=6 {
        for n in 0..=7u32 {
            let sum: BigUint = partitions_of(n)
                .iter()
                .map(|c| class_size(c) * count_roots(k, c).total)
                .sum();
            ensure(sum == factorial(n as u64), || {
                format!("k={k} n={n}: sum {sum}")
            })?;
            let oracle_sum: BigUint = partitions_of(n)
                .iter()
                .map(|c| class_size(c) * oracle_count_roots(k, c).unwrap().total)
                .sum();
            ensure(oracle_sum == factorial(n as u64), || {
                format!("k={k} n={n}: oracle sum {oracle_sum}")
            })?;
        }
    }
    Ok("holds for n ≤ 7, k ≤ 6".into())
}

/// 7. First 8 terms of each supported sequence against the oracle.
fn sequence_agreement() -> Outcome {
    for spec in SUPPORTED {
        let terms = generate_sequence(&spec, 8).map_err(|e| e.to_string())?;
        for (c, value) in terms.iter().enumerate() {
            let r = oracle_count_roots(spec.k, &CycleType::identity(c as u32)).unwrap();
            let expected = match spec.parity {
                Parity::Even => r.even,
                Parity::Odd => r.odd,
            };
            ensure(*value == expected, || {
                format!("{} term {c}: {value} vs oracle {expected}", spec.id)
            })?;
        }
    }
    Ok(format!("{} sequences × 8 terms", SUPPORTED.len()))
}

fn small_series(with_constant: bool) -> impl Strategy<Value = EgfSeries> {
    let term = (1u32..=4, 1u32..=3, -5i64..=5, 1i64..=4);
    (proptest::collection::vec(term, 0..5), -3i64..=3).prop_map(move |(ts, c0)| {
        let mut s = EgfSeries::from_terms(
            ts.into_iter()
                .map(|(v, e, n, d)| (Monomial::power(v, e), q(n, d))),
            8,
        );
        if with_constant {
            s = &s + &EgfSeries::constant(q(c0, 1), 8);
        }
        s
    })
}

/// 8. Randomised ring/exp laws, G_k(ℓ) equivalence, divisibility asserts.
fn property_suites() -> Outcome {
    const CASES: u32 = 256;
    let mut runner = TestRunner::new(Config {
        cases: CASES,
        failure_persistence: None,
        ..Config::default()
    });
    let triple = (small_series(true), small_series(true), small_series(true));
    runner
        .run(&triple, |(a, b, c)| {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &b, &b + &a);
            Ok(())
        })
        .map_err(|e| format!("ring laws: {e}"))?;
    runner
        .run(&(small_series(false), small_series(false)), |(a, b)| {
            prop_assert_eq!(&a.exp().unwrap() * &(-&a).exp().unwrap(), EgfSeries::one(8));
            prop_assert_eq!(
                (&a + &b).exp().unwrap(),
                &a.exp().unwrap() * &b.exp().unwrap()
            );
            Ok(())
        })
        .map_err(|e| format!("exp laws: {e}"))?;

    for k in 1..=100 {
        for l in 1..=100 {
            ensure(
                g_set_by_definition(k, l) == g_set_by_factorization(k, l),
                || format!("G_{k}({l})"),
            )?;
        }
    }

    // the closed form halves total ± difference under assert; sweep wider
    // than criteria 1–7 and make sure none fires
    let sweep = catch_unwind(AssertUnwindSafe(|| {
        for k in 1..=12 {
            for n in 0..=12 {
                for c in partitions_of(n) {
                    count_roots(k, &c);
                }
            }
        }
    }));
    ensure(sweep.is_ok(), || "divisibility assertion fired".into())?;
    Ok(format!(
        "{CASES} cases per law; G equivalence for k, ℓ ≤ 100; no divisibility failures"
    ))
}

fn main() {
    let criteria: [Criterion; 8] = [
        (
            "1 three-way exhaustive agreement (k ≤ 6, n ≤ 7)",
            three_way_agreement,
        ),
        (
            "2 G_8(1) and exp·cosh even 8th-root EGF",
            eighth_root_example,
        ),
        (
            "3 square-root corollary vs general series",
            square_root_corollary,
        ),
        (
            "4 cosh/sinh/GO-GE simplifications (even k ≤ 12, ℓ ≤ 8, N = 16)",
            simplification_suite,
        ),
        ("5 odd-k parity law (k ∈ {3,5,7}, n ≤ 8)", odd_k_parity_law),
        ("6 conservation Σ classSize·total = n!", conservation),
        ("7 OEIS sequences vs oracle (8 terms)", sequence_agreement),
        ("8 property suites", property_suites),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let start = Instant::now();
        let result = catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("PASS  criterion {name}: {detail} ({secs:.2}s)"),
            Err(why) => {
                failed += 1;
                println!("FAIL  criterion {name}: {why} ({secs:.2}s)");
            }
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
    println!("all criteria passed");
}
