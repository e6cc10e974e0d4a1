use num_bigint::BigUint;
use num_traits::One;

pub(crate) fn factorial(n: u64) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, i| acc * i)
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

/// Divides `num` by `den`, panicking if the division leaves a remainder.
pub(crate) fn exact_div(num: &BigUint, den: &BigUint, what: &str) -> BigUint {
    let (q, r) = num_integer::Integer::div_rem(num, den);
    assert!(
        r == BigUint::default(),
        "{what}: {num} is not divisible by {den}"
    );
    q
}
