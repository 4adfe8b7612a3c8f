//! Exact rational arithmetic and elementary number theory.
//!
//! Everything downstream runs on [`Rational`] (arbitrary-precision, always
//! in lowest terms with positive denominator) and on the small multiplicative
//! functions below. Trial division is all the factoring this crate needs:
//! every integer factored here is an automorphism order (at most 4g+2) or a
//! divisor of one, plus small test ranges.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision integer.
pub type Int = BigInt;

/// Arbitrary-precision rational, reduced, positive denominator.
pub type Rational = num_rational::BigRational;

/// Prime factorization as (prime, exponent) pairs with primes ascending.
/// The empty list is the factorization of 1.
pub type Factorization = Vec<(u64, u32)>;

/// Rational from a machine integer.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Rational num/den from machine integers. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// gcd over u64, with gcd(0, n) = n.
pub fn gcd(a: u64, b: u64) -> u64 {
    num_integer::gcd(a, b)
}

/// n! as a big integer.
pub fn factorial(n: u64) -> Int {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= BigInt::from(i);
    }
    acc
}

/// Prime factorization by trial division. n = 1 gives the empty list.
pub fn factorize(n: u64) -> Factorization {
    assert!(n >= 1, "factorize: n must be positive");
    let mut factors = Vec::new();
    let mut m = n;
    let mut p: u64 = 2;
    while p * p <= m {
        if m % p == 0 {
            let mut e = 0;
            while m % p == 0 {
                e += 1;
                m /= p;
            }
            factors.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if m > 1 {
        factors.push((m, 1));
    }
    factors
}

/// Moebius function: 0 on non-squarefree n, otherwise (-1)^(number of prime factors).
pub fn mobius(n: u64) -> i64 {
    assert!(n >= 1, "mobius: n must be positive");
    let factors = factorize(n);
    if factors.iter().any(|&(_, e)| e > 1) {
        return 0;
    }
    if factors.len() % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Euler totient: number of residues mod n coprime to n.
pub fn euler_phi(n: u64) -> u64 {
    assert!(n >= 1, "euler_phi: n must be positive");
    let mut result = n;
    for (p, _) in factorize(n) {
        result = result / p * (p - 1);
    }
    result
}

/// All divisors of n including 1 and n, ascending.
pub fn divisors(n: u64) -> Vec<u64> {
    assert!(n >= 1, "divisors: n must be positive");
    let mut divs = vec![1u64];
    for (p, e) in factorize(n) {
        let current = divs.clone();
        let mut pk = 1u64;
        for _ in 0..e {
            pk *= p;
            divs.extend(current.iter().map(|d| d * pk));
        }
    }
    divs.sort_unstable();
    divs
}

/// Bernoulli number B_m for even m (B_0 = 1, B_2 = 1/6, B_4 = -1/30).
///
/// Computed by the defining recurrence sum_{k<=m} C(m+1,k) B_k = 0 with
/// exact rationals. Odd indices are rejected: B_1's sign convention never
/// enters this crate and every odd index above 1 vanishes.
pub fn bernoulli(m: u32) -> Rational {
    assert!(m % 2 == 0, "bernoulli: odd index {m} rejected");
    let mut table: Vec<Rational> = Vec::with_capacity(m as usize + 1);
    table.push(Rational::one());
    for n in 1..=m {
        // B_n = -1/(n+1) * sum_{k<n} C(n+1, k) B_k
        let mut sum = Rational::zero();
        let mut binom = BigInt::one(); // C(n+1, k), updated incrementally
        for (k, b) in table.iter().enumerate() {
            sum += Rational::from_integer(binom.clone()) * b;
            binom = binom * BigInt::from(n as i64 + 1 - k as i64) / BigInt::from(k as u64 + 1);
        }
        table.push(-sum / rat_int(n as i64 + 1));
    }
    table.pop().expect("table is nonempty")
}

/// True if `r` is an integer (denominator 1).
pub fn is_integer(r: &Rational) -> bool {
    r.denom().is_one()
}

/// Extract an integer-valued rational as an `Int`, panicking otherwise.
pub fn to_integer(r: &Rational) -> Int {
    assert!(is_integer(r), "expected integer, got {}/{}", r.numer(), r.denom());
    r.numer().clone()
}

/// Signed big power n^e with n possibly negative.
pub fn int_pow(n: i64, e: u32) -> Int {
    BigInt::from(n).pow(e)
}

/// True if the rational is a non-negative integer.
pub fn is_count(r: &Rational) -> bool {
    is_integer(r) && !r.numer().is_negative()
}
