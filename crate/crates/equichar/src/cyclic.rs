//! Counting formulas for cyclic branched coverings.
//!
//! Three counts, each with an independent brute-force oracle:
//!
//! - [`c_sum`]: the character sum c(k,l,d) = sum of zeta^r over residues r
//!   with gcd(r,k) = l, zeta a primitive d-th root of unity
//! - [`count_residue_tuples`]: N(k; l_1..l_s), residue tuples with prescribed
//!   gcd classes summing to zero mod k
//! - [`count_connected_monodromies`]: tuples of handle monodromies that,
//!   together with the branch data, generate the full cyclic deck group
//!
//! No complex arithmetic anywhere: root-of-unity sums are rational integers
//! and are evaluated through Moebius/totient identities, the brute-force
//! routes included. gcd(0, k) is taken to be k throughout, so r = 0 is the
//! unique residue with gcd class k.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::arith::{self, divisors, euler_phi, factorize, gcd, mobius, rat_int, Int, Rational};
use crate::error::Error;

/// Budget for brute-force enumerations (number of raw tuples).
pub const ENUMERATION_BUDGET: u128 = 100_000_000;

/// A modulus k together with a multiset of gcd classes, each dividing k.
/// The empty multiset (s = 0) is the unramified case.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidueConstraint {
    modulus: u64,
    classes: Vec<u64>,
}

impl ResidueConstraint {
    pub fn new(modulus: u64, classes: Vec<u64>) -> Result<Self, Error> {
        if modulus == 0 {
            return Err(Error::InvalidGcdClass { modulus, class: 0 });
        }
        for &l in &classes {
            if l == 0 || modulus % l != 0 {
                return Err(Error::InvalidGcdClass { modulus, class: l });
            }
        }
        Ok(ResidueConstraint { modulus, classes })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn classes(&self) -> &[u64] {
        &self.classes
    }
}

/// c(k,l,d) = mu(d/(d,l)) * phi(k/l) / phi(d/(d,l)). Requires l | k and d | k;
/// the division is exact because d/(d,l) divides k/l.
pub fn c_sum(k: u64, l: u64, d: u64) -> i64 {
    assert!(k >= 1 && l >= 1 && d >= 1, "c_sum: arguments must be positive");
    assert!(k % l == 0, "c_sum: l = {l} must divide k = {k}");
    assert!(k % d == 0, "c_sum: d = {d} must divide k = {k}");
    let e = d / gcd(d, l);
    let num = euler_phi(k / l);
    let den = euler_phi(e);
    assert!(num % den == 0, "c_sum: phi({}) does not divide phi({})", e, k / l);
    let magnitude = i64::try_from(num / den).expect("character sum exceeds i64");
    mobius(e) * magnitude
}

/// Direct evaluation of the character sum: walk every residue r with
/// gcd(r,k) = l, bucket the values zeta^r by their multiplicative order
/// e = d/gcd(d,r), and add mu(e) * bucket/phi(e) per bucket (the primitive
/// e-th roots sum to mu(e) and each bucket covers them uniformly, the
/// uniformity being asserted). Must equal [`c_sum`].
pub fn c_sum_bruteforce(k: u64, l: u64, d: u64) -> i64 {
    assert!(k >= 1 && l >= 1 && d >= 1);
    assert!(k % l == 0, "c_sum_bruteforce: l = {l} must divide k = {k}");
    assert!(k % d == 0, "c_sum_bruteforce: d = {d} must divide k = {k}");
    let mut order_counts: BTreeMap<u64, u64> = BTreeMap::new();
    for r in 0..k {
        let class = if r == 0 { k } else { gcd(r, k) };
        if class != l {
            continue;
        }
        let e = d / gcd(d, r);
        *order_counts.entry(e).or_insert(0) += 1;
    }
    let mut total = 0i64;
    for (e, count) in order_counts {
        let phi = euler_phi(e);
        assert!(
            count % phi == 0,
            "c_sum_bruteforce: bucket for order {e} not a multiple of phi({e})"
        );
        total += mobius(e) * i64::try_from(count / phi).expect("character sum exceeds i64");
    }
    total
}

/// N(k; l_1..l_s) by the closed form (1/k) sum_{d|k} phi(d) prod_i c(k,l_i,d).
/// Asserts the result is a non-negative integer.
pub fn count_residue_tuples(constraint: &ResidueConstraint) -> Int {
    let k = constraint.modulus();
    let mut total = BigInt::zero();
    for d in divisors(k) {
        let mut term = BigInt::from(euler_phi(d));
        for &l in constraint.classes() {
            term *= BigInt::from(c_sum(k, l, d));
        }
        total += term;
    }
    let (q, r) = num_integer::Integer::div_rem(&total, &BigInt::from(k));
    assert!(r.is_zero(), "count_residue_tuples: sum not divisible by k = {k}");
    assert!(!q.is_negative(), "count_residue_tuples: negative count");
    q
}

/// N(k; l_1..l_s) by enumerating residue tuples with the prescribed gcd
/// classes and zero sum. Errors when k^s exceeds the enumeration budget.
pub fn count_residue_tuples_bruteforce(constraint: &ResidueConstraint) -> Result<Int, Error> {
    let k = constraint.modulus();
    let mut size: u128 = 1;
    for _ in 0..constraint.classes().len() {
        size = size.saturating_mul(k as u128);
        if size > ENUMERATION_BUDGET {
            return Err(Error::BudgetExceeded {
                size,
                limit: ENUMERATION_BUDGET,
            });
        }
    }
    let candidates: Vec<Vec<u64>> = constraint
        .classes()
        .iter()
        .map(|&l| {
            (0..k)
                .filter(|&r| (if r == 0 { k } else { gcd(r, k) }) == l)
                .collect()
        })
        .collect();

    fn recurse(k: u64, slots: &[Vec<u64>], depth: usize, sum: u64, count: &mut Int) {
        if depth == slots.len() {
            if sum % k == 0 {
                *count += 1;
            }
            return;
        }
        for &r in &slots[depth] {
            recurse(k, slots, depth + 1, (sum + r) % k, count);
        }
    }

    let mut count = BigInt::zero();
    recurse(k, &candidates, 0, 0, &mut count);
    Ok(count)
}

/// Closed form for N(p; 1,...,1) with s ones: ((p-1)^s + (-1)^s (p-1)) / p.
/// An independent cross-check for the prime case. Panics if p is not prime.
pub fn prime_power_tuple_count(p: u64, s: u32) -> Int {
    let factors = factorize(p);
    assert!(
        factors.len() == 1 && factors[0].1 == 1,
        "prime_power_tuple_count: {p} is not prime"
    );
    let pm1 = BigInt::from(p - 1);
    let sign = if s % 2 == 0 { BigInt::one() } else { -BigInt::one() };
    let total = pm1.pow(s) + sign * BigInt::from(p - 1);
    let (q, r) = num_integer::Integer::div_rem(&total, &BigInt::from(p));
    assert!(r.is_zero(), "prime_power_tuple_count: not divisible by {p}");
    q
}

/// Number of 2h-tuples (a_1..a_2h) in (Z/ord)^2h with gcd(a_1..a_2h, l_gcd) = 1,
/// by the closed form ord^(2h) * prod_{p | l_gcd} (1 - p^(-2h)), evaluated in
/// exact rationals and asserted integral. Requires l_gcd | ord.
///
/// At h = 0 the formula already encodes the empty-tuple conventions:
/// the count is 1 when l_gcd = 1 and 0 otherwise.
pub fn count_connected_monodromies(ord: u64, h: u64, l_gcd: u64) -> Int {
    assert!(ord >= 1, "count_connected_monodromies: ord must be positive");
    assert!(
        l_gcd >= 1 && ord % l_gcd == 0,
        "count_connected_monodromies: l_gcd = {l_gcd} must divide ord = {ord}"
    );
    let exp = 2 * h as u32;
    let mut value = Rational::from_integer(BigInt::from(ord).pow(exp));
    for (p, _) in factorize(l_gcd) {
        value *= rat_int(1) - Rational::new(BigInt::one(), BigInt::from(p).pow(exp));
    }
    let count = arith::to_integer(&value);
    assert!(!count.is_negative(), "count_connected_monodromies: negative count");
    count
}

/// Direct enumeration oracle for [`count_connected_monodromies`].
pub fn count_connected_monodromies_bruteforce(
    ord: u64,
    h: u64,
    l_gcd: u64,
) -> Result<Int, Error> {
    assert!(ord >= 1 && l_gcd >= 1 && ord % l_gcd == 0);
    let slots = 2 * h as usize;
    let mut size: u128 = 1;
    for _ in 0..slots {
        size = size.saturating_mul(ord as u128);
        if size > ENUMERATION_BUDGET {
            return Err(Error::BudgetExceeded {
                size,
                limit: ENUMERATION_BUDGET,
            });
        }
    }

    fn recurse(ord: u64, remaining: usize, g: u64, count: &mut Int) {
        if remaining == 0 {
            if g == 1 {
                *count += 1;
            }
            return;
        }
        for a in 0..ord {
            // gcd(g, 0) = g, so a = 0 leaves the running gcd unchanged
            recurse(ord, remaining - 1, gcd(g, a), count);
        }
    }

    let mut count = BigInt::zero();
    recurse(ord, slots, l_gcd, &mut count);
    Ok(count)
}
