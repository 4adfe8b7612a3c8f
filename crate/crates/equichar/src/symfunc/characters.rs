//! Symmetric-group characters and the Schur-basis readout.
//!
//! Characters are computed by border-strip (rim-hook) manipulation on beta
//! sets: a partition with at most `rows` rows is the set
//! {lambda_i + rows - i}. Removing or adding a border strip of size r moves
//! one beta number by r; the sign is (-1)^(number of beta numbers jumped
//! over). Two independent code paths use this:
//!
//! - [`mn_character`] recurses by *removing* strips of mu, largest part first
//! - [`p_to_schur`] expands each p_mu by *adding* strips to the empty shape
//!
//! Their agreement is itself under test, as are row and column orthogonality.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::arith::{factorial, Rational};
use crate::symfunc::partition::{hook_dimension, Partition};
use crate::symfunc::poly::PPolynomial;

/// Beta set with `rows` entries, strictly increasing.
fn beta_set(lambda: &Partition, rows: usize) -> Vec<u64> {
    assert!(lambda.len() <= rows);
    let mut beta = Vec::with_capacity(rows);
    for i in (0..rows).rev() {
        let part = lambda.parts().get(i).copied().unwrap_or(0);
        beta.push(part + (rows - 1 - i) as u64);
    }
    beta
}

fn partition_from_beta(beta: &[u64]) -> Partition {
    // beta is strictly increasing; entry at index i corresponds to offset i
    let parts: Vec<u64> = beta
        .iter()
        .enumerate()
        .map(|(i, &b)| b - i as u64)
        .filter(|&p| p > 0)
        .collect();
    Partition::new(parts)
}

/// Irreducible character chi^lambda(mu) of the symmetric group, by the
/// Murnaghan-Nakayama recursion (signed border-strip removal), memoized per
/// call. Requires |lambda| = |mu|.
pub fn mn_character(lambda: &Partition, mu: &Partition) -> i64 {
    assert_eq!(
        lambda.weight(),
        mu.weight(),
        "character weight mismatch: |{lambda}| != |{mu}|"
    );
    let mut memo = BTreeMap::new();
    let rows = lambda.len();
    let beta = beta_set(lambda, rows);
    mn_rec(&beta, mu.parts(), &mut memo)
}

fn mn_rec(beta: &[u64], mu_rest: &[u64], memo: &mut BTreeMap<(Vec<u64>, usize), i64>) -> i64 {
    if mu_rest.is_empty() {
        return 1;
    }
    let key = (beta.to_vec(), mu_rest.len());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let r = mu_rest[0];
    let mut total = 0i64;
    for (idx, &b) in beta.iter().enumerate() {
        if b < r {
            continue;
        }
        let target = b - r;
        if beta.binary_search(&target).is_ok() {
            continue;
        }
        // strip height = number of beta numbers strictly between target and b
        let skipped = beta[..idx].iter().filter(|&&y| y > target).count();
        let sign = if skipped % 2 == 0 { 1 } else { -1 };
        let mut next: Vec<u64> = beta.to_vec();
        next.remove(idx);
        let pos = next.partition_point(|&y| y < target);
        next.insert(pos, target);
        total = total
            .checked_add(sign * mn_rec(&next, &mu_rest[1..], memo))
            .expect("character value overflow");
    }
    memo.insert(key, total);
    total
}

/// Expansion of p_mu in the Schur basis: the coefficient of s_lambda is
/// chi^lambda(mu). Computed by iterated border-strip addition starting from
/// the empty shape, sharing work across all lambda at once.
fn power_sum_in_schur(mu: &Partition) -> BTreeMap<Partition, i64> {
    let n = mu.weight();
    let rows = n as usize; // enough rows for every partition of n
    let mut table: BTreeMap<Vec<u64>, i64> = BTreeMap::new();
    table.insert(beta_set(&Partition::empty(), rows), 1);
    for &r in mu.parts() {
        let mut next: BTreeMap<Vec<u64>, i64> = BTreeMap::new();
        for (beta, coeff) in &table {
            for (idx, &b) in beta.iter().enumerate() {
                let target = b + r;
                if beta.binary_search(&target).is_ok() {
                    continue;
                }
                let skipped = beta[idx + 1..].iter().filter(|&&y| y < target).count();
                let sign = if skipped % 2 == 0 { 1 } else { -1 };
                let mut grown = beta.clone();
                grown.remove(idx);
                let pos = grown.partition_point(|&y| y < target);
                grown.insert(pos, target);
                let slot = next.entry(grown).or_insert(0);
                *slot = slot
                    .checked_add(sign * coeff)
                    .expect("character value overflow");
            }
        }
        table = next;
    }
    table
        .into_iter()
        .filter(|(_, c)| *c != 0)
        .map(|(beta, c)| (partition_from_beta(&beta), c))
        .collect()
}

/// Schur decomposition of a homogeneous degree-n polynomial: writes
/// f = sum_mu c_mu p_mu and returns lambda -> sum_mu c_mu chi^lambda(mu).
/// Zero multiplicities are omitted. Panics on non-homogeneous input.
pub fn p_to_schur(f: &PPolynomial, n: u64) -> BTreeMap<Partition, Rational> {
    assert!(
        f.is_homogeneous_of(n),
        "p_to_schur: input not homogeneous of degree {n}"
    );
    let mut out: BTreeMap<Partition, Rational> = BTreeMap::new();
    for (monomial, coeff) in f.iter() {
        let mu = monomial.to_partition();
        for (lambda, chi) in power_sum_in_schur(&mu) {
            let entry = out.entry(lambda).or_insert_with(Rational::zero);
            *entry += coeff * Rational::from_integer(chi.into());
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Plain (non-equivariant) Euler characteristic of a degree-n Frobenius
/// characteristic: n! times the coefficient of p_1^n. Also evaluated as
/// sum_lambda m_lambda f^lambda through the Schur decomposition; the two
/// routes are asserted to agree.
pub fn specialize_plain_euler(f: &PPolynomial, n: u64) -> Rational {
    assert!(
        f.is_homogeneous_of(n),
        "specialize_plain_euler: input not homogeneous of degree {n}"
    );
    let p1n = crate::symfunc::poly::PMonomial::var_pow(1, n as u32);
    let direct = f.coeff(&p1n) * Rational::from_integer(factorial(n));
    let via_schur: Rational = p_to_schur(f, n)
        .iter()
        .map(|(lambda, mult)| mult * Rational::from_integer(hook_dimension(lambda)))
        .sum();
    assert_eq!(
        direct, via_schur,
        "plain Euler characteristic: p_1-coefficient and Schur routes disagree"
    );
    direct
}

/// Multiplicity-of-the-trivial-representation readout: every p_j set to 1.
/// For a homogeneous input this equals the s_(n) multiplicity of the Schur
/// decomposition, which is asserted.
pub fn specialize_quotient_euler(f: &PPolynomial) -> Rational {
    let value = f.evaluate_ones();
    let mut degrees = f.iter().map(|(m, _)| m.degree());
    if let Some(first) = degrees.next() {
        if degrees.all(|d| d == first) {
            let trivial = p_to_schur(f, first)
                .remove(&Partition::row(first))
                .unwrap_or_else(Rational::zero);
            assert_eq!(
                value, trivial,
                "quotient Euler characteristic disagrees with trivial-representation multiplicity"
            );
        }
    }
    value
}
