//! Polynomials in the power-sum variables p_1, p_2, ... and truncated
//! generating series in t.
//!
//! A monomial prod_j p_j^(e_j) has degree sum_j j*e_j, so a degree-n
//! monomial is the same data as a cycle type of S_n: e_j parts equal to j.
//! Series produced by the assemblers downstream are homogeneous in that
//! grading, coefficient by coefficient, which [`TruncatedSeries::homogeneity_violation`]
//! checks.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{factorial, is_integer, Rational};
use crate::symfunc::partition::Partition;

/// A monomial in the p-variables: sorted (variable, exponent) pairs,
/// exponents >= 1. The empty list is the monomial 1.
///
/// Ordering is graded: first by degree, then by cycle type, largest parts
/// first, matching the canonical partition enumeration. Iterating a
/// [`PPolynomial`] therefore yields a stable canonical term order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PMonomial {
    exps: Vec<(u64, u32)>,
}

impl PMonomial {
    pub fn one() -> Self {
        PMonomial { exps: Vec::new() }
    }

    /// p_j^e; e = 0 gives 1.
    pub fn var_pow(j: u64, e: u32) -> Self {
        assert!(j >= 1, "variable index must be >= 1");
        if e == 0 {
            PMonomial::one()
        } else {
            PMonomial { exps: vec![(j, e)] }
        }
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exponents(&self) -> &[(u64, u32)] {
        &self.exps
    }

    /// Degree sum_j j*e_j (p_j counts with weight j).
    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&(j, e)| j * e as u64).sum()
    }

    pub fn mul(&self, other: &PMonomial) -> PMonomial {
        let mut exps: BTreeMap<u64, u32> = self.exps.iter().copied().collect();
        for &(j, e) in &other.exps {
            *exps.entry(j).or_insert(0) += e;
        }
        PMonomial {
            exps: exps.into_iter().collect(),
        }
    }

    /// The cycle type: e_j parts equal to j.
    pub fn to_partition(&self) -> Partition {
        let mut parts = Vec::new();
        for &(j, e) in &self.exps {
            for _ in 0..e {
                parts.push(j);
            }
        }
        Partition::new(parts)
    }

    /// Monomial with one variable per part: (3,1,1) -> p_3 * p_1^2.
    pub fn from_partition(mu: &Partition) -> PMonomial {
        let exps = mu
            .multiplicities()
            .into_iter()
            .map(|(part, mult)| (part, mult as u32))
            .collect();
        PMonomial { exps }
    }
}

impl Ord for PMonomial {
    fn cmp(&self, other: &Self) -> core::cmp::Ordering {
        use core::cmp::Ordering;
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        // same degree: the larger cycle type (largest-variable-first) sorts
        // earlier, so iteration follows the canonical partition enumeration
        let mut a = self.exps.iter().rev();
        let mut b = other.exps.iter().rev();
        loop {
            match (a.next(), b.next()) {
                (None, None) => return Ordering::Equal,
                (None, Some(_)) => return Ordering::Greater,
                (Some(_), None) => return Ordering::Less,
                (Some(x), Some(y)) => match x.cmp(y) {
                    Ordering::Equal => {}
                    ord => return ord.reverse(),
                },
            }
        }
    }
}

impl PartialOrd for PMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl core::fmt::Display for PMonomial {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        for (i, &(j, e)) in self.exps.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            if e == 1 {
                write!(f, "p{j}")?;
            } else {
                write!(f, "p{j}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Finite Q-linear combination of p-monomials; no zero coefficients stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PPolynomial {
    terms: BTreeMap<PMonomial, Rational>,
}

impl PPolynomial {
    pub fn zero() -> Self {
        PPolynomial {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        PPolynomial::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_term(PMonomial::one(), c)
    }

    pub fn from_term(monomial: PMonomial, coeff: Rational) -> Self {
        let mut p = PPolynomial::zero();
        p.add_term(monomial, coeff);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical order: graded by degree, then largest cycle type
    /// first. Stable across runs; serializers use it verbatim.
    pub fn iter(&self) -> impl Iterator<Item = (&PMonomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, monomial: &PMonomial) -> Rational {
        self.terms.get(monomial).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, monomial: PMonomial, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        use alloc::collections::btree_map::Entry;
        match self.terms.entry(monomial) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &PPolynomial) {
        for (m, c) in other.iter() {
            self.add_term(m.clone(), c.clone());
        }
    }

    pub fn scale(&self, factor: &Rational) -> PPolynomial {
        if factor.is_zero() {
            return PPolynomial::zero();
        }
        PPolynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c * factor))
                .collect(),
        }
    }

    pub fn mul(&self, other: &PPolynomial) -> PPolynomial {
        let mut out = PPolynomial::zero();
        for (ma, ca) in self.iter() {
            for (mb, cb) in other.iter() {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    /// True when every stored monomial has the given degree (vacuously for 0).
    pub fn is_homogeneous_of(&self, degree: u64) -> bool {
        self.terms.keys().all(|m| m.degree() == degree)
    }

    /// Specialize every p_j to 1 (sum of coefficients).
    pub fn evaluate_ones(&self) -> Rational {
        self.terms.values().sum()
    }
}

impl core::fmt::Display for PPolynomial {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{c}")?;
            } else if c.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{c}*{m}")?;
            }
        }
        Ok(())
    }
}

/// Series sum_{n<=N} a_n t^n with PPolynomial coefficients, truncation
/// order N fixed at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<PPolynomial>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![PPolynomial::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = TruncatedSeries::zero(order);
        s.coeffs[0] = PPolynomial::one();
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &PPolynomial {
        &self.coeffs[n]
    }

    pub fn coeff_mut(&mut self, n: usize) -> &mut PPolynomial {
        &mut self.coeffs[n]
    }

    pub fn add_assign(&mut self, other: &TruncatedSeries) {
        assert_eq!(
            self.order(),
            other.order(),
            "series truncation orders must match"
        );
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            a.add_assign(b);
        }
    }

    pub fn scale(&self, factor: &Rational) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| c.scale(factor)).collect(),
        }
    }

    /// First t-degree whose coefficient is not homogeneous of that degree.
    pub fn homogeneity_violation(&self) -> Option<usize> {
        self.coeffs
            .iter()
            .enumerate()
            .find(|(n, c)| !c.is_homogeneous_of(*n as u64))
            .map(|(n, _)| n)
    }
}

/// Cauchy product truncated at the common order. Panics on mismatched
/// truncation orders.
pub fn series_mul(a: &TruncatedSeries, b: &TruncatedSeries) -> TruncatedSeries {
    assert_eq!(
        a.order(),
        b.order(),
        "series truncation orders must match"
    );
    let order = a.order();
    let mut out = TruncatedSeries::zero(order);
    for i in 0..=order {
        if a.coeffs[i].is_zero() {
            continue;
        }
        for j in 0..=order - i {
            if b.coeffs[j].is_zero() {
                continue;
            }
            let product = a.coeffs[i].mul(&b.coeffs[j]);
            out.coeffs[i + j].add_assign(&product);
        }
    }
    out
}

/// Generalized binomial coefficient C(k, m) = k(k-1)...(k-m+1)/m! as an
/// exact rational; integral for integer k, which is asserted.
pub fn generalized_binomial(k: i64, m: u32) -> Rational {
    let mut numer = BigInt::one();
    for i in 0..m as i64 {
        numer *= BigInt::from(k - i);
    }
    let value = Rational::new(numer, factorial(m as u64));
    assert!(
        is_integer(&value),
        "binomial C({k},{m}) must be an integer"
    );
    value
}

/// (1 + p_j t^j)^k truncated at order N, for any integer k (the binomial
/// series sum_m C(k,m) p_j^m t^(jm); finite when k >= 0).
pub fn binomial_power(j: u64, k: i64, order: usize) -> TruncatedSeries {
    assert!(j >= 1, "variable index must be >= 1");
    let mut out = TruncatedSeries::zero(order);
    let mut m = 0u32;
    while (j as usize) * (m as usize) <= order {
        if k >= 0 && m as i64 > k {
            break;
        }
        let coeff = generalized_binomial(k, m);
        out.coeffs[j as usize * m as usize].add_term(PMonomial::var_pow(j, m), coeff);
        m += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, rat_int};
    use crate::symfunc::partition::partitions_of;

    fn p1_series(order: usize) -> TruncatedSeries {
        binomial_power(1, 1, order)
    }

    #[test]
    fn monomial_partition_roundtrip() {
        for n in 0..=9u64 {
            for mu in partitions_of(n) {
                let m = PMonomial::from_partition(&mu);
                assert_eq!(m.degree(), n);
                assert_eq!(m.to_partition(), mu);
            }
        }
    }

    #[test]
    fn monomial_order_is_graded_and_canonical() {
        // within a degree, monomials sort like the partition enumeration
        for n in 1..=8u64 {
            let mut monomials: Vec<PMonomial> = partitions_of(n)
                .iter()
                .map(PMonomial::from_partition)
                .collect();
            let enumerated = monomials.clone();
            monomials.sort();
            assert_eq!(monomials, enumerated, "degree {n}");
        }
        // grading dominates: lower total degree sorts first
        assert!(PMonomial::var_pow(1, 2) < PMonomial::var_pow(3, 1));
    }

    #[test]
    fn series_identity_and_square_difference() {
        let order = 4;
        let one = TruncatedSeries::one(order);
        let b = binomial_power(2, 3, order);
        assert_eq!(series_mul(&one, &b), b);

        // (1 + p1 t)(1 - p1 t) = 1 - p1^2 t^2
        let plus = p1_series(order);
        let mut minus = TruncatedSeries::one(order);
        minus
            .coeff_mut(1)
            .add_term(PMonomial::var_pow(1, 1), rat_int(-1));
        let product = series_mul(&plus, &minus);
        let mut expected = TruncatedSeries::one(order);
        expected
            .coeff_mut(2)
            .add_term(PMonomial::var_pow(1, 2), rat_int(-1));
        assert_eq!(product, expected);
    }

    #[test]
    fn binomial_power_cube_matches_repeated_product() {
        let order = 5;
        let cube = binomial_power(1, 3, order);
        let linear = p1_series(order);
        let by_mul = series_mul(&series_mul(&linear, &linear), &linear);
        assert_eq!(cube, by_mul);
    }

    #[test]
    fn binomial_power_examples() {
        let order = 3;
        let s = binomial_power(1, -2, order);
        assert_eq!(s.coeff(0), &PPolynomial::one());
        assert_eq!(
            s.coeff(1),
            &PPolynomial::from_term(PMonomial::var_pow(1, 1), rat_int(-2))
        );
        assert_eq!(
            s.coeff(2),
            &PPolynomial::from_term(PMonomial::var_pow(1, 2), rat_int(3))
        );
        assert_eq!(
            s.coeff(3),
            &PPolynomial::from_term(PMonomial::var_pow(1, 3), rat_int(-4))
        );

        let s = binomial_power(2, -4, 4);
        assert_eq!(s.coeff(0), &PPolynomial::one());
        assert!(s.coeff(1).is_zero());
        assert_eq!(
            s.coeff(2),
            &PPolynomial::from_term(PMonomial::var_pow(2, 1), rat_int(-4))
        );
        assert!(s.coeff(3).is_zero());
        assert_eq!(
            s.coeff(4),
            &PPolynomial::from_term(PMonomial::var_pow(2, 2), rat_int(10))
        );

        assert_eq!(binomial_power(3, 0, 7), TruncatedSeries::one(7));
    }

    #[test]
    fn binomial_power_inverse_pairs() {
        for j in 1..=3u64 {
            for k in -6i64..=6 {
                let s = series_mul(
                    &binomial_power(j, k, 8),
                    &binomial_power(j, -k, 8),
                );
                assert_eq!(s, TruncatedSeries::one(8), "j={j} k={k}");
            }
        }
    }

    #[test]
    fn binomial_powers_are_homogeneous() {
        for j in 1..=4u64 {
            for k in [-5i64, -1, 0, 2, 7] {
                assert_eq!(binomial_power(j, k, 9).homogeneity_violation(), None);
            }
        }
    }

    #[test]
    fn polynomial_display_is_canonical() {
        let mut p = PPolynomial::zero();
        p.add_term(PMonomial::var_pow(1, 2), rat(1, 2));
        p.add_term(PMonomial::var_pow(2, 1), rat(1, 2));
        assert_eq!(alloc::format!("{p}"), "1/2*p2 + 1/2*p1^2");
    }

    #[test]
    fn zero_coefficients_are_dropped() {
        let mut p = PPolynomial::from_term(PMonomial::var_pow(2, 1), rat_int(5));
        p.add_term(PMonomial::var_pow(2, 1), rat_int(-5));
        assert!(p.is_zero());
        assert_eq!(p.num_terms(), 0);
    }

    #[test]
    #[should_panic(expected = "truncation orders must match")]
    fn mismatched_orders_rejected() {
        let _ = series_mul(&TruncatedSeries::one(3), &TruncatedSeries::one(4));
    }
}
