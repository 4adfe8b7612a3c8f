//! The moduli-of-curves series: orbifold Euler characteristics of M_{h,s},
//! enumeration of cyclic-automorphism signatures of genus-g curves, their
//! coefficients, and the assembled generating series.
//!
//! A signature records the combinatorial type of a pair (C, tau): tau an
//! automorphism of order `ord` of a genus-g curve C, with exponents k_j
//! determined by chi of the locus of points with tau-orbit length j, so that
//! sum_j j*k_j = 2 - 2g. The quotient curve has genus h with
//! sum_j k_j = 2 - 2h and carries s = sum_{j<ord} k_j branch points whose
//! gcd classes form the multiset l. Each signature contributes
//!
//!   chi_orb(M_{h,s}) * (connected monodromy count) * N(ord; l)
//!   / (prod_{j<ord} k_j! * ord)
//!
//! times prod_j (1 + p_j t^j)^(k_j) to the series.
//!
//! Enumeration is bounded by the Wiman bound ord <= 4g + 2 for cyclic
//! automorphisms in genus g >= 2, a classical input not re-derived here.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{bernoulli, divisors, factorial, gcd, rat_int, Int, Rational};
use crate::confspace::{strata_combine, Stratum};
use crate::cyclic::{count_connected_monodromies, count_residue_tuples, ResidueConstraint};
use crate::error::Error;
use crate::symfunc::poly::TruncatedSeries;

/// Orbifold Euler characteristic of M_{h,s} (the Harer-Zagier values):
///
///   h = 0:  (-1)^(s-3) (s-3)!
///   h >= 1: (-1)^s (2h-3+s)! (2h-1) B_{2h} / (2h)!
///
/// equivalently pinned down by chi(h, s+1) = (2-2h-s) chi(h, s). Unstable
/// pairs (h=0 with s<3, h=1 with s=0) are rejected.
pub fn orb_chi_moduli(h: u64, s: u64) -> Result<Rational, Error> {
    let stable = match h {
        0 => s >= 3,
        1 => s >= 1,
        _ => true,
    };
    if !stable {
        return Err(Error::UnstableModuli { h, s });
    }
    let sign = |m: u64| if m % 2 == 0 { rat_int(1) } else { rat_int(-1) };
    if h == 0 {
        Ok(sign(s - 3) * Rational::from_integer(factorial(s - 3)))
    } else {
        let numer = Rational::from_integer(factorial(2 * h + s - 3) * BigInt::from(2 * h - 1))
            * bernoulli(2 * h as u32);
        Ok(sign(s) * numer / Rational::from_integer(factorial(2 * h)))
    }
}

/// The combinatorial type of a cyclic automorphism of a genus-g curve:
/// order, exponent vector, and the derived quotient data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Signature {
    genus: u64,
    ord: u64,
    exponents: BTreeMap<u64, i64>,
    quotient_genus: u64,
    branch_points: u64,
    gcd_classes: Vec<u64>,
}

impl Signature {
    /// Build and validate a signature. Zero exponents may be omitted.
    /// Panics if the data violates any structural invariant; callers
    /// assemble signatures deliberately, never from user input.
    pub fn new(genus: u64, ord: u64, exponents: BTreeMap<u64, i64>) -> Signature {
        assert!(genus >= 2, "signature genus must be >= 2");
        assert!(ord >= 1, "signature order must be >= 1");
        let exponents: BTreeMap<u64, i64> =
            exponents.into_iter().filter(|&(_, k)| k != 0).collect();
        let mut weighted: i64 = 0;
        let mut total: i64 = 0;
        for (&j, &k) in &exponents {
            assert!(j >= 1 && ord % j == 0, "exponent index {j} must divide ord {ord}");
            if j < ord {
                assert!(k >= 0, "k_{j} must be non-negative below the order");
            } else {
                assert!(k < 0, "k_ord must be negative in genus >= 2");
            }
            weighted += j as i64 * k;
            total += k;
        }
        assert_eq!(
            weighted,
            2 - 2 * genus as i64,
            "sum j*k_j must equal 2 - 2g"
        );
        assert!(
            (2 - total) % 2 == 0 && total <= 2,
            "sum k_j = {total} does not give a non-negative integer quotient genus"
        );
        let quotient_genus = ((2 - total) / 2) as u64;
        let mut gcd_classes = Vec::new();
        let mut branch_points = 0u64;
        for (&j, &k) in exponents.iter().filter(|&(&j, _)| j < ord) {
            branch_points += k as u64;
            for _ in 0..k {
                gcd_classes.push(j);
            }
        }
        Signature {
            genus,
            ord,
            exponents,
            quotient_genus,
            branch_points,
            gcd_classes,
        }
    }

    pub fn genus(&self) -> u64 {
        self.genus
    }

    /// Order of the automorphism.
    pub fn ord(&self) -> u64 {
        self.ord
    }

    /// Nonzero exponents j -> k_j.
    pub fn exponents(&self) -> &BTreeMap<u64, i64> {
        &self.exponents
    }

    pub fn exponent(&self, j: u64) -> i64 {
        self.exponents.get(&j).copied().unwrap_or(0)
    }

    /// Genus h of the quotient curve.
    pub fn quotient_genus(&self) -> u64 {
        self.quotient_genus
    }

    /// Number s of branch points on the quotient.
    pub fn branch_points(&self) -> u64 {
        self.branch_points
    }

    /// Branch-point gcd classes l_1 <= ... <= l_s.
    pub fn gcd_classes(&self) -> &[u64] {
        &self.gcd_classes
    }

    /// gcd of the classes together with the order itself; the modulus the
    /// handle monodromies must be coprime to for a connected cover. For the
    /// unramified case (s = 0) this is the full order.
    pub fn class_gcd(&self) -> u64 {
        self.gcd_classes.iter().fold(self.ord, |acc, &l| gcd(acc, l))
    }

    /// Sort key: order, then exponent vector over ascending divisors,
    /// lexicographically descending.
    fn sort_key(&self) -> (u64, Vec<i64>) {
        let vector: Vec<i64> = divisors(self.ord)
            .iter()
            .map(|&j| -self.exponent(j))
            .collect();
        (self.ord, vector)
    }
}

impl core::fmt::Display for Signature {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "ord={}:", self.ord)?;
        for (j, k) in &self.exponents {
            write!(f, " k{j}={k}")?;
        }
        Ok(())
    }
}

/// A signature with its series coefficient and the exact factors it came
/// from, so a failing regression pinpoints the divergent factor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefficientRecord {
    pub signature: Signature,
    pub coefficient: Rational,
    pub chi_orb: Rational,
    pub monodromy_count: Int,
    pub n_value: Int,
    pub denominator: Int,
}

impl CoefficientRecord {
    /// The defining identity: coefficient = chi_orb * monodromy * N / denominator.
    pub fn is_consistent(&self) -> bool {
        let product = &self.chi_orb
            * Rational::from_integer(&self.monodromy_count * &self.n_value)
            / Rational::from_integer(self.denominator.clone());
        product == self.coefficient
    }
}

/// All signatures of cyclic automorphisms in the given genus, deterministic
/// order (by order, then exponent vector descending). Filters: exponents
/// supported on divisors, non-negative below the order, correct weighted
/// sum, integral non-negative quotient genus, stable (h,s), and nonzero
/// residue-tuple and monodromy counts.
pub fn enumerate_signatures(genus: u64) -> Vec<Signature> {
    assert!(genus >= 2, "finite automorphism groups require genus >= 2");
    let chi: i64 = 2 - 2 * genus as i64;
    let mut out: Vec<Signature> = Vec::new();
    for ord in 1..=(4 * genus + 2) {
        let divs = divisors(ord);
        let proper: Vec<u64> = divs.iter().copied().filter(|&j| j < ord).collect();
        let max_proper = proper.last().copied().unwrap_or(0);
        let mut with_this_ord: Vec<Signature> = Vec::new();
        let mut k_ord: i64 = -1;
        loop {
            let branch_weight = chi - ord as i64 * k_ord; // sum over j<ord of j*k_j
            if branch_weight > (2 - k_ord) * max_proper as i64 {
                break; // no room: each branch point uses weight <= max proper divisor
            }
            if branch_weight >= 0 {
                let mut assignment: BTreeMap<u64, i64> = BTreeMap::new();
                assignment.insert(ord, k_ord);
                distribute_branch_weight(
                    genus,
                    ord,
                    &proper,
                    branch_weight as u64,
                    &mut assignment,
                    &mut with_this_ord,
                );
            }
            k_ord -= 1;
        }
        with_this_ord.sort_by_key(Signature::sort_key);
        out.extend(with_this_ord);
    }
    out
}

/// Recursively split `remaining` branch weight over the proper divisors as
/// j * k_j, then apply the quotient-genus, stability, and count filters.
fn distribute_branch_weight(
    genus: u64,
    ord: u64,
    proper: &[u64],
    remaining: u64,
    assignment: &mut BTreeMap<u64, i64>,
    out: &mut Vec<Signature>,
) {
    if proper.is_empty() {
        if remaining == 0 {
            if let Some(sig) = accept_signature(genus, ord, assignment.clone()) {
                out.push(sig);
            }
        }
        return;
    }
    let j = proper[0];
    let rest = &proper[1..];
    let mut used = 0u64;
    let mut k = 0i64;
    while used <= remaining {
        if k > 0 {
            assignment.insert(j, k);
        }
        distribute_branch_weight(genus, ord, rest, remaining - used, assignment, out);
        assignment.remove(&j);
        k += 1;
        used += j;
    }
}

fn accept_signature(genus: u64, ord: u64, exponents: BTreeMap<u64, i64>) -> Option<Signature> {
    let total: i64 = exponents.values().sum();
    if (2 - total) % 2 != 0 || total > 2 {
        return None; // quotient genus not a non-negative integer
    }
    let sig = Signature::new(genus, ord, exponents);
    if orb_chi_moduli(sig.quotient_genus(), sig.branch_points()).is_err() {
        return None;
    }
    let constraint = ResidueConstraint::new(ord, sig.gcd_classes().to_vec())
        .expect("classes are divisors of ord by construction");
    if count_residue_tuples(&constraint).is_zero() {
        return None;
    }
    if count_connected_monodromies(ord, sig.quotient_genus(), sig.class_gcd()).is_zero() {
        return None;
    }
    Some(sig)
}

/// The coefficient of a signature with its exact factor breakdown.
pub fn signature_coefficient(sig: &Signature) -> CoefficientRecord {
    let chi_orb = orb_chi_moduli(sig.quotient_genus(), sig.branch_points())
        .expect("enumerated signatures are stable");
    let monodromy_count =
        count_connected_monodromies(sig.ord(), sig.quotient_genus(), sig.class_gcd());
    let constraint = ResidueConstraint::new(sig.ord(), sig.gcd_classes().to_vec())
        .expect("classes are divisors of ord");
    let n_value = count_residue_tuples(&constraint);
    let mut denominator = BigInt::from(sig.ord());
    for (&j, &k) in sig.exponents() {
        if j < sig.ord() {
            denominator *= factorial(k as u64);
        }
    }
    let coefficient = &chi_orb * Rational::from_integer(&monodromy_count * &n_value)
        / Rational::from_integer(denominator.clone());
    let record = CoefficientRecord {
        signature: sig.clone(),
        coefficient,
        chi_orb,
        monodromy_count,
        n_value,
        denominator,
    };
    assert!(record.is_consistent());
    record
}

/// All coefficient records for a genus, in enumeration order.
pub fn coefficient_table(genus: u64) -> Vec<CoefficientRecord> {
    enumerate_signatures(genus)
        .iter()
        .map(signature_coefficient)
        .collect()
}

/// The generating series sum_{n<=N} t^n chi^{S_n}(M_{g,n}): the weighted sum
/// over signatures of prod_j (1 + p_j t^j)^(k_j), assembled through the
/// strata combiner.
pub fn mgn_series(genus: u64, order: usize) -> TruncatedSeries {
    let strata: Vec<Stratum> = coefficient_table(genus)
        .into_iter()
        .map(|record| Stratum {
            weight: record.coefficient,
            exponents: record.signature.exponents().clone(),
        })
        .collect();
    let series = strata_combine(&strata, order);
    debug_assert_eq!(series.homogeneity_violation(), None);
    series
}

/// The ten genus-2 records frozen as a regression fixture, in enumeration
/// order. The live pipeline must reproduce this table exactly.
pub fn genus2_reference_table() -> Vec<CoefficientRecord> {
    fn record(
        ord: u64,
        exponents: &[(u64, i64)],
        coefficient: Rational,
        chi_orb: Rational,
        monodromy_count: i64,
        n_value: i64,
        denominator: i64,
    ) -> CoefficientRecord {
        CoefficientRecord {
            signature: Signature::new(2, ord, exponents.iter().copied().collect()),
            coefficient,
            chi_orb,
            monodromy_count: Int::from(monodromy_count),
            n_value: Int::from(n_value),
            denominator: Int::from(denominator),
        }
    }
    let r = |n: i64, d: i64| Rational::new(BigInt::from(n), BigInt::from(d));
    alloc::vec![
        record(1, &[(1, -2)], r(-1, 240), r(-1, 240), 1, 1, 1),
        record(2, &[(1, 6), (2, -4)], r(-1, 240), rat_int(-6), 1, 1, 1440),
        record(2, &[(1, 2), (2, -2)], r(1, 12), r(1, 12), 4, 1, 4),
        record(3, &[(1, 4), (3, -2)], r(-1, 12), rat_int(-1), 1, 6, 72),
        record(4, &[(1, 2), (2, 2), (4, -2)], r(-1, 8), rat_int(-1), 1, 2, 16),
        record(5, &[(1, 3), (5, -1)], r(2, 5), rat_int(1), 1, 12, 30),
        record(6, &[(1, 2), (2, 1), (6, -1)], r(1, 6), rat_int(1), 1, 2, 12),
        record(6, &[(2, 2), (3, 2), (6, -2)], r(-1, 12), rat_int(-1), 1, 2, 24),
        record(8, &[(1, 2), (4, 1), (8, -1)], r(1, 4), rat_int(1), 1, 4, 16),
        record(10, &[(1, 1), (2, 1), (5, 1), (10, -1)], r(2, 5), rat_int(1), 1, 4, 10),
    ]
}

/// The two closed-form strata present in every genus: the identity stratum
/// chi_orb(M_{g,0}) (1+p_1 t)^(2-2g) and the hyperelliptic stratum
/// -1/(4g(2g+1)(2g+2)) (1+p_1 t)^(2g+2) (1+p_2 t^2)^(-2g). Both are asserted
/// to appear verbatim in the enumerated coefficient table.
pub fn general_g_closed_forms(genus: u64) -> (CoefficientRecord, CoefficientRecord) {
    assert!(genus >= 2);
    let g = genus as i64;

    let identity_sig = Signature::new(genus, 1, [(1u64, 2 - 2 * g)].into_iter().collect());
    let identity = CoefficientRecord {
        signature: identity_sig,
        coefficient: orb_chi_moduli(genus, 0).expect("h >= 2 is stable"),
        chi_orb: orb_chi_moduli(genus, 0).expect("h >= 2 is stable"),
        monodromy_count: BigInt::one(),
        n_value: BigInt::one(),
        denominator: BigInt::one(),
    };

    let hyper_sig = Signature::new(
        genus,
        2,
        [(1u64, 2 * g + 2), (2u64, -2 * g)].into_iter().collect(),
    );
    let coefficient = Rational::new(
        BigInt::from(-1),
        BigInt::from(4 * g) * BigInt::from(2 * g + 1) * BigInt::from(2 * g + 2),
    );
    let hyperelliptic = CoefficientRecord {
        signature: hyper_sig,
        coefficient,
        chi_orb: orb_chi_moduli(0, 2 * genus + 2).expect("s >= 3"),
        monodromy_count: BigInt::one(),
        n_value: BigInt::one(),
        denominator: factorial(2 * genus + 2) * BigInt::from(2),
    };

    let table = coefficient_table(genus);
    for closed in [&identity, &hyperelliptic] {
        assert!(
            table.contains(closed),
            "closed form {} missing from the enumerated table",
            closed.signature
        );
    }
    (identity, hyperelliptic)
}
