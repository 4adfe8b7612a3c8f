//! Equivariant configuration-space series from abstract group-action data.
//!
//! For a variety X with a finite group action, the series
//! sum_n t^n chi^{S_n}(F(X,n)/G) equals
//! (1/|G|) sum_g prod_k (1 + p_k t^k)^(chi(X_k(g))/k), where X_k(g) is the
//! locus of points with g-orbit of length k. [`equivariant_config_series`]
//! evaluates the right-hand side from the fixed-point data alone;
//! [`finite_model_oracle`] recomputes the left-hand side for a concrete
//! finite G-set by direct orbit enumeration, with no shared code path.
//! [`strata_combine`] is the fibered version: a weighted sum of exponent
//! vectors, pre-integrated over the base.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::One;

use crate::arith::{factorial, Rational};
use crate::error::Error;
use crate::symfunc::partition::Partition;
use crate::symfunc::poly::{binomial_power, series_mul, PMonomial, PPolynomial, TruncatedSeries};

/// Budget for the oracle's raw tuple enumeration (|X|^n).
pub const ORACLE_BUDGET: u128 = 1_000_000;

/// Fixed-point data for one group element: orbit length k -> chi(X_k(g)).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementData {
    pub label: String,
    pub chi_by_orbit_length: BTreeMap<u64, i64>,
}

/// Abstract input to the configuration-series engine: the group order and,
/// per element, the Euler characteristics of its orbit-length loci.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupActionData {
    group_order: u64,
    elements: Vec<ElementData>,
}

impl GroupActionData {
    /// Validates that the element list covers the whole group and that every
    /// element sees the same total chi(X) = sum_k chi(X_k(g)).
    pub fn new(group_order: u64, elements: Vec<ElementData>) -> Result<Self, Error> {
        if group_order == 0 {
            return Err(Error::InvalidGroupData("group order must be positive".into()));
        }
        if group_order != elements.len() as u64 {
            return Err(Error::InvalidGroupData(format!(
                "group order {} does not match {} listed elements",
                group_order,
                elements.len()
            )));
        }
        for e in &elements {
            if e.chi_by_orbit_length.keys().any(|&k| k == 0) {
                return Err(Error::InvalidGroupData(format!(
                    "element '{}' has an orbit length 0 entry",
                    e.label
                )));
            }
        }
        let totals: BTreeSet<i64> = elements
            .iter()
            .map(|e| e.chi_by_orbit_length.values().sum())
            .collect();
        if totals.len() > 1 {
            return Err(Error::InvalidGroupData(format!(
                "elements disagree on chi(X): {totals:?}"
            )));
        }
        Ok(GroupActionData {
            group_order,
            elements,
        })
    }

    pub fn group_order(&self) -> u64 {
        self.group_order
    }

    pub fn elements(&self) -> &[ElementData] {
        &self.elements
    }
}

/// One stratum of a fibered family: an orbifold weight and the exponent
/// vector j -> k_j of its factor prod_j (1 + p_j t^j)^(k_j).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stratum {
    pub weight: Rational,
    pub exponents: BTreeMap<u64, i64>,
}

/// The series (1/|G|) sum_g prod_k (1 + p_k t^k)^(chi(X_k(g))/k), truncated
/// at `order`. Errors if some chi(X_k(g)) is not divisible by k, which
/// signals inconsistent fixed-point data (orbits of length k contribute in
/// multiples of k).
pub fn equivariant_config_series(
    data: &GroupActionData,
    order: usize,
) -> Result<TruncatedSeries, Error> {
    let mut total = TruncatedSeries::zero(order);
    for element in data.elements() {
        let mut product = TruncatedSeries::one(order);
        for (&k, &chi) in &element.chi_by_orbit_length {
            if chi == 0 {
                continue;
            }
            if chi.rem_euclid(k as i64) != 0 {
                return Err(Error::OrbitChiNotDivisible {
                    label: element.label.clone(),
                    orbit_len: k,
                    chi,
                });
            }
            product = series_mul(&product, &binomial_power(k, chi / k as i64, order));
        }
        total.add_assign(&product);
    }
    let inv_order = Rational::new(BigInt::one(), BigInt::from(data.group_order()));
    Ok(total.scale(&inv_order))
}

/// Weighted sum over strata of prod_j (1 + p_j t^j)^(k_j). The moduli series
/// is assembled through this entry point as well.
pub fn strata_combine(strata: &[Stratum], order: usize) -> TruncatedSeries {
    let mut total = TruncatedSeries::zero(order);
    for stratum in strata {
        let mut product = TruncatedSeries::one(order);
        for (&j, &k) in &stratum.exponents {
            if k == 0 {
                continue;
            }
            product = series_mul(&product, &binomial_power(j, k, order));
        }
        total.add_assign(&product.scale(&stratum.weight));
    }
    total
}

/// A concrete finite G-set: `size` points and the full list of group
/// elements as permutations of 0..size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteModel {
    size: usize,
    perms: Vec<Vec<usize>>,
}

impl FiniteModel {
    /// Validates that every permutation is a bijection on 0..size, that the
    /// identity is present, that there are no duplicates, and that the set
    /// is closed under composition.
    pub fn new(size: usize, perms: Vec<Vec<usize>>) -> Result<Self, Error> {
        for p in &perms {
            if p.len() != size || !is_permutation(p) {
                return Err(Error::InvalidGroupData(format!(
                    "{p:?} is not a permutation of 0..{size}"
                )));
            }
        }
        let set: BTreeSet<&Vec<usize>> = perms.iter().collect();
        if set.len() != perms.len() {
            return Err(Error::InvalidGroupData("duplicate group elements".into()));
        }
        let identity: Vec<usize> = (0..size).collect();
        if !set.contains(&identity) {
            return Err(Error::InvalidGroupData("identity permutation missing".into()));
        }
        for a in &perms {
            for b in &perms {
                let ab = compose(a, b);
                if !set.contains(&ab) {
                    return Err(Error::InvalidGroupData(format!(
                        "not closed under composition: {a:?} * {b:?}"
                    )));
                }
            }
        }
        Ok(FiniteModel { size, perms })
    }

    /// Close a generating set under composition (the identity is implied).
    pub fn from_generators(size: usize, generators: &[Vec<usize>]) -> Result<Self, Error> {
        for p in generators {
            if p.len() != size || !is_permutation(p) {
                return Err(Error::InvalidGroupData(format!(
                    "{p:?} is not a permutation of 0..{size}"
                )));
            }
        }
        let mut set: BTreeSet<Vec<usize>> = BTreeSet::new();
        set.insert((0..size).collect());
        let mut frontier: Vec<Vec<usize>> = set.iter().cloned().collect();
        while let Some(p) = frontier.pop() {
            for g in generators {
                let pg = compose(&p, g);
                if set.insert(pg.clone()) {
                    frontier.push(pg);
                }
            }
        }
        FiniteModel::new(size, set.into_iter().collect())
    }

    /// The trivial group acting on `size` points.
    pub fn trivial(size: usize) -> Self {
        FiniteModel {
            size,
            perms: vec![(0..size).collect()],
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn group_order(&self) -> u64 {
        self.perms.len() as u64
    }

    pub fn perms(&self) -> &[Vec<usize>] {
        &self.perms
    }

    /// Exact fixed-point data of the model: for each element, chi(X_k(g)) is
    /// the number of points lying in g-orbits of length k.
    pub fn action_data(&self) -> GroupActionData {
        let elements = self
            .perms
            .iter()
            .enumerate()
            .map(|(i, p)| {
                let mut chi: BTreeMap<u64, i64> = BTreeMap::new();
                let mut seen = vec![false; self.size];
                for start in 0..self.size {
                    if seen[start] {
                        continue;
                    }
                    let mut len = 0u64;
                    let mut x = start;
                    loop {
                        seen[x] = true;
                        len += 1;
                        x = p[x];
                        if x == start {
                            break;
                        }
                    }
                    *chi.entry(len).or_insert(0) += len as i64;
                }
                ElementData {
                    label: format!("g{i}"),
                    chi_by_orbit_length: chi,
                }
            })
            .collect();
        GroupActionData::new(self.group_order(), elements)
            .expect("model fixed-point data is consistent by construction")
    }
}

fn is_permutation(p: &[usize]) -> bool {
    let mut seen = vec![false; p.len()];
    for &x in p {
        if x >= p.len() || seen[x] {
            return false;
        }
        seen[x] = true;
    }
    true
}

/// (a . b)(x) = a(b(x)).
fn compose(a: &[usize], b: &[usize]) -> Vec<usize> {
    b.iter().map(|&x| a[x]).collect()
}

/// Degree-n coefficient of the configuration series for a concrete model,
/// computed the hard way: enumerate the injective n-tuples, form the
/// G-orbit set, and return (1/n!) sum_sigma p_(cycle type sigma) times the
/// number of orbits fixed by sigma. Logically independent of
/// [`equivariant_config_series`].
pub fn finite_model_oracle(model: &FiniteModel, n: usize) -> Result<PPolynomial, Error> {
    let mut size: u128 = 1;
    for _ in 0..n {
        size = size.saturating_mul(model.size() as u128);
        if size > ORACLE_BUDGET {
            return Err(Error::BudgetExceeded {
                size,
                limit: ORACLE_BUDGET,
            });
        }
    }

    // all injective n-tuples
    let mut tuples: Vec<Vec<usize>> = Vec::new();
    let mut current = Vec::with_capacity(n);
    enumerate_injective(model.size(), n, &mut current, &mut tuples);

    // canonical representative of a G-orbit: the least translate
    let canonical = |t: &[usize]| -> Vec<usize> {
        model
            .perms()
            .iter()
            .map(|g| t.iter().map(|&x| g[x]).collect::<Vec<usize>>())
            .min()
            .expect("group is nonempty")
    };
    let orbits: BTreeSet<Vec<usize>> = tuples.iter().map(|t| canonical(t)).collect();

    let mut total = PPolynomial::zero();
    for sigma in permutations(n) {
        let fixed = orbits
            .iter()
            .filter(|rep| {
                let permuted: Vec<usize> = sigma.iter().map(|&i| rep[i]).collect();
                &canonical(&permuted) == *rep
            })
            .count();
        if fixed == 0 {
            continue;
        }
        let cycle_type = cycle_type_of(&sigma);
        total.add_term(
            PMonomial::from_partition(&cycle_type),
            Rational::from_integer(BigInt::from(fixed)),
        );
    }
    let inv_nfact = Rational::new(BigInt::one(), factorial(n as u64));
    Ok(total.scale(&inv_nfact))
}

fn enumerate_injective(size: usize, n: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if current.len() == n {
        out.push(current.clone());
        return;
    }
    for x in 0..size {
        if !current.contains(&x) {
            current.push(x);
            enumerate_injective(size, n, current, out);
            current.pop();
        }
    }
}

/// All permutations of 0..n in lexicographic order.
fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn rec(n: usize, current: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if current.len() == n {
            out.push(current.clone());
            return;
        }
        for i in 0..n {
            if !used[i] {
                used[i] = true;
                current.push(i);
                rec(n, current, used, out);
                current.pop();
                used[i] = false;
            }
        }
    }
    rec(n, &mut current, &mut used, &mut out);
    out
}

fn cycle_type_of(sigma: &[usize]) -> Partition {
    let mut seen = vec![false; sigma.len()];
    let mut parts = Vec::new();
    for start in 0..sigma.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0u64;
        let mut x = start;
        loop {
            seen[x] = true;
            len += 1;
            x = sigma[x];
            if x == start {
                break;
            }
        }
        parts.push(len);
    }
    Partition::new(parts)
}

/// The falling factorial chi(chi-1)...(chi-n+1), asserted against
/// n! [t^n](1+t)^chi with the p-variables specialized to 1. This is the
/// configuration-count identity sum_n t^n/n! chi(F(X,n)) = (1+t)^chi(X).
pub fn falling_factorial_check(chi: i64, n: usize) -> Rational {
    let mut ff = BigInt::one();
    for i in 0..n as i64 {
        ff *= BigInt::from(chi - i);
    }
    let direct = Rational::from_integer(ff);
    let series = binomial_power(1, chi, n);
    let via_series = series.coeff(n).evaluate_ones() * Rational::from_integer(factorial(n as u64));
    assert_eq!(
        direct, via_series,
        "falling factorial disagrees with the binomial series at chi={chi}, n={n}"
    );
    direct
}
