//! The self-test: oracle-equivalence sweeps and the frozen regression table,
//! runnable with one of three deliberately wrong formula variants substituted
//! to demonstrate that the oracles catch them.
//!
//! Each rejected variant is a formula this project evaluated and ruled out
//! against its brute-force oracles during development; keeping them callable
//! here turns the oracle coverage itself into a testable claim.

use std::fmt::Write as _;

use equichar::arith::{
    divisors, euler_phi, factorial, factorize, is_integer, mobius, rat, rat_int, Int, Rational,
};
use equichar::confspace::{equivariant_config_series, finite_model_oracle, FiniteModel};
use equichar::cyclic::{
    c_sum, c_sum_bruteforce, count_connected_monodromies_bruteforce, count_residue_tuples,
    count_residue_tuples_bruteforce, ResidueConstraint,
};
use equichar::moduli::{coefficient_table, genus2_reference_table, mgn_series, orb_chi_moduli};
use equichar::symfunc::poly::{PMonomial, PPolynomial};
use equichar::symfunc::p_to_schur;
use num_bigint::BigInt;

/// Which validated formula to replace with its rejected variant.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Flip {
    /// Monodromy count with prod (1 - p^(+2h)) instead of (1 - p^(-2h)).
    MonodromyExponent,
    /// Quotient genus h = (1 - sum k_j)/2 instead of (2 - sum k_j)/2.
    QuotientGenus,
    /// chi_orb(M_{h,s}) = (-1)^s (2h-1) B_{2h} / (2h-3)! instead of the
    /// Harer-Zagier value.
    ChiOrbFormula,
}

#[derive(Debug)]
pub struct CheckResult {
    pub name: &'static str,
    pub outcome: Result<(), String>,
}

#[derive(Debug)]
pub struct SelfTestReport {
    pub checks: Vec<CheckResult>,
}

impl SelfTestReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.outcome.is_ok())
    }

    /// One line per check: `ok <name>` or `FAIL <name>: <detail>`.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for check in &self.checks {
            match &check.outcome {
                Ok(()) => writeln!(out, "ok   {}", check.name).unwrap(),
                Err(detail) => writeln!(out, "FAIL {}: {}", check.name, detail).unwrap(),
            }
        }
        let failed = self.checks.iter().filter(|c| c.outcome.is_err()).count();
        if failed == 0 {
            writeln!(out, "self-test passed ({} checks)", self.checks.len()).unwrap();
        } else {
            writeln!(
                out,
                "self-test FAILED ({failed} of {} checks)",
                self.checks.len()
            )
            .unwrap();
        }
        out
    }
}

pub fn run_selftest(flip: Option<Flip>) -> SelfTestReport {
    let checks = vec![
        CheckResult {
            name: "number-theory identities",
            outcome: check_number_theory(),
        },
        CheckResult {
            name: "character-sum oracle",
            outcome: check_character_sums(),
        },
        CheckResult {
            name: "residue-tuple oracle",
            outcome: check_residue_tuples(),
        },
        CheckResult {
            name: "monodromy-count oracle",
            outcome: check_monodromy_counts(flip == Some(Flip::MonodromyExponent)),
        },
        CheckResult {
            name: "quotient-genus integrality",
            outcome: check_quotient_genus(flip == Some(Flip::QuotientGenus)),
        },
        CheckResult {
            name: "orbifold Euler characteristics",
            outcome: check_chi_orb(flip == Some(Flip::ChiOrbFormula)),
        },
        CheckResult {
            name: "genus-2 coefficient regression",
            outcome: check_genus2_regression(),
        },
        CheckResult {
            name: "configuration-series oracle",
            outcome: check_config_series(),
        },
        CheckResult {
            name: "genus-2 series spot values",
            outcome: check_series_spot_values(),
        },
    ];
    SelfTestReport { checks }
}

fn check_number_theory() -> Result<(), String> {
    for n in 1..=2000u64 {
        let mu_sum: i64 = divisors(n).iter().map(|&d| mobius(d)).sum();
        if mu_sum != i64::from(n == 1) {
            return Err(format!("sum of mu over divisors of {n} is {mu_sum}"));
        }
        let phi_sum: u64 = divisors(n).iter().map(|&d| euler_phi(d)).sum();
        if phi_sum != n {
            return Err(format!("sum of phi over divisors of {n} is {phi_sum}"));
        }
    }
    Ok(())
}

fn check_character_sums() -> Result<(), String> {
    for k in 1..=24u64 {
        for l in divisors(k) {
            for d in divisors(k) {
                let closed = c_sum(k, l, d);
                let brute = c_sum_bruteforce(k, l, d);
                if closed != brute {
                    return Err(format!(
                        "c({k},{l},{d}): closed form {closed}, residue walk {brute}"
                    ));
                }
            }
        }
    }
    Ok(())
}

fn check_residue_tuples() -> Result<(), String> {
    let reference: [(u64, &[u64], i64); 8] = [
        (5, &[1, 1, 1], 12),
        (10, &[1, 2, 5], 4),
        (6, &[1, 1, 2], 2),
        (3, &[1, 1, 1, 1], 6),
        (6, &[2, 2, 3, 3], 2),
        (2, &[1, 1], 1),
        (8, &[1, 1, 4], 4),
        (4, &[1, 1, 2, 2], 2),
    ];
    for (k, classes, expected) in reference {
        let constraint = ResidueConstraint::new(k, classes.to_vec()).expect("valid classes");
        let closed = count_residue_tuples(&constraint);
        let brute = count_residue_tuples_bruteforce(&constraint).expect("within budget");
        if closed != Int::from(expected) || brute != Int::from(expected) {
            return Err(format!(
                "N({k}; {classes:?}): closed {closed}, enumerated {brute}, expected {expected}"
            ));
        }
    }
    for k in 1..=16u64 {
        for classes in divisor_multisets(k, 3) {
            let constraint = ResidueConstraint::new(k, classes.clone()).expect("valid classes");
            let closed = count_residue_tuples(&constraint);
            let brute = count_residue_tuples_bruteforce(&constraint).expect("within budget");
            if closed != brute {
                return Err(format!(
                    "N({k}; {classes:?}): closed {closed} != enumerated {brute}"
                ));
            }
        }
    }
    Ok(())
}

/// All multisets of divisors of k with size <= max_size.
pub fn divisor_multisets(k: u64, max_size: usize) -> Vec<Vec<u64>> {
    let divs = divisors(k);
    let mut out = vec![Vec::new()];
    let mut layer = vec![Vec::new()];
    for _ in 0..max_size {
        let mut next = Vec::new();
        for prefix in &layer {
            let start = prefix.last().copied().unwrap_or(1);
            for &d in divs.iter().filter(|&&d| d >= start) {
                let mut extended: Vec<u64> = prefix.clone();
                extended.push(d);
                next.push(extended);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// Connected-monodromy closed form, optionally with the rejected positive
/// exponent (1 - p^(+2h)) instead of (1 - p^(-2h)).
fn monodromy_closed_form(ord: u64, h: u64, l_gcd: u64, flipped: bool) -> Rational {
    let exp = 2 * h as u32;
    let mut value = Rational::from_integer(BigInt::from(ord).pow(exp));
    for (p, _) in factorize(l_gcd) {
        let power = Rational::from_integer(BigInt::from(p).pow(exp));
        let factor = if flipped {
            rat_int(1) - power
        } else {
            rat_int(1) - rat_int(1) / power
        };
        value *= factor;
    }
    value
}

fn check_monodromy_counts(flipped: bool) -> Result<(), String> {
    // spotlight case first: ord=4, h=1, l_gcd=2
    let spotlight = monodromy_closed_form(4, 1, 2, flipped);
    let enumerated = count_connected_monodromies_bruteforce(4, 1, 2).expect("within budget");
    if spotlight != Rational::from_integer(enumerated.clone()) {
        return Err(format!(
            "(ord=4, h=1, l_gcd=2): closed form {spotlight} != enumeration {enumerated}"
        ));
    }
    for ord in 1..=8u64 {
        for h in 0..=2u64 {
            for l in divisors(ord) {
                let closed = monodromy_closed_form(ord, h, l, flipped);
                let brute = count_connected_monodromies_bruteforce(ord, h, l)
                    .expect("within budget");
                if closed != Rational::from_integer(brute.clone()) {
                    return Err(format!(
                        "(ord={ord}, h={h}, l_gcd={l}): closed form {closed} != enumeration {brute}"
                    ));
                }
            }
        }
    }
    Ok(())
}

fn check_quotient_genus(flipped: bool) -> Result<(), String> {
    let table = genus2_reference_table();
    // spotlight the hyperelliptic vector (sum k_j = 2), the sharpest witness
    let hyperelliptic = table
        .iter()
        .find(|r| r.signature.ord() == 2 && r.signature.exponent(1) == 6)
        .expect("hyperelliptic record present");
    let mut ordered: Vec<_> = vec![hyperelliptic];
    ordered.extend(table.iter().filter(|r| *r != hyperelliptic));
    for record in ordered {
        let signature = &record.signature;
        let total: i64 = signature.exponents().values().sum();
        let base = if flipped { 1 } else { 2 };
        let numerator = base - total;
        if numerator % 2 != 0 || numerator < 0 {
            return Err(format!(
                "{signature}: quotient genus ({base} - sum k_j)/2 = {numerator}/2 \
                 is not a non-negative integer"
            ));
        }
        let h = (numerator / 2) as u64;
        if h != signature.quotient_genus() {
            return Err(format!(
                "{signature}: quotient genus {h} contradicts the validated value {}",
                signature.quotient_genus()
            ));
        }
    }
    Ok(())
}

/// chi_orb variant as printed in the rejected form: (-1)^s (2h-1) B_{2h} / (2h-3)!
/// (undefined for h < 2, where the factorial argument is negative).
fn chi_orb_variant(h: u64, s: u64) -> Result<Rational, String> {
    if 2 * h < 3 {
        return Err(format!(
            "(h,s)=({h},{s}): variant formula takes the factorial of the negative number {}",
            2 * h as i64 - 3
        ));
    }
    let sign = if s % 2 == 0 { rat_int(1) } else { rat_int(-1) };
    Ok(
        sign * rat_int(2 * h as i64 - 1) * equichar::arith::bernoulli(2 * h as u32)
            / Rational::from_integer(factorial(2 * h - 3)),
    )
}

fn check_chi_orb(flipped: bool) -> Result<(), String> {
    let reference = [
        (0u64, 3u64, rat_int(1)),
        (0, 4, rat_int(-1)),
        (0, 6, rat_int(-6)),
        (1, 2, rat(1, 12)),
        (2, 0, rat(-1, 240)),
    ];
    for (h, s, expected) in reference {
        let value = if flipped {
            chi_orb_variant(h, s)?
        } else {
            orb_chi_moduli(h, s).map_err(|e| e.to_string())?
        };
        if value != expected {
            return Err(format!("(h,s)=({h},{s}): value {value} != expected {expected}"));
        }
    }
    // puncture recursion on the stable range
    for h in 0..=3u64 {
        let first = match h {
            0 => 3,
            1 => 1,
            _ => 0,
        };
        for s in first..=8u64 {
            let lhs = orb_chi_moduli(h, s + 1).map_err(|e| e.to_string())?;
            let rhs = rat_int(2 - 2 * h as i64 - s as i64)
                * orb_chi_moduli(h, s).map_err(|e| e.to_string())?;
            if lhs != rhs {
                return Err(format!("puncture recursion broken at (h,s)=({h},{s})"));
            }
        }
    }
    Ok(())
}

fn check_genus2_regression() -> Result<(), String> {
    let live = coefficient_table(2);
    let frozen = genus2_reference_table();
    if live.len() != frozen.len() {
        return Err(format!(
            "enumeration found {} signatures, reference has {}",
            live.len(),
            frozen.len()
        ));
    }
    for (live, frozen) in live.iter().zip(&frozen) {
        if live != frozen {
            return Err(format!(
                "{}: live (coefficient {}, chi_orb {}, monodromy {}, N {}, denominator {}) \
                 vs frozen (coefficient {}, chi_orb {}, monodromy {}, N {}, denominator {})",
                frozen.signature,
                live.coefficient,
                live.chi_orb,
                live.monodromy_count,
                live.n_value,
                live.denominator,
                frozen.coefficient,
                frozen.chi_orb,
                frozen.monodromy_count,
                frozen.n_value,
                frozen.denominator,
            ));
        }
    }
    Ok(())
}

fn check_config_series() -> Result<(), String> {
    let models = [
        FiniteModel::trivial(3),
        FiniteModel::new(2, vec![vec![0, 1], vec![1, 0]]).expect("swap model"),
        FiniteModel::from_generators(3, &[vec![1, 2, 0], vec![1, 0, 2]]).expect("S3 model"),
    ];
    for model in &models {
        let series = equivariant_config_series(&model.action_data(), 3)
            .map_err(|e| e.to_string())?;
        for n in 0..=3usize {
            let oracle = finite_model_oracle(model, n).map_err(|e| e.to_string())?;
            if series.coeff(n) != &oracle {
                return Err(format!(
                    "|X|={}, |G|={}, n={n}: series {} != orbit enumeration {}",
                    model.size(),
                    model.group_order(),
                    series.coeff(n),
                    oracle
                ));
            }
        }
    }
    Ok(())
}

fn check_series_spot_values() -> Result<(), String> {
    let series = mgn_series(2, 6);
    if series.coeff(0) != &PPolynomial::one() {
        return Err(format!("t^0 coefficient is {}, expected 1", series.coeff(0)));
    }
    let expected_t1 = PPolynomial::from_term(PMonomial::var_pow(1, 1), rat_int(2));
    if series.coeff(1) != &expected_t1 {
        return Err(format!("t^1 coefficient is {}, expected 2*p1", series.coeff(1)));
    }
    if let Some(n) = series.homogeneity_violation() {
        return Err(format!("t^{n} coefficient is not homogeneous of degree {n}"));
    }
    for n in 0..=6u64 {
        for (lambda, mult) in p_to_schur(series.coeff(n as usize), n) {
            if !is_integer(&mult) {
                return Err(format!(
                    "non-integer Schur multiplicity {mult} at s_{lambda}, t^{n}"
                ));
            }
        }
    }
    Ok(())
}
