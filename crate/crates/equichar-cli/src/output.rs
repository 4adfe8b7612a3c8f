//! Output documents and their JSON / CSV / LaTeX renderings.
//!
//! Every exact rational is serialized as its canonical string ("-1/240", or
//! "3" when the denominator is 1), so all formats round-trip through the
//! JSON form without loss. Term and row orders are the canonical orders of
//! the underlying library types; output is byte-identical across runs.

use std::collections::BTreeMap;

use equichar::arith::{is_integer, Rational};
use equichar::moduli::CoefficientRecord;
use equichar::symfunc::partition::{partitions_of, Partition};
use equichar::symfunc::poly::{PMonomial, PPolynomial, TruncatedSeries};
use equichar::symfunc::{p_to_schur, specialize_plain_euler, specialize_quotient_euler};
use num_bigint::BigInt;
use serde_json::{json, Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Latex,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Basis {
    P,
    Schur,
}

/// A command result: metadata plus one of the payload shapes.
#[derive(Debug)]
pub struct OutputDocument {
    pub command: &'static str,
    pub arguments: Value,
    pub payload: Payload,
}

#[derive(Debug)]
pub enum Payload {
    Series(SeriesPayload),
    Coefficients(CoefficientsPayload),
    NFun(NFunPayload),
    Scalar(ScalarPayload),
}

impl OutputDocument {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let doc = json!({
                    "command": self.command,
                    "arguments": self.arguments,
                    "version": env!("CARGO_PKG_VERSION"),
                    "payload": self.payload.to_json(),
                });
                let mut text = serde_json::to_string_pretty(&doc).expect("serializable document");
                text.push('\n');
                text
            }
            Format::Csv => self.payload.to_csv(),
            Format::Latex => self.payload.to_latex(),
        }
    }
}

impl Payload {
    fn to_json(&self) -> Value {
        match self {
            Payload::Series(p) => p.to_json(),
            Payload::Coefficients(p) => p.to_json(),
            Payload::NFun(p) => p.to_json(),
            Payload::Scalar(p) => p.to_json(),
        }
    }

    fn to_csv(&self) -> String {
        match self {
            Payload::Series(p) => p.to_csv(),
            Payload::Coefficients(p) => p.to_csv(),
            Payload::NFun(p) => p.to_csv(),
            Payload::Scalar(p) => p.to_csv(),
        }
    }

    fn to_latex(&self) -> String {
        match self {
            Payload::Series(p) => p.to_latex(),
            Payload::Coefficients(p) => p.to_latex(),
            Payload::NFun(p) => p.to_latex(),
            Payload::Scalar(p) => p.to_latex(),
        }
    }
}

/// Canonical string for an exact rational.
pub fn rational_string(r: &Rational) -> String {
    r.to_string()
}

fn int_string(n: &BigInt) -> String {
    n.to_string()
}

fn csv_escape(field: &str) -> String {
    if field.contains(',') || field.contains('"') || field.contains('\n') {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}

fn csv_row(fields: &[String]) -> String {
    fields
        .iter()
        .map(|f| csv_escape(f))
        .collect::<Vec<_>>()
        .join(",")
}

/// Monomial as a JSON object {"variable": exponent} with string keys, the
/// same shape the strata/exponent inputs use.
fn monomial_json(m: &PMonomial) -> Value {
    let mut map = Map::new();
    for &(j, e) in m.exponents() {
        map.insert(j.to_string(), json!(e));
    }
    Value::Object(map)
}

fn exponents_json(exponents: &BTreeMap<u64, i64>) -> Value {
    let mut map = Map::new();
    for (j, k) in exponents {
        map.insert(j.to_string(), json!(k));
    }
    Value::Object(map)
}

fn partition_json(p: &Partition) -> Value {
    Value::Array(p.parts().iter().map(|&x| json!(x)).collect())
}

/// Partition as "3+1+1"; the empty partition is "0".
fn partition_compact(p: &Partition) -> String {
    if p.is_empty() {
        "0".to_string()
    } else {
        p.parts()
            .iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join("+")
    }
}

fn rational_latex(r: &Rational) -> String {
    if is_integer(r) {
        format!("{}", r.numer())
    } else if r.numer().sign() == num_bigint::Sign::Minus {
        format!("-\\frac{{{}}}{{{}}}", -r.numer(), r.denom())
    } else {
        format!("\\frac{{{}}}{{{}}}", r.numer(), r.denom())
    }
}

fn monomial_latex(m: &PMonomial) -> String {
    if m.is_one() {
        return "1".to_string();
    }
    m.exponents()
        .iter()
        .map(|&(j, e)| {
            if e == 1 {
                format!("p_{{{j}}}")
            } else {
                format!("p_{{{j}}}^{{{e}}}")
            }
        })
        .collect::<Vec<_>>()
        .join("")
}

fn polynomial_latex(p: &PPolynomial) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (m, c)) in p.iter().enumerate() {
        let coeff = rational_latex(c);
        let body = if m.is_one() {
            coeff
        } else if coeff == "1" {
            monomial_latex(m)
        } else if coeff == "-1" {
            format!("-{}", monomial_latex(m))
        } else {
            format!("{}\\,{}", coeff, monomial_latex(m))
        };
        if i > 0 && !body.starts_with('-') {
            out.push_str(" + ");
        } else if i > 0 {
            out.push(' ');
        }
        out.push_str(&body);
    }
    out
}

/// The product prod_j (1+p_j t^j)^(k_j) in display form.
fn factor_product_latex(exponents: &BTreeMap<u64, i64>) -> String {
    exponents
        .iter()
        .filter(|&(_, &k)| k != 0)
        .map(|(&j, &k)| {
            let base = if j == 1 {
                "(1+p_{1}t)".to_string()
            } else {
                format!("(1+p_{{{j}}}t^{{{j}}})")
            };
            if k == 1 {
                base
            } else {
                format!("{base}^{{{k}}}")
            }
        })
        .collect::<Vec<_>>()
        .join("")
}

// ---------------------------------------------------------------------------
// series payload

#[derive(Debug)]
pub struct SeriesPayload {
    pub basis: Basis,
    pub coefficients: Vec<SeriesCoefficient>,
}

#[derive(Debug)]
pub struct SeriesCoefficient {
    pub n: usize,
    pub poly: PPolynomial,
    /// Present in the Schur basis: multiplicities over all partitions of n,
    /// plus the two numeric specializations.
    pub schur: Option<SchurTable>,
}

#[derive(Debug)]
pub struct SchurTable {
    pub rows: Vec<(Partition, i64)>,
    pub plain_euler: Rational,
    pub quotient_euler: Rational,
}

impl SeriesPayload {
    /// Read the payload off a computed series; in the Schur basis every
    /// multiplicity must be integral, which fails otherwise.
    pub fn from_series(series: &TruncatedSeries, basis: Basis) -> Result<SeriesPayload, String> {
        let coefficients = (0..=series.order())
            .map(|n| {
                let poly = series.coeff(n).clone();
                let schur = match basis {
                    Basis::P => None,
                    Basis::Schur => Some(schur_table(&poly, n as u64)?),
                };
                Ok(SeriesCoefficient { n, poly, schur })
            })
            .collect::<Result<Vec<_>, String>>()?;
        Ok(SeriesPayload {
            basis,
            coefficients,
        })
    }

    fn to_json(&self) -> Value {
        let coefficients: Vec<Value> = self
            .coefficients
            .iter()
            .map(|c| match (&c.schur, self.basis) {
                (None, _) => json!({
                    "n": c.n,
                    "terms": poly_terms_json(&c.poly),
                }),
                (Some(table), _) => json!({
                    "n": c.n,
                    "multiplicities": table
                        .rows
                        .iter()
                        .map(|(p, m)| json!({"partition": partition_json(p), "multiplicity": m}))
                        .collect::<Vec<_>>(),
                    "plain_euler": rational_string(&table.plain_euler),
                    "quotient_euler": rational_string(&table.quotient_euler),
                }),
            })
            .collect();
        json!({
            "basis": match self.basis { Basis::P => "p", Basis::Schur => "schur" },
            "truncation_order": self.coefficients.len() - 1,
            "coefficients": coefficients,
        })
    }

    fn to_csv(&self) -> String {
        let mut lines = Vec::new();
        match self.basis {
            Basis::P => {
                lines.push("n,monomial,coefficient".to_string());
                for c in &self.coefficients {
                    for (m, coeff) in c.poly.iter() {
                        lines.push(csv_row(&[
                            c.n.to_string(),
                            m.to_string(),
                            rational_string(coeff),
                        ]));
                    }
                }
            }
            Basis::Schur => {
                lines.push("n,partition,multiplicity".to_string());
                for c in &self.coefficients {
                    let table = c.schur.as_ref().expect("schur basis rows present");
                    for (p, m) in &table.rows {
                        lines.push(csv_row(&[
                            c.n.to_string(),
                            partition_compact(p),
                            m.to_string(),
                        ]));
                    }
                }
            }
        }
        lines.join("\n") + "\n"
    }

    fn to_latex(&self) -> String {
        let mut lines = Vec::new();
        for c in &self.coefficients {
            match &c.schur {
                None => lines.push(format!("t^{{{}}}:\\quad {}", c.n, polynomial_latex(&c.poly))),
                Some(table) => {
                    let body = if table.rows.iter().all(|(_, m)| *m == 0) {
                        "0".to_string()
                    } else {
                        table
                            .rows
                            .iter()
                            .filter(|(_, m)| *m != 0)
                            .map(|(p, m)| {
                                let shape = partition_compact(p).replace('+', ",");
                                match m {
                                    1 => format!("s_{{({shape})}}"),
                                    -1 => format!("-s_{{({shape})}}"),
                                    _ => format!("{m}\\,s_{{({shape})}}"),
                                }
                            })
                            .collect::<Vec<_>>()
                            .join(" + ")
                    };
                    lines.push(format!("t^{{{}}}:\\quad {}", c.n, body));
                }
            }
        }
        lines.join("\n") + "\n"
    }
}

fn poly_terms_json(p: &PPolynomial) -> Value {
    Value::Array(
        p.iter()
            .map(|(m, c)| {
                json!({
                    "monomial": monomial_json(m),
                    "coefficient": rational_string(c),
                })
            })
            .collect(),
    )
}

/// Schur multiplicities over every partition of n in canonical order, with
/// the two numeric specializations. Errs on a non-integer multiplicity (the
/// input was not a virtual-representation character).
pub fn schur_table(poly: &PPolynomial, n: u64) -> Result<SchurTable, String> {
    let decomposition = p_to_schur(poly, n);
    let rows = partitions_of(n)
        .into_iter()
        .map(|lambda| {
            let mult = decomposition
                .get(&lambda)
                .cloned()
                .unwrap_or_else(|| Rational::from_integer(0.into()));
            if !is_integer(&mult) {
                return Err(format!(
                    "non-integer Schur multiplicity {mult} at s_{lambda} in degree {n}"
                ));
            }
            let as_i64: i64 = mult
                .numer()
                .try_into()
                .map_err(|_| format!("Schur multiplicity at s_{lambda} exceeds i64 range"))?;
            Ok((lambda, as_i64))
        })
        .collect::<Result<Vec<_>, String>>()?;
    Ok(SchurTable {
        rows,
        plain_euler: specialize_plain_euler(poly, n),
        quotient_euler: specialize_quotient_euler(poly),
    })
}

// ---------------------------------------------------------------------------
// coefficient-table payload

#[derive(Debug)]
pub struct CoefficientsPayload {
    pub genus: u64,
    pub records: Vec<CoefficientRecord>,
}

impl CoefficientsPayload {
    fn to_json(&self) -> Value {
        let records: Vec<Value> = self
            .records
            .iter()
            .map(|r| {
                json!({
                    "ord": r.signature.ord(),
                    "exponents": exponents_json(r.signature.exponents()),
                    "quotient_genus": r.signature.quotient_genus(),
                    "branch_points": r.signature.branch_points(),
                    "classes": r.signature.gcd_classes(),
                    "chi_orb": rational_string(&r.chi_orb),
                    "monodromy_count": int_string(&r.monodromy_count),
                    "n_value": int_string(&r.n_value),
                    "denominator": int_string(&r.denominator),
                    "coefficient": rational_string(&r.coefficient),
                })
            })
            .collect();
        json!({ "genus": self.genus, "records": records })
    }

    fn to_csv(&self) -> String {
        let mut lines = vec![
            "ord,exponents,quotient_genus,branch_points,classes,chi_orb,monodromy_count,n_value,denominator,coefficient"
                .to_string(),
        ];
        for r in &self.records {
            let exponents = r
                .signature
                .exponents()
                .iter()
                .map(|(j, k)| format!("{j}:{k}"))
                .collect::<Vec<_>>()
                .join(";");
            let classes = r
                .signature
                .gcd_classes()
                .iter()
                .map(|l| l.to_string())
                .collect::<Vec<_>>()
                .join("+");
            lines.push(csv_row(&[
                r.signature.ord().to_string(),
                exponents,
                r.signature.quotient_genus().to_string(),
                r.signature.branch_points().to_string(),
                classes,
                rational_string(&r.chi_orb),
                int_string(&r.monodromy_count),
                int_string(&r.n_value),
                int_string(&r.denominator),
                rational_string(&r.coefficient),
            ]));
        }
        lines.join("\n") + "\n"
    }

    fn to_latex(&self) -> String {
        let mut lines = Vec::new();
        for (i, r) in self.records.iter().enumerate() {
            let coeff = rational_latex(&r.coefficient);
            let signed = if i == 0 {
                coeff
            } else if let Some(positive) = coeff.strip_prefix('-') {
                format!("- {positive}")
            } else {
                format!("+ {coeff}")
            };
            lines.push(format!(
                "{}\\,{}",
                signed,
                factor_product_latex(r.signature.exponents())
            ));
        }
        lines.join("\n") + "\n"
    }
}

// ---------------------------------------------------------------------------
// scalar payloads

#[derive(Debug)]
pub struct NFunPayload {
    pub modulus: u64,
    pub classes: Vec<u64>,
    pub value: BigInt,
    /// Set when --verify ran the brute-force oracle.
    pub bruteforce: Option<BigInt>,
}

impl NFunPayload {
    fn to_json(&self) -> Value {
        let mut doc = Map::new();
        doc.insert("k".into(), json!(self.modulus));
        doc.insert("classes".into(), json!(self.classes));
        doc.insert("value".into(), json!(int_string(&self.value)));
        if let Some(b) = &self.bruteforce {
            doc.insert("bruteforce".into(), json!(int_string(b)));
            doc.insert("verified".into(), json!(b == &self.value));
        }
        Value::Object(doc)
    }

    fn to_csv(&self) -> String {
        let classes = self
            .classes
            .iter()
            .map(|l| l.to_string())
            .collect::<Vec<_>>()
            .join("+");
        match &self.bruteforce {
            None => format!(
                "k,classes,value\n{}\n",
                csv_row(&[self.modulus.to_string(), classes, int_string(&self.value)])
            ),
            Some(b) => format!(
                "k,classes,value,bruteforce,verified\n{}\n",
                csv_row(&[
                    self.modulus.to_string(),
                    classes,
                    int_string(&self.value),
                    int_string(b),
                    (b == &self.value).to_string(),
                ])
            ),
        }
    }

    fn to_latex(&self) -> String {
        let classes = self
            .classes
            .iter()
            .map(|l| l.to_string())
            .collect::<Vec<_>>()
            .join(",");
        format!("N({};{}) = {}\n", self.modulus, classes, self.value)
    }
}

#[derive(Debug)]
pub struct ScalarPayload {
    pub labels: Vec<(&'static str, String)>,
    pub value: Rational,
}

impl ScalarPayload {
    fn to_json(&self) -> Value {
        let mut doc = Map::new();
        for (key, val) in &self.labels {
            doc.insert((*key).into(), json!(val));
        }
        doc.insert("value".into(), json!(rational_string(&self.value)));
        Value::Object(doc)
    }

    fn to_csv(&self) -> String {
        let header: Vec<String> = self
            .labels
            .iter()
            .map(|(k, _)| k.to_string())
            .chain(["value".to_string()])
            .collect();
        let row: Vec<String> = self
            .labels
            .iter()
            .map(|(_, v)| v.clone())
            .chain([rational_string(&self.value)])
            .collect();
        format!("{}\n{}\n", csv_row(&header), csv_row(&row))
    }

    fn to_latex(&self) -> String {
        format!("{}\n", rational_latex(&self.value))
    }
}
