//! Subcommand implementations: validate arguments, run the library, render
//! an [`OutputDocument`].
//!
//! Exit-code policy: anything traceable to the invocation (bad arguments,
//! unreadable or malformed input files, out-of-domain parameters) is a usage
//! failure (exit 1); mathematical failures in otherwise well-formed input
//! (inconsistent fixed-point data, enumeration budgets, non-integral Schur
//! multiplicities) are computation failures (exit 2).

use std::path::Path;

use equichar::confspace::{equivariant_config_series, strata_combine};
use equichar::cyclic::{
    count_residue_tuples, count_residue_tuples_bruteforce, ResidueConstraint,
};
use equichar::moduli::{coefficient_table, mgn_series, orb_chi_moduli};
use equichar::symfunc::poly::TruncatedSeries;
use serde_json::json;

use crate::input::{parse_confspace_input, ConfspaceInput};
use crate::output::{
    Basis, CoefficientsPayload, Format, NFunPayload, OutputDocument, Payload, ScalarPayload,
    SeriesPayload,
};

/// Truncation orders above this require --uncapped.
pub const MAX_POINTS_CAP: usize = 30;

#[derive(Debug)]
pub struct CliFailure {
    pub exit_code: u8,
    pub message: String,
}

impl CliFailure {
    pub fn usage(message: impl Into<String>) -> Self {
        CliFailure {
            exit_code: 1,
            message: message.into(),
        }
    }

    pub fn computation(message: impl Into<String>) -> Self {
        CliFailure {
            exit_code: 2,
            message: message.into(),
        }
    }
}

fn check_genus(genus: u64) -> Result<(), CliFailure> {
    if genus < 2 {
        return Err(CliFailure::usage(format!(
            "genus {genus} rejected: curves of genus 0 and 1 have infinitely many \
             automorphisms, so the cyclic-signature enumeration requires genus >= 2"
        )));
    }
    Ok(())
}

fn check_truncation(max_points: usize, uncapped: bool) -> Result<(), CliFailure> {
    if max_points > MAX_POINTS_CAP && !uncapped {
        return Err(CliFailure::usage(format!(
            "--max-points {max_points} exceeds the cap of {MAX_POINTS_CAP} \
             (partition counts grow quickly; pass --uncapped to override)"
        )));
    }
    Ok(())
}

fn basis_name(basis: Basis) -> &'static str {
    match basis {
        Basis::P => "p",
        Basis::Schur => "schur",
    }
}

fn series_document(
    command: &'static str,
    arguments: serde_json::Value,
    series: &TruncatedSeries,
    basis: Basis,
) -> Result<OutputDocument, CliFailure> {
    let payload =
        SeriesPayload::from_series(series, basis).map_err(CliFailure::computation)?;
    Ok(OutputDocument {
        command,
        arguments,
        payload: Payload::Series(payload),
    })
}

pub fn cmd_mgn(
    genus: u64,
    max_points: usize,
    basis: Basis,
    format: Format,
    uncapped: bool,
) -> Result<String, CliFailure> {
    check_genus(genus)?;
    check_truncation(max_points, uncapped)?;
    let series = mgn_series(genus, max_points);
    let arguments = json!({
        "genus": genus,
        "max_points": max_points,
        "basis": basis_name(basis),
    });
    Ok(series_document("mgn", arguments, &series, basis)?.render(format))
}

pub fn cmd_coeffs(genus: u64, format: Format) -> Result<String, CliFailure> {
    check_genus(genus)?;
    let records = coefficient_table(genus);
    let document = OutputDocument {
        command: "coeffs",
        arguments: json!({ "genus": genus }),
        payload: Payload::Coefficients(CoefficientsPayload { genus, records }),
    };
    Ok(document.render(format))
}

pub fn cmd_nfun(
    modulus: u64,
    classes: Vec<u64>,
    verify: bool,
    format: Format,
) -> Result<String, CliFailure> {
    let constraint = ResidueConstraint::new(modulus, classes.clone())
        .map_err(|e| CliFailure::usage(e.to_string()))?;
    let value = count_residue_tuples(&constraint);
    let bruteforce = if verify {
        let brute = count_residue_tuples_bruteforce(&constraint)
            .map_err(|e| CliFailure::computation(e.to_string()))?;
        if brute != value {
            return Err(CliFailure::computation(format!(
                "closed form {value} disagrees with enumeration {brute}"
            )));
        }
        Some(brute)
    } else {
        None
    };
    let document = OutputDocument {
        command: "nfun",
        arguments: json!({ "k": modulus, "classes": classes, "verify": verify }),
        payload: Payload::NFun(NFunPayload {
            modulus,
            classes,
            value,
            bruteforce,
        }),
    };
    Ok(document.render(format))
}

pub fn cmd_orbchi(h: u64, s: u64, format: Format) -> Result<String, CliFailure> {
    let value = orb_chi_moduli(h, s).map_err(|e| CliFailure::usage(e.to_string()))?;
    let document = OutputDocument {
        command: "orbchi",
        arguments: json!({ "h": h, "s": s }),
        payload: Payload::Scalar(ScalarPayload {
            labels: vec![("h", h.to_string()), ("s", s.to_string())],
            value,
        }),
    };
    Ok(document.render(format))
}

pub fn cmd_confspace(
    input: &Path,
    max_points: usize,
    basis: Basis,
    format: Format,
    uncapped: bool,
) -> Result<String, CliFailure> {
    check_truncation(max_points, uncapped)?;
    let text = std::fs::read_to_string(input)
        .map_err(|e| CliFailure::usage(format!("cannot read {}: {e}", input.display())))?;
    let parsed = parse_confspace_input(&text)
        .map_err(|e| CliFailure::usage(format!("{}: {e:#}", input.display())))?;
    let (series, kind) = match parsed {
        ConfspaceInput::GroupAction(data) => {
            let series = equivariant_config_series(&data, max_points)
                .map_err(|e| CliFailure::computation(e.to_string()))?;
            (series, "group_action")
        }
        ConfspaceInput::Strata(strata) => (strata_combine(&strata, max_points), "strata"),
    };
    let arguments = json!({
        "input": input.display().to_string(),
        "kind": kind,
        "max_points": max_points,
        "basis": basis_name(basis),
    });
    Ok(series_document("confspace", arguments, &series, basis)?.render(format))
}
