//! JSON input schemas for the confspace command.
//!
//! Two document shapes are accepted, distinguished by their top-level key:
//!
//! ```json
//! {"group_order": 2,
//!  "elements": [{"label": "e", "chi_by_orbit_length": {"1": 2}},
//!               {"label": "swap", "chi_by_orbit_length": {"2": 2}}]}
//! ```
//!
//! ```json
//! {"strata": [{"weight": "-1/240", "exponents": {"1": -2}}]}
//! ```
//!
//! Orbit lengths and exponent indices are JSON object keys, so they appear
//! as strings; weights are exact rationals in "num/den" (or integer) form.

use std::collections::BTreeMap;
use std::str::FromStr;

use anyhow::{anyhow, bail, Context, Result};
use equichar::arith::Rational;
use equichar::confspace::{ElementData, GroupActionData, Stratum};
use serde::Deserialize;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct GroupActionFile {
    group_order: u64,
    elements: Vec<ElementFile>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ElementFile {
    label: String,
    chi_by_orbit_length: BTreeMap<String, i64>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct StrataFile {
    strata: Vec<StratumFile>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct StratumFile {
    weight: String,
    exponents: BTreeMap<String, i64>,
}

/// Either input shape, already validated into library types.
#[derive(Debug)]
pub enum ConfspaceInput {
    GroupAction(GroupActionData),
    Strata(Vec<Stratum>),
}

pub fn parse_confspace_input(text: &str) -> Result<ConfspaceInput> {
    let value: serde_json::Value =
        serde_json::from_str(text).context("input is not valid JSON")?;
    let object = value
        .as_object()
        .ok_or_else(|| anyhow!("input must be a JSON object"))?;
    if object.contains_key("strata") {
        let file: StrataFile =
            serde_json::from_value(value.clone()).context("invalid strata document")?;
        let strata = file
            .strata
            .into_iter()
            .enumerate()
            .map(|(i, s)| {
                Ok(Stratum {
                    weight: parse_rational(&s.weight)
                        .with_context(|| format!("stratum {i}: bad weight '{}'", s.weight))?,
                    exponents: parse_index_map(&s.exponents)
                        .with_context(|| format!("stratum {i}: bad exponent key"))?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ConfspaceInput::Strata(strata))
    } else if object.contains_key("group_order") {
        let file: GroupActionFile =
            serde_json::from_value(value.clone()).context("invalid group-action document")?;
        let elements = file
            .elements
            .into_iter()
            .map(|e| {
                Ok(ElementData {
                    chi_by_orbit_length: parse_index_map(&e.chi_by_orbit_length)
                        .with_context(|| format!("element '{}': bad orbit-length key", e.label))?,
                    label: e.label,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let data = GroupActionData::new(file.group_order, elements)
            .map_err(|e| anyhow!("inconsistent group-action data: {e}"))?;
        Ok(ConfspaceInput::GroupAction(data))
    } else {
        bail!("input must contain either a 'strata' or a 'group_order' key")
    }
}

fn parse_rational(text: &str) -> Result<Rational> {
    Rational::from_str(text.trim()).map_err(|e| anyhow!("cannot parse rational '{text}': {e}"))
}

fn parse_index_map(map: &BTreeMap<String, i64>) -> Result<BTreeMap<u64, i64>> {
    map.iter()
        .map(|(key, &v)| {
            let index: u64 = key
                .parse()
                .map_err(|_| anyhow!("'{key}' is not a positive integer key"))?;
            if index == 0 {
                bail!("index keys must be >= 1, got '{key}'");
            }
            Ok((index, v))
        })
        .collect()
}
