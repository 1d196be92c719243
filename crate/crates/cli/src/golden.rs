//! Reference values for the quartic report, kept in versioned JSON.

use std::collections::BTreeMap;
use std::path::Path;

use serde::Deserialize;

use crate::CliError;

pub const BUILTIN: &str = include_str!("../data/quartic_golden.json");

#[derive(Clone, Debug, Deserialize)]
pub struct RelatorEntry {
    pub base: String,
    pub gen: String,
    pub target: String,
    pub conjugator: String,
}

#[derive(Clone, Debug, Deserialize)]
pub struct KleinData {
    pub braids: BTreeMap<String, String>,
    pub vectors: BTreeMap<String, String>,
    pub amalgam_forms: BTreeMap<String, String>,
    pub g1_vector: String,
    pub g_forms: BTreeMap<String, String>,
    pub g_vectors: BTreeMap<String, String>,
}

#[derive(Clone, Debug, Deserialize)]
pub struct FillingData {
    pub filled: Vec<String>,
    pub subgroup: String,
    pub index: usize,
    pub equalities: Vec<(String, String)>,
}

#[derive(Clone, Debug, Deserialize)]
pub struct QuarticGolden {
    pub relator_table: Vec<RelatorEntry>,
    pub two_generator_presentation: String,
    pub group_order: usize,
    pub klein: KleinData,
    pub filling: FillingData,
}

impl QuarticGolden {
    pub fn builtin() -> Self {
        Self::parse(BUILTIN, "builtin").expect("shipped golden data parses")
    }

    pub fn parse(text: &str, origin: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Golden {
            origin: origin.to_string(),
            msg: e.to_string(),
        })
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        })?;
        Self::parse(&text, &path.display().to_string())
    }

    /// Klein field lookup that reports the missing key.
    pub fn klein_field<'a>(
        map: &'a BTreeMap<String, String>,
        key: &str,
    ) -> Result<&'a str, CliError> {
        map.get(key)
            .map(String::as_str)
            .ok_or_else(|| CliError::Golden {
                origin: "klein".into(),
                msg: format!("missing entry {key}"),
            })
    }
}
