//! Parsing of command-line values and potential files.

use std::path::Path;

use conjlab_core::derivation::{ClosedFormHost, ClosedFormKind};
use conjlab_core::{Group, GroupElement, GroupModel, Potential, Rational, Word};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

/// On-disk potential: a finite table plus an optional named closed form.
///
/// ```json
/// {"model": "h3", "table": [["H3(1,0,0)", "1/2"]], "closed_form": null, "truncation": 10000}
/// ```
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PotentialFile {
    pub model: String,
    #[serde(default)]
    pub table: Vec<(String, String)>,
    #[serde(default)]
    pub closed_form: Option<String>,
    #[serde(default)]
    pub truncation: Option<u64>,
}

/// A potential resolved against its group model.
pub struct LoadedPotential {
    pub model: GroupModel,
    pub potential: Potential<GroupElement>,
    pub truncation: Option<u64>,
}

pub fn parse_model(s: &str) -> Result<GroupModel, CliError> {
    s.parse::<GroupModel>()
        .map_err(|e| CliError::usage(format!("--model: {e}")))
}

/// `"p/q"` or `"p"`.
pub fn parse_rational(s: &str) -> Result<Rational, CliError> {
    s.trim()
        .parse::<Rational>()
        .map_err(|_| CliError::usage(format!("not a rational number: {s:?}")))
}

pub fn parse_element(model: &GroupModel, s: &str) -> Result<GroupElement, CliError> {
    Ok(model.decode(s)?)
}

/// A word such as `Ax.Ap^-1`, reduced to its normal form.
pub fn parse_word(model: &GroupModel, s: &str) -> Result<GroupElement, CliError> {
    let w = Word::parse(s)?;
    Ok(model.normal_form(&w)?)
}

impl PotentialFile {
    pub fn read(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::usage(format!("{}: {e}", path.display())))?;
        serde_json::from_str(&text).map_err(|e| CliError::usage(format!("{}: {e}", path.display())))
    }

    pub fn resolve(&self) -> Result<LoadedPotential, CliError> {
        let model = parse_model(&self.model)?;
        let mut entries = Vec::with_capacity(self.table.len());
        for (enc, value) in &self.table {
            entries.push((parse_element(&model, enc)?, parse_rational(value)?));
        }
        let mut potential = Potential::from_table(entries);
        if let Some(name) = &self.closed_form {
            let kind = ClosedFormKind::from_name(name)
                .ok_or_else(|| CliError::usage(format!("unknown closed form {name:?}")))?;
            let cf = model.closed_form(kind)?;
            potential = potential.with_closed_form(cf, |e| model.encode(e))?;
        }
        Ok(LoadedPotential {
            model,
            potential,
            truncation: self.truncation,
        })
    }
}
