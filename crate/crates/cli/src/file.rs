//! The variety file format: a versioned TOML document naming the
//! variables, the defining polynomials, the declared dimension, and
//! optionally a stratification table and expected values for assertion
//! runs.

use std::path::Path;

use serde::Deserialize;

use euob_core::{
    parse_polynomial, EngineLimits, Error, Field, Ideal, Polynomial, StrataTable, StratumData,
    VarietySpec,
};

use crate::CliError;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VarietyFile {
    pub format_version: u32,
    #[serde(default)]
    pub name: Option<String>,
    pub variables: Vec<String>,
    pub dimension: usize,
    pub polynomials: Vec<String>,
    #[serde(default)]
    pub strata: Vec<StratumEntry>,
    #[serde(default)]
    pub expected: Option<Expected>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StratumEntry {
    pub name: String,
    pub chi: i64,
    pub local_eu: LocalEu,
    #[serde(default)]
    pub chi_slice: Option<i64>,
    #[serde(default)]
    pub top: bool,
}

/// A local value is either an integer or the literal string "unknown",
/// which asks the checker to solve for it.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum LocalEu {
    Known(i64),
    Marker(String),
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Expected {
    #[serde(default)]
    pub eu: Option<i64>,
    #[serde(default)]
    pub alphas: Option<Vec<u64>>,
    #[serde(default)]
    pub chi: Option<i64>,
}

impl VarietyFile {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
        let file: VarietyFile = toml::from_str(&text)
            .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
        file.validate()?;
        Ok(file)
    }

    fn validate(&self) -> Result<(), CliError> {
        if self.format_version != FORMAT_VERSION {
            return Err(CliError::Input(format!(
                "unsupported format_version {} (expected {FORMAT_VERSION})",
                self.format_version
            )));
        }
        if self.variables.is_empty() {
            return Err(CliError::Input("no variables declared".to_string()));
        }
        for (i, v) in self.variables.iter().enumerate() {
            if self.variables[..i].contains(v) {
                return Err(CliError::Input(format!("duplicate variable `{v}`")));
            }
        }
        if self.polynomials.is_empty() {
            return Err(CliError::Input("no polynomials declared".to_string()));
        }
        for s in &self.strata {
            if let LocalEu::Marker(m) = &s.local_eu {
                if m != "unknown" {
                    return Err(CliError::Input(format!(
                        "stratum `{}`: local_eu must be an integer or \"unknown\", got \"{m}\"",
                        s.name
                    )));
                }
            }
        }
        Ok(())
    }

    /// Parse the polynomial strings and build the validated variety
    /// (basis computed, dimension checked against the declaration).
    pub fn to_spec<F: Field>(
        &self,
        f: &F,
        limits: &EngineLimits,
    ) -> Result<VarietySpec<F>, Error> {
        let vars: Vec<&str> = self.variables.iter().map(|s| s.as_str()).collect();
        let gens: Result<Vec<Polynomial<F>>, Error> = self
            .polynomials
            .iter()
            .map(|p| parse_polynomial(f, p, &vars))
            .collect();
        VarietySpec::new(f, Ideal::new(vars.len(), gens?), self.dimension, limits)
    }

    /// The stratification table, if the file carries one.
    pub fn strata_table(&self) -> Option<StrataTable> {
        if self.strata.is_empty() {
            return None;
        }
        Some(StrataTable::new(
            self.strata
                .iter()
                .map(|s| StratumData {
                    name: s.name.clone(),
                    chi: s.chi,
                    local_eu: match s.local_eu {
                        LocalEu::Known(v) => Some(v),
                        LocalEu::Marker(_) => None,
                    },
                    chi_slice: s.chi_slice,
                    top: s.top,
                })
                .collect(),
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use euob_core::Fp;

    const MINIMAL: &str = r#"
format_version = 1
variables = ["x", "y"]
dimension = 1
polynomials = ["y^2 - x^3"]
"#;

    #[test]
    fn minimal_file_parses_and_builds() {
        let file: VarietyFile = toml::from_str(MINIMAL).unwrap();
        file.validate().unwrap();
        let f = Fp::default_prime();
        let spec = file.to_spec(&f, &EngineLimits::default()).unwrap();
        assert_eq!(spec.dim(), 1);
        assert_eq!(spec.nvars(), 2);
        assert!(file.strata_table().is_none());
    }

    #[test]
    fn unknown_marker_becomes_a_missing_value() {
        let text = r#"
format_version = 1
variables = ["x", "y"]
dimension = 1
polynomials = ["x*y"]

[[strata]]
name = "smooth-part"
chi = 0
local_eu = 1
chi_slice = 2
top = true

[[strata]]
name = "origin"
chi = 1
local_eu = "unknown"
"#;
        let file: VarietyFile = toml::from_str(text).unwrap();
        file.validate().unwrap();
        let table = file.strata_table().unwrap();
        assert_eq!(table.strata.len(), 2);
        assert_eq!(table.strata[0].local_eu, Some(1));
        assert_eq!(table.strata[1].local_eu, None);
        assert!(table.strata[0].top);
        assert!(!table.strata[1].top);
    }

    #[test]
    fn version_and_field_mistakes_are_rejected() {
        let wrong_version = MINIMAL.replace("format_version = 1", "format_version = 9");
        let file: VarietyFile = toml::from_str(&wrong_version).unwrap();
        assert!(file.validate().is_err());

        let typo = MINIMAL.replace("polynomials", "polynomial");
        assert!(toml::from_str::<VarietyFile>(&typo).is_err());

        let bad_marker = r#"
format_version = 1
variables = ["x"]
dimension = 0
polynomials = ["x"]

[[strata]]
name = "pt"
chi = 1
local_eu = "mystery"
top = true
"#;
        let file: VarietyFile = toml::from_str(bad_marker).unwrap();
        assert!(file.validate().is_err());
    }

    #[test]
    fn duplicate_variables_are_rejected() {
        let dup = MINIMAL.replace(r#"["x", "y"]"#, r#"["x", "x"]"#);
        let file: VarietyFile = toml::from_str(&dup).unwrap();
        assert!(file.validate().is_err());
    }
}
