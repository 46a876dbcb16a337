//! Job input: a tuple or a family, read from JSON or the compact notation.

use std::io::Read;
use std::path::Path;

use llt_core::relations::catalan_family;
use llt_core::tableaux::Filling;
use llt_core::{ShapeTuple, SkewShape};
use serde::Deserialize;

use crate::CliError;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TupleInput {
    pub tuple: Vec<SkewShape>,
    #[serde(default)]
    pub n: Option<usize>,
    /// One filling per shape, selecting a configuration.
    #[serde(default)]
    pub fillings: Option<Vec<Filling>>,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
pub enum FamilySpec {
    Values { values: Vec<u32> },
    List(Vec<Vec<SkewShape>>),
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilyInput {
    pub family: FamilySpec,
    #[serde(default)]
    pub n: Option<usize>,
}

pub struct Job {
    pub tuple: ShapeTuple,
    pub n: Option<usize>,
    pub fillings: Option<Vec<Filling>>,
}

pub struct FamilyJob {
    pub family: Vec<ShapeTuple>,
    pub n: Option<usize>,
}

pub fn read_source(path: &str) -> Result<String, CliError> {
    let mut buf = String::new();
    if path == "-" {
        std::io::stdin().read_to_string(&mut buf).map_err(|e| CliError::Schema(format!("reading stdin: {e}")))?;
    } else {
        buf = std::fs::read_to_string(Path::new(path)).map_err(|e| CliError::Schema(format!("reading {path}: {e}")))?;
    }
    Ok(buf)
}

fn schema(e: serde_json::Error) -> CliError {
    CliError::Schema(format!("input does not match the schema: {e}"))
}

pub fn parse_tuple(text: &str) -> Result<Job, CliError> {
    let trimmed = text.trim();
    if trimmed.starts_with("((") {
        let tuple: ShapeTuple = trimmed.parse().map_err(|e: llt_core::Error| CliError::Schema(e.to_string()))?;
        return Ok(Job { tuple, n: None, fillings: None });
    }
    let raw: TupleInput = serde_json::from_str(trimmed).map_err(schema)?;
    let tuple = ShapeTuple::new(raw.tuple).map_err(CliError::Core)?;
    Ok(Job { tuple, n: raw.n, fillings: raw.fillings })
}

pub fn parse_family(text: &str) -> Result<FamilyJob, CliError> {
    let raw: FamilyInput = serde_json::from_str(text.trim()).map_err(schema)?;
    let family = match raw.family {
        FamilySpec::Values { values } => catalan_family(&values).map_err(CliError::Core)?,
        FamilySpec::List(list) => {
            list.into_iter().map(ShapeTuple::new).collect::<Result<_, _>>().map_err(CliError::Core)?
        }
    };
    Ok(FamilyJob { family, n: raw.n })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tuple_forms() {
        let j = parse_tuple(r#"{"tuple":[{"outer":[2,1]},{"outer":[1],"inner":[1]}],"n":2}"#).unwrap();
        assert_eq!(j.tuple.to_string(), "((2,1),(1)/(1))");
        assert_eq!(j.n, Some(2));
        let j = parse_tuple("((8,7,6),(4,3,2)/(2,0,0))").unwrap();
        assert_eq!(j.tuple.k(), 2);
        assert!(matches!(parse_tuple(r#"{"tuple":[{"outer":[1,2]}]}"#), Err(CliError::Schema(_))));
        assert!(matches!(parse_tuple(r#"{"tuple":[]}"#), Err(CliError::Core(e)) if e.is_schema()));
        assert!(matches!(parse_tuple(r#"{"shapes":[]}"#), Err(CliError::Schema(_))));
    }

    #[test]
    fn family_forms() {
        let f = parse_family(r#"{"family":{"values":[3,2,1,0]}}"#).unwrap();
        assert_eq!(f.family.len(), 6);
        let f = parse_family(r#"{"family":[[{"outer":[1]},{"outer":[2]}]],"n":3}"#).unwrap();
        assert_eq!(f.family.len(), 1);
        assert_eq!(f.n, Some(3));
    }
}
