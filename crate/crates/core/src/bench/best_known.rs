use std::collections::HashMap;
use std::path::Path;

use thiserror::Error;

const BUNDLED: &str = include_str!("../../data/best_known.txt");

#[derive(Debug, Error)]
pub enum BestKnownError {
    #[error("line {line}: expected `<instance> <k>`, got {text:?}")]
    Malformed { line: usize, text: String },
    #[error("reading {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

/// Parses `<instance> <k*>` lines. Blank lines and `#` comments are skipped.
pub fn parse_best_known(text: &str) -> Result<HashMap<String, usize>, BestKnownError> {
    let mut map = HashMap::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut tokens = line.split_whitespace();
        let parsed = match (tokens.next(), tokens.next(), tokens.next()) {
            (Some(name), Some(k), None) => k.parse::<usize>().ok().map(|k| (name, k)),
            _ => None,
        };
        let Some((name, k)) = parsed else {
            return Err(BestKnownError::Malformed {
                line: idx + 1,
                text: line.to_string(),
            });
        };
        map.insert(name.to_string(), k);
    }
    Ok(map)
}

pub fn load_best_known(path: &Path) -> Result<HashMap<String, usize>, BestKnownError> {
    let text = std::fs::read_to_string(path).map_err(|source| BestKnownError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_best_known(&text)
}

/// The k* values shipped with the crate for the standard DIMACS instances.
pub fn bundled_best_known() -> HashMap<String, usize> {
    parse_best_known(BUNDLED).expect("bundled table parses")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_entries() {
        assert_eq!(
            parse_best_known("dsjc250.5 28").unwrap(),
            HashMap::from([("dsjc250.5".to_string(), 28)])
        );
        assert_eq!(
            parse_best_known("flat300_28_0 28\n").unwrap(),
            HashMap::from([("flat300_28_0".to_string(), 28)])
        );
        assert!(parse_best_known("").unwrap().is_empty());
    }

    #[test]
    fn malformed_lines_report_position() {
        let err = parse_best_known("# c\ndsjc250.5 28\nr250.5\n").unwrap_err();
        assert!(matches!(err, BestKnownError::Malformed { line: 3, .. }));
        assert!(parse_best_known("a b").is_err());
        assert!(parse_best_known("a 1 2").is_err());
    }

    #[test]
    fn bundled_table() {
        let m = bundled_best_known();
        assert_eq!(m.len(), 21);
        assert_eq!(m["dsjc250.5"], 28);
        assert_eq!(m["le450_15c"], 15);
        assert_eq!(m["r1000.5"], 234);
        assert_eq!(m["C4000.5"], 272);
    }
}
