//! Where an algebra comes from: a preset name or a JSON file.

use std::path::Path;

use loopcoh::dga::{presets, PresentedAlgebra};

use crate::document::{AlgebraDocument, DocumentError};

#[derive(Debug, thiserror::Error)]
pub enum InputError {
    #[error("unknown preset {0:?} (expected sphere:<odd n ≥ 3> or wedge:<degrees>)")]
    UnknownPreset(String),
    #[error("preset {preset:?}: {reason}")]
    BadPreset { preset: String, reason: String },
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}: {source}")]
    Document { path: String, source: DocumentError },
}

/// `sphere:<n>` for odd `n ≥ 3`, or `wedge:<a>,<b>,…` with every degree at least 2.
pub fn parse_preset(spec: &str) -> Result<PresentedAlgebra, InputError> {
    let bad = |reason: &str| InputError::BadPreset { preset: spec.to_string(), reason: reason.to_string() };
    let (kind, arg) = spec.split_once(':').ok_or_else(|| InputError::UnknownPreset(spec.to_string()))?;
    match kind {
        "sphere" => {
            let n: i64 = arg.trim().parse().map_err(|_| bad("the dimension must be an integer"))?;
            if n < 3 || n % 2 == 0 {
                return Err(bad("only odd spheres of dimension at least 3 have the model Λz"));
            }
            Ok(presets::sphere(n))
        }
        "wedge" => {
            let degrees = arg
                .split(',')
                .map(|d| d.trim().parse::<i64>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|_| bad("degrees must be integers"))?;
            if degrees.is_empty() || degrees.iter().any(|&d| d < 2) {
                return Err(bad("every degree must be at least 2"));
            }
            Ok(presets::wedge(&degrees))
        }
        _ => Err(InputError::UnknownPreset(spec.to_string())),
    }
}

pub fn load_file(path: &Path) -> Result<PresentedAlgebra, InputError> {
    let shown = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|source| InputError::Io { path: shown.clone(), source })?;
    AlgebraDocument::from_json(&text)
        .and_then(|d| d.to_algebra())
        .map_err(|source| InputError::Document { path: shown, source })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn presets() {
        let s = parse_preset("sphere:3").unwrap();
        assert_eq!(s.len(), 2);
        assert_eq!(s.degree(1), 3);
        let w = parse_preset("wedge:3,3").unwrap();
        assert_eq!(w.len(), 3);
        assert_eq!(w.product_table().count(), 0);
        assert!(matches!(parse_preset("sphere:4"), Err(InputError::BadPreset { .. })));
        assert!(matches!(parse_preset("torus:2"), Err(InputError::UnknownPreset(_))));
        assert!(matches!(parse_preset("wedge:1,3"), Err(InputError::BadPreset { .. })));
    }
}
