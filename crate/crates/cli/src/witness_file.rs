//! Subalgebra bases on disk: a JSON object with the ambient family, a
//! provenance string and the basis as `n x n` matrices of `"p/q"` strings.

use std::path::Path;

use serde::{Deserialize, Serialize};
use strange_core::lie::{AlgebraKind, Family, SubalgebraBasis};
use strange_core::ratlin::{RatMatrix, Rational};

#[derive(Debug, Serialize, Deserialize)]
pub struct WitnessFile {
    pub provenance: String,
    #[serde(default = "default_family")]
    pub family: Family,
    pub basis: Vec<Vec<Vec<String>>>,
}

fn default_family() -> Family {
    Family::Sl
}

#[derive(Debug)]
pub enum LoadError {
    /// Unreadable or malformed file.
    Parse(String),
    /// Well-formed, but not a basis of a subspace of the stated algebra.
    Invalid(String),
}

impl WitnessFile {
    pub fn from_basis(provenance: &str, h: &SubalgebraBasis) -> Self {
        let basis = h
            .mats()
            .iter()
            .map(|m| {
                (0..m.rows())
                    .map(|i| m.row(i).iter().map(Rational::to_string).collect())
                    .collect()
            })
            .collect();
        Self {
            provenance: provenance.to_string(),
            family: h.kind().family,
            basis,
        }
    }

    pub fn read(path: &Path) -> Result<Self, LoadError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| LoadError::Parse(format!("{}: {e}", path.display())))?;
        serde_json::from_str(&text).map_err(|e| LoadError::Parse(format!("{}: {e}", path.display())))
    }

    pub fn write(&self, path: &Path) -> std::io::Result<()> {
        let text = serde_json::to_string_pretty(self).expect("plain data serializes");
        std::fs::write(path, text + "\n")
    }

    /// Parses the matrices and checks shape, independence and (for `sl_n`)
    /// tracelessness. Bracket closure is left to the caller.
    pub fn to_basis(&self) -> Result<SubalgebraBasis, LoadError> {
        let Some(first) = self.basis.first() else {
            return Err(LoadError::Invalid("empty basis".into()));
        };
        let n = first.len();
        let mut mats = Vec::with_capacity(self.basis.len());
        for (k, rows) in self.basis.iter().enumerate() {
            if rows.len() != n || rows.iter().any(|r| r.len() != n) {
                return Err(LoadError::Parse(format!("matrix {k} is not {n}x{n}")));
            }
            let mut entries = Vec::with_capacity(n * n);
            for s in rows.iter().flatten() {
                let q: Rational = s
                    .trim()
                    .parse()
                    .map_err(|_| LoadError::Parse(format!("matrix {k}: bad rational {s:?}")))?;
                entries.push(q);
            }
            mats.push(RatMatrix::from_entries(n, n, entries).expect("n^2 entries"));
        }
        let kind = AlgebraKind::new(self.family, n).map_err(|e| LoadError::Invalid(e.to_string()))?;
        SubalgebraBasis::new(kind, mats).map_err(|e| LoadError::Invalid(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use strange_core::strange::witness_fig1;

    #[test]
    fn round_trip() {
        let h = witness_fig1(4, 2).unwrap();
        let f = WitnessFile::from_basis("fig1", &h);
        let text = serde_json::to_string(&f).unwrap();
        let back: WitnessFile = serde_json::from_str(&text).unwrap();
        assert_eq!(back.to_basis().unwrap(), h);
    }

    #[test]
    fn fractions_parse() {
        let f = WitnessFile {
            provenance: "hand".into(),
            family: Family::Gl,
            basis: vec![vec![vec!["1/2".into(), "0".into()], vec!["0".into(), "-3/4".into()]]],
        };
        let h = f.to_basis().unwrap();
        assert_eq!(h.mats()[0][(1, 1)], Rational::new((-3).into(), 4.into()));
    }

    #[test]
    fn dependent_is_invalid() {
        let m = vec![vec!["1".into(), "0".into()], vec!["0".into(), "-1".into()]];
        let f = WitnessFile {
            provenance: "hand".into(),
            family: Family::Sl,
            basis: vec![m.clone(), m],
        };
        assert!(matches!(f.to_basis(), Err(LoadError::Invalid(_))));
    }
}
