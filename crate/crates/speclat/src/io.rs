//! JSON file formats for structures, extensions, and maps.
//!
//! A structure file carries the join table, the relation table as a 0/1
//! matrix, the optional zero, an optional closure table under the key
//! `"K"`, and optional display labels:
//!
//! ```json
//! {
//!   "n": 2,
//!   "join": [[0, 1], [1, 1]],
//!   "sq": [[1, 1], [0, 1]],
//!   "zero": 0
//! }
//! ```
//!
//! Extension files bundle the source structure, both views of the
//! extension, and the class bookkeeping, so they stand on their own.
//! Morphism files carry the map and optionally name the files of their
//! endpoints.

use std::fs::File;
use std::io::{BufReader, BufWriter, Write as _};
use std::path::Path;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::extension::ExtensionResult;
use crate::semilattice::{ClosureSemilattice, SpecSemilattice};

/// Reads any JSON value from a file.
pub fn read_json<T: DeserializeOwned>(path: impl AsRef<Path>) -> Result<T, Error> {
    let file = File::open(path)?;
    Ok(serde_json::from_reader(BufReader::new(file))?)
}

/// Writes any JSON value to a file, pretty-printed.
pub fn write_json<T: Serialize>(path: impl AsRef<Path>, value: &T) -> Result<(), Error> {
    let file = File::create(path)?;
    let mut writer = BufWriter::new(file);
    serde_json::to_writer_pretty(&mut writer, value)?;
    writer.write_all(b"\n")?;
    Ok(())
}

/// On-disk form of a specialization or closure semilattice.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StructureFile {
    pub n: usize,
    pub join: Vec<Vec<usize>>,
    /// the relation as a 0/1 matrix, row ⊑ column
    pub sq: Vec<Vec<u8>>,
    pub zero: Option<usize>,
    #[serde(rename = "K", default, skip_serializing_if = "Option::is_none")]
    pub k: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl StructureFile {
    /// Captures a structure without closure data.
    pub fn from_spec(s: &SpecSemilattice) -> Self {
        StructureFile {
            n: s.len(),
            join: s.join_table().to_vec(),
            sq: sq_to_rows(s),
            zero: s.zero(),
            k: None,
            labels: None,
        }
    }

    /// Captures a structure together with its closure table; fails when
    /// some element has no closure.
    pub fn from_spec_with_closures(s: &SpecSemilattice) -> Result<Self, Error> {
        let mut file = StructureFile::from_spec(s);
        let k = (0..s.len())
            .map(|a| s.closure_of(a).ok_or(Error::NotPrincipal { element: a }))
            .collect::<Result<Vec<_>, _>>()?;
        file.k = Some(k);
        Ok(file)
    }

    /// Captures a closure semilattice; the relation matrix is derived from
    /// the closure table.
    pub fn from_closure(c: &ClosureSemilattice) -> Self {
        let k = c.closure_table();
        let sq = (0..c.len())
            .map(|a| {
                (0..c.len())
                    .map(|b| u8::from(c.join(a, k[b]) == k[b]))
                    .collect()
            })
            .collect();
        StructureFile {
            n: c.len(),
            join: c.join_table().to_vec(),
            sq,
            zero: c.zero(),
            k: Some(c.closure_table().to_vec()),
            labels: None,
        }
    }

    fn checked_shapes(&self) -> Result<Vec<Vec<bool>>, Error> {
        if self.join.len() != self.n || self.join.iter().any(|row| row.len() != self.n) {
            return Err(Error::Malformed(format!(
                "join must be a {0} by {0} table",
                self.n
            )));
        }
        if self.sq.len() != self.n || self.sq.iter().any(|row| row.len() != self.n) {
            return Err(Error::Malformed(format!(
                "sq must be a {0} by {0} matrix",
                self.n
            )));
        }
        if let Some(k) = &self.k {
            if k.len() != self.n {
                return Err(Error::Malformed(format!("K must list {} closures", self.n)));
            }
        }
        if let Some(labels) = &self.labels {
            if labels.len() != self.n {
                return Err(Error::Malformed(format!("labels must name {} elements", self.n)));
            }
        }
        self.sq
            .iter()
            .map(|row| {
                row.iter()
                    .map(|&v| match v {
                        0 => Ok(false),
                        1 => Ok(true),
                        other => Err(Error::Malformed(format!(
                            "sq entries must be 0 or 1, found {other}"
                        ))),
                    })
                    .collect()
            })
            .collect()
    }

    /// Rebuilds the structure without validating its laws; pair with
    /// [`SpecSemilattice::validate`] to diagnose a broken file.
    pub fn to_raw_spec(&self) -> Result<SpecSemilattice, Error> {
        let sq = self.checked_shapes()?;
        SpecSemilattice::from_raw_parts(self.join.clone(), sq, self.zero)
    }

    /// Rebuilds and validates the structure. A closure table, when
    /// present, must satisfy the closure laws and match the relation.
    pub fn to_spec(&self) -> Result<SpecSemilattice, Error> {
        let sq = self.checked_shapes()?;
        let s = SpecSemilattice::new(self.join.clone(), sq, self.zero)?;
        if self.k.is_some() {
            let c = self.to_closure()?;
            let derived = SpecSemilattice::from_closure_semilattice(&c)?;
            if derived != s {
                return Err(Error::Mismatch(
                    "the relation does not match the closure table".into(),
                ));
            }
        }
        Ok(s)
    }

    /// Rebuilds the closure semilattice; requires the `K` field.
    pub fn to_closure(&self) -> Result<ClosureSemilattice, Error> {
        self.checked_shapes()?;
        let k = self
            .k
            .clone()
            .ok_or_else(|| Error::Malformed("a closure semilattice needs the K field".into()))?;
        ClosureSemilattice::new(self.join.clone(), k, self.zero)
    }
}

fn sq_to_rows(s: &SpecSemilattice) -> Vec<Vec<u8>> {
    (0..s.len())
        .map(|a| (0..s.len()).map(|b| u8::from(s.sq(a, b))).collect())
        .collect()
}

/// On-disk form of a universal extension, self-contained: the source
/// travels with the classes so the file can be checked in isolation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExtensionFile {
    pub source: StructureFile,
    pub tilde: StructureFile,
    pub tilde_spec: StructureFile,
    pub upsilon: Vec<usize>,
    pub class_of: Vec<Vec<usize>>,
    pub reps: Vec<[usize; 2]>,
    pub adjoined_zero: bool,
}

impl ExtensionFile {
    pub fn from_extension(ext: &ExtensionResult) -> Self {
        let mut tilde = StructureFile::from_closure(ext.tilde());
        tilde.labels = Some(
            ext.representatives()
                .iter()
                .map(|&(a, b)| format!("[{a},{b}]"))
                .collect(),
        );
        ExtensionFile {
            source: StructureFile::from_spec(ext.source()),
            tilde,
            tilde_spec: StructureFile::from_spec(ext.tilde_spec()),
            upsilon: ext.upsilon().to_vec(),
            class_of: ext.class_table().to_vec(),
            reps: ext.representatives().iter().map(|&(a, b)| [a, b]).collect(),
            adjoined_zero: ext.adjoined_zero(),
        }
    }

    /// Rebuilds the extension, validating both structures and
    /// cross-checking the stored relation view against the one derived
    /// from the closure table. The class data itself is taken on trust;
    /// [`crate::check_universal_property`] can put it on trial.
    pub fn to_extension(&self) -> Result<ExtensionResult, Error> {
        let source = self.source.to_spec()?;
        let tilde = self.tilde.to_closure()?;
        let stored_spec = self.tilde_spec.to_raw_spec()?;
        let ext = ExtensionResult::from_parts(
            source,
            tilde,
            self.upsilon.clone(),
            self.class_of.clone(),
            self.reps.iter().map(|&[a, b]| (a, b)).collect(),
            self.adjoined_zero,
        )?;
        if stored_spec != *ext.tilde_spec() {
            return Err(Error::Mismatch(
                "the stored relation view disagrees with the closure table".into(),
            ));
        }
        Ok(ext)
    }
}

/// On-disk form of a map between structures. The endpoint fields, when
/// present, name the files the map runs between so tools can cross-check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target: Option<String>,
    pub map: Vec<usize>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{dense_chain, strip_zero, truncated_nat, two_chain};
    use crate::extension::build_extension;

    #[test]
    fn structures_round_trip_through_files() {
        let dir = tempfile::tempdir().unwrap();
        for s in [two_chain(), dense_chain(), truncated_nat(3)] {
            let path = dir.path().join("s.json");
            write_json(&path, &StructureFile::from_spec_with_closures(&s).unwrap()).unwrap();
            let loaded: StructureFile = read_json(&path).unwrap();
            assert_eq!(loaded.to_spec().unwrap(), s);
        }
        let bare = strip_zero(&dense_chain()).unwrap();
        let path = dir.path().join("bare.json");
        write_json(&path, &StructureFile::from_spec(&bare)).unwrap();
        let loaded: StructureFile = read_json(&path).unwrap();
        assert_eq!(loaded.zero, None);
        assert_eq!(loaded.to_spec().unwrap(), bare);
    }

    #[test]
    fn closure_semilattices_round_trip_through_files() {
        let c = truncated_nat(3).to_closure_semilattice().unwrap();
        let file = StructureFile::from_closure(&c);
        assert_eq!(file.to_closure().unwrap(), c);
        // the derived relation matches the original structure's
        assert_eq!(file.to_spec().unwrap(), truncated_nat(3));
    }

    #[test]
    fn extensions_round_trip_through_files() {
        let dir = tempfile::tempdir().unwrap();
        for s in [two_chain(), truncated_nat(3), strip_zero(&dense_chain()).unwrap()] {
            let ext = build_extension(&s).unwrap();
            let path = dir.path().join("ext.json");
            write_json(&path, &ExtensionFile::from_extension(&ext)).unwrap();
            let loaded: ExtensionFile = read_json(&path).unwrap();
            assert_eq!(loaded.to_extension().unwrap(), ext);
        }
    }

    #[test]
    fn malformed_files_are_rejected() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("bad.json");
        std::fs::write(&path, "{ not json").unwrap();
        assert!(matches!(
            read_json::<StructureFile>(&path),
            Err(Error::Json(_))
        ));
        std::fs::write(&path, r#"{"n": 1, "join": [[0]], "sq": [[1]], "zero": 0, "extra": 3}"#)
            .unwrap();
        assert!(matches!(
            read_json::<StructureFile>(&path),
            Err(Error::Json(_))
        ));
        assert!(matches!(
            read_json::<StructureFile>(dir.path().join("absent.json")),
            Err(Error::Io(_))
        ));
    }

    #[test]
    fn shape_and_entry_errors_are_reported() {
        let mut file = StructureFile::from_spec(&two_chain());
        file.sq[0][1] = 2;
        assert!(matches!(file.to_spec(), Err(Error::Malformed(_))));
        let mut file = StructureFile::from_spec(&two_chain());
        file.join.pop();
        assert!(matches!(file.to_spec(), Err(Error::Malformed(_))));
        let mut file = StructureFile::from_spec(&two_chain());
        file.labels = Some(vec!["a".into()]);
        assert!(matches!(file.to_spec(), Err(Error::Malformed(_))));
        let file = StructureFile::from_spec(&two_chain());
        assert!(matches!(file.to_closure(), Err(Error::Malformed(_))));
    }

    #[test]
    fn closure_relation_mismatches_are_detected() {
        let mut file = StructureFile::from_spec_with_closures(&dense_chain()).unwrap();
        // claim K(1) = 1 while the relation says 2 ⊑ 1
        file.k = Some(vec![0, 1, 2]);
        assert!(matches!(file.to_spec(), Err(Error::Mismatch(_))));
    }

    #[test]
    fn corrupted_extension_files_still_load_for_auditing() {
        let ext = build_extension(&two_chain()).unwrap();
        let mut file = ExtensionFile::from_extension(&ext);
        file.upsilon = vec![2, 0];
        let reloaded = file.to_extension().unwrap();
        assert_eq!(reloaded.upsilon(), &[2, 0]);
        // but an out-of-range embedding is a shape error
        file.upsilon = vec![9, 0];
        assert!(matches!(file.to_extension(), Err(Error::Malformed(_))));
    }
}
