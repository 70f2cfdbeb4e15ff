//! Versioned JSON instance files.
//!
//! ```json
//! {
//!   "format": 1,
//!   "kind": "classical",
//!   "m": 3, "n": 3, "r": 1, "k": 4, "p": 101,
//!   "seed": 7,
//!   "homogeneous": true,
//!   "degrees": [[1,1,1],[1,1,1],[1,1,1]],
//!   "matrices": [[[..]]]
//! }
//! ```
//!
//! Generalized instances carry `"entries"`, an `m x n` grid of polynomials in
//! canonical text form, instead of `"matrices"`.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::FieldPrime;
use crate::multipoly::Polynomial;
use crate::polymatrix::{DegreeMatrix, InstanceKind, MinRankInstance, Payload, PolyMatrix};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub format: u32,
    pub kind: InstanceKind,
    pub m: usize,
    pub n: usize,
    pub r: usize,
    pub k: usize,
    pub p: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub homogeneous: bool,
    pub degrees: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrices: Option<Vec<Vec<Vec<u32>>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub entries: Option<Vec<Vec<String>>>,
}

impl From<&MinRankInstance> for InstanceFile {
    fn from(inst: &MinRankInstance) -> Self {
        let (matrices, entries) = match &inst.payload {
            Payload::Classical(mats) => (Some(mats.clone()), None),
            Payload::Generalized(pm) => (
                None,
                Some(
                    pm.rows()
                        .iter()
                        .map(|row| row.iter().map(ToString::to_string).collect())
                        .collect(),
                ),
            ),
        };
        InstanceFile {
            format: FORMAT_VERSION,
            kind: inst.kind,
            m: inst.m,
            n: inst.n,
            r: inst.r,
            k: inst.k,
            p: inst.field.value(),
            seed: inst.seed,
            homogeneous: inst.homogeneous,
            degrees: inst.degrees.to_grid(),
            matrices,
            entries,
        }
    }
}

impl InstanceFile {
    pub fn into_instance(self) -> Result<MinRankInstance> {
        if self.format != FORMAT_VERSION {
            return Err(Error::Parse(format!(
                "unsupported instance format {}, expected {FORMAT_VERSION}",
                self.format
            )));
        }
        let field = FieldPrime::new(self.p)?;
        let degrees = DegreeMatrix::try_from(self.degrees)?;
        let mut inst = match (self.kind, self.matrices, self.entries) {
            (InstanceKind::Classical, Some(mats), None) => {
                if mats.iter().flatten().flatten().any(|&v| v >= self.p) {
                    return Err(Error::Parse("matrix entry not reduced mod p".into()));
                }
                MinRankInstance::classical(mats, self.r, field)?
            }
            (InstanceKind::Generalized, None, Some(grid)) => {
                let rows = grid
                    .iter()
                    .map(|row| {
                        row.iter()
                            .map(|s| Polynomial::parse(s, self.k, field))
                            .collect::<Result<Vec<_>>>()
                    })
                    .collect::<Result<Vec<_>>>()?;
                let pm = PolyMatrix::new(rows)?;
                let mut inst = MinRankInstance::generalized(pm, self.r)?;
                if inst.homogeneous != self.homogeneous && !inst.homogeneous {
                    return Err(Error::Parse(
                        "instance declared homogeneous but has non-homogeneous entries".into(),
                    ));
                }
                inst.homogeneous = self.homogeneous || inst.homogeneous;
                inst
            }
            (kind, _, _) => {
                return Err(Error::Parse(format!(
                    "a {kind} instance needs exactly one of {}",
                    if kind == InstanceKind::Classical {
                        "\"matrices\" (and no \"entries\")"
                    } else {
                        "\"entries\" (and no \"matrices\")"
                    }
                )))
            }
        };
        if (inst.m, inst.n, inst.k) != (self.m, self.n, self.k) {
            return Err(Error::Parse(format!(
                "declared m={}, n={}, k={} disagree with payload m={}, n={}, k={}",
                self.m, self.n, self.k, inst.m, inst.n, inst.k
            )));
        }
        if inst.degrees != degrees {
            return Err(Error::Parse(
                "declared degree matrix disagrees with the entries".into(),
            ));
        }
        inst.seed = self.seed;
        Ok(inst)
    }
}

pub fn to_json(inst: &MinRankInstance) -> String {
    let mut s = serde_json::to_string_pretty(&InstanceFile::from(inst)).expect("serializable");
    s.push('\n');
    s
}

pub fn from_json(text: &str) -> Result<MinRankInstance> {
    let file: InstanceFile = serde_json::from_str(text)?;
    file.into_instance()
}

pub fn write_instance(inst: &MinRankInstance, path: &Path) -> Result<()> {
    std::fs::write(path, to_json(inst))?;
    Ok(())
}

pub fn read_instance(path: &Path) -> Result<MinRankInstance> {
    from_json(&std::fs::read_to_string(path)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polymatrix::{degree_matrix_from_offsets, InstanceParams};

    fn f101() -> FieldPrime {
        FieldPrime::new(101).unwrap()
    }

    #[test]
    fn classical_round_trip() {
        let inst = InstanceParams::classical(3, 4, 1, 6, f101())
            .unwrap()
            .generate(3)
            .unwrap();
        let text = to_json(&inst);
        assert!(text.contains("\"format\": 1"));
        assert!(text.contains("\"seed\": 3"));
        assert_eq!(from_json(&text).unwrap(), inst);
        assert_eq!(to_json(&from_json(&text).unwrap()), text);
    }

    #[test]
    fn generalized_round_trip() {
        let d = degree_matrix_from_offsets(&[1, 1, 2], &[0, 1, 1]).unwrap();
        let inst = InstanceParams::generalized(1, 3, f101(), d, false)
            .generate(9)
            .unwrap();
        let text = to_json(&inst);
        assert_eq!(from_json(&text).unwrap(), inst);
    }

    #[test]
    fn malformed_files_are_rejected() {
        assert!(from_json("{").is_err());
        let inst = InstanceParams::classical(2, 2, 1, 1, f101())
            .unwrap()
            .generate(1)
            .unwrap();
        let mut file = InstanceFile::from(&inst);
        file.format = 2;
        assert!(file.clone().into_instance().is_err());
        file.format = 1;
        file.m = 3;
        assert!(file.clone().into_instance().is_err());
        file.m = 2;
        file.entries = Some(vec![vec!["x1".into(); 2]; 2]);
        assert!(file.clone().into_instance().is_err());
        file.entries = None;
        file.degrees = vec![vec![1, 1], vec![1, 2]];
        assert!(file.into_instance().is_err());
    }
}
