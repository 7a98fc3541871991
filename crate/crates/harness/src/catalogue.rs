//! Resolving bound names from the command line and evaluating them on a
//! matrix file.

use wradius_core::bounds::{
    single_operator_bound, two_block_bound, BlockBounds, SingleVariant, TwoBlockVariant,
};
use wradius_core::{BlockOperatorMatrix, BoundId, BoundResult, ComplexMatrix, Error as CoreError};

use crate::error::{HarnessError, Result};
use crate::matfile::MatrixFile;

/// `t` used for parameterized bounds under `all` when none is given.
pub const DEFAULT_T: f64 = 0.5;

/// Bounds acting on a two-block operator matrix.
pub const TWO_BLOCK_NAMES: [&str; 3] = ["prop5", "p2_min", "p22"];

/// What the user asked for.
#[derive(Debug, Clone, PartialEq)]
pub struct Selection {
    /// Bound names, or `None` for `all`.
    pub names: Option<Vec<String>>,
    pub t: Option<f64>,
    pub min_t: bool,
}

impl Selection {
    /// Parses `all` or a comma-separated list of names.
    pub fn parse(list: &str, t: Option<f64>, min_t: bool) -> Result<Self> {
        let list = list.trim();
        let names = if list == "all" {
            None
        } else {
            let names: Vec<String> = list
                .split(',')
                .map(|s| s.trim().to_string())
                .filter(|s| !s.is_empty())
                .collect();
            if names.is_empty() {
                return Err(HarnessError::Usage("empty bound list".into()));
            }
            Some(names)
        };
        Ok(Selection { names, t, min_t })
    }
}

fn min_variant(name: &str) -> Option<&'static str> {
    match name {
        "prop1" => Some("prop1_min"),
        "rem2_i" => Some("rem12_i"),
        "rem2_ii" => Some("rem12_ii"),
        _ => None,
    }
}

fn has_t(name: &str) -> bool {
    BoundId::parse(name, None).is_err()
}

fn applicable_names(file: &MatrixFile) -> Vec<&'static str> {
    match file {
        MatrixFile::Dense(_) => BoundId::SINGLE_NAMES.to_vec(),
        MatrixFile::Block(b) => {
            let mut v: Vec<&str> = BoundId::BLOCK_NAMES.to_vec();
            if b.n() == 2 {
                v.extend(TWO_BLOCK_NAMES);
            }
            v.extend(BoundId::SINGLE_NAMES);
            v
        }
    }
}

/// Turns a selection into concrete bound ids for `file`.
pub fn resolve(file: &MatrixFile, sel: &Selection) -> Result<Vec<BoundId>> {
    let explicit = sel.names.is_some();
    let names: Vec<String> = match &sel.names {
        Some(n) => n.clone(),
        None => applicable_names(file)
            .iter()
            .map(|s| s.to_string())
            .collect(),
    };
    let mut ids = Vec::new();
    for name in &names {
        // unknown names are reported before anything else
        BoundId::parse(name, Some(DEFAULT_T))?;
        let name = match (sel.min_t, min_variant(name)) {
            (true, Some(m)) => m,
            (true, None) if explicit && has_t(name) => {
                return Err(HarnessError::Usage(format!(
                    "`{name}` has no min-over-t variant"
                )))
            }
            _ => name.as_str(),
        };
        let t = match (sel.t, explicit) {
            (Some(t), _) => Some(t),
            (None, false) => Some(DEFAULT_T),
            (None, true) => None,
        };
        let id = BoundId::parse(name, t)?;
        if !ids.contains(&id) {
            ids.push(id);
        }
    }
    Ok(ids)
}

fn zero_diagonal(b: &BlockOperatorMatrix) -> bool {
    (0..b.n()).all(|i| b.block(i, i).max_abs() == 0.0)
}

fn two_block(b: &BlockOperatorMatrix, id: BoundId) -> Result<BoundResult> {
    if b.n() != 2 {
        return Err(HarnessError::Dimension(format!(
            "{id} needs a 2×2 block grid"
        )));
    }
    let (a, c) = (b.block(0, 1), b.block(1, 0));
    let variant = match id {
        BoundId::P22 => TwoBlockVariant::P22 {
            c: b.block(0, 0).clone(),
            d: b.block(1, 1).clone(),
        },
        _ if !zero_diagonal(b) => {
            return Err(HarnessError::Dimension(format!(
                "{id} needs zero diagonal blocks"
            )))
        }
        BoundId::Prop5(t) => TwoBlockVariant::Prop5(t),
        _ => TwoBlockVariant::P2Min,
    };
    Ok(two_block_bound(a, c, &variant)?)
}

/// Evaluates every id on `file`; single-operator bounds use the flattened matrix.
pub fn evaluate(file: &MatrixFile, ids: &[BoundId]) -> Result<Vec<BoundResult>> {
    let flat: ComplexMatrix = file.matrix();
    let shared = match file {
        MatrixFile::Block(b) if ids.iter().any(BoundId::is_block) => Some(BlockBounds::new(b)?),
        _ => None,
    };
    let mut out = Vec::with_capacity(ids.len());
    for &id in ids {
        let r = if id.is_block() {
            match &shared {
                Some(bb) => bb.evaluate(id)?,
                None => {
                    return Err(HarnessError::Dimension(format!(
                        "{id} needs a block matrix file"
                    )))
                }
            }
        } else if matches!(id, BoundId::Prop5(_) | BoundId::P2Min | BoundId::P22) {
            match file {
                MatrixFile::Block(b) => two_block(b, id)?,
                MatrixFile::Dense(_) => {
                    return Err(HarnessError::Dimension(format!(
                        "{id} needs a block matrix file"
                    )))
                }
            }
        } else {
            match SingleVariant::from_id(id) {
                Ok(v) => single_operator_bound(&flat, v)?,
                Err(CoreError::NotApplicable(_)) => {
                    return Err(HarnessError::Usage(format!(
                        "{id} bounds products of operators, not the input matrix"
                    )))
                }
                Err(e) => return Err(e.into()),
            }
        };
        out.push(r);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn block_file() -> MatrixFile {
        let n = ComplexMatrix::from_real(2, 2, &[0.0, 1.0, 0.0, 0.0]).unwrap();
        MatrixFile::Block(BlockOperatorMatrix::off_diagonal_pair(&n, &n).unwrap())
    }

    fn dense_file() -> MatrixFile {
        MatrixFile::Dense(ComplexMatrix::identity(2))
    }

    #[test]
    fn explicit_list() {
        let sel = Selection::parse("prop4, aok", None, false).unwrap();
        assert_eq!(
            resolve(&block_file(), &sel).unwrap(),
            vec![BoundId::Prop4, BoundId::Aok]
        );
    }

    #[test]
    fn min_t_maps_to_min_variants() {
        let sel = Selection::parse("prop1,rem2_i", None, true).unwrap();
        assert_eq!(
            resolve(&block_file(), &sel).unwrap(),
            vec![BoundId::Prop1Min, BoundId::Rem12I]
        );
        let sel = Selection::parse("cor2", None, true).unwrap();
        assert_eq!(resolve(&block_file(), &sel).unwrap_err().exit_code(), 64);
    }

    #[test]
    fn missing_t_and_unknown_names() {
        let sel = Selection::parse("prop1", None, false).unwrap();
        assert_eq!(resolve(&dense_file(), &sel).unwrap_err().exit_code(), 64);
        let sel = Selection::parse("prop1,nonsense", Some(0.5), false).unwrap();
        assert_eq!(resolve(&dense_file(), &sel).unwrap_err().exit_code(), 4);
    }

    #[test]
    fn all_covers_applicable_bounds() {
        let sel = Selection::parse("all", None, false).unwrap();
        let dense = resolve(&dense_file(), &sel).unwrap();
        assert_eq!(dense.len(), BoundId::SINGLE_NAMES.len());
        let block = resolve(&block_file(), &sel).unwrap();
        assert_eq!(
            block.len(),
            BoundId::BLOCK_NAMES.len() + TWO_BLOCK_NAMES.len() + BoundId::SINGLE_NAMES.len()
        );
        let results = evaluate(&block_file(), &block).unwrap();
        assert!(results.iter().all(|r| r.bound() >= 0.5 - 1e-8));
    }

    #[test]
    fn block_bounds_need_block_files() {
        let err = evaluate(&dense_file(), &[BoundId::Prop4]).unwrap_err();
        assert_eq!(err.exit_code(), 3);
        let err = evaluate(&dense_file(), &[BoundId::Th3]).unwrap_err();
        assert_eq!(err.exit_code(), 64);
    }

    #[test]
    fn two_block_bounds_on_example() {
        let r = evaluate(
            &block_file(),
            &[BoundId::Prop5(0.5), BoundId::P2Min, BoundId::P22],
        )
        .unwrap();
        for x in r {
            assert!(x.bound() >= 0.5 - 1e-8);
        }
    }
}
