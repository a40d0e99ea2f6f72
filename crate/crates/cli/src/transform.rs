//! Transform specifications accepted by `--phi` and `--psi`.

use std::path::PathBuf;
use std::str::FromStr;

use extshift_core::{block_embed, Field, FieldMatrix};

use crate::error::CliError;
use crate::matrix_file;

/// Offset mixed into the run seed when a transform is drawn at random, so it
/// never coincides with the matrices used for shifting.
const TRANSFORM_SEED_SALT: u64 = 0x7f4a_7c15_9e37_79b9;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TransformSpec {
    Identity,
    /// Random invertible matrix; the seed defaults to one derived from `--seed`.
    Random(Option<u64>),
    /// `φ(e_j) = e_{perm[j-1]}`.
    Permutation(Vec<usize>),
    /// Upper unitriangular with random entries above the diagonal.
    Unitriangular(u64),
    /// Random invertible `k×k` block acting on vertices `offset+1..=offset+k`,
    /// identity elsewhere.
    Block {
        k: usize,
        offset: usize,
    },
    File(PathBuf),
}

impl FromStr for TransformSpec {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        let usage = |msg: String| CliError::Usage(msg);
        let (head, arg) = match s.split_once(':') {
            Some((h, a)) => (h, Some(a)),
            None => (s, None),
        };
        let int = |t: &str| -> Result<u64, CliError> {
            t.trim().parse().map_err(|_| usage(format!("invalid integer `{t}` in transform `{s}`")))
        };
        match (head, arg) {
            ("identity" | "id", None) => Ok(TransformSpec::Identity),
            ("random", None) => Ok(TransformSpec::Random(None)),
            ("random", Some(seed)) => Ok(TransformSpec::Random(Some(int(seed)?))),
            ("permutation" | "perm", Some(list)) => {
                let perm = list
                    .split(|c: char| c == ',' || c.is_whitespace())
                    .filter(|t| !t.is_empty())
                    .map(|t| int(t).map(|v| v as usize))
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(TransformSpec::Permutation(perm))
            }
            ("unitriangular", Some(seed)) => Ok(TransformSpec::Unitriangular(int(seed)?)),
            ("block", Some(arg)) => {
                let (k, offset) = match arg.split_once('@') {
                    Some((k, o)) => (int(k)?, int(o)?),
                    None => (int(arg)?, 0),
                };
                Ok(TransformSpec::Block { k: k as usize, offset: offset as usize })
            }
            ("file", Some(path)) if !path.is_empty() => Ok(TransformSpec::File(PathBuf::from(path))),
            _ => Err(usage(format!(
                "unknown transform `{s}`; expected identity, random[:<seed>], permutation:<p1,..,pn>, \
                 unitriangular:<seed>, block:<k>[@<offset>] or file:<path>"
            ))),
        }
    }
}

impl TransformSpec {
    /// Builds the `n×n` matrix over `field`. `seed` is the run seed.
    pub fn resolve(&self, field: Field, n: usize, seed: u64) -> Result<FieldMatrix, CliError> {
        let derived = seed ^ TRANSFORM_SEED_SALT;
        let m = match self {
            TransformSpec::Identity => FieldMatrix::identity(field, n),
            TransformSpec::Random(s) => FieldMatrix::random_invertible(field, n, s.unwrap_or(derived)),
            TransformSpec::Permutation(perm) => {
                if perm.len() != n {
                    return Err(CliError::Usage(format!("permutation has {} entries, n = {n}", perm.len())));
                }
                FieldMatrix::permutation(field, perm)?
            }
            TransformSpec::Unitriangular(s) => FieldMatrix::random_unitriangular(field, n, *s),
            TransformSpec::Block { k, offset } => {
                block_embed(&FieldMatrix::random_invertible(field, *k, derived), n, *offset)?
            }
            TransformSpec::File(path) => matrix_file::read(path, field)?,
        };
        if m.rows() != n || m.cols() != n {
            return Err(CliError::Usage(format!("transform is {}×{}, n = {n}", m.rows(), m.cols())));
        }
        if !m.is_invertible() {
            return Err(CliError::Usage("transform is not invertible".into()));
        }
        Ok(m)
    }
}
