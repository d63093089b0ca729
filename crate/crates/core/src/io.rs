//! JSON file formats. Indices in files are 1-based; rationals are strings.
//!
//! Algebra file:
//!
//! ```json
//! {"dim": 3, "basis": ["X1","X2","X3"],
//!  "brackets": [{"i": 1, "j": 2, "terms": [{"k": 3, "re": "1", "im": "0"}]}]}
//! ```
//!
//! Matrix file: `{"rows": [["1","0"],["0","1"]]}`, each entry `"p/q"` or `"re,im"`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::algebra::{BilinearMap, LieAlgebra};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Term {
    pub k: usize,
    pub re: String,
    #[serde(default = "zero_string")]
    pub im: String,
}

fn zero_string() -> String {
    "0".into()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketEntry {
    pub i: usize,
    pub j: usize,
    pub terms: Vec<Term>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub dim: usize,
    pub basis: Vec<String>,
    pub brackets: Vec<BracketEntry>,
}

impl AlgebraFile {
    /// Canonical form: pairs and targets ascending, zero constants omitted.
    pub fn from_algebra(g: &LieAlgebra) -> Self {
        let mut brackets: Vec<BracketEntry> = Vec::new();
        for (i, j, k, c) in g.map().entries() {
            let term = Term {
                k: k + 1,
                re: Scalar::format_rational(c.re()),
                im: Scalar::format_rational(c.im()),
            };
            match brackets.last_mut() {
                Some(b) if b.i == i + 1 && b.j == j + 1 => b.terms.push(term),
                _ => brackets.push(BracketEntry {
                    i: i + 1,
                    j: j + 1,
                    terms: vec![term],
                }),
            }
        }
        AlgebraFile {
            dim: g.dim(),
            basis: g.labels().to_vec(),
            brackets,
        }
    }

    pub fn to_algebra(&self) -> Result<LieAlgebra> {
        let n = self.dim;
        if n == 0 {
            return Err(Error::Parse("dim must be positive".into()));
        }
        if self.basis.len() != n {
            return Err(Error::Parse(format!(
                "basis has {} labels for dim {n}",
                self.basis.len()
            )));
        }
        let mut m = BilinearMap::zero(n);
        let mut seen = BTreeSet::new();
        for b in &self.brackets {
            if !(1 <= b.i && b.i < b.j && b.j <= n) {
                return Err(Error::Parse(format!(
                    "bracket ({}, {}) needs 1 ≤ i < j ≤ {n}",
                    b.i, b.j
                )));
            }
            for t in &b.terms {
                if !(1..=n).contains(&t.k) {
                    return Err(Error::Parse(format!("target index {} out of range", t.k)));
                }
                if !seen.insert((b.i, b.j, t.k)) {
                    return Err(Error::Parse(format!(
                        "duplicate constant ({}, {}, {})",
                        b.i, b.j, t.k
                    )));
                }
                let c = Scalar::new(
                    Scalar::parse_rational(&t.re)?,
                    Scalar::parse_rational(&t.im)?,
                );
                m.set_coeff(b.i - 1, b.j - 1, t.k - 1, c);
            }
        }
        Ok(LieAlgebra::from_map(m).with_labels(self.basis.clone()))
    }

    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data serializes");
        s.push('\n');
        s
    }

    pub fn canonicalize(&self) -> Result<Self> {
        Ok(AlgebraFile::from_algebra(&self.to_algebra()?))
    }
}

pub fn parse_algebra(text: &str) -> Result<LieAlgebra> {
    AlgebraFile::parse(text)?.to_algebra()
}

pub fn algebra_to_json(g: &LieAlgebra) -> String {
    AlgebraFile::from_algebra(g).to_json()
}

/// `"p/q"` for reals, `"re,im"` otherwise; inverse of `Scalar::from_str`.
pub fn scalar_token(c: &Scalar) -> String {
    if c.is_real() {
        Scalar::format_rational(c.re())
    } else {
        format!(
            "{},{}",
            Scalar::format_rational(c.re()),
            Scalar::format_rational(c.im())
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixFile {
    pub rows: Vec<Vec<String>>,
}

impl MatrixFile {
    pub fn from_matrix(m: &Matrix) -> Self {
        MatrixFile {
            rows: (0..m.rows())
                .map(|i| m.row(i).iter().map(scalar_token).collect())
                .collect(),
        }
    }

    pub fn to_matrix(&self) -> Result<Matrix> {
        let cols = self.rows.first().map_or(0, Vec::len);
        if self.rows.is_empty() || cols == 0 {
            return Err(Error::Parse("empty matrix".into()));
        }
        if self.rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Parse("ragged matrix rows".into()));
        }
        let rows = self
            .rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|s| s.parse::<Scalar>())
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Matrix::from_rows(rows))
    }

    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data serializes");
        s.push('\n');
        s
    }
}

pub fn parse_matrix(text: &str) -> Result<Matrix> {
    MatrixFile::parse(text)?.to_matrix()
}
