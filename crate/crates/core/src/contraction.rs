//! Diagonal contractions `μ_t = f_t⁻¹ ∘ μ(f_t × f_t)` with `f_t(X_i) = t^{e_i} X_i`,
//! tracked as exact Laurent polynomials in `t`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::algebra::{BilinearMap, LieAlgebra, Vector};
use crate::catalog::frobenius_model;
use crate::error::{Error, Result};
use crate::exterior::{basis_differentials, Multiform};
use crate::lie::jacobi_check;
use crate::linalg::Matrix;
use crate::scalar::Scalar;
use crate::upoly::RootSet;

/// Finite Laurent series `Σ c_e t^e`; zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LaurentScalar {
    terms: BTreeMap<i64, Scalar>,
}

impl LaurentScalar {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(c: Scalar, exponent: i64) -> Self {
        let mut l = Self::zero();
        l.add_term(exponent, &c);
        l
    }

    pub fn add_term(&mut self, exponent: i64, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exponent).or_insert_with(Scalar::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&exponent);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Scalar)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e, c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (e, c) in self.terms() {
            for (f, d) in other.terms() {
                out.add_term(e + f, &(c * d));
            }
        }
        out
    }

    /// Value at `t = 0`, or `None` when a negative power is present.
    pub fn limit_at_zero(&self) -> Option<Scalar> {
        match self.min_exponent() {
            Some(e) if e < 0 => None,
            _ => Some(self.terms.get(&0).cloned().unwrap_or_else(Scalar::zero)),
        }
    }

    pub fn eval(&self, t: &Scalar) -> Option<Scalar> {
        let mut acc = Scalar::zero();
        for (e, c) in self.terms() {
            let p = if e >= 0 {
                t.pow(e as u32)
            } else {
                t.inv()?.pow((-e) as u32)
            };
            acc += &(c * &p);
        }
        Some(acc)
    }
}

impl fmt::Display for LaurentScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms().map(|(e, c)| format!("({c})t^{e}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[derive(Clone, Debug)]
pub struct ContractionSpec {
    pub algebra: LieAlgebra,
    pub exponents: Vec<i64>,
    /// Columns are the new basis in old coordinates; applied before rescaling.
    pub basis: Option<Matrix>,
}

impl ContractionSpec {
    pub fn new(algebra: LieAlgebra, exponents: Vec<i64>) -> Result<Self> {
        if exponents.len() != algebra.dim() {
            return Err(Error::DimensionMismatch {
                expected: algebra.dim(),
                got: exponents.len(),
            });
        }
        Ok(ContractionSpec {
            algebra,
            exponents,
            basis: None,
        })
    }

    pub fn with_basis(mut self, p: Matrix) -> Result<Self> {
        let n = self.algebra.dim();
        if p.rows() != n || p.cols() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: p.rows().max(p.cols()),
            });
        }
        self.basis = Some(p);
        Ok(self)
    }
}

/// 0-based triple whose constant carries a negative power of `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Divergence {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub exponent: i64,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Contraction {
    Limit(LieAlgebra),
    Diverges(Divergence),
}

impl Contraction {
    pub fn limit(&self) -> Option<&LieAlgebra> {
        match self {
            Contraction::Limit(g) => Some(g),
            Contraction::Diverges(_) => None,
        }
    }
}

fn prepared(spec: &ContractionSpec) -> Result<LieAlgebra> {
    if spec.exponents.len() != spec.algebra.dim() {
        return Err(Error::DimensionMismatch {
            expected: spec.algebra.dim(),
            got: spec.exponents.len(),
        });
    }
    match &spec.basis {
        Some(p) => spec.algebra.change_basis(p),
        None => Ok(spec.algebra.clone()),
    }
}

/// Structure constants of `μ_t`, keyed by 0-based `(i, j, k)` with `i < j`.
pub fn rescaled_constants(
    spec: &ContractionSpec,
) -> Result<BTreeMap<(usize, usize, usize), LaurentScalar>> {
    let g = prepared(spec)?;
    let e = &spec.exponents;
    Ok(g.map()
        .entries()
        .into_iter()
        .map(|(i, j, k, c)| ((i, j, k), LaurentScalar::monomial(c, e[i] + e[j] - e[k])))
        .collect())
}

pub fn contract(spec: &ContractionSpec) -> Result<Contraction> {
    if !jacobi_check(&spec.algebra).ok {
        return Err(Error::Precondition(
            "contraction needs a Lie algebra".into(),
        ));
    }
    let g = prepared(spec)?;
    let mut limit = BilinearMap::zero(g.dim());
    for ((i, j, k), c) in rescaled_constants(spec)? {
        match c.limit_at_zero() {
            Some(v) => limit.set_coeff(i, j, k, v),
            None => {
                return Ok(Contraction::Diverges(Divergence {
                    i,
                    j,
                    k,
                    exponent: c.min_exponent().unwrap(),
                }))
            }
        }
    }
    let limit = LieAlgebra::from_map(limit).with_labels(g.labels().to_vec());
    assert!(jacobi_check(&limit).ok, "limit of Lie brackets must be Lie");
    Ok(Contraction::Limit(limit))
}

/// Parameters `(a_1, …, a_{p−1})` if `g` equals the frobeniusian model in its
/// given basis, compared through the differentials of the dual basis.
pub fn is_in_model_family(g: &LieAlgebra) -> Option<Vec<Scalar>> {
    let n = g.dim();
    if n < 2 || n % 2 == 1 {
        return None;
    }
    let p = n / 2;
    let d = basis_differentials(g);
    let a: Vec<Scalar> = (1..p)
        .map(|k| d[2 * k].coeff(&[1, 2 * k]).unwrap_or_else(Scalar::zero))
        .collect();
    let model = frobenius_model(p, &a).ok()?;
    (basis_differentials(&model.algebra) == d).then_some(a)
}

/// `dω1 = ω1∧ω2 + Σ ω_{2k+1}∧ω_{2k+2}`, `dω2 = 0`, and every other `dω_j` a
/// combination of `ω2∧ω_i` with `i ≥ 3` (1-based).
pub fn has_eq7_shape(g: &LieAlgebra) -> bool {
    let n = g.dim();
    if n < 2 || n % 2 == 1 {
        return false;
    }
    let d = basis_differentials(g);
    let mut expected = Multiform::zero(n, 2);
    expected.add_term(&[0, 1], &Scalar::int(1));
    for k in 1..n / 2 {
        expected.add_term(&[2 * k, 2 * k + 1], &Scalar::int(1));
    }
    if d[0] != expected || !d[1].is_zero() {
        return false;
    }
    d[2..]
        .iter()
        .all(|f| f.terms().all(|(idx, _)| idx[0] == 1 && idx[1] >= 2))
}

/// Eigenvalues of `−ad(X_index)`, the action on the dual side that turns the
/// model's relations into `a_k` and `−(1+a_k)`.
pub fn principal_spectrum(g: &LieAlgebra, index: usize) -> Result<RootSet> {
    if index >= g.dim() {
        return Err(Error::IndexOutOfRange {
            index,
            dim: g.dim(),
        });
    }
    if !jacobi_check(g).ok {
        return Err(Error::Precondition("spectrum needs a Lie algebra".into()));
    }
    let ad = g.ad(&Vector::basis(g.dim(), index));
    Ok(ad.scale(&Scalar::int(-1)).charpoly().roots())
}
