//! The invariant 1-form on `SL(2n, ℝ)` seen inside the space of all
//! `2n × 2n` matrices with coordinates `x_{jl}`:
//! `ω = Σ_j Σ_i x_{j,2i−1} dx_{j,2i} − x_{j,2i} dx_{j,2i−1}`.
//!
//! Indices in this module's public functions are 1-based, as in `x_{jl}`.

use std::sync::Arc;

use num_traits::{One, Zero};

use super::forms::{PolyForm, PolyVectorField};
use super::poly::{Poly, Vars};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::Scalar;

/// `x11`-style names when `2n < 10`, else `x1_1`.
pub fn sl_vars(n: usize) -> Vars {
    let m = 2 * n;
    let mut names = Vec::with_capacity(m * m);
    for j in 1..=m {
        for l in 1..=m {
            names.push(if m < 10 {
                format!("x{j}{l}")
            } else {
                format!("x{j}_{l}")
            });
        }
    }
    Arc::new(names)
}

/// Position of `x_{jl}` (1-based) in [`sl_vars`].
pub fn var_index(n: usize, j: usize, l: usize) -> usize {
    (j - 1) * 2 * n + (l - 1)
}

fn x(vars: &Vars, n: usize, j: usize, l: usize) -> Poly {
    Poly::var(vars.clone(), var_index(n, j, l))
}

/// Cofactor expansion along the first row.
pub fn determinant(m: &[Vec<Poly>]) -> Poly {
    let k = m.len();
    assert!(k > 0 && m.iter().all(|r| r.len() == k));
    if k == 1 {
        return m[0][0].clone();
    }
    let mut acc = Poly::zero(m[0][0].vars().clone());
    for c in 0..k {
        if m[0][c].is_zero() {
            continue;
        }
        let minor = determinant(&remove(m, 0, c));
        let term = m[0][c].mul(&minor);
        acc = if c % 2 == 0 {
            acc.add(&term)
        } else {
            acc.sub(&term)
        };
    }
    acc
}

fn remove(m: &[Vec<Poly>], row: usize, col: usize) -> Vec<Vec<Poly>> {
    m.iter()
        .enumerate()
        .filter(|(i, _)| *i != row)
        .map(|(_, r)| {
            r.iter()
                .enumerate()
                .filter(|(j, _)| *j != col)
                .map(|(_, p)| p.clone())
                .collect()
        })
        .collect()
}

#[derive(Clone, Debug)]
pub struct SlContactData {
    pub n: usize,
    pub vars: Vars,
    pub omega: PolyForm,
    /// `det M`.
    pub delta: Poly,
    /// `d(det M) = Σ (−1)^{i+j} X_{ij} dx_{ij}`.
    pub d_delta: PolyForm,
    /// Unsigned minors `X_{ij}`, 0-based storage.
    pub minors: Vec<Vec<Poly>>,
    pub reeb: PolyVectorField,
}

pub fn sl_omega(n: usize, vars: &Vars) -> PolyForm {
    let mut w = PolyForm::zero(vars.clone(), 1);
    for j in 1..=2 * n {
        for i in 1..=n {
            let (a, b) = (2 * i - 1, 2 * i);
            w.add_term(&[var_index(n, j, b)], &x(vars, n, j, a));
            w.add_term(&[var_index(n, j, a)], &x(vars, n, j, b).neg());
        }
    }
    w
}

pub fn sl_contact_data(n: usize) -> SlContactData {
    assert!(n >= 1);
    let m = 2 * n;
    let vars = sl_vars(n);
    let matrix: Vec<Vec<Poly>> = (1..=m)
        .map(|j| (1..=m).map(|l| x(&vars, n, j, l)).collect())
        .collect();
    let delta = determinant(&matrix);
    let minors: Vec<Vec<Poly>> = (0..m)
        .map(|i| {
            (0..m)
                .map(|j| determinant(&remove(&matrix, i, j)))
                .collect()
        })
        .collect();
    let mut d_delta = PolyForm::zero(vars.clone(), 1);
    for i in 0..m {
        for j in 0..m {
            let c = if (i + j) % 2 == 0 {
                minors[i][j].clone()
            } else {
                minors[i][j].neg()
            };
            d_delta.add_term(&[i * m + j], &c);
        }
    }
    let scale = Scalar::frac(1, m as i64);
    let mut terms = Vec::new();
    for j in 1..=m {
        let sign = if j % 2 == 1 { scale.clone() } else { -&scale };
        for i in 1..=n {
            let (a, b) = (2 * i - 1, 2 * i);
            terms.push((var_index(n, j, b), minors[j - 1][a - 1].scale(&sign)));
            terms.push((var_index(n, j, a), minors[j - 1][b - 1].scale(&sign)));
        }
    }
    let reeb = PolyVectorField::from_terms(vars.clone(), &terms);
    SlContactData {
        n,
        omega: sl_omega(n, &vars),
        vars,
        delta,
        d_delta,
        minors,
        reeb,
    }
}

/// Outcome of expanding `ω ∧ (dω)^q ∧ d(det)`.
#[derive(Clone, Debug, PartialEq)]
pub enum IdentityOutcome {
    /// Equals `constant · det · dx_{11} ∧ ⋯ ∧ dx_{2n,2n}`.
    Holds {
        constant: Scalar,
    },
    NotTopDegree {
        degree: usize,
        top: usize,
    },
    NotMultiple {
        residual: Poly,
    },
}

#[derive(Clone, Debug, PartialEq)]
pub struct SlIdentity {
    pub n: usize,
    pub q: usize,
    pub constant: Scalar,
    /// The exponent `2n − 1`, top degree only when `n = 1`.
    pub displayed_exponent: usize,
}

/// `q` making `ω ∧ (dω)^q ∧ d(det)` top degree: `((2n)² − 2) / 2`.
pub fn top_exponent(n: usize) -> usize {
    (4 * n * n - 2) / 2
}

pub fn sl_contact_identity_with_q(data: &SlContactData, q: usize) -> IdentityOutcome {
    let top = data.vars.len();
    let degree = 2 * q + 2;
    if degree != top {
        return IdentityOutcome::NotTopDegree { degree, top };
    }
    let dw = data.omega.exterior_d();
    let form = data
        .omega
        .wedge(&dw.power(q))
        .and_then(|f| f.wedge(&data.d_delta))
        .expect("shared variables");
    let all: Vec<usize> = (0..top).collect();
    let p = form.coeff(&all);
    let (mono, dc) = data.delta.terms().next().expect("det is nonzero");
    let constant = &p.coeff(mono) / dc;
    let residual = p.sub(&data.delta.scale(&constant));
    if residual.is_zero() {
        IdentityOutcome::Holds { constant }
    } else {
        IdentityOutcome::NotMultiple { residual }
    }
}

pub fn sl_contact_identity(n: usize) -> Result<SlIdentity> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be at least 1".into()));
    }
    let data = sl_contact_data(n);
    let q = top_exponent(n);
    match sl_contact_identity_with_q(&data, q) {
        IdentityOutcome::Holds { constant } => Ok(SlIdentity {
            n,
            q,
            constant,
            displayed_exponent: 2 * n - 1,
        }),
        IdentityOutcome::NotMultiple { residual } => Err(Error::Precondition(format!(
            "top form is not a multiple of det; residual {residual}"
        ))),
        IdentityOutcome::NotTopDegree { degree, top } => Err(Error::Precondition(format!(
            "degree {degree} is not top degree {top}"
        ))),
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ReebReport {
    /// `ω(Z) = det` identically.
    pub pairing_is_det: bool,
    /// `c` with `i(Z)dω = c · d(det)`, if such a constant exists.
    pub contraction_multiple: Option<Scalar>,
}

pub fn sl_reeb_check(data: &SlContactData) -> ReebReport {
    let pairing = data
        .omega
        .evaluate(std::slice::from_ref(&data.reeb))
        .expect("grade 1");
    let contracted = data
        .omega
        .exterior_d()
        .interior(&data.reeb)
        .expect("grade 2");
    let first = data.d_delta.terms().next().map(|(idx, c)| (idx, c.clone()));
    let contraction_multiple = first.and_then(|(idx, c)| {
        let (mono, dc) = c.terms().next()?;
        let k = &contracted.coeff(&idx).coeff(mono) / dc;
        let diff = contracted.sub(&data.d_delta.scale(&k)).ok()?;
        diff.is_zero().then_some(k)
    });
    ReebReport {
        pairing_is_det: pairing == data.delta,
        contraction_multiple,
    }
}

/// `A_{ij} = Σ_l (x_{jl} ∂/∂x_{il} − x_{il} ∂/∂x_{jl})`.
pub fn a_field(n: usize, vars: &Vars, i: usize, j: usize) -> PolyVectorField {
    let mut terms = Vec::new();
    for l in 1..=2 * n {
        terms.push((var_index(n, i, l), x(vars, n, j, l)));
        terms.push((var_index(n, j, l), x(vars, n, i, l).neg()));
    }
    PolyVectorField::from_terms(vars.clone(), &terms)
}

/// `Σ_{l=1}^{n} (x_{i,2l−1} x_{j,2l} − x_{i,2l} x_{j,2l−1})`.
pub fn pairing(n: usize, vars: &Vars, i: usize, j: usize) -> Poly {
    let mut p = Poly::zero(vars.clone());
    for l in 1..=n {
        let (a, b) = (2 * l - 1, 2 * l);
        p = p
            .add(&x(vars, n, i, a).mul(&x(vars, n, j, b)))
            .sub(&x(vars, n, i, b).mul(&x(vars, n, j, a)));
    }
    p
}

#[derive(Clone, Debug, PartialEq)]
pub struct SingularEquation {
    pub i: usize,
    pub j: usize,
    pub poly: Poly,
}

/// One pairing per `1 ≤ i ≤ j ≤ 2n`; the diagonal ones vanish identically.
pub fn sl_singular_equations(n: usize) -> Vec<SingularEquation> {
    let vars = sl_vars(n);
    let mut out = Vec::new();
    for i in 1..=2 * n {
        for j in i..=2 * n {
            out.push(SingularEquation {
                i,
                j,
                poly: pairing(n, &vars, i, j),
            });
        }
    }
    out
}

fn flatten(point: &Matrix) -> Vec<Scalar> {
    (0..point.rows())
        .flat_map(|i| point.row(i).to_vec())
        .collect()
}

fn check_shape(n: usize, m: &Matrix) -> Result<()> {
    if m.rows() != 2 * n || m.cols() != 2 * n {
        return Err(Error::DimensionMismatch {
            expected: 2 * n,
            got: m.rows().max(m.cols()),
        });
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq)]
pub struct SingularReport {
    pub values: Vec<(usize, usize, Scalar)>,
    pub singular: bool,
}

/// Evaluates every equation at a point of `SL(2n)`.
pub fn evaluate_singular(n: usize, point: &Matrix) -> Result<SingularReport> {
    check_shape(n, point)?;
    if !point.det().is_one() {
        return Err(Error::Precondition("point must have determinant 1".into()));
    }
    let flat = flatten(point);
    let values: Vec<(usize, usize, Scalar)> = sl_singular_equations(n)
        .into_iter()
        .map(|e| (e.i, e.j, e.poly.eval(&flat)))
        .collect();
    let singular = values.iter().all(|(_, _, v)| v.is_zero());
    Ok(SingularReport { values, singular })
}

/// Pullback of `ω` along `x ↦ m·x` compared with `ω`, without checking `m`.
pub fn left_translation_preserves(n: usize, m: &Matrix) -> bool {
    let vars = sl_vars(n);
    let w = sl_omega(n, &vars);
    let size = 2 * n;
    let images: Vec<Poly> = (1..=size)
        .flat_map(|j| (1..=size).map(move |l| (j, l)))
        .map(|(j, l)| {
            (1..=size).fold(Poly::zero(vars.clone()), |acc, k| {
                acc.add(&x(&vars, n, k, l).scale(&m[(j - 1, k - 1)]))
            })
        })
        .collect();
    w.pullback(&images).map(|p| p == w).unwrap_or(false)
}

/// Requires `mᵀm = I` and `det m = 1`.
pub fn so_invariance_check(n: usize, m: &Matrix) -> Result<bool> {
    check_shape(n, m)?;
    if m.transpose().mul(m) != Matrix::identity(2 * n) || !m.det().is_one() {
        return Err(Error::NotOrthogonal);
    }
    Ok(left_translation_preserves(n, m))
}

/// Rational rotation `[[c, −s], [s, c]]` from the Pythagorean parametrization
/// `c = (a² − b²)/(a² + b²)`, `s = 2ab/(a² + b²)`, placed in the plane of
/// coordinates `p < q` of a `size × size` identity.
pub fn pythagorean_rotation(size: usize, p: usize, q: usize, a: i64, b: i64) -> Matrix {
    assert!(p < q && q < size && (a, b) != (0, 0));
    let h = a * a + b * b;
    let c = Scalar::frac(a * a - b * b, h);
    let s = Scalar::frac(2 * a * b, h);
    let mut m = Matrix::identity(size);
    m[(p, p)] = c.clone();
    m[(q, q)] = c;
    m[(p, q)] = -&s;
    m[(q, p)] = s;
    m
}
