//! Exterior algebra on the dual of a Lie algebra.
//!
//! Forms are sparse maps from blades to coefficients. A blade is the set of
//! its indices packed into a `u64`, so ambient dimensions are capped at 64.
//! The Chevalley–Eilenberg differential follows `dω(X, Y) = −ω([X, Y])`.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::algebra::{LieAlgebra, Subspace, Vector};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::Scalar;

/// Coefficient ring for [`Multiform`].
pub trait Ring: Clone + PartialEq + fmt::Debug {
    fn is_null(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;
    fn times(&self, other: &Self) -> Self;
}

impl Ring for Scalar {
    fn is_null(&self) -> bool {
        self.is_zero()
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn negated(&self) -> Self {
        -self
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
}

pub const MAX_DIM: usize = 64;

fn blade_of(indices: &[usize]) -> Option<(u64, bool)> {
    // Sorts by insertion, tracking the permutation sign.
    let mut v = indices.to_vec();
    let mut neg = false;
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            neg = !neg;
            j -= 1;
        }
    }
    let mut mask = 0u64;
    for &i in &v {
        assert!(i < MAX_DIM, "index {i} exceeds the blade capacity");
        if mask & (1 << i) != 0 {
            return None;
        }
        mask |= 1 << i;
    }
    Some((mask, neg))
}

pub fn blade_indices(mask: u64) -> Vec<usize> {
    (0..64).filter(|i| mask & (1 << i) != 0).collect()
}

/// Sign of `e_A ∧ e_B` relative to `e_{A∪B}`: true means negative.
fn wedge_sign(a: u64, b: u64) -> bool {
    let mut swaps = 0u32;
    let mut rest = b;
    while rest != 0 {
        let j = rest.trailing_zeros();
        swaps += if j >= 63 {
            0
        } else {
            (a >> (j + 1)).count_ones()
        };
        rest &= rest - 1;
    }
    swaps % 2 == 1
}

/// Sign of `i(e_v)` on a blade containing `v`: true means negative.
fn interior_sign(a: u64, v: usize) -> bool {
    (a & ((1u64 << v) - 1)).count_ones() % 2 == 1
}

/// Homogeneous exterior form of fixed grade over `dim` generators.
#[derive(Clone, PartialEq, Debug)]
pub struct Multiform<R> {
    dim: usize,
    grade: usize,
    terms: BTreeMap<u64, R>,
}

impl<R: Ring> Multiform<R> {
    pub fn zero(dim: usize, grade: usize) -> Self {
        assert!(dim <= MAX_DIM);
        Multiform {
            dim,
            grade,
            terms: BTreeMap::new(),
        }
    }

    /// The grade 0 form with value `c`.
    pub fn constant(dim: usize, c: R) -> Self {
        let mut f = Multiform::zero(dim, 0);
        if !c.is_null() {
            f.terms.insert(0, c);
        }
        f
    }

    /// Adds `c · e_{i₁} ∧ ⋯ ∧ e_{i_q}`; indices may come in any order.
    pub fn add_term(&mut self, indices: &[usize], c: &R) {
        assert_eq!(indices.len(), self.grade, "grade mismatch");
        assert!(indices.iter().all(|&i| i < self.dim), "index out of range");
        if let Some((mask, neg)) = blade_of(indices) {
            let c = if neg { c.negated() } else { c.clone() };
            self.add_blade(mask, c);
        }
    }

    fn add_blade(&mut self, mask: u64, c: R) {
        if c.is_null() {
            return;
        }
        match self.terms.get_mut(&mask) {
            Some(old) => {
                let s = old.plus(&c);
                if s.is_null() {
                    self.terms.remove(&mask);
                } else {
                    *old = s;
                }
            }
            None => {
                self.terms.insert(mask, c);
            }
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn grade(&self) -> usize {
        self.grade
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms as strictly increasing index lists.
    pub fn terms(&self) -> impl Iterator<Item = (Vec<usize>, &R)> {
        self.terms.iter().map(|(&m, c)| (blade_indices(m), c))
    }

    /// Coefficient of the blade on `indices`, with the permutation sign applied.
    pub fn coeff(&self, indices: &[usize]) -> Option<R> {
        let (mask, neg) = blade_of(indices)?;
        let c = self.terms.get(&mask)?;
        Some(if neg { c.negated() } else { c.clone() })
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.dim, self.grade), (other.dim, other.grade));
        let mut out = self.clone();
        for (&m, c) in &other.terms {
            out.add_blade(m, c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        Multiform {
            dim: self.dim,
            grade: self.grade,
            terms: self.terms.iter().map(|(&m, c)| (m, c.negated())).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Multiplies every coefficient by `c` on the left.
    pub fn scale(&self, c: &R) -> Self {
        let mut out = Multiform::zero(self.dim, self.grade);
        for (&m, x) in &self.terms {
            out.add_blade(m, c.times(x));
        }
        out
    }

    pub fn map_coeffs<S: Ring>(&self, f: impl Fn(&R) -> S) -> Multiform<S> {
        let mut out = Multiform::zero(self.dim, self.grade);
        for (&m, c) in &self.terms {
            out.add_blade(m, f(c));
        }
        out
    }

    pub fn wedge(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim);
        let mut out = Multiform::zero(self.dim, self.grade + other.grade);
        if self.grade + other.grade > self.dim {
            return out;
        }
        for (&a, ca) in &self.terms {
            for (&b, cb) in &other.terms {
                if a & b != 0 {
                    continue;
                }
                let c = ca.times(cb);
                let c = if wedge_sign(a, b) { c.negated() } else { c };
                out.add_blade(a | b, c);
            }
        }
        out
    }

    /// `self ∧ ⋯ ∧ self` (`k` factors); `k = 0` needs the ring's unit.
    pub fn power(&self, k: usize, one: R) -> Self {
        let mut acc = Multiform::constant(self.dim, one);
        for _ in 0..k {
            acc = acc.wedge(self);
        }
        acc
    }

    /// `i(e_v)`.
    pub fn interior_basis(&self, v: usize) -> Self {
        assert!(self.grade > 0);
        let mut out = Multiform::zero(self.dim, self.grade - 1);
        for (&m, c) in &self.terms {
            if m & (1 << v) == 0 {
                continue;
            }
            let c = if interior_sign(m, v) {
                c.negated()
            } else {
                c.clone()
            };
            out.add_blade(m & !(1 << v), c);
        }
        out
    }

    /// `i(Σ x_v e_v)`, skipping `None` components.
    pub fn interior(&self, x: &[Option<R>]) -> Self {
        assert_eq!(x.len(), self.dim);
        let mut out = Multiform::zero(self.dim, self.grade - 1);
        for (v, xv) in x.iter().enumerate() {
            if let Some(xv) = xv {
                if !xv.is_null() {
                    out = out.add(&self.interior_basis(v).scale(xv));
                }
            }
        }
        out
    }

    /// Coefficient of the grade 0 form; `None` when it vanishes.
    pub fn constant_value(&self) -> Option<&R> {
        assert_eq!(self.grade, 0);
        self.terms.get(&0)
    }
}

impl<R: Ring + fmt::Display> fmt::Display for Multiform<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms()
            .map(|(idx, c)| {
                if idx.is_empty() {
                    return format!("{c}");
                }
                let names: Vec<String> = idx.iter().map(|i| format!("w{}", i + 1)).collect();
                format!("({c}) {}", names.join("^"))
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// A form on `g*` tied to its algebra.
#[derive(Clone, Debug)]
pub struct DualForm {
    algebra: Arc<LieAlgebra>,
    form: Multiform<Scalar>,
}

impl PartialEq for DualForm {
    fn eq(&self, other: &Self) -> bool {
        same_algebra(&self.algebra, &other.algebra) && self.form == other.form
    }
}

fn same_algebra(a: &Arc<LieAlgebra>, b: &Arc<LieAlgebra>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl DualForm {
    pub fn new(algebra: Arc<LieAlgebra>, form: Multiform<Scalar>) -> Result<Self> {
        if form.dim() != algebra.dim() {
            return Err(Error::DimensionMismatch {
                expected: algebra.dim(),
                got: form.dim(),
            });
        }
        Ok(DualForm { algebra, form })
    }

    pub fn zero(algebra: Arc<LieAlgebra>, grade: usize) -> Self {
        let n = algebra.dim();
        DualForm {
            algebra,
            form: Multiform::zero(n, grade),
        }
    }

    /// `ω_i`, the dual of the basis vector `e_i`.
    pub fn basis(algebra: Arc<LieAlgebra>, i: usize) -> Self {
        let mut f = Multiform::zero(algebra.dim(), 1);
        f.add_term(&[i], &Scalar::one());
        DualForm { algebra, form: f }
    }

    /// `Σ c_i ω_i`.
    pub fn covector(algebra: Arc<LieAlgebra>, coeffs: &[Scalar]) -> Result<Self> {
        if coeffs.len() != algebra.dim() {
            return Err(Error::DimensionMismatch {
                expected: algebra.dim(),
                got: coeffs.len(),
            });
        }
        let mut f = Multiform::zero(algebra.dim(), 1);
        for (i, c) in coeffs.iter().enumerate() {
            f.add_term(&[i], c);
        }
        Ok(DualForm { algebra, form: f })
    }

    /// Builds from `(indices, coefficient)` pairs of a common length.
    pub fn from_terms(
        algebra: Arc<LieAlgebra>,
        grade: usize,
        terms: &[(&[usize], Scalar)],
    ) -> Self {
        let mut f = Multiform::zero(algebra.dim(), grade);
        for (idx, c) in terms {
            f.add_term(idx, c);
        }
        DualForm { algebra, form: f }
    }

    pub fn algebra(&self) -> &Arc<LieAlgebra> {
        &self.algebra
    }

    pub fn form(&self) -> &Multiform<Scalar> {
        &self.form
    }

    pub fn grade(&self) -> usize {
        self.form.grade()
    }

    pub fn is_zero(&self) -> bool {
        self.form.is_zero()
    }

    pub fn coeff(&self, indices: &[usize]) -> Scalar {
        self.form.coeff(indices).unwrap_or_default()
    }

    /// Coefficients of a grade 1 form.
    pub fn covector_coeffs(&self) -> Vec<Scalar> {
        assert_eq!(self.grade(), 1);
        (0..self.algebra.dim()).map(|i| self.coeff(&[i])).collect()
    }

    fn with_form(&self, form: Multiform<Scalar>) -> DualForm {
        DualForm {
            algebra: self.algebra.clone(),
            form,
        }
    }

    fn check_same(&self, other: &DualForm) -> Result<()> {
        if same_algebra(&self.algebra, &other.algebra) {
            Ok(())
        } else {
            Err(Error::MismatchedAlgebras)
        }
    }

    pub fn add(&self, other: &DualForm) -> Result<DualForm> {
        self.check_same(other)?;
        if self.grade() != other.grade() {
            return Err(Error::DimensionMismatch {
                expected: self.grade(),
                got: other.grade(),
            });
        }
        Ok(self.with_form(self.form.add(&other.form)))
    }

    pub fn sub(&self, other: &DualForm) -> Result<DualForm> {
        self.add(&other.scale(&Scalar::int(-1)))
    }

    pub fn scale(&self, s: &Scalar) -> DualForm {
        self.with_form(self.form.scale(s))
    }

    /// `ω(v₁, …, v_q)`.
    pub fn evaluate(&self, vectors: &[Vector]) -> Result<Scalar> {
        if vectors.len() != self.grade() {
            return Err(Error::DimensionMismatch {
                expected: self.grade(),
                got: vectors.len(),
            });
        }
        let mut f = self.clone();
        for v in vectors {
            f = interior_product(v, &f)?;
        }
        Ok(f.form.constant_value().cloned().unwrap_or_default())
    }

    pub fn power(&self, k: usize) -> DualForm {
        self.with_form(self.form.power(k, Scalar::one()))
    }
}

impl fmt::Display for DualForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.form.fmt(f)
    }
}

pub fn wedge(a: &DualForm, b: &DualForm) -> Result<DualForm> {
    a.check_same(b)?;
    Ok(a.with_form(a.form.wedge(&b.form)))
}

/// `dω_k = −Σ_{i<j} c_{ij}^k ω_i ∧ ω_j`, one entry per basis covector.
pub fn basis_differentials(g: &LieAlgebra) -> Vec<Multiform<Scalar>> {
    let n = g.dim();
    let mut out = vec![Multiform::zero(n, 2); n];
    for (i, j, k, c) in g.map().entries() {
        out[k].add_term(&[i, j], &-c);
    }
    out
}

/// Chevalley–Eilenberg differential, extended to all grades as an antiderivation.
pub fn ce_differential(a: &DualForm) -> DualForm {
    let n = a.algebra.dim();
    let q = a.grade();
    let dbasis = basis_differentials(&a.algebra);
    let mut out = Multiform::zero(n, q + 1);
    if q + 1 > n {
        return a.with_form(out);
    }
    for (idx, c) in a.form.terms() {
        for (m, &im) in idx.iter().enumerate() {
            let mut prefix = Multiform::zero(n, m);
            prefix.add_term(&idx[..m], &Scalar::one());
            let mut suffix = Multiform::zero(n, q - m - 1);
            suffix.add_term(&idx[m + 1..], &Scalar::one());
            let piece = prefix.wedge(&dbasis[im]).wedge(&suffix);
            let sign = if m % 2 == 0 { c.clone() } else { -c };
            out = out.add(&piece.scale(&sign));
        }
    }
    a.with_form(out)
}

pub fn interior_product(x: &Vector, a: &DualForm) -> Result<DualForm> {
    if a.grade() == 0 {
        return Err(Error::InteriorOfFunction);
    }
    if x.dim() != a.algebra.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.algebra.dim(),
            got: x.dim(),
        });
    }
    let comps: Vec<Option<Scalar>> = x.0.iter().cloned().map(Some).collect();
    Ok(a.with_form(a.form.interior(&comps)))
}

/// Which condition fixed the class.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Parity {
    /// `ω ∧ (dω)^q ≠ 0`.
    Odd,
    /// `(dω)^q ≠ 0` and `ω ∧ (dω)^q = 0`.
    Even,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ClassResult {
    pub class: usize,
    pub q: usize,
    pub parity: Parity,
    pub characteristic_space: Subspace,
}

/// Matrix whose kernel is the characteristic space `{X : ω(X) = 0, i(X)dω = 0}`.
fn characteristic_matrix(w: &DualForm, dw: &DualForm) -> Matrix {
    let n = w.algebra.dim();
    let mut rows = vec![w.covector_coeffs()];
    for j in 0..n {
        rows.push((0..n).map(|i| dw.coeff(&[i, j])).collect());
    }
    Matrix::from_rows(rows)
}

/// Cartan class of a nonzero 1-form, computed by wedge powers and checked
/// against the codimension of the characteristic space.
pub fn cartan_class(w: &DualForm) -> Result<ClassResult> {
    if w.grade() != 1 {
        return Err(Error::InvalidParameter(format!(
            "class needs a 1-form, got grade {}",
            w.grade()
        )));
    }
    if w.is_zero() {
        return Err(Error::ZeroForm);
    }
    let n = w.algebra.dim();
    let dw = ce_differential(w);
    let mut q = 0;
    let mut pow = w.with_form(Multiform::constant(n, Scalar::one()));
    loop {
        let next = wedge(&pow, &dw)?;
        if next.is_zero() {
            break;
        }
        pow = next;
        q += 1;
    }
    let (class, parity) = if wedge(w, &pow)?.is_zero() {
        (2 * q, Parity::Even)
    } else {
        (2 * q + 1, Parity::Odd)
    };
    let kernel: Vec<Vector> = characteristic_matrix(w, &dw)
        .nullspace()
        .into_iter()
        .map(Vector)
        .collect();
    let space = Subspace::span(n, &kernel);
    let kernel_class = n - space.dim();
    if kernel_class != class {
        return Err(Error::ClassDisagreement {
            wedge: class,
            kernel: kernel_class,
        });
    }
    Ok(ClassResult {
        class,
        q,
        parity,
        characteristic_space: space,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h3() -> Arc<LieAlgebra> {
        Arc::new(LieAlgebra::from_int_brackets(3, &[(1, 2, &[(3, 1)])]))
    }

    #[test]
    fn wedge_signs() {
        let g = h3();
        let w1 = DualForm::basis(g.clone(), 0);
        let w2 = DualForm::basis(g.clone(), 1);
        let w12 = wedge(&w1, &w2).unwrap();
        assert_eq!(w12.coeff(&[0, 1]), Scalar::one());
        assert_eq!(w12.coeff(&[1, 0]), Scalar::int(-1));
        assert!(wedge(&w1, &w1).unwrap().is_zero());
    }

    #[test]
    fn heisenberg_differential() {
        let g = h3();
        let d3 = ce_differential(&DualForm::basis(g.clone(), 2));
        assert_eq!(
            d3,
            DualForm::from_terms(g.clone(), 2, &[(&[0, 1], Scalar::int(-1))])
        );
        assert!(ce_differential(&DualForm::basis(g, 0)).is_zero());
    }

    #[test]
    fn interior_signs() {
        let g = h3();
        let w12 = DualForm::from_terms(g.clone(), 2, &[(&[0, 1], Scalar::one())]);
        let x1 = Vector::basis(3, 0);
        let x2 = Vector::basis(3, 1);
        assert_eq!(
            interior_product(&x1, &w12).unwrap(),
            DualForm::basis(g.clone(), 1)
        );
        assert_eq!(
            interior_product(&x2, &w12).unwrap(),
            DualForm::basis(g.clone(), 0).scale(&Scalar::int(-1))
        );
        let f = DualForm::zero(g, 0);
        assert_eq!(interior_product(&x1, &f), Err(Error::InteriorOfFunction));
    }

    #[test]
    fn evaluation_matches_determinant() {
        let g = Arc::new(LieAlgebra::abelian(3));
        let vol = DualForm::from_terms(g, 3, &[(&[0, 1, 2], Scalar::one())]);
        let a = Vector::from_i64(&[1, 2, 3]);
        let b = Vector::from_i64(&[0, 1, 4]);
        let c = Vector::from_i64(&[5, 6, 0]);
        // det [[1,0,5],[2,1,6],[3,4,0]] = 1.
        assert_eq!(vol.evaluate(&[a, b, c]).unwrap(), Scalar::int(1));
    }

    #[test]
    fn class_of_contact_form() {
        let g = h3();
        let r = cartan_class(&DualForm::basis(g.clone(), 2)).unwrap();
        assert_eq!(r.class, 3);
        assert_eq!(r.parity, Parity::Odd);
        assert!(r.characteristic_space.is_zero());
        let r = cartan_class(&DualForm::basis(g.clone(), 0)).unwrap();
        assert_eq!(r.class, 1);
        assert_eq!(cartan_class(&DualForm::zero(g, 1)), Err(Error::ZeroForm));
    }

    #[test]
    fn mismatched_algebras_are_rejected() {
        let a = DualForm::basis(h3(), 0);
        let b = DualForm::basis(Arc::new(LieAlgebra::abelian(3)), 1);
        assert_eq!(wedge(&a, &b), Err(Error::MismatchedAlgebras));
    }
}
