//! Differential forms and vector fields with polynomial coefficients on
//! affine space.

use std::fmt;

use num_traits::Zero;

use super::poly::{check_vars, Poly, Vars};
use crate::error::{Error, Result};
use crate::exterior::Multiform;
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq)]
pub struct PolyForm {
    vars: Vars,
    form: Multiform<Poly>,
}

impl PolyForm {
    pub fn zero(vars: Vars, grade: usize) -> Self {
        let n = vars.len();
        PolyForm {
            vars,
            form: Multiform::zero(n, grade),
        }
    }

    pub fn function(f: Poly) -> Self {
        let vars = f.vars().clone();
        PolyForm {
            form: Multiform::constant(vars.len(), f),
            vars,
        }
    }

    /// `dx_v`.
    pub fn dx(vars: Vars, v: usize) -> Self {
        let mut f = PolyForm::zero(vars.clone(), 1);
        f.add_term(&[v], &Poly::one(vars));
        f
    }

    /// Top-degree form `dx_1 ∧ ⋯ ∧ dx_N`.
    pub fn volume(vars: Vars) -> Self {
        let n = vars.len();
        let mut f = PolyForm::zero(vars.clone(), n);
        f.add_term(&(0..n).collect::<Vec<_>>(), &Poly::one(vars));
        f
    }

    pub fn add_term(&mut self, indices: &[usize], c: &Poly) {
        assert!(
            super::poly::same_vars(&self.vars, c.vars()),
            "variable mismatch"
        );
        self.form.add_term(indices, c);
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn grade(&self) -> usize {
        self.form.grade()
    }

    pub fn is_zero(&self) -> bool {
        self.form.is_zero()
    }

    pub fn form(&self) -> &Multiform<Poly> {
        &self.form
    }

    pub fn terms(&self) -> impl Iterator<Item = (Vec<usize>, &Poly)> {
        self.form.terms()
    }

    pub fn coeff(&self, indices: &[usize]) -> Poly {
        self.form
            .coeff(indices)
            .unwrap_or_else(|| Poly::zero(self.vars.clone()))
    }

    /// The coefficient of a grade 0 form.
    pub fn as_function(&self) -> Option<Poly> {
        (self.grade() == 0).then(|| self.coeff(&[]))
    }

    fn same(&self, other: &PolyForm) -> Result<()> {
        check_vars(&self.vars, &other.vars)
    }

    pub fn add(&self, other: &PolyForm) -> Result<PolyForm> {
        self.same(other)?;
        if self.grade() != other.grade() {
            return Err(Error::DimensionMismatch {
                expected: self.grade(),
                got: other.grade(),
            });
        }
        Ok(PolyForm {
            vars: self.vars.clone(),
            form: self.form.add(&other.form),
        })
    }

    pub fn sub(&self, other: &PolyForm) -> Result<PolyForm> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> PolyForm {
        PolyForm {
            vars: self.vars.clone(),
            form: self.form.neg(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> PolyForm {
        PolyForm {
            vars: self.vars.clone(),
            form: self.form.map_coeffs(|c| c.scale(s)),
        }
    }

    pub fn mul_poly(&self, f: &Poly) -> Result<PolyForm> {
        check_vars(&self.vars, f.vars())?;
        Ok(PolyForm {
            vars: self.vars.clone(),
            form: self.form.scale(f),
        })
    }

    pub fn wedge(&self, other: &PolyForm) -> Result<PolyForm> {
        self.same(other)?;
        Ok(PolyForm {
            vars: self.vars.clone(),
            form: self.form.wedge(&other.form),
        })
    }

    /// `k`-th wedge power. Constant 2-forms on disjoint coordinate pairs are
    /// expanded combinatorially: `(Σ c_P dP)^k = k! Σ_{|S|=k} Π_{P∈S} c_P dS`.
    pub fn power(&self, k: usize) -> PolyForm {
        if let Some(pairs) = self.disjoint_constant_pairs() {
            return self.pair_power(&pairs, k);
        }
        self.generic_power(k)
    }

    pub fn generic_power(&self, k: usize) -> PolyForm {
        PolyForm {
            vars: self.vars.clone(),
            form: self.form.power(k, Poly::one(self.vars.clone())),
        }
    }

    fn disjoint_constant_pairs(&self) -> Option<Vec<([usize; 2], Scalar)>> {
        if self.grade() != 2 {
            return None;
        }
        let mut used = 0u64;
        let mut out = Vec::new();
        for (idx, c) in self.form.terms() {
            let c = c.constant_value()?;
            let bits = (1u64 << idx[0]) | (1u64 << idx[1]);
            if used & bits != 0 {
                return None;
            }
            used |= bits;
            out.push(([idx[0], idx[1]], c));
        }
        Some(out)
    }

    fn pair_power(&self, pairs: &[([usize; 2], Scalar)], k: usize) -> PolyForm {
        let mut out = PolyForm::zero(self.vars.clone(), 2 * k);
        if k > pairs.len() {
            return out;
        }
        let fact: Scalar = (1..=k as i64).map(Scalar::int).product();
        let m = pairs.len();
        let mut choice: Vec<usize> = (0..k).collect();
        loop {
            let mut idx = Vec::with_capacity(2 * k);
            let mut c = fact.clone();
            for &s in &choice {
                idx.extend_from_slice(&pairs[s].0);
                c *= &pairs[s].1;
            }
            out.add_term(&idx, &Poly::constant(self.vars.clone(), c));
            // Next k-subset in lexicographic order.
            let Some(pos) = (0..k).rev().find(|&i| choice[i] < m - k + i) else {
                break;
            };
            choice[pos] += 1;
            for i in pos + 1..k {
                choice[i] = choice[i - 1] + 1;
            }
        }
        out
    }

    pub fn exterior_d(&self) -> PolyForm {
        let n = self.vars.len();
        let mut out = PolyForm::zero(self.vars.clone(), self.grade() + 1);
        if self.grade() + 1 > n {
            return out;
        }
        for (idx, c) in self.form.terms() {
            for v in 0..n {
                if idx.contains(&v) {
                    continue;
                }
                let dc = c.derivative(v);
                if dc.is_zero() {
                    continue;
                }
                let mut full = Vec::with_capacity(idx.len() + 1);
                full.push(v);
                full.extend_from_slice(&idx);
                out.form.add_term(&full, &dc);
            }
        }
        out
    }

    pub fn interior(&self, x: &PolyVectorField) -> Result<PolyForm> {
        check_vars(&self.vars, &x.vars)?;
        if self.grade() == 0 {
            return Err(Error::InteriorOfFunction);
        }
        let comps: Vec<Option<Poly>> = x.components.iter().cloned().map(Some).collect();
        Ok(PolyForm {
            vars: self.vars.clone(),
            form: self.form.interior(&comps),
        })
    }

    /// `ω(X₁, …, X_q)` as a polynomial.
    pub fn evaluate(&self, fields: &[PolyVectorField]) -> Result<Poly> {
        if fields.len() != self.grade() {
            return Err(Error::DimensionMismatch {
                expected: self.grade(),
                got: fields.len(),
            });
        }
        let mut f = self.clone();
        for x in fields {
            f = f.interior(x)?;
        }
        Ok(f.coeff(&[]))
    }

    /// Cartan's formula `L_X = d i_X + i_X d`.
    pub fn lie_derivative(&self, x: &PolyVectorField) -> Result<PolyForm> {
        let tail = if self.grade() + 1 <= self.vars.len() {
            self.exterior_d().interior(x)?
        } else {
            PolyForm::zero(self.vars.clone(), self.grade())
        };
        if self.grade() == 0 {
            return Ok(tail);
        }
        self.interior(x)?.exterior_d().add(&tail)
    }

    /// Pullback along `x_v ↦ images[v]`; images live over a common variable list.
    pub fn pullback(&self, images: &[Poly]) -> Result<PolyForm> {
        if images.len() != self.vars.len() {
            return Err(Error::DimensionMismatch {
                expected: self.vars.len(),
                got: images.len(),
            });
        }
        let target = images[0].vars().clone();
        for p in images {
            check_vars(&target, p.vars())?;
        }
        let diffs: Vec<PolyForm> = images
            .iter()
            .map(|p| PolyForm::function(p.clone()).exterior_d())
            .collect();
        let mut out = PolyForm::zero(target.clone(), self.grade());
        for (idx, c) in self.form.terms() {
            let mut piece = PolyForm::function(c.substitute(images));
            for &v in &idx {
                piece = piece.wedge(&diffs[v])?;
            }
            out = out.add(&piece)?;
        }
        Ok(out)
    }

    /// Coefficients evaluated at a point.
    pub fn at(&self, point: &[Scalar]) -> Multiform<Scalar> {
        self.form.map_coeffs(|c| c.eval(point))
    }
}

impl fmt::Display for PolyForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .form
            .terms()
            .map(|(idx, c)| {
                if idx.is_empty() {
                    return c.to_string();
                }
                let d: Vec<String> = idx.iter().map(|&v| format!("d{}", self.vars[v])).collect();
                format!("({c}) {}", d.join("^"))
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `Σ X_v ∂/∂x_v`.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyVectorField {
    vars: Vars,
    components: Vec<Poly>,
}

impl PolyVectorField {
    pub fn new(vars: Vars, components: Vec<Poly>) -> Result<Self> {
        if components.len() != vars.len() {
            return Err(Error::DimensionMismatch {
                expected: vars.len(),
                got: components.len(),
            });
        }
        for c in &components {
            check_vars(&vars, c.vars())?;
        }
        Ok(PolyVectorField { vars, components })
    }

    pub fn zero(vars: Vars) -> Self {
        let components = (0..vars.len()).map(|_| Poly::zero(vars.clone())).collect();
        PolyVectorField { vars, components }
    }

    /// `∂/∂x_v`.
    pub fn coordinate(vars: Vars, v: usize) -> Self {
        let mut x = PolyVectorField::zero(vars.clone());
        x.components[v] = Poly::one(vars);
        x
    }

    /// Builds `Σ c_v ∂/∂x_v` from `(v, c_v)` pairs.
    pub fn from_terms(vars: Vars, terms: &[(usize, Poly)]) -> Self {
        let mut x = PolyVectorField::zero(vars);
        for (v, c) in terms {
            x.components[*v] = x.components[*v].add(c);
        }
        x
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn components(&self) -> &[Poly] {
        &self.components
    }

    pub fn add(&self, other: &PolyVectorField) -> Result<PolyVectorField> {
        check_vars(&self.vars, &other.vars)?;
        Ok(PolyVectorField {
            vars: self.vars.clone(),
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a.add(b))
                .collect(),
        })
    }

    pub fn scale(&self, s: &Scalar) -> PolyVectorField {
        PolyVectorField {
            vars: self.vars.clone(),
            components: self.components.iter().map(|c| c.scale(s)).collect(),
        }
    }

    /// `X(f)`.
    pub fn apply(&self, f: &Poly) -> Result<Poly> {
        check_vars(&self.vars, f.vars())?;
        let mut out = Poly::zero(self.vars.clone());
        for (v, c) in self.components.iter().enumerate() {
            if !c.is_zero() {
                out = out.add(&c.mul(&f.derivative(v)));
            }
        }
        Ok(out)
    }

    /// `[X, Y]_v = X(Y_v) − Y(X_v)`.
    pub fn bracket(&self, other: &PolyVectorField) -> Result<PolyVectorField> {
        check_vars(&self.vars, &other.vars)?;
        let components = (0..self.vars.len())
            .map(|v| {
                Ok(self
                    .apply(&other.components[v])?
                    .sub(&other.apply(&self.components[v])?))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(PolyVectorField {
            vars: self.vars.clone(),
            components,
        })
    }

    pub fn at(&self, point: &[Scalar]) -> Vec<Scalar> {
        self.components.iter().map(|c| c.eval(point)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Poly::is_zero)
    }
}

/// Does every coefficient vanish at `point`?
pub fn vanishes_at(form: &PolyForm, point: &[Scalar]) -> bool {
    form.at(point).terms().all(|(_, c)| c.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::manifold::poly::vars;

    #[test]
    fn d_of_product() {
        let v = vars(&["x", "y"]);
        let x = Poly::var(v.clone(), 0);
        let y = Poly::var(v.clone(), 1);
        let d = PolyForm::function(x.mul(&y)).exterior_d();
        let mut expected = PolyForm::zero(v.clone(), 1);
        expected.add_term(&[0], &y);
        expected.add_term(&[1], &x);
        assert_eq!(d, expected);
        assert!(d.exterior_d().is_zero());
    }

    #[test]
    fn contraction_of_contact_form() {
        let v = vars(&["x", "y", "z"]);
        let x = Poly::var(v.clone(), 0);
        // dz − x dy
        let w = PolyForm::dx(v.clone(), 2)
            .sub(&PolyForm::dx(v.clone(), 1).mul_poly(&x).unwrap())
            .unwrap();
        let dz = PolyVectorField::coordinate(v.clone(), 2);
        assert_eq!(w.evaluate(&[dz]).unwrap(), Poly::one(v));
    }

    #[test]
    fn pair_power_matches_generic() {
        let v = vars(&["a", "b", "c", "d", "e", "f"]);
        let mut w = PolyForm::zero(v.clone(), 2);
        w.add_term(&[0, 3], &Poly::constant(v.clone(), Scalar::int(2)));
        w.add_term(&[1, 4], &Poly::constant(v.clone(), Scalar::int(-3)));
        w.add_term(&[5, 2], &Poly::constant(v.clone(), Scalar::frac(1, 2)));
        for k in 0..=4 {
            assert_eq!(w.power(k), w.generic_power(k), "k = {k}");
        }
    }

    #[test]
    fn mismatched_variables() {
        let a = PolyForm::dx(vars(&["x"]), 0);
        let b = PolyForm::dx(vars(&["y"]), 0);
        assert_eq!(a.wedge(&b), Err(Error::VariableMismatch));
    }
}
