//! Sparse multivariate polynomials over [`Scalar`] in a fixed variable list.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exterior::Ring;
use crate::scalar::Scalar;
use crate::upoly::UPoly;

/// Ordered variable names shared between polynomials.
pub type Vars = Arc<Vec<String>>;

pub fn vars(names: &[&str]) -> Vars {
    Arc::new(names.iter().map(|s| s.to_string()).collect())
}

/// Exponent vector → nonzero coefficient.
#[derive(Clone, Debug)]
pub struct Poly {
    vars: Vars,
    terms: BTreeMap<Vec<u32>, Scalar>,
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        same_vars(&self.vars, &other.vars) && self.terms == other.terms
    }
}

pub fn same_vars(a: &Vars, b: &Vars) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

pub(crate) fn check_vars(a: &Vars, b: &Vars) -> Result<()> {
    if same_vars(a, b) {
        Ok(())
    } else {
        Err(Error::VariableMismatch)
    }
}

impl Poly {
    pub fn zero(vars: Vars) -> Self {
        Poly {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: Vars, c: Scalar) -> Self {
        let n = vars.len();
        Poly::monomial(vars, vec![0; n], c)
    }

    pub fn one(vars: Vars) -> Self {
        Poly::constant(vars, Scalar::one())
    }

    /// The coordinate function of variable `i`.
    pub fn var(vars: Vars, i: usize) -> Self {
        let mut e = vec![0; vars.len()];
        e[i] = 1;
        Poly::monomial(vars, e, Scalar::one())
    }

    pub fn monomial(vars: Vars, exponents: Vec<u32>, c: Scalar) -> Self {
        assert_eq!(exponents.len(), vars.len());
        let mut p = Poly::zero(vars);
        p.add_term(exponents, c);
        p
    }

    /// Univariate polynomial in a single variable named `name`.
    pub fn univariate(name: &str, coeffs: &[Scalar]) -> Self {
        let v = vars(&[name]);
        let mut p = Poly::zero(v);
        for (e, c) in coeffs.iter().enumerate() {
            p.add_term(vec![e as u32], c.clone());
        }
        p
    }

    fn add_term(&mut self, exponents: Vec<u32>, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let slot = self
            .terms
            .entry(exponents.clone())
            .or_insert_with(Scalar::zero);
        *slot += &c;
        if slot.is_zero() {
            self.terms.remove(&exponents);
        }
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &Scalar)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exponents: &[u32]) -> Scalar {
        self.terms.get(exponents).cloned().unwrap_or_default()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn constant_value(&self) -> Option<Scalar> {
        match self.degree() {
            None => Some(Scalar::zero()),
            Some(0) => Some(self.coeff(&vec![0; self.nvars()])),
            _ => None,
        }
    }

    pub fn depends_on(&self, v: usize) -> bool {
        self.terms.keys().any(|e| e[v] > 0)
    }

    pub fn add(&self, other: &Poly) -> Poly {
        assert!(same_vars(&self.vars, &other.vars), "variable mismatch");
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Poly {
        Poly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn scale(&self, s: &Scalar) -> Poly {
        let mut out = Poly::zero(self.vars.clone());
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c * s);
        }
        out
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        assert!(same_vars(&self.vars, &other.vars), "variable mismatch");
        let mut out = Poly::zero(self.vars.clone());
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let e = a.iter().zip(b).map(|(x, y)| x + y).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut acc = Poly::one(self.vars.clone());
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// `∂/∂x_v`.
    pub fn derivative(&self, v: usize) -> Poly {
        let mut out = Poly::zero(self.vars.clone());
        for (e, c) in &self.terms {
            if e[v] == 0 {
                continue;
            }
            let mut f = e.clone();
            f[v] -= 1;
            out.add_term(f, c * &Scalar::int(e[v] as i64));
        }
        out
    }

    pub fn eval(&self, point: &[Scalar]) -> Scalar {
        assert_eq!(point.len(), self.nvars());
        self.terms
            .iter()
            .map(|(e, c)| {
                e.iter()
                    .zip(point)
                    .filter(|(k, _)| **k > 0)
                    .fold(c.clone(), |acc, (k, x)| &acc * &x.pow(*k))
            })
            .sum()
    }

    /// Replaces variable `v` by `images[v]`; images share a common variable list.
    pub fn substitute(&self, images: &[Poly]) -> Poly {
        assert_eq!(images.len(), self.nvars());
        let target = images
            .first()
            .map(|p| p.vars.clone())
            .unwrap_or_else(|| self.vars.clone());
        let mut cache: BTreeMap<(usize, u32), Poly> = BTreeMap::new();
        let mut out = Poly::zero(target.clone());
        for (e, c) in &self.terms {
            let mut term = Poly::constant(target.clone(), c.clone());
            for (v, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let p = cache
                    .entry((v, k))
                    .or_insert_with(|| images[v].pow(k))
                    .clone();
                term = term.mul(&p);
            }
            out = out.add(&term);
        }
        out
    }

    /// Same polynomial over a different variable list, matching names.
    pub fn rebase(&self, target: &Vars) -> Result<Poly> {
        let map: Vec<usize> = self
            .vars
            .iter()
            .map(|name| {
                target
                    .iter()
                    .position(|t| t == name)
                    .ok_or(Error::VariableMismatch)
            })
            .collect::<Result<_>>()?;
        let mut out = Poly::zero(target.clone());
        for (e, c) in &self.terms {
            let mut f = vec![0; target.len()];
            for (v, &k) in e.iter().enumerate() {
                f[map[v]] += k;
            }
            out.add_term(f, c.clone());
        }
        Ok(out)
    }

    pub fn to_upoly(&self) -> Option<UPoly> {
        if self.nvars() != 1 {
            return None;
        }
        let deg = self.degree().unwrap_or(0) as usize;
        let mut coeffs = vec![Scalar::zero(); deg + 1];
        for (e, c) in &self.terms {
            coeffs[e[0] as usize] = c.clone();
        }
        Some(UPoly::new(coeffs))
    }
}

impl Ring for Poly {
    fn is_null(&self) -> bool {
        self.is_zero()
    }
    fn plus(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn negated(&self) -> Self {
        self.neg()
    }
    fn times(&self, other: &Self) -> Self {
        self.mul(other)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, k)| **k > 0)
                .map(|(v, k)| {
                    if *k == 1 {
                        self.vars[v].clone()
                    } else {
                        format!("{}^{k}", self.vars[v])
                    }
                })
                .collect();
            let (neg, abs) = if c.is_real() && c.re() < &Zero::zero() {
                (true, -c)
            } else {
                (false, c.clone())
            };
            let coef = if c.is_real() {
                abs.to_string()
            } else {
                format!("({abs})")
            };
            let body = match (mono.is_empty(), abs.is_one()) {
                (true, _) => coef,
                (false, true) => mono.join("*"),
                (false, false) => format!("{coef}*{}", mono.join("*")),
            };
            match (first, neg) {
                (true, true) => write!(f, "-{body}")?,
                (true, false) => write!(f, "{body}")?,
                (false, true) => write!(f, " - {body}")?,
                (false, false) => write!(f, " + {body}")?,
            }
            first = false;
        }
        Ok(())
    }
}
