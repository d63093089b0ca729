//! The canonical Poisson bracket on first integrals of the Reeb field in
//! Darboux coordinates `x₁, …, x_{2p+1}`, where the contact form is
//! `dx_{2p+1} + Σ x_{2i−1} dx_{2i}`.

use super::poly::{check_vars, vars, Poly, Vars};
use crate::error::{Error, Result};

/// `x1, …, x{2p+1}`.
pub fn darboux_vars(p: usize) -> Vars {
    let names: Vec<String> = (1..=2 * p + 1).map(|i| format!("x{i}")).collect();
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    vars(&refs)
}

/// `{f₁, f₂} = Σ_i ∂f₂/∂x_{2i} ∂f₁/∂x_{2i−1} − ∂f₁/∂x_{2i} ∂f₂/∂x_{2i−1}`.
///
/// Both arguments must not depend on any variable past `x_{2p}`.
pub fn darboux_poisson(p: usize, f1: &Poly, f2: &Poly) -> Result<Poly> {
    check_vars(f1.vars(), f2.vars())?;
    let n = f1.nvars();
    if n < 2 * p {
        return Err(Error::DimensionMismatch {
            expected: 2 * p,
            got: n,
        });
    }
    for f in [f1, f2] {
        if let Some(v) = (2 * p..n).find(|&v| f.depends_on(v)) {
            return Err(Error::NotFirstIntegral(format!(
                "{f} depends on {}",
                f.vars()[v]
            )));
        }
    }
    let mut out = Poly::zero(f1.vars().clone());
    for i in 0..p {
        let (odd, even) = (2 * i, 2 * i + 1);
        out = out
            .add(&f2.derivative(even).mul(&f1.derivative(odd)))
            .sub(&f1.derivative(even).mul(&f2.derivative(odd)));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;

    #[test]
    fn canonical_pairs() {
        let v = darboux_vars(1);
        let x1 = Poly::var(v.clone(), 0);
        let x2 = Poly::var(v.clone(), 1);
        assert_eq!(darboux_poisson(1, &x1, &x2).unwrap(), Poly::one(v.clone()));
        assert_eq!(
            darboux_poisson(1, &x1.mul(&x1), &x2).unwrap(),
            x1.scale(&Scalar::int(2))
        );
        let x3 = Poly::var(v, 2);
        assert!(matches!(
            darboux_poisson(1, &x3, &x1),
            Err(Error::NotFirstIntegral(_))
        ));
    }
}
