//! Forms on the Heisenberg group `H₃ = ℝ³(x, y, z)` that are invariant
//! under the right action of `J = span{X̃₁ + αX̃₂, X̃₃}`.
//!
//! Left-invariant frame: `X₁ = ∂x`, `X₂ = ∂y + x∂z`, `X₃ = ∂z`, dual to
//! `ω₁ = dx`, `ω₂ = dy`, `ω₃ = dz − x dy`.
//! Right-invariant frame: `X̃₁ = ∂x + y∂z`, `X̃₂ = ∂y`, `X̃₃ = ∂z`.

use super::forms::{PolyForm, PolyVectorField};
use super::poly::{vars, Poly, Vars};
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::upoly::RootSet;

pub fn h3_vars() -> Vars {
    vars(&["x", "y", "z"])
}

fn coord(v: &Vars, i: usize) -> Poly {
    Poly::var(v.clone(), i)
}

pub fn left_frame(v: &Vars) -> [PolyVectorField; 3] {
    let one = Poly::one(v.clone());
    [
        PolyVectorField::from_terms(v.clone(), &[(0, one.clone())]),
        PolyVectorField::from_terms(v.clone(), &[(1, one.clone()), (2, coord(v, 0))]),
        PolyVectorField::from_terms(v.clone(), &[(2, one)]),
    ]
}

pub fn right_frame(v: &Vars) -> [PolyVectorField; 3] {
    let one = Poly::one(v.clone());
    [
        PolyVectorField::from_terms(v.clone(), &[(0, one.clone()), (2, coord(v, 1))]),
        PolyVectorField::from_terms(v.clone(), &[(1, one.clone())]),
        PolyVectorField::from_terms(v.clone(), &[(2, one)]),
    ]
}

/// Generators `X̃₁ + αX̃₂` and `X̃₃` of `J`.
pub fn j_generators(v: &Vars, alpha: &Scalar) -> [PolyVectorField; 2] {
    let [r1, r2, r3] = right_frame(v);
    [r1.add(&r2.scale(alpha)).expect("shared variables"), r3]
}

fn univariate(b: &Poly) -> Result<Poly> {
    if b.nvars() != 1 {
        return Err(Error::InvalidParameter(
            "profile functions must be polynomials in one variable".into(),
        ));
    }
    Ok(b.clone())
}

/// `ω = b₁(u) ω₁ + b₂(u) ω₂ + b₃(u) ω₃` with `u = y − αx`.
pub fn j_invariant_form(alpha: &Scalar, b: [&Poly; 3]) -> Result<PolyForm> {
    let v = h3_vars();
    let u = coord(&v, 1).sub(&coord(&v, 0).scale(alpha));
    let a: Vec<Poly> = b
        .iter()
        .map(|bi| Ok(univariate(bi)?.substitute(std::slice::from_ref(&u))))
        .collect::<Result<_>>()?;
    let mut w = PolyForm::zero(v.clone(), 1);
    w.add_term(&[0], &a[0]);
    w.add_term(&[1], &a[1].sub(&a[2].mul(&coord(&v, 0))));
    w.add_term(&[2], &a[2]);
    Ok(w)
}

/// `b₁b₃′ − b₁′b₃ + α(b₂b₃′ − b₂′b₃) − b₃²`.
pub fn h3_contact_polynomial(alpha: &Scalar, b1: &Poly, b2: &Poly, b3: &Poly) -> Result<Poly> {
    let (b1, b2, b3) = (univariate(b1)?, univariate(b2)?, univariate(b3)?);
    super::poly::check_vars(b1.vars(), b2.vars())?;
    super::poly::check_vars(b1.vars(), b3.vars())?;
    let d = |p: &Poly| p.derivative(0);
    let main = b1.mul(&d(&b3)).sub(&d(&b1).mul(&b3));
    let tw = b2.mul(&d(&b3)).sub(&d(&b2).mul(&b3)).scale(alpha);
    Ok(main.add(&tw).sub(&b3.mul(&b3)))
}

/// Equations `b₃(u) = 0`, `b₁(u) + αb₂(u) = 0` of the singular set, `u = y − αx`.
pub fn h3_singular_system(alpha: &Scalar, b1: &Poly, b2: &Poly, b3: &Poly) -> Result<(Poly, Poly)> {
    super::poly::check_vars(b1.vars(), b2.vars())?;
    Ok((univariate(b3)?, univariate(b1)?.add(&b2.scale(alpha))))
}

#[derive(Clone, Debug, PartialEq)]
pub enum H3Contact {
    /// No real root: contact on all of `H₃`.
    Everywhere,
    /// Fails along the planes `y − αx = r` for the listed real roots.
    FailsAt(RootSet),
    /// Identically zero.
    Nowhere,
}

/// Real roots of the contact polynomial, by Sturm sequences.
pub fn h3_contact_status(p: &Poly) -> Result<H3Contact> {
    let up = p
        .to_upoly()
        .ok_or_else(|| Error::InvalidParameter("expected a polynomial in u".into()))?;
    if up.is_zero() {
        return Ok(H3Contact::Nowhere);
    }
    // Common real roots of the real and imaginary parts.
    let real = if up.is_real() {
        up
    } else {
        up.real_part().gcd(&up.imag_part())
    };
    if !real.has_real_root() {
        return Ok(H3Contact::Everywhere);
    }
    let mut roots = real.roots();
    roots.roots.retain(|(r, _)| r.is_real());
    Ok(H3Contact::FailsAt(roots))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(coeffs: &[i64]) -> Poly {
        Poly::univariate(
            "u",
            &coeffs.iter().map(|&c| Scalar::int(c)).collect::<Vec<_>>(),
        )
    }

    #[test]
    fn frames_bracket() {
        let v = h3_vars();
        let [x1, x2, x3] = left_frame(&v);
        assert_eq!(x1.bracket(&x2).unwrap(), x3);
        let [r1, r2, r3] = right_frame(&v);
        assert_eq!(r1.bracket(&r2).unwrap(), r3.scale(&Scalar::int(-1)));
    }

    #[test]
    fn examples() {
        let zero = Scalar::int(0);
        let p = h3_contact_polynomial(&zero, &u(&[1]), &u(&[]), &u(&[0, 1])).unwrap();
        assert_eq!(p, u(&[1, 0, -1]));
        let H3Contact::FailsAt(r) = h3_contact_status(&p).unwrap() else {
            panic!("expected roots");
        };
        assert!(r.contains(&Scalar::int(1)) && r.contains(&Scalar::int(-1)));
        let c = h3_contact_polynomial(&zero, &u(&[]), &u(&[]), &u(&[3])).unwrap();
        assert_eq!(c, u(&[-9]));
        assert_eq!(h3_contact_status(&c).unwrap(), H3Contact::Everywhere);
        let z = h3_contact_polynomial(&zero, &u(&[1]), &u(&[2]), &u(&[])).unwrap();
        assert_eq!(h3_contact_status(&z).unwrap(), H3Contact::Nowhere);
    }

    #[test]
    fn form_is_j_invariant() {
        let alpha = Scalar::frac(2, 3);
        let w = j_invariant_form(&alpha, [&u(&[1, 2]), &u(&[0, 0, 1]), &u(&[-1, 1])]).unwrap();
        for g in j_generators(&h3_vars(), &alpha) {
            assert!(w.lie_derivative(&g).unwrap().is_zero());
        }
    }
}
