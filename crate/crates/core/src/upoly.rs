//! Univariate polynomials over [`Scalar`], with exact real-root isolation by
//! Sturm sequences and exact root extraction over ℚ(i).

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::scalar::Scalar;

/// Coefficients run from the constant term upward; trailing zeros are trimmed.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct UPoly {
    coeffs: Vec<Scalar>,
}

/// Roots found exactly, with multiplicity, plus whatever factor is left over.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSet {
    pub roots: Vec<(Scalar, usize)>,
    pub unresolved: Option<UPoly>,
}

impl RootSet {
    pub fn contains(&self, r: &Scalar) -> bool {
        self.roots.iter().any(|(x, _)| x == r)
    }

    /// Roots repeated by multiplicity.
    pub fn multiset(&self) -> Vec<Scalar> {
        self.roots
            .iter()
            .flat_map(|(r, m)| std::iter::repeat_n(r.clone(), *m))
            .collect()
    }

    pub fn is_complete(&self) -> bool {
        self.unresolved.is_none()
    }
}

impl UPoly {
    pub fn new(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        UPoly::new(coeffs.iter().map(|&c| Scalar::int(c)).collect())
    }

    pub fn from_rationals(coeffs: Vec<BigRational>) -> Self {
        UPoly::new(coeffs.into_iter().map(Scalar::real).collect())
    }

    pub fn zero() -> Self {
        UPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Scalar) -> Self {
        UPoly::new(vec![c])
    }

    /// `x − r`.
    pub fn linear(r: &Scalar) -> Self {
        UPoly::new(vec![-r, Scalar::one()])
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    pub fn is_real(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_real)
    }

    pub fn real_part(&self) -> UPoly {
        UPoly::from_rationals(self.coeffs.iter().map(|c| c.re().clone()).collect())
    }

    pub fn imag_part(&self) -> UPoly {
        UPoly::from_rationals(self.coeffs.iter().map(|c| c.im().clone()).collect())
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        self.coeffs
            .iter()
            .rev()
            .fold(Scalar::zero(), |acc, c| &(&acc * x) + c)
    }

    /// Evaluation at a rational point; only the real part of each coefficient is used.
    pub fn eval_real(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c.re())
    }

    pub fn add(&self, other: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let z = Scalar::zero();
        UPoly::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&z) + other.coeffs.get(i).unwrap_or(&z))
                .collect(),
        )
    }

    pub fn sub(&self, other: &UPoly) -> UPoly {
        self.add(&other.scale(&Scalar::int(-1)))
    }

    pub fn scale(&self, s: &Scalar) -> UPoly {
        UPoly::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn mul(&self, other: &UPoly) -> UPoly {
        if self.is_zero() || other.is_zero() {
            return UPoly::zero();
        }
        let mut out = vec![Scalar::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        UPoly::new(out)
    }

    pub fn derivative(&self) -> UPoly {
        UPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * &Scalar::int(i as i64))
                .collect(),
        )
    }

    /// Quotient and remainder. Panics on division by zero.
    pub fn divrem(&self, d: &UPoly) -> (UPoly, UPoly) {
        let dl = d.lead().expect("division by zero polynomial");
        let dl_inv = dl.inv().expect("nonzero lead");
        let dd = d.coeffs.len() - 1;
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (UPoly::zero(), self.clone());
        }
        let mut q = vec![Scalar::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = &r[k + dd] * &dl_inv;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                let t = &c * dc;
                r[k + j] -= &t;
            }
            q[k] = c;
        }
        r.truncate(dd);
        (UPoly::new(q), UPoly::new(r))
    }

    pub fn monic(&self) -> UPoly {
        match self.lead() {
            None => UPoly::zero(),
            Some(l) => self.scale(&l.inv().expect("nonzero lead")),
        }
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &UPoly) -> UPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.divrem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn squarefree_part(&self) -> UPoly {
        if self.degree().unwrap_or(0) == 0 {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.divrem(&g).0.monic()
    }

    /// Canonical Sturm chain of a real polynomial.
    pub fn sturm_chain(&self) -> Vec<UPoly> {
        assert!(self.is_real(), "Sturm chains need real coefficients");
        let mut chain = vec![self.clone()];
        let mut next = self.derivative();
        while !next.is_zero() {
            let prev = chain.last().unwrap().clone();
            chain.push(next.clone());
            next = prev.divrem(&next).1.scale(&Scalar::int(-1));
        }
        chain
    }

    /// Number of distinct real roots of a real polynomial.
    pub fn count_real_roots(&self) -> usize {
        if self.degree().unwrap_or(0) == 0 {
            return 0;
        }
        let chain = self.squarefree_part().sturm_chain();
        let b = cauchy_bound(self);
        sign_changes(&chain, &-b.clone()) - sign_changes(&chain, &b)
    }

    pub fn has_real_root(&self) -> bool {
        self.count_real_roots() > 0
    }

    /// Disjoint half-open intervals `(lo, hi]`, one per distinct real root.
    pub fn isolate_real_roots(&self) -> Vec<(BigRational, BigRational)> {
        if self.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        let chain = self.squarefree_part().sturm_chain();
        let b = cauchy_bound(self);
        let mut out = Vec::new();
        let mut stack = vec![(-b.clone(), b)];
        while let Some((lo, hi)) = stack.pop() {
            let n = sign_changes(&chain, &lo) - sign_changes(&chain, &hi);
            match n {
                0 => {}
                1 => out.push((lo, hi)),
                _ => {
                    let mid = (&lo + &hi) / BigRational::from_integer(2.into());
                    stack.push((mid.clone(), hi));
                    stack.push((lo, mid));
                }
            }
        }
        out.sort();
        out
    }

    /// Distinct rational real roots.
    pub fn rational_real_roots(&self) -> Vec<BigRational> {
        let g = if self.is_real() {
            self.clone()
        } else {
            self.real_part().gcd(&self.imag_part())
        };
        if g.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        let s = g.squarefree_part();
        let ints = integer_coeffs(&s);
        let denom_bound = ints.last().unwrap().abs();
        let width = BigRational::new(BigInt::one(), &denom_bound * &denom_bound * 2);
        let chain = s.sturm_chain();
        let mut roots = Vec::new();
        for (mut lo, mut hi) in s.isolate_real_roots() {
            while &hi - &lo >= width {
                let mid = (&lo + &hi) / BigRational::from_integer(2.into());
                if sign_changes(&chain, &lo) - sign_changes(&chain, &mid) == 1 {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
            let cand = simplest_between(&lo, &hi);
            if s.eval_real(&cand).is_zero() {
                roots.push(cand);
            }
        }
        roots
    }

    /// Every root in ℚ(i) that can be certified, with multiplicity.
    ///
    /// Rational roots are always found. Non-real Gaussian roots are searched
    /// for real polynomials of modest height; anything else is returned as
    /// the unresolved cofactor.
    pub fn roots(&self) -> RootSet {
        assert!(!self.is_zero(), "roots of the zero polynomial");
        let mut rest = self.monic();
        let mut roots = Vec::new();
        for r in self.rational_real_roots() {
            let r = Scalar::real(r);
            let m = rest.strip_factor(&UPoly::linear(&r));
            roots.push((r, m));
        }
        if rest.degree().unwrap_or(0) >= 2 && rest.is_real() {
            for (a, b) in gaussian_pairs(&rest) {
                let z = Scalar::new(a.clone(), b.clone());
                let quad = UPoly::linear(&z).mul(&UPoly::linear(&z.conj()));
                let m = rest.strip_factor(&quad);
                if m > 0 {
                    roots.push((z.conj(), m));
                    roots.push((z, m));
                }
            }
        }
        RootSet {
            roots,
            unresolved: (rest.degree().unwrap_or(0) > 0).then_some(rest),
        }
    }

    fn strip_factor(&mut self, f: &UPoly) -> usize {
        let mut m = 0;
        loop {
            let (q, r) = self.divrem(f);
            if !r.is_zero() {
                return m;
            }
            *self = q;
            m += 1;
        }
    }
}

impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let cs = if c.is_real() {
                c.to_string()
            } else {
                format!("({c})")
            };
            parts.push(match i {
                0 => cs,
                1 => format!("{cs}*x"),
                _ => format!("{cs}*x^{i}"),
            });
        }
        write!(f, "{}", parts.join(" + "))
    }
}

fn sign_changes(chain: &[UPoly], x: &BigRational) -> usize {
    let mut last = 0;
    let mut n = 0;
    for p in chain {
        let v = p.eval_real(x);
        let s = if v.is_positive() {
            1
        } else if v.is_negative() {
            -1
        } else {
            0
        };
        if s != 0 {
            if last != 0 && s != last {
                n += 1;
            }
            last = s;
        }
    }
    n
}

/// `1 + max |a_i / a_n|`, a strict bound on the modulus of every root.
fn cauchy_bound(p: &UPoly) -> BigRational {
    let lead = p.lead().expect("nonzero").norm();
    let m = p.coeffs[..p.coeffs.len() - 1]
        .iter()
        .map(|c| c.norm() / &lead)
        .fold(BigRational::zero(), |a, b| if b > a { b } else { a });
    // |a_i/a_n| ≤ norm ratio + 1 in either case, which keeps the bound rational.
    BigRational::one() + m + BigRational::one()
}

/// Primitive integer coefficients of a real polynomial, positive leading term.
fn integer_coeffs(p: &UPoly) -> Vec<BigInt> {
    let l = p
        .coeffs
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.re().denom()));
    let mut ints: Vec<BigInt> = p
        .coeffs
        .iter()
        .map(|c| (c.re() * BigRational::from_integer(l.clone())).to_integer())
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if !g.is_zero() {
        for c in &mut ints {
            *c /= &g;
        }
    }
    if ints.last().is_some_and(Signed::is_negative) {
        for c in &mut ints {
            *c = -c.clone();
        }
    }
    ints
}

/// The rational of least denominator in the closed interval `[lo, hi]`.
pub fn simplest_between(lo: &BigRational, hi: &BigRational) -> BigRational {
    assert!(lo <= hi);
    if !lo.is_positive() && !hi.is_negative() {
        return BigRational::zero();
    }
    if hi.is_negative() {
        return -simplest_between(&-hi.clone(), &-lo.clone());
    }
    let fl = lo.floor();
    if &fl == lo {
        return fl;
    }
    let next = &fl + BigRational::one();
    if &next <= hi {
        return next;
    }
    let inner = simplest_between(&(hi - &fl).recip(), &(lo - &fl).recip());
    fl + inner.recip()
}

/// Candidate non-real roots `a ± bi` (b > 0) of a real monic polynomial with
/// rational coefficients, found by bounded search on the integer monic
/// transform. Returns nothing when the search space is too large.
fn gaussian_pairs(p: &UPoly) -> Vec<(BigRational, BigRational)> {
    const MAX_RADIUS: i64 = 1000;
    let ints = integer_coeffs(p);
    let n = ints.len() - 1;
    let lead = ints[n].clone();
    // m(y) = lead^{n-1} p(y / lead) is monic with integer coefficients.
    let monic: Vec<BigInt> = (0..=n)
        .map(|i| &ints[i] * num_traits::pow(lead.clone(), n - i).clone() / &lead)
        .collect();
    let Some(c0) = monic[0].to_i128() else {
        return Vec::new();
    };
    if c0 == 0 {
        return Vec::new();
    }
    let bound: BigInt = monic[..n].iter().map(|c| c.abs()).max().unwrap_or_default() + 1;
    let radius = match bound.to_i64() {
        Some(r) if r <= MAX_RADIUS => r,
        _ => return Vec::new(),
    };
    let mut out = Vec::new();
    for a in -radius..=radius {
        for b in 1..=radius {
            let t = (a * a + b * b) as i128;
            if t > (radius * radius) as i128 || c0 % t != 0 {
                continue;
            }
            if gaussian_eval_is_zero(&monic, a, b) {
                let lead_q = BigRational::from_integer(lead.clone());
                out.push((
                    BigRational::from_integer(a.into()) / &lead_q,
                    BigRational::from_integer(b.into()) / &lead_q,
                ));
            }
        }
    }
    out
}

fn gaussian_eval_is_zero(coeffs: &[BigInt], a: i64, b: i64) -> bool {
    let (a, b) = (BigInt::from(a), BigInt::from(b));
    let (mut re, mut im) = (BigInt::zero(), BigInt::zero());
    for c in coeffs.iter().rev() {
        let nre = &re * &a - &im * &b + c;
        let nim = &re * &b + &im * &a;
        re = nre;
        im = nim;
    }
    re.is_zero() && im.is_zero()
}
