//! Constructors for the explicit algebras and families, each paired with a
//! distinguished covector and its expected Cartan class.
//!
//! Entries are addressable by id strings of the form `name[:key=val,…]`,
//! where a value is a rational (`-3/7`) or a bracketed list (`[1,-2]`):
//!
//! | id | algebra |
//! |----|---------|
//! | `heisenberg:p=2` | `h_{2p+1}` |
//! | `abelian:n=4` | abelian |
//! | `h3`, `solvable1`, `solvable_b:b=2`, `sl2:lambda=1`, `so3` | dimension 3 |
//! | `diag_ii_a:a=,b=,c=,d=`, `diag_ii_b:b=,c=,d=`, `diag_ii_c:a=,b=,c=,d=` | dimension 5 |
//! | `nondiag_case1:c=,d=,e=,f=`, `nondiag_case2:a=,c=,d=`, `nondiag_case4:a=,b=,c=,d=` | dimension 5 |
//! | `filiform:n=5` | `L_n` |
//! | `filiform_contact:p=4,a=[0,2,1]` | `L_{2p+1} + Σ a_k ψ_{k,2k+2}` |
//! | `mu_c9:a=[0,2,1]` | the 9-dimensional table, hard-coded |
//! | `frobenius:p=3,a=[1,-2]`, `frobenius_base:p=3` | model family |
//! | `frobenius_sample` | a 4-dimensional frobeniusian algebra in adapted basis |
//!
//! Missing numeric parameters default to 0, except `p` (1), `n` (5 for
//! `filiform`, required for `abelian`), `lambda` (1) and `b` in `solvable_b`
//! (required).
//!
//! The so(3) entry stores `[X2,X3] = −X1`, `[X3,X1] = −X2`, `[X1,X2] = −X3`,
//! so that `dω1 = ω2∧ω3` holds cyclically under `dω(X,Y) = −ω([X,Y])`.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::{BilinearMap, LieAlgebra};
use crate::error::{Error, Result};
use crate::exterior::DualForm;
use crate::lie::jacobi_check;
use crate::scalar::Scalar;

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub id: String,
    pub params: Vec<(String, Scalar)>,
    pub algebra: Arc<LieAlgebra>,
    pub distinguished_form: DualForm,
    pub expected_class: usize,
    /// Whether the family's constraints for `expected_class` hold at these
    /// parameters. When false the class is strictly smaller.
    pub constraints_hold: bool,
    pub nilpotent: bool,
    pub description: String,
}

impl CatalogEntry {
    fn new(
        id: String,
        params: Vec<(String, Scalar)>,
        algebra: LieAlgebra,
        form_index: usize,
        expected_class: usize,
        description: &str,
    ) -> Self {
        let algebra = Arc::new(algebra);
        let distinguished_form = DualForm::basis(algebra.clone(), form_index);
        CatalogEntry {
            id,
            params,
            algebra,
            distinguished_form,
            expected_class,
            constraints_hold: true,
            nilpotent: false,
            description: description.to_string(),
        }
    }

    fn nilpotent(mut self) -> Self {
        self.nilpotent = true;
        self
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }
}

/// 1-based bracket builder.
struct Table(BilinearMap);

impl Table {
    fn new(n: usize) -> Self {
        Table(BilinearMap::zero(n))
    }

    fn set(&mut self, i: usize, j: usize, terms: &[(usize, Scalar)]) -> &mut Self {
        for (k, c) in terms {
            self.0.add_coeff(i - 1, j - 1, k - 1, c);
        }
        self
    }

    fn build(self) -> LieAlgebra {
        LieAlgebra::from_map(self.0)
    }
}

fn int(n: i64) -> Scalar {
    Scalar::int(n)
}

fn fmt_params(ps: &[(String, Scalar)]) -> String {
    ps.iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(",")
}

fn fmt_list(xs: &[Scalar]) -> String {
    let v: Vec<String> = xs.iter().map(ToString::to_string).collect();
    format!("[{}]", v.join(","))
}

fn named(prefix: &str, xs: &[Scalar]) -> Vec<(String, Scalar)> {
    xs.iter()
        .enumerate()
        .map(|(i, x)| (format!("{prefix}{}", i + 1), x.clone()))
        .collect()
}

pub fn heisenberg(p: usize) -> CatalogEntry {
    assert!(p >= 1);
    let n = 2 * p + 1;
    let mut t = Table::new(n);
    for k in 1..=p {
        t.set(2 * k - 1, 2 * k, &[(n, int(1))]);
    }
    CatalogEntry::new(
        format!("heisenberg:p={p}"),
        vec![("p".into(), int(p as i64))],
        t.build(),
        n - 1,
        n,
        "Heisenberg algebra; the last dual form is a contact form",
    )
    .nilpotent()
}

pub fn abelian(n: usize) -> CatalogEntry {
    assert!(n >= 1);
    let mut e = CatalogEntry::new(
        format!("abelian:n={n}"),
        vec![("n".into(), int(n as i64))],
        LieAlgebra::abelian(n),
        0,
        1,
        "abelian algebra; every nonzero form has class 1",
    );
    e.nilpotent = true;
    e
}

#[derive(Clone, Debug, PartialEq)]
pub enum Dim3Kind {
    Heisenberg,
    /// `[X1,X2] = X3 + X1`.
    Solvable1,
    /// `[X1,X2] = X3 + X1`, `[X2,X3] = bX1`, `b ≠ 0`.
    SolvableB(Scalar),
    /// `[X1,X2] = X3`, `[X1,X3] = λX1`, `[X2,X3] = −λX2`.
    Sl2(Scalar),
    So3,
}

pub fn dim3(kind: Dim3Kind) -> Result<CatalogEntry> {
    let mut t = Table::new(3);
    let (id, params, desc) = match &kind {
        Dim3Kind::Heisenberg => {
            t.set(1, 2, &[(3, int(1))]);
            ("h3".to_string(), vec![], "Heisenberg algebra h3")
        }
        Dim3Kind::Solvable1 => {
            t.set(1, 2, &[(3, int(1)), (1, int(1))]);
            (
                "solvable1".to_string(),
                vec![],
                "solvable deformation [X1,X2] = X3 + X1",
            )
        }
        Dim3Kind::SolvableB(b) => {
            if b.is_zero() {
                return Err(Error::InvalidParameter("solvable_b needs b ≠ 0".into()));
            }
            t.set(1, 2, &[(3, int(1)), (1, int(1))]);
            t.set(2, 3, &[(1, b.clone())]);
            (
                format!("solvable_b:b={b}"),
                vec![("b".to_string(), b.clone())],
                "solvable deformation with [X2,X3] = bX1",
            )
        }
        Dim3Kind::Sl2(l) => {
            t.set(1, 2, &[(3, int(1))]);
            t.set(1, 3, &[(1, l.clone())]);
            t.set(2, 3, &[(2, -l)]);
            (
                format!("sl2:lambda={l}"),
                vec![("lambda".to_string(), l.clone())],
                "sl(2) for lambda ≠ 0",
            )
        }
        Dim3Kind::So3 => {
            t.set(2, 3, &[(1, int(-1))]);
            t.set(1, 3, &[(2, int(1))]);
            t.set(1, 2, &[(3, int(-1))]);
            (
                "so3".to_string(),
                vec![],
                "so(3); every nonzero form has class 3",
            )
        }
    };
    let mut e = CatalogEntry::new(id, params, t.build(), 2, 3, desc);
    e.nilpotent = kind == Dim3Kind::Heisenberg;
    Ok(e)
}

#[derive(Clone, Debug, PartialEq)]
pub enum Dim5Variant {
    DiagIiA {
        a: Scalar,
        b: Scalar,
        c: Scalar,
        d: Scalar,
    },
    DiagIiB {
        b: Scalar,
        c: Scalar,
        d: Scalar,
    },
    DiagIiC {
        a: Scalar,
        b: Scalar,
        c: Scalar,
        d: Scalar,
    },
    NondiagCase1 {
        c: Scalar,
        d: Scalar,
        e: Scalar,
        f: Scalar,
    },
    NondiagCase2 {
        a: Scalar,
        c: Scalar,
        d: Scalar,
    },
    NondiagCase4 {
        a: Scalar,
        b: Scalar,
        c: Scalar,
        d: Scalar,
    },
}

impl Dim5Variant {
    pub fn name(&self) -> &'static str {
        match self {
            Dim5Variant::DiagIiA { .. } => "diag_ii_a",
            Dim5Variant::DiagIiB { .. } => "diag_ii_b",
            Dim5Variant::DiagIiC { .. } => "diag_ii_c",
            Dim5Variant::NondiagCase1 { .. } => "nondiag_case1",
            Dim5Variant::NondiagCase2 { .. } => "nondiag_case2",
            Dim5Variant::NondiagCase4 { .. } => "nondiag_case4",
        }
    }

    pub fn names() -> &'static [&'static str] {
        &[
            "diag_ii_a",
            "diag_ii_b",
            "diag_ii_c",
            "nondiag_case1",
            "nondiag_case2",
            "nondiag_case4",
        ]
    }

    /// Parameter names of a variant, in constructor order.
    pub fn param_names(name: &str) -> Option<&'static [&'static str]> {
        Some(match name {
            "diag_ii_a" | "diag_ii_c" | "nondiag_case4" => &["a", "b", "c", "d"],
            "diag_ii_b" => &["b", "c", "d"],
            "nondiag_case1" => &["c", "d", "e", "f"],
            "nondiag_case2" => &["a", "c", "d"],
            _ => return None,
        })
    }

    /// Builds a variant from its name and parameters in `param_names` order.
    pub fn from_values(name: &str, v: &[Scalar]) -> Result<Self> {
        let names = Dim5Variant::param_names(name)
            .ok_or_else(|| Error::UnknownCatalog(name.to_string()))?;
        if v.len() != names.len() {
            return Err(Error::InvalidParameter(format!(
                "{name} takes {} parameters, got {}",
                names.len(),
                v.len()
            )));
        }
        let c = |i: usize| v[i].clone();
        Ok(match name {
            "diag_ii_a" => Dim5Variant::DiagIiA {
                a: c(0),
                b: c(1),
                c: c(2),
                d: c(3),
            },
            "diag_ii_b" => Dim5Variant::DiagIiB {
                b: c(0),
                c: c(1),
                d: c(2),
            },
            "diag_ii_c" => Dim5Variant::DiagIiC {
                a: c(0),
                b: c(1),
                c: c(2),
                d: c(3),
            },
            "nondiag_case1" => Dim5Variant::NondiagCase1 {
                c: c(0),
                d: c(1),
                e: c(2),
                f: c(3),
            },
            "nondiag_case2" => Dim5Variant::NondiagCase2 {
                a: c(0),
                c: c(1),
                d: c(2),
            },
            _ => Dim5Variant::NondiagCase4 {
                a: c(0),
                b: c(1),
                c: c(2),
                d: c(3),
            },
        })
    }

    fn values(&self) -> Vec<Scalar> {
        match self.clone() {
            Dim5Variant::DiagIiA { a, b, c, d }
            | Dim5Variant::DiagIiC { a, b, c, d }
            | Dim5Variant::NondiagCase4 { a, b, c, d } => vec![a, b, c, d],
            Dim5Variant::DiagIiB { b, c, d } => vec![b, c, d],
            Dim5Variant::NondiagCase1 { c, d, e, f } => vec![c, d, e, f],
            Dim5Variant::NondiagCase2 { a, c, d } => vec![a, c, d],
        }
    }
}

pub fn dim5(variant: Dim5Variant) -> CatalogEntry {
    let mut t = Table::new(5);
    let one = int(1);
    match &variant {
        Dim5Variant::DiagIiA { a, b, c, d } => {
            let ab = a * c + b * d;
            t.set(1, 2, &[(5, one), (1, a.clone()), (2, b.clone())])
                .set(1, 3, &[(3, c.clone())])
                .set(1, 4, &[(4, -c)])
                .set(2, 3, &[(3, d.clone())])
                .set(2, 4, &[(4, -d)])
                .set(3, 4, &[(5, int(1))])
                .set(3, 5, &[(3, ab.clone())])
                .set(4, 5, &[(4, -ab)]);
        }
        Dim5Variant::DiagIiB { b, c, d } => {
            let bd = b * d;
            t.set(1, 2, &[(5, one), (2, b.clone())])
                .set(1, 3, &[(3, c.clone())])
                .set(1, 4, &[(4, b - c)])
                .set(2, 3, &[(3, d.clone())])
                .set(2, 4, &[(4, -d)])
                .set(3, 4, &[(2, b.clone()), (5, int(1))])
                .set(3, 5, &[(3, bd.clone())])
                .set(4, 5, &[(4, -bd)]);
        }
        Dim5Variant::DiagIiC { a, b, c, d } => {
            let ab = a * c + b * d;
            t.set(1, 2, &[(5, one), (1, a.clone()), (2, b.clone())])
                .set(1, 3, &[(3, c.clone())])
                .set(1, 4, &[(4, b - c)])
                .set(2, 3, &[(3, d.clone())])
                .set(2, 4, &[(4, -(a + d))])
                .set(3, 4, &[(1, a.clone()), (2, b.clone()), (5, int(1))])
                .set(3, 5, &[(3, ab.clone())])
                .set(4, 5, &[(4, -ab)]);
        }
        Dim5Variant::NondiagCase1 { c, d, e, f } => {
            let s = c * e + d * f;
            t.set(1, 2, &[(5, one)])
                .set(3, 4, &[(3, e.clone()), (4, f.clone()), (5, int(1))])
                .set(1, 3, &[(2, c.clone())])
                .set(1, 4, &[(2, d.clone())])
                .set(2, 3, &[(1, -c)])
                .set(2, 4, &[(1, -d)])
                .set(1, 5, &[(2, -&s)])
                .set(2, 5, &[(1, s)]);
        }
        Dim5Variant::NondiagCase2 { a, c, d } => {
            let two_a = a * &int(2);
            let s = &two_a * c;
            t.set(1, 2, &[(3, two_a.clone()), (5, one)])
                .set(3, 4, &[(3, two_a), (5, int(1))])
                .set(1, 3, &[(2, c.clone())])
                .set(1, 4, &[(1, a.clone()), (2, d.clone())])
                .set(2, 3, &[(1, -c)])
                .set(2, 4, &[(1, -d), (2, a.clone())])
                .set(1, 5, &[(2, -&s)])
                .set(2, 5, &[(1, s)]);
        }
        Dim5Variant::NondiagCase4 { a, b, c, d } => {
            let two = int(2);
            let s = &(a * c - b * d) * &two;
            let z = [(3, a * &two), (4, -(b * &two)), (5, one)];
            t.set(1, 2, &z)
                .set(3, 4, &z)
                .set(1, 3, &[(1, b.clone()), (2, c.clone())])
                .set(1, 4, &[(1, a.clone()), (2, d.clone())])
                .set(2, 3, &[(1, -c), (2, b.clone())])
                .set(2, 4, &[(1, -d), (2, a.clone())])
                .set(1, 5, &[(2, -&s)])
                .set(2, 5, &[(1, s)]);
        }
    }
    let names = Dim5Variant::param_names(variant.name()).unwrap();
    let params: Vec<(String, Scalar)> = names
        .iter()
        .map(|n| n.to_string())
        .zip(variant.values())
        .collect();
    CatalogEntry::new(
        format!("{}:{}", variant.name(), fmt_params(&params)),
        params,
        t.build(),
        4,
        5,
        "five-dimensional quadratic deformation of h5",
    )
}

/// `L_n`: `[e0, e_i] = e_{i+1}` for `1 ≤ i ≤ n−2`, basis `e0..e_{n−1}`.
pub fn filiform_model(n: usize) -> CatalogEntry {
    assert!(n >= 3);
    let mut m = BilinearMap::zero(n);
    for i in 1..n - 1 {
        m.set_coeff(0, i, i + 1, int(1));
    }
    let labels = (0..n).map(|i| format!("e{i}")).collect();
    CatalogEntry::new(
        format!("filiform:n={n}"),
        vec![("n".into(), int(n as i64))],
        LieAlgebra::from_map(m).with_labels(labels),
        n - 1,
        3,
        "model filiform algebra",
    )
    .nilpotent()
}

fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for t in 0..k {
        acc = acc * (n - t) / (t + 1);
    }
    acc
}

/// `ψ_{k,2k+2}` on `L_{2p+1}`: for `1 ≤ i ≤ k < j`,
/// `ψ(e_i, e_j) = (−1)^{k−i} C(j−k−1, k−i) e_{i+j+1}`, zero past `e_{2p}`.
pub fn filiform_psi(p: usize, k: usize) -> BilinearMap {
    assert!(k >= 1 && k < p);
    let n = 2 * p + 1;
    let s = 2 * k + 2;
    let mut m = BilinearMap::zero(n);
    for i in 1..=k {
        for j in k + 1..n {
            let target = s + i + j - 2 * k - 1;
            if target >= n {
                continue;
            }
            let b = binomial((j - k - 1) as i64, (k - i) as i64);
            if b.is_zero() {
                continue;
            }
            let sign = if (k - i) % 2 == 0 { 1 } else { -1 };
            let c = Scalar::real(num_rational::BigRational::from_integer(b * sign));
            m.set_coeff(i, j, target, c);
        }
    }
    m
}

/// The quantities `A_1, …, A_{p−1}`; the filiform algebra is contact iff all are nonzero.
/// `a[m−1]` is the coefficient of `ψ_{m,2m+2}`.
pub fn contact_conditions(p: usize, a: &[Scalar]) -> Vec<Scalar> {
    assert_eq!(a.len(), p - 1);
    (1..p)
        .map(|i| {
            (0..i)
                .map(|k| {
                    let m = p - i + k;
                    let b = binomial((2 * i - k - 2) as i64, k as i64);
                    let b = Scalar::real(num_rational::BigRational::from_integer(b));
                    let term = &a[m - 1] * &b;
                    if k % 2 == 0 {
                        term
                    } else {
                        -term
                    }
                })
                .sum()
        })
        .collect()
}

pub fn filiform_contact(p: usize, a: &[Scalar]) -> Result<CatalogEntry> {
    if p < 2 {
        return Err(Error::InvalidParameter(
            "filiform_contact needs p ≥ 2".into(),
        ));
    }
    if a.len() != p - 1 {
        return Err(Error::InvalidParameter(format!(
            "filiform_contact:p={p} takes {} coefficients, got {}",
            p - 1,
            a.len()
        )));
    }
    let n = 2 * p + 1;
    let mut m = filiform_model(n).algebra.map().clone();
    for (k, ak) in a.iter().enumerate() {
        m = m.add(&filiform_psi(p, k + 1).scale(ak));
    }
    let labels = (0..n).map(|i| format!("e{i}")).collect();
    let mut e = CatalogEntry::new(
        format!("filiform_contact:p={p},a={}", fmt_list(a)),
        named("a", a),
        LieAlgebra::from_map(m).with_labels(labels),
        n - 1,
        n,
        "filiform deformation of L_{2p+1}",
    )
    .nilpotent();
    e.constraints_hold = contact_conditions(p, a).iter().all(|x| !x.is_zero());
    Ok(e)
}

/// The nine-dimensional filiform table, written out entry by entry.
pub fn mu_c9(a14: &Scalar, a26: &Scalar, a38: &Scalar) -> CatalogEntry {
    let mut m = BilinearMap::zero(9);
    for i in 1..=7 {
        m.set_coeff(0, i, i + 1, int(1));
    }
    let two = int(2);
    let three = int(3);
    let entries = [
        (1, 2, 4, a14.clone()),
        (1, 3, 5, a14.clone()),
        (1, 4, 6, a14 - a26),
        (1, 5, 7, a14 - &(&two * a26)),
        (1, 6, 8, &(a14 - &(&three * a26)) + a38),
        (2, 3, 6, a26.clone()),
        (2, 4, 7, a26.clone()),
        (2, 5, 8, a26 - a38),
        (3, 4, 8, a38.clone()),
    ];
    for (i, j, k, c) in entries {
        m.add_coeff(i, j, k, &c);
    }
    let a = [a14.clone(), a26.clone(), a38.clone()];
    let labels = (0..9).map(|i| format!("e{i}")).collect();
    let mut e = CatalogEntry::new(
        format!("mu_c9:a={}", fmt_list(&a)),
        vec![
            ("a14".into(), a14.clone()),
            ("a26".into(), a26.clone()),
            ("a38".into(), a38.clone()),
        ],
        LieAlgebra::from_map(m).with_labels(labels),
        8,
        9,
        "nine-dimensional contact filiform algebra",
    )
    .nilpotent();
    e.constraints_hold = contact_conditions(4, &a).iter().all(|x| !x.is_zero());
    e
}

/// `a14` putting `mu_c9(a14, a26, a38)` on its Jacobi locus
/// `3a26² − a26·a38 − 2a14·a38 = 0`; needs `a38 ≠ 0`.
pub fn mu_c9_jacobi_a14(a26: &Scalar, a38: &Scalar) -> Option<Scalar> {
    let num = a26 * &(&(&int(3) * a26) - a38);
    (&int(2) * a38).inv().map(|d| &num * &d)
}

/// A contact point on the Jacobi locus: `a = [12, 3, 1]`, with `A = (1, 2, 4)`.
pub fn mu_c9_reference() -> CatalogEntry {
    mu_c9(&int(12), &int(3), &int(1))
}

/// The model `g_{a_1..a_{p−1}}`:
/// `[X1,X2] = −X1`, `[X_{2k+1},X_{2k+2}] = −X1`,
/// `[X2,X_{2k+1}] = −a_k X_{2k+1}`, `[X2,X_{2k+2}] = (1+a_k) X_{2k+2}`.
pub fn frobenius_model(p: usize, a: &[Scalar]) -> Result<CatalogEntry> {
    if p < 1 || a.len() + 1 != p {
        return Err(Error::InvalidParameter(format!(
            "frobenius:p={p} takes {} parameters, got {}",
            p.saturating_sub(1),
            a.len()
        )));
    }
    let mut t = Table::new(2 * p);
    t.set(1, 2, &[(1, int(-1))]);
    for (k, ak) in a.iter().enumerate() {
        let (u, v) = (2 * k + 3, 2 * k + 4);
        t.set(u, v, &[(1, int(-1))]);
        t.set(2, u, &[(u, -ak)]);
        t.set(2, v, &[(v, ak + &int(1))]);
    }
    Ok(CatalogEntry::new(
        format!("frobenius:p={p},a={}", fmt_list(a)),
        named("a", a),
        t.build(),
        0,
        2 * p,
        "frobeniusian model; X2 is the principal element",
    ))
}

/// `𝔣`, the model with every parameter zero.
pub fn frobenius_base(p: usize) -> Result<CatalogEntry> {
    let mut e = frobenius_model(p, &vec![Scalar::zero(); p.saturating_sub(1)])?;
    e.id = format!("frobenius_base:p={p}");
    Ok(e)
}

/// `ψ_k(X2, X_{2k+1}) = −X_{2k+1}`, `ψ_k(X2, X_{2k+2}) = X_{2k+2}`, so that
/// the model is `𝔣 + Σ a_k ψ_k`.
pub fn psi_cocycles(p: usize) -> Vec<BilinearMap> {
    (1..p)
        .map(|k| {
            let mut m = BilinearMap::zero(2 * p);
            m.set_coeff(1, 2 * k, 2 * k, int(-1));
            m.set_coeff(1, 2 * k + 1, 2 * k + 1, int(1));
            m
        })
        .collect()
}

/// A four-dimensional frobeniusian algebra with `dω1 = ω1∧ω2 + ω3∧ω4`, not
/// itself in model form; exponents `(2,0,1,1)` contract it onto the model.
pub fn frobenius_sample() -> CatalogEntry {
    let mut t = Table::new(4);
    t.set(
        1,
        2,
        &[(1, int(-1)), (2, int(-5)), (3, int(2)), (4, int(-1))],
    )
    .set(1, 3, &[(2, int(-5)), (3, int(3)), (4, int(-2))])
    .set(1, 4, &[(2, int(-1)), (3, int(-1)), (4, int(-2))])
    .set(2, 3, &[(2, int(1)), (3, int(-1))])
    .set(2, 4, &[(2, int(2)), (4, int(2))])
    .set(3, 4, &[(1, int(-1)), (2, int(1)), (4, int(3))]);
    CatalogEntry::new(
        "frobenius_sample".into(),
        vec![],
        t.build(),
        0,
        4,
        "frobeniusian algebra in adapted basis",
    )
}

/// One entry per family at fixed generic parameters.
pub fn standard_suite() -> Vec<CatalogEntry> {
    let q = Scalar::frac;
    let mut v = vec![abelian(4)];
    for p in 1..=3 {
        v.push(heisenberg(p));
    }
    for kind in [
        Dim3Kind::Heisenberg,
        Dim3Kind::Solvable1,
        Dim3Kind::SolvableB(int(2)),
        Dim3Kind::Sl2(int(1)),
        Dim3Kind::So3,
    ] {
        v.push(dim3(kind).unwrap());
    }
    let vals = [q(1, 2), int(-3), int(2), q(5, 3)];
    for name in Dim5Variant::names() {
        let k = Dim5Variant::param_names(name).unwrap().len();
        v.push(dim5(Dim5Variant::from_values(name, &vals[..k]).unwrap()));
    }
    for n in [4, 5, 7, 9] {
        v.push(filiform_model(n));
    }
    v.push(filiform_contact(3, &[int(1), int(2)]).unwrap());
    v.push(mu_c9_reference());
    v.push(frobenius_model(2, &[q(1, 2)]).unwrap());
    v.push(frobenius_model(3, &[int(1), int(-2)]).unwrap());
    v.push(frobenius_base(3).unwrap());
    v.push(frobenius_sample());
    v
}

#[derive(Clone, Debug, PartialEq)]
enum Value {
    One(Scalar),
    List(Vec<Scalar>),
}

/// A parsed catalog id.
#[derive(Clone, Debug, PartialEq)]
pub struct CatalogId {
    pub name: String,
    params: BTreeMap<String, Value>,
}

impl CatalogId {
    pub fn parse(id: &str) -> Result<Self> {
        let id = id.trim();
        let (name, rest) = match id.split_once(':') {
            Some((n, r)) => (n.trim(), r),
            None => (id, ""),
        };
        if name.is_empty() {
            return Err(Error::Parse("empty catalog name".into()));
        }
        let mut params = BTreeMap::new();
        for item in split_top_level(rest)? {
            let (k, v) = item
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected key=value, got {item:?}")))?;
            let v = v.trim();
            let value = if let Some(inner) = v.strip_prefix('[') {
                let inner = inner
                    .strip_suffix(']')
                    .ok_or_else(|| Error::Parse(format!("unterminated list {v:?}")))?;
                let items = inner
                    .split(',')
                    .map(str::trim)
                    .filter(|s| !s.is_empty())
                    .map(|s| s.parse::<Scalar>())
                    .collect::<Result<Vec<_>>>()?;
                Value::List(items)
            } else {
                Value::One(v.parse()?)
            };
            if params.insert(k.trim().to_string(), value).is_some() {
                return Err(Error::Parse(format!("duplicate key {k:?}")));
            }
        }
        Ok(CatalogId {
            name: name.to_string(),
            params,
        })
    }

    fn check_keys(&self, allowed: &[&str]) -> Result<()> {
        for k in self.params.keys() {
            if !allowed.contains(&k.as_str()) {
                return Err(Error::InvalidParameter(format!(
                    "{} does not take {k:?}",
                    self.name
                )));
            }
        }
        Ok(())
    }

    fn scalar(&self, key: &str, default: Option<Scalar>) -> Result<Scalar> {
        match self.params.get(key) {
            Some(Value::One(s)) => Ok(s.clone()),
            Some(Value::List(_)) => Err(Error::InvalidParameter(format!(
                "{key} must be a single value"
            ))),
            None => {
                default.ok_or_else(|| Error::InvalidParameter(format!("{} needs {key}", self.name)))
            }
        }
    }

    fn count(&self, key: &str, default: Option<usize>) -> Result<usize> {
        let s = self.scalar(key, default.map(|d| int(d as i64)))?;
        let bad = || Error::InvalidParameter(format!("{key} must be a positive integer"));
        if !s.is_real() || !s.re().is_integer() {
            return Err(bad());
        }
        let n: i64 = s.re().to_integer().try_into().map_err(|_| bad())?;
        usize::try_from(n).ok().filter(|&n| n >= 1).ok_or_else(bad)
    }

    fn list(&self, key: &str, len: usize) -> Result<Vec<Scalar>> {
        match self.params.get(key) {
            Some(Value::List(v)) => Ok(v.clone()),
            Some(Value::One(s)) => Ok(vec![s.clone()]),
            None => Ok(vec![Scalar::zero(); len]),
        }
    }
}

fn split_top_level(s: &str) -> Result<Vec<String>> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for ch in s.chars() {
        match ch {
            '[' => depth += 1,
            ']' => depth -= 1,
            ',' if depth == 0 => {
                out.push(std::mem::take(&mut cur));
                continue;
            }
            _ => {}
        }
        if depth < 0 {
            return Err(Error::Parse(format!("unbalanced brackets in {s:?}")));
        }
        cur.push(ch);
    }
    if depth != 0 {
        return Err(Error::Parse(format!("unbalanced brackets in {s:?}")));
    }
    out.push(cur);
    Ok(out
        .into_iter()
        .map(|s| s.trim().to_string())
        .filter(|s| !s.is_empty())
        .collect())
}

/// Resolves an id, rejecting algebras that fail the Jacobi identity.
pub fn lookup(id: &str) -> Result<CatalogEntry> {
    lookup_with(id, false)
}

pub fn lookup_with(id: &str, allow_nonjacobi: bool) -> Result<CatalogEntry> {
    let cid = CatalogId::parse(id)?;
    let entry = build(&cid)?;
    if !allow_nonjacobi && !jacobi_check(&entry.algebra).ok {
        return Err(Error::Precondition(format!(
            "{} fails the Jacobi identity at these parameters",
            entry.id
        )));
    }
    Ok(entry)
}

fn build(cid: &CatalogId) -> Result<CatalogEntry> {
    let name = cid.name.as_str();
    match name {
        "heisenberg" => {
            cid.check_keys(&["p"])?;
            Ok(heisenberg(cid.count("p", Some(1))?))
        }
        "abelian" => {
            cid.check_keys(&["n"])?;
            Ok(abelian(cid.count("n", None)?))
        }
        "h3" | "solvable1" | "so3" => {
            cid.check_keys(&[])?;
            dim3(match name {
                "h3" => Dim3Kind::Heisenberg,
                "solvable1" => Dim3Kind::Solvable1,
                _ => Dim3Kind::So3,
            })
        }
        "solvable_b" => {
            cid.check_keys(&["b"])?;
            dim3(Dim3Kind::SolvableB(cid.scalar("b", None)?))
        }
        "sl2" => {
            cid.check_keys(&["lambda"])?;
            dim3(Dim3Kind::Sl2(cid.scalar("lambda", Some(int(1)))?))
        }
        "filiform" => {
            cid.check_keys(&["n"])?;
            let n = cid.count("n", Some(5))?;
            if n < 3 {
                return Err(Error::InvalidParameter("filiform needs n ≥ 3".into()));
            }
            Ok(filiform_model(n))
        }
        "filiform_contact" => {
            cid.check_keys(&["p", "a"])?;
            let p = cid.count("p", Some(2))?;
            filiform_contact(p, &cid.list("a", p.saturating_sub(1))?)
        }
        "mu_c9" => {
            cid.check_keys(&["a"])?;
            let a = cid.list("a", 3)?;
            if a.len() != 3 {
                return Err(Error::InvalidParameter(
                    "mu_c9 takes a=[a14,a26,a38]".into(),
                ));
            }
            Ok(mu_c9(&a[0], &a[1], &a[2]))
        }
        "frobenius" => {
            cid.check_keys(&["p", "a"])?;
            let p = cid.count("p", Some(2))?;
            frobenius_model(p, &cid.list("a", p - 1)?)
        }
        "frobenius_base" => {
            cid.check_keys(&["p"])?;
            frobenius_base(cid.count("p", Some(2))?)
        }
        "frobenius_sample" => {
            cid.check_keys(&[])?;
            Ok(frobenius_sample())
        }
        _ => {
            if let Some(keys) = Dim5Variant::param_names(name) {
                cid.check_keys(keys)?;
                let vals = keys
                    .iter()
                    .map(|k| cid.scalar(k, Some(Scalar::zero())))
                    .collect::<Result<Vec<_>>>()?;
                Ok(dim5(Dim5Variant::from_values(name, &vals)?))
            } else {
                Err(Error::UnknownCatalog(name.to_string()))
            }
        }
    }
}
