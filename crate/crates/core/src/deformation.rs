//! Cochains with adjoint values on Heisenberg algebras: circle and bullet
//! products, coboundaries, the quadratic deformation system, and central
//! extensions by symplectic cocycles.
//!
//! Throughout, `Z` is the last basis vector of a `(2p+1)`-dimensional space
//! and `X_{2k−1}, X_{2k}` pair to `Z` under the Heisenberg bracket `μ₀`.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::algebra::{BilinearMap, LieAlgebra, LinearMap, Subspace, Vector};
use crate::error::{Error, Result};
use crate::exterior::{ce_differential, DualForm, Multiform};
use crate::lie::center;
use crate::linalg::Matrix;
use crate::scalar::Scalar;

/// Values of a trilinear map on basis triples; zero entries are absent.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct TrilinearTable {
    pub entries: BTreeMap<(usize, usize, usize), Vector>,
}

impl TrilinearTable {
    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> Option<&Vector> {
        self.entries.get(&(i, j, k))
    }

    fn put(&mut self, key: (usize, usize, usize), v: Vector) {
        if !v.is_zero() {
            self.entries.insert(key, v);
        }
    }

    pub fn add(&self, other: &TrilinearTable) -> TrilinearTable {
        let mut out = TrilinearTable::default();
        let keys: std::collections::BTreeSet<_> = self
            .entries
            .keys()
            .chain(other.entries.keys())
            .copied()
            .collect();
        for key in keys {
            let v = match (self.entries.get(&key), other.entries.get(&key)) {
                (Some(a), Some(b)) => a.add(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            };
            out.put(key, v);
        }
        out
    }
}

/// `φ∘ψ(X,Y,Z) = φ(ψ(X,Y),Z) + φ(ψ(Y,Z),X) + φ(ψ(Z,X),Y)` on triples `i<j<k`.
pub fn circle(phi: &BilinearMap, psi: &BilinearMap) -> TrilinearTable {
    let n = phi.dim();
    assert_eq!(n, psi.dim());
    let e = |i| Vector::basis(n, i);
    let mut out = TrilinearTable::default();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let v = phi
                    .apply(&psi.get(i, j), &e(k))
                    .add(&phi.apply(&psi.get(j, k), &e(i)))
                    .add(&phi.apply(&psi.get(k, i), &e(j)));
                out.put((i, j, k), v);
            }
        }
    }
    out
}

/// `ψ₁∙ψ₂(X,Y,Z) = ψ₁(ψ₂(X,Y),Z)` on `i<j` and every `k`.
pub fn bullet(psi1: &BilinearMap, psi2: &BilinearMap) -> TrilinearTable {
    let n = psi1.dim();
    assert_eq!(n, psi2.dim());
    let mut out = TrilinearTable::default();
    for i in 0..n {
        for j in i + 1..n {
            let inner = psi2.get(i, j);
            if inner.is_zero() {
                continue;
            }
            for k in 0..n {
                out.put((i, j, k), psi1.apply(&inner, &Vector::basis(n, k)));
            }
        }
    }
    out
}

/// Whether the left-normed power `μ^{∙k}` vanishes, i.e. every bracket
/// `μ(⋯μ(μ(X₀,X₁),X₂)⋯,X_k)` is zero.
pub fn bullet_power_is_zero(mu: &BilinearMap, k: usize) -> bool {
    assert!(k >= 1);
    let n = mu.dim();
    let mut images = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            images.push(mu.get(i, j));
        }
    }
    let mut span = Subspace::span(n, &images);
    for _ in 1..k {
        if span.is_zero() {
            return true;
        }
        let mut next = Vec::new();
        for v in span.basis() {
            for l in 0..n {
                next.push(mu.apply(v, &Vector::basis(n, l)));
            }
        }
        span = Subspace::span(n, &next);
    }
    span.is_zero()
}

/// `(δf)(X,Y) = f[X,Y] − [fX,Y] − [X,fY]`.
pub fn ce_coboundary_1(f: &LinearMap, g: &LieAlgebra) -> BilinearMap {
    let n = g.dim();
    let mut out = BilinearMap::zero(n);
    for i in 0..n {
        for j in i + 1..n {
            let v = f
                .apply(&g.bracket_basis(i, j))
                .sub(&g.bracket(&f.image(i), &Vector::basis(n, j)))
                .sub(&g.bracket(&Vector::basis(n, i), &f.image(j)));
            out.set(i, j, &v);
        }
    }
    out
}

/// `δφ = μ₀∘φ + φ∘μ₀`, so that `δ∘δ = 0` and `(μ₀ + tφ)∘(μ₀ + tφ)` has
/// linear term `tδφ`.
pub fn ce_coboundary_2(phi: &BilinearMap, g: &LieAlgebra) -> TrilinearTable {
    circle(g.map(), phi).add(&circle(phi, g.map()))
}

/// `μ₀` of `h_{2p+1}`.
pub fn heisenberg_bracket(p: usize) -> LieAlgebra {
    let n = 2 * p + 1;
    let mut m = BilinearMap::zero(n);
    for k in 0..p {
        m.set_coeff(2 * k, 2 * k + 1, n - 1, Scalar::one());
    }
    LieAlgebra::from_map(m)
}

/// `φ₂(X_l, Z) = f(X_l)` for an endomorphism `f` of the `2p` generators; all
/// other values vanish.
pub fn phi2_from_endomorphism(p: usize, f: &LinearMap) -> BilinearMap {
    let m = 2 * p;
    assert_eq!(f.dim(), m, "f acts on the 2p non-central generators");
    let mut out = BilinearMap::zero(m + 1);
    for l in 0..m {
        let mut v = f.image(l).0;
        v.push(Scalar::zero());
        out.set(l, m, &Vector(v));
    }
    out
}

#[derive(Clone, Debug, PartialEq)]
pub struct DeformationSpec {
    pub base: LieAlgebra,
    pub phi1: BilinearMap,
    pub phi2: BilinearMap,
}

impl DeformationSpec {
    pub fn new(base: LieAlgebra, phi1: BilinearMap, phi2: BilinearMap) -> Result<Self> {
        for m in [&phi1, &phi2] {
            if m.dim() != base.dim() {
                return Err(Error::DimensionMismatch {
                    expected: base.dim(),
                    got: m.dim(),
                });
            }
        }
        Ok(DeformationSpec { base, phi1, phi2 })
    }

    /// Heisenberg base, free `φ₁`, and `φ₂` built from `f`.
    pub fn quadratic(p: usize, phi1: BilinearMap, f: &LinearMap) -> Result<Self> {
        DeformationSpec::new(heisenberg_bracket(p), phi1, phi2_from_endomorphism(p, f))
    }

    pub fn dim(&self) -> usize {
        self.base.dim()
    }

    /// Splits an algebra whose last basis vector `Z` satisfies
    /// `[X_{2k−1}, X_{2k}] = κZ + ⋯` (same `κ ≠ 0` for all `k`) with no other
    /// `Z` components. `Z` is rescaled by `κ`; returns the spec and `κ`.
    pub fn from_contact_basis(g: &LieAlgebra) -> Result<(Self, Scalar)> {
        let n = g.dim();
        if n % 2 == 0 || n < 3 {
            return Err(Error::NotContactAdapted(format!(
                "dimension {n} is not odd"
            )));
        }
        let p = (n - 1) / 2;
        let z = n - 1;
        let kappa = g.structure_constant(0, 1, z).clone();
        if kappa.is_zero() {
            return Err(Error::NotContactAdapted(
                "[X1, X2] has no Z component".into(),
            ));
        }
        for i in 0..n {
            for j in i + 1..n {
                let c = g.structure_constant(i, j, z);
                let want = if j < z && i % 2 == 0 && j == i + 1 {
                    &kappa
                } else {
                    &Scalar::zero()
                };
                if c != want {
                    return Err(Error::NotContactAdapted(format!(
                        "Z component of [X{}, X{}] is {c}",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        let mut diag = vec![Scalar::one(); n];
        diag[z] = kappa.clone();
        let h = g.change_basis(&Matrix::diagonal(&diag))?;
        let mut phi1 = BilinearMap::zero(n);
        let mut phi2 = BilinearMap::zero(n);
        for (i, j, k, c) in h.map().entries() {
            if k == z {
                continue;
            }
            if j == z {
                phi2.set_coeff(i, j, k, c);
            } else {
                phi1.set_coeff(i, j, k, c);
            }
        }
        let spec = DeformationSpec::new(heisenberg_bracket(p), phi1, phi2)?;
        debug_assert_eq!(spec.assemble(), h);
        Ok((spec, kappa))
    }

    /// `μ₀ + φ₁ + φ₂`.
    pub fn assemble(&self) -> LieAlgebra {
        LieAlgebra::from_map(self.base.map().add(&self.phi1).add(&self.phi2))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraFailure {
    /// 1 to 4, in the order `δφ₁`, `φ₁∘φ₁ + δφ₂`, `φ₁∘φ₂ + φ₂∘φ₁`, `φ₂∘φ₂`.
    pub equation: usize,
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub value: Vector,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraReport {
    pub ok: bool,
    pub failures: Vec<QuadraFailure>,
}

impl QuadraReport {
    /// Distinct failing equation numbers, ascending.
    pub fn failing_equations(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.failures.iter().map(|f| f.equation).collect();
        v.dedup();
        v
    }
}

pub fn quadra_tables(spec: &DeformationSpec) -> [TrilinearTable; 4] {
    let (g, p1, p2) = (&spec.base, &spec.phi1, &spec.phi2);
    [
        ce_coboundary_2(p1, g),
        circle(p1, p1).add(&ce_coboundary_2(p2, g)),
        circle(p1, p2).add(&circle(p2, p1)),
        circle(p2, p2),
    ]
}

pub fn quadra_check(spec: &DeformationSpec) -> QuadraReport {
    let mut failures = Vec::new();
    for (e, table) in quadra_tables(spec).into_iter().enumerate() {
        for ((i, j, k), value) in table.entries {
            failures.push(QuadraFailure {
                equation: e + 1,
                i,
                j,
                k,
                value,
            });
        }
    }
    QuadraReport {
        ok: failures.is_empty(),
        failures,
    }
}

/// Replaces `φ₁` by `φ₁ − δf` where `f(X_a) = 0` and `f(Z) = w` is chosen so
/// that `φ₁(X_i, Z) = 0` afterwards.
pub fn normalize_linear(spec: &DeformationSpec) -> Result<DeformationSpec> {
    let n = spec.dim();
    let z = n - 1;
    let g = &spec.base;
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for i in 0..z {
        let target = spec.phi1.get(i, z);
        for k in 0..n {
            // φ₁(X_i,Z)_k + Σ_a w_a c_{i,a}^k = 0.
            rows.push(
                (0..z)
                    .map(|a| g.structure_constant(i, a, k).clone())
                    .collect(),
            );
            rhs.push(-&target.0[k]);
        }
    }
    let w = Matrix::from_rows(rows)
        .solve(&rhs)
        .ok_or(Error::NotNormalizable)?;
    let mut images = vec![Vector::zeros(n); n];
    let mut wz = w;
    wz.push(Scalar::zero());
    images[z] = Vector(wz);
    let f = LinearMap::from_images(&images);
    let phi1 = spec.phi1.sub(&ce_coboundary_1(&f, g));
    DeformationSpec::new(spec.base.clone(), phi1, spec.phi2.clone())
}

/// `[X,Y] = [X,Y]_k + θ(X,Y)·Z`, with `Z` appended as the last basis vector.
pub fn central_extension(k: &LieAlgebra, theta: &DualForm) -> Result<LieAlgebra> {
    if **theta.algebra() != *k {
        return Err(Error::MismatchedAlgebras);
    }
    if theta.grade() != 2 {
        return Err(Error::InvalidParameter(format!(
            "extension cocycle must be a 2-form, got grade {}",
            theta.grade()
        )));
    }
    if !ce_differential(theta).is_zero() {
        return Err(Error::NotCocycle);
    }
    let m = k.dim();
    if m % 2 == 1 || theta.power(m / 2).is_zero() {
        return Err(Error::NotSymplectic);
    }
    let mut out = BilinearMap::zero(m + 1);
    for (i, j, l, c) in k.map().entries() {
        out.set_coeff(i, j, l, c);
    }
    for (idx, c) in theta.form().terms() {
        out.set_coeff(idx[0], idx[1], m, c.clone());
    }
    let mut labels = k.labels().to_vec();
    labels.push("Z".into());
    Ok(LieAlgebra::from_map(out).with_labels(labels))
}

#[derive(Clone, Debug)]
pub struct CentralQuotient {
    pub base: Arc<LieAlgebra>,
    pub theta: DualForm,
    /// Index of the central basis vector in the original algebra.
    pub center_index: usize,
}

/// Quotient by a one-dimensional center spanned by a basis vector, with the
/// induced 2-form `θ(X,Y) = Z-component of [X,Y]`.
pub fn quotient_by_center(g: &LieAlgebra) -> Result<CentralQuotient> {
    let c = center(g);
    if c.dim() != 1 {
        return Err(Error::CenterNotAxis);
    }
    let v = &c.basis()[0];
    let support: Vec<usize> = v.support().map(|(i, _)| i).collect();
    let [z] = support[..] else {
        return Err(Error::CenterNotAxis);
    };
    let n = g.dim();
    let keep: Vec<usize> = (0..n).filter(|&i| i != z).collect();
    let mut base = BilinearMap::zero(n - 1);
    let mut theta = Multiform::zero(n - 1, 2);
    for (a, &i) in keep.iter().enumerate() {
        for (b, &j) in keep.iter().enumerate().skip(a + 1) {
            for (cidx, &l) in keep.iter().enumerate() {
                let s = g.structure_constant(i, j, l);
                if !s.is_zero() {
                    base.set_coeff(a, b, cidx, s.clone());
                }
            }
            theta.add_term(&[a, b], g.structure_constant(i, j, z));
        }
    }
    let labels = keep.iter().map(|&i| g.labels()[i].clone()).collect();
    let base = Arc::new(LieAlgebra::from_map(base).with_labels(labels));
    let theta = DualForm::new(base.clone(), theta)?;
    Ok(CentralQuotient {
        base,
        theta,
        center_index: z,
    })
}

/// Quotient by the center and extend again by the induced cocycle, with the
/// center put back at its original index.
pub fn extension_roundtrip(g: &LieAlgebra) -> Result<LieAlgebra> {
    let q = quotient_by_center(g)?;
    let ext = central_extension(&q.base, &q.theta)?;
    let n = g.dim();
    let z = q.center_index;
    let perm: Vec<usize> = (0..n)
        .map(|t| match t.cmp(&z) {
            std::cmp::Ordering::Less => t,
            std::cmp::Ordering::Equal => n - 1,
            std::cmp::Ordering::Greater => t - 1,
        })
        .collect();
    Ok(ext.permute(&perm).with_labels(g.labels().to_vec()))
}
