//! Vectors, linear and skew bilinear maps, and Lie algebras given by
//! structure constants. Indices are 0-based throughout the library; file
//! formats and reports use 1-based indices.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::Scalar;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Vector(pub Vec<Scalar>);

impl Vector {
    pub fn zeros(n: usize) -> Self {
        Vector(vec![Scalar::zero(); n])
    }

    pub fn basis(n: usize, i: usize) -> Self {
        let mut v = Vector::zeros(n);
        v.0[i] = Scalar::one();
        v
    }

    pub fn from_i64(xs: &[i64]) -> Self {
        Vector(xs.iter().map(|&x| Scalar::int(x)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn components(&self) -> &[Scalar] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn add(&self, other: &Vector) -> Vector {
        Vector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Vector) -> Vector {
        Vector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, s: &Scalar) -> Vector {
        Vector(self.0.iter().map(|a| a * s).collect())
    }

    pub fn neg(&self) -> Vector {
        Vector(self.0.iter().map(|a| -a).collect())
    }

    /// `self += s · other`.
    pub fn axpy(&mut self, s: &Scalar, other: &Vector) {
        if s.is_zero() {
            return;
        }
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            if !b.is_zero() {
                *a += &(s * b);
            }
        }
    }

    /// Nonzero components as `(index, value)`.
    pub fn support(&self) -> impl Iterator<Item = (usize, &Scalar)> {
        self.0.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Skew-symmetric bilinear map `g × g → g` stored densely.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BilinearMap {
    n: usize,
    data: Vec<Scalar>,
}

impl BilinearMap {
    pub fn zero(n: usize) -> Self {
        BilinearMap {
            n,
            data: vec![Scalar::zero(); n * n * n],
        }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    fn at(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.n + j) * self.n + k
    }

    /// Coefficient of `e_k` in `φ(e_i, e_j)`.
    pub fn coeff(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.data[self.at(i, j, k)]
    }

    /// Sets the `e_k` coefficient of `φ(e_i, e_j)` and its skew partner.
    pub fn set_coeff(&mut self, i: usize, j: usize, k: usize, value: Scalar) {
        assert!(i != j || value.is_zero(), "skew map has φ(e_i, e_i) = 0");
        let (a, b) = (self.at(i, j, k), self.at(j, i, k));
        self.data[b] = -&value;
        self.data[a] = value;
    }

    pub fn add_coeff(&mut self, i: usize, j: usize, k: usize, value: &Scalar) {
        let v = self.coeff(i, j, k) + value;
        self.set_coeff(i, j, k, v);
    }

    pub fn get(&self, i: usize, j: usize) -> Vector {
        let s = self.at(i, j, 0);
        Vector(self.data[s..s + self.n].to_vec())
    }

    pub fn set(&mut self, i: usize, j: usize, v: &Vector) {
        assert_eq!(v.dim(), self.n);
        for (k, c) in v.0.iter().enumerate() {
            self.set_coeff(i, j, k, c.clone());
        }
    }

    pub fn apply(&self, x: &Vector, y: &Vector) -> Vector {
        let mut out = Vector::zeros(self.n);
        for (i, xi) in x.support() {
            for (j, yj) in y.support() {
                if i == j {
                    continue;
                }
                let s = xi * yj;
                let base = self.at(i, j, 0);
                for k in 0..self.n {
                    let c = &self.data[base + k];
                    if !c.is_zero() {
                        out.0[k] += &(&s * c);
                    }
                }
            }
        }
        out
    }

    /// `φ(e_i, y)`.
    pub fn apply_basis(&self, i: usize, y: &Vector) -> Vector {
        self.apply(&Vector::basis(self.n, i), y)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn add(&self, other: &BilinearMap) -> BilinearMap {
        assert_eq!(self.n, other.n);
        BilinearMap {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &BilinearMap) -> BilinearMap {
        self.add(&other.scale(&Scalar::int(-1)))
    }

    pub fn scale(&self, s: &Scalar) -> BilinearMap {
        BilinearMap {
            n: self.n,
            data: self.data.iter().map(|a| a * s).collect(),
        }
    }

    /// Nonzero entries `(i, j, k, c)` with `i < j`.
    pub fn entries(&self) -> Vec<(usize, usize, usize, Scalar)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in i + 1..self.n {
                for k in 0..self.n {
                    let c = self.coeff(i, j, k);
                    if !c.is_zero() {
                        out.push((i, j, k, c.clone()));
                    }
                }
            }
        }
        out
    }

    /// Structure constants in the basis given by the columns of `p`:
    /// `c' = P⁻¹ φ(P e_i, P e_j)`.
    pub fn change_basis(&self, p: &Matrix) -> Result<BilinearMap> {
        if p.rows() != self.n || p.cols() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: p.rows(),
            });
        }
        let inv = p
            .inverse()
            .ok_or_else(|| Error::Precondition("change of basis matrix is singular".into()))?;
        let cols: Vec<Vector> = (0..self.n).map(|j| Vector(p.column(j))).collect();
        let mut out = BilinearMap::zero(self.n);
        for i in 0..self.n {
            for j in i + 1..self.n {
                let v = Vector(inv.apply(&self.apply(&cols[i], &cols[j]).0));
                out.set(i, j, &v);
            }
        }
        Ok(out)
    }

    /// Relabels basis vectors: old index `perm[new]` becomes `new`.
    pub fn permute(&self, perm: &[usize]) -> BilinearMap {
        assert_eq!(perm.len(), self.n);
        let mut inv = vec![0; self.n];
        for (new, &old) in perm.iter().enumerate() {
            inv[old] = new;
        }
        let mut out = BilinearMap::zero(self.n);
        for (i, j, k, c) in self.entries() {
            out.set_coeff(inv[i], inv[j], inv[k], c);
        }
        out
    }
}

/// A bracket on `𝕂ⁿ` given by structure constants. Jacobi is not enforced.
#[derive(Clone, Debug)]
pub struct LieAlgebra {
    labels: Vec<String>,
    bracket: BilinearMap,
}

/// Equality compares structure constants only; labels are cosmetic.
impl PartialEq for LieAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.bracket == other.bracket
    }
}

impl Eq for LieAlgebra {}

impl LieAlgebra {
    pub fn abelian(n: usize) -> Self {
        LieAlgebra::from_map(BilinearMap::zero(n))
    }

    pub fn from_map(bracket: BilinearMap) -> Self {
        let labels = (1..=bracket.dim()).map(|i| format!("X{i}")).collect();
        LieAlgebra { labels, bracket }
    }

    /// Builds from 1-based `(i, j, [(k, c)])` entries with integer coefficients.
    pub fn from_int_brackets(n: usize, entries: &[(usize, usize, &[(usize, i64)])]) -> Self {
        let mut m = BilinearMap::zero(n);
        for (i, j, terms) in entries {
            for &(k, c) in terms.iter() {
                m.add_coeff(i - 1, j - 1, k - 1, &Scalar::int(c));
            }
        }
        LieAlgebra::from_map(m)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.dim());
        self.labels = labels;
        self
    }

    pub fn dim(&self) -> usize {
        self.bracket.dim()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn map(&self) -> &BilinearMap {
        &self.bracket
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &Scalar {
        self.bracket.coeff(i, j, k)
    }

    pub fn bracket(&self, x: &Vector, y: &Vector) -> Vector {
        self.bracket.apply(x, y)
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> Vector {
        self.bracket.get(i, j)
    }

    pub fn is_abelian(&self) -> bool {
        self.bracket.is_zero()
    }

    /// Matrix of `ad(x)`; column `j` is `[x, e_j]`.
    pub fn ad(&self, x: &Vector) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for j in 0..n {
            let col = self.bracket(x, &Vector::basis(n, j));
            for (i, c) in col.0.into_iter().enumerate() {
                m[(i, j)] = c;
            }
        }
        m
    }

    pub fn change_basis(&self, p: &Matrix) -> Result<LieAlgebra> {
        Ok(LieAlgebra::from_map(self.bracket.change_basis(p)?))
    }

    pub fn permute(&self, perm: &[usize]) -> LieAlgebra {
        let labels = perm.iter().map(|&o| self.labels[o].clone()).collect();
        LieAlgebra {
            labels,
            bracket: self.bracket.permute(perm),
        }
    }
}

impl fmt::Display for LieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let entries = self.bracket.entries();
        if entries.is_empty() {
            return write!(f, "abelian of dimension {}", self.dim());
        }
        let mut i0 = usize::MAX;
        let mut j0 = usize::MAX;
        let mut line = String::new();
        let mut lines = Vec::new();
        for (i, j, k, c) in entries {
            if (i, j) != (i0, j0) {
                if !line.is_empty() {
                    lines.push(std::mem::take(&mut line));
                }
                line = format!("[{}, {}] =", self.labels[i], self.labels[j]);
                (i0, j0) = (i, j);
            }
            line.push_str(&format!(" ({c}){}", self.labels[k]));
        }
        lines.push(line);
        write!(f, "{}", lines.join("\n"))
    }
}

/// Endomorphism of `𝕂ⁿ`; column `j` holds the image of `e_j`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinearMap(pub Matrix);

impl LinearMap {
    pub fn zero(n: usize) -> Self {
        LinearMap(Matrix::zeros(n, n))
    }

    pub fn identity(n: usize) -> Self {
        LinearMap(Matrix::identity(n))
    }

    pub fn diagonal(entries: &[Scalar]) -> Self {
        LinearMap(Matrix::diagonal(entries))
    }

    pub fn from_images(images: &[Vector]) -> Self {
        let n = images.len();
        let mut m = Matrix::zeros(n, n);
        for (j, v) in images.iter().enumerate() {
            assert_eq!(v.dim(), n);
            for (i, c) in v.0.iter().enumerate() {
                m[(i, j)] = c.clone();
            }
        }
        LinearMap(m)
    }

    pub fn dim(&self) -> usize {
        self.0.rows()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.0
    }

    pub fn apply(&self, v: &Vector) -> Vector {
        Vector(self.0.apply(&v.0))
    }

    pub fn image(&self, j: usize) -> Vector {
        Vector(self.0.column(j))
    }

    pub fn compose(&self, other: &LinearMap) -> LinearMap {
        LinearMap(self.0.mul(&other.0))
    }

    /// `self ∘ other − other ∘ self`.
    pub fn commutator(&self, other: &LinearMap) -> LinearMap {
        LinearMap(self.0.mul(&other.0).sub(&other.0.mul(&self.0)))
    }

    pub fn trace(&self) -> Scalar {
        self.0.trace()
    }
}

/// Subspace of `𝕂ⁿ` held as the nonzero rows of a reduced echelon form, so
/// that equal subspaces compare equal.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace {
    n: usize,
    rows: Vec<Vector>,
}

impl Subspace {
    pub fn zero(n: usize) -> Self {
        Subspace {
            n,
            rows: Vec::new(),
        }
    }

    pub fn full(n: usize) -> Self {
        Subspace {
            n,
            rows: (0..n).map(|i| Vector::basis(n, i)).collect(),
        }
    }

    pub fn span(n: usize, vectors: &[Vector]) -> Self {
        if vectors.is_empty() {
            return Subspace::zero(n);
        }
        let m = Matrix::from_rows(vectors.iter().map(|v| v.0.clone()).collect());
        let (r, pivots) = m.rref();
        Subspace {
            n,
            rows: (0..pivots.len())
                .map(|i| Vector(r.row(i).to_vec()))
                .collect(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.rows
    }

    pub fn contains(&self, v: &Vector) -> bool {
        let mut all = self.rows.clone();
        all.push(v.clone());
        Subspace::span(self.n, &all).dim() == self.dim()
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.rows.iter().all(|v| other.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut all = self.rows.clone();
        all.extend(other.rows.iter().cloned());
        Subspace::span(self.n, &all)
    }
}
