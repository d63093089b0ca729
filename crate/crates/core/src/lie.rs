//! Structural checks on a [`LieAlgebra`]: Jacobi identity, center, lower
//! central series, derivations, and the symplectic-compatible endomorphisms
//! of the Heisenberg generators.

use num_traits::Zero;

use crate::algebra::{BilinearMap, LieAlgebra, LinearMap, Subspace, Vector};
use crate::linalg::Matrix;
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobiWitness {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub defect: Vector,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobiReport {
    pub ok: bool,
    pub witness: Option<JacobiWitness>,
}

/// `[[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]`.
pub fn jacobiator(m: &BilinearMap, i: usize, j: usize, k: usize) -> Vector {
    let t1 = m.apply(&m.get(i, j), &Vector::basis(m.dim(), k));
    let t2 = m.apply(&m.get(j, k), &Vector::basis(m.dim(), i));
    let t3 = m.apply(&m.get(k, i), &Vector::basis(m.dim(), j));
    t1.add(&t2).add(&t3)
}

pub fn jacobi_check_map(m: &BilinearMap) -> JacobiReport {
    let n = m.dim();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let defect = jacobiator(m, i, j, k);
                if !defect.is_zero() {
                    return JacobiReport {
                        ok: false,
                        witness: Some(JacobiWitness { i, j, k, defect }),
                    };
                }
            }
        }
    }
    JacobiReport {
        ok: true,
        witness: None,
    }
}

pub fn jacobi_check(g: &LieAlgebra) -> JacobiReport {
    jacobi_check_map(g.map())
}

fn kernel(rows: Vec<Vec<Scalar>>, n: usize) -> Subspace {
    if rows.is_empty() {
        return Subspace::full(n);
    }
    let basis: Vec<Vector> = Matrix::from_rows(rows)
        .nullspace()
        .into_iter()
        .map(Vector)
        .collect();
    Subspace::span(n, &basis)
}

pub fn center(g: &LieAlgebra) -> Subspace {
    let n = g.dim();
    let mut rows = Vec::new();
    for j in 0..n {
        for k in 0..n {
            rows.push(
                (0..n)
                    .map(|i| g.structure_constant(i, j, k).clone())
                    .collect(),
            );
        }
    }
    kernel(rows, n)
}

/// `[A, B]` for subspaces given by bases.
pub fn bracket_span(g: &LieAlgebra, a: &[Vector], b: &[Vector]) -> Subspace {
    let mut out = Vec::new();
    for x in a {
        for y in b {
            let z = g.bracket(x, y);
            if !z.is_zero() {
                out.push(z);
            }
        }
    }
    Subspace::span(g.dim(), &out)
}

#[derive(Clone, Debug, PartialEq)]
pub struct CentralSeries {
    /// `C¹ = [g, g]`, `C^{k+1} = [g, C^k]`, up to the first zero or repeated term.
    pub terms: Vec<Subspace>,
    /// Smallest `k` with `C^k = 0`.
    pub nilindex: Option<usize>,
    pub filiform: bool,
}

pub fn lower_central_series(g: &LieAlgebra) -> CentralSeries {
    let n = g.dim();
    let full: Vec<Vector> = (0..n).map(|i| Vector::basis(n, i)).collect();
    let mut terms = Vec::new();
    let mut cur = bracket_span(g, &full, &full);
    loop {
        terms.push(cur.clone());
        if cur.is_zero() {
            let k = terms.len();
            return CentralSeries {
                terms,
                nilindex: Some(k),
                filiform: n >= 2 && k == n - 1,
            };
        }
        let next = bracket_span(g, &full, cur.basis());
        if next == cur {
            return CentralSeries {
                terms,
                nilindex: None,
                filiform: false,
            };
        }
        cur = next;
    }
}

pub fn is_nilpotent(g: &LieAlgebra) -> bool {
    lower_central_series(g).nilindex.is_some()
}

pub fn is_derivation(f: &LinearMap, g: &LieAlgebra) -> bool {
    let n = g.dim();
    if f.dim() != n {
        return false;
    }
    for i in 0..n {
        for j in i + 1..n {
            let lhs = f.apply(&g.bracket_basis(i, j));
            let rhs = g
                .bracket(&f.image(i), &Vector::basis(n, j))
                .add(&g.bracket(&Vector::basis(n, i), &f.image(j)));
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

/// Rows of the linear system `f[e_i,e_j] = [f e_i, e_j] + [e_i, f e_j]` in the
/// unknowns `F[s][l]` (coefficient of `e_s` in `f(e_l)`), flattened as `s·n + l`.
fn derivation_rows(g: &LieAlgebra) -> Vec<Vec<Scalar>> {
    let n = g.dim();
    let mut rows = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in 0..n {
                let mut row = vec![Scalar::zero(); n * n];
                for s in 0..n {
                    row[k * n + s] += g.structure_constant(i, j, s);
                    row[s * n + i] -= g.structure_constant(s, j, k);
                    row[s * n + j] -= g.structure_constant(i, s, k);
                }
                if row.iter().any(|c| !c.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    rows
}

fn unflatten(n: usize, v: &[Scalar]) -> LinearMap {
    let mut m = Matrix::zeros(n, n);
    for s in 0..n {
        for l in 0..n {
            m[(s, l)] = v[s * n + l].clone();
        }
    }
    LinearMap(m)
}

/// A basis of the derivation algebra.
pub fn derivations(g: &LieAlgebra) -> Vec<LinearMap> {
    let n = g.dim();
    let rows = derivation_rows(g);
    if rows.is_empty() {
        return (0..n * n)
            .map(|u| {
                let mut v = vec![Scalar::zero(); n * n];
                v[u] = Scalar::from(1);
                unflatten(n, &v)
            })
            .collect();
    }
    Matrix::from_rows(rows)
        .nullspace()
        .iter()
        .map(|v| unflatten(n, v))
        .collect()
}

/// A basis of the diagonal derivations, as eigenvalue lists.
pub fn diagonal_derivations(g: &LieAlgebra) -> Vec<Vec<Scalar>> {
    let n = g.dim();
    let mut rows = Vec::new();
    for (i, j, k, c) in g.map().entries() {
        // (ρ_k − ρ_i − ρ_j) c = 0 for each nonzero constant.
        let mut row = vec![Scalar::zero(); n];
        row[k] += &c;
        row[i] -= &c;
        row[j] -= &c;
        rows.push(row);
    }
    if rows.is_empty() {
        return (0..n).map(|i| Vector::basis(n, i).0).collect();
    }
    Matrix::from_rows(rows).nullspace()
}

/// `ε(s, j)`: coefficient of the central generator in `[X_s, X_j]` on the
/// Heisenberg algebra, 0-based.
fn heisenberg_pairing(s: usize, j: usize) -> i64 {
    if s % 2 == 0 && j == s + 1 {
        1
    } else if j % 2 == 0 && s == j + 1 {
        -1
    } else {
        0
    }
}

/// Endomorphisms `f` of the `2p` non-central Heisenberg generators with
/// `μ₀(f X, Y) + μ₀(X, f Y) = 0`.
#[derive(Clone, Debug)]
pub struct FSubalgebra {
    pub p: usize,
    pub basis: Vec<LinearMap>,
    pub traceless: bool,
    pub closed: bool,
}

impl FSubalgebra {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }
}

fn f_rows(p: usize) -> Vec<Vec<Scalar>> {
    let m = 2 * p;
    // Unknown a_l^s at index s·m + l, matching `unflatten`.
    let mut rows = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            let mut row = vec![Scalar::zero(); m * m];
            for s in 0..m {
                row[s * m + i] += &Scalar::int(heisenberg_pairing(s, j));
                row[s * m + j] += &Scalar::int(heisenberg_pairing(i, s));
            }
            rows.push(row);
        }
    }
    rows
}

pub fn satisfies_f_constraint(p: usize, f: &LinearMap) -> bool {
    let m = 2 * p;
    (0..m).all(|i| {
        (i + 1..m).all(|j| {
            let lhs: Scalar = (0..m)
                .map(|s| &f.0[(s, i)] * &Scalar::int(heisenberg_pairing(s, j)))
                .sum();
            let rhs: Scalar = (0..m)
                .map(|s| &f.0[(s, j)] * &Scalar::int(heisenberg_pairing(i, s)))
                .sum();
            (lhs + rhs).is_zero()
        })
    })
}

pub fn f_subalgebra(p: usize) -> FSubalgebra {
    assert!(p >= 1);
    let m = 2 * p;
    let basis: Vec<LinearMap> = Matrix::from_rows(f_rows(p))
        .nullspace()
        .iter()
        .map(|v| unflatten(m, v))
        .collect();
    let traceless = basis.iter().all(|f| f.trace().is_zero());
    let closed = basis.iter().all(|f| {
        basis
            .iter()
            .all(|g| satisfies_f_constraint(p, &f.commutator(g)))
    });
    FSubalgebra {
        p,
        basis,
        traceless,
        closed,
    }
}

/// Dimension of the solution space; panics if some solution has nonzero
/// trace or the space fails to close under commutators.
pub fn f_subalgebra_dimension(p: usize) -> usize {
    let f = f_subalgebra(p);
    assert!(f.traceless, "solution with nonzero trace");
    assert!(f.closed, "solution space not closed under commutators");
    f.dimension()
}
