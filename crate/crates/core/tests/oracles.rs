//! Hand-built checks that do not go through the library's own algorithms.

mod common;

use std::sync::Arc;

use cartanlab::algebra::{LieAlgebra, Vector};
use cartanlab::catalog;
use cartanlab::exterior::{cartan_class, DualForm, Multiform};
use cartanlab::lie::{f_subalgebra, jacobi_check, lower_central_series};
use cartanlab::manifold::sl::{sl_contact_identity, top_exponent, var_index};
use cartanlab::sampling::Sampler;
use cartanlab::{Matrix, Scalar};
use common::{class_by_rank, int};
use num_traits::Zero;

/// Lower central series dimensions by explicit spans of brackets.
fn lcs_dims(g: &LieAlgebra) -> Vec<usize> {
    let n = g.dim();
    let mut current: Vec<Vec<Scalar>> = (0..n).map(|i| Vector::basis(n, i).0).collect();
    let mut dims = Vec::new();
    loop {
        let mut rows = Vec::new();
        for i in 0..n {
            for v in &current {
                rows.push(g.bracket(&Vector::basis(n, i), &Vector(v.clone())).0);
            }
        }
        let m = Matrix::from_rows(rows);
        let (r, pivots) = m.rref();
        let next: Vec<Vec<Scalar>> = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        dims.push(next.len());
        if next.is_empty() || next.len() == current.len() {
            return dims;
        }
        current = next;
    }
}

#[test]
fn frobenius_sample_class_by_rank() {
    let e = catalog::frobenius_model(2, &[Scalar::frac(1, 2)]).unwrap();
    assert_eq!(class_by_rank(&e.distinguished_form), 4);
    assert_eq!(cartan_class(&e.distinguished_form).unwrap().class, 4);
    let e = catalog::frobenius_sample();
    assert_eq!(class_by_rank(&e.distinguished_form), 4);
}

#[test]
fn broken_bracket_witness() {
    // [X1,X2] = X2, [X1,X3] = X1: the cyclic sum on (X1,X2,X3) is −X2.
    let g = LieAlgebra::from_int_brackets(3, &[(1, 2, &[(2, 1)]), (1, 3, &[(1, 1)])]);
    let w = jacobi_check(&g).witness.unwrap();
    assert_eq!((w.i, w.j, w.k), (0, 1, 2));
    assert_eq!(w.defect, Vector::from_i64(&[0, -1, 0]));
}

#[test]
fn filiform_nilindex_by_spans() {
    let raw = catalog::mu_c9(&int(0), &int(2), &int(1));
    assert_eq!(lcs_dims(&raw.algebra), vec![7, 6, 5, 4, 3, 2, 1, 0]);
    assert_eq!(lower_central_series(&raw.algebra).nilindex, Some(8));
    let reference = catalog::mu_c9_reference();
    assert_eq!(lcs_dims(&reference.algebra).len(), 8);
    for n in 4..=8 {
        let e = catalog::filiform_model(n);
        assert_eq!(lcs_dims(&e.algebra).len(), n - 1, "{}", e.id);
    }
}

#[test]
fn heisenberg_class_by_rank() {
    for p in 1..=4 {
        let e = catalog::heisenberg(p);
        let w = DualForm::basis(e.algebra.clone(), 2 * p);
        assert_eq!(class_by_rank(&w), 2 * p + 1);
    }
}

/// Symplectic Lie algebra of the pairing `Xs ↔ X(s+1)`, `s` even.
#[test]
fn f_subalgebra_is_symplectic() {
    for p in 1..=3 {
        let m = 2 * p;
        let mut j = Matrix::zeros(m, m);
        for k in 0..p {
            j[(2 * k, 2 * k + 1)] = int(1);
            j[(2 * k + 1, 2 * k)] = int(-1);
        }
        let f = f_subalgebra(p);
        assert_eq!(f.dimension(), p * (2 * p + 1));
        for b in &f.basis {
            let a = b.matrix();
            assert!(a.transpose().mul(&j).add(&j.mul(a)).is_zero());
        }
        assert!(f.closed);
    }
}

fn point_in_sl(s: &mut Sampler, size: usize) -> Matrix {
    let mut upper = Matrix::identity(size);
    let mut lower = Matrix::identity(size);
    for i in 0..size {
        for j in i + 1..size {
            upper[(i, j)] = s.rational();
            lower[(j, i)] = s.rational();
        }
    }
    upper.mul(&lower)
}

/// `ω ∧ (dω)^q ∧ dΔ` at a point of `SL(2n)`, with `ω = Σ x_{j,2i−1} dx_{j,2i} − x_{j,2i} dx_{j,2i−1}`
/// and `dΔ` given by cofactors.
fn identity_constant_at(n: usize, m: &Matrix) -> Scalar {
    let size = 2 * n;
    let vars = size * size;
    let at = |j: usize, l: usize| var_index(n, j, l);
    let mut w = Multiform::zero(vars, 1);
    let mut dw = Multiform::zero(vars, 2);
    for j in 1..=size {
        for i in 1..=n {
            let (a, b) = (2 * i - 1, 2 * i);
            w.add_term(&[at(j, b)], &m[(j - 1, a - 1)]);
            w.add_term(&[at(j, a)], &-&m[(j - 1, b - 1)]);
            dw.add_term(&[at(j, a), at(j, b)], &int(2));
        }
    }
    let cof = m.inverse().unwrap().transpose().scale(&m.det());
    let mut dd = Multiform::zero(vars, 1);
    for j in 1..=size {
        for l in 1..=size {
            dd.add_term(&[at(j, l)], &cof[(j - 1, l - 1)]);
        }
    }
    let q = top_exponent(n);
    let top = w.wedge(&dw.power(q, int(1))).wedge(&dd);
    top.coeff(&(0..vars).collect::<Vec<_>>())
        .unwrap_or_else(Scalar::zero)
}

#[test]
fn sl_identity_constant_matches_pointwise_expansion() {
    let mut s = Sampler::new(7);
    for n in 1..=2 {
        let q = top_exponent(n);
        let fact: Scalar = (1..=q as i64).map(Scalar::int).product();
        let closed = -(&(&Scalar::int(2).pow(q as u32) * &fact) * &Scalar::int(2 * n as i64));
        let lib = sl_contact_identity(n).unwrap();
        assert_eq!(lib.q, q);
        assert_eq!(lib.constant, closed);
        for _ in 0..3 {
            let m = point_in_sl(&mut s, 2 * n);
            assert_eq!(m.det(), int(1));
            assert_eq!(identity_constant_at(n, &m), closed, "n = {n}");
        }
    }
    assert_eq!(sl_contact_identity(2).unwrap().constant, int(-2_580_480));
}

#[test]
fn dual_form_evaluation_matches_structure_constants() {
    // dω_k(e_i, e_j) = −c_ij^k on h5.
    let e = catalog::heisenberg(2);
    let g: Arc<LieAlgebra> = e.algebra.clone();
    let dz = cartanlab::ce_differential(&DualForm::basis(g.clone(), 4));
    let v = |i| Vector::basis(5, i);
    assert_eq!(dz.evaluate(&[v(0), v(1)]).unwrap(), int(-1));
    assert_eq!(dz.evaluate(&[v(2), v(3)]).unwrap(), int(-1));
    assert_eq!(dz.evaluate(&[v(0), v(2)]).unwrap(), int(0));
}
