#![allow(dead_code)]

use std::sync::Arc;

use cartanlab::manifold::poly::{Poly, Vars};
use cartanlab::sampling::Sampler;
use cartanlab::{DualForm, LieAlgebra, Matrix, Scalar};

pub fn int(n: i64) -> Scalar {
    Scalar::int(n)
}

pub fn random_covector(s: &mut Sampler, g: &Arc<LieAlgebra>) -> DualForm {
    DualForm::covector(g.clone(), &s.nonzero_vector(g.dim())).unwrap()
}

/// Up to `terms` monomials of total degree ≤ `deg` in the first `active` variables.
pub fn random_poly(s: &mut Sampler, vars: &Vars, active: usize, terms: usize, deg: u32) -> Poly {
    let mut p = Poly::zero(vars.clone());
    for _ in 0..terms {
        let mut e = vec![0u32; vars.len()];
        let mut left = s.int(0, deg as i64) as u32;
        while left > 0 {
            let v = s.int(0, active as i64 - 1) as usize;
            e[v] += 1;
            left -= 1;
        }
        p = p.add(&Poly::monomial(vars.clone(), e, s.rational()));
    }
    p
}

/// Class as the rank of `B = dω(e_i, e_j)` stacked over `ω`, computed
/// directly from the brackets.
pub fn class_by_rank(w: &DualForm) -> usize {
    let g = w.algebra();
    let n = g.dim();
    let omega = w.covector_coeffs();
    // dω(e_i, e_j) = −ω([e_i, e_j]).
    let b: Vec<Vec<Scalar>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let v = g.bracket_basis(i, j);
                    -v.0.iter().zip(&omega).map(|(a, c)| a * c).sum::<Scalar>()
                })
                .collect()
        })
        .collect();
    let mut stacked = b;
    stacked.push(omega);
    Matrix::from_rows(stacked).rank()
}
