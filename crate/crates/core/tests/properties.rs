mod common;

use std::sync::Arc;

use cartanlab::algebra::{BilinearMap, LieAlgebra, LinearMap, Vector};
use cartanlab::catalog::{self, CatalogEntry, Dim3Kind, Dim5Variant};
use cartanlab::contraction::{contract, ContractionSpec};
use cartanlab::deformation::{
    ce_coboundary_1, ce_coboundary_2, central_extension, heisenberg_bracket, quadra_check,
    quotient_by_center, DeformationSpec,
};
use cartanlab::exterior::{
    cartan_class, ce_differential, interior_product, wedge, DualForm, Multiform,
};
use cartanlab::io::{algebra_to_json, parse_algebra};
use cartanlab::lie::{center, diagonal_derivations, jacobi_check, lower_central_series};
use cartanlab::manifold::forms::PolyForm;
use cartanlab::manifold::poly::{vars, Poly};
use cartanlab::manifold::sl::{a_field, pairing, sl_contact_data, sl_omega, sl_vars, var_index};
use cartanlab::sampling::Sampler;
use cartanlab::{Matrix, Scalar};
use common::{int, random_covector};
use num_traits::{One, Zero};
use proptest::prelude::*;

fn random_form(s: &mut Sampler, g: &Arc<LieAlgebra>, grade: usize) -> DualForm {
    let n = g.dim();
    let mut f = Multiform::zero(n, grade);
    for _ in 0..4 {
        let mut idx: Vec<usize> = Vec::new();
        while idx.len() < grade {
            let i = s.int(0, n as i64 - 1) as usize;
            if !idx.contains(&i) {
                idx.push(i);
            }
        }
        f.add_term(&idx, &s.rational());
    }
    DualForm::new(g.clone(), f).unwrap()
}

fn random_vector(s: &mut Sampler, n: usize) -> Vector {
    Vector(s.rationals(n))
}

fn random_dim3(s: &mut Sampler) -> CatalogEntry {
    let kind = match s.int(0, 4) {
        0 => Dim3Kind::Heisenberg,
        1 => Dim3Kind::Solvable1,
        2 => Dim3Kind::SolvableB(s.nonzero_rational()),
        3 => Dim3Kind::Sl2(s.nonzero_rational()),
        _ => Dim3Kind::So3,
    };
    catalog::dim3(kind).unwrap()
}

fn random_dim5(s: &mut Sampler) -> CatalogEntry {
    let names = Dim5Variant::names();
    let name = names[s.int(0, names.len() as i64 - 1) as usize];
    let k = Dim5Variant::param_names(name).unwrap().len();
    catalog::dim5(Dim5Variant::from_values(name, &s.rationals(k)).unwrap())
}

/// A Jacobi point of the 9-dimensional filiform family.
fn random_mu_c9(s: &mut Sampler) -> CatalogEntry {
    let a26 = s.rational();
    let a38 = s.nonzero_rational();
    let a14 = catalog::mu_c9_jacobi_a14(&a26, &a38).unwrap();
    catalog::filiform_contact(4, &[a14, a26, a38]).unwrap()
}

fn random_entry(s: &mut Sampler) -> CatalogEntry {
    match s.int(0, 7) {
        0 => random_dim3(s),
        1 => random_dim5(s),
        2 => catalog::heisenberg(s.int(1, 3) as usize),
        3 => catalog::filiform_model(s.int(3, 8) as usize),
        4 => {
            let p = s.int(2, 3) as usize;
            catalog::frobenius_model(p, &s.rationals(p - 1)).unwrap()
        }
        5 => {
            let p = s.int(2, 3) as usize;
            catalog::filiform_contact(p, &s.rationals(p - 1)).unwrap()
        }
        6 => random_mu_c9(s),
        _ => catalog::frobenius_sample(),
    }
}

fn is_heisenberg_like(g: &LieAlgebra) -> bool {
    let derived = lower_central_series(g);
    let z = center(g);
    derived.nilindex == Some(2) && z.dim() == 1 && derived.terms[0] == z
}

fn cases(n: u32) -> ProptestConfig {
    ProptestConfig {
        cases: n,
        failure_persistence: None,
        ..ProptestConfig::default()
    }
}

proptest! {
    #![proptest_config(cases(48))]

    #[test]
    fn wedge_is_graded_commutative(seed in any::<u64>(), ga in 1usize..=3, gb in 1usize..=3) {
        let mut s = Sampler::new(seed);
        let g = Arc::new(LieAlgebra::abelian(6));
        let a = random_form(&mut s, &g, ga);
        let b = random_form(&mut s, &g, gb);
        let ab = wedge(&a, &b).unwrap();
        let ba = wedge(&b, &a).unwrap();
        let sign = if ga * gb % 2 == 0 { int(1) } else { int(-1) };
        prop_assert_eq!(ab, ba.scale(&sign));
    }

    #[test]
    fn differential_is_an_antiderivation(seed in any::<u64>(), ga in 1usize..=2, gb in 1usize..=2) {
        let mut s = Sampler::new(seed);
        let e = random_entry(&mut s);
        prop_assume!(e.dim() >= ga + gb + 1);
        let a = random_form(&mut s, &e.algebra, ga);
        let b = random_form(&mut s, &e.algebra, gb);
        let lhs = ce_differential(&wedge(&a, &b).unwrap());
        let sign = if ga % 2 == 0 { int(1) } else { int(-1) };
        let rhs = wedge(&ce_differential(&a), &b)
            .unwrap()
            .add(&wedge(&a, &ce_differential(&b)).unwrap().scale(&sign))
            .unwrap();
        prop_assert_eq!(lhs, rhs, "{}", e.id);
    }

    #[test]
    fn d_squared_vanishes_on_lie_algebras(seed in any::<u64>(), grade in 1usize..=3) {
        let mut s = Sampler::new(seed);
        let e = random_entry(&mut s);
        prop_assume!(e.dim() > grade + 1);
        let w = random_form(&mut s, &e.algebra, grade);
        prop_assert!(ce_differential(&ce_differential(&w)).is_zero(), "{}", e.id);
    }

    #[test]
    fn interior_twice_vanishes(seed in any::<u64>(), grade in 2usize..=4) {
        let mut s = Sampler::new(seed);
        let g = Arc::new(LieAlgebra::abelian(6));
        let w = random_form(&mut s, &g, grade);
        let x = random_vector(&mut s, 6);
        let once = interior_product(&x, &w).unwrap();
        prop_assert!(interior_product(&x, &once).unwrap().is_zero());
    }

    #[test]
    fn three_dimensional_simple_classes(seed in any::<u64>()) {
        let mut s = Sampler::new(seed);
        let so3 = catalog::dim3(Dim3Kind::So3).unwrap();
        let w = random_covector(&mut s, &so3.algebra);
        prop_assert_eq!(cartan_class(&w).unwrap().class, 3);
        let sl2 = catalog::dim3(Dim3Kind::Sl2(s.nonzero_rational())).unwrap();
        let w = random_covector(&mut s, &sl2.algebra);
        let c = cartan_class(&w).unwrap().class;
        prop_assert!(c == 2 || c == 3);
    }

    #[test]
    fn center_in_kernel_is_characteristic(seed in any::<u64>()) {
        let mut s = Sampler::new(seed);
        let e = random_entry(&mut s);
        let w = random_covector(&mut s, &e.algebra);
        let r = cartan_class(&w).unwrap();
        let omega = w.covector_coeffs();
        let z = center(&e.algebra);
        for v in z.basis() {
            let pair: Scalar = v.0.iter().zip(&omega).map(|(a, b)| a * b).sum();
            if pair.is_zero() {
                prop_assert!(r.characteristic_space.contains(v), "{}", e.id);
            }
        }
        prop_assert!(r.class <= e.dim() - z.dim() + 1, "{}", e.id);
    }

    #[test]
    fn frobeniusian_models_have_trivial_center(seed in any::<u64>(), p in 2usize..=4) {
        let mut s = Sampler::new(seed);
        let e = catalog::frobenius_model(p, &s.rationals(p - 1)).unwrap();
        prop_assert!(center(&e.algebra).is_zero());
    }

    #[test]
    fn diagonal_derivations_respect_brackets(p in 1usize..=3) {
        let e = catalog::heisenberg(p);
        let ds = diagonal_derivations(&e.algebra);
        prop_assert_eq!(ds.len(), p + 1);
        for d in &ds {
            for (i, j, k, _) in e.algebra.map().entries() {
                prop_assert_eq!(&d[i] + &d[j], d[k].clone());
            }
        }
    }

    #[test]
    fn coboundary_squares_to_zero(seed in any::<u64>()) {
        let mut s = Sampler::new(seed);
        let e = random_entry(&mut s);
        let n = e.dim();
        let f = LinearMap(Matrix::from_rows((0..n).map(|_| s.sparse_vector(n, 1, 3)).collect()));
        let phi = ce_coboundary_1(&f, &e.algebra);
        prop_assert!(ce_coboundary_2(&phi, &e.algebra).is_zero(), "{}", e.id);
    }

    #[test]
    fn quadra_solutions_are_lie(seed in any::<u64>(), p in 1usize..=2) {
        let mut s = Sampler::new(seed);
        let n = 2 * p + 1;
        let spec = if s.chance(1, 2) {
            let e = if p == 1 { random_dim3(&mut s) } else { random_dim5(&mut s) };
            DeformationSpec::from_contact_basis(&e.algebra).unwrap().0
        } else {
            let mut phi1 = BilinearMap::zero(n);
            for i in 0..2 * p {
                for j in i + 1..2 * p {
                    for k in 0..2 * p {
                        if s.chance(1, 4) {
                            phi1.set_coeff(i, j, k, s.rational());
                        }
                    }
                }
            }
            let f = LinearMap(Matrix::from_rows((0..2 * p).map(|_| s.sparse_vector(2 * p, 1, 3)).collect()));
            DeformationSpec::quadratic(p, phi1, &f).unwrap()
        };
        if quadra_check(&spec).ok {
            prop_assert!(jacobi_check(&spec.assemble()).ok);
        }
        prop_assert_eq!(spec.base.clone(), heisenberg_bracket(p));
    }

    #[test]
    fn extension_shifts_parity_and_nilindex(seed in any::<u64>()) {
        let mut s = Sampler::new(seed);
        let e = match s.int(0, 2) {
            0 => catalog::heisenberg(s.int(1, 4) as usize),
            1 => {
                let p = s.int(2, 3) as usize;
                catalog::filiform_contact(p, &s.rationals(p - 1)).unwrap()
            }
            _ => random_mu_c9(&mut s),
        };
        prop_assume!(e.constraints_hold);
        let q = quotient_by_center(&e.algebra).unwrap();
        prop_assert_eq!(q.base.dim() % 2, 0);
        let ext = central_extension(&q.base, &q.theta).unwrap();
        let before = lower_central_series(&q.base).nilindex.unwrap();
        let after = lower_central_series(&ext).nilindex.unwrap();
        prop_assert_eq!(after, before + 1, "{}", e.id);
    }
}

proptest! {
    #![proptest_config(cases(32))]

    #[test]
    fn contraction_preserves_lie_and_grows_center(seed in any::<u64>()) {
        let mut s = Sampler::new(seed);
        let e = random_entry(&mut s);
        let ex: Vec<i64> = (0..e.dim()).map(|_| s.int(0, 2)).collect();
        let spec = ContractionSpec::new((*e.algebra).clone(), ex).unwrap();
        if let Some(limit) = contract(&spec).unwrap().limit() {
            prop_assert!(jacobi_check(limit).ok);
            prop_assert!(center(limit).dim() >= center(&e.algebra).dim(), "{}", e.id);
        }
    }

    #[test]
    fn contact_rescaling_reaches_heisenberg(seed in any::<u64>(), five in any::<bool>()) {
        let mut s = Sampler::new(seed);
        let e = if five { random_dim5(&mut s) } else { random_dim3(&mut s) };
        let mut ex = vec![1; e.dim()];
        *ex.last_mut().unwrap() = 2;
        let spec = ContractionSpec::new((*e.algebra).clone(), ex).unwrap();
        let limit = contract(&spec).unwrap().limit().cloned();
        prop_assert!(limit.is_some_and(|l| is_heisenberg_like(&l)), "{}", e.id);
    }

    #[test]
    fn catalog_families_are_lie(seed in any::<u64>()) {
        let mut s = Sampler::new(seed);
        let e = random_entry(&mut s);
        prop_assert!(jacobi_check(&e.algebra).ok, "{}", e.id);
    }

    #[test]
    fn distinguished_class_matches_constraints(seed in any::<u64>()) {
        let mut s = Sampler::new(seed);
        let e = match s.int(0, 2) {
            0 => random_mu_c9(&mut s),
            1 => {
                let p = s.int(2, 3) as usize;
                let a = s.sparse_vector(p - 1, 1, 2);
                catalog::filiform_contact(p, &a).unwrap()
            }
            _ => random_entry(&mut s),
        };
        let c = cartan_class(&e.distinguished_form).unwrap().class;
        if e.constraints_hold {
            prop_assert_eq!(c, e.expected_class, "{}", e.id);
        } else {
            prop_assert!(c < e.expected_class, "{}", e.id);
        }
    }

    #[test]
    fn nilpotent_entries_have_odd_class(seed in any::<u64>()) {
        let mut s = Sampler::new(seed);
        let e = random_entry(&mut s);
        prop_assume!(e.nilpotent);
        let w = random_covector(&mut s, &e.algebra);
        prop_assert_eq!(cartan_class(&w).unwrap().class % 2, 1, "{}", e.id);
    }

    #[test]
    fn algebra_files_round_trip(seed in any::<u64>()) {
        let mut s = Sampler::new(seed);
        let e = random_entry(&mut s);
        let text = algebra_to_json(&e.algebra);
        let back = parse_algebra(&text).unwrap();
        prop_assert_eq!(&back, &*e.algebra);
        prop_assert_eq!(algebra_to_json(&back), text);
    }
}

#[test]
fn zero_parameter_dim5_is_heisenberg() {
    for name in Dim5Variant::names() {
        let k = Dim5Variant::param_names(name).unwrap().len();
        let e = catalog::dim5(Dim5Variant::from_values(name, &vec![int(0); k]).unwrap());
        assert!(is_heisenberg_like(&e.algebra), "{name}");
    }
}

#[test]
fn broken_bracket_has_nonzero_d_squared() {
    // [X1,X2] = X2, [X1,X3] = X1 violates Jacobi.
    let g = Arc::new(LieAlgebra::from_int_brackets(
        3,
        &[(1, 2, &[(2, 1)]), (1, 3, &[(1, 1)])],
    ));
    assert!(!jacobi_check(&g).ok);
    let any_nonzero = (0..3)
        .any(|i| !ce_differential(&ce_differential(&DualForm::basis(g.clone(), i))).is_zero());
    assert!(any_nonzero);
}

proptest! {
    #![proptest_config(cases(24))]

    #[test]
    fn polynomial_d_squared_vanishes(seed in any::<u64>(), nv in 2usize..=6, grade in 0usize..=4) {
        let mut s = Sampler::new(seed);
        prop_assume!(grade < nv);
        let names: Vec<String> = (1..=nv).map(|i| format!("y{i}")).collect();
        let v = vars(&names.iter().map(String::as_str).collect::<Vec<_>>());
        let mut f = PolyForm::zero(v.clone(), grade);
        for _ in 0..3 {
            let mut idx: Vec<usize> = Vec::new();
            while idx.len() < grade {
                let i = s.int(0, nv as i64 - 1) as usize;
                if !idx.contains(&i) {
                    idx.push(i);
                }
            }
            f.add_term(&idx, &common::random_poly(&mut s, &v, nv, 3, 3));
        }
        prop_assert!(f.exterior_d().exterior_d().is_zero());
    }

    #[test]
    fn omega_on_rotation_fields_is_twice_the_pairing(n in 1usize..=2, i in 1usize..=4, j in 1usize..=4) {
        prop_assume!(i < j && j <= 2 * n);
        let v = sl_vars(n);
        let w = sl_omega(n, &v);
        let val = w.evaluate(&[a_field(n, &v, i, j)]).unwrap();
        prop_assert_eq!(val, pairing(n, &v, i, j).scale(&int(2)));
    }

    #[test]
    fn reeb_field_on_sl2(seed in any::<u64>()) {
        let mut s = Sampler::new(seed);
        let d = sl_contact_data(1);
        let (a, b, c) = (s.nonzero_rational(), s.rational(), s.rational());
        let dd = &(&Scalar::one() + &(&b * &c)) / &a;
        let m = Matrix::from_rows(vec![vec![a, b], vec![c, dd]]);
        prop_assert!(m.det().is_one());
        let mut point = vec![Scalar::zero(); 4];
        for j in 1..=2 {
            for l in 1..=2 {
                point[var_index(1, j, l)] = m[(j - 1, l - 1)].clone();
            }
        }
        let z = d.reeb.at(&point);
        let wz = d.omega.at(&point).interior(&z.iter().cloned().map(Some).collect::<Vec<_>>());
        prop_assert_eq!(wz.constant_value().cloned(), Some(Scalar::one()));
        let izdw = d.omega.exterior_d().interior(&d.reeb).unwrap().at(&point);
        // Tangent vectors m·X with X traceless.
        let (p, q, r) = (s.rational(), s.rational(), s.rational());
        let x = Matrix::from_rows(vec![vec![p.clone(), q], vec![r, -p]]);
        let t = m.mul(&x);
        let mut tv = vec![None; 4];
        for j in 1..=2 {
            for l in 1..=2 {
                tv[var_index(1, j, l)] = Some(t[(j - 1, l - 1)].clone());
            }
        }
        prop_assert!(izdw.interior(&tv).is_zero());
    }
}

#[test]
fn dual_forms_of_different_algebras_do_not_mix() {
    let a = Arc::new(LieAlgebra::abelian(3));
    let h = catalog::heisenberg(1).algebra;
    assert!(DualForm::basis(a, 0).add(&DualForm::basis(h, 0)).is_err());
}

#[test]
fn poly_vars_are_checked() {
    let x = Poly::var(vars(&["x"]), 0);
    let f = PolyForm::function(x);
    let g = PolyForm::function(Poly::var(vars(&["y"]), 0));
    assert!(f.add(&g).is_err());
}
