//! Acceptance suite: one line per criterion, nonzero exit on any failure.

mod common;

use std::sync::Arc;
use std::time::Instant;

use cartanlab::algebra::{BilinearMap, LinearMap};
use cartanlab::catalog::{self, Dim3Kind, Dim5Variant};
use cartanlab::contraction::{contract, is_in_model_family, principal_spectrum, ContractionSpec};
use cartanlab::deformation::{extension_roundtrip, quadra_check, DeformationSpec};
use cartanlab::exterior::cartan_class;
use cartanlab::lie::{f_subalgebra, jacobi_check};
use cartanlab::manifold::h3::{h3_contact_polynomial, h3_contact_status, H3Contact};
use cartanlab::manifold::poisson::{darboux_poisson, darboux_vars};
use cartanlab::manifold::poly::Poly;
use cartanlab::manifold::sl::{
    pythagorean_rotation, sl_contact_data, sl_contact_identity, sl_reeb_check, so_invariance_check,
};
use cartanlab::sampling::Sampler;
use cartanlab::{DualForm, LieAlgebra, Scalar};
use common::{class_by_rank, int, random_covector, random_poly};
use num_traits::Zero;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn heisenberg_contact() -> Outcome {
    for p in 1..=5 {
        let e = catalog::heisenberg(p);
        let w = DualForm::basis(e.algebra.clone(), 2 * p);
        let c = cartan_class(&w).map_err(|e| e.to_string())?.class;
        ensure(c == 2 * p + 1, || format!("h{}: class {c}", 2 * p + 1))?;
    }
    Ok("p = 1..5".into())
}

fn class_cross_oracle(s: &mut Sampler) -> Outcome {
    let suite = catalog::standard_suite();
    let mut checked = 0;
    for e in &suite {
        for _ in 0..50 {
            let w = random_covector(s, &e.algebra);
            let r = cartan_class(&w).map_err(|err| format!("{}: {err}", e.id))?;
            let kernel = e.dim() - r.characteristic_space.dim();
            ensure(r.class == kernel && r.class == class_by_rank(&w), || {
                format!("{}: wedge {} vs kernel {kernel}", e.id, r.class)
            })?;
            checked += 1;
        }
    }
    Ok(format!(
        "{} entries, {checked} covectors, 0 disagreements",
        suite.len()
    ))
}

fn nilpotent_parity(s: &mut Sampler) -> Outcome {
    let mut algebras: Vec<(String, Arc<LieAlgebra>)> = Vec::new();
    for p in 1..=5 {
        let e = catalog::heisenberg(p);
        algebras.push((e.id, e.algebra));
    }
    for n in 5..=9 {
        let e = catalog::filiform_model(n);
        algebras.push((e.id, e.algebra));
    }
    let mu = catalog::mu_c9_reference();
    algebras.push((mu.id, mu.algebra));
    for (id, g) in &algebras {
        for _ in 0..100 {
            let w = random_covector(s, g);
            let c = cartan_class(&w).map_err(|e| e.to_string())?.class;
            ensure(c % 2 == 1, || format!("{id}: even class {c} at {w}"))?;
        }
    }
    Ok(format!(
        "{} algebras × 100 covectors, all odd",
        algebras.len()
    ))
}

fn dim3_entry(kind: &str, s: &mut Sampler) -> catalog::CatalogEntry {
    let k = match kind {
        "h3" => Dim3Kind::Heisenberg,
        "solvable1" => Dim3Kind::Solvable1,
        "solvable_b" => Dim3Kind::SolvableB(s.nonzero_rational()),
        "sl2" => Dim3Kind::Sl2(s.nonzero_rational()),
        _ => Dim3Kind::So3,
    };
    catalog::dim3(k).unwrap()
}

fn quadra_implies_jacobi(s: &mut Sampler) -> Outcome {
    let mut runs = 0;
    let mut entries: Vec<Box<dyn Fn(&mut Sampler) -> catalog::CatalogEntry>> = Vec::new();
    for kind in ["h3", "solvable1", "solvable_b", "sl2", "so3"] {
        entries.push(Box::new(move |s| dim3_entry(kind, s)));
    }
    for name in Dim5Variant::names() {
        entries.push(Box::new(move |s| {
            let k = Dim5Variant::param_names(name).unwrap().len();
            catalog::dim5(Dim5Variant::from_values(name, &s.rationals(k)).unwrap())
        }));
    }
    for make in &entries {
        for _ in 0..25 {
            let e = make(s);
            let (spec, _) = DeformationSpec::from_contact_basis(&e.algebra)
                .map_err(|err| format!("{}: {err}", e.id))?;
            let r = quadra_check(&spec);
            ensure(r.ok, || {
                format!("{}: equations {:?} fail", e.id, r.failing_equations())
            })?;
            ensure(jacobi_check(&spec.assemble()).ok, || {
                format!("{}: assembled bracket not Jacobi", e.id)
            })?;
            runs += 1;
        }
    }
    let mut phi1 = BilinearMap::zero(3);
    phi1.set_coeff(0, 1, 0, int(1));
    let f = LinearMap::diagonal(&[int(1), int(-1)]);
    let spec = DeformationSpec::quadratic(1, phi1, &f).unwrap();
    let failing = quadra_check(&spec).failing_equations();
    ensure(failing == vec![3], || {
        format!("negative case fails {failing:?}, expected [3]")
    })?;
    Ok(format!(
        "{} families × 25 tuples ({runs} specs); negative case fails exactly equation 3",
        entries.len()
    ))
}

fn extension_round_trip() -> Outcome {
    for e in [
        catalog::heisenberg(1),
        catalog::heisenberg(2),
        catalog::mu_c9_reference(),
    ] {
        let back = extension_roundtrip(&e.algebra).map_err(|err| format!("{}: {err}", e.id))?;
        ensure(back == *e.algebra, || {
            format!("{}: reconstruction differs", e.id)
        })?;
    }
    Ok("h3, h5, mu_c9:a=[12,3,1] rebuilt exactly".into())
}

fn filiform_gate() -> Outcome {
    let grid = [int(-2), Scalar::frac(-1, 2), int(0), int(1), int(3)];
    let (mut contact, mut boundary, mut lie) = (0, 0, 0);
    for a14 in &grid {
        for a26 in &grid {
            for a38 in &grid {
                let a = [a14.clone(), a26.clone(), a38.clone()];
                let e = catalog::filiform_contact(4, &a).map_err(|e| e.to_string())?;
                let conds = [a38.clone(), a26 - a38, &(a14 - &(&int(3) * a26)) + a38];
                let all = conds.iter().all(|c| !c.is_zero());
                let c = cartan_class(&e.distinguished_form)
                    .map_err(|e| e.to_string())?
                    .class;
                ensure((c == 9) == all, || {
                    format!("a = {a:?}: class {c}, conditions {all}")
                })?;
                contact += usize::from(all);
                boundary += usize::from(!all);
                lie += usize::from(jacobi_check(&e.algebra).ok);
            }
        }
    }
    Ok(format!(
        "125 points: {contact} contact, {boundary} on a boundary; {lie} satisfy Jacobi"
    ))
}

fn f_dimension() -> Outcome {
    for p in 1..=4 {
        let f = f_subalgebra(p);
        ensure(f.dimension() == p * (2 * p + 1), || {
            format!("p = {p}: dim {}", f.dimension())
        })?;
        ensure(f.traceless, || {
            format!("p = {p}: a solution has nonzero trace")
        })?;
    }
    Ok("p = 1..4, all traceless".into())
}

fn frobenius_model(s: &mut Sampler) -> Outcome {
    for p in 2..=4 {
        for _ in 0..25 {
            let a = s.rationals(p - 1);
            let e = catalog::frobenius_model(p, &a).unwrap();
            ensure(jacobi_check(&e.algebra).ok, || {
                format!("{}: not Jacobi", e.id)
            })?;
            let c = cartan_class(&e.distinguished_form)
                .map_err(|e| e.to_string())?
                .class;
            ensure(c == 2 * p, || format!("{}: class {c}", e.id))?;
            let mut m = catalog::frobenius_base(p).unwrap().algebra.map().clone();
            for (ak, psi) in a.iter().zip(catalog::psi_cocycles(p)) {
                m = m.add(&psi.scale(ak));
            }
            ensure(m == *e.algebra.map(), || {
                format!("{}: base + cocycles differs", e.id)
            })?;
            let spec = principal_spectrum(&e.algebra, 1).map_err(|e| e.to_string())?;
            for ak in &a {
                let other = -(ak + &int(1));
                ensure(spec.contains(ak) && spec.contains(&other), || {
                    format!(
                        "{}: spectrum {:?} misses {ak} or {other}",
                        e.id,
                        spec.multiset()
                    )
                })?;
            }
        }
    }
    Ok("p = 2..4 × 25 tuples".into())
}

fn exponent_grid(n: usize) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..=2).map(move |e| {
                    let mut w = v.clone();
                    w.push(e);
                    w
                })
            })
            .collect();
    }
    out
}

fn contractions(s: &mut Sampler) -> Outcome {
    let sl2 = catalog::dim3(Dim3Kind::Sl2(int(1))).unwrap();
    let spec = ContractionSpec::new((*sl2.algebra).clone(), vec![1, 1, 2]).unwrap();
    let lim = contract(&spec).map_err(|e| e.to_string())?;
    ensure(
        lim.limit() == Some(&*catalog::heisenberg(1).algebra),
        || "sl2 (1,1,2) is not h3".into(),
    )?;
    let (mut converged, mut in_family) = (0, 0);
    for p in 2..=3 {
        for _ in 0..3 {
            let a = s.rationals(p - 1);
            let g = catalog::frobenius_model(p, &a).unwrap().algebra;
            for ex in exponent_grid(2 * p) {
                let spec = ContractionSpec::new((*g).clone(), ex.clone()).unwrap();
                let Some(limit) = contract(&spec).map_err(|e| e.to_string())?.limit().cloned()
                else {
                    continue;
                };
                converged += 1;
                if let Some(b) = is_in_model_family(&limit) {
                    in_family += 1;
                    ensure(b == a, || format!("a = {a:?}, exponents {ex:?} give {b:?}"))?;
                }
            }
        }
    }
    Ok(format!(
        "sl2 → h3; {converged} converging grid contractions of models, {in_family} land in the family, all at the original parameters"
    ))
}

fn sl_identity() -> Outcome {
    let r = sl_contact_identity(1).map_err(|e| e.to_string())?;
    let paper = -(2i64.pow(2)) * 1;
    ensure(
        r.q == 1 && r.constant == int(-4) && r.constant == int(paper),
        || format!("n = 1: q = {}, constant {}", r.q, r.constant),
    )?;
    let d = sl_contact_data(1);
    let reeb = sl_reeb_check(&d);
    ensure(reeb.pairing_is_det, || "ω(Z) ≠ Δ".into())?;
    let m = reeb.contraction_multiple.clone();
    ensure(m == Some(int(1)) || m == Some(int(-1)), || {
        format!("i(Z)dω multiple {m:?}")
    })?;
    for (a, b) in [(2, 1), (3, 2), (4, 1), (5, 2), (4, 3)] {
        let rot = pythagorean_rotation(2, 0, 1, a, b);
        ensure(so_invariance_check(1, &rot) == Ok(true), || {
            format!("rotation ({a},{b}) not invariant")
        })?;
    }
    let t = Instant::now();
    let r2 = sl_contact_identity(2).map_err(|e| e.to_string())?;
    ensure(r2.q == 7, || format!("n = 2: q = {}", r2.q))?;
    Ok(format!(
        "n = 1: (q=1, constant=-4), i(Z)dω = {}·dΔ, 5 rotations invariant; n = 2: q = 7, constant = {} ({} ms)",
        m.unwrap(),
        r2.constant,
        t.elapsed().as_millis()
    ))
}

fn h3_polynomials() -> Outcome {
    let u = |c: &[i64]| Poly::univariate("u", &c.iter().map(|&x| int(x)).collect::<Vec<_>>());
    let zero = int(0);
    let p =
        h3_contact_polynomial(&zero, &u(&[1]), &u(&[]), &u(&[0, 1])).map_err(|e| e.to_string())?;
    ensure(p == u(&[1, 0, -1]), || format!("got {p}"))?;
    match h3_contact_status(&p).map_err(|e| e.to_string())? {
        H3Contact::FailsAt(r) => {
            let mut roots = r.multiset();
            roots.sort_by(|x, y| x.re().cmp(y.re()));
            ensure(roots == vec![int(-1), int(1)], || {
                format!("roots {roots:?}")
            })?;
        }
        other => return Err(format!("1 − u² classified as {other:?}")),
    }
    for c in [1, -3, 7] {
        let q =
            h3_contact_polynomial(&zero, &u(&[]), &u(&[]), &u(&[c])).map_err(|e| e.to_string())?;
        ensure(q == u(&[-c * c]), || format!("(0,0,{c}) gives {q}"))?;
        ensure(h3_contact_status(&q) == Ok(H3Contact::Everywhere), || {
            format!("(0,0,{c}) has roots")
        })?;
    }
    Ok("1 − u² with roots ±1; −c² contact everywhere".into())
}

fn poisson_axioms(s: &mut Sampler) -> Outcome {
    for p in 1..=2 {
        let v = darboux_vars(p);
        for _ in 0..50 {
            let [f, g, h] = [0; 3].map(|_| random_poly(s, &v, 2 * p, 4, 3));
            let br = |a: &Poly, b: &Poly| darboux_poisson(p, a, b).unwrap();
            ensure(br(&f, &g) == br(&g, &f).neg(), || {
                format!("antisymmetry fails for {f}, {g}")
            })?;
            let leibniz = br(&f.mul(&g), &h);
            let rhs = f.mul(&br(&g, &h)).add(&br(&f, &h).mul(&g));
            ensure(leibniz == rhs, || {
                format!("Leibniz fails for {f}, {g}, {h}")
            })?;
            let jac = br(&f, &br(&g, &h))
                .add(&br(&g, &br(&h, &f)))
                .add(&br(&h, &br(&f, &g)));
            ensure(jac.is_zero(), || format!("Jacobi fails for {f}, {g}, {h}"))?;
        }
    }
    Ok("p = 1, 2 × 50 triples".into())
}

fn main() {
    let seed = cartanlab::sampling::configured_seed();
    let mut s = Sampler::new(seed);
    println!("acceptance suite, seed {seed}");
    let criteria: Vec<(&str, Box<dyn FnMut(&mut Sampler) -> Outcome>)> = vec![
        (
            "Heisenberg contact class",
            Box::new(|_| heisenberg_contact()),
        ),
        ("class-method cross-oracle", Box::new(class_cross_oracle)),
        ("nilpotent parity", Box::new(nilpotent_parity)),
        (
            "quadra system implies Jacobi",
            Box::new(quadra_implies_jacobi),
        ),
        (
            "central-extension round trip",
            Box::new(|_| extension_round_trip()),
        ),
        ("filiform contact gate", Box::new(|_| filiform_gate())),
        ("F-dimension", Box::new(|_| f_dimension())),
        ("frobeniusian model", Box::new(frobenius_model)),
        ("contractions", Box::new(contractions)),
        ("SL(2) contact identity", Box::new(|_| sl_identity())),
        ("H3 contact polynomial", Box::new(|_| h3_polynomials())),
        ("Poisson axioms", Box::new(poisson_axioms)),
    ];
    let mut failed = 0;
    for (i, (name, mut run)) in criteria.into_iter().enumerate() {
        let t = Instant::now();
        let r = run(&mut s);
        let ms = t.elapsed().as_millis();
        match r {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail} [{ms} ms]", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why} [{ms} ms]", i + 1);
            }
        }
    }
    println!("{} passed, {failed} failed", 12 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
