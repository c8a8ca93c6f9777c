use num_traits::{One, Signed};

use super::*;
use crate::bch::bch_list;
use crate::lyndon::{coordinate_of, lyndon_coordinates};
use crate::rational::{frac, int, Rational};

fn gen(s: &Space, n: &str) -> Element {
    Element::generator(s, n).unwrap()
}

#[test]
fn flattened_edges_in_ambient_generators() {
    let d = SymmetricData::triangle(2, None).unwrap();
    let s = &d.ambient;
    let (e, f, g) = (gen(s, "e"), gen(s, "f"), gen(s, "g"));
    let e0 = &d.flat_ambient.labels()[1];
    assert_eq!(e0.depth_component(0), (&(&e.scale(&int(2)) - &f) - &g).scale(&frac(1, 3)));
    let b = gen(s, "b");
    assert_eq!(d.boundary.flow_point(e0, &b).unwrap(), gen(s, "c"));
}

#[test]
fn subdivision_in_b() {
    let b = triangle_b_space(4).unwrap();
    let e0 = gen(&b, "e0");
    let mut cycle = triangle_cycle(&b).unwrap();
    let tau = make_tau(&b).unwrap();
    let mut tau_n = e0.clone();
    for n in 1..=3 {
        cycle = cycle.inscribe_step().unwrap();
        tau_n = tau.apply(&tau_n).unwrap();
        let e_n = &cycle.labels()[0];
        let scale = Rational::one() / int(-2).pow(n);
        assert_eq!(e_n.depth_component(0), e0.scale(&scale), "n = {n}");
        if n <= 2 {
            assert_eq!(&tau_n, e_n, "n = {n}");
        }
        assert!(cycle.is_flat().unwrap());
    }
}

#[test]
fn sigma_sends_g0_to_f1() {
    let b = triangle_b_space(5).unwrap();
    let c0 = triangle_cycle(&b).unwrap();
    let c1 = c0.inscribe_step().unwrap();
    let sigma = make_sigma(&b).unwrap();
    assert_eq!(sigma.apply(&c0.labels()[2]).unwrap(), c1.labels()[1]);
    assert_eq!(sigma.apply(&c0.labels()[0]).unwrap(), c1.labels()[2]);
}

#[test]
fn sigma_depth_zero_matrix() {
    let lp = kgon_linear_part(3).unwrap();
    assert_eq!(lp.generators, ["e0", "f0"]);
    assert_eq!(lp.matrix, vec![vec![frac(1, 2), frac(-1, 2)], vec![frac(1, 2), frac(0, 1)]]);
}

#[test]
fn alpha_low_depths() {
    let alpha = alpha_exact(2).unwrap();
    let c = lyndon_coordinates(&alpha).unwrap();
    let b = alpha.table();
    let (e, f) = (b.require("e0").unwrap(), b.require("f0").unwrap());
    assert_eq!(coordinate_of(&c, &[e]), frac(-1, 3));
    assert_eq!(coordinate_of(&c, &[f]), frac(-2, 3));
    assert_eq!(coordinate_of(&c, &[e, f]), frac(-1, 6));
    assert_eq!(coordinate_of(&c, &[e, e, f]), frac(-1, 54));
    assert_eq!(coordinate_of(&c, &[e, f, f]), frac(1, 36));
    assert_eq!(c.len(), 5);
}

#[test]
fn iterative_alpha_starts_at_half_g0_and_converges_at_depth_zero() {
    let b = triangle_b_space(3).unwrap();
    let g0 = -&crate::bch(&gen(&b, "e0"), &gen(&b, "f0")).unwrap();
    assert_eq!(alpha_iterative(1, 2).unwrap(), g0.scale(&frac(1, 2)));
    // Oracle: partial sums of the geometric series v + Mv + M²v + … with
    // v = (-1/2, -1/2) and M the depth-0 matrix of σ.
    let its = alpha_iterates(12, 0).unwrap();
    let mut v = (frac(-1, 2), frac(-1, 2));
    let mut sum = v.clone();
    for (n, it) in its.iter().enumerate() {
        if n > 0 {
            v = (&v.0 * frac(1, 2) - &v.1 * frac(1, 2), &v.0 * frac(1, 2));
            sum = (&sum.0 + &v.0, &sum.1 + &v.1);
        }
        let c = lyndon_coordinates(it).unwrap();
        assert_eq!(coordinate_of(&c, &[0]), sum.0);
        assert_eq!(coordinate_of(&c, &[1]), sum.1);
    }
    let limit = (frac(-1, 3), frac(-2, 3));
    let last = &its[11];
    let c = lyndon_coordinates(last).unwrap();
    assert!((coordinate_of(&c, &[0]) - &limit.0).abs() < frac(1, 1000));
    assert!((coordinate_of(&c, &[1]) - &limit.1).abs() < frac(1, 1000));
}

#[test]
fn beta_and_gamma() {
    let (_, beta, gamma) = connectors(2).unwrap();
    let b = beta.space().clone();
    let (e0, f0) = (gen(&b, "e0"), gen(&b, "f0"));
    assert_eq!(beta.depth_component(0), (&e0.scale(&int(2)) + &f0).scale(&frac(1, 3)));
    assert_eq!(gamma.depth_component(0), (&f0 - &e0).scale(&frac(1, 3)));
    assert!(gamma.depth_component(1).is_zero());
    let ef = e0.bracket(&f0).unwrap();
    let expected = (&e0 + &f0).bracket(&ef).unwrap().scale(&frac(-1, 108));
    assert_eq!(gamma.depth_component(2), expected);
}

#[test]
fn symmetric_point_depth_zero_is_the_centroid() {
    let x = symmetric_point(2).unwrap();
    let s = x.space().clone();
    let centroid = (&(&gen(&s, "a") + &gen(&s, "b")) + &gen(&s, "c")).scale(&frac(1, 3));
    assert_eq!(x.length_component(1), centroid);
}

#[test]
fn reflection_reverses_the_boundary_loop() {
    let s = crate::cell::triangle_space(5).unwrap();
    let l = bch_list(&s, &[gen(&s, "g"), gen(&s, "e"), gen(&s, "f")]).unwrap();
    assert_eq!(s3_apply("reflection_a", &l).unwrap(), -&l);
    assert!(matches!(s3_apply("shear", &l), Err(crate::Error::Config(_))));
}

#[test]
fn triangle_checks_pass_at_depth_three() {
    let d = SymmetricData::triangle(3, None).unwrap();
    for c in d.checks().unwrap() {
        assert!(c.passed, "{}: {}", c.name, c.detail);
    }
}

#[test]
fn specialised_and_generic_triangle_paths_agree() {
    let t = SymmetricData::triangle(3, None).unwrap();
    let g = SymmetricData::generic(&Polygon::triangle(), 3, None).unwrap();
    assert!(t.same_as(&g).unwrap());
    assert_eq!(t.sigma.apply(t.alpha()).unwrap(), g.sigma.apply(g.alpha()).unwrap());
    let kg = kgon_symmetric_data(3, 3, None).unwrap();
    assert!(kg.same_as(&t).unwrap());
}

#[test]
fn corrupted_alpha_fails_the_fixed_point_first() {
    let d = SymmetricData::triangle(2, Some(Corruption::Alpha)).unwrap();
    let checks = d.checks().unwrap();
    let first = checks.iter().find(|c| !c.passed).unwrap();
    assert_eq!(first.name, "fixed_point");
    assert!(Corruption::parse("zeta").is_err());
}

#[test]
fn universal_word_leading_term() {
    let d = SymmetricData::triangle(3, None).unwrap();
    let u = universal_word(d.alpha(), d.beta(), d.gamma()).unwrap();
    let a = gen(&u.space, "alpha");
    let b = gen(&u.space, "beta");
    assert_eq!(u.word.depth_component(0), -&(&a + &b));
    for r in 1..=3 {
        assert!(u.word.depth_component(r).is_zero(), "depth {r}");
    }
    assert!(u.swap_residual().unwrap().is_zero());
    assert!(u.involution_residual().unwrap().is_zero());
}

#[test]
fn square_spectrum() {
    let lp = kgon_linear_part(4).unwrap();
    let m = |p, q| frac(p, q);
    assert_eq!(
        lp.matrix,
        vec![
            vec![m(1, 2), m(0, 1), m(-1, 2)],
            vec![m(1, 2), m(1, 2), m(-1, 2)],
            vec![m(0, 1), m(1, 2), m(0, 1)],
        ]
    );
    assert_eq!(lp.characteristic.0, vec![m(0, 1), m(1, 2), m(-1, 1), m(1, 1)]);
    assert_eq!(lp.nonzero_modulus_squared(), Some(m(1, 2)));
    assert!(lp.is_contracting());
    assert!(lp.to_doc().notes[0].contains("1/2(-1±i) are roots: false"));
    assert!(kgon_linear_part(2).is_err());
}

#[test]
fn polygon_connector_depth_zero_is_weighted_centroid() {
    // Solving the depth-0 slice by hand gives -(1/k) Σ i·s_i.
    for k in 4..=5 {
        let d = kgon_symmetric_data(k, 1, None).unwrap();
        let mut expected = Element::zero(&d.b);
        for i in 1..k {
            expected += &gen(&d.b, &format!("s{i}")).scale(&frac(-(i as i64), k as i64));
        }
        assert_eq!(d.alpha().depth_component(0), expected, "k = {k}");
    }
}

#[test]
fn square_checks_pass_at_depth_two() {
    let d = kgon_symmetric_data(4, 2, None).unwrap();
    assert!(bch_list(&d.ambient, d.flat_ambient.labels()).unwrap().is_zero());
    for c in d.checks().unwrap() {
        assert!(c.passed, "{}: {}", c.name, c.detail);
    }
}

#[test]
fn slice_solver_rejects_non_contracting_maps() {
    let b = triangle_b_space(2).unwrap();
    let id = crate::Substitution::identity(&b);
    let shift = gen(&b, "e0");
    assert!(matches!(solve_fixed_point(&id, &shift), Err(crate::Error::Internal(_))));
}
