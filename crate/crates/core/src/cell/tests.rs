use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::bch::bch;
use crate::random::random_lie;
use crate::rational::int;

fn gen(s: &Space, n: &str) -> Element {
    Element::generator(s, n).unwrap()
}

#[test]
fn vertex_differential() {
    let m = interval_model(4).unwrap();
    let a = gen(m.space(), "a");
    assert_eq!(m.generator_differential("a").unwrap(), &a.bracket(&a).unwrap().scale(&frac(-1, 2)));
    assert!(m.mc_residual(&a).unwrap().is_zero());
    assert!(m.mc_residual(&Element::zero(m.space())).unwrap().is_zero());
}

#[test]
fn disc_model_values_and_d_squared() {
    for len in 1..=6 {
        let m = one_vertex_disc_model(len).unwrap();
        let s = m.space();
        let (a, e, h) = (gen(s, "a"), gen(s, "e"), gen(s, "h"));
        assert_eq!(m.generator_differential("e").unwrap(), &e.bracket(&a).unwrap());
        assert_eq!(m.generator_differential("h").unwrap(), &(&e - &a.bracket(&h).unwrap()));
        assert!(m.verify_d_squared().unwrap().all_vanish(), "len {len}");
    }
}

#[test]
fn loop_edge_rule_reduces_to_disc_formula() {
    let m = one_vertex_disc_model(5).unwrap();
    let via_edge = CellModel::new(m.space()).vertex("a").unwrap().edge("e", "a", "a").unwrap();
    assert_eq!(via_edge.generator_differential("e").unwrap(), m.generator_differential("e").unwrap());
}

#[test]
fn interval_formula_low_depths() {
    let m = interval_model(3).unwrap();
    let s = m.space();
    let (a, b, e) = (gen(s, "a"), gen(s, "b"), gen(s, "e"));
    let de = m.generator_differential("e").unwrap();
    assert_eq!(de.depth_component(0), &b - &a);
    assert_eq!(de.depth_component(1), e.bracket(&(&a + &b)).unwrap().scale(&frac(1, 2)));
    let ba = &b - &a;
    assert_eq!(de.depth_component(2), e.bracket(&e.bracket(&ba).unwrap()).unwrap().scale(&frac(1, 12)));
}

#[test]
fn interval_flow_reaches_endpoint() {
    for len in 1..=7 {
        let m = interval_model(len).unwrap();
        let s = m.space();
        let (a, b, e) = (gen(s, "a"), gen(s, "b"), gen(s, "e"));
        assert_eq!(m.flow_unit(&e, &a).unwrap(), b, "len {len}");
        assert_eq!(m.flow_unit(&-&e, &b).unwrap(), a);
    }
}

#[test]
fn interval_d_squared_through_depth_six() {
    let m = interval_model(7).unwrap();
    let r = m.verify_d_squared().unwrap();
    assert!(r.all_vanish());
    assert_eq!(r.entry("e").unwrap().vanishes_through(r.depth), 6);
}

#[test]
fn zero_flow_is_identity() {
    let m = triangle_boundary_model(4).unwrap();
    let s = m.space();
    let z = Element::zero(s);
    for n in ["a", "e", "h"] {
        let x = gen(s, n);
        assert_eq!(m.flow_unit(&z, &x).unwrap(), x);
    }
    assert!(matches!(m.flow_unit(&gen(s, "a"), &gen(s, "b")), Err(crate::Error::Domain(_))));
}

#[test]
fn localisation_examples() {
    let m = triangle_boundary_model(5).unwrap();
    let s = m.space();
    let (a, b, e, f, g) = (gen(s, "a"), gen(s, "b"), gen(s, "e"), gen(s, "f"), gen(s, "g"));
    assert!(m.localized_kernel_check(&Element::zero(s), &a).unwrap());
    let loop_b = bch_list(s, &[e.clone(), f.clone(), g.clone()]).unwrap();
    assert!(m.localized_kernel_check(&loop_b, &b).unwrap());
    assert!(!m.localized_kernel_check(&g, &a).unwrap());
    assert!(!m.localized_kernel_check(&loop_b, &a).unwrap());
}

#[test]
fn path_bch_examples() {
    let s = triangle_space(5).unwrap();
    let (e, f, g) = (gen(&s, "e"), gen(&s, "f"), gen(&s, "g"));
    assert_eq!(path_bch(&s, &[(e.clone(), Orientation::Forward)]).unwrap(), e);
    assert!(path_bch(&s, &[(e.clone(), Orientation::Forward), (e.clone(), Orientation::Reversed)])
        .unwrap()
        .is_zero());
    let l = path_bch(&s, &[(e, Orientation::Forward), (f, Orientation::Forward), (g, Orientation::Forward)]).unwrap();
    assert!(!l.is_zero());
    assert!(path_bch(&s, &[]).unwrap().is_zero());
}

#[test]
fn based_models() {
    for base in ["a", "b", "c"] {
        let m = based_triangle_model(base, 5).unwrap();
        let s = m.space();
        let dh = m.generator_differential("h").unwrap();
        assert_eq!(dh.depth_component(0), &(&gen(s, "e") + &gen(s, "f")) + &gen(s, "g"));
        let r = m.verify_d_squared().unwrap();
        assert!(r.all_vanish(), "base {base}");
    }
    let m = based_triangle_model("a", 4).unwrap();
    let s = m.space();
    let q = bch_list(s, &[gen(s, "g"), gen(s, "e"), gen(s, "f")]).unwrap();
    assert_eq!(m.generator_differential("h").unwrap(), &(&q - &gen(s, "a").bracket(&gen(s, "h")).unwrap()));
    assert!(matches!(based_triangle_model("x", 3), Err(crate::Error::Config(_))));
}

#[test]
fn unknown_generator_in_differential() {
    let m = triangle_boundary_model(3).unwrap();
    let h = gen(m.space(), "h");
    assert!(matches!(m.differential(&h), Err(crate::Error::Config(_))));
}

#[test]
fn derivation_rule_on_brackets() {
    let m = based_triangle_model("a", 5).unwrap();
    let s = m.space();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let letters: Vec<u8> = (0..7).collect();
    for _ in 0..10 {
        for (gu, gv) in [(-1, 0), (0, 1), (-1, 1), (0, 0), (1, 1)] {
            let u = random_lie(&mut rng, s, &letters, gu, 2, 2);
            let v = random_lie(&mut rng, s, &letters, gv, 2, 2);
            let lhs = m.differential(&u.bracket(&v).unwrap()).unwrap();
            let sign = if gu.rem_euclid(2) == 1 { int(-1) } else { int(1) };
            let rhs = &m.differential(&u).unwrap().bracket(&v).unwrap()
                + &u.bracket(&m.differential(&v).unwrap()).unwrap().scale(&sign);
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn flows_compose_and_preserve_maurer_cartan() {
    let m = triangle_boundary_model(4).unwrap();
    let s = m.space();
    let edges: Vec<u8> = (3..6).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let a = gen(s, "a");
    for _ in 0..5 {
        let e = random_lie(&mut rng, s, &edges, 0, 3, 3);
        let f = random_lie(&mut rng, s, &edges, 0, 3, 3);
        let ef = bch(&e, &f).unwrap();
        let p = m.flow_unit(&e, &a).unwrap();
        assert!(m.mc_residual(&p).unwrap().is_zero());
        assert_eq!(m.flow_unit(&f, &p).unwrap(), m.flow_unit(&ef, &a).unwrap());
        let y = gen(s, "e");
        assert_eq!(
            m.flow_unit(&f, &m.flow_unit(&e, &y).unwrap()).unwrap(),
            m.flow_unit(&ef, &y).unwrap()
        );
    }
}

#[test]
fn time_rescaling_is_a_one_parameter_group() {
    let m = triangle_boundary_model(4).unwrap();
    let s = m.space();
    let e = &gen(s, "e") + &gen(s, "f").bracket(&gen(s, "g")).unwrap();
    let a = gen(s, "a");
    let (t1, t2) = (frac(1, 3), frac(2, 5));
    let two_steps = m.flow_unit(&e.scale(&t2), &m.flow_unit(&e.scale(&t1), &a).unwrap()).unwrap();
    let one_step = m.flow_unit(&e.scale(&(&t1 + &t2)), &a).unwrap();
    assert_eq!(two_steps, one_step);
    assert_eq!(m.flow_unit(&e.scale(&int(1)), &a).unwrap(), m.flow_unit(&e, &a).unwrap());
}

#[test]
fn flow_intertwines_localisations() {
    // u_e(b) = c, so ∂_c ∘ exp(-ad_e) = exp(-ad_e) ∘ ∂_b.
    let m = triangle_boundary_model(4).unwrap();
    let s = m.space();
    let (b, c, e) = (gen(s, "b"), gen(s, "c"), gen(s, "e"));
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let letters: Vec<u8> = (0..6).collect();
    for g in [0, -1] {
        let y = random_lie(&mut rng, s, &letters, g, 3, 3);
        let lhs = m.twisted_differential(&c, &e.exp_ad(&int(-1), &y).unwrap()).unwrap();
        let rhs = e.exp_ad(&int(-1), &m.twisted_differential(&b, &y).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn model_document_round_trip() {
    let m = based_triangle_model("b", 3).unwrap();
    let doc = m.to_doc();
    let back = CellModel::from_doc(&doc).unwrap();
    assert_eq!(back.to_doc(), doc);
}
