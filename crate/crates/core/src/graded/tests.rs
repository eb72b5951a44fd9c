use num_rational::Rational64;
use proptest::prelude::*;

use super::*;
use crate::field::Field;
use crate::poly::{p, SingularityContext};

fn hs(vars: &[&str], f: &str) -> Hypersurface {
    Hypersurface::new(SingularityContext::from_strings(vars, Field::Rational, f).unwrap())
}

fn polys(h: &Hypersurface, gens: &[&str]) -> Vec<Polynomial> {
    gens.iter().map(|s| p(&h.ctx.ring, s)).collect()
}

fn rs(num: &[i64], den: &[u32]) -> RationalSeries {
    RationalSeries::new(IntPoly::new(num.to_vec()), den.to_vec(), 0)
}

fn q(n: i64, d: i64) -> Rational64 {
    Rational64::new(n, d)
}

#[test]
fn residues() {
    assert_eq!(residue_at_one(&rs(&[1], &[1])).unwrap(), q(1, 1));
    assert_eq!(residue_at_one(&rs(&[1], &[2])).unwrap(), q(1, 2));
    assert_eq!(residue_at_one(&rs(&[1, 1, 1], &[3])).unwrap(), q(1, 1));
    assert_eq!(residue_at_one(&rs(&[1], &[1, 1])), Err(Error::WrongPoleOrder(2)));
    assert_eq!(residue_at_one(&rs(&[1, 1], &[])), Err(Error::WrongPoleOrder(0)));
}

#[test]
fn product_formula_on_quadric() {
    // R = k[x,y,z,w]/(xy - zw), M = R/(x,z), N = R/(y,w)
    let hr = rs(&[1, 0, -1], &[1, 1, 1, 1]);
    let hm = rs(&[1], &[1, 1]);
    let s = series_product_formula(&hm, &hm, &hr).unwrap();
    assert_eq!(s, rs(&[1], &[2]));
    assert_eq!(residue_at_one(&s).unwrap(), q(1, 2));
}

#[test]
fn product_formula_refuses_bad_denominators() {
    let m = rs(&[1], &[1]);
    let zero = rs(&[], &[1]);
    assert!(matches!(series_product_formula(&m, &m, &zero), Err(Error::DivisionByZeroSeries(_))));
    assert!(matches!(series_product_formula(&m, &m, &rs(&[2], &[1])), Err(Error::DivisionByZeroSeries(_))));
    assert!(matches!(series_product_formula(&m, &m, &rs(&[1, 2], &[1])), Err(Error::DivisionByZeroSeries(_))));
}

#[test]
fn serre_plane_curves() {
    let h = hs(&["x", "y"], "x*y");
    assert_eq!(serre_intersection(&h, &polys(&h, &["x"]), &polys(&h, &["y"])).unwrap(), 1);
    assert_eq!(serre_intersection(&h, &polys(&h, &["x"]), &polys(&h, &["x+y^2"])).unwrap(), 2);
    assert_eq!(serre_intersection(&h, &polys(&h, &["y^2-x^3"]), &polys(&h, &["y"])).unwrap(), 3);
}

#[test]
fn serre_koszul() {
    // Tor^P(k, k) has dimensions 1, 2, 1
    let h = hs(&["x", "y"], "x*y");
    let m = polys(&h, &["x", "y"]);
    assert_eq!(serre_intersection(&h, &m, &m).unwrap(), 0);
    // Non-proper: P/(x) and P/(y,z) in three variables, Tor_1 = 0, dims 1 + 1 < 3
    let h = hs(&["x", "y", "z"], "x*y-z^2");
    assert_eq!(serre_intersection(&h, &polys(&h, &["x", "z"]), &polys(&h, &["y", "z"])).unwrap(), 0);
    assert_eq!(serre_intersection(&h, &polys(&h, &["x", "y"]), &polys(&h, &["z"])).unwrap(), 1);
}

#[test]
fn serre_not_isolated() {
    let h = hs(&["x", "y", "z"], "x*y");
    let r = serre_intersection(&h, &polys(&h, &["x"]), &polys(&h, &["y"]));
    assert_eq!(r, Err(Error::NotIsolatedIntersection));
}

#[test]
fn theta_equals_intersection_multiplicity() {
    let cases: &[(&[&str], &str, &[&str], &[&str], i64)] = &[
        (&["x", "y"], "x*y", &["x"], &["y"], 1),
        (&["x", "y"], "y*(y-x^2)", &["y"], &["y-x^2"], 2),
        (&["x", "y"], "x*y*(x+y)", &["x"], &["y"], 1),
        (&["x", "y"], "x*y*(x+y)", &["x"], &["x+y"], 1),
        (&["x", "y", "z", "w"], "x*y-z*w", &["x", "z"], &["y", "w"], 1),
        (&["x", "y", "z"], "x*y-z^2", &["x", "z"], &["y", "z"], 0),
    ];
    for (vars, f, i, j, want) in cases {
        let h = hs(vars, f);
        let (i, j) = (polys(&h, i), polys(&h, j));
        let serre = serre_intersection(&h, &i, &j).unwrap();
        let th = theta(&h, &module_from_ideal(&h, &i, BaseRing::R), &module_from_ideal(&h, &j, BaseRing::R)).unwrap();
        assert_eq!((serre, th), (*want, *want), "f = {f}");
    }
}

#[test]
fn proj_intersections() {
    let h = hs(&["x", "y", "z", "w"], "x*y-z*w");
    let pi = |a: &[&str], b: &[&str]| proj_intersection_number(&h, &polys(&h, a), &polys(&h, b)).unwrap();
    assert_eq!(pi(&["x", "z"], &["y", "w"]), q(0, 1));
    assert_eq!(pi(&["x", "z"], &["x", "w"]), q(1, 1));
    let r = proj_intersection_number(&h, &polys(&h, &["x", "z"]), &polys(&h, &["x", "z"]));
    assert_eq!(r, Err(Error::WrongPoleOrder(2)));
}

#[test]
fn quadric_surface_rulings() {
    let h = hs(&["x", "y", "z", "w"], "x*y-z*w");
    // disjoint lines of one ruling
    let r = theorem_1_2_check(&h, &polys(&h, &["x", "z"]), &polys(&h, &["y", "w"])).unwrap();
    assert_eq!((r.deg_y, r.deg_z, r.d), (1, 1, 2));
    assert_eq!(r.proj_intersection, q(0, 1));
    assert_eq!(r.theta_predicted, q(1, 1));
    assert_eq!(r.theta_computed, 1);
    assert_eq!(r.primitive_pairing, q(-2, 1));
    assert_eq!(r.product_residue, q(1, 2));
    assert!(r.balanced);
    // lines of opposite rulings meeting in a point
    let r = theorem_1_2_check(&h, &polys(&h, &["x", "z"]), &polys(&h, &["x", "w"])).unwrap();
    assert_eq!(r.proj_intersection, q(1, 1));
    assert_eq!(r.theta_predicted, q(-1, 1));
    assert_eq!(r.theta_computed, -1);
    assert!(r.balanced);
}

#[test]
fn theorem_refusals() {
    let h = hs(&["x", "y", "z", "w"], "x*y-z*w");
    let yz = polys(&h, &["x", "z"]);
    assert_eq!(theorem_1_2_check(&h, &yz, &yz), Err(Error::WrongPoleOrder(2)));
    let h = hs(&["x", "y", "z"], "x*y-z^2");
    let r = theorem_1_2_check(&h, &polys(&h, &["x", "z"]), &polys(&h, &["y", "z"]));
    assert!(matches!(r, Err(Error::Precondition(_))));
    let h = hs(&["x", "y", "z", "w"], "x*y-z*w+x^3");
    let r = theorem_1_2_check(&h, &polys(&h, &["x", "z"]), &polys(&h, &["y", "w"]));
    assert!(matches!(r, Err(Error::NotGraded(_))));
}

#[test]
fn report_json_shape() {
    let h = hs(&["x", "y", "z", "w"], "x*y-z*w");
    let r = theorem_1_2_check(&h, &polys(&h, &["x", "z"]), &polys(&h, &["x", "w"])).unwrap();
    let v = serde_json::to_value(&r).unwrap();
    assert_eq!(v["degY"], 1);
    assert_eq!(v["thetaComputed"], -1);
    assert_eq!(v["thetaPredicted"], serde_json::json!([-1, 1]));
    assert_eq!(v["productResidue"], serde_json::json!([1, 2]));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    /// `y - x^a` against `y^2 - x^b`: substituting `y = x^a` leaves `x^min(2a, b)`.
    #[test]
    fn serre_matches_substitution(a in 1u32..4, b in 1u32..7) {
        let h = hs(&["x", "y"], "x*y");
        let i = polys(&h, &[&format!("y - x^{a}")]);
        let j = polys(&h, &[&format!("y^2 - x^{b}")]);
        let got = serre_intersection(&h, &i, &j);
        if 2 * a == b {
            prop_assert_eq!(got, Err(Error::NotIsolatedIntersection));
        } else {
            prop_assert_eq!(got.unwrap(), (2 * a).min(b) as i64);
            prop_assert_eq!(serre_intersection(&h, &j, &i).unwrap(), (2 * a).min(b) as i64);
        }
    }
}
