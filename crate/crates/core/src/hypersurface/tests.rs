use proptest::prelude::*;

use super::*;
use crate::engine::{EngineConfig, GlobalOrder, LengthMode};
use crate::field::Field;
use crate::fpmod::module_from_ideal;
use crate::poly::{p, SingularityContext};

fn hs_over(vars: &[&str], field: Field, f: &str) -> Hypersurface {
    Hypersurface::new(SingularityContext::from_strings(vars, field, f).unwrap())
}

fn hs(vars: &[&str], f: &str) -> Hypersurface {
    hs_over(vars, Field::Rational, f)
}

fn cyc(h: &Hypersurface, gens: &[&str]) -> FPModule {
    let g: Vec<Polynomial> = gens.iter().map(|s| p(&h.ctx.ring, s)).collect();
    module_from_ideal(h, &g, BaseRing::R)
}

fn mat(h: &Hypersurface, rows: &[&[&str]]) -> Matrix {
    Matrix::parse(&h.ctx.ring, rows).unwrap()
}

/// Column spans agree (modulo `f` when given).
fn same_column_span(h: &Hypersurface, a: &Matrix, b: &Matrix, f: Option<&Polynomial>) -> bool {
    let r = &h.ctx.ring;
    let sa = standard_basis(r, &a.columns(), a.rows(), &r.graded_order(), f);
    let sb = standard_basis(r, &b.columns(), b.rows(), &r.graded_order(), f);
    b.columns().iter().all(|c| sa.contains(c)) && a.columns().iter().all(|c| sb.contains(c))
}

/// `a` and `b` (both 2 x k) present the same module after reordering and
/// negating generators.
fn same_up_to_signed_permutation(h: &Hypersurface, a: &Matrix, b: &Matrix, f: Option<&Polynomial>) -> bool {
    let ring = &h.ctx.ring;
    let perms = [[0usize, 1], [1, 0]];
    let signs = [[1i64, 1], [1, -1], [-1, 1], [-1, -1]];
    perms.iter().any(|perm| {
        signs.iter().any(|sg| {
            let mut m = a.select_rows(perm);
            for (i, &s) in sg.iter().enumerate() {
                for j in 0..m.cols() {
                    let e = m.get(i, j) * &ring.constant(s);
                    m.set(i, j, e);
                }
            }
            same_column_span(h, &m, b, f)
        })
    })
}

/// `Tor_i(M, N)` straight from the explicit resolution, without parity bookkeeping.
fn tor_by_resolution(h: &Hypersurface, m: &FPModule, n: &FPModule, i: usize) -> usize {
    let res = resolve(h, m).unwrap();
    let d = |k: usize| -> Matrix {
        if k <= res.differentials.len() {
            return res.differentials[k - 1].clone();
        }
        let mf = res.tail.as_ref().unwrap();
        if (k - res.stabilized_at) % 2 == 0 { mf.a.clone() } else { mf.b.clone() }
    };
    let n = crate::fpmod::minimal_presentation(h, n);
    let q = n.rank;
    let rank_fi = d(i).cols();
    let middle = FPModule::new(BaseRing::R, n.presentation.identity_kron(rank_fi), None);
    let target = FPModule::new(BaseRing::R, n.presentation.identity_kron(d(i).rows()), None);
    let hom = subquotient_homology(h, &d(i + 1).kron_identity(q), &d(i).kron_identity(q), &middle, &target).unwrap();
    length(h, &hom, LengthMode::Local).length.unwrap()
}

#[test]
fn milnor_numbers() {
    assert_eq!(milnor_number(&hs(&["x", "y"], "x*y")), Ok(1));
    assert_eq!(milnor_number(&hs(&["x", "y", "z"], "x*y - z^2")), Ok(1));
    let c = hs(&["x", "y"], "x^3 + y^3");
    // brute force: monomials x^a y^b not divisible by x^2 or y^2
    let oracle = (0..10).flat_map(|a| (0..10).map(move |b| (a, b))).filter(|&(a, b)| a < 2 && b < 2).count();
    assert_eq!(milnor_number(&c), Ok(oracle));
    assert_eq!(milnor_number(&hs(&["x", "y"], "x^2")), Err(Error::NonIsolated));
    // A_3: y^2 + x^4 has mu = 3
    assert_eq!(milnor_number(&hs(&["x", "y"], "y^2 + x^4 + x^5")), Ok(3));
}

#[test]
fn syzygies_over_r() {
    let h = hs(&["x", "y"], "x*y");
    let s = syzygy_over_r(&h, &cyc(&h, &["x"]));
    assert_eq!(s.presentation, mat(&h, &[&["y"]]));
    assert_eq!(syzygy_over_r(&h, &FPModule::free(BaseRing::R, 1, 2)).rank, 0);

    let q = hs(&["x", "y", "z"], "x*y - z^2");
    let s = syzygy_over_r(&q, &cyc(&q, &["x", "z"]));
    let b = mat(&q, &[&["x", "z"], &["z", "y"]]);
    assert_eq!((s.rank, s.presentation.cols()), (2, 2));
    assert!(same_up_to_signed_permutation(&q, &s.presentation, &b, Some(q.f())));
}

#[test]
fn mcm_approximations() {
    let h = hs(&["x", "y"], "x*y");
    let (m, steps) = mcm_approximation(&h, &cyc(&h, &["x"])).unwrap();
    assert_eq!((m.rank, steps), (1, 0));
    let (z, _) = mcm_approximation(&h, &FPModule::free(BaseRing::R, 1, 2)).unwrap();
    assert_eq!(z.rank, 0);
    let (k, steps) = mcm_approximation(&h, &cyc(&h, &["x", "y"])).unwrap();
    assert!(steps <= 2 && k.rank > 0);
    assert_eq!(theta(&h, &cyc(&h, &["x"]), &cyc(&h, &["x", "y"])), Ok(0));

    let tight = Hypersurface::with_config(h.ctx.clone(), EngineConfig { max_steps: Some(0), ..Default::default() });
    assert_eq!(mcm_approximation(&tight, &cyc(&h, &["x", "y"])), Err(Error::NoStabilization(0)));
    assert!(matches!(
        mcm_approximation(&h, &module_from_ideal(&h, &[], BaseRing::P)),
        Err(Error::Precondition(_))
    ));
}

#[test]
fn factorizations() {
    let h = hs(&["x", "y"], "x*y");
    let mf = matrix_factorization(&h, &cyc(&h, &["x"])).unwrap();
    assert_eq!((mf.a.clone(), mf.b.clone()), (mat(&h, &[&["x"]]), mat(&h, &[&["y"]])));

    let q = hs(&["x", "y", "z"], "x*y - z^2");
    let (m, _) = mcm_approximation(&q, &cyc(&q, &["x", "z"])).unwrap();
    let mf = matrix_factorization(&q, &m).unwrap();
    assert!(mf.is_valid());
    let expect = mat(&q, &[&["y", "-z"], &["-z", "x"]]);
    assert!(same_up_to_signed_permutation(&q, &mf.a, &expect, None) || same_up_to_signed_permutation(&q, &mf.b, &expect, None));

    // f = l1 q1 + l2 q2 with l1 = x, l2 = y
    let (q1, q2) = ("x^2 + z^2 + w^2", "y^2 - z*w");
    let c = hs(&["x", "y", "z", "w"], &format!("x*({q1}) + y*({q2})"));
    let (m, steps) = mcm_approximation(&c, &cyc(&c, &["x", "y"])).unwrap();
    assert_eq!(steps, 1);
    let mf = matrix_factorization(&c, &m).unwrap();
    assert!(mf.is_valid());
    let expect_a = mat(&c, &[&["x", &format!("-({q2})")], &["y", q1]]);
    let expect_b = mat(&c, &[&[q1, q2], &["-y", "x"]]);
    assert_eq!(expect_a.mul(&expect_b), Matrix::scalar(2, c.f()));
    assert!(same_up_to_signed_permutation(&c, &mf.a, &expect_a, None));

    let bad = FPModule::new(BaseRing::R, mat(&h, &[&["x", "y"]]), None);
    assert!(matches!(matrix_factorization(&h, &bad), Err(Error::LiftFailed(_))));
    let not_mf = FPModule::new(BaseRing::R, mat(&h, &[&["x^2"]]), None);
    assert!(matches!(matrix_factorization(&h, &not_mf), Err(Error::LiftFailed(_))));
}

#[test]
fn determinant_check_under_verify() {
    let ctx = SingularityContext::from_strings(&["x", "y", "z"], Field::Rational, "x*y - z^2").unwrap();
    let h = Hypersurface::with_config(ctx, EngineConfig { verify: true, ..Default::default() });
    let (m, _) = mcm_approximation(&h, &cyc(&h, &["x", "z"])).unwrap();
    let mf = matrix_factorization(&h, &m).unwrap();
    assert_eq!(mf.a.determinant(), h.f().clone());
}

#[test]
fn resolutions_are_complexes() {
    let h = hs(&["x", "y"], "x*y");
    let res = resolve(&h, &cyc(&h, &["x", "y"])).unwrap();
    let tail = res.tail.clone().unwrap();
    assert_eq!(res.differentials[res.stabilized_at - 1], tail.a);
    for w in res.differentials.windows(2) {
        for e in w[0].mul(&w[1]).to_rows().concat() {
            assert!(e.div_exact(h.f()).is_some());
        }
    }
}

#[test]
fn theta_on_the_node() {
    let h = hs(&["x", "y"], "x*y");
    let (m, n) = (cyc(&h, &["x"]), cyc(&h, &["y"]));
    let r = stable_tor(&h, &m, &m).unwrap();
    assert_eq!((r.len_even, r.len_odd, r.theta), (0, 1, -1));
    assert!(r.stable_index % 2 == 0 && r.stable_index > 1);
    let r = stable_tor(&h, &m, &n).unwrap();
    assert_eq!((r.len_even, r.len_odd, r.theta), (1, 0, 1));
    assert_eq!(theta(&h, &FPModule::free(BaseRing::R, 1, 2), &m), Ok(0));
}

#[test]
fn theta_on_the_quadric_cone() {
    let q = hs(&["x", "y", "z"], "x*y - z^2");
    let m = cyc(&q, &["x", "z"]);
    let r = stable_tor(&q, &m, &m).unwrap();
    assert_eq!((r.len_even, r.len_odd, r.theta), (1, 1, 0));
    assert_eq!(r.stable_index, 4);
}

#[test]
fn tor_matches_the_explicit_resolution() {
    let h = hs(&["x", "y"], "x*y*(x + y)");
    let m = cyc(&h, &["x^2", "y"]);
    let n = cyc(&h, &["x + y"]);
    let r = stable_tor(&h, &m, &n).unwrap();
    let k = r.stable_index;
    assert_eq!(tor_by_resolution(&h, &m, &n, k), r.len_even);
    assert_eq!(tor_by_resolution(&h, &m, &n, k + 1), r.len_odd);
    // 2-periodicity at the next pair of indices
    assert_eq!(tor_by_resolution(&h, &m, &n, k + 2), r.len_even);
    assert_eq!(tor_by_resolution(&h, &m, &n, k + 3), r.len_odd);
}

#[test]
fn herbrand_differences() {
    let h = hs(&["x", "y"], "x*y");
    let m = cyc(&h, &["x"]);
    let e = stable_ext(&h, &m, &m).unwrap();
    assert_eq!(e.h, 1);
    assert_eq!(e.len_even_ext as i64 - e.len_odd_ext as i64, e.h);
    let mf = matrix_factorization(&h, &m).unwrap();
    let dual = dual_mcm(&mf);
    assert_eq!(dual.presentation, mat(&h, &[&["y"]]));
    assert_eq!(theta(&h, &dual, &m), Ok(e.h));
    assert_eq!(stable_ext(&h, &m, &FPModule::free(BaseRing::R, 1, 2)).unwrap().h, 0);

    let q = hs(&["x", "y", "z"], "x*y - z^2");
    let m = cyc(&q, &["x", "z"]);
    assert_eq!(stable_ext(&q, &m, &m).unwrap().h, 0);
    let (mcm, _) = mcm_approximation(&q, &m).unwrap();
    let dual = dual_mcm(&matrix_factorization(&q, &mcm).unwrap());
    assert_eq!(theta(&q, &dual, &dual), Ok(0));
    assert!(dual_factorization(&matrix_factorization(&q, &mcm).unwrap()).is_valid());
}

#[test]
fn herbrand_equals_theta_of_dual() {
    let h = hs(&["x", "y"], "x*y*(x + y)");
    let mods = [cyc(&h, &["x"]), cyc(&h, &["y"]), cyc(&h, &["x + y"]), cyc(&h, &["x*y"]), cyc(&h, &["x", "y^2"])];
    for m in &mods {
        let (mcm, _) = mcm_approximation(&h, m).unwrap();
        let dual = dual_mcm(&matrix_factorization(&h, &mcm).unwrap());
        for n in &mods {
            let e = stable_ext(&h, &mcm, n).unwrap();
            assert_eq!(theta(&h, &dual, n).unwrap(), e.h);
        }
    }
}

#[test]
fn parity_vanishing() {
    let q = hs(&["x", "y", "z"], "x*y - z^2");
    let (m, n) = (cyc(&q, &["x", "z"]), cyc(&q, &["y", "z"]));
    assert_eq!(parity_vanishing_check(&q, &[(m.clone(), n), (m.clone(), m)]), Ok(vec![0, 0]));

    // x^2 + y^4 + z^2 = (x + i z)(x - i z) + y^4 with i = 5 in F_13
    let a = hs_over(&["x", "y", "z"], Field::Prime(13), "x^2 + y^4 + z^2");
    let m = cyc(&a, &["x + 5*z", "y^2"]);
    let n = cyc(&a, &["x - 5*z", "y"]);
    let k = cyc(&a, &["x", "y", "z"]);
    assert_eq!(parity_vanishing_check(&a, &[(m.clone(), n.clone()), (m, k.clone()), (n, k)]), Ok(vec![0, 0, 0]));

    let h = hs(&["x", "y"], "x*y");
    assert!(matches!(parity_vanishing_check(&h, &[]), Err(Error::Precondition(_))));
}

#[test]
fn order_independence() {
    let ctx = SingularityContext::from_strings(&["x", "y"], Field::Rational, "y*(y - x^2)").unwrap();
    let lex = Hypersurface::with_config(ctx.clone(), EngineConfig { order: GlobalOrder::Lex, ..Default::default() });
    let grevlex = Hypersurface::new(ctx);
    for h in [&lex, &grevlex] {
        assert_eq!(theta(h, &cyc(h, &["y"]), &cyc(h, &["y - x^2"])), Ok(2));
    }
}

#[test]
fn non_isolated_gives_infinite_length() {
    let h = hs(&["x", "y", "z"], "x*y");
    assert_eq!(theta(&h, &cyc(&h, &["x"]), &cyc(&h, &["x"])), Err(Error::InfiniteLength));
}

#[test]
fn serialization() {
    let r = ThetaReport { len_even: 1, len_odd: 0, theta: 1, stable_index: 2 };
    let j = serde_json::to_string(&r).unwrap();
    assert_eq!(j, r#"{"lenEven":1,"lenOdd":0,"theta":1,"stableIndex":2}"#);
    let h = hs(&["x", "y"], "x*y");
    let mf = matrix_factorization(&h, &cyc(&h, &["x"])).unwrap();
    let j = serde_json::to_string(&mf.view(&h.ctx.ring)).unwrap();
    assert_eq!(j, r#"{"A":[["x"]],"B":[["y"]],"p":1,"f":"x*y"}"#);
}

fn arb_plane_ideal() -> impl Strategy<Value = Vec<String>> {
    let form = (1u32..=2, -2i64..3, -2i64..3, -2i64..3).prop_map(|(d, a, b, c)| match d {
        1 => format!("({a})*x + ({b})*y"),
        _ => format!("({a})*x^2 + ({b})*x*y + ({c})*y^2"),
    });
    prop::collection::vec(form, 1..3)
}

fn module_of(h: &Hypersurface, gens: &[String]) -> FPModule {
    let g: Vec<Polynomial> = gens.iter().map(|s| p(&h.ctx.ring, s)).filter(|g| !g.is_zero()).collect();
    module_from_ideal(h, &g, BaseRing::R)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10))]

    #[test]
    fn theta_properties(a in arb_plane_ideal(), b in arb_plane_ideal()) {
        let h = hs(&["x", "y"], "x*y*(x + y)");
        let (m, n) = (module_of(&h, &a), module_of(&h, &b));
        let t = theta(&h, &m, &n).unwrap();
        // symmetry
        prop_assert_eq!(theta(&h, &n, &m).unwrap(), t);
        // a syzygy flips the sign
        prop_assert_eq!(theta(&h, &syzygy_over_r(&h, &m), &n).unwrap(), -t);
        // additivity on direct sums
        let k = cyc(&h, &["x"]);
        prop_assert_eq!(theta(&h, &m.direct_sum(&k), &n).unwrap(), t + theta(&h, &k, &n).unwrap());
        // the residue field pairs to zero
        prop_assert_eq!(theta(&h, &m, &cyc(&h, &["x", "y"])).unwrap(), 0);
        let free = FPModule::free(BaseRing::R, 2, 2);
        prop_assert_eq!(theta(&h, &free, &n).unwrap(), 0);
    }
}

#[test]
fn residue_field_stable_tail_has_equal_ranks() {
    let h = hs(&["x", "y"], "x*y*(x + y)");
    let res = resolve(&h, &cyc(&h, &["x", "y"])).unwrap();
    let mf = res.tail.unwrap();
    assert_eq!(mf.a.rows(), mf.a.cols());
    assert_eq!(mf.b.rows(), mf.b.cols());
}
