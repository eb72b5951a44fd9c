//! Lines on the Fermat cubic surface over F_31, where 5 is a primitive cube
//! root of unity. Each line is `(x + a y, z + b w)` with `a^3 = b^3 = 1`.

use hypertheta::fpmod::{module_from_ideal, BaseRing, FPModule};
use hypertheta::gbasis::standard_basis;
use hypertheta::graded::theorem_1_2_check;
use hypertheta::hypersurface::stable_tor;
use hypertheta::{Field, Hypersurface, Polynomial, SingularityContext};
use num_rational::Rational64;

const ROOTS: [u32; 3] = [1, 5, 25];

fn cubic() -> Hypersurface {
    let ctx = SingularityContext::from_strings(&["x", "y", "z", "w"], Field::Prime(31), "x^3+y^3+z^3+w^3").unwrap();
    Hypersurface::new(ctx)
}

fn line(h: &Hypersurface, a: u32, b: u32) -> Vec<Polynomial> {
    vec![h.parse(&format!("x + {a}*y")).unwrap(), h.parse(&format!("z + {b}*w")).unwrap()]
}

fn module(h: &Hypersurface, ideal: &[Polynomial]) -> FPModule {
    module_from_ideal(h, ideal, BaseRing::R)
}

#[test]
fn lines_lie_on_the_surface() {
    let h = cubic();
    let ring = &h.ctx.ring;
    for a in ROOTS {
        assert_eq!((a * a * a) % 31, 1);
        for b in ROOTS {
            let gens: Vec<Vec<Polynomial>> = line(&h, a, b).into_iter().map(|g| vec![g]).collect();
            let sb = standard_basis(ring, &gens, 1, &ring.graded_order(), None);
            assert!(sb.contains(&[h.f().clone()]), "a = {a}, b = {b}");
        }
    }
}

#[test]
fn line_pair_table() {
    let h = cubic();
    let l = line(&h, 1, 1);
    let m = module(&h, &l);
    let cases = [
        ("skew", line(&h, 5, 25), (1, 0, 1)),
        ("transverse", line(&h, 1, 5), (0, 2, -2)),
    ];
    for (name, other, want) in cases {
        let r = stable_tor(&h, &m, &module(&h, &other)).unwrap();
        assert_eq!((r.len_even, r.len_odd, r.theta), want, "{name}");
    }
}

#[test]
fn graded_formula_on_lines() {
    let h = cubic();
    let l = line(&h, 1, 1);
    let skew = theorem_1_2_check(&h, &l, &line(&h, 5, 5)).unwrap();
    assert_eq!((skew.deg_y, skew.deg_z, skew.d), (1, 1, 3));
    assert_eq!(skew.proj_intersection, Rational64::from_integer(0));
    assert_eq!(skew.theta_predicted, Rational64::from_integer(1));
    assert_eq!(skew.theta_computed, 1);
    assert!(skew.balanced);

    let meet = theorem_1_2_check(&h, &l, &line(&h, 25, 1)).unwrap();
    assert_eq!(meet.proj_intersection, Rational64::from_integer(1));
    assert_eq!(meet.theta_predicted, Rational64::from_integer(-2));
    assert_eq!(meet.theta_computed, -2);
    assert_eq!(meet.product_residue, Rational64::new(1, 3));
    assert!(meet.balanced);
}

/// `f = l1 q1 + l2 q2`. Resolving `O_L` over `R` and reducing mod `(l1, l2)`
/// leaves `Tor_even = S/(q1, q2)` and `Tor_odd = 0`, with `S` the coordinate
/// ring of the plane. The self-intersection `L.L = -1` gives the same `-3(-1) + 1`.
#[test]
fn identical_lines() {
    let h = cubic();
    let l = line(&h, 1, 1);
    let q: Vec<Polynomial> = ["x^2 - x*y + y^2", "z^2 - z*w + w^2"].iter().map(|s| h.parse(s).unwrap()).collect();
    let expect = h.ctx.ring.zero();
    let split = &(&(&l[0] * &q[0]) + &(&l[1] * &q[1])) - h.f();
    assert_eq!(split, expect);
    let quotient = module_from_ideal(&h, &[l.clone(), q].concat(), BaseRing::P);
    let oracle = hypertheta::fpmod::length(&h, &quotient, hypertheta::LengthMode::Graded).length.unwrap();
    assert_eq!(oracle, 4);

    let m = module(&h, &l);
    let r = stable_tor(&h, &m, &m).unwrap();
    assert_eq!((r.len_even, r.len_odd, r.theta), (oracle, 0, oracle as i64));
}
