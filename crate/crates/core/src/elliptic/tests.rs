use super::*;
use crate::poly::resultant::discriminant;

fn z(n: i64) -> Int {
    BigInt::from(n)
}

fn q(n: i64, d: i64) -> Rat {
    BigRational::new(z(n), z(d))
}

type Point = Option<(Rat, Rat)>;

/// Chord-and-tangent addition on a long Weierstrass model.
fn add(e: &Weierstrass<Rat>, p: &Point, r: &Point) -> Point {
    let (Some((x1, y1)), Some((x2, y2))) = (p, r) else {
        return p.clone().or_else(|| r.clone());
    };
    let neg_y2 = -y2 - &e.a1 * x2 - &e.a3;
    if x1 == x2 && *y1 == neg_y2 {
        return None;
    }
    let lambda = if x1 == x2 {
        (q(3, 1) * x1 * x1 + q(2, 1) * &e.a2 * x1 + &e.a4 - &e.a1 * y1) / (q(2, 1) * y1 + &e.a1 * x1 + &e.a3)
    } else {
        (y2 - y1) / (x2 - x1)
    };
    let nu = y1 - &lambda * x1;
    let x3 = &lambda * &lambda + &e.a1 * &lambda - &e.a2 - x1 - x2;
    let y3 = -(&lambda + &e.a1) * &x3 - &nu - &e.a3;
    Some((x3, y3))
}

/// Full `Psi_n` at a point, restoring the even factor.
fn psi_at(engine: &DivisionPolynomials<Rat>, e: &Weierstrass<Rat>, n: u32, pt: &(Rat, Rat)) -> Rat {
    let d = engine.get(n);
    let v = d.poly.eval(&pt.0);
    if d.has_even_factor {
        v * (q(2, 1) * &pt.1 + &e.a1 * &pt.0 + &e.a3)
    } else {
        v
    }
}

#[test]
fn tate_invariants_match_closed_forms() {
    for (alpha, beta) in [(2, 1), (1, 1), (9, 1), (-3, 2), (24, 1), (7, -5)] {
        let t = tate_curve(&z(alpha), &z(beta)).unwrap();
        assert_eq!(
            t.curve.delta,
            Rat::from_integer(t.closed_form_delta()),
            "{alpha},{beta}"
        );
        assert_eq!(t.curve.j, t.closed_form_j());
    }
    assert_eq!(tate_curve(&z(8), &z(1)), Err(Error::SingularCurve));
    assert_eq!(tate_curve(&z(-8), &z(1)), Err(Error::SingularCurve));
    assert!(matches!(tate_curve(&z(4), &z(2)), Err(Error::InvalidInput(_))));
}

#[test]
fn division_polynomials_give_multiples_of_a_point() {
    // y^2 + y = x^3 - x with the point (0, 0) of infinite order
    let e = Weierstrass::new(q(0, 1), q(0, 1), q(1, 1), q(-1, 1), q(0, 1)).unwrap();
    let engine = e.division_polynomials();
    let p = (q(0, 1), q(0, 1));
    let mut multiple: Point = Some(p.clone());
    for n in 2..=9u32 {
        multiple = add(&e, &multiple, &Some(p.clone()));
        let (xn, _) = multiple.clone().unwrap();
        let num = psi_at(&engine, &e, n - 1, &p) * psi_at(&engine, &e, n + 1, &p);
        let den = psi_at(&engine, &e, n, &p);
        assert_eq!(xn, &p.0 - num / (&den * &den), "n = {n}");
    }
}

#[test]
fn double_x_matches_point_doubling() {
    let e = Weierstrass::new(q(0, 1), q(0, 1), q(1, 1), q(-1, 1), q(0, 1)).unwrap();
    let p = Some((q(0, 1), q(0, 1)));
    let mut cur = p.clone();
    for _ in 0..5 {
        let (x, _) = cur.clone().unwrap();
        let twice = add(&e, &cur, &cur).unwrap();
        assert_eq!(e.double_x(&x).unwrap(), twice.0);
        cur = add(&e, &cur, &p);
    }
    // (0, 0) on the Tate normal form doubles to x = -a2
    let t = tate_curve(&z(3), &z(1)).unwrap();
    assert_eq!(t.curve.double_x(&q(0, 1)).unwrap(), -t.curve.a2.clone());
    // a root of 4x^3 + b2 x^2 + 2 b4 x + b6 is a 2-torsion abscissa
    let e2 = Weierstrass::new(q(0, 1), q(0, 1), q(0, 1), q(-1, 1), q(0, 1)).unwrap();
    assert_eq!(e2.double_x(&q(1, 1)), Err(Error::TwoTorsion));
}

#[test]
fn fueter_examples() {
    let t = tate_curve(&z(2), &z(1)).unwrap();
    let f = t.fueter_engine();
    assert_eq!(f.get(3).poly.to_string(), "-3,-2,-6,0,1");
    assert_eq!(f.get(4).poly.to_string(), "-2,-2,-10,0,10,2,2");
    // odd F_n is monic of degree (n^2 - 1)/2
    for n in [5u32, 7, 9] {
        let p = f.get(n).poly;
        assert_eq!(p.degree(), Some(((n * n - 1) / 2) as usize));
        assert!(p.is_monic());
    }
}

#[test]
fn engines_agree_with_value_recurrence() {
    let t = tate_curve(&z(5), &z(-2)).unwrap();
    for engine in [t.psi_engine(), t.fueter_engine()] {
        let x = q(7, 3);
        for n in 1..=12 {
            assert_eq!(engine.eval_reduced(n, &x), engine.get(n).poly.eval(&x), "n = {n}");
        }
    }
}

#[test]
fn memo_cap_does_not_change_results() {
    let t = tate_curve(&z(2), &z(1)).unwrap();
    let small = t.psi_engine().with_memo_cap(5);
    let big = t.psi_engine();
    for n in [6u32, 11, 14] {
        assert_eq!(small.get(n), big.get(n));
    }
}

#[test]
fn psi_equals_fueter_after_substitution() {
    for (alpha, beta) in [(2, 1), (9, 1), (-5, 3)] {
        let t = tate_curve(&z(alpha), &z(beta)).unwrap();
        for n in [3u32, 5, 7] {
            assert_eq!(t.psi_via_fueter(n).unwrap(), t.psi_engine().get(n).poly);
            for tt in [q(1, 1), q(-2, 7), q(5, 3)] {
                assert_eq!(t.psi_fueter_identity_check(n, &tt), Ok(true));
            }
        }
        assert_eq!(t.psi_fueter_identity_check(3, &q(0, 1)), Err(Error::Pole));
        assert_eq!(t.psi_fueter_identity_check(4, &q(1, 1)), Err(Error::EvenIndex));
    }
}

#[test]
fn even_index_identity_for_reduced_parts() {
    // P_n(x(T)) = (-1)^((n+2)/2) (a beta / T)^((n^2-4)/2) G_n(T)
    let t = tate_curve(&z(3), &z(2)).unwrap();
    let (psi, fu) = (t.psi_engine(), t.fueter_engine());
    let ab = Rat::from_integer(&t.a * &t.beta);
    for n in [2u32, 4, 6, 8] {
        for tt in [q(1, 2), q(-3, 1)] {
            let x = t.t_to_x(&tt).unwrap();
            let mut rhs = num_traits::pow(&ab / &tt, ((n * n - 4) / 2) as usize) * fu.get(n).poly.eval(&tt);
            if (n + 2) / 2 % 2 == 1 {
                rhs = -rhs;
            }
            assert_eq!(psi.get(n).poly.eval(&x), rhs, "n = {n}");
        }
    }
}

#[test]
fn coordinate_change_round_trips() {
    let t = tate_curve(&z(2), &z(1)).unwrap();
    for tt in [q(1, 1), q(-4, 9), q(11, 2)] {
        let x = t.t_to_x(&tt).unwrap();
        assert_eq!(t.x_to_t(&x).unwrap(), tt);
    }
    assert_eq!(t.t_to_x(&q(0, 1)), Err(Error::Pole));
    assert_eq!(t.x_to_t(&q(-10, 1)), Err(Error::Pole));
}

#[test]
fn discriminant_formulas_match_direct_computation() {
    for (alpha, beta) in [(2, 1), (1, 1), (-3, 2)] {
        let t = tate_curve(&z(alpha), &z(beta)).unwrap();
        let f = t.fueter_engine();
        for n in [3u32, 5] {
            let direct = discriminant(&f.get(n).poly).unwrap();
            assert_eq!(direct, fueter_disc(n, &t.alpha, &t.beta).unwrap(), "F_{n}");
            let psi = t.psi_engine().get(n).poly;
            // the x-polynomial has leading coefficient n
            let monic_disc = discriminant(&psi).unwrap();
            assert_eq!(monic_disc, verdure_disc(n, &t.curve.delta), "Psi_{n}");
        }
    }
    assert_eq!(fueter_disc(4, &z(2), &z(1)), Err(Error::EvenIndex));
}

#[test]
fn verdure_examples() {
    let d = q(-7, 3);
    assert_eq!(verdure_disc(3, &d), q(-27, 1) * &d * &d);
    assert_eq!(
        verdure_disc(5, &d),
        Rat::from_integer(num_traits::pow(z(5), 11)) * num_traits::pow(d.clone(), 22)
    );
    assert_eq!(verdure_disc(2, &d), q(8, 1));
    let t = tate_curve(&z(2), &z(1)).unwrap();
    assert_eq!(
        fueter_disc(3, &t.alpha, &t.beta).unwrap(),
        Rat::from_integer(z(-27) * z(36) * z(100))
    );
}

#[test]
fn even_verdure_normalization() {
    for (alpha, beta) in [(2, 1), (-5, 3)] {
        let t = tate_curve(&z(alpha), &z(beta)).unwrap();
        for n in [4u32, 6, 8] {
            let p = t.psi_engine().get(n).poly.to_int().unwrap();
            let d = Rat::from_integer(discriminant(&p).unwrap() * z(n as i64).pow(3));
            assert_eq!(d, verdure_disc(n, &t.curve.delta), "n = {n}");
        }
    }
}

mod props {
    use super::*;
    use proptest::prelude::*;

    fn coprime_pair() -> impl Strategy<Value = (i64, i64)> {
        (-60i64..60, prop_oneof![-9i64..0, 1i64..10]).prop_filter("coprime, nonsingular", |(a, b)| {
            z(*a).gcd(&z(*b)).is_one() && *a != 8 * b && *a != -8 * b
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]
        #[test]
        fn delta_and_j_closed_forms((alpha, beta) in coprime_pair()) {
            let t = tate_curve(&z(alpha), &z(beta)).unwrap();
            prop_assert_eq!(t.curve.delta.clone(), Rat::from_integer(t.closed_form_delta()));
            prop_assert_eq!(t.curve.j.clone(), t.closed_form_j());
        }

        #[test]
        fn psi_fueter_identity((alpha, beta) in coprime_pair(), num in -20i64..20, den in 1i64..9) {
            prop_assume!(num != 0);
            let t = tate_curve(&z(alpha), &z(beta)).unwrap();
            for n in [3u32, 5] {
                prop_assert_eq!(t.psi_fueter_identity_check(n, &q(num, den)), Ok(true));
            }
        }

        #[test]
        fn three_division_polynomial_via_doubling(
            (alpha, beta) in coprime_pair(), num in -30i64..30, den in 1i64..7,
        ) {
            // x([2]P) = x - Psi_1 Psi_3 / Psi_2^2
            let t = tate_curve(&z(alpha), &z(beta)).unwrap();
            let x = q(num, den);
            let b = t.curve.two_torsion_poly().eval(&x);
            prop_assume!(!b.is_zero());
            let p3 = t.psi_engine().get(3).poly.eval(&x);
            prop_assert_eq!(t.curve.double_x(&x).unwrap(), &x - p3 / b);
        }
    }
}
