use super::*;
use crate::poly::discriminant;

fn z(n: i64) -> Int {
    Int::from(n)
}

fn pi(v: &[i64]) -> PolyInt {
    Poly::new(v.iter().map(|&c| z(c)).collect())
}

fn f3(alpha: i64) -> PolyInt {
    pi(&[-3, -alpha, -6, 0, 1])
}

fn side(x0: u32, y0: u32, x1: u32, y1: u32) -> PolygonSide {
    PolygonSide::new(x0, y0, x1, y1)
}

#[test]
fn f3_polygon_at_two() {
    let dev = phi_development(&f3(2), &pi(&[-1, 1])).unwrap();
    let poly = build_polygon(&dev, &z(2)).unwrap();
    assert_eq!(
        poly.points,
        vec![(0, Some(1)), (1, Some(1)), (2, None), (3, Some(2)), (4, Some(0))]
    );
    assert_eq!(poly.sides, vec![side(0, 1, 4, 0)]);
    assert_eq!(poly.ind_phi(1), 0);
}

#[test]
fn simple_shapes() {
    let poly = NewtonPolygon::from_points(vec![(0, Some(1)), (1, Some(0)), (2, Some(0))]);
    assert_eq!(poly.sides, vec![side(0, 1, 1, 0)]);
    let poly = NewtonPolygon::from_points(vec![(0, Some(2)), (1, Some(1)), (2, Some(0))]);
    assert_eq!(poly.sides, vec![side(0, 2, 2, 0)]);
    assert_eq!(poly.sides[0].degree, 2);
    assert_eq!(poly.sides[0].slope_string(), "-1/1");
    assert_eq!(poly.ind_phi(1), 1);
    assert_eq!(poly.ind_phi(3), 3);
    let flat = NewtonPolygon::from_points(vec![(0, Some(0)), (1, Some(0))]);
    assert!(flat.sides.is_empty());
    assert_eq!(flat.ind_phi(2), 0);
    let poly = NewtonPolygon::from_points(vec![
        (0, Some(5)),
        (1, Some(3)),
        (2, Some(2)),
        (3, None),
        (4, Some(1)),
        (5, Some(4)),
        (6, Some(0)),
    ]);
    // collinear (2,2), (4,1), (6,0) merge into one side of degree 2
    assert_eq!(poly.sides, vec![side(0, 5, 1, 3), side(1, 3, 2, 2), side(2, 2, 6, 0)]);
    assert_eq!(poly.sides[2].degree, 2);
}

#[test]
fn one_side_from_height_one_has_zero_index() {
    for k in 1..12 {
        let mut pts = vec![(0, Some(1))];
        pts.extend((1..k).map(|j| (j, Some(1 + j % 3))));
        pts.push((k, Some(0)));
        let poly = NewtonPolygon::from_points(pts);
        assert_eq!(poly.sides, vec![side(0, 1, k, 0)]);
        assert_eq!(poly.ind_phi(1), 0);
    }
}

#[test]
fn lattice_count_matches_enumeration() {
    let poly = NewtonPolygon::from_points(vec![(0, Some(7)), (2, Some(3)), (5, Some(1)), (7, Some(0))]);
    let mut count = 0;
    for x in 1..=7u32 {
        for y in 1..=7u32 {
            // y <= polygon height at x, compared exactly via cross products
            let inside = poly.sides.iter().any(|s| {
                s.x0 <= x
                    && x <= s.x1
                    && (y as i64 - s.y0 as i64) * (s.x1 - s.x0) as i64 <= -((s.y0 - s.y1) as i64) * (x - s.x0) as i64
            });
            count += inside as u64;
        }
    }
    assert_eq!(poly.ind_phi(1), count);
}

#[test]
fn residual_polynomial_by_hand() {
    // (T-1)^2 (T^2+1) + 9 at p = 3, phi = T - 1:
    // a0 = 9, a1 = 0, a2 = 2 so R(y) = 1 + 2y^2
    let p = z(3);
    let big = &(&pi(&[-1, 1]).pow(2) * &pi(&[1, 0, 1])) + &pi(&[9]);
    let dev = phi_development(&big, &pi(&[-1, 1])).unwrap();
    let poly = build_polygon(&dev, &p).unwrap();
    assert_eq!(poly.sides, vec![side(0, 2, 2, 0)]);
    let r = residual_polynomial(&dev, &p, &poly.sides[0]).unwrap();
    let vals: Vec<String> = r.coefficients.iter().map(|c| c.to_string()).collect();
    assert_eq!(vals, vec!["1", "0", "2"]);
    assert!(r.is_separable());
    let rep = index_report(&big, &p, None).unwrap();
    assert_eq!((rep.ind_p_lower_bound, rep.exact), (1, true));
    assert!(!dedekind_p_maximal(&big, &p).unwrap());
}

#[test]
fn inseparable_residual_polynomial_is_not_regular() {
    // T^2 - 4 at p = 2 around phi = T: side (0,2)-(2,0), R = y^2 - 1 = (y+1)^2
    let big = pi(&[-4, 0, 1]);
    let rep = index_report(&big, &z(2), Some(&[pi(&[0, 1])])).unwrap();
    assert!(!rep.exact);
    assert_eq!(rep.ind_p_lower_bound, 1);
    assert_eq!(rep.index(), None);
}

#[test]
fn index_report_examples() {
    let r = index_report(&f3(2), &z(2), None).unwrap();
    assert_eq!(r.index(), Some(0));
    let r = index_report(&f3(3), &z(3), Some(&[pi(&[0, 1])])).unwrap();
    assert_eq!(r.index(), Some(0));
    let r = index_report(&f3(13), &z(3), Some(&[pi(&[-4, 1])])).unwrap();
    assert_eq!(r.index(), Some(0));
    assert!(matches!(
        index_report(&f3(13), &z(3), Some(&[pi(&[-5, 1])])),
        Err(Error::BadLift { .. })
    ));
    assert_eq!(index_report(&f3(2), &z(4), None).unwrap_err(), Error::NotPrime(z(4)));
    assert_eq!(
        index_report(&pi(&[1, 2, 1]), &z(2), None).unwrap_err(),
        Error::NotSquarefree
    );
    assert_eq!(index_report(&pi(&[1, 2, 2]), &z(2), None).unwrap_err(), Error::NotMonic);
}

#[test]
fn exact_root_of_default_lift_is_shifted() {
    // T^2 - 3T is T^2 mod 3 and the default lift T divides it over Z
    let big = pi(&[0, -3, 1]);
    let dev = phi_development(&big, &pi(&[0, 1])).unwrap();
    assert_eq!(build_polygon(&dev, &z(3)), Err(Error::ExactRoot));
    let rep = index_report(&big, &z(3), None).unwrap();
    assert_eq!(rep.per_phi[0].phi, pi(&[3, 1]));
}

#[test]
fn dedekind_examples() {
    for p in [2, 3, 5] {
        assert!(dedekind_p_maximal(&f3(2), &z(p)).unwrap());
        assert!(!dedekind_p_maximal(&pi(&[-p * p, 0, 1]), &z(p)).unwrap());
        assert!(dedekind_p_maximal(&pi(&[-p, 0, 1]), &z(p)).unwrap());
    }
    // Z[sqrt 5] has index 2 in the maximal order
    assert!(!dedekind_p_maximal(&pi(&[-5, 0, 1]), &z(2)).unwrap());
    assert!(dedekind_p_maximal(&pi(&[-1, -1, 1]), &z(2)).unwrap());
}

#[test]
fn polygon_json_shape() {
    let dev = phi_development(&f3(2), &pi(&[-1, 1])).unwrap();
    let poly = build_polygon(&dev, &z(2)).unwrap();
    let v = poly.to_json(1);
    assert_eq!(v["points"][2], serde_json::json!([2, null]));
    assert_eq!(v["sides"][0]["slope"], "-1/4");
    assert_eq!(v["sides"][0]["degree"], 1);
    assert_eq!(v["ind_phi"], 0);
    assert!(poly.render_ascii().contains('o'));
}

mod props {
    use super::*;
    use proptest::prelude::*;

    fn monic(max_deg: usize) -> impl Strategy<Value = PolyInt> {
        prop::collection::vec(-40i64..40, 1..=max_deg).prop_map(|mut v| {
            v.push(1);
            pi(&v)
        })
    }

    /// Products of near-repeated factors so that polygons are nontrivial.
    fn structured() -> impl Strategy<Value = (PolyInt, i64)> {
        (
            prop::sample::select(vec![2i64, 3, 5, 7, 11, 13]),
            -3i64..4,
            1u32..4,
            prop::collection::vec(-5i64..6, 0..3),
            0i64..4,
        )
            .prop_map(|(p, r, e, tail, k)| {
                let base = pi(&[-r, 1]).pow(e);
                let mut t = tail.clone();
                t.push(1);
                let g = &base * &pi(&t);
                let shift = pi(&[p.pow(k as u32)]);
                (&g + &shift.scale(&z(1 + r.abs())), p)
            })
    }

    fn check(f: &PolyInt, p: i64) -> std::result::Result<(), TestCaseError> {
        prop_assume!(f.to_rat().is_squarefree());
        let p = z(p);
        let rep = index_report(f, &p, None).unwrap();
        if rep.exact {
            prop_assert_eq!(rep.ind_p_lower_bound == 0, dedekind_p_maximal(f, &p).unwrap(), "{}", f);
        }
        let v = arith::vp(&discriminant(f).unwrap(), &p).unwrap() as u64;
        prop_assert!(2 * rep.ind_p_lower_bound <= v);
        for r in &rep.per_phi {
            prop_assert_eq!(r.development.reconstruct(), f.clone());
            prop_assert_eq!(r.polygon.length(), r.exponent);
            for w in r.polygon.sides.windows(2) {
                let (a, b) = (w[0].slope_parts(), w[1].slope_parts());
                // -a.0/a.1 < -b.0/b.1
                prop_assert!(a.0 * b.1 > b.0 * a.1);
            }
            for s in &r.polygon.sides {
                for &(j, v) in &r.polygon.points {
                    if let Some(v) = v {
                        // (j, v) on or above the side's line
                        let lhs = (v as i64 - s.y0 as i64) * (s.x1 - s.x0) as i64;
                        let rhs = -((s.y0 - s.y1) as i64) * (j as i64 - s.x0 as i64);
                        prop_assert!(lhs >= rhs);
                    }
                }
            }
            for res in &r.residuals {
                prop_assert_eq!(res.degree(), res.side.degree as usize);
                prop_assert!(!res.coefficients[0].is_zero());
                prop_assert!(!res.coefficients.last().unwrap().is_zero());
            }
        }
        Ok(())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(300))]
        #[test]
        fn random_monic_agrees_with_dedekind(f in monic(6), p in prop::sample::select(vec![2i64, 3, 5, 7, 11, 13])) {
            check(&f, p)?;
        }

        #[test]
        fn structured_agrees_with_dedekind((f, p) in structured()) {
            check(&f, p)?;
        }

        #[test]
        fn lift_choice_does_not_change_exact_index((f, p) in structured(), k in 1i64..4) {
            prop_assume!(f.to_rat().is_squarefree());
            let pz = z(p);
            let a = index_report(&f, &pz, None).unwrap();
            let lifts: Vec<PolyInt> = a.per_phi.iter().map(|r| &r.phi + &pi(&[k * p])).collect();
            let b = match index_report(&f, &pz, Some(&lifts)) {
                Err(Error::ExactRoot) => return Ok(()),
                r => r.unwrap(),
            };
            if a.exact && b.exact {
                prop_assert_eq!(a.ind_p_lower_bound, b.ind_p_lower_bound);
            }
        }
    }
}
