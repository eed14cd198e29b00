use monodiv::arith::factor;
use monodiv::certify::*;
use monodiv::newton::dedekind_p_maximal;
use monodiv::poly::discriminant;
use monodiv::Int;

fn z(n: i64) -> Int {
    Int::from(n)
}

const LISTED: [i64; 15] = [2, 3, 5, 6, 7, 9, 11, 13, 14, 15, 18, 21, 22, 23, 25];

#[test]
fn listed_values_are_monogenic() {
    for a in LISTED.iter().flat_map(|a| [*a, -a]) {
        let c = certify(&z(a));
        assert_eq!(c.verdict, Verdict::Monogenic, "alpha = {a}: {:?}", c.reason);
        assert_eq!(c.field_disc, Some(predicted_disc(&z(a))));
        assert!(c
            .prime_evidence
            .iter()
            .all(|r| r.ind_p == 0 && r.exact && r.dedekind_agrees()));
    }
}

#[test]
fn scans_reproduce_the_list() {
    let pos: Vec<i64> = scan(2, 25, ScanConfig::default())
        .into_iter()
        .filter(|c| c.verdict == Verdict::Monogenic)
        .map(|c| c.alpha.try_into().unwrap())
        .collect();
    assert_eq!(pos, LISTED.to_vec());
    let mut neg: Vec<i64> = scan(
        -25,
        -2,
        ScanConfig {
            threads: Some(2),
            budget_ms: Some(10_000),
        },
    )
    .into_iter()
    .filter(|c| c.verdict == Verdict::Monogenic)
    .map(|c| -i64::try_from(c.alpha).unwrap())
    .collect();
    neg.reverse();
    assert_eq!(neg, LISTED.to_vec());
}

#[test]
fn scan_output_does_not_depend_on_threads() {
    let one = scan(
        -40,
        40,
        ScanConfig {
            threads: Some(1),
            budget_ms: None,
        },
    );
    let many = scan(
        -40,
        40,
        ScanConfig {
            threads: Some(4),
            budget_ms: None,
        },
    );
    assert_eq!(one, many);
}

#[test]
fn certified_alphas_pass_dedekind_everywhere() {
    for c in scan(-150, 150, ScanConfig::default()) {
        if c.verdict != Verdict::Monogenic {
            continue;
        }
        let phi = fueter_cubic_poly(&c.alpha);
        let disc = discriminant(&phi).unwrap();
        for p in factor(&disc).unwrap().primes() {
            assert!(dedekind_p_maximal(&phi, p).unwrap(), "alpha = {}, p = {p}", c.alpha);
        }
        assert!(c.corroboration.as_ref().unwrap().consistent, "alpha = {}", c.alpha);
    }
}

#[test]
fn polynomial_discriminant_closed_form() {
    for a in -50i64..50 {
        let phi = fueter_cubic_poly(&z(a));
        assert_eq!(discriminant(&phi).unwrap(), predicted_disc(&z(a)), "alpha = {a}");
    }
}

#[test]
fn two_certifiers_never_contradict() {
    for a in -60i64..=60 {
        let guided = certify(&z(a));
        let generic = certify_generic(&z(a));
        assert!(!contradictory(&guided, &generic), "alpha = {a}");
        if guided.verdict == Verdict::Monogenic {
            assert_eq!(generic.verdict, Verdict::Monogenic, "alpha = {a}");
            assert_eq!(generic.field_disc, guided.field_disc);
        }
    }
    assert_eq!(certify_generic(&z(2)).verdict, certify(&z(2)).verdict);
    // alpha - 8 = 8 is not squarefree; only the generic path applies
    assert_eq!(certify(&z(16)).verdict, Verdict::HypothesisFailed);
    let g = certify_generic(&z(16));
    assert!(g.hypothesis_ok);
    let g0 = certify_generic(&z(0));
    assert!(g0.hypothesis_ok);
    assert!(g0.field_disc.is_some());
}

#[test]
fn prime_two_branch() {
    for a in -31i64..=31 {
        let c = certify(&z(a));
        if c.verdict == Verdict::HypothesisFailed {
            continue;
        }
        let two = c.prime_evidence.iter().find(|r| r.p == z(2));
        if a % 2 != 0 {
            assert!(two.is_none(), "alpha = {a}");
        } else {
            let r = two.unwrap();
            assert_eq!(r.factors[0].lift.to_string(), "-1,1");
            assert_eq!(r.factors[0].a0_val, Some(1), "alpha = {a}");
        }
    }
}

#[test]
fn signatures_for_large_alpha() {
    for a in (9i64..=80).filter(|a| *a != 24) {
        let s = galois_signature(&z(a)).unwrap();
        assert_eq!(s.group, GaloisGroup::S4, "alpha = {a}");
        assert_eq!(s.real_roots, 2, "alpha = {a}");
    }
}

#[test]
fn units_for_multiples_of_three() {
    for a in (-60i64..=60).filter(|a| a % 3 == 0 && *a != 0) {
        if quartic_is_irreducible(&fueter_cubic_poly(&z(a))).unwrap() {
            let n = unit_norm_check(&z(a)).unwrap();
            assert!(n == z(1) || n == z(-1), "alpha = {a}: {n}");
        }
    }
}

#[test]
fn survey_discriminants() {
    for fam in [Family::A, Family::B, Family::C] {
        let rows = survey_family(fam, (-4, 5), (-4, 5));
        assert_eq!(rows.len(), 100);
        for r in &rows {
            assert!(r.disc_matches, "{fam:?} s={} t={}", r.s, r.t);
        }
    }
    let b = survey_family(Family::B, (0, 0), (1, 1));
    assert_eq!(b[0].predicted_disc, z(-7803));
}

#[test]
fn certificate_json_shape() {
    let v = certify(&z(2)).to_json();
    assert_eq!(v["version"], 1);
    assert_eq!(v["alpha"], 2);
    assert_eq!(v["verdict"], "monogenic");
    assert_eq!(v["field_disc"], "-97200");
    let primes = v["primes"].as_array().unwrap();
    assert_eq!(primes[0]["p"], 2);
    assert_eq!(primes[0]["lift"], "-1,1");
    assert_eq!(primes[0]["a0_val"], 1);
    assert_eq!(primes[0]["ind_p"], 0);
    assert_eq!(primes[0]["exact"], true);
    assert_eq!(primes[0]["dedekind"], true);
    assert!(v["trust"].as_array().unwrap().is_empty());
}
