use horadam_core::campaign::{run_campaign, IntRange, ShowPolicy, VerifyConfig};
use horadam_core::horadam_quat::rs_constants;
use horadam_core::identities::{self, AltForm, ReflectionAudit};
use horadam_core::{HoradamParams, HoradamQuatContext, IdentityId, Quaternion, Rational};

fn ctx(p: i64, q: i64, a: i64, b: i64) -> HoradamQuatContext {
    HoradamQuatContext::new(HoradamParams::from_ints(p, q, a, b).unwrap())
}

fn rq(s: &str) -> Quaternion<Rational> {
    s.parse().unwrap()
}

fn int_terms(p: i128, q: i128, a: i128, b: i128, len: usize) -> Vec<i128> {
    let mut t = vec![a, b];
    while t.len() < len {
        let k = t.len();
        t.push(p * t[k - 1] + q * t[k - 2]);
    }
    t
}

fn int_quat(t: &[i128], n: usize) -> [i128; 4] {
    [t[n], t[n + 1], t[n + 2], t[n + 3]]
}

fn hamilton(a: [i128; 4], b: [i128; 4]) -> [i128; 4] {
    let [a1, b1, c1, d1] = a;
    let [a2, b2, c2, d2] = b;
    [
        a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
        a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
        a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
        a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
    ]
}

fn sub4(a: [i128; 4], b: [i128; 4]) -> [i128; 4] {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]]
}

fn as_ints(u: &Quaternion<Rational>) -> [i128; 4] {
    let c = u.components();
    [0, 1, 2, 3].map(|k| c[k].to_i64().expect("integer component") as i128)
}

#[test]
fn cassini_and_catalan_fixture() {
    let c = ctx(1, 1, 0, 1);
    let cassini = identities::cassini_check(&c, 1);
    let catalan = identities::catalan_check(&c, 1, 1);
    for r in [&cassini, &catalan] {
        assert!(r.equal);
        assert_eq!(r.lhs.to_string(), "2+2j+5k");
        assert_eq!(r.rhs.to_string(), "2+2j+5k");
    }
}

#[test]
fn quadratic_lhs_values_match_integer_oracle() {
    let (p, q, a, b) = (2i64, 3i64, 1i64, -2i64);
    let c = ctx(p, q, a, b);
    let t = int_terms(p.into(), q.into(), a.into(), b.into(), 40);
    for m in 2..12usize {
        let qm = int_quat(&t, m);
        let want = sub4(
            hamilton(qm, qm),
            hamilton(int_quat(&t, m + 1), int_quat(&t, m - 1)),
        );
        let got = identities::cassini_check(&c, m as i64);
        assert_eq!(as_ints(&got.lhs.to_rational().unwrap()), want);
        assert!(got.equal);
        for n in 0..m {
            let want = sub4(
                hamilton(int_quat(&t, n), int_quat(&t, m + 1)),
                hamilton(int_quat(&t, n + 1), int_quat(&t, m)),
            );
            let got = identities::docagne_check(&c, n as i64, m as i64);
            assert_eq!(as_ints(&got.lhs.to_rational().unwrap()), want);
            assert!(got.equal);
        }
    }
}

#[test]
fn lemma1_fixture_and_swap() {
    let [ab, ba, sum] = identities::check_lemma1(&ctx(1, 1, 0, 1));
    assert!(ab.equal && ba.equal && sum.equal);
    assert_eq!(ab.lhs.to_string(), "2+(1-√5)i+(3-√5)j+(4+√5)k");
    assert_eq!(ba.lhs.to_string(), "2+(1+√5)i+(3+√5)j+(4-√5)k");
    assert_eq!(sum.lhs.to_rational(), Some(rq("4+2i+6j+8k")));
}

#[test]
fn commutator_fixtures() {
    let c = ctx(1, 1, 0, 1);
    let adj = identities::commutator_adjacent_check(&c, 1);
    assert!(adj.equal);
    assert_eq!(adj.lhs.to_rational(), Some(rq("2i+2j-2k")));

    let mixed = identities::mixed_commutator_check(&ctx(1, 1, 2, 1), 0, 1);
    assert!(mixed.equal);
    assert_eq!(mixed.rhs.to_rational(), Some(rq("-2i-2j+2k")));

    let diag = identities::mixed_commutator_diag_check(&ctx(2, 3, 3, 1), 4);
    assert!(diag.equal);
    let omega = Quaternion::from_ints(0, 3, 2, -1);
    let k = Rational::from(2) * (-Rational::from(3)).pow(5).unwrap() * Rational::from(3);
    assert_eq!(diag.rhs.to_rational(), Some(omega.scale(&k)));

    let zero = identities::mixed_commutator_check(&c, 3, 3);
    assert!(zero.equal && zero.lhs.to_rational().unwrap().is_zero());
}

#[test]
fn commutator_values_are_pure_vectors() {
    for (p, q, a, b) in [(1, 1, 0, 1), (3, -2, 2, -1), (-2, 3, 1, 1)] {
        let c = ctx(p, q, a, b);
        for n in -4..6 {
            for r in [
                identities::commutator_adjacent_check(&c, n),
                identities::mixed_commutator_check(&c, n, 2 - n),
                identities::mixed_commutator_diag_check(&c, n),
            ] {
                assert!(r.equal, "{}", r.identity);
                assert!(
                    r.rhs.w.to_rational().unwrap().is_zero()
                        && r.lhs.w.to_rational().unwrap().is_zero()
                );
            }
        }
    }
}

#[test]
fn square_difference_fixture() {
    let c = ctx(1, 1, 0, 1);
    let r = identities::square_diff_check(&c, 0);
    assert!(r.equal);
    assert_eq!(r.lhs.to_rational(), Some(rq("-16+4i+12j+16k")));
    assert_eq!(r.rhs.to_rational(), Some(rq("-16+4i+12j+16k")));
    assert_eq!(
        rs_constants(&Rational::from(1), &Rational::from(1)).unwrap(),
        (Rational::from(15), Rational::from(6))
    );
    assert!(identities::square_diff_check(&ctx(2, 1, 0, 1), 1).equal);
}

#[test]
fn unscaled_square_difference_term_is_reported_separately() {
    // With D = 5 the F_2n coefficient matters whenever F_2n ≠ 0.
    let r = identities::square_diff_check(&ctx(1, 1, 0, 1), 1);
    assert!(r.equal);
    assert_eq!(r.alternate(AltForm::SquareDiffUnscaledFibTerm), Some(false));
    // At D = 2 the factor D − 1 is 1 and both readings coincide.
    let params = HoradamParams::new(
        Rational::from(1),
        Rational::new(1, 4).unwrap(),
        Rational::zero(),
        Rational::one(),
    )
    .unwrap();
    let r = identities::square_diff_check(&HoradamQuatContext::new(params), 2);
    assert!(r.equal);
    assert_eq!(r.alternate(AltForm::SquareDiffUnscaledFibTerm), Some(true));
}

#[test]
fn cross_identity_antisymmetry() {
    let c = ctx(2, -3, 1, 2);
    for n in -4..=8 {
        for r in -4..=8 {
            let zero = identities::cross_lucas_fib_check(&c, n, r, r);
            assert!(zero.equal && zero.lhs.to_rational().unwrap().is_zero());
            for s in [r - 2, r + 3] {
                let x = identities::cross_lucas_fib_check(&c, n, r, s);
                let y = identities::cross_lucas_fib_check(&c, n, s, r);
                assert!(x.equal && y.equal);
                assert_eq!(x.lhs, -&y.lhs);
            }
        }
    }
}

#[test]
fn catalan_forms_and_reflection_audit() {
    let c = ctx(1, 2, 1, 3);
    for m in -3..6 {
        for n in -3..6 {
            let r = identities::catalan_check(&c, m, n);
            assert!(r.equal);
            assert_eq!(r.alternate(AltForm::CatalanPowerForm), Some(true));
        }
    }
    let audit = ReflectionAudit::new(&Rational::from(1), &Rational::from(2), 2).unwrap();
    assert_eq!(audit.recurrence, Rational::new(-1, 4).unwrap());
    assert!(audit.reflected_agrees());
    assert!(!audit.flipped_agrees());
    assert_eq!(audit.flipped, Rational::from(-4));
}

#[test]
fn rational_parameters_are_supported() {
    let params = HoradamParams::new(
        Rational::new(1, 2).unwrap(),
        Rational::new(3, 4).unwrap(),
        Rational::new(-2, 3).unwrap(),
        Rational::from(1),
    )
    .unwrap();
    let c = HoradamQuatContext::new(params);
    for id in IdentityId::ALL {
        let indices = [3, -2, 1];
        let r = identities::run_identity(&c, *id, &indices[..id.arity()]);
        assert!(r.equal, "{id} failed with rational parameters");
    }
}

#[test]
fn zero_seed_constant_collapses_quadratic_identities() {
    // b² − pab − qa² with p=3, q=−2, a=b=1: 1 − 3 + 2 = 0.
    let c = ctx(3, -2, 1, 1);
    assert!(c.consts.ab.is_zero());
    for m in -3..6 {
        let r = identities::cassini_check(&c, m);
        assert!(r.equal && r.lhs.to_rational().unwrap().is_zero());
    }
}

#[test]
fn degenerate_and_invalid_parameters_are_rejected() {
    assert!(HoradamParams::from_ints(2, -1, 1, 1).is_err());
    assert!(HoradamParams::from_ints(1, 0, 0, 1).is_err());
}

#[test]
fn report_json_shape() {
    let r = identities::cassini_check(&ctx(1, 1, 0, 1), 1);
    let v = r.to_json();
    assert_eq!(v["identity"], "cassini");
    assert_eq!(v["params"]["q"], "1");
    assert_eq!(v["indices"], serde_json::json!([1]));
    assert_eq!(v["lhs"], serde_json::json!(["2", "0", "2", "5"]));
    assert_eq!(v["equal"], true);

    let [ab, _, _] = identities::check_lemma1(&ctx(1, 1, 0, 1));
    let v = ab.to_json();
    assert_eq!(
        v["lhs"][1],
        serde_json::json!({"rat": "1", "irr": "-1", "D": 5})
    );
}

#[test]
fn small_campaign_counts() {
    let config = VerifyConfig {
        identities: vec![IdentityId::Cassini, IdentityId::Lemma1Sum],
        p: IntRange::new(1, 2),
        q: IntRange::new(-1, 1),
        a: IntRange::single(1),
        b: IntRange::single(1),
        idx: IntRange::new(0, 2),
        jobs: Some(1),
        show: ShowPolicy::None,
    };
    let result = run_campaign(&config).unwrap();
    // (p, q) ∈ {1,2} × {−1,1}: (2,−1) is degenerate, q = 0 is dropped.
    let cassini = result.per_identity[&IdentityId::Cassini];
    assert_eq!((cassini.passed, cassini.failed, cassini.skipped), (9, 0, 3));
    let lemma = result.per_identity[&IdentityId::Lemma1Sum];
    assert_eq!((lemma.passed, lemma.skipped), (3, 1));
    assert!(result.success());
    assert!(result.reports.is_empty());
}
