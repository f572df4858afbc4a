//! Randomized properties of the exact pipeline.

use germlab::associated::{associated_form_exp2, associated_form_normalform, proportional};
use germlab::binary::{self, BinaryForm};
use germlab::groebner::{self, IdealPresentation};
use germlab::invariants::{QuarticInvariants, QuinticInvariants, SexticInvariants};
use germlab::linalg::{self, Matrix};
use germlab::parse::{parse_form, parse_poly_in};
use germlab::verify::{equivalent, families, Verdict};
use germlab::{milnor, sextic, ExactScalar, MonomialOrder, MultiPoly};
use proptest::prelude::*;

fn form(coeffs: &[i64]) -> BinaryForm {
    BinaryForm::from_integers(coeffs)
}

fn square_free(coeffs: &[i64]) -> Option<BinaryForm> {
    let q = form(coeffs);
    (!q.is_zero() && binary::is_square_free(&q)).then_some(q)
}

fn shears() -> impl Strategy<Value = Matrix> {
    (prop::collection::vec((any::<bool>(), -3i64..=3), 1..4), any::<bool>()).prop_map(|(steps, turn)| {
        let mut m = linalg::identity(2);
        for (upper, k) in steps {
            let e: [&[i64]; 2] = if upper { [&[1, k], &[0, 1]] } else { [&[1, 0], &[k, 1]] };
            m = linalg::mat_mul(&m, &linalg::from_integers(&e));
        }
        if turn {
            m = linalg::mat_mul(&m, &linalg::from_integers(&[&[0, 1], &[-1, 0]]));
        }
        m
    })
}

fn coeffs(n: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-6i64..=6, n + 1)
}

fn scalar() -> impl Strategy<Value = ExactScalar> {
    (-20i64..=20, 1i64..=6).prop_map(|(n, d)| ExactScalar::ratio(n, d))
}

fn quadratic(d: i64) -> impl Strategy<Value = ExactScalar> {
    (scalar(), scalar()).prop_map(move |(p, q)| &p + &(&q * &ExactScalar::sqrt_of(d).unwrap()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn norm_is_multiplicative(
        (x, y) in prop::sample::select(vec![-39i64, -1, 2, 7]).prop_flat_map(|d| (quadratic(d), quadratic(d)))
    ) {
        prop_assert_eq!((&x * &y).norm(), x.norm() * y.norm());
        if !x.is_zero() {
            prop_assert_eq!(&(&x * &y) / &x, y);
        }
    }

    #[test]
    fn printed_polynomials_parse_back(c in coeffs(5), d in prop::sample::select(vec![None, Some(7i64)])) {
        let mut p = form(&c).to_poly(families::z2());
        if let Some(d) = d {
            p = p.scale(&(&ExactScalar::one() + &ExactScalar::sqrt_of(d).unwrap()));
        }
        let back = parse_poly_in(&p.to_string(), p.vars(), d).unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn discriminant_vanishes_exactly_on_repeated_roots(
        roots in prop::collection::vec((-4i64..=4, 1i64..=3), 1..4),
        mult in prop::collection::vec(1usize..=2, 3),
    ) {
        let mut q = parse_form("1 + 0z1z2", None).unwrap();
        let mut pattern = Vec::new();
        for ((a, b), m) in roots.iter().zip(&mult) {
            let lin = parse_form(&format!("{b}z1 - ({a})z2"), None).unwrap();
            q = &q * &lin.pow(*m as u32);
            pattern.push(*m);
        }
        let f = BinaryForm::from_form(&q).unwrap();
        if f.degree() < 2 {
            return Ok(());
        }
        let repeated_root = {
            let mut r: Vec<(i64, i64)> = roots.iter().map(|&(a, b)| { let g = gcd(a, b); (a / g, b / g) }).collect();
            r.sort();
            let distinct = r.windows(2).all(|w| w[0] != w[1]);
            !distinct || mult[..roots.len()].iter().any(|&m| m > 1)
        };
        prop_assert_eq!(binary::discriminant(&f).unwrap().is_zero(), repeated_root);
        let mut found = binary::multiplicity_pattern(&f).unwrap();
        found.sort();
        prop_assert_eq!(found.iter().sum::<usize>(), f.degree());
        prop_assert_eq!(found.iter().any(|&m| m > 1), repeated_root);
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 { a.abs().max(1) } else { gcd(b, a % b) }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn relative_invariants_are_unimodular_invariant(c4 in coeffs(4), c5 in coeffs(5), c6 in coeffs(6), m in shears()) {
        let q4 = form(&c4);
        let a = QuarticInvariants::new(&q4).unwrap();
        let b = QuarticInvariants::new(&q4.linear_change(&m).unwrap()).unwrap();
        prop_assert_eq!((a.i2, a.i3), (b.i2, b.i3));
        let q5 = form(&c5);
        let a = QuinticInvariants::new(&q5).unwrap();
        let b = QuinticInvariants::new(&q5.linear_change(&m).unwrap()).unwrap();
        prop_assert_eq!((a.t10, a.delta, a.i12), (b.t10, b.delta, b.i12));
        let q6 = form(&c6);
        let a = SexticInvariants::new(&q6).unwrap();
        let b = SexticInvariants::new(&q6.linear_change(&m).unwrap()).unwrap();
        prop_assert_eq!((a.i2, a.i4, a.i6, a.delta), (b.i2, b.i4, b.i6, b.delta));
    }

    #[test]
    fn absolute_invariants_ignore_scale(c5 in coeffs(5), c6 in coeffs(6), l in scalar()) {
        prop_assume!(!l.is_zero());
        if let Some(q) = square_free(&c5) {
            let s = BinaryForm::new(q.coeffs().iter().map(|x| x * &l).collect());
            prop_assert_eq!(QuinticInvariants::new(&q).unwrap().fingerprint(), QuinticInvariants::new(&s).unwrap().fingerprint());
        }
        if let Some(q) = square_free(&c6) {
            let s = BinaryForm::new(q.coeffs().iter().map(|x| x * &l).collect());
            prop_assert_eq!(SexticInvariants::new(&q).unwrap().eight(), SexticInvariants::new(&s).unwrap().eight());
        }
    }

    #[test]
    fn sextic_class_is_invariant(c in coeffs(6), m in shears(), l in scalar()) {
        prop_assume!(!l.is_zero());
        let q = form(&c);
        prop_assume!(!q.is_zero());
        let base = sextic::classify(&q).unwrap().label;
        let moved = q.linear_change(&m).unwrap();
        let scaled = BinaryForm::new(moved.coeffs().iter().map(|x| x * &l).collect());
        prop_assert_eq!(sextic::classify(&scaled).unwrap().label, base);
    }

    #[test]
    fn charpoly_identity(c in coeffs(6)) {
        prop_assert!(sextic::qhat(&form(&c)).is_ok());
    }

    #[test]
    fn equivalence_is_reflexive_symmetric_and_invariant(c in coeffs(5), d in coeffs(5), m in shears()) {
        let (Some(p), Some(q)) = (square_free(&c), square_free(&d)) else { return Ok(()) };
        let (p, q) = (p.to_poly(families::z2()), q.to_poly(families::z2()));
        let moved = p.linear_change(&m).unwrap();
        prop_assert_eq!(equivalent(&p, &p).unwrap().verdict, Verdict::Equivalent);
        prop_assert_eq!(equivalent(&p, &moved).unwrap().verdict, Verdict::Equivalent);
        prop_assert_eq!(equivalent(&p, &q).unwrap().verdict, equivalent(&q, &p).unwrap().verdict);
    }

    #[test]
    fn normal_form_is_idempotent(c in coeffs(5), probe in prop::collection::vec(-5i64..=5, 8)) {
        let Some(q) = square_free(&c) else { return Ok(()) };
        let p = q.to_poly(families::z2());
        let g = groebner::buchberger(&IdealPresentation::jacobian(&p, MonomialOrder::GrLex).unwrap());
        let f: MultiPoly = form(&probe[..8]).to_poly(families::z2());
        let once = groebner::normal_form(&f, &g).unwrap();
        prop_assert_eq!(groebner::normal_form(&once, &g).unwrap(), once.clone());
        let diff = &f - &once;
        prop_assert!(groebner::normal_form(&diff, &g).unwrap().is_zero());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn milnor_algebra_shape(c in prop::sample::select(vec![4usize, 5, 6]).prop_flat_map(coeffs)) {
        let Some(q) = square_free(&c) else { return Ok(()) };
        let n = q.degree();
        let a = milnor::milnor(&q.to_poly(families::z2())).unwrap();
        prop_assert_eq!(a.dimension(), (n - 1) * (n - 1));
        prop_assert_eq!(a.nil_index() as usize, 2 * (n - 2));
        prop_assert!(a.gorenstein_pairing_holds());
    }

    #[test]
    fn associated_form_routes_agree(c in prop::sample::select(vec![4usize, 5]).prop_flat_map(coeffs)) {
        let Some(q) = square_free(&c) else { return Ok(()) };
        let p = q.to_poly(families::z2());
        let a = associated_form_exp2(&p).unwrap();
        let b = associated_form_normalform(&p).unwrap();
        prop_assert!(proportional(a.form(), b.form()).is_some());
        prop_assert_eq!(a.degree(), Some(2 * (q.degree() as u32 - 2)));
    }
}
