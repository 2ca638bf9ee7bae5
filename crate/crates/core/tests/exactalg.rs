use gaussmanin::exactalg::*;
use gaussmanin::Error;
use num_traits::Zero;
use proptest::prelude::*;

fn q() -> impl Strategy<Value = Rat> {
    (-12i64..=12, 1i64..=7).prop_map(|(n, d)| rat(n, d))
}

fn poly(max_len: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec(q(), 0..=max_len).prop_map(Poly::new)
}

fn ratfunc() -> impl Strategy<Value = RatFunc> {
    (poly(3), poly(3).prop_filter("nonzero denominator", |p| !p.is_zero()))
        .prop_map(|(n, d)| RatFunc::new(n, d).unwrap())
}

proptest! {
    #[test]
    fn normalization_is_idempotent_and_cancels(f in ratfunc(), h in poly(2).prop_filter("nonzero", |p| !p.is_zero())) {
        prop_assert_eq!(RatFunc::new(f.num().clone(), f.den().clone()).unwrap(), f.clone());
        let scaled = RatFunc::new(f.num() * &h, f.den() * &h).unwrap();
        prop_assert_eq!(scaled, f.clone());
        if !f.is_zero() {
            prop_assert!(f.den().lc() == int(1));
            prop_assert_eq!(f.num().gcd(f.den()).degree(), Some(0));
        }
    }

    #[test]
    fn evaluation_is_a_homomorphism(f in ratfunc(), g in ratfunc(), x in q()) {
        let (Ok(fx), Ok(gx)) = (f.eval(&x), g.eval(&x)) else { return Ok(()) };
        prop_assert_eq!((&f + &g).eval(&x).unwrap(), &fx + &gx);
        prop_assert_eq!((&f - &g).eval(&x).unwrap(), &fx - &gx);
        prop_assert_eq!((&f * &g).eval(&x).unwrap(), &fx * &gx);
        if !Zero::is_zero(&gx) {
            prop_assert_eq!(f.checked_div(&g).unwrap().eval(&x).unwrap(), &fx / &gx);
        }
    }

    #[test]
    fn derivative_obeys_leibniz(f in ratfunc(), g in ratfunc()) {
        let lhs = (&f * &g).derivative();
        let rhs = &(&f.derivative() * &g) + &(&f * &g.derivative());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn division_with_remainder(a in poly(5), b in poly(3).prop_filter("nonzero", |p| !p.is_zero())) {
        let (quo, r) = a.divrem(&b).unwrap();
        prop_assert_eq!(&(&quo * &b) + &r, a);
        prop_assert!(r.is_zero() || r.degree() < b.degree());
    }

    // Build f from known poles and coefficients; the decomposition must find
    // exactly those and recombine to f.
    #[test]
    fn partial_fractions_recombine(
        poles in prop::collection::btree_set((-6i64..=6, 1i64..=4), 1..=3),
        orders in prop::collection::vec(1usize..=3, 3),
        coeffs in prop::collection::vec(q().prop_filter("nonzero", |c| !Zero::is_zero(c)), 9),
        head in poly(2),
    ) {
        let poles: Vec<Rat> = poles.into_iter().map(|(n, d)| rat(n, d)).collect::<std::collections::BTreeSet<_>>().into_iter().collect();
        let mut f = RatFunc::from_poly(head.clone());
        let mut want = Vec::new();
        for (i, r) in poles.iter().enumerate() {
            for k in 1..=orders[i] {
                let c = coeffs[3 * i + k - 1].clone();
                f = &f + &(&RatFunc::constant(c.clone()) / &RatFunc::from_poly(Poly::linear_root(r).pow(k as u32)));
                want.push((r.clone(), k, c));
            }
        }
        let pf = residue_decompose(&f).unwrap();
        prop_assert_eq!(pf.recombine(), f);
        prop_assert_eq!(&pf.poly, &head);
        let mut got: Vec<(Rat, usize, Rat)> = pf.terms.iter().map(|t| (t.pole.clone(), t.order, t.coeff.clone())).collect();
        got.sort();
        want.sort();
        prop_assert_eq!(got, want);
    }

    #[test]
    fn rational_literals_round_trip(x in q()) {
        prop_assert_eq!(parse_rat(&fmt_rat(&x)).unwrap(), x);
    }
}

proptest! {
    // the Gauss-Jordan oracle is slow on dense entries, so fewer cases
    #![proptest_config(ProptestConfig::with_cases(64))]
    #[test]
    fn fraction_free_rank_agrees(m in prop::collection::vec(prop::collection::vec(ratfunc(), 3), 1..=4)) {
        prop_assert_eq!(rank_ratfunc(&m), rank(&m));
    }
}

#[test]
fn literal_errors() {
    assert!(matches!(parse_rat("0.5"), Err(Error::Parse(_))));
    assert!(matches!(parse_rat("1/0"), Err(Error::DivisionByZero)));
    assert!(matches!(parse_rat("x"), Err(Error::Parse(_))));
    assert_eq!(parse_rat("-6/4").unwrap(), rat(-3, 2));
}

#[test]
fn pole_at_evaluation_point() {
    let f = RatFunc::new(Poly::one(), Poly::linear_root(&rat(1, 2))).unwrap();
    assert!(matches!(f.eval(&rat(1, 2)), Err(Error::PoleAtPoint)));
}

#[test]
fn symbolic_rank_drop_is_detected() {
    // rows (z, 1) and (z^2, z) are proportional over Q(z) but not at z = 0
    let z = RatFunc::z();
    let m = vec![vec![z.clone(), RatFunc::one()], vec![&z * &z, z.clone()]];
    assert_eq!(rank_ratfunc(&m), 1);
    assert_eq!(rank(&m), 1);
}

#[test]
fn rank_survives_unlucky_specializations() {
    // vanishes at every point the fast path samples, yet is nonzero in Q(z)
    let p = &(&Poly::linear_root(&rat(3, 7)) * &Poly::linear_root(&rat(-5, 11))) * &Poly::linear_root(&rat(13, 4));
    let m = vec![vec![RatFunc::from_poly(p.clone()), RatFunc::zero()], vec![RatFunc::zero(), RatFunc::from_poly(p)]];
    assert_eq!(rank_ratfunc(&m), 2);
}
