use gaussmanin::cohomology::PairTag;
use gaussmanin::exactalg::*;
use gaussmanin::fuchsian::*;
use gaussmanin::numerics::{hyp2f1_series, ode_solve_path, OdeTol, PathPlan};
use gaussmanin::verify::{derive_pair, gauss_samples};
use gaussmanin::Error;
use num_complex::Complex64;
use proptest::prelude::*;

fn gauss_det(a: &Rat, b: &Rat) -> RatFunc {
    let z = RatFunc::z();
    &RatFunc::constant(a * b) / &(&z * &(&z - &RatFunc::one()))
}

#[test]
fn catalog_is_self_consistent() {
    // determinant and scalar equation of the closed forms themselves
    for (a, b, c) in gauss_samples(5, 10) {
        for tag in PairTag::ALL {
            let sys = catalog_matrix(tag, &a, &b, &c);
            assert_eq!(det_connection(&sys), gauss_det(&a, &b), "{tag}");
            let ode = to_scalar(&sys, 0).unwrap();
            assert_eq!(ode.component, 0);
            assert!(ode.same_operator(&ScalarODE2::gauss(&a, &b, &c)), "{tag}");
        }
    }
}

#[test]
fn derived_systems_match_catalog_at_reference_point() {
    let (a, b, c) = (rat(1, 3), rat(1, 5), rat(5, 7));
    for tag in PairTag::ALL {
        let (_, _, conn) = derive_pair(tag, &a, &b, &c).unwrap();
        let sys = FuchsianSystem::from_connection(&conn).unwrap();
        assert_eq!(sys.residues, catalog_matrix(tag, &a, &b, &c).residues, "{tag}");
        assert_eq!(sys.singular_points, vec![int(0), int(1)]);
    }
}

#[test]
fn inf0_residues_by_hand() {
    let (a, b, c) = (rat(1, 3), rat(1, 5), rat(5, 7));
    let sys = catalog_matrix(PairTag::InfZero, &a, &b, &c);
    // A0 = [[0, 0], [c-a, -c]], A1 = [[c-a-b, b-c], [0, 0]]
    assert_eq!(sys.residues[0], vec![vec![int(0), int(0)], vec![rat(8, 21), rat(-5, 7)]]);
    assert_eq!(sys.residues[1], vec![vec![rat(19, 105), rat(-18, 35)], vec![int(0), int(0)]]);
}

#[test]
fn gauss_system_transports_the_series() {
    // f = (F, (z/b) F'): A0 = [[0, b], [0, 1-c]], A1 = [[0, 0], [-a, c-a-b-1]]
    let (a, b, c) = (rat(1, 3), rat(1, 5), rat(5, 7));
    let sys = catalog_matrix(PairTag::OneInvZTilde, &a, &b, &c);
    let (af, bf, cf) = (Complex64::new(to_f64(&a), 0.0), Complex64::new(to_f64(&b), 0.0), Complex64::new(to_f64(&c), 0.0));
    let f = |x: f64| hyp2f1_series(af, bf, cf, Complex64::new(x, 0.0)).unwrap().value;
    let fp = |x: f64| hyp2f1_series(af + 1.0, bf + 1.0, cf + 1.0, Complex64::new(x, 0.0)).unwrap().value * af * bf / cf;
    let y0 = [f(0.1), fp(0.1) * 0.1 / bf];
    let path = PathPlan::line(Complex64::new(0.1, 0.0), Complex64::new(0.5, 0.0), 0.05);
    let y = ode_solve_path(&sys, &path, &y0, &OdeTol::default()).unwrap();
    assert!((y[0] - f(0.5)).norm() < 1e-10);
    assert!((y[1] - fp(0.5) * 0.5 / bf).norm() < 1e-10);

    let through = PathPlan::new(vec![Complex64::new(0.5, 0.0), Complex64::new(1.0, 0.0)], 0.05);
    assert!(matches!(ode_solve_path(&sys, &through, &y0, &OdeTol::default()), Err(Error::PathThroughSingularity(_))));
}

fn q() -> impl Strategy<Value = Rat> {
    (-20i64..=20, 1i64..=9).prop_map(|(n, d)| rat(n, d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn weyl_reduction_gives_gauss((a1, a2, a3) in (q(), q(), q())) {
        let al = [int(-2) - &a1 - &a2 - &a3, a1.clone(), a2.clone(), a3.clone()];
        let (ode, op, (a, b, c)) = weyl_reduce(&al).unwrap();
        prop_assert_eq!(&a, &(&a1 + int(1)));
        prop_assert_eq!(&b, &(-a3.clone()));
        prop_assert_eq!(&c, &(&a1 + &a2 + int(2)));
        prop_assert!(ode.same_operator(&ScalarODE2::gauss(&a, &b, &c)));
        // leading symbol z(z-1) d^2
        prop_assert_eq!(op.coeff(2, 2), int(1));
        prop_assert_eq!(op.coeff(1, 2), int(-1));
        prop_assert_eq!(op.coeff(0, 2), int(0));
    }
}

#[test]
fn weyl_requires_exponent_sum() {
    let al = [rat(1, 2), rat(1, 3), rat(1, 5), rat(1, 7)];
    assert!(matches!(weyl_reduce(&al), Err(Error::ExponentSumViolation(_))));
}

#[test]
fn product_normal_ordering() {
    // d^2 z^2 = z^2 d^2 + 4 z d + 2
    let d2 = WeylElement::d().mul(&WeylElement::d());
    let z2 = WeylElement::z().mul(&WeylElement::z());
    let want = WeylElement::term(2, 2, int(1)).add(&WeylElement::term(1, 1, int(4))).add(&WeylElement::constant(int(2)));
    assert_eq!(d2.mul(&z2), want);
}
