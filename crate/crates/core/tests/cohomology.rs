use gaussmanin::arrangement::*;
use gaussmanin::cohomology::*;
use gaussmanin::exactalg::*;
use gaussmanin::fuchsian::catalog_matrix;
use gaussmanin::numerics::{form_integral_01, QuadSpec};
use gaussmanin::verify::{gauss_samples, random_trational};
use gaussmanin::Error;
use num_complex::Complex64;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn abc() -> (Rat, Rat, Rat) {
    (rat(1, 3), rat(1, 5), rat(5, 7))
}

fn gauss() -> MasterFunction {
    let (a, b, c) = abc();
    MasterFunction::gauss(&a, &b, &c).unwrap()
}

fn k(x: Rat) -> RatFunc {
    RatFunc::constant(x)
}

fn z() -> RatFunc {
    RatFunc::z()
}

fn basis(m: &MasterFunction, second: GaussForm) -> Vec<BasisForm> {
    vec![gauss_form(GaussForm::ZeroOne, m).unwrap(), gauss_form(second, m).unwrap()]
}

/// Value of a form at numeric `(t, z)`, straight from its definition.
fn value(form: &OneForm, m: &MasterFunction, t: f64, zv: f64) -> Complex64 {
    let num = form.to_numeric(m.arrangement(), Complex64::new(zv, 0.0)).unwrap();
    let tc = Complex64::new(t, 0.0);
    num.eval_with(tc, &num.linear_values(tc))
}

#[test]
fn nabla_of_constants_and_simple_functions() {
    let m = gauss();
    assert_eq!(nabla0(&TRational::constant(RatFunc::one()), &m), dlog_phi(&m));
    let (a, b, c) = abc();
    let (af, bf, cf) = (to_f64(&a), to_f64(&b), to_f64(&c));
    let dlog = |t: f64, zv: f64| af / t - (cf - af) / (1.0 - t) + bf * zv / (1.0 - zv * t);
    let g = TRational::pole(2, 1, RatFunc::one());
    let t_form = TRational::monomial(1, RatFunc::one());
    for (t, zv) in [(0.3f64, 0.2f64), (0.7, 0.55), (-1.5, 0.9)] {
        let want = 1.0 / (1.0 - t).powi(2) + dlog(t, zv) / (1.0 - t);
        assert!((value(&nabla0(&g, &m), &m, t, zv) - want).norm() < 1e-12 * want.abs().max(1.0));
        let want = 1.0 + t * dlog(t, zv);
        assert!((value(&nabla0(&t_form, &m), &m, t, zv) - want).norm() < 1e-12 * want.abs().max(1.0));
    }
}

#[test]
fn reduce_basis_element_and_dlog() {
    let m = gauss();
    let bs = basis(&m, GaussForm::InfZero);
    let r = reduce(&bs[0].form, &bs, &m).unwrap();
    assert_eq!(r.coords, vec![RatFunc::one(), RatFunc::zero()]);
    for tag in PairTag::ALL {
        let bs = gauss_basis(tag, &m).unwrap();
        let r = reduce(&dlog_phi(&m), &bs, &m).unwrap();
        assert!(r.coords.iter().all(|x| x.is_zero()), "{tag}");
    }
}

#[test]
fn reduce_pole_at_inverse_z() {
    // b dt/(1-zt) = (c-a)/z phi01 - c/z phi_inf0 in cohomology
    let (a, b, c) = abc();
    let m = gauss();
    let r = reduce(&TRational::pole(3, 1, k(b)), &basis(&m, GaussForm::InfZero), &m).unwrap();
    assert_eq!(r.coords, vec![&k(&c - &a) / &z(), &k(-c) / &z()]);
}

#[test]
fn reduce_double_pole_at_one() {
    // dt/(1-t)^2 against (phi01, z dt/((1-t)(1-zt))). With the exponent of
    // (1-t) equal to c-a the divisor is c-a-1; the same form against
    // Phi with c -> c+1 gives a/(c-a), b/(c-a).
    let (a, b, c) = abc();
    let eta = TRational::pole(2, 2, RatFunc::one());
    let m = gauss();
    let r = reduce(&eta, &basis(&m, GaussForm::OneInvZTilde), &m).unwrap();
    let d = &c - &a - int(1);
    assert_eq!(r.coords, vec![k(&a / &d), k(&b / &d)]);
    let m1 = MasterFunction::gauss(&a, &b, &(&c + int(1))).unwrap();
    let r = reduce(&eta, &basis(&m1, GaussForm::OneInvZTilde), &m1).unwrap();
    assert_eq!(r.coords, vec![k(&a / &(&c - &a)), k(&b / &(&c - &a))]);
}

#[test]
fn covariant_z_derivatives() {
    let (a, b, c) = abc();
    let m = gauss();
    let zm1 = &z() - &RatFunc::one();
    let zz1 = &z() * &zm1;

    let bs = basis(&m, GaussForm::OneInvZ);
    let r = reduce(&nabla_z(&bs[0].form, &m), &bs, &m).unwrap();
    assert_eq!(r.coords, vec![RatFunc::zero(), &k(b.clone()) / &zm1]);

    let bs = basis(&m, GaussForm::InfZero);
    let r = reduce(&nabla_z(&bs[1].form, &m), &bs, &m).unwrap();
    assert_eq!(r.coords, vec![&k(&c - &a) / &z(), &k(-c.clone()) / &z()]);

    let bs = basis(&m, GaussForm::OneInf);
    let r = reduce(&nabla_z(&bs[1].form, &m), &bs, &m).unwrap();
    assert_eq!(r.coords, vec![&k(-a.clone()) / &zz1, &(&k(c.clone()) / &zz1) - &(&k(b) / &zm1)]);
}

#[test]
fn connection_in_the_inf0_basis_has_residues_at_0_and_1() {
    let (a, b, c) = abc();
    let m = gauss();
    let conn = gauss_manin(&basis(&m, GaussForm::InfZero), &m).unwrap();
    let rf = conn.residues.unwrap();
    assert_eq!(rf.points, vec![int(0), int(1)]);
    let cat = catalog_matrix(PairTag::InfZero, &a, &b, &c);
    assert_eq!(rf.residues, cat.residues);
}

#[test]
fn shifts() {
    let (a, b, c) = abc();
    let m = gauss();
    for tag in [PairTag::OneInvZ, PairTag::OneInvZTilde] {
        let bs = gauss_basis(tag, &m).unwrap();
        let (m2, b2, rec) = shift_exponents(&m, &bs).unwrap();
        assert_eq!(rec.index, Some(2));
        assert_eq!(m2.exponent(2), &(&c - &a - int(1)));
        assert_eq!(gauss_manin(&b2, &m2).unwrap().matrix, gauss_manin(&bs, &m).unwrap().matrix, "{tag}");
        assert_eq!(gauss_manin(&bs, &m).unwrap().matrix, catalog_matrix(tag, &a, &b, &c).matrix());
    }
    let bs = gauss_basis(PairTag::InfZero, &m).unwrap();
    assert!(matches!(shift_exponents(&m, &bs), Err(Error::UnabsorbableFactor(_))));
    let bs = gauss_basis(PairTag::InvZInf, &m).unwrap();
    assert!(shift_exponents(&m, &bs).unwrap().2.is_identity());
}

#[test]
fn dependent_basis_is_rejected() {
    let m = gauss();
    let phi = gauss_form(GaussForm::ZeroOne, &m).unwrap();
    let twice = BasisForm { form: phi.form.scale(&k(int(2))), ..phi.clone() };
    assert!(matches!(reduce(&phi.form, &[phi.clone(), twice], &m), Err(Error::SingularBasis)));
}

#[test]
fn resonant_exponent_is_reported_at_use() {
    // alpha_1 = a = 1 makes t^{-2} unreducible
    let m = MasterFunction::unchecked(ConfigZ::gauss(), vec![rat(-12, 5), int(1), rat(3, 5), rat(-1, 5)], Mode::Projective);
    let eta = TRational::pole(1, 2, RatFunc::one());
    assert!(matches!(reduce_to_simple(&eta, &m), Err(Error::ResonantExponent(_))));
}

/// `A_B M = M A_B' + dM/dz` with `M` the coordinates of `B` in `B'`.
#[test]
fn basis_change_consistency_over_all_pairs() {
    for (a, b, c) in gauss_samples(11, 3) {
        let m = MasterFunction::gauss(&a, &b, &c).unwrap();
        let data: Vec<(Vec<BasisForm>, Matrix<RatFunc>)> = PairTag::ALL
            .iter()
            .map(|&t| {
                let bs = gauss_basis(t, &m).unwrap();
                let conn = gauss_manin(&bs, &m).unwrap();
                (bs, conn.matrix)
            })
            .collect();
        for (i, (bi, ai)) in data.iter().enumerate() {
            for (j, (bj, aj)) in data.iter().enumerate() {
                if i == j {
                    continue;
                }
                let pb = PreparedBasis::new(bj, &m).unwrap();
                let mm: Matrix<RatFunc> = bi.iter().map(|f| pb.reduce(&f.form, &m).unwrap().coords).collect();
                let dm: Matrix<RatFunc> = mm.iter().map(|r| r.iter().map(|e| e.derivative()).collect()).collect();
                let lhs = mat_mul(ai, &mm);
                let rhs: Matrix<RatFunc> = mat_mul(&mm, aj)
                    .iter()
                    .zip(&dm)
                    .map(|(r, d)| r.iter().zip(d).map(|(x, y)| x + y).collect())
                    .collect();
                assert_eq!(lhs, rhs, "{} vs {}", PairTag::ALL[i], PairTag::ALL[j]);
            }
        }
    }
}

fn master_n(n: usize, seed: u64) -> MasterFunction {
    let mut params = vec![z()];
    params.extend([rat(1, 3), rat(2, 7)].into_iter().take(n - 3).map(RatFunc::constant));
    let exps: Vec<Rat> = (1..=n).map(|i| rat(2 * i as i64 + seed as i64, 13)).collect();
    build_master(&ConfigZ::new(params).unwrap(), &exps, Mode::NonProjected).unwrap()
}

#[test]
fn dimension_is_n_minus_one() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for n in 3..=5 {
        let m = master_n(n, 1);
        let basis: Vec<OneForm> = default_basis(&m).into_iter().map(|b| b.form).collect();
        assert_eq!(basis.len(), n - 1);
        assert_eq!(cohomology_rank(&basis, &m).unwrap(), n - 1);
        // every simple pole, plus higher-order junk, spans nothing more
        let mut all: Vec<OneForm> = (1..=n).map(|j| TRational::pole(j, 1, RatFunc::one())).collect();
        all.extend((0..n).map(|_| random_trational(&mut rng, n, 3)));
        assert_eq!(cohomology_rank(&all, &m).unwrap(), n - 1, "n = {n}");
    }
}

/// Connection for n = 4 against a finite-difference derivative of the
/// integrals over [0, 1].
#[test]
fn four_point_connection_matches_quadrature() {
    let m = master_n(4, 0);
    let bs = default_basis(&m);
    let conn = gauss_manin(&bs, &m).unwrap();
    let q = QuadSpec::default();
    let integrals = |zv: f64| -> Vec<Complex64> { bs.iter().map(|b| form_integral_01(&m, &b.form, zv, &q).unwrap().value).collect() };
    let (z0, h) = (0.3, 1e-3);
    let at = |s: f64| integrals(z0 + s * h);
    let (p2, p1, m1, m2) = (at(2.0), at(1.0), at(-1.0), at(-2.0));
    let i0 = integrals(z0);
    for i in 0..3 {
        let fd = (-p2[i] + 8.0 * p1[i] - 8.0 * m1[i] + m2[i]) / (12.0 * h);
        let a: Complex64 = (0..3).map(|j| conn.matrix[i][j].eval_c(Complex64::new(z0, 0.0)).unwrap() * i0[j]).sum();
        assert!((fd - a).norm() < 1e-8 * a.norm().max(1.0), "row {i}: {fd} vs {a}");
    }
}

fn gauss_strategy() -> impl Strategy<Value = (MasterFunction, u64)> {
    any::<u64>().prop_map(|s| {
        let (a, b, c) = gauss_samples(s, 1).pop().unwrap();
        (MasterFunction::gauss(&a, &b, &c).unwrap(), s)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn exact_forms_reduce_to_zero((m, s) in gauss_strategy()) {
        let mut rng = ChaCha8Rng::seed_from_u64(s);
        let g = random_trational(&mut rng, 3, 3).add(&TRational::monomial(4, RatFunc::constant(rat(1, 7))));
        let r = reduce(&nabla0(&g, &m), &default_basis(&m), &m).unwrap();
        prop_assert!(r.coords.iter().all(|x| x.is_zero()));
    }

    #[test]
    fn witness_and_linearity((m, s) in gauss_strategy()) {
        let mut rng = ChaCha8Rng::seed_from_u64(s.wrapping_add(1));
        let (e1, e2) = (random_trational(&mut rng, 3, 3), random_trational(&mut rng, 3, 3));
        let bs = gauss_basis(PairTag::InfZero, &m).unwrap();
        let pb = PreparedBasis::new(&bs, &m).unwrap();
        let r1 = pb.reduce(&e1, &m).unwrap();
        let mut rest = e1.clone();
        for (x, b) in r1.coords.iter().zip(&bs) {
            rest = rest.sub(&b.form.scale(x));
        }
        prop_assert_eq!(rest, nabla0(&r1.witness, &m));

        let u = &RatFunc::z() + &RatFunc::constant(rat(1, 2));
        let v = RatFunc::new(Poly::one(), Poly::linear_root(&rat(3, 1))).unwrap();
        let r2 = pb.reduce(&e2, &m).unwrap();
        let r = pb.reduce(&e1.scale(&u).add(&e2.scale(&v)), &m).unwrap();
        for i in 0..2 {
            prop_assert_eq!(&r.coords[i], &(&(&u * &r1.coords[i]) + &(&v * &r2.coords[i])));
        }
    }
}
