use gaussmanin::arrangement::*;
use gaussmanin::exactalg::*;
use gaussmanin::Error;
use proptest::prelude::*;

fn c(x: i64) -> RatFunc {
    RatFunc::constant(int(x))
}

fn cross_ratio(cols: &[(i64, i64)], j: usize) -> Rat {
    // points w = x / y on the affine line, all y nonzero here
    let w = |k: usize| rat(cols[k].0, cols[k].1);
    let (w0, w1, w2, wj) = (w(0), w(1), w(2), w(j));
    (&(&w2 - &w1) * &(&wj - &w0)) / (&(&wj - &w1) * &(&w2 - &w0))
}

fn distinct_points(cols: &[(i64, i64)]) -> bool {
    let pts: Vec<Rat> = cols.iter().map(|&(x, y)| rat(x, y)).collect();
    (0..pts.len()).all(|i| (0..i).all(|j| pts[i] != pts[j]))
}

fn column() -> impl Strategy<Value = (i64, i64)> {
    (-9i64..=9, prop_oneof![-5i64..=-1, 1i64..=5])
}

proptest! {
    #[test]
    fn parameters_are_cross_ratios(cols in prop::collection::vec(column(), 4..=6)) {
        prop_assume!(distinct_points(&cols));
        let raw = [cols.iter().map(|&(x, _)| c(x)).collect(), cols.iter().map(|&(_, y)| c(y)).collect()];
        let cfg = normalize_z_matrix(&raw).unwrap();
        for j in 3..cols.len() {
            prop_assert_eq!(cfg.params()[j - 3].as_constant().unwrap(), cross_ratio(&cols, j));
        }
    }

    #[test]
    fn invariant_under_gl2_and_column_scaling(
        cols in prop::collection::vec(column(), 4..=5),
        g in prop::array::uniform4(-4i64..=4),
        h in prop::collection::vec(prop_oneof![-3i64..=-1, 1i64..=3], 5),
    ) {
        prop_assume!(distinct_points(&cols));
        prop_assume!(g[0] * g[3] - g[1] * g[2] != 0);
        let raw = [cols.iter().map(|&(x, _)| c(x)).collect::<Vec<_>>(), cols.iter().map(|&(_, y)| c(y)).collect::<Vec<_>>()];
        let moved = [
            (0..cols.len()).map(|j| &(&(&c(g[0]) * &raw[0][j]) + &(&c(g[1]) * &raw[1][j])) * &c(h[j])).collect(),
            (0..cols.len()).map(|j| &(&(&c(g[2]) * &raw[0][j]) + &(&c(g[3]) * &raw[1][j])) * &c(h[j])).collect(),
        ];
        prop_assert_eq!(normalize_z_matrix(&moved).unwrap(), normalize_z_matrix(&raw).unwrap());
    }
}

#[test]
fn symbolic_matrix_normalizes_to_z() {
    // gZ for the canonical Gauss matrix, with symbolic last column
    let z = RatFunc::z();
    let raw = [vec![c(2), c(1), &c(2) - &c(1), &c(2) - &z], vec![c(1), c(3), &c(1) - &c(3), &c(1) - &(&c(3) * &z)]];
    assert_eq!(normalize_z_matrix(&raw).unwrap(), ConfigZ::gauss());
}

#[test]
fn gauss_master_function() {
    let (a, b, cc) = (rat(1, 3), rat(1, 5), rat(5, 7));
    let m = MasterFunction::gauss(&a, &b, &cc).unwrap();
    assert_eq!(m.n(), 3);
    assert_eq!(m.exponents()[1..], [a.clone(), &cc - &a, -b.clone()]);
    // dlog Phi = a/t - (c-a)/(1-t) + b z/(1-z t), as residues in l_j^{-1}
    let d = dlog_phi(&m);
    assert_eq!(d.pole_coeff(1, 1), RatFunc::constant(a.clone()));
    assert_eq!(d.pole_coeff(2, 1), RatFunc::constant(-(&cc - &a)));
    assert_eq!(d.pole_coeff(3, 1), &RatFunc::constant(b.clone()) * &RatFunc::z());
    assert!(d.poly().iter().all(|x| x.is_zero()));
}

#[test]
fn four_point_dlog_has_one_term_per_form() {
    let cfg = ConfigZ::new(vec![RatFunc::z(), RatFunc::constant(rat(1, 3))]).unwrap();
    let al = [rat(1, 5), rat(2, 7), rat(-3, 11), rat(4, 13)];
    let m = build_master(&cfg, &al, Mode::NonProjected).unwrap();
    let d = dlog_phi(&m);
    assert_eq!(d.pole_coeff(1, 1), RatFunc::constant(al[0].clone()));
    assert_eq!(d.pole_coeff(2, 1), RatFunc::constant(-al[1].clone()));
    assert_eq!(d.pole_coeff(3, 1), &RatFunc::constant(-al[2].clone()) * &RatFunc::z());
    assert_eq!(d.pole_coeff(4, 1), RatFunc::constant(-&al[3] * rat(1, 3)));
    let s: Rat = m.exponents().iter().sum();
    assert_eq!(s, int(-2));
}

#[test]
fn resonant_and_inconsistent_exponents() {
    let cfg = ConfigZ::gauss();
    assert!(matches!(
        build_master(&cfg, &[rat(1, 2), int(1), rat(1, 3)], Mode::NonProjected),
        Err(Error::ResonantExponent(_))
    ));
    assert!(matches!(
        build_master(&cfg, &[rat(1, 2), rat(1, 2), rat(1, 3), rat(1, 3)], Mode::Projective),
        Err(Error::ExponentSumViolation(_))
    ));
    assert!(matches!(ConfigZ::new(vec![RatFunc::one()]), Err(Error::DegenerateConfiguration(_))));
}
