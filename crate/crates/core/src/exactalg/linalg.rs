//! Dense Gaussian elimination over an exact field. Sizes here are at most a
//! handful, so no pivoting strategy beyond "first nonzero" is needed.

use super::{Poly, Rat, RatFunc};
use num_traits::{One, Zero};

pub type Matrix<T> = Vec<Vec<T>>;

pub trait Scalar: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    /// Callers guarantee `o` is nonzero.
    fn div(&self, o: &Self) -> Self;
}

impl Scalar for Rat {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn div(&self, o: &Self) -> Self {
        self / o
    }
}

impl Scalar for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn one() -> Self {
        RatFunc::one()
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn div(&self, o: &Self) -> Self {
        self / o
    }
}

/// Row-reduce in place; returns pivot columns.
fn eliminate<T: Scalar>(m: &mut Matrix<T>) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = T::one().div(&m[r][c]);
        for j in c..cols {
            m[r][j] = m[r][j].mul(&inv);
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..cols {
                    let t = f.mul(&m[r][j]);
                    m[i][j] = m[i][j].sub(&t);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank<T: Scalar>(m: &Matrix<T>) -> usize {
    eliminate(&mut m.clone()).len()
}

/// Solve the square system `a x = b`; `None` when `a` is singular.
pub fn solve<T: Scalar>(a: &Matrix<T>, b: &[T]) -> Option<Vec<T>> {
    let n = a.len();
    let mut aug: Matrix<T> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let piv = eliminate(&mut aug);
    if piv.len() < n || piv.iter().any(|&c| c >= n) {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n].clone()).collect())
}

/// Rank over `Q(z)`. Tries a few rational specializations first, then falls
/// back to fraction-free (Bareiss) elimination on rows cleared
/// of denominators. Stays in `Q[z]`, so no gcds are taken along the way;
/// much faster than [`rank`] once entries have a few poles.
pub fn rank_ratfunc(m: &Matrix<RatFunc>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    // Specializing z can only lower the rank, so full rank at a sample point
    // settles it.
    let full = rows.min(cols);
    for z0 in [Rat::new(3.into(), 7.into()), Rat::new((-5).into(), 11.into()), Rat::new(13.into(), 4.into())] {
        let at: Option<Matrix<Rat>> = m.iter().map(|r| r.iter().map(|e| e.eval(&z0).ok()).collect()).collect();
        if let Some(at) = at {
            if rank(&at) == full {
                return full;
            }
        }
    }
    let mut a: Vec<Vec<Poly>> = m
        .iter()
        .map(|row| {
            let l = row.iter().fold(Poly::one(), |l, e| {
                let g = l.gcd(e.den());
                &l * &e.den().divrem(&g).expect("gcd is nonzero").0
            });
            row.iter().map(|e| e.num() * &l.divrem(e.den()).expect("nonzero").0).collect()
        })
        .collect();
    let mut prev = Poly::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let t = &(&a[r][c] * &a[i][j]) - &(&a[i][c] * &a[r][j]);
                a[i][j] = t.divrem(&prev).expect("nonzero").0;
            }
            a[i][c] = Poly::zero();
        }
        prev = a[r][c].clone();
        r += 1;
    }
    r
}

pub fn inverse<T: Scalar>(a: &Matrix<T>) -> Option<Matrix<T>> {
    let n = a.len();
    let mut aug: Matrix<T> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { T::one() } else { T::zero() }));
            r
        })
        .collect();
    let piv = eliminate(&mut aug);
    if piv.len() < n || piv.iter().any(|&c| c >= n) {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn det<T: Scalar>(a: &Matrix<T>) -> T {
    let n = a.len();
    let mut m = a.clone();
    let mut acc = T::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else { return T::zero() };
        if p != c {
            m.swap(p, c);
            acc = T::zero().sub(&acc);
        }
        acc = acc.mul(&m[c][c]);
        for i in c + 1..n {
            if !m[i][c].is_zero() {
                let f = m[i][c].div(&m[c][c]);
                for j in c..n {
                    let t = f.mul(&m[c][j]);
                    m[i][j] = m[i][j].sub(&t);
                }
            }
        }
    }
    acc
}

pub fn mat_mul<T: Scalar>(a: &Matrix<T>, b: &Matrix<T>) -> Matrix<T> {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..inner).fold(T::zero(), |acc, k| acc.add(&row[k].mul(&b[k][j]))))
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{int, rat};

    fn m(rows: &[&[i64]]) -> Matrix<Rat> {
        rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()
    }

    #[test]
    fn solve_and_inverse() {
        let a = m(&[&[2, 1], &[1, 3]]);
        let x = solve(&a, &[int(3), int(5)]).unwrap();
        assert_eq!(x, vec![rat(4, 5), rat(7, 5)]);
        let inv = inverse(&a).unwrap();
        assert_eq!(mat_mul(&a, &inv), m(&[&[1, 0], &[0, 1]]));
        assert!(solve(&m(&[&[1, 2], &[2, 4]]), &[int(1), int(1)]).is_none());
    }

    #[test]
    fn determinant_and_rank() {
        assert_eq!(det(&m(&[&[0, 1, 2], &[3, 4, 5], &[6, 7, 9]])), int(-3));
        assert_eq!(rank(&m(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]])), 2);
        let f: Matrix<RatFunc> = vec![
            vec![RatFunc::z(), RatFunc::one()],
            vec![RatFunc::one(), RatFunc::z()],
        ];
        assert_eq!(det(&f).to_string(), "z^2 - 1");
    }
}
