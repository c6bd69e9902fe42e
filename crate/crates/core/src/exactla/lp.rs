//! Exact phase-one simplex for `{x ≥ 0 : A x = b}` with Bland's rule.

use num_traits::{One, Signed, Zero};

use super::matrix::RationalMatrix;
use super::rational::Rational;
use crate::error::{Error, Result};

/// Outcome of a feasibility query, each side carrying a checkable witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Feasibility {
    /// A point `x ≥ 0` with `A x = b`.
    Feasible(Vec<Rational>),
    /// A Farkas vector `y` with `yᵀA ≤ 0` componentwise and `yᵀb > 0`.
    Infeasible(Vec<Rational>),
}

/// Decides whether `A x = b` has a nonnegative solution.
pub fn feasible(a: &RationalMatrix, b: &[Rational]) -> Result<Feasibility> {
    let m = a.rows();
    let n = a.cols();
    if b.len() != m {
        return Err(Error::DimensionMismatch {
            expected: m,
            found: b.len(),
        });
    }

    // Rows are negated where needed so the artificial basis starts feasible.
    let signs: Vec<bool> = b.iter().map(|x| x.is_negative()).collect();
    let width = n + m + 1;
    let rhs = n + m;
    let mut t: Vec<Vec<Rational>> = (0..m)
        .map(|i| {
            let mut row = vec![Rational::zero(); width];
            for j in 0..n {
                row[j] = if signs[i] { -a[(i, j)].clone() } else { a[(i, j)].clone() };
            }
            row[n + i] = Rational::one();
            row[rhs] = b[i].abs();
            row
        })
        .collect();
    let mut basis: Vec<usize> = (n..n + m).collect();
    let cost = |j: usize| -> Rational {
        if j >= n {
            Rational::one()
        } else {
            Rational::zero()
        }
    };

    loop {
        // Dual estimate w = c_B B⁻¹, read from the artificial columns.
        let reduced = |j: usize, t: &[Vec<Rational>], basis: &[usize]| -> Rational {
            let mut r = cost(j);
            for (i, &bi) in basis.iter().enumerate() {
                if bi >= n && !t[i][j].is_zero() {
                    r -= &t[i][j];
                }
            }
            r
        };
        let Some(enter) = (0..n + m).find(|&j| reduced(j, &t, &basis).is_negative()) else {
            break;
        };
        let mut leave: Option<(usize, Rational)> = None;
        for i in 0..m {
            if !t[i][enter].is_positive() {
                continue;
            }
            let ratio = &t[i][rhs] / &t[i][enter];
            let better = match &leave {
                None => true,
                Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
            };
            if better {
                leave = Some((i, ratio));
            }
        }
        // Phase one is bounded below by 0, so an entering column always has a
        // positive entry.
        let (row, _) = leave.expect("phase-one objective is bounded");
        pivot(&mut t, row, enter);
        basis[row] = enter;
    }

    let objective: Rational = basis
        .iter()
        .enumerate()
        .filter(|(_, &bi)| bi >= n)
        .map(|(i, _)| t[i][rhs].clone())
        .sum();

    if objective.is_zero() {
        let mut x = vec![Rational::zero(); n];
        for (i, &bi) in basis.iter().enumerate() {
            if bi < n {
                x[bi] = t[i][rhs].clone();
            }
        }
        Ok(Feasibility::Feasible(x))
    } else {
        // w_k = 1 - reduced cost of artificial k, then undo the row sign flips.
        let y: Vec<Rational> = (0..m)
            .map(|k| {
                let mut w = Rational::zero();
                for (i, &bi) in basis.iter().enumerate() {
                    if bi >= n {
                        w += &t[i][n + k];
                    }
                }
                if signs[k] {
                    -w
                } else {
                    w
                }
            })
            .collect();
        Ok(Feasibility::Infeasible(y))
    }
}

fn pivot(t: &mut [Vec<Rational>], row: usize, col: usize) {
    let inv = t[row][col].recip();
    for x in t[row].iter_mut() {
        *x *= &inv;
    }
    let pivot_row = t[row].clone();
    for (i, r) in t.iter_mut().enumerate() {
        if i == row || r[col].is_zero() {
            continue;
        }
        let f = r[col].clone();
        for (x, y) in r.iter_mut().zip(&pivot_row) {
            if !y.is_zero() {
                *x -= &f * y;
            }
        }
    }
}

/// Searches the null space of `m` for a vector with every coordinate
/// strictly positive. The returned witness has all coordinates `≥ 1`.
pub fn positive_kernel_vector(m: &RationalMatrix) -> Result<Option<Vec<Rational>>> {
    // x = 1 + y with y ≥ 0 turns x ≥ 1, m x = 0 into m y = -m·1.
    let ones = vec![Rational::one(); m.cols()];
    let rhs: Vec<Rational> = m.mul_vec(&ones)?.into_iter().map(|v| -v).collect();
    match feasible(m, &rhs)? {
        Feasibility::Feasible(y) => Ok(Some(y.into_iter().map(|v| v + Rational::one()).collect())),
        Feasibility::Infeasible(_) => Ok(None),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{dot, int};

    fn mat(rows: &[&[i64]]) -> RationalMatrix {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows: Vec<Vec<Rational>> = rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect();
        RationalMatrix::from_rows(cols, &rows).unwrap()
    }

    fn check(a: &RationalMatrix, b: &[Rational], f: &Feasibility) {
        match f {
            Feasibility::Feasible(x) => {
                assert!(x.iter().all(|v| !v.is_negative()));
                assert_eq!(a.mul_vec(x).unwrap(), b.to_vec());
            }
            Feasibility::Infeasible(y) => {
                let at = a.transpose();
                for j in 0..a.cols() {
                    assert!(!dot(at.row(j), y).is_positive());
                }
                assert!(dot(y, b).is_positive());
            }
        }
    }

    #[test]
    fn feasible_system() {
        let a = mat(&[&[1, 1, 0], &[0, 1, 1]]);
        let b = vec![int(2), int(3)];
        let f = feasible(&a, &b).unwrap();
        assert!(matches!(f, Feasibility::Feasible(_)));
        check(&a, &b, &f);
    }

    #[test]
    fn infeasible_system_has_farkas_witness() {
        let a = mat(&[&[1, 1], &[1, 1]]);
        let b = vec![int(1), int(2)];
        let f = feasible(&a, &b).unwrap();
        assert!(matches!(f, Feasibility::Infeasible(_)));
        check(&a, &b, &f);

        let a = mat(&[&[1, 2]]);
        let b = vec![int(-1)];
        let f = feasible(&a, &b).unwrap();
        assert!(matches!(f, Feasibility::Infeasible(_)));
        check(&a, &b, &f);
    }

    #[test]
    fn degenerate_system_terminates() {
        // Zero right-hand side with redundant rows.
        let a = mat(&[&[1, -1, 0, 1], &[1, -1, 0, 1], &[0, 1, -1, 0]]);
        let b = vec![int(0), int(0), int(0)];
        let f = feasible(&a, &b).unwrap();
        check(&a, &b, &f);
    }

    #[test]
    fn positive_kernel() {
        let v = positive_kernel_vector(&mat(&[&[1, -1]])).unwrap().unwrap();
        assert!(v.iter().all(|x| x >= &int(1)));
        assert!(positive_kernel_vector(&mat(&[&[1, 1]])).unwrap().is_none());
        // No constraints: the all-ones vector works.
        assert_eq!(
            positive_kernel_vector(&RationalMatrix::zeros(0, 2)).unwrap(),
            Some(vec![int(1), int(1)])
        );
    }
}
