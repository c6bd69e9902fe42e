use num_traits::{One, Signed, Zero};

use super::lp::{feasible, Feasibility};
use super::matrix::RationalMatrix;
use super::rational::{primitive_integer_vector, Rational};
use super::dot;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HullVerdict {
    Inside,
    Outside,
}

/// Exact answer to "is the origin in the convex hull of these points?".
///
/// `Inside` carries convex coefficients (one per point) whose weighted sum of
/// the points is zero. `Outside` carries a linear functional that is strictly
/// positive on every point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HullCertificate {
    pub verdict: HullVerdict,
    pub coefficients: Option<Vec<Rational>>,
    pub separator: Option<Vec<Rational>>,
}

impl HullCertificate {
    pub fn is_inside(&self) -> bool {
        self.verdict == HullVerdict::Inside
    }

    /// Re-checks the certificate against the points it was issued for.
    pub fn validate(&self, points: &[Vec<Rational>]) -> bool {
        match self.verdict {
            HullVerdict::Inside => {
                let Some(c) = &self.coefficients else {
                    return false;
                };
                if c.len() != points.len() || c.iter().any(Signed::is_negative) {
                    return false;
                }
                if c.iter().sum::<Rational>() != Rational::one() {
                    return false;
                }
                let dim = points.first().map_or(0, Vec::len);
                (0..dim).all(|k| {
                    points
                        .iter()
                        .zip(c)
                        .map(|(p, ci)| &p[k] * ci)
                        .sum::<Rational>()
                        .is_zero()
                })
            }
            HullVerdict::Outside => {
                let Some(s) = &self.separator else {
                    return false;
                };
                points
                    .iter()
                    .all(|p| p.len() == s.len() && dot(p, s).is_positive())
            }
        }
    }
}

/// Decides whether 0 lies in the convex hull of `points` by exact LP.
///
/// The empty set is outside with an empty separator.
pub fn zero_in_hull(points: &[Vec<Rational>]) -> Result<HullCertificate> {
    let Some(first) = points.first() else {
        return Ok(HullCertificate {
            verdict: HullVerdict::Outside,
            coefficients: None,
            separator: Some(Vec::new()),
        });
    };
    let dim = first.len();
    if let Some(bad) = points.iter().find(|p| p.len() != dim) {
        return Err(Error::DimensionMismatch {
            expected: dim,
            found: bad.len(),
        });
    }

    // Columns are the points with a trailing 1: Σ λᵢ pᵢ = 0, Σ λᵢ = 1.
    let mut a = RationalMatrix::zeros(dim + 1, points.len());
    for (j, p) in points.iter().enumerate() {
        for (k, x) in p.iter().enumerate() {
            a[(k, j)] = x.clone();
        }
        a[(dim, j)] = Rational::one();
    }
    let mut b = vec![Rational::zero(); dim + 1];
    b[dim] = Rational::one();

    let cert = match feasible(&a, &b)? {
        Feasibility::Feasible(lambda) => HullCertificate {
            verdict: HullVerdict::Inside,
            coefficients: Some(lambda),
            separator: None,
        },
        Feasibility::Infeasible(w) => {
            // wᵀpᵢ + w_d ≤ 0 and w_d > 0, so -w restricted to the first `dim`
            // coordinates is strictly positive on every point.
            let s: Vec<Rational> = w[..dim].iter().map(|x| -x.clone()).collect();
            HullCertificate {
                verdict: HullVerdict::Outside,
                coefficients: None,
                separator: Some(primitive_integer_vector(&s)),
            }
        }
    };
    debug_assert!(cert.validate(points));
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{int, ratio};
    use proptest::prelude::*;

    fn pts(p: &[&[i64]]) -> Vec<Vec<Rational>> {
        p.iter().map(|v| v.iter().map(|&x| int(x)).collect()).collect()
    }

    #[test]
    fn symmetric_pair_is_inside() {
        let p = pts(&[&[1, 0], &[-1, 0]]);
        let c = zero_in_hull(&p).unwrap();
        assert_eq!(c.verdict, HullVerdict::Inside);
        assert_eq!(c.coefficients, Some(vec![ratio(1, 2), ratio(1, 2)]));
    }

    #[test]
    fn positive_quadrant_is_outside() {
        let p = pts(&[&[1, 0], &[0, 1]]);
        let c = zero_in_hull(&p).unwrap();
        assert_eq!(c.verdict, HullVerdict::Outside);
        assert!(c.validate(&p));
        assert_eq!(c.separator, Some(vec![int(1), int(1)]));
    }

    #[test]
    fn abels_principal_weights_are_balanced() {
        let p = pts(&[&[-1, 0], &[1, -1], &[0, 1]]);
        let c = zero_in_hull(&p).unwrap();
        assert_eq!(c.verdict, HullVerdict::Inside);
        assert_eq!(c.coefficients, Some(vec![ratio(1, 3); 3]));
    }

    #[test]
    fn empty_and_zero_dimensional() {
        let c = zero_in_hull(&[]).unwrap();
        assert_eq!(c.verdict, HullVerdict::Outside);
        assert!(c.validate(&[]));
        let c = zero_in_hull(&[vec![], vec![]]).unwrap();
        assert_eq!(c.verdict, HullVerdict::Inside);
    }

    #[test]
    fn dimension_mismatch() {
        let p = vec![vec![int(1)], vec![int(1), int(2)]];
        assert_eq!(
            zero_in_hull(&p),
            Err(Error::DimensionMismatch { expected: 1, found: 2 })
        );
    }

    #[test]
    fn zero_point_is_inside() {
        let p = pts(&[&[3, 1], &[0, 0]]);
        assert!(zero_in_hull(&p).unwrap().is_inside());
    }

    fn point_set() -> impl Strategy<Value = Vec<Vec<Rational>>> {
        (1usize..=4).prop_flat_map(|d| {
            prop::collection::vec(
                prop::collection::vec((-4i64..=4, 1i64..=3).prop_map(|(n, q)| ratio(n, q)), d),
                0..=7,
            )
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(300))]

        #[test]
        fn certificates_self_validate(p in point_set()) {
            let c = zero_in_hull(&p).unwrap();
            prop_assert!(c.validate(&p));
        }

        #[test]
        fn verdict_invariant_under_permutation_and_scaling(
            p in point_set(),
            seed in any::<u64>(),
            scales in prop::collection::vec(1i64..=5, 7),
        ) {
            let base = zero_in_hull(&p).unwrap().verdict;
            let mut q: Vec<Vec<Rational>> = p
                .iter()
                .zip(&scales)
                .map(|(v, &s)| v.iter().map(|x| x * int(s)).collect())
                .collect();
            let n = q.len();
            if n > 1 {
                q.rotate_left((seed as usize) % n);
                q.swap(0, n - 1);
            }
            prop_assert_eq!(zero_in_hull(&q).unwrap().verdict, base);
        }
    }
}
