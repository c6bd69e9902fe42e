//! Tame, strongly 2-tame and 2-tame verdicts on a weight diagram.

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exactla::{zero_in_hull, HullCertificate, Rational};
use crate::weights::WeightDiagram;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TamenessReport {
    pub tame: bool,
    pub strongly_2tame: bool,
    pub two_tame: bool,
    /// Pairs over all weights whose segment meets 0; empty iff strongly 2-tame.
    pub strong_witnesses: Vec<(Vec<Rational>, Vec<Rational>)>,
    /// Pairs over principal weights whose segment meets 0; empty iff 2-tame.
    pub principal_witnesses: Vec<(Vec<Rational>, Vec<Rational>)>,
    /// Certificate for 0 against the hull of the principal weights.
    pub hull_certificate: HullCertificate,
}

/// Whether 0 lies on the closed segment `[a, b]`.
pub fn segment_contains_zero(a: &[Rational], b: &[Rational]) -> Result<bool> {
    if a.len() != b.len() {
        return Err(Error::DimensionMismatch {
            expected: a.len(),
            found: b.len(),
        });
    }
    let Some(i) = a.iter().position(|x| !x.is_zero()) else {
        return Ok(true);
    };
    if b.iter().all(Zero::is_zero) {
        return Ok(true);
    }
    // a = -c b with c > 0.
    if b[i].is_zero() || a[i].is_positive() == b[i].is_positive() {
        return Ok(false);
    }
    let c = -(&a[i] / &b[i]);
    Ok(a.iter().zip(b).all(|(x, y)| *x == -(&c * y)))
}

/// Segment witnesses over unordered pairs of `ws`, including a point paired
/// with itself.
fn segment_witnesses(ws: &[Vec<Rational>]) -> Vec<(Vec<Rational>, Vec<Rational>)> {
    let mut out = Vec::new();
    for i in 0..ws.len() {
        for j in i..ws.len() {
            if segment_contains_zero(&ws[i], &ws[j]).expect("equal widths") {
                out.push((ws[i].clone(), ws[j].clone()));
            }
        }
    }
    out
}

pub fn tameness_report(d: &WeightDiagram) -> TamenessReport {
    let principal = d.distinct_principal_weights();
    let all = d.distinct_weights();
    let hull_certificate = zero_in_hull(&principal).expect("weights share the acting rank");
    let strong_witnesses = segment_witnesses(&all);
    let principal_witnesses = segment_witnesses(&principal);
    TamenessReport {
        tame: !hull_certificate.is_inside(),
        strongly_2tame: strong_witnesses.is_empty(),
        two_tame: principal_witnesses.is_empty(),
        strong_witnesses,
        principal_witnesses,
        hull_certificate,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{int, ratio};
    use crate::families;
    use crate::lie::FieldTag;
    use proptest::prelude::*;

    fn w(x: &[i64]) -> Vec<Rational> {
        x.iter().map(|&v| int(v)).collect()
    }

    #[test]
    fn segment_examples() {
        assert!(segment_contains_zero(&w(&[1, 0]), &w(&[-2, 0])).unwrap());
        assert!(!segment_contains_zero(&w(&[1, 0]), &w(&[1, -1])).unwrap());
        assert!(segment_contains_zero(&w(&[-1, 0]), &w(&[1, 0])).unwrap());
        assert!(segment_contains_zero(&w(&[0, 0]), &w(&[1, 3])).unwrap());
        assert!(segment_contains_zero(&w(&[1, 3]), &w(&[0, 0])).unwrap());
        assert!(!segment_contains_zero(&w(&[1, 3]), &w(&[1, 3])).unwrap());
        assert!(!segment_contains_zero(&w(&[0, 1]), &w(&[1, -1])).unwrap());
        assert!(segment_contains_zero(&[ratio(1, 2), int(-1)], &w(&[-1, 2])).unwrap());
        assert!(matches!(
            segment_contains_zero(&w(&[1]), &w(&[1, 2])),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn report_examples() {
        let sol = families::sol(FieldTag::archimedean()).diagram().unwrap();
        let r = tameness_report(&sol);
        assert!(!r.tame && !r.strongly_2tame && !r.two_tame);

        let abels = families::abels(4, FieldTag::archimedean()).unwrap().diagram().unwrap();
        let r = tameness_report(&abels);
        assert!(!r.tame && !r.strongly_2tame && r.two_tame);
        assert!(r.principal_witnesses.is_empty());
        assert!(r.strong_witnesses.contains(&(w(&[-1, 0]), w(&[1, 0]))));
        assert!(r.strong_witnesses.contains(&(w(&[0, 0]), w(&[0, 0]))));

        let host = families::baumslag_host(2).unwrap().diagram().unwrap();
        let r = tameness_report(&host);
        assert!(!r.tame && r.strongly_2tame && r.two_tame);
        assert!(r.hull_certificate.validate(&host.distinct_principal_weights()));
    }

    proptest! {
        #[test]
        fn segment_matches_half_spaces(a in proptest::collection::vec(-3i64..4, 2), b in proptest::collection::vec(-3i64..4, 2)) {
            let (a, b) = (w(&a), w(&b));
            prop_assume!(a.iter().any(|x| !x.is_zero()) && b.iter().any(|x| !x.is_zero()));
            // Open half-planes {a > 0} and {b > 0} meet iff some grid point is in both.
            let mut meet = false;
            for x in -12i64..=12 {
                for y in -12i64..=12 {
                    let p = w(&[x, y]);
                    let pa: Rational = a.iter().zip(&p).map(|(u, v)| u * v).sum();
                    let pb: Rational = b.iter().zip(&p).map(|(u, v)| u * v).sum();
                    if pa.is_positive() && pb.is_positive() { meet = true; }
                }
            }
            prop_assert_eq!(segment_contains_zero(&a, &b).unwrap(), !meet);
        }
    }
}
