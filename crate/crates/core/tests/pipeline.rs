//! End-to-end checks across weight extraction, tameness and classification.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use dehnscope_core::classify::{cone_dimension, dehn_classify};
use dehnscope_core::exactla::{int, Rational, RationalMatrix};
use dehnscope_core::families::{self, random_algebra};
use dehnscope_core::lie::{BasisElement, FieldTag, GradedLieAlgebra};
use dehnscope_core::tameness::tameness_report;
use dehnscope_core::weights::{is_standard, weights_from_derivations, DerivationAction, WeightDiagram};

/// Forgets the grading and returns the diagonal action that restores it.
fn ungraded(g: &GradedLieAlgebra) -> (GradedLieAlgebra, DerivationAction) {
    let basis = g
        .basis()
        .iter()
        .map(|b| BasisElement::new(b.label.clone(), Vec::new(), b.field.clone()))
        .collect();
    let brackets = g.structure_constants().iter().map(|(&(a, b), v)| {
        let value = v.iter().cloned().enumerate().filter(|(_, c)| *c != int(0)).collect();
        (a, b, value)
    });
    let u = GradedLieAlgebra::new(0, basis, brackets).unwrap();
    let n = g.dim();
    let matrices = (0..g.acting_rank())
        .map(|k| {
            let mut m = RationalMatrix::zeros(n, n);
            for i in 0..n {
                m[(i, i)] = g.weight(i)[k].clone();
            }
            m
        })
        .collect();
    (u, DerivationAction::new(matrices))
}

fn summary(d: &WeightDiagram) -> Vec<(Vec<Rational>, FieldTag, usize, bool)> {
    let mut v: Vec<_> = d
        .entries()
        .iter()
        .map(|e| (e.weight.clone(), e.field.clone(), e.multiplicity, e.principal))
        .collect();
    v.sort();
    v
}

#[test]
fn derivation_mode_recovers_random_diagrams() {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    for case in 0..200 {
        let g = random_algebra(rng.random(), 6);
        if g.acting_rank() == 0 {
            continue;
        }
        let (u, act) = ungraded(&g);
        let (h, diagram) = weights_from_derivations(&u, &act).unwrap();
        assert!(h.validate().is_empty(), "case {case}");
        let original = WeightDiagram::from_algebra(&g).unwrap();
        assert_eq!(summary(&diagram), summary(&original), "case {case}");
        assert_eq!(tameness_report(&diagram), tameness_report(&original), "case {case}");
        if is_standard(&g).unwrap() {
            let a = dehn_classify(&g).unwrap();
            let b = dehn_classify(&h).unwrap();
            assert_eq!((a.lower, a.upper, a.upper_rule), (b.lower, b.upper, b.upper_rule), "case {case}");
            assert_eq!(cone_dimension(&g), cone_dimension(&h), "case {case}");
        }
    }
}

#[test]
fn family_builders_match_their_known_values() {
    for m in families::fixtures() {
        let mismatches = families::verify(&m).unwrap();
        assert!(mismatches.is_empty(), "{}: {:?}", m.name, mismatches);
    }
}
