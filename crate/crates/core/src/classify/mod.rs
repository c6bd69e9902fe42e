//! Verdicts assembled from weights, tameness and homology.

mod dehn;
mod gdv;
mod geometry;
mod invariants;

pub use dehn::{dehn_classify, dehn_from_inputs, DehnClass, DehnInputs, DehnVerdict, RuleFiring, RuleId, Witness};
pub use gdv::{
    annihilator, check_star, diagonal_scaling, gdv_cone_type, gdv_equivalent, gdv_npc, gdv_positive_witness, ConeType,
    Equivalence,
};
pub use geometry::{cone_dimension, hyperbolicity, HyperbolicKind, Hyperbolicity, NotHyperbolicReason};
pub use invariants::{p0, tac_invariants, CompactionData, SymbolicLogValue, SymbolicRatio, TacInvariants};

#[cfg(test)]
mod tests {
    use num_bigint::BigInt;
    use proptest::prelude::*;

    use super::*;
    use crate::error::Error;
    use crate::exactla::{int, ratio, Rational};
    use crate::families;
    use crate::homology::homology_dim;
    use crate::lie::{BasisElement, FieldTag, GradedLieAlgebra};
    use crate::weights::is_standard;

    fn arch() -> FieldTag {
        FieldTag::archimedean()
    }

    fn q(p: u64) -> FieldTag {
        FieldTag::nonarchimedean(0, Some(p)).unwrap()
    }

    fn line(label: &str, w: &[i64], field: FieldTag) -> BasisElement {
        BasisElement::new(label, w.iter().map(|&x| int(x)).collect(), field)
    }

    #[test]
    fn dehn_examples() {
        let sol = dehn_classify(&families::sol(arch()).algebra).unwrap();
        assert!(sol.compactly_presented);
        assert_eq!(sol.exact, Some(DehnClass::Exponential));
        assert_eq!(sol.lower_rule, Some(RuleId::R4));
        assert_eq!(sol.upper_rule, RuleId::R3);

        let sol_q = dehn_classify(&families::sol(q(2)).algebra).unwrap();
        assert!(!sol_q.compactly_presented);
        assert_eq!(sol_q.upper, DehnClass::Infinite);
        assert!(sol_q.fired(RuleId::R1));

        let a3 = dehn_classify(&families::abels(3, q(2)).unwrap().algebra).unwrap();
        assert!(!a3.compactly_presented);
        assert!(a3.fired(RuleId::R1));

        let a4 = dehn_classify(&families::abels(4, arch()).unwrap().algebra).unwrap();
        assert!(a4.compactly_presented);
        assert_eq!((a4.lower, a4.upper, a4.exact), (DehnClass::Linear, DehnClass::Cubic, None));
        assert_eq!(a4.upper_rule, RuleId::R6);

        let host = dehn_classify(&families::baumslag_host(3).unwrap().algebra).unwrap();
        assert_eq!(host.exact, Some(DehnClass::Quadratic));
        assert_eq!(host.upper_rule, RuleId::R7);

        let heintze = dehn_classify(&families::heintze(&[int(1), int(1)]).unwrap().algebra).unwrap();
        assert_eq!(heintze.exact, Some(DehnClass::Linear));
        assert_eq!(heintze.upper_rule, RuleId::R8);
    }

    #[test]
    fn nonarch_homology_obstruction() {
        // Abelian nonarchimedean pair of weights 1, -1 plus a real line keeps
        // R1 and R2 both active.
        let basis = vec![line("x", &[1], q(3)), line("y", &[-1], q(3)), line("z", &[1], arch())];
        let g = GradedLieAlgebra::abelian(1, basis).unwrap();
        let v = dehn_classify(&g).unwrap();
        assert!(v.fired(RuleId::R1) && v.fired(RuleId::R2));
        assert!(v.rules_fired.iter().all(|f| f.citation == f.rule.citation()));
    }

    #[test]
    fn dehn_errors_and_notes() {
        let heis = GradedLieAlgebra::new(
            1,
            vec![line("x", &[0], arch()), line("y", &[1], arch()), line("z", &[1], arch())],
            [(0, 1, vec![(2, int(1))])],
        )
        .unwrap();
        assert_eq!(dehn_classify(&heis), Err(Error::NotStandardSolvable { label: "x".into() }));

        // Heisenberg over F_2((t)) with positive weights: R7 is gated.
        let f2 = FieldTag::nonarchimedean(2, Some(2)).unwrap();
        let h = GradedLieAlgebra::new(
            2,
            vec![line("x", &[1, 0], f2.clone()), line("y", &[0, 1], f2.clone()), line("z", &[1, 1], f2)],
            [(0, 1, vec![(2, int(1))])],
        )
        .unwrap();
        let v = dehn_classify(&h).unwrap();
        assert!(!v.fired(RuleId::R7));
        assert!(v.notes.iter().any(|n| n.contains("R7 suppressed")));

        // The same over the reals passes the gate, and rank 3 adds a note.
        let h3 = GradedLieAlgebra::new(
            3,
            vec![line("x", &[1, 0, 0], arch()), line("y", &[0, 1, 0], arch()), line("z", &[1, 1, 0], arch())],
            [(0, 1, vec![(2, int(1))])],
        )
        .unwrap();
        let v = dehn_classify(&h3).unwrap();
        assert_eq!(v.exact, Some(DehnClass::Quadratic));
        assert!(v.notes.iter().any(|n| n.contains("rank 3")));
        assert!(v.warnings.iter().any(|w| w.contains("dimension 2")));
    }

    #[test]
    fn hyperbolicity_examples() {
        let h = families::heintze(&[int(1), int(1)]).unwrap().algebra;
        assert_eq!(hyperbolicity(&h).unwrap(), Hyperbolicity::Hyperbolic(HyperbolicKind::Connected));
        let sol = families::sol(arch()).algebra;
        assert!(matches!(
            hyperbolicity(&sol).unwrap(),
            Hyperbolicity::NotHyperbolic(NotHyperbolicReason::OppositeWeights(_, _))
        ));
        let mixed = GradedLieAlgebra::abelian(1, vec![line("x", &[1], arch()), line("y", &[2], q(2))]).unwrap();
        assert_eq!(hyperbolicity(&mixed).unwrap(), Hyperbolicity::Hyperbolic(HyperbolicKind::Mixed));
        let td = GradedLieAlgebra::abelian(1, vec![line("y", &[2], q(2))]).unwrap();
        assert_eq!(hyperbolicity(&td).unwrap(), Hyperbolicity::Hyperbolic(HyperbolicKind::TotallyDiscontinuous));
        let host = families::baumslag_host(2).unwrap().algebra;
        assert_eq!(
            hyperbolicity(&host).unwrap(),
            Hyperbolicity::NotHyperbolic(NotHyperbolicReason::HigherRank(2))
        );
        assert_eq!(
            hyperbolicity(&GradedLieAlgebra::zero(1)).unwrap(),
            Hyperbolicity::NotHyperbolic(NotHyperbolicReason::Elementary)
        );
    }

    #[test]
    fn cone_dimension_examples() {
        assert_eq!(cone_dimension(&families::sol(arch()).algebra).unwrap(), 1);
        assert_eq!(cone_dimension(&families::abels(4, arch()).unwrap().algebra).unwrap(), 2);
        let g = families::gdv(3, &[vec![int(1), int(1), int(-1)]]).unwrap().algebra;
        assert_eq!(cone_dimension(&g).unwrap(), 2);
        assert_eq!(
            cone_dimension(&families::sol(q(2)).algebra),
            Err(Error::NonArchimedeanUnsupported)
        );
    }

    #[test]
    fn p0_examples() {
        for n in 2..6usize {
            let c = CompactionData {
                archimedean_log_moduli: vec![(int(1), n - 1)],
                td_volume_factor: 1,
            };
            assert_eq!(p0(&c).unwrap(), SymbolicLogValue::rational(int(n as i64 - 1)));
        }
        let c = CompactionData {
            archimedean_log_moduli: vec![(int(1), 2), (int(2), 1)],
            td_volume_factor: 1,
        };
        assert_eq!(p0(&c).unwrap(), SymbolicLogValue::rational(int(4)));
        let c = CompactionData {
            archimedean_log_moduli: vec![(int(1), 1)],
            td_volume_factor: 6,
        };
        let v = p0(&c).unwrap();
        assert_eq!(v.rational_part, int(1));
        assert_eq!(v.log_terms, vec![(2, int(1)), (3, int(1))]);
        assert_eq!(v.to_string(), "1 + log(2) + log(3)");
        assert!((v.to_f64() - (1.0 + 6f64.ln())).abs() < 1e-12);
        let empty = CompactionData {
            archimedean_log_moduli: vec![],
            td_volume_factor: 3,
        };
        assert!(p0(&empty).unwrap().is_zero());
    }

    #[test]
    fn tac_examples() {
        let g = GradedLieAlgebra::abelian(1, vec![line("x", &[1], arch()), line("y", &[1], q(2))]).unwrap();
        let t = tac_invariants(&g, &[int(1)]).unwrap();
        assert_eq!((t.s_g.clone(), t.q_g.clone()), (BigInt::from(2), BigInt::from(2)));
        assert_eq!(t.varpi_g.numerator, SymbolicLogValue::rational(int(1)));
        assert_eq!(t.varpi_g.denominator, SymbolicLogValue::log(2, int(1)));

        let g4 = GradedLieAlgebra::abelian(1, vec![line("x", &[1], arch()), line("y", &[2], q(2))]).unwrap();
        let t4 = tac_invariants(&g4, &[int(1)]).unwrap();
        assert_eq!((t4.s_g, t4.q_g), (BigInt::from(4), BigInt::from(2)));

        let g2 = GradedLieAlgebra::abelian(
            1,
            vec![line("x1", &[1], arch()), line("x2", &[1], arch()), line("y", &[1], q(2))],
        )
        .unwrap();
        let t2 = tac_invariants(&g2, &[int(1)]).unwrap();
        assert_eq!(t2.varpi_g.numerator, SymbolicLogValue::rational(int(2)));
        assert!((t2.varpi_g.to_f64() - 2.0 / 2f64.ln()).abs() < 1e-12);

        // Reversing t inverts the modulus, which is then flipped back.
        let back = tac_invariants(&g4, &[int(-1)]).unwrap();
        assert_eq!(back.s_g, BigInt::from(4));
        assert_eq!(back.varpi_g.to_f64(), t4.varpi_g.to_f64());

        let half = GradedLieAlgebra::abelian(
            1,
            vec![line("x", &[1], arch()), BasisElement::new("y", vec![ratio(1, 2)], q(4))],
        )
        .unwrap();
        assert_eq!(tac_invariants(&half, &[int(1)]).unwrap().s_g, BigInt::from(2));
        let bad = GradedLieAlgebra::abelian(
            1,
            vec![line("x", &[1], arch()), BasisElement::new("y", vec![ratio(1, 2)], q(2))],
        )
        .unwrap();
        assert!(matches!(tac_invariants(&bad, &[int(1)]), Err(Error::NonIntegralModulus(_))));

        let arch_only = families::heintze(&[int(1)]).unwrap().algebra;
        assert!(matches!(tac_invariants(&arch_only, &[int(1)]), Err(Error::NotMixedType(_))));
        let no_q = GradedLieAlgebra::abelian(
            1,
            vec![line("x", &[1], arch()), line("y", &[1], FieldTag::nonarchimedean(0, None).unwrap())],
        )
        .unwrap();
        assert_eq!(
            tac_invariants(&no_q, &[int(1)]),
            Err(Error::MissingResidueCardinality { label: "y".into() })
        );
    }

    fn random_standard(seed: u64) -> Option<GradedLieAlgebra> {
        let g = families::random_algebra(seed, 7);
        is_standard(&g).unwrap().then_some(g)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(128))]
        #[test]
        fn verdict_invariants(seed in any::<u64>()) {
            if let Some(g) = random_standard(seed) {
                let v = dehn_classify(&g).unwrap();
                prop_assert!(v.lower <= v.upper);
                prop_assert!(!v.rules_fired.is_empty());
                prop_assert_eq!(v.compactly_presented, v.upper != DehnClass::Infinite);
                if let Some(e) = v.exact {
                    prop_assert!(v.lower == e && v.upper == e);
                }
                if v.fired(RuleId::R7) && g.is_abelian() {
                    prop_assert_eq!(homology_dim(&g, 2, &vec![Rational::from_integer(0.into()); g.acting_rank()]), 0);
                }
                let h = hyperbolicity(&g).unwrap();
                if h.is_hyperbolic() {
                    prop_assert_eq!(v.exact, Some(DehnClass::Linear));
                }
                if g.acting_rank() >= 2 {
                    prop_assert!(!h.is_hyperbolic());
                }
                if g.basis().iter().all(|e| e.field.is_archimedean()) {
                    prop_assert!(cone_dimension(&g).unwrap() >= g.acting_rank());
                }
            }
        }

        #[test]
        fn p0_at_least_one(ls in proptest::collection::vec((1i64..6, 1i64..4, 1usize..4), 1..4), delta in 1u64..50) {
            let c = CompactionData {
                archimedean_log_moduli: ls.iter().map(|&(a, b, m)| (ratio(a, b), m)).collect(),
                td_volume_factor: delta,
            };
            prop_assert!(p0(&c).unwrap().is_at_least(&int(1)));
        }

        #[test]
        fn cone_type_permutation_invariant(a in proptest::collection::vec(-3i64..4, 3), b in proptest::collection::vec(-3i64..4, 3), k in 0usize..6) {
            use itertools::Itertools;
            let sigma = (0..3).permutations(3).nth(k).unwrap();
            for v in [vec![a.clone()], vec![a.clone(), b.clone()]] {
                let v: Vec<Vec<Rational>> = v.iter().map(|x| x.iter().map(|&c| int(c)).collect()).collect();
                let moved: Vec<Vec<Rational>> = v.iter().map(|x| sigma.iter().map(|&i| x[i].clone()).collect()).collect();
                match gdv_cone_type(3, &v) {
                    Ok(t) => {
                        prop_assert_eq!(gdv_cone_type(3, &moved).unwrap(), t);
                        let npc = gdv_npc(3, &v).unwrap();
                        match t {
                            ConeType::RealTree | ConeType::TDkl(_, _) | ConeType::ProductOfTrees => prop_assert!(npc),
                            ConeType::SolLike | ConeType::TDd => prop_assert!(!npc),
                            ConeType::General(_) => {}
                        }
                    }
                    Err(e) => prop_assert!(matches!(e, Error::StarConditionViolated { axis: _ }), "unexpected error"),
                }
            }
        }
    }
}
