//! Dehn-function bounds from tameness and weight-zero homology.

use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactla::{HullCertificate, Rational, RowEchelon};
use crate::homology::h2_class_representative;
use crate::lie::{FieldKind, GradedLieAlgebra};
use crate::tameness::{tameness_report, TamenessReport};
use crate::weights::{zero_principal_weight, WeightDiagram};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DehnClass {
    Linear,
    Quadratic,
    Cubic,
    Exponential,
    Infinite,
}

impl DehnClass {
    pub const ALL: [DehnClass; 5] = [
        DehnClass::Linear,
        DehnClass::Quadratic,
        DehnClass::Cubic,
        DehnClass::Exponential,
        DehnClass::Infinite,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            DehnClass::Linear => "linear",
            DehnClass::Quadratic => "quadratic",
            DehnClass::Cubic => "cubic",
            DehnClass::Exponential => "exponential",
            DehnClass::Infinite => "infinite",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|c| c.as_str() == s)
    }
}

impl fmt::Display for DehnClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RuleId {
    R1,
    R2,
    R3,
    R4,
    R5,
    R6,
    R7,
    R8,
}

impl RuleId {
    pub const ALL: [RuleId; 8] = [
        RuleId::R1,
        RuleId::R2,
        RuleId::R3,
        RuleId::R4,
        RuleId::R5,
        RuleId::R6,
        RuleId::R7,
        RuleId::R8,
    ];

    /// One-line statement of the criterion.
    pub fn citation(self) -> &'static str {
        match self {
            RuleId::R1 => "not compactly presented when the totally disconnected quotient fails 2-tameness",
            RuleId::R2 => "not compactly presented when H2 of the nonarchimedean factor is nonzero in weight zero",
            RuleId::R3 => "Dehn function at most exponential under 2-tameness and vanishing weight-zero H2 of the nonarchimedean factor",
            RuleId::R4 => "Dehn function at least exponential when the group is not 2-tame",
            RuleId::R5 => "Dehn function at least exponential when H2 of the whole algebra is nonzero in weight zero",
            RuleId::R6 => "Dehn function at most cubic under 2-tameness and vanishing weight-zero H2",
            RuleId::R7 => "strongly 2-tame groups with abelian or characteristic-zero unipotent part have linear Dehn function in rank 1 and quadratic in rank at least 2",
            RuleId::R8 => "tame groups of rank 1 are hyperbolic with linear Dehn function",
        }
    }

    /// Longer statement with hypotheses and conclusion spelled out.
    pub fn statement(self) -> &'static str {
        match self {
            RuleId::R1 => "Hypothesis: some pair of principal weights carried by nonarchimedean fields has 0 on its closed segment. Conclusion: G admits no compact presentation.",
            RuleId::R2 => "Hypothesis: the weight-zero part of H2 of the nonarchimedean direct factor of u is nonzero. Conclusion: G admits no compact presentation.",
            RuleId::R3 => "Hypothesis: the nonarchimedean factor is 2-tame and its weight-zero H2 vanishes. Conclusion: G is compactly presented and its Dehn function is bounded by an exponential.",
            RuleId::R4 => "Hypothesis: some pair of principal weights has 0 on its closed segment. Conclusion: the Dehn function is bounded below by an exponential.",
            RuleId::R5 => "Hypothesis: the weight-zero part of H2(u) is nonzero. Conclusion: the Dehn function is bounded below by an exponential.",
            RuleId::R6 => "Hypothesis: G is 2-tame and the weight-zero part of H2(u) vanishes. Conclusion: the Dehn function is bounded by a cubic polynomial.",
            RuleId::R7 => "Hypothesis: no pair of weights has 0 on its closed segment, and u is abelian or every field has characteristic 0. Conclusion: the Dehn function is linear when the acting rank is 1 and quadratic when it is at least 2.",
            RuleId::R8 => "Hypothesis: 0 is outside the convex hull of the weights and the acting rank is 1. Conclusion: G is Gromov-hyperbolic and its Dehn function is linear.",
        }
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// Two weights whose closed segment contains 0.
    WeightPair(Vec<Rational>, Vec<Rational>),
    /// A weight-zero 2-cycle that is not a boundary, on pairs of labels.
    HomologyClass(Vec<(Rational, String, String)>),
    Hull(HullCertificate),
    /// A hypothesis that holds, stated in words.
    Condition(String),
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::WeightPair(a, b) => write!(f, "pair {} and {}", fmt_vec(a), fmt_vec(b)),
            Witness::HomologyClass(terms) => {
                let parts: Vec<String> = terms.iter().map(|(c, a, b)| format!("{c}*{a}^{b}")).collect();
                write!(f, "cycle {}", parts.join(" + "))
            }
            Witness::Hull(cert) => match (&cert.coefficients, &cert.separator) {
                (Some(c), _) => write!(f, "0 is the convex combination {}", fmt_vec(c)),
                (_, Some(s)) => write!(f, "separator {} is positive on every weight", fmt_vec(s)),
                _ => write!(f, "hull certificate"),
            },
            Witness::Condition(s) => f.write_str(s),
        }
    }
}

pub(crate) fn fmt_vec(v: &[Rational]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RuleFiring {
    pub rule: RuleId,
    pub citation: &'static str,
    pub witness: Witness,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DehnVerdict {
    pub compactly_presented: bool,
    pub lower: DehnClass,
    pub upper: DehnClass,
    pub exact: Option<DehnClass>,
    /// Every rule whose hypotheses hold, in evaluation order.
    pub rules_fired: Vec<RuleFiring>,
    /// The rule that produced `upper`.
    pub upper_rule: RuleId,
    /// The rule that produced `lower`, absent for the default linear bound.
    pub lower_rule: Option<RuleId>,
    pub notes: Vec<String>,
    pub warnings: Vec<String>,
}

impl DehnVerdict {
    pub fn fired(&self, rule: RuleId) -> bool {
        self.rules_fired.iter().any(|f| f.rule == rule)
    }
}

/// Intermediate quantities shared by the verdict and the report.
#[derive(Debug, Clone)]
pub struct DehnInputs {
    pub diagram: WeightDiagram,
    pub tameness: TamenessReport,
    pub nonarch_tameness: TamenessReport,
    pub h2_zero_class: Option<Vec<(Rational, String, String)>>,
    pub h2_zero_nonarch_class: Option<Vec<(Rational, String, String)>>,
}

impl DehnInputs {
    pub fn compute(g: &GradedLieAlgebra) -> Result<Self> {
        let nonarch = g.field_factor(FieldKind::NonArchimedean);
        let diagram = WeightDiagram::from_algebra(g)?;
        let nonarch_diagram = WeightDiagram::from_algebra(&nonarch)?;
        let zero = vec![Rational::zero(); g.acting_rank()];
        Ok(Self {
            tameness: tameness_report(&diagram),
            nonarch_tameness: tameness_report(&nonarch_diagram),
            diagram,
            h2_zero_class: labelled_class(g, &zero),
            h2_zero_nonarch_class: labelled_class(&nonarch, &zero),
        })
    }
}

fn labelled_class(g: &GradedLieAlgebra, weight: &[Rational]) -> Option<Vec<(Rational, String, String)>> {
    h2_class_representative(g, weight).map(|terms| {
        terms
            .into_iter()
            .map(|(c, (a, b))| (c, g.label(a).to_string(), g.label(b).to_string()))
            .collect()
    })
}

fn fire(rule: RuleId, witness: Witness) -> RuleFiring {
    RuleFiring {
        rule,
        citation: rule.citation(),
        witness,
    }
}

pub fn dehn_classify(g: &GradedLieAlgebra) -> Result<DehnVerdict> {
    g.ensure_valid()?;
    if let Some(label) = zero_principal_weight(g)? {
        return Err(Error::NotStandardSolvable { label });
    }
    let inputs = DehnInputs::compute(g)?;
    dehn_from_inputs(g, &inputs)
}

/// Applies the rule chain to precomputed tameness and homology data.
pub fn dehn_from_inputs(g: &GradedLieAlgebra, inputs: &DehnInputs) -> Result<DehnVerdict> {
    let d = g.acting_rank();
    let mut fired = Vec::new();
    let mut notes = Vec::new();
    let mut warnings = Vec::new();

    let span = RowEchelon::from_vectors(d, inputs.diagram.distinct_weights()).rank();
    if span < d {
        warnings.push(format!("weights span a subspace of dimension {span} inside the acting rank {d}"));
    }

    let na = &inputs.nonarch_tameness;
    if let Some((a, b)) = na.principal_witnesses.first() {
        fired.push(fire(RuleId::R1, Witness::WeightPair(a.clone(), b.clone())));
    }
    if let Some(class) = &inputs.h2_zero_nonarch_class {
        fired.push(fire(RuleId::R2, Witness::HomologyClass(class.clone())));
    }
    if !fired.is_empty() {
        let upper_rule = fired[0].rule;
        return Ok(DehnVerdict {
            compactly_presented: false,
            lower: DehnClass::Infinite,
            upper: DehnClass::Infinite,
            exact: Some(DehnClass::Infinite),
            rules_fired: fired,
            upper_rule,
            lower_rule: Some(upper_rule),
            notes,
            warnings,
        });
    }

    let t = &inputs.tameness;
    let h2_vanishes = inputs.h2_zero_class.is_none();
    let mut exact_rule: Option<(RuleId, DehnClass)> = None;
    let mut upper: Option<(RuleId, DehnClass)> = None;

    if t.tame && d == 1 {
        fired.push(fire(RuleId::R8, Witness::Hull(t.hull_certificate.clone())));
        exact_rule.get_or_insert((RuleId::R8, DehnClass::Linear));
    }
    if t.strongly_2tame {
        let abelian = g.is_abelian();
        let positive_char = g.basis().iter().any(|e| e.field.characteristic() > 0);
        if abelian || !positive_char {
            let class = if d == 1 { DehnClass::Linear } else { DehnClass::Quadratic };
            let why = if abelian { "u is abelian" } else { "every field has characteristic 0" };
            fired.push(fire(
                RuleId::R7,
                Witness::Condition(format!("no pair of weights has 0 on its segment and {why}")),
            ));
            exact_rule.get_or_insert((RuleId::R7, class));
            if abelian {
                debug_assert!(h2_vanishes, "strong 2-tameness leaves no weight-zero pairs");
            }
            if d >= 3 && !abelian {
                notes.push(format!(
                    "R7 is applied with acting rank {d} to a nonabelian algebra; one published statement of this criterion covers only rank 2"
                ));
            }
        } else {
            notes.push(
                "R7 suppressed: u is nonabelian and some field has positive characteristic; extending the criterion to this case is unproven"
                    .to_string(),
            );
        }
    }
    if t.two_tame && h2_vanishes {
        fired.push(fire(
            RuleId::R6,
            Witness::Condition("2-tame and the weight-zero part of H2(u) vanishes".into()),
        ));
        upper.get_or_insert((RuleId::R6, DehnClass::Cubic));
    }
    fired.push(fire(
        RuleId::R3,
        Witness::Condition("nonarchimedean factor is 2-tame with vanishing weight-zero H2".into()),
    ));
    upper.get_or_insert((RuleId::R3, DehnClass::Exponential));

    let mut lower: Option<(RuleId, DehnClass)> = None;
    if let Some((a, b)) = t.principal_witnesses.first() {
        fired.push(fire(RuleId::R4, Witness::WeightPair(a.clone(), b.clone())));
        lower.get_or_insert((RuleId::R4, DehnClass::Exponential));
    }
    if let Some(class) = &inputs.h2_zero_class {
        fired.push(fire(RuleId::R5, Witness::HomologyClass(class.clone())));
        lower.get_or_insert((RuleId::R5, DehnClass::Exponential));
    }

    let (upper_rule, upper_class, lower_rule, lower_class) = match exact_rule {
        Some((rule, class)) => (rule, class, Some(rule), class),
        None => {
            let (ur, uc) = upper.expect("R3 always applies");
            match lower {
                Some((lr, lc)) => (ur, uc, Some(lr), lc),
                None => (ur, uc, None, DehnClass::Linear),
            }
        }
    };
    if let (Some(_), Some((_, lc))) = (exact_rule, lower) {
        if lc > upper_class {
            return Err(Error::InconsistentBounds {
                lower: lc.to_string(),
                upper: upper_class.to_string(),
            });
        }
    }
    if lower_class > upper_class {
        return Err(Error::InconsistentBounds {
            lower: lower_class.to_string(),
            upper: upper_class.to_string(),
        });
    }
    Ok(DehnVerdict {
        compactly_presented: true,
        lower: lower_class,
        upper: upper_class,
        exact: (lower_class == upper_class).then_some(upper_class),
        rules_fired: fired,
        upper_rule,
        lower_rule,
        notes,
        warnings,
    })
}
