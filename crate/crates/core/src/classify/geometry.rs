//! Hyperbolicity and the dimension of the asymptotic cone.

use std::fmt;

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::exactla::Rational;
use crate::lie::{FieldKind, GradedLieAlgebra};
use crate::tameness::tameness_report;
use crate::weights::{exponential_radical, zero_principal_weight, WeightDiagram};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HyperbolicKind {
    Connected,
    TotallyDiscontinuous,
    Mixed,
}

impl HyperbolicKind {
    pub fn as_str(self) -> &'static str {
        match self {
            HyperbolicKind::Connected => "connected",
            HyperbolicKind::TotallyDiscontinuous => "totally_discontinuous",
            HyperbolicKind::Mixed => "mixed",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NotHyperbolicReason {
    /// `u = 0`: the group is virtually abelian.
    Elementary,
    HigherRank(usize),
    /// A positive and a negative principal weight.
    OppositeWeights(Vec<Rational>, Vec<Rational>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Hyperbolicity {
    Hyperbolic(HyperbolicKind),
    NotHyperbolic(NotHyperbolicReason),
}

impl Hyperbolicity {
    pub fn is_hyperbolic(&self) -> bool {
        matches!(self, Hyperbolicity::Hyperbolic(_))
    }
}

impl fmt::Display for Hyperbolicity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Hyperbolicity::Hyperbolic(k) => write!(f, "hyperbolic({})", k.as_str()),
            Hyperbolicity::NotHyperbolic(NotHyperbolicReason::Elementary) => f.write_str("not_hyperbolic(elementary)"),
            Hyperbolicity::NotHyperbolic(NotHyperbolicReason::HigherRank(d)) => {
                write!(f, "not_hyperbolic(acting rank {d})")
            }
            Hyperbolicity::NotHyperbolic(NotHyperbolicReason::OppositeWeights(a, b)) => write!(
                f,
                "not_hyperbolic(opposite weights {} and {})",
                super::dehn::fmt_vec(a),
                super::dehn::fmt_vec(b)
            ),
        }
    }
}

pub fn hyperbolicity(g: &GradedLieAlgebra) -> Result<Hyperbolicity> {
    if let Some(label) = zero_principal_weight(g)? {
        return Err(Error::NotStandardSolvable { label });
    }
    if g.dim() == 0 {
        return Ok(Hyperbolicity::NotHyperbolic(NotHyperbolicReason::Elementary));
    }
    if g.acting_rank() != 1 {
        return Ok(Hyperbolicity::NotHyperbolic(NotHyperbolicReason::HigherRank(g.acting_rank())));
    }
    let diagram = WeightDiagram::from_algebra(g)?;
    if !tameness_report(&diagram).tame {
        let ws = diagram.distinct_principal_weights();
        let neg = ws.iter().find(|w| w[0].is_negative()).expect("non-tame in rank 1");
        let pos = ws.iter().find(|w| w[0].is_positive()).expect("non-tame in rank 1");
        return Ok(Hyperbolicity::NotHyperbolic(NotHyperbolicReason::OppositeWeights(
            neg.clone(),
            pos.clone(),
        )));
    }
    let arch = diagram.has_kind(FieldKind::Archimedean);
    let nonarch = diagram.has_kind(FieldKind::NonArchimedean);
    Ok(Hyperbolicity::Hyperbolic(match (arch, nonarch) {
        (true, false) => HyperbolicKind::Connected,
        (false, true) => HyperbolicKind::TotallyDiscontinuous,
        _ => HyperbolicKind::Mixed,
    }))
}

/// `acting_rank + dim u - dim E` for a group over the reals, `E` the
/// exponential radical.
pub fn cone_dimension(g: &GradedLieAlgebra) -> Result<usize> {
    if g.basis().iter().any(|e| !e.field.is_archimedean()) {
        return Err(Error::NonArchimedeanUnsupported);
    }
    if let Some(label) = zero_principal_weight(g)? {
        return Err(Error::NotStandardSolvable { label });
    }
    let e = exponential_radical(g)?;
    Ok(g.acting_rank() + g.dim() - e.dim())
}
