//! Weight diagrams, the exponential radical and the standard-solvable test.

mod derivations;

use std::collections::BTreeMap;

use num_traits::Zero;

pub use derivations::{characteristic_polynomial, rational_roots, weights_from_derivations, DerivationAction};

use crate::error::Result;
use crate::exactla::Rational;
use crate::lie::{FieldKind, FieldTag, GradedLieAlgebra, Subspace};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DiagramEntry {
    pub weight: Vec<Rational>,
    pub field: FieldTag,
    pub multiplicity: usize,
    /// Whether these copies survive in `u/[u,u]`.
    pub principal: bool,
}

/// Weights of an algebra with multiplicities, split by field and by whether
/// they are principal.
///
/// A weight occurring both in `[u,u]` and outside it appears as two entries,
/// one principal and one not.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightDiagram {
    acting_rank: usize,
    entries: Vec<DiagramEntry>,
}

impl WeightDiagram {
    pub fn from_algebra(g: &GradedLieAlgebra) -> Result<Self> {
        let derived = g.derived_subalgebra()?;
        let quotient = g.quotient(&derived)?;
        let mut total: BTreeMap<(Vec<Rational>, FieldTag), usize> = BTreeMap::new();
        for e in g.basis() {
            *total.entry((e.weight.clone(), e.field.clone())).or_default() += 1;
        }
        let mut principal: BTreeMap<(Vec<Rational>, FieldTag), usize> = BTreeMap::new();
        for e in quotient.basis() {
            *principal.entry((e.weight.clone(), e.field.clone())).or_default() += 1;
        }
        let mut entries = Vec::new();
        for ((weight, field), count) in total {
            let p = principal.get(&(weight.clone(), field.clone())).copied().unwrap_or(0);
            if p > 0 {
                entries.push(DiagramEntry {
                    weight: weight.clone(),
                    field: field.clone(),
                    multiplicity: p,
                    principal: true,
                });
            }
            if count > p {
                entries.push(DiagramEntry {
                    weight,
                    field,
                    multiplicity: count - p,
                    principal: false,
                });
            }
        }
        Ok(Self {
            acting_rank: g.acting_rank(),
            entries,
        })
    }

    pub fn acting_rank(&self) -> usize {
        self.acting_rank
    }

    pub fn entries(&self) -> &[DiagramEntry] {
        &self.entries
    }

    /// Sum of multiplicities, equal to the dimension of the algebra.
    pub fn total_multiplicity(&self) -> usize {
        self.entries.iter().map(|e| e.multiplicity).sum()
    }

    pub fn principal(&self) -> impl Iterator<Item = &DiagramEntry> {
        self.entries.iter().filter(|e| e.principal)
    }

    /// Distinct weight vectors, ignoring fields and multiplicities.
    pub fn distinct_weights(&self) -> Vec<Vec<Rational>> {
        dedup(self.entries.iter())
    }

    pub fn distinct_principal_weights(&self) -> Vec<Vec<Rational>> {
        dedup(self.principal())
    }

    /// Distinct principal weights carried by fields of `kind`.
    pub fn distinct_principal_weights_of(&self, kind: FieldKind) -> Vec<Vec<Rational>> {
        dedup(self.principal().filter(|e| e.field.kind() == kind))
    }

    pub fn has_kind(&self, kind: FieldKind) -> bool {
        self.entries.iter().any(|e| e.field.kind() == kind)
    }

    /// Keeps only the principal entries.
    pub fn principal_part(&self) -> WeightDiagram {
        WeightDiagram {
            acting_rank: self.acting_rank,
            entries: self.principal().cloned().collect(),
        }
    }

    /// Dimension of the span of all weights inside `Hom(A, R) ≅ Q^d`.
    pub fn weight_span_rank(&self) -> usize {
        crate::exactla::RowEchelon::from_vectors(self.acting_rank, self.distinct_weights()).rank()
    }
}

fn dedup<'a>(entries: impl Iterator<Item = &'a DiagramEntry>) -> Vec<Vec<Rational>> {
    let mut out: Vec<Vec<Rational>> = entries.map(|e| e.weight.clone()).collect();
    out.sort();
    out.dedup();
    out
}

/// Weights of `u/[u,u]`, all marked principal.
pub fn principal_weights(g: &GradedLieAlgebra) -> Result<WeightDiagram> {
    Ok(WeightDiagram::from_algebra(g)?.principal_part())
}

/// The ideal generated by all nonzero-weight components.
pub fn exponential_radical(g: &GradedLieAlgebra) -> Result<Subspace> {
    let seeds = (0..g.dim()).filter(|&i| g.weight(i).iter().any(|c| !c.is_zero()));
    g.ideal_generated(&Subspace::spanned_by(g, seeds))
}

/// A basis element of `u/[u,u]` with zero weight, if any.
pub fn zero_principal_weight(g: &GradedLieAlgebra) -> Result<Option<String>> {
    let derived = g.derived_subalgebra()?;
    let quotient = g.quotient(&derived)?;
    Ok(quotient
        .basis()
        .iter()
        .find(|e| e.weight.iter().all(Zero::is_zero))
        .map(|e| e.label.clone()))
}

/// No principal weight is zero.
pub fn is_standard(g: &GradedLieAlgebra) -> Result<bool> {
    Ok(zero_principal_weight(g)?.is_none())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::int;
    use crate::families;
    use crate::lie::BasisElement;

    fn w(x: &[i64]) -> Vec<Rational> {
        x.iter().map(|&v| int(v)).collect()
    }

    fn heisenberg(weights: [i64; 3]) -> GradedLieAlgebra {
        let basis = ["x", "y", "z"]
            .iter()
            .zip(weights)
            .map(|(l, wt)| BasisElement::new(*l, w(&[wt]), FieldTag::archimedean()))
            .collect();
        GradedLieAlgebra::new(1, basis, [(0, 1, vec![(2, int(1))])]).unwrap()
    }

    #[test]
    fn principal_weight_examples() {
        let sol = families::sol(FieldTag::archimedean()).algebra;
        let p = principal_weights(&sol).unwrap();
        assert_eq!(p.distinct_weights(), vec![w(&[-1]), w(&[1])]);

        let abels = families::abels(4, FieldTag::archimedean()).unwrap().algebra;
        let d = WeightDiagram::from_algebra(&abels).unwrap();
        assert_eq!(d.distinct_principal_weights(), vec![w(&[-1, 0]), w(&[0, 1]), w(&[1, -1])]);
        assert!(d.principal().all(|e| e.multiplicity == 1));
        assert_eq!(d.total_multiplicity(), 6);

        let h = WeightDiagram::from_algebra(&heisenberg([1, 1, 2])).unwrap();
        let principal: Vec<_> = h.principal().collect();
        assert_eq!(principal.len(), 1);
        assert_eq!(principal[0].weight, w(&[1]));
        assert_eq!(principal[0].multiplicity, 2);
    }

    #[test]
    fn weight_split_between_principal_and_derived() {
        // Weight 2 occurs on z = [x, y] and on an extra central u.
        let basis = vec![
            BasisElement::new("x", w(&[1]), FieldTag::archimedean()),
            BasisElement::new("y", w(&[1]), FieldTag::archimedean()),
            BasisElement::new("z", w(&[2]), FieldTag::archimedean()),
            BasisElement::new("u", w(&[2]), FieldTag::archimedean()),
        ];
        let g = GradedLieAlgebra::new(1, basis, [(0, 1, vec![(2, int(1))])]).unwrap();
        let d = WeightDiagram::from_algebra(&g).unwrap();
        let twos: Vec<_> = d.entries().iter().filter(|e| e.weight == w(&[2])).collect();
        assert_eq!(twos.len(), 2);
        assert!(twos.iter().all(|e| e.multiplicity == 1));
        assert_eq!(twos.iter().filter(|e| e.principal).count(), 1);
    }

    #[test]
    fn exponential_radical_examples() {
        let flat = heisenberg([0, 0, 0]);
        assert_eq!(exponential_radical(&flat).unwrap().dim(), 0);
        let sol = families::sol(FieldTag::archimedean()).algebra;
        assert_eq!(exponential_radical(&sol).unwrap().dim(), 2);
        let abels = families::abels(4, FieldTag::archimedean()).unwrap().algebra;
        assert_eq!(exponential_radical(&abels).unwrap().dim(), 6);
    }

    #[test]
    fn radical_of_quotient_is_zero() {
        // Heisenberg with x, z of weight 1 and y of weight 0: E = span{x, z}.
        let g = heisenberg([1, 0, 1]);
        let e = exponential_radical(&g).unwrap();
        assert_eq!(e.dim(), 2);
        let q = g.quotient(&e).unwrap();
        assert_eq!(exponential_radical(&q).unwrap().dim(), 0);
    }

    #[test]
    fn standard_examples() {
        let abels = families::abels(4, FieldTag::archimedean()).unwrap().algebra;
        assert!(is_standard(&abels).unwrap());
        assert!(!is_standard(&heisenberg([0, 0, 0])).unwrap());
        assert!(is_standard(&families::sol(FieldTag::archimedean()).algebra).unwrap());
        assert_eq!(zero_principal_weight(&heisenberg([1, 0, 1])).unwrap(), Some("y".into()));
    }
}
