//! Named fixtures with their known invariants, and a random generator of
//! valid graded algebras.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

use crate::classify::{
    cone_dimension, dehn_classify, gdv_cone_type, gdv_npc, hyperbolicity, p0, CompactionData, DehnClass, Hyperbolicity,
};
use crate::error::{Error, Result};
use crate::exactla::{int, Rational};
use crate::homology::homology_dim;
use crate::lie::{is_prime, BasisElement, FieldKind, FieldTag, GradedLieAlgebra};
use crate::tameness::tameness_report;
use crate::weights::WeightDiagram;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KnownValue {
    Bool(bool),
    Class(DehnClass),
    Nat(usize),
    Rational(Rational),
    Text(String),
}

impl fmt::Display for KnownValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KnownValue::Bool(b) => write!(f, "{b}"),
            KnownValue::Class(c) => write!(f, "{c}"),
            KnownValue::Nat(n) => write!(f, "{n}"),
            KnownValue::Rational(r) => write!(f, "{r}"),
            KnownValue::Text(s) => f.write_str(s),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Known {
    pub value: KnownValue,
    pub citation: String,
}

/// Keys understood by [`verify`]. Keys starting with `literature_` are
/// carried as metadata and never recomputed.
pub mod keys {
    pub const COMPACTLY_PRESENTED: &str = "compactly_presented";
    pub const DEHN_EXACT: &str = "dehn_exact";
    pub const DEHN_UPPER: &str = "dehn_upper";
    pub const DEHN_LOWER: &str = "dehn_lower";
    pub const DEHN_RULE: &str = "dehn_rule";
    pub const TAME: &str = "tame";
    pub const STRONGLY_2TAME: &str = "strongly_2tame";
    pub const TWO_TAME: &str = "two_tame";
    pub const H2_ZERO: &str = "h2_zero";
    pub const CONE_DIMENSION: &str = "cone_dimension";
    pub const HYPERBOLIC: &str = "hyperbolic";
    pub const P0: &str = "p0";
    pub const CONE_TYPE: &str = "cone_type";
    pub const NPC: &str = "npc";
    pub const LITERATURE_DEHN: &str = "literature_dehn";
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyModel {
    pub name: String,
    pub algebra: GradedLieAlgebra,
    pub known: BTreeMap<String, Known>,
    /// Spanning set of `V` for the diagonal families.
    pub subspace: Option<Vec<Vec<Rational>>>,
}

impl FamilyModel {
    fn new(name: impl Into<String>, algebra: GradedLieAlgebra) -> Self {
        debug_assert!(algebra.validate().is_empty());
        Self {
            name: name.into(),
            algebra,
            known: BTreeMap::new(),
            subspace: None,
        }
    }

    fn with(mut self, key: &str, value: KnownValue, citation: &str) -> Self {
        self.known.insert(
            key.to_string(),
            Known {
                value,
                citation: citation.to_string(),
            },
        );
        self
    }

    pub fn diagram(&self) -> Result<WeightDiagram> {
        WeightDiagram::from_algebra(&self.algebra)
    }
}

fn weights(x: &[i64]) -> Vec<Rational> {
    x.iter().map(|&v| int(v)).collect()
}

fn kind_word(field: &FieldTag) -> &'static str {
    match field.kind() {
        FieldKind::Archimedean => "arch",
        FieldKind::NonArchimedean => "nonarch",
    }
}

const SOL_TAMENESS: &str = "SOL has one contracted and one expanded line";
const HYPERBOLIC_RANK_ONE: &str = "rank-one groups contracted by the acting element are hyperbolic";

/// Two lines over one field, weights 1 and -1.
pub fn sol(field: FieldTag) -> FamilyModel {
    let basis = vec![
        BasisElement::new("x", weights(&[1]), field.clone()),
        BasisElement::new("y", weights(&[-1]), field.clone()),
    ];
    let g = GradedLieAlgebra::abelian(1, basis).expect("valid");
    let m = FamilyModel::new(format!("sol-{}", kind_word(&field)), g)
        .with(keys::TAME, KnownValue::Bool(false), SOL_TAMENESS)
        .with(keys::STRONGLY_2TAME, KnownValue::Bool(false), SOL_TAMENESS)
        .with(keys::TWO_TAME, KnownValue::Bool(false), SOL_TAMENESS)
        .with(keys::H2_ZERO, KnownValue::Nat(1), "x^y is the only weight-zero 2-chain and u is abelian");
    if field.is_archimedean() {
        m.with(keys::COMPACTLY_PRESENTED, KnownValue::Bool(true), "SOL is a connected Lie group")
            .with(
                keys::DEHN_EXACT,
                KnownValue::Class(DehnClass::Exponential),
                "SOL is compactly presented with exponential Dehn function",
            )
            .with(keys::CONE_DIMENSION, KnownValue::Nat(1), "the asymptotic cone of SOL is one-dimensional")
    } else {
        m.with(
            keys::COMPACTLY_PRESENTED,
            KnownValue::Bool(false),
            "SOL over a nonarchimedean field is not compactly presented",
        )
        .with(keys::DEHN_EXACT, KnownValue::Class(DehnClass::Infinite), "no compact presentation")
    }
}

fn abels_label(d: usize, i: usize, j: usize) -> String {
    if d < 10 {
        format!("e{i}{j}")
    } else {
        format!("e{i}_{j}")
    }
}

/// Strictly upper triangular `d x d` matrices acted on by diagonal matrices
/// with corner entries fixed to 1.
pub fn abels(d: usize, field: FieldTag) -> Result<FamilyModel> {
    if d < 3 {
        return Err(Error::InvalidParameter(format!("Abels groups need d >= 3, got {d}")));
    }
    let pairs: Vec<(usize, usize)> = (1..=d).flat_map(|i| (i + 1..=d).map(move |j| (i, j))).collect();
    let index: BTreeMap<(usize, usize), usize> = pairs.iter().enumerate().map(|(k, &p)| (p, k)).collect();
    // Coordinates t_2, ..., t_(d-1).
    let coord = |i: usize| (2..d).contains(&i).then(|| i - 2);
    let basis = pairs
        .iter()
        .map(|&(i, j)| {
            let mut w = vec![Rational::zero(); d - 2];
            if let Some(c) = coord(i) {
                w[c] += Rational::one();
            }
            if let Some(c) = coord(j) {
                w[c] -= Rational::one();
            }
            BasisElement::new(abels_label(d, i, j), w, field.clone())
        })
        .collect();
    let mut brackets = Vec::new();
    for &(i, j) in &pairs {
        for k in j + 1..=d {
            brackets.push((index[&(i, j)], index[&(j, k)], vec![(index[&(i, k)], Rational::one())]));
        }
    }
    let g = GradedLieAlgebra::new(d - 2, basis, brackets)?;
    let mut m = FamilyModel::new(format!("abels{d}-{}", kind_word(&field)), g)
        .with(
            keys::TAME,
            KnownValue::Bool(false),
            "Abels groups are not tame: the weights of e12, e23, ..., e(d-1)d sum to zero",
        )
        .with(
            keys::STRONGLY_2TAME,
            KnownValue::Bool(false),
            "Abels groups are not strongly 2-tame: e1d has weight zero",
        )
        .with(
            keys::TWO_TAME,
            KnownValue::Bool(d >= 4),
            "principal weights of Abels groups are opposite only when d = 3",
        );
    if d >= 4 {
        m = m.with(
            keys::LITERATURE_DEHN,
            KnownValue::Class(DehnClass::Quadratic),
            "Abels groups with d >= 4 have quadratic Dehn function",
        );
    }
    if d == 4 {
        m = m
            .with(keys::H2_ZERO, KnownValue::Nat(0), "e12^e24 - e13^e34 bounds d3(e12^e23^e34)")
            .with(keys::DEHN_UPPER, KnownValue::Class(DehnClass::Cubic), "2-tame with vanishing weight-zero H2");
    }
    if field.is_archimedean() {
        m = m
            .with(keys::COMPACTLY_PRESENTED, KnownValue::Bool(true), "connected Lie groups are compactly presented")
            .with(
                keys::CONE_DIMENSION,
                KnownValue::Nat(d - 2),
                "the exponential radical of an Abels group is all of u",
            );
    } else {
        m = m.with(
            keys::COMPACTLY_PRESENTED,
            KnownValue::Bool(d >= 4),
            "nonarchimedean Abels groups are compactly presented exactly when d >= 4",
        );
    }
    Ok(m)
}

/// The group studied by Hall, which is the Abels group with `d = 3`.
pub fn hall_a3(field: FieldTag) -> Result<FamilyModel> {
    let mut m = abels(3, field.clone())?;
    m.name = format!("hall_a3-{}", kind_word(&field));
    if !field.is_archimedean() {
        m = m.with(keys::DEHN_EXACT, KnownValue::Class(DehnClass::Infinite), "no compact presentation");
    }
    Ok(m)
}

/// Real lines contracted at the given positive rates.
pub fn heintze(rates: &[Rational]) -> Result<FamilyModel> {
    if rates.is_empty() || rates.iter().any(|r| !r.is_positive()) {
        return Err(Error::InvalidParameter("Heintze weights must be positive and nonempty".into()));
    }
    let basis = rates
        .iter()
        .enumerate()
        .map(|(i, r)| BasisElement::new(format!("x{}", i + 1), vec![r.clone()], FieldTag::archimedean()))
        .collect();
    let g = GradedLieAlgebra::abelian(1, basis)?;
    let min = rates.iter().min().expect("nonempty");
    let p0_value: Rational = rates.iter().sum::<Rational>() / min;
    let names: Vec<String> = rates.iter().map(|r| r.to_string()).collect();
    Ok(FamilyModel::new(format!("heintze-{}", names.join("-")), g)
        .with(keys::HYPERBOLIC, KnownValue::Text("connected".into()), HYPERBOLIC_RANK_ONE)
        .with(keys::DEHN_EXACT, KnownValue::Class(DehnClass::Linear), "hyperbolic groups have linear Dehn function")
        .with(keys::COMPACTLY_PRESENTED, KnownValue::Bool(true), "hyperbolic groups are compactly presented")
        .with(keys::CONE_DIMENSION, KnownValue::Nat(1), "asymptotic cones of hyperbolic groups are real trees")
        .with(
            keys::P0,
            KnownValue::Rational(p0_value),
            "critical exponent equals the total contraction rate over the slowest rate",
        ))
}

/// Three lines over `F_p((t))` graded by the valuations of `t` and `t - 1`
/// at the three places of `F_p(t)` where one of them is not a unit.
pub fn baumslag_host(p: u64) -> Result<FamilyModel> {
    if !is_prime(p) {
        return Err(Error::InvalidParameter(format!("{p} is not prime")));
    }
    let field = FieldTag::nonarchimedean(p, Some(p))?;
    let basis = vec![
        BasisElement::new("a", weights(&[1, 0]), field.clone()),
        BasisElement::new("b", weights(&[0, 1]), field.clone()),
        BasisElement::new("c", weights(&[-1, -1]), field),
    ];
    let g = GradedLieAlgebra::abelian(2, basis)?;
    let derived = "weights reconstructed from the places of F_p(t); checked against strong 2-tameness";
    Ok(FamilyModel::new(format!("baumslag_host-{p}"), g)
        .with(keys::TAME, KnownValue::Bool(false), derived)
        .with(keys::STRONGLY_2TAME, KnownValue::Bool(true), derived)
        .with(keys::TWO_TAME, KnownValue::Bool(true), derived)
        .with(keys::COMPACTLY_PRESENTED, KnownValue::Bool(true), "strongly 2-tame groups are compactly presented")
        .with(
            keys::DEHN_EXACT,
            KnownValue::Class(DehnClass::Quadratic),
            "the host of the Baumslag group has quadratic Dehn function",
        )
        .with(keys::DEHN_RULE, KnownValue::Text("R7".into()), "strongly 2-tame and abelian in rank 2"))
}

/// Diagonal matrices with log-entries in `V^perp`, acting on `R^d`.
pub fn gdv(d: usize, v: &[Vec<Rational>]) -> Result<FamilyModel> {
    if d == 0 {
        return Err(Error::InvalidParameter("d must be positive".into()));
    }
    let perp = crate::classify::check_star(d, v)?;
    let basis = (0..d)
        .map(|i| {
            let w = perp.iter().map(|b| b[i].clone()).collect();
            BasisElement::new(format!("e{}", i + 1), w, FieldTag::archimedean())
        })
        .collect();
    let g = GradedLieAlgebra::abelian(perp.len(), basis)?;
    let cone = gdv_cone_type(d, v)?;
    let npc = gdv_npc(d, v)?;
    let vs: Vec<String> = v
        .iter()
        .map(|x| x.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(","))
        .collect();
    let mut m = FamilyModel::new(format!("gdv{d}[{}]", vs.join(";")), g)
        .with(
            keys::CONE_DIMENSION,
            KnownValue::Nat(perp.len()),
            "the cone of G^d_V has topological dimension dim V^perp",
        )
        .with(keys::CONE_TYPE, KnownValue::Text(cone.to_string()), "sign pattern of V and V^perp")
        .with(
            keys::NPC,
            KnownValue::Bool(npc),
            "nonpositive curvature iff V^perp holds a strictly positive vector",
        );
    m.subspace = Some(v.to_vec());
    Ok(m)
}

/// Parameters for [`build`]; unused fields are ignored.
#[derive(Debug, Clone, Default)]
pub struct FamilyParams {
    pub d: Option<usize>,
    pub field: Option<FieldTag>,
    pub v: Vec<Vec<Rational>>,
    pub weights: Vec<Rational>,
    pub p: Option<u64>,
}

pub const FAMILY_NAMES: [&str; 7] = ["sol", "abels", "hall_a3", "heintze", "baumslag_host", "gdv", "random"];

pub fn build(name: &str, params: &FamilyParams) -> Result<FamilyModel> {
    let field = || params.field.clone().unwrap_or_else(FieldTag::archimedean);
    let need_d = || {
        params
            .d
            .ok_or_else(|| Error::InvalidParameter(format!("family {name} needs d")))
    };
    match name {
        "sol" => Ok(sol(field())),
        "abels" => abels(need_d()?, field()),
        "hall_a3" => hall_a3(field()),
        "heintze" => {
            if params.weights.is_empty() {
                heintze(&[int(1), int(1)])
            } else {
                heintze(&params.weights)
            }
        }
        "baumslag_host" => baumslag_host(params.p.unwrap_or(2)),
        "gdv" => gdv(need_d()?, &params.v),
        "random" => {
            let seed = params.p.unwrap_or(0);
            Ok(FamilyModel::new(format!("random-{seed}"), random_algebra(seed, params.d.unwrap_or(6))))
        }
        other => Err(Error::UnknownFamily(other.to_string())),
    }
}

/// The fixtures whose known entries the pipeline must reproduce.
pub fn fixtures() -> Vec<FamilyModel> {
    let q2 = FieldTag::nonarchimedean(0, Some(2)).expect("valid");
    let r = FieldTag::archimedean;
    let v = |rows: &[&[i64]]| rows.iter().map(|x| weights(x)).collect::<Vec<_>>();
    vec![
        sol(r()),
        sol(q2.clone()),
        abels(3, r()).expect("valid"),
        abels(3, q2.clone()).expect("valid"),
        abels(4, r()).expect("valid"),
        abels(4, q2.clone()).expect("valid"),
        abels(5, q2.clone()).expect("valid"),
        hall_a3(q2).expect("valid"),
        baumslag_host(2).expect("valid"),
        baumslag_host(3).expect("valid"),
        heintze(&[int(1), int(1)]).expect("valid"),
        heintze(&[int(1), int(1), int(2)]).expect("valid"),
        gdv(2, &v(&[&[1, -1]])).expect("valid"),
        gdv(2, &v(&[&[1, 1]])).expect("valid"),
        gdv(2, &[]).expect("valid"),
        gdv(3, &v(&[&[1, 1, 1]])).expect("valid"),
        gdv(3, &v(&[&[1, 1, -1]])).expect("valid"),
        gdv(3, &[]).expect("valid"),
    ]
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub key: String,
    pub expected: String,
    pub found: String,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: expected {}, found {}", self.key, self.expected, self.found)
    }
}

/// Recomputes every known entry of `model` and lists the disagreements.
pub fn verify(model: &FamilyModel) -> Result<Vec<Mismatch>> {
    let g = &model.algebra;
    let diagram = model.diagram()?;
    let tame = tameness_report(&diagram);
    let zero = vec![Rational::zero(); g.acting_rank()];
    let mut out = Vec::new();
    for (key, known) in &model.known {
        let found = match key.as_str() {
            keys::TAME => KnownValue::Bool(tame.tame),
            keys::STRONGLY_2TAME => KnownValue::Bool(tame.strongly_2tame),
            keys::TWO_TAME => KnownValue::Bool(tame.two_tame),
            keys::H2_ZERO => KnownValue::Nat(homology_dim(g, 2, &zero)),
            keys::COMPACTLY_PRESENTED => KnownValue::Bool(dehn_classify(g)?.compactly_presented),
            keys::DEHN_EXACT => match dehn_classify(g)?.exact {
                Some(c) => KnownValue::Class(c),
                None => KnownValue::Text("none".into()),
            },
            keys::DEHN_UPPER => KnownValue::Class(dehn_classify(g)?.upper),
            keys::DEHN_LOWER => KnownValue::Class(dehn_classify(g)?.lower),
            keys::DEHN_RULE => KnownValue::Text(dehn_classify(g)?.upper_rule.to_string()),
            keys::CONE_DIMENSION => KnownValue::Nat(cone_dimension(g)?),
            keys::HYPERBOLIC => KnownValue::Text(match hyperbolicity(g)? {
                Hyperbolicity::Hyperbolic(k) => k.as_str().to_string(),
                other => other.to_string(),
            }),
            keys::P0 => {
                let value = p0(&CompactionData::from_algebra(g, 1)?)?;
                if value.is_rational() {
                    KnownValue::Rational(value.rational_part)
                } else {
                    KnownValue::Text(value.to_string())
                }
            }
            keys::CONE_TYPE | keys::NPC => {
                let v = model
                    .subspace
                    .as_ref()
                    .ok_or_else(|| Error::InvalidParameter(format!("{key} needs a subspace")))?;
                let d = g.dim();
                if key == keys::CONE_TYPE {
                    KnownValue::Text(gdv_cone_type(d, v)?.to_string())
                } else {
                    KnownValue::Bool(gdv_npc(d, v)?)
                }
            }
            k if k.starts_with("literature_") => continue,
            other => KnownValue::Text(format!("unknown invariant {other}")),
        };
        if found != known.value {
            out.push(Mismatch {
                key: key.clone(),
                expected: known.value.to_string(),
                found: found.to_string(),
            });
        }
    }
    Ok(out)
}

/// A valid graded algebra of dimension at most `max_dim`, determined by
/// `seed`.
///
/// Built from a bracket-closed set of strictly upper triangular matrix units
/// with weights `t_i - t_j`, then rescaled, shuffled and possibly summed with
/// a second such algebra over another field.
pub fn random_algebra(seed: u64, max_dim: usize) -> GradedLieAlgebra {
    let mut rng = StdRng::seed_from_u64(seed);
    let rank = rng.random_range(1..=3usize);
    let first = random_pattern(&mut rng, rank, max_dim, FieldTag::archimedean());
    let g = if first.dim() + 1 < max_dim && rng.random_bool(0.4) {
        let p = [2u64, 3, 5][rng.random_range(0..3usize)];
        let field = if rng.random_bool(0.5) {
            FieldTag::nonarchimedean(0, Some(p)).expect("valid")
        } else {
            FieldTag::nonarchimedean(p, Some(p)).expect("valid")
        };
        let second = random_pattern(&mut rng, rank, max_dim - first.dim(), field);
        direct_sum(&first, &second)
    } else {
        first
    };
    let mut order: Vec<usize> = (0..g.dim()).collect();
    order.shuffle(&mut rng);
    let g = g.permuted(&order).expect("permutation");
    debug_assert!(g.validate().is_empty());
    g
}

fn random_pattern(rng: &mut StdRng, rank: usize, max_dim: usize, field: FieldTag) -> GradedLieAlgebra {
    let n = rng.random_range(2..=5usize);
    let t: Vec<Vec<Rational>> = (0..n)
        .map(|_| (0..rank).map(|_| int(rng.random_range(-2..=2))).collect())
        .collect();
    let all: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let mut set: Vec<(usize, usize)> = Vec::new();
    for &p in &all {
        if rng.random_bool(0.5) {
            let mut trial = set.clone();
            trial.push(p);
            close(&mut trial);
            if trial.len() <= max_dim {
                set = trial;
            }
        }
    }
    set.sort();
    let index: BTreeMap<(usize, usize), usize> = set.iter().enumerate().map(|(k, &p)| (p, k)).collect();
    let tag = match field.kind() {
        FieldKind::Archimedean => "r".to_string(),
        FieldKind::NonArchimedean => format!("q{}", field.residue_cardinality().unwrap_or(0)),
    };
    let basis = set
        .iter()
        .map(|&(i, j)| {
            let w = t[i].iter().zip(&t[j]).map(|(a, b)| a - b).collect();
            BasisElement::new(format!("{tag}{}{}", i + 1, j + 1), w, field.clone())
        })
        .collect();
    // Scaling e_ij by s_ij turns [e_ij, e_jk] = e_ik into s_ij s_jk / s_ik.
    let scale: Vec<Rational> = set.iter().map(|_| int(rng.random_range(1..=3))).collect();
    let mut brackets = Vec::new();
    for (&(i, j), &a) in &index {
        for (&(j2, k), &b) in &index {
            if j2 == j {
                if let Some(&c) = index.get(&(i, k)) {
                    brackets.push((a, b, vec![(c, &scale[a] * &scale[b] / &scale[c])]));
                }
            }
        }
    }
    GradedLieAlgebra::new(rank, basis, brackets).expect("pattern algebra")
}

/// Adds `(i, k)` whenever `(i, j)` and `(j, k)` are present.
fn close(set: &mut Vec<(usize, usize)>) {
    loop {
        let mut added = false;
        let snapshot = set.clone();
        for &(i, j) in &snapshot {
            for &(j2, k) in &snapshot {
                if j == j2 && !set.contains(&(i, k)) {
                    set.push((i, k));
                    added = true;
                }
            }
        }
        if !added {
            return;
        }
    }
}

fn direct_sum(a: &GradedLieAlgebra, b: &GradedLieAlgebra) -> GradedLieAlgebra {
    let n = a.dim();
    let basis = a.basis().iter().chain(b.basis()).cloned().collect();
    let shift = |g: &GradedLieAlgebra, off: usize| {
        g.structure_constants()
            .iter()
            .map(move |(&(i, j), v)| {
                let terms = v
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| (k + off, c.clone()))
                    .collect();
                (i + off, j + off, terms)
            })
            .collect::<Vec<_>>()
    };
    let brackets = shift(a, 0).into_iter().chain(shift(b, n));
    GradedLieAlgebra::new(a.acting_rank(), basis, brackets).expect("direct sum")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weights::is_standard;

    #[test]
    fn abels_examples() {
        let a4 = abels(4, FieldTag::archimedean()).unwrap();
        assert_eq!(a4.algebra.dim(), 6);
        let e14 = a4.algebra.index_of("e14").unwrap();
        assert_eq!(a4.algebra.weight(e14), &weights(&[0, 0]));
        let a3 = abels(3, FieldTag::nonarchimedean(0, Some(3)).unwrap()).unwrap();
        assert_eq!(a3.diagram().unwrap().distinct_principal_weights(), vec![weights(&[-1]), weights(&[1])]);
        assert!(matches!(abels(2, FieldTag::archimedean()), Err(Error::InvalidParameter(_))));
        for d in 3..=6 {
            let g = abels(d, FieldTag::archimedean()).unwrap().algebra;
            assert_eq!(g.dim(), d * (d - 1) / 2);
            assert_eq!(g.lower_central_series().unwrap().len(), d - 1 + 1);
        }
    }

    #[test]
    fn gdv_examples() {
        let m = gdv(2, &[]).unwrap();
        assert_eq!(m.diagram().unwrap().distinct_weights(), vec![weights(&[0, 1]), weights(&[1, 0])]);
        let m = gdv(2, &[weights(&[1, 1])]).unwrap();
        assert_eq!(m.diagram().unwrap().distinct_weights(), vec![weights(&[-1]), weights(&[1])]);
        let m = gdv(3, &[weights(&[1, 1, 1])]).unwrap();
        assert_eq!(m.algebra.acting_rank(), 2);
        assert_eq!(m.diagram().unwrap().weight_span_rank(), 2);
        assert!(matches!(gdv(2, &[weights(&[0, 1])]), Err(Error::StarConditionViolated { axis: 1 })));
    }

    #[test]
    fn build_dispatch() {
        let p = FamilyParams::default();
        assert_eq!(build("sol", &p).unwrap().algebra.dim(), 2);
        assert!(matches!(build("octonion", &p), Err(Error::UnknownFamily(_))));
        assert!(matches!(build("abels", &p), Err(Error::InvalidParameter(_))));
        assert!(matches!(baumslag_host(4), Err(Error::InvalidParameter(_))));
        let host = baumslag_host(5).unwrap();
        assert!(host.algebra.basis().iter().all(|e| e.field.residue_cardinality() == Some(5)));
    }

    #[test]
    fn fixtures_are_valid_standard_and_verified() {
        for m in fixtures() {
            assert!(m.algebra.validate().is_empty(), "{}", m.name);
            assert!(is_standard(&m.algebra).unwrap(), "{}", m.name);
            assert!(!m.known.is_empty());
            let bad = verify(&m).unwrap();
            assert!(bad.is_empty(), "{}: {:?}", m.name, bad);
        }
    }

    #[test]
    fn principal_semigroup_contains_all_weights() {
        // Every weight is a sum of at most dim-many principal weights.
        for m in fixtures() {
            let d = m.diagram().unwrap();
            let principal = d.distinct_principal_weights();
            let mut reach: Vec<Vec<Rational>> = principal.clone();
            for _ in 0..m.algebra.dim() {
                let mut next = reach.clone();
                for a in &reach {
                    for b in &principal {
                        let s: Vec<Rational> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                        if !next.contains(&s) {
                            next.push(s);
                        }
                    }
                }
                reach = next;
            }
            for w in d.distinct_weights() {
                assert!(reach.contains(&w), "{}: {:?}", m.name, w);
            }
        }
    }

    #[test]
    fn principal_hull_matches_full_hull() {
        for m in fixtures() {
            let d = m.diagram().unwrap();
            let p = crate::exactla::zero_in_hull(&d.distinct_principal_weights()).unwrap();
            let a = crate::exactla::zero_in_hull(&d.distinct_weights()).unwrap();
            assert_eq!(p.is_inside(), a.is_inside(), "{}", m.name);
        }
    }

    #[test]
    fn radical_quotient_has_zero_radical() {
        for m in fixtures() {
            let e = crate::weights::exponential_radical(&m.algebra).unwrap();
            let q = m.algebra.quotient(&e).unwrap();
            assert_eq!(crate::weights::exponential_radical(&q).unwrap().dim(), 0);
        }
    }

    #[test]
    fn random_algebras_are_valid() {
        for seed in 0..200 {
            let g = random_algebra(seed, 8);
            assert!(g.validate().is_empty(), "seed {seed}");
            assert!(g.dim() <= 8);
        }
        assert_eq!(random_algebra(7, 8), random_algebra(7, 8));
    }
}
