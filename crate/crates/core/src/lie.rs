//! Weight-graded nilpotent Lie algebras over the rationals.
//!
//! Structure constants are stored once per ordered basis pair `i < j`;
//! `[e_j, e_i] = -[e_i, e_j]` is implied and `[e_i, e_i] = 0`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactla::{Rational, RationalMatrix, RowEchelon};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FieldKind {
    Archimedean,
    NonArchimedean,
}

impl fmt::Display for FieldKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FieldKind::Archimedean => "archimedean",
            FieldKind::NonArchimedean => "nonarchimedean",
        })
    }
}

/// The local field a basis element lives over.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FieldTag {
    kind: FieldKind,
    characteristic: u64,
    residue_cardinality: Option<u64>,
}

impl FieldTag {
    pub fn archimedean() -> Self {
        Self {
            kind: FieldKind::Archimedean,
            characteristic: 0,
            residue_cardinality: None,
        }
    }

    pub fn nonarchimedean(characteristic: u64, residue_cardinality: Option<u64>) -> Result<Self> {
        Self::new(FieldKind::NonArchimedean, characteristic, residue_cardinality)
    }

    pub fn new(kind: FieldKind, characteristic: u64, residue_cardinality: Option<u64>) -> Result<Self> {
        if kind == FieldKind::Archimedean && (characteristic != 0 || residue_cardinality.is_some()) {
            return Err(Error::InvalidFieldTag(
                "archimedean fields have characteristic 0 and no residue field".into(),
            ));
        }
        if characteristic != 0 && !is_prime(characteristic) {
            return Err(Error::InvalidFieldTag(format!(
                "characteristic {characteristic} is neither 0 nor prime"
            )));
        }
        if let Some(q) = residue_cardinality {
            let Some((p, _)) = prime_power(q) else {
                return Err(Error::InvalidFieldTag(format!(
                    "residue cardinality {q} is not a prime power"
                )));
            };
            if characteristic != 0 && p != characteristic {
                return Err(Error::InvalidFieldTag(format!(
                    "residue cardinality {q} is not a power of the characteristic {characteristic}"
                )));
            }
        }
        Ok(Self {
            kind,
            characteristic,
            residue_cardinality,
        })
    }

    pub fn kind(&self) -> FieldKind {
        self.kind
    }

    pub fn characteristic(&self) -> u64 {
        self.characteristic
    }

    pub fn residue_cardinality(&self) -> Option<u64> {
        self.residue_cardinality
    }

    pub fn is_archimedean(&self) -> bool {
        self.kind == FieldKind::Archimedean
    }
}

impl fmt::Display for FieldTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.kind, self.residue_cardinality) {
            (FieldKind::Archimedean, _) => f.write_str("arch"),
            (FieldKind::NonArchimedean, q) => {
                write!(f, "nonarch(char {}", self.characteristic)?;
                if let Some(q) = q {
                    write!(f, ", q={q}")?;
                }
                f.write_str(")")
            }
        }
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// `Some((p, k))` when `q = p^k` with `p` prime and `k ≥ 1`.
pub(crate) fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2u64;
    while p.saturating_mul(p) <= q && !q.is_multiple_of(p) {
        p += 1;
    }
    if !q.is_multiple_of(p) {
        p = q;
    }
    let mut rest = q;
    let mut k = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        k += 1;
    }
    (rest == 1).then_some((p, k))
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BasisElement {
    pub label: String,
    pub weight: Vec<Rational>,
    pub field: FieldTag,
}

impl BasisElement {
    pub fn new(label: impl Into<String>, weight: Vec<Rational>, field: FieldTag) -> Self {
        Self {
            label: label.into(),
            weight,
            field,
        }
    }
}

/// A single failed invariant, naming the offending basis elements.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Violation {
    DuplicateLabel { label: String, indices: Vec<usize> },
    Grading { a: String, b: String, target: String },
    FieldSeparation { a: String, b: String, target: Option<String> },
    Jacobi { a: String, b: String, c: String },
    NotNilpotent { stable_dim: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::DuplicateLabel { label, indices } => {
                write!(f, "label {label:?} used by basis elements {indices:?}")
            }
            Violation::Grading { a, b, target } => {
                write!(f, "grading: [{a}, {b}] has a component on {target} of the wrong weight")
            }
            Violation::FieldSeparation { a, b, target: None } => {
                write!(f, "field separation: [{a}, {b}] is nonzero across fields")
            }
            Violation::FieldSeparation { a, b, target: Some(t) } => {
                write!(f, "field separation: [{a}, {b}] has a component on {t} over another field")
            }
            Violation::Jacobi { a, b, c } => write!(f, "Jacobi identity fails on ({a}, {b}, {c})"),
            Violation::NotNilpotent { stable_dim } => {
                write!(f, "not nilpotent: lower central series stabilizes at dimension {stable_dim}")
            }
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return f.write_str("no violations");
        }
        let parts: Vec<String> = self.violations.iter().map(|v| v.to_string()).collect();
        f.write_str(&parts.join("; "))
    }
}

/// Finite-dimensional Lie algebra with a weight vector and field tag on each
/// basis element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedLieAlgebra {
    acting_rank: usize,
    basis: Vec<BasisElement>,
    brackets: BTreeMap<(usize, usize), Vec<Rational>>,
}

impl GradedLieAlgebra {
    /// Builds an algebra from basis-index brackets `(a, b, Σ cₖ eₖ)`.
    ///
    /// Only structural well-formedness is checked here (weight lengths, index
    /// ranges, no self-brackets, no pair given twice); the algebraic invariants
    /// are reported by [`GradedLieAlgebra::validate`].
    pub fn new(
        acting_rank: usize,
        basis: Vec<BasisElement>,
        brackets: impl IntoIterator<Item = (usize, usize, Vec<(usize, Rational)>)>,
    ) -> Result<Self> {
        let n = basis.len();
        for e in &basis {
            if e.weight.len() != acting_rank {
                return Err(Error::DimensionMismatch {
                    expected: acting_rank,
                    found: e.weight.len(),
                });
            }
        }
        let mut table = BTreeMap::new();
        for (a, b, value) in brackets {
            if a >= n || b >= n || value.iter().any(|(k, _)| *k >= n) {
                return Err(Error::Malformed(format!("bracket index out of range in [{a}, {b}]")));
            }
            if a == b {
                return Err(Error::Malformed(format!(
                    "self-bracket [{0}, {0}] is always zero and may not be specified",
                    basis[a].label
                )));
            }
            let (key, sign) = if a < b { ((a, b), Rational::one()) } else { ((b, a), -Rational::one()) };
            if table.contains_key(&key) {
                return Err(Error::Malformed(format!(
                    "bracket [{}, {}] specified twice",
                    basis[key.0].label, basis[key.1].label
                )));
            }
            let mut dense = vec![Rational::zero(); n];
            for (k, c) in value {
                dense[k] += c * &sign;
            }
            table.insert(key, dense);
        }
        table.retain(|_, v| v.iter().any(|c| !c.is_zero()));
        Ok(Self {
            acting_rank,
            basis,
            brackets: table,
        })
    }

    pub fn abelian(acting_rank: usize, basis: Vec<BasisElement>) -> Result<Self> {
        Self::new(acting_rank, basis, std::iter::empty())
    }

    /// The zero algebra acted on by a rank-`acting_rank` group.
    pub fn zero(acting_rank: usize) -> Self {
        Self {
            acting_rank,
            basis: Vec::new(),
            brackets: BTreeMap::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn acting_rank(&self) -> usize {
        self.acting_rank
    }

    pub fn basis(&self) -> &[BasisElement] {
        &self.basis
    }

    pub fn label(&self, i: usize) -> &str {
        &self.basis[i].label
    }

    pub fn weight(&self, i: usize) -> &[Rational] {
        &self.basis[i].weight
    }

    pub fn field(&self, i: usize) -> &FieldTag {
        &self.basis[i].field
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.basis.iter().position(|e| e.label == label)
    }

    pub fn is_abelian(&self) -> bool {
        self.brackets.is_empty()
    }

    /// Nonzero structure constants, keyed by `(i, j)` with `i < j`.
    pub fn structure_constants(&self) -> &BTreeMap<(usize, usize), Vec<Rational>> {
        &self.brackets
    }

    pub fn unit(&self, i: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.dim()];
        v[i] = Rational::one();
        v
    }

    /// `[e_i, e_j]` as a dense coordinate vector.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<Rational> {
        match i.cmp(&j) {
            std::cmp::Ordering::Less => self
                .brackets
                .get(&(i, j))
                .cloned()
                .unwrap_or_else(|| vec![Rational::zero(); self.dim()]),
            std::cmp::Ordering::Greater => self
                .brackets
                .get(&(j, i))
                .map(|v| v.iter().map(|c| -c.clone()).collect())
                .unwrap_or_else(|| vec![Rational::zero(); self.dim()]),
            std::cmp::Ordering::Equal => vec![Rational::zero(); self.dim()],
        }
    }

    /// Bilinear extension of the bracket to coordinate vectors.
    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim()];
        for (&(i, j), value) in &self.brackets {
            let c = &x[i] * &y[j] - &x[j] * &y[i];
            if c.is_zero() {
                continue;
            }
            for (o, v) in out.iter_mut().zip(value) {
                if !v.is_zero() {
                    *o += &c * v;
                }
            }
        }
        out
    }

    /// Weight of a coordinate vector if it is supported on a single weight.
    pub fn homogeneous_weight(&self, v: &[Rational]) -> Option<Option<&[Rational]>> {
        let mut weight: Option<&[Rational]> = None;
        for (i, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            match weight {
                None => weight = Some(self.weight(i)),
                Some(w) if w == self.weight(i) => {}
                Some(_) => return None,
            }
        }
        Some(weight)
    }

    /// Checks every algebraic invariant and lists the failures.
    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();

        let mut by_label: BTreeMap<&str, Vec<usize>> = BTreeMap::new();
        for (i, e) in self.basis.iter().enumerate() {
            by_label.entry(e.label.as_str()).or_default().push(i);
        }
        for (label, indices) in by_label {
            if indices.len() > 1 {
                violations.push(Violation::DuplicateLabel {
                    label: label.to_string(),
                    indices,
                });
            }
        }

        for (&(i, j), value) in &self.brackets {
            let target_weight: Vec<Rational> = self
                .weight(i)
                .iter()
                .zip(self.weight(j))
                .map(|(a, b)| a + b)
                .collect();
            let same_field = self.field(i) == self.field(j);
            if !same_field {
                violations.push(Violation::FieldSeparation {
                    a: self.label(i).to_string(),
                    b: self.label(j).to_string(),
                    target: None,
                });
            }
            for (k, c) in value.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                if self.weight(k) != target_weight.as_slice() {
                    violations.push(Violation::Grading {
                        a: self.label(i).to_string(),
                        b: self.label(j).to_string(),
                        target: self.label(k).to_string(),
                    });
                }
                if same_field && self.field(k) != self.field(i) {
                    violations.push(Violation::FieldSeparation {
                        a: self.label(i).to_string(),
                        b: self.label(j).to_string(),
                        target: Some(self.label(k).to_string()),
                    });
                }
            }
        }

        let n = self.dim();
        for i in 0..n {
            for j in i + 1..n {
                let ij = self.bracket_basis(i, j);
                for k in j + 1..n {
                    let t1 = self.bracket(&ij, &self.unit(k));
                    let t2 = self.bracket(&self.bracket_basis(j, k), &self.unit(i));
                    let t3 = self.bracket(&self.bracket_basis(k, i), &self.unit(j));
                    let ok = t1
                        .iter()
                        .zip(&t2)
                        .zip(&t3)
                        .all(|((a, b), c)| (a + b + c).is_zero());
                    if !ok {
                        violations.push(Violation::Jacobi {
                            a: self.label(i).to_string(),
                            b: self.label(j).to_string(),
                            c: self.label(k).to_string(),
                        });
                    }
                }
            }
        }

        if let Err(stable_dim) = self.series_echelons() {
            violations.push(Violation::NotNilpotent { stable_dim });
        }

        ValidationReport { violations }
    }

    /// `Ok(())` when [`validate`](Self::validate) finds nothing.
    pub fn ensure_valid(&self) -> Result<()> {
        let report = self.validate();
        if report.is_empty() {
            Ok(())
        } else if let [Violation::NotNilpotent { stable_dim }] = report.violations.as_slice() {
            Err(Error::NotNilpotent {
                stable_dim: *stable_dim,
            })
        } else {
            Err(Error::InvalidAlgebra(report))
        }
    }

    /// Lower central series as echelon forms; `Err(dim)` if it stalls above 0.
    fn series_echelons(&self) -> std::result::Result<Vec<RowEchelon>, usize> {
        let n = self.dim();
        let mut series = vec![RowEchelon::from_vectors(n, (0..n).map(|i| self.unit(i)).collect())];
        loop {
            let current = series.last().expect("series is nonempty");
            if current.rank() == 0 {
                return Ok(series);
            }
            let mut images = Vec::new();
            for i in 0..n {
                let e = self.unit(i);
                for v in &current.rows {
                    let w = self.bracket(&e, v);
                    if w.iter().any(|c| !c.is_zero()) {
                        images.push(w);
                    }
                }
            }
            let next = RowEchelon::from_vectors(n, images);
            if next.rank() == current.rank() {
                return Err(next.rank());
            }
            series.push(next);
        }
    }

    /// `g ⊇ [g,g] ⊇ [g,[g,g]] ⊇ … ⊇ 0`; the nilpotency class is `len − 1`.
    pub fn lower_central_series(&self) -> Result<Vec<Subspace>> {
        let series = self
            .series_echelons()
            .map_err(|stable_dim| Error::NotNilpotent { stable_dim })?;
        series
            .into_iter()
            .map(|e| Subspace::graded(self, e.rows))
            .collect()
    }

    /// `[g, g]`.
    pub fn derived_subalgebra(&self) -> Result<Subspace> {
        Subspace::graded(self, self.brackets.values().cloned().collect())
    }

    /// Smallest ideal containing `s`, by saturation under brackets with the
    /// basis.
    pub fn ideal_generated(&self, s: &Subspace) -> Result<Subspace> {
        self.check_ambient(s)?;
        let n = self.dim();
        let mut echelon = RowEchelon::from_vectors(n, s.basis().to_vec());
        let mut queue: Vec<Vec<Rational>> = echelon.rows.clone();
        while let Some(v) = queue.pop() {
            for i in 0..n {
                let w = self.bracket(&self.unit(i), &v);
                if echelon.contains(&w) {
                    continue;
                }
                let mut rows = echelon.rows.clone();
                rows.push(w.clone());
                echelon = RowEchelon::from_vectors(n, rows);
                queue.push(w);
            }
        }
        Subspace::graded(self, echelon.rows)
    }

    pub fn is_ideal(&self, s: &Subspace) -> bool {
        self.ideal_escape(s).is_none()
    }

    fn ideal_escape(&self, s: &Subspace) -> Option<usize> {
        (0..self.dim()).find(|&i| {
            s.basis()
                .iter()
                .any(|v| !s.contains(&self.bracket(&self.unit(i), v)))
        })
    }

    fn check_ambient(&self, s: &Subspace) -> Result<()> {
        if s.ambient_dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: s.ambient_dim(),
            });
        }
        Ok(())
    }

    /// `g / i` on the complement spanned by the non-pivot basis elements of
    /// `i`; labels, weights and fields are inherited.
    pub fn quotient(&self, ideal: &Subspace) -> Result<GradedLieAlgebra> {
        self.check_ambient(ideal)?;
        if let Some(i) = self.ideal_escape(ideal) {
            return Err(Error::NotAnIdeal {
                generator: self.label(i).to_string(),
            });
        }
        let mut is_pivot = vec![false; self.dim()];
        for &p in ideal.pivots() {
            is_pivot[p] = true;
        }
        let keep: Vec<usize> = (0..self.dim()).filter(|&i| !is_pivot[i]).collect();
        let echelon = ideal.echelon();
        Ok(self.restrict(&keep, |v| echelon.reduce(v)))
    }

    /// The direct factor spanned by basis elements over fields of `kind`.
    pub fn field_factor(&self, kind: FieldKind) -> GradedLieAlgebra {
        let keep: Vec<usize> = (0..self.dim())
            .filter(|&i| self.field(i).kind() == kind)
            .collect();
        self.restrict(&keep, |v| v.to_vec())
    }

    /// Algebra on the basis elements `keep`, with each bracket first passed
    /// through `project` and then read off on the kept coordinates.
    fn restrict(&self, keep: &[usize], project: impl Fn(&[Rational]) -> Vec<Rational>) -> GradedLieAlgebra {
        let basis: Vec<BasisElement> = keep.iter().map(|&i| self.basis[i].clone()).collect();
        let mut brackets = BTreeMap::new();
        for (a, &i) in keep.iter().enumerate() {
            for (b, &j) in keep.iter().enumerate().skip(a + 1) {
                let full = project(&self.bracket_basis(i, j));
                let value: Vec<Rational> = keep.iter().map(|&k| full[k].clone()).collect();
                if value.iter().any(|c| !c.is_zero()) {
                    brackets.insert((a, b), value);
                }
            }
        }
        GradedLieAlgebra {
            acting_rank: self.acting_rank,
            basis,
            brackets,
        }
    }

    /// Reorders the basis: element `k` of the result is element `order[k]`
    /// of `self`.
    pub fn permuted(&self, order: &[usize]) -> Result<GradedLieAlgebra> {
        let n = self.dim();
        let mut seen = vec![false; n];
        if order.len() != n || order.iter().any(|&i| i >= n || std::mem::replace(&mut seen[i], true)) {
            return Err(Error::Malformed("not a permutation of the basis".into()));
        }
        let mut position = vec![0; n];
        for (k, &i) in order.iter().enumerate() {
            position[i] = k;
        }
        let basis = order.iter().map(|&i| self.basis[i].clone()).collect();
        let mut brackets = BTreeMap::new();
        for (&(i, j), value) in &self.brackets {
            let (a, b) = (position[i], position[j]);
            let mut permuted = vec![Rational::zero(); n];
            for (k, c) in value.iter().enumerate() {
                permuted[position[k]] = c.clone();
            }
            if a < b {
                brackets.insert((a, b), permuted);
            } else {
                brackets.insert((b, a), permuted.into_iter().map(|c| -c).collect());
            }
        }
        Ok(GradedLieAlgebra {
            acting_rank: self.acting_rank,
            basis,
            brackets,
        })
    }

    /// Re-expresses the algebra in a new basis given by coordinate columns.
    ///
    /// Each new basis vector must be weight-homogeneous and supported on a
    /// single field; it inherits that weight and field.
    pub fn change_basis(&self, new_basis: Vec<(String, Vec<Rational>)>) -> Result<GradedLieAlgebra> {
        let n = self.dim();
        if new_basis.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: new_basis.len(),
            });
        }
        let mut elements = Vec::with_capacity(n);
        for (label, v) in &new_basis {
            if v.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: v.len(),
                });
            }
            let weight = match self.homogeneous_weight(v) {
                Some(Some(w)) => w.to_vec(),
                Some(None) => return Err(Error::Malformed(format!("basis vector {label} is zero"))),
                None => return Err(Error::MixedWeightSubspace),
            };
            let mut fields = v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, _)| self.field(i));
            let field = fields.next().expect("nonzero vector").clone();
            if fields.any(|f| *f != field) {
                return Err(Error::Malformed(format!("basis vector {label} mixes fields")));
            }
            elements.push(BasisElement::new(label.clone(), weight, field));
        }
        let columns: Vec<Vec<Rational>> = new_basis.into_iter().map(|(_, v)| v).collect();
        let p = RationalMatrix::from_columns(n, &columns)?;
        let inverse = p
            .inverse()
            .ok_or_else(|| Error::Malformed("new basis vectors are linearly dependent".into()))?;
        let mut brackets = BTreeMap::new();
        for a in 0..n {
            for b in a + 1..n {
                let value = inverse.mul_vec(&self.bracket(&columns[a], &columns[b]))?;
                if value.iter().any(|c| !c.is_zero()) {
                    brackets.insert((a, b), value);
                }
            }
        }
        Ok(GradedLieAlgebra {
            acting_rank: self.acting_rank,
            basis: elements,
            brackets,
        })
    }
}

/// A graded subspace of an algebra, stored in reduced row echelon form.
///
/// The echelon rows of a graded subspace are automatically weight-homogeneous,
/// which is how gradedness is checked.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    echelon: RowEchelon,
    ambient_dim: usize,
}

impl Subspace {
    /// Span of `vectors`, rejected if it is not graded with respect to `g`.
    pub fn graded(g: &GradedLieAlgebra, vectors: Vec<Vec<Rational>>) -> Result<Self> {
        let n = g.dim();
        if let Some(v) = vectors.iter().find(|v| v.len() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: v.len(),
            });
        }
        let echelon = RowEchelon::from_vectors(n, vectors);
        if echelon.rows.iter().any(|r| g.homogeneous_weight(r).is_none()) {
            return Err(Error::MixedWeightSubspace);
        }
        Ok(Self {
            echelon,
            ambient_dim: n,
        })
    }

    pub fn zero(g: &GradedLieAlgebra) -> Self {
        Self {
            echelon: RowEchelon::from_vectors(g.dim(), Vec::new()),
            ambient_dim: g.dim(),
        }
    }

    pub fn full(g: &GradedLieAlgebra) -> Self {
        Self::spanned_by(g, 0..g.dim())
    }

    /// Span of a set of basis elements (always graded).
    pub fn spanned_by(g: &GradedLieAlgebra, indices: impl IntoIterator<Item = usize>) -> Self {
        let vectors = indices.into_iter().map(|i| g.unit(i)).collect();
        Self {
            echelon: RowEchelon::from_vectors(g.dim(), vectors),
            ambient_dim: g.dim(),
        }
    }

    pub fn dim(&self) -> usize {
        self.echelon.rank()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.echelon.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.echelon.pivots
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.echelon.contains(v)
    }

    pub(crate) fn echelon(&self) -> &RowEchelon {
        &self.echelon
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::int;

    fn w(x: &[i64]) -> Vec<Rational> {
        x.iter().map(|&v| int(v)).collect()
    }

    fn arch(label: &str, weight: &[i64]) -> BasisElement {
        BasisElement::new(label, w(weight), FieldTag::archimedean())
    }

    pub(crate) fn heisenberg(z_weight: i64) -> GradedLieAlgebra {
        GradedLieAlgebra::new(
            1,
            vec![arch("x", &[1]), arch("y", &[1]), arch("z", &[z_weight])],
            [(0, 1, vec![(2, int(1))])],
        )
        .unwrap()
    }

    /// Upper unitriangular 4×4 algebra with `[e_ij, e_jk] = e_ik`.
    fn abels4() -> GradedLieAlgebra {
        let labels = ["e12", "e13", "e14", "e23", "e24", "e34"];
        let weights: [&[i64]; 6] = [&[-1, 0], &[0, -1], &[0, 0], &[1, -1], &[1, 0], &[0, 1]];
        let basis = labels.iter().zip(weights).map(|(l, wt)| arch(l, wt)).collect();
        GradedLieAlgebra::new(
            2,
            basis,
            [
                (0, 3, vec![(1, int(1))]), // [e12, e23] = e13
                (0, 4, vec![(2, int(1))]), // [e12, e24] = e14
                (1, 5, vec![(2, int(1))]), // [e13, e34] = e14
                (3, 5, vec![(4, int(1))]), // [e23, e34] = e24
            ],
        )
        .unwrap()
    }

    fn dims(series: &[Subspace]) -> Vec<usize> {
        series.iter().map(Subspace::dim).collect()
    }

    #[test]
    fn field_tag_invariants() {
        assert!(FieldTag::new(FieldKind::Archimedean, 2, None).is_err());
        assert!(FieldTag::new(FieldKind::Archimedean, 0, Some(3)).is_err());
        assert!(FieldTag::nonarchimedean(4, None).is_err());
        assert!(FieldTag::nonarchimedean(0, Some(6)).is_err());
        assert!(FieldTag::nonarchimedean(3, Some(8)).is_err());
        assert!(FieldTag::nonarchimedean(2, Some(8)).is_ok());
        assert!(FieldTag::nonarchimedean(0, Some(9)).is_ok());
        assert_eq!(prime_power(1), None);
        assert_eq!(prime_power(49), Some((7, 2)));
        assert_eq!(prime_power(97), Some((97, 1)));
    }

    #[test]
    fn validate_examples() {
        let abelian = GradedLieAlgebra::abelian(1, vec![arch("a", &[5]), arch("b", &[-2])]).unwrap();
        assert!(abelian.validate().is_empty());
        assert!(heisenberg(2).validate().is_empty());
        let report = heisenberg(3).validate();
        assert_eq!(
            report.violations,
            vec![Violation::Grading {
                a: "x".into(),
                b: "y".into(),
                target: "z".into()
            }]
        );
    }

    #[test]
    fn validate_flags_duplicates_fields_jacobi_and_nilpotency() {
        let dup = GradedLieAlgebra::abelian(1, vec![arch("a", &[1]), arch("a", &[2])]).unwrap();
        assert!(matches!(dup.validate().violations[0], Violation::DuplicateLabel { .. }));

        let nonarch = FieldTag::nonarchimedean(0, Some(2)).unwrap();
        let mixed = GradedLieAlgebra::new(
            1,
            vec![
                arch("x", &[1]),
                BasisElement::new("y", w(&[1]), nonarch.clone()),
                arch("z", &[2]),
            ],
            [(0, 1, vec![(2, int(1))])],
        )
        .unwrap();
        assert!(mixed
            .validate()
            .violations
            .iter()
            .any(|v| matches!(v, Violation::FieldSeparation { target: None, .. })));

        // [a,b]=b, [a,c]=c, [b,c]=a fails Jacobi (and is not nilpotent).
        let bad = GradedLieAlgebra::new(
            1,
            vec![arch("a", &[0]), arch("b", &[0]), arch("c", &[0])],
            [
                (0, 1, vec![(1, int(1))]),
                (0, 2, vec![(2, int(1))]),
                (1, 2, vec![(0, int(1))]),
            ],
        )
        .unwrap();
        let v = bad.validate().violations;
        assert!(v.iter().any(|v| matches!(v, Violation::Jacobi { .. })));
        assert!(v.iter().any(|v| matches!(v, Violation::NotNilpotent { .. })));

        // The 2-dimensional nonabelian algebra [a,b]=b satisfies Jacobi but
        // is solvable, not nilpotent.
        let affine = GradedLieAlgebra::new(1, vec![arch("a", &[0]), arch("b", &[0])], [(0, 1, vec![(1, int(1))])]).unwrap();
        assert_eq!(affine.ensure_valid(), Err(Error::NotNilpotent { stable_dim: 1 }));
        assert!(matches!(affine.lower_central_series(), Err(Error::NotNilpotent { .. })));
    }

    #[test]
    fn structural_errors() {
        assert!(GradedLieAlgebra::new(2, vec![arch("x", &[1])], []).is_err());
        assert!(GradedLieAlgebra::new(1, vec![arch("x", &[1])], [(0, 0, vec![])]).is_err());
        assert!(GradedLieAlgebra::new(1, vec![arch("x", &[1]), arch("y", &[1])], [(0, 5, vec![])]).is_err());
        let twice = GradedLieAlgebra::new(
            1,
            vec![arch("x", &[1]), arch("y", &[1]), arch("z", &[2])],
            [(0, 1, vec![(2, int(1))]), (1, 0, vec![(2, int(-1))])],
        );
        assert!(twice.is_err());
    }

    #[test]
    fn reversed_pair_is_negated() {
        let g = GradedLieAlgebra::new(
            1,
            vec![arch("x", &[1]), arch("y", &[1]), arch("z", &[2])],
            [(1, 0, vec![(2, int(1))])],
        )
        .unwrap();
        assert_eq!(g.bracket_basis(0, 1), w(&[0, 0, -1]));
        assert_eq!(g.bracket_basis(1, 0), w(&[0, 0, 1]));
    }

    #[test]
    fn lower_central_series_examples() {
        let abelian = GradedLieAlgebra::abelian(1, vec![arch("a", &[1]), arch("b", &[1]), arch("c", &[1])]).unwrap();
        assert_eq!(dims(&abelian.lower_central_series().unwrap()), vec![3, 0]);
        assert_eq!(dims(&heisenberg(2).lower_central_series().unwrap()), vec![3, 1, 0]);
        let abels = abels4();
        let lcs = abels.lower_central_series().unwrap();
        assert_eq!(dims(&lcs), vec![6, 3, 1, 0]);
        let derived = Subspace::spanned_by(&abels, [1, 2, 4]);
        assert_eq!(lcs[1], derived);
        assert_eq!(abels.derived_subalgebra().unwrap(), derived);
    }

    #[test]
    fn ideal_generated_examples() {
        let g = abels4();
        assert_eq!(g.ideal_generated(&Subspace::full(&g)).unwrap(), Subspace::full(&g));
        assert_eq!(g.ideal_generated(&Subspace::zero(&g)).unwrap().dim(), 0);
        let s = Subspace::spanned_by(&g, [0]);
        assert_eq!(g.ideal_generated(&s).unwrap(), Subspace::spanned_by(&g, [0, 1, 2]));
    }

    #[test]
    fn quotient_examples() {
        let g = abels4();
        assert_eq!(g.quotient(&Subspace::zero(&g)).unwrap(), g);

        let h = heisenberg(2);
        let center = Subspace::spanned_by(&h, [2]);
        let q = h.quotient(&center).unwrap();
        assert_eq!(q.dim(), 2);
        assert!(q.is_abelian());

        let q = g.quotient(&Subspace::spanned_by(&g, [2])).unwrap();
        assert_eq!(q.dim(), 5);
        let e12 = q.index_of("e12").unwrap();
        let e24 = q.index_of("e24").unwrap();
        assert!(q.bracket_basis(e12, e24).iter().all(Zero::is_zero));
        let e23 = q.index_of("e23").unwrap();
        let e13 = q.index_of("e13").unwrap();
        assert_eq!(q.bracket_basis(e12, e23), q.unit(e13));
        assert!(q.validate().is_empty());

        let not_ideal = Subspace::spanned_by(&g, [0]);
        assert_eq!(
            g.quotient(&not_ideal),
            Err(Error::NotAnIdeal { generator: "e23".into() })
        );
    }

    #[test]
    fn graded_subspace_construction() {
        let g = abels4();
        // e12 + e24 mixes weights (-1,0) and (1,0).
        let mut v = g.unit(0);
        v[4] = int(1);
        assert_eq!(Subspace::graded(&g, vec![v.clone()]), Err(Error::MixedWeightSubspace));
        // Together with e12 it spans a graded subspace.
        let s = Subspace::graded(&g, vec![v, g.unit(0)]).unwrap();
        assert_eq!(s, Subspace::spanned_by(&g, [0, 4]));
    }

    #[test]
    fn field_factors() {
        let nonarch = FieldTag::nonarchimedean(0, Some(3)).unwrap();
        let all_arch = abels4();
        assert_eq!(all_arch.field_factor(FieldKind::NonArchimedean).dim(), 0);
        let sol_p = GradedLieAlgebra::abelian(
            1,
            vec![
                BasisElement::new("a", w(&[1]), nonarch.clone()),
                BasisElement::new("b", w(&[-1]), nonarch.clone()),
            ],
        )
        .unwrap();
        assert_eq!(sol_p.field_factor(FieldKind::NonArchimedean), sol_p);
        let mixed = GradedLieAlgebra::abelian(
            1,
            vec![arch("a", &[1]), BasisElement::new("b", w(&[1]), nonarch)],
        )
        .unwrap();
        assert_eq!(mixed.field_factor(FieldKind::Archimedean).dim(), 1);
        assert_eq!(mixed.field_factor(FieldKind::NonArchimedean).dim(), 1);
    }

    #[test]
    fn permutation_and_basis_change_preserve_validity() {
        let g = abels4();
        let p = g.permuted(&[5, 3, 1, 0, 2, 4]).unwrap();
        assert!(p.validate().is_empty());
        assert_eq!(p.label(0), "e34");
        let i12 = p.index_of("e12").unwrap();
        let i23 = p.index_of("e23").unwrap();
        let i13 = p.index_of("e13").unwrap();
        assert_eq!(p.bracket_basis(i12, i23), p.unit(i13));
        assert!(g.permuted(&[0, 0, 1, 2, 3, 4]).is_err());

        let mut cols: Vec<(String, Vec<Rational>)> = (0..6).map(|i| (g.label(i).to_string(), g.unit(i))).collect();
        cols[2].1 = w(&[0, 0, 3, 0, 0, 0]);
        let scaled = g.change_basis(cols).unwrap();
        assert!(scaled.validate().is_empty());
        assert_eq!(scaled.bracket_basis(0, 4), vec![int(0), int(0), Rational::new(1.into(), 3.into()), int(0), int(0), int(0)]);
    }
}
