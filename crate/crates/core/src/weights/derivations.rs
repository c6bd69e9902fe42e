//! Grading an algebra from a commuting family of rational derivations.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactla::{Rational, RationalMatrix, RowEchelon};
use crate::lie::{BasisElement, GradedLieAlgebra};
use crate::weights::WeightDiagram;

/// One square matrix per generator of the acting torus, acting on column
/// vectors in the basis of the algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivationAction {
    pub matrices: Vec<RationalMatrix>,
}

impl DerivationAction {
    pub fn new(matrices: Vec<RationalMatrix>) -> Self {
        Self { matrices }
    }

    pub fn rank(&self) -> usize {
        self.matrices.len()
    }
}

/// Coefficients of `det(xI - m)`, lowest degree first, via Faddeev-LeVerrier.
pub fn characteristic_polynomial(m: &RationalMatrix) -> Vec<Rational> {
    let n = m.rows();
    debug_assert_eq!(n, m.cols());
    let mut coeffs = vec![Rational::zero(); n + 1];
    coeffs[n] = Rational::one();
    let mut acc = RationalMatrix::zeros(n, n);
    for k in 1..=n {
        // acc = m * acc_prev + c_{n-k+1} I
        let mut next = m.mul(&acc).expect("square");
        for i in 0..n {
            next[(i, i)] += &coeffs[n - k + 1];
        }
        let prod = m.mul(&next).expect("square");
        let trace: Rational = (0..n).map(|i| prod[(i, i)].clone()).sum();
        coeffs[n - k] = -trace / Rational::from_integer(BigInt::from(k));
        acc = next;
    }
    coeffs
}

/// Rational roots with multiplicity of a nonzero polynomial, or `None` if it
/// does not split into linear factors over the rationals.
pub fn rational_roots(poly: &[Rational]) -> Option<Vec<(Rational, usize)>> {
    let mut p: Vec<Rational> = poly.to_vec();
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    let lead = p.last()?.clone();
    let mut p: Vec<Rational> = p.iter().map(|c| c / &lead).collect();
    let mut roots = Vec::new();
    let zeros = p.iter().take_while(|c| c.is_zero()).count();
    if zeros > 0 {
        roots.push((Rational::zero(), zeros));
        p.drain(..zeros);
    }
    // Monic with rational coefficients; y = l x makes it monic integral.
    let n = p.len() - 1;
    let l = p.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let mut q: Vec<BigInt> = (0..=n)
        .map(|i| (&p[i] * Rational::from_integer(num_traits::pow(l.clone(), n - i))).to_integer())
        .collect();
    let mut candidates = divisors(&q[0].abs()).into_iter();
    while q.len() > 1 {
        let d = candidates.next()?;
        for cand in [d.clone(), -d] {
            let mut mult = 0;
            while q.len() > 1 {
                match deflate(&q, &cand) {
                    Some(r) => {
                        q = r;
                        mult += 1;
                    }
                    None => break,
                }
            }
            if mult > 0 {
                roots.push((Rational::new(cand, l.clone()), mult));
            }
        }
    }
    roots.sort();
    Some(roots)
}

/// Divides by `y - r` when `r` is a root.
fn deflate(q: &[BigInt], r: &BigInt) -> Option<Vec<BigInt>> {
    let n = q.len() - 1;
    let mut out = vec![BigInt::zero(); n];
    let mut carry = BigInt::zero();
    for i in (0..=n).rev() {
        let v = &q[i] + &carry * r;
        if i == 0 {
            return v.is_zero().then_some(out);
        }
        out[i - 1] = v.clone();
        carry = v;
    }
    unreachable!()
}

/// Positive divisors in increasing order.
fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut factors: Vec<(BigInt, u32)> = Vec::new();
    let mut rest = n.clone();
    let mut p = BigInt::from(2);
    while &p * &p <= rest {
        let mut e = 0;
        while (&rest % &p).is_zero() {
            rest /= &p;
            e += 1;
        }
        if e > 0 {
            factors.push((p.clone(), e));
        }
        p += 1;
    }
    if rest > BigInt::one() {
        factors.push((rest, 1));
    }
    let mut divs = vec![BigInt::one()];
    for (p, e) in factors {
        let mut next = Vec::new();
        for d in &divs {
            let mut pk = BigInt::one();
            for _ in 0..=e {
                next.push(d * &pk);
                pk *= &p;
            }
        }
        divs = next;
    }
    divs.sort();
    divs
}

/// Builds the graded algebra whose basis splits `u` into simultaneous
/// generalized eigenspaces of the action.
///
/// `u` must carry an empty grading (`acting_rank == 0`); its labels and field
/// tags are reused. Basis vectors that are already coordinate vectors keep
/// their label and all others get a primed label.
pub fn weights_from_derivations(
    u: &GradedLieAlgebra,
    act: &DerivationAction,
) -> Result<(GradedLieAlgebra, WeightDiagram)> {
    if u.acting_rank() != 0 {
        return Err(Error::Malformed("derivation mode expects an ungraded algebra".into()));
    }
    let n = u.dim();
    for m in &act.matrices {
        if m.rows() != n || m.cols() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: if m.rows() != n { m.rows() } else { m.cols() },
            });
        }
    }
    u.ensure_valid()?;
    for (k, m) in act.matrices.iter().enumerate() {
        check_derivation(u, k, m)?;
    }
    for (a, ma) in act.matrices.iter().enumerate() {
        for (b, mb) in act.matrices.iter().enumerate().skip(a + 1) {
            if ma.mul(mb)? != mb.mul(ma)? {
                return Err(Error::NonCommutingAction { first: a, second: b });
            }
        }
    }

    // Each block is (weight so far, basis vectors of an invariant subspace).
    let tags: BTreeSet<_> = u.basis().iter().map(|e| e.field.clone()).collect();
    let mut blocks: Vec<(Vec<Rational>, Vec<Vec<Rational>>)> = tags
        .iter()
        .map(|t| {
            let vecs = (0..n).filter(|&i| u.field(i) == t).map(|i| u.unit(i)).collect();
            (Vec::new(), vecs)
        })
        .collect();
    for (k, m) in act.matrices.iter().enumerate() {
        let mut next = Vec::new();
        for (weight, vecs) in blocks {
            let restricted = restrict(m, &vecs).ok_or(Error::ActionMixesFields { derivation: k })?;
            let roots = rational_roots(&characteristic_polynomial(&restricted))
                .ok_or(Error::FieldNotSplit { derivation: k })?;
            for (lambda, mult) in roots {
                let mut shifted = restricted.clone();
                for i in 0..vecs.len() {
                    shifted[(i, i)] -= &lambda;
                }
                let mut power = RationalMatrix::identity(vecs.len());
                for _ in 0..mult {
                    power = power.mul(&shifted)?;
                }
                let sub: Vec<Vec<Rational>> = power
                    .kernel_basis()
                    .iter()
                    .map(|c| combine(&vecs, c, n))
                    .collect();
                debug_assert_eq!(sub.len(), mult);
                let mut w = weight.clone();
                w.push(lambda);
                next.push((w, sub));
            }
        }
        blocks = next;
    }

    let mut rows: Vec<(usize, usize, Vec<Rational>, Vec<Rational>)> = Vec::new();
    for (b, (weight, vecs)) in blocks.iter().enumerate() {
        let ech = RowEchelon::from_vectors(n, vecs.clone());
        for (row, &p) in ech.rows.iter().zip(&ech.pivots) {
            rows.push((p, b, row.clone(), weight.clone()));
        }
    }
    rows.sort_by_key(|x| (x.0, x.1));

    let mut used: BTreeSet<String> = BTreeSet::new();
    let mut labelled = Vec::with_capacity(n);
    // Unit vectors claim their labels first so primes never shadow them.
    let is_unit: Vec<bool> = rows
        .iter()
        .map(|(p, _, row, _)| row.iter().enumerate().all(|(i, c)| if i == *p { c.is_one() } else { c.is_zero() }))
        .collect();
    for ((p, ..), &unit) in rows.iter().zip(&is_unit) {
        if unit {
            used.insert(u.label(*p).to_string());
        }
    }
    for ((p, _, row, _), &unit) in rows.iter().zip(&is_unit) {
        let label = if unit {
            u.label(*p).to_string()
        } else {
            let mut l = format!("{}'", u.label(*p));
            while used.contains(&l) {
                l.push('\'');
            }
            used.insert(l.clone());
            l
        };
        labelled.push((label, row.clone()));
    }

    let rebased = u.change_basis(labelled)?;
    let basis: Vec<BasisElement> = rebased
        .basis()
        .iter()
        .zip(&rows)
        .map(|(e, (.., w))| BasisElement::new(e.label.clone(), w.clone(), e.field.clone()))
        .collect();
    let brackets = rebased.structure_constants().iter().map(|(&(i, j), v)| {
        let terms = v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (k, c.clone())).collect();
        (i, j, terms)
    });
    let graded = GradedLieAlgebra::new(act.rank(), basis, brackets)?;
    let report = graded.validate();
    if !report.is_empty() {
        return Err(Error::InvalidAlgebra(report));
    }
    let diagram = WeightDiagram::from_algebra(&graded)?;
    Ok((graded, diagram))
}

fn check_derivation(u: &GradedLieAlgebra, k: usize, m: &RationalMatrix) -> Result<()> {
    let n = u.dim();
    let images: Vec<Vec<Rational>> = (0..n).map(|i| m.column(i)).collect();
    for a in 0..n {
        for b in a + 1..n {
            let lhs = m.mul_vec(&u.bracket_basis(a, b))?;
            let left = u.bracket(&images[a], &u.unit(b));
            let right = u.bracket(&u.unit(a), &images[b]);
            let rhs: Vec<Rational> = left.iter().zip(&right).map(|(x, y)| x + y).collect();
            if lhs != rhs {
                return Err(Error::NotADerivation {
                    derivation: k,
                    a: u.label(a).to_string(),
                    b: u.label(b).to_string(),
                });
            }
        }
    }
    Ok(())
}

/// Matrix of `m` on the span of `vecs` in that basis, or `None` if the span
/// is not invariant.
fn restrict(m: &RationalMatrix, vecs: &[Vec<Rational>]) -> Option<RationalMatrix> {
    let n = m.rows();
    let k = vecs.len();
    let mut cols: Vec<Vec<Rational>> = vecs.to_vec();
    for v in vecs {
        cols.push(m.mul_vec(v).expect("square"));
    }
    let ech = RationalMatrix::from_columns(n, &cols).expect("shape").row_echelon();
    if ech.pivots.iter().any(|&p| p >= k) {
        return None;
    }
    debug_assert_eq!(ech.pivots, (0..k).collect::<Vec<_>>());
    let mut out = RationalMatrix::zeros(k, k);
    for i in 0..k {
        for j in 0..k {
            out[(i, j)] = ech.rows[i][k + j].clone();
        }
    }
    Some(out)
}

fn combine(vecs: &[Vec<Rational>], coeffs: &[Rational], n: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); n];
    for (v, c) in vecs.iter().zip(coeffs) {
        if c.is_zero() {
            continue;
        }
        for (o, x) in out.iter_mut().zip(v) {
            *o += c * x;
        }
    }
    out
}
