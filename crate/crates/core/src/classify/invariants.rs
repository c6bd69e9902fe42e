//! Exact symbolic quantities: the critical exponent and the invariants of
//! mixed-type focal groups.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exactla::{dot, Rational};
use crate::lie::{prime_power, FieldKind, GradedLieAlgebra};

/// `rational_part + sum(coeff * ln(base))` with prime bases in increasing
/// order and nonzero coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolicLogValue {
    pub rational_part: Rational,
    pub log_terms: Vec<(u64, Rational)>,
}

impl SymbolicLogValue {
    pub fn rational(r: Rational) -> Self {
        Self {
            rational_part: r,
            log_terms: Vec::new(),
        }
    }

    /// `coeff * ln(n)` for `n >= 1`, split over the prime factors of `n`.
    pub fn log(n: u64, coeff: Rational) -> Self {
        assert!(n >= 1, "logarithm of zero");
        let mut terms = BTreeMap::new();
        for (p, e) in factorize(n) {
            *terms.entry(p).or_insert_with(Rational::zero) += &coeff * Rational::from_integer(BigInt::from(e));
        }
        Self::from_parts(Rational::zero(), terms)
    }

    fn from_parts(rational_part: Rational, terms: BTreeMap<u64, Rational>) -> Self {
        Self {
            rational_part,
            log_terms: terms.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut terms: BTreeMap<u64, Rational> = self.log_terms.iter().cloned().collect();
        for (b, c) in &other.log_terms {
            *terms.entry(*b).or_insert_with(Rational::zero) += c;
        }
        Self::from_parts(&self.rational_part + &other.rational_part, terms)
    }

    pub fn scale(&self, k: &Rational) -> Self {
        let terms = self.log_terms.iter().map(|(b, c)| (*b, c * k)).collect();
        Self::from_parts(&self.rational_part * k, terms)
    }

    pub fn is_rational(&self) -> bool {
        self.log_terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.is_rational() && self.rational_part.is_zero()
    }

    /// Sufficient test for `self >= r`: rational part at least `r` and every
    /// log coefficient nonnegative.
    pub fn is_at_least(&self, r: &Rational) -> bool {
        self.rational_part >= *r && self.log_terms.iter().all(|(_, c)| !c.is_negative())
    }

    /// Decimal approximation for display.
    pub fn to_f64(&self) -> f64 {
        let mut x = self.rational_part.to_f64().unwrap_or(f64::NAN);
        for (b, c) in &self.log_terms {
            x += c.to_f64().unwrap_or(f64::NAN) * (*b as f64).ln();
        }
        x
    }
}

impl fmt::Display for SymbolicLogValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if !self.rational_part.is_zero() || self.log_terms.is_empty() {
            parts.push(self.rational_part.to_string());
        }
        for (b, c) in &self.log_terms {
            parts.push(if c.is_one() {
                format!("log({b})")
            } else {
                format!("{c}*log({b})")
            });
        }
        f.write_str(&parts.join(" + "))
    }
}

/// Quotient of two symbolic values, kept unevaluated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolicRatio {
    pub numerator: SymbolicLogValue,
    pub denominator: SymbolicLogValue,
}

impl SymbolicRatio {
    pub fn to_f64(&self) -> f64 {
        self.numerator.to_f64() / self.denominator.to_f64()
    }
}

impl fmt::Display for SymbolicRatio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.numerator, self.denominator)
    }
}

fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        let mut e = 0;
        while n.is_multiple_of(p) {
            n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Contraction data of a compacting automorphism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompactionData {
    /// Positive log-moduli of the archimedean blocks with multiplicities.
    pub archimedean_log_moduli: Vec<(Rational, usize)>,
    /// Volume factor of the totally discontinuous part, at least 1.
    pub td_volume_factor: u64,
}

impl CompactionData {
    /// Reads the archimedean weights of a rank-one algebra, oriented so that
    /// they are positive.
    pub fn from_algebra(g: &GradedLieAlgebra, td_volume_factor: u64) -> Result<Self> {
        if g.acting_rank() != 1 {
            return Err(Error::InvalidParameter(format!(
                "compaction data needs acting rank 1, got {}",
                g.acting_rank()
            )));
        }
        let mut moduli: BTreeMap<Rational, usize> = BTreeMap::new();
        for e in g.basis().iter().filter(|e| e.field.is_archimedean()) {
            *moduli.entry(e.weight[0].abs()).or_default() += 1;
        }
        if moduli.keys().any(Zero::is_zero) {
            return Err(Error::InvalidParameter("archimedean weight zero is not contracted".into()));
        }
        Ok(Self {
            archimedean_log_moduli: moduli.into_iter().collect(),
            td_volume_factor,
        })
    }
}

/// `(sum m*l + ln(delta_td)) / min l`, or 0 without archimedean part.
pub fn p0(c: &CompactionData) -> Result<SymbolicLogValue> {
    if c.td_volume_factor == 0 {
        return Err(Error::InvalidParameter("volume factor must be at least 1".into()));
    }
    if c.archimedean_log_moduli.is_empty() {
        return Ok(SymbolicLogValue::rational(Rational::zero()));
    }
    if c.archimedean_log_moduli.iter().any(|(l, _)| !l.is_positive()) {
        return Err(Error::InvalidParameter("log-moduli must be positive".into()));
    }
    let min = c.archimedean_log_moduli.iter().map(|(l, _)| l).min().expect("nonempty").clone();
    let total: Rational = c
        .archimedean_log_moduli
        .iter()
        .map(|(l, m)| l * Rational::from_integer(BigInt::from(*m)))
        .sum();
    let value = SymbolicLogValue::rational(total)
        .add(&SymbolicLogValue::log(c.td_volume_factor, Rational::one()))
        .scale(&(Rational::one() / min));
    debug_assert!(value.is_at_least(&Rational::one()));
    Ok(value)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TacInvariants {
    /// Scale of the nonarchimedean modular function, at least 2.
    pub s_g: BigInt,
    /// Least integer of which `s_g` is a power.
    pub q_g: BigInt,
    pub varpi_g: SymbolicRatio,
}

/// Invariants of a mixed-type group along the element `t` of the acting torus.
pub fn tac_invariants(g: &GradedLieAlgebra, t: &[Rational]) -> Result<TacInvariants> {
    if t.len() != g.acting_rank() {
        return Err(Error::DimensionMismatch {
            expected: g.acting_rank(),
            found: t.len(),
        });
    }
    let mut arch_sum = Rational::zero();
    let mut arch_nonzero = false;
    let mut exponents: BTreeMap<u64, Rational> = BTreeMap::new();
    let mut nonarch_nonzero = false;
    for e in g.basis() {
        let alpha = dot(&e.weight, t);
        match e.field.kind() {
            FieldKind::Archimedean => {
                arch_nonzero |= !alpha.is_zero();
                arch_sum += alpha;
            }
            FieldKind::NonArchimedean => {
                let q = e.field.residue_cardinality().ok_or_else(|| Error::MissingResidueCardinality {
                    label: e.label.clone(),
                })?;
                let (p, k) = prime_power(q).ok_or_else(|| Error::InvalidFieldTag(format!("{q} is not a prime power")))?;
                nonarch_nonzero |= !alpha.is_zero();
                *exponents.entry(p).or_insert_with(Rational::zero) += alpha * Rational::from_integer(BigInt::from(k));
            }
        }
    }
    if !arch_nonzero || !nonarch_nonzero {
        return Err(Error::NotMixedType(
            "both field kinds must carry a weight that is nonzero on t".into(),
        ));
    }
    let denominator = exponents
        .iter()
        .fold(SymbolicLogValue::rational(Rational::zero()), |acc, (p, e)| {
            acc.add(&SymbolicLogValue::log(*p, e.clone()))
        });
    if denominator.is_zero() {
        return Err(Error::NotMixedType("nonarchimedean modular function is trivial on t".into()));
    }
    let varpi_g = SymbolicRatio {
        numerator: SymbolicLogValue::rational(arch_sum),
        denominator,
    };

    // Orient so that prod p^E > 1, comparing integer powers exactly.
    let l = exponents.values().fold(BigInt::one(), |acc, e| acc.lcm(e.denom()));
    let (mut up, mut down) = (BigInt::one(), BigInt::one());
    for (p, e) in &exponents {
        let k = (e * Rational::from_integer(l.clone())).to_integer();
        let pk = num_traits::pow(BigInt::from(*p), k.abs().to_usize().expect("exponent size"));
        if k.is_positive() {
            up *= pk;
        } else {
            down *= pk;
        }
    }
    if up < down {
        for e in exponents.values_mut() {
            *e = -e.clone();
        }
    }
    let mut s_g = BigInt::one();
    let mut gcd = BigInt::zero();
    for (p, e) in exponents.iter().filter(|(_, e)| !e.is_zero()) {
        if !e.is_integer() || e.is_negative() {
            return Err(Error::NonIntegralModulus(format!("exponent {e} on prime {p}")));
        }
        let k = e.to_integer();
        s_g *= num_traits::pow(BigInt::from(*p), k.to_usize().expect("exponent size"));
        gcd = gcd.gcd(&k);
    }
    let mut q_g = BigInt::one();
    for (p, e) in exponents.iter().filter(|(_, e)| !e.is_zero()) {
        let k = e.to_integer() / &gcd;
        q_g *= num_traits::pow(BigInt::from(*p), k.to_usize().expect("exponent size"));
    }
    Ok(TacInvariants { s_g, q_g, varpi_g })
}
