//! Asymptotic cones of the groups `G^d_V` of diagonal-by-unipotent matrices
//! whose diagonal log-entries lie in the annihilator of `V`.

use std::fmt;

use itertools::Itertools;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exactla::{positive_kernel_vector, Rational, RationalMatrix, RowEchelon};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConeType {
    RealTree,
    SolLike,
    ProductOfTrees,
    /// Cut out by a single relation with all coefficients positive.
    TDd,
    /// Cut out by a single relation with `k` positive and `l` negative
    /// coefficients, `k >= l`.
    TDkl(usize, usize),
    /// None of the listed shapes; carries `dim V^perp`.
    General(usize),
}

impl fmt::Display for ConeType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConeType::RealTree => f.write_str("real_tree"),
            ConeType::SolLike => f.write_str("sol_like"),
            ConeType::ProductOfTrees => f.write_str("product_of_trees"),
            ConeType::TDd => f.write_str("T_Dd"),
            ConeType::TDkl(k, l) => write!(f, "T_Dkl({k},{l})"),
            ConeType::General(v) => write!(f, "general({v})"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Equivalence {
    /// Same orbit under coordinate permutations.
    Isomorphism,
    /// Same orbit under permutations and positive diagonal scalings.
    Cone,
}

fn check_widths(d: usize, v: &[Vec<Rational>]) -> Result<()> {
    match v.iter().find(|x| x.len() != d) {
        Some(x) => Err(Error::DimensionMismatch {
            expected: d,
            found: x.len(),
        }),
        None => Ok(()),
    }
}

/// Rational basis of `V^perp` inside `Q^d`.
pub fn annihilator(d: usize, v: &[Vec<Rational>]) -> Result<Vec<Vec<Rational>>> {
    check_widths(d, v)?;
    Ok(RowEchelon::from_vectors(d, v.to_vec()).kernel_basis())
}

/// Fails with the first coordinate axis contained in `V`.
pub fn check_star(d: usize, v: &[Vec<Rational>]) -> Result<Vec<Vec<Rational>>> {
    let perp = annihilator(d, v)?;
    for axis in 0..d {
        if perp.iter().all(|w| w[axis].is_zero()) {
            return Err(Error::StarConditionViolated { axis });
        }
    }
    Ok(perp)
}

/// Whether `V^perp` contains a vector with all coordinates positive.
pub fn gdv_npc(d: usize, v: &[Vec<Rational>]) -> Result<bool> {
    Ok(gdv_positive_witness(d, v)?.is_some())
}

/// A vector of `V^perp` with all coordinates at least 1, if one exists.
pub fn gdv_positive_witness(d: usize, v: &[Vec<Rational>]) -> Result<Option<Vec<Rational>>> {
    check_star(d, v)?;
    let m = if v.is_empty() {
        RationalMatrix::zeros(0, d)
    } else {
        RationalMatrix::from_rows(d, v)?
    };
    positive_kernel_vector(&m)
}

pub fn gdv_cone_type(d: usize, v: &[Vec<Rational>]) -> Result<ConeType> {
    let perp = check_star(d, v)?;
    let dim = perp.len();
    if dim == 1 {
        return Ok(if gdv_npc(d, v)? {
            ConeType::RealTree
        } else {
            ConeType::SolLike
        });
    }
    if dim == d {
        return Ok(ConeType::ProductOfTrees);
    }
    if dim + 1 == d {
        let line = &RowEchelon::from_vectors(d, v.to_vec()).rows[0];
        if line.iter().any(Zero::is_zero) {
            return Ok(ConeType::General(dim));
        }
        let pos = line.iter().filter(|x| x.is_positive()).count();
        let neg = d - pos;
        return Ok(if pos == 0 || neg == 0 {
            ConeType::TDd
        } else {
            ConeType::TDkl(pos.max(neg), pos.min(neg))
        });
    }
    Ok(ConeType::General(dim))
}

fn permute(v: &[Vec<Rational>], sigma: &[usize]) -> Vec<Vec<Rational>> {
    v.iter().map(|x| sigma.iter().map(|&i| x[i].clone()).collect()).collect()
}

/// Decides whether `V` and `W` lie in the same orbit for the chosen group.
pub fn gdv_equivalent(d: usize, v: &[Vec<Rational>], w: &[Vec<Rational>], mode: Equivalence) -> Result<bool> {
    check_star(d, v)?;
    let w_perp = check_star(d, w)?;
    let target = RowEchelon::from_vectors(d, w.to_vec());
    let source_rank = RowEchelon::from_vectors(d, v.to_vec()).rank();
    if source_rank != target.rank() {
        return Ok(false);
    }
    for sigma in (0..d).permutations(d) {
        let moved = permute(v, &sigma);
        let found = match mode {
            Equivalence::Isomorphism => RowEchelon::from_vectors(d, moved) == target,
            Equivalence::Cone => diagonal_scaling(d, &moved, &w_perp)?.is_some(),
        };
        if found {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Positive `delta` with `diag(delta) * span(v)` inside the space annihilated
/// by every vector of `w_perp`.
pub fn diagonal_scaling(d: usize, v: &[Vec<Rational>], w_perp: &[Vec<Rational>]) -> Result<Option<Vec<Rational>>> {
    let rows: Vec<Vec<Rational>> = v
        .iter()
        .cartesian_product(w_perp)
        .map(|(b, c)| (0..d).map(|i| &b[i] * &c[i]).collect())
        .collect();
    let m = if rows.is_empty() {
        RationalMatrix::zeros(0, d)
    } else {
        RationalMatrix::from_rows(d, &rows)?
    };
    positive_kernel_vector(&m)
}
