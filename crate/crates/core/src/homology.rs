//! Weight components of the Chevalley-Eilenberg complex in degrees at most 3.
//!
//! Boundaries: `d2(x^y) = [x,y]` and
//! `d3(x^y^z) = [x,y]^z - [x,z]^y + [y,z]^x`.

use std::collections::HashMap;

use itertools::Itertools;
use num_traits::Zero;

use crate::exactla::{Rational, RationalMatrix, RowEchelon};
use crate::lie::GradedLieAlgebra;

/// Strictly increasing index tuples of one degree whose weights sum to `weight`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedChainBasis {
    pub degree: usize,
    pub weight: Vec<Rational>,
    pub elements: Vec<Vec<usize>>,
}

impl GradedChainBasis {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    fn index(&self) -> HashMap<&[usize], usize> {
        self.elements.iter().enumerate().map(|(i, e)| (e.as_slice(), i)).collect()
    }
}

pub fn chain_basis(g: &GradedLieAlgebra, k: usize, weight: &[Rational]) -> GradedChainBasis {
    let elements = (0..g.dim())
        .combinations(k)
        .filter(|t| {
            let mut sum = vec![Rational::zero(); g.acting_rank()];
            for &i in t {
                for (s, x) in sum.iter_mut().zip(g.weight(i)) {
                    *s += x;
                }
            }
            sum == weight
        })
        .collect();
    GradedChainBasis {
        degree: k,
        weight: weight.to_vec(),
        elements,
    }
}

/// Adds `coeff * e_a ^ e_b` to `out`, which is indexed by sorted pairs.
fn add_wedge(out: &mut [Rational], index: &HashMap<&[usize], usize>, a: usize, b: usize, coeff: &Rational) {
    if a == b || coeff.is_zero() {
        return;
    }
    let (key, sign) = if a < b { ([a, b], 1) } else { ([b, a], -1) };
    let row = index[key.as_slice()];
    if sign > 0 {
        out[row] += coeff;
    } else {
        out[row] -= coeff;
    }
}

/// Matrix of `d_k` from the weight-`weight` part of degree `k` to degree
/// `k - 1`. Columns follow `chain_basis(g, k, weight)`.
///
/// # Panics
/// If `k` is not 1, 2 or 3.
pub fn boundary_matrix(g: &GradedLieAlgebra, k: usize, weight: &[Rational]) -> RationalMatrix {
    let source = chain_basis(g, k, weight);
    let target = chain_basis(g, k - 1, weight);
    boundary_between(g, &source, &target)
}

fn boundary_between(g: &GradedLieAlgebra, source: &GradedChainBasis, target: &GradedChainBasis) -> RationalMatrix {
    let index = target.index();
    let mut m = RationalMatrix::zeros(target.len(), source.len());
    for (col, t) in source.elements.iter().enumerate() {
        let mut image = vec![Rational::zero(); target.len()];
        match source.degree {
            1 => {}
            2 => {
                let br = g.bracket_basis(t[0], t[1]);
                for (c, coeff) in br.iter().enumerate() {
                    if !coeff.is_zero() {
                        image[index[[c].as_slice()]] += coeff;
                    }
                }
            }
            3 => {
                let (x, y, z) = (t[0], t[1], t[2]);
                for (p, q, r, sign) in [(x, y, z, 1), (x, z, y, -1), (y, z, x, 1)] {
                    for (c, coeff) in g.bracket_basis(p, q).iter().enumerate() {
                        let coeff = if sign > 0 { coeff.clone() } else { -coeff };
                        add_wedge(&mut image, &index, c, r, &coeff);
                    }
                }
            }
            k => panic!("boundary of degree {k} is not materialized"),
        }
        for (row, v) in image.into_iter().enumerate() {
            m[(row, col)] = v;
        }
    }
    m
}

/// `dim ker d_k - rank d_(k+1)` on the weight-`weight` component, `k` in 1..=2.
///
/// # Panics
/// If `k` is not 1 or 2.
pub fn homology_dim(g: &GradedLieAlgebra, k: usize, weight: &[Rational]) -> usize {
    assert!(k == 1 || k == 2, "homology in degree {k} is not materialized");
    let chains = chain_basis(g, k, weight);
    let kernel = if k == 1 {
        chains.len()
    } else {
        chains.len() - boundary_matrix(g, 2, weight).rank()
    };
    kernel - boundary_matrix(g, k + 1, weight).rank()
}

/// A 2-cycle of weight `weight` that is not a boundary, as coefficients on
/// index pairs, or `None` when that homology component vanishes.
pub fn h2_class_representative(g: &GradedLieAlgebra, weight: &[Rational]) -> Option<Vec<(Rational, (usize, usize))>> {
    let chains = chain_basis(g, 2, weight);
    let cycles = boundary_matrix(g, 2, weight).kernel_basis();
    let boundaries = boundary_matrix(g, 3, weight).transpose().row_vecs();
    let image = RowEchelon::from_vectors(chains.len(), boundaries);
    let rep = cycles.into_iter().find(|c| !image.contains(c))?;
    Some(
        rep.into_iter()
            .zip(&chains.elements)
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, t)| (c, (t[0], t[1])))
            .collect(),
    )
}

/// `homology_dim(g, k, w)` for each `w`, spread over at most `jobs` threads.
/// Results follow the order of `weights`.
pub fn homology_dims(g: &GradedLieAlgebra, k: usize, weights: &[Vec<Rational>], jobs: usize) -> Vec<usize> {
    let jobs = jobs.max(1).min(weights.len().max(1));
    if jobs == 1 {
        return weights.iter().map(|w| homology_dim(g, k, w)).collect();
    }
    let chunk = weights.len().div_ceil(jobs);
    std::thread::scope(|s| {
        let handles: Vec<_> = weights
            .chunks(chunk)
            .map(|ws| s.spawn(move || ws.iter().map(|w| homology_dim(g, k, w)).collect::<Vec<_>>()))
            .collect();
        handles.into_iter().flat_map(|h| h.join().expect("homology worker")).collect()
    })
}

/// Every weight that occurs in degree `k`.
pub fn chain_weights(g: &GradedLieAlgebra, k: usize) -> Vec<Vec<Rational>> {
    let mut out: Vec<Vec<Rational>> = (0..g.dim())
        .combinations(k)
        .map(|t| {
            let mut sum = vec![Rational::zero(); g.acting_rank()];
            for &i in &t {
                for (s, x) in sum.iter_mut().zip(g.weight(i)) {
                    *s += x;
                }
            }
            sum
        })
        .collect();
    out.sort();
    out.dedup();
    out
}
