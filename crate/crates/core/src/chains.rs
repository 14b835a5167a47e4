//! Chains of generalized eigenvectors read off the expansion coefficients.
//!
//! For a fixed column index `m`, the `m`-th columns of `B_i1, B_i2, ...`
//! satisfy `(A - lambda_i) b_j = b_{j+1}`, so the nonzero ones form a chain
//! that ends with an eigenvector. The same holds for `B_ij c` with any fixed
//! coefficient vector `c`, which is what [`select_chain_basis`] falls back to
//! when the plain columns do not contain a full chain basis.

use alloc::vec::Vec;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::pfd::{EigenBlock, ResolventPfd};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ChainSource<T> {
    /// Column `m` (0-based) of every `B_ij`.
    Column(usize),
    /// `B_ij c` for the given coefficient vector `c`.
    Combination(Vec<T>),
}

/// `v_1, ..., v_l` with `(A - lambda) v_j = v_{j+1}` and `(A - lambda) v_l = 0`.
/// `v_j` has rank `l - j + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chain<T> {
    pub eigenvalue: T,
    pub vectors: Vec<Vec<T>>,
    pub source: ChainSource<T>,
}

impl<T: Scalar> Chain<T> {
    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn eigenvector(&self) -> &[T] {
        self.vectors.last().expect("chains are nonempty")
    }

    /// Whether the chain relations hold for `a`.
    pub fn is_valid_for(&self, a: &Matrix<T>) -> bool {
        let shifted = a.shift(&self.eigenvalue);
        let image = |v: &[T]| shifted.mul_vec(v).expect("matching length");
        let links = self.vectors.windows(2).all(|w| image(&w[0]) == w[1]);
        let tail = self
            .vectors
            .last()
            .is_some_and(|v| !v.iter().all(Zero::is_zero) && image(v).iter().all(Zero::is_zero));
        links && tail
    }
}

/// Chains whose vectors together form a basis of one generalized eigenspace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainBasis<T> {
    pub eigenvalue: T,
    pub chains: Vec<Chain<T>>,
}

impl<T: Scalar> ChainBasis<T> {
    pub fn total(&self) -> usize {
        self.chains.iter().map(Chain::len).sum()
    }

    /// Chains that are not plain columns of the coefficients.
    pub fn combination_chains(&self) -> usize {
        self.chains
            .iter()
            .filter(|c| matches!(c.source, ChainSource::Combination(_)))
            .count()
    }

    pub fn vectors(&self) -> impl Iterator<Item = &Vec<T>> {
        self.chains.iter().flat_map(|c| c.vectors.iter())
    }
}

/// One chain per column whose entries are not all zero, cut at the last
/// nonzero column. Vectors are the raw column data.
pub fn extract_column_chains<T: Scalar>(pfd: &ResolventPfd<T>, i: usize) -> Result<Vec<Chain<T>>> {
    let block = pfd.block(i)?;
    Ok((0..pfd.n)
        .filter_map(|m| {
            let vectors: Vec<Vec<T>> = block
                .coefficients
                .iter()
                .map(|b| b.column(m))
                .take_while(|v| !v.iter().all(Zero::is_zero))
                .collect();
            (!vectors.is_empty()).then(|| Chain {
                eigenvalue: block.eigenvalue.clone(),
                vectors,
                source: ChainSource::Column(m),
            })
        })
        .collect())
}

/// Smallest `p >= 1` with `(A - lambda)^p v = 0`.
pub fn generalized_rank<T: Scalar>(a: &Matrix<T>, lambda: &T, v: &[T]) -> Result<usize> {
    let not_generalized = || Error::NotAGeneralizedEigenvector(alloc::format!("{lambda}"));
    if v.iter().all(Zero::is_zero) {
        return Err(not_generalized());
    }
    let shifted = a.shift(lambda);
    let mut w = v.to_vec();
    for p in 1..=a.rows() {
        w = shifted.mul_vec(&w)?;
        if w.iter().all(Zero::is_zero) {
            return Ok(p);
        }
    }
    Err(not_generalized())
}

/// Outcome of [`membership_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Membership {
    /// `v` lies in the generalized eigenspace, i.e. the column space of `B_i1`.
    pub is_member: bool,
    /// `1 + max { m : v in Image((A - lambda)^m) }`.
    pub j0: usize,
    /// Indices `j <= j0` with `v` outside the column space of `B_ij`; empty
    /// whenever the expansion is correct.
    pub violations: Vec<usize>,
}

pub fn membership_check<T: Scalar>(pfd: &ResolventPfd<T>, i: usize, v: &[T]) -> Result<Membership> {
    let block = pfd.block(i)?;
    if v.len() != pfd.n {
        return Err(Error::DimensionMismatch(alloc::format!(
            "vector of length {} in dimension {}",
            v.len(),
            pfd.n
        )));
    }
    let shifted = pfd.matrix().shift(&block.eigenvalue);
    let is_member = block.projector().spans(v);
    let mut power = shifted.clone();
    let mut deepest = 0;
    for m in 1..=pfd.n {
        if !power.spans(v) {
            break;
        }
        deepest = m;
        power = &power * &shifted;
    }
    let j0 = deepest + 1;
    let violations = if is_member {
        (1..=j0.min(block.multiplicity()))
            .filter(|&j| !block.coefficient(j).spans(v))
            .collect()
    } else {
        Vec::new()
    };
    Ok(Membership {
        is_member,
        j0,
        violations,
    })
}

/// Picks chains whose vectors form a basis of the generalized eigenspace.
///
/// Lengths are processed from longest to shortest. At each length the
/// column chains of exactly that length come first (lowest column first),
/// then chains `B_ij c` for `c` running over a kernel basis of `B_{i,L+1}`.
/// A chain is admitted when its vectors keep the selected set linearly
/// independent.
pub fn select_chain_basis<T: Scalar>(pfd: &ResolventPfd<T>, i: usize) -> Result<ChainBasis<T>> {
    let block = pfd.block(i)?;
    let r = block.multiplicity();
    let n = pfd.n;
    let columns = extract_column_chains(pfd, i)?;
    let mut selected: Vec<Chain<T>> = Vec::new();
    let mut vectors: Vec<Vec<T>> = Vec::new();
    for length in (1..=r).rev() {
        for chain in columns.iter().filter(|c| c.len() == length) {
            admit(&mut selected, &mut vectors, n, chain.clone());
        }
        if vectors.len() == r {
            break;
        }
        for c in block.coefficient(length + 1).nullspace() {
            let chain = combination_chain(block, &c, length);
            if let Some(chain) = chain {
                admit(&mut selected, &mut vectors, n, chain);
            }
        }
        if vectors.len() == r {
            break;
        }
    }
    if vectors.len() != r {
        return Err(Error::IncompleteBasis {
            eigenvalue: alloc::format!("{}", block.eigenvalue),
            found: vectors.len(),
            expected: r,
        });
    }
    Ok(ChainBasis {
        eigenvalue: block.eigenvalue.clone(),
        chains: selected,
    })
}

fn combination_chain<T: Scalar>(block: &EigenBlock<T>, c: &[T], length: usize) -> Option<Chain<T>> {
    let vectors: Vec<Vec<T>> = (1..=length)
        .map(|j| block.coefficient(j).mul_vec(c).expect("matching length"))
        .collect();
    if vectors.last()?.iter().all(Zero::is_zero) {
        return None;
    }
    Some(Chain {
        eigenvalue: block.eigenvalue.clone(),
        vectors,
        source: ChainSource::Combination(c.to_vec()),
    })
}

fn admit<T: Scalar>(
    selected: &mut Vec<Chain<T>>,
    vectors: &mut Vec<Vec<T>>,
    n: usize,
    chain: Chain<T>,
) {
    let mut candidate = vectors.clone();
    candidate.extend(chain.vectors.iter().cloned());
    let stacked = Matrix::from_columns(n, &candidate).expect("vectors of length n");
    if stacked.rank() == candidate.len() {
        *vectors = candidate;
        selected.push(chain);
    }
}
