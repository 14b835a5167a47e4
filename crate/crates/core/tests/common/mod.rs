//! Random matrices `A = S J S^-1` with a planted rational Jordan structure
//! and a unimodular integer `S`. The planted structure gives independent
//! reference values for the characteristic polynomial, the expansion
//! coefficients and the chain counts.

#![allow(dead_code)]

use matpfd_core::{Matrix, Poly, Rational};
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::Rng;

pub type M = Matrix<Rational>;

pub fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn qvec(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| q(x)).collect()
}

pub struct Planted {
    pub a: M,
    pub s: M,
    pub s_inv: M,
    pub j: M,
    /// `(eigenvalue, block size)` in the order they sit on the diagonal.
    pub blocks: Vec<(Rational, usize)>,
}

/// Per distinct eigenvalue (ascending): algebraic multiplicity and the
/// expected `B_1 .. B_r`.
pub struct ExpectedBlock {
    pub eigenvalue: Rational,
    pub multiplicity: usize,
    pub block_count: usize,
    pub coefficients: Vec<M>,
}

fn eigenvalue_pool() -> Vec<Rational> {
    let mut pool: Vec<Rational> = (-3..=3).map(q).collect();
    pool.extend([frac(1, 2), frac(-2, 3), frac(5, 2)]);
    pool
}

fn random_unimodular<R: Rng>(rng: &mut R, n: usize) -> M {
    let mut rows: Vec<Vec<Rational>> = M::identity(n).to_rows();
    for _ in 0..(2 * n) {
        let (i, k) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if i == k {
            continue;
        }
        let c = q(rng.gen_range(-2..=2));
        let source = rows[k].clone();
        for (x, y) in rows[i].iter_mut().zip(&source) {
            *x = x.clone() + y.clone() * &c;
        }
    }
    rows.shuffle(rng);
    M::from_rows(rows).unwrap()
}

impl Planted {
    pub fn from_parts(blocks: Vec<(Rational, usize)>, s: M) -> Self {
        let n: usize = blocks.iter().map(|b| b.1).sum();
        let mut rows = vec![vec![Rational::zero(); n]; n];
        let mut at = 0;
        for (lambda, size) in &blocks {
            for k in 0..*size {
                rows[at + k][at + k] = lambda.clone();
                if k + 1 < *size {
                    rows[at + k][at + k + 1] = Rational::one();
                }
            }
            at += size;
        }
        let j = M::from_rows(rows).unwrap();
        let s_inv = s.inverse().unwrap();
        let a = &(&s * &j) * &s_inv;
        Self {
            a,
            s,
            s_inv,
            j,
            blocks,
        }
    }

    pub fn random<R: Rng>(rng: &mut R, n: usize) -> Self {
        let pool = eigenvalue_pool();
        let distinct = rng.gen_range(1..=n.min(3));
        let eigenvalues: Vec<Rational> = pool.choose_multiple(rng, distinct).cloned().collect();
        let mut remaining = n;
        let mut blocks = Vec::new();
        // Every chosen eigenvalue gets at least one block.
        for (k, lambda) in eigenvalues.iter().enumerate() {
            let reserve = distinct - k - 1;
            let size = rng.gen_range(1..=remaining - reserve);
            blocks.push((lambda.clone(), size));
            remaining -= size;
        }
        while remaining > 0 {
            let size = rng.gen_range(1..=remaining);
            let lambda = eigenvalues.choose(rng).unwrap().clone();
            blocks.push((lambda, size));
            remaining -= size;
        }
        blocks.shuffle(rng);
        Self::from_parts(blocks, random_unimodular(rng, n))
    }

    pub fn n(&self) -> usize {
        self.j.rows()
    }

    pub fn charpoly(&self) -> Poly<Rational> {
        self.blocks
            .iter()
            .fold(Poly::one(), |p, (l, size)| &p * &Poly::linear(l).pow(*size))
    }

    pub fn expected(&self) -> Vec<ExpectedBlock> {
        let n = self.n();
        let mut distinct: Vec<Rational> = self.blocks.iter().map(|b| b.0.clone()).collect();
        distinct.sort();
        distinct.dedup();
        distinct
            .into_iter()
            .map(|lambda| {
                let mut e = vec![vec![Rational::zero(); n]; n];
                let mut at = 0;
                let (mut multiplicity, mut block_count) = (0, 0);
                for (l, size) in &self.blocks {
                    if *l == lambda {
                        for (k, row) in e.iter_mut().enumerate().skip(at).take(*size) {
                            row[k] = Rational::one();
                        }
                        multiplicity += size;
                        block_count += 1;
                    }
                    at += size;
                }
                let e = M::from_rows(e).unwrap();
                let nil = &self.j.shift(&lambda) * &e;
                let coefficients = (0..multiplicity)
                    .map(|k| &(&(&self.s * &e) * &nil.pow(k)) * &self.s_inv)
                    .collect();
                ExpectedBlock {
                    eigenvalue: lambda,
                    multiplicity,
                    block_count,
                    coefficients,
                }
            })
            .collect()
    }
}
