//! Shared oracles and random instance generators for the integration tests.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rand::seq::SliceRandom;
use rand::Rng;

use tarski_core::actions::{Action, Partition};
use tarski_core::equations::LinearSystem;
use tarski_core::groups::{FreeWord, GroupElement, Letter, Permutation};
use tarski_core::sets::{FiniteSet, PointSet};

type Q = BigRational;

fn q(a: i64) -> Q {
    Q::from_integer(BigInt::from(a))
}

/// Decides feasibility of `A f = b, f ≥ 0` by Gaussian elimination of the
/// equalities followed by Fourier-Motzkin elimination of the remaining free
/// variables. Independent of the simplex solver.
pub fn fm_feasible(system: &LinearSystem) -> bool {
    let nv = system.variable_count();
    let mut m: Vec<Vec<Q>> = system
        .rows()
        .iter()
        .zip(system.rhs())
        .map(|(row, &b)| row.iter().map(|&a| q(a)).chain(std::iter::once(q(b))).collect())
        .collect();

    // Reduced row echelon form.
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0;
    for c in 0..nv {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let lead = m[r][c].clone();
        for v in m[r].iter_mut() {
            *v /= &lead;
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                let pivot_row = m[r].clone();
                for (v, p) in m[i].iter_mut().zip(&pivot_row) {
                    *v -= &f * p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if m[r..].iter().any(|row| !row[nv].is_zero()) {
        return false;
    }
    let free: Vec<usize> = (0..nv).filter(|c| !pivots.contains(c)).collect();

    // Inequalities Σ coef·x_free ≤ bound.
    let mut ineqs: Vec<(Vec<Q>, Q)> = Vec::new();
    for (row, _) in m[..r].iter().zip(&pivots) {
        // x_p = rhs - Σ a_f x_f ≥ 0
        ineqs.push((free.iter().map(|&f| row[f].clone()).collect(), row[nv].clone()));
    }
    for k in 0..free.len() {
        let mut coef = vec![Q::zero(); free.len()];
        coef[k] = q(-1);
        ineqs.push((coef, Q::zero()));
    }

    for k in 0..free.len() {
        let (mut pos, mut neg, mut rest) = (Vec::new(), Vec::new(), Vec::new());
        for (c, b) in ineqs {
            if c[k].is_positive() {
                pos.push((c, b));
            } else if c[k].is_negative() {
                neg.push((c, b));
            } else {
                rest.push((c, b));
            }
        }
        for (cp, bp) in &pos {
            for (cn, bn) in &neg {
                let (sp, sn) = (-cn[k].clone(), cp[k].clone());
                let c: Vec<Q> = cp.iter().zip(cn).map(|(a, b)| a * &sp + b * &sn).collect();
                let b = bp * &sp + bn * &sn;
                rest.push((c, b));
            }
        }
        rest.sort();
        rest.dedup();
        ineqs = rest;
    }
    ineqs.iter().all(|(_, b)| !b.is_negative())
}

pub fn random_perm<R: Rng>(rng: &mut R, n: usize) -> Permutation {
    let mut v: Vec<usize> = (0..n).collect();
    v.shuffle(rng);
    Permutation::new(v).unwrap()
}

pub fn random_word<R: Rng>(rng: &mut R, rank: usize, max_len: usize) -> FreeWord {
    let len = rng.gen_range(0..=max_len);
    let letters: Vec<Letter> = (0..len).map(|_| Letter::new(rng.gen_range(0..rank), rng.gen())).collect();
    FreeWord::reduce(rank, letters).unwrap()
}

pub fn random_tuple<R: Rng>(rng: &mut R, rank: usize, len: usize) -> Vec<GroupElement> {
    (0..len).map(|_| GroupElement::Word(random_word(rng, rank, 3))).collect()
}

pub fn random_action<R: Rng>(rng: &mut R, max_degree: usize, max_gens: usize) -> Action {
    let n = rng.gen_range(1..=max_degree);
    let k = rng.gen_range(1..=max_gens);
    Action::permutation(n, (0..k).map(|_| random_perm(rng, n)).collect()).unwrap()
}

/// Random labels in `0..m` using every label at least once (`m ≤ n`).
pub fn random_labels<R: Rng>(rng: &mut R, n: usize, m: usize) -> Vec<usize> {
    let mut labels: Vec<usize> = (0..m).chain((m..n).map(|_| rng.gen_range(0..m))).collect();
    labels.shuffle(rng);
    labels
}

pub fn partition_from_labels(action: &Action, labels: &[usize]) -> Partition {
    let n = labels.len();
    let m = labels.iter().max().map_or(0, |x| x + 1);
    let blocks = (0..m)
        .map(|b| PointSet::Finite(FiniteSet::from_points(n, (0..n).filter(|&x| labels[x] == b)).unwrap()))
        .collect();
    Partition::new(action, blocks).unwrap()
}

pub fn random_partition<R: Rng>(rng: &mut R, action: &Action, max_blocks: usize) -> Partition {
    let n = action.degree().unwrap();
    let m = rng.gen_range(1..=max_blocks.min(n));
    partition_from_labels(action, &random_labels(rng, n, m))
}
