//! Phase-one simplex over exact rationals with Bland's pivoting rule.
//!
//! Minimizes the sum of one artificial variable per row. A zero optimum
//! yields a solution; a positive optimum yields the dual vector of the final
//! basis, which is the infeasibility certificate.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{verify_certificate, verify_solution, FeasibilityResult, LinearSystem, Rational};

struct Tableau {
    rows: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    reduced: Vec<Rational>,
    basis: Vec<usize>,
}

impl Tableau {
    fn pivot(&mut self, r: usize, col: usize) {
        let p = self.rows[r][col].clone();
        for a in self.rows[r].iter_mut() {
            *a /= &p;
        }
        self.rhs[r] /= &p;
        let pivot_row = self.rows[r].clone();
        let pivot_rhs = self.rhs[r].clone();
        for k in 0..self.rows.len() {
            if k == r || self.rows[k][col].is_zero() {
                continue;
            }
            let factor = self.rows[k][col].clone();
            for (a, b) in self.rows[k].iter_mut().zip(&pivot_row) {
                if !b.is_zero() {
                    *a -= &factor * b;
                }
            }
            self.rhs[k] -= &factor * &pivot_rhs;
        }
        let factor = self.reduced[col].clone();
        if !factor.is_zero() {
            for (a, b) in self.reduced.iter_mut().zip(&pivot_row) {
                if !b.is_zero() {
                    *a -= &factor * b;
                }
            }
        }
        self.basis[r] = col;
    }

    // Bland: least improving column; among tied ratios, least basic index.
    fn step(&mut self) -> bool {
        let Some(col) = self.reduced.iter().position(|d| d.is_negative()) else {
            return false;
        };
        let mut best: Option<(usize, Rational)> = None;
        for r in 0..self.rows.len() {
            let a = &self.rows[r][col];
            if !a.is_positive() {
                continue;
            }
            let ratio = &self.rhs[r] / a;
            let better = match &best {
                None => true,
                Some((b, q)) => ratio < *q || (ratio == *q && self.basis[r] < self.basis[*b]),
            };
            if better {
                best = Some((r, ratio));
            }
        }
        let (r, _) = best.expect("phase one is bounded below");
        self.pivot(r, col);
        true
    }
}

fn to_integers(v: &[Rational]) -> Vec<Rational> {
    let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    let gcd = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if gcd.is_zero() {
        return v.to_vec();
    }
    ints.into_iter().map(|x| Rational::from_integer(x / &gcd)).collect()
}

/// Decides whether `rows·f = rhs, f ≥ 0` has a solution. Deterministic for
/// a given system. Both outcomes are verified before they are returned.
pub fn solve_feasibility(system: &LinearSystem) -> FeasibilityResult {
    let nv = system.variable_count();
    let nr = system.row_count();
    let sign: Vec<i64> = system.rhs().iter().map(|&b| if b < 0 { -1 } else { 1 }).collect();
    let int = |a: i64| Rational::from_integer(BigInt::from(a));

    let mut rows = Vec::with_capacity(nr);
    for (r, row) in system.rows().iter().enumerate() {
        let mut t: Vec<Rational> = row.iter().map(|&a| int(a * sign[r])).collect();
        t.extend((0..nr).map(|k| if k == r { Rational::one() } else { Rational::zero() }));
        rows.push(t);
    }
    let rhs: Vec<Rational> = system.rhs().iter().zip(&sign).map(|(&b, &s)| int(b * s)).collect();
    let mut reduced: Vec<Rational> =
        (0..nv).map(|j| -rows.iter().map(|t: &Vec<Rational>| t[j].clone()).sum::<Rational>()).collect();
    reduced.extend((0..nr).map(|_| Rational::zero()));
    let mut tab = Tableau { rows, rhs, reduced, basis: (nv..nv + nr).collect() };

    while tab.step() {}

    let objective: Rational = tab.basis.iter().zip(&tab.rhs).filter(|(b, _)| **b >= nv).map(|(_, v)| v.clone()).sum();
    if objective.is_zero() {
        let mut f = vec![Rational::zero(); nv];
        for (b, v) in tab.basis.iter().zip(&tab.rhs) {
            if *b < nv {
                f[*b] = v.clone();
            }
        }
        debug_assert!(verify_solution(system, &f).is_ok());
        FeasibilityResult::Solution(f)
    } else {
        let y: Vec<Rational> = (0..nr).map(|k| (Rational::one() - &tab.reduced[nv + k]) * int(sign[k])).collect();
        let y = to_integers(&y);
        debug_assert!(verify_certificate(system, &y).is_ok());
        FeasibilityResult::Infeasible(y)
    }
}
