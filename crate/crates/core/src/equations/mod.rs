//! Configuration equations and their feasibility over exact rationals.
//!
//! For a configuration set with `n` tuple entries and `m` blocks the unknowns
//! are `f_C`, one per configuration, subject to `f_C ≥ 0`,
//! `Σ f_C = 1` and, for every `j ≥ 1` and block `i`,
//! `Σ{f_C : C_j = i} - Σ{f_C : C_0 = i} = 0`.

mod simplex;

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::config::{format_configuration, Configuration, ConfigurationSet};
use crate::error::{Error, Result};

pub use simplex::solve_feasibility;

pub type Rational = BigRational;

/// Parses `"p/q"` or `"p"`.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim().parse::<BigInt>().ok()?, d.trim().parse::<BigInt>().ok()?),
        None => (s.trim().parse::<BigInt>().ok()?, BigInt::one()),
    };
    if den.is_zero() {
        return None;
    }
    Some(Rational::new(num, den))
}

/// `"p/q"`, or `"p"` for integers.
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RowLabel {
    /// `Σ{f_C : C_j = i} - Σ{f_C : C_0 = i} = 0`, one-based `i`.
    Balance {
        j: usize,
        i: usize,
    },
    Normalization,
}

impl fmt::Display for RowLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RowLabel::Balance { j, i } => write!(f, "balance(j={j}, i={i})"),
            RowLabel::Normalization => write!(f, "normalization"),
        }
    }
}

/// Equality rows `a·f = b` with integer coefficients over `f ≥ 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearSystem {
    variables: Vec<Configuration>,
    labels: Vec<RowLabel>,
    rows: Vec<Vec<i64>>,
    rhs: Vec<i64>,
}

impl LinearSystem {
    pub fn new(
        variables: Vec<Configuration>,
        labels: Vec<RowLabel>,
        rows: Vec<Vec<i64>>,
        rhs: Vec<i64>,
    ) -> LinearSystem {
        assert_eq!(labels.len(), rows.len());
        assert_eq!(rhs.len(), rows.len());
        assert!(rows.iter().all(|r| r.len() == variables.len()));
        LinearSystem { variables, labels, rows, rhs }
    }

    pub fn variables(&self) -> &[Configuration] {
        &self.variables
    }

    pub fn labels(&self) -> &[RowLabel] {
        &self.labels
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn rhs(&self) -> &[i64] {
        &self.rhs
    }

    pub fn variable_count(&self) -> usize {
        self.variables.len()
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }
}

/// Balance rows for every `(j, i)` with `j` in `1..=n` and `i` a block
/// occurring in some configuration, in that order, then the normalization
/// row. Zero and duplicate rows are kept.
pub fn build_equations(cs: &ConfigurationSet) -> LinearSystem {
    let n = cs.pair().n();
    let m = cs.pair().m();
    let variables = cs.configurations().to_vec();
    let realized: Vec<bool> = (1..=m).map(|i| variables.iter().any(|c| c.contains(&i))).collect();
    let mut labels = Vec::new();
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for j in 1..=n {
        for i in (1..=m).filter(|&i| realized[i - 1]) {
            labels.push(RowLabel::Balance { j, i });
            rows.push(variables.iter().map(|c| (c[j] == i) as i64 - (c[0] == i) as i64).collect());
            rhs.push(0);
        }
    }
    labels.push(RowLabel::Normalization);
    rows.push(vec![1; variables.len()]);
    rhs.push(1);
    LinearSystem { variables, labels, rows, rhs }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FeasibilityResult {
    Solution(Vec<Rational>),
    /// One integer multiplier per row, gcd 1. The combined row has every
    /// coefficient `≤ 0` and a positive constant.
    Infeasible(Vec<Rational>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolutionViolation {
    Length { expected: usize, got: usize },
    Negative { variable: Configuration },
    Row { label: RowLabel, value: Rational, expected: i64 },
}

impl fmt::Display for SolutionViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SolutionViolation::Length { expected, got } => write!(f, "expected {expected} values, got {got}"),
            SolutionViolation::Negative { variable } => {
                write!(f, "nonnegativity fails at {}", format_configuration(variable))
            }
            SolutionViolation::Row { label, value, expected } => {
                write!(f, "{label} evaluates to {} instead of {expected}", format_rational(value))
            }
        }
    }
}

fn dot(row: &[i64], x: &[Rational]) -> Rational {
    row.iter().zip(x).filter(|(a, _)| **a != 0).map(|(a, v)| v * Rational::from_integer((*a).into())).sum()
}

/// Exact check of nonnegativity and every row.
pub fn verify_solution(system: &LinearSystem, f: &[Rational]) -> std::result::Result<(), SolutionViolation> {
    if f.len() != system.variable_count() {
        return Err(SolutionViolation::Length { expected: system.variable_count(), got: f.len() });
    }
    if let Some(k) = f.iter().position(|v| v.is_negative()) {
        return Err(SolutionViolation::Negative { variable: system.variables[k].clone() });
    }
    // Report the normalization row ahead of the balance rows.
    let order = (0..system.row_count()).rev().take(1).chain(0..system.row_count() - 1);
    for r in order {
        let value = dot(&system.rows[r], f);
        if value != Rational::from_integer(system.rhs[r].into()) {
            return Err(SolutionViolation::Row { label: system.labels[r], value, expected: system.rhs[r] });
        }
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CertificateViolation {
    Length { expected: usize, got: usize },
    PositiveCoefficient { variable: Configuration, value: Rational },
    NonPositiveConstant { value: Rational },
}

impl fmt::Display for CertificateViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CertificateViolation::Length { expected, got } => write!(f, "expected {expected} multipliers, got {got}"),
            CertificateViolation::PositiveCoefficient { variable, value } => write!(
                f,
                "combined coefficient of {} is {} > 0",
                format_configuration(variable),
                format_rational(value)
            ),
            CertificateViolation::NonPositiveConstant { value } => {
                write!(f, "combined constant is {} ≤ 0", format_rational(value))
            }
        }
    }
}

/// Checks that `Σ y_r·row_r` has all coefficients `≤ 0` and a positive
/// constant, which rules out any `f ≥ 0` satisfying the rows.
pub fn verify_certificate(system: &LinearSystem, y: &[Rational]) -> std::result::Result<(), CertificateViolation> {
    if y.len() != system.row_count() {
        return Err(CertificateViolation::Length { expected: system.row_count(), got: y.len() });
    }
    for (k, variable) in system.variables.iter().enumerate() {
        let value: Rational =
            system.rows.iter().zip(y).map(|(row, yr)| yr * Rational::from_integer(row[k].into())).sum();
        if value.is_positive() {
            return Err(CertificateViolation::PositiveCoefficient { variable: variable.clone(), value });
        }
    }
    let value = dot(&system.rhs, y);
    if !value.is_positive() {
        return Err(CertificateViolation::NonPositiveConstant { value });
    }
    Ok(())
}

/// `f_C = |x_0(C)| / |X|` for a finite action.
pub fn counting_solution(cs: &ConfigurationSet) -> Result<Vec<Rational>> {
    let total = cs.action().degree().ok_or(Error::NotFinite)?;
    Ok(cs
        .configurations()
        .iter()
        .map(|c| {
            let size = cs.base_cell(c).and_then(|x| x.finite_len()).expect("finite cells");
            Rational::new(BigInt::from(size), BigInt::from(total))
        })
        .collect())
}
