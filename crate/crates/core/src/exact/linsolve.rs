//! Exact solving of `A x = b`.
//!
//! Rows are scaled to integers and eliminated fraction-free; after every row
//! update the row is divided by the gcd of its entries, which keeps the
//! integers at the size of the primitive row vectors. Each working row
//! carries an identity block so that the combination of original rows that
//! produced it is known, which is what an inconsistency certificate reports.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::matrix::QMatrix;
use super::rational::Rational;
use crate::error::ExactError;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolutionSet {
    pub particular: Vec<Rational>,
    pub nullspace: Vec<Vec<Rational>>,
}

impl SolutionSet {
    pub fn is_unique(&self) -> bool {
        self.nullspace.is_empty()
    }

    /// `particular + Σ tᵢ · nullspaceᵢ`.
    pub fn point(&self, t: &[Rational]) -> Vec<Rational> {
        assert_eq!(t.len(), self.nullspace.len());
        let mut p = self.particular.clone();
        for (ti, v) in t.iter().zip(&self.nullspace) {
            for (pk, vk) in p.iter_mut().zip(v) {
                *pk += &(ti * vk);
            }
        }
        p
    }
}

/// Row-combination coefficients `y` such that `yᵀA = 0` and `yᵀb = 1`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InconsistencyCertificate {
    pub coefficients: Vec<Rational>,
}

impl InconsistencyCertificate {
    /// Indices of the rows with nonzero coefficient.
    pub fn support(&self) -> Vec<usize> {
        self.coefficients
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, _)| i)
            .collect()
    }

    /// Checks `yᵀA = 0` and `yᵀb = 1` exactly.
    pub fn verify(&self, a: &QMatrix, b: &[Rational]) -> bool {
        if self.coefficients.len() != a.rows() || b.len() != a.rows() {
            return false;
        }
        let lhs_zero = (0..a.cols()).all(|j| {
            self.coefficients
                .iter()
                .enumerate()
                .map(|(i, y)| y * &a[(i, j)])
                .sum::<Rational>()
                .is_zero()
        });
        let rhs: Rational = self.coefficients.iter().zip(b).map(|(y, v)| y * v).sum();
        lhs_zero && rhs.is_one()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum Solved {
    Consistent(SolutionSet),
    Inconsistent(InconsistencyCertificate),
}

impl Solved {
    pub fn is_consistent(&self) -> bool {
        matches!(self, Solved::Consistent(_))
    }
}

struct WorkRow {
    /// `[A_i | b_i | e_i]` scaled to integers.
    entries: Vec<BigInt>,
}

impl WorkRow {
    fn make_primitive(&mut self) {
        let g = self
            .entries
            .iter()
            .fold(BigInt::zero(), |g, x| g.gcd(x));
        if !g.is_zero() && !g.is_one() {
            for x in &mut self.entries {
                *x = &*x / &g;
            }
        }
    }
}

fn lcm_of_denominators(values: &[Rational]) -> BigInt {
    values
        .iter()
        .fold(BigInt::one(), |l, v| l.lcm(v.denom()))
}

/// Solve `A x = b` exactly.
pub fn rref_solve(a: &QMatrix, b: &[Rational]) -> Result<Solved, ExactError> {
    if a.rows() != b.len() {
        return Err(ExactError::DimensionMismatch(format!(
            "A has {} rows, b has {} entries",
            a.rows(),
            b.len()
        )));
    }
    let (m, n) = (a.rows(), a.cols());
    let width = n + 1 + m;
    let mut rows: Vec<WorkRow> = (0..m)
        .map(|i| {
            let mut vals: Vec<Rational> = a.row(i).to_vec();
            vals.push(b[i].clone());
            let scale = lcm_of_denominators(&vals);
            let mut entries: Vec<BigInt> = vals
                .iter()
                .map(|v| v.numer() * (&scale / v.denom()))
                .collect();
            entries.extend((0..m).map(|k| if k == i { scale.clone() } else { BigInt::zero() }));
            debug_assert_eq!(entries.len(), width);
            let mut row = WorkRow { entries };
            row.make_primitive();
            row
        })
        .collect();

    // Forward and backward elimination, fraction-free.
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0;
    for c in 0..n {
        if r == m {
            break;
        }
        let Some(p) = (r..m)
            .filter(|&i| !rows[i].entries[c].is_zero())
            .min_by_key(|&i| rows[i].entries[c].abs())
        else {
            continue;
        };
        rows.swap(r, p);
        if rows[r].entries[c].is_negative() {
            for x in &mut rows[r].entries {
                *x = -&*x;
            }
        }
        let pivot_row = rows[r].entries.clone();
        let pv = pivot_row[c].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row.entries[c].is_zero() {
                continue;
            }
            let f = row.entries[c].clone();
            for (x, pval) in row.entries.iter_mut().zip(&pivot_row) {
                *x = &*x * &pv - &f * pval;
            }
            row.make_primitive();
        }
        pivots.push(c);
        r += 1;
    }

    // Rows below the rank have zero A-part.
    for row in &rows[r..] {
        let beta = &row.entries[n];
        if !beta.is_zero() {
            let beta = Rational::from(beta.clone());
            let coefficients = (0..m)
                .map(|k| Rational::from(row.entries[n + 1 + k].clone()) / &beta)
                .collect();
            return Ok(Solved::Inconsistent(InconsistencyCertificate { coefficients }));
        }
    }

    let mut particular = vec![Rational::zero(); n];
    for (i, &pc) in pivots.iter().enumerate() {
        let pv = Rational::from(rows[i].entries[pc].clone());
        particular[pc] = Rational::from(rows[i].entries[n].clone()) / &pv;
    }
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let nullspace = free
        .iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); n];
            v[f] = Rational::one();
            for (i, &pc) in pivots.iter().enumerate() {
                let pv = Rational::from(rows[i].entries[pc].clone());
                v[pc] = -(Rational::from(rows[i].entries[f].clone()) / &pv);
            }
            v
        })
        .collect();
    Ok(Solved::Consistent(SolutionSet {
        particular,
        nullspace,
    }))
}

/// Shrinks an inconsistent system to a minimal inconsistent subset of rows
/// and returns the certificate over that subset (zero coefficients
/// elsewhere). Single contradictory rows (`0 = c ≠ 0`) are preferred.
pub fn minimal_certificate(
    a: &QMatrix,
    b: &[Rational],
) -> Result<Option<InconsistencyCertificate>, ExactError> {
    let m = a.rows();
    for i in 0..m {
        if a.row(i).iter().all(Rational::is_zero) && !b[i].is_zero() {
            let mut coefficients = vec![Rational::zero(); m];
            coefficients[i] = b[i].recip();
            return Ok(Some(InconsistencyCertificate { coefficients }));
        }
    }
    let Solved::Inconsistent(first) = rref_solve(a, b)? else {
        return Ok(None);
    };
    let mut active: Vec<usize> = first.support();
    let mut idx = 0;
    while idx < active.len() {
        let trial: Vec<usize> = active
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != idx)
            .map(|(_, &row)| row)
            .collect();
        if !trial.is_empty() && subsystem_inconsistent(a, b, &trial)? {
            active = trial;
        } else {
            idx += 1;
        }
    }
    let sub_a = QMatrix::from_rows(active.iter().map(|&i| a.row(i).to_vec()).collect());
    let sub_b: Vec<Rational> = active.iter().map(|&i| b[i].clone()).collect();
    match rref_solve(&sub_a, &sub_b)? {
        Solved::Inconsistent(cert) => {
            let mut coefficients = vec![Rational::zero(); m];
            for (k, &i) in active.iter().enumerate() {
                coefficients[i] = cert.coefficients[k].clone();
            }
            Ok(Some(InconsistencyCertificate { coefficients }))
        }
        Solved::Consistent(_) => unreachable!("subset was checked inconsistent"),
    }
}

fn subsystem_inconsistent(a: &QMatrix, b: &[Rational], rows: &[usize]) -> Result<bool, ExactError> {
    let sub_a = QMatrix::from_rows(rows.iter().map(|&i| a.row(i).to_vec()).collect());
    let sub_b: Vec<Rational> = rows.iter().map(|&i| b[i].clone()).collect();
    Ok(!rref_solve(&sub_a, &sub_b)?.is_consistent())
}
