//! The Ricci-soliton system L_X g = ςg − ϱ as exact equations in
//! (x₁..x_n, ς).

pub mod fixtures;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::{HomogeneousPair, MVector};
use crate::error::SolitonError;
use crate::exact::{minimal_certificate, rref_solve, QMatrix, Rational, SolutionSet, Solved};

pub use fixtures::{load_fixture_system, FIXTURE_IDS};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    Assembled,
    Fixture,
}

/// One equation `Σ linearₖ zₖ + Σ c·z_a z_b + constant = 0` over
/// z = (x₁..x_n, ς).
#[derive(Debug, Clone, PartialEq)]
pub struct SystemRow {
    pub label: String,
    pub linear: Vec<Rational>,
    /// (a, b, c) with a ≤ b.
    pub quadratic: Vec<(usize, usize, Rational)>,
    pub constant: Rational,
}

fn unknown_name(k: usize, n: usize) -> String {
    if k == n {
        "sigma".to_string()
    } else {
        format!("x{}", k + 1)
    }
}

fn parse_unknown(name: &str, n: usize) -> Result<usize, SolitonError> {
    if name == "sigma" || name == "ς" {
        return Ok(n);
    }
    name.strip_prefix('x')
        .and_then(|k| k.parse::<usize>().ok())
        .filter(|k| (1..=n).contains(k))
        .map(|k| k - 1)
        .ok_or_else(|| SolitonError::UnknownVariable(name.to_string()))
}

impl SystemRow {
    pub fn zero(label: impl Into<String>, n: usize) -> Self {
        SystemRow {
            label: label.into(),
            linear: vec![Rational::zero(); n + 1],
            quadratic: Vec::new(),
            constant: Rational::zero(),
        }
    }

    pub fn n(&self) -> usize {
        self.linear.len() - 1
    }

    pub fn is_linear(&self) -> bool {
        self.quadratic.iter().all(|(_, _, c)| c.is_zero())
    }

    /// Row value at z.
    pub fn eval(&self, z: &[Rational]) -> Rational {
        let lin: Rational = self.linear.iter().zip(z).map(|(a, b)| a * b).sum();
        let quad: Rational = self
            .quadratic
            .iter()
            .map(|(a, b, c)| &(c * &z[*a]) * &z[*b])
            .sum();
        lin + quad + &self.constant
    }

    /// Keys `x1..xn`, `sigma`, products such as `x1*sigma`, and `1` for the
    /// constant term.
    pub fn from_terms(
        label: impl Into<String>,
        n: usize,
        terms: &BTreeMap<String, Rational>,
    ) -> Result<Self, SolitonError> {
        let mut row = SystemRow::zero(label, n);
        for (key, c) in terms {
            let factors: Vec<&str> = key.split('*').map(str::trim).collect();
            match factors.as_slice() {
                ["1"] => row.constant += c,
                [v] => {
                    let k = parse_unknown(v, n)?;
                    row.linear[k] += c;
                }
                [u, v] => {
                    let (a, b) = (parse_unknown(u, n)?, parse_unknown(v, n)?);
                    row.quadratic.push((a.min(b), a.max(b), c.clone()));
                }
                _ => return Err(SolitonError::DegreeTooHigh),
            }
        }
        Ok(row)
    }

    pub fn to_terms(&self) -> BTreeMap<String, Rational> {
        let n = self.n();
        let mut out = BTreeMap::new();
        for (k, c) in self.linear.iter().enumerate() {
            if !c.is_zero() {
                out.insert(unknown_name(k, n), c.clone());
            }
        }
        for (a, b, c) in &self.quadratic {
            if !c.is_zero() {
                out.insert(format!("{}*{}", unknown_name(*a, n), unknown_name(*b, n)), c.clone());
            }
        }
        if !self.constant.is_zero() {
            out.insert("1".to_string(), self.constant.clone());
        }
        out
    }
}

impl fmt::Display for SystemRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.to_terms();
        if terms.is_empty() {
            return write!(f, "0 = 0");
        }
        let parts: Vec<String> = terms
            .iter()
            .map(|(k, c)| if k == "1" { c.to_string() } else { format!("({c})·{k}") })
            .collect();
        write!(f, "{} = 0", parts.join(" + "))
    }
}

#[derive(Serialize, Deserialize)]
struct RowRepr {
    label: String,
    terms: BTreeMap<String, Rational>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SolitonSystem {
    pub id: String,
    pub n: usize,
    pub provenance: Provenance,
    pub rows: Vec<SystemRow>,
}

#[derive(Serialize, Deserialize)]
struct SystemRepr {
    id: String,
    n: usize,
    provenance: Provenance,
    rows: Vec<RowRepr>,
}

impl Serialize for SolitonSystem {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        SystemRepr {
            id: self.id.clone(),
            n: self.n,
            provenance: self.provenance,
            rows: self
                .rows
                .iter()
                .map(|r| RowRepr {
                    label: r.label.clone(),
                    terms: r.to_terms(),
                })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SolitonSystem {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = SystemRepr::deserialize(deserializer)?;
        let rows = repr
            .rows
            .iter()
            .map(|r| SystemRow::from_terms(r.label.clone(), repr.n, &r.terms))
            .collect::<Result<_, _>>()
            .map_err(serde::de::Error::custom)?;
        Ok(SolitonSystem {
            id: repr.id,
            n: repr.n,
            provenance: repr.provenance,
            rows,
        })
    }
}

impl SolitonSystem {
    /// Values of every row at z; all zero iff z solves the system.
    pub fn residuals(&self, z: &[Rational]) -> Vec<Rational> {
        self.rows.iter().map(|r| r.eval(z)).collect()
    }

    pub fn is_satisfied_by(&self, z: &[Rational]) -> bool {
        self.residuals(z).iter().all(Rational::is_zero)
    }

    pub fn is_linear(&self) -> bool {
        self.rows.iter().all(SystemRow::is_linear)
    }

    /// Linear rows as `A z = b`.
    pub fn linear_part(&self) -> (QMatrix, Vec<Rational>) {
        let rows: Vec<&SystemRow> = self.rows.iter().filter(|r| r.is_linear()).collect();
        let a = QMatrix::from_rows(rows.iter().map(|r| r.linear.clone()).collect());
        let b = rows.iter().map(|r| -&r.constant).collect();
        (a, b)
    }
}

/// One row per i ≤ j:
/// Σₖ xₖ(g([uₖ,uᵢ]_m,uⱼ) + g(uᵢ,[uₖ,uⱼ]_m)) + ϱᵢⱼ − ς gᵢⱼ = 0.
pub fn assemble_system(pair: &HomogeneousPair, rho: &QMatrix) -> Result<SolitonSystem, SolitonError> {
    let n = pair.n();
    if rho.rows() != n || rho.cols() != n {
        return Err(SolitonError::DimensionMismatch {
            expected: n,
            got: rho.rows().max(rho.cols()),
        });
    }
    let g = pair.metric();
    let e = |i: usize| MVector::basis(n, i);
    let mut rows = Vec::new();
    for i in 0..n {
        for j in i..n {
            let mut row = SystemRow::zero(format!("({},{})", i + 1, j + 1), n);
            for k in 0..n {
                let uk = pair.m_index(k);
                row.linear[k] = g.bilinear(&pair.bracket_m(uk, pair.m_index(i)), &e(j))
                    + g.bilinear(&e(i), &pair.bracket_m(uk, pair.m_index(j)));
            }
            row.linear[n] = -&g[(i, j)];
            row.constant = rho[(i, j)].clone();
            rows.push(row);
        }
    }
    Ok(SolitonSystem {
        id: pair.id().to_string(),
        n,
        provenance: Provenance::Assembled,
        rows,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CertificateRow {
    pub index: usize,
    pub label: String,
    pub coefficient: Rational,
}

/// Rows whose combination with these coefficients reads 0 = 1.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub rows: Vec<CertificateRow>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Consistent,
    Inconsistent,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SolitonClass {
    Shrinking,
    Steady,
    Expanding,
}

impl fmt::Display for SolitonClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SolitonClass::Shrinking => "shrinking",
            SolitonClass::Steady => "steady",
            SolitonClass::Expanding => "expanding",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolitonSolution {
    pub n: usize,
    pub status: Status,
    /// Affine solution set over (x₁..x_n, ς) when consistent.
    pub set: Option<SolutionSet>,
    pub certificate: Option<Certificate>,
    /// Some solution has x = 0.
    pub einstein: bool,
    /// Labels of quadratic rows that were linearized by fixing a
    /// determined unknown.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub linearized: Vec<String>,
}

impl SolitonSolution {
    pub fn is_consistent(&self) -> bool {
        self.status == Status::Consistent
    }

    /// ς when it takes a single value over the whole solution set.
    pub fn sigma_forced(&self) -> Option<Rational> {
        let set = self.set.as_ref()?;
        set.nullspace
            .iter()
            .all(|v| v[self.n].is_zero())
            .then(|| set.particular[self.n].clone())
    }

    /// x when it takes a single value over the whole solution set.
    pub fn x_forced(&self) -> Option<Vec<Rational>> {
        let set = self.set.as_ref()?;
        set.nullspace
            .iter()
            .all(|v| v[..self.n].iter().all(Rational::is_zero))
            .then(|| set.particular[..self.n].to_vec())
    }
}

fn fixed_coordinates(set: &SolutionSet) -> Vec<Option<Rational>> {
    (0..set.particular.len())
        .map(|k| {
            set.nullspace
                .iter()
                .all(|v| v[k].is_zero())
                .then(|| set.particular[k].clone())
        })
        .collect()
}

/// Exact solution set, or a minimal inconsistency certificate. Quadratic
/// rows are linearized by substituting unknowns the linear rows already
/// determine; a row that stays quadratic is an error.
pub fn solve(system: &SolitonSystem) -> Result<SolitonSolution, SolitonError> {
    let n = system.n;
    let mut linear: Vec<(usize, SystemRow)> = system
        .rows
        .iter()
        .enumerate()
        .filter(|(_, r)| r.is_linear())
        .map(|(i, r)| (i, r.clone()))
        .collect();
    let mut pending: Vec<(usize, SystemRow)> = system
        .rows
        .iter()
        .enumerate()
        .filter(|(_, r)| !r.is_linear())
        .map(|(i, r)| (i, r.clone()))
        .collect();
    let mut linearized = Vec::new();
    loop {
        let a = if linear.is_empty() {
            QMatrix::zeros(0, n + 1)
        } else {
            QMatrix::from_rows(linear.iter().map(|(_, r)| r.linear.clone()).collect())
        };
        let b: Vec<Rational> = linear.iter().map(|(_, r)| -&r.constant).collect();
        let set = if linear.is_empty() {
            SolutionSet {
                particular: vec![Rational::zero(); n + 1],
                nullspace: (0..=n).map(|k| MVector::basis(n + 1, k).0).collect(),
            }
        } else {
            match rref_solve(&a, &b)? {
                Solved::Consistent(s) => s,
                Solved::Inconsistent(_) => {
                    let cert = minimal_certificate(&a, &b)?.expect("system is inconsistent");
                    let rows = cert
                        .coefficients
                        .iter()
                        .zip(&linear)
                        .filter(|(c, _)| !c.is_zero())
                        .map(|(c, (idx, r))| CertificateRow {
                            index: *idx,
                            label: r.label.clone(),
                            coefficient: c.clone(),
                        })
                        .collect();
                    return Ok(SolitonSolution {
                        n,
                        status: Status::Inconsistent,
                        set: None,
                        certificate: Some(Certificate { rows }),
                        einstein: false,
                        linearized,
                    });
                }
            }
        };
        if pending.is_empty() {
            let einstein = has_zero_x(&set, n)?;
            return Ok(SolitonSolution {
                n,
                status: Status::Consistent,
                set: Some(set),
                certificate: None,
                einstein,
                linearized,
            });
        }
        let fixed = fixed_coordinates(&set);
        let mut progressed = false;
        let mut still = Vec::new();
        for (idx, row) in pending {
            match linearize(&row, &fixed) {
                Some(lin) => {
                    linearized.push(row.label.clone());
                    linear.push((idx, lin));
                    progressed = true;
                }
                None => still.push((idx, row)),
            }
        }
        if !progressed {
            return Err(SolitonError::Nonlinear(still[0].1.label.clone()));
        }
        pending = still;
    }
}

/// Replace each product z_a z_b by a linear term when one factor is fixed.
fn linearize(row: &SystemRow, fixed: &[Option<Rational>]) -> Option<SystemRow> {
    let mut out = SystemRow {
        quadratic: Vec::new(),
        ..row.clone()
    };
    for (a, b, c) in &row.quadratic {
        if let Some(va) = &fixed[*a] {
            out.linear[*b] += &(c * va);
        } else if let Some(vb) = &fixed[*b] {
            out.linear[*a] += &(c * vb);
        } else {
            return None;
        }
    }
    Some(out)
}

/// Does the affine set meet x = 0?
fn has_zero_x(set: &SolutionSet, n: usize) -> Result<bool, SolitonError> {
    if set.nullspace.is_empty() {
        return Ok(set.particular[..n].iter().all(Rational::is_zero));
    }
    let cols: Vec<Vec<Rational>> = set.nullspace.iter().map(|v| v[..n].to_vec()).collect();
    let a = QMatrix::from_columns(&cols);
    let b: Vec<Rational> = set.particular[..n].iter().map(|x| -x).collect();
    Ok(rref_solve(&a, &b)?.is_consistent())
}

fn in_affine_set(set: &SolutionSet, z: &[Rational]) -> Result<bool, SolitonError> {
    if z.len() != set.particular.len() {
        return Ok(false);
    }
    let diff: Vec<Rational> = z.iter().zip(&set.particular).map(|(a, b)| a - b).collect();
    if set.nullspace.is_empty() {
        return Ok(diff.iter().all(Rational::is_zero));
    }
    let a = QMatrix::from_columns(&set.nullspace);
    Ok(rref_solve(&a, &diff)?.is_consistent())
}

/// Sign of ς at a sample point (x₁..x_n, ς) of the solution set.
pub fn classify(solution: &SolitonSolution, sample: &[Rational]) -> Result<SolitonClass, SolitonError> {
    let set = solution.set.as_ref().ok_or(SolitonError::Inconsistent)?;
    if !in_affine_set(set, sample)? {
        return Err(SolitonError::NotInSolutionSet);
    }
    Ok(match sample[solution.n].signum() {
        1 => SolitonClass::Shrinking,
        0 => SolitonClass::Steady,
        _ => SolitonClass::Expanding,
    })
}

/// Intersection of the solution set with {X : ψ(eⱼ)X = 0 ∀j} (or the
/// documented fixture subspace of a PARTIAL pair). `None` when empty.
pub fn invariant_solutions(
    pair: &HomogeneousPair,
    solution: &SolitonSolution,
) -> Result<Option<SolutionSet>, SolitonError> {
    let set = solution.set.as_ref().ok_or(SolitonError::Inconsistent)?;
    let n = solution.n;
    if pair.r() == 0 {
        return Ok(Some(set.clone()));
    }
    if pair.is_partial() && pair.invariance_fixture().is_none() {
        return Err(SolitonError::NoInvarianceData);
    }
    let w = pair.invariant_subspace()?;
    // Unknowns (t, s): x(p + N t) = W s, i.e. [N_x | −W] (t; s) = −p_x.
    let k = set.nullspace.len();
    let cols: Vec<Vec<Rational>> = set
        .nullspace
        .iter()
        .map(|v| v[..n].to_vec())
        .chain(w.iter().map(|b| b.iter().map(|x| -x).collect()))
        .collect();
    let rhs: Vec<Rational> = set.particular[..n].iter().map(|x| -x).collect();
    if cols.is_empty() {
        return Ok(rhs.iter().all(Rational::is_zero).then(|| set.clone()));
    }
    let a = QMatrix::from_columns(&cols);
    let Solved::Consistent(sol) = rref_solve(&a, &rhs)? else {
        return Ok(None);
    };
    // Map the (t, s) solution set back to z = p + N t.
    let to_z = |t: &[Rational], affine: bool| -> Vec<Rational> {
        let mut z = if affine {
            set.particular.clone()
        } else {
            vec![Rational::zero(); n + 1]
        };
        for (ti, v) in t.iter().zip(&set.nullspace) {
            for (zk, vk) in z.iter_mut().zip(v) {
                *zk += &(ti * vk);
            }
        }
        z
    };
    let particular = to_z(&sol.particular[..k], true);
    let mut dirs: Vec<Vec<Rational>> = sol.nullspace.iter().map(|v| to_z(&v[..k], false)).collect();
    dirs.retain(|d| d.iter().any(|x| !x.is_zero()));
    let nullspace = if dirs.is_empty() {
        Vec::new()
    } else {
        // independent spanning set via the column space
        let m = QMatrix::from_columns(&dirs);
        let (_, pivots) = m.rref();
        pivots.into_iter().map(|p| dirs[p].clone()).collect()
    };
    Ok(Some(SolutionSet { particular, nullspace }))
}
