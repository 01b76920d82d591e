//! Invariant Levi-Civita connection and its curvature.

use serde::{Deserialize, Serialize};

use crate::algebra::{HomogeneousPair, MVector};
use crate::error::{AlgebraError, GeometryError};
use crate::exact::{QMatrix, Rational};

/// Λ(x) ∈ gl(m) for every basis element x of g, indexed globally
/// (e's first). Column j of Λ(x) is Λ(x)u_j.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NomizuOperator {
    pub r: usize,
    pub n: usize,
    pub matrices: Vec<QMatrix>,
}

impl NomizuOperator {
    /// Λ(u_{i+1}).
    pub fn on_m(&self, i: usize) -> &QMatrix {
        &self.matrices[self.r + i]
    }

    /// Λ(e_{j+1}), which equals ψ(e_{j+1}).
    pub fn on_h(&self, j: usize) -> &QMatrix {
        &self.matrices[j]
    }

    /// Λ of an arbitrary g-vector.
    pub fn apply(&self, x: &[Rational]) -> QMatrix {
        let mut out = QMatrix::zeros(self.n, self.n);
        for (c, m) in x.iter().zip(&self.matrices) {
            if !c.is_zero() {
                out = &out + &m.scale(c);
            }
        }
        out
    }

    /// The m-part Λ(u_i)u_j − Λ(u_j)u_i, which equals [u_i,u_j]_m.
    pub fn brackets_from_nomizu(&self, i: usize, j: usize) -> MVector {
        brackets_from_nomizu(&self.matrices[self.r..], i, j)
    }
}

/// Torsion recovery from the m-matrices Λ(u₁)..Λ(u_n) alone.
pub fn brackets_from_nomizu(lambda_m: &[QMatrix], i: usize, j: usize) -> MVector {
    let a = lambda_m[i].column(j);
    let b = lambda_m[j].column(i);
    MVector(a.iter().zip(&b).map(|(x, y)| x - y).collect())
}

fn require_full(pair: &HomogeneousPair) -> Result<(), GeometryError> {
    if pair.is_partial() {
        Err(AlgebraError::Partial(pair.id().to_string()).into())
    } else {
        Ok(())
    }
}

/// Λ(x)y = ½[x,y]_m + v(x,y) with
/// 2g(v(x,y),z) = g(x_m,[z,y]_m) + g(y_m,[z,x]_m).
pub fn nomizu(pair: &HomogeneousPair) -> Result<NomizuOperator, GeometryError> {
    require_full(pair)?;
    let (r, n) = (pair.r(), pair.n());
    let g = pair.metric();
    let ginv = g.inverse()?;
    let half = Rational::new(1, 2);
    let m_part = |a: usize| -> Vec<Rational> {
        let mut v = vec![Rational::zero(); n];
        if a >= r {
            v[a - r] = Rational::one();
        }
        v
    };
    let matrices = (0..r + n)
        .map(|a| {
            let xm = m_part(a);
            let cols: Vec<Vec<Rational>> = (0..n)
                .map(|j| {
                    let b = r + j;
                    let ym = m_part(b);
                    // w_k = g(x_m,[u_k,y]_m) + g(y_m,[u_k,x]_m), so v = ½ g⁻¹ w
                    let w: Vec<Rational> = (0..n)
                        .map(|k| {
                            let z = r + k;
                            g.bilinear(&xm, &pair.bracket_m(z, b))
                                + g.bilinear(&ym, &pair.bracket_m(z, a))
                        })
                        .collect();
                    let v = ginv.mul_vec(&w);
                    pair.bracket_m(a, b)
                        .iter()
                        .zip(&v)
                        .map(|(br, vk)| &half * &(br + vk))
                        .collect()
                })
                .collect();
            QMatrix::from_columns(&cols)
        })
        .collect();
    Ok(NomizuOperator { r, n, matrices })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CurvatureBundle {
    /// `r[i][j]` = R(u_i, u_j) as an endomorphism of m.
    pub r: Vec<Vec<QMatrix>>,
    pub ricci: QMatrix,
    pub q: QMatrix,
    pub tau: Rational,
    /// W_{ijkl}, flattened row-major over (i, j, k, l); `None` when n < 4.
    pub weyl: Option<Vec<Rational>>,
}

/// R(u_i,u_j) = [Λ(u_i),Λ(u_j)] − Λ([u_i,u_j]) for all i, j.
pub fn curvature(
    pair: &HomogeneousPair,
    lambda: &NomizuOperator,
) -> Result<Vec<Vec<QMatrix>>, GeometryError> {
    require_full(pair)?;
    let n = pair.n();
    let mut out = vec![vec![QMatrix::zeros(n, n); n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let br = pair.bracket_basis(pair.m_index(i), pair.m_index(j));
            let rij = &lambda.on_m(i).commutator(lambda.on_m(j)) - &lambda.apply(br);
            out[j][i] = -&rij;
            out[i][j] = rij;
        }
    }
    Ok(out)
}

/// ϱ(u_i,u_j) = tr(z ↦ R(z,u_i)u_j).
pub fn ricci(r: &[Vec<QMatrix>]) -> QMatrix {
    let n = r.len();
    QMatrix::from_fn(n, n, |i, j| (0..n).map(|k| r[k][i][(k, j)].clone()).sum())
}

/// Q = g⁻¹ϱ.
pub fn ricci_operator(pair: &HomogeneousPair, ricci: &QMatrix) -> Result<QMatrix, GeometryError> {
    Ok(&pair.metric().inverse()? * ricci)
}

pub fn scalar_curvature(pair: &HomogeneousPair, ricci: &QMatrix) -> Result<Rational, GeometryError> {
    Ok(ricci_operator(pair, ricci)?.trace())
}

/// Riem_{ijkl} = g(R(u_i,u_j)u_k, u_l), flattened.
pub fn riemann_lowered(g: &QMatrix, r: &[Vec<QMatrix>]) -> Vec<Rational> {
    let n = r.len();
    let mut out = Vec::with_capacity(n.pow(4));
    for i in 0..n {
        for j in 0..n {
            let gr = &g.transpose() * &r[i][j];
            for k in 0..n {
                for l in 0..n {
                    // g(R u_k, u_l) = (gᵗ R)_{lk}
                    out.push(gr[(l, k)].clone());
                }
            }
        }
    }
    out
}

/// W = Riem − P ∧ g with Schouten P = (ϱ − τ/(2(n−1)) g)/(n−2).
pub fn weyl(
    pair: &HomogeneousPair,
    r: &[Vec<QMatrix>],
    ricci: &QMatrix,
    tau: &Rational,
) -> Result<Vec<Rational>, GeometryError> {
    let n = pair.n();
    if n < 4 {
        return Err(GeometryError::WeylDimension(n));
    }
    let g = pair.metric();
    let nn = Rational::integer(n as i64);
    let two = Rational::integer(2);
    let c = tau / &(&two * &(&nn - &Rational::one()));
    let p = (ricci - &g.scale(&c)).scale(&(&nn - &two).recip());
    let riem = riemann_lowered(g, r);
    let idx = |i: usize, j: usize, k: usize, l: usize| ((i * n + j) * n + k) * n + l;
    let mut w = riem;
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    let kn = &p[(i, l)] * &g[(j, k)] + &p[(j, k)] * &g[(i, l)]
                        - &p[(i, k)] * &g[(j, l)]
                        - &p[(j, l)] * &g[(i, k)];
                    w[idx(i, j, k, l)] -= &kn;
                }
            }
        }
    }
    Ok(w)
}

/// Full pipeline: Λ, R, ϱ, Q, τ and (for n ≥ 4) W.
pub fn curvature_bundle(pair: &HomogeneousPair) -> Result<(NomizuOperator, CurvatureBundle), GeometryError> {
    let lambda = nomizu(pair)?;
    let r = curvature(pair, &lambda)?;
    let ricci = ricci(&r);
    let q = ricci_operator(pair, &ricci)?;
    let tau = q.trace();
    let weyl = if pair.n() >= 4 {
        Some(weyl(pair, &r, &ricci, &tau)?)
    } else {
        None
    };
    Ok((
        lambda,
        CurvatureBundle {
            r,
            ricci,
            q,
            tau,
            weyl,
        },
    ))
}

/// Weyl criterion for n ≥ 4, Cotton criterion for n = 3; dimensions ≤ 2 are
/// always conformally flat.
pub fn is_conformally_flat(pair: &HomogeneousPair) -> Result<bool, GeometryError> {
    match pair.n() {
        0..=2 => Ok(true),
        3 => Ok(cotton_check(pair)?.conformally_flat),
        _ => {
            let (_, b) = curvature_bundle(pair)?;
            Ok(b.weyl.expect("n >= 4").iter().all(Rational::is_zero))
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CottonReport {
    pub conformally_flat: bool,
    /// C_{ijk} = ∇_iϱ_jk − ∇_jϱ_ik, flattened over (i, j, k).
    pub components: Vec<Rational>,
}

/// ∇_iϱ_jk − ∇_jϱ_ik = 0 with ∇ evaluated through Λ; τ is constant on a
/// homogeneous space so the scalar-gradient terms drop.
pub fn cotton_check(pair: &HomogeneousPair) -> Result<CottonReport, GeometryError> {
    let n = pair.n();
    if n != 3 {
        return Err(GeometryError::CottonDimension(n));
    }
    let lambda = nomizu(pair)?;
    let rho = ricci(&curvature(pair, &lambda)?);
    // (∇_iϱ)_jk = −ϱ(Λ_i u_j, u_k) − ϱ(u_j, Λ_i u_k)
    let nabla: Vec<QMatrix> = (0..n)
        .map(|i| {
            let l = lambda.on_m(i);
            -&(&(&l.transpose() * &rho) + &(&rho * l))
        })
        .collect();
    let mut components = Vec::with_capacity(n * n * n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                components.push(&nabla[i][(j, k)] - &nabla[j][(i, k)]);
            }
        }
    }
    Ok(CottonReport {
        conformally_flat: components.iter().all(Rational::is_zero),
        components,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{samples, PairBuilder};
    use crate::exact::{q, qi};

    #[test]
    fn abelian_is_flat() {
        let p = samples::abelian(QMatrix::diag(&[qi(1), qi(1), qi(1), qi(-1)]));
        let (l, b) = curvature_bundle(&p).unwrap();
        assert!(l.matrices.iter().all(QMatrix::is_zero));
        assert!(b.ricci.is_zero() && b.q.is_zero() && b.tau.is_zero());
        assert!(b.weyl.unwrap().iter().all(Rational::is_zero));
        assert!(is_conformally_flat(&p).unwrap());
        assert!(cotton_check(&samples::abelian(QMatrix::identity(3))).unwrap().conformally_flat);
    }

    #[test]
    fn su2_is_round() {
        let p = samples::su2();
        let (_, b) = curvature_bundle(&p).unwrap();
        assert_eq!(b.ricci, QMatrix::scalar(3, &q(1, 2)));
        assert!(cotton_check(&p).unwrap().conformally_flat);
    }

    #[test]
    fn heisenberg_cotton() {
        let p = samples::heisenberg();
        let (_, b) = curvature_bundle(&p).unwrap();
        assert_eq!(b.ricci, QMatrix::diag(&[q(-1, 2), q(-1, 2), q(1, 2)]));
        let c = cotton_check(&p).unwrap();
        assert!(!c.conformally_flat);
        let at = |i: usize, j: usize, k: usize| c.components[(i * 3 + j) * 3 + k].clone();
        assert_eq!(at(0, 1, 2), qi(-1));
        assert_eq!(at(0, 2, 1), q(-1, 2));
        assert_eq!(at(1, 0, 2), qi(1));
    }

    #[test]
    fn hyperbolic_is_einstein() {
        let (_, b) = curvature_bundle(&samples::hyperbolic4()).unwrap();
        assert_eq!(b.ricci, QMatrix::scalar(4, &qi(-3)));
        assert_eq!(b.tau, qi(-12));
    }

    #[test]
    fn dimension_errors() {
        let p = samples::heisenberg();
        assert!(matches!(cotton_check(&samples::su2_plus_r()), Err(GeometryError::CottonDimension(4))));
        let (_, b) = curvature_bundle(&p).unwrap();
        assert!(b.weyl.is_none());
        assert!(matches!(
            weyl(&p, &b.r, &b.ricci, &b.tau),
            Err(GeometryError::WeylDimension(3))
        ));
    }

    #[test]
    fn isotropy_part_of_nomizu_is_psi() {
        let p = samples::so2_toy();
        let l = nomizu(&p).unwrap();
        assert_eq!(l.on_h(0), &p.isotropy_matrix(0).unwrap());
    }

    #[test]
    fn partial_pairs_are_refused() {
        let p = PairBuilder::new(1, 2).partial(None).build().unwrap();
        assert!(matches!(nomizu(&p), Err(GeometryError::Algebra(AlgebraError::Partial(_)))));
    }
}
