//! Helpers shared by the integration tests: a Christoffel-symbol curvature
//! oracle for metric Lie algebras, random algebras that satisfy Jacobi by
//! construction, and the structural identities every full pair must obey.
#![allow(dead_code)]

use nomizu::algebra::{HomogeneousPair, PairBuilder};
use nomizu::exact::{char_poly, qi, QMatrix, Rational};
use nomizu::geometry::curvature_bundle;
use nomizu::soliton::assemble_system;
use rand::Rng;

/// c[i][j][k]: component k of [u_i, u_j].
pub type Consts = Vec<Vec<Vec<Rational>>>;

fn zero() -> Rational {
    Rational::zero()
}

pub fn consts_of(pair: &HomogeneousPair) -> Consts {
    assert_eq!(pair.r(), 0, "structure constants only for Lie algebras");
    let n = pair.n();
    (0..n)
        .map(|i| (0..n).map(|j| pair.bracket_basis(i, j).to_vec()).collect())
        .collect()
}

/// Gauss-Jordan inverse over the rationals.
pub fn invert(g: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let n = g.len();
    let mut a: Vec<Vec<Rational>> = g
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Rational::one() } else { zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let p = (col..n).find(|&r| !a[r][col].is_zero()).expect("singular metric");
        a.swap(col, p);
        let inv = a[col][col].recip();
        for v in a[col].iter_mut() {
            *v = &*v * &inv;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in 0..2 * n {
                    let d = &f * &a[col][c];
                    a[r][c] = &a[r][c] - &d;
                }
            }
        }
    }
    a.into_iter().map(|r| r[n..].to_vec()).collect()
}

/// Levi-Civita data of a left-invariant metric computed from the Koszul
/// formula 2g(∇_X Y, Z) = g([X,Y],Z) − g([Y,Z],X) + g([Z,X],Y).
pub struct Koszul {
    pub n: usize,
    /// nabla[i][j][k]: component k of ∇_{u_i} u_j.
    pub nabla: Vec<Vec<Vec<Rational>>>,
    /// r[i][j][k][m]: component m of R(u_i,u_j)u_k.
    pub r: Vec<Vec<Vec<Vec<Rational>>>>,
    pub g: Vec<Vec<Rational>>,
}

impl Koszul {
    pub fn new(c: &Consts, g: &QMatrix) -> Self {
        let n = c.len();
        let g: Vec<Vec<Rational>> = g.to_rows();
        let ginv = invert(&g);
        let half = Rational::new(1, 2);
        // g(v, u_l) for a component vector v
        let low = |v: &[Rational], l: usize| -> Rational { (0..n).map(|m| &v[m] * &g[m][l]).sum() };
        let mut nabla = vec![vec![vec![zero(); n]; n]; n];
        for i in 0..n {
            for j in 0..n {
                let lowered: Vec<Rational> = (0..n)
                    .map(|l| &half * &(low(&c[i][j], l) - low(&c[j][l], i) + low(&c[l][i], j)))
                    .collect();
                for k in 0..n {
                    nabla[i][j][k] = (0..n).map(|l| &ginv[k][l] * &lowered[l]).sum();
                }
            }
        }
        // ∇_{u_i} applied to a constant-coefficient field
        let apply = |i: usize, v: &[Rational]| -> Vec<Rational> {
            (0..n)
                .map(|k| (0..n).map(|m| &v[m] * &nabla[i][m][k]).sum())
                .collect()
        };
        let mut r = vec![vec![vec![vec![zero(); n]; n]; n]; n];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let a = apply(i, &nabla[j][k]);
                    let b = apply(j, &nabla[i][k]);
                    // ∇_{[u_i,u_j]} u_k
                    let cc: Vec<Rational> = (0..n)
                        .map(|m| (0..n).map(|p| &c[i][j][p] * &nabla[p][k][m]).sum())
                        .collect();
                    r[i][j][k] = (0..n).map(|m| &(&a[m] - &b[m]) - &cc[m]).collect();
                }
            }
        }
        Koszul { n, nabla, r, g }
    }

    /// ϱ(u_j,u_k) = tr(z ↦ R(z,u_j)u_k).
    pub fn ricci(&self) -> QMatrix {
        let n = self.n;
        QMatrix::from_fn(n, n, |j, k| (0..n).map(|i| self.r[i][j][k][i].clone()).sum())
    }

    /// g(R(u_i,u_j)u_k, u_l).
    pub fn riem(&self, i: usize, j: usize, k: usize, l: usize) -> Rational {
        (0..self.n).map(|m| &self.r[i][j][k][m] * &self.g[m][l]).sum()
    }

    /// Weyl components W_{ijkl}, flattened over (i, j, k, l).
    pub fn weyl(&self) -> Vec<Rational> {
        let n = self.n;
        let rho = self.ricci();
        let ginv = invert(&self.g);
        let tau: Rational = (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .map(|(a, b)| &ginv[a][b] * &rho[(a, b)])
            .sum();
        let nn = Rational::integer(n as i64);
        let two = Rational::integer(2);
        let shift = &tau / &(&two * &(&nn - &Rational::one()));
        let inv = (&nn - &two).recip();
        let p = |a: usize, b: usize| &(&rho[(a, b)] - &(&shift * &self.g[a][b])) * &inv;
        let g = &self.g;
        let mut out = Vec::with_capacity(n.pow(4));
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        let kn = &(&(&p(i, l) * &g[j][k]) + &(&p(j, k) * &g[i][l]))
                            - &(&(&p(i, k) * &g[j][l]) + &(&p(j, l) * &g[i][k]));
                        out.push(&self.riem(i, j, k, l) - &kn);
                    }
                }
            }
        }
        out
    }
}

/// Jacobi residual [[a,b],c] + [[b,c],a] + [[c,a],b] computed from the
/// structure constants.
pub fn jacobi_holds(c: &Consts) -> bool {
    let n = c.len();
    let br = |x: &[Rational], y: &[Rational]| -> Vec<Rational> {
        let mut out = vec![zero(); n];
        for i in 0..n {
            for j in 0..n {
                let f = &x[i] * &y[j];
                if f.is_zero() {
                    continue;
                }
                for k in 0..n {
                    out[k] += &(&f * &c[i][j][k]);
                }
            }
        }
        out
    };
    let e = |i: usize| -> Vec<Rational> { (0..n).map(|k| if k == i { Rational::one() } else { zero() }).collect() };
    for a in 0..n {
        for b in 0..n {
            for d in 0..n {
                let t1 = br(&br(&e(a), &e(b)), &e(d));
                let t2 = br(&br(&e(b), &e(d)), &e(a));
                let t3 = br(&br(&e(d), &e(a)), &e(b));
                if (0..n).any(|k| !(&(&t1[k] + &t2[k]) + &t3[k]).is_zero()) {
                    return false;
                }
            }
        }
    }
    true
}

fn random_int_matrix<R: Rng>(rng: &mut R, n: usize, lo: i64, hi: i64) -> QMatrix {
    QMatrix::from_fn(n, n, |_, _| qi(rng.gen_range(lo..=hi)))
}

/// Symmetric nondegenerate integer metric with small entries.
pub fn random_metric<R: Rng>(rng: &mut R, n: usize) -> QMatrix {
    loop {
        let a = random_int_matrix(rng, n, -2, 2);
        let g = &a + &a.transpose();
        let g = QMatrix::from_fn(n, n, |i, j| {
            if i == j {
                &g[(i, j)] / &qi(2)
            } else {
                g[(i, j)].clone()
            }
        });
        if !g.det().unwrap().is_zero() {
            return g;
        }
    }
}

/// Invertible change of basis with entries in {−1, 0, 1}.
pub fn random_basis<R: Rng>(rng: &mut R, n: usize) -> QMatrix {
    loop {
        let p = random_int_matrix(rng, n, -1, 1);
        if !p.det().unwrap().is_zero() {
            return p;
        }
    }
}

/// Structure constants in the basis f_a = Σ_b P_{ba} u_b.
pub fn change_basis(c: &Consts, p: &QMatrix) -> Consts {
    let n = c.len();
    let pinv = invert(&p.to_rows());
    let mut out = vec![vec![vec![zero(); n]; n]; n];
    for a in 0..n {
        for b in 0..n {
            let mut old = vec![zero(); n];
            for i in 0..n {
                for j in 0..n {
                    let f = &p[(i, a)] * &p[(j, b)];
                    if f.is_zero() {
                        continue;
                    }
                    for m in 0..n {
                        old[m] += &(&f * &c[i][j][m]);
                    }
                }
            }
            out[a][b] = (0..n).map(|k| (0..n).map(|m| &pinv[k][m] * &old[m]).sum()).collect();
        }
    }
    out
}

fn consts_from(n: usize, rel: &[(usize, usize, Vec<i64>)]) -> Consts {
    let mut c = vec![vec![vec![zero(); n]; n]; n];
    for (i, j, v) in rel {
        let v: Vec<Rational> = v.iter().map(|&x| qi(x)).collect();
        c[*j][*i] = v.iter().map(|x| -x).collect();
        c[*i][*j] = v;
    }
    c
}

pub fn build(id: &str, c: &Consts, g: QMatrix) -> HomogeneousPair {
    let n = c.len();
    let mut b = PairBuilder::lie_algebra(n).id(id).name(id).metric(g);
    for i in 0..n {
        for j in i + 1..n {
            if c[i][j].iter().any(|x| !x.is_zero()) {
                b = b.bracket_mm(i, j, c[i][j].clone());
            }
        }
    }
    b.build().expect("random algebra is valid")
}

/// A random metric Lie algebra of dimension 3 or 4. Families: semidirect
/// products R ⋉_A R^{n−1}, su(2), sl(2), Heisenberg (each optionally ⊕ R) and
/// the real hyperbolic solvable model, all in a random basis. Some carry the
/// transported bi-invariant or hyperbolic metric, which is Einstein.
pub fn random_algebra<R: Rng>(rng: &mut R, id: &str) -> HomogeneousPair {
    let n = if rng.gen_bool(0.5) { 3 } else { 4 };
    let kind = rng.gen_range(0..5);
    let (c, einstein): (Consts, Option<QMatrix>) = match kind {
        0 => {
            let a = random_int_matrix(rng, n - 1, -2, 2);
            let mut c = vec![vec![vec![zero(); n]; n]; n];
            for i in 1..n {
                let v: Vec<Rational> = (0..n)
                    .map(|k| if k == 0 { zero() } else { a[(k - 1, i - 1)].clone() })
                    .collect();
                c[i][0] = v.iter().map(|x| -x).collect();
                c[0][i] = v;
            }
            (c, None)
        }
        1 => {
            let c = consts_from(n, &[(0, 1, pad(&[0, 0, 1], n)), (1, 2, pad(&[1, 0, 0], n)), (2, 0, pad(&[0, 1, 0], n))]);
            let g = (n == 3).then(|| QMatrix::identity(3));
            (c, g)
        }
        2 => {
            // h, e, f with [h,e] = 2e, [h,f] = −2f, [e,f] = h
            let c = consts_from(n, &[(0, 1, pad(&[0, 2, 0], n)), (0, 2, pad(&[0, 0, -2], n)), (1, 2, pad(&[1, 0, 0], n))]);
            let g = (n == 3).then(|| QMatrix::from_i64(&[&[2, 0, 0], &[0, 0, 1], &[0, 1, 0]]));
            (c, g)
        }
        3 => (consts_from(n, &[(0, 1, pad(&[0, 0, 1], n))]), None),
        _ => {
            let rel: Vec<(usize, usize, Vec<i64>)> = (1..n)
                .map(|i| {
                    let mut v = vec![0; n];
                    v[i] = 1;
                    (0, i, v)
                })
                .collect();
            (consts_from(n, &rel), Some(QMatrix::identity(n)))
        }
    };
    let p = random_basis(rng, n);
    let c = change_basis(&c, &p);
    let g = match einstein {
        Some(g0) if rng.gen_bool(0.6) => {
            let s = qi(rng.gen_range(1..=3) * if rng.gen_bool(0.5) { 1 } else { -1 });
            (&(&p.transpose() * &g0) * &p).scale(&s)
        }
        _ => random_metric(rng, n),
    };
    build(id, &c, g)
}

fn pad(v: &[i64], n: usize) -> Vec<i64> {
    let mut out = v.to_vec();
    out.resize(n, 0);
    out
}

/// Every identity a full metric Lie algebra or reductive pair must satisfy.
/// Returns the name of the first failing identity.
pub fn structural_identities(pair: &HomogeneousPair) -> Result<(), String> {
    let n = pair.n();
    if !pair.jacobi_check().is_empty() {
        return Err("jacobi".into());
    }
    if pair.r() == 0 && !jacobi_holds(&consts_of(pair)) {
        return Err("jacobi (structure constants)".into());
    }
    if !pair.metric_invariance_check().map_err(|e| e.to_string())?.invariant {
        return Err("metric invariance".into());
    }
    let g = pair.metric().clone();
    let (lambda, b) = curvature_bundle(pair).map_err(|e| e.to_string())?;
    for m in &lambda.matrices {
        if !(&(&g * m) + &(&m.transpose() * &g)).is_zero() {
            return Err("Λ skew-symmetry".into());
        }
    }
    for i in 0..n {
        for j in 0..n {
            let lhs: Vec<Rational> = lambda
                .on_m(i)
                .column(j)
                .iter()
                .zip(lambda.on_m(j).column(i))
                .map(|(a, b)| a - &b)
                .collect();
            if lhs != pair.bracket_m(pair.m_index(i), pair.m_index(j)).0 {
                return Err(format!("torsion recovery at ({i},{j})"));
            }
        }
    }
    let r = &b.r;
    let riem = |i: usize, j: usize, k: usize, l: usize| -> Rational { g.bilinear(&r[i][j].column(k), &unit(n, l)) };
    for i in 0..n {
        for j in 0..n {
            if r[i][j] != -&r[j][i] {
                return Err("R antisymmetry".into());
            }
            for k in 0..n {
                let s: Vec<Rational> = (0..n)
                    .map(|m| &(&r[i][j][(m, k)] + &r[j][k][(m, i)]) + &r[k][i][(m, j)])
                    .collect();
                if s.iter().any(|x| !x.is_zero()) {
                    return Err("first Bianchi".into());
                }
                for l in 0..n {
                    if riem(i, j, k, l) != riem(k, l, i, j) {
                        return Err("pair symmetry".into());
                    }
                }
            }
        }
    }
    if !b.ricci.is_symmetric() {
        return Err("ϱ symmetry".into());
    }
    let cp = char_poly(&b.q).map_err(|e| e.to_string())?;
    if !cp.eval_matrix(&b.q).is_zero() {
        return Err("Cayley–Hamilton".into());
    }
    if let Some(w) = &b.weyl {
        let ginv = invert(&g.to_rows());
        let idx = |i: usize, j: usize, k: usize, l: usize| ((i * n + j) * n + k) * n + l;
        for a in 0..n {
            for c in 0..n {
                let t1: Rational = (0..n)
                    .flat_map(|i| (0..n).map(move |k| (i, k)))
                    .map(|(i, k)| &ginv[i][k] * &w[idx(i, a, k, c)])
                    .sum();
                let t2: Rational = (0..n)
                    .flat_map(|i| (0..n).map(move |l| (i, l)))
                    .map(|(i, l)| &ginv[i][l] * &w[idx(i, a, c, l)])
                    .sum();
                if !t1.is_zero() || !t2.is_zero() {
                    return Err("Weyl trace".into());
                }
            }
        }
    }
    for s in [qi(2), qi(-3), Rational::new(1, 5)] {
        let scaled = pair.with_metric(g.scale(&s)).map_err(|e| e.to_string())?;
        let (l2, b2) = curvature_bundle(&scaled).map_err(|e| e.to_string())?;
        if l2 != lambda || b2.r != b.r || b2.ricci != b.ricci {
            return Err("metric scaling".into());
        }
        if let (Some(w), Some(w2)) = (&b.weyl, &b2.weyl) {
            if w.iter().zip(w2).any(|(x, y)| &(x * &s) != y) {
                return Err("Weyl scaling".into());
            }
        }
    }
    if let Some(c) = einstein_constant(&b.ricci, &g) {
        let sys = assemble_system(pair, &b.ricci).map_err(|e| e.to_string())?;
        let mut z = vec![zero(); n + 1];
        z[n] = c;
        if !sys.is_satisfied_by(&z) {
            return Err("Einstein implies (0, c)".into());
        }
    }
    Ok(())
}

fn unit(n: usize, l: usize) -> Vec<Rational> {
    (0..n).map(|k| if k == l { Rational::one() } else { zero() }).collect()
}

/// c with ϱ = c·g, if any.
pub fn einstein_constant(rho: &QMatrix, g: &QMatrix) -> Option<Rational> {
    let n = g.rows();
    let (i, j) = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .find(|&(i, j)| !g[(i, j)].is_zero())?;
    let c = &rho[(i, j)] / &g[(i, j)];
    (rho == &g.scale(&c)).then_some(c)
}
