use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::matrix::QMatrix;
use super::rational::Rational;
use crate::error::ExactError;

/// Univariate polynomial over the rationals, coefficients in ascending
/// degree. The zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| Rational::integer(c)).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: vec![] }
    }

    pub fn constant(c: Rational) -> Self {
        Poly::new(vec![c])
    }

    /// The monomial `t`.
    pub fn t() -> Self {
        Poly::from_i64(&[0, 1])
    }

    /// `t - r`.
    pub fn linear_root(r: &Rational) -> Self {
        Poly::new(vec![-r, Rational::one()])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let lc = self.leading();
        Poly::new(self.coeffs.iter().map(|c| c / &lc).collect())
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        Poly::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new(
            (0..n)
                .map(|i| {
                    let a = self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero);
                    let b = other.coeffs.get(i).cloned().unwrap_or_else(Rational::zero);
                    a + b
                })
                .collect(),
        )
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        Poly::new(out)
    }

    pub fn pow(&self, k: usize) -> Poly {
        (0..k).fold(Poly::constant(Rational::one()), |acc, _| acc.mul(self))
    }

    /// Quotient and remainder; panics on division by zero.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        let dd = divisor.degree().expect("division by zero polynomial");
        let lc = divisor.leading();
        let mut rem = self.coeffs.clone();
        let Some(sd) = self.degree() else {
            return (Poly::zero(), Poly::zero());
        };
        if sd < dd {
            return (Poly::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); sd - dd + 1];
        for k in (0..=sd - dd).rev() {
            let c = &rem[k + dd] / &lc;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                let v = &rem[k + j] - &(&c * dc);
                rem[k + j] = v;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Poly::new(quot), Poly::new(rem))
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * &Rational::integer(i as i64))
                .collect(),
        )
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| &(&acc * x) + c)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64())
    }

    /// Horner evaluation at a square matrix.
    pub fn eval_matrix(&self, m: &QMatrix) -> QMatrix {
        let n = m.rows();
        self.coeffs.iter().rev().fold(QMatrix::zeros(n, n), |acc, c| {
            &(&acc * m) + &QMatrix::scalar(n, c)
        })
    }

    /// Primitive integer multiple with positive leading coefficient.
    pub fn primitive_integer(&self) -> Vec<BigInt> {
        let l = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        let mut ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&l / c.denom()))
            .collect();
        let g = ints.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
        if !g.is_zero() {
            for x in &mut ints {
                *x = &*x / &g;
            }
        }
        if ints.last().is_some_and(|x| x.is_negative()) {
            for x in &mut ints {
                *x = -&*x;
            }
        }
        ints
    }

    fn from_bigints(ints: &[BigInt]) -> Poly {
        Poly::new(ints.iter().cloned().map(Rational::from).collect())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.signum() < 0;
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = i == 0 || !mag.is_one();
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

/// `det(tI − A)` by the Faddeev–LeVerrier recursion.
pub fn char_poly(a: &QMatrix) -> Result<Poly, ExactError> {
    if !a.is_square() {
        return Err(ExactError::NotSquare(a.rows(), a.cols()));
    }
    let n = a.rows();
    let mut coeffs = vec![Rational::zero(); n + 1];
    coeffs[n] = Rational::one();
    let mut m = QMatrix::zeros(n, n);
    for k in 1..=n {
        m = &(a * &m) + &QMatrix::scalar(n, &coeffs[n - k + 1]);
        let am = a * &m;
        coeffs[n - k] = -(am.trace() / Rational::integer(k as i64));
    }
    Ok(Poly::new(coeffs))
}

/// Least-degree monic polynomial annihilating `a`.
pub fn minimal_poly(a: &QMatrix) -> Result<Poly, ExactError> {
    if !a.is_square() {
        return Err(ExactError::NotSquare(a.rows(), a.cols()));
    }
    let n = a.rows();
    let flatten = |m: &QMatrix| -> Vec<Rational> { m.to_rows().into_iter().flatten().collect() };
    let mut powers = vec![flatten(&QMatrix::identity(n))];
    let mut current = QMatrix::identity(n);
    for k in 1..=n.max(1) {
        current = &current * a;
        let target = flatten(&current);
        let basis = QMatrix::from_columns(&powers);
        let rhs: Vec<Rational> = target.iter().map(|x| -x).collect();
        if let super::linsolve::Solved::Consistent(sol) = super::linsolve::rref_solve(&basis, &rhs)? {
            let mut coeffs = sol.particular;
            coeffs.push(Rational::one());
            debug_assert_eq!(coeffs.len(), k + 1);
            return Ok(Poly::new(coeffs));
        }
        powers.push(target);
    }
    unreachable!("Cayley–Hamilton bounds the minimal polynomial degree")
}

/// Where the roots of an irreducible factor sit.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RootInfo {
    /// Degree-one factor with its exact root.
    Rational { root: Rational },
    /// Irreducible quadratic with positive non-square discriminant.
    RealPair {
        discriminant: Rational,
        intervals: Vec<RootInterval>,
    },
    /// Irreducible quadratic with negative discriminant.
    ComplexPair { discriminant: Rational },
    /// Irreducible of degree > 2.
    Higher {
        real_roots: Vec<RootInterval>,
        complex_pairs: usize,
    },
}

/// Half-open isolating interval `(lo, hi]` containing exactly one root of
/// `poly`, or the degenerate interval `lo == hi` when the root is rational.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootInterval {
    pub lo: Rational,
    pub hi: Rational,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Factor {
    /// Monic, irreducible over the rationals.
    pub poly: Poly,
    pub multiplicity: usize,
    pub roots: RootInfo,
}

/// Factor into monic irreducibles over the rationals.
///
/// Rational roots are split off first; the remaining square-free parts are
/// split by Kronecker's method, which is only attempted up to a bounded
/// number of candidate factors (enough for the degree ≤ 8 operators this
/// crate classifies).
pub fn factor_poly(p: &Poly) -> Result<Vec<Factor>, ExactError> {
    if p.is_zero() {
        return Err(ExactError::ZeroPolynomial);
    }
    let mut out: BTreeMap<Vec<Rational>, (Poly, usize)> = BTreeMap::new();
    for (sqf, mult) in squarefree_decomposition(&p.monic()) {
        for irr in split_squarefree(&sqf) {
            let key = irr.coeffs().to_vec();
            out.entry(key).or_insert((irr, 0)).1 += mult;
        }
    }
    let mut factors: Vec<Factor> = out
        .into_values()
        .map(|(poly, multiplicity)| {
            let roots = root_info(&poly);
            Factor {
                poly,
                multiplicity,
                roots,
            }
        })
        .collect();
    factors.sort_by(|a, b| {
        a.poly
            .degree()
            .cmp(&b.poly.degree())
            .then_with(|| cmp_coeffs(a.poly.coeffs(), b.poly.coeffs()))
    });
    Ok(factors)
}

fn cmp_coeffs(a: &[Rational], b: &[Rational]) -> Ordering {
    a.iter()
        .rev()
        .zip(b.iter().rev())
        .map(|(x, y)| x.cmp(y))
        .find(|o| *o != Ordering::Equal)
        .unwrap_or(Ordering::Equal)
}

/// Yun's algorithm; returns monic square-free parts with multiplicities.
fn squarefree_decomposition(p: &Poly) -> Vec<(Poly, usize)> {
    let mut out = Vec::new();
    if p.degree() == Some(0) {
        return out;
    }
    let dp = p.derivative();
    let mut a = p.gcd(&dp);
    let mut b = p.div_rem(&a).0;
    let mut c = dp.div_rem(&a).0;
    let mut d = c.sub(&b.derivative());
    let mut i = 1;
    loop {
        a = b.gcd(&d);
        if a.degree().unwrap_or(0) > 0 {
            out.push((a.monic(), i));
        }
        b = b.div_rem(&a).0;
        if b.degree().unwrap_or(0) == 0 {
            break;
        }
        c = d.div_rem(&a).0;
        d = c.sub(&b.derivative());
        i += 1;
    }
    out
}

fn split_squarefree(p: &Poly) -> Vec<Poly> {
    let mut out = Vec::new();
    let mut rest = p.monic();
    for r in rational_roots(&rest) {
        out.push(Poly::linear_root(&r));
        rest = rest.div_rem(&Poly::linear_root(&r)).0;
    }
    let mut stack = vec![rest];
    while let Some(f) = stack.pop() {
        match f.degree() {
            Some(0) | None => {}
            Some(d) if d <= 3 => out.push(f.monic()),
            Some(4) => match quartic_split(&f) {
                Some((g, h)) => {
                    out.push(g);
                    out.push(h);
                }
                None => out.push(f.monic()),
            },
            Some(_) => match kronecker_split(&f) {
                Some((g, h)) => {
                    stack.push(g);
                    stack.push(h);
                }
                None => out.push(f.monic()),
            },
        }
    }
    out
}

/// Rational roots of a polynomial. A rational root of the primitive integer
/// form has the shape m/aₙ with m an integer, so each real root interval is
/// refined to width 1/aₙ and only the few m/aₙ inside it are tested; no
/// integer factoring is needed.
pub fn rational_roots(p: &Poly) -> Vec<Rational> {
    let mut roots = Vec::new();
    if p.degree().unwrap_or(0) == 0 {
        return roots;
    }
    let mut ints = p.primitive_integer();
    if ints.first().is_some_and(Zero::is_zero) {
        roots.push(Rational::zero());
        while ints.first().is_some_and(Zero::is_zero) {
            ints.remove(0);
        }
    }
    if ints.len() <= 1 {
        return roots;
    }
    let f = Poly::from_bigints(&ints);
    let sqf = f.div_rem(&f.gcd(&f.derivative())).0;
    let an = ints.last().unwrap().abs();
    let width = Rational::from_bigints(BigInt::one(), an.clone());
    let anr = Rational::from(an.clone());
    for iv in isolate_real_roots(&sqf) {
        let iv = iv.refine(&sqf, &width);
        let lo = &iv.lo * &anr;
        let hi = &iv.hi * &anr;
        let mut m = lo.numer().div_floor(lo.denom());
        let top = -((-hi.numer()).div_floor(hi.denom()));
        while m <= top {
            let r = Rational::from_bigints(m.clone(), an.clone());
            if r > iv.lo && r <= iv.hi && f.eval(&r).is_zero() {
                roots.push(r);
            }
            m += 1;
        }
    }
    roots.sort();
    roots
}

/// Exact split of a monic quartic without rational roots into two rational
/// quadratics. With x = y − a/4 the quartic reads y⁴ + py² + qy + r, and a
/// factorization (y² + sy + t)(y² − sy + u) exists iff s = 0, q = 0 and
/// p² − 4r is a rational square, or S = s² > 0 is a rational root of the
/// resolvent S³ + 2pS² + (p² − 4r)S − q² that is a rational square.
fn quartic_split(f: &Poly) -> Option<(Poly, Poly)> {
    let f = f.monic();
    let c = f.coeffs();
    let (a, b, cc, d) = (&c[3], &c[2], &c[1], &c[0]);
    let r_ = |n: i64, m: i64| Rational::new(n, m);
    let a2 = a * a;
    let p = b - &(&r_(3, 8) * &a2);
    let q = &(cc - &(&(a * b) * &r_(1, 2))) + &(&(&a2 * a) * &r_(1, 8));
    let r = &(&(d - &(&(a * cc) * &r_(1, 4))) + &(&(&a2 * b) * &r_(1, 16))) - &(&(&a2 * &a2) * &r_(3, 256));
    let shift = Poly::new(vec![a * &r_(1, 4), Rational::one()]);
    let quad = |s: &Rational, t: &Rational| {
        shift
            .mul(&shift)
            .add(&shift.scale(s))
            .add(&Poly::constant(t.clone()))
    };
    let check = |g: Poly, h: Poly| (g.mul(&h) == f).then_some((g, h));
    let half = r_(1, 2);
    if q.is_zero() {
        if let Some(disc) = (&(&p * &p) - &(&Rational::integer(4) * &r)).sqrt_exact() {
            let t = &(&p - &disc) * &half;
            let u = &(&p + &disc) * &half;
            if let Some(out) = check(quad(&Rational::zero(), &t), quad(&Rational::zero(), &u)) {
                return Some(out);
            }
        }
    }
    let two = Rational::integer(2);
    let resolvent = Poly::new(vec![
        -&(&q * &q),
        &(&p * &p) - &(&Rational::integer(4) * &r),
        &two * &p,
        Rational::one(),
    ]);
    for big_s in rational_roots(&resolvent) {
        if big_s.signum() <= 0 {
            continue;
        }
        let Some(s) = big_s.sqrt_exact() else {
            continue;
        };
        let base = &p + &big_s;
        let q_s = &q / &s;
        let t = &(&base - &q_s) * &half;
        let u = &(&base + &q_s) * &half;
        if let Some(out) = check(quad(&s, &t), quad(&-&s, &u)) {
            return Some(out);
        }
    }
    None
}

/// Divisors of |n| when trial division by d ≤ 10⁵ leaves a cofactor that
/// is 1 or provably prime; `None` otherwise.
fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    const BOUND: u64 = 100_000;
    let mut n = n.abs();
    if n.is_zero() {
        return None;
    }
    let mut primes: Vec<(BigInt, u32)> = Vec::new();
    let mut d = 2u64;
    while d <= BOUND && BigInt::from(d * d) <= n {
        let bd = BigInt::from(d);
        let mut e = 0;
        while (&n % &bd).is_zero() {
            n /= &bd;
            e += 1;
        }
        if e > 0 {
            primes.push((bd, e));
        }
        d += 1;
    }
    if !n.is_one() {
        if n > BigInt::from(BOUND * BOUND) {
            return None;
        }
        primes.push((n, 1));
    }
    let mut out = vec![BigInt::one()];
    for (pr, e) in primes {
        let mut next = Vec::with_capacity(out.len() * (e as usize + 1));
        for x in &out {
            let mut v = x.clone();
            for _ in 0..=e {
                next.push(v.clone());
                v *= &pr;
            }
        }
        out = next;
    }
    out.sort();
    Some(out)
}

const KRONECKER_LIMIT: usize = 200_000;

/// Kronecker's method: find a nontrivial factor of an integer polynomial
/// (no rational roots, degree ≥ 5) by interpolating divisor choices. The
/// search is bounded, so a very large factor may be left unsplit.
fn kronecker_split(p: &Poly) -> Option<(Poly, Poly)> {
    let ints = p.primitive_integer();
    let f = Poly::from_bigints(&ints);
    let deg = f.degree()?;
    let mut points: Vec<(Rational, Vec<BigInt>)> = (-12i64..=12)
        .map(|x| {
            let xr = Rational::integer(x);
            let v = f.eval(&xr);
            (xr, divisors(v.numer()))
        })
        .filter_map(|(x, ds)| Some((x, ds?)))
        .collect();
    points.sort_by_key(|(_, ds)| ds.len());
    for k in 2..=deg / 2 {
        if points.len() < k + 1 {
            return None;
        }
        let chosen = &points[..=k];
        let combos: usize = chosen
            .iter()
            .enumerate()
            .map(|(i, (_, ds))| if i == 0 { ds.len() } else { 2 * ds.len() })
            .try_fold(1usize, |acc, x| acc.checked_mul(x))?;
        if combos > KRONECKER_LIMIT {
            return None;
        }
        let mut idx = vec![0usize; k + 1];
        loop {
            let values: Vec<Rational> = chosen
                .iter()
                .zip(&idx)
                .enumerate()
                .map(|(i, ((_, ds), &j))| {
                    if i == 0 {
                        Rational::from(ds[j].clone())
                    } else {
                        let d = Rational::from(ds[j / 2].clone());
                        if j % 2 == 0 { d } else { -d }
                    }
                })
                .collect();
            let xs: Vec<Rational> = chosen.iter().map(|(x, _)| x.clone()).collect();
            let h = lagrange(&xs, &values);
            if h.degree() == Some(k) && h.coeffs().iter().all(Rational::is_integer) {
                let (quot, rem) = f.div_rem(&h);
                if rem.is_zero() {
                    return Some((h.monic(), quot.monic()));
                }
            }
            // advance mixed-radix counter
            let mut pos = 0;
            loop {
                if pos > k {
                    break;
                }
                let radix = if pos == 0 {
                    chosen[0].1.len()
                } else {
                    2 * chosen[pos].1.len()
                };
                idx[pos] += 1;
                if idx[pos] < radix {
                    break;
                }
                idx[pos] = 0;
                pos += 1;
            }
            if pos > k {
                break;
            }
        }
    }
    None
}

fn lagrange(xs: &[Rational], ys: &[Rational]) -> Poly {
    let mut out = Poly::zero();
    for (i, (xi, yi)) in xs.iter().zip(ys).enumerate() {
        let mut term = Poly::constant(yi.clone());
        for (j, xj) in xs.iter().enumerate() {
            if i != j {
                term = term
                    .mul(&Poly::linear_root(xj))
                    .scale(&(xi - xj).recip());
            }
        }
        out = out.add(&term);
    }
    out
}

fn root_info(p: &Poly) -> RootInfo {
    match p.degree() {
        Some(1) => RootInfo::Rational {
            root: -(&p.coeffs()[0] / &p.coeffs()[1]),
        },
        Some(2) => {
            let (c, b, a) = (&p.coeffs()[0], &p.coeffs()[1], &p.coeffs()[2]);
            let disc = b * b - &(&(&Rational::integer(4) * a) * c);
            if disc.signum() < 0 {
                RootInfo::ComplexPair { discriminant: disc }
            } else {
                RootInfo::RealPair {
                    discriminant: disc,
                    intervals: isolate_real_roots(p),
                }
            }
        }
        _ => {
            let real_roots = isolate_real_roots(p);
            let complex_pairs = (p.degree().unwrap_or(0) - real_roots.len()) / 2;
            RootInfo::Higher {
                real_roots,
                complex_pairs,
            }
        }
    }
}

/// Sturm chain of a square-free polynomial.
/// Members are rescaled by positive constants to primitive integer form,
/// which keeps every sign pattern and the coefficient size in check.
pub fn sturm_chain(p: &Poly) -> Vec<Poly> {
    let primitive = |q: &Poly| {
        let ints = Poly::from_bigints(&q.primitive_integer());
        if ints.leading().signum() == q.leading().signum() {
            ints
        } else {
            ints.scale(&-Rational::one())
        }
    };
    let mut chain = vec![primitive(p), primitive(&p.derivative())];
    loop {
        let n = chain.len();
        let r = chain[n - 2].div_rem(&chain[n - 1]).1;
        if r.is_zero() {
            break;
        }
        chain.push(primitive(&r.scale(&-Rational::one())));
    }
    chain
}

/// Sign of p(u/v) for integer-coefficient p, from the homogeneous form
/// Σ cᵢuⁱvⁿ⁻ⁱ (v > 0), avoiding rational normalization.
fn sign_at(p: &Poly, x: &Rational) -> i8 {
    if !p.coeffs().iter().all(Rational::is_integer) {
        return p.eval(x).signum();
    }
    let (u, v) = (x.numer(), x.denom());
    let mut acc = BigInt::zero();
    let mut vpow = BigInt::one();
    for c in p.coeffs().iter().rev() {
        acc = &acc * u + c.numer() * &vpow;
        vpow *= v;
    }
    if acc.is_zero() {
        0
    } else if acc.is_positive() {
        1
    } else {
        -1
    }
}

fn sign_changes(chain: &[Poly], x: &Rational) -> usize {
    let signs: Vec<i8> = chain
        .iter()
        .map(|p| sign_at(p, x))
        .filter(|&s| s != 0)
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Number of distinct real roots in `(lo, hi]`.
pub fn count_roots(chain: &[Poly], lo: &Rational, hi: &Rational) -> usize {
    sign_changes(chain, lo).saturating_sub(sign_changes(chain, hi))
}

fn cauchy_bound(p: &Poly) -> Rational {
    let lc = p.leading().abs();
    let m = p
        .coeffs()
        .iter()
        .take(p.coeffs().len().saturating_sub(1))
        .map(|c| (c / &lc).abs())
        .max()
        .unwrap_or_else(Rational::zero);
    m + Rational::one()
}

/// Isolating intervals for the distinct real roots of a square-free
/// polynomial, sorted ascending. Each interval is `(lo, hi]` of width at
/// most 1/2 and contains no root of `p` other than its own.
pub fn isolate_real_roots(p: &Poly) -> Vec<RootInterval> {
    let chain = sturm_chain(p);
    let b = cauchy_bound(p);
    let mut out = Vec::new();
    let mut work = vec![(-&b, b)];
    let half = Rational::new(1, 2);
    while let Some((lo, hi)) = work.pop() {
        let n = count_roots(&chain, &lo, &hi);
        if n == 0 {
            continue;
        }
        if n == 1 && &hi - &lo <= half {
            out.push(RootInterval { lo, hi });
            continue;
        }
        let mid = &(&lo + &hi) * &half;
        work.push((lo, mid.clone()));
        work.push((mid, hi));
    }
    out.sort_by(|a, b| a.lo.cmp(&b.lo));
    out
}

impl RootInterval {
    /// Bisect until the width is at most `width`.
    pub fn refine(&self, p: &Poly, width: &Rational) -> RootInterval {
        let chain = sturm_chain(p);
        let (mut lo, mut hi) = (self.lo.clone(), self.hi.clone());
        let half = Rational::new(1, 2);
        while &hi - &lo > *width {
            let mid = &(&lo + &hi) * &half;
            if count_roots(&chain, &lo, &mid) == 1 {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        RootInterval { lo, hi }
    }

    pub fn midpoint_f64(&self) -> f64 {
        (self.lo.to_f64() + self.hi.to_f64()) / 2.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{q, qi};

    fn expand(factors: &[Factor]) -> Poly {
        factors.iter().fold(Poly::constant(qi(1)), |acc, f| {
            acc.mul(&f.poly.pow(f.multiplicity))
        })
    }

    #[test]
    fn char_poly_examples() {
        let d = QMatrix::diag(&[qi(1), qi(2), qi(3), qi(4)]);
        let expected = [1, 2, 3, 4]
            .iter()
            .fold(Poly::constant(qi(1)), |acc, &r| acc.mul(&Poly::linear_root(&qi(r))));
        assert_eq!(char_poly(&d).unwrap(), expected);
        assert_eq!(char_poly(&QMatrix::zeros(4, 4)).unwrap(), Poly::t().pow(4));
        let rot = QMatrix::from_i64(&[&[0, 1], &[-1, 0]]);
        assert_eq!(char_poly(&rot).unwrap(), Poly::from_i64(&[1, 0, 1]));
        assert!(char_poly(&QMatrix::zeros(2, 3)).is_err());
    }

    #[test]
    fn factor_examples() {
        let f = factor_poly(&Poly::t().pow(4)).unwrap();
        assert_eq!(f.len(), 1);
        assert_eq!(f[0].poly, Poly::t());
        assert_eq!(f[0].multiplicity, 4);

        let f = factor_poly(&Poly::from_i64(&[1, 0, 1])).unwrap();
        assert_eq!(f.len(), 1);
        assert!(matches!(f[0].roots, RootInfo::ComplexPair { .. }));

        let f = factor_poly(&Poly::from_i64(&[-2, 0, 1])).unwrap();
        let RootInfo::RealPair { intervals, .. } = &f[0].roots else {
            panic!("expected real pair")
        };
        assert_eq!(intervals.len(), 2);
        assert!(intervals[0].hi <= qi(0) && intervals[1].lo >= qi(0));
        assert!(factor_poly(&Poly::zero()).is_err());
    }

    #[test]
    fn quartic_splits_into_quadratics() {
        // (t^2 + 1)(t^2 - 3) has no rational roots
        let p = Poly::from_i64(&[1, 0, 1]).mul(&Poly::from_i64(&[-3, 0, 1]));
        let f = factor_poly(&p).unwrap();
        assert_eq!(f.len(), 2);
        assert_eq!(expand(&f), p);

        // needs the cubic resolvent: t^4 + 4 = (t^2 + 2t + 2)(t^2 - 2t + 2)
        let p = Poly::from_i64(&[4, 0, 0, 0, 1]);
        let f = factor_poly(&p).unwrap();
        assert_eq!(f.len(), 2);
        assert_eq!(expand(&f), p);

        let p = Poly::from_i64(&[1, 1, 1]).mul(&Poly::from_i64(&[3, -2, 1]));
        assert_eq!(factor_poly(&p).unwrap().len(), 2);

        // irreducible over Q
        assert_eq!(factor_poly(&Poly::from_i64(&[1, 0, 0, 0, 1])).unwrap().len(), 1);
        assert_eq!(factor_poly(&Poly::from_i64(&[-2, 0, 0, 0, 1])).unwrap().len(), 1);
    }

    #[test]
    fn rational_roots_with_large_coefficients() {
        let p = Poly::from_i64(&[-7, 3])
            .mul(&Poly::from_i64(&[17, 1_000_003]))
            .mul(&Poly::from_i64(&[1, 0, 1]));
        let f = factor_poly(&p).unwrap();
        assert_eq!(f.len(), 3);
        assert_eq!(expand(&f), p.monic());
        let roots: Vec<Rational> = f
            .iter()
            .filter(|x| x.poly.degree() == Some(1))
            .map(|x| -&x.poly.coeffs()[0])
            .collect();
        assert!(roots.contains(&q(7, 3)));
        assert!(roots.contains(&q(-17, 1_000_003)));
    }

    #[test]
    fn mixed_multiplicities_reexpand() {
        let p = Poly::linear_root(&q(1, 2))
            .pow(2)
            .mul(&Poly::from_i64(&[1, 0, 1]))
            .mul(&Poly::linear_root(&qi(-3)))
            .scale(&qi(6));
        let f = factor_poly(&p).unwrap();
        assert_eq!(expand(&f), p.monic());
    }

    #[test]
    fn minimal_poly_examples() {
        assert_eq!(minimal_poly(&QMatrix::zeros(4, 4)).unwrap(), Poly::t());
        let mut n = QMatrix::zeros(4, 4);
        n[(0, 1)] = qi(1);
        assert_eq!(minimal_poly(&n).unwrap(), Poly::t().pow(2));
        assert_eq!(
            minimal_poly(&QMatrix::scalar(3, &qi(2))).unwrap(),
            Poly::linear_root(&qi(2))
        );
    }

    #[test]
    fn display() {
        assert_eq!(Poly::from_i64(&[1, 0, -1, 2]).to_string(), "2t^3 - t^2 + 1");
        assert_eq!(Poly::new(vec![q(-1, 2), qi(1)]).to_string(), "t - 1/2");
    }
}
