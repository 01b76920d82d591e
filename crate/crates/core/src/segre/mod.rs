//! Segre classification of a g-self-adjoint operator.

pub mod symbol;

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::error::{ExactError, SegreError};
use crate::exact::{char_poly, factor_poly, Factor, Poly, QMatrix, Rational, RootInfo, RootInterval};

pub use crate::exact::minimal_poly;
pub use symbol::{is_degenerate, SegreSymbol, SegreToken, TABLE_SYMBOLS};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BlockKind {
    /// Size-1 block on the majority-sign side of g.
    Spacelike,
    /// Size-1 block on the minority-sign side of g.
    Timelike,
    /// Jordan block of size ≥ 2 for a real eigenvalue.
    Null,
    /// Real Jordan block for a complex-conjugate pair.
    Complex,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Block {
    pub size: usize,
    pub kind: BlockKind,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Eigenvalue {
    Rational {
        value: Rational,
    },
    /// Irrational real root of `factor`, isolated in `interval`.
    RealRoot {
        factor: Poly,
        interval: RootInterval,
        approx: f64,
    },
    /// The `index`-th conjugate pair of non-real roots of `factor`.
    ComplexPair {
        factor: Poly,
        index: usize,
        approx: Option<(f64, f64)>,
    },
}

impl Eigenvalue {
    fn approx_real(&self) -> f64 {
        match self {
            Eigenvalue::Rational { value } => value.to_f64(),
            Eigenvalue::RealRoot { approx, .. } => *approx,
            Eigenvalue::ComplexPair { .. } => f64::INFINITY,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EigenGroup {
    pub eigenvalue: Eigenvalue,
    pub blocks: Vec<Block>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SegreType {
    pub symbol: SegreSymbol,
    /// Groups in rendered order.
    pub groups: Vec<EigenGroup>,
    /// Token index of the comma, if any.
    pub causal_split: Option<usize>,
    /// Set when an irreducible factor of degree > 2 occurs; the structure is
    /// still exact, only the `approx` eigenvalue values are floating point.
    pub numeric_fallback: bool,
    pub char_poly: Poly,
    pub min_poly: Poly,
}

impl SegreType {
    pub fn is_degenerate(&self) -> bool {
        self.groups.iter().any(|g| g.blocks.len() > 1)
    }

    /// Single eigenvalue with only size-1 blocks, i.e. Q is scalar.
    pub fn is_einstein(&self) -> bool {
        self.groups.len() == 1 && self.groups[0].blocks.iter().all(|b| b.size == 1)
    }

    /// Flattened (group id, block) list in rendered order.
    pub fn blocks(&self) -> Vec<(usize, &Block)> {
        self.groups
            .iter()
            .enumerate()
            .flat_map(|(gid, g)| g.blocks.iter().map(move |b| (gid, b)))
            .collect()
    }
}

/// Jordan block sizes (ascending) shared by every root of each irreducible
/// factor of the characteristic polynomial. The number of blocks of size
/// ≥ k is (rank p(Q)^{k−1} − rank p(Q)^k) / deg p.
pub fn jordan_structure(q: &QMatrix) -> Result<Vec<(Factor, Vec<usize>)>, ExactError> {
    let n = q.rows();
    let cp = char_poly(q)?;
    let mut out = Vec::new();
    for f in factor_poly(&cp)? {
        let d = f.poly.degree().unwrap_or(1);
        let p = f.poly.eval_matrix(q);
        let mut ranks = vec![n];
        let mut power = QMatrix::identity(n);
        for _ in 0..f.multiplicity {
            power = &power * &p;
            ranks.push(power.rank());
        }
        let at_least: Vec<usize> = (1..ranks.len())
            .map(|k| (ranks[k - 1] - ranks[k]) / d)
            .chain(std::iter::once(0))
            .collect();
        let mut sizes = Vec::new();
        for k in 1..at_least.len() {
            for _ in 0..at_least[k - 1] - at_least[k] {
                sizes.push(k);
            }
        }
        out.push((f, sizes));
    }
    Ok(out)
}

fn signs_from_gram(gram: &QMatrix) -> Result<(usize, usize), ExactError> {
    if gram.rows() == 0 {
        return Ok((0, 0));
    }
    let (p, m, _) = gram.inertia()?;
    Ok((p, m))
}

fn basis_matrix(vectors: &[Vec<Rational>], n: usize) -> QMatrix {
    if vectors.is_empty() {
        QMatrix::zeros(n, 0)
    } else {
        QMatrix::from_columns(vectors)
    }
}

/// Classify `q` relative to `g`.
pub fn segre_type(q: &QMatrix, g: &QMatrix) -> Result<SegreType, SegreError> {
    if !q.is_square() {
        return Err(ExactError::NotSquare(q.rows(), q.cols()).into());
    }
    if g.rows() != q.rows() || !g.is_square() {
        return Err(ExactError::DimensionMismatch(format!(
            "Q is {}x{}, g is {}x{}",
            q.rows(),
            q.cols(),
            g.rows(),
            g.cols()
        ))
        .into());
    }
    if g.det()?.is_zero() {
        return Err(ExactError::Singular.into());
    }
    if !(g * q).is_symmetric() {
        return Err(SegreError::NotSelfAdjoint);
    }
    let n = q.rows();
    let (gp, gm, _) = g.inertia()?;
    // Orient so that "spacelike" is the majority sign.
    let orient = if gp >= gm { Rational::one() } else { -Rational::one() };
    let g_or = g.scale(&orient);

    let structure = jordan_structure(q)?;
    let mut numeric_fallback = false;
    let mut groups = Vec::new();
    for (f, sizes) in &structure {
        let ones = sizes.iter().filter(|&&s| s == 1).count();
        let big: Vec<usize> = sizes.iter().copied().filter(|&s| s > 1).collect();
        let real_group = |eigenvalue: Eigenvalue, pos: usize, neg: usize| {
            let mut blocks = Vec::new();
            blocks.extend((0..pos).map(|_| Block { size: 1, kind: BlockKind::Spacelike }));
            blocks.extend((0..neg).map(|_| Block { size: 1, kind: BlockKind::Timelike }));
            blocks.extend(big.iter().map(|&s| Block { size: s, kind: BlockKind::Null }));
            EigenGroup { eigenvalue, blocks }
        };
        let complex_group = |eigenvalue: Eigenvalue| EigenGroup {
            eigenvalue,
            blocks: sizes
                .iter()
                .map(|&s| Block { size: s, kind: BlockKind::Complex })
                .collect(),
        };
        match &f.roots {
            RootInfo::Rational { root } => {
                let k = (q - &QMatrix::scalar(n, root)).nullspace();
                let kb = basis_matrix(&k, n);
                let (pos, neg) = signs_from_gram(&(&(&kb.transpose() * &g_or) * &kb))?;
                debug_assert_eq!(pos + neg, ones);
                groups.push(real_group(Eigenvalue::Rational { value: root.clone() }, pos, neg));
            }
            RootInfo::ComplexPair { .. } => {
                let (c, b) = (&f.poly.coeffs()[0], &f.poly.coeffs()[1]);
                let re = -b.to_f64() / 2.0;
                let im = (c.to_f64() - re * re).max(0.0).sqrt();
                groups.push(complex_group(Eigenvalue::ComplexPair {
                    factor: f.poly.clone(),
                    index: 0,
                    approx: Some((re, im)),
                }));
            }
            RootInfo::RealPair { intervals, .. } | RootInfo::Higher { real_roots: intervals, .. } => {
                let complex_pairs = match &f.roots {
                    RootInfo::Higher { complex_pairs, .. } => {
                        numeric_fallback = true;
                        *complex_pairs
                    }
                    _ => 0,
                };
                let signs = irrational_signs(q, &g_or, &f.poly, intervals, ones)?;
                for (iv, (pos, neg)) in intervals.iter().zip(signs) {
                    let fine = iv.refine(&f.poly, &Rational::new(1, 1 << 40));
                    groups.push(real_group(
                        Eigenvalue::RealRoot {
                            factor: f.poly.clone(),
                            interval: iv.clone(),
                            approx: fine.midpoint_f64(),
                        },
                        pos,
                        neg,
                    ));
                }
                for index in 0..complex_pairs {
                    groups.push(complex_group(Eigenvalue::ComplexPair {
                        factor: f.poly.clone(),
                        index,
                        approx: None,
                    }));
                }
            }
        }
    }
    let (symbol, groups, causal_split) = render(groups);
    Ok(SegreType {
        symbol,
        groups,
        causal_split,
        numeric_fallback,
        char_poly: char_poly(q)?,
        min_poly: minimal_poly(q)?,
    })
}

/// Per-root (spacelike, timelike) counts of size-1 blocks for the real
/// roots of an irreducible factor, from the inertia of g((Q − c)·,·) on
/// ker p(Q) at rational separators c between consecutive roots.
fn irrational_signs(
    q: &QMatrix,
    g: &QMatrix,
    p: &Poly,
    intervals: &[RootInterval],
    ones: usize,
) -> Result<Vec<(usize, usize)>, ExactError> {
    let n = q.rows();
    let k = p.eval_matrix(q).nullspace();
    let kb = basis_matrix(&k, n);
    let mut separators = vec![intervals[0].lo.clone()];
    separators.extend(intervals.iter().map(|iv| iv.hi.clone()));
    let positives: Vec<i64> = separators
        .iter()
        .map(|c| {
            let shifted = q - &QMatrix::scalar(n, c);
            let h = &(&kb.transpose() * &(g * &shifted)) * &kb;
            signs_from_gram(&h).map(|(pos, _)| pos as i64)
        })
        .collect::<Result<_, _>>()?;
    Ok(positives
        .windows(2)
        .map(|w| {
            let diff = w[0] - w[1];
            let pos = (ones as i64 + diff) / 2;
            (pos as usize, ones - pos as usize)
        })
        .collect())
}

fn cmp_eigen(a: &Eigenvalue, b: &Eigenvalue) -> Ordering {
    match (a, b) {
        (Eigenvalue::Rational { value: x }, Eigenvalue::Rational { value: y }) => x.cmp(y),
        (Eigenvalue::ComplexPair { factor: f, index: i, .. }, Eigenvalue::ComplexPair { factor: g, index: j, .. }) => f
            .to_string()
            .cmp(&g.to_string())
            .then(i.cmp(j)),
        _ => a
            .approx_real()
            .partial_cmp(&b.approx_real())
            .unwrap_or(Ordering::Equal),
    }
}

/// Order groups (spacelike-only, then the one group straddling the comma,
/// then the rest) and emit tokens.
fn render(mut groups: Vec<EigenGroup>) -> (SegreSymbol, Vec<EigenGroup>, Option<usize>) {
    let spacelike = |g: &EigenGroup| g.blocks.iter().filter(|b| b.kind == BlockKind::Spacelike).count();
    let category = |g: &EigenGroup| {
        let s = spacelike(g);
        if s == g.blocks.len() {
            0
        } else if s > 0 {
            1
        } else {
            2
        }
    };
    groups.sort_by(|a, b| category(a).cmp(&category(b)).then_with(|| cmp_eigen(&a.eigenvalue, &b.eigenvalue)));
    let total_space: usize = groups.iter().map(spacelike).sum();
    let total: usize = groups.iter().map(|g| g.blocks.len()).sum();
    let need_comma = total_space > 0 && total_space < total;
    let split_group = groups.iter().position(|g| category(g) == 1);

    let mut tokens = Vec::new();
    let mut comma_at = None;
    for (gi, g) in groups.iter().enumerate() {
        if need_comma && comma_at.is_none() && split_group.is_none() && category(g) != 0 {
            comma_at = Some(tokens.len());
            tokens.push(SegreToken::Comma);
        }
        let paren = g.blocks.len() > 1;
        if paren {
            tokens.push(SegreToken::Open);
        }
        for b in &g.blocks {
            if need_comma && Some(gi) == split_group && comma_at.is_none() && b.kind != BlockKind::Spacelike {
                comma_at = Some(tokens.len());
                tokens.push(SegreToken::Comma);
            }
            let size = b.size as u8;
            if b.kind == BlockKind::Complex {
                tokens.push(SegreToken::Block { size, barred: true });
            }
            tokens.push(SegreToken::Block { size, barred: false });
        }
        if paren {
            tokens.push(SegreToken::Close);
        }
    }
    (SegreSymbol::from_tokens(tokens), groups, comma_at)
}
