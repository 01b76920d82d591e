//! Sign placement of a pseudo-orthonormal metric, found by matching the
//! printed connection and Ricci tensor.

use std::collections::BTreeMap;
use std::sync::{Mutex, OnceLock};

use serde::Serialize;

use super::{default_samples, entry, CatalogEntry, MetricStatus, Signature};
use crate::error::CatalogError;
use crate::exact::{QMatrix, Rational};
use crate::geometry::{brackets_from_nomizu, curvature_bundle};
use crate::Params;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Candidate {
    pub label: String,
    pub metric: QMatrix,
    pub ricci_match: Option<bool>,
    /// Admissible printed Λ indices (zero-based) reproduced at every sample.
    pub lambda_match: Vec<usize>,
    pub survived: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MetricResolution {
    pub id: String,
    pub status: MetricStatus,
    pub metric: QMatrix,
    pub samples: Vec<Params>,
    pub candidates: Vec<Candidate>,
    /// Printed Λ indices left out of the comparison because they take part
    /// in a failing torsion identity at some sample.
    pub excluded_lambda: Vec<usize>,
    /// Surviving candidate indices grouped into isometry classes.
    pub classes: Vec<Vec<usize>>,
    /// For each non-representative survivor, one signed permutation P per
    /// sample with PᵗgₛP = g of the class representative and P an
    /// automorphism of the brackets at that sample.
    pub isometries: Vec<(usize, Vec<QMatrix>)>,
}

fn diag(signs: &[i64]) -> QMatrix {
    QMatrix::diag(&signs.iter().map(|&s| Rational::integer(s)).collect::<Vec<_>>())
}

fn with_pairs(base: &[i64], pairs: &[(usize, usize)]) -> QMatrix {
    let mut g = diag(base);
    for &(a, b) in pairs {
        g[(a, a)] = Rational::zero();
        g[(b, b)] = Rational::zero();
        g[(a, b)] = Rational::one();
        g[(b, a)] = Rational::one();
    }
    g
}

/// Candidates of a signature modulo overall sign: diagonal ±1 placements
/// and forms with off-diagonal unit (hyperbolic) blocks.
pub(crate) fn candidates(sig: Signature) -> Vec<(String, QMatrix)> {
    let fmt_diag = |s: &[i64]| {
        format!(
            "diag({})",
            s.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
        )
    };
    let mut out = Vec::new();
    match sig {
        Signature::Riemannian => out.push((fmt_diag(&[1, 1, 1, 1]), diag(&[1, 1, 1, 1]))),
        Signature::Neutral => {
            for s in [[1, 1, -1, -1], [1, -1, 1, -1], [1, -1, -1, 1]] {
                out.push((fmt_diag(&s), diag(&s)));
            }
            for pairs in [[(0, 1), (2, 3)], [(0, 2), (1, 3)], [(0, 3), (1, 2)]] {
                let label = format!(
                    "null pairs (u{}u{}),(u{}u{})",
                    pairs[0].0 + 1,
                    pairs[0].1 + 1,
                    pairs[1].0 + 1,
                    pairs[1].1 + 1
                );
                out.push((label, with_pairs(&[1, 1, 1, 1], &pairs)));
            }
        }
        Signature::Lorentzian => {
            for t in (0..4).rev() {
                let mut s = [1, 1, 1, 1];
                s[t] = -1;
                out.push((fmt_diag(&s), diag(&s)));
            }
            for a in 0..4 {
                for b in a + 1..4 {
                    out.push((
                        format!("null pair (u{}u{})", a + 1, b + 1),
                        with_pairs(&[1, 1, 1, 1], &[(a, b)]),
                    ));
                }
            }
        }
    }
    out
}

/// Printed Λ's implicated in a torsion failure: Λ(u_i)u_j − Λ(u_j)u_i must
/// equal [u_i,u_j]_m, and both matrices of a failing pair are suspect since
/// the identity alone cannot tell which one is wrong.
pub fn torsion_defects(lams: &[QMatrix], bracket_m: impl Fn(usize, usize) -> Vec<Rational>) -> Vec<usize> {
    let n = lams.len();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if brackets_from_nomizu(lams, i, j).0 != bracket_m(i, j) {
                out.extend([i, j]);
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for k in 0..=p.len() {
            let mut q = p.clone();
            q.insert(k, n - 1);
            out.push(q);
        }
    }
    out
}

/// A signed permutation P preserving the bracket table with PᵗhP = g.
fn signed_isometry(t: &[Vec<Vec<Rational>>], g: &QMatrix, h: &QMatrix) -> Option<QMatrix> {
    let n = g.rows();
    for perm in permutations(n) {
        for mask in 0..(1u32 << n) {
            let sign = |i: usize| if mask >> i & 1 == 1 { Rational::integer(-1) } else { Rational::one() };
            let p = QMatrix::from_fn(n, n, |r, c| if perm[c] == r { sign(c) } else { Rational::zero() });
            if &(&p.transpose() * h) * &p != *g {
                continue;
            }
            let auto = (0..n).all(|a| {
                (0..n).all(|b| {
                    let lhs = p.mul_vec(&t[a][b]);
                    let s = &sign(a) * &sign(b);
                    let rhs: Vec<Rational> = t[perm[a]][perm[b]].iter().map(|x| &s * x).collect();
                    lhs == rhs
                })
            });
            if auto {
                return Some(p);
            }
        }
    }
    None
}

fn cache() -> &'static Mutex<BTreeMap<String, MetricResolution>> {
    static CACHE: OnceLock<Mutex<BTreeMap<String, MetricResolution>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(BTreeMap::new()))
}

/// Resolve an entry's metric. Explicit metrics are returned as given (at the
/// default parameters); pseudo-orthonormal ones are searched over all sign
/// placements of the signature at two parameter samples. A candidate must
/// reproduce the printed ϱ and match the largest number of printed Λ's that
/// pass torsion recovery.
pub fn resolve_metric(id: &str) -> Result<MetricResolution, CatalogError> {
    let e = entry(id)?;
    if let Some(hit) = cache().lock().expect("cache lock").get(id) {
        return Ok(hit.clone());
    }
    let res = search(e)?;
    cache()
        .lock()
        .expect("cache lock")
        .insert(id.to_string(), res.clone());
    Ok(res)
}

fn search(e: &'static CatalogEntry) -> Result<MetricResolution, CatalogError> {
    let samples: Vec<Params> = e.sample_points(&default_samples()).into_iter().take(2).collect();
    if let (MetricStatus::Resolved, Some(f)) = (e.metric_status, e.data.metric) {
        return Ok(MetricResolution {
            id: e.id.to_string(),
            status: MetricStatus::Resolved,
            metric: f(&e.default_params()),
            samples,
            candidates: Vec::new(),
            excluded_lambda: Vec::new(),
            classes: Vec::new(),
            isometries: Vec::new(),
        });
    }
    let n = e.n;
    let mut tables = Vec::new();
    let mut excluded = Vec::new();
    for s in &samples {
        let pair = e.builder(s).build_unchecked()?;
        let t: Vec<Vec<Vec<Rational>>> = (0..n)
            .map(|a| (0..n).map(|b| pair.bracket_m(e.r + a, e.r + b).0).collect())
            .collect();
        if let Some(f) = e.data.lambda {
            for k in torsion_defects(&f(s), |i, j| t[i][j].clone()) {
                if !excluded.contains(&k) {
                    excluded.push(k);
                }
            }
        }
        tables.push(t);
    }
    excluded.sort();
    let mut cands = Vec::new();
    for (label, g) in candidates(e.signature) {
        let mut ricci_match = e.data.ricci.map(|_| true);
        let mut lambda_ok: Option<Vec<bool>> = None;
        for s in &samples {
            let pair = e.builder(s).metric(g.clone()).build()?;
            let (lam, bundle) = curvature_bundle(&pair)?;
            if let (Some(m), Some(f)) = (ricci_match.as_mut(), e.data.ricci) {
                *m &= bundle.ricci == f(s);
            }
            if let Some(f) = e.data.lambda {
                let printed = f(s);
                let now: Vec<bool> = (0..n).map(|i| *lam.on_m(i) == printed[i]).collect();
                lambda_ok = Some(match lambda_ok {
                    None => now,
                    Some(prev) => prev.iter().zip(&now).map(|(a, b)| *a && *b).collect(),
                });
            }
        }
        let lambda_match: Vec<usize> = lambda_ok
            .iter()
            .flat_map(|v| v.iter().enumerate().filter(|(_, ok)| **ok).map(|(i, _)| i))
            .collect();
        cands.push(Candidate {
            label,
            metric: g,
            ricci_match,
            lambda_match: lambda_match.into_iter().filter(|i| !excluded.contains(i)).collect(),
            survived: false,
        });
    }
    // Printed Λ's carry typos beyond what torsion recovery can attribute, so
    // the Λ evidence is a score: among ϱ-reproducing candidates keep those
    // matching the most admissible printed Λ's.
    let best = cands
        .iter()
        .filter(|c| c.ricci_match != Some(false))
        .map(|c| c.lambda_match.len())
        .max();
    for c in &mut cands {
        c.survived = c.ricci_match != Some(false) && Some(c.lambda_match.len()) == best;
    }
    let survivors: Vec<usize> = (0..cands.len()).filter(|&i| cands[i].survived).collect();
    if survivors.is_empty() {
        return Err(CatalogError::NoCandidate(e.id.to_string()));
    }
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut isometries = Vec::new();
    for &s in &survivors {
        let home = classes.iter_mut().find_map(|cl| {
            let (g, h) = (&cands[cl[0]].metric, &cands[s].metric);
            let ps: Option<Vec<QMatrix>> = tables.iter().map(|t| signed_isometry(t, g, h)).collect();
            ps.map(|p| (cl, p))
        });
        match home {
            Some((cl, p)) => {
                cl.push(s);
                isometries.push((s, p));
            }
            None => classes.push(vec![s]),
        }
    }
    if classes.len() > 1 {
        return Err(CatalogError::Ambiguous {
            id: e.id.to_string(),
            survivors: survivors.iter().map(|&i| cands[i].label.clone()).collect(),
        });
    }
    Ok(MetricResolution {
        id: e.id.to_string(),
        status: MetricStatus::Searched,
        metric: cands[classes[0][0]].metric.clone(),
        samples,
        candidates: cands,
        excluded_lambda: excluded,
        classes,
        isometries,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn candidate_counts() {
        assert_eq!(candidates(Signature::Neutral).len(), 6);
        assert_eq!(candidates(Signature::Lorentzian).len(), 10);
        for (_, g) in candidates(Signature::Neutral) {
            assert_eq!(g.inertia().unwrap(), (2, 2, 0));
        }
        for (_, g) in candidates(Signature::Lorentzian) {
            assert_eq!(g.inertia().unwrap(), (3, 1, 0));
        }
    }

    #[test]
    fn permutation_count() {
        assert_eq!(permutations(4).len(), 24);
    }

    #[test]
    fn searched_entries_resolve() {
        let expect = [
            ("thm3.1-i", [1, 1, -1, -1]),
            ("thm3.1-ii", [1, 1, -1, -1]),
            ("thm3.2-i", [1, 1, 1, -1]),
            ("thm3.2-ii", [1, 1, 1, -1]),
            ("thm4.1-(22)", [1, 1, -1, -1]),
            ("thm4.2-[1,(12)]", [1, 1, -1, -1]),
        ];
        for (id, d) in expect {
            let res = resolve_metric(id).unwrap();
            assert_eq!(res.metric, diag(&d), "{id}");
            assert_eq!(res.classes.len(), 1, "{id}");
        }
    }

    #[test]
    fn printed_lambda_defects() {
        assert_eq!(resolve_metric("thm3.1-ii").unwrap().excluded_lambda, Vec::<usize>::new());
        assert_eq!(resolve_metric("thm4.2-[1,(12)]").unwrap().excluded_lambda, vec![0, 1, 2, 3]);
        assert_eq!(resolve_metric("thm4.1-(22)").unwrap().excluded_lambda, vec![0, 1, 2, 3]);
    }

    #[test]
    fn isometric_survivors_are_grouped() {
        let res = resolve_metric("thm3.1-i").unwrap();
        assert_eq!(res.classes[0].len(), 2);
        assert_eq!(res.isometries.len(), 1);
    }

    #[test]
    fn explicit_metric_skips_search() {
        let res = resolve_metric("case-1.3.1:5").unwrap();
        assert_eq!(res.status, MetricStatus::Resolved);
        assert!(res.candidates.is_empty());
    }
}
