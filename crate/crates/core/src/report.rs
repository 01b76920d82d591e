//! Stage-by-stage pipeline results with PASS/WARN/FAIL checks.
//!
//! A report is plain data: exact values serialize as "p/q" strings, and the
//! JSON form round-trips.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::algebra::{HomogeneousPair, JacobiViolation};
use crate::exact::{char_poly, QMatrix, Rational, SolutionSet};
use crate::geometry::{self, CurvatureBundle, NomizuOperator};
use crate::segre;
use crate::soliton::{
    self, Certificate, Provenance, SolitonClass, SolitonSolution, SolitonSystem, Status,
};
use crate::Params;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Info,
    Pass,
    Warn,
    Fail,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Info => "INFO",
            Verdict::Pass => "PASS",
            Verdict::Warn => "WARN",
            Verdict::Fail => "FAIL",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub verdict: Verdict,
    pub detail: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Stage {
    Validation,
    Connection,
    Curvature,
    Ricci,
    Weyl,
    Segre,
    Soliton,
    Invariance,
}

impl Stage {
    pub const ALL: [Stage; 8] = [
        Stage::Validation,
        Stage::Connection,
        Stage::Curvature,
        Stage::Ricci,
        Stage::Weyl,
        Stage::Segre,
        Stage::Soliton,
        Stage::Invariance,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Stage::Validation => "validation",
            Stage::Connection => "connection",
            Stage::Curvature => "curvature",
            Stage::Ricci => "ricci",
            Stage::Weyl => "weyl",
            Stage::Segre => "segre",
            Stage::Soliton => "soliton",
            Stage::Invariance => "invariance",
        }
    }

    /// Comma-separated stage names; "all" selects every stage.
    pub fn parse_list(csv: &str) -> Result<Vec<Stage>, String> {
        if csv.trim() == "all" {
            return Ok(Stage::ALL.to_vec());
        }
        let mut out: Vec<Stage> = csv
            .split(',')
            .map(|s| s.trim().parse())
            .collect::<Result<_, _>>()?;
        out.sort();
        out.dedup();
        Ok(out)
    }
}

impl FromStr for Stage {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Stage::ALL
            .into_iter()
            .find(|st| st.name() == s)
            .ok_or_else(|| format!("unknown stage {s:?}"))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ValidationStage {
    pub r: usize,
    pub n: usize,
    pub partial: bool,
    pub metric: QMatrix,
    pub nonzero_relations: usize,
    pub jacobi_violations: Vec<JacobiViolation>,
    pub metric_invariant: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConnectionStage {
    /// Λ(u₁)..Λ(u_n).
    pub on_m: Vec<QMatrix>,
    /// Λ(e₁)..Λ(e_r) = ψ(e₁)..ψ(e_r).
    pub on_h: Vec<QMatrix>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CurvatureStage {
    /// Number of i < j with R(u_i,u_j) ≠ 0.
    pub nonzero_operators: usize,
    pub flat: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RicciStage {
    pub ricci: QMatrix,
    pub operator: QMatrix,
    pub scalar: Rational,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WeylStage {
    pub conformally_flat: bool,
    /// "weyl", "cotton" or "dimension".
    pub criterion: String,
    pub nonzero_components: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SegreStage {
    pub symbol: String,
    pub char_poly: String,
    pub min_poly: String,
    pub degenerate: bool,
    pub einstein: bool,
    pub numeric_fallback: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolitonStage {
    pub provenance: Provenance,
    pub system_id: String,
    pub rows: usize,
    pub status: Status,
    /// A particular (x₁..x_n, ς).
    pub particular: Option<Vec<Rational>>,
    /// Directions of the affine solution set.
    pub directions: Vec<Vec<Rational>>,
    pub sigma: Option<Rational>,
    pub class: Option<SolitonClass>,
    pub einstein: bool,
    pub certificate: Option<Certificate>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub linearized: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InvarianceStage {
    /// "trivial isotropy", "isotropy action" or "documented subspace".
    pub source: String,
    /// Invariant solutions; `None` when there are none.
    pub invariant: Option<SolutionSet>,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Stages {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub validation: Option<ValidationStage>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub connection: Option<ConnectionStage>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub curvature: Option<CurvatureStage>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ricci: Option<RicciStage>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weyl: Option<WeylStage>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub segre: Option<SegreStage>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub soliton: Option<SolitonStage>,
    /// The printed system, when an entry carries one alongside the
    /// assembled system.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fixture_soliton: Option<SolitonStage>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub invariance: Option<InvarianceStage>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub id: String,
    pub params: Params,
    pub verdict: Verdict,
    pub stages: Stages,
    pub checks: Vec<Check>,
    /// Details of every WARN check: places where a printed value and the
    /// exact derivation disagree.
    pub discrepancies: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing_us: Option<u64>,
}

impl Report {
    pub fn new(id: impl Into<String>, params: Params) -> Self {
        Report {
            id: id.into(),
            params,
            verdict: Verdict::Pass,
            stages: Stages::default(),
            checks: Vec::new(),
            discrepancies: Vec::new(),
            timing_us: None,
        }
    }

    pub fn push(&mut self, name: impl Into<String>, verdict: Verdict, detail: impl Into<String>) {
        let check = Check {
            name: name.into(),
            verdict,
            detail: detail.into(),
        };
        if verdict == Verdict::Warn {
            self.discrepancies.push(format!("{}: {}", check.name, check.detail));
        }
        self.verdict = self.verdict.max(verdict);
        self.checks.push(check);
    }

    pub fn passed(&self) -> bool {
        self.verdict != Verdict::Fail
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let params: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        let _ = writeln!(out, "{}  [{}]  {}", self.id, params.join(", "), self.verdict);
        let width = self.checks.iter().map(|c| c.name.chars().count()).max().unwrap_or(0);
        for c in &self.checks {
            let _ = writeln!(out, "  {:<4}  {:<width$}  {}", c.verdict, c.name, c.detail);
        }
        let st = &self.stages;
        if let Some(r) = &st.ricci {
            let _ = writeln!(out, "  ricci     {}", matrix_inline(&r.ricci));
            let _ = writeln!(out, "  scalar    {}", r.scalar);
        }
        if let Some(s) = &st.segre {
            let _ = writeln!(out, "  segre     {}  (min poly {})", s.symbol, s.min_poly);
        }
        for s in [&st.soliton, &st.fixture_soliton].into_iter().flatten() {
            let _ = writeln!(out, "  soliton   {}", soliton_summary(s));
        }
        out
    }
}

pub fn matrix_inline(m: &QMatrix) -> String {
    let rows: Vec<String> = m
        .to_rows()
        .iter()
        .map(|r| format!("[{}]", r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")))
        .collect();
    format!("[{}]", rows.join(", "))
}

fn vec_inline(v: &[Rational]) -> String {
    format!("({})", v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", "))
}

pub fn soliton_summary(s: &SolitonStage) -> String {
    let src = match s.provenance {
        Provenance::Assembled => "assembled",
        Provenance::Fixture => "printed",
    };
    match s.status {
        Status::Inconsistent => {
            let rows: Vec<&str> = s
                .certificate
                .iter()
                .flat_map(|c| c.rows.iter().map(|r| r.label.as_str()))
                .collect();
            format!("{src}: INCONSISTENT (certificate rows {})", rows.join(" "))
        }
        Status::Consistent => {
            let p = s.particular.as_deref().map(vec_inline).unwrap_or_default();
            let class = s.class.map(|c| c.to_string()).unwrap_or_else(|| "sign of ς varies".into());
            format!(
                "{src}: (x, ς) = {p} + {} free directions, {class}{}",
                s.directions.len(),
                if s.einstein { ", einstein" } else { "" }
            )
        }
    }
}

/// Solve a system and check the answer by substitution.
pub fn soliton_stage(system: &SolitonSystem) -> Result<(SolitonStage, SolitonSolution, Check), String> {
    let sol = soliton::solve(system).map_err(|e| e.to_string())?;
    let check = substitution_check(system, &sol);
    let (particular, directions) = match &sol.set {
        Some(set) => (Some(set.particular.clone()), set.nullspace.clone()),
        None => (None, Vec::new()),
    };
    let sigma = sol.sigma_forced();
    let class = match (&sigma, &particular) {
        (Some(_), Some(p)) => soliton::classify(&sol, p).ok(),
        _ => None,
    };
    let stage = SolitonStage {
        provenance: system.provenance,
        system_id: system.id.clone(),
        rows: system.rows.len(),
        status: sol.status,
        particular,
        directions,
        sigma,
        class,
        einstein: sol.einstein,
        certificate: sol.certificate.clone(),
        linearized: sol.linearized.clone(),
    };
    Ok((stage, sol, check))
}

/// Every solution satisfies every row, or the certificate combines rows to
/// 0 = nonzero.
pub fn substitution_check(system: &SolitonSystem, sol: &SolitonSolution) -> Check {
    let name = format!("{}_substitution", provenance_name(system.provenance));
    let (ok, detail) = match (&sol.set, &sol.certificate) {
        (Some(set), _) => {
            let mut points = vec![set.particular.clone()];
            for d in &set.nullspace {
                points.push(set.particular.iter().zip(d).map(|(a, b)| a + b).collect());
            }
            let ok = points.iter().all(|z| system.is_satisfied_by(z));
            (ok, format!("{} sample points of the solution set satisfy all {} rows", points.len(), system.rows.len()))
        }
        (None, Some(cert)) => {
            let n = system.n;
            let mut lin = vec![Rational::zero(); n + 1];
            let mut quad_ok = true;
            let mut constant = Rational::zero();
            for cr in &cert.rows {
                let row = &system.rows[cr.index];
                quad_ok &= row.quadratic.is_empty();
                for (l, c) in lin.iter_mut().zip(&row.linear) {
                    *l += &(&cr.coefficient * c);
                }
                constant += &(&cr.coefficient * &row.constant);
            }
            let ok = quad_ok && lin.iter().all(Rational::is_zero) && !constant.is_zero();
            let labels: Vec<&str> = cert.rows.iter().map(|r| r.label.as_str()).collect();
            (ok, format!("rows {} combine to 0 = {}", labels.join(" "), -constant))
        }
        (None, None) => (false, "inconsistent without certificate".to_string()),
    };
    Check {
        name,
        verdict: if ok { Verdict::Pass } else { Verdict::Fail },
        detail,
    }
}

fn provenance_name(p: Provenance) -> &'static str {
    match p {
        Provenance::Assembled => "assembled",
        Provenance::Fixture => "printed",
    }
}

pub fn invariance_stage(pair: &HomogeneousPair, sol: &SolitonSolution) -> Result<InvarianceStage, String> {
    let source = if pair.r() == 0 {
        "trivial isotropy"
    } else if pair.is_partial() {
        "documented subspace"
    } else {
        "isotropy action"
    };
    let invariant = soliton::invariant_solutions(pair, sol).map_err(|e| e.to_string())?;
    Ok(InvarianceStage {
        source: source.to_string(),
        invariant,
    })
}

/// Everything computed from a full pair in one pass.
pub struct Computed {
    pub lambda: NomizuOperator,
    pub bundle: CurvatureBundle,
    pub solution: Option<SolitonSolution>,
}

/// Run the requested stages on a pair. Stages that need the Levi-Civita
/// connection are skipped for PARTIAL pairs.
pub fn run_pipeline(report: &mut Report, pair: &HomogeneousPair, stages: &[Stage]) -> Option<Computed> {
    let want = |s: Stage| stages.contains(&s);
    if want(Stage::Validation) {
        validation(report, pair);
    }
    let needs_geometry = stages.iter().any(|s| *s != Stage::Validation);
    if !needs_geometry {
        return None;
    }
    if pair.is_partial() {
        report.push(
            "geometry",
            Verdict::Info,
            "partial pair: connection, curvature, Ricci, Weyl and Segre stages skipped",
        );
        return None;
    }
    let (lambda, bundle) = match geometry::curvature_bundle(pair) {
        Ok(x) => x,
        Err(e) => {
            report.push("geometry", Verdict::Fail, e.to_string());
            return None;
        }
    };
    let n = pair.n();
    if want(Stage::Connection) {
        report.stages.connection = Some(ConnectionStage {
            on_m: (0..n).map(|i| lambda.on_m(i).clone()).collect(),
            on_h: (0..pair.r()).map(|j| lambda.on_h(j).clone()).collect(),
        });
    }
    if want(Stage::Curvature) {
        curvature(report, pair, &bundle);
    }
    if want(Stage::Ricci) {
        let sym = bundle.ricci.is_symmetric();
        report.push(
            "ricci_symmetric",
            if sym { Verdict::Pass } else { Verdict::Fail },
            if sym { "ϱ is symmetric" } else { "ϱ is not symmetric" },
        );
        report.stages.ricci = Some(RicciStage {
            ricci: bundle.ricci.clone(),
            operator: bundle.q.clone(),
            scalar: bundle.tau.clone(),
        });
    }
    if want(Stage::Weyl) {
        weyl(report, pair, &bundle);
    }
    if want(Stage::Segre) {
        segre_stage(report, pair, &bundle);
    }
    let mut solution = None;
    if want(Stage::Soliton) || want(Stage::Invariance) {
        match soliton::assemble_system(pair, &bundle.ricci)
            .map_err(|e| e.to_string())
            .and_then(|sys| soliton_stage(&sys))
        {
            Ok((stage, sol, check)) => {
                report.push(check.name, check.verdict, check.detail);
                if want(Stage::Soliton) {
                    report.stages.soliton = Some(stage);
                }
                solution = Some(sol);
            }
            Err(e) => report.push("soliton", Verdict::Fail, e),
        }
    }
    if want(Stage::Invariance) {
        if let Some(sol) = solution.as_ref().filter(|s| s.is_consistent()) {
            match invariance_stage(pair, sol) {
                Ok(st) => report.stages.invariance = Some(st),
                Err(e) => report.push("invariance", Verdict::Fail, e),
            }
        }
    }
    Some(Computed {
        lambda,
        bundle,
        solution,
    })
}

fn validation(report: &mut Report, pair: &HomogeneousPair) {
    let partial = pair.is_partial();
    let jacobi = if partial { Vec::new() } else { pair.jacobi_check() };
    let invariant = if partial {
        None
    } else {
        pair.metric_invariance_check().ok().map(|r| r.invariant)
    };
    if partial {
        report.push("jacobi", Verdict::Info, "partial pair: h-components of brackets unknown");
    } else {
        report.push(
            "jacobi",
            if jacobi.is_empty() { Verdict::Pass } else { Verdict::Fail },
            format!("{} violating triples", jacobi.len()),
        );
        let ok = invariant == Some(true);
        report.push(
            "metric_invariance",
            if ok { Verdict::Pass } else { Verdict::Fail },
            if pair.r() == 0 {
                "no isotropy"
            } else if ok {
                "ψ(e_j)ᵗg + gψ(e_j) = 0 for all j"
            } else {
                "ψ(e_j)ᵗg + gψ(e_j) ≠ 0"
            },
        );
    }
    report.stages.validation = Some(ValidationStage {
        r: pair.r(),
        n: pair.n(),
        partial,
        metric: pair.metric().clone(),
        nonzero_relations: pair.nonzero_relations(),
        jacobi_violations: jacobi,
        metric_invariant: invariant,
    });
}

fn curvature(report: &mut Report, pair: &HomogeneousPair, b: &CurvatureBundle) {
    let n = pair.n();
    let mut bianchi = true;
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let s = b.r[i][j].column(k);
                let t = b.r[j][k].column(i);
                let u = b.r[k][i].column(j);
                bianchi &= s.iter().zip(&t).zip(&u).all(|((x, y), z)| (&(x + y) + z).is_zero());
            }
        }
    }
    let riem = geometry::riemann_lowered(pair.metric(), &b.r);
    let idx = |i: usize, j: usize, k: usize, l: usize| ((i * n + j) * n + k) * n + l;
    let mut pair_sym = true;
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    pair_sym &= riem[idx(i, j, k, l)] == riem[idx(k, l, i, j)];
                }
            }
        }
    }
    report.push(
        "first_bianchi",
        if bianchi { Verdict::Pass } else { Verdict::Fail },
        "R(x,y)z + R(y,z)x + R(z,x)y = 0",
    );
    report.push(
        "curvature_pair_symmetry",
        if pair_sym { Verdict::Pass } else { Verdict::Fail },
        "g(R(x,y)z,w) = g(R(z,w)x,y)",
    );
    let nonzero = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|&(i, j)| !b.r[i][j].is_zero())
        .count();
    report.stages.curvature = Some(CurvatureStage {
        nonzero_operators: nonzero,
        flat: nonzero == 0,
    });
}

fn weyl(report: &mut Report, pair: &HomogeneousPair, b: &CurvatureBundle) {
    let stage = match (&b.weyl, pair.n()) {
        (Some(w), _) => {
            let nonzero = w.iter().filter(|x| !x.is_zero()).count();
            WeylStage {
                conformally_flat: nonzero == 0,
                criterion: "weyl".into(),
                nonzero_components: nonzero,
            }
        }
        (None, 3) => match geometry::cotton_check(pair) {
            Ok(c) => WeylStage {
                conformally_flat: c.conformally_flat,
                criterion: "cotton".into(),
                nonzero_components: c.components.iter().filter(|x| !x.is_zero()).count(),
            },
            Err(e) => {
                report.push("weyl", Verdict::Fail, e.to_string());
                return;
            }
        },
        _ => WeylStage {
            conformally_flat: true,
            criterion: "dimension".into(),
            nonzero_components: 0,
        },
    };
    report.stages.weyl = Some(stage);
}

fn segre_stage(report: &mut Report, pair: &HomogeneousPair, b: &CurvatureBundle) {
    match char_poly(&b.q) {
        Ok(p) => {
            let ok = p.eval_matrix(&b.q).is_zero();
            report.push(
                "cayley_hamilton",
                if ok { Verdict::Pass } else { Verdict::Fail },
                format!("χ_Q(t) = {p}, χ_Q(Q) = 0"),
            );
        }
        Err(e) => report.push("cayley_hamilton", Verdict::Fail, e.to_string()),
    }
    match segre::segre_type(&b.q, pair.metric()) {
        Ok(t) => {
            report.stages.segre = Some(SegreStage {
                symbol: t.symbol.to_string(),
                char_poly: t.char_poly.to_string(),
                min_poly: t.min_poly.to_string(),
                degenerate: t.is_degenerate(),
                einstein: t.is_einstein(),
                numeric_fallback: t.numeric_fallback,
            });
        }
        Err(e) => report.push("segre", Verdict::Fail, e.to_string()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::samples;
    use crate::exact::QMatrix;

    #[test]
    fn stage_list_parsing() {
        assert_eq!(
            Stage::parse_list("segre,ricci").unwrap(),
            vec![Stage::Ricci, Stage::Segre]
        );
        assert_eq!(Stage::parse_list("all").unwrap().len(), 8);
        assert!(Stage::parse_list("ricci,nope").is_err());
    }

    #[test]
    fn abelian_pipeline() {
        let pair = samples::abelian(QMatrix::identity(4));
        let mut rep = Report::new("abelian", Params::new());
        run_pipeline(&mut rep, &pair, &Stage::ALL);
        assert!(rep.passed(), "{}", rep.to_table());
        let st = &rep.stages;
        assert!(st.ricci.as_ref().unwrap().ricci.is_zero());
        assert_eq!(st.segre.as_ref().unwrap().symbol, "[(1111)]");
        let sol = st.soliton.as_ref().unwrap();
        assert_eq!(sol.sigma, Some(Rational::zero()));
        assert_eq!(sol.class, Some(SolitonClass::Steady));
        assert_eq!(sol.directions.len(), 4);
        assert!(st.weyl.as_ref().unwrap().conformally_flat);
    }

    #[test]
    fn json_roundtrip() {
        let mut rep = Report::new("su2", Params::new());
        run_pipeline(&mut rep, &samples::su2(), &Stage::ALL);
        let back: Report = serde_json::from_str(&rep.to_json()).unwrap();
        assert_eq!(back, rep);
        assert_eq!(rep.stages.weyl.as_ref().unwrap().criterion, "cotton");
    }

    #[test]
    fn warn_records_discrepancy() {
        let mut rep = Report::new("x", Params::new());
        rep.push("a", Verdict::Pass, "");
        rep.push("b", Verdict::Warn, "printed sign differs");
        assert_eq!(rep.verdict, Verdict::Warn);
        assert!(rep.passed());
        assert_eq!(rep.discrepancies, vec!["b: printed sign differs".to_string()]);
        rep.push("c", Verdict::Fail, "");
        assert!(!rep.passed());
    }
}
