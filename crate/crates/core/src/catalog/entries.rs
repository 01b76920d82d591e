//! Bracket tables and printed fixtures of the reproducible entries.

use super::{
    CatalogEntry, Domain, EntryData, EntryKind, MetricStatus, ParamSpec, Signature, SigmaClaim,
    SolitonClaim,
};
use crate::algebra::MVector;
use crate::exact::{qi, QMatrix, Rational};
use crate::Params;

type Bracket = (usize, usize, Vec<Rational>);

fn p(params: &Params, name: &str) -> Rational {
    params[name].clone()
}

fn z() -> Rational {
    Rational::zero()
}

fn zrow() -> Vec<Rational> {
    vec![z(); 4]
}

const ALPHA: ParamSpec = ParamSpec {
    name: "alpha",
    domain: Domain::NonZero,
    constraint: "alpha != 0",
    default: (1, 1),
};
const EPS: ParamSpec = ParamSpec {
    name: "eps",
    domain: Domain::Sign,
    constraint: "eps in {-1, 1}",
    default: (1, 1),
};
const K1: ParamSpec = ParamSpec {
    name: "k1",
    domain: Domain::NonZero,
    constraint: "k1 != 0",
    default: (1, 1),
};
const K2: ParamSpec = ParamSpec {
    name: "k2",
    domain: Domain::Any,
    constraint: "k2 real",
    default: (0, 1),
};
const K3: ParamSpec = ParamSpec {
    name: "k3",
    domain: Domain::Any,
    constraint: "k3 real",
    default: (0, 1),
};
const A: ParamSpec = ParamSpec {
    name: "a",
    domain: Domain::NonZero,
    constraint: "a != 0",
    default: (1, 1),
};
const LAMBDA: ParamSpec = ParamSpec {
    name: "lambda",
    domain: Domain::NonZero,
    constraint: "lambda != 0",
    default: (2, 1),
};
const B: ParamSpec = ParamSpec {
    name: "b",
    domain: Domain::Any,
    constraint: "b real",
    default: (1, 1),
};
const C: ParamSpec = ParamSpec {
    name: "c",
    domain: Domain::Any,
    constraint: "c real",
    default: (1, 1),
};

fn not_soliton(_: &Params) -> SolitonClaim {
    SolitonClaim::NotSoliton
}

// SU(2)×R / SL(2,R)×R, neutral, case (i).
fn br_31i(ps: &Params) -> Vec<Bracket> {
    let (a, e) = (p(ps, "alpha"), p(ps, "eps"));
    let ea = &e * &a;
    vec![
        (0, 1, vec![z(), z(), ea.clone(), z()]),
        (0, 2, vec![z(), -&ea, z(), z()]),
        (1, 2, vec![qi(2) * &a, z(), z(), qi(2) * &ea]),
        (1, 3, vec![z(), z(), -&a, z()]),
        (2, 3, vec![z(), a, z(), z()]),
    ]
}

fn br_31ii(ps: &Params) -> Vec<Bracket> {
    let (a, e) = (p(ps, "alpha"), p(ps, "eps"));
    let ea = &e * &a;
    vec![
        (0, 1, vec![-&ea, z(), z(), z()]),
        (0, 2, vec![a.clone(), z(), z(), z()]),
        (0, 3, vec![z(), qi(2) * &ea, qi(-2) * &a, z()]),
        (1, 3, vec![z(), z(), z(), -&ea]),
        (2, 3, vec![z(), z(), z(), a]),
    ]
}

fn br_32(ps: &Params, sign: i64) -> Vec<Bracket> {
    let (a, e) = (p(ps, "alpha"), p(ps, "eps"));
    let ea = &e * &a;
    vec![
        (0, 1, vec![z(), z(), qi(2 * sign) * &ea, qi(2 * sign) * &a]),
        (0, 2, vec![z(), ea.clone(), z(), z()]),
        (0, 3, vec![z(), a.clone(), z(), z()]),
        (1, 2, vec![ea, z(), z(), z()]),
        (1, 3, vec![a, z(), z(), z()]),
    ]
}

fn br_32i(ps: &Params) -> Vec<Bracket> {
    br_32(ps, -1)
}

fn br_32ii(ps: &Params) -> Vec<Bracket> {
    br_32(ps, 1)
}

/// (a + b k²) / (d k)
fn frac_k(k: &Rational, a: i64, b: i64, d: i64) -> Rational {
    (qi(a) + qi(b) * k * k) / (qi(d) * k)
}

fn br_22(ps: &Params) -> Vec<Bracket> {
    let k = p(ps, "k1");
    let a = frac_k(&k, 1, -4, 4);
    let b = frac_k(&k, 1, 0, 8);
    let c = frac_k(&k, 1, 8, 4);
    let d = frac_k(&k, 1, 16, 8);
    let t = frac_k(&k, 1, 4, 4);
    vec![
        (0, 1, vec![z(), a.clone(), z(), b.clone()]),
        (0, 2, vec![c.clone(), z(), c, z()]),
        (0, 3, vec![z(), d.clone(), z(), t.clone()]),
        (1, 2, vec![z(), t, z(), d]),
        (2, 3, vec![z(), -b, z(), -a]),
    ]
}

fn br_42(ps: &Params) -> Vec<Bracket> {
    let (k1, k2, k3) = (p(ps, "k1"), p(ps, "k2"), p(ps, "k3"));
    let h = (qi(2) * &k1).recip();
    let c = frac_k(&k1, 1, 2, 2);
    vec![
        (0, 1, vec![-&h, -&k2, -&k2, z()]),
        (0, 2, vec![h, k2.clone(), k2, z()]),
        (1, 2, vec![z(), c.clone(), c, z()]),
        (1, 3, vec![z(), k3.clone(), k3.clone(), k1.clone()]),
        (2, 3, vec![z(), -&k3, -&k3, -k1]),
    ]
}

fn no_brackets(_: &Params) -> Vec<Bracket> {
    Vec::new()
}

fn ricci_31i(ps: &Params) -> QMatrix {
    let (a, e) = (p(ps, "alpha"), p(ps, "eps"));
    let a2 = &a * &a;
    let e2a2 = &(&e * &e) * &a2;
    let ea2 = &e * &a2;
    QMatrix::from_rows(vec![
        vec![qi(-2) * &a2 + qi(2) * &e2a2, z(), z(), qi(4) * &ea2],
        vec![z(), qi(2) * &a2 + qi(4) * &ea2 - qi(2) * &e2a2, z(), z()],
        vec![z(), z(), qi(4) * &ea2 - qi(2) * &a2 + qi(2) * &e2a2, z()],
        vec![qi(4) * &ea2, z(), z(), qi(2) * &a2 - qi(2) * &e2a2],
    ])
}

fn ricci_31ii(ps: &Params) -> QMatrix {
    let (a, e) = (p(ps, "alpha"), p(ps, "eps"));
    let a2 = &a * &a;
    let e2a2 = &(&e * &e) * &a2;
    let off = qi(-2) * &e2a2 - qi(2) * &a2;
    QMatrix::from_rows(vec![
        vec![qi(2) * &e2a2 - qi(2) * &a2, z(), z(), off.clone()],
        vec![z(), qi(-4) * &e2a2, z(), z()],
        vec![z(), z(), qi(-4) * &a2, z()],
        vec![off, z(), z(), qi(-2) * &e2a2 + qi(2) * &a2],
    ])
}

fn ricci_32i(ps: &Params) -> QMatrix {
    let (a, e) = (p(ps, "alpha"), p(ps, "eps"));
    let a2 = &a * &a;
    let off = qi(-4) * &a2 * &e;
    QMatrix::from_rows(vec![
        vec![qi(4) * &a2, z(), z(), z()],
        vec![z(), qi(-4) * &e * &e * &a2, z(), z()],
        vec![z(), z(), z(), off.clone()],
        vec![z(), z(), off, z()],
    ])
}

fn ricci_32ii(ps: &Params) -> QMatrix {
    let (a, e) = (p(ps, "alpha"), p(ps, "eps"));
    let a2 = &a * &a;
    let off = qi(-4) * &a2 * &e;
    QMatrix::from_rows(vec![
        vec![qi(-4) * &a2 * &e * &e, z(), z(), z()],
        vec![z(), qi(4) * &a2, z(), z()],
        vec![z(), z(), z(), off.clone()],
        vec![z(), z(), off, z()],
    ])
}

fn ricci_22(_: &Params) -> QMatrix {
    QMatrix::from_i64(&[&[1, 0, -1, 0], &[0, 1, 0, -1], &[-1, 0, 1, 0], &[0, -1, 0, 1]])
}

fn ricci_42(_: &Params) -> QMatrix {
    QMatrix::from_i64(&[&[0, 0, 0, 0], &[0, 1, -1, 0], &[0, -1, 1, 0], &[0, 0, 0, 0]])
}

fn lambda_31ii(ps: &Params) -> Vec<QMatrix> {
    let (a, e) = (p(ps, "alpha"), p(ps, "eps"));
    let ea = &e * &a;
    let m = QMatrix::from_rows;
    vec![
        m(vec![
            vec![z(), -&ea, a.clone(), z()],
            vec![ea.clone(), z(), z(), ea.clone()],
            vec![a.clone(), z(), z(), -&a],
            vec![z(), ea.clone(), a.clone(), z()],
        ]),
        m(vec![
            vec![z(), z(), z(), ea.clone()],
            zrow(),
            zrow(),
            vec![ea.clone(), z(), z(), z()],
        ]),
        m(vec![
            vec![z(), z(), z(), a.clone()],
            zrow(),
            zrow(),
            vec![a.clone(), z(), z(), z()],
        ]),
        m(vec![
            vec![z(), ea.clone(), a.clone(), z()],
            vec![-&ea, z(), z(), ea.clone()],
            vec![a.clone(), z(), z(), a.clone()],
            vec![z(), ea, -&a, z()],
        ]),
    ]
}

fn lambda_22(ps: &Params) -> Vec<QMatrix> {
    let k = p(ps, "k1");
    let pp = frac_k(&k, 1, 8, 4);
    let qq = frac_k(&k, 1, 8, 8);
    let s = frac_k(&k, -1, 4, 4);
    let t = frac_k(&k, 1, 4, 4);
    let m = QMatrix::from_rows;
    vec![
        m(vec![
            vec![z(), z(), pp.clone(), z()],
            vec![z(), z(), z(), qq.clone()],
            vec![pp.clone(), z(), z(), z()],
            vec![z(), z(), qq.clone(), z()],
        ]),
        m(vec![
            vec![z(), -&s, z(), k.clone()],
            vec![s.clone(), z(), t.clone(), z()],
            vec![z(), t.clone(), z(), -&k],
            vec![k.clone(), z(), k.clone(), z()],
        ]),
        m(vec![
            vec![z(), z(), -&pp, z()],
            vec![z(), z(), z(), -&qq],
            vec![-&pp, z(), z(), z()],
            vec![z(), z(), -&qq, z()],
        ]),
        m(vec![
            vec![z(), k.clone(), z(), -&t],
            vec![-&k, z(), -&k, z()],
            vec![z(), -&k, z(), s.clone()],
            vec![-&t, z(), s, z()],
        ]),
    ]
}

fn lambda_42(ps: &Params) -> Vec<QMatrix> {
    let (k1, k2, k3) = (p(ps, "k1"), p(ps, "k2"), p(ps, "k3"));
    let h = (qi(2) * &k1).recip();
    let c = frac_k(&k1, 1, 2, 2);
    let m = QMatrix::from_rows;
    vec![
        m(vec![
            vec![z(), z(), -&h, h.clone()],
            vec![h.clone(), z(), z(), z()],
            vec![h, z(), z(), z()],
            zrow(),
        ]),
        m(vec![
            vec![z(), -&k2, k2.clone(), z()],
            vec![k2.clone(), z(), c.clone(), k3.clone()],
            vec![k2.clone(), c.clone(), z(), k3.clone()],
            vec![z(), k3.clone(), -&k3, z()],
        ]),
        m(vec![
            vec![z(), k2.clone(), -&k2, z()],
            vec![-&k2, z(), -&c, -&k3],
            vec![-&k2, -&c, z(), -&k3],
            vec![z(), -&k3, k3.clone(), z()],
        ]),
        m(vec![
            zrow(),
            vec![z(), z(), z(), -&k1],
            vec![z(), z(), z(), -&k1],
            vec![z(), -&k1, k1, z()],
        ]),
    ]
}

fn lambda_1315(ps: &Params) -> Vec<QMatrix> {
    let (a, l, b, c) = (p(ps, "a"), p(ps, "lambda"), p(ps, "b"), p(ps, "c"));
    let l2 = &l * &l;
    let hl = &l / &qi(2);
    let ca = &c / &a;
    let m = QMatrix::from_rows;
    vec![
        m(vec![
            vec![z(), z(), hl.clone(), z()],
            vec![z(), z(), z(), hl.clone()],
            zrow(),
            zrow(),
        ]),
        m(vec![
            vec![z(), z(), qi(1), z()],
            vec![z(), z(), z(), qi(1)],
            zrow(),
            zrow(),
        ]),
        m(vec![
            vec![
                hl.clone(),
                z(),
                &ca * &(qi(2) + &l2) / &l,
                ca.clone(),
            ],
            vec![
                qi(1) + &l2,
                -&l,
                -(&c + &c * &l2 + &b * &l) / &a,
                &ca * &l / &qi(2),
            ],
            vec![z(), z(), l.clone(), z()],
            vec![z(), z(), qi(1) + &l2, -&hl],
        ]),
        m(vec![
            vec![qi(-1), z(), ca.clone(), qi(-2) * &ca / &l],
            vec![-&hl, z(), &ca * &l / &qi(2), -&ca],
            zrow(),
            vec![z(), z(), -&hl, qi(1)],
        ]),
    ]
}

fn metric_1315(ps: &Params) -> QMatrix {
    let (a, l, b, c) = (p(ps, "a"), p(ps, "lambda"), p(ps, "b"), p(ps, "c"));
    let g44 = qi(-2) * &c / &l;
    QMatrix::from_rows(vec![
        vec![z(), z(), z(), -&a],
        vec![z(), z(), a.clone(), z()],
        vec![z(), a.clone(), b, c.clone()],
        vec![-&a, z(), c, g44],
    ])
}

fn identity4(_: &Params) -> QMatrix {
    QMatrix::identity(4)
}

fn span_u2(_: &Params) -> Vec<MVector> {
    vec![MVector::basis(4, 1)]
}

fn claim_42(ps: &Params) -> SolitonClaim {
    let k1 = p(ps, "k1");
    let x = &k1 / &(qi(1) + qi(2) * &k1 * &k1);
    SolitonClaim::Soliton {
        x: Some(vec![z(), x.clone(), x, z()]),
        sigma: SigmaClaim::Arbitrary,
    }
}

fn claim_1315(ps: &Params) -> SolitonClaim {
    let (a, l) = (p(ps, "a"), p(ps, "lambda"));
    let x2 = (&l * &l + qi(4)) / (qi(4) * &a * &l);
    SolitonClaim::Soliton {
        x: Some(vec![z(), x2, z(), z()]),
        sigma: SigmaClaim::Value(z()),
    }
}

fn claim_flat(_: &Params) -> SolitonClaim {
    SolitonClaim::Soliton {
        x: None,
        sigma: SigmaClaim::Value(z()),
    }
}

const NEUTRAL_3_1: &[(&str, &str)] = &[("label", "[1,111\u{304}]")];
const LORENTZ_3_2: &[(&str, &str)] = &[("label", "[11,11\u{304}]")];

pub(super) static ENTRIES: &[CatalogEntry] = &[
    CatalogEntry {
        id: "thm3.1-i",
        title: "SU(2)xR / SL(2,R)xR, neutral, case (i)",
        kind: EntryKind::Full,
        metric_status: MetricStatus::Searched,
        signature: Signature::Neutral,
        params: &[ALPHA, EPS],
        r: 0,
        n: 4,
        notes: &[],
        data: EntryData {
            brackets: br_31i,
            metric: None,
            lambda: None,
            ricci: Some(ricci_31i),
            system: None,
            claim: not_soliton,
            invariance: None,
            expected_segre: Some("[1,11\u{304}1]"),
            stated_segre: NEUTRAL_3_1,
        },
    },
    CatalogEntry {
        id: "thm3.1-ii",
        title: "SU(2)xR / SL(2,R)xR, neutral, case (ii)",
        kind: EntryKind::Full,
        metric_status: MetricStatus::Searched,
        signature: Signature::Neutral,
        params: &[ALPHA, EPS],
        r: 0,
        n: 4,
        notes: &[],
        data: EntryData {
            brackets: br_31ii,
            metric: None,
            lambda: Some(lambda_31ii),
            ricci: Some(ricci_31ii),
            system: Some("thm3.3-(ii)"),
            claim: not_soliton,
            invariance: None,
            expected_segre: Some("[1,11\u{304}1]"),
            stated_segre: NEUTRAL_3_1,
        },
    },
    CatalogEntry {
        id: "thm3.2-i",
        title: "SU(2)xR / SL(2,R)xR, Lorentzian, case (i)",
        kind: EntryKind::Full,
        metric_status: MetricStatus::Searched,
        signature: Signature::Lorentzian,
        params: &[ALPHA, EPS],
        r: 0,
        n: 4,
        notes: &[],
        data: EntryData {
            brackets: br_32i,
            metric: None,
            lambda: None,
            ricci: Some(ricci_32i),
            system: None,
            claim: not_soliton,
            invariance: None,
            expected_segre: Some("[11,1\u{304}1]"),
            stated_segre: LORENTZ_3_2,
        },
    },
    CatalogEntry {
        id: "thm3.2-ii",
        title: "SU(2)xR / SL(2,R)xR, Lorentzian, case (ii)",
        kind: EntryKind::Full,
        metric_status: MetricStatus::Searched,
        signature: Signature::Lorentzian,
        params: &[ALPHA, EPS],
        r: 0,
        n: 4,
        notes: &[],
        data: EntryData {
            brackets: br_32ii,
            metric: None,
            lambda: None,
            ricci: Some(ricci_32ii),
            system: None,
            claim: not_soliton,
            invariance: None,
            expected_segre: Some("[11,1\u{304}1]"),
            stated_segre: LORENTZ_3_2,
        },
    },
    CatalogEntry {
        id: "thm4.1-(22)",
        title: "two-step nilpotent Ricci operator, neutral Lie group",
        kind: EntryKind::Full,
        metric_status: MetricStatus::Searched,
        signature: Signature::Neutral,
        params: &[K1],
        r: 0,
        n: 4,
        notes: &["printed system rows 8 and 9 carry an x3 sign differing from the assembled system"],
        data: EntryData {
            brackets: br_22,
            metric: None,
            lambda: Some(lambda_22),
            ricci: Some(ricci_22),
            system: Some("thm4.1-(22)"),
            claim: not_soliton,
            invariance: None,
            expected_segre: Some("[(22)]"),
            stated_segre: &[("label", "[22]"), ("table", "[(22)]")],
        },
    },
    CatalogEntry {
        id: "thm4.2-[1,(12)]",
        title: "solvable R x| R^3, neutral, steady soliton",
        kind: EntryKind::Full,
        metric_status: MetricStatus::Searched,
        signature: Signature::Neutral,
        params: &[K1, K2, K3],
        r: 0,
        n: 4,
        notes: &["solution shape degenerates at k1^2 = 1/2 (no rational points)"],
        data: EntryData {
            brackets: br_42,
            metric: None,
            lambda: Some(lambda_42),
            ricci: Some(ricci_42),
            system: Some("thm4.2-[1,(12)]"),
            claim: claim_42,
            invariance: None,
            expected_segre: Some("[(1,12)]"),
            stated_segre: &[("label", "[1,(12)]"), ("table", "[(1,12)]")],
        },
    },
    CatalogEntry {
        id: "case-1.3.1:5",
        title: "homogeneous pair with one-dimensional isotropy (metric row mu = 0)",
        kind: EntryKind::Partial,
        metric_status: MetricStatus::Resolved,
        signature: Signature::Neutral,
        params: &[A, LAMBDA, B, C],
        r: 1,
        n: 4,
        notes: &[
            "m-brackets recovered from the printed connection; isotropy action and Ricci tensor absent",
            "invariance checked against the documented subspace span{u2}",
        ],
        data: EntryData {
            brackets: no_brackets,
            metric: Some(metric_1315),
            lambda: Some(lambda_1315),
            ricci: None,
            system: Some("case-1.3.1:5"),
            claim: claim_1315,
            invariance: Some(span_u2),
            expected_segre: None,
            stated_segre: &[("table", "[(1,12)]")],
        },
    },
    CatalogEntry {
        id: "abelian-flat",
        title: "abelian R^4 with the Euclidean metric",
        kind: EntryKind::Full,
        metric_status: MetricStatus::Resolved,
        signature: Signature::Riemannian,
        params: &[],
        r: 0,
        n: 4,
        notes: &[],
        data: EntryData {
            brackets: no_brackets,
            metric: Some(identity4),
            lambda: None,
            ricci: Some(zero_ricci),
            system: None,
            claim: claim_flat,
            invariance: None,
            expected_segre: Some("[(1111)]"),
            stated_segre: &[],
        },
    },
];

fn zero_ricci(_: &Params) -> QMatrix {
    QMatrix::zeros(4, 4)
}
