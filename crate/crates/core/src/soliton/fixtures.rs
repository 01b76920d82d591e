//! Printed soliton systems, transcribed row by row in printed order.
//! Right-hand sides are moved to the left, so every row reads `… = 0`.

use super::{Provenance, SolitonSystem, SystemRow};
use crate::error::SolitonError;
use crate::exact::{qi, Rational};
use crate::Params;

pub const FIXTURE_IDS: &[&str] = &["thm3.3-(ii)", "thm4.1-(22)", "thm4.2-[1,(12)]", "case-1.3.1:5"];

/// Builder for one row over (x₁..x_n, ς).
struct Row(SystemRow);

impl Row {
    fn new(label: usize, n: usize) -> Self {
        Row(SystemRow::zero(label.to_string(), n))
    }
    fn x(mut self, k: usize, c: Rational) -> Self {
        self.0.linear[k - 1] += c;
        self
    }
    fn sigma(mut self, c: Rational) -> Self {
        let n = self.0.n();
        self.0.linear[n] += c;
        self
    }
    fn x_sigma(mut self, k: usize, c: Rational) -> Self {
        let n = self.0.n();
        self.0.quadratic.push((k - 1, n, c));
        self
    }
    fn konst(mut self, c: Rational) -> Self {
        self.0.constant += c;
        self
    }
}

fn param(params: &Params, name: &str) -> Result<Rational, SolitonError> {
    params
        .get(name)
        .cloned()
        .ok_or_else(|| SolitonError::MissingParameter(name.to_string()))
}

fn system(id: &str, rows: Vec<Row>) -> SolitonSystem {
    SolitonSystem {
        id: id.to_string(),
        n: 4,
        provenance: Provenance::Fixture,
        rows: rows.into_iter().map(|r| r.0).collect(),
    }
}

/// Printed system for a known id at the given parameter values.
pub fn load_fixture_system(id: &str, params: &Params) -> Result<SolitonSystem, SolitonError> {
    match id {
        "thm3.3-(ii)" => thm33(params),
        "thm4.1-(22)" => thm41(params),
        "thm4.2-[1,(12)]" => thm42(params),
        "case-1.3.1:5" => case_1315(params),
        _ => Err(SolitonError::UnknownFixture(id.to_string())),
    }
}

fn thm33(p: &Params) -> Result<SolitonSystem, SolitonError> {
    let al = param(p, "alpha")?;
    let ep = param(p, "eps")?;
    let a2 = &al * &al;
    let e2a2 = &(&ep * &ep) * &a2;
    let ea = &ep * &al;
    let r = |i| Row::new(i, 4);
    Ok(system(
        "thm3.3-(ii)",
        vec![
            r(1).konst(-qi(4) * &a2).sigma(qi(1)),
            r(2).konst(-qi(4) * &e2a2).sigma(qi(-1)),
            r(3).konst(-qi(2) * &e2a2 - qi(2) * &a2),
            r(4).x(1, al.clone()).x(4, -qi(2) * &al),
            r(5).x(1, qi(2) * &al).x(4, al.clone()),
            r(6).x(1, -ea.clone()).x(4, -qi(2) * &ea),
            r(7).x(1, qi(2) * &ea).x(4, -ea.clone()),
            r(8).x(2, qi(2) * &ea)
                .x(3, -qi(2) * &al)
                .konst(-qi(2) * &e2a2 + qi(2) * &a2)
                .sigma(qi(1)),
            r(9).x(2, qi(2) * &ea)
                .x(3, -qi(2) * &al)
                .konst(qi(2) * &e2a2 - qi(2) * &a2)
                .sigma(qi(-1)),
        ],
    ))
}

fn thm41(p: &Params) -> Result<SolitonSystem, SolitonError> {
    let k = param(p, "k1")?;
    if k.is_zero() {
        return Err(SolitonError::MissingParameter("k1 (nonzero)".into()));
    }
    let k2 = &k * &k;
    let one = qi(1);
    let over = |num: Rational, den: i64| num / (&qi(den) * &k);
    let a = over(one.clone(), 8); // 1/(8k)
    let b = over(&one + &(qi(4) * &k2), 4); // (1+4k²)/(4k)
    let c = over(&one + &(qi(16) * &k2), 8); // (1+16k²)/(8k)
    let d = over(&qi(-1) + &(qi(4) * &k2), 4); // (−1+4k²)/(4k)
    let e = over(&one + &(qi(8) * &k2), 2); // (1+8k²)/(2k)
    let f = over(&one + &(qi(8) * &k2), 4); // (1+8k²)/(4k)
    let g = over(&qi(-1) + &(qi(4) * &k2), 2); // (−1+4k²)/(2k)
    let h = over(&one + &(qi(4) * &k2), 2); // (1+4k²)/(2k)
    let r = |i| Row::new(i, 4);
    Ok(system(
        "thm4.1-(22)",
        vec![
            r(1).x(2, a.clone()).x(4, b.clone()),
            r(2).x(4, -c.clone()).x(2, d.clone()),
            r(3).x(4, a.clone()).x(2, b.clone()),
            r(4).x(2, -c.clone()).x(4, d.clone()),
            r(5).konst(qi(1)).sigma(qi(1)).x(1, -e.clone()),
            r(6).x(1, f.clone()).x(3, f.clone()).konst(qi(-1)),
            r(7).x(3, -e.clone()).konst(qi(1)).sigma(qi(-1)),
            r(8).x(1, -g.clone()).konst(qi(1)).sigma(qi(-1)).x(3, h.clone()),
            r(9).x(1, -h.clone()).konst(qi(1)).sigma(qi(1)).x(3, g.clone()),
            r(10).x(1, &c - &a).x(3, &c - &a).konst(qi(-1)),
        ],
    ))
}

fn thm42(p: &Params) -> Result<SolitonSystem, SolitonError> {
    let k1 = param(p, "k1")?;
    let k2 = param(p, "k2")?;
    let k3 = param(p, "k3")?;
    if k1.is_zero() {
        return Err(SolitonError::MissingParameter("k1 (nonzero)".into()));
    }
    let c = (qi(1) + qi(2) * &k1 * &k1) / &k1; // (1+2k₁²)/k₁
    let half_c = &c / &qi(2);
    let r = |i| Row::new(i, 4);
    Ok(system(
        "thm4.2-[1,(12)]",
        vec![
            r(1).x(1, -(qi(1) / (qi(2) * &k1))).x(2, k2.clone()).x(3, -k2.clone()),
            r(2).x(2, k1.recip()).x(3, -k1.recip()).sigma(qi(-1)),
            r(3).x(2, -qi(2) * &k1).x(3, qi(2) * &k1).sigma(qi(1)),
            r(4).x(2, -k3.clone()).x(3, k3.clone()).x(4, -k1.clone()),
            r(5).x(1, -qi(2) * &k2)
                .x(4, -qi(2) * &k3)
                .konst(qi(1))
                .sigma(qi(1))
                .x(2, -c.clone()),
            r(6).x(1, -qi(2) * &k2)
                .x(4, -qi(2) * &k3)
                .konst(qi(1))
                .sigma(qi(-1))
                .x(3, -c.clone()),
            r(7).x(1, qi(2) * &k2)
                .x(4, qi(2) * &k3)
                .konst(qi(-1))
                .x(2, half_c.clone())
                .x(3, half_c),
        ],
    ))
}

fn case_1315(p: &Params) -> Result<SolitonSystem, SolitonError> {
    let a = param(p, "a")?;
    let l = param(p, "lambda")?;
    let b = param(p, "b")?;
    let c = param(p, "c")?;
    if l.is_zero() {
        return Err(SolitonError::MissingParameter("lambda (nonzero)".into()));
    }
    let l2 = &l * &l;
    let r = |i| Row::new(i, 4);
    Ok(system(
        "case-1.3.1:5",
        vec![
            r(1).x(3, a.clone()),
            r(2).x(1, -qi(2) * &a).sigma(qi(2) * &c / &l),
            r(3).x(4, a.clone()).sigma(a.clone()),
            r(4).x_sigma(1, a.clone()).sigma(-c.clone()),
            r(5).x(3, -(&a * &(qi(1) + &l2))).x(4, -(&a * &l)),
            r(6).x(3, -(&a * &l)).x(4, -a.clone()).sigma(-a.clone()),
            // … = −2 moved left
            r(7).x(1, -qi(2) * &a * (qi(1) + &l2))
                .x(2, qi(2) * &a * &l)
                .konst(&l2 / &qi(2) + qi(2))
                .sigma(-b),
        ],
    ))
}
