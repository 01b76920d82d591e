//! Table rows whose bracket data is not available. Stored verbatim as
//! strings (ωᵢ the dual coframe, ωᵢωⱼ the symmetric product) and never
//! instantiated. The μ = 0 row of case 1.3.1:5 is the reproducible
//! `case-1.3.1:5` entry and is not repeated here.

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub id: &'static str,
    pub table: u8,
    /// Segre type in the table heading.
    pub segre: &'static str,
    pub case: &'static str,
    pub metric: &'static str,
    pub field: &'static str,
    pub sigma: &'static str,
    pub invariant: &'static str,
}

const T3: &str = "[(22)]";
const T4: &str = "[(1,12)]";
const T5: &str = "[(11,2)]";

macro_rules! row {
    ($t:expr, $seg:expr, $case:expr, $g:expr, $x:expr, $s:expr, $inv:expr) => {
        TableRow {
            id: concat!("table", $t, "-", $case),
            table: $t,
            segre: $seg,
            case: $case,
            metric: $g,
            field: $x,
            sigma: $s,
            invariant: $inv,
        }
    };
}

pub static TABLE_ROWS: &[TableRow] = &[
    row!(
        3,
        T3,
        "1.3.1:5",
        "2a(-ω1ω4+ω2ω3) + (2cλμ-dλ²-μd-2cλ)/(μ(μ-1)) ω3ω3 + 2c ω3ω4 + d ω4ω4",
        "μ(μ-2)/(4a) u1 - λμ/(4a) u2",
        "0",
        "yes"
    ),
    row!(
        3,
        T3,
        "1.3.1:28",
        "2a(-ω1ω4+ω2ω3) + 2/(8ς) ω3ω3 + 1/(8ς) ω4ω4",
        "x1 u1 - 7/(8a) u2 + ς u3",
        "nonzero",
        "iff x1 = 0"
    ),
    row!(
        3,
        T3,
        "1.3.1:29",
        "2a(-ω1ω4+ω2ω3) + 2/(8ς) ω3ω3 - 1/(8ς) ω4ω4",
        "x1 u1 - 7/(8a) u2 + ς u3",
        "nonzero",
        "iff x1 = 0"
    ),
    row!(
        3,
        T3,
        "1.3.1:30",
        "(1) 2a(-ω1ω4+ω2ω3) + b(λ²-λ) ω3ω3 - (dλ-d) ω3ω4 + d ω4ω4; \
         (2) 2a(-ω1ω4+ω2ω3) + b ω3ω4 + d ω4ω4; \
         (3) 2a(-ω1ω4+ω2ω3) + b(μ²+μ) ω3ω3 - (bμ-dμ-d-b) ω3ω4 + d ω4ω4",
        "(1) (λ²-1)/(4aλ) u2; (2) x1 u1 + b/(4ad) u2 - 1/(2d) u3; (3) (μ²-1)/(4a) (u1-u2)",
        "(1) 0; (2) -1/(2d); (3) 0",
        "(1) yes; (2) iff x1 = 0; (3) yes"
    ),
    row!(
        4,
        T4,
        "1.1.1:1",
        "2a ω1ω3 + 2c ω2ω4 + d ω4ω4",
        "(1) (-a²+c²+2ςda²)/(4a²c) u2 - ς u4; (2) ςd/(2a) u2 - ς u4",
        "arbitrary",
        "yes"
    ),
    row!(
        4,
        T4,
        "1.1.1:2",
        "(1) 2a ω1ω3 + 2c ω2ω4 + d ω4ω4, λ = 0; (2) 2a ω1ω3 + 2c ω2ω4 + d ω4ω4",
        "(1) x1 u1 + (1+2ςd)/(4c) u2 + ς u4; (2) x1 u1 + (2λ-1)/(4cλ) u2",
        "(1) arbitrary; (2) 0",
        "(1) iff x1 = 0; (2) yes"
    ),
    row!(
        4,
        T4,
        "1.3.1:7",
        "2a(-ω1ω4+ω2ω3) + b ω3ω3 + 2c ω3ω4 - 2c ω4ω4",
        "(-1-2λμ+μ²+λ²)/(4a) u1",
        "0",
        "yes"
    ),
    row!(
        4,
        T4,
        "1.3.1:12",
        "(1) H + b ω3ω3 + 2c ω3ω4 + d ω4ω4; \
         (2) same, λ = 0, μ = 0; \
         (3) H + b ω3ω3 + d ω4ω4, λ = 0; \
         (4) H + b ω3ω3 + 2c ω3ω4 + d ω4ω4, λ = 1-μ; \
         (5) same, μ = 1/2; \
         (6) same, λ = 0, μ = 1/2; H = 2a(-ω1ω4+ω2ω3)",
        "(1) (-1-2λμ+μ²+λ²)/(4a) u1; (2) (-1+2ςd)/(4a) u1 + x2 u2 + ς u4; \
         (3) (-1+μ²+2ςd)/(4a) u1 + x2 u2 + ς u4; (4) μ(μ²-1)/a u1; \
         (5) (4λ²-4λ-3)/(16a) u1; (6) (3+8ςd)/(16a) u1 + x2 u2 - ς u4",
        "(1) 0; (2) arbitrary; (3) arbitrary; (4) 0; (5) 0; (6) 0",
        "(1) yes; (2) iff x2 = 0; (3) iff x2 = 0; (4) yes; (5) yes; (6) iff x2 = 0"
    ),
    row!(
        4,
        T4,
        "1.3.1:19",
        "2a(-ω1ω4+ω2ω3) + 2c ω3ω4 + d ω4ω4",
        "1/(4a) u1",
        "0",
        "yes"
    ),
    row!(
        4,
        T4,
        "1.3.1:21",
        "2a(-ω1ω4+ω2ω3) + 2c ω3ω4 + d ω4ω4",
        "(λ-2)λ/(4a) u1",
        "0",
        "yes"
    ),
    row!(
        4,
        T4,
        "1.3.1:30",
        "(1) 2a(ω2ω3-ω1ω4) + b ω3ω3 + b(1-μ) ω3ω4 + d ω4ω4, λ = 1; \
         (2) 2a(ω2ω3-ω1ω4) + b ω3ω3 + b(1-μ) ω3ω4 - 1/(2ς) ω4ω4, λ = 1, μ = 0; \
         (3) 2a(ω2ω3-ω1ω4) - 1/(2ς) ω3ω3 + b(1-μ) ω3ω4 + d ω4ω4, λ = 0, μ = 1; \
         (4) 2a(ω2ω3-ω1ω4) + b ω3ω3 + b(1-μ) ω3ω4 + d ω4ω4, μ = 1",
        "(1) (1-μ²)/(4aμ) u1; (2) x1 u1 + b/(4ad) u2 + ς u3; (3) ςd/(2a) u1 + x2 u2 + ς u4; \
         (4) (λ²-1)/(4aλ) u2",
        "(1) 0; (2) arbitrary; (3) arbitrary; (4) 0",
        "(1) yes; (2) iff x1 = 0; (3) iff x2 = 0; (4) yes"
    ),
    row!(
        4,
        T4,
        "1.4.1:10",
        "a(-2ω1ω3+ω2ω2) + b ω3ω3 + 2c ω3ω4 + d ω4ω4, ad < 0, r = p²+p",
        "p(p+1)/a u1",
        "0",
        "yes"
    ),
    row!(
        4,
        T4,
        "2.2.1:2",
        "2a(ω1ω3+ω2ω4) + b ω2ω2",
        "(p²-4)/(4ap) u4",
        "0",
        "yes"
    ),
    row!(
        4,
        T4,
        "2.2.1:3",
        "2a(ω1ω3+ω2ω4) + b ω2ω2",
        "x1 u1 + ς u2 + (2ςb-1)/(4a) u4",
        "arbitrary",
        "iff x1 = 0"
    ),
    row!(
        4,
        T4,
        "2.5.1:4",
        "2a(ω1ω3+ω2ω4) + b ω3ω3",
        "(2h-h²+4P)/(4a) u1",
        "0",
        "yes"
    ),
    row!(
        4,
        T4,
        "3.3.1:1",
        "2a(ω1ω3+ω2ω4) + b ω3ω3",
        "p/a u1",
        "0",
        "yes"
    ),
    row!(
        5,
        T5,
        "1.1.2:1",
        "c(ω1ω1+ω3ω3) + 2b ω2ω4 + d ω4ω4, p = 2",
        "(4c²+b²-2ςdc²)/(8c²b) u2 + ς/2 u4",
        "arbitrary",
        "yes"
    ),
    row!(
        5,
        T5,
        "1.1.2:2",
        "(1) c(ω1ω1+ω3ω3) + 2b ω2ω4 + d ω4ω4, p = 2; (2) c(ω1ω1+ω3ω3) + 2b ω2ω4 + d ω4ω4",
        "(1) (2-ςd)/(4b) u2 + ς/2 u4; (2) (p-1)/(bp) u2 + ς u3",
        "(1) arbitrary; (2) 0",
        "(1) yes; (2) yes"
    ),
    row!(
        5,
        T5,
        "1.4.1:9",
        "a(-2ω1ω3+ω2ω2) + b ω3ω3 + 2c ω3ω4 - a(4r+1)/4 ω4ω4, p = -1/2",
        "(4r-3)/(16a) u1",
        "0",
        "yes"
    ),
    row!(
        5,
        T5,
        "1.4.1:10",
        "a(-2ω1ω3+ω2ω2) + b ω3ω3 + 2c ω3ω4 + d ω4ω4, ad > 0",
        "p(1+p)/a u1",
        "0",
        "yes"
    ),
    row!(
        5,
        T5,
        "2.5.2:2",
        "2a ω1ω3 + a(ω2ω2+ω4ω4) + b ω3ω3",
        "(r²+p)/a u1",
        "0",
        "yes"
    ),
    row!(
        5,
        T5,
        "3.3.2:1",
        "2a ω1ω3 + a(ω2ω2+ω4ω4) + b ω3ω3",
        "p/a u1",
        "0",
        "yes"
    ),
];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rows_per_table() {
        let count = |t| TABLE_ROWS.iter().filter(|r| r.table == t).count();
        assert_eq!((count(3), count(4), count(5)), (4, 12, 6));
    }

    #[test]
    fn ids_are_unique() {
        let mut ids: Vec<&str> = TABLE_ROWS.iter().map(|r| r.id).collect();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), TABLE_ROWS.len());
    }

    #[test]
    fn id_shape() {
        assert_eq!(TABLE_ROWS[0].id, "table3-1.3.1:5");
    }
}
