//! Segre symbol notation.
//!
//! A symbol is `[` tokens `]` where a token is a block size (a digit,
//! optionally followed by U+0304 COMBINING MACRON to mark a complex
//! eigenvalue), `(` / `)` grouping equal eigenvalues, `,` the causal split,
//! or `|`. Parsing is token-level and lenient so that every printed symbol,
//! including unbalanced ones, round-trips byte for byte; `validate` reports
//! structural problems separately.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::SegreError;

pub const MACRON: char = '\u{0304}';

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SegreToken {
    Block { size: u8, barred: bool },
    Open,
    Close,
    Comma,
    Pipe,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SegreSymbol {
    tokens: Vec<SegreToken>,
}

impl SegreSymbol {
    pub fn from_tokens(tokens: Vec<SegreToken>) -> Self {
        SegreSymbol { tokens }
    }

    pub fn tokens(&self) -> &[SegreToken] {
        &self.tokens
    }

    /// Sum of block sizes.
    pub fn dimension(&self) -> usize {
        self.tokens
            .iter()
            .map(|t| match t {
                SegreToken::Block { size, .. } => *size as usize,
                _ => 0,
            })
            .sum()
    }

    /// Structural problems: unbalanced or nested parentheses, empty groups,
    /// a barred block without an adjacent unbarred partner of the same size.
    pub fn validate(&self) -> Vec<String> {
        let mut problems = Vec::new();
        let mut depth = 0i32;
        let mut group_len = 0usize;
        for (k, t) in self.tokens.iter().enumerate() {
            match t {
                SegreToken::Open => {
                    if depth > 0 {
                        problems.push(format!("nested '(' at token {k}"));
                    }
                    depth += 1;
                    group_len = 0;
                }
                SegreToken::Close => {
                    if depth == 0 {
                        problems.push(format!("unmatched ')' at token {k}"));
                    } else {
                        if group_len == 0 {
                            problems.push(format!("empty group closing at token {k}"));
                        }
                        depth -= 1;
                    }
                }
                SegreToken::Block { size, barred } => {
                    group_len += 1;
                    if *barred {
                        let partner = |i: Option<usize>| {
                            i.and_then(|i| self.tokens.get(i)).is_some_and(|t| {
                                *t == SegreToken::Block {
                                    size: *size,
                                    barred: false,
                                }
                            })
                        };
                        if !partner(k.checked_sub(1)) && !partner(Some(k + 1)) {
                            problems.push(format!("barred block at token {k} has no conjugate partner"));
                        }
                    }
                }
                SegreToken::Comma | SegreToken::Pipe => {}
            }
        }
        if depth > 0 {
            problems.push("unclosed '('".to_string());
        }
        if self.dimension() == 0 {
            problems.push("no blocks".to_string());
        }
        problems
    }

    pub fn is_well_formed(&self) -> bool {
        self.validate().is_empty()
    }

    /// Equal up to the order of the two blocks of each complex pair, so that
    /// "1̄1" and "11̄" compare equal.
    pub fn equivalent(&self, other: &SegreSymbol) -> bool {
        self.normalized() == other.normalized()
    }

    fn normalized(&self) -> Vec<SegreToken> {
        let mut t = self.tokens.clone();
        for k in 1..t.len() {
            if let (
                SegreToken::Block { size: a, barred: true },
                SegreToken::Block { size: b, barred: false },
            ) = (t[k - 1], t[k])
            {
                if a == b {
                    t.swap(k - 1, k);
                }
            }
        }
        t
    }
}

/// True iff some parenthesized group holds more than one block.
pub fn is_degenerate(sym: &SegreSymbol) -> bool {
    let mut in_group = false;
    let mut count = 0;
    for t in sym.tokens() {
        match t {
            SegreToken::Open => {
                in_group = true;
                count = 0;
            }
            SegreToken::Close => {
                if in_group && count > 1 {
                    return true;
                }
                in_group = false;
            }
            SegreToken::Block { .. } if in_group => count += 1,
            _ => {}
        }
    }
    in_group && count > 1
}

impl fmt::Display for SegreSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for t in &self.tokens {
            match t {
                SegreToken::Block { size, barred } => {
                    write!(f, "{size}")?;
                    if *barred {
                        write!(f, "{MACRON}")?;
                    }
                }
                SegreToken::Open => f.write_str("(")?,
                SegreToken::Close => f.write_str(")")?,
                SegreToken::Comma => f.write_str(",")?,
                SegreToken::Pipe => f.write_str("|")?,
            }
        }
        f.write_str("]")
    }
}

impl FromStr for SegreSymbol {
    type Err = SegreError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |why: &str| SegreError::Parse(s.to_string(), why.to_string());
        let body = s
            .strip_prefix('[')
            .and_then(|b| b.strip_suffix(']'))
            .ok_or_else(|| err("expected surrounding brackets"))?;
        let mut tokens: Vec<SegreToken> = Vec::new();
        for ch in body.chars() {
            let tok = match ch {
                '1'..='9' => SegreToken::Block {
                    size: ch as u8 - b'0',
                    barred: false,
                },
                MACRON => match tokens.last_mut() {
                    Some(SegreToken::Block { barred, .. }) if !*barred => {
                        *barred = true;
                        continue;
                    }
                    _ => return Err(err("macron must follow an unbarred block size")),
                },
                '(' => SegreToken::Open,
                ')' => SegreToken::Close,
                ',' => SegreToken::Comma,
                '|' => SegreToken::Pipe,
                _ => return Err(err(&format!("unexpected character {ch:?}"))),
            };
            tokens.push(tok);
        }
        Ok(SegreSymbol { tokens })
    }
}

impl Serialize for SegreSymbol {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for SegreSymbol {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Every symbol printed in the two Segre tables (signature (2,2), then
/// Lorentzian), with bars written as a combining macron on the barred digit.
pub const TABLE_SYMBOLS: &[&str] = &[
    "[1,111\u{304}]",
    "[1,1\u{304}11\u{304}]",
    "[22]",
    "[(11),(11)]",
    "[(1|1,1|1)]",
    "[(11,1)1)]",
    "[1(1,11))]",
    "[(11,11)]",
    "[(1,1)11\u{304}]",
    "[(1,1\u{304}11\u{304})]",
    "[(1,1)2]",
    "[1,(12)]",
    "[(1,12)]",
    "[(22)]",
    "[211\u{304}]",
    "[22\u{304}]",
    "[13]",
    "[1,3]",
    "[4]",
    "[(13)]",
    "[(1,3)]",
    "[11,11\u{304}]",
    "[(11),(1,1)]",
    "[1(11,1)]",
    "[(111)1)]",
    "[(111,1)]",
    "[(11),11\u{304}]",
    "[(11),2]",
    "[1(1,2)]",
    "[(11,2)]",
];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_symbols_roundtrip() {
        for s in TABLE_SYMBOLS {
            let sym: SegreSymbol = s.parse().unwrap();
            assert_eq!(sym.to_string(), *s);
            assert_eq!(sym.dimension(), 4, "{s}");
        }
    }

    #[test]
    fn malformed_table_entries_are_flagged() {
        let bad: Vec<&str> = TABLE_SYMBOLS
            .iter()
            .copied()
            .filter(|s| !s.parse::<SegreSymbol>().unwrap().is_well_formed())
            .collect();
        assert_eq!(bad, vec!["[(11,1)1)]", "[1(1,11))]", "[(111)1)]"]);
    }

    #[test]
    fn degeneracy() {
        let d = |s: &str| is_degenerate(&s.parse().unwrap());
        assert!(!d("[111,1]"));
        assert!(d("[(11),(1,1)]"));
        assert!(d("[(1,12)]"));
        assert!(d("[1,(12)]"));
        assert!(!d("[1,11\u{304}1]"));
    }

    #[test]
    fn conjugate_order_equivalence() {
        let s = |x: &str| x.parse::<SegreSymbol>().unwrap();
        assert!(s("[1,11\u{304}1]").equivalent(&s("[1,111\u{304}]")));
        assert!(s("[11,1\u{304}1]").equivalent(&s("[11,11\u{304}]")));
        assert!(!s("[(1,12)]").equivalent(&s("[1,(12)]")));
    }

    #[test]
    fn parse_errors() {
        for s in ["111,1", "[1x]", "[\u{304}1]", "[1\u{304}\u{304}]", "[0]"] {
            assert!(s.parse::<SegreSymbol>().is_err(), "{s:?}");
        }
    }
}
