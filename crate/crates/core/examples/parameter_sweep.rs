//! Sweep a family over a rational grid and track where the soliton moves.

use nomizu::catalog::{entry, verify_entry};
use nomizu::cli::{parse_range, sweep_points};
use nomizu::Params;

fn main() {
    let e = entry("thm4.2-[1,(12)]").unwrap();
    let ranges = vec![parse_range("k1=-1:1:1/4").unwrap()];
    let (points, skipped) = sweep_points(e, &Params::new(), &ranges).unwrap();
    println!("{} points, {} outside the domain", points.len(), skipped.len());
    for p in points {
        let rep = verify_entry(e.id, &p).unwrap();
        let s = rep.stages.soliton.as_ref().unwrap();
        let x = s.particular.as_ref().unwrap();
        println!("k1 = {:>5}: x2 = x3 = {:>6}, ς = {}, {}", p["k1"].to_string(), x[1].to_string(), x[4], rep.verdict);
    }
}
