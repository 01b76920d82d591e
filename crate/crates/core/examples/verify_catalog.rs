//! Verify catalog entries against their printed fixtures.

use nomizu::catalog::{entries, verify_entry};
use nomizu::exact::{q, qi};
use nomizu::Params;

fn main() {
    let params: Params = [("k1".to_string(), q(1, 2))].into();
    print!("{}", verify_entry("thm4.2-[1,(12)]", &params).unwrap().to_table());

    let params: Params = [("alpha".to_string(), qi(2)), ("eps".to_string(), qi(-1))].into();
    let rep = verify_entry("thm3.1-ii", &params).unwrap();
    println!("\nthm3.1-ii at α = 2, ε = −1: {}", rep.verdict);

    println!("\nevery entry at its defaults:");
    for e in entries() {
        let rep = verify_entry(e.id, &Params::new()).unwrap();
        println!("  {:<18} {}  ({} discrepancies)", e.id, rep.verdict, rep.discrepancies.len());
    }
}
