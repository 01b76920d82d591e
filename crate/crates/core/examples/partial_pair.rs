//! A pair known only through its Nomizu operators and metric: recover the
//! m-brackets, solve the printed system, check isotropy invariance.

use nomizu::catalog::{instantiate, verify_entry};
use nomizu::exact::qi;
use nomizu::soliton::solve;
use nomizu::Params;

fn main() {
    let params: Params = [("a", qi(2)), ("lambda", qi(1)), ("b", qi(1)), ("c", qi(1))]
        .into_iter()
        .map(|(k, v)| (k.to_string(), v))
        .collect();
    let inst = instantiate("case-1.3.1:5", &params).unwrap();
    println!("partial: {}, metric\n{}", inst.pair.is_partial(), inst.pair.metric());
    for (i, j) in [(0, 2), (0, 3), (1, 2), (1, 3)] {
        println!("[u{},u{}]_m = {:?}", i + 1, j + 1, inst.pair.bracket_m(i, j).0);
    }
    let system = inst.fixtures.system.as_ref().unwrap();
    for row in &system.rows {
        println!("  ({}) {row}", row.label);
    }
    let sol = solve(system).unwrap();
    println!("solution {:?}, quadratic rows linearized: {:?}", sol.set.as_ref().unwrap().particular, sol.linearized);
    let rep = verify_entry("case-1.3.1:5", &params).unwrap();
    for name in ["soliton_field", "invariant_field"] {
        let c = rep.check(name).unwrap();
        println!("{} {name}: {}", c.verdict, c.detail);
    }
}
