//! Assemble and solve the invariant Ricci soliton system exactly.

use nomizu::catalog::instantiate;
use nomizu::exact::{q, qi, Rational};
use nomizu::geometry::curvature_bundle;
use nomizu::soliton::{assemble_system, classify, solve};
use nomizu::Params;

fn main() {
    for k1 in [qi(1), q(1, 2), qi(-2), qi(3)] {
        let params: Params = [("k1".to_string(), k1.clone())].into();
        let inst = instantiate("thm4.2-[1,(12)]", &params).unwrap();
        let (_, b) = curvature_bundle(&inst.pair).unwrap();
        let system = assemble_system(&inst.pair, &b.ricci).unwrap();
        let sol = solve(&system).unwrap();
        let set = sol.set.as_ref().unwrap();
        let class = classify(&sol, &set.particular).unwrap();
        let expect = &k1 / &(Rational::one() + &(qi(2) * &k1 * &k1));
        println!("k1 = {k1}: (x, ς) = {:?}, {class}; k1/(1+2k1²) = {expect}", set.particular);
    }

    let inst = instantiate("thm3.1-ii", &Params::new()).unwrap();
    let (_, b) = curvature_bundle(&inst.pair).unwrap();
    let sol = solve(&assemble_system(&inst.pair, &b.ricci).unwrap()).unwrap();
    let cert = sol.certificate.unwrap();
    let rows: Vec<String> = cert.rows.iter().map(|r| format!("{}·row{}", r.coefficient, r.label)).collect();
    println!("thm3.1-ii: no soliton, {} = (0 = 1)", rows.join(" + "));
}
