//! Weyl tensor in dimension ≥ 4, Cotton tensor in dimension 3.

use nomizu::algebra::samples;
use nomizu::catalog::instantiate;
use nomizu::geometry::{cotton_check, curvature_bundle, is_conformally_flat};
use nomizu::Params;

fn main() {
    let inst = instantiate("thm4.2-[1,(12)]", &Params::new()).unwrap();
    let (_, b) = curvature_bundle(&inst.pair).unwrap();
    let nonzero = b.weyl.as_ref().unwrap().iter().filter(|w| !w.is_zero()).count();
    println!("{}: {nonzero} nonzero Weyl components", inst.entry.id);

    println!("su(2) + R conformally flat: {}", is_conformally_flat(&samples::su2_plus_r()).unwrap());
    println!("RH^4 conformally flat: {}", is_conformally_flat(&samples::hyperbolic4()).unwrap());

    let c = cotton_check(&samples::heisenberg()).unwrap();
    let nz: Vec<String> = c.components.iter().filter(|x| !x.is_zero()).map(|x| x.to_string()).collect();
    println!("Heisenberg: Cotton tensor vanishes {}; nonzero components {}", c.conformally_flat, nz.join(", "));
    println!("su(2): Cotton tensor vanishes {}", cotton_check(&samples::su2()).unwrap().conformally_flat);
}
