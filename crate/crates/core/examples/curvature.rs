//! Nomizu operator, curvature, Ricci tensor and scalar curvature.

use nomizu::algebra::samples;
use nomizu::geometry::curvature_bundle;

fn main() {
    for pair in [samples::su2(), samples::heisenberg(), samples::hyperbolic4()] {
        let (lambda, b) = curvature_bundle(&pair).unwrap();
        println!("== {}", pair.id());
        println!("Λ(u1) =\n{}", lambda.on_m(0));
        println!("ϱ =\n{}", b.ricci);
        println!("Ricci operator Q = g⁻¹ϱ =\n{}", b.q);
        println!("τ = {}\n", b.tau);
    }
}
