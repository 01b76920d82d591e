//! Exact rationals, matrices, linear solves and characteristic polynomials.

use nomizu::exact::{char_poly, factor_poly, minimal_poly, q, qi, rref_solve, QMatrix, Rational, Solved};

fn main() {
    let x: Rational = "-7/21".parse().unwrap();
    println!("-7/21 reduces to {x}; x² + 1/9 = {}", &(&x * &x) + &q(1, 9));

    // A singular 3×3 system with a one-dimensional solution line.
    let a = QMatrix::from_i64(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
    match rref_solve(&a, &[qi(6), qi(12), qi(2)]).unwrap() {
        Solved::Consistent(set) => {
            println!("particular {:?}, {} free directions", set.particular, set.nullspace.len());
        }
        Solved::Inconsistent(cert) => println!("inconsistent: {cert:?}"),
    }
    match rref_solve(&a, &[qi(6), qi(11), qi(2)]).unwrap() {
        Solved::Consistent(_) => unreachable!(),
        Solved::Inconsistent(cert) => println!("rows {:?} combine to 0 = nonzero", cert.support()),
    }

    let m = QMatrix::from_i64(&[&[0, 1, 0, 0], &[0, 0, 0, 0], &[0, 0, 0, -2], &[0, 0, 2, 0]]);
    let chi = char_poly(&m).unwrap();
    println!("χ(t) = {chi}");
    println!("minimal polynomial {}", minimal_poly(&m).unwrap());
    for f in factor_poly(&chi).unwrap() {
        println!("  factor {} with multiplicity {}", f.poly, f.multiplicity);
    }
    println!("Cayley–Hamilton: χ(M) = 0 is {}", chi.eval_matrix(&m).is_zero());
}
