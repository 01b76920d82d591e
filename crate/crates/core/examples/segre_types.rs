//! Segre classification of Ricci operators and the symbol notation.

use nomizu::catalog::instantiate;
use nomizu::exact::{qi, QMatrix};
use nomizu::geometry::curvature_bundle;
use nomizu::segre::{segre_type, SegreSymbol, TABLE_SYMBOLS};
use nomizu::Params;

fn main() {
    for id in ["thm3.1-i", "thm3.2-i", "thm4.1-(22)", "thm4.2-[1,(12)]", "abelian-flat"] {
        let inst = instantiate(id, &Params::new()).unwrap();
        let (_, b) = curvature_bundle(&inst.pair).unwrap();
        let t = segre_type(&b.q, inst.pair.metric()).unwrap();
        println!("{id:<18} {:<10} min poly {}", t.symbol.to_string(), t.min_poly);
    }

    // A Lorentzian operator with a null double root.
    let g = QMatrix::from_i64(&[&[0, 1, 0, 0], &[1, 0, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]]);
    let q = QMatrix::from_fn(4, 4, |i, j| match (i, j) {
        (0, 0) | (1, 1) => qi(2),
        (0, 1) => qi(1),
        (2, 2) => qi(-1),
        (3, 3) => qi(3),
        _ => qi(0),
    });
    println!("null Jordan block example: {}", segre_type(&q, &g).unwrap().symbol);

    for s in TABLE_SYMBOLS.iter().take(6) {
        let sym: SegreSymbol = s.parse().unwrap();
        let problems = sym.validate();
        println!("{s:<14} well formed: {}{}", problems.is_empty(), if problems.is_empty() { String::new() } else { format!(" ({})", problems.join("; ")) });
    }
}
