//! Recover the sign placement of a pseudo-orthonormal metric from printed data.

use nomizu::catalog::resolve_metric;

fn main() {
    for id in ["thm3.1-ii", "thm3.2-i", "thm4.1-(22)", "case-1.3.1:5"] {
        let res = resolve_metric(id).unwrap();
        println!("{id}: {:?} metric {:?}", res.status, res.metric);
        for c in &res.candidates {
            println!(
                "    {:<28} ϱ match {:<5} Λ matched {:?}{}",
                c.label,
                c.ricci_match.map_or("-".to_string(), |b| b.to_string()),
                c.lambda_match,
                if c.survived { "  <- survivor" } else { "" }
            );
        }
        for (s, ps) in &res.isometries {
            println!("    candidate {s} is isometric to the representative via {} signed permutation(s)", ps.len());
        }
    }
}
