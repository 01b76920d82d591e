//! Build algebras in code and from JSON spec files, and validate them.

use nomizu::algebra::{build_pair, samples, PairBuilder, PairSpec};
use nomizu::exact::QMatrix;

const SO2_SPEC: &str = r#"{
  "id": "so2-on-r4",
  "dims": { "r": 1, "n": 4 },
  "brackets": [
    { "i": "e1", "j": "u1", "components": ["0", "0", "1", "0", "0"] },
    { "i": "e1", "j": "u2", "components": ["0", "-1", "0", "0", "0"] }
  ],
  "metric": [ { "i": 1, "j": 1, "value": "1" }, { "i": 2, "j": 2, "value": "1" },
              { "i": 3, "j": 3, "value": "1" }, { "i": 4, "j": 4, "value": "-1" } ]
}"#;

fn main() {
    let h = samples::heisenberg();
    println!("{}: {} nonzero relations, Jacobi violations {}", h.id(), h.nonzero_relations(), h.jacobi_check().len());

    let spec: PairSpec = serde_json::from_str(SO2_SPEC).unwrap();
    let pair = build_pair(&spec).unwrap();
    let inv = pair.metric_invariance_check().unwrap();
    println!("{}: r = {}, n = {}, metric invariant under h: {}", pair.id(), pair.r(), pair.n(), inv.invariant);
    println!("round trip:\n{}", serde_json::to_string_pretty(&PairSpec::from_pair(&pair)).unwrap());

    // [u1,u2] = u1, [u1,u3] = u2 breaks the Jacobi identity.
    let bad = PairBuilder::lie_algebra(3)
        .bracket_mm_i64(0, 1, &[1, 0, 0])
        .bracket_mm_i64(0, 2, &[0, 1, 0])
        .metric(QMatrix::identity(3))
        .build();
    println!("non-Lie table rejected: {}", bad.unwrap_err());
}
