//! Depth-two bracket relations, computed three independent ways.

use grt2::depth2::bracket_kernel;
use grt2::exact::same_span;
use grt2::theta::{psi_relation_space, reduced_len, relation_space};

fn main() -> grt2::Result<()> {
    for k in (8..=28).step_by(2) {
        let rank = relation_space(k)?;
        let psi = psi_relation_space(k)?;
        let ihara = bracket_kernel(k)?;
        let as_rows = |vs: &[grt2::theta::RelationVector]| -> Vec<Vec<grt2::Rational>> {
            vs.iter().map(|v| v.coefficients().to_vec()).collect()
        };
        let n = reduced_len(k);
        assert!(same_span(&as_rows(&rank), &as_rows(&psi), n));
        assert!(same_span(&as_rows(&rank), &as_rows(&ihara), n));
        println!("k={k}: {} relation(s)", rank.len());
        for v in &rank {
            println!("  {v}");
        }
    }
    Ok(())
}
