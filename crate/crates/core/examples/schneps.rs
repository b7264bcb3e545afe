//! The antisymmetric extension of a relation vector and its polynomial test.

use grt2::depth2::{extend_antisymmetric, schneps_check, schneps_polynomial};
use grt2::theta::RelationVector;

fn main() -> grt2::Result<()> {
    let r = RelationVector::from_integers(12, &[1, -3])?;
    let full = extend_antisymmetric(&r);
    println!("relation {r}");
    println!("extended {:?}", full.iter().map(|c| c.to_string()).collect::<Vec<_>>());
    println!("polynomial {}", schneps_polynomial(12, &full));
    println!("vanishes in the coinvariants: {}", schneps_check(&r));

    let bogus = RelationVector::from_integers(12, &[1, 1])?;
    println!("{bogus} vanishes: {}", schneps_check(&bogus));
    Ok(())
}
