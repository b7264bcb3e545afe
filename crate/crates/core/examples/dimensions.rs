//! Cohomology dimensions of the theta complex against the closed forms.

use grt2::theta::{cohomology_dim, expected_dim};

fn main() {
    println!("{:>6} {:>4} {:>4} {:>4}", "weight", "H0", "H1", "H2");
    for k in 3..=25 {
        let dims: Vec<usize> = (0..=2).map(|i| cohomology_dim(i, k)).collect();
        for (i, &d) in dims.iter().enumerate() {
            assert_eq!(d, expected_dim(i as u8, k));
        }
        println!("{k:>6} {:>4} {:>4} {:>4}", dims[0], dims[1], dims[2]);
    }
}
