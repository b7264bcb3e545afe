//! Ihara bracket of depth-one generators and its depth-two encoding.

use grt2::depth2::{ad_power, depth2_encode, ihara_bracket};

fn main() {
    for (i, j) in [(3, 9), (5, 7)] {
        let a = ad_power(i - 1);
        let b = ad_power(j - 1);
        let bracket = ihara_bracket(&a, &b);
        println!("{{s{i}, s{j}}} has {} words", bracket.len());
        println!("  encoded: {}", depth2_encode(&bracket).value());
    }
    let a = ad_power(2);
    assert!(ihara_bracket(&a, &a).is_zero());
}
