//! Wheel classes in GC2, their bracket and its leading filtration part.

use grt2::graph::{bowtie_difference, filtration_part, gc2_bracket, gc2_differential, min_filtration, wheel, GraphSum};

fn main() -> grt2::Result<()> {
    let w3 = GraphSum::from_class(wheel(3)?);
    let w5 = GraphSum::from_class(wheel(5)?);
    println!("d w3 = 0: {}", gc2_differential(&w3)?.is_zero());
    let dw5 = gc2_differential(&w5)?;
    println!("d w5 has {} classes, d d w5 = 0: {}", dw5.len(), gc2_differential(&dw5)?.is_zero());

    let b = gc2_bracket(&w3, &w5)?;
    println!("[w3, w5]: {} classes, lowest level {:?}", b.len(), min_filtration(&b));
    let level2 = filtration_part(&b, 2);
    let ratio = level2.ratio_to(&bowtie_difference(3, 5)?);
    println!("level 2 part / bowtie difference = {}", ratio.map_or("none".into(), |r| r.to_string()));
    Ok(())
}
