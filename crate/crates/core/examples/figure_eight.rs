//! The figure-eight graph E and the pieces of d0 E.

use grt2::graph::{
    coefficient_of, figure_eight, icg_differential, split_theta_part, theta_generator_graph,
};

fn main() -> grt2::Result<()> {
    for (a, b) in [(2, 4), (2, 6), (4, 6)] {
        let e = figure_eight(a, b)?;
        let d = icg_differential(&e, true)?;
        let (theta, rest) = split_theta_part(&d);
        let c = coefficient_of(&theta, &theta_generator_graph(a / 2, b / 2)?);
        println!(
            "d0 E_{{{a},{b}}}: theta coefficient {}, {} dumbbell class(es)",
            c.map_or("none".into(), |c| c.to_string()),
            rest.len()
        );
    }
    Ok(())
}
