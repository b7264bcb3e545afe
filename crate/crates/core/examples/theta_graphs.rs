//! Theta graphs, their polynomial encoding and the differential d0.

use grt2::exact::Poly3;
use grt2::graph::{icg_differential, theta_graph, theta_graph_encode, theta_sum_encode, write_graph, GraphSum};
use grt2::theta::{d0_theta, ThetaElement};

fn main() -> grt2::Result<()> {
    let g = theta_graph(1, [2, 4, 0])?;
    print!("{}", write_graph(&g));
    let e = theta_graph_encode(&g)?;
    println!("encoding: {e}");

    let graphs = icg_differential(&GraphSum::from_graph(&g)?, true)?;
    let via_graphs = theta_sum_encode(2, &graphs)?;
    let via_polys = d0_theta(&e)?;
    println!("d0 through graphs:      {via_graphs}");
    println!("d0 through polynomials: {via_polys}");
    assert_eq!(via_graphs, via_polys);

    let c0 = ThetaElement::new(0, &Poly3::monomial(4, 2, 0))?;
    println!("d0 {c0} = {}", d0_theta(&c0)?);
    Ok(())
}
