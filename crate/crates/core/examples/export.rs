//! Writes relation vectors, a dimension table and a graph to a directory.

use std::path::PathBuf;

use grt2::cli::export::{dims_csv, relations_json, write_atomic};
use grt2::cli::dim_rows;
use grt2::graph::{theta_graph, write_graph};
use grt2::theta::relation_space;

fn main() -> grt2::Result<()> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "grt2-out".into()));
    std::fs::create_dir_all(&dir).map_err(|source| grt2::Error::Io {
        path: dir.display().to_string(),
        source,
    })?;
    write_atomic(&dir.join("relations-24.json"), &relations_json(24, &relation_space(24)?))?;
    write_atomic(&dir.join("dims-1.csv"), &dims_csv(1, &dim_rows(1, 51)))?;
    write_atomic(&dir.join("theta-2-4.txt"), &write_graph(&theta_graph(1, [2, 4, 0])?))?;
    println!("wrote 3 files to {}", dir.display());
    Ok(())
}
