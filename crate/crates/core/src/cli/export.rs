use std::fs;
use std::io::Write;
use std::path::Path;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::json;

use crate::graph::{bowtie, figure_eight_graph, theta_graph, wheel_graph, Graph};
use crate::theta::RelationVector;
use crate::{Error, Result};

use super::DimRow;

/// Writes `contents` to `path` through a temporary file in the same
/// directory, so a failed export leaves nothing behind.
pub fn write_atomic(path: &Path, contents: &str) -> Result<()> {
    let io = |source| Error::Io {
        path: path.display().to_string(),
        source,
    };
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d.to_path_buf(),
        _ => std::path::PathBuf::from("."),
    };
    let name = path
        .file_name()
        .ok_or_else(|| Error::Usage(format!("{} is not a file path", path.display())))?;
    let tmp = dir.join(format!(".{}.tmp{}", name.to_string_lossy(), std::process::id()));
    let result = (|| {
        let mut f = fs::File::create(&tmp)?;
        f.write_all(contents.as_bytes())?;
        f.sync_all()?;
        fs::rename(&tmp, path)
    })();
    if let Err(e) = result {
        let _ = fs::remove_file(&tmp);
        return Err(io(e));
    }
    Ok(())
}

fn big(n: &BigInt) -> serde_json::Value {
    n.to_i64().map_or_else(|| json!(n.to_string()), |x| json!(x))
}

pub fn relations_json(k: u32, vectors: &[RelationVector]) -> String {
    let vectors: Vec<Vec<[serde_json::Value; 2]>> = vectors
        .iter()
        .map(|v| {
            v.normalized()
                .coefficients()
                .iter()
                .map(|c| [big(c.numer()), big(c.denom())])
                .collect()
        })
        .collect();
    let doc = json!({ "schema": 1, "weight": k, "vectors": vectors });
    format!("{}\n", serde_json::to_string(&doc).expect("json"))
}

pub fn relations_csv(k: u32, vectors: &[RelationVector]) -> String {
    let mut out = String::from("weight,vector,index,numerator,denominator\n");
    for (n, v) in vectors.iter().enumerate() {
        for (i, c) in v.normalized().coefficients().iter().enumerate() {
            out.push_str(&format!("{k},{},{},{},{}\n", n + 1, i + 1, c.numer(), c.denom()));
        }
    }
    out
}

pub fn dims_csv(degree: u8, rows: &[DimRow]) -> String {
    let mut out = String::from("weight,degree,dim,closed_form,match\n");
    for r in rows {
        out.push_str(&format!(
            "{},{degree},{},{},{}\n",
            r.weight, r.dim, r.closed_form, r.matches
        ));
    }
    out
}

pub fn dims_json(degree: u8, rows: &[DimRow]) -> String {
    let doc = json!({ "schema": 1, "degree": degree, "rows": rows });
    format!("{}\n", serde_json::to_string(&doc).expect("json"))
}

fn numbers(s: &str, what: &str) -> Result<Vec<u32>> {
    s.split(',')
        .map(|x| {
            x.trim()
                .parse()
                .map_err(|_| Error::Usage(format!("bad number `{x}` in {what}")))
        })
        .collect()
}

/// Parses a graph description: `theta:<grade>:<k1>,<k2>,<k3>`,
/// `wheel:<spokes>`, `figure-eight:<a>,<b>` or `bowtie:<p>,<q>`.
pub fn parse_graph_spec(spec: &str) -> Result<Graph> {
    let parts: Vec<&str> = spec.split(':').collect();
    let usage = || Error::Usage(format!("unknown graph `{spec}`"));
    match parts.as_slice() {
        ["theta", grade, hairs] => {
            let grade: u8 = grade.parse().map_err(|_| usage())?;
            match numbers(hairs, spec)?.as_slice() {
                &[a, b, c] => theta_graph(grade, [a, b, c]),
                _ => Err(usage()),
            }
        }
        ["wheel", n] => wheel_graph(n.parse().map_err(|_| usage())?),
        ["figure-eight", ab] => match numbers(ab, spec)?.as_slice() {
            &[a, b] => figure_eight_graph(a, b),
            _ => Err(usage()),
        },
        ["bowtie", pq] => match numbers(pq, spec)?.as_slice() {
            &[p, q] => bowtie(p as usize, q as usize),
            _ => Err(usage()),
        },
        _ => Err(usage()),
    }
}
