use std::fmt::Write;

use super::inclusion::closure_includes_structures;
use crate::error::{Error, Result};
use crate::invariants::kronecker_structure;
use crate::pencil::Pencil;

fn quote(name: &str) -> String {
    format!("\"{}\"", name.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Hasse diagram of orbit-closure inclusion in DOT format, with an edge
/// `P -> Q` when Q lies in the closure of the orbit of P.
///
/// Two strictly equivalent inputs are rejected, since they would form a
/// cycle.
pub fn hasse_export(ps: &[(String, Pencil)]) -> Result<String> {
    if let Some((_, first)) = ps.first() {
        if let Some((name, p)) = ps.iter().find(|(_, p)| (p.m(), p.n()) != (first.m(), first.n())) {
            return Err(Error::DimensionMismatch(format!(
                "{name} is {}×{} but the first pencil is {}×{}",
                p.m(),
                p.n(),
                first.m(),
                first.n()
            )));
        }
    }
    let structures: Vec<_> = std::thread::scope(|s| {
        let handles: Vec<_> = ps.iter().map(|(_, p)| s.spawn(|| kronecker_structure(p))).collect();
        handles.into_iter().map(|h| h.join().expect("structure computation panicked")).collect()
    });
    let k = ps.len();
    let mut rel = vec![vec![false; k]; k];
    for i in 0..k {
        for j in 0..k {
            if i != j {
                rel[i][j] = closure_includes_structures(&structures[i], &structures[j]).included;
            }
        }
    }
    for i in 0..k {
        for j in (i + 1)..k {
            if structures[i] == structures[j] {
                return Err(Error::InvalidArgument(format!("{} and {} are strictly equivalent", ps[i].0, ps[j].0)));
            }
            assert!(!(rel[i][j] && rel[j][i]), "distinct orbits cannot contain each other's closures");
        }
    }

    let mut dot = String::from("digraph hasse {\n");
    for (name, _) in ps {
        writeln!(dot, "  {};", quote(name)).expect("writing to a String");
    }
    for i in 0..k {
        for j in 0..k {
            let covered = rel[i][j] && !(0..k).any(|t| t != i && t != j && rel[i][t] && rel[t][j]);
            if covered {
                writeln!(dot, "  {} -> {};", quote(&ps[i].0), quote(&ps[j].0)).expect("writing to a String");
            }
        }
    }
    dot.push_str("}\n");
    Ok(dot)
}
