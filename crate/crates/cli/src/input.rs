//! Reading input files and environment caps.

use std::path::{Path, PathBuf};

use stabdis_core::gf2::BitMatrix;
use stabdis_core::pauli::{PauliError, PauliOperator, StabilizerCode};
use stabdis_core::reduction::Graph;
use stabdis_core::Error;

use crate::Failure;

pub const COSET_CAP_VAR: &str = "STABDIS_COSET_CAP";
pub const QUBIT_CAP_VAR: &str = "STABDIS_QUBIT_CAP";
pub const GRAPH_CAP_VAR: &str = "STABDIS_GRAPH_CAP";
pub const OMEGA_CAP_VAR: &str = "STABDIS_OMEGA_CAP";

/// A positive integer from the environment, if set.
pub fn env_cap<T: std::str::FromStr + PartialOrd + Default>(var: &str) -> Result<Option<T>, Failure> {
    match std::env::var(var) {
        Ok(s) => match s.trim().parse::<T>() {
            Ok(v) if v > T::default() => Ok(Some(v)),
            _ => Err(Failure::input(format!("{var} must be a positive integer, got {s:?}"))),
        },
        Err(_) => Ok(None),
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

/// Attaches the file name to an error, keeping its exit class.
pub fn in_file(path: &Path) -> impl Fn(Error) -> Failure + '_ {
    move |e| Failure::from_error(e).context(&path.display().to_string())
}

pub fn load_code(path: &Path) -> Result<StabilizerCode, Failure> {
    let mut code = StabilizerCode::parse_text(&read(path)?).map_err(|e| in_file(path)(e.into()))?;
    if let Some(cap) = env_cap::<u32>(COSET_CAP_VAR)? {
        code.set_coset_cap_log2(cap);
    }
    Ok(code)
}

pub fn load_graph(path: &Path) -> Result<Graph, Failure> {
    let graph = Graph::parse(&read(path)?).map_err(in_file(path))?;
    if let Some(cap) = env_cap::<usize>(GRAPH_CAP_VAR)? {
        if graph.num_vertices() > cap {
            return Err(Failure::from_error(Error::TooLarge {
                what: "graph",
                size: graph.num_vertices().to_string(),
                cap: cap.to_string(),
            })
            .context(&path.display().to_string()));
        }
    }
    Ok(graph)
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
}

/// A binary matrix: one row of `0`/`1` per line, spaces optional.
pub fn load_matrix(path: &Path) -> Result<BitMatrix, Failure> {
    let text = read(path)?;
    let bad = |line: usize, message: String| in_file(path)(Error::Parse { line, message });
    let mut rows: Vec<Vec<u8>> = Vec::new();
    for (line, l) in content_lines(&text) {
        let row: Vec<u8> = l
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                other => Err(bad(line, format!("unexpected character {other:?}"))),
            })
            .collect::<Result<_, _>>()?;
        if let Some(first) = rows.first() {
            if first.len() != row.len() {
                return Err(bad(line, format!("row has {} entries, expected {}", row.len(), first.len())));
            }
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(bad(1, "matrix has no rows".into()));
    }
    Ok(BitMatrix::from_dense(&rows))
}

pub fn parse_operator(s: &str, n: usize) -> Result<PauliOperator, Failure> {
    // accepts both `XZIY` and `x-bits|z-bits` forms
    let p: PauliOperator = s.trim().parse().map_err(|e: PauliError| Failure::input(format!("{s:?}: {e}")))?;
    if p.num_qubits() != n {
        return Err(Failure::input(format!(
            "{s:?}: {}",
            PauliError::QubitMismatch {
                expected: n,
                found: p.num_qubits()
            }
        )));
    }
    Ok(p)
}

/// Collection members: either one Pauli string per line, or a JSON report
/// with a `collection` array of Pauli strings.
pub fn load_collection(path: &Path, n: usize) -> Result<Vec<PauliOperator>, Failure> {
    let text = read(path)?;
    if text.trim_start().starts_with('{') {
        let value: serde_json::Value =
            serde_json::from_str(&text).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
        let members = find_collection(&value).ok_or_else(|| {
            Failure::input(format!("{}: no \"collection\" array in report", path.display()))
        })?;
        return members
            .iter()
            .map(|m| match m.as_str() {
                Some(s) => parse_operator(s, n),
                None => Err(Failure::input(format!("{}: collection entries must be strings", path.display()))),
            })
            .collect();
    }
    content_lines(&text)
        .map(|(line, l)| parse_operator(l, n).map_err(|f| f.context(&format!("{}:{line}", path.display()))))
        .collect()
}

fn find_collection(value: &serde_json::Value) -> Option<&Vec<serde_json::Value>> {
    match value {
        serde_json::Value::Object(map) => map
            .get("collection")
            .and_then(|v| v.as_array())
            .or_else(|| map.values().find_map(find_collection)),
        serde_json::Value::Array(items) => items.iter().find_map(find_collection),
        _ => None,
    }
}

pub fn write_file(path: &PathBuf, contents: &str) -> Result<(), Failure> {
    std::fs::write(path, contents).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}
