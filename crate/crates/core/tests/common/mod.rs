#![allow(dead_code)]

use std::collections::HashSet;
use std::path::PathBuf;

use rand::Rng;
use stabdis_core::gf2::{symplectic_product, BitMatrix, BitVector, EchelonBasis};
use stabdis_core::pauli::{LogicalClass, PauliOperator, StabilizerCode};
use stabdis_core::reduction::Graph;

pub fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name)
}

pub fn load_code(name: &str) -> StabilizerCode {
    let text = std::fs::read_to_string(fixture(name)).expect("fixture readable");
    StabilizerCode::parse_text(&text).expect("fixture parses")
}

/// A random stabilizer code with `r` independent commuting generators on
/// `n` qubits, by rejection sampling.
pub fn random_code<R: Rng>(rng: &mut R, n: usize, r: usize) -> StabilizerCode {
    loop {
        let mut rows: Vec<BitVector> = Vec::new();
        let mut span = EchelonBasis::new(2 * n);
        for _ in 0..10_000 {
            if rows.len() == r {
                break;
            }
            let bits: Vec<bool> = (0..2 * n).map(|_| rng.gen()).collect();
            let v = BitVector::from_bools(&bits);
            if v.is_zero() || rows.iter().any(|g| symplectic_product(g, &v).unwrap()) {
                continue;
            }
            if span.insert(v.clone()) {
                rows.push(v);
            }
        }
        if rows.len() == r {
            return StabilizerCode::new(BitMatrix::from_rows(2 * n, rows).unwrap()).unwrap();
        }
    }
}

/// A uniformly random element of the class: the representative times a
/// random product of generators.
pub fn random_representative<R: Rng>(rng: &mut R, cls: &LogicalClass<'_>) -> PauliOperator {
    let mut p = cls.rep().clone();
    for g in cls.code().generators() {
        if rng.gen() {
            p.mul_assign(&g);
        }
    }
    p
}

/// Every element of `rep · S`, by expanding all generator subsets.
pub fn coset_by_subsets(code: &StabilizerCode, rep: &PauliOperator) -> HashSet<PauliOperator> {
    let gens = code.generators();
    (0u64..1 << gens.len())
        .map(|mask| {
            let mut p = rep.clone();
            for (i, g) in gens.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    p.mul_assign(g);
                }
            }
            p
        })
        .collect()
}

/// Largest independent set by trying every vertex subset.
pub fn brute_alpha(g: &Graph) -> usize {
    let v = g.num_vertices();
    (0u32..1 << v)
        .filter(|mask| {
            g.edges()
                .iter()
                .all(|&(a, b)| mask >> a & 1 == 0 || mask >> b & 1 == 0)
        })
        .map(|mask| mask.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// A random graph without isolated vertices.
pub fn random_graph<R: Rng>(rng: &mut R, v: usize, p: f64) -> Graph {
    loop {
        let mut edges = Vec::new();
        for a in 0..v {
            for b in a + 1..v {
                if rng.gen_bool(p) {
                    edges.push((a, b));
                }
            }
        }
        let g = Graph::new(v, edges).unwrap();
        if !g.has_isolated_vertex() {
            return g;
        }
    }
}
