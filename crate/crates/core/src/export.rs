//! Graph export: DOT with dashed 0-edges, and a JSON form that round-trips.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

use crate::crystal::{apply, Atom, Dir, Word};
use crate::error::Error;
use crate::roots::{AlgebraType, Family};

/// A finite crystal graph: vertices in deterministic order and the f̃_i
/// edges that stay inside the vertex set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrystalGraph {
    pub ty: AlgebraType,
    pub cap: u32,
    pub vertices: Vec<Word>,
    /// (source index, operator index, target index), f̃ direction.
    pub edges: Vec<(usize, usize, usize)>,
}

/// Compute the lowering edges of a vertex set.
pub fn build_graph(mut vertices: Vec<Word>, ty: AlgebraType, cap: u32) -> CrystalGraph {
    vertices.sort();
    vertices.dedup();
    let index: BTreeMap<&Word, usize> = vertices.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let mut edges = Vec::new();
    for (src, w) in vertices.iter().enumerate() {
        for i in 0..=ty.n {
            if let Some(next) = apply(Dir::Lower, i, w, ty) {
                if let Some(&dst) = index.get(&next) {
                    edges.push((src, i, dst));
                }
            }
        }
    }
    CrystalGraph { ty, cap, vertices, edges }
}

fn atom_signs_string(a: &Atom, n: usize) -> String {
    (1..=n)
        .map(|p| if (a.signs >> (p - 1)) & 1 == 1 { '-' } else { '+' })
        .collect()
}

fn vertex_label(w: &Word, ty: AlgebraType) -> String {
    if w.is_empty() {
        return "1".into();
    }
    w.iter()
        .map(|a| format!("({})_{}", atom_signs_string(a, ty.n), a.level))
        .collect::<Vec<_>>()
        .join("(x)")
}

/// Graphviz DOT rendering; 0-edges are dashed.
pub fn to_dot(g: &CrystalGraph) -> String {
    let mut out = String::new();
    out.push_str("digraph crystal {\n");
    out.push_str("  rankdir=TB;\n");
    out.push_str("  node [shape=box, fontsize=10];\n");
    for (i, w) in g.vertices.iter().enumerate() {
        out.push_str(&format!("  v{i} [label=\"{}\"];\n", vertex_label(w, g.ty)));
    }
    for (src, idx, dst) in &g.edges {
        if *idx == 0 {
            out.push_str(&format!("  v{src} -> v{dst} [label=\"0\", style=dashed];\n"));
        } else {
            out.push_str(&format!("  v{src} -> v{dst} [label=\"{idx}\"];\n"));
        }
    }
    out.push_str("}\n");
    out
}

#[derive(Serialize, Deserialize)]
struct AtomRepr {
    signs: String,
    level: u32,
}

#[derive(Serialize, Deserialize)]
struct VertexRepr {
    id: usize,
    word: Vec<AtomRepr>,
}

#[derive(Serialize, Deserialize)]
struct EdgeRepr {
    src: usize,
    dst: usize,
    index: usize,
}

#[derive(Serialize, Deserialize)]
struct GraphRepr {
    family: String,
    n: usize,
    cap: u32,
    vertices: Vec<VertexRepr>,
    edges: Vec<EdgeRepr>,
}

pub fn to_json(g: &CrystalGraph) -> String {
    let repr = GraphRepr {
        family: g.ty.family.to_string(),
        n: g.ty.n,
        cap: g.cap,
        vertices: g
            .vertices
            .iter()
            .enumerate()
            .map(|(id, w)| VertexRepr {
                id,
                word: w
                    .iter()
                    .map(|a| AtomRepr {
                        signs: atom_signs_string(a, g.ty.n),
                        level: a.level,
                    })
                    .collect(),
            })
            .collect(),
        edges: g
            .edges
            .iter()
            .map(|(src, index, dst)| EdgeRepr { src: *src, dst: *dst, index: *index })
            .collect(),
    };
    serde_json::to_string_pretty(&repr).expect("graph serialization")
}

pub fn from_json(s: &str) -> Result<CrystalGraph, Error> {
    let repr: GraphRepr = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    let family = match repr.family.as_str() {
        "D" => Family::D,
        "B" => Family::B,
        other => return Err(Error::Parse(format!("unknown family {other}"))),
    };
    let ty = AlgebraType::new(family, repr.n)?;
    let mut vertices = vec![Vec::new(); repr.vertices.len()];
    for v in repr.vertices {
        if v.id >= vertices.len() {
            return Err(Error::Parse(format!("vertex id {} out of range", v.id)));
        }
        let mut word = Vec::with_capacity(v.word.len());
        for a in v.word {
            if a.signs.len() != ty.n {
                return Err(Error::Parse(format!("sign string '{}' has wrong length", a.signs)));
            }
            let mut signs = 0u32;
            for (i, c) in a.signs.chars().enumerate() {
                match c {
                    '-' => signs |= 1 << i,
                    '+' => {}
                    other => return Err(Error::Parse(format!("bad sign character '{other}'"))),
                }
            }
            word.push(Atom::new(signs, a.level));
        }
        vertices[v.id] = word;
    }
    let edges = repr.edges.into_iter().map(|e| (e.src, e.index, e.dst)).collect();
    Ok(CrystalGraph { ty, cap: repr.cap, vertices, edges })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classical::SpinClass;
    use crate::supercrystal::{super_spin_atoms, Model};

    #[test]
    fn spin_graph_layers_and_zero_edges() {
        let ty = AlgebraType::new(Family::D, 4).unwrap();
        let vs = Model::SpinPlus.vertices(ty, 2).unwrap();
        let g = build_graph(vs, ty, 2);
        assert_eq!(g.vertices.len(), 24);
        let zero_edges: Vec<_> = g.edges.iter().filter(|(_, i, _)| *i == 0).collect();
        // every level-(k+1) plus-first atom lowers to level k
        assert_eq!(zero_edges.len(), 8);
        let dot = to_dot(&g);
        assert!(dot.contains("style=dashed"));
        assert!(dot.contains("label=\"(++++)_0\""));
    }

    #[test]
    fn cap_zero_has_no_zero_edges() {
        let ty = AlgebraType::new(Family::B, 2).unwrap();
        let atoms = super_spin_atoms(ty, SpinClass::Plus, 0);
        let vs: Vec<Word> = atoms.into_iter().map(|a| vec![a]).collect();
        let g = build_graph(vs, ty, 0);
        assert!(g.edges.iter().all(|(_, i, _)| *i != 0));
    }

    #[test]
    fn json_round_trip() {
        let ty = AlgebraType::new(Family::D, 3).unwrap();
        let vs = crate::supercrystal::build_omega0(ty, 2);
        let g = build_graph(vs, ty, 2);
        let s = to_json(&g);
        let back = from_json(&s).unwrap();
        assert_eq!(g, back);
    }
}
