use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use super::TriangulationError;
use crate::arith::Spin;
use crate::asymptotics::FACES;
use crate::wigner::SixJLabels;

/// One edge record of a triangulation document.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeRecord {
    pub id: String,
    pub boundary: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub spin_twice: Option<u32>,
}

/// One tetrahedron record: six edge ids in 6j slot order
/// `[j1, j2, j12, j3, j, j23]`, so `(j1, j2, j12)` is a face and each slot
/// is opposite the one three places away.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TetRecord {
    pub id: String,
    pub slots: Vec<String>,
}

/// The on-disk form of a triangulation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TriangulationDoc {
    pub edges: Vec<EdgeRecord>,
    pub tetrahedra: Vec<TetRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Edge {
    pub id: String,
    /// `Some` exactly for boundary edges.
    pub spin: Option<Spin>,
}

impl Edge {
    pub fn is_boundary(&self) -> bool {
        self.spin.is_some()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Tetrahedron {
    pub id: String,
    /// Edge indices in slot order.
    pub slots: [usize; 6],
}

/// A triangle, identified by its three edges; shared by one tetrahedron on
/// the boundary and by two in the interior.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Face {
    /// Edge indices, ascending.
    pub edges: [usize; 3],
    /// Indices of the tetrahedra containing the face.
    pub tetrahedra: Vec<usize>,
}

impl Face {
    pub fn is_boundary(&self) -> bool {
        self.tetrahedra.len() == 1
    }
}

/// A validated triangulation with derived faces.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Triangulation {
    pub edges: Vec<Edge>,
    pub tetrahedra: Vec<Tetrahedron>,
    pub faces: Vec<Face>,
    /// Indices of internal edges, sorted by edge id. Colorings assign spins in
    /// this order.
    pub internal: Vec<usize>,
}

/// Line and column of a JSON syntax or schema error.
fn json_error(e: serde_json::Error) -> TriangulationError {
    TriangulationError::Syntax { line: e.line(), column: e.column(), message: e.to_string() }
}

/// Parses and validates a triangulation document.
pub fn load_triangulation(text: &str) -> Result<Triangulation, TriangulationError> {
    let doc: TriangulationDoc = serde_json::from_str(text).map_err(json_error)?;
    Triangulation::from_doc(&doc)
}

impl Triangulation {
    pub fn from_doc(doc: &TriangulationDoc) -> Result<Self, TriangulationError> {
        let mut index = HashMap::new();
        let mut edges = Vec::with_capacity(doc.edges.len());
        for (i, rec) in doc.edges.iter().enumerate() {
            let at = format!("edges[{i}]");
            if let Some(first) = index.insert(rec.id.clone(), i) {
                return Err(TriangulationError::DuplicateEdge {
                    at,
                    id: rec.id.clone(),
                    first: format!("edges[{first}]"),
                });
            }
            let spin = match (rec.boundary, rec.spin_twice) {
                (true, Some(t)) => Some(Spin::from_twice(t)),
                (true, None) => return Err(TriangulationError::MissingSpin { at, id: rec.id.clone() }),
                (false, Some(_)) => return Err(TriangulationError::InternalSpin { at, id: rec.id.clone() }),
                (false, None) => None,
            };
            edges.push(Edge { id: rec.id.clone(), spin });
        }

        let mut tet_ids = HashMap::new();
        let mut tetrahedra = Vec::with_capacity(doc.tetrahedra.len());
        for (t, rec) in doc.tetrahedra.iter().enumerate() {
            let at = format!("tetrahedra[{t}]");
            if let Some(first) = tet_ids.insert(rec.id.clone(), t) {
                return Err(TriangulationError::DuplicateTetrahedron {
                    at,
                    id: rec.id.clone(),
                    first: format!("tetrahedra[{first}]"),
                });
            }
            if rec.slots.len() != 6 {
                return Err(TriangulationError::SlotCount { at, id: rec.id.clone(), count: rec.slots.len() });
            }
            let mut slots = [0usize; 6];
            for (s, name) in rec.slots.iter().enumerate() {
                let at = format!("tetrahedra[{t}].slots[{s}]");
                slots[s] = *index
                    .get(name)
                    .ok_or_else(|| TriangulationError::UnknownEdge { at: at.clone(), id: name.clone() })?;
                if slots[..s].contains(&slots[s]) {
                    return Err(TriangulationError::RepeatedEdge { at, id: name.clone() });
                }
            }
            tetrahedra.push(Tetrahedron { id: rec.id.clone(), slots });
        }

        let mut used = vec![false; edges.len()];
        let mut face_map: BTreeMap<[usize; 3], Vec<usize>> = BTreeMap::new();
        for (t, tet) in tetrahedra.iter().enumerate() {
            for s in tet.slots {
                used[s] = true;
            }
            for face in FACES {
                let mut key = face.map(|slot| tet.slots[slot]);
                key.sort_unstable();
                face_map.entry(key).or_default().push(t);
            }
        }
        if let Some(i) = used.iter().position(|u| !u) {
            return Err(TriangulationError::UnusedEdge { at: format!("edges[{i}]"), id: edges[i].id.clone() });
        }
        let mut faces = Vec::with_capacity(face_map.len());
        for (key, tets) in face_map {
            if tets.len() > 2 {
                return Err(TriangulationError::OvershareFace {
                    edges: key.map(|e| edges[e].id.clone()),
                    tetrahedra: tets.iter().map(|&t| tetrahedra[t].id.clone()).collect(),
                });
            }
            faces.push(Face { edges: key, tetrahedra: tets });
        }

        let mut internal: Vec<usize> = (0..edges.len()).filter(|&e| !edges[e].is_boundary()).collect();
        internal.sort_by(|&a, &b| edges[a].id.cmp(&edges[b].id));
        Ok(Triangulation { edges, tetrahedra, faces, internal })
    }

    /// Back to the document form.
    pub fn to_doc(&self) -> TriangulationDoc {
        TriangulationDoc {
            edges: self
                .edges
                .iter()
                .map(|e| EdgeRecord {
                    id: e.id.clone(),
                    boundary: e.is_boundary(),
                    spin_twice: e.spin.map(Spin::twice),
                })
                .collect(),
            tetrahedra: self
                .tetrahedra
                .iter()
                .map(|t| TetRecord {
                    id: t.id.clone(),
                    slots: t.slots.iter().map(|&e| self.edges[e].id.clone()).collect(),
                })
                .collect(),
        }
    }

    pub fn boundary_faces(&self) -> usize {
        self.faces.iter().filter(|f| f.is_boundary()).count()
    }

    /// Spin of every edge, with internal edges taken from `coloring` (in the
    /// order of [`Triangulation::internal`]).
    pub fn edge_spins(&self, coloring: &[Spin]) -> Vec<Spin> {
        let mut spins: Vec<Spin> = self.edges.iter().map(|e| e.spin.unwrap_or(Spin::ZERO)).collect();
        for (&e, &s) in self.internal.iter().zip(coloring) {
            spins[e] = s;
        }
        spins
    }

    /// 6j labels of tetrahedron `t` under the given edge spins.
    pub fn labels(&self, t: usize, spins: &[Spin]) -> SixJLabels {
        SixJLabels::from_twice(self.tetrahedra[t].slots.map(|e| spins[e].twice()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn single_tet(spin: u32) -> String {
        let edges: Vec<String> =
            (0..6).map(|i| format!(r#"{{"id": "e{i}", "boundary": true, "spin_twice": {spin}}}"#)).collect();
        format!(
            r#"{{"edges": [{}], "tetrahedra": [{{"id": "t", "slots": ["e0","e1","e2","e3","e4","e5"]}}]}}"#,
            edges.join(",")
        )
    }

    #[test]
    fn single_tetrahedron_counts() {
        let t = load_triangulation(&single_tet(2)).unwrap();
        assert_eq!((t.tetrahedra.len(), t.internal.len(), t.boundary_faces()), (1, 0, 4));
    }

    #[test]
    fn five_slots_are_rejected_with_location() {
        let doc = single_tet(2).replace(r#""e4","e5""#, r#""e4""#);
        let err = load_triangulation(&doc).unwrap_err();
        assert!(matches!(err, TriangulationError::SlotCount { count: 5, .. }));
        assert!(err.to_string().contains("tetrahedra[0]"));
    }

    #[test]
    fn unknown_fields_and_ids_are_rejected() {
        let doc = single_tet(2).replacen(r#""boundary": true"#, r#""boundary": true, "color": 1"#, 1);
        assert!(matches!(load_triangulation(&doc), Err(TriangulationError::Syntax { line: 1, .. })));
        let doc = single_tet(2).replace(r#""e5"]"#, r#""e9"]"#);
        let err = load_triangulation(&doc).unwrap_err();
        assert_eq!(err.to_string(), "tetrahedra[0].slots[5]: unknown edge id 'e9'");
    }

    #[test]
    fn spins_must_match_boundary_flag() {
        let doc =
            single_tet(2).replacen(r#""boundary": true, "spin_twice": 2"#, r#""boundary": false, "spin_twice": 2"#, 1);
        assert!(matches!(load_triangulation(&doc), Err(TriangulationError::InternalSpin { .. })));
    }

    #[test]
    fn round_trip_through_document() {
        let t = load_triangulation(&single_tet(4)).unwrap();
        let again = Triangulation::from_doc(&t.to_doc()).unwrap();
        assert_eq!(t, again);
    }
}
