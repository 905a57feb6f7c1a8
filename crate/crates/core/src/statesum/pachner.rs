use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{evaluate_sum, BoundaryNormalized, CutoffPolicy, StateSumError, Triangulation};
use super::{EdgeRecord, TetRecord, TriangulationDoc};
use crate::arith::{triad_ok, RadicalSum, Spin};

/// Boundary edges of the 2-3 move on vertices 1…5, in the order used by
/// [`PachnerBoundary::spins`]. The three-tetrahedron side adds the internal
/// edge `e45`.
pub const PACHNER_EDGES: [&str; 9] = ["e12", "e13", "e14", "e15", "e23", "e24", "e25", "e34", "e35"];

const INTERNAL_EDGE: &str = "e45";

/// Triangles on the boundary of both sides, plus the face `123` shared by the
/// two-tetrahedron side.
const BOUNDARY_TRIANGLES: [[u8; 3]; 7] = [[1, 2, 3], [1, 2, 4], [1, 3, 4], [2, 3, 4], [1, 2, 5], [1, 3, 5], [2, 3, 5]];

/// Spins on the nine boundary edges of a 2-3 move.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PachnerBoundary {
    pub spins: [Spin; 9],
}

fn edge_name(a: u8, b: u8) -> String {
    format!("e{}{}", a.min(b), a.max(b))
}

/// Slots `[v1v2, v2v3, v1v3, v3v4, v1v4, v2v4]` of tetrahedron `(v1 v2 v3 v4)`.
fn tet_slots(v: [u8; 4]) -> Vec<String> {
    [(0, 1), (1, 2), (0, 2), (2, 3), (0, 3), (1, 3)].iter().map(|&(a, b)| edge_name(v[a], v[b])).collect()
}

/// Uniform draw from the doubled values `x ≤ max` forming a triad with every
/// pair in `with`.
fn draw_third(rng: &mut impl Rng, with: &[(u32, u32)], max: u32) -> Option<u32> {
    let options: Vec<u32> = (0..=max).filter(|&x| with.iter().all(|&(a, b)| triad_ok(a, b, x))).collect();
    (!options.is_empty()).then(|| options[rng.gen_range(0..options.len())])
}

impl PachnerBoundary {
    pub fn from_twice(spins: [u32; 9]) -> Self {
        PachnerBoundary { spins: spins.map(Spin::from_twice) }
    }

    pub fn spin(&self, a: u8, b: u8) -> Spin {
        let name = edge_name(a, b);
        let i = PACHNER_EDGES.iter().position(|e| *e == name).expect("boundary edge");
        self.spins[i]
    }

    /// The first boundary triangle that is not a triad, if any.
    pub fn bad_triangle(&self) -> Option<[u8; 3]> {
        BOUNDARY_TRIANGLES
            .into_iter()
            .find(|&[a, b, c]| !Spin::triad(self.spin(a, b), self.spin(b, c), self.spin(a, c)))
    }

    /// Doubled spins `x` of `e45` compatible with the three triangles
    /// `(i, 4, 5)`, ascending.
    pub fn internal_range(&self) -> Vec<Spin> {
        let pairs: Vec<(u32, u32)> = (1..=3).map(|i| (self.spin(i, 4).twice(), self.spin(i, 5).twice())).collect();
        let top = pairs.iter().map(|(a, b)| a + b).min().unwrap_or(0);
        (0..=top).filter(|&x| pairs.iter().all(|&(a, b)| triad_ok(a, b, x))).map(Spin::from_twice).collect()
    }

    /// A random admissible boundary with every doubled spin at most
    /// `max_twice`, drawn triangle by triangle.
    pub fn random(rng: &mut impl Rng, max_twice: u32) -> Self {
        loop {
            let mut s = [0u32; 9];
            let idx = |a: u8, b: u8| PACHNER_EDGES.iter().position(|e| *e == edge_name(a, b)).expect("edge");
            s[idx(1, 2)] = rng.gen_range(0..=max_twice);
            s[idx(1, 3)] = rng.gen_range(0..=max_twice);
            let Some(x) = draw_third(rng, &[(s[idx(1, 2)], s[idx(1, 3)])], max_twice) else { continue };
            s[idx(2, 3)] = x;
            let mut ok = true;
            for apex in [4u8, 5] {
                s[idx(1, apex)] = rng.gen_range(0..=max_twice);
                let Some(y) = draw_third(rng, &[(s[idx(1, 2)], s[idx(1, apex)])], max_twice) else {
                    ok = false;
                    break;
                };
                s[idx(2, apex)] = y;
                let with = [(s[idx(1, 3)], s[idx(1, apex)]), (s[idx(2, 3)], s[idx(2, apex)])];
                let Some(z) = draw_third(rng, &with, max_twice) else {
                    ok = false;
                    break;
                };
                s[idx(3, apex)] = z;
            }
            if ok {
                return PachnerBoundary::from_twice(s);
            }
        }
    }

    /// `count` boundaries from a fixed seed; the same seed always gives the
    /// same list.
    pub fn seeded(seed: u64, count: usize, max_twice: u32) -> Vec<Self> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..count).map(|_| PachnerBoundary::random(&mut rng, max_twice)).collect()
    }

    fn boundary_edges(&self) -> Vec<EdgeRecord> {
        PACHNER_EDGES
            .iter()
            .zip(self.spins)
            .map(|(id, s)| EdgeRecord { id: id.to_string(), boundary: true, spin_twice: Some(s.twice()) })
            .collect()
    }

    /// Tetrahedra `(1234)` and `(1235)` glued along `123`.
    pub fn two_side(&self) -> Triangulation {
        let tetrahedra = [("t1234", [1, 2, 3, 4]), ("t1235", [1, 2, 3, 5])]
            .map(|(id, v)| TetRecord { id: id.to_string(), slots: tet_slots(v) })
            .to_vec();
        Triangulation::from_doc(&TriangulationDoc { edges: self.boundary_edges(), tetrahedra }).expect("valid complex")
    }

    /// Tetrahedra `(1245)`, `(2345)`, `(3145)` around the internal edge `45`.
    pub fn three_side(&self) -> Triangulation {
        let mut edges = self.boundary_edges();
        edges.push(EdgeRecord { id: INTERNAL_EDGE.to_string(), boundary: false, spin_twice: None });
        let tetrahedra = [("t1245", [1, 2, 4, 5]), ("t2345", [2, 3, 4, 5]), ("t3145", [3, 1, 4, 5])]
            .map(|(id, v)| TetRecord { id: id.to_string(), slots: tet_slots(v) })
            .to_vec();
        Triangulation::from_doc(&TriangulationDoc { edges, tetrahedra }).expect("valid complex")
    }
}

/// Both sides of a 2-3 move, evaluated exactly.
#[derive(Clone, Debug, Serialize)]
pub struct PachnerReport {
    pub boundary: PachnerBoundary,
    pub lambda: Spin,
    /// Largest spin of `e45` allowed by the boundary; the three-tetrahedron
    /// sum is complete once `lambda` reaches it.
    pub range_top: Option<Spin>,
    pub two_side: RadicalSum,
    pub three_side: RadicalSum,
    pub equal: bool,
    /// `two_side - three_side`: the terms cut off by `lambda`.
    pub gap: RadicalSum,
}

/// Evaluates both sides of the 2-3 move under the default phase convention.
pub fn pachner_23_check(boundary: &PachnerBoundary, cutoff: CutoffPolicy) -> Result<PachnerReport, StateSumError> {
    if let Some([a, b, c]) = boundary.bad_triangle() {
        return Err(StateSumError::InadmissibleBoundary {
            face: [edge_name(a, b), edge_name(b, c), edge_name(a, c)],
            spins: [boundary.spin(a, b), boundary.spin(b, c), boundary.spin(a, c)],
        });
    }
    let two = evaluate_sum(&boundary.two_side(), cutoff, &BoundaryNormalized)?.exact;
    let three = evaluate_sum(&boundary.three_side(), cutoff, &BoundaryNormalized)?.exact;
    let gap = &two - &three;
    Ok(PachnerReport {
        boundary: *boundary,
        lambda: cutoff.lambda,
        range_top: boundary.internal_range().last().copied(),
        equal: gap.is_zero(),
        two_side: two,
        three_side: three,
        gap,
    })
}
