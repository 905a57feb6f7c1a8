use serde::Serialize;

use super::GeometryError;

/// Edge slots, in the order used by 6j labels `{a b c; d e f}`:
/// `[e12, e23, e13, e34, e14, e24]`. Opposite edges sit three slots apart, and
/// the faces are `(a,b,c)`, `(a,e,f)`, `(d,b,f)`, `(d,e,c)`.
pub const EDGE_VERTICES: [(usize, usize); 6] = [(0, 1), (1, 2), (0, 2), (2, 3), (0, 3), (1, 3)];

/// Triangles of the tetrahedron as slot triples.
pub const FACES: [[usize; 3]; 4] = [[0, 1, 2], [0, 4, 5], [3, 1, 5], [3, 4, 2]];

/// Euclidean tetrahedron recovered from its six edge lengths.
#[derive(Clone, Debug, Serialize)]
pub struct TetGeometry {
    pub lengths: [f64; 6],
    pub volume: f64,
    /// Cayley–Menger determinant, `288 V²`.
    pub cayley_menger: f64,
    /// Interior dihedral angle at each edge slot, in `(0, π)`.
    pub dihedral: [f64; 6],
}

impl TetGeometry {
    /// Exterior angles `π - θ_i`.
    pub fn exterior(&self) -> [f64; 6] {
        self.dihedral.map(|t| std::f64::consts::PI - t)
    }
}

fn inverse3(g: &[[f64; 3]; 3], det: f64) -> [[f64; 3]; 3] {
    let c = |r: usize, s: usize| {
        let (r1, r2) = ((r + 1) % 3, (r + 2) % 3);
        let (s1, s2) = ((s + 1) % 3, (s + 2) % 3);
        g[r1][s1] * g[r2][s2] - g[r1][s2] * g[r2][s1]
    };
    // adjugate is the transpose of the cofactor matrix; g is symmetric anyway
    std::array::from_fn(|r| std::array::from_fn(|s| c(s, r) / det))
}

/// Volume and dihedral angles of the tetrahedron with the given edge lengths.
///
/// Fails when a length is not positive and finite, when a face violates the
/// triangle inequality, or when the lengths do not embed in three dimensions
/// (the Cayley–Menger determinant is not positive).
pub fn tet_geometry(lengths: [f64; 6]) -> Result<TetGeometry, GeometryError> {
    if let Some(slot) = lengths.iter().position(|l| !(l.is_finite() && *l > 0.0)) {
        return Err(GeometryError::BadLength { slot, length: lengths[slot] });
    }
    for face in FACES {
        let [a, b, c] = face.map(|s| lengths[s]);
        if a >= b + c || b >= a + c || c >= a + b {
            return Err(GeometryError::FaceInequality { face, lengths: [a, b, c] });
        }
    }
    // squared distances between the four vertices
    let mut d2 = [[0.0; 4]; 4];
    for (slot, &(p, q)) in EDGE_VERTICES.iter().enumerate() {
        d2[p][q] = lengths[slot] * lengths[slot];
        d2[q][p] = d2[p][q];
    }
    // Gram matrix of the edge vectors from vertex 0
    let g: [[f64; 3]; 3] =
        std::array::from_fn(|a| std::array::from_fn(|b| 0.5 * (d2[0][a + 1] + d2[0][b + 1] - d2[a + 1][b + 1])));
    let det = g[0][0] * (g[1][1] * g[2][2] - g[1][2] * g[2][1]) - g[0][1] * (g[1][0] * g[2][2] - g[1][2] * g[2][0])
        + g[0][2] * (g[1][0] * g[2][1] - g[1][1] * g[2][0]);
    let cayley_menger = 8.0 * det;
    let scale = lengths.iter().fold(0.0f64, |m, l| m.max(*l)).powi(6);
    if det.is_nan() || det <= 1e-13 * scale {
        return Err(GeometryError::Degenerate { cayley_menger });
    }
    let f = inverse3(&g, det);
    // outward face normals n[i] for the face opposite vertex i, as dot products:
    // faces opposite vertices 1..3 use minus the dual basis, the face opposite 0
    // uses the sum of the dual basis
    let dot = |i: usize, k: usize| -> f64 {
        match (i, k) {
            (0, 0) => f.iter().flatten().sum(),
            (0, k) | (k, 0) => -(0..3).map(|b| f[k - 1][b]).sum::<f64>(),
            (i, k) => f[i - 1][k - 1],
        }
    };
    let dihedral = EDGE_VERTICES.map(|(p, q)| {
        let mut rest = (0..4).filter(|v| *v != p && *v != q);
        let (i, k) = (rest.next().expect("two"), rest.next().expect("two"));
        let c = -dot(i, k) / (dot(i, i) * dot(k, k)).sqrt();
        c.clamp(-1.0, 1.0).acos()
    });
    Ok(TetGeometry { lengths, volume: det.sqrt() / 6.0, cayley_menger, dihedral })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn regular_tetrahedron() {
        let g = tet_geometry([1.0; 6]).unwrap();
        assert!((g.volume - 1.0 / (6.0 * 2f64.sqrt())).abs() < 1e-15);
        for t in g.dihedral {
            assert!((t - (1.0f64 / 3.0).acos()).abs() < 1e-14);
        }
        assert!((g.cayley_menger - 288.0 * g.volume * g.volume).abs() < 1e-14);
    }

    #[test]
    fn flat_and_broken_inputs_are_rejected() {
        assert!(matches!(tet_geometry([1.0, 1.0, 3.0, 1.0, 1.0, 1.0]), Err(GeometryError::FaceInequality { .. })));
        assert!(matches!(tet_geometry([1.0, 1.0, 1.0, 0.0, 1.0, 1.0]), Err(GeometryError::BadLength { slot: 3, .. })));
        // four points on a unit square: e13 and e24 are the diagonals
        let s = 2f64.sqrt();
        assert!(matches!(tet_geometry([1.0, 1.0, s, 1.0, 1.0, s]), Err(GeometryError::Degenerate { .. })));
    }

    #[test]
    fn volume_scales_cubically() {
        let base = [3.0, 4.0, 4.5, 3.5, 4.2, 3.9];
        let v1 = tet_geometry(base).unwrap();
        let v2 = tet_geometry(base.map(|l| 2.5 * l)).unwrap();
        assert!((v2.volume / v1.volume - 2.5f64.powi(3)).abs() < 1e-12);
        for (a, b) in v1.dihedral.iter().zip(v2.dihedral) {
            assert!((a - b).abs() < 1e-12);
        }
    }
}
