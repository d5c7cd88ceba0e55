//! Structured triangulation of the unit regular hexagon.

use std::collections::HashMap;

use super::{DomainSpec, Mesh, MeshError, Point2, Triangle};
use crate::scalar::Real;

/// Uniform triangulation of the unit regular hexagon centered at the origin:
/// exactly 6N^2 equilateral triangles with every edge of length h = 1/N.
///
/// Vertices live on the triangular lattice a e1 + b e2 (axial coordinates)
/// with e1 = (1, 0)/N and e2 = (1/2, sqrt(3)/2)/N, restricted to
/// max(|a|, |b|, |a+b|) <= N.
pub fn hexagon_mesh<R: Real>(n: usize) -> Result<Mesh<R>, MeshError> {
    if n == 0 {
        return Err(MeshError::InvalidParameter("hexagon subdivision N must be >= 1".into()));
    }
    let ni = n as i64;
    let inv_n = R::one() / R::of_usize(n);
    let half = R::of(0.5);
    let sqrt3_half = R::of(3.0).sqrt() * half;

    let mut index: HashMap<(i64, i64), usize> = HashMap::new();
    let mut vertices = Vec::new();
    for b in -ni..=ni {
        let lo = (-ni).max(-ni - b);
        let hi = ni.min(ni - b);
        for a in lo..=hi {
            let af = R::of(a as f64);
            let bf = R::of(b as f64);
            index.insert((a, b), vertices.len());
            vertices.push(Point2::new((af + bf * half) * inv_n, bf * sqrt3_half * inv_n));
        }
    }

    let mut triangles = Vec::with_capacity(6 * n * n);
    for b in -ni..=ni {
        for a in -ni..=ni {
            let up = [(a, b), (a + 1, b), (a, b + 1)];
            if let (Some(&i), Some(&j), Some(&k)) =
                (index.get(&up[0]), index.get(&up[1]), index.get(&up[2]))
            {
                triangles.push(Triangle { v: [i, j, k] });
            }
            let down = [(a + 1, b), (a + 1, b + 1), (a, b + 1)];
            if let (Some(&i), Some(&j), Some(&k)) =
                (index.get(&down[0]), index.get(&down[1]), index.get(&down[2]))
            {
                triangles.push(Triangle { v: [i, j, k] });
            }
        }
    }

    Mesh::from_cells(vertices, triangles, DomainSpec::Hexagon { n })
}
