//! Uniform red refinement: each triangle splits into 4 congruent children.

use super::{DomainSpec, Mesh, Point2, Triangle};
use crate::scalar::Real;

/// Splits every triangle into four via edge midpoints. On the circular
/// domains, midpoints of rim edges (both endpoints on the circle) are
/// projected radially back onto the circle; slit edges are radial and keep
/// their straight midpoints.
pub fn refine_uniform<R: Real>(m: &Mesh<R>) -> Mesh<R> {
    let half = R::of(0.5);
    let circle_radius = match m.domain {
        DomainSpec::Hexagon { .. } => None,
        DomainSpec::Disk { radius, .. } | DomainSpec::CrackedDisk { radius, .. } => Some(radius),
    };

    let mut vertices = m.vertices.clone();
    let mut midpoint = Vec::with_capacity(m.n_edges());
    for e in &m.edges {
        let pa = m.vertices[e.v[0]];
        let pb = m.vertices[e.v[1]];
        let mut p = Point2::new((pa.x + pb.x) * half, (pa.y + pb.y) * half);
        if let Some(radius) = circle_radius {
            let tol = R::of(1e-9) * radius;
            if e.boundary
                && (pa.norm() - radius).abs() <= tol
                && (pb.norm() - radius).abs() <= tol
            {
                let scale = radius / p.norm();
                p = Point2::new(p.x * scale, p.y * scale);
            }
        }
        midpoint.push(vertices.len());
        vertices.push(p);
    }

    let mut triangles = Vec::with_capacity(4 * m.n_triangles());
    for t in 0..m.n_triangles() {
        let [a, b, c] = m.triangles[t].v;
        let mab = midpoint[m.tri_edges[t][0].0];
        let mbc = midpoint[m.tri_edges[t][1].0];
        let mca = midpoint[m.tri_edges[t][2].0];
        triangles.push(Triangle { v: [a, mab, mca] });
        triangles.push(Triangle { v: [mab, b, mbc] });
        triangles.push(Triangle { v: [mca, mbc, c] });
        triangles.push(Triangle { v: [mab, mbc, mca] });
    }

    Mesh::from_cells(vertices, triangles, m.domain)
        .expect("refinement of a conforming mesh stays conforming")
}
