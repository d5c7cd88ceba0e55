//! Conforming triangle meshes with full edge topology for the three
//! benchmark domains (regular hexagon, disk, cracked disk).

mod disk;
mod hexagon;
mod refine;

pub use disk::{cracked_disk_mesh, disk_mesh};
pub use hexagon::hexagon_mesh;
pub use refine::refine_uniform;

use std::collections::HashMap;
use std::fmt;
use std::io::{self, Write};

use crate::scalar::Real;

/// Sentinel for the missing second triangle of a boundary edge.
pub const NO_TRI: usize = usize::MAX;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Point2<R> {
    pub x: R,
    pub y: R,
}

impl<R: Real> Point2<R> {
    #[inline]
    pub fn new(x: R, y: R) -> Self {
        Self { x, y }
    }

    #[inline]
    pub fn dist(self, other: Self) -> R {
        ((self.x - other.x) * (self.x - other.x) + (self.y - other.y) * (self.y - other.y)).sqrt()
    }

    #[inline]
    pub fn norm(self) -> R {
        (self.x * self.x + self.y * self.y).sqrt()
    }
}

/// Triangle as three vertex indices, counterclockwise.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Triangle {
    pub v: [usize; 3],
}

/// Undirected edge with adjacency. `v` is sorted ascending; `tris[1]` is
/// `NO_TRI` for boundary edges. `normals[k]` is the unit normal pointing out
/// of `tris[k]`.
#[derive(Clone, Copy, Debug)]
pub struct Edge<R> {
    pub v: [usize; 2],
    pub tris: [usize; 2],
    pub normals: [[R; 2]; 2],
    pub length: R,
    pub boundary: bool,
}

/// Benchmark domain selector with its construction parameters.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum DomainSpec<R> {
    /// Unit regular hexagon centered at the origin, N subdivisions per side.
    Hexagon { n: usize },
    /// Polygonal disk of the given radius with `n_boundary` rim vertices.
    Disk { radius: R, n_boundary: usize },
    /// Disk slit along the negative x-axis (vertices duplicated per sheet).
    CrackedDisk { radius: R, n_boundary: usize },
}

impl<R: Real> DomainSpec<R> {
    /// Radius of the circumscribing circle.
    pub fn radius(&self) -> R {
        match *self {
            DomainSpec::Hexagon { .. } => R::one(),
            DomainSpec::Disk { radius, .. } | DomainSpec::CrackedDisk { radius, .. } => radius,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum MeshError {
    InvalidParameter(String),
    /// More than two triangles share a vertex pair.
    NonManifoldEdge { v: [usize; 2] },
    VertexOutOfRange { tri: usize },
}

impl fmt::Display for MeshError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MeshError::InvalidParameter(msg) => write!(f, "invalid parameter: {msg}"),
            MeshError::NonManifoldEdge { v } => {
                write!(f, "edge ({}, {}) is shared by more than two triangles", v[0], v[1])
            }
            MeshError::VertexOutOfRange { tri } => {
                write!(f, "triangle {tri} references a vertex out of range")
            }
        }
    }
}

impl std::error::Error for MeshError {}

/// Conforming triangulation with edge topology.
#[derive(Clone, Debug)]
pub struct Mesh<R: Real> {
    pub vertices: Vec<Point2<R>>,
    pub triangles: Vec<Triangle>,
    pub edges: Vec<Edge<R>>,
    /// Per triangle: the three edges opposite local order (v0-v1, v1-v2,
    /// v2-v0) with +1 if the local direction matches the stored (sorted)
    /// edge direction.
    pub tri_edges: Vec<[(usize, i8); 3]>,
    pub domain: DomainSpec<R>,
}

impl<R: Real> Mesh<R> {
    /// Builds the edge topology from raw cells. Edge indices are assigned in
    /// first-seen order over triangles, which keeps construction
    /// deterministic.
    pub fn from_cells(
        vertices: Vec<Point2<R>>,
        triangles: Vec<Triangle>,
        domain: DomainSpec<R>,
    ) -> Result<Self, MeshError> {
        let nv = vertices.len();
        let mut edge_of: HashMap<(usize, usize), usize> = HashMap::with_capacity(triangles.len() * 3 / 2 + 4);
        let mut edges: Vec<Edge<R>> = Vec::with_capacity(triangles.len() * 3 / 2 + 4);
        let mut tri_edges = Vec::with_capacity(triangles.len());

        for (t, tri) in triangles.iter().enumerate() {
            if tri.v.iter().any(|&v| v >= nv) {
                return Err(MeshError::VertexOutOfRange { tri: t });
            }
            let mut local = [(0usize, 0i8); 3];
            for k in 0..3 {
                let a = tri.v[k];
                let b = tri.v[(k + 1) % 3];
                let key = (a.min(b), a.max(b));
                let sign = if a < b { 1i8 } else { -1i8 };
                let e = match edge_of.get(&key) {
                    Some(&e) => {
                        if edges[e].tris[1] != NO_TRI {
                            return Err(MeshError::NonManifoldEdge { v: [key.0, key.1] });
                        }
                        edges[e].tris[1] = t;
                        edges[e].boundary = false;
                        e
                    }
                    None => {
                        let pa = vertices[key.0];
                        let pb = vertices[key.1];
                        let e = edges.len();
                        edges.push(Edge {
                            v: [key.0, key.1],
                            tris: [t, NO_TRI],
                            normals: [[R::zero(); 2]; 2],
                            length: pa.dist(pb),
                            boundary: true,
                        });
                        edge_of.insert(key, e);
                        e
                    }
                };
                local[k] = (e, sign);
            }
            tri_edges.push(local);
        }

        let mut mesh = Mesh { vertices, triangles, edges, tri_edges, domain };
        mesh.compute_normals();
        Ok(mesh)
    }

    fn compute_normals(&mut self) {
        for e in 0..self.edges.len() {
            let [a, b] = self.edges[e].v;
            let pa = self.vertices[a];
            let pb = self.vertices[b];
            let len = self.edges[e].length;
            for slot in 0..2 {
                let t = self.edges[e].tris[slot];
                if t == NO_TRI {
                    continue;
                }
                // candidate normal, then orient away from the opposite vertex
                let mut nx = (pb.y - pa.y) / len;
                let mut ny = (pa.x - pb.x) / len;
                let opp = self.triangles[t].v.iter().copied().find(|&v| v != a && v != b).unwrap();
                let po = self.vertices[opp];
                if nx * (pa.x - po.x) + ny * (pa.y - po.y) < R::zero() {
                    nx = -nx;
                    ny = -ny;
                }
                self.edges[e].normals[slot] = [nx, ny];
            }
        }
    }

    #[inline]
    pub fn n_vertices(&self) -> usize {
        self.vertices.len()
    }

    #[inline]
    pub fn n_triangles(&self) -> usize {
        self.triangles.len()
    }

    #[inline]
    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn n_boundary_edges(&self) -> usize {
        self.edges.iter().filter(|e| e.boundary).count()
    }

    #[inline]
    pub fn tri_coords(&self, t: usize) -> [[R; 2]; 3] {
        let v = self.triangles[t].v;
        [
            [self.vertices[v[0]].x, self.vertices[v[0]].y],
            [self.vertices[v[1]].x, self.vertices[v[1]].y],
            [self.vertices[v[2]].x, self.vertices[v[2]].y],
        ]
    }

    pub fn signed_area(&self, t: usize) -> R {
        let c = self.tri_coords(t);
        ((c[1][0] - c[0][0]) * (c[2][1] - c[0][1]) - (c[2][0] - c[0][0]) * (c[1][1] - c[0][1]))
            * R::of(0.5)
    }

    pub fn centroid(&self, t: usize) -> Point2<R> {
        let c = self.tri_coords(t);
        let third = R::of(1.0 / 3.0);
        Point2::new(
            (c[0][0] + c[1][0] + c[2][0]) * third,
            (c[0][1] + c[1][1] + c[2][1]) * third,
        )
    }

    /// Longest edge of triangle `t`.
    pub fn tri_diameter(&self, t: usize) -> R {
        self.tri_edges[t]
            .iter()
            .map(|&(e, _)| self.edges[e].length)
            .fold(R::zero(), |a, b| a.max(b))
    }

    /// Normal of edge `e` pointing out of triangle `t`.
    pub fn outward_normal(&self, e: usize, t: usize) -> [R; 2] {
        let edge = &self.edges[e];
        if edge.tris[0] == t {
            edge.normals[0]
        } else {
            debug_assert_eq!(edge.tris[1], t);
            edge.normals[1]
        }
    }

    /// Mesh size h: the maximum edge length.
    pub fn mesh_size(&self) -> R {
        self.edges.iter().map(|e| e.length).fold(R::zero(), |a, b| a.max(b))
    }

    /// Plain-text dump (`WGMESH v1`), for debugging and external viewers.
    pub fn export_text(&self, out: &mut impl Write) -> io::Result<()> {
        writeln!(out, "WGMESH v1 {} {}", self.n_vertices(), self.n_triangles())?;
        for p in &self.vertices {
            writeln!(out, "{} {}", p.x, p.y)?;
        }
        for t in &self.triangles {
            writeln!(out, "{} {} {}", t.v[0], t.v[1], t.v[2])?;
        }
        Ok(())
    }

    /// Structural diagnostics; collects problems instead of aborting.
    pub fn validate(&self) -> MeshDiagnostics {
        let mut diag = MeshDiagnostics {
            orientation_violations: Vec::new(),
            nonconforming_edges: Vec::new(),
            duplicate_vertices: Vec::new(),
            euler_characteristic: self.n_vertices() as i64 + self.n_triangles() as i64
                - self.n_edges() as i64,
        };
        for t in 0..self.n_triangles() {
            if !(self.signed_area(t) > R::zero()) {
                diag.orientation_violations.push(t);
            }
        }
        for (e, edge) in self.edges.iter().enumerate() {
            let n_adj = if edge.tris[1] == NO_TRI { 1 } else { 2 };
            if edge.boundary != (n_adj == 1) || !(edge.length > R::zero()) {
                diag.nonconforming_edges.push(e);
            }
        }

        // duplicate detection via coordinate sort; slit sheets of the cracked
        // disk legitimately duplicate points on {y = 0, x < 0}
        let tol = R::of(1e-12) * self.domain.radius();
        let mut order: Vec<usize> = (0..self.n_vertices()).collect();
        order.sort_by(|&a, &b| {
            let (pa, pb) = (self.vertices[a], self.vertices[b]);
            pa.x.partial_cmp(&pb.x).unwrap().then(pa.y.partial_cmp(&pb.y).unwrap())
        });
        let on_slit = |p: Point2<R>| p.y.abs() <= tol && p.x < -tol;
        let slit_ok = matches!(self.domain, DomainSpec::CrackedDisk { .. });
        for w in 0..order.len() {
            let a = order[w];
            for &b in order[w + 1..].iter() {
                let (pa, pb) = (self.vertices[a], self.vertices[b]);
                if (pb.x - pa.x).abs() > tol {
                    break;
                }
                if pa.dist(pb) <= tol && !(slit_ok && on_slit(pa)) {
                    diag.duplicate_vertices.push((a.min(b), a.max(b)));
                }
            }
        }
        diag
    }
}

#[derive(Debug, Clone)]
pub struct MeshDiagnostics {
    pub orientation_violations: Vec<usize>,
    pub nonconforming_edges: Vec<usize>,
    pub duplicate_vertices: Vec<(usize, usize)>,
    /// V - E + F; equals 1 for the (simply connected) benchmark domains.
    pub euler_characteristic: i64,
}

impl MeshDiagnostics {
    pub fn is_clean(&self) -> bool {
        self.orientation_violations.is_empty()
            && self.nonconforming_edges.is_empty()
            && self.duplicate_vertices.is_empty()
            && self.euler_characteristic == 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_triangle_square() -> Mesh<f64> {
        let vertices = vec![
            Point2::new(0.0, 0.0),
            Point2::new(1.0, 0.0),
            Point2::new(1.0, 1.0),
            Point2::new(0.0, 1.0),
        ];
        let triangles = vec![Triangle { v: [0, 1, 2] }, Triangle { v: [0, 2, 3] }];
        Mesh::from_cells(vertices, triangles, DomainSpec::Hexagon { n: 1 }).unwrap()
    }

    #[test]
    fn topology_of_two_triangles() {
        let m = two_triangle_square();
        assert_eq!(m.n_edges(), 5);
        assert_eq!(m.n_boundary_edges(), 4);
        let diag = m.validate();
        assert!(diag.is_clean(), "{diag:?}");
        // diagonal edge is interior with two adjacent triangles
        let diag_edge = m.edges.iter().find(|e| e.v == [0, 2]).unwrap();
        assert!(!diag_edge.boundary);
        assert_eq!(diag_edge.tris, [0, 1]);
    }

    #[test]
    fn outward_normals_are_unit_and_outward() {
        let m = two_triangle_square();
        for (e, edge) in m.edges.iter().enumerate() {
            for slot in 0..2 {
                let t = edge.tris[slot];
                if t == NO_TRI {
                    continue;
                }
                let n = m.outward_normal(e, t);
                let len = (n[0] * n[0] + n[1] * n[1]).sqrt();
                assert!((len - 1.0).abs() < 1e-14);
                // midpoint displaced along n must leave the triangle: check
                // against the centroid
                let c = m.centroid(t);
                let [a, b] = edge.v;
                let mid = Point2::new(
                    0.5 * (m.vertices[a].x + m.vertices[b].x),
                    0.5 * (m.vertices[a].y + m.vertices[b].y),
                );
                let dot = n[0] * (mid.x - c.x) + n[1] * (mid.y - c.y);
                assert!(dot > 0.0, "normal points inward for edge {e} tri {t}");
            }
        }
    }

    #[test]
    fn flipped_triangle_detected() {
        let vertices = vec![
            Point2::new(0.0, 0.0),
            Point2::new(1.0, 0.0),
            Point2::new(1.0, 1.0),
            Point2::new(0.0, 1.0),
        ];
        let triangles = vec![Triangle { v: [0, 2, 1] }, Triangle { v: [0, 2, 3] }];
        let m = Mesh::from_cells(vertices, triangles, DomainSpec::Hexagon { n: 1 }).unwrap();
        let diag = m.validate();
        assert_eq!(diag.orientation_violations, vec![0]);
    }

    #[test]
    fn nonmanifold_rejected() {
        let vertices = vec![
            Point2::new(0.0, 0.0),
            Point2::new(1.0, 0.0),
            Point2::new(0.5, 1.0),
            Point2::new(0.5, -1.0),
            Point2::new(2.0, 0.5),
        ];
        let triangles = vec![
            Triangle { v: [0, 1, 2] },
            Triangle { v: [0, 1, 3] },
            Triangle { v: [0, 1, 4] },
        ];
        let err = Mesh::from_cells(vertices, triangles, DomainSpec::Hexagon { n: 1 }).unwrap_err();
        assert_eq!(err, MeshError::NonManifoldEdge { v: [0, 1] });
    }

    #[test]
    fn export_format() {
        let m = two_triangle_square();
        let mut buf = Vec::new();
        m.export_text(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next().unwrap(), "WGMESH v1 4 2");
        assert_eq!(lines.next().unwrap(), "0 0");
        assert_eq!(text.lines().count(), 1 + 4 + 2);
    }
}
