//! Element-local data: polynomial orders, the scalar bases carried by the
//! interior and the edges, Raviart-Thomas vector bases, and the per-element
//! geometry bundle they are evaluated on.
//!
//! All local polynomials use coordinates shifted to the element centroid and
//! scaled by the element diameter; the raw monomial basis is ill-conditioned
//! on small elements while the spanned spaces are unchanged.

use crate::mesh::Mesh;
use crate::scalar::Real;

/// Polynomial degree of the weak Galerkin element (interior and edge degree
/// coincide, and the weak-gradient target is RT of the same k).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ElementOrder {
    P0,
    P1,
}

impl ElementOrder {
    #[inline]
    pub fn k(self) -> usize {
        match self {
            ElementOrder::P0 => 0,
            ElementOrder::P1 => 1,
        }
    }

    /// dim P_k(T): 1 or 3.
    #[inline]
    pub fn dim_interior(self) -> usize {
        match self {
            ElementOrder::P0 => 1,
            ElementOrder::P1 => 3,
        }
    }

    /// dim P_k(e): 1 or 2.
    #[inline]
    pub fn dim_edge(self) -> usize {
        match self {
            ElementOrder::P0 => 1,
            ElementOrder::P1 => 2,
        }
    }

    /// dim RT_k(T): 3 or 8.
    #[inline]
    pub fn dim_rt(self) -> usize {
        match self {
            ElementOrder::P0 => 3,
            ElementOrder::P1 => 8,
        }
    }

    pub fn local_dofs(self) -> LocalDofs {
        let n_interior = self.dim_interior();
        let n_edge = self.dim_edge();
        LocalDofs { n_interior, n_edge, total: n_interior + 3 * n_edge }
    }
}

/// Counts of element-local unknowns: interior, per edge, and combined.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LocalDofs {
    pub n_interior: usize,
    pub n_edge: usize,
    pub total: usize,
}

/// One edge of an element, in the globally agreed direction (from the lower
/// to the higher vertex index) so that both adjacent elements parameterize
/// shared edge unknowns identically.
#[derive(Clone, Copy, Debug)]
pub struct ElementEdge<R> {
    /// Global edge index.
    pub index: usize,
    /// Start point (lower global vertex index).
    pub a: [R; 2],
    /// End point.
    pub b: [R; 2],
    pub length: R,
    /// Unit normal pointing out of this element.
    pub normal: [R; 2],
}

impl<R: Real> ElementEdge<R> {
    /// Physical point at arclength fraction `t` in [0, 1].
    #[inline]
    pub fn point_at(&self, t: R) -> (R, R) {
        (self.a[0] + (self.b[0] - self.a[0]) * t, self.a[1] + (self.b[1] - self.a[1]) * t)
    }
}

/// Per-element geometry snapshot used by all local computations.
#[derive(Clone, Copy, Debug)]
pub struct ElementGeometry<R> {
    pub coords: [[R; 2]; 3],
    pub centroid: [R; 2],
    /// Longest edge, used as the local length scale.
    pub diameter: R,
    pub area: R,
    /// Edges in `tri_edges` order (v0-v1, v1-v2, v2-v0).
    pub edges: [ElementEdge<R>; 3],
}

impl<R: Real> ElementGeometry<R> {
    pub fn from_mesh(mesh: &Mesh<R>, t: usize) -> Self {
        let coords = mesh.tri_coords(t);
        let third = R::of(1.0 / 3.0);
        let centroid = [
            (coords[0][0] + coords[1][0] + coords[2][0]) * third,
            (coords[0][1] + coords[1][1] + coords[2][1]) * third,
        ];
        let mut edges = [ElementEdge {
            index: 0,
            a: [R::zero(); 2],
            b: [R::zero(); 2],
            length: R::zero(),
            normal: [R::zero(); 2],
        }; 3];
        let mut diameter = R::zero();
        for k in 0..3 {
            let (e, _) = mesh.tri_edges[t][k];
            let edge = &mesh.edges[e];
            let pa = mesh.vertices[edge.v[0]];
            let pb = mesh.vertices[edge.v[1]];
            edges[k] = ElementEdge {
                index: e,
                a: [pa.x, pa.y],
                b: [pb.x, pb.y],
                length: edge.length,
                normal: mesh.outward_normal(e, t),
            };
            diameter = diameter.max(edge.length);
        }
        let area = mesh.signed_area(t);
        Self { coords, centroid, diameter, area, edges }
    }

    /// Centroid-shifted, diameter-scaled local coordinates.
    #[inline]
    pub fn local(&self, x: R, y: R) -> (R, R) {
        ((x - self.centroid[0]) / self.diameter, (y - self.centroid[1]) / self.diameter)
    }
}

/// Values of the interior scalar basis {1} or {1, xi, eta} at a point.
#[inline]
pub fn interior_basis<R: Real>(order: ElementOrder, geom: &ElementGeometry<R>, x: R, y: R, out: &mut [R]) {
    out[0] = R::one();
    if order == ElementOrder::P1 {
        let (xi, eta) = geom.local(x, y);
        out[1] = xi;
        out[2] = eta;
    }
}

/// Values of the edge scalar basis {1} or {1, t - 1/2} at arclength fraction t.
#[inline]
pub fn edge_basis<R: Real>(order: ElementOrder, t: R, out: &mut [R]) {
    out[0] = R::one();
    if order == ElementOrder::P1 {
        out[1] = t - R::of(0.5);
    }
}

/// Raviart-Thomas basis RT_k(T) = P_k(T)^2 + \~P_k(T) x in local coordinates.
///
/// k = 0: (1,0), (0,1), (xi,eta).
/// k = 1: (1,0), (xi,0), (eta,0), (0,1), (0,xi), (0,eta), xi(xi,eta), eta(xi,eta).
#[derive(Clone, Copy, Debug)]
pub struct RtBasis<'a, R> {
    pub geom: &'a ElementGeometry<R>,
    pub order: ElementOrder,
}

impl<'a, R: Real> RtBasis<'a, R> {
    pub fn new(geom: &'a ElementGeometry<R>, order: ElementOrder) -> Self {
        Self { geom, order }
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.order.dim_rt()
    }

    /// Vector values of every member at the physical point (x, y).
    #[inline]
    pub fn eval(&self, x: R, y: R, out: &mut [[R; 2]]) {
        let (xi, eta) = self.geom.local(x, y);
        let zero = R::zero();
        match self.order {
            ElementOrder::P0 => {
                out[0] = [R::one(), zero];
                out[1] = [zero, R::one()];
                out[2] = [xi, eta];
            }
            ElementOrder::P1 => {
                out[0] = [R::one(), zero];
                out[1] = [xi, zero];
                out[2] = [eta, zero];
                out[3] = [zero, R::one()];
                out[4] = [zero, xi];
                out[5] = [zero, eta];
                out[6] = [xi * xi, xi * eta];
                out[7] = [eta * xi, eta * eta];
            }
        }
    }

    /// Physical divergence of every member at (x, y); polynomial of degree
    /// at most k.
    #[inline]
    pub fn divergence(&self, x: R, y: R, out: &mut [R]) {
        let inv_h = R::one() / self.geom.diameter;
        match self.order {
            ElementOrder::P0 => {
                out[0] = R::zero();
                out[1] = R::zero();
                out[2] = inv_h + inv_h;
            }
            ElementOrder::P1 => {
                let (xi, eta) = self.geom.local(x, y);
                let three = R::of(3.0);
                out[0] = R::zero();
                out[1] = inv_h;
                out[2] = R::zero();
                out[3] = R::zero();
                out[4] = R::zero();
                out[5] = inv_h;
                out[6] = three * xi * inv_h;
                out[7] = three * eta * inv_h;
            }
        }
    }
}
