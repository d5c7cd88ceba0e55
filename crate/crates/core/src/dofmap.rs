//! Global numbering of the weak Galerkin unknowns: element-interior dofs
//! first, then edge dofs, each in mesh order.

use crate::element::ElementOrder;
use crate::mesh::Mesh;
use crate::scalar::{Cplx, Real};

#[derive(Clone, Copy, Debug)]
pub struct DofMap {
    pub order: ElementOrder,
    n_triangles: usize,
    n_edges: usize,
}

impl DofMap {
    pub fn new<R: Real>(mesh: &Mesh<R>, order: ElementOrder) -> Self {
        Self { order, n_triangles: mesh.n_triangles(), n_edges: mesh.n_edges() }
    }

    #[inline]
    pub fn n_tri_dofs(&self) -> usize {
        self.n_triangles * self.order.dim_interior()
    }

    #[inline]
    pub fn n_edge_dofs(&self) -> usize {
        self.n_edges * self.order.dim_edge()
    }

    #[inline]
    pub fn n_total(&self) -> usize {
        self.n_tri_dofs() + self.n_edge_dofs()
    }

    /// First global dof of triangle `t`.
    #[inline]
    pub fn tri_offset(&self, t: usize) -> usize {
        debug_assert!(t < self.n_triangles);
        t * self.order.dim_interior()
    }

    /// First global dof of edge `e`.
    #[inline]
    pub fn edge_offset(&self, e: usize) -> usize {
        debug_assert!(e < self.n_edges);
        self.n_tri_dofs() + e * self.order.dim_edge()
    }

    /// True if the global dof index belongs to an edge.
    #[inline]
    pub fn is_edge_dof(&self, dof: usize) -> bool {
        dof >= self.n_tri_dofs()
    }
}

/// A weak Galerkin function: the complex coefficient vector over a [`DofMap`]
/// layout.
#[derive(Clone, Debug)]
pub struct WgFunction<R: Real> {
    pub order: ElementOrder,
    pub dofs: Vec<Cplx<R>>,
}

impl<R: Real> WgFunction<R> {
    pub fn zeros(dofmap: &DofMap) -> Self {
        Self { order: dofmap.order, dofs: vec![Cplx::new(R::zero(), R::zero()); dofmap.n_total()] }
    }

    /// Gathers the element-local dof vector (interior block then the three
    /// edge blocks in `tri_edges` order).
    pub fn local_dofs<'m>(&self, mesh: &Mesh<R>, dofmap: &DofMap, t: usize, out: &mut Vec<Cplx<R>>) {
        let _ = mesh; // signature symmetry with scatter paths
        let di = self.order.dim_interior();
        let de = self.order.dim_edge();
        out.clear();
        let t0 = dofmap.tri_offset(t);
        out.extend_from_slice(&self.dofs[t0..t0 + di]);
        for k in 0..3 {
            let (e, _) = mesh.tri_edges[t][k];
            let e0 = dofmap.edge_offset(e);
            out.extend_from_slice(&self.dofs[e0..e0 + de]);
        }
    }

    /// Value of the interior polynomial of element `t` at a physical point.
    pub fn eval_interior(&self, mesh: &Mesh<R>, dofmap: &DofMap, t: usize, x: R, y: R) -> Cplx<R> {
        use crate::element::{interior_basis, ElementGeometry};
        let geom = ElementGeometry::from_mesh(mesh, t);
        let di = self.order.dim_interior();
        let mut p = vec![R::zero(); di];
        interior_basis(self.order, &geom, x, y, &mut p);
        let t0 = dofmap.tri_offset(t);
        let mut acc = Cplx::new(R::zero(), R::zero());
        for i in 0..di {
            acc += self.dofs[t0 + i].scale(p[i]);
        }
        acc
    }
}
