//! The discrete weak gradient and the element matrices built from it.
//!
//! For a weak function v = {v0, vb} on an element T, the weak gradient is the
//! RT_k(T) field satisfying
//!
//! ```text
//! (grad_d v, q)_T = -(v0, div q)_T + <vb, q.n>_dT    for all q in RT_k(T),
//! ```
//!
//! so one small Gram solve per element expresses grad_d of every local basis
//! function in the RT basis.

use crate::element::{edge_basis, interior_basis, ElementGeometry, ElementOrder, RtBasis};
use crate::linalg::{DenseMatrix, SingularMatrix};
use crate::quadrature::{bary_to_xy, edge_quadrature, triangle_quadrature, EdgeQuadRule, TriQuadRule};
use crate::scalar::Real;

/// The quadrature rules used on matrices (exact for the polynomial
/// integrands) and on right-hand sides (higher degree, for oscillatory data).
#[derive(Clone, Debug)]
pub struct QuadSet<R> {
    pub tri_mat: TriQuadRule<R>,
    pub edge_mat: EdgeQuadRule<R>,
    pub tri_rhs: TriQuadRule<R>,
    pub edge_rhs: EdgeQuadRule<R>,
}

pub const DEFAULT_RHS_DEGREE: usize = 8;

impl<R: Real> QuadSet<R> {
    /// Rules for the given element order. `rhs_degree` controls the accuracy
    /// of load-vector and projection integrals (default 8; raise it when
    /// k_wave * h approaches 1).
    pub fn for_order(order: ElementOrder, rhs_degree: usize) -> Self {
        let (tri_deg, edge_pts) = match order {
            ElementOrder::P0 => (2, 2),
            ElementOrder::P1 => (5, 4),
        };
        let rhs_deg = rhs_degree.max(tri_deg);
        let edge_rhs_pts = (rhs_deg + 2).div_ceil(2).max(edge_pts);
        Self {
            tri_mat: triangle_quadrature(tri_deg).expect("fixed degree supported"),
            edge_mat: edge_quadrature(edge_pts).expect("fixed count supported"),
            tri_rhs: triangle_quadrature(rhs_deg).expect("degree in supported range"),
            edge_rhs: edge_quadrature(edge_rhs_pts).expect("count in supported range"),
        }
    }
}

/// Coefficients of the weak gradient of every local dof basis function,
/// expressed in the element's RT basis: column j holds grad_d(phi_j).
#[derive(Clone, Debug)]
pub struct LocalGradTable<R> {
    pub coeffs: DenseMatrix<R>,
}

/// Builds the weak-gradient table of one element by solving the RT Gram
/// system against all local dof right-hand sides at once.
pub fn weak_gradient_table<R: Real>(
    geom: &ElementGeometry<R>,
    order: ElementOrder,
    quads: &QuadSet<R>,
) -> Result<LocalGradTable<R>, SingularMatrix> {
    let rt = RtBasis::new(geom, order);
    let nrt = rt.dim();
    let dofs = order.local_dofs();

    let mut gram = DenseMatrix::<R>::zeros(nrt, nrt);
    let mut rhs = DenseMatrix::<R>::zeros(nrt, dofs.total);

    let mut theta = vec![[R::zero(); 2]; nrt];
    let mut div = vec![R::zero(); nrt];
    let mut p_int = vec![R::zero(); dofs.n_interior];

    for (bary, &w) in quads.tri_mat.points.iter().zip(&quads.tri_mat.weights) {
        let (x, y) = bary_to_xy(*bary, &geom.coords);
        rt.eval(x, y, &mut theta);
        rt.divergence(x, y, &mut div);
        interior_basis(order, geom, x, y, &mut p_int);
        let scale = geom.area * w;
        for i in 0..nrt {
            for j in i..nrt {
                let v = scale * (theta[i][0] * theta[j][0] + theta[i][1] * theta[j][1]);
                *gram.at_mut(i, j) += v;
                if i != j {
                    *gram.at_mut(j, i) += v;
                }
            }
            // -(v0, div q)_T for the interior dofs
            for j in 0..dofs.n_interior {
                *rhs.at_mut(i, j) -= scale * p_int[j] * div[i];
            }
        }
    }

    let mut q_edge = vec![R::zero(); dofs.n_edge];
    for (le, edge) in geom.edges.iter().enumerate() {
        let col0 = dofs.n_interior + le * dofs.n_edge;
        for (&t, &w) in quads.edge_mat.points.iter().zip(&quads.edge_mat.weights) {
            let (x, y) = edge.point_at(t);
            rt.eval(x, y, &mut theta);
            edge_basis(order, t, &mut q_edge);
            let scale = edge.length * w;
            for i in 0..nrt {
                let flux = theta[i][0] * edge.normal[0] + theta[i][1] * edge.normal[1];
                for m in 0..dofs.n_edge {
                    *rhs.at_mut(i, col0 + m) += scale * q_edge[m] * flux;
                }
            }
        }
    }

    gram.lu_solve_in_place(&mut rhs)?;
    Ok(LocalGradTable { coeffs: rhs })
}

/// Element stiffness (d grad_d phi_j, grad_d phi_i)_T. Symmetric positive
/// semidefinite with the constant weak function in its kernel.
pub fn local_stiffness<R: Real>(
    geom: &ElementGeometry<R>,
    order: ElementOrder,
    table: &LocalGradTable<R>,
    quads: &QuadSet<R>,
    d: impl Fn(R, R) -> R,
) -> DenseMatrix<R> {
    let rt = RtBasis::new(geom, order);
    let nrt = rt.dim();
    let mut weighted_gram = DenseMatrix::<R>::zeros(nrt, nrt);
    let mut theta = vec![[R::zero(); 2]; nrt];
    for (bary, &w) in quads.tri_mat.points.iter().zip(&quads.tri_mat.weights) {
        let (x, y) = bary_to_xy(*bary, &geom.coords);
        rt.eval(x, y, &mut theta);
        let scale = geom.area * w * d(x, y);
        for i in 0..nrt {
            for j in i..nrt {
                let v = scale * (theta[i][0] * theta[j][0] + theta[i][1] * theta[j][1]);
                *weighted_gram.at_mut(i, j) += v;
                if i != j {
                    *weighted_gram.at_mut(j, i) += v;
                }
            }
        }
    }
    let mut a = table.coeffs.transpose().matmul(&weighted_gram).matmul(&table.coeffs);
    a.symmetrize();
    a
}

/// Interior mass matrix (p_j, p_i)_T of the P_k(T) basis.
pub fn local_mass_interior<R: Real>(
    geom: &ElementGeometry<R>,
    order: ElementOrder,
    quads: &QuadSet<R>,
) -> DenseMatrix<R> {
    let n = order.dim_interior();
    let mut mass = DenseMatrix::<R>::zeros(n, n);
    let mut p = vec![R::zero(); n];
    for (bary, &w) in quads.tri_mat.points.iter().zip(&quads.tri_mat.weights) {
        let (x, y) = bary_to_xy(*bary, &geom.coords);
        interior_basis(order, geom, x, y, &mut p);
        let scale = geom.area * w;
        for i in 0..n {
            for j in 0..n {
                *mass.at_mut(i, j) += scale * p[i] * p[j];
            }
        }
    }
    mass
}

/// Edge mass matrix (q_j, q_i)_e of the P_k(e) basis, scaled by edge length.
pub fn edge_mass<R: Real>(edge_length: R, order: ElementOrder, quads: &QuadSet<R>) -> DenseMatrix<R> {
    let n = order.dim_edge();
    let mut mass = DenseMatrix::<R>::zeros(n, n);
    let mut q = vec![R::zero(); n];
    for (&t, &w) in quads.edge_mat.points.iter().zip(&quads.edge_mat.weights) {
        edge_basis(order, t, &mut q);
        let scale = edge_length * w;
        for i in 0..n {
            for j in 0..n {
                *mass.at_mut(i, j) += scale * q[i] * q[j];
            }
        }
    }
    mass
}
