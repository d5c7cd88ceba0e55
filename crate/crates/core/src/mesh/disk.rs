//! Polar ring meshes for the disk and the slit (cracked) disk.

use super::{DomainSpec, Mesh, MeshError, Point2, Triangle};
use crate::scalar::Real;

fn check_params<R: Real>(radius: R, n_boundary: usize) -> Result<usize, MeshError> {
    if !(radius > R::zero()) || !radius.is_finite() {
        return Err(MeshError::InvalidParameter("disk radius must be positive".into()));
    }
    if n_boundary < 6 || n_boundary % 6 != 0 {
        return Err(MeshError::InvalidParameter(format!(
            "n_boundary must be >= 6 and divisible by 6, got {n_boundary}"
        )));
    }
    Ok(n_boundary / 6)
}

fn ring_start(j: usize) -> usize {
    // center vertex + 6*1 + 6*2 + ... + 6*(j-1)
    if j == 0 {
        0
    } else {
        1 + 3 * j * (j - 1)
    }
}

/// Vertices of the polar lattice: ring j of M carries 6j points at radius
/// R j / M. Points on the x-axis are placed exactly; the lower half mirrors
/// the upper half so the mesh is symmetric about y = 0 to the last bit.
fn ring_vertices<R: Real>(radius: R, rings: usize) -> Vec<Point2<R>> {
    let mut vertices = vec![Point2::new(R::zero(), R::zero())];
    for j in 1..=rings {
        let r = radius * R::of_usize(j) / R::of_usize(rings);
        let count = 6 * j;
        for i in 0..count {
            let p = if i == 0 {
                Point2::new(r, R::zero())
            } else if 2 * i == count {
                Point2::new(-r, R::zero())
            } else if 2 * i < count {
                let theta = R::of(2.0) * R::PI() * R::of_usize(i) / R::of_usize(count);
                Point2::new(r * theta.cos(), r * theta.sin())
            } else {
                let mirror = vertices[ring_start(j) + (count - i)];
                Point2::new(mirror.x, -mirror.y)
            };
            vertices.push(p);
        }
    }
    vertices
}

/// Triangles of one annulus (between ring j and ring j+1) built per sector by
/// an angle-ordered two-pointer merge. Angle comparisons reduce to exact
/// integer arithmetic on the sector fractions t/(j+1) vs t/j.
fn annulus_triangles(j: usize, triangles: &mut Vec<Triangle>) {
    let upper = |s: usize, t: usize| {
        let count = 6 * (j + 1);
        ring_start(j + 1) + (s * (j + 1) + t) % count
    };
    let lower = |s: usize, t: usize| {
        if j == 0 {
            0 // center vertex
        } else {
            ring_start(j) + (s * j + t) % (6 * j)
        }
    };
    for s in 0..6 {
        let mut a = 0usize;
        let mut b = 0usize;
        while a < j + 1 || b < j {
            let take_upper = if b == j {
                true
            } else if a == j + 1 {
                false
            } else {
                (a + 1) * j <= (b + 1) * (j + 1)
            };
            if take_upper {
                triangles.push(Triangle { v: [upper(s, a), upper(s, a + 1), lower(s, b)] });
                a += 1;
            } else {
                triangles.push(Triangle { v: [lower(s, b), upper(s, a), lower(s, b + 1)] });
                b += 1;
            }
        }
    }
}

/// Polygonal approximation of the disk of radius R with `n_boundary` rim
/// vertices (divisible by 6): a fan around the center plus M - 1 annuli.
pub fn disk_mesh<R: Real>(radius: R, n_boundary: usize) -> Result<Mesh<R>, MeshError> {
    let rings = check_params(radius, n_boundary)?;
    let vertices = ring_vertices(radius, rings);
    let mut triangles = Vec::with_capacity(6 * rings * rings);
    for j in 0..rings {
        annulus_triangles(j, &mut triangles);
    }
    Mesh::from_cells(vertices, triangles, DomainSpec::Disk { radius, n_boundary })
}

/// Disk with a slit along the negative x-axis. Each lattice point on the
/// slit (excluding the crack tip at the origin) exists twice: the original
/// serves the upper sheet, the copy the lower sheet, so the triangulation
/// does not connect across {y = 0, x < 0}.
pub fn cracked_disk_mesh<R: Real>(radius: R, n_boundary: usize) -> Result<Mesh<R>, MeshError> {
    let rings = check_params(radius, n_boundary)?;
    let mut vertices = ring_vertices(radius, rings);
    let mut triangles = Vec::with_capacity(6 * rings * rings);
    for j in 0..rings {
        annulus_triangles(j, &mut triangles);
    }

    // duplicate slit vertices (ring j, angular index 3j sits at angle pi)
    let mut lower_copy = vec![usize::MAX; vertices.len()];
    for j in 1..=rings {
        let orig = ring_start(j) + 3 * j;
        lower_copy[orig] = vertices.len();
        vertices.push(vertices[orig]);
    }
    let third = R::of(1.0 / 3.0);
    for tri in &mut triangles {
        let yc = (vertices[tri.v[0]].y + vertices[tri.v[1]].y + vertices[tri.v[2]].y) * third;
        if yc < R::zero() {
            for v in &mut tri.v {
                if lower_copy[*v] != usize::MAX {
                    *v = lower_copy[*v];
                }
            }
        }
    }

    Mesh::from_cells(vertices, triangles, DomainSpec::CrackedDisk { radius, n_boundary })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_disk_is_a_fan() {
        let m = disk_mesh::<f64>(1.0, 6).unwrap();
        assert_eq!(m.n_triangles(), 6);
        assert_eq!(m.n_vertices(), 7);
        assert!(m.validate().is_clean());
        for t in 0..6 {
            assert!(m.triangles[t].v.contains(&0), "fan triangle must touch center");
        }
    }

    #[test]
    fn boundary_vertices_on_circle() {
        let m = disk_mesh::<f64>(5.0, 24).unwrap();
        for e in m.edges.iter().filter(|e| e.boundary) {
            for &v in &e.v {
                let p = m.vertices[v];
                assert!(
                    (p.x * p.x + p.y * p.y - 25.0).abs() < 1e-12,
                    "boundary vertex off circle: {p:?}"
                );
            }
        }
    }

    #[test]
    fn disk_counts_and_topology() {
        for n_boundary in [6usize, 12, 24, 48] {
            let rings = n_boundary / 6;
            let m = disk_mesh::<f64>(2.0, n_boundary).unwrap();
            assert_eq!(m.n_triangles(), 6 * rings * rings);
            assert_eq!(m.n_boundary_edges(), n_boundary);
            let diag = m.validate();
            assert!(diag.is_clean(), "{diag:?}");
        }
    }

    #[test]
    fn disk_rejects_bad_parameters() {
        assert!(disk_mesh::<f64>(1.0, 20).is_err());
        assert!(disk_mesh::<f64>(1.0, 0).is_err());
        assert!(disk_mesh::<f64>(-1.0, 12).is_err());
        assert!(cracked_disk_mesh::<f64>(1.0, 7).is_err());
    }

    #[test]
    fn cracked_disk_slit_is_boundary() {
        let m = cracked_disk_mesh::<f64>(1.0, 24).unwrap();
        let rings = 4;
        // every edge lying on {y = 0, x <= 0} must be a boundary edge
        let mut slit_edges = 0;
        for e in &m.edges {
            let pa = m.vertices[e.v[0]];
            let pb = m.vertices[e.v[1]];
            if pa.y == 0.0 && pb.y == 0.0 && pa.x <= 0.0 && pb.x <= 0.0 {
                assert!(e.boundary, "slit edge {:?} must be boundary", e.v);
                slit_edges += 1;
            }
        }
        assert_eq!(slit_edges, 2 * rings);
        // still simply connected
        assert_eq!(m.validate().euler_characteristic, 1);
        assert!(m.validate().is_clean());
    }

    #[test]
    fn cracked_disk_duplicates_slit_vertices() {
        let m = cracked_disk_mesh::<f64>(1.0, 12).unwrap();
        let plain = disk_mesh::<f64>(1.0, 12).unwrap();
        assert_eq!(m.n_vertices(), plain.n_vertices() + 2);
        assert_eq!(m.n_triangles(), plain.n_triangles());
    }

    #[test]
    fn centroid_angles_stay_inside_open_interval() {
        let m = cracked_disk_mesh::<f64>(1.0, 24).unwrap();
        for t in 0..m.n_triangles() {
            let c = m.centroid(t);
            let theta = c.y.atan2(c.x);
            assert!(
                theta > -std::f64::consts::PI && theta < std::f64::consts::PI,
                "centroid angle {theta} hits the slit"
            );
        }
    }

    #[test]
    fn disk_mirror_symmetric_about_x_axis() {
        let m = disk_mesh::<f64>(3.0, 18).unwrap();
        for p in &m.vertices {
            assert!(
                m.vertices.iter().any(|q| q.x == p.x && q.y == -p.y),
                "no mirror partner for {p:?}"
            );
        }
    }
}
