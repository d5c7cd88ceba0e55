//! Quadrature rules on the reference triangle (barycentric points) and the
//! reference edge [0, 1]. Weights are normalized to sum to one, so physical
//! integrals are `measure(cell) * sum_i w_i f(p_i)`.

use std::fmt;

use crate::scalar::Real;

#[derive(Debug, Clone, PartialEq)]
pub struct UnsupportedRule {
    pub requested: usize,
    pub what: &'static str,
}

impl fmt::Display for UnsupportedRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unsupported {}: {}", self.what, self.requested)
    }
}

impl std::error::Error for UnsupportedRule {}

/// Quadrature on the reference triangle, points stored barycentrically.
#[derive(Debug, Clone)]
pub struct TriQuadRule<R> {
    pub points: Vec<[R; 3]>,
    pub weights: Vec<R>,
    /// Total polynomial degree integrated exactly.
    pub degree: usize,
}

/// Gauss quadrature on the reference edge [0, 1].
#[derive(Debug, Clone)]
pub struct EdgeQuadRule<R> {
    pub points: Vec<R>,
    pub weights: Vec<R>,
    pub degree: usize,
}

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1],
/// computed by Newton iteration on the Legendre recurrence.
pub fn gauss_legendre<R: Real>(n: usize) -> (Vec<R>, Vec<R>) {
    assert!(n >= 1);
    let mut nodes = vec![R::zero(); n];
    let mut weights = vec![R::zero(); n];
    let nf = R::of_usize(n);
    for i in 0..n.div_ceil(2) {
        // Chebyshev-like initial guess
        let guess = (R::PI() * (R::of_usize(i) + R::of(0.75)) / (nf + R::of(0.5))).cos();
        let mut x = guess;
        let mut dp = R::zero();
        for _ in 0..100 {
            // Legendre P_n(x) and derivative by recurrence
            let mut p0 = R::one();
            let mut p1 = x;
            for k in 2..=n {
                let kr = R::of_usize(k);
                let p2 = ((kr + kr - R::one()) * x * p1 - (kr - R::one()) * p0) / kr;
                p0 = p1;
                p1 = p2;
            }
            dp = nf * (x * p1 - p0) / (x * x - R::one());
            let dx = p1 / dp;
            x = x - dx;
            if dx.abs() <= R::epsilon() * x.abs().max(R::one()) {
                break;
            }
        }
        let w = R::of(2.0) / ((R::one() - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    if n % 2 == 1 {
        nodes[n / 2] = R::zero();
    }
    (nodes, weights)
}

/// Gauss rule with `n_points` points on [0, 1]; exact to degree 2n - 1.
pub fn edge_quadrature<R: Real>(n_points: usize) -> Result<EdgeQuadRule<R>, UnsupportedRule> {
    if n_points == 0 || n_points > 100 {
        return Err(UnsupportedRule { requested: n_points, what: "edge quadrature point count" });
    }
    let (x, w) = gauss_legendre::<R>(n_points);
    let half = R::of(0.5);
    Ok(EdgeQuadRule {
        points: x.iter().map(|&xi| half * (xi + R::one())).collect(),
        weights: w.iter().map(|&wi| half * wi).collect(),
        degree: 2 * n_points - 1,
    })
}

/// Symmetric or collapsed-tensor rule exact for total degree `degree` on the
/// reference triangle.
pub fn triangle_quadrature<R: Real>(degree: usize) -> Result<TriQuadRule<R>, UnsupportedRule> {
    if degree > 100 {
        return Err(UnsupportedRule { requested: degree, what: "triangle quadrature degree" });
    }
    let third = R::of(1.0 / 3.0);
    match degree {
        0 | 1 => Ok(TriQuadRule {
            points: vec![[third, third, third]],
            weights: vec![R::one()],
            degree: 1,
        }),
        2 => {
            // edge-midpoint rule
            let h = R::of(0.5);
            let z = R::zero();
            Ok(TriQuadRule {
                points: vec![[h, h, z], [z, h, h], [h, z, h]],
                weights: vec![third; 3],
                degree: 2,
            })
        }
        3..=5 => {
            // classic 7-point degree-5 rule
            let sqrt15 = R::of(15.0).sqrt();
            let a1 = (R::of(6.0) - sqrt15) / R::of(21.0);
            let a2 = (R::of(6.0) + sqrt15) / R::of(21.0);
            let w0 = R::of(9.0 / 40.0);
            let w1 = (R::of(155.0) - sqrt15) / R::of(1200.0);
            let w2 = (R::of(155.0) + sqrt15) / R::of(1200.0);
            let orbit = |a: R| {
                let b = R::one() - a - a;
                [[a, a, b], [a, b, a], [b, a, a]]
            };
            let mut points = vec![[third, third, third]];
            let mut weights = vec![w0];
            for p in orbit(a1) {
                points.push(p);
                weights.push(w1);
            }
            for p in orbit(a2) {
                points.push(p);
                weights.push(w2);
            }
            Ok(TriQuadRule { points, weights, degree: 5 })
        }
        d => Ok(collapsed_tensor(d)),
    }
}

/// Tensor Gauss rule on the collapsed square: x = s, y = t(1 - s) with
/// Jacobian (1 - s). Exact for any total degree d by choosing enough points
/// in each direction.
fn collapsed_tensor<R: Real>(degree: usize) -> TriQuadRule<R> {
    let n_s = (degree + 2).div_ceil(2); // integrand degree d+1 in s
    let n_t = (degree + 1).div_ceil(2);
    let s_rule = edge_quadrature::<R>(n_s).expect("point count in range");
    let t_rule = edge_quadrature::<R>(n_t).expect("point count in range");
    let mut points = Vec::with_capacity(n_s * n_t);
    let mut weights = Vec::with_capacity(n_s * n_t);
    for (&s, &ws) in s_rule.points.iter().zip(&s_rule.weights) {
        for (&t, &wt) in t_rule.points.iter().zip(&t_rule.weights) {
            let x = s;
            let y = t * (R::one() - s);
            points.push([R::one() - x - y, x, y]);
            // factor 2 renormalizes: sum of ws*wt*(1-s) is the reference
            // triangle area 1/2
            weights.push(R::of(2.0) * ws * wt * (R::one() - s));
        }
    }
    TriQuadRule { points, weights, degree }
}

/// Maps a barycentric point onto a physical triangle.
#[inline]
pub fn bary_to_xy<R: Real>(bary: [R; 3], v: &[[R; 2]; 3]) -> (R, R) {
    (
        bary[0] * v[0][0] + bary[1] * v[1][0] + bary[2] * v[2][0],
        bary[0] * v[0][1] + bary[1] * v[1][1] + bary[2] * v[2][1],
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Exact integral of x^a y^b over the reference triangle: a! b! / (a+b+2)!
    fn monomial_exact(a: u32, b: u32) -> f64 {
        let fact = |k: u32| (1..=k).map(|v| v as f64).product::<f64>();
        fact(a) * fact(b) / fact(a + b + 2)
    }

    fn integrate_ref(rule: &TriQuadRule<f64>, f: impl Fn(f64, f64) -> f64) -> f64 {
        let verts = [[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]];
        let area = 0.5;
        rule.points
            .iter()
            .zip(&rule.weights)
            .map(|(&p, &w)| {
                let (x, y) = bary_to_xy(p, &verts);
                area * w * f(x, y)
            })
            .sum()
    }

    #[test]
    fn degree2_integrates_constant_to_area() {
        let rule = triangle_quadrature::<f64>(2).unwrap();
        assert!((integrate_ref(&rule, |_, _| 1.0) - 0.5).abs() < 1e-15);
    }

    #[test]
    fn degree5_integrates_x2y2() {
        let rule = triangle_quadrature::<f64>(5).unwrap();
        let exact = monomial_exact(2, 2);
        assert!((exact - 1.0 / 180.0).abs() < 1e-18);
        assert!((integrate_ref(&rule, |x, y| x * x * y * y) - exact).abs() < 1e-15);
    }

    #[test]
    fn degree8_integrates_x4y4() {
        let rule = triangle_quadrature::<f64>(8).unwrap();
        let exact = monomial_exact(4, 4);
        assert!((integrate_ref(&rule, |x, y| x.powi(4) * y.powi(4)) - exact).abs() < 1e-14);
    }

    #[test]
    fn all_monomials_exact_up_to_declared_degree() {
        for degree in [2usize, 5, 8, 11] {
            let rule = triangle_quadrature::<f64>(degree).unwrap();
            for a in 0..=degree as u32 {
                for b in 0..=(degree as u32 - a) {
                    let exact = monomial_exact(a, b);
                    let got = integrate_ref(&rule, |x, y| x.powi(a as i32) * y.powi(b as i32));
                    assert!(
                        (got - exact).abs() <= 1e-13 * exact.abs().max(1e-3),
                        "degree {degree} rule misses x^{a} y^{b}: {got} vs {exact}"
                    );
                }
            }
        }
    }

    #[test]
    fn triangle_weights_sum_to_one() {
        for degree in [2usize, 5, 8] {
            let rule = triangle_quadrature::<f64>(degree).unwrap();
            let s: f64 = rule.weights.iter().sum();
            assert!((s - 1.0).abs() < 1e-14);
        }
    }

    #[test]
    fn edge_two_point_integrates_t3() {
        let rule = edge_quadrature::<f64>(2).unwrap();
        let got: f64 = rule.points.iter().zip(&rule.weights).map(|(&t, &w)| w * t * t * t).sum();
        assert!((got - 0.25).abs() < 1e-15);
    }

    #[test]
    fn edge_four_point_integrates_t7() {
        let rule = edge_quadrature::<f64>(4).unwrap();
        let got: f64 = rule.points.iter().zip(&rule.weights).map(|(&t, &w)| w * t.powi(7)).sum();
        assert!((got - 0.125).abs() < 1e-15);
    }

    #[test]
    fn edge_weights_sum_to_one() {
        for n in [1usize, 2, 4, 9] {
            let rule = edge_quadrature::<f64>(n).unwrap();
            let s: f64 = rule.weights.iter().sum();
            assert!((s - 1.0).abs() < 1e-14, "n = {n}");
        }
    }

    #[test]
    fn gauss_legendre_matches_published_5pt() {
        let (x, w) = gauss_legendre::<f64>(5);
        assert!((x[0] + 0.906179845938664).abs() < 1e-14);
        assert!((x[2]).abs() < 1e-15);
        assert!((w[2] - 0.5688888888888889).abs() < 1e-14);
        assert!((w[0] - 0.23692688505618908).abs() < 1e-14);
    }

    #[test]
    fn rejects_unsupported_requests() {
        assert!(triangle_quadrature::<f64>(101).is_err());
        assert!(edge_quadrature::<f64>(0).is_err());
    }
}
