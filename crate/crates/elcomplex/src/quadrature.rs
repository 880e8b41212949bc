//! Contour integration against the line element `dz~ = dy - i dx` over
//! smooth closed curves, and area integration over star-shaped domains,
//! including the weakly singular kernel `tilde(z - zeta)^(-1)`.
//!
//! Closed contours use the periodic trapezoid rule (spectrally accurate for
//! analytic integrands); areas use a tensor polar grid, trapezoid in the
//! angle and Gauss-Legendre in the radius. Singular integrals recenter the
//! polar grid at the pole so the `1/r` kernel growth is cancelled exactly by
//! the polar Jacobian.

use std::f64::consts::PI;

use crate::algebra::{AlgebraParams, ElComplex};
use crate::error::{Error, Result};

/// Node counts for the quadrature rules. Angular nodes drive contours and
/// the angle of polar grids; radial nodes drive the Gauss-Legendre rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuadratureSpec {
    n_theta: usize,
    n_r: usize,
}

impl QuadratureSpec {
    pub const MAX_NODES: usize = 1 << 20;

    pub fn new(n_theta: usize, n_r: usize) -> Result<Self> {
        if !(8..=Self::MAX_NODES).contains(&n_theta) {
            return Err(Error::InvalidQuadratureSpec {
                what: format!("n_theta = {n_theta} outside [8, 2^20]"),
            });
        }
        if !(4..=Self::MAX_NODES).contains(&n_r) {
            return Err(Error::InvalidQuadratureSpec {
                what: format!("n_r = {n_r} outside [4, 2^20]"),
            });
        }
        Ok(QuadratureSpec { n_theta, n_r })
    }

    pub fn n_theta(&self) -> usize {
        self.n_theta
    }

    pub fn n_r(&self) -> usize {
        self.n_r
    }
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        QuadratureSpec {
            n_theta: 512,
            n_r: 64,
        }
    }
}

/// Gauss-Legendre nodes and weights on `[-1, 1]`, by Newton iteration on the
/// Legendre recurrence.
pub(crate) fn gauss_legendre(n: usize) -> Vec<(f64, f64)> {
    let mut rule = Vec::with_capacity(n);
    for i in 0..n {
        let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let mut p0 = 1.0;
            let mut p1 = x;
            for k in 2..=n {
                let kf = k as f64;
                let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let step = p1 / dp;
            x -= step;
            if step.abs() <= 1e-15 {
                break;
            }
        }
        rule.push((x, 2.0 / ((1.0 - x * x) * dp * dp)));
    }
    rule
}

/// Periodic trapezoid rule for `int_0^{2pi} g(t) dt`: the plain average of
/// `n` uniform samples times `2pi`. Summation is in index order so results
/// are bit-reproducible.
pub fn periodic_trapezoid<F>(n: usize, g: F) -> ElComplex
where
    F: Fn(f64) -> ElComplex,
{
    let h = 2.0 * PI / n as f64;
    let mut acc = ElComplex::ZERO;
    for k in 0..n {
        acc += g(k as f64 * h);
    }
    acc.scale(h)
}

/// A smooth closed positively oriented parametrized curve on `[0, 2pi)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Curve {
    /// Euclidean circle `||z - center||_(1,0) = radius`, counterclockwise.
    Circle { center: ElComplex, radius: f64 },
    /// The level set `||tilde(z - center)||_(alpha,beta) = radius`, traced as
    /// `tilde(z - center) = radius * (cos t + i_hat sin t)`.
    AlgEllipse {
        center: ElComplex,
        radius: f64,
        params: AlgebraParams,
    },
}

/// Builds the `(alpha, beta)`-ellipse around `center` with radius `eps`:
/// the positively oriented curve with
/// `tilde(point(t) - center) = eps * (cos t + i_hat sin t)`.
pub fn alg_ellipse_curve(center: ElComplex, eps: f64, p: &AlgebraParams) -> Curve {
    Curve::AlgEllipse {
        center,
        radius: eps,
        params: *p,
    }
}

impl Curve {
    pub fn circle(center: ElComplex, radius: f64) -> Curve {
        Curve::Circle { center, radius }
    }

    pub fn point(&self, t: f64) -> ElComplex {
        match self {
            Curve::Circle { center, radius } => {
                *center + ElComplex::new(radius * t.cos(), radius * t.sin())
            }
            Curve::AlgEllipse {
                center,
                radius,
                params,
            } => {
                let ih = params.i_hat();
                // untilde of eps*(cos t + i_hat sin t)
                *center
                    + ElComplex::new(
                        -radius * ih.im * t.sin(),
                        radius * (t.cos() + ih.re * t.sin()),
                    )
            }
        }
    }

    pub fn velocity(&self, t: f64) -> ElComplex {
        match self {
            Curve::Circle { radius, .. } => ElComplex::new(-radius * t.sin(), radius * t.cos()),
            Curve::AlgEllipse { radius, params, .. } => {
                let ih = params.i_hat();
                ElComplex::new(
                    -radius * ih.im * t.cos(),
                    radius * (-t.sin() + ih.re * t.cos()),
                )
            }
        }
    }

    /// The star-shaped region bounded by the curve.
    pub fn enclosed_domain(&self) -> StarDomain {
        match self {
            Curve::Circle { center, radius } => StarDomain::disk(*center, *radius),
            Curve::AlgEllipse {
                center,
                radius,
                params,
            } => StarDomain::alg_ellipse_disk(*center, *radius, params),
        }
    }

    /// Whether `z` lies strictly inside the curve.
    pub fn encloses(&self, z: ElComplex) -> bool {
        self.enclosed_domain().contains_strict(z)
    }
}

/// Approximates the closed contour integral against `dz~`,
/// `int f(z(t)) * tilde(z'(t)) dt`, by the periodic trapezoid rule.
pub fn contour_integral<F>(
    f: F,
    curve: &Curve,
    spec: QuadratureSpec,
    p: &AlgebraParams,
) -> ElComplex
where
    F: Fn(ElComplex) -> ElComplex,
{
    periodic_trapezoid(spec.n_theta(), |t| {
        f(curve.point(t)).mul(curve.velocity(t).tilde(), p)
    })
}

/// A bounded 2D region star-shaped about its center, with the boundary a
/// level set of a positive definite quadratic form in tilde coordinates.
/// Both built-in kinds are convex, hence star-shaped about every interior
/// point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum StarDomain {
    /// `||z - center||_(1,0) < radius`.
    Disk { center: ElComplex, radius: f64 },
    /// `||tilde(z - center)||_(alpha,beta) < radius`, the region enclosed by
    /// the corresponding [`Curve::AlgEllipse`].
    AlgEllipseDisk {
        center: ElComplex,
        radius: f64,
        params: AlgebraParams,
    },
}

impl StarDomain {
    pub fn disk(center: ElComplex, radius: f64) -> StarDomain {
        StarDomain::Disk { center, radius }
    }

    pub fn alg_ellipse_disk(center: ElComplex, radius: f64, p: &AlgebraParams) -> StarDomain {
        StarDomain::AlgEllipseDisk {
            center,
            radius,
            params: *p,
        }
    }

    pub fn center(&self) -> ElComplex {
        match self {
            StarDomain::Disk { center, .. } | StarDomain::AlgEllipseDisk { center, .. } => *center,
        }
    }

    fn radius(&self) -> f64 {
        match self {
            StarDomain::Disk { radius, .. } | StarDomain::AlgEllipseDisk { radius, .. } => *radius,
        }
    }

    /// Parameters of the quadratic form whose level set is the boundary.
    pub(crate) fn form_params(&self) -> AlgebraParams {
        match self {
            StarDomain::Disk { .. } => AlgebraParams::classical(),
            StarDomain::AlgEllipseDisk { params, .. } => *params,
        }
    }

    /// Closed-form area.
    pub fn area(&self) -> f64 {
        match self {
            StarDomain::Disk { radius, .. } => PI * radius * radius,
            // area of {Q(w) <= r^2} is pi r^2 / sqrt(det Q); tilde is a
            // rotation, so it preserves area.
            StarDomain::AlgEllipseDisk { radius, params, .. } => {
                2.0 * PI * radius * radius / params.discriminant().sqrt()
            }
        }
    }

    /// Radial function about the domain's own center.
    pub fn rho(&self, theta: f64) -> f64 {
        match self {
            StarDomain::Disk { radius, .. } => *radius,
            StarDomain::AlgEllipseDisk { radius, params, .. } => {
                let dir = ElComplex::new(theta.cos(), theta.sin()).tilde();
                radius / dir.norm(params)
            }
        }
    }

    /// Strict interior test.
    pub fn contains_strict(&self, z: ElComplex) -> bool {
        let q = self.form_params();
        (z - self.center()).tilde().norm_sq(&q) < self.radius() * self.radius()
    }

    /// Radial function about an arbitrary interior point: the positive root
    /// of `Q(a + rho*b) = r^2` with `a = tilde(pole - center)` and
    /// `b = tilde(e^{i theta})`.
    pub fn rho_about(&self, pole: ElComplex, theta: f64) -> Result<f64> {
        let q = self.form_params();
        let r2 = self.radius() * self.radius();
        let a = (pole - self.center()).tilde();
        let qa = a.norm_sq(&q);
        if qa >= r2 {
            return Err(Error::PoleOutsideDomain);
        }
        let b = ElComplex::new(theta.cos(), theta.sin()).tilde();
        let qb = b.norm_sq(&q);
        let cross = a.inner(b, &q);
        let disc = cross * cross + qb * (r2 - qa);
        if disc <= 0.0 {
            return Err(Error::NotStarShaped);
        }
        let root = (-cross + disc.sqrt()) / qb;
        if root <= 0.0 {
            return Err(Error::NotStarShaped);
        }
        Ok(root)
    }

    /// Radial-function existence check over a sampled angle grid.
    fn check_star_shaped(&self, pole: ElComplex, n_theta: usize) -> Result<()> {
        if !self.contains_strict(pole) {
            return Err(Error::PoleOutsideDomain);
        }
        for k in 0..n_theta {
            self.rho_about(pole, 2.0 * PI * k as f64 / n_theta as f64)?;
        }
        Ok(())
    }

    /// The positively oriented boundary curve.
    pub fn boundary(&self) -> Curve {
        match self {
            StarDomain::Disk { center, radius } => Curve::circle(*center, *radius),
            StarDomain::AlgEllipseDisk {
                center,
                radius,
                params,
            } => alg_ellipse_curve(*center, *radius, params),
        }
    }
}

/// Polar tensor rule about `about`: `int int f(about + r e^{i theta}) r dr dtheta`
/// with `r` up to `rho(theta)`.
fn polar_area<F, R>(about: ElComplex, rho: R, f: F, spec: QuadratureSpec) -> ElComplex
where
    F: Fn(ElComplex) -> ElComplex,
    R: Fn(f64) -> f64,
{
    let gl = gauss_legendre(spec.n_r());
    let n = spec.n_theta();
    let h = 2.0 * PI / n as f64;
    let mut acc = ElComplex::ZERO;
    for k in 0..n {
        let theta = k as f64 * h;
        let (sin_t, cos_t) = theta.sin_cos();
        let rmax = rho(theta);
        let mut radial = ElComplex::ZERO;
        for &(x, w) in &gl {
            let r = 0.5 * rmax * (x + 1.0);
            let z = about + ElComplex::new(r * cos_t, r * sin_t);
            radial += f(z).scale(w * r);
        }
        acc += radial.scale(0.5 * rmax);
    }
    acc.scale(h)
}

/// Approximates `int int_d g dx dy` in polar coordinates about the domain
/// center, Gauss-Legendre radially and trapezoid angularly.
pub fn area_integral<F>(g: F, d: &StarDomain, spec: QuadratureSpec) -> ElComplex
where
    F: Fn(ElComplex) -> ElComplex,
{
    polar_area(d.center(), |theta| d.rho(theta), g, spec)
}

/// Approximates `int int_d g(z) * tilde(z - zeta)^(-1) dx dy` for a pole
/// strictly inside the domain.
///
/// The polar grid is centered at the pole, not at the domain center: the
/// kernel grows like `1/r` there and the polar Jacobian `r` cancels it, so
/// the integrand extends continuously to the pole and the plain tensor rule
/// converges at its smooth-integrand rate.
pub fn singular_area_integral<F>(
    g: F,
    d: &StarDomain,
    zeta: ElComplex,
    spec: QuadratureSpec,
    p: &AlgebraParams,
) -> Result<ElComplex>
where
    F: Fn(ElComplex) -> ElComplex,
{
    d.check_star_shaped(zeta, spec.n_theta())?;
    Ok(polar_area(
        zeta,
        |theta| d.rho_about(zeta, theta).expect("existence checked above"),
        |z| {
            let kernel = (z - zeta)
                .tilde()
                .inv(p)
                .expect("quadrature nodes are strictly away from the pole");
            g(z).mul(kernel, p)
        },
        spec,
    ))
}

/// `int int_d dx dy / ||z - zeta||_(1,0)`, the weakly singular integral of
/// the reciprocal Euclidean distance, by the same pole-centered polar rule.
pub fn reciprocal_distance_integral(
    d: &StarDomain,
    zeta: ElComplex,
    spec: QuadratureSpec,
) -> Result<f64> {
    d.check_star_shaped(zeta, spec.n_theta())?;
    Ok(polar_area(
        zeta,
        |theta| d.rho_about(zeta, theta).expect("existence checked above"),
        |z| ElComplex::new(1.0 / (z - zeta).norm_euclid(), 0.0),
        spec,
    )
    .re)
}
