//! Arithmetic for the two-parameter family of elliptic complex algebras.
//!
//! An element is `z = x + iy` where the imaginary unit satisfies
//! `i^2 = -beta*i - alpha`. Whenever `4*alpha - beta^2 > 0` every nonzero
//! element is invertible and `sqrt(x^2 - beta*x*y + alpha*y^2)` is a
//! multiplicative norm. `(alpha, beta) = (1, 0)` recovers the ordinary
//! complex numbers.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An element `x + iy` of the algebra. The component pair is parameter-free;
/// products, inverses and norms take the [`AlgebraParams`] they are relative to.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
pub struct ElComplex {
    pub re: f64,
    pub im: f64,
}

impl ElComplex {
    pub const ZERO: ElComplex = ElComplex { re: 0.0, im: 0.0 };
    pub const ONE: ElComplex = ElComplex { re: 1.0, im: 0.0 };
    /// The imaginary unit of the algebra (whatever the parameters).
    pub const I: ElComplex = ElComplex { re: 0.0, im: 1.0 };

    pub const fn new(re: f64, im: f64) -> Self {
        ElComplex { re, im }
    }

    /// Conjugation `x + iy -> x - iy`.
    pub fn conj(self) -> Self {
        ElComplex::new(self.re, -self.im)
    }

    /// The tilde map `x + iy -> y - ix`, the coordinate annihilated by the
    /// generalized Cauchy-Riemann operator. For `(1, 0)` this is `z / i`.
    pub fn tilde(self) -> Self {
        ElComplex::new(self.im, -self.re)
    }

    /// Inverse of [`tilde`](Self::tilde): `a + ib -> -b + ia`.
    pub fn untilde(self) -> Self {
        ElComplex::new(-self.im, self.re)
    }

    /// Product in the algebra:
    /// `(x1 + iy1)(x2 + iy2) = (x1*x2 - alpha*y1*y2) + i(x1*y2 + y1*x2 - beta*y1*y2)`.
    ///
    /// The `y1*y2` products are grouped so the evaluation is bitwise
    /// symmetric in its two arguments.
    pub fn mul(self, rhs: ElComplex, p: &AlgebraParams) -> ElComplex {
        let imim = self.im * rhs.im;
        ElComplex::new(
            self.re * rhs.re - p.alpha() * imim,
            self.re * rhs.im + self.im * rhs.re - p.beta() * imim,
        )
    }

    /// Multiplicative inverse `(x - beta*y - iy) / (x^2 - beta*x*y + alpha*y^2)`.
    ///
    /// Only the exact zero element is rejected; near-zero inputs yield large
    /// components and overflow policing is left to the caller.
    pub fn inv(self, p: &AlgebraParams) -> Result<ElComplex> {
        if self.re == 0.0 && self.im == 0.0 {
            return Err(Error::DivisionByZero);
        }
        let d = self.norm_sq(p);
        Ok(ElComplex::new(
            (self.re - p.beta() * self.im) / d,
            -self.im / d,
        ))
    }

    /// The quadratic form `x^2 - beta*x*y + alpha*y^2` (squared norm).
    pub fn norm_sq(self, p: &AlgebraParams) -> f64 {
        self.re * self.re - p.beta() * self.re * self.im + p.alpha() * self.im * self.im
    }

    /// The multiplicative norm `sqrt(x^2 - beta*x*y + alpha*y^2)`.
    pub fn norm(self, p: &AlgebraParams) -> f64 {
        self.norm_sq(p).sqrt()
    }

    /// Euclidean norm, i.e. the `(1, 0)` norm. Errors of all verification
    /// checks are reported in this norm.
    pub fn norm_euclid(self) -> f64 {
        self.re.hypot(self.im)
    }

    /// Real inner product with `<z, z> = norm_sq(z)`:
    /// `1/2 * (w*(conj z - beta*Im z) + (conj w - beta*Im w)*z)`.
    ///
    /// The imaginary part of that expression cancels identically; this
    /// returns the real part and debug-asserts the cancellation.
    pub fn inner(self, rhs: ElComplex, p: &AlgebraParams) -> f64 {
        let zt = ElComplex::new(self.re - p.beta() * self.im, -self.im);
        let wt = ElComplex::new(rhs.re - p.beta() * rhs.im, -rhs.im);
        let s = rhs.mul(zt, p) + wt.mul(self, p);
        debug_assert!(
            s.im.abs() <= 1e-12 * (1.0 + s.re.abs()),
            "imaginary part of the inner-product expression failed to cancel: {}",
            s.im
        );
        0.5 * s.re
    }

    /// Componentwise scaling by a real number.
    pub fn scale(self, s: f64) -> ElComplex {
        ElComplex::new(self.re * s, self.im * s)
    }

    pub fn is_finite(self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }
}

impl Add for ElComplex {
    type Output = ElComplex;
    fn add(self, rhs: ElComplex) -> ElComplex {
        ElComplex::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl AddAssign for ElComplex {
    fn add_assign(&mut self, rhs: ElComplex) {
        *self = *self + rhs;
    }
}

impl Sub for ElComplex {
    type Output = ElComplex;
    fn sub(self, rhs: ElComplex) -> ElComplex {
        ElComplex::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl SubAssign for ElComplex {
    fn sub_assign(&mut self, rhs: ElComplex) {
        *self = *self - rhs;
    }
}

impl Neg for ElComplex {
    type Output = ElComplex;
    fn neg(self) -> ElComplex {
        ElComplex::new(-self.re, -self.im)
    }
}

impl Mul<f64> for ElComplex {
    type Output = ElComplex;
    fn mul(self, s: f64) -> ElComplex {
        self.scale(s)
    }
}

impl Mul<ElComplex> for f64 {
    type Output = ElComplex;
    fn mul(self, z: ElComplex) -> ElComplex {
        z.scale(self)
    }
}

impl fmt::Display for ElComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im < 0.0 {
            write!(f, "{}-{}i", self.re, -self.im)
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}

/// Shadow struct giving [`AlgebraParams`] the wire form `{"alpha":…, "beta":…}`
/// while revalidating ellipticity on deserialization.
#[derive(Serialize, Deserialize)]
struct ParamsDef {
    alpha: f64,
    beta: f64,
}

/// A validated parameter pair `(alpha, beta)` with `4*alpha - beta^2 > 0`,
/// together with cached derived constants.
///
/// * `i_hat` — `(beta + 2i) / sqrt(4*alpha - beta^2)`, an algebra square root
///   of -1 and the value of the normalized kernel winding integral.
/// * `k1`, `k2` — tight constants with
///   `k1 * ||z||_(alpha,beta) <= ||z||_(1,0) <= k2 * ||z||_(alpha,beta)`,
///   computed from the extremal eigenvalues of the quadratic form.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "ParamsDef", into = "ParamsDef")]
pub struct AlgebraParams {
    alpha: f64,
    beta: f64,
    discriminant: f64,
    i_hat: ElComplex,
    k1: f64,
    k2: f64,
}

impl AlgebraParams {
    pub fn new(alpha: f64, beta: f64) -> Result<Self> {
        if !alpha.is_finite() || !beta.is_finite() {
            return Err(Error::NonFiniteInput {
                what: "algebra parameters must be finite",
            });
        }
        let discriminant = 4.0 * alpha - beta * beta;
        if discriminant <= 0.0 {
            return Err(Error::EllipticityViolation {
                alpha,
                beta,
                discriminant,
            });
        }
        let s = discriminant.sqrt();
        let i_hat = ElComplex::new(beta / s, 2.0 / s);

        // Eigenvalues of Q = [[1, -beta/2], [-beta/2, alpha]], the matrix of
        // the squared norm. lambda_min via det(Q)/lambda_max to dodge the
        // cancellation in the explicit formula.
        let half_trace = 0.5 * (1.0 + alpha);
        let radius = 0.5 * ((1.0 - alpha) * (1.0 - alpha) + beta * beta).sqrt();
        let lambda_max = half_trace + radius;
        let lambda_min = (discriminant / 4.0) / lambda_max;

        Ok(AlgebraParams {
            alpha,
            beta,
            discriminant,
            i_hat,
            k1: 1.0 / lambda_max.sqrt(),
            k2: 1.0 / lambda_min.sqrt(),
        })
    }

    /// The ordinary complex numbers, `(alpha, beta) = (1, 0)`.
    pub fn classical() -> Self {
        AlgebraParams::new(1.0, 0.0).expect("(1, 0) is elliptic")
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    /// `4*alpha - beta^2`, guaranteed positive.
    pub fn discriminant(&self) -> f64 {
        self.discriminant
    }

    /// `(beta + 2i) / sqrt(4*alpha - beta^2)`; satisfies `i_hat^2 = -1`.
    pub fn i_hat(&self) -> ElComplex {
        self.i_hat
    }

    pub fn k1(&self) -> f64 {
        self.k1
    }

    pub fn k2(&self) -> f64 {
        self.k2
    }

    /// The norm-equivalence pair `(k1, k2)`: for every `z != 0`,
    /// `k1 <= ||z||_(1,0) / ||z||_(alpha,beta) <= k2`, both bounds attained
    /// along the eigenvector directions of the quadratic form.
    pub fn equivalence_ratio_bounds(&self) -> (f64, f64) {
        (self.k1, self.k2)
    }
}

impl TryFrom<ParamsDef> for AlgebraParams {
    type Error = Error;
    fn try_from(d: ParamsDef) -> Result<Self> {
        AlgebraParams::new(d.alpha, d.beta)
    }
}

impl From<AlgebraParams> for ParamsDef {
    fn from(p: AlgebraParams) -> ParamsDef {
        ParamsDef {
            alpha: p.alpha,
            beta: p.beta,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> ElComplex {
        ElComplex::new(re, im)
    }

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol * (1.0 + a.abs().max(b.abs()))
    }

    #[test]
    fn classical_params() {
        let p = AlgebraParams::new(1.0, 0.0).unwrap();
        assert_eq!(p.discriminant(), 4.0);
        assert_eq!(p.i_hat(), c(0.0, 1.0));
        assert_eq!(p.equivalence_ratio_bounds(), (1.0, 1.0));
    }

    #[test]
    fn ellipticity_boundary_rejected() {
        match AlgebraParams::new(1.0, 2.0) {
            Err(Error::EllipticityViolation { discriminant, .. }) => {
                assert_eq!(discriminant, 0.0)
            }
            other => panic!("expected ellipticity violation, got {other:?}"),
        }
        assert!(AlgebraParams::new(-1.0, 0.0).is_err());
        assert!(AlgebraParams::new(f64::NAN, 0.0).is_err());
    }

    #[test]
    fn params_2_2() {
        // i_hat = (2 + 2i)/sqrt(4) = 1 + i
        let p = AlgebraParams::new(2.0, 2.0).unwrap();
        assert_eq!(p.discriminant(), 4.0);
        assert!((p.i_hat().re - 1.0).abs() < 1e-15);
        assert!((p.i_hat().im - 1.0).abs() < 1e-15);
    }

    #[test]
    fn mul_identity_and_structure() {
        let p = AlgebraParams::new(2.0, 1.0).unwrap();
        let z = c(3.2, -1.7);
        assert_eq!(ElComplex::ONE.mul(z, &p), z);
        // i*i = -beta*i - alpha
        let ii = ElComplex::I.mul(ElComplex::I, &p);
        assert!((ii.re - -2.0).abs() < 1e-15);
        assert!((ii.im - -1.0).abs() < 1e-15);
    }

    #[test]
    fn mul_classical() {
        let p = AlgebraParams::classical();
        let prod = c(1.0, 1.0).mul(c(1.0, -1.0), &p);
        assert_eq!(prod, c(2.0, 0.0));
    }

    #[test]
    fn inv_examples() {
        let p10 = AlgebraParams::classical();
        for p in [p10, AlgebraParams::new(5.0, 3.0).unwrap()] {
            assert_eq!(ElComplex::ONE.inv(&p).unwrap(), ElComplex::ONE);
        }
        assert_eq!(c(1.0, 1.0).inv(&p10).unwrap(), c(0.5, -0.5));

        // alpha=2, beta=2: denominator 1 - 2 + 2 = 1, numerator 1 - 2 - i
        let p22 = AlgebraParams::new(2.0, 2.0).unwrap();
        let z = c(1.0, 1.0);
        let zi = z.inv(&p22).unwrap();
        assert_eq!(zi, c(-1.0, -1.0));
        let round = z.mul(zi, &p22);
        assert!(close(round.re, 1.0, 1e-14) && round.im.abs() < 1e-14);

        assert_eq!(ElComplex::ZERO.inv(&p10), Err(Error::DivisionByZero));
    }

    #[test]
    fn conj_and_tilde() {
        assert_eq!(ElComplex::ZERO.conj(), ElComplex::ZERO);
        assert_eq!(c(3.0, 4.0).conj(), c(3.0, -4.0));
        assert_eq!(c(3.0, 4.0).conj().conj(), c(3.0, 4.0));

        assert_eq!(ElComplex::ZERO.tilde(), ElComplex::ZERO);
        assert_eq!(c(3.0, 4.0).tilde(), c(4.0, -3.0));
        assert_eq!(c(3.0, 4.0).tilde().untilde(), c(3.0, 4.0));
    }

    #[test]
    fn tilde_is_division_by_i_classically() {
        let p = AlgebraParams::classical();
        let i_inv = ElComplex::I.inv(&p).unwrap();
        for k in 0..64 {
            let z = c((k as f64) * 0.37 - 11.0, (k as f64) * 0.61 - 19.0);
            let via_mul = z.mul(i_inv, &p);
            let t = z.tilde();
            assert!((via_mul.re - t.re).abs() < 1e-14 * (1.0 + t.norm_euclid()));
            assert!((via_mul.im - t.im).abs() < 1e-14 * (1.0 + t.norm_euclid()));
        }
    }

    #[test]
    fn norm_examples() {
        let p10 = AlgebraParams::classical();
        assert_eq!(c(3.0, 4.0).norm(&p10), 5.0);
        assert_eq!(ElComplex::ZERO.norm(&p10), 0.0);
        let p22 = AlgebraParams::new(2.0, 2.0).unwrap();
        assert!((c(1.0, 1.0).norm(&p22) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn inner_examples() {
        let p10 = AlgebraParams::classical();
        assert_eq!(ElComplex::ONE.inner(ElComplex::I, &p10), 0.0);
        let p22 = AlgebraParams::new(2.0, 2.0).unwrap();
        assert!((c(1.0, 1.0).inner(c(1.0, 1.0), &p22) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn inner_imaginary_part_cancels() {
        // Recompute the defining expression with public ops and check its
        // imaginary part directly.
        let p = AlgebraParams::new(3.0, -1.5).unwrap();
        for k in 0..128 {
            let z = c((k as f64).sin() * 7.0, (k as f64).cos() * 5.0);
            let w = c((k as f64 * 1.3).sin() * 4.0, (k as f64 * 0.7).cos() * 9.0);
            let zt = ElComplex::new(z.re - p.beta() * z.im, -z.im);
            let wt = ElComplex::new(w.re - p.beta() * w.im, -w.im);
            let s = w.mul(zt, &p) + wt.mul(z, &p);
            assert!(s.im.abs() <= 1e-12 * (1.0 + s.re.abs()));
            assert!(close(0.5 * s.re, z.inner(w, &p), 1e-15));
        }
    }

    #[test]
    fn equivalence_bounds_diag_form() {
        // (4, 0): quadratic form x^2 + 4y^2, eigenvalues {1, 4}.
        let p = AlgebraParams::new(4.0, 0.0).unwrap();
        let (k1, k2) = p.equivalence_ratio_bounds();
        assert!((k1 - 0.5).abs() < 1e-15);
        assert!((k2 - 1.0).abs() < 1e-15);
        // attainment along the eigenvector directions
        let ratio_i = ElComplex::I.norm_euclid() / ElComplex::I.norm(&p);
        let ratio_1 = ElComplex::ONE.norm_euclid() / ElComplex::ONE.norm(&p);
        assert!((ratio_i - k1).abs() < 1e-15);
        assert!((ratio_1 - k2).abs() < 1e-15);
    }

    #[test]
    fn equivalence_bounds_attained_generic() {
        let p = AlgebraParams::new(5.0, 3.0).unwrap();
        let (k1, k2) = p.equivalence_ratio_bounds();
        // eigenvectors of [[1, -b/2], [-b/2, a]] for eigenvalue l: (-b/2, l - 1)
        let half_trace = 0.5 * (1.0 + p.alpha());
        let radius = 0.5 * ((1.0 - p.alpha()).powi(2) + p.beta().powi(2)).sqrt();
        for (lambda, bound) in [(half_trace + radius, k1), (half_trace - radius, k2)] {
            let v = c(-p.beta() / 2.0, lambda - 1.0);
            let ratio = v.norm_euclid() / v.norm(&p);
            assert!(close(ratio, bound, 1e-12), "ratio {ratio} vs bound {bound}");
        }
    }

    #[test]
    fn serde_wire_forms() {
        let z = c(1.5, -2.0);
        assert_eq!(
            serde_json::to_string(&z).unwrap(),
            r#"{"re":1.5,"im":-2.0}"#
        );
        let p: AlgebraParams = serde_json::from_str(r#"{"alpha":2.0,"beta":1.0}"#).unwrap();
        assert_eq!(p.alpha(), 2.0);
        assert_eq!(
            serde_json::to_string(&p).unwrap(),
            r#"{"alpha":2.0,"beta":1.0}"#
        );
        assert!(serde_json::from_str::<AlgebraParams>(r#"{"alpha":1.0,"beta":2.0}"#).is_err());
    }

    prop_compose! {
        fn arb_params()(alpha in 0.05f64..20.0, frac in -0.98f64..0.98) -> AlgebraParams {
            let beta = frac * 2.0 * alpha.sqrt();
            AlgebraParams::new(alpha, beta).unwrap()
        }
    }

    prop_compose! {
        fn arb_z()(re in -50.0f64..50.0, im in -50.0f64..50.0) -> ElComplex {
            ElComplex::new(re, im)
        }
    }

    proptest! {
        #[test]
        fn norm_is_multiplicative(p in arb_params(), z in arb_z(), w in arb_z()) {
            let lhs = z.mul(w, &p).norm(&p);
            let rhs = z.norm(&p) * w.norm(&p);
            prop_assert!((lhs - rhs).abs() <= 1e-12 * (1.0 + rhs));
        }

        #[test]
        fn inverse_norm(p in arb_params(), z in arb_z()) {
            prop_assume!(z.norm_euclid() > 1e-6);
            let lhs = z.inv(&p).unwrap().norm(&p);
            let rhs = 1.0 / z.norm(&p);
            prop_assert!((lhs - rhs).abs() <= 1e-12 * (1.0 + rhs));
        }

        #[test]
        fn i_hat_squares_to_minus_one(p in arb_params()) {
            let sq = p.i_hat().mul(p.i_hat(), &p);
            prop_assert!((sq.re + 1.0).abs() <= 1e-12);
            prop_assert!(sq.im.abs() <= 1e-12);
        }

        #[test]
        fn structure_relation(p in arb_params()) {
            let ii = ElComplex::I.mul(ElComplex::I, &p);
            prop_assert!((ii.re + p.alpha()).abs() <= 1e-15 * (1.0 + p.alpha().abs()));
            prop_assert!((ii.im + p.beta()).abs() <= 1e-15 * (1.0 + p.beta().abs()));
        }

        #[test]
        fn mul_inv_roundtrip(p in arb_params(), z in arb_z(), scale in -6.0f64..6.0) {
            // exercise magnitudes across [1e-6, 1e6]
            let z = z.scale(10f64.powf(scale));
            prop_assume!(z.norm_euclid() > 0.0);
            let r = z.mul(z.inv(&p).unwrap(), &p);
            prop_assert!((r.re - 1.0).abs() <= 1e-10);
            prop_assert!(r.im.abs() <= 1e-10);
        }

        #[test]
        fn ring_axioms(p in arb_params(), a in arb_z(), b in arb_z(), c in arb_z()) {
            let scale = 1.0 + a.norm_euclid() * b.norm_euclid() * c.norm_euclid();
            let assoc = a.mul(b, &p).mul(c, &p) - a.mul(b.mul(c, &p), &p);
            prop_assert!(assoc.norm_euclid() <= 1e-12 * scale);
            let comm = a.mul(b, &p) - b.mul(a, &p);
            prop_assert!(comm.norm_euclid() == 0.0);
            let dist = a.mul(b + c, &p) - (a.mul(b, &p) + a.mul(c, &p));
            prop_assert!(dist.norm_euclid() <= 1e-12 * scale);
        }

        #[test]
        fn tilde_is_additive(a in arb_z(), b in arb_z()) {
            prop_assert_eq!((a + b).tilde(), a.tilde() + b.tilde());
        }

        #[test]
        fn norm_sandwich(p in arb_params(), z in arb_z()) {
            prop_assume!(z.norm_euclid() > 1e-9);
            let ratio = z.norm_euclid() / z.norm(&p);
            let (k1, k2) = p.equivalence_ratio_bounds();
            prop_assert!(ratio >= k1 * (1.0 - 1e-12));
            prop_assert!(ratio <= k2 * (1.0 + 1e-12));
        }

        #[test]
        fn inner_matches_norm(p in arb_params(), z in arb_z()) {
            let lhs = z.inner(z, &p);
            let rhs = z.norm_sq(&p);
            prop_assert!((lhs - rhs).abs() <= 1e-12 * (1.0 + rhs.abs()));
        }
    }
}
