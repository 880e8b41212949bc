//! Parameter-dependent elliptic complex algebras and numerical verification
//! of their Cauchy and Cauchy-Pompeiu integral representation formulas.
//!
//! The family is indexed by a real pair `(alpha, beta)` with
//! `4*alpha - beta^2 > 0`; the imaginary unit satisfies
//! `i^2 = -beta*i - alpha` and `(1, 0)` is the ordinary complex plane.
//! [`algebra`] provides the exact arithmetic, [`calculus`] the generalized
//! Cauchy-Riemann operator on exact first-order jets, [`quadrature`] contour
//! and weakly singular area integration, and [`verify`] executable checks of
//! the representation formulas returning structured reports. The `elcx`
//! binary in [`cli`] drives everything from the command line.

pub mod algebra;
pub mod calculus;
pub mod cli;
pub mod error;
pub mod quadrature;
pub mod verify;

pub use algebra::{AlgebraParams, ElComplex};
pub use calculus::{cr_apply, cr_system_residual, Jet, TestFunction};
pub use error::{Error, Result};
pub use quadrature::{
    alg_ellipse_curve, area_integral, contour_integral, singular_area_integral, Curve,
    QuadratureSpec, StarDomain,
};
pub use verify::{CheckKind, VerificationReport};
