//! First-order jets of algebra-valued functions and the generalized
//! Cauchy-Riemann operator `d/dzbar = 1/2 (d/dx + i d/dy)`.
//!
//! Functions whose jet is annihilated by the operator are the holomorphic
//! ones relative to the parameter pair. The built-in catalog carries exact
//! closed-form jets; finite differencing exists only as a test oracle.

use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraParams, ElComplex};
use crate::error::{Error, Result};

/// Value and both first-order partials of an algebra-valued function at a
/// point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Jet {
    pub value: ElComplex,
    /// Partial derivative in the x-direction.
    pub dx: ElComplex,
    /// Partial derivative in the y-direction.
    pub dy: ElComplex,
}

impl std::ops::Add for Jet {
    type Output = Jet;
    fn add(self, rhs: Jet) -> Jet {
        Jet {
            value: self.value + rhs.value,
            dx: self.dx + rhs.dx,
            dy: self.dy + rhs.dy,
        }
    }
}

impl Jet {
    pub fn constant(c: ElComplex) -> Jet {
        Jet {
            value: c,
            dx: ElComplex::ZERO,
            dy: ElComplex::ZERO,
        }
    }

    pub fn scale(self, s: f64) -> Jet {
        Jet {
            value: self.value.scale(s),
            dx: self.dx.scale(s),
            dy: self.dy.scale(s),
        }
    }

    /// Bilinear product rule: `(fg)' = f'g + fg'` componentwise in x and y.
    pub fn mul(self, rhs: Jet, p: &AlgebraParams) -> Jet {
        Jet {
            value: self.value.mul(rhs.value, p),
            dx: self.dx.mul(rhs.value, p) + self.value.mul(rhs.dx, p),
            dy: self.dy.mul(rhs.value, p) + self.value.mul(rhs.dy, p),
        }
    }

    /// Jet of the multiplicative inverse; `(1/f)' = -f'/f^2` (the algebra is
    /// commutative).
    pub fn inv(self, p: &AlgebraParams) -> Result<Jet> {
        let vi = self.value.inv(p)?;
        let vi2 = vi.mul(vi, p);
        Ok(Jet {
            value: vi,
            dx: -self.dx.mul(vi2, p),
            dy: -self.dy.mul(vi2, p),
        })
    }
}

/// Applies the generalized Cauchy-Riemann operator to a jet:
/// `1/2 (dx + i*dy)` with the algebra's product.
pub fn cr_apply(j: &Jet, p: &AlgebraParams) -> ElComplex {
    (j.dx + ElComplex::I.mul(j.dy, p)).scale(0.5)
}

/// The two real residuals of the generalized Cauchy-Riemann system,
/// `1/2 (du/dx - alpha dv/dy)` and `1/2 (du/dy + dv/dx - beta dv/dy)`,
/// computed from the real partials directly. Both vanish iff
/// [`cr_apply`] vanishes; the two routes agree to roundoff.
pub fn cr_system_residual(j: &Jet, p: &AlgebraParams) -> (f64, f64) {
    let r1 = 0.5 * (j.dx.re - p.alpha() * j.dy.im);
    let r2 = 0.5 * (j.dy.re + j.dx.im - p.beta() * j.dy.im);
    (r1, r2)
}

/// Identifier for the built-in smooth non-holomorphic functions, each with a
/// hand-derived closed-form image under the Cauchy-Riemann operator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NonHoloId {
    /// `f(z) = z`; holomorphic only in the classical algebra.
    Identity,
    /// `f(z) = conj(z)`.
    Conj,
    /// `f(x + iy) = x^2 + iy`.
    ParabolaMix,
}

/// The built-in catalog of test functions with exact jets.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum TestFunction {
    /// Constant map.
    Constant { c: ElComplex },
    /// `tilde(z)^n`, holomorphic for every parameter pair.
    TildePower { n: u32 },
    /// `tilde(z - pole)^(-1)`, holomorphic away from its pole.
    Kernel { pole: ElComplex },
    /// Smooth functions with nonzero, exactly known Cauchy-Riemann image.
    SmoothNonHolo { id: NonHoloId },
    /// Real-coefficient bivariate polynomials per component:
    /// `u[i][j]` is the coefficient of `x^i y^j` in the real part.
    Poly { u: Vec<Vec<f64>>, v: Vec<Vec<f64>> },
}

fn poly_value(c: &[Vec<f64>], x: f64, y: f64) -> f64 {
    // Horner in x, inner Horner in y.
    let mut acc = 0.0;
    for row in c.iter().rev() {
        let mut inner = 0.0;
        for &cij in row.iter().rev() {
            inner = inner * y + cij;
        }
        acc = acc * x + inner;
    }
    acc
}

fn poly_shift_x(c: &[Vec<f64>]) -> Vec<Vec<f64>> {
    if c.len() <= 1 {
        return vec![vec![0.0]];
    }
    c[1..]
        .iter()
        .enumerate()
        .map(|(i, row)| row.iter().map(|&cij| (i as f64 + 1.0) * cij).collect())
        .collect()
}

fn poly_shift_y(c: &[Vec<f64>]) -> Vec<Vec<f64>> {
    c.iter()
        .map(|row| {
            if row.len() <= 1 {
                vec![0.0]
            } else {
                row[1..]
                    .iter()
                    .enumerate()
                    .map(|(j, &cij)| (j as f64 + 1.0) * cij)
                    .collect()
            }
        })
        .collect()
}

impl TestFunction {
    pub fn constant(c: ElComplex) -> Self {
        TestFunction::Constant { c }
    }

    pub fn tilde_power(n: u32) -> Self {
        TestFunction::TildePower { n }
    }

    pub fn kernel(pole: ElComplex) -> Self {
        TestFunction::Kernel { pole }
    }

    pub fn identity() -> Self {
        TestFunction::SmoothNonHolo {
            id: NonHoloId::Identity,
        }
    }

    pub fn conj_fn() -> Self {
        TestFunction::SmoothNonHolo {
            id: NonHoloId::Conj,
        }
    }

    pub fn parabola_mix() -> Self {
        TestFunction::SmoothNonHolo {
            id: NonHoloId::ParabolaMix,
        }
    }

    /// Whether evaluation consults the algebra parameters at all.
    pub fn needs_params(&self) -> bool {
        match self {
            TestFunction::Constant { .. } | TestFunction::SmoothNonHolo { .. } => false,
            TestFunction::TildePower { n } => *n >= 2,
            TestFunction::Kernel { .. } => true,
            TestFunction::Poly { .. } => false,
        }
    }

    /// Short stable name used in report labels.
    pub fn label(&self) -> String {
        match self {
            TestFunction::Constant { .. } => "constant".into(),
            TestFunction::TildePower { n } => format!("tilde_power({n})"),
            TestFunction::Kernel { .. } => "kernel".into(),
            TestFunction::SmoothNonHolo { id } => match id {
                NonHoloId::Identity => "identity".into(),
                NonHoloId::Conj => "conj".into(),
                NonHoloId::ParabolaMix => "parabola_mix".into(),
            },
            TestFunction::Poly { .. } => "poly".into(),
        }
    }

    /// Exact value and partials at a point.
    pub fn eval_jet(&self, at: ElComplex, p: &AlgebraParams) -> Result<Jet> {
        match self {
            TestFunction::Constant { c } => Ok(Jet::constant(*c)),
            TestFunction::TildePower { n } => {
                let base = Jet {
                    value: at.tilde(),
                    dx: -ElComplex::I,
                    dy: ElComplex::ONE,
                };
                let mut acc = Jet::constant(ElComplex::ONE);
                for _ in 0..*n {
                    acc = acc.mul(base, p);
                }
                Ok(acc)
            }
            TestFunction::Kernel { pole } => {
                let w = at - *pole;
                if w.re == 0.0 && w.im == 0.0 {
                    return Err(Error::PoleEvaluation {
                        re: pole.re,
                        im: pole.im,
                    });
                }
                Jet {
                    value: w.tilde(),
                    dx: -ElComplex::I,
                    dy: ElComplex::ONE,
                }
                .inv(p)
            }
            TestFunction::SmoothNonHolo { id } => Ok(match id {
                NonHoloId::Identity => Jet {
                    value: at,
                    dx: ElComplex::ONE,
                    dy: ElComplex::I,
                },
                NonHoloId::Conj => Jet {
                    value: at.conj(),
                    dx: ElComplex::ONE,
                    dy: -ElComplex::I,
                },
                NonHoloId::ParabolaMix => Jet {
                    value: ElComplex::new(at.re * at.re, at.im),
                    dx: ElComplex::new(2.0 * at.re, 0.0),
                    dy: ElComplex::I,
                },
            }),
            TestFunction::Poly { u, v } => {
                let (x, y) = (at.re, at.im);
                let value = ElComplex::new(poly_value(u, x, y), poly_value(v, x, y));
                let dx = ElComplex::new(
                    poly_value(&poly_shift_x(u), x, y),
                    poly_value(&poly_shift_x(v), x, y),
                );
                let dy = ElComplex::new(
                    poly_value(&poly_shift_y(u), x, y),
                    poly_value(&poly_shift_y(v), x, y),
                );
                Ok(Jet { value, dx, dy })
            }
        }
    }

    /// Value only.
    pub fn eval(&self, at: ElComplex, p: &AlgebraParams) -> Result<ElComplex> {
        Ok(self.eval_jet(at, p)?.value)
    }

    /// Hand-derived Cauchy-Riemann image for the non-holomorphic built-ins,
    /// kept separate from the jet path so tests can compare the two routes.
    pub fn closed_form_dbar(&self, at: ElComplex, p: &AlgebraParams) -> Option<ElComplex> {
        match self {
            TestFunction::SmoothNonHolo { id } => Some(match id {
                NonHoloId::Identity => ElComplex::new(0.5 * (1.0 - p.alpha()), -0.5 * p.beta()),
                NonHoloId::Conj => ElComplex::new(0.5 * (1.0 + p.alpha()), 0.5 * p.beta()),
                NonHoloId::ParabolaMix => ElComplex::new(at.re - 0.5 * p.alpha(), -0.5 * p.beta()),
            }),
            _ => None,
        }
    }
}
