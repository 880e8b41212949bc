//! Reconstructs f(zeta) = zeta from the two-term representation formula in
//! a non-classical algebra and prints the error.

use elcomplex::{verify, AlgebraParams, ElComplex, QuadratureSpec, StarDomain, TestFunction};

fn main() {
    let params = AlgebraParams::new(2.0, 1.0).expect("elliptic");
    let domain = StarDomain::disk(ElComplex::ZERO, 1.0);
    let zeta = ElComplex::new(0.2, 0.1);
    let spec = QuadratureSpec::default();

    // f(z) = z is not holomorphic for (2, 1), so both the boundary and the
    // area term contribute.
    let f = TestFunction::identity();
    let report = verify::cauchy_pompeiu(&f, &domain, zeta, &params, spec).expect("interior pole");

    println!(
        "reconstructed {}  direct {}  error {:.3e}",
        report.computed, report.reference, report.abs_error
    );
    assert!(report.passed);
}
