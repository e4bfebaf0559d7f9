//! Shared fixtures: the bundled curves and covers.

use gendiv_core::curve::Curve;
use gendiv_core::divisor::EffectiveDivisor;
use gendiv_core::morphism::FiniteMorphism;
use gendiv_core::parse::parse_poly;
use gendiv_core::poly::{Poly, PolyRing};
use gendiv_core::scalar::Field;
use std::sync::Arc;

pub fn qring(vars: &[&str]) -> Arc<PolyRing> {
    PolyRing::new(vars.iter().map(|s| s.to_string()).collect(), Field::Rational)
}

pub fn curve(name: &str, vars: &[&str], gens: &[&str]) -> Curve {
    let r = qring(vars);
    Curve::validate(
        name,
        &r,
        gens.iter().map(|t| parse_poly(t, &r).unwrap()).collect(),
    )
    .unwrap()
}

pub fn p(ring: &Arc<PolyRing>, text: &str) -> Poly {
    parse_poly(text, ring).unwrap()
}

pub fn eff(c: &Curve, gens: &[&str]) -> EffectiveDivisor {
    let r = c.ring().clone();
    let gens: Vec<Poly> = gens.iter().map(|t| p(&r, t)).collect();
    EffectiveDivisor::new(c, &gens).unwrap()
}

/// Tacnode over the node, degree 2: the worked double cover.
pub fn tacnode_cover() -> FiniteMorphism {
    let x = curve("X", &["x", "y"], &["y^2 - x^4"]);
    let y = curve("Y", &["s", "t"], &["t^2 - s^2"]);
    let images = vec![p(x.ring(), "x^2"), p(x.ring(), "y")];
    FiniteMorphism::build(&x, &y, images).unwrap()
}

/// Smooth elliptic chart over the affine line, degree 2.
pub fn elliptic_cover() -> FiniteMorphism {
    let x = curve("E", &["x", "y"], &["y^2 - x^3 + x"]);
    let line = curve("A1", &["s"], &[]);
    FiniteMorphism::build(&x, &line, vec![p(x.ring(), "x")]).unwrap()
}

/// Degree-3 spectral-style cover of the affine line.
pub fn spectral_cover() -> FiniteMorphism {
    let x = curve("S3", &["x", "y"], &["y^3 + x*y + x^2"]);
    let line = curve("A1", &["s"], &[]);
    FiniteMorphism::build(&x, &line, vec![p(x.ring(), "x")]).unwrap()
}

/// Variable-renaming isomorphism of the tacnode, degree 1.
pub fn identity_cover() -> FiniteMorphism {
    let x = curve("X", &["x", "y"], &["y^2 - x^4"]);
    let y = curve("X2", &["u", "v"], &["v^2 - u^4"]);
    let images = vec![p(x.ring(), "x"), p(x.ring(), "y")];
    FiniteMorphism::build(&x, &y, images).unwrap()
}

pub fn all_covers() -> Vec<FiniteMorphism> {
    vec![
        tacnode_cover(),
        elliptic_cover(),
        spectral_cover(),
        identity_cover(),
    ]
}
