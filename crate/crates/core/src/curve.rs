//! Affine curve presentations and rational points.
//!
//! A curve is presented by its ambient polynomial ring together with a
//! defining ideal of Krull dimension 1. The engine does not certify absence
//! of embedded points or geometric reducedness; those hypotheses are the
//! responsibility of whoever writes the presentation.

use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::poly::{same_ring, Poly, PolyRing};
use crate::scalar::Scalar;
use std::fmt;
use std::sync::Arc;

#[derive(Debug)]
struct CurveData {
    name: String,
    ring: Arc<PolyRing>,
    defining: Ideal,
}

/// A validated affine curve presentation. Cheap to clone and share.
#[derive(Debug, Clone)]
pub struct Curve(Arc<CurveData>);

impl Curve {
    /// Validates dimension 1 and non-triviality, then builds the presentation.
    pub fn validate(name: &str, ring: &Arc<PolyRing>, gens: Vec<Poly>) -> Result<Curve> {
        let defining = Ideal::new(ring, gens);
        match defining.krull_dim() {
            None => return Err(Error::UnitIdeal),
            Some(1) => {}
            Some(d) => {
                return Err(Error::DimensionNotOne {
                    found: d.to_string(),
                })
            }
        }
        Ok(Curve(Arc::new(CurveData {
            name: name.to_string(),
            ring: ring.clone(),
            defining,
        })))
    }

    pub fn name(&self) -> &str {
        &self.0.name
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.0.ring
    }

    /// The defining ideal of the curve in its ambient ring.
    pub fn defining_ideal(&self) -> &Ideal {
        &self.0.defining
    }

    /// Two curve values present the same curve when their rings and canonical
    /// defining bases agree.
    pub fn same_curve(&self, other: &Curve) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (same_ring(self.ring(), other.ring())
                && self
                    .defining_ideal()
                    .equal(other.defining_ideal())
                    .unwrap_or(false))
    }

    /// True when multiplication by `f` is injective on the coordinate ring.
    pub fn is_nonzerodivisor(&self, f: &Poly) -> bool {
        self.defining_ideal().is_nonzerodivisor(f)
    }

    /// Validates the coordinates and builds the rational point.
    pub fn point(&self, coords: Vec<Scalar>) -> Result<RationalPoint> {
        let ring = self.ring();
        if coords.len() != ring.nvars() {
            return Err(Error::CoordinateCount {
                given: coords.len(),
                expected: ring.nvars(),
            });
        }
        for g in self.defining_ideal().generators() {
            let value = g.eval(&coords);
            if !value.is_zero() {
                return Err(Error::PointNotOnCurve {
                    generator: g.to_string(),
                    value: value.to_string(),
                });
            }
        }
        let gens = coords
            .iter()
            .enumerate()
            .map(|(i, a)| {
                Poly::var(ring, i)
                    .sub(&Poly::constant(ring, a.clone()))
                    .expect("same ring")
            })
            .collect();
        Ok(RationalPoint {
            curve: self.clone(),
            coords,
            max_ideal: Ideal::new(ring, gens),
        })
    }
}

impl fmt::Display for Curve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.name)
    }
}

/// A rational point of a curve with its maximal ideal `(v_1 - a_1, ...)`.
#[derive(Debug, Clone)]
pub struct RationalPoint {
    curve: Curve,
    coords: Vec<Scalar>,
    max_ideal: Ideal,
}

impl RationalPoint {
    pub fn curve(&self) -> &Curve {
        &self.curve
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn max_ideal(&self) -> &Ideal {
        &self.max_ideal
    }
}

impl fmt::Display for RationalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;
    use crate::scalar::Field;

    fn qring(vars: &[&str]) -> Arc<PolyRing> {
        PolyRing::new(vars.iter().map(|s| s.to_string()).collect(), Field::Rational)
    }

    fn tacnode() -> Curve {
        let r = qring(&["x", "y"]);
        Curve::validate("X", &r, vec![parse_poly("y^2 - x^4", &r).unwrap()]).unwrap()
    }

    #[test]
    fn accepts_bundled_presentations() {
        tacnode();
        let line = qring(&["s"]);
        Curve::validate("A1", &line, vec![]).unwrap();
        let st = qring(&["s", "t"]);
        Curve::validate("Y", &st, vec![parse_poly("t^2 - s^2", &st).unwrap()]).unwrap();
        let e = qring(&["x", "y"]);
        Curve::validate("E", &e, vec![parse_poly("y^2 - x^3 + x", &e).unwrap()]).unwrap();
    }

    #[test]
    fn rejects_wrong_dimension_and_unit_ideal() {
        let r = qring(&["x", "y"]);
        let gens = vec![
            parse_poly("x", &r).unwrap(),
            parse_poly("y", &r).unwrap(),
        ];
        assert!(matches!(
            Curve::validate("pt", &r, gens),
            Err(Error::DimensionNotOne { .. })
        ));
        assert!(matches!(
            Curve::validate("bad", &r, vec![parse_poly("1", &r).unwrap()]),
            Err(Error::UnitIdeal)
        ));
    }

    #[test]
    fn point_validation() {
        let x = tacnode();
        let f = Field::Rational;
        let origin = x.point(vec![f.from_i64(0), f.from_i64(0)]).unwrap();
        let r = x.ring().clone();
        let expected = Ideal::new(
            &r,
            vec![
                parse_poly("x", &r).unwrap(),
                parse_poly("y", &r).unwrap(),
            ],
        );
        assert!(origin.max_ideal().equal(&expected).unwrap());

        assert!(x.point(vec![f.from_i64(1), f.from_i64(1)]).is_ok());
        assert!(matches!(
            x.point(vec![f.from_i64(1), f.from_i64(2)]),
            Err(Error::PointNotOnCurve { .. })
        ));
    }

    #[test]
    fn residue_field_of_a_point_is_one_dimensional() {
        let x = tacnode();
        let f = Field::Rational;
        for coords in [[0, 0], [1, 1], [-1, 1], [2, 4]] {
            let p = x
                .point(coords.iter().map(|&c| f.from_i64(c)).collect())
                .unwrap();
            let total = x.defining_ideal().plus(p.max_ideal());
            assert_eq!(total.quotient_dim(), Some(1));
        }
    }
}
