//! Generalized divisors on one affine curve.
//!
//! An effective divisor is a zero-dimensional closed subscheme, held as the
//! ambient ideal that contains the curve's defining ideal. A generalized
//! divisor is a formal difference `plus ⊖ minus` whose minus part is Cartier,
//! and a fractional ideal is the pair `(1/f)·I` with `f` a nonzerodivisor.
//! Generalized divisors carry no canonical form; all equality goes through
//! [`GeneralizedDivisor::equal`], which cross-multiplies the representations.

use crate::curve::{Curve, RationalPoint};
use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::poly::{same_ring, Poly};

/// An effective generalized divisor: a 0-dimensional subscheme of the curve.
#[derive(Debug, Clone)]
pub struct EffectiveDivisor {
    curve: Curve,
    /// Ambient representative; always contains the curve's defining ideal.
    ideal: Ideal,
}

impl EffectiveDivisor {
    /// Validates that the given generators cut out a 0-dimensional subscheme
    /// of the curve (the nondegeneracy condition on a pure 1-dimensional
    /// curve) and returns the divisor.
    pub fn new(curve: &Curve, gens: &[Poly]) -> Result<EffectiveDivisor> {
        for g in gens {
            if !same_ring(g.ring(), curve.ring()) {
                return Err(Error::RingMismatch);
            }
        }
        let ideal = Ideal::new(curve.ring(), gens.to_vec()).plus(curve.defining_ideal());
        if ideal.quotient_dim().is_none() {
            return Err(Error::NotZeroDimensional);
        }
        Ok(EffectiveDivisor {
            curve: curve.clone(),
            ideal,
        })
    }

    /// The zero divisor, cut out by the unit ideal.
    pub fn zero(curve: &Curve) -> EffectiveDivisor {
        EffectiveDivisor::new(curve, &[Poly::one(curve.ring())]).expect("unit ideal is valid")
    }

    pub fn curve(&self) -> &Curve {
        &self.curve
    }

    /// Ambient ideal, containing the curve ideal.
    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn is_zero(&self) -> bool {
        self.ideal.is_unit_ideal()
    }

    /// Total degree: the k-dimension of the global quotient ring. Weights of
    /// non-rational points are absorbed automatically.
    pub fn degree(&self) -> u64 {
        self.ideal
            .quotient_dim()
            .expect("effective divisors have finite quotients")
    }

    /// Degree at a rational point: the length of the local component,
    /// isolated by saturating away everything outside the point.
    pub fn degree_at(&self, point: &RationalPoint) -> Result<u64> {
        if !self.curve.same_curve(point.curve()) {
            return Err(Error::CurveMismatch);
        }
        let total = self.degree();
        let elsewhere = self
            .ideal
            .saturate(point.max_ideal())
            .quotient_dim()
            .ok_or_else(|| Error::Internal("saturation is not zero-dimensional".into()))?;
        Ok(total - elsewhere)
    }

    pub fn ideal_equal(&self, other: &EffectiveDivisor) -> Result<bool> {
        if !self.curve.same_curve(&other.curve) {
            return Err(Error::CurveMismatch);
        }
        self.ideal.equal(&other.ideal)
    }

    /// Sum of effective divisors: the product of their ideals.
    pub fn add(&self, other: &EffectiveDivisor) -> Result<EffectiveDivisor> {
        if !self.curve.same_curve(&other.curve) {
            return Err(Error::CurveMismatch);
        }
        let ideal = self
            .ideal
            .product(&other.ideal)
            .plus(self.curve.defining_ideal());
        Ok(EffectiveDivisor {
            curve: self.curve.clone(),
            ideal,
        })
    }

    pub fn power(&self, n: u32) -> EffectiveDivisor {
        let mut acc = EffectiveDivisor::zero(&self.curve);
        for _ in 0..n {
            acc = acc.add(self).expect("same curve");
        }
        acc
    }

    /// Cartier test: the divisor is locally principal exactly when
    /// `I · I⁻¹ = O_X`, checked through the colon-ideal inverse.
    pub fn is_cartier(&self) -> Result<bool> {
        let frac = FractionalIdeal::effective(self)?;
        let inv = frac.inverse()?;
        // I · (g : I) = (g), with g the chosen nonzerodivisor denominator.
        let product = self.ideal.product(&inv.numerator);
        let principal = Ideal::new(self.curve.ring(), vec![inv.denominator.clone()])
            .plus(self.curve.defining_ideal());
        product.equal(&principal)
    }
}

/// A nondegenerate fractional ideal `(1/f)·I` with `f` a nonzerodivisor.
#[derive(Debug, Clone)]
pub struct FractionalIdeal {
    curve: Curve,
    /// Ambient numerator ideal, containing the curve ideal.
    numerator: Ideal,
    denominator: Poly,
}

impl FractionalIdeal {
    pub fn new(curve: &Curve, numerator_gens: &[Poly], denominator: Poly) -> Result<FractionalIdeal> {
        if !same_ring(denominator.ring(), curve.ring()) {
            return Err(Error::RingMismatch);
        }
        if !curve.is_nonzerodivisor(&denominator) {
            return Err(Error::ZeroDivisor {
                element: denominator.to_string(),
            });
        }
        let numerator =
            Ideal::new(curve.ring(), numerator_gens.to_vec()).plus(curve.defining_ideal());
        if numerator.equal(curve.defining_ideal())? {
            return Err(Error::ZeroIdeal);
        }
        Ok(FractionalIdeal {
            curve: curve.clone(),
            numerator,
            denominator,
        })
    }

    /// The ideal of an effective divisor viewed with denominator 1.
    pub fn effective(divisor: &EffectiveDivisor) -> Result<FractionalIdeal> {
        FractionalIdeal::new(
            &divisor.curve,
            divisor.ideal.generators(),
            Poly::one(divisor.curve.ring()),
        )
    }

    pub fn curve(&self) -> &Curve {
        &self.curve
    }

    pub fn numerator(&self) -> &Ideal {
        &self.numerator
    }

    pub fn denominator(&self) -> &Poly {
        &self.denominator
    }

    /// A nonzerodivisor inside the numerator ideal: the stored generators in
    /// order, then small integer combinations of the reduced basis, up to 200
    /// candidates.
    fn find_nonzerodivisor(&self) -> Result<Poly> {
        for g in self.numerator.generators() {
            if self.curve.is_nonzerodivisor(g) {
                return Ok(g.clone());
            }
        }
        let basis: Vec<Poly> = self.numerator.reduced_basis().to_vec();
        for g in &basis {
            if self.curve.is_nonzerodivisor(g) {
                return Ok(g.clone());
            }
        }
        let field = self.curve.ring().field().clone();
        let mut tried = 0usize;
        let k = basis.len();
        let mut coeffs = vec![0i64; k];
        'outer: loop {
            // Odometer over [-3, 3]^k.
            let mut i = 0;
            loop {
                if i == k {
                    break 'outer;
                }
                coeffs[i] += 1;
                if coeffs[i] <= 3 {
                    break;
                }
                coeffs[i] = -3;
                i += 1;
            }
            let mut candidate = Poly::zero(self.curve.ring());
            for (c, g) in coeffs.iter().zip(&basis) {
                candidate = candidate.add(&g.scale(&field.from_i64(*c)))?;
            }
            tried += 1;
            if self.curve.is_nonzerodivisor(&candidate) {
                return Ok(candidate);
            }
            if tried >= 200 {
                break;
            }
        }
        Err(Error::NoNonzerodivisor)
    }

    /// Inverse fractional ideal. For `J = (1/f)·I` and a nonzerodivisor
    /// `g ∈ I`, the inverse is `(1/g)·(f·(g : I))`; `J·J⁻¹ ⊆ O_X` always,
    /// with equality exactly when `J` is invertible.
    pub fn inverse(&self) -> Result<FractionalIdeal> {
        let g = self.find_nonzerodivisor()?;
        let principal =
            Ideal::new(self.curve.ring(), vec![g.clone()]).plus(self.curve.defining_ideal());
        let colon = principal.quotient(&self.numerator);
        let gens: Vec<Poly> = colon
            .reduced_basis()
            .iter()
            .map(|h| h.mul(&self.denominator).expect("same ring"))
            .collect();
        FractionalIdeal::new(&self.curve, &gens, g)
    }

    /// Splits the representation into an effective part and a principal
    /// Cartier part: `(1/f)·I = I ⊖ (f)`.
    pub fn clear_denominators(&self) -> Result<GeneralizedDivisor> {
        let plus = EffectiveDivisor::new(&self.curve, self.numerator.generators())?;
        let minus = EffectiveDivisor::new(&self.curve, &[self.denominator.clone()])?;
        GeneralizedDivisor::new(plus, minus)
    }
}

/// A generalized divisor: `plus ⊖ minus` with `minus` Cartier.
#[derive(Debug, Clone)]
pub struct GeneralizedDivisor {
    plus: EffectiveDivisor,
    minus: EffectiveDivisor,
}

impl GeneralizedDivisor {
    /// Verifies the Cartier condition on the minus part at construction.
    pub fn new(plus: EffectiveDivisor, minus: EffectiveDivisor) -> Result<GeneralizedDivisor> {
        if !plus.curve.same_curve(&minus.curve) {
            return Err(Error::CurveMismatch);
        }
        if !minus.is_cartier()? {
            return Err(Error::Internal(format!(
                "minus part is not Cartier on curve {}",
                minus.curve
            )));
        }
        Ok(GeneralizedDivisor { plus, minus })
    }

    /// Internal constructor for sums and images whose minus part is Cartier
    /// by construction (products and images of Cartier divisors): asserted,
    /// not re-verified.
    pub(crate) fn new_unchecked(
        plus: EffectiveDivisor,
        minus: EffectiveDivisor,
    ) -> GeneralizedDivisor {
        GeneralizedDivisor { plus, minus }
    }

    pub fn effective(plus: EffectiveDivisor) -> GeneralizedDivisor {
        let minus = EffectiveDivisor::zero(&plus.curve);
        GeneralizedDivisor { plus, minus }
    }

    pub fn curve(&self) -> &Curve {
        self.plus.curve()
    }

    pub fn plus(&self) -> &EffectiveDivisor {
        &self.plus
    }

    pub fn minus(&self) -> &EffectiveDivisor {
        &self.minus
    }

    /// Sum of generalized divisors: componentwise products of ideals.
    pub fn add(&self, other: &GeneralizedDivisor) -> Result<GeneralizedDivisor> {
        Ok(GeneralizedDivisor {
            plus: self.plus.add(&other.plus)?,
            minus: self.minus.add(&other.minus)?,
        })
    }

    pub fn degree(&self) -> i64 {
        self.plus.degree() as i64 - self.minus.degree() as i64
    }

    /// Equality of the underlying fractional ideals, decided by the
    /// cross-product identity `I_plus·J_minus = J_plus·I_minus`; valid
    /// because minus parts are invertible.
    pub fn equal(&self, other: &GeneralizedDivisor) -> Result<bool> {
        if !self.curve().same_curve(other.curve()) {
            return Err(Error::CurveMismatch);
        }
        let curve_ideal = self.curve().defining_ideal();
        let left = self.plus.ideal.product(&other.minus.ideal).plus(curve_ideal);
        let right = other.plus.ideal.product(&self.minus.ideal).plus(curve_ideal);
        left.equal(&right)
    }
}
