//! Direct and inverse images of divisors along a finite free cover.
//!
//! The direct image of an effective divisor is cut out by the 0-th Fitting
//! ideal of the pushed-forward structure module. The module is presented over
//! the target ring by the block matrix `[S_1 | ... | S_r]` whose blocks are
//! the multiplication matrices of the divisor's generators on the free module
//! basis; the Fitting ideal is generated by the maximal minors of that matrix
//! and does not depend on the chosen generator list. The inverse image simply
//! extends the defining ideal along the ring map.

use crate::curve::RationalPoint;
use crate::divisor::{EffectiveDivisor, GeneralizedDivisor};
use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::matrix::{column_choices, PolyMatrix};
use crate::morphism::FiniteMorphism;
use crate::poly::Poly;
use crate::scalar::Scalar;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Presentation of a pushed-forward module: the `n × n·r` block matrix of
/// multiplication matrices of the `r` ideal generators.
#[derive(Debug, Clone)]
pub struct PresentationMatrix {
    matrix: PolyMatrix,
    degree: usize,
}

impl PresentationMatrix {
    /// Assembles `[S_1 | ... | S_r]` from an explicit generator list; the
    /// list must be nonempty so the presented module is well defined.
    pub fn assemble(morphism: &FiniteMorphism, gens: &[Poly]) -> Result<PresentationMatrix> {
        if gens.is_empty() {
            return Err(Error::Internal(
                "presentation needs at least one generator".into(),
            ));
        }
        let n = morphism.degree();
        let mut matrix: Option<PolyMatrix> = None;
        for g in gens {
            let block = morphism.mult_matrix(g)?;
            matrix = Some(match matrix {
                None => block,
                Some(acc) => acc.hcat(&block),
            });
        }
        Ok(PresentationMatrix {
            matrix: matrix.expect("nonempty generator list"),
            degree: n,
        })
    }

    pub fn matrix(&self) -> &PolyMatrix {
        &self.matrix
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// The 0-th Fitting ideal: all `n × n` minors of the presentation matrix,
    /// reduced modulo the target ideal, in a deterministic sorted order.
    /// For `n = 0` the empty minor convention gives the unit ideal.
    pub fn fitting0(&self, morphism: &FiniteMorphism) -> Result<Ideal> {
        let target = morphism.target();
        if self.degree == 0 {
            return Ok(Ideal::unit(target.ring()));
        }
        let mut minors = Vec::new();
        for choice in column_choices(self.matrix.cols(), self.degree) {
            let det = self.matrix.select_columns(&choice).det();
            let reduced = target.defining_ideal().normal_form(&det)?;
            if !reduced.is_zero() {
                minors.push(reduced);
            }
        }
        minors.sort_by(|a, b| format!("{a}").cmp(&format!("{b}")));
        minors.dedup();
        Ok(Ideal::new(target.ring(), minors).plus(target.defining_ideal()))
    }
}

/// Direct image of an effective divisor: the divisor of the 0-th Fitting
/// ideal of the pushed-forward structure module.
pub fn pushforward_effective(
    morphism: &FiniteMorphism,
    divisor: &EffectiveDivisor,
) -> Result<EffectiveDivisor> {
    if !divisor.curve().same_curve(morphism.source()) {
        return Err(Error::CurveMismatch);
    }
    let gens: Vec<Poly> = divisor.ideal().reduced_basis().to_vec();
    let presentation = PresentationMatrix::assemble(morphism, &gens)?;
    let fitting = presentation.fitting0(morphism)?;
    EffectiveDivisor::new(morphism.target(), fitting.generators())
}

/// Direct image of a generalized divisor, componentwise. The image of the
/// Cartier minus part must itself pass the Cartier test; a failure signals a
/// violated precondition upstream.
pub fn pushforward_generalized(
    morphism: &FiniteMorphism,
    divisor: &GeneralizedDivisor,
) -> Result<GeneralizedDivisor> {
    let plus = pushforward_effective(morphism, divisor.plus())?;
    let minus = pushforward_effective(morphism, divisor.minus())?;
    if !minus.is_cartier()? {
        return Err(Error::Internal(
            "direct image of the Cartier part failed the Cartier test".into(),
        ));
    }
    Ok(GeneralizedDivisor::new_unchecked(plus, minus))
}

/// Inverse image of an effective divisor: extension of its ideal along the
/// ring map.
pub fn pullback_effective(
    morphism: &FiniteMorphism,
    divisor: &EffectiveDivisor,
) -> Result<EffectiveDivisor> {
    if !divisor.curve().same_curve(morphism.target()) {
        return Err(Error::CurveMismatch);
    }
    let gens: Vec<Poly> = divisor
        .ideal()
        .reduced_basis()
        .iter()
        .map(|g| morphism.pull_element(g))
        .collect::<Result<_>>()?;
    EffectiveDivisor::new(morphism.source(), &gens)
}

/// Inverse image of a generalized divisor, componentwise; the minus image is
/// Cartier because locally principal ideals extend to locally principal
/// ideals.
pub fn pullback_generalized(
    morphism: &FiniteMorphism,
    divisor: &GeneralizedDivisor,
) -> Result<GeneralizedDivisor> {
    let plus = pullback_effective(morphism, divisor.plus())?;
    let minus = pullback_effective(morphism, divisor.minus())?;
    if !minus.is_cartier()? {
        return Err(Error::Internal(
            "inverse image of the Cartier part failed the Cartier test".into(),
        ));
    }
    Ok(GeneralizedDivisor::new_unchecked(plus, minus))
}

/// Annihilator of the pushed-forward structure module of `divisor` as an
/// ideal of the target ring, computed as a contraction along the graph
/// ideal. Satisfies `Ann^n ⊆ Fitt_0 ⊆ Ann`; used by the verification suite.
pub fn pushforward_annihilator(
    morphism: &FiniteMorphism,
    divisor: &EffectiveDivisor,
) -> Result<Ideal> {
    if !divisor.curve().same_curve(morphism.source()) {
        return Err(Error::CurveMismatch);
    }
    let src = morphism.source().ring();
    let tgt = morphism.target().ring();
    let nx = src.nvars();

    let combined = src.extended(tgt.vars());
    let src_map: Vec<usize> = (0..nx).collect();

    // b annihilates A/I exactly when φ(b) lies in I, i.e. when b lies in the
    // contraction of I + graph relations to the target variables.
    let mut gens: Vec<Poly> = divisor
        .ideal()
        .generators()
        .iter()
        .map(|g| g.lift(&combined, &src_map))
        .collect();
    for (j, img) in morphism.images().iter().enumerate() {
        let y = Poly::var(&combined, nx + j);
        gens.push(y.sub(&img.lift(&combined, &src_map)).expect("same ring"));
    }
    let graph = Ideal::new(&combined, gens);
    let contracted = graph.eliminate(&src_map);
    let gens: Vec<Poly> = contracted
        .generators()
        .iter()
        .map(|g| {
            Poly::from_terms(tgt, g.terms().to_vec())
        })
        .collect();
    Ok(Ideal::new(tgt, gens).plus(morphism.target().defining_ideal()))
}

/// Scheme-theoretic fiber over a rational point of the target, with the
/// rational points found on it.
#[derive(Debug)]
pub struct Fiber {
    pub ideal: Ideal,
    pub points: Vec<RationalPoint>,
    /// False when the coordinate search could not enumerate all candidate
    /// roots (large prime fields); over the rationals the search is complete.
    pub search_complete: bool,
}

/// Pulls back the maximal ideal of `point` and searches the resulting
/// zero-dimensional system for rational points, one univariate eliminant per
/// coordinate. Over the rationals every rational point of the fiber is found;
/// the list may legitimately be empty.
pub fn fiber(morphism: &FiniteMorphism, point: &RationalPoint) -> Result<Fiber> {
    if !point.curve().same_curve(morphism.target()) {
        return Err(Error::CurveMismatch);
    }
    let src = morphism.source();
    let ring = src.ring();
    let mut gens: Vec<Poly> = point
        .max_ideal()
        .generators()
        .iter()
        .map(|g| morphism.pull_element(g))
        .collect::<Result<_>>()?;
    gens.extend(src.defining_ideal().generators().iter().cloned());
    let ideal = Ideal::new(ring, gens);
    if ideal.quotient_dim().is_none() {
        return Err(Error::Internal("fiber is not zero-dimensional".into()));
    }

    let n = ring.nvars();
    let mut complete = true;
    let mut candidates: Vec<Vec<Scalar>> = Vec::with_capacity(n);
    for i in 0..n {
        if ideal.is_unit_ideal() {
            return Ok(Fiber {
                ideal,
                points: Vec::new(),
                search_complete: true,
            });
        }
        let drop: Vec<usize> = (0..n).filter(|&j| j != i).collect();
        let eliminant_ideal = ideal.eliminate(&drop);
        let eliminant = eliminant_ideal
            .reduced_basis()
            .first()
            .cloned()
            .ok_or_else(|| {
                Error::Internal("zero-dimensional fiber has a zero eliminant".into())
            })?;
        let (roots, all_found) = univariate_roots(&eliminant);
        complete &= all_found;
        candidates.push(roots);
    }

    let mut points = Vec::new();
    let mut idx = vec![0usize; n];
    if candidates.iter().all(|c| !c.is_empty()) {
        'enumerate: loop {
            let coords: Vec<Scalar> = idx
                .iter()
                .enumerate()
                .map(|(i, &j)| candidates[i][j].clone())
                .collect();
            let on_fiber = ideal
                .generators()
                .iter()
                .all(|g| g.eval(&coords).is_zero());
            if on_fiber {
                points.push(src.point(coords)?);
            }
            let mut i = 0;
            loop {
                if i == n {
                    break 'enumerate;
                }
                idx[i] += 1;
                if idx[i] < candidates[i].len() {
                    break;
                }
                idx[i] = 0;
                i += 1;
            }
        }
    }
    Ok(Fiber {
        ideal,
        points,
        search_complete: complete,
    })
}

/// Roots of a nonzero univariate polynomial in the base field, with a flag
/// telling whether the enumeration was exhaustive.
fn univariate_roots(p: &Poly) -> (Vec<Scalar>, bool) {
    let field = p.ring().field().clone();
    match &field {
        crate::scalar::Field::Prime(q) => {
            // Trial evaluation; feasible only for small moduli.
            if *q > 65_536 {
                return (Vec::new(), false);
            }
            let mut roots = Vec::new();
            for a in 0..*q {
                let v = field.from_i64(a as i64);
                let coords: Vec<Scalar> = (0..p.ring().nvars()).map(|_| v.clone()).collect();
                if p.eval(&coords).is_zero() {
                    roots.push(v);
                }
            }
            (roots, true)
        }
        crate::scalar::Field::Rational => (rational_roots(p), true),
    }
}

/// Rational root search: clears denominators to a primitive integer
/// polynomial and tests every ±(divisor of the trailing coefficient) over
/// (divisor of the leading coefficient), plus zero.
fn rational_roots(p: &Poly) -> Vec<Scalar> {
    let var = p
        .terms()
        .iter()
        .flat_map(|(m, _)| m.support())
        .next();
    let Some(var) = var else {
        return Vec::new(); // nonzero constant: no roots
    };
    // Coefficient list indexed by exponent.
    let deg = p.terms().iter().map(|(m, _)| m.0[var]).max().unwrap() as usize;
    let mut coeffs: Vec<BigInt> = vec![BigInt::zero(); deg + 1];
    let mut denom_lcm = BigInt::from(1);
    for (_, c) in p.terms() {
        let r = c.as_rational().expect("rational mode");
        denom_lcm = denom_lcm.lcm(r.denom());
    }
    for (m, c) in p.terms() {
        let r = c.as_rational().expect("rational mode");
        let scaled = r * num_rational::BigRational::from_integer(denom_lcm.clone());
        coeffs[m.0[var] as usize] = scaled.to_integer();
    }

    let field = p.ring().field().clone();
    let mut roots = Vec::new();
    let eval_at = |num: &BigInt, den: &BigInt| -> bool {
        // Horner on the homogenized form: sum coeffs[k] * num^k * den^(deg-k).
        let mut acc = BigInt::zero();
        for k in (0..=deg).rev() {
            acc = acc * num + &coeffs[k] * den.pow((deg - k) as u32);
        }
        acc.is_zero()
    };

    // Zero as a candidate root.
    if coeffs[0].is_zero() {
        roots.push(field.from_i64(0));
    }
    let trailing = coeffs
        .iter()
        .find(|c| !c.is_zero())
        .expect("nonzero polynomial")
        .clone();
    let leading = coeffs[deg].clone();
    for pnum in positive_divisors(&trailing) {
        for pden in positive_divisors(&leading) {
            if pnum.gcd(&pden) != BigInt::from(1) {
                continue;
            }
            for sign in [1i64, -1] {
                let num = &pnum * BigInt::from(sign);
                if eval_at(&num, &pden) {
                    roots.push(
                        field
                            .from_fraction(&num, &pden)
                            .expect("nonzero denominator"),
                    );
                }
            }
        }
    }
    roots.sort_by(|a, b| {
        let ra = a.as_rational().expect("rational");
        let rb = b.as_rational().expect("rational");
        ra.cmp(rb)
    });
    roots.dedup();
    roots
}

fn positive_divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    if n.is_zero() {
        return Vec::new();
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::from(1);
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            small.push(d.clone());
            let q = &n / &d;
            if q != d {
                large.push(q);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}
