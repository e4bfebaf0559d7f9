//! Multivariate polynomials over an exact coefficient field.
//!
//! A [`Poly`] stores its nonzero terms sorted in strictly descending grevlex
//! order on the ring's declared variable list. All operations are pure; values
//! can be shared freely across threads.

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialOrder};
use crate::scalar::{Field, Scalar};
use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

/// Ring context: the ordered variable list and the coefficient field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyRing {
    vars: Vec<String>,
    field: Field,
}

impl PolyRing {
    pub fn new(vars: Vec<String>, field: Field) -> Arc<PolyRing> {
        assert!(!vars.is_empty(), "ring needs at least one variable");
        for (i, v) in vars.iter().enumerate() {
            assert!(
                !vars[..i].contains(v),
                "duplicate variable name `{v}` in ring"
            );
        }
        Arc::new(PolyRing { vars, field })
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// The ring `k[self.vars, extra]`.
    pub fn extended(self: &Arc<Self>, extra: &[String]) -> Arc<PolyRing> {
        let mut vars = self.vars.clone();
        vars.extend_from_slice(extra);
        PolyRing::new(vars, self.field.clone())
    }

    /// A variable name not declared in this ring, derived from `base`.
    pub fn fresh_var(&self, base: &str) -> String {
        if self.var_index(base).is_none() {
            return base.to_string();
        }
        for i in 0.. {
            let name = format!("{base}{i}");
            if self.var_index(&name).is_none() {
                return name;
            }
        }
        unreachable!()
    }
}

pub fn same_ring(a: &Arc<PolyRing>, b: &Arc<PolyRing>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

/// A polynomial: terms sorted strictly descending under grevlex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    ring: Arc<PolyRing>,
    terms: Vec<(Monomial, Scalar)>,
}

impl Poly {
    pub fn zero(ring: &Arc<PolyRing>) -> Poly {
        Poly {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(ring: &Arc<PolyRing>) -> Poly {
        Poly::constant(ring, ring.field.one())
    }

    pub fn constant(ring: &Arc<PolyRing>, c: Scalar) -> Poly {
        let mut terms = Vec::new();
        if !c.is_zero() {
            terms.push((Monomial::unit(ring.nvars()), c));
        }
        Poly {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn var(ring: &Arc<PolyRing>, index: usize) -> Poly {
        Poly {
            ring: ring.clone(),
            terms: vec![(Monomial::var(ring.nvars(), index), ring.field.one())],
        }
    }

    pub fn monomial(ring: &Arc<PolyRing>, m: Monomial, c: Scalar) -> Poly {
        let mut terms = Vec::new();
        if !c.is_zero() {
            terms.push((m, c));
        }
        Poly {
            ring: ring.clone(),
            terms,
        }
    }

    /// Builds a polynomial from arbitrary (monomial, coefficient) pairs,
    /// combining duplicates and dropping zeros.
    pub fn from_terms(ring: &Arc<PolyRing>, terms: Vec<(Monomial, Scalar)>) -> Poly {
        let mut p = Poly {
            ring: ring.clone(),
            terms,
        };
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        let order = MonomialOrder::Grevlex;
        self.terms
            .sort_by(|a, b| order.cmp(&b.0, &a.0));
        let mut merged: Vec<(Monomial, Scalar)> = Vec::with_capacity(self.terms.len());
        for (m, c) in self.terms.drain(..) {
            if let Some(last) = merged.last_mut() {
                if last.0 == m {
                    last.1 = last.1.add(&c);
                    continue;
                }
            }
            merged.push((m, c));
        }
        merged.retain(|(_, c)| !c.is_zero());
        self.terms = merged;
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, Scalar)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_unit())
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_unit() && self.terms[0].1.is_one()
    }

    pub fn total_degree(&self) -> u64 {
        self.terms
            .iter()
            .map(|(m, _)| m.total_degree())
            .max()
            .unwrap_or(0)
    }

    /// Leading term under grevlex (the stored order).
    pub fn leading(&self) -> Option<(&Monomial, &Scalar)> {
        self.terms.first().map(|(m, c)| (m, c))
    }

    /// Index of the leading term under an arbitrary order.
    pub fn leading_under(&self, order: &MonomialOrder) -> Option<(&Monomial, &Scalar)> {
        let mut best: Option<usize> = None;
        for (i, (m, _)) in self.terms.iter().enumerate() {
            match best {
                None => best = Some(i),
                Some(j) => {
                    if order.cmp(m, &self.terms[j].0) == Ordering::Greater {
                        best = Some(i);
                    }
                }
            }
        }
        best.map(|i| (&self.terms[i].0, &self.terms[i].1))
    }

    fn check_ring(&self, other: &Poly) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn add(&self, other: &Poly) -> Result<Poly> {
        self.check_ring(other)?;
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        Ok(Poly::from_terms(&self.ring, terms))
    }

    pub fn sub(&self, other: &Poly) -> Result<Poly> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Poly {
        Poly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.ring);
        }
        Poly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), k.mul(c)))
                .collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &Scalar) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.ring);
        }
        Poly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(mm, k)| (mm.mul(m), k.mul(c)))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Result<Poly> {
        self.check_ring(other)?;
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                terms.push((ma.mul(mb), ca.mul(cb)));
            }
        }
        Ok(Poly::from_terms(&self.ring, terms))
    }

    pub fn pow(&self, n: u32) -> Poly {
        let mut acc = Poly::one(&self.ring);
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).expect("same ring");
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).expect("same ring");
            }
        }
        acc
    }

    /// Divides every coefficient by the grevlex leading coefficient.
    pub fn monic(&self) -> Poly {
        self.monic_under(&MonomialOrder::Grevlex)
    }

    /// Divides every coefficient by the leading coefficient under `order`.
    pub fn monic_under(&self, order: &MonomialOrder) -> Poly {
        match self.leading_under(order) {
            None => self.clone(),
            Some((_, lc)) => {
                if lc.is_one() {
                    self.clone()
                } else {
                    let inv = lc.inv();
                    self.scale(&inv)
                }
            }
        }
    }

    /// Evaluates at a full point, one scalar per variable.
    pub fn eval(&self, coords: &[Scalar]) -> Scalar {
        assert_eq!(coords.len(), self.ring.nvars());
        let mut acc = self.ring.field.zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                for _ in 0..e {
                    v = v.mul(&coords[i]);
                }
            }
            acc = acc.add(&v);
        }
        acc
    }

    /// Substitutes one polynomial of the target ring per variable.
    pub fn substitute(&self, target: &Arc<PolyRing>, images: &[Poly]) -> Result<Poly> {
        assert_eq!(images.len(), self.ring.nvars());
        for img in images {
            if !same_ring(img.ring(), target) {
                return Err(Error::RingMismatch);
            }
        }
        let mut acc = Poly::zero(target);
        for (m, c) in &self.terms {
            let mut v = Poly::constant(target, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    v = v.mul(&images[i].pow(e))?;
                }
            }
            acc = acc.add(&v)?;
        }
        Ok(acc)
    }

    /// Re-expresses the polynomial in `bigger`, sending variable `i` of this
    /// ring to variable `map[i]` of `bigger`.
    pub fn lift(&self, bigger: &Arc<PolyRing>, map: &[usize]) -> Poly {
        let n = bigger.nvars();
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = vec![0u32; n];
                for (i, &exp) in m.0.iter().enumerate() {
                    e[map[i]] = exp;
                }
                (Monomial(e), c.clone())
            })
            .collect();
        Poly::from_terms(bigger, terms)
    }

    /// Inverse of [`Poly::lift`]: keeps only the variables of `smaller` (at
    /// positions `map[i]` here). Fails when another variable appears.
    pub fn restrict(&self, smaller: &Arc<PolyRing>, map: &[usize]) -> Result<Poly> {
        let mut keep = vec![usize::MAX; self.ring.nvars()];
        for (i, &j) in map.iter().enumerate() {
            keep[j] = i;
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut e = vec![0u32; smaller.nvars()];
            for (j, &exp) in m.0.iter().enumerate() {
                if exp > 0 {
                    if keep[j] == usize::MAX {
                        return Err(Error::Internal(format!(
                            "variable `{}` not present in the smaller ring",
                            self.ring.vars()[j]
                        )));
                    }
                    e[keep[j]] = exp;
                }
            }
            terms.push((Monomial(e), c.clone()));
        }
        Ok(Poly::from_terms(smaller, terms))
    }

    /// Exact division by `divisor`; `None` when the division leaves a remainder.
    pub fn div_exact(&self, divisor: &Poly) -> Option<Poly> {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let (dm, dc) = divisor.leading().unwrap();
        let mut rem = self.clone();
        let mut quo_terms: Vec<(Monomial, Scalar)> = Vec::new();
        while let Some((m, c)) = rem.leading() {
            if !dm.divides(m) {
                return None;
            }
            let qm = dm.div(m);
            let qc = c.div(dc);
            rem = rem
                .sub(&divisor.mul_term(&qm, &qc))
                .expect("same ring");
            quo_terms.push((qm, qc));
        }
        Some(Poly::from_terms(&self.ring, quo_terms))
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, ring: &PolyRing, m: &Monomial) -> fmt::Result {
    let mut first = true;
    for (i, &e) in m.0.iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        write!(f, "{}", ring.vars[i])?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    Ok(())
}

impl fmt::Display for Poly {
    /// Canonical form: terms in descending grevlex order, reduced-fraction or
    /// residue coefficients, explicit `*` between factors. Round-trips through
    /// the expression parser.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let abs = if neg { c.neg() } else { c.clone() };
            if m.is_unit() {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                write_monomial(f, &self.ring, m)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qring(vars: &[&str]) -> Arc<PolyRing> {
        PolyRing::new(vars.iter().map(|s| s.to_string()).collect(), Field::Rational)
    }

    fn p(ring: &Arc<PolyRing>, text: &str) -> Poly {
        crate::parse::parse_poly(text, ring).unwrap()
    }

    #[test]
    fn product_of_conjugates() {
        let r = qring(&["x", "y"]);
        let prod = p(&r, "y - x^2").mul(&p(&r, "y + x^2")).unwrap();
        assert_eq!(prod, p(&r, "y^2 - x^4"));
    }

    #[test]
    fn multiplicative_identities() {
        let r = qring(&["x", "y"]);
        let f = p(&r, "3*x^2*y - y + 7");
        assert_eq!(f.mul(&Poly::one(&r)).unwrap(), f);
        assert!(f.mul(&Poly::zero(&r)).unwrap().is_zero());
    }

    #[test]
    fn canonical_print() {
        let r = qring(&["x", "y"]);
        assert_eq!(p(&r, "y^2 - x^4").to_string(), "-x^4 + y^2");
        assert_eq!(Poly::zero(&r).to_string(), "0");
        assert_eq!(p(&r, "2*x - 2*x").to_string(), "0");
        assert_eq!(p(&r, "x*y*x").to_string(), "x^2*y");
    }

    #[test]
    fn ring_mismatch_detected() {
        let r = qring(&["x", "y"]);
        let s = qring(&["u", "v"]);
        let f = Poly::var(&r, 0);
        let g = Poly::var(&s, 0);
        assert!(matches!(f.mul(&g), Err(Error::RingMismatch)));
    }

    #[test]
    fn exact_division() {
        let r = qring(&["x", "y"]);
        let prod = p(&r, "(y - x^2) * (y + x^2)");
        let q = prod.div_exact(&p(&r, "y + x^2")).unwrap();
        assert_eq!(q, p(&r, "y - x^2"));
        assert!(p(&r, "x + 1").div_exact(&p(&r, "y")).is_none());
    }

    #[test]
    fn lift_and_restrict() {
        let small = qring(&["s", "t"]);
        let big = qring(&["x", "y", "s", "t"]);
        let f = p(&small, "t^2 - s^2");
        let lifted = f.lift(&big, &[2, 3]);
        assert_eq!(lifted.to_string(), "-s^2 + t^2");
        assert_eq!(lifted.restrict(&small, &[2, 3]).unwrap(), f);
        let mixed = p(&big, "x + s");
        assert!(mixed.restrict(&small, &[2, 3]).is_err());
    }
}
