//! Ideals with cached reduced Gröbner bases and the ideal-level operations
//! built on them: normal forms, membership, equality, elimination, colon
//! ideals, saturation and dimension counts.

mod buchberger;
mod division;

pub use buchberger::reduced_groebner;
pub use division::normal_form_with;

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{same_ring, Poly, PolyRing};
use std::sync::{Arc, OnceLock};

/// An ideal of a polynomial ring, held as a generator list plus a lazily
/// computed reduced Gröbner basis under the ring's default grevlex order.
///
/// The reduced basis is a canonical form: two ideals of the same ring are
/// equal exactly when their reduced bases coincide. Values are immutable;
/// the cache fills at most once and concurrent readers observe either
/// "absent" or the final basis.
#[derive(Debug, Clone)]
pub struct Ideal {
    ring: Arc<PolyRing>,
    gens: Vec<Poly>,
    basis: OnceLock<Arc<Vec<Poly>>>,
}

impl Ideal {
    pub fn new(ring: &Arc<PolyRing>, gens: Vec<Poly>) -> Ideal {
        for g in &gens {
            assert!(
                same_ring(g.ring(), ring),
                "generator from a different ring"
            );
        }
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Ideal {
            ring: ring.clone(),
            gens,
            basis: OnceLock::new(),
        }
    }

    pub fn zero(ring: &Arc<PolyRing>) -> Ideal {
        Ideal::new(ring, Vec::new())
    }

    pub fn unit(ring: &Arc<PolyRing>) -> Ideal {
        Ideal::new(ring, vec![Poly::one(ring)])
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn generators(&self) -> &[Poly] {
        &self.gens
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.reduced_basis().is_empty()
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.reduced_basis()
            .first()
            .is_some_and(|g| g.is_constant())
    }

    /// Reduced Gröbner basis under grevlex, ascending leading monomials.
    pub fn reduced_basis(&self) -> &[Poly] {
        self.basis
            .get_or_init(|| Arc::new(reduced_groebner(&self.gens, &MonomialOrder::Grevlex)))
    }

    /// Reduced basis under an arbitrary order; not cached.
    pub fn reduced_basis_under(&self, order: &MonomialOrder) -> Vec<Poly> {
        reduced_groebner(&self.gens, order)
    }

    /// Unique remainder of `f` modulo the ideal under grevlex.
    pub fn normal_form(&self, f: &Poly) -> Result<Poly> {
        if !same_ring(f.ring(), &self.ring) {
            return Err(Error::RingMismatch);
        }
        Ok(normal_form_with(
            f,
            self.reduced_basis(),
            &MonomialOrder::Grevlex,
        ))
    }

    pub fn contains(&self, f: &Poly) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    pub fn equal(&self, other: &Ideal) -> Result<bool> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(Error::RingMismatch);
        }
        Ok(self.reduced_basis() == other.reduced_basis())
    }

    /// Sum of ideals: concatenated generators.
    pub fn plus(&self, other: &Ideal) -> Ideal {
        assert!(same_ring(&self.ring, &other.ring), "ring mismatch");
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    /// Product of ideals: pairwise products of the reduced-basis generators.
    pub fn product(&self, other: &Ideal) -> Ideal {
        assert!(same_ring(&self.ring, &other.ring), "ring mismatch");
        let mut gens = Vec::new();
        for a in self.reduced_basis() {
            for b in other.reduced_basis() {
                gens.push(a.mul(b).expect("same ring"));
            }
        }
        Ideal::new(&self.ring, gens)
    }

    pub fn pow(&self, n: u32) -> Ideal {
        let mut acc = Ideal::unit(&self.ring);
        for _ in 0..n {
            acc = acc.product(self);
        }
        acc
    }

    /// The contraction `I ∩ k[remaining]` as an ideal of the smaller ring,
    /// computed with an elimination order that puts `drop` in front. The
    /// remaining variables keep their declared order; `drop` empty returns the
    /// ideal unchanged in a ring with the same content.
    pub fn eliminate(&self, drop: &[usize]) -> Ideal {
        let kept: Vec<usize> = (0..self.ring.nvars())
            .filter(|i| !drop.contains(i))
            .collect();
        assert!(!kept.is_empty(), "cannot eliminate every variable");
        let names: Vec<String> = kept.iter().map(|&i| self.ring.vars()[i].clone()).collect();
        let small = PolyRing::new(names, self.ring.field().clone());
        let gens = self
            .eliminate_in_place(drop)
            .into_iter()
            .map(|g| g.restrict(&small, &kept).expect("free of dropped vars"))
            .collect();
        Ideal::new(&small, gens)
    }

    /// Generators of `I ∩ k[remaining]` kept in the ambient ring.
    fn eliminate_in_place(&self, drop: &[usize]) -> Vec<Poly> {
        if drop.is_empty() {
            return self.reduced_basis().to_vec();
        }
        let order = MonomialOrder::eliminating(drop.iter().copied());
        let gb = self.reduced_basis_under(&order);
        let mut dropped = vec![false; self.ring.nvars()];
        for &i in drop {
            dropped[i] = true;
        }
        gb.into_iter()
            .filter(|g| {
                g.terms()
                    .iter()
                    .all(|(m, _)| m.support().all(|i| !dropped[i]))
            })
            .collect()
    }

    /// Intersection of two ideals of the same ring.
    pub fn intersection(&self, other: &Ideal) -> Ideal {
        assert!(same_ring(&self.ring, &other.ring), "ring mismatch");
        let u_name = self.ring.fresh_var("u");
        let big = self.ring.extended(&[u_name]);
        let n = self.ring.nvars();
        let map: Vec<usize> = (0..n).collect();
        let u = Poly::var(&big, n);
        let one_minus_u = Poly::one(&big).sub(&u).expect("same ring");
        let mut gens = Vec::new();
        for a in &self.gens {
            gens.push(a.lift(&big, &map).mul(&u).expect("same ring"));
        }
        for b in &other.gens {
            gens.push(b.lift(&big, &map).mul(&one_minus_u).expect("same ring"));
        }
        let graph = Ideal::new(&big, gens);
        let restricted = graph
            .eliminate_in_place(&[n])
            .into_iter()
            .map(|g| g.restrict(&self.ring, &map).expect("free of u"))
            .collect();
        Ideal::new(&self.ring, restricted)
    }

    /// Colon ideal `(I : f)`. For `f = 0` this is the unit ideal.
    pub fn quotient_elem(&self, f: &Poly) -> Ideal {
        assert!(same_ring(f.ring(), &self.ring), "ring mismatch");
        if f.is_zero() {
            return Ideal::unit(&self.ring);
        }
        let inter = self.intersection(&Ideal::new(&self.ring, vec![f.clone()]));
        let gens = inter
            .reduced_basis()
            .iter()
            .map(|g| {
                g.div_exact(f)
                    .expect("intersection with (f) is divisible by f")
            })
            .collect();
        Ideal::new(&self.ring, gens)
    }

    /// Colon ideal `(I : J) = {a : aJ ⊆ I}`.
    pub fn quotient(&self, other: &Ideal) -> Ideal {
        assert!(same_ring(&self.ring, &other.ring), "ring mismatch");
        let mut acc: Option<Ideal> = None;
        for f in &other.gens {
            if f.is_zero() {
                continue;
            }
            let q = self.quotient_elem(f);
            acc = Some(match acc {
                None => q,
                Some(prev) => prev.intersection(&q),
            });
        }
        acc.unwrap_or_else(|| Ideal::unit(&self.ring))
    }

    /// Saturation `(I : J^∞)` by iterated colon until stabilization.
    pub fn saturate(&self, other: &Ideal) -> Ideal {
        let mut current = self.clone();
        loop {
            let next = current.quotient(other);
            if next.equal(&current).expect("same ring") {
                return current;
            }
            current = next;
        }
    }

    /// True when multiplication by `f` is injective modulo this ideal,
    /// certified by `(I : f) = I`. Zero (and anything in the ideal) is a
    /// zero divisor, reported as `false`.
    pub fn is_nonzerodivisor(&self, f: &Poly) -> bool {
        if f.is_zero() {
            return false;
        }
        self.quotient_elem(f).equal(self).expect("same ring")
    }

    /// Krull dimension of the quotient ring, or `None` for the unit ideal.
    /// Computed as the maximum size of a variable subset meeting no leading
    /// monomial of the reduced basis.
    pub fn krull_dim(&self) -> Option<usize> {
        if self.is_unit_ideal() {
            return None;
        }
        let lms: Vec<&Monomial> = self
            .reduced_basis()
            .iter()
            .map(|g| g.leading().expect("nonzero").0)
            .collect();
        let n = self.ring.nvars();
        let mut best = 0;
        for mask in 0u32..(1 << n) {
            let subset: Vec<bool> = (0..n).map(|i| mask & (1 << i) != 0).collect();
            let size = subset.iter().filter(|b| **b).count();
            if size <= best {
                continue;
            }
            let independent = lms.iter().all(|m| !m.supported_on(&subset));
            if independent {
                best = size;
            }
        }
        Some(best)
    }

    /// Vector-space dimension of the quotient ring over the base field, or
    /// `None` when it is infinite. Finite exactly when the leading-term ideal
    /// contains a pure power of every variable.
    pub fn quotient_dim(&self) -> Option<u64> {
        self.standard_monomials().map(|m| m.len() as u64)
    }

    /// The monomials outside the leading-term ideal, ascending under grevlex;
    /// `None` when there are infinitely many.
    pub fn standard_monomials(&self) -> Option<Vec<Monomial>> {
        let lms: Vec<Monomial> = self
            .reduced_basis()
            .iter()
            .map(|g| g.leading().expect("nonzero").0.clone())
            .collect();
        standard_monomials_of(&lms, self.ring.nvars())
    }
}

/// Standard monomials of the monomial ideal generated by `lms`, or `None`
/// when the set is infinite.
pub fn standard_monomials_of(lms: &[Monomial], nvars: usize) -> Option<Vec<Monomial>> {
    if lms.iter().any(|m| m.is_unit()) {
        return Some(Vec::new());
    }
    // Finiteness: a pure power of every variable must appear.
    let mut bound = vec![None::<u32>; nvars];
    for m in lms {
        if let Some(i) = m.pure_power() {
            let e = m.0[i];
            bound[i] = Some(bound[i].map_or(e, |b: u32| b.min(e)));
        }
    }
    let bound: Option<Vec<u32>> = bound.into_iter().collect();
    let bound = bound?;

    let mut result = Vec::new();
    let mut exps = vec![0u32; nvars];
    loop {
        let candidate = Monomial(exps.clone());
        if !lms.iter().any(|m| m.divides(&candidate)) {
            result.push(candidate);
        }
        // Odometer over the box below the pure-power bounds.
        let mut i = 0;
        loop {
            if i == nvars {
                let order = MonomialOrder::Grevlex;
                result.sort_by(|a, b| order.cmp(a, b));
                return Some(result);
            }
            exps[i] += 1;
            if exps[i] < bound[i] {
                break;
            }
            exps[i] = 0;
            i += 1;
        }
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

    fn ideal(r: &Arc<PolyRing>, texts: &[&str]) -> Ideal {
        Ideal::new(
            r,
            texts.iter().map(|t| parse_poly(t, r).unwrap()).collect(),
        )
    }

    fn p(r: &Arc<PolyRing>, text: &str) -> Poly {
        parse_poly(text, r).unwrap()
    }

    #[test]
    fn membership() {
        let r = qring(&["x", "y"]);
        let i = ideal(&r, &["y - x^2", "y + x^2"]);
        assert!(i.contains(&p(&r, "y^2 - x^4")).unwrap());
        assert!(!ideal(&r, &["x"]).contains(&p(&r, "1")).unwrap());
        assert!(ideal(&r, &["x^2", "y"]).contains(&p(&r, "x^2*y")).unwrap());
    }

    #[test]
    fn equality_by_canonical_basis() {
        let r = qring(&["x", "y"]);
        assert!(ideal(&r, &["x^2", "y"])
            .equal(&ideal(&r, &["y", "x^2 + y^2"]))
            .unwrap());
        let i = ideal(&r, &["x^3 - y", "y^2"]);
        assert!(i.equal(&i).unwrap());
        // Ambient presentations of (x) and (y) on the tacnode differ.
        let a = ideal(&r, &["x", "y^2 - x^4"]);
        let b = ideal(&r, &["y", "y^2 - x^4"]);
        assert!(!a.equal(&b).unwrap());
    }

    #[test]
    fn elimination() {
        let r = qring(&["x", "y", "s", "t"]);
        let j = ideal(&r, &["y^2 - x^4", "s - x^2", "t - y"]);
        let node = j.eliminate(&[0, 1]);
        let st = qring(&["s", "t"]);
        assert!(node.equal(&ideal(&st, &["t^2 - s^2"])).unwrap());

        let i = ideal(&r, &["x + s"]);
        assert!(i.eliminate(&[]).equal(&i).unwrap());

        let line = qring(&["x"]);
        let zero = ideal(&line, &["x - 1"]);
        // No constants survive: nothing in (x - 1) is free of x.
        assert_eq!(zero.eliminate_in_place(&[0]).len(), 0);
    }

    #[test]
    fn colon_and_saturation() {
        let r = qring(&["x", "y"]);
        // Tacnode ambient: ((x^2) : (x^2, y)) = (x^2, y).
        let i = ideal(&r, &["x^2", "y^2 - x^4"]);
        let j = ideal(&r, &["x^2", "y", "y^2 - x^4"]);
        let colon = i.quotient(&j);
        assert!(colon.equal(&j).unwrap());

        // (I : (1)) = I.
        assert!(i.quotient(&Ideal::unit(&r)).equal(&i).unwrap());

        // ((x*y) : (x)) = (y) in the free ring.
        assert!(ideal(&r, &["x*y"])
            .quotient(&ideal(&r, &["x"]))
            .equal(&ideal(&r, &["y"]))
            .unwrap());

        // ((x^2, y) : (x, y)^inf) = (1).
        let sat = ideal(&r, &["x^2", "y"]).saturate(&ideal(&r, &["x", "y"]));
        assert!(sat.is_unit_ideal());

        // Saturating by (1) changes nothing.
        assert!(i.saturate(&Ideal::unit(&r)).equal(&i).unwrap());

        let st = qring(&["s", "t"]);
        let sat = ideal(&st, &["s", "t^2 - s^2"]).saturate(&ideal(&st, &["s", "t"]));
        assert!(sat.is_unit_ideal());
    }

    #[test]
    fn dimensions() {
        let r = qring(&["x", "y"]);
        assert_eq!(ideal(&r, &["y^2 - x^4"]).krull_dim(), Some(1));
        assert_eq!(ideal(&r, &["x", "y"]).krull_dim(), Some(0));
        let line = qring(&["s"]);
        assert_eq!(Ideal::zero(&line).krull_dim(), Some(1));
        assert_eq!(Ideal::unit(&line).krull_dim(), None);

        assert_eq!(ideal(&r, &["x^2", "y", "y^2 - x^4"]).quotient_dim(), Some(2));
        let st = qring(&["s", "t"]);
        assert_eq!(
            ideal(&st, &["s^2", "s*t", "t^2", "t^2 - s^2"]).quotient_dim(),
            Some(3)
        );
        assert_eq!(Ideal::unit(&st).quotient_dim(), Some(0));
        assert_eq!(ideal(&st, &["s"]).quotient_dim(), None);
    }

    #[test]
    fn nonzerodivisors_on_the_tacnode() {
        let r = qring(&["x", "y"]);
        let curve = ideal(&r, &["y^2 - x^4"]);
        assert!(curve.is_nonzerodivisor(&p(&r, "x")));
        assert!(!curve.is_nonzerodivisor(&Poly::zero(&r)));
        assert!(!curve.is_nonzerodivisor(&p(&r, "y - x^2")));
    }
}
