//! Multivariate division with remainder under an arbitrary monomial order.

use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::Poly;
use crate::scalar::Scalar;
use std::cmp::Ordering;

/// Term list sorted strictly descending under a chosen order.
pub(crate) struct SortedPoly {
    pub terms: Vec<(Monomial, Scalar)>,
}

impl SortedPoly {
    pub fn from_poly(p: &Poly, order: &MonomialOrder) -> SortedPoly {
        let mut terms = p.terms().to_vec();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        SortedPoly { terms }
    }

    pub fn leading(&self) -> Option<&(Monomial, Scalar)> {
        self.terms.first()
    }
}

/// `h - c * m * g` for sorted term lists, keeping the result sorted.
fn merge_sub(
    h: &[(Monomial, Scalar)],
    g: &[(Monomial, Scalar)],
    m: &Monomial,
    c: &Scalar,
    order: &MonomialOrder,
) -> Vec<(Monomial, Scalar)> {
    let mut out = Vec::with_capacity(h.len() + g.len());
    let mut i = 0;
    let mut j = 0;
    while i < h.len() && j < g.len() {
        let gm = g[j].0.mul(m);
        match order.cmp(&h[i].0, &gm) {
            Ordering::Greater => {
                out.push(h[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push((gm, g[j].1.mul(c).neg()));
                j += 1;
            }
            Ordering::Equal => {
                let coeff = h[i].1.sub(&g[j].1.mul(c));
                if !coeff.is_zero() {
                    out.push((h[i].0.clone(), coeff));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&h[i..]);
    for (gm, gc) in &g[j..] {
        out.push((gm.mul(m), gc.mul(c).neg()));
    }
    out
}

/// Fully reduced remainder of `f` modulo `basis` under `order`: no term of the
/// result is divisible by any leading monomial of the basis. Reducers are
/// tried in slice order, which pins the result for non-canonical bases; for a
/// reduced basis the remainder is unique regardless.
pub fn normal_form_with(f: &Poly, basis: &[Poly], order: &MonomialOrder) -> Poly {
    let reducers: Vec<SortedPoly> = basis
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| SortedPoly::from_poly(g, order))
        .collect();
    if reducers.is_empty() {
        return f.clone();
    }
    let mut head = SortedPoly::from_poly(f, order).terms;
    let mut tail: Vec<(Monomial, Scalar)> = Vec::new();
    'outer: while let Some((m, c)) = head.first().cloned() {
        for g in &reducers {
            let (gm, gc) = g.leading().expect("nonzero reducer");
            if gm.divides(&m) {
                let shift = gm.div(&m);
                let scale = c.div(gc);
                head = merge_sub(&head, &g.terms, &shift, &scale, order);
                continue 'outer;
            }
        }
        tail.push((m, c));
        head.remove(0);
    }
    Poly::from_terms(f.ring(), tail)
}

/// S-polynomial of two nonzero polynomials under `order`.
pub fn s_poly(f: &Poly, g: &Poly, order: &MonomialOrder) -> Poly {
    let (fm, fc) = f.leading_under(order).expect("nonzero");
    let (gm, gc) = g.leading_under(order).expect("nonzero");
    let lcm = fm.lcm(gm);
    let a = f.mul_term(&fm.div(&lcm), &fc.inv());
    let b = g.mul_term(&gm.div(&lcm), &gc.inv());
    a.sub(&b).expect("same ring")
}
