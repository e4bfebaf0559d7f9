//! Buchberger's algorithm with the product and chain criteria, followed by
//! autoreduction. The output is the reduced Gröbner basis, sorted by ascending
//! leading monomial: a canonical form for the ideal under the given order.

use super::division::{normal_form_with, s_poly};
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::Poly;
use std::collections::BTreeSet;

pub fn reduced_groebner(gens: &[Poly], order: &MonomialOrder) -> Vec<Poly> {
    let mut basis: Vec<Poly> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    if basis.is_empty() {
        return Vec::new();
    }

    let lm = |p: &Poly, order: &MonomialOrder| -> Monomial {
        p.leading_under(order).expect("nonzero basis element").0.clone()
    };
    let mut lms: Vec<Monomial> = basis.iter().map(|g| lm(g, order)).collect();

    // Pending pairs (i, j), i < j. Every unordered pair enters exactly once,
    // so "not pending" below means "already considered".
    let mut pending: BTreeSet<(usize, usize)> = BTreeSet::new();
    for j in 1..basis.len() {
        for i in 0..j {
            pending.insert((i, j));
        }
    }

    while !pending.is_empty() {
        // Normal selection: minimal lcm degree, ties by index.
        let &(i, j) = pending
            .iter()
            .min_by_key(|(i, j)| (lms[*i].lcm(&lms[*j]).total_degree(), *i, *j))
            .expect("nonempty");
        pending.remove(&(i, j));

        let lcm = lms[i].lcm(&lms[j]);
        if lms[i].coprime(&lms[j]) {
            continue; // product criterion
        }
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && lms[k].divides(&lcm)
                && !pending.contains(&key(i, k))
                && !pending.contains(&key(j, k))
        });
        if chain {
            continue; // chain criterion
        }

        let s = s_poly(&basis[i], &basis[j], order);
        let r = normal_form_with(&s, &basis, order);
        if r.is_zero() {
            continue;
        }
        let t = basis.len();
        lms.push(lm(&r, order));
        basis.push(r.monic_under(order));
        for k in 0..t {
            pending.insert((k, t));
        }
    }

    autoreduce(basis, order)
}

fn key(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Minimalizes and tail-reduces a Gröbner basis into the reduced basis.
fn autoreduce(basis: Vec<Poly>, order: &MonomialOrder) -> Vec<Poly> {
    // Keep only elements whose leading monomial is not divisible by another
    // kept one; ascending scan guarantees divisors are seen first.
    let mut indexed: Vec<(Monomial, Poly)> = basis
        .into_iter()
        .map(|g| {
            let m = g.leading_under(order).expect("nonzero").0.clone();
            (m, g)
        })
        .collect();
    indexed.sort_by(|a, b| order.cmp(&a.0, &b.0));
    let mut kept: Vec<(Monomial, Poly)> = Vec::new();
    for (m, g) in indexed {
        if !kept.iter().any(|(km, _)| km.divides(&m)) {
            kept.push((m, g));
        }
    }

    // Tail reduction. Leading monomials are pairwise non-dividing, so each
    // element keeps its leading term and one sequential pass suffices.
    for i in 0..kept.len() {
        let others: Vec<Poly> = kept
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, (_, g))| g.clone())
            .collect();
        let reduced = normal_form_with(&kept[i].1, &others, order);
        debug_assert!(!reduced.is_zero());
        kept[i].1 = reduced.monic_under(order);
    }
    kept.into_iter().map(|(_, g)| g).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;
    use crate::poly::PolyRing;
    use crate::scalar::Field;
    use std::sync::Arc;

    fn qring(vars: &[&str]) -> Arc<PolyRing> {
        PolyRing::new(vars.iter().map(|s| s.to_string()).collect(), Field::Rational)
    }

    fn polys(r: &Arc<PolyRing>, texts: &[&str]) -> Vec<Poly> {
        texts.iter().map(|t| parse_poly(t, r).unwrap()).collect()
    }

    #[test]
    fn graph_ideal_eliminates_to_node_relation() {
        // The combined ideal of the double cover of the node by the tacnode.
        let r = qring(&["x", "y", "s", "t"]);
        let gens = polys(&r, &["y^2 - x^4", "s - x^2", "t - y"]);
        let order = MonomialOrder::eliminating([0usize, 1]);
        let gb = reduced_groebner(&gens, &order);
        let printed: Vec<String> = gb.iter().map(|g| g.to_string()).collect();
        assert_eq!(printed, vec!["s^2 - t^2", "y - t", "x^2 - s"]);
    }

    #[test]
    fn already_reduced_inputs_pass_through() {
        let r = qring(&["x", "y"]);
        let gb = reduced_groebner(&polys(&r, &["x", "y"]), &MonomialOrder::Grevlex);
        assert_eq!(gb, polys(&r, &["y", "x"]));
        let single = reduced_groebner(&polys(&r, &["3*y^2 - 3*x^4"]), &MonomialOrder::Grevlex);
        assert_eq!(single, polys(&r, &["x^4 - y^2"]));
    }

    #[test]
    fn normal_form_examples() {
        let r = qring(&["x", "y"]);
        let gb = reduced_groebner(&polys(&r, &["y^2 - x^4"]), &MonomialOrder::Grevlex);
        let nf = normal_form_with(
            &parse_poly("x^4", &r).unwrap(),
            &gb,
            &MonomialOrder::Grevlex,
        );
        assert_eq!(nf, parse_poly("y^2", &r).unwrap());

        // y^2 reduces through y -> t into the (s, t)-block; the exact remainder
        // depends on the grevlex tie-break between s^2 and t^2 (s^2 leads, so
        // t^2 is already normal), and the difference stays in the ideal.
        let big = qring(&["x", "y", "s", "t"]);
        let order = MonomialOrder::eliminating([0usize, 1]);
        let basis = polys(&big, &["x^2 - s", "y - t", "t^2 - s^2"]);
        let y2 = parse_poly("y^2", &big).unwrap();
        let nf = normal_form_with(&y2, &basis, &order);
        assert_eq!(nf, parse_poly("t^2", &big).unwrap());
        let diff = y2.sub(&parse_poly("s^2", &big).unwrap()).unwrap();
        assert!(normal_form_with(&diff, &basis, &order).is_zero());
    }
}
