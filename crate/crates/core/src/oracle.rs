//! Degree-bounded linear-algebra membership cross-check.
//!
//! Decides whether `f = Σ q_i g_i` has a solution with `deg q_i ≤ bound` by
//! solving one exact linear system over the coefficient field. Independent of
//! the Gröbner kernel; used by the verification suite and tests to
//! cross-check normal-form membership. With the default bound it is a
//! cross-check, not a decision procedure.

use crate::monomial::Monomial;
use crate::poly::Poly;
use crate::scalar::Scalar;
use std::collections::HashMap;

/// Default cofactor degree bound: twice the largest input degree plus two.
pub fn default_bound(f: &Poly, gens: &[Poly]) -> u32 {
    let max = gens
        .iter()
        .map(|g| g.total_degree())
        .chain(std::iter::once(f.total_degree()))
        .max()
        .unwrap_or(0);
    (2 * max + 2) as u32
}

/// True when `f` is a combination of `gens` with cofactors of total degree
/// at most `bound`.
pub fn membership_bounded(f: &Poly, gens: &[Poly], bound: u32) -> bool {
    if f.is_zero() {
        return true;
    }
    let gens: Vec<&Poly> = gens.iter().filter(|g| !g.is_zero()).collect();
    if gens.is_empty() {
        return false;
    }
    let ring = f.ring();
    let n = ring.nvars();
    let max_gen_deg = gens.iter().map(|g| g.total_degree()).max().unwrap() as u32;
    let row_degree = bound + max_gen_deg;
    if f.total_degree() as u32 > row_degree {
        return false;
    }

    let row_monos = monomials_up_to(n, row_degree);
    let row_index: HashMap<&Monomial, usize> =
        row_monos.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let col_monos = monomials_up_to(n, bound);

    let field = ring.field();
    let zero = field.zero();
    let ncols = gens.len() * col_monos.len();
    // Rows hold the coefficient columns plus the augmented entry for f.
    let mut rows = vec![vec![zero.clone(); ncols + 1]; row_monos.len()];
    for (gi, g) in gens.iter().enumerate() {
        for (mi, m) in col_monos.iter().enumerate() {
            let col = gi * col_monos.len() + mi;
            for (gm, gc) in g.terms() {
                let product = gm.mul(m);
                let row = row_index[&product];
                rows[row][col] = rows[row][col].add(gc);
            }
        }
    }
    for (fm, fc) in f.terms() {
        let row = row_index[fm];
        rows[row][ncols] = fc.clone();
    }

    consistent(&mut rows, ncols)
}

/// Forward elimination over the coefficient columns; the system is solvable
/// exactly when no eliminated row keeps a nonzero augmented entry.
fn consistent(rows: &mut [Vec<Scalar>], ncols: usize) -> bool {
    let nrows = rows.len();
    let mut pivot_row = 0;
    for col in 0..ncols {
        if pivot_row == nrows {
            break;
        }
        let Some(r) = (pivot_row..nrows).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(pivot_row, r);
        let inv = rows[pivot_row][col].inv();
        for r in pivot_row + 1..nrows {
            if rows[r][col].is_zero() {
                continue;
            }
            let factor = rows[r][col].mul(&inv);
            for c in col..=ncols {
                let delta = rows[pivot_row][c].mul(&factor);
                rows[r][c] = rows[r][c].sub(&delta);
            }
        }
        pivot_row += 1;
    }
    rows[pivot_row..].iter().all(|row| row[ncols].is_zero())
}

/// All monomials of total degree at most `degree` in `n` variables.
pub fn monomials_up_to(n: usize, degree: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut exps = vec![0u32; n];
    fn rec(out: &mut Vec<Monomial>, exps: &mut Vec<u32>, var: usize, left: u32) {
        if var == exps.len() {
            out.push(Monomial(exps.clone()));
            return;
        }
        for e in 0..=left {
            exps[var] = e;
            rec(out, exps, var + 1, left - e);
        }
        exps[var] = 0;
    }
    rec(&mut out, &mut exps, 0, degree);
    out
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

    #[test]
    fn detects_membership_and_non_membership() {
        let r = qring(&["x", "y"]);
        let gens = [
            parse_poly("y - x^2", &r).unwrap(),
            parse_poly("y + x^2", &r).unwrap(),
        ];
        let f = parse_poly("y^2 - x^4", &r).unwrap();
        assert!(membership_bounded(&f, &gens, default_bound(&f, &gens)));
        let one = parse_poly("1", &r).unwrap();
        assert!(!membership_bounded(&one, &gens[..1], default_bound(&one, &gens[..1])));
    }

    #[test]
    fn respects_the_degree_bound() {
        let r = qring(&["x"]);
        let gens = [parse_poly("x^3", &r).unwrap()];
        let f = parse_poly("x^5", &r).unwrap();
        assert!(!membership_bounded(&f, &gens, 1));
        assert!(membership_bounded(&f, &gens, 2));
    }

    #[test]
    fn monomial_enumeration_counts() {
        // C(d + n, n) monomials of degree <= d in n variables.
        assert_eq!(monomials_up_to(2, 3).len(), 10);
        assert_eq!(monomials_up_to(3, 2).len(), 10);
        assert_eq!(monomials_up_to(1, 5).len(), 6);
    }
}
