//! Monomials and monomial orders.

use std::cmp::Ordering;

/// Exponent vector, one entry per declared ring variable.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn unit(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        let mut e = vec![0; nvars];
        e[index] = 1;
        Monomial(e)
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn is_unit(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Quotient `other / self`; caller must ensure divisibility.
    pub fn div(&self, other: &Monomial) -> Monomial {
        Monomial(
            other
                .0
                .iter()
                .zip(&self.0)
                .map(|(b, a)| b.checked_sub(*a).expect("monomial not divisible"))
                .collect(),
        )
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    /// True when the two monomials have no variable in common.
    pub fn coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Indices of the variables appearing with positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, e)| **e > 0)
            .map(|(i, _)| i)
    }

    /// `Some(i)` when the monomial is a positive power of the single variable `i`.
    pub fn pure_power(&self) -> Option<usize> {
        let mut found = None;
        for (i, &e) in self.0.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some(i);
            }
        }
        found
    }

    /// True when every variable in the support lies in `vars`.
    pub fn supported_on(&self, vars: &[bool]) -> bool {
        self.0
            .iter()
            .enumerate()
            .all(|(i, &e)| e == 0 || vars[i])
    }
}

/// Total monomial order used for division and Gröbner bases.
///
/// `Grevlex` is graded reverse lexicographic on the declared variable list.
/// `Block` compares the front variables first (grevlex among themselves),
/// then the remaining variables; it is the elimination order for the front
/// block.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Grevlex,
    Block { front: Vec<usize> },
}

impl MonomialOrder {
    /// Elimination order whose front block is the given variable set.
    pub fn eliminating(front: impl IntoIterator<Item = usize>) -> Self {
        let mut f: Vec<usize> = front.into_iter().collect();
        f.sort_unstable();
        f.dedup();
        MonomialOrder::Block { front: f }
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.nvars(), b.nvars());
        match self {
            MonomialOrder::Grevlex => grevlex_all(a, b),
            MonomialOrder::Block { front } => {
                let mask = front_mask(front, a.nvars());
                grevlex_masked(a, b, &mask, true)
                    .then_with(|| grevlex_masked(a, b, &mask, false))
            }
        }
    }

    /// The largest term index of a term list already sorted is 0; this helper
    /// finds the maximum of an arbitrary slice of monomials under `self`.
    pub fn max_index(&self, monos: &[Monomial]) -> Option<usize> {
        let mut best: Option<usize> = None;
        for (i, m) in monos.iter().enumerate() {
            match best {
                None => best = Some(i),
                Some(j) => {
                    if self.cmp(m, &monos[j]) == Ordering::Greater {
                        best = Some(i);
                    }
                }
            }
        }
        best
    }
}

fn front_mask(front: &[usize], nvars: usize) -> Vec<bool> {
    let mut mask = vec![false; nvars];
    for &i in front {
        mask[i] = true;
    }
    mask
}

fn grevlex_all(a: &Monomial, b: &Monomial) -> Ordering {
    match a.total_degree().cmp(&b.total_degree()) {
        Ordering::Equal => {}
        other => return other,
    }
    // Graded tie-break: the last variable where exponents differ decides,
    // smaller exponent there means the larger monomial.
    for i in (0..a.0.len()).rev() {
        match a.0[i].cmp(&b.0[i]) {
            Ordering::Equal => {}
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}

fn grevlex_masked(a: &Monomial, b: &Monomial, mask: &[bool], in_front: bool) -> Ordering {
    let deg = |m: &Monomial| -> u64 {
        m.0.iter()
            .enumerate()
            .filter(|(i, _)| mask[*i] == in_front)
            .map(|(_, &e)| e as u64)
            .sum()
    };
    match deg(a).cmp(&deg(b)) {
        Ordering::Equal => {}
        other => return other,
    }
    for i in (0..a.0.len()).rev() {
        if mask[i] != in_front {
            continue;
        }
        match a.0[i].cmp(&b.0[i]) {
            Ordering::Equal => {}
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(exps: &[u32]) -> Monomial {
        Monomial(exps.to_vec())
    }

    #[test]
    fn grevlex_ranks_degree_first() {
        let o = MonomialOrder::Grevlex;
        // x^4 > y^2 in k[x, y]
        assert_eq!(o.cmp(&m(&[4, 0]), &m(&[0, 2])), Ordering::Greater);
        // x^2 > x*y > y^2
        assert_eq!(o.cmp(&m(&[2, 0]), &m(&[1, 1])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[1, 1]), &m(&[0, 2])), Ordering::Greater);
    }

    #[test]
    fn block_order_eliminates_front() {
        // Variables (x, y, s, t); front block {x, y}.
        let o = MonomialOrder::eliminating([0usize, 1]);
        // Any monomial containing x or y beats any pure (s, t) monomial.
        assert_eq!(o.cmp(&m(&[1, 0, 0, 0]), &m(&[0, 0, 5, 5])), Ordering::Greater);
        // Pure back-block monomials compare by grevlex on (s, t).
        assert_eq!(o.cmp(&m(&[0, 0, 2, 0]), &m(&[0, 0, 0, 2])), Ordering::Greater);
    }

    #[test]
    fn unit_is_minimal() {
        let o = MonomialOrder::Grevlex;
        let u = Monomial::unit(3);
        assert_eq!(o.cmp(&m(&[0, 0, 1]), &u), Ordering::Greater);
        assert_eq!(o.cmp(&u, &u), Ordering::Equal);
    }
}
