//! Certified finite free morphisms between affine curves.
//!
//! A morphism is presented by one source-ring image per target variable. The
//! constructor certifies, over the combined ring `k[x̄, ȳ]`, that the map is
//! well defined, that it presents the target coordinate ring exactly, and
//! that the source ring is a free module over the target ring. The canonical
//! module basis is the set of source monomials standard with respect to the
//! pure-source leading monomials of the combined basis; its size is the
//! degree of the cover.
//!
//! On the free module, multiplication by a ring element is an exact matrix
//! over the target ring, and its determinant is the norm of the element.

use crate::curve::Curve;
use crate::error::{Error, Result};
use crate::groebner::{normal_form_with, standard_monomials_of, Ideal};
use crate::matrix::PolyMatrix;
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{same_ring, Poly, PolyRing};
use std::sync::Arc;

#[derive(Debug)]
struct MorphismData {
    source: Curve,
    target: Curve,
    images: Vec<Poly>,
    combined: Arc<PolyRing>,
    /// Reduced basis of `I_X + (y_j - φ_j)` under the source-eliminating order.
    combined_basis: Vec<Poly>,
    order: MonomialOrder,
    /// Standard source monomials, in the combined ring, ascending; entry 0 is 1.
    basis_monomials: Vec<Monomial>,
    degree: usize,
}

/// A certified finite free morphism of affine curves.
#[derive(Debug, Clone)]
pub struct FiniteMorphism(Arc<MorphismData>);

impl FiniteMorphism {
    /// Builds and certifies the morphism; every failure is reported as the
    /// specific certificate that could not be established. The freeness
    /// certificate (no mixed leading monomials) is sufficient but not
    /// necessary, so a rejection may be a false negative.
    pub fn build(source: &Curve, target: &Curve, images: Vec<Poly>) -> Result<FiniteMorphism> {
        let src_ring = source.ring();
        let tgt_ring = target.ring();
        if src_ring.field() != tgt_ring.field() {
            return Err(Error::RingMismatch);
        }
        if images.len() != tgt_ring.nvars() {
            return Err(Error::ImageCount {
                given: images.len(),
                expected: tgt_ring.nvars(),
            });
        }
        for img in &images {
            if !same_ring(img.ring(), src_ring) {
                return Err(Error::RingMismatch);
            }
        }
        for v in tgt_ring.vars() {
            if src_ring.var_index(v).is_some() {
                return Err(Error::VariableCollision { name: v.clone() });
            }
        }

        // Well-definedness: every target relation vanishes after substitution.
        for g in target.defining_ideal().generators() {
            let pulled = g.substitute(src_ring, &images)?;
            if !source.defining_ideal().contains(&pulled)? {
                return Err(Error::NotWellDefined {
                    generator: g.to_string(),
                });
            }
        }

        let nx = src_ring.nvars();
        let ny = tgt_ring.nvars();
        let combined = src_ring.extended(tgt_ring.vars());
        let src_map: Vec<usize> = (0..nx).collect();
        let tgt_map: Vec<usize> = (nx..nx + ny).collect();

        let mut gens: Vec<Poly> = source
            .defining_ideal()
            .generators()
            .iter()
            .map(|g| g.lift(&combined, &src_map))
            .collect();
        for (j, img) in images.iter().enumerate() {
            let y = Poly::var(&combined, nx + j);
            gens.push(y.sub(&img.lift(&combined, &src_map))?);
        }
        let graph = Ideal::new(&combined, gens);
        let order = MonomialOrder::eliminating(0..nx);
        let combined_basis = graph.reduced_basis_under(&order);

        // Exactness: eliminating the source variables recovers the target ideal.
        let src_mask: Vec<bool> = (0..combined.nvars()).map(|i| i < nx).collect();
        let pure_target: Vec<Poly> = combined_basis
            .iter()
            .filter(|g| {
                g.terms()
                    .iter()
                    .all(|(m, _)| m.support().all(|i| !src_mask[i]))
            })
            .map(|g| g.restrict(tgt_ring, &tgt_map).expect("free of source vars"))
            .collect();
        let elim = Ideal::new(tgt_ring, pure_target);
        if !elim.equal(target.defining_ideal())? {
            return Err(Error::TargetNotExact);
        }

        // Freeness: every leading monomial is purely in the source block or
        // purely in the target block.
        let mut pure_source_lms: Vec<Monomial> = Vec::new();
        for g in &combined_basis {
            let (lm, _) = g.leading_under(&order).expect("nonzero basis element");
            let in_src = lm.support().any(|i| src_mask[i]);
            let in_tgt = lm.support().any(|i| !src_mask[i]);
            if in_src && in_tgt {
                let witness = Poly::monomial(&combined, lm.clone(), combined.field().one());
                return Err(Error::FreenessNotCertified {
                    witness: witness.to_string(),
                });
            }
            if in_src || lm.is_unit() {
                pure_source_lms.push(lm.clone());
            }
        }

        // Module basis: source monomials standard w.r.t. the pure-source
        // leading monomials, restricted to the source exponents.
        let projected: Vec<Monomial> = pure_source_lms
            .iter()
            .map(|m| Monomial(m.0[..nx].to_vec()))
            .collect();
        let std_monos = standard_monomials_of(&projected, nx).ok_or(Error::NotFinite)?;
        if std_monos.is_empty() {
            return Err(Error::Internal(
                "combined ideal is the unit ideal".to_string(),
            ));
        }
        let basis_monomials: Vec<Monomial> = std_monos
            .into_iter()
            .map(|m| {
                let mut e = m.0;
                e.resize(nx + ny, 0);
                Monomial(e)
            })
            .collect();
        debug_assert!(basis_monomials[0].is_unit());
        let degree = basis_monomials.len();

        Ok(FiniteMorphism(Arc::new(MorphismData {
            source: source.clone(),
            target: target.clone(),
            images,
            combined,
            combined_basis,
            order,
            basis_monomials,
            degree,
        })))
    }

    pub fn source(&self) -> &Curve {
        &self.0.source
    }

    pub fn target(&self) -> &Curve {
        &self.0.target
    }

    pub fn images(&self) -> &[Poly] {
        &self.0.images
    }

    /// Degree of the cover: the rank of the free module.
    pub fn degree(&self) -> usize {
        self.0.degree
    }

    /// The module basis as monomials of the source ring, ascending; the first
    /// entry is the unit monomial.
    pub fn module_basis(&self) -> Vec<Monomial> {
        let nx = self.0.source.ring().nvars();
        self.0
            .basis_monomials
            .iter()
            .map(|m| Monomial(m.0[..nx].to_vec()))
            .collect()
    }

    /// Substitutes the defining images into a target-ring polynomial.
    pub fn pull_element(&self, g: &Poly) -> Result<Poly> {
        g.substitute(self.0.source.ring(), &self.0.images)
    }

    /// Coordinates of a source element in the module basis: the unique
    /// target-ring vector `c` with `a ≡ Σ c_i e_i` modulo the combined ideal.
    pub fn decompose(&self, a: &Poly) -> Result<Vec<Poly>> {
        let data = &*self.0;
        if !same_ring(a.ring(), data.source.ring()) {
            return Err(Error::RingMismatch);
        }
        let nx = data.source.ring().nvars();
        let ny = data.target.ring().nvars();
        let src_map: Vec<usize> = (0..nx).collect();
        let tgt_map: Vec<usize> = (nx..nx + ny).collect();
        let lifted = a.lift(&data.combined, &src_map);
        let nf = normal_form_with(&lifted, &data.combined_basis, &data.order);

        let mut coords = vec![Poly::zero(data.target.ring()); data.degree];
        for (m, c) in nf.terms() {
            let src_part = Monomial({
                let mut e = m.0.clone();
                for item in e.iter_mut().skip(nx) {
                    *item = 0;
                }
                e
            });
            let tgt_part = Monomial({
                let mut e = m.0.clone();
                for item in e.iter_mut().take(nx) {
                    *item = 0;
                }
                e
            });
            let idx = data
                .basis_monomials
                .iter()
                .position(|b| *b == src_part)
                .ok_or_else(|| {
                    Error::Internal(format!(
                        "normal form contains the non-basis source monomial in `{nf}`"
                    ))
                })?;
            let term = Poly::monomial(&data.combined, tgt_part, c.clone())
                .restrict(data.target.ring(), &tgt_map)
                .expect("pure target monomial");
            coords[idx] = coords[idx].add(&term)?;
        }
        Ok(coords)
    }

    /// Matrix of multiplication by `a` on the free module: column `i` holds
    /// the coordinates of `a·e_i`.
    pub fn mult_matrix(&self, a: &Poly) -> Result<PolyMatrix> {
        let src_ring = self.0.source.ring();
        let basis = self.module_basis();
        let one = src_ring.field().one();
        let mut columns = Vec::with_capacity(basis.len());
        for e in &basis {
            let ae = a.mul(&Poly::monomial(src_ring, e.clone(), one.clone()))?;
            columns.push(self.decompose(&ae)?);
        }
        Ok(PolyMatrix::from_columns(
            self.0.target.ring(),
            basis.len(),
            &columns,
        ))
    }

    /// Norm of a source element: the raw determinant of its multiplication
    /// matrix, reduced modulo the target ideal. `N(x) = -s` on the bundled
    /// double cover; divisor-level consumers use the generated ideal, which
    /// is insensitive to the unit.
    pub fn norm_element(&self, a: &Poly) -> Result<Poly> {
        let det = self.mult_matrix(a)?.det();
        self.0.target.defining_ideal().normal_form(&det)
    }

    /// Reduces a matrix over the target ring entrywise modulo the target ideal.
    pub fn reduce_matrix(&self, m: &PolyMatrix) -> Result<PolyMatrix> {
        let tgt = self.0.target.defining_ideal();
        let mut entries = Vec::with_capacity(m.rows() * m.cols());
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                entries.push(tgt.normal_form(m.at(i, j))?);
            }
        }
        Ok(PolyMatrix::new(m.ring(), m.rows(), m.cols(), entries))
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

    fn curve(name: &str, vars: &[&str], gens: &[&str]) -> Curve {
        let r = qring(vars);
        Curve::validate(
            name,
            &r,
            gens.iter().map(|t| parse_poly(t, &r).unwrap()).collect(),
        )
        .unwrap()
    }

    pub(crate) fn tacnode_cover() -> FiniteMorphism {
        let x = curve("X", &["x", "y"], &["y^2 - x^4"]);
        let y = curve("Y", &["s", "t"], &["t^2 - s^2"]);
        let images = vec![
            parse_poly("x^2", x.ring()).unwrap(),
            parse_poly("y", x.ring()).unwrap(),
        ];
        FiniteMorphism::build(&x, &y, images).unwrap()
    }

    fn basis_strings(m: &FiniteMorphism) -> Vec<String> {
        let ring = m.source().ring().clone();
        m.module_basis()
            .iter()
            .map(|b| Poly::monomial(&ring, b.clone(), ring.field().one()).to_string())
            .collect()
    }

    #[test]
    fn tacnode_cover_certifies_with_basis_one_x() {
        let m = tacnode_cover();
        assert_eq!(m.degree(), 2);
        assert_eq!(basis_strings(&m), vec!["1", "x"]);
    }

    #[test]
    fn elliptic_chart_over_the_line() {
        let x = curve("E", &["x", "y"], &["y^2 - x^3 + x"]);
        let line = curve("A1", &["s"], &[]);
        let m = FiniteMorphism::build(&x, &line, vec![parse_poly("x", x.ring()).unwrap()])
            .unwrap();
        assert_eq!(m.degree(), 2);
        assert_eq!(basis_strings(&m), vec!["1", "y"]);
    }

    #[test]
    fn renamed_identity_has_degree_one() {
        let x = curve("X", &["x", "y"], &["y^2 - x^4"]);
        let y = curve("X2", &["u", "v"], &["v^2 - u^4"]);
        let images = vec![
            parse_poly("x", x.ring()).unwrap(),
            parse_poly("y", x.ring()).unwrap(),
        ];
        let m = FiniteMorphism::build(&x, &y, images).unwrap();
        assert_eq!(m.degree(), 1);
        assert_eq!(basis_strings(&m), vec!["1"]);
    }

    #[test]
    fn ill_defined_map_is_rejected() {
        let x = curve("X", &["x", "y"], &["y^2 - x^4"]);
        let y = curve("Y", &["s", "t"], &["t^2 - s^2"]);
        // s -> x, t -> y does not send t^2 - s^2 into (y^2 - x^4).
        let images = vec![
            parse_poly("x", x.ring()).unwrap(),
            parse_poly("y", x.ring()).unwrap(),
        ];
        assert!(matches!(
            FiniteMorphism::build(&x, &y, images),
            Err(Error::NotWellDefined { .. })
        ));
    }

    #[test]
    fn non_finite_map_is_rejected() {
        // Projection of the plane curve xy = 1 to the line via s -> x is not
        // finite over the chart: no pure power of y appears.
        let x = curve("H", &["x", "y"], &["x*y - 1"]);
        let line = curve("A1", &["s"], &[]);
        let err =
            FiniteMorphism::build(&x, &line, vec![parse_poly("x", x.ring()).unwrap()])
                .unwrap_err();
        assert!(matches!(err, Error::NotFinite | Error::FreenessNotCertified { .. }));
    }

    #[test]
    fn non_exact_target_is_rejected() {
        // s -> x^2, t -> x^2 lands in the diagonal t = s, which the declared
        // node relation does not cut out.
        let x = curve("X", &["x", "y"], &["y^2 - x^4"]);
        let y = curve("Y", &["s", "t"], &["t^2 - s^2"]);
        let images = vec![
            parse_poly("x^2", x.ring()).unwrap(),
            parse_poly("x^2", x.ring()).unwrap(),
        ];
        assert!(matches!(
            FiniteMorphism::build(&x, &y, images),
            Err(Error::TargetNotExact)
        ));
    }

    #[test]
    fn decomposition_examples() {
        let m = tacnode_cover();
        let xr = m.source().ring().clone();
        let yr = m.target().ring().clone();
        let dec = |text: &str| -> Vec<String> {
            m.decompose(&parse_poly(text, &xr).unwrap())
                .unwrap()
                .iter()
                .map(|p| p.to_string())
                .collect()
        };
        assert_eq!(dec("x^3"), vec!["0", "s"]);
        assert_eq!(dec("1"), vec!["1", "0"]);
        assert_eq!(dec("x*y"), vec!["0", "t"]);

        // Reconstruction: x^3 = 0*1 + s*x modulo the combined ideal.
        let coords = m.decompose(&parse_poly("x^3", &xr).unwrap()).unwrap();
        assert_eq!(coords[1], parse_poly("s", &yr).unwrap());
    }

    #[test]
    fn multiplication_matrices_and_norms() {
        let m = tacnode_cover();
        let xr = m.source().ring().clone();
        let yr = m.target().ring().clone();
        let p = |text: &str| parse_poly(text, &xr).unwrap();

        let mx = m.mult_matrix(&p("x")).unwrap();
        let show: Vec<String> = (0..2)
            .flat_map(|i| (0..2).map(move |j| (i, j)))
            .map(|(i, j)| mx.at(i, j).to_string())
            .collect();
        assert_eq!(show, vec!["0", "s", "1", "0"]);

        assert_eq!(
            m.mult_matrix(&p("1")).unwrap(),
            PolyMatrix::identity(&yr, 2)
        );

        let my = m.mult_matrix(&p("y")).unwrap();
        let t = parse_poly("t", &yr).unwrap();
        assert_eq!(my.at(0, 0), &t);
        assert_eq!(my.at(1, 1), &t);
        assert!(my.at(0, 1).is_zero() && my.at(1, 0).is_zero());

        assert_eq!(m.norm_element(&p("x")).unwrap().to_string(), "-s");
        assert!(m.norm_element(&p("1")).unwrap().is_one());
        assert_eq!(m.norm_element(&p("y")).unwrap().to_string(), "t^2");
    }
}
