//! Module-coordinate and norm laws on the bundled covers: reconstruction,
//! linearity over the base, the multiplication-matrix homomorphism, norm
//! multiplicativity and pullback scaling.

mod common;

use common::all_covers;
use gendiv_core::poly::Poly;
use gendiv_core::sample::Sampler;

#[test]
fn decomposition_reconstructs_and_is_linear() {
    for m in all_covers() {
        let src = m.source().ring().clone();
        let basis = m.module_basis();
        let mut s = Sampler::new(0x5EED);
        for _ in 0..25 {
            let a = s.poly(&src, 4, 4);
            let coords = m.decompose(&a).unwrap();
            assert_eq!(coords.len(), m.degree());

            // Reconstruction: sum of phi(c_i) * e_i equals a on the source.
            let mut rebuilt = Poly::zero(&src);
            for (c, e) in coords.iter().zip(&basis) {
                let pulled = m.pull_element(c).unwrap();
                let term = pulled.mul(&Poly::monomial(&src, e.clone(), src.field().one()));
                rebuilt = rebuilt.add(&term.unwrap()).unwrap();
            }
            let diff = rebuilt.sub(&a).unwrap();
            assert!(m.source().defining_ideal().contains(&diff).unwrap());

            // Additivity.
            let b = s.poly(&src, 4, 4);
            let sum_coords = m.decompose(&a.add(&b).unwrap()).unwrap();
            let b_coords = m.decompose(&b).unwrap();
            for i in 0..m.degree() {
                assert_eq!(sum_coords[i], coords[i].add(&b_coords[i]).unwrap());
            }

            // Base-linearity: decompose(phi(mu) * a) = mu * decompose(a) mod I_Y.
            let tgt = m.target().ring().clone();
            let mu = s.poly(&tgt, 2, 2);
            let scaled = m.pull_element(&mu).unwrap().mul(&a).unwrap();
            let scaled_coords = m.decompose(&scaled).unwrap();
            let target_ideal = m.target().defining_ideal();
            for i in 0..m.degree() {
                let expected = mu.mul(&coords[i]).unwrap();
                let diff = scaled_coords[i].sub(&expected).unwrap();
                assert!(target_ideal.contains(&diff).unwrap());
            }
        }
    }
}

#[test]
fn multiplication_matrices_are_a_ring_homomorphism() {
    for m in all_covers() {
        let src = m.source().ring().clone();
        let mut s = Sampler::new(0xCAFE);
        for _ in 0..12 {
            let a = s.poly(&src, 3, 3);
            let b = s.poly(&src, 3, 3);
            let lhs = m.mult_matrix(&a.mul(&b).unwrap()).unwrap();
            let rhs = m.mult_matrix(&a).unwrap().mul(&m.mult_matrix(&b).unwrap());
            assert_eq!(
                m.reduce_matrix(&lhs).unwrap(),
                m.reduce_matrix(&rhs).unwrap()
            );
        }
    }
}

#[test]
fn norm_is_multiplicative() {
    for m in all_covers() {
        let src = m.source().ring().clone();
        let target_ideal = m.target().defining_ideal();
        let mut s = Sampler::new(0xAB);
        for _ in 0..30 {
            let a = s.poly(&src, 3, 3);
            let b = s.poly(&src, 3, 3);
            let nab = m.norm_element(&a.mul(&b).unwrap()).unwrap();
            let na_nb = m
                .norm_element(&a)
                .unwrap()
                .mul(&m.norm_element(&b).unwrap())
                .unwrap();
            let diff = nab.sub(&na_nb).unwrap();
            assert!(target_ideal.contains(&diff).unwrap());
        }
    }
}

#[test]
fn norm_of_a_pullback_is_the_nth_power() {
    for m in all_covers() {
        let tgt = m.target().ring().clone();
        let target_ideal = m.target().defining_ideal();
        let n = m.degree() as u32;
        let mut s = Sampler::new(0xB0B);
        for _ in 0..20 {
            let mu = s.poly(&tgt, 2, 3);
            let norm = m.norm_element(&m.pull_element(&mu).unwrap()).unwrap();
            let diff = norm.sub(&mu.pow(n)).unwrap();
            assert!(target_ideal.contains(&diff).unwrap());
        }
    }
}
