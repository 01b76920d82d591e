//! Small reference pairs with known geometry.

use super::{HomogeneousPair, PairBuilder};
use crate::exact::{qi, QMatrix, Rational};

/// Abelian Lie algebra of dimension `g.rows()` with metric `g`.
pub fn abelian(g: QMatrix) -> HomogeneousPair {
    PairBuilder::lie_algebra(g.rows())
        .id("abelian")
        .name("abelian")
        .metric(g)
        .build()
        .expect("abelian algebra is valid for any nondegenerate metric")
}

/// h = so(2) acting by rotation on the (u₁, u₂) plane of an abelian m of
/// dimension 4: [e₁,u₁] = u₂, [e₁,u₂] = −u₁.
pub fn so2_toy_builder(g: QMatrix) -> PairBuilder {
    PairBuilder::new(1, 4)
        .id("so2-toy")
        .name("so(2) rotating the (u1,u2) plane")
        .bracket(0, 1, vec![qi(0), qi(0), qi(1), qi(0), qi(0)])
        .bracket(0, 2, vec![qi(0), qi(-1), qi(0), qi(0), qi(0)])
        .metric(g)
}

pub fn so2_toy() -> HomogeneousPair {
    so2_toy_builder(QMatrix::identity(4))
        .build()
        .expect("rotation preserves the identity metric")
}

/// Heisenberg algebra [u₁,u₂] = u₃ with g = identity.
pub fn heisenberg() -> HomogeneousPair {
    PairBuilder::lie_algebra(3)
        .id("heisenberg")
        .name("Heisenberg")
        .bracket_mm_i64(0, 1, &[0, 0, 1])
        .build()
        .expect("Heisenberg algebra is valid")
}

/// su(2) with [uᵢ,uⱼ] = ε_{ijk}u_k and the bi-invariant metric g = identity.
pub fn su2() -> HomogeneousPair {
    PairBuilder::lie_algebra(3)
        .id("su2")
        .name("su(2), round 3-sphere")
        .bracket_mm_i64(0, 1, &[0, 0, 1])
        .bracket_mm_i64(1, 2, &[1, 0, 0])
        .bracket_mm_i64(2, 0, &[0, 1, 0])
        .build()
        .expect("su(2) is valid")
}

/// su(2) ⊕ R with g = identity: S³ × R, Ricci-flat along R.
pub fn su2_plus_r() -> HomogeneousPair {
    PairBuilder::lie_algebra(4)
        .id("su2+r")
        .name("su(2) + R")
        .bracket_mm_i64(0, 1, &[0, 0, 1, 0])
        .bracket_mm_i64(1, 2, &[1, 0, 0, 0])
        .bracket_mm_i64(2, 0, &[0, 1, 0, 0])
        .build()
        .expect("su(2) + R is valid")
}

/// Real hyperbolic space as the solvable group [u₄,uᵢ] = uᵢ (i = 1..3) with
/// g = identity: Einstein with ϱ = −3g.
pub fn hyperbolic4() -> HomogeneousPair {
    let mut b = PairBuilder::lie_algebra(4).id("hyperbolic4").name("RH^4 solvable model");
    for i in 0..3 {
        let mut c = vec![Rational::zero(); 4];
        c[i] = Rational::one();
        b = b.bracket_mm(3, i, c);
    }
    b.build().expect("solvable model is valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::MVector;
    use crate::error::AlgebraError;

    #[test]
    fn so2_isotropy_is_rotation() {
        let p = so2_toy();
        let h = p.isotropy_matrix(0).unwrap();
        let expected =
            QMatrix::from_i64(&[&[0, -1, 0, 0], &[1, 0, 0, 0], &[0, 0, 0, 0], &[0, 0, 0, 0]]);
        assert_eq!(h, expected);
        assert!(p.metric_invariance_check().unwrap().invariant);
        assert!(p.is_invariant_field(&MVector::basis(4, 2)).unwrap());
        assert!(!p.is_invariant_field(&MVector::basis(4, 0)).unwrap());
        assert!(p.is_invariant_field(&MVector::zero(4)).unwrap());
    }

    #[test]
    fn so2_with_stretched_metric_is_not_invariant() {
        let g = QMatrix::diag(&[qi(1), qi(2), qi(1), qi(1)]);
        let err = so2_toy_builder(g.clone()).build().unwrap_err();
        assert!(matches!(err, AlgebraError::NonInvariantMetric(_)));
        let p = so2_toy_builder(g).build_unchecked().unwrap();
        let rep = p.metric_invariance_check().unwrap();
        assert!(!rep.invariant);
        assert_eq!(rep.violations, vec![0]);
    }

    #[test]
    fn lie_group_has_no_isotropy() {
        let p = heisenberg();
        assert_eq!(p.isotropy_matrix(0), Err(AlgebraError::NoIsotropy));
        assert!(p.metric_invariance_check().unwrap().invariant);
        assert!(p.is_invariant_field(&MVector::basis(3, 0)).unwrap());
    }

    #[test]
    fn abelian_extension_has_zero_isotropy() {
        let p = PairBuilder::new(1, 2).build().unwrap();
        assert!(p.isotropy_matrix(0).unwrap().is_zero());
        assert_eq!(p.isotropy_matrix(1), Err(AlgebraError::IsotropyIndex(1)));
    }

    #[test]
    fn samples_satisfy_jacobi() {
        for p in [heisenberg(), su2(), su2_plus_r(), hyperbolic4(), so2_toy()] {
            assert!(p.jacobi_check().is_empty(), "{}", p.id());
        }
    }
}
