//! Property tests for the exterior-algebra laws.

use exalg::{ExactScalar, MultiVector};
use proptest::prelude::*;

fn arb_scalar() -> impl Strategy<Value = ExactScalar> {
    (-8i64..=8, 1i64..=4, -8i64..=8, 1i64..=4).prop_map(|(a, b, c, d)| {
        ExactScalar::ratio(a, b) + ExactScalar::ratio_i(c, d)
    })
}

fn arb_form(n: u8) -> impl Strategy<Value = MultiVector> {
    let dim = 2 * n;
    proptest::collection::vec((0u32..(1u32 << dim), arb_scalar()), 0..6).prop_map(
        move |terms| {
            let mut m = MultiVector::zero(dim);
            for (mask, c) in terms {
                m.add_term(mask, c);
            }
            m
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn wedge_is_bilinear_and_associative(
        a in arb_form(3), b in arb_form(3), c in arb_form(3), s in arb_scalar()
    ) {
        let ab_c = a.wedge(&b).unwrap().wedge(&c).unwrap();
        let a_bc = a.wedge(&b.wedge(&c).unwrap()).unwrap();
        prop_assert_eq!(ab_c, a_bc);
        let lhs = a.scale(&s).wedge(&b).unwrap();
        let rhs = a.wedge(&b).unwrap().scale(&s);
        prop_assert_eq!(lhs, rhs);
        let sum = (a.clone() + c.clone()).wedge(&b).unwrap();
        let split = a.wedge(&b).unwrap() + c.wedge(&b).unwrap();
        prop_assert_eq!(sum, split);
    }

    #[test]
    fn wedge_is_graded_anticommutative(a in arb_form(3), b in arb_form(3)) {
        for p in 0..=6u8 {
            for q in 0..=6u8 {
                let x = a.grade(p);
                let y = b.grade(q);
                let xy = x.wedge(&y).unwrap();
                let yx = y.wedge(&x).unwrap();
                let expected = if (p as u32 * q as u32) % 2 == 0 { yx.clone() } else { -yx };
                prop_assert_eq!(xy, expected);
            }
        }
    }

    #[test]
    fn star_preserves_the_hermitian_norm(a in arb_form(3)) {
        let lhs = a.hermitian_inner(&a).unwrap();
        let star = a.hodge_star();
        let rhs = star.hermitian_inner(&star).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn conjugation_is_an_involution_commuting_with_wedge(a in arb_form(2), b in arb_form(2)) {
        prop_assert_eq!(a.conj().conj(), a.clone());
        let lhs = a.wedge(&b).unwrap().conj();
        let rhs = a.conj().wedge(&b.conj()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}
