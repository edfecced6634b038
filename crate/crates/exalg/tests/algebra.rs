//! Pointwise algebra oracles: wedge/contraction/star values checked exactly,
//! plus the splitting invariants.

use exalg::{
    lefschetz_split_3form, pq_split, sd_asd_split, ExactScalar, ExalgError, MultiVector,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn i() -> ExactScalar {
    ExactScalar::i()
}

fn random_form(rng: &mut ChaCha8Rng, n: u8) -> MultiVector {
    let dim = 2 * n;
    let mut m = MultiVector::zero(dim);
    for _ in 0..8 {
        let mask = rng.gen_range(0..(1u32 << dim));
        let num = rng.gen_range(-6i64..=6);
        let den = rng.gen_range(1i64..=4);
        let re = ExactScalar::ratio(num, den);
        let im = ExactScalar::ratio_i(rng.gen_range(-6i64..=6), rng.gen_range(1i64..=4));
        m.add_term(mask, re + im);
    }
    m
}

#[test]
fn wedge_basis_products() {
    let n = 3;
    let dx1 = MultiVector::dx(n, 1);
    let dy1 = MultiVector::dy(n, 1);
    let prod = dx1.wedge(&dy1).unwrap();
    assert_eq!(prod, MultiVector::monomial(6, 0b11, ExactScalar::one()));
    assert!(dx1.wedge(&dx1).unwrap().is_zero());
}

#[test]
fn wedge_dimension_mismatch_is_an_error() {
    let a = MultiVector::dx(2, 1);
    let b = MultiVector::dx(3, 1);
    assert_eq!(a.wedge(&b), Err(ExalgError::DimensionMismatch(4, 6)));
}

#[test]
fn wedge_of_conjugates() {
    // dzbar1 ^ dzbar2 expands to a 4-term real-basis form; conjugating the
    // product recovers dz1 ^ dz2. Expansion done by hand:
    // (dx1 - i dy1)(dx2 - i dy2) = dx1dx2 - i dx1dy2 - i dy1dx2 - dy1dy2
    let n = 2;
    let prod = MultiVector::dzbar(n, 1).wedge(&MultiVector::dzbar(n, 2)).unwrap();
    let mut expected = MultiVector::zero(4);
    expected.add_term(0b0101, ExactScalar::one()); // dx1 dx2
    expected.add_term(0b1001, -i()); // dx1 dy2
    expected.add_term(0b0110, -i()); // dy1 dx2
    expected.add_term(0b1010, -ExactScalar::one()); // dy1 dy2
    assert_eq!(prod, expected);
    let dz_prod = MultiVector::dz(n, 1).wedge(&MultiVector::dz(n, 2)).unwrap();
    assert_eq!(prod.conj(), dz_prod);
}

#[test]
fn contraction_metric_values() {
    let n = 3;
    let dzb1 = MultiVector::dzbar(n, 1);
    let dzb2 = MultiVector::dzbar(n, 2);
    // <dzbar, dzbar> = |dx|^2 + |dy|^2 = 2 under the standard metric
    let c = MultiVector::contract(&dzb1, &dzb1).unwrap();
    assert_eq!(c, MultiVector::scalar(6, ExactScalar::from_int(2)));
    assert!(MultiVector::contract(&dzb1, &dzb2).unwrap().is_zero());
}

#[test]
fn contraction_is_an_antiderivation() {
    let n = 3;
    let dzb1 = MultiVector::dzbar(n, 1);
    let pair = MultiVector::dzbar_monomial(n, &[1, 2]);
    let c = MultiVector::contract(&dzb1, &pair).unwrap();
    assert_eq!(c, MultiVector::dzbar(n, 2).scale(&ExactScalar::from_int(2)));

    // Leibniz rule on random data: alpha _| (x ^ y) with x of degree 1
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..50 {
        let alpha = random_form(&mut rng, 2).grade(1);
        if alpha.is_zero() {
            continue;
        }
        let x = random_form(&mut rng, 2).grade(1);
        let y = random_form(&mut rng, 2);
        let lhs = MultiVector::contract(&alpha, &x.wedge(&y).unwrap()).unwrap();
        let term1 = MultiVector::contract(&alpha, &x).unwrap().wedge(&y).unwrap();
        let mut rhs = term1;
        // (-1)^{deg x} x ^ (alpha _| y), deg x = 1
        rhs = rhs - x.wedge(&MultiVector::contract(&alpha, &y).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn contraction_rejects_higher_degree() {
    let two_form = MultiVector::dzbar_monomial(2, &[1, 2]);
    let err = MultiVector::contract(&two_form, &two_form);
    assert!(matches!(err, Err(ExalgError::WrongDegree { .. })));
}

#[test]
fn star_values_on_c3() {
    let n = 3;
    let omega = MultiVector::omega(n);
    // *(dzbar1 ^ omega) = i (dzbar1 ^ omega)
    let eta_om = MultiVector::dzbar(n, 1).wedge(&omega).unwrap();
    assert_eq!(eta_om.hodge_star(), eta_om.scale(&i()));
    // *(dz1 ^ dzbar2 ^ dzbar3) = -i (dz1 ^ dzbar2 ^ dzbar3)
    let mixed = MultiVector::dz(n, 1)
        .wedge(&MultiVector::dzbar_monomial(n, &[2, 3]))
        .unwrap();
    assert_eq!(mixed.hodge_star(), mixed.scale(&-i()));
    // *(dzbar1 ^ dzbar2 ^ dzbar3) = i (same)
    let anti = MultiVector::dzbar_monomial(n, &[1, 2, 3]);
    assert_eq!(anti.hodge_star(), anti.scale(&i()));
    // *1 = dvol
    assert_eq!(MultiVector::one(6).hodge_star(), MultiVector::dvol(6));
    // *(omega^2 / 2) = omega
    let om2 = omega.wedge(&omega).unwrap();
    assert_eq!(om2.hodge_star(), omega.scale(&ExactScalar::from_int(2)));
}

#[test]
fn star_involution_all_monomials() {
    // ** = (-1)^k on degree k, exhaustively over every basis monomial
    for n in 1..=4u8 {
        let dim = 2 * n;
        for mask in 0..(1u32 << dim) {
            let m = MultiVector::monomial(dim, mask, ExactScalar::one());
            let twice = m.hodge_star().hodge_star();
            let k = mask.count_ones();
            let expected = if k % 2 == 0 { m.clone() } else { -m.clone() };
            assert_eq!(twice, expected, "n={} mask={:b}", n, mask);
        }
    }
}

#[test]
fn star_pairing_is_positive() {
    // <xi, xi> dvol = xi ^ *conj(xi) evaluates to +dvol on basis monomials
    for n in 1..=4u8 {
        let dim = 2 * n;
        for mask in 0..(1u32 << dim) {
            let m = MultiVector::monomial(dim, mask, ExactScalar::one());
            let paired = m.wedge(&m.conj().hodge_star()).unwrap();
            assert_eq!(paired, MultiVector::dvol(dim), "n={} mask={:b}", n, mask);
        }
    }
}

#[test]
fn pq_split_examples() {
    let n = 3;
    // dx1 = dz1/2 + dzbar1/2
    let s = pq_split(&MultiVector::dx(n, 1)).unwrap();
    assert_eq!(s.component(1, 0), MultiVector::dz(n, 1).scale(&ExactScalar::ratio(1, 2)));
    assert_eq!(s.component(0, 1), MultiVector::dzbar(n, 1).scale(&ExactScalar::ratio(1, 2)));
    // omega is pure (1,1)
    let om = pq_split(&MultiVector::omega(n)).unwrap();
    assert_eq!(om.component(1, 1), MultiVector::omega(n));
    assert!(om.component(2, 0).is_zero());
    // dx1 ^ dy2 has the +-1/(4i) pattern: expand by hand
    // dx1 dy2 = (dz1+dzbar1)/2 ^ (dz2-dzbar2)/(2i)
    //         = (1/4i)(dz1 dz2 - dz1 dzbar2 + dzbar1 dz2 - dzbar1 dzbar2)
    let form = MultiVector::dx(n, 1).wedge(&MultiVector::dy(n, 2)).unwrap();
    let s = pq_split(&form).unwrap();
    let quarter_over_i = ExactScalar::ratio_i(-1, 4); // 1/(4i) = -i/4
    let dz12 = MultiVector::dz(n, 1).wedge(&MultiVector::dz(n, 2)).unwrap();
    assert_eq!(s.component(2, 0), dz12.scale(&quarter_over_i));
    let dzb12 = MultiVector::dzbar_monomial(n, &[1, 2]);
    assert_eq!(s.component(0, 2), dzb12.scale(&-quarter_over_i.clone()));
    let mixed = MultiVector::dz(n, 1)
        .wedge(&MultiVector::dzbar(n, 2))
        .unwrap()
        .scale(&-quarter_over_i.clone())
        + MultiVector::dzbar(n, 1)
            .wedge(&MultiVector::dz(n, 2))
            .unwrap()
            .scale(&quarter_over_i);
    assert_eq!(s.component(1, 1), mixed);
}

#[test]
fn pq_split_reassembles_randomly() {
    for n in 1..=4u8 {
        let mut rng = ChaCha8Rng::seed_from_u64(1000 + n as u64);
        for _ in 0..1000 {
            let form = random_form(&mut rng, n);
            let split = pq_split(&form).unwrap();
            assert_eq!(split.reassemble(), form);
            // components are of pure type: re-splitting is idempotent
            for ((p, q), comp) in &split.components {
                let again = pq_split(comp).unwrap();
                assert_eq!(&again.component(*p, *q), comp);
                assert_eq!(again.components.len(), 1);
            }
        }
    }
}

#[test]
fn sd_asd_split_examples() {
    // n=4: omega^2 is self-dual
    let om = MultiVector::omega(4);
    let om2 = om.wedge(&om).unwrap();
    let (plus, minus) = sd_asd_split(&om2).unwrap();
    assert_eq!(plus, om2);
    assert!(minus.is_zero());
    // n=3: dzbar1 ^ dzbar2 ^ dzbar3 has star eigenvalue +i
    let anti = MultiVector::dzbar_monomial(3, &[1, 2, 3]);
    let (plus, minus) = sd_asd_split(&anti).unwrap();
    assert_eq!(plus, anti);
    assert!(minus.is_zero());
    // zero input
    let (p, m) = sd_asd_split(&MultiVector::zero(6)).unwrap();
    assert!(p.is_zero() && m.is_zero());
    // wrong degree rejected
    assert!(matches!(
        sd_asd_split(&MultiVector::omega(3)),
        Err(ExalgError::WrongDegree { .. })
    ));
}

#[test]
fn sd_asd_projections_are_idempotent_eigenspaces() {
    for n in [3u8, 4u8] {
        let mut rng = ChaCha8Rng::seed_from_u64(40 + n as u64);
        for _ in 0..100 {
            let xi = random_form(&mut rng, n).grade(n);
            let (plus, minus) = sd_asd_split(&xi).unwrap();
            assert_eq!(plus.clone() + minus.clone(), xi);
            let (pp, pm) = sd_asd_split(&plus).unwrap();
            assert_eq!(pp, plus);
            assert!(pm.is_zero());
            let eig = if n % 2 == 0 { ExactScalar::one() } else { ExactScalar::i() };
            assert_eq!(plus.hodge_star(), plus.scale(&eig));
            assert_eq!(minus.hodge_star(), minus.scale(&-eig));
        }
    }
}

#[test]
fn lefschetz_split_examples() {
    let n = 3;
    let omega = MultiVector::omega(n);
    // already in split form: eta = dzbar1 (+ conjugate)
    let beta = MultiVector::dzbar(n, 1)
        .wedge(&omega)
        .unwrap()
        + MultiVector::dz(n, 1).wedge(&omega).unwrap();
    let s = lefschetz_split_3form(&beta, true).unwrap();
    assert_eq!(s.eta01, MultiVector::dzbar(n, 1));
    assert_eq!(s.eta10, MultiVector::dz(n, 1));
    assert!(s.beta30.is_zero() && s.gamma12.is_zero());
    assert_eq!(s.reassemble(), beta);

    // a primitive piece stays in gamma, and gamma ^ omega = 0
    let prim = MultiVector::dz(n, 1)
        .wedge(&MultiVector::dzbar_monomial(n, &[2, 3]))
        .unwrap();
    let beta = prim.clone() + prim.conj();
    let s = lefschetz_split_3form(&beta, true).unwrap();
    assert_eq!(s.gamma12, prim);
    assert!(s.eta01.is_zero() && s.beta30.is_zero());
    assert!(s.gamma12.wedge(&omega).unwrap().is_zero());
    assert_eq!(s.reassemble(), beta);

    // Re(dz1 dz2 dz3) is pure (3,0) + conjugate
    let dz123 = MultiVector::dz(n, 1)
        .wedge(&MultiVector::dz(n, 2))
        .unwrap()
        .wedge(&MultiVector::dz(n, 3))
        .unwrap();
    let beta = dz123.clone().scale(&ExactScalar::ratio(1, 2))
        + dz123.conj().scale(&ExactScalar::ratio(1, 2));
    let s = lefschetz_split_3form(&beta, true).unwrap();
    assert!(s.eta01.is_zero() && s.gamma12.is_zero());
    assert_eq!(s.reassemble(), beta);
}

#[test]
fn lefschetz_split_star_pattern_and_random_reassembly() {
    let omega = MultiVector::omega(3);
    let i = ExactScalar::i();
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for _ in 0..200 {
        let raw = random_form(&mut rng, 3).grade(3);
        let beta = raw.clone() + raw.conj(); // real 3-form
        let s = lefschetz_split_3form(&beta, true).unwrap();
        assert_eq!(s.reassemble(), beta);
        // eigenvalue pattern (-i, +i, -i) on (beta30, eta ^ omega, gamma)
        assert_eq!(s.beta30.hodge_star(), s.beta30.scale(&-i.clone()));
        let eo = s.eta01.wedge(&omega).unwrap();
        assert_eq!(eo.hodge_star(), eo.scale(&i));
        assert_eq!(s.gamma12.hodge_star(), s.gamma12.scale(&-i.clone()));
        // conjugate signs
        assert_eq!(s.beta03.hodge_star(), s.beta03.scale(&i));
        let eo = s.eta10.wedge(&omega).unwrap();
        assert_eq!(eo.hodge_star(), eo.scale(&-i.clone()));
        assert_eq!(s.gamma21.hodge_star(), s.gamma21.scale(&i));
        // primitivity certificates
        assert!(s.gamma12.wedge(&omega).unwrap().is_zero());
        assert!(s.gamma21.wedge(&omega).unwrap().is_zero());
    }
}

#[test]
fn lefschetz_split_rejects_non_real_when_required() {
    let beta = MultiVector::dzbar_monomial(3, &[1, 2, 3]);
    assert_eq!(lefschetz_split_3form(&beta, true).unwrap_err(), ExalgError::NotReal);
    assert!(lefschetz_split_3form(&beta, false).is_ok());
}
