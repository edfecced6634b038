//! Matrix-unit and random sweeps of the star identities in both dimensions.

use kahlerid::{check_star_identities, verify_kahler_suite, HessianData};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn full_suite_n3() {
    let report = verify_kahler_suite(3, 200, 0xA11CE).unwrap();
    assert!(report.all_pass());
    // 9 units + zero + 200 random
    assert_eq!(report.items.len(), 210);
}

#[test]
fn full_suite_n4() {
    let report = verify_kahler_suite(4, 200, 0xB0B).unwrap();
    assert!(report.all_pass());
    assert_eq!(report.items.len(), 217);
}

#[test]
fn hermitian_hessians_give_real_laplacian() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..20 {
        let h = HessianData::random(&mut rng, 3).unwrap();
        // symmetrise into a Hermitian matrix (the real-h case)
        let mut herm = h.clone();
        for j in 0..3 {
            for k in 0..3 {
                herm.entries[j][k] =
                    h.entries[j][k].clone() + h.entries[k][j].conj();
            }
        }
        assert!(herm.laplacian().is_real());
        assert!(check_star_identities(&herm).all_pass());
    }
}

#[test]
fn rejects_unsupported_dimension() {
    assert!(HessianData::zero(2).is_err());
    assert!(verify_kahler_suite(5, 0, 0).is_err());
}

#[test]
fn zero_trials_still_runs_basis() {
    let report = verify_kahler_suite(3, 0, 0).unwrap();
    assert_eq!(report.items.len(), 10);
    assert!(report.all_pass());
}
