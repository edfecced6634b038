//! Field-dump format round trips.

use num_complex::Complex64;
use spectral::{dump_complex, dump_scalar, load_field, ComplexField, LoadedField, ScalarField, TorusGrid};

#[test]
fn scalar_round_trip() {
    let grid = TorusGrid::new(vec![8, 10]).unwrap();
    let field = ScalarField::from_fn(&grid, |x| x[0] * 3.0 - x[1]);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("field.tfld");
    dump_scalar(&path, &field).unwrap();
    match load_field(&path).unwrap() {
        LoadedField::Real(loaded) => {
            assert_eq!(loaded.grid.dims(), grid.dims());
            assert_eq!(loaded.values, field.values);
        }
        _ => panic!("expected a real field"),
    }
}

#[test]
fn complex_round_trip() {
    let grid = TorusGrid::new(vec![8, 8]).unwrap();
    let mut field = ComplexField::zeros(&grid);
    for (i, v) in field.values.iter_mut().enumerate() {
        *v = Complex64::new(i as f64, -(i as f64) * 0.5);
    }
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("field.tfld");
    dump_complex(&path, &field).unwrap();
    match load_field(&path).unwrap() {
        LoadedField::Complex(loaded) => assert_eq!(loaded.values, field.values),
        _ => panic!("expected a complex field"),
    }
}

#[test]
fn header_is_as_documented() {
    let grid = TorusGrid::new(vec![8, 12]).unwrap();
    let field = ScalarField::zeros(&grid);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("field.tfld");
    dump_scalar(&path, &field).unwrap();
    let bytes = std::fs::read(&path).unwrap();
    assert_eq!(&bytes[0..4], b"TFLD");
    assert_eq!(u32::from_le_bytes(bytes[4..8].try_into().unwrap()), 2);
    assert_eq!(u32::from_le_bytes(bytes[8..12].try_into().unwrap()), 8);
    assert_eq!(u32::from_le_bytes(bytes[12..16].try_into().unwrap()), 12);
    assert_eq!(bytes[16], 0);
    assert_eq!(bytes.len(), 17 + 8 * 96);
}
