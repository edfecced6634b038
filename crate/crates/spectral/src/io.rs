//! Field dumps: flat binary with header
//! `{magic "TFLD", u32 ndims, u32 axis sizes..., u8 real/complex flag}`
//! followed by row-major little-endian f64 data (re, im interleaved when
//! complex).

use crate::field::{ComplexField, ScalarField};
use crate::grid::TorusGrid;
use crate::SpectralError;
use num_complex::Complex64;
use std::io::{Read, Write};
use std::path::Path;

pub const MAGIC: &[u8; 4] = b"TFLD";

pub fn dump_scalar(path: &Path, field: &ScalarField) -> Result<(), SpectralError> {
    let mut f = std::fs::File::create(path)?;
    write_header(&mut f, &field.grid, 0)?;
    for v in &field.values {
        f.write_all(&v.to_le_bytes())?;
    }
    Ok(())
}

pub fn dump_complex(path: &Path, field: &ComplexField) -> Result<(), SpectralError> {
    let mut f = std::fs::File::create(path)?;
    write_header(&mut f, &field.grid, 1)?;
    for v in &field.values {
        f.write_all(&v.re.to_le_bytes())?;
        f.write_all(&v.im.to_le_bytes())?;
    }
    Ok(())
}

fn write_header(f: &mut impl Write, grid: &TorusGrid, flag: u8) -> Result<(), SpectralError> {
    f.write_all(MAGIC)?;
    f.write_all(&(grid.ndim() as u32).to_le_bytes())?;
    for &d in grid.dims() {
        f.write_all(&(d as u32).to_le_bytes())?;
    }
    f.write_all(&[flag])?;
    Ok(())
}

pub enum LoadedField {
    Real(ScalarField),
    Complex(ComplexField),
}

pub fn load_field(path: &Path) -> Result<LoadedField, SpectralError> {
    let mut f = std::fs::File::open(path)?;
    let mut magic = [0u8; 4];
    f.read_exact(&mut magic)?;
    if &magic != MAGIC {
        return Err(SpectralError::BadDump("bad magic".into()));
    }
    let mut u32buf = [0u8; 4];
    f.read_exact(&mut u32buf)?;
    let ndims = u32::from_le_bytes(u32buf) as usize;
    let mut dims = Vec::with_capacity(ndims);
    for _ in 0..ndims {
        f.read_exact(&mut u32buf)?;
        dims.push(u32::from_le_bytes(u32buf) as usize);
    }
    let mut flag = [0u8; 1];
    f.read_exact(&mut flag)?;
    let grid = TorusGrid::new(dims)?;
    let total = grid.len();
    let mut f64buf = [0u8; 8];
    match flag[0] {
        0 => {
            let mut values = Vec::with_capacity(total);
            for _ in 0..total {
                f.read_exact(&mut f64buf)?;
                values.push(f64::from_le_bytes(f64buf));
            }
            Ok(LoadedField::Real(ScalarField { grid, values }))
        }
        1 => {
            let mut values = Vec::with_capacity(total);
            for _ in 0..total {
                f.read_exact(&mut f64buf)?;
                let re = f64::from_le_bytes(f64buf);
                f.read_exact(&mut f64buf)?;
                let im = f64::from_le_bytes(f64buf);
                values.push(Complex64::new(re, im));
            }
            Ok(LoadedField::Complex(ComplexField { grid, values }))
        }
        other => Err(SpectralError::BadDump(format!("unknown flag {}", other))),
    }
}
