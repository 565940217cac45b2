//! Binary matrix dumps: the order as a little-endian `u64`, then the
//! entries row by row as little-endian `f64`.

use std::io::{self, Read, Write};

use aldous_core::oracle::DenseSymmetricMatrix;

pub fn write_matrix<W: Write>(mut out: W, m: &DenseSymmetricMatrix) -> io::Result<()> {
    out.write_all(&(m.order() as u64).to_le_bytes())?;
    for x in m.as_row_major() {
        out.write_all(&x.to_le_bytes())?;
    }
    out.flush()
}

pub fn read_matrix<R: Read>(mut input: R) -> io::Result<DenseSymmetricMatrix> {
    let mut word = [0u8; 8];
    input.read_exact(&mut word)?;
    let order = usize::try_from(u64::from_le_bytes(word))
        .map_err(|_| io::Error::new(io::ErrorKind::InvalidData, "matrix order too large"))?;
    let len = order
        .checked_mul(order)
        .ok_or_else(|| io::Error::new(io::ErrorKind::InvalidData, "matrix order too large"))?;
    let mut data = Vec::with_capacity(len);
    for _ in 0..len {
        input.read_exact(&mut word)?;
        data.push(f64::from_le_bytes(word));
    }
    DenseSymmetricMatrix::from_row_major(order, data)
        .map_err(|e| io::Error::new(io::ErrorKind::InvalidData, e.to_string()))
}
