//! Field import and export.
//!
//! CSV layout (all rows comma separated):
//!
//! ```text
//! format,version,d,n,length,ordering
//! bessel-rkbs-field,1,<d>,<n>,<L>,row-major
//! value
//! <sample 0>
//! ...
//! ```
//!
//! Binary layout, little endian: the magic bytes `BRKF`, `u32` version
//! (`1`), `u32` dimension, `u64` points per axis, `f64` period length,
//! then `n^d` `f64` samples in row-major order.

use std::io::{Read, Write};

use super::grid::{Field, GridSpec};
use crate::error::{Error, Result};

pub const FORMAT_NAME: &str = "bessel-rkbs-field";
pub const FORMAT_VERSION: u32 = 1;
const MAGIC: &[u8; 4] = b"BRKF";

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

pub fn write_csv<W: Write>(field: &Field, out: W) -> Result<()> {
    let g = field.grid();
    let mut w = csv::WriterBuilder::new().flexible(true).from_writer(out);
    w.write_record(["format", "version", "d", "n", "length", "ordering"])?;
    w.write_record([
        FORMAT_NAME.to_string(),
        FORMAT_VERSION.to_string(),
        g.d().to_string(),
        g.n().to_string(),
        format!("{:?}", g.length()),
        "row-major".to_string(),
    ])?;
    w.write_record(["value"])?;
    for v in field.values() {
        w.write_record([format!("{v:?}")])?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_csv<R: Read>(input: R) -> Result<Field> {
    let mut r = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .from_reader(input);
    let mut records = r.records();
    let mut next = || -> Result<csv::StringRecord> {
        records
            .next()
            .ok_or_else(|| parse_err("unexpected end of field file"))?
            .map_err(Error::from)
    };
    let header = next()?;
    if header.get(0) != Some("format") {
        return Err(parse_err("missing field header row"));
    }
    let meta = next()?;
    if meta.len() != 6 || &meta[0] != FORMAT_NAME {
        return Err(parse_err("not a bessel-rkbs field file"));
    }
    if meta[1].parse::<u32>().ok() != Some(FORMAT_VERSION) {
        return Err(parse_err(format!(
            "unsupported field format version {}",
            &meta[1]
        )));
    }
    if &meta[5] != "row-major" {
        return Err(parse_err(format!("unsupported ordering {}", &meta[5])));
    }
    let d = meta[2].parse().map_err(|_| parse_err("bad dimension"))?;
    let n = meta[3].parse().map_err(|_| parse_err("bad point count"))?;
    let length = meta[4]
        .parse()
        .map_err(|_| parse_err("bad period length"))?;
    let grid = GridSpec::new(d, n, length)?;
    if next()?.get(0) != Some("value") {
        return Err(parse_err("missing value header"));
    }
    let mut values = Vec::with_capacity(grid.len());
    for rec in records {
        let rec = rec?;
        let v = rec.get(0).ok_or_else(|| parse_err("empty sample row"))?;
        values.push(
            v.trim()
                .parse::<f64>()
                .map_err(|_| parse_err(format!("bad sample {v:?}")))?,
        );
    }
    Field::new(grid, values)
}

pub fn write_binary<W: Write>(field: &Field, mut out: W) -> Result<()> {
    let g = field.grid();
    out.write_all(MAGIC)?;
    out.write_all(&FORMAT_VERSION.to_le_bytes())?;
    out.write_all(&g.d().to_le_bytes())?;
    out.write_all(&(g.n() as u64).to_le_bytes())?;
    out.write_all(&g.length().to_le_bytes())?;
    for v in field.values() {
        out.write_all(&v.to_le_bytes())?;
    }
    out.flush()?;
    Ok(())
}

pub fn read_binary<R: Read>(mut input: R) -> Result<Field> {
    let mut magic = [0u8; 4];
    input.read_exact(&mut magic)?;
    if &magic != MAGIC {
        return Err(parse_err("bad magic bytes in binary field"));
    }
    let mut b4 = [0u8; 4];
    let mut b8 = [0u8; 8];
    input.read_exact(&mut b4)?;
    if u32::from_le_bytes(b4) != FORMAT_VERSION {
        return Err(parse_err("unsupported binary field version"));
    }
    input.read_exact(&mut b4)?;
    let d = u32::from_le_bytes(b4);
    input.read_exact(&mut b8)?;
    let n =
        usize::try_from(u64::from_le_bytes(b8)).map_err(|_| parse_err("point count overflow"))?;
    input.read_exact(&mut b8)?;
    let grid = GridSpec::new(d, n, f64::from_le_bytes(b8))?;
    let mut values = Vec::with_capacity(grid.len());
    for _ in 0..grid.len() {
        input.read_exact(&mut b8)?;
        values.push(f64::from_le_bytes(b8));
    }
    if input.read(&mut b8)? != 0 {
        return Err(parse_err("trailing bytes after field samples"));
    }
    Field::new(grid, values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    proptest! {
        #[test]
        fn round_trips(values in proptest::collection::vec(-1e300f64..1e300, 256), length in 1e-3f64..1e3) {
            let grid = GridSpec::new(2, 16, length).unwrap();
            let field = Field::new(grid, values).unwrap();
            let mut csv_buf = Vec::new();
            write_csv(&field, &mut csv_buf).unwrap();
            prop_assert_eq!(&read_csv(csv_buf.as_slice()).unwrap(), &field);
            let mut bin = Vec::new();
            write_binary(&field, &mut bin).unwrap();
            prop_assert_eq!(&read_binary(bin.as_slice()).unwrap(), &field);
        }
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(read_csv("format,version\nfoo,1,1,16,1,row-major\n".as_bytes()).is_err());
        let grid = GridSpec::new(1, 16, 2.0).unwrap();
        let mut buf = Vec::new();
        write_csv(&Field::zeros(grid), &mut buf).unwrap();
        let truncated = String::from_utf8(buf)
            .unwrap()
            .lines()
            .take(10)
            .collect::<Vec<_>>()
            .join("\n");
        assert!(read_csv(truncated.as_bytes()).is_err());
        let mut bin = Vec::new();
        write_binary(&Field::zeros(grid), &mut bin).unwrap();
        bin.push(0);
        assert!(read_binary(bin.as_slice()).is_err());
        assert!(read_binary(&b"XXXX"[..]).is_err());
    }
}
