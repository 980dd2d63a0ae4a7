//! Sample test functions on a periodic grid, apply Bessel potentials and
//! measure norms, then round-trip a field through the CSV and binary
//! formats.

use bessel_rkbs::spectral::{
    bessel_norm, bessel_potential, io, lp_norm, GridSpec, MultiplierOrder, TestFunction,
};

fn main() -> bessel_rkbs::Result<()> {
    let grid = GridSpec::new(1, 1024, 64.0)?;
    let phi = TestFunction::Gaussian { a: 1.0 };
    let f = phi.sample(&grid)?;
    println!(
        "||phi||_2 = {:.12} (exact {:.12})",
        lp_norm(&f, 2.0)?,
        phi.lp_norm(1, 2.0)
    );
    for s in [0.0, 0.5, 1.0, 2.0] {
        println!("||phi||_H^({s}, 3/2) = {:.10}", bessel_norm(&f, s, 1.5)?);
    }
    let smoothed = bessel_potential(&f, MultiplierOrder::new(2.0)?);
    println!("sup |J_2 phi| = {:.10}", smoothed.max_abs());

    let dir = std::env::temp_dir().join("bessel-rkbs-field-io");
    std::fs::create_dir_all(&dir)?;
    let csv_path = dir.join("smoothed.csv");
    io::write_csv(&smoothed, std::fs::File::create(&csv_path)?)?;
    let from_csv = io::read_csv(std::fs::File::open(&csv_path)?)?;
    let bin_path = dir.join("smoothed.bin");
    io::write_binary(&smoothed, std::fs::File::create(&bin_path)?)?;
    let from_bin = io::read_binary(std::fs::File::open(&bin_path)?)?;
    println!(
        "csv round trip exact: {}, binary round trip exact: {} ({})",
        from_csv == smoothed,
        from_bin == smoothed,
        dir.display()
    );
    Ok(())
}
