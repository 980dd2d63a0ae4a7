//! Tabulate the Matérn kernel `K_s(x, 0) = G_{2s}(|x|)` and its behaviour
//! at the origin and at infinity.

use bessel_rkbs::specfun::{
    bessel_kernel, far_field_bound, kernel_at_origin, kernel_lp_norm, near_field_class,
    RadialKernelSpec,
};

fn main() -> bessel_rkbs::Result<()> {
    let radii = [0.01, 0.1, 0.5, 1.0, 2.0, 5.0, 10.0];
    for (d, s) in [(1, 1.0), (1, 0.5), (2, 1.0), (3, 2.5)] {
        let spec = RadialKernelSpec::new(2.0 * s, d)?;
        println!(
            "d = {d}, s = {s}: near field {:?}, G(0) = {:?}",
            near_field_class(&spec),
            kernel_at_origin(&spec)
        );
        for r in radii {
            let g = bessel_kernel(&spec, r)?;
            if r >= 2.0 {
                let bound = far_field_bound(&spec, r)?;
                println!("  r = {r:>5}  G = {g:.10e}  far-field bound {bound:.3e}");
            } else {
                println!("  r = {r:>5}  G = {g:.10e}");
            }
        }
        println!(
            "  ||G||_1 = {:.9}, ||G||_2 = {:.6}",
            kernel_lp_norm(&spec, 1.0)?,
            kernel_lp_norm(&spec, 2.0)?
        );
    }

    // closed form in one dimension
    let laplace = RadialKernelSpec::new(2.0, 1)?;
    let r: f64 = 1.0;
    println!(
        "\nG_2(1) on R = {:.12}, e^-1/2 = {:.12}",
        bessel_kernel(&laplace, r)?,
        (-r).exp() / 2.0
    );
    Ok(())
}
