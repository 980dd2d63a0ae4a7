//! The three families showing that the admissibility conditions are sharp:
//! dilated bumps, `L^p`-normalised rescalings and shrinking mollifiers.
//! Each prints its observations and the fitted log-log slope.

use bessel_rkbs::experiments::{
    blowup_dilation, blowup_mollifier, blowup_rescaled, DilationConfig, GrowthReport,
    MollifierConfig, RescaledConfig,
};

fn show(report: &GrowthReport) {
    println!(
        "{} over {:?}: slope {:.4} (predicted {:.4}), passed = {}",
        report.experiment,
        report.parameter,
        report.fitted_slope,
        report.predicted_slope,
        report.passed
    );
    for o in &report.observations {
        println!("    {:>8.4}  {:.6e}", o.scale, o.norm);
    }
}

fn main() -> bessel_rkbs::Result<()> {
    show(&blowup_dilation(&DilationConfig::reference(1))?);
    show(&blowup_dilation(&DilationConfig::reference(2))?);
    for p in [2.0, 4.0] {
        show(&blowup_rescaled(&RescaledConfig {
            p,
            ..Default::default()
        })?);
    }
    let mollifier = blowup_mollifier(&MollifierConfig::default())?;
    show(&mollifier);
    print!("\n{}", mollifier.observations_csv()?);
    Ok(())
}
