use std::io::Write;

use crate::bayes::{hdi, Hdi};
use crate::error::{Error, Result};

pub const PLOT_BINS: usize = 50;
pub const PLOT_CSV_HEADER: [&str; 4] = ["kind", "bin_low", "bin_high", "density"];

#[derive(Debug, Clone, PartialEq)]
pub struct PlotData {
    /// `(bin_low, bin_high, density)`; densities integrate to one.
    pub bins: Vec<(f64, f64, f64)>,
    pub hdi: Hdi,
}

/// Density histogram of posterior draws with the HDI bounds.
///
/// Constant samples get a unit-width range centred on the value.
pub fn histogram(samples: &[f64], bins: usize, mass: f64) -> Result<PlotData> {
    if bins == 0 {
        return Err(Error::Config("histogram needs at least one bin".into()));
    }
    let hdi = hdi(samples, mass)?;
    let (min, max) = samples
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &v| (lo.min(v), hi.max(v)));
    let (lo, hi) = if max > min { (min, max) } else { (min - 0.5, min + 0.5) };
    let width = (hi - lo) / bins as f64;
    let mut counts = vec![0usize; bins];
    for &v in samples {
        let i = (((v - lo) / width).floor() as usize).min(bins - 1);
        counts[i] += 1;
    }
    let n = samples.len() as f64;
    let bins = counts
        .iter()
        .enumerate()
        .map(|(i, &c)| {
            let a = lo + i as f64 * width;
            let b = if i + 1 == counts.len() { hi } else { lo + (i + 1) as f64 * width };
            (a, b, c as f64 / (n * width))
        })
        .collect();
    Ok(PlotData { bins, hdi })
}

pub fn write_plot_csv<W: Write>(out: W, data: &PlotData) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(PLOT_CSV_HEADER)?;
    for (a, b, d) in &data.bins {
        w.write_record(["bin".to_owned(), a.to_string(), b.to_string(), d.to_string()])?;
    }
    w.write_record(["hdi".to_owned(), data.hdi.low.to_string(), data.hdi.high.to_string(), String::new()])?;
    w.flush().map_err(|e| Error::io("plot csv", e))?;
    Ok(())
}
