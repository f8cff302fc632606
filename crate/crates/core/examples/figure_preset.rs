//! Regenerate the data behind one figure and summarise each curve. The
//! figure id comes from the first argument (default fig3).

use std::error::Error;

use pass_noma::model::NetworkConfig;
use pass_noma::runner::{run_sweep, Engine, FigurePreset, PresetOptions, Row};

fn curve(r: &Row) -> String {
    let mut key = r.metric.name().to_string();
    for part in [
        r.mode.map(|m| m.to_string()),
        r.condition.map(|c| c.to_string()),
    ]
    .into_iter()
    .flatten()
    {
        key = format!("{key}:{part}");
    }
    format!("{key} [{}]", r.engine)
}

pub fn run_example() -> Result<(), Box<dyn Error>> {
    run(FigurePreset::Fig3)
}

fn run(preset: FigurePreset) -> Result<(), Box<dyn Error>> {
    let opts = PresetOptions {
        engine: Engine::Analytic,
        ..PresetOptions::default()
    };
    let spec = preset.sweep(&opts);
    let ds = run_sweep(&spec, &NetworkConfig::default())?;

    println!(
        "{preset}: {} rows, axis {}",
        ds.rows.len(),
        ds.meta_value("axis").unwrap_or("?")
    );
    let mut curves: Vec<(String, String)> = Vec::new();
    // the orthogonal benchmark has no closed form, so an analytic-only run
    // leaves its rows as errors
    for r in ds.rows.iter().filter(|r| r.error.is_none()) {
        let id = (r.series.clone(), curve(r));
        if !curves.contains(&id) {
            curves.push(id);
        }
    }
    for (series, key) in curves {
        let pts: Vec<_> = ds
            .rows
            .iter()
            .filter(|r| r.series == series && curve(r) == key)
            .collect();
        let (first, last) = (pts[0], pts[pts.len() - 1]);
        println!(
            "  {series:<14} {key:<34} {:>6} dB: {:<12.5e} {:>6} dB: {:.5e}",
            first.x_db,
            first.value.unwrap_or(f64::NAN),
            last.x_db,
            last.value.unwrap_or(f64::NAN)
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    match std::env::args().nth(1) {
        Some(id) => run(id.parse()?),
        None => run_example(),
    }
}
