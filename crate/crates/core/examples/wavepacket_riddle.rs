//! Wave-packet revivals around integer times for N = 55.
//!
//! An integer `ell` sharing a factor with `N` shows a symmetric maximum of
//! `|S|^2` at `tau = ell`, so 5, 10 and 11 are flagged and the rest are not.

use gauss_factor::wavepacket::{detect_factor_candidates, riddle_trace, DetectorConfig, WavePacketSpec};

fn main() -> gauss_factor::Result<()> {
    let spec = WavePacketSpec::new(55, 10.0)?;
    let config = DetectorConfig::default();
    let candidates: Vec<u64> = (2..=12).collect();

    for v in detect_factor_candidates(&spec, &candidates, &config)? {
        let mark = if v.flagged { "factor" } else { "" };
        println!(
            "ell = {:>2}  peak score = {:>8.3}  asymmetry = {:.4}  {mark}",
            v.ell, v.peak_score, v.asymmetry
        );
    }

    println!("\n|S|^2 near tau = 5");
    let trace = riddle_trace(&spec, 5, 0.05, 11)?;
    for (dtau, a) in trace.offsets.iter().zip(&trace.values) {
        println!("  {dtau:+.3}  {a:.6}  {}", "*".repeat((a * 400.0) as usize));
    }
    Ok(())
}
