use oew_core::bounds::BoundReport;

/// Rounds to 12 significant digits, then prints the shortest decimal that
/// round-trips that value. Locale-independent, no exponent, `-0` folded to `0`.
pub fn sig12(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    let rounded: f64 = format!("{x:.11e}").parse().expect("formatted float parses");
    if rounded == 0.0 {
        return "0".to_string();
    }
    rounded.to_string()
}

fn optional(x: Option<f64>) -> String {
    x.map(sig12).unwrap_or_else(|| "n/a".to_string())
}

/// `key = value` lines for the `bound` subcommand.
pub fn render_report(report: &BoundReport) -> String {
    let verdict = if report.entangled {
        "entangled"
    } else {
        "inconclusive"
    };
    format!(
        "d1 = {}\nd2 = {}\npurity = {}\nbound_thm2 = {}\nbound_thm4 = {}\nbound_thm5 = {}\nbest = {}\nverdict = {}\n",
        report.d1,
        report.d2,
        sig12(report.purity),
        optional(report.bound_pure),
        sig12(report.bound_mixed),
        optional(report.bound_qubit),
        sig12(report.best),
        verdict,
    )
}
