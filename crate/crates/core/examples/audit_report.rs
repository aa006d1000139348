//! Runs every check and lists the findings that differ from the printed values.
//!
//! Run with `cargo run --release --example audit_report`.

use photon_audit::report::{verify_all, Verdict, KNOWN_DISCREPANCIES};

fn main() -> photon_audit::Result<()> {
    let report = verify_all(1.0)?;
    let matches = report.findings.iter().filter(|f| f.verdict == Verdict::Match).count();
    println!("{} checks, {matches} match\n", report.findings.len());

    for f in report.discrepancies() {
        let summary = KNOWN_DISCREPANCIES
            .iter()
            .find(|k| k.id == f.id)
            .map_or("", |k| k.summary);
        println!("[{}] {}\n    {}", f.verdict.as_str(), f.id, summary);
        match f.printed {
            Some(p) => println!("    computed {:.6e}, printed {:.6e} {}", f.computed, p, f.unit),
            None => println!("    computed {:.6e} {}", f.computed, f.unit),
        }
    }
    println!(
        "\noverall: {}",
        if report.passed { "as documented" } else { "REGRESSION" }
    );
    Ok(())
}
