//! Threshold-field shells around bare nuclei, next to the listed values.
//!
//! Run with `cargo run --example nuclear_table`.

use photon_audit::nuclear::{default_species, induced_total_charge_quadrature, table1, NuclearSpecies};
use photon_audit::SI;

fn main() -> photon_audit::Result<()> {
    let mut species = default_species();
    species.push(NuclearSpecies::from_za(92, 238)?);

    println!(
        "{:>3} {:>4} {:>8} {:>9} {:>9} {:>8} {:>7}",
        "", "A", "R_N fm", "R_S fm", "E_N/E_S", "listed", "q0/e"
    );
    for row in table1(&species)? {
        let listed = row
            .published
            .map_or("-".to_string(), |p| format!("{:.0}", p.field_ratio));
        println!(
            "{:>3} {:>4} {:>8.3} {:>9.2} {:>9.1} {:>8} {:>7.3}",
            row.symbol, row.a, row.r_n_fm, row.r_s_fm, row.field_ratio, listed, row.q0_over_e
        );
    }

    // the shell charge integrated numerically rather than in closed form
    let fe = NuclearSpecies::from_za(26, 56)?;
    let q = induced_total_charge_quadrature(&SI, &fe, 1e-12)?;
    println!(
        "\nFe shell charge by quadrature: {:.6} e ({} evaluations)",
        q.value / SI.e,
        q.evaluations
    );
    Ok(())
}
