use serde::Serialize;

use crate::dipole::Handedness;
use crate::forces::{force_sweep, loglog_slope, ForceSweepRow, PhotonPairConfig, Spin};
use crate::nuclear::{table1, NuclearSpecies};
use crate::relativity::{table2, Consistency};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Table1Record {
    pub symbol: String,
    pub z: u32,
    pub a: u32,
    pub r_n_fm: f64,
    pub field_ratio: f64,
    pub r_s_fm: f64,
    pub q0_over_e: f64,
    pub printed_r_n_fm: Option<f64>,
    pub printed_field_ratio: Option<f64>,
    pub printed_r_s_fm: Option<f64>,
}

impl Table1Record {
    pub const HEADERS: [&'static str; 10] = [
        "symbol",
        "z",
        "a",
        "r_n_fm",
        "field_ratio",
        "r_s_fm",
        "q0_over_e",
        "printed_r_n_fm",
        "printed_field_ratio",
        "printed_r_s_fm",
    ];
}

pub fn table1_records(species: &[NuclearSpecies]) -> Result<Vec<Table1Record>> {
    Ok(table1(species)?
        .into_iter()
        .map(|r| Table1Record {
            printed_r_n_fm: r.published.map(|p| p.r_n_fm),
            printed_field_ratio: r.published.map(|p| p.field_ratio),
            printed_r_s_fm: r.published.map(|p| p.r_s_fm),
            symbol: r.symbol,
            z: r.z,
            a: r.a,
            r_n_fm: r.r_n_fm,
            field_ratio: r.field_ratio,
            r_s_fm: r.r_s_fm,
            q0_over_e: r.q0_over_e,
        })
        .collect())
}

/// Parses "26,56" or "26,56;12,24" into species.
pub fn parse_species(list: &str) -> Result<Vec<NuclearSpecies>> {
    list.split(';')
        .filter(|s| !s.trim().is_empty())
        .map(|pair| {
            let mut it = pair.split(',').map(|s| s.trim().parse::<u32>());
            match (it.next(), it.next(), it.next()) {
                (Some(Ok(z)), Some(Ok(a)), None) => NuclearSpecies::from_za(z, a),
                _ => Err(Error::domain("parse_species", format!("expected Z,A but got {pair:?}"))),
            }
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Table2Record {
    pub b_am: f64,
    pub alpha: f64,
    pub e0: f64,
    pub l_over_lambda: f64,
    pub l_nm: f64,
    pub printed_e0: Option<f64>,
    pub printed_l_over_lambda: Option<f64>,
    pub printed_l_nm: Option<f64>,
    pub consistency: Consistency,
    /// Mismatched columns joined by ';'.
    pub mismatched: String,
}

impl Table2Record {
    pub const HEADERS: [&'static str; 10] = [
        "b_am",
        "alpha",
        "e0",
        "l_over_lambda",
        "l_nm",
        "printed_e0",
        "printed_l_over_lambda",
        "printed_l_nm",
        "consistency",
        "mismatched",
    ];
}

const AM: f64 = 1e-18;
const NM: f64 = 1e-9;

pub fn table2_records(rows: &[(f64, f64)], lambda: f64) -> Result<Vec<Table2Record>> {
    Ok(table2(rows, lambda)?
        .into_iter()
        .map(|r| Table2Record {
            b_am: r.b / AM,
            alpha: r.alpha,
            e0: r.e0,
            l_over_lambda: r.l_over_lambda,
            l_nm: r.l / NM,
            printed_e0: r.published.map(|p| p.e0),
            printed_l_over_lambda: r.published.map(|p| p.l_over_lambda),
            printed_l_nm: r.published.map(|p| p.l / NM),
            consistency: r.consistency,
            mismatched: r.mismatched.join(";"),
        })
        .collect())
}

/// Sweep rows plus the fitted exponent of |F| against d (one per α, averaged).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ForceSweep {
    pub rows: Vec<ForceSweepRow>,
    pub max_residual: f64,
    /// `None` with fewer than two spacings.
    pub d_slope: Option<f64>,
}

impl ForceSweep {
    pub const HEADERS: [&'static str; 6] = ["d", "alpha", "spin", "closed", "quadrature", "residual"];
}

/// b = 10 am, E₀ = 1.84×10¹⁶ V/m, Δz = 210 nm, χ = 0.
pub fn default_force_sweep(spin: Spin) -> Result<(PhotonPairConfig, Vec<f64>, Vec<f64>)> {
    let base = PhotonPairConfig::new(10.0 * AM, 100.0 * AM, 1.84e16, 4.0, 210.0 * NM, spin, 0.0)?
        .with_branch(Handedness::Upper);
    let ds = [20.0, 50.0, 100.0, 200.0, 500.0].iter().map(|d| d * AM).collect();
    Ok((base, ds, vec![2.0, 3.0, 4.0, 5.0, 6.0]))
}

pub fn force_table(base: &PhotonPairConfig, ds: &[f64], alphas: &[f64], rel_tol: f64) -> Result<ForceSweep> {
    let rows = force_sweep(base, ds, alphas, rel_tol)?;
    let max_residual = rows.iter().map(|r| r.residual).fold(0.0, f64::max);
    let d_slope = if ds.len() >= 2 && !alphas.is_empty() {
        let mut sum = 0.0;
        for i in 0..alphas.len() {
            let ys: Vec<f64> = (0..ds.len()).map(|k| rows[k * alphas.len() + i].quadrature).collect();
            sum += loglog_slope(ds, &ys)?;
        }
        Some(sum / alphas.len() as f64)
    } else {
        None
    };
    Ok(ForceSweep {
        rows,
        max_residual,
        d_slope,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nuclear::default_species;

    #[test]
    fn species_parsing() {
        let s = parse_species("26,56").unwrap();
        assert_eq!((s[0].symbol.as_str(), s[0].z, s[0].a), ("Fe", 26, 56));
        assert_eq!(parse_species("26,56; 12,24").unwrap().len(), 2);
        assert!(parse_species("26").is_err());
        assert!(parse_species("26,x").is_err());
        assert!(parse_species("").unwrap().is_empty());
    }

    #[test]
    fn table_records() {
        let t1 = table1_records(&default_species()).unwrap();
        assert_eq!(t1.len(), 6);
        let t2 = table2_records(&crate::relativity::published_inputs(), 500e-9).unwrap();
        assert_eq!(
            t2.iter().filter(|r| r.consistency == Consistency::Consistent).count(),
            3
        );
        assert_eq!(t2[1].mismatched, "l/lambda");
    }

    #[test]
    fn default_sweep() {
        let (base, ds, alphas) = default_force_sweep(Spin::Antiparallel).unwrap();
        let t = force_table(&base, &ds, &alphas, 1e-10).unwrap();
        assert_eq!(t.rows.len(), 25);
        assert!(t.max_residual < 1e-6);
        assert!((t.d_slope.unwrap() + 3.0).abs() < 1e-4);
        let empty = force_table(&base, &[], &alphas, 1e-10).unwrap();
        assert!(empty.rows.is_empty() && empty.d_slope.is_none());
    }
}
