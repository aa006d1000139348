//! Every closed form checked against its oracle or its printed value.
//!
//! A finding's verdict comes from the data. Its expected verdict comes from
//! [`KNOWN_DISCREPANCIES`] (match if absent). A finding passes when the two
//! agree and, for documented discrepancies, when the discrepancy still has the
//! documented shape; a regression to some other wrong value fails.

use std::f64::consts::PI;

use serde::Serialize;

use crate::cavity::{cubic_harmonics, lowest_eigenradius, sph_j, sph_j_regular};
use crate::constants::SI;
use crate::dipole::{
    axial_dipole_field, dipole_field_circular, dipole_field_linear_region, guided_onset_fields, induction_condition,
    near_axis_field, parity_check, radial_static_field, radiation_q, rotating_near_field, total_field_mixed,
    two_shell_cancellation, DipoleParams, Handedness, MixedPoint, Parity,
};
use crate::forces::{
    brute_force_strip_fields, external_expanded_fields, external_real_fields, odd_term_integral, printed_strip_fields,
    printed_strip_pressure, strip_force, strip_force_closed, strip_force_quadrature, strip_pressure,
    summed_strip_fields, useful_integrals_check, PhotonPairConfig, SpeedModel, Spin,
};
use crate::manley_rowe::{check_manley_rowe, constructed_solution, OscillatorChannel};
use crate::nuclear::{default_species, induced_total_charge, induced_total_charge_quadrature, table1};
use crate::numerics::Integrator;
use crate::relativity::{lorentz_factor, published_inputs, table2, PUBLISHED_LAMBDA};
use crate::vector::cylindrical_to_cartesian;
use crate::waveguide::{
    angular_momentum, closure_integrals, energy_momentum, field_interior, flux_line_geometry, interface_charge_current,
    potentials, surface_pressure, wall_densities, GuidedModeParams, Polarization,
};
use crate::{Error, Result};

use super::tables::{default_force_sweep, force_table};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Match,
    Mismatch,
    TypoSuspected,
    Ambiguous,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Match => "match",
            Verdict::Mismatch => "mismatch",
            Verdict::TypoSuspected => "typo-suspected",
            Verdict::Ambiguous => "ambiguous",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct KnownDiscrepancy {
    pub id: &'static str,
    pub verdict: Verdict,
    pub summary: &'static str,
}

const fn known(id: &'static str, verdict: Verdict, summary: &'static str) -> KnownDiscrepancy {
    KnownDiscrepancy { id, verdict, summary }
}

/// Printed values that the computation does not reproduce, or readings that
/// had to be chosen.
pub const KNOWN_DISCREPANCIES: [KnownDiscrepancy; 16] = [
    known(
        "table1-field-ratio",
        Verdict::Mismatch,
        "surface field ratio column is about 10x below the Coulomb value at the listed R_N",
    ),
    known(
        "table1-ca-radius",
        Verdict::Mismatch,
        "Ca R_N of 5.16 fm does not follow from A = 40 (3.66 fm)",
    ),
    known(
        "table2-row2-l-over-lambda",
        Verdict::Mismatch,
        "row 2 l/lambda is 0.42 but l/500 nm is 4.2e-5",
    ),
    known(
        "electron-scales",
        Verdict::TypoSuspected,
        "electron rate and length are the hbar values, labelled with h",
    ),
    known(
        "onset-lower-magnetic-sign",
        Verdict::TypoSuspected,
        "guided onset cB = iE holds for one handedness; the other needs -iE",
    ),
    known(
        "cubic-identity-printed",
        Verdict::TypoSuspected,
        "4cos^3 = 3cos + 3cos should read cos3 + 3cos",
    ),
    known(
        "cavity-radial-regularity",
        Verdict::TypoSuspected,
        "printed j(sigma) grows like 2/sigma at the centre; j1 is regular",
    ),
    known(
        "strip-parallel-magnetic-prefactor",
        Verdict::TypoSuspected,
        "parallel-spin cB on the strip lacks the factor 2 carried by E",
    ),
    known(
        "strip-antiparallel-lower-sign",
        Verdict::TypoSuspected,
        "antiparallel E on the lower branch has the wrong overall sign",
    ),
    known(
        "parallel-pressure-sign",
        Verdict::Mismatch,
        "parallel-spin pressure sign is opposite to the one that integrates to the printed force",
    ),
    known(
        "interface-charge-sign",
        Verdict::Ambiguous,
        "charge density sign convention: the closure energy needs outer-minus-inner",
    ),
    known(
        "flux-arc-junction",
        Verdict::Ambiguous,
        "exterior arcs meet the wall at |phi0| from the normal, not along it",
    ),
    known(
        "axial-pattern-comparison",
        Verdict::Ambiguous,
        "z-directed static pattern differs from the rotating-dipole field on the axis",
    ),
    known(
        "two-shell-angular-pattern",
        Verdict::Ambiguous,
        "two-shell amplitudes cancel but the angular patterns do not",
    ),
    known(
        "field-ratio-notation",
        Verdict::Ambiguous,
        "electric-to-magnetic ratio written 1/(alpha c); 10^-alpha reproduces the force",
    ),
    known(
        "antiparallel-pressure-permittivity",
        Verdict::Ambiguous,
        "one antiparallel pressure expression omits the permittivity",
    ),
];

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AuditFinding {
    pub id: &'static str,
    pub location: &'static str,
    pub computed: f64,
    pub printed: Option<f64>,
    pub unit: &'static str,
    pub residual: f64,
    pub tolerance: f64,
    pub verdict: Verdict,
    pub expected: Verdict,
    /// For documented discrepancies, whether the discrepancy has its recorded shape.
    pub as_documented: bool,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AuditReport {
    pub findings: Vec<AuditFinding>,
    /// Documented discrepancies that were not observed with their verdict.
    pub missing: Vec<&'static str>,
    /// Non-match findings absent from the documented list.
    pub unexpected: Vec<&'static str>,
    pub passed: bool,
}

impl AuditReport {
    pub fn discrepancies(&self) -> impl Iterator<Item = &AuditFinding> {
        self.findings.iter().filter(|f| f.verdict != Verdict::Match)
    }
}

fn expected_verdict(id: &str) -> Verdict {
    KNOWN_DISCREPANCIES
        .iter()
        .find(|k| k.id == id)
        .map_or(Verdict::Match, |k| k.verdict)
}

fn rel(computed: f64, printed: f64) -> f64 {
    if printed == 0.0 {
        computed.abs()
    } else {
        ((computed - printed) / printed).abs()
    }
}

struct Draft {
    id: &'static str,
    location: &'static str,
    unit: &'static str,
    computed: f64,
    printed: Option<f64>,
}

impl Draft {
    fn new(id: &'static str, location: &'static str, unit: &'static str, computed: f64, printed: Option<f64>) -> Self {
        Draft {
            id,
            location,
            unit,
            computed,
            printed,
        }
    }

    fn judge(self, residual: f64, tolerance: f64, off: Verdict, as_documented: bool) -> AuditFinding {
        let verdict = if residual.is_finite() && residual <= tolerance {
            Verdict::Match
        } else {
            off
        };
        let expected = expected_verdict(self.id);
        AuditFinding {
            id: self.id,
            location: self.location,
            computed: self.computed,
            printed: self.printed,
            unit: self.unit,
            residual,
            tolerance,
            verdict,
            expected,
            as_documented,
            passed: verdict == expected && as_documented,
        }
    }

    /// Plain oracle check.
    fn check(self, residual: f64, tolerance: f64) -> AuditFinding {
        self.judge(residual, tolerance, Verdict::Mismatch, true)
    }

    /// A reading that had to be chosen; ambiguous while the chosen reading
    /// reproduces what depends on it.
    fn ambiguous(self, adopted_works: bool) -> AuditFinding {
        let residual = rel(self.computed, self.printed.unwrap_or(0.0));
        let off = if adopted_works {
            Verdict::Ambiguous
        } else {
            Verdict::Mismatch
        };
        self.judge(residual, 0.0, off, adopted_works)
    }
}

/// Deterministic low-discrepancy points in [0, 1)³.
fn quasi_points(n: usize) -> impl Iterator<Item = [f64; 3]> {
    // plastic-number additive recurrence
    const G: f64 = 1.220_744_084_605_759_5;
    let a = [1.0 / G, 1.0 / (G * G), 1.0 / (G * G * G)];
    (0..n).map(move |i| {
        let i = i as f64 + 1.0;
        [
            (0.5 + a[0] * i).fract(),
            (0.5 + a[1] * i).fract(),
            (0.5 + a[2] * i).fract(),
        ]
    })
}

fn log_between(u: f64, lo: f64, hi: f64) -> f64 {
    lo * (hi / lo).powf(u)
}

/// Quadrature request for an acceptance threshold, kept above the rounding floor.
fn request(threshold: f64) -> f64 {
    (threshold * 1e-2).max(1e-13)
}

fn nuclear(scale: f64) -> Result<Vec<AuditFinding>> {
    let species = default_species();
    let rows = table1(&species)?;
    let mut out = Vec::new();
    let published = |r: &crate::nuclear::NuclearRow| r.published.expect("default species are published");

    let worst = rows
        .iter()
        .max_by(|a, b| {
            a.r_s_relative_error()
                .unwrap_or(0.0)
                .total_cmp(&b.r_s_relative_error().unwrap_or(0.0))
        })
        .expect("six rows");
    out.push(
        Draft::new(
            "table1-schwinger-radius",
            "nuclear table, R_S column (worst species)",
            "fm",
            worst.r_s_fm,
            Some(published(worst).r_s_fm),
        )
        .check(worst.r_s_relative_error().unwrap_or(f64::INFINITY), 0.015),
    );

    let factors: Vec<f64> = rows.iter().filter_map(|r| r.field_ratio_factor()).collect();
    let deviation = factors.iter().map(|f| (f - 1.0).abs()).fold(0.0, f64::max);
    let tenfold = factors.len() == rows.len() && factors.iter().all(|f| (f - 10.0).abs() <= 0.3);
    let fe = rows.iter().find(|r| r.z == 26).expect("Fe row");
    out.push(
        Draft::new(
            "table1-field-ratio",
            "nuclear table, E_N/E_S column (Fe shown)",
            "",
            fe.field_ratio,
            Some(published(fe).field_ratio),
        )
        .judge(deviation, 0.02, Verdict::Mismatch, tenfold),
    );

    let r_n_worst = rows
        .iter()
        .filter(|r| r.z != 20)
        .map(|r| r.r_n_relative_error().unwrap_or(f64::INFINITY))
        .fold(0.0, f64::max);
    let hg = rows.iter().find(|r| r.z == 80).expect("Hg row");
    out.push(
        Draft::new(
            "table1-nuclear-radius",
            "nuclear table, R_N column except Ca (Hg shown)",
            "fm",
            hg.r_n_fm,
            Some(published(hg).r_n_fm),
        )
        .check(r_n_worst, 0.015),
    );

    let ca = rows.iter().find(|r| r.z == 20).expect("Ca row");
    out.push(
        Draft::new(
            "table1-ca-radius",
            "nuclear table, Ca R_N",
            "fm",
            ca.r_n_fm,
            Some(published(ca).r_n_fm),
        )
        .judge(
            ca.r_n_relative_error().unwrap_or(f64::INFINITY),
            0.015,
            Verdict::Mismatch,
            (ca.r_n_fm - 3.66).abs() < 0.01,
        ),
    );

    let tol = 1e-8 * scale;
    let mut q_worst = 0.0f64;
    let mut q_fe = 0.0;
    for s in &species {
        let closed = induced_total_charge(s)?;
        let quad = induced_total_charge_quadrature(&SI, s, request(tol))?.value;
        q_worst = q_worst.max(rel(quad, closed));
        if s.z == 26 {
            q_fe = quad / SI.e;
        }
    }
    out.push(
        Draft::new(
            "induced-charge-quadrature",
            "induced shell charge, quadrature vs closed form (Fe shown)",
            "e",
            q_fe,
            None,
        )
        .check(q_worst, tol),
    );

    let exact = SI.schwinger_threshold();
    let unit = 10f64.powi(exact.log10().floor() as i32 - 1);
    let rounded = (exact / unit).round() * unit;
    out.push(
        Draft::new(
            "threshold-field-rounding",
            "threshold field, two-figure value",
            "V/m",
            exact,
            Some(SI.e_s),
        )
        .check(rel(rounded, SI.e_s), 1e-12),
    );

    let planck = SI.electron_intrinsic_planck();
    let reduced = SI.electron_intrinsic();
    let hbar_fits = rel(reduced.rate, 7.8e20) < 0.01 && rel(reduced.length, 386e-15) < 0.01;
    out.push(
        Draft::new(
            "electron-scales",
            "intrinsic electron frequency mc^2/h",
            "Hz",
            planck.rate,
            Some(7.8e20),
        )
        .judge(rel(planck.rate, 7.8e20), 0.01, Verdict::TypoSuspected, hbar_fits),
    );
    Ok(out)
}

fn manley_rowe(scale: f64) -> Result<Vec<AuditFinding>> {
    let [a, b, c] = constructed_solution(2.5, 5.0, 3.0)?;
    let ok = check_manley_rowe(a, b, c, 1e-12);
    let bad = check_manley_rowe(OscillatorChannel::new(a.power * 1.01, a.omega)?, b, c, 1e-12);
    let residual = if ok.passed && !bad.passed {
        ok.pair_residual.abs().max(ok.output_residual.abs()) / ok.scale
    } else {
        1.0
    };
    Ok(vec![Draft::new(
        "manley-rowe",
        "power-frequency relations, constructed and 1% perturbed",
        "",
        ok.pair_residual,
        Some(0.0),
    )
    .check(residual, 1e-12 * scale)])
}

fn waveguide_params(n: usize) -> Result<Vec<GuidedModeParams>> {
    quasi_points(n)
        .enumerate()
        .map(|(i, u)| {
            let pol = if i % 2 == 0 {
                Polarization::Right
            } else {
                Polarization::Left
            };
            GuidedModeParams::new(
                log_between(u[0], 1e15, 1e17),
                log_between(u[1], 1e-18, 1e-16),
                log_between(u[2], 1e14, 1e16),
                log_between((u[0] + u[2]).fract(), 1e-9, 1e-6),
                pol,
            )
        })
        .collect()
}

fn waveguide(scale: f64) -> Result<Vec<AuditFinding>> {
    let mut out = Vec::new();
    let tol = 1e-8 * scale;
    let (mut worst_ratio, mut worst_dev, mut halves) = (1.0, 0.0f64, 0.0f64);
    let mut charge_ok = true;
    for p in waveguide_params(8)? {
        let c = closure_integrals(&p, request(tol))?;
        for e in c.energies() {
            let r = e / c.reference;
            if (r - 1.0).abs() > worst_dev {
                worst_dev = (r - 1.0).abs();
                worst_ratio = r;
            }
        }
        let half = 0.5 * c.reference;
        halves = halves
            .max(rel(c.electric_interior, half))
            .max(rel(c.electric_exterior, half));
        charge_ok &= rel(c.charge_potential, c.reference) <= tol;
    }
    out.push(
        Draft::new(
            "closure-integrals",
            "pulse energy by field and source integrals (worst of 8)",
            "W",
            worst_ratio,
            Some(1.0),
        )
        .check(worst_dev, tol),
    );
    out.push(
        Draft::new(
            "closure-electric-halves",
            "interior and exterior electric energy",
            "W/2",
            1.0 + halves,
            Some(1.0),
        )
        .check(halves, tol),
    );

    let p = GuidedModeParams::new(1.84e16, 1e-17, 3.77e15, 2.1e-7, Polarization::Right)?;
    let period = 2.0 * PI / p.omega;
    let mut stress = 0.0f64;
    for i in 0..32 {
        for j in 0..32 {
            let phi = 2.0 * PI * i as f64 / 32.0;
            let t = period * j as f64 / 32.0;
            stress = stress.max(surface_pressure(&p, phi, 0.0, t)?.abs());
        }
    }
    let stress = stress / (SI.eps0 * p.e0 * p.e0);
    out.push(
        Draft::new(
            "stress-balance",
            "net wall pressure over a 32x32 (phi, t) grid",
            "eps0 E0^2",
            stress,
            Some(0.0),
        )
        .check(stress, 1e-12 * scale),
    );

    let em = energy_momentum(&p)?;
    let ratio = em.momentum * SI.c / em.energy;
    out.push(
        Draft::new("photon-momentum", "momentum times c over energy", "", ratio, Some(1.0))
            .check(rel(ratio, 1.0), 1e-12 * scale),
    );
    let am = angular_momentum(&p);
    let ratio = am.energy_ratio / p.omega;
    out.push(
        Draft::new(
            "angular-momentum",
            "energy over angular momentum, in units of omega",
            "",
            ratio,
            Some(1.0),
        )
        .check(rel(ratio, 1.0), 1e-12 * scale),
    );

    let ring = Integrator::relative(1e-12);
    let printed_kappa = ring.integrate(
        |phi| {
            let (pot, _) = potentials(&p, p.b, phi, 0.0, 0.0);
            (pot * interface_charge_current(&p, phi, 0.0, 0.0).kappa.conj()).re
        },
        0.0,
        2.0 * PI,
    )?;
    let gauss = ring.integrate(
        |phi| {
            let (pot, _) = potentials(&p, p.b, phi, 0.0, 0.0);
            (pot * wall_densities(&p, phi, 0.0, 0.0).0.conj()).re
        },
        0.0,
        2.0 * PI,
    )?;
    let sign = printed_kappa.value / gauss.value;
    out.push(
        Draft::new(
            "interface-charge-sign",
            "wall charge density convention in the source-potential energy",
            "",
            sign,
            Some(1.0),
        )
        .ambiguous(charge_ok && (sign + 1.0).abs() < 1e-9),
    );

    let line = flux_line_geometry(0.5)?;
    let angle = line.junction_angle().unwrap_or(f64::NAN);
    out.push(
        Draft::new(
            "flux-arc-junction",
            "flux figure, angle between exterior arc and wall normal at phi0 = 0.5",
            "rad",
            angle,
            Some(0.0),
        )
        .ambiguous((angle - 0.5).abs() < 1e-12),
    );
    Ok(out)
}

fn relativity() -> Result<Vec<AuditFinding>> {
    let rows = table2(&published_inputs(), PUBLISHED_LAMBDA)?;
    let mut out = Vec::new();
    let mut worst = 0.0f64;
    for i in [0, 2, 3] {
        let r = &rows[i];
        let p = r.published.expect("published row");
        worst = worst
            .max(rel(r.e0, p.e0))
            .max(rel(r.l_over_lambda, p.l_over_lambda))
            .max(rel(r.l, p.l));
    }
    out.push(
        Draft::new(
            "table2-consistent-rows",
            "photon sizing table, rows 1, 3 and 4",
            "",
            rows[0].l_over_lambda,
            Some(0.42),
        )
        .check(worst, 0.02),
    );

    let r2 = &rows[1];
    let p2 = r2.published.expect("published row");
    let shaped = r2.mismatched == ["l/lambda"] && rel(r2.l_over_lambda, 4.2e-5) < 0.02;
    out.push(
        Draft::new(
            "table2-row2-l-over-lambda",
            "photon sizing table, row 2 l/lambda",
            "",
            r2.l_over_lambda,
            Some(p2.l_over_lambda),
        )
        .judge(rel(r2.l_over_lambda, p2.l_over_lambda), 0.02, Verdict::Mismatch, shaped),
    );

    let lf = lorentz_factor(4.0)?;
    out.push(
        Draft::new(
            "lorentz-approximation",
            "Lorentz factor, large-alpha form at alpha = 4",
            "",
            lf.exact,
            Some(lf.approx),
        )
        .check(rel(lf.exact, lf.approx), 1e-4),
    );
    Ok(out)
}

fn dipole(scale: f64) -> Result<Vec<AuditFinding>> {
    let mut out = Vec::new();
    let omega = 2.0 * PI * 6e14;
    let mut forms = 0.0f64;
    for h in [Handedness::Upper, Handedness::Lower] {
        let d = DipoleParams::new(1e-30, omega, h, 0.0)?;
        for u in quasi_points(24) {
            let pt = MixedPoint::spherical(log_between(u[0], 1e-14, 1e-12), PI * u[1], 2.0 * PI * u[2] - PI);
            let t = u[0] * 1e-15;
            let truth = rotating_near_field(&d, pt, t)?;
            let n = truth.norm();
            for e in [
                dipole_field_linear_region(&d, pt, t)?,
                dipole_field_circular(&d, pt, t)?,
                total_field_mixed(&d, pt, t)?,
            ] {
                forms = forms.max((e - truth).norm() / n);
            }
        }
    }
    out.push(
        Draft::new(
            "dipole-printed-forms",
            "rotating dipole, three printed field forms vs vector near field",
            "",
            forms,
            Some(0.0),
        )
        .check(forms, 1e-12 * scale),
    );

    let d = DipoleParams::new(1e-30, omega, Handedness::Upper, 0.0)?;
    let pt = MixedPoint::spherical(1e-13, 0.0, 0.4);
    let amp = d.near_amplitude(1e-13);
    let gap = (axial_dipole_field(&d, pt, 0.0)? - dipole_field_linear_region(&d, pt, 0.0)?).norm() / amp;
    out.push(
        Draft::new(
            "axial-pattern-comparison",
            "static z-directed pattern vs linear-region form on the axis",
            "p/(4 pi eps0 r^3)",
            gap,
            Some(0.0),
        )
        .ambiguous(forms <= 1e-12),
    );

    let (e0, k) = (1.3e16, omega / SI.c);
    let (mut upper, mut lower_e, mut lower_b, mut lower_flipped) = (0.0f64, 0.0f64, 0.0f64, 0.0f64);
    for (h, pol) in [
        (Handedness::Upper, Polarization::Right),
        (Handedness::Lower, Polarization::Left),
    ] {
        let g = GuidedModeParams::new(e0, 1e-17, omega, 1e-7, pol)?;
        for u in quasi_points(16) {
            let (rho, phi, z, t) = (1e-17 * u[0], 2.0 * PI * u[1], 1e-7 * u[2], 1e-15 * u[0]);
            let onset = guided_onset_fields(e0, omega, k, (rho, phi, z), t, h);
            let guide = field_interior(&g, rho, phi, z, t)?;
            let de = (onset.e - guide.e).max_abs() / e0;
            let db = (onset.b - guide.b).max_abs() * SI.c / e0;
            if h == Handedness::Upper {
                upper = upper.max(de).max(db);
            } else {
                lower_e = lower_e.max(de);
                lower_b = lower_b.max(db);
                lower_flipped = lower_flipped.max(((-onset.b) - guide.b).max_abs() * SI.c / e0);
            }
        }
    }
    out.push(
        Draft::new(
            "onset-matches-guide-interior",
            "guided onset fields vs guide interior, upper sign",
            "E0",
            upper,
            Some(0.0),
        )
        .check(upper, 1e-12 * scale),
    );
    out.push(
        Draft::new(
            "onset-lower-magnetic-sign",
            "guided onset cB for the lower sign",
            "E0",
            lower_b,
            Some(0.0),
        )
        .judge(
            lower_b,
            1e-12,
            Verdict::TypoSuspected,
            lower_e <= 1e-12 && lower_flipped <= 1e-12 && (lower_b - 2.0).abs() < 1e-9,
        ),
    );

    let mut parity = 0.0f64;
    for b in [1e-18, 1e-17, 1e-16] {
        for h in [Handedness::Upper, Handedness::Lower] {
            for t in [0.0, 0.3, 1.7] {
                let near = parity_check(
                    |rho, phi| cylindrical_to_cartesian(near_axis_field(1.0, 1.0, 0.0, (rho, phi, 0.0), t, h), phi),
                    b,
                );
                parity = parity.max(if near.parity == Parity::Even {
                    near.even_residual
                } else {
                    1.0
                });
            }
        }
        let radial = parity_check(|rho, phi| radial_static_field(SI.e_s, rho, phi, 1e-13), b);
        parity = parity.max(if radial.parity == Parity::Odd {
            radial.odd_residual
        } else {
            1.0
        });
    }
    out.push(
        Draft::new(
            "parity-classification",
            "near-axis field even, static radial field odd",
            "",
            parity,
            Some(0.0),
        )
        .check(parity, 1e-10),
    );

    let (e0, e_n, phase, margin) = (0.1, 1.0, 0.3, 10.0);
    let ind = induction_condition(e0, e_n, 0.5, phase, margin)?;
    let lhs = ind.max_theta0.sin() * margin * e_n;
    let rhs = (e0 * f64::cos(phase)).abs();
    out.push(
        Draft::new(
            "induction-threshold",
            "largest polar angle satisfying the induction condition",
            "",
            lhs,
            Some(rhs),
        )
        .check(rel(lhs, rhs), 1e-10),
    );

    let q = radiation_q(1e-3)?;
    out.push(Draft::new("radiation-q", "dipole Q at ka = 1e-3", "", q, Some(1e9)).check(rel(q, 1e9), 1e-9));

    let s = two_shell_cancellation(26, 50e-15, 50e-12, 1e-16)?;
    let shell = s.amplitude_residual.max(rel(s.inner_ratio, 1e9));
    out.push(
        Draft::new(
            "two-shell-amplitudes",
            "two-shell screening, amplitudes at both radii",
            "",
            s.inner_ratio,
            Some(1e9),
        )
        .check(shell, 1e-9),
    );
    out.push(
        Draft::new(
            "two-shell-angular-pattern",
            "two-shell screening, full vector sum at the outer shell",
            "",
            s.pattern_residual,
            Some(0.0),
        )
        .ambiguous(s.amplitude_residual < 1e-12),
    );
    Ok(out)
}

fn cavity(scale: f64) -> Result<Vec<AuditFinding>> {
    let mut out = Vec::new();
    let eig = lowest_eigenradius()?;
    out.push(
        Draft::new(
            "cavity-eigenradius",
            "lowest cavity root, a/lambda",
            "",
            eig.a_over_lambda,
            Some(0.437),
        )
        .check(rel(eig.a_over_lambda, 0.437), 0.002),
    );
    let a_nm = eig.a_over_lambda * 500.0;
    out.push(
        Draft::new(
            "cavity-minimum-radius",
            "cavity radius at 500 nm",
            "nm",
            a_nm,
            Some(218.0),
        )
        .check(if a_nm >= 218.0 { 0.0 } else { rel(a_nm, 218.0) }, 0.0),
    );

    let ids = cubic_harmonics(2.0, 512)?;
    let corrected = ids[0].max_residual.max(ids[1].max_residual);
    out.push(
        Draft::new(
            "cubic-identities",
            "cos^3 and sin^3 harmonic identities",
            "",
            corrected,
            Some(0.0),
        )
        .check(corrected, 1e-12 * scale),
    );
    out.push(
        Draft::new(
            "cubic-identity-printed",
            "cos^3 identity as printed",
            "",
            ids[2].max_residual,
            Some(0.0),
        )
        .judge(ids[2].max_residual, 1e-12, Verdict::TypoSuspected, corrected <= 1e-12),
    );

    let sigma = 1e-6;
    let growth = sigma * sph_j(sigma)?;
    let regular_limit = (2.0 * sph_j_regular(sigma) / sigma - 2.0 / 3.0).abs();
    out.push(
        Draft::new(
            "cavity-radial-regularity",
            "sigma j(sigma) at sigma = 1e-6 for the printed j",
            "",
            growth,
            Some(0.0),
        )
        .judge(growth, 1e-6, Verdict::TypoSuspected, regular_limit < 1e-9),
    );
    Ok(out)
}

fn forces(scale: f64) -> Result<Vec<AuditFinding>> {
    let mut out = Vec::new();
    let (e0, b) = (1.84e16, 10e-18);

    let mut forms = 0.0f64;
    for u in quasi_points(1000) {
        let (rho, phi, chi) = (b * (1.0 + 19.0 * u[0]), 2.0 * PI * u[1], 2.0 * PI * u[2]);
        let amp = e0 * b * b / (rho * rho);
        for h in [Handedness::Upper, Handedness::Lower] {
            let a = external_real_fields(e0, b, rho, phi, chi, h)?;
            let x = external_expanded_fields(e0, b, rho, phi, chi, h)?;
            forms = forms.max(a.max_difference(&x) / amp);
        }
    }
    out.push(
        Draft::new(
            "strip-field-forms",
            "compound-angle vs single-angle exterior fields, 1000 points",
            "local amplitude",
            forms,
            Some(0.0),
        )
        .check(forms, 1e-12 * scale),
    );

    let base = PhotonPairConfig::new(b, 100e-18, e0, 4.0, 210e-9, Spin::Parallel, 0.0)?;
    let mut sup = 0.0f64;
    for (i, u) in quasi_points(1000).enumerate() {
        let spin = if i % 2 == 0 { Spin::Parallel } else { Spin::Antiparallel };
        let h = if (i / 2) % 2 == 0 {
            Handedness::Upper
        } else {
            Handedness::Lower
        };
        let cfg = PhotonPairConfig {
            spin,
            chi: 2.0 * PI * u[1],
            ..base
        }
        .with_branch(h);
        let y = cfg.d * (PI * (u[0] - 0.5)).tan();
        let amp = cfg.e0 * cfg.b * cfg.b / (cfg.d * cfg.d + y * y);
        let diff = summed_strip_fields(&cfg, y).max_difference(&brute_force_strip_fields(&cfg, y)?);
        sup = sup.max(diff / amp);
    }
    out.push(
        Draft::new(
            "strip-superposition",
            "summed strip fields vs two translated photons, 1000 points",
            "local amplitude",
            sup,
            Some(0.0),
        )
        .check(sup, 1e-12 * scale),
    );

    let y = 0.3 * base.d;
    let par = base.with_chi(0.4);
    let (p, s) = (printed_strip_fields(&par, y), summed_strip_fields(&par, y));
    let ratio = p.cb.norm() / s.cb.norm();
    out.push(
        Draft::new(
            "strip-parallel-magnetic-prefactor",
            "parallel-spin strip cB, printed over summed",
            "",
            ratio,
            Some(1.0),
        )
        .judge(
            rel(ratio, 1.0),
            1e-12,
            Verdict::TypoSuspected,
            (ratio - 0.5).abs() < 1e-12 && p.e.max_abs() > 0.0 && (p.e - s.e).max_abs() <= 1e-12 * s.e.max_abs(),
        ),
    );

    let up = PhotonPairConfig {
        spin: Spin::Antiparallel,
        ..par
    };
    let low = up.with_branch(Handedness::Lower);
    let (pl, sl) = (printed_strip_fields(&low, y), summed_strip_fields(&low, y));
    let ratio = pl.e.x() / sl.e.x();
    let upper_ok = printed_strip_fields(&up, y).max_difference(&summed_strip_fields(&up, y)) <= 1e-12 * sl.e.max_abs();
    out.push(
        Draft::new(
            "strip-antiparallel-lower-sign",
            "antiparallel strip E on the lower branch, printed over summed",
            "",
            ratio,
            Some(1.0),
        )
        .judge(
            rel(ratio, 1.0),
            1e-12,
            Verdict::TypoSuspected,
            (ratio + 1.0).abs() < 1e-12 && upper_ok && (pl.cb - sl.cb).max_abs() <= 1e-12 * sl.cb.max_abs(),
        ),
    );

    let tol = 1e-6 * scale;
    let mut force_res = 0.0f64;
    let mut d_slope = 0.0f64;
    for spin in [Spin::Antiparallel, Spin::Parallel] {
        let (cfg, ds, alphas) = default_force_sweep(spin)?;
        let t = force_table(&cfg, &ds, &alphas, request(tol))?;
        force_res = force_res.max(t.max_residual);
        if spin == Spin::Antiparallel {
            d_slope = t.d_slope.unwrap_or(f64::NAN);
        }
    }
    out.push(
        Draft::new(
            "force-equivalence",
            "strip force, closed form vs quadrature over 5x5 (d, alpha), both spins",
            "",
            force_res,
            Some(0.0),
        )
        .check(force_res, tol),
    );

    let anti = PhotonPairConfig {
        spin: Spin::Antiparallel,
        ..base
    };
    let bs = [2.5e-18, 5e-18, 10e-18, 20e-18, 40e-18];
    let mut fb = Vec::with_capacity(bs.len());
    for &bb in &bs {
        let cfg = PhotonPairConfig { b: bb, ..anti };
        fb.push(strip_force_quadrature(&cfg, SpeedModel::Leading, request(tol))?.value);
    }
    let b_slope = crate::forces::loglog_slope(&bs, &fb)?;
    let slopes = (d_slope + 3.0).abs().max((b_slope - 4.0).abs());
    out.push(
        Draft::new(
            "force-scaling",
            "force exponents in b and d from log-log fits",
            "",
            b_slope,
            Some(4.0),
        )
        .check(slopes, 1e-4 * scale),
    );

    let f0 = strip_force_quadrature(&anti.with_alpha(2.0)?, SpeedModel::Leading, 1e-13)?.value;
    let mut spread = 0.0f64;
    for chi in [0.7, 1.9, 3.0] {
        let f = strip_force_quadrature(&anti.with_alpha(2.0)?.with_chi(chi), SpeedModel::Leading, 1e-13)?.value;
        spread = spread.max(rel(f, f0));
    }
    out.push(
        Draft::new(
            "antiparallel-force-constant",
            "antiparallel force across phase",
            "",
            f0,
            None,
        )
        .check(spread, 1e-10 * scale),
    );

    let amp = strip_force_closed(&base).abs();
    let mean = Integrator::new(1e-12)
        .integrate(|chi| strip_force_closed(&base.with_chi(chi)) / amp, 0.0, PI)?
        .value
        / PI;
    out.push(
        Draft::new(
            "parallel-force-average",
            "parallel force averaged over a period, over its amplitude",
            "",
            mean,
            Some(0.0),
        )
        .check(mean.abs(), 1e-10 * scale),
    );

    let odd = odd_term_integral(&anti.with_chi(0.7), request(1e-10 * scale))?;
    out.push(
        Draft::new(
            "odd-pressure-term",
            "odd-in-y pressure term integrated over the strip",
            "",
            odd,
            Some(0.0),
        )
        .check(odd, 1e-10 * scale),
    );

    let mut integrals = 0.0f64;
    for d in [0.5, 1.0, 2.0, 10.0] {
        for c in useful_integrals_check(d, 1e-13)? {
            integrals = integrals.max(c.relative_error);
        }
    }
    out.push(
        Draft::new(
            "strip-integrals",
            "y^2/rho^8 and 1/rho^4 strip integrals, d in {0.5, 1, 2, 10}",
            "",
            integrals,
            Some(0.0),
        )
        .check(integrals, 1e-10 * scale),
    );

    let yp = 0.5 * base.d;
    let computed = strip_pressure(&base, yp, SpeedModel::Leading);
    let sign = computed / printed_strip_pressure(&base, yp).abs();
    let par_force = strip_force(&base, request(tol))?;
    out.push(
        Draft::new(
            "parallel-pressure-sign",
            "parallel-spin strip pressure at chi = 0, over printed magnitude",
            "",
            sign,
            Some(1.0),
        )
        .judge(
            rel(sign, 1.0),
            1e-6,
            Verdict::Mismatch,
            (sign + 1.0).abs() < 1e-6 && par_force.residual <= tol,
        ),
    );

    let anti_force = strip_force(&anti, request(tol))?;
    let pa = strip_pressure(&anti, yp, SpeedModel::Leading);
    out.push(
        Draft::new(
            "antiparallel-pressure-permittivity",
            "antiparallel strip pressure with and without eps0",
            "Pa",
            pa,
            Some(pa / SI.eps0),
        )
        .ambiguous(anti_force.residual <= tol),
    );
    let alpha = anti.alpha;
    out.push(
        Draft::new(
            "field-ratio-notation",
            "electric-to-magnetic ratio, 10^-alpha vs 1/(alpha c) at alpha = 4",
            "",
            10f64.powf(-alpha),
            Some(1.0 / (alpha * SI.c)),
        )
        .ambiguous(anti_force.residual <= tol),
    );
    Ok(out)
}

/// Runs every check. `tol_scale` multiplies the oracle tolerances; tolerances
/// against printed values are fixed by the printed precision.
pub fn verify_all(tol_scale: f64) -> Result<AuditReport> {
    if !(tol_scale > 0.0 && tol_scale.is_finite()) {
        return Err(Error::domain(
            "verify_all",
            format!("tol_scale must be > 0, got {tol_scale}"),
        ));
    }
    let groups: Vec<Box<dyn FnOnce() -> Result<Vec<AuditFinding>> + Send>> = vec![
        Box::new(move || nuclear(tol_scale)),
        Box::new(move || manley_rowe(tol_scale)),
        Box::new(move || waveguide(tol_scale)),
        Box::new(relativity),
        Box::new(move || dipole(tol_scale)),
        Box::new(move || cavity(tol_scale)),
        Box::new(move || forces(tol_scale)),
    ];
    let results: Vec<Result<Vec<AuditFinding>>> = std::thread::scope(|s| {
        let handles: Vec<_> = groups.into_iter().map(|g| s.spawn(g)).collect();
        handles.into_iter().map(|h| h.join().expect("check panicked")).collect()
    });
    let mut findings = Vec::new();
    for r in results {
        findings.extend(r?);
    }

    let missing = KNOWN_DISCREPANCIES
        .iter()
        .filter(|k| !findings.iter().any(|f| f.id == k.id && f.verdict == k.verdict))
        .map(|k| k.id)
        .collect::<Vec<_>>();
    let unexpected = findings
        .iter()
        .filter(|f| f.verdict != Verdict::Match && expected_verdict(f.id) == Verdict::Match)
        .map(|f| f.id)
        .collect::<Vec<_>>();
    let passed = missing.is_empty() && unexpected.is_empty() && findings.iter().all(|f| f.passed);
    Ok(AuditReport {
        findings,
        missing,
        unexpected,
        passed,
    })
}
