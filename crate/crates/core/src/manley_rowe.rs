//! Power/frequency bookkeeping for lossless three-wave exchange.
//!
//! Two oscillators at ω₁ and ω₂ exchange energy only through radiation at the
//! difference frequency ω = ω₁ − ω₂, subject to
//!
//! ```text
//! P₁/ω₁ + P₂/ω₂ = 0,    P₁/ω₁ − P/ω = 0
//! ```
//!
//! Emitted power is positive. The relations are checked as written; nothing
//! here decides which of P₁, P₂ is the absorbing channel.

use serde::Serialize;

use crate::{Error, Result};

/// One oscillator: signed power (W, emission positive) at angular frequency ω (rad/s).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OscillatorChannel {
    pub power: f64,
    pub omega: f64,
}

impl OscillatorChannel {
    pub fn new(power: f64, omega: f64) -> Result<Self> {
        if !(omega > 0.0) || !omega.is_finite() {
            return Err(Error::domain(
                "OscillatorChannel",
                format!("omega must be > 0, got {omega}"),
            ));
        }
        if !power.is_finite() {
            return Err(Error::domain("OscillatorChannel", "power must be finite"));
        }
        Ok(OscillatorChannel { power, omega })
    }

    /// P/ω, the action flow rate of the channel.
    pub fn action_rate(&self) -> f64 {
        self.power / self.omega
    }
}

/// Difference frequency ω₁ − ω₂ of a down-conversion pair.
pub fn emitted_frequency(omega1: f64, omega2: f64) -> Result<f64> {
    if !(omega2 > 0.0) {
        return Err(Error::domain(
            "emitted_frequency",
            format!("omega2 must be > 0, got {omega2}"),
        ));
    }
    if !(omega1 > omega2) {
        return Err(Error::domain(
            "emitted_frequency",
            format!("omega1 = {omega1} must exceed omega2 = {omega2}"),
        ));
    }
    Ok(omega1 - omega2)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ManleyRoweCheck {
    /// P₁/ω₁ + P₂/ω₂
    pub pair_residual: f64,
    /// P₁/ω₁ − P/ω
    pub output_residual: f64,
    /// Largest |P/ω| among the three channels; residuals are judged against it.
    pub scale: f64,
    pub passed: bool,
}

pub fn check_manley_rowe(
    ch1: OscillatorChannel,
    ch2: OscillatorChannel,
    out: OscillatorChannel,
    tol: f64,
) -> ManleyRoweCheck {
    let (a1, a2, a) = (ch1.action_rate(), ch2.action_rate(), out.action_rate());
    let pair_residual = a1 + a2;
    let output_residual = a1 - a;
    let scale = a1.abs().max(a2.abs()).max(a.abs());
    let bound = tol * scale;
    let passed = pair_residual.abs() <= bound && output_residual.abs() <= bound;
    ManleyRoweCheck {
        pair_residual,
        output_residual,
        scale,
        passed,
    }
}

/// Channels satisfying both relations exactly for a given action rate P₁/ω₁.
pub fn constructed_solution(action_rate: f64, omega1: f64, omega2: f64) -> Result<[OscillatorChannel; 3]> {
    let omega = emitted_frequency(omega1, omega2)?;
    Ok([
        OscillatorChannel::new(action_rate * omega1, omega1)?,
        OscillatorChannel::new(-action_rate * omega2, omega2)?,
        OscillatorChannel::new(action_rate * omega, omega)?,
    ])
}

/// W/ω, which the exchange holds fixed between interacting systems.
pub fn energy_frequency_ratio(energy: f64, omega: f64) -> Result<f64> {
    if !(omega > 0.0) {
        return Err(Error::domain(
            "energy_frequency_ratio",
            format!("omega must be > 0, got {omega}"),
        ));
    }
    Ok(energy / omega)
}
