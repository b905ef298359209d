// Copyright 2026 The wipe-sim Authors
// SPDX-License-Identifier: Apache-2.0

//! Closed-form solution of the qubit–qubit model.
//!
//! With `H = c I_z ⊗ I_z`, a maximally mixed environment and replacement
//! probability `p` per interval `τ`, the off-diagonal blocks `f`, `g` of the
//! joint state obey a linear two-term recurrence. Its continuum limit is a
//! damped oscillator with rates
//!
//! ```text
//! r± = -[ln x ± sqrt((ln x)² - c²)] / 2,   ln x = ln(1 - p) / τ
//! ```
//!
//! and the principal coherence is
//! `η(t) = b (r₋ e^{-r₊ t} - r₊ e^{-r₋ t}) / (r₋ - r₊)`.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// `|(ln x)² - c²| ≤ DEGENERACY_TOL · c²` selects the confluent branch.
pub const DEGENERACY_TOL: f64 = 1e-12;

const I: Complex64 = Complex64 { re: 0.0, im: 1.0 };

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Branch {
    /// `(ln x)² < c²`: complex-conjugate rates, oscillating coherence.
    Oscillatory,
    /// `ln x = -c`: repeated rate `c/2`.
    Degenerate,
    /// `(ln x)² > c²`: two real rates.
    Overdamped,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DecoherenceFactors {
    pub r_plus: Complex64,
    pub r_minus: Complex64,
    pub branch: Branch,
    pub ln_x: f64,
    pub c: f64,
}

impl DecoherenceFactors {
    /// `p = 1`: the environment is replaced every instant and `η ≡ b`.
    /// Represented with `r₊ = 0`, `r₋ = +∞`.
    pub fn is_frozen(&self) -> bool {
        self.ln_x == f64::NEG_INFINITY
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoherenceCoefficients {
    pub u_f: Complex64,
    pub v_f: Complex64,
    pub u_g: Complex64,
    pub v_g: Complex64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RecurrencePair {
    pub m: usize,
    pub f: Complex64,
    pub g: Complex64,
}

impl RecurrencePair {
    /// `f + g`, the principal coherence after `m` steps.
    pub fn eta(&self) -> Complex64 {
        self.f + self.g
    }
}

fn check_probability(p: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::invalid(format!(
            "dissipation probability {p} outside [0, 1]"
        )));
    }
    Ok(())
}

/// `ln x = ln(1 - p) / τ`; `-∞` at `p = 1`.
pub fn log_rate(p: f64, tau: f64) -> Result<f64> {
    check_probability(p)?;
    if !(tau > 0.0) {
        return Err(Error::invalid(format!(
            "interval tau must be > 0, got {tau}"
        )));
    }
    if p == 1.0 {
        return Ok(f64::NEG_INFINITY);
    }
    Ok((-p).ln_1p() / tau)
}

/// Dissipation probability at which `-ln x = c`.
pub fn threshold(c: f64, tau: f64) -> f64 {
    -(-c * tau).exp_m1()
}

pub fn decoherence_factors(ln_x: f64, c: f64) -> DecoherenceFactors {
    let make = |r_plus, r_minus, branch| DecoherenceFactors {
        r_plus,
        r_minus,
        branch,
        ln_x,
        c,
    };
    if ln_x == f64::NEG_INFINITY {
        return make(
            Complex64::new(0.0, 0.0),
            Complex64::new(f64::INFINITY, 0.0),
            Branch::Overdamped,
        );
    }

    let decay = -ln_x;
    let disc = ln_x * ln_x - c * c;
    if disc.abs() <= DEGENERACY_TOL * c * c {
        let r = Complex64::new(decay / 2.0, 0.0);
        return make(r, r, Branch::Degenerate);
    }
    if disc < 0.0 {
        let s = (-disc).sqrt();
        make(
            Complex64::new(decay / 2.0, -s / 2.0),
            Complex64::new(decay / 2.0, s / 2.0),
            Branch::Oscillatory,
        )
    } else {
        // r₊ from Vieta (r₊ r₋ = c²/4) avoids cancellation when |ln x| ≫ c.
        let r_minus = (decay + disc.sqrt()) / 2.0;
        let r_plus = c * c / (4.0 * r_minus);
        make(
            Complex64::new(r_plus, 0.0),
            Complex64::new(r_minus, 0.0),
            Branch::Overdamped,
        )
    }
}

/// Coefficients of `f(t) = u_f e^{-r₊t} + v_f e^{-r₋t}` and likewise `g`.
pub fn coefficients(b: Complex64, r: &DecoherenceFactors) -> Result<CoherenceCoefficients> {
    if r.branch == Branch::Degenerate {
        return Err(Error::DegenerateBranch);
    }
    if r.is_frozen() {
        let half = b / 2.0;
        let zero = Complex64::new(0.0, 0.0);
        return Ok(CoherenceCoefficients {
            u_f: half,
            v_f: zero,
            u_g: half,
            v_g: zero,
        });
    }
    let ibc = I * b * r.c;
    let denom = 4.0 * (r.r_plus - r.r_minus);
    Ok(CoherenceCoefficients {
        u_f: (ibc - 2.0 * b * r.r_minus) / denom,
        v_f: (-ibc + 2.0 * b * r.r_plus) / denom,
        u_g: (-ibc - 2.0 * b * r.r_minus) / denom,
        v_g: (ibc + 2.0 * b * r.r_plus) / denom,
    })
}

/// Principal-qubit coherence `⟨0|ρ₁(t)|1⟩` in the continuum limit.
pub fn eta(t: f64, b: Complex64, r: &DecoherenceFactors) -> Complex64 {
    if r.is_frozen() {
        return b;
    }
    match r.branch {
        Branch::Degenerate => {
            let rate = r.r_plus.re;
            b * (1.0 + rate * t) * (-rate * t).exp()
        }
        Branch::Oscillatory | Branch::Overdamped => {
            let (rp, rm) = (r.r_plus, r.r_minus);
            b * (-rm * (-rp * t).exp() + rp * (-rm * t).exp()) / (rp - rm)
        }
    }
}

pub fn f_g_closed(
    t: f64,
    r: &DecoherenceFactors,
    coeffs: &CoherenceCoefficients,
) -> Result<(Complex64, Complex64)> {
    if r.branch == Branch::Degenerate {
        return Err(Error::DegenerateBranch);
    }
    if r.is_frozen() {
        return Ok((coeffs.u_f, coeffs.u_g));
    }
    let ep = (-r.r_plus * t).exp();
    let em = (-r.r_minus * t).exp();
    Ok((
        coeffs.u_f * ep + coeffs.v_f * em,
        coeffs.u_g * ep + coeffs.v_g * em,
    ))
}

/// Exact finite-step solution: iterates
///
/// ```text
/// f' = e^{-icΔt/2} [f + g + w (f - g)] / 2
/// g' = e^{+icΔt/2} [f + g - w (f - g)] / 2,   w = x^Δt = exp(Δt ln x)
/// ```
///
/// from `f₀ = g₀ = b/2`, returning `m_max + 1` pairs.
pub fn recurrence_oracle(
    m_max: usize,
    b: Complex64,
    c: f64,
    ln_x: f64,
    dt: f64,
) -> Vec<RecurrencePair> {
    let w = (ln_x * dt).exp();
    let down = Complex64::from_polar(0.5, -c * dt / 2.0);
    let up = Complex64::from_polar(0.5, c * dt / 2.0);
    let mut out = Vec::with_capacity(m_max + 1);
    let (mut f, mut g) = (b / 2.0, b / 2.0);
    out.push(RecurrencePair { m: 0, f, g });
    for m in 1..=m_max {
        let sum = f + g;
        let diff = (f - g) * w;
        f = down * (sum + diff);
        g = up * (sum - diff);
        out.push(RecurrencePair { m, f, g });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const C: f64 = 1000.0;
    const TAU: f64 = 1e-3;

    fn cx(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
        (a - b).norm() <= tol
    }

    #[test]
    fn log_rate_examples() {
        assert_eq!(log_rate(0.0, TAU).unwrap(), 0.0);
        assert_eq!(log_rate(1.0, TAU).unwrap(), f64::NEG_INFINITY);
        let p = threshold(C, TAU);
        assert!((log_rate(p, TAU).unwrap() + C).abs() < 1e-9 * C);
        // mpmath: ln(0.25)/1e-3
        let lr = log_rate(0.75, TAU).unwrap();
        assert!((lr + 1386.294361119890618834).abs() < 1e-10);
        assert!(log_rate(-0.1, TAU).is_err());
        assert!(log_rate(1.1, TAU).is_err());
        assert!(log_rate(0.5, 0.0).is_err());
    }

    #[test]
    fn threshold_examples() {
        assert!((threshold(C, TAU) - 0.632120558828557678).abs() < 1e-15);
        assert!(threshold(1.0, 1e-12) < 1.1e-12);
        for &(c, tau) in &[(1000.0, 1e-3), (1e7, 1e-8), (3.0, 0.2)] {
            let lr = log_rate(threshold(c, tau), tau).unwrap();
            assert!((lr + c).abs() <= 1e-9 * c);
        }
    }

    #[test]
    fn factors_at_zero_dissipation_are_imaginary() {
        let r = decoherence_factors(0.0, C);
        assert_eq!(r.branch, Branch::Oscillatory);
        assert!(close(r.r_plus, cx(0.0, -C / 2.0), 1e-12));
        assert!(close(r.r_minus, cx(0.0, C / 2.0), 1e-12));
    }

    #[test]
    fn factors_at_threshold_are_degenerate() {
        let r = decoherence_factors(-C, C);
        assert_eq!(r.branch, Branch::Degenerate);
        assert_eq!(r.r_plus, cx(C / 2.0, 0.0));
        assert_eq!(r.r_minus, cx(C / 2.0, 0.0));
    }

    #[test]
    fn overdamped_factors_match_quadratic_formula() {
        let r = decoherence_factors(-2.0, 1.0);
        assert_eq!(r.branch, Branch::Overdamped);
        let s3 = 3.0_f64.sqrt();
        assert!((r.r_plus.re - (2.0 - s3) / 2.0).abs() < 1e-15);
        assert!((r.r_minus.re - (2.0 + s3) / 2.0).abs() < 1e-15);
        assert!((r.r_plus.re - 0.1339746).abs() < 1e-7);
        assert!((r.r_minus.re - 1.8660254).abs() < 1e-7);
    }

    #[test]
    fn frozen_limit() {
        let r = decoherence_factors(f64::NEG_INFINITY, C);
        assert!(r.is_frozen());
        let b = cx(0.3, -0.2);
        for t in [0.0, 1e-3, 1.0, 100.0] {
            assert_eq!(eta(t, b, &r), b);
        }
        let k = coefficients(b, &r).unwrap();
        assert_eq!(f_g_closed(5.0, &r, &k).unwrap(), (b / 2.0, b / 2.0));
    }

    #[test]
    fn p_zero_coefficients() {
        let b = cx(0.5, 0.0);
        let r = decoherence_factors(0.0, C);
        let k = coefficients(b, &r).unwrap();
        assert!(close(k.u_f, cx(0.0, 0.0), 1e-15));
        assert!(close(k.v_f, b / 2.0, 1e-15));
        assert!(close(k.u_g, b / 2.0, 1e-15));
        assert!(close(k.v_g, cx(0.0, 0.0), 1e-15));
        for t in [0.0, 1e-4, 3.3e-3, 0.02] {
            let (f, g) = f_g_closed(t, &r, &k).unwrap();
            assert!(close(
                f,
                b / 2.0 * Complex64::from_polar(1.0, -C * t / 2.0),
                1e-14
            ));
            assert!(close(
                g,
                b / 2.0 * Complex64::from_polar(1.0, C * t / 2.0),
                1e-14
            ));
            assert!(close(eta(t, b, &r), b * (C * t / 2.0).cos(), 1e-14));
        }
    }

    #[test]
    fn degenerate_branch_is_rejected_by_coefficient_forms() {
        let r = decoherence_factors(-C, C);
        assert_eq!(coefficients(cx(0.5, 0.0), &r), Err(Error::DegenerateBranch));
        let k = CoherenceCoefficients {
            u_f: cx(0.0, 0.0),
            v_f: cx(0.0, 0.0),
            u_g: cx(0.0, 0.0),
            v_g: cx(0.0, 0.0),
        };
        assert_eq!(f_g_closed(1.0, &r, &k), Err(Error::DegenerateBranch));
        let b = cx(0.5, 0.0);
        let t = 2e-3;
        let want = b * (1.0 + C / 2.0 * t) * (-C / 2.0 * t).exp();
        assert!(close(eta(t, b, &r), want, 1e-15));
    }

    #[test]
    fn eta_at_high_dissipation_matches_real_formula() {
        let r = decoherence_factors(log_rate(0.95, TAU).unwrap(), C);
        assert_eq!(r.branch, Branch::Overdamped);
        // mpmath, 40 digits
        assert!((r.r_plus.re - 85.916079691674585).abs() < 1e-10);
        assert!((r.r_minus.re - 2909.8161938623164).abs() < 1e-9);
        let b = cx(0.5, 0.0);
        let ratio = eta(0.01, b, &r).norm() / b.norm();
        assert!((ratio - 0.43640270350833020).abs() < 1e-13);
    }

    #[test]
    fn eta_starts_at_b() {
        let b = cx(0.2, 0.35);
        for p in [0.0, 0.25, 0.5, 0.75, 0.95] {
            let r = decoherence_factors(log_rate(p, TAU).unwrap(), C);
            assert!(close(eta(0.0, b, &r), b, 1e-14));
            let k = coefficients(b, &r).unwrap();
            let (f, g) = f_g_closed(0.0, &r, &k).unwrap();
            assert!(close(f, b / 2.0, 1e-14) && close(g, b / 2.0, 1e-14));
        }
    }

    #[test]
    fn recurrence_first_step() {
        let b = cx(0.5, 0.1);
        let dt = 1e-6;
        for p in [0.0, 0.5, 1.0] {
            let pairs = recurrence_oracle(1, b, C, log_rate(p, TAU).unwrap(), dt);
            assert_eq!(pairs[0].f, b / 2.0);
            assert!(close(
                pairs[1].f,
                b * Complex64::from_polar(0.5, -C * dt / 2.0),
                1e-16
            ));
            assert!(close(
                pairs[1].g,
                b * Complex64::from_polar(0.5, C * dt / 2.0),
                1e-16
            ));
        }
    }

    #[test]
    fn recurrence_without_dissipation_is_pure_phase() {
        let b = cx(0.5, 0.0);
        let dt = 1e-6;
        let pairs = recurrence_oracle(5000, b, C, 0.0, dt);
        for pair in pairs.iter().step_by(97) {
            let phase = pair.m as f64 * C * dt / 2.0;
            assert!(close(
                pair.f,
                b / 2.0 * Complex64::from_polar(1.0, -phase),
                1e-13
            ));
        }
    }

    #[test]
    fn recurrence_satisfies_second_order_form() {
        let b = cx(0.4, -0.2);
        let dt = 1e-6;
        for p in [0.0, 0.25, 0.5, 0.75, 0.95, 1.0] {
            let ln_x = log_rate(p, TAU).unwrap();
            let w = (ln_x * dt).exp();
            let k = (1.0 + w) * (C * dt / 2.0).cos();
            let pairs = recurrence_oracle(3000, b, C, ln_x, dt);
            for win in pairs.windows(3) {
                for pick in [|q: &RecurrencePair| q.f, |q: &RecurrencePair| q.g] {
                    let res = pick(&win[2]) - k * pick(&win[1]) + w * pick(&win[0]);
                    assert!(res.norm() <= 1e-13 * b.norm(), "p={p}, m={}", win[0].m);
                }
            }
        }
    }
}
