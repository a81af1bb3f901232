//! Propagation durations, kept as exact rational multiples of π where possible.
//!
//! Every gate schedule in the library uses durations of the form p·π/q with
//! q ∈ {1, 2, 4}; keeping the rational form lets sin/cos be evaluated by
//! quadrant lookup so that stage propagators carry exact 0, ±1 and ±1/√2
//! entries. Arbitrary (state-preparation) times use the raw form.

use std::f64::consts::{FRAC_1_SQRT_2, PI};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Duration {
    Pi { pi_num: i64, pi_den: i64 },
    Raw { raw: f64 },
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl Duration {
    /// Rational multiple of π, reduced to lowest terms.
    pub fn pi(num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(Error::ZeroDenominator);
        }
        let (mut num, mut den) = if den < 0 { (-num, -den) } else { (num, den) };
        if num < 0 {
            return Err(Error::InvalidDuration);
        }
        let g = gcd(num, den).max(1);
        num /= g;
        den /= g;
        Ok(Duration::Pi { pi_num: num, pi_den: den })
    }

    pub fn raw(value: f64) -> Result<Self> {
        if !value.is_finite() || value < 0.0 {
            return Err(Error::InvalidDuration);
        }
        Ok(Duration::Raw { raw: value })
    }

    pub fn zero() -> Self {
        Duration::Pi { pi_num: 0, pi_den: 1 }
    }

    pub fn value(&self) -> f64 {
        match *self {
            Duration::Pi { pi_num, pi_den } => pi_num as f64 * PI / pi_den as f64,
            Duration::Raw { raw } => raw,
        }
    }

    pub fn is_zero(&self) -> bool {
        match *self {
            Duration::Pi { pi_num, .. } => pi_num == 0,
            Duration::Raw { raw } => raw == 0.0,
        }
    }

    /// Duration scaled by k/m, exact in the rational representation.
    pub fn fraction(&self, k: u32, m: u32) -> Self {
        debug_assert!(m > 0 && k <= m);
        match *self {
            Duration::Pi { pi_num, pi_den } => {
                Duration::pi(pi_num * k as i64, pi_den * m as i64)
                    .expect("scaling a valid rational duration cannot fail")
            }
            Duration::Raw { raw } => Duration::Raw { raw: raw * k as f64 / m as f64 },
        }
    }

    /// The doubled duration, used by the spectrum-{0, ±2} closed forms.
    pub fn doubled(&self) -> Self {
        match *self {
            Duration::Pi { pi_num, pi_den } => Duration::pi(2 * pi_num, pi_den)
                .expect("doubling a valid rational duration cannot fail"),
            Duration::Raw { raw } => Duration::Raw { raw: 2.0 * raw },
        }
    }

    /// (sin, cos), exact by quadrant reduction when the reduced denominator
    /// divides 4, floating-point trig otherwise.
    pub fn sin_cos(&self) -> (f64, f64) {
        match *self {
            Duration::Pi { pi_num, pi_den } if 4 % pi_den == 0 => {
                // index in units of π/4 over one full turn
                let step = 4 / pi_den;
                let k = (pi_num * step).rem_euclid(8);
                const S: f64 = FRAC_1_SQRT_2;
                const TABLE: [(f64, f64); 8] = [
                    (0.0, 1.0),
                    (S, S),
                    (1.0, 0.0),
                    (S, -S),
                    (0.0, -1.0),
                    (-S, -S),
                    (-1.0, 0.0),
                    (-S, S),
                ];
                TABLE[k as usize]
            }
            _ => {
                let v = self.value();
                (v.sin(), v.cos())
            }
        }
    }
}
